//! Numeric and exact checks of the supporting identities: the alternating
//! cosine sum, the signed cosine product, the sine product, and the
//! alternating binomial sum over polynomial values.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::tolerances::{DEGENERATE_FACTOR, LEMMA_A1, LEMMA_A2, LEMMA_A3};

/// Outcome of a single identity check. `pass` holds exactly when
/// `abs_error <= tolerance`, with the tolerance declared per identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub n: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityReport {
    fn new(identity: &'static str, n: u64, lhs: f64, rhs: f64, abs_error: f64, tolerance: f64) -> Self {
        IdentityReport {
            identity,
            n,
            lhs,
            rhs,
            abs_error,
            tolerance,
            pass: abs_error <= tolerance,
        }
    }

    /// CSV row `(identity, n, error, pass)`.
    pub fn csv_row(&self) -> String {
        format!("{},{},{:e},{}", self.identity, self.n, self.abs_error, self.pass)
    }
}

/// `sum_{k=0}^{n} (-1)^k cos(k*theta) = 1/2` at `theta = pi/(2n+1)`.
///
/// Kahan-compensated summation keeps the check meaningful at n ~ 1e4.
pub fn lemma_a1(n: u64) -> IdentityReport {
    assert!(n >= 1);
    let theta = std::f64::consts::PI / (2 * n + 1) as f64;
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for k in 0..=n {
        let term = (k as f64 * theta).cos() * if k % 2 == 0 { 1.0 } else { -1.0 };
        let y = term - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    IdentityReport::new("lemma_a1", n, sum, 0.5, (sum - 0.5).abs(), LEMMA_A1)
}

/// `prod_{k=1}^{n} (2cos(k*theta) + 2(-1)^k) = (-1)^{n(n+1)/2}` at
/// `theta = pi/(2n+1)`, evaluated in sign + log-magnitude space; the raw
/// product under/overflows double precision near n ~ 500.
pub fn lemma_a2(n: u64) -> Result<IdentityReport> {
    assert!(n >= 1);
    let theta = std::f64::consts::PI / (2 * n + 1) as f64;
    let mut log_mag = 0.0f64;
    let mut sign = 1i32;
    for k in 1..=n {
        let factor = 2.0 * (k as f64 * theta).cos() + if k % 2 == 0 { 2.0 } else { -2.0 };
        if factor.abs() < DEGENERATE_FACTOR {
            return Err(Error::DegenerateFactor { k, tol: DEGENERATE_FACTOR });
        }
        log_mag += factor.abs().ln();
        if factor < 0.0 {
            sign = -sign;
        }
    }
    let expected_sign = if (n * (n + 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let lhs = sign as f64 * log_mag.exp();
    let rhs = expected_sign as f64;
    let abs_error = if sign == expected_sign {
        log_mag.abs()
    } else {
        (lhs - rhs).abs()
    };
    Ok(IdentityReport::new("lemma_a2", n, lhs, rhs, abs_error, LEMMA_A2))
}

/// `prod_{k=1}^{n} sin((2k-1)pi/(4n+2)) = 2^{-n}`, compared in log space:
/// `sum log sin = -n log 2`, relative to the right-hand side.
pub fn lemma_a3(n: u64) -> IdentityReport {
    assert!(n >= 1);
    let denom = (4 * n + 2) as f64;
    let mut log_sum = 0.0f64;
    for k in 1..=n {
        log_sum += ((2 * k - 1) as f64 * std::f64::consts::PI / denom).sin().ln();
    }
    let rhs = -(n as f64) * std::f64::consts::LN_2;
    let abs_error = (log_sum - rhs).abs();
    let tolerance = LEMMA_A3 * rhs.abs().max(1.0);
    IdentityReport::new("lemma_a3", n, log_sum, rhs, abs_error, tolerance)
}

/// `P(0..=d)` for an integer-coefficient polynomial, by Horner.
fn eval_poly(coeffs: &[BigInt], x: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * BigInt::from(x) + c;
    }
    acc
}

/// `sum_{j=0}^{d} (-1)^j C(d, j) v_j` for `v_j = P(j)`.
pub fn alternating_binomial_sum(values: &[BigInt]) -> BigInt {
    let d = values.len() as i64 - 1;
    let mut sum = BigInt::zero();
    for (j, v) in values.iter().enumerate() {
        let term = binomial(d, j as i64) * v;
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// The d-th forward difference of the value table, by d rounds of pairwise
/// subtraction. Equals `(-1)^d` times the alternating binomial sum, which
/// makes it an independent route to the same zero.
pub fn finite_difference_top(values: &[BigInt]) -> BigInt {
    let mut work = values.to_vec();
    while work.len() > 1 {
        for i in 0..work.len() - 1 {
            work[i] = &work[i + 1] - &work[i];
        }
        work.pop();
    }
    work.pop().unwrap_or_else(BigInt::zero)
}

/// `sum_{j=0}^{d} (-1)^j C(d, j) P(j) = 0` for any integer polynomial with
/// `deg P < d`, exactly. Rejects `deg P >= d`, where the sum is
/// `(-1)^d d! * lead(P)` instead of zero.
pub fn ruiz_identity(coeffs: &[BigInt], d: u64) -> Result<IdentityReport> {
    let degree = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .unwrap_or(0);
    let values: Vec<BigInt> = (0..=d as i64).map(|j| eval_poly(coeffs, j)).collect();
    let sum = alternating_binomial_sum(&values);
    if degree as u64 >= d {
        return Err(Error::RuizDegree { degree, d, sum });
    }
    let fd = finite_difference_top(&values);
    let fd_matches = if d.is_multiple_of(2) { fd == sum } else { fd == -&sum };
    let pass = sum.is_zero() && fd_matches;
    let lhs = sum.to_f64().unwrap_or(f64::NAN);
    Ok(IdentityReport {
        identity: "ruiz",
        n: d,
        lhs,
        rhs: 0.0,
        abs_error: if pass { 0.0 } else { lhs.abs().max(1.0) },
        tolerance: 0.0,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    use crate::sample::trial_rng;

    #[test]
    fn a1_small_cases() {
        // n=1: 1 - cos(pi/3) = 1/2 exactly
        let r = lemma_a1(1);
        assert!(r.pass && r.abs_error < 1e-15, "{r:?}");
        // n=2: 1 - cos(pi/5) + cos(2pi/5) = 1/2
        let r = lemma_a1(2);
        assert!(r.pass && r.abs_error < 1e-12, "{r:?}");
    }

    #[test]
    fn a1_large_n() {
        let r = lemma_a1(10_000);
        assert!(r.pass, "{r:?}");
        assert!(r.abs_error <= 1e-10);
    }

    #[test]
    fn a2_small_cases() {
        // n=1: 2cos(pi/3) - 2 = -1
        let r = lemma_a2(1).unwrap();
        assert!(r.pass && (r.lhs - (-1.0)).abs() < 1e-14, "{r:?}");
        // n=2: product = -1 = (-1)^3
        let r = lemma_a2(2).unwrap();
        assert!(r.pass && (r.lhs - (-1.0)).abs() < 1e-13, "{r:?}");
    }

    #[test]
    fn a2_large_n_and_signs() {
        for n in [3u64, 4, 5, 17, 100, 500] {
            let r = lemma_a2(n).unwrap();
            let expected = if (n * (n + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            assert!(r.pass, "{r:?}");
            assert_eq!(r.rhs, expected);
            assert!(r.abs_error <= 1e-8);
        }
    }

    #[test]
    fn a3_values() {
        // n=1: sin(pi/6) = 1/2
        let r = lemma_a3(1);
        assert!(r.pass && (r.lhs - (0.5f64).ln()).abs() < 1e-15, "{r:?}");
        // n=2: sin(pi/10) sin(3pi/10) = 1/4
        let r = lemma_a3(2);
        assert!(r.pass && (r.lhs.exp() - 0.25).abs() < 1e-12, "{r:?}");
        let r = lemma_a3(1000);
        assert!(r.pass, "{r:?}");
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn ruiz_constant_and_square() {
        // P = 1, d = 1: 1 - 1 = 0
        let r = ruiz_identity(&ints(&[1]), 1).unwrap();
        assert!(r.pass);
        // P(j) = j^2, d = 3: 0 - 3 + 12 - 9 = 0
        let r = ruiz_identity(&ints(&[0, 0, 1]), 3).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn ruiz_rejects_degree_at_least_d() {
        // P(j) = j^2 at d = 2: sum = (-1)^2 * 2! * 1 = 2
        let err = ruiz_identity(&ints(&[0, 0, 1]), 2).unwrap_err();
        match err {
            Error::RuizDegree { degree, d, sum } => {
                assert_eq!((degree, d), (2, 2));
                assert_eq!(sum, BigInt::from(2));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn ruiz_proof_family_instance() {
        // The column-cancellation polynomial at m=3, i=2, R=1:
        // P(j) = C(2m-i-j+R-2, 2m-2i-j+R-1) = C(3-j, 2-j), degree 1 < d = 2.
        let d = 2i64;
        let values: Vec<BigInt> = (0..=d).map(|j| binomial(3 - j, 2 - j)).collect();
        assert_eq!(values, ints(&[3, 2, 1]));
        assert!(alternating_binomial_sum(&values).is_zero());
        assert!(finite_difference_top(&values).is_zero());
    }

    #[test]
    fn ruiz_random_polynomials() {
        let mut rng = trial_rng(99, 0);
        for _ in 0..300 {
            let d = rng.random_range(1..=30u64);
            let deg = rng.random_range(0..d) as usize;
            let mut coeffs: Vec<BigInt> = (0..=deg)
                .map(|_| BigInt::from(rng.random_range(-50i64..=50)))
                .collect();
            if coeffs[deg].is_zero() {
                coeffs[deg] = BigInt::from(1);
            }
            let r = ruiz_identity(&coeffs, d).unwrap();
            assert!(r.pass, "failed for deg={deg} d={d}");
        }
    }

    #[test]
    fn csv_row_shape() {
        let r = lemma_a1(3);
        let row = r.csv_row();
        assert!(row.starts_with("lemma_a1,3,"));
        assert!(row.ends_with(",true"));
    }
}
