//! Exact arithmetic in the ring of integers extended by a primitive m-th
//! root of unity, `Z[x]/(Phi_m(x))`, with big-integer coefficients.
//!
//! The coefficient engine instantiates this with `m = 4p`, so that
//! `omega = e^{i*pi/(2p)} = e^{2*pi*i/m}` is the class of `x`, and identity
//! checks reduce to a zero coefficient vector.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
type Poly = Vec<BigInt>;

fn poly_trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    poly_trim(out)
}

/// Quotient and remainder by a monic divisor; exact over the integers.
fn poly_div_rem_monic(num: &[BigInt], div: &[BigInt]) -> (Poly, Poly) {
    assert!(div.last().is_some_and(One::is_one), "divisor must be monic");
    let mut rem: Poly = num.to_vec();
    let d = div.len() - 1;
    if rem.len() <= d {
        return (vec![BigInt::zero()], poly_trim(rem));
    }
    let mut quo = vec![BigInt::zero(); rem.len() - d];
    for i in (d..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for (k, dk) in div.iter().take(d).enumerate() {
            let sub = dk * &c;
            rem[i - d + k] -= sub;
        }
        quo[i - d] = c;
    }
    rem.truncate(d.max(1));
    (poly_trim(quo), poly_trim(rem))
}

/// The m-th cyclotomic polynomial: divide `x^m - 1` by `Phi_d` for every
/// proper divisor `d` of `m`, building the divisors bottom-up.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m >= 1);
    let mut table: Vec<(u64, Poly)> = Vec::new();
    for d in 1..=m {
        if !m.is_multiple_of(d) {
            continue;
        }
        // x^d - 1
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        let mut phi = num;
        for (e, phi_e) in &table {
            if d % e == 0 {
                let (q, r) = poly_div_rem_monic(&phi, phi_e);
                debug_assert!(r.iter().all(Zero::is_zero));
                phi = q;
            }
        }
        table.push((d, phi));
    }
    table.pop().expect("m itself is a divisor").1
}

/// An element of `Z[x]/(Phi_m)`, as a coefficient vector of length
/// `deg Phi_m`. The basis `1, x, ..., x^{deg-1}` is a free Z-module basis, so
/// the zero test is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    coeffs: Vec<BigInt>,
}

impl CyclotomicElement {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Largest coefficient magnitude, as a rough size diagnostic.
    pub fn max_coeff_magnitude(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl std::fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The ring `Z[x]/(Phi_m)` with its reduction modulus precomputed.
#[derive(Debug, Clone)]
pub struct CyclotomicRing {
    m: u64,
    phi: Poly,
    degree: usize,
}

impl CyclotomicRing {
    pub fn new(m: u64) -> Self {
        let phi = cyclotomic_polynomial(m);
        let degree = phi.len() - 1;
        CyclotomicRing { m, phi, degree }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus_polynomial(&self) -> &[BigInt] {
        &self.phi
    }

    fn reduce(&self, poly: &[BigInt]) -> CyclotomicElement {
        let (_, mut rem) = poly_div_rem_monic(poly, &self.phi);
        rem.resize(self.degree, BigInt::zero());
        CyclotomicElement { coeffs: rem }
    }

    pub fn zero(&self) -> CyclotomicElement {
        CyclotomicElement {
            coeffs: vec![BigInt::zero(); self.degree],
        }
    }

    pub fn one(&self) -> CyclotomicElement {
        self.from_int(BigInt::one())
    }

    pub fn from_int(&self, k: BigInt) -> CyclotomicElement {
        let mut coeffs = vec![BigInt::zero(); self.degree];
        coeffs[0] = k;
        CyclotomicElement { coeffs }
    }

    /// `omega^e` for any integer exponent, `omega` the class of `x`.
    pub fn omega_pow(&self, e: i64) -> CyclotomicElement {
        let e = e.rem_euclid(self.m as i64) as usize;
        let mut poly = vec![BigInt::zero(); e + 1];
        poly[e] = BigInt::one();
        self.reduce(&poly)
    }

    pub fn add(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        CyclotomicElement { coeffs }
    }

    pub fn sub(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        CyclotomicElement { coeffs }
    }

    pub fn neg(&self, a: &CyclotomicElement) -> CyclotomicElement {
        CyclotomicElement {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        self.reduce(&poly_mul(&a.coeffs, &b.coeffs))
    }

    /// Complex conjugation: the automorphism `omega -> omega^{-1}`.
    pub fn conj(&self, a: &CyclotomicElement) -> CyclotomicElement {
        let mut poly = vec![BigInt::zero(); self.m as usize];
        for (i, c) in a.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((self.m as usize) - i) % self.m as usize;
                poly[e] += c;
            }
        }
        self.reduce(&poly)
    }

    /// Numeric embedding at `omega = e^{2*pi*i/m}`.
    pub fn embed(&self, a: &CyclotomicElement) -> Complex<f64> {
        let mut acc = Complex::new(0.0, 0.0);
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (i as f64) / (self.m as f64);
            acc += Complex::from_polar(1.0, angle).scale(c.to_f64().unwrap_or(f64::NAN));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        // Phi_36 = x^12 - x^6 + 1 (m = 4p for p = 9)
        assert_eq!(
            cyclotomic_polynomial(36),
            ints(&[1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn product_of_divisor_cyclotomics_is_x_m_minus_one() {
        for m in [12u64, 20, 28, 36] {
            let mut prod = ints(&[1]);
            for d in 1..=m {
                if m % d == 0 {
                    prod = poly_mul(&prod, &cyclotomic_polynomial(d));
                }
            }
            let mut expect = vec![BigInt::zero(); m as usize + 1];
            expect[0] = -BigInt::one();
            expect[m as usize] = BigInt::one();
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn omega_has_exact_order() {
        let ring = CyclotomicRing::new(28);
        let w = ring.omega_pow(1);
        let mut acc = ring.one();
        for k in 1..=28 {
            acc = ring.mul(&acc, &w);
            if k < 28 {
                assert_ne!(acc, ring.one(), "omega^{k} should not be 1");
            }
        }
        assert_eq!(acc, ring.one());
        // -1 = omega^{m/2}
        assert_eq!(ring.omega_pow(14), ring.from_int(BigInt::from(-1)));
    }

    #[test]
    fn conj_inverts_omega() {
        let ring = CyclotomicRing::new(20);
        for e in [1i64, 3, 7, 13] {
            let w = ring.omega_pow(e);
            assert_eq!(ring.conj(&w), ring.omega_pow(-e));
            assert_eq!(ring.mul(&w, &ring.conj(&w)), ring.one());
        }
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let ring = CyclotomicRing::new(52);
        let a = ring.add(&ring.omega_pow(7), &ring.from_int(BigInt::from(3)));
        let b = ring.sub(&ring.omega_pow(-11), &ring.omega_pow(2));
        let prod = ring.mul(&a, &b);
        let lhs = ring.embed(&prod);
        let rhs = ring.embed(&a) * ring.embed(&b);
        assert!((lhs - rhs).norm() < 1e-9);
    }
}
