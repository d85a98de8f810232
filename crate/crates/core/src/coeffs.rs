//! The coefficient functions `alpha_j^{(n)}`, `beta_j^{(n)}` behind the
//! convergence law, computed along three independent routes:
//!
//! 1. the coupled order recursion, realized as a shift-parameterized table;
//! 2. the general nested-sum formulas, by direct enumeration of the index
//!    compositions;
//! 3. the specialized closed forms for `j = 0, 1, 2, n`.
//!
//! Every route is generic over a [`CoeffRing`], so the same algorithms run in
//! floating complex arithmetic and, for certificates, in the exact cyclotomic
//! integer ring over `omega = e^{i*pi/(2p)}`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::ToPrimitive;

use crate::binomial::binomial;
use crate::cyclotomic::{CyclotomicElement, CyclotomicRing};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tolerances::TAU_COEFF;

/// Parity helper `chi_j = j mod 2`.
pub fn chi(j: u32) -> u32 {
    j % 2
}

/// Exponent pair of `(lambda_{j0}, lambda_{j1})` as powers of
/// `omega = e^{i*pi/(2p)}`; the sign factor in `lambda_{j1}` is folded in as
/// `-1 = omega^{2p}`.
pub(crate) fn lambda_exponents(j: u32, p: u64) -> (i64, i64) {
    let j = j as i64;
    let two_p = 2 * p as i64;
    let sign = if j % 2 == 0 { 1 } else { -1 };
    (sign * j, two_p * (j + 1) - sign * j)
}

/// The scalar domain the coefficient formulas are evaluated over.
pub trait CoeffRing {
    type El: Clone;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn conj(&self, a: &Self::El) -> Self::El;
    fn int(&self, k: i64) -> Self::El;
    fn int_big(&self, k: &BigInt) -> Self::El;
    fn omega_pow(&self, e: i64) -> Self::El;

    /// `lambda_{j,l}`; `j = 0` is the sentinel `lambda_{00} = lambda_{01} = 1`.
    fn lambda(&self, j: u32, l: u32) -> Self::El {
        if j == 0 {
            return self.one();
        }
        let (e0, e1) = lambda_exponents(j, self.p());
        self.omega_pow(if l == 0 { e0 } else { e1 })
    }

    /// `lambda_{j,l}^2`, computed on exponents so it is exact in every ring.
    fn lambda_pow2(&self, j: u32, l: u32) -> Self::El {
        if j == 0 {
            return self.one();
        }
        let (e0, e1) = lambda_exponents(j, self.p());
        self.omega_pow(2 * if l == 0 { e0 } else { e1 })
    }

    /// `lambda_{j0} lambda_{j1} = (-1)^{j+1}`, computed on exponents so the
    /// sign is exact in every ring.
    fn lambda_prod(&self, j: u32) -> Self::El {
        if j == 0 {
            return self.one();
        }
        let (e0, e1) = lambda_exponents(j, self.p());
        self.omega_pow(e0 + e1)
    }

    /// `x + conj(x)`. In floating arithmetic this is exactly real, which is
    /// what keeps the beta track real to the last bit through the recursion.
    fn two_re(&self, x: &Self::El) -> Self::El {
        self.add(x, &self.conj(x))
    }

    fn p(&self) -> u64;
}

/// Floating complex evaluation at a fixed odd `p`.
#[derive(Debug, Clone)]
pub struct NumericRing<T> {
    p: u64,
    _t: std::marker::PhantomData<T>,
}

impl<T: Real> NumericRing<T> {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::InvalidP(p));
        }
        Ok(NumericRing { p, _t: std::marker::PhantomData })
    }
}

impl<T: Real> CoeffRing for NumericRing<T> {
    type El = Complex<T>;

    fn zero(&self) -> Complex<T> {
        Complex::new(T::zero(), T::zero())
    }
    fn one(&self) -> Complex<T> {
        Complex::new(T::one(), T::zero())
    }
    fn add(&self, a: &Complex<T>, b: &Complex<T>) -> Complex<T> {
        a + b
    }
    fn sub(&self, a: &Complex<T>, b: &Complex<T>) -> Complex<T> {
        a - b
    }
    fn mul(&self, a: &Complex<T>, b: &Complex<T>) -> Complex<T> {
        a * b
    }
    fn conj(&self, a: &Complex<T>) -> Complex<T> {
        a.conj()
    }
    fn int(&self, k: i64) -> Complex<T> {
        Complex::new(T::from_i64_exact(k), T::zero())
    }
    fn int_big(&self, k: &BigInt) -> Complex<T> {
        Complex::new(T::from_f64_lossy(k.to_f64().unwrap_or(f64::NAN)), T::zero())
    }
    fn omega_pow(&self, e: i64) -> Complex<T> {
        crate::angle::UnitAngle::new(e, 2 * self.p as i64).value()
    }
    fn two_re(&self, x: &Complex<T>) -> Complex<T> {
        Complex::new(x.re + x.re, T::zero())
    }
    fn p(&self) -> u64 {
        self.p
    }
}

/// Exact evaluation in `Z[omega]`, `omega` a primitive 4p-th root of unity.
#[derive(Debug, Clone)]
pub struct CyclotomicCoeffRing {
    p: u64,
    pub ring: CyclotomicRing,
}

impl CyclotomicCoeffRing {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::InvalidP(p));
        }
        Ok(CyclotomicCoeffRing {
            p,
            ring: CyclotomicRing::new(4 * p),
        })
    }
}

impl CoeffRing for CyclotomicCoeffRing {
    type El = CyclotomicElement;

    fn zero(&self) -> CyclotomicElement {
        self.ring.zero()
    }
    fn one(&self) -> CyclotomicElement {
        self.ring.one()
    }
    fn add(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        self.ring.add(a, b)
    }
    fn sub(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        self.ring.sub(a, b)
    }
    fn mul(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        self.ring.mul(a, b)
    }
    fn conj(&self, a: &CyclotomicElement) -> CyclotomicElement {
        self.ring.conj(a)
    }
    fn int(&self, k: i64) -> CyclotomicElement {
        self.ring.from_int(BigInt::from(k))
    }
    fn int_big(&self, k: &BigInt) -> CyclotomicElement {
        self.ring.from_int(k.clone())
    }
    fn omega_pow(&self, e: i64) -> CyclotomicElement {
        self.ring.omega_pow(e)
    }
    fn p(&self) -> u64 {
        self.p
    }
}

/// The coupled recursion, realized as a table over `(order, j, shift)`.
///
/// Shift `s` offsets every lambda index by `s`; the step from order `m` to
/// `m + 1` at shift `s` reads the order-`m` entries at shift `s + 1` and uses
/// `lambda_{1+s, l}` for the outer factors. The base case is
/// `alpha_0^{(1)} = lambda_{10}^2`, `beta_0^{(1)} = lambda_{10} lambda_{11}`,
/// `alpha_1^{(1)} = beta_1^{(1)} = (lambda_{10} - lambda_{11})^2`.
///
/// The `lambda_{11}^2 = conj(lambda_{10}^2)` identity pairs every alpha
/// contribution with its conjugate, so the beta track is assembled from
/// `two_re` terms and `(-1)^{j+1}` factors; that is what makes it exactly
/// real in floating arithmetic.
///
/// Returns `(alpha, beta)` for `j = 0..=n+2`; the two indices past `n` stay
/// exactly zero and exist so callers can observe the truncation.
pub fn recurse_alpha_beta_padded<R: CoeffRing>(ring: &R, n: u32) -> (Vec<R::El>, Vec<R::El>) {
    assert!(n >= 1);
    let jdim = n as usize + 3;
    let two = ring.int(2);

    // Order 1 across shifts 0..n-1.
    let mut alpha: Vec<Vec<R::El>> = Vec::with_capacity(n as usize);
    let mut beta: Vec<Vec<R::El>> = Vec::with_capacity(n as usize);
    for s in 0..n {
        let l_sq = ring.lambda_pow2(1 + s, 0);
        let l_prod = ring.lambda_prod(1 + s);
        let mut row_a = vec![ring.zero(); jdim];
        let mut row_b = vec![ring.zero(); jdim];
        // (l0 - l1)^2 = l0^2 + conj(l0^2) - 2 l0 l1
        let d2 = ring.sub(&ring.two_re(&l_sq), &ring.mul(&two, &l_prod));
        row_a[0] = l_sq;
        row_b[0] = l_prod;
        row_a[1] = d2.clone();
        row_b[1] = d2;
        alpha.push(row_a);
        beta.push(row_b);
    }

    for m in 1..n {
        let remaining = (n - m) as usize;
        let mut next_alpha = Vec::with_capacity(remaining);
        let mut next_beta = Vec::with_capacity(remaining);
        for s in 0..remaining as u32 {
            let l_sq = ring.lambda_pow2(1 + s, 0);
            let l_prod = ring.lambda_prod(1 + s);
            let prev_a = &alpha[s as usize + 1];
            let prev_b = &beta[s as usize + 1];
            let mut row_a = vec![ring.zero(); jdim];
            let mut row_b = vec![ring.zero(); jdim];
            for j in 0..jdim {
                let aj = &prev_a[j];
                let bj = &prev_b[j];
                let (a_prev, b_prev) = if j >= 1 {
                    (prev_a[j - 1].clone(), prev_b[j - 1].clone())
                } else {
                    (ring.zero(), ring.zero())
                };
                let odd = j % 2 == 1;

                // alpha_j' = l0^2 T a_j + 2 Re(l0^2 (T a_{j-1} - chi_j T a_j))
                //            - 2 l0 l1 T b_{j-1}
                let mut t = a_prev.clone();
                if odd {
                    t = ring.sub(&t, aj);
                }
                let mut a_next = ring.mul(&l_sq, aj);
                a_next = ring.add(&a_next, &ring.two_re(&ring.mul(&l_sq, &t)));
                a_next = ring.sub(&a_next, &ring.mul(&two, &ring.mul(&l_prod, &b_prev)));

                // beta_j' = l0 l1 T b_j + 2 Re(l0^2 T a_{j-1})
                //           - 2 l0 l1 (T b_{j-1} + chi_j T b_j)
                let mut u = b_prev;
                if odd {
                    u = ring.add(&u, bj);
                }
                let mut b_next = ring.mul(&l_prod, bj);
                b_next = ring.add(&b_next, &ring.two_re(&ring.mul(&l_sq, &a_prev)));
                b_next = ring.sub(&b_next, &ring.mul(&two, &ring.mul(&l_prod, &u)));

                row_a[j] = a_next;
                row_b[j] = b_next;
            }
            next_alpha.push(row_a);
            next_beta.push(row_b);
        }
        alpha = next_alpha;
        beta = next_beta;
    }

    (alpha.swap_remove(0), beta.swap_remove(0))
}

fn visit_compositions(ls: &mut [u32], idx: usize, remaining: u32, f: &mut dyn FnMut(&[u32])) {
    if idx == ls.len() {
        f(ls);
        return;
    }
    for v in 0..=remaining {
        ls[idx] = v;
        visit_compositions(ls, idx + 1, remaining - v, f);
    }
}

/// The general nested-sum solution for `(alpha_j^{(n)}, beta_j^{(n)})`,
/// `1 <= j <= n`, by direct enumeration of the index compositions
/// `(l_1, ..., l_j)` with `l_1 + ... + l_j <= n - j`. Independent of the
/// recursion, which makes the two a genuine cross-check.
pub fn general_nested<R: CoeffRing>(ring: &R, n: u32, j: u32) -> Result<(R::El, R::El)> {
    if j < 1 || j > n {
        return Err(Error::CoeffIndexOutOfRange { j, n });
    }
    let mut total_a = ring.zero();
    let mut total_b = ring.zero();
    let mut ls = vec![0u32; j as usize];
    let budget = n - j;
    let mut visit = |ls: &[u32]| {
        let lsum: u32 = ls.iter().sum();
        let lj = ls[j as usize - 1];

        let mut head_a = ring.one();
        let mut head_b = ring.one();
        for k in 0..=lj {
            head_b = ring.mul(&head_b, &ring.lambda_prod(k));
            head_a = ring.mul(&head_a, &ring.lambda_pow2(k, chi(j) * chi(k)));
        }

        let odd_sum: u32 = (1..=j).filter(|mu| mu % 2 == 1).map(|mu| ls[mu as usize - 1]).sum();
        let negative = odd_sum % 2 == 1;

        let mut t0 = ring.one();
        let mut t1 = ring.one();
        for k in (lsum + j)..=n {
            t0 = ring.mul(&t0, &ring.lambda(k, 0));
            t1 = ring.mul(&t1, &ring.lambda(k, 1));
        }
        let td = ring.sub(&t0, &t1);
        let mut term = ring.mul(&td, &td);

        for mu in 1..j {
            let l_hi: u32 = ls[mu as usize..].iter().sum();
            let l_lo = l_hi + ls[mu as usize - 1];
            let mut m0 = ring.one();
            let mut m1 = ring.one();
            for k in (l_hi + j - mu)..=(l_lo + j - mu) {
                let sel = chi(mu) * chi(k);
                m0 = ring.mul(&m0, &ring.lambda(k, sel));
                m1 = ring.mul(&m1, &ring.lambda(k, 1 - sel));
            }
            let md = ring.sub(&m0, &m1);
            term = ring.mul(&term, &ring.mul(&md, &md));
        }

        let term_a = ring.mul(&head_a, &term);
        let term_b = ring.mul(&head_b, &term);
        if negative {
            total_a = ring.sub(&total_a, &term_a);
            total_b = ring.sub(&total_b, &term_b);
        } else {
            total_a = ring.add(&total_a, &term_a);
            total_b = ring.add(&total_b, &term_b);
        }
    };
    visit_compositions(&mut ls, 0, budget, &mut visit);
    Ok((total_a, total_b))
}

/// Exponent of `omega` in the closed form `alpha_0^{(n)} = prod lambda_{k0}^2`.
pub fn alpha0_exponent(n: u32) -> i64 {
    let n = n as i64;
    if n % 2 == 0 {
        n
    } else {
        -(n + 1)
    }
}

/// `beta_0^{(n)} = (-1)^{n(n+3)/2}`.
pub fn beta0_sign(n: u32) -> i64 {
    let n = n as u64;
    if (n * (n + 3) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Closed forms at `j = 0`: `alpha_0 = omega^{(2(-1)^n n + (-1)^n - 1)/2}`
/// and `beta_0 = (-1)^{n(n+3)/2}`.
pub fn closed_form_j0<R: CoeffRing>(ring: &R, n: u32) -> (R::El, R::El) {
    (ring.omega_pow(alpha0_exponent(n)), ring.int(beta0_sign(n)))
}

/// Closed form at `j = n`: `alpha_n = beta_n = prod_{k=1}^{n} (lambda_{k0} - lambda_{k1})^2`.
pub fn closed_form_jn<R: CoeffRing>(ring: &R, n: u32) -> R::El {
    let mut acc = ring.one();
    for k in 1..=n {
        let d = ring.sub(&ring.lambda(k, 0), &ring.lambda(k, 1));
        acc = ring.mul(&acc, &ring.mul(&d, &d));
    }
    acc
}

/// Closed forms at `j = 1`: single sums over the split position, with the
/// sentinel `lambda_{00} = lambda_{01} = 1` at the head.
pub fn closed_form_j1<R: CoeffRing>(ring: &R, n: u32) -> (R::El, R::El) {
    let mut alpha = ring.zero();
    let mut beta = ring.zero();
    for l in 0..n {
        let mut head_a = ring.one();
        let mut head_b = ring.one();
        for k in 0..=l {
            head_b = ring.mul(&head_b, &ring.lambda_prod(k));
            head_a = ring.mul(&head_a, &ring.lambda_pow2(k, chi(k)));
        }
        let mut t0 = ring.one();
        let mut t1 = ring.one();
        for k in (l + 1)..=n {
            t0 = ring.mul(&t0, &ring.lambda(k, 0));
            t1 = ring.mul(&t1, &ring.lambda(k, 1));
        }
        let td = ring.sub(&t0, &t1);
        let tail = ring.mul(&td, &td);
        let term_a = ring.mul(&head_a, &tail);
        let term_b = ring.mul(&head_b, &tail);
        if l % 2 == 1 {
            alpha = ring.sub(&alpha, &term_a);
            beta = ring.sub(&beta, &term_b);
        } else {
            alpha = ring.add(&alpha, &term_a);
            beta = ring.add(&beta, &term_b);
        }
    }
    (alpha, beta)
}

/// Closed forms at `j = 2`: the double sums over `(l_2, l_1)`. Requires `n >= 2`.
pub fn closed_form_j2<R: CoeffRing>(ring: &R, n: u32) -> Result<(R::El, R::El)> {
    if n < 2 {
        return Err(Error::CoeffIndexOutOfRange { j: 2, n });
    }
    let mut alpha = ring.zero();
    let mut beta = ring.zero();
    for l2 in 0..=(n - 2) {
        let mut head_a = ring.one();
        let mut head_b = ring.one();
        for k in 0..=l2 {
            head_b = ring.mul(&head_b, &ring.lambda_prod(k));
            head_a = ring.mul(&head_a, &ring.lambda_pow2(k, 0));
        }
        for l1 in 0..=(n - 2 - l2) {
            let mut m0 = ring.one();
            let mut m1 = ring.one();
            for k in (l2 + 1)..=(l1 + l2 + 1) {
                m0 = ring.mul(&m0, &ring.lambda(k, chi(k)));
                m1 = ring.mul(&m1, &ring.lambda(k, chi(k + 1)));
            }
            let md = ring.sub(&m0, &m1);
            let mid = ring.mul(&md, &md);

            let mut t0 = ring.one();
            let mut t1 = ring.one();
            for k in (l1 + l2 + 2)..=n {
                t0 = ring.mul(&t0, &ring.lambda(k, 0));
                t1 = ring.mul(&t1, &ring.lambda(k, 1));
            }
            let td = ring.sub(&t0, &t1);
            let tail = ring.mul(&td, &td);

            let base = ring.mul(&mid, &tail);
            let term_a = ring.mul(&head_a, &base);
            let term_b = ring.mul(&head_b, &base);
            if l1 % 2 == 1 {
                alpha = ring.sub(&alpha, &term_a);
                beta = ring.sub(&beta, &term_b);
            } else {
                alpha = ring.add(&alpha, &term_a);
                beta = ring.add(&beta, &term_b);
            }
        }
    }
    Ok((alpha, beta))
}

/// The conjectured solution values `v_j = beta_j / beta_0` as exact integers:
/// `v_1 = -1`, `v_{2i} = C(n-i, n-2i)`, `v_{2i+1} = -C(n-i-1, n-2i-1)`.
pub fn conjectured_v(n: u32) -> Vec<BigInt> {
    let n = n as i64;
    (1..=n)
        .map(|jj| {
            if jj % 2 == 0 {
                let i = jj / 2;
                binomial(n - i, n - 2 * i)
            } else {
                let i = (jj - 1) / 2;
                -binomial(n - i - 1, n - 2 * i - 1)
            }
        })
        .collect()
}

/// Evaluated coefficient table at the canonical lambda values.
#[derive(Debug, Clone)]
pub struct CoeffTable<T: Real> {
    pub n: u32,
    /// `alpha_j` for `j = 0..=n`.
    pub alpha: Vec<Complex<T>>,
    /// `beta_j` for `j = 0..=n`.
    pub beta: Vec<Complex<T>>,
    /// Normalized ratios `v_j = beta_j / beta_0` for `j = 1..=n` (real parts;
    /// the imaginary parts are checked to vanish).
    pub v: Vec<T>,
}

impl<T: Real> CoeffTable<T> {
    /// Validates the evaluation invariants: `beta_j` real within tolerance,
    /// `|beta_0| = 1`. The reality tolerance scales with the largest
    /// coefficient magnitude; the entries grow like central binomials, so a
    /// fixed absolute bound only makes sense at moderate orders.
    pub fn new(n: u32, alpha: Vec<Complex<T>>, beta: Vec<Complex<T>>) -> Result<Self> {
        assert_eq!(alpha.len(), n as usize + 1);
        assert_eq!(beta.len(), n as usize + 1);
        let base = T::from_f64_lossy(TAU_COEFF).max(T::epsilon() * T::from_f64_lossy(1e4));
        let scale = beta.iter().map(|b| b.norm()).fold(T::one(), T::max);
        let tol = base * scale;
        let worst_imag = beta
            .iter()
            .map(|b| b.im.abs())
            .fold(T::zero(), T::max);
        let b0_dev = (beta[0].norm() - T::one()).abs();
        if worst_imag > tol || b0_dev > tol {
            return Err(Error::NotUnitary {
                residual: worst_imag.max(b0_dev).to_f64().unwrap_or(f64::NAN),
                tol: TAU_COEFF,
            });
        }
        let b0 = beta[0].re;
        let v = beta[1..].iter().map(|bj| bj.re / b0).collect();
        Ok(CoeffTable { n, alpha, beta, v })
    }
}

/// Coefficient table by the order recursion, evaluated numerically.
pub fn recurse_coeffs<T: Real>(n: u32) -> Result<CoeffTable<T>> {
    if n < 1 {
        return Err(Error::InvalidOrder);
    }
    let ring = NumericRing::<T>::new(2 * n as u64 + 1)?;
    let (mut alpha, mut beta) = recurse_alpha_beta_padded(&ring, n);
    alpha.truncate(n as usize + 1);
    beta.truncate(n as usize + 1);
    CoeffTable::new(n, alpha, beta)
}

/// Coefficient vectors by the order recursion in exact cyclotomic arithmetic.
pub fn recurse_coeffs_cyclotomic(
    n: u32,
) -> Result<(CyclotomicCoeffRing, Vec<CyclotomicElement>, Vec<CyclotomicElement>)> {
    if n < 1 {
        return Err(Error::InvalidOrder);
    }
    let ring = CyclotomicCoeffRing::new(2 * n as u64 + 1)?;
    let (mut alpha, mut beta) = recurse_alpha_beta_padded(&ring, n);
    alpha.truncate(n as usize + 1);
    beta.truncate(n as usize + 1);
    Ok((ring, alpha, beta))
}

/// Evaluate the nested polynomial form of `B` at `x = |b|^2`, with
/// `|a|^2 = 1 - x`:
///
/// ```text
/// beta_0 + |a|^2 (beta_1 - |b|^2 (beta_2 + |a|^2 (beta_3 - ...)))
/// ```
///
/// For a table whose `v` equals the conjectured values this collapses to
/// `beta_0 * x^n`.
pub fn eval_b<T: Real>(table: &CoeffTable<T>, x: T) -> T {
    let one_minus_x = T::one() - x;
    let mut t = Complex::new(T::zero(), T::zero());
    for j in (1..=table.n as usize).rev() {
        let bj = table.beta[j];
        t = if j % 2 == 1 {
            bj - t.scale(x)
        } else {
            bj + t.scale(one_minus_x)
        };
    }
    (table.beta[0] + t.scale(one_minus_x)).re
}

/// An exact certificate that `beta_j^{(n)} = beta_0^{(n)} * v_j` at the
/// canonical lambda values: the difference, computed via the nested-sum route
/// in `Z[omega]` and reduced modulo the 4p-th cyclotomic polynomial, together
/// with its zero test.
#[derive(Debug, Clone)]
pub struct ExactCertificate {
    pub n: u32,
    pub j: u32,
    pub pass: bool,
    pub residual: CyclotomicElement,
}

/// Certify `beta_j = beta_0 * conjectured_v[j]` exactly. `beta_j` comes from
/// the nested sums; `beta_0` from its defining product. Arbitrary-precision
/// coefficients are used from the start, so there is no overflow path.
pub fn exact_verify(n: u32, j: u32) -> Result<ExactCertificate> {
    if n < 1 {
        return Err(Error::InvalidOrder);
    }
    if j < 1 || j > n {
        return Err(Error::CoeffIndexOutOfRange { j, n });
    }
    let ring = CyclotomicCoeffRing::new(2 * n as u64 + 1)?;
    let (_, beta_j) = general_nested(&ring, n, j)?;
    let mut beta_0 = ring.one();
    for k in 1..=n {
        beta_0 = ring.mul(&beta_0, &ring.lambda_prod(k));
    }
    let v = conjectured_v(n);
    let target = ring.mul(&beta_0, &ring.int_big(&v[j as usize - 1]));
    let residual = ring.sub(&beta_j, &target);
    let pass = residual.is_zero();
    Ok(ExactCertificate { n, j, pass, residual })
}
