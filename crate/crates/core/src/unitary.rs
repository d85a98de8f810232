//! 2x2 unitaries in the `(a, b, phi)` parameterization, and the diagonal
//! gates `D_j` built from exact roots of unity.

use num_complex::Complex;

use crate::angle::UnitAngle;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tolerances::TAU_UNIT;

/// A U(2) element stored as `(a, b, phi)`.
///
/// The realized matrix is
///
/// ```text
/// exp(i*phi/2) * [ a        -conj(b) ]
///                [ b         conj(a) ]
/// ```
///
/// with `|a|^2 + |b|^2 = 1`, hence `det = exp(i*phi)`. With `phi = 0` this is
/// an SU(2) parameterization. `b` is the lower-left entry (up to the global
/// phase); its magnitude is the off-diagonality the gate words drive to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2<T> {
    pub a: Complex<T>,
    pub b: Complex<T>,
    pub phi: T,
}

impl<T: Real> Unitary2<T> {
    /// Construct with the normalization check `|a|^2 + |b|^2 = 1` at the
    /// default tolerance [`TAU_UNIT`].
    pub fn new(a: Complex<T>, b: Complex<T>, phi: T) -> Result<Self> {
        Self::new_with_tol(a, b, phi, T::from_f64_lossy(TAU_UNIT))
    }

    /// Construct with the normalization check at a caller-chosen tolerance.
    pub fn new_with_tol(a: Complex<T>, b: Complex<T>, phi: T, tol: T) -> Result<Self> {
        let u = Unitary2 { a, b, phi };
        let residual = u.unit_residual();
        if residual > tol {
            return Err(Error::NotUnitary {
                residual: residual.to_f64().unwrap_or(f64::NAN),
                tol: tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(u)
    }

    /// Construct without validating; for values already known to be unitary.
    pub fn new_unchecked(a: Complex<T>, b: Complex<T>, phi: T) -> Self {
        Unitary2 { a, b, phi }
    }

    pub fn identity() -> Self {
        Unitary2 {
            a: Complex::new(T::one(), T::zero()),
            b: Complex::new(T::zero(), T::zero()),
            phi: T::zero(),
        }
    }

    /// `| |a|^2 + |b|^2 - 1 |`.
    pub fn unit_residual(&self) -> T {
        (self.a.norm_sqr() + self.b.norm_sqr() - T::one()).abs()
    }

    /// Magnitude of the off-diagonal entry.
    pub fn b_mag(&self) -> T {
        self.b.norm()
    }

    pub fn a_mag(&self) -> T {
        self.a.norm()
    }

    /// The realized matrix, row major.
    pub fn to_matrix(&self) -> [[Complex<T>; 2]; 2] {
        let half = self.phi / (T::one() + T::one());
        let g = Complex::new(half.cos(), half.sin());
        [
            [g * self.a, -g * self.b.conj()],
            [g * self.b, g * self.a.conj()],
        ]
    }

    /// Recover `(a, b, phi)` from a realized matrix. The global phase is
    /// taken as the principal argument of the determinant, so `phi` lands in
    /// `(-pi, pi]`; representations outside that branch come back with the
    /// `(a, b) -> (-a, -b)` sign flip that realizes the same matrix.
    pub fn from_matrix(m: &[[Complex<T>; 2]; 2], tol: T) -> Result<Self> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let phi = det.arg();
        let half = phi / (T::one() + T::one());
        let g_inv = Complex::new(half.cos(), -half.sin());
        let a = g_inv * m[0][0];
        let b = g_inv * m[1][0];
        let u = Unitary2 { a, b, phi };
        // Cross-check the remaining entries: detects inputs that are not of
        // unitary shape at all.
        let back = u.to_matrix();
        let mut residual = T::zero();
        for r in 0..2 {
            for c in 0..2 {
                residual = residual.max((back[r][c] - m[r][c]).norm());
            }
        }
        if residual > tol || u.unit_residual() > tol {
            return Err(Error::NotUnitaryMatrix {
                tol: tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(u)
    }

    /// Matrix product; phases add.
    pub fn mul(&self, other: &Unitary2<T>) -> Unitary2<T> {
        Unitary2 {
            a: self.a * other.a - self.b.conj() * other.b,
            b: self.b * other.a + self.a.conj() * other.b,
            phi: self.phi + other.phi,
        }
    }

    /// Conjugate transpose of the realized matrix.
    pub fn dagger(&self) -> Unitary2<T> {
        Unitary2 {
            a: self.a.conj(),
            b: -self.b,
            phi: -self.phi,
        }
    }

    /// Determinant of the realized matrix, `exp(i*phi)`.
    pub fn det(&self) -> Complex<T> {
        Complex::new(self.phi.cos(), self.phi.sin())
    }

    /// Entrywise max distance between the realized matrices.
    pub fn dist_max(&self, other: &Unitary2<T>) -> T {
        let m = self.to_matrix();
        let o = other.to_matrix();
        let mut d = T::zero();
        for r in 0..2 {
            for c in 0..2 {
                d = d.max((m[r][c] - o[r][c]).norm());
            }
        }
        d
    }

    /// Entrywise max distance from the identity after removing the residual
    /// diagonal phase, i.e. `min over g of || diag(e^{-ig}, e^{ig}) * U - I ||_max`.
    ///
    /// The corrected iteration pins the diagonal limit but leaves exactly this
    /// one-parameter gauge free, so "distance to the identity" is measured in
    /// the quotient.
    pub fn dist_to_identity_mod_diag_phase(&self) -> T {
        let m = self.to_matrix();
        let g = m[0][0].arg();
        let d0 = Complex::new(g.cos(), -g.sin());
        let d1 = d0.conj();
        let one = Complex::new(T::one(), T::zero());
        let mut d = (d0 * m[0][0] - one).norm();
        d = d.max((d0 * m[0][1]).norm());
        d = d.max((d1 * m[1][0]).norm());
        d.max((d1 * m[1][1] - one).norm())
    }

    pub fn is_identity(&self, tol: T) -> bool {
        self.dist_max(&Unitary2::identity()) <= tol
    }
}

/// The roots of unity on the diagonal of `D_j(theta_p)`, for `omega =
/// exp(i*theta_p/2)` and `theta_p = pi/p`:
///
/// ```text
/// lambda_{j0} = omega^{(-1)^j j},   lambda_{j1} = (-1)^{j+1} omega^{(-1)^{j+1} j}
/// ```
///
/// Requires odd `p >= 3` and `1 <= j <= (p-1)/2`. Both values come back as
/// exact [`UnitAngle`]s; they satisfy `lambda_{j0}*lambda_{j1} = (-1)^{j+1}`
/// and `conj(lambda_{j0}^2) = lambda_{j1}^2` exactly.
pub fn make_lambda(j: u32, p: u64) -> Result<(UnitAngle, UnitAngle)> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::InvalidP(p));
    }
    let max = ((p - 1) / 2) as u32;
    if j < 1 || j > max {
        return Err(Error::DiagIndexOutOfRange { j, max });
    }
    let two_p = 2 * p as i64;
    let j = j as i64;
    let sign = if j % 2 == 0 { 1 } else { -1 };
    // omega = e^{i*pi/(2p)}: exponents are taken modulo 4p by UnitAngle.
    let lambda0 = UnitAngle::new(sign * j, two_p);
    let lambda1 = UnitAngle::new(two_p * (j + 1) - sign * j, two_p);
    Ok((lambda0, lambda1))
}

/// The diagonal gate `D_j(theta_p) = diag(lambda_{j0}, lambda_{j1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagonalGate {
    pub j: u32,
    pub p: u64,
    pub lambda0: UnitAngle,
    pub lambda1: UnitAngle,
}

impl DiagonalGate {
    pub fn new(j: u32, p: u64) -> Result<Self> {
        let (lambda0, lambda1) = make_lambda(j, p)?;
        Ok(DiagonalGate { j, p, lambda0, lambda1 })
    }

    /// Realize as a [`Unitary2`]. `det D_j = (-1)^{j+1}`, so `phi` is `0` for
    /// odd `j` and `pi` for even `j`.
    pub fn matrix<T: Real>(&self) -> Unitary2<T> {
        let l0: Complex<T> = self.lambda0.value();
        if self.j % 2 == 1 {
            Unitary2::new_unchecked(l0, Complex::new(T::zero(), T::zero()), T::zero())
        } else {
            // a = lambda0 * e^{-i*pi/2}
            let a = l0 * Complex::new(T::zero(), -T::one());
            Unitary2::new_unchecked(a, Complex::new(T::zero(), T::zero()), T::PI())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_su2, trial_rng};

    type C64 = Complex<f64>;

    #[test]
    fn lambda_p3() {
        // (j=1, p=3) -> (e^{-i pi/6}, e^{+i pi/6})
        let (l0, l1) = make_lambda(1, 3).unwrap();
        assert_eq!(l0, UnitAngle::new(-1, 6));
        assert_eq!(l1, UnitAngle::new(1, 6));
    }

    #[test]
    fn lambda_p5_j2() {
        // (j=2, p=5) -> (omega^2, -omega^{-2}) with omega = e^{i pi/10}
        let (l0, l1) = make_lambda(2, 5).unwrap();
        assert_eq!(l0, UnitAngle::new(2, 10));
        assert_eq!(l1, UnitAngle::new(10 - 2, 10));
        assert_eq!(l0.mul(&l1), UnitAngle::minus_one());
    }

    #[test]
    fn lambda_identities_exact() {
        for p in [3u64, 5, 7, 9, 11, 13, 101] {
            for j in 1..=((p - 1) / 2) as u32 {
                let (l0, l1) = make_lambda(j, p).unwrap();
                let expected = if j % 2 == 0 { UnitAngle::minus_one() } else { UnitAngle::one() };
                assert_eq!(l0.mul(&l1), expected, "product at j={j} p={p}");
                // conj(l0^2) = l1^2
                assert_eq!(l0.pow(2).conj(), l1.pow(2), "conj-square at j={j} p={p}");
                // conj(l0^2) * l1^{-2} = 1
                assert!(l0.pow(2).conj().mul(&l1.pow(-2)).is_one());
            }
        }
    }

    #[test]
    fn lambda_rejects_bad_inputs() {
        assert!(matches!(make_lambda(1, 4), Err(Error::InvalidP(4))));
        assert!(matches!(make_lambda(1, 1), Err(Error::InvalidP(1))));
        assert!(matches!(
            make_lambda(3, 5),
            Err(Error::DiagIndexOutOfRange { j: 3, max: 2 })
        ));
        assert!(matches!(
            make_lambda(0, 5),
            Err(Error::DiagIndexOutOfRange { j: 0, max: 2 })
        ));
    }

    #[test]
    fn diag_gate_matrix_values() {
        // (j=1, p=3) -> diag(e^{-i pi/6}, e^{i pi/6})
        let g = DiagonalGate::new(1, 3).unwrap();
        let m = g.matrix::<f64>().to_matrix();
        let w = C64::from_polar(1.0, std::f64::consts::PI / 6.0);
        assert!((m[0][0] - w.conj()).norm() < 1e-15);
        assert!((m[1][1] - w).norm() < 1e-15);
        assert!(m[0][1].norm() == 0.0 && m[1][0].norm() == 0.0);
    }

    #[test]
    fn diag_gate_det_sign() {
        for p in [5u64, 7, 9] {
            for j in 1..=((p - 1) / 2) as u32 {
                let g = DiagonalGate::new(j, p).unwrap();
                let u = g.matrix::<f64>();
                assert_eq!(u.b_mag(), 0.0);
                let expected = if j % 2 == 0 { -1.0 } else { 1.0 };
                assert!((u.det() - C64::new(expected, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn identity_times_u_is_u() {
        let mut rng = trial_rng(11, 0);
        let u = random_su2(&mut rng);
        let i = Unitary64::identity();
        assert!(i.mul(&u).dist_max(&u) < 1e-15);
        assert!(u.mul(&i).dist_max(&u) < 1e-15);
    }

    type Unitary64 = Unitary2<f64>;

    #[test]
    fn off_diagonal_square() {
        // (a=0, b=1, phi=0) squared -> (a=-1, b=0, phi=0)
        let u = Unitary64::new(C64::new(0.0, 0.0), C64::new(1.0, 0.0), 0.0).unwrap();
        let sq = u.mul(&u);
        assert!((sq.a - C64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!(sq.b.norm() < 1e-15);
        assert_eq!(sq.phi, 0.0);
    }

    #[test]
    fn dagger_properties() {
        let mut rng = trial_rng(12, 0);
        for _ in 0..100 {
            let u = random_su2(&mut rng);
            assert!(u.mul(&u.dagger()).is_identity(TAU_UNIT));
            // dagger is the entrywise conjugate transpose
            let m = u.to_matrix();
            let d = u.dagger().to_matrix();
            for r in 0..2 {
                for c in 0..2 {
                    assert!((d[r][c] - m[c][r].conj()).norm() < 1e-15);
                }
            }
            assert!(u.dagger().dagger().dist_max(&u) < 1e-15);
        }
        let i = Unitary64::identity();
        assert!(i.dagger().dist_max(&i) == 0.0);
    }

    #[test]
    fn mul_preserves_normalization() {
        let mut rng = trial_rng(13, 0);
        for _ in 0..10_000 {
            let u = random_su2(&mut rng);
            let v = random_su2(&mut rng);
            assert!(u.mul(&v).unit_residual() <= TAU_UNIT);
        }
    }

    #[test]
    fn matrix_round_trip() {
        let mut rng = trial_rng(14, 0);
        for i in 0..200 {
            let mut u = random_su2(&mut rng);
            // exercise nonzero phases on the principal branch
            u.phi = -3.0 + 6.0 * (i as f64) / 200.0;
            let back = Unitary64::from_matrix(&u.to_matrix(), TAU_UNIT).unwrap();
            assert!((back.a - u.a).norm() < 1e-12);
            assert!((back.b - u.b).norm() < 1e-12);
            assert!((back.phi - u.phi).abs() < 1e-12);
            assert!(back.dist_max(&u) < 1e-12);
        }
    }

    #[test]
    fn from_matrix_rejects_non_unitary() {
        let m = [
            [C64::new(1.0, 0.0), C64::new(0.3, 0.0)],
            [C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
        ];
        assert!(Unitary64::from_matrix(&m, TAU_UNIT).is_err());
    }

    #[test]
    fn new_rejects_unnormalized() {
        let r = Unitary64::new(C64::new(0.9, 0.0), C64::new(0.9, 0.0), 0.0);
        assert!(matches!(r, Err(Error::NotUnitary { .. })));
    }
}
