//! Exact carriers for angles that are rational multiples of pi.
//!
//! All unit-modulus constants in the gate words are roots of unity. Storing
//! them as integer exponents removes every source of drift from the identity
//! checks; conversion to floating complex happens only at evaluation
//! boundaries.

use num_complex::Complex;
use num_integer::Integer;

use crate::scalar::Real;

/// A unit-modulus complex number `exp(i*pi*num/modulus)`, held exactly.
///
/// The representation is canonical: `num` is reduced into `[0, 2*modulus)`
/// and the fraction `num/modulus` is in lowest terms, so derived equality is
/// value equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitAngle {
    num: i64,
    modulus: i64,
}

impl UnitAngle {
    /// `exp(i*pi*num/modulus)`. `modulus` must be positive.
    pub fn new(num: i64, modulus: i64) -> Self {
        assert!(modulus > 0, "UnitAngle modulus must be positive");
        let mut num = num.rem_euclid(2 * modulus);
        let mut modulus = modulus;
        if num == 0 {
            modulus = 1;
        } else {
            let g = num.gcd(&modulus);
            num /= g;
            modulus /= g;
        }
        UnitAngle { num, modulus }
    }

    /// The multiplicative identity, `1`.
    pub fn one() -> Self {
        UnitAngle { num: 0, modulus: 1 }
    }

    /// `-1 = exp(i*pi)`.
    pub fn minus_one() -> Self {
        UnitAngle { num: 1, modulus: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    /// Exponents add over the least common modulus.
    pub fn mul(&self, other: &UnitAngle) -> UnitAngle {
        let l = self.modulus.lcm(&other.modulus);
        UnitAngle::new(self.num * (l / self.modulus) + other.num * (l / other.modulus), l)
    }

    /// Complex conjugate; equals the multiplicative inverse.
    pub fn conj(&self) -> UnitAngle {
        UnitAngle::new(-self.num, self.modulus)
    }

    /// Integer power, including negative exponents.
    pub fn pow(&self, k: i64) -> UnitAngle {
        UnitAngle::new(self.num * k, self.modulus)
    }

    /// Evaluate to a floating complex number. The four quadrant points come
    /// out exact, so products that are algebraically `+-1` or `+-i` stay so.
    pub fn value<T: Real>(&self) -> Complex<T> {
        let (n, m) = (self.num, self.modulus);
        if n == 0 {
            return Complex::new(T::one(), T::zero());
        }
        if n == m {
            return Complex::new(-T::one(), T::zero());
        }
        if 2 * n == m {
            return Complex::new(T::zero(), T::one());
        }
        if 2 * n == 3 * m {
            return Complex::new(T::zero(), -T::one());
        }
        let angle = T::PI() * T::from_i64_exact(n) / T::from_i64_exact(m);
        Complex::new(angle.cos(), angle.sin())
    }
}

impl std::fmt::Display for UnitAngle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.modulus)
    }
}

/// An angle `pi*num/den` (not necessarily on the unit circle as an exponent);
/// used for the word angle theta. Canonical: `den > 0`, lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PiRational {
    num: i64,
    den: i64,
}

impl PiRational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "PiRational denominator must be nonzero");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        PiRational { num, den }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// The angle as a floating scalar.
    pub fn value<T: Real>(&self) -> T {
        T::PI() * T::from_i64_exact(self.num) / T::from_i64_exact(self.den)
    }

    /// `exp(i * k * self)`, exactly.
    pub fn unit_exp(&self, k: i64) -> UnitAngle {
        UnitAngle::new(k * self.num, self.den)
    }
}

impl std::fmt::Display for PiRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
