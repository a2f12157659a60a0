use std::fmt;
use std::ops::{Mul, MulAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::GainError;

/// Inputs whose modulus is off by more than this are rejected.
pub const UNIT_INPUT_TOLERANCE: f64 = 1e-9;

/// A point of the complex unit circle.
///
/// Stored as `(re, im)` and rescaled to modulus one on construction, so
/// `|re² + im² - 1|` stays at rounding level. The inverse is the conjugate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitComplex {
    re: f64,
    im: f64,
}

impl UnitComplex {
    pub const ONE: UnitComplex = UnitComplex { re: 1.0, im: 0.0 };
    pub const I: UnitComplex = UnitComplex { re: 0.0, im: 1.0 };
    pub const MINUS_ONE: UnitComplex = UnitComplex { re: -1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Result<Self, GainError> {
        let modulus = re.hypot(im);
        if !modulus.is_finite() || (modulus - 1.0).abs() > UNIT_INPUT_TOLERANCE {
            return Err(GainError::NotUnit { re, im });
        }
        Ok(UnitComplex {
            re: re / modulus,
            im: im / modulus,
        })
    }

    /// `e^{i theta}`.
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        UnitComplex { re: c, im: s }
    }

    pub fn re(self) -> f64 {
        self.re
    }

    pub fn im(self) -> f64 {
        self.im
    }

    /// Argument in `(-pi, pi]`.
    pub fn angle(self) -> f64 {
        self.im.atan2(self.re)
    }

    pub fn conj(self) -> Self {
        UnitComplex {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn inv(self) -> Self {
        self.conj()
    }

    /// `|self - other|`.
    pub fn distance(self, other: UnitComplex) -> f64 {
        (self.re - other.re).hypot(self.im - other.im)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    fn renormalized(re: f64, im: f64) -> Self {
        let modulus = re.hypot(im);
        UnitComplex {
            re: re / modulus,
            im: im / modulus,
        }
    }
}

impl Default for UnitComplex {
    fn default() -> Self {
        UnitComplex::ONE
    }
}

impl Mul for UnitComplex {
    type Output = UnitComplex;

    fn mul(self, rhs: UnitComplex) -> UnitComplex {
        UnitComplex::renormalized(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl MulAssign for UnitComplex {
    fn mul_assign(&mut self, rhs: UnitComplex) {
        *self = *self * rhs;
    }
}

impl std::iter::Product for UnitComplex {
    fn product<I: Iterator<Item = UnitComplex>>(iter: I) -> Self {
        iter.fold(UnitComplex::ONE, Mul::mul)
    }
}

impl fmt::Display for UnitComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}
