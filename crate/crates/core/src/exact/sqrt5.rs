use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

/// An element `a + b·√5` of the real quadratic field ℚ(√5).
///
/// Signs and comparisons are decided exactly, so the type is totally ordered
/// and can be used as a coordinate for the icosahedral and 600-cell models.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sqrt5Scalar {
    a: Rational,
    b: Rational,
}

impl Sqrt5Scalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Sqrt5Scalar { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Sqrt5Scalar {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `n / d` as an element of the rational subfield.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn sqrt5() -> Self {
        Sqrt5Scalar {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// The golden ratio φ = (1 + √5)/2.
    pub fn phi() -> Self {
        let half = Rational::new(1.into(), 2.into());
        Sqrt5Scalar {
            a: half.clone(),
            b: half,
        }
    }

    /// φ⁻¹ = φ − 1 = (−1 + √5)/2.
    pub fn phi_inv() -> Self {
        let half = Rational::new(1.into(), 2.into());
        Sqrt5Scalar {
            a: -half.clone(),
            b: half,
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        Sqrt5Scalar {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(5.into()) * &self.b * &self.b
    }

    /// Exact sign: −1, 0 or 1.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: the larger of a² and 5b² wins
        match (&self.a * &self.a).cmp(&(Rational::from_integer(5.into()) * &self.b * &self.b)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => unreachable!("√5 is irrational"),
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // 1/(a + b√5) = (a − b√5)/(a² − 5b²)
        let n = self.norm();
        Ok(Sqrt5Scalar {
            a: &self.a / &n,
            b: -(&self.b / &n),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Floating-point approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Zero for Sqrt5Scalar {
    fn zero() -> Self {
        Sqrt5Scalar {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Sqrt5Scalar {
    fn one() -> Self {
        Sqrt5Scalar {
            a: Rational::one(),
            b: Rational::zero(),
        }
    }
}

impl From<i64> for Sqrt5Scalar {
    fn from(n: i64) -> Self {
        Sqrt5Scalar::from_int(n)
    }
}

impl From<Rational> for Sqrt5Scalar {
    fn from(r: Rational) -> Self {
        Sqrt5Scalar::from_rational(r)
    }
}

impl PartialOrd for Sqrt5Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sqrt5Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl<'a> Add<&'a Sqrt5Scalar> for &'a Sqrt5Scalar {
    type Output = Sqrt5Scalar;
    fn add(self, rhs: &Sqrt5Scalar) -> Sqrt5Scalar {
        Sqrt5Scalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a Sqrt5Scalar> for &'a Sqrt5Scalar {
    type Output = Sqrt5Scalar;
    fn sub(self, rhs: &Sqrt5Scalar) -> Sqrt5Scalar {
        Sqrt5Scalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a Sqrt5Scalar> for &'a Sqrt5Scalar {
    type Output = Sqrt5Scalar;
    fn mul(self, rhs: &Sqrt5Scalar) -> Sqrt5Scalar {
        let five = Rational::from_integer(5.into());
        Sqrt5Scalar {
            a: &self.a * &rhs.a + five * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &Sqrt5Scalar {
    type Output = Sqrt5Scalar;
    fn neg(self) -> Sqrt5Scalar {
        Sqrt5Scalar {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl Neg for Sqrt5Scalar {
    type Output = Sqrt5Scalar;
    fn neg(self) -> Sqrt5Scalar {
        Sqrt5Scalar {
            a: -self.a,
            b: -self.b,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Sqrt5Scalar> for Sqrt5Scalar {
            type Output = Sqrt5Scalar;
            fn $m(self, rhs: Sqrt5Scalar) -> Sqrt5Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Sqrt5Scalar> for Sqrt5Scalar {
            type Output = Sqrt5Scalar;
            fn $m(self, rhs: &Sqrt5Scalar) -> Sqrt5Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for Sqrt5Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√5", self.b),
            (false, false) if self.b.is_negative() => {
                write!(f, "{} - {}√5", self.a, -self.b.clone())
            }
            (false, false) => write!(f, "{} + {}√5", self.a, self.b),
        }
    }
}
