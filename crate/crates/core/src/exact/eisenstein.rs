use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An Eisenstein integer `a + b·ζ` where ζ is a primitive sixth root of unity,
/// so that ζ² = ζ − 1. The lattice points are the vertices of the triangular
/// tiling {3,6}.
///
/// Serialized as the pair of decimal strings `[a, b]`.
#[derive(
    Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
#[serde(into = "[String; 2]", try_from = "[String; 2]")]
pub struct Eisenstein {
    pub a: BigInt,
    pub b: BigInt,
}

impl From<Eisenstein> for [String; 2] {
    fn from(x: Eisenstein) -> Self {
        [x.a.to_string(), x.b.to_string()]
    }
}

impl TryFrom<[String; 2]> for Eisenstein {
    type Error = num_bigint::ParseBigIntError;

    fn try_from([a, b]: [String; 2]) -> Result<Self, Self::Error> {
        Ok(Eisenstein {
            a: a.parse()?,
            b: b.parse()?,
        })
    }
}

impl Eisenstein {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Eisenstein {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zeta() -> Self {
        Eisenstein::new(0, 1)
    }

    /// ζ⁻¹ = ζ⁵ = 1 − ζ.
    pub fn zeta_inv() -> Self {
        Eisenstein::new(1, -1)
    }

    /// Complex conjugate; equals the image under ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        Eisenstein {
            a: &self.a + &self.b,
            b: -self.b.clone(),
        }
    }

    /// `a² + ab + b²`, the squared absolute value.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Eisenstein::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Inverse in the ring, defined only for the six units.
    pub fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.conj())
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Eisenstein::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Eisenstein::new(1, 0)
    }
}

impl<'a> Add<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a Eisenstein> for &'a Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: &Eisenstein) -> Eisenstein {
        // (a+bζ)(c+dζ) = (ac − bd) + (ad + bc + bd)ζ
        let bd = &self.b * &rhs.b;
        Eisenstein {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: Eisenstein) -> Eisenstein {
        &self + &rhs
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: Eisenstein) -> Eisenstein {
        &self - &rhs
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: Eisenstein) -> Eisenstein {
        &self * &rhs
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let coeff = |f: &mut fmt::Formatter<'_>, b: &BigInt| {
            if b.abs().is_one() {
                write!(f, "ζ")
            } else {
                write!(f, "{}ζ", b.abs())
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-")?;
            }
            return coeff(f, &self.b);
        }
        write!(
            f,
            "{} {} ",
            self.a,
            if self.b.is_negative() { "-" } else { "+" }
        )?;
        coeff(f, &self.b)
    }
}
