//! The `{3,6}` Schläfli quandle on the Eisenstein integers, which is
//! infinite and therefore evaluated on demand.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::polytope::GeometryError;
use crate::exact::Eisenstein;

/// An affine map `u ↦ linear·u + translation` of the Eisenstein integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineMap {
    pub linear: Eisenstein,
    pub translation: Eisenstein,
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap {
            linear: Eisenstein::new(1, 0),
            translation: Eisenstein::new(0, 0),
        }
    }

    pub fn apply(&self, u: &Eisenstein) -> Eisenstein {
        &(&self.linear * u) + &self.translation
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &AffineMap) -> AffineMap {
        AffineMap {
            linear: &next.linear * &self.linear,
            translation: next.apply(&self.translation),
        }
    }

    pub fn pow(&self, n: u32) -> AffineMap {
        (0..n).fold(AffineMap::identity(), |acc, _| acc.then(self))
    }

    pub fn is_translation(&self) -> bool {
        self.linear == Eisenstein::new(1, 0)
    }
}

/// `{3,6}`: `x ∗ y = y + ζ(x − y)` on `ℤ[ζ]`, with designated pair `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LazyQuandle {
    pub pair: (Eisenstein, Eisenstein),
}

pub fn eisenstein_quandle() -> LazyQuandle {
    LazyQuandle {
        pair: (Eisenstein::new(0, 0), Eisenstein::new(1, 0)),
    }
}

impl LazyQuandle {
    /// `∗y` as an affine map.
    pub fn translation(&self, y: &Eisenstein, inverse: bool) -> AffineMap {
        let unit = if inverse {
            Eisenstein::zeta_inv()
        } else {
            Eisenstein::zeta()
        };
        let one_minus = &Eisenstein::new(1, 0) - &unit;
        AffineMap {
            translation: &one_minus * y,
            linear: unit,
        }
    }

    pub fn op(&self, x: &Eisenstein, y: &Eisenstein) -> Eisenstein {
        self.translation(y, false).apply(x)
    }

    pub fn rdiv(&self, x: &Eisenstein, y: &Eisenstein) -> Eisenstein {
        self.translation(y, true).apply(x)
    }

    pub fn op_pow(&self, x: &Eisenstein, y: &Eisenstein, n: u32) -> Eisenstein {
        self.translation(y, false).pow(n).apply(x)
    }
}

/// The inner map `(∗w)³ ∘ (∗v)³`, valid when it is a nonzero translation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationCertificate {
    pub v: Eisenstein,
    pub w: Eisenstein,
    pub map: AffineMap,
    pub valid: bool,
}

impl fmt::Display for TranslationCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(∗{})³∘(∗{})³ : u ↦ {}·u + {}",
            self.w, self.v, self.map.linear, self.map.translation
        )
    }
}

pub fn translation_certificate(
    l: &LazyQuandle,
    v: &Eisenstein,
    w: &Eisenstein,
) -> Result<TranslationCertificate, GeometryError> {
    if v == w {
        return Err(GeometryError::Degenerate);
    }
    let map = l
        .translation(v, false)
        .pow(3)
        .then(&l.translation(w, false).pow(3));
    let valid = map.is_translation() && map.translation != Eisenstein::new(0, 0);
    Ok(TranslationCertificate {
        v: v.clone(),
        w: w.clone(),
        map,
        valid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_instances() {
        let l = eisenstein_quandle();
        let (v, w) = l.pair.clone();
        assert_eq!(l.op(&v, &w), &Eisenstein::new(1, 0) - &Eisenstein::zeta());
        assert_eq!(l.op(&l.op(&v, &w), &v), w);
        assert_eq!(l.op_pow(&w, &v, 6), w);
        assert_ne!(l.op_pow(&w, &v, 3), w);
        assert_eq!(l.rdiv(&l.op(&v, &w), &w), v);
    }

    #[test]
    fn certificates() {
        let l = eisenstein_quandle();
        let c =
            translation_certificate(&l, &Eisenstein::new(0, 0), &Eisenstein::new(1, 0)).unwrap();
        assert!(c.valid);
        assert_eq!(c.map.translation, Eisenstein::new(2, 0));
        assert_eq!(c.to_string(), "(∗1)³∘(∗0)³ : u ↦ 1·u + 2");
        let c = translation_certificate(&l, &Eisenstein::new(0, 0), &Eisenstein::zeta()).unwrap();
        assert_eq!(c.map.translation, Eisenstein::new(0, 2));
        assert_eq!(
            translation_certificate(&l, &Eisenstein::zeta(), &Eisenstein::zeta()),
            Err(GeometryError::Degenerate)
        );
    }

    #[test]
    fn cube_of_a_translation_is_a_point_reflection() {
        let l = eisenstein_quandle();
        let x = Eisenstein::new(3, -2);
        let r = l.translation(&x, false).pow(3);
        assert_eq!(r.linear, Eisenstein::new(-1, 0));
        assert_eq!(r.translation, &x + &x);
    }
}
