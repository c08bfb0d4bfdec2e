//! Knot quandles `Q_m` of twist-spun trefoils, their projection onto the
//! `{3,m}` Schläfli quandles, and the central-extension checks.

mod certify;
mod extension;

pub use certify::{
    certify_q6_infinite, collapse_relation_check, CollapseReport, InfinityCertificate,
};
pub use extension::{
    deck_group, fiber_coherence, verify_central_extension, Condition, DeckGroup,
    DeckTransformation, ExtensionReport, FiberCoherence,
};

use crate::geometry::{lemma_relations_hold, GeometryError, SchlafliQuandle};
use crate::presentation::{
    enumerate_presentation, EnumerationError, EnumerationResult, Presentation, Relation, Term,
};
use crate::quandle::{FiniteQuandle, HomError, InnerLetter, InnerPermutation, QuandleHom};

/// Largest `m` any command accepts; `m = 6` only ever reports a budget
/// overrun or a certificate.
pub const MAX_M: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TwistError {
    #[error("m = {m} is outside the supported range {min}..={max}")]
    OutOfRange { m: usize, min: usize, max: usize },
    #[error("Q_{0} did not close within the budget")]
    NotFinite(usize),
    #[error("the designated pair of {0} does not satisfy the Q_m relations")]
    RelationsFail(String),
    #[error("the projection is not onto ({image} of {order} elements reached)")]
    NotSurjective { image: usize, order: usize },
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

pub(crate) fn check_range(m: usize, min: usize, max: usize) -> Result<(), TwistError> {
    if (min..=max).contains(&m) {
        Ok(())
    } else {
        Err(TwistError::OutOfRange { m, min, max })
    }
}

/// `⟨a, c | (a∗c)∗a = c, c ∗^m a = c⟩`.
pub fn twist_spun_presentation(m: usize) -> Result<Presentation, TwistError> {
    if m < 1 {
        return Err(TwistError::OutOfRange {
            m,
            min: 1,
            max: usize::MAX,
        });
    }
    let (a, c) = (Term::Gen(0), Term::Gen(1));
    let relations = vec![
        Relation::new(
            Term::star(Term::star(a.clone(), c.clone()), a.clone()),
            c.clone(),
        ),
        Relation::new(Term::star_pow(c.clone(), &a, m), c),
    ];
    Ok(Presentation::new(vec!["a".into(), "c".into()], relations).expect("well formed"))
}

/// The two presentations of the `{3,m}` quandle, on generators `v, w`:
/// `(v∗w)∗v = w, (w∗v)∗w = v, w∗^m v = w`, and the same with the middle
/// relation replaced by `(((v∗w)∗v)∗v)∗w = v`.
pub fn lemma_presentations(m: usize) -> Result<[Presentation; 2], TwistError> {
    if m < 2 {
        return Err(TwistError::OutOfRange {
            m,
            min: 2,
            max: usize::MAX,
        });
    }
    let (v, w) = (Term::Gen(0), Term::Gen(1));
    let vw = Term::star(v.clone(), w.clone());
    let first = Relation::new(Term::star(vw.clone(), v.clone()), w.clone());
    let last = Relation::new(Term::star_pow(w.clone(), &v, m), w.clone());
    let former = Relation::new(
        Term::star(Term::star(w.clone(), v.clone()), w.clone()),
        v.clone(),
    );
    let latter = Relation::new(Term::star(Term::star_pow(vw, &v, 2), w), v);
    let names = vec!["v".to_string(), "w".to_string()];
    Ok([former, latter].map(|middle| {
        Presentation::new(names.clone(), vec![first.clone(), middle, last.clone()])
            .expect("well formed")
    }))
}

#[derive(Debug, Clone)]
pub struct TwistSpunQuandle {
    pub m: usize,
    pub realization: EnumerationResult,
}

impl TwistSpunQuandle {
    pub fn quandle(&self) -> Option<&FiniteQuandle> {
        self.realization.finite().map(|r| &r.quandle)
    }

    /// Indices of `a` and `c`, when finite.
    pub fn generators(&self) -> Option<(usize, usize)> {
        self.realization
            .finite()
            .map(|r| (r.generator_images[0], r.generator_images[1]))
    }

    pub fn expect_finite(&self) -> Result<(&FiniteQuandle, usize, usize), TwistError> {
        let q = self.quandle().ok_or(TwistError::NotFinite(self.m))?;
        let (a, c) = self.generators().expect("finite");
        Ok((q, a, c))
    }
}

pub fn build_qm(m: usize, budget: usize) -> Result<TwistSpunQuandle, TwistError> {
    check_range(m, 1, MAX_M)?;
    let mut realization = enumerate_presentation(&twist_spun_presentation(m)?, budget)?;
    if let Some(crate::presentation::FiniteRealization { quandle, .. }) =
        match &mut realization.outcome {
            crate::presentation::Outcome::Finite(r) => Some(r),
            _ => None,
        }
    {
        *quandle = quandle.clone().with_name(format!("Q_{m}"));
    }
    Ok(TwistSpunQuandle { m, realization })
}

/// The epimorphism `Q_m → X` with `a ↦ v`, `c ↦ w`.
pub fn projection_to_schlafli(
    q: &TwistSpunQuandle,
    x: &SchlafliQuandle,
) -> Result<QuandleHom, TwistError> {
    let r = q.realization.finite().ok_or(TwistError::NotFinite(q.m))?;
    let (v, w) = x.pair;
    if !lemma_relations_hold(&x.quandle, v, w, q.m) {
        return Err(TwistError::RelationsFail(x.symbol.to_string()));
    }
    let p = r.induced_hom(&[v, w], &x.quandle)?;
    if !p.is_surjective() {
        return Err(TwistError::NotSurjective {
            image: p.image().len(),
            order: x.quandle.order(),
        });
    }
    Ok(p)
}

/// `ĝ = (∗c)∘(∗a)∘(∗a)∘(∗c)` at `g = 1`, i.e. `x ↦ (((x∗c)∗a)∗a)∗c`.
pub fn hat_automorphism(q: &TwistSpunQuandle) -> Result<InnerPermutation, TwistError> {
    let (quandle, a, c) = q.expect_finite()?;
    let word = [c, a, a, c]
        .iter()
        .map(|&element| InnerLetter {
            element,
            inverse: false,
        })
        .collect();
    Ok(InnerPermutation::from_word(quandle, word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::DEFAULT_BUDGET;

    #[test]
    fn presentation_text() {
        assert_eq!(
            twist_spun_presentation(3).unwrap().to_string(),
            "< a, c | a*c*a = c, c*a*a*a = c >"
        );
        assert!(twist_spun_presentation(0).is_err());
    }

    #[test]
    fn lemma_presentation_text() {
        let [a, b] = lemma_presentations(3).unwrap();
        assert_eq!(
            a.to_string(),
            "< v, w | v*w*v = w, w*v*w = v, w*v*v*v = w >"
        );
        assert_eq!(
            b.to_string(),
            "< v, w | v*w*v = w, v*w*v*v*w = v, w*v*v*v = w >"
        );
    }

    #[test]
    fn range_is_enforced() {
        assert!(matches!(
            build_qm(7, DEFAULT_BUDGET),
            Err(TwistError::OutOfRange { m: 7, .. })
        ));
        assert!(matches!(
            build_qm(0, DEFAULT_BUDGET),
            Err(TwistError::OutOfRange { m: 0, .. })
        ));
    }

    #[test]
    fn hat_orbit_of_a() {
        for (m, len) in [(2, 1), (3, 2), (4, 4)] {
            let q = build_qm(m, DEFAULT_BUDGET).unwrap();
            let (_, a, _) = q.expect_finite().unwrap();
            assert_eq!(hat_automorphism(&q).unwrap().orbit(a).len(), len, "m = {m}");
        }
    }
}
