//! Tietze moves on presentations. Adding or dropping a relation is allowed
//! only with a certificate that the relation is a consequence of the rest.

use serde::{Deserialize, Serialize};

use super::consequence::{is_consequence_bounded, Verdict};
use super::enumerate::enumerate_presentation;
use super::eval::evaluate_term;
use super::term::{Presentation, PresentationError, Relation, Term};

/// Depth tried by the bounded consequence search before falling back to a model.
pub const SEARCH_DEPTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TietzeMove {
    /// (T1) add a relation that is a consequence of the others.
    AddRelation(Relation),
    /// (T1⁻¹) drop the relation at this index if the rest imply it.
    RemoveRelation(usize),
    /// (T2) add generator `name` with the relation `name = definition`.
    AddGenerator { name: String, definition: Term },
    /// (T2⁻¹) drop a generator defined by its relation `s = x`.
    RemoveGenerator(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Certificate {
    /// T2 and T2⁻¹ need none.
    Unconditional,
    BoundedSearch {
        depth: usize,
    },
    /// The relation holds in the enumerated quandle of this order.
    Model {
        order: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TietzeResult {
    pub presentation: Presentation,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TietzeError {
    #[error("relation is not certified as a consequence (bounded search inconclusive and no finite model within budget)")]
    NotCertified,
    #[error("relation index {index} out of range ({len} relations)")]
    NoSuchRelation { index: usize, len: usize },
    #[error("generator index {index} out of range ({len} generators)")]
    NoSuchGenerator { index: usize, len: usize },
    #[error("generator {0} needs exactly one defining relation `s = x` with `s` absent from `x`")]
    NotDefined(usize),
    #[error(transparent)]
    Invalid(#[from] PresentationError),
}

/// Certifies that `relation` is a consequence of `base`'s relations.
fn certify(
    base: &Presentation,
    relation: &Relation,
    budget: usize,
) -> Result<Certificate, TietzeError> {
    let target = (relation.lhs.to_element(), relation.rhs.to_element());
    if is_consequence_bounded(&base.relation_elements(), &target, SEARCH_DEPTH) == Verdict::Yes {
        return Ok(Certificate::BoundedSearch {
            depth: SEARCH_DEPTH,
        });
    }
    let realized = enumerate_presentation(base, budget)
        .ok()
        .and_then(|r| r.into_finite())
        .ok_or(TietzeError::NotCertified)?;
    let images = &realized.generator_images;
    let q = &realized.quandle;
    let holds = evaluate_term(&relation.lhs, images, q).ok()
        == evaluate_term(&relation.rhs, images, q).ok();
    if holds {
        Ok(Certificate::Model { order: q.order() })
    } else {
        Err(TietzeError::NotCertified)
    }
}

pub fn tietze_apply(
    p: &Presentation,
    mv: &TietzeMove,
    budget: usize,
) -> Result<TietzeResult, TietzeError> {
    match mv {
        TietzeMove::AddRelation(relation) => {
            let presentation = p.with_relation(relation.clone())?;
            let certificate = certify(p, relation, budget)?;
            Ok(TietzeResult {
                presentation,
                certificate,
            })
        }
        TietzeMove::RemoveRelation(index) => {
            let len = p.relations().len();
            if *index >= len {
                return Err(TietzeError::NoSuchRelation { index: *index, len });
            }
            let presentation = p.without_relation(*index);
            let certificate = certify(&presentation, &p.relations()[*index], budget)?;
            Ok(TietzeResult {
                presentation,
                certificate,
            })
        }
        TietzeMove::AddGenerator { name, definition } => {
            let mut generators = p.generators().to_vec();
            let s = generators.len();
            generators.push(name.clone());
            let mut relations = p.relations().to_vec();
            relations.push(Relation::new(Term::Gen(s), definition.clone()));
            let presentation = Presentation::new(generators, relations)?;
            if definition.mentions(s) {
                return Err(TietzeError::NotDefined(s));
            }
            Ok(TietzeResult {
                presentation,
                certificate: Certificate::Unconditional,
            })
        }
        TietzeMove::RemoveGenerator(s) => {
            let s = *s;
            let len = p.generators().len();
            if s >= len {
                return Err(TietzeError::NoSuchGenerator { index: s, len });
            }
            let defining: Vec<usize> = p
                .relations()
                .iter()
                .enumerate()
                .filter(|(_, r)| r.lhs == Term::Gen(s) && !r.rhs.mentions(s))
                .map(|(i, _)| i)
                .collect();
            let [k] = defining[..] else {
                return Err(TietzeError::NotDefined(s));
            };
            let definition = &p.relations()[k].rhs;
            let shift = |g: usize| if g > s { g - 1 } else { g };
            let relations = p
                .relations()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, r)| {
                    Relation::new(
                        r.lhs.substitute(s, definition).map_generators(&shift),
                        r.rhs.substitute(s, definition).map_generators(&shift),
                    )
                })
                .collect();
            let mut generators = p.generators().to_vec();
            generators.remove(s);
            let presentation = Presentation::new(generators, relations)?;
            Ok(TietzeResult {
                presentation,
                certificate: Certificate::Unconditional,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{parse_presentation, parse_term, DEFAULT_BUDGET};
    use crate::quandle::find_isomorphism;

    fn order(p: &Presentation) -> usize {
        enumerate_presentation(p, DEFAULT_BUDGET)
            .unwrap()
            .order()
            .unwrap()
    }

    fn rel(src: &str, p: &Presentation) -> Relation {
        let (l, r) = src.split_once('=').unwrap();
        Relation::new(
            parse_term(l, p.generators()).unwrap(),
            parse_term(r, p.generators()).unwrap(),
        )
    }

    #[test]
    fn add_then_remove_generator_restores_presentation() {
        let p = parse_presentation("< a, c | (a*c)*a = c, c *^2 a = c >").unwrap();
        let def = parse_term("a*c", p.generators()).unwrap();
        let t2 = tietze_apply(
            &p,
            &TietzeMove::AddGenerator {
                name: "s".into(),
                definition: def,
            },
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(t2.presentation.generators().len(), 3);
        assert_eq!(order(&t2.presentation), 3);
        let back = tietze_apply(
            &t2.presentation,
            &TietzeMove::RemoveGenerator(2),
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(back.presentation, p);
    }

    #[test]
    fn removing_a_generator_substitutes_it() {
        let p = parse_presentation("< s, a, c | s = a*c, s*a = c, c *^2 a = c >").unwrap();
        let out = tietze_apply(&p, &TietzeMove::RemoveGenerator(0), DEFAULT_BUDGET)
            .unwrap()
            .presentation;
        assert_eq!(
            out,
            parse_presentation("< a, c | a*c*a = c, c*a*a = c >").unwrap()
        );
        let bad = parse_presentation("< s, a | s = s*a >").unwrap();
        assert_eq!(
            tietze_apply(&bad, &TietzeMove::RemoveGenerator(0), DEFAULT_BUDGET),
            Err(TietzeError::NotDefined(0))
        );
    }

    #[test]
    fn lemma_presentations_are_related() {
        let former =
            parse_presentation("< v, w | (v*w)*v = w, (w*v)*w = v, w *^3 v = w >").unwrap();
        let added = tietze_apply(
            &former,
            &TietzeMove::AddRelation(rel("(((v*w)*v)*v)*w = v", &former)),
            DEFAULT_BUDGET,
        )
        .unwrap();
        let latter = tietze_apply(
            &added.presentation,
            &TietzeMove::RemoveRelation(1),
            DEFAULT_BUDGET,
        )
        .unwrap();
        let a = enumerate_presentation(&former, DEFAULT_BUDGET)
            .unwrap()
            .into_finite()
            .unwrap();
        let b = enumerate_presentation(&latter.presentation, DEFAULT_BUDGET)
            .unwrap()
            .into_finite()
            .unwrap();
        assert_eq!(a.quandle.order(), 4);
        assert!(find_isomorphism(&a.quandle, &b.quandle).is_some());
    }

    #[test]
    fn refuses_a_non_consequence() {
        let q3 = parse_presentation("< a, c | (a*c)*a = c, c *^3 a = c >").unwrap();
        let collapse = rel("(((a*c)*a)*a)*c = a", &q3);
        assert_eq!(
            tietze_apply(&q3, &TietzeMove::AddRelation(collapse), DEFAULT_BUDGET),
            Err(TietzeError::NotCertified)
        );
    }
}
