//! Evaluating free-quandle words in a finite quandle and checking the
//! homomorphism a generator assignment induces.

use super::term::{Presentation, Term};
use super::word::FreeQuandleElement;
use crate::quandle::FiniteQuandle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("generator {generator} is not assigned (assignment has {assigned} entries)")]
    Unassigned { generator: usize, assigned: usize },
    #[error(
        "generator {generator} is assigned element {element}, outside a quandle of order {order}"
    )]
    OutOfRange {
        generator: usize,
        element: usize,
        order: usize,
    },
}

fn lookup(assign: &[usize], generator: usize, q: &FiniteQuandle) -> Result<usize, EvalError> {
    let element = *assign.get(generator).ok_or(EvalError::Unassigned {
        generator,
        assigned: assign.len(),
    })?;
    if element >= q.order() {
        return Err(EvalError::OutOfRange {
            generator,
            element,
            order: q.order(),
        });
    }
    Ok(element)
}

/// Value of `g⁻¹ s g` under the assignment: `s` acted on by the letters of `g`.
pub fn evaluate_word(
    word: &FreeQuandleElement,
    assign: &[usize],
    q: &FiniteQuandle,
) -> Result<usize, EvalError> {
    let mut x = lookup(assign, word.base(), q)?;
    for l in word.conjugator() {
        let y = lookup(assign, l.generator(), q)?;
        x = if l.is_inverse() {
            q.rdiv(x, y)
        } else {
            q.op(x, y)
        };
    }
    Ok(x)
}

pub fn evaluate_term(term: &Term, assign: &[usize], q: &FiniteQuandle) -> Result<usize, EvalError> {
    Ok(match term {
        Term::Gen(s) => lookup(assign, *s, q)?,
        Term::Star(a, b) => q.op(evaluate_term(a, assign, q)?, evaluate_term(b, assign, q)?),
        Term::Bar(a, b) => q.rdiv(evaluate_term(a, assign, q)?, evaluate_term(b, assign, q)?),
    })
}

/// What an assignment of generators induces.
#[derive(Debug, Clone)]
pub enum InducedHom {
    /// Every relation holds; `image` is the subquandle generated by the
    /// assigned elements, which is the image of the induced map.
    Defined { image: Vec<usize>, surjective: bool },
    /// Relation `relation` evaluates to `lhs ≠ rhs`.
    Fails {
        relation: usize,
        lhs: usize,
        rhs: usize,
    },
}

impl InducedHom {
    pub fn is_defined(&self) -> bool {
        matches!(self, InducedHom::Defined { .. })
    }
}

/// Checks that every relation of `p` holds under `assign` in `q`. The map
/// itself, once `p` is enumerated, is `FiniteRealization::induced_hom`.
pub fn check_induced_hom(
    p: &Presentation,
    assign: &[usize],
    q: &FiniteQuandle,
) -> Result<InducedHom, EvalError> {
    for g in 0..p.generators().len() {
        lookup(assign, g, q)?;
    }
    for (relation, r) in p.relations().iter().enumerate() {
        let lhs = evaluate_term(&r.lhs, assign, q)?;
        let rhs = evaluate_term(&r.rhs, assign, q)?;
        if lhs != rhs {
            return Ok(InducedHom::Fails { relation, lhs, rhs });
        }
    }
    let seeds: Vec<usize> = assign[..p.generators().len()].to_vec();
    let image = q.generated_closure(&seeds);
    let surjective = image.len() == q.order();
    Ok(InducedHom::Defined { image, surjective })
}
