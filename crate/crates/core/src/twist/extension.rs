use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{hat_automorphism, TwistError, TwistSpunQuandle};
use crate::quandle::{FiniteQuandle, QuandleHom};

/// A fiber-preserving permutation commuting with every right translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeckTransformation(pub Vec<usize>);

impl DeckTransformation {
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &DeckTransformation) -> DeckTransformation {
        DeckTransformation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut power = self.clone();
        while !power.is_identity() {
            power = self.compose(&power);
            k += 1;
        }
        k
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckGroup {
    /// Sorted; the identity comes first.
    pub elements: Vec<DeckTransformation>,
    pub abelian: bool,
    pub cyclic: bool,
    /// Index of an element generating the group, when cyclic.
    pub generator: Option<usize>,
}

impl DeckGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Extends `x0 ↦ t` to the map with `α(x∗y) = α(x)∗y`, if consistent.
fn propagate(q: &FiniteQuandle, x0: usize, t: usize) -> Option<Vec<usize>> {
    let n = q.order();
    let mut alpha = vec![usize::MAX; n];
    alpha[x0] = t;
    let mut queue = VecDeque::from([x0]);
    while let Some(x) = queue.pop_front() {
        for y in 0..n {
            for (to, image) in [
                (q.op(x, y), q.op(alpha[x], y)),
                (q.rdiv(x, y), q.rdiv(alpha[x], y)),
            ] {
                if alpha[to] == usize::MAX {
                    alpha[to] = image;
                    queue.push_back(to);
                } else if alpha[to] != image {
                    return None;
                }
            }
        }
    }
    alpha.iter().all(|&a| a != usize::MAX).then_some(alpha)
}

fn is_deck(q: &FiniteQuandle, p: &QuandleHom, alpha: &[usize]) -> bool {
    let n = q.order();
    let mut seen = vec![false; n];
    for &a in alpha {
        if std::mem::replace(&mut seen[a], true) {
            return false;
        }
    }
    (0..n).all(|x| p.apply(alpha[x]) == p.apply(x))
        && (0..n).all(|x| (0..n).all(|y| alpha[q.op(x, y)] == q.op(alpha[x], y)))
}

/// All deck transformations of `p`. On a connected source each is fixed by
/// where it sends one element, so only that element's fiber is searched.
pub fn deck_group(p: &QuandleHom) -> DeckGroup {
    let q = p.source();
    let x0 = 0;
    let fiber: Vec<usize> = (0..q.order())
        .filter(|&x| p.apply(x) == p.apply(x0))
        .collect();
    let mut elements: Vec<DeckTransformation> = fiber
        .iter()
        .filter_map(|&t| propagate(q, x0, t))
        .filter(|alpha| is_deck(q, p, alpha))
        .map(DeckTransformation)
        .collect();
    elements.sort();
    let abelian = elements
        .iter()
        .all(|a| elements.iter().all(|b| a.compose(b) == b.compose(a)));
    let generator = elements.iter().position(|a| a.order() == elements.len());
    DeckGroup {
        cyclic: abelian && generator.is_some(),
        generator,
        abelian,
        elements,
    }
}

/// Outcome of one of the conditions (E0)–(E2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub pass: bool,
    /// First failing tuple in lexicographic order.
    pub counterexample: Option<Vec<usize>>,
}

impl Condition {
    fn from_first(counterexample: Option<Vec<usize>>) -> Condition {
        Condition {
            pass: counterexample.is_none(),
            counterexample,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionReport {
    pub source: String,
    pub target: String,
    pub source_order: usize,
    pub target_order: usize,
    /// `projection[x] = p(x)`.
    pub projection: Vec<usize>,
    pub fiber_sizes: Vec<usize>,
    pub deck_order: usize,
    /// One generator of A as a permutation, when A is cyclic.
    pub deck_generator: Option<Vec<usize>>,
    pub abelian: bool,
    pub cyclic: bool,
    pub e0: Condition,
    pub e1: Condition,
    pub e2: Condition,
    pub central_extension: bool,
    pub verdict: String,
}

/// Checks (E0)–(E2) for `p` with `A` its deck group, exhaustively.
pub fn verify_central_extension(p: &QuandleHom) -> ExtensionReport {
    let q = p.source();
    let n = q.order();
    let a = deck_group(p);

    let e0 = Condition::from_first((0..n).find_map(|x| {
        (0..n).filter(|&y| p.apply(x) == p.apply(y)).find_map(|y| {
            (0..n)
                .find(|&w| q.op(w, x) != q.op(w, y))
                .map(|w| vec![w, x, y])
        })
    }));

    let e1 = Condition::from_first(a.elements.iter().enumerate().find_map(|(k, alpha)| {
        (0..n).find_map(|x| {
            (0..n)
                .find(|&y| {
                    q.op(alpha.apply(x), y) != alpha.apply(q.op(x, y))
                        || q.op(x, alpha.apply(y)) != q.op(x, y)
                })
                .map(|y| vec![k, x, y])
        })
    }));

    let fibers = p.fibers();
    let e2 = Condition::from_first(fibers.iter().find_map(|fiber| {
        let x = *fiber.first()?;
        let mut orbit: Vec<usize> = a.elements.iter().map(|alpha| alpha.apply(x)).collect();
        orbit.sort_unstable();
        let free = orbit.windows(2).all(|w| w[0] != w[1]);
        let transitive = orbit.len() == fiber.len() && orbit.iter().all(|y| fiber.contains(y));
        (!(free && transitive)).then(|| vec![x])
    }));

    let nontrivial = a.order() > 1;
    let central_extension = e0.pass && e1.pass && e2.pass && a.abelian && nontrivial;
    let verdict = if central_extension {
        format!("central extension with A of order {}", a.order())
    } else if !(e0.pass && e1.pass && e2.pass) {
        "not a central extension (a condition fails)".into()
    } else if !nontrivial {
        "not a central extension (trivial A)".into()
    } else {
        "not a central extension (A not abelian)".into()
    };
    ExtensionReport {
        source: q.name().to_string(),
        target: p.target().name().to_string(),
        source_order: n,
        target_order: p.target().order(),
        projection: p.mapping().to_vec(),
        fiber_sizes: fibers.iter().map(|f| f.len()).collect(),
        deck_order: a.order(),
        deck_generator: a.generator.map(|g| a.elements[g].0.clone()),
        abelian: a.abelian,
        cyclic: a.cyclic,
        e0,
        e1,
        e2,
        central_extension,
        verdict,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberCoherence {
    pub hat_orbit: usize,
    pub fiber: usize,
    pub deck_order: usize,
    /// Every `ĝᵏ(a)` lies over `p(a)`.
    pub orbit_in_fiber: bool,
    /// `w ∗ ĝᵏ(a) = w ∗ a` for every `w` and `k`.
    pub translations_agree: bool,
}

impl FiberCoherence {
    pub fn coherent(&self) -> bool {
        self.hat_orbit == self.fiber
            && self.fiber == self.deck_order
            && self.orbit_in_fiber
            && self.translations_agree
    }
}

pub fn fiber_coherence(q: &TwistSpunQuandle, p: &QuandleHom) -> Result<FiberCoherence, TwistError> {
    let (quandle, a, _) = q.expect_finite()?;
    let orbit = hat_automorphism(q)?.orbit(a);
    let fiber = (0..quandle.order())
        .filter(|&x| p.apply(x) == p.apply(a))
        .count();
    let orbit_in_fiber = orbit.iter().all(|&b| p.apply(b) == p.apply(a));
    let translations_agree = orbit
        .iter()
        .all(|&b| (0..quandle.order()).all(|w| quandle.op(w, b) == quandle.op(w, a)));
    Ok(FiberCoherence {
        hat_orbit: orbit.len(),
        fiber,
        deck_order: deck_group(p).order(),
        orbit_in_fiber,
        translations_agree,
    })
}
