use super::hom::{extend_partial, verify_hom};
use super::{FiniteQuandle, QuandleHom};

/// Per-element isomorphism invariant: cycle type of `∗x`, the shape of the
/// left map `y ↦ x ∗ y`, and the number of fixed points of `∗x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementInvariant {
    right_cycle_type: Vec<usize>,
    left_cycle_type: Vec<usize>,
    left_image_size: usize,
    fixed_points: usize,
}

pub fn element_invariant(q: &FiniteQuandle, x: usize) -> ElementInvariant {
    let right = q.right_translation(x);
    let left: Vec<usize> = (0..q.order()).map(|y| q.op(x, y)).collect();
    let mut image = left.clone();
    image.sort_unstable();
    image.dedup();
    ElementInvariant {
        right_cycle_type: cycle_type(&right),
        left_cycle_type: cycle_type(&left),
        left_image_size: image.len(),
        fixed_points: right.iter().enumerate().filter(|(i, &v)| *i == v).count(),
    }
}

/// Sorted lengths of the cycles of a self-map (its eventually periodic part
/// when it is not a permutation).
fn cycle_type(f: &[usize]) -> Vec<usize> {
    let n = f.len();
    // state: 0 unvisited, 1 on current path, 2 finished
    let mut state = vec![0u8; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        let mut path = Vec::new();
        let mut x = start;
        while state[x] == 0 {
            state[x] = 1;
            path.push(x);
            x = f[x];
        }
        if state[x] == 1 {
            let pos = path.iter().position(|&p| p == x).expect("on path");
            lengths.push(path.len() - pos);
        }
        for p in path {
            state[p] = 2;
        }
    }
    lengths.sort_unstable();
    lengths
}

/// Searches for an isomorphism `q1 → q2`.
///
/// The search assigns images to a generating set of `q1` (taken greedily by
/// smallest uncovered index, so the first success in increasing candidate
/// order is the lexicographically smallest mapping), prunes candidates whose
/// invariant differs, and checks each partial assignment by extending it over
/// the generated subquandle. The returned mapping is re-verified.
pub fn find_isomorphism(q1: &FiniteQuandle, q2: &FiniteQuandle) -> Option<QuandleHom> {
    if q1.order() != q2.order() {
        return None;
    }
    let inv1: Vec<ElementInvariant> = (0..q1.order()).map(|x| element_invariant(q1, x)).collect();
    let inv2: Vec<ElementInvariant> = (0..q2.order()).map(|x| element_invariant(q2, x)).collect();
    let (mut s1, mut s2) = (inv1.clone(), inv2.clone());
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return None;
    }
    let gens = q1.greedy_generating_set();
    let mut assignment = Vec::with_capacity(gens.len());
    let mapping = search(q1, q2, &gens, &inv1, &inv2, &mut assignment)?;
    debug_assert!(verify_hom(q1, q2, &mapping).is_ok());
    QuandleHom::new(q1.clone(), q2.clone(), mapping)
        .ok()
        .filter(QuandleHom::is_bijective)
}

fn search(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    gens: &[usize],
    inv1: &[ElementInvariant],
    inv2: &[ElementInvariant],
    assignment: &mut Vec<(usize, usize)>,
) -> Option<Vec<usize>> {
    let depth = assignment.len();
    if depth == gens.len() {
        let partial = extend_partial(q1, q2, assignment, true).ok()?;
        return partial.into_iter().collect();
    }
    let g = gens[depth];
    for candidate in 0..q2.order() {
        if inv1[g] != inv2[candidate] || assignment.iter().any(|&(_, img)| img == candidate) {
            continue;
        }
        assignment.push((g, candidate));
        if extend_partial(q1, q2, assignment, true).is_ok() {
            if let Some(found) = search(q1, q2, gens, inv1, inv2, assignment) {
                return Some(found);
            }
        }
        assignment.pop();
    }
    None
}
