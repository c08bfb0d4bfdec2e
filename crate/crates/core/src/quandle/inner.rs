use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::FiniteQuandle;

/// One factor `(∗x)` or `(∗x)⁻¹ = (∗̄x)` of an inner automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InnerLetter {
    pub element: usize,
    pub inverse: bool,
}

/// A permutation of the elements together with a word of right translations
/// producing it. Letters apply left to right: `y ↦ (…((y ∗ x₁) ∗ x₂)…)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerPermutation {
    perm: Vec<u32>,
    word: Vec<InnerLetter>,
}

impl InnerPermutation {
    pub fn identity(order: usize) -> Self {
        InnerPermutation {
            perm: (0..order as u32).collect(),
            word: Vec::new(),
        }
    }

    pub fn from_word(q: &FiniteQuandle, word: Vec<InnerLetter>) -> Self {
        let perm = (0..q.order())
            .map(|y| {
                word.iter().fold(y, |acc, l| {
                    if l.inverse {
                        q.rdiv(acc, l.element)
                    } else {
                        q.op(acc, l.element)
                    }
                }) as u32
            })
            .collect();
        InnerPermutation { perm, word }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x] as usize
    }

    pub fn perm(&self) -> Vec<usize> {
        self.perm.iter().map(|&p| p as usize).collect()
    }

    pub fn word(&self) -> &[InnerLetter] {
        &self.word
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &InnerPermutation) -> InnerPermutation {
        InnerPermutation {
            perm: self.perm.iter().map(|&x| other.perm[x as usize]).collect(),
            word: self.word.iter().chain(&other.word).copied().collect(),
        }
    }

    pub fn inverse(&self) -> InnerPermutation {
        let mut perm = vec![0u32; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            perm[y as usize] = x as u32;
        }
        let word = self
            .word
            .iter()
            .rev()
            .map(|l| InnerLetter {
                element: l.element,
                inverse: !l.inverse,
            })
            .collect();
        InnerPermutation { perm, word }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// Orbit of `x` under the cyclic group generated by this permutation.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut orbit = vec![x];
        let mut y = self.apply(x);
        while y != x {
            orbit.push(y);
            y = self.apply(y);
        }
        orbit
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.perm.len()];
        let mut lcm = 1usize;
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.perm[x] as usize;
                len += 1;
            }
            lcm = num_integer::lcm(lcm, len);
        }
        lcm
    }
}

/// The inner automorphism group, closed under composition.
#[derive(Clone, Debug)]
pub struct InnerGroup {
    elements: Vec<InnerPermutation>,
}

impl InnerGroup {
    /// Breadth-first closure of the right translations by a generating set of
    /// the quandle (these generate the whole inner group). Each element keeps
    /// a shortest word.
    pub fn of(q: &FiniteQuandle) -> Self {
        let gens: Vec<InnerPermutation> = q
            .generating_set()
            .into_iter()
            .flat_map(|g| {
                [false, true].map(|inverse| {
                    InnerPermutation::from_word(
                        q,
                        vec![InnerLetter {
                            element: g,
                            inverse,
                        }],
                    )
                })
            })
            .collect();
        let mut elements = vec![InnerPermutation::identity(q.order())];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(elements[0].perm.clone(), 0)]);
        let mut head = 0;
        while head < elements.len() {
            for g in &gens {
                let next = elements[head].then(g);
                if !index.contains_key(&next.perm) {
                    index.insert(next.perm.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }
        InnerGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[InnerPermutation] {
        &self.elements
    }

    pub fn is_transitive(&self) -> bool {
        let Some(first) = self.elements.first() else {
            return true;
        };
        let n = first.perm.len();
        let mut reached = vec![false; n];
        for g in &self.elements {
            reached[g.apply(0)] = true;
        }
        reached.iter().all(|&r| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{dihedral_quandle, trivial_quandle};

    #[test]
    fn dihedral_three_has_symmetric_inner_group() {
        let q = dihedral_quandle(3).unwrap();
        let inn = InnerGroup::of(&q);
        assert_eq!(inn.order(), 6);
        assert!(inn.is_transitive());
        for g in inn.elements() {
            assert_eq!(
                InnerPermutation::from_word(&q, g.word().to_vec()).perm,
                g.perm
            );
            assert!(g.then(&g.inverse()).is_identity());
        }
    }

    #[test]
    fn trivial_inner_groups() {
        assert_eq!(InnerGroup::of(&trivial_quandle(1).unwrap()).order(), 1);
        let t2 = InnerGroup::of(&trivial_quandle(2).unwrap());
        assert_eq!(t2.order(), 1);
        assert!(!t2.is_transitive());
    }

    #[test]
    fn orbit_and_order() {
        let q = dihedral_quandle(5).unwrap();
        let g = InnerPermutation::from_word(
            &q,
            vec![
                InnerLetter {
                    element: 0,
                    inverse: false,
                },
                InnerLetter {
                    element: 1,
                    inverse: false,
                },
            ],
        );
        // y ↦ 2 − (−y) = y + 2 on ℤ/5
        assert_eq!(g.orbit(0), vec![0, 2, 4, 1, 3]);
        assert_eq!(g.order(), 5);
    }
}
