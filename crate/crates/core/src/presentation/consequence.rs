//! Consequences of a relation set: the five closure moves and a bounded
//! search for derivations.
//!
//! Move (e) with `z` a generator already covers what (d) produces, but both
//! are kept as separate moves so derivations can be replayed literally.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::word::{FreeQuandleElement, Letter};

pub type RelationPair = (FreeQuandleElement, FreeQuandleElement);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// (a) add `(x, x)`.
    Reflexive(FreeQuandleElement),
    /// (b) add `(y, x)` for the pair at this index.
    Symmetric(usize),
    /// (c) add `(x, z)` for pairs `(x, y)` and `(y, z)` at these indices.
    Transitive(usize, usize),
    /// (d) add `(x∗s, y∗s)` and `(x∗̄s, y∗̄s)` for a generator `s`.
    RightGenerator(usize, usize),
    /// (e) add `(z∗x, z∗y)` and `(z∗̄x, z∗̄y)`.
    LeftElement(usize, FreeQuandleElement),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConsequenceError {
    #[error("relation index {index} out of range ({len} pairs)")]
    NoSuchPair { index: usize, len: usize },
    #[error("pairs {first} and {second} do not chain: the first's right side differs from the second's left side")]
    NotChained { first: usize, second: usize },
}

fn pair(r: &[RelationPair], index: usize) -> Result<&RelationPair, ConsequenceError> {
    r.get(index).ok_or(ConsequenceError::NoSuchPair {
        index,
        len: r.len(),
    })
}

/// The pairs one move adds (possibly already present).
pub fn move_additions(
    r: &[RelationPair],
    mv: &Move,
) -> Result<Vec<RelationPair>, ConsequenceError> {
    Ok(match mv {
        Move::Reflexive(x) => vec![(x.clone(), x.clone())],
        Move::Symmetric(i) => {
            let (x, y) = pair(r, *i)?;
            vec![(y.clone(), x.clone())]
        }
        Move::Transitive(i, j) => {
            let (x, y) = pair(r, *i)?;
            let (y2, z) = pair(r, *j)?;
            if y != y2 {
                return Err(ConsequenceError::NotChained {
                    first: *i,
                    second: *j,
                });
            }
            vec![(x.clone(), z.clone())]
        }
        Move::RightGenerator(i, s) => {
            let (x, y) = pair(r, *i)?;
            [false, true]
                .iter()
                .map(|&inv| (x.act(Letter::new(*s, inv)), y.act(Letter::new(*s, inv))))
                .collect()
        }
        Move::LeftElement(i, z) => {
            let (x, y) = pair(r, *i)?;
            [false, true]
                .iter()
                .map(|&inv| (z.op(x, inv), z.op(y, inv)))
                .collect()
        }
    })
}

/// `r` followed by the pairs `mv` adds.
pub fn consequence_step(
    r: &[RelationPair],
    mv: &Move,
) -> Result<Vec<RelationPair>, ConsequenceError> {
    let mut out = r.to_vec();
    out.extend(move_additions(r, mv)?);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    Unknown,
}

/// Search stops (answering `Unknown`) once this many pairs are in play.
pub const PAIR_CAP: usize = 20_000;

struct Classes {
    ids: HashMap<FreeQuandleElement, usize>,
    parent: Vec<usize>,
}

impl Classes {
    fn id(&mut self, x: &FreeQuandleElement) -> usize {
        if let Some(&i) = self.ids.get(x) {
            return i;
        }
        let i = self.parent.len();
        self.ids.insert(x.clone(), i);
        self.parent.push(i);
        i
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: &FreeQuandleElement, b: &FreeQuandleElement) {
        let (a, b) = (self.id(a), self.id(b));
        let (a, b) = (self.find(a), self.find(b));
        self.parent[a.max(b)] = a.min(b);
    }

    fn same(&mut self, a: &FreeQuandleElement, b: &FreeQuandleElement) -> bool {
        let (a, b) = (self.id(a), self.id(b));
        self.find(a) == self.find(b)
    }
}

/// Whether `target` follows from `r` within `depth` rounds of moves.
///
/// Depth 0 accepts only pairs literally in `r`. Each further round applies
/// (d) for every generator and (e) for every `z` drawn from the generators,
/// the elements of `r` and of `target` to every pair found so far, then
/// closes under (a)–(c). Never answers no.
pub fn is_consequence_bounded(r: &[RelationPair], target: &RelationPair, depth: usize) -> Verdict {
    if r.contains(target) {
        return Verdict::Yes;
    }
    if depth == 0 {
        return Verdict::Unknown;
    }
    let (tx, ty) = target;
    if tx == ty {
        return Verdict::Yes;
    }
    let generators = r
        .iter()
        .flat_map(|(x, y)| [x.max_generator(), y.max_generator()])
        .chain([tx.max_generator(), ty.max_generator()])
        .max()
        .unwrap_or(0)
        + 1;
    let mut pool: Vec<FreeQuandleElement> =
        (0..generators).map(FreeQuandleElement::generator).collect();
    for (x, y) in r.iter().chain([target]) {
        for e in [x, y] {
            if !pool.contains(e) {
                pool.push(e.clone());
            }
        }
    }

    let mut classes = Classes {
        ids: HashMap::new(),
        parent: Vec::new(),
    };
    let mut edges: Vec<RelationPair> = Vec::new();
    let mut seen: std::collections::HashSet<RelationPair> = std::collections::HashSet::new();
    for p in r {
        if seen.insert(p.clone()) {
            classes.union(&p.0, &p.1);
            edges.push(p.clone());
        }
    }
    if classes.same(tx, ty) {
        return Verdict::Yes;
    }
    for _ in 1..depth {
        let mut fresh = Vec::new();
        for (x, y) in &edges {
            for s in 0..generators {
                for inv in [false, true] {
                    fresh.push((x.act(Letter::new(s, inv)), y.act(Letter::new(s, inv))));
                }
            }
            for z in &pool {
                for inv in [false, true] {
                    fresh.push((z.op(x, inv), z.op(y, inv)));
                }
            }
        }
        for p in fresh {
            if p.0 != p.1 && seen.insert(p.clone()) {
                classes.union(&p.0, &p.1);
                edges.push(p);
            }
        }
        if classes.same(tx, ty) {
            return Verdict::Yes;
        }
        if edges.len() > PAIR_CAP {
            return Verdict::Unknown;
        }
    }
    Verdict::Unknown
}
