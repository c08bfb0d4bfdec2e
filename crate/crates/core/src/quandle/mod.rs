//! Finite quandles stored as operation tables.
//!
//! The table convention is `table[i][j] = x_i ∗ x_j`: the row element is
//! acted on, the column element acts. Right translations `∗y` are therefore
//! the columns of the table.

mod group;
mod hom;
mod inner;
mod iso;
mod triangle;

use std::collections::VecDeque;
use std::fmt;

use crate::geometry::{build_schlafli_quandle, Symbol};

pub use group::{generalized_alexander, FiniteGroup};
pub use hom::{HomError, QuandleHom};
pub use inner::{InnerGroup, InnerLetter, InnerPermutation};
pub use iso::{element_invariant, find_isomorphism, ElementInvariant};
pub use triangle::{triangle_check, triangles_around};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuandleError {
    #[error("a quandle table must have at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row}, {col}) = {value} is out of range for order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("{labels} labels given for a table of order {order}")]
    LabelCount { labels: usize, order: usize },
    #[error("generator index {index} out of range for order {order}")]
    BadGenerator { index: usize, order: usize },
    #[error("not a quandle: {0}")]
    NotAQuandle(AxiomReport),
    #[error("invalid group table: {0}")]
    BadGroup(String),
    #[error("map is not a group automorphism: {0}")]
    NotAnAutomorphism(String),
}

/// Outcome of checking the three quandle axioms on a table. Failures carry
/// the first offending elements in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomReport {
    Pass,
    /// `x ∗ x ≠ x`.
    Idempotence {
        x: usize,
    },
    /// The right translation `∗y` sends both `x1` and `x2` to the same element.
    RightInvertibility {
        y: usize,
        x1: usize,
        x2: usize,
    },
    /// `(x ∗ y) ∗ z ≠ (x ∗ z) ∗ (y ∗ z)`.
    SelfDistributivity {
        x: usize,
        y: usize,
        z: usize,
    },
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomReport::Pass => write!(f, "all quandle axioms hold"),
            AxiomReport::Idempotence { x } => write!(f, "idempotence fails at x = {x}"),
            AxiomReport::RightInvertibility { y, x1, x2 } => {
                write!(
                    f,
                    "right translation by {y} is not injective: {x1} and {x2} collide"
                )
            }
            AxiomReport::SelfDistributivity { x, y, z } => {
                write!(
                    f,
                    "right self-distributivity fails at (x, y, z) = ({x}, {y}, {z})"
                )
            }
        }
    }
}

/// A finite quandle (or, before [`FiniteQuandle::check_axioms`] passes, a
/// shape-valid binary operation table).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    name: String,
    labels: Vec<String>,
    order: usize,
    table: Vec<u32>,
    /// `x_i ∗̄ x_j`, present only when every column is a permutation.
    inverse: Option<Vec<u32>>,
    generators: Option<Vec<usize>>,
}

impl FiniteQuandle {
    /// Builds a table after validating its shape. Axioms are not checked.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        rows: &[Vec<usize>],
    ) -> Result<Self, QuandleError> {
        let order = rows.len();
        if order == 0 {
            return Err(QuandleError::Empty);
        }
        if labels.len() != order {
            return Err(QuandleError::LabelCount {
                labels: labels.len(),
                order,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(QuandleError::NotSquare {
                    row,
                    len: r.len(),
                    expected: order,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(QuandleError::OutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                table.push(value as u32);
            }
        }
        Ok(Self::from_raw(name.into(), labels, order, table))
    }

    /// Table from an operation closure on `0..order`, labelled by index.
    pub fn from_fn(
        name: impl Into<String>,
        order: usize,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, QuandleError> {
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|i| (0..order).map(|j| op(i, j)).collect())
            .collect();
        Self::new(name, (0..order).map(|i| i.to_string()).collect(), &rows)
    }

    /// Like [`FiniteQuandle::new`], but rejects tables that fail the axioms.
    pub fn verified(
        name: impl Into<String>,
        labels: Vec<String>,
        rows: &[Vec<usize>],
    ) -> Result<Self, QuandleError> {
        let q = Self::new(name, labels, rows)?;
        match q.check_axioms() {
            AxiomReport::Pass => Ok(q),
            failure => Err(QuandleError::NotAQuandle(failure)),
        }
    }

    pub(crate) fn from_raw(
        name: String,
        labels: Vec<String>,
        order: usize,
        table: Vec<u32>,
    ) -> Self {
        let inverse = invert_columns(order, &table);
        FiniteQuandle {
            name,
            labels,
            order,
            table,
            inverse,
            generators: None,
        }
    }

    pub fn with_generators(mut self, generators: Vec<usize>) -> Result<Self, QuandleError> {
        if let Some(&index) = generators.iter().find(|&&g| g >= self.order) {
            return Err(QuandleError::BadGenerator {
                index,
                order: self.order,
            });
        }
        self.generators = Some(generators);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, QuandleError> {
        if labels.len() != self.order {
            return Err(QuandleError::LabelCount {
                labels: labels.len(),
                order: self.order,
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    /// `x ∗ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    /// `x ∗̄ y`, the preimage of `x` under `∗y`.
    ///
    /// Panics if some right translation of the table is not a bijection.
    #[inline]
    pub fn rdiv(&self, x: usize, y: usize) -> usize {
        let inv = self
            .inverse
            .as_ref()
            .expect("right translations must be bijective");
        inv[x * self.order + y] as usize
    }

    pub fn has_bijective_columns(&self) -> bool {
        self.inverse.is_some()
    }

    /// `x ∗ y ∗ y ∗ … ∗ y` with `n` applications (`n < 0` uses `∗̄`).
    pub fn op_pow(&self, mut x: usize, y: usize, n: i64) -> usize {
        for _ in 0..n.unsigned_abs() {
            x = if n > 0 {
                self.op(x, y)
            } else {
                self.rdiv(x, y)
            };
        }
        x
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.op(i, j)).collect())
            .collect()
    }

    /// The right translation `∗y` as a permutation-like map.
    pub fn right_translation(&self, y: usize) -> Vec<usize> {
        (0..self.order).map(|x| self.op(x, y)).collect()
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.order;
        if let Some(x) = (0..n).find(|&x| self.op(x, x) != x) {
            return AxiomReport::Idempotence { x };
        }
        for y in 0..n {
            let mut seen = vec![usize::MAX; n];
            for x in 0..n {
                let z = self.op(x, y);
                if seen[z] != usize::MAX {
                    return AxiomReport::RightInvertibility {
                        y,
                        x1: seen[z],
                        x2: x,
                    };
                }
                seen[z] = x;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(self.op(x, z), self.op(y, z)) {
                        return AxiomReport::SelfDistributivity { x, y, z };
                    }
                }
            }
        }
        AxiomReport::Pass
    }

    pub fn is_quandle(&self) -> bool {
        self.check_axioms().passed()
    }

    /// Sorted list of the elements of the subquandle generated by `seeds`.
    pub fn generated_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        let mut members = Vec::new();
        for &s in seeds {
            if !inside[s] {
                inside[s] = true;
                members.push(s);
            }
        }
        // In a finite quandle ∗̄y is a power of ∗y, so closing under ∗ suffices.
        let mut done = 0;
        while done < members.len() {
            let x = members[done];
            done += 1;
            let mut k = 0;
            while k < members.len() {
                let y = members[k];
                for z in [self.op(x, y), self.op(y, x)] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                    }
                }
                k += 1;
            }
        }
        members.sort_unstable();
        members
    }

    pub fn is_generated_by(&self, seeds: &[usize]) -> bool {
        self.generated_closure(seeds).len() == self.order
    }

    /// Designated generators if they generate, else a greedy generating set
    /// (smallest index not yet covered, repeatedly).
    pub fn generating_set(&self) -> Vec<usize> {
        if let Some(g) = &self.generators {
            if !g.is_empty() && self.is_generated_by(g) {
                return g.clone();
            }
        }
        self.greedy_generating_set()
    }

    pub(crate) fn greedy_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut covered = vec![false; self.order];
        while let Some(next) = covered.iter().position(|c| !c) {
            gens.push(next);
            for x in self.generated_closure(&gens) {
                covered[x] = true;
            }
        }
        gens
    }

    /// Orbits of the inner group, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in 0..n {
                    let z = self.op(x, y);
                    if !seen[z] {
                        seen[z] = true;
                        orbit.push(z);
                        queue.push_back(z);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// True iff the inner group acts transitively.
    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Aligned Cayley table with a header row and column of labels.
    pub fn render_text(&self) -> String {
        let width = self
            .labels
            .iter()
            .map(|l| l.chars().count())
            .max()
            .unwrap_or(1);
        let pad = |s: &str| format!("{s:>width$}");
        let mut out = String::new();
        out.push_str(&pad("*"));
        out.push_str(" |");
        for l in &self.labels {
            out.push(' ');
            out.push_str(&pad(l));
        }
        out.push('\n');
        out.push_str(&"-".repeat(width + 1));
        out.push('+');
        out.push_str(&"-".repeat((width + 1) * self.order));
        out.push('\n');
        for i in 0..self.order {
            out.push_str(&pad(&self.labels[i]));
            out.push_str(" |");
            for j in 0..self.order {
                out.push(' ');
                out.push_str(&pad(&self.labels[self.op(i, j)]));
            }
            out.push('\n');
        }
        out
    }
}

fn invert_columns(order: usize, table: &[u32]) -> Option<Vec<u32>> {
    let mut inv = vec![u32::MAX; order * order];
    for x in 0..order {
        for y in 0..order {
            let z = table[x * order + y] as usize;
            let slot = &mut inv[z * order + y];
            if *slot != u32::MAX {
                return None;
            }
            *slot = x as u32;
        }
    }
    Some(inv)
}

/// Dihedral quandle `R_n`: `x ∗ y = 2y − x (mod n)`.
pub fn dihedral_quandle(n: usize) -> Result<FiniteQuandle, QuandleError> {
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    FiniteQuandle::from_fn(format!("dihedral-{n}"), n, |x, y| (2 * y + n - x) % n)
}

/// Trivial quandle of order `n`: `x ∗ y = x`.
pub fn trivial_quandle(n: usize) -> Result<FiniteQuandle, QuandleError> {
    FiniteQuandle::from_fn(format!("trivial-{n}"), n, |x, _| x)
}

/// Every quandle of order at most `max_order` that the library's
/// constructors produce: trivial and dihedral quandles, the two twisted
/// Alexander quandles of order 4, and the small Schläfli quandles.
pub fn constructor_quandles(max_order: usize) -> Vec<FiniteQuandle> {
    let mut out = Vec::new();
    for k in 1..=max_order {
        out.extend(trivial_quandle(k));
        out.extend(dihedral_quandle(k));
    }
    let z2 = FiniteGroup::cyclic(2).expect("nonempty");
    out.extend(generalized_alexander(&z2.product(&z2), &[0, 2, 3, 1]));
    out.extend(generalized_alexander(
        &FiniteGroup::cyclic(4).expect("nonempty"),
        &[0, 3, 2, 1],
    ));
    for sym in [Symbol::Dihedral, Symbol::Tetrahedron, Symbol::Octahedron] {
        out.extend(build_schlafli_quandle(sym).map(|x| x.quandle));
    }
    out.retain(|q| q.order() <= max_order);
    out
}
