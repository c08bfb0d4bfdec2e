//! Realizing a finitely presented quandle as a finite table.
//!
//! Rows of the working table are classes of quandle elements; column `2g`
//! is the right translation `∗g` and column `2g+1` is `∗̄g`. The table is
//! filled breadth-first (rows in creation order), each row is scanned
//! against every operator relator before later rows are opened, and
//! coincidences are merged with union-find.
//!
//! Starting facts: each generator row is fixed by its own translation
//! (idempotence), and each relation `s·u = t·v` glues two traced rows.
//! Every relation also forces `∗x = ∗y`, which enters as the operator
//! relator `u⁻¹sū v⁻¹t⁻¹v`. When a pass closes, the translation of every
//! class is read off its representative word and checked against
//! `∗(x∗c) = c⁻¹(∗x)c`; each disagreement is itself a consequence and is
//! added as a new relator before the next pass. Only consequences of the
//! presentation are ever merged, so a closed, consistent table is the
//! presented quandle.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::eval::evaluate_term;
use super::term::Presentation;
use super::word::{cyclically_reduce, inverse_word, FreeQuandleElement, Letter};
use crate::quandle::{FiniteQuandle, HomError, QuandleError, QuandleHom};

pub const DEFAULT_BUDGET: usize = 20_000;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    /// Rows ever opened, including rows later merged away.
    pub defined: usize,
    pub merges: usize,
    pub deductions: usize,
    /// Operator relators in force at the end.
    pub relators: usize,
    pub passes: usize,
}

#[derive(Debug, Clone)]
pub struct FiniteRealization {
    /// Labels are representative words such as `a*c/a`.
    pub quandle: FiniteQuandle,
    /// Class of each generator, in presentation order.
    pub generator_images: Vec<usize>,
    /// A free-quandle word for every class.
    pub representatives: Vec<FreeQuandleElement>,
}

impl FiniteRealization {
    /// The homomorphism to `target` sending generator `g` to `assign[g]`.
    pub fn induced_hom(
        &self,
        assign: &[usize],
        target: &FiniteQuandle,
    ) -> Result<QuandleHom, HomError> {
        let pairs: Vec<(usize, usize)> = self
            .generator_images
            .iter()
            .zip(assign)
            .map(|(&x, &fx)| (x, fx))
            .collect();
        QuandleHom::from_generators(&self.quandle, target, &pairs)
    }
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Finite(FiniteRealization),
    /// Not evidence of infiniteness.
    BudgetExceeded {
        classes_seen: usize,
    },
}

#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub outcome: Outcome,
    pub stats: EnumerationStats,
}

impl EnumerationResult {
    pub fn finite(&self) -> Option<&FiniteRealization> {
        match &self.outcome {
            Outcome::Finite(r) => Some(r),
            Outcome::BudgetExceeded { .. } => None,
        }
    }

    pub fn into_finite(self) -> Option<FiniteRealization> {
        match self.outcome {
            Outcome::Finite(r) => Some(r),
            Outcome::BudgetExceeded { .. } => None,
        }
    }

    pub fn order(&self) -> Option<usize> {
        self.finite().map(|r| r.quandle.order())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("the budget must allow at least one class per generator")]
    BudgetTooSmall,
    /// The closed table failed its own verification; indicates a bug.
    #[error("closed table failed verification: {0}")]
    Unsound(String),
}

struct Overflow;

struct Table {
    ncols: usize,
    cells: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    budget: usize,
    stats: EnumerationStats,
}

impl Table {
    fn rows(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, r: u32, c: usize) -> u32 {
        self.cells[r as usize * self.ncols + c]
    }

    fn set(&mut self, r: u32, c: usize, v: u32) {
        self.cells[r as usize * self.ncols + c] = v;
    }

    fn live(&self, r: u32) -> bool {
        self.parent[r as usize] == r
    }

    fn live_count(&self) -> usize {
        (0..self.rows() as u32).filter(|&r| self.live(r)).count()
    }

    fn alloc(&mut self) -> Result<u32, Overflow> {
        if self.rows() >= self.budget {
            return Err(Overflow);
        }
        let r = self.rows() as u32;
        self.cells.extend(std::iter::repeat_n(NONE, self.ncols));
        self.parent.push(r);
        self.stats.defined += 1;
        Ok(r)
    }

    fn define(&mut self, r: u32, c: usize) -> Result<u32, Overflow> {
        let n = self.alloc()?;
        self.set(r, c, n);
        self.set(n, c ^ 1, r);
        Ok(n)
    }

    fn find(&mut self, r: u32) -> u32 {
        let mut root = r;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut x = r;
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop as usize] = keep;
        self.queue.push(drop);
        self.stats.merges += 1;
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for c in 0..self.ncols {
                let f = self.get(e, c);
                if f == NONE {
                    continue;
                }
                if self.get(f, c ^ 1) == e {
                    self.set(f, c ^ 1, NONE);
                }
                let e1 = self.find(e);
                let f1 = self.find(f);
                let x = self.get(e1, c);
                if x != NONE {
                    self.merge(f1, x);
                    continue;
                }
                let y = self.get(f1, c ^ 1);
                if y != NONE {
                    self.merge(e1, y);
                } else {
                    self.set(e1, c, f1);
                    self.set(f1, c ^ 1, e1);
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `word` at row `r`, opening rows until the relator closes.
    fn scan_and_fill(&mut self, r: u32, word: &[usize]) -> Result<(), Overflow> {
        if word.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (r, r);
        let mut i = 0isize;
        let mut j = word.len() as isize - 1;
        loop {
            while i <= j && self.get(f, word[i as usize]) != NONE {
                f = self.get(f, word[i as usize]);
                i += 1;
            }
            if i > j {
                if f != r {
                    self.coincidence(f, r);
                }
                return Ok(());
            }
            while j >= i && self.get(b, word[j as usize] ^ 1) != NONE {
                b = self.get(b, word[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let c = word[i as usize];
                self.set(f, c, b);
                self.set(b, c ^ 1, f);
                self.stats.deductions += 1;
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }

    fn trace(&mut self, start: u32, word: &[usize]) -> Result<u32, Overflow> {
        let mut cur = self.find(start);
        for &c in word {
            let next = self.get(cur, c);
            cur = if next == NONE {
                self.define(cur, c)?
            } else {
                next
            };
        }
        Ok(cur)
    }
}

fn columns(word: &[Letter]) -> Vec<usize> {
    word.iter().map(|l| l.index()).collect()
}

/// Relator saying the translations of `x` and `y` agree.
fn operator_relator(x: &FreeQuandleElement, y: &FreeQuandleElement) -> Vec<Letter> {
    let mut w = x.translation_word(false);
    w.extend(inverse_word(&y.translation_word(false)));
    cyclically_reduce(&mut w);
    w
}

pub fn enumerate_presentation(
    p: &Presentation,
    budget: usize,
) -> Result<EnumerationResult, EnumerationError> {
    let n = p.generators().len();
    if budget < n {
        return Err(EnumerationError::BudgetTooSmall);
    }
    let mut table = Table {
        ncols: 2 * n,
        cells: Vec::new(),
        parent: Vec::new(),
        queue: Vec::new(),
        budget,
        stats: EnumerationStats::default(),
    };
    let mut relators: Vec<Vec<usize>> = Vec::new();
    let mut known: HashSet<Vec<usize>> = HashSet::new();
    let mut add_relator = |w: Vec<Letter>, relators: &mut Vec<Vec<usize>>| {
        let cols = columns(&w);
        if !cols.is_empty() && known.insert(cols.clone()) {
            relators.push(cols);
            true
        } else {
            false
        }
    };

    let exceeded = |t: &Table| EnumerationResult {
        outcome: Outcome::BudgetExceeded {
            classes_seen: t.live_count(),
        },
        stats: EnumerationStats {
            relators: 0,
            ..t.stats.clone()
        },
    };

    for g in 0..n {
        let r = table
            .alloc()
            .map_err(|_| EnumerationError::BudgetTooSmall)?;
        table.set(r, 2 * g, r);
        table.set(r, 2 * g + 1, r);
    }
    for (x, y) in p.relation_elements() {
        add_relator(operator_relator(&x, &y), &mut relators);
        let Ok(rx) = table.trace(x.base() as u32, &columns(x.conjugator())) else {
            return Ok(exceeded(&table));
        };
        let Ok(ry) = table.trace(y.base() as u32, &columns(y.conjugator())) else {
            return Ok(exceeded(&table));
        };
        table.coincidence(rx, ry);
    }

    loop {
        table.stats.passes += 1;
        let mut r = 0u32;
        while (r as usize) < table.rows() {
            if table.live(r) {
                for rel in &relators {
                    if table.scan_and_fill(r, rel).is_err() {
                        return Ok(exceeded(&table));
                    }
                    if !table.live(r) {
                        break;
                    }
                }
                if table.live(r) {
                    for c in 0..table.ncols {
                        if table.get(r, c) == NONE && table.define(r, c).is_err() {
                            return Ok(exceeded(&table));
                        }
                    }
                }
            }
            r += 1;
        }

        let closed = Closed::read(&mut table, n);
        let mut added = false;
        for w in closed.inconsistencies() {
            added |= add_relator(w, &mut relators);
        }
        if !added {
            table.stats.relators = relators.len();
            let realization = closed.realize(p)?;
            return Ok(EnumerationResult {
                outcome: Outcome::Finite(realization),
                stats: table.stats,
            });
        }
    }
}

/// A complete table, compacted to classes numbered in breadth-first order
/// from the generators.
struct Closed {
    ncols: usize,
    /// `next[x][c]`
    next: Vec<Vec<usize>>,
    reps: Vec<FreeQuandleElement>,
    generator_images: Vec<usize>,
    /// Translation of each class, as a permutation.
    ops: Vec<Vec<usize>>,
}

impl Closed {
    fn read(table: &mut Table, n: usize) -> Closed {
        let ncols = table.ncols;
        let mut index = vec![usize::MAX; table.rows()];
        let mut order: Vec<u32> = Vec::new();
        let mut reps: Vec<FreeQuandleElement> = Vec::new();
        let mut words: Vec<Vec<Letter>> = Vec::new();
        let mut generator_images = Vec::with_capacity(n);
        for g in 0..n {
            let root = table.find(g as u32);
            if index[root as usize] == usize::MAX {
                index[root as usize] = order.len();
                order.push(root);
                reps.push(FreeQuandleElement::generator(g));
                words.push(Vec::new());
            }
            generator_images.push(index[root as usize]);
        }
        // Breadth-first: generator classes first, then their translates.
        let mut head = 0;
        while head < order.len() {
            let row = order[head];
            for c in 0..ncols {
                let to = table.find(table.get(row, c));
                if index[to as usize] == usize::MAX {
                    index[to as usize] = order.len();
                    order.push(to);
                    let mut w = words[head].clone();
                    w.push(Letter::from_index(c));
                    reps.push(FreeQuandleElement::new(reps[head].base(), w.clone()));
                    words.push(w);
                }
            }
            head += 1;
        }
        let next: Vec<Vec<usize>> = order
            .iter()
            .map(|&row| {
                (0..ncols)
                    .map(|c| index[table.find(table.get(row, c)) as usize])
                    .collect()
            })
            .collect();
        let size = order.len();
        let ops = reps
            .iter()
            .map(|x| {
                let w = columns(&x.translation_word(false));
                (0..size)
                    .map(|z| w.iter().fold(z, |acc, &c| next[acc][c]))
                    .collect()
            })
            .collect();
        Closed {
            ncols,
            next,
            reps,
            generator_images,
            ops,
        }
    }

    /// Relators witnessing every place the translations are inconsistent.
    fn inconsistencies(&self) -> Vec<Vec<Letter>> {
        let size = self.reps.len();
        let mut out = Vec::new();
        for (g, &x) in self.generator_images.iter().enumerate() {
            if (0..size).any(|z| self.ops[x][z] != self.next[z][2 * g]) {
                out.push(operator_relator(
                    &FreeQuandleElement::generator(g),
                    &self.reps[x],
                ));
            }
        }
        for x in 0..size {
            for c in (0..self.ncols).step_by(2) {
                let y = self.next[x][c];
                let agrees = (0..size)
                    .all(|z| self.next[self.ops[x][self.next[z][c ^ 1]]][c] == self.ops[y][z]);
                if !agrees {
                    let moved = self.reps[x].act(Letter::from_index(c));
                    out.push(operator_relator(&moved, &self.reps[y]));
                }
            }
        }
        out
    }

    fn realize(self, p: &Presentation) -> Result<FiniteRealization, EnumerationError> {
        let size = self.reps.len();
        let rows: Vec<Vec<usize>> = (0..size)
            .map(|x| (0..size).map(|y| self.ops[y][x]).collect())
            .collect();
        let labels = self
            .reps
            .iter()
            .map(|r| r.display(p.generators()).to_string())
            .collect();
        let unsound = |e: QuandleError| EnumerationError::Unsound(e.to_string());
        let quandle = FiniteQuandle::verified("enumerated", labels, &rows)
            .map_err(unsound)?
            .with_generators(self.generator_images.clone())
            .map_err(unsound)?;
        for (k, rel) in p.relations().iter().enumerate() {
            let lhs = evaluate_term(&rel.lhs, &self.generator_images, &quandle);
            let rhs = evaluate_term(&rel.rhs, &self.generator_images, &quandle);
            if lhs != rhs {
                return Err(EnumerationError::Unsound(format!(
                    "relation {k} fails in the closed table"
                )));
            }
        }
        if !quandle.is_generated_by(&self.generator_images) {
            return Err(EnumerationError::Unsound(
                "generators do not generate the table".into(),
            ));
        }
        Ok(FiniteRealization {
            quandle,
            generator_images: self.generator_images,
            representatives: self.reps,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;
    use crate::quandle::{dihedral_quandle, find_isomorphism};

    fn order_of(src: &str) -> Option<usize> {
        enumerate_presentation(&parse_presentation(src).unwrap(), DEFAULT_BUDGET)
            .unwrap()
            .order()
    }

    fn twist(m: usize) -> String {
        format!("< a, c | (a*c)*a = c, c *^{m} a = c >")
    }

    #[test]
    fn free_quandle_on_one_generator_is_a_point() {
        assert_eq!(order_of("< v | >"), Some(1));
    }

    #[test]
    fn trivial_quandle_on_two_generators() {
        assert_eq!(order_of("< a, b | a*b = a, b*a = b >"), Some(2));
    }

    #[test]
    fn dihedral_three_from_its_presentation() {
        let r = enumerate_presentation(&parse_presentation(&twist(2)).unwrap(), DEFAULT_BUDGET)
            .unwrap();
        let q = r.finite().unwrap();
        assert_eq!(q.quandle.order(), 3);
        assert!(find_isomorphism(&q.quandle, &dihedral_quandle(3).unwrap()).is_some());
        assert_eq!(q.quandle.label(0), "a");
    }

    #[test]
    fn twist_spun_orders() {
        assert_eq!(order_of(&twist(5)), Some(120));
        assert_eq!(order_of(&twist(1)), Some(1));
        assert_eq!(order_of(&twist(2)), Some(3));
        assert_eq!(order_of(&twist(3)), Some(8));
        assert_eq!(order_of(&twist(4)), Some(24));
    }

    #[test]
    fn tetrahedral_presentation() {
        assert_eq!(
            order_of("< v, w | (v*w)*v = w, (w*v)*w = v, w *^3 v = w >"),
            Some(4)
        );
    }

    #[test]
    fn dihedral_presentations() {
        assert_eq!(
            order_of("< x, y | x*y*y = x, y*x*x = y, x*y*x = y >"),
            Some(3)
        );
        assert_eq!(
            order_of("< x, y | x*y*y = x, y*x*x = y, x*y*x*y = y*x >"),
            Some(5)
        );
    }

    #[test]
    fn budget_is_reported() {
        let p = parse_presentation(&twist(6)).unwrap();
        let r = enumerate_presentation(&p, 2000).unwrap();
        match r.outcome {
            Outcome::BudgetExceeded { classes_seen } => assert!(classes_seen > 0),
            Outcome::Finite(f) => panic!("closed at order {}", f.quandle.order()),
        }
        let r = enumerate_presentation(&p, DEFAULT_BUDGET).unwrap();
        assert!(r.finite().is_none());
        assert!(matches!(
            enumerate_presentation(&p, 1),
            Err(EnumerationError::BudgetTooSmall)
        ));
    }

    #[test]
    fn representatives_evaluate_to_their_class() {
        let r = enumerate_presentation(&parse_presentation(&twist(3)).unwrap(), DEFAULT_BUDGET)
            .unwrap();
        let f = r.finite().unwrap();
        for (x, rep) in f.representatives.iter().enumerate() {
            assert_eq!(
                super::super::eval::evaluate_word(rep, &f.generator_images, &f.quandle),
                Ok(x)
            );
        }
    }
}
