use super::{FiniteQuandle, QuandleError};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        if rows
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(QuandleError::BadGroup(
                "table is not a closed n×n grid".into(),
            ));
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        let mul = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| QuandleError::BadGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| mul(x, y) == identity)
                .ok_or_else(|| QuandleError::BadGroup(format!("element {x} has no inverse")))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(QuandleError::BadGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inverses,
        })
    }

    /// ℤ/n under addition.
    pub fn cyclic(n: usize) -> Result<Self, QuandleError> {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(&rows)
    }

    /// Direct product; element `(g, h)` has index `g * |H| + h`.
    pub fn product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order, other.order);
        let rows: Vec<Vec<usize>> = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Self::from_table(&rows).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn is_automorphism(&self, phi: &[usize]) -> bool {
        self.check_automorphism(phi).is_ok()
    }

    fn check_automorphism(&self, phi: &[usize]) -> Result<(), QuandleError> {
        let n = self.order;
        if phi.len() != n || phi.iter().any(|&x| x >= n) {
            return Err(QuandleError::NotAnAutomorphism(
                "wrong length or out-of-range image".into(),
            ));
        }
        let mut hit = vec![false; n];
        for &x in phi {
            if std::mem::replace(&mut hit[x], true) {
                return Err(QuandleError::NotAnAutomorphism(format!("{x} is hit twice")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if phi[self.mul(a, b)] != self.mul(phi[a], phi[b]) {
                    return Err(QuandleError::NotAnAutomorphism(format!(
                        "not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Generalized Alexander quandle on `G` twisted by the automorphism `phi`:
/// `x ∗ y = phi(x·y⁻¹)·y`.
pub fn generalized_alexander(
    group: &FiniteGroup,
    phi: &[usize],
) -> Result<FiniteQuandle, QuandleError> {
    group.check_automorphism(phi)?;
    let q = FiniteQuandle::from_fn(
        format!("alexander-{}", group.order()),
        group.order(),
        |x, y| group.mul(phi[group.mul(x, group.inv(y))], y),
    )?;
    debug_assert!(q.is_quandle());
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{dihedral_quandle, trivial_quandle};

    #[test]
    fn negation_on_z3_gives_dihedral_three() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let q = generalized_alexander(&g, &[0, 2, 1]).unwrap();
        assert_eq!(q.rows(), dihedral_quandle(3).unwrap().rows());
    }

    #[test]
    fn identity_automorphism_gives_trivial_quandle() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let q = generalized_alexander(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(q.rows(), trivial_quandle(4).unwrap().rows());
    }

    #[test]
    fn klein_four_with_order_three_automorphism_is_connected() {
        let v4 = FiniteGroup::cyclic(2)
            .unwrap()
            .product(&FiniteGroup::cyclic(2).unwrap());
        // elements 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1); cycle the three involutions
        let phi = [0, 2, 3, 1];
        assert!(v4.is_automorphism(&phi));
        let q = generalized_alexander(&v4, &phi).unwrap();
        assert!(q.is_quandle());
        assert_eq!(q.order(), 4);
        assert!(q.is_connected());
    }

    #[test]
    fn rejects_non_automorphisms() {
        let g = FiniteGroup::cyclic(3).unwrap();
        assert!(matches!(
            generalized_alexander(&g, &[1, 2, 0]),
            Err(QuandleError::NotAnAutomorphism(_))
        ));
        assert!(generalized_alexander(&g, &[0, 0, 1]).is_err());
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).is_err());
    }
}
