use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{ExactVector, Sqrt5Scalar};

/// The tessellations with a Schläfli quandle here. `{3,2}` and `{3,6}` have
/// no polytope model: the first is built algebraically, the second lazily.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    #[serde(rename = "{3,2}")]
    Dihedral,
    #[serde(rename = "{3,3}")]
    Tetrahedron,
    #[serde(rename = "{3,4}")]
    Octahedron,
    #[serde(rename = "{3,5}")]
    Icosahedron,
    #[serde(rename = "{3,6}")]
    Triangular,
    #[serde(rename = "{3,3,4}")]
    Cell16,
    #[serde(rename = "{3,4,3}")]
    Cell24,
    #[serde(rename = "{3,3,5}")]
    Cell600,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("unsupported Schläfli symbol `{0}`")]
    Unsupported(String),
    #[error("{0} has no exact polytope model")]
    NoModel(Symbol),
    #[error("vertex index {index} out of range ({count} vertices)")]
    NoSuchVertex { index: usize, count: usize },
    #[error("the two points must differ")]
    Degenerate,
}

impl Symbol {
    pub const ALL: [Symbol; 8] = [
        Symbol::Dihedral,
        Symbol::Tetrahedron,
        Symbol::Octahedron,
        Symbol::Icosahedron,
        Symbol::Triangular,
        Symbol::Cell16,
        Symbol::Cell24,
        Symbol::Cell600,
    ];

    /// `{3,m}` for `m = 2..=6`.
    pub fn tessellation(m: usize) -> Option<Symbol> {
        Some(match m {
            2 => Symbol::Dihedral,
            3 => Symbol::Tetrahedron,
            4 => Symbol::Octahedron,
            5 => Symbol::Icosahedron,
            6 => Symbol::Triangular,
            _ => return None,
        })
    }

    /// The 16-, 24- and 600-cell.
    pub fn cell(cells: usize) -> Option<Symbol> {
        Some(match cells {
            16 => Symbol::Cell16,
            24 => Symbol::Cell24,
            600 => Symbol::Cell600,
            _ => return None,
        })
    }

    pub fn entries(self) -> &'static [u32] {
        match self {
            Symbol::Dihedral => &[3, 2],
            Symbol::Tetrahedron => &[3, 3],
            Symbol::Octahedron => &[3, 4],
            Symbol::Icosahedron => &[3, 5],
            Symbol::Triangular => &[3, 6],
            Symbol::Cell16 => &[3, 3, 4],
            Symbol::Cell24 => &[3, 4, 3],
            Symbol::Cell600 => &[3, 3, 5],
        }
    }

    /// Order `m` of each rotation `r_v`: the `m` of `{3,m}`, and 3, 4, 5 for
    /// the 16-, 24- and 600-cell.
    pub fn rotation_order(self) -> usize {
        match self {
            Symbol::Dihedral => 2,
            Symbol::Tetrahedron | Symbol::Cell16 => 3,
            Symbol::Octahedron | Symbol::Cell24 => 4,
            Symbol::Icosahedron | Symbol::Cell600 => 5,
            Symbol::Triangular => 6,
        }
    }

    pub fn has_model(self) -> bool {
        !matches!(self, Symbol::Dihedral | Symbol::Triangular)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for Symbol {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Symbol::ALL
            .into_iter()
            .find(|sym| sym.to_string() == compact)
            .ok_or_else(|| GeometryError::Unsupported(s.to_string()))
    }
}

/// Vertices of a regular polytope with exact coordinates, and its edges.
#[derive(Debug, Clone)]
pub struct PolytopeModel {
    symbol: Symbol,
    vertices: Vec<ExactVector>,
    index: HashMap<ExactVector, usize>,
    adjacency: Vec<(usize, usize)>,
}

impl PolytopeModel {
    pub fn symbol(&self) -> Symbol {
        self.symbol
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn vertices(&self) -> &[ExactVector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &ExactVector {
        &self.vertices[i]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &ExactVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Pairs `i < j` at the minimal nonzero squared distance.
    pub fn adjacency(&self) -> &[(usize, usize)] {
        &self.adjacency
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .adjacency
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    pub fn edge_length_squared(&self) -> Sqrt5Scalar {
        let (i, j) = self.adjacency[0];
        (&self.vertices[i] - &self.vertices[j]).norm_squared()
    }
}

fn s(n: i64, d: i64) -> Sqrt5Scalar {
    Sqrt5Scalar::ratio(n, d)
}

fn signs(k: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..1usize << k).map(move |mask| {
        (0..k)
            .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

fn unit_vectors(dim: usize) -> Vec<ExactVector> {
    let mut out = Vec::new();
    for i in 0..dim {
        for sign in [1, -1] {
            let mut v = vec![0; dim];
            v[i] = sign;
            out.push(ExactVector::from_ints(&v));
        }
    }
    out
}

fn even_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            if inversions % 2 == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for k in 0..n {
            if !prefix.contains(&k) {
                prefix.push(k);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

fn vertices_of(symbol: Symbol) -> Result<Vec<ExactVector>, GeometryError> {
    let phi = Sqrt5Scalar::phi();
    Ok(match symbol {
        Symbol::Tetrahedron => signs(3)
            .filter(|sg| sg.iter().product::<i64>() == 1)
            .map(|sg| ExactVector::from_ints(&sg))
            .collect(),
        Symbol::Octahedron => unit_vectors(3),
        Symbol::Icosahedron => {
            let mut out = Vec::new();
            for shift in 0..3 {
                for sg in signs(2) {
                    let base = [
                        Sqrt5Scalar::zero(),
                        Sqrt5Scalar::from_int(sg[0]),
                        &phi * &Sqrt5Scalar::from_int(sg[1]),
                    ];
                    out.push(ExactVector(
                        (0..3).map(|i| base[(i + 3 - shift) % 3].clone()).collect(),
                    ));
                }
            }
            out
        }
        Symbol::Cell16 => unit_vectors(4),
        Symbol::Cell24 => {
            let mut out = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    for sg in signs(2) {
                        let mut v = vec![0; 4];
                        v[i] = sg[0];
                        v[j] = sg[1];
                        out.push(ExactVector::from_ints(&v));
                    }
                }
            }
            out
        }
        Symbol::Cell600 => {
            let mut out = unit_vectors(4);
            for sg in signs(4) {
                out.push(ExactVector(sg.iter().map(|&x| s(x, 2)).collect()));
            }
            let half = s(1, 2);
            let base = [&phi * &half, half.clone(), &Sqrt5Scalar::phi_inv() * &half];
            for p in even_permutations(4) {
                for sg in signs(3) {
                    let mut v = vec![Sqrt5Scalar::zero(); 4];
                    for k in 0..3 {
                        v[p[k]] = &base[k] * &Sqrt5Scalar::from_int(sg[k]);
                    }
                    out.push(ExactVector(v));
                }
            }
            out
        }
        Symbol::Dihedral | Symbol::Triangular => return Err(GeometryError::NoModel(symbol)),
    })
}

pub fn build_polytope(symbol: Symbol) -> Result<PolytopeModel, GeometryError> {
    let vertices = vertices_of(symbol)?;
    let index = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let mut best: Option<Sqrt5Scalar> = None;
    let mut adjacency = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let d = (&vertices[i] - &vertices[j]).norm_squared();
            match &best {
                Some(b) if d > *b => {}
                Some(b) if d == *b => adjacency.push((i, j)),
                _ => {
                    best = Some(d);
                    adjacency.clear();
                    adjacency.push((i, j));
                }
            }
        }
    }
    Ok(PolytopeModel {
        symbol,
        vertices,
        index,
        adjacency,
    })
}
