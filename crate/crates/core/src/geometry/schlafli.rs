use super::polytope::{build_polytope, GeometryError, PolytopeModel, Symbol};
use super::rotation::{vertex_rotation, PointedRotation};
use crate::exact::{ExactVector, Sqrt5Scalar};
use crate::quandle::{dihedral_quandle, FiniteQuandle};

/// A finite Schläfli quandle with its designated generating pair `(v, w)`,
/// which satisfies `(v∗w)∗v = w` and `w∗^m v = w`.
#[derive(Debug, Clone)]
pub struct SchlafliQuandle {
    pub symbol: Symbol,
    /// Absent for `{3,2}`, which is built algebraically.
    pub model: Option<PolytopeModel>,
    /// `rotations[i]` is the element with index `i`.
    pub rotations: Vec<PointedRotation>,
    pub quandle: FiniteQuandle,
    pub pair: (usize, usize),
}

impl SchlafliQuandle {
    pub fn m(&self) -> usize {
        self.symbol.rotation_order()
    }
}

/// Whether `(v∗w)∗v = w` and `w ∗^m v = w`.
pub fn lemma_relations_hold(q: &FiniteQuandle, v: usize, w: usize, m: usize) -> bool {
    q.op(q.op(v, w), v) == w && q.op_pow(w, v, m as i64) == w
}

fn named_pair(symbol: Symbol) -> Option<(ExactVector, ExactVector)> {
    let h = Sqrt5Scalar::ratio(-1, 2);
    Some(match symbol {
        Symbol::Cell16 => (
            ExactVector::from_ints(&[1, 0, 0, 0]),
            ExactVector::from_ints(&[0, 1, 0, 0]),
        ),
        Symbol::Cell24 => (
            ExactVector::from_ints(&[1, 1, 0, 0]),
            ExactVector::from_ints(&[0, 1, 0, 1]),
        ),
        Symbol::Cell600 => (
            ExactVector::from_ints(&[1, 0, 0, 0]),
            ExactVector(vec![
                &h * &Sqrt5Scalar::phi_inv(),
                Sqrt5Scalar::from_int(0),
                &h * &Sqrt5Scalar::phi(),
                Sqrt5Scalar::ratio(1, 2),
            ]),
        ),
        _ => return None,
    })
}

pub fn build_schlafli_quandle(symbol: Symbol) -> Result<SchlafliQuandle, GeometryError> {
    if symbol == Symbol::Dihedral {
        let quandle = dihedral_quandle(3)
            .expect("order 3")
            .with_name("{3,2}")
            .with_generators(vec![0, 1])
            .expect("in range");
        return Ok(SchlafliQuandle {
            symbol,
            model: None,
            rotations: Vec::new(),
            quandle,
            pair: (0, 1),
        });
    }
    let model = build_polytope(symbol)?;
    let rotations: Vec<PointedRotation> = (0..model.len())
        .map(|i| vertex_rotation(&model, i))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<usize>> = model
        .vertices()
        .iter()
        .map(|x| {
            rotations
                .iter()
                .map(|r| {
                    model
                        .index_of(&r.act(x))
                        .expect("rotations preserve the vertex set")
                })
                .collect()
        })
        .collect();
    let labels = model.vertices().iter().map(|v| v.to_string()).collect();
    let quandle = FiniteQuandle::verified(symbol.to_string(), labels, &rows)
        .map_err(|e| GeometryError::Unsupported(e.to_string()))?;
    let m = symbol.rotation_order();
    let pair = match named_pair(symbol) {
        Some((v, w)) => (
            model.index_of(&v).expect("named vertex"),
            model.index_of(&w).expect("named vertex"),
        ),
        None => {
            let w = model
                .neighbours(0)
                .into_iter()
                .find(|&w| lemma_relations_hold(&quandle, 0, w, m))
                .expect("some edge at vertex 0 satisfies the relations");
            (0, w)
        }
    };
    let quandle = quandle
        .with_generators(vec![pair.0, pair.1])
        .expect("in range");
    Ok(SchlafliQuandle {
        symbol,
        model: Some(model),
        rotations,
        quandle,
        pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_designated_pairs() {
        for (sym, order) in [
            (Symbol::Dihedral, 3),
            (Symbol::Tetrahedron, 4),
            (Symbol::Octahedron, 6),
            (Symbol::Icosahedron, 12),
            (Symbol::Cell16, 8),
            (Symbol::Cell24, 24),
            (Symbol::Cell600, 120),
        ] {
            let s = build_schlafli_quandle(sym).unwrap();
            let q = &s.quandle;
            assert_eq!(q.order(), order, "{sym}");
            assert!(q.is_quandle() && q.is_connected(), "{sym}");
            let (v, w) = s.pair;
            assert!(lemma_relations_hold(q, v, w, s.m()), "{sym}");
            assert!(q.is_generated_by(&[v, w]), "{sym}");
        }
    }

    #[test]
    fn operation_matches_pointed_rotations() {
        let s = build_schlafli_quandle(Symbol::Cell24).unwrap();
        for x in (0..24).step_by(5) {
            for y in (0..24).step_by(3) {
                let z = s.rotations[x].star(&s.rotations[y]);
                assert_eq!(z, s.rotations[s.quandle.op(x, y)]);
            }
        }
    }
}
