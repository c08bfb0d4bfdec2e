use num_traits::{One, Zero};

use super::polytope::{GeometryError, PolytopeModel, Symbol};
use crate::exact::{ExactMatrix, ExactVector, Quaternion, Sqrt5Scalar};

/// A vertex paired with its rotation `r_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedRotation {
    pub vertex: ExactVector,
    pub rotation: ExactMatrix,
}

impl PointedRotation {
    pub fn act(&self, x: &ExactVector) -> ExactVector {
        self.rotation
            .apply(x)
            .expect("vertex and rotation share a dimension")
    }

    /// `(u, r_u) ∗ (v, r_v) = (r_v(u), r_{r_v(u)})`, with the second component
    /// obtained by conjugation.
    pub fn star(&self, by: &PointedRotation) -> PointedRotation {
        let inverse = by.rotation.transpose();
        let rotation = by
            .rotation
            .mul(&self.rotation)
            .and_then(|m| m.mul(&inverse))
            .expect("same dimension");
        PointedRotation {
            vertex: by.act(&self.vertex),
            rotation,
        }
    }
}

/// Rotation by `−2π/m` about the axis through `v` (so `(1,1,1)` with `m = 3`
/// gives `(x,y,z) ↦ (y,z,x)`). `c = cos`, `s = sin/|v|` for that angle.
fn axial_rotation(v: &ExactVector, c: Sqrt5Scalar, s: Sqrt5Scalar) -> ExactMatrix {
    let n2 = v.norm_squared();
    let k = (&Sqrt5Scalar::one() - &c)
        .checked_div(&n2)
        .expect("vertices are nonzero");
    let cross = [
        [Sqrt5Scalar::zero(), -v[2].clone(), v[1].clone()],
        [v[2].clone(), Sqrt5Scalar::zero(), -v[0].clone()],
        [-v[1].clone(), v[0].clone(), Sqrt5Scalar::zero()],
    ];
    let rows = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    let diag = if i == j {
                        c.clone()
                    } else {
                        Sqrt5Scalar::zero()
                    };
                    &(&diag + &(&s * &cross[i][j])) + &(&k * &(&v[i] * &v[j]))
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(rows).expect("3×3")
}

/// Fixed unit-free quaternion `a` of each 4D model. The rotation is
/// `x ↦ a·x·v̄·ā·v / (|a|²|v|²)`: it fixes `v`, and conjugating by any
/// `r_w` carries `r_v` to `r_{r_w(v)}`.
fn twist(symbol: Symbol) -> Quaternion {
    let i = |n: i64| Sqrt5Scalar::from_int(n);
    match symbol {
        Symbol::Cell16 => Quaternion::new(i(1), i(1), i(1), i(1)),
        Symbol::Cell24 => Quaternion::new(i(1), i(1), i(0), i(0)),
        Symbol::Cell600 => Quaternion::new(Sqrt5Scalar::phi_inv(), Sqrt5Scalar::phi(), i(-1), i(0)),
        _ => unreachable!("4D models only"),
    }
}

fn quaternion_rotation(v: &ExactVector, a: &Quaternion) -> ExactMatrix {
    let q = Quaternion::from_vector(v);
    let right = &(&q.conj() * &a.conj()) * &q;
    let scale = (&a.norm_squared() * &q.norm_squared())
        .inv()
        .expect("nonzero");
    a.left_matrix()
        .mul(&right.right_matrix())
        .expect("4×4")
        .scale(&scale)
}

pub fn vertex_rotation(
    model: &PolytopeModel,
    index: usize,
) -> Result<PointedRotation, GeometryError> {
    let count = model.len();
    if index >= count {
        return Err(GeometryError::NoSuchVertex { index, count });
    }
    let v = model.vertex(index);
    let half = Sqrt5Scalar::ratio(1, 2);
    let rotation = match model.symbol() {
        Symbol::Tetrahedron => axial_rotation(v, Sqrt5Scalar::ratio(-1, 2), -half),
        Symbol::Octahedron => axial_rotation(v, Sqrt5Scalar::zero(), Sqrt5Scalar::from_int(-1)),
        Symbol::Icosahedron => axial_rotation(v, &Sqrt5Scalar::phi_inv() * &half, -half),
        sym @ (Symbol::Cell16 | Symbol::Cell24 | Symbol::Cell600) => {
            quaternion_rotation(v, &twist(sym))
        }
        sym => return Err(GeometryError::NoModel(sym)),
    };
    Ok(PointedRotation {
        vertex: v.clone(),
        rotation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_polytope;

    #[test]
    fn tetrahedral_rotation_is_a_coordinate_cycle() {
        let p = build_polytope(Symbol::Tetrahedron).unwrap();
        assert_eq!(p.vertex(0), &ExactVector::from_ints(&[1, 1, 1]));
        let r = vertex_rotation(&p, 0).unwrap();
        let expected = ExactMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).unwrap();
        assert_eq!(r.rotation, expected);
        assert_eq!(
            r.act(&ExactVector::from_ints(&[1, 2, 3])),
            ExactVector::from_ints(&[2, 3, 1])
        );
    }

    #[test]
    fn octahedral_rotation_about_e3() {
        let p = build_polytope(Symbol::Octahedron).unwrap();
        let e3 = p.index_of(&ExactVector::from_ints(&[0, 0, 1])).unwrap();
        let r = vertex_rotation(&p, e3).unwrap();
        assert!(r.rotation.pow(4).is_identity() && !r.rotation.pow(2).is_identity());
        let mut x = ExactVector::from_ints(&[1, 0, 0]);
        let mut cycle = vec![x.clone()];
        for _ in 0..3 {
            x = r.act(&x);
            cycle.push(x.clone());
        }
        let mut sorted = cycle.clone();
        sorted.sort();
        let mut expected: Vec<ExactVector> = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0]]
            .iter()
            .map(|v| ExactVector::from_ints(v))
            .collect();
        expected.sort();
        assert_eq!(sorted, expected);
    }

    #[test]
    fn rotations_are_pointed_and_of_the_right_order() {
        for sym in [
            Symbol::Tetrahedron,
            Symbol::Octahedron,
            Symbol::Icosahedron,
            Symbol::Cell16,
            Symbol::Cell24,
            Symbol::Cell600,
        ] {
            let p = build_polytope(sym).unwrap();
            let m = sym.rotation_order() as u32;
            for i in (0..p.len()).step_by(7) {
                let r = vertex_rotation(&p, i).unwrap();
                assert!(r.rotation.is_special_orthogonal(), "{sym} {i}");
                assert_eq!(r.act(p.vertex(i)), *p.vertex(i));
                assert!(r.rotation.pow(m).is_identity(), "{sym} {i}");
                assert!(p.vertices().iter().all(|x| p.index_of(&r.act(x)).is_some()));
            }
        }
        let p = build_polytope(Symbol::Icosahedron).unwrap();
        let r = vertex_rotation(&p, 0).unwrap();
        assert!(r.rotation.entries().iter().any(|e| !e.is_rational()));
        assert!(matches!(
            vertex_rotation(&p, 12),
            Err(GeometryError::NoSuchVertex {
                index: 12,
                count: 12
            })
        ));
    }
}
