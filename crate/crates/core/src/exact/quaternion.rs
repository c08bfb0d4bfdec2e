use std::ops::Mul;

use num_traits::Zero;

use super::{ExactMatrix, ExactVector, Sqrt5Scalar};

/// Quaternion `w + x·i + y·j + z·k` over ℚ(√5), identified with the
/// coordinate vector `(w, x, y, z)` of ℝ⁴ (so `e₁` is the real unit).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Sqrt5Scalar,
    pub x: Sqrt5Scalar,
    pub y: Sqrt5Scalar,
    pub z: Sqrt5Scalar,
}

impl Quaternion {
    pub fn new(w: Sqrt5Scalar, x: Sqrt5Scalar, y: Sqrt5Scalar, z: Sqrt5Scalar) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_vector(v: &ExactVector) -> Self {
        assert_eq!(v.dim(), 4, "quaternions live in dimension 4");
        Quaternion::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
    }

    pub fn to_vector(&self) -> ExactVector {
        ExactVector(vec![
            self.w.clone(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        ])
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm_squared(&self) -> Sqrt5Scalar {
        &(&(&self.w * &self.w) + &(&self.x * &self.x))
            + &(&(&self.y * &self.y) + &(&self.z * &self.z))
    }

    pub fn scale(&self, s: &Sqrt5Scalar) -> Self {
        Quaternion::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }

    /// Matrix of `q ↦ self · q`.
    pub fn left_matrix(&self) -> ExactMatrix {
        Self::matrix_of(|q| self * q)
    }

    /// Matrix of `q ↦ q · self`.
    pub fn right_matrix(&self) -> ExactMatrix {
        Self::matrix_of(|q| q * self)
    }

    fn matrix_of(f: impl Fn(&Quaternion) -> Quaternion) -> ExactMatrix {
        let cols: Vec<ExactVector> = (0..4)
            .map(|k| f(&Quaternion::from_vector(&ExactVector::basis(4, k))).to_vector())
            .collect();
        ExactMatrix::from_columns(&cols).expect("four columns of length four")
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, q: &Quaternion) -> Quaternion {
        let p = self;
        Quaternion {
            w: &(&p.w * &q.w) - &(&(&(&p.x * &q.x) + &(&p.y * &q.y)) + &(&p.z * &q.z)),
            x: &(&(&p.w * &q.x) + &(&p.x * &q.w)) + &(&(&p.y * &q.z) - &(&p.z * &q.y)),
            y: &(&(&p.w * &q.y) - &(&p.x * &q.z)) + &(&(&p.y * &q.w) + &(&p.z * &q.x)),
            z: &(&(&p.w * &q.z) + &(&p.x * &q.y)) + &(&(&p.z * &q.w) - &(&p.y * &q.x)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(k: usize) -> Quaternion {
        Quaternion::from_vector(&ExactVector::basis(4, k))
    }

    #[test]
    fn hamilton_rules() {
        let (one, i, j, k) = (unit(0), unit(1), unit(2), unit(3));
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, one.scale(&Sqrt5Scalar::from_int(-1)));
    }

    #[test]
    fn multiplication_matrices_are_consistent() {
        let a = Quaternion::new(1.into(), 2.into(), Sqrt5Scalar::phi(), (-1).into());
        let b = Quaternion::new(0.into(), 1.into(), 3.into(), Sqrt5Scalar::sqrt5());
        assert_eq!(
            a.left_matrix().apply(&b.to_vector()).unwrap(),
            (&a * &b).to_vector()
        );
        assert_eq!(
            b.right_matrix().apply(&a.to_vector()).unwrap(),
            (&a * &b).to_vector()
        );
        assert_eq!((&a * &a.conj()).w, a.norm_squared());
    }
}
