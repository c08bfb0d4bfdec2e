use serde::{Deserialize, Serialize};

use super::{check_range, twist_spun_presentation, TwistError};
use crate::exact::Eisenstein;
use crate::geometry::{
    build_schlafli_quandle, eisenstein_quandle, translation_certificate, Symbol,
    TranslationCertificate,
};
use crate::presentation::{enumerate_presentation, Relation, Term};
use crate::quandle::find_isomorphism;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub m: usize,
    pub order: Option<usize>,
    pub schlafli_order: usize,
    /// `witness[x]` is the image of element `x` in the Schläfli quandle.
    pub witness: Option<Vec<usize>>,
}

impl CollapseReport {
    pub fn isomorphic(&self) -> bool {
        self.witness.is_some()
    }
}

/// Enumerates `Q_m` with `(((a∗c)∗a)∗a)∗c = a` added and compares the result
/// with the `{3,m}` Schläfli quandle.
pub fn collapse_relation_check(m: usize, budget: usize) -> Result<CollapseReport, TwistError> {
    check_range(m, 2, 5)?;
    let p = twist_spun_presentation(m)?;
    let (a, c) = (Term::Gen(0), Term::Gen(1));
    let lhs = Term::star(
        Term::star(
            Term::star(Term::star(a.clone(), c.clone()), a.clone()),
            a.clone(),
        ),
        c,
    );
    let p = p
        .with_relation(Relation::new(lhs, a))
        .expect("same generators");
    let x = build_schlafli_quandle(Symbol::tessellation(m).expect("2..=5"))?;
    let result = enumerate_presentation(&p, budget)?;
    let order = result.order();
    let witness = result
        .finite()
        .and_then(|r| find_isomorphism(&r.quandle, &x.quandle))
        .map(|h| h.mapping().to_vec());
    Ok(CollapseReport {
        m,
        order,
        schlafli_order: x.quandle.order(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinityCertificate {
    pub m: usize,
    /// `(v∗w)∗v = w` and `w ∗^6 v = w` at `(v, w) = (0, 1)`.
    pub relations_hold: [bool; 2],
    pub certificate: TranslationCertificate,
    /// `v` moved by the certified map `0..4` times.
    pub orbit_samples: Vec<String>,
    pub orbit_distinct: bool,
    pub infinite: bool,
}

/// Q_6 maps onto the subquandle of `{3,6}` generated by `0` and `1`, which
/// contains the orbit of `0` under a nonzero translation, so Q_6 is infinite.
pub fn certify_q6_infinite() -> InfinityCertificate {
    let l = eisenstein_quandle();
    let (v, w) = l.pair.clone();
    let relations_hold = [l.op(&l.op(&v, &w), &v) == w, l.op_pow(&w, &v, 6) == w];
    let certificate = translation_certificate(&l, &v, &w).expect("v ≠ w");
    let map = certificate.map.clone();
    let mut samples: Vec<Eisenstein> = vec![v.clone()];
    for _ in 0..3 {
        samples.push(map.apply(samples.last().expect("nonempty")));
    }
    let orbit_distinct = samples
        .iter()
        .enumerate()
        .all(|(i, x)| samples[..i].iter().all(|y| y != x));
    let infinite = relations_hold.iter().all(|&b| b) && certificate.valid && orbit_distinct;
    InfinityCertificate {
        m: 6,
        relations_hold,
        certificate,
        orbit_samples: samples.iter().map(|x| x.to_string()).collect(),
        orbit_distinct,
        infinite,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::DEFAULT_BUDGET;

    #[test]
    fn q6_certificate() {
        let c = certify_q6_infinite();
        assert_eq!(c.relations_hold, [true, true]);
        assert_eq!(c.certificate.map.translation, Eisenstein::new(2, 0));
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            serde_json::from_str::<InfinityCertificate>(&json).unwrap(),
            c
        );
        assert_eq!(c.orbit_samples, ["0", "2", "4", "6"]);
        assert!(c.infinite);
    }

    #[test]
    fn collapse_small_cases() {
        let r = collapse_relation_check(2, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.order, Some(3));
        assert!(r.isomorphic());
        let r = collapse_relation_check(3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.order, Some(4));
        assert!(r.isomorphic());
        assert!(collapse_relation_check(6, DEFAULT_BUDGET).is_err());
    }
}
