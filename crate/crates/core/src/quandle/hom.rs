use super::FiniteQuandle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error("mapping has {got} entries, source has order {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("image {image} of element {element} is out of range")]
    OutOfRange { element: usize, image: usize },
    #[error("f({x} ∗ {y}) ≠ f({x}) ∗ f({y})")]
    NotAHomomorphism { x: usize, y: usize },
    #[error("element {element} would map to both {first} and {second}")]
    Conflict {
        element: usize,
        first: usize,
        second: usize,
    },
    #[error("the assigned elements do not generate the source ({reached} of {order} reached)")]
    NotGenerated { reached: usize, order: usize },
}

/// A verified quandle homomorphism between two finite tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleHom {
    source: FiniteQuandle,
    target: FiniteQuandle,
    mapping: Vec<usize>,
}

impl QuandleHom {
    /// Checks `f(x ∗ y) = f(x) ∗ f(y)` for all pairs.
    pub fn new(
        source: FiniteQuandle,
        target: FiniteQuandle,
        mapping: Vec<usize>,
    ) -> Result<Self, HomError> {
        verify_hom(&source, &target, &mapping)?;
        Ok(QuandleHom {
            source,
            target,
            mapping,
        })
    }

    /// Extends an assignment on some elements to the subquandle they generate,
    /// and requires that subquandle to be the whole source.
    pub fn from_generators(
        source: &FiniteQuandle,
        target: &FiniteQuandle,
        assignment: &[(usize, usize)],
    ) -> Result<Self, HomError> {
        let mapping = extend_partial(source, target, assignment, false)?;
        let reached = mapping.iter().filter(|m| m.is_some()).count();
        if reached != source.order() {
            return Err(HomError::NotGenerated {
                reached,
                order: source.order(),
            });
        }
        let mapping: Vec<usize> = mapping
            .into_iter()
            .map(|m| m.expect("all reached"))
            .collect();
        Ok(QuandleHom {
            source: source.clone(),
            target: target.clone(),
            mapping,
        })
    }

    pub fn source(&self) -> &FiniteQuandle {
        &self.source
    }

    pub fn target(&self) -> &FiniteQuandle {
        &self.target
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, x: usize) -> usize {
        self.mapping[x]
    }

    pub fn image(&self) -> Vec<usize> {
        let mut img = self.mapping.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.mapping.len()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Preimage of every target element, indexed by target element.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.target.order()];
        for (x, &fx) in self.mapping.iter().enumerate() {
            fibers[fx].push(x);
        }
        fibers
    }
}

pub(crate) fn verify_hom(
    source: &FiniteQuandle,
    target: &FiniteQuandle,
    mapping: &[usize],
) -> Result<(), HomError> {
    if mapping.len() != source.order() {
        return Err(HomError::WrongLength {
            got: mapping.len(),
            expected: source.order(),
        });
    }
    if let Some((element, &image)) = mapping
        .iter()
        .enumerate()
        .find(|(_, &m)| m >= target.order())
    {
        return Err(HomError::OutOfRange { element, image });
    }
    for x in 0..source.order() {
        for y in 0..source.order() {
            if mapping[source.op(x, y)] != target.op(mapping[x], mapping[y]) {
                return Err(HomError::NotAHomomorphism { x, y });
            }
        }
    }
    Ok(())
}

/// Closure-based extension of a partial map. With `injective` set, two
/// distinct source elements may not share an image.
pub(crate) fn extend_partial(
    source: &FiniteQuandle,
    target: &FiniteQuandle,
    assignment: &[(usize, usize)],
    injective: bool,
) -> Result<Vec<Option<usize>>, HomError> {
    let mut mapping: Vec<Option<usize>> = vec![None; source.order()];
    let mut preimage: Vec<Option<usize>> = vec![None; target.order()];
    let mut members = Vec::new();
    let mut assign = |x: usize,
                      fx: usize,
                      mapping: &mut Vec<Option<usize>>,
                      members: &mut Vec<usize>|
     -> Result<(), HomError> {
        match mapping[x] {
            Some(prev) if prev != fx => Err(HomError::Conflict {
                element: x,
                first: prev,
                second: fx,
            }),
            Some(_) => Ok(()),
            None => {
                if injective {
                    if let Some(other) = preimage[fx] {
                        return Err(HomError::Conflict {
                            element: fx,
                            first: other,
                            second: x,
                        });
                    }
                    preimage[fx] = Some(x);
                }
                mapping[x] = Some(fx);
                members.push(x);
                Ok(())
            }
        }
    };
    for &(x, fx) in assignment {
        if fx >= target.order() {
            return Err(HomError::OutOfRange {
                element: x,
                image: fx,
            });
        }
        assign(x, fx, &mut mapping, &mut members)?;
    }
    let mut done = 0;
    while done < members.len() {
        let x = members[done];
        done += 1;
        let mut k = 0;
        while k < done {
            let y = members[k];
            k += 1;
            let (fx, fy) = (mapping[x].unwrap(), mapping[y].unwrap());
            assign(
                source.op(x, y),
                target.op(fx, fy),
                &mut mapping,
                &mut members,
            )?;
            assign(
                source.op(y, x),
                target.op(fy, fx),
                &mut mapping,
                &mut members,
            )?;
        }
    }
    Ok(mapping)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{dihedral_quandle, trivial_quandle};

    #[test]
    fn identity_is_a_hom() {
        let q = dihedral_quandle(3).unwrap();
        let h = QuandleHom::new(q.clone(), q, vec![0, 1, 2]).unwrap();
        assert!(h.is_bijective());
        assert_eq!(h.fibers(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn constant_map_to_trivial() {
        let q = dihedral_quandle(3).unwrap();
        let t = trivial_quandle(2).unwrap();
        let h = QuandleHom::new(q, t, vec![1, 1, 1]).unwrap();
        assert!(!h.is_surjective());
        assert_eq!(h.image(), vec![1]);
    }

    #[test]
    fn rejects_non_hom() {
        let q = dihedral_quandle(3).unwrap();
        assert!(matches!(
            QuandleHom::new(q.clone(), q.clone(), vec![0, 0, 1]),
            Err(HomError::NotAHomomorphism { .. })
        ));
        assert!(matches!(
            QuandleHom::new(q.clone(), q, vec![0]),
            Err(HomError::WrongLength { .. })
        ));
    }

    #[test]
    fn extension_by_generators() {
        let q = dihedral_quandle(3).unwrap();
        let h = QuandleHom::from_generators(&q, &q, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(h.mapping(), &[1, 0, 2]);
        let t = trivial_quandle(3).unwrap();
        // 0 ∗ 1 = 2 must map to f(0) ∗ f(1) = f(0) in a trivial quandle
        assert!(QuandleHom::from_generators(&q, &t, &[(0, 0), (1, 1)]).is_err());
        assert!(matches!(
            QuandleHom::from_generators(&q, &q, &[(0, 0)]),
            Err(HomError::NotGenerated {
                reached: 1,
                order: 3
            })
        ));
    }
}
