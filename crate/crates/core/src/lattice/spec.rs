use serde::Serialize;

use super::Lattice;
use crate::bits::{self, Mask};
use crate::{Error, Poset, Result};

/// The map sending `x` to the bit-vector `(x <= m)` over the
/// meet-irreducibles `m != T`, and its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecMorphism {
    /// The meet-irreducibles other than the top, one per coordinate.
    pub coordinates: Vec<usize>,
    /// Bit `i` of `vectors[x]` is set iff `x <= coordinates[i]`.
    pub vectors: Vec<Mask>,
    /// Elements grouped by equal vectors, ordered by least element.
    pub fibers: Vec<Vec<usize>>,
    /// Distinct vectors, aligned with `fibers`.
    pub image_vectors: Vec<Mask>,
    /// The image ordered by reverse inclusion of vectors, so that the map is
    /// monotone. Labels are the vectors written as bit strings.
    pub image: Lattice,
}

impl SpecMorphism {
    pub fn vector_string(&self, v: Mask) -> String {
        (0..self.coordinates.len())
            .map(|i| if bits::contains(v, i) { '1' } else { '0' })
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.fibers.iter().all(|f| f.len() == 1)
    }

    /// Index into `fibers`/`image` of the class of `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.image_vectors
            .iter()
            .position(|&v| v == self.vectors[x])
            .expect("every vector is in the image")
    }

    /// The image is closed under union and intersection and contains the
    /// all-zero and all-one vectors.
    pub fn image_is_set_lattice(&self) -> bool {
        let full = bits::full(self.coordinates.len());
        let has = |v: Mask| self.image_vectors.contains(&v);
        has(0)
            && has(full)
            && self
                .image_vectors
                .iter()
                .all(|&a| self.image_vectors.iter().all(|&b| has(a | b) && has(a & b)))
    }
}

/// The equivalent characterizations of distributivity, each computed on
/// its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistributivityChecks {
    pub distributive: bool,
    pub mi_iff_smi: bool,
    pub spec_injective: bool,
    pub spec_isomorphism: bool,
}

impl DistributivityChecks {
    pub fn agree(&self) -> bool {
        self.distributive == self.mi_iff_smi
            && self.distributive == self.spec_injective
            && self.distributive == self.spec_isomorphism
    }
}

impl Lattice {
    pub fn spec_morphism(&self) -> Result<SpecMorphism> {
        let top = self.top();
        let coordinates: Vec<usize> = (0..self.len())
            .filter(|&m| m != top && self.is_mi(m))
            .collect();
        if coordinates.len() > bits::MAX_MASK_ELEMENTS {
            return Err(Error::TooManyElements {
                what: "spec coordinates",
                size: coordinates.len(),
                limit: bits::MAX_MASK_ELEMENTS,
            });
        }
        let vectors: Vec<Mask> = (0..self.len())
            .map(|x| {
                coordinates
                    .iter()
                    .enumerate()
                    .filter(|&(_, &m)| self.le(x, m))
                    .fold(0, |v, (i, _)| v | 1 << i)
            })
            .collect();
        let mut image_vectors: Vec<Mask> = Vec::new();
        let mut fibers: Vec<Vec<usize>> = Vec::new();
        for (x, &v) in vectors.iter().enumerate() {
            match image_vectors.iter().position(|&w| w == v) {
                Some(i) => fibers[i].push(x),
                None => {
                    image_vectors.push(v);
                    fibers.push(vec![x]);
                }
            }
        }
        let k = coordinates.len();
        let labels = image_vectors
            .iter()
            .map(|&v| {
                (0..k)
                    .map(|i| if bits::contains(v, i) { '1' } else { '0' })
                    .collect()
            })
            .collect();
        let poset = Poset::from_le_fn(labels, |a, b| image_vectors[b] & !image_vectors[a] == 0)?;
        let image = Lattice::from_poset(poset)?;
        Ok(SpecMorphism {
            coordinates,
            vectors,
            fibers,
            image_vectors,
            image,
        })
    }

    /// Every meet-irreducible is strictly meet-irreducible and conversely.
    pub fn mi_iff_smi(&self) -> bool {
        (0..self.len()).all(|x| self.is_mi(x) == self.is_smi(x))
    }

    pub fn distributivity_checks(&self) -> Result<DistributivityChecks> {
        let spec = self.spec_morphism()?;
        let n = self.len();
        // order-embedding onto the image: x <= y iff vec(y) ⊆ vec(x)
        let embedding = (0..n)
            .all(|x| (0..n).all(|y| self.le(x, y) == (spec.vectors[y] & !spec.vectors[x] == 0)));
        let bijective = spec.image_vectors.len() == n;
        Ok(DistributivityChecks {
            distributive: self.is_distributive(),
            mi_iff_smi: self.mi_iff_smi(),
            spec_injective: spec.is_injective(),
            spec_isomorphism: embedding && bijective,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;

    #[test]
    fn two_chain_example_spec() {
        let l = two_chain_example();
        let s = l.spec_morphism().unwrap();
        assert_eq!(s.coordinates, vec![2, 3]);
        assert_eq!(s.fibers, vec![vec![0], vec![1, 2], vec![3], vec![4]]);
        assert_eq!(s.image.len(), 4);
        assert!(s.image.is_distributive());
        let checks = l.distributivity_checks().unwrap();
        assert!(checks.agree());
        assert!(!checks.distributive);
    }

    #[test]
    fn boolean_spec_is_iso() {
        let l = boolean_lattice(3);
        let s = l.spec_morphism().unwrap();
        assert!(s.is_injective());
        assert!(s.image_is_set_lattice());
        let checks = l.distributivity_checks().unwrap();
        assert!(checks.distributive && checks.agree());
    }

    #[test]
    fn lambda_spec_is_a_point() {
        let s = lambda(2).spec_morphism().unwrap();
        assert!(s.coordinates.is_empty());
        assert_eq!(s.image.len(), 1);
    }

    #[test]
    fn non_distributive_small_lattices() {
        for l in [diamond(), pentagon()] {
            let c = l.distributivity_checks().unwrap();
            assert!(!c.distributive && c.agree(), "{c:?}");
        }
    }
}
