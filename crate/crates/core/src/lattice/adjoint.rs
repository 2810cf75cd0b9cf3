use serde::Serialize;

use super::Lattice;
use crate::bits::{self, Mask};
use crate::{Caps, Error, Result};

/// A verified sup-map `φ: L -> L'` given by its values on element indices.
#[derive(Debug, Clone)]
pub struct SupMap<'a> {
    source: &'a Lattice,
    target: &'a Lattice,
    map: Vec<usize>,
}

/// The adjoint properties checked for a sup-map and its adjoint `ψ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdjointLaws {
    /// `ψ` preserves all meets.
    pub psi_is_inf_map: bool,
    /// `φ(x) <= y` iff `x <= ψ(y)`.
    pub galois: bool,
    /// `φ ψ φ = φ`.
    pub phi_psi_phi: bool,
    /// `ψ φ ψ = ψ`.
    pub psi_phi_psi: bool,
    /// `φ` onto iff `ψ` one-to-one.
    pub onto_iff_psi_injective: bool,
    /// `φ` one-to-one iff `ψ` onto.
    pub injective_iff_psi_onto: bool,
    /// `φ(x) = ⋀{ y : x <= ψ(y) }`.
    pub phi_from_psi: bool,
}

impl AdjointLaws {
    pub fn all(&self) -> bool {
        self.psi_is_inf_map
            && self.galois
            && self.phi_psi_phi
            && self.psi_phi_psi
            && self.onto_iff_psi_injective
            && self.injective_iff_psi_onto
            && self.phi_from_psi
    }
}

fn is_injective(f: &[usize]) -> bool {
    let mut seen = f.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == f.len()
}

fn is_onto(f: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    for &y in f {
        hit[y] = true;
    }
    hit.into_iter().all(|h| h)
}

impl<'a> SupMap<'a> {
    /// Checks `φ(⋁X) = ⋁φ(X)`. For `|L|` up to the `sup_map` cap every subset
    /// `X` is tried; above it pairs and the empty set are checked, which is
    /// equivalent on finite lattices.
    pub fn new(
        source: &'a Lattice,
        target: &'a Lattice,
        map: Vec<usize>,
        caps: &Caps,
    ) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::MapLength {
                expected: source.len(),
                found: map.len(),
            });
        }
        if let Some(&y) = map.iter().find(|&&y| y >= target.len()) {
            return Err(Error::UnknownElement(y));
        }
        let f = Self {
            source,
            target,
            map,
        };
        if let Some(bad) = f.violation(caps) {
            return Err(Error::NotSupMap(bad));
        }
        Ok(f)
    }

    fn violation(&self, caps: &Caps) -> Option<Vec<usize>> {
        let (s, t) = (self.source, self.target);
        let n = s.len();
        if self.map[s.bottom()] != t.bottom() {
            return Some(Vec::new());
        }
        if n <= caps.sup_map_exhaustive && n < bits::MAX_MASK_ELEMENTS {
            let count = 1usize << n;
            let mut src = vec![s.bottom(); count];
            let mut tgt = vec![t.bottom(); count];
            for mask in 1..count {
                let low = mask.trailing_zeros() as usize;
                let rest = mask & (mask - 1);
                src[mask] = s.join(src[rest], low);
                tgt[mask] = t.join(tgt[rest], self.map[low]);
                if self.map[src[mask]] != tgt[mask] {
                    return Some(bits::to_indices(mask as Mask));
                }
            }
            None
        } else {
            (0..n).find_map(|x| {
                (x + 1..n)
                    .find(|&y| self.map[s.join(x, y)] != t.join(self.map[x], self.map[y]))
                    .map(|y| vec![x, y])
            })
        }
    }

    pub fn source(&self) -> &Lattice {
        self.source
    }

    pub fn target(&self) -> &Lattice {
        self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_onto(&self) -> bool {
        is_onto(&self.map, self.target.len())
    }

    pub fn is_injective(&self) -> bool {
        is_injective(&self.map)
    }

    /// `ψ(y) = ⋁{ x : φ(x) <= y }`, which is `⋁φ⁻¹(y)` when `y` is a value
    /// of `φ`.
    pub fn adjoint(&self) -> Vec<usize> {
        let (s, t) = (self.source, self.target);
        (0..t.len())
            .map(|y| s.join_all((0..s.len()).filter(|&x| t.le(self.map[x], y))))
            .collect()
    }

    pub fn check_adjoint(&self, psi: &[usize]) -> AdjointLaws {
        let (s, t) = (self.source, self.target);
        let phi = &self.map;
        let (n, n2) = (s.len(), t.len());
        let psi_is_inf_map = psi[t.top()] == s.top()
            && (0..n2).all(|a| (0..n2).all(|b| psi[t.meet(a, b)] == s.meet(psi[a], psi[b])));
        let galois = (0..n).all(|x| (0..n2).all(|y| t.le(phi[x], y) == s.le(x, psi[y])));
        let phi_psi_phi = (0..n).all(|x| phi[psi[phi[x]]] == phi[x]);
        let psi_phi_psi = (0..n2).all(|y| psi[phi[psi[y]]] == psi[y]);
        let onto_iff_psi_injective = is_onto(phi, n2) == is_injective(psi);
        let injective_iff_psi_onto = is_injective(phi) == is_onto(psi, n);
        let phi_from_psi =
            (0..n).all(|x| phi[x] == t.meet_all((0..n2).filter(|&y| s.le(x, psi[y]))));
        AdjointLaws {
            psi_is_inf_map,
            galois,
            phi_psi_phi,
            psi_phi_psi,
            onto_iff_psi_injective,
            injective_iff_psi_onto,
            phi_from_psi,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn identity_adjoint() {
        let l = two_chain_example();
        let id: Vec<usize> = (0..l.len()).collect();
        let f = SupMap::new(&l, &l, id.clone(), &Caps::default()).unwrap();
        assert_eq!(f.adjoint(), id);
        assert!(f.check_adjoint(&f.adjoint()).all());
    }

    #[test]
    fn coordinate_map_adjoint() {
        // x |-> bottom iff x <= 2, into a two-element chain
        let l = two_chain_example();
        let two = chain(2);
        let map = (0..l.len()).map(|x| usize::from(!l.le(x, 2))).collect();
        let f = SupMap::new(&l, &two, map, &Caps::default()).unwrap();
        let psi = f.adjoint();
        assert_eq!(psi, vec![2, 4]);
        assert!(f.check_adjoint(&psi).all());
    }

    #[test]
    fn non_sup_maps_are_rejected() {
        let l = two_chain_example();
        let two = chain(2);
        // x |-> 1 iff x <= 2 is not a sup-map: it is order-reversing
        let map = (0..l.len()).map(|x| usize::from(l.le(x, 2))).collect();
        assert_eq!(
            SupMap::new(&l, &two, map, &Caps::default()).unwrap_err(),
            Error::NotSupMap(vec![])
        );
        let b3 = boolean_lattice(2);
        let map = vec![0, 1, 1, 0];
        let err = SupMap::new(&b3, &two, map, &Caps::default()).unwrap_err();
        assert_eq!(err, Error::NotSupMap(vec![1, 2]));
    }
}
