//! Lattice completions of a poset by families of down-sets.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::lattice::families::set_family_lattice;
use crate::{Caps, Error, Lattice, Poset, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Completion {
    /// Intersections of principal down-sets, with the whole set on top.
    DedekindMacNeille,
    /// Unions of principal down-sets, with the empty set at the bottom.
    UnionClosure,
}

/// A family of subsets of a poset's elements ordered by inclusion, with the
/// embedding `p -> ↓p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamilyLattice {
    pub kind: Completion,
    pub ground: Vec<String>,
    /// Members in canonical order (by size, then lexicographically).
    pub members: Vec<Mask>,
    /// `origin[p]` is the index in `members` of `↓p`.
    pub origin: Vec<usize>,
    lattice: Lattice,
}

impl SetFamilyLattice {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member_elements(&self, i: usize) -> Vec<usize> {
        bits::to_indices(self.members[i])
    }

    pub fn member_labels(&self, i: usize) -> Vec<String> {
        bits::iter(self.members[i])
            .map(|x| self.ground[x].clone())
            .collect()
    }

    /// Every pairwise intersection (for DM) or union (for UC) is a member.
    pub fn is_closed(&self) -> bool {
        let has: BTreeSet<Mask> = self.members.iter().copied().collect();
        self.members.iter().all(|&a| {
            self.members.iter().all(|&b| match self.kind {
                Completion::DedekindMacNeille => has.contains(&(a & b)),
                Completion::UnionClosure => has.contains(&(a | b)),
            })
        })
    }

    /// `p <= q` iff `↓p ⊆ ↓q`, for the poset the family was built from.
    pub fn is_order_embedding(&self, p: &Poset) -> bool {
        let n = p.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (x, y) = (self.members[self.origin[a]], self.members[self.origin[b]]);
                p.le(a, b) == (x & !y == 0)
            })
        })
    }
}

fn check_size(p: &Poset) -> Result<()> {
    if p.len() > bits::MAX_MASK_ELEMENTS {
        Err(Error::TooManyElements {
            what: "completion ground set",
            size: p.len(),
            limit: bits::MAX_MASK_ELEMENTS,
        })
    } else {
        Ok(())
    }
}

fn principal(p: &Poset) -> Vec<Mask> {
    (0..p.len()).map(|x| p.mask_of(p.down_bits(x))).collect()
}

fn close(seed: &[Mask], op: impl Fn(Mask, Mask) -> Mask) -> BTreeSet<Mask> {
    let mut family: BTreeSet<Mask> = seed.iter().copied().collect();
    let mut work: Vec<Mask> = family.iter().copied().collect();
    while let Some(a) = work.pop() {
        let current: Vec<Mask> = family.iter().copied().collect();
        for b in current {
            let c = op(a, b);
            if family.insert(c) {
                work.push(c);
            }
        }
    }
    family
}

fn build(p: &Poset, kind: Completion, family: BTreeSet<Mask>) -> Result<SetFamilyLattice> {
    let mut members: Vec<Mask> = family.into_iter().collect();
    bits::canonicalize(&mut members);
    let downs = principal(p);
    let origin = downs
        .iter()
        .map(|d| {
            members
                .iter()
                .position(|m| m == d)
                .expect("principal sets are members")
        })
        .collect();
    let lattice = set_family_lattice(&members, p.labels()).ok_or(Error::EmptyLattice)?;
    Ok(SetFamilyLattice {
        kind,
        ground: p.labels().to_vec(),
        members,
        origin,
        lattice,
    })
}

/// The Dedekind-MacNeille completion: principal down-sets closed under
/// intersection, plus the whole set. The empty set is a member only if it
/// is an intersection.
pub fn dm_completion(p: &Poset) -> Result<SetFamilyLattice> {
    check_size(p)?;
    let mut family = close(&principal(p), |a, b| a & b);
    family.insert(bits::full(p.len()));
    build(p, Completion::DedekindMacNeille, family)
}

/// Principal down-sets closed under union, plus the empty set.
pub fn union_closure(p: &Poset) -> Result<SetFamilyLattice> {
    check_size(p)?;
    let mut family = close(&principal(p), |a, b| a | b);
    family.insert(0);
    build(p, Completion::UnionClosure, family)
}

/// c-rank of a poset compared with c-rank and height of its completion, and
/// independent subsets of the completion restricted to the embedded poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub c_rank_poset: usize,
    pub c_rank_completion: usize,
    pub height_completion: usize,
    /// Independent sets of the completion lying inside the image of the
    /// poset, as poset elements, in canonical order.
    pub restricted: Vec<Vec<usize>>,
    /// Independent sets of the poset computed directly.
    pub direct: Vec<Vec<usize>>,
}

impl RestrictionReport {
    pub fn ranks_agree(&self) -> bool {
        self.c_rank_poset == self.c_rank_completion
            && self.c_rank_completion == self.height_completion
    }

    pub fn families_agree(&self) -> bool {
        self.restricted == self.direct
    }
}

fn canonical_sort(family: &mut [Vec<usize>]) {
    family.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

pub fn restrict_independence(p: &Poset, caps: &Caps) -> Result<RestrictionReport> {
    let dm = dm_completion(p)?;
    let l = dm.lattice();
    let (c_rank_poset, _) = p.c_rank(caps)?;
    let (c_rank_completion, _) = l.c_rank(caps)?;
    let (height_completion, _) = l.height();
    let mut back = vec![None; dm.len()];
    for (x, &i) in dm.origin.iter().enumerate() {
        back[i] = Some(x);
    }
    let mut restricted: Vec<Vec<usize>> = l
        .c_independent_sets(caps)?
        .into_iter()
        .filter_map(|set| {
            set.into_iter()
                .map(|i| back[i])
                .collect::<Option<Vec<usize>>>()
        })
        .map(|mut v| {
            v.sort_unstable();
            v
        })
        .collect();
    canonical_sort(&mut restricted);
    let mut direct = p.c_independent_sets(caps)?;
    canonical_sort(&mut direct);
    Ok(RestrictionReport {
        c_rank_poset,
        c_rank_completion,
        height_completion,
        restricted,
        direct,
    })
}
