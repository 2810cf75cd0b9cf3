//! Finite lattices: validation, joins and meets, irreducibles, the spec
//! morphism, adjoints of sup-maps and c-independence constructions.

mod adjoint;
pub mod families;
mod independence;
mod irreducible;
mod spec;

pub use adjoint::{AdjointLaws, SupMap};
pub use independence::{
    certify_rank, chain_witness, enumerate_pushes, join_split, refine_to_sji, verify_push,
    witness_chain, ChainCertificate, ChainStep, RankCertificate,
};
pub use irreducible::{ElementClass, IrreducibleReport, SsConvention};
pub use spec::{DistributivityChecks, SpecMorphism};

use crate::bits::{self, Mask};
use crate::rank::Witness;
use crate::{par, Caps, Error, Poset, Result};

/// A finite lattice with precomputed join and meet tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

fn least_of(candidates: &[usize], below: impl Fn(usize, usize) -> bool) -> Option<usize> {
    candidates
        .iter()
        .copied()
        .find(|&u| candidates.iter().all(|&v| below(u, v)))
}

impl Lattice {
    /// Checks that every pair has a unique join and meet.
    pub fn from_poset(poset: Poset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let mut ub = poset.up_bits(x).clone();
                ub.intersect_with(poset.up_bits(y));
                let ub: Vec<usize> = ub.ones().collect();
                if ub.is_empty() {
                    return Err(Error::NoJoin(x, y));
                }
                let j = least_of(&ub, |u, v| poset.le(u, v)).ok_or(Error::NotUnique(x, y))?;
                let mut lb = poset.down_bits(x).clone();
                lb.intersect_with(poset.down_bits(y));
                let lb: Vec<usize> = lb.ones().collect();
                if lb.is_empty() {
                    return Err(Error::NoMeet(x, y));
                }
                let m = least_of(&lb, |u, v| poset.le(v, u)).ok_or(Error::NotUnique(x, y))?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x]);
        Ok(Self {
            poset,
            join,
            meet,
            bottom,
            top,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, x: usize) -> &str {
        self.poset.label(x)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.poset.le(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    /// `⋁ items`, with the empty join equal to the bottom.
    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `⋀ items`, with the empty meet equal to the top.
    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_mask(&self, mask: Mask) -> usize {
        self.join_all(bits::iter(mask))
    }

    pub fn meet_mask(&self, mask: Mask) -> usize {
        self.meet_all(bits::iter(mask))
    }

    /// Edge length of a longest chain and one such chain, bottom to top.
    pub fn height(&self) -> (usize, Vec<usize>) {
        self.poset.height()
    }

    /// The dual lattice.
    pub fn dual(&self) -> Self {
        Self::from_poset(self.poset.reverse()).expect("the dual of a lattice is a lattice")
    }

    pub fn c_rank(&self, caps: &Caps) -> Result<(usize, Witness)> {
        self.poset.c_rank(caps)
    }

    pub fn c_independent(&self, set: &[usize], caps: &Caps) -> Result<Option<Witness>> {
        self.poset.c_independent(set, caps)
    }

    pub fn c_independent_sets(&self, caps: &Caps) -> Result<Vec<Vec<usize>>> {
        self.poset.c_independent_sets(caps)
    }

    /// The first triple `(s, t, u)` in index order with
    /// `s ∧ (t ∨ u) != (s ∧ t) ∨ (s ∧ u)`, or `None` when distributive.
    pub fn distributivity_counterexample(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        let elements: Vec<usize> = (0..n).collect();
        par::find_map_first(&elements, |&s| {
            (0..n).find_map(|t| {
                (0..n)
                    .find(|&u| {
                        self.meet(s, self.join(t, u)) != self.join(self.meet(s, t), self.meet(s, u))
                    })
                    .map(|u| (s, t, u))
            })
        })
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_counterexample().is_none()
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement(x))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn five_element_example_is_a_lattice() {
        let l = two_chain_example();
        assert_eq!(l.len(), 5);
        let (b, one, two, three, t) = (0, 1, 2, 3, 4);
        assert_eq!((l.bottom(), l.top()), (b, t));
        assert_eq!(l.join(two, three), t);
        assert_eq!(l.meet(one, three), b);
        assert_eq!(l.join(one, two), two);
        let covers = l.poset().covering_relation().to_vec();
        assert_eq!(
            covers,
            vec![(b, one), (b, three), (one, two), (two, t), (three, t)]
        );
        assert_eq!(l.height(), (3, vec![b, one, two, t]));
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        let labels = ["a", "b", "c", "d"].map(String::from).to_vec();
        let p = Poset::from_covers(labels, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(Lattice::from_poset(p), Err(Error::NotUnique(0, 1)));
    }

    #[test]
    fn missing_bounds() {
        let labels = ["a", "b"].map(String::from).to_vec();
        let p = Poset::from_covers(labels, &[]).unwrap();
        assert_eq!(Lattice::from_poset(p), Err(Error::NoJoin(0, 1)));
        let labels = ["a", "b", "t"].map(String::from).to_vec();
        let p = Poset::from_covers(labels, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(Lattice::from_poset(p), Err(Error::NoMeet(0, 1)));
    }

    #[test]
    fn boolean_lattices_are_distributive() {
        for n in 0..4 {
            let l = boolean_lattice(n);
            assert_eq!(l.len(), 1 << n);
            assert!(l.is_distributive());
            assert_eq!(l.height().0, n);
        }
    }

    #[test]
    fn diamond_is_not_distributive() {
        let l = diamond();
        let (s, t, u) = l.distributivity_counterexample().expect("M3");
        // all three are atoms
        for x in [s, t, u] {
            assert!(x != l.bottom() && x != l.top());
        }
        assert!(!two_chain_example().is_distributive());
    }

    #[test]
    fn lattice_laws_hold_on_small_families() {
        for l in [
            boolean_lattice(3),
            diamond(),
            pentagon(),
            two_chain_example(),
            lambda(2),
        ] {
            let n = l.len();
            for a in 0..n {
                assert_eq!(l.join(a, a), a);
                assert_eq!(l.meet(a, a), a);
                for b in 0..n {
                    assert_eq!(l.join(a, l.meet(a, b)), a);
                    assert_eq!(l.meet(a, l.join(a, b)), a);
                    for c in 0..n {
                        assert_eq!(l.join(l.join(a, b), c), l.join(a, l.join(b, c)));
                        assert_eq!(l.meet(l.meet(a, b), c), l.meet(a, l.meet(b, c)));
                    }
                }
            }
            assert_eq!(l.join_all([]), l.bottom());
            assert_eq!(l.meet_all([]), l.top());
        }
    }
}
