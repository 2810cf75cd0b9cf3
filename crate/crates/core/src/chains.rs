//! Maximal chains of a lattice, the partitions they induce and their
//! partial cross sections.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::completion::dm_completion;
use crate::{par, Caps, Error, Lattice, Poset, Result};

/// The partition `Q_i = ↓p_{i-1} \ ↓p_i` of `L \ {B}` induced by a maximal
/// chain `T = p_0 > p_1 > ... > p_k = B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainPartition {
    /// Top to bottom.
    pub chain: Vec<usize>,
    /// `blocks[i]` is `Q_{i+1}`, sorted.
    pub blocks: Vec<Vec<usize>>,
}

impl ChainPartition {
    fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok())
    }

    /// `X` meets every block at most once and misses the bottom.
    pub fn is_partial_cross_section(&self, set: &[usize]) -> bool {
        let mut used = vec![false; self.blocks.len()];
        for &x in set {
            match self.block_of(x) {
                Some(i) if !used[i] => used[i] = true,
                _ => return false,
            }
        }
        true
    }

    /// Sets with exactly one element from each block, sorted, in canonical
    /// order.
    pub fn bases(&self, caps: &Caps) -> Result<Vec<Vec<usize>>> {
        let options: Vec<Vec<Option<usize>>> = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().map(Some).collect())
            .collect();
        product_sets(&options, caps)
    }

    /// Every partial cross section, including the empty set.
    pub fn partial_cross_sections(&self, caps: &Caps) -> Result<Vec<Vec<usize>>> {
        let options: Vec<Vec<Option<usize>>> = self
            .blocks
            .iter()
            .map(|b| {
                std::iter::once(None)
                    .chain(b.iter().copied().map(Some))
                    .collect()
            })
            .collect();
        product_sets(&options, caps)
    }
}

fn product_sets(options: &[Vec<Option<usize>>], caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let total = options
        .iter()
        .try_fold(1usize, |acc, o| acc.checked_mul(o.len()))
        .unwrap_or(usize::MAX);
    if total > caps.chains {
        return Err(Error::SizeLimitExceeded {
            what: "cross sections",
            size: total,
            limit: caps.chains,
        });
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for o in options {
        out = out
            .iter()
            .flat_map(|prefix| {
                o.iter().map(move |&choice| {
                    let mut v = prefix.clone();
                    v.extend(choice);
                    v
                })
            })
            .collect();
    }
    for v in &mut out {
        v.sort_unstable();
    }
    canonical(&mut out);
    Ok(out)
}

fn canonical(family: &mut Vec<Vec<usize>>) {
    family.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    family.dedup();
}

/// All maximal chains, top to bottom, by depth-first search over lower
/// covers taken in increasing index order.
pub fn maximal_chains(l: &Lattice, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let covers: Vec<Vec<usize>> = (0..l.len()).map(|x| l.poset().lower_covers(x)).collect();
    let mut out = Vec::new();
    let mut stack = vec![vec![l.top()]];
    while let Some(path) = stack.pop() {
        let last = *path.last().expect("nonempty path");
        if last == l.bottom() {
            if out.len() == caps.chains {
                return Err(Error::ChainLimitExceeded { limit: caps.chains });
            }
            out.push(path);
            continue;
        }
        for &y in covers[last].iter().rev() {
            let mut next = path.clone();
            next.push(y);
            stack.push(next);
        }
    }
    Ok(out)
}

pub fn partition_of_chain(l: &Lattice, chain: &[usize]) -> Result<ChainPartition> {
    let p = l.poset();
    let maximal = chain.iter().all(|&x| x < l.len())
        && chain.first() == Some(&l.top())
        && chain.last() == Some(&l.bottom())
        && chain
            .windows(2)
            .all(|w| p.lower_covers(w[0]).contains(&w[1]));
    if !maximal {
        return Err(Error::NotMaximalChain(chain.to_vec()));
    }
    let blocks = chain
        .windows(2)
        .map(|w| {
            let mut q = p.down_bits(w[0]).clone();
            q.difference_with(p.down_bits(w[1]));
            q.ones().collect()
        })
        .collect();
    Ok(ChainPartition {
        chain: chain.to_vec(),
        blocks,
    })
}

pub fn chain_partitions(l: &Lattice, caps: &Caps) -> Result<Vec<ChainPartition>> {
    maximal_chains(l, caps)?
        .iter()
        .map(|c| partition_of_chain(l, c))
        .collect()
}

/// Index of the first chain partition admitting `set` as a partial cross
/// section.
pub fn independence_via_partitions(
    l: &Lattice,
    set: &[usize],
    caps: &Caps,
) -> Result<Option<usize>> {
    for &x in set {
        l.check_element(x)?;
    }
    Ok(chain_partitions(l, caps)?
        .iter()
        .position(|q| q.is_partial_cross_section(set)))
}

/// Union over all chain partitions of their partial cross sections, in
/// canonical order.
pub fn enumerate_independent_via_partitions(l: &Lattice, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let parts = chain_partitions(l, caps)?;
    union_of_sections(&parts, caps)
}

fn union_of_sections(parts: &[ChainPartition], caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let per_chain = par::map(parts, |q| q.partial_cross_sections(caps));
    let mut all = BTreeSet::new();
    for sections in per_chain {
        all.extend(sections?);
    }
    let mut out: Vec<Vec<usize>> = all.into_iter().collect();
    canonical(&mut out);
    Ok(out)
}

/// Inclusion-maximal sets among all partial cross sections of all chain
/// partitions.
pub fn lattice_bases(l: &Lattice, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let mut all = BTreeSet::new();
    for q in chain_partitions(l, caps)? {
        all.extend(q.bases(caps)?);
    }
    let all: Vec<Vec<usize>> = all.into_iter().collect();
    let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    let mut out: Vec<Vec<usize>> = all
        .iter()
        .filter(|a| !all.iter().any(|b| b.len() > a.len() && is_subset(a, b)))
        .cloned()
        .collect();
    canonical(&mut out);
    Ok(out)
}

/// Partial cross sections of the completion's chain partitions restricted
/// to the embedded poset, as poset elements.
pub fn poset_independent_via_partitions(p: &Poset, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let dm = dm_completion(p)?;
    let mut back = vec![None; dm.len()];
    for (x, &i) in dm.origin.iter().enumerate() {
        back[i] = Some(x);
    }
    let parts: Vec<ChainPartition> = chain_partitions(dm.lattice(), caps)?
        .into_iter()
        .map(|q| ChainPartition {
            chain: q.chain,
            blocks: q
                .blocks
                .iter()
                .map(|b| {
                    let mut r: Vec<usize> = b.iter().filter_map(|&i| back[i]).collect();
                    r.sort_unstable();
                    r
                })
                .collect(),
        })
        .collect();
    union_of_sections(&parts, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::families::*;

    #[test]
    fn two_chain_example_partitions() {
        let l = two_chain_example();
        let caps = Caps::default();
        let chains = maximal_chains(&l, &caps).unwrap();
        assert_eq!(chains, vec![vec![4, 2, 1, 0], vec![4, 3, 0]]);
        let parts = chain_partitions(&l, &caps).unwrap();
        assert_eq!(parts[0].blocks, vec![vec![3, 4], vec![2], vec![1]]);
        assert_eq!(parts[1].blocks, vec![vec![1, 2, 4], vec![3]]);
        assert_eq!(
            lattice_bases(&l, &caps).unwrap(),
            vec![vec![3, 4], vec![1, 2, 3], vec![1, 2, 4]]
        );
        assert_eq!(
            independence_via_partitions(&l, &[1, 2, 3], &caps),
            Ok(Some(0))
        );
        assert_eq!(independence_via_partitions(&l, &[4], &caps), Ok(Some(0)));
        assert!(parts[0].is_partial_cross_section(&[]));
        assert!(!parts[0].is_partial_cross_section(&[3, 4]));
        assert!(!parts[0].is_partial_cross_section(&[0]));
        assert_eq!(
            enumerate_independent_via_partitions(&l, &caps).unwrap(),
            l.c_independent_sets(&caps).unwrap()
        );
    }

    #[test]
    fn chain_counts() {
        let caps = Caps::default();
        assert_eq!(maximal_chains(&chain(4), &caps).unwrap().len(), 1);
        assert_eq!(maximal_chains(&boolean_lattice(3), &caps).unwrap().len(), 6);
        let part = partition_of_chain(&chain(3), &[2, 1, 0]).unwrap();
        assert_eq!(part.blocks, vec![vec![2], vec![1]]);
        assert_eq!(
            partition_of_chain(&chain(3), &[2, 0]),
            Err(Error::NotMaximalChain(vec![2, 0]))
        );
        let small = Caps {
            chains: 5,
            ..Caps::default()
        };
        assert_eq!(
            maximal_chains(&boolean_lattice(3), &small),
            Err(Error::ChainLimitExceeded { limit: 5 })
        );
    }
}
