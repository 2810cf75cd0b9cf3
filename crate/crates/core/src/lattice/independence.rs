//! Constructions on c-independent subsets of a lattice: splitting joins,
//! pushes, and the correspondence between witnesses and chains.

use serde::Serialize;

use super::Lattice;
use crate::rank::Witness;
use crate::{Caps, Error, Result};

fn witness_of(l: &Lattice, w: &[usize], caps: &Caps) -> Result<Witness> {
    for &x in w {
        l.check_element(x)?;
    }
    l.c_independent(w, caps)?
        .ok_or_else(|| Error::NotIndependent(w.to_vec()))
}

/// The witness row paired with column `col`.
fn partner(witness: &Witness, col: usize) -> usize {
    witness
        .pairs()
        .find(|&(_, c)| c == col)
        .map(|(r, _)| r)
        .expect("column belongs to the witness")
}

fn replace_col(witness: &Witness, old: usize, new: usize) -> Witness {
    Witness::from_pairs(
        witness
            .pairs()
            .map(|(r, c)| (r, if c == old { new } else { c }))
            .collect(),
    )
}

/// Replaces `w[j] = a ∨ b` by `a` or `b` keeping the same witness rows.
///
/// `a` is used when it works; otherwise `b`, which then always does.
pub fn join_split(
    l: &Lattice,
    w: &[usize],
    j: usize,
    parts: (usize, usize),
    caps: &Caps,
) -> Result<(Vec<usize>, Witness)> {
    let witness = witness_of(l, w, caps)?;
    let (a, b) = parts;
    l.check_element(a)?;
    l.check_element(b)?;
    let target = *w.get(j).ok_or(Error::UnknownElement(j))?;
    if l.join(a, b) != target {
        return Err(Error::NotAJoinDecomposition {
            target,
            left: a,
            right: b,
        });
    }
    let m = partner(&witness, target);
    let chosen = if !l.le(a, m) { a } else { b };
    let mut out = w.to_vec();
    out[j] = chosen;
    let new_witness = replace_col(&witness, target, chosen);
    debug_assert!(new_witness.is_triangular(&l.poset().c_matrix()));
    Ok((out, new_witness))
}

/// Repeatedly splits non-sji members along two lower covers until every
/// member is strictly join-irreducible. The size is unchanged.
pub fn refine_to_sji(l: &Lattice, w: &[usize], caps: &Caps) -> Result<(Vec<usize>, Witness)> {
    let mut current = w.to_vec();
    let mut witness = witness_of(l, w, caps)?;
    while let Some(j) = current.iter().position(|&x| !l.is_sji(x)) {
        let covers = l.poset().lower_covers(current[j]);
        let (next, next_witness) = join_split(l, &current, j, (covers[0], covers[1]), caps)?;
        current = next;
        witness = next_witness;
    }
    Ok((current, witness))
}

/// Witness for a strict chain: `l_j` is paired with the element below it
/// in the chain (the bottom for the lowest). The bottom itself is dropped
/// from the independent set.
pub fn chain_witness(l: &Lattice, chain: &[usize]) -> Result<(Vec<usize>, Witness)> {
    for &x in chain {
        l.check_element(x)?;
    }
    if !l.poset().is_chain(chain) {
        return Err(Error::NotAChain(chain.to_vec()));
    }
    let mut sorted = chain.to_vec();
    sorted.sort_by_key(|&x| l.poset().down_bits(x).count_ones(..));
    sorted.retain(|&x| x != l.bottom());
    let mut pairs = Vec::with_capacity(sorted.len());
    for (j, &x) in sorted.iter().enumerate().rev() {
        let below = if j == 0 { l.bottom() } else { sorted[j - 1] };
        pairs.push((below, x));
    }
    let witness = Witness::from_pairs(pairs);
    debug_assert!(witness.is_triangular(&l.poset().c_matrix()));
    Ok((sorted, witness))
}

/// One step of a chain read off a witness: `element <= below` and
/// `element ≰ not_below`, where `below` and `not_below` are consecutive
/// chain members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub element: usize,
    pub below: usize,
    pub not_below: usize,
}

/// A strict chain built from a triangular witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    /// Bottom to top, ending at the top element.
    pub chain: Vec<usize>,
    pub steps: Vec<ChainStep>,
}

/// With witness pairs `(m_s, l_s)` in triangular order, the partial meets
/// `c_s = m_1 ∧ ... ∧ m_s` form a strict chain `c_k < ... < c_1 < T`,
/// separated by `l_s <= c_{s-1}` and `l_s ≰ c_s`.
pub fn witness_chain(l: &Lattice, witness: &Witness) -> Result<ChainCertificate> {
    if !witness.is_triangular(&l.poset().c_matrix()) {
        return Err(Error::NotIndependent(witness.cols.clone()));
    }
    let mut meets = vec![l.top()];
    let mut steps = Vec::with_capacity(witness.size());
    for (m, x) in witness.pairs() {
        let prev = *meets.last().expect("starts with the top");
        let next = l.meet(prev, m);
        if !l.le(x, prev) || l.le(x, next) {
            return Err(Error::NotAChain(meets));
        }
        steps.push(ChainStep {
            element: x,
            below: prev,
            not_below: next,
        });
        meets.push(next);
    }
    meets.reverse();
    Ok(ChainCertificate {
        chain: meets,
        steps,
    })
}

/// Both directions of the equality between c-rank and height.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    pub c_rank: usize,
    pub height: usize,
    /// A c-independent set of maximal size and its witness.
    pub independent: Vec<usize>,
    pub witness: Witness,
    /// The chain obtained from `witness`.
    pub chain_from_witness: ChainCertificate,
    /// A longest chain, bottom to top.
    pub longest_chain: Vec<usize>,
    /// The independent set and witness obtained from `longest_chain`.
    pub independent_from_chain: Vec<usize>,
    pub witness_from_chain: Witness,
}

impl RankCertificate {
    pub fn equal(&self) -> bool {
        self.c_rank == self.height
    }
}

pub fn certify_rank(l: &Lattice, caps: &Caps) -> Result<RankCertificate> {
    let (c_rank, witness) = l.c_rank(caps)?;
    let chain_from_witness = witness_chain(l, &witness)?;
    let (height, longest_chain) = l.height();
    let (independent_from_chain, witness_from_chain) = chain_witness(l, &longest_chain)?;
    Ok(RankCertificate {
        c_rank,
        height,
        independent: witness.cols.clone(),
        witness,
        chain_from_witness,
        longest_chain,
        independent_from_chain,
        witness_from_chain,
    })
}

/// Checks that `w_tilde` is a push of `w` with witness `witness`:
/// position by position, `w_tilde[i] <= w[i]` and `w_tilde[i] ≰ m_i` where
/// `m_i` is the witness row paired with `w[i]`. Returns the same witness
/// rows paired with the new elements.
pub fn verify_push(
    l: &Lattice,
    w: &[usize],
    witness: &Witness,
    w_tilde: &[usize],
) -> Result<Witness> {
    for &x in w.iter().chain(w_tilde) {
        l.check_element(x)?;
    }
    let mut cols = w.to_vec();
    cols.sort_unstable();
    if witness.cols != cols || !witness.is_triangular(&l.poset().c_matrix()) {
        return Err(Error::NotIndependent(w.to_vec()));
    }
    if w_tilde.len() != w.len() {
        return Err(Error::MapLength {
            expected: w.len(),
            found: w_tilde.len(),
        });
    }
    let mut pairs = Vec::with_capacity(w.len());
    for (r, c) in witness.pairs() {
        let i = w.iter().position(|&x| x == c).expect("same columns");
        let y = w_tilde[i];
        if !l.le(y, c) || l.le(y, r) {
            return Err(Error::NotAPush(i));
        }
        pairs.push((r, y));
    }
    let pushed = Witness::from_pairs(pairs);
    debug_assert!(pushed.is_triangular(&l.poset().c_matrix()));
    Ok(pushed)
}

/// All pushes of a strict chain with its chain witness, as sorted sets in
/// canonical order (by size, then lexicographically). The number of
/// pushes is bounded by the `chains` cap.
pub fn enumerate_pushes(l: &Lattice, chain: &[usize], caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let (w, _) = chain_witness(l, chain)?;
    let choices: Vec<Vec<usize>> = w
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            let m = if j == 0 { l.bottom() } else { w[j - 1] };
            (0..l.len())
                .filter(|&y| l.le(y, x) && !l.le(y, m))
                .collect()
        })
        .collect();
    let total = choices
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .unwrap_or(usize::MAX);
    if total > caps.chains {
        return Err(Error::SizeLimitExceeded {
            what: "pushes",
            size: total,
            limit: caps.chains,
        });
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for c in &choices {
        out = out
            .iter()
            .flat_map(|prefix| {
                c.iter().map(move |&y| {
                    let mut v = prefix.clone();
                    v.push(y);
                    v
                })
            })
            .collect();
    }
    for v in &mut out {
        v.sort_unstable();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    const B: usize = 0;
    const T: usize = 4;

    #[test]
    fn split_top_of_two_chain_example() {
        let l = two_chain_example();
        let caps = Caps::default();
        let (w, witness) = join_split(&l, &[T], 0, (2, 3), &caps).unwrap();
        assert!(w == vec![2] || w == vec![3]);
        assert!(witness.is_triangular(&l.poset().c_matrix()));
        assert_eq!(join_split(&l, &[2], 0, (2, 2), &caps).unwrap().0, vec![2]);
        assert_eq!(
            join_split(&l, &[T], 0, (1, 2), &caps).unwrap_err(),
            Error::NotAJoinDecomposition {
                target: T,
                left: 1,
                right: 2
            }
        );
        assert_eq!(
            join_split(&l, &[1, 2, 3, T], 0, (1, 1), &caps).unwrap_err(),
            Error::NotIndependent(vec![1, 2, 3, T])
        );
    }

    #[test]
    fn refine_two_chain_example() {
        let l = two_chain_example();
        let (w, witness) = refine_to_sji(&l, &[1, 2, T], &Caps::default()).unwrap();
        assert_eq!(w, vec![1, 2, 3]);
        assert!(witness.is_triangular(&l.poset().c_matrix()));
    }

    #[test]
    fn chain_and_witness_round_trip() {
        let l = two_chain_example();
        let (w, witness) = chain_witness(&l, &[B, 1, 2, T]).unwrap();
        assert_eq!(w, vec![1, 2, T]);
        assert_eq!(witness.row_order, vec![2, 1, B]);
        let cert = witness_chain(&l, &witness).unwrap();
        assert_eq!(cert.chain, vec![B, 1, 2, T]);
        assert!(chain_witness(&l, &[1, 3]).is_err());
    }

    #[test]
    fn certify_two_chain_example() {
        let cert = certify_rank(&two_chain_example(), &Caps::default()).unwrap();
        assert_eq!((cert.c_rank, cert.height), (3, 3));
        assert_eq!(cert.chain_from_witness.chain.len(), 4);
    }

    #[test]
    fn push_top_to_three() {
        let l = two_chain_example();
        let (w, witness) = chain_witness(&l, &[B, 1, 2, T]).unwrap();
        let same = verify_push(&l, &w, &witness, &w).unwrap();
        assert_eq!(same, witness);
        let pushed = verify_push(&l, &w, &witness, &[1, 2, 3]).unwrap();
        assert_eq!(pushed.cols, vec![1, 2, 3]);
        assert_eq!(
            verify_push(&l, &w, &witness, &[1, 1, 3]),
            Err(Error::NotAPush(1))
        );
        let pushes = enumerate_pushes(&l, &[B, 1, 2, T], &Caps::default()).unwrap();
        assert_eq!(pushes, vec![vec![1, 2, 3], vec![1, 2, T]]);
    }
}
