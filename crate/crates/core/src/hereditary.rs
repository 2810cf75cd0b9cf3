//! Hereditary collections of subsets, their boolean representations and the
//! partition criterion for representability.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::bits::{self, Mask};
use crate::lattice::families::set_family_lattice;
use crate::rank::Peeler;
use crate::{par, Caps, Error, Lattice, Result, SbMatrix, SbScalar};

/// A downward-closed nonempty family of subsets of a finite ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeredCollection {
    ground: Vec<String>,
    members: Vec<Mask>,
    index: FixedBitSet,
}

impl HeredCollection {
    /// Validates a family given as masks over `ground`. Every member `J`
    /// with a missing subset `J - x` is reported.
    pub fn new(ground: Vec<String>, family: Vec<Mask>, caps: &Caps) -> Result<Self> {
        let n = ground.len();
        caps.check("hereditary ground set", n, caps.hered)?;
        if family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let full = bits::full(n);
        if let Some(&bad) = family.iter().find(|&&m| m & !full != 0) {
            return Err(Error::UnknownElement(
                bad.trailing_zeros().max(63 - bad.leading_zeros()) as usize,
            ));
        }
        let mut index = FixedBitSet::with_capacity(1 << n);
        for &m in &family {
            index.insert(m as usize);
        }
        let mut members: Vec<Mask> = index.ones().map(|m| m as Mask).collect();
        bits::canonicalize(&mut members);
        let mut violations = Vec::new();
        for &m in &members {
            for x in bits::iter(m) {
                let sub = m & !(1 << x);
                if !index.contains(sub as usize) {
                    violations.push((bits::to_indices(sub), bits::to_indices(m)));
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::NotDownwardClosed(violations));
        }
        Ok(Self {
            ground,
            members,
            index,
        })
    }

    /// The downward closure of `bases`.
    pub fn from_bases(ground: Vec<String>, bases: &[Mask], caps: &Caps) -> Result<Self> {
        let n = ground.len();
        caps.check("hereditary ground set", n, caps.hered)?;
        if bases.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let family = (0..1u64 << n)
            .filter(|&s| bases.iter().any(|&b| s & !b == 0))
            .collect();
        Self::new(ground, family, caps)
    }

    /// Every subset of the ground set.
    pub fn free(ground: Vec<String>, caps: &Caps) -> Result<Self> {
        let n = ground.len();
        Self::from_bases(ground, &[bits::full(n)], caps)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn ground_len(&self) -> usize {
        self.ground.len()
    }

    /// Members in canonical order (by size, then lexicographically).
    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn contains(&self, set: Mask) -> bool {
        set >> self.ground.len() == 0 && self.index.contains(set as usize)
    }

    /// Inclusion-maximal members.
    pub fn bases(&self) -> Vec<Mask> {
        let n = self.ground.len();
        self.members
            .iter()
            .copied()
            .filter(|&m| (0..n).all(|x| bits::contains(m, x) || !self.contains(m | 1 << x)))
            .collect()
    }

    /// Inclusion-minimal non-members, in canonical order.
    pub fn circuits(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = (0..1u64 << self.ground.len())
            .filter(|&s| !self.contains(s) && bits::iter(s).all(|x| self.contains(s & !(1 << x))))
            .collect();
        bits::canonicalize(&mut out);
        out
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.ground.len())
            .filter(|&x| !self.contains(1 << x))
            .collect()
    }

    /// Pairs forming a two-element circuit.
    pub fn parallel_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.ground.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                let pair = 1 << x | 1 << y;
                if !self.contains(pair) && self.contains(1 << x) && self.contains(1 << y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && self.parallel_pairs().is_empty()
    }

    fn require_simple(&self) -> Result<()> {
        let loops = self.loops();
        let parallel = self.parallel_pairs();
        if loops.is_empty() && parallel.is_empty() {
            Ok(())
        } else {
            Err(Error::NotSimple { loops, parallel })
        }
    }

    /// The first `(p, J)` in canonical order with `{p}` and `J` members but no
    /// `x` in `J` making `J - x + p` a member.
    pub fn pr_violation(&self) -> Option<(usize, Vec<usize>)> {
        let points: Vec<usize> = (0..self.ground.len())
            .filter(|&p| self.contains(1 << p))
            .collect();
        for &j in &self.members {
            if j == 0 {
                continue;
            }
            for &p in &points {
                if !bits::iter(j).any(|x| self.contains((j & !(1 << x)) | 1 << p)) {
                    return Some((p, bits::to_indices(j)));
                }
            }
        }
        None
    }

    pub fn satisfies_pr(&self) -> bool {
        self.pr_violation().is_none()
    }

    /// The collection induced on the elements that are not loops.
    pub fn without_loops(&self, caps: &Caps) -> Result<Self> {
        let keep: Vec<usize> = (0..self.ground.len())
            .filter(|&x| self.contains(1 << x))
            .collect();
        self.restrict(&keep, caps)
    }

    /// The collection induced on `keep`, renumbered in the given order.
    pub fn restrict(&self, keep: &[usize], caps: &Caps) -> Result<Self> {
        let ground = keep.iter().map(|&x| self.ground[x].clone()).collect();
        let inside = bits::from_indices(keep);
        let family = self
            .members
            .iter()
            .filter(|&&m| m & !inside == 0)
            .map(|&m| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &x)| bits::contains(m, x))
                    .fold(0, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Self::new(ground, family, caps)
    }
}

/// Column sets of a boolean matrix that are independent.
pub fn collection_of_matrix(m: &SbMatrix, caps: &Caps) -> Result<HeredCollection> {
    if !m.is_boolean() {
        return Err(Error::NotBoolean);
    }
    caps.check("hereditary ground set", m.cols(), caps.hered)?;
    let family = Peeler::new(m)?
        .independent_sets()
        .into_iter()
        .flatten()
        .collect();
    HeredCollection::new(m.col_labels().to_vec(), family, caps)
}

/// The blocks of a partition as masks, together with its partial cross
/// sections.
fn partial_cross_sections(blocks: &[Mask]) -> Vec<Mask> {
    let mut out = vec![0 as Mask];
    for &b in blocks {
        let mut next = out.clone();
        for &s in &out {
            next.extend(bits::iter(b).map(|x| s | 1 << x));
        }
        out = next;
    }
    out
}

fn full_cross_sections(blocks: &[Mask]) -> Vec<Mask> {
    let mut out = vec![0 as Mask];
    for &b in blocks {
        out = out
            .iter()
            .flat_map(|&s| bits::iter(b).map(move |x| s | 1 << x))
            .collect();
    }
    out
}

fn is_partial_cross_section(blocks: &[Mask], set: Mask) -> bool {
    blocks.iter().map(|&b| b & set).all(|x| x.count_ones() <= 1)
        && blocks.iter().fold(0, |acc, &b| acc | b) & set == set
}

/// Closed sets of an augmented matrix: the zero-sets of its rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSetLattice {
    pub ground: Vec<String>,
    /// In canonical order.
    pub closed_sets: Vec<Mask>,
    /// `rows[i]` is the row (as the set of its `1` entries) whose zero-set
    /// is `closed_sets[i]`.
    pub rows: Vec<Mask>,
    lattice: Lattice,
}

impl ClosedSetLattice {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn is_intersection_closed(&self) -> bool {
        self.closed_sets.iter().all(|&a| {
            self.closed_sets
                .iter()
                .all(|&b| self.closed_sets.contains(&(a & b)))
        })
    }

    /// `x ⊆ y` iff `row(y) <= row(x)`, and distinct sets have distinct rows.
    pub fn rows_reverse_order(&self) -> bool {
        let k = self.closed_sets.len();
        let distinct = {
            let mut r = self.rows.clone();
            r.sort_unstable();
            r.dedup();
            r.len() == k
        };
        distinct
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    let sub = self.closed_sets[i] & !self.closed_sets[j] == 0;
                    let row_le = self.rows[j] & !self.rows[i] == 0;
                    sub == row_le
                })
            })
    }

    /// Partitions of the ground set from maximal chains `∅ = C_k < ... < C_0 = E`,
    /// with blocks `C_{j-1} - C_j` listed from `j = 1`.
    pub fn partitions(&self, caps: &Caps) -> Result<Vec<Vec<Mask>>> {
        let l = &self.lattice;
        let chains = crate::chains::maximal_chains(l, caps)?;
        Ok(chains
            .iter()
            .map(|c| {
                c.windows(2)
                    .map(|w| self.closed_sets[w[0]] & !self.closed_sets[w[1]])
                    .collect()
            })
            .collect())
    }

    /// Union of the partial cross sections of all partitions, in canonical
    /// order.
    pub fn cross_section_family(&self, caps: &Caps) -> Result<Vec<Mask>> {
        let mut all: Vec<Mask> = self
            .partitions(caps)?
            .iter()
            .flat_map(|p| partial_cross_sections(p))
            .collect();
        bits::canonicalize(&mut all);
        Ok(all)
    }
}

/// The augmented matrix `A'`, its closed sets and its row lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmented {
    /// Rows of `A` plus every row with a single `0`, closed under sups
    /// (including the all-zero row), without repeats.
    pub a_prime: SbMatrix,
    pub closed: ClosedSetLattice,
    /// Rows of `A'` under the coordinatewise order.
    pub row_lattice: Lattice,
    /// Whether the column collection of `A` is simple. The closed sets
    /// describe the collection only in that case.
    pub simple: bool,
}

fn row_mask(row: &[SbScalar]) -> Mask {
    row.iter()
        .enumerate()
        .filter(|(_, &x)| x == SbScalar::One)
        .fold(0, |acc, (j, _)| acc | 1 << j)
}

pub fn augment_construction(m: &SbMatrix, caps: &Caps) -> Result<Augmented> {
    let h = collection_of_matrix(m, caps)?;
    let n = m.cols();
    let full = bits::full(n);
    let mut seed: Vec<Mask> = (0..m.rows()).map(|i| row_mask(m.row(i))).collect();
    seed.extend((0..n).map(|j| full & !(1 << j)));
    let mut rows = FixedBitSet::with_capacity(1 << n);
    rows.insert(0);
    let mut work = vec![0 as Mask];
    for s in seed {
        if !rows.put(s as usize) {
            work.push(s);
        }
    }
    while let Some(a) = work.pop() {
        let current: Vec<usize> = rows.ones().collect();
        for b in current {
            let c = a | b as Mask;
            if !rows.put(c as usize) {
                work.push(c);
            }
        }
    }
    let mut row_list: Vec<Mask> = rows.ones().map(|r| r as Mask).collect();
    bits::canonicalize(&mut row_list);
    let a_prime = SbMatrix::from_fn(row_list.len(), n, |i, j| {
        SbScalar::from_bool(bits::contains(row_list[i], j))
    })
    .with_labels(
        crate::matrix::default_labels(row_list.len()),
        m.col_labels().to_vec(),
    )?;
    let row_names: Vec<String> = m.col_labels().to_vec();
    let row_lattice = set_family_lattice(&row_list, &row_names).ok_or(Error::EmptyLattice)?;
    let mut closed_sets: Vec<Mask> = row_list.iter().map(|&r| full & !r).collect();
    bits::canonicalize(&mut closed_sets);
    let closed_rows = closed_sets.iter().map(|&c| full & !c).collect();
    let lattice = set_family_lattice(&closed_sets, &row_names).ok_or(Error::EmptyLattice)?;
    Ok(Augmented {
        a_prime,
        closed: ClosedSetLattice {
            ground: row_names,
            closed_sets,
            rows: closed_rows,
            lattice,
        },
        row_lattice,
        simple: h.is_simple(),
    })
}

/// One partition in which an obstructed basis is a partial cross section,
/// with a non-member cross section it forces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructedPartition {
    pub blocks: Vec<Vec<usize>>,
    /// A minimal non-member cross section, least in canonical order.
    pub offending: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    /// A basis that no admissible partition has as a partial cross section.
    pub basis: Vec<usize>,
    pub partitions: Vec<ObstructedPartition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every basis lies in an admissible partition and the flat matrix
    /// reproduces the collection.
    Representable,
    /// Every basis lies in an admissible partition but the flat matrix does
    /// not reproduce the collection.
    PartitionRepresentableMatrixFailed,
    /// No family of partitions has exactly the members as partial cross
    /// sections, so there is no boolean representation.
    NotRepresentable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representability {
    pub verdict: Verdict,
    /// Chosen partitions, each a list of blocks. When representable they
    /// come from maximal chains of closed sets, largest block first.
    pub partitions: Vec<Vec<Vec<usize>>>,
    pub matrix: Option<SbMatrix>,
    pub obstruction: Option<Obstruction>,
}

/// Set partitions of `{0..n}` with blocks ordered by least element, in
/// lexicographic order of their restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<Mask>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] |= 1 << i;
            go(i + 1, n, blocks, out);
            blocks[b] &= !(1 << i);
        }
        blocks.push(1 << i);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

impl HeredCollection {
    /// Sets `X` such that `I ∪ {p}` is a member for every member `I ⊆ X`
    /// and every `p` outside `X`, in canonical order.
    pub fn flats(&self) -> Vec<Mask> {
        let n = self.ground.len();
        let full = bits::full(n);
        let mut out: Vec<Mask> = (0..=full)
            .filter(|&x| {
                self.members
                    .iter()
                    .filter(|&&i| i & !x == 0)
                    .all(|&i| bits::iter(full & !x).all(|p| self.contains(i | 1 << p)))
            })
            .collect();
        bits::canonicalize(&mut out);
        out
    }

    /// The matrix with one row per flat, `0` on the flat and `1` elsewhere.
    pub fn flat_matrix(&self) -> Result<SbMatrix> {
        let n = self.ground.len();
        let full = bits::full(n);
        let flats = self.flats();
        SbMatrix::from_fn(flats.len(), n, |i, j| {
            SbScalar::from_bool(bits::contains(full & !flats[i], j))
        })
        .with_labels(
            crate::matrix::default_labels(flats.len()),
            self.ground.clone(),
        )
    }
}

/// Decides whether the members are exactly the partial cross sections of
/// some family of partitions of the ground set.
///
/// A partition is admissible when all its cross sections are members; the
/// collection is partition-representable iff every basis is a partial
/// cross section of an admissible partition. A positive answer is then
/// confirmed by the flat matrix, whose chains of closed sets give the
/// reported partitions.
pub fn partition_representability(h: &HeredCollection, caps: &Caps) -> Result<Representability> {
    let n = h.ground_len();
    if n > caps.ground {
        return Err(Error::GroundSetTooLarge {
            size: n,
            limit: caps.ground,
        });
    }
    h.require_simple()?;
    let partitions = set_partitions(n);
    let admissible: Vec<bool> = par::map(&partitions, |p| {
        full_cross_sections(p).into_iter().all(|s| h.contains(s))
    });
    let bases = h.bases();
    let mut chosen: Vec<usize> = Vec::new();
    for &b in &bases {
        if chosen
            .iter()
            .any(|&i| is_partial_cross_section(&partitions[i], b))
        {
            continue;
        }
        match (0..partitions.len())
            .find(|&i| admissible[i] && is_partial_cross_section(&partitions[i], b))
        {
            Some(i) => chosen.push(i),
            None => {
                let obstructed = partitions
                    .iter()
                    .filter(|p| is_partial_cross_section(p, b))
                    .map(|p| {
                        let mut bad: Vec<Mask> = partial_cross_sections(p)
                            .into_iter()
                            .filter(|&s| {
                                !h.contains(s) && bits::iter(s).all(|x| h.contains(s & !(1 << x)))
                            })
                            .collect();
                        bits::canonicalize(&mut bad);
                        ObstructedPartition {
                            blocks: p.iter().map(|&q| bits::to_indices(q)).collect(),
                            offending: bits::to_indices(bad[0]),
                        }
                    })
                    .collect();
                return Ok(Representability {
                    verdict: Verdict::NotRepresentable,
                    partitions: Vec::new(),
                    matrix: None,
                    obstruction: Some(Obstruction {
                        basis: bits::to_indices(b),
                        partitions: obstructed,
                    }),
                });
            }
        }
    }
    let matrix = h.flat_matrix()?;
    let rebuilt = collection_of_matrix(&matrix, caps)?;
    if rebuilt.members() != h.members() {
        return Ok(Representability {
            verdict: Verdict::PartitionRepresentableMatrixFailed,
            partitions: chosen
                .iter()
                .map(|&i| partitions[i].iter().map(|&q| bits::to_indices(q)).collect())
                .collect(),
            matrix: Some(matrix),
            obstruction: None,
        });
    }
    // ordered partitions read off maximal chains of the closed sets
    let closed = augment_construction(&matrix, caps)?.closed;
    let ordered = closed.partitions(caps)?;
    let mut picked: Vec<usize> = Vec::new();
    for &b in &bases {
        if picked
            .iter()
            .any(|&i| is_partial_cross_section(&ordered[i], b))
        {
            continue;
        }
        let i = ordered
            .iter()
            .position(|q| is_partial_cross_section(q, b))
            .expect("closed-set partitions cover every basis");
        picked.push(i);
    }
    Ok(Representability {
        verdict: Verdict::Representable,
        partitions: picked
            .iter()
            .map(|&i| ordered[i].iter().map(|&q| bits::to_indices(q)).collect())
            .collect(),
        matrix: Some(matrix),
        obstruction: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    fn set(xs: &[usize]) -> Mask {
        xs.iter().fold(0, |m, &x| m | 1 << (x - 1))
    }

    #[test]
    fn validation() {
        let caps = Caps::default();
        let free = HeredCollection::free(names(3), &caps).unwrap();
        assert_eq!(free.members().len(), 8);
        assert!(free.circuits().is_empty());
        assert_eq!(
            HeredCollection::new(names(2), vec![0, set(&[2]), set(&[1, 2])], &caps),
            Err(Error::NotDownwardClosed(vec![(vec![0], vec![0, 1])]))
        );
        assert_eq!(
            HeredCollection::new(names(2), vec![], &caps),
            Err(Error::EmptyFamily)
        );
    }

    #[test]
    fn pr_failure() {
        let caps = Caps::default();
        let h = HeredCollection::from_bases(names(3), &[set(&[1, 2]), set(&[3])], &caps).unwrap();
        assert_eq!(h.pr_violation(), Some((2, vec![0, 1])));
        let uniform = HeredCollection::new(
            names(4),
            (0..16).filter(|m: &u64| m.count_ones() <= 2).collect(),
            &caps,
        )
        .unwrap();
        assert!(uniform.satisfies_pr());
    }

    #[test]
    fn matrix_collections() {
        let caps = Caps::default();
        let id = collection_of_matrix(&SbMatrix::identity(3), &caps).unwrap();
        assert_eq!(id, HeredCollection::free(names(3), &caps).unwrap());
        let twin = SbMatrix::from_symbols(&["110", "001"]);
        let h = collection_of_matrix(&twin, &caps).unwrap();
        assert_eq!(h.parallel_pairs(), vec![(0, 1)]);
        assert!(!h.is_simple());
        assert_eq!(
            collection_of_matrix(&SbMatrix::from_symbols(&["g"]), &caps),
            Err(Error::NotBoolean)
        );
    }

    #[test]
    fn augment_small() {
        let caps = Caps::default();
        let aug = augment_construction(&SbMatrix::from_symbols(&["10"]), &caps).unwrap();
        assert_eq!(aug.a_prime.to_rows().len(), 4);
        assert_eq!(aug.closed.closed_sets, vec![0, 0b01, 0b10, 0b11]);
        assert!(aug.closed.is_intersection_closed());
        assert!(aug.closed.rows_reverse_order());
        assert!(!aug.simple);
        let m = SbMatrix::from_symbols(&["10", "01"]);
        let aug = augment_construction(&m, &caps).unwrap();
        let h = collection_of_matrix(&m, &caps).unwrap();
        assert!(aug.simple);
        assert_eq!(aug.closed.cross_section_family(&caps).unwrap(), h.members());
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..7).map(|n| set_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn five_point_counterexample() {
        let caps = Caps::default();
        let bases = [[1, 2, 3], [1, 2, 4], [2, 3, 5], [1, 4, 5], [3, 4, 5]].map(|b| set(&b));
        let h = HeredCollection::from_bases(names(5), &bases, &caps).unwrap();
        assert!(h.is_simple());
        assert!(h.satisfies_pr());
        let r = partition_representability(&h, &caps).unwrap();
        assert_eq!(r.verdict, Verdict::NotRepresentable);
        let ob = r.obstruction.unwrap();
        assert_eq!(ob.basis, vec![0, 1, 2]);
        let forced = ob
            .partitions
            .iter()
            .find(|p| p.blocks == vec![vec![0, 4], vec![1], vec![2, 3]])
            .expect("forced partition listed");
        assert_eq!(forced.offending, vec![1, 3, 4]);
    }

    #[test]
    fn free_collection_is_representable() {
        let caps = Caps::default();
        let h = HeredCollection::free(names(4), &caps).unwrap();
        let r = partition_representability(&h, &caps).unwrap();
        assert_eq!(r.verdict, Verdict::Representable);
        assert_eq!(r.partitions, vec![vec![vec![3], vec![2], vec![1], vec![0]]]);
    }

    #[test]
    fn uniform_collection_uses_flats() {
        let caps = Caps::default();
        let h = HeredCollection::from_bases(
            names(3),
            &[set(&[1, 2]), set(&[1, 3]), set(&[2, 3])],
            &caps,
        )
        .unwrap();
        assert_eq!(
            h.flats(),
            vec![0, set(&[1]), set(&[2]), set(&[3]), set(&[1, 2, 3])]
        );
        let r = partition_representability(&h, &caps).unwrap();
        assert_eq!(r.verdict, Verdict::Representable);
        assert_eq!(r.matrix.unwrap().rows(), 5);
    }
}
