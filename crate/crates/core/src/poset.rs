//! Structured sets, posets and their structure matrices.
//!
//! The structure matrix of a poset has `a[i][j] = 1` iff `p_i <= p_j`. The
//! c-rank and c-independence use the *c-matrix*: rows are witness elements
//! `m`, columns are candidate elements `l`, and the entry is `1` iff
//! `l` is not below `m`. It is the transpose of the complemented structure
//! matrix, so both have the same rank.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::PosetViolation;
use crate::rank::{self, Witness};
use crate::{bits, Caps, Error, Result, SbMatrix, SbScalar};

/// A finite set with a binary relation recorded by a boolean square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredSet {
    labels: Vec<String>,
    relation: SbMatrix,
}

impl StructuredSet {
    pub fn new(labels: Vec<String>, relation: SbMatrix) -> Result<Self> {
        if !relation.is_square() {
            return Err(Error::NotSquare {
                rows: relation.rows(),
                cols: relation.cols(),
            });
        }
        if !relation.is_boolean() {
            return Err(Error::NotBoolean);
        }
        if labels.len() != relation.rows() {
            return Err(Error::LabelCount {
                expected: relation.rows(),
                found: labels.len(),
            });
        }
        let relation = relation.with_labels(labels.clone(), labels.clone())?;
        Ok(Self { labels, relation })
    }

    pub fn from_fn(labels: Vec<String>, related: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let relation = SbMatrix::from_fn(n, n, |i, j| SbScalar::from_bool(related(i, j)));
        Self::new(labels, relation).expect("square boolean by construction")
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relation(&self) -> &SbMatrix {
        &self.relation
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.relation.get(i, j) == SbScalar::One
    }

    /// `rank` of the complemented structure matrix.
    pub fn c_rank(&self, caps: &Caps) -> Result<(usize, Witness)> {
        rank::rank_with(&self.relation.complement(), caps)
    }
}

/// A validated finite partial order. Elements are identified by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// `up[i] = { j : i <= j }`
    up: Vec<FixedBitSet>,
    /// `down[i] = { j : j <= i }`
    down: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity, reporting every
    /// violation.
    pub fn validate(s: &StructuredSet) -> Result<Self> {
        let n = s.len();
        let mut violations = Vec::new();
        for i in 0..n {
            if !s.related(i, i) {
                violations.push(PosetViolation::NotReflexive { element: i });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if s.related(i, j) && s.related(j, i) {
                    violations.push(PosetViolation::NotAntisymmetric { a: i, b: j });
                }
            }
        }
        for a in 0..n {
            for via in (0..n).filter(|&v| v != a && s.related(a, v)) {
                for b in (0..n).filter(|&b| b != via && b != a && s.related(via, b)) {
                    if !s.related(a, b) {
                        violations.push(PosetViolation::NotTransitive { a, via, b });
                    }
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::InvalidPoset(violations));
        }
        Ok(Self::from_valid(s.labels().to_vec(), |i, j| {
            s.related(i, j)
        }))
    }

    /// Builds from a relation already known to be a partial order.
    fn from_valid(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, ui) in up.iter_mut().enumerate() {
            for j in (0..n).filter(|&j| le(i, j)) {
                ui.insert(j);
                down[j].insert(i);
            }
        }
        let mut covers = Vec::new();
        for (x, ux) in up.iter().enumerate() {
            for y in ux.ones().filter(|&y| y != x) {
                let mut between = ux.clone();
                between.intersect_with(&down[y]);
                if between.count_ones(..) == 2 {
                    covers.push((x, y));
                }
            }
        }
        Self {
            labels,
            up,
            down,
            covers,
        }
    }

    /// Validates the relation given by `le`.
    pub fn from_le_fn(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Self::validate(&StructuredSet::from_fn(labels, le))
    }

    /// The relation listed by `pairs`, with reflexive pairs implied.
    pub fn from_le_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut rel = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(a.max(b)));
            }
            rel[a][b] = true;
        }
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        Self::from_le_fn(labels, |i, j| rel[i][j])
    }

    /// Reflexive-transitive closure of `covers`, then validated.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut reach = vec![FixedBitSet::with_capacity(n); n];
        for (i, r) in reach.iter_mut().enumerate() {
            r.insert(i);
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(a.max(b)));
            }
            reach[a].insert(b);
        }
        // Warshall
        for k in 0..n {
            let via = reach[k].clone();
            for r in reach.iter_mut() {
                if r.contains(k) {
                    r.union_with(&via);
                }
            }
        }
        Self::from_le_fn(labels, |i, j| reach[i].contains(j))
    }

    pub fn from_structure_matrix(labels: Vec<String>, a: SbMatrix) -> Result<Self> {
        Self::validate(&StructuredSet::new(labels, a)?)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le(i, j) || self.le(j, i)
    }

    pub fn structured_set(&self) -> StructuredSet {
        StructuredSet::from_fn(self.labels.clone(), |i, j| self.le(i, j))
    }

    /// `A(P)`: entry `(i, j)` is `1` iff `p_i <= p_j`.
    pub fn structure_matrix(&self) -> SbMatrix {
        self.structured_set().relation().clone()
    }

    /// Rows are witness elements `m`, columns candidates `l`; `1` iff `l ≰ m`.
    pub fn c_matrix(&self) -> SbMatrix {
        self.structure_matrix().complement().transpose()
    }

    /// The c-rank with a witness in the c-matrix: `witness.cols` is a
    /// c-independent set and `witness.rows` the elements certifying it.
    pub fn c_rank(&self, caps: &Caps) -> Result<(usize, Witness)> {
        rank::rank_with(&self.c_matrix(), caps)
    }

    /// Whether `set` is c-independent, with a witness if so.
    pub fn c_independent(&self, set: &[usize], caps: &Caps) -> Result<Option<Witness>> {
        if set.is_empty() {
            return Ok(Some(Witness::default()));
        }
        rank::columns_independent_with(&self.c_matrix(), set, caps)
    }

    /// Every c-independent subset, including the empty set, in canonical
    /// order (by size, then lexicographically).
    pub fn c_independent_sets(&self, caps: &Caps) -> Result<Vec<Vec<usize>>> {
        rank::independent_column_sets(&self.c_matrix(), caps)
    }

    /// The same elements with the order reversed.
    pub fn reverse(&self) -> Self {
        Self::from_valid(self.labels.clone(), |i, j| self.le(j, i))
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement(x))
        }
    }

    /// `{ y : y >= x }`, sorted.
    pub fn up_set(&self, x: usize) -> Result<Vec<usize>> {
        self.check(x)?;
        Ok(self.up[x].ones().collect())
    }

    /// `{ y : y <= x }`, sorted.
    pub fn down_set(&self, x: usize) -> Result<Vec<usize>> {
        self.check(x)?;
        Ok(self.down[x].ones().collect())
    }

    pub(crate) fn down_bits(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub(crate) fn up_bits(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// `q <= p` and `p` in `set` imply `q` in `set`.
    pub fn is_order_ideal(&self, set: &[usize]) -> Result<bool> {
        let mut members = FixedBitSet::with_capacity(self.len());
        for &p in set {
            self.check(p)?;
            members.insert(p);
        }
        Ok(set.iter().all(|&p| self.down[p].is_subset(&members)))
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between, sorted.
    pub fn covering_relation(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|c| c.0 == x)
            .map(|c| c.1)
            .collect()
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|c| c.1 == x)
            .map(|c| c.0)
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.down[x].count_ones(..) == 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.up[x].count_ones(..) == 1)
            .collect()
    }

    /// Elements sorted so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].count_ones(..), x));
        order
    }

    /// Edge length of a longest strict chain, and the lexicographically least
    /// such chain listed bottom to top.
    pub fn height(&self) -> (usize, Vec<usize>) {
        if self.is_empty() {
            return (0, Vec::new());
        }
        let mut above = vec![0usize; self.len()];
        for &x in self.linear_extension().iter().rev() {
            above[x] = self
                .upper_covers(x)
                .into_iter()
                .map(|y| above[y] + 1)
                .max()
                .unwrap_or(0);
        }
        let h = *above.iter().max().expect("nonempty");
        let mut cur = (0..self.len())
            .find(|&x| above[x] == h)
            .expect("maximum attained");
        let mut chain = vec![cur];
        while above[cur] > 0 {
            cur = self
                .upper_covers(cur)
                .into_iter()
                .find(|&y| above[y] + 1 == above[cur])
                .expect("longest path continues");
            chain.push(cur);
        }
        (h, chain)
    }

    /// The subposet on `elements` (kept in the given order).
    pub fn restrict(&self, elements: &[usize]) -> Self {
        let labels = elements.iter().map(|&i| self.labels[i].clone()).collect();
        Self::from_valid(labels, |i, j| self.le(elements[i], elements[j]))
    }

    /// Whether `chain` (in any order) is totally ordered with distinct
    /// elements.
    pub fn is_chain(&self, chain: &[usize]) -> bool {
        chain.iter().all(|&x| x < self.len())
            && chain.iter().enumerate().all(|(a, &x)| {
                chain[a + 1..]
                    .iter()
                    .all(|&y| x != y && self.comparable(x, y))
            })
    }

    pub(crate) fn mask_of(&self, set: &FixedBitSet) -> bits::Mask {
        set.ones().fold(0, |m, i| m | 1 << i)
    }
}

/// JSON-friendly view of a poset.
#[derive(Debug, Clone, Serialize)]
pub struct PosetSummary {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl From<&Poset> for PosetSummary {
    fn from(p: &Poset) -> Self {
        Self {
            elements: p.labels().to_vec(),
            covers: p
                .covering_relation()
                .iter()
                .map(|&(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
                .collect(),
        }
    }
}
