//! Permanent, nonsingularity, markers, column independence and rank.
//!
//! A square matrix is nonsingular when its permanent is exactly `1`, which
//! happens iff its rows and columns can be permuted into lower-triangular
//! form with `1` on the diagonal and `0` above it. The search here peels
//! markers: a row whose restriction to the live columns is a single `1`
//! among zeros fixes the next diagonal entry. The first row of a triangular
//! form is such a marker, and a row used once is all-zero on the remaining
//! live columns, so the search state is the live column set alone.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use crate::bits::{self, Mask};
use crate::{par, Caps, Error, Result, SbMatrix, SbScalar};

/// A nonsingular `k x k` submatrix certifying independence of `cols`.
///
/// `rows` and `cols` are sorted indices; `row_order` and `col_order` list the
/// same indices in an order that puts the submatrix in triangular form:
/// entry `(row_order[s], col_order[s])` is `1` and entry
/// `(row_order[s], col_order[t])` is `0` for every `t > s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Witness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
}

impl Witness {
    pub(crate) fn from_pairs(pairs: Vec<(usize, usize)>) -> Self {
        let (row_order, col_order): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let mut rows = row_order.clone();
        let mut cols = col_order.clone();
        rows.sort_unstable();
        cols.sort_unstable();
        Self {
            rows,
            cols,
            row_order,
            col_order,
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `(row, col)` pairs along the diagonal of the triangular form.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.row_order
            .iter()
            .copied()
            .zip(self.col_order.iter().copied())
    }

    /// Checks the triangular form exactly against `m`.
    pub fn is_triangular(&self, m: &SbMatrix) -> bool {
        let k = self.row_order.len();
        if self.col_order.len() != k
            || !is_permutation_of(&self.row_order, &self.rows)
            || !is_permutation_of(&self.col_order, &self.cols)
            || self
                .rows
                .iter()
                .chain(&self.row_order)
                .any(|&r| r >= m.rows())
            || self
                .cols
                .iter()
                .chain(&self.col_order)
                .any(|&c| c >= m.cols())
        {
            return false;
        }
        (0..k).all(|s| {
            m.get(self.row_order[s], self.col_order[s]) == SbScalar::One
                && (s + 1..k).all(|t| m.get(self.row_order[s], self.col_order[t]) == SbScalar::Zero)
        })
    }
}

fn is_permutation_of(order: &[usize], sorted: &[usize]) -> bool {
    let mut o = order.to_vec();
    o.sort_unstable();
    o == sorted && o.windows(2).all(|w| w[0] < w[1])
}

/// A subrow holding a single `1` with every other entry `0`.
///
/// Reported markers are maximal: the `1` at `col` together with every `0` of
/// the row. `full_row` marks a marker spanning the whole row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Marker {
    pub row: usize,
    pub col: usize,
    pub length: usize,
    pub full_row: bool,
}

/// Column-independence search over a fixed matrix.
///
/// Built once per matrix; answers independence queries for column subsets
/// given as masks. Supports at most 64 columns.
#[derive(Debug, Clone)]
pub struct Peeler {
    masks: Vec<(Mask, Mask)>,
    cols: usize,
}

impl Peeler {
    pub fn new(m: &SbMatrix) -> Result<Self> {
        if m.cols() > bits::MAX_MASK_ELEMENTS {
            return Err(Error::TooManyElements {
                what: "independence search",
                size: m.cols(),
                limit: bits::MAX_MASK_ELEMENTS,
            });
        }
        Ok(Self {
            masks: m.row_masks(),
            cols: m.cols(),
        })
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Column `c` is a marker position of some row on `live`.
    fn has_marker(&self, live: Mask, c: usize) -> bool {
        let bit = 1 << c;
        self.masks
            .iter()
            .any(|&(ones, ghosts)| ghosts & live == 0 && ones & live == bit)
    }

    pub fn is_independent(&self, cols: Mask) -> bool {
        self.peel(cols, &mut HashSet::new(), None).is_some()
    }

    /// A triangular witness for `cols`, using rows in input order where
    /// there is a choice.
    pub fn witness(&self, cols: Mask) -> Option<Witness> {
        self.peel(cols, &mut HashSet::new(), None)
            .map(Witness::from_pairs)
    }

    /// Like [`Peeler::witness`] but only rows in `rows` may be used.
    pub fn witness_in_rows(&self, cols: Mask, rows: &[usize]) -> Option<Witness> {
        self.peel(cols, &mut HashSet::new(), Some(rows))
            .map(Witness::from_pairs)
    }

    fn peel(
        &self,
        live: Mask,
        failed: &mut HashSet<Mask>,
        rows: Option<&[usize]>,
    ) -> Option<Vec<(usize, usize)>> {
        if live == 0 {
            return Some(Vec::new());
        }
        if failed.contains(&live) {
            return None;
        }
        let mut tried: Mask = 0;
        let candidates: Box<dyn Iterator<Item = usize>> = match rows {
            Some(rows) => Box::new(rows.iter().copied()),
            None => Box::new(0..self.masks.len()),
        };
        for r in candidates {
            let (ones, ghosts) = self.masks[r];
            let hit = ones & live;
            if ghosts & live != 0 || hit.count_ones() != 1 || tried & hit != 0 {
                continue;
            }
            tried |= hit;
            let c = hit.trailing_zeros() as usize;
            if let Some(mut rest) = self.peel(live & !hit, failed, rows) {
                rest.insert(0, (r, c));
                return Some(rest);
            }
        }
        failed.insert(live);
        None
    }

    /// Every independent column subset, level by level (the empty set first).
    ///
    /// Independent sets are closed under taking subsets, and `S` is
    /// independent iff some `c` in `S` is a marker position on `S` with
    /// `S - c` independent.
    pub fn independent_sets(&self) -> Vec<Vec<Mask>> {
        let mut levels = vec![vec![0 as Mask]];
        loop {
            let last = levels.last().expect("nonempty");
            let mut next = par::flat_map(last, |&t| {
                (0..self.cols)
                    .filter(|&c| !bits::contains(t, c))
                    .map(|c| (t | 1 << c, c))
                    .filter(|&(s, c)| self.has_marker(s, c))
                    .map(|(s, _)| s)
                    .collect::<Vec<_>>()
            });
            if next.is_empty() {
                return levels;
            }
            next.sort_unstable_by(|&a, &b| bits::lex_cmp(a, b));
            next.dedup();
            levels.push(next);
        }
    }
}

fn check_square(m: &SbMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// Sum over `S_n` of `a[π(1),1]···a[π(n),n]`, evaluated in the semiring.
pub fn permanent(m: &SbMatrix) -> Result<SbScalar> {
    permanent_with(m, &Caps::default())
}

pub fn permanent_with(m: &SbMatrix, caps: &Caps) -> Result<SbScalar> {
    check_square(m)?;
    let n = m.rows();
    if n == 0 {
        return Err(Error::EmptySelection);
    }
    caps.check("permanent order", n, caps.permanent)?;
    let mut total = SbScalar::Zero;
    for perm in (0..n).permutations(n) {
        let term: SbScalar = perm.iter().enumerate().map(|(j, &i)| m.get(i, j)).product();
        total = total + term;
        if total == SbScalar::Ghost {
            break;
        }
    }
    Ok(total)
}

/// Nonsingularity by marker peeling, with a triangular witness when true.
pub fn is_nonsingular(m: &SbMatrix) -> Result<Option<Witness>> {
    check_square(m)?;
    let peeler = Peeler::new(m)?;
    Ok(peeler.witness(bits::full(m.cols())))
}

/// All maximal markers of `m`, row by row.
pub fn find_markers(m: &SbMatrix) -> Vec<Marker> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        let row = m.row(i);
        let zeros = row.iter().filter(|&&x| x == SbScalar::Zero).count();
        let ones = row.iter().filter(|&&x| x == SbScalar::One).count();
        for (j, _) in row.iter().enumerate().filter(|(_, &x)| x == SbScalar::One) {
            out.push(Marker {
                row: i,
                col: j,
                length: zeros + 1,
                full_row: ones == 1 && zeros + 1 == row.len(),
            });
        }
    }
    out
}

/// Whether the selected columns are independent, with a witness if so.
pub fn columns_independent(m: &SbMatrix, cols: &[usize]) -> Result<Option<Witness>> {
    columns_independent_with(m, cols, &Caps::default())
}

pub fn columns_independent_with(
    m: &SbMatrix,
    cols: &[usize],
    caps: &Caps,
) -> Result<Option<Witness>> {
    if cols.is_empty() {
        return Err(Error::EmptySelection);
    }
    if let Some(&j) = cols.iter().find(|&&j| j >= m.cols()) {
        return Err(Error::UnknownColumn(j));
    }
    caps.check("matrix rows", m.rows(), caps.rank)?;
    caps.check("matrix columns", m.cols(), caps.rank)?;
    let peeler = Peeler::new(m)?;
    Ok(peeler.witness(bits::from_indices(cols)))
}

/// Rank with a witness of maximal size.
///
/// Among maximal witnesses the one with the lexicographically least row set
/// is returned, and for that row set the lexicographically least column set.
pub fn rank(m: &SbMatrix) -> Result<(usize, Witness)> {
    rank_with(m, &Caps::default())
}

pub fn rank_with(m: &SbMatrix, caps: &Caps) -> Result<(usize, Witness)> {
    caps.check("matrix rows", m.rows(), caps.rank)?;
    caps.check("matrix columns", m.cols(), caps.rank)?;
    if m.rows() == 0 || m.cols() == 0 {
        return Ok((0, Witness::default()));
    }
    // Row independence is column independence of the transpose, and a row
    // set lies in a nonsingular submatrix iff it is independent.
    let row_levels = Peeler::new(&m.transpose())?.independent_sets();
    let k = row_levels.len() - 1;
    if k == 0 {
        return Ok((0, Witness::default()));
    }
    let best_rows = least(&row_levels[k]);
    let rows = bits::to_indices(best_rows);
    let all_cols: Vec<usize> = (0..m.cols()).collect();
    let restricted = m.submatrix(&rows, &all_cols)?;
    let col_levels = Peeler::new(&restricted)?.independent_sets();
    debug_assert_eq!(col_levels.len() - 1, k);
    let best_cols = least(&col_levels[k]);
    let witness = Peeler::new(m)?
        .witness_in_rows(best_cols, &rows)
        .expect("row and column sets form a nonsingular submatrix");
    Ok((k, witness))
}

fn least(level: &[Mask]) -> Mask {
    *level
        .iter()
        .min_by(|&&a, &&b| bits::lex_cmp(a, b))
        .expect("level is nonempty")
}

/// All independent column subsets (including the empty set), each as a
/// sorted index vector, in canonical order.
pub fn independent_column_sets(m: &SbMatrix, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    caps.check("matrix rows", m.rows(), caps.rank)?;
    caps.check("matrix columns", m.cols(), caps.rank)?;
    let levels = Peeler::new(m)?.independent_sets();
    Ok(levels.into_iter().flatten().map(bits::to_indices).collect())
}
