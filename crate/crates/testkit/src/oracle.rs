//! Slow reference implementations written straight from the definitions.

use cranklab::{Lattice, Poset, SbMatrix, SbScalar};

/// Columns are dependent iff some nonzero 0/1 combination of them has no
/// entry equal to `1`.
pub fn independent(m: &SbMatrix, cols: &[usize]) -> bool {
    let k = cols.len();
    (1u32..1 << k).all(|alpha| {
        (0..m.rows()).any(|i| {
            let sum: SbScalar = (0..k)
                .filter(|&j| alpha >> j & 1 == 1)
                .map(|j| m.get(i, cols[j]))
                .sum();
            sum == SbScalar::One
        })
    })
}

/// Largest number of independent columns.
pub fn rank(m: &SbMatrix) -> usize {
    let n = m.cols();
    (0u32..1 << n)
        .filter(|&s| {
            let cols: Vec<usize> = (0..n).filter(|&j| s >> j & 1 == 1).collect();
            independent(m, &cols)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// c-independence straight from the order: every nonempty `S` inside `set`
/// has some `m` with exactly one member of `S` not below `m`.
pub fn c_independent(p: &Poset, set: &[usize]) -> bool {
    let k = set.len();
    (1u32..1 << k).all(|s| {
        (0..p.len()).any(|m| {
            (0..k)
                .filter(|&j| s >> j & 1 == 1 && !p.le(set[j], m))
                .count()
                == 1
        })
    })
}

/// Every c-independent subset, sorted, in canonical order.
pub fn c_independent_sets(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out: Vec<Vec<usize>> = (0u64..1 << n)
        .map(|s| (0..n).filter(|&j| s >> j & 1 == 1).collect::<Vec<_>>())
        .filter(|set| c_independent(p, set))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn c_rank(p: &Poset) -> usize {
    c_independent_sets(p).last().map_or(0, Vec::len)
}

/// Longest strict chain (edge count) by exhaustive search over `<`.
pub fn height(p: &Poset) -> usize {
    fn longest(p: &Poset, x: usize) -> usize {
        (0..p.len())
            .filter(|&y| p.lt(x, y))
            .map(|y| 1 + longest(p, y))
            .max()
            .unwrap_or(0)
    }
    (0..p.len()).map(|x| longest(p, x)).max().unwrap_or(0)
}

/// Least upper bound computed from the order alone.
fn sup(p: &Poset, set: &[usize]) -> Option<usize> {
    let ub: Vec<usize> = (0..p.len())
        .filter(|&u| set.iter().all(|&x| p.le(x, u)))
        .collect();
    ub.iter().copied().find(|&u| ub.iter().all(|&v| p.le(u, v)))
}

fn inf(p: &Poset, set: &[usize]) -> Option<usize> {
    let lb: Vec<usize> = (0..p.len())
        .filter(|&u| set.iter().all(|&x| p.le(u, x)))
        .collect();
    lb.iter().copied().find(|&u| lb.iter().all(|&v| p.le(v, u)))
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |s| (0..n).filter(|&j| s >> j & 1 == 1).collect())
}

/// `(sji, ji, smi, mi)` by quantifying over every subset.
pub fn irreducibles(l: &Lattice) -> Vec<(bool, bool, bool, bool)> {
    let p = l.poset();
    let n = p.len();
    let joins: Vec<(Vec<usize>, usize)> = subsets(n)
        .map(|s| {
            let j = sup(p, &s).expect("lattice");
            (s, j)
        })
        .collect();
    let meets: Vec<(Vec<usize>, usize)> = subsets(n)
        .map(|s| {
            let m = inf(p, &s).expect("lattice");
            (s, m)
        })
        .collect();
    (0..n)
        .map(|x| {
            let sji = joins
                .iter()
                .filter(|(_, j)| *j == x)
                .all(|(s, _)| s.contains(&x));
            let ji = joins
                .iter()
                .filter(|(_, j)| p.le(x, *j))
                .all(|(s, _)| s.iter().any(|&y| p.le(x, y)));
            let smi = meets
                .iter()
                .filter(|(_, m)| *m == x)
                .all(|(s, _)| s.contains(&x));
            let mi = meets
                .iter()
                .filter(|(_, m)| p.le(*m, x))
                .all(|(s, _)| s.iter().any(|&y| p.le(y, x)));
            (sji, ji, smi, mi)
        })
        .collect()
}

/// The Dedekind-MacNeille completion as the family of cuts `X^{ul}`,
/// each a sorted element list, in canonical order.
pub fn dm_cuts(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out: Vec<Vec<usize>> = subsets(n)
        .map(|x| {
            let upper: Vec<usize> = (0..n).filter(|&u| x.iter().all(|&a| p.le(a, u))).collect();
            (0..n)
                .filter(|&v| upper.iter().all(|&u| p.le(v, u)))
                .collect::<Vec<usize>>()
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

/// Maximal chains (top to bottom) by exhaustive search over all strict
/// chains, in lexicographic order.
pub fn maximal_chains(l: &Lattice) -> Vec<Vec<usize>> {
    let p = l.poset();
    fn extend(p: &Poset, path: &mut Vec<usize>, bottom: usize, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("nonempty");
        if last == bottom {
            out.push(path.clone());
            return;
        }
        for y in 0..p.len() {
            let covered = p.lt(y, last) && !(0..p.len()).any(|z| p.lt(y, z) && p.lt(z, last));
            if covered {
                path.push(y);
                extend(p, path, bottom, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(p, &mut vec![l.top()], l.bottom(), &mut out);
    out
}

/// Whether `f` preserves the join of every subset.
pub fn is_sup_map(source: &Lattice, target: &Lattice, f: &[usize]) -> bool {
    subsets(source.len()).all(|s| {
        let image: Vec<usize> = s.iter().map(|&x| f[x]).collect();
        sup(target.poset(), &image) == Some(f[sup(source.poset(), &s).expect("lattice")])
    })
}
