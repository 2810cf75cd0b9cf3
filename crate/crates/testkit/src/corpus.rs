//! Exhaustive and seeded random generators of posets, lattices, sup-maps
//! and matrices.

use cranklab::completion::dm_completion;
use cranklab::{Lattice, Poset, SbMatrix, SbScalar};
use rand::{Rng, RngExt};

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Every poset on `{0..n}` whose order refines the natural order, i.e.
/// every labelled poset with `0, 1, ..., n-1` a linear extension. Each
/// isomorphism class occurs at least once.
pub fn natural_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for s in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = s >> k & 1 == 1;
        }
        let transitive = (0..n)
            .all(|i| (i + 1..n).all(|j| !rel[i][j] || (j + 1..n).all(|k| !rel[j][k] || rel[i][k])));
        if transitive {
            out.push(Poset::from_le_fn(names(n), |i, j| i == j || rel[i][j]).expect("valid poset"));
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// A complete isomorphism invariant: the least adjacency string over
/// orderings that respect (down-set size, up-set size).
pub fn canonical_form(p: &Poset) -> Vec<bool> {
    let n = p.len();
    let key = |x: usize| {
        let down = (0..n).filter(|&y| p.le(y, x)).count();
        let up = (0..n).filter(|&y| p.le(x, y)).count();
        (down, up)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| key(x));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in &order {
        match classes.last_mut() {
            Some(c) if key(c[0]) == key(x) => c.push(x),
            _ => classes.push(vec![x]),
        }
    }
    let options: Vec<Vec<Vec<usize>>> = classes.iter().map(|c| permutations(c)).collect();
    let mut best: Option<Vec<bool>> = None;
    let mut choice = vec![0; options.len()];
    loop {
        let sigma: Vec<usize> = choice
            .iter()
            .enumerate()
            .flat_map(|(c, &k)| options[c][k].iter().copied())
            .collect();
        let code: Vec<bool> = sigma
            .iter()
            .flat_map(|&a| sigma.iter().map(move |&b| p.le(a, b)))
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                let mut code = vec![n != 0];
                code.extend(best.expect("at least one ordering"));
                return code;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn dedup_by_iso<T>(items: Vec<T>, poset: impl Fn(&T) -> &Poset) -> Vec<T> {
    let mut seen = std::collections::HashSet::new();
    items
        .into_iter()
        .filter(|x| seen.insert(canonical_form(poset(x))))
        .collect()
}

/// One poset from each isomorphism class on exactly `n` elements.
pub fn posets(n: usize) -> Vec<Poset> {
    dedup_by_iso(natural_posets(n), |p| p)
}

/// One poset from each isomorphism class on `1..=n` elements.
pub fn posets_up_to(n: usize) -> Vec<Poset> {
    (1..=n).flat_map(posets).collect()
}

/// `B`, the elements of `inner`, then `T`.
fn bounded(inner: &Poset) -> Poset {
    let k = inner.len();
    let mut labels = vec!["B".to_string()];
    labels.extend(inner.labels().iter().map(|l| format!("x{l}")));
    labels.push("T".into());
    Poset::from_le_fn(labels, |i, j| {
        i == 0 || j == k + 1 || (i >= 1 && j >= 1 && i <= k && j <= k && inner.le(i - 1, j - 1))
    })
    .expect("valid poset")
}

/// One lattice from each isomorphism class on exactly `n` elements. A
/// lattice is its inner poset with a bottom and top adjoined, so bounding
/// every inner poset reaches every class exactly once.
pub fn lattices(n: usize) -> Vec<Lattice> {
    match n {
        0 => Vec::new(),
        1 => vec![cranklab::lattice::families::chain(1)],
        _ => {
            let inner = if n == 2 {
                vec![Poset::from_le_fn(Vec::new(), |_, _| false).expect("empty")]
            } else {
                posets(n - 2)
            };
            inner
                .iter()
                .filter_map(|q| Lattice::from_poset(bounded(q)).ok())
                .collect()
        }
    }
}

pub fn lattices_up_to(n: usize) -> Vec<Lattice> {
    (1..=n).flat_map(lattices).collect()
}

/// Completions of every poset on at most `n` elements, one per isomorphism
/// class.
pub fn completions_up_to(n: usize) -> Vec<Lattice> {
    let all = posets_up_to(n)
        .iter()
        .map(|p| dm_completion(p).expect("small poset").lattice().clone())
        .collect();
    dedup_by_iso(all, |l: &Lattice| l.poset())
}

/// `L` with a new top element above everything.
pub fn adjoin_top(l: &Lattice) -> Lattice {
    let n = l.len();
    let mut labels = l.labels().to_vec();
    labels.push("T'".into());
    let p =
        Poset::from_le_fn(labels, |i, j| j == n || (i < n && j < n && l.le(i, j))).expect("valid");
    Lattice::from_poset(p).expect("adding a top keeps a lattice")
}

/// Random poset on `n` elements: each pair `i < j` related with
/// probability `density`, then closed transitively.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        for cell in row.iter_mut().skip(i + 1) {
            *cell = rng.random_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    Poset::from_le_fn(names(n), |i, j| i == j || rel[i][j]).expect("valid poset")
}

/// Completion of a random poset, retried until it has between 2 and
/// `max_size` elements.
pub fn random_lattice<R: Rng>(rng: &mut R, max_size: usize) -> Lattice {
    loop {
        let n = rng.random_range(1..=max_size.min(9));
        let density = rng.random_range(0.1..0.7);
        let p = random_poset(rng, n, density);
        let dm = dm_completion(&p).expect("small poset");
        if (2..=max_size).contains(&dm.len()) {
            return dm.lattice().clone();
        }
    }
}

/// A random surjective sup-map out of `l`: pick a random subset, close it
/// under meets and add the top; this is the image of a closure operator
/// and `x -> least image element above x` preserves joins.
pub fn random_sup_map<R: Rng>(rng: &mut R, l: &Lattice) -> (Lattice, Vec<usize>) {
    let n = l.len();
    let mut keep: Vec<bool> = (0..n).map(|_| rng.random_bool(0.4)).collect();
    keep[l.top()] = true;
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                if keep[a] && keep[b] && !keep[l.meet(a, b)] {
                    keep[l.meet(a, b)] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let members: Vec<usize> = (0..n).filter(|&x| keep[x]).collect();
    let target = Lattice::from_poset(l.poset().restrict(&members)).expect("meet-closed with top");
    let map = (0..n)
        .map(|x| {
            let up = l.meet_all(members.iter().copied().filter(|&s| l.le(x, s)));
            members
                .iter()
                .position(|&s| s == up)
                .expect("closure lands in the image")
        })
        .collect();
    (target, map)
}

/// Random matrix with the given shape; ghost entries only if `ghosts`.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, ghosts: bool) -> SbMatrix {
    let symbols: &[SbScalar] = if ghosts {
        &SbScalar::ALL
    } else {
        &[SbScalar::Zero, SbScalar::One]
    };
    let entries = (0..rows * cols)
        .map(|_| symbols[rng.random_range(0..symbols.len())])
        .collect();
    SbMatrix::new(rows, cols, entries).expect("shape")
}

/// Every boolean `rows x cols` matrix.
pub fn boolean_matrices(rows: usize, cols: usize) -> impl Iterator<Item = SbMatrix> {
    let cells = rows * cols;
    (0u64..1 << cells).map(move |s| {
        SbMatrix::from_fn(rows, cols, |i, j| {
            SbScalar::from_bool(s >> (i * cols + j) & 1 == 1)
        })
    })
}
