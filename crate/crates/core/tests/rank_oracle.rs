use cranklab::rank::{self, columns_independent, is_nonsingular, permanent};
use cranklab::{Caps, SbMatrix, SbScalar};
use cranklab_testkit::oracle;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = SbScalar> {
    prop_oneof![
        Just(SbScalar::Zero),
        Just(SbScalar::One),
        Just(SbScalar::Ghost)
    ]
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = SbMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(scalar(), r * c)
            .prop_map(move |e| SbMatrix::new(r, c, e).unwrap())
    })
}

fn square(max: usize) -> impl Strategy<Value = SbMatrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(scalar(), n * n)
            .prop_map(move |e| SbMatrix::new(n, n, e).unwrap())
    })
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        perm.swap(i, (s >> 33) as usize % (i + 1));
    }
    perm
}

fn rank_of(m: &SbMatrix) -> usize {
    rank::rank(m).unwrap().0
}

fn permute_rows(m: &SbMatrix, perm: &[usize]) -> SbMatrix {
    SbMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(perm[i], j))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn rank_matches_brute_force(m in matrix(5, 5)) {
        let (k, w) = rank::rank(&m).unwrap();
        prop_assert_eq!(k, oracle::rank(&m));
        prop_assert_eq!(w.size(), k);
        prop_assert!(w.is_triangular(&m));
        prop_assert!(k <= m.rows().min(m.cols()));
    }

    #[test]
    fn column_independence_matches_brute_force(m in matrix(5, 6), mask in 1u32..64) {
        let cols: Vec<usize> = (0..m.cols()).filter(|&j| mask >> j & 1 == 1).collect();
        prop_assume!(!cols.is_empty());
        let w = columns_independent(&m, &cols).unwrap();
        prop_assert_eq!(w.is_some(), oracle::independent(&m, &cols));
        if let Some(w) = w {
            prop_assert!(w.is_triangular(&m));
            prop_assert_eq!(w.cols, cols);
        }
    }

    #[test]
    fn nonsingular_iff_permanent_one(m in square(6)) {
        let w = is_nonsingular(&m).unwrap();
        prop_assert_eq!(w.is_some(), permanent(&m).unwrap() == SbScalar::One);
        if let Some(w) = w {
            prop_assert!(w.is_triangular(&m));
        }
    }

    #[test]
    fn rank_is_transpose_invariant(m in matrix(5, 5)) {
        prop_assert_eq!(rank_of(&m), rank_of(&m.transpose()));
    }

    #[test]
    fn rank_is_permutation_invariant(m in matrix(5, 5), seed in any::<u64>()) {
        let rows = permute_rows(&m, &shuffled(m.rows(), seed));
        prop_assert_eq!(rank_of(&m), rank_of(&rows));
        let t = m.transpose();
        let cols = permute_rows(&t, &shuffled(t.rows(), seed ^ 0x9e37)).transpose();
        prop_assert_eq!(rank_of(&m), rank_of(&cols));
    }

    #[test]
    fn ghost_rows_and_columns_can_be_dropped(m in matrix(5, 5)) {
        let k = rank_of(&m);
        for i in 0..m.rows() {
            if m.row(i).iter().all(|x| x.is_ghost()) && m.rows() > 1 {
                prop_assert_eq!(rank_of(&m.without_row(i)), k);
            }
        }
        for j in 0..m.cols() {
            if m.column(j).iter().all(|x| x.is_ghost()) && m.cols() > 1 {
                prop_assert_eq!(rank_of(&m.without_col(j)), k);
            }
        }
    }

    #[test]
    fn duplicate_rows_and_columns_can_be_dropped(m in matrix(4, 4), i in 0usize..4, j in 0usize..4) {
        let i = i % m.rows();
        let j = j % m.cols();
        let mut rows = m.to_rows();
        rows.push(rows[i].clone());
        let dup_row = SbMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(rank_of(&dup_row), rank_of(&m));
        let mut cols = m.transpose().to_rows();
        cols.push(cols[j].clone());
        let dup_col = SbMatrix::from_rows(cols).unwrap().transpose();
        prop_assert_eq!(rank_of(&dup_col), rank_of(&m));
    }

    #[test]
    fn submatrix_rank_is_bounded(m in matrix(5, 5), rmask in 1u32..32, cmask in 1u32..32) {
        let rows: Vec<usize> = (0..m.rows()).filter(|&i| rmask >> i & 1 == 1).collect();
        let cols: Vec<usize> = (0..m.cols()).filter(|&j| cmask >> j & 1 == 1).collect();
        prop_assume!(!rows.is_empty() && !cols.is_empty());
        let sub = m.submatrix(&rows, &cols).unwrap();
        prop_assert!(rank_of(&sub) <= rank_of(&m));
    }

    #[test]
    fn complement_and_transpose(m in matrix(5, 5)) {
        prop_assert_eq!(m.complement().complement(), m.clone());
        prop_assert_eq!(m.complement().transpose(), m.transpose().complement());
    }

    #[test]
    fn independent_sets_are_hereditary(m in matrix(4, 5)) {
        let sets = rank::independent_column_sets(&m, &Caps::default()).unwrap();
        for s in &sets {
            prop_assert!(s.is_empty() || oracle::independent(&m, s));
            for x in s {
                let smaller: Vec<usize> = s.iter().copied().filter(|y| y != x).collect();
                prop_assert!(sets.contains(&smaller));
            }
        }
        let count = (1u32..1 << m.cols())
            .filter(|&s| {
                let cols: Vec<usize> = (0..m.cols()).filter(|&j| s >> j & 1 == 1).collect();
                oracle::independent(&m, &cols)
            })
            .count();
        prop_assert_eq!(sets.len(), count + 1);
    }
}

#[test]
fn every_square_matrix_of_order_two_and_three() {
    for n in 1..=3usize {
        let cells = n * n;
        for code in 0..3usize.pow(cells as u32) {
            let mut c = code;
            let entries = (0..cells)
                .map(|_| {
                    let x = SbScalar::ALL[c % 3];
                    c /= 3;
                    x
                })
                .collect();
            let m = SbMatrix::new(n, n, entries).unwrap();
            let nonsingular = is_nonsingular(&m).unwrap().is_some();
            assert_eq!(nonsingular, permanent(&m).unwrap() == SbScalar::One, "{m}");
            assert_eq!(rank_of(&m), oracle::rank(&m), "{m}");
        }
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let mut ms = Vec::new();
    for seed in 0..20u64 {
        let mut s = seed;
        let entries = (0..36)
            .map(|_| {
                s = s
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                SbScalar::ALL[(s >> 33) as usize % 3]
            })
            .collect();
        ms.push(SbMatrix::new(6, 6, entries).unwrap());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    for m in &ms {
        let single = pool.install(|| rank::rank(m).unwrap());
        assert_eq!(single, rank::rank(m).unwrap());
        let caps = Caps::default();
        let single = pool.install(|| rank::independent_column_sets(m, &caps).unwrap());
        assert_eq!(single, rank::independent_column_sets(m, &caps).unwrap());
    }
}
