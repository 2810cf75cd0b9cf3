use cranklab::error::PosetViolation;
use cranklab::{Caps, Error, Poset, SbMatrix, StructuredSet};
use cranklab_testkit::{corpus, fixtures, oracle};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

#[test]
fn six_element_example() {
    let p = fixtures::six_element_poset();
    assert_eq!(
        p.structure_matrix().entries(),
        SbMatrix::from_symbols(&fixtures::SIX_A).entries()
    );
    assert_eq!(
        p.structure_matrix().complement().entries(),
        SbMatrix::from_symbols(&fixtures::SIX_A_BAR).entries()
    );
    let caps = Caps::default();
    let (k, w) = p.c_rank(&caps).unwrap();
    assert_eq!(k, 4);
    assert!(w.is_triangular(&p.c_matrix()));
    assert_eq!(oracle::c_rank(&p), 4);
    let e = p.index_of("e").unwrap();
    let down: Vec<&str> = p.down_set(e).unwrap().iter().map(|&x| p.label(x)).collect();
    assert_eq!(down, ["a", "b", "c", "e"]);
    // the four minimal elements are independent, all six are not
    assert!(p.c_independent(&[0, 1, 2, 3], &caps).unwrap().is_some());
    assert!(p
        .c_independent(&[0, 1, 2, 3, 4, 5], &caps)
        .unwrap()
        .is_none());
}

#[test]
fn validation_reports_every_violation() {
    let m = SbMatrix::from_symbols(&["110", "110", "011"]);
    let s = StructuredSet::new(labels(3), m).unwrap();
    let Err(Error::InvalidPoset(v)) = Poset::validate(&s) else {
        panic!("expected violations");
    };
    assert!(v.contains(&PosetViolation::NotAntisymmetric { a: 0, b: 1 }));
    assert!(v.contains(&PosetViolation::NotTransitive { a: 2, via: 1, b: 0 }));
    let m = SbMatrix::from_symbols(&["01", "01"]);
    let s = StructuredSet::new(labels(2), m).unwrap();
    assert_eq!(
        Poset::validate(&s),
        Err(Error::InvalidPoset(vec![PosetViolation::NotReflexive {
            element: 0
        }]))
    );
    let antichain = StructuredSet::new(labels(4), SbMatrix::identity(4)).unwrap();
    assert!(Poset::validate(&antichain).is_ok());
}

#[test]
fn antichain_c_rank_matches_brute_force() {
    for n in 1..=6 {
        let p = Poset::from_covers(labels(n), &[]).unwrap();
        let expected = oracle::rank(&SbMatrix::identity(n).complement());
        assert_eq!(p.c_rank(&Caps::default()).unwrap().0, expected);
        assert_eq!(expected, n.min(2) - usize::from(n == 1));
        assert_eq!(p.height().0, 0);
    }
}

#[test]
fn small_heights_and_covers() {
    let chain = Poset::from_le_fn(labels(3), |i, j| i <= j).unwrap();
    assert_eq!(chain.covering_relation(), &[(0, 1), (1, 2)]);
    assert_eq!(chain.height(), (2, vec![0, 1, 2]));
    let r = chain.reverse();
    assert_eq!(r.height(), (2, vec![2, 1, 0]));
    assert_eq!(r.reverse(), chain);
}

#[test]
fn all_small_posets() {
    let caps = Caps::default();
    for p in corpus::posets_up_to(5) {
        let (k, w) = p.c_rank(&caps).unwrap();
        assert_eq!(k, oracle::c_rank(&p), "{:?}", p.covering_relation());
        assert!(w.is_triangular(&p.c_matrix()));
        assert!(k <= p.len());
        assert_eq!(p.reverse().c_rank(&caps).unwrap().0, k);
        assert_eq!(p.height().0, oracle::height(&p));
        assert_eq!(p.reverse().height().0, p.height().0);
        let rebuilt =
            Poset::from_structure_matrix(p.labels().to_vec(), p.structure_matrix()).unwrap();
        assert_eq!(rebuilt, p);
        assert_eq!(
            p.c_independent_sets(&caps).unwrap(),
            oracle::c_independent_sets(&p)
        );
        for x in 0..p.len() {
            assert!(p.is_order_ideal(&p.down_set(x).unwrap()).unwrap());
        }
    }
}

#[test]
fn random_posets() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let caps = Caps::default();
    for _ in 0..60 {
        let p = corpus::random_poset(&mut rng, 8, 0.3);
        let k = p.c_rank(&caps).unwrap().0;
        assert_eq!(k, oracle::c_rank(&p));
        assert_eq!(p.reverse().c_rank(&caps).unwrap().0, k);
        // restricting to an independent set keeps it independent
        let (_, w) = p.c_rank(&caps).unwrap();
        let sub = p.restrict(&w.cols);
        assert!(k == 0 || sub.c_rank(&caps).unwrap().0 <= k);
    }
}

#[test]
fn corpus_counts() {
    let counts: Vec<usize> = (1..=5).map(|n| corpus::posets(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 16, 63]);
    let counts: Vec<usize> = (1..=7).map(|n| corpus::lattices(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53]);
}
