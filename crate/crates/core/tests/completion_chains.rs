use cranklab::chains::{
    chain_partitions, enumerate_independent_via_partitions, independence_via_partitions,
    lattice_bases, maximal_chains, partition_of_chain, poset_independent_via_partitions,
};
use cranklab::completion::{dm_completion, restrict_independence, union_closure};
use cranklab::lattice::families;
use cranklab::{Caps, Error};
use cranklab_testkit::{corpus, fixtures, oracle};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn canonical(mut family: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for s in &mut family {
        s.sort_unstable();
    }
    family.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    family
}

#[test]
fn six_element_completion() {
    let p = fixtures::six_element_poset_swapped();
    let dm = dm_completion(&p).unwrap();
    let family: Vec<String> = (0..dm.len())
        .map(|i| dm.member_labels(i).concat())
        .collect();
    assert_eq!(family, fixtures::SIX_DM_SWAPPED);
    let report = restrict_independence(&p, &Caps::default()).unwrap();
    assert_eq!(
        (
            report.c_rank_poset,
            report.c_rank_completion,
            report.height_completion
        ),
        (4, 4, 4)
    );
    assert!(report.families_agree());
    // the table as printed differs only by renaming a and c
    let printed = dm_completion(&fixtures::six_element_poset()).unwrap();
    let sizes = |f: &cranklab::completion::SetFamilyLattice| {
        let mut s: Vec<u32> = f.members.iter().map(|m| m.count_ones()).collect();
        s.sort_unstable();
        s
    };
    assert_eq!(sizes(&printed), sizes(&dm));
}

#[test]
fn completions_of_small_posets() {
    let caps = Caps::default();
    for p in corpus::posets_up_to(5) {
        let dm = dm_completion(&p).unwrap();
        let members = canonical((0..dm.len()).map(|i| dm.member_elements(i)).collect());
        assert_eq!(members, canonical(oracle::dm_cuts(&p)));
        assert!(dm.is_closed());
        assert!(dm.is_order_embedding(&p));
        let uc = union_closure(&p).unwrap();
        assert!(uc.is_closed());
        assert!(uc.is_order_embedding(&p));
        assert!(dm.len() <= uc.len());
        for &m in &uc.members {
            assert!(p.is_order_ideal(&cranklab::bits::to_indices(m)).unwrap());
        }
        let report = restrict_independence(&p, &caps).unwrap();
        assert!(report.ranks_agree(), "{:?}", p.covering_relation());
        assert!(report.families_agree(), "{:?}", p.covering_relation());
        assert_eq!(
            canonical(poset_independent_via_partitions(&p, &caps).unwrap()),
            canonical(p.c_independent_sets(&caps).unwrap())
        );
    }
}

#[test]
fn random_completions() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let p = corpus::random_poset(&mut rng, 8, 0.35);
        let report = restrict_independence(&p, &caps).unwrap();
        assert!(report.ranks_agree());
        assert!(report.families_agree());
    }
}

#[test]
fn maximal_chains_match_search() {
    let caps = Caps::default();
    for l in corpus::lattices_up_to(7) {
        let chains = maximal_chains(&l, &caps).unwrap();
        let mut expected = oracle::maximal_chains(&l);
        let mut got = chains.clone();
        expected.sort();
        got.sort();
        assert_eq!(got, expected);
        for c in &chains {
            let q = partition_of_chain(&l, c).unwrap();
            assert_eq!(q.blocks.len(), c.len() - 1);
            let mut covered: Vec<usize> = q.blocks.concat();
            covered.sort_unstable();
            let expected: Vec<usize> = (0..l.len()).filter(|&x| x != l.bottom()).collect();
            assert_eq!(covered, expected);
        }
    }
    for n in 1..=4 {
        let b = families::boolean_lattice(n);
        assert_eq!(
            maximal_chains(&b, &caps).unwrap().len(),
            (1..=n).product::<usize>()
        );
    }
}

#[test]
fn independent_sets_are_partial_cross_sections() {
    let caps = Caps::default();
    let mut lattices = corpus::lattices_up_to(7);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    lattices.extend((0..30).map(|_| corpus::random_lattice(&mut rng, 12)));
    for l in lattices {
        let direct = canonical(l.c_independent_sets(&caps).unwrap());
        let via = enumerate_independent_via_partitions(&l, &caps).unwrap();
        assert_eq!(via, direct, "{:?}", l.labels());
        for w in &direct {
            assert!(independence_via_partitions(&l, w, &caps).unwrap().is_some());
        }
        let bases = lattice_bases(&l, &caps).unwrap();
        let height = l.height().0;
        assert!(bases.iter().all(|b| b.len() <= height));
        assert!(bases.iter().any(|b| b.len() == height));
        for w in &direct {
            assert!(bases.iter().any(|b| w.iter().all(|x| b.contains(x))));
        }
        let parts = chain_partitions(&l, &caps).unwrap();
        assert_eq!(parts.len(), maximal_chains(&l, &caps).unwrap().len());
    }
}

#[test]
fn chain_cap_is_enforced() {
    let caps = Caps {
        chains: 5,
        ..Caps::default()
    };
    let b = families::boolean_lattice(3);
    assert!(matches!(
        maximal_chains(&b, &caps),
        Err(Error::ChainLimitExceeded { .. })
    ));
    assert!(maximal_chains(&b, &Caps::default()).is_ok());
}
