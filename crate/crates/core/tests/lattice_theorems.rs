use cranklab::lattice::{
    certify_rank, chain_witness, enumerate_pushes, families, join_split, refine_to_sji,
    verify_push, witness_chain, SupMap,
};
use cranklab::{Caps, Lattice};
use cranklab_testkit::{corpus, oracle};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus_lattices() -> Vec<Lattice> {
    let mut out = corpus::lattices_up_to(7);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    out.extend((0..40).map(|_| corpus::random_lattice(&mut rng, 12)));
    out
}

#[test]
fn lattice_laws() {
    for l in corpus_lattices() {
        let n = l.len();
        for a in 0..n {
            assert_eq!(l.join(a, a), a);
            assert_eq!(l.join(a, l.bottom()), a);
            assert_eq!(l.meet(a, l.top()), a);
            for b in 0..n {
                assert_eq!(l.join(a, b), l.join(b, a));
                assert_eq!(l.join(a, l.meet(a, b)), a);
                assert_eq!(l.meet(a, l.join(a, b)), a);
                assert_eq!(l.le(a, b), l.join(a, b) == b);
            }
        }
    }
}

#[test]
fn irreducibles_match_definitions() {
    for l in corpus::lattices_up_to(7) {
        let expected = oracle::irreducibles(&l);
        let report = l.classify_irreducibles();
        for (x, &(sji, ji, smi, mi)) in expected.iter().enumerate() {
            let c = report.classes[x];
            assert_eq!(
                (c.sji, c.ji, c.smi, c.mi),
                (sji, ji, smi, mi),
                "element {x} of {:?}",
                l.labels()
            );
            assert!(!ji || sji);
            assert!(!mi || smi);
        }
        let ji_no_b = report.ji().iter().filter(|&&x| x != l.bottom()).count();
        let mi_no_t = report.mi().iter().filter(|&&x| x != l.top()).count();
        assert_eq!(ji_no_b, mi_no_t);
        assert_eq!(report.ji_no_b, ji_no_b);
        assert_eq!(report.mi_no_t, mi_no_t);
    }
}

#[test]
fn c_rank_equals_height() {
    let caps = Caps::default();
    for l in corpus_lattices() {
        let (k, w) = l.c_rank(&caps).unwrap();
        assert_eq!(k, l.height().0);
        assert_eq!(k, oracle::c_rank(l.poset()));
        assert!(k <= l.classify_irreducibles().sji_no);
        assert!(w.cols.iter().all(|&x| x != l.bottom()));
        let dual = l.dual();
        assert_eq!(dual.c_rank(&caps).unwrap().0, k);
    }
}

#[test]
fn rank_certificates() {
    let caps = Caps::default();
    for l in corpus_lattices() {
        let cert = certify_rank(&l, &caps).unwrap();
        assert!(cert.equal());
        let c_matrix = l.poset().c_matrix();
        assert!(cert.witness.is_triangular(&c_matrix));
        assert!(cert.witness_from_chain.is_triangular(&c_matrix));
        assert_eq!(cert.independent_from_chain.len(), cert.height);
        let chain = &cert.chain_from_witness.chain;
        assert_eq!(chain.len(), cert.c_rank + 1);
        assert_eq!(*chain.last().unwrap(), l.top());
        assert!(chain.windows(2).all(|p| l.lt(p[0], p[1])));
        for s in &cert.chain_from_witness.steps {
            assert!(l.le(s.element, s.below) && !l.le(s.element, s.not_below));
        }
    }
}

#[test]
fn refinement_keeps_independence() {
    let caps = Caps::default();
    for l in corpus::lattices_up_to(7) {
        for w in l.c_independent_sets(&caps).unwrap() {
            let (refined, witness) = refine_to_sji(&l, &w, &caps).unwrap();
            assert_eq!(refined.len(), w.len());
            assert!(refined.iter().all(|&x| l.is_sji(x)));
            assert!(witness.is_triangular(&l.poset().c_matrix()));
            let mut sorted = refined.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), w.len());
            for (j, &x) in w.iter().enumerate() {
                for a in 0..l.len() {
                    for b in a..l.len() {
                        if l.join(a, b) == x && a != x && b != x {
                            let (split, sw) = join_split(&l, &w, j, (a, b), &caps).unwrap();
                            assert!(split[j] == a || split[j] == b);
                            assert!(sw.is_triangular(&l.poset().c_matrix()));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn independent_sets_are_pushes_of_chains() {
    let caps = Caps::default();
    for l in corpus::lattices_up_to(6) {
        let independent = l.c_independent_sets(&caps).unwrap();
        for w in &independent {
            if w.is_empty() {
                continue;
            }
            let witness = l.c_independent(w, &caps).unwrap().unwrap();
            let cert = witness_chain(&l, &witness).unwrap();
            let mut chain = cert.chain.clone();
            chain[0] = l.bottom();
            let pushes = enumerate_pushes(&l, &chain, &caps).unwrap();
            assert!(pushes.contains(w), "{w:?} from {chain:?}");
            let (base, base_witness) = chain_witness(&l, &chain).unwrap();
            for p in &pushes {
                assert!(independent.contains(p));
                // pushes come back in sorted order; line them up with the chain
                let mut ordered = Vec::new();
                for &x in &base {
                    let m = *chain.iter().rev().find(|&&c| l.lt(c, x)).unwrap();
                    let y = *p.iter().find(|&&y| l.le(y, x) && !l.le(y, m)).unwrap();
                    ordered.push(y);
                }
                let pushed = verify_push(&l, &base, &base_witness, &ordered).unwrap();
                assert!(pushed.is_triangular(&l.poset().c_matrix()));
            }
        }
    }
}

#[test]
fn distributivity_criteria_agree() {
    for l in corpus_lattices() {
        let checks = l.distributivity_checks().unwrap();
        assert!(checks.agree(), "{:?} {checks:?}", l.labels());
        assert_eq!(
            checks.distributive,
            l.distributivity_counterexample().is_none()
        );
        let spec = l.spec_morphism().unwrap();
        assert_eq!(spec.is_injective(), checks.distributive);
        assert_eq!(spec.fibers.iter().map(Vec::len).sum::<usize>(), l.len());
        let v = &spec.image_vectors;
        assert!(v.iter().all(|&a| v.iter().all(|&b| v.contains(&(a & b)))));
        if checks.distributive {
            assert!(spec.image_is_set_lattice());
        }
        let map: Vec<usize> = (0..l.len()).map(|x| spec.class_of(x)).collect();
        let phi = SupMap::new(&l, &spec.image, map, &Caps::default()).unwrap();
        assert!(phi.is_onto());
    }
    for n in 1..=4 {
        assert!(families::boolean_lattice(n).is_distributive());
    }
    assert!(!families::diamond().is_distributive());
    assert!(!families::pentagon().is_distributive());
}

fn all_maps(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..m.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let v = code % m;
                code /= m;
                v
            })
            .collect()
    })
}

#[test]
fn sup_maps_and_adjoints_exhaustive() {
    let caps = Caps::default();
    let small = corpus::lattices_up_to(5);
    for source in &small {
        for target in &small {
            for f in all_maps(source.len(), target.len()) {
                let accepted = SupMap::new(source, target, f.clone(), &caps);
                assert_eq!(
                    accepted.is_ok(),
                    oracle::is_sup_map(source, target, &f),
                    "{f:?}"
                );
                if let Ok(phi) = accepted {
                    let psi = phi.adjoint();
                    assert!(phi.check_adjoint(&psi).all(), "{f:?}");
                    if phi.is_onto() {
                        let k = source.c_rank(&caps).unwrap().0;
                        assert!(k >= target.c_rank(&caps).unwrap().0);
                    }
                }
            }
        }
    }
}

#[test]
fn random_sup_maps() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..80 {
        let l = corpus::random_lattice(&mut rng, 12);
        let (target, f) = corpus::random_sup_map(&mut rng, &l);
        assert!(oracle::is_sup_map(&l, &target, &f));
        let phi = SupMap::new(&l, &target, f, &caps).unwrap();
        assert!(phi.is_onto());
        let psi = phi.adjoint();
        assert!(phi.check_adjoint(&psi).all());
        assert!(l.c_rank(&caps).unwrap().0 >= target.c_rank(&caps).unwrap().0);
        // pulling an independent set of the target back along ψ keeps it independent
        let (_, w) = target.c_rank(&caps).unwrap();
        let pulled: Vec<usize> = w.cols.iter().map(|&y| psi[y]).collect();
        assert!(l.c_independent(&pulled, &caps).unwrap().is_some());
    }
}
