use std::sync::Arc;

use arq_core::arq::{adapted_class, ArQuiver, DynkinQuiver};
use arq_core::seqorder::{prec_b, Oracle, RootSequence};
use arq_core::twisted::{class_from_twisted_coxeter, enumerate_twisted_coxeter, twisted_cluster};
use arq_core::weyl::is_longest_word;
use arq_core::{Automorphism, CartanType, Class, FoldKind, RootSystem};
use proptest::prelude::*;

fn types() -> Vec<CartanType> {
    vec![CartanType::a(3), CartanType::a(4), CartanType::a(5), CartanType::d(4), CartanType::d(5), CartanType::e6()]
}

fn adapted(t: usize, q: usize) -> Class {
    let ty = types()[t % types().len()];
    let qs = DynkinQuiver::all(ty);
    adapted_class(Arc::new(RootSystem::new(ty)), &qs[q % qs.len()])
}

fn reading(c: &Class, picks: &[usize]) -> Vec<usize> {
    let mut k = 0;
    c.reading_with(|n| {
        k += 1;
        picks[k % picks.len()] % n
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn readings_stay_in_the_class(t in 0usize..6, q in 0usize..64, picks in prop::collection::vec(0usize..8, 1..40)) {
        let c = adapted(t, q);
        let w = reading(&c, &picks);
        prop_assert!(is_longest_word(c.cartan_type(), &w));
        let again = Class::new(c.root_system().clone(), &w).unwrap();
        prop_assert_eq!(again.key(), c.key());
        prop_assert_eq!(again.arrows(), c.arrows());
    }

    #[test]
    fn arrows_point_to_larger_coordinates(t in 0usize..6, q in 0usize..64) {
        let c = adapted(t, q);
        let ty = c.cartan_type();
        let quiver = ArQuiver::from_class(&c, &Automorphism::identity(ty)).unwrap();
        for &(s, d) in &quiver.arrows {
            let (a, b) = (quiver.vertex(s), quiver.vertex(d));
            prop_assert!(a.coord < b.coord);
            prop_assert!(ty.adjacent(a.residue, b.residue));
        }
        let mut seen = std::collections::BTreeSet::new();
        for v in &quiver.vertices {
            prop_assert!(seen.insert((v.residue, v.coord)));
        }
    }

    #[test]
    fn sequence_order_is_a_partial_order(q in 0usize..8, xs in prop::collection::vec(prop::collection::vec(0usize..10, 1..5), 3)) {
        let c = adapted(1, q);
        let n = c.len();
        let rs = c.root_system();
        let seqs: Vec<RootSequence> = xs.iter().map(|v| RootSequence::from_roots(n, v)).collect();
        for x in &seqs {
            prop_assert!(!prec_b(&c, x, x));
            for y in &seqs {
                prop_assert!(!(prec_b(&c, x, y) && prec_b(&c, y, x)));
                if prec_b(&c, x, y) {
                    prop_assert_eq!(x.weight(rs), y.weight(rs));
                }
                for z in &seqs {
                    if prec_b(&c, x, y) && prec_b(&c, y, z) {
                        prop_assert!(prec_b(&c, x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn sequence_order_matches_brute_force(q in 0usize..8, x in prop::collection::vec(0usize..10, 1..5), y in prop::collection::vec(0usize..10, 1..5)) {
        let c = adapted(1, q);
        let o = Oracle::new(&c).unwrap();
        let (x, y) = (RootSequence::from_roots(c.len(), &x), RootSequence::from_roots(c.len(), &y));
        prop_assert_eq!(prec_b(&c, &x, &y), o.prec_b(&x, &y));
    }

    #[test]
    fn twisted_coxeter_classes_fold(t in 0usize..4, k in 0usize..64) {
        let (ty, kind) = [(CartanType::a(5), FoldKind::B), (CartanType::d(4), FoldKind::C), (CartanType::d(5), FoldKind::C), (CartanType::e6(), FoldKind::F)][t];
        let aut = Automorphism::new(ty, kind).unwrap();
        let tcs = enumerate_twisted_coxeter(&aut).unwrap();
        let rs = Arc::new(RootSystem::new(ty));
        let c = class_from_twisted_coxeter(rs.clone(), &tcs[k % tcs.len()]).unwrap();
        let quiver = ArQuiver::from_class(&c, &aut).unwrap();
        prop_assert_eq!(quiver.vertices.len(), ty.num_positive_roots());
        let cluster = twisted_cluster(rs, &aut, 1000).unwrap();
        prop_assert!(cluster.iter().any(|x| x.key() == c.key()));
    }
}
