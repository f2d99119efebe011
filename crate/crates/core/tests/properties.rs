use std::sync::Arc;

use ordrep_core::imprimitivity::{all_block_systems, covariance_check};
use ordrep_core::structure::{character, decompose, factor, is_intertwiner, order_dual, order_equivalent};
use ordrep_core::verify::{conjugate_rep, random_multiplier, random_permutation_rep, small_groups, CatalogGroup};
use ordrep_core::{direct_sum, induce, PermGroup, PosRep};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn catalog() -> &'static [CatalogGroup] {
    static CATALOG: std::sync::OnceLock<Vec<CatalogGroup>> = std::sync::OnceLock::new();
    CATALOG.get_or_init(|| small_groups(12))
}

fn arb_group() -> impl Strategy<Value = Arc<PermGroup>> {
    (0..catalog().len()).prop_map(|i| Arc::clone(&catalog()[i].group))
}

fn arb_rep(max_degree: usize) -> impl Strategy<Value = (PosRep, PosRep)> {
    (arb_group(), any::<u64>()).prop_map(move |(g, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pi = random_permutation_rep(&g, max_degree, &mut rng);
        let m = random_multiplier(pi.degree(), &mut rng);
        let rho = conjugate_rep(&pi, &m).unwrap();
        (pi, rho)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factor_recovers_permutation_part((pi, rho) in arb_rep(10)) {
        let f = factor(&rho).unwrap();
        prop_assert_eq!(&f.pi, &pi.permutation_part());
        prop_assert_eq!(f.rebuild(Arc::clone(rho.group())).unwrap(), rho);
    }

    #[test]
    fn conjugated_rep_is_order_equivalent((pi, rho) in arb_rep(10)) {
        let t = order_equivalent(&rho, &pi).unwrap().expect("equivalent");
        prop_assert!(is_intertwiner(&t, &rho, &pi));
        prop_assert_eq!(character(&rho), character(&pi));
    }

    #[test]
    fn decomposition_dimensions_sum_to_degree((_pi, rho) in arb_rep(12)) {
        let d = decompose(&rho);
        prop_assert_eq!(d.dimensions().iter().sum::<usize>(), rho.degree());
        for s in &d.summands {
            prop_assert_eq!(s.index * s.multiplicity, s.blocks.iter().map(Vec::len).sum::<usize>());
        }
    }

    #[test]
    fn direct_sum_adds_multiplicities((_p1, r1) in arb_rep(8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r2 = random_permutation_rep(r1.group(), 8, &mut rng);
        let sum = direct_sum(&[r1.clone(), r2.clone()]).unwrap();
        let (d, d1, d2) = (decompose(&sum), decompose(&r1), decompose(&r2));
        for class in 0..r1.group().conjugacy_classes_of_subgroups().len() {
            prop_assert_eq!(d.multiplicity_of(class), d1.multiplicity_of(class) + d2.multiplicity_of(class));
        }
    }

    #[test]
    fn induced_degree_is_index_times_degree(g in arb_group(), pick in any::<prop::sample::Index>()) {
        let subs = g.all_subgroups();
        let h = &subs[pick.index(subs.len())];
        let hg = Arc::new(h.to_group(&g));
        for t in order_dual(&hg) {
            let ind = induce(&t.rep, h, &g).unwrap();
            prop_assert_eq!(ind.rep.degree(), g.order() / h.order() * t.rep.degree());
        }
    }

    #[test]
    fn block_systems_are_covariant((_pi, rho) in arb_rep(8)) {
        for bs in all_block_systems(&rho).unwrap() {
            prop_assert!(covariance_check(&rho, &bs.blocks));
        }
    }
}
