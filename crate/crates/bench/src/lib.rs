//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use ordrep_core::group::named;
use ordrep_core::structure::order_dual;
use ordrep_core::verify::conjugate_rep;
use ordrep_core::{ExactPositive, Multiplier, PermGroup, PosRep, Subgroup};

pub fn group(gens: named::Generators) -> Arc<PermGroup> {
    Arc::new(gens.group().expect("named group"))
}

pub fn s4() -> Arc<PermGroup> {
    group(named::symmetric(4))
}

/// Regular representation of `g` conjugated by the multiplier `(1, 2, ..., n)`.
pub fn twisted_regular(g: &Arc<PermGroup>) -> PosRep {
    let pi = PosRep::regular(Arc::clone(g));
    let m = Multiplier::new(
        (1..=pi.degree() as u64)
            .map(|k| ExactPositive::from_integer(k).unwrap())
            .collect(),
    );
    conjugate_rep(&pi, &m).expect("conjugation")
}

/// A subgroup of order `order` together with its order-dual entries.
pub fn subgroup_with_thetas(g: &Arc<PermGroup>, order: usize) -> (Subgroup, Vec<PosRep>) {
    let h = g
        .all_subgroups()
        .iter()
        .find(|h| h.order() == order)
        .expect("subgroup of that order")
        .clone();
    let hg = Arc::new(h.to_group(g));
    let thetas = order_dual(&hg).into_iter().map(|d| d.rep).collect();
    (h, thetas)
}
