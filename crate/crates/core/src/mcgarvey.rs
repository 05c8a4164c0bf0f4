//! Profiles realizing a given majority relation.

use alloc::vec::Vec;

use crate::altset::AltSet;
use crate::profile::{LinearOrder, Profile};
use crate::relation::MajorityRelation;

/// A profile whose majority relation is exactly `rel`.
///
/// Each edge `x μ y` contributes the pair of orders `x y r₁…r_k` and
/// `r_k…r₁ x y`, which agree only on `x` over `y`; every other pair cancels.
/// The result has an even number of criteria (two per edge, or one order and
/// its reverse for the empty relation), so unrelated pairs tie.
pub fn realize(rel: &MajorityRelation) -> Profile {
    let m = rel.m();
    let mut orders = Vec::new();
    for (x, y) in rel.edges() {
        let rest: Vec<usize> = AltSet::full(m).without(x).without(y).iter().collect();
        let mut fwd = alloc::vec![x, y];
        fwd.extend(&rest);
        let mut back: Vec<usize> = rest.iter().rev().copied().collect();
        back.extend([x, y]);
        orders.push(LinearOrder::new(&fwd).expect("permutation"));
        orders.push(LinearOrder::new(&back).expect("permutation"));
    }
    if orders.is_empty() {
        let id = LinearOrder::identity(m);
        orders.push(id);
        orders.push(id.reversed());
    }
    Profile::from_orders(m, orders).expect("valid profile")
}
