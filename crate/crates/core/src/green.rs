//! Green's H-relation and what hangs off it: maximal subgroups at
//! idempotents, the union of all group H-classes, root sets of subsets under
//! powers, and the map sending each element to the idempotent its powers
//! eventually orbit around.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit::monogenic_orbit;
use crate::sets::ElementSet;
use crate::table::CayleyTable;

/// H-class data for one element: the principal sets are taken in X^1 (fresh
/// identity adjoined), then viewed inside X, so right_principal = {a} ∪ aX
/// and left_principal = {a} ∪ Xa. Two elements are H-related when both
/// principal sets coincide.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HClassInfo {
    pub element: usize,
    pub h_class: ElementSet,
    pub right_principal: ElementSet,
    pub left_principal: ElementSet,
}

/// A maximal subgroup sitting on an idempotent: the H-class of `identity`
/// with its inversion map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupView {
    pub identity: usize,
    pub carrier: ElementSet,
    pub inverse: BTreeMap<usize, usize>,
}

fn principal_sets(s: &CayleyTable) -> (Vec<ElementSet>, Vec<ElementSet>) {
    let n = s.order();
    let s1 = s.adjoin_identity();
    let full1 = s1.carrier();
    let mut right = Vec::with_capacity(n);
    let mut left = Vec::with_capacity(n);
    for x in 0..n {
        let sx = ElementSet::singleton(n + 1, x);
        // products of x against X^1 stay inside X, so truncating the mask to
        // n bits loses nothing
        let r = s1.set_product(sx, full1);
        let l = s1.set_product(full1, sx);
        right.push(ElementSet::from_bits(n, r.bits()));
        left.push(ElementSet::from_bits(n, l.bits()));
    }
    (right, left)
}

pub fn all_h_classes(s: &CayleyTable) -> Vec<HClassInfo> {
    let n = s.order();
    let (right, left) = principal_sets(s);
    (0..n)
        .map(|a| {
            let mut h = ElementSet::empty(n);
            for x in 0..n {
                if right[x] == right[a] && left[x] == left[a] {
                    h.insert(x);
                }
            }
            HClassInfo {
                element: a,
                h_class: h,
                right_principal: right[a],
                left_principal: left[a],
            }
        })
        .collect()
}

pub fn h_class(s: &CayleyTable, a: usize) -> HClassInfo {
    assert!(a < s.order());
    all_h_classes(s).swap_remove(a)
}

/// The maximal subgroup with identity `e`. The H-class of an idempotent is
/// always a group; closure, the identity law, and unique two-sided inverses
/// are re-verified here because downstream structure theory leans on them.
pub fn maximal_subgroup(s: &CayleyTable, e: usize) -> Result<GroupView> {
    if e >= s.order() {
        return Err(Error::ElementOutOfRange {
            element: e,
            order: s.order(),
        });
    }
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent { element: e });
    }
    let carrier = h_class(s, e).h_class;
    for x in carrier.iter() {
        for y in carrier.iter() {
            assert!(
                carrier.contains(s.product(x, y)),
                "H-class of idempotent {e} is not closed"
            );
        }
        assert!(
            s.product(e, x) == x && s.product(x, e) == x,
            "{e} does not act as identity on its H-class"
        );
    }
    let mut inverse = BTreeMap::new();
    for x in carrier.iter() {
        let mut found = None;
        for y in carrier.iter() {
            if s.product(x, y) == e && s.product(y, x) == e {
                assert!(found.is_none(), "two inverses for {x} in the group at {e}");
                found = Some(y);
            }
        }
        inverse.insert(x, found.expect("group element without inverse"));
    }
    Ok(GroupView {
        identity: e,
        carrier,
        inverse,
    })
}

/// Union of the group H-classes: H(X) = ∪ H_e over idempotents e. The whole
/// semigroup is Clifford exactly when this is everything.
pub fn clifford_part(s: &CayleyTable) -> ElementSet {
    let classes = all_h_classes(s);
    let mut out = ElementSet::empty(s.order());
    for e in s.idempotents().iter() {
        out = out.union(classes[e].h_class);
    }
    out
}

/// Elements with some positive power landing in `a`.
pub fn root_set(s: &CayleyTable, a: ElementSet) -> ElementSet {
    debug_assert_eq!(a.order(), s.order());
    let mut out = ElementSet::empty(s.order());
    for x in s.elements() {
        if monogenic_orbit(s, x).power_set(s.order()).intersects(&a) {
            out.insert(x);
        }
    }
    out
}

/// The idempotent whose maximal subgroup absorbs the powers of `x`. On a
/// finite semigroup exactly one idempotent qualifies for each element; both
/// failure directions are asserted because either would mean the H-class
/// machinery is wrong, not the input.
pub fn pi_map(s: &CayleyTable, x: usize) -> usize {
    assert!(x < s.order());
    let classes = all_h_classes(s);
    let powers = monogenic_orbit(s, x).power_set(s.order());
    let mut hit = None;
    for e in s.idempotents().iter() {
        if classes[e].h_class.intersects(&powers) {
            assert!(
                hit.is_none(),
                "powers of {x} meet two group H-classes, at {} and {e}",
                hit.unwrap()
            );
            hit = Some(e);
        }
    }
    hit.expect("no power of the element reaches a group H-class")
}

/// H_e/e: elements commuting with `e` whose product with it lands in H_e.
/// Always a subsemigroup, which we assert.
pub fn he_over_e(s: &CayleyTable, e: usize) -> Result<ElementSet> {
    if e >= s.order() {
        return Err(Error::ElementOutOfRange {
            element: e,
            order: s.order(),
        });
    }
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent { element: e });
    }
    let he = h_class(s, e).h_class;
    let mut out = ElementSet::empty(s.order());
    for x in s.elements() {
        let xe = s.product(x, e);
        if xe == s.product(e, x) && he.contains(xe) {
            out.insert(x);
        }
    }
    assert!(
        s.is_closed_subset(out),
        "H_{e}/{e} failed to be a subsemigroup"
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn left_zero_h_classes_are_singletons() {
        let info = h_class(&lz2(), 0);
        assert_eq!(info.h_class.to_vec(), vec![0]);
        assert_eq!(info.right_principal.to_vec(), vec![0]);
        assert_eq!(info.left_principal.to_vec(), vec![0, 1]);
        assert_eq!(h_class(&lz2(), 1).h_class.to_vec(), vec![1]);
    }

    #[test]
    fn group_is_one_h_class() {
        for x in 0..2 {
            assert_eq!(h_class(&z2(), x).h_class, ElementSet::full(2));
        }
        for x in 0..3 {
            assert_eq!(h_class(&z3(), x).h_class, ElementSet::full(3));
        }
    }

    #[test]
    fn semilattice_h_classes() {
        assert_eq!(h_class(&sl2(), 0).h_class.to_vec(), vec![0]);
        assert_eq!(h_class(&sl2(), 1).h_class.to_vec(), vec![1]);
    }

    #[test]
    fn maximal_subgroup_of_group() {
        let g = maximal_subgroup(&z2(), 0).unwrap();
        assert_eq!(g.identity, 0);
        assert_eq!(g.carrier, ElementSet::full(2));
        assert_eq!(g.inverse[&0], 0);
        assert_eq!(g.inverse[&1], 1);
        let g3 = maximal_subgroup(&z3(), 0).unwrap();
        assert_eq!(g3.inverse[&1], 2);
        assert_eq!(g3.inverse[&2], 1);
    }

    #[test]
    fn maximal_subgroup_trivial_cases() {
        let g = maximal_subgroup(&lz2(), 1).unwrap();
        assert_eq!(g.carrier.to_vec(), vec![1]);
        assert_eq!(maximal_subgroup(&n2(), 1), Err(Error::NotIdempotent { element: 1 }));
        assert!(matches!(
            maximal_subgroup(&n2(), 5),
            Err(Error::ElementOutOfRange { element: 5, .. })
        ));
    }

    #[test]
    fn clifford_part_examples() {
        assert_eq!(clifford_part(&z2()), ElementSet::full(2));
        assert_eq!(clifford_part(&lz2()), ElementSet::full(2));
        assert_eq!(clifford_part(&sl2()), ElementSet::full(2));
        // the null semigroup has a non-group element
        assert_eq!(clifford_part(&n2()).to_vec(), vec![0]);
    }

    #[test]
    fn root_set_examples() {
        // 1^2 = 0 in the null semigroup, so everything roots into {0}
        assert_eq!(
            root_set(&n2(), ElementSet::singleton(2, 0)),
            ElementSet::full(2)
        );
        assert_eq!(
            root_set(&n2(), ElementSet::singleton(2, 1)).to_vec(),
            vec![1]
        );
        // left zero: powers stay put
        assert_eq!(
            root_set(&lz2(), ElementSet::singleton(2, 0)).to_vec(),
            vec![0]
        );
        assert_eq!(root_set(&z2(), ElementSet::singleton(2, 0)), ElementSet::full(2));
    }

    #[test]
    fn pi_map_examples() {
        assert_eq!(pi_map(&z2(), 1), 0);
        assert_eq!(pi_map(&n2(), 1), 0);
        assert_eq!(pi_map(&lz2(), 0), 0);
        assert_eq!(pi_map(&lz2(), 1), 1);
        assert_eq!(pi_map(&sl2(), 1), 1);
    }

    #[test]
    fn he_over_e_examples() {
        // everything commutes with both idempotents of the semilattice
        assert_eq!(he_over_e(&sl2(), 0).unwrap(), ElementSet::full(2));
        assert_eq!(he_over_e(&sl2(), 1).unwrap().to_vec(), vec![1]);
        // left zero: 1*0 = 1 but 0*1 = 0, so 1 does not commute with 0
        assert_eq!(he_over_e(&lz2(), 0).unwrap().to_vec(), vec![0]);
        // group: everything
        assert_eq!(he_over_e(&z2(), 0).unwrap(), ElementSet::full(2));
        assert_eq!(he_over_e(&n2(), 1), Err(Error::NotIdempotent { element: 1 }));
    }
}
