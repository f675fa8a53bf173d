//! Structural maps of separated semigroups: the union of idempotent
//! 2-classes, the retraction onto the idempotents, the retraction onto the
//! union of group H-classes, the natural order on idempotents, and the
//! total versions of both retractions. Preconditions come back as
//! hypothesis errors carrying the first counterexample, so sweeps can sort
//! inputs by which hypothesis failed; conclusion failures come back as
//! conclusion errors and signal a refuted claim, not bad input.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::green::{all_h_classes, clifford_part, pi_map, root_set};
use crate::order2::{semilattice_reflection, two_order_oracle};
use crate::predicates::{self, Flag};
use crate::sets::ElementSet;
use crate::table::CayleyTable;

/// A verified homomorphic retraction: defined on `domain`, landing in
/// `target`, fixing `target` pointwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RetractionMap {
    pub domain: ElementSet,
    pub pairs: BTreeMap<usize, usize>,
    pub target: ElementSet,
}

impl RetractionMap {
    pub fn value(&self, x: usize) -> Option<usize> {
        self.pairs.get(&x).copied()
    }
}

fn conclusion(name: &'static str, witness: Vec<usize>) -> Error {
    Error::Conclusion { name, witness }
}

/// Retraction laws, quantified over the whole domain: domain closed, values
/// in target, target fixed pointwise, map multiplicative.
fn verify_retraction(s: &CayleyTable, m: &RetractionMap) -> Result<()> {
    for x in m.domain.iter() {
        let v = m.pairs[&x];
        if !m.target.contains(v) {
            return Err(conclusion("retraction_into_target", vec![x, v]));
        }
    }
    if let Some(t) = m.target.iter().find(|&t| !m.domain.contains(t)) {
        return Err(conclusion("target_inside_domain", vec![t]));
    }
    for t in m.target.iter() {
        if m.pairs[&t] != t {
            return Err(conclusion("fixes_target", vec![t, m.pairs[&t]]));
        }
    }
    for x in m.domain.iter() {
        for y in m.domain.iter() {
            let xy = s.product(x, y);
            if !m.domain.contains(xy) {
                return Err(conclusion("domain_closed", vec![x, y]));
            }
            if m.pairs[&xy] != s.product(m.pairs[&x], m.pairs[&y]) {
                return Err(conclusion("homomorphism", vec![x, y]));
            }
        }
    }
    Ok(())
}

fn require(s: &CayleyTable, f: Flag, name: &'static str) -> Result<()> {
    match predicates::check(s, f) {
        None => Ok(()),
        Some(w) => Err(Error::Hypothesis {
            name,
            witness: w.elements,
        }),
    }
}

/// Union of the 2-classes of all idempotents. Closure is asserted in the
/// separated E-semigroup case, where it is a theorem.
pub fn updown_e(s: &CayleyTable) -> ElementSet {
    let two = two_order_oracle(s).expect("scan-sized input");
    let mut out = ElementSet::empty(s.order());
    for e in s.idempotents().iter() {
        out = out.union(two.bi(e));
    }
    if predicates::holds(s, Flag::ESeparated) && predicates::holds(s, Flag::ESemigroup) {
        assert!(
            s.is_closed_subset(out),
            "idempotent 2-class union must be closed under these hypotheses"
        );
    }
    out
}

/// The partial retraction x ↦ the unique idempotent 2-equivalent to x,
/// defined on the union of idempotent 2-classes. Needs the idempotents
/// separated (one per class) and closed under products.
pub fn pi_updown(s: &CayleyTable) -> Result<RetractionMap> {
    require(s, Flag::ESeparated, "E_separated")?;
    require(s, Flag::ESemigroup, "E_semigroup")?;
    let proj = semilattice_reflection(s).projection;
    let idempotents = s.idempotents();
    let domain = updown_e(s);
    let mut pairs = BTreeMap::new();
    for x in domain.iter() {
        let e = idempotents
            .iter()
            .find(|&e| proj[e] == proj[x])
            .expect("every domain element shares its class with an idempotent");
        pairs.insert(x, e);
    }
    let map = RetractionMap {
        domain,
        pairs,
        target: idempotents,
    };
    verify_retraction(s, &map)?;
    Ok(map)
}

/// The partial retraction x ↦ x·π(x) onto the union of group H-classes,
/// same domain and preconditions as `pi_updown`.
pub fn hbar_updown(s: &CayleyTable) -> Result<RetractionMap> {
    let pi = pi_updown(s)?;
    let h = clifford_part(s);
    let mut pairs = BTreeMap::new();
    for x in pi.domain.iter() {
        pairs.insert(x, s.product(x, pi.pairs[&x]));
    }
    let map = RetractionMap {
        domain: pi.domain,
        pairs,
        target: h,
    };
    verify_retraction(s, &map)?;
    if let Some((x, y)) = h
        .iter()
        .flat_map(|x| h.iter().map(move |y| (x, y)))
        .find(|&(x, y)| !h.contains(s.product(x, y)))
    {
        return Err(conclusion("clifford_part_closed", vec![x, y]));
    }
    Ok(map)
}

/// Order on the idempotent list, closed under the natural comparison
/// x ≤ y ⇔ xy = x = yx.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalOrder {
    pub elements: Vec<usize>,
    pub leq: Vec<Vec<bool>>,
}

impl NaturalOrder {
    pub fn le(&self, e: usize, f: usize) -> bool {
        let i = self.elements.iter().position(|&x| x == e);
        let j = self.elements.iter().position(|&x| x == f);
        match (i, j) {
            (Some(i), Some(j)) => self.leq[i][j],
            _ => false,
        }
    }
}

/// The natural order on the idempotents, requiring them to form a
/// semilattice. In the separated E-semigroup case the order is asserted to
/// coincide with the restriction of the binary quasiorder.
pub fn natural_order_e(s: &CayleyTable) -> Result<NaturalOrder> {
    let ids = s.idempotents().to_vec();
    for &e in &ids {
        for &f in &ids {
            let p = s.product(e, f);
            if !s.is_idempotent(p) || p != s.product(f, e) {
                return Err(Error::Hypothesis {
                    name: "E_semilattice",
                    witness: vec![e, f],
                });
            }
        }
    }
    let k = ids.len();
    let mut leq = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            let (e, f) = (ids[i], ids[j]);
            leq[i][j] = s.product(e, f) == e && s.product(f, e) == e;
        }
    }
    // reflexivity, antisymmetry, transitivity all follow from the
    // semilattice laws; a failure here is a bug, not bad input
    for i in 0..k {
        assert!(leq[i][i]);
        for j in 0..k {
            assert!(i == j || !(leq[i][j] && leq[j][i]), "antisymmetry");
            for l in 0..k {
                assert!(!(leq[i][j] && leq[j][l]) || leq[i][l], "transitivity");
            }
        }
    }
    let order = NaturalOrder { elements: ids, leq };
    if predicates::holds(s, Flag::ESeparated) && predicates::holds(s, Flag::ESemigroup) {
        let two = two_order_oracle(s).expect("scan-sized input");
        for (i, &e) in order.elements.iter().enumerate() {
            for (j, &f) in order.elements.iter().enumerate() {
                assert_eq!(
                    order.leq[i][j],
                    two.leq(e, f),
                    "natural order must match the quasiorder on idempotents at ({e}, {f})"
                );
            }
        }
    }
    Ok(order)
}

/// Total retractions π: X→E(X) and ℏ: x↦x·π(x) for separated π-regular
/// E-semigroups, verified against the 2-class characterizations: the
/// 2-class of e is the root set of H_e, and the upper class of e is
/// {x : e ≤ π(x)}.
pub fn full_retractions(s: &CayleyTable) -> Result<(RetractionMap, RetractionMap)> {
    require(s, Flag::ESeparated, "E_separated")?;
    require(s, Flag::PiRegular, "pi_regular")?;
    require(s, Flag::ESemigroup, "E_semigroup")?;
    let n = s.order();
    let full = s.carrier();
    let idempotents = s.idempotents();

    let mut pi_pairs = BTreeMap::new();
    for x in 0..n {
        pi_pairs.insert(x, pi_map(s, x));
    }
    let pi = RetractionMap {
        domain: full,
        pairs: pi_pairs,
        target: idempotents,
    };
    verify_retraction(s, &pi)?;

    let mut h_pairs = BTreeMap::new();
    for x in 0..n {
        h_pairs.insert(x, s.product(x, pi.pairs[&x]));
    }
    let hbar = RetractionMap {
        domain: full,
        pairs: h_pairs,
        target: clifford_part(s),
    };
    verify_retraction(s, &hbar)?;

    let classes = all_h_classes(s);
    let two = two_order_oracle(s).expect("scan-sized input");
    let order = natural_order_e(s)?;
    for e in idempotents.iter() {
        if two.bi(e) != root_set(s, classes[e].h_class) {
            return Err(conclusion("biclass_equals_root_set", vec![e]));
        }
        let mut by_projection = ElementSet::empty(n);
        for x in 0..n {
            if order.le(e, pi.pairs[&x]) {
                by_projection.insert(x);
            }
        }
        if two.up(e) != by_projection {
            return Err(conclusion("up_class_by_projection", vec![e]));
        }
    }
    Ok((pi, hbar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn updown_e_examples() {
        assert_eq!(updown_e(&sl2()), ElementSet::full(2));
        assert_eq!(updown_e(&z2()), ElementSet::full(2));
        assert_eq!(updown_e(&lz2()), ElementSet::full(2));
        assert_eq!(updown_e(&n2()), ElementSet::full(2));
    }

    #[test]
    fn pi_updown_identity_on_semilattice() {
        let m = pi_updown(&sl2()).unwrap();
        assert_eq!(m.domain, ElementSet::full(2));
        assert_eq!(m.value(0), Some(0));
        assert_eq!(m.value(1), Some(1));
        assert_eq!(m.target, ElementSet::full(2));
    }

    #[test]
    fn pi_updown_constant_on_group() {
        let m = pi_updown(&z2()).unwrap();
        assert_eq!(m.value(0), Some(0));
        assert_eq!(m.value(1), Some(0));
        assert_eq!(m.target, ElementSet::singleton(2, 0));
    }

    #[test]
    fn pi_updown_rejects_unseparated_idempotents() {
        assert_eq!(
            pi_updown(&lz2()),
            Err(Error::Hypothesis {
                name: "E_separated",
                witness: vec![0, 1],
            })
        );
    }

    #[test]
    fn pi_updown_on_null_semigroup() {
        let m = pi_updown(&n2()).unwrap();
        assert_eq!(m.value(1), Some(0));
        assert_eq!(m.target, ElementSet::singleton(2, 0));
    }

    #[test]
    fn hbar_fixes_group_part() {
        let m = hbar_updown(&z2()).unwrap();
        assert_eq!(m.value(0), Some(0));
        assert_eq!(m.value(1), Some(1));
        let m = hbar_updown(&sl2()).unwrap();
        assert_eq!(m.value(0), Some(0));
        assert_eq!(m.value(1), Some(1));
        let m = hbar_updown(&n2()).unwrap();
        assert_eq!(m.value(1), Some(0));
        assert_eq!(m.target, ElementSet::singleton(2, 0));
    }

    #[test]
    fn natural_order_examples() {
        let o = natural_order_e(&sl2()).unwrap();
        assert_eq!(o.elements, vec![0, 1]);
        assert!(o.le(0, 1) && o.le(0, 0) && o.le(1, 1));
        assert!(!o.le(1, 0));

        let o = natural_order_e(&z2()).unwrap();
        assert_eq!(o.elements, vec![0]);
        assert!(o.le(0, 0));

        assert_eq!(
            natural_order_e(&lz2()),
            Err(Error::Hypothesis {
                name: "E_semilattice",
                witness: vec![0, 1],
            })
        );
    }

    #[test]
    fn full_retractions_on_group_and_semilattice() {
        let (pi, hbar) = full_retractions(&z2()).unwrap();
        assert_eq!(pi.value(1), Some(0));
        assert_eq!(hbar.value(1), Some(1));

        let (pi, hbar) = full_retractions(&sl2()).unwrap();
        assert_eq!(pi.value(1), Some(1));
        assert_eq!(hbar.value(1), Some(1));

        let (pi, hbar) = full_retractions(&n2()).unwrap();
        assert_eq!(pi.value(1), Some(0));
        assert_eq!(hbar.value(1), Some(0));

        assert_eq!(
            full_retractions(&lz2()),
            Err(Error::Hypothesis {
                name: "E_separated",
                witness: vec![0, 1],
            })
        );
    }

    #[test]
    fn retraction_serialization_shape() {
        let m = pi_updown(&sl2()).unwrap();
        let json = serde_json::to_value(&m).unwrap();
        assert_eq!(json["domain"], serde_json::json!([0, 1]));
        assert_eq!(json["pairs"]["1"], 1);
        assert_eq!(json["target"], serde_json::json!([0, 1]));
    }
}
