//! The binary quasiorder: x ≲ y when every homomorphism into the two-element
//! multiplicative semilattice maps x below y, equivalently when every prime
//! coideal containing x contains y. Its symmetrization is the smallest
//! semilattice congruence, and the quotient by it is the semilattice
//! reflection.
//!
//! Two roads run in parallel through this module, on purpose. The subset scan
//! over prime coideals is the ground-truth oracle; the fixpoint iteration of
//! y ↦ "X^1 y X^1 meets (...)²" is the scalable route. The reflection is
//! built from the fixpoint route so the two stay independent and can be
//! checked against each other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit::monogenic_orbit;
use crate::predicates;
use crate::sets::ElementSet;
use crate::table::CayleyTable;

/// Subset scans walk all 2^n subsets; keep that a desk-scale affair.
pub const MAX_SCAN_ORDER: usize = 20;

const MAX_PARTITION_ORDER: usize = 6;

fn check_scan_order(s: &CayleyTable, op: &'static str) -> Result<()> {
    if s.order() > MAX_SCAN_ORDER {
        return Err(Error::OrderTooLarge {
            op,
            order: s.order(),
            max: MAX_SCAN_ORDER,
        });
    }
    Ok(())
}

/// All prime coideals, in increasing bitmask order. A subset qualifies iff
/// its characteristic map is a homomorphism to the two-element multiplicative
/// semilattice: xy lands inside exactly when both factors do. The empty set
/// and the full carrier always qualify (the constant maps).
pub fn prime_coideals(s: &CayleyTable) -> Result<Vec<ElementSet>> {
    check_scan_order(s, "prime_coideals")?;
    let n = s.order();
    let mut out = Vec::new();
    'mask: for mask in 0..(1u64 << n) {
        let a = ElementSet::from_bits(n, mask as u32);
        for x in 0..n {
            for y in 0..n {
                if a.contains(s.product(x, y)) != (a.contains(x) && a.contains(y)) {
                    continue 'mask;
                }
            }
        }
        out.push(a);
    }
    Ok(out)
}

/// All coideals (complements of ideals), in increasing bitmask order.
pub fn all_coideals(s: &CayleyTable) -> Result<Vec<ElementSet>> {
    check_scan_order(s, "all_coideals")?;
    let n = s.order();
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let a = ElementSet::from_bits(n, mask as u32);
        if s.is_ideal_subset(a.complement()) {
            out.push(a);
        }
    }
    Ok(out)
}

/// The quasiorder ≲ with its symmetrization classes, computed from the prime
/// coideal scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoOrder {
    order: usize,
    leq: Vec<bool>,
    classes: Vec<ElementSet>,
    class_of: Vec<usize>,
}

impl TwoOrder {
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.order + y]
    }

    /// ⇑x = {y : x ≲ y}.
    pub fn up(&self, x: usize) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for y in 0..self.order {
            if self.leq(x, y) {
                out.insert(y);
            }
        }
        out
    }

    /// ⇓x = {y : y ≲ x}.
    pub fn down(&self, x: usize) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for y in 0..self.order {
            if self.leq(y, x) {
                out.insert(y);
            }
        }
        out
    }

    /// ⇕x = ⇑x ∩ ⇓x.
    pub fn bi(&self, x: usize) -> ElementSet {
        self.up(x).intersection(self.down(x))
    }

    /// Classes of the symmetrization, ordered by least member.
    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }
}

/// Ground-truth route to ≲: x ≲ y iff every prime coideal containing x
/// contains y.
pub fn two_order_oracle(s: &CayleyTable) -> Result<TwoOrder> {
    let n = s.order();
    let coideals = prime_coideals(s)?;
    let mut leq = vec![true; n * n];
    for c in &coideals {
        for x in c.iter() {
            for y in 0..n {
                if !c.contains(y) {
                    leq[x * n + y] = false;
                }
            }
        }
    }
    let (classes, class_of) = classes_from_leq(n, &leq);
    Ok(TwoOrder {
        order: n,
        leq,
        classes,
        class_of,
    })
}

fn classes_from_leq(n: usize, leq: &[bool]) -> (Vec<ElementSet>, Vec<usize>) {
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<ElementSet> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = ElementSet::empty(n);
        for y in x..n {
            if leq[x * n + y] && leq[y * n + x] {
                class.insert(y);
                class_of[y] = id;
            }
        }
        classes.push(class);
    }
    (classes, class_of)
}

/// The fixpoint trace of ⇑x: stage 0 is {x}, and each next stage collects the
/// y whose sandwich X^1 y X^1 meets the square of the current stage. Stages
/// grow strictly until they stabilize; the last entry is the fixpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpClassTrace {
    pub base: usize,
    pub stages: Vec<ElementSet>,
    pub fixpoint: ElementSet,
}

/// X^1 x X^1 for every x, viewed inside X.
fn sandwich_sets(s: &CayleyTable) -> Vec<ElementSet> {
    let n = s.order();
    let s1 = s.adjoin_identity();
    let full1 = s1.carrier();
    (0..n)
        .map(|x| {
            let sx = ElementSet::singleton(n + 1, x);
            let prod = s1.set_product(s1.set_product(full1, sx), full1);
            ElementSet::from_bits(n, prod.bits())
        })
        .collect()
}

pub fn up_class_fixpoint(s: &CayleyTable, x: usize) -> UpClassTrace {
    assert!(x < s.order());
    let n = s.order();
    let sandwich = sandwich_sets(s);
    let mut stages = vec![ElementSet::singleton(n, x)];
    loop {
        let current = *stages.last().unwrap();
        let square = s.set_product(current, current);
        let mut next = ElementSet::empty(n);
        for y in 0..n {
            if sandwich[y].intersects(&square) {
                next.insert(y);
            }
        }
        if next == current {
            break;
        }
        // each stage contains its predecessor: y² sits in both the square and
        // the sandwich of y
        assert!(current.is_subset_of(&next), "fixpoint stage shrank");
        assert!(stages.len() <= n, "fixpoint failed to stabilize in n steps");
        stages.push(next);
    }
    UpClassTrace {
        base: x,
        fixpoint: *stages.last().unwrap(),
        stages,
    }
}

/// (⇑x, ⇓x, ⇕x) read off the oracle. All three are subsemigroups, which we
/// assert.
pub fn up_down_biclass(s: &CayleyTable, x: usize) -> Result<(ElementSet, ElementSet, ElementSet)> {
    assert!(x < s.order());
    let two = two_order_oracle(s)?;
    let (up, down, bi) = (two.up(x), two.down(x), two.bi(x));
    for (name, set) in [("upper", up), ("lower", down), ("bi", bi)] {
        assert!(
            s.is_closed_subset(set),
            "{name} class of {x} is not a subsemigroup"
        );
    }
    Ok((up, down, bi))
}

/// A congruence presented as a partition; classes ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Congruence {
    pub partition: Vec<ElementSet>,
    pub class_of: Vec<usize>,
}

/// Quotient by the smallest semilattice congruence, together with the
/// projection. Class ids follow the least members of the classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSemigroup {
    pub quotient: CayleyTable,
    pub projection: Vec<usize>,
}

/// The semilattice reflection, built from the fixpoint route: x and y are
/// identified when each lies in the other's ⇑-fixpoint. The partition is
/// verified to be a congruence and the quotient to be a semilattice; both
/// hold unconditionally, so a failure here is a bug.
pub fn semilattice_reflection(s: &CayleyTable) -> QuotientSemigroup {
    let n = s.order();
    let ups: Vec<ElementSet> = (0..n).map(|x| up_class_fixpoint(s, x).fixpoint).collect();
    let mut leq = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            leq[x * n + y] = ups[x].contains(y);
        }
    }
    let (classes, class_of) = classes_from_leq(n, &leq);

    for (x, y) in pairs(n) {
        if class_of[x] == class_of[y] {
            for a in 0..n {
                assert!(
                    class_of[s.product(a, x)] == class_of[s.product(a, y)]
                        && class_of[s.product(x, a)] == class_of[s.product(y, a)],
                    "smallest semilattice partition is not a congruence at ({x}, {y}, {a})"
                );
            }
        }
    }

    let k = classes.len();
    let reps: Vec<usize> = classes.iter().map(|c| c.least().unwrap()).collect();
    let mut cells = vec![0usize; k * k];
    for i in 0..k {
        for j in 0..k {
            cells[i * k + j] = class_of[s.product(reps[i], reps[j])];
        }
    }
    // well-definedness across all pairs, not just representatives
    for x in 0..n {
        for y in 0..n {
            assert_eq!(
                class_of[s.product(x, y)],
                cells[class_of[x] * k + class_of[y]],
                "quotient multiplication is not well defined at ({x}, {y})"
            );
        }
    }
    let quotient = CayleyTable::new(k, cells).expect("quotient of a congruence is associative");
    for c in 0..k {
        assert!(quotient.is_idempotent(c), "reflection is not a band at {c}");
        for d in 0..k {
            assert_eq!(
                quotient.product(c, d),
                quotient.product(d, c),
                "reflection is not commutative at ({c}, {d})"
            );
        }
    }
    QuotientSemigroup {
        quotient,
        projection: class_of,
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

/// 2-trivial: every homomorphism to the two-element semilattice is constant.
/// Decided by the reflection collapsing to a point; at scan scale the prime
/// coideal count (exactly the two constants) is recomputed and must agree.
pub fn is_two_trivial(s: &CayleyTable) -> bool {
    let via_reflection = semilattice_reflection(s).quotient.order() == 1;
    if s.order() <= MAX_SCAN_ORDER {
        let via_coideals = prime_coideals(s)
            .expect("order already checked")
            .len()
            == 2;
        assert_eq!(
            via_reflection, via_coideals,
            "reflection and coideal routes disagree on 2-triviality"
        );
    }
    via_reflection
}

/// Every congruence whose quotient is a semilattice, by brute force over all
/// partitions of the carrier. Exponential (Bell numbers), so capped at
/// order 6.
pub fn semilattice_congruences(s: &CayleyTable) -> Result<Vec<Congruence>> {
    let n = s.order();
    if n > MAX_PARTITION_ORDER {
        return Err(Error::OrderTooLarge {
            op: "semilattice_congruences",
            order: n,
            max: MAX_PARTITION_ORDER,
        });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        if let Some(c) = congruence_if_semilattice(s, &rgs) {
            out.push(c);
        }
        // next restricted growth string
        let mut i = n;
        loop {
            if i == 1 {
                return Ok(out);
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

fn congruence_if_semilattice(s: &CayleyTable, class_of: &[usize]) -> Option<Congruence> {
    let n = s.order();
    let k = class_of.iter().copied().max().unwrap() + 1;
    for (x, y) in pairs(n) {
        if class_of[x] == class_of[y] {
            for a in 0..n {
                if class_of[s.product(a, x)] != class_of[s.product(a, y)]
                    || class_of[s.product(x, a)] != class_of[s.product(y, a)]
                {
                    return None;
                }
            }
        }
    }
    // quotient operation via any representatives (well defined by the above)
    let mut reps = vec![usize::MAX; k];
    for x in 0..n {
        if reps[class_of[x]] == usize::MAX {
            reps[class_of[x]] = x;
        }
    }
    for c in 0..k {
        if class_of[s.product(reps[c], reps[c])] != c {
            return None;
        }
        for d in 0..k {
            if class_of[s.product(reps[c], reps[d])] != class_of[s.product(reps[d], reps[c])] {
                return None;
            }
        }
    }
    let mut partition = vec![ElementSet::empty(n); k];
    for x in 0..n {
        partition[class_of[x]].insert(x);
    }
    Some(Congruence {
        partition,
        class_of: class_of.to_vec(),
    })
}

/// ⇑a for duo semigroups: the x whose two-sided principal ideal XxX catches a
/// power of a. Rejects non-duo input.
pub fn up_class_duo(s: &CayleyTable, a: usize) -> Result<ElementSet> {
    assert!(a < s.order());
    if let Some(w) = predicates::duo_witness(s) {
        return Err(Error::Hypothesis {
            name: "duo",
            witness: vec![w],
        });
    }
    let n = s.order();
    let full = s.carrier();
    let powers = monogenic_orbit(s, a).power_set(n);
    let mut out = ElementSet::empty(n);
    for x in 0..n {
        let xxx = s.set_product(s.set_product(full, ElementSet::singleton(n, x)), full);
        if powers.intersects(&xxx) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// ⇑e for viable semigroups and idempotent e: the x with e in the sandwich
/// X^1 x X^1. Rejects non-viable input and non-idempotent e.
pub fn up_class_viable(s: &CayleyTable, e: usize) -> Result<ElementSet> {
    assert!(e < s.order());
    if let Some((x, y)) = predicates::viable_witness(s) {
        return Err(Error::Hypothesis {
            name: "viable",
            witness: vec![x, y],
        });
    }
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent { element: e });
    }
    let sandwich = sandwich_sets(s);
    let mut out = ElementSet::empty(s.order());
    for x in s.elements() {
        if sandwich[x].contains(e) {
            out.insert(x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn prime_coideals_of_fixtures() {
        // semilattice: the constants plus {1}
        let pc = prime_coideals(&sl2()).unwrap();
        assert_eq!(
            pc,
            vec![
                ElementSet::empty(2),
                ElementSet::singleton(2, 1),
                ElementSet::full(2)
            ]
        );
        // left zero and the group: constants only
        assert_eq!(prime_coideals(&lz2()).unwrap().len(), 2);
        assert_eq!(prime_coideals(&z2()).unwrap().len(), 2);
        assert_eq!(prime_coideals(&n2()).unwrap().len(), 2);
    }

    #[test]
    fn coideals_include_non_prime_ones() {
        // {1} in the null semigroup is a coideal but not prime
        let cs = all_coideals(&n2()).unwrap();
        assert!(cs.contains(&ElementSet::singleton(2, 1)));
        assert_eq!(cs.len(), 3); // {}, {1}, X
    }

    #[test]
    fn two_order_on_semilattice() {
        let two = two_order_oracle(&sl2()).unwrap();
        assert!(two.leq(0, 1));
        assert!(!two.leq(1, 0));
        assert!(two.leq(0, 0) && two.leq(1, 1));
        assert_eq!(two.up(0), ElementSet::full(2));
        assert_eq!(two.up(1).to_vec(), vec![1]);
        assert_eq!(two.down(1), ElementSet::full(2));
        assert_eq!(two.classes().len(), 2);
        assert_eq!(two.class_of(0), 0);
        assert_eq!(two.class_of(1), 1);
    }

    #[test]
    fn two_order_collapses_left_zero() {
        let two = two_order_oracle(&lz2()).unwrap();
        assert!(two.leq(0, 1) && two.leq(1, 0));
        assert_eq!(two.classes().len(), 1);
        assert_eq!(two.bi(0), ElementSet::full(2));
    }

    #[test]
    fn fixpoint_traces() {
        // left zero, base 0: {0} then everything
        let tr = up_class_fixpoint(&lz2(), 0);
        assert_eq!(
            tr.stages,
            vec![ElementSet::singleton(2, 0), ElementSet::full(2)]
        );
        assert_eq!(tr.fixpoint, ElementSet::full(2));
        // semilattice, base 1: already stable
        let tr = up_class_fixpoint(&sl2(), 1);
        assert_eq!(tr.stages, vec![ElementSet::singleton(2, 1)]);
        assert_eq!(tr.fixpoint.to_vec(), vec![1]);
        // semilattice, base 0: grows to everything
        let tr = up_class_fixpoint(&sl2(), 0);
        assert_eq!(tr.fixpoint, ElementSet::full(2));
    }

    #[test]
    fn fixpoint_equals_oracle_on_fixtures() {
        for s in [lz2(), rz2(), sl2(), z2(), z3(), n2()] {
            let two = two_order_oracle(&s).unwrap();
            for x in s.elements() {
                assert_eq!(up_class_fixpoint(&s, x).fixpoint, two.up(x), "{s:?} at {x}");
            }
        }
    }

    #[test]
    fn biclass_examples() {
        let (up, down, bi) = up_down_biclass(&sl2(), 0).unwrap();
        assert_eq!(up, ElementSet::full(2));
        assert_eq!(down.to_vec(), vec![0]);
        assert_eq!(bi.to_vec(), vec![0]);
        let (up, _, bi) = up_down_biclass(&z2(), 1).unwrap();
        assert_eq!(up, ElementSet::full(2));
        assert_eq!(bi, ElementSet::full(2));
    }

    #[test]
    fn reflection_examples() {
        // a semilattice reflects onto itself
        let r = semilattice_reflection(&sl2());
        assert_eq!(r.quotient, sl2());
        assert_eq!(r.projection, vec![0, 1]);
        // 2-trivial semigroups reflect to a point
        for s in [lz2(), rz2(), z2(), n2()] {
            let r = semilattice_reflection(&s);
            assert_eq!(r.quotient.order(), 1);
            assert_eq!(r.projection, vec![0, 0]);
        }
    }

    #[test]
    fn two_trivial_examples() {
        assert!(is_two_trivial(&lz2()));
        assert!(is_two_trivial(&z2()));
        assert!(is_two_trivial(&n2()));
        assert!(!is_two_trivial(&sl2()));
    }

    #[test]
    fn semilattice_congruence_counts() {
        // semilattice: identity partition and the collapse
        assert_eq!(semilattice_congruences(&sl2()).unwrap().len(), 2);
        // left zero and the group admit only the collapse
        assert_eq!(semilattice_congruences(&lz2()).unwrap().len(), 1);
        assert_eq!(semilattice_congruences(&z2()).unwrap().len(), 1);
        let only = &semilattice_congruences(&z2()).unwrap()[0];
        assert_eq!(only.partition, vec![ElementSet::full(2)]);
        assert_eq!(only.class_of, vec![0, 0]);
    }

    #[test]
    fn congruence_scan_order_cap() {
        let t = crate::table::left_zero(7);
        assert!(matches!(
            semilattice_congruences(&t),
            Err(Error::OrderTooLarge { order: 7, max: 6, .. })
        ));
    }

    #[test]
    fn duo_shortcut_matches_oracle() {
        for s in [sl2(), z2(), z3(), n2()] {
            let two = two_order_oracle(&s).unwrap();
            for a in s.elements() {
                assert_eq!(up_class_duo(&s, a).unwrap(), two.up(a), "{s:?} at {a}");
            }
        }
        // left zero is not duo
        assert_eq!(
            up_class_duo(&lz2(), 0),
            Err(Error::Hypothesis {
                name: "duo",
                witness: vec![0]
            })
        );
    }

    #[test]
    fn viable_shortcut_matches_oracle() {
        for s in [sl2(), z2(), z3(), n2()] {
            let two = two_order_oracle(&s).unwrap();
            for e in s.idempotents().iter() {
                assert_eq!(up_class_viable(&s, e).unwrap(), two.up(e), "{s:?} at {e}");
            }
        }
        assert_eq!(
            up_class_viable(&lz2(), 0),
            Err(Error::Hypothesis {
                name: "viable",
                witness: vec![0, 1]
            })
        );
        assert_eq!(
            up_class_viable(&n2(), 1),
            Err(Error::NotIdempotent { element: 1 })
        );
    }
}
