//! Classification predicates over a finite semigroup, each decided by a
//! literal quantifier scan of the defining condition. Every false flag comes
//! with the lexicographically first counterexample, shaped so that plugging
//! it back into the definition falsifies it (`witness_refutes`).

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::green::{all_h_classes, clifford_part, he_over_e, root_set};
use crate::orbit::monogenic_orbit;
use crate::order2::{prime_coideals, semilattice_reflection, two_order_oracle, MAX_SCAN_ORDER};
use crate::sets::ElementSet;
use crate::table::CayleyTable;

/// The flags of a property report, in report order.
///
/// Two near-namesakes both live here and mean different things:
/// `EUpclassCentral` ("is_E_up_central") asks idempotents to commute with
/// their whole upper 2-class, while `EUpcentral` ("is_E_upcentral") asks
/// elements rooting into H_f to commute with the idempotents below f.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Flag {
    ESemigroup,
    Semilattice,
    Commutative,
    Duo,
    Viable,
    ESeparated,
    ECommutative,
    ECentral,
    EUpclassCentral,
    EHypercentral,
    EHypocentral,
    EUpcentral,
    Unipotent,
    TwoTrivial,
    Archimedean,
    Regular,
    CompletelyRegular,
    PiRegular,
    CompletelyPiRegular,
    Clifford,
    EventuallyClifford,
}

pub const ALL_FLAGS: [Flag; 21] = [
    Flag::ESemigroup,
    Flag::Semilattice,
    Flag::Commutative,
    Flag::Duo,
    Flag::Viable,
    Flag::ESeparated,
    Flag::ECommutative,
    Flag::ECentral,
    Flag::EUpclassCentral,
    Flag::EHypercentral,
    Flag::EHypocentral,
    Flag::EUpcentral,
    Flag::Unipotent,
    Flag::TwoTrivial,
    Flag::Archimedean,
    Flag::Regular,
    Flag::CompletelyRegular,
    Flag::PiRegular,
    Flag::CompletelyPiRegular,
    Flag::Clifford,
    Flag::EventuallyClifford,
];

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::ESemigroup => "is_E_semigroup",
            Flag::Semilattice => "is_semilattice",
            Flag::Commutative => "is_commutative",
            Flag::Duo => "is_duo",
            Flag::Viable => "is_viable",
            Flag::ESeparated => "is_E_separated",
            Flag::ECommutative => "is_E_commutative",
            Flag::ECentral => "is_E_central",
            Flag::EUpclassCentral => "is_E_up_central",
            Flag::EHypercentral => "is_E_hypercentral",
            Flag::EHypocentral => "is_E_hypocentral",
            Flag::EUpcentral => "is_E_upcentral",
            Flag::Unipotent => "is_unipotent",
            Flag::TwoTrivial => "is_two_trivial",
            Flag::Archimedean => "is_archimedean",
            Flag::Regular => "is_regular",
            Flag::CompletelyRegular => "is_completely_regular",
            Flag::PiRegular => "is_pi_regular",
            Flag::CompletelyPiRegular => "is_completely_pi_regular",
            Flag::Clifford => "is_clifford",
            Flag::EventuallyClifford => "is_eventually_clifford",
        }
    }
}

impl Serialize for Flag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Counterexample to a flag: the element ids involved, plus a role tag saying
/// how to read them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub role: &'static str,
    pub elements: Vec<usize>,
}

impl Witness {
    fn new(role: &'static str, elements: Vec<usize>) -> Option<Self> {
        Some(Witness { role, elements })
    }
}

/// All flags for one semigroup, with a witness for each false flag. Flags
/// serialize in declaration order under their published names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub flags: BTreeMap<Flag, bool>,
    pub witnesses: BTreeMap<Flag, Witness>,
}

impl PropertyReport {
    pub fn flag(&self, f: Flag) -> bool {
        self.flags[&f]
    }

    pub fn witness(&self, f: Flag) -> Option<&Witness> {
        self.witnesses.get(&f)
    }
}

pub fn evaluate_properties(s: &CayleyTable) -> PropertyReport {
    let mut flags = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for f in ALL_FLAGS {
        match check(s, f) {
            None => {
                flags.insert(f, true);
            }
            Some(w) => {
                flags.insert(f, false);
                witnesses.insert(f, w);
            }
        }
    }
    PropertyReport {
        order: s.order(),
        flags,
        witnesses,
    }
}

pub fn holds(s: &CayleyTable, f: Flag) -> bool {
    check(s, f).is_none()
}

/// Decides one flag; `None` means the property holds, otherwise the
/// lexicographically first counterexample is returned.
pub fn check(s: &CayleyTable, f: Flag) -> Option<Witness> {
    let n = s.order();
    let e = s.idempotents();
    match f {
        Flag::ESemigroup => {
            for a in e.iter() {
                for b in e.iter() {
                    if !s.is_idempotent(s.product(a, b)) {
                        return Witness::new("idempotents e,f with ef not idempotent", vec![a, b]);
                    }
                }
            }
            None
        }
        Flag::Semilattice => {
            for x in 0..n {
                if !s.is_idempotent(x) {
                    return Witness::new("element x with xx != x", vec![x]);
                }
            }
            commuting_failure(s, 0..n, 0..n, "elements x,y with xy != yx")
        }
        Flag::Commutative => commuting_failure(s, 0..n, 0..n, "elements x,y with xy != yx"),
        Flag::Duo => duo_witness(s).and_then(|x| Witness::new("element x with xX != Xx", vec![x])),
        Flag::Viable => viable_witness(s)
            .and_then(|(x, y)| Witness::new("x,y with xy,yx idempotent and xy != yx", vec![x, y])),
        Flag::ESeparated => e_separated_witness(s),
        Flag::ECommutative => commuting_failure(
            s,
            e.iter().collect::<Vec<_>>(),
            e.iter().collect::<Vec<_>>(),
            "idempotents e,f with ef != fe",
        ),
        Flag::ECentral => commuting_failure(
            s,
            e.iter().collect::<Vec<_>>(),
            0..n,
            "idempotent e and element x with ex != xe",
        ),
        Flag::EUpclassCentral => {
            let two = two_order_oracle(s).expect("scan-sized input");
            for a in e.iter() {
                for x in two.up(a).iter() {
                    if s.product(a, x) != s.product(x, a) {
                        return Witness::new(
                            "idempotent e and x in the upper 2-class of e with ex != xe",
                            vec![a, x],
                        );
                    }
                }
            }
            None
        }
        Flag::EHypercentral => {
            for a in e.iter() {
                for x in 0..n {
                    for y in 0..n {
                        if s.product(x, y) == a
                            && (s.product(x, a) != s.product(a, x)
                                || s.product(y, a) != s.product(a, y))
                        {
                            return Witness::new(
                                "e,x,y with xy = e and e not commuting with both factors",
                                vec![a, x, y],
                            );
                        }
                    }
                }
            }
            None
        }
        Flag::EHypocentral => {
            for a in e.iter() {
                for x in 0..n {
                    for y in 0..n {
                        if s.product(x, y) == a
                            && s.product(x, a) != s.product(a, x)
                            && s.product(y, a) != s.product(a, y)
                        {
                            return Witness::new(
                                "e,x,y with xy = e and e not commuting with either factor",
                                vec![a, x, y],
                            );
                        }
                    }
                }
            }
            None
        }
        Flag::EUpcentral => {
            let classes = all_h_classes(s);
            for a in e.iter() {
                for b in e.iter() {
                    if s.product(b, a) == a && s.product(a, b) == a {
                        for x in root_set(s, classes[b].h_class).iter() {
                            if s.product(x, a) != s.product(a, x) {
                                return Witness::new(
                                    "e,f idempotent with fe = e = ef and x rooting into H_f with xe != ex",
                                    vec![a, b, x],
                                );
                            }
                        }
                    }
                }
            }
            None
        }
        Flag::Unipotent => {
            let ids = e.to_vec();
            if ids.len() > 1 {
                Witness::new("distinct idempotents e,f", vec![ids[0], ids[1]])
            } else {
                None
            }
        }
        Flag::TwoTrivial => {
            if crate::order2::is_two_trivial(s) {
                None
            } else {
                let proper = prime_coideals(s)
                    .expect("scan-sized input")
                    .into_iter()
                    .find(|c| !c.is_empty() && *c != s.carrier())
                    .expect("non-2-trivial semigroup has a proper prime coideal");
                Witness::new("proper nonempty prime coideal", proper.to_vec())
            }
        }
        Flag::Archimedean => archimedean_witness(s, false)
            .and_then(|(x, y)| Witness::new("x,y with no power of x inside XyX", vec![x, y])),
        Flag::Regular => {
            for x in 0..n {
                if !(0..n).any(|y| s.product(s.product(x, y), x) == x) {
                    return Witness::new("x with no y satisfying x = xyx", vec![x]);
                }
            }
            None
        }
        Flag::CompletelyRegular => {
            for x in 0..n {
                let ok = (0..n).any(|y| {
                    s.product(s.product(x, y), x) == x && s.product(x, y) == s.product(y, x)
                });
                if !ok {
                    return Witness::new("x with no commuting y satisfying x = xyx", vec![x]);
                }
            }
            None
        }
        Flag::PiRegular => {
            for x in 0..n {
                if !pi_regular_at(s, x, false) {
                    return Witness::new("x with no n,y satisfying x^n = x^n y x^n", vec![x]);
                }
            }
            None
        }
        Flag::CompletelyPiRegular => {
            for x in 0..n {
                if !pi_regular_at(s, x, true) {
                    return Witness::new(
                        "x with no n and commuting y satisfying x^n = x^n y x^n",
                        vec![x],
                    );
                }
            }
            None
        }
        Flag::Clifford => {
            let h = clifford_part(s);
            (0..n)
                .find(|&x| !h.contains(x))
                .and_then(|x| Witness::new("x outside the union of group H-classes", vec![x]))
        }
        Flag::EventuallyClifford => {
            let roots = root_set(s, clifford_part(s));
            (0..n).find(|&x| !roots.contains(x)).and_then(|x| {
                Witness::new("x with no power inside the union of group H-classes", vec![x])
            })
        }
    }
}

fn commuting_failure(
    s: &CayleyTable,
    xs: impl IntoIterator<Item = usize>,
    ys: impl IntoIterator<Item = usize> + Clone,
    role: &'static str,
) -> Option<Witness> {
    for x in xs {
        for y in ys.clone() {
            if s.product(x, y) != s.product(y, x) {
                return Witness::new(role, vec![x, y]);
            }
        }
    }
    None
}

/// First element whose left and right principal one-sided ideals differ.
pub fn duo_witness(s: &CayleyTable) -> Option<usize> {
    let full = s.carrier();
    s.elements().find(|&x| {
        let sx = ElementSet::singleton(s.order(), x);
        s.set_product(sx, full) != s.set_product(full, sx)
    })
}

pub fn is_duo(s: &CayleyTable) -> bool {
    duo_witness(s).is_none()
}

/// First pair with both products idempotent but unequal.
pub fn viable_witness(s: &CayleyTable) -> Option<(usize, usize)> {
    let n = s.order();
    for x in 0..n {
        for y in 0..n {
            let xy = s.product(x, y);
            let yx = s.product(y, x);
            if s.is_idempotent(xy) && s.is_idempotent(yx) && xy != yx {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_viable(s: &CayleyTable) -> bool {
    viable_witness(s).is_none()
}

/// E-viable: every idempotent is viable, i.e. H_e/e is a coideal. Returns the
/// first failing idempotent.
pub fn e_viable_witness(s: &CayleyTable) -> Option<usize> {
    s.idempotents().iter().find(|&e| {
        let h = he_over_e(s, e).expect("idempotent by construction");
        !s.classify_subset(h).is_coideal
    })
}

pub fn is_e_viable(s: &CayleyTable) -> bool {
    e_viable_witness(s).is_none()
}

/// E-separatedness via the reflection: distinct idempotents must land in
/// distinct classes. At scan scale the result is cross-checked against the
/// independent prime-coideal route (a pair is separated iff some prime
/// coideal contains exactly one of them); the two must agree.
fn e_separated_witness(s: &CayleyTable) -> Option<Witness> {
    let proj = &semilattice_reflection(s).projection;
    let ids = s.idempotents().to_vec();
    let mut witness = None;
    'outer: for (k, &a) in ids.iter().enumerate() {
        for &b in &ids[k + 1..] {
            if proj[a] == proj[b] {
                witness = Witness::new("distinct idempotents in one reflection class", vec![a, b]);
                break 'outer;
            }
        }
    }
    if s.order() <= MAX_SCAN_ORDER {
        let coideals = prime_coideals(s).expect("order checked");
        let separated_by_scan = ids.iter().enumerate().all(|(k, &a)| {
            ids[k + 1..]
                .iter()
                .all(|&b| coideals.iter().any(|c| c.contains(a) != c.contains(b)))
        });
        assert_eq!(
            witness.is_none(),
            separated_by_scan,
            "reflection and coideal routes disagree on E-separatedness"
        );
    }
    witness
}

fn archimedean_witness(s: &CayleyTable, adjoin: bool) -> Option<(usize, usize)> {
    let n = s.order();
    let full = s.carrier();
    let sandwiches: Vec<ElementSet> = (0..n)
        .map(|y| {
            if adjoin {
                let s1 = s.adjoin_identity();
                let full1 = s1.carrier();
                let sy = ElementSet::singleton(n + 1, y);
                let prod = s1.set_product(s1.set_product(full1, sy), full1);
                ElementSet::from_bits(n, prod.bits())
            } else {
                let sy = ElementSet::singleton(n, y);
                s.set_product(s.set_product(full, sy), full)
            }
        })
        .collect();
    for x in 0..n {
        let powers = monogenic_orbit(s, x).power_set(n);
        for y in 0..n {
            if !powers.intersects(&sandwiches[y]) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Archimedean with the sandwich taken in X^1 instead of X. Kept separate so
/// sweeps can report whether the two readings ever part ways.
pub fn is_archimedean_adjoined(s: &CayleyTable) -> bool {
    archimedean_witness(s, true).is_none()
}

fn pi_regular_at(s: &CayleyTable, x: usize, complete: bool) -> bool {
    let orbit = monogenic_orbit(s, x);
    for m in 1..=orbit.exponent_bound() {
        let p = orbit.power(m);
        for y in s.elements() {
            if s.product(s.product(p, y), p) == p
                && (!complete || s.product(p, y) == s.product(y, p))
            {
                return true;
            }
        }
    }
    false
}

/// Elements commuting with everything.
pub fn center(s: &CayleyTable) -> ElementSet {
    let mut out = ElementSet::empty(s.order());
    for z in s.elements() {
        if s.elements().all(|x| s.product(z, x) == s.product(x, z)) {
            out.insert(z);
        }
    }
    out
}

/// Re-evaluates the defining condition of `f` on a recorded witness; true
/// means the witness still falsifies the property.
pub fn witness_refutes(s: &CayleyTable, f: Flag, w: &Witness) -> bool {
    let el = &w.elements;
    let idem = |x: usize| s.is_idempotent(x);
    match f {
        Flag::ESemigroup => {
            el.len() == 2 && idem(el[0]) && idem(el[1]) && !idem(s.product(el[0], el[1]))
        }
        Flag::Semilattice => match el.len() {
            1 => !idem(el[0]),
            2 => s.product(el[0], el[1]) != s.product(el[1], el[0]),
            _ => false,
        },
        Flag::Commutative => el.len() == 2 && s.product(el[0], el[1]) != s.product(el[1], el[0]),
        Flag::Duo => {
            el.len() == 1 && {
                let sx = ElementSet::singleton(s.order(), el[0]);
                s.set_product(sx, s.carrier()) != s.set_product(s.carrier(), sx)
            }
        }
        Flag::Viable => {
            el.len() == 2 && {
                let (xy, yx) = (s.product(el[0], el[1]), s.product(el[1], el[0]));
                idem(xy) && idem(yx) && xy != yx
            }
        }
        Flag::ESeparated => {
            el.len() == 2 && el[0] != el[1] && idem(el[0]) && idem(el[1]) && {
                let proj = semilattice_reflection(s).projection;
                proj[el[0]] == proj[el[1]]
            }
        }
        Flag::ECommutative => {
            el.len() == 2
                && idem(el[0])
                && idem(el[1])
                && s.product(el[0], el[1]) != s.product(el[1], el[0])
        }
        Flag::ECentral => {
            el.len() == 2 && idem(el[0]) && s.product(el[0], el[1]) != s.product(el[1], el[0])
        }
        Flag::EUpclassCentral => {
            el.len() == 2 && idem(el[0]) && {
                let two = two_order_oracle(s).expect("scan-sized input");
                two.up(el[0]).contains(el[1])
                    && s.product(el[0], el[1]) != s.product(el[1], el[0])
            }
        }
        Flag::EHypercentral => {
            el.len() == 3 && idem(el[0]) && s.product(el[1], el[2]) == el[0] && {
                let (e, x, y) = (el[0], el[1], el[2]);
                s.product(x, e) != s.product(e, x) || s.product(y, e) != s.product(e, y)
            }
        }
        Flag::EHypocentral => {
            el.len() == 3 && idem(el[0]) && s.product(el[1], el[2]) == el[0] && {
                let (e, x, y) = (el[0], el[1], el[2]);
                s.product(x, e) != s.product(e, x) && s.product(y, e) != s.product(e, y)
            }
        }
        Flag::EUpcentral => {
            el.len() == 3 && idem(el[0]) && idem(el[1]) && {
                let (e, f, x) = (el[0], el[1], el[2]);
                s.product(f, e) == e && s.product(e, f) == e && {
                    let hf = all_h_classes(s)[f].h_class;
                    root_set(s, hf).contains(x) && s.product(x, e) != s.product(e, x)
                }
            }
        }
        Flag::Unipotent => el.len() == 2 && el[0] != el[1] && idem(el[0]) && idem(el[1]),
        Flag::TwoTrivial => {
            let a = ElementSet::from_elements(s.order(), el);
            !a.is_empty() && a != s.carrier() && s.classify_subset(a).is_prime_coideal
        }
        Flag::Archimedean => {
            el.len() == 2 && {
                let (x, y) = (el[0], el[1]);
                let sy = ElementSet::singleton(s.order(), y);
                let xyx = s.set_product(s.set_product(s.carrier(), sy), s.carrier());
                !monogenic_orbit(s, x).power_set(s.order()).intersects(&xyx)
            }
        }
        Flag::Regular => {
            el.len() == 1
                && !s
                    .elements()
                    .any(|y| s.product(s.product(el[0], y), el[0]) == el[0])
        }
        Flag::CompletelyRegular => {
            el.len() == 1
                && !s.elements().any(|y| {
                    s.product(s.product(el[0], y), el[0]) == el[0]
                        && s.product(el[0], y) == s.product(y, el[0])
                })
        }
        Flag::PiRegular => el.len() == 1 && !pi_regular_at(s, el[0], false),
        Flag::CompletelyPiRegular => el.len() == 1 && !pi_regular_at(s, el[0], true),
        Flag::Clifford => el.len() == 1 && !clifford_part(s).contains(el[0]),
        Flag::EventuallyClifford => {
            el.len() == 1 && !root_set(s, clifford_part(s)).contains(el[0])
        }
    }
}
