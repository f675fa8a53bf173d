//! Extensional checking of the structural claims over exhaustively
//! enumerated corpora. Each suite has a hypothesis gate and a list of
//! labelled items; a violation records the table, the item, and the first
//! counterexample, and can be replayed through the same item checker.
//! Reports are byte-stable: timing never enters the serialized form, the
//! corpus is scanned in enumeration order, and aggregation is sequential
//! over ordered per-table outcomes regardless of worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::enumerate::{enumerate_tables, EnumerationConfig};
use crate::error::{Error, Result};
use crate::green::{all_h_classes, clifford_part, he_over_e, pi_map, root_set};
use crate::orbit::monogenic_orbit;
use crate::order2::{
    all_coideals, is_two_trivial, prime_coideals, two_order_oracle, up_class_duo,
    up_class_fixpoint, up_class_viable,
};
use crate::predicates::{self, Flag};
use crate::sets::ElementSet;
use crate::structure::{hbar_updown, pi_updown};
use crate::table::{left_zero, CayleyTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SuiteId {
    Quasi2,
    PiWellDefined,
    Korin,
    SmallestPi,
    UpclassFixpoint,
    DuoUpclass,
    PwUpclass,
    Archimed,
    Tamura2Trivial,
    TamuraMaxIdeal,
    EzkCentral,
    CIdealChain,
    EViableIff,
    SeparEquiv,
    SeparImplies6,
    LeftzeroExample,
    DuoEsep,
    EseparStruct,
    EupSix,
    CentralEquiv,
    UpclassPi,
    EeclifStruct,
}

pub const ALL_SUITES: [SuiteId; 22] = [
    SuiteId::Quasi2,
    SuiteId::PiWellDefined,
    SuiteId::Korin,
    SuiteId::SmallestPi,
    SuiteId::UpclassFixpoint,
    SuiteId::DuoUpclass,
    SuiteId::PwUpclass,
    SuiteId::Archimed,
    SuiteId::Tamura2Trivial,
    SuiteId::TamuraMaxIdeal,
    SuiteId::EzkCentral,
    SuiteId::CIdealChain,
    SuiteId::EViableIff,
    SuiteId::SeparEquiv,
    SuiteId::SeparImplies6,
    SuiteId::LeftzeroExample,
    SuiteId::DuoEsep,
    SuiteId::EseparStruct,
    SuiteId::EupSix,
    SuiteId::CentralEquiv,
    SuiteId::UpclassPi,
    SuiteId::EeclifStruct,
];

impl SuiteId {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::Quasi2 => "QUASI2",
            SuiteId::PiWellDefined => "PI_WELL_DEFINED",
            SuiteId::Korin => "KORIN",
            SuiteId::SmallestPi => "SMALLEST_PI",
            SuiteId::UpclassFixpoint => "UPCLASS_FIXPOINT",
            SuiteId::DuoUpclass => "DUO_UPCLASS",
            SuiteId::PwUpclass => "PW_UPCLASS",
            SuiteId::Archimed => "ARCHIMED",
            SuiteId::Tamura2Trivial => "TAMURA_2TRIVIAL",
            SuiteId::TamuraMaxIdeal => "TAMURA_MAX_IDEAL",
            SuiteId::EzkCentral => "EZK_CENTRAL",
            SuiteId::CIdealChain => "C_IDEAL_CHAIN",
            SuiteId::EViableIff => "E_VIABLE_IFF",
            SuiteId::SeparEquiv => "SEPAR_EQUIV",
            SuiteId::SeparImplies6 => "SEPAR_IMPLIES_6",
            SuiteId::LeftzeroExample => "LEFTZERO_EXAMPLE",
            SuiteId::DuoEsep => "DUO_ESEP",
            SuiteId::EseparStruct => "ESEPAR_STRUCT",
            SuiteId::EupSix => "EUP_SIX",
            SuiteId::CentralEquiv => "CENTRAL_EQUIV",
            SuiteId::UpclassPi => "UPCLASS_PI",
            SuiteId::EeclifStruct => "EECLIF_STRUCT",
        }
    }

    /// One-line statement of what the suite checks.
    pub fn describe(self) -> &'static str {
        match self {
            SuiteId::Quasi2 => "quasiorder laws: monotonicity, xy ~ yx, x ~ x^2, xy below factors",
            SuiteId::PiWellDefined => "a power inside a group H-class stays there for all larger exponents",
            SuiteId::Korin => "the root set of a group H-class sits inside the 2-class of its idempotent",
            SuiteId::SmallestPi => "the upper class of x is the smallest prime coideal containing x",
            SuiteId::UpclassFixpoint => "the sandwich fixpoint iteration reaches exactly the upper class",
            SuiteId::DuoUpclass => "in duo semigroups the upper class of a is {x : powers of a meet XxX}",
            SuiteId::PwUpclass => "in viable semigroups the upper class of e is {x : e in X^1xX^1}",
            SuiteId::Archimed => "a duo semigroup is 2-trivial iff it is Archimedean",
            SuiteId::Tamura2Trivial => "every 2-class is a 2-trivial subsemigroup",
            SuiteId::TamuraMaxIdeal => "in a unipotent 2-trivial semigroup the maximal subgroup is an ideal",
            SuiteId::EzkCentral => "in a unipotent 2-trivial semigroup the idempotent is central",
            SuiteId::CIdealChain => "the chain: root set of H_e inside H_e/e inside the upper class of e",
            SuiteId::EViableIff => "an idempotent is viable iff H_e/e equals its upper class",
            SuiteId::SeparEquiv => "five-way equivalence of the separation conditions",
            SuiteId::SeparImplies6 => "the separation conditions imply E-hypocentral and E-upcentral",
            SuiteId::LeftzeroExample => "left zero semigroups separate the one-way implication",
            SuiteId::DuoEsep => "every duo semigroup is a separated E-semigroup",
            SuiteId::EseparStruct => "structure of separated E-semigroups, seven items",
            SuiteId::EupSix => "product laws for group H-classes under E-commutativity, six items",
            SuiteId::CentralEquiv => "three-way equivalence for pi-regular E-semigroups",
            SuiteId::UpclassPi => "the upper class of e is {x : e below the projection of x}",
            SuiteId::EeclifStruct => "structure of separated pi-regular E-semigroups, seven items",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_SUITES
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl Serialize for SuiteId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteStatus {
    Pass,
    Fail,
    Vacuous,
}

impl Serialize for SuiteStatus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            SuiteStatus::Pass => "PASS",
            SuiteStatus::Fail => "FAIL",
            SuiteStatus::Vacuous => "VACUOUS",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Dump form of the offending table, parseable by the table reader.
    pub table: String,
    /// Label of the violated statement item, e.g. "(3)" or "(2=>3)".
    pub item: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageCount {
    pub label: String,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: SuiteId,
    pub status: SuiteStatus,
    pub orders_checked: Vec<usize>,
    pub semigroups_checked: usize,
    pub hypothesis_matches: usize,
    pub violations: Vec<Violation>,
    pub coverage: Vec<CoverageCount>,
    pub notes: Vec<String>,
    /// Wall time of the run; never serialized so reports stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != SuiteStatus::Fail
    }
}

/// Exit status over a set of reports: any violation beats vacuity beats
/// a clean pass.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status == SuiteStatus::Fail) {
        1
    } else if reports.iter().any(|r| r.status == SuiteStatus::Vacuous) {
        2
    } else {
        0
    }
}

struct Outcome {
    matched: bool,
    violations: Vec<(&'static str, Vec<usize>)>,
    tags: Vec<String>,
}

pub fn run_suite(suite: SuiteId, max_order: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let corpus: Vec<CayleyTable> = if suite == SuiteId::LeftzeroExample {
        (1..=max_order).map(left_zero).collect()
    } else {
        let mut v = Vec::new();
        for n in 1..=max_order {
            v.extend(enumerate_tables(&EnumerationConfig::new(n, false)?));
        }
        v
    };
    let outcomes: Vec<Outcome> = corpus.par_iter().map(|s| check_table(suite, s)).collect();

    let mut hypothesis_matches = 0;
    let mut violations = Vec::new();
    let mut tag_counts: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for (s, o) in corpus.iter().zip(&outcomes) {
        if o.matched {
            hypothesis_matches += 1;
        }
        let dump = s.to_dump_string();
        for (item, witness) in &o.violations {
            violations.push(Violation {
                table: dump.clone(),
                item: (*item).to_string(),
                witness: witness.clone(),
            });
        }
        for tag in &o.tags {
            let entry = tag_counts
                .entry(tag.clone())
                .or_insert_with(|| (0, dump.clone()));
            entry.0 += 1;
        }
    }

    let status = if !violations.is_empty() {
        SuiteStatus::Fail
    } else if hypothesis_matches == 0 {
        SuiteStatus::Vacuous
    } else {
        SuiteStatus::Pass
    };
    let coverage: Vec<CoverageCount> = tag_counts
        .iter()
        .map(|(label, (count, _))| CoverageCount {
            label: label.clone(),
            count: *count,
        })
        .collect();
    let notes = build_notes(suite, max_order, status, hypothesis_matches, &tag_counts);

    Ok(VerificationReport {
        suite,
        status,
        orders_checked: (1..=max_order).collect(),
        semigroups_checked: corpus.len(),
        hypothesis_matches,
        violations,
        coverage,
        notes,
        elapsed: started.elapsed(),
    })
}

pub fn run_all(max_order: usize) -> Result<Vec<VerificationReport>> {
    ALL_SUITES
        .into_iter()
        .map(|suite| run_suite(suite, max_order))
        .collect()
}

/// Re-runs the item checker named by the violation on the recorded table;
/// true means the same witness still falsifies the item.
pub fn replay_violation(suite: SuiteId, v: &Violation) -> Result<bool> {
    let s = CayleyTable::parse_dump(&v.table)?;
    Ok(run_items(suite, &s)
        .into_iter()
        .any(|(label, witness)| label == v.item && witness.as_deref() == Some(&v.witness)))
}

fn check_table(suite: SuiteId, s: &CayleyTable) -> Outcome {
    let matched = hypothesis(suite, s);
    let mut violations = Vec::new();
    if matched {
        for (label, witness) in run_items(suite, s) {
            if let Some(w) = witness {
                violations.push((label, w));
            }
        }
    } else if suite == SuiteId::EseparStruct && predicates::holds(s, Flag::ESeparated) {
        // the group-ideal and commuting items hold in every separated
        // semigroup, E-semigroup or not; check them on the wider class
        for (label, witness) in [("(2)", esep2_group_ideal(s)), ("(3)", esep3_into_group(s))] {
            if let Some(w) = witness {
                violations.push((label, w));
            }
        }
    }
    Outcome {
        matched,
        violations,
        tags: tags_for(suite, s, matched),
    }
}

fn hypothesis(suite: SuiteId, s: &CayleyTable) -> bool {
    use SuiteId::*;
    let holds = |f| predicates::holds(s, f);
    match suite {
        Quasi2 | PiWellDefined | Korin | SmallestPi | UpclassFixpoint | Tamura2Trivial
        | CIdealChain | EViableIff | SeparEquiv | LeftzeroExample => true,
        DuoUpclass | Archimed | DuoEsep => holds(Flag::Duo),
        PwUpclass => holds(Flag::Viable),
        TamuraMaxIdeal | EzkCentral => holds(Flag::Unipotent) && holds(Flag::TwoTrivial),
        SeparImplies6 => holds(Flag::ESeparated),
        EseparStruct => holds(Flag::ESeparated) && holds(Flag::ESemigroup),
        EupSix => holds(Flag::ECommutative) && holds(Flag::EUpcentral),
        CentralEquiv => holds(Flag::PiRegular) && holds(Flag::ESemigroup),
        UpclassPi => {
            holds(Flag::PiRegular)
                && holds(Flag::ESemigroup)
                && holds(Flag::EUpcentral)
                && holds(Flag::EHypocentral)
                && holds(Flag::ECommutative)
        }
        EeclifStruct => {
            holds(Flag::ESeparated) && holds(Flag::PiRegular) && holds(Flag::ESemigroup)
        }
    }
}

/// Runs every item checker of the suite on one table, hypothesis not
/// consulted; `None` per item means the item holds.
fn run_items(suite: SuiteId, s: &CayleyTable) -> Vec<(&'static str, Option<Vec<usize>>)> {
    use SuiteId::*;
    match suite {
        Quasi2 => vec![
            ("(1)", q2_monotone(s)),
            ("(2)", q2_commuted_products(s)),
            ("(3)", q2_square(s)),
            ("(4)", q2_product_below(s)),
        ],
        PiWellDefined => vec![("(1)", pi_powers_stay(s))],
        Korin => vec![("(1)", korin_roots_in_biclass(s))],
        SmallestPi => vec![
            ("(coideal)", smallest_is_prime_coideal(s)),
            ("(minimality)", smallest_among_prime(s)),
        ],
        UpclassFixpoint => vec![("(1)", fixpoint_matches_oracle(s))],
        DuoUpclass => vec![("(1)", duo_upclass_matches(s))],
        PwUpclass => vec![("(1)", pw_upclass_matches(s))],
        Archimed => vec![
            ("(=>)", archimed_forward(s)),
            ("(<=)", archimed_backward(s)),
        ],
        Tamura2Trivial => vec![("(1)", biclasses_two_trivial(s))],
        TamuraMaxIdeal => vec![("(1)", unipotent_group_ideal(s))],
        EzkCentral => vec![("(1)", unipotent_idempotent_central(s))],
        CIdealChain => vec![
            ("(1)", chain_roots_in_quotient(s)),
            ("(2)", chain_quotient_in_up(s)),
        ],
        EViableIff => vec![
            ("(=>)", eviable_forward(s)),
            ("(<=)", eviable_backward(s)),
            ("(ideal)", eviable_group_ideal(s)),
            ("(central)", eviable_central(s)),
        ],
        SeparEquiv => {
            let c: Vec<bool> = (0..5).map(|i| separ_condition(s, i)).collect();
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
                .into_iter()
                .map(|(i, j)| {
                    let label = SEPAR_EDGE_LABELS[i];
                    let witness = (c[i] && !c[j]).then(|| separ_refutation(s, j));
                    (label, witness)
                })
                .collect()
        }
        SeparImplies6 => vec![
            ("(6 hypocentral)", predicates::check(s, Flag::EHypocentral).map(|w| w.elements)),
            ("(6 upcentral)", predicates::check(s, Flag::EUpcentral).map(|w| w.elements)),
        ],
        LeftzeroExample => {
            let mut items = vec![
                (
                    "(hypocentral)",
                    predicates::check(s, Flag::EHypocentral).map(|w| w.elements),
                ),
                (
                    "(upcentral)",
                    predicates::check(s, Flag::EUpcentral).map(|w| w.elements),
                ),
            ];
            if s.order() >= 2 {
                items.push((
                    "(not hypercentral)",
                    predicates::holds(s, Flag::EHypercentral).then(Vec::new),
                ));
                items.push((
                    "(not separated)",
                    predicates::holds(s, Flag::ESeparated).then(Vec::new),
                ));
            }
            items
        }
        DuoEsep => vec![
            ("(E-semigroup)", predicates::check(s, Flag::ESemigroup).map(|w| w.elements)),
            ("(E-separated)", predicates::check(s, Flag::ESeparated).map(|w| w.elements)),
        ],
        EseparStruct => vec![
            ("(1)", esep1_semilattice(s)),
            ("(2)", esep2_group_ideal(s)),
            ("(3)", esep3_into_group(s)),
            ("(4)", esep4_orders_agree(s)),
            ("(5)", esep5_pi_retraction(s)),
            ("(6)", esep6_hbar_retraction(s)),
            ("(7)", clifford_closed(s)),
        ],
        EupSix => vec![
            ("(1)", eup1_class_products(s)),
            ("(2)", eup2_roots_absorb(s)),
            ("(3)", eup3_powers_land(s)),
            ("(4)", eup4_projection_monotone(s)),
            ("(5)", eup5_sided_projections_agree(s)),
            ("(6)", eup6_projection_absorbs(s)),
        ],
        CentralEquiv => {
            let c = [
                biclass_root_gap(s).is_none(),
                predicates::holds(s, Flag::ESeparated),
                central_c3_gap(s).is_none(),
            ];
            [(0, 1), (1, 2), (2, 0)]
                .into_iter()
                .map(|(i, j)| {
                    let label = CENTRAL_EDGE_LABELS[i];
                    let witness = (c[i] && !c[j]).then(|| central_refutation(s, j));
                    (label, witness)
                })
                .collect()
        }
        UpclassPi => vec![("(1)", up_by_projection(s))],
        EeclifStruct => vec![
            ("(1)", eclif1_eventually_clifford(s)),
            ("(2)", eclif2_class_identities(s)),
            ("(3)", esep2_group_ideal(s)),
            ("(4)", eclif4_commute(s)),
            ("(5)", eclif5_pi_retraction(s)),
            ("(6)", eclif6_hbar_retraction(s)),
            ("(7)", clifford_closed(s)),
        ],
    }
}

const SEPAR_EDGE_LABELS: [&str; 5] = ["(1=>2)", "(2=>3)", "(3=>4)", "(4=>5)", "(5=>1)"];
const CENTRAL_EDGE_LABELS: [&str; 3] = ["(1=>2)", "(2=>3)", "(3=>1)"];

fn tags_for(suite: SuiteId, s: &CayleyTable, matched: bool) -> Vec<String> {
    use SuiteId::*;
    let mut tags = Vec::new();
    match suite {
        SeparEquiv => {
            if predicates::holds(s, Flag::ESeparated) {
                tags.push("E_separated".to_string());
            } else {
                tags.push("not_E_separated".to_string());
            }
        }
        CentralEquiv => {
            if matched {
                tags.push(
                    if predicates::holds(s, Flag::ESeparated) {
                        "E_separated"
                    } else {
                        "not_E_separated"
                    }
                    .to_string(),
                );
            }
        }
        Archimed => {
            if predicates::holds(s, Flag::Archimedean) != predicates::is_archimedean_adjoined(s) {
                tags.push("adjoined_sandwich_differs".to_string());
            }
            if matched {
                if is_two_trivial(s) {
                    tags.push("duo_two_trivial".to_string());
                }
                if predicates::holds(s, Flag::Archimedean) {
                    tags.push("duo_archimedean".to_string());
                }
            }
        }
        DuoEsep => {
            if matched && !predicates::holds(s, Flag::Commutative) {
                tags.push("noncommutative_duo".to_string());
            }
        }
        EseparStruct => {
            if !matched && predicates::holds(s, Flag::ESeparated) {
                tags.push("separated_non_E_semigroup".to_string());
            }
        }
        SmallestPi => {
            if all_coideal_minimality_gap(s) {
                tags.push("all_coideal_minimality_gap".to_string());
            }
        }
        EViableIff => {
            let any_viable = s
                .idempotents()
                .iter()
                .any(|e| s.classify_subset(he_over_e(s, e).expect("idempotent")).is_coideal);
            let any_nonviable = s
                .idempotents()
                .iter()
                .any(|e| !s.classify_subset(he_over_e(s, e).expect("idempotent")).is_coideal);
            if any_viable {
                tags.push("has_viable_idempotent".to_string());
            }
            if any_nonviable {
                tags.push("has_nonviable_idempotent".to_string());
            }
        }
        LeftzeroExample if s.order() >= 2 => {
            tags.push("separating_instance".to_string());
        }
        _ => {}
    }
    tags
}

fn build_notes(
    suite: SuiteId,
    max_order: usize,
    status: SuiteStatus,
    hypothesis_matches: usize,
    tags: &BTreeMap<String, (usize, String)>,
) -> Vec<String> {
    let mut notes = Vec::new();
    if status == SuiteStatus::Vacuous {
        notes.push(format!(
            "vacuous: no semigroup of order <= {max_order} satisfies the hypothesis; nothing was checked"
        ));
    }
    let tag = |name: &str| tags.get(name);
    match suite {
        SuiteId::SmallestPi => match tag("all_coideal_minimality_gap") {
            Some((count, first)) => notes.push(format!(
                "minimality holds among prime coideals; the stronger all-coideal reading fails for {count} semigroup(s), first: {first}"
            )),
            None => notes.push(
                "minimality holds among prime coideals and, on this corpus, among all coideals"
                    .to_string(),
            ),
        },
        SuiteId::Archimed => match tag("adjoined_sandwich_differs") {
            Some((count, first)) => notes.push(format!(
                "the adjoined-identity sandwich reading disagrees with the literal one on {count} semigroup(s), first: {first}"
            )),
            None => notes.push(
                "the adjoined-identity sandwich reading agrees with the literal one on this corpus"
                    .to_string(),
            ),
        },
        SuiteId::DuoEsep => match tag("noncommutative_duo") {
            Some((count, first)) => notes.push(format!(
                "non-commutative duo semigroups at these orders: {count}, first: {first}"
            )),
            None => notes.push(format!(
                "no non-commutative duo semigroup exists at orders <= {max_order}; the duo hypothesis class is purely commutative here"
            )),
        },
        SuiteId::EseparStruct => match tag("separated_non_E_semigroup") {
            Some((count, first)) => notes.push(format!(
                "separated semigroups that are not E-semigroups: {count} (first: {first}); the group-ideal and commuting items were additionally checked there"
            )),
            None => notes.push(format!(
                "no separated non-E-semigroup exists at orders <= {max_order}; the wider-class check of the group-ideal and commuting items is vacuous here"
            )),
        },
        SuiteId::SeparEquiv => {
            let yes = tag("E_separated").map_or(0, |t| t.0);
            let no = tag("not_E_separated").map_or(0, |t| t.0);
            notes.push(format!(
                "sides: {yes} separated, {no} not separated; both sides are exercised iff both counts are positive"
            ));
        }
        SuiteId::CentralEquiv => {
            let yes = tag("E_separated").map_or(0, |t| t.0);
            let no = tag("not_E_separated").map_or(0, |t| t.0);
            notes.push(format!(
                "within the hypothesis class: {yes} separated, {no} not separated"
            ));
        }
        SuiteId::EupSix => notes.push(
            "membership side conditions of the projection items hold automatically on finite carriers, so those items are checked unconditionally"
                .to_string(),
        ),
        SuiteId::LeftzeroExample => {
            let k = tag("separating_instance").map_or(0, |t| t.0);
            if k > 0 {
                notes.push(format!(
                    "{k} instance(s) with at least two elements witness that the implied pair of properties does not imply separation"
                ));
            } else if hypothesis_matches > 0 {
                notes.push(
                    "only the one-element instance fits under this bound; the separating direction needs order >= 2"
                        .to_string(),
                );
            }
        }
        _ => {}
    }
    notes
}

fn two(s: &CayleyTable) -> crate::order2::TwoOrder {
    two_order_oracle(s).expect("corpus orders stay within scan range")
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn natural_le(s: &CayleyTable, e: usize, f: usize) -> bool {
    s.product(e, f) == e && s.product(f, e) == e
}

fn projection_vector(s: &CayleyTable) -> Vec<usize> {
    (0..s.order()).map(|x| pi_map(s, x)).collect()
}

fn q2_monotone(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    for (x, y) in pairs(s.order()) {
        if !t.leq(x, y) {
            continue;
        }
        for a in 0..s.order() {
            if !t.leq(s.product(a, x), s.product(a, y))
                || !t.leq(s.product(x, a), s.product(y, a))
            {
                return Some(vec![x, y, a]);
            }
        }
    }
    None
}

fn q2_commuted_products(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    pairs(s.order())
        .find(|&(x, y)| {
            let (xy, yx) = (s.product(x, y), s.product(y, x));
            !t.leq(xy, yx) || !t.leq(yx, xy)
        })
        .map(|(x, y)| vec![x, y])
}

fn q2_square(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    (0..s.order())
        .find(|&x| {
            let xx = s.product(x, x);
            !t.leq(x, xx) || !t.leq(xx, x)
        })
        .map(|x| vec![x])
}

fn q2_product_below(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    pairs(s.order())
        .find(|&(x, y)| {
            let xy = s.product(x, y);
            !t.leq(xy, x) || !t.leq(xy, y)
        })
        .map(|(x, y)| vec![x, y])
}

fn pi_powers_stay(s: &CayleyTable) -> Option<Vec<usize>> {
    let classes = all_h_classes(s);
    for x in 0..s.order() {
        let orbit = monogenic_orbit(s, x);
        let bound = orbit.exponent_bound();
        for e in s.idempotents().iter() {
            let h = classes[e].h_class;
            let Some(first) = (1..=bound).find(|&k| h.contains(orbit.power(k))) else {
                continue;
            };
            for m in first..=bound {
                if !h.contains(orbit.power(m)) {
                    return Some(vec![x, e, first, m]);
                }
            }
        }
    }
    None
}

fn korin_roots_in_biclass(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    let classes = all_h_classes(s);
    for e in s.idempotents().iter() {
        let bi = t.bi(e);
        if let Some(x) = root_set(s, classes[e].h_class).iter().find(|&x| !bi.contains(x)) {
            return Some(vec![e, x]);
        }
    }
    None
}

fn smallest_is_prime_coideal(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    (0..s.order())
        .find(|&x| {
            let up = t.up(x);
            !up.contains(x) || !s.classify_subset(up).is_prime_coideal
        })
        .map(|x| vec![x])
}

fn smallest_among_prime(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    let coideals = prime_coideals(s).expect("corpus orders stay within scan range");
    for x in 0..s.order() {
        let up = t.up(x);
        for c in &coideals {
            if c.contains(x) && !up.is_subset_of(c) {
                let mut w = vec![x];
                w.extend(c.iter());
                return Some(w);
            }
        }
    }
    None
}

/// True when some plain coideal containing x fails to contain the upper
/// class of x, so the literal "smallest coideal" reading would not hold.
fn all_coideal_minimality_gap(s: &CayleyTable) -> bool {
    let t = two(s);
    let coideals = all_coideals(s).expect("corpus orders stay within scan range");
    (0..s.order()).any(|x| {
        coideals
            .iter()
            .any(|c| c.contains(x) && !t.up(x).is_subset_of(c))
    })
}

fn fixpoint_matches_oracle(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    (0..s.order())
        .find(|&x| up_class_fixpoint(s, x).fixpoint != t.up(x))
        .map(|x| vec![x])
}

fn duo_upclass_matches(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    for a in 0..s.order() {
        match up_class_duo(s, a) {
            Ok(shortcut) if shortcut == t.up(a) => {}
            Ok(_) => return Some(vec![a]),
            Err(Error::Hypothesis { witness, .. }) => return Some(witness),
            Err(other) => panic!("unexpected shortcut failure: {other}"),
        }
    }
    None
}

fn pw_upclass_matches(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    for e in s.idempotents().iter() {
        match up_class_viable(s, e) {
            Ok(shortcut) if shortcut == t.up(e) => {}
            Ok(_) => return Some(vec![e]),
            Err(Error::Hypothesis { witness, .. }) => return Some(witness),
            Err(other) => panic!("unexpected shortcut failure: {other}"),
        }
    }
    None
}

fn archimed_forward(s: &CayleyTable) -> Option<Vec<usize>> {
    if is_two_trivial(s) {
        predicates::check(s, Flag::Archimedean).map(|w| w.elements)
    } else {
        None
    }
}

fn archimed_backward(s: &CayleyTable) -> Option<Vec<usize>> {
    if predicates::holds(s, Flag::Archimedean) && !is_two_trivial(s) {
        predicates::check(s, Flag::TwoTrivial).map(|w| w.elements)
    } else {
        None
    }
}

fn biclasses_two_trivial(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    (0..s.order())
        .find(|&x| !is_two_trivial(&s.sub_table(t.bi(x))))
        .map(|x| vec![x])
}

fn unipotent_group_ideal(s: &CayleyTable) -> Option<Vec<usize>> {
    let e = s.idempotents().iter().next().expect("finite semigroups have an idempotent");
    let h = all_h_classes(s)[e].h_class;
    for g in h.iter() {
        for x in 0..s.order() {
            if !h.contains(s.product(x, g)) || !h.contains(s.product(g, x)) {
                return Some(vec![e, g, x]);
            }
        }
    }
    None
}

fn unipotent_idempotent_central(s: &CayleyTable) -> Option<Vec<usize>> {
    let e = s.idempotents().iter().next().expect("finite semigroups have an idempotent");
    (0..s.order())
        .find(|&x| s.product(e, x) != s.product(x, e))
        .map(|x| vec![e, x])
}

fn chain_roots_in_quotient(s: &CayleyTable) -> Option<Vec<usize>> {
    let classes = all_h_classes(s);
    for e in s.idempotents().iter() {
        let quotient = he_over_e(s, e).expect("idempotent");
        if let Some(x) = root_set(s, classes[e].h_class)
            .iter()
            .find(|&x| !quotient.contains(x))
        {
            return Some(vec![e, x]);
        }
    }
    None
}

fn chain_quotient_in_up(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    for e in s.idempotents().iter() {
        let quotient = he_over_e(s, e).expect("idempotent");
        let up = t.up(e);
        let stray = quotient.iter().find(|&x| !up.contains(x));
        if let Some(x) = stray {
            return Some(vec![e, x]);
        }
    }
    None
}

fn eviable_forward(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    s.idempotents()
        .iter()
        .find(|&e| {
            let q = he_over_e(s, e).expect("idempotent");
            s.classify_subset(q).is_coideal && q != t.up(e)
        })
        .map(|e| vec![e])
}

fn eviable_backward(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    s.idempotents()
        .iter()
        .find(|&e| {
            let q = he_over_e(s, e).expect("idempotent");
            q == t.up(e) && !s.classify_subset(q).is_coideal
        })
        .map(|e| vec![e])
}

fn eviable_group_ideal(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    let classes = all_h_classes(s);
    for e in s.idempotents().iter() {
        if !s.classify_subset(he_over_e(s, e).expect("idempotent")).is_coideal {
            continue;
        }
        let h = classes[e].h_class;
        for g in h.iter() {
            for x in t.up(e).iter() {
                if !h.contains(s.product(x, g)) || !h.contains(s.product(g, x)) {
                    return Some(vec![e, g, x]);
                }
            }
        }
    }
    None
}

fn eviable_central(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    for e in s.idempotents().iter() {
        if !s.classify_subset(he_over_e(s, e).expect("idempotent")).is_coideal {
            continue;
        }
        if let Some(x) = t
            .up(e)
            .iter()
            .find(|&x| s.product(e, x) != s.product(x, e))
        {
            return Some(vec![e, x]);
        }
    }
    None
}

fn separ_condition(s: &CayleyTable, i: usize) -> bool {
    match i {
        0 => predicates::holds(s, Flag::ESeparated),
        1 => predicates::is_e_viable(s),
        2 => predicates::holds(s, Flag::EUpclassCentral),
        3 => predicates::holds(s, Flag::EHypercentral),
        4 => predicates::holds(s, Flag::Viable),
        _ => unreachable!(),
    }
}

fn separ_refutation(s: &CayleyTable, i: usize) -> Vec<usize> {
    let flag = match i {
        0 => Flag::ESeparated,
        1 => {
            return vec![predicates::e_viable_witness(s).expect("condition known false")];
        }
        2 => Flag::EUpclassCentral,
        3 => Flag::EHypercentral,
        4 => Flag::Viable,
        _ => unreachable!(),
    };
    predicates::check(s, flag).expect("condition known false").elements
}

fn esep1_semilattice(s: &CayleyTable) -> Option<Vec<usize>> {
    let ids = s.idempotents().to_vec();
    for &e in &ids {
        for &f in &ids {
            let p = s.product(e, f);
            if !s.is_idempotent(p) || p != s.product(f, e) {
                return Some(vec![e, f]);
            }
        }
    }
    None
}

fn esep2_group_ideal(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    let classes = all_h_classes(s);
    for e in s.idempotents().iter() {
        let h = classes[e].h_class;
        for g in h.iter() {
            for x in t.up(e).iter() {
                if !h.contains(s.product(x, g)) || !h.contains(s.product(g, x)) {
                    return Some(vec![e, g, x]);
                }
            }
        }
    }
    None
}

fn esep3_into_group(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    let classes = all_h_classes(s);
    for e in s.idempotents().iter() {
        let h = classes[e].h_class;
        for x in t.up(e).iter() {
            let (ex, xe) = (s.product(e, x), s.product(x, e));
            if ex != xe || !h.contains(ex) {
                return Some(vec![e, x]);
            }
        }
    }
    None
}

fn esep4_orders_agree(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    let ids = s.idempotents().to_vec();
    for &e in &ids {
        for &f in &ids {
            if t.leq(e, f) != natural_le(s, e, f) {
                return Some(vec![e, f]);
            }
        }
    }
    None
}

fn esep5_pi_retraction(s: &CayleyTable) -> Option<Vec<usize>> {
    match pi_updown(s) {
        Ok(_) => None,
        Err(Error::Conclusion { witness, .. }) | Err(Error::Hypothesis { witness, .. }) => {
            Some(witness)
        }
        Err(other) => panic!("unexpected retraction failure: {other}"),
    }
}

fn esep6_hbar_retraction(s: &CayleyTable) -> Option<Vec<usize>> {
    match hbar_updown(s) {
        Ok(_) => None,
        Err(Error::Conclusion { witness, .. }) | Err(Error::Hypothesis { witness, .. }) => {
            Some(witness)
        }
        Err(other) => panic!("unexpected retraction failure: {other}"),
    }
}

fn clifford_closed(s: &CayleyTable) -> Option<Vec<usize>> {
    let h = clifford_part(s);
    for x in h.iter() {
        for y in h.iter() {
            if !h.contains(s.product(x, y)) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

fn eup1_class_products(s: &CayleyTable) -> Option<Vec<usize>> {
    let classes = all_h_classes(s);
    let ids = s.idempotents().to_vec();
    for &e in &ids {
        for &f in &ids {
            let target = classes[s.product(e, f)].h_class;
            for u in classes[e].h_class.iter() {
                for v in classes[f].h_class.iter() {
                    if !target.contains(s.product(u, v)) {
                        return Some(vec![e, f, u, v]);
                    }
                }
            }
        }
    }
    None
}

fn eup2_roots_absorb(s: &CayleyTable) -> Option<Vec<usize>> {
    let classes = all_h_classes(s);
    let ids = s.idempotents().to_vec();
    for &e in &ids {
        for &f in &ids {
            if !natural_le(s, e, f) {
                continue;
            }
            let he = classes[e].h_class;
            for x in root_set(s, classes[f].h_class).iter() {
                if !he.contains(s.product(x, e)) || !he.contains(s.product(e, x)) {
                    return Some(vec![e, f, x]);
                }
            }
        }
    }
    None
}

fn eup3_powers_land(s: &CayleyTable) -> Option<Vec<usize>> {
    let classes = all_h_classes(s);
    let ids = s.idempotents().to_vec();
    for &e in &ids {
        for &f in &ids {
            let ef = s.product(e, f);
            let target = classes[ef].h_class;
            for x in root_set(s, classes[e].h_class).iter() {
                for y in root_set(s, classes[f].h_class).iter() {
                    let orbit = monogenic_orbit(s, s.product(x, y));
                    for n in 1..=orbit.exponent_bound() {
                        if !target.contains(s.product(orbit.power(n), ef)) {
                            return Some(vec![e, f, x, y, n]);
                        }
                    }
                }
            }
        }
    }
    None
}

fn eup4_projection_monotone(s: &CayleyTable) -> Option<Vec<usize>> {
    let pi = projection_vector(s);
    pairs(s.order())
        .find(|&(x, y)| {
            let p = s.product(pi[x], pi[y]);
            !natural_le(s, p, pi[s.product(x, y)])
        })
        .map(|(x, y)| vec![x, y])
}

fn eup5_sided_projections_agree(s: &CayleyTable) -> Option<Vec<usize>> {
    let pi = projection_vector(s);
    for e in s.idempotents().iter() {
        for x in 0..s.order() {
            if pi[s.product(x, e)] != pi[s.product(e, x)] {
                return Some(vec![e, x]);
            }
        }
    }
    None
}

fn eup6_projection_absorbs(s: &CayleyTable) -> Option<Vec<usize>> {
    let pi = projection_vector(s);
    for e in s.idempotents().iter() {
        for x in 0..s.order() {
            if pi[s.product(x, e)] != s.product(pi[x], e) {
                return Some(vec![e, x]);
            }
        }
    }
    None
}

fn biclass_root_gap(s: &CayleyTable) -> Option<usize> {
    let t = two(s);
    let classes = all_h_classes(s);
    s.idempotents()
        .iter()
        .find(|&e| t.bi(e) != root_set(s, classes[e].h_class))
}

fn central_c3_gap(s: &CayleyTable) -> Option<Vec<usize>> {
    for flag in [Flag::EUpcentral, Flag::EHypocentral, Flag::ECommutative] {
        if let Some(w) = predicates::check(s, flag) {
            return Some(w.elements);
        }
    }
    None
}

fn central_refutation(s: &CayleyTable, i: usize) -> Vec<usize> {
    match i {
        0 => vec![biclass_root_gap(s).expect("condition known false")],
        1 => {
            predicates::check(s, Flag::ESeparated)
                .expect("condition known false")
                .elements
        }
        2 => central_c3_gap(s).expect("condition known false"),
        _ => unreachable!(),
    }
}

fn up_by_projection(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    let pi = projection_vector(s);
    for e in s.idempotents().iter() {
        let mut by_projection = ElementSet::empty(s.order());
        for x in 0..s.order() {
            if natural_le(s, e, pi[x]) {
                by_projection.insert(x);
            }
        }
        if t.up(e) != by_projection {
            return Some(vec![e]);
        }
    }
    None
}

fn eclif1_eventually_clifford(s: &CayleyTable) -> Option<Vec<usize>> {
    if let Some(w) = predicates::check(s, Flag::EventuallyClifford) {
        return Some(w.elements);
    }
    esep1_semilattice(s)
}

fn eclif2_class_identities(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    let classes = all_h_classes(s);
    let pi = projection_vector(s);
    for e in s.idempotents().iter() {
        if t.bi(e) != root_set(s, classes[e].h_class) {
            return Some(vec![e]);
        }
        let mut by_projection = ElementSet::empty(s.order());
        for x in 0..s.order() {
            if natural_le(s, e, pi[x]) {
                by_projection.insert(x);
            }
        }
        if t.up(e) != by_projection {
            return Some(vec![e]);
        }
    }
    None
}

fn eclif4_commute(s: &CayleyTable) -> Option<Vec<usize>> {
    let t = two(s);
    for e in s.idempotents().iter() {
        if let Some(x) = t
            .up(e)
            .iter()
            .find(|&x| s.product(e, x) != s.product(x, e))
        {
            return Some(vec![e, x]);
        }
    }
    None
}

fn eclif5_pi_retraction(s: &CayleyTable) -> Option<Vec<usize>> {
    let pi = projection_vector(s);
    for e in s.idempotents().iter() {
        if pi[e] != e {
            return Some(vec![e]);
        }
    }
    pairs(s.order())
        .find(|&(x, y)| pi[s.product(x, y)] != s.product(pi[x], pi[y]))
        .map(|(x, y)| vec![x, y])
}

fn eclif6_hbar_retraction(s: &CayleyTable) -> Option<Vec<usize>> {
    let pi = projection_vector(s);
    let h = clifford_part(s);
    let hbar: Vec<usize> = (0..s.order()).map(|x| s.product(x, pi[x])).collect();
    for x in 0..s.order() {
        if !h.contains(hbar[x]) {
            return Some(vec![x]);
        }
    }
    for g in h.iter() {
        if hbar[g] != g {
            return Some(vec![g]);
        }
    }
    pairs(s.order())
        .find(|&(x, y)| hbar[s.product(x, y)] != s.product(hbar[x], hbar[y]))
        .map(|(x, y)| vec![x, y])
}
