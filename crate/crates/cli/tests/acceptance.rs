//! Acceptance gate: seven end-to-end criteria covering oracle agreement,
//! the full verification sweep, non-vacuity, the separating example,
//! cross-implementation identities, finiteness facts, and byte-stable
//! parallel output. Each test prints one line naming its criterion.

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use semigroups::enumerate::{enumerate_tables, EnumerationConfig};
use semigroups::green::pi_map;
use semigroups::orbit::monogenic_orbit;
use semigroups::order2::{
    is_two_trivial, prime_coideals, semilattice_congruences, semilattice_reflection,
    two_order_oracle, up_class_fixpoint,
};
use semigroups::predicates::{self, Flag};
use semigroups::table::{left_zero, CayleyTable};
use semigroups::verify::{run_all, SuiteStatus, VerificationReport, ALL_SUITES};
use semigroups::ElementSet;

fn corpus4() -> &'static [CayleyTable] {
    static CACHE: OnceLock<Vec<CayleyTable>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut v = Vec::new();
        for n in 1..=4 {
            v.extend(enumerate_tables(
                &EnumerationConfig::new(n, false).expect("order within bounds"),
            ));
        }
        v
    })
}

fn sweep4() -> &'static (Vec<VerificationReport>, Duration) {
    static CACHE: OnceLock<(Vec<VerificationReport>, Duration)> = OnceLock::new();
    CACHE.get_or_init(|| {
        let started = Instant::now();
        let reports = run_all(4).expect("sweep runs");
        (reports, started.elapsed())
    })
}

/// Every n^(n*n) candidate table, keeping those the constructor accepts.
fn naive_associative_dumps(n: usize) -> BTreeSet<String> {
    let cell_count = n * n;
    let total = (n as u64).pow(cell_count as u32);
    let mut out = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let mut cells = vec![0usize; cell_count];
        for k in (0..cell_count).rev() {
            cells[k] = (c % n as u64) as usize;
            c /= n as u64;
        }
        if let Ok(t) = CayleyTable::new(n, cells) {
            out.insert(t.to_dump_string());
        }
    }
    out
}

#[test]
fn acceptance_1_enumeration_matches_the_naive_oracle() {
    let started = Instant::now();
    let mut counts = Vec::new();
    for n in [2usize, 3] {
        let stream: BTreeSet<String> =
            enumerate_tables(&EnumerationConfig::new(n, false).expect("order within bounds"))
                .map(|s| s.to_dump_string())
                .collect();
        let oracle = naive_associative_dumps(n);
        assert_eq!(stream, oracle, "stream and filter disagree at order {n}");
        counts.push(stream.len());
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "oracle comparison took {elapsed:?}, budget is 1s"
    );
    println!(
        "ACCEPTANCE 1 (enumeration oracle equivalence, counts {counts:?} in {elapsed:?}): PASS"
    );
}

#[test]
fn acceptance_2_full_sweep_passes_at_order_4() {
    let (reports, elapsed) = sweep4();
    assert_eq!(reports.len(), 22);
    for (r, expected) in reports.iter().zip(ALL_SUITES) {
        assert_eq!(r.suite, expected, "stable suite order");
        assert_eq!(r.status, SuiteStatus::Pass, "suite {} did not pass", r.suite);
        assert!(r.violations.is_empty(), "suite {} has violations", r.suite);
    }
    assert!(
        *elapsed <= Duration::from_secs(600),
        "sweep took {elapsed:?}, budget is 10 minutes"
    );
    println!("ACCEPTANCE 2 (full order <= 4 sweep, 22 suites in {elapsed:?}): PASS");
}

#[test]
fn acceptance_3_hypothesis_classes_are_not_vacuous() {
    let (reports, _) = sweep4();
    let get = |id: &str| {
        reports
            .iter()
            .find(|r| r.suite.as_str() == id)
            .expect("suite present")
    };

    let separ = get("SEPAR_EQUIV");
    let count = |label: &str| {
        separ
            .coverage
            .iter()
            .find(|c| c.label == label)
            .map_or(0, |c| c.count)
    };
    assert!(count("E_separated") >= 1);
    assert!(count("not_E_separated") >= 1);

    let duo = get("DUO_ESEP");
    let noncommutative = duo
        .coverage
        .iter()
        .find(|c| c.label == "noncommutative_duo")
        .map_or(0, |c| c.count);
    let reported_absent = duo
        .notes
        .iter()
        .any(|n| n.contains("no non-commutative duo semigroup exists"));
    assert!(
        noncommutative >= 1 || reported_absent,
        "duo suite neither found a non-commutative instance nor reported its absence"
    );

    for r in reports {
        if r.status == SuiteStatus::Vacuous {
            assert!(
                r.notes.iter().any(|n| n.contains("vacuous")),
                "unjustified vacuous suite {}",
                r.suite
            );
        }
        assert!(r.hypothesis_matches > 0, "suite {} is vacuous at order 4", r.suite);
    }
    println!(
        "ACCEPTANCE 3 (non-vacuity; sides {}/{}, non-commutative duo count {noncommutative}): PASS",
        count("E_separated"),
        count("not_E_separated")
    );
}

#[test]
fn acceptance_4_left_zero_pair_separates_the_implication() {
    let s = left_zero(2);
    let report = predicates::evaluate_properties(&s);
    assert!(report.flag(Flag::EHypocentral));
    assert!(report.flag(Flag::EUpcentral));
    assert!(!report.flag(Flag::EHypercentral));
    assert!(!report.flag(Flag::ESeparated));
    for f in [Flag::EHypercentral, Flag::ESeparated] {
        let w = report.witness(f).expect("false flag carries a witness");
        assert!(predicates::witness_refutes(&s, f, w));
    }
    println!("ACCEPTANCE 4 (left zero counterexample flag vector): PASS");
}

#[test]
fn acceptance_5_independent_implementations_agree() {
    for s in corpus4() {
        let two = two_order_oracle(s).expect("scan-sized input");

        for x in 0..s.order() {
            assert_eq!(
                up_class_fixpoint(s, x).fixpoint,
                two.up(x),
                "fixpoint route diverges at {x} on {:?}",
                s
            );
        }

        let coideals = prime_coideals(s).expect("scan-sized input");
        let via_coideals = coideals.len() == 2;
        let via_reflection = semilattice_reflection(s).quotient.order() == 1;
        assert_eq!(via_coideals, via_reflection, "2-triviality routes split on {:?}", s);
        assert_eq!(via_coideals, is_two_trivial(s));

        let ids = s.idempotents().to_vec();
        let mut separated_by_scan = true;
        for &e in &ids {
            for &f in &ids {
                if e == f {
                    continue;
                }
                let by_classes = two.class_of(e) != two.class_of(f);
                let by_coideal = coideals
                    .iter()
                    .any(|c| c.contains(e) != c.contains(f));
                assert_eq!(by_classes, by_coideal, "separation routes split on {:?}", s);
                separated_by_scan &= by_coideal;
            }
        }
        assert_eq!(
            separated_by_scan,
            predicates::holds(s, Flag::ESeparated),
            "flag diverges from the pairwise scan on {:?}",
            s
        );

        let congruences = semilattice_congruences(s).expect("scan-sized input");
        let n = s.order();
        let mut meet = BTreeSet::new();
        for x in 0..n {
            let mut class = ElementSet::empty(n);
            for y in 0..n {
                if congruences.iter().all(|c| c.class_of[x] == c.class_of[y]) {
                    class.insert(y);
                }
            }
            meet.insert(class);
        }
        let classes: BTreeSet<ElementSet> = two.classes().iter().copied().collect();
        assert_eq!(meet, classes, "meet of congruences diverges on {:?}", s);
    }
    println!(
        "ACCEPTANCE 5 (cross-implementation identities over {} semigroups): PASS",
        corpus4().len()
    );
}

#[test]
fn acceptance_6_finiteness_facts_hold_at_order_4() {
    for s in corpus4() {
        assert!(predicates::holds(s, Flag::PiRegular), "pi-regularity fails on {:?}", s);
        assert!(
            predicates::holds(s, Flag::EventuallyClifford),
            "eventual Clifford fails on {:?}",
            s
        );
        let classes = semigroups::green::all_h_classes(s);
        for x in 0..s.order() {
            let e = pi_map(s, x);
            assert!(s.is_idempotent(e));
            // powers that reach a group H-class stay in it from then on
            let orbit = monogenic_orbit(s, x);
            let bound = orbit.exponent_bound();
            for f in s.idempotents().iter() {
                let h = classes[f].h_class;
                if let Some(first) = (1..=bound).find(|&k| h.contains(orbit.power(k))) {
                    for m in first..=bound {
                        assert!(
                            h.contains(orbit.power(m)),
                            "power {m} of {x} leaves the group at {f} on {:?}",
                            s
                        );
                    }
                }
            }
        }
    }
    let (reports, _) = sweep4();
    let lemma = reports
        .iter()
        .find(|r| r.suite.as_str() == "PI_WELL_DEFINED")
        .expect("suite present");
    assert_eq!(lemma.status, SuiteStatus::Pass);
    assert_eq!(lemma.semigroups_checked, corpus4().len());
    println!(
        "ACCEPTANCE 6 (finiteness facts over {} semigroups): PASS",
        corpus4().len()
    );
}

#[test]
fn acceptance_7_worker_count_never_changes_the_bytes() {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_semigroups"))
            .args(["verify", "--max-order", "3", "--format", "json", "--jobs", jobs])
            .output()
            .expect("binary runs")
    };
    let one = run("1");
    let eight = run("8");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(eight.status.code(), Some(0));
    assert!(!one.stdout.is_empty());
    assert_eq!(one.stdout, eight.stdout, "reports differ between --jobs 1 and --jobs 8");
    println!(
        "ACCEPTANCE 7 (byte-identical reports across worker counts, {} bytes): PASS",
        one.stdout.len()
    );
}
