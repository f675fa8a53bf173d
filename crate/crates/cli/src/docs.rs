//! Report documents emitted by the command line front end. Every command
//! builds one serializable document; the text renderers below are plain
//! renderings of the same data, so the two formats never drift apart.

use serde::Serialize;

use semigroups::green::{all_h_classes, clifford_part, pi_map};
use semigroups::order2::{semilattice_reflection, two_order_oracle, up_class_fixpoint};
use semigroups::predicates::{evaluate_properties, PropertyReport};
use semigroups::table::CayleyTable;
use semigroups::verify::{SuiteStatus, VerificationReport};

#[derive(Serialize)]
pub struct AnalyzeDocument {
    pub table: String,
    pub order: usize,
    pub idempotents: Vec<usize>,
    pub properties: PropertyReport,
    pub h_classes: Vec<Vec<usize>>,
    pub clifford_part: Vec<usize>,
    pub projection: Vec<usize>,
    pub reflection_classes: Vec<Vec<usize>>,
    pub reflection_quotient: String,
}

pub fn analyze(s: &CayleyTable) -> AnalyzeDocument {
    let two = two_order_oracle(s).expect("input orders stay within scan range");
    let mut h_classes: Vec<Vec<usize>> = Vec::new();
    for info in all_h_classes(s) {
        let members = info.h_class.to_vec();
        if members[0] == info.element {
            h_classes.push(members);
        }
    }
    let reflection = semilattice_reflection(s);
    AnalyzeDocument {
        table: s.to_dump_string(),
        order: s.order(),
        idempotents: s.idempotents().to_vec(),
        properties: evaluate_properties(s),
        h_classes,
        clifford_part: clifford_part(s).to_vec(),
        projection: (0..s.order()).map(|x| pi_map(s, x)).collect(),
        reflection_classes: two.classes().iter().map(|c| c.to_vec()).collect(),
        reflection_quotient: reflection.quotient.to_dump_string(),
    }
}

pub fn render_analyze(doc: &AnalyzeDocument) -> String {
    let mut out = String::new();
    line(&mut out, format!("table {} (order {})", doc.table, doc.order));
    line(&mut out, format!("idempotents: {}", set(&doc.idempotents)));
    line(&mut out, "flags:".to_string());
    for flag in semigroups::predicates::ALL_FLAGS {
        let value = doc.properties.flag(flag);
        let suffix = match doc.properties.witness(flag) {
            Some(w) => format!("  ({}: {})", w.role, set(&w.elements)),
            None => String::new(),
        };
        line(&mut out, format!("  {}: {}{}", flag.as_str(), value, suffix));
    }
    line(
        &mut out,
        format!("H-classes: {}", doc.h_classes.iter().map(|c| set(c)).collect::<Vec<_>>().join(" ")),
    );
    line(&mut out, format!("Clifford part: {}", set(&doc.clifford_part)));
    line(&mut out, format!("projection: {}", set(&doc.projection)));
    line(
        &mut out,
        format!(
            "reflection classes: {}",
            doc.reflection_classes.iter().map(|c| set(c)).collect::<Vec<_>>().join(" ")
        ),
    );
    line(&mut out, format!("reflection quotient: {}", doc.reflection_quotient));
    out
}

#[derive(Serialize)]
pub struct ClassesDocument {
    pub table: String,
    pub element: usize,
    pub up: Vec<usize>,
    pub down: Vec<usize>,
    pub bi: Vec<usize>,
    pub trace: Vec<Vec<usize>>,
}

pub fn classes(s: &CayleyTable, element: usize) -> ClassesDocument {
    let two = two_order_oracle(s).expect("input orders stay within scan range");
    let trace = up_class_fixpoint(s, element);
    ClassesDocument {
        table: s.to_dump_string(),
        element,
        up: two.up(element).to_vec(),
        down: two.down(element).to_vec(),
        bi: two.bi(element).to_vec(),
        trace: trace.stages.iter().map(|st| st.to_vec()).collect(),
    }
}

pub fn render_classes(doc: &ClassesDocument) -> String {
    let mut out = String::new();
    line(&mut out, format!("table {} element {}", doc.table, doc.element));
    line(&mut out, format!("up: {}", set(&doc.up)));
    line(&mut out, format!("down: {}", set(&doc.down)));
    line(&mut out, format!("bi: {}", set(&doc.bi)));
    line(
        &mut out,
        format!(
            "trace: {}",
            doc.trace.iter().map(|st| set(st)).collect::<Vec<_>>().join(" -> ")
        ),
    );
    out
}

#[derive(Serialize)]
pub struct ReflectDocument {
    pub table: String,
    pub classes: Vec<Vec<usize>>,
    pub projection: Vec<usize>,
    pub quotient: String,
}

pub fn reflect(s: &CayleyTable) -> ReflectDocument {
    let two = two_order_oracle(s).expect("input orders stay within scan range");
    let reflection = semilattice_reflection(s);
    ReflectDocument {
        table: s.to_dump_string(),
        classes: two.classes().iter().map(|c| c.to_vec()).collect(),
        projection: reflection.projection,
        quotient: reflection.quotient.to_dump_string(),
    }
}

pub fn render_reflect(doc: &ReflectDocument) -> String {
    let mut out = String::new();
    line(&mut out, format!("table {}", doc.table));
    line(
        &mut out,
        format!("classes: {}", doc.classes.iter().map(|c| set(c)).collect::<Vec<_>>().join(" ")),
    );
    line(&mut out, format!("projection: {}", set(&doc.projection)));
    line(&mut out, format!("quotient: {}", doc.quotient));
    out
}

pub fn render_verify(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = match r.status {
            SuiteStatus::Pass => "PASS",
            SuiteStatus::Fail => "FAIL",
            SuiteStatus::Vacuous => "VACUOUS",
        };
        line(
            &mut out,
            format!(
                "{}: {} (orders <={}, {} semigroups, {} matched)",
                r.suite,
                status,
                r.orders_checked.last().copied().unwrap_or(0),
                r.semigroups_checked,
                r.hypothesis_matches
            ),
        );
        for c in &r.coverage {
            line(&mut out, format!("  coverage {}: {}", c.label, c.count));
        }
        for n in &r.notes {
            line(&mut out, format!("  note: {n}"));
        }
        for v in &r.violations {
            line(
                &mut out,
                format!("  violation {} item {} witness {}", v.table, v.item, set(&v.witness)),
            );
        }
    }
    out
}

fn set(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn line(out: &mut String, s: String) {
    out.push_str(&s);
    out.push('\n');
}
