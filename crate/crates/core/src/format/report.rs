//! Line-oriented verification reports.
//!
//! ```text
//! report exhaustive 2 2
//! pair 0 g1=2:. g2=2:. side1=1,0,na side2=1,0,na lower=2 predicted=2 exception=no brute=2 negative=2 constructive=2 case=L4.1 agree=yes
//! finding witness-missing pair=5 case M2zero-2.1a: ...
//! summary pairs=9 agree=9 theorem-mismatch=0 ...
//! ```
//!
//! Every field is always present and in a fixed order, so two runs on the
//! same input produce identical bytes.

use std::fmt::Write;

use crate::theorem::verify::{FindingKind, VerificationReport};
use crate::theorem::SideStats;

const KINDS: [FindingKind; 6] = [
    FindingKind::TheoremMismatch,
    FindingKind::LowerBoundViolation,
    FindingKind::NegativeJoinMismatch,
    FindingKind::ConstructiveFailure,
    FindingKind::WitnessMissing,
    FindingKind::ReadingDivergence,
];

fn side(s: &SideStats) -> String {
    let exc = if s.chi % 2 == 1 {
        "na"
    } else if s.exceptional {
        "yes"
    } else {
        "no"
    };
    format!("{},{},{exc}", s.chi, s.max_def)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn write_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "report {}", report.mode).unwrap();
    for r in &report.records {
        let constructive = r
            .constructive_size()
            .map_or_else(|| "none".to_string(), |n| n.to_string());
        let case = r
            .case()
            .map_or_else(|| "none".to_string(), |c| c.to_string());
        writeln!(
            out,
            "pair {} g1={} g2={} side1={} side2={} lower={} predicted={} exception={} brute={} negative={} constructive={constructive} case={case} agree={}",
            r.index,
            r.g1,
            r.g2,
            side(&r.side1),
            side(&r.side2),
            r.lower_bound,
            r.predicted,
            yes_no(r.exception_applied),
            r.brute_force,
            r.negative_join,
            yes_no(r.agree),
        )
        .unwrap();
    }
    for f in &report.findings {
        let subject = match (&f.pair, &f.graph) {
            (Some(p), _) => format!("pair={p}"),
            (None, Some(g)) => format!("graph={g}"),
            (None, None) => "global".to_string(),
        };
        let detail = f.detail.replace('\n', " | ");
        writeln!(out, "finding {} {subject} {detail}", f.kind).unwrap();
    }
    let s = report.summary();
    write!(out, "summary pairs={} agree={}", s.pairs, s.agree).unwrap();
    for k in KINDS {
        write!(out, " {}={}", k, s.count(k)).unwrap();
    }
    out.push('\n');
    out
}
