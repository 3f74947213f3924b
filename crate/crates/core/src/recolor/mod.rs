//! Constructive proper colorations of all-positive joins.
//!
//! [`color_positive_join`] starts from maximum-deficiency colorations of the
//! two sides and relabels color classes with [`Replacement`]s until the join
//! is properly colored inside the palette of the predicted size. The branch
//! taken and every replacement applied are recorded in a [`CaseTrace`].
//!
//! Notation used below: side 1 is the side with the larger maximum
//! deficiency after an optional swap, `k1 = ⌊χ₁/2⌋`, `k2 = ⌊χ₂/2⌋`, the
//! unused colors of side 1 are `x[0..M₁]` and those of side 2 are
//! `y[0..M₂]`, both in canonical order.

pub mod replacement;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use replacement::{
    apply_replacement, apply_simultaneous, class_is_edge_free, remap_as_replacements,
    remap_into_palette, Replacement, ReplacementError,
};

use crate::coloring::{
    canonical_key, deficiency, deficiency_labels, is_proper, Color, ColorSet, Coloration,
};
use crate::graph::{all_positive_join, SignedGraph};
use crate::solver::{AvoidableColorWitness, GraphStats};
use crate::theorem::{exception_holds, predicted_chromatic, SideStats};

/// Which branch of the case analysis produced the coloration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    /// `χ₁ ≥ χ₁ + χ₂ − M₁ − M₂`: side 2 fits inside side 1's unused colors.
    Chi1Dominant,
    /// Both exceptional, both χ even, `M₁ + M₂` odd.
    Exception,
    M2Zero11,
    M2Zero12,
    M2Zero21a,
    M2Zero21b,
    M2Zero22,
    M2Zero23,
    M2Pos11,
    M2Pos12,
    M2Pos21a,
    M2Pos21b,
    M2Pos22,
    M2Pos23,
}

impl CaseId {
    pub const ALL: [CaseId; 14] = [
        CaseId::Chi1Dominant,
        CaseId::Exception,
        CaseId::M2Zero11,
        CaseId::M2Zero12,
        CaseId::M2Zero21a,
        CaseId::M2Zero21b,
        CaseId::M2Zero22,
        CaseId::M2Zero23,
        CaseId::M2Pos11,
        CaseId::M2Pos12,
        CaseId::M2Pos21a,
        CaseId::M2Pos21b,
        CaseId::M2Pos22,
        CaseId::M2Pos23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::Chi1Dominant => "L4.1",
            CaseId::Exception => "L4.2",
            CaseId::M2Zero11 => "M2zero-1.1",
            CaseId::M2Zero12 => "M2zero-1.2",
            CaseId::M2Zero21a => "M2zero-2.1a",
            CaseId::M2Zero21b => "M2zero-2.1b",
            CaseId::M2Zero22 => "M2zero-2.2",
            CaseId::M2Zero23 => "M2zero-2.3",
            CaseId::M2Pos11 => "M2pos-1.1",
            CaseId::M2Pos12 => "M2pos-1.2",
            CaseId::M2Pos21a => "M2pos-2.1a",
            CaseId::M2Pos21b => "M2pos-2.1b",
            CaseId::M2Pos22 => "M2pos-2.2",
            CaseId::M2Pos23 => "M2pos-2.3",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown case id {s:?}"))
    }
}

/// Audit record of one constructive coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseTrace {
    pub case: CaseId,
    /// The inputs were exchanged so that side 1 has the larger `M`.
    pub swapped: bool,
    /// Stats of side 1 and side 2, after the swap.
    pub sides: [SideStats; 2],
    pub x_labels: Vec<Color>,
    pub y_labels: Vec<Color>,
    /// The avoidable color of the witness used by a 2.1a/2.1b case, before it
    /// is renamed to `1`.
    pub avoidable_color: Option<Color>,
    pub side1: Vec<Replacement>,
    pub side2: Vec<Replacement>,
    pub palette_size: usize,
}

impl fmt::Display for CaseTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Color]| {
            v.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let reps = |v: &[Replacement]| {
            v.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        };
        let [s1, s2] = self.sides;
        writeln!(f, "case={} swapped={}", self.case, yes_no(self.swapped))?;
        writeln!(
            f,
            "side1 chi={} M={} exceptional={}",
            s1.chi,
            s1.max_def,
            yes_no(s1.exceptional)
        )?;
        writeln!(
            f,
            "side2 chi={} M={} exceptional={}",
            s2.chi,
            s2.max_def,
            yes_no(s2.exceptional)
        )?;
        writeln!(f, "x={} y={}", join(&self.x_labels), join(&self.y_labels))?;
        if let Some(a) = self.avoidable_color {
            writeln!(f, "avoidable={a}")?;
        }
        writeln!(f, "side1 replacements: {}", reps(&self.side1))?;
        writeln!(f, "side2 replacements: {}", reps(&self.side2))?;
        write!(f, "palette={}", self.palette_size)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecolorError {
    #[error("side {side}: {reason}")]
    InconsistentStats { side: usize, reason: String },
    #[error("case {}: neither side has an avoidable-color witness", .trace.case)]
    WitnessMissing { trace: Box<CaseTrace> },
    #[error("case {case}: {reason}")]
    Precondition { case: CaseId, reason: String },
    #[error("case {}: {source}", .trace.case)]
    Step {
        trace: Box<CaseTrace>,
        source: ReplacementError,
    },
    #[error("case {}: {reason}", .trace.case)]
    Postcondition {
        trace: Box<CaseTrace>,
        reason: String,
    },
}

impl RecolorError {
    pub fn trace(&self) -> Option<&CaseTrace> {
        match self {
            RecolorError::WitnessMissing { trace }
            | RecolorError::Step { trace, .. }
            | RecolorError::Postcondition { trace, .. } => Some(trace),
            _ => None,
        }
    }
}

/// One side of a join with its exact stats and, optionally, an avoidable
/// color witness.
#[derive(Debug, Clone, Copy)]
pub struct JoinPart<'a> {
    pub graph: &'a SignedGraph,
    pub stats: &'a GraphStats,
    pub witness: Option<&'a AvoidableColorWitness>,
}

impl<'a> JoinPart<'a> {
    pub fn new(
        graph: &'a SignedGraph,
        stats: &'a GraphStats,
        witness: Option<&'a AvoidableColorWitness>,
    ) -> Self {
        JoinPart {
            graph,
            stats,
            witness,
        }
    }

    fn side_stats(&self) -> SideStats {
        SideStats::new(self.stats.chi, self.stats.max_def, self.stats.exceptional)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinColoring {
    /// Coloration of `all_positive_join(g1, g2)` in the caller's vertex order,
    /// declared against `M_T` for the predicted `T`.
    pub coloration: Coloration,
    pub trace: CaseTrace,
}

/// Properly colors `all_positive_join(p1.graph, p2.graph)` with a palette of
/// exactly the predicted chromatic number.
pub fn color_positive_join(
    p1: JoinPart<'_>,
    p2: JoinPart<'_>,
) -> Result<JoinColoring, RecolorError> {
    check_part(1, &p1)?;
    check_part(2, &p2)?;
    let swapped = p1.stats.max_def < p2.stats.max_def;
    let (a, b) = if swapped { (p2, p1) } else { (p1, p2) };
    let prediction = predicted_chromatic(a.side_stats(), b.side_stats()).map_err(|e| {
        RecolorError::InconsistentStats {
            side: 0,
            reason: e.to_string(),
        }
    })?;

    let mut trace = CaseTrace {
        case: CaseId::Chi1Dominant,
        swapped,
        sides: [a.side_stats(), b.side_stats()],
        x_labels: Vec::new(),
        y_labels: Vec::new(),
        avoidable_color: None,
        side1: Vec::new(),
        side2: Vec::new(),
        palette_size: prediction.value,
    };
    let plan = plan(&a, &b, &mut trace)?;
    trace.case = plan.case;
    trace.x_labels = deficiency_labels(&plan.kappa1, ColorSet::new(a.stats.chi).unwrap());
    trace.y_labels = deficiency_labels(&plan.kappa2, ColorSet::new(b.stats.chi).unwrap());
    trace.side1 = plan.side1;
    trace.side2 = plan.side2;

    let step = |kappa: &Coloration, reps: &[Replacement], trace: &CaseTrace| {
        apply_simultaneous(kappa, reps).map_err(|source| RecolorError::Step {
            trace: Box::new(trace.clone()),
            source,
        })
    };
    let c1 = step(&plan.kappa1, &trace.side1, &trace)?;
    let c2 = step(&plan.kappa2, &trace.side2, &trace)?;

    let fail = |reason: String, trace: &CaseTrace| RecolorError::Postcondition {
        trace: Box::new(trace.clone()),
        reason,
    };
    let shared: BTreeSet<Color> = c1.image().intersection(&c2.image()).copied().collect();
    if !shared.is_empty() {
        return Err(fail(
            format!("colors {shared:?} used on both sides"),
            &trace,
        ));
    }
    let colors: Vec<Color> = if swapped {
        c2.colors().iter().chain(c1.colors()).copied().collect()
    } else {
        c1.colors().iter().chain(c2.colors()).copied().collect()
    };
    let palette = ColorSet::new(prediction.value).expect("prediction is positive");
    let coloration =
        Coloration::with_declared(colors, palette).map_err(|e| fail(e.to_string(), &trace))?;
    let join = all_positive_join(p1.graph, p2.graph);
    if !is_proper(&join, &coloration) {
        return Err(fail(
            format!("coloration {coloration} is not proper"),
            &trace,
        ));
    }
    Ok(JoinColoring { coloration, trace })
}

fn check_part(side: usize, part: &JoinPart<'_>) -> Result<(), RecolorError> {
    let bad = |reason: String| RecolorError::InconsistentStats { side, reason };
    let s = part.stats;
    let palette = ColorSet::new(s.chi).map_err(|e| bad(e.to_string()))?;
    if s.max_def > s.chi / 2 {
        return Err(bad(format!(
            "M = {} exceeds chi/2 for chi = {}",
            s.max_def, s.chi
        )));
    }
    if s.exceptional && s.chi % 2 == 1 {
        return Err(bad("odd chromatic number marked exceptional".into()));
    }
    check_max_def_coloration(part.graph, &s.min_coloration, s, palette).map_err(bad)?;
    let (_, missing) = deficiency(&s.min_coloration, palette).map_err(|e| bad(e.to_string()))?;
    if missing != s.deficiency_set {
        return Err(bad("deficiency set does not match the coloration".into()));
    }
    if let Some(w) = part.witness {
        check_max_def_coloration(part.graph, &w.coloration, s, palette)
            .map_err(|r| bad(format!("witness: {r}")))?;
        if !w.coloration.colors().contains(&w.color_a)
            || !class_is_edge_free(part.graph, &w.coloration, w.color_a)
        {
            return Err(bad(format!("witness color {} is not avoidable", w.color_a)));
        }
    }
    Ok(())
}

fn check_max_def_coloration(
    g: &SignedGraph,
    kappa: &Coloration,
    s: &GraphStats,
    palette: ColorSet,
) -> Result<(), String> {
    if kappa.len() != g.order() {
        return Err(format!(
            "coloration has {} entries for {} vertices",
            kappa.len(),
            g.order()
        ));
    }
    if let Some(c) = kappa.colors().iter().find(|&&c| !palette.contains(c)) {
        return Err(format!("color {c} outside {palette}"));
    }
    if !is_proper(g, kappa) {
        return Err("coloration is not proper".into());
    }
    if kappa.used_count() != s.used_colors() {
        return Err(format!(
            "coloration uses {} colors, expected {}",
            kappa.used_count(),
            s.used_colors()
        ));
    }
    Ok(())
}

struct Plan {
    case: CaseId,
    kappa1: Coloration,
    kappa2: Coloration,
    side1: Vec<Replacement>,
    side2: Vec<Replacement>,
}

/// Positive `i` with both `i` and `-i` used, ascending.
fn complete_pairs(kappa: &Coloration) -> Vec<Color> {
    let image = kappa.image();
    image
        .iter()
        .copied()
        .filter(|&c| c > 0 && image.contains(&-c))
        .collect()
}

/// Renames the witness coloration so its avoidable color becomes `1`, by
/// flipping the `±a` pair if `a < 0` and exchanging absolute values `|a|`, 1.
fn normalize_avoidable(w: &AvoidableColorWitness) -> Coloration {
    let a = w.color_a;
    let alpha = a.abs();
    w.coloration.map_colors(|c| {
        let c = if a < 0 && c.abs() == alpha { -c } else { c };
        if c.abs() == alpha {
            c.signum()
        } else if c.abs() == 1 {
            c.signum() * alpha
        } else {
            c
        }
    })
}

fn t1(from: Color, to: Color) -> Replacement {
    Replacement::Type1 { from, to }
}

fn t3(from: Color, to: Color) -> Replacement {
    Replacement::Type3 { from, to }
}

fn t4(from: Color, to_pos: Color, to_neg: Color) -> Replacement {
    Replacement::Type4 {
        from,
        to_pos,
        to_neg,
    }
}

/// Checked indexing for the label lists and pair lists of a case.
struct Labels<'a> {
    case: CaseId,
    x: &'a [Color],
    y: &'a [Color],
    pairs: &'a [Color],
}

impl Labels<'_> {
    fn err(&self, what: &str, i: usize, len: usize) -> RecolorError {
        RecolorError::Precondition {
            case: self.case,
            reason: format!("needs {what}[{i}] but only {len} available"),
        }
    }

    fn x(&self, i: usize) -> Result<Color, RecolorError> {
        self.x
            .get(i)
            .copied()
            .ok_or_else(|| self.err("x", i, self.x.len()))
    }

    fn y(&self, i: usize) -> Result<Color, RecolorError> {
        self.y
            .get(i)
            .copied()
            .ok_or_else(|| self.err("y", i, self.y.len()))
    }

    fn pair(&self, i: usize) -> Result<Color, RecolorError> {
        self.pairs
            .get(i)
            .copied()
            .ok_or_else(|| self.err("pair", i, self.pairs.len()))
    }

    /// Type 1 moves `-y[j] -> x[j]` for every `j < M₂`.
    fn singles(&self, out: &mut Vec<Replacement>) -> Result<(), RecolorError> {
        for j in 0..self.y.len() {
            out.push(t1(-self.y(j)?, self.x(j)?));
        }
        Ok(())
    }

    /// Type 4 moves for `count` pairs starting at `pairs[first_pair]`, taking
    /// targets two at a time from `targets`.
    fn type4_run(
        &self,
        out: &mut Vec<Replacement>,
        first_pair: usize,
        targets: &[Color],
    ) -> Result<(), RecolorError> {
        for (i, chunk) in targets.chunks(2).enumerate() {
            if chunk.len() != 2 {
                return Err(RecolorError::Precondition {
                    case: self.case,
                    reason: "odd number of type 4 targets".into(),
                });
            }
            out.push(t4(self.pair(first_pair + i)?, chunk[0], chunk[1]));
        }
        Ok(())
    }

    /// Type 3 moves sending `pairs[first_pair..]` to `±base, ±(base+1), …`.
    fn type3_rest(&self, out: &mut Vec<Replacement>, first_pair: usize, base: Color) {
        for (i, &p) in self.pairs.iter().enumerate().skip(first_pair) {
            out.push(t3(p, base + (i - first_pair) as Color));
        }
    }
}

fn plan(a: &JoinPart<'_>, b: &JoinPart<'_>, trace: &mut CaseTrace) -> Result<Plan, RecolorError> {
    let (chi1, m1) = (a.stats.chi, a.stats.max_def);
    let (chi2, m2) = (b.stats.chi, b.stats.max_def);
    let k1 = (chi1 / 2) as Color;
    let k2 = (chi2 / 2) as Color;
    let bound = chi1 as i64 + chi2 as i64 - m1 as i64 - m2 as i64;
    let m1c = m1 as Color;

    if chi1 as i64 >= bound {
        let kappa1 = a.stats.min_coloration.clone();
        let kappa2 = b.stats.min_coloration.clone();
        let mut targets: Vec<Color> = a.stats.deficiency_set.iter().copied().collect();
        targets.sort_by_key(|&c| canonical_key(c));
        let remapped =
            remap_into_palette(&kappa2, &targets).map_err(|e| RecolorError::Precondition {
                case: CaseId::Chi1Dominant,
                reason: e.to_string(),
            })?;
        let side2 = remap_as_replacements(&kappa2, &remapped);
        return Ok(Plan {
            case: CaseId::Chi1Dominant,
            kappa1,
            kappa2,
            side1: Vec::new(),
            side2,
        });
    }

    if exception_holds(a.side_stats(), b.side_stats()) {
        let kappa1 = a.stats.min_coloration.clone();
        let kappa2 = b.stats.min_coloration.clone();
        let x = deficiency_labels(&kappa1, a.stats.color_set());
        let y = deficiency_labels(&kappa2, b.stats.color_set());
        let pairs = complete_pairs(&kappa2);
        let l = Labels {
            case: CaseId::Exception,
            x: &x,
            y: &y,
            pairs: &pairs,
        };
        let d = m1 - m2;
        let mut side2 = Vec::new();
        // With M₂ = 0 this step is empty.
        l.singles(&mut side2)?;
        let type4_pairs = (d - 1) / 2;
        l.type4_run(&mut side2, 0, &x[m2..m1 - 1])?;
        l.type3_rest(&mut side2, type4_pairs, k1 + 1);
        return Ok(Plan {
            case: CaseId::Exception,
            kappa1,
            kappa2,
            side1: Vec::new(),
            side2,
        });
    }

    let both_even = chi1 % 2 == 0 && chi2 % 2 == 0;
    let both_odd = chi1 % 2 == 1 && chi2 % 2 == 1;

    // Pick the side supplying an avoidable color for the even/even odd-parity
    // branch: side 1 first.
    let choose_21 = |case_a: CaseId, case_b: CaseId, trace: &mut CaseTrace| {
        if let Some(w) = a.witness {
            Ok((case_a, w))
        } else if let Some(w) = b.witness {
            Ok((case_b, w))
        } else {
            trace.case = case_a;
            Err(RecolorError::WitnessMissing {
                trace: Box::new(trace.clone()),
            })
        }
    };

    if m2 == 0 {
        let (case, kappa1, kappa2) = if m1 % 2 == 0 {
            let case = if both_odd {
                CaseId::M2Zero12
            } else {
                CaseId::M2Zero11
            };
            (
                case,
                a.stats.min_coloration.clone(),
                b.stats.min_coloration.clone(),
            )
        } else if both_even {
            let (case, w) = choose_21(CaseId::M2Zero21a, CaseId::M2Zero21b, trace)?;
            trace.avoidable_color = Some(w.color_a);
            if case == CaseId::M2Zero21a {
                (case, normalize_avoidable(w), b.stats.min_coloration.clone())
            } else {
                (case, a.stats.min_coloration.clone(), normalize_avoidable(w))
            }
        } else {
            let case = if chi2 % 2 == 1 {
                CaseId::M2Zero23
            } else {
                CaseId::M2Zero22
            };
            (
                case,
                a.stats.min_coloration.clone(),
                b.stats.min_coloration.clone(),
            )
        };
        let x = deficiency_labels(&kappa1, a.stats.color_set());
        let l = Labels {
            case,
            x: &x,
            y: &[],
            pairs: &[],
        };
        let mut side1 = Vec::new();
        let mut side2 = Vec::new();
        match case {
            CaseId::M2Zero11 | CaseId::M2Zero12 => {
                let half = m1c / 2;
                for j in 1..=half {
                    side2.push(t1(j, l.x(2 * j as usize - 2)?));
                    side2.push(t1(-j, l.x(2 * j as usize - 1)?));
                }
                for j in half + 1..=k2 {
                    side2.push(t3(j, k1 + j - half));
                }
                if case == CaseId::M2Zero12 {
                    let top = k1 + k2 - half + 1;
                    side1.push(t1(0, top));
                    side2.push(t1(0, -top));
                }
            }
            CaseId::M2Zero21a => {
                let h = (m1c + 1) / 2;
                side1.push(Replacement::Type2 { from: 1 });
                side2.push(t1(-1, l.x(0)?));
                for j in 2..=h {
                    side2.push(t1(j, l.x(2 * j as usize - 3)?));
                    side2.push(t1(-j, l.x(2 * j as usize - 2)?));
                }
                for j in h + 1..=k2 {
                    side2.push(t3(j, k1 + j - h));
                }
            }
            CaseId::M2Zero21b => {
                let h = (m1c + 1) / 2;
                side2.push(Replacement::Type2 { from: 1 });
                side2.push(t1(-1, l.x(m1 - 1)?));
                for j in 2..=h {
                    side2.push(t1(j, l.x(2 * j as usize - 4)?));
                    side2.push(t1(-j, l.x(2 * j as usize - 3)?));
                }
                for j in h + 1..=k2 {
                    side2.push(t3(j, k1 + j - h));
                }
            }
            CaseId::M2Zero22 => {
                let h = (m1c + 1) / 2;
                side1.push(t1(0, -(k1 + 1)));
                for j in 1..h {
                    side2.push(t1(j, l.x(2 * j as usize - 2)?));
                    side2.push(t1(-j, l.x(2 * j as usize - 1)?));
                }
                side2.push(t4(h, l.x(m1 - 1)?, k1 + 1));
                for j in h + 1..=k2 {
                    side2.push(t3(j, k1 + 1 + j - h));
                }
            }
            CaseId::M2Zero23 => {
                let h = (m1c + 1) / 2;
                for j in 1..h {
                    side2.push(t1(j, l.x(2 * j as usize - 2)?));
                    side2.push(t1(-j, l.x(2 * j as usize - 1)?));
                }
                side2.push(t1(0, l.x(m1 - 1)?));
                for j in h..=k2 {
                    side2.push(t3(j, k1 + 1 + j - h));
                }
            }
            _ => unreachable!("M2 = 0 branch"),
        }
        return Ok(Plan {
            case,
            kappa1,
            kappa2,
            side1,
            side2,
        });
    }

    // M₂ > 0.
    let d = m1 - m2;
    let (case, kappa1, kappa2) = if d % 2 == 0 {
        let case = if both_odd {
            CaseId::M2Pos11
        } else {
            CaseId::M2Pos12
        };
        (
            case,
            a.stats.min_coloration.clone(),
            b.stats.min_coloration.clone(),
        )
    } else if both_even {
        let (case, w) = choose_21(CaseId::M2Pos21a, CaseId::M2Pos21b, trace)?;
        trace.avoidable_color = Some(w.color_a);
        if case == CaseId::M2Pos21a {
            (case, normalize_avoidable(w), b.stats.min_coloration.clone())
        } else {
            (case, a.stats.min_coloration.clone(), normalize_avoidable(w))
        }
    } else {
        let case = if chi2 % 2 == 1 {
            CaseId::M2Pos23
        } else {
            CaseId::M2Pos22
        };
        (
            case,
            a.stats.min_coloration.clone(),
            b.stats.min_coloration.clone(),
        )
    };
    let x = deficiency_labels(&kappa1, a.stats.color_set());
    let y = deficiency_labels(&kappa2, b.stats.color_set());
    let mut pairs = complete_pairs(&kappa2);
    if case == CaseId::M2Pos21b {
        // The (1, -1) pair is consumed by the Type 2 / Type 1 moves.
        if !pairs.contains(&1) {
            return Err(RecolorError::Precondition {
                case,
                reason: "the negative of the avoidable color is unused".into(),
            });
        }
        pairs.retain(|&p| p != 1);
    }
    let l = Labels {
        case,
        x: &x,
        y: &y,
        pairs: &pairs,
    };
    let mut side1 = Vec::new();
    let mut side2 = Vec::new();
    match case {
        CaseId::M2Pos11 => {
            side1.push(t1(0, k1 + 1));
            side2.push(t1(0, -(k1 + 1)));
            l.singles(&mut side2)?;
            l.type4_run(&mut side2, 0, &x[m2..m1])?;
            l.type3_rest(&mut side2, d / 2, k1 + 2);
        }
        CaseId::M2Pos12 => {
            l.singles(&mut side2)?;
            l.type4_run(&mut side2, 0, &x[m2..m1])?;
            l.type3_rest(&mut side2, d / 2, k1 + 1);
        }
        CaseId::M2Pos21a => {
            side1.push(Replacement::Type2 { from: 1 });
            l.singles(&mut side2)?;
            let mut targets = x[m2..m1].to_vec();
            targets.push(1);
            l.type4_run(&mut side2, 0, &targets)?;
            l.type3_rest(&mut side2, (d + 1) / 2, k1 + 1);
        }
        CaseId::M2Pos21b => {
            side2.push(Replacement::Type2 { from: 1 });
            l.singles(&mut side2)?;
            side2.push(t1(-1, l.x(m1 - 1)?));
            l.type4_run(&mut side2, 0, &x[m2..m1 - 1])?;
            l.type3_rest(&mut side2, (d - 1) / 2, k1 + 1);
        }
        CaseId::M2Pos22 => {
            l.singles(&mut side2)?;
            let run = (d - 1) / 2;
            l.type4_run(&mut side2, 0, &x[m2..m1 - 1])?;
            side2.push(t4(l.pair(run)?, l.x(m1 - 1)?, k1 + 1));
            side1.push(t1(0, -(k1 + 1)));
            l.type3_rest(&mut side2, run + 1, k1 + 2);
        }
        CaseId::M2Pos23 => {
            side2.push(t1(0, l.x(m1 - 1)?));
            l.singles(&mut side2)?;
            l.type4_run(&mut side2, 0, &x[m2..m1 - 1])?;
            l.type3_rest(&mut side2, (d - 1) / 2, k1 + 1);
        }
        _ => unreachable!("M2 > 0 branch"),
    }
    debug_assert!(l.y.len() == m2 && y.len() == m2);
    Ok(Plan {
        case,
        kappa1,
        kappa2,
        side1,
        side2,
    })
}
