//! Brute-force verification of the join formula.
//!
//! For each pair of graphs the harness computes exact side stats, the
//! predicted join chromatic number, the exact chromatic numbers of both the
//! all-positive and the all-negative join, and runs the constructive colorer.
//! Every disagreement is recorded as a [`Finding`] rather than raised.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::enumerate::{enumerate_signed_graphs, random_signed_graph_with, EnumerationTooLarge};
use super::{lower_bound, predicted_chromatic, SideStats};
use crate::coloring::Coloration;
use crate::graph::{all_negative_join, all_positive_join, SignedGraph};
use crate::recolor::{color_positive_join, CaseId, JoinPart, RecolorError};
use crate::solver::{
    chromatic_number, exceptional_counterexample, find_avoidable_color_witness, graph_stats,
    AvoidableColorWitness, GraphStats, Reading,
};

/// Largest join order the harness will solve exactly.
pub const MAX_JOIN_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("join of orders {0} and {1} exceeds the exact-solving limit of {MAX_JOIN_ORDER}")]
    TooLarge(usize, usize),
    #[error(transparent)]
    Enumeration(#[from] EnumerationTooLarge),
    #[error("invalid random size range {0}..={1}")]
    BadSizeRange(usize, usize),
}

/// Exact stats of one graph plus everything the harness derives from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartStats {
    pub signature: String,
    pub stats: GraphStats,
    pub witness: Option<AvoidableColorWitness>,
    /// Exceptionality when only colorations inside `M_χ` are considered.
    pub narrow_exceptional: bool,
    /// Set when the two readings disagree: a coloration outside `M_χ` that
    /// refutes exceptionality.
    pub divergence: Option<Coloration>,
}

impl PartStats {
    pub fn compute(g: &SignedGraph) -> Self {
        let stats = graph_stats(g);
        let witness = find_avoidable_color_witness(g, &stats);
        let even = stats.exceptionality_defined();
        let narrow_exceptional = even && witness.is_none();
        let divergence = if even && narrow_exceptional != stats.exceptional {
            exceptional_counterexample(g, stats.chi, stats.max_def, Reading::Normalized)
                .expect("even chi")
        } else {
            None
        };
        PartStats {
            signature: g.signature(),
            stats,
            witness,
            narrow_exceptional,
            divergence,
        }
    }

    pub fn side(&self) -> SideStats {
        SideStats::new(self.stats.chi, self.stats.max_def, self.stats.exceptional)
    }
}

/// Side stats memoized by graph signature. Filled up front, read-only after.
#[derive(Debug, Default, Clone)]
pub struct StatsCache {
    map: BTreeMap<String, PartStats>,
}

impl StatsCache {
    pub fn new() -> Self {
        StatsCache::default()
    }

    /// Computes stats for every graph not yet cached, in parallel.
    pub fn populate<'a, I>(&mut self, graphs: I)
    where
        I: IntoIterator<Item = &'a SignedGraph>,
    {
        let mut todo: BTreeMap<String, &SignedGraph> = BTreeMap::new();
        for g in graphs {
            let sig = g.signature();
            if !self.map.contains_key(&sig) {
                todo.insert(sig, g);
            }
        }
        let computed: Vec<PartStats> = todo
            .into_par_iter()
            .map(|(_, g)| PartStats::compute(g))
            .collect();
        for p in computed {
            self.map.insert(p.signature.clone(), p);
        }
    }

    pub fn get(&self, g: &SignedGraph) -> Option<&PartStats> {
        self.map.get(&g.signature())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &PartStats> {
        self.map.values()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FindingKind {
    /// Exact chromatic number of the all-positive join differs from the formula.
    TheoremMismatch,
    /// Exact chromatic number below `χ₁ + χ₂ − M₁ − M₂`.
    LowerBoundViolation,
    /// All-negative join has a different chromatic number than the all-positive one.
    NegativeJoinMismatch,
    /// The colorer failed its own postcondition or a precondition.
    ConstructiveFailure,
    /// A 2.1 case needed an avoidable-color witness inside `M_χ` and none existed.
    WitnessMissing,
    /// Narrow and normalized exceptionality disagree on a graph.
    ReadingDivergence,
}

impl FindingKind {
    pub fn name(self) -> &'static str {
        match self {
            FindingKind::TheoremMismatch => "theorem-mismatch",
            FindingKind::LowerBoundViolation => "lower-bound-violation",
            FindingKind::NegativeJoinMismatch => "negative-join-mismatch",
            FindingKind::ConstructiveFailure => "constructive-failure",
            FindingKind::WitnessMissing => "witness-missing",
            FindingKind::ReadingDivergence => "reading-divergence",
        }
    }

    /// Findings that contradict the formula itself.
    pub fn is_theorem_mismatch(self) -> bool {
        matches!(
            self,
            FindingKind::TheoremMismatch
                | FindingKind::LowerBoundViolation
                | FindingKind::NegativeJoinMismatch
        )
    }
}

impl fmt::Display for FindingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub kind: FindingKind,
    pub pair: Option<usize>,
    pub graph: Option<String>,
    pub detail: String,
}

/// Outcome of the constructive colorer on one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constructive {
    Colored {
        palette: usize,
        case: CaseId,
        coloration: Coloration,
    },
    /// Not run to completion; a finding records why.
    Failed { case: Option<CaseId> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub index: usize,
    pub g1: String,
    pub g2: String,
    pub side1: SideStats,
    pub side2: SideStats,
    pub lower_bound: i64,
    pub predicted: usize,
    pub exception_applied: bool,
    pub brute_force: usize,
    pub negative_join: usize,
    pub constructive: Constructive,
    pub agree: bool,
}

impl PairRecord {
    pub fn constructive_size(&self) -> Option<usize> {
        match self.constructive {
            Constructive::Colored { palette, .. } => Some(palette),
            Constructive::Failed { .. } => None,
        }
    }

    pub fn case(&self) -> Option<CaseId> {
        match self.constructive {
            Constructive::Colored { case, .. } => Some(case),
            Constructive::Failed { case } => case,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub pairs: usize,
    pub agree: usize,
    pub counts: BTreeMap<FindingKind, usize>,
}

impl Summary {
    pub fn count(&self, kind: FindingKind) -> usize {
        self.counts.get(&kind).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// One-line description of how the pairs were produced.
    pub mode: String,
    pub records: Vec<PairRecord>,
    pub findings: Vec<Finding>,
}

impl VerificationReport {
    pub fn summary(&self) -> Summary {
        let mut counts = BTreeMap::new();
        for f in &self.findings {
            *counts.entry(f.kind).or_insert(0) += 1;
        }
        Summary {
            pairs: self.records.len(),
            agree: self.records.iter().filter(|r| r.agree).count(),
            counts,
        }
    }

    pub fn has_theorem_mismatch(&self) -> bool {
        self.findings.iter().any(|f| f.kind.is_theorem_mismatch())
    }

    pub fn findings_of(&self, kind: FindingKind) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(move |f| f.kind == kind)
    }
}

/// Verifies a single pair, computing side stats from scratch.
pub fn verify_pair(
    g1: &SignedGraph,
    g2: &SignedGraph,
) -> Result<(PairRecord, Vec<Finding>), VerifyError> {
    let mut cache = StatsCache::new();
    cache.populate([g1, g2]);
    verify_pair_cached(&cache, 0, g1, g2)
}

/// Verifies a pair whose side stats are already in `cache`.
pub fn verify_pair_cached(
    cache: &StatsCache,
    index: usize,
    g1: &SignedGraph,
    g2: &SignedGraph,
) -> Result<(PairRecord, Vec<Finding>), VerifyError> {
    if g1.order() + g2.order() > MAX_JOIN_ORDER {
        return Err(VerifyError::TooLarge(g1.order(), g2.order()));
    }
    let p1 = cache.get(g1).expect("side 1 stats are cached");
    let p2 = cache.get(g2).expect("side 2 stats are cached");
    let prediction = predicted_chromatic(p1.side(), p2.side()).expect("exact stats are consistent");
    let brute_force = chromatic_number(&all_positive_join(g1, g2));
    let negative_join = chromatic_number(&all_negative_join(g1, g2));
    let (s1, s2) = (&p1.stats, &p2.stats);
    let mut findings = Vec::new();
    let mut note = |kind, detail: String| {
        findings.push(Finding {
            kind,
            pair: Some(index),
            graph: None,
            detail,
        })
    };

    let bound = if s1.max_def >= s2.max_def {
        lower_bound(s1.chi, s1.max_def, s2.chi, s2.max_def)
    } else {
        lower_bound(s2.chi, s2.max_def, s1.chi, s1.max_def)
    };
    if (brute_force as i64) < bound {
        note(
            FindingKind::LowerBoundViolation,
            format!("brute force {brute_force} below lower bound {bound}"),
        );
    }
    if brute_force != prediction.value {
        note(
            FindingKind::TheoremMismatch,
            format!(
                "predicted {} but brute force {brute_force}",
                prediction.value
            ),
        );
    }
    if negative_join != brute_force {
        note(
            FindingKind::NegativeJoinMismatch,
            format!("negative join {negative_join}, positive join {brute_force}"),
        );
    }

    let result = color_positive_join(
        JoinPart::new(g1, s1, p1.witness.as_ref()),
        JoinPart::new(g2, s2, p2.witness.as_ref()),
    );
    let constructive = match result {
        Ok(out) => Constructive::Colored {
            palette: out.trace.palette_size,
            case: out.trace.case,
            coloration: out.coloration,
        },
        Err(err) => {
            let case = err.trace().map(|t| t.case).or(match &err {
                RecolorError::Precondition { case, .. } => Some(*case),
                _ => None,
            });
            let kind = match err {
                RecolorError::WitnessMissing { .. } => FindingKind::WitnessMissing,
                _ => FindingKind::ConstructiveFailure,
            };
            note(kind, err.to_string());
            Constructive::Failed { case }
        }
    };
    let agree = brute_force == prediction.value
        && match constructive {
            Constructive::Colored { palette, .. } => palette == prediction.value,
            Constructive::Failed { .. } => true,
        };
    let record = PairRecord {
        index,
        g1: p1.signature.clone(),
        g2: p2.signature.clone(),
        side1: p1.side(),
        side2: p2.side(),
        lower_bound: bound,
        predicted: prediction.value,
        exception_applied: prediction.exception_applied,
        brute_force,
        negative_join,
        constructive,
        agree,
    };
    Ok((record, findings))
}

/// Verifies `pairs` in parallel and merges the results in pair order. Graph
/// level findings (reading divergences) are listed after the pair findings,
/// once per distinct graph, in signature order.
pub fn verify_pairs(
    mode: String,
    pairs: &[(SignedGraph, SignedGraph)],
) -> Result<VerificationReport, VerifyError> {
    if let Some((a, b)) = pairs
        .iter()
        .find(|(a, b)| a.order() + b.order() > MAX_JOIN_ORDER)
    {
        return Err(VerifyError::TooLarge(a.order(), b.order()));
    }
    let mut cache = StatsCache::new();
    cache.populate(pairs.iter().flat_map(|(a, b)| [a, b]));
    let results: Vec<(PairRecord, Vec<Finding>)> = pairs
        .par_iter()
        .enumerate()
        .map(|(i, (a, b))| verify_pair_cached(&cache, i, a, b))
        .collect::<Result<_, _>>()?;
    let mut records = Vec::with_capacity(results.len());
    let mut findings = Vec::new();
    for (r, f) in results {
        records.push(r);
        findings.extend(f);
    }
    let used: BTreeSet<&str> = records
        .iter()
        .flat_map(|r| [r.g1.as_str(), r.g2.as_str()])
        .collect();
    for p in cache.iter().filter(|p| used.contains(p.signature.as_str())) {
        if let Some(c) = &p.divergence {
            findings.push(Finding {
                kind: FindingKind::ReadingDivergence,
                pair: None,
                graph: Some(p.signature.clone()),
                detail: format!(
                    "narrow={} normalized={} witness={c}",
                    p.narrow_exceptional, p.stats.exceptional
                ),
            });
        }
    }
    Ok(VerificationReport {
        mode,
        records,
        findings,
    })
}

/// All ordered pairs of signed graphs on exactly `n1` and `n2` vertices.
pub fn exhaustive_sweep(n1: usize, n2: usize) -> Result<VerificationReport, VerifyError> {
    if n1 + n2 > MAX_JOIN_ORDER {
        return Err(VerifyError::TooLarge(n1, n2));
    }
    let left: Vec<SignedGraph> = enumerate_signed_graphs(n1)?.collect();
    let right: Vec<SignedGraph> = enumerate_signed_graphs(n2)?.collect();
    let pairs: Vec<(SignedGraph, SignedGraph)> = left
        .iter()
        .flat_map(|a| right.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    verify_pairs(format!("exhaustive {n1} {n2}"), &pairs)
}

/// All ordered pairs of signed graphs with `1..=max_order` vertices each.
pub fn exhaustive_sweep_up_to(max_order: usize) -> Result<VerificationReport, VerifyError> {
    let graphs = super::enumerate::enumerate_up_to(max_order)?;
    let pairs: Vec<(SignedGraph, SignedGraph)> = graphs
        .iter()
        .flat_map(|a| graphs.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    verify_pairs(format!("exhaustive-up-to {max_order}"), &pairs)
}

/// How random pair sizes are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSizes {
    Fixed(usize, usize),
    /// Each side at least one vertex, total order uniform in the range.
    TotalBetween(usize, usize),
}

const EDGE_PROBABILITIES: [f64; 4] = [0.3, 0.5, 0.7, 0.9];
const NEGATIVE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// `count` seeded random pairs. Edge and negative-sign densities are drawn
/// per graph from small fixed menus.
pub fn random_pairs(
    count: usize,
    sizes: PairSizes,
    seed: u64,
) -> Result<Vec<(SignedGraph, SignedGraph)>, VerifyError> {
    let (lo, hi) = match sizes {
        PairSizes::Fixed(a, b) => (a + b, a + b),
        PairSizes::TotalBetween(lo, hi) => (lo, hi),
    };
    if lo < 2 || lo > hi {
        return Err(VerifyError::BadSizeRange(lo, hi));
    }
    if hi > MAX_JOIN_ORDER {
        return Err(VerifyError::TooLarge(hi, 0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (n1, n2) = match sizes {
            PairSizes::Fixed(a, b) => (a, b),
            PairSizes::TotalBetween(lo, hi) => {
                let total = rng.gen_range(lo..=hi);
                let n1 = rng.gen_range(1..total);
                (n1, total - n1)
            }
        };
        let mut side = |n: usize| {
            let pe = EDGE_PROBABILITIES[rng.gen_range(0..EDGE_PROBABILITIES.len())];
            let pn = NEGATIVE_PROBABILITIES[rng.gen_range(0..NEGATIVE_PROBABILITIES.len())];
            random_signed_graph_with(&mut rng, n, pe, pn)
        };
        let g1 = side(n1);
        let g2 = side(n2);
        out.push((g1, g2));
    }
    Ok(out)
}

pub fn random_sweep(
    count: usize,
    sizes: PairSizes,
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    let pairs = random_pairs(count, sizes, seed)?;
    let mode = match sizes {
        PairSizes::Fixed(a, b) => format!("random count={count} size={a},{b} seed={seed}"),
        PairSizes::TotalBetween(lo, hi) => {
            format!("random count={count} total={lo}..{hi} seed={seed}")
        }
    };
    verify_pairs(mode, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::*;

    #[test]
    fn spec_pairs() {
        let neg_k2 = SignedGraph::complete(2, Negative);
        let (r, f) = verify_pair(&neg_k2, &neg_k2).unwrap();
        assert_eq!((r.predicted, r.brute_force, r.agree), (2, 2, true));
        assert!(f.is_empty(), "{f:?}");

        let k4pm = SignedGraph::complete_with_negative_matching(4);
        let (r, f) = verify_pair(&neg_k2, &k4pm).unwrap();
        assert_eq!((r.predicted, r.brute_force, r.agree), (4, 4, true));
        assert!(r.exception_applied);
        assert_eq!(r.case(), Some(CaseId::Exception));
        assert!(f.is_empty(), "{f:?}");

        let k1 = SignedGraph::empty(1);
        let (r, _) = verify_pair(&k1, &k1).unwrap();
        assert_eq!(
            (r.predicted, r.brute_force, r.constructive_size()),
            (2, 2, Some(2))
        );
    }

    #[test]
    fn size_guard() {
        let big = SignedGraph::empty(6);
        assert_eq!(
            verify_pair(&big, &big).unwrap_err(),
            VerifyError::TooLarge(6, 6)
        );
    }

    #[test]
    fn random_pairs_respect_sizes() {
        let pairs = random_pairs(50, PairSizes::TotalBetween(4, 8), 7).unwrap();
        assert!(pairs.iter().all(|(a, b)| {
            let t = a.order() + b.order();
            a.order() >= 1 && b.order() >= 1 && (4..=8).contains(&t)
        }));
        assert_eq!(
            pairs,
            random_pairs(50, PairSizes::TotalBetween(4, 8), 7).unwrap()
        );
        let fixed = random_pairs(5, PairSizes::Fixed(2, 3), 1).unwrap();
        assert!(fixed.iter().all(|(a, b)| a.order() == 2 && b.order() == 3));
        assert!(random_pairs(1, PairSizes::TotalBetween(5, 4), 0).is_err());
    }

    #[test]
    fn exhaustive_two_by_two() {
        let report = exhaustive_sweep(2, 2).unwrap();
        assert_eq!(report.records.len(), 9);
        assert!(report.records.iter().all(|r| r.agree));
        assert!(!report.has_theorem_mismatch());
    }
}
