//! Exact chromatic number, maximum deficiency and exceptionality.
//!
//! All searches are exhaustive backtracking over the canonical palettes
//! `M_n`, sized for graphs of a dozen vertices or fewer.

pub mod search;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::coloring::{deficiency, doubled_colors, Color, ColorSet, Coloration, ColoringError};
use crate::graph::SignedGraph;
pub use search::{ColoringSearch, VertexOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("exceptionality is only defined for even chromatic number, got {0}")]
    OddChromaticNumber(usize),
    #[error("maximum deficiency {max_def} exceeds half the chromatic number {chi}")]
    InconsistentStats { chi: usize, max_def: usize },
}

/// Which colorations the exceptional-graph definition ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    /// Colorations with `χ − M` arbitrary integer colors, normalized into
    /// `{±1, …, ±(χ − M), 0}`.
    Normalized,
    /// Colorations inside the minimal color set `M_χ` only.
    Narrow,
}

pub fn minimal_color_set(n: usize) -> Result<ColorSet, ColoringError> {
    ColorSet::new(n)
}

/// Whether `g` has a proper coloration into `M_n`.
pub fn is_colorable(g: &SignedGraph, n: usize) -> bool {
    match ColorSet::new(n) {
        Ok(palette) => ColoringSearch::new(g, palette)
            .vertex_order(VertexOrder::DegreeDescending)
            .exists(),
        Err(_) => false,
    }
}

/// Least `n` such that `g` is properly colorable into `M_n`.
///
/// Giving each vertex its own absolute value colors any graph into
/// `M_{2·order}`, so the loop terminates.
pub fn chromatic_number(g: &SignedGraph) -> usize {
    (1..)
        .find(|&n| is_colorable(g, n))
        .expect("M_(2·order) always suffices")
}

/// Least number of distinct colors over proper colorations into `palette`,
/// with the lexicographically least coloration attaining it.
pub fn min_used_colors(g: &SignedGraph, palette: ColorSet) -> Option<(usize, Coloration)> {
    let fast = |s: usize| {
        ColoringSearch::new(g, palette)
            .max_used(s)
            .vertex_order(VertexOrder::DegreeDescending)
            .exists()
    };
    let s = (1..=palette.size()).find(|&s| fast(s))?;
    let witness = ColoringSearch::new(g, palette)
        .max_used(s)
        .first()
        .expect("existence was just established");
    Some((s, witness))
}

/// `M(g)` and the lexicographically least coloration into `M_χ` attaining it.
pub fn max_deficiency(g: &SignedGraph) -> (usize, Coloration) {
    max_deficiency_with_chi(g, chromatic_number(g))
}

fn max_deficiency_with_chi(g: &SignedGraph, chi: usize) -> (usize, Coloration) {
    let palette = ColorSet::new(chi).expect("chi is positive");
    let (used, witness) = min_used_colors(g, palette).expect("g is chi-colorable");
    (chi - used, witness)
}

/// A proper coloration into `palette` using exactly `used` colors in which
/// some used color is not on both ends of any negative edge.
pub fn escaping_coloration(
    g: &SignedGraph,
    palette: ColorSet,
    used: usize,
    symmetry_breaking: bool,
) -> Option<Coloration> {
    ColoringSearch::new(g, palette)
        .exact_used(used)
        .symmetry_breaking(symmetry_breaking)
        .find(|colors| has_undoubled_color(g, colors))
}

fn has_undoubled_color(g: &SignedGraph, colors: &[Color]) -> bool {
    let doubled = doubled_colors(g, colors);
    colors.iter().any(|c| !doubled.contains(c))
}

fn check_stats(chi: usize, max_def: usize) -> Result<(), SolverError> {
    if chi % 2 == 1 {
        return Err(SolverError::OddChromaticNumber(chi));
    }
    if max_def > chi / 2 {
        return Err(SolverError::InconsistentStats { chi, max_def });
    }
    Ok(())
}

/// A coloration refuting exceptionality under `reading`, if one exists.
pub fn exceptional_counterexample(
    g: &SignedGraph,
    chi: usize,
    max_def: usize,
    reading: Reading,
) -> Result<Option<Coloration>, SolverError> {
    check_stats(chi, max_def)?;
    let used = chi - max_def;
    let palette = match reading {
        Reading::Normalized => ColorSet::with_zero(used),
        Reading::Narrow => ColorSet::new(chi).expect("chi is positive"),
    };
    Ok(escaping_coloration(g, palette, used, true))
}

/// Exceptionality under the normalized reading.
pub fn is_exceptional(g: &SignedGraph, chi: usize, max_def: usize) -> Result<bool, SolverError> {
    is_exceptional_under(g, chi, max_def, Reading::Normalized)
}

pub fn is_exceptional_under(
    g: &SignedGraph,
    chi: usize,
    max_def: usize,
    reading: Reading,
) -> Result<bool, SolverError> {
    Ok(exceptional_counterexample(g, chi, max_def, reading)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub chi: usize,
    pub max_def: usize,
    /// Normalized-reading exceptionality; always `false` when `chi` is odd.
    pub exceptional: bool,
    /// Lexicographically least coloration into `M_χ` with deficiency `max_def`.
    pub min_coloration: Coloration,
    pub deficiency_set: BTreeSet<Color>,
}

impl GraphStats {
    pub fn color_set(&self) -> ColorSet {
        ColorSet::new(self.chi).expect("chi is positive")
    }

    /// Exceptionality is only defined for even chromatic number.
    pub fn exceptionality_defined(&self) -> bool {
        self.chi % 2 == 0
    }

    /// Number of colors used by a maximum-deficiency minimal coloration.
    pub fn used_colors(&self) -> usize {
        self.chi - self.max_def
    }
}

pub fn graph_stats(g: &SignedGraph) -> GraphStats {
    let chi = chromatic_number(g);
    let (max_def, min_coloration) = max_deficiency_with_chi(g, chi);
    let exceptional = chi % 2 == 0
        && is_exceptional(g, chi, max_def).expect("chi is even and max_def is consistent");
    let (_, deficiency_set) =
        deficiency(&min_coloration, ColorSet::new(chi).unwrap()).expect("inside M_chi");
    GraphStats {
        chi,
        max_def,
        exceptional,
        min_coloration,
        deficiency_set,
    }
}

/// A maximum-deficiency coloration into `M_χ` together with a used color
/// whose class contains no edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidableColorWitness {
    pub coloration: Coloration,
    pub color_a: Color,
}

/// Lexicographically least witness; `color_a` is the first avoidable color in
/// canonical order.
pub fn find_avoidable_color_witness(
    g: &SignedGraph,
    stats: &GraphStats,
) -> Option<AvoidableColorWitness> {
    let coloration = escaping_coloration(g, stats.color_set(), stats.used_colors(), true)?;
    let doubled = doubled_colors(g, coloration.colors());
    let color_a = stats
        .color_set()
        .colors()
        .into_iter()
        .find(|c| coloration.colors().contains(c) && !doubled.contains(c))
        .expect("accepted colorations have an undoubled color");
    Some(AvoidableColorWitness {
        coloration,
        color_a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;
    use crate::graph::Sign::*;

    fn neg_k2() -> SignedGraph {
        SignedGraph::complete(2, Negative)
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chromatic_number(&SignedGraph::empty(1)), 1);
        assert_eq!(chromatic_number(&SignedGraph::empty(4)), 1);
        assert_eq!(chromatic_number(&neg_k2()), 2);
        assert_eq!(chromatic_number(&SignedGraph::complete(2, Positive)), 2);
        assert_eq!(chromatic_number(&SignedGraph::complete(3, Positive)), 3);
        assert_eq!(
            chromatic_number(&SignedGraph::complete_with_negative_matching(4)),
            2
        );
    }

    #[test]
    fn small_max_deficiencies() {
        let (m, w) = max_deficiency(&SignedGraph::complete(2, Positive));
        assert_eq!((m, w.colors()), (0, &[1, -1][..]));
        let (m, w) = max_deficiency(&neg_k2());
        assert_eq!((m, w.colors()), (1, &[1, 1][..]));
        let (m, _) = max_deficiency(&SignedGraph::complete_with_negative_matching(4));
        assert_eq!(m, 0);
    }

    #[test]
    fn exceptionality_of_small_graphs() {
        assert_eq!(is_exceptional(&neg_k2(), 2, 1), Ok(true));
        assert_eq!(
            is_exceptional(&SignedGraph::complete(2, Positive), 2, 0),
            Ok(false)
        );
        assert_eq!(
            is_exceptional(&SignedGraph::complete_with_negative_matching(4), 2, 0),
            Ok(true)
        );
        assert_eq!(
            is_exceptional(&SignedGraph::empty(1), 1, 0),
            Err(SolverError::OddChromaticNumber(1))
        );
        assert_eq!(
            is_exceptional(&neg_k2(), 2, 2),
            Err(SolverError::InconsistentStats { chi: 2, max_def: 2 })
        );
    }

    #[test]
    fn odd_chi_stats_never_exceptional() {
        let s = graph_stats(&SignedGraph::complete(3, Positive));
        assert_eq!((s.chi, s.max_def, s.exceptional), (3, 0, false));
        assert!(!s.exceptionality_defined());
        assert!(s.min_coloration.colors().contains(&0));
    }

    #[test]
    fn avoidable_witnesses() {
        let pos = SignedGraph::complete(2, Positive);
        let w = find_avoidable_color_witness(&pos, &graph_stats(&pos)).unwrap();
        assert_eq!((w.coloration.colors(), w.color_a), (&[1, -1][..], 1));

        assert_eq!(
            find_avoidable_color_witness(&neg_k2(), &graph_stats(&neg_k2())),
            None
        );

        let k4 = SignedGraph::complete(4, Positive);
        let w = find_avoidable_color_witness(&k4, &graph_stats(&k4)).unwrap();
        assert_eq!(w.coloration.colors(), &[1, -1, 2, -2]);
        assert_eq!(w.color_a, 1);
        assert!(is_proper(&k4, &w.coloration));
    }
}
