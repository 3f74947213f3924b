//! Color-class replacements and palette remapping.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::coloring::{canonical_key, Color, Coloration};
use crate::graph::SignedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplacementError {
    #[error("replacement target must be nonzero")]
    ZeroTarget,
    #[error("replacement source must be nonzero for {0}")]
    ZeroSource(&'static str),
    #[error("type 4 targets {0} and {1} are negatives of each other")]
    OpposedTargets(Color, Color),
    #[error("source color {0} is not used by the coloration")]
    SourceAbsent(Color),
    #[error("color {0} is replaced twice")]
    DuplicateSource(Color),
    #[error("two color classes would both become {0}")]
    Collision(Color),
    #[error("need {needed} palette targets, got {given}")]
    TooFewTargets { needed: usize, given: usize },
    #[error("palette targets must be nonzero with distinct absolute values; {0} is not")]
    BadTarget(Color),
}

/// Relabeling of one class, or of a `±i` pair of classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Replacement {
    /// Class `from` becomes the nonzero color `to`.
    Type1 { from: Color, to: Color },
    /// Class `from` (nonzero, with no edge inside it) becomes `0`.
    Type2 { from: Color },
    /// Classes `from`, `-from` become `to`, `-to`.
    Type3 { from: Color, to: Color },
    /// Classes `from`, `-from` become `to_pos`, `to_neg` with `to_pos ≠ -to_neg`.
    Type4 {
        from: Color,
        to_pos: Color,
        to_neg: Color,
    },
}

impl Replacement {
    pub fn validate(&self) -> Result<(), ReplacementError> {
        match *self {
            Replacement::Type1 { to, .. } => nonzero(to),
            Replacement::Type2 { from } => nonzero_source(from, "type 2"),
            Replacement::Type3 { from, to } => {
                nonzero_source(from, "type 3")?;
                nonzero(to)
            }
            Replacement::Type4 {
                from,
                to_pos,
                to_neg,
            } => {
                nonzero_source(from, "type 4")?;
                nonzero(to_pos)?;
                nonzero(to_neg)?;
                if to_pos == -to_neg {
                    return Err(ReplacementError::OpposedTargets(to_pos, to_neg));
                }
                Ok(())
            }
        }
    }

    /// `(old, new)` pairs this replacement prescribes.
    pub fn moves(&self) -> Vec<(Color, Color)> {
        match *self {
            Replacement::Type1 { from, to } => vec![(from, to)],
            Replacement::Type2 { from } => vec![(from, 0)],
            Replacement::Type3 { from, to } => vec![(from, to), (-from, -to)],
            Replacement::Type4 {
                from,
                to_pos,
                to_neg,
            } => vec![(from, to_pos), (-from, to_neg)],
        }
    }
}

fn nonzero(c: Color) -> Result<(), ReplacementError> {
    if c == 0 {
        Err(ReplacementError::ZeroTarget)
    } else {
        Ok(())
    }
}

fn nonzero_source(c: Color, kind: &'static str) -> Result<(), ReplacementError> {
    if c == 0 {
        Err(ReplacementError::ZeroSource(kind))
    } else {
        Ok(())
    }
}

impl fmt::Display for Replacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Replacement::Type1 { from, to } => write!(f, "type1 {from}->{to}"),
            Replacement::Type2 { from } => write!(f, "type2 {from}->0"),
            Replacement::Type3 { from, to } => {
                write!(f, "type3 {from}->{to},{}->{}", -from, -to)
            }
            Replacement::Type4 {
                from,
                to_pos,
                to_neg,
            } => write!(f, "type4 {from}->{to_pos},{}->{to_neg}", -from),
        }
    }
}

/// Whether the class of `color` contains no edge of `g`, so a Type 2
/// replacement on it is admissible.
pub fn class_is_edge_free(g: &SignedGraph, kappa: &Coloration, color: Color) -> bool {
    g.edges()
        .all(|e| !(kappa.color(e.u) == color && kappa.color(e.v) == color))
}

/// Applies a single replacement. Sources must be used by `kappa`.
pub fn apply_replacement(
    kappa: &Coloration,
    rep: &Replacement,
) -> Result<Coloration, ReplacementError> {
    rep.validate()?;
    let image = kappa.image();
    let moves: BTreeMap<Color, Color> = rep.moves().into_iter().collect();
    if let Some(&missing) = moves.keys().find(|c| !image.contains(c)) {
        return Err(ReplacementError::SourceAbsent(missing));
    }
    Ok(kappa.map_colors(|c| moves.get(&c).copied().unwrap_or(c)))
}

/// Applies several replacements at once, each reading the original classes
/// of `kappa`. Fails rather than merge two classes.
pub fn apply_simultaneous(
    kappa: &Coloration,
    reps: &[Replacement],
) -> Result<Coloration, ReplacementError> {
    let image = kappa.image();
    let mut moves = BTreeMap::new();
    for rep in reps {
        rep.validate()?;
        for (from, to) in rep.moves() {
            if !image.contains(&from) {
                return Err(ReplacementError::SourceAbsent(from));
            }
            if moves.insert(from, to).is_some() {
                return Err(ReplacementError::DuplicateSource(from));
            }
        }
    }
    let mut seen = BTreeSet::new();
    for &c in &image {
        let to = moves.get(&c).copied().unwrap_or(c);
        if !seen.insert(to) {
            return Err(ReplacementError::Collision(to));
        }
    }
    Ok(kappa.map_colors(|c| moves.get(&c).copied().unwrap_or(c)))
}

/// Sends the color classes of `kappa`, in canonical color order, to the
/// first targets in order. Targets must be nonzero with pairwise distinct
/// absolute values, which keeps any proper coloration proper.
pub fn remap_into_palette(
    kappa: &Coloration,
    targets: &[Color],
) -> Result<Coloration, ReplacementError> {
    let mut abs_seen = BTreeSet::new();
    for &t in targets {
        if t == 0 || !abs_seen.insert(t.unsigned_abs()) {
            return Err(ReplacementError::BadTarget(t));
        }
    }
    let mut classes: Vec<Color> = kappa.image().into_iter().collect();
    if classes.len() > targets.len() {
        return Err(ReplacementError::TooFewTargets {
            needed: classes.len(),
            given: targets.len(),
        });
    }
    classes.sort_by_key(|&c| canonical_key(c));
    let moves: BTreeMap<Color, Color> = classes.into_iter().zip(targets.iter().copied()).collect();
    Ok(kappa.map_colors(|c| moves[&c]))
}

/// Replacements equivalent to a remap, for traces.
pub fn remap_as_replacements(kappa: &Coloration, remapped: &Coloration) -> Vec<Replacement> {
    let mut moves = BTreeMap::new();
    for (&from, &to) in kappa.colors().iter().zip(remapped.colors()) {
        moves.insert(from, to);
    }
    let mut out: Vec<(Color, Color)> = moves.into_iter().collect();
    out.sort_by_key(|&(from, _)| canonical_key(from));
    out.into_iter()
        .map(|(from, to)| Replacement::Type1 { from, to })
        .collect()
}
