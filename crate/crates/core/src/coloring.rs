//! Colorations, the canonical symmetric palettes, and properness.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Sign, SignedGraph, Vertex};

pub type Color = i32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("a color set must have at least one color")]
    EmptyColorSet,
    #[error("color {color} on vertex {vertex} is not in {set}")]
    OutsideColorSet {
        vertex: Vertex,
        color: Color,
        set: ColorSet,
    },
}

/// The palette `{±1, …, ±k}` (size `2k`) or `{±1, …, ±k, 0}` (size `2k+1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet {
    size: usize,
}

impl ColorSet {
    pub fn new(size: usize) -> Result<Self, ColoringError> {
        if size == 0 {
            Err(ColoringError::EmptyColorSet)
        } else {
            Ok(ColorSet { size })
        }
    }

    /// The palette `{±1, …, ±k, 0}`, of size `2k + 1`.
    pub fn with_zero(k: usize) -> Self {
        ColorSet { size: 2 * k + 1 }
    }

    pub fn size(self) -> usize {
        self.size
    }

    /// Largest absolute value in the set.
    pub fn k(self) -> usize {
        self.size / 2
    }

    pub fn includes_zero(self) -> bool {
        self.size % 2 == 1
    }

    pub fn contains(self, c: Color) -> bool {
        if c == 0 {
            self.includes_zero()
        } else {
            c.unsigned_abs() as usize <= self.k()
        }
    }

    /// Members in canonical order: `1, -1, 2, -2, …, k, -k`, then `0`.
    pub fn colors(self) -> Vec<Color> {
        let k = self.k() as Color;
        let mut out: Vec<Color> = (1..=k).flat_map(|i| [i, -i]).collect();
        if self.includes_zero() {
            out.push(0);
        }
        out
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors().iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Sort key for colors: increasing absolute value, positive before negative,
/// zero last.
pub fn canonical_key(c: Color) -> (u32, bool, bool) {
    (
        if c == 0 { u32::MAX } else { c.unsigned_abs() },
        c < 0,
        c == 0,
    )
}

/// A total vertex coloring, optionally tied to the palette it is measured
/// against.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloration {
    colors: Vec<Color>,
    declared: Option<ColorSet>,
}

impl Coloration {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloration {
            colors,
            declared: None,
        }
    }

    /// Attaches a declared palette after checking membership.
    pub fn with_declared(colors: Vec<Color>, set: ColorSet) -> Result<Self, ColoringError> {
        Coloration::new(colors).declare(set)
    }

    pub fn declare(mut self, set: ColorSet) -> Result<Self, ColoringError> {
        check_membership(&self.colors, set)?;
        self.declared = Some(set);
        Ok(self)
    }

    pub fn declared(&self) -> Option<ColorSet> {
        self.declared
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn image(&self) -> BTreeSet<Color> {
        self.colors.iter().copied().collect()
    }

    /// Number of distinct colors used.
    pub fn used_count(&self) -> usize {
        self.image().len()
    }

    /// Negates the colors of the vertices in `set`; the declared palette is
    /// symmetric, so it is kept.
    pub fn negate_on(&self, set: &BTreeSet<Vertex>) -> Self {
        let colors = self
            .colors
            .iter()
            .enumerate()
            .map(|(v, &c)| if set.contains(&v) { -c } else { c })
            .collect();
        Coloration {
            colors,
            declared: self.declared,
        }
    }

    /// Applies `f` to every color; the declared palette is dropped.
    pub fn map_colors(&self, f: impl Fn(Color) -> Color) -> Self {
        Coloration::new(self.colors.iter().map(|&c| f(c)).collect())
    }
}

impl fmt::Display for Coloration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn check_membership(colors: &[Color], set: ColorSet) -> Result<(), ColoringError> {
    match colors.iter().position(|&c| !set.contains(c)) {
        Some(vertex) => Err(ColoringError::OutsideColorSet {
            vertex,
            color: colors[vertex],
            set,
        }),
        None => Ok(()),
    }
}

/// Whether `c1` and `c2` may sit on the two ends of an edge with `sign`.
#[inline]
pub fn compatible(c1: Color, c2: Color, sign: Sign) -> bool {
    c1 != sign.factor() * c2
}

/// `κ(a) ≠ σ(e)·κ(b)` on every edge.
///
/// Panics if `kappa` does not color every vertex of `g`.
pub fn is_proper(g: &SignedGraph, kappa: &Coloration) -> bool {
    assert_eq!(
        kappa.len(),
        g.order(),
        "coloration must be total on the graph"
    );
    g.edges()
        .all(|e| compatible(kappa.color(e.u), kappa.color(e.v), e.sign))
}

/// Count and set of palette members missing from the image of `kappa`.
pub fn deficiency(
    kappa: &Coloration,
    set: ColorSet,
) -> Result<(usize, BTreeSet<Color>), ColoringError> {
    check_membership(kappa.colors(), set)?;
    let image = kappa.image();
    let missing: BTreeSet<Color> = set
        .colors()
        .into_iter()
        .filter(|c| !image.contains(c))
        .collect();
    Ok((missing.len(), missing))
}

/// Colors of `set` missing from `kappa`, in canonical order.
pub fn deficiency_labels(kappa: &Coloration, set: ColorSet) -> Vec<Color> {
    let image = kappa.image();
    set.colors()
        .into_iter()
        .filter(|c| !image.contains(c))
        .collect()
}

/// Colors that sit on both ends of some negative edge.
pub fn doubled_colors(g: &SignedGraph, colors: &[Color]) -> BTreeSet<Color> {
    g.edges()
        .filter(|e| e.sign == Sign::Negative && colors[e.u] == colors[e.v])
        .map(|e| colors[e.u])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::*;

    #[test]
    fn color_sets() {
        assert_eq!(ColorSet::new(0), Err(ColoringError::EmptyColorSet));
        assert_eq!(ColorSet::new(1).unwrap().colors(), vec![0]);
        assert_eq!(ColorSet::new(4).unwrap().colors(), vec![1, -1, 2, -2]);
        assert_eq!(ColorSet::new(5).unwrap().colors(), vec![1, -1, 2, -2, 0]);
        let m4 = ColorSet::new(4).unwrap();
        assert!(!m4.contains(0) && m4.contains(-2) && !m4.contains(3));
        assert_eq!(ColorSet::new(5).unwrap().to_string(), "{1,-1,2,-2,0}");
    }

    #[test]
    fn properness_on_negative_k2() {
        let g = SignedGraph::complete(2, Negative);
        assert!(is_proper(&g, &Coloration::new(vec![1, 1])));
        assert!(!is_proper(&g, &Coloration::new(vec![0, 0])));
        assert!(!is_proper(&g, &Coloration::new(vec![2, -2])));
        let p = SignedGraph::complete(2, Positive);
        assert!(!is_proper(&p, &Coloration::new(vec![3, 3])));
        assert!(is_proper(&p, &Coloration::new(vec![3, -3])));
    }

    #[test]
    fn deficiency_counts_missing_colors() {
        let m2 = ColorSet::new(2).unwrap();
        let (n, set) = deficiency(&Coloration::new(vec![1, 1]), m2).unwrap();
        assert_eq!((n, set), (1, BTreeSet::from([-1])));
        let (n, set) = deficiency(&Coloration::new(vec![1, -1]), m2).unwrap();
        assert_eq!((n, set.len()), (0, 0));
        assert!(matches!(
            deficiency(&Coloration::new(vec![0, 1]), m2),
            Err(ColoringError::OutsideColorSet { vertex: 0, .. })
        ));
    }

    #[test]
    fn declared_palette_is_checked() {
        let m3 = ColorSet::new(3).unwrap();
        assert!(Coloration::with_declared(vec![0, 1, -1], m3).is_ok());
        assert!(Coloration::with_declared(vec![2], m3).is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![0, -2, 2, -1, 1];
        v.sort_by_key(|&c| canonical_key(c));
        assert_eq!(v, vec![1, -1, 2, -2, 0]);
    }
}
