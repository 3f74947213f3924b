//! Depth-first backtracking over proper colorations into a symmetric palette.

use std::cmp::Reverse;
use std::ops::ControlFlow;

use crate::coloring::{compatible, Color, ColorSet, Coloration};
use crate::graph::{Sign, SignedGraph, Vertex};

/// Order in which vertices are assigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrder {
    /// `0, 1, …, n-1`. With symmetry breaking on, the first accepted coloration
    /// is the lexicographically least one under the canonical color order.
    Index,
    /// Descending degree, ties by index.
    DegreeDescending,
}

/// A configurable search for proper colorations of a graph into a palette.
///
/// With symmetry breaking enabled, only colorations in which absolute values
/// first appear in increasing order `1, 2, 3, …`, each first with positive
/// sign, are visited. Every coloration is related to exactly one such
/// representative by a relabeling that permutes absolute values and flips
/// whole `±i` pairs, which preserves properness, the palette, the number of
/// used colors, and which colors are doubled on negative edges. Acceptance
/// predicates must be invariant under those relabelings.
#[derive(Debug, Clone)]
pub struct ColoringSearch<'g> {
    graph: &'g SignedGraph,
    palette: ColorSet,
    max_used: Option<usize>,
    min_used: usize,
    symmetry_breaking: bool,
    order: VertexOrder,
}

impl<'g> ColoringSearch<'g> {
    pub fn new(graph: &'g SignedGraph, palette: ColorSet) -> Self {
        ColoringSearch {
            graph,
            palette,
            max_used: None,
            min_used: 0,
            symmetry_breaking: true,
            order: VertexOrder::Index,
        }
    }

    /// Only colorations using at most `n` distinct colors.
    pub fn max_used(mut self, n: usize) -> Self {
        self.max_used = Some(n);
        self
    }

    /// Only colorations using exactly `n` distinct colors.
    pub fn exact_used(mut self, n: usize) -> Self {
        self.max_used = Some(n);
        self.min_used = n;
        self
    }

    pub fn symmetry_breaking(mut self, on: bool) -> Self {
        self.symmetry_breaking = on;
        self
    }

    pub fn vertex_order(mut self, order: VertexOrder) -> Self {
        self.order = order;
        self
    }

    /// Visits every admissible complete coloration until `visit` breaks.
    /// Returns `true` if the walk was cut short.
    pub fn for_each<F>(&self, mut visit: F) -> bool
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        let n = self.graph.order();
        let order = self.vertex_sequence();
        let adjacency = self.graph.adjacency();
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        // Earlier neighbours only: the rest are unassigned when `v` is colored.
        let back: Vec<Vec<(Vertex, Sign)>> = adjacency
            .into_iter()
            .enumerate()
            .map(|(v, list)| {
                list.into_iter()
                    .filter(|&(u, _)| position[u] < position[v])
                    .collect()
            })
            .collect();
        let k = self.palette.k();
        let mut state = State {
            colors: vec![0; n],
            uses: vec![0; 2 * k + 1],
            used: 0,
            introduced: 0,
        };
        let walker = Walker {
            search: self,
            order: &order,
            back: &back,
            k,
        };
        walker.descend(0, &mut state, &mut visit).is_break()
    }

    /// First admissible coloration accepted by `accept`.
    pub fn find<F>(&self, mut accept: F) -> Option<Coloration>
    where
        F: FnMut(&[Color]) -> bool,
    {
        let mut found = None;
        self.for_each(|colors| {
            if accept(colors) {
                found = Some(colors.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found.map(|c| {
            Coloration::with_declared(c, self.palette).expect("search stays inside its palette")
        })
    }

    pub fn first(&self) -> Option<Coloration> {
        self.find(|_| true)
    }

    pub fn exists(&self) -> bool {
        self.first().is_some()
    }

    pub fn count(&self) -> usize {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    fn vertex_sequence(&self) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = (0..self.graph.order()).collect();
        if self.order == VertexOrder::DegreeDescending {
            let degrees: Vec<usize> = order.iter().map(|&v| self.graph.degree(v)).collect();
            order.sort_by_key(|&v| (Reverse(degrees[v]), v));
        }
        order
    }
}

struct State {
    colors: Vec<Color>,
    uses: Vec<u32>,
    used: usize,
    // Absolute values 1..=introduced are available under symmetry breaking.
    introduced: usize,
}

struct Walker<'a, 'g> {
    search: &'a ColoringSearch<'g>,
    order: &'a [Vertex],
    back: &'a [Vec<(Vertex, Sign)>],
    k: usize,
}

impl Walker<'_, '_> {
    fn slot(&self, c: Color) -> usize {
        (c + self.k as Color) as usize
    }

    fn candidates(&self, state: &State) -> Vec<Color> {
        if !self.search.symmetry_breaking {
            return self.search.palette.colors();
        }
        let mut out = Vec::with_capacity(2 * state.introduced + 2);
        for i in 1..=state.introduced as Color {
            out.push(i);
            out.push(-i);
        }
        if state.introduced < self.k {
            out.push(state.introduced as Color + 1);
        }
        if self.search.palette.includes_zero() {
            out.push(0);
        }
        out
    }

    fn descend<F>(&self, depth: usize, state: &mut State, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            if state.used < self.search.min_used {
                return ControlFlow::Continue(());
            }
            return visit(&state.colors);
        }
        let v = self.order[depth];
        let remaining = self.order.len() - depth - 1;
        for c in self.candidates(state) {
            let slot = self.slot(c);
            let fresh = state.uses[slot] == 0;
            let used_after = state.used + usize::from(fresh);
            if self.search.max_used.is_some_and(|m| used_after > m) {
                continue;
            }
            if used_after + remaining < self.search.min_used {
                continue;
            }
            if !self.back[v]
                .iter()
                .all(|&(u, sign)| compatible(c, state.colors[u], sign))
            {
                continue;
            }
            let introduces =
                self.search.symmetry_breaking && c > 0 && c as usize == state.introduced + 1;
            state.colors[v] = c;
            state.uses[slot] += 1;
            state.used = used_after;
            if introduces {
                state.introduced += 1;
            }
            let flow = self.descend(depth + 1, state, visit);
            if introduces {
                state.introduced -= 1;
            }
            state.uses[slot] -= 1;
            if fresh {
                state.used -= 1;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}
