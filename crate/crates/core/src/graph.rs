//! Signed simple graphs, joins and switching.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Neg;

use thiserror::Error;

/// Vertex index. Vertices of a graph of order `n` are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    /// `+1` or `-1`.
    pub fn factor(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge between {0} and {1}")]
    DuplicatePair(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    OutOfRange { vertex: Vertex, order: usize },
    #[error("no cross sign given for the pair ({0}, {1})")]
    MissingCrossSign(Vertex, Vertex),
}

/// A canonical edge: `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub sign: Sign,
}

/// A signed simple graph on vertices `0..order`.
///
/// Edges are kept keyed by their unordered pair `(min, max)`, so iteration is
/// always in lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    order: usize,
    edges: BTreeMap<(Vertex, Vertex), Sign>,
}

impl SignedGraph {
    /// Validates and normalizes an edge list.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Sign)>,
    {
        let mut map = BTreeMap::new();
        for (a, b, sign) in edges {
            for vertex in [a, b] {
                if vertex >= order {
                    return Err(GraphError::OutOfRange { vertex, order });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let key = (a.min(b), a.max(b));
            if map.insert(key, sign).is_some() {
                return Err(GraphError::DuplicatePair(key.0, key.1));
            }
        }
        Ok(SignedGraph { order, edges: map })
    }

    /// The graph with `order` vertices and no edges.
    pub fn empty(order: usize) -> Self {
        SignedGraph {
            order,
            edges: BTreeMap::new(),
        }
    }

    /// The complete graph with every edge carrying `sign`.
    pub fn complete(order: usize, sign: Sign) -> Self {
        let mut edges = BTreeMap::new();
        for u in 0..order {
            for v in u + 1..order {
                edges.insert((u, v), sign);
            }
        }
        SignedGraph { order, edges }
    }

    /// Complete graph on `order` vertices whose edges `(2i, 2i+1)` are negative
    /// and all other edges positive. `order` must be even.
    pub fn complete_with_negative_matching(order: usize) -> Self {
        assert!(order % 2 == 0, "a perfect matching needs an even order");
        let mut g = SignedGraph::complete(order, Sign::Positive);
        for i in (0..order).step_by(2) {
            g.edges.insert((i, i + 1), Sign::Negative);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges
            .iter()
            .map(|(&(u, v), &sign)| Edge { u, v, sign })
    }

    pub fn sign(&self, a: Vertex, b: Vertex) -> Option<Sign> {
        self.edges.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .keys()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Adjacency lists with signs, one entry per incident edge.
    pub fn adjacency(&self) -> Vec<Vec<(Vertex, Sign)>> {
        let mut adj = vec![Vec::new(); self.order];
        for e in self.edges() {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        adj
    }

    /// Compact identifier `n:code`, where `code` has one character per vertex
    /// pair in lexicographic order: `.` absent, `+` positive, `-` negative.
    pub fn signature(&self) -> String {
        let mut s = format!("{}:", self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                s.push(match self.edges.get(&(u, v)) {
                    None => '.',
                    Some(sign) => sign.symbol(),
                });
            }
        }
        s
    }

    /// Inverse of [`SignedGraph::signature`].
    pub fn from_signature(text: &str) -> Option<Self> {
        let (order, code) = text.split_once(':')?;
        let order: usize = order.parse().ok()?;
        let pairs: Vec<(Vertex, Vertex)> = (0..order)
            .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
            .collect();
        if code.chars().count() != pairs.len() {
            return None;
        }
        let mut edges = BTreeMap::new();
        for (pair, c) in pairs.into_iter().zip(code.chars()) {
            match c {
                '.' => {}
                _ => {
                    edges.insert(pair, Sign::from_symbol(c)?);
                }
            }
        }
        Some(SignedGraph { order, edges })
    }

    /// Negates the sign of every edge with exactly one endpoint in `set`.
    pub fn switch(&self, set: &BTreeSet<Vertex>) -> Result<Self, GraphError> {
        if let Some(&vertex) = set.iter().find(|&&v| v >= self.order) {
            return Err(GraphError::OutOfRange {
                vertex,
                order: self.order,
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|(&(u, v), &sign)| {
                let flip = set.contains(&u) != set.contains(&v);
                ((u, v), if flip { -sign } else { sign })
            })
            .collect();
        Ok(SignedGraph {
            order: self.order,
            edges,
        })
    }

    /// The same graph with every sign negated.
    pub fn negated(&self) -> Self {
        SignedGraph {
            order: self.order,
            edges: self.edges.iter().map(|(&k, &s)| (k, -s)).collect(),
        }
    }
}

/// General join: `g2`'s vertices are shifted by `g1.order()`, and every cross
/// pair `(v, w)` with `v` in `g1`, `w` in `g2` (both in local indices) gets
/// the sign returned by `cross`.
pub fn sigma_star_join<F>(
    g1: &SignedGraph,
    g2: &SignedGraph,
    mut cross: F,
) -> Result<SignedGraph, GraphError>
where
    F: FnMut(Vertex, Vertex) -> Option<Sign>,
{
    let offset = g1.order;
    let mut edges = g1.edges.clone();
    for (&(u, v), &s) in &g2.edges {
        edges.insert((u + offset, v + offset), s);
    }
    for v in 0..g1.order {
        for w in 0..g2.order {
            let sign = cross(v, w).ok_or(GraphError::MissingCrossSign(v, w))?;
            edges.insert((v, w + offset), sign);
        }
    }
    Ok(SignedGraph {
        order: g1.order + g2.order,
        edges,
    })
}

/// Join with cross signs read from a map keyed by `(g1 vertex, g2 vertex)`.
pub fn sigma_star_join_map(
    g1: &SignedGraph,
    g2: &SignedGraph,
    cross_signs: &BTreeMap<(Vertex, Vertex), Sign>,
) -> Result<SignedGraph, GraphError> {
    sigma_star_join(g1, g2, |v, w| cross_signs.get(&(v, w)).copied())
}

fn constant_join(g1: &SignedGraph, g2: &SignedGraph, sign: Sign) -> SignedGraph {
    sigma_star_join(g1, g2, |_, _| Some(sign)).expect("constant cross signature is total")
}

pub fn all_positive_join(g1: &SignedGraph, g2: &SignedGraph) -> SignedGraph {
    constant_join(g1, g2, Sign::Positive)
}

pub fn all_negative_join(g1: &SignedGraph, g2: &SignedGraph) -> SignedGraph {
    constant_join(g1, g2, Sign::Negative)
}
