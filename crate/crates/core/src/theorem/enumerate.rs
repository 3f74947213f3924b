//! Exhaustive and seeded random signed graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Sign, SignedGraph};

/// Largest order accepted by [`enumerate_signed_graphs`]; `3^C(6,2)` is
/// already over fourteen million graphs.
pub const MAX_ENUMERATION_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("refusing to enumerate all signed graphs on {0} vertices (limit {MAX_ENUMERATION_ORDER})")]
pub struct EnumerationTooLarge(pub usize);

/// Every assignment of absent / `+` / `-` to the vertex pairs of an
/// `n`-vertex graph. Pairs are taken in lexicographic order and the first pair
/// varies slowest, with absent < `+` < `-`.
pub fn enumerate_signed_graphs(
    n: usize,
) -> Result<impl Iterator<Item = SignedGraph>, EnumerationTooLarge> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    Ok((0..total).map(move |mut code| {
        let mut digits = vec![0; pairs.len()];
        for d in digits.iter_mut().rev() {
            *d = code % 3;
            code /= 3;
        }
        let edges = pairs.iter().zip(digits).filter_map(|(&(u, v), d)| match d {
            1 => Some((u, v, Sign::Positive)),
            2 => Some((u, v, Sign::Negative)),
            _ => None,
        });
        SignedGraph::new(n, edges).expect("enumerated pairs are distinct and in range")
    }))
}

/// All signed graphs on `1..=max_order` vertices, smallest orders first.
pub fn enumerate_up_to(max_order: usize) -> Result<Vec<SignedGraph>, EnumerationTooLarge> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_signed_graphs(n)?);
    }
    Ok(out)
}

/// Each pair present with probability `p_edge`, negative with probability
/// `p_negative` given present. Deterministic in `seed`.
pub fn random_signed_graph(n: usize, p_edge: f64, p_negative: f64, seed: u64) -> SignedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_signed_graph_with(&mut rng, n, p_edge, p_negative)
}

pub fn random_signed_graph_with<R: Rng>(
    rng: &mut R,
    n: usize,
    p_edge: f64,
    p_negative: f64,
) -> SignedGraph {
    let p_edge = p_edge.clamp(0.0, 1.0);
    let p_negative = p_negative.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_edge) {
                let sign = if rng.gen_bool(p_negative) {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                edges.push((u, v, sign));
            }
        }
    }
    SignedGraph::new(n, edges).expect("generated pairs are distinct and in range")
}
