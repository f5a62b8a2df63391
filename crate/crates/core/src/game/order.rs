//! Vertex orderings: the fixed total order ⊏ (ascending index) and the
//! proximity order toward a target vertex.

use std::cmp::Ordering;
use std::collections::VecDeque;

use super::{Game, Vertex};
use crate::error::{Error, Result};

/// Least number of edges from `v` to `u`; `None` when `u` is unreachable.
pub fn distance(game: &Game, v: Vertex, u: Vertex) -> Option<usize> {
    distances_to(game, u)[v]
}

/// Distance from every vertex to `target`, by backward BFS.
pub fn distances_to(game: &Game, target: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; game.vertex_count()];
    dist[target] = Some(0);
    let mut queue = VecDeque::from([target]);
    while let Some(w) = queue.pop_front() {
        let d = dist[w].unwrap() + 1;
        for &v in game.predecessors(w) {
            if dist[v].is_none() {
                dist[v] = Some(d);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Outcome of comparing two distinct vertices by proximity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Proximity {
    Less,
    Greater,
}

/// Compares `a` and `b` by distance to `u`, breaking ties by index.
///
/// Unreachable counts as infinitely far. Comparing a vertex with itself is
/// an error since the order is strict.
pub fn cmp_proximity(game: &Game, u: Vertex, a: Vertex, b: Vertex) -> Result<Proximity> {
    if a == b {
        return Err(Error::EqualVertices(a));
    }
    let dist = distances_to(game, u);
    Ok(match proximity_key(&dist, a).cmp(&proximity_key(&dist, b)) {
        Ordering::Less => Proximity::Less,
        _ => Proximity::Greater,
    })
}

/// Sort key realising the proximity order for a precomputed distance table.
pub(crate) fn proximity_key(dist: &[Option<usize>], v: Vertex) -> (usize, Vertex) {
    (dist[v].unwrap_or(usize::MAX), v)
}

/// ⊓: the least vertex of a non-empty set.
pub fn min_vertex<I: IntoIterator<Item = Vertex>>(set: I) -> Result<Vertex> {
    set.into_iter().min().ok_or(Error::EmptySet)
}
