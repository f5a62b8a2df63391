//! Relational computations of strong and stuttering bisimilarity, used to
//! cross-check the partition refinement on small games. The stuttering
//! oracle is exponential; meant for about ten vertices.

use std::collections::VecDeque;

use crate::game::{Game, Vertex};
use crate::graph::Subgraph;

use super::partition::Partition;

/// A binary relation on vertices, stored as a dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Relation {
        Relation { n, bits: vec![false; n * n] }
    }

    pub fn contains(&self, v: Vertex, w: Vertex) -> bool {
        self.bits[v * self.n + w]
    }

    pub fn insert(&mut self, v: Vertex, w: Vertex) {
        self.bits[v * self.n + w] = true;
    }

    pub fn remove(&mut self, v: Vertex, w: Vertex) {
        self.bits[v * self.n + w] = false;
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |v| (0..self.n).filter(move |&w| self.contains(v, w)).map(move |w| (v, w)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(v, w)| self.contains(w, v))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs().all(|(u, v)| (0..self.n).all(|w| !self.contains(v, w) || self.contains(u, w)))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|v| self.contains(v, v))
    }

    /// Classes of an equivalence relation, numbered by least member.
    pub fn to_partition(&self) -> Partition {
        Partition::from_keys((0..self.n).map(|v| (0..self.n).find(|&w| self.contains(v, w)).unwrap_or(v)))
    }

    /// Pairs with equal priority and owner.
    fn same_label(game: &Game) -> Relation {
        let n = game.vertex_count();
        let mut r = Relation::empty(n);
        for v in 0..n {
            for w in 0..n {
                if game.priority(v) == game.priority(w) && game.owner(v) == game.owner(w) {
                    r.insert(v, w);
                }
            }
        }
        r
    }
}

/// Largest strong bisimulation, by deleting violating pairs until none
/// remain.
pub fn oracle_strong_pairs(game: &Game) -> Relation {
    let mut r = Relation::same_label(game);
    let matched = |r: &Relation, v: Vertex, v2: Vertex| {
        game.successors(v).iter().all(|&w| game.successors(v2).iter().any(|&w2| r.contains(w, w2)))
    };
    loop {
        let doomed: Vec<_> = r.pairs().filter(|&(v, v2)| !matched(&r, v, v2) || !matched(&r, v2, v)).collect();
        if doomed.is_empty() {
            return r;
        }
        for (v, w) in doomed {
            r.remove(v, w);
        }
    }
}

/// Whether an infinite path from `v` visits only vertices related to `v`.
fn divergent_under(game: &Game, r: &Relation, v: Vertex) -> bool {
    let sub = Subgraph::build(game.vertex_count(), |x| r.contains(v, x), |x| game.successors(x).iter().copied());
    sub.can_reach_cycle()[v]
}

/// Vertices reachable from `v` by steps `x -> y` with `x R y`.
fn relation_reach(game: &Game, r: &Relation, v: Vertex) -> Vec<bool> {
    let mut seen = vec![false; game.vertex_count()];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &y in game.successors(x) {
            if r.contains(x, y) && !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Whether the equivalence `r` is a divergence-sensitive stuttering
/// bisimulation: related vertices share label and divergence, and every
/// step of one is matched by the other after inert steps.
pub fn is_stuttering_bisimulation(game: &Game, r: &Relation) -> bool {
    let n = game.vertex_count();
    let divergent: Vec<bool> = (0..n).map(|v| divergent_under(game, r, v)).collect();
    let reach: Vec<Vec<bool>> = (0..n).map(|v| relation_reach(game, r, v)).collect();
    // every step v -> u is answered from v2 either by stuttering or by
    // some v2 => w -> u2 with v R w and u R u2
    let transfer = |v: Vertex, v2: Vertex| {
        game.successors(v).iter().all(|&u| {
            (r.contains(v, u) && r.contains(u, v2))
                || (0..n).any(|w| {
                    reach[v2][w] && r.contains(v, w) && game.successors(w).iter().any(|&u2| r.contains(u, u2))
                })
        })
    };
    r.pairs().all(|(v, v2)| {
        game.priority(v) == game.priority(v2)
            && game.owner(v) == game.owner(v2)
            && divergent[v] == divergent[v2]
            && transfer(v, v2)
    })
}

/// Largest stuttering bisimulation, by trying every equivalence that
/// respects priorities and owners and keeping the coarsest one that passes
/// [`is_stuttering_bisimulation`].
///
/// Divergence is not monotone in the relation, so pair deletion from the
/// full relation can discard pairs too early; exhaustive search avoids
/// that at exponential cost.
pub fn oracle_stuttering_pairs(game: &Game) -> Relation {
    let n = game.vertex_count();
    let label = |v: Vertex| (game.priority(v), game.owner(v));
    let mut block_of = vec![0usize; n];
    let mut best: Option<(usize, Relation)> = None;

    fn assign(
        v: usize,
        blocks: usize,
        block_of: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize], usize),
        compatible: &dyn Fn(usize, usize, &[usize]) -> bool,
    ) {
        if v == block_of.len() {
            visit(block_of, blocks);
            return;
        }
        for b in 0..=blocks {
            if b < blocks && !compatible(v, b, block_of) {
                continue;
            }
            block_of[v] = b;
            assign(v + 1, blocks.max(b + 1), block_of, visit, compatible);
        }
    }

    let compatible = |v: usize, b: usize, block_of: &[usize]| {
        let first = block_of[..v].iter().position(|&x| x == b).unwrap();
        label(first) == label(v)
    };
    let mut visit = |block_of: &[usize], blocks: usize| {
        if best.as_ref().is_some_and(|(k, _)| *k <= blocks) {
            return;
        }
        let mut r = Relation::empty(n);
        for v in 0..n {
            for w in 0..n {
                if block_of[v] == block_of[w] {
                    r.insert(v, w);
                }
            }
        }
        if is_stuttering_bisimulation(game, &r) {
            best = Some((blocks, r));
        }
    };
    assign(0, 0, &mut block_of, &mut visit, &compatible);
    best.map(|(_, r)| r).expect("the identity is always a stuttering bisimulation")
}
