use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::game::{distances_to, Game, Path, Player, Strategy, Vertex};
use crate::graph::Subgraph;
use crate::reduction::{Block, Reduction};
use crate::solvers::Solution;

use super::{verify_strategy, LiftContext};

/// Distance used to rank inert successors on the way to a target vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DistanceMetric {
    /// Shortest path that stays in the current block until its last edge.
    /// Every move strictly shortens it, so the target is always reached.
    #[default]
    Inert,
    /// Shortest path in the whole game. Such a path may leave the block, so
    /// walking along inert edges by this measure can loop forever.
    Graph,
}

fn inert_successors<'g>(ctx: &'g LiftContext<'_>, v: Vertex) -> impl Iterator<Item = Vertex> + 'g {
    let b = ctx.block_of(v);
    ctx.game.successors(v).iter().copied().filter(move |&w| ctx.block_of(w) == b)
}

fn check_path(ctx: &LiftContext<'_>, path: &Path) -> Result<()> {
    if let Some(&v) = path.vertices().iter().find(|&&v| !ctx.quotient_region[ctx.block_of(v)]) {
        return Err(Error::Precondition(format!("vertex {v} lies outside the {} region", ctx.player)));
    }
    Ok(())
}

/// Vertices in other blocks that a consistent quotient play can enter next.
///
/// For a block owned by the player this is the block the quotient strategy
/// picks, unless it picks the block itself. For an opponent block it is
/// every successor block.
pub fn entry_set(ctx: &LiftContext<'_>, path: &Path) -> Result<Vec<Vertex>> {
    check_path(ctx, path)?;
    let c = ctx.block_of(path.last());
    let mut entry: Vec<Vertex> = Vec::new();
    if ctx.quotient.owner(c) == ctx.player {
        let next = ctx
            .quotient_strategy
            .get(c)
            .ok_or_else(|| Error::Precondition(format!("quotient strategy undefined at block {c}")))?;
        if next != c {
            entry.extend_from_slice(ctx.partition.block(next));
        }
    } else {
        for &d in ctx.quotient.successors(c) {
            if d != c {
                entry.extend_from_slice(ctx.partition.block(d));
            }
        }
        entry.sort_unstable();
    }
    Ok(entry)
}

/// Block of the least entry vertex.
pub fn target_class(ctx: &LiftContext<'_>, path: &Path) -> Result<Block> {
    let entry = entry_set(ctx, path)?;
    let first = entry
        .first()
        .ok_or_else(|| Error::Precondition("entry set is empty, no target class".into()))?;
    Ok(ctx.block_of(*first))
}

/// Least vertex of the target class that the end of `path` can step into
/// after some inert steps.
pub fn target_vertex(ctx: &LiftContext<'_>, path: &Path) -> Result<Vertex> {
    let class = target_class(ctx, path)?;
    let start = path.last();
    let mut seen = vec![false; ctx.game.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut best: Option<Vertex> = None;
    while let Some(w) = queue.pop_front() {
        for &u in ctx.game.successors(w) {
            let b = ctx.block_of(u);
            if b == class {
                best = Some(best.map_or(u, |x| x.min(u)));
            } else if b == ctx.block_of(start) && !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    // stable partitions give every block member the same exit blocks
    best.ok_or_else(|| Error::UnstablePartition(format!("no member of block {class} reachable from {start}")))
}

/// Inert distance to `target`: 1 for vertices of `block` with an edge to
/// it, growing by one per inert step backwards.
fn inert_distances(ctx: &LiftContext<'_>, block: Block, target: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; ctx.game.vertex_count()];
    let mut queue = VecDeque::new();
    for &w in ctx.game.predecessors(target) {
        if ctx.block_of(w) == block {
            dist[w] = Some(1);
            queue.push_back(w);
        }
    }
    while let Some(w) = queue.pop_front() {
        let d = dist[w].unwrap() + 1;
        for &x in ctx.game.predecessors(w) {
            if ctx.block_of(x) == block && dist[x].is_none() {
                dist[x] = Some(d);
                queue.push_back(x);
            }
        }
    }
    dist
}

/// Next move of the lifted strategy after `path`, which must end in a
/// vertex of the player inside the won region.
pub fn mimick_next(ctx: &LiftContext<'_>, path: &Path) -> Result<Vertex> {
    let v = path.last();
    if ctx.game.owner(v) != ctx.player {
        return Err(Error::Precondition(format!("vertex {v} is not owned by {}", ctx.player)));
    }
    let entry = entry_set(ctx, path)?;
    if entry.is_empty() {
        // the quotient strategy stays in a divergent block
        return inert_successors(ctx, v)
            .min()
            .ok_or_else(|| Error::UnstablePartition(format!("block of {v} has no inert successor")));
    }
    let t = target_vertex(ctx, path)?;
    if ctx.game.has_edge(v, t) {
        return Ok(t);
    }
    let dist = match ctx.metric {
        DistanceMetric::Inert => inert_distances(ctx, ctx.block_of(v), t),
        DistanceMetric::Graph => distances_to(ctx.game, t),
    };
    inert_successors(ctx, v)
        .min_by_key(|&u| (dist[u].unwrap_or(usize::MAX), u))
        .ok_or_else(|| Error::UnstablePartition(format!("vertex {v} cannot reach target {t}")))
}

/// [`mimick_next`] exposed as a path-indexed strategy.
pub struct PathStrategyOracle<'a> {
    pub context: LiftContext<'a>,
}

impl PathStrategyOracle<'_> {
    pub fn next(&self, path: &Path) -> Result<Vertex> {
        let w = mimick_next(&self.context, path)?;
        debug_assert!(self.context.game.has_edge(path.last(), w));
        Ok(w)
    }
}

/// The lifted strategy on every player vertex whose block the player wins.
pub fn lift_strategy(ctx: &LiftContext<'_>) -> Result<Strategy> {
    match ctx.metric {
        DistanceMetric::Inert => lift_inert(ctx),
        DistanceMetric::Graph => {
            let mut psi = Strategy::empty(ctx.player, ctx.game.vertex_count());
            for v in ctx.game.vertices() {
                if ctx.game.owner(v) == ctx.player && ctx.quotient_region[ctx.block_of(v)] {
                    psi.set(v, mimick_next(ctx, &Path::single(v))?);
                }
            }
            Ok(psi)
        }
    }
}

/// Linear-time computation of the same moves as `mimick_next` under the
/// inert metric, for all vertices at once.
fn lift_inert(ctx: &LiftContext<'_>) -> Result<Strategy> {
    let game = ctx.game;
    let n = game.vertex_count();
    let relevant = |v: Vertex| game.owner(v) == ctx.player && ctx.quotient_region[ctx.block_of(v)];
    let heading = |v: Vertex| -> Option<Block> {
        let b = ctx.block_of(v);
        ctx.quotient_strategy.get(b).filter(|&c| c != b)
    };

    let inert = Subgraph::build(n, relevant, |v| inert_successors(ctx, v).collect::<Vec<_>>());
    let sccs = inert.sccs();

    // least vertex of the heading block reachable through inert steps,
    // components in reverse topological order
    let mut by_component: Vec<Vec<Vertex>> = vec![Vec::new(); sccs.count];
    for v in (0..n).filter(|&v| relevant(v)) {
        by_component[sccs.component[v]].push(v);
    }
    let mut target = vec![None; n];
    let mut component_target: Vec<Option<Vertex>> = Vec::with_capacity(sccs.count);
    for members in &by_component {
        let mut best: Option<Vertex> = None;
        for &v in members {
            let Some(c) = heading(v) else { continue };
            for &u in game.successors(v) {
                if ctx.block_of(u) == c {
                    best = Some(best.map_or(u, |b| b.min(u)));
                }
            }
            for &u in inert.successors(v) {
                if sccs.component[u] != sccs.component[v] {
                    if let Some(t) = component_target[sccs.component[u]] {
                        best = Some(best.map_or(t, |b| b.min(t)));
                    }
                }
            }
        }
        for &v in members {
            target[v] = best;
        }
        component_target.push(best);
    }

    // inert distance to each vertex's own target
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in (0..n).filter(|&v| relevant(v)) {
        if let Some(t) = target[v] {
            if game.has_edge(v, t) {
                dist[v] = 1;
                queue.push_back(v);
            }
        }
    }
    while let Some(w) = queue.pop_front() {
        for &x in game.predecessors(w) {
            if relevant(x) && ctx.block_of(x) == ctx.block_of(w) && target[x] == target[w] && dist[x] == usize::MAX {
                dist[x] = dist[w] + 1;
                queue.push_back(x);
            }
        }
    }

    let mut psi = Strategy::empty(ctx.player, n);
    for v in (0..n).filter(|&v| relevant(v)) {
        let next = match heading(v) {
            None => inert.successors(v).iter().copied().min().ok_or_else(|| {
                Error::UnstablePartition(format!("block of {v} has no inert successor"))
            })?,
            Some(_) => {
                let t = target[v]
                    .ok_or_else(|| Error::UnstablePartition(format!("vertex {v} cannot reach its target block")))?;
                if game.has_edge(v, t) {
                    t
                } else {
                    inert
                        .successors(v)
                        .iter()
                        .copied()
                        .filter(|&u| target[u] == Some(t))
                        .min_by_key(|&u| (dist[u], u))
                        .ok_or_else(|| Error::UnstablePartition(format!("vertex {v} cannot reach target {t}")))?
                }
            }
        };
        psi.set(v, next);
    }
    Ok(psi)
}

/// Winners and strategies of the original game from a solution of its
/// quotient. Each lifted strategy is verified before it is returned.
pub fn lift_solution(game: &Game, reduction: &Reduction, quotient_solution: &Solution) -> Result<Solution> {
    let winner: Vec<Player> = game.vertices().map(|v| quotient_solution.winner(reduction.map[v])).collect();
    let mut moves = vec![None; game.vertex_count()];
    for player in [Player::Even, Player::Odd] {
        let ctx = LiftContext::from_solution(game, reduction, quotient_solution, player)?;
        let psi = lift_strategy(&ctx)?;
        let region = ctx.preimage_region();
        verify_strategy(game, player, &region, &psi)
            .map_err(|cex| Error::LiftFailed(format!("{player} strategy: {cex}")))?;
        for (v, w) in psi.moves() {
            moves[v] = Some(w);
        }
    }
    Ok(Solution::from_moves(game, winner, &moves))
}
