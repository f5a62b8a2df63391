use super::{Game, Player, Vertex};
use crate::error::{Error, Result};

/// A non-empty finite sequence of vertices following game edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path(Vec<Vertex>);

impl Path {
    pub fn new(game: &Game, vertices: Vec<Vertex>) -> Result<Path> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= game.vertex_count()) {
            return Err(Error::InvalidPath(format!("vertex {v} does not exist")));
        }
        if let Some(pair) = vertices.windows(2).find(|p| !game.has_edge(p[0], p[1])) {
            return Err(Error::InvalidPath(format!("no edge {} -> {}", pair[0], pair[1])));
        }
        Ok(Path(vertices))
    }

    pub fn single(v: Vertex) -> Path {
        Path(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn last(&self) -> Vertex {
        *self.0.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Appends `w`; the caller guarantees the edge exists.
    pub fn push(&mut self, w: Vertex) {
        self.0.push(w);
    }
}

/// An eventually periodic infinite path: `prefix` followed by `cycle`
/// repeated forever. The prefix may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Play {
    pub prefix: Vec<Vertex>,
    pub cycle: Vec<Vertex>,
}

impl Play {
    /// Least priority on the cycle, which decides the winner.
    pub fn recurring_priority(&self, game: &Game) -> u32 {
        self.cycle.iter().map(|&v| game.priority(v)).min().unwrap()
    }

    pub fn winner(&self, game: &Game) -> Player {
        Player::of_priority(self.recurring_priority(game))
    }
}

/// A memoryless, possibly partial, strategy for one player.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    player: Player,
    moves: Vec<Option<Vertex>>,
}

impl Strategy {
    pub fn empty(player: Player, vertex_count: usize) -> Strategy {
        Strategy { player, moves: vec![None; vertex_count] }
    }

    /// Builds a strategy, checking ownership and edges.
    pub fn from_moves(game: &Game, player: Player, moves: &[(Vertex, Vertex)]) -> Result<Strategy> {
        let mut s = Strategy::empty(player, game.vertex_count());
        for &(v, w) in moves {
            s.set(v, w);
        }
        s.check(game)?;
        Ok(s)
    }

    pub fn player(&self) -> Player {
        self.player
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.moves[v]
    }

    pub fn set(&mut self, v: Vertex, w: Vertex) {
        self.moves[v] = Some(w);
    }

    pub fn unset(&mut self, v: Vertex) {
        self.moves[v] = None;
    }

    pub fn is_defined(&self, v: Vertex) -> bool {
        self.moves[v].is_some()
    }

    /// Vertices where the strategy is defined, ascending.
    pub fn domain(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.moves.iter().enumerate().filter_map(|(v, m)| m.map(|_| v))
    }

    pub fn moves(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.moves.iter().enumerate().filter_map(|(v, m)| m.map(|w| (v, w)))
    }

    /// Every mapped vertex is owned by the player and every move is an edge.
    pub fn check(&self, game: &Game) -> Result<()> {
        if self.moves.len() != game.vertex_count() {
            return Err(Error::InvalidStrategy("strategy size differs from game".into()));
        }
        for (v, w) in self.moves() {
            if game.owner(v) != self.player {
                return Err(Error::InvalidStrategy(format!("vertex {v} is not owned by {}", self.player)));
            }
            if !game.has_edge(v, w) {
                return Err(Error::InvalidStrategy(format!("no edge {v} -> {w}")));
            }
        }
        Ok(())
    }
}

/// Whether `path` follows `strategy` at every position the strategy
/// controls.
pub fn consistent(game: &Game, path: &Path, strategy: &Strategy) -> bool {
    path.vertices().windows(2).all(|step| {
        let v = step[0];
        game.owner(v) != strategy.player() || strategy.get(v).is_none_or(|w| w == step[1])
    })
}

/// Plays both strategies from `start` until a vertex repeats.
///
/// Returns the resulting lasso and the winner of the infinite play.
pub fn play_from(
    game: &Game,
    even: &Strategy,
    odd: &Strategy,
    start: Vertex,
) -> Result<(Play, Player)> {
    let mut position = vec![usize::MAX; game.vertex_count()];
    let mut trace = Vec::new();
    let mut v = start;
    while position[v] == usize::MAX {
        position[v] = trace.len();
        trace.push(v);
        let strategy = match game.owner(v) {
            Player::Even => even,
            Player::Odd => odd,
        };
        v = strategy.get(v).ok_or(Error::UndefinedStrategy(v))?;
    }
    let cycle = trace.split_off(position[v]);
    let play = Play { prefix: trace, cycle };
    let winner = play.winner(game);
    Ok((play, winner))
}
