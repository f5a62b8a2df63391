//! Parity game representation.
//!
//! A [`Game`] is an immutable, validated, total directed graph with a
//! priority and an owner per vertex. All algorithms in this crate use the
//! min-parity winning condition: the parity of the least priority seen
//! infinitely often decides the winner. Max-parity inputs are converted at
//! the I/O boundary with [`convert_priorities`].

mod order;
mod path;
pub mod pgsolver;

pub use order::{cmp_proximity, distance, distances_to, min_vertex, Proximity};
pub use path::{consistent, play_from, Path, Play, Strategy};

use std::fmt;

use crate::error::{Error, Result};

/// Vertex index. Vertices are always the dense range `0..n`.
pub type Vertex = usize;

/// Vertex priority (Ω).
pub type Priority = u32;

/// One of the two players.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// The player who wins a play whose least recurring priority is `p`.
    pub fn of_priority(p: Priority) -> Player {
        if p.is_multiple_of(2) {
            Player::Even
        } else {
            Player::Odd
        }
    }

    pub fn index(self) -> usize {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }

    pub fn from_index(i: u64) -> Option<Player> {
        match i {
            0 => Some(Player::Even),
            1 => Some(Player::Odd),
            _ => None,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Even => f.write_str("even"),
            Player::Odd => f.write_str("odd"),
        }
    }
}

/// An unchecked game description, as produced by a parser or a test.
///
/// Turn it into a [`Game`] with [`Game::from_raw`]; [`validate`] lists
/// everything that would prevent that.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawGame {
    pub priority: Vec<Priority>,
    pub owner: Vec<Player>,
    pub successors: Vec<Vec<Vertex>>,
    pub names: Vec<Option<String>>,
}

impl RawGame {
    pub fn with_vertices(n: usize) -> RawGame {
        RawGame {
            priority: vec![0; n],
            owner: vec![Player::Even; n],
            successors: vec![Vec::new(); n],
            names: vec![None; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.priority.len()
    }

    pub fn set_vertex(&mut self, v: Vertex, priority: Priority, owner: Player, succ: &[Vertex]) {
        self.priority[v] = priority;
        self.owner[v] = owner;
        self.successors[v] = succ.to_vec();
    }
}

/// A broken game invariant, naming the offending vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The vertex has no successor.
    Totality(Vertex),
    /// An edge points outside `0..n`.
    DanglingEdge { from: Vertex, to: Vertex },
    /// The successor list contains the same vertex twice.
    DuplicateSuccessor { vertex: Vertex, successor: Vertex },
    /// The successor list is not in ascending order.
    UnsortedSuccessors(Vertex),
    /// The per-vertex tables have different lengths.
    LengthMismatch,
    /// The predecessor table is not the inverse of the successor table.
    PredecessorMismatch(Vertex),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Totality(v) => write!(f, "totality({v}): vertex has no successor"),
            Violation::DanglingEdge { from, to } => {
                write!(f, "dangling_edge({from} -> {to}): successor does not exist")
            }
            Violation::DuplicateSuccessor { vertex, successor } => {
                write!(f, "duplicate_successor({vertex} -> {successor})")
            }
            Violation::UnsortedSuccessors(v) => write!(f, "unsorted_successors({v})"),
            Violation::LengthMismatch => f.write_str("length_mismatch"),
            Violation::PredecessorMismatch(v) => write!(f, "predecessor_mismatch({v})"),
        }
    }
}

/// Checks every game invariant on an unchecked description.
pub fn validate(raw: &RawGame) -> Vec<Violation> {
    let n = raw.priority.len();
    let mut out = Vec::new();
    if raw.owner.len() != n || raw.successors.len() != n || (!raw.names.is_empty() && raw.names.len() != n) {
        out.push(Violation::LengthMismatch);
        return out;
    }
    for (v, succ) in raw.successors.iter().enumerate() {
        if succ.is_empty() {
            out.push(Violation::Totality(v));
        }
        for &w in succ {
            if w >= n {
                out.push(Violation::DanglingEdge { from: v, to: w });
            }
        }
        for pair in succ.windows(2) {
            if pair[0] == pair[1] {
                out.push(Violation::DuplicateSuccessor { vertex: v, successor: pair[0] });
            } else if pair[0] > pair[1] {
                out.push(Violation::UnsortedSuccessors(v));
            }
        }
    }
    out
}

/// A validated parity game in compressed adjacency form.
#[derive(Clone, PartialEq, Eq)]
pub struct Game {
    priority: Vec<Priority>,
    owner: Vec<Player>,
    succ_start: Vec<usize>,
    succ: Vec<Vertex>,
    pred_start: Vec<usize>,
    pred: Vec<Vertex>,
    names: Vec<Option<String>>,
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_map();
        for v in self.vertices() {
            list.entry(
                &v,
                &format_args!("({}, {}) -> {:?}", self.priority(v), self.owner(v), self.successors(v)),
            );
        }
        list.finish()
    }
}

impl Game {
    /// Builds a game, sorting and deduplicating successor lists first.
    ///
    /// Fails if any vertex has no successor or an edge leaves `0..n`.
    pub fn from_raw(mut raw: RawGame) -> Result<Game> {
        for succ in &mut raw.successors {
            succ.sort_unstable();
            succ.dedup();
        }
        let violations = validate(&raw);
        if !violations.is_empty() {
            return Err(Error::InvalidGame(violations));
        }
        Ok(Game::from_normalised(raw))
    }

    /// Convenience constructor for tests and fixtures.
    pub fn from_parts(vertices: &[(Priority, Player, &[Vertex])]) -> Result<Game> {
        let mut raw = RawGame::with_vertices(vertices.len());
        for (v, &(p, o, succ)) in vertices.iter().enumerate() {
            raw.set_vertex(v, p, o, succ);
        }
        Game::from_raw(raw)
    }

    fn from_normalised(raw: RawGame) -> Game {
        let n = raw.priority.len();
        let mut succ_start = Vec::with_capacity(n + 1);
        let mut succ = Vec::new();
        let mut in_degree = vec![0usize; n];
        succ_start.push(0);
        for list in &raw.successors {
            for &w in list {
                in_degree[w] += 1;
            }
            succ.extend_from_slice(list);
            succ_start.push(succ.len());
        }
        let mut pred_start = Vec::with_capacity(n + 1);
        pred_start.push(0);
        for d in &in_degree {
            pred_start.push(pred_start.last().unwrap() + d);
        }
        let mut fill = pred_start.clone();
        let mut pred = vec![0; succ.len()];
        // Sources are visited in ascending order, so every predecessor list
        // comes out sorted.
        for (v, list) in raw.successors.iter().enumerate() {
            for &w in list {
                pred[fill[w]] = v;
                fill[w] += 1;
            }
        }
        let names = if raw.names.is_empty() { vec![None; n] } else { raw.names };
        Game { priority: raw.priority, owner: raw.owner, succ_start, succ, pred_start, pred, names }
    }

    pub fn vertex_count(&self) -> usize {
        self.priority.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    pub fn priority(&self, v: Vertex) -> Priority {
        self.priority[v]
    }

    pub fn owner(&self, v: Vertex) -> Player {
        self.owner[v]
    }

    pub fn name(&self, v: Vertex) -> Option<&str> {
        self.names[v].as_deref()
    }

    pub fn priorities(&self) -> &[Priority] {
        &self.priority
    }

    pub fn owners(&self) -> &[Player] {
        &self.owner
    }

    /// Successors of `v`, ascending.
    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.succ[self.succ_start[v]..self.succ_start[v + 1]]
    }

    /// Predecessors of `v`, ascending.
    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.pred[self.pred_start[v]..self.pred_start[v + 1]]
    }

    pub fn has_edge(&self, v: Vertex, w: Vertex) -> bool {
        self.successors(v).binary_search(&w).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |v| self.successors(v).iter().map(move |&w| (v, w)))
    }

    pub fn max_priority(&self) -> Priority {
        self.priority.iter().copied().max().unwrap_or(0)
    }

    /// Back to an unchecked description (for editing in tests).
    pub fn to_raw(&self) -> RawGame {
        RawGame {
            priority: self.priority.clone(),
            owner: self.owner.clone(),
            successors: self.vertices().map(|v| self.successors(v).to_vec()).collect(),
            names: self.names.clone(),
        }
    }

    /// Re-checks all invariants, including the predecessor table.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = validate(&self.to_raw());
        for w in self.vertices() {
            let expected: Vec<Vertex> = self.vertices().filter(|&v| self.has_edge(v, w)).collect();
            if expected != self.predecessors(w) {
                out.push(Violation::PredecessorMismatch(w));
            }
        }
        out
    }

    /// Same graph with owners swapped and priorities shifted by one, so
    /// each player's objective becomes the other's.
    pub fn dual(&self) -> Game {
        let mut dual = self.clone();
        for p in &mut dual.priority {
            *p += 1;
        }
        for o in &mut dual.owner {
            *o = o.opponent();
        }
        dual
    }
}

/// Counts reported for a game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub priority_count: usize,
    pub priorities_present: Vec<Priority>,
}

pub fn stats(game: &Game) -> GameStats {
    let mut present = game.priorities().to_vec();
    present.sort_unstable();
    present.dedup();
    GameStats {
        vertex_count: game.vertex_count(),
        edge_count: game.edge_count(),
        priority_count: present.len(),
        priorities_present: present,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvertDirection {
    MaxToMin,
    MinToMax,
}

/// Maps every priority `p` to `d - p`, where `d` is the maximum priority
/// rounded up to an even number.
///
/// Parities are preserved and the order is reversed, so "least priority
/// seen infinitely often" under one convention corresponds to "greatest"
/// under the other. The operation is an involution for a fixed `d`, and
/// `d` is unchanged by it whenever the minimum priority is 0 or 1.
pub fn convert_priorities(game: &Game, _direction: ConvertDirection) -> Game {
    let max = game.max_priority();
    let d = max + max % 2;
    let mut out = game.clone();
    for p in &mut out.priority {
        *p = d - *p;
    }
    out
}
