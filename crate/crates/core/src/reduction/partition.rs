use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use crate::game::{Game, Vertex};

/// Block identifier. Blocks are numbered densely in order of their least
/// member.
pub type Block = usize;

/// A partition of the vertex set into blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<Block>,
    blocks: Vec<Vec<Vertex>>,
    divergent: Vec<bool>,
}

impl Partition {
    /// Groups vertices by an arbitrary key and renumbers the groups by
    /// least member.
    pub fn from_keys<K: Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Partition {
        let mut ids: HashMap<K, Block> = HashMap::new();
        let mut block_of = Vec::new();
        let mut blocks: Vec<Vec<Vertex>> = Vec::new();
        for (v, key) in keys.into_iter().enumerate() {
            let next = ids.len();
            let b = *ids.entry(key).or_insert(next);
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(v);
            block_of.push(b);
        }
        let divergent = vec![false; blocks.len()];
        Partition { block_of, blocks, divergent }
    }

    /// Every vertex in its own block.
    pub fn discrete(n: usize) -> Partition {
        Partition::from_keys(0..n)
    }

    pub fn block_of(&self, v: Vertex) -> Block {
        self.block_of[v]
    }

    pub fn block_map(&self) -> &[Block] {
        &self.block_of
    }

    /// Members of block `b`, ascending.
    pub fn block(&self, b: Block) -> &[Vertex] {
        &self.blocks[b]
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.block_of.len()
    }

    /// ⊓ of the block.
    pub fn representative(&self, b: Block) -> Vertex {
        self.blocks[b][0]
    }

    pub fn is_divergent(&self, b: Block) -> bool {
        self.divergent[b]
    }

    pub(crate) fn set_divergent(&mut self, divergent: Vec<bool>) {
        debug_assert_eq!(divergent.len(), self.blocks.len());
        self.divergent = divergent;
    }

    pub fn same_block(&self, v: Vertex, w: Vertex) -> bool {
        self.block_of[v] == self.block_of[w]
    }

    /// Every block of `self` lies inside a single block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.blocks.iter().all(|b| b.iter().all(|&v| coarser.same_block(v, b[0])))
    }

    /// Equality of the induced equivalence, ignoring divergence flags.
    pub fn same_classes(&self, other: &Partition) -> bool {
        self.block_of == other.block_of
    }

    /// Debug dump: one `<vertex> <block> <divergent>` line per vertex.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (v, &b) in self.block_of.iter().enumerate() {
            writeln!(out, "{v} {b} {}", u8::from(self.divergent[b])).unwrap();
        }
        out
    }
}

/// Blocks of vertices with equal priority and owner.
pub fn initial_partition(game: &Game) -> Partition {
    Partition::from_keys(game.vertices().map(|v| (game.priority(v), game.owner(v))))
}
