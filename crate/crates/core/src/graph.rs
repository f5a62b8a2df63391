//! Plain directed-graph helpers shared by the reduction, solver and
//! verification code.

use crate::game::Vertex;

/// An explicit subgraph in compressed adjacency form. Vertices outside
/// the subgraph simply have no edges and are flagged as non-members.
pub(crate) struct Subgraph {
    member: Vec<bool>,
    start: Vec<usize>,
    succ: Vec<Vertex>,
}

impl Subgraph {
    pub fn build<I>(n: usize, member: impl Fn(Vertex) -> bool, mut edges: impl FnMut(Vertex) -> I) -> Subgraph
    where
        I: IntoIterator<Item = Vertex>,
    {
        let member: Vec<bool> = (0..n).map(member).collect();
        let mut start = Vec::with_capacity(n + 1);
        let mut succ = Vec::new();
        start.push(0);
        for v in 0..n {
            if member[v] {
                succ.extend(edges(v).into_iter().filter(|&w| member[w]));
            }
            start.push(succ.len());
        }
        Subgraph { member, start, succ }
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.succ[self.start[v]..self.start[v + 1]]
    }

    pub fn is_member(&self, v: Vertex) -> bool {
        self.member[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.member.len()
    }

    /// Strongly connected components (Tarjan, iterative).
    ///
    /// Components are numbered in the order Tarjan completes them, which is
    /// a reverse topological order: every edge leaving component `c` enters
    /// a component with a smaller number.
    pub fn sccs(&self) -> Sccs {
        const UNVISITED: usize = usize::MAX;
        let n = self.vertex_count();
        let mut index = vec![UNVISITED; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut component = vec![NO_COMPONENT; n];
        let mut stack = Vec::new();
        let mut call: Vec<(Vertex, usize)> = Vec::new();
        let mut next_index = 0;
        let mut count = 0;

        for root in 0..n {
            if !self.member[root] || index[root] != UNVISITED {
                continue;
            }
            call.push((root, 0));
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut edge)) = call.last_mut() {
                let succ = self.successors(v);
                if *edge < succ.len() {
                    let w = succ[*edge];
                    *edge += 1;
                    if index[w] == UNVISITED {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        component[w] = count;
                        if w == v {
                            break;
                        }
                    }
                    count += 1;
                }
            }
        }

        let mut size = vec![0usize; count];
        let mut cyclic = vec![false; count];
        for v in 0..n {
            let c = component[v];
            if c == NO_COMPONENT {
                continue;
            }
            size[c] += 1;
            if self.successors(v).contains(&v) {
                cyclic[c] = true;
            }
        }
        for c in 0..count {
            if size[c] > 1 {
                cyclic[c] = true;
            }
        }
        Sccs { component, cyclic, count }
    }

    /// Vertices with an infinite path inside the subgraph, i.e. those that
    /// can reach a cycle.
    pub fn can_reach_cycle(&self) -> Vec<bool> {
        let sccs = self.sccs();
        let mut reach = vec![false; sccs.count];
        let mut order: Vec<Vertex> = (0..self.vertex_count()).filter(|&v| self.member[v]).collect();
        // components are numbered sinks first
        order.sort_by_key(|&v| sccs.component[v]);
        for &v in &order {
            let c = sccs.component[v];
            if sccs.cyclic[c] || self.successors(v).iter().any(|&w| reach[sccs.component[w]]) {
                reach[c] = true;
            }
        }
        (0..self.vertex_count())
            .map(|v| self.member[v] && reach[sccs.component[v]])
            .collect()
    }

    /// Shortest path from `from` to `to` (inclusive), by BFS.
    pub fn shortest_path(&self, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &w in self.successors(v) {
                if w == to {
                    let mut path = vec![to];
                    let mut cur = v;
                    loop {
                        path.push(cur);
                        if cur == from {
                            break;
                        }
                        cur = parent[cur];
                    }
                    path.reverse();
                    return Some(path);
                }
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

pub(crate) const NO_COMPONENT: usize = usize::MAX;

pub(crate) struct Sccs {
    pub component: Vec<usize>,
    /// Whether the component contains a cycle (size > 1 or a self-loop).
    pub cyclic: Vec<bool>,
    pub count: usize,
}
