//! The (2,3) pebble game for Laman sparsity.
//!
//! Every vertex owns two pebbles. An accepted edge is covered by a pebble of
//! its tail and points from tail to head. A pebble is brought to a vertex by
//! finding a directed path to a vertex with a free pebble and reversing it.
//! An edge `uv` is independent iff four pebbles can be gathered on `u` and
//! `v`.

/// Incremental (2,3) pebble game on a fixed vertex set.
#[derive(Debug, Clone)]
pub struct PebbleGame {
    free: Vec<u8>,
    /// `(tail, head)` of each accepted edge.
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    mark: Vec<u32>,
    stamp: u32,
    parent: Vec<usize>,
    stack: Vec<usize>,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame {
            free: vec![2; n],
            arcs: Vec::new(),
            out: vec![Vec::with_capacity(2); n],
            inc: vec![Vec::new(); n],
            mark: vec![0; n],
            stamp: 0,
            parent: vec![usize::MAX; n],
            stack: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.free.len()
    }

    pub fn edge_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn free_pebbles(&self, v: usize) -> u8 {
        self.free[v]
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.fill(0);
            self.stamp = 1;
        }
        self.stamp
    }

    fn reverse(&mut self, arc: usize) {
        let (tail, head) = self.arcs[arc];
        let pos = self.out[tail]
            .iter()
            .position(|&a| a == arc)
            .expect("arc in out-list");
        self.out[tail].swap_remove(pos);
        let pos = self.inc[head]
            .iter()
            .position(|&a| a == arc)
            .expect("arc in in-list");
        self.inc[head].swap_remove(pos);
        self.arcs[arc] = (head, tail);
        self.out[head].push(arc);
        self.inc[tail].push(arc);
    }

    /// Moves one free pebble to `v` from some other vertex, never taking one
    /// from `v` itself or from `locked`. Returns false if none is reachable.
    fn gather_one(&mut self, v: usize, locked: usize) -> bool {
        let stamp = self.next_stamp();
        self.mark[v] = stamp;
        self.stack.clear();
        self.stack.push(v);
        let mut found = None;
        'search: while let Some(x) = self.stack.pop() {
            for i in 0..self.out[x].len() {
                let arc = self.out[x][i];
                let y = self.arcs[arc].1;
                if self.mark[y] == stamp {
                    continue;
                }
                self.mark[y] = stamp;
                self.parent[y] = arc;
                if y != locked && self.free[y] > 0 {
                    found = Some(y);
                    break 'search;
                }
                self.stack.push(y);
            }
        }
        let Some(y) = found else { return false };
        let mut cur = y;
        while cur != v {
            let arc = self.parent[cur];
            let tail = self.arcs[arc].0;
            self.reverse(arc);
            cur = tail;
        }
        self.free[y] -= 1;
        self.free[v] += 1;
        true
    }

    /// Gathers up to `target` free pebbles on `{u, v}` and returns how many
    /// are there.
    fn gather_pair(&mut self, u: usize, v: usize, target: u8) -> u8 {
        while self.free[u] < 2 && self.free[u] + self.free[v] < target && self.gather_one(u, v) {}
        while self.free[v] < 2 && self.free[u] + self.free[v] < target && self.gather_one(v, u) {}
        self.free[u] + self.free[v]
    }

    /// True iff adding `uv` keeps the accepted edge set Laman-sparse. Moves
    /// pebbles around but does not insert.
    pub fn can_add(&mut self, u: usize, v: usize) -> bool {
        u != v && self.gather_pair(u, v, 4) == 4
    }

    /// Inserts `uv` covered by a pebble of `u`. Call only after a successful
    /// [`can_add`](Self::can_add) with no intervening moves.
    pub fn add(&mut self, u: usize, v: usize) {
        debug_assert!(self.free[u] + self.free[v] == 4);
        let arc = self.arcs.len();
        self.arcs.push((u, v));
        self.out[u].push(arc);
        self.inc[v].push(arc);
        self.free[u] -= 1;
    }

    /// Adds `uv` if independent.
    pub fn try_add(&mut self, u: usize, v: usize) -> bool {
        if self.can_add(u, v) {
            self.add(u, v);
            true
        } else {
            false
        }
    }

    /// Largest Laman-tight vertex set (`m' = 2n' − 3`) containing the
    /// endpoints of an accepted edge `uv`, as a membership mask.
    ///
    /// With three pebbles held on `u` and `v`, a vertex belongs to the set
    /// iff it cannot reach any other free pebble.
    pub fn tight_set_of(&mut self, u: usize, v: usize) -> Vec<bool> {
        let got = self.gather_pair(u, v, 3);
        debug_assert_eq!(got, 3, "accepted edge must hold exactly three pebbles");
        let n = self.n();
        let mut reaches_free = vec![false; n];
        let mut stack: Vec<usize> = (0..n)
            .filter(|&w| w != u && w != v && self.free[w] > 0)
            .collect();
        for &w in &stack {
            reaches_free[w] = true;
        }
        while let Some(y) = stack.pop() {
            for &arc in &self.inc[y] {
                let x = self.arcs[arc].0;
                if !reaches_free[x] {
                    reaches_free[x] = true;
                    stack.push(x);
                }
            }
        }
        reaches_free.into_iter().map(|r| !r).collect()
    }
}
