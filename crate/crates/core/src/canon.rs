//! Canonical labeling of small vertex- and edge-colored graphs.
//!
//! Individualization and refinement with automorphism pruning. The graph
//! is refined by iterated neighbourhood colour signatures, cells are split
//! by individualizing vertices of the first non-singleton cell, and the
//! lexicographically least leaf certificate wins. Automorphisms found on
//! the way prune sibling branches that lie in the same orbit of the
//! pointwise stabilizer of the current prefix.

use std::cmp::Ordering;

/// A graph with vertex colours and labelled adjacency. A directed edge
/// `u -> v` is stored as `(v, out)` at `u` and `(u, in)` at `v`.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    colors: Vec<u32>,
    adj: Vec<Vec<(usize, u8)>>,
}

pub const EDGE_UNDIRECTED: u8 = 0;
pub const EDGE_OUT: u8 = 1;
pub const EDGE_IN: u8 = 2;

impl ColoredGraph {
    pub fn new(colors: Vec<u32>) -> Self {
        let n = colors.len();
        Self {
            colors,
            adj: vec![Vec::new(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].push((v, EDGE_UNDIRECTED));
        self.adj[v].push((u, EDGE_UNDIRECTED));
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.adj[u].push((v, EDGE_OUT));
        self.adj[v].push((u, EDGE_IN));
    }

    fn rank_initial(&self) -> Vec<u32> {
        let mut distinct: Vec<u32> = self.colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        self.colors
            .iter()
            .map(|c| distinct.binary_search(c).unwrap() as u32)
            .collect()
    }

    /// Refine until stable. Colours stay ranks `0..k` and every new cell
    /// keeps the relative order of its parent cell.
    fn refine(&self, mut cells: Vec<u32>) -> Vec<u32> {
        let n = self.len();
        let mut count = distinct_count(&cells);
        loop {
            let mut sigs: Vec<(u32, Vec<(u32, u8)>, usize)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(u32, u8)> =
                        self.adj[v].iter().map(|&(w, l)| (cells[w], l)).collect();
                    nb.sort_unstable();
                    (cells[v], nb, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = vec![0u32; n];
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    rank += 1;
                }
                next[sigs[i].2] = rank;
            }
            let new_count = if n == 0 { 0 } else { rank as usize + 1 };
            cells = next;
            if new_count == count {
                return cells;
            }
            count = new_count;
        }
    }

    fn individualize(cells: &[u32], v: usize) -> Vec<u32> {
        let mut keyed: Vec<(u32, u8, usize)> = cells
            .iter()
            .enumerate()
            .map(|(u, &c)| (c, u8::from(u != v), u))
            .collect();
        keyed.sort_unstable();
        let mut next = vec![0u32; cells.len()];
        let mut rank = 0u32;
        for i in 0..keyed.len() {
            if i > 0 && (keyed[i].0, keyed[i].1) != (keyed[i - 1].0, keyed[i - 1].1) {
                rank += 1;
            }
            next[keyed[i].2] = rank;
        }
        next
    }

    fn certificate(&self, position: &[u32]) -> Vec<u64> {
        let n = self.len();
        let mut order = vec![0usize; n];
        for (v, &p) in position.iter().enumerate() {
            order[p as usize] = v;
        }
        let mut out = Vec::with_capacity(n * 4);
        out.push(n as u64);
        for &v in &order {
            out.push(self.colors[v] as u64);
        }
        for &v in &order {
            let mut nb: Vec<u64> = self.adj[v]
                .iter()
                .map(|&(w, l)| ((position[w] as u64) << 8) | l as u64)
                .collect();
            nb.sort_unstable();
            out.push(u64::MAX);
            out.extend(nb);
        }
        out
    }

    /// Compute the canonical labeling.
    pub fn canonical(&self) -> CanonicalLabeling {
        let mut search = Search {
            graph: self,
            best: None,
            first: None,
            automorphisms: Vec::new(),
        };
        let start = self.refine(self.rank_initial());
        search.descend(start, &mut Vec::new());
        let (position, certificate) = search.best.expect("search visits at least one leaf");
        let mut order = vec![0usize; self.len()];
        for (v, &p) in position.iter().enumerate() {
            order[p as usize] = v;
        }
        CanonicalLabeling {
            order,
            certificate,
            automorphisms: search.automorphisms,
        }
    }
}

fn distinct_count(cells: &[u32]) -> usize {
    let mut c = cells.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Result of canonical labeling.
#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Isomorphism-invariant encoding of the relabeled graph.
    pub certificate: Vec<u64>,
    /// Automorphisms discovered during the search (not necessarily a full
    /// generating set).
    pub automorphisms: Vec<Vec<usize>>,
}

impl CanonicalLabeling {
    pub fn certificate_bytes(&self) -> Vec<u8> {
        self.certificate
            .iter()
            .flat_map(|x| x.to_be_bytes())
            .collect()
    }

    /// Position of each original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

struct Search<'a> {
    graph: &'a ColoredGraph,
    best: Option<(Vec<u32>, Vec<u64>)>,
    first: Option<(Vec<u32>, Vec<u64>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u32>, prefix: &mut Vec<usize>) {
        let n = self.graph.len();
        let k = distinct_count(&cells);
        if k == n {
            self.leaf(cells);
            return;
        }
        let mut sizes = vec![0usize; k];
        for &c in &cells {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let members: Vec<usize> = (0..n).filter(|&v| cells[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let child = self.graph.refine(ColoredGraph::individualize(&cells, v));
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.graph.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&u| gamma[u] != u) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, position: Vec<u32>) {
        let cert = self.graph.certificate(&position);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.1 == cert {
                // reference^{-1} o position
                let n = position.len();
                let mut inv = vec![0usize; n];
                for (v, &p) in reference.0.iter().enumerate() {
                    inv[p as usize] = v;
                }
                let gamma: Vec<usize> = (0..n).map(|v| inv[position[v] as usize]).collect();
                if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((position.clone(), cert.clone()));
        }
        match &self.best {
            Some((_, best)) if best.cmp(&cert) != Ordering::Greater => {}
            _ => self.best = Some((position, cert)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, shift: usize) -> ColoredGraph {
        let mut g = ColoredGraph::new(vec![0; n]);
        for i in 0..n {
            g.add_edge((i + shift) % n, (i + 1 + shift) % n);
        }
        g
    }

    #[test]
    fn relabeled_cycles_share_certificate() {
        assert_eq!(cycle(8, 0).canonical().certificate, cycle(8, 3).canonical().certificate);
    }

    #[test]
    fn cycle_and_two_squares_differ() {
        let mut two = ColoredGraph::new(vec![0; 8]);
        for base in [0, 4] {
            for i in 0..4 {
                two.add_edge(base + i, base + (i + 1) % 4);
            }
        }
        assert_ne!(cycle(8, 0).canonical().certificate, two.canonical().certificate);
    }

    #[test]
    fn arcs_are_oriented() {
        let mut a = ColoredGraph::new(vec![0; 3]);
        a.add_arc(0, 1);
        a.add_arc(0, 2);
        let mut b = ColoredGraph::new(vec![0; 3]);
        b.add_arc(1, 0);
        b.add_arc(2, 0);
        assert_ne!(a.canonical().certificate, b.canonical().certificate);
    }

    #[test]
    fn found_automorphisms_are_automorphisms() {
        let g = cycle(10, 0);
        let c = g.canonical();
        for gamma in &c.automorphisms {
            for i in 0..10 {
                let (a, b) = (gamma[i], gamma[(i + 1) % 10]);
                assert!((a + 1) % 10 == b || (b + 1) % 10 == a);
            }
        }
    }

    #[test]
    fn empty_graph() {
        let g = ColoredGraph::new(vec![]);
        assert!(g.canonical().order.is_empty());
    }
}
