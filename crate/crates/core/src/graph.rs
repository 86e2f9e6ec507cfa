//! The non-incidence graph of a polytope: facet nodes, vertex nodes, and an
//! edge for every 1 in the support. Chordless cycles, cycle binomials and
//! the connectivity test for vertex splits live here.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::cas::poly::{rat, Polynomial};
use crate::error::{Error, Result};
use crate::polytope::CombPolytope;

/// Output cap for cycle enumeration.
pub const CYCLE_CAP: usize = 100_000;

/// A cycle as a node sequence in canonical rotation and direction.
pub type Cycle = Vec<usize>;

#[derive(Debug, Clone)]
pub struct NonIncidenceGraph {
    m: usize,
    n: usize,
    facet_labels: Vec<String>,
    vertex_labels: Vec<String>,
    adj: Vec<FixedBitSet>,
    nbrs: Vec<Vec<usize>>,
    /// `(facet row, vertex column)` per edge, row-major.
    edges: Vec<(usize, usize)>,
    edge_id: Vec<Vec<Option<usize>>>,
}

impl NonIncidenceGraph {
    pub fn new(p: &CombPolytope) -> Self {
        let mut g = Self::from_support(p.support());
        g.facet_labels = p.facets().to_vec();
        g.vertex_labels = p.vertices().to_vec();
        g
    }

    /// Graph of a raw 0/1 matrix; labels default to `F{i}` and `v{j}`.
    pub fn from_support(support: &[Vec<u8>]) -> Self {
        let m = support.len();
        let n = support.first().map_or(0, Vec::len);
        let mut adj = vec![FixedBitSet::with_capacity(m + n); m + n];
        let mut nbrs = vec![Vec::new(); m + n];
        let mut edges = Vec::new();
        let mut edge_id = vec![vec![None; n]; m];
        for (f, row) in support.iter().enumerate() {
            for (v, &x) in row.iter().enumerate() {
                if x == 1 {
                    edge_id[f][v] = Some(edges.len());
                    edges.push((f, v));
                    adj[f].insert(m + v);
                    adj[m + v].insert(f);
                    nbrs[f].push(m + v);
                    nbrs[m + v].push(f);
                }
            }
        }
        Self {
            m,
            n,
            facet_labels: (0..m).map(|i| format!("F{i}")).collect(),
            vertex_labels: (0..n).map(|j| format!("v{j}")).collect(),
            adj,
            nbrs,
            edges,
            edge_id,
        }
    }

    pub fn num_facets(&self) -> usize {
        self.m
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_nodes(&self) -> usize {
        self.m + self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// `(facet row, vertex column)` of every edge in variable order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_facet_node(&self, u: usize) -> bool {
        u < self.m
    }

    pub fn facet_node(&self, f: usize) -> usize {
        f
    }

    pub fn vertex_node(&self, v: usize) -> usize {
        self.m + v
    }

    pub fn node_label(&self, u: usize) -> &str {
        if u < self.m {
            &self.facet_labels[u]
        } else {
            &self.vertex_labels[u - self.m]
        }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.nbrs[u]
    }

    /// Edge (variable) index between two adjacent nodes, in either order.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        let (f, v) = if a < self.m { (a, b) } else { (b, a) };
        if f >= self.m || v < self.m {
            return None;
        }
        self.edge_id[f][v - self.m]
    }

    /// Connected components of the subgraph induced by `alive`, each sorted.
    pub fn components_within(&self, alive: &FixedBitSet) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.num_nodes());
        let mut out = Vec::new();
        for s in alive.ones() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &self.nbrs[u] {
                    if alive.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        q.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut all = FixedBitSet::with_capacity(self.num_nodes());
        all.insert_range(..);
        self.components_within(&all)
    }

    /// All chordless cycles of length at most `max_len`, with the default
    /// output cap.
    pub fn chordless_cycles(&self, max_len: Option<usize>) -> Result<Vec<Cycle>> {
        self.chordless_cycles_capped(max_len, CYCLE_CAP)
    }

    /// Induced cycles, grown as induced paths from their smallest node.
    pub fn chordless_cycles_capped(&self, max_len: Option<usize>, cap: usize) -> Result<Vec<Cycle>> {
        let max_len = max_len.unwrap_or(usize::MAX);
        let mut out = Vec::new();
        for s in 0..self.num_nodes() {
            for &a in &self.nbrs[s] {
                if a > s {
                    let mut path = vec![s, a];
                    let mut on = FixedBitSet::with_capacity(self.num_nodes());
                    on.insert(s);
                    on.insert(a);
                    self.extend(&mut path, &mut on, max_len, cap, &mut out)?;
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    fn extend(
        &self,
        path: &mut Vec<usize>,
        on: &mut FixedBitSet,
        max_len: usize,
        cap: usize,
        out: &mut Vec<Cycle>,
    ) -> Result<()> {
        let s = path[0];
        let u = *path.last().unwrap();
        let k = path.len();
        for &w in &self.nbrs[u] {
            if w <= s || on.contains(w) {
                continue;
            }
            // chords to interior path nodes
            if path[1..k - 1].iter().any(|&x| self.adj[w].contains(x)) {
                continue;
            }
            if self.adj[w].contains(s) {
                if k >= 3 && k < max_len && path[1] < w {
                    if out.len() == cap {
                        return Err(Error::CapExceeded { found: cap, cap });
                    }
                    let mut c = path.clone();
                    c.push(w);
                    out.push(c);
                }
                continue;
            }
            if k + 1 < max_len {
                path.push(w);
                on.insert(w);
                self.extend(path, on, max_len, cap, out)?;
                on.set(w, false);
                path.pop();
            }
        }
        Ok(())
    }

    /// Orient a cycle along its node order.
    pub fn orient(&self, cycle: &[usize]) -> Result<OrientedEdgeSet> {
        let l = cycle.len();
        let mut edges = Vec::with_capacity(l);
        for i in 0..l {
            let (a, b) = (cycle[i], cycle[(i + 1) % l]);
            let e = self
                .edge_between(a, b)
                .ok_or_else(|| Error::InvalidSupport(format!("nodes {a} and {b} are not adjacent")))?;
            let dir = if self.is_facet_node(a) {
                Direction::FacetToVertex
            } else {
                Direction::VertexToFacet
            };
            edges.push((e, dir));
        }
        OrientedEdgeSet::new(edges)
    }

    /// Binomial of a cycle oriented along its node order.
    pub fn cycle_binomial(&self, cycle: &[usize]) -> Result<Polynomial> {
        Ok(cycle_binomial(&self.orient(cycle)?, self.num_edges()))
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for u in 0..self.num_nodes() {
            let shape = if self.is_facet_node(u) { "box" } else { "circle" };
            let _ = writeln!(s, "  n{u} [label={:?}, shape={shape}];", self.node_label(u));
        }
        for (e, &(f, v)) in self.edges.iter().enumerate() {
            let _ = writeln!(s, "  n{f} -- n{} [label=\"x{}\"];", self.m + v, e + 1);
        }
        s.push_str("}\n");
        s
    }
}

/// Rotate so the smallest node is first, then pick the direction whose
/// second node is smaller.
pub fn canonical_cycle(nodes: &[usize]) -> Cycle {
    let l = nodes.len();
    if l == 0 {
        return Vec::new();
    }
    let i = (0..l).min_by_key(|&i| nodes[i]).unwrap();
    let fwd: Cycle = (0..l).map(|k| nodes[(i + k) % l]).collect();
    if l > 2 && fwd[1] > fwd[l - 1] {
        let mut rev = vec![fwd[0]];
        rev.extend(fwd[1..].iter().rev());
        rev
    } else {
        fwd
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    FacetToVertex,
    VertexToFacet,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::FacetToVertex => Direction::VertexToFacet,
            Direction::VertexToFacet => Direction::FacetToVertex,
        }
    }
}

/// A collection of oriented edges, each edge at most once per direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedEdgeSet {
    edges: Vec<(usize, Direction)>,
}

impl OrientedEdgeSet {
    pub fn new(edges: Vec<(usize, Direction)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(e, d) in &edges {
            if !seen.insert((e, d)) {
                return Err(Error::InvalidOrientation(e));
            }
        }
        Ok(Self { edges })
    }

    pub fn edges(&self) -> &[(usize, Direction)] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn reversed(&self) -> Self {
        Self {
            edges: self.edges.iter().map(|&(e, d)| (e, d.flip())).collect(),
        }
    }

    /// Edges sorted, for order-free comparison.
    pub fn sorted(&self) -> Vec<(usize, Direction)> {
        let mut v = self.edges.clone();
        v.sort_unstable();
        v
    }
}

/// `C1 + C2`: drop the edges of `C1` that occur reversed in `C2` together
/// with their reversals, then take the union of what remains.
pub fn cycle_sum(c1: &OrientedEdgeSet, c2: &OrientedEdgeSet) -> Result<OrientedEdgeSet> {
    let cancel = |e: usize, d: Direction, other: &OrientedEdgeSet| other.edges.contains(&(e, d.flip()));
    let mut out: Vec<(usize, Direction)> = c1.edges.iter().copied().filter(|&(e, d)| !cancel(e, d, c2)).collect();
    out.extend(c2.edges.iter().copied().filter(|&(e, d)| !cancel(e, d, c1)));
    OrientedEdgeSet::new(out)
}

/// Facet-to-vertex edges form the positive monomial, vertex-to-facet edges
/// the negative one.
pub fn cycle_binomial(c: &OrientedEdgeSet, nvars: usize) -> Polynomial {
    let mut pos = vec![0u32; nvars];
    let mut neg = vec![0u32; nvars];
    for &(e, d) in &c.edges {
        match d {
            Direction::FacetToVertex => pos[e] += 1,
            Direction::VertexToFacet => neg[e] += 1,
        }
    }
    &Polynomial::monomial(nvars, pos, rat(1)) - &Polynomial::monomial(nvars, neg, rat(1))
}

/// Outcome of the connectivity test for splitting a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitCondition {
    Safe,
    PyramidApex,
    /// Two separated node sets of the component of `p` after deleting `p`
    /// and its neighbors.
    Unsafe { left: Vec<usize>, right: Vec<usize> },
}

impl SplitCondition {
    pub fn is_safe(&self) -> bool {
        !matches!(self, SplitCondition::Unsafe { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            SplitCondition::Safe => "Safe",
            SplitCondition::PyramidApex => "PyramidApex",
            SplitCondition::Unsafe { .. } => "Unsafe",
        }
    }
}

pub fn vertex_split_condition(p: &CombPolytope, vertex: &str) -> Result<SplitCondition> {
    let ip = p.vertex_index(vertex)?;
    let s = p.support();
    if s.iter().any(|r| r[ip] == 1 && r.iter().filter(|&&x| x == 1).count() == 1) {
        return Ok(SplitCondition::PyramidApex);
    }
    let g = NonIncidenceGraph::new(p);
    let pn = g.vertex_node(ip);
    let mut all = FixedBitSet::with_capacity(g.num_nodes());
    all.insert_range(..);
    let comp = g
        .components_within(&all)
        .into_iter()
        .find(|c| c.contains(&pn))
        .unwrap();
    let mut alive = FixedBitSet::with_capacity(g.num_nodes());
    for &u in &comp {
        alive.insert(u);
    }
    alive.set(pn, false);
    for &f in g.neighbors(pn) {
        alive.set(f, false);
    }
    let parts = g.components_within(&alive);
    if parts.len() <= 1 {
        return Ok(SplitCondition::Safe);
    }
    let left = parts[0].clone();
    let mut right: Vec<usize> = parts[1..].concat();
    right.sort_unstable();
    Ok(SplitCondition::Unsafe { left, right })
}

/// Vertex blocks of the support at `p`: columns other than `p` in the
/// matrix component of `p`, joined whenever a row with a 0 at `p` has 1s
/// in both. More than one block means the support has the three-block
/// vertex-sum shape at `p`.
pub fn support_blocks_at(support: &[Vec<u8>], p: usize) -> Vec<Vec<usize>> {
    let n = support.first().map_or(0, Vec::len);
    // matrix component of p via row/column connectivity
    let g = NonIncidenceGraph::from_support(support);
    let comp = g
        .components()
        .into_iter()
        .find(|c| c.contains(&g.vertex_node(p)))
        .unwrap_or_default();
    let cols: Vec<usize> = comp
        .iter()
        .filter(|&&u| !g.is_facet_node(u))
        .map(|&u| u - g.num_facets())
        .filter(|&j| j != p)
        .collect();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let nx = parent[y];
            parent[y] = r;
            y = nx;
        }
        r
    }
    for row in support.iter().filter(|r| r[p] == 0) {
        let ones: Vec<usize> = cols.iter().copied().filter(|&j| row[j] == 1).collect();
        for w in ones.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; n];
    for &j in &cols {
        let r = find(&mut parent, j);
        match root_of[r] {
            Some(b) => blocks[b].push(j),
            None => {
                root_of[r] = Some(blocks.len());
                blocks.push(vec![j]);
            }
        }
    }
    blocks
}

/// 4-cycles `bar[F] v hat[F] w` of a vertex split.
pub fn type_a_cycles(p: &CombPolytope) -> Result<Vec<Cycle>> {
    let sd = p.split_data().ok_or(Error::MissingSplitData)?;
    let g = NonIncidenceGraph::new(p);
    let s = p.support();
    let mut out = Vec::new();
    for &(bar, hat) in &sd.pairs {
        let off: Vec<usize> = sd.kept_vertices.iter().copied().filter(|&v| s[bar][v] == 1).collect();
        for (i, &v) in off.iter().enumerate() {
            for &w in &off[i + 1..] {
                out.push(canonical_cycle(&[
                    g.facet_node(bar),
                    g.vertex_node(v),
                    g.facet_node(hat),
                    g.vertex_node(w),
                ]));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// 8-cycles `bar[p] bar[F] v hat[F] hat[p] hat[G] w bar[G]` of a vertex split.
pub fn type_b_cycles(p: &CombPolytope) -> Result<Vec<Cycle>> {
    let sd = p.split_data().ok_or(Error::MissingSplitData)?;
    let g = NonIncidenceGraph::new(p);
    let s = p.support();
    let pbar = g.vertex_node(sd.bar_vertex);
    let phat = g.vertex_node(sd.hat_vertex);
    let mut out = Vec::new();
    for (a, &(fbar, fhat)) in sd.pairs.iter().enumerate() {
        for (b, &(gbar, ghat)) in sd.pairs.iter().enumerate() {
            if a == b {
                continue;
            }
            for &v in sd.kept_vertices.iter().filter(|&&v| s[fbar][v] == 1) {
                for &w in sd.kept_vertices.iter().filter(|&&w| s[gbar][w] == 1) {
                    if v == w {
                        continue;
                    }
                    out.push(canonical_cycle(&[
                        pbar,
                        g.facet_node(fbar),
                        g.vertex_node(v),
                        g.facet_node(fhat),
                        phat,
                        g.facet_node(ghat),
                        g.vertex_node(w),
                        g.facet_node(gbar),
                    ]));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{hypercube, join, point, simplex, vertex_split, vertex_sum};

    /// Induced cycles by brute force over node subsets.
    pub(crate) fn brute_force_cycles(g: &NonIncidenceGraph) -> Vec<Vec<usize>> {
        let n = g.num_nodes();
        assert!(n <= 20);
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() < 4 {
                continue;
            }
            let nodes: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let deg_ok = nodes
                .iter()
                .all(|&u| nodes.iter().filter(|&&w| g.adjacent(u, w)).count() == 2);
            if !deg_ok {
                continue;
            }
            let mut alive = FixedBitSet::with_capacity(n);
            for &u in &nodes {
                alive.insert(u);
            }
            if g.components_within(&alive).len() == 1 {
                out.push(nodes);
            }
        }
        out
    }

    fn node_sets(cycles: &[Cycle]) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                s
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn simplex_graph_is_a_matching() {
        let g = NonIncidenceGraph::new(&simplex(3));
        assert_eq!(g.num_edges(), 4);
        assert!((0..g.num_nodes()).all(|u| g.neighbors(u).len() == 1));
        assert!(g.chordless_cycles(None).unwrap().is_empty());
    }

    #[test]
    fn square_is_one_eight_cycle() {
        let g = NonIncidenceGraph::new(&hypercube(2));
        assert!((0..8).all(|u| g.neighbors(u).len() == 2));
        let c = g.chordless_cycles(None).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].len(), 8);
        let f = g.cycle_binomial(&c[0]).unwrap();
        assert_eq!(f.len(), 2);
        for (m, _) in f.terms() {
            assert_eq!(m.iter().sum::<u32>(), 4);
            assert!(m.iter().all(|&e| e <= 1));
        }
    }

    #[test]
    fn cube_cycles_match_brute_force() {
        let g = NonIncidenceGraph::new(&hypercube(3));
        let fast = g.chordless_cycles(None).unwrap();
        let mut brute = brute_force_cycles(&g);
        brute.sort();
        assert_eq!(node_sets(&fast), brute);
        for c in &fast {
            assert_eq!(c, &canonical_cycle(c));
        }
    }

    #[test]
    fn length_bound_and_cap() {
        let g = NonIncidenceGraph::new(&hypercube(3));
        let all = g.chordless_cycles(None).unwrap();
        let short = g.chordless_cycles(Some(6)).unwrap();
        assert_eq!(short, all.iter().filter(|c| c.len() <= 6).cloned().collect::<Vec<_>>());
        assert!(matches!(
            g.chordless_cycles_capped(None, 2),
            Err(Error::CapExceeded { found: 2, cap: 2 })
        ));
    }

    #[test]
    fn join_graph_is_disjoint_union() {
        let sq = hypercube(2);
        let j = join(&sq, &simplex(1)).unwrap();
        let g = NonIncidenceGraph::new(&j);
        assert_eq!(g.num_edges(), 8 + 2);
        assert_eq!(g.components().len(), 3);
    }

    #[test]
    fn cycle_sum_cancels() {
        let g = NonIncidenceGraph::new(&hypercube(2));
        let c = g.orient(&g.chordless_cycles(None).unwrap()[0]).unwrap();
        assert!(cycle_sum(&c, &c.reversed()).unwrap().is_empty());
        assert!(matches!(cycle_sum(&c, &c), Err(Error::InvalidOrientation(_))));
    }

    #[test]
    fn cycle_splitting_bookkeeping() {
        // all-ones 3x3: facets 0..3, vertices 3..6
        let g = NonIncidenceGraph::from_support(&vec![vec![1; 3]; 3]);
        let c1 = g.orient(&[0, 3, 1, 4]).unwrap();
        let c2 = g.orient(&[2, 4, 1, 5]).unwrap();
        // shared edge F1-v1 is traversed in opposite directions
        let sum = cycle_sum(&c1, &c2).unwrap();
        assert_eq!(sum.len(), 6);
        let six = g.orient(&[0, 3, 1, 5, 2, 4]).unwrap();
        assert_eq!(sum.sorted(), six.sorted());
        let nv = g.num_edges();
        // split c1 into C1' and C0
        let c0: Vec<(usize, Direction)> = c1
            .edges()
            .iter()
            .copied()
            .filter(|&(e, d)| c2.edges().contains(&(e, d.flip())))
            .collect();
        let only = |c: &OrientedEdgeSet, drop: &[(usize, Direction)]| {
            OrientedEdgeSet::new(c.edges().iter().copied().filter(|x| !drop.contains(x)).collect()).unwrap()
        };
        let c1p = only(&c1, &c0);
        let c0r: Vec<(usize, Direction)> = c0.iter().map(|&(e, d)| (e, d.flip())).collect();
        let c2p = only(&c2, &c0r);
        let mono = |c: &OrientedEdgeSet, dir: Direction| {
            let mut e = vec![0u32; nv];
            for &(i, d) in c.edges() {
                if d == dir {
                    e[i] += 1;
                }
            }
            Polynomial::monomial(nv, e, rat(1))
        };
        let c0s = OrientedEdgeSet::new(c0.clone()).unwrap();
        let (m2, n1, m3) = (
            mono(&c2p, Direction::FacetToVertex),
            mono(&c1p, Direction::VertexToFacet),
            mono(&c0s, Direction::FacetToVertex),
        );
        let lhs = &(&m2 * &cycle_binomial(&c1, nv)) + &(&n1 * &cycle_binomial(&c2, nv));
        let rhs = &m3 * &cycle_binomial(&sum, nv);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_conditions() {
        let sq = hypercube(2);
        for v in sq.vertices() {
            assert_eq!(vertex_split_condition(&sq, v).unwrap(), SplitCondition::Safe);
        }
        let pyr = join(&point(), &sq).unwrap();
        let apex = pyr.vertices().iter().find(|v| v.contains("pt")).unwrap().clone();
        assert_eq!(vertex_split_condition(&pyr, &apex).unwrap(), SplitCondition::PyramidApex);
        let a = sq.vertices()[0].clone();
        let sum = vertex_sum(&sq, &a, &sq, &a).unwrap();
        let p = format!("[{a}]⊕[{a}]");
        match vertex_split_condition(&sum, &p).unwrap() {
            SplitCondition::Unsafe { left, right } => {
                let g = NonIncidenceGraph::new(&sum);
                let verts = |s: &[usize]| s.iter().filter(|&&u| !g.is_facet_node(u)).count();
                assert_eq!((verts(&left), verts(&right)), (3, 3));
                let ip = sum.vertex_index(&p).unwrap();
                let blocks = support_blocks_at(sum.support(), ip);
                assert_eq!(blocks.len(), 2);
                let cols = |s: &[usize]| -> Vec<usize> {
                    s.iter().filter(|&&u| !g.is_facet_node(u)).map(|&u| u - g.num_facets()).collect()
                };
                assert_eq!(blocks[0], cols(&left));
                assert_eq!(blocks[1], cols(&right));
            }
            other => panic!("expected Unsafe, got {other:?}"),
        }
        assert!(matches!(vertex_split_condition(&sq, "nope"), Err(Error::NotAVertex(_))));
    }

    #[test]
    fn split_cycle_families() {
        let sq = hypercube(2);
        let p = sq.vertices()[0].clone();
        let s = vertex_split(&sq, &p).unwrap();
        assert_eq!(type_a_cycles(&s).unwrap().len(), 0);
        assert_eq!(type_b_cycles(&s).unwrap().len(), 1);
        let g = NonIncidenceGraph::new(&s);
        for c in type_b_cycles(&s).unwrap() {
            g.orient(&c).unwrap();
        }
        assert!(matches!(type_a_cycles(&sq), Err(Error::MissingSplitData)));
    }

    #[test]
    fn segment_split_families() {
        let seg = simplex(1);
        let s = vertex_split(&seg, &seg.vertices()[0].clone()).unwrap();
        // triangle: one facet off the split vertex, no kept vertex off it
        assert_eq!(s.num_vertices(), 3);
        assert!(type_a_cycles(&s).unwrap().is_empty());
        assert!(type_b_cycles(&s).unwrap().is_empty());
    }

    #[test]
    fn dot_shapes() {
        let d = NonIncidenceGraph::new(&hypercube(2)).to_dot();
        assert_eq!(d.matches("shape=box").count(), 4);
        assert_eq!(d.matches("shape=circle").count(), 4);
        assert_eq!(d.matches(" -- ").count(), 8);
    }
}
