//! Combinatorial polytopes given by the support of their slack matrix
//! (rows are facets, columns are vertices, a 1 means the vertex is off the
//! facet) and the operations on them.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::canon::{CanonicalLabeling, ColoredGraph};
use crate::error::{Error, Result};
use crate::linalg::support_rank;

/// Facet pairing left behind by a vertex split, needed to enumerate the
/// two special cycle families of the split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitData {
    /// Label of the vertex that was split.
    pub origin: String,
    /// Column indices of the vertices other than the two new ones.
    pub kept_vertices: Vec<usize>,
    pub bar_vertex: usize,
    pub hat_vertex: usize,
    /// Rows of facets that contained the split vertex.
    pub containing: Vec<usize>,
    /// `(bar row, hat row)` for each facet that missed the split vertex.
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<String>,
    pub facets: Vec<String>,
    pub support: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "PolytopeJson", into = "PolytopeJson")]
pub struct CombPolytope {
    dim: usize,
    vertices: Vec<String>,
    facets: Vec<String>,
    support: Vec<Vec<u8>>,
    split: Option<Box<SplitData>>,
}

impl PartialEq for CombPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.vertices == other.vertices
            && self.facets == other.facets
            && self.support == other.support
    }
}

impl Eq for CombPolytope {}

impl TryFrom<PolytopeJson> for CombPolytope {
    type Error = Error;
    fn try_from(j: PolytopeJson) -> Result<Self> {
        CombPolytope::new(j.dim, j.vertices, j.facets, j.support)
    }
}

impl From<CombPolytope> for PolytopeJson {
    fn from(p: CombPolytope) -> Self {
        PolytopeJson {
            dim: p.dim,
            vertices: p.vertices,
            facets: p.facets,
            support: p.support,
        }
    }
}

fn br(s: &str) -> String {
    format!("[{s}]")
}

impl CombPolytope {
    /// Validate and build. Rejects ragged or non-0/1 supports, duplicate
    /// labels, zero rows or columns, repeated rows, and supports of rank
    /// below `dim + 1`.
    pub fn new(
        dim: usize,
        vertices: Vec<String>,
        facets: Vec<String>,
        support: Vec<Vec<u8>>,
    ) -> Result<Self> {
        if vertices.is_empty() || facets.is_empty() {
            return Err(Error::InvalidSupport("needs at least one vertex and one facet".into()));
        }
        if support.len() != facets.len() {
            return Err(Error::DimensionMismatch {
                expected: facets.len(),
                found: support.len(),
            });
        }
        for row in &support {
            if row.len() != vertices.len() {
                return Err(Error::DimensionMismatch {
                    expected: vertices.len(),
                    found: row.len(),
                });
            }
            if row.iter().any(|&x| x > 1) {
                return Err(Error::InvalidSupport("entries must be 0 or 1".into()));
            }
        }
        for labels in [&vertices, &facets] {
            let mut seen = HashSet::new();
            for l in labels {
                if !seen.insert(l) {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
            }
        }
        if let Some(i) = support.iter().position(|r| r.iter().all(|&x| x == 0)) {
            return Err(Error::InvalidSupport(format!("facet {} contains every vertex", facets[i])));
        }
        if let Some(j) = (0..vertices.len()).find(|&j| support.iter().all(|r| r[j] == 0)) {
            return Err(Error::InvalidSupport(format!("vertex {} lies on every facet", vertices[j])));
        }
        let mut rows = HashSet::new();
        for (i, r) in support.iter().enumerate() {
            if !rows.insert(r) {
                return Err(Error::InvalidSupport(format!("facet {} repeats another row", facets[i])));
            }
        }
        let r = support_rank(&support);
        if r < dim + 1 {
            return Err(Error::InvalidSupport(format!("rank {r} is below dim + 1 = {}", dim + 1)));
        }
        Ok(Self {
            dim,
            vertices,
            facets,
            support,
            split: None,
        })
    }

    pub fn from_json(j: PolytopeJson) -> Result<Self> {
        Self::try_from(j)
    }

    pub fn to_json(&self) -> PolytopeJson {
        self.clone().into()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[String] {
        &self.facets
    }

    pub fn support(&self) -> &[Vec<u8>] {
        &self.support
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// True when vertex `v` lies on facet `f`.
    pub fn incident(&self, f: usize, v: usize) -> bool {
        self.support[f][v] == 0
    }

    pub fn split_data(&self) -> Option<&SplitData> {
        self.split.as_deref()
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::NotAVertex(label.to_string()))
    }

    pub fn facet_index(&self, label: &str) -> Result<usize> {
        self.facets
            .iter()
            .position(|f| f == label)
            .ok_or_else(|| Error::NotAFacet(label.to_string()))
    }

    /// Vertices lying on facet `f`.
    pub fn facet_vertex_set(&self, f: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.num_vertices());
        for (v, &x) in self.support[f].iter().enumerate() {
            if x == 0 {
                s.insert(v);
            }
        }
        s
    }

    /// Rename labels; the support is unchanged.
    pub fn relabeled(
        &self,
        vertex: impl Fn(&str) -> String,
        facet: impl Fn(&str) -> String,
    ) -> Result<Self> {
        CombPolytope::new(
            self.dim,
            self.vertices.iter().map(|s| vertex(s)).collect(),
            self.facets.iter().map(|s| facet(s)).collect(),
            self.support.clone(),
        )
    }

    /// Reorder rows and columns: new row `i` is old row `rows[i]`.
    pub fn permuted(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self {
            dim: self.dim,
            vertices: cols.iter().map(|&j| self.vertices[j].clone()).collect(),
            facets: rows.iter().map(|&i| self.facets[i].clone()).collect(),
            support: rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.support[i][j]).collect())
                .collect(),
            split: None,
        }
    }

    /// Rows and columns rearranged to match `order`'s labels, when both
    /// polytopes carry the same label sets.
    pub fn aligned_to(&self, order: &CombPolytope) -> Option<Self> {
        let vi: HashMap<&str, usize> = self.vertices.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let fi: HashMap<&str, usize> = self.facets.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        if vi.len() != order.vertices.len() || fi.len() != order.facets.len() {
            return None;
        }
        let cols: Option<Vec<usize>> = order.vertices.iter().map(|s| vi.get(s.as_str()).copied()).collect();
        let rows: Option<Vec<usize>> = order.facets.iter().map(|s| fi.get(s.as_str()).copied()).collect();
        Some(self.permuted(&rows?, &cols?))
    }

    /// Number of support entries equal to 1 (slack variables).
    pub fn num_slack_variables(&self) -> usize {
        self.support.iter().flatten().filter(|&&x| x == 1).count()
    }

    /// Canonical labeling of the facet/vertex incidence graph. Facets take
    /// the first `num_facets` node indices.
    pub fn canonical_labeling(&self) -> CanonicalLabeling {
        let m = self.num_facets();
        let mut colors = vec![0u32; m];
        colors.extend(std::iter::repeat_n(1, self.num_vertices()));
        let mut g = ColoredGraph::new(colors);
        for (f, row) in self.support.iter().enumerate() {
            for (v, &x) in row.iter().enumerate() {
                if x == 1 {
                    g.add_edge(f, m + v);
                }
            }
        }
        g.canonical()
    }

    /// Bytes identifying the combinatorial type, stable across runs.
    pub fn canonical_form(&self) -> Vec<u8> {
        let mut out = (self.dim as u64).to_be_bytes().to_vec();
        out.extend(self.canonical_labeling().certificate_bytes());
        out
    }

    /// Graphviz rendering of the slack support as a bipartite graph.
    pub fn to_dot(&self) -> String {
        crate::graph::NonIncidenceGraph::new(self).to_dot()
    }
}

/// The 0-dimensional polytope: one vertex and a single empty facet.
pub fn point() -> CombPolytope {
    CombPolytope::new(0, vec!["pt".into()], vec!["∅".into()], vec![vec![1]]).unwrap()
}

/// The `d`-simplex: facet `fi` misses exactly vertex `vi`.
pub fn simplex(d: usize) -> CombPolytope {
    if d == 0 {
        return point();
    }
    CombPolytope::new(
        d,
        (0..=d).map(|i| format!("v{i}")).collect(),
        (0..=d).map(|i| format!("f{i}")).collect(),
        (0..=d).map(|i| (0..=d).map(|j| u8::from(i == j)).collect()).collect(),
    )
    .unwrap()
}

/// The `d`-cube, as the order polytope of a `d`-element antichain.
pub fn hypercube(d: usize) -> CombPolytope {
    if d == 0 {
        return point();
    }
    crate::order_polytope::order_polytope(&crate::poset::Poset::antichain(d))
}

/// Transpose the support and swap the label sets.
pub fn dual(p: &CombPolytope) -> CombPolytope {
    let support = (0..p.num_vertices())
        .map(|v| p.support.iter().map(|r| r[v]).collect())
        .collect();
    CombPolytope {
        dim: p.dim,
        vertices: p.facets.clone(),
        facets: p.vertices.clone(),
        support,
        split: None,
    }
}

/// Join: block-diagonal support.
pub fn join(p: &CombPolytope, q: &CombPolytope) -> Result<CombPolytope> {
    let (n1, n2) = (p.num_vertices(), q.num_vertices());
    let mut vertices: Vec<String> = p.vertices.iter().map(|v| format!("{}∨·", br(v))).collect();
    vertices.extend(q.vertices.iter().map(|w| format!("·∨{}", br(w))));
    let mut facets: Vec<String> = p.facets.iter().map(|f| format!("{}∨·", br(f))).collect();
    facets.extend(q.facets.iter().map(|g| format!("·∨{}", br(g))));
    let mut support = Vec::with_capacity(facets.len());
    for r in &p.support {
        let mut row = r.clone();
        row.resize(n1 + n2, 0);
        support.push(row);
    }
    for r in &q.support {
        let mut row = vec![0; n1];
        row.extend_from_slice(r);
        support.push(row);
    }
    CombPolytope::new(p.dim + q.dim + 1, vertices, facets, support)
}

/// Vertex sum of `p` at `v` and `q` at `w`. Columns: `V∖v`, `W∖w`, then the
/// common point. Rows: facets of `p` through `v`, facets of `q` through
/// `w`, then one joined facet per pair of facets missing `v` and `w`.
pub fn vertex_sum(p: &CombPolytope, v: &str, q: &CombPolytope, w: &str) -> Result<CombPolytope> {
    let iv = p.vertex_index(v)?;
    let iw = q.vertex_index(w)?;
    let vs: Vec<usize> = (0..p.num_vertices()).filter(|&j| j != iv).collect();
    let ws: Vec<usize> = (0..q.num_vertices()).filter(|&j| j != iw).collect();
    let mut vertices: Vec<String> = vs.iter().map(|&j| format!("{}⊕·", br(&p.vertices[j]))).collect();
    vertices.extend(ws.iter().map(|&j| format!("·⊕{}", br(&q.vertices[j]))));
    vertices.push(format!("{}⊕{}", br(v), br(w)));
    let width = vertices.len();
    let mut facets = Vec::new();
    let mut support = Vec::new();
    for (f, r) in p.support.iter().enumerate() {
        if r[iv] == 0 {
            facets.push(format!("{}⊕·", br(&p.facets[f])));
            let mut row: Vec<u8> = vs.iter().map(|&j| r[j]).collect();
            row.resize(width, 0);
            support.push(row);
        }
    }
    for (g, r) in q.support.iter().enumerate() {
        if r[iw] == 0 {
            facets.push(format!("·⊕{}", br(&q.facets[g])));
            let mut row = vec![0u8; vs.len()];
            row.extend(ws.iter().map(|&j| r[j]));
            row.push(0);
            support.push(row);
        }
    }
    for (f, rf) in p.support.iter().enumerate() {
        if rf[iv] == 0 {
            continue;
        }
        for (g, rg) in q.support.iter().enumerate() {
            if rg[iw] == 0 {
                continue;
            }
            facets.push(format!("{}∨{}", br(&p.facets[f]), br(&q.facets[g])));
            let mut row: Vec<u8> = vs.iter().map(|&j| rf[j]).collect();
            row.extend(ws.iter().map(|&j| rg[j]));
            row.push(1);
            support.push(row);
        }
    }
    CombPolytope::new(p.dim + q.dim, vertices, facets, support)
}

/// Vertex split at `p_label`. Columns: the other vertices, then `bar[p]`
/// and `hat[p]`. Rows: facets through `p` padded with zeros, then a
/// `bar[F]` and a `hat[F]` copy of every facet `F` missing `p`.
pub fn vertex_split(p: &CombPolytope, p_label: &str) -> Result<CombPolytope> {
    let ip = p.vertex_index(p_label)?;
    let vs: Vec<usize> = (0..p.num_vertices()).filter(|&j| j != ip).collect();
    let mut vertices: Vec<String> = vs.iter().map(|&j| p.vertices[j].clone()).collect();
    vertices.push(format!("bar{}", br(p_label)));
    vertices.push(format!("hat{}", br(p_label)));
    let n = vs.len();
    let mut facets = Vec::new();
    let mut support = Vec::new();
    let mut containing = Vec::new();
    let off: Vec<usize> = (0..p.num_facets()).filter(|&f| p.support[f][ip] == 1).collect();
    for (f, r) in p.support.iter().enumerate() {
        if r[ip] == 0 {
            containing.push(facets.len());
            facets.push(p.facets[f].clone());
            let mut row: Vec<u8> = vs.iter().map(|&j| r[j]).collect();
            row.extend([0, 0]);
            support.push(row);
        }
    }
    let first_bar = facets.len();
    for (tag, ends) in [("bar", [1u8, 0]), ("hat", [0, 1])] {
        for &f in &off {
            facets.push(format!("{tag}{}", br(&p.facets[f])));
            let mut row: Vec<u8> = vs.iter().map(|&j| p.support[f][j]).collect();
            row.extend(ends);
            support.push(row);
        }
    }
    let mut out = CombPolytope::new(p.dim + 1, vertices, facets, support)?;
    let k = off.len();
    out.split = Some(Box::new(SplitData {
        origin: p_label.to_string(),
        kept_vertices: (0..n).collect(),
        bar_vertex: n,
        hat_vertex: n + 1,
        containing,
        pairs: (0..k).map(|i| (first_bar + i, first_bar + k + i)).collect(),
    }));
    Ok(out)
}

/// Facet wedge, computed as the dual of a vertex split of the dual.
pub fn facet_wedge(p: &CombPolytope, f: &str) -> Result<CombPolytope> {
    p.facet_index(f)?;
    Ok(dual(&vertex_split(&dual(p), f)?))
}

/// Facet wedge from its own support formula: every other facet row is
/// copied onto both copies of the vertices off `F`, and `F` becomes two
/// facets, each missing exactly one of the copies.
pub fn facet_wedge_direct(p: &CombPolytope, f: &str) -> Result<CombPolytope> {
    let i_f = p.facet_index(f)?;
    let off: Vec<usize> = (0..p.num_vertices()).filter(|&v| p.support[i_f][v] == 1).collect();
    let on: Vec<usize> = (0..p.num_vertices()).filter(|&v| p.support[i_f][v] == 0).collect();
    // columns: hat copies, bar copies, vertices on F
    let mut vertices: Vec<String> = off.iter().map(|&v| format!("hat{}", br(&p.vertices[v]))).collect();
    vertices.extend(off.iter().map(|&v| format!("bar{}", br(&p.vertices[v]))));
    vertices.extend(on.iter().map(|&v| p.vertices[v].clone()));
    let mut facets = Vec::new();
    let mut support = Vec::new();
    for (g, r) in p.support.iter().enumerate() {
        if g == i_f {
            continue;
        }
        facets.push(p.facets[g].clone());
        let a: Vec<u8> = off.iter().map(|&v| r[v]).collect();
        let mut row = a.clone();
        row.extend(&a);
        row.extend(on.iter().map(|&v| r[v]));
        support.push(row);
    }
    let k = off.len();
    let block = |hat: bool| -> Vec<u8> {
        let mut row = vec![u8::from(hat); k];
        row.extend(vec![u8::from(!hat); k]);
        row.extend(vec![0; on.len()]);
        row
    };
    facets.push(format!("hat{}", br(f)));
    support.push(block(true));
    facets.push(format!("bar{}", br(f)));
    support.push(block(false));
    CombPolytope::new(p.dim + 1, vertices, facets, support)
}

/// Facet product, computed as the dual of a vertex sum of the duals.
pub fn facet_product(p: &CombPolytope, f1: &str, q: &CombPolytope, f2: &str) -> Result<CombPolytope> {
    p.facet_index(f1)?;
    q.facet_index(f2)?;
    Ok(dual(&vertex_sum(&dual(p), f1, &dual(q), f2)?))
}

/// Facet product from its own three-block support formula.
pub fn facet_product_direct(
    p: &CombPolytope,
    f1: &str,
    q: &CombPolytope,
    f2: &str,
) -> Result<CombPolytope> {
    let i1 = p.facet_index(f1)?;
    let i2 = q.facet_index(f2)?;
    let v_on: Vec<usize> = (0..p.num_vertices()).filter(|&v| p.support[i1][v] == 0).collect();
    let v_off: Vec<usize> = (0..p.num_vertices()).filter(|&v| p.support[i1][v] == 1).collect();
    let w_on: Vec<usize> = (0..q.num_vertices()).filter(|&w| q.support[i2][w] == 0).collect();
    let w_off: Vec<usize> = (0..q.num_vertices()).filter(|&w| q.support[i2][w] == 1).collect();
    let mut vertices: Vec<String> = v_on.iter().map(|&v| format!("{}⊕·", br(&p.vertices[v]))).collect();
    vertices.extend(w_on.iter().map(|&w| format!("·⊕{}", br(&q.vertices[w]))));
    for &a in &v_off {
        for &b in &w_off {
            vertices.push(format!("{}∨{}", br(&p.vertices[a]), br(&q.vertices[b])));
        }
    }
    let mut facets = Vec::new();
    let mut support = Vec::new();
    for (g, r) in p.support.iter().enumerate() {
        if g == i1 {
            continue;
        }
        facets.push(format!("{}⊕·", br(&p.facets[g])));
        let mut row: Vec<u8> = v_on.iter().map(|&v| r[v]).collect();
        row.extend(vec![0; w_on.len()]);
        for &a in &v_off {
            row.extend(std::iter::repeat_n(r[a], w_off.len()));
        }
        support.push(row);
    }
    for (h, r) in q.support.iter().enumerate() {
        if h == i2 {
            continue;
        }
        facets.push(format!("·⊕{}", br(&q.facets[h])));
        let mut row = vec![0; v_on.len()];
        row.extend(w_on.iter().map(|&w| r[w]));
        for _ in &v_off {
            row.extend(w_off.iter().map(|&b| r[b]));
        }
        support.push(row);
    }
    facets.push(format!("{}⊕{}", br(f1), br(f2)));
    let mut row = vec![0; v_on.len() + w_on.len()];
    row.extend(vec![1; v_off.len() * w_off.len()]);
    support.push(row);
    CombPolytope::new(p.dim + q.dim, vertices, facets, support)
}

/// Cartesian product. A 0-dimensional factor contributes no facets.
pub fn product(p: &CombPolytope, q: &CombPolytope) -> Result<CombPolytope> {
    let mut vertices = Vec::new();
    for v in &p.vertices {
        for w in &q.vertices {
            vertices.push(format!("{}×{}", br(v), br(w)));
        }
    }
    let nq = q.num_vertices();
    let mut facets = Vec::new();
    let mut support = Vec::new();
    if p.dim > 0 {
        for (f, r) in p.support.iter().enumerate() {
            facets.push(format!("{}×·", br(&p.facets[f])));
            support.push(r.iter().flat_map(|&x| std::iter::repeat_n(x, nq)).collect());
        }
    }
    if q.dim > 0 {
        for (g, r) in q.support.iter().enumerate() {
            facets.push(format!("·×{}", br(&q.facets[g])));
            support.push((0..p.num_vertices()).flat_map(|_| r.iter().copied()).collect());
        }
    }
    if facets.is_empty() {
        return Ok(point());
    }
    CombPolytope::new(p.dim + q.dim, vertices, facets, support)
}

/// True iff the two supports agree up to permuting facets and vertices.
pub fn combinatorially_equivalent(p: &CombPolytope, q: &CombPolytope) -> bool {
    p.dim == q.dim
        && p.num_facets() == q.num_facets()
        && p.num_vertices() == q.num_vertices()
        && p.canonical_labeling().certificate == q.canonical_labeling().certificate
}

/// Label correspondence between equivalent polytopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    /// `facets[i]` is the facet of the second polytope matched to facet `i`.
    pub facets: Vec<usize>,
    pub vertices: Vec<usize>,
}

/// An explicit incidence-preserving bijection, checked entrywise.
pub fn isomorphism(p: &CombPolytope, q: &CombPolytope) -> Option<Isomorphism> {
    if p.num_facets() != q.num_facets() || p.num_vertices() != q.num_vertices() || p.dim != q.dim {
        return None;
    }
    let (cp, cq) = (p.canonical_labeling(), q.canonical_labeling());
    if cp.certificate != cq.certificate {
        return None;
    }
    let m = p.num_facets();
    let pos = cp.positions();
    let node_map: Vec<usize> = (0..pos.len()).map(|x| cq.order[pos[x]]).collect();
    let iso = Isomorphism {
        facets: node_map[..m].to_vec(),
        vertices: node_map[m..].iter().map(|&x| x - m).collect(),
    };
    for f in 0..m {
        for v in 0..p.num_vertices() {
            if p.support[f][v] != q.support[iso.facets[f]][iso.vertices[v]] {
                return None;
            }
        }
    }
    Some(iso)
}

/// Faces as vertex sets, closed under intersection, with the covering
/// relation of the inclusion order.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub faces: Vec<FixedBitSet>,
    /// Length of a longest chain from the empty face (face dimension + 1).
    pub rank: Vec<usize>,
    /// `(smaller, larger)` covering pairs.
    pub edges: Vec<(usize, usize)>,
}

pub const FACE_CAP: usize = 50_000;

pub fn face_lattice(p: &CombPolytope) -> Result<FaceLattice> {
    face_lattice_capped(p, FACE_CAP)
}

pub fn face_lattice_capped(p: &CombPolytope, cap: usize) -> Result<FaceLattice> {
    let n = p.num_vertices();
    let facets: Vec<FixedBitSet> = (0..p.num_facets()).map(|f| p.facet_vertex_set(f)).collect();
    let mut full = FixedBitSet::with_capacity(n);
    full.insert_range(..);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut faces = vec![full.clone()];
    seen.insert(full);
    let empty = FixedBitSet::with_capacity(n);
    let mut k = 0;
    while k < faces.len() {
        let face = faces[k].clone();
        for fs in &facets {
            let mut x = face.clone();
            x.intersect_with(fs);
            if seen.insert(x.clone()) {
                faces.push(x);
                if faces.len() > cap {
                    return Err(Error::FaceCapExceeded(cap));
                }
            }
        }
        k += 1;
    }
    if seen.insert(empty.clone()) {
        faces.push(empty);
    }
    faces.sort_by_cached_key(|f| (f.count_ones(..), f.ones().collect::<Vec<_>>()));
    let nf = faces.len();
    let mut edges = Vec::new();
    for a in 0..nf {
        let supers: Vec<usize> = (a + 1..nf)
            .filter(|&b| faces[b].count_ones(..) > faces[a].count_ones(..) && faces[a].is_subset(&faces[b]))
            .collect();
        for &b in &supers {
            let minimal = !supers
                .iter()
                .any(|&c| c != b && faces[c].is_subset(&faces[b]) && faces[c] != faces[b]);
            if minimal {
                edges.push((a, b));
            }
        }
    }
    let mut rank = vec![0usize; nf];
    for &(a, b) in &edges {
        // edges are generated in increasing order of the smaller face, and
        // faces are sorted by size, so ranks are final when read
        rank[b] = rank[b].max(rank[a] + 1);
    }
    Ok(FaceLattice { faces, rank, edges })
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Number of faces of each dimension `-1, 0, 1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.rank.iter().copied().max().unwrap_or(0);
        let mut f = vec![0; top + 1];
        for &r in &self.rank {
            f[r] += 1;
        }
        f
    }

    pub fn to_dot(&self, p: &CombPolytope) -> String {
        let mut s = String::from("digraph face_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, face) in self.faces.iter().enumerate() {
            let names: Vec<&str> = face.ones().map(|v| p.vertices()[v].as_str()).collect();
            let _ = writeln!(s, "  n{i} [label={:?}];", format!("{{{}}}", names.join(",")));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// Facets `G_0..G_d` and vertices `w_0..w_d` from a complete flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub facets: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl Flag {
    /// The `(d+1) x (d+1)` support submatrix picked out by the flag.
    pub fn submatrix(&self, p: &CombPolytope) -> Vec<Vec<u8>> {
        self.facets
            .iter()
            .map(|&g| self.vertices.iter().map(|&w| p.support()[g][w]).collect())
            .collect()
    }
}

/// Walk down from the whole polytope, each time intersecting with a facet
/// whose intersection is maximal among proper ones, until a vertex remains.
pub fn find_flag(p: &CombPolytope) -> Result<Flag> {
    let d = p.dim();
    let nf = p.num_facets();
    let facet_sets: Vec<FixedBitSet> = (0..nf).map(|f| p.facet_vertex_set(f)).collect();
    let mut g = FixedBitSet::with_capacity(p.num_vertices());
    g.insert_range(..);
    let mut chain = vec![g.clone()];
    let mut gs = vec![0usize; d + 1];
    for k in (1..=d).rev() {
        let cands: Vec<(usize, FixedBitSet)> = (0..nf)
            .filter_map(|f| {
                let mut x = g.clone();
                x.intersect_with(&facet_sets[f]);
                (x != g && x.count_ones(..) > 0).then_some((f, x))
            })
            .collect();
        let pick = cands.iter().find(|(_, x)| {
            !cands
                .iter()
                .any(|(_, y)| y != x && x.is_subset(y))
        });
        let Some((f, x)) = pick.cloned() else {
            return Err(Error::FlagNotFound(format!("no proper face below step {k}")));
        };
        gs[k] = f;
        g = x;
        chain.push(g.clone());
    }
    if g.count_ones(..) != 1 {
        return Err(Error::FlagNotFound(format!(
            "chain ends at a face with {} vertices",
            g.count_ones(..)
        )));
    }
    let w0 = g.ones().next().unwrap();
    let Some(g0) = (0..nf).find(|&f| p.support()[f][w0] == 1) else {
        return Err(Error::FlagNotFound("final vertex lies on every facet".into()));
    };
    gs[0] = g0;
    // chain[j] is g_{d-j}; w_k is taken from g_k minus g_{k-1}
    let mut ws = vec![0usize; d + 1];
    for k in 0..=d {
        let gk = &chain[d - k];
        let w = if k == 0 {
            gk.ones().next()
        } else {
            let lower = &chain[d - k + 1];
            gk.ones().find(|&v| !lower.contains(v))
        };
        ws[k] = w.ok_or_else(|| Error::FlagNotFound(format!("flag step {k} is not strict")))?;
    }
    Ok(Flag {
        facets: gs,
        vertices: ws,
    })
}
