//! Finite posets: construction from arbitrary acyclic relations, filters,
//! antichains, rank functions, and the structural operations that
//! correspond to polytope operations on order polytopes.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::canon::ColoredGraph;
use crate::error::{Error, Result};

/// A finite poset on labelled elements. Immutable once built.
#[derive(Debug, Clone)]
pub struct Poset {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    /// `up[i]` holds every `j` with `i ⪯ j` (reflexive).
    up: Vec<FixedBitSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.covers == other.covers
    }
}

impl Eq for Poset {}

/// An upward-closed subset of a poset, as a characteristic vector over the
/// canonical element order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filter {
    pub members: FixedBitSet,
}

impl Filter {
    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn key(&self, n: usize) -> Vec<bool> {
        (0..n).map(|i| self.members.contains(i)).collect()
    }
}

/// Values `rho(e)` with `rho(y) = rho(x) + 1` on every cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankFunction {
    pub rho: Vec<usize>,
}

/// Two Hasse-diagram walks from a common root to the same element whose
/// signed lengths (up +1, down -1) disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankObstruction {
    pub element: usize,
    pub walk_a: Vec<usize>,
    pub walk_b: Vec<usize>,
}

/// Serialized poset: any acyclic relation list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

/// Serialized cover relation of a poset.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoversJson {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

/// Build a poset from labels and any acyclic relation set; covers are
/// derived from the transitive closure.
pub fn build_poset<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Poset> {
    let elements: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
    let mut index = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        if index.insert(e.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(e.clone()));
        }
    }
    let n = elements.len();
    let mut up: Vec<FixedBitSet> = (0..n)
        .map(|i| {
            let mut b = FixedBitSet::with_capacity(n);
            b.insert(i);
            b
        })
        .collect();
    for (a, b) in relations {
        let ia = *index
            .get(a.as_ref())
            .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_string()))?;
        let ib = *index
            .get(b.as_ref())
            .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_string()))?;
        if ia == ib {
            return Err(Error::Cycle(elements[ia].clone()));
        }
        up[ia].insert(ib);
    }
    // Warshall closure on bitsets.
    for k in 0..n {
        let row_k = up[k].clone();
        for row in up.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
    for i in 0..n {
        for j in up[i].ones() {
            if j != i && up[j].contains(i) {
                return Err(Error::Cycle(elements[i].clone()));
            }
        }
    }
    let covers = derive_covers(&up);
    Ok(Poset {
        elements,
        index,
        covers,
        up,
    })
}

fn derive_covers(up: &[FixedBitSet]) -> Vec<(usize, usize)> {
    let n = up.len();
    let mut covers = Vec::new();
    for a in 0..n {
        for b in up[a].ones() {
            if b == a {
                continue;
            }
            let intermediate = up[a]
                .ones()
                .any(|c| c != a && c != b && up[c].contains(b));
            if !intermediate {
                covers.push((a, b));
            }
        }
    }
    covers.sort_unstable();
    covers
}

impl Poset {
    pub fn from_json(json: &PosetJson) -> Result<Poset> {
        build_poset(&json.elements, &json.relations)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.elements.clone(),
            relations: self.cover_labels(),
        }
    }

    pub fn covers_json(&self) -> CoversJson {
        CoversJson {
            elements: self.elements.clone(),
            covers: self.cover_labels(),
        }
    }

    pub fn empty() -> Poset {
        build_poset::<&str>(&[], &[]).unwrap()
    }

    /// The chain `1 < 2 < ... < n`.
    pub fn chain(n: usize) -> Poset {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let rel: Vec<(String, String)> = labels
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        build_poset(&labels, &rel).unwrap()
    }

    /// The antichain on `1..=n`.
    pub fn antichain(n: usize) -> Poset {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        build_poset::<String>(&labels, &[]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_labels(&self) -> Vec<(String, String)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.elements[a].clone(), self.elements[b].clone()))
            .collect()
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.covers.binary_search(&(a, b)).is_ok()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    pub fn is_maximal(&self, a: usize) -> bool {
        self.up[a].count_ones(..) == 1
    }

    pub fn is_minimal(&self, a: usize) -> bool {
        (0..self.len()).all(|b| b == a || !self.up[b].contains(a))
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.is_maximal(a)).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.is_minimal(a)).collect()
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(k, &a)| {
            set[k + 1..]
                .iter()
                .all(|&b| a != b && !self.comparable(a, b))
        })
    }

    pub fn is_filter(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|i| self.up[i].is_subset(set))
    }

    /// Render a filter as `{a,b,...}` in element order.
    pub fn filter_label(&self, filter: &Filter) -> String {
        let names: Vec<&str> = filter.members.ones().map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Every filter exactly once, sorted by characteristic vector.
    pub fn filters(&self) -> Vec<Filter> {
        let n = self.len();
        let mut out = if n <= 20 {
            self.filters_by_subsets()
        } else {
            self.filters_by_search()
        };
        out.sort_by_cached_key(|f| f.key(n));
        out
    }

    fn filters_by_subsets(&self) -> Vec<Filter> {
        let n = self.len();
        let up_masks: Vec<u32> = self
            .up
            .iter()
            .map(|b| b.ones().fold(0u32, |m, j| m | (1 << j)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << n) {
            let closed = (0..n).all(|i| mask & (1 << i) == 0 || up_masks[i] & !mask == 0);
            if closed {
                let mut members = FixedBitSet::with_capacity(n);
                for i in 0..n {
                    if mask & (1 << i) != 0 {
                        members.insert(i);
                    }
                }
                out.push(Filter { members });
            }
        }
        out
    }

    fn filters_by_search(&self) -> Vec<Filter> {
        // states: 0 undecided, 1 in, 2 out
        fn go(p: &Poset, i: usize, state: &mut Vec<u8>, out: &mut Vec<Filter>) {
            let n = p.len();
            if i == n {
                let mut members = FixedBitSet::with_capacity(n);
                for (k, &s) in state.iter().enumerate() {
                    if s == 1 {
                        members.insert(k);
                    }
                }
                out.push(Filter { members });
                return;
            }
            if state[i] != 0 {
                go(p, i + 1, state, out);
                return;
            }
            for choice in [2u8, 1u8] {
                let saved = state.clone();
                let ok = (0..n).all(|j| {
                    let forced = if choice == 1 {
                        p.leq(i, j)
                    } else {
                        p.leq(j, i)
                    };
                    !forced || state[j] == 0 || state[j] == choice
                });
                if ok {
                    for j in 0..n {
                        let forced = if choice == 1 { p.leq(i, j) } else { p.leq(j, i) };
                        if forced {
                            state[j] = choice;
                        }
                    }
                    go(p, i + 1, state, out);
                }
                *state = saved;
            }
        }
        let mut out = Vec::new();
        go(self, 0, &mut vec![0; self.len()], &mut out);
        out
    }

    /// Maximum antichain size within `subset` via Dilworth: size minus a
    /// maximum matching on the strict comparability bipartite graph.
    fn width_of(&self, subset: &[usize]) -> usize {
        let m = subset.len();
        let mut match_right: Vec<Option<usize>> = vec![None; m];
        fn augment(
            p: &Poset,
            s: &[usize],
            u: usize,
            seen: &mut [bool],
            mr: &mut [Option<usize>],
        ) -> bool {
            for v in 0..s.len() {
                if !seen[v] && p.lt(s[u], s[v]) {
                    seen[v] = true;
                    if mr[v].is_none() || augment(p, s, mr[v].unwrap(), seen, mr) {
                        mr[v] = Some(u);
                        return true;
                    }
                }
            }
            false
        }
        let mut matching = 0;
        for u in 0..m {
            let mut seen = vec![false; m];
            if augment(self, subset, u, &mut seen, &mut match_right) {
                matching += 1;
            }
        }
        m - matching
    }

    pub fn width(&self) -> usize {
        let all: Vec<usize> = (0..self.len()).collect();
        self.width_of(&all)
    }

    /// A maximum antichain, lexicographically least in element order.
    pub fn max_antichain(&self) -> Vec<usize> {
        let w = self.width();
        let mut chosen: Vec<usize> = Vec::new();
        for i in 0..self.len() {
            if chosen.len() == w {
                break;
            }
            if chosen.iter().any(|&c| self.comparable(c, i)) {
                continue;
            }
            let rest: Vec<usize> = (i + 1..self.len())
                .filter(|&j| !self.comparable(i, j) && chosen.iter().all(|&c| !self.comparable(c, j)))
                .collect();
            if 1 + chosen.len() + self.width_of(&rest) >= w {
                chosen.push(i);
            }
        }
        chosen
    }

    /// Some antichain of size three, if one exists (lexicographically least).
    pub fn find_antichain3(&self) -> Option<[usize; 3]> {
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                if self.comparable(a, b) {
                    continue;
                }
                for c in b + 1..n {
                    if !self.comparable(a, c) && !self.comparable(b, c) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    fn hasse_neighbors(&self) -> Vec<Vec<(usize, i64)>> {
        let mut nb = vec![Vec::new(); self.len()];
        for &(a, b) in &self.covers {
            nb[a].push((b, 1));
            nb[b].push((a, -1));
        }
        nb
    }

    /// Connected components of the Hasse diagram, each sorted, ordered by
    /// their least element.
    pub fn hasse_components(&self) -> Vec<Vec<usize>> {
        let nb = self.hasse_neighbors();
        let mut seen = vec![false; self.len()];
        let mut comps = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &(v, _) in &nb[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        q.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// A rank function normalized to minimum 0 on every Hasse component,
    /// or a pair of walks witnessing that none exists.
    pub fn rank_function_or_obstruction(&self) -> std::result::Result<RankFunction, RankObstruction> {
        let n = self.len();
        let nb = self.hasse_neighbors();
        let mut rho: Vec<Option<i64>> = vec![None; n];
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let path_to = |parent: &[Option<usize>], mut v: usize| {
            let mut p = vec![v];
            while let Some(u) = parent[v] {
                p.push(u);
                v = u;
            }
            p.reverse();
            p
        };
        for comp in self.hasse_components() {
            let root = comp[0];
            rho[root] = Some(0);
            let mut q = VecDeque::from([root]);
            while let Some(u) = q.pop_front() {
                let ru = rho[u].unwrap();
                for &(v, step) in &nb[u] {
                    match rho[v] {
                        None => {
                            rho[v] = Some(ru + step);
                            parent[v] = Some(u);
                            q.push_back(v);
                        }
                        Some(rv) if rv != ru + step => {
                            let walk_a = path_to(&parent, v);
                            let mut walk_b = path_to(&parent, u);
                            walk_b.push(v);
                            return Err(RankObstruction {
                                element: v,
                                walk_a,
                                walk_b,
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
            let min = comp.iter().map(|&v| rho[v].unwrap()).min().unwrap();
            for &v in &comp {
                rho[v] = Some(rho[v].unwrap() - min);
            }
        }
        Ok(RankFunction {
            rho: rho.into_iter().map(|r| r.unwrap() as usize).collect(),
        })
    }

    pub fn rank_function(&self) -> Option<RankFunction> {
        self.rank_function_or_obstruction().ok()
    }

    /// Signed length of a Hasse walk (+1 per upward cover, -1 per downward).
    pub fn walk_length(&self, walk: &[usize]) -> Option<i64> {
        walk.windows(2)
            .map(|w| {
                if self.is_cover(w[0], w[1]) {
                    Some(1)
                } else if self.is_cover(w[1], w[0]) {
                    Some(-1)
                } else {
                    None
                }
            })
            .sum()
    }

    /// Length (in covers) of a longest chain.
    pub fn rank(&self) -> usize {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // elements with larger up-sets come first in any linear extension
        order.sort_by_key(|&i| std::cmp::Reverse(self.up[i].count_ones(..)));
        let mut longest = vec![0usize; n];
        for &b in &order {
            for &(a, c) in &self.covers {
                if c == b {
                    longest[b] = longest[b].max(longest[a] + 1);
                }
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Subposet induced on `keep` (in element order).
    pub fn restrict(&self, keep: &[usize]) -> Poset {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        let labels: Vec<&str> = keep.iter().map(|&i| self.label(i)).collect();
        let mut rel = Vec::new();
        for &a in &keep {
            for &b in &keep {
                if self.lt(a, b) {
                    rel.push((self.label(a), self.label(b)));
                }
            }
        }
        build_poset(&labels, &rel).expect("restriction of a poset is a poset")
    }

    pub fn reverse(&self) -> Poset {
        let rel: Vec<(String, String)> = self
            .cover_labels()
            .into_iter()
            .map(|(a, b)| (b, a))
            .collect();
        build_poset(&self.elements, &rel).unwrap()
    }

    /// Relabel elements with `f`, keeping the order.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Poset> {
        let labels: Vec<String> = self.elements.iter().map(|s| f(s)).collect();
        let rel: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(a, b)| (labels[a].clone(), labels[b].clone()))
            .collect();
        build_poset(&labels, &rel)
    }

    /// Canonical labeling of the Hasse diagram (as a digraph).
    pub fn canonical_labeling(&self) -> crate::canon::CanonicalLabeling {
        let mut g = ColoredGraph::new(vec![0; self.len()]);
        for &(a, b) in &self.covers {
            g.add_arc(a, b);
        }
        g.canonical()
    }

    /// Bytes identifying the isomorphism class.
    pub fn canonical_form(&self) -> Vec<u8> {
        self.canonical_labeling().certificate_bytes()
    }

    /// The isomorphic poset on labels `1..=n` in canonical order.
    pub fn canonical_relabel(&self) -> Poset {
        let pos = self.canonical_labeling().positions();
        let labels: Vec<String> = (1..=self.len()).map(|i| i.to_string()).collect();
        let rel: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(a, b)| (labels[pos[a]].clone(), labels[pos[b]].clone()))
            .collect();
        build_poset(&labels, &rel).unwrap()
    }

    /// Graphviz rendering of the Hasse diagram, edges pointing upward.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
        for e in &self.elements {
            let _ = writeln!(s, "  {:?};", e);
        }
        for (a, b) in self.cover_labels() {
            let _ = writeln!(s, "  {:?} -> {:?};", a, b);
        }
        s.push_str("}\n");
        s
    }
}

fn fresh_label<'a>(taken: impl IntoIterator<Item = &'a String>) -> String {
    let taken: HashSet<&String> = taken.into_iter().collect();
    (1..)
        .map(|k| format!("*{k}"))
        .find(|c| !taken.contains(c))
        .unwrap()
}

fn check_disjoint(p: &Poset, q: &Poset) -> Result<()> {
    for e in &q.elements {
        if p.index.contains_key(e) {
            return Err(Error::LabelCollision(e.clone()));
        }
    }
    Ok(())
}

/// Join: a fresh element above all of `p` and below all of `q`.
pub fn op_join(p: &Poset, q: &Poset) -> Result<Poset> {
    check_disjoint(p, q)?;
    let star = fresh_label(p.elements.iter().chain(q.elements.iter()));
    let mut labels = p.elements.clone();
    labels.push(star.clone());
    labels.extend(q.elements.iter().cloned());
    let mut rel = p.cover_labels();
    rel.extend(q.cover_labels());
    rel.extend(p.elements.iter().map(|x| (x.clone(), star.clone())));
    rel.extend(q.elements.iter().map(|y| (star.clone(), y.clone())));
    build_poset(&labels, &rel)
}

/// Ordinal sum: every element of `p` below every element of `q`.
pub fn op_ordinal_sum(p: &Poset, q: &Poset) -> Result<Poset> {
    check_disjoint(p, q)?;
    let mut labels = p.elements.clone();
    labels.extend(q.elements.iter().cloned());
    let mut rel = p.cover_labels();
    rel.extend(q.cover_labels());
    for x in p.maximal_elements() {
        for y in q.minimal_elements() {
            rel.push((p.elements[x].clone(), q.elements[y].clone()));
        }
    }
    build_poset(&labels, &rel)
}

/// Direct (disjoint) sum.
pub fn op_direct_sum(p: &Poset, q: &Poset) -> Result<Poset> {
    check_disjoint(p, q)?;
    let mut labels = p.elements.clone();
    labels.extend(q.elements.iter().cloned());
    let mut rel = p.cover_labels();
    rel.extend(q.cover_labels());
    build_poset(&labels, &rel)
}

/// Partial ordinal sum with respect to `a` maximal in `p` and `b` minimal
/// in `q`: `a` goes below all of `q` and `b` above all of `p`.
pub fn op_partial_ordinal_sum(p: &Poset, a: &str, q: &Poset, b: &str) -> Result<Poset> {
    check_disjoint(p, q)?;
    let ia = p.index_of(a)?;
    let ib = q.index_of(b)?;
    if !p.is_maximal(ia) {
        return Err(Error::NotMaximal(a.to_string()));
    }
    if !q.is_minimal(ib) {
        return Err(Error::NotMinimal(b.to_string()));
    }
    let mut labels = p.elements.clone();
    labels.extend(q.elements.iter().cloned());
    let mut rel = p.cover_labels();
    rel.extend(q.cover_labels());
    rel.extend(q.elements.iter().map(|y| (a.to_string(), y.clone())));
    rel.extend(
        p.elements
            .iter()
            .filter(|x| x.as_str() != a)
            .map(|x| (x.clone(), b.to_string())),
    );
    build_poset(&labels, &rel)
}

/// Replace the cover `a ⋖ b` by `a ⋖ * ⋖ b`.
pub fn split_cover(p: &Poset, a: &str, b: &str) -> Result<Poset> {
    let star = fresh_label(p.elements.iter());
    split_cover_named(p, a, b, &star)
}

pub fn split_cover_named(p: &Poset, a: &str, b: &str, star: &str) -> Result<Poset> {
    let (ia, ib) = (p.index_of(a)?, p.index_of(b)?);
    if !p.is_cover(ia, ib) {
        return Err(Error::NotACover(a.to_string(), b.to_string()));
    }
    if p.index.contains_key(star) {
        return Err(Error::LabelCollision(star.to_string()));
    }
    let mut labels = p.elements.clone();
    labels.push(star.to_string());
    let mut rel: Vec<(String, String)> = p
        .cover_labels()
        .into_iter()
        .filter(|(x, y)| !(x == a && y == b))
        .collect();
    rel.push((a.to_string(), star.to_string()));
    rel.push((star.to_string(), b.to_string()));
    build_poset(&labels, &rel)
}

/// Split an extremal element: a maximal `c` gains `c ⋖ *`, otherwise a
/// minimal `c` gains `* ⋖ c`.
pub fn split_extremal(p: &Poset, c: &str) -> Result<Poset> {
    let ic = p.index_of(c)?;
    if p.is_maximal(ic) {
        split_maximal(p, c)
    } else if p.is_minimal(ic) {
        split_minimal(p, c)
    } else {
        Err(Error::NotExtremal(c.to_string()))
    }
}

pub fn split_maximal(p: &Poset, c: &str) -> Result<Poset> {
    let ic = p.index_of(c)?;
    if !p.is_maximal(ic) {
        return Err(Error::NotMaximal(c.to_string()));
    }
    let star = fresh_label(p.elements.iter());
    let mut labels = p.elements.clone();
    labels.push(star.clone());
    let mut rel = p.cover_labels();
    rel.push((c.to_string(), star));
    build_poset(&labels, &rel)
}

pub fn split_minimal(p: &Poset, c: &str) -> Result<Poset> {
    let ic = p.index_of(c)?;
    if !p.is_minimal(ic) {
        return Err(Error::NotMinimal(c.to_string()));
    }
    let star = fresh_label(p.elements.iter());
    let mut labels = p.elements.clone();
    labels.push(star.clone());
    let mut rel = p.cover_labels();
    rel.push((star, c.to_string()));
    build_poset(&labels, &rel)
}

/// All posets on exactly `n` elements up to isomorphism, labelled `1..=n`
/// in canonical order and sorted by canonical form.
///
/// Every poset arises from one with an element fewer by adding a new
/// maximal element over some down-set, so the levels are generated in
/// turn and deduplicated by canonical form.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let mut level = vec![Poset::empty()];
    for k in 0..n {
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut next: Vec<(Vec<u8>, Poset)> = Vec::new();
        let fresh = format!("n{}", k + 1);
        for p in &level {
            let mut labels = p.elements.clone();
            labels.push(fresh.clone());
            for filt in p.filters() {
                // complement of a filter is a down-set
                let mut rel = p.cover_labels();
                for i in 0..p.len() {
                    if !filt.contains(i) {
                        rel.push((p.elements[i].clone(), fresh.clone()));
                    }
                }
                let q = build_poset(&labels, &rel).unwrap().canonical_relabel();
                let form = q.canonical_form();
                if seen.insert(form.clone()) {
                    next.push((form, q));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, q)| q).collect();
    }
    level
}

/// All posets with at most `n` elements, smallest first.
pub fn all_posets_up_to(n: usize) -> Vec<Poset> {
    (0..=n).flat_map(all_posets).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(elems: &[&str], rel: &[(&str, &str)]) -> Poset {
        build_poset(elems, rel).unwrap()
    }

    fn fence() -> Poset {
        p(&["1", "2", "3", "4"], &[("1", "3"), ("2", "3"), ("2", "4")])
    }

    #[test]
    fn implied_relation_is_not_a_cover() {
        let q = p(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")]);
        assert_eq!(
            q.cover_labels(),
            vec![("1".into(), "2".into()), ("2".into(), "3".into())]
        );
    }

    #[test]
    fn singleton_is_antichain() {
        let q = p(&["A"], &[]);
        assert_eq!(q.len(), 1);
        assert!(q.covers().is_empty());
    }

    #[test]
    fn two_cycle_is_rejected() {
        assert!(matches!(
            build_poset(&["1", "2"], &[("1", "2"), ("2", "1")]),
            Err(Error::Cycle(_))
        ));
        assert!(matches!(
            build_poset(&["1"], &[("1", "9")]),
            Err(Error::UnknownLabel(_))
        ));
        assert!(matches!(
            build_poset(&["1", "1"], &[]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn chain_filters_are_suffixes() {
        let c = Poset::chain(3);
        let labels: Vec<String> = c.filters().iter().map(|f| c.filter_label(f)).collect();
        assert_eq!(labels, vec!["{}", "{3}", "{2,3}", "{1,2,3}"]);
    }

    #[test]
    fn antichain_filters_are_all_subsets() {
        let a = Poset::antichain(2);
        let labels: BTreeSet<String> = a.filters().iter().map(|f| a.filter_label(f)).collect();
        let expect: BTreeSet<String> = ["{}", "{1}", "{2}", "{1,2}"].iter().map(|s| s.to_string()).collect();
        assert_eq!(labels, expect);
    }

    #[test]
    fn fence_has_eight_filters() {
        // brute force over all 16 subsets
        let f = fence();
        let mut brute = 0;
        for mask in 0u32..16 {
            let ok = (0..4).all(|i| {
                mask & (1 << i) == 0 || (0..4).all(|j| !f.leq(i, j) || mask & (1 << j) != 0)
            });
            brute += ok as usize;
        }
        assert_eq!(brute, 8);
        assert_eq!(f.filters().len(), 8);
    }

    #[test]
    fn search_enumeration_matches_subsets() {
        for q in all_posets_up_to(5) {
            let mut a = q.filters_by_subsets();
            let mut b = q.filters_by_search();
            a.sort_by_key(|f| f.key(q.len()));
            b.sort_by_key(|f| f.key(q.len()));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn max_antichains() {
        assert_eq!(Poset::chain(4).max_antichain(), vec![0]);
        assert_eq!(Poset::antichain(3).max_antichain(), vec![0, 1, 2]);
        assert_eq!(fence().max_antichain(), vec![0, 1]);
    }

    #[test]
    fn max_antichain_agrees_with_brute_force() {
        for q in all_posets_up_to(6) {
            let n = q.len();
            let mut best: Vec<usize> = Vec::new();
            for mask in 0u32..(1 << n) {
                let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                if q.is_antichain(&set) && (set.len() > best.len() || (set.len() == best.len() && set < best)) {
                    best = set;
                }
            }
            assert_eq!(q.max_antichain(), best);
        }
    }

    #[test]
    fn rank_functions() {
        let c = Poset::chain(3);
        assert_eq!(c.rank_function().unwrap().rho, vec![0, 1, 2]);
        assert_eq!(c.rank(), 2);
        assert_eq!(fence().rank_function().unwrap().rho, vec![0, 0, 1, 1]);
        let unranked = p(
            &["1", "2", "3", "4", "*"],
            &[("1", "*"), ("*", "3"), ("1", "4"), ("2", "3"), ("2", "4")],
        );
        let obstruction = unranked.rank_function_or_obstruction().unwrap_err();
        let la = unranked.walk_length(&obstruction.walk_a).unwrap();
        let lb = unranked.walk_length(&obstruction.walk_b).unwrap();
        assert_ne!(la, lb);
        assert_eq!(obstruction.walk_a[0], obstruction.walk_b[0]);
    }

    #[test]
    fn join_and_sums() {
        let pc = Poset::chain(2);
        let q = p(&["A", "B", "C"], &[("A", "C"), ("B", "C")]);
        let s = op_ordinal_sum(&pc, &q).unwrap();
        let mut covers = s.cover_labels();
        covers.sort();
        let mut expect: Vec<(String, String)> = [("1", "2"), ("2", "A"), ("2", "B"), ("A", "C"), ("B", "C")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        expect.sort();
        assert_eq!(covers, expect);
        let j = op_join(&pc, &q).unwrap();
        assert_eq!(j.len(), 6);
        let star = j.index_of("*1").unwrap();
        assert!(j.is_cover(j.index_of("2").unwrap(), star));
        assert!(j.is_cover(star, j.index_of("A").unwrap()));
        assert!(matches!(op_direct_sum(&pc, &pc), Err(Error::LabelCollision(_))));
    }

    #[test]
    fn partial_ordinal_sum_example() {
        let r = p(
            &["1", "2", "3", "4", "5"],
            &[("1", "3"), ("1", "4"), ("2", "4"), ("2", "5")],
        );
        let q = p(&["A", "B", "C"], &[("A", "C"), ("B", "C")]);
        let s = op_partial_ordinal_sum(&r, "4", &q, "A").unwrap();
        let ix = |l: &str| s.index_of(l).unwrap();
        for y in ["A", "B", "C"] {
            assert!(s.lt(ix("4"), ix(y)));
        }
        for x in ["1", "2", "3", "5"] {
            assert!(s.lt(ix(x), ix("A")));
        }
        assert!(!s.lt(ix("3"), ix("B")));
        assert!(matches!(
            op_partial_ordinal_sum(&r, "1", &q, "A"),
            Err(Error::NotMaximal(_))
        ));
        assert!(matches!(
            op_partial_ordinal_sum(&r, "4", &q, "C"),
            Err(Error::NotMinimal(_))
        ));
    }

    #[test]
    fn splitting_examples() {
        let q = p(&["A", "B", "C"], &[("A", "C"), ("B", "C")]);
        let s = split_cover(&q, "A", "C").unwrap();
        let mut covers = s.cover_labels();
        covers.sort();
        assert_eq!(
            covers,
            vec![
                ("*1".into(), "C".into()),
                ("A".into(), "*1".into()),
                ("B".into(), "C".into())
            ]
        );
        let m = split_extremal(&q, "C").unwrap();
        let mut covers = m.cover_labels();
        covers.sort();
        assert_eq!(
            covers,
            vec![
                ("A".into(), "C".into()),
                ("B".into(), "C".into()),
                ("C".into(), "*1".into())
            ]
        );
        let single = Poset::antichain(1);
        let two = split_extremal(&single, "1").unwrap();
        assert_eq!(two.cover_labels(), vec![("1".into(), "*1".into())]);
        assert!(matches!(split_cover(&q, "A", "B"), Err(Error::NotACover(..))));
        let c3 = Poset::chain(3);
        assert!(matches!(split_extremal(&c3, "2"), Err(Error::NotExtremal(_))));
    }

    #[test]
    fn poset_counts_match_known_sequence() {
        let counts: Vec<usize> = (0..=6).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63, 318]);
    }

    #[test]
    fn json_round_trip() {
        let f = fence();
        let back = Poset::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
        let text = serde_json::to_string(&f.covers_json()).unwrap();
        assert!(text.contains("\"covers\""));
        assert!(f.to_dot().contains("\"1\" -> \"3\""));
    }
}
