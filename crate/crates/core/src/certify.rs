//! Graphicality certificates: operation trees over base polytopes that are
//! replayed and re-checked by the verifier, plus the top-down induction
//! producing such trees for ranked posets without 3-antichains.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cas::slack::{slack_ideal, toric_ideal};
use crate::cas::{ideal_equals, text, Budget};
use crate::error::{Error, Result};
use crate::graph::{vertex_split_condition, NonIncidenceGraph, SplitCondition};
use crate::linalg::is_morally_2level;
use crate::order_polytope::{order_polytope, FacetLabel};
use crate::polytope::{
    combinatorially_equivalent, dual, facet_product, facet_wedge, hypercube, isomorphism, join, point, simplex,
    vertex_split, vertex_sum, CombPolytope,
};
use crate::poset::{Poset, RankFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Base {
    Point,
    Simplex { d: usize },
    Hypercube { d: usize },
}

impl Base {
    pub fn polytope(&self) -> CombPolytope {
        match *self {
            Base::Point => point(),
            Base::Simplex { d } => simplex(d),
            Base::Hypercube { d } => hypercube(d),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Base::Point => "point".into(),
            Base::Simplex { d } => format!("simplex({d})"),
            Base::Hypercube { d } => format!("hypercube({d})"),
        }
    }

    /// Simplices and the point are graphic outright (no large minors, no
    /// cycles); small cubes need the ideal oracle.
    fn needs_oracle(&self) -> bool {
        matches!(self, Base::Hypercube { .. })
    }

    fn is_known(&self) -> bool {
        match *self {
            Base::Point | Base::Simplex { .. } => true,
            Base::Hypercube { d } => d == 1 || d == 2,
        }
    }
}

/// Operation tree. Arguments name vertices and facets by their labels in
/// the replayed child polytopes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum CertNode {
    Base {
        base: Base,
    },
    Dual {
        child: Box<CertNode>,
    },
    Join {
        left: Box<CertNode>,
        right: Box<CertNode>,
    },
    VertexSum {
        left: Box<CertNode>,
        v: String,
        right: Box<CertNode>,
        w: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        note: Option<String>,
    },
    VertexSplit {
        child: Box<CertNode>,
        vertex: String,
        condition: String,
    },
    FacetWedge {
        child: Box<CertNode>,
        facet: String,
        condition: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        note: Option<String>,
    },
    FacetProduct {
        left: Box<CertNode>,
        f1: String,
        right: Box<CertNode>,
        f2: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        note: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Slack ideal equals toric ideal for a base polytope.
    Oracle {
        node: String,
        base: String,
        nvars: usize,
        slack_basis_sha256: String,
        toric_basis_sha256: String,
        equal: bool,
    },
    /// Connectivity test behind a vertex split or facet wedge.
    SideCondition {
        node: String,
        operation: String,
        argument: String,
        result: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub target_canonical: String,
    pub tree: CertNode,
    pub evidence: Vec<Evidence>,
}

/// Why a poset is not certified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "refusal")]
pub enum Refusal {
    ThreeAntichain { witness: Vec<String> },
    Unranked { walk_a: Vec<String>, walk_b: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Outcome {
    Certified(Certificate),
    Refused(Refusal),
}

/// How the top-rank elements attach to the maximal elements below them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum TopLayerCase {
    MaxSplit { top: String, below: String },
    OrdinalSumSingleton { top: String, below: [String; 2] },
    OrdinalSumPair { tops: [String; 2], below: [String; 2] },
    DoubleMaxSplit { tops: [String; 2], below: [String; 2] },
    /// `b` covers both maximal elements below, `other` covers only `a`.
    PartialOrdinalSumPair { a: String, b: String, other: String, below_other: String },
    OrdinalSumPairOverSingleton { tops: [String; 2], below: String },
}

pub fn canonical_hex(p: &CombPolytope) -> String {
    hex::encode(Sha256::digest(p.canonical_form()))
}

fn sha_hex(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

// ---------------------------------------------------------------- replay

pub fn replay(node: &CertNode) -> Result<CombPolytope> {
    match node {
        CertNode::Base { base } => Ok(base.polytope()),
        CertNode::Dual { child } => Ok(dual(&replay(child)?)),
        CertNode::Join { left, right } => join(&replay(left)?, &replay(right)?),
        CertNode::VertexSum { left, v, right, w, .. } => vertex_sum(&replay(left)?, v, &replay(right)?, w),
        CertNode::VertexSplit { child, vertex, .. } => vertex_split(&replay(child)?, vertex),
        CertNode::FacetWedge { child, facet, .. } => facet_wedge(&replay(child)?, facet),
        CertNode::FacetProduct { left, f1, right, f2, .. } => facet_product(&replay(left)?, f1, &replay(right)?, f2),
    }
}

fn split_check(p: &CombPolytope, vertex: &str) -> Result<SplitCondition> {
    vertex_split_condition(p, vertex)
}

fn wedge_check(p: &CombPolytope, facet: &str) -> Result<SplitCondition> {
    p.facet_index(facet)?;
    vertex_split_condition(&dual(p), facet)
}

fn unsafe_error(p: &CombPolytope, arg: &str, c: &SplitCondition) -> Error {
    let g = NonIncidenceGraph::new(p);
    let names = |s: &[usize]| s.iter().map(|&u| g.node_label(u).to_string()).collect();
    match c {
        SplitCondition::Unsafe { left, right } => Error::UnsafeSplit {
            vertex: arg.to_string(),
            left: names(left),
            right: names(right),
        },
        _ => unreachable!(),
    }
}

/// Slack-versus-toric comparison for a base polytope.
pub fn oracle_evidence(base: Base, node: &str, budget: Budget) -> Result<Evidence> {
    let p = base.polytope();
    let s = slack_ideal(&p, budget)?;
    let t = toric_ideal(&p)?;
    let equal = ideal_equals(&s, &t, budget)?;
    let n = s.nvars();
    Ok(Evidence::Oracle {
        node: node.to_string(),
        base: base.name(),
        nvars: n,
        slack_basis_sha256: sha_hex(&text::dump(s.groebner_basis(budget)?, n, &[])),
        toric_basis_sha256: sha_hex(&text::dump(t.groebner_basis(budget)?, n, &[])),
        equal,
    })
}

// ------------------------------------------------------- expression path

/// Operation expression over base polytopes, the input of
/// [`certify_expression`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Base(Base),
    Dual(Box<Expr>),
    Join(Box<Expr>, Box<Expr>),
    VertexSum(Box<Expr>, String, Box<Expr>, String),
    VertexSplit(Box<Expr>, String),
    FacetWedge(Box<Expr>, String),
    FacetProduct(Box<Expr>, String, Box<Expr>, String),
}

impl Expr {
    /// Parse `join(simplex(1), dual(hypercube(2)))`,
    /// `vertex_split(hypercube(2), "{}")` and similar. Labels are quoted.
    pub fn parse(s: &str) -> Result<Expr> {
        let mut p = ExprParser { s: s.as_bytes(), i: 0 };
        let e = p.expr()?;
        p.ws();
        if p.i != p.s.len() {
            return Err(Error::Parse(format!("trailing input at byte {}", p.i)));
        }
        Ok(e)
    }

    /// Build the polytope without any checks.
    pub fn evaluate(&self) -> Result<CombPolytope> {
        match self {
            Expr::Base(b) => Ok(b.polytope()),
            Expr::Dual(c) => Ok(dual(&c.evaluate()?)),
            Expr::Join(a, b) => join(&a.evaluate()?, &b.evaluate()?),
            Expr::VertexSum(a, v, b, w) => vertex_sum(&a.evaluate()?, v, &b.evaluate()?, w),
            Expr::VertexSplit(c, v) => vertex_split(&c.evaluate()?, v),
            Expr::FacetWedge(c, f) => facet_wedge(&c.evaluate()?, f),
            Expr::FacetProduct(a, f, b, g) => facet_product(&a.evaluate()?, f, &b.evaluate()?, g),
        }
    }
}

struct ExprParser<'a> {
    s: &'a [u8],
    i: usize,
}

enum Arg {
    E(Expr),
    S(String),
    N(usize),
}

impl ExprParser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn err(&self, m: &str) -> Error {
        Error::Parse(format!("{m} at byte {}", self.i))
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        self.ws();
        if self.s.get(self.i) == Some(&c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        self.ws();
        let st = self.i;
        while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
            self.i += 1;
        }
        String::from_utf8_lossy(&self.s[st..self.i]).into_owned()
    }

    fn arg(&mut self) -> Result<Arg> {
        self.ws();
        match self.s.get(self.i) {
            Some(b'"') => {
                self.i += 1;
                let st = self.i;
                while self.i < self.s.len() && self.s[self.i] != b'"' {
                    self.i += 1;
                }
                if self.i == self.s.len() {
                    return Err(self.err("unterminated string"));
                }
                let v = String::from_utf8(self.s[st..self.i].to_vec()).map_err(|_| self.err("bad utf-8"))?;
                self.i += 1;
                Ok(Arg::S(v))
            }
            Some(c) if c.is_ascii_digit() => {
                let id = self.ident();
                id.parse().map(Arg::N).map_err(|_| self.err("bad number"))
            }
            _ => Ok(Arg::E(self.expr()?)),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let name = self.ident();
        if name.is_empty() {
            return Err(self.err("expected an operation"));
        }
        if name == "point" {
            self.ws();
            if self.s.get(self.i) == Some(&b'(') {
                self.eat(b'(')?;
                self.eat(b')')?;
            }
            return Ok(Expr::Base(Base::Point));
        }
        self.eat(b'(')?;
        let mut args = Vec::new();
        self.ws();
        if self.s.get(self.i) != Some(&b')') {
            loop {
                args.push(self.arg()?);
                self.ws();
                if self.s.get(self.i) == Some(&b',') {
                    self.i += 1;
                } else {
                    break;
                }
            }
        }
        self.eat(b')')?;
        let bad = || Error::Parse(format!("bad arguments for {name}"));
        let b = Box::new;
        Ok(match (name.as_str(), args.as_mut_slice()) {
            ("simplex", [Arg::N(d)]) => Expr::Base(Base::Simplex { d: *d }),
            ("hypercube", [Arg::N(d)]) => Expr::Base(Base::Hypercube { d: *d }),
            ("dual", [Arg::E(c)]) => Expr::Dual(b(take(c))),
            ("join", [Arg::E(l), Arg::E(r)]) => Expr::Join(b(take(l)), b(take(r))),
            ("vertex_sum", [Arg::E(l), Arg::S(v), Arg::E(r), Arg::S(w)]) => {
                Expr::VertexSum(b(take(l)), v.clone(), b(take(r)), w.clone())
            }
            ("vertex_split", [Arg::E(c), Arg::S(v)]) => Expr::VertexSplit(b(take(c)), v.clone()),
            ("facet_wedge", [Arg::E(c), Arg::S(f)]) => Expr::FacetWedge(b(take(c)), f.clone()),
            ("facet_product", [Arg::E(l), Arg::S(f), Arg::E(r), Arg::S(g)]) => {
                Expr::FacetProduct(b(take(l)), f.clone(), b(take(r)), g.clone())
            }
            _ => return Err(bad()),
        })
    }
}

fn take(e: &mut Expr) -> Expr {
    std::mem::replace(e, Expr::Base(Base::Point))
}

struct Builder {
    budget: Budget,
    evidence: Vec<Evidence>,
}

impl Builder {
    fn base(&mut self, base: Base, path: &str) -> Result<(CertNode, CombPolytope)> {
        if !base.is_known() {
            return Err(Error::UnknownBase(base.name()));
        }
        if base.needs_oracle() {
            let ev = oracle_evidence(base, path, self.budget)?;
            if !matches!(ev, Evidence::Oracle { equal: true, .. }) {
                return Err(Error::NotGraphicBase(base.name()));
            }
            self.evidence.push(ev);
        }
        Ok((CertNode::Base { base }, base.polytope()))
    }

    fn side(&mut self, path: &str, op: &str, arg: &str, c: &SplitCondition) {
        self.evidence.push(Evidence::SideCondition {
            node: path.to_string(),
            operation: op.to_string(),
            argument: arg.to_string(),
            result: c.name().to_string(),
        });
    }

    fn wedge(
        &mut self,
        path: &str,
        child: CertNode,
        r: &CombPolytope,
        facet: &str,
        note: Option<String>,
    ) -> Result<(CertNode, CombPolytope)> {
        let c = wedge_check(r, facet)?;
        if !c.is_safe() {
            return Err(unsafe_error(&dual(r), facet, &c));
        }
        self.side(path, "facet_wedge", facet, &c);
        let out = facet_wedge(r, facet)?;
        Ok((
            CertNode::FacetWedge {
                child: Box::new(child),
                facet: facet.to_string(),
                condition: c.name().to_string(),
                note,
            },
            out,
        ))
    }

    fn expr(&mut self, e: &Expr, path: &str) -> Result<(CertNode, CombPolytope)> {
        let sub = |k: &str| format!("{path}.{k}");
        match e {
            Expr::Base(b) => self.base(*b, path),
            Expr::Dual(c) => {
                let (n, r) = self.expr(c, &sub("child"))?;
                Ok((CertNode::Dual { child: Box::new(n) }, dual(&r)))
            }
            Expr::Join(a, b) => {
                let (na, ra) = self.expr(a, &sub("left"))?;
                let (nb, rb) = self.expr(b, &sub("right"))?;
                let r = join(&ra, &rb)?;
                Ok((CertNode::Join { left: Box::new(na), right: Box::new(nb) }, r))
            }
            Expr::VertexSum(a, v, b, w) => {
                let (na, ra) = self.expr(a, &sub("left"))?;
                let (nb, rb) = self.expr(b, &sub("right"))?;
                let r = vertex_sum(&ra, v, &rb, w)?;
                Ok((
                    CertNode::VertexSum {
                        left: Box::new(na),
                        v: v.clone(),
                        right: Box::new(nb),
                        w: w.clone(),
                        note: None,
                    },
                    r,
                ))
            }
            Expr::VertexSplit(c, v) => {
                let (n, r) = self.expr(c, &sub("child"))?;
                let cond = split_check(&r, v)?;
                if !cond.is_safe() {
                    return Err(unsafe_error(&r, v, &cond));
                }
                self.side(path, "vertex_split", v, &cond);
                let out = vertex_split(&r, v)?;
                Ok((
                    CertNode::VertexSplit {
                        child: Box::new(n),
                        vertex: v.clone(),
                        condition: cond.name().to_string(),
                    },
                    out,
                ))
            }
            Expr::FacetWedge(c, f) => {
                let (n, r) = self.expr(c, &sub("child"))?;
                self.wedge(path, n, &r, f, None)
            }
            Expr::FacetProduct(a, f, b, g) => {
                let (na, ra) = self.expr(a, &sub("left"))?;
                let (nb, rb) = self.expr(b, &sub("right"))?;
                let r = facet_product(&ra, f, &rb, g)?;
                Ok((
                    CertNode::FacetProduct {
                        left: Box::new(na),
                        f1: f.clone(),
                        right: Box::new(nb),
                        f2: g.clone(),
                        note: None,
                    },
                    r,
                ))
            }
        }
    }
}

/// Certificate for an operation expression. Fails on unknown bases and on
/// splits or wedges whose connectivity condition fails.
pub fn certify_expression(e: &Expr, budget: Budget) -> Result<Certificate> {
    let mut b = Builder {
        budget,
        evidence: Vec::new(),
    };
    let (tree, r) = b.expr(e, "tree")?;
    Ok(Certificate {
        target_canonical: canonical_hex(&r),
        tree,
        evidence: b.evidence,
    })
}

// ------------------------------------------------------------ poset path

fn covered_by(p: &Poset, t: usize) -> Vec<usize> {
    p.covers().iter().filter(|&&(_, b)| b == t).map(|&(a, _)| a).collect()
}

/// Match the covers between the top-rank layer and the maximal elements
/// of the rest against the six attachment patterns.
pub fn classify_top_layer(p: &Poset, rho: &RankFunction) -> Result<TopLayerCase> {
    let top_rank = rho.rho.iter().copied().max().unwrap_or(0);
    let tops: Vec<usize> = (0..p.len()).filter(|&i| rho.rho[i] == top_rank).collect();
    let rest: Vec<usize> = (0..p.len()).filter(|&i| rho.rho[i] < top_rank).collect();
    let m0: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&x| !rest.iter().any(|&y| p.lt(x, y)))
        .collect();
    let l = |i: usize| p.label(i).to_string();
    let describe = || {
        let c: Vec<String> = tops
            .iter()
            .map(|&t| format!("{} covers {:?}", l(t), covered_by(p, t).into_iter().map(l).collect::<Vec<_>>()))
            .collect();
        format!("{}; maximal below: {:?}", c.join(", "), m0.iter().map(|&i| l(i)).collect::<Vec<_>>())
    };
    if rest.is_empty() {
        return Err(Error::NoCaseMatches(describe()));
    }
    let case = match *tops.as_slice() {
        [t] => {
            let c = covered_by(p, t);
            match *c.as_slice() {
                [m] => Some(TopLayerCase::MaxSplit { top: l(t), below: l(m) }),
                [m1, m2] if m0.len() == 2 => Some(TopLayerCase::OrdinalSumSingleton {
                    top: l(t),
                    below: [l(m1), l(m2)],
                }),
                _ => None,
            }
        }
        [t1, t2] => {
            let (c1, c2) = (covered_by(p, t1), covered_by(p, t2));
            match (c1.as_slice(), c2.as_slice()) {
                (&[a], &[b]) if a == b && m0.len() == 1 => Some(TopLayerCase::OrdinalSumPairOverSingleton {
                    tops: [l(t1), l(t2)],
                    below: l(a),
                }),
                (&[a], &[b]) if a != b => Some(TopLayerCase::DoubleMaxSplit {
                    tops: [l(t1), l(t2)],
                    below: [l(a), l(b)],
                }),
                (&[a1, a2], &[b1, b2]) if m0.len() == 2 && a1 == b1 && a2 == b2 => {
                    Some(TopLayerCase::OrdinalSumPair {
                        tops: [l(t1), l(t2)],
                        below: [l(a1), l(a2)],
                    })
                }
                (&[x, y], &[a]) if m0.len() == 2 && (a == x || a == y) => Some(TopLayerCase::PartialOrdinalSumPair {
                    a: l(a),
                    b: l(t1),
                    other: l(t2),
                    below_other: l(a),
                }),
                (&[a], &[x, y]) if m0.len() == 2 && (a == x || a == y) => Some(TopLayerCase::PartialOrdinalSumPair {
                    a: l(a),
                    b: l(t2),
                    other: l(t1),
                    below_other: l(a),
                }),
                _ => None,
            }
        }
        _ => None,
    };
    case.ok_or_else(|| Error::NoCaseMatches(describe()))
}

fn sub_poset(p: &Poset, labels: &[String]) -> Poset {
    let idx: Vec<usize> = labels.iter().map(|s| p.index_of(s).expect("label of p")).collect();
    p.restrict(&idx)
}

/// Label in `r` of the facet `f` of `Ord(q)`, through an explicit
/// isomorphism `Ord(q) -> r`.
fn facet_in(q: &Poset, f: FacetLabel, r: &CombPolytope) -> String {
    let o = order_polytope(q);
    let iso = isomorphism(&o, r).expect("replayed polytope matches the order polytope");
    let i = o.facet_index(&f.render(q)).expect("facet of the order polytope");
    r.facets()[iso.facets[i]].clone()
}

fn vertex_in(q: &Poset, filter_label: &str, r: &CombPolytope) -> String {
    let o = order_polytope(q);
    let iso = isomorphism(&o, r).expect("replayed polytope matches the order polytope");
    let i = o.vertex_index(filter_label).expect("vertex of the order polytope");
    r.vertices()[iso.vertices[i]].clone()
}

impl Builder {
    /// Leaf for a poset with one element or two incomparable ones.
    fn small_leaf(&mut self, q: &Poset, path: &str) -> Result<(CertNode, CombPolytope)> {
        match q.len() {
            1 => self.base(Base::Simplex { d: 1 }, path),
            2 => self.base(Base::Hypercube { d: 2 }, path),
            _ => unreachable!("leaves have one or two elements"),
        }
    }

    /// Direct sum of two chains: a square, then maximal splits up each chain.
    fn two_chains(&mut self, p: &Poset, comps: &[Vec<usize>], path: &str) -> Result<(CertNode, CombPolytope)> {
        let chain = |c: &[usize]| {
            let mut c = c.to_vec();
            c.sort_by_key(|&x| (0..p.len()).filter(|&y| p.lt(y, x)).count());
            c.into_iter().map(|i| p.label(i).to_string()).collect::<Vec<_>>()
        };
        let (a, b) = (chain(&comps[0]), chain(&comps[1]));
        let mut steps: Vec<(String, String)> = Vec::new();
        for w in a.windows(2).chain(b.windows(2)) {
            steps.push((w[0].clone(), w[1].clone()));
        }
        // innermost node first: build path names from the leaf outwards
        let depth = steps.len();
        let node_path = |k: usize| {
            let mut s = path.to_string();
            for _ in 0..depth - k {
                s.push_str(".child");
            }
            s
        };
        let mut cur = vec![a[0].clone(), b[0].clone()];
        let (mut node, mut r) = self.small_leaf(&sub_poset(p, &cur), &node_path(0))?;
        for (k, (below, top)) in steps.into_iter().enumerate() {
            let q = sub_poset(p, &cur);
            let ib = q.index_of(&below)?;
            let facet = facet_in(&q, FacetLabel::Max(ib), &r);
            let note = Some(format!("split maximal {below}, new element {top}"));
            (node, r) = self.wedge(&node_path(k + 1), node, &r, &facet, note)?;
            cur.push(top);
        }
        Ok((node, r))
    }

    fn poset(&mut self, p: &Poset, path: &str) -> Result<(CertNode, CombPolytope)> {
        if p.is_empty() {
            return self.base(Base::Point, path);
        }
        let comps = p.hasse_components();
        if comps.len() == 2 {
            return self.two_chains(p, &comps, path);
        }
        if p.len() == 1 {
            return self.base(Base::Simplex { d: 1 }, path);
        }
        let rho = p.rank_function().expect("ranked");
        let case = classify_top_layer(p, &rho)?;
        let top_rank = rho.rho.iter().copied().max().unwrap_or(0);
        let rest: Vec<String> = (0..p.len())
            .filter(|&i| rho.rho[i] < top_rank)
            .map(|i| p.label(i).to_string())
            .collect();
        let p0 = sub_poset(p, &rest);
        let sub = |k: &str| format!("{path}.{k}");
        match case {
            TopLayerCase::MaxSplit { top, below } => {
                let (n0, r0) = self.poset(&p0, &sub("child"))?;
                let facet = facet_in(&p0, FacetLabel::Max(p0.index_of(&below)?), &r0);
                let note = Some(format!("split maximal {below}, new element {top}"));
                self.wedge(path, n0, &r0, &facet, note)
            }
            TopLayerCase::DoubleMaxSplit { tops, below } => {
                let inner = sub("child");
                let (n0, r0) = self.poset(&p0, &format!("{inner}.child"))?;
                let f1 = facet_in(&p0, FacetLabel::Max(p0.index_of(&below[0])?), &r0);
                let note1 = Some(format!("split maximal {}, new element {}", below[0], tops[0]));
                let (n1, r1) = self.wedge(&inner, n0, &r0, &f1, note1)?;
                let mut labels1 = rest.clone();
                labels1.push(tops[0].clone());
                let p1 = sub_poset(p, &labels1);
                let f2 = facet_in(&p1, FacetLabel::Max(p1.index_of(&below[1])?), &r1);
                let note2 = Some(format!("split maximal {}, new element {}", below[1], tops[1]));
                self.wedge(path, n1, &r1, &f2, note2)
            }
            TopLayerCase::OrdinalSumSingleton { top, .. } => self.ordinal_sum(p, &p0, &[top], path),
            TopLayerCase::OrdinalSumPair { tops, .. } | TopLayerCase::OrdinalSumPairOverSingleton { tops, .. } => {
                self.ordinal_sum(p, &p0, &tops, path)
            }
            TopLayerCase::PartialOrdinalSumPair { a, b, other, .. } => {
                let (n0, r0) = self.poset(&p0, &sub("left"))?;
                let q = sub_poset(p, &[b.clone(), other.clone()]);
                let (nq, rq) = self.small_leaf(&q, &sub("right"))?;
                let f1 = facet_in(&p0, FacetLabel::Max(p0.index_of(&a)?), &r0);
                let f2 = facet_in(&q, FacetLabel::Min(q.index_of(&b)?), &rq);
                let r = facet_product(&r0, &f1, &rq, &f2)?;
                Ok((
                    CertNode::FacetProduct {
                        left: Box::new(n0),
                        f1,
                        right: Box::new(nq),
                        f2,
                        note: Some(format!("partial ordinal sum at ({a}, {b})")),
                    },
                    r,
                ))
            }
        }
    }

    fn ordinal_sum(&mut self, p: &Poset, p0: &Poset, tops: &[String], path: &str) -> Result<(CertNode, CombPolytope)> {
        let (n0, r0) = self.poset(p0, &format!("{path}.left"))?;
        let q = sub_poset(p, tops);
        let (nq, rq) = self.small_leaf(&q, &format!("{path}.right"))?;
        let v = vertex_in(p0, &crate::order_polytope::empty_filter_label(), &r0);
        let w = vertex_in(&q, &crate::order_polytope::full_filter_label(&q), &rq);
        let r = vertex_sum(&r0, &v, &rq, &w)?;
        Ok((
            CertNode::VertexSum {
                left: Box::new(n0),
                v,
                right: Box::new(nq),
                w,
                note: Some(format!("ordinal sum with {{{}}}", tops.join(","))),
            },
            r,
        ))
    }
}

/// Certificate for `Ord(p)`, or a refusal when `p` has a 3-antichain or no
/// rank function. Errors only when the base oracle runs out of budget.
pub fn certify_poset(p: &Poset, budget: Budget) -> Result<Outcome> {
    if let Some(w) = p.find_antichain3() {
        return Ok(Outcome::Refused(Refusal::ThreeAntichain {
            witness: w.iter().map(|&i| p.label(i).to_string()).collect(),
        }));
    }
    if let Err(ob) = p.rank_function_or_obstruction() {
        let names = |w: &[usize]| w.iter().map(|&i| p.label(i).to_string()).collect();
        return Ok(Outcome::Refused(Refusal::Unranked {
            walk_a: names(&ob.walk_a),
            walk_b: names(&ob.walk_b),
        }));
    }
    let mut b = Builder {
        budget,
        evidence: Vec::new(),
    };
    let (tree, r) = b.poset(p, "tree")?;
    Ok(Outcome::Certified(Certificate {
        target_canonical: canonical_hex(&r),
        tree,
        evidence: b.evidence,
    }))
}

// -------------------------------------------------------------- verifier

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: String, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

struct Verifier<'a> {
    cert: &'a Certificate,
    budget: Budget,
    report: VerifyReport,
}

impl Verifier<'_> {
    fn recorded_side(&self, path: &str) -> Option<&str> {
        self.cert.evidence.iter().find_map(|e| match e {
            Evidence::SideCondition { node, result, .. } if node == path => Some(result.as_str()),
            _ => None,
        })
    }

    fn recorded_oracle(&self, path: &str) -> Option<&Evidence> {
        self.cert
            .evidence
            .iter()
            .find(|e| matches!(e, Evidence::Oracle { node, .. } if node == path))
    }

    fn op(&mut self, path: &str, what: &str, r: Result<CombPolytope>) -> Option<CombPolytope> {
        match r {
            Ok(p) => {
                self.report.push(format!("replay {path}: {what}"), true, "");
                Some(p)
            }
            Err(e) => {
                self.report.push(format!("replay {path}: {what}"), false, e.to_string());
                None
            }
        }
    }

    fn condition(&mut self, path: &str, what: &str, recorded: &str, c: Result<SplitCondition>) {
        let name = format!("side condition {path}: {what}");
        match c {
            Ok(c) => {
                let ok = c.is_safe() && c.name() == recorded && self.recorded_side(path) == Some(recorded);
                self.report.push(name, ok, format!("recomputed {}, recorded {recorded}", c.name()));
            }
            Err(e) => self.report.push(name, false, e.to_string()),
        }
    }

    fn walk(&mut self, node: &CertNode, path: &str) -> Option<CombPolytope> {
        let sub = |k: &str| format!("{path}.{k}");
        match node {
            CertNode::Base { base } => {
                let known = base.is_known();
                self.report.push(format!("base {path}: {}", base.name()), known, "");
                if known && base.needs_oracle() {
                    let name = format!("oracle {path}: {}", base.name());
                    match oracle_evidence(*base, path, self.budget) {
                        Ok(fresh) => {
                            let ok = matches!(fresh, Evidence::Oracle { equal: true, .. })
                                && self.recorded_oracle(path) == Some(&fresh);
                            self.report.push(name, ok, "slack ideal = toric ideal, digests match");
                        }
                        Err(e) => self.report.push(name, false, e.to_string()),
                    }
                }
                Some(base.polytope())
            }
            CertNode::Dual { child } => {
                let c = self.walk(child, &sub("child"))?;
                Some(dual(&c))
            }
            CertNode::Join { left, right } => {
                let a = self.walk(left, &sub("left"));
                let b = self.walk(right, &sub("right"));
                let (a, b) = (a?, b?);
                self.op(path, "join", join(&a, &b))
            }
            CertNode::VertexSum { left, v, right, w, .. } => {
                let a = self.walk(left, &sub("left"));
                let b = self.walk(right, &sub("right"));
                let (a, b) = (a?, b?);
                self.op(path, &format!("vertex_sum at ({v}, {w})"), vertex_sum(&a, v, &b, w))
            }
            CertNode::VertexSplit { child, vertex, condition } => {
                let c = self.walk(child, &sub("child"))?;
                self.condition(path, &format!("vertex_split at {vertex}"), condition, split_check(&c, vertex));
                self.op(path, &format!("vertex_split at {vertex}"), vertex_split(&c, vertex))
            }
            CertNode::FacetWedge { child, facet, condition, .. } => {
                let c = self.walk(child, &sub("child"))?;
                self.condition(path, &format!("facet_wedge at {facet}"), condition, wedge_check(&c, facet));
                self.op(path, &format!("facet_wedge at {facet}"), facet_wedge(&c, facet))
            }
            CertNode::FacetProduct { left, f1, right, f2, .. } => {
                let a = self.walk(left, &sub("left"));
                let b = self.walk(right, &sub("right"));
                let (a, b) = (a?, b?);
                self.op(path, &format!("facet_product at ({f1}, {f2})"), facet_product(&a, f1, &b, f2))
            }
        }
    }
}

/// Replay the tree, re-run every side condition and base oracle, and
/// compare the result with `target`.
pub fn verify_certificate(cert: &Certificate, target: &CombPolytope, budget: Budget) -> VerifyReport {
    let mut v = Verifier {
        cert,
        budget,
        report: VerifyReport { checks: Vec::new() },
    };
    let result = v.walk(&cert.tree, "tree");
    let mut report = v.report;
    let th = canonical_hex(target);
    report.push(
        "target canonical form".into(),
        th == cert.target_canonical,
        format!("target {th}, recorded {}", cert.target_canonical),
    );
    match result {
        Some(r) => {
            let eq = combinatorially_equivalent(&r, target);
            report.push(
                "replay equivalent to target".into(),
                eq,
                format!(
                    "replayed {}x{} dim {}, target {}x{} dim {}",
                    r.num_facets(),
                    r.num_vertices(),
                    r.dim(),
                    target.num_facets(),
                    target.num_vertices(),
                    target.dim()
                ),
            );
        }
        None => report.push("replay equivalent to target".into(), false, "replay failed"),
    }
    report.push("target morally 2-level".into(), is_morally_2level(target), "");
    report
}
