//! Symbolic slack matrices, their minors, and the slack and toric ideals.

use std::collections::{HashMap, HashSet};

use super::groebner::Budget;
use super::ideal::{saturate, Ideal};
use super::poly::{rat, Polynomial};
use crate::error::Result;
use crate::graph::NonIncidenceGraph;
use crate::polytope::CombPolytope;

/// Matrix whose nonzero entries are distinct variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    nvars: usize,
    entries: Vec<Vec<Option<usize>>>,
}

impl SymbolicMatrix {
    /// Number the 1s of a 0/1 pattern row-major.
    pub fn from_pattern(pattern: &[Vec<u8>]) -> Self {
        let mut k = 0;
        let entries = pattern
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| {
                        (x != 0).then(|| {
                            k += 1;
                            k - 1
                        })
                    })
                    .collect()
            })
            .collect();
        Self { nvars: k, entries }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        self.entries[i][j]
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols())
            .map(|j| (0..self.rows()).map(|i| self.entries[i][j]).collect())
            .collect();
        Self {
            nvars: self.nvars,
            entries,
        }
    }

    /// Determinant of the submatrix on `rows` x `cols` (bitmasks of equal
    /// popcount), expanding along the lowest row with memoization.
    fn det(&self, rows: u64, cols: u64, memo: &mut HashMap<(u64, u64), Polynomial>) -> Polynomial {
        if rows == 0 {
            return Polynomial::one(self.nvars);
        }
        if let Some(p) = memo.get(&(rows, cols)) {
            return p.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let rest = rows & (rows - 1);
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign_pos = true;
        let mut c = cols;
        while c != 0 {
            let j = c.trailing_zeros() as usize;
            c &= c - 1;
            if let Some(v) = self.entries[r][j] {
                let sub = self.det(rest, cols & !(1u64 << j), memo);
                if !sub.is_zero() {
                    let mut e = vec![0u32; self.nvars];
                    e[v] = 1;
                    let term = sub.mul_term(&e, &rat(if sign_pos { 1 } else { -1 }));
                    acc = &acc + &term;
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert((rows, cols), acc.clone());
        acc
    }
}

/// Symbolic slack matrix of a polytope, variables matching the edges of its
/// non-incidence graph.
pub fn symbolic_slack(p: &CombPolytope) -> SymbolicMatrix {
    SymbolicMatrix::from_pattern(p.support())
}

fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | 1 << i));
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for t in i + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Every `k x k` minor, zeros included, rows outer and columns inner in
/// lexicographic subset order.
pub fn minors_raw(m: &SymbolicMatrix, k: usize) -> Vec<Polynomial> {
    assert!(m.rows() <= 64 && m.cols() <= 64, "minor expansion supports at most 64 rows and columns");
    if k == 0 || k > m.rows() || k > m.cols() {
        return Vec::new();
    }
    let mut memo = HashMap::new();
    let rs = k_subsets(m.rows(), k);
    let cs = k_subsets(m.cols(), k);
    let mut out = Vec::with_capacity(rs.len() * cs.len());
    for &r in &rs {
        for &c in &cs {
            out.push(m.det(r, c, &mut memo));
        }
    }
    out
}

/// Nonzero `k x k` minors up to sign, in first-appearance order.
pub fn minor_generators(m: &SymbolicMatrix, k: usize) -> Vec<Polynomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in minors_raw(m, k) {
        if p.is_zero() {
            continue;
        }
        let p = p.sign_normalized();
        if seen.insert(p.to_string()) {
            out.push(p);
        }
    }
    out
}

/// `Minors_{d+2}(S_P(x)) : (x_1 ... x_N)^∞`.
pub fn slack_ideal(p: &CombPolytope, budget: Budget) -> Result<Ideal> {
    let m = symbolic_slack(p);
    let n = m.nvars();
    let gens = minor_generators(&m, p.dim() + 2);
    let i = Ideal::new(n, gens)?;
    saturate(&i, &vec![1; n], budget)
}

/// Binomials of the chordless cycles of the non-incidence graph.
pub fn toric_ideal(p: &CombPolytope) -> Result<Ideal> {
    toric_ideal_bounded(p, None)
}

pub fn toric_ideal_bounded(p: &CombPolytope, max_cycles: Option<usize>) -> Result<Ideal> {
    let g = NonIncidenceGraph::new(p);
    let cycles = match max_cycles {
        Some(cap) => g.chordless_cycles_capped(None, cap)?,
        None => g.chordless_cycles(None)?,
    };
    let mut gens = Vec::with_capacity(cycles.len());
    for c in &cycles {
        gens.push(g.cycle_binomial(c)?);
    }
    Ideal::new(g.num_edges(), gens)
}
