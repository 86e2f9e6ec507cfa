//! Buchberger's algorithm with the product and chain criteria, returning
//! reduced Gröbner bases.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{
    mono_coprime, mono_degree, mono_div, mono_divides, mono_lcm, mono_mul, Mono, Polynomial, TermOrder,
};
use crate::error::{Error, Result};

/// Hard limits for a Gröbner computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// S-pairs that may be reduced (pairs skipped by a criterion are free).
    pub max_spairs: usize,
    /// Largest total degree allowed for a basis element.
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_spairs: 100_000,
            max_degree: 30,
        }
    }
}

type Term = (Mono, BigRational);

/// Terms in ascending order, so the leading term is last.
#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<Term>,
}

impl GPoly {
    fn from_poly(p: &Polynomial, order: TermOrder) -> Self {
        let mut terms = p.sorted_terms(order);
        terms.reverse();
        Self { terms }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Mono {
        &self.terms.last().unwrap().0
    }

    fn lc(&self) -> &BigRational {
        &self.terms.last().unwrap().1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if self.is_zero() {
            return;
        }
        let inv = self.lc().recip();
        if inv.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.1 *= &inv;
        }
    }

    fn degree(&self) -> u32 {
        self.terms.iter().map(|t| mono_degree(&t.0)).max().unwrap_or(0)
    }
}

/// `p - c * x^shift * g`, all lists ascending.
fn sub_scaled(p: &[Term], c: &BigRational, shift: &[u32], g: &[Term], order: TermOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut gj: Option<Term> = g.first().map(|(m, x)| (mono_mul(m, shift), x * c));
    while i < p.len() || gj.is_some() {
        let take = match (&p.get(i), &gj) {
            (Some(a), Some(b)) => order.cmp(&a.0, &b.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        match take {
            Ordering::Less => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let (m, x) = gj.take().unwrap();
                out.push((m, -x));
                j += 1;
                gj = g.get(j).map(|(m, x)| (mono_mul(m, shift), x * c));
            }
            Ordering::Equal => {
                let (m, x) = gj.take().unwrap();
                let v = &p[i].1 - x;
                if !v.is_zero() {
                    out.push((m, v));
                }
                i += 1;
                j += 1;
                gj = g.get(j).map(|(m, x)| (mono_mul(m, shift), x * c));
            }
        }
    }
    out
}

/// Full normal form of `f` modulo `basis` (monic elements).
fn normal_form(f: Vec<Term>, basis: &[GPoly], order: TermOrder) -> Vec<Term> {
    let mut p = f;
    let mut rem: Vec<Term> = Vec::new();
    while let Some((m, c)) = p.last() {
        match basis.iter().find(|g| mono_divides(g.lm(), m)) {
            Some(g) => {
                let shift = mono_div(m, g.lm());
                let coef = c / g.lc();
                p = sub_scaled(&p, &coef, &shift, &g.terms, order);
            }
            None => rem.push(p.pop().unwrap()),
        }
    }
    rem.reverse();
    rem
}

fn s_poly(a: &GPoly, b: &GPoly, order: TermOrder) -> Vec<Term> {
    let l = mono_lcm(a.lm(), b.lm());
    let sa = mono_div(&l, a.lm());
    let sb = mono_div(&l, b.lm());
    let left: Vec<Term> = a.terms.iter().map(|(m, x)| (mono_mul(m, &sa), x / a.lc())).collect();
    sub_scaled(&left, &b.lc().recip(), &sb, &b.terms, order)
}

fn check_vars(polys: &[Polynomial]) -> Result<usize> {
    let n = polys.first().map_or(0, Polynomial::nvars);
    for p in polys {
        if p.nvars() != n {
            return Err(Error::VariableMismatch(n, p.nvars()));
        }
    }
    Ok(n)
}

/// Reduced Gröbner basis, sorted by leading monomial (ascending).
pub fn groebner(gens: &[Polynomial], order: TermOrder, budget: Budget) -> Result<Vec<Polynomial>> {
    let nvars = check_vars(gens)?;
    let mut basis: Vec<GPoly> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut gp = GPoly::from_poly(g, order);
        gp.make_monic();
        if gp.degree() > budget.max_degree {
            return Err(Error::BudgetExceeded(format!(
                "generator degree {} exceeds {}",
                gp.degree(),
                budget.max_degree
            )));
        }
        basis.push(gp);
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let mut spairs = 0usize;
    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = mono_lcm(basis[a.0].lm(), basis[a.1].lm());
                let lb = mono_lcm(basis[b.0].lm(), basis[b.1].lm());
                mono_degree(&la)
                    .cmp(&mono_degree(&lb))
                    .then_with(|| order.cmp(&la, &lb))
                    .then_with(|| a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (a, b) = (&basis[i], &basis[j]);
        if mono_coprime(a.lm(), b.lm()) {
            continue;
        }
        let l = mono_lcm(a.lm(), b.lm());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && mono_divides(basis[k].lm(), &l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        spairs += 1;
        if spairs > budget.max_spairs {
            return Err(Error::BudgetExceeded(format!(
                "more than {} S-pairs",
                budget.max_spairs
            )));
        }
        let s = s_poly(a, b, order);
        let r = normal_form(s, &basis, order);
        if r.is_empty() {
            continue;
        }
        let mut h = GPoly { terms: r };
        h.make_monic();
        if h.degree() > budget.max_degree {
            return Err(Error::BudgetExceeded(format!(
                "basis degree {} exceeds {}",
                h.degree(),
                budget.max_degree
            )));
        }
        if h.terms.len() == 1 && mono_degree(h.lm()) == 0 {
            return Ok(vec![Polynomial::one(nvars)]);
        }
        let new = basis.len();
        basis.push(h);
        for k in 0..new {
            pending.insert((k, new));
        }
    }
    Ok(finish(basis, nvars, order))
}

/// Minimalize, interreduce, normalize and sort.
fn finish(basis: Vec<GPoly>, nvars: usize, order: TermOrder) -> Vec<Polynomial> {
    let mut keep: Vec<GPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && mono_divides(h.lm(), g.lm()) && (h.lm() != g.lm() || k < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced: Vec<GPoly> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<GPoly> = keep
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = GPoly {
            terms: normal_form(keep[i].terms.clone(), &others, order),
        };
        g.make_monic();
        reduced.push(g);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    reduced.iter().map(|g| g.to_poly(nvars)).collect()
}

/// Normal form of `f` modulo `basis` (any generating set; the result is
/// unique when `basis` is a Gröbner basis for `order`).
pub fn reduce(f: &Polynomial, basis: &[Polynomial], order: TermOrder) -> Polynomial {
    let gs: Vec<GPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut gp = GPoly::from_poly(g, order);
            gp.make_monic();
            gp
        })
        .collect();
    let r = normal_form(GPoly::from_poly(f, order).terms, &gs, order);
    GPoly { terms: r }.to_poly(f.nvars())
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner(basis: &[Polynomial], order: TermOrder) -> bool {
    let gs: Vec<GPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut gp = GPoly::from_poly(g, order);
            gp.make_monic();
            gp
        })
        .collect();
    for j in 0..gs.len() {
        for i in 0..j {
            if !normal_form(s_poly(&gs[i], &gs[j], order), &gs, order).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cas::poly::rat;

    fn x() -> Polynomial {
        Polynomial::var(2, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(2, 1)
    }
    fn one() -> Polynomial {
        Polynomial::one(2)
    }

    /// Textbook Buchberger with no criteria, then reduction, used as an
    /// independent reference.
    fn naive(gens: &[Polynomial], order: TermOrder) -> Vec<Polynomial> {
        let mut g: Vec<Polynomial> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
        loop {
            let mut added = false;
            let snapshot = g.clone();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let (mi, ci) = snapshot[i].leading(order).unwrap();
                    let (mj, cj) = snapshot[j].leading(order).unwrap();
                    let l = mono_lcm(mi, mj);
                    let a = snapshot[i].mul_term(&mono_div(&l, mi), &ci.recip());
                    let b = snapshot[j].mul_term(&mono_div(&l, mj), &cj.recip());
                    let s = &a - &b;
                    let r = reduce(&s, &g, order);
                    if !r.is_zero() {
                        g.push(r);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        // minimal + reduced
        let mut min: Vec<Polynomial> = Vec::new();
        for (i, p) in g.iter().enumerate() {
            let lp = p.leading(order).unwrap().0.clone();
            let red = g.iter().enumerate().any(|(k, q)| {
                let lq = q.leading(order).unwrap().0;
                k != i && mono_divides(lq, &lp) && (lq != &lp || k < i)
            });
            if !red {
                min.push(p.monic(order));
            }
        }
        let mut out: Vec<Polynomial> = (0..min.len())
            .map(|i| {
                let others: Vec<Polynomial> =
                    min.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
                reduce(&min[i], &others, order).monic(order)
            })
            .collect();
        out.sort_by(|a, b| order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
        out
    }

    #[test]
    fn lex_example() {
        let gens = vec![&(&x() * &x()) - &one(), &(&x() * &y()) - &one()];
        let g = groebner(&gens, TermOrder::Lex, Budget::default()).unwrap();
        let expect = vec![&(&y() * &y()) - &one(), &x() - &y()];
        assert_eq!(g, expect);
        assert_eq!(naive(&gens, TermOrder::Lex), expect);
    }

    #[test]
    fn generator_reduces_to_zero() {
        let f = &(&(&x() * &x()) * &y()) - &(&y() * &y()).scale(&rat(3));
        let g = groebner(&[f.clone()], TermOrder::GRevLex, Budget::default()).unwrap();
        assert!(reduce(&f, &g, TermOrder::GRevLex).is_zero());
        assert!(groebner(&[], TermOrder::GRevLex, Budget::default()).unwrap().is_empty());
    }

    #[test]
    fn matches_naive_on_cyclic3() {
        let n = 3;
        let v: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, i)).collect();
        let e1 = &(&v[0] + &v[1]) + &v[2];
        let e2 = &(&(&v[0] * &v[1]) + &(&v[1] * &v[2])) + &(&v[2] * &v[0]);
        let e3 = &(&(&v[0] * &v[1]) * &v[2]) - &Polynomial::one(n);
        let gens = vec![e1, e2, e3];
        for order in [TermOrder::GRevLex, TermOrder::Lex, TermOrder::Block(1)] {
            let g = groebner(&gens, order, Budget::default()).unwrap();
            assert!(is_groebner(&g, order));
            assert_eq!(g, naive(&gens, order));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let n = 3;
        let v: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, i)).collect();
        let gens = vec![
            &(&v[0] * &v[0]) - &(&v[1] * &v[2]),
            &(&v[1] * &v[1]) - &(&v[0] * &v[2]),
            &(&v[2] * &v[2]) - &(&v[0] * &v[1]),
        ];
        let tiny = Budget {
            max_spairs: 1,
            max_degree: 30,
        };
        assert!(matches!(groebner(&gens, TermOrder::GRevLex, tiny), Err(Error::BudgetExceeded(_))));
        let low = Budget {
            max_spairs: 1000,
            max_degree: 1,
        };
        assert!(matches!(groebner(&gens, TermOrder::GRevLex, low), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn deterministic() {
        let gens = vec![&(&x() * &x()) - &y(), &(&x() * &y()) - &one()];
        let a = groebner(&gens, TermOrder::GRevLex, Budget::default()).unwrap();
        let b = groebner(&gens, TermOrder::GRevLex, Budget::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn inconsistent_system_gives_one() {
        let gens = vec![x(), &x() - &one()];
        assert_eq!(groebner(&gens, TermOrder::GRevLex, Budget::default()).unwrap(), vec![one()]);
    }
}
