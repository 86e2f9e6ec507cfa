//! Ideals with a cached Gröbner basis, saturation and containment.

use std::cell::OnceCell;

use super::groebner::{groebner, reduce, Budget};
use super::poly::{mono_degree, Mono, Polynomial, TermOrder};
use crate::error::{Error, Result};

/// Order used for cached bases.
pub const DEFAULT_ORDER: TermOrder = TermOrder::GRevLex;

#[derive(Debug, Clone)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
    basis: OnceCell<Vec<Polynomial>>,
}

impl PartialEq for Ideal {
    /// Structural equality of generator lists, not ideal equality.
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.generators == other.generators
    }
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::VariableMismatch(nvars, g.nvars()));
            }
        }
        Ok(Self {
            nvars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceCell::new(),
        })
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, Vec::new()).unwrap()
    }

    /// Ideal whose generators are already a reduced basis for [`DEFAULT_ORDER`].
    fn with_basis(nvars: usize, basis: Vec<Polynomial>) -> Self {
        let cell = OnceCell::new();
        let _ = cell.set(basis.clone());
        Self {
            nvars,
            generators: basis,
            basis: cell,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis in [`DEFAULT_ORDER`], computed once.
    pub fn groebner_basis(&self, budget: Budget) -> Result<&[Polynomial]> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = groebner(&self.generators, DEFAULT_ORDER, budget)?;
        Ok(self.basis.get_or_init(|| b))
    }

    pub fn is_unit(&self, budget: Budget) -> Result<bool> {
        let b = self.groebner_basis(budget)?;
        Ok(b.len() == 1 && b[0].is_constant())
    }

    pub fn contains_poly(&self, f: &Polynomial, budget: Budget) -> Result<bool> {
        if f.nvars() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, f.nvars()));
        }
        Ok(reduce(f, self.groebner_basis(budget)?, DEFAULT_ORDER).is_zero())
    }

    /// Move generators into a ring with `new_nvars` variables, sending
    /// variable `i` to `map[i]`.
    pub fn embed(&self, new_nvars: usize, map: &[usize]) -> Self {
        Self::new(new_nvars, self.generators.iter().map(|g| g.embed(new_nvars, map)).collect()).unwrap()
    }
}

/// `J ⊆ I`: every generator of `J` reduces to zero modulo a basis of `I`.
pub fn ideal_contains(i: &Ideal, j: &Ideal, budget: Budget) -> Result<bool> {
    if i.nvars != j.nvars {
        return Err(Error::VariableMismatch(i.nvars, j.nvars));
    }
    for g in &j.generators {
        if !i.contains_poly(g, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ideal_equals(i: &Ideal, j: &Ideal, budget: Budget) -> Result<bool> {
    Ok(ideal_contains(i, j, budget)? && ideal_contains(j, i, budget)?)
}

/// `I : m^∞` by adjoining `t` (as variable 0) with `t*m - 1` and
/// eliminating `t` in a block order.
pub fn saturate(ideal: &Ideal, m: &[u32], budget: Budget) -> Result<Ideal> {
    let n = ideal.nvars;
    if m.len() != n {
        return Err(Error::VariableMismatch(n, m.len()));
    }
    if ideal.is_zero() {
        return Ok(Ideal::zero(n));
    }
    if mono_degree(m) == 0 {
        let b = ideal.groebner_basis(budget)?.to_vec();
        return Ok(Ideal::with_basis(n, b));
    }
    let shift: Vec<usize> = (1..=n).collect();
    let mut gens: Vec<Polynomial> = ideal.generators.iter().map(|g| g.embed(n + 1, &shift)).collect();
    let mut tm: Mono = vec![0; n + 1];
    tm[0] = 1;
    tm[1..].copy_from_slice(m);
    gens.push(&Polynomial::monomial(n + 1, tm, super::poly::rat(1)) - &Polynomial::one(n + 1));
    let elim = groebner(&gens, TermOrder::Block(1), budget)?;
    let kept: Vec<Polynomial> = elim
        .into_iter()
        .filter(|g| g.terms().all(|(mono, _)| mono[0] == 0))
        .map(|g| drop_first_var(&g))
        .collect();
    let b = groebner(&kept, DEFAULT_ORDER, budget)?;
    Ok(Ideal::with_basis(n, b))
}

/// Second route: one variable at a time, by repeated quotients
/// `J : x = (J ∩ (x)) / x` until the chain stops growing. The intersection
/// comes from eliminating `t` in `t*J + (1 - t)*(x)`.
pub fn saturate_by_variables(ideal: &Ideal, m: &[u32], budget: Budget) -> Result<Ideal> {
    let n = ideal.nvars;
    if m.len() != n {
        return Err(Error::VariableMismatch(n, m.len()));
    }
    let mut cur = Ideal::with_basis(n, groebner(&ideal.generators, DEFAULT_ORDER, budget)?);
    for v in (0..n).filter(|&v| m[v] > 0) {
        loop {
            let next = quotient_by_variable(&cur, v, budget)?;
            // J ⊆ J : x always; equal bases mean the chain is stable
            if next.generators == cur.generators {
                break;
            }
            cur = next;
        }
    }
    Ok(cur)
}

fn quotient_by_variable(j: &Ideal, v: usize, budget: Budget) -> Result<Ideal> {
    let n = j.nvars;
    if j.is_zero() {
        return Ok(Ideal::zero(n));
    }
    let shift: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(n + 1, 0);
    let x = Polynomial::var(n + 1, v + 1);
    let mut gens: Vec<Polynomial> = j.generators.iter().map(|g| &t * &g.embed(n + 1, &shift)).collect();
    gens.push(&(&Polynomial::one(n + 1) - &t) * &x);
    let elim = groebner(&gens, TermOrder::Block(1), budget)?;
    let mut x_off = vec![0u32; n];
    x_off[v] = 1;
    let divided: Vec<Polynomial> = elim
        .into_iter()
        .filter(|g| g.terms().all(|(mono, _)| mono[0] == 0))
        .map(|g| {
            let g = drop_first_var(&g);
            debug_assert!(g.terms().all(|(mono, _)| mono[v] > 0));
            Polynomial::from_terms(n, g.terms().map(|(mono, c)| (super::poly::mono_div(mono, &x_off), c.clone())))
        })
        .collect();
    Ok(Ideal::with_basis(n, groebner(&divided, DEFAULT_ORDER, budget)?))
}

fn drop_first_var(g: &Polynomial) -> Polynomial {
    let n = g.nvars() - 1;
    Polynomial::from_terms(n, g.terms().map(|(m, c)| (m[1..].to_vec(), c.clone())))
}
