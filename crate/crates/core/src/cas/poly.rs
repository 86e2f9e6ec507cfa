//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Monomial exponent vector.
pub type Mono = Vec<u32>;

/// Monomial orders used by the Gröbner engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermOrder {
    GRevLex,
    Lex,
    /// Graded reverse lex on the first `k` variables, ties broken by graded
    /// reverse lex on the rest. Eliminates the first `k` variables.
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            TermOrder::GRevLex => grevlex(a, b),
            TermOrder::Lex => a.cmp(b),
            TermOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

/// `b / a`, assuming `a` divides `b`.
pub fn mono_div(b: &[u32], a: &[u32]) -> Mono {
    b.iter().zip(a).map(|(&x, &y)| x - y).collect()
}

pub fn mono_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

pub fn mono_degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// A polynomial in a fixed number of variables. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Mono, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn monomial(nvars: usize, exps: Mono, c: BigRational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { nvars, terms }
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigRational::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[u32]) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        assert_eq!(m.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| mono_degree(m)).max().unwrap_or(0)
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading(&self, order: TermOrder) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted by `order`, largest first.
    pub fn sorted_terms(&self, order: TermOrder) -> Vec<(Mono, BigRational)> {
        let mut t: Vec<(Mono, BigRational)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: TermOrder) -> Self {
        match self.leading(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Make the lex-leading coefficient positive.
    pub fn sign_normalized(&self) -> Self {
        match self.terms.iter().next_back() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn mul_term(&self, m: &[u32], c: &BigRational) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, x)| (mono_mul(k, m), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut s = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t *= x;
                }
            }
            s += t;
        }
        s
    }

    /// Move into `new_nvars` variables, sending `x_i` to `x_{map[i]}`.
    pub fn embed(&self, new_nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut p = Self::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; new_nvars];
            for (i, &x) in m.iter().enumerate() {
                e[map[i]] += x;
            }
            p.add_term(e, c.clone());
        }
        p
    }

    /// Variables that appear with a nonzero exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m[i] > 0))
            .collect()
    }

    /// Render with the given variable names, terms in `order`.
    pub fn format_with(&self, names: &[String], order: TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                .collect();
            if factors.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

/// Names `x1..xn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_names(self.nvars), TermOrder::Lex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(mono_mul(a, b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Product of the listed variables (0-based).
pub fn product_of_vars(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Mono {
    let mut e = vec![0; nvars];
    for v in vars {
        e[v] += 1;
    }
    e
}
