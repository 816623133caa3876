//! Laurent polynomials in `n` commuting variables `s1, ..., sn` with
//! cyclotomic coefficients, vectors of them, and finitely presented
//! submodules of the free module `A^k`.
//!
//! A Laurent polynomial `sum_x c_x sigma^x` is a partial difference operator
//! on functions `f: Z^n -> C` via `(p f)(y) = sum_x c_x f(y + x)`, so a
//! system of equations is a list of module vectors whose shifts span a
//! submodule `P` of `A^k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::scalars::{parse_rational, parse_scalar, Cyclotomic};
use crate::Result;

/// Lattice exponent `x` in `Z^n`, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Exponent(pub Vec<i64>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.dim(), other.dim());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Exponent {
        Exponent(self.0.iter().map(|a| -a).collect())
    }

    /// The `l1` or `linf` magnitude, used for ball membership.
    pub fn norm_l1(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).sum()
    }

    pub fn norm_linf(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Laurent polynomial; only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    n: usize,
    conductor: u32,
    terms: BTreeMap<Exponent, Cyclotomic>,
}

impl LaurentPoly {
    pub fn zero(n: usize, conductor: u32) -> Self {
        LaurentPoly {
            n,
            conductor,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, conductor: u32) -> Self {
        LaurentPoly::monomial(n, Exponent::zero(n), Cyclotomic::one(conductor))
    }

    /// The single-term polynomial `c * sigma^x`.
    pub fn monomial(n: usize, x: Exponent, c: Cyclotomic) -> Self {
        assert_eq!(x.dim(), n, "exponent dimension mismatch");
        let conductor = c.conductor();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(x, c);
        }
        LaurentPoly { n, conductor, terms }
    }

    pub fn from_terms<I>(n: usize, conductor: u32, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Cyclotomic)>,
    {
        let mut p = LaurentPoly::zero(n, conductor);
        for (x, c) in iter {
            if x.dim() != n {
                return Err(Error::DimensionMismatch(x.dim(), n));
            }
            if c.conductor() != conductor {
                return Err(Error::ConductorMismatch(c.conductor(), conductor));
            }
            p.add_term(x, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, x: Exponent, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&x) {
            None => {
                self.terms.insert(x, c);
            }
            Some(old) => {
                let sum = old.add(&c).expect("conductor already checked");
                if !sum.is_zero() {
                    self.terms.insert(x, sum);
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Cyclotomic)> {
        self.terms.iter()
    }

    /// Coefficient at `x` (zero when absent).
    pub fn coefficient(&self, x: &Exponent) -> Cyclotomic {
        self.terms
            .get(x)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    /// The exponents carrying nonzero coefficients, in ascending order.
    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch(self.conductor, other.conductor));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            n: self.n,
            conductor: self.conductor,
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = LaurentPoly::zero(self.n, self.conductor);
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                out.add_term(x.add(y), a.mul(b)?);
            }
        }
        Ok(out)
    }

    /// Multiply by the monomial `c * sigma^x` (cheap key shift).
    pub fn mul_monomial(&self, x: &Exponent, c: &Cyclotomic) -> Result<Self> {
        if c.conductor() != self.conductor {
            return Err(Error::ConductorMismatch(c.conductor(), self.conductor));
        }
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch(x.dim(), self.n));
        }
        let mut out = LaurentPoly::zero(self.n, self.conductor);
        for (y, a) in &self.terms {
            out.add_term(x.add(y), a.mul(c)?);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Result<Self> {
        self.mul_monomial(&Exponent::zero(self.n), c)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms in ascending exponent order; coefficients that
    /// are not plain rationals are parenthesized; unit coefficients on
    /// nonconstant terms are dropped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (x, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = monomial_string(x);
            if mono.is_empty() {
                match c.rational_part() {
                    Some(r) => write!(f, "{r}")?,
                    None => write!(f, "({c})")?,
                }
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                match c.rational_part() {
                    Some(r) => write!(f, "{r}*{mono}")?,
                    None => write!(f, "({c})*{mono}")?,
                }
            }
        }
        Ok(())
    }
}

fn monomial_string(x: &Exponent) -> String {
    let mut parts = vec![];
    for (i, e) in x.0.iter().enumerate() {
        if *e != 0 {
            parts.push(format!("s{}^{}", i + 1, e));
        }
    }
    parts.join(" ")
}

/// Element of the free module `A^k`: one Laurent polynomial per component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleVector {
    n: usize,
    conductor: u32,
    entries: Vec<LaurentPoly>,
}

impl ModuleVector {
    pub fn new(entries: Vec<LaurentPoly>) -> Result<Self> {
        let first = entries
            .first()
            .ok_or_else(|| Error::Validation("module vector needs at least one entry".into()))?;
        let (n, conductor) = (first.n(), first.conductor());
        for e in &entries {
            first.check_compatible(e)?;
        }
        let _ = n;
        Ok(ModuleVector {
            n,
            conductor,
            entries,
        })
    }

    pub fn zero(n: usize, conductor: u32, k: usize) -> Self {
        ModuleVector {
            n,
            conductor,
            entries: vec![LaurentPoly::zero(n, conductor); k],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn entry(&self, j: usize) -> &LaurentPoly {
        &self.entries[j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.k() != other.k() {
            return Err(Error::DimensionMismatch(self.k(), other.k()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(ModuleVector {
            n: self.n,
            conductor: self.conductor,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ModuleVector {
            n: self.n,
            conductor: self.conductor,
            entries: self.entries.iter().map(|p| p.neg()).collect(),
        }
    }

    /// Union of the entries' supports.
    pub fn support(&self) -> BTreeSet<Exponent> {
        let mut out = BTreeSet::new();
        for p in &self.entries {
            out.extend(p.support());
        }
        out
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Apply the monomial operator `c * sigma^x` to every entry of `v`.
pub fn monomial_shift(x: &Exponent, c: &Cyclotomic, v: &ModuleVector) -> Result<ModuleVector> {
    let entries = v
        .entries
        .iter()
        .map(|p| p.mul_monomial(x, c))
        .collect::<Result<_>>()?;
    Ok(ModuleVector {
        n: v.n,
        conductor: v.conductor,
        entries,
    })
}

/// A submodule `P` of `A^k` given by a finite list of generating vectors;
/// `P` is the span of all monomial shifts of the generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModulePresentation {
    n: usize,
    k: usize,
    conductor: u32,
    generators: Vec<ModuleVector>,
}

impl ModulePresentation {
    pub fn new(
        n: usize,
        k: usize,
        conductor: u32,
        generators: Vec<ModuleVector>,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Validation(
                "module presentation needs at least one generator".into(),
            ));
        }
        for g in &generators {
            if g.k() != k {
                return Err(Error::DimensionMismatch(g.k(), k));
            }
            if g.n() != n {
                return Err(Error::DimensionMismatch(g.n(), n));
            }
            if g.conductor() != conductor {
                return Err(Error::ConductorMismatch(g.conductor(), conductor));
            }
        }
        Ok(ModulePresentation {
            n,
            k,
            conductor,
            generators,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.generators
    }

    pub fn is_zero_module(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }
}

/// Split on `sep` at paren depth zero.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = vec![];
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Parse the polynomial syntax: `+`-separated terms, each a rational, a
/// parenthesized scalar, a monomial `s1^a s2^b ...`, or `coefficient*monomial`.
pub fn parse_poly(n: usize, conductor: u32, s: &str) -> Result<LaurentPoly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut acc = LaurentPoly::zero(n, conductor);
    for raw in split_top_level(s, '+') {
        let term = raw.trim();
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in polynomial {s:?}")));
        }
        acc = acc.add(&parse_poly_term(n, conductor, term)?)?;
    }
    Ok(acc)
}

fn parse_poly_term(n: usize, conductor: u32, term: &str) -> Result<LaurentPoly> {
    // Parenthesized cyclotomic coefficient.
    if let Some(rest) = term.strip_prefix('(') {
        let close = matching_paren(rest)
            .ok_or_else(|| Error::Parse(format!("unbalanced parens in {term:?}")))?;
        let c = parse_scalar(conductor, &rest[..close])?;
        let tail = rest[close + 1..].trim();
        let x = if tail.is_empty() {
            Exponent::zero(n)
        } else {
            let mono = tail
                .strip_prefix('*')
                .ok_or_else(|| Error::Parse(format!("expected '*' after scalar in {term:?}")))?;
            parse_monomial(n, mono.trim())?
        };
        return Ok(LaurentPoly::monomial(n, x, c));
    }
    // Bare monomial, possibly negated.
    if term.starts_with('s') {
        let x = parse_monomial(n, term)?;
        return Ok(LaurentPoly::monomial(n, x, Cyclotomic::one(conductor)));
    }
    if let Some(rest) = term.strip_prefix('-') {
        let rest = rest.trim_start();
        if rest.starts_with('s') {
            let x = parse_monomial(n, rest)?;
            return Ok(LaurentPoly::monomial(
                n,
                x,
                Cyclotomic::from_integer(conductor, -1),
            ));
        }
    }
    // Rational coefficient, with or without a monomial part.
    if let Some((coef, mono)) = term.split_once('*') {
        let c = parse_rational(coef)?;
        let x = parse_monomial(n, mono.trim())?;
        return Ok(LaurentPoly::monomial(
            n,
            x,
            Cyclotomic::from_rational(conductor, c),
        ));
    }
    let c = parse_rational(term)?;
    Ok(LaurentPoly::monomial(
        n,
        Exponent::zero(n),
        Cyclotomic::from_rational(conductor, c),
    ))
}

fn matching_paren(after_open: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, ch) in after_open.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                if depth == 0 {
                    return Some(i);
                }
                depth -= 1;
            }
            _ => {}
        }
    }
    None
}

/// Parse `s1^a s2^b ...`; omitted exponents default to 1, omitted variables
/// to 0, repeated variables accumulate.
fn parse_monomial(n: usize, s: &str) -> Result<Exponent> {
    if s.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    let mut x = Exponent::zero(n);
    for fac in s.split_whitespace() {
        let body = fac
            .strip_prefix('s')
            .ok_or_else(|| Error::Parse(format!("bad monomial factor {fac:?}")))?;
        let (idx_str, exp) = match body.split_once('^') {
            Some((i, e)) => (
                i,
                e.parse::<i64>()
                    .map_err(|err| Error::Parse(format!("bad exponent in {fac:?}: {err}")))?,
            ),
            None => (body, 1),
        };
        let idx: usize = idx_str
            .parse()
            .map_err(|err| Error::Parse(format!("bad variable index in {fac:?}: {err}")))?;
        if idx == 0 || idx > n {
            return Err(Error::Parse(format!(
                "variable s{idx} out of range for n = {n}"
            )));
        }
        x.0[idx - 1] += exp;
    }
    Ok(x)
}

/// Parse a module vector: `[p1, ..., pk]`, or a bare polynomial when `k == 1`.
pub fn parse_vector(n: usize, k: usize, conductor: u32, s: &str) -> Result<ModuleVector> {
    let s = s.trim();
    let parts: Vec<String> = if s.starts_with('[') {
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {s:?}")))?;
        split_top_level(inner, ',')
            .into_iter()
            .map(|p| p.to_string())
            .collect()
    } else {
        vec![s.to_string()]
    };
    if parts.len() != k {
        return Err(Error::Parse(format!(
            "vector {s:?} has {} entries, expected {k}",
            parts.len()
        )));
    }
    let entries = parts
        .iter()
        .map(|p| parse_poly(n, conductor, p))
        .collect::<Result<Vec<_>>>()?;
    ModuleVector::new(entries)
}
