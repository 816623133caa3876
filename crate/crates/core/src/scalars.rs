//! Exact scalars: arbitrary-precision rationals and elements of cyclotomic
//! fields `Q(zeta_N)`.
//!
//! A [`Cyclotomic`] is represented by its coefficient vector of length
//! `phi(N)` in the power basis `1, z, ..., z^{phi(N)-1}` modulo the `N`-th
//! cyclotomic polynomial `Phi_N`.  Because `Phi_N` is irreducible this
//! representation is unique, so structural equality is field equality.
//! Mixing conductors is an error, never an implicit embedding.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;
use crate::Result;

/// Exact rational number.
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rational_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational `num/den`.  Panics when `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"p"` or `"p/q"` with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Euler's totient `phi(n)`.
pub fn euler_phi(n: u32) -> usize {
    assert!(n >= 1, "phi is defined for n >= 1");
    let mut remaining = n;
    let mut result = n as u64;
    let mut p = 2u32;
    while p * p <= remaining {
        if remaining % p == 0 {
            while remaining % p == 0 {
                remaining /= p;
            }
            result -= result / p as u64;
        }
        p += 1;
    }
    if remaining > 1 {
        result -= result / remaining as u64;
    }
    result as usize
}

/// Exact division of integer polynomials (ascending coefficients); the
/// divisor must be monic and the division must leave no remainder.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    assert!(dn >= dd);
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let v = &rem[k + i] - &c * d;
            rem[k + i] = v;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// Coefficients of the `n`-th cyclotomic polynomial `Phi_n`, ascending in
/// degree, monic, of length `phi(n) + 1`.
///
/// Computed by dividing `x^n - 1` by `Phi_d` for every proper divisor `d`
/// of `n`, filling in the divisors in increasing order.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut table: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut q = vec![BigInt::zero(); d as usize + 1];
        q[0] = -BigInt::one();
        q[d as usize] = BigInt::one();
        for (e, phi_e) in &table {
            if d % e == 0 {
                q = int_poly_div_exact(&q, phi_e);
            }
        }
        table.insert(d, q);
    }
    table.remove(&n).unwrap()
}

thread_local! {
    static PHI_CACHE: RefCell<BTreeMap<u32, Rc<Vec<BigInt>>>> = RefCell::new(BTreeMap::new());
}

fn phi_poly(n: u32) -> Rc<Vec<BigInt>> {
    PHI_CACHE.with(|cache| {
        cache
            .borrow_mut()
            .entry(n)
            .or_insert_with(|| Rc::new(cyclotomic_polynomial(n)))
            .clone()
    })
}

/// Element of `Q(zeta_N)` where `N` is the `conductor`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    fn from_reduced(conductor: u32, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len(), euler_phi(conductor));
        Cyclotomic { conductor, coeffs }
    }

    /// Reduce an arbitrary-length coefficient vector modulo `Phi_N`.
    fn reduce(conductor: u32, mut dense: Vec<Rational>) -> Self {
        let phi = euler_phi(conductor);
        let modulus = phi_poly(conductor);
        for d in (phi..dense.len()).rev() {
            if dense[d].is_zero() {
                continue;
            }
            let lead = std::mem::replace(&mut dense[d], Rational::zero());
            // x^d = x^{d-phi} * x^phi and x^phi = -sum_{i<phi} m_i x^i.
            for i in 0..phi {
                let m = Rational::from_integer(modulus[i].clone());
                let v = &dense[d - phi + i] - &lead * m;
                dense[d - phi + i] = v;
            }
        }
        dense.resize(phi, Rational::zero());
        Cyclotomic::from_reduced(conductor, dense)
    }

    /// The zero of `Q(zeta_N)`.
    pub fn zero(conductor: u32) -> Self {
        Cyclotomic::from_reduced(conductor, vec![Rational::zero(); euler_phi(conductor)])
    }

    /// The one of `Q(zeta_N)`.
    pub fn one(conductor: u32) -> Self {
        Cyclotomic::from_rational(conductor, Rational::one())
    }

    /// Embed a rational number.
    pub fn from_rational(conductor: u32, r: Rational) -> Self {
        let mut c = vec![Rational::zero(); euler_phi(conductor)];
        c[0] = r;
        Cyclotomic::from_reduced(conductor, c)
    }

    /// Embed a machine integer.
    pub fn from_integer(conductor: u32, v: i64) -> Self {
        Cyclotomic::from_rational(conductor, rational_int(v))
    }

    /// The root of unity `zeta_N^j` (exponent taken modulo `N`).
    pub fn root_of_unity(conductor: u32, j: i64) -> Self {
        let n = conductor as i64;
        let jm = j.rem_euclid(n) as usize;
        let mut dense = vec![Rational::zero(); jm + 1];
        dense[jm] = Rational::one();
        Cyclotomic::reduce(conductor, dense)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when the root-of-unity part vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational, if it is one.
    pub fn rational_part(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as an integer; errors distinguish "not rational" from
    /// "rational but not integral".
    pub fn as_integer(&self) -> Result<BigInt> {
        let r = self.rational_part().ok_or(Error::NotRational)?;
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(Error::NotIntegral)
        }
    }

    fn check_conductor(&self, other: &Self) -> Result<()> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        }
    }

    /// Checked sum; the conductors must agree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic::from_reduced(self.conductor, coeffs))
    }

    /// Checked difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic::from_reduced(self.conductor, coeffs))
    }

    /// Checked product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_conductor(other)?;
        let phi = self.coeffs.len();
        let mut dense = vec![Rational::zero(); 2 * phi.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &dense[i + j] + a * b;
                dense[i + j] = v;
            }
        }
        Ok(Cyclotomic::reduce(self.conductor, dense))
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        Cyclotomic::from_reduced(self.conductor, self.coeffs.iter().map(|c| -c).collect())
    }

    /// Scale by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic::from_reduced(self.conductor, self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_N` in `Q[x]`; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.conductor));
        }
        let modulus: Vec<Rational> = phi_poly(self.conductor)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // Track u with u * self = r (mod Phi_N); at termination r is a
        // nonzero constant because Phi_N is irreducible.
        let mut old_r = modulus;
        let mut r: Vec<Rational> = self.coeffs.clone();
        let mut old_u: Vec<Rational> = vec![];
        let mut u: Vec<Rational> = vec![Rational::one()];
        while !rp_is_zero(&r) {
            let (q, rem) = rp_divmod(&old_r, &r);
            let new_u = rp_sub(&old_u, &rp_mul(&q, &u));
            old_r = std::mem::replace(&mut r, rem);
            old_u = std::mem::replace(&mut u, new_u);
        }
        debug_assert_eq!(rp_deg(&old_r), Some(0), "Phi_N must be irreducible");
        let g = old_r[0].clone();
        let inv_coeffs: Vec<Rational> = old_u.iter().map(|c| c / &g).collect();
        Ok(Cyclotomic::reduce(self.conductor, inv_coeffs))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut result = Cyclotomic::one(self.conductor);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// The Galois map `z -> z^a` for `gcd(a, N) = 1`.
    pub fn galois(&self, a: u32) -> Result<Self> {
        if num::integer::gcd(a as i64, self.conductor as i64) != 1 {
            return Err(Error::Validation(format!(
                "galois exponent {a} is not coprime to the conductor {}",
                self.conductor
            )));
        }
        let mut acc = Cyclotomic::zero(self.conductor);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = Cyclotomic::root_of_unity(self.conductor, a as i64 * i as i64);
            acc = acc.add(&z.scale(c))?;
        }
        Ok(acc)
    }
}

// Dense rational polynomial helpers for the extended Euclid above
// (ascending coefficients, possibly with zero leading entries).

fn rp_deg(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn rp_is_zero(p: &[Rational]) -> bool {
    rp_deg(p).is_none()
}

fn rp_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let v = &out[i + j] + x * y;
            out[i + j] = v;
        }
    }
    out
}

fn rp_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        let v = &out[i] - y;
        out[i] = v;
    }
    out
}

fn rp_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = rp_deg(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem: Vec<Rational> = num.to_vec();
    let dn = match rp_deg(&rem) {
        Some(d) if d >= dd => d,
        _ => return (vec![], rem),
    };
    let mut quot = vec![Rational::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for i in 0..=dd {
            let v = &rem[k + i] - &c * &den[i];
            rem[k + i] = v;
        }
    }
    (quot, rem)
}

impl fmt::Display for Cyclotomic {
    /// Canonical form: basis terms in ascending power, `p/q` rationals,
    /// explicit `*z^i` on every nonconstant term, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z^{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(N={}, {})", self.conductor, self)
    }
}

/// Parse the scalar syntax: sums of `p/q`, `z^j`, and `p/q*z^j` terms.
///
/// `z` denotes `zeta_N` for the given conductor; exponents may be negative
/// or exceed `phi(N)` and are reduced.  A bare leading `-` on a `z` term is
/// shorthand for coefficient `-1`.
pub fn parse_scalar(conductor: u32, s: &str) -> Result<Cyclotomic> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let mut acc = Cyclotomic::zero(conductor);
    for raw in s.split('+') {
        let term = raw.trim();
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in scalar {s:?}")));
        }
        acc = acc.add(&parse_scalar_term(conductor, term)?)?;
    }
    Ok(acc)
}

fn parse_scalar_term(conductor: u32, term: &str) -> Result<Cyclotomic> {
    if let Some((coef, zpow)) = term.split_once('*') {
        let c = parse_rational(coef)?;
        let j = parse_zpow(zpow.trim())?;
        return Ok(Cyclotomic::root_of_unity(conductor, j).scale(&c));
    }
    if let Some(rest) = term.strip_prefix('-') {
        if rest.trim_start().starts_with('z') {
            let j = parse_zpow(rest.trim_start())?;
            return Ok(Cyclotomic::root_of_unity(conductor, j).neg());
        }
    }
    if term.starts_with('z') {
        let j = parse_zpow(term)?;
        return Ok(Cyclotomic::root_of_unity(conductor, j));
    }
    Ok(Cyclotomic::from_rational(conductor, parse_rational(term)?))
}

fn parse_zpow(s: &str) -> Result<i64> {
    if s == "z" {
        return Ok(1);
    }
    let rest = s
        .strip_prefix("z^")
        .ok_or_else(|| Error::Parse(format!("bad root-of-unity term {s:?}")))?;
    rest.parse::<i64>()
        .map_err(|e| Error::Parse(format!("bad exponent in {s:?}: {e}")))
}
