//! The automorphism group of the Laurent polynomial ring in `n` variables:
//! the semidirect product of scalings `sigma_i -> r_i sigma_i` (by nonzero
//! scalars, here roots of unity and rationals in `Q(zeta_N)`) with monomial
//! substitutions `sigma_i -> sigma^{m_i}` for a unimodular integer matrix
//! whose rows are the image exponents.
//!
//! An element `g = (r, M)` acts on monomials by
//! `g(sigma^x) = (prod_i r_i^{x_i}) sigma^{M^T x}`, and on the free module
//! `A^k` componentwise.  Composition follows function application:
//! `compose(g, h)` is `g` after `h`.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::laurent::{Exponent, LaurentPoly, ModuleVector};
use crate::scalars::{Cyclotomic, Rational};
use crate::Result;

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
fn det_i128(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&j| a[j][k] != 0) {
                Some(j) => {
                    a.swap(k, j);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn minor(m: &[Vec<i64>], drop_row: usize, drop_col: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != drop_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != drop_col)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Inverse of a unimodular integer matrix via the adjugate.
fn unimodular_inverse(m: &[Vec<i64>], det: i128) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let cof = det_i128(&minor(m, j, i));
            let signed = if (i + j) % 2 == 0 { cof } else { -cof };
            inv[i][j] = (signed * det) as i64; // det is +-1
        }
    }
    inv
}

/// One ring automorphism `(r, M)`: scaling coefficients `r_i` (nonzero)
/// and a unimodular exponent substitution whose row `i` is the image
/// exponent of `sigma_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutElement {
    r: Vec<Cyclotomic>,
    m: Vec<Vec<i64>>,
}

impl AutElement {
    pub fn new(r: Vec<Cyclotomic>, m: Vec<Vec<i64>>) -> Result<Self> {
        let n = r.len();
        if n == 0 {
            return Err(Error::Validation("automorphism needs n >= 1".into()));
        }
        let conductor = r[0].conductor();
        for c in &r {
            if c.conductor() != conductor {
                return Err(Error::ConductorMismatch(conductor, c.conductor()));
            }
            if c.is_zero() {
                return Err(Error::ZeroScaling);
            }
        }
        if m.len() != n {
            return Err(Error::DimensionMismatch(m.len(), n));
        }
        for row in &m {
            if row.len() != n {
                return Err(Error::DimensionMismatch(row.len(), n));
            }
        }
        let det = det_i128(&m);
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(AutElement { r, m })
    }

    pub fn identity(n: usize, conductor: u32) -> Self {
        let r = vec![Cyclotomic::one(conductor); n];
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        AutElement { r, m }
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    pub fn conductor(&self) -> u32 {
        self.r[0].conductor()
    }

    pub fn scalings(&self) -> &[Cyclotomic] {
        &self.r
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self == &AutElement::identity(self.n(), self.conductor())
    }

    /// True when the exponent substitution is trivial (a pure scaling).
    pub fn is_pure_scaling(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.m[i][j] == i64::from(i == j)))
    }

    /// True when every scaling coefficient is 1 (a pure substitution).
    pub fn is_pure_substitution(&self) -> bool {
        self.r.iter().all(|c| c.is_one())
    }

    /// The scaling coefficient `prod_i r_i^{x_i}` picked up by `sigma^x`.
    pub fn coefficient_at(&self, x: &Exponent) -> Result<Cyclotomic> {
        if x.dim() != self.n() {
            return Err(Error::DimensionMismatch(x.dim(), self.n()));
        }
        let mut c = Cyclotomic::one(self.conductor());
        for (ri, &xi) in self.r.iter().zip(&x.0) {
            if xi != 0 {
                c = c.mul(&ri.pow(xi)?)?;
            }
        }
        Ok(c)
    }

    /// Image exponent `M^T x` of `sigma^x`.
    pub fn image_exponent(&self, x: &Exponent) -> Exponent {
        let n = self.n();
        debug_assert_eq!(x.dim(), n);
        let mut y = vec![0i64; n];
        for (i, &xi) in x.0.iter().enumerate() {
            if xi != 0 {
                for (j, yj) in y.iter_mut().enumerate() {
                    *yj += self.m[i][j] * xi;
                }
            }
        }
        Exponent(y)
    }

    /// Smallest `e >= 1` with `g^e = 1`, or `OrderExceeded` past the cap.
    pub fn element_order(&self, cap: usize) -> Result<usize> {
        let id = AutElement::identity(self.n(), self.conductor());
        let mut acc = self.clone();
        for e in 1..=cap {
            if acc == id {
                return Ok(e);
            }
            acc = compose(&acc, self)?;
        }
        Err(Error::OrderExceeded(cap))
    }

    /// Dedup / ordering key: exponent matrix first, then scaling coefficients.
    fn key(&self) -> (Vec<Vec<i64>>, Vec<Vec<Rational>>) {
        (
            self.m.clone(),
            self.r.iter().map(|c| c.coeffs().to_vec()).collect(),
        )
    }
}

/// `g(sigma^x)` as (coefficient, image exponent).
pub fn apply_to_monomial(g: &AutElement, x: &Exponent) -> Result<(Cyclotomic, Exponent)> {
    Ok((g.coefficient_at(x)?, g.image_exponent(x)))
}

/// Apply `g` to a Laurent polynomial term by term.
pub fn apply_to_poly(g: &AutElement, p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.n() != g.n() {
        return Err(Error::DimensionMismatch(p.n(), g.n()));
    }
    if p.conductor() != g.conductor() {
        return Err(Error::ConductorMismatch(p.conductor(), g.conductor()));
    }
    let mut terms = vec![];
    for (x, c) in p.terms() {
        let (coeff, y) = apply_to_monomial(g, x)?;
        terms.push((y, coeff.mul(c)?));
    }
    LaurentPoly::from_terms(p.n(), p.conductor(), terms)
}

/// Apply `g` componentwise to a module vector.
pub fn apply_to_vector(g: &AutElement, v: &ModuleVector) -> Result<ModuleVector> {
    let entries = v
        .entries()
        .iter()
        .map(|p| apply_to_poly(g, p))
        .collect::<Result<Vec<_>>>()?;
    ModuleVector::new(entries)
}

/// Composition `g` after `h`: `(compose(g, h))(a) = g(h(a))`.
pub fn compose(g: &AutElement, h: &AutElement) -> Result<AutElement> {
    if g.n() != h.n() {
        return Err(Error::DimensionMismatch(g.n(), h.n()));
    }
    if g.conductor() != h.conductor() {
        return Err(Error::ConductorMismatch(g.conductor(), h.conductor()));
    }
    let n = g.n();
    // sigma_i -> h: r^h_i sigma^{h_i} -> g: r^h_i prod_j (r^g_j)^{h_ij}
    // sigma^{sum_j h_ij g_j}.
    let mut m = vec![vec![0i64; n]; n];
    let mut r = Vec::with_capacity(n);
    for i in 0..n {
        for j in 0..n {
            for t in 0..n {
                m[i][t] += h.m[i][j] * g.m[j][t];
            }
        }
        let mut c = h.r[i].clone();
        for j in 0..n {
            if h.m[i][j] != 0 {
                c = c.mul(&g.r[j].pow(h.m[i][j])?)?;
            }
        }
        r.push(c);
    }
    Ok(AutElement { r, m })
}

/// Inverse automorphism.
pub fn inverse(g: &AutElement) -> Result<AutElement> {
    let n = g.n();
    let det = det_i128(&g.m);
    let w = unimodular_inverse(&g.m, det);
    // g^{-1}(sigma_i) = s_i sigma^{w_i} with s_i = prod_j r_j^{-w_ij}.
    let mut r = Vec::with_capacity(n);
    for wi in &w {
        let mut s = Cyclotomic::one(g.conductor());
        for (j, &wij) in wi.iter().enumerate() {
            if wij != 0 {
                s = s.mul(&g.r[j].pow(-wij)?)?;
            }
        }
        r.push(s);
    }
    Ok(AutElement { r, m: w })
}

/// A finite group of automorphisms, closed under composition; element 0 is
/// the identity and the remaining elements appear in generation order.
#[derive(Clone, Debug)]
pub struct GroupTable {
    n: usize,
    conductor: u32,
    elements: Vec<AutElement>,
}

impl GroupTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[AutElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &AutElement {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    /// Assemble a table from explicit elements without closure checks;
    /// used internally for tests of error paths.
    #[cfg(test)]
    pub(crate) fn from_elements_unchecked(
        n: usize,
        conductor: u32,
        elements: Vec<AutElement>,
    ) -> Self {
        GroupTable {
            n,
            conductor,
            elements,
        }
    }

    /// The trivial group.
    pub fn trivial(n: usize, conductor: u32) -> Self {
        GroupTable {
            n,
            conductor,
            elements: vec![AutElement::identity(n, conductor)],
        }
    }

    /// Index of `g` in the table, if present.
    pub fn position(&self, g: &AutElement) -> Option<usize> {
        self.elements.iter().position(|e| e == g)
    }
}

/// Close a generating set under composition by breadth-first search,
/// erroring out when the closure would exceed `max_order`.
pub fn generate_group(generators: &[AutElement], max_order: usize) -> Result<GroupTable> {
    let first = generators
        .first()
        .ok_or_else(|| Error::Validation("group generation needs at least one generator".into()))?;
    let n = first.n();
    let conductor = first.conductor();
    for g in generators {
        if g.n() != n {
            return Err(Error::DimensionMismatch(g.n(), n));
        }
        if g.conductor() != conductor {
            return Err(Error::ConductorMismatch(g.conductor(), conductor));
        }
    }
    let identity = AutElement::identity(n, conductor);
    let mut elements = vec![identity.clone()];
    let mut seen: BTreeMap<_, usize> = BTreeMap::new();
    seen.insert(identity.key(), 0);
    let mut frontier = vec![identity];
    while let Some(cur) = frontier.pop() {
        for gen in generators {
            let next = compose(&cur, gen)?;
            if seen.contains_key(&next.key()) {
                continue;
            }
            if elements.len() >= max_order {
                return Err(Error::OrderExceeded(max_order));
            }
            seen.insert(next.key(), elements.len());
            elements.push(next.clone());
            frontier.push(next);
        }
    }
    Ok(GroupTable {
        n,
        conductor,
        elements,
    })
}

/// Default closure bound used by the command-line front end.
pub const DEFAULT_MAX_ORDER: usize = 10_000;
