//! Explicit solutions on windows: bases of the annihilator of the windowed
//! submodule, with or without symmetry constraints.
//!
//! A function `f` on a window `w` (one value per component and point) is a
//! windowed solution of the system `P` when it annihilates every vector of
//! `P_w`; it is symmetric when additionally `coeff * f(image) = f(point)`
//! for every group element, which is the dual of the ring action.  For
//! `n = 1` bases are also rendered as centered sequences, with a circumflex
//! marking the origin.

use crate::error::Error;
use crate::group::{apply_to_monomial, GroupTable};
use crate::laurent::{Exponent, ModulePresentation};
use crate::linalg;
use crate::scalars::Cyclotomic;
use crate::windows::{
    membership, orbit_close, stabilize_submodule_window, Membership, Window, WindowBasis,
};
use crate::Result;

/// A function on a window: one scalar per (component, point) basis entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WindowFunction {
    basis: WindowBasis,
    conductor: u32,
    values: Vec<Cyclotomic>,
}

impl WindowFunction {
    pub fn new(basis: WindowBasis, conductor: u32, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != basis.len() {
            return Err(Error::DimensionMismatch(values.len(), basis.len()));
        }
        Ok(WindowFunction {
            basis,
            conductor,
            values,
        })
    }

    pub fn basis(&self) -> &WindowBasis {
        &self.basis
    }

    pub fn window(&self) -> &Window {
        self.basis.window()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Value at a (component, point) pair inside the window.
    pub fn value(&self, component: usize, x: &Exponent) -> Option<&Cyclotomic> {
        self.basis
            .position(component, x)
            .map(|i| &self.values[i])
    }

    /// `(component, point, value)` triples for nonzero values, in basis
    /// order; the serialization used by reports.
    pub fn triples(&self) -> Vec<(usize, Vec<i64>, String)> {
        self.basis
            .entries()
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|((j, x), v)| (*j, x.0.clone(), v.to_string()))
            .collect()
    }

    /// Does `f` satisfy every equation of `P` whose support fits in the
    /// window?
    pub fn annihilates(&self, p: &ModulePresentation) -> Result<bool> {
        if p.k() != self.basis.k() {
            return Err(Error::DimensionMismatch(p.k(), self.basis.k()));
        }
        let w = self.basis.window();
        for gen in p.generators() {
            let support: Vec<Exponent> = gen.support().into_iter().collect();
            if support.is_empty() {
                continue;
            }
            for y in w.points() {
                if !support.iter().all(|e| w.contains(&y.add(e))) {
                    continue;
                }
                let mut acc = Cyclotomic::zero(self.conductor);
                for (j, poly) in gen.entries().iter().enumerate() {
                    for (e, c) in poly.terms() {
                        let v = self
                            .value(j, &y.add(e))
                            .expect("support checked inside window");
                        acc = acc.add(&c.mul(v)?)?;
                    }
                }
                if !acc.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn functions_from_rref(
    basis: &WindowBasis,
    conductor: u32,
    rows: &[Vec<Cyclotomic>],
) -> Vec<WindowFunction> {
    rows.iter()
        .map(|r| WindowFunction {
            basis: basis.clone(),
            conductor,
            values: r.clone(),
        })
        .collect()
}

/// Canonical basis of all windowed solutions: the annihilator of the
/// stabilized `P_w`.
pub fn solution_space_on_window(
    p: &ModulePresentation,
    w: &Window,
    pad_schedule: &[i64],
) -> Result<Vec<WindowFunction>> {
    let (p_w, _, _) = stabilize_submodule_window(p, w, pad_schedule)?;
    let basis = p_w.window_basis().clone();
    let null = linalg::nullspace(p_w.rref(), basis.len(), p.conductor());
    Ok(functions_from_rref(&basis, p.conductor(), &null.rows))
}

/// Rows expressing invariance of a window function under every group
/// element: `coeff * f(component, image) - f(component, point) = 0`.
/// Errors with `NotClosed` when the window is not closed under the action.
pub fn invariance_constraints(
    group: &GroupTable,
    basis: &WindowBasis,
) -> Result<Vec<Vec<Cyclotomic>>> {
    let conductor = group.conductor();
    let mut rows = vec![];
    for (gi, g) in group.elements().iter().enumerate() {
        if gi == group.identity_index() {
            continue;
        }
        for (a, (j, x)) in basis.entries().iter().enumerate() {
            let (c, y) = apply_to_monomial(g, x)?;
            let b = basis.position(*j, &y).ok_or(Error::NotClosed)?;
            let mut row = vec![Cyclotomic::zero(conductor); basis.len()];
            row[b] = row[b].add(&c)?;
            row[a] = row[a].sub(&Cyclotomic::one(conductor))?;
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Canonical basis of the symmetric windowed solutions: the joint
/// annihilator of `P_w` and the invariance rows.  The window is
/// orbit-closed before use.
pub fn symmetric_solution_basis(
    p: &ModulePresentation,
    group: &GroupTable,
    w: &Window,
    pad_schedule: &[i64],
) -> Result<Vec<WindowFunction>> {
    let w = orbit_close(w, group);
    let (p_w, _, _) = stabilize_submodule_window(p, &w, pad_schedule)?;
    let basis = p_w.window_basis().clone();
    let mut rows: Vec<Vec<Cyclotomic>> = p_w.vectors().to_vec();
    rows.extend(invariance_constraints(group, &basis)?);
    let combined = linalg::rref(rows);
    let null = linalg::nullspace(&combined, basis.len(), p.conductor());
    Ok(functions_from_rref(&basis, p.conductor(), &null.rows))
}

/// Outcome of comparing solution bases on nested windows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RestrictionCheck {
    Consistent,
    /// The spans restricted to the comparison region differ.
    Drop {
        dim_inner: usize,
        dim_outer: usize,
    },
}

/// Compare solutions on an inner window with solutions on an outer window,
/// restricted to the region of the inner window where every generator
/// equation is already enforced by both: points whose full generator
/// support neighborhood lies inside the outer window.
pub fn restriction_consistency(
    inner: &[WindowFunction],
    outer: &[WindowFunction],
    p: &ModulePresentation,
) -> Result<RestrictionCheck> {
    let (inner_first, outer_first) = match (inner.first(), outer.first()) {
        (Some(a), Some(b)) => (a, b),
        (None, None) => return Ok(RestrictionCheck::Consistent),
        (Some(_), None) => {
            return Ok(RestrictionCheck::Drop {
                dim_inner: inner.len(),
                dim_outer: 0,
            })
        }
        (None, Some(_)) => {
            return Ok(RestrictionCheck::Drop {
                dim_inner: 0,
                dim_outer: outer.len(),
            })
        }
    };
    let w_inner = inner_first.window();
    let w_outer = outer_first.window();
    let supports: Vec<Vec<Exponent>> = p
        .generators()
        .iter()
        .map(|g| g.support().into_iter().collect())
        .collect();
    let region: Vec<Exponent> = w_inner
        .points()
        .filter(|x| {
            supports
                .iter()
                .all(|supp| supp.iter().all(|e| w_outer.contains(&x.add(e))))
        })
        .cloned()
        .collect();
    let k = p.k();
    let inner_cols: Vec<usize> = (0..k)
        .flat_map(|j| {
            region
                .iter()
                .map(move |x| (j, x))
        })
        .map(|(j, x)| {
            inner_first
                .basis()
                .position(j, x)
                .expect("region is inside the inner window")
        })
        .collect();
    let outer_cols: Vec<usize> = (0..k)
        .flat_map(|j| region.iter().map(move |x| (j, x)))
        .map(|(j, x)| {
            outer_first
                .basis()
                .position(j, x)
                .expect("region points lie in the outer window too")
        })
        .collect();
    let inner_vecs: Vec<Vec<Cyclotomic>> =
        inner.iter().map(|f| f.values.clone()).collect();
    let outer_vecs: Vec<Vec<Cyclotomic>> =
        outer.iter().map(|f| f.values.clone()).collect();
    let inner_restricted = linalg::rref(linalg::restrict_columns(&inner_vecs, &inner_cols));
    let outer_restricted = linalg::rref(linalg::restrict_columns(&outer_vecs, &outer_cols));
    if inner_restricted == outer_restricted {
        Ok(RestrictionCheck::Consistent)
    } else {
        Ok(RestrictionCheck::Drop {
            dim_inner: inner_restricted.dim(),
            dim_outer: outer_restricted.dim(),
        })
    }
}

/// Render a one-variable scalar function as a comma-separated sequence in
/// point order, marking the origin value with a combining circumflex.
/// Returns `None` unless `n = 1` and `k = 1`.
pub fn render_sequence(f: &WindowFunction) -> Option<String> {
    if f.window().n() != 1 || f.basis.k() != 1 {
        return None;
    }
    let origin = Exponent::zero(1);
    let mut parts = vec![];
    for x in f.window().points() {
        let v = f.value(0, x).expect("iterating window points");
        let shown = match v.rational_part() {
            Some(r) => r.to_string(),
            None => format!("({v})"),
        };
        if *x == origin {
            parts.push(format!("{shown}\u{302}"));
        } else {
            parts.push(shown);
        }
    }
    Some(parts.join(", "))
}

/// Outcome of the sampled all-solutions-symmetric criterion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AllSymmetric {
    Holds,
    /// `monomial - g(monomial)` escaped the submodule for this element,
    /// component, and sample point.
    Counterexample {
        element_index: usize,
        component: usize,
        point: Exponent,
    },
}

/// Every solution of `P` is symmetric exactly when `a - g(a)` lies in `P`
/// for every `a`; by linearity it is enough to test monomials.  Samples
/// the criterion over a window of exponents, each membership padded up to
/// `pad_limit`.
pub fn all_solutions_symmetric_check(
    p: &ModulePresentation,
    group: &GroupTable,
    sample_window: &Window,
    pad_limit: i64,
) -> Result<AllSymmetric> {
    let one = Cyclotomic::one(p.conductor());
    for (gi, g) in group.elements().iter().enumerate() {
        if gi == group.identity_index() {
            continue;
        }
        for j in 0..p.k() {
            for x in sample_window.points() {
                let mut entries =
                    vec![crate::laurent::LaurentPoly::zero(p.n(), p.conductor()); p.k()];
                entries[j] = crate::laurent::LaurentPoly::monomial(p.n(), x.clone(), one.clone());
                let monomial = crate::laurent::ModuleVector::new(entries)?;
                let image = crate::group::apply_to_vector(g, &monomial)?;
                let diff = monomial.sub(&image)?;
                match membership(&diff, p, pad_limit)? {
                    Membership::In(_) => {}
                    Membership::NotFoundUpTo(_) => {
                        return Ok(AllSymmetric::Counterexample {
                            element_index: gi,
                            component: j,
                            point: x.clone(),
                        })
                    }
                }
            }
        }
    }
    Ok(AllSymmetric::Holds)
}
