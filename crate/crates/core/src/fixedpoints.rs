//! Characters of the group action on windowed spaces, fixed subspaces, and
//! the symmetric-dimension pipeline.
//!
//! For a finite group `G` acting on a finite-dimensional space `S`, the
//! dimension of the fixed subspace `S^G` is the averaged character
//! `(1/|G|) sum_g chi(g)`, always a nonnegative integer; the Reynolds
//! projector `(1/|G|) sum_g rho(g)` computes the subspace itself.  Both
//! paths are implemented and cross-checked.  The headline quantity for a
//! submodule `P` seen through a window `w` is
//! `dim (W/P_w)^G = dim W^G - dim P_w^G`.

use crate::error::Error;
use crate::group::{apply_to_monomial, apply_to_vector, AutElement, GroupTable};
use crate::laurent::ModulePresentation;
use crate::linalg;
use crate::scalars::{rational, Cyclotomic};
use crate::windows::{
    orbit_close, stabilize_submodule_window, Membership, SubspaceBasis, Window, WindowBasis,
};
use crate::Result;

/// Coordinates of `g . v` for a coordinate vector over the window basis;
/// errors when the window is not closed under the exponent action.
fn apply_to_coords(
    g: &AutElement,
    basis: &WindowBasis,
    v: &[Cyclotomic],
) -> Result<Vec<Cyclotomic>> {
    let mut out = vec![Cyclotomic::zero(g.conductor()); v.len()];
    for (a, coeff) in v.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (j, x) = basis.entry(a);
        let (c, y) = apply_to_monomial(g, x)?;
        let b = basis.position(*j, &y).ok_or(Error::NotClosed)?;
        out[b] = out[b].add(&c.mul(coeff)?)?;
    }
    Ok(out)
}

/// Matrix of `g` restricted to the subspace `s`, rows indexed by the basis
/// vectors of `s`; errors with `NotInvariant` when `g` does not map `s`
/// into itself.
pub fn matrix_on_subspace(g: &AutElement, s: &SubspaceBasis) -> Result<Vec<Vec<Cyclotomic>>> {
    let mut rows = vec![];
    for v in s.vectors() {
        let image = apply_to_coords(g, s.window_basis(), v)?;
        let coords = s.coordinates(&image).ok_or(Error::NotInvariant)?;
        rows.push(coords);
    }
    Ok(rows)
}

/// Character `chi(g) = trace` of `g` on the subspace `s`.
pub fn character(g: &AutElement, s: &SubspaceBasis) -> Result<Cyclotomic> {
    let t = matrix_on_subspace(g, s)?;
    let mut trace = Cyclotomic::zero(g.conductor());
    for (i, row) in t.iter().enumerate() {
        trace = trace.add(&row[i])?;
    }
    Ok(trace)
}

/// `dim S^G` by the averaged character formula.
pub fn fixed_dim_by_character(group: &GroupTable, s: &SubspaceBasis) -> Result<usize> {
    let mut sum = Cyclotomic::zero(group.conductor());
    for g in group.elements() {
        sum = sum.add(&character(g, s)?)?;
    }
    let avg = sum.scale(&rational(1, group.order() as i64));
    let value = avg
        .as_integer()
        .map_err(|_| Error::NonIntegralCharacterSum(avg.to_string()))?;
    if value < 0.into() {
        return Err(Error::NonIntegralCharacterSum(avg.to_string()));
    }
    Ok(value.try_into().expect("window dimensions fit usize"))
}

/// `S^G` itself, as the image of the Reynolds projector
/// `(1/|G|) sum_g rho(g)` applied to the basis of `s`.
pub fn reynolds_fixed_space(group: &GroupTable, s: &SubspaceBasis) -> Result<SubspaceBasis> {
    let dim = s.dim();
    let conductor = group.conductor();
    // Average the restricted matrices, then map back to window coordinates.
    let mut avg = vec![vec![Cyclotomic::zero(conductor); dim]; dim];
    for g in group.elements() {
        let t = matrix_on_subspace(g, s)?;
        for i in 0..dim {
            for j in 0..dim {
                avg[i][j] = avg[i][j].add(&t[i][j])?;
            }
        }
    }
    let weight = rational(1, group.order() as i64);
    let m = s.window_basis().len();
    let mut images = vec![];
    for row in &avg {
        let mut w = vec![Cyclotomic::zero(conductor); m];
        for (j, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.scale(&weight);
            for (t, b) in w.iter_mut().zip(&s.vectors()[j]) {
                *t = t.add(&c.mul(b)?)?;
            }
        }
        images.push(w);
    }
    Ok(SubspaceBasis::from_vectors(
        s.window_basis().clone(),
        conductor,
        images,
    ))
}

/// `dim (S/P)^G` computed directly on the quotient, using the complement
/// (non-pivot) coordinates of `p_w` as a basis of `S/P_w`.  Cross-check
/// path for `dim W^G - dim P_w^G`.
pub fn quotient_fixed_dim_via_projector(
    group: &GroupTable,
    p_w: &SubspaceBasis,
) -> Result<usize> {
    let basis = p_w.window_basis();
    let conductor = group.conductor();
    let complement: Vec<usize> = (0..basis.len())
        .filter(|i| !p_w.pivots().contains(i))
        .collect();
    let c = complement.len();
    let mut avg = vec![vec![Cyclotomic::zero(conductor); c]; c];
    for g in group.elements() {
        for (i, &a) in complement.iter().enumerate() {
            let mut e = vec![Cyclotomic::zero(conductor); basis.len()];
            e[a] = Cyclotomic::one(conductor);
            let mut image = apply_to_coords(g, basis, &e)?;
            linalg::reduce_row(p_w.rref(), &mut image);
            for (j, &b) in complement.iter().enumerate() {
                avg[i][j] = avg[i][j].add(&image[b])?;
            }
        }
    }
    let weight = rational(1, group.order() as i64);
    let rows: Vec<Vec<Cyclotomic>> = avg
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.scale(&weight)).collect())
        .collect();
    Ok(linalg::rref(rows).dim())
}

/// One invariance failure: a group element carries a generator outside `P`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvarianceViolation {
    pub element_index: usize,
    pub generator_index: usize,
    pub membership: Membership,
}

/// Outcome of checking that `P` is carried into itself by every element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Invariance {
    Invariant,
    Violations(Vec<InvarianceViolation>),
}

/// Check `g(generator) in P` for every element and generator, using padded
/// membership up to `pad_limit`.
pub fn invariance_check(
    p: &ModulePresentation,
    group: &GroupTable,
    pad_limit: i64,
) -> Result<Invariance> {
    let mut violations = vec![];
    for (gi, g) in group.elements().iter().enumerate() {
        if gi == group.identity_index() {
            continue;
        }
        for (vi, gen) in p.generators().iter().enumerate() {
            let image = apply_to_vector(g, gen)?;
            match crate::windows::membership(&image, p, pad_limit)? {
                Membership::In(_) => {}
                m @ Membership::NotFoundUpTo(_) => violations.push(InvarianceViolation {
                    element_index: gi,
                    generator_index: vi,
                    membership: m,
                }),
            }
        }
    }
    if violations.is_empty() {
        Ok(Invariance::Invariant)
    } else {
        Ok(Invariance::Violations(violations))
    }
}

/// Dimensions observed through one window.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymDimEntry {
    pub label: String,
    pub window_points: usize,
    /// `dim W` (window points times module rank).
    pub dim_window: usize,
    /// `dim W^G`.
    pub dim_window_fixed: usize,
    /// `dim P_w`.
    pub dim_submodule: usize,
    /// `dim P_w^G`.
    pub dim_submodule_fixed: usize,
    /// `dim (W/P_w)^G = dim W^G - dim P_w^G`.
    pub quotient_dim: usize,
    pub pad_used: i64,
    pub pad_stable: bool,
}

/// Verdict over the window schedule.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// The quotient dimension agreed over the final stability run.
    Stabilized(usize),
    /// The quotient dimension increased strictly at every step.
    Growing,
    Inconclusive,
}

/// Full symmetric-dimension report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymDimReport {
    pub entries: Vec<SymDimEntry>,
    pub verdict: Verdict,
    /// True when `P` turned out to be all of `A^k`.
    pub improper: bool,
}

/// The symmetric-dimension pipeline: for each window (orbit-closed before
/// use), compute `dim W^G` and `dim P_w^G` by characters over the
/// stabilized windowed submodule, and report the per-window quotients plus
/// a stabilization verdict.
pub fn symmetric_dimension(
    p: &ModulePresentation,
    group: &GroupTable,
    window_schedule: &[Window],
    pad_schedule: &[i64],
    stability_runs: usize,
) -> Result<SymDimReport> {
    if window_schedule.is_empty() {
        return Err(Error::Validation("window schedule must be nonempty".into()));
    }
    if stability_runs < 2 {
        return Err(Error::Validation(
            "stability_runs must be at least 2".into(),
        ));
    }
    let max_pad = *pad_schedule.iter().max().ok_or_else(|| {
        Error::Validation("pad schedule must be nonempty".into())
    })?;

    // A presentation that contains every unit vector presents all of A^k;
    // quotients are zero regardless of the window.
    let improper = (0..p.k()).all(|j| {
        let mut entries = vec![crate::laurent::LaurentPoly::zero(p.n(), p.conductor()); p.k()];
        entries[j] = crate::laurent::LaurentPoly::one(p.n(), p.conductor());
        let unit = crate::laurent::ModuleVector::new(entries).expect("k >= 1");
        matches!(
            crate::windows::membership(&unit, p, max_pad),
            Ok(Membership::In(_))
        )
    });

    let mut entries = vec![];
    for (idx, w) in window_schedule.iter().enumerate() {
        let w = orbit_close(w, group);
        let basis = WindowBasis::new(w.clone(), p.k());
        let full = SubspaceBasis::full(basis, p.conductor());
        let dim_window = full.dim();
        let dim_window_fixed = fixed_dim_by_character(group, &full)?;
        let (p_w, pad_used, pad_stable) = stabilize_submodule_window(p, &w, pad_schedule)?;
        let dim_submodule = p_w.dim();
        let dim_submodule_fixed = fixed_dim_by_character(group, &p_w)?;
        assert!(
            dim_window_fixed >= dim_submodule_fixed,
            "fixed subspace of a submodule cannot exceed the ambient fixed space"
        );
        entries.push(SymDimEntry {
            label: format!("W{idx}"),
            window_points: w.len(),
            dim_window,
            dim_window_fixed,
            dim_submodule,
            dim_submodule_fixed,
            quotient_dim: dim_window_fixed - dim_submodule_fixed,
            pad_used,
            pad_stable,
        });
    }

    let quotients: Vec<usize> = entries.iter().map(|e| e.quotient_dim).collect();
    let verdict = if improper {
        Verdict::Stabilized(0)
    } else if entries.len() >= stability_runs {
        let tail = &entries[entries.len() - stability_runs..];
        let q = tail[0].quotient_dim;
        if tail.iter().all(|e| e.quotient_dim == q && e.pad_stable) {
            Verdict::Stabilized(q)
        } else if quotients.windows(2).all(|pair| pair[0] < pair[1]) {
            Verdict::Growing
        } else {
            Verdict::Inconclusive
        }
    } else if quotients.len() >= 2 && quotients.windows(2).all(|pair| pair[0] < pair[1]) {
        Verdict::Growing
    } else {
        Verdict::Inconclusive
    };

    Ok(SymDimReport {
        entries,
        verdict,
        improper,
    })
}
