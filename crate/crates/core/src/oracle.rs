//! Slow independent recomputations used to cross-check the main pipeline.
//!
//! Everything here favors directness over speed: fixed spaces come from
//! stacking difference matrices rather than averaging, windowed solution
//! spaces are computed by annihilating the raw shift rows over the padded
//! window and projecting down (never by the pad-and-restrict
//! intersection), and elimination is a plain column-sweep with back
//! substitution.  Reduced echelon bases are unique per subspace, so two
//! routes agree exactly when their answers are byte-for-byte equal; the
//! digest makes that comparison cheap.

use std::collections::{BTreeSet, HashMap};

use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::group::{apply_to_monomial, GroupTable};
use crate::laurent::{Exponent, ModulePresentation};
use crate::scalars::Cyclotomic;
use crate::windows::{group_matrix, Window, WindowBasis};
use crate::Result;

/// Dimension plus a digest of the canonical basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleResult {
    pub dimension: usize,
    pub basis_hash: String,
}

/// SHA-256 over the canonical rendering of basis rows.  Two subspaces are
/// equal exactly when their reduced echelon bases match, so equal digests
/// mean equal spaces.
pub fn canonical_digest(rows: &[Vec<Cyclotomic>]) -> String {
    let mut hasher = Sha256::new();
    for row in rows {
        for c in row {
            hasher.update(c.to_string().as_bytes());
            hasher.update(b";");
        }
        hasher.update(b"|");
    }
    format!("{:x}", hasher.finalize())
}

/// Reduced echelon basis by full forward sweep and a separate
/// back-substitution pass.
fn echelon_basis(mut rows: Vec<Vec<Cyclotomic>>) -> Vec<Vec<Cyclotomic>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivot_cols = vec![];
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for c in rows[rank].iter_mut() {
            if !c.is_zero() {
                *c = c.mul(&inv).expect("conductors agree");
            }
        }
        for i in rank + 1..rows.len() {
            if !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot_row = rows[rank].clone();
                for (t, s) in rows[i].iter_mut().zip(&pivot_row) {
                    *t = t.sub(&f.mul(s).expect("conductors agree")).expect("conductors agree");
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    for idx in (0..rank).rev() {
        let col = pivot_cols[idx];
        let pivot_row = rows[idx].clone();
        for i in 0..idx {
            if !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for (t, s) in rows[i].iter_mut().zip(&pivot_row) {
                    *t = t.sub(&f.mul(s).expect("conductors agree")).expect("conductors agree");
                }
            }
        }
    }
    rows
}

/// Basis of `{z : R z = 0}` read off the echelon form of `R`.
fn kernel_basis(rows: &[Vec<Cyclotomic>], ncols: usize, conductor: u32) -> Vec<Vec<Cyclotomic>> {
    let ech = echelon_basis(rows.to_vec());
    let pivot_cols: Vec<usize> = ech
        .iter()
        .map(|r| r.iter().position(|c| !c.is_zero()).expect("echelon rows are nonzero"))
        .collect();
    let mut is_pivot = vec![false; ncols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut kernel = vec![];
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Cyclotomic::zero(conductor); ncols];
        v[free] = Cyclotomic::one(conductor);
        for (row, &pc) in ech.iter().zip(&pivot_cols) {
            v[pc] = row[free].neg();
        }
        kernel.push(v);
    }
    kernel
}

/// Dimension of the joint fixed space of all group elements on a window
/// basis, by stacking every `T_g - 1` and counting its kernel.
pub fn brute_fixed_dim(group: &GroupTable, basis: &WindowBasis) -> Result<usize> {
    let m = basis.len();
    let one = Cyclotomic::one(group.conductor());
    let mut rows = vec![];
    for (gi, g) in group.elements().iter().enumerate() {
        if gi == group.identity_index() {
            continue;
        }
        let t = group_matrix(g, basis)?;
        for (bi, mut row) in t.into_iter().enumerate() {
            row[bi] = row[bi].sub(&one)?;
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    Ok(m - echelon_basis(rows).len())
}

/// Symmetric windowed solutions recomputed from scratch: annihilate all
/// generator shifts over the padded window, project to the window, then
/// cut with the invariance rows inside the projected span.
pub fn brute_symmetric_solutions(
    p: &ModulePresentation,
    group: &GroupTable,
    w: &Window,
    pad: i64,
) -> Result<OracleResult> {
    let conductor = p.conductor();
    let k = p.k();

    // Close the window under the exponent action by plain saturation.
    let mut pts: BTreeSet<Exponent> = w.points().cloned().collect();
    loop {
        let mut added = false;
        for x in pts.clone() {
            for g in group.elements() {
                if pts.insert(g.image_exponent(&x)) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let w_closed = Window::from_points(w.n(), w.norm(), pts);
    let w_plus = w_closed.dilate(pad);

    let plus_points: Vec<Exponent> = w_plus.points().cloned().collect();
    let plus_index: HashMap<Exponent, usize> = plus_points
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i))
        .collect();
    let m_plus = k * plus_points.len();
    let coord = |j: usize, i: usize| j * plus_points.len() + i;

    // Every shift of every generator whose support stays inside the
    // padded window, one row per shift.
    let mut rows = vec![];
    for gen in p.generators() {
        if gen.is_zero() {
            continue;
        }
        let support = gen.support();
        let mut shifts = BTreeSet::new();
        for y in &plus_points {
            for s in &support {
                shifts.insert(Exponent(
                    y.0.iter().zip(&s.0).map(|(a, b)| a - b).collect(),
                ));
            }
        }
        'shift: for sh in shifts {
            let mut row = vec![Cyclotomic::zero(conductor); m_plus];
            for (j, poly) in gen.entries().iter().enumerate() {
                for (x, c) in poly.terms() {
                    match plus_index.get(&x.add(&sh)) {
                        Some(&i) => row[coord(j, i)] = c.clone(),
                        None => continue 'shift,
                    }
                }
            }
            rows.push(row);
        }
    }

    // Functions on the padded window annihilating every shift, projected
    // to the window's own coordinates.
    let kernel = kernel_basis(&rows, m_plus, conductor);
    let w_points: Vec<Exponent> = w_closed.points().cloned().collect();
    let m_w = k * w_points.len();
    let wcoord = |j: usize, i: usize| j * w_points.len() + i;
    let projected: Vec<Vec<Cyclotomic>> = kernel
        .iter()
        .map(|z| {
            let mut f = vec![Cyclotomic::zero(conductor); m_w];
            for j in 0..k {
                for (iw, x) in w_points.iter().enumerate() {
                    f[wcoord(j, iw)] = z[coord(j, plus_index[x])].clone();
                }
            }
            f
        })
        .collect();

    // Invariance rows: coeff * f(component, image) - f(component, point).
    let mut constraints = vec![];
    for (gi, g) in group.elements().iter().enumerate() {
        if gi == group.identity_index() {
            continue;
        }
        for j in 0..k {
            for (iw, x) in w_points.iter().enumerate() {
                let (c, y) = apply_to_monomial(g, x)?;
                let ib = w_points
                    .iter()
                    .position(|q| *q == y)
                    .expect("window was closed above");
                let mut row = vec![Cyclotomic::zero(conductor); m_w];
                row[wcoord(j, ib)] = row[wcoord(j, ib)].add(&c)?;
                row[wcoord(j, iw)] = row[wcoord(j, iw)].sub(&Cyclotomic::one(conductor))?;
                if row.iter().any(|v| !v.is_zero()) {
                    constraints.push(row);
                }
            }
        }
    }

    // Cut the projected span with the constraints: solve for coefficient
    // vectors t with R (D^T t) = 0, then map back.
    let system: Vec<Vec<Cyclotomic>> = constraints
        .iter()
        .map(|r| {
            projected
                .iter()
                .map(|d| {
                    let mut acc = Cyclotomic::zero(conductor);
                    for (a, b) in r.iter().zip(d) {
                        if !a.is_zero() && !b.is_zero() {
                            acc = acc.add(&a.mul(b).expect("conductors agree")).expect("conductors agree");
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let coefficient_kernel = kernel_basis(&system, projected.len(), conductor);
    let members: Vec<Vec<Cyclotomic>> = coefficient_kernel
        .iter()
        .map(|t| {
            let mut f = vec![Cyclotomic::zero(conductor); m_w];
            for (ti, d) in t.iter().zip(&projected) {
                if ti.is_zero() {
                    continue;
                }
                for (fv, dv) in f.iter_mut().zip(d) {
                    if !dv.is_zero() {
                        *fv = fv.add(&ti.mul(dv).expect("conductors agree")).expect("conductors agree");
                    }
                }
            }
            f
        })
        .collect();

    let basis = echelon_basis(members);
    Ok(OracleResult {
        dimension: basis.len(),
        basis_hash: canonical_digest(&basis),
    })
}

/// Unroll the one-variable scalar recurrence of a single generator from
/// seed values at `0, 1, ..., order-1`, over the inclusive range
/// `[lo, hi]`.  The order is the exponent spread of the generator.
pub fn recurrence_unroll(
    p: &ModulePresentation,
    seeds: &[Cyclotomic],
    lo: i64,
    hi: i64,
) -> Result<Vec<Cyclotomic>> {
    if p.n() != 1 || p.k() != 1 {
        return Err(Error::Validation(
            "recurrence unrolling needs one variable and one component".into(),
        ));
    }
    let nonzero: Vec<_> = p.generators().iter().filter(|g| !g.is_zero()).collect();
    if nonzero.len() != 1 {
        return Err(Error::Validation(
            "recurrence unrolling needs exactly one nonzero generator".into(),
        ));
    }
    if lo > hi {
        return Err(Error::Validation("empty unrolling range".into()));
    }
    let conductor = p.conductor();
    let poly = &nonzero[0].entries()[0];
    let support = poly.support();
    let e_min = support.first().expect("nonzero polynomial").0[0];
    let e_max = support.last().expect("nonzero polynomial").0[0];
    let order = (e_max - e_min) as usize;
    if seeds.len() != order {
        return Err(Error::SeedLength(seeds.len(), order));
    }
    if order == 0 {
        // A unit monomial annihilates only the zero function.
        return Ok(vec![Cyclotomic::zero(conductor); (hi - lo + 1) as usize]);
    }
    let coeff = |e: i64| poly.coefficient(&Exponent(vec![e]));
    let top_inv = coeff(e_max).inv()?;
    let bottom_inv = coeff(e_min).inv()?;

    let lo_known = lo.min(0);
    let hi_known = hi.max(order as i64 - 1);
    let idx = |t: i64| (t - lo_known) as usize;
    let mut values = vec![Cyclotomic::zero(conductor); (hi_known - lo_known + 1) as usize];
    for (i, s) in seeds.iter().enumerate() {
        values[idx(i as i64)] = s.clone();
    }
    // f(t) from the equation based at t - e_max, solved for the top term.
    for t in order as i64..=hi_known {
        let base = t - e_max;
        let mut acc = Cyclotomic::zero(conductor);
        for e in e_min..e_max {
            let c = coeff(e);
            if !c.is_zero() {
                acc = acc.add(&c.mul(&values[idx(base + e)])?)?;
            }
        }
        values[idx(t)] = acc.neg().mul(&top_inv)?;
    }
    // f(t) from the equation based at t - e_min, solved for the bottom term.
    for t in (lo_known..0).rev() {
        let base = t - e_min;
        let mut acc = Cyclotomic::zero(conductor);
        for e in e_min + 1..=e_max {
            let c = coeff(e);
            if !c.is_zero() {
                acc = acc.add(&c.mul(&values[idx(base + e)])?)?;
            }
        }
        values[idx(t)] = acc.neg().mul(&bottom_inv)?;
    }
    Ok(values[idx(lo)..=idx(hi)].to_vec())
}
