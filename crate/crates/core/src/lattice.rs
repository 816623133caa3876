//! Invariant sublattices and orbit structure.
//!
//! A group element `(r, M)` multiplies the monomial `sigma^x` by
//! `prod_i r_i^{x_i}`.  When every `r_i` is a root of unity, the exponents
//! `x` picking up coefficient 1 from every element form a finite-index
//! sublattice: the common kernel of congruences `a . x = 0 (mod M)` where
//! the `a` are discrete logarithms of the scaling coefficients.  Symmetric
//! solutions of scaling-invariant systems live on this sublattice, so the
//! windowed submodule can be contracted to it.
//!
//! For the exponent action itself, windows decompose into orbits; the
//! projection check asks whether every non-excluded orbit sum is reachable
//! from the submodule when the excluded orbits' coordinates are left free.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::group::{AutElement, GroupTable};
use crate::laurent::{Exponent, LaurentPoly, ModulePresentation};
use crate::linalg;
use crate::scalars::Cyclotomic;
use crate::windows::{
    is_closed, span_rows, stabilize_submodule_window, SubspaceBasis, Window, WindowBasis,
};
use crate::Result;

fn identity_i128(n: usize) -> Vec<Vec<i128>> {
    let mut m = vec![vec![0i128; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

fn row_op(a: &mut [Vec<i128>], target: usize, source: usize, q: i128) {
    if q == 0 {
        return;
    }
    let src = a[source].clone();
    for (t, s) in a[target].iter_mut().zip(src) {
        *t -= q * s;
    }
}

/// Row Hermite normal form with a unimodular transform: returns `(H, U)`
/// with `U * A = H`, pivots positive, entries above each pivot reduced
/// into `[0, pivot)`, zero rows last.
fn row_hnf_with_transform(a: Vec<Vec<i128>>) -> (Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let nr = a.len();
    let nc = a.first().map_or(0, |r| r.len());
    let mut a = a;
    let mut u = identity_i128(nr);
    let mut r = 0usize;
    for c in 0..nc {
        if r == nr {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..nr {
                if a[i][c] != 0 && best.is_none_or(|b| a[i][c].abs() < a[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap(r, b);
            u.swap(r, b);
            let mut clear = true;
            for i in r + 1..nr {
                if a[i][c] != 0 {
                    let q = a[i][c].div_euclid(a[r][c]);
                    row_op(&mut a, i, r, q);
                    row_op(&mut u, i, r, q);
                    if a[i][c] != 0 {
                        clear = false;
                    }
                }
            }
            if clear {
                break;
            }
        }
        if a[r][c] != 0 {
            if a[r][c] < 0 {
                for v in a[r].iter_mut() {
                    *v = -*v;
                }
                for v in u[r].iter_mut() {
                    *v = -*v;
                }
            }
            for i in 0..r {
                let q = a[i][c].div_euclid(a[r][c]);
                row_op(&mut a, i, r, q);
                row_op(&mut u, i, r, q);
            }
            r += 1;
        }
    }
    (a, u)
}

/// Basis of `{x : A x = 0}` over the integers.
fn integer_kernel(a: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let transpose: Vec<Vec<i128>> = (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j]).collect())
        .collect();
    let (h, u) = row_hnf_with_transform(transpose);
    h.iter()
        .zip(u)
        .filter(|(hrow, _)| hrow.iter().all(|&v| v == 0))
        .map(|(_, urow)| urow)
        .collect()
}

/// A sublattice of `Z^n` in canonical (row Hermite) form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sublattice {
    n: usize,
    basis: Vec<Vec<i64>>,
}

impl Sublattice {
    /// Canonicalize a generating set.
    pub fn from_generators(n: usize, generators: &[Vec<i64>]) -> Result<Sublattice> {
        for g in generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch(g.len(), n));
            }
        }
        let rows: Vec<Vec<i128>> = generators
            .iter()
            .map(|g| g.iter().map(|&v| v as i128).collect())
            .collect();
        let (h, _) = row_hnf_with_transform(rows);
        let basis = h
            .into_iter()
            .filter(|row| row.iter().any(|&v| v != 0))
            .map(|row| {
                row.into_iter()
                    .map(|v| i64::try_from(v).expect("lattice entries fit i64"))
                    .collect()
            })
            .collect();
        Ok(Sublattice { n, basis })
    }

    /// The full lattice `Z^n`.
    pub fn full(n: usize) -> Sublattice {
        let basis = (0..n)
            .map(|i| {
                let mut row = vec![0i64; n];
                row[i] = 1;
                row
            })
            .collect();
        Sublattice { n, basis }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.n
    }

    /// Basis vectors (rows of the Hermite form).
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Integer membership by staircase division.
    pub fn contains(&self, x: &Exponent) -> bool {
        if x.dim() != self.n {
            return false;
        }
        let mut rem: Vec<i128> = x.0.iter().map(|&v| v as i128).collect();
        for row in &self.basis {
            let pivot_col = match row.iter().position(|&v| v != 0) {
                Some(c) => c,
                None => continue,
            };
            let pivot = row[pivot_col] as i128;
            if rem[pivot_col] % pivot != 0 {
                return false;
            }
            let q = rem[pivot_col] / pivot;
            for (t, &s) in rem.iter_mut().zip(row) {
                *t -= q * s as i128;
            }
        }
        rem.iter().all(|&v| v == 0)
    }
}

/// Index of a full-rank sublattice in `Z^n` (product of Hermite pivots).
pub fn sublattice_index(s: &Sublattice) -> Result<i128> {
    if !s.is_full_rank() {
        return Err(Error::NotFullRank(s.rank(), s.n()));
    }
    let mut index = 1i128;
    for row in &s.basis {
        let pivot = row
            .iter()
            .find(|&&v| v != 0)
            .expect("full-rank rows are nonzero");
        index *= (*pivot as i128).abs();
    }
    Ok(index)
}

/// The coefficient picked up by `sigma^x` under `g`.
pub fn coefficient_character(g: &AutElement, x: &Exponent) -> Result<Cyclotomic> {
    g.coefficient_at(x)
}

/// A primitive root of unity of order `lcm(2, N)` inside `Q(zeta_N)`:
/// `zeta_N` for even `N`, `-zeta_N^{(N+1)/2}` for odd `N`.
fn max_order_root(conductor: u32) -> (u32, Cyclotomic) {
    if conductor % 2 == 0 {
        (conductor, Cyclotomic::root_of_unity(conductor, 1))
    } else {
        let half = (conductor as i64 + 1) / 2;
        let z = Cyclotomic::root_of_unity(conductor, half).neg();
        (2 * conductor, z)
    }
}

/// The sublattice of exponents on which every scaling coefficient acts
/// trivially: solve `a_g . x = 0 (mod M)` where `a_g` collects discrete
/// logarithms of the coefficients base the maximal root of unity.
/// `NonTorsionCoefficient` when some coefficient is not a root of unity.
pub fn invariant_sublattice(group: &GroupTable) -> Result<Sublattice> {
    let n = group.n();
    let (order, root) = max_order_root(group.conductor());
    let mut powers = vec![Cyclotomic::one(group.conductor())];
    for _ in 1..order {
        powers.push(powers.last().unwrap().mul(&root)?);
    }
    let dlog = |c: &Cyclotomic| powers.iter().position(|p| p == c);

    let mut rows: Vec<Vec<i128>> = vec![];
    for g in group.elements() {
        let mut row = Vec::with_capacity(n);
        let mut nontrivial = false;
        for r in g.scalings() {
            let a = dlog(r).ok_or(Error::NonTorsionCoefficient)?;
            if a != 0 {
                nontrivial = true;
            }
            row.push(a as i128);
        }
        if nontrivial {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(Sublattice::full(n));
    }
    // Kernel of [A | M I] in Z^{n+m}, projected to the x block.
    let m = rows.len();
    let mut augmented = vec![];
    for (i, row) in rows.iter().enumerate() {
        let mut a = row.clone();
        a.extend((0..m).map(|j| if j == i { order as i128 } else { 0 }));
        augmented.push(a);
    }
    let kernel = integer_kernel(&augmented);
    let generators: Vec<Vec<i64>> = kernel
        .iter()
        .map(|v| {
            v[..n]
                .iter()
                .map(|&x| i64::try_from(x).expect("lattice entries fit i64"))
                .collect()
        })
        .collect();
    let s = Sublattice::from_generators(n, &generators)?;
    debug_assert!(s.is_full_rank(), "M Z^n always embeds in the kernel");
    Ok(s)
}

/// The part of the stabilized `P_w` supported on the sublattice: vectors
/// of the windowed submodule whose support (in every component) lies on
/// `S`.
pub fn contract(
    p: &ModulePresentation,
    s: &Sublattice,
    w: &Window,
    pad_schedule: &[i64],
) -> Result<SubspaceBasis> {
    let (p_w, _, _) = stabilize_submodule_window(p, w, pad_schedule)?;
    let basis = p_w.window_basis().clone();
    let keep: Vec<bool> = basis
        .entries()
        .iter()
        .map(|(_, x)| s.contains(x))
        .collect();
    let inside = linalg::supported_on(p_w.vectors(), &keep);
    Ok(SubspaceBasis::from_vectors(
        basis,
        p.conductor(),
        inside.rows,
    ))
}

/// Orbits of a window under the exponent action, ordered by least point;
/// each orbit carries its indicator sum as a Laurent polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitDecomposition {
    orbits: Vec<Vec<Exponent>>,
    sums: Vec<LaurentPoly>,
}

impl OrbitDecomposition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbits(&self) -> &[Vec<Exponent>] {
        &self.orbits
    }

    pub fn sums(&self) -> &[LaurentPoly] {
        &self.sums
    }

    /// Index of the orbit containing `x`.
    pub fn orbit_of(&self, x: &Exponent) -> Option<usize> {
        self.orbits.iter().position(|o| o.contains(x))
    }
}

/// Decompose a window into orbits; errors when the window is not closed.
pub fn orbit_decomposition(group: &GroupTable, w: &Window) -> Result<OrbitDecomposition> {
    if !is_closed(w, group) {
        return Err(Error::NotClosed);
    }
    let n = w.n();
    let conductor = group.conductor();
    let mut seen: BTreeSet<Exponent> = BTreeSet::new();
    let mut orbits = vec![];
    let mut sums = vec![];
    for start in w.points() {
        if seen.contains(start) {
            continue;
        }
        let mut orbit: BTreeSet<Exponent> = BTreeSet::new();
        let mut frontier = vec![start.clone()];
        while let Some(x) = frontier.pop() {
            if !orbit.insert(x.clone()) {
                continue;
            }
            for g in group.elements() {
                let y = g.image_exponent(&x);
                if !orbit.contains(&y) {
                    frontier.push(y);
                }
            }
        }
        seen.extend(orbit.iter().cloned());
        let sum = LaurentPoly::from_terms(
            n,
            conductor,
            orbit
                .iter()
                .map(|x| (x.clone(), Cyclotomic::one(conductor))),
        )?;
        orbits.push(orbit.into_iter().collect::<Vec<_>>());
        sums.push(sum);
    }
    Ok(OrbitDecomposition { orbits, sums })
}

/// Outcome of the orbit projection check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrbitCover {
    /// Every non-excluded orbit sum is reachable from the submodule with
    /// the excluded orbits' coordinates left free.
    Covered,
    NotCovered {
        orbit_index: usize,
        component: usize,
        representative: Exponent,
    },
}

/// For each non-excluded orbit and component, ask whether some element of
/// the windowed submodule span agrees with the orbit indicator sum on all
/// coordinates outside the excluded orbits.
pub fn orbit_projection_check(
    p: &ModulePresentation,
    group: &GroupTable,
    w: &Window,
    excluded: &[Exponent],
    pad: i64,
) -> Result<OrbitCover> {
    let decomposition = orbit_decomposition(group, w)?;
    let mut excluded_ids = BTreeSet::new();
    for rep in excluded {
        let id = decomposition.orbit_of(rep).ok_or_else(|| {
            Error::Validation(format!("excluded representative {rep} is not in the window"))
        })?;
        excluded_ids.insert(id);
    }
    let excluded_points: BTreeSet<&Exponent> = excluded_ids
        .iter()
        .flat_map(|&i| decomposition.orbits()[i].iter())
        .collect();

    let w_plus = w.dilate(pad);
    let basis_plus = WindowBasis::new(w_plus, p.k());
    let span = span_rows(p, &basis_plus)?;
    let constrained: Vec<usize> = basis_plus
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, (_, x))| !excluded_points.contains(x))
        .map(|(i, _)| i)
        .collect();
    let restricted = linalg::rref(linalg::restrict_columns(&span.rows, &constrained));

    let conductor = p.conductor();
    for (oi, orbit) in decomposition.orbits().iter().enumerate() {
        if excluded_ids.contains(&oi) {
            continue;
        }
        for j in 0..p.k() {
            let mut target = vec![Cyclotomic::zero(conductor); basis_plus.len()];
            for x in orbit {
                let pos = basis_plus
                    .position(j, x)
                    .expect("window points are inside the dilation");
                target[pos] = Cyclotomic::one(conductor);
            }
            let target_restricted: Vec<Cyclotomic> = constrained
                .iter()
                .map(|&c| target[c].clone())
                .collect();
            if !linalg::in_span(&restricted, &target_restricted) {
                return Ok(OrbitCover::NotCovered {
                    orbit_index: oi,
                    component: j,
                    representative: orbit[0].clone(),
                });
            }
        }
    }
    Ok(OrbitCover::Covered)
}
