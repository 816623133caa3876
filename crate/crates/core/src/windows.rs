//! Finite windows of the lattice `Z^n` and windowed views of submodules.
//!
//! A window `w` is a finite set of lattice points; the space of module
//! vectors supported inside `w` has the monomial basis indexed by
//! (component, point).  The part of a submodule `P` visible in `w` is
//! computed by the pad-and-restrict scheme: collect every monomial shift of
//! a generator supported in a dilation `W+` of `w`, span them, and
//! intersect with the coordinate subspace of `w`.  Growing the pad gives a
//! nested, eventually stationary family of subspaces; stabilization is
//! always checked, never assumed.

use std::collections::{BTreeSet, HashMap};

use crate::error::Error;
use crate::group::{apply_to_monomial, AutElement, GroupTable};
use crate::laurent::{Exponent, LaurentPoly, ModulePresentation, ModuleVector};
use crate::linalg::{self, Rref};
use crate::scalars::Cyclotomic;
use crate::Result;

/// Ball shape used for windows and dilations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Norm {
    L1,
    Linf,
}

impl Norm {
    pub fn of(&self, x: &Exponent) -> i64 {
        match self {
            Norm::L1 => x.norm_l1(),
            Norm::Linf => x.norm_linf(),
        }
    }

    pub fn parse(s: &str) -> Result<Norm> {
        match s {
            "l1" => Ok(Norm::L1),
            "linf" => Ok(Norm::Linf),
            other => Err(Error::Parse(format!(
                "unknown norm {other:?} (expected \"l1\" or \"linf\")"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Norm::L1 => "l1",
            Norm::Linf => "linf",
        }
    }
}

/// A finite set of lattice points, remembering the ball shape used for
/// dilations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Window {
    n: usize,
    norm: Norm,
    points: BTreeSet<Exponent>,
}

impl Window {
    pub fn from_points<I>(n: usize, norm: Norm, iter: I) -> Window
    where
        I: IntoIterator<Item = Exponent>,
    {
        let points: BTreeSet<Exponent> = iter.into_iter().inspect(|x| {
            debug_assert_eq!(x.dim(), n);
        }).collect();
        Window { n, norm, points }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn norm(&self) -> Norm {
        self.norm
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &Exponent) -> bool {
        self.points.contains(x)
    }

    pub fn points(&self) -> impl Iterator<Item = &Exponent> {
        self.points.iter()
    }

    pub fn is_subset(&self, other: &Window) -> bool {
        self.points.is_subset(&other.points)
    }

    /// Minkowski sum with the radius-`pad` ball of this window's norm.
    pub fn dilate(&self, pad: i64) -> Window {
        assert!(pad >= 0, "pad must be nonnegative");
        if pad == 0 {
            return self.clone();
        }
        let offsets = ball_window(self.n, pad, self.norm);
        let mut points = BTreeSet::new();
        for x in &self.points {
            for d in &offsets.points {
                points.insert(x.add(d));
            }
        }
        Window {
            n: self.n,
            norm: self.norm,
            points,
        }
    }

    /// Componentwise bounding box as a window (always an `linf` box).
    pub fn bounding_box(&self) -> Window {
        bounding_box_of(self.n, self.points.iter())
    }
}

/// Axis-aligned integer box spanned by a set of points.
pub fn bounding_box_of<'a, I>(n: usize, points: I) -> Window
where
    I: IntoIterator<Item = &'a Exponent>,
{
    let mut lo = vec![0i64; n];
    let mut hi = vec![0i64; n];
    let mut any = false;
    for x in points {
        if !any {
            lo = x.0.clone();
            hi = x.0.clone();
            any = true;
        } else {
            for i in 0..n {
                lo[i] = lo[i].min(x.0[i]);
                hi[i] = hi[i].max(x.0[i]);
            }
        }
    }
    if !any {
        return Window {
            n,
            norm: Norm::Linf,
            points: BTreeSet::new(),
        };
    }
    let mut points = BTreeSet::new();
    let mut cursor = lo.clone();
    loop {
        points.insert(Exponent(cursor.clone()));
        let mut i = 0;
        loop {
            if i == n {
                return Window {
                    n,
                    norm: Norm::Linf,
                    points,
                };
            }
            cursor[i] += 1;
            if cursor[i] <= hi[i] {
                break;
            }
            cursor[i] = lo[i];
            i += 1;
        }
    }
}

/// The ball of the given radius around the origin.
pub fn ball_window(n: usize, radius: i64, norm: Norm) -> Window {
    assert!(radius >= 0, "radius must be nonnegative");
    let mut points = BTreeSet::new();
    let mut cursor = vec![-radius; n];
    'outer: loop {
        let x = Exponent(cursor.clone());
        if norm.of(&x) <= radius {
            points.insert(x);
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'outer;
            }
            cursor[i] += 1;
            if cursor[i] <= radius {
                break;
            }
            cursor[i] = -radius;
            i += 1;
        }
    }
    Window {
        n,
        norm,
        points,
    }
}

/// Smallest superset of `w` closed under the exponent action of every
/// element of `G`.
pub fn orbit_close(w: &Window, group: &GroupTable) -> Window {
    let mut points = w.points.clone();
    let mut frontier: Vec<Exponent> = points.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in group.elements() {
            let y = g.image_exponent(&x);
            if points.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    Window {
        n: w.n,
        norm: w.norm,
        points,
    }
}

/// True when the exponent action of every group element maps `w` into
/// itself.
pub fn is_closed(w: &Window, group: &GroupTable) -> bool {
    w.points
        .iter()
        .all(|x| group.elements().iter().all(|g| w.contains(&g.image_exponent(x))))
}

/// Monomial basis of the vectors in `A^k` supported inside a window,
/// ordered by component then point.
#[derive(Clone, Debug)]
pub struct WindowBasis {
    k: usize,
    window: Window,
    entries: Vec<(usize, Exponent)>,
    index: HashMap<(usize, Exponent), usize>,
}

impl WindowBasis {
    pub fn new(window: Window, k: usize) -> WindowBasis {
        assert!(k >= 1, "free module rank must be at least 1");
        let mut entries = vec![];
        for j in 0..k {
            for x in &window.points {
                entries.push((j, x.clone()));
            }
        }
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        WindowBasis {
            k,
            window,
            entries,
            index,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Exponent)] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &(usize, Exponent) {
        &self.entries[i]
    }

    pub fn position(&self, component: usize, x: &Exponent) -> Option<usize> {
        self.index.get(&(component, x.clone())).copied()
    }

    /// Coordinates of a module vector supported inside the window.
    pub fn vector_of(&self, v: &ModuleVector) -> Result<Vec<Cyclotomic>> {
        if v.k() != self.k {
            return Err(Error::DimensionMismatch(v.k(), self.k));
        }
        let mut coords = vec![Cyclotomic::zero(v.conductor()); self.entries.len()];
        for (j, p) in v.entries().iter().enumerate() {
            for (x, c) in p.terms() {
                match self.position(j, x) {
                    Some(i) => coords[i] = c.clone(),
                    None => {
                        return Err(Error::Validation(format!(
                            "support point {x} of component {j} lies outside the window"
                        )))
                    }
                }
            }
        }
        Ok(coords)
    }

    /// The module vector with the given coordinates.
    pub fn to_module_vector(&self, coords: &[Cyclotomic], conductor: u32) -> Result<ModuleVector> {
        if coords.len() != self.entries.len() {
            return Err(Error::DimensionMismatch(coords.len(), self.entries.len()));
        }
        let n = self.window.n();
        let mut polys = vec![LaurentPoly::zero(n, conductor); self.k];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, x) = &self.entries[i];
            polys[*j] = polys[*j].add(&LaurentPoly::monomial(n, x.clone(), c.clone()))?;
        }
        ModuleVector::new(polys)
    }
}

impl PartialEq for WindowBasis {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.window == other.window
    }
}

impl Eq for WindowBasis {}

/// Matrix of a group element on a window basis; errors when the window is
/// not closed under the exponent action.
pub fn group_matrix(g: &AutElement, basis: &WindowBasis) -> Result<Vec<Vec<Cyclotomic>>> {
    let m = basis.len();
    let conductor = g.conductor();
    let mut mat = vec![vec![Cyclotomic::zero(conductor); m]; m];
    for (a, (j, x)) in basis.entries().iter().enumerate() {
        let (c, y) = apply_to_monomial(g, x)?;
        let b = basis.position(*j, &y).ok_or(Error::NotClosed)?;
        mat[b][a] = c;
    }
    Ok(mat)
}

/// A subspace of a windowed coordinate space, held in canonical RREF.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    basis: WindowBasis,
    conductor: u32,
    space: Rref,
}

impl SubspaceBasis {
    pub fn from_vectors(
        basis: WindowBasis,
        conductor: u32,
        vectors: Vec<Vec<Cyclotomic>>,
    ) -> SubspaceBasis {
        for v in &vectors {
            assert_eq!(v.len(), basis.len(), "vector length must match basis");
        }
        SubspaceBasis {
            conductor,
            space: linalg::rref(vectors),
            basis,
        }
    }

    /// The full coordinate space of the window.
    pub fn full(basis: WindowBasis, conductor: u32) -> SubspaceBasis {
        let m = basis.len();
        let mut rows = vec![];
        for i in 0..m {
            let mut row = vec![Cyclotomic::zero(conductor); m];
            row[i] = Cyclotomic::one(conductor);
            rows.push(row);
        }
        SubspaceBasis::from_vectors(basis, conductor, rows)
    }

    pub fn window_basis(&self) -> &WindowBasis {
        &self.basis
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn vectors(&self) -> &[Vec<Cyclotomic>] {
        &self.space.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.space.pivots
    }

    pub(crate) fn rref(&self) -> &Rref {
        &self.space
    }

    pub fn contains(&self, coords: &[Cyclotomic]) -> bool {
        linalg::in_span(&self.space, coords)
    }

    pub fn coordinates(&self, coords: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
        linalg::coordinates(&self.space, coords)
    }

    /// Render basis vector `i` as a module vector.
    pub fn element(&self, i: usize) -> ModuleVector {
        self.basis
            .to_module_vector(&self.space.rows[i], self.conductor)
            .expect("basis vectors fit their window")
    }
}

impl PartialEq for SubspaceBasis {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.space == other.space
    }
}

impl Eq for SubspaceBasis {}

/// All shifts `x` with `x + support(v)` inside `w`, ascending.
fn shifts_into(v: &ModuleVector, w: &Window) -> Vec<Exponent> {
    let support = v.support();
    let mut iter = support.iter();
    let first = match iter.next() {
        Some(e) => e,
        None => return vec![],
    };
    let mut candidates: BTreeSet<Exponent> = w
        .points()
        .map(|p| {
            Exponent(p.0.iter().zip(&first.0).map(|(a, b)| a - b).collect())
        })
        .collect();
    for e in iter {
        candidates.retain(|x| w.contains(&x.add(e)));
    }
    candidates.into_iter().collect()
}

/// The span of all generator shifts supported in `w_plus`, as rows over the
/// given basis.
pub(crate) fn span_rows(
    p: &ModulePresentation,
    basis_plus: &WindowBasis,
) -> Result<Rref> {
    let one = Cyclotomic::one(p.conductor());
    let mut rows = vec![];
    for gen in p.generators() {
        if gen.is_zero() {
            continue;
        }
        for x in shifts_into(gen, basis_plus.window()) {
            let shifted = crate::laurent::monomial_shift(&x, &one, gen)?;
            rows.push(basis_plus.vector_of(&shifted)?);
        }
    }
    Ok(linalg::rref(rows))
}

/// The windowed part `P_w` of the submodule: span all generator shifts
/// supported in the pad-dilation `W+` of `w`, then keep the vectors
/// supported inside `w` itself.
pub fn submodule_window_space(
    p: &ModulePresentation,
    w: &Window,
    pad: i64,
) -> Result<SubspaceBasis> {
    if p.n() != w.n() {
        return Err(Error::DimensionMismatch(p.n(), w.n()));
    }
    let w_plus = w.dilate(pad);
    let basis_plus = WindowBasis::new(w_plus, p.k());
    let span = span_rows(p, &basis_plus)?;
    let keep: Vec<bool> = basis_plus
        .entries()
        .iter()
        .map(|(_, x)| w.contains(x))
        .collect();
    let inside = linalg::supported_on(&span.rows, &keep);
    let basis_w = WindowBasis::new(w.clone(), p.k());
    let cols: Vec<usize> = basis_w
        .entries()
        .iter()
        .map(|(j, x)| basis_plus.position(*j, x).expect("w is inside its dilation"))
        .collect();
    let restricted = linalg::restrict_columns(&inside.rows, &cols);
    Ok(SubspaceBasis::from_vectors(
        basis_w,
        p.conductor(),
        restricted,
    ))
}

/// Run `submodule_window_space` along a pad schedule until two consecutive
/// pads agree; returns the stabilized space, the pad where it first
/// appeared, and whether stabilization was actually observed.
///
/// The spaces are nested as the pad grows, so equal dimensions at
/// consecutive pads force equal spaces.
pub fn stabilize_submodule_window(
    p: &ModulePresentation,
    w: &Window,
    pad_schedule: &[i64],
) -> Result<(SubspaceBasis, i64, bool)> {
    if pad_schedule.is_empty() {
        return Err(Error::Validation("pad schedule must be nonempty".into()));
    }
    let mut prev: Option<(SubspaceBasis, i64)> = None;
    for &pad in pad_schedule {
        let cur = submodule_window_space(p, w, pad)?;
        if let Some((space, first_pad)) = prev {
            if space.dim() == cur.dim() {
                debug_assert_eq!(space.vectors(), cur.vectors());
                return Ok((space, first_pad, true));
            }
            prev = Some((cur, pad));
        } else {
            prev = Some((cur, pad));
        }
    }
    let (space, pad) = prev.expect("schedule checked nonempty");
    Ok((space, pad, false))
}

/// Result of a padded membership test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Membership {
    /// Found as a combination of generator shifts within this pad.
    In(i64),
    /// Not expressible with any pad up to the limit.
    NotFoundUpTo(i64),
}

/// Does `v` lie in the submodule `P`?  Searches combinations of generator
/// shifts supported in growing dilations of the bounding box of `v`.
pub fn membership(v: &ModuleVector, p: &ModulePresentation, pad_limit: i64) -> Result<Membership> {
    if v.k() != p.k() {
        return Err(Error::DimensionMismatch(v.k(), p.k()));
    }
    if v.n() != p.n() {
        return Err(Error::DimensionMismatch(v.n(), p.n()));
    }
    if v.conductor() != p.conductor() {
        return Err(Error::ConductorMismatch(v.conductor(), p.conductor()));
    }
    if v.is_zero() {
        return Ok(Membership::In(0));
    }
    let support = v.support();
    let hull = bounding_box_of(p.n(), support.iter());
    for pad in 0..=pad_limit {
        let w_plus = hull.dilate(pad);
        let basis_plus = WindowBasis::new(w_plus, p.k());
        let span = span_rows(p, &basis_plus)?;
        let target = basis_plus.vector_of(v)?;
        if linalg::in_span(&span, &target) {
            return Ok(Membership::In(pad));
        }
    }
    Ok(Membership::NotFoundUpTo(pad_limit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;
    use crate::laurent::{parse_poly, parse_vector};
    use crate::scalars::parse_scalar;

    fn pres_1d(gen: &str) -> ModulePresentation {
        let v = parse_vector(1, 1, 1, gen).unwrap();
        ModulePresentation::new(1, 1, 1, vec![v]).unwrap()
    }

    #[test]
    fn ball_sizes() {
        for i in 0..=4i64 {
            assert_eq!(ball_window(1, i, Norm::Linf).len() as i64, 2 * i + 1);
            assert_eq!(ball_window(1, i, Norm::L1).len() as i64, 2 * i + 1);
            assert_eq!(
                ball_window(2, i, Norm::L1).len() as i64,
                2 * i * i + 2 * i + 1
            );
            assert_eq!(
                ball_window(2, i, Norm::Linf).len() as i64,
                (2 * i + 1) * (2 * i + 1)
            );
        }
    }

    #[test]
    fn dilation_of_balls_gives_balls() {
        assert_eq!(
            ball_window(1, 2, Norm::Linf).dilate(1),
            ball_window(1, 3, Norm::Linf)
        );
        assert_eq!(
            ball_window(2, 1, Norm::L1).dilate(2),
            ball_window(2, 3, Norm::L1)
        );
    }

    #[test]
    fn orbit_closure_adds_mirror_points() {
        let g = generate_group(
            &[crate::group::AutElement::new(vec![Cyclotomic::one(1)], vec![vec![-1]]).unwrap()],
            10,
        )
        .unwrap();
        let w = Window::from_points(1, Norm::Linf, [Exponent(vec![1]), Exponent(vec![2])]);
        let closed = orbit_close(&w, &g);
        assert_eq!(closed.len(), 4);
        assert!(is_closed(&closed, &g));
        assert!(!is_closed(&w, &g));
    }

    #[test]
    fn window_basis_orders_component_major() {
        let basis = WindowBasis::new(ball_window(1, 1, Norm::Linf), 2);
        assert_eq!(basis.len(), 6);
        assert_eq!(basis.entry(0), &(0, Exponent(vec![-1])));
        assert_eq!(basis.entry(3), &(1, Exponent(vec![-1])));
        assert_eq!(basis.position(1, &Exponent(vec![0])), Some(4));
    }

    #[test]
    fn group_matrix_is_a_homomorphism() {
        let swap = crate::group::AutElement::new(
            vec![Cyclotomic::one(1); 2],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let flip = crate::group::AutElement::new(
            vec![Cyclotomic::one(1); 2],
            vec![vec![-1, 0], vec![0, -1]],
        )
        .unwrap();
        let basis = WindowBasis::new(ball_window(2, 2, Norm::L1), 1);
        let ts = group_matrix(&swap, &basis).unwrap();
        let tf = group_matrix(&flip, &basis).unwrap();
        let composed = crate::group::compose(&swap, &flip).unwrap();
        let tc = group_matrix(&composed, &basis).unwrap();
        let m = basis.len();
        for b in 0..m {
            for a in 0..m {
                let mut acc = Cyclotomic::zero(1);
                for t in 0..m {
                    acc = acc.add(&ts[b][t].mul(&tf[t][a]).unwrap()).unwrap();
                }
                assert_eq!(acc, tc[b][a]);
            }
        }
    }

    #[test]
    fn swap_trace_counts_diagonal_points() {
        let swap = crate::group::AutElement::new(
            vec![Cyclotomic::one(1); 2],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let basis = WindowBasis::new(ball_window(2, 2, Norm::L1), 1);
        let t = group_matrix(&swap, &basis).unwrap();
        let mut trace = Cyclotomic::zero(1);
        for i in 0..basis.len() {
            trace = trace.add(&t[i][i]).unwrap();
        }
        assert_eq!(trace, Cyclotomic::from_integer(1, 3));
    }

    #[test]
    fn group_matrix_needs_a_closed_window() {
        let refl =
            crate::group::AutElement::new(vec![Cyclotomic::one(1)], vec![vec![-1]]).unwrap();
        let basis = WindowBasis::new(
            Window::from_points(1, Norm::Linf, [Exponent(vec![0]), Exponent(vec![1])]),
            1,
        );
        assert_eq!(group_matrix(&refl, &basis).unwrap_err(), Error::NotClosed);
    }

    #[test]
    fn windowed_ideal_dimension_for_sum_generator() {
        // P = (s + s^{-1}) seen in [-i, i] has dimension 2i - 1.
        let p = pres_1d("s1^1 + s1^-1");
        for i in 1..=5i64 {
            let space =
                submodule_window_space(&p, &ball_window(1, i, Norm::Linf), 1).unwrap();
            assert_eq!(space.dim() as i64, 2 * i - 1, "radius {i}");
        }
    }

    #[test]
    fn stabilization_on_gap_generator() {
        // P = (1 - s^d) on the ball of radius 2d.
        for d in 1..=3i64 {
            let p = pres_1d(&format!("1 + -1*s1^{d}"));
            let w = ball_window(1, 2 * d, Norm::Linf);
            let (space, pad_used, stable) =
                stabilize_submodule_window(&p, &w, &[d, 2 * d]).unwrap();
            assert!(stable);
            assert_eq!(pad_used, d);
            assert_eq!(space.dim() as i64, 3 * d + 1, "d = {d}");
        }
    }

    #[test]
    fn unstable_single_pad_reports_not_stable() {
        let p = pres_1d("s1^1 + s1^-1");
        let (_, _, stable) =
            stabilize_submodule_window(&p, &ball_window(1, 2, Norm::Linf), &[1]).unwrap();
        assert!(!stable);
    }

    #[test]
    fn membership_examples() {
        let sum = pres_1d("s1^1 + s1^-1");
        let diff = parse_vector(1, 1, 1, "s1^1 + -1*s1^-1").unwrap();
        assert_eq!(
            membership(&diff, &sum, 6).unwrap(),
            Membership::NotFoundUpTo(6)
        );

        let dif_gen = pres_1d("s1^1 + -1*s1^-1");
        let v = parse_vector(1, 1, 1, "s1^3 + -1*s1^-3").unwrap();
        assert_eq!(membership(&v, &dif_gen, 4).unwrap(), Membership::In(0));

        // sigma^4 + sigma^{-4} - 2 lies in (s + s^{-1}).
        let even = parse_vector(1, 1, 1, "s1^4 + s1^-4 + -2").unwrap();
        match membership(&even, &sum, 6).unwrap() {
            Membership::In(_) => {}
            other => panic!("expected membership, got {other:?}"),
        }

        let zero = parse_vector(1, 1, 1, "0").unwrap();
        assert_eq!(membership(&zero, &sum, 2).unwrap(), Membership::In(0));
    }

    #[test]
    fn two_variable_membership() {
        let p = {
            let v = parse_vector(2, 1, 1, "s1^1 + -1*s2^1").unwrap();
            ModulePresentation::new(2, 1, 1, vec![v]).unwrap()
        };
        let v = parse_vector(2, 1, 1, "s1^3 + -1*s2^3").unwrap();
        match membership(&v, &p, 4).unwrap() {
            Membership::In(_) => {}
            other => panic!("expected membership, got {other:?}"),
        }
        let w = parse_vector(2, 1, 1, "s1^1 + s2^1").unwrap();
        assert_eq!(membership(&w, &p, 3).unwrap(), Membership::NotFoundUpTo(3));
    }

    #[test]
    fn scaled_generators_span_scaled_spaces() {
        // Multiplying the generator by a unit does not change the module.
        let p = pres_1d("s1^1 + s1^-1");
        let q = {
            let v = parse_vector(1, 1, 4, "(z^1)*s1^1 + (z^1)*s1^-1").unwrap();
            ModulePresentation::new(1, 1, 4, vec![v]).unwrap()
        };
        let w = ball_window(1, 3, Norm::Linf);
        let a = submodule_window_space(&p, &w, 2).unwrap();
        let b = submodule_window_space(&q, &w, 2).unwrap();
        assert_eq!(a.dim(), b.dim());
    }

    #[test]
    fn subspace_roundtrip_to_module_vectors() {
        let p = pres_1d("s1^1 + s1^-1");
        let space = submodule_window_space(&p, &ball_window(1, 2, Norm::Linf), 1).unwrap();
        assert_eq!(space.dim(), 3);
        for i in 0..space.dim() {
            let v = space.element(i);
            let coords = space.window_basis().vector_of(&v).unwrap();
            assert!(space.contains(&coords));
        }
        let _ = parse_poly(1, 1, "s1^1").unwrap();
        let _ = parse_scalar(1, "1").unwrap();
    }
}
