//! Internal exact linear algebra over cyclotomic scalars.
//!
//! Everything is reduced row echelon form (RREF) with deterministic
//! first-nonzero pivoting, so every subspace has one canonical basis and
//! span equality is row-for-row equality.

use crate::scalars::Cyclotomic;

/// A subspace in canonical form: RREF rows sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Rref {
    pub rows: Vec<Vec<Cyclotomic>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// `target -= factor * source`.
fn submul(target: &mut [Cyclotomic], factor: &Cyclotomic, source: &[Cyclotomic]) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t = t.sub(&factor.mul(s).expect("conductors agree")).expect("conductors agree");
        }
    }
}

/// Gauss-Jordan elimination; the result is the unique RREF basis of the
/// row space, independent of input order.
pub(crate) fn rref<I>(rows: I) -> Rref
where
    I: IntoIterator<Item = Vec<Cyclotomic>>,
{
    let mut basis: Vec<(usize, Vec<Cyclotomic>)> = vec![];
    for mut row in rows {
        for (p, b) in &basis {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                submul(&mut row, &f, b);
            }
        }
        if let Some(p) = row.iter().position(|c| !c.is_zero()) {
            let inv = row[p].inv().expect("nonzero pivot");
            for c in row.iter_mut() {
                if !c.is_zero() {
                    *c = c.mul(&inv).expect("conductors agree");
                }
            }
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    submul(b, &f, &row);
                }
            }
            let at = basis.partition_point(|(q, _)| *q < p);
            basis.insert(at, (p, row));
        }
    }
    let pivots = basis.iter().map(|(p, _)| *p).collect();
    let rows = basis.into_iter().map(|(_, r)| r).collect();
    Rref { rows, pivots }
}

/// Residual of `row` after reducing against the basis (in place).
pub(crate) fn reduce_row(basis: &Rref, row: &mut [Cyclotomic]) {
    for (p, b) in basis.pivots.iter().zip(&basis.rows) {
        if !row[*p].is_zero() {
            let f = row[*p].clone();
            submul(row, &f, b);
        }
    }
}

pub(crate) fn in_span(basis: &Rref, row: &[Cyclotomic]) -> bool {
    let mut r = row.to_vec();
    reduce_row(basis, &mut r);
    r.iter().all(|c| c.is_zero())
}

/// Expansion coefficients of `row` in the basis, if it lies in the span.
pub(crate) fn coordinates(basis: &Rref, row: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let mut r = row.to_vec();
    let coords: Vec<Cyclotomic> = basis.pivots.iter().map(|p| r[*p].clone()).collect();
    reduce_row(basis, &mut r);
    if r.iter().all(|c| c.is_zero()) {
        Some(coords)
    } else {
        None
    }
}

/// Canonical basis of `{v : B v = 0}` for the RREF matrix `B` with `ncols`
/// columns.
pub(crate) fn nullspace(basis: &Rref, ncols: usize, conductor: u32) -> Rref {
    let mut vectors = vec![];
    for free in 0..ncols {
        if basis.pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Cyclotomic::zero(conductor); ncols];
        v[free] = Cyclotomic::one(conductor);
        for (p, row) in basis.pivots.iter().zip(&basis.rows) {
            if !row[free].is_zero() {
                v[*p] = row[free].neg();
            }
        }
        vectors.push(v);
    }
    rref(vectors)
}

/// Canonical basis of the subspace of `span(vectors)` supported on the
/// columns marked `true` in `keep`.
///
/// Columns to drop are ordered first; in the permuted RREF, the rows whose
/// pivot falls in the kept block are exactly those vanishing on the dropped
/// block, and they span the intersection.
pub(crate) fn supported_on(vectors: &[Vec<Cyclotomic>], keep: &[bool]) -> Rref {
    let dropped: Vec<usize> = (0..keep.len()).filter(|&j| !keep[j]).collect();
    let kept: Vec<usize> = (0..keep.len()).filter(|&j| keep[j]).collect();
    let perm: Vec<usize> = dropped.iter().chain(kept.iter()).copied().collect();
    let permuted = vectors
        .iter()
        .map(|v| perm.iter().map(|&j| v[j].clone()).collect::<Vec<_>>())
        .collect::<Vec<_>>();
    let reduced = rref(permuted);
    let cut = dropped.len();
    let mut selected = vec![];
    for (p, row) in reduced.pivots.iter().zip(&reduced.rows) {
        if *p < cut {
            continue;
        }
        let mut original = vec![Cyclotomic::zero(row[0].conductor()); keep.len()];
        for (permuted_idx, &orig_col) in perm.iter().enumerate() {
            original[orig_col] = row[permuted_idx].clone();
        }
        selected.push(original);
    }
    rref(selected)
}

/// Project vectors onto a subset of columns (in the given order).
pub(crate) fn restrict_columns(vectors: &[Vec<Cyclotomic>], cols: &[usize]) -> Vec<Vec<Cyclotomic>> {
    vectors
        .iter()
        .map(|v| cols.iter().map(|&j| v[j].clone()).collect())
        .collect()
}
