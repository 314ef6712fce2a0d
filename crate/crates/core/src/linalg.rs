//! Sparse exact linear algebra over `Scalar`.
//!
//! Rows are inserted one at a time into a row echelon form. Pivots may
//! be restricted to a subset of columns; a row that reduces to something
//! nonzero with no admissible pivot is kept aside as a leftover.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

pub type SparseRow = Vec<(usize, Scalar)>;

/// `a - k * b` for sparse rows sorted by column.
pub fn row_axpy(a: &SparseRow, k: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|t| t.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|t| t.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(k * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(k * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Builds a sorted sparse row from unsorted entries, merging duplicates.
pub fn make_row(entries: impl IntoIterator<Item = (usize, Scalar)>) -> SparseRow {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (c, v) in entries {
        if v.is_zero() {
            continue;
        }
        let e = acc.entry(c).or_default();
        *e = &*e + &v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn entry(row: &SparseRow, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |t| t.0).ok().map(|i| &row[i].1)
}

fn cost(s: &Scalar) -> (usize, usize) {
    if s.is_constant() {
        (0, 0)
    } else {
        (1, s.numer().terms().len() + s.denom().terms().len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inserted {
    Pivot(usize),
    Dependent,
    Leftover,
}

#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    allowed: Vec<bool>,
    /// Pivot column and row, in insertion order. Each row is scaled to 1 at
    /// its pivot and has no entry in the pivot column of an earlier row.
    rows: Vec<(usize, SparseRow)>,
    pivot_cols: Vec<bool>,
    leftovers: Vec<SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon::with_allowed(vec![true; ncols])
    }

    /// Pivots only in columns flagged `true`.
    pub fn with_allowed(allowed: Vec<bool>) -> Echelon {
        let ncols = allowed.len();
        Echelon { ncols, allowed, rows: Vec::new(), pivot_cols: vec![false; ncols], leftovers: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn leftovers(&self) -> &[SparseRow] {
        &self.leftovers
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_cols.get(col).copied().unwrap_or(false)
    }

    /// Reduces a row against the pivots; the result has no pivot column.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        let mut out = row.clone();
        for (c, prow) in &self.rows {
            if let Some(k) = entry(&out, *c).cloned() {
                out = row_axpy(&out, &k, prow);
            }
        }
        out
    }

    pub fn insert(&mut self, row: SparseRow) -> Inserted {
        let r = self.reduce(&row);
        if r.is_empty() {
            return Inserted::Dependent;
        }
        let best = r.iter().filter(|(c, _)| self.allowed[*c]).min_by_key(|(c, v)| (cost(v), *c)).map(|(c, _)| *c);
        let Some(col) = best else {
            self.leftovers.push(r);
            return Inserted::Leftover;
        };
        let inv = entry(&r, col).expect("pivot entry").inverse().expect("nonzero pivot");
        let r: SparseRow = r.into_iter().map(|(c, v)| (c, if c == col { Scalar::one() } else { &v * &inv })).collect();
        self.rows.push((col, r));
        self.pivot_cols[col] = true;
        Inserted::Pivot(col)
    }

    /// Values of the pivot variables given the non-pivot ones, by back
    /// substitution. `x` holds the non-pivot values on entry.
    fn back_substitute(&self, x: &mut [Scalar]) {
        for (c, prow) in self.rows.iter().rev() {
            let mut s = Scalar::zero();
            for (j, v) in prow {
                if j != c && !x[*j].is_zero() {
                    s = &s + &(v * &x[*j]);
                }
            }
            x[*c] = -s;
        }
    }

    /// Basis of the right nullspace of the inserted rows (all columns free
    /// unless pivot), as dense vectors.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.is_pivot(f) {
                continue;
            }
            let mut x = vec![Scalar::zero(); self.ncols];
            x[f] = Scalar::one();
            self.back_substitute(&mut x);
            out.push(x);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Inconsistent,
    Unique(Vec<Scalar>),
    /// A particular solution and the dimension of the solution space.
    Many(Vec<Scalar>, usize),
}

/// Solves `A x = b` for sparse rows of `A` over `ncols` unknowns. Sparse rows
/// go in first.
pub fn solve(rows: &[SparseRow], rhs: &[Scalar], ncols: usize) -> Solution {
    assert_eq!(rows.len(), rhs.len());
    let mut allowed = vec![true; ncols + 1];
    allowed[ncols] = false;
    let mut e = Echelon::with_allowed(allowed);
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| (rows[i].len(), rows[i].iter().filter(|(_, v)| !v.is_constant()).count()));
    for i in order {
        let mut r = rows[i].clone();
        if !rhs[i].is_zero() {
            r.push((ncols, rhs[i].clone()));
        }
        e.insert(r);
    }
    if !e.leftovers.is_empty() {
        return Solution::Inconsistent;
    }
    let mut x = vec![Scalar::zero(); ncols + 1];
    x[ncols] = -Scalar::one();
    e.back_substitute(&mut x);
    x.truncate(ncols);
    let free = ncols - e.rank();
    if free == 0 {
        Solution::Unique(x)
    } else {
        Solution::Many(x, free)
    }
}
