//! Exact linear algebra over any [`Field`]: dense Bareiss elimination and a
//! sparse incremental echelon form.

use std::collections::{HashMap, HashSet};

use crate::arith::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> std::result::Result<U, E>) -> std::result::Result<Matrix<U>, E> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<std::result::Result<_, _>>()? })
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }
}

impl<T: PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

struct Elimination<E> {
    rank: usize,
    // signed product form of the determinant; only meaningful when square and full rank
    det: Option<E>,
}

/// Bareiss elimination with column skipping. Every intermediate entry is a
/// minor of the input, so divisions are exact and growth is controlled.
fn bareiss<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Elimination<F::Elem> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<F::Elem>> = m.iter_rows().map(<[_]>::to_vec).collect();
    let mut prev = f.one();
    let mut negate = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = (r..rows).filter(|&i| !f.is_zero(&a[i][c])).min_by_key(|&i| f.cost(&a[i][c]));
        let Some(p) = pivot else { continue };
        if p != r {
            a.swap(p, r);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let lead = std::mem::replace(&mut row[c], f.zero());
            for j in c + 1..cols {
                let x = f.mul(&prow[c], &row[j]);
                let x = if f.is_zero(&lead) || f.is_zero(&prow[j]) { x } else { f.sub(&x, &f.mul(&lead, &prow[j])) };
                row[j] = f.div(&x, &prev).expect("Bareiss pivot is nonzero");
            }
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = (rows == cols).then(|| {
        if r < rows {
            f.zero()
        } else if rows == 0 {
            f.one()
        } else if negate {
            f.neg(&a[rows - 1][cols - 1])
        } else {
            a[rows - 1][cols - 1].clone()
        }
    });
    Elimination { rank: r, det }
}

/// Exact rank.
pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    bareiss(f, m).rank
}

/// Exact determinant of a square matrix.
pub fn determinant<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Result<F::Elem> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    Ok(bareiss(f, m).det.expect("square"))
}

/// Incremental rank of a sparse row set.
///
/// Rows are kept reduced against each other: a pivot row is 1 in its own pivot
/// column and 0 in every other pivot column, so reducing a new row is a single
/// pass. Each pivot is the entry of the new row whose column occurs in the
/// fewest stored rows, which keeps back-substitution and fill-in small.
pub struct SparseEchelon<F: Field> {
    field: F,
    pivots: HashMap<usize, HashMap<usize, F::Elem>>,
    /// Non-pivot column -> pivot rows that contain it.
    occurs: HashMap<usize, HashSet<usize>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F) -> Self {
        Self { field, pivots: HashMap::new(), occurs: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row given as `(column, value)` pairs; returns whether the rank grew.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, F::Elem)>) -> bool {
        let f = self.field.clone();
        let mut work: HashMap<usize, F::Elem> = HashMap::new();
        let mut hits = Vec::new();
        for (c, x) in row {
            add_into(&f, &mut work, c, x);
        }
        for (&c, x) in &work {
            if self.pivots.contains_key(&c) {
                hits.push((c, x.clone()));
            }
        }
        for (c, x) in hits {
            work.remove(&c);
            for (&c2, y) in &self.pivots[&c] {
                if c2 != c {
                    add_into(&f, &mut work, c2, f.neg(&f.mul(&x, y)));
                }
            }
        }
        let Some(lead) = work
            .iter()
            .map(|(&c, x)| (self.occurs.get(&c).map_or(0, HashSet::len), f.cost(x), c))
            .min()
            .map(|(_, _, c)| c)
        else {
            return false;
        };
        let inv = f.inv(&work[&lead]).expect("nonzero entry");
        for x in work.values_mut() {
            *x = f.mul(x, &inv);
        }
        // clear the new pivot column from the stored rows
        for p in self.occurs.remove(&lead).unwrap_or_default() {
            let row = self.pivots.get_mut(&p).expect("indexed row");
            let factor = row.remove(&lead).expect("indexed entry");
            for (&c, y) in &work {
                if c == lead {
                    continue;
                }
                let before = row.contains_key(&c);
                add_into(&f, row, c, f.neg(&f.mul(&factor, y)));
                match (before, row.contains_key(&c)) {
                    (false, true) => {
                        self.occurs.entry(c).or_default().insert(p);
                    }
                    (true, false) => {
                        self.occurs.get_mut(&c).map(|s| s.remove(&p));
                    }
                    _ => {}
                }
            }
        }
        for &c in work.keys() {
            if c != lead {
                self.occurs.entry(c).or_default().insert(lead);
            }
        }
        self.pivots.insert(lead, work);
        true
    }
}

fn add_into<F: Field>(f: &F, row: &mut HashMap<usize, F::Elem>, c: usize, x: F::Elem) {
    if f.is_zero(&x) {
        return;
    }
    match row.entry(c) {
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(x);
        }
        std::collections::hash_map::Entry::Occupied(mut e) => {
            let s = f.add(e.get(), &x);
            if f.is_zero(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}
