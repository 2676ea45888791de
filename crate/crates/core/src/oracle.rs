//! Explicit matrices for the integral form of quantum `sl_2` acting on
//! `Delta(d)^{(x) r}`, as an independent check on the diagrammatic side.
//!
//! Coproduct: `E -> E (x) 1 + K (x) E`, `F -> F (x) K^-1 + 1 (x) F`, `K -> K (x) K`,
//! so that
//! `E^(m) -> sum_{a+b=m} q^(ab) E^(a) K^b (x) E^(b)` and
//! `F^(m) -> sum_{a+b=m} q^(ab) F^(a) (x) F^(b) K^-a`.

use std::collections::BTreeMap;

use crate::arith::{quantum_binomial, Field, LaurentPoly, SpecializationParams};
use crate::error::{Error, Result};
use crate::linalg::SparseEchelon;

/// Default cap on the module dimension.
pub const MAX_DIMENSION: usize = 2500;

/// A sparse square matrix stored by columns; entries in each column are sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<E> {
    dim: usize,
    cols: Vec<Vec<(usize, E)>>,
}

impl<E: Clone> SparseMatrix<E> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Image of the `j`-th basis vector.
    pub fn col(&self, j: usize) -> &[(usize, E)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Rows as `(column, value)` lists.
    pub fn rows(&self) -> Vec<Vec<(usize, E)>> {
        let mut out = vec![Vec::new(); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                out[*i].push((j, x.clone()));
            }
        }
        out
    }

    pub fn get<F: Field<Elem = E>>(&self, f: &F, i: usize, j: usize) -> E {
        self.cols[j].iter().find(|(r, _)| *r == i).map_or_else(|| f.zero(), |(_, x)| x.clone())
    }
}

fn from_columns<F: Field>(f: &F, dim: usize, cols: Vec<BTreeMap<usize, F::Elem>>) -> SparseMatrix<F::Elem> {
    let cols = cols.into_iter().map(|c| c.into_iter().filter(|(_, x)| !f.is_zero(x)).collect()).collect();
    SparseMatrix { dim, cols }
}

fn accumulate<F: Field>(f: &F, col: &mut BTreeMap<usize, F::Elem>, i: usize, x: F::Elem) {
    if f.is_zero(&x) {
        return;
    }
    let s = match col.get(&i) {
        Some(y) => f.add(y, &x),
        None => x,
    };
    col.insert(i, s);
}

/// `a * b` (apply `b` first).
pub fn mat_mul<F: Field>(f: &F, a: &SparseMatrix<F::Elem>, b: &SparseMatrix<F::Elem>) -> SparseMatrix<F::Elem> {
    let cols = b
        .cols
        .iter()
        .map(|col| {
            let mut out = BTreeMap::new();
            for (l, x) in col {
                for (i, y) in a.col(*l) {
                    accumulate(f, &mut out, *i, f.mul(y, x));
                }
            }
            out
        })
        .collect();
    from_columns(f, a.dim, cols)
}

pub fn mat_sub<F: Field>(f: &F, a: &SparseMatrix<F::Elem>, b: &SparseMatrix<F::Elem>) -> SparseMatrix<F::Elem> {
    let cols = a
        .cols
        .iter()
        .zip(&b.cols)
        .map(|(ca, cb)| {
            let mut out: BTreeMap<usize, F::Elem> = ca.iter().cloned().collect();
            for (i, y) in cb {
                accumulate(f, &mut out, *i, f.neg(y));
            }
            out
        })
        .collect();
    from_columns(f, a.dim, cols)
}

pub fn mat_scale<F: Field>(f: &F, a: &SparseMatrix<F::Elem>, c: &F::Elem) -> SparseMatrix<F::Elem> {
    let cols = a.cols.iter().map(|col| col.iter().map(|(i, x)| (*i, f.mul(x, c))).collect()).collect();
    from_columns(f, a.dim, cols)
}

/// A module over the divided-power form, given by `E^(m)` and `F^(m)` for
/// `m <= bound` and the weights of its basis (`K` acts on `v` by `q^wt(v)`).
#[derive(Clone, Debug)]
pub struct ModuleAction<F: Field> {
    field: F,
    weights: Vec<i64>,
    e: Vec<SparseMatrix<F::Elem>>,
    f: Vec<SparseMatrix<F::Elem>>,
}

impl<F: Field> PartialEq for ModuleAction<F> {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights && self.e == other.e && self.f == other.f
    }
}

impl<F: Field> ModuleAction<F> {
    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn bound(&self) -> usize {
        self.e.len() - 1
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// `E^(m)`, with `E^(0) = 1`.
    pub fn e(&self, m: usize) -> &SparseMatrix<F::Elem> {
        &self.e[m]
    }

    pub fn f(&self, m: usize) -> &SparseMatrix<F::Elem> {
        &self.f[m]
    }

    /// `K^s` as a diagonal matrix.
    pub fn k_pow(&self, s: i64) -> SparseMatrix<F::Elem> {
        let f = &self.field;
        SparseMatrix { dim: self.dimension(), cols: self.weights.iter().enumerate().map(|(i, &w)| vec![(i, q_pow(f, s * w))]).collect() }
    }

    /// `sum_v q^wt(v)`.
    pub fn quantum_trace_of_k(&self) -> F::Elem {
        let f = &self.field;
        self.weights.iter().fold(f.zero(), |acc, &w| f.add(&acc, &q_pow(f, w)))
    }

    pub fn weight_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for &w in &self.weights {
            *out.entry(w).or_insert(0) += 1;
        }
        out
    }

    /// `self (x) other` through the coproduct; basis `(i, j) -> i * dim(other) + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let f = &self.field;
        let bound = self.bound().min(other.bound());
        let n2 = other.dimension();
        let dim = self.dimension() * n2;
        let weights: Vec<i64> = self.weights.iter().flat_map(|&a| other.weights.iter().map(move |&b| a + b)).collect();
        let mut e = Vec::with_capacity(bound + 1);
        let mut fm = Vec::with_capacity(bound + 1);
        for m in 0..=bound {
            let mut ecols = vec![BTreeMap::new(); dim];
            let mut fcols = vec![BTreeMap::new(); dim];
            for i in 0..self.dimension() {
                let wi = self.weights[i];
                for j in 0..n2 {
                    let wj = other.weights[j];
                    let col = i * n2 + j;
                    for a in 0..=m {
                        let b = m - a;
                        let ab = (a * b) as i64;
                        // E^(a) K^b v (x) E^(b) w
                        let ce = q_pow(f, ab + b as i64 * wi);
                        for (i2, x) in self.e[a].col(i) {
                            for (j2, y) in other.e[b].col(j) {
                                accumulate(f, &mut ecols[col], i2 * n2 + j2, f.mul(&ce, &f.mul(x, y)));
                            }
                        }
                        // F^(a) v (x) F^(b) K^-a w
                        let cf = q_pow(f, ab - a as i64 * wj);
                        for (i2, x) in self.f[a].col(i) {
                            for (j2, y) in other.f[b].col(j) {
                                accumulate(f, &mut fcols[col], i2 * n2 + j2, f.mul(&cf, &f.mul(x, y)));
                            }
                        }
                    }
                }
            }
            e.push(from_columns(f, dim, ecols));
            fm.push(from_columns(f, dim, fcols));
        }
        Self { field: f.clone(), weights, e, f: fm }
    }
}

/// `q^k = v^(2k)`.
fn q_pow<F: Field>(f: &F, k: i64) -> F::Elem {
    f.from_laurent(&LaurentPoly::q_pow(k))
}

/// `Delta(d)` on `v_0..v_d` with `wt(v_i) = d - 2i`,
/// `E^(m) v_i = [d-i+m, m] v_(i-m)` and `F^(m) v_i = [i+m, m] v_(i+m)`.
pub fn weyl_action<F: Field>(f: &F, d: usize, bound: usize) -> Result<ModuleAction<F>> {
    if d == 0 {
        return Err(Error::OutOfRange("d must be positive".into()));
    }
    let n = d + 1;
    let weights = (0..n).map(|i| d as i64 - 2 * i as i64).collect();
    let mut e = Vec::with_capacity(bound + 1);
    let mut fm = Vec::with_capacity(bound + 1);
    for m in 0..=bound {
        let mut ecols = vec![BTreeMap::new(); n];
        let mut fcols = vec![BTreeMap::new(); n];
        for i in 0..n {
            if i >= m {
                ecols[i].insert(i - m, f.from_laurent(&quantum_binomial(d - i + m, m)?));
            }
            if i + m < n {
                fcols[i].insert(i + m, f.from_laurent(&quantum_binomial(i + m, m)?));
            }
        }
        e.push(from_columns(f, n, ecols));
        fm.push(from_columns(f, n, fcols));
    }
    Ok(ModuleAction { field: f.clone(), weights, e, f: fm })
}

/// `Delta(d)^{(x) r}`, bracketed as `Delta (x) (Delta (x) (...))`.
pub fn tensor_action<F: Field>(f: &F, d: usize, r: usize, bound: usize) -> Result<ModuleAction<F>> {
    check_size(d, r, MAX_DIMENSION)?;
    let base = weyl_action(f, d, bound)?;
    let mut acc = base.clone();
    for _ in 1..r {
        acc = base.tensor(&acc);
    }
    Ok(acc)
}

/// `Delta(d)^{(x) r}`, bracketed as `((...) (x) Delta) (x) Delta`.
pub fn tensor_action_left<F: Field>(f: &F, d: usize, r: usize, bound: usize) -> Result<ModuleAction<F>> {
    check_size(d, r, MAX_DIMENSION)?;
    let base = weyl_action(f, d, bound)?;
    let mut acc = base.clone();
    for _ in 1..r {
        acc = acc.tensor(&base);
    }
    Ok(acc)
}

fn check_size(d: usize, r: usize, bound: usize) -> Result<()> {
    if d == 0 || r == 0 {
        return Err(Error::OutOfRange("d and r must be positive".into()));
    }
    let dim = (d as u128 + 1).checked_pow(r as u32).unwrap_or(u128::MAX);
    if dim > bound as u128 {
        return Err(Error::DimensionBound { dim: dim.min(usize::MAX as u128) as usize, bound });
    }
    Ok(())
}

/// Divided powers needed for the commutant: `E, F` generically, up to `max(ell, d)`
/// at a root of unity.
pub fn divided_power_bound(d: usize, params: Option<&SpecializationParams>) -> usize {
    params.map_or(1, |p| (p.ell() as usize).max(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantReport {
    pub d: usize,
    pub r: usize,
    /// `None` for `Q(v)`, else the order of `v`.
    pub order: Option<u32>,
    pub bound: usize,
    pub unknowns: usize,
    pub end_dim: usize,
    pub weight_dims: BTreeMap<i64, usize>,
    /// Generic only.
    pub highest_weight_counts: Option<BTreeMap<usize, usize>>,
}

/// Dimension of the weight-preserving `X` with `X g = g X` for every `E^(m)`,
/// `F^(m)`, `1 <= m <= bound`.
pub fn commutant_dim<F: Field>(action: &ModuleAction<F>) -> (usize, usize) {
    let f = action.field();
    let weights = action.weights();
    let mut blocks: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &w) in weights.iter().enumerate() {
        blocks.entry(w).or_default().push(i);
    }
    let mut pos = vec![0usize; weights.len()];
    let mut offset: BTreeMap<i64, usize> = BTreeMap::new();
    let mut unknowns = 0;
    // Highest weights first: elimination then sweeps downwards through the blocks.
    for (&w, b) in blocks.iter().rev() {
        for (k, &i) in b.iter().enumerate() {
            pos[i] = k;
        }
        offset.insert(w, unknowns);
        unknowns += b.len() * b.len();
    }
    let var = |i: usize, j: usize| -> usize {
        let w = weights[i];
        offset[&w] + pos[i] * blocks[&w].len() + pos[j]
    };
    let mut echelon = SparseEchelon::new(f.clone());
    let gens: Vec<(&SparseMatrix<F::Elem>, i64, Vec<Vec<(usize, F::Elem)>>)> = (1..=action.bound())
        .flat_map(|m| [(action.e(m), 2 * m as i64), (action.f(m), -2 * m as i64)])
        .map(|(g, shift)| (g, shift, g.rows()))
        .collect();
    for (_, sources) in blocks.iter().rev() {
        for (g, shift, rows) in &gens {
            for &j in sources {
                let Some(targets) = blocks.get(&(weights[j] + shift)) else { continue };
                // (X g - g X)_{ij} for every i in the target weight space of column j
                for &i in targets {
                    let mut eq: Vec<(usize, F::Elem)> = g.col(j).iter().map(|(l, x)| (var(i, *l), x.clone())).collect();
                    eq.extend(rows[i].iter().map(|(l, x)| (var(*l, j), f.neg(x))));
                    echelon.insert(eq);
                }
            }
        }
    }
    (unknowns, unknowns - echelon.rank())
}

/// `t -> dim ker(E : V_t -> V_(t+2))` for `t >= 0`.
pub fn highest_weight_counts<F: Field>(action: &ModuleAction<F>) -> BTreeMap<usize, usize> {
    let f = action.field();
    let e = action.e(1);
    let mut out = BTreeMap::new();
    for (&w, &n) in action.weight_dims().range(0..) {
        let mut echelon = SparseEchelon::new(f.clone());
        for (j, _) in action.weights().iter().enumerate().filter(|&(_, &x)| x == w) {
            echelon.insert(e.col(j).iter().cloned());
        }
        out.insert(w as usize, n - echelon.rank());
    }
    out
}

pub fn generic_highest_weight_counts(d: usize, r: usize) -> Result<BTreeMap<usize, usize>> {
    Ok(highest_weight_counts(&tensor_action(&crate::arith::Generic, d, r, 1)?))
}

/// Commutant data over `Q(v)` or, with `params`, at a root of unity.
pub fn commutant_report(d: usize, r: usize, params: Option<&SpecializationParams>) -> Result<CommutantReport> {
    let bound = divided_power_bound(d, params);
    match params {
        None => {
            let action = tensor_action(&crate::arith::Generic, d, r, bound)?;
            let (unknowns, end_dim) = commutant_dim(&action);
            Ok(CommutantReport {
                d,
                r,
                order: None,
                bound,
                unknowns,
                end_dim,
                weight_dims: action.weight_dims(),
                highest_weight_counts: Some(highest_weight_counts(&action)),
            })
        }
        Some(p) => {
            let action = tensor_action(&p.field(), d, r, bound)?;
            let (unknowns, end_dim) = commutant_dim(&action);
            Ok(CommutantReport {
                d,
                r,
                order: Some(p.order()),
                bound,
                unknowns,
                end_dim,
                weight_dims: action.weight_dims(),
                highest_weight_counts: None,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{quantum_factorial, quantum_integer, Generic};

    #[test]
    fn standard_module() {
        let f = Generic;
        let a = weyl_action(&f, 1, 1).unwrap();
        assert_eq!(a.weights(), &[1, -1]);
        assert_eq!(a.e(1).col(1), &[(0, f.one())]);
        assert!(a.e(1).col(0).is_empty());
        assert_eq!(a.f(1).col(0), &[(1, f.one())]);
        assert_eq!(a.quantum_trace_of_k(), f.from_laurent(&quantum_integer(2)));
    }

    fn commutator_holds<F: Field>(a: &ModuleAction<F>) -> bool {
        let f = a.field();
        let lhs = mat_sub(f, &mat_mul(f, a.e(1), a.f(1)), &mat_mul(f, a.f(1), a.e(1)));
        let diag = SparseMatrix {
            dim: a.dimension(),
            cols: a.weights().iter().enumerate().map(|(i, &w)| vec![(i, f.from_laurent(&quantum_integer(w)))]).collect(),
        };
        mat_sub(f, &lhs, &from_columns(f, diag.dim, diag.cols.into_iter().map(|c| c.into_iter().collect()).collect())).nnz() == 0
    }

    #[test]
    fn commutator_relation() {
        let f = Generic;
        for d in 1..=6 {
            let a = weyl_action(&f, d, 1).unwrap();
            assert!(commutator_holds(&a), "d = {d}");
            assert_eq!(a.quantum_trace_of_k(), f.from_laurent(&quantum_integer(d as i64 + 1)));
        }
        assert!(commutator_holds(&tensor_action(&f, 2, 2, 1).unwrap()));
        assert!(commutator_holds(&tensor_action(&f, 1, 3, 1).unwrap()));
    }

    #[test]
    fn divided_powers_are_normalized_powers() {
        let f = Generic;
        for (d, r) in [(3, 1), (1, 4), (2, 2)] {
            let a = tensor_action(&f, d, r, 3).unwrap();
            let mut power = a.e(0).clone();
            let mut fpower = a.f(0).clone();
            for m in 1..=3 {
                power = mat_mul(&f, a.e(1), &power);
                fpower = mat_mul(&f, a.f(1), &fpower);
                let fact = f.from_laurent(&quantum_factorial(m));
                assert_eq!(mat_scale(&f, a.e(m), &fact), power, "({d},{r}) m={m}");
                assert_eq!(mat_scale(&f, a.f(m), &fact), fpower, "({d},{r}) m={m}");
            }
        }
    }

    #[test]
    fn coassociative() {
        let f = Generic;
        assert_eq!(tensor_action(&f, 1, 3, 2).unwrap(), tensor_action_left(&f, 1, 3, 2).unwrap());
        assert_eq!(tensor_action(&f, 2, 3, 2).unwrap(), tensor_action_left(&f, 2, 3, 2).unwrap());
        let p = SpecializationParams::from_ell(3).unwrap();
        assert_eq!(tensor_action(&p.field(), 2, 3, 3).unwrap(), tensor_action_left(&p.field(), 2, 3, 3).unwrap());
    }

    #[test]
    fn small_commutants() {
        let rep = commutant_report(1, 2, None).unwrap();
        assert_eq!(rep.end_dim, 2);
        assert_eq!(rep.highest_weight_counts.unwrap(), BTreeMap::from([(0, 1), (2, 1)]));
        let rep = commutant_report(2, 3, None).unwrap();
        assert_eq!(rep.end_dim, 15);
        assert_eq!(rep.highest_weight_counts.unwrap(), BTreeMap::from([(0, 1), (2, 3), (4, 2), (6, 1)]));
        let p = SpecializationParams::from_ell(3).unwrap();
        assert_eq!(commutant_report(2, 3, Some(&p)).unwrap().end_dim, 15);
        assert_eq!(generic_highest_weight_counts(1, 4).unwrap(), BTreeMap::from([(0, 2), (2, 3), (4, 1)]));
        assert_eq!(generic_highest_weight_counts(3, 1).unwrap(), BTreeMap::from([(1, 0), (3, 1)]));
    }

    #[test]
    fn size_bound() {
        assert!(matches!(tensor_action(&Generic, 1, 12, 1), Err(Error::DimensionBound { .. })));
    }
}
