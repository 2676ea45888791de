//! Character bookkeeping for tilting modules of quantum `sl_2` at a root of
//! unity: their Weyl factors and weight spaces, the counts `a_m` and
//! `w(d, r; m)`, and the multiplicities `mu(d, r; t)`.

use std::collections::BTreeMap;

use crate::arith::{quantum_integer, quantum_integer_at, Field, LaurentPoly, RationalFunction, SpecializationParams};
use crate::diagrams::m_vector;
use crate::linalg::Matrix;
use crate::error::{Error, Result};

/// `t = a * ell + b` with `0 <= b < ell`.
fn split(t: usize, ell: usize) -> (usize, usize) {
    (t / ell, t % ell)
}

/// Whether `t = -1 mod ell` (the set `N_1`).
pub fn is_special(t: usize, ell: usize) -> bool {
    t % ell == ell - 1
}

/// `g(t) = (a + 2) ell - b - 2` for `t = a ell + b`, `0 <= b <= ell - 2`.
pub fn g_map(t: usize, ell: usize) -> Result<usize> {
    if ell < 2 {
        return Err(Error::OutOfRange(format!("g needs ell >= 2, got {ell}")));
    }
    if is_special(t, ell) {
        return Err(Error::SpecialWeight { t, ell: ell as u32 });
    }
    let (a, b) = split(t, ell);
    Ok((a + 2) * ell - b - 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TiltingKind {
    /// `T(m) = Delta(m)`.
    Weyl,
    /// Non-split extension of `Delta(m - 2b - 2)` by `Delta(m)`.
    Extension { b: usize },
}

/// Weyl factors of the indecomposable tilting module `T(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingShape {
    pub m: usize,
    pub ell: usize,
    pub kind: TiltingKind,
    pub weyl_factors: Vec<usize>,
}

impl TiltingShape {
    pub fn new(m: usize, ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::OutOfRange(format!("tilting shapes need ell >= 2, got {ell}")));
        }
        let case_one = m < ell || is_special(m, ell);
        let (a, b) = split(m, ell);
        let case_two = a >= 1 && b < ell - 1;
        assert!(case_one != case_two, "the two cases must partition N (m = {m}, ell = {ell})");
        Ok(if case_one {
            Self { m, ell, kind: TiltingKind::Weyl, weyl_factors: vec![m] }
        } else {
            Self { m, ell, kind: TiltingKind::Extension { b }, weyl_factors: vec![m, m - 2 * b - 2] }
        })
    }

    pub fn dimension(&self) -> usize {
        self.weyl_factors.iter().map(|w| w + 1).sum()
    }

    /// Weight-space dimension at weight `t`, read off the case list.
    pub fn weight_dim(&self, t: i64) -> usize {
        let m = self.m as i64;
        if t > m || t < -m || (m - t) % 2 != 0 {
            return 0;
        }
        let j = ((m - t) / 2) as usize;
        match self.kind {
            TiltingKind::Weyl => 1,
            TiltingKind::Extension { b } => {
                if b < j && j + b < self.m {
                    2
                } else {
                    1
                }
            }
        }
    }
}

/// Weight `t -> dim T(m)_t`, as a sum of Weyl characters.
pub fn tilting_weight_dims(m: usize, ell: usize) -> Result<BTreeMap<i64, usize>> {
    let shape = TiltingShape::new(m, ell)?;
    let mut out = BTreeMap::new();
    for &w in &shape.weyl_factors {
        for i in 0..=w {
            *out.entry(w as i64 - 2 * i as i64).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// `a_m(d, r)` for `m = 0..=dr`: r-tuples in `{0..d}` with sum `m`.
pub fn composition_counts(d: usize, r: usize) -> Vec<u64> {
    let mut a = vec![1u64];
    for _ in 0..r {
        let mut next = vec![0u64; a.len() + d];
        for (i, &x) in a.iter().enumerate() {
            for slot in &mut next[i..=i + d] {
                *slot += x;
            }
        }
        a = next;
    }
    a
}

pub fn composition_count(d: usize, r: usize, m: usize) -> Result<u64> {
    if m > d * r {
        return Err(Error::OutOfRange(format!("a_m needs 0 <= m <= dr = {}, got {m}", d * r)));
    }
    Ok(composition_counts(d, r)[m])
}

/// `w(d, r; m) = dim (Delta(d)^{(x) r})_m = a_{(m + dr)/2}`.
pub fn weight_dim(d: usize, r: usize, m: i64) -> Result<u64> {
    let dr = (d * r) as i64;
    if m.abs() > dr || (dr - m) % 2 != 0 {
        return Err(Error::OutOfRange(format!("weight {m} is not a weight of Delta({d})^{r}")));
    }
    composition_count(d, r, ((m + dr) / 2) as usize)
}

fn m_at(m: &[u64], t: usize) -> u64 {
    m.get(t).copied().unwrap_or(0)
}

/// The closed formula for `mu(d, r; t)` in terms of `m(d, r; .)`, with the
/// negative sum indexed as `2 i ell - t - 2`, `i >= a + 1`.
pub fn mu_formula(d: usize, r: usize, t: usize, ell: usize) -> Result<u64> {
    mu_formula_from(&m_vector(d, r), t, ell)
}

pub fn mu_formula_from(m: &[u64], t: usize, ell: usize) -> Result<u64> {
    if ell < 2 {
        return Err(Error::OutOfRange(format!("mu needs ell >= 2, got {ell}")));
    }
    if is_special(t, ell) {
        return Ok(m_at(m, t));
    }
    let top = m.len();
    let (a, _) = split(t, ell);
    let plus: u64 = (0..).map(|j| t + 2 * j * ell).take_while(|&s| s < top).map(|s| m_at(m, s)).sum();
    let minus: u64 = (a + 1..).map(|i| 2 * i * ell - t - 2).take_while(|&s| s < top).map(|s| m_at(m, s)).sum();
    plus.checked_sub(minus).ok_or_else(|| Error::OutOfRange(format!("negative multiplicity at t = {t}, ell = {ell}")))
}

/// The same formula with the negative sum indexed as `t - 2b - 2 + 2 i ell`, `i >= 1`.
pub fn mu_formula_alt(m: &[u64], t: usize, ell: usize) -> Result<u64> {
    if ell < 2 {
        return Err(Error::OutOfRange(format!("mu needs ell >= 2, got {ell}")));
    }
    if is_special(t, ell) {
        return Ok(m_at(m, t));
    }
    let top = m.len();
    let (_, b) = split(t, ell);
    let plus: u64 = (0..).map(|j| t + 2 * j * ell).take_while(|&s| s < top).map(|s| m_at(m, s)).sum();
    let minus: u64 = (1..).map(|i| t + 2 * i * ell - 2 * b - 2).take_while(|&s| s < top).map(|s| m_at(m, s)).sum();
    plus.checked_sub(minus).ok_or_else(|| Error::OutOfRange(format!("negative multiplicity at t = {t}, ell = {ell}")))
}

/// `mu(d, r; .)` from `m(t) = mu(t) + mu(g(t))`, solved from `t = dr` down,
/// with `mu(s) = 0` for `s > dr`.
pub fn mu_by_recursion(m: &[u64], ell: usize) -> Result<Vec<u64>> {
    if ell < 2 {
        return Err(Error::OutOfRange(format!("mu needs ell >= 2, got {ell}")));
    }
    let top = m.len();
    let mut mu = vec![0u64; top];
    for t in (0..top).rev() {
        mu[t] = if is_special(t, ell) {
            m[t]
        } else {
            let g = g_map(t, ell)?;
            let above = if g < top { mu[g] } else { 0 };
            m[t].checked_sub(above).ok_or_else(|| Error::OutOfRange(format!("negative multiplicity at t = {t}")))?
        };
    }
    Ok(mu)
}

/// `mu(d, r; .)` recovered top-down from weight-space dimensions alone:
/// `w(m) = mu(m) + sum_j dim T(m + 2j)_m mu(m + 2j)`.
pub fn mu_from_weights(d: usize, r: usize, ell: usize) -> Result<Vec<u64>> {
    let dr = d * r;
    let a = composition_counts(d, r);
    let mut mu = vec![0u64; dr + 1];
    for m in (0..=dr).rev() {
        if (dr - m) % 2 != 0 {
            continue;
        }
        let w = a[(m + dr) / 2];
        let mut rest = 0u64;
        for s in (m + 2..=dr).step_by(2) {
            rest += TiltingShape::new(s, ell)?.weight_dim(m as i64) as u64 * mu[s];
        }
        mu[m] = w.checked_sub(rest).ok_or_else(|| Error::OutOfRange(format!("negative multiplicity at m = {m}")))?;
    }
    Ok(mu)
}

/// Outcome of checking `w(m) = mu(m) + sum_j dim T(m+2j)_m mu(m+2j)` for all `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCheck {
    /// `(m, w(m), right-hand side)` for each weight `0 <= m <= dr` of the right parity.
    pub rows: Vec<(usize, u64, u64)>,
    pub recovered_matches: bool,
}

impl WeightCheck {
    pub fn passed(&self) -> bool {
        self.recovered_matches && self.rows.iter().all(|(_, w, rhs)| w == rhs)
    }
}

pub fn consistency_weight_check(d: usize, r: usize, ell: usize) -> Result<WeightCheck> {
    let dr = d * r;
    let mu = mu_by_recursion(&m_vector(d, r), ell)?;
    let mut rows = Vec::new();
    for m in (0..=dr).filter(|m| (dr - m) % 2 == 0) {
        let w = weight_dim(d, r, m as i64)?;
        let mut rhs = mu[m];
        for s in (m + 2..=dr).step_by(2) {
            rhs += TiltingShape::new(s, ell)?.weight_dim(m as i64) as u64 * mu[s];
        }
        rows.push((m, w, rhs));
    }
    Ok(WeightCheck { rows, recovered_matches: mu_from_weights(d, r, ell)? == mu })
}

/// `sum_t mu(t) dim T(t)`.
pub fn total_dimension(mu: &[u64], ell: usize) -> Result<u64> {
    let mut s = 0;
    for (t, &x) in mu.iter().enumerate() {
        if x > 0 {
            s += x * TiltingShape::new(t, ell)?.dimension() as u64;
        }
    }
    Ok(s)
}

/// Which computation produced a multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Formula,
    Recursion,
    Weights,
    GramRank,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Formula => "formula",
            Route::Recursion => "recursive",
            Route::Weights => "weights",
            Route::GramRank => "gram",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub t: usize,
    pub b: u64,
    pub m: u64,
    /// The agreed value, taken from the first route.
    pub mu: u64,
    pub routes: BTreeMap<Route, u64>,
}

impl TableRow {
    pub fn routes_agree(&self) -> bool {
        self.routes.values().all(|&x| x == self.mu)
    }
}

/// Multiplicities `mu(d, r; t)` for one `(d, r, ell)`, over `t` with `dr - t` even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub d: usize,
    pub r: usize,
    pub ell: usize,
    pub rows: Vec<TableRow>,
}

impl MultiplicityTable {
    /// Builds the character-level routes; `b` holds `b(d, r; t)` for `t = 0..=dr`.
    pub fn new(d: usize, r: usize, ell: usize, b: &[u64]) -> Result<Self> {
        let m = m_vector(d, r);
        let rec = mu_by_recursion(&m, ell)?;
        let wts = mu_from_weights(d, r, ell)?;
        let dr = d * r;
        let mut rows = Vec::new();
        for t in (0..=dr).filter(|t| (dr - t) % 2 == 0) {
            let f = mu_formula_from(&m, t, ell)?;
            let routes = BTreeMap::from([(Route::Formula, f), (Route::Recursion, rec[t]), (Route::Weights, wts[t])]);
            rows.push(TableRow { t, b: b[t], m: m[t], mu: f, routes });
        }
        Ok(Self { d, r, ell, rows })
    }

    pub fn add_route(&mut self, route: Route, values: &BTreeMap<usize, u64>) {
        for row in &mut self.rows {
            if let Some(&v) = values.get(&row.t) {
                row.routes.insert(route, v);
            }
        }
    }

    pub fn mu_vector(&self) -> Vec<u64> {
        let mut mu = vec![0; self.d * self.r + 1];
        for row in &self.rows {
            mu[row.t] = row.mu;
        }
        mu
    }

    pub fn routes_agree(&self) -> bool {
        self.rows.iter().all(TableRow::routes_agree)
    }

    pub fn total_dimension(&self) -> Result<u64> {
        total_dimension(&self.mu_vector(), self.ell)
    }

    /// `d = 1, ell = 2` is where `[2] = 0` kills the loop value.
    pub fn is_edge_case(&self) -> bool {
        self.ell == 2 && self.d == 1
    }
}

/// The tridiagonal sub-top Gram matrix `M_{dr-2}` built from its entry formulas,
/// with its determinant and rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubTopClosedForm<E> {
    pub matrix: Matrix<E>,
    /// From the three-term recurrence of a tridiagonal determinant.
    pub determinant: E,
    /// `r - 1` if the determinant is nonzero, else `r - 2`.
    pub rank: usize,
}

/// Diagonal `[2]_{q^d} / [d]`, adjacent entries `(-1)^(d+1) / [d]`, zero elsewhere.
pub fn example_sub_closed_form<F: Field>(f: &F, d: usize, r: usize) -> Result<SubTopClosedForm<F::Elem>> {
    if d == 0 || r < 2 {
        return Err(Error::OutOfRange("need d >= 1 and r >= 2".into()));
    }
    let inv_d = f.from_rational_function(&RationalFunction::new(LaurentPoly::one(), quantum_integer(d as i64)).expect("[d] != 0"))?;
    let diag = f.mul(&f.from_laurent(&quantum_integer_at(2, 1, 2 * d as i64)), &inv_d);
    let off = if d % 2 == 1 { inv_d.clone() } else { f.neg(&inv_d) };
    let n = r - 1;
    let matrix = Matrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
        0 => diag.clone(),
        1 => off.clone(),
        _ => f.zero(),
    });
    // D_k = a D_{k-1} - b^2 D_{k-2}
    let b2 = f.mul(&off, &off);
    let (mut prev, mut cur) = (f.one(), diag.clone());
    for _ in 1..n {
        let next = f.sub(&f.mul(&diag, &cur), &f.mul(&b2, &prev));
        prev = cur;
        cur = next;
    }
    let rank = if f.is_zero(&cur) { r - 2 } else { r - 1 };
    Ok(SubTopClosedForm { matrix, determinant: cur, rank })
}

/// `(-1)^((d+1)(r+1)) [d]^-(r-1) [r]_x` with `x = (-1)^(d+1) q^d`.
pub fn sub_top_determinant<F: Field>(f: &F, d: usize, r: usize) -> Result<F::Elem> {
    let sign = if d % 2 == 1 { 1 } else { -1 };
    let num = quantum_integer_at(r as i64, sign, 2 * d as i64);
    let den = quantum_integer(d as i64).pow(r as u32 - 1);
    let x = f.from_rational_function(&RationalFunction::new(num, den).expect("[d] != 0"))?;
    Ok(if ((d + 1) * (r + 1)) % 2 == 1 { f.neg(&x) } else { x })
}

/// Whether `zeta^(2dr) = 1`, which for `ell > d` is exactly when `[r]_x` vanishes.
pub fn sub_top_determinant_vanishes(d: usize, r: usize, params: &SpecializationParams) -> bool {
    (2 * d * r) % params.zeta_order() as usize == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_examples() {
        assert_eq!(g_map(0, 3).unwrap(), 4);
        assert_eq!(g_map(4, 3).unwrap(), 6);
        assert!(matches!(g_map(2, 3), Err(Error::SpecialWeight { t: 2, ell: 3 })));
        for ell in 2..8 {
            for t in (0..60).filter(|&t| !is_special(t, ell)) {
                let g = g_map(t, ell).unwrap();
                assert!(g >= t + 2 && (g - t) % 2 == 0 && !is_special(g, ell));
            }
        }
    }

    #[test]
    fn tilting_shapes() {
        let t4 = TiltingShape::new(4, 3).unwrap();
        assert_eq!(t4.weyl_factors, vec![4, 0]);
        let dims: Vec<usize> = (-4..=4).rev().step_by(2).map(|w| t4.weight_dim(w)).collect();
        assert_eq!(dims, vec![1, 1, 2, 1, 1]);
        let t6 = TiltingShape::new(6, 3).unwrap();
        assert_eq!(t6.weyl_factors, vec![6, 4]);
        let dims: Vec<usize> = (-6..=6).rev().step_by(2).map(|w| t6.weight_dim(w)).collect();
        assert_eq!(dims, vec![1, 2, 2, 2, 2, 2, 1]);
        assert_eq!(TiltingShape::new(2, 3).unwrap().kind, TiltingKind::Weyl);
        assert_eq!(TiltingShape::new(1, 3).unwrap().weyl_factors, vec![1]);
        for ell in 2..7 {
            for m in 0..40 {
                let s = TiltingShape::new(m, ell).unwrap();
                let by_chars = tilting_weight_dims(m, ell).unwrap();
                for w in -(m as i64) - 2..=m as i64 + 2 {
                    assert_eq!(s.weight_dim(w), by_chars.get(&w).copied().unwrap_or(0), "m={m} ell={ell} w={w}");
                }
                assert_eq!(by_chars.values().sum::<usize>(), s.dimension());
            }
        }
    }

    #[test]
    fn composition_counts_small() {
        assert_eq!(composition_counts(2, 3), vec![1, 3, 6, 7, 6, 3, 1]);
        for (d, r) in [(1, 5), (3, 4), (4, 2)] {
            let a = composition_counts(d, r);
            assert_eq!(a[1], r as u64);
            assert_eq!(a.iter().sum::<u64>(), ((d + 1) as u64).pow(r as u32));
            assert!(a.iter().eq(a.iter().rev()));
        }
        assert_eq!(weight_dim(2, 3, 4).unwrap(), 3);
        assert!(weight_dim(2, 3, 5).is_err());
        assert!(composition_count(2, 3, 7).is_err());
    }

    #[test]
    fn worked_table() {
        let m = m_vector(2, 3);
        let mu = mu_by_recursion(&m, 3).unwrap();
        assert_eq!(mu, vec![0, 0, 3, 0, 1, 0, 1]);
        for t in 0..=6 {
            assert_eq!(mu_formula_from(&m, t, 3).unwrap(), mu[t]);
        }
        assert_eq!(mu_formula(2, 3, 2, 3).unwrap(), 3);
        assert_eq!(total_dimension(&mu, 3).unwrap(), 27);
        let check = consistency_weight_check(2, 3, 3).unwrap();
        assert!(check.passed());
        assert!(check.rows.contains(&(0, 7, 7)));
    }

    #[test]
    fn reindexed_forms_agree() {
        for d in 1..=4 {
            for r in 1..=6 {
                let m = m_vector(d, r);
                for ell in d + 1..=12 {
                    for t in 0..=d * r {
                        assert_eq!(mu_formula_from(&m, t, ell).unwrap(), mu_formula_alt(&m, t, ell).unwrap());
                    }
                    // small t, the form with sum over i > 0 of m(2 i ell - t - 2)
                    for t in 0..ell - 1 {
                        let plus: u64 = (0..).map(|j| t + 2 * j * ell).take_while(|&s| s < m.len()).map(|s| m[s]).sum();
                        let minus: u64 = (1..).map(|i| 2 * i * ell - t - 2).take_while(|&s| s < m.len()).map(|s| m[s]).sum();
                        assert_eq!(plus - minus, mu_formula_from(&m, t, ell).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn sub_top_multiplicity() {
        for d in 1..=4 {
            for r in 2..=5 {
                for ell in d + 1..=9 {
                    let mu = mu_by_recursion(&m_vector(d, r), ell).unwrap();
                    let expect = if (d * r) % ell == 0 { r - 2 } else { r - 1 };
                    assert_eq!(mu[d * r - 2], expect as u64, "({d},{r},{ell})");
                }
            }
        }
    }
}
