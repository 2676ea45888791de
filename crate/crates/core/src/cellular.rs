//! The cell datum of `E = p TL_dr p`, Gram matrices of its cell modules,
//! simple dimensions at roots of unity, decomposition numbers and a checker
//! for the cellular multiplication axiom.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{
    quantum_factorial, CyclotomicScalar, Field, Generic, RationalFunction, RationalPoint, SpecializationParams,
};
use crate::diagrams::{basis_diagrams, block_boundaries, LoopPowers, PlanarDiagram, TLElement};
use crate::error::{Error, Result};
use crate::linalg::{rank, Matrix};
use crate::projectors::{jones_wenzl, tensor_projector, BlockProjector};
use crate::tilting::{g_map, is_special, mu_formula_from, MultiplicityTable};

/// `(Lambda, M, C, *)` for `E(d, r)`: cells `t` with `dr - t` even, each with
/// its ordered list `M(t) = B(d, r; t)`.
#[derive(Clone, Debug)]
pub struct CellDatum {
    d: usize,
    r: usize,
    cells: BTreeMap<usize, Vec<PlanarDiagram>>,
}

impl CellDatum {
    pub fn new(d: usize, r: usize) -> Result<Self> {
        if d == 0 || r == 0 {
            return Err(Error::OutOfRange("d and r must be positive".into()));
        }
        let n = d * r;
        let cells = (0..=n).filter(|t| (n - t) % 2 == 0).map(|t| (t, basis_diagrams(d, r, t))).collect();
        Ok(Self { d, r, cells })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn poset(&self) -> Vec<usize> {
        self.cells.keys().copied().collect()
    }

    pub fn basis(&self, t: usize) -> &[PlanarDiagram] {
        self.cells.get(&t).map_or(&[], Vec::as_slice)
    }

    /// `S o star(T)`, the diagram behind `C(S, T)`.
    pub fn diagram(&self, t: usize, s: usize, u: usize) -> PlanarDiagram {
        let b = self.basis(t);
        PlanarDiagram::from_monic_pair(&b[s], &b[u]).expect("cell basis diagrams are monic")
    }

    /// `sum_t |M(t)|^2`.
    pub fn dimension(&self) -> usize {
        self.cells.values().map(|b| b.len() * b.len()).sum()
    }

    /// All `(t, i, j)` in cell order.
    pub fn labels(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (&t, b) in &self.cells {
            for i in 0..b.len() {
                for j in 0..b.len() {
                    out.push((t, i, j));
                }
            }
        }
        out
    }
}

/// The cell module `W(t)`: the images `p S` of the basis diagrams, truncated
/// to monic diagrams since the rest cannot reach the identity.
pub struct CellModule<F: Field> {
    field: F,
    t: usize,
    basis: Vec<PlanarDiagram>,
    images: Vec<TLElement<F>>,
}

impl<F: Field> CellModule<F> {
    pub fn new(proj: &BlockProjector<F>, t: usize) -> Result<Self> {
        let basis = basis_diagrams(proj.d(), proj.r(), t);
        let images = basis
            .iter()
            .map(|s| proj.after(&TLElement::from_diagram(proj.field(), s.clone()), PlanarDiagram::is_monic))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { field: proj.field().clone(), t, basis, images })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn basis(&self) -> &[PlanarDiagram] {
        &self.basis
    }

    /// `<S_i, S_j>`: coefficient of `id_t` in `star(S_j) o p o S_i`.
    pub fn gram(&self) -> Matrix<F::Elem> {
        let f = &self.field;
        let stars: Vec<PlanarDiagram> = self.basis.iter().map(PlanarDiagram::star).collect();
        let mut loops = LoopPowers::new(f);
        let mut m = Matrix::filled(self.basis.len(), self.basis.len(), f.zero());
        for (i, img) in self.images.iter().enumerate() {
            for (j, st) in stars.iter().enumerate() {
                let mut acc = f.zero();
                for (y, c) in img.terms() {
                    let (z, k) = y.compose_unchecked(st);
                    if z.is_identity() {
                        acc = f.add(&acc, &f.mul(c, loops.get(k)));
                    }
                }
                m[(i, j)] = acc;
            }
        }
        m
    }
}

/// Gram entry by full expansion of `star(T) o p o S` with `p = p_d^{(x) r}`.
pub fn gram_entry(d: usize, r: usize, s: &PlanarDiagram, t: &PlanarDiagram) -> Result<RationalFunction> {
    let f = Generic;
    let p = tensor_projector(d, r);
    let x = TLElement::from_diagram(&f, s.clone()).compose(&f, &p)?.compose(&f, &TLElement::from_diagram(&f, t.star()))?;
    Ok(x.coeff(&PlanarDiagram::identity(s.source())).cloned().unwrap_or_else(RationalFunction::zero))
}

pub fn gram_matrix_in<F: Field>(f: &F, d: usize, r: usize, t: usize) -> Result<Matrix<F::Elem>> {
    check_cell(d, r, t)?;
    Ok(CellModule::new(&BlockProjector::new(f.clone(), d, r)?, t)?.gram())
}

/// Gram matrix of `W(t)` over `Q(v)`.
pub fn gram_matrix(d: usize, r: usize, t: usize) -> Result<Matrix<RationalFunction>> {
    gram_matrix_in(&Generic, d, r, t)
}

/// Gram matrix of `W(t)` with `p` specialized before assembly.
pub fn gram_matrix_at(d: usize, r: usize, t: usize, params: &SpecializationParams) -> Result<Matrix<CyclotomicScalar>> {
    ensure_specializable(d, params)?;
    gram_matrix_in(&params.field(), d, r, t)
}

fn check_cell(d: usize, r: usize, t: usize) -> Result<()> {
    if d == 0 || r == 0 {
        return Err(Error::OutOfRange("d and r must be positive".into()));
    }
    if t > d * r || (d * r - t) % 2 != 0 {
        return Err(Error::OutOfRange(format!("t = {t} is not a cell of E({d}, {r})")));
    }
    Ok(())
}

/// `p` specializes only when `ell > d`; otherwise `[d]!` vanishes.
pub fn ensure_specializable(d: usize, params: &SpecializationParams) -> Result<()> {
    if params.ell() as usize > d {
        return Ok(());
    }
    let fact = RationalFunction::new(crate::arith::LaurentPoly::constant(1), quantum_factorial(d)).expect("[d]! != 0");
    params.field().from_rational_function(&fact)?;
    Err(Error::EllTooSmall { ell: params.ell(), d })
}

/// Rank over `Q(v)`. Evaluation at `v = 2` can only lower the rank, so full
/// rank there settles it; otherwise eliminate over `Q(v)` itself.
pub fn generic_rank(m: &Matrix<RationalFunction>) -> usize {
    let full = m.rows().min(m.cols());
    let point = RationalPoint::integer(2).expect("nonzero");
    if let Ok(ev) = m.try_map(|x| point.from_rational_function(x)) {
        if rank(&point, &ev) == full {
            return full;
        }
    }
    rank(&Generic, m)
}

/// `t -> dim L(t)`, the ranks of all specialized Gram matrices.
pub fn simple_dims(d: usize, r: usize, params: &SpecializationParams) -> Result<BTreeMap<usize, usize>> {
    ensure_specializable(d, params)?;
    let f = params.field();
    let proj = BlockProjector::new(f.clone(), d, r)?;
    let n = d * r;
    (0..=n)
        .filter(|t| (n - t) % 2 == 0)
        .map(|t| Ok((t, rank(&f, &CellModule::new(&proj, t)?.gram()))))
        .collect()
}

/// Multiplicity table with the Gram-rank route filled in.
pub fn multiplicity_table(d: usize, r: usize, params: &SpecializationParams) -> Result<MultiplicityTable> {
    let b = crate::diagrams::b_vector(d, r);
    let mut table = MultiplicityTable::new(d, r, params.ell() as usize, &b)?;
    let dims = simple_dims(d, r, params)?;
    table.add_route(crate::tilting::Route::GramRank, &dims.into_iter().map(|(t, x)| (t, x as u64)).collect());
    Ok(table)
}

/// 0/1 matrix `d_{st} = [W(t) : L(s)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub d: usize,
    pub r: usize,
    pub ell: usize,
    pub cells: Vec<usize>,
    /// Nonzero entries as `(s, t)`.
    pub ones: Vec<(usize, usize)>,
}

impl DecompositionMatrix {
    pub fn get(&self, s: usize, t: usize) -> u8 {
        u8::from(self.ones.contains(&(s, t)))
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.ones.iter().all(|&(s, t)| s >= t)
    }

    /// Cells `t` where `b(t) != sum_{s >= t} d_{st} mu(s)`.
    pub fn violations(&self, b: &[u64], mu: &[u64]) -> Vec<usize> {
        self.cells
            .iter()
            .copied()
            .filter(|&t| {
                let rhs: u64 = self.cells.iter().filter(|&&s| s >= t).map(|&s| self.get(s, t) as u64 * mu[s]).sum();
                b[t] != rhs
            })
            .collect()
    }

    pub fn dense(&self) -> Vec<Vec<u8>> {
        self.cells.iter().map(|&s| self.cells.iter().map(|&t| self.get(s, t)).collect()).collect()
    }

    /// With `d = 1` and `ell = 2`, `[2] = 0` and the argument behind the
    /// pattern degenerates; such tables are computed but flagged.
    pub fn is_edge_case(&self) -> bool {
        self.d == 1 && self.ell == 2
    }
}

/// The pattern `d_tt = 1` for `L(t) != 0` and `d_{g(t), t} = 1` for
/// `t` not `-1 mod ell` with `g(t) <= dr` and `L(g(t)) != 0`.
pub fn decomposition_matrix(d: usize, r: usize, ell: usize) -> Result<DecompositionMatrix> {
    if ell <= d {
        return Err(Error::EllTooSmall { ell: ell as u32, d });
    }
    let n = d * r;
    let m = crate::diagrams::m_vector(d, r);
    let cells: Vec<usize> = (0..=n).filter(|t| (n - t) % 2 == 0).collect();
    let mu: Vec<u64> = (0..=n).map(|t| mu_formula_from(&m, t, ell)).collect::<Result<_>>()?;
    let mut ones = Vec::new();
    for &t in &cells {
        if mu[t] > 0 {
            ones.push((t, t));
        }
        if !is_special(t, ell) {
            let g = g_map(t, ell)?;
            if g <= n && mu[g] > 0 {
                ones.push((g, t));
            }
        }
    }
    ones.sort_unstable();
    Ok(DecompositionMatrix { d, r, ell, cells, ones })
}

/// Settings for [`verify_c3`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C3Config {
    pub seed: u64,
    /// Check every quadruple when the basis has at most this many elements.
    pub exhaustive_limit: usize,
    /// Otherwise check at least this many quadruples.
    pub samples: usize,
}

impl Default for C3Config {
    fn default() -> Self {
        Self { seed: 0, exhaustive_limit: 50, samples: 200 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C3Report {
    pub d: usize,
    pub r: usize,
    pub basis_size: usize,
    pub exhaustive: bool,
    pub quadruples: usize,
    pub violations: Vec<String>,
}

impl C3Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Above this many terms in `p`, [`verify_c3`] argues `p X p = 0` from
/// [`killed_in_block`] rather than expanding the product.
const EXPAND_LIMIT: usize = 64;

/// `p f_i = f_i p = 0` for every `f_i` inside a block.
fn block_annihilation(proj: &BlockProjector<Generic>) -> Result<Vec<String>> {
    let (d, r) = (proj.d(), proj.r());
    let allowed = block_boundaries(d, r);
    let mut bad = Vec::new();
    for i in (1..d * r).filter(|i| !allowed.contains(i)) {
        let fi = TLElement::from_diagram(proj.field(), PlanarDiagram::generator_f(i, d * r)?);
        if !proj.after(&fi, |_| true)?.is_empty() || !proj.before(&fi, |_| true)?.is_empty() {
            bad.push(format!("p does not kill f_{i}"));
        }
    }
    Ok(bad)
}

/// A small arc `(i, i + 1)` inside a block gives `f_i X = [2] X` (or
/// `X f_i = [2] X`), so `p X p = [2]^-1 p f_i X p = 0` once
/// [`block_annihilation`] holds.
fn killed_in_block(x: &PlanarDiagram, d: usize, r: usize) -> Result<bool> {
    let n = d * r;
    let allowed = block_boundaries(d, r);
    for &i in x.left_set().difference(&allowed) {
        if x.compose(&PlanarDiagram::generator_f(i, n)?)? == (x.clone(), 1) {
            return Ok(true);
        }
    }
    for &i in x.right_set().difference(&allowed) {
        if PlanarDiagram::generator_f(i, n)?.compose(x)? == (x.clone(), 1) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Expands `C(S1, S2) C(T1, T2)` in the basis `{p D p}` and checks that only
/// cells `<= t` occur and that the cell-`t` part is `sum_S a(S) C(S, T2)` with
/// `a` independent of `T2`.
///
/// Since `p D p = D + (diagrams with a small arc inside a block)`, the
/// coordinates of `Z` are its coefficients on basis diagrams. For
/// `Z = p (D_x p D_y) p` these are the coefficients of `M = D_x p D_y`; the
/// leftover diagrams `X` of `M` are checked to satisfy `p X p = 0`.
pub fn verify_c3(d: usize, r: usize, config: C3Config) -> Result<C3Report> {
    let f = Generic;
    let datum = CellDatum::new(d, r)?;
    let proj = BlockProjector::new(f, d, r)?;
    let labels = datum.labels();
    let diagrams: Vec<PlanarDiagram> = labels.iter().map(|&(t, i, j)| datum.diagram(t, i, j)).collect();
    let index: HashMap<PlanarDiagram, usize> = diagrams.iter().enumerate().map(|(k, dg)| (dg.clone(), k)).collect();
    let mut violations = Vec::new();

    // The coordinate matrix is unitriangular: p E p has coefficient 1 on E and
    // no other basis diagram. Past `EXPAND_LIMIT` terms this follows from the
    // shape of p_d instead: every other term of p_d has small arcs on both
    // sides, and those persist through the product.
    let expand = jones_wenzl(d).len().checked_pow(r as u32).is_some_and(|k| k <= EXPAND_LIMIT);
    if expand {
        for (k, dg) in diagrams.iter().enumerate() {
            let x = proj.sandwich(&TLElement::from_diagram(&f, dg.clone()))?;
            for (y, c) in x.terms() {
                if let Some(&k2) = index.get(y) {
                    if (k2 == k) != f.is_one(c) || (k2 != k && !f.is_zero(c)) {
                        violations.push(format!("p D p is not unitriangular at {:?}", labels[k]));
                    }
                }
            }
            if x.coeff(dg).is_none() {
                violations.push(format!("p D p lost D at {:?}", labels[k]));
            }
        }
    } else {
        let pd = jones_wenzl(d);
        if !pd.coeff(&PlanarDiagram::identity(d)).is_some_and(|c| f.is_one(c)) {
            violations.push(format!("p_{d} has identity coefficient != 1"));
        }
        for (dg, _) in pd.terms().filter(|(dg, _)| !dg.is_identity()) {
            if dg.left_set().is_empty() || dg.right_set().is_empty() {
                violations.push(format!("term {dg:?} of p_{d} lacks a small arc"));
            }
        }
        violations.extend(block_annihilation(&proj)?);
    }

    let by_cell: BTreeMap<usize, Vec<usize>> = labels.iter().enumerate().fold(BTreeMap::new(), |mut acc, (k, &(t, _, _))| {
        acc.entry(t).or_default().push(k);
        acc
    });
    let exhaustive = diagrams.len() <= config.exhaustive_limit;
    // Work items: (x, y-cell, T1); each runs over every T2 of the cell.
    let mut items: Vec<(usize, usize, usize)> = Vec::new();
    if exhaustive {
        for x in 0..labels.len() {
            for (&t, _) in &by_cell {
                for t1 in 0..datum.basis(t).len() {
                    items.push((x, t, t1));
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let cells: Vec<usize> = by_cell.keys().copied().collect();
        let mut count = 0;
        while count < config.samples {
            let x = rng.gen_range(0..labels.len());
            let t = *cells.choose(&mut rng).unwrap();
            let width = datum.basis(t).len();
            if width == 0 {
                continue;
            }
            items.push((x, t, rng.gen_range(0..width)));
            count += width;
        }
    }

    let mut dead: HashMap<PlanarDiagram, bool> = HashMap::new();
    let mut quadruples = 0;
    for &(x, t, t1) in &items {
        let width = datum.basis(t).len();
        let mut reference: Option<BTreeMap<usize, RationalFunction>> = None;
        for t2 in 0..width {
            quadruples += 1;
            let y = datum.diagram(t, t1, t2);
            let mid = proj.after(&TLElement::from_diagram(&f, y), |_| true)?;
            let m = mid.compose(&f, &TLElement::from_diagram(&f, diagrams[x].clone()))?;
            let mut top: BTreeMap<usize, RationalFunction> = BTreeMap::new();
            for (dg, c) in m.terms() {
                match index.get(dg) {
                    Some(&k) => {
                        let (s, i, j) = labels[k];
                        if s > t {
                            violations.push(format!("{:?} * {:?} has a term in cell {s}", labels[x], (t, t1, t2)));
                        } else if s == t {
                            if j != t2 {
                                violations.push(format!("{:?} * {:?} has a cell-{t} term with right index {j}", labels[x], (t, t1, t2)));
                            }
                            top.insert(i, c.clone());
                        }
                    }
                    None => {
                        let ok = match dead.get(dg) {
                            Some(&ok) => ok,
                            None => {
                                let ok = if expand {
                                    proj.sandwich(&TLElement::from_diagram(&f, dg.clone()))?.is_empty()
                                } else {
                                    killed_in_block(dg, d, r)?
                                };
                                dead.insert(dg.clone(), ok);
                                ok
                            }
                        };
                        if !ok {
                            violations.push(format!("p X p != 0 for non-basis diagram {dg:?}"));
                        }
                    }
                }
            }
            let (s, _, _) = labels[x];
            if s < t && !top.is_empty() {
                violations.push(format!("{:?} * {:?} reaches cell {t} from cell {s}", labels[x], (t, t1, t2)));
            }
            match &reference {
                None => reference = Some(top),
                Some(r0) if *r0 != top => {
                    violations.push(format!("coefficients of {:?} * C({t}; {t1}, .) depend on T2", labels[x]));
                }
                Some(_) => {}
            }
        }
    }
    Ok(C3Report { d, r, basis_size: diagrams.len(), exhaustive, quadruples, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_rational_function, quantum_integer, specialize};

    #[test]
    fn small_gram_matrices() {
        let g = gram_matrix(1, 2, 0).unwrap();
        assert_eq!(g.rows(), 1);
        assert_eq!(g[(0, 0)], RationalFunction::from_laurent(quantum_integer(2)));
        let top = gram_matrix(2, 3, 6).unwrap();
        assert!(top[(0, 0)].is_one() && top.rows() == 1);
        let g = gram_matrix(2, 2, 0).unwrap();
        assert_eq!(g.rows(), 1);
        assert!(!g[(0, 0)].is_zero());
    }

    #[test]
    fn module_route_matches_full_expansion() {
        for (d, r) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            let datum = CellDatum::new(d, r).unwrap();
            for t in datum.poset() {
                let g = gram_matrix(d, r, t).unwrap();
                let b = datum.basis(t);
                for i in 0..b.len() {
                    for j in 0..b.len() {
                        assert_eq!(g[(i, j)], gram_entry(d, r, &b[i], &b[j]).unwrap(), "({d},{r},{t}) [{i},{j}]");
                    }
                }
                assert!(g.is_symmetric());
            }
        }
    }

    #[test]
    fn sub_top_entries() {
        let g = gram_matrix(2, 3, 4).unwrap();
        let diag = parse_rational_function("(q^2+q^-2)/(q+q^-1)").unwrap();
        let off = parse_rational_function("-1/(q+q^-1)").unwrap();
        assert_eq!(g[(0, 0)], diag);
        assert_eq!(g[(1, 1)], diag);
        assert_eq!(g[(0, 1)], off);
    }

    #[test]
    fn specialization_commutes_with_assembly() {
        let params = SpecializationParams::from_ell(3).unwrap();
        for t in [0, 2, 4, 6] {
            let generic = gram_matrix(2, 3, t).unwrap();
            let at = gram_matrix_at(2, 3, t, &params).unwrap();
            assert_eq!(generic.try_map(|x| specialize(x, &params)).unwrap(), at);
        }
    }

    #[test]
    fn worked_simple_dims() {
        let params = SpecializationParams::from_ell(3).unwrap();
        let dims = simple_dims(2, 3, &params).unwrap();
        assert_eq!(dims, BTreeMap::from([(0, 0), (2, 3), (4, 1), (6, 1)]));
        assert!(matches!(gram_matrix_at(3, 2, 0, &SpecializationParams::from_ell(2).unwrap()), Err(Error::DenominatorVanishes { .. })));
    }

    #[test]
    fn worked_decomposition() {
        let dm = decomposition_matrix(2, 3, 3).unwrap();
        assert_eq!(dm.ones, vec![(2, 2), (4, 0), (4, 4), (6, 4), (6, 6)]);
        assert!(dm.is_lower_unitriangular());
        assert!(dm.violations(&[1, 0, 3, 0, 2, 0, 1], &[0, 0, 3, 0, 1, 0, 1]).is_empty());
        let ss = decomposition_matrix(1, 2, 7).unwrap();
        assert_eq!(ss.ones, vec![(0, 0), (2, 2)]);
        assert!(decomposition_matrix(3, 2, 2).is_err());
    }

    #[test]
    fn sub_top_closed_form() {
        use crate::linalg::determinant;
        use crate::tilting::{example_sub_closed_form, sub_top_determinant, sub_top_determinant_vanishes};
        for d in 1..=3 {
            for r in 2..=4 {
                let t = d * r - 2;
                let g = gram_matrix(d, r, t).unwrap();
                let closed = example_sub_closed_form(&Generic, d, r).unwrap();
                assert_eq!(g, closed.matrix, "({d},{r})");
                assert_eq!(determinant(&Generic, &g).unwrap(), closed.determinant);
                assert_eq!(closed.determinant, sub_top_determinant(&Generic, d, r).unwrap());
                assert_eq!(closed.rank, r - 1);
                for ell in d as u32 + 1..=5 {
                    let params = SpecializationParams::from_ell(ell).unwrap();
                    let f = params.field();
                    let at = gram_matrix_at(d, r, t, &params).unwrap();
                    let closed = example_sub_closed_form(&f, d, r).unwrap();
                    assert_eq!(at, closed.matrix);
                    assert_eq!(rank(&f, &at), closed.rank);
                    let vanishes = f.is_zero(&sub_top_determinant(&f, d, r).unwrap());
                    assert_eq!(vanishes, sub_top_determinant_vanishes(d, r, &params));
                    assert_eq!(closed.rank, if (d * r) % ell as usize == 0 { r - 2 } else { r - 1 });
                }
            }
        }
    }

    #[test]
    fn c3_small() {
        let rep = verify_c3(1, 3, C3Config::default()).unwrap();
        assert!(rep.exhaustive && rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.basis_size, 5);
        assert_eq!(rep.quadruples, 25);
        let rep = verify_c3(2, 2, C3Config::default()).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn block_shortcut_matches_expansion() {
        for (d, r) in [(2, 2), (3, 2), (2, 3)] {
            let proj = BlockProjector::new(Generic, d, r).unwrap();
            assert!(block_annihilation(&proj).unwrap().is_empty());
            for x in crate::diagrams::enumerate_all(d * r, d * r) {
                let killed = proj.sandwich(&TLElement::from_diagram(&Generic, x.clone())).unwrap().is_empty();
                assert_eq!(killed_in_block(&x, d, r).unwrap(), !proj.is_eligible(&x), "{x:?}");
                assert_eq!(killed, !proj.is_eligible(&x), "{x:?}");
            }
        }
    }

    #[test]
    fn c3_past_expansion_limit() {
        for (d, r) in [(4, 2), (6, 1)] {
            let rep = verify_c3(d, r, C3Config::default()).unwrap();
            assert!(rep.passed(), "({d},{r}) {:?}", rep.violations);
        }
    }
}
