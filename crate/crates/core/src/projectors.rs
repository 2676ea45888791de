//! Jones-Wenzl projectors and the idempotent `p = p_d^{(x) r}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{gauss_prefactor, quantum_integer, Field, Generic, LaurentPoly, RationalFunction};
use crate::diagrams::{block_boundaries, PlanarDiagram, TLElement};
use crate::error::{Error, Result};

type GenericElement = TLElement<Generic>;

/// `p_d` over `Q(v)`, cached per `d`. Built with the one-sided expansion
/// `p_d = i(p_{d-1}) sum_j (-1)^j [d-j]/[d] f_{d-1} f_{d-2} ... f_{d-j}`,
/// where `i` adds a through strand on the right; it agrees with
/// [`jones_wenzl_two_sided`] and costs `d |p_{d-1}|` compositions.
pub fn jones_wenzl(d: usize) -> Arc<GenericElement> {
    assert!(d >= 1, "Jones-Wenzl projector needs d >= 1");
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GenericElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&d) {
        return p.clone();
    }
    let p = if d == 1 {
        Arc::new(TLElement::identity(&Generic, 1))
    } else {
        let f = Generic;
        let ip = jones_wenzl(d - 1).tensor(&f, &TLElement::identity(&f, 1));
        let qd = quantum_integer(d as i64);
        let mut word = TLElement::identity(&f, d);
        let mut tail = TLElement::zero(d, d);
        for j in 0..d {
            if j > 0 {
                let gen = TLElement::from_diagram(&f, PlanarDiagram::generator_f(d - j, d).expect("1 <= d - j < d"));
                word = word.mul(&f, &gen).expect("shapes agree");
            }
            let mut c = RationalFunction::new(quantum_integer((d - j) as i64), qd.clone()).expect("[d] != 0");
            if j % 2 == 1 {
                c = -c;
            }
            tail = tail.add(&f, &word.scale(&f, &c)).expect("shapes agree");
        }
        Arc::new(ip.mul(&f, &tail).expect("shapes agree"))
    };
    cache.lock().unwrap().entry(d).or_insert(p).clone()
}

/// `p_d = i(p_{d-1}) - [d-1]/[d] i(p_{d-1}) f_{d-1} i(p_{d-1})`, uncached.
/// Quadratic in `|p_{d-1}|`; kept as a cross-check for [`jones_wenzl`].
pub fn jones_wenzl_two_sided(d: usize) -> GenericElement {
    assert!(d >= 1, "Jones-Wenzl projector needs d >= 1");
    let f = Generic;
    if d == 1 {
        return TLElement::identity(&f, 1);
    }
    let ip = jones_wenzl_two_sided(d - 1).tensor(&f, &TLElement::identity(&f, 1));
    let gen = TLElement::from_diagram(&f, PlanarDiagram::generator_f(d - 1, d).expect("d >= 2"));
    let sandwich = ip.compose(&f, &gen).and_then(|x| x.compose(&f, &ip)).expect("shapes agree");
    let ratio = RationalFunction::new(quantum_integer(d as i64 - 1), quantum_integer(d as i64)).expect("[d] != 0");
    ip.sub(&f, &sandwich.scale(&f, &ratio)).expect("shapes agree")
}

/// `p_d` with coefficients moved into `f`; fails where a denominator vanishes.
pub fn jones_wenzl_in<F: Field>(f: &F, d: usize) -> Result<TLElement<F>> {
    jones_wenzl(d).try_map(f, |c| f.from_rational_function(c))
}

/// `P_d(q)^-1 sum_w q^l(w) T_w` with `T_i -> q - f_i`.
///
/// Each `T_w` is built along the reduced word that repeatedly strips the
/// smallest left descent, which is the lexicographically smallest one.
pub fn hecke_symmetrizer_image(d: usize) -> GenericElement {
    assert!(d >= 1);
    let f = Generic;
    let mut memo: HashMap<Vec<u8>, GenericElement> = HashMap::new();
    let mut total = TLElement::zero(d, d);
    for w in permutations(d) {
        let tw = hecke_element(&f, &w, d, &mut memo);
        let len = inversions(&w);
        total = total.add(&f, &tw.scale(&f, &RationalFunction::from_laurent(LaurentPoly::q_pow(len as i64)))).unwrap();
    }
    let norm = RationalFunction::from_laurent(gauss_prefactor(d)).inv().expect("P_d != 0");
    total.scale(&f, &norm)
}

fn hecke_element(f: &Generic, w: &[u8], d: usize, memo: &mut HashMap<Vec<u8>, GenericElement>) -> GenericElement {
    if let Some(x) = memo.get(w) {
        return x.clone();
    }
    let x = match smallest_left_descent(w) {
        None => TLElement::identity(f, d),
        Some(i) => {
            // w = s_i * w' with l(w') = l(w) - 1, so T_w = T_i T_w'
            let mut rest = w.to_vec();
            for v in rest.iter_mut() {
                if *v as usize == i {
                    *v += 1;
                } else if *v as usize == i + 1 {
                    *v -= 1;
                }
            }
            let tail = hecke_element(f, &rest, d, memo);
            let fi = TLElement::from_diagram(f, PlanarDiagram::generator_f(i, d).unwrap());
            let q = RationalFunction::from_laurent(LaurentPoly::q_pow(1));
            tail.scale(f, &q).sub(f, &tail.compose(f, &fi).unwrap()).unwrap()
        }
    };
    memo.insert(w.to_vec(), x.clone());
    x
}

/// One-line notation, values `1..=d`. `i` is a left descent of `w` when `i + 1`
/// appears before `i`.
fn smallest_left_descent(w: &[u8]) -> Option<usize> {
    let mut pos = vec![0usize; w.len() + 2];
    for (k, &v) in w.iter().enumerate() {
        pos[v as usize] = k;
    }
    (1..w.len()).find(|&i| pos[i + 1] < pos[i])
}

fn inversions(w: &[u8]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

fn permutations(d: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for k in 1..=d as u8 {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (0..=w.len()).map(move |pos| {
                    let mut v = w.clone();
                    v.insert(pos, k);
                    v
                })
            })
            .collect();
    }
    out.sort();
    out
}

/// Fully expanded `p_d^{(x) r}` over `Q(v)`.
pub fn tensor_projector(d: usize, r: usize) -> GenericElement {
    assert!(d >= 1 && r >= 1);
    let f = Generic;
    let pd = jones_wenzl(d);
    (1..r).fold((*pd).clone(), |acc, _| acc.tensor(&f, &pd))
}

/// `p = p_d^{(x) r}` kept as its `r` commuting factors `id (x) p_d (x) id`.
#[derive(Clone, Debug)]
pub struct BlockProjector<F: Field> {
    d: usize,
    r: usize,
    field: F,
    blocks: Vec<TLElement<F>>,
}

impl<F: Field> BlockProjector<F> {
    pub fn new(field: F, d: usize, r: usize) -> Result<Self> {
        if d == 0 || r == 0 {
            return Err(Error::OutOfRange("d and r must be positive".into()));
        }
        let pd = jones_wenzl_in(&field, d)?;
        let blocks = (0..r)
            .map(|j| {
                let left = TLElement::identity(&field, j * d);
                let right = TLElement::identity(&field, (r - 1 - j) * d);
                left.tensor(&field, &pd).tensor(&field, &right)
            })
            .collect();
        Ok(Self { d, r, field, blocks })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// `x` followed by `p`, keeping only diagrams accepted by `keep` after each
    /// factor. Dropped diagrams must stay dropped under further composition.
    pub fn after(&self, x: &TLElement<F>, keep: impl Fn(&PlanarDiagram) -> bool + Copy) -> Result<TLElement<F>> {
        let mut acc = x.clone();
        for b in &self.blocks {
            acc = acc.compose_filtered(&self.field, b, keep)?;
        }
        Ok(acc)
    }

    /// `p` followed by `x`.
    pub fn before(&self, x: &TLElement<F>, keep: impl Fn(&PlanarDiagram) -> bool + Copy) -> Result<TLElement<F>> {
        let mut acc = x.clone();
        for b in &self.blocks {
            acc = b.compose_filtered(&self.field, &acc, keep)?;
        }
        Ok(acc)
    }

    /// `p x p` for `x : dr -> dr`.
    pub fn sandwich(&self, x: &TLElement<F>) -> Result<TLElement<F>> {
        let y = self.before(x, |_| true)?;
        self.after(&y, |_| true)
    }

    /// Whether `L(D)` and `R(D)` lie in `{d, 2d, ..., (r-1)d}`.
    pub fn is_eligible(&self, dg: &PlanarDiagram) -> bool {
        let allowed = block_boundaries(self.d, self.r);
        dg.left_set().is_subset(&allowed) && dg.right_set().is_subset(&allowed)
    }

    /// `p D p` for a basis-eligible `D : dr -> dr`.
    pub fn projected_basis_element(&self, dg: &PlanarDiagram) -> Result<TLElement<F>> {
        let n = self.d * self.r;
        if dg.source() != n || dg.target() != n {
            return Err(Error::ShapeMismatch(format!("need a {n} -> {n} diagram, got {} -> {}", dg.source(), dg.target())));
        }
        if !self.is_eligible(dg) {
            return Err(Error::NotBasisEligible(format!(
                "L = {:?}, R = {:?} not inside {:?}",
                dg.left_set(),
                dg.right_set(),
                block_boundaries(self.d, self.r)
            )));
        }
        self.sandwich(&TLElement::from_diagram(&self.field, dg.clone()))
    }
}

/// `p D p` over `Q(v)`.
pub fn projected_basis_element(d: usize, r: usize, dg: &PlanarDiagram) -> Result<GenericElement> {
    BlockProjector::new(Generic, d, r)?.projected_basis_element(dg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational_function;

    fn rf(s: &str) -> RationalFunction {
        parse_rational_function(s).unwrap()
    }

    #[test]
    fn small_projectors() {
        let f = Generic;
        assert_eq!(*jones_wenzl(1), TLElement::identity(&f, 1));
        let p2 = jones_wenzl(2);
        let f1 = PlanarDiagram::generator_f(1, 2).unwrap();
        assert_eq!(p2.len(), 2);
        assert!(p2.coeff(&PlanarDiagram::identity(2)).unwrap().is_one());
        assert_eq!(p2.coeff(&f1).unwrap(), &rf("-1/(q+q^-1)"));
        assert_eq!(hecke_symmetrizer_image(2), *p2);
        assert_eq!(hecke_symmetrizer_image(3), *jones_wenzl(3));
    }

    #[test]
    fn one_sided_expansion_matches_recursion() {
        for d in 1..=7 {
            assert_eq!(*jones_wenzl(d), jones_wenzl_two_sided(d), "d = {d}");
        }
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(inversions(&[3, 2, 1]), 3);
        assert_eq!(smallest_left_descent(&[1, 2, 3]), None);
        assert_eq!(smallest_left_descent(&[2, 1, 3]), Some(1));
        assert_eq!(smallest_left_descent(&[1, 3, 2]), Some(2));
    }

    #[test]
    fn two_by_two_tensor_projector() {
        let f = Generic;
        let p = tensor_projector(2, 2);
        let inv2 = rf("1/(q+q^-1)");
        let f1 = PlanarDiagram::generator_f(1, 4).unwrap();
        let f3 = PlanarDiagram::generator_f(3, 4).unwrap();
        let (f13, _) = f1.compose(&f3).unwrap();
        let mut expect = TLElement::identity(&f, 4);
        expect.add_term(&f, f1, f.neg(&inv2));
        expect.add_term(&f, f3, f.neg(&inv2));
        expect.add_term(&f, f13, f.mul(&inv2, &inv2));
        assert_eq!(p, expect);
        let blocks = BlockProjector::new(f, 2, 2).unwrap();
        assert_eq!(blocks.after(&TLElement::identity(&f, 4), |_| true).unwrap(), p);
    }

    #[test]
    fn projected_elements() {
        let bp = BlockProjector::new(Generic, 2, 2).unwrap();
        let id = PlanarDiagram::identity(4);
        assert_eq!(bp.projected_basis_element(&id).unwrap(), tensor_projector(2, 2));
        let f2 = PlanarDiagram::generator_f(2, 4).unwrap();
        let x = bp.projected_basis_element(&f2).unwrap();
        assert!(x.coeff(&id).is_none());
        assert!(x.len() <= 16);
        assert!(matches!(
            bp.projected_basis_element(&PlanarDiagram::generator_f(1, 4).unwrap()),
            Err(Error::NotBasisEligible(_))
        ));
    }
}
