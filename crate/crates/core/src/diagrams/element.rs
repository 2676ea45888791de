use std::collections::HashMap;
use std::fmt;

use super::planar::PlanarDiagram;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Linear combination of diagrams `source -> target` over a field.
///
/// The field context is passed to each operation rather than stored.
#[derive(Clone)]
pub struct TLElement<F: Field> {
    source: usize,
    target: usize,
    terms: HashMap<PlanarDiagram, F::Elem>,
}

impl<F: Field> PartialEq for TLElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.terms == other.terms
    }
}

impl<F: Field> Eq for TLElement<F> {}

impl<F: Field> fmt::Debug for TLElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (d, c) in self.sorted_terms() {
            m.entry(&d.to_string(), c);
        }
        m.finish()
    }
}

impl<F: Field> TLElement<F> {
    pub fn zero(source: usize, target: usize) -> Self {
        Self { source, target, terms: HashMap::new() }
    }

    pub fn from_diagram(f: &F, d: PlanarDiagram) -> Self {
        Self::from_term(f, d, f.one())
    }

    pub fn from_term(f: &F, d: PlanarDiagram, c: F::Elem) -> Self {
        let mut e = Self::zero(d.source(), d.target());
        e.add_term(f, d, c);
        e
    }

    pub fn identity(f: &F, n: usize) -> Self {
        Self::from_diagram(f, PlanarDiagram::identity(n))
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &PlanarDiagram) -> Option<&F::Elem> {
        self.terms.get(d)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarDiagram, &F::Elem)> + '_ {
        self.terms.iter()
    }

    /// Terms in canonical diagram order.
    pub fn sorted_terms(&self) -> Vec<(&PlanarDiagram, &F::Elem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, f: &F, d: PlanarDiagram, c: F::Elem) {
        debug_assert_eq!((d.source(), d.target()), (self.source, self.target));
        if f.is_zero(&c) {
            return;
        }
        match self.terms.entry(d) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let s = f.add(e.get(), &c);
                if f.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.source, self.target) != (other.source, other.target) {
            return Err(Error::ShapeMismatch(format!(
                "{} -> {} and {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(())
    }

    pub fn add(&self, f: &F, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(f, d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, f: &F, other: &Self) -> Result<Self> {
        self.add(f, &other.scale(f, &f.neg(&f.one())))
    }

    pub fn scale(&self, f: &F, c: &F::Elem) -> Self {
        if f.is_zero(c) {
            return Self::zero(self.source, self.target);
        }
        let terms = self.terms.iter().map(|(d, x)| (d.clone(), f.mul(x, c))).collect();
        Self { source: self.source, target: self.target, terms }
    }

    /// `self` followed by `other`; closed loops contribute `[2]` each.
    pub fn compose(&self, f: &F, other: &Self) -> Result<Self> {
        self.compose_filtered(f, other, |_| true)
    }

    /// As [`compose`](Self::compose), keeping only diagrams accepted by `keep`.
    pub fn compose_filtered(&self, f: &F, other: &Self, keep: impl Fn(&PlanarDiagram) -> bool) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} with {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        let mut loops = LoopPowers::new(f);
        let mut out = Self::zero(self.source, other.target);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, k) = d1.compose_unchecked(d2);
                if !keep(&d) {
                    continue;
                }
                let c = f.mul(c1, c2);
                let c = if k == 0 { c } else { f.mul(&c, loops.get(k)) };
                out.add_term(f, d, c);
            }
        }
        Ok(out)
    }

    /// The algebra product `self * other` in `TL_N`, meaning `other` is applied first.
    pub fn mul(&self, f: &F, other: &Self) -> Result<Self> {
        other.compose(f, self)
    }

    pub fn tensor(&self, f: &F, other: &Self) -> Self {
        let mut out = Self::zero(self.source + other.source, self.target + other.target);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                out.add_term(f, d1.tensor(d2), f.mul(c1, c2));
            }
        }
        out
    }

    pub fn star(&self) -> Self {
        let terms = self.terms.iter().map(|(d, c)| (d.star(), c.clone())).collect();
        Self { source: self.target, target: self.source, terms }
    }

    /// Changes the coefficient field term by term.
    pub fn try_map<G: Field>(&self, g: &G, mut phi: impl FnMut(&F::Elem) -> Result<G::Elem>) -> Result<TLElement<G>> {
        let mut out = TLElement::zero(self.source, self.target);
        for (d, c) in &self.terms {
            out.add_term(g, d.clone(), phi(c)?);
        }
        Ok(out)
    }

    pub fn retain(&mut self, keep: impl Fn(&PlanarDiagram) -> bool) {
        self.terms.retain(|d, _| keep(d));
    }
}

/// Cache of `[2]^k`.
pub(crate) struct LoopPowers<'a, F: Field> {
    f: &'a F,
    powers: Vec<F::Elem>,
}

impl<'a, F: Field> LoopPowers<'a, F> {
    pub(crate) fn new(f: &'a F) -> Self {
        Self { f, powers: vec![f.one()] }
    }

    pub(crate) fn get(&mut self, k: usize) -> &F::Elem {
        while self.powers.len() <= k {
            let next = self.f.mul(self.powers.last().unwrap(), &self.f.loop_value());
            self.powers.push(next);
        }
        &self.powers[k]
    }
}
