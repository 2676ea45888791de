use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::{modulus, CyclotomicModulus, CyclotomicScalar};
use super::laurent::LaurentPoly;
use super::quantum::quantum_integer;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// A coefficient field for diagram algebra and linear algebra.
///
/// Every field here receives `Z[v, v^-1]` (so Temperley-Lieb loops and
/// quantum integers are always defined) and may or may not receive a given
/// element of `Q(v)`.
pub trait Field: Clone + Send + Sync + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_laurent(&self, p: &LaurentPoly) -> Self::Elem;
    fn from_rational_function(&self, x: &RationalFunction) -> Result<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_laurent(&LaurentPoly::constant(n))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|i| self.mul(a, &i))
    }

    /// Value of a closed Temperley-Lieb loop, `[2] = q + q^-1`.
    fn loop_value(&self) -> Self::Elem {
        self.from_laurent(&quantum_integer(2))
    }

    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Size estimate for pivot choice; smaller is cheaper.
    fn cost(&self, _a: &Self::Elem) -> u64 {
        0
    }
}

/// The generic field `K = Q(v)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Generic;

impl Field for Generic {
    type Elem = RationalFunction;

    fn zero(&self) -> RationalFunction {
        RationalFunction::zero()
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one()
    }
    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &RationalFunction) -> bool {
        a.is_one()
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a + b
    }
    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a - b
    }
    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        -a
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a * b
    }
    fn inv(&self, a: &RationalFunction) -> Option<RationalFunction> {
        a.inv()
    }
    fn from_laurent(&self, p: &LaurentPoly) -> RationalFunction {
        RationalFunction::from_laurent(p.clone())
    }
    fn from_rational_function(&self, x: &RationalFunction) -> Result<RationalFunction> {
        Ok(x.clone())
    }
    fn render(&self, a: &RationalFunction) -> String {
        a.to_string()
    }
    fn cost(&self, a: &RationalFunction) -> u64 {
        let c = |p: &LaurentPoly| p.terms().map(|(_, c)| c.bits() + 1).sum::<u64>();
        c(a.numerator()) + c(a.denominator())
    }
}

/// Order data for a root-of-unity specialization.
///
/// Parametrized by the multiplicative order `n` of the value of `v`; then
/// `zeta = v^2` has order `n / gcd(n, 2)` and `ell` is the order of `zeta^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpecializationParams {
    order: u32,
    zeta_order: u32,
    ell: u32,
}

impl SpecializationParams {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::OutOfRange("root-of-unity order must be positive".into()));
        }
        let zeta_order = if order % 2 == 0 { order / 2 } else { order };
        let ell = ell_from_zeta_order(zeta_order);
        Ok(Self { order, zeta_order, ell })
    }

    /// The canonical order `n = 4 * ell` (so `|zeta| = 2 ell` is even).
    pub fn from_ell(ell: u32) -> Result<Self> {
        if ell == 0 {
            return Err(Error::OutOfRange("ell must be positive".into()));
        }
        Self::new(4 * ell)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zeta_order(&self) -> u32 {
        self.zeta_order
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn field(&self) -> Cyclotomic {
        Cyclotomic::new(self.order)
    }
}

/// `ell = |zeta|` for odd `|zeta|`, `|zeta| / 2` for even.
pub fn ell_from_zeta_order(zeta_order: u32) -> u32 {
    if zeta_order % 2 == 1 {
        zeta_order
    } else {
        zeta_order / 2
    }
}

/// `Q(v)` specialized at a primitive `n`-th root of unity.
#[derive(Clone)]
pub struct Cyclotomic {
    modulus: Arc<CyclotomicModulus>,
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({})", self.modulus.order())
    }
}

impl Cyclotomic {
    pub fn new(order: u32) -> Self {
        Self { modulus: modulus(order) }
    }

    pub fn order(&self) -> u32 {
        self.modulus.order()
    }

    pub fn modulus(&self) -> &Arc<CyclotomicModulus> {
        &self.modulus
    }
}

impl Field for Cyclotomic {
    type Elem = CyclotomicScalar;

    fn zero(&self) -> CyclotomicScalar {
        CyclotomicScalar::zero(&self.modulus)
    }
    fn one(&self) -> CyclotomicScalar {
        CyclotomicScalar::one(&self.modulus)
    }
    fn is_zero(&self, a: &CyclotomicScalar) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &CyclotomicScalar) -> bool {
        a.is_one()
    }
    fn add(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> CyclotomicScalar {
        debug_assert_eq!(a.order(), b.order());
        a.add_unchecked(b, false)
    }
    fn sub(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> CyclotomicScalar {
        debug_assert_eq!(a.order(), b.order());
        a.add_unchecked(b, true)
    }
    fn neg(&self, a: &CyclotomicScalar) -> CyclotomicScalar {
        a.neg()
    }
    fn mul(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> CyclotomicScalar {
        debug_assert_eq!(a.order(), b.order());
        a.mul_unchecked(b)
    }
    fn inv(&self, a: &CyclotomicScalar) -> Option<CyclotomicScalar> {
        a.inv()
    }
    fn from_laurent(&self, p: &LaurentPoly) -> CyclotomicScalar {
        CyclotomicScalar::from_laurent(&self.modulus, p)
    }
    fn from_rational_function(&self, x: &RationalFunction) -> Result<CyclotomicScalar> {
        let den = self.from_laurent(x.denominator());
        let inv = den.inv().ok_or_else(|| Error::DenominatorVanishes {
            denominator: x.denominator().to_string(),
            order: self.order(),
        })?;
        Ok(self.from_laurent(x.numerator()).mul_unchecked(&inv))
    }
    fn render(&self, a: &CyclotomicScalar) -> String {
        a.to_string()
    }
    fn cost(&self, a: &CyclotomicScalar) -> u64 {
        a.cost()
    }
}

/// Exact evaluation `v -> v0` at a nonzero rational point.
///
/// Ranks can only drop under evaluation, so a full-rank evaluation certifies
/// full rank over `Q(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    v: BigRational,
    v_inv: BigRational,
}

impl RationalPoint {
    pub fn new(v: BigRational) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::OutOfRange("evaluation point must be nonzero".into()));
        }
        let v_inv = v.recip();
        Ok(Self { v, v_inv })
    }

    pub fn integer(v: i64) -> Result<Self> {
        Self::new(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn point(&self) -> &BigRational {
        &self.v
    }

    fn eval(&self, p: &LaurentPoly) -> BigRational {
        if p.is_zero() {
            return BigRational::zero();
        }
        let mut acc = BigRational::zero();
        for c in p.dense().iter().rev() {
            acc = acc * &self.v + BigRational::from_integer(c.clone());
        }
        let low = p.low_exp();
        let base = if low >= 0 { &self.v } else { &self.v_inv };
        for _ in 0..low.unsigned_abs() {
            acc *= base;
        }
        acc
    }
}

impl Field for RationalPoint {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_laurent(&self, p: &LaurentPoly) -> BigRational {
        self.eval(p)
    }
    fn from_rational_function(&self, x: &RationalFunction) -> Result<BigRational> {
        let den = self.eval(x.denominator());
        if den.is_zero() {
            return Err(Error::OutOfRange(format!("denominator {} vanishes at v = {}", x.denominator(), self.v)));
        }
        Ok(self.eval(x.numerator()) / den)
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn cost(&self, a: &BigRational) -> u64 {
        a.numer().bits() + a.denom().bits()
    }
}

/// Applies the specialization `v -> primitive n-th root of unity`.
pub fn specialize(x: &RationalFunction, params: &SpecializationParams) -> Result<CyclotomicScalar> {
    params.field().from_rational_function(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quantum::quantum_integer;

    #[test]
    fn ell_follows_parity_of_zeta_order() {
        for (n, zeta, ell) in [(20, 10, 5), (8, 4, 2), (12, 6, 3), (7, 7, 7), (14, 7, 7), (24, 12, 6), (9, 9, 9)] {
            let p = SpecializationParams::new(n).unwrap();
            assert_eq!((p.zeta_order(), p.ell()), (zeta, ell), "n = {n}");
        }
        assert_eq!(SpecializationParams::from_ell(3).unwrap().order(), 12);
        assert!(SpecializationParams::new(0).is_err());
    }

    #[test]
    fn specialization_examples() {
        let two = RationalFunction::from_laurent(quantum_integer(2));
        let at8 = SpecializationParams::new(8).unwrap();
        assert!(specialize(&two, &at8).unwrap().is_zero());
        assert!(specialize(&RationalFunction::one(), &at8).unwrap().is_one());
        let inv3 = RationalFunction::new(LaurentPoly::one(), quantum_integer(3)).unwrap();
        let at12 = SpecializationParams::new(12).unwrap();
        assert!(matches!(specialize(&inv3, &at12), Err(Error::DenominatorVanishes { order: 12, .. })));
        let five = RationalFunction::from_laurent(quantum_integer(5));
        assert!(specialize(&five, &SpecializationParams::new(20).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn rational_point_evaluates() {
        let f = RationalPoint::integer(2).unwrap();
        // [2] at v = 2 is 4 + 1/4
        assert_eq!(f.from_laurent(&quantum_integer(2)), BigRational::new(17.into(), 4.into()));
    }
}
