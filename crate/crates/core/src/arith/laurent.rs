use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `v = q^(1/2)` with arbitrary-precision integer
/// coefficients.
///
/// Stored densely from the lowest to the highest nonzero exponent; both end
/// coefficients are nonzero, and zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: exp, coeffs: vec![c] }
    }

    /// `v^exp` with `q = v^2`, i.e. `q^exp_q` is `v_pow(2 * exp_q)`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, 2 * exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    /// Builds from a dense coefficient vector starting at exponent `low`.
    pub fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { low: low + lead as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i64 {
        self.low
    }

    pub fn high_exp(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if self.is_zero() || exp < self.low || exp > self.high_exp() {
            return BigInt::zero();
        }
        self.coeffs[(exp - self.low) as usize].clone()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Substitutes `v -> v^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution v -> v^0 is not a ring map of Laurent polynomials");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        self.substitute_power(-1)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Gcd of the integer coefficients (non-negative; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        content(&self.coeffs)
    }

    /// Exact quotient `self / divisor` in `Z[v, v^-1]`, or `None` when the
    /// division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = poly_div_exact(&self.coeffs, &divisor.coeffs)?;
        Some(Self::from_dense(self.low - divisor.low, q))
    }

    /// Evaluates with `v` replaced by an element of any commutative ring,
    /// given a way to embed integers and `v`, `v^-1`.
    pub fn eval_with<T, FI, FM>(&self, v: &T, v_inv: &T, from_int: FI, mul: FM, add: impl Fn(&T, &T) -> T) -> T
    where
        T: Clone,
        FI: Fn(&BigInt) -> T,
        FM: Fn(&T, &T) -> T,
    {
        let mut acc = from_int(&BigInt::zero());
        if self.is_zero() {
            return acc;
        }
        // Horner in v from the top, then multiply by v^low.
        for c in self.coeffs.iter().rev() {
            acc = add(&mul(&acc, v), &from_int(c));
        }
        let (step, count) = if self.low >= 0 { (v, self.low) } else { (v_inv, -self.low) };
        for _ in 0..count {
            acc = mul(&acc, step);
        }
        acc
    }
}

pub(crate) fn content(coeffs: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Exact division of dense ascending integer polynomials.
pub(crate) fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    if den.is_empty() {
        return None;
    }
    if num.len() < den.len() {
        return if num.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = &den[dl - 1];
    let mut quot = vec![BigInt::zero(); num.len() - dl + 1];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + dl - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, dj) in den.iter().enumerate() {
            if !dj.is_zero() {
                rem[i + j] -= &q * dj;
            }
        }
        quot[i] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `lc(b)^k * a mod b` for dense ascending polynomials with `b` nonzero.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len();
    let lb = &b[db - 1];
    while r.len() >= db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - db;
        let g = lr.gcd(lb);
        let mr = lb / &g;
        let mb = &lr / &g;
        for c in r.iter_mut() {
            *c *= &mr;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &mb * bj;
        }
        trim(&mut r);
    }
    r
}

fn primitive_part(a: &[BigInt]) -> Vec<BigInt> {
    let c = content(a);
    if c.is_one() || c.is_zero() {
        return a.to_vec();
    }
    a.iter().map(|x| x / &c).collect()
}

/// Gcd in `Z[x]` of dense ascending polynomials, normalized to a positive
/// leading coefficient.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return normalize_sign(b);
    }
    if b.is_empty() {
        return normalize_sign(a);
    }
    let c = content(&a).gcd(&content(&b));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let mut a = primitive_part(&a);
    let mut b = primitive_part(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![c];
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    let a = normalize_sign(a);
    a.into_iter().map(|x| x * &c).collect()
}

fn normalize_sign(mut a: Vec<BigInt>) -> Vec<BigInt> {
    if a.last().is_some_and(|l| l.is_negative()) {
        for x in a.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    a
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().max(rhs.high_exp());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        LaurentPoly::from_dense(low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_dense(self.low + rhs.low, poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

/// Writes the polynomial in `q` when every exponent is even, otherwise in `v`,
/// highest exponent first: `q^2+1`, `-v^3+2v^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let in_q = self.terms().all(|(e, _)| e % 2 == 0);
        let (var, div) = if in_q { ("q", 2) } else { ("v", 1) };
        for (idx, (e, c)) in self.terms().rev().enumerate() {
            let e = e / div;
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match e {
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn zero_is_empty_and_trimmed() {
        let z = p(&[(3, 1), (3, -1)]);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        let x = p(&[(-2, 0), (1, 5), (4, 0)]);
        assert_eq!(x.low_exp(), 1);
        assert_eq!(x.high_exp(), 1);
    }

    #[test]
    fn exact_division() {
        let a = p(&[(0, 1), (2, 1)]);
        let b = p(&[(0, 1), (2, -1), (4, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.shift(-7).div_exact(&b), Some(a.shift(-7)));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(p(&[(0, 3)]).div_exact(&p(&[(0, 2)])), None);
    }

    #[test]
    fn gcd_of_products() {
        let a = vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]; // 1 + x^2
        let b = vec![BigInt::from(-1), BigInt::from(1)]; // x - 1
        let c = vec![BigInt::from(2), BigInt::from(3)]; // 2 + 3x
        let g = poly_gcd(&poly_mul(&poly_mul(&a, &b), &c), &poly_mul(&b, &c).iter().map(|x| x * 4).collect::<Vec<_>>());
        assert_eq!(g, poly_mul(&b, &c));
    }

    #[test]
    fn display_prefers_q() {
        assert_eq!(p(&[(2, 1), (-2, 1)]).to_string(), "q+q^-1");
        assert_eq!(p(&[(3, -1), (-1, 2)]).to_string(), "-v^3+2v^-1");
        assert_eq!(p(&[(0, -3)]).to_string(), "-3");
    }
}
