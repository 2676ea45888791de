use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{content, poly_div_exact, poly_mul, LaurentPoly};
use crate::error::{Error, Result};

/// The quotient `Q[x] / Phi_n(x)`, with `x` the image of `v`.
#[derive(Debug)]
pub struct CyclotomicModulus {
    order: u32,
    /// Monic `Phi_n`, ascending, length `phi(n) + 1`.
    phi: Vec<BigInt>,
    /// `x^k mod Phi_n` for `0 <= k < n`.
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicModulus {
    fn build(order: u32) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        let n = order as usize;
        let mut powers = Vec::with_capacity(n);
        let mut cur = vec![BigInt::zero(); deg];
        if deg > 0 {
            cur[0] = BigInt::one();
        }
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce: x^deg = -sum phi[i] x^i
            let top = cur.pop().unwrap_or_default();
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c -= &top * &phi[i];
                }
            }
        }
        Self { order, phi, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Euler phi of the order: the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn polynomial(&self) -> &[BigInt] {
        &self.phi
    }

    /// Reduces an ascending integer polynomial (any degree) into residue coordinates.
    fn reduce(&self, p: &[BigInt]) -> Vec<BigInt> {
        let deg = self.degree();
        let n = self.order as usize;
        let mut out = vec![BigInt::zero(); deg];
        for (k, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < deg {
                out[k] += c;
            } else {
                for (o, pk) in out.iter_mut().zip(&self.powers[k % n]) {
                    if !pk.is_zero() {
                        *o += c * pk;
                    }
                }
            }
        }
        out
    }
}

/// The `n`-th cyclotomic polynomial, ascending coefficients.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        p = poly_div_exact(&p, &cyclotomic_polynomial(d)).expect("cyclotomic factor divides x^n - 1");
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// Shared handle to the modulus for order `n`; concurrent first use is benign.
pub fn modulus(n: u32) -> Arc<CyclotomicModulus> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicModulus>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return m.clone();
    }
    let built = Arc::new(CyclotomicModulus::build(n));
    cache.lock().unwrap().entry(n).or_insert(built).clone()
}

/// Element of `Q(x) = Q[x]/Phi_n`, stored as integer residue coordinates over a
/// common positive denominator with no common factor.
#[derive(Clone)]
pub struct CyclotomicScalar {
    modulus: Arc<CyclotomicModulus>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.modulus.order == other.modulus.order && self.den == other.den && self.num == other.num
    }
}
impl Eq for CyclotomicScalar {}

impl Hash for CyclotomicScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.modulus.order.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl CyclotomicScalar {
    pub fn zero(modulus: &Arc<CyclotomicModulus>) -> Self {
        Self { modulus: modulus.clone(), num: vec![BigInt::zero(); modulus.degree()], den: BigInt::one() }
    }

    pub fn one(modulus: &Arc<CyclotomicModulus>) -> Self {
        Self::from_integer(modulus, BigInt::one())
    }

    pub fn from_integer(modulus: &Arc<CyclotomicModulus>, c: BigInt) -> Self {
        let mut s = Self::zero(modulus);
        if !s.num.is_empty() {
            s.num[0] = c;
        }
        s
    }

    /// Image of a Laurent polynomial under `v -> x`; always defined.
    pub fn from_laurent(modulus: &Arc<CyclotomicModulus>, p: &LaurentPoly) -> Self {
        let n = modulus.order as i64;
        let mut acc = vec![BigInt::zero(); modulus.degree()];
        for (e, c) in p.terms() {
            let k = e.rem_euclid(n) as usize;
            for (a, pk) in acc.iter_mut().zip(&modulus.powers[k]) {
                if !pk.is_zero() {
                    *a += c * pk;
                }
            }
        }
        Self { modulus: modulus.clone(), num: acc, den: BigInt::one() }
    }

    /// Builds from rational residue coordinates (length at most `phi(n)`).
    pub fn from_residue(modulus: &Arc<CyclotomicModulus>, residue: &[BigRational]) -> Result<Self> {
        if residue.len() > modulus.degree() {
            return Err(Error::Parse(format!(
                "residue of length {} exceeds phi({}) = {}",
                residue.len(),
                modulus.order,
                modulus.degree()
            )));
        }
        let den = residue.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let mut num = vec![BigInt::zero(); modulus.degree()];
        for (slot, r) in num.iter_mut().zip(residue) {
            *slot = r.numer() * (&den / r.denom());
        }
        Ok(Self::normalized(modulus.clone(), num, den))
    }

    fn normalized(modulus: Arc<CyclotomicModulus>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !den.is_one() {
            let g = content(&num).gcd(&den);
            if g.is_zero() {
                den = BigInt::one();
            } else if !g.is_one() {
                for c in num.iter_mut() {
                    *c /= &g;
                }
                den /= &g;
            }
        }
        Self { modulus, num, den }
    }

    pub fn order(&self) -> u32 {
        self.modulus.order
    }

    pub fn modulus(&self) -> &Arc<CyclotomicModulus> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.first().is_some_and(One::is_one) && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Rational residue coordinates in the power basis `1, x, ..., x^(phi-1)`.
    pub fn residue(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus.order != other.modulus.order {
            return Err(Error::OrderMismatch(self.modulus.order, other.modulus.order));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self, subtract: bool) -> Self {
        let num: Vec<BigInt> = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if subtract { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let x = a * &other.den;
                    let y = b * &self.den;
                    if subtract {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect()
        };
        let den = if self.den == other.den { self.den.clone() } else { &self.den * &other.den };
        Self::normalized(self.modulus.clone(), num, den)
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.modulus);
        }
        let prod = poly_mul(&self.num, &other.num);
        let num = self.modulus.reduce(&prod);
        Self::normalized(self.modulus.clone(), num, &self.den * &other.den)
    }

    /// Rough size, used to prefer cheap pivots.
    pub(crate) fn cost(&self) -> u64 {
        self.num.iter().filter(|c| !c.is_zero()).map(|c| c.bits() + 1).sum::<u64>() + self.den.bits()
    }

    pub fn neg(&self) -> Self {
        Self { modulus: self.modulus.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    /// Multiplicative inverse; `None` exactly for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Extended Euclid for num * s = 1 mod Phi over Q.
        let to_q = |v: &[BigInt]| -> Vec<BigRational> { v.iter().map(|c| BigRational::from_integer(c.clone())).collect() };
        let mut r0 = to_q(&self.modulus.phi);
        let mut r1 = to_q(&self.num);
        qtrim(&mut r1);
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = qdivrem(&r0, &r1);
            let s2 = qsub(&s0, &qmul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant because Phi is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let residue: Vec<BigRational> = s0.iter().map(|s| s / &c * BigRational::from_integer(self.den.clone())).collect();
        let mut residue = residue;
        residue.resize(self.modulus.degree(), BigRational::zero());
        Some(Self::from_residue(&self.modulus, &residue).expect("degree below phi"))
    }
}

fn qtrim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn qmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(&mut out);
    out
}

fn qsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    qtrim(&mut out);
    out
}

fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    qtrim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lb = b.last().unwrap();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / lb;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        r.pop();
        qtrim(&mut r);
    }
    qtrim(&mut q);
    (q, r)
}

/// Polynomial in `z` (the image of `v`) with rational coefficients, highest first.
impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.residue().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coeff = if abs.is_integer() { abs.numer().to_string() } else { format!("({}/{})", abs.numer(), abs.denom()) };
            match k {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{coeff}")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicScalar[n={}]({self})", self.modulus.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(15), ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
    }

    #[test]
    fn powers_wrap_at_order() {
        let m = modulus(12);
        let x = CyclotomicScalar::from_laurent(&m, &LaurentPoly::v_pow(1));
        let mut acc = CyclotomicScalar::one(&m);
        for _ in 0..12 {
            acc = acc.mul_unchecked(&x);
        }
        assert!(acc.is_one());
        let x_inv = CyclotomicScalar::from_laurent(&m, &LaurentPoly::v_pow(-1));
        assert!(x.mul_unchecked(&x_inv).is_one());
        assert_eq!(x.inv().unwrap(), x_inv);
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = CyclotomicScalar::one(&modulus(5));
        let b = CyclotomicScalar::one(&modulus(7));
        assert_eq!(a.try_add(&b), Err(Error::OrderMismatch(5, 7)));
    }

    #[test]
    fn inverse_of_nonunit_integer_combination() {
        let m = modulus(20);
        let a = CyclotomicScalar::from_laurent(&m, &LaurentPoly::from_terms([(0, 3), (3, -2), (5, 1)]));
        let inv = a.inv().unwrap();
        assert!(a.mul_unchecked(&inv).is_one());
    }
}
