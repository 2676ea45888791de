use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{poly_div_exact, poly_gcd, LaurentPoly};

/// Element of `Q(v)`, kept as a reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and positive leading coefficient, and numerator and
/// denominator are coprime in `Z[v]`. Equal values therefore compare equal
/// structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    /// Reduces `num / den`; returns `None` if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.low_exp();
        let mut num_low = num.low_exp() - shift;
        let mut n = num.dense().to_vec();
        let mut d = den.dense().to_vec();
        if d.len() > 1 || !d[0].is_one() {
            let g = poly_gcd(&n, &d);
            if g.len() > 1 || !g[0].is_one() {
                n = poly_div_exact(&n, &g).expect("gcd divides numerator");
                d = poly_div_exact(&d, &g).expect("gcd divides denominator");
            }
        }
        if d.last().unwrap().is_negative() {
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c = -std::mem::take(c);
            }
        }
        // n may have gained leading zeros only if it was zero; it was not.
        let nl = n.iter().take_while(|c| c.is_zero()).count();
        num_low += nl as i64;
        Self { num: LaurentPoly::from_dense(num_low, n), den: LaurentPoly::from_dense(0, d) }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(p)` when the value lies in `Z[v, v^-1]`.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i32) -> Option<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        Some(Self { num: base.num.pow(n.unsigned_abs()), den: base.den.pow(n.unsigned_abs()) })
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self::reduce(self.num.bar(), self.den.bar())
    }

    /// Display pair with the denominator centred on exponent zero when its
    /// span is even, e.g. `-1 / (q+q^-1)` rather than `-q / (q^2+1)`.
    pub(crate) fn balanced_parts(&self) -> (LaurentPoly, LaurentPoly) {
        let span = self.den.high_exp() - self.den.low_exp();
        if span % 2 == 0 && span > 0 {
            let s = -span / 2;
            (self.num.shift(s), self.den.shift(s))
        } else {
            (self.num.clone(), self.den.clone())
        }
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction::from_laurent(&self.num + &rhs.num);
            }
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduce(num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_laurent(&self.num * &rhs.num);
        }
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (num, den) = self.balanced_parts();
        if num.num_terms() > 1 {
            write!(f, "({num})/({den})")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// Raw `(exponent, coefficient)` pairs of a Laurent polynomial, lowest first.
pub fn raw_terms(p: &LaurentPoly) -> Vec<(i64, BigInt)> {
    p.terms().map(|(e, c)| (e, c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quantum::quantum_integer;

    #[test]
    fn canonical_form_is_unique() {
        let two = quantum_integer(2);
        let a = RationalFunction::new(LaurentPoly::v_pow(2), &two * &LaurentPoly::v_pow(2)).unwrap();
        let b = RationalFunction::new(LaurentPoly::constant(-3), two.scale(&BigInt::from(-3))).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.denominator().low_exp(), 0);
        assert!(a.denominator().leading_coeff().unwrap().is_positive());
        assert_eq!(a.to_string(), "1/(q+q^-1)");
    }

    #[test]
    fn field_inverse() {
        let x = RationalFunction::new(quantum_integer(3), quantum_integer(2)).unwrap();
        assert!((&x * &x.inv().unwrap()).is_one());
        assert!(RationalFunction::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        let x = RationalFunction::new(LaurentPoly::constant(-1), quantum_integer(2)).unwrap();
        assert_eq!(x.to_string(), "-1/(q+q^-1)");
        let y = RationalFunction::new(LaurentPoly::from_terms([(4, 1), (0, 1)]), LaurentPoly::v_pow(6)).unwrap();
        assert_eq!(y.to_string(), "q^-1+q^-3");
        let z = RationalFunction::new(quantum_integer(2), quantum_integer(3)).unwrap();
        assert_eq!(z.to_string(), "(q+q^-1)/(q^2+1+q^-2)");
    }
}
