//! Quantum integers, factorials and binomials as Laurent polynomials in `v`.

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// `[m] = (q^m - q^-m) / (q - q^-1)`, expanded as `q^(m-1) + q^(m-3) + ... + q^(1-m)`.
pub fn quantum_integer(m: i64) -> LaurentPoly {
    quantum_integer_at(m, 1, 2)
}

/// `[m]_x` for the unit base `x = sign * v^exp`.
///
/// Used for `[m]_{q^d}` (`sign = 1`, `exp = 2d`) and for the signed bases
/// `(-1)^(d+1) q^d` that appear in the sub-top Gram determinant.
pub fn quantum_integer_at(m: i64, sign: i64, exp: i64) -> LaurentPoly {
    assert!(sign == 1 || sign == -1);
    if m == 0 {
        return LaurentPoly::zero();
    }
    if m < 0 {
        return -quantum_integer_at(-m, sign, exp);
    }
    // x^k has sign^k; k = m-1-2j has parity of m-1.
    let s = if (m - 1) % 2 == 0 { 1 } else { sign };
    LaurentPoly::from_terms((0..m).map(|j| ((m - 1 - 2 * j) * exp, s)))
}

/// `[m]! = [1][2]...[m]`.
pub fn quantum_factorial(m: usize) -> LaurentPoly {
    (1..=m as i64).fold(LaurentPoly::one(), |acc, i| &acc * &quantum_integer(i))
}

/// The symmetric quantum binomial `[m]! / ([j]! [m-j]!)`.
pub fn quantum_binomial(m: usize, j: usize) -> Result<LaurentPoly> {
    if j > m {
        return Err(Error::OutOfRange(format!("quantum binomial needs 0 <= j <= m, got m = {m}, j = {j}")));
    }
    // Pascal rule: [n, k] = q^(n-k) [n-1, k-1] + q^(-k) [n-1, k]; avoids division.
    let mut row = vec![LaurentPoly::one()];
    for n in 1..=m {
        let mut next = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let left = if k >= 1 { row[k - 1].shift(2 * (n - k) as i64) } else { LaurentPoly::zero() };
            let right = if k < n { row[k].shift(-2 * k as i64) } else { LaurentPoly::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(j))
}

/// `P_d(q) = q^(d(d-1)/2) [d]!`, the normaliser of the Hecke symmetrizer.
pub fn gauss_prefactor(d: usize) -> LaurentPoly {
    quantum_factorial(d).shift((d * (d.saturating_sub(1))) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (2 * e, c)))
    }

    #[test]
    fn small_quantum_integers() {
        assert_eq!(quantum_integer(0), LaurentPoly::zero());
        assert_eq!(quantum_integer(1), LaurentPoly::one());
        assert_eq!(quantum_integer(2), q(&[(1, 1), (-1, 1)]));
        assert_eq!(quantum_integer(-3), -quantum_integer(3));
    }

    #[test]
    fn quantum_integer_times_denominator_telescopes() {
        // [m] (q - q^-1) = q^m - q^-m
        let qm = q(&[(1, 1), (-1, -1)]);
        for m in -6..=6 {
            assert_eq!(&quantum_integer(m) * &qm, q(&[(m, 1), (-m, -1)]), "m = {m}");
        }
    }

    #[test]
    fn bar_invariance() {
        for m in -5..=8 {
            assert_eq!(quantum_integer(m).bar(), quantum_integer(m));
        }
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(quantum_factorial(0), LaurentPoly::one());
        // [3]! = (q + q^-1)(q^2 + 1 + q^-2), expanded by hand.
        assert_eq!(quantum_factorial(3), q(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]));
        assert_eq!(quantum_binomial(2, 1).unwrap(), quantum_integer(2));
        assert!(quantum_binomial(2, 3).is_err());
        for m in 0..8 {
            for j in 0..=m {
                let b = quantum_binomial(m, j).unwrap();
                let lhs = &b * &(&quantum_factorial(j) * &quantum_factorial(m - j));
                assert_eq!(lhs, quantum_factorial(m), "binom({m},{j})");
            }
        }
    }

    #[test]
    fn prefactor() {
        assert_eq!(gauss_prefactor(1), LaurentPoly::one());
        assert_eq!(gauss_prefactor(2), q(&[(2, 1), (0, 1)]));
        assert_eq!(gauss_prefactor(3), &quantum_factorial(3) * &q(&[(3, 1)]));
    }

    #[test]
    fn signed_base() {
        // [3]_{-x} = [3]_x, [2]_{-x} = -[2]_x
        assert_eq!(quantum_integer_at(3, -1, 4), quantum_integer_at(3, 1, 4));
        assert_eq!(quantum_integer_at(2, -1, 4), -quantum_integer_at(2, 1, 4));
    }
}
