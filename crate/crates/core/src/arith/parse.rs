//! Parser for printed scalars: `-1/(q+q^-1)`, `(q^2+1)/(q^3)`, `2v^-1-v^3`.
//!
//! Accepts integers, the variables `v` and `q = v^2` (and `z` for a
//! specialized `v`), `+ - * /`, implicit multiplication, integer powers and
//! parentheses.

use num_bigint::BigInt;

use super::field::{Cyclotomic, Field};
use super::cyclotomic::CyclotomicScalar;
use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

pub fn parse_rational_function(s: &str) -> Result<RationalFunction> {
    Parser::new(s, &[('v', 1), ('q', 2)]).run()
}

/// Parses the `z` notation used when printing cyclotomic scalars.
pub fn parse_cyclotomic(s: &str, field: &Cyclotomic) -> Result<CyclotomicScalar> {
    let x = Parser::new(s, &[('z', 1), ('v', 1), ('q', 2)]).run()?;
    field.from_rational_function(&x)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    vars: &'a [(char, i64)],
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &'a [(char, i64)]) -> Self {
        let chars = src.chars().filter(|c| !c.is_whitespace()).collect();
        Self { src, chars, pos: 0, vars }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn run(mut self) -> Result<RationalFunction> {
        if self.chars.is_empty() {
            return Err(self.err("empty scalar"));
        }
        let x = self.expr()?;
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected character"));
        }
        Ok(x)
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    let inv = d.inv().ok_or_else(|| self.err("division by zero"))?;
                    acc = &acc * &inv;
                }
                Some(c) if c == '(' || c.is_ascii_digit() || self.var_exp(c).is_some() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = if self.eat('(') {
            let e = self.signed_int()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            e
        } else {
            self.signed_int()?
        };
        let e = i32::try_from(e).map_err(|_| self.err("exponent too large"))?;
        base.pow(e).ok_or_else(|| self.err("zero to a negative power"))
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let x = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(x)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(RationalFunction::from_laurent(LaurentPoly::constant(n)))
            }
            Some(c) => match self.var_exp(c) {
                Some(e) => {
                    self.pos += 1;
                    Ok(RationalFunction::from_laurent(LaurentPoly::v_pow(e)))
                }
                None => Err(self.err("unexpected character")),
            },
            None => Err(self.err("unexpected end")),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected exponent"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let n: i64 = digits.parse().map_err(|_| self.err("bad exponent"))?;
        Ok(if neg { -n } else { n })
    }

    fn var_exp(&self, c: char) -> Option<i64> {
        self.vars.iter().find(|(v, _)| *v == c).map(|&(_, e)| e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quantum::quantum_integer;

    #[test]
    fn parses_printed_forms() {
        let two = quantum_integer(2);
        assert_eq!(
            parse_rational_function("-1/(q+q^-1)").unwrap(),
            RationalFunction::new(LaurentPoly::constant(-1), two.clone()).unwrap()
        );
        assert_eq!(parse_rational_function("v^2").unwrap(), parse_rational_function("q").unwrap());
        assert_eq!(
            parse_rational_function("2v^-1 - v^3").unwrap(),
            RationalFunction::from_laurent(LaurentPoly::from_terms([(-1, 2), (3, -1)]))
        );
        assert_eq!(parse_rational_function("(q^2+1)/(q^3)").unwrap().to_string(), "q^-1+q^-3");
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "q^", "1/0", "(q", "x", "q^-"] {
            assert!(parse_rational_function(s).is_err(), "{s:?}");
        }
    }

    #[test]
    fn cyclotomic_round_trip() {
        let f = Cyclotomic::new(12);
        let x = f.from_rational_function(&parse_rational_function("(q^3+2)/(q+5)").unwrap()).unwrap();
        assert_eq!(parse_cyclotomic(&f.render(&x), &f).unwrap(), x);
    }
}
