use super::poly::LaurentPoly;
use super::{AlgebraError, RationalFn, VarId};
use num_bigint::BigInt;

/// Parse an expression in the grammar
///
/// ```text
/// expr        := rational
/// rational    := sum ["/" sum]
/// sum         := product (("+"|"-") product)*
/// product     := signed_atom ("*" signed_atom)*
/// signed_atom := ["-"] atom
/// atom        := integer | var ["^" integer] | "(" expr ")"
/// var         := "T" nat | letter+
/// ```
///
/// Whitespace is insignificant; the integer after `^` may be negative.
pub fn parse_expr(text: &str) -> Result<RationalFn, AlgebraError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let v = p.rational()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().map_or(false, |c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn rational(&mut self) -> Result<RationalFn, AlgebraError> {
        let a = self.sum()?;
        if self.eat('/') {
            let start = self.pos;
            let b = self.sum()?;
            return a.div(&b).map_err(|_| AlgebraError::Syntax {
                pos: start,
                msg: "division by zero".to_string(),
            });
        }
        Ok(a)
    }

    fn sum(&mut self) -> Result<RationalFn, AlgebraError> {
        let mut acc = self.product()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    acc = &acc + &rhs;
                }
                Some('-') => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<RationalFn, AlgebraError> {
        let mut acc = self.signed_atom()?;
        while self.eat('*') {
            let rhs = self.signed_atom()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn signed_atom(&mut self) -> Result<RationalFn, AlgebraError> {
        if self.eat('-') {
            let a = self.atom()?;
            Ok(-&a)
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<RationalFn, AlgebraError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.rational()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.nat()?;
                Ok(RationalFn::from_poly(LaurentPoly::constant_big(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().map_or(false, |c| c.is_ascii_alphabetic()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let var = if name == "T" && self.peek().map_or(false, |c| c.is_ascii_digit()) {
                    let idx = self.nat()?;
                    let idx: crate::Label = idx
                        .try_into()
                        .map_err(|_| self.err("strand index out of range"))?;
                    VarId::Strand(idx)
                } else {
                    VarId::Symbol(name)
                };
                let exp = if self.eat('^') { self.integer()? } else { 1 };
                Ok(RationalFn::from_poly(LaurentPoly::monomial(var, exp)))
            }
            _ => Err(self.err("expected integer, variable, or '('")),
        }
    }

    fn nat(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse as BigInt"))
    }

    fn integer(&mut self) -> Result<i64, AlgebraError> {
        self.skip_ws();
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let n = self.nat()?;
        let n: i64 = n.try_into().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -n } else { n })
    }
}
