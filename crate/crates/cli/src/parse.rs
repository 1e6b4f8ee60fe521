//! Recursive-descent parser for class expressions.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' UINT)?
//! base   := 't' INDEX | 'e' INDEX | 'h' | INTEGER | '(' expr ')'
//! ```
//!
//! `h` expands to `t1 + ... + td`, `eK` to the K-th elementary symmetric
//! polynomial (`e0` is 1), and integers are arbitrary precision. A unicode
//! minus sign is accepted alongside `-`.

use std::fmt;

use num_bigint::BigInt;

use gysin_core::gysin::InputClass;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}", self.message, self.offset)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_class_expression(src: &str, num_vars: usize) -> Result<InputClass, ParseError> {
    let mut p = Parser {
        bytes: src.as_bytes(),
        pos: 0,
        num_vars,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.error("syntax error: unexpected trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    num_vars: usize,
}

const UNICODE_MINUS: &[u8] = "\u{2212}".as_bytes();

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat_minus(&mut self) -> bool {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return true;
        }
        if self.bytes[self.pos..].starts_with(UNICODE_MINUS) {
            self.pos += UNICODE_MINUS.len();
            return true;
        }
        false
    }

    fn expr(&mut self) -> Result<InputClass, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'+') {
                self.pos += 1;
                acc = acc.add(&self.term()?);
            } else if self.eat_minus() {
                acc = acc.sub(&self.term()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<InputClass, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                acc = acc.mul(&self.factor()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<InputClass, ParseError> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<InputClass, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                let start = self.pos;
                let j = self.index('t')?;
                if j == 0 || j > self.num_vars {
                    return Err(ParseError {
                        offset: start - 1,
                        message: format!("unknown variable t{j}"),
                    });
                }
                Ok(InputClass::variable(self.num_vars, j - 1).expect("index checked"))
            }
            Some(b'e') => {
                self.pos += 1;
                let k = self.index('e')?;
                Ok(elementary(self.num_vars, k))
            }
            Some(b'h') => {
                self.pos += 1;
                let mut sum = InputClass::zero(self.num_vars);
                for v in 0..self.num_vars {
                    sum = sum.add(&InputClass::variable(self.num_vars, v).expect("v < d"));
                }
                Ok(sum)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
                let value: BigInt = digits.parse().expect("digits parse as BigInt");
                Ok(InputClass::constant(self.num_vars, value))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("syntax error: expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error(
                "syntax error: expected 't', 'e', 'h', a number or '('",
            )),
        }
    }

    fn index(&mut self, after: char) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("syntax error: expected an index after '{after}'")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| ParseError {
                offset: start,
                message: "index too large".to_string(),
            })
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("syntax error: expected an exponent"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| ParseError {
                offset: start,
                message: "exponent too large".to_string(),
            })
    }
}

/// The k-th elementary symmetric polynomial in `num_vars` variables;
/// `e_0 = 1` and `e_k = 0` for `k > num_vars`.
fn elementary(num_vars: usize, k: usize) -> InputClass {
    if k == 0 {
        return InputClass::one(num_vars);
    }
    if k > num_vars {
        return InputClass::zero(num_vars);
    }
    let mut e = vec![InputClass::zero(num_vars); k + 1];
    e[0] = InputClass::one(num_vars);
    for v in 0..num_vars {
        let x = InputClass::variable(num_vars, v).expect("v < d");
        for j in (1..=k.min(v + 1)).rev() {
            e[j] = e[j].add(&e[j - 1].mul(&x));
        }
    }
    e.pop().expect("k+1 entries")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(d: usize, j: usize) -> InputClass {
        InputClass::variable(d, j).unwrap()
    }

    #[test]
    fn h_cubed() {
        let got = parse_class_expression("h^3", 2).unwrap();
        let want = var(2, 0).add(&var(2, 1)).pow(3);
        assert_eq!(got, want);
    }

    #[test]
    fn elementary_and_monomials() {
        let got = parse_class_expression("e2^2 - t1*t2^3", 2).unwrap();
        let e2 = var(2, 0).mul(&var(2, 1));
        let want = e2.pow(2).sub(&var(2, 0).mul(&var(2, 1).pow(3)));
        assert_eq!(got, want);
        assert_eq!(got.canonical_text(), "t1^2*t2^2 - t1*t2^3");
    }

    #[test]
    fn unknown_variable() {
        let err = parse_class_expression("t3", 2).unwrap_err();
        assert_eq!(err.message, "unknown variable t3");
        assert_eq!(err.offset, 0);
        let err = parse_class_expression("t0", 2).unwrap_err();
        assert_eq!(err.message, "unknown variable t0");
    }

    #[test]
    fn e0_is_one_and_big_e_is_zero() {
        assert_eq!(parse_class_expression("e0", 2).unwrap(), InputClass::one(2));
        assert_eq!(
            parse_class_expression("e3", 2).unwrap(),
            InputClass::zero(2)
        );
        assert_eq!(
            parse_class_expression("e2", 3).unwrap(),
            var(3, 0).mul(&var(3, 1))
                .add(&var(3, 0).mul(&var(3, 2)))
                .add(&var(3, 1).mul(&var(3, 2)))
        );
    }

    #[test]
    fn syntax_errors_carry_byte_offsets() {
        let err = parse_class_expression("t1 + ", 2).unwrap_err();
        assert_eq!(err.offset, 5);
        assert!(err.message.starts_with("syntax error"));

        let err = parse_class_expression("(t1", 2).unwrap_err();
        assert_eq!(err.offset, 3);
        assert_eq!(err.message, "syntax error: expected ')'");

        let err = parse_class_expression("t1 t2", 2).unwrap_err();
        assert_eq!(err.message, "syntax error: unexpected trailing input");
        assert_eq!(err.offset, 3);

        let err = parse_class_expression("2^", 1).unwrap_err();
        assert_eq!(err.message, "syntax error: expected an exponent");
    }

    #[test]
    fn unicode_minus_is_accepted() {
        let a = parse_class_expression("t1 \u{2212} t2", 2).unwrap();
        let b = parse_class_expression("t1 - t2", 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn big_integers_parse_exactly() {
        let got = parse_class_expression("123456789012345678901234567890*t1", 1).unwrap();
        let c: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(got, InputClass::variable(1, 0).unwrap().scale(&c));
    }

    #[test]
    fn leading_zero_minus_round_trip() {
        let f = parse_class_expression("0 - 3*t1 + t2", 2).unwrap();
        assert_eq!(parse_class_expression(&f.canonical_text(), 2).unwrap(), f);
    }
}
