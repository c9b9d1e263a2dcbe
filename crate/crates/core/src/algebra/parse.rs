use num_bigint::BigInt;

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..]
                .chars()
                .next()
                .map_or(0, char::len_utf8);
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn done(&self) -> bool {
        self.pos >= self.text.len()
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Parses `coeff*var^e*var...` after an optional sign has been consumed.
fn parse_term(cur: &mut Cursor<'_>, names: &[String]) -> Result<(BigInt, Monomial)> {
    let mut coeff = BigInt::from(1);
    let mut pairs = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        let col = cur.column();
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = cur.take_while(|c| c.is_ascii_digit());
                let n: BigInt = digits.parse().map_err(|_| err(col, "bad integer"))?;
                coeff *= n;
            }
            Some(c) if is_ident_start(c) => {
                let name = cur.take_while(is_ident);
                let var = names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| err(col, format!("undeclared variable `{name}`")))?;
                cur.skip_ws();
                let mut exp = 1u32;
                if cur.peek() == Some('^') {
                    cur.pos += 1;
                    cur.skip_ws();
                    let ecol = cur.column();
                    let digits = cur.take_while(|c| c.is_ascii_digit());
                    exp = digits
                        .parse()
                        .map_err(|_| err(ecol, "expected a non-negative exponent"))?;
                }
                pairs.push((var, exp));
            }
            _ => {
                return Err(err(
                    col,
                    if first {
                        "expected a coefficient or variable"
                    } else {
                        "expected a factor after `*`"
                    },
                ))
            }
        }
        first = false;
        cur.skip_ws();
        if cur.peek() == Some('*') {
            cur.pos += 1;
        } else {
            break;
        }
    }
    Ok((coeff, Monomial::from_pairs(pairs)))
}

/// Parses a monomial such as `x^2*y*z` (or `1`) over the given variable names.
pub fn parse_monomial(text: &str, names: &[String]) -> Result<Monomial> {
    let mut cur = Cursor { text, pos: 0 };
    let (c, m) = parse_term(&mut cur, names)?;
    cur.skip_ws();
    if !cur.done() {
        return Err(err(cur.column(), "unexpected trailing input"));
    }
    if c != BigInt::from(1) {
        return Err(err(1, "a monomial carries no coefficient"));
    }
    Ok(m)
}

/// Parses a polynomial such as `2*x^2*y - 3*z`.
pub fn parse_polynomial(text: &str, names: &[String]) -> Result<Polynomial> {
    let mut cur = Cursor { text, pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut sign = 1;
        match cur.peek() {
            Some('+') => {
                cur.pos += 1;
            }
            Some('-') => {
                cur.pos += 1;
                sign = -1;
            }
            None if first => return Err(err(cur.column(), "empty polynomial")),
            _ if !first => return Err(err(cur.column(), "expected `+` or `-`")),
            _ => {}
        }
        let (c, m) = parse_term(&mut cur, names)?;
        terms.push((c * sign, m));
        first = false;
        cur.skip_ws();
        if cur.done() {
            break;
        }
    }
    Ok(Polynomial::normalize(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn monomials() {
        let m = parse_monomial("x^2*y*z", &names()).unwrap();
        assert_eq!(m, Monomial::from_exponents(&[2, 1, 1]));
        assert_eq!(parse_monomial(" 1 ", &names()).unwrap(), Monomial::one());
        assert_eq!(
            parse_monomial("y * y", &names()).unwrap(),
            Monomial::from_exponents(&[0, 2])
        );
    }

    #[test]
    fn polynomials_round_trip() {
        let p = parse_polynomial("2*x^2*y - 3*z", &names()).unwrap();
        assert_eq!(p.format_with(&names()), "2*x^2*y - 3*z");
        let q = parse_polynomial("-x + x", &names()).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_monomial("x*w", &names()).unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 1,
                column: 3,
                message: "undeclared variable `w`".into()
            }
        );
        assert!(matches!(
            parse_polynomial("x +", &names()),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_monomial("2*x", &names()),
            Err(Error::Parse { .. })
        ));
    }
}
