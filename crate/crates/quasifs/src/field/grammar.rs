//! The coefficient-string grammar shared by bundle files and all CLI output.
//!
//! An element of Q(zeta_N) is written as a polynomial in the symbol `z` with
//! rational coefficients, for example `-1/2*z^3 + z + 2/7`. A bare rational
//! `p/q` or integer `p` is the constant polynomial. Whitespace is
//! insignificant. Exponents must be nonnegative integers strictly below the
//! conductor N; larger exponents are rejected so producers reduce powers of
//! `z` themselves.

use num_traits::{One, Signed, Zero};

use super::{format_rational, CycloField, FieldElement, FieldError, Rational};

/// Canonical rendering: terms from highest to lowest degree, unit
/// coefficients suppressed, signs folded into the separators.
pub fn format_element(elem: &FieldElement) -> String {
    let coeffs = elem.coeffs();
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs = c.abs();
        let unit = abs.is_one();
        match k {
            0 => out.push_str(&format_rational(&abs)),
            _ => {
                if !unit {
                    out.push_str(&format_rational(&abs));
                    out.push('*');
                }
                out.push('z');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Z,
    Int(String),
}

fn tokenize(input: &str) -> Result<Vec<Token>, FieldError> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            'z' => {
                chars.next();
                tokens.push(Token::Z);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Int(digits));
            }
            other => {
                return Err(FieldError::Parse(format!(
                    "unexpected character {other:?} in {input:?}"
                )))
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: &str) -> FieldError {
        FieldError::Parse(format!("{msg} in {:?}", self.input))
    }

    fn parse_integer(&mut self) -> Result<num_bigint::BigInt, FieldError> {
        match self.next() {
            Some(Token::Int(digits)) => digits
                .parse()
                .map_err(|_| FieldError::Parse(format!("bad integer in {:?}", self.input))),
            _ => Err(self.error("expected an integer")),
        }
    }

    /// term := coefficient [ '*' zfactor ] | zfactor
    /// Returns (coefficient, exponent).
    fn parse_term(&mut self) -> Result<(Rational, usize), FieldError> {
        match self.peek() {
            Some(Token::Z) => {
                let exp = self.parse_zfactor()?;
                Ok((Rational::one(), exp))
            }
            Some(Token::Int(_)) => {
                let numer = self.parse_integer()?;
                let mut coeff = Rational::from(numer);
                if let Some(Token::Slash) = self.peek() {
                    self.next();
                    let denom = self.parse_integer()?;
                    if denom.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    coeff = Rational::new(coeff.numer().clone(), denom);
                }
                if let Some(Token::Star) = self.peek() {
                    self.next();
                    let exp = self.parse_zfactor()?;
                    Ok((coeff, exp))
                } else {
                    Ok((coeff, 0))
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }

    /// zfactor := 'z' [ '^' integer ]
    fn parse_zfactor(&mut self) -> Result<usize, FieldError> {
        match self.next() {
            Some(Token::Z) => {}
            _ => return Err(self.error("expected z")),
        }
        if let Some(Token::Caret) = self.peek() {
            self.next();
            let exp = self.parse_integer()?;
            let exp: usize = exp
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            Ok(exp)
        } else {
            Ok(1)
        }
    }
}

/// Parses the grammar into an element of the given field, reducing powers of
/// `z` modulo Phi_N.
pub fn parse_element(field: &CycloField, input: &str) -> Result<FieldElement, FieldError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(FieldError::Parse("empty coefficient string".into()));
    }
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        input,
    };
    let n = field.conductor() as usize;
    let mut accum = vec![Rational::zero(); n];

    let mut negate = match parser.peek() {
        Some(Token::Minus) => {
            parser.next();
            true
        }
        Some(Token::Plus) => {
            parser.next();
            false
        }
        _ => false,
    };
    loop {
        let (coeff, exp) = parser.parse_term()?;
        if exp >= n {
            return Err(FieldError::Parse(format!(
                "exponent {exp} not reduced modulo conductor {n} in {input:?}"
            )));
        }
        if negate {
            accum[exp] -= coeff;
        } else {
            accum[exp] += coeff;
        }
        match parser.next() {
            None => break,
            Some(Token::Plus) => negate = false,
            Some(Token::Minus) => negate = true,
            Some(_) => return Err(parser.error("expected + or - between terms")),
        }
    }
    Ok(field.from_poly(&accum))
}
