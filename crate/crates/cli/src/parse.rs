//! Polynomial expressions in `x` and `y` with rational coefficients.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nonneg-int)?
//! base     := rational | 'x' | 'y' | '(' expr ')'
//! rational := int ('/' posint)?
//! ```
//!
//! Whitespace is insignificant and multiplication must be written out.

use num_bigint::BigInt;
use num_traits::Zero;
use plansub::{BPoly, Rat};

/// A parse failure at a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Var(c) => format!("variable {c}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn err(column: usize, message: impl Into<String>) -> ParseError {
    ParseError { column, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
                continue;
            }
            'x' | 'y' => Tok::Var(c),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_alphabetic() => return Err(err(col, format!("unknown variable '{c}'; only x and y are allowed"))),
            _ => return Err(err(col, format!("unexpected character '{c}'"))),
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(err(self.column(), format!("expected {}, found {}", want.describe(), self.peek().describe())))
        }
    }

    fn expr(&mut self) -> Result<BPoly, ParseError> {
        let negate = *self.peek() == Tok::Minus;
        if negate {
            self.bump();
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BPoly, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BPoly, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.column();
        match self.bump() {
            Tok::Int(n) => {
                let e = u32::try_from(&n).map_err(|_| err(col, format!("exponent {n} is too large")))?;
                Ok(base.pow(e))
            }
            other => Err(err(col, format!("exponent must be a nonnegative integer, found {}", other.describe()))),
        }
    }

    fn base(&mut self) -> Result<BPoly, ParseError> {
        let col = self.column();
        let base = match self.bump() {
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dcol = self.column();
                    match self.bump() {
                        Tok::Int(d) if !d.is_zero() => BPoly::constant(Rat::new(n, d)),
                        Tok::Int(_) => return Err(err(dcol, "zero denominator")),
                        other => {
                            return Err(err(dcol, format!("expected a positive denominator, found {}", other.describe())))
                        }
                    }
                } else {
                    BPoly::constant(Rat::from_integer(n))
                }
            }
            Tok::Var('x') => BPoly::x(),
            Tok::Var(_) => BPoly::y(),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                inner
            }
            other => return Err(err(col, format!("expected a number, x, y or '(', found {}", other.describe()))),
        };
        if matches!(self.peek(), Tok::Int(_) | Tok::Var(_) | Tok::LParen) {
            return Err(err(self.column(), "implicit multiplication is not allowed; write '*'"));
        }
        Ok(base)
    }
}

/// Parses a polynomial in `x` and `y`.
pub fn parse_poly(text: &str) -> Result<BPoly, ParseError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        t => Err(err(p.column(), format!("unexpected {}", t.describe()))),
    }
}

/// Parses `n` or `n/d` with an optional sign.
pub fn parse_rat(text: &str) -> Result<Rat, ParseError> {
    let t = text.trim();
    let start = text.len() - text.trim_start().len();
    let bad = || err(start + 1, format!("'{t}' is not a rational number of the form n or n/d"));
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (n, d) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let digits = |s: &str| !s.is_empty() && s.chars().all(|c| c.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return Err(bad());
    }
    let (n, d): (BigInt, BigInt) = (n.parse().map_err(|_| bad())?, d.parse().map_err(|_| bad())?);
    if d.is_zero() {
        return Err(err(start + 1, "zero denominator"));
    }
    let r = Rat::new(n, d);
    Ok(if neg { -r } else { r })
}
