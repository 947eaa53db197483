//! Textual literals for scalars, points and lines.
//!
//! ```text
//! rat      := int | int "/" posint
//! qs5      := rat | rat ("+"|"-") rat "*s5" | rat "*s5"
//! vertical := "vertical:" ("A".."E")
//! harmonic := "harmonic:h0=" qs5 ",h1=" qs5
//! point    := "point:" ("A".."E") "," qs5
//! qpoint   := "qpoint:x=" rat ",y=" rat
//! qline    := "qline:a=" rat ",b=" rat ",c=" rat
//! gf5      := "gf5:" digit "," digit
//! gf5line  := "gf5line:" digit "," digit "," digit
//! ```

use std::fmt;
use std::str::FromStr;

use crate::pentaline::Vertex;
use crate::qfield::QuadSqrt5;
use crate::scalar::RationalScalar;
use crate::{PrismLine, QLine};

/// A syntax error with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position} (near {token:?})")]
pub struct ParseError {
    pub message: String,
    pub position: usize,
    pub token: String,
}

pub struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        let token: String = self.rest().chars().take(12).collect();
        ParseError {
            message: message.into(),
            position: self.pos,
            token,
        }
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected {s:?}")))
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        Ok(&self.text[start..self.pos])
    }

    /// A non-negative decimal integer that fits `u64`.
    pub fn small_int(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| ParseError {
            message: "integer too large".into(),
            position: start,
            token: d.into(),
        })
    }

    fn rational_token<R: FromStr>(&mut self, signed: bool) -> Result<R, ParseError> {
        let start = self.pos;
        let neg = signed && self.eat("-");
        let num = self.digits()?;
        let mut token = String::new();
        if neg {
            token.push('-');
        }
        token.push_str(num);
        if self.eat("/") {
            let den_pos = self.pos;
            let den = self.digits()?;
            if den.bytes().all(|b| b == b'0') {
                return Err(ParseError {
                    message: "denominator must be positive".into(),
                    position: den_pos,
                    token: den.into(),
                });
            }
            token.push('/');
            token.push_str(den);
        }
        token.parse().map_err(|_| ParseError {
            message: "invalid rational".into(),
            position: start,
            token,
        })
    }

    /// `int | int "/" posint`, optionally negative.
    pub fn rational<R: FromStr>(&mut self) -> Result<R, ParseError> {
        self.rational_token(true)
    }

    pub fn qs5<R: RationalScalar>(&mut self) -> Result<QuadSqrt5<R>, ParseError> {
        let first: R = self.rational()?;
        if self.eat("*s5") {
            return Ok(QuadSqrt5::new(R::zero(), first));
        }
        let negative = match self.peek() {
            Some('+') => false,
            Some('-') => true,
            _ => return Ok(QuadSqrt5::rational(first)),
        };
        self.pos += 1;
        let second: R = self.rational_token(false)?;
        self.expect("*s5")?;
        let b = if negative { -second } else { second };
        Ok(QuadSqrt5::new(first, b))
    }

    pub fn vertex(&mut self) -> Result<Vertex, ParseError> {
        match self.peek().and_then(Vertex::from_letter) {
            Some(v) => {
                self.pos += 1;
                Ok(v)
            }
            None => Err(self.error("expected a vertex letter A..E")),
        }
    }
}

/// Runs `f` on the whole of `text`, rejecting trailing input.
pub fn parse_complete<'a, T>(
    text: &'a str,
    f: impl FnOnce(&mut Cursor<'a>) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut cursor = Cursor::new(text);
    let value = f(&mut cursor)?;
    if !cursor.at_end() {
        return Err(cursor.error("unexpected trailing input"));
    }
    Ok(value)
}

/// A line literal of either exact infinite model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyLine {
    Prism(PrismLine),
    Punctured(QLine),
}

impl fmt::Display for AnyLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyLine::Prism(l) => l.fmt(f),
            AnyLine::Punctured(l) => l.fmt(f),
        }
    }
}

pub fn parse_line_literal(text: &str) -> Result<AnyLine, ParseError> {
    if text.starts_with("qline:") {
        text.parse().map(AnyLine::Punctured)
    } else if text.starts_with("vertical:") || text.starts_with("harmonic:") {
        text.parse().map(AnyLine::Prism)
    } else {
        Err(Cursor::new(text).error("expected vertical:, harmonic: or qline:"))
    }
}
