//! Compact text syntax for words and word sums.
//!
//! ```text
//! sum    := term (('+' | '-') term)*
//! term   := [coeff ['*']] word | coeff
//! coeff  := int ['/' int]  |  '(' int ['/' int] ')'
//! word   := ['P'] '(' [ints] ';' [ints] ')'
//! ```
//! Examples: `P(2,3;0,0)`, `2*P(3;1) - 1/12 P(3;0) + 1`, `-(1/12)(3;0) + (5;0)`.
//! The display form of a word sum parses back to the same sum.

use num_traits::One;

use super::{Letter, Word, WordSum};
use crate::error::{Error, Result};
use crate::exact_core::Rational;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        t.parse().or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn coeff(&mut self) -> Result<Rational> {
        let n = self.uint()?;
        let mut c = Rational::from_integer(n.into());
        if self.eat(b'/') {
            let at = self.pos;
            let d = self.uint()?;
            if d == 0 {
                self.pos = at;
                return self.err("zero denominator");
            }
            c /= Rational::from_integer(d.into());
        }
        Ok(c)
    }

    fn ints(&mut self, stop: u8) -> Result<Vec<u32>> {
        let mut v = Vec::new();
        if self.peek() == Some(stop) {
            return Ok(v);
        }
        loop {
            let at = self.pos;
            let x = self.uint()?;
            if x > u32::MAX as u64 {
                self.pos = at;
                return self.err("entry too large");
            }
            v.push(x as u32);
            if !self.eat(b',') {
                return Ok(v);
            }
        }
    }

    /// Whether the parenthesis at the cursor opens a word rather than a coefficient.
    fn at_word(&mut self) -> bool {
        match self.peek() {
            Some(b'P') => true,
            Some(b'(') => self.s[self.pos..]
                .iter()
                .take_while(|&&c| c != b')')
                .any(|&c| c == b';'),
            _ => false,
        }
    }

    fn word(&mut self) -> Result<Word> {
        self.eat(b'P');
        self.expect(b'(')?;
        let start = self.pos;
        let k = self.ints(b';')?;
        self.expect(b';')?;
        let d = self.ints(b')')?;
        self.expect(b')')?;
        if k.len() != d.len() {
            self.pos = start;
            return self.err("k and d rows differ in length");
        }
        if k.contains(&0) {
            self.pos = start;
            return self.err("k entries must be at least 1");
        }
        Ok(Word(
            k.into_iter().zip(d).map(|(k, d)| Letter { k, d }).collect(),
        ))
    }

    fn term(&mut self) -> Result<(Word, Rational)> {
        if self.at_word() {
            return Ok((self.word()?, Rational::one()));
        }
        let c = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let c = self.coeff()?;
                self.expect(b')')?;
                c
            }
            Some(c) if c.is_ascii_digit() => self.coeff()?,
            _ => return self.err("expected a term"),
        };
        self.eat(b'*');
        if self.at_word() {
            Ok((self.word()?, c))
        } else {
            Ok((Word::empty(), c))
        }
    }

    fn sum(&mut self) -> Result<WordSum> {
        let mut out = WordSum::zero();
        let mut sign = Rational::one();
        if self.eat(b'-') {
            sign = -sign;
        } else {
            self.eat(b'+');
        }
        loop {
            let (w, c) = self.term()?;
            out.add_term(w, c * &sign);
            if self.eat(b'+') {
                sign = Rational::one();
            } else if self.eat(b'-') {
                sign = -Rational::one();
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(out)
    }
}

/// Parses a single word such as `P(2,3;0,0)`.
pub fn parse_word(s: &str) -> Result<Word> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
    };
    let w = p.word()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(w)
}

/// Parses a rational combination of words such as `2*P(3;1) - 1/12 P(3;0)`.
pub fn parse_wordsum(s: &str) -> Result<WordSum> {
    Parser {
        s: s.as_bytes(),
        pos: 0,
    }
    .sum()
}
