//! Recursive-descent parser for presentation text.
//!
//! ```text
//! presentation := '<' gen-list '|' rel-list '>'
//! gen-list     := name (',' name)*        name := [a-z][a-z0-9]*
//! rel-list     := rel (',' rel)*          rel  := word | word '=' word
//! word         := term ('*' term)*
//! term         := (name | '(' word ')') ('^' signed-int)?
//! ```
//!
//! Whitespace is insignificant. A relation `u = v` is stored as the relator
//! `u·v⁻¹`; a bare word `w` means `w = 1`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Presentation, Word};
use crate::{Error, Result};

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        gens: Vec::new(),
    };
    p.presentation()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: Vec<String>,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&alloc::format!("expected `{}`", c as char))
        }
    }

    fn name(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_lowercase() => self.pos += 1,
            _ => return self.err("expected a generator name"),
        }
        while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_lowercase() || c.is_ascii_digit())
        {
            self.pos += 1;
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok((s.to_string(), start))
    }

    fn signed_int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = match self.src.get(self.pos) {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let digits = self.pos;
        while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if digits == self.pos {
            self.pos = start;
            return self.err("expected an integer exponent");
        }
        let s = core::str::from_utf8(&self.src[digits..self.pos]).unwrap();
        let v: i64 = match s.parse() {
            Ok(v) if v <= 1_000_000 => v,
            _ => {
                self.pos = digits;
                return self.err("exponent out of range");
            }
        };
        Ok(if neg { -v } else { v })
    }

    fn presentation(&mut self) -> Result<Presentation> {
        self.expect(b'<')?;
        loop {
            let (n, at) = self.name()?;
            if self.gens.contains(&n) {
                self.pos = at;
                return self.err(&alloc::format!("generator `{n}` declared twice"));
            }
            self.gens.push(n);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'|') => break,
                _ => return self.err("expected `,` or `|`"),
            }
        }
        self.expect(b'|')?;
        let mut relators = Vec::new();
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            let lhs = self.word()?;
            let rel = if self.peek() == Some(b'=') {
                self.pos += 1;
                let rhs = self.word()?;
                let mut r = lhs;
                r.append(&rhs.inverse());
                r
            } else {
                lhs
            };
            if rel.is_empty() {
                self.pos = at;
                return self.err("relation reduces to the empty word");
            }
            relators.push(rel);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'>') => break,
                _ => return self.err("expected `,` or `>`"),
            }
        }
        self.expect(b'>')?;
        if self.peek().is_some() {
            return self.err("trailing input after `>`");
        }
        Presentation::new(core::mem::take(&mut self.gens), relators)
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let t = self.term()?;
            w.append(&t);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        let base = if self.peek() == Some(b'(') {
            self.pos += 1;
            let w = self.word()?;
            self.expect(b')')?;
            w
        } else {
            let (n, at) = self.name()?;
            let Some(g) = self.gens.iter().position(|x| *x == n) else {
                return Err(Error::UnknownGenerator { name: n, pos: at });
            };
            let mut w = Word::new();
            w.push(g, 1);
            w
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.signed_int()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }
}
