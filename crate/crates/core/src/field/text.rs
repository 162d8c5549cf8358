//! Bracket grammar for field elements.
//!
//! ```text
//! elem := int | '[' elem (',' elem)* ']'
//! ```
//!
//! A list at a level of degree `d` must have exactly `d` entries, lowest
//! degree first, each read at the level below. A bare integer at any level
//! denotes the image of that integer in the prime field.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElemNode {
    Int(i64),
    List(Vec<ElemNode>),
}

impl ElemNode {
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let node = p.node()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::Parse(format!("trailing input in element {s:?}")));
        }
        Ok(node)
    }
}

/// Splits `s` at top-level occurrences of `sep`, ignoring separators nested
/// inside brackets.
pub fn split_top_level(s: &str, sep: char) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced ']' in {s:?}")));
                }
            }
            c if c == sep && depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '[' in {s:?}")));
    }
    parts.push(s[start..].trim());
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("empty entry in {s:?}")));
    }
    Ok(parts)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn node(&mut self) -> Result<ElemNode> {
        self.skip_ws();
        match self.s.get(self.pos) {
            Some(b'[') => {
                self.pos += 1;
                let mut items = vec![self.node()?];
                loop {
                    self.skip_ws();
                    match self.s.get(self.pos) {
                        Some(b',') => {
                            self.pos += 1;
                            items.push(self.node()?);
                        }
                        Some(b']') => {
                            self.pos += 1;
                            return Ok(ElemNode::List(items));
                        }
                        _ => return Err(self.err("expected ',' or ']'")),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() || *c == b'-' => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                text.parse()
                    .map(ElemNode::Int)
                    .map_err(|_| self.err("bad integer"))
            }
            _ => Err(self.err("expected integer or '['")),
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }
}
