//! Plain-text group files.
//!
//! ```text
//! # comments start with '#'
//! degree 4
//! gen (0 1 2 3)
//! gen [1,0,2,3]
//! ```
//!
//! A generator is either disjoint cycles or a bracketed image list. Points
//! inside a cycle or list may be separated by spaces or commas.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::GroupError;
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: invalid permutation: {message}")]
    InvalidPermutation { line: usize, message: String },
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        column,
        message: message.into(),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
    /// byte offset of `text` within its line
    base: usize,
}

impl Cursor<'_> {
    fn column(&self) -> usize {
        self.base + self.pos + 1
    }

    fn skip_ws(&mut self, commas: bool) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() || (commas && c == ',') {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn number(&mut self) -> Result<usize, FormatError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self
                .peek()
                .map_or("end of line".to_string(), |c| format!("{c:?}"));
            return Err(parse_err(
                self.line,
                self.column(),
                format!("expected a point, found {found}"),
            ));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| parse_err(self.line, self.base + start + 1, "point index too large"))
    }

    /// Points up to the closing delimiter, which is consumed.
    fn points_until(&mut self, close: char) -> Result<Vec<usize>, FormatError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws(true);
            match self.peek() {
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(out);
                }
                None => {
                    return Err(parse_err(
                        self.line,
                        self.column(),
                        format!("missing '{close}'"),
                    ))
                }
                _ => out.push(self.number()?),
            }
        }
    }
}

fn parse_generator(
    text: &str,
    line: usize,
    base: usize,
    degree: usize,
) -> Result<Permutation, FormatError> {
    let mut cur = Cursor {
        text,
        pos: 0,
        line,
        base,
    };
    cur.skip_ws(false);
    let invalid = |e: GroupError| FormatError::InvalidPermutation {
        line,
        message: match e {
            GroupError::InvalidPermutation(m) => m,
            other => other.to_string(),
        },
    };
    match cur.peek() {
        Some('[') => {
            cur.bump();
            let images = cur.points_until(']')?;
            cur.skip_ws(false);
            if cur.peek().is_some() {
                return Err(parse_err(
                    line,
                    cur.column(),
                    "trailing input after image list",
                ));
            }
            if images.len() != degree {
                return Err(FormatError::InvalidPermutation {
                    line,
                    message: format!("image list has {} entries, expected {degree}", images.len()),
                });
            }
            Permutation::from_images(images).map_err(invalid)
        }
        Some('(') => {
            let mut cycles = Vec::new();
            while let Some(c) = cur.peek() {
                if c != '(' {
                    return Err(parse_err(
                        line,
                        cur.column(),
                        format!("expected '(', found {c:?}"),
                    ));
                }
                cur.bump();
                let cycle = cur.points_until(')')?;
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
                cur.skip_ws(false);
            }
            Permutation::from_cycles(degree, &cycles).map_err(invalid)
        }
        Some(c) => Err(parse_err(
            line,
            cur.column(),
            format!("expected '(' or '[', found {c:?}"),
        )),
        None => Err(parse_err(line, cur.column(), "missing generator")),
    }
}

/// Parses a group file.
pub fn parse_group(text: &str) -> Result<PermGroup, FormatError> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = trimmed
            .split_once(char::is_whitespace)
            .unwrap_or((trimmed.trim_end(), ""));
        let rest_base = indent + keyword.len() + 1;
        match keyword {
            "degree" => {
                if degree.is_some() {
                    return Err(parse_err(line, indent + 1, "duplicate degree line"));
                }
                let mut cur = Cursor {
                    text: rest,
                    pos: 0,
                    line,
                    base: rest_base,
                };
                cur.skip_ws(false);
                let n = cur.number()?;
                cur.skip_ws(false);
                if cur.peek().is_some() {
                    return Err(parse_err(line, cur.column(), "trailing input after degree"));
                }
                degree = Some(n);
            }
            "gen" => {
                let n = degree
                    .ok_or_else(|| parse_err(line, indent + 1, "generator before degree line"))?;
                gens.push(parse_generator(rest, line, rest_base, n)?);
            }
            other => {
                return Err(parse_err(
                    line,
                    indent + 1,
                    format!("unknown keyword {other:?}, expected 'degree' or 'gen'"),
                ))
            }
        }
    }
    let degree = degree.ok_or_else(|| parse_err(last_line.max(1), 1, "missing degree line"))?;
    PermGroup::new(degree, gens).map_err(|e| FormatError::InvalidPermutation {
        line: 0,
        message: e.to_string(),
    })
}

/// Writes a group file with generators in cycle notation.
pub fn serialize_group(group: &PermGroup) -> String {
    let mut out = String::new();
    writeln!(out, "degree {}", group.degree()).unwrap();
    for g in group.generators() {
        writeln!(out, "gen {g}").unwrap();
    }
    out
}
