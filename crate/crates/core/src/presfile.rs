//! The plain-text presentation format.
//!
//! ```text
//! # the (2,3,6) triangle group
//! group p6
//! gens a b
//! rel a^6
//! rel b^3
//! rel (a b)^2
//! ```
//!
//! A word is a whitespace-separated sequence of terms; a term is an atom
//! optionally followed by `^<signed int>`, and an atom is a generator name,
//! `1`, or a parenthesised word.

use crate::error::{Error, Result};
use crate::fpgroup::{Presentation, Word};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    Caret,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn tokenize(src: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = src.chars().enumerate().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let col = col0 + pos;
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, col));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, col));
                i += 1;
            }
            c if c.is_ascii_digit() || c == '-' || c == '+' => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|p| p.1).collect();
                let n = text.parse::<i64>().map_err(|_| perr(line, col, format!("bad integer `{text}`")))?;
                out.push((Tok::Int(n), col));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().map(|p| p.1).collect()), col));
            }
            other => return Err(perr(line, col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct WordParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    gens: &'a [String],
    line: usize,
    end_col: usize,
}

impl WordParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = Word::empty();
        while let Some(t) = self.peek() {
            if *t == Tok::RParen {
                break;
            }
            w = w.mul(&self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(&Tok::Int(n)) => {
                    self.pos += 1;
                    Ok(atom.pow(n))
                }
                _ => Err(perr(self.line, self.col(), "expected an integer exponent after `^`")),
            }
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let g = self
                    .gens
                    .iter()
                    .position(|x| *x == name)
                    .ok_or_else(|| perr(self.line, col, format!("unknown generator `{name}`")))?;
                Ok(Word::gen(g))
            }
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(Word::empty())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let w = self.word()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(perr(self.line, self.col(), "expected `)`"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(t) => Err(perr(self.line, col, format!("unexpected token {t:?}"))),
            None => Err(perr(self.line, col, "unexpected end of word")),
        }
    }
}

fn parse_word_at(text: &str, gens: &[String], line: usize, col0: usize) -> Result<Word> {
    let toks = tokenize(text, line, col0)?;
    let mut p = WordParser { toks, pos: 0, gens, line, end_col: col0 + text.chars().count() };
    let w = p.word()?;
    if p.pos < p.toks.len() {
        return Err(perr(line, p.col(), "unbalanced `)`"));
    }
    Ok(w)
}

/// Parses a single word over `gens`; positions are reported on line 1.
pub fn parse_word(text: &str, gens: &[String]) -> Result<Word> {
    parse_word_at(text, gens, 1, 1)
}

/// Parses `;`-separated words.
pub fn parse_word_list(text: &str, gens: &[String]) -> Result<Vec<Word>> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(|s| parse_word(s, gens)).collect()
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut name: Option<String> = None;
    let mut gens: Option<Vec<String>> = None;
    let mut rels = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let indent = content.chars().take_while(|c| c.is_whitespace()).count();
        let body = content.trim();
        if body.is_empty() {
            continue;
        }
        let kw_len = body.chars().take_while(|c| !c.is_whitespace()).count();
        let keyword: String = body.chars().take(kw_len).collect();
        let rest: String = body.chars().skip(kw_len).collect();
        let rest_col = indent + kw_len + 1;
        match keyword.as_str() {
            "group" => {
                let n = rest.trim();
                if n.is_empty() || n.contains(char::is_whitespace) {
                    return Err(perr(line, rest_col, "expected a single group name"));
                }
                name = Some(n.to_string());
            }
            "gens" => {
                if gens.is_some() {
                    return Err(perr(line, indent + 1, "generators declared twice"));
                }
                let toks = tokenize(&rest, line, rest_col)?;
                if toks.is_empty() {
                    return Err(perr(line, rest_col, "empty generator list"));
                }
                let mut list: Vec<String> = Vec::new();
                for (t, col) in toks {
                    match t {
                        Tok::Ident(s) if !list.contains(&s) => list.push(s),
                        Tok::Ident(s) => return Err(perr(line, col, format!("duplicate generator `{s}`"))),
                        other => return Err(perr(line, col, format!("expected a generator name, got {other:?}"))),
                    }
                }
                gens = Some(list);
            }
            "rel" => {
                let g = gens.as_ref().ok_or_else(|| perr(line, indent + 1, "`rel` before `gens`"))?;
                rels.push(parse_word_at(&rest, g, line, rest_col)?);
            }
            other => return Err(perr(line, indent + 1, format!("unknown directive `{other}`"))),
        }
    }
    let gens = gens.ok_or_else(|| perr(text.lines().count().max(1), 1, "empty generator list"))?;
    Presentation::new(name.unwrap_or_else(|| "G".into()), gens, rels)
}

pub fn render_presentation(p: &Presentation) -> String {
    let mut out = format!("group {}\ngens {}\n", p.name(), p.generators().join(" "));
    for r in p.relators() {
        out.push_str("rel ");
        out.push_str(&r.render(p.generators()));
        out.push('\n');
    }
    out
}
