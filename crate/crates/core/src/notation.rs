//! Reading and writing tangles in multiplicative notation.

use crate::algebra::Tangle;
use crate::error::{Result, TangleError};
use crate::fraction::ExtFraction;

/// How integers are delimited in the input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ParseMode {
    /// Every digit is its own factor and `-` applies to the next digit:
    /// `3(2(20))`, `2(-2 0)`.
    #[default]
    Compact,
    /// Factors are separated by whitespace or parentheses and may be
    /// multi-digit integers or fractions `p/q`: `12 (3 -4)`, `7/3 2`.
    Spaced,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Open,
    Close,
    Leaf(Tangle),
}

fn syntax(pos: usize, msg: &str) -> TangleError {
    TangleError::Syntax(format!("{msg} at offset {pos}"))
}

fn tokenize(text: &str, mode: ParseMode) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'(' => out.push((i, Token::Open)),
            b')' => out.push((i, Token::Close)),
            c if c.is_ascii_whitespace() => {}
            b'-' | b'0'..=b'9' => {
                let start = i;
                let (leaf, end) = match mode {
                    ParseMode::Compact => compact_int(bytes, i)?,
                    ParseMode::Spaced => spaced_number(bytes, i)?,
                };
                out.push((start, Token::Leaf(leaf)));
                i = end;
                continue;
            }
            _ => return Err(syntax(i, &format!("unexpected character {:?}", c as char))),
        }
        i += 1;
    }
    Ok(out)
}

fn compact_int(bytes: &[u8], start: usize) -> Result<(Tangle, usize)> {
    let mut i = start;
    let neg = bytes[i] == b'-';
    if neg {
        i += 1;
    }
    match bytes.get(i) {
        Some(d) if d.is_ascii_digit() => {
            let v = (d - b'0') as i64;
            Ok((Tangle::Int(if neg { -v } else { v }), i + 1))
        }
        _ => Err(syntax(start, "'-' must be followed by a digit")),
    }
}

fn read_int(bytes: &[u8], start: usize) -> Result<(i64, usize)> {
    let mut i = start;
    if bytes.get(i) == Some(&b'-') {
        i += 1;
    }
    let digits = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == digits {
        return Err(syntax(start, "expected digits"));
    }
    let s = std::str::from_utf8(&bytes[start..i]).expect("ascii");
    let v = s
        .parse::<i64>()
        .map_err(|_| syntax(start, "integer out of range"))?;
    Ok((v, i))
}

fn spaced_number(bytes: &[u8], start: usize) -> Result<(Tangle, usize)> {
    let (p, i) = read_int(bytes, start)?;
    if bytes.get(i) != Some(&b'/') {
        return Ok((Tangle::Int(p), i));
    }
    let (q, j) = read_int(bytes, i + 1)?;
    let f = ExtFraction::new(p, q).map_err(|_| syntax(start, "0/0 is not a fraction"))?;
    Ok((Tangle::leaf(f), j))
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn product(&mut self) -> Result<Tangle> {
        let mut factors = Vec::new();
        while let Some((at, tok)) = self.tokens.get(self.pos).cloned() {
            match tok {
                Token::Close => break,
                Token::Leaf(t) => {
                    self.pos += 1;
                    factors.push(t);
                }
                Token::Open => {
                    self.pos += 1;
                    let inner = self.product()?;
                    match self.tokens.get(self.pos) {
                        Some((_, Token::Close)) => self.pos += 1,
                        _ => return Err(syntax(at, "unbalanced '('")),
                    }
                    factors.push(inner);
                }
            }
        }
        let at = self.tokens.get(self.pos).map_or(self.len, |t| t.0);
        Tangle::chain(factors).ok_or_else(|| syntax(at, "empty product"))
    }
}

/// Parses multiplicative notation; products associate to the left.
pub fn parse(text: &str, mode: ParseMode) -> Result<Tangle> {
    let tokens = tokenize(text, mode)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        len: text.len(),
    };
    let t = p.product()?;
    if let Some((at, _)) = p.tokens.get(p.pos) {
        return Err(syntax(*at, "unbalanced ')'"));
    }
    Ok(t)
}

/// Parses comma notation `(L1,...,LN, +++)` as `L1(L2(...(LN n)))`, where
/// `n` counts the trailing `+` (or minus the trailing `-`) signs.
/// Entries use [`ParseMode::Compact`].
pub fn parse_comma(text: &str) -> Result<Tangle> {
    let body = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| syntax(0, "comma notation must be parenthesized"))?;
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&body[start..]);
    let mut last = 0i64;
    if let Some(tail) = parts.last().map(|s| s.trim()) {
        let plus = !tail.is_empty() && tail.chars().all(|c| c == '+');
        let minus = !tail.is_empty() && tail.chars().all(|c| c == '-');
        if plus || minus {
            last = if plus {
                tail.len() as i64
            } else {
                -(tail.len() as i64)
            };
            parts.pop();
        }
    }
    if parts.is_empty() {
        return Err(syntax(0, "comma notation needs at least one entry"));
    }
    let lefts = parts
        .iter()
        .map(|p| parse(p, ParseMode::Compact))
        .collect::<Result<Vec<_>>>()?;
    Ok(Tangle::spine_from(lefts, Tangle::Int(last)))
}

fn leaf_text(t: &Tangle) -> String {
    match t {
        Tangle::Int(n) => n.to_string(),
        Tangle::Rat(f) => f.to_string(),
        Tangle::Prod(..) => unreachable!(),
    }
}

fn write(t: &Tangle, out: &mut String) {
    match t {
        Tangle::Prod(l, r) => {
            write(l, out);
            out.push(' ');
            if r.is_leaf() {
                out.push_str(&leaf_text(r));
            } else {
                out.push('(');
                write(r, out);
                out.push(')');
            }
        }
        leaf => out.push_str(&leaf_text(leaf)),
    }
}

/// Spaced notation with left chains unparenthesized: `3 (2 (2 0))`.
pub fn emit(t: &Tangle) -> String {
    let mut out = String::new();
    write(t, &mut out);
    out
}
