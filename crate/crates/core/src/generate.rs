//! Candidate tangles in multiplicative notation, enumerated by crossing
//! number from integer sequences with every admissible bracketing.
//!
//! A product is a sequence of factors, each an integer or a bracketed
//! product. Redundant spellings are pruned syntactically: a product never
//! starts with a bracket, a bracket never starts with `0` or `1`, and
//! zeros appear only as the last factor of a bracket.

use crate::algebra::Tangle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Open,
    Close,
    Int(i64),
}

/// A candidate together with the crossing count of its template.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub tokens: Vec<Token>,
    pub crossings: u32,
}

impl Candidate {
    pub fn tangle(&self) -> Tangle {
        tokens_to_tangle(&self.tokens)
    }

    pub fn text(&self) -> String {
        tokens_text(&self.tokens)
    }
}

pub fn tokens_to_tangle(tokens: &[Token]) -> Tangle {
    fn product(tokens: &[Token], pos: &mut usize) -> Tangle {
        let mut acc: Option<Tangle> = None;
        while *pos < tokens.len() {
            let factor = match tokens[*pos] {
                Token::Close => break,
                Token::Int(n) => {
                    *pos += 1;
                    Tangle::Int(n)
                }
                Token::Open => {
                    *pos += 1;
                    let inner = product(tokens, pos);
                    *pos += 1;
                    inner
                }
            };
            acc = Some(match acc {
                None => factor,
                Some(a) => Tangle::prod(a, factor),
            });
        }
        acc.expect("nonempty product")
    }
    let mut pos = 0;
    product(tokens, &mut pos)
}

pub fn tokens_text(tokens: &[Token]) -> String {
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        let prev_open = i > 0 && tokens[i - 1] == Token::Open;
        match t {
            Token::Open => {
                if i > 0 && !prev_open {
                    out.push(' ');
                }
                out.push('(');
            }
            Token::Close => out.push(')'),
            Token::Int(n) => {
                if i > 0 && !prev_open {
                    out.push(' ');
                }
                out.push_str(&n.to_string());
            }
        }
    }
    out
}

/// Bracket bodies of every flattened sum up to a bound, memoized by sum.
struct Bodies {
    by_sum: Vec<Vec<Vec<Token>>>,
}

impl Bodies {
    fn new(max: u32) -> Bodies {
        let mut b = Bodies { by_sum: Vec::new() };
        for s in 0..=max {
            let mut list = Vec::new();
            b.sequences(s, true, &mut Vec::new(), &mut |tokens| {
                list.push(tokens.to_vec())
            });
            b.by_sum.push(list);
        }
        b
    }

    /// Enumerates products of flattened sum `s`. `inner` selects bracket
    /// rules (at least two factors, trailing zero allowed). A leading `1`
    /// is ambiguous with a larger leading integer, so it only appears as
    /// the whole tangle `1`.
    fn sequences(&self, s: u32, inner: bool, acc: &mut Vec<Token>, emit: &mut dyn FnMut(&[Token])) {
        if !inner && s == 1 {
            acc.push(Token::Int(1));
            emit(acc);
            acc.pop();
        }
        for first in 2..=s {
            acc.push(Token::Int(first as i64));
            if !inner && first == s {
                emit(acc);
            }
            self.rest(s - first, inner, acc, emit);
            acc.pop();
        }
    }

    /// Appends factors 2.. of a product with remaining sum `rem`; the
    /// product so far has at least one factor.
    fn rest(&self, rem: u32, inner: bool, acc: &mut Vec<Token>, emit: &mut dyn FnMut(&[Token])) {
        if rem == 0 {
            if inner {
                acc.push(Token::Int(0));
                emit(acc);
                acc.pop();
            }
            return;
        }
        for v in 1..=rem {
            acc.push(Token::Int(v as i64));
            if v == rem {
                emit(acc);
            }
            self.rest(rem - v, inner, acc, emit);
            acc.pop();
        }
        for s in 2..=rem {
            for body in &self.by_sum[s as usize] {
                let mark = acc.len();
                acc.push(Token::Open);
                acc.extend_from_slice(body);
                acc.push(Token::Close);
                if s == rem {
                    emit(acc);
                }
                self.rest(rem - s, inner, acc, emit);
                acc.truncate(mark);
            }
        }
    }
}

/// Calls `f` with every alternating candidate (all integers nonnegative)
/// of `1..=max` crossings, including templates whose inner brackets end in
/// `0`. Candidates whose last top-level factor is `0` are never produced.
pub fn for_each_alternating(max: u32, mut f: impl FnMut(&[Token], u32)) {
    let bodies = Bodies::new(max);
    for n in 1..=max {
        let mut acc = Vec::new();
        bodies.sequences(n, false, &mut acc, &mut |tokens| f(tokens, n));
    }
}

/// Alternating candidates up to `max` crossings, preceded by the lone
/// tangle `0`.
pub fn alternating(max: u32) -> Vec<Candidate> {
    let mut out = vec![Candidate {
        tokens: vec![Token::Int(0)],
        crossings: 0,
    }];
    for_each_alternating(max, |tokens, n| {
        out.push(Candidate {
            tokens: tokens.to_vec(),
            crossings: n,
        })
    });
    out
}

/// Nestedness (closing brackets to the right) of every `0` in `tokens`.
pub fn zero_slots(tokens: &[Token]) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for (i, t) in tokens.iter().enumerate() {
        if *t == Token::Int(0) {
            let k = tokens[i..].iter().filter(|t| **t == Token::Close).count();
            if k > 0 {
                slots.push((i, k));
            }
        }
    }
    slots
}

/// Every variant replacing some inner `0`s of `template`, each by one of
/// `-1, ..., -k` where `k` is its nestedness. The template itself is not
/// included.
pub fn nonalternating(template: &Candidate) -> Vec<Candidate> {
    let slots = zero_slots(&template.tokens);
    let mut out = Vec::new();
    // choice[j] = 0 keeps the zero.
    let mut choice = vec![0usize; slots.len()];
    loop {
        let mut j = 0;
        loop {
            if j == slots.len() {
                return out;
            }
            if choice[j] < slots[j].1 {
                choice[j] += 1;
                break;
            }
            choice[j] = 0;
            j += 1;
        }
        let mut tokens = template.tokens.clone();
        for (&(i, _), &c) in slots.iter().zip(&choice) {
            if c > 0 {
                tokens[i] = Token::Int(-(c as i64));
            }
        }
        out.push(Candidate {
            tokens,
            crossings: template.crossings,
        });
    }
}

/// All candidates up to `max` crossings: alternating ones followed by the
/// non-alternating variants of each template.
pub fn candidates(max: u32) -> Vec<Candidate> {
    let alt = alternating(max);
    let mut out = Vec::with_capacity(alt.len() * 4);
    for c in &alt {
        out.extend(nonalternating(c));
    }
    let mut all = alt;
    all.extend(out);
    all
}
