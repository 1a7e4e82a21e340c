//! Extended rationals, the tangle fraction invariant and rational-tangle
//! continued fractions.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::Tangle;
use crate::error::{Result, TangleError};

/// A reduced fraction `p/q` with `q >= 0`. Infinity is `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtFraction {
    p: i64,
    q: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl ExtFraction {
    pub const ZERO: ExtFraction = ExtFraction { p: 0, q: 1 };
    pub const ONE: ExtFraction = ExtFraction { p: 1, q: 1 };
    pub const INFINITY: ExtFraction = ExtFraction { p: 1, q: 0 };

    /// Builds `p/q`, reducing and moving the sign to the numerator.
    pub fn new(p: i64, q: i64) -> Result<ExtFraction> {
        if q == 0 {
            if p == 0 {
                return Err(TangleError::Syntax("0/0 is not a fraction".into()));
            }
            return Ok(ExtFraction::INFINITY);
        }
        let g = gcd(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = p.checked_neg().ok_or(TangleError::Overflow)?;
            q = q.checked_neg().ok_or(TangleError::Overflow)?;
        }
        Ok(ExtFraction { p, q })
    }

    pub fn integer(n: i64) -> ExtFraction {
        ExtFraction { p: n, q: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn is_integer(&self) -> bool {
        self.q == 1
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.p)
    }

    /// `floor(p/q)`; `None` for infinity.
    pub fn floor(&self) -> Option<i64> {
        (!self.is_infinite()).then(|| self.p.div_euclid(self.q))
    }

    pub fn neg(&self) -> ExtFraction {
        if self.is_infinite() {
            return *self;
        }
        ExtFraction {
            p: -self.p,
            q: self.q,
        }
    }

    pub fn recip(&self) -> ExtFraction {
        match (self.p, self.q) {
            (_, 0) => ExtFraction::ZERO,
            (0, _) => ExtFraction::INFINITY,
            (p, q) if p < 0 => ExtFraction { p: -q, q: -p },
            (p, q) => ExtFraction { p: q, q: p },
        }
    }

    /// Sum with `inf + x = inf`.
    pub fn add(&self, other: &ExtFraction) -> Result<ExtFraction> {
        if self.is_infinite() || other.is_infinite() {
            return Ok(ExtFraction::INFINITY);
        }
        let g = gcd(self.q, other.q);
        let l = self.q / g;
        let r = other.q / g;
        let p = self
            .p
            .checked_mul(r)
            .and_then(|a| other.p.checked_mul(l).and_then(|b| a.checked_add(b)))
            .ok_or(TangleError::Overflow)?;
        let q = l.checked_mul(other.q).ok_or(TangleError::Overflow)?;
        ExtFraction::new(p, q)
    }

    pub fn add_int(&self, n: i64) -> Result<ExtFraction> {
        self.add(&ExtFraction::integer(n))
    }

    /// Comparison of finite values; infinity compares greater than everything.
    pub fn cmp_value(&self, other: &ExtFraction) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (self.p as i128 * other.q as i128).cmp(&(other.p as i128 * self.q as i128)),
        }
    }

    /// True for finite values strictly greater than one.
    pub fn exceeds_one(&self) -> bool {
        !self.is_infinite() && self.p > self.q
    }
}

impl fmt::Display for ExtFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Fraction of a tangle: `Frac(L R) = Frac(R) + 1/Frac(L)`.
pub fn fraction(t: &Tangle) -> Result<ExtFraction> {
    match t {
        Tangle::Int(n) => Ok(ExtFraction::integer(*n)),
        Tangle::Rat(f) => Ok(*f),
        Tangle::Prod(l, r) => fraction(r)?.add(&fraction(l)?.recip()),
    }
}

/// Continued-fraction terms of the canonical rational tangle with value `f`,
/// innermost term first: `7/3 -> [3, 2]`, `1/0 -> [0, 0]`.
pub fn rational_decompose(f: &ExtFraction) -> Vec<i64> {
    if f.is_infinite() {
        return vec![0, 0];
    }
    if f.p < 0 {
        return rational_decompose(&f.neg())
            .into_iter()
            .map(|t| -t)
            .collect();
    }
    let (mut p, mut q) = (f.p, f.q);
    let mut outer_first = Vec::new();
    while q != 1 {
        outer_first.push(p / q);
        let r = p % q;
        p = q;
        q = r;
    }
    outer_first.push(p);
    outer_first.reverse();
    outer_first
}

/// The canonical rational tangle with value `f` as a left-associated chain.
pub fn rational_tree(f: &ExtFraction) -> Tangle {
    let terms = rational_decompose(f);
    let mut it = terms.into_iter();
    let first = Tangle::Int(it.next().expect("at least one term"));
    it.fold(first, |acc, t| Tangle::prod(acc, Tangle::Int(t)))
}

/// Crossings of the canonical diagram of the rational tangle `f`.
pub fn rational_crossings(f: &ExtFraction) -> u64 {
    rational_decompose(f).iter().map(|t| t.unsigned_abs()).sum()
}

/// Endpoint pairing of a tangle: `H` joins NW-NE, `V` joins NW-SW,
/// `X` joins NW-SE.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vhx {
    H,
    V,
    X,
}

impl Vhx {
    /// Image under `eta`, which swaps NE and SW.
    pub fn eta(self) -> Vhx {
        match self {
            Vhx::H => Vhx::V,
            Vhx::V => Vhx::H,
            Vhx::X => Vhx::X,
        }
    }

    /// Pairing and number of new closed loops of `A + B`.
    pub fn sum(self, other: Vhx) -> (Vhx, u32) {
        match (self, other) {
            (Vhx::H, b) => (b, 0),
            (a, Vhx::H) => (a, 0),
            (Vhx::V, Vhx::V) => (Vhx::V, 1),
            (Vhx::X, Vhx::X) => (Vhx::H, 0),
            _ => (Vhx::V, 0),
        }
    }

    pub fn of_fraction(f: &ExtFraction) -> Vhx {
        match (f.p.rem_euclid(2), f.q.rem_euclid(2)) {
            (0, _) => Vhx::H,
            (_, 0) => Vhx::V,
            _ => Vhx::X,
        }
    }
}

impl fmt::Display for Vhx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Vhx::H => "H",
            Vhx::V => "V",
            Vhx::X => "X",
        };
        f.write_str(s)
    }
}

/// Endpoint pairing and number of closed components.
pub fn connectivity(t: &Tangle) -> (Vhx, u32) {
    match t {
        Tangle::Int(n) => (Vhx::of_fraction(&ExtFraction::integer(*n)), 0),
        Tangle::Rat(f) => (Vhx::of_fraction(f), 0),
        Tangle::Prod(l, r) => {
            let (a, la) = connectivity(l);
            let (b, lb) = connectivity(r);
            let (c, extra) = a.eta().sum(b);
            (c, la + lb + extra)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: i64, q: i64) -> ExtFraction {
        ExtFraction::new(p, q).unwrap()
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        assert_eq!(fr(4, -6), fr(-2, 3));
        assert_eq!(fr(-5, 0), ExtFraction::INFINITY);
        assert!(ExtFraction::new(0, 0).is_err());
    }

    #[test]
    fn infinity_absorbs() {
        assert_eq!(
            ExtFraction::INFINITY.add(&fr(3, 7)).unwrap(),
            ExtFraction::INFINITY
        );
        assert_eq!(
            fr(-1, 2).add(&fr(1, 2)).unwrap().recip(),
            ExtFraction::INFINITY
        );
    }

    #[test]
    fn overflow_is_reported() {
        let big = ExtFraction::integer(i64::MAX);
        assert_eq!(big.add_int(1), Err(TangleError::Overflow));
    }

    #[test]
    fn decompositions() {
        assert_eq!(rational_decompose(&fr(7, 3)), vec![3, 2]);
        assert_eq!(rational_decompose(&fr(1, 2)), vec![2, 0]);
        assert_eq!(rational_decompose(&fr(-7, 3)), vec![-3, -2]);
        assert_eq!(rational_decompose(&ExtFraction::ZERO), vec![0]);
        assert_eq!(rational_decompose(&ExtFraction::INFINITY), vec![0, 0]);
        assert_eq!(rational_decompose(&ExtFraction::ONE), vec![1]);
        assert_eq!(rational_crossings(&fr(-1, 2)), 2);
    }

    #[test]
    fn rational_tree_round_trips() {
        for (p, q) in [(7, 3), (1, 2), (-13, 5), (0, 1), (1, 0), (4, 1), (2, 9)] {
            let f = fr(p, q);
            assert_eq!(fraction(&rational_tree(&f)).unwrap(), f);
        }
    }

    #[test]
    fn leaf_pairings() {
        assert_eq!(connectivity(&Tangle::Int(0)), (Vhx::H, 0));
        assert_eq!(
            connectivity(&Tangle::Rat(ExtFraction::INFINITY)),
            (Vhx::V, 0)
        );
        assert_eq!(connectivity(&Tangle::Int(1)), (Vhx::X, 0));
    }

    #[test]
    fn ring_pairing() {
        // Two vertical arcs and one loop; the loop count is what the
        // orbit table depends on.
        let ring = Tangle::prod(
            Tangle::Int(2),
            Tangle::prod(Tangle::Int(-2), Tangle::Int(0)),
        );
        assert_eq!(connectivity(&ring), (Vhx::V, 1));
        let sum = Tangle::prod(Tangle::Int(2), Tangle::prod(Tangle::Int(2), Tangle::Int(0)));
        assert_eq!(connectivity(&sum), (Vhx::V, 1));
        assert_eq!(
            connectivity(&Tangle::prod(Tangle::Int(3), Tangle::Int(2))),
            (Vhx::X, 0)
        );
    }
}
