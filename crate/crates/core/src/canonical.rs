//! Canonical trees: a unique representative for each isotopy class of
//! prime algebraic tangles, reached by three traversals of local rewrites.
//!
//! A tree is canonical when all right leaves are integral, all left leaves
//! are fractions greater than one, every left-child node has a positive
//! right leaf (if its right child is a leaf), a left-child node with right
//! child `1` has a left child whose right child is a leaf, and rings
//! `2 (2 -1)` sit at the bottom of their spine. A rational tangle is a
//! single leaf holding its fraction.

use crate::algebra::{mirror, rho_x, Tangle};
use crate::error::{Result, TangleError};
use crate::fraction::{fraction, ExtFraction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pos {
    Root,
    Left,
    Right,
}

/// The ring `2 (2 -1)`: two parallel strands and a closed loop around them.
pub fn ring() -> Tangle {
    Tangle::prod(
        Tangle::Int(2),
        Tangle::prod(Tangle::Int(2), Tangle::Int(-1)),
    )
}

fn is_ring(t: &Tangle) -> bool {
    match t {
        Tangle::Prod(a, b) => {
            **a == Tangle::Int(2)
                && matches!(b.as_ref(), Tangle::Prod(c, d) if **c == Tangle::Int(2) && **d == Tangle::Int(-1))
        }
        _ => false,
    }
}

/// True for a left-associated chain whose right children are integral,
/// i.e. a rational tangle in standard form.
fn is_rational_chain(t: &Tangle) -> bool {
    match t {
        Tangle::Prod(l, r) => matches!(r.as_ref(), Tangle::Int(_)) && is_rational_chain(l),
        _ => true,
    }
}

/// Rewrites non-integral rational leaves in right-child position so that
/// every right leaf is integral: `p/q -> (q/(p mod q)) floor(p/q)`.
fn normalize(t: &Tangle, pos: Pos) -> Tangle {
    match t {
        Tangle::Prod(l, r) => Tangle::prod(normalize(l, Pos::Left), normalize(r, Pos::Right)),
        Tangle::Rat(f) if pos == Pos::Right => match f.floor() {
            Some(n) => {
                let rest = f.add_int(-n).expect("fractional part fits");
                Tangle::prod(Tangle::leaf(rest.recip()), Tangle::Int(n))
            }
            None => Tangle::prod(Tangle::Int(0), Tangle::Int(0)),
        },
        leaf => leaf.clone(),
    }
}

pub(crate) fn add_rightmost(t: Tangle, q: i64) -> Result<Tangle> {
    match t {
        Tangle::Prod(l, r) => Ok(Tangle::Prod(l, Box::new(add_rightmost(*r, q)?))),
        Tangle::Int(m) => m
            .checked_add(q)
            .map(Tangle::Int)
            .ok_or(TangleError::Overflow),
        Tangle::Rat(f) => Ok(Tangle::leaf(f.add_int(q)?)),
    }
}

/// `q + B` rewritten as `B_{x^q} + q`: rotate `B` about the x axis `q`
/// times and add `q` to its rightmost integral.
pub(crate) fn twist_in(b: Tangle, q: i64) -> Result<Tangle> {
    let b = if q.rem_euclid(2) == 1 { rho_x(&b) } else { b };
    add_rightmost(b, q)
}

/// `A + B` with `B` twisted to the bottom of the right spine of `A`.
pub(crate) fn spine_sum(a: Tangle, b: Tangle) -> Result<Tangle> {
    match a {
        Tangle::Int(n) => twist_in(b, n),
        Tangle::Rat(f) => match f.floor() {
            Some(n) => {
                let rest = f.add_int(-n)?;
                Ok(Tangle::prod(Tangle::leaf(rest.recip()), twist_in(b, n)?))
            }
            None => Ok(Tangle::prod(Tangle::Int(0), b)),
        },
        prod => {
            let n = prod
                .rightmost()
                .as_int()
                .expect("right leaves are integral after normalization");
            let tail = twist_in(b, n)?;
            Ok(prod.map_rightmost(|_| tail))
        }
    }
}

fn composite(t: &Tangle) -> TangleError {
    TangleError::CompositeInput(crate::notation::emit(t))
}

fn check_prime(t: &Tangle, whole: &Tangle) -> Result<()> {
    if let Tangle::Prod(l, r) = t {
        if **l == Tangle::Int(0) {
            return Err(composite(whole));
        }
        check_prime(l, whole)?;
        check_prime(r, whole)?;
    }
    Ok(())
}

fn part1(t: Tangle, pos: Pos) -> Result<Tangle> {
    match t {
        Tangle::Prod(l, r) => {
            let r = part1(*r, Pos::Right)?;
            let l = part1(*l, Pos::Left)?;
            alpha(l, r, pos)
        }
        leaf => Ok(leaf),
    }
}

/// Integral twists `(1/q) B -> B_{x^q} + q` at the top or at right
/// children, and contraction `(p/q) n -> n + q/p` at left children.
fn alpha(l: Tangle, r: Tangle, pos: Pos) -> Result<Tangle> {
    if let Some(f) = l.leaf_value() {
        let inv = f.recip();
        match (pos, &r) {
            (Pos::Left, Tangle::Int(n)) => return Ok(Tangle::leaf(inv.add_int(*n)?)),
            (Pos::Root | Pos::Right, _) => {
                if let Some(q) = inv.as_integer() {
                    return twist_in(r, q);
                }
            }
            _ => {}
        }
    }
    Ok(Tangle::prod(l, r))
}

/// `(p/q) n -> n + q/p` at a left child.
fn contract(node: &Tangle) -> Result<Option<Tangle>> {
    if let Tangle::Prod(l, r) = node {
        if let (Some(f), Tangle::Int(n)) = (l.leaf_value(), r.as_ref()) {
            return Ok(Some(Tangle::leaf(f.recip().add_int(*n)?)));
        }
    }
    Ok(None)
}

/// Rewrites at `node` that only replace `node` itself.
fn self_moves(node: &Tangle) -> Result<Option<Tangle>> {
    let Tangle::Prod(l, r) = node else {
        return Ok(None);
    };
    if let Some(f) = l.leaf_value() {
        if !f.exceeds_one() {
            return beta_q(f, r.as_ref().clone(), node).map(Some);
        }
    }
    if let Tangle::Prod(a, z) = l.as_ref() {
        if **z == Tangle::Int(0) {
            return spine_sum(a.as_ref().clone(), r.as_ref().clone()).map(Some);
        }
    }
    Ok(None)
}

/// A left leaf `f <= 1` contributes `1/f = t + s` with `0 <= s < 1`; the
/// integral part `t` is twisted into the right child.
fn beta_q(f: ExtFraction, b: Tangle, node: &Tangle) -> Result<Tangle> {
    if f == ExtFraction::ZERO {
        return Err(composite(node));
    }
    let g = f.recip();
    let t = g.floor().expect("finite reciprocal");
    let s = g.add_int(-t)?;
    let b = twist_in(b, t)?;
    if s == ExtFraction::ZERO {
        Ok(b)
    } else {
        Ok(Tangle::prod(Tangle::leaf(s.recip()), b))
    }
}

/// Flypes visited at the left child `l1` of `Prod(l1, b)`; they rewrite
/// the whole parent.
fn parent_moves(l1: &Tangle, b: &Tangle) -> Result<Option<Tangle>> {
    let Tangle::Prod(ll, lr) = l1 else {
        return Ok(None);
    };
    match lr.as_ref() {
        Tangle::Int(n) if *n < 0 => {
            let k = -*n;
            let left = Tangle::prod(Tangle::prod(mirror(ll), Tangle::Int(k - 1)), Tangle::Int(1));
            Ok(Some(Tangle::prod(left, twist_in(b.clone(), -1)?)))
        }
        Tangle::Int(1) => {
            let Tangle::Prod(c, llr) = ll.as_ref() else {
                return Ok(None);
            };
            let Tangle::Prod(d, a) = llr.as_ref() else {
                return Ok(None);
            };
            let a = add_rightmost(a.as_ref().clone(), 1)?;
            let left = Tangle::prod(mirror(c), Tangle::prod(mirror(d), mirror(&a)));
            Ok(Some(Tangle::prod(left, twist_in(b.clone(), 1)?)))
        }
        _ => Ok(None),
    }
}

/// Pre-order search for the first applicable rewrite below `t`.
fn descend(t: &Tangle) -> Result<Option<Tangle>> {
    let Tangle::Prod(l, r) = t else {
        return Ok(None);
    };
    if let Some(x) = contract(l)? {
        return Ok(Some(Tangle::prod(x, r.as_ref().clone())));
    }
    if let Some(x) = self_moves(l)? {
        return Ok(Some(Tangle::prod(x, r.as_ref().clone())));
    }
    if let Some(x) = parent_moves(l, r)? {
        return Ok(Some(x));
    }
    if let Some(x) = descend(l)? {
        return Ok(Some(Tangle::prod(x, r.as_ref().clone())));
    }
    if let Some(x) = self_moves(r)? {
        return Ok(Some(Tangle::prod(l.as_ref().clone(), x)));
    }
    if let Some(x) = descend(r)? {
        return Ok(Some(Tangle::prod(l.as_ref().clone(), x)));
    }
    Ok(None)
}

fn part2(mut t: Tangle, budget: usize) -> Result<Tangle> {
    for _ in 0..budget {
        let next = match self_moves(&t)? {
            Some(x) => Some(x),
            None => descend(&t)?,
        };
        match next {
            Some(x) => t = x,
            None => return Ok(t),
        }
    }
    Err(TangleError::NonTermination(budget))
}

/// Rings are pushed to the bottom of their spine.
fn part3(t: Tangle) -> Tangle {
    match t {
        Tangle::Prod(l, r) => {
            let r = part3(*r);
            let l = part3(*l);
            let push = is_ring(&l) && matches!(&r, Tangle::Prod(rl, _) if !is_ring(rl));
            if push {
                r.map_rightmost(|m| Tangle::prod(l, m))
            } else {
                Tangle::prod(l, r)
            }
        }
        leaf => leaf,
    }
}

/// `t` with every right leaf integral.
pub(crate) fn normalize_leaves(t: &Tangle) -> Tangle {
    normalize(t, Pos::Root)
}

/// Canonical tree of `t`; `CompositeInput` if `t` has a summand `0A`.
pub fn canonicalize(t: &Tangle) -> Result<Tangle> {
    let t = normalize(t, Pos::Root);
    if is_rational_chain(&t) {
        return Ok(Tangle::leaf(fraction(&t)?));
    }
    let budget = 1000 + 200 * t.node_count() * t.node_count();
    let t = part1(t, Pos::Root)?;
    if is_rational_chain(&t) {
        return Ok(Tangle::leaf(fraction(&t)?));
    }
    check_prime(&t, &t)?;
    let t = part3(part2(t, budget)?);
    if is_rational_chain(&t) {
        return Ok(Tangle::leaf(fraction(&t)?));
    }
    check_prime(&t, &t)?;
    Ok(t)
}

fn conforms(t: &Tangle, pos: Pos) -> bool {
    match t {
        Tangle::Int(n) => pos != Pos::Left || *n > 1,
        Tangle::Rat(f) => match pos {
            Pos::Left => f.exceeds_one(),
            Pos::Right => false,
            Pos::Root => true,
        },
        Tangle::Prod(l, r) => {
            if pos == Pos::Left {
                if l.is_leaf() && r.is_leaf() {
                    return false;
                }
                match r.as_ref() {
                    Tangle::Int(n) if *n < 1 => return false,
                    Tangle::Int(1) if !matches!(l.right(), Some(x) if x.is_leaf()) => return false,
                    _ => {}
                }
            }
            if is_ring(l) && !(r.is_leaf() || r.left().is_some_and(is_ring)) {
                return false;
            }
            conforms(l, Pos::Left) && conforms(r, Pos::Right)
        }
    }
}

/// Checks the defining restrictions of a canonical tree.
pub fn is_canonical(t: &Tangle) -> bool {
    if !t.is_leaf() && is_rational_chain(t) {
        return false;
    }
    conforms(t, Pos::Root)
}

/// How two tangles are related.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Isotopic,
    Equivalent,
    SameOrbit,
    Distinct,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Relation::Isotopic => "isotopic",
            Relation::Equivalent => "equivalent",
            Relation::SameOrbit => "same-orbit",
            Relation::Distinct => "distinct",
        })
    }
}

pub fn isotopic(a: &Tangle, b: &Tangle) -> Result<bool> {
    Ok(canonicalize(a)? == canonicalize(b)?)
}

/// The strongest relation between `a` and `b`.
pub fn relation(a: &Tangle, b: &Tangle) -> Result<Relation> {
    let cb = canonicalize(b)?;
    let mut best = Relation::Distinct;
    for g in crate::algebra::Transform::all() {
        if canonicalize(&g.apply(a))? != cb {
            continue;
        }
        let r = if g == crate::algebra::Transform::IDENTITY {
            Relation::Isotopic
        } else if g.preserves_equivalence() {
            Relation::Equivalent
        } else {
            Relation::SameOrbit
        };
        best = match (best, r) {
            (Relation::Isotopic, _) | (_, Relation::Isotopic) => Relation::Isotopic,
            (Relation::Equivalent, _) | (_, Relation::Equivalent) => Relation::Equivalent,
            _ => Relation::SameOrbit,
        };
    }
    Ok(best)
}

pub fn equivalent(a: &Tangle, b: &Tangle) -> Result<bool> {
    Ok(matches!(
        relation(a, b)?,
        Relation::Isotopic | Relation::Equivalent
    ))
}

pub fn same_orbit(a: &Tangle, b: &Tangle) -> Result<bool> {
    Ok(relation(a, b)? != Relation::Distinct)
}
