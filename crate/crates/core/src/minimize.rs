//! Minimal crossing numbers by search over crossing-preserving isotopies.
//!
//! Starting from the canonical tree, negative integrals are absorbed into
//! rational summands and flypes that trade crossings between neighboring
//! integrals of opposite sign are explored on separate copies. Every state
//! is measured after folding rational subchains into single leaves.

use std::collections::{HashSet, VecDeque};

use crate::algebra::{mirror, Tangle};
use crate::canonical::{canonicalize, normalize_leaves, spine_sum, twist_in};
use crate::error::Result;
use crate::fraction::ExtFraction;

pub use crate::fraction::rational_crossings;

/// Crossings of the diagram drawn literally from `t`.
pub fn crossing_count(t: &Tangle) -> u64 {
    t.crossing_count()
}

/// States visited per search before giving up on further improvement.
const STATE_LIMIT: usize = 20_000;

/// Folds every subtree that is a sum of a rational and an integral tangle
/// into one rational leaf.
fn fold(t: &Tangle) -> Result<Tangle> {
    let Tangle::Prod(l, r) = t else {
        return Ok(t.clone());
    };
    let l = fold(l)?;
    let r = fold(r)?;
    if let Some(f) = l.leaf_value() {
        if let Tangle::Int(n) = r {
            return Ok(Tangle::leaf(f.recip().add_int(n)?));
        }
        if let (Some(m), Some(g)) = (f.recip().as_integer(), r.leaf_value()) {
            return Ok(Tangle::leaf(g.add_int(m)?));
        }
    }
    Ok(Tangle::prod(l, r))
}

/// Removes products with `0` as a left child's right factor by summing
/// along the spine, folds rational subchains and keeps right leaves
/// integral, so that equal diagrams meet as equal states.
fn tidy(t: &Tangle) -> Result<Tangle> {
    fn merge(t: &Tangle) -> Result<Tangle> {
        let Tangle::Prod(l, r) = t else {
            return Ok(t.clone());
        };
        let l = merge(l)?;
        let r = merge(r)?;
        match l {
            Tangle::Prod(a, z) if *z == Tangle::Int(0) => merge(&spine_sum(*a, r)?),
            l => Ok(Tangle::prod(l, r)),
        }
    }
    Ok(normalize_leaves(&fold(&merge(t)?)?))
}

fn metric(t: &Tangle) -> Result<u64> {
    Ok(fold(t)?.crossing_count())
}

/// Replaces the subtree at `path` (false = left, true = right).
fn replace(t: &Tangle, path: &[bool], sub: Tangle) -> Tangle {
    match (path.split_first(), t) {
        (None, _) => sub,
        (Some((&right, rest)), Tangle::Prod(l, r)) => {
            if right {
                Tangle::prod(l.as_ref().clone(), replace(r, rest, sub))
            } else {
                Tangle::prod(replace(l, rest, sub), r.as_ref().clone())
            }
        }
        _ => unreachable!("path leads through products"),
    }
}

/// Every rewrite applicable at `node` itself.
fn local_moves(node: &Tangle, out: &mut Vec<Tangle>) -> Result<()> {
    let Tangle::Prod(l, b) = node else {
        return Ok(());
    };
    // One unit of the rightmost integral moves into a rational summand.
    if let (Some(f), Some(n)) = (l.leaf_value(), b.rightmost().as_int()) {
        if !b.is_leaf() && n != 0 {
            let t = n.signum();
            let g = f.recip().add_int(t)?;
            let rest = twist_in(b.as_ref().clone(), -t)?;
            if g == ExtFraction::ZERO {
                out.push(rest);
            } else {
                out.push(Tangle::prod(Tangle::leaf(g.recip()), rest));
            }
        }
    }
    if l.is_leaf() {
        return Ok(());
    }
    // Flype one crossing of the rightmost integral `k` of `l` across `b`,
    // viewing `l` as `(S 0) k` for the rest `S` of its spine.
    if let Some(k) = l.rightmost().as_int().filter(|k| *k != 0) {
        let s = k.signum();
        let a = Tangle::prod(mirror(&zero_rightmost(l)), Tangle::Int(0));
        let left = Tangle::prod(Tangle::prod(a, Tangle::Int(-(k - s))), Tangle::Int(-s));
        out.push(Tangle::prod(left, twist_in(b.as_ref().clone(), s)?));
    }
    // Its inverse, for `l = T s` with `s = +-1`.
    if let Tangle::Prod(t, s) = l.as_ref() {
        if let (Some(s), Some(j)) = (s.as_int().filter(|s| s.abs() == 1), t.rightmost().as_int()) {
            let a = Tangle::prod(mirror(&zero_rightmost(t)), Tangle::Int(0));
            let left = Tangle::prod(a, Tangle::Int(-(s + j)));
            out.push(Tangle::prod(left, twist_in(b.as_ref().clone(), s)?));
        }
    }
    Ok(())
}

fn zero_rightmost(t: &Tangle) -> Tangle {
    t.clone().map_rightmost(|_| Tangle::Int(0))
}

fn all_moves(t: &Tangle) -> Result<Vec<Tangle>> {
    fn walk(
        root: &Tangle,
        node: &Tangle,
        path: &mut Vec<bool>,
        out: &mut Vec<Tangle>,
    ) -> Result<()> {
        let mut here = Vec::new();
        local_moves(node, &mut here)?;
        out.extend(here.into_iter().map(|sub| replace(root, path, sub)));
        if let Tangle::Prod(l, r) = node {
            path.push(false);
            walk(root, l, path, out)?;
            path.pop();
            path.push(true);
            walk(root, r, path, out)?;
            path.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    walk(t, t, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// The minimal crossing number found and a tree realizing it, isotopic to
/// `t`. Only moves that do not increase the crossing count are followed.
pub fn minimize(t: &Tangle) -> Result<(u64, Tangle)> {
    let start = canonicalize(t)?;
    let mut best = (metric(&start)?, fold(&start)?);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        let here = metric(&state)?;
        for next in all_moves(&state)? {
            let next = tidy(&next)?;
            let m = metric(&next)?;
            if m > here || seen.len() >= STATE_LIMIT || !seen.insert(next.clone()) {
                continue;
            }
            if m < best.0 {
                best = (m, fold(&next)?);
            }
            queue.push_back(next);
        }
    }
    Ok(best)
}
