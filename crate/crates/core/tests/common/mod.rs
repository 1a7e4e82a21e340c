#![allow(dead_code)]

pub mod oracle;
pub mod tables;

use rand::Rng;
use tanglekit::algebra::{mirror, structural, Tangle};
use tanglekit::canonical::ring;
use tanglekit::fraction::{fraction, rational_tree};

pub fn sum(a: Tangle, b: Tangle) -> Tangle {
    Tangle::prod(Tangle::prod(a, Tangle::Int(0)), b)
}

/// Random product tree with `leaves` integral leaves in `-3..=3`.
pub fn random_tree<R: Rng>(rng: &mut R, leaves: usize) -> Tangle {
    if leaves <= 1 {
        return Tangle::Int(rng.gen_range(-3..=3));
    }
    let l = rng.gen_range(1..leaves);
    Tangle::prod(random_tree(rng, l), random_tree(rng, leaves - l))
}

/// Random tree whose integral leaves are nonzero, avoiding most composites.
pub fn random_nonzero_tree<R: Rng>(rng: &mut R, leaves: usize) -> Tangle {
    if leaves <= 1 {
        let v = rng.gen_range(1..=3);
        return Tangle::Int(if rng.gen_bool(0.5) { v } else { -v });
    }
    let l = rng.gen_range(1..leaves);
    Tangle::prod(
        random_nonzero_tree(rng, l),
        random_nonzero_tree(rng, leaves - l),
    )
}

fn nonzero<R: Rng>(rng: &mut R) -> i64 {
    let v = rng.gen_range(1..=2);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn rotate_x_pow(t: &Tangle, n: i64) -> Tangle {
    if n.rem_euclid(2) == 1 {
        structural::rho_x(t)
    } else {
        t.clone()
    }
}

/// Rewrites `s` into an isotopic tree using one identity chosen at random.
/// Rotations here use the direct structural rules.
pub fn isotopic_rewrite<R: Rng>(rng: &mut R, s: &Tangle) -> Tangle {
    match rng.gen_range(0..9) {
        0 => Tangle::prod(Tangle::prod(s.clone(), Tangle::Int(0)), Tangle::Int(0)),
        1 => {
            let n = nonzero(rng);
            sum(sum(s.clone(), Tangle::Int(n)), Tangle::Int(-n))
        }
        2 => {
            // n + S = S_{x^n} + n
            let n = nonzero(rng);
            sum(Tangle::Int(-n), sum(rotate_x_pow(s, n), Tangle::Int(n)))
        }
        3 => Tangle::prod(
            Tangle::prod(
                mirror(&Tangle::prod(s.clone(), Tangle::Int(1))),
                Tangle::Int(1),
            ),
            Tangle::Int(-1),
        ),
        4 => Tangle::prod(
            Tangle::prod(
                mirror(&Tangle::prod(s.clone(), Tangle::Int(-1))),
                Tangle::Int(-1),
            ),
            Tangle::Int(1),
        ),
        5 => match s {
            Tangle::Int(n) => {
                let a = nonzero(rng);
                sum(Tangle::Int(a), Tangle::Int(n - a))
            }
            Tangle::Prod(l, a) if **l == ring() => Tangle::prod(
                Tangle::prod(a.as_ref().clone(), Tangle::Int(0)),
                Tangle::prod(l.as_ref().clone(), Tangle::Int(0)),
            ),
            _ => s.clone(),
        },
        6 => match fraction(s) {
            Ok(f)
                if is_rational_shape(s)
                    && f != tanglekit::ExtFraction::ZERO
                    && !f.is_infinite() =>
            {
                if rng.gen_bool(0.5) {
                    Tangle::leaf(f)
                } else {
                    rational_tree(&f)
                }
            }
            _ => s.clone(),
        },
        7 => match s {
            // ring0 + A = A + ring0
            Tangle::Prod(l, a) if **l == ring() => {
                sum(a.as_ref().clone(), Tangle::prod(ring(), Tangle::Int(0)))
            }
            _ => s.clone(),
        },
        _ => match s {
            Tangle::Int(1) => Tangle::prod(Tangle::Int(1), Tangle::Int(0)),
            Tangle::Int(-1) => Tangle::prod(Tangle::Int(-1), Tangle::Int(0)),
            _ => s.clone(),
        },
    }
}

fn is_rational_shape(t: &Tangle) -> bool {
    match t {
        Tangle::Prod(l, r) => matches!(r.as_ref(), Tangle::Int(_)) && is_rational_shape(l),
        _ => true,
    }
}

/// Applies `isotopic_rewrite` to a uniformly chosen subtree, retrying
/// until the result has no degenerate rational subtree.
pub fn rewrite_somewhere<R: Rng>(rng: &mut R, t: &Tangle) -> Tangle {
    let n = t.node_count();
    for _ in 0..32 {
        let target = rng.gen_range(0..n);
        let mut counter = 0;
        let u = rewrite_at(rng, t, target, &mut counter);
        if is_nondegenerate(&u) {
            return u;
        }
    }
    t.clone()
}

fn rewrite_at<R: Rng>(rng: &mut R, t: &Tangle, target: usize, counter: &mut usize) -> Tangle {
    let here = *counter;
    *counter += 1;
    if here == target {
        return isotopic_rewrite(rng, t);
    }
    match t {
        Tangle::Prod(l, r) => {
            let l2 = rewrite_at(rng, l, target, counter);
            let r2 = rewrite_at(rng, r, target, counter);
            Tangle::prod(l2, r2)
        }
        leaf => leaf.clone(),
    }
}

/// Every subtree is prime and none is a rational tangle with fraction `0`
/// or `1/0`.
pub fn is_nondegenerate(t: &Tangle) -> bool {
    match t {
        Tangle::Prod(l, r) => {
            match tanglekit::canonicalize(t) {
                Ok(c) => match c.leaf_value() {
                    Some(f) if f == tanglekit::ExtFraction::ZERO || f.is_infinite() => {
                        return false
                    }
                    _ => {}
                },
                Err(_) => return false,
            }
            is_nondegenerate(l) && is_nondegenerate(r)
        }
        _ => true,
    }
}

/// A random nondegenerate tree whose canonical form draws at most
/// `max_crossings` crossings, with that canonical form.
pub fn random_canonical<R: Rng>(rng: &mut R, max_crossings: u64) -> (Tangle, Tangle) {
    loop {
        let leaves = rng.gen_range(2..=6);
        let t = random_nonzero_tree(rng, leaves);
        if !is_nondegenerate(&t) {
            continue;
        }
        if let Ok(c) = tanglekit::canonicalize(&t) {
            if c.crossing_count() <= max_crossings {
                return (t, c);
            }
        }
    }
}

/// Applies up to `max_moves` random isotopic rewrites to `t` and checks
/// that the fraction and connectivity never change and that the final tree
/// has the canonical form `c`.
pub fn move_trial<R: Rng>(
    rng: &mut R,
    t: &Tangle,
    c: &Tangle,
    max_moves: usize,
) -> Result<(), String> {
    let frac = fraction(t).map_err(|e| e.to_string())?;
    let conn = tanglekit::connectivity(t);
    let mut u = t.clone();
    let mut steps = vec![tanglekit::emit(t)];
    for _ in 0..rng.gen_range(1..=max_moves) {
        u = rewrite_somewhere(rng, &u);
        steps.push(tanglekit::emit(&u));
        if fraction(&u).ok() != Some(frac) || tanglekit::connectivity(&u) != conn {
            return Err(format!("invariants changed along {steps:?}"));
        }
    }
    match tanglekit::canonicalize(&u) {
        Ok(cu) if cu == *c => Ok(()),
        Ok(cu) => Err(format!(
            "{steps:?} ends at {}, expected {}",
            tanglekit::emit(&cu),
            tanglekit::emit(c)
        )),
        Err(e) => Err(format!("{steps:?}: {e}")),
    }
}

/// A random left chain of nonzero integers with at most `max_crossings`
/// crossings.
pub fn random_word<R: Rng>(rng: &mut R, max_crossings: i64) -> Vec<i64> {
    let mut budget = rng.gen_range(1..=max_crossings);
    let mut word = Vec::new();
    while budget > 0 {
        let a = rng.gen_range(1..=budget.min(4));
        budget -= a;
        word.push(if rng.gen_bool(0.5) { a } else { -a });
    }
    word
}

/// Fraction of the left chain `a1 a2 ... an` by the continued fraction
/// `an + 1/(... + 1/a1)`, as a reduced pair with nonnegative denominator.
pub fn continued_fraction(word: &[i64]) -> (i128, i128) {
    let (mut p, mut q) = (word[0] as i128, 1i128);
    for &a in &word[1..] {
        (p, q) = (a as i128 * p + q, p);
    }
    let g = gcd(p.abs(), q.abs()).max(1);
    let (mut p, mut q) = (p / g, q / g);
    if q < 0 || (q == 0 && p < 0) {
        (p, q) = (-p, -q);
    }
    (p, q)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
