//! Tangle trees and the symmetry group generated by mirror, flip and rotation.

use std::fmt;

use crate::fraction::{rational_crossings, ExtFraction};

/// A binary product tree. `Prod(l, r)` is the product `l r`, i.e. `l0 + r`.
///
/// Rational leaves with integral value are always stored as `Int`, so
/// structural equality is tree equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tangle {
    Int(i64),
    Rat(ExtFraction),
    Prod(Box<Tangle>, Box<Tangle>),
}

impl Tangle {
    pub fn prod(l: Tangle, r: Tangle) -> Tangle {
        Tangle::Prod(Box::new(l), Box::new(r))
    }

    pub fn leaf(f: ExtFraction) -> Tangle {
        match f.as_integer() {
            Some(n) => Tangle::Int(n),
            None => Tangle::Rat(f),
        }
    }

    /// Left-associated product of the factors: `a b c = ((a b) c)`.
    pub fn chain<I: IntoIterator<Item = Tangle>>(factors: I) -> Option<Tangle> {
        factors.into_iter().reduce(Tangle::prod)
    }

    /// Right-nested product `l1 (l2 (... (ln last)))`.
    pub fn spine_from(lefts: Vec<Tangle>, last: Tangle) -> Tangle {
        lefts
            .into_iter()
            .rev()
            .fold(last, |acc, l| Tangle::prod(l, acc))
    }

    pub fn is_leaf(&self) -> bool {
        !matches!(self, Tangle::Prod(..))
    }

    pub fn leaf_value(&self) -> Option<ExtFraction> {
        match self {
            Tangle::Int(n) => Some(ExtFraction::integer(*n)),
            Tangle::Rat(f) => Some(*f),
            Tangle::Prod(..) => None,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Tangle::Int(n) => Some(*n),
            _ => None,
        }
    }

    pub fn children(&self) -> Option<(&Tangle, &Tangle)> {
        match self {
            Tangle::Prod(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn left(&self) -> Option<&Tangle> {
        self.children().map(|c| c.0)
    }

    pub fn right(&self) -> Option<&Tangle> {
        self.children().map(|c| c.1)
    }

    pub fn node_count(&self) -> usize {
        match self {
            Tangle::Prod(l, r) => 1 + l.node_count() + r.node_count(),
            _ => 1,
        }
    }

    /// The leaf reached by following right children.
    pub fn rightmost(&self) -> &Tangle {
        let mut t = self;
        while let Tangle::Prod(_, r) = t {
            t = r;
        }
        t
    }

    /// Replaces the rightmost leaf by `f(leaf)`.
    pub fn map_rightmost(self, f: impl FnOnce(Tangle) -> Tangle) -> Tangle {
        match self {
            Tangle::Prod(l, r) => Tangle::Prod(l, Box::new(r.map_rightmost(f))),
            leaf => f(leaf),
        }
    }

    /// Left children along the right spine and the final leaf.
    pub fn spine(&self) -> (Vec<&Tangle>, &Tangle) {
        let mut lefts = Vec::new();
        let mut t = self;
        while let Tangle::Prod(l, r) = t {
            lefts.push(l.as_ref());
            t = r;
        }
        (lefts, t)
    }

    /// Crossings of the diagram drawn from this tree; rational leaves count
    /// the crossings of their canonical continued fraction.
    pub fn crossing_count(&self) -> u64 {
        match self {
            Tangle::Int(n) => n.unsigned_abs(),
            Tangle::Rat(f) => rational_crossings(f),
            Tangle::Prod(l, r) => l.crossing_count() + r.crossing_count(),
        }
    }
}

/// Mirror image: every crossing changes sign.
pub fn mirror(t: &Tangle) -> Tangle {
    match t {
        Tangle::Int(n) => Tangle::Int(-n),
        Tangle::Rat(f) => Tangle::Rat(f.neg()),
        Tangle::Prod(l, r) => Tangle::prod(mirror(l), mirror(r)),
    }
}

/// Reflection in the plane through the NW-SE diagonal: `A -> A0`.
pub fn eta(t: &Tangle) -> Tangle {
    Tangle::prod(t.clone(), Tangle::Int(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Rotation by pi about a coordinate axis.
///
/// Spines ending in an integral leaf keep that leaf rightmost; the left
/// children are rotated (and for `Y`, `Z` reversed) with the integral
/// twisted through them. Spines ending in a non-integral rational leaf are
/// first rewritten so that they end in an integral leaf.
pub fn rotate(t: &Tangle, axis: Axis) -> Tangle {
    if t.is_leaf() {
        return t.clone();
    }
    let (lefts, last) = t.spine();
    let mut lefts: Vec<Tangle> = lefts.into_iter().cloned().collect();
    let n = match last {
        Tangle::Int(n) => *n,
        Tangle::Rat(f) => match f.floor() {
            Some(fl) => {
                let frac_part = f.add_int(-fl).expect("fractional part");
                lefts.push(Tangle::leaf(frac_part.recip()));
                fl
            }
            None => {
                lefts.push(Tangle::Int(0));
                0
            }
        },
        Tangle::Prod(..) => unreachable!("spine ends in a leaf"),
    };
    let odd = n.rem_euclid(2) == 1;
    let (inner, reverse) = match axis {
        Axis::X => (Axis::Y, false),
        Axis::Y => (if odd { Axis::Z } else { Axis::X }, true),
        Axis::Z => (if odd { Axis::X } else { Axis::Z }, true),
    };
    let mut rotated: Vec<Tangle> = lefts.iter().map(|l| rotate(l, inner)).collect();
    if reverse {
        rotated.reverse();
    }
    Tangle::spine_from(rotated, Tangle::Int(n))
}

pub fn rho_x(t: &Tangle) -> Tangle {
    rotate(t, Axis::X)
}

pub fn rho_y(t: &Tangle) -> Tangle {
    rotate(t, Axis::Y)
}

pub fn rho_z(t: &Tangle) -> Tangle {
    rotate(t, Axis::Z)
}

/// Rotations by direct structural recursion, `[AB]_x = A_y B_x` and
/// `[AB]_y = (B_y 0)(A_x 0)`, without any twisting.
pub mod structural {
    use super::{eta, mirror, Tangle};

    pub fn rho_x(t: &Tangle) -> Tangle {
        match t {
            Tangle::Prod(a, b) => Tangle::prod(rho_y(a), rho_x(b)),
            leaf => leaf.clone(),
        }
    }

    pub fn rho_y(t: &Tangle) -> Tangle {
        match t {
            Tangle::Prod(a, b) => Tangle::prod(eta(&rho_y(b)), eta(&rho_x(a))),
            leaf => leaf.clone(),
        }
    }

    pub fn rho_z(t: &Tangle) -> Tangle {
        rho_x(&rho_y(t))
    }

    pub fn nu(t: &Tangle) -> Tangle {
        mirror(&rho_x(&eta(t)))
    }
}

/// Rotation by pi/2 about the axis perpendicular to the projection plane.
pub fn nu(t: &Tangle) -> Tangle {
    mirror(&rho_x(&eta(t)))
}

/// An element `mu^m nu^k eta^e` of the order-16 symmetry group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transform {
    pub mirror: bool,
    pub nu: u8,
    pub eta: bool,
}

impl Transform {
    pub const IDENTITY: Transform = Transform::new(false, 0, false);
    pub const MU: Transform = Transform::new(true, 0, false);
    pub const NU: Transform = Transform::new(false, 1, false);
    pub const ETA: Transform = Transform::new(false, 0, true);
    pub const RHO_X: Transform = Transform::new(true, 1, true);
    pub const RHO_Y: Transform = Transform::new(true, 3, true);
    pub const RHO_Z: Transform = Transform::new(false, 2, false);

    pub const fn new(mirror: bool, nu: u8, eta: bool) -> Transform {
        Transform {
            mirror,
            nu: nu % 4,
            eta,
        }
    }

    /// All 16 elements, identity first.
    pub fn all() -> impl Iterator<Item = Transform> {
        (0..16u8).map(|i| Transform::new(i & 8 != 0, i & 3, i & 4 != 0))
    }

    /// `self . other`: apply `other` first.
    pub fn compose(self, other: Transform) -> Transform {
        let k = if self.eta {
            4 + self.nu - other.nu
        } else {
            self.nu + other.nu
        };
        Transform::new(self.mirror ^ other.mirror, k, self.eta ^ other.eta)
    }

    pub fn inverse(self) -> Transform {
        Transform::all()
            .find(|g| g.compose(self) == Transform::IDENTITY)
            .expect("group element")
    }

    /// Member of the subgroup `<nu, mu eta>` preserving tangle equivalence.
    pub fn preserves_equivalence(self) -> bool {
        self.mirror == self.eta
    }

    pub fn apply(self, t: &Tangle) -> Tangle {
        let mut out = if self.eta { eta(t) } else { t.clone() };
        match self.nu {
            1 => out = nu(&out),
            2 => out = rho_z(&out),
            3 => out = nu(&rho_z(&out)),
            _ => {}
        }
        if self.mirror {
            out = mirror(&out);
        }
        out
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut word = String::new();
        if self.mirror {
            word.push('μ');
        }
        if self.nu > 0 {
            word.push('ν');
            if self.nu > 1 {
                word.push(if self.nu == 2 { '²' } else { '³' });
            }
        }
        if self.eta {
            word.push('η');
        }
        if word.is_empty() {
            word.push('e');
        }
        f.write_str(&word)
    }
}

/// The 16 images of `t`, indexed like [`Transform::all`].
pub fn orbit16(t: &Tangle) -> Vec<(Transform, Tangle)> {
    Transform::all().map(|g| (g, g.apply(t))).collect()
}
