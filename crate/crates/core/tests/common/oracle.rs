//! Independent oracles: crossing numbers by levels of products, and a
//! brute-force classification over every small product tree.

use std::collections::{HashMap, HashSet};

use tanglekit::classify::{canonical_images, record, representative_key, ClassRecord};
use tanglekit::{canonicalize, Tangle};

/// Canonical isotopy classes grouped by crossing number `0..=max`.
///
/// A class has crossing number `c` when it is `+-c` or a product of classes
/// whose numbers sum to `c`, closed under products with 0-crossing classes,
/// and it has no smaller number.
pub fn levels(max: usize) -> Vec<Vec<Tangle>> {
    let mut seen: HashSet<Tangle> = HashSet::new();
    let mut by: Vec<Vec<Tangle>> = Vec::new();
    for c in 0..=max {
        let mut cur = Vec::new();
        let mut add = |t: Tangle, cur: &mut Vec<Tangle>| {
            if let Ok(k) = canonicalize(&t) {
                if seen.insert(k.clone()) {
                    cur.push(k);
                }
            }
        };
        if c == 0 {
            add(Tangle::Int(0), &mut cur);
        } else {
            add(Tangle::Int(c as i64), &mut cur);
            add(Tangle::Int(-(c as i64)), &mut cur);
        }
        for c1 in 1..c {
            for a in &by[c1] {
                for b in &by[c - c1] {
                    add(Tangle::prod(a.clone(), b.clone()), &mut cur);
                }
            }
        }
        let mut i = 0;
        while i < cur.len() {
            let x = cur[i].clone();
            let zeros = if c == 0 { cur.clone() } else { by[0].clone() };
            for z in zeros {
                add(Tangle::prod(x.clone(), z.clone()), &mut cur);
                add(Tangle::prod(z, x.clone()), &mut cur);
            }
            i += 1;
        }
        by.push(cur);
    }
    by
}

/// Every product tree with `c` crossings in its integral leaves and exactly
/// `z` zero leaves.
fn trees(c: usize, z: usize, memo: &mut HashMap<(usize, usize), Vec<Tangle>>) -> Vec<Tangle> {
    if let Some(v) = memo.get(&(c, z)) {
        return v.clone();
    }
    let mut out = Vec::new();
    if z == 0 && c > 0 {
        out.push(Tangle::Int(c as i64));
        out.push(Tangle::Int(-(c as i64)));
    }
    if z == 1 && c == 0 {
        out.push(Tangle::Int(0));
    }
    for cl in 0..=c {
        for zl in 0..=z {
            let (cr, zr) = (c - cl, z - zl);
            if (cl == 0 && zl == 0) || (cr == 0 && zr == 0) {
                continue;
            }
            let l = trees(cl, zl, memo);
            let r = trees(cr, zr, memo);
            for a in &l {
                for b in &r {
                    out.push(Tangle::prod(a.clone(), b.clone()));
                }
            }
        }
    }
    memo.insert((c, z), out.clone());
    out
}

/// Classifies by exhaustion: every tree with at most `max` crossings and
/// `zeros` zero leaves is canonicalized, the smallest crossing count per
/// class is kept and classes are grouped into orbits. Records are sorted
/// like `classify` output, with crossing numbers from the exhaustion.
pub fn brute_force(max: usize, zeros: usize) -> Vec<ClassRecord> {
    let mut memo = HashMap::new();
    let mut best: HashMap<Tangle, usize> = HashMap::new();
    for c in 0..=max {
        for z in 0..=zeros {
            for t in trees(c, z, &mut memo) {
                if let Ok(k) = canonicalize(&t) {
                    let e = best.entry(k).or_insert(c);
                    *e = (*e).min(c);
                }
            }
        }
    }
    let mut orbit_of: HashMap<Tangle, usize> = HashMap::new();
    let mut orbits: Vec<(usize, Tangle)> = Vec::new();
    for (k, &c) in &best {
        let i = match orbit_of.get(k) {
            Some(&i) => i,
            None => {
                let i = orbits.len();
                for (_, x) in canonical_images(k).expect("canonical") {
                    orbit_of.insert(x, i);
                }
                orbits.push((c, k.clone()));
                i
            }
        };
        orbits[i].0 = orbits[i].0.min(c);
    }
    let mut out: Vec<ClassRecord> = orbits
        .into_iter()
        .map(|(c, k)| ClassRecord {
            crossings: c as u32,
            ..record(&k).expect("record")
        })
        .collect();
    out.sort_by_key(|r| {
        (
            r.crossings,
            r.closed_components,
            representative_key(&r.canonical),
        )
    });
    out
}
