//! Orbit classification: candidates are canonicalized, grouped into orbits
//! of the 16-element symmetry group, and summarized by crossing number,
//! closed components and symmetry group.

use std::collections::BTreeMap;
use std::fmt;

use dashmap::DashSet;
use rayon::prelude::*;

use crate::algebra::{orbit16, Tangle, Transform};
use crate::canonical::canonicalize;
use crate::error::{Result, TangleError};
use crate::fraction::{connectivity, fraction, Vhx};
use crate::generate::{alternating, nonalternating, Candidate};
use crate::minimize::minimize;
use crate::notation::emit;

/// Symmetry group of a tangle, named by its abbreviation. Conjugate pairs
/// of groups share a name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryName {
    One,
    NuBar,
    EtaZ,
    Eta,
    Zero,
    MuZ,
    MuRho,
    XyBar,
    ZRhoBar,
    ZBar,
    RhoBar,
    Mu,
    ZRho,
    Z,
    Rho,
    E,
}

/// Which tangles a symmetry group can occur for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryKind {
    /// Mirror symmetries of X-type tangles.
    XOnly,
    /// Mirror symmetries of V- and H-type tangles.
    VhOnly,
    /// Rotations only.
    NonMirror,
}

const RZ: Transform = Transform::RHO_Z;
const RY: Transform = Transform::RHO_Y;
const RX: Transform = Transform::RHO_X;
const MU: Transform = Transform::MU;
const ETA: Transform = Transform::ETA;
const ETA_RZ: Transform = Transform::new(false, 2, true);
const MU_NU: Transform = Transform::new(true, 1, false);
const MU_NU3: Transform = Transform::new(true, 3, false);
const MU_RZ: Transform = Transform::new(true, 2, false);
const MU_RY: Transform = Transform::new(false, 3, true);
const MU_RX: Transform = Transform::new(false, 1, true);

impl SymmetryName {
    pub const ALL: [SymmetryName; 16] = [
        SymmetryName::One,
        SymmetryName::NuBar,
        SymmetryName::EtaZ,
        SymmetryName::Eta,
        SymmetryName::Zero,
        SymmetryName::MuZ,
        SymmetryName::MuRho,
        SymmetryName::XyBar,
        SymmetryName::ZRhoBar,
        SymmetryName::ZBar,
        SymmetryName::RhoBar,
        SymmetryName::Mu,
        SymmetryName::ZRho,
        SymmetryName::Z,
        SymmetryName::Rho,
        SymmetryName::E,
    ];

    /// Non-identity elements of each group; conjugate pairs list both.
    fn groups(self) -> &'static [&'static [Transform]] {
        use SymmetryName::*;
        match self {
            One => &[&[RZ, RY, RX, ETA, ETA_RZ, MU_NU, MU_NU3]],
            NuBar => &[&[RZ, MU_NU, MU_NU3]],
            EtaZ => &[&[RZ, ETA, ETA_RZ]],
            Eta => &[&[ETA], &[ETA_RZ]],
            Zero => &[&[RZ, RY, RX, MU_RZ, MU_RY, MU_RX, MU]],
            MuZ => &[&[RZ, MU_RZ, MU]],
            MuRho => &[&[RY, MU_RY, MU], &[RX, MU_RX, MU]],
            XyBar => &[&[RZ, MU_RY, MU_RX]],
            ZRhoBar => &[&[RY, MU_RZ, MU_RX], &[RX, MU_RZ, MU_RY]],
            ZBar => &[&[MU_RZ]],
            RhoBar => &[&[MU_RY], &[MU_RX]],
            Mu => &[&[MU]],
            ZRho => &[&[RZ, RY, RX]],
            Z => &[&[RZ]],
            Rho => &[&[RY], &[RX]],
            E => &[&[]],
        }
    }

    /// Name of the group with exactly these elements, if it is one of the
    /// groups a tangle can have.
    pub fn from_stabilizer(stab: &[Transform]) -> Option<SymmetryName> {
        let mut have: Vec<Transform> = stab
            .iter()
            .copied()
            .filter(|g| *g != Transform::IDENTITY)
            .collect();
        have.sort();
        have.dedup();
        SymmetryName::ALL.into_iter().find(|name| {
            name.groups().iter().any(|g| {
                let mut g = g.to_vec();
                g.sort();
                g == have
            })
        })
    }

    pub fn order(self) -> usize {
        self.groups()[0].len() + 1
    }

    pub fn kind(self) -> SymmetryKind {
        use SymmetryName::*;
        match self {
            One | NuBar | EtaZ | Eta => SymmetryKind::XOnly,
            ZRho | Z | Rho | E => SymmetryKind::NonMirror,
            _ => SymmetryKind::VhOnly,
        }
    }

    pub fn abbreviation(self) -> &'static str {
        use SymmetryName::*;
        match self {
            One => "𝟙",
            NuBar => "ν̄",
            EtaZ => "ηz",
            Eta => "η",
            Zero => "𝟘",
            MuZ => "μz",
            MuRho => "μρ",
            XyBar => "x̄y",
            ZRhoBar => "z̄ρ",
            ZBar => "z̄",
            RhoBar => "ρ̄",
            Mu => "μ",
            ZRho => "zρ",
            Z => "z",
            Rho => "ρ",
            E => "e",
        }
    }

    pub fn from_abbreviation(s: &str) -> Option<SymmetryName> {
        SymmetryName::ALL
            .into_iter()
            .find(|n| n.abbreviation() == s)
    }
}

impl fmt::Display for SymmetryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

/// Transforms `g` with `canonical(g t) = canonical(t)`.
pub fn stabilizer(t: &Tangle) -> Result<Vec<Transform>> {
    let images = canonical_images(t)?;
    Ok(stabilizer_of(&images))
}

fn stabilizer_of(images: &[(Transform, Tangle)]) -> Vec<Transform> {
    let base = &images[0].1;
    images
        .iter()
        .filter(|(_, c)| c == base)
        .map(|(g, _)| *g)
        .collect()
}

/// Canonical forms of the 16 images of `t`, identity first.
pub fn canonical_images(t: &Tangle) -> Result<Vec<(Transform, Tangle)>> {
    let c = canonicalize(t)?;
    orbit16(&c)
        .into_iter()
        .map(|(g, x)| Ok((g, canonicalize(&x)?)))
        .collect()
}

/// Sort key for representatives: byte order of the emitted text with `-`
/// after the digits.
pub fn representative_key(text: &str) -> Vec<u8> {
    text.bytes()
        .map(|b| if b == b'-' { 0x7f } else { b })
        .collect()
}

/// Number of classes up to equivalence in an orbit with stabilizer `stab`:
/// one if some symmetry lies outside the equivalence subgroup.
pub fn equivalence_classes(stab: &[Transform]) -> u32 {
    if stab.iter().all(|g| g.preserves_equivalence()) {
        2
    } else {
        1
    }
}

/// One orbit of prime tangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub canonical: String,
    pub crossings: u32,
    pub closed_components: u32,
    pub vhx: Vhx,
    pub fraction: String,
    pub symmetry: SymmetryName,
    pub isotopy_classes: u32,
    pub equivalence_classes: u32,
}

impl ClassRecord {
    fn sort_key(&self) -> (u32, u32, Vec<u8>) {
        (
            self.crossings,
            self.closed_components,
            representative_key(&self.canonical),
        )
    }
}

/// Builds the record of the orbit of `t`.
pub fn record(t: &Tangle) -> Result<ClassRecord> {
    let images = canonical_images(t)?;
    record_from_images(&images)
}

fn record_from_images(images: &[(Transform, Tangle)]) -> Result<ClassRecord> {
    let (rep, text) = images
        .iter()
        .map(|(_, c)| (c, emit(c)))
        .min_by_key(|(_, s)| representative_key(s))
        .expect("16 images");
    let stab = stabilizer_of(images);
    let symmetry = SymmetryName::from_stabilizer(&stab).ok_or_else(|| {
        let words: Vec<String> = stab.iter().map(Transform::to_string).collect();
        TangleError::CompositeInput(format!(
            "{text}: unexpected symmetry group {{{}}}",
            words.join(", ")
        ))
    })?;
    let (crossings, _) = minimize(rep)?;
    let (vhx, loops) = connectivity(rep);
    Ok(ClassRecord {
        canonical: text,
        crossings: crossings as u32,
        closed_components: loops,
        vhx,
        fraction: fraction(rep)?.to_string(),
        symmetry,
        isotopy_classes: (16 / stab.len()) as u32,
        equivalence_classes: equivalence_classes(&stab),
    })
}

/// Classifies every prime tangle whose minimal crossing number is at most
/// `max_crossings`. `jobs` bounds the worker threads (0 = all cores).
/// Output is sorted by crossings, closed components and representative.
pub fn classify(max_crossings: u32, jobs: usize) -> Result<Vec<ClassRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| TangleError::Syntax(format!("thread pool: {e}")))?;
    pool.install(|| classify_candidates(&alternating(max_crossings), max_crossings))
}

/// Classifies the orbits reached from `templates` and their
/// non-alternating variants.
pub fn classify_candidates(
    templates: &[Candidate],
    max_crossings: u32,
) -> Result<Vec<ClassRecord>> {
    let seen: DashSet<Tangle> = DashSet::new();
    let found: Vec<Vec<ClassRecord>> = templates
        .par_iter()
        .map(|template| {
            let mut out = Vec::new();
            let variants = nonalternating(template);
            for cand in std::iter::once(template).chain(variants.iter()) {
                let t = cand.tangle();
                let c = match canonicalize(&t) {
                    Ok(c) => c,
                    Err(TangleError::CompositeInput(_)) => continue,
                    Err(e) => return Err(e),
                };
                if seen.contains(&c) {
                    continue;
                }
                let images = canonical_images(&c)?;
                // Racing threads may both report an orbit; the final
                // dedup by representative keeps one.
                let fresh = images
                    .iter()
                    .fold(false, |acc, (_, x)| seen.insert(x.clone()) || acc);
                if !fresh {
                    continue;
                }
                let rec = record_from_images(&images)?;
                if rec.crossings <= max_crossings {
                    out.push(rec);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut records: Vec<ClassRecord> = found.into_iter().flatten().collect();
    records.sort_by_key(ClassRecord::sort_key);
    records.dedup_by(|a, b| a.canonical == b.canonical);
    Ok(records)
}

/// One row of the orbit table: counts for one crossing number.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountRow {
    pub crossings: u32,
    /// Orbits by number of closed components.
    pub by_closed: Vec<u64>,
    pub orbits: u64,
    pub equivalence: u64,
    pub isotopy: u64,
}

impl CountRow {
    fn add(&mut self, r: &ClassRecord) {
        let k = r.closed_components as usize;
        if self.by_closed.len() <= k {
            self.by_closed.resize(k + 1, 0);
        }
        self.by_closed[k] += 1;
        self.orbits += 1;
        self.equivalence += r.equivalence_classes as u64;
        self.isotopy += r.isotopy_classes as u64;
    }
}

/// Orbit counts per crossing number, `0..=max` (rows may be empty).
pub fn count_table<'a>(
    records: impl IntoIterator<Item = &'a ClassRecord>,
    max: u32,
) -> Vec<CountRow> {
    let mut rows: Vec<CountRow> = (0..=max)
        .map(|n| CountRow {
            crossings: n,
            ..Default::default()
        })
        .collect();
    for r in records {
        if r.crossings <= max {
            rows[r.crossings as usize].add(r);
        }
    }
    rows
}

/// Orbit counts per crossing number and symmetry group.
pub fn symmetry_table<'a>(
    records: impl IntoIterator<Item = &'a ClassRecord>,
) -> BTreeMap<u32, BTreeMap<SymmetryName, u64>> {
    let mut out: BTreeMap<u32, BTreeMap<SymmetryName, u64>> = BTreeMap::new();
    for r in records {
        *out.entry(r.crossings)
            .or_default()
            .entry(r.symmetry)
            .or_default() += 1;
    }
    out
}
