//! Published tallies for rows 0-10.

/// Orbits by closed components, then orbit, equivalence and isotopy totals.
pub const ORBITS: [(&[u64], u64, u64, u64); 11] = [
    (&[1], 1, 1, 2),
    (&[1], 1, 1, 2),
    (&[1], 1, 2, 4),
    (&[2], 2, 4, 8),
    (&[4, 2], 6, 11, 22),
    (&[11, 3], 14, 28, 68),
    (&[30, 12, 2], 44, 87, 236),
    (&[86, 46, 4], 136, 270, 880),
    (&[267, 152, 37, 3], 459, 912, 3442),
    (&[844, 608, 129, 4], 1585, 3168, 13900),
    (&[2910, 2202, 611, 81, 3], 5807, 11595, 57488),
];

/// Non-mirror groups in the order zρ, z, ρ, e.
pub const NON_MIRROR: [[u64; 4]; 11] = [
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [2, 0, 0, 0],
    [5, 0, 0, 0],
    [11, 0, 3, 0],
    [28, 4, 11, 0],
    [61, 15, 52, 6],
    [154, 64, 183, 52],
    [352, 227, 675, 329],
    [858, 827, 2289, 1814],
];

/// As `NON_MIRROR`, restricted to tangles without closed components.
pub const NON_MIRROR_OPEN: [[u64; 4]; 11] = [
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [2, 0, 0, 0],
    [4, 0, 0, 0],
    [8, 0, 3, 0],
    [19, 4, 6, 0],
    [38, 8, 34, 6],
    [83, 41, 101, 41],
    [173, 120, 332, 218],
    [373, 391, 1027, 1110],
];

/// Mirror groups in the order 𝟙, ν̄, ηz, η, 𝟘, μz, μρ, x̄y, z̄ρ, z̄, ρ̄, μ.
pub const MIRROR: [[u64; 12]; 11] = [
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0; 12],
    [0; 12],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0; 12],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 3, 0, 0, 0, 3, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 2, 0, 9, 3, 4, 0],
];

/// As `MIRROR`, restricted to tangles without closed components.
pub const MIRROR_OPEN: [[u64; 12]; 11] = [
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0; 12],
    [0; 12],
    [0; 12],
    [0; 12],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0; 12],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 3, 0],
];

/// Mutant pairs of seven crossings, in compact notation.
pub const MUTANTS: [(&str, &str); 4] = [
    ("3(2(20))", "2(3(20))"),
    ("3(2(-20))", "2(3(-20))"),
    ("3(-2(-20))", "-2(3(-20))"),
    ("21(2(20))", "2(21(20))"),
];

use tanglekit::classify::{count_table, ClassRecord, SymmetryName};

/// Differences between the orbit table of `records` and `ORBITS`, rows
/// `0..=max`.
pub fn orbit_mismatches(records: &[ClassRecord], max: u32) -> Vec<String> {
    let mut out = Vec::new();
    for row in count_table(records, max) {
        let (closed, orbits, equiv, iso) = ORBITS[row.crossings as usize];
        let got = (
            row.by_closed.as_slice(),
            row.orbits,
            row.equivalence,
            row.isotopy,
        );
        if got != (closed, orbits, equiv, iso) {
            out.push(format!(
                "row {}: got {got:?}, expected {:?}",
                row.crossings,
                (closed, orbits, equiv, iso)
            ));
        }
    }
    out
}

/// Differences between the symmetry groups of `records` and the four
/// symmetry tables, rows `0..=max`.
pub fn symmetry_mismatches(records: &[ClassRecord], max: u32) -> Vec<String> {
    let mut out = Vec::new();
    for open in [false, true] {
        let mut got = vec![[0u64; 16]; max as usize + 1];
        for r in records
            .iter()
            .filter(|r| r.crossings <= max && (!open || r.closed_components == 0))
        {
            let i = SymmetryName::ALL
                .iter()
                .position(|s| *s == r.symmetry)
                .unwrap();
            got[r.crossings as usize][i] += 1;
        }
        let (mirror, non_mirror) = if open {
            (&MIRROR_OPEN, &NON_MIRROR_OPEN)
        } else {
            (&MIRROR, &NON_MIRROR)
        };
        for (n, row) in got.iter().enumerate() {
            let expect: Vec<u64> = mirror[n].iter().chain(&non_mirror[n]).copied().collect();
            if row[..] != expect[..] {
                let label = if open {
                    "without closed components"
                } else {
                    "all"
                };
                out.push(format!(
                    "row {n} ({label}): got {row:?}, expected {expect:?}"
                ));
            }
        }
    }
    out
}
