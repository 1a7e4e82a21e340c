//! Newline-delimited JSON record files.

use std::io::{BufRead, Write};

use anyhow::{anyhow, Context, Result};
use serde::{Deserialize, Serialize};
use tanglekit::classify::{ClassRecord, SymmetryName};
use tanglekit::fraction::Vhx;

/// One line of a record file; field order is the key order on disk.
#[derive(Debug, Serialize, Deserialize)]
struct Line {
    canonical: String,
    crossings: u32,
    closed_components: u32,
    vhx: String,
    fraction: String,
    symmetry: String,
    isotopy_classes: u32,
    equivalence_classes: u32,
}

impl From<&ClassRecord> for Line {
    fn from(r: &ClassRecord) -> Line {
        Line {
            canonical: r.canonical.clone(),
            crossings: r.crossings,
            closed_components: r.closed_components,
            vhx: r.vhx.to_string(),
            fraction: r.fraction.clone(),
            symmetry: r.symmetry.abbreviation().to_string(),
            isotopy_classes: r.isotopy_classes,
            equivalence_classes: r.equivalence_classes,
        }
    }
}

impl TryFrom<Line> for ClassRecord {
    type Error = anyhow::Error;

    fn try_from(l: Line) -> Result<ClassRecord> {
        let vhx = match l.vhx.as_str() {
            "H" => Vhx::H,
            "V" => Vhx::V,
            "X" => Vhx::X,
            other => return Err(anyhow!("unknown connectivity type {other:?}")),
        };
        let symmetry = SymmetryName::from_abbreviation(&l.symmetry)
            .ok_or_else(|| anyhow!("unknown symmetry group {:?}", l.symmetry))?;
        Ok(ClassRecord {
            canonical: l.canonical,
            crossings: l.crossings,
            closed_components: l.closed_components,
            vhx,
            fraction: l.fraction,
            symmetry,
            isotopy_classes: l.isotopy_classes,
            equivalence_classes: l.equivalence_classes,
        })
    }
}

pub fn write_records<'a>(
    out: &mut impl Write,
    records: impl IntoIterator<Item = &'a ClassRecord>,
) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, &Line::from(r))?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_records(input: impl BufRead) -> Result<Vec<ClassRecord>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: Line =
            serde_json::from_str(&line).with_context(|| format!("record on line {}", i + 1))?;
        out.push(
            ClassRecord::try_from(parsed).with_context(|| format!("record on line {}", i + 1))?,
        );
    }
    Ok(out)
}
