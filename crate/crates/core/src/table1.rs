//! The golden census fixture: all weakly tight complexes on at most five
//! vertices, with f-vectors and mdim values. Comparison against an enumerated
//! census goes through canonical keys, so any labeling of the same
//! isomorphism class passes.

use std::collections::BTreeMap;

use crate::complex::{FVector, IsoClassKey, SimplicialComplex};
use crate::enumerate::Census;
use crate::error::{Error, Result};

pub const GOLDEN: &str = include_str!("../fixtures/table1.golden");

#[derive(Clone, Debug)]
pub struct GoldenEntry {
    pub label: String,
    pub complex: SimplicialComplex,
    pub f_vector: FVector,
    pub mdim: i64,
}

/// Parses a golden fixture (the embedded one by default), verifying that the
/// listed f-vector and mdim match the facets of every row.
pub fn parse_golden(text: &str) -> Result<Vec<GoldenEntry>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(Error::Parse(format!(
                "golden line {}: expected 4 tab-separated fields",
                lineno + 1
            )));
        }
        let complex: SimplicialComplex = fields[1].parse()?;
        let f_vector = parse_f_vector(fields[2])?;
        let mdim: i64 = fields[3]
            .parse()
            .map_err(|_| Error::Parse(format!("golden line {}: bad mdim", lineno + 1)))?;
        if complex.f_vector() != f_vector || complex.mdim() != mdim {
            return Err(Error::Parse(format!(
                "golden line {}: facets disagree with listed f-vector/mdim",
                lineno + 1
            )));
        }
        out.push(GoldenEntry {
            label: fields[0].to_string(),
            complex,
            f_vector,
            mdim,
        });
    }
    Ok(out)
}

fn parse_f_vector(s: &str) -> Result<FVector> {
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("bad f-vector `{s}`")))?;
    let counts = inner
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<usize>, _>>()
        .map_err(|_| Error::Parse(format!("bad f-vector `{s}`")))?;
    Ok(FVector(counts))
}

pub fn golden_entries() -> Vec<GoldenEntry> {
    parse_golden(GOLDEN).expect("embedded fixture is well formed")
}

/// Diffs an enumerated census against a golden list: every golden class must
/// be enumerated with the same f-vector and mdim, and nothing extra may
/// appear at the covered vertex counts. Returns human-readable mismatches.
pub fn diff_census(census: &Census, golden: &[GoldenEntry]) -> Vec<String> {
    let mut mismatches = Vec::new();
    let mut golden_by_key: BTreeMap<IsoClassKey, &GoldenEntry> = BTreeMap::new();
    let mut max_m = 0;
    for g in golden {
        max_m = max_m.max(g.complex.m());
        let key = g
            .complex
            .canonical_key()
            .expect("golden complexes are small");
        if golden_by_key.insert(key, g).is_some() {
            mismatches.push(format!("golden {}: duplicate isomorphism class", g.label));
        }
    }
    let mut seen: BTreeMap<IsoClassKey, ()> = BTreeMap::new();
    for m in 1..=max_m {
        for e in census.entries(m) {
            match golden_by_key.get(&e.key) {
                None => mismatches.push(format!(
                    "enumerated {} is not in the golden census",
                    e.complex
                )),
                Some(g) => {
                    seen.insert(e.key.clone(), ());
                    if g.f_vector != e.f_vector {
                        mismatches.push(format!(
                            "{}: f-vector {} enumerated vs {} golden",
                            g.label, e.f_vector, g.f_vector
                        ));
                    }
                    if g.mdim != e.mdim {
                        mismatches.push(format!(
                            "{}: mdim {} enumerated vs {} golden",
                            g.label, e.mdim, g.mdim
                        ));
                    }
                }
            }
        }
    }
    for (key, g) in &golden_by_key {
        if !seen.contains_key(key) {
            mismatches.push(format!("golden {} was not enumerated", g.label));
        }
    }
    mismatches
}
