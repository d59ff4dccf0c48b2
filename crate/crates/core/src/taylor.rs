//! Brute-force bigraded Betti numbers from the Taylor complex of the
//! Stanley-Reisner ideal. This route never looks at full subcomplexes, so it
//! is definitionally independent of the Hochster engine and serves as its
//! oracle.
//!
//! The Taylor complex has one cell per subset of the minimal generators
//! (the minimal non-faces of `K`); tensoring the resolution with 𝔽 kills
//! every boundary coefficient except where dropping a generator leaves the
//! multidegree unchanged, and the complex splits by squarefree multidegree.
//! The homology of the strand of `μ` in homological degree `i` contributes to
//! β^{-i,2j} with `j = |μ|`.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hochster::{bigraded_betti, BettiTable};
use crate::linalg::{reduce_columns, FieldOps, FieldSpec, PrimeField, Rationals};

/// Cap on the number of minimal generators (2^g cells are enumerated).
pub const MAX_GENERATORS: usize = 20;

/// Prime used to certify rational strand homology; see `strand_betti_q`.
const CERT_PRIME: u64 = 2_147_483_647;

/// One strand of the Taylor complex: the cells (generator subsets) sharing a
/// fixed squarefree multidegree, grouped by homological degree.
struct Strand {
    multidegree: u64,
    /// cells_by_degree[d - d_min] lists the cells with d chosen generators
    cells_by_degree: Vec<Vec<u32>>,
    d_min: usize,
}

type IntCol = Vec<(u32, i64)>;

impl Strand {
    fn degree_count(&self) -> usize {
        self.cells_by_degree.len()
    }

    /// Boundary columns from degree `d` to `d - 1` (entries ±1), where `d` is
    /// absolute (number of generators in the cell).
    fn columns(&self, d: usize, lcms: &[u64]) -> Vec<IntCol> {
        let idx = d - self.d_min;
        let sources = &self.cells_by_degree[idx];
        if idx == 0 {
            return sources.iter().map(|_| Vec::new()).collect();
        }
        let targets = &self.cells_by_degree[idx - 1];
        sources
            .iter()
            .map(|&cell| {
                let mut col: IntCol = Vec::new();
                let mut bits = cell;
                let mut sign = 1i64;
                while bits != 0 {
                    let t = bits.trailing_zeros();
                    let dropped = cell & !(1 << t);
                    if lcms[dropped as usize] == self.multidegree {
                        let row = targets.binary_search(&dropped).expect("cell missing");
                        col.push((row as u32, sign));
                    }
                    sign = -sign;
                    bits &= bits - 1;
                }
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect()
    }
}

fn strand_rank<F: FieldOps>(f: &F, cols: &[IntCol]) -> usize {
    let converted: Vec<Vec<(u32, F::Elem)>> = cols
        .iter()
        .map(|c| c.iter().map(|&(r, v)| (r, f.embed(v))).collect())
        .collect();
    reduce_columns(f, converted, false).rank
}

/// Betti numbers of one strand over 𝔽_p, indexed from `d_min`.
fn strand_betti_p(strand: &Strand, lcms: &[u64], p: u64) -> Vec<usize> {
    let f = PrimeField { p };
    let n = strand.degree_count();
    let ranks: Vec<usize> = (0..n)
        .map(|i| strand_rank(&f, &strand.columns(strand.d_min + i, lcms)))
        .collect();
    (0..n)
        .map(|i| {
            let above = ranks.get(i + 1).copied().unwrap_or(0);
            strand.cells_by_degree[i].len() - ranks[i] - above
        })
        .collect()
}

/// Betti numbers of one strand over ℚ.
///
/// Integer matrices satisfy rank_ℚ ≥ rank_{𝔽_p}, so the 𝔽_p Betti numbers
/// bound the rational ones from above degree by degree while the chain
/// relations fix their alternating sum. When no two adjacent degrees are both
/// nonzero over 𝔽_p, the only consistent rational answer is the 𝔽_p one;
/// otherwise fall back to exact rational elimination.
fn strand_betti_q(strand: &Strand, lcms: &[u64]) -> Vec<usize> {
    let modp = strand_betti_p(strand, lcms, CERT_PRIME);
    let ambiguous = modp.windows(2).any(|w| w[0] > 0 && w[1] > 0);
    if !ambiguous {
        return modp;
    }
    let f = Rationals;
    let n = strand.degree_count();
    let ranks: Vec<usize> = (0..n)
        .map(|i| strand_rank(&f, &strand.columns(strand.d_min + i, lcms)))
        .collect();
    (0..n)
        .map(|i| {
            let above = ranks.get(i + 1).copied().unwrap_or(0);
            strand.cells_by_degree[i].len() - ranks[i] - above
        })
        .collect()
}

/// The minimal generators of the Stanley-Reisner ideal of `K`: its minimal
/// non-faces, in a fixed order.
pub fn ideal_generators(k: &SimplicialComplex) -> Vec<crate::complex::Face> {
    k.minimal_non_faces()
}

fn build_strands(gens: &[crate::complex::Face]) -> (Vec<Strand>, Vec<u64>) {
    let g = gens.len();
    let mut lcms = vec![0u64; 1 << g];
    for s in 1..(1u32 << g) {
        let low = s.trailing_zeros() as usize;
        lcms[s as usize] = lcms[(s & (s - 1)) as usize] | gens[low].mask();
    }
    let mut groups: HashMap<u64, Vec<u32>> = HashMap::new();
    for s in 0..(1u32 << g) {
        groups.entry(lcms[s as usize]).or_default().push(s);
    }
    let mut strands = Vec::with_capacity(groups.len());
    for (mu, mut cells) in groups {
        cells.sort_unstable_by_key(|c| (c.count_ones(), *c));
        let d_min = cells[0].count_ones() as usize;
        let d_max = cells.last().unwrap().count_ones() as usize;
        let mut by_degree = vec![Vec::new(); d_max - d_min + 1];
        for c in cells {
            by_degree[c.count_ones() as usize - d_min].push(c);
        }
        strands.push(Strand {
            multidegree: mu,
            cells_by_degree: by_degree,
            d_min,
        });
    }
    strands.sort_by_key(|s| s.multidegree);
    (strands, lcms)
}

/// Bigraded Betti numbers computed by tensoring the Taylor resolution with 𝔽
/// and taking strand homology; independent of Hochster's formula.
pub fn taylor_betti(k: &SimplicialComplex, field: &FieldSpec) -> Result<BettiTable> {
    let gens = ideal_generators(k);
    if gens.len() > MAX_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: gens.len(),
            max: MAX_GENERATORS,
        });
    }
    let (strands, lcms) = build_strands(&gens);
    let mut table = BettiTable::new(k.m(), field.clone());
    for strand in &strands {
        let betti = match field {
            FieldSpec::Rationals => strand_betti_q(strand, &lcms),
            FieldSpec::PrimeField(p) => strand_betti_p(strand, &lcms, *p),
        };
        let j = strand.multidegree.count_ones() as usize;
        for (offset, count) in betti.into_iter().enumerate() {
            if count > 0 {
                table.add(strand.d_min + offset, j, count as u64);
            }
        }
    }
    Ok(table)
}

/// A single disagreement between the Hochster engine and the Taylor oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub i: usize,
    pub two_j: usize,
    pub hochster: u64,
    pub taylor: u64,
}

/// Runs both engines and lists every (i, 2j) where they differ; empty on
/// agreement.
pub fn oracle_diff(k: &SimplicialComplex, field: &FieldSpec) -> Result<Vec<Disagreement>> {
    let h = bigraded_betti(k, field)?;
    let t = taylor_betti(k, field)?;
    let mut keys: Vec<(usize, usize)> = h
        .entries()
        .map(|(i, j, _)| (i, j))
        .chain(t.entries().map(|(i, j, _)| (i, j)))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    Ok(keys
        .into_iter()
        .filter_map(|(i, j)| {
            let (hv, tv) = (h.get(i, j), t.get(i, j));
            (hv != tv).then_some(Disagreement {
                i,
                two_j: 2 * j,
                hochster: hv,
                taylor: tv,
            })
        })
        .collect())
}
