//! Simplicial chain complexes and reduced homology dimensions.
//!
//! Chain complexes are augmented: the empty face generates a chain group in
//! degree -1, so the irrelevant complex {∅} has β̃₋₁ = 1 and the conventions
//! for `H̃` of full subcomplexes fall out uniformly.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{
    rank, reduce_columns, FieldOps, FieldSpec, Matrix, PrimeField, Rationals, SparseCol,
};

/// Augmented chain complex of a set of faces. `bases[c]` holds the sorted
/// masks of the faces with `c` vertices (dimension `c - 1`), and
/// `boundaries[c]` maps chains of cardinality `c` to cardinality `c - 1`.
pub(crate) struct ChainComplex {
    pub bases: Vec<Vec<u64>>,
    pub boundaries: Vec<Matrix>,
}

impl ChainComplex {
    /// Builds the chain complex of a subset-closed face list (which must
    /// contain the empty face).
    pub fn from_masks(masks: &[u64]) -> ChainComplex {
        let max_card = masks
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let mut bases: Vec<Vec<u64>> = vec![Vec::new(); max_card + 1];
        for &m in masks {
            bases[m.count_ones() as usize].push(m);
        }
        for b in &mut bases {
            b.sort_unstable();
        }
        let mut boundaries = vec![Matrix::zero(0, 0)];
        for c in 1..=max_card {
            let mut mat = Matrix::zero(bases[c - 1].len(), bases[c].len());
            for (col, &face) in bases[c].iter().enumerate() {
                let mut bits = face;
                let mut sign = 1i64;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    let sub = face & !low;
                    let row = bases[c - 1]
                        .binary_search(&sub)
                        .expect("face list not closed");
                    mat.set(row, col, sign);
                    sign = -sign;
                    bits &= bits - 1;
                }
            }
            boundaries.push(mat);
        }
        ChainComplex { bases, boundaries }
    }

    pub fn max_card(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn boundary(&self, c: usize) -> Option<&Matrix> {
        self.boundaries.get(c).filter(|_| c >= 1)
    }
}

/// Reduced Betti numbers β̃_n for -1 ≤ n ≤ dim, stored with the degree
/// shifted by one (index `n + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBettiVector {
    betti: Vec<usize>,
}

impl ReducedBettiVector {
    pub(crate) fn from_shifted(betti: Vec<usize>) -> ReducedBettiVector {
        ReducedBettiVector { betti }
    }

    /// β̃_n; zero outside the stored range.
    pub fn get(&self, n: i64) -> usize {
        if n < -1 {
            return 0;
        }
        self.betti.get((n + 1) as usize).copied().unwrap_or(0)
    }

    /// The reduced total Betti number tb̃ = Σ β̃_n.
    pub fn total(&self) -> usize {
        self.betti.iter().sum()
    }

    /// The nonzero entries as (degree, dimension) pairs.
    pub fn entries(&self) -> Vec<(i64, usize)> {
        self.betti
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(i, &b)| (i as i64 - 1, b))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }
}

/// Homology-level classification of a complex per the field in use:
/// acyclic, a homology n-sphere (β̃_n = 1 and nothing else; {∅} is the
/// (-1)-sphere), or anything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomotopyProfile {
    Acyclic,
    HomologySphere(i64),
    Other(ReducedBettiVector),
}

/// The augmented boundary operators `[∂₀, ∂₁, ..., ∂_dim]` of `K`, where
/// `∂_n` maps `n`-chains to `(n-1)`-chains over the sorted face bases; `∂₀`
/// is the 1 × m augmentation. Entries are independent of the field.
pub fn boundary_matrices(k: &SimplicialComplex) -> Vec<Matrix> {
    let chain = ChainComplex::from_masks(&k.face_masks());
    chain.boundaries.into_iter().skip(1).collect()
}

fn betti_generic<F: FieldOps>(f: &F, chain: &ChainComplex) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=chain.max_card())
        .map(|c| match chain.boundary(c) {
            Some(b) => reduce_columns(f, b.sparse_columns(f), false).rank,
            None => 0,
        })
        .collect();
    (0..=chain.max_card())
        .map(|c| {
            let above = ranks.get(c + 1).copied().unwrap_or(0);
            chain.bases[c].len() - ranks[c] - above
        })
        .collect()
}

pub(crate) fn betti_of_masks(masks: &[u64], field: &FieldSpec) -> Vec<usize> {
    let chain = ChainComplex::from_masks(masks);
    match field {
        FieldSpec::Rationals => betti_generic(&Rationals, &chain),
        FieldSpec::PrimeField(p) => betti_generic(&PrimeField { p: *p }, &chain),
    }
}

/// β̃_n(K; 𝔽) for all degrees, by exact elimination of the augmented chain
/// complex.
pub fn reduced_betti(k: &SimplicialComplex, field: &FieldSpec) -> ReducedBettiVector {
    ReducedBettiVector::from_shifted(betti_of_masks(&k.face_masks(), field))
}

pub fn homotopy_profile(k: &SimplicialComplex, field: &FieldSpec) -> HomotopyProfile {
    profile_of(&reduced_betti(k, field))
}

pub(crate) fn profile_of(b: &ReducedBettiVector) -> HomotopyProfile {
    let nonzero = b.entries();
    match nonzero.as_slice() {
        [] => HomotopyProfile::Acyclic,
        [(n, 1)] => HomotopyProfile::HomologySphere(*n),
        _ => HomotopyProfile::Other(b.clone()),
    }
}

/// Whether the inclusion of the face list `sub` into `amb` (both lists of
/// masks over one ambient ground set, subset-closed, `sub ⊆ amb`) induces a
/// surjection on reduced homology in every degree.
pub(crate) fn inclusion_surjective(sub: &[u64], amb: &[u64], field: &FieldSpec) -> bool {
    match field {
        FieldSpec::Rationals => inclusion_surjective_generic(&Rationals, sub, amb),
        FieldSpec::PrimeField(p) => inclusion_surjective_generic(&PrimeField { p: *p }, sub, amb),
    }
}

fn inclusion_surjective_generic<F: FieldOps>(f: &F, sub: &[u64], amb: &[u64]) -> bool {
    let y = ChainComplex::from_masks(amb);
    let l = ChainComplex::from_masks(sub);
    let y_ranks: Vec<usize> = (0..=y.max_card())
        .map(|c| match y.boundary(c) {
            Some(b) => reduce_columns(f, b.sparse_columns(f), false).rank,
            None => 0,
        })
        .collect();
    for c in 0..=y.max_card() {
        let rank_above = y_ranks.get(c + 1).copied().unwrap_or(0);
        let cycles_y = y.bases[c].len() - y_ranks[c];
        if cycles_y == rank_above {
            continue; // H̃_{c-1}(Y) = 0, nothing to hit
        }
        // kernel basis of ∂_c on the subcomplex, as combinations of faces
        let l_kernel: Vec<SparseCol<F::Elem>> = if c <= l.max_card() {
            match l.boundary(c) {
                Some(b) => reduce_columns(f, b.sparse_columns(f), true).kernel,
                None => vec![vec![(0u32, f.embed(1))]], // C₀ is spanned by ∅
            }
        } else {
            Vec::new()
        };
        // map kernel vectors into Y's face basis, stack with the boundaries
        let mut stacked: Vec<SparseCol<F::Elem>> = Vec::new();
        for kv in &l_kernel {
            let mapped: SparseCol<F::Elem> = kv
                .iter()
                .map(|(idx, e)| {
                    let mask = l.bases[c][*idx as usize];
                    let row = y.bases[c].binary_search(&mask).expect("not a subcomplex");
                    (row as u32, e.clone())
                })
                .collect();
            stacked.push(mapped);
        }
        if let Some(b) = y.boundary(c + 1) {
            stacked.extend(b.sparse_columns(f));
        }
        if reduce_columns(f, stacked, false).rank != cycles_y {
            return false;
        }
    }
    true
}

/// Whether the inclusion of `sub` into `amb` (given by the vertex map
/// `embedding`, 1-based) induces a surjection `H̃_*(sub) → H̃_*(amb)` in every
/// degree.
pub fn induced_surjective(
    sub: &SimplicialComplex,
    amb: &SimplicialComplex,
    embedding: &[usize],
    field: &FieldSpec,
) -> Result<bool> {
    if embedding.len() != sub.m() {
        return Err(Error::BadVertex {
            vertex: embedding.len(),
            m: sub.m(),
        });
    }
    let mut seen = 0u64;
    for &w in embedding {
        if w < 1 || w > amb.m() {
            return Err(Error::BadVertex {
                vertex: w,
                m: amb.m(),
            });
        }
        if seen & (1 << (w - 1)) != 0 {
            return Err(Error::BadVertex {
                vertex: w,
                m: amb.m(),
            });
        }
        seen |= 1 << (w - 1);
    }
    let mut mapped: Vec<u64> = sub
        .face_masks()
        .into_iter()
        .map(|mask| {
            let mut out = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize + 1;
                out |= 1 << (embedding[v - 1] - 1);
                bits &= bits - 1;
            }
            out
        })
        .collect();
    mapped.sort_unstable();
    let amb_faces = amb.face_masks();
    for f in &mapped {
        if amb_faces.binary_search(f).is_err() {
            return Err(Error::NotASubcomplex);
        }
    }
    Ok(inclusion_surjective(&mapped, &amb_faces, field))
}

/// Ranks of all augmented boundary operators over `field`; index `n` holds
/// the rank of `∂_n`.
pub fn boundary_ranks(k: &SimplicialComplex, field: &FieldSpec) -> Vec<usize> {
    boundary_matrices(k)
        .iter()
        .map(|b| rank(b, field))
        .collect()
}
