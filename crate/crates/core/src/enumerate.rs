//! Weakly tight germs, the cone-and-glue extension, isomorph-free enumeration
//! of all weakly tight complexes, essential germ filtrations, and exhaustive
//! D̃-minimization over the complexes of fixed dimension.
//!
//! The enumeration walks levels upward: every weakly tight complex on `m`
//! vertices arises as `K = (v * L) ∪_L (Y * Δ^[r])` from an essential wt-germ
//! `(Y, L)` on `m - r - 1` vertices, so it suffices to enumerate essential
//! subcomplex candidates inside each census member and extend. Candidate
//! pairs are screened by the cheap Cond-I test first; the expensive
//! membership test is either the D̃ shortcut (default) or the full Cond-II
//! homology-surjection check (verification mode). Isomorph rejection happens
//! at every extension through canonical keys.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::complex::{FVector, Face, IsoClassKey, SimplicialComplex, VertexId, MAX_CANONICAL_M};
use crate::error::{Error, Result};
use crate::hochster::{is_weakly_tight, total_betti};
use crate::homology::inclusion_surjective;
use crate::linalg::FieldSpec;

/// Enumeration cap for the census and for exhaustive universe generation.
pub const MAX_ENUM_M: usize = 6;

/// Cap for labeled universe generation (the antichain count explodes beyond).
pub const MAX_UNIVERSE_M: usize = 5;

// ---------------------------------------------------------------------------
// universe generation
// ---------------------------------------------------------------------------

/// Every labeled simplicial complex with vertex set exactly `[m]`
/// (facet antichains covering `[m]`); `m = 0` yields `{∅}`.
pub fn all_complexes_labeled(m: usize) -> Vec<SimplicialComplex> {
    assert!(
        m <= MAX_UNIVERSE_M,
        "labeled universe capped at m = {MAX_UNIVERSE_M}"
    );
    if m == 0 {
        return vec![SimplicialComplex::irrelevant()];
    }
    let masks: Vec<u64> = (1..(1u64 << m)).collect();
    let full = (1u64 << m) - 1;
    let mut out = Vec::new();
    let mut chosen: Vec<u64> = Vec::new();
    antichain_dfs(&masks, 0, &mut chosen, &mut |antichain| {
        if !antichain.is_empty() && antichain.iter().fold(0, |acc, &f| acc | f) == full {
            let faces: Vec<Face> = antichain.iter().map(|&f| Face::from_mask(f)).collect();
            out.push(SimplicialComplex::from_facets(m, &faces).expect("valid by construction"));
        }
    });
    out
}

fn antichain_dfs(masks: &[u64], i: usize, chosen: &mut Vec<u64>, out: &mut impl FnMut(&[u64])) {
    if i == masks.len() {
        out(chosen);
        return;
    }
    antichain_dfs(masks, i + 1, chosen, out);
    // masks are ascending, so earlier choices can only be subsets of masks[i]
    if chosen.iter().all(|&c| c & !masks[i] != 0) {
        chosen.push(masks[i]);
        antichain_dfs(masks, i + 1, chosen, out);
        chosen.pop();
    }
}

/// One representative per isomorphism class of complexes on exactly `[m]`.
pub fn all_complexes_reps(m: usize) -> Vec<SimplicialComplex> {
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for k in all_complexes_labeled(m) {
        let key = k.canonical_key().expect("m is small");
        if seen.insert(key) {
            reps.push(k);
        }
    }
    reps
}

/// Representatives of Σ(m, d): complexes on `[m]` of dimension exactly `d`,
/// up to isomorphism. Σ(0, -1) consists of `{∅}` alone.
pub fn sigma_reps(m: usize, d: i64) -> Result<Vec<SimplicialComplex>> {
    if m > MAX_UNIVERSE_M {
        return Err(Error::TooLarge {
            m,
            max: MAX_UNIVERSE_M,
        });
    }
    if m == 0 {
        return Ok(if d == -1 {
            vec![SimplicialComplex::irrelevant()]
        } else {
            Vec::new()
        });
    }
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for k in all_complexes_labeled(m) {
        if k.dim() != d {
            continue;
        }
        let key = k.canonical_key()?;
        if seen.insert(key) {
            reps.push(k);
        }
    }
    Ok(reps)
}

// ---------------------------------------------------------------------------
// wt-germs
// ---------------------------------------------------------------------------

/// A pair `(Y, L)` of weakly tight complexes with `L ⊆ Y`, satisfying Cond-I
/// and the homology-surjection Cond-II; essential when `V(L) = V(Y)`.
#[derive(Clone, Debug)]
pub struct WtGerm {
    pub base: SimplicialComplex,
    /// Facets of `L`, as faces of `base`.
    pub sub_facets: Vec<Face>,
    pub essential: bool,
}

/// Normalizes a subcomplex facet list: checks every facet is a face of `y`,
/// keeps maximal elements, and represents `{∅}` as `[∅]`.
fn normalize_sub(y: &SimplicialComplex, l_facets: &[Face]) -> Result<Vec<Face>> {
    for f in l_facets {
        if !y.is_face(*f) {
            return Err(Error::NotASubcomplex);
        }
    }
    let mut kept: Vec<Face> = Vec::new();
    for (i, f) in l_facets.iter().enumerate() {
        let dominated = l_facets
            .iter()
            .enumerate()
            .any(|(t, g)| f.is_subset_of(*g) && (f != g || t < i));
        if !dominated {
            kept.push(*f);
        }
    }
    kept.sort();
    kept.dedup();
    if kept.is_empty() {
        kept.push(Face::EMPTY);
    }
    Ok(kept)
}

fn sub_support(l_facets: &[Face]) -> Face {
    l_facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
}

/// Downward closure of the subcomplex facets, as sorted ambient masks.
fn sub_closure(l_facets: &[Face]) -> Vec<u64> {
    let mut set = BTreeSet::new();
    for f in l_facets {
        let mut sub = f.mask();
        loop {
            set.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f.mask();
        }
    }
    set.into_iter().collect()
}

/// The subcomplex as a standalone complex on its own vertex support.
fn sub_standalone(l_facets: &[Face]) -> SimplicialComplex {
    let support = sub_support(l_facets);
    if support.is_empty() {
        return SimplicialComplex::irrelevant();
    }
    let compressed: Vec<Face> = l_facets.iter().map(|f| f.compress_into(support)).collect();
    SimplicialComplex::from_facets(support.card(), &compressed).expect("support covers itself")
}

fn mdim_of_antichain(l_facets: &[Face]) -> i64 {
    l_facets.iter().map(|f| f.dim()).min().unwrap_or(-1)
}

/// Cond-I: `L` weakly tight with `mdim(L) < mdim(Y)`, or `L = Y`.
fn cond_i(y: &SimplicialComplex, l_facets: &[Face], field: &FieldSpec) -> Result<bool> {
    if l_facets == y.facets() {
        return Ok(true);
    }
    if mdim_of_antichain(l_facets) >= y.mdim() {
        return Ok(false);
    }
    is_weakly_tight(&sub_standalone(l_facets), field)
}

/// Cond-II: for every `J ⊆ V(Y)` the inclusion `L|_J ↪ Y|_J` is surjective on
/// reduced homology.
fn cond_ii(y: &SimplicialComplex, l_facets: &[Face], field: &FieldSpec) -> bool {
    let y_faces = y.face_masks();
    let l_faces = sub_closure(l_facets);
    for j in 0..(1u64 << y.m()) {
        let yj: Vec<u64> = y_faces.iter().copied().filter(|f| f & !j == 0).collect();
        let lj: Vec<u64> = l_faces.iter().copied().filter(|f| f & !j == 0).collect();
        if !inclusion_surjective(&lj, &yj, field) {
            return false;
        }
    }
    true
}

/// Definition-chasing wt-germ predicate: both complexes weakly tight, Cond-I,
/// and Cond-II over every vertex subset.
pub fn is_wt_germ(y: &SimplicialComplex, l_facets: &[Face], field: &FieldSpec) -> Result<bool> {
    let l = normalize_sub(y, l_facets)?;
    if !is_weakly_tight(y, field)? {
        return Ok(false);
    }
    if !cond_i(y, &l, field)? {
        return Ok(false);
    }
    Ok(cond_ii(y, &l, field))
}

/// Canonical form of a germ pair under simultaneous vertex permutations.
pub fn pair_canonical_key(
    y: &SimplicialComplex,
    l_facets: &[Face],
) -> Result<(usize, Vec<u64>, Vec<u64>)> {
    use itertools::Itertools;
    if y.m() > MAX_CANONICAL_M {
        return Err(Error::TooLarge {
            m: y.m(),
            max: MAX_CANONICAL_M,
        });
    }
    let mut best: Option<(Vec<u64>, Vec<u64>)> = None;
    for perm in (0..y.m()).permutations(y.m()) {
        let map = |f: &Face| -> u64 {
            let mut out = 0u64;
            for v in f.vertices() {
                out |= 1 << perm[v - 1];
            }
            out
        };
        let mut ys: Vec<u64> = y.facets().iter().map(&map).collect();
        let mut ls: Vec<u64> = l_facets.iter().map(&map).collect();
        ys.sort_unstable();
        ls.sort_unstable();
        let cand = (ys, ls);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    let (ys, ls) = best.unwrap_or((vec![0], vec![0]));
    Ok((y.m(), ys, ls))
}

type PairKey = (usize, Vec<u64>, Vec<u64>);

/// Essential wt-germ predicate via the recursive criterion: both complexes
/// weakly tight with full vertex support, the top-level inclusion surjective
/// on reduced homology, and every single-vertex restriction essential.
/// Memoized on pair canonical keys; agrees with `is_wt_germ` wherever both
/// apply.
pub fn is_essential_wt_germ(
    y: &SimplicialComplex,
    l_facets: &[Face],
    field: &FieldSpec,
) -> Result<bool> {
    let l = normalize_sub(y, l_facets)?;
    if sub_support(&l) != y.vertex_set() {
        return Err(Error::VertexSetMismatch);
    }
    let mut memo: HashMap<PairKey, bool> = HashMap::new();
    essential_recursive(y, &l, field, &mut memo)
}

fn essential_recursive(
    y: &SimplicialComplex,
    l_facets: &[Face],
    field: &FieldSpec,
    memo: &mut HashMap<PairKey, bool>,
) -> Result<bool> {
    if y.m() == 0 {
        return Ok(true);
    }
    let key = pair_canonical_key(y, l_facets)?;
    if let Some(&hit) = memo.get(&key) {
        return Ok(hit);
    }
    let result = (|| -> Result<bool> {
        if !is_weakly_tight(y, field)? {
            return Ok(false);
        }
        let l_standalone = SimplicialComplex::from_facets(y.m(), l_facets)
            .expect("essential subcomplex covers V(Y)");
        if !is_weakly_tight(&l_standalone, field)? {
            return Ok(false);
        }
        if !cond_i(y, l_facets, field)? {
            return Ok(false);
        }
        if !inclusion_surjective(&sub_closure(l_facets), &y.face_masks(), field) {
            return Ok(false);
        }
        for v in 1..=y.m() {
            let j = y.vertex_set().remove(v);
            let y_r = y.restrict_mask(j);
            let l_r = restrict_antichain(l_facets, j);
            if !essential_recursive(&y_r, &l_r, field, memo)? {
                return Ok(false);
            }
        }
        Ok(true)
    })()?;
    memo.insert(key, result);
    Ok(result)
}

/// Restriction of a germ pair to a vertex subset, both sides re-indexed
/// order-preservingly: `(Y|_J, L|_J)`.
pub fn restrict_pair(
    y: &SimplicialComplex,
    l_facets: &[Face],
    j_vertices: &[VertexId],
) -> Result<(SimplicialComplex, Vec<Face>)> {
    let j = Face::from_vertices(j_vertices)?;
    let l = normalize_sub(y, l_facets)?;
    Ok((y.restrict_mask(j), restrict_antichain(&l, j)))
}

/// Restriction of a facet antichain to `J`, re-indexed the same way
/// `restrict_mask` re-indexes the ambient complex.
fn restrict_antichain(l_facets: &[Face], j: Face) -> Vec<Face> {
    let cut: Vec<Face> = l_facets.iter().map(|f| f.intersect(j)).collect();
    let mut kept: Vec<Face> = Vec::new();
    for (i, f) in cut.iter().enumerate() {
        let dominated = cut
            .iter()
            .enumerate()
            .any(|(t, g)| f.is_subset_of(*g) && (f != g || t < i));
        if !dominated {
            kept.push(f.compress_into(j));
        }
    }
    kept.sort();
    kept.dedup();
    if kept.is_empty() {
        kept.push(Face::EMPTY);
    }
    kept
}

/// The cone-and-glue extension `K = (v * L) ∪_L (Y * Δ^[r])` on
/// `|V(Y)| + r + 1` vertices: `Y` keeps its labels, the simplex block takes
/// the next `r` labels, and the cone vertex `v` is the last label. For a
/// wt-germ `(Y, L)` the result is weakly tight with `mdim = mdim(L) + 1` and
/// `v ∈ V_mdim`.
pub fn extend(y: &SimplicialComplex, l_facets: &[Face], r: usize) -> Result<SimplicialComplex> {
    let l = normalize_sub(y, l_facets).map_err(|_| Error::NotAGerm)?;
    let k = y.m();
    let m = k + r + 1;
    let block: Face = (k + 1..=k + r).try_fold(Face::EMPTY, |acc, v| {
        Face::from_vertices(&[v]).map(|f| acc.union(f))
    })?;
    let v = m;
    let mut gen: Vec<Face> = l.iter().map(|f| f.insert(v)).collect();
    gen.extend(y.facets().iter().map(|f| f.union(block)));
    SimplicialComplex::from_facets(m, &gen)
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

/// How germ candidates are admitted during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GermFilter {
    /// Check whether D̃((v*L) ∪_L Y) equals 2^{m - mdim(L) - 2} — the cheap
    /// equivalent of Cond-II once Cond-I holds.
    DtildeShortcut,
    /// Run the full Cond-II homology-surjection check over every subset.
    CondIiRank,
}

/// One isomorphism class of the census.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub key: IsoClassKey,
    pub complex: SimplicialComplex,
    pub f_vector: FVector,
    pub mdim: i64,
    pub total_betti: u64,
}

/// The weakly tight complexes with at most `m_max` vertices, one
/// representative per isomorphism class, keyed by vertex count.
#[derive(Clone, Debug, Default)]
pub struct Census {
    pub by_m: BTreeMap<usize, Vec<CensusEntry>>,
}

impl Census {
    pub fn count(&self, m: usize) -> usize {
        self.by_m.get(&m).map_or(0, Vec::len)
    }

    pub fn entries(&self, m: usize) -> &[CensusEntry] {
        self.by_m.get(&m).map_or(&[], Vec::as_slice)
    }
}

/// Essential subcomplex candidates of `y`: antichains of nonempty faces
/// covering `V(y)`. For `y = {∅}` the single candidate is `{∅}` itself.
fn essential_candidates(y: &SimplicialComplex) -> Vec<Vec<Face>> {
    if y.m() == 0 {
        return vec![vec![Face::EMPTY]];
    }
    let masks: Vec<u64> = y.face_masks().into_iter().filter(|&f| f != 0).collect();
    let full = y.vertex_set().mask();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichain_dfs(&masks, 0, &mut chosen, &mut |antichain| {
        if !antichain.is_empty() && antichain.iter().fold(0, |acc, &f| acc | f) == full {
            out.push(antichain.iter().map(|&f| Face::from_mask(f)).collect());
        }
    });
    out
}

/// Enumerates all weakly tight complexes with at most `m_max` vertices up to
/// isomorphism, using the D̃ shortcut.
pub fn enumerate_wt(m_max: usize, field: &FieldSpec) -> Result<Census> {
    enumerate_wt_with(m_max, field, GermFilter::DtildeShortcut)
}

/// Census enumeration with an explicit germ filter; both filters produce the
/// same census.
pub fn enumerate_wt_with(m_max: usize, field: &FieldSpec, filter: GermFilter) -> Result<Census> {
    if m_max > MAX_ENUM_M {
        return Err(Error::TooLarge {
            m: m_max,
            max: MAX_ENUM_M,
        });
    }
    let mut census = Census::default();
    let mut seen: BTreeSet<IsoClassKey> = BTreeSet::new();
    let irrelevant = SimplicialComplex::irrelevant();
    seen.insert(irrelevant.canonical_key()?);
    census.by_m.insert(
        0,
        vec![CensusEntry {
            key: irrelevant.canonical_key()?,
            complex: irrelevant.clone(),
            f_vector: irrelevant.f_vector(),
            mdim: -1,
            total_betti: 1,
        }],
    );

    for level in 0..m_max {
        let bases: Vec<SimplicialComplex> = census
            .entries(level)
            .iter()
            .map(|e| e.complex.clone())
            .collect();
        for y in &bases {
            for l in essential_candidates(y) {
                if !cond_i(y, &l, field)? {
                    continue;
                }
                let admitted = match filter {
                    GermFilter::DtildeShortcut => is_weakly_tight(&extend(y, &l, 0)?, field)?,
                    GermFilter::CondIiRank => cond_ii(y, &l, field),
                };
                if !admitted {
                    continue;
                }
                for r in 0..=(m_max - level - 1) {
                    let k = extend(y, &l, r)?;
                    let key = k.canonical_key()?;
                    if seen.insert(key.clone()) {
                        let entry = CensusEntry {
                            key,
                            f_vector: k.f_vector(),
                            mdim: k.mdim(),
                            total_betti: total_betti(&k, field)?,
                            complex: k,
                        };
                        census.by_m.entry(level + r + 1).or_default().push(entry);
                    }
                }
            }
        }
    }
    for entries in census.by_m.values_mut() {
        entries.sort_by(|a, b| a.key.cmp(&b.key));
    }
    Ok(census)
}

/// All essential wt-germs inside `y`, by the definition-chasing predicate.
pub fn essential_germs(y: &SimplicialComplex, field: &FieldSpec) -> Result<Vec<WtGerm>> {
    let mut out = Vec::new();
    for l in essential_candidates(y) {
        if is_wt_germ(y, &l, field)? {
            out.push(WtGerm {
                base: y.clone(),
                sub_facets: l,
                essential: true,
            });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// germ filtrations
// ---------------------------------------------------------------------------

/// One peeling step: `Y_{k+1} = (v_k * L_k) ∪_{L_k} (Y_k * Δ^[r_k])`.
#[derive(Clone, Debug)]
pub struct FiltrationStep {
    /// `Y_k`, as a standalone complex.
    pub base: SimplicialComplex,
    /// `L_k` facets over `V(Y_k)`.
    pub sub_facets: Vec<Face>,
    /// The cone vertex peeled from `Y_{k+1}` (in the labels used at peel time).
    pub cone_vertex: VertexId,
    /// `r_k`, the simplex padding.
    pub simplex_padding: usize,
}

/// An essential germ filtration `(Y_0, L_0), ..., (Y_n, L_n)` with
/// `(Y_0, L_0) = ({∅}, {∅})`; the length is the number of steps.
#[derive(Clone, Debug)]
pub struct GermFiltration {
    pub steps: Vec<FiltrationStep>,
}

impl GermFiltration {
    pub fn length(&self) -> usize {
        self.steps.len()
    }
}

fn canonical_form(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    let key = k.canonical_key()?;
    let faces: Vec<Face> = key.facets.iter().map(|&f| Face::from_mask(f)).collect();
    SimplicialComplex::from_facets(key.m, &faces)
}

/// Peels one vertex `v ∈ V_mdim` off a weakly tight complex, producing the
/// essential germ `(Y, L)` with `Y = K|_{V(link v)}`, `L = link_K v`, and the
/// padding `r = |V(K)| - |V(⋆_K v)|`.
fn peel(k: &SimplicialComplex, v: VertexId) -> Result<FiltrationStep> {
    let vf = Face::from_vertices(&[v])?;
    let (link_facets, link_support) = k.link_ambient(vf)?;
    let r = k.m() - link_support.card() - 1;
    let base = k.restrict_mask(link_support);
    let sub_facets = if link_support.is_empty() {
        vec![Face::EMPTY]
    } else {
        let mut fs: Vec<Face> = link_facets
            .into_iter()
            .map(|f| f.compress_into(link_support))
            .collect();
        fs.sort();
        fs.dedup();
        fs
    };
    Ok(FiltrationStep {
        base,
        sub_facets,
        cone_vertex: v,
        simplex_padding: r,
    })
}

/// The deterministic essential germ filtration of a weakly tight complex:
/// peel the smallest vertex of `V_mdim` of the canonical form at every stage.
/// Replaying the steps through `extend` reproduces `K` up to isomorphism.
pub fn germ_filtration(k: &SimplicialComplex, field: &FieldSpec) -> Result<GermFiltration> {
    if !is_weakly_tight(k, field)? {
        return Err(Error::NotWeaklyTight);
    }
    let mut steps = Vec::new();
    let mut current = canonical_form(k)?;
    while !current.is_irrelevant() {
        let v = *current
            .v_mdim()
            .first()
            .expect("nonempty complex has facets");
        let step = peel(&current, v)?;
        current = canonical_form(&step.base)?;
        steps.push(step);
    }
    steps.reverse();
    Ok(GermFiltration { steps })
}

/// Rebuilds the complex a filtration describes, checking each intermediate
/// stage against the recorded one.
pub fn replay_filtration(f: &GermFiltration) -> Result<SimplicialComplex> {
    let mut current = SimplicialComplex::irrelevant();
    for (t, step) in f.steps.iter().enumerate() {
        if !current.are_isomorphic(&step.base)? {
            return Err(Error::Parse(format!("filtration stage {t} mismatch")));
        }
        current = extend(&step.base, &step.sub_facets, step.simplex_padding)?;
    }
    Ok(current)
}

/// The set of lengths over every essential germ filtration of `K` (all
/// choices of `v ∈ V_mdim` at every stage). Reported as evidence: the open
/// question is whether this is always a singleton.
pub fn filtration_lengths(k: &SimplicialComplex, field: &FieldSpec) -> Result<BTreeSet<usize>> {
    if !is_weakly_tight(k, field)? {
        return Err(Error::NotWeaklyTight);
    }
    let mut memo: HashMap<IsoClassKey, BTreeSet<usize>> = HashMap::new();
    fn lengths(
        k: &SimplicialComplex,
        memo: &mut HashMap<IsoClassKey, BTreeSet<usize>>,
    ) -> Result<BTreeSet<usize>> {
        if k.is_irrelevant() {
            return Ok(BTreeSet::from([0]));
        }
        let key = k.canonical_key()?;
        if let Some(hit) = memo.get(&key) {
            return Ok(hit.clone());
        }
        let mut out = BTreeSet::new();
        for v in k.v_mdim() {
            let step = peel(k, v)?;
            let base = canonical_form(&step.base)?;
            for l in lengths(&base, memo)? {
                out.insert(l + 1);
            }
        }
        memo.insert(key, out.clone());
        Ok(out)
    }
    lengths(&canonical_form(k)?, &mut memo)
}

// ---------------------------------------------------------------------------
// D̃ minimization over Σ(m, d)
// ---------------------------------------------------------------------------

/// Outcome of an exhaustive D̃ minimization over Σ(m, d).
#[derive(Clone, Debug)]
pub struct DminResult {
    /// |Σ(m, d)| up to isomorphism.
    pub class_count: usize,
    pub min_total: u64,
    /// All minimizers up to isomorphism, sorted by canonical key.
    pub minimizers: Vec<SimplicialComplex>,
}

/// Exhaustively minimizes D̃ over all d-dimensional complexes on `[m]` up to
/// isomorphism.
pub fn dmin_search(m: usize, d: i64, field: &FieldSpec) -> Result<DminResult> {
    let reps = sigma_reps(m, d)?;
    let totals: Vec<u64> = reps
        .par_iter()
        .map(|k| total_betti(k, field))
        .collect::<Result<Vec<u64>>>()?;
    let min_total = totals.iter().copied().min().unwrap_or(0);
    let mut minimizers: Vec<SimplicialComplex> = reps
        .iter()
        .zip(&totals)
        .filter(|(_, &t)| t == min_total)
        .map(|(k, _)| k.clone())
        .collect();
    minimizers.sort_by_key(|k| k.canonical_key().expect("small m"));
    Ok(DminResult {
        class_count: reps.len(),
        min_total,
        minimizers,
    })
}
