//! Bigraded Betti numbers of Stanley-Reisner rings via Hochster's formula,
//! the total Betti number D̃, tightness and weak-tightness predicates, and the
//! binomial lower bounds with their weakly-tight equality cases.
//!
//! Hochster's formula groups the computation by vertex subsets:
//! β^{-i,2j}(𝔽[K]) = Σ_{|J|=j} β̃_{j-i-1}(K_J), so one pass over the 2^m full
//! subcomplexes fills the whole table.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::homology::{betti_of_masks, profile_of, HomotopyProfile, ReducedBettiVector};
use crate::linalg::FieldSpec;

/// Cap on ground sets for the 2^m subset iteration.
pub const MAX_HOCHSTER_M: usize = 16;

/// Sparse table of bigraded Betti numbers: the entry at `(i, j)` stores
/// β^{-i,2j}(𝔽[K]). Entries vanish unless `(i, j) = (0, 0)` or
/// `1 ≤ i < j ≤ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub m: usize,
    pub field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntryJson {
    i: usize,
    #[serde(rename = "2j")]
    two_j: usize,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiTableJson {
    m: usize,
    field: String,
    entries: Vec<BettiEntryJson>,
    row_sums: Vec<u64>,
    total: u64,
}

impl BettiTable {
    pub(crate) fn new(m: usize, field: FieldSpec) -> BettiTable {
        BettiTable {
            m,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub(crate) fn add(&mut self, i: usize, j: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    /// β^{-i,2j}.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// The nonzero entries, sorted by (i, j).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Row sum β^{-i} = Σ_j β^{-i,2j}.
    pub fn row_sum(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ri, _), _)| ri == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// All row sums `[β^0, β^{-1}, ..., β^{-max_i}]`.
    pub fn row_sums(&self) -> Vec<u64> {
        let max_i = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        (0..=max_i).map(|i| self.row_sum(i)).collect()
    }

    /// The total Betti number D̃ = Σ β^{-i,2j}.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn to_json(&self) -> String {
        let json = BettiTableJson {
            m: self.m,
            field: self.field.to_string(),
            entries: self
                .entries()
                .map(|(i, j, beta)| BettiEntryJson {
                    i,
                    two_j: 2 * j,
                    beta,
                })
                .collect(),
            row_sums: self.row_sums(),
            total: self.total(),
        };
        serde_json::to_string(&json).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<BettiTable> {
        let json: BettiTableJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let field: FieldSpec = json.field.parse()?;
        let mut table = BettiTable::new(json.m, field);
        for e in json.entries {
            if e.two_j % 2 != 0 {
                return Err(Error::Parse(format!("odd internal degree {}", e.two_j)));
            }
            table.add(e.i, e.two_j / 2, e.beta);
        }
        Ok(table)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "bigraded Betti numbers over {} (m = {})",
            self.field, self.m
        )?;
        for (i, j, b) in self.entries() {
            writeln!(f, "  beta^(-{}, {}) = {}", i, 2 * j, b)?;
        }
        write!(f, "  total = {}", self.total())
    }
}

/// Summary of the tightness predicates for one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessReport {
    pub d_value: u64,
    pub mdim: i64,
    pub dim: i64,
    pub is_weakly_tight: bool,
    pub is_tight: bool,
    pub sphere_subset_count: u64,
}

fn check_m(k: &SimplicialComplex) -> Result<()> {
    if k.m() > MAX_HOCHSTER_M {
        return Err(Error::TooLarge {
            m: k.m(),
            max: MAX_HOCHSTER_M,
        });
    }
    Ok(())
}

/// Faces of `K` as a 2^m membership table.
fn face_table(k: &SimplicialComplex) -> Vec<bool> {
    let mut table = vec![false; 1 << k.m()];
    for mask in k.face_masks() {
        table[mask as usize] = true;
    }
    table
}

/// Calls `visit(J, faces of K_J)` for every `J ⊆ [m]`, with faces in ambient
/// labels.
fn for_each_full_subcomplex(k: &SimplicialComplex, mut visit: impl FnMut(u64, &[u64]) -> bool) {
    let table = face_table(k);
    let mut faces = Vec::new();
    for j in 0..(1u64 << k.m()) {
        faces.clear();
        let mut sub = j;
        loop {
            if table[sub as usize] {
                faces.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & j;
        }
        faces.sort_unstable();
        if !visit(j, &faces) {
            return;
        }
    }
}

/// The full bigraded Betti table of 𝔽[K] by Hochster's formula.
pub fn bigraded_betti(k: &SimplicialComplex, field: &FieldSpec) -> Result<BettiTable> {
    check_m(k)?;
    let mut table = BettiTable::new(k.m(), field.clone());
    for_each_full_subcomplex(k, |j, faces| {
        let cardinality = j.count_ones() as usize;
        for (c, count) in betti_of_masks(faces, field).into_iter().enumerate() {
            // degree n = c - 1 contributes to i = |J| - n - 1 = |J| - c
            if count > 0 {
                table.add(cardinality - c, cardinality, count as u64);
            }
        }
        true
    });
    Ok(table)
}

/// D̃(K;𝔽) = Σ_J tb̃(K_J), summed with an early exit once `bound` is passed
/// (the running total is returned together with the exceeded flag).
fn total_betti_bounded(
    k: &SimplicialComplex,
    field: &FieldSpec,
    bound: Option<u64>,
) -> (u64, bool) {
    let mut sum = 0u64;
    let mut exceeded = false;
    for_each_full_subcomplex(k, |_, faces| {
        sum += betti_of_masks(faces, field).iter().sum::<usize>() as u64;
        if let Some(b) = bound {
            if sum > b {
                exceeded = true;
                return false;
            }
        }
        true
    });
    (sum, exceeded)
}

/// The total Betti number D̃(K;𝔽).
pub fn total_betti(k: &SimplicialComplex, field: &FieldSpec) -> Result<u64> {
    check_m(k)?;
    Ok(total_betti_bounded(k, field, None).0)
}

fn pow2(exp: i64) -> u64 {
    debug_assert!((0..64).contains(&exp));
    1u64 << exp
}

/// The weak-tightness target 2^{m - mdim(K) - 1}.
pub fn weak_tight_bound(k: &SimplicialComplex) -> u64 {
    pow2(k.m() as i64 - k.mdim() - 1)
}

/// The tightness target 2^{m - dim(K) - 1}.
pub fn tight_bound(k: &SimplicialComplex) -> u64 {
    pow2(k.m() as i64 - k.dim() - 1)
}

/// D̃(K;𝔽) = 2^{m - mdim(K) - 1}?
pub fn is_weakly_tight(k: &SimplicialComplex, field: &FieldSpec) -> Result<bool> {
    check_m(k)?;
    let target = weak_tight_bound(k);
    let (sum, exceeded) = total_betti_bounded(k, field, Some(target));
    Ok(!exceeded && sum == target)
}

/// D̃(K;𝔽) = 2^{m - dim(K) - 1}? The irrelevant complex is tight.
pub fn is_tight(k: &SimplicialComplex, field: &FieldSpec) -> Result<bool> {
    check_m(k)?;
    let target = tight_bound(k);
    let (sum, exceeded) = total_betti_bounded(k, field, Some(target));
    Ok(!exceeded && sum == target)
}

pub fn tightness_report(k: &SimplicialComplex, field: &FieldSpec) -> Result<TightnessReport> {
    check_m(k)?;
    let mut d_value = 0u64;
    let mut spheres = 0u64;
    for_each_full_subcomplex(k, |_, faces| {
        let tb: usize = betti_of_masks(faces, field).iter().sum();
        d_value += tb as u64;
        if tb > 0 {
            spheres += 1;
        }
        true
    });
    Ok(TightnessReport {
        d_value,
        mdim: k.mdim(),
        dim: k.dim(),
        is_weakly_tight: d_value == weak_tight_bound(k),
        is_tight: d_value == tight_bound(k),
        sphere_subset_count: spheres,
    })
}

pub(crate) fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let (n, k) = (n as u64, k.min(n - k) as u64);
    let mut acc = 1u64;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Outcome of evaluating the binomial lower bounds and the per-vertex
/// inequalities on one complex; all fields must hold for every complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundReport {
    /// β^{-i} ≥ C(m - mdim(K) - 1, i) for all i.
    pub binomial_mdim: bool,
    /// β^{-i} ≥ C(m - dim(K) - 1, i) for all i.
    pub binomial_dim: bool,
    /// D̃ ≥ 2^{m - mdim(K) - 1}.
    pub total_mdim: bool,
    /// D̃ ≥ 2^{m - dim(K) - 1}.
    pub total_dim: bool,
    /// The bigraded inequality at every vertex and every (i, j).
    pub vertex_bigraded: bool,
    /// The row-sum inequality at every vertex and every i.
    pub vertex_rows: bool,
    /// D̃(K) ≥ 2^{m - m_v - 1} D̃(link_K v) at every vertex.
    pub vertex_totals: bool,
}

impl LowerBoundReport {
    pub fn all_hold(&self) -> bool {
        self.binomial_mdim
            && self.binomial_dim
            && self.total_mdim
            && self.total_dim
            && self.vertex_bigraded
            && self.vertex_rows
            && self.vertex_totals
    }
}

struct VertexData {
    m_v: usize,
    link_table: BettiTable,
    link_total: u64,
    deleted_table: BettiTable,
}

fn vertex_data(k: &SimplicialComplex, v: VertexId, field: &FieldSpec) -> Result<VertexData> {
    let vf = crate::complex::Face::from_vertices(&[v])?;
    let link = k.link(vf)?;
    let deleted = k.delete_vertex(v)?;
    let link_table = bigraded_betti(&link, field)?;
    let deleted_table = bigraded_betti(&deleted, field)?;
    let link_total = link_table.total();
    Ok(VertexData {
        m_v: link.m(),
        link_table,
        link_total,
        deleted_table,
    })
}

/// Left and right sides of the vertex inequality (a) for each (i, j), as
/// (β^{-i,2(j+1)}(K), convolution + deletion terms).
fn vertex_bigraded_sides(
    k_table: &BettiTable,
    data: &VertexData,
    m: usize,
    i: usize,
    j: usize,
) -> (i128, i128) {
    let lhs = k_table.get(i, j + 1) as i128;
    let coef_n = m as i64 - data.m_v as i64 - 1;
    let mut rhs: i128 = 0;
    for s in 0..=j.min(i) {
        let c = binomial(coef_n, s as i64) as i128;
        if c == 0 {
            continue;
        }
        rhs += c * data.link_table.get(i - s, j - s) as i128;
    }
    rhs += data.deleted_table.get(i, j + 1) as i128;
    rhs -= data.deleted_table.get(i, j) as i128;
    (lhs, rhs)
}

fn vertex_row_sides(k_table: &BettiTable, data: &VertexData, m: usize, i: usize) -> (i128, i128) {
    let lhs = k_table.row_sum(i) as i128;
    let coef_n = m as i64 - data.m_v as i64 - 1;
    let mut rhs: i128 = 0;
    for s in 0..=i {
        let c = binomial(coef_n, s as i64) as i128;
        if c == 0 {
            continue;
        }
        rhs += c * data.link_table.row_sum(i - s) as i128;
    }
    (lhs, rhs)
}

/// Evaluates every lower bound of the binomial theorem and its per-vertex
/// refinements on `K`.
pub fn check_lower_bounds(k: &SimplicialComplex, field: &FieldSpec) -> Result<LowerBoundReport> {
    check_m(k)?;
    let table = bigraded_betti(k, field)?;
    let total = table.total();
    let m = k.m();

    let row_ok = |n: i64| -> bool {
        (0..=(m as i64 + 1)).all(|i| table.row_sum(i as usize) as i128 >= binomial(n, i) as i128)
    };
    let binomial_mdim = row_ok(m as i64 - k.mdim() - 1);
    let binomial_dim = row_ok(m as i64 - k.dim() - 1);
    let total_mdim = total >= weak_tight_bound(k);
    let total_dim = total >= tight_bound(k);

    let mut vertex_bigraded = true;
    let mut vertex_rows = true;
    let mut vertex_totals = true;
    for v in 1..=m {
        let data = vertex_data(k, v, field)?;
        for i in 0..=m {
            for j in 0..=m {
                let (lhs, rhs) = vertex_bigraded_sides(&table, &data, m, i, j);
                if lhs < rhs {
                    vertex_bigraded = false;
                }
            }
            let (lhs, rhs) = vertex_row_sides(&table, &data, m, i);
            if lhs < rhs {
                vertex_rows = false;
            }
        }
        let factor = pow2(m as i64 - data.m_v as i64 - 1);
        if (total as u128) < factor as u128 * data.link_total as u128 {
            vertex_totals = false;
        }
    }

    Ok(LowerBoundReport {
        binomial_mdim,
        binomial_dim,
        total_mdim,
        total_dim,
        vertex_bigraded,
        vertex_rows,
        vertex_totals,
    })
}

/// Outcome of the weakly-tight equality cases at a vertex of `V_mdim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WtRecursionReport {
    /// Equality in the bigraded inequality for every (i, j).
    pub bigraded_equalities: bool,
    /// Equality in the row-sum inequality for every i.
    pub row_equalities: bool,
    /// D̃(K) = 2^{m - m_v - 1} D̃(link_K v).
    pub total_equality: bool,
    /// link_K v is weakly tight.
    pub link_weakly_tight: bool,
}

impl WtRecursionReport {
    pub fn all_hold(&self) -> bool {
        self.bigraded_equalities
            && self.row_equalities
            && self.total_equality
            && self.link_weakly_tight
    }
}

/// Verifies, for a weakly tight `K` and `v ∈ V_mdim(K)`, the three equalities
/// of the recursion (the bigraded one drives the filtration computation) and
/// that the link is weakly tight.
pub fn check_wt_recursion(
    k: &SimplicialComplex,
    v: VertexId,
    field: &FieldSpec,
) -> Result<WtRecursionReport> {
    check_m(k)?;
    if v < 1 || v > k.m() {
        return Err(Error::BadVertex {
            vertex: v,
            m: k.m(),
        });
    }
    if !is_weakly_tight(k, field)? {
        return Err(Error::NotWeaklyTight);
    }
    if !k.v_mdim().contains(&v) {
        return Err(Error::VertexNotMdim { vertex: v });
    }
    let m = k.m();
    let table = bigraded_betti(k, field)?;
    let data = vertex_data(k, v, field)?;

    let mut bigraded_equalities = true;
    let mut row_equalities = true;
    for i in 0..=m {
        for j in 0..=m {
            let (lhs, rhs) = vertex_bigraded_sides(&table, &data, m, i, j);
            if lhs != rhs {
                bigraded_equalities = false;
            }
        }
        let (lhs, rhs) = vertex_row_sides(&table, &data, m, i);
        if lhs != rhs {
            row_equalities = false;
        }
    }
    let factor = pow2(m as i64 - data.m_v as i64 - 1);
    let total_equality = table.total() as u128 == factor as u128 * data.link_total as u128;
    let vf = crate::complex::Face::from_vertices(&[v])?;
    let link_weakly_tight = is_weakly_tight(&k.link(vf)?, field)?;

    Ok(WtRecursionReport {
        bigraded_equalities,
        row_equalities,
        total_equality,
        link_weakly_tight,
    })
}

/// The sphere-count characterization: true iff every full subcomplex is
/// acyclic or a homology sphere and the number of sphere subsets is exactly
/// 2^{m - mdim(K) - 1}. Agrees with `is_weakly_tight` on every input.
pub fn sphere_count_characterization(k: &SimplicialComplex, field: &FieldSpec) -> Result<bool> {
    check_m(k)?;
    let mut all_classified = true;
    let mut spheres = 0u64;
    for_each_full_subcomplex(k, |_, faces| {
        let b = ReducedBettiVector::from_shifted(betti_of_masks(faces, field));
        match profile_of(&b) {
            HomotopyProfile::Acyclic => {}
            HomotopyProfile::HomologySphere(_) => spheres += 1,
            HomotopyProfile::Other(_) => {
                all_classified = false;
                return false;
            }
        }
        true
    });
    Ok(all_classified && spheres == weak_tight_bound(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(s: &str) -> SimplicialComplex {
        s.parse().unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn k23() -> SimplicialComplex {
        cx("m=5; facets=(1,3),(1,4),(1,5),(2,3),(2,4),(2,5)")
    }

    fn c5() -> SimplicialComplex {
        cx("m=5; facets=(1,2),(2,3),(3,4),(4,5),(1,5)")
    }

    #[test]
    fn boundary_simplex_table() {
        let t = bigraded_betti(&SimplicialComplex::boundary_simplex(2), &q()).unwrap();
        let entries: Vec<_> = t.entries().collect();
        assert_eq!(entries, vec![(0, 0, 1), (1, 2, 1)]);
        assert_eq!(t.total(), 2);
    }

    #[test]
    fn paper_values_for_k23_and_c5() {
        for field in [q(), FieldSpec::prime(2).unwrap()] {
            let tk = bigraded_betti(&k23(), &field).unwrap();
            assert_eq!(tk.total(), 12);
            assert_eq!(tk.row_sum(3), 2);

            let tc = bigraded_betti(&c5(), &field).unwrap();
            assert_eq!(tc.total(), 12);
            assert_eq!(tc.row_sum(3), 1);
        }
    }

    #[test]
    fn simplex_total_is_one() {
        for m in 0..=6 {
            assert_eq!(
                total_betti(&SimplicialComplex::simplex(m), &q()).unwrap(),
                1
            );
        }
    }

    #[test]
    fn sphere_join_totals() {
        // D̃ of a join of k sphere factors is 2^k; check against the direct sum
        for blocks in [vec![2], vec![2, 2], vec![3, 2], vec![2, 2, 2]] {
            let k = SimplicialComplex::sphere_join(0, &blocks);
            let expected = 1u64 << blocks.len();
            assert_eq!(total_betti(&k, &q()).unwrap(), expected, "{blocks:?}");
        }
        let with_cone = SimplicialComplex::sphere_join(2, &[2, 3]);
        assert_eq!(total_betti(&with_cone, &q()).unwrap(), 4);
    }

    #[test]
    fn cone_vertices_leave_table_unchanged() {
        for s in [
            "m=3; facets=(1,2),(1,3),(2,3)",
            "m=4; facets=(1,2),(1,3),(2,4),(3,4)",
        ] {
            let k = cx(s);
            let t = bigraded_betti(&k, &q()).unwrap();
            for r in 1..=2 {
                let joined = k.join(&SimplicialComplex::simplex(r));
                let tj = bigraded_betti(&joined, &q()).unwrap();
                let a: Vec<_> = t.entries().collect();
                let b: Vec<_> = tj.entries().collect();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn weak_tightness_examples() {
        for m in 3..=5 {
            let mut facets = vec![crate::complex::Face::from_vertices(&[1]).unwrap()];
            facets.push(crate::complex::Face::from_vertices(&(2..=m).collect::<Vec<_>>()).unwrap());
            let split = SimplicialComplex::from_facets(m, &facets).unwrap();
            assert!(is_weakly_tight(&split, &q()).unwrap());
            assert!(!is_tight(&split, &q()).unwrap());
        }

        let c4 = SimplicialComplex::sphere_join(0, &[2, 2]);
        assert!(is_tight(&c4, &q()).unwrap());
        assert!(is_weakly_tight(&c4, &q()).unwrap());

        assert!(!is_weakly_tight(&c5(), &q()).unwrap());
        assert!(is_tight(&SimplicialComplex::irrelevant(), &q()).unwrap());
    }

    #[test]
    fn tightness_report_fields() {
        let r = tightness_report(&c5(), &q()).unwrap();
        assert_eq!(r.d_value, 12);
        assert_eq!((r.mdim, r.dim), (1, 1));
        assert!(!r.is_weakly_tight && !r.is_tight);
        // 11 subsets with nonzero reduced homology: ∅, 5 non-edges,
        // 5 disconnected triples, and the full cycle... minus overlaps
        assert_eq!(r.sphere_subset_count, 12);

        let r0 = tightness_report(&SimplicialComplex::irrelevant(), &q()).unwrap();
        assert!(r0.is_tight && r0.is_weakly_tight);
        assert_eq!(r0.d_value, 1);
    }

    #[test]
    fn lower_bounds_hold_with_strictness_for_c5() {
        let report = check_lower_bounds(&c5(), &q()).unwrap();
        assert!(report.all_hold());
        let t = bigraded_betti(&c5(), &q()).unwrap();
        // not weakly tight, so some row exceeds its binomial strictly
        let strict = (0..=3).any(|i| t.row_sum(i) > binomial(3, i as i64));
        assert!(strict);
        assert_eq!(t.row_sums(), vec![1, 5, 5, 1]);
    }

    #[test]
    fn wt_recursion_on_join_of_spheres() {
        let c4 = SimplicialComplex::sphere_join(0, &[2, 2]);
        for v in 1..=4 {
            let rep = check_wt_recursion(&c4, v, &q()).unwrap();
            assert!(rep.all_hold(), "vertex {v}: {rep:?}");
        }
    }

    #[test]
    fn wt_recursion_on_disjoint_simplex() {
        let k = cx("m=5; facets=(1),(2,3,4,5)");
        let rep = check_wt_recursion(&k, 1, &q()).unwrap();
        assert!(rep.all_hold());
        assert_eq!(
            total_betti(&k, &q()).unwrap(),
            pow2(k.m() as i64 - 1) // link is {∅} with D̃ = 1
        );
    }

    #[test]
    fn wt_recursion_errors() {
        assert_eq!(
            check_wt_recursion(&c5(), 1, &q()),
            Err(Error::NotWeaklyTight)
        );
        let t42 = cx("m=4; facets=(1,2,3),(4)");
        assert_eq!(
            check_wt_recursion(&t42, 1, &q()),
            Err(Error::VertexNotMdim { vertex: 1 })
        );
        assert!(check_wt_recursion(&t42, 4, &q()).unwrap().all_hold());
    }

    #[test]
    fn sphere_count_examples() {
        for m in 1..=5 {
            assert!(sphere_count_characterization(&SimplicialComplex::simplex(m), &q()).unwrap());
        }
        for m in 2..=5 {
            let mut facets = vec![crate::complex::Face::from_vertices(&[1]).unwrap()];
            facets.push(crate::complex::Face::from_vertices(&(2..=m).collect::<Vec<_>>()).unwrap());
            let split = SimplicialComplex::from_facets(m, &facets).unwrap();
            assert!(sphere_count_characterization(&split, &q()).unwrap());
        }
        assert!(!sphere_count_characterization(&c5(), &q()).unwrap());
    }

    #[test]
    fn sphere_count_agrees_with_weak_tightness_small() {
        for m in 1..=4 {
            for k in crate::enumerate::all_complexes_reps(m) {
                for field in [q(), FieldSpec::prime(2).unwrap()] {
                    assert_eq!(
                        sphere_count_characterization(&k, &field).unwrap(),
                        is_weakly_tight(&k, &field).unwrap(),
                        "{k} over {field}"
                    );
                }
            }
        }
    }

    #[test]
    fn betti_table_json_round_trip() {
        let t = bigraded_betti(&k23(), &q()).unwrap();
        let s = t.to_json();
        let back = BettiTable::from_json(&s).unwrap();
        assert_eq!(back, t);
        assert!(s.contains("\"2j\""));
        assert!(s.contains("\"total\":12"));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(-1, 0), 0);
    }
}
