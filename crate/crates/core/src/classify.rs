//! Constructive classification of tight complexes: a complex is tight exactly
//! when it is a simplex-sphere join Δ^[r] * ∂Δ^[n₁] * ... * ∂Δ^[n_k], which
//! happens exactly when its minimal non-faces are pairwise disjoint (the
//! blocks are then the minimal non-faces and the simplex part is everything
//! they miss). The disjointness shortcut is validated against the
//! definitional D̃ test by `verify_classification`.

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::hochster::{is_tight, tight_bound, total_betti};
use crate::linalg::FieldSpec;

/// Normal form of a tight complex: `r + Σ n_i = m`, every block `n_i ≥ 2`
/// (a block of size one would be ∂Δ^[1] = {∅} and is normalized away).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightDecomposition {
    /// Number of vertices of the simplex factor Δ^[r].
    pub simplex_vertices: usize,
    /// Sphere factor sizes n_i, sorted ascending.
    pub sphere_blocks: Vec<usize>,
}

impl TightDecomposition {
    /// Rebuilds the simplex-sphere join this decomposition describes.
    pub fn realize(&self) -> SimplicialComplex {
        SimplicialComplex::sphere_join(self.simplex_vertices, &self.sphere_blocks)
    }

    pub fn m(&self) -> usize {
        self.simplex_vertices + self.sphere_blocks.iter().sum::<usize>()
    }
}

impl std::fmt::Display for TightDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.simplex_vertices > 0 {
            parts.push(format!("Δ^[{}]", self.simplex_vertices));
        }
        for n in &self.sphere_blocks {
            parts.push(format!("∂Δ^[{n}]"));
        }
        if parts.is_empty() {
            parts.push("{∅}".to_string());
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// Classifies `K` as a simplex-sphere join, or returns `None` when `K` is not
/// tight. Succeeds iff the minimal non-faces are pairwise disjoint; on
/// success `decomposition.realize()` is isomorphic to `K`.
pub fn classify_tight(k: &SimplicialComplex) -> Option<TightDecomposition> {
    let gens = k.minimal_non_faces();
    let mut union = 0u64;
    for g in &gens {
        if g.mask() & union != 0 {
            return None;
        }
        union |= g.mask();
    }
    let mut blocks: Vec<usize> = gens.iter().map(|g| g.card()).collect();
    blocks.sort_unstable();
    Some(TightDecomposition {
        simplex_vertices: k.m() - union.count_ones() as usize,
        sphere_blocks: blocks,
    })
}

/// Result of sweeping the classification against the definitional tightness
/// test over every isomorphism class with at most `m_max` vertices.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub complexes_checked: usize,
    pub tight_count: usize,
    pub discrepancies: Vec<String>,
}

impl ClassificationReport {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Checks, for every complex with at most `m_max` vertices up to isomorphism:
/// `is_tight(K) ⟺ classify_tight(K)` succeeds, the reconstruction is
/// isomorphic to `K`, links of tight complexes are tight, and a disconnected
/// tight complex is the two-point sphere ∂Δ^[2].
pub fn verify_classification(m_max: usize, field: &FieldSpec) -> Result<ClassificationReport> {
    let mut report = ClassificationReport {
        complexes_checked: 0,
        tight_count: 0,
        discrepancies: Vec::new(),
    };
    for m in 0..=m_max {
        for k in crate::enumerate::all_complexes_reps(m) {
            report.complexes_checked += 1;
            let decomposition = classify_tight(&k);
            let tight = is_tight(&k, field)?;
            if decomposition.is_some() != tight {
                report.discrepancies.push(format!(
                    "{k}: classify_tight {} but D̃ test says tight = {} (D̃ = {}, bound = {})",
                    if decomposition.is_some() {
                        "succeeds"
                    } else {
                        "fails"
                    },
                    tight,
                    total_betti(&k, field)?,
                    tight_bound(&k),
                ));
                continue;
            }
            let Some(d) = decomposition else { continue };
            report.tight_count += 1;
            if !d.realize().are_isomorphic(&k)? {
                report
                    .discrepancies
                    .push(format!("{k}: reconstruction {d} is not isomorphic"));
            }
            for sigma in k.faces() {
                if sigma.is_empty() {
                    continue;
                }
                let link = k.link(sigma)?;
                if classify_tight(&link).is_none() {
                    report
                        .discrepancies
                        .push(format!("{k}: link of {sigma} is not tight"));
                }
            }
            if !connected(&k) && !k.are_isomorphic(&SimplicialComplex::boundary_simplex(2))? {
                report
                    .discrepancies
                    .push(format!("{k}: tight and disconnected but not ∂Δ^[2]"));
            }
        }
    }
    Ok(report)
}

/// Connectivity of the 1-skeleton; {∅} and points count as connected.
pub(crate) fn connected(k: &SimplicialComplex) -> bool {
    if k.m() <= 1 {
        return true;
    }
    let mut reached = 1u64; // vertex 1
    loop {
        let mut next = reached;
        for f in k.facets() {
            if f.mask() & reached != 0 {
                next |= f.mask();
            }
        }
        if next == reached {
            break;
        }
        reached = next;
    }
    reached == k.vertex_set().mask()
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

    #[test]
    fn join_of_sphere_boundaries() {
        let k =
            SimplicialComplex::boundary_simplex(2).join(&SimplicialComplex::boundary_simplex(3));
        let d = classify_tight(&k).unwrap();
        assert_eq!(d.simplex_vertices, 0);
        assert_eq!(d.sphere_blocks, vec![2, 3]);
        assert!(d.realize().are_isomorphic(&k).unwrap());
    }

    #[test]
    fn overlapping_non_faces_are_not_tight() {
        let k = cx("m=3; facets=(1),(2,3)");
        assert_eq!(k.minimal_non_faces().len(), 2);
        assert_eq!(classify_tight(&k), None);
        // cross-check against the definition: D̃ = 4 ≠ 2^{3-1-1}
        assert_eq!(total_betti(&k, &q()).unwrap(), 4);
        assert_eq!(tight_bound(&k), 2);
        assert!(!is_tight(&k, &q()).unwrap());
    }

    #[test]
    fn simplex_sphere_join_with_cone_part() {
        // Table 1 complex 4₅ = Δ^[2] * ∂Δ^[2]
        let t45 = cx("m=4; facets=(1,2,3),(1,2,4)");
        let d = classify_tight(&t45).unwrap();
        assert_eq!(d.simplex_vertices, 2);
        assert_eq!(d.sphere_blocks, vec![2]);
        assert!(d.realize().are_isomorphic(&t45).unwrap());
    }

    #[test]
    fn degenerate_cases() {
        let d = classify_tight(&SimplicialComplex::irrelevant()).unwrap();
        assert_eq!(d.simplex_vertices, 0);
        assert!(d.sphere_blocks.is_empty());
        assert_eq!(d.realize(), SimplicialComplex::irrelevant());

        let d = classify_tight(&SimplicialComplex::simplex(3)).unwrap();
        assert_eq!(d.simplex_vertices, 3);
        assert_eq!(d.to_string(), "Δ^[3]");
    }

    #[test]
    fn verify_small_universe() {
        let report = verify_classification(4, &q()).unwrap();
        assert!(report.ok(), "{:?}", report.discrepancies);
        assert!(report.tight_count > 0);
    }

    #[test]
    fn tight_stability_under_cone() {
        for m in 1..=4 {
            for k in crate::enumerate::all_complexes_reps(m) {
                let base = classify_tight(&k).is_some();
                for r in 1..=2 {
                    let joined = k.join(&SimplicialComplex::simplex(r));
                    assert_eq!(classify_tight(&joined).is_some(), base, "{k} * Δ^[{r}]");
                }
            }
        }
    }

    #[test]
    fn connectivity_helper() {
        assert!(connected(&cx("m=3; facets=(1,2),(1,3)")));
        assert!(!connected(&cx("m=3; facets=(1),(2,3)")));
        assert!(connected(&SimplicialComplex::irrelevant()));
    }
}
