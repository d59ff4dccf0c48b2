//! Seeded random complex generation for oracle sweeps and stress tests.

use rand::seq::index::sample as index_sample;
use rand::Rng;

use crate::complex::{Face, SimplicialComplex, MAX_GROUND_SET};

/// A random complex on exactly `m` vertices: between one and nine random
/// facets with sizes weighted toward 2..5, with every uncovered vertex
/// patched in as an isolated point so the ground set is exactly `[m]`.
pub fn random_complex(m: usize, rng: &mut impl Rng) -> SimplicialComplex {
    assert!((1..=MAX_GROUND_SET).contains(&m));
    let facet_count = rng.gen_range(1..=9usize);
    let mut faces = Vec::with_capacity(facet_count + m);
    for _ in 0..facet_count {
        let size = random_size(m, rng);
        let picks = index_sample(rng, m, size);
        let vertices: Vec<usize> = picks.into_iter().map(|i| i + 1).collect();
        faces.push(Face::from_vertices(&vertices).expect("in range"));
    }
    let covered = faces.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
    for v in 1..=m {
        if !covered.contains(v) {
            faces.push(Face::from_vertices(&[v]).expect("in range"));
        }
    }
    SimplicialComplex::from_facets(m, &faces).expect("covering by construction")
}

fn random_size(m: usize, rng: &mut impl Rng) -> usize {
    let max = m.min(5);
    if max < 2 {
        return 1;
    }
    // weights for sizes 2, 3, 4, 5
    let weights = [30u32, 30, 25, 15];
    let live = &weights[..max - 1];
    let total: u32 = live.iter().sum();
    let mut roll = rng.gen_range(0..total);
    for (i, &w) in live.iter().enumerate() {
        if roll < w {
            return i + 2;
        }
        roll -= w;
    }
    unreachable!()
}
