//! Immutable simplicial complexes on a ground set `[m] = {1, ..., m}` and the
//! purely combinatorial operations on them: faces, links, stars, deletions,
//! full subcomplexes, joins, simplicial wedges, minimal non-faces and
//! canonical forms.
//!
//! A complex is stored as its facet antichain; the downward closure is never
//! materialized eagerly. Faces are bitmasks, so everything here is total for
//! ground sets of size up to [`MAX_GROUND_SET`]. The irrelevant complex `{∅}`
//! is the single value with `m = 0`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// 1-based vertex index into the ground set of the owning complex.
pub type VertexId = usize;

/// Hard cap on the ground-set size; keeps every subset iteration honest.
pub const MAX_GROUND_SET: usize = 32;

/// Cap for brute-force canonicalization (`m!` permutations).
pub const MAX_CANONICAL_M: usize = 8;

/// A face: a duplicate-free set of vertices, stored as a bitmask where bit
/// `v - 1` encodes vertex `v`. The empty face has dimension -1.
#[derive(Clone, Copy, Debug, Default, Hash, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_mask(mask: u64) -> Face {
        Face(mask)
    }

    pub fn from_vertices(vertices: &[VertexId]) -> Result<Face> {
        let mut mask = 0u64;
        for &v in vertices {
            if !(1..=MAX_GROUND_SET).contains(&v) {
                return Err(Error::BadVertex {
                    vertex: v,
                    m: MAX_GROUND_SET,
                });
            }
            mask |= 1 << (v - 1);
        }
        Ok(Face(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn vertices(self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.card());
        let mut bits = self.0;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            out.push(b + 1);
            bits &= bits - 1;
        }
        out
    }

    /// Number of vertices.
    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    /// `|σ| - 1`, so the empty face has dimension -1.
    pub fn dim(self) -> i64 {
        self.card() as i64 - 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: VertexId) -> bool {
        (1..=64).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersect(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn insert(self, v: VertexId) -> Face {
        Face(self.0 | (1 << (v - 1)))
    }

    pub fn remove(self, v: VertexId) -> Face {
        Face(self.0 & !(1 << (v - 1)))
    }

    /// Re-indexes this face order-preservingly into the ground set spanned by
    /// `keep`: the i-th smallest vertex of `keep` becomes vertex `i + 1`.
    /// Bits outside `keep` are dropped.
    pub fn compress_into(self, keep: Face) -> Face {
        let mut out = 0u64;
        let mut idx = 0u32;
        let mut bits = keep.0;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if self.0 & low != 0 {
                out |= 1 << idx;
            }
            idx += 1;
            bits &= bits - 1;
        }
        Face(out)
    }

    /// Shifts all vertices up by `offset` (used when joining complexes).
    pub fn shift(self, offset: usize) -> Face {
        Face(self.0 << offset)
    }

    fn permuted(self, perm: &[usize]) -> Face {
        // perm[i] = new 0-based position of old 0-based vertex i
        let mut out = 0u64;
        let mut bits = self.0;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            out |= 1 << perm[b];
            bits &= bits - 1;
        }
        Face(out)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.vertices().iter().join(","))
    }
}

/// The face-count vector: entry `d` is the number of `d`-dimensional faces,
/// for `d = 0..=dim(K)`. The irrelevant complex has the empty f-vector.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FVector(pub Vec<usize>);

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// Canonical form of a complex: the lexicographically least sorted facet-mask
/// list over all vertex permutations. Two complexes are isomorphic iff their
/// keys are equal.
#[derive(Clone, Debug, Hash, PartialEq, Eq, PartialOrd, Ord)]
pub struct IsoClassKey {
    pub m: usize,
    pub facets: Vec<u64>,
}

/// A finite simplicial complex: a ground-set size `m` together with the
/// antichain of its maximal faces. Every vertex of `[m]` lies in some facet;
/// the irrelevant complex `{∅}` is encoded as `m = 0` with facet set `{∅}`.
///
/// Values are immutable after construction and all operations are pure.
#[derive(Clone, Debug, Hash, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The irrelevant complex `{∅}`.
    pub fn irrelevant() -> SimplicialComplex {
        SimplicialComplex {
            m: 0,
            facets: vec![Face::EMPTY],
        }
    }

    /// Builds a complex from a list of generating faces: the facets are the
    /// maximal elements of the input and the complex is their downward
    /// closure.
    pub fn from_facets(m: usize, faces: &[Face]) -> Result<SimplicialComplex> {
        if m > MAX_GROUND_SET {
            return Err(Error::TooLarge {
                m,
                max: MAX_GROUND_SET,
            });
        }
        let full = full_mask(m);
        for f in faces {
            if f.mask() & !full != 0 {
                let bad = f.minus(Face(full)).vertices()[0];
                return Err(Error::BadVertex { vertex: bad, m });
            }
        }
        if m == 0 {
            return Ok(SimplicialComplex::irrelevant());
        }
        let union = faces.iter().fold(0u64, |acc, f| acc | f.mask());
        if union != full {
            let missing = Face(full & !union).vertices()[0];
            return Err(Error::GhostVertex { vertex: missing });
        }
        let facets = maximal_antichain(faces);
        Ok(SimplicialComplex { m, facets })
    }

    /// The simplex Δ^[m] on `m` vertices; Δ^[0] = {∅}.
    pub fn simplex(m: usize) -> SimplicialComplex {
        if m == 0 {
            return SimplicialComplex::irrelevant();
        }
        SimplicialComplex {
            m,
            facets: vec![Face(full_mask(m))],
        }
    }

    /// The boundary ∂Δ^[m] of the simplex, a sphere of dimension `m - 2`;
    /// ∂Δ^[1] = {∅}.
    pub fn boundary_simplex(m: usize) -> SimplicialComplex {
        if m <= 1 {
            return SimplicialComplex::irrelevant();
        }
        let full = full_mask(m);
        let mut facets: Vec<Face> = (1..=m).map(|v| Face(full).remove(v)).collect();
        facets.sort();
        SimplicialComplex { m, facets }
    }

    /// The simplex-sphere join Δ^[r] * ∂Δ^[n_1] * ... * ∂Δ^[n_k].
    pub fn sphere_join(r: usize, blocks: &[usize]) -> SimplicialComplex {
        let mut k = SimplicialComplex::simplex(r);
        for &n in blocks {
            k = k.join(&SimplicialComplex::boundary_simplex(n));
        }
        k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_irrelevant(&self) -> bool {
        self.m == 0
    }

    pub fn vertex_set(&self) -> Face {
        Face(full_mask(self.m))
    }

    /// `dim(K)`: the maximal facet dimension; -1 for {∅}.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// `mdim(K)`: the minimal dimension among the maximal faces; -1 for {∅}.
    pub fn mdim(&self) -> i64 {
        self.facets.iter().map(|f| f.dim()).min().unwrap_or(-1)
    }

    /// A complex is pure when all facets share one dimension.
    pub fn is_pure(&self) -> bool {
        self.mdim() == self.dim()
    }

    /// The vertices lying on some facet of minimal dimension.
    pub fn v_mdim(&self) -> Vec<VertexId> {
        let md = self.mdim();
        let mask = self
            .facets
            .iter()
            .filter(|f| f.dim() == md)
            .fold(Face::EMPTY, |acc, f| acc.union(*f));
        mask.vertices()
    }

    /// Membership test against the downward closure of the facets.
    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces, the empty face included, as sorted bitmasks.
    pub fn face_masks(&self) -> Vec<u64> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
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

    pub fn faces(&self) -> Vec<Face> {
        self.face_masks().into_iter().map(Face).collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0usize; (self.dim() + 1).max(0) as usize];
        for mask in self.face_masks() {
            let c = mask.count_ones() as usize;
            if c > 0 {
                counts[c - 1] += 1;
            }
        }
        FVector(counts)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < 1 || v > self.m {
            Err(Error::BadVertex {
                vertex: v,
                m: self.m,
            })
        } else {
            Ok(())
        }
    }

    fn check_subset(&self, j: Face) -> Result<()> {
        if j.mask() & !full_mask(self.m) != 0 {
            let bad = j.minus(self.vertex_set()).vertices()[0];
            return Err(Error::BadVertex {
                vertex: bad,
                m: self.m,
            });
        }
        Ok(())
    }

    /// The full subcomplex `K_J`: all faces of `K` contained in `J`,
    /// re-indexed order-preservingly to a ground set of size `|J|`.
    pub fn full_subcomplex(&self, j: &[VertexId]) -> Result<SimplicialComplex> {
        let jf = Face::from_vertices(j)?;
        self.check_subset(jf)?;
        Ok(self.restrict_mask(jf))
    }

    /// `K_J` by mask, without vertex validation (internal fast path).
    pub fn restrict_mask(&self, j: Face) -> SimplicialComplex {
        if j.is_empty() {
            return SimplicialComplex::irrelevant();
        }
        let cut: Vec<Face> = self.facets.iter().map(|f| f.intersect(j)).collect();
        let facets = maximal_antichain(&cut)
            .into_iter()
            .map(|f| f.compress_into(j))
            .collect();
        SimplicialComplex {
            m: j.card(),
            facets,
        }
    }

    /// Facets of `link_K σ` in the ambient labels of `K`, together with the
    /// vertex support of the link.
    pub fn link_ambient(&self, sigma: Face) -> Result<(Vec<Face>, Face)> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace);
        }
        let cut: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .map(|f| f.minus(sigma))
            .collect();
        let support = cut.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        Ok((cut, support))
    }

    /// `link_K σ = {τ ∈ K | σ ∪ τ ∈ K, σ ∩ τ = ∅}` as a standalone complex on
    /// the vertices appearing in it.
    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        let (facets, support) = self.link_ambient(sigma)?;
        Ok(reindex(facets, support))
    }

    /// `⋆_K σ = {τ ∈ K | σ ∪ τ ∈ K}` as a standalone complex on the vertices
    /// appearing in it.
    pub fn star(&self, sigma: Face) -> Result<SimplicialComplex> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace);
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .copied()
            .collect();
        let support = facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        Ok(reindex(facets, support))
    }

    /// Vertex support of the star of `σ` in ambient labels.
    pub fn star_support(&self, sigma: Face) -> Result<Face> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace);
        }
        Ok(self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .fold(Face::EMPTY, |acc, f| acc.union(*f)))
    }

    /// `K \ v := K|_{V(K) \ {v}}`; on `m = 1` this yields {∅}.
    pub fn delete_vertex(&self, v: VertexId) -> Result<SimplicialComplex> {
        if self.m == 0 {
            return Err(Error::BadVertex { vertex: v, m: 0 });
        }
        self.check_vertex(v)?;
        Ok(self.restrict_mask(self.vertex_set().remove(v)))
    }

    /// The join `K * L` on the ground set `[m_K + m_L]`, with `L`'s vertices
    /// shifted above `K`'s.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.union(g.shift(self.m)));
            }
        }
        facets.sort();
        facets.dedup();
        SimplicialComplex {
            m: self.m + other.m,
            facets,
        }
    }

    /// The simplicial wedge `K(v) = (v̄₁v₂ * link_K v) ∪ ((v₁ ∪ v₂) * (K \ v))`
    /// on `m + 1` vertices, where `v` plays `v₁` and the new vertex `m + 1`
    /// plays `v₂`.
    pub fn simplicial_wedge(&self, v: VertexId) -> Result<SimplicialComplex> {
        if self.m == 0 {
            return Err(Error::BadVertex { vertex: v, m: 0 });
        }
        self.check_vertex(v)?;
        let vf = Face::EMPTY.insert(v);
        let v2 = self.m + 1;
        let mut gen = Vec::new();
        for f in &self.facets {
            if f.contains(v) {
                // v̄₁v₂ * link part
                gen.push(f.minus(vf).insert(v).insert(v2));
            }
        }
        for d in maximal_antichain(&self.facets.iter().map(|f| f.minus(vf)).collect::<Vec<_>>()) {
            gen.push(d.insert(v));
            gen.push(d.insert(v2));
        }
        SimplicialComplex::from_facets(self.m + 1, &gen)
    }

    /// The iterated-wedge complex `K(J)`: vertex `i` is replaced by a block of
    /// `j_i` vertices, and the minimal non-faces of `K(J)` are exactly the
    /// blown-up minimal non-faces of `K`.
    pub fn doubling(&self, multiplicities: &[usize]) -> Result<SimplicialComplex> {
        if multiplicities.len() != self.m || multiplicities.contains(&0) {
            return Err(Error::BadArity);
        }
        let total: usize = multiplicities.iter().sum();
        if total > MAX_GROUND_SET {
            return Err(Error::TooLarge {
                m: total,
                max: MAX_GROUND_SET,
            });
        }
        if self.m == 0 {
            return Ok(SimplicialComplex::irrelevant());
        }
        // block[i] = mask of the new vertices replacing old vertex i+1
        let mut blocks = Vec::with_capacity(self.m);
        let mut start = 0usize;
        for &j in multiplicities {
            blocks.push(Face(((1u64 << j) - 1) << start));
            start += j;
        }
        let blown: Vec<Face> = self
            .minimal_non_faces()
            .into_iter()
            .map(|g| {
                g.vertices()
                    .into_iter()
                    .fold(Face::EMPTY, |acc, v| acc.union(blocks[v - 1]))
            })
            .collect();
        let full = Face(full_mask(total));
        let facets: Vec<Face> = minimal_transversals(&blown, full)
            .into_iter()
            .map(|t| full.minus(t))
            .collect();
        SimplicialComplex::from_facets(total, &facets)
    }

    /// All inclusion-minimal subsets of `[m]` that are not faces; empty
    /// exactly for the simplex. These are the minimal generators of the
    /// Stanley-Reisner ideal.
    pub fn minimal_non_faces(&self) -> Vec<Face> {
        // N is a non-face iff N hits the complement of every facet, so the
        // minimal non-faces are the minimal transversals of the complements.
        let full = self.vertex_set();
        let complements: Vec<Face> = self.facets.iter().map(|f| full.minus(*f)).collect();
        minimal_transversals(&complements, full)
    }

    /// Brute-force canonical form over all `m!` vertex permutations.
    pub fn canonical_key(&self) -> Result<IsoClassKey> {
        if self.m > MAX_CANONICAL_M {
            return Err(Error::TooLarge {
                m: self.m,
                max: MAX_CANONICAL_M,
            });
        }
        let mut best: Option<Vec<u64>> = None;
        for perm in (0..self.m).permutations(self.m) {
            let mut image: Vec<u64> = self
                .facets
                .iter()
                .map(|f| f.permuted(&perm).mask())
                .collect();
            image.sort_unstable();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
        Ok(IsoClassKey {
            m: self.m,
            facets: best.unwrap_or_else(|| vec![0]),
        })
    }

    pub fn are_isomorphic(&self, other: &SimplicialComplex) -> Result<bool> {
        if self.m != other.m || self.facets.len() != other.facets.len() {
            return Ok(false);
        }
        let mut a: Vec<usize> = self.facets.iter().map(|f| f.card()).collect();
        let mut b: Vec<usize> = other.facets.iter().map(|f| f.card()).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(false);
        }
        Ok(self.canonical_key()? == other.canonical_key()?)
    }

    /// Internal consistency check, used by tests.
    #[doc(hidden)]
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            if self.facets != vec![Face::EMPTY] {
                return Err(Error::Parse("irrelevant complex malformed".into()));
            }
            return Ok(());
        }
        let mut union = Face::EMPTY;
        for (i, f) in self.facets.iter().enumerate() {
            self.check_subset(*f)?;
            union = union.union(*f);
            for (k, g) in self.facets.iter().enumerate() {
                if i != k && f.is_subset_of(*g) {
                    return Err(Error::Parse("facets are not an antichain".into()));
                }
            }
        }
        if union != self.vertex_set() {
            return Err(Error::GhostVertex {
                vertex: self.vertex_set().minus(union).vertices()[0],
            });
        }
        Ok(())
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            return write!(f, "m=0; facets=()");
        }
        write!(
            f,
            "m={}; facets={}",
            self.m,
            self.facets.iter().map(|x| x.to_string()).join(",")
        )
    }
}

impl FromStr for SimplicialComplex {
    type Err = Error;

    /// Parses the facet text format `m=<int>; facets=(a,b,c),(d,e),...`;
    /// `m=0; facets=()` encodes {∅}.
    fn from_str(s: &str) -> Result<SimplicialComplex> {
        let s = s.trim();
        let rest = s
            .strip_prefix("m=")
            .ok_or_else(|| Error::Parse(format!("expected `m=...`: {s}")))?;
        let (m_str, rest) = rest
            .split_once(';')
            .ok_or_else(|| Error::Parse("missing `;` after m".into()))?;
        let m: usize = m_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad ground-set size `{m_str}`")))?;
        let body = rest
            .trim()
            .strip_prefix("facets=")
            .ok_or_else(|| Error::Parse("expected `facets=`".into()))?
            .trim();
        let faces = parse_face_list(body)?;
        SimplicialComplex::from_facets(m, &faces)
    }
}

fn parse_face_list(body: &str) -> Result<Vec<Face>> {
    if body == "()" || body.is_empty() {
        return Ok(Vec::new());
    }
    let mut faces = Vec::new();
    let mut chars = body.chars().peekable();
    loop {
        match chars.next() {
            Some('(') => {}
            other => return Err(Error::Parse(format!("expected `(`, found {other:?}"))),
        }
        let mut face = Face::EMPTY;
        let mut num = String::new();
        loop {
            match chars.next() {
                Some(c) if c.is_ascii_digit() => num.push(c),
                Some(',') | Some(')') if num.is_empty() => {
                    return Err(Error::Parse("empty vertex entry".into()))
                }
                Some(sep @ (',' | ')')) => {
                    let v: usize = num
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad vertex `{num}`")))?;
                    let vf = Face::from_vertices(&[v])?;
                    if !face.intersect(vf).is_empty() {
                        return Err(Error::Parse(format!("duplicate vertex {v} in face")));
                    }
                    face = face.union(vf);
                    num.clear();
                    if sep == ')' {
                        break;
                    }
                }
                other => return Err(Error::Parse(format!("unexpected {other:?} in face"))),
            }
        }
        faces.push(face);
        match chars.next() {
            None => break,
            Some(',') => continue,
            other => return Err(Error::Parse(format!("unexpected {other:?} after face"))),
        }
    }
    Ok(faces)
}

fn full_mask(m: usize) -> u64 {
    if m == 0 {
        0
    } else {
        (!0u64) >> (64 - m)
    }
}

/// Maximal elements of a family of faces, sorted and deduplicated.
fn maximal_antichain(faces: &[Face]) -> Vec<Face> {
    let mut out: Vec<Face> = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        let dominated = faces
            .iter()
            .enumerate()
            .any(|(k, g)| f.is_subset_of(*g) && (f != g || k < i));
        if !dominated {
            out.push(*f);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn reindex(facets: Vec<Face>, support: Face) -> SimplicialComplex {
    if support.is_empty() {
        return SimplicialComplex::irrelevant();
    }
    let mut mapped: Vec<Face> = facets
        .into_iter()
        .map(|f| f.compress_into(support))
        .collect();
    mapped.sort();
    mapped.dedup();
    SimplicialComplex {
        m: support.card(),
        facets: mapped,
    }
}

/// All inclusion-minimal subsets of `universe` meeting every set of `family`.
/// If some member of `family` is empty there is no transversal.
fn minimal_transversals(family: &[Face], universe: Face) -> Vec<Face> {
    let mut out: BTreeSet<Face> = BTreeSet::new();
    fn recurse(family: &[Face], hit: Face, banned: Face, out: &mut BTreeSet<Face>) {
        match family.iter().find(|c| c.intersect(hit).is_empty()) {
            None => {
                // minimality: each chosen vertex must be the sole hit of some set
                let minimal = hit.vertices().into_iter().all(|v| {
                    family
                        .iter()
                        .any(|c| c.intersect(hit) == Face::EMPTY.insert(v))
                });
                if minimal {
                    out.insert(hit);
                }
            }
            Some(c) => {
                let mut avail = c.minus(banned);
                let mut banned = banned;
                while !avail.is_empty() {
                    let v = avail.vertices()[0];
                    recurse(family, hit.insert(v), banned, out);
                    banned = banned.insert(v);
                    avail = avail.remove(v);
                }
            }
        }
    }
    if family.iter().any(|c| c.is_empty()) {
        return Vec::new();
    }
    let _ = universe;
    recurse(family, Face::EMPTY, Face::EMPTY, &mut out);
    let mut v: Vec<Face> = out.into_iter().collect();
    v.sort_by_key(|f| (f.card(), f.mask()));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    pub(crate) fn cx(s: &str) -> SimplicialComplex {
        s.parse().unwrap()
    }

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs).unwrap()
    }

    #[test]
    fn from_facets_examples() {
        let tri = cx("m=3; facets=(1,2),(1,3),(2,3)");
        assert_eq!(tri.dim(), 1);
        assert_eq!(tri.mdim(), 1);

        let t42 = cx("m=4; facets=(1,2,3),(4)");
        assert_eq!(t42.f_vector(), FVector(vec![4, 3, 1]));
        assert_eq!(t42.mdim(), 0);

        let empty = cx("m=0; facets=()");
        assert!(empty.is_irrelevant());
        assert_eq!(empty.dim(), -1);
    }

    #[test]
    fn from_facets_drops_non_maximal_faces() {
        let k = SimplicialComplex::from_facets(3, &[face(&[1, 2, 3]), face(&[1, 2]), face(&[3])])
            .unwrap();
        assert_eq!(k.facets(), &[face(&[1, 2, 3])]);
    }

    #[test]
    fn from_facets_rejects_ghosts_and_bad_vertices() {
        assert_eq!(
            SimplicialComplex::from_facets(3, &[face(&[1, 2])]),
            Err(Error::GhostVertex { vertex: 3 })
        );
        assert_eq!(
            SimplicialComplex::from_facets(3, &[face(&[1, 2]), face(&[3, 4])]),
            Err(Error::BadVertex { vertex: 4, m: 3 })
        );
    }

    #[test]
    fn full_subcomplex_examples() {
        let tri = cx("m=3; facets=(1,2),(1,3),(2,3)");
        // every pair spans an edge of the hollow triangle
        let edge = tri.full_subcomplex(&[1, 2]).unwrap();
        assert_eq!(edge, SimplicialComplex::simplex(2));

        let square = cx("m=4; facets=(1,2),(1,3),(2,4),(3,4)");
        let diagonal = square.full_subcomplex(&[1, 4]).unwrap();
        assert_eq!(diagonal, SimplicialComplex::boundary_simplex(2));

        let simplex = SimplicialComplex::simplex(4);
        for j in [vec![2], vec![1, 3], vec![1, 2, 4]] {
            let sub = simplex.full_subcomplex(&j).unwrap();
            assert_eq!(sub, SimplicialComplex::simplex(j.len()));
        }

        let c5 = cx("m=5; facets=(1,2),(2,3),(3,4),(4,5),(1,5)");
        let path = c5.full_subcomplex(&[1, 2, 3, 4]).unwrap();
        assert!(path
            .are_isomorphic(&cx("m=4; facets=(1,2),(2,3),(3,4)"))
            .unwrap());
        assert_eq!(
            c5.full_subcomplex(&[]).unwrap(),
            SimplicialComplex::irrelevant()
        );
    }

    #[test]
    fn link_star_delete_examples() {
        let tri = cx("m=3; facets=(1,2),(1,3),(2,3)");
        let lk = tri.link(face(&[1])).unwrap();
        assert_eq!(lk, SimplicialComplex::boundary_simplex(2));

        let t43 = cx("m=4; facets=(1,2,3),(1,4)");
        assert_eq!(t43.link(face(&[4])).unwrap(), SimplicialComplex::simplex(1));

        assert_eq!(tri.delete_vertex(3).unwrap(), SimplicialComplex::simplex(2));
        assert_eq!(tri.link(face(&[1, 2, 3])), Err(Error::NotAFace));

        let star = tri.star(face(&[1])).unwrap();
        assert!(star.are_isomorphic(&cx("m=3; facets=(1,2),(1,3)")).unwrap());

        assert_eq!(
            SimplicialComplex::simplex(1).delete_vertex(1).unwrap(),
            SimplicialComplex::irrelevant()
        );
    }

    #[test]
    fn join_examples() {
        let s0 = SimplicialComplex::boundary_simplex(2);
        let c4 = s0.join(&s0);
        assert!(c4
            .are_isomorphic(&cx("m=4; facets=(1,2),(1,3),(2,4),(3,4)"))
            .unwrap());

        let k = cx("m=4; facets=(1,2,3),(1,4),(2,4)");
        assert_eq!(k.join(&SimplicialComplex::irrelevant()), k);
        assert_eq!(SimplicialComplex::irrelevant().join(&k), k);

        let p3 = SimplicialComplex::simplex(1).join(&s0);
        assert!(p3.are_isomorphic(&cx("m=3; facets=(1,2),(1,3)")).unwrap());
    }

    #[test]
    fn join_dims_multiply_small() {
        let reps: Vec<SimplicialComplex> = [
            "m=1; facets=(1)",
            "m=2; facets=(1),(2)",
            "m=2; facets=(1,2)",
            "m=3; facets=(1,2),(3)",
            "m=4; facets=(1,2),(1,3),(2,4),(3,4)",
            "m=4; facets=(1,2,3),(4)",
        ]
        .iter()
        .map(|s| cx(s))
        .collect();
        for a in &reps {
            for b in &reps {
                let j = a.join(b);
                assert_eq!(j.dim(), a.dim() + b.dim() + 1);
                assert_eq!(j.mdim(), a.mdim() + b.mdim() + 1);
                j.validate().unwrap();
            }
        }
    }

    #[test]
    fn sphere_join_examples() {
        assert_eq!(
            SimplicialComplex::boundary_simplex(2).facets(),
            &[face(&[1]), face(&[2])]
        );
        let hex = SimplicialComplex::sphere_join(0, &[2, 2, 2]);
        assert_eq!(hex.m(), 6);
        assert_eq!(hex.dim(), 2);
        assert_eq!(hex.f_vector(), FVector(vec![6, 12, 8]));
        assert_eq!(
            SimplicialComplex::sphere_join(1, &[]),
            SimplicialComplex::simplex(1)
        );
        // ∂Δ^[1] = {∅} is the join identity
        assert_eq!(
            SimplicialComplex::sphere_join(0, &[1, 3]),
            SimplicialComplex::boundary_simplex(3)
        );
    }

    /// Brute-force oracle: scan all subsets of [m] for inclusion-minimal
    /// non-faces.
    fn minimal_non_faces_brute(k: &SimplicialComplex) -> Vec<Face> {
        let mut out = Vec::new();
        for mask in 0..(1u64 << k.m()) {
            let f = Face::from_mask(mask);
            if k.is_face(f) {
                continue;
            }
            let minimal = f.vertices().into_iter().all(|v| k.is_face(f.remove(v)));
            if minimal {
                out.push(f);
            }
        }
        out.sort_by_key(|f| (f.card(), f.mask()));
        out
    }

    #[test]
    fn minimal_non_faces_examples() {
        let tri = cx("m=3; facets=(1,2),(1,3),(2,3)");
        assert_eq!(tri.minimal_non_faces(), vec![face(&[1, 2, 3])]);

        let c4 = cx("m=4; facets=(1,2),(1,3),(2,4),(3,4)");
        assert_eq!(c4.minimal_non_faces(), minimal_non_faces_brute(&c4));
        assert_eq!(c4.minimal_non_faces(), vec![face(&[2, 3]), face(&[1, 4])]);

        let split = cx("m=4; facets=(1),(2,3,4)");
        assert_eq!(split.minimal_non_faces(), minimal_non_faces_brute(&split));
        assert_eq!(
            split.minimal_non_faces(),
            vec![face(&[1, 2]), face(&[1, 3]), face(&[1, 4])]
        );

        assert!(SimplicialComplex::simplex(4).minimal_non_faces().is_empty());
        assert!(SimplicialComplex::irrelevant()
            .minimal_non_faces()
            .is_empty());
    }

    #[test]
    fn minimal_non_faces_match_brute_force_exhaustively() {
        for m in 1..=4 {
            for k in crate::enumerate::all_complexes_labeled(m) {
                assert_eq!(k.minimal_non_faces(), minimal_non_faces_brute(&k), "{k}");
            }
        }
    }

    #[test]
    fn wedge_examples() {
        // the wedge of S⁰ at either point is ∂Δ^[3]: the defining union expands
        // to the three boundary edges
        let s0 = SimplicialComplex::boundary_simplex(2);
        let w = s0.simplicial_wedge(1).unwrap();
        assert!(w
            .are_isomorphic(&SimplicialComplex::boundary_simplex(3))
            .unwrap());

        let edge = SimplicialComplex::simplex(1).simplicial_wedge(1).unwrap();
        assert_eq!(edge, SimplicialComplex::simplex(2));

        for s in [
            "m=3; facets=(1,2),(1,3)",
            "m=4; facets=(1,2),(1,3),(2,4),(3,4)",
            "m=4; facets=(1,2,3),(4)",
            "m=5; facets=(1,2,3),(1,2,4),(1,3,5),(4,5)",
        ] {
            let k = cx(s);
            for v in 1..=k.m() {
                let w = k.simplicial_wedge(v).unwrap();
                assert_eq!(w.m(), k.m() + 1);
                assert_eq!(w.mdim(), k.mdim() + 1);
                w.validate().unwrap();
            }
        }
    }

    #[test]
    fn doubling_examples() {
        let s0 = SimplicialComplex::boundary_simplex(2);
        let d = s0.doubling(&[2, 1]).unwrap();
        assert!(d.are_isomorphic(&s0.simplicial_wedge(1).unwrap()).unwrap());

        for m in 2..=4 {
            let b = SimplicialComplex::boundary_simplex(m);
            let mult: Vec<usize> = (0..m).map(|i| 1 + (i % 2)).collect();
            let total: usize = mult.iter().sum();
            assert!(b
                .doubling(&mult)
                .unwrap()
                .are_isomorphic(&SimplicialComplex::boundary_simplex(total))
                .unwrap());
        }

        let k = cx("m=4; facets=(1,2,3),(1,4),(2,4)");
        assert!(k
            .doubling(&[1, 1, 1, 1])
            .unwrap()
            .are_isomorphic(&k)
            .unwrap());
        assert_eq!(k.doubling(&[1, 1, 1]), Err(Error::BadArity));
        assert_eq!(k.doubling(&[1, 0, 1, 1]), Err(Error::BadArity));
    }

    #[test]
    fn doubling_equals_iterated_wedge() {
        for m in 2..=4 {
            for k in crate::enumerate::all_complexes_reps(m) {
                for v in 1..=m {
                    let mut mult = vec![1; m];
                    mult[v - 1] = 2;
                    let direct = k.doubling(&mult).unwrap();
                    let wedged = k.simplicial_wedge(v).unwrap();
                    assert!(direct.are_isomorphic(&wedged).unwrap(), "{k} at {v}");
                }
            }
        }
    }

    #[test]
    fn canonical_key_examples() {
        let c4a = cx("m=4; facets=(1,2),(1,3),(2,4),(3,4)");
        let c4b = cx("m=4; facets=(1,2),(2,3),(3,4),(1,4)");
        assert_eq!(c4a.canonical_key().unwrap(), c4b.canonical_key().unwrap());

        let p4 = cx("m=4; facets=(1,2),(2,3),(3,4)");
        assert_ne!(c4a.canonical_key().unwrap(), p4.canonical_key().unwrap());

        let t47 = cx("m=4; facets=(1,2,3),(1,2,4),(1,3,4)");
        let t48 = cx("m=4; facets=(1,2,3),(1,2,4),(1,3,4),(2,3,4)");
        assert_ne!(t47.canonical_key().unwrap(), t48.canonical_key().unwrap());

        assert!(SimplicialComplex::simplex(9).canonical_key().is_err());
    }

    #[test]
    fn canonical_key_invariant_under_relabeling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for s in [
            "m=5; facets=(1,2),(2,3),(3,4),(4,5),(1,5)",
            "m=5; facets=(1,3),(1,4),(2,3),(2,4),(3,5),(4,5)",
            "m=4; facets=(1,2,3),(1,4),(2,4)",
            "m=6; facets=(1,2,3),(3,4,5),(5,6,1)",
        ] {
            let k = cx(s);
            let key = k.canonical_key().unwrap();
            for _ in 0..100 {
                let mut perm: Vec<usize> = (1..=k.m()).collect();
                perm.shuffle(&mut rng);
                let relabeled: Vec<Face> = k
                    .facets()
                    .iter()
                    .map(|f| {
                        Face::from_vertices(
                            &f.vertices()
                                .iter()
                                .map(|&v| perm[v - 1])
                                .collect::<Vec<_>>(),
                        )
                        .unwrap()
                    })
                    .collect();
                let k2 = SimplicialComplex::from_facets(k.m(), &relabeled).unwrap();
                assert_eq!(k2.canonical_key().unwrap(), key);
            }
        }
    }

    #[test]
    fn dims_and_vmdim() {
        let t52 = cx("m=5; facets=(1,2,3),(1,2,4),(1,3,5),(4,5)");
        assert_eq!(t52.f_vector(), FVector(vec![5, 8, 3]));
        assert_eq!(t52.mdim(), 1);

        let s = SimplicialComplex::simplex(5);
        assert_eq!(s.dim(), 4);
        assert!(s.is_pure());

        let split = cx("m=4; facets=(1),(2,3,4)");
        assert_eq!(split.dim(), 2);
        assert_eq!(split.mdim(), 0);
        assert_eq!(split.v_mdim(), vec![1]);
        assert!(!split.is_pure());
    }

    #[test]
    fn text_format_round_trip() {
        for s in [
            "m=0; facets=()",
            "m=1; facets=(1)",
            "m=5; facets=(1,2),(2,3),(3,4),(4,5),(1,5)",
            "m=4; facets=(4),(1,2,3)",
        ] {
            let k = cx(s);
            let printed = k.to_string();
            let back: SimplicialComplex = printed.parse().unwrap();
            assert_eq!(back, k);
        }
        assert!("m=3; facets=(1,2),(3,3)"
            .parse::<SimplicialComplex>()
            .is_err());
        assert!("facets=(1)".parse::<SimplicialComplex>().is_err());
        assert!("m=2; facets=(1,5)".parse::<SimplicialComplex>().is_err());
    }

    #[test]
    fn minimal_non_faces_empty_iff_simplex() {
        for m in 1..=4 {
            for k in crate::enumerate::all_complexes_labeled(m) {
                assert_eq!(
                    k.minimal_non_faces().is_empty(),
                    k == SimplicialComplex::simplex(m)
                );
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
            (1..=max_m).prop_flat_map(|m| {
                proptest::collection::vec(proptest::collection::btree_set(1..=m, 1..=m), 1..=6)
                    .prop_map(move |families| {
                        let mut faces: Vec<Face> = families
                            .into_iter()
                            .map(|s| {
                                Face::from_vertices(&s.into_iter().collect::<Vec<_>>()).unwrap()
                            })
                            .collect();
                        for v in 1..=m {
                            faces.push(Face::from_vertices(&[v]).unwrap());
                        }
                        SimplicialComplex::from_facets(m, &faces).unwrap()
                    })
            })
        }

        proptest! {
            #[test]
            fn every_operation_preserves_the_facet_antichain(
                k in arb_complex(6),
                l in arb_complex(4),
            ) {
                k.validate().unwrap();
                k.join(&l).validate().unwrap();
                for v in 1..=k.m() {
                    let vf = Face::from_vertices(&[v]).unwrap();
                    k.simplicial_wedge(v).unwrap().validate().unwrap();
                    k.delete_vertex(v).unwrap().validate().unwrap();
                    k.link(vf).unwrap().validate().unwrap();
                    k.star(vf).unwrap().validate().unwrap();
                }
                let half: Vec<usize> = (1..=k.m()).step_by(2).collect();
                k.full_subcomplex(&half).unwrap().validate().unwrap();
            }

            #[test]
            fn text_format_round_trips(k in arb_complex(8)) {
                let printed = k.to_string();
                prop_assert_eq!(printed.parse::<SimplicialComplex>().unwrap(), k);
            }
        }
    }
}
