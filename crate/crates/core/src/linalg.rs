//! Exact linear algebra over ℚ and prime fields 𝔽_p.
//!
//! Rank and kernel computations use persistence-style column reduction on
//! sparse columns: reduce each column against the stored pivot column with the
//! same low row until it either dies (a kernel element) or contributes a new
//! pivot. Arithmetic is exact throughout; no floating point anywhere.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The coefficient field: the rationals or a prime field 𝔽_p with p < 2³¹.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn rationals() -> FieldSpec {
        FieldSpec::Rationals
    }

    pub fn prime(p: u64) -> Result<FieldSpec> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldSpec> {
        if s == "Q" || s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:").or_else(|| s.strip_prefix("fp:")) {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime `{p}`")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::Parse(format!(
            "bad field `{s}` (expected Q or Fp:<prime>)"
        )))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Field operations over a runtime-chosen element type.
pub(crate) trait FieldOps {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn embed(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

pub(crate) struct Rationals;

impl FieldOps for Rationals {
    type Elem = BigRational;

    fn embed(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a.clone()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
}

pub(crate) struct PrimeField {
    pub p: u64,
}

impl FieldOps for PrimeField {
    type Elem = u64;

    fn embed(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat: a^(p-2) mod p
        debug_assert!(*a != 0);
        let mut base = *a as u128;
        let mut exp = self.p - 2;
        let p = self.p as u128;
        let mut acc: u128 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u64
    }
}

/// Sparse column: (row, coefficient) pairs sorted by row, no zero entries.
pub(crate) type SparseCol<E> = Vec<(u32, E)>;

/// `target += c * source`, merging two sorted sparse columns.
pub(crate) fn axpy<F: FieldOps>(
    f: &F,
    target: &SparseCol<F::Elem>,
    c: &F::Elem,
    source: &SparseCol<F::Elem>,
) -> SparseCol<F::Elem> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut k) = (0, 0);
    while i < target.len() || k < source.len() {
        if k >= source.len() || (i < target.len() && target[i].0 < source[k].0) {
            out.push(target[i].clone());
            i += 1;
        } else if i >= target.len() || source[k].0 < target[i].0 {
            out.push((source[k].0, f.mul(c, &source[k].1)));
            k += 1;
        } else {
            let sum = f.add(&target[i].1, &f.mul(c, &source[k].1));
            if !f.is_zero(&sum) {
                out.push((target[i].0, sum));
            }
            i += 1;
            k += 1;
        }
    }
    out.retain(|(_, e)| !f.is_zero(e));
    out
}

/// Result of reducing a sparse matrix given by its columns.
pub(crate) struct Reduction<E> {
    pub rank: usize,
    /// For every column that reduced to zero, one kernel vector expressed in
    /// the original column basis (sorted sparse coordinates).
    pub kernel: Vec<SparseCol<E>>,
}

/// Persistence-style column reduction. `track_kernel` additionally records,
/// for each dying column, the combination of input columns that kills it.
pub(crate) fn reduce_columns<F: FieldOps>(
    f: &F,
    columns: Vec<SparseCol<F::Elem>>,
    track_kernel: bool,
) -> Reduction<F::Elem> {
    let mut pivot_of_row: HashMap<u32, usize> = HashMap::new();
    let mut stored: Vec<SparseCol<F::Elem>> = Vec::new();
    let mut combos: Vec<SparseCol<F::Elem>> = Vec::new();
    let mut kernel = Vec::new();
    let mut rank = 0usize;

    for (j, mut col) in columns.into_iter().enumerate() {
        let mut combo: SparseCol<F::Elem> = if track_kernel {
            vec![(j as u32, f.embed(1))]
        } else {
            Vec::new()
        };
        loop {
            let Some(&(low, ref lead)) = col.last() else {
                if track_kernel {
                    kernel.push(combo);
                }
                break;
            };
            match pivot_of_row.get(&low) {
                Some(&pi) => {
                    let pivot_lead = &stored[pi].last().unwrap().1;
                    let c = f.neg(&f.div(lead, pivot_lead));
                    col = axpy(f, &col, &c, &stored[pi]);
                    if track_kernel {
                        combo = axpy(f, &combo, &c, &combos[pi]);
                    }
                }
                None => {
                    pivot_of_row.insert(low, stored.len());
                    stored.push(col);
                    if track_kernel {
                        combos.push(combo);
                    }
                    rank += 1;
                    break;
                }
            }
        }
    }
    Reduction { rank, kernel }
}

/// A dense integer matrix; the boundary operators of a chain complex have
/// entries in {-1, 0, 1} regardless of the coefficient field, so ranks over
/// any field are computed from this one representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.entries[r * self.cols + c] = v;
    }

    /// Matrix product, in exact integer arithmetic.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub(crate) fn sparse_columns<F: FieldOps>(&self, f: &F) -> Vec<SparseCol<F::Elem>> {
        (0..self.cols)
            .map(|c| {
                (0..self.rows)
                    .filter_map(|r| {
                        let v = self.get(r, c);
                        if v == 0 {
                            None
                        } else {
                            Some((r as u32, f.embed(v)))
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Exact rank of an integer matrix over the given field.
pub fn rank(matrix: &Matrix, field: &FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => {
            let f = Rationals;
            reduce_columns(&f, matrix.sparse_columns(&f), false).rank
        }
        FieldSpec::PrimeField(p) => {
            let f = PrimeField { p: *p };
            reduce_columns(&f, matrix.sparse_columns(&f), false).rank
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, data: &[i64]) -> Matrix {
        let mut out = Matrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, data[r * cols + c]);
            }
        }
        out
    }

    #[test]
    fn rank_small_matrices() {
        let a = m(2, 2, &[1, 2, 2, 4]);
        assert_eq!(rank(&a, &FieldSpec::Rationals), 1);
        assert_eq!(rank(&a, &FieldSpec::prime(5).unwrap()), 1);

        let b = m(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(rank(&b, &FieldSpec::Rationals), 3);

        // rank depends on the characteristic here: det = 2
        let c = m(2, 2, &[1, 1, 1, -1]);
        assert_eq!(rank(&c, &FieldSpec::Rationals), 2);
        assert_eq!(rank(&c, &FieldSpec::prime(2).unwrap()), 1);
        assert_eq!(rank(&c, &FieldSpec::prime(3).unwrap()), 2);
    }

    #[test]
    fn kernel_combinations_kill_columns() {
        let a = m(2, 3, &[1, 1, 2, 0, 1, 1]);
        let f = Rationals;
        let red = reduce_columns(&f, a.sparse_columns(&f), true);
        assert_eq!(red.rank, 2);
        assert_eq!(red.kernel.len(), 1);
        // verify A * k = 0 for the kernel combination
        for k in &red.kernel {
            for r in 0..2 {
                let mut acc = BigRational::zero();
                for (col, coef) in k {
                    acc += coef * BigRational::from_integer(a.get(r, *col as usize).into());
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField { p: 10007 };
        for a in [1u64, 2, 3, 5000, 10006] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!(
            "Fp:7".parse::<FieldSpec>().unwrap(),
            FieldSpec::PrimeField(7)
        );
        assert!("Fp:6".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::prime(4), Err(Error::NotPrime(4)));
    }
}
