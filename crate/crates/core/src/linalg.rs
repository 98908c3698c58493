//! Exact linear algebra over the rationals.
//!
//! Rows are cleared of denominators and eliminated fraction-free over the
//! integers: eliminating with pivot value `p` from a row with value `t`
//! replaces the row by `(p/g)·row − (t/g)·pivot` with `g = gcd(p, t)`, then
//! divides out the row content. Entries therefore stay as small as the
//! problem allows and no rational arithmetic happens inside the loops.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("vector {index} of the subspace is not contained in the ambient span")]
    NotContained { index: usize },
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Sparse matrix of rationals stored as sorted `(row, col, value)` triplets.
///
/// Positions are unique and every stored value is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Rational)>,
}

impl SparseRationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: Vec::new() }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_triplets(k, k, (0..k).map(|i| (i, i, Rational::one())))
    }

    /// Assembles from triplets; colliding positions are summed exactly and
    /// zeros dropped. Panics on an out-of-range position.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            *acc.entry((r, c)).or_insert_with(Rational::zero) += v;
        }
        let entries = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((r, c), v)| (r, c, v))
            .collect();
        Self { rows, cols, entries }
    }

    pub fn from_dense(rows: &[Vec<Rational>], cols: usize) -> Self {
        Self::from_triplets(
            rows.len(),
            cols,
            rows.iter().enumerate().flat_map(|(r, row)| {
                assert_eq!(row.len(), cols, "ragged dense input");
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(c, v)| (r, c, v.clone()))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, Rational)] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(
            self.cols,
            self.rows,
            self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone())),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (r, c, v) in &self.entries {
            out[*r][*c] = v.clone();
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        let mut out = vec![Rational::zero(); self.rows];
        for (r, c, x) in &self.entries {
            if !v[*c].is_zero() {
                out[*r] += x * &v[*c];
            }
        }
        out
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (r, c, v) in &self.entries {
            rows[*r].push((*c, v.clone()));
        }
        rows
    }

    fn int_rows(&self) -> Vec<IntRow> {
        self.sparse_rows()
            .into_iter()
            .map(|r| IntRow::from_rational(&r))
            .filter(|r| !r.is_empty())
            .collect()
    }
}

/// Basis of the kernel of a matrix, as dense vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullspaceBasis {
    pub dim_domain: usize,
    pub vectors: Vec<Vec<Rational>>,
}

impl NullspaceBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Primitive integer row: sorted by column, nonzero entries, content 1 and a
/// positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct IntRow(Vec<(usize, BigInt)>);

impl IntRow {
    fn from_rational(entries: &[(usize, Rational)]) -> Self {
        let lcm = entries
            .iter()
            .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
        let mut row: Vec<(usize, BigInt)> = entries
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
            .collect();
        row.sort_by_key(|(c, _)| *c);
        let mut out = IntRow(row);
        out.normalize();
        out
    }

    fn from_dense(v: &[Rational]) -> Self {
        let entries: Vec<(usize, Rational)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x.clone()))
            .collect();
        Self::from_rational(&entries)
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn lead(&self) -> Option<usize> {
        self.0.first().map(|(c, _)| *c)
    }

    fn lead_value(&self) -> &BigInt {
        &self.0[0].1
    }

    fn get(&self, col: usize) -> Option<&BigInt> {
        self.0
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.0[i].1)
    }

    fn normalize(&mut self) {
        if self.0.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, v) in &self.0 {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        if self.0[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, v) in &mut self.0 {
                *v /= &g;
            }
        }
    }

    /// Fraction-free elimination of `col` from `self` using `pivot`.
    fn eliminate(&self, pivot: &IntRow, col: usize) -> IntRow {
        let t = match self.get(col) {
            Some(t) => t,
            None => return self.clone(),
        };
        let p = pivot.get(col).expect("pivot has no entry in its column");
        let g = t.gcd(p);
        let a = p / &g;
        let b = t / &g;
        let mut out = Vec::with_capacity(self.0.len() + pivot.0.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.0, &pivot.0);
        while i < x.len() || j < y.len() {
            let cx = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
            let cy = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
            if cx < cy {
                out.push((cx, &a * &x[i].1));
                i += 1;
            } else if cy < cx {
                out.push((cy, -(&b * &y[j].1)));
                j += 1;
            } else {
                let v = &a * &x[i].1 - &b * &y[j].1;
                if !v.is_zero() {
                    out.push((cx, v));
                }
                i += 1;
                j += 1;
            }
        }
        let mut row = IntRow(out);
        row.normalize();
        row
    }
}

/// Row echelon form by fraction-free elimination. Rows are bucketed by their
/// leading column; inside a bucket the pivot is the row with the smallest
/// leading magnitude (ties broken by length). Returns pivot rows sorted by
/// leading column.
fn echelon(rows: Vec<IntRow>, cols: usize) -> Vec<IntRow> {
    let mut buckets: Vec<Vec<IntRow>> = vec![Vec::new(); cols];
    for row in rows {
        if let Some(c) = row.lead() {
            buckets[c].push(row);
        }
    }
    let mut pivots = Vec::new();
    for c in 0..cols {
        let mut bucket = std::mem::take(&mut buckets[c]);
        if bucket.is_empty() {
            continue;
        }
        bucket.sort();
        bucket.dedup();
        let best = bucket
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| (r.lead_value().bits(), r.0.len()))
            .map(|(i, _)| i)
            .unwrap();
        let pivot = bucket.swap_remove(best);
        for row in bucket {
            let reduced = row.eliminate(&pivot, c);
            if let Some(l) = reduced.lead() {
                buckets[l].push(reduced);
            }
        }
        pivots.push(pivot);
    }
    pivots
}

/// Reduced row echelon form: every pivot column is zero outside its pivot row.
fn reduced_echelon(rows: Vec<IntRow>, cols: usize) -> Vec<IntRow> {
    let mut pivots = echelon(rows, cols);
    for i in (0..pivots.len()).rev() {
        let lead = pivots[i].lead().unwrap();
        let (before, rest) = pivots.split_at_mut(i);
        let pivot = &rest[0];
        for row in before.iter_mut() {
            if row.get(lead).is_some() {
                *row = row.eliminate(pivot, lead);
            }
        }
    }
    pivots
}

/// Exact rank over the rationals.
pub fn rank(m: &SparseRationalMatrix) -> usize {
    echelon(m.int_rows(), m.cols).len()
}

/// Rank of a list of dense vectors of equal length.
pub fn rank_of_vectors(vectors: &[Vec<Rational>]) -> usize {
    let mut basis = EchelonBasis::new(vectors.first().map_or(0, Vec::len));
    vectors.iter().filter(|v| basis.insert(v)).count()
}

/// Basis of `ker m`. Every returned vector is checked against `m`, and
/// rank–nullity is asserted.
pub fn nullspace(m: &SparseRationalMatrix) -> NullspaceBasis {
    let cols = m.cols;
    let pivots = reduced_echelon(m.int_rows(), cols);
    let mut is_pivot = vec![false; cols];
    for p in &pivots {
        is_pivot[p.lead().unwrap()] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !is_pivot[*c]).collect();
    let mut slot = vec![usize::MAX; cols];
    for (k, f) in free.iter().enumerate() {
        slot[*f] = k;
    }
    let mut vectors = vec![vec![Rational::zero(); cols]; free.len()];
    for (k, f) in free.iter().enumerate() {
        vectors[k][*f] = Rational::one();
    }
    for p in &pivots {
        let lead = p.lead().unwrap();
        let pv = p.lead_value().clone();
        for (c, e) in p.0.iter().skip(1) {
            debug_assert!(!is_pivot[*c], "reduced echelon form left a pivot column");
            vectors[slot[*c]][lead] = -Rational::new(e.clone(), pv.clone());
        }
    }
    assert_eq!(pivots.len() + vectors.len(), cols, "rank-nullity violated");
    for v in &vectors {
        assert!(
            m.mul_vec(v).iter().all(Zero::is_zero),
            "nullspace vector is not annihilated"
        );
    }
    NullspaceBasis { dim_domain: cols, vectors }
}

/// Solves `m · x = rhs`, returning a particular solution (free variables set
/// to zero) or `None` when the system is inconsistent.
pub fn solve(m: &SparseRationalMatrix, rhs: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if rhs.len() != m.rows {
        return Err(LinalgError::DimensionMismatch { expected: m.rows, found: rhs.len() });
    }
    let cols = m.cols;
    let mut rows = m.sparse_rows();
    for (r, b) in rhs.iter().enumerate() {
        if !b.is_zero() {
            rows[r].push((cols, b.clone()));
        }
    }
    let int_rows = rows
        .iter()
        .map(|r| IntRow::from_rational(r))
        .filter(|r| !r.is_empty())
        .collect();
    let pivots = reduced_echelon(int_rows, cols + 1);
    let mut x = vec![Rational::zero(); cols];
    for p in &pivots {
        let lead = p.lead().unwrap();
        if lead == cols {
            return Ok(None);
        }
        if let Some(b) = p.get(cols) {
            x[lead] = Rational::new(b.clone(), p.lead_value().clone());
        }
    }
    debug_assert_eq!(m.mul_vec(&x), rhs);
    Ok(Some(x))
}

/// `dim span(Z) − dim span(B)`, after checking that every vector of `B`
/// lies in `span(Z)`.
pub fn quotient_dimension(z: &NullspaceBasis, b: &[Vec<Rational>]) -> Result<usize, LinalgError> {
    let mut ambient = EchelonBasis::new(z.dim_domain);
    for v in &z.vectors {
        ambient.insert(v);
    }
    for (index, v) in b.iter().enumerate() {
        if v.len() != z.dim_domain {
            return Err(LinalgError::DimensionMismatch { expected: z.dim_domain, found: v.len() });
        }
        if !ambient.contains(v) {
            return Err(LinalgError::NotContained { index });
        }
    }
    Ok(ambient.rank() - rank_of_vectors(b))
}

/// Incrementally grown row echelon basis, used to test membership and
/// independence one vector at a time.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    len: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        Self { len, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        while let Some(lead) = row.lead() {
            match self.pivots.get(&lead) {
                Some(p) => row = row.eliminate(p, lead),
                None => break,
            }
        }
        row
    }

    /// Adds `v` if it is independent of the current basis; returns whether it
    /// was added.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let row = self.reduce(IntRow::from_dense(v));
        match row.lead() {
            Some(lead) => {
                self.pivots.insert(lead, row);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        self.reduce(IntRow::from_dense(v)).is_empty()
    }
}
