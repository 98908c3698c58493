//! Test-only reference implementations, deliberately naive.
#![allow(dead_code, clippy::needless_range_loop)]

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;
use sqck::exactnum::{int, ratio};
use sqck::{Rational, SparseRationalMatrix};

/// Rank by textbook Gauss–Jordan elimination on a dense copy.
pub fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    reduce(rows.to_vec()).len()
}

/// Pivot columns after dense reduction to RREF.
fn reduce(mut a: Vec<Vec<Rational>>) -> Vec<usize> {
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..cols {
                    let d = &f * &a[r][k];
                    a[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn dense_nullity(m: &SparseRationalMatrix) -> usize {
    m.cols() - dense_rank(&m.to_dense())
}

/// Random sparse matrix with small rational entries; roughly `density`
/// of the entries are nonzero.
pub fn random_sparse(rng: &mut StdRng, rows: usize, cols: usize, density: f64) -> SparseRationalMatrix {
    let mut triplets = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(density) {
                let num = rng.gen_range(-9i64..=9);
                let den = rng.gen_range(1i64..=5);
                triplets.push((r, c, ratio(num, den)));
            }
        }
    }
    SparseRationalMatrix::from_triplets(rows, cols, triplets)
}

/// Random matrix of prescribed rank `k` (generically), built as a product
/// of `rows × k` and `k × cols` integer factors.
pub fn random_low_rank(rng: &mut StdRng, rows: usize, cols: usize, k: usize) -> SparseRationalMatrix {
    let left: Vec<Vec<i64>> = (0..rows).map(|_| (0..k).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let right: Vec<Vec<i64>> = (0..k).map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let mut triplets = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v: i64 = (0..k).map(|t| left[r][t] * right[t][c]).sum();
            triplets.push((r, c, int(v)));
        }
    }
    SparseRationalMatrix::from_triplets(rows, cols, triplets)
}

/// All patterns in `values^n`, in lexicographic order of the value list.
pub fn patterns(values: &[Rational], n: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    out
}

pub fn signs() -> Vec<Rational> {
    vec![int(-1), int(0), int(1)]
}
