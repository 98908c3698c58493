//! Realization of `sq_ω(N+1)` by `I_κ`-antihermitian quaternionic matrices.
//!
//! Matrices act on column vectors from the left and scalars multiply vectors
//! from the right, so left matrix action is ℍ-linear and the hermitian form
//! conjugates its first slot.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::ckalgebra::{build_sq, pairs, sq_basis, GeneratorId, OmegaPattern};
use crate::exactnum::{epsilon, int, third_index, Quaternion, Rational};
use crate::linalg::rank_of_vectors;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("matrix sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("generator {0} is not valid for N = {1}")]
    InvalidGenerator(String, usize),
    #[error("expected a real matrix")]
    NotReal,
    #[error("quaternionic index {0} out of range 1..=3")]
    InvalidAlpha(usize),
    #[error("pure-quaternion bracket formula disagrees with the direct commutator")]
    FormulaMismatch,
    #[error("sq(1) generators fail: {0}")]
    Sq1(String),
}

/// Dense square matrix over the quaternions, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionMatrix {
    size: usize,
    entries: Vec<Quaternion>,
}

impl QuaternionMatrix {
    pub fn zeros(size: usize) -> Self {
        Self { size, entries: vec![Quaternion::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for a in 0..size {
            m.set(a, a, Quaternion::one());
        }
        m
    }

    /// The matrix unit `e_ab` scaled by `q`.
    pub fn unit(size: usize, a: usize, b: usize, q: Quaternion) -> Self {
        let mut m = Self::zeros(size);
        m.set(a, b, q);
        m
    }

    pub fn from_real(rows: &[Vec<Rational>]) -> Self {
        let size = rows.len();
        let mut m = Self::zeros(size);
        for (a, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), size, "real matrix must be square");
            for (b, v) in row.iter().enumerate() {
                m.set(a, b, Quaternion::real(v.clone()));
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: usize, b: usize) -> &Quaternion {
        &self.entries[a * self.size + b]
    }

    pub fn set(&mut self, a: usize, b: usize, q: Quaternion) {
        self.entries[a * self.size + b] = q;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Quaternion::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(Quaternion::is_real)
    }

    fn check_size(&self, other: &Self) -> Result<(), RealizationError> {
        if self.size != other.size {
            return Err(RealizationError::SizeMismatch(self.size, other.size));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RealizationError> {
        self.check_size(other)?;
        Ok(Self {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RealizationError> {
        self.check_size(other)?;
        Ok(Self {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| x - y).collect(),
        })
    }

    /// Matrix product; factor order inside each entry is preserved.
    pub fn try_mul(&self, other: &Self) -> Result<Self, RealizationError> {
        self.check_size(other)?;
        let n = self.size;
        let mut out = Self::zeros(n);
        for a in 0..n {
            for c in 0..n {
                let mut acc = Quaternion::zero();
                for b in 0..n {
                    let (x, y) = (self.get(a, b), other.get(b, c));
                    if !x.is_zero() && !y.is_zero() {
                        acc += &(x * y);
                    }
                }
                out.set(a, c, acc);
            }
        }
        Ok(out)
    }

    /// `q · X`, multiplying every entry on the left.
    pub fn left_scale(&self, q: &Quaternion) -> Self {
        Self { size: self.size, entries: self.entries.iter().map(|x| q * x).collect() }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self { size: self.size, entries: self.entries.iter().map(|x| x.scale(k)).collect() }
    }

    /// Quaternionic conjugate transpose `X†`.
    pub fn dagger(&self) -> Self {
        let n = self.size;
        let mut out = Self::zeros(n);
        for a in 0..n {
            for b in 0..n {
                out.set(b, a, self.get(a, b).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Quaternion {
        let mut acc = Quaternion::zero();
        for a in 0..self.size {
            acc += self.get(a, a);
        }
        acc
    }

    /// Entries as a real vector of length `4·size²` (re, i, j, k per entry).
    pub fn to_real_coordinates(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .flat_map(|q| [q.re.clone(), q.im1.clone(), q.im2.clone(), q.im3.clone()])
            .collect()
    }
}

impl fmt::Display for QuaternionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for a in 0..self.size {
            let row: Vec<String> = (0..self.size)
                .map(|b| format!("{:>width$}", cells[a * self.size + b]))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

/// Diagonal metric `I_κ = diag(1, ω_01, ω_02, …, ω_0N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricMatrix {
    pub diag: Vec<Rational>,
}

impl MetricMatrix {
    pub fn new(p: &OmegaPattern) -> Self {
        let mut diag = Vec::with_capacity(p.n() + 1);
        let mut acc = Rational::one();
        diag.push(acc.clone());
        for w in p.values() {
            acc *= w;
            diag.push(acc.clone());
        }
        Self { diag }
    }

    pub fn to_matrix(&self) -> QuaternionMatrix {
        let mut m = QuaternionMatrix::zeros(self.diag.len());
        for (a, v) in self.diag.iter().enumerate() {
            m.set(a, a, Quaternion::real(v.clone()));
        }
        m
    }
}

/// `J_ab = −ω_ab e_ab + e_ba`, `M^α_ab = i_α(ω_ab e_ab + e_ba)`,
/// `E^α_a = i_α e_aa`.
pub fn realize_generator(p: &OmegaPattern, g: &GeneratorId) -> Result<QuaternionMatrix, RealizationError> {
    let n = p.n();
    let size = n + 1;
    let invalid = || RealizationError::InvalidGenerator(g.to_string(), n);
    match *g {
        GeneratorId::J { a, b } if a < b && b <= n => {
            let w = p.omega_ab(a, b).map_err(|_| invalid())?;
            let mut m = QuaternionMatrix::unit(size, b, a, Quaternion::one());
            m.set(a, b, Quaternion::real(-w));
            Ok(m)
        }
        GeneratorId::M { alpha, a, b } if a < b && b <= n && (1..=3).contains(&alpha) => {
            let w = p.omega_ab(a, b).map_err(|_| invalid())?;
            let mut m = QuaternionMatrix::unit(size, b, a, Quaternion::unit(alpha));
            m.set(a, b, Quaternion::pure(alpha, w));
            Ok(m)
        }
        GeneratorId::E { alpha, a } if a <= n && (1..=3).contains(&alpha) => {
            Ok(QuaternionMatrix::unit(size, a, a, Quaternion::unit(alpha)))
        }
        _ => Err(invalid()),
    }
}

/// `X† I_κ + I_κ X = 0`. A matrix of the wrong size is never antihermitian.
pub fn antihermiticity_check(p: &OmegaPattern, x: &QuaternionMatrix) -> bool {
    if x.size() != p.n() + 1 {
        return false;
    }
    let metric = MetricMatrix::new(p).to_matrix();
    let lhs = x.dagger().try_mul(&metric).and_then(|l| l.try_add(&metric.try_mul(x)?));
    matches!(lhs, Ok(m) if m.is_zero())
}

/// `XY − YX` over ℍ.
pub fn matrix_bracket(x: &QuaternionMatrix, y: &QuaternionMatrix) -> Result<QuaternionMatrix, RealizationError> {
    x.try_mul(y)?.try_sub(&y.try_mul(x)?)
}

/// `[i_α X, i_β Y] = −δ_αβ [X, Y] + Σ_γ ε_αβγ i_γ {X, Y}` for real `X, Y`.
/// The closed form is returned after being checked against the direct
/// commutator.
pub fn pure_bracket_identity(
    alpha: usize,
    x: &QuaternionMatrix,
    beta: usize,
    y: &QuaternionMatrix,
) -> Result<QuaternionMatrix, RealizationError> {
    for idx in [alpha, beta] {
        if !(1..=3).contains(&idx) {
            return Err(RealizationError::InvalidAlpha(idx));
        }
    }
    if !x.is_real() || !y.is_real() {
        return Err(RealizationError::NotReal);
    }
    let xy = x.try_mul(y)?;
    let yx = y.try_mul(x)?;
    let mut formula = QuaternionMatrix::zeros(x.size());
    if alpha == beta {
        formula = xy.try_sub(&yx)?.scale(&int(-1));
    } else {
        let gamma = third_index(alpha, beta);
        let anti = xy.try_add(&yx)?;
        formula = formula.try_add(&anti.left_scale(&Quaternion::pure(gamma, epsilon(alpha, beta, gamma))))?;
    }
    let direct = matrix_bracket(&x.left_scale(&Quaternion::unit(alpha)), &y.left_scale(&Quaternion::unit(beta)))?;
    if direct != formula {
        return Err(RealizationError::FormulaMismatch);
    }
    Ok(formula)
}

/// Coefficients of `x` in the realized basis, read from matrix positions:
/// `J`/`M` from the lower entry `(b, a)`, `E` from diagonal imaginary parts.
/// Returns `None` unless the reconstruction reproduces `x` exactly.
pub fn expand_in_basis(p: &OmegaPattern, x: &QuaternionMatrix) -> Option<Vec<(GeneratorId, Rational)>> {
    let n = p.n();
    if x.size() != n + 1 {
        return None;
    }
    let mut coeffs = Vec::new();
    for g in sq_basis(n) {
        let c = match g {
            GeneratorId::J { a, b } => x.get(b, a).re.clone(),
            GeneratorId::M { alpha, a, b } => x.get(b, a).imag(alpha).clone(),
            GeneratorId::E { alpha, a } => x.get(a, a).imag(alpha).clone(),
            GeneratorId::Generic(_) => unreachable!(),
        };
        if !c.is_zero() {
            coeffs.push((g, c));
        }
    }
    let mut rebuilt = QuaternionMatrix::zeros(n + 1);
    for (g, c) in &coeffs {
        rebuilt = rebuilt.try_add(&realize_generator(p, g).ok()?.scale(c)).ok()?;
    }
    (rebuilt == *x).then_some(coeffs)
}

/// Disagreement between a realized commutator and the abstract table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizationViolation {
    /// The commutator is not a combination of realized generators.
    LeavesSpan { x: GeneratorId, y: GeneratorId },
    Mismatch {
        x: GeneratorId,
        y: GeneratorId,
        table: Vec<(GeneratorId, Rational)>,
        matrix: Vec<(GeneratorId, Rational)>,
    },
}

/// Compares every realized commutator `[X_i, X_j]` with the bracket table of
/// `build_sq(p)`; empty iff the realization is a homomorphism onto it.
pub fn realization_consistency(p: &OmegaPattern) -> Vec<RealizationViolation> {
    let table = build_sq(p);
    let mats: Vec<QuaternionMatrix> = table
        .basis()
        .iter()
        .map(|g| realize_generator(p, g).expect("basis generators are valid"))
        .collect();
    let mut out = Vec::new();
    for (i, j) in pairs(table.dim()) {
        let (x, y) = (table.basis()[i], table.basis()[j]);
        let comm = matrix_bracket(&mats[i], &mats[j]).expect("same size");
        let Some(mut found) = expand_in_basis(p, &comm) else {
            out.push(RealizationViolation::LeavesSpan { x, y });
            continue;
        };
        let mut expected: Vec<(GeneratorId, Rational)> =
            table.stored(i, j).iter().map(|(k, c)| (table.basis()[*k], c.clone())).collect();
        let order = |g: &GeneratorId| table.index_of(g).unwrap();
        found.sort_by_key(|(g, _)| order(g));
        expected.sort_by_key(|(g, _)| order(g));
        if found != expected {
            out.push(RealizationViolation::Mismatch { x, y, table: expected, matrix: found });
        }
    }
    out
}

/// Dimension of `[g, g]` measured on realized matrices: the rank of all
/// commutators of realized generators as real vectors.
pub fn realized_derived_dimension(p: &OmegaPattern) -> usize {
    let mats: Vec<QuaternionMatrix> = sq_basis(p.n())
        .iter()
        .map(|g| realize_generator(p, g).expect("basis generators are valid"))
        .collect();
    let comms: Vec<Vec<Rational>> = pairs(mats.len())
        .map(|(i, j)| matrix_bracket(&mats[i], &mats[j]).expect("same size").to_real_coordinates())
        .collect();
    rank_of_vectors(&comms)
}

/// The generators `I^α = i_α · Id` of `sq(1)`, checked to satisfy
/// `[I^α, I^β] = 2 ε_αβγ I^γ` and to have nonzero pure-imaginary trace.
pub fn sq1_generators(size: usize) -> Result<[QuaternionMatrix; 3], RealizationError> {
    if size == 0 {
        return Err(RealizationError::Sq1("size must be positive".into()));
    }
    let gens = [1, 2, 3].map(|alpha| QuaternionMatrix::identity(size).left_scale(&Quaternion::unit(alpha)));
    for alpha in 1..=3 {
        let tr = gens[alpha - 1].trace();
        if !tr.re.is_zero() || tr.is_zero() {
            return Err(RealizationError::Sq1(format!("trace of I^{alpha} is {tr}")));
        }
        for beta in (1..=3).filter(|&b| b != alpha) {
            let gamma = third_index(alpha, beta);
            let lhs = matrix_bracket(&gens[alpha - 1], &gens[beta - 1])?;
            let rhs = gens[gamma - 1].scale(&(int(2) * epsilon(alpha, beta, gamma)));
            if lhs != rhs {
                return Err(RealizationError::Sq1(format!("[I^{alpha}, I^{beta}] != 2 eps I^{gamma}")));
            }
        }
    }
    Ok(gens)
}
