//! Second cohomology `H²(g, ℝ)` with trivial coefficients.
//!
//! A two-cochain `ξ` is stored as its values `ξ_ij`, `i < j`, in the
//! lexicographic pair order of [`pair_index`]. The cocycle condition for a
//! triple `i < j < l` is
//!
//! ```text
//! Σ_k ( C_ij^k ξ_kl + C_jl^k ξ_ki + C_li^k ξ_kj ) = 0
//! ```
//!
//! and the coboundary of a functional `μ` is `(δμ)_ij = Σ_k C_ij^k μ_k`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ckalgebra::{
    build_family, pair_index, pairs, verify_jacobi, AlgebraError, AlgebraLabel, Family, GeneratorId, OmegaPattern,
    StructureConstants,
};
use crate::exactnum::{format_rational, Rational};
use crate::linalg::{nullspace, quotient_dimension, rank, solve, EchelonBasis, LinalgError, NullspaceBasis, SparseRationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("structure constants violate the Jacobi identity on {0} triples")]
    NotLieAlgebra(usize),
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("cochain has dimension {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("omega_{position} is nonzero: the type II cochain is a coboundary there")]
    NotContracted { position: usize },
    #[error("type II cochain at position {position} is not a cocycle")]
    RepresentativeNotCocycle { position: usize },
    #[error("type II cochain at contracted position {position} is a coboundary")]
    UnexpectedlyTrivial { position: usize },
    #[error("type II cochain at uncontracted position {position} is not a coboundary")]
    PseudoextensionFailed { position: usize },
    #[error("coboundary {0} is not a cocycle")]
    CoboundaryNotCocycle(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(LinalgError),
}

impl From<LinalgError> for CohomologyError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::NotContained { index } => CohomologyError::CoboundaryNotCocycle(index),
            other => CohomologyError::Linalg(other),
        }
    }
}

pub fn num_pairs(dim: usize) -> usize {
    dim * dim.saturating_sub(1) / 2
}

/// Antisymmetric bilinear form on an algebra of dimension `dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCochain {
    dim: usize,
    values: Vec<Rational>,
}

impl TwoCochain {
    pub fn zero(dim: usize) -> Self {
        Self { dim, values: vec![Rational::zero(); num_pairs(dim)] }
    }

    pub fn from_vector(dim: usize, values: Vec<Rational>) -> Result<Self, CohomologyError> {
        if values.len() != num_pairs(dim) {
            return Err(CohomologyError::DimensionMismatch { expected: num_pairs(dim), found: values.len() });
        }
        Ok(Self { dim, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `ξ(X_i, X_j)` with `ξ_ji = −ξ_ij` and `ξ_ii = 0`.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.values[pair_index(i, j, self.dim)].clone(),
            Equal => Rational::zero(),
            Greater => -self.values[pair_index(j, i, self.dim)].clone(),
        }
    }

    /// Sets `ξ(X_i, X_j) = v` (and so `ξ(X_j, X_i) = −v`).
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert_ne!(i, j, "a cochain vanishes on the diagonal");
        if i < j {
            self.values[pair_index(i, j, self.dim)] = v;
        } else {
            self.values[pair_index(j, i, self.dim)] = -v;
        }
    }

    /// Nonzero values `(i, j, ξ_ij)` with `i < j`.
    pub fn entries(&self) -> Vec<(usize, usize, Rational)> {
        pairs(self.dim)
            .zip(&self.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j), v)| (i, j, v.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}

/// The linear system whose kernel is `Z²(g)`: one row per triple
/// `i < j < l` (in lexicographic order), one column per pair.
pub fn cocycle_constraints(g: &StructureConstants) -> SparseRationalMatrix {
    let r = g.dim();
    let mut triplets = Vec::new();
    let mut row = 0;
    for i in 0..r {
        for j in i + 1..r {
            for l in j + 1..r {
                for (x, y, z) in [(i, j, l), (j, l, i), (l, i, j)] {
                    for (k, c) in g.bracket(x, y) {
                        use std::cmp::Ordering::*;
                        match k.cmp(&z) {
                            Less => triplets.push((row, pair_index(k, z, r), c)),
                            Greater => triplets.push((row, pair_index(z, k, r), -c)),
                            Equal => {}
                        }
                    }
                }
                row += 1;
            }
        }
    }
    SparseRationalMatrix::from_triplets(row, num_pairs(r), triplets)
}

fn require_lie(g: &StructureConstants) -> Result<(), CohomologyError> {
    let violations = verify_jacobi(g);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CohomologyError::NotLieAlgebra(violations.len()))
    }
}

/// `Z²(g)` as an exact nullspace basis.
pub fn cocycle_space(g: &StructureConstants) -> Result<NullspaceBasis, CohomologyError> {
    require_lie(g)?;
    Ok(nullspace(&cocycle_constraints(g)))
}

/// Coboundary map `μ ↦ δμ` as a `pairs × dim` matrix with entries `C_ij^k`.
pub fn coboundary_matrix(g: &StructureConstants) -> SparseRationalMatrix {
    let r = g.dim();
    SparseRationalMatrix::from_triplets(
        num_pairs(r),
        r,
        g.nonzero_brackets()
            .flat_map(|(i, j, terms)| terms.iter().map(move |(k, c)| (pair_index(i, j, r), *k, c.clone()))),
    )
}

/// The coboundaries `δe_k` of the unit functionals, one per basis element.
/// They span `B²(g)`.
pub fn coboundary_space(g: &StructureConstants) -> Vec<Vec<Rational>> {
    let r = g.dim();
    let mut out = vec![vec![Rational::zero(); num_pairs(r)]; r];
    for (i, j, terms) in g.nonzero_brackets() {
        for (k, c) in terms {
            out[*k][pair_index(i, j, r)] = c.clone();
        }
    }
    out
}

/// `δμ` for an arbitrary functional `μ`.
pub fn coboundary_of(g: &StructureConstants, mu: &[Rational]) -> TwoCochain {
    let values = coboundary_matrix(g).mul_vec(mu);
    TwoCochain { dim: g.dim(), values }
}

/// `dim [g, g]`: rank of the bracket vectors `[X_i, X_j]` in `g`.
pub fn derived_dimension(g: &StructureConstants) -> usize {
    rank(&coboundary_matrix(g))
}

/// Whether `ξ` satisfies every cocycle equation.
pub fn is_cocycle(g: &StructureConstants, xi: &TwoCochain) -> bool {
    xi.dim == g.dim() && cocycle_constraints(g).mul_vec(&xi.values).iter().all(Zero::is_zero)
}

/// Dimensions of `Z²`, `B²`, `H²` and cocycles representing a basis of `H²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub algebra_label: AlgebraLabel,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub representatives: Vec<TwoCochain>,
}

impl CohomologyReport {
    pub fn to_json_value(&self) -> CohomologyReportJson {
        CohomologyReportJson {
            family: self.algebra_label.family.tag(),
            n: self.algebra_label.n(),
            omega: self.algebra_label.omega.iter().map(format_rational).collect(),
            dim_z2: self.dim_z2,
            dim_b2: self.dim_b2,
            dim_h2: self.dim_h2,
            representatives: self
                .representatives
                .iter()
                .map(|xi| xi.entries().into_iter().map(|(i, j, v)| (i, j, format_rational(&v))).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }
}

/// Serialized form of a [`CohomologyReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReportJson {
    pub family: String,
    pub n: usize,
    pub omega: Vec<String>,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub representatives: Vec<Vec<(usize, usize, String)>>,
}

/// Computes `H²(g, ℝ)`. Representatives are picked by extending a basis of
/// `B²` with the nullspace vectors of `Z²` in order, keeping each one that
/// raises the rank.
pub fn h2(g: &StructureConstants) -> Result<CohomologyReport, CohomologyError> {
    let z = cocycle_space(g)?;
    let b = coboundary_space(g);
    let dim_h2 = quotient_dimension(&z, &b)?;
    let mut span = EchelonBasis::new(num_pairs(g.dim()));
    for v in &b {
        span.insert(v);
    }
    let dim_b2 = span.rank();
    let mut representatives = Vec::new();
    for v in &z.vectors {
        if span.insert(v) {
            representatives.push(TwoCochain { dim: g.dim(), values: v.clone() });
        }
    }
    assert_eq!(representatives.len(), dim_h2, "representatives must span H2");
    assert_eq!(z.dim(), dim_b2 + dim_h2);
    Ok(CohomologyReport {
        algebra_label: g.label().clone(),
        dim_z2: z.dim(),
        dim_b2,
        dim_h2,
        representatives,
    })
}

/// Whether a central extension can be removed by `X_i → X_i + μ_i Ξ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionClass {
    /// `ξ = δμ`; the witness `μ` performs the redefinition.
    Trivial { mu: Vec<Rational> },
    Nontrivial,
}

impl ExtensionClass {
    pub fn is_trivial(&self) -> bool {
        matches!(self, ExtensionClass::Trivial { .. })
    }
}

/// Decides whether the cocycle `ξ` is a coboundary, returning a witness
/// functional when it is.
pub fn classify_extension(g: &StructureConstants, xi: &TwoCochain) -> Result<ExtensionClass, CohomologyError> {
    if xi.dim != g.dim() {
        return Err(CohomologyError::DimensionMismatch { expected: g.dim(), found: xi.dim });
    }
    if !is_cocycle(g, xi) {
        return Err(CohomologyError::NotCocycle);
    }
    let delta = coboundary_matrix(g);
    Ok(match solve(&delta, &xi.values)? {
        Some(mu) => {
            debug_assert_eq!(delta.mul_vec(&mu), xi.values);
            ExtensionClass::Trivial { mu }
        }
        None => ExtensionClass::Nontrivial,
    })
}

/// Extension coefficients after the redefinition `X_i → X_i + μ_i Ξ`:
/// `ξ' = ξ − δμ`.
pub fn redefine(g: &StructureConstants, xi: &TwoCochain, mu: &[Rational]) -> TwoCochain {
    let delta = coboundary_of(g, mu);
    TwoCochain {
        dim: xi.dim,
        values: xi.values.iter().zip(&delta.values).map(|(a, b)| a - b).collect(),
    }
}

/// How an extension coefficient of `u^α_ω(N+1)` behaves under contraction.
///
/// * `TypeI`: coefficients `g^α_ab`, `h^α_ab`; coboundaries for every ω.
/// * `TypeII`: `f^α_{a−1,a}` on `[J_ab, M^α_ab]`; coboundary iff `ω_a ≠ 0`.
/// * `TypeIII`: `e^α_{a,b}` on `[E^α_a, E^α_b]`; never a coboundary when
///   nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionType {
    TypeI,
    TypeII,
    TypeIII,
}

/// Type of the coefficient sitting on the pair `(x, y)` of a unitary basis.
pub fn extension_type_of_pair(x: &GeneratorId, y: &GeneratorId) -> Option<ExtensionType> {
    use GeneratorId::*;
    match (*x, *y) {
        (Generic(_), _) | (_, Generic(_)) => None,
        (E { .. }, E { .. }) => Some(ExtensionType::TypeIII),
        (J { a, b }, M { a: c, b: d, .. }) | (M { a: c, b: d, .. }, J { a, b }) if (a, b) == (c, d) => {
            Some(ExtensionType::TypeII)
        }
        _ => Some(ExtensionType::TypeI),
    }
}

fn unitary_alpha(u: &StructureConstants) -> Result<usize, CohomologyError> {
    match u.label().family {
        Family::Unitary(alpha) => Ok(alpha),
        _ => Err(AlgebraError::NotCkBasis(format!("expected a unitary table, got {}", u.label().family)).into()),
    }
}

/// Type II cochain of `u^α_ω(N+1)` generated by `f^α_{a−1,a} = 1` and all
/// other `f^α_{s−1,s} = 0`: `ξ(J_bc, M^α_bc) = f^α_bc` with
/// `f^α_bc = Σ_{s=b+1}^{c} ω_{b,s−1} ω_{sc} f^α_{s−1,s}`, zero elsewhere.
/// No cocycle or coboundary check is made.
pub fn type2_cochain(u: &StructureConstants, p: &OmegaPattern, a: usize) -> Result<TwoCochain, CohomologyError> {
    let alpha = unitary_alpha(u)?;
    p.omega(a)?;
    let n = p.n();
    let mut xi = TwoCochain::zero(u.dim());
    for b in 0..=n {
        for c in b + 1..=n {
            let mut f = Rational::zero();
            for s in b + 1..=c {
                if s == a {
                    f += p.omega_ab(b, s - 1)? * p.omega_ab(s, c)?;
                }
            }
            if f.is_zero() {
                continue;
            }
            let j = u.index_of(&GeneratorId::J { a: b, b: c }).ok_or_else(|| AlgebraError::UnknownGenerator(format!("J_{b}_{c}")))?;
            let m = u
                .index_of(&GeneratorId::M { alpha, a: b, b: c })
                .ok_or_else(|| AlgebraError::UnknownGenerator(format!("M{alpha}_{b}_{c}")))?;
            xi.set(j, m, f);
        }
    }
    Ok(xi)
}

/// Type II representative at a contracted position `a` (`ω_a = 0`) of
/// `u^α_ω(N+1)`, checked to be a nontrivial cocycle.
///
/// When `ω_a ≠ 0` the same cochain is checked to be a coboundary (the
/// pseudoextension property) and [`CohomologyError::NotContracted`] is
/// returned.
pub fn unitary_type2_representative(p: &OmegaPattern, alpha: usize, a: usize) -> Result<TwoCochain, CohomologyError> {
    let u = build_family(p, Family::Unitary(alpha))?;
    let contracted = p.omega(a)?.is_zero();
    let xi = type2_cochain(&u, p, a)?;
    if !is_cocycle(&u, &xi) {
        return Err(CohomologyError::RepresentativeNotCocycle { position: a });
    }
    let class = classify_extension(&u, &xi)?;
    match (contracted, class.is_trivial()) {
        (true, false) => Ok(xi),
        (true, true) => Err(CohomologyError::UnexpectedlyTrivial { position: a }),
        (false, true) => Err(CohomologyError::NotContracted { position: a }),
        (false, false) => Err(CohomologyError::PseudoextensionFailed { position: a }),
    }
}

/// The linear conditions on the Type III coefficients `e_{a,b}` (unknowns
/// in lexicographic pair order over points `0..=N`): `ω_ab e_{a,b} = 0`,
/// and for `a < b < c`, `ω_ab (e_{a,c} − e_{b,c}) = 0` and
/// `ω_bc (e_{a,b} − e_{a,c}) = 0`.
pub fn type3_system(p: &OmegaPattern) -> SparseRationalMatrix {
    let points = p.n() + 1;
    let w = |a: usize, b: usize| p.omega_ab(a, b).expect("indices in range");
    let e = |a: usize, b: usize| pair_index(a, b, points);
    let mut triplets = Vec::new();
    let mut row = 0;
    for (a, b) in pairs(points) {
        triplets.push((row, e(a, b), w(a, b)));
        row += 1;
    }
    for a in 0..points {
        for b in a + 1..points {
            for c in b + 1..points {
                let (wab, wbc) = (w(a, b), w(b, c));
                triplets.push((row, e(a, c), wab.clone()));
                triplets.push((row, e(b, c), -wab));
                row += 1;
                triplets.push((row, e(a, b), wbc.clone()));
                triplets.push((row, e(a, c), -wbc));
                row += 1;
            }
        }
    }
    SparseRationalMatrix::from_triplets(row, num_pairs(points), triplets)
}

/// Solution space of [`type3_system`].
pub fn unitary_type3_solutions(p: &OmegaPattern) -> NullspaceBasis {
    nullspace(&type3_system(p))
}

/// Number of independent Type III coefficients. Panics if it differs from
/// `n(n+1)/2`, `n` the number of vanishing `ω_a`.
pub fn unitary_type3_count(p: &OmegaPattern) -> usize {
    let count = unitary_type3_solutions(p).dim();
    let zeros = p.zero_positions().len();
    assert_eq!(count, zeros * (zeros + 1) / 2, "type III count for omega = {p}");
    count
}

/// Cochain `ξ(E^α_a, E^α_b) = e_{a,b}` on `u^α_ω(N+1)`.
pub fn type3_cochain(u: &StructureConstants, p: &OmegaPattern, e: &[Rational]) -> Result<TwoCochain, CohomologyError> {
    let alpha = unitary_alpha(u)?;
    let points = p.n() + 1;
    if e.len() != num_pairs(points) {
        return Err(CohomologyError::DimensionMismatch { expected: num_pairs(points), found: e.len() });
    }
    let mut xi = TwoCochain::zero(u.dim());
    for (a, b) in pairs(points) {
        let v = &e[pair_index(a, b, points)];
        if v.is_zero() {
            continue;
        }
        let ea = u.index_of(&GeneratorId::E { alpha, a }).ok_or_else(|| AlgebraError::UnknownGenerator(format!("E{alpha}_{a}")))?;
        let eb = u.index_of(&GeneratorId::E { alpha, a: b }).ok_or_else(|| AlgebraError::UnknownGenerator(format!("E{alpha}_{b}")))?;
        xi.set(ea, eb, v.clone());
    }
    Ok(xi)
}

/// Split of `H²(u^α_ω(N+1))` into Type II and Type III classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDecomposition {
    pub zero_count: usize,
    /// Type II representatives independent modulo `B²`.
    pub type2_independent: usize,
    pub type3_count: usize,
    /// Rank modulo `B²` of all Type II and Type III cochains together.
    pub combined_independent: usize,
    pub dim_h2: usize,
}

impl TypeDecomposition {
    /// Type II and III classes are independent and exhaust `H²`, with the
    /// counts `n` and `n(n+1)/2`.
    pub fn exhausts(&self) -> bool {
        let n = self.zero_count;
        self.type2_independent == n
            && self.type3_count == n * (n + 1) / 2
            && self.combined_independent == self.type2_independent + self.type3_count
            && self.combined_independent == self.dim_h2
    }
}

pub fn unitary_type_decomposition(p: &OmegaPattern, alpha: usize) -> Result<TypeDecomposition, CohomologyError> {
    let u = build_family(p, Family::Unitary(alpha))?;
    let report = h2(&u)?;
    let mut span = EchelonBasis::new(num_pairs(u.dim()));
    for v in coboundary_space(&u) {
        span.insert(&v);
    }
    let zeros = p.zero_positions();
    let mut type2_independent = 0;
    for &a in &zeros {
        let xi = unitary_type2_representative(p, alpha, a)?;
        if span.insert(xi.values()) {
            type2_independent += 1;
        }
    }
    let solutions = unitary_type3_solutions(p);
    let mut type3_independent = 0;
    for e in &solutions.vectors {
        let xi = type3_cochain(&u, p, e)?;
        if !is_cocycle(&u, &xi) {
            return Err(CohomologyError::NotCocycle);
        }
        if span.insert(xi.values()) {
            type3_independent += 1;
        }
    }
    Ok(TypeDecomposition {
        zero_count: zeros.len(),
        type2_independent,
        type3_count: solutions.dim(),
        combined_independent: type2_independent + type3_independent,
        dim_h2: report.dim_h2,
    })
}

/// Pullback `(φ*ξ)(X_i, X_j) = ξ(φX_i, φX_j)` along a basis map of `g`.
pub fn pullback(map: &crate::ckalgebra::BasisMap, xi: &TwoCochain) -> TwoCochain {
    let mut out = TwoCochain::zero(xi.dim);
    for (i, j) in pairs(xi.dim) {
        let mut v = Rational::zero();
        for (k, a) in map.image(i) {
            for (l, b) in map.image(j) {
                if k != l {
                    v += a * b * xi.get(*k, *l);
                }
            }
        }
        out.values[pair_index(i, j, xi.dim)] = v;
    }
    out
}

/// Expected `dim H²(u^α_ω(N+1))` for `n` vanishing parameters.
pub fn unitary_h2_formula(zero_count: usize) -> usize {
    zero_count * (zero_count + 3) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ckalgebra::{build_sq, StructureConstants};
    use crate::exactnum::int;

    fn pattern(v: &[i64]) -> OmegaPattern {
        OmegaPattern::from_ints(v).unwrap()
    }

    #[test]
    fn cochain_antisymmetry() {
        let mut xi = TwoCochain::zero(4);
        xi.set(3, 1, int(5));
        assert_eq!(xi.get(1, 3), int(-5));
        assert_eq!(xi.get(3, 1), int(5));
        assert_eq!(xi.get(2, 2), int(0));
        assert_eq!(xi.entries(), vec![(1, 3, int(-5))]);
        assert!(TwoCochain::from_vector(4, vec![int(0); 5]).is_err());
    }

    #[test]
    fn abelian_algebra() {
        for r in 1..=5 {
            let g = StructureConstants::abelian(r);
            let z = cocycle_space(&g).unwrap();
            assert_eq!(z.dim(), r * (r - 1) / 2);
            assert!(coboundary_space(&g).iter().all(|v| v.iter().all(Zero::is_zero)));
            assert_eq!(h2(&g).unwrap().dim_h2, r * (r - 1) / 2);
        }
    }

    #[test]
    fn compact_sq2() {
        let g = build_sq(&pattern(&[1]));
        let report = h2(&g).unwrap();
        assert_eq!((report.dim_z2, report.dim_b2, report.dim_h2), (10, 10, 0));
        assert!(report.representatives.is_empty());
    }

    #[test]
    fn contracted_u2() {
        let u = build_family(&pattern(&[0]), Family::Unitary(1)).unwrap();
        assert_eq!(u.dim(), 4);
        let report = h2(&u).unwrap();
        assert_eq!(report.dim_z2 - report.dim_b2, 2);
        assert_eq!(report.representatives.len(), 2);
        for xi in &report.representatives {
            assert!(is_cocycle(&u, xi));
            assert_eq!(classify_extension(&u, xi).unwrap(), ExtensionClass::Nontrivial);
        }
    }

    #[test]
    fn so_single_generator() {
        let so = build_family(&pattern(&[1]), Family::Orthogonal).unwrap();
        assert_eq!(so.dim(), 1);
        let report = h2(&so).unwrap();
        assert_eq!((report.dim_z2, report.dim_b2, report.dim_h2), (0, 0, 0));
    }

    #[test]
    fn broken_table_is_rejected() {
        let bad = StructureConstants::generic(
            3,
            [(0, 1, vec![(2, int(1))]), (0, 2, vec![(1, int(1))]), (1, 2, vec![(1, int(1))])],
        )
        .unwrap();
        assert!(matches!(cocycle_space(&bad), Err(CohomologyError::NotLieAlgebra(_))));
    }

    #[test]
    fn classify_zero_and_coboundaries() {
        let g = build_sq(&pattern(&[-1, 0]));
        let zero = TwoCochain::zero(g.dim());
        match classify_extension(&g, &zero).unwrap() {
            ExtensionClass::Trivial { mu } => assert!(mu.iter().all(Zero::is_zero)),
            other => panic!("{other:?}"),
        }
        let mu: Vec<Rational> = (0..g.dim()).map(|k| int(k as i64 % 3 - 1)).collect();
        let xi = coboundary_of(&g, &mu);
        match classify_extension(&g, &xi).unwrap() {
            ExtensionClass::Trivial { mu: witness } => assert!(redefine(&g, &xi, &witness).is_zero()),
            other => panic!("{other:?}"),
        }
        let mut not_cocycle = TwoCochain::zero(g.dim());
        not_cocycle.set(0, 1, int(1));
        if !is_cocycle(&g, &not_cocycle) {
            assert_eq!(classify_extension(&g, &not_cocycle), Err(CohomologyError::NotCocycle));
        }
    }

    #[test]
    fn type2_examples() {
        for alpha in 1..=3 {
            let xi = unitary_type2_representative(&pattern(&[0]), alpha, 1).unwrap();
            assert_eq!(xi.entries().len(), 1);
            assert_eq!(xi.entries()[0].2, int(1));
            assert_eq!(
                unitary_type2_representative(&pattern(&[1]), alpha, 1),
                Err(CohomologyError::NotContracted { position: 1 })
            );
        }
        // N = 2, ω = (0, 1): f_01 = 1, f_02 = ω_00 ω_12 = 1, f_12 = 0.
        let p = pattern(&[0, 1]);
        let xi = unitary_type2_representative(&p, 2, 1).unwrap();
        let u = build_family(&p, Family::Unitary(2)).unwrap();
        let j02 = u.index_of(&GeneratorId::J { a: 0, b: 2 }).unwrap();
        let m02 = u.index_of(&GeneratorId::M { alpha: 2, a: 0, b: 2 }).unwrap();
        assert_eq!(xi.get(j02, m02), int(1));
        assert_eq!(xi.entries().len(), 2);
    }

    #[test]
    fn type3_examples() {
        assert_eq!(unitary_type3_count(&pattern(&[1, -1, 2])), 0);
        assert_eq!(unitary_type3_count(&pattern(&[0, 0])), 3);
        assert_eq!(unitary_type3_count(&pattern(&[0, 1, 0])), 3);
    }

    #[test]
    fn pair_types() {
        let j = GeneratorId::J { a: 0, b: 1 };
        let m = GeneratorId::M { alpha: 1, a: 0, b: 1 };
        let m2 = GeneratorId::M { alpha: 1, a: 0, b: 2 };
        let e = GeneratorId::E { alpha: 1, a: 0 };
        assert_eq!(extension_type_of_pair(&j, &m), Some(ExtensionType::TypeII));
        assert_eq!(extension_type_of_pair(&m, &j), Some(ExtensionType::TypeII));
        assert_eq!(extension_type_of_pair(&j, &m2), Some(ExtensionType::TypeI));
        assert_eq!(extension_type_of_pair(&e, &e), Some(ExtensionType::TypeIII));
    }

    #[test]
    fn report_json_shape() {
        let u = build_family(&pattern(&[0]), Family::Unitary(3)).unwrap();
        let json = h2(&u).unwrap().to_json_value();
        assert_eq!(json.family, "u3");
        assert_eq!(json.omega, vec!["0"]);
        assert_eq!(json.dim_h2, 2);
        assert_eq!(json.representatives.len(), 2);
    }
}
