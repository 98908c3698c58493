//! Structure constants of the quaternionic unitary Cayley–Klein algebras
//! `sq_ω(N+1)` and of their orthogonal and unitary subalgebras.
//!
//! Basis order is fixed: every `J_ab` (lexicographic in `(a, b)`), then the
//! `M^1`, `M^2`, `M^3` blocks (each lexicographic), then the `E^1`, `E^2`,
//! `E^3` blocks. Brackets are stored only for `i < j`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{format_rational, int, levi_civita, parse_rational, third_index, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("the family needs at least one contraction parameter (N >= 1)")]
    DegenerateN,
    #[error("index {index} out of range 0..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("indices must satisfy a <= b, got a = {a}, b = {b}")]
    DescendingIndices { a: usize, b: usize },
    #[error("quaternionic index {0} out of range 1..=3")]
    InvalidAlpha(usize),
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("invalid generator name `{0}`")]
    InvalidGenerator(String),
    #[error("generator {0} is not in the basis")]
    UnknownGenerator(String),
    #[error("bracket [{x}, {y}] leaves the selected span through {escaped}")]
    ClosureViolation { x: String, y: String, escaped: String },
    #[error("conflicting values for bracket [{x}, {y}]")]
    ConflictingBracket { x: String, y: String },
    #[error("bracket of a generator with itself must vanish: {0}")]
    SelfBracket(String),
    #[error("map does not preserve the bracket [{x}, {y}]")]
    NotHomomorphism { x: String, y: String },
    #[error("map is not an involution")]
    NotInvolution,
    #[error("reversal map fails to intertwine bracket [{x}, {y}]")]
    IntertwiningFailure { x: String, y: String },
    #[error("omega_{position} = {value} is nonzero; no contraction at this position")]
    NotContracted { position: usize, value: String },
    #[error("operation needs a Cayley-Klein basis, found generic generator {0}")]
    NotCkBasis(String),
    #[error("malformed structure-constant JSON: {0}")]
    Json(String),
}

/// The `N` contraction parameters `ω_1..ω_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaPattern {
    values: Vec<Rational>,
}

impl OmegaPattern {
    pub fn new(values: Vec<Rational>) -> Result<Self, AlgebraError> {
        if values.is_empty() {
            return Err(AlgebraError::DegenerateN);
        }
        Ok(Self { values })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(values.iter().map(|v| int(*v)).collect())
    }

    /// Parses a comma-separated list of integers or `p/q` rationals.
    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        let values = s
            .split(',')
            .map(|tok| parse_rational(tok).map_err(|_| AlgebraError::InvalidRational(tok.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `ω_a` for `a ∈ 1..=N`.
    pub fn omega(&self, a: usize) -> Result<&Rational, AlgebraError> {
        if a == 0 || a > self.n() {
            return Err(AlgebraError::IndexOutOfRange { index: a, n: self.n() });
        }
        Ok(&self.values[a - 1])
    }

    pub fn omega_ab(&self, a: usize, b: usize) -> Result<Rational, AlgebraError> {
        omega_ab(self, a, b)
    }

    pub fn reversed(&self) -> Self {
        Self { values: self.values.iter().rev().cloned().collect() }
    }

    /// Positions `a` (1-based) with `ω_a = 0`.
    pub fn zero_positions(&self) -> Vec<usize> {
        (1..=self.n()).filter(|a| self.values[a - 1].is_zero()).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(format_rational).collect()
    }
}

impl fmt::Display for OmegaPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_strings().join(","))
    }
}

/// `ω_ab = ω_{a+1}···ω_b`, with `ω_aa = 1`.
pub fn omega_ab(p: &OmegaPattern, a: usize, b: usize) -> Result<Rational, AlgebraError> {
    if a > p.n() {
        return Err(AlgebraError::IndexOutOfRange { index: a, n: p.n() });
    }
    if b > p.n() {
        return Err(AlgebraError::IndexOutOfRange { index: b, n: p.n() });
    }
    if a > b {
        return Err(AlgebraError::DescendingIndices { a, b });
    }
    Ok(product(&p.values, a, b))
}

fn product(values: &[Rational], a: usize, b: usize) -> Rational {
    values[a..b].iter().fold(Rational::one(), |acc, w| acc * w)
}

/// Name of a basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorId {
    J { a: usize, b: usize },
    M { alpha: usize, a: usize, b: usize },
    E { alpha: usize, a: usize },
    /// Basis element of a table that does not come from the CK family.
    Generic(usize),
}

impl GeneratorId {
    fn indices(&self) -> Vec<usize> {
        match *self {
            GeneratorId::J { a, b } | GeneratorId::M { a, b, .. } => vec![a, b],
            GeneratorId::E { a, .. } => vec![a],
            GeneratorId::Generic(_) => vec![],
        }
    }

    fn shifted_down(&self, by: usize) -> GeneratorId {
        match *self {
            GeneratorId::J { a, b } => GeneratorId::J { a: a - by, b: b - by },
            GeneratorId::M { alpha, a, b } => GeneratorId::M { alpha, a: a - by, b: b - by },
            GeneratorId::E { alpha, a } => GeneratorId::E { alpha, a: a - by },
            g => g,
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::J { a, b } => write!(f, "J_{a}_{b}"),
            GeneratorId::M { alpha, a, b } => write!(f, "M{alpha}_{a}_{b}"),
            GeneratorId::E { alpha, a } => write!(f, "E{alpha}_{a}"),
            GeneratorId::Generic(k) => write!(f, "X_{k}"),
        }
    }
}

impl FromStr for GeneratorId {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::InvalidGenerator(s.to_string());
        let mut parts = s.split('_');
        let head = parts.next().ok_or_else(bad)?;
        let nums = parts
            .map(|p| p.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        let alpha_of = |h: &str| -> Result<usize, AlgebraError> {
            let alpha: usize = h[1..].parse().map_err(|_| bad())?;
            if (1..=3).contains(&alpha) {
                Ok(alpha)
            } else {
                Err(bad())
            }
        };
        match (head, nums.as_slice()) {
            ("J", [a, b]) if a < b => Ok(GeneratorId::J { a: *a, b: *b }),
            ("X", [k]) => Ok(GeneratorId::Generic(*k)),
            (h, [a, b]) if h.starts_with('M') && a < b => Ok(GeneratorId::M { alpha: alpha_of(h)?, a: *a, b: *b }),
            (h, [a]) if h.starts_with('E') => Ok(GeneratorId::E { alpha: alpha_of(h)?, a: *a }),
            _ => Err(bad()),
        }
    }
}

/// Which member of the nested chain `so ⊂ u^α ⊂ sq` a table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Quaternionic,
    Unitary(usize),
    Orthogonal,
    Custom,
}

impl Family {
    pub fn tag(&self) -> String {
        match self {
            Family::Quaternionic => "sq".into(),
            Family::Unitary(alpha) => format!("u{alpha}"),
            Family::Orthogonal => "so".into(),
            Family::Custom => "custom".into(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for Family {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sq" => Ok(Family::Quaternionic),
            "u1" => Ok(Family::Unitary(1)),
            "u2" => Ok(Family::Unitary(2)),
            "u3" => Ok(Family::Unitary(3)),
            "so" => Ok(Family::Orthogonal),
            "custom" => Ok(Family::Custom),
            other => Err(AlgebraError::InvalidGenerator(format!("family {other}"))),
        }
    }
}

/// Family and contraction parameters an algebra was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraLabel {
    pub family: Family,
    pub omega: Vec<Rational>,
}

impl AlgebraLabel {
    pub fn custom() -> Self {
        Self { family: Family::Custom, omega: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.omega.len()
    }
}

/// Flattened position of the pair `(i, j)`, `i < j < dim`, in lexicographic
/// order.
pub fn pair_index(i: usize, j: usize, dim: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)` with `i < j < dim` in flattened order.
pub fn pairs(dim: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..dim).flat_map(move |i| (i + 1..dim).map(move |j| (i, j)))
}

/// Sparse linear combination of basis elements, sorted by index.
pub type Combination = Vec<(usize, Rational)>;

fn accumulate(acc: &mut BTreeMap<usize, Rational>, k: usize, v: Rational) {
    let slot = acc.entry(k).or_insert_with(Rational::zero);
    *slot += v;
    if slot.is_zero() {
        acc.remove(&k);
    }
}

/// Structure constants `C_ij^k` of a finite-dimensional Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    label: AlgebraLabel,
    basis: Vec<GeneratorId>,
    index: HashMap<GeneratorId, usize>,
    brackets: Vec<Combination>,
}

impl StructureConstants {
    /// Builds a table from brackets `[X_i, X_j] = Σ c_k X_k`. Either index
    /// order is accepted; a pair given twice must agree.
    pub fn from_brackets<I>(label: AlgebraLabel, basis: Vec<GeneratorId>, brackets: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (usize, usize, Combination)>,
    {
        let dim = basis.len();
        let index: HashMap<GeneratorId, usize> = basis.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        let mut table: Vec<Option<Combination>> = vec![None; dim * dim.saturating_sub(1) / 2];
        for (i, j, terms) in brackets {
            for idx in [i, j].into_iter().chain(terms.iter().map(|t| t.0)) {
                if idx >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index: idx, n: dim.saturating_sub(1) });
                }
            }
            let mut acc = BTreeMap::new();
            let sign = if i < j { int(1) } else { int(-1) };
            for (k, c) in terms {
                accumulate(&mut acc, k, &sign * c);
            }
            let terms: Combination = acc.into_iter().collect();
            if i == j {
                if terms.is_empty() {
                    continue;
                }
                return Err(AlgebraError::SelfBracket(basis[i].to_string()));
            }
            let (lo, hi) = (i.min(j), i.max(j));
            let slot = &mut table[pair_index(lo, hi, dim)];
            match slot {
                Some(existing) if *existing != terms => {
                    return Err(AlgebraError::ConflictingBracket {
                        x: basis[lo].to_string(),
                        y: basis[hi].to_string(),
                    })
                }
                _ => *slot = Some(terms),
            }
        }
        Ok(Self {
            label,
            basis,
            index,
            brackets: table.into_iter().map(Option::unwrap_or_default).collect(),
        })
    }

    /// Abelian algebra on `dim` generic generators.
    pub fn abelian(dim: usize) -> Self {
        Self::from_brackets(AlgebraLabel::custom(), (0..dim).map(GeneratorId::Generic).collect(), [])
            .expect("empty table is valid")
    }

    /// Table on generic generators `X_0..X_{dim-1}`.
    pub fn generic<I>(dim: usize, brackets: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (usize, usize, Combination)>,
    {
        Self::from_brackets(AlgebraLabel::custom(), (0..dim).map(GeneratorId::Generic).collect(), brackets)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn label(&self) -> &AlgebraLabel {
        &self.label
    }

    pub fn basis(&self) -> &[GeneratorId] {
        &self.basis
    }

    pub fn index_of(&self, g: &GeneratorId) -> Option<usize> {
        self.index.get(g).copied()
    }

    fn require(&self, g: &GeneratorId) -> Result<usize, AlgebraError> {
        self.index_of(g).ok_or_else(|| AlgebraError::UnknownGenerator(g.to_string()))
    }

    /// Stored bracket for `i < j`.
    pub fn stored(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.brackets[pair_index(i, j, self.dim())]
    }

    /// `[X_i, X_j]` for any `i, j`, applying antisymmetry.
    pub fn bracket(&self, i: usize, j: usize) -> Combination {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.stored(i, j).to_vec(),
            Equal => Vec::new(),
            Greater => self.stored(j, i).iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// Bracket looked up by generator names.
    pub fn bracket_of(&self, x: &GeneratorId, y: &GeneratorId) -> Result<Vec<(GeneratorId, Rational)>, AlgebraError> {
        let (i, j) = (self.require(x)?, self.require(y)?);
        Ok(self.bracket(i, j).into_iter().map(|(k, c)| (self.basis[k], c)).collect())
    }

    /// Bilinear extension of the bracket to combinations.
    pub fn bracket_combination(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> Combination {
        let mut acc = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                if i == j {
                    continue;
                }
                let (lo, hi, sign) = if i < j { (*i, *j, int(1)) } else { (*j, *i, int(-1)) };
                let ab = a * b * sign;
                for (k, c) in self.stored(lo, hi) {
                    accumulate(&mut acc, *k, &ab * c);
                }
            }
        }
        acc.into_iter().collect()
    }

    /// Nonzero stored brackets `(i, j, [X_i, X_j])` with `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> + '_ {
        pairs(self.dim())
            .zip(self.brackets.iter())
            .filter(|(_, t)| !t.is_empty())
            .map(|((i, j), t)| (i, j, t.as_slice()))
    }

    pub fn to_json_value(&self) -> StructureConstantsJson {
        StructureConstantsJson {
            n: self.label.n(),
            omega: self.label.omega.iter().map(format_rational).collect(),
            basis: self.basis.iter().map(ToString::to_string).collect(),
            brackets: self
                .nonzero_brackets()
                .map(|(i, j, t)| (i, j, t.iter().map(|(k, c)| (*k, format_rational(c))).collect()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, AlgebraError> {
        let raw: StructureConstantsJson = serde_json::from_str(s).map_err(|e| AlgebraError::Json(e.to_string()))?;
        Self::from_json_value(&raw)
    }

    pub fn from_json_value(raw: &StructureConstantsJson) -> Result<Self, AlgebraError> {
        let omega = raw
            .omega
            .iter()
            .map(|s| parse_rational(s).map_err(|_| AlgebraError::InvalidRational(s.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        if omega.len() != raw.n {
            return Err(AlgebraError::Json(format!("n = {} but {} omega values", raw.n, omega.len())));
        }
        let basis = raw
            .basis
            .iter()
            .map(|s| s.parse::<GeneratorId>())
            .collect::<Result<Vec<_>, _>>()?;
        let mut brackets = Vec::with_capacity(raw.brackets.len());
        for (i, j, terms) in &raw.brackets {
            let terms = terms
                .iter()
                .map(|(k, c)| parse_rational(c).map(|c| (*k, c)).map_err(|_| AlgebraError::InvalidRational(c.clone())))
                .collect::<Result<Combination, _>>()?;
            brackets.push((*i, *j, terms));
        }
        let family = infer_family(&basis);
        let label = AlgebraLabel {
            family,
            omega: if family == Family::Custom { Vec::new() } else { omega },
        };
        Self::from_brackets(label, basis, brackets)
    }
}

fn infer_family(basis: &[GeneratorId]) -> Family {
    let mut alphas = BTreeSet::new();
    for g in basis {
        match g {
            GeneratorId::Generic(_) => return Family::Custom,
            GeneratorId::M { alpha, .. } | GeneratorId::E { alpha, .. } => {
                alphas.insert(*alpha);
            }
            GeneratorId::J { .. } => {}
        }
    }
    match alphas.len() {
        0 => Family::Orthogonal,
        1 => Family::Unitary(*alphas.iter().next().unwrap()),
        _ => Family::Quaternionic,
    }
}

/// `(i, j, [(k, "C_ij^k"), ...])` for one nonzero bracket.
pub type BracketJson = (usize, usize, Vec<(usize, String)>);

/// On-disk shape of a structure-constant table. Rationals are `"p/q"`
/// strings (integers without denominator).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstantsJson {
    pub n: usize,
    pub omega: Vec<String>,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketJson>,
}

/// Basis of `sq_ω(N+1)` in the documented order.
pub fn sq_basis(n: usize) -> Vec<GeneratorId> {
    let edges: Vec<(usize, usize)> = (0..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let mut basis: Vec<GeneratorId> = edges.iter().map(|&(a, b)| GeneratorId::J { a, b }).collect();
    for alpha in 1..=3 {
        basis.extend(edges.iter().map(|&(a, b)| GeneratorId::M { alpha, a, b }));
    }
    for alpha in 1..=3 {
        basis.extend((0..=n).map(|a| GeneratorId::E { alpha, a }));
    }
    basis
}

struct TableBuilder {
    basis: Vec<GeneratorId>,
    index: HashMap<GeneratorId, usize>,
    entries: Vec<(usize, usize, Combination)>,
}

impl TableBuilder {
    fn new(basis: Vec<GeneratorId>) -> Self {
        let index = basis.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        Self { basis, index, entries: Vec::new() }
    }

    fn set(&mut self, x: GeneratorId, y: GeneratorId, terms: &[(GeneratorId, Rational)]) {
        let terms: Combination = terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| (self.index[g], c.clone()))
            .collect();
        self.entries.push((self.index[&x], self.index[&y], terms));
    }
}

/// Table of `sq_ω(N+1)` for any number of parameters, including none
/// (the three-dimensional `sq(1)`).
fn sq_table(omega: &[Rational]) -> StructureConstants {
    use GeneratorId::{E, J, M};
    let n = omega.len();
    let w = |a: usize, b: usize| product(omega, a, b);
    let one = || int(1);
    let mut t = TableBuilder::new(sq_basis(n));

    for a in 0..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                let (wab, wbc) = (w(a, b), w(b, c));
                t.set(J { a, b }, J { a, b: c }, &[(J { a: b, b: c }, wab.clone())]);
                t.set(J { a, b }, J { a: b, b: c }, &[(J { a, b: c }, -one())]);
                t.set(J { a, b: c }, J { a: b, b: c }, &[(J { a, b }, wbc.clone())]);
                for alpha in 1..=3 {
                    let m = |a, b| M { alpha, a, b };
                    t.set(m(a, b), m(a, c), &[(J { a: b, b: c }, wab.clone())]);
                    t.set(m(a, b), m(b, c), &[(J { a, b: c }, one())]);
                    t.set(m(a, c), m(b, c), &[(J { a, b }, wbc.clone())]);
                    t.set(J { a, b }, m(a, c), &[(m(b, c), wab.clone())]);
                    t.set(J { a, b }, m(b, c), &[(m(a, c), -one())]);
                    t.set(J { a, b: c }, m(b, c), &[(m(a, b), -wbc.clone())]);
                    t.set(m(a, b), J { a, b: c }, &[(m(b, c), -wab.clone())]);
                    t.set(m(a, b), J { a: b, b: c }, &[(m(a, c), -one())]);
                    t.set(m(a, c), J { a: b, b: c }, &[(m(a, b), wbc.clone())]);
                    for beta in (1..=3).filter(|&beta| beta != alpha) {
                        let gamma = third_index(alpha, beta);
                        let eps = int(levi_civita(alpha, beta, gamma) as i64);
                        let mb = |a, b| M { alpha: beta, a, b };
                        let mg = |a, b| M { alpha: gamma, a, b };
                        t.set(m(a, b), mb(a, c), &[(mg(b, c), &wab * &eps)]);
                        t.set(m(a, b), mb(b, c), &[(mg(a, c), eps.clone())]);
                        t.set(m(a, c), mb(b, c), &[(mg(a, b), &wbc * &eps)]);
                    }
                }
            }
        }
    }

    for a in 0..=n {
        for b in a + 1..=n {
            let wab = w(a, b);
            for alpha in 1..=3 {
                let mab = M { alpha, a, b };
                for d in 0..=n {
                    let diff = int((d == a) as i64 - (d == b) as i64);
                    let sum = int((d == a) as i64 + (d == b) as i64);
                    t.set(J { a, b }, E { alpha, a: d }, &[(mab, diff.clone())]);
                    t.set(mab, E { alpha, a: d }, &[(J { a, b }, -diff)]);
                    for beta in (1..=3).filter(|&beta| beta != alpha) {
                        let gamma = third_index(alpha, beta);
                        let eps = int(levi_civita(alpha, beta, gamma) as i64);
                        t.set(mab, E { alpha: beta, a: d }, &[(M { alpha: gamma, a, b }, &sum * &eps)]);
                    }
                }
                let two_w = int(2) * &wab;
                t.set(
                    J { a, b },
                    mab,
                    &[(E { alpha, a: b }, two_w.clone()), (E { alpha, a }, -two_w.clone())],
                );
                for beta in (1..=3).filter(|&beta| beta != alpha) {
                    let gamma = third_index(alpha, beta);
                    let c = &two_w * int(levi_civita(alpha, beta, gamma) as i64);
                    t.set(
                        mab,
                        M { alpha: beta, a, b },
                        &[(E { alpha: gamma, a }, c.clone()), (E { alpha: gamma, a: b }, c)],
                    );
                }
            }
        }
    }

    for a in 0..=n {
        for alpha in 1..=3 {
            for beta in (1..=3).filter(|&beta| beta != alpha) {
                let gamma = third_index(alpha, beta);
                let c = int(2 * levi_civita(alpha, beta, gamma) as i64);
                t.set(E { alpha, a }, E { alpha: beta, a }, &[(E { alpha: gamma, a }, c)]);
            }
        }
    }

    let label = AlgebraLabel { family: Family::Quaternionic, omega: omega.to_vec() };
    StructureConstants::from_brackets(label, t.basis, t.entries)
        .expect("the sq commutation relations are internally consistent")
}

/// Full bracket table of `sq_ω(N+1)` over its `(N+1)(2N+3)`-element basis.
pub fn build_sq(p: &OmegaPattern) -> StructureConstants {
    sq_table(p.values())
}

/// Which subalgebra of the chain `so_ω ⊂ u^α_ω ⊂ sq_ω` to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubalgebraFamily {
    Orthogonal,
    Unitary(usize),
    Quaternionic,
}

/// A family tag plus the embedding of the subalgebra basis into the parent
/// basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraSelector {
    pub family: SubalgebraFamily,
    pub embedding: Vec<usize>,
}

impl SubalgebraSelector {
    pub fn new(parent: &StructureConstants, family: SubalgebraFamily) -> Result<Self, AlgebraError> {
        if let SubalgebraFamily::Unitary(alpha) = family {
            if !(1..=3).contains(&alpha) {
                return Err(AlgebraError::InvalidAlpha(alpha));
            }
        }
        let keep = |g: &GeneratorId| match (family, g) {
            (_, GeneratorId::Generic(_)) => false,
            (SubalgebraFamily::Quaternionic, _) => true,
            (_, GeneratorId::J { .. }) => true,
            (SubalgebraFamily::Orthogonal, _) => false,
            (SubalgebraFamily::Unitary(alpha), GeneratorId::M { alpha: x, .. } | GeneratorId::E { alpha: x, .. }) => {
                *x == alpha
            }
        };
        if let Some(g) = parent.basis().iter().find(|g| matches!(g, GeneratorId::Generic(_))) {
            return Err(AlgebraError::NotCkBasis(g.to_string()));
        }
        let embedding = (0..parent.dim()).filter(|&i| keep(&parent.basis()[i])).collect();
        Ok(Self { family, embedding })
    }

    pub fn orthogonal(parent: &StructureConstants) -> Result<Self, AlgebraError> {
        Self::new(parent, SubalgebraFamily::Orthogonal)
    }

    pub fn unitary(parent: &StructureConstants, alpha: usize) -> Result<Self, AlgebraError> {
        Self::new(parent, SubalgebraFamily::Unitary(alpha))
    }

    pub fn quaternionic(parent: &StructureConstants) -> Result<Self, AlgebraError> {
        Self::new(parent, SubalgebraFamily::Quaternionic)
    }
}

/// Restricts `parent` to the span of `indices`, failing if that span is not
/// closed under the bracket.
pub fn restrict(parent: &StructureConstants, indices: &[usize], label: AlgebraLabel) -> Result<StructureConstants, AlgebraError> {
    let local: HashMap<usize, usize> = indices.iter().enumerate().map(|(l, p)| (*p, l)).collect();
    let mut entries = Vec::new();
    for (li, &pi) in indices.iter().enumerate() {
        for (lj, &pj) in indices.iter().enumerate().skip(li + 1) {
            let mut terms = Vec::new();
            for (k, c) in parent.bracket(pi, pj) {
                match local.get(&k) {
                    Some(lk) => terms.push((*lk, c)),
                    None => {
                        return Err(AlgebraError::ClosureViolation {
                            x: parent.basis()[pi].to_string(),
                            y: parent.basis()[pj].to_string(),
                            escaped: parent.basis()[k].to_string(),
                        })
                    }
                }
            }
            if !terms.is_empty() {
                entries.push((li, lj, terms));
            }
        }
    }
    let basis = indices.iter().map(|&p| parent.basis()[p]).collect();
    StructureConstants::from_brackets(label, basis, entries)
}

/// Extracts the `so_ω`, `u^α_ω` or full `sq_ω` table, verifying closure.
pub fn build_subalgebra(parent: &StructureConstants, sel: &SubalgebraSelector) -> Result<StructureConstants, AlgebraError> {
    let family = match sel.family {
        SubalgebraFamily::Orthogonal => Family::Orthogonal,
        SubalgebraFamily::Unitary(alpha) => Family::Unitary(alpha),
        SubalgebraFamily::Quaternionic => Family::Quaternionic,
    };
    let label = AlgebraLabel { family, omega: parent.label().omega.clone() };
    restrict(parent, &sel.embedding, label)
}

/// Builds `so_ω(N+1)`, `u^α_ω(N+1)` or `sq_ω(N+1)` directly from a pattern.
pub fn build_family(p: &OmegaPattern, family: Family) -> Result<StructureConstants, AlgebraError> {
    let sq = build_sq(p);
    let sub = match family {
        Family::Quaternionic => return Ok(sq),
        Family::Unitary(alpha) => SubalgebraFamily::Unitary(alpha),
        Family::Orthogonal => SubalgebraFamily::Orthogonal,
        Family::Custom => return Err(AlgebraError::NotCkBasis("custom".into())),
    };
    build_subalgebra(&sq, &SubalgebraSelector::new(&sq, sub)?)
}

/// Failure of the Jacobi identity on one triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Combination,
}

/// Checks `[[X_i,X_j],X_l] + [[X_j,X_l],X_i] + [[X_l,X_i],X_j] = 0` for all
/// `i < j < l`.
pub fn verify_jacobi(g: &StructureConstants) -> Vec<JacobiViolation> {
    let r = g.dim();
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            for l in j + 1..r {
                let mut acc = BTreeMap::new();
                for (x, y, z) in [(i, j, l), (j, l, i), (l, i, j)] {
                    for (k, c) in g.bracket(x, y) {
                        for (m, d) in g.bracket(k, z) {
                            accumulate(&mut acc, m, &c * &d);
                        }
                    }
                }
                if !acc.is_empty() {
                    out.push(JacobiViolation { triple: (i, j, l), residual: acc.into_iter().collect() });
                }
            }
        }
    }
    out
}

/// Linear map given by the images of basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMap {
    images: Vec<Combination>,
}

impl BasisMap {
    pub fn new(images: Vec<Combination>) -> Self {
        Self { images }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new((0..dim).map(|i| vec![(i, int(1))]).collect())
    }

    pub fn image(&self, i: usize) -> &[(usize, Rational)] {
        &self.images[i]
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, v: &[(usize, Rational)]) -> Combination {
        let mut acc = BTreeMap::new();
        for (i, c) in v {
            for (k, d) in &self.images[*i] {
                accumulate(&mut acc, *k, c * d);
            }
        }
        acc.into_iter().collect()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &BasisMap) -> BasisMap {
        BasisMap::new(first.images.iter().map(|img| self.apply(img)).collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == BasisMap::identity(self.dim())
    }

    /// First basis pair `(i, j)` with `φ[X_i, X_j] ≠ [φX_i, φX_j]`.
    pub fn first_bracket_failure(&self, src: &StructureConstants, dst: &StructureConstants) -> Option<(usize, usize)> {
        pairs(src.dim()).find(|&(i, j)| {
            let lhs = self.apply(src.stored(i, j));
            let rhs = dst.bracket_combination(&self.images[i], &self.images[j]);
            lhs != rhs
        })
    }
}

fn ck_n(g: &StructureConstants) -> Result<usize, AlgebraError> {
    if let Some(x) = g.basis().iter().find(|x| matches!(x, GeneratorId::Generic(_))) {
        return Err(AlgebraError::NotCkBasis(x.to_string()));
    }
    Ok(g.label().n())
}

/// The grading automorphism `S_S` for a subset `S ⊆ {0..N}`: `J_ab` and
/// `M^α_ab` pick up `(−1)^{χ(a)+χ(b)}`, every `E^α_a` is fixed. The result
/// is checked to preserve every bracket and to square to the identity.
pub fn grading_automorphism(g: &StructureConstants, subset: &BTreeSet<usize>) -> Result<BasisMap, AlgebraError> {
    let n = ck_n(g)?;
    if let Some(&bad) = subset.iter().find(|&&s| s > n) {
        return Err(AlgebraError::IndexOutOfRange { index: bad, n });
    }
    let chi = |a: usize| subset.contains(&a) as usize;
    let images = g
        .basis()
        .iter()
        .enumerate()
        .map(|(i, gid)| {
            let sign = match *gid {
                GeneratorId::J { a, b } | GeneratorId::M { a, b, .. } => {
                    if (chi(a) + chi(b)) % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                }
                _ => 1,
            };
            vec![(i, int(sign))]
        })
        .collect();
    let map = BasisMap::new(images);
    if let Some((i, j)) = map.first_bracket_failure(g, g) {
        return Err(AlgebraError::NotHomomorphism { x: g.basis()[i].to_string(), y: g.basis()[j].to_string() });
    }
    if !map.compose(&map).is_identity() {
        return Err(AlgebraError::NotInvolution);
    }
    Ok(map)
}

/// All `2^(N+1)` subsets of `{0..N}`. Complementary subsets give the same
/// map, so these realize the `2^N` distinct grading automorphisms.
pub fn all_index_subsets(n: usize) -> Vec<BTreeSet<usize>> {
    (0u32..1 << (n + 1))
        .map(|mask| (0..=n).filter(|a| mask & (1 << a) != 0).collect())
        .collect()
}

/// Isomorphism `sq_{ω_1..ω_N}(N+1) → sq_{ω_N..ω_1}(N+1)`.
#[derive(Debug, Clone)]
pub struct Reversal {
    pub source: StructureConstants,
    pub target: StructureConstants,
    pub map: BasisMap,
}

fn reversed_generator(g: GeneratorId, n: usize) -> GeneratorId {
    let swap = |alpha: usize| match alpha {
        1 => 2,
        2 => 1,
        x => x,
    };
    match g {
        GeneratorId::J { a, b } => GeneratorId::J { a: n - b, b: n - a },
        GeneratorId::M { alpha, a, b } => GeneratorId::M { alpha: swap(alpha), a: n - b, b: n - a },
        GeneratorId::E { alpha, a } => GeneratorId::E { alpha: swap(alpha), a: n - a },
        other => other,
    }
}

/// Builds the reversal map `X ↦ −X'` (with `J_ab ↦ −J_{N−b,N−a}`,
/// `M^1 ↔ M^2`, `E^1 ↔ E^2` and index reflection) and checks that it
/// intertwines the two bracket tables exactly.
pub fn reversal_isomorphism(p: &OmegaPattern) -> Result<Reversal, AlgebraError> {
    let source = build_sq(p);
    let target = build_sq(&p.reversed());
    let n = p.n();
    let images = source
        .basis()
        .iter()
        .map(|g| {
            let k = target.require(&reversed_generator(*g, n))?;
            Ok(vec![(k, int(-1))])
        })
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    let map = BasisMap::new(images);
    if let Some((i, j)) = map.first_bracket_failure(&source, &target) {
        return Err(AlgebraError::IntertwiningFailure {
            x: source.basis()[i].to_string(),
            y: source.basis()[j].to_string(),
        });
    }
    Ok(Reversal { source, target, map })
}

/// Outcome of analysing the contraction `ω_a = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectReport {
    pub position: usize,
    /// Generators `J_de`, `M^α_de` with `d < a <= e`.
    pub ideal: Vec<usize>,
    pub expected_dim: usize,
    pub is_ideal: bool,
    pub is_abelian: bool,
    /// Generators with every index below `a`.
    pub left: Vec<usize>,
    /// Generators with every index at least `a`.
    pub right: Vec<usize>,
    pub left_matches: bool,
    pub right_matches: bool,
    pub complements_commute: bool,
}

impl SemidirectReport {
    pub fn holds(&self) -> bool {
        self.ideal.len() == self.expected_dim
            && self.is_ideal
            && self.is_abelian
            && self.left_matches
            && self.right_matches
            && self.complements_commute
    }
}

/// Whether `sub` equals `reference` after renaming each generator through
/// `rename`.
fn matches_reference(sub: &StructureConstants, reference: &StructureConstants, rename: impl Fn(GeneratorId) -> GeneratorId) -> bool {
    if sub.dim() != reference.dim() {
        return false;
    }
    let to_ref: Option<Vec<usize>> = sub.basis().iter().map(|g| reference.index_of(&rename(*g))).collect();
    let Some(to_ref) = to_ref else { return false };
    pairs(sub.dim()).all(|(i, j)| {
        let mut mapped: Combination = sub.stored(i, j).iter().map(|(k, c)| (to_ref[*k], c.clone())).collect();
        mapped.sort_by_key(|t| t.0);
        mapped == reference.bracket(to_ref[i], to_ref[j])
    })
}

/// Analyses the semidirect structure `t ⊙ (sq(a) ⊕ sq(N+1−a))` produced by
/// `ω_a = 0`: checks that the rectangle `t` is an abelian ideal of
/// dimension `4a(N+1−a)` and that the two triangles close onto the smaller
/// CK algebras and commute with each other.
pub fn semidirect_analysis(p: &OmegaPattern, a: usize) -> Result<SemidirectReport, AlgebraError> {
    let value = p.omega(a)?;
    if !value.is_zero() {
        return Err(AlgebraError::NotContracted { position: a, value: format_rational(value) });
    }
    let n = p.n();
    let g = build_sq(p);
    let mut ideal = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, gid) in g.basis().iter().enumerate() {
        let idx = gid.indices();
        if idx.iter().all(|&x| x < a) {
            left.push(i);
        } else if idx.iter().all(|&x| x >= a) {
            right.push(i);
        } else {
            ideal.push(i);
        }
    }
    let in_ideal: BTreeSet<usize> = ideal.iter().copied().collect();
    let is_ideal = ideal
        .iter()
        .all(|&t| (0..g.dim()).all(|x| g.bracket(x, t).iter().all(|(k, _)| in_ideal.contains(k))));
    let is_abelian = ideal
        .iter()
        .all(|&s| ideal.iter().all(|&t| g.bracket(s, t).is_empty()));
    let complements_commute = left
        .iter()
        .all(|&x| right.iter().all(|&y| g.bracket(x, y).is_empty()));

    let left_label = AlgebraLabel { family: Family::Quaternionic, omega: p.values()[..a - 1].to_vec() };
    let right_label = AlgebraLabel { family: Family::Quaternionic, omega: p.values()[a..].to_vec() };
    let left_matches = match restrict(&g, &left, left_label) {
        Ok(sub) => matches_reference(&sub, &sq_table(&p.values()[..a - 1]), |x| x),
        Err(_) => false,
    };
    let right_matches = match restrict(&g, &right, right_label) {
        Ok(sub) => matches_reference(&sub, &sq_table(&p.values()[a..]), |x| x.shifted_down(a)),
        Err(_) => false,
    };
    Ok(SemidirectReport {
        position: a,
        expected_dim: 4 * a * (n + 1 - a),
        ideal,
        is_ideal,
        is_abelian,
        left,
        right,
        left_matches,
        right_matches,
        complements_commute,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn gid(s: &str) -> GeneratorId {
        s.parse().unwrap()
    }

    fn br(g: &StructureConstants, x: &str, y: &str) -> Vec<(GeneratorId, Rational)> {
        g.bracket_of(&gid(x), &gid(y)).unwrap()
    }

    #[test]
    fn omega_ab_examples() {
        let ones = OmegaPattern::from_ints(&[1, 1, 1]).unwrap();
        for a in 0..=3 {
            for b in a..=3 {
                assert_eq!(omega_ab(&ones, a, b).unwrap(), int(1));
            }
        }
        let p = OmegaPattern::from_ints(&[2, 0, 3]).unwrap();
        assert_eq!(omega_ab(&p, 0, 3).unwrap(), int(0));
        assert_eq!(omega_ab(&p, 2, 3).unwrap(), int(3));
        assert_eq!(omega_ab(&p, 0, 1).unwrap(), int(2));
        assert_eq!(omega_ab(&p, 2, 2).unwrap(), int(1));
        assert_eq!(omega_ab(&p, 2, 1), Err(AlgebraError::DescendingIndices { a: 2, b: 1 }));
        assert_eq!(omega_ab(&p, 0, 4), Err(AlgebraError::IndexOutOfRange { index: 4, n: 3 }));
    }

    #[test]
    fn omega_is_multiplicative() {
        let p = OmegaPattern::new(vec![int(2), ratio(1, 2), int(-1), int(3)]).unwrap();
        for a in 0..=4 {
            for c in a..=4 {
                for b in c..=4 {
                    assert_eq!(
                        omega_ab(&p, a, b).unwrap(),
                        omega_ab(&p, a, c).unwrap() * omega_ab(&p, c, b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_empty_pattern() {
        assert_eq!(OmegaPattern::new(vec![]), Err(AlgebraError::DegenerateN));
        assert!(matches!(OmegaPattern::parse("1,x"), Err(AlgebraError::InvalidRational(t)) if t == "x"));
    }

    #[test]
    fn generator_names_round_trip() {
        for g in sq_basis(3).into_iter().chain([GeneratorId::Generic(7)]) {
            assert_eq!(g.to_string().parse::<GeneratorId>().unwrap(), g);
        }
        assert!("J_1_0".parse::<GeneratorId>().is_err());
        assert!("M4_0_1".parse::<GeneratorId>().is_err());
        assert!("E1".parse::<GeneratorId>().is_err());
    }

    #[test]
    fn basis_size_and_order() {
        for n in 1..=4 {
            let basis = sq_basis(n);
            assert_eq!(basis.len(), (n + 1) * (2 * n + 3));
            let js = basis.iter().filter(|g| matches!(g, GeneratorId::J { .. })).count();
            let es = basis.iter().filter(|g| matches!(g, GeneratorId::E { .. })).count();
            assert_eq!(js, n * (n + 1) / 2);
            assert_eq!(es, 3 * (n + 1));
        }
        let b = sq_basis(1);
        let names: Vec<String> = b.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["J_0_1", "M1_0_1", "M2_0_1", "M3_0_1", "E1_0", "E1_1", "E2_0", "E2_1", "E3_0", "E3_1"]);
    }

    #[test]
    fn sq_bracket_examples() {
        let w1 = ratio(3, 2);
        let p = OmegaPattern::new(vec![w1.clone(), int(5)]).unwrap();
        let g = build_sq(&p);
        assert_eq!(br(&g, "J_0_1", "J_0_2"), vec![(gid("J_1_2"), w1.clone())]);
        assert_eq!(br(&g, "E1_0", "E2_0"), vec![(gid("E3_0"), int(2))]);
        assert_eq!(
            br(&g, "M1_0_1", "M2_0_1"),
            vec![(gid("E3_0"), int(2) * &w1), (gid("E3_1"), int(2) * &w1)]
        );
        assert_eq!(br(&g, "J_0_1", "J_0_1"), vec![]);
        assert_eq!(br(&g, "J_0_2", "J_0_1"), vec![(gid("J_1_2"), -w1)]);
        let g3 = build_sq(&OmegaPattern::from_ints(&[1, 1, 1]).unwrap());
        assert_eq!(br(&g3, "J_0_1", "M1_2_3"), vec![]);
    }

    #[test]
    fn jacobi_holds_for_sq() {
        for values in [vec![1], vec![0], vec![-1, 2], vec![0, 0, 1]] {
            let g = build_sq(&OmegaPattern::from_ints(&values).unwrap());
            assert!(verify_jacobi(&g).is_empty(), "pattern {values:?}");
        }
        let g = build_sq(&OmegaPattern::new(vec![ratio(1, 2), int(0), int(-1)]).unwrap());
        assert!(verify_jacobi(&g).is_empty());
    }

    #[test]
    fn jacobi_detects_broken_tables() {
        // [X1,X2] = X3, [X1,X3] = X2, [X2,X3] = 0 is a Lie algebra.
        let table = |x23: Combination| {
            StructureConstants::generic(3, [(0, 1, vec![(2, int(1))]), (0, 2, vec![(1, int(1))]), (1, 2, x23)]).unwrap()
        };
        assert!(verify_jacobi(&table(vec![])).is_empty());
        let violations = verify_jacobi(&table(vec![(1, int(1))]));
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].triple, (0, 1, 2));
        assert_eq!(violations[0].residual, vec![(2, int(-1))]);
        assert!(verify_jacobi(&StructureConstants::abelian(5)).is_empty());
    }

    #[test]
    fn conflicting_brackets_are_rejected() {
        let err = StructureConstants::generic(2, [(0, 1, vec![(0, int(1))]), (1, 0, vec![(0, int(1))])]);
        assert!(matches!(err, Err(AlgebraError::ConflictingBracket { .. })));
        let ok = StructureConstants::generic(2, [(0, 1, vec![(0, int(1))]), (1, 0, vec![(0, int(-1))])]);
        assert!(ok.is_ok());
    }

    #[test]
    fn subalgebras() {
        let p = OmegaPattern::new(vec![int(2), int(0)]).unwrap();
        let sq = build_sq(&p);
        let so = build_subalgebra(&sq, &SubalgebraSelector::orthogonal(&sq).unwrap()).unwrap();
        assert_eq!(so.dim(), 3);
        assert_eq!(br(&so, "J_0_1", "J_0_2"), vec![(gid("J_1_2"), int(2))]);
        for alpha in 1..=3 {
            let u = build_subalgebra(&sq, &SubalgebraSelector::unitary(&sq, alpha).unwrap()).unwrap();
            assert_eq!(u.dim(), 9);
            assert_eq!(u.label().family, Family::Unitary(alpha));
            let so_again = build_subalgebra(&u, &SubalgebraSelector::orthogonal(&u).unwrap()).unwrap();
            assert_eq!(so_again, so);
        }
        assert!(matches!(SubalgebraSelector::unitary(&sq, 4), Err(AlgebraError::InvalidAlpha(4))));
    }

    #[test]
    fn restriction_detects_non_closure() {
        let sq = build_sq(&OmegaPattern::from_ints(&[1]).unwrap());
        let j = sq.index_of(&gid("J_0_1")).unwrap();
        let m = sq.index_of(&gid("M1_0_1")).unwrap();
        assert!(matches!(
            restrict(&sq, &[j, m], AlgebraLabel::custom()),
            Err(AlgebraError::ClosureViolation { .. })
        ));
    }

    #[test]
    fn grading_examples() {
        let p = OmegaPattern::from_ints(&[1]).unwrap();
        let g = build_sq(&p);
        let id = grading_automorphism(&g, &BTreeSet::new()).unwrap();
        assert!(id.is_identity());
        let s = grading_automorphism(&g, &BTreeSet::from([0])).unwrap();
        for (i, x) in g.basis().iter().enumerate() {
            let expected = if matches!(x, GeneratorId::E { .. }) { 1 } else { -1 };
            assert_eq!(s.image(i), &[(i, int(expected))]);
        }
        assert!(s.compose(&s).is_identity());
        assert!(matches!(
            grading_automorphism(&g, &BTreeSet::from([2])),
            Err(AlgebraError::IndexOutOfRange { index: 2, n: 1 })
        ));
    }

    #[test]
    fn reversal_examples() {
        let pal = OmegaPattern::from_ints(&[1, 0, 1]).unwrap();
        let r = reversal_isomorphism(&pal).unwrap();
        assert_eq!(r.source, r.target);
        let p = OmegaPattern::from_ints(&[0, 1]).unwrap();
        let r = reversal_isomorphism(&p).unwrap();
        assert_eq!(r.target.label().omega, vec![int(1), int(0)]);
        let back = reversal_isomorphism(&p.reversed()).unwrap();
        let composite = back.map.compose(&r.map);
        assert!(composite.is_identity());
        assert!(composite.first_bracket_failure(&r.source, &r.source).is_none());
    }

    #[test]
    fn semidirect_examples() {
        let rep = semidirect_analysis(&OmegaPattern::from_ints(&[1, 0]).unwrap(), 2).unwrap();
        assert_eq!(rep.ideal.len(), 8);
        assert!(rep.holds());
        let rep = semidirect_analysis(&OmegaPattern::from_ints(&[0]).unwrap(), 1).unwrap();
        assert_eq!(rep.ideal.len(), 4);
        assert_eq!(rep.left.len(), 3);
        assert_eq!(rep.right.len(), 3);
        assert!(rep.holds());
        assert!(matches!(
            semidirect_analysis(&OmegaPattern::from_ints(&[1, 1]).unwrap(), 1),
            Err(AlgebraError::NotContracted { position: 1, .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let p = OmegaPattern::new(vec![ratio(1, 2), int(0)]).unwrap();
        for family in [Family::Quaternionic, Family::Unitary(2), Family::Orthogonal] {
            let g = build_family(&p, family).unwrap();
            let back = StructureConstants::from_json(&g.to_json()).unwrap();
            assert_eq!(back, g);
        }
        let json = build_sq(&p).to_json_value();
        assert_eq!(json.omega, vec!["1/2", "0"]);
        assert_eq!(json.basis[0], "J_0_1");
        assert!(StructureConstants::from_json("{\"n\": 1}").is_err());
    }
}
