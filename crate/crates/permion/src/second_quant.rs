//! Occupation-number Fock spaces and sparse ladder operators.
//!
//! Fermionic operators are realized with the Jordan-Wigner sign string
//! `(-1)^(sum_{i<j} K_i)`, so every matrix entry is an exact integer and the
//! canonical anticommutation relations verify with zero tolerance. Bosonic
//! operators carry `sqrt` entries and are checked to 1e-12 on the subspace
//! untouched by the occupation truncation; the truncation artifact on
//! max-occupation states is measured and reported, never hidden.
//!
//! Basis ordering is little-endian in the occupation string: mode 1 is the
//! lowest digit, so the vacuum is always index 0.

use std::collections::{BTreeMap, HashMap};

use num::complex::Complex;

use crate::caps;
use crate::first_quant::{antisymmetrize, elementary_tensor, NBodyTensor, TensorError};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FockError {
    #[error("mode {mode} out of range 1..={modes}")]
    ModeOutOfRange { mode: usize, modes: usize },
    #[error("basis size {size} exceeds cap {cap}")]
    SizeOutOfRange { size: usize, cap: usize },
    #[error("fermion sector needs N <= d, got N={n}, d={d}")]
    TooManyFermions { n: usize, d: usize },
    #[error("occupation string invalid for {0} statistics")]
    BadOccupation(&'static str),
    #[error("operators act on different basis dimensions: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("anticommutator of operators {0} and {1} is not proportional to the identity")]
    NotFermionicFamily(usize, usize),
    #[error("truncation must be at least 1")]
    BadTruncation,
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistics {
    Fermion,
    Boson,
}

/// Ordered occupation-number basis. Fermions: `2^d` bitstrings. Bosons:
/// `(M+1)^d` strings with per-mode occupation at most the truncation `M`.
#[derive(Debug, Clone)]
pub struct FockBasis {
    pub modes: usize,
    pub statistics: Statistics,
    /// Per-mode occupation bound: 1 for fermions, the truncation for bosons.
    pub max_occupation: u32,
    pub states: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl FockBasis {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, state: &[u32]) -> Option<usize> {
        self.index.get(state).copied()
    }

    pub fn vacuum(&self) -> usize {
        0
    }
}

/// Builds the basis with states ordered by the little-endian numeral value
/// of the occupation string (mode 1 is the lowest digit).
pub fn fock_basis(modes: usize, statistics: Statistics, truncation: u32) -> Result<FockBasis, FockError> {
    let (base, cap) = match statistics {
        Statistics::Fermion => (2u32, caps::effective(caps::MAX_FERMION_MODES)),
        Statistics::Boson => {
            if truncation == 0 {
                return Err(FockError::BadTruncation);
            }
            (truncation + 1, usize::MAX)
        }
    };
    if statistics == Statistics::Fermion && modes > cap {
        return Err(FockError::SizeOutOfRange {
            size: modes,
            cap,
        });
    }
    let size = (base as usize)
        .checked_pow(modes as u32)
        .filter(|&s| match statistics {
            Statistics::Fermion => true,
            Statistics::Boson => s <= caps::MAX_BOSON_BASIS,
        })
        .ok_or(FockError::SizeOutOfRange {
            size: usize::MAX,
            cap: caps::MAX_BOSON_BASIS,
        })?;
    let mut states = Vec::with_capacity(size);
    for value in 0..size {
        let mut rest = value;
        let state: Vec<u32> = (0..modes)
            .map(|_| {
                let digit = (rest % base as usize) as u32;
                rest /= base as usize;
                digit
            })
            .collect();
        states.push(state);
    }
    let index = states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    Ok(FockBasis {
        modes,
        statistics,
        max_occupation: base - 1,
        states,
        index,
    })
}

/// Exact binomial sector dimension: `C(d, N)` for fermions,
/// `C(N+d-1, d-1)` for bosons.
pub fn sector_dimension(modes: usize, particles: usize, statistics: Statistics) -> Result<u64, FockError> {
    match statistics {
        Statistics::Fermion => {
            if particles > modes {
                return Err(FockError::TooManyFermions {
                    n: particles,
                    d: modes,
                });
            }
            Ok(binomial(modes as u64, particles as u64))
        }
        Statistics::Boson => Ok(binomial(
            (particles + modes - 1) as u64,
            (modes - 1) as u64,
        )),
    }
}

fn binomial(n: u64, mut k: u64) -> u64 {
    if k > n {
        return 0;
    }
    k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Scalar kinds a sparse Fock operator can carry: exact integers for
/// fermions, doubles for bosons, Gaussian integers for Majorana families.
pub trait OpScalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn magnitude(&self) -> f64;
}

impl OpScalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn magnitude(&self) -> f64 {
        self.abs() as f64
    }
}

impl OpScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl OpScalar for Complex<i64> {
    fn zero() -> Self {
        Complex::new(0, 0)
    }
    fn one() -> Self {
        Complex::new(1, 0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
    fn magnitude(&self) -> f64 {
        ((self.re * self.re + self.im * self.im) as f64).sqrt()
    }
}

/// Sparse operator over a Fock basis: map from (row, col) to a nonzero
/// scalar.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOp<T> {
    pub dim: usize,
    pub entries: BTreeMap<(usize, usize), T>,
}

pub type FermionOp = SparseOp<i64>;
pub type BosonOp = SparseOp<f64>;
pub type MajoranaOp = SparseOp<Complex<i64>>;

impl<T: OpScalar> SparseOp<T> {
    pub fn zero(dim: usize) -> Self {
        SparseOp {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        SparseOp {
            dim,
            entries: (0..dim).map(|i| ((i, i), T::one())).collect(),
        }
    }

    pub fn insert(&mut self, row: usize, col: usize, value: T) {
        if !value.is_zero() {
            self.entries.insert((row, col), value);
        }
    }

    pub fn mul(&self, other: &SparseOp<T>) -> Result<SparseOp<T>, FockError> {
        if self.dim != other.dim {
            return Err(FockError::DimMismatch(self.dim, other.dim));
        }
        // index other's entries by row for the contraction
        let mut by_row: HashMap<usize, Vec<(usize, &T)>> = HashMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out: BTreeMap<(usize, usize), T> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    let term = a.mul(b);
                    out.entry((i, j))
                        .and_modify(|acc| *acc = acc.add(&term))
                        .or_insert(term);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(SparseOp {
            dim: self.dim,
            entries: out,
        })
    }

    pub fn add(&self, other: &SparseOp<T>) -> Result<SparseOp<T>, FockError> {
        if self.dim != other.dim {
            return Err(FockError::DimMismatch(self.dim, other.dim));
        }
        let mut out = self.entries.clone();
        for (&key, v) in &other.entries {
            out.entry(key)
                .and_modify(|acc| *acc = acc.add(v))
                .or_insert_with(|| v.clone());
        }
        out.retain(|_, v| !v.is_zero());
        Ok(SparseOp {
            dim: self.dim,
            entries: out,
        })
    }

    pub fn negate(&self) -> SparseOp<T> {
        SparseOp {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(&k, v)| (k, v.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SparseOp<T>) -> Result<SparseOp<T>, FockError> {
        self.add(&other.negate())
    }

    pub fn transpose(&self) -> SparseOp<T> {
        SparseOp {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    pub fn anticommutator(&self, other: &SparseOp<T>) -> Result<SparseOp<T>, FockError> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn commutator(&self, other: &SparseOp<T>) -> Result<SparseOp<T>, FockError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_magnitude(&self) -> f64 {
        self.entries
            .values()
            .map(|v| v.magnitude())
            .fold(0.0, f64::max)
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// If this operator is `c * I`, returns `c` (zero counts as `c = 0`).
    pub fn proportional_to_identity(&self) -> Option<T> {
        let c = self.get(0, 0);
        let expected: BTreeMap<(usize, usize), T> = if c.is_zero() {
            BTreeMap::new()
        } else {
            (0..self.dim).map(|i| ((i, i), c.clone())).collect()
        };
        if self.entries == expected {
            Some(c)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    Create,
    Annihilate,
}

/// Jordan-Wigner fermionic ladder operator on `2^d` states. The creation
/// operator maps `|K>` with `K_j = 0` to `(-1)^(sum_{i<j} K_i) |K + e_j>`;
/// annihilation is its transpose.
pub fn fermion_ladder(mode: usize, modes: usize, kind: LadderKind) -> Result<FermionOp, FockError> {
    fermion_ladder_impl(mode, modes, kind, true)
}

/// Same matrix with the Jordan-Wigner sign string dropped. Deliberately
/// wrong for more than one mode; kept as the negative control that CAR
/// verification must reject.
pub fn fermion_ladder_unsigned(
    mode: usize,
    modes: usize,
    kind: LadderKind,
) -> Result<FermionOp, FockError> {
    fermion_ladder_impl(mode, modes, kind, false)
}

fn fermion_ladder_impl(
    mode: usize,
    modes: usize,
    kind: LadderKind,
    signed: bool,
) -> Result<FermionOp, FockError> {
    if mode == 0 || mode > modes {
        return Err(FockError::ModeOutOfRange { mode, modes });
    }
    let basis = fock_basis(modes, Statistics::Fermion, 1)?;
    let mut create = FermionOp::zero(basis.len());
    for (col, state) in basis.states.iter().enumerate() {
        if state[mode - 1] == 1 {
            continue;
        }
        let mut raised = state.clone();
        raised[mode - 1] = 1;
        let row = basis.index_of(&raised).expect("state in basis");
        let parity: u32 = state[..mode - 1].iter().sum();
        let sign = if signed && parity % 2 == 1 { -1 } else { 1 };
        create.insert(row, col, sign);
    }
    Ok(match kind {
        LadderKind::Create => create,
        LadderKind::Annihilate => create.transpose(),
    })
}

/// Truncated bosonic ladder operator on `(M+1)^d` states. Creation maps
/// `|..K_j..>` to `sqrt(K_j + 1) |..K_j+1..>` below the truncation and to
/// zero at it; annihilation is the transpose.
pub fn boson_ladder(
    mode: usize,
    modes: usize,
    truncation: u32,
    kind: LadderKind,
) -> Result<BosonOp, FockError> {
    if mode == 0 || mode > modes {
        return Err(FockError::ModeOutOfRange { mode, modes });
    }
    let basis = fock_basis(modes, Statistics::Boson, truncation)?;
    let mut create = BosonOp::zero(basis.len());
    for (col, state) in basis.states.iter().enumerate() {
        let occ = state[mode - 1];
        if occ == truncation {
            continue;
        }
        let mut raised = state.clone();
        raised[mode - 1] = occ + 1;
        let row = basis.index_of(&raised).expect("state in basis");
        create.insert(row, col, ((occ + 1) as f64).sqrt());
    }
    Ok(match kind {
        LadderKind::Create => create,
        LadderKind::Annihilate => create.transpose(),
    })
}

/// Exhaustive exact check of the canonical anticommutation relations.
#[derive(Debug, Clone)]
pub struct CarReport {
    pub modes: usize,
    pub pairs_checked: usize,
    /// Largest absolute deviation from the expected anticommutators; zero
    /// when the relations hold exactly.
    pub max_violation: i64,
}

/// Verifies `{a_p, a_q} = 0` and `{a_p, a'_q} = delta_pq I` for all pairs
/// over the supplied annihilation operators (exact integer arithmetic).
pub fn verify_car_ops(ops: &[FermionOp]) -> Result<CarReport, FockError> {
    let modes = ops.len();
    let mut pairs_checked = 0;
    let mut max_violation: i64 = 0;
    for (p, ap) in ops.iter().enumerate() {
        for (q, aq) in ops.iter().enumerate() {
            pairs_checked += 1;
            let both_lower = ap.anticommutator(aq)?;
            max_violation = max_violation.max(both_lower.max_magnitude() as i64);
            let mut mixed = ap.anticommutator(&aq.transpose())?;
            if p == q {
                mixed = mixed.sub(&FermionOp::identity(ap.dim))?;
            }
            max_violation = max_violation.max(mixed.max_magnitude() as i64);
        }
    }
    Ok(CarReport {
        modes,
        pairs_checked,
        max_violation,
    })
}

/// CAR check over the standard Jordan-Wigner operators for `d` modes.
pub fn verify_car(modes: usize) -> Result<CarReport, FockError> {
    if modes == 0 || modes > 8 {
        return Err(FockError::SizeOutOfRange {
            size: modes,
            cap: 8,
        });
    }
    let ops: Vec<FermionOp> = (1..=modes)
        .map(|j| fermion_ladder(j, modes, LadderKind::Annihilate))
        .collect::<Result<_, _>>()?;
    verify_car_ops(&ops)
}

/// Canonical commutation relations under truncation.
#[derive(Debug, Clone)]
pub struct CcrReport {
    pub modes: usize,
    pub truncation: u32,
    /// Largest deviation of `[a_p, a_q]` and `[a_p, a'_q] - delta_pq I`
    /// on columns whose occupations are all below the truncation.
    pub max_violation_on_safe_subspace: f64,
    /// Measured diagonal of `[a_j, a'_j]` on a state with `K_j = M`;
    /// the finite basis forces this to `-M` instead of `+1`.
    pub truncation_artifact: f64,
}

/// Verifies the CCR on the truncation-safe subspace and measures the known
/// artifact on max-occupation states.
pub fn verify_ccr(modes: usize, truncation: u32) -> Result<CcrReport, FockError> {
    let basis = fock_basis(modes, Statistics::Boson, truncation)?;
    if basis.len() > 10_000 {
        return Err(FockError::SizeOutOfRange {
            size: basis.len(),
            cap: 10_000,
        });
    }
    let lowering: Vec<BosonOp> = (1..=modes)
        .map(|j| boson_ladder(j, modes, truncation, LadderKind::Annihilate))
        .collect::<Result<_, _>>()?;
    let safe_col: Vec<bool> = basis
        .states
        .iter()
        .map(|s| s.iter().all(|&k| k < truncation))
        .collect();
    let mut max_violation: f64 = 0.0;
    let mut artifact: f64 = -(truncation as f64);
    let mut worst_artifact_err: f64 = -1.0;
    for (p, ap) in lowering.iter().enumerate() {
        for (q, aq) in lowering.iter().enumerate() {
            let lower_pair = ap.commutator(aq)?;
            for (&(_, c), v) in &lower_pair.entries {
                if safe_col[c] {
                    max_violation = max_violation.max(v.abs());
                }
            }
            let mixed = ap.commutator(&aq.transpose())?;
            for (&(r, c), v) in &mixed.entries {
                if safe_col[c] {
                    let expected = if p == q && r == c { 1.0 } else { 0.0 };
                    max_violation = max_violation.max((v - expected).abs());
                }
            }
            if p == q {
                for (c, state) in basis.states.iter().enumerate() {
                    if state[p] == truncation {
                        let measured = mixed.get(c, c);
                        let err = (measured + truncation as f64).abs();
                        if err > worst_artifact_err {
                            worst_artifact_err = err;
                            artifact = measured;
                        }
                    }
                }
            }
        }
    }
    Ok(CcrReport {
        modes,
        truncation,
        max_violation_on_safe_subspace: max_violation,
        truncation_artifact: artifact,
    })
}

/// Occupation string validation against the statistics.
pub fn validate_occupation(
    occ: &[u32],
    statistics: Statistics,
    truncation: u32,
) -> Result<(), FockError> {
    match statistics {
        Statistics::Fermion => {
            if occ.iter().any(|&k| k > 1) {
                return Err(FockError::BadOccupation("fermion"));
            }
        }
        Statistics::Boson => {
            if occ.iter().any(|&k| k > truncation) {
                return Err(FockError::BadOccupation("boson"));
            }
        }
    }
    Ok(())
}

/// Result of applying a creation-operator string to the vacuum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockState {
    pub index: usize,
    pub amplitude: f64,
}

/// Builds `|K>` by applying the creation operators in ascending mode order
/// (leftmost factor is the smallest mode, applied last under right-to-left
/// composition). Fermionic amplitudes come out exactly +1 in this order;
/// bosons pick up `prod_j sqrt(K_j!)`.
pub fn fock_state(basis: &FockBasis, occ: &[u32]) -> Result<FockState, FockError> {
    if occ.len() != basis.modes {
        return Err(FockError::BadOccupation("length"));
    }
    validate_occupation(occ, basis.statistics, basis.max_occupation)?;
    match basis.statistics {
        Statistics::Fermion => {
            let modes: Vec<usize> = (1..=basis.modes)
                .rev()
                .filter(|&j| occ[j - 1] == 1)
                .collect();
            fermion_state_ordered(basis, &modes)
        }
        Statistics::Boson => {
            let mut index = basis.vacuum();
            let mut amplitude = 1.0;
            for j in (1..=basis.modes).rev() {
                let create = boson_ladder(j, basis.modes, basis.max_occupation, LadderKind::Create)?;
                for _ in 0..occ[j - 1] {
                    let (next, value) = apply_to_basis_vector(&create, index)
                        .ok_or(FockError::BadOccupation("boson"))?;
                    index = next;
                    amplitude *= value;
                }
            }
            Ok(FockState { index, amplitude })
        }
    }
}

/// Applies fermionic creation operators to the vacuum in the listed order
/// (first element applied first). Exposes the sign dependence on operator
/// ordering.
pub fn fermion_state_ordered(basis: &FockBasis, application_order: &[usize]) -> Result<FockState, FockError> {
    let mut index = basis.vacuum();
    let mut sign: i64 = 1;
    for &j in application_order {
        let create = fermion_ladder(j, basis.modes, LadderKind::Create)?;
        let Some((next, value)) = apply_to_basis_vector(&create, index) else {
            return Err(FockError::BadOccupation("fermion"));
        };
        index = next;
        sign *= value;
    }
    Ok(FockState {
        index,
        amplitude: sign as f64,
    })
}

/// Ladder operators map basis vectors to (at most) single basis vectors;
/// returns the image of column `col`, or None if annihilated.
fn apply_to_basis_vector<T: OpScalar>(op: &SparseOp<T>, col: usize) -> Option<(usize, T)> {
    op.entries
        .iter()
        .find(|(&(_, c), _)| c == col)
        .map(|(&(r, _), v)| (r, v.clone()))
}

fn to_complex(op: &FermionOp) -> MajoranaOp {
    SparseOp {
        dim: op.dim,
        entries: op
            .entries
            .iter()
            .map(|(&k, &v)| (k, Complex::new(v, 0)))
            .collect(),
    }
}

fn scale_complex(op: &MajoranaOp, factor: Complex<i64>) -> MajoranaOp {
    SparseOp {
        dim: op.dim,
        entries: op
            .entries
            .iter()
            .map(|(&k, v)| (k, v * factor))
            .collect(),
    }
}

/// The `2d` Majorana operators: `alpha_{2j-1} = a_j + a'_j` and
/// `alpha_{2j} = i (a_j - a'_j)`, entries exact Gaussian integers.
pub fn majorana_ops(modes: usize) -> Result<Vec<MajoranaOp>, FockError> {
    if modes == 0 || modes > 6 {
        return Err(FockError::SizeOutOfRange {
            size: modes,
            cap: 6,
        });
    }
    let mut ops = Vec::with_capacity(2 * modes);
    for j in 1..=modes {
        let a = to_complex(&fermion_ladder(j, modes, LadderKind::Annihilate)?);
        let a_dag = to_complex(&fermion_ladder(j, modes, LadderKind::Create)?);
        ops.push(a.add(&a_dag)?);
        ops.push(scale_complex(&a.sub(&a_dag)?, Complex::new(0, 1)));
    }
    Ok(ops)
}

/// Measures the generalized anticommutation matrix `S` of a candidate
/// fermionic family: `alpha_i alpha_j + alpha_j alpha_i = S_ij I`. Errors
/// when any anticommutator is not proportional to the identity.
pub fn verify_generalized_car(ops: &[MajoranaOp]) -> Result<Vec<Vec<Complex<i64>>>, FockError> {
    let m = ops.len();
    let mut s = vec![vec![Complex::new(0, 0); m]; m];
    for i in 0..m {
        for j in 0..m {
            let anti = ops[i].anticommutator(&ops[j])?;
            let c = anti
                .proportional_to_identity()
                .ok_or(FockError::NotFermionicFamily(i, j))?;
            s[i][j] = c;
        }
    }
    Ok(s)
}

/// Maps a fermionic occupation string back to first quantization: the
/// antisymmetrized elementary tensor over the occupied modes, normalized to
/// unit 2-norm.
pub fn slater_to_first_quantized(occ: &[u32]) -> Result<NBodyTensor<f64>, FockError> {
    validate_occupation(occ, Statistics::Fermion, 1)?;
    let modes: Vec<usize> = (1..=occ.len()).filter(|&j| occ[j - 1] == 1).collect();
    if modes.is_empty() {
        return Err(FockError::BadOccupation("empty"));
    }
    let d = occ.len();
    let product = elementary_tensor::<f64>(d, &modes)?;
    let anti = antisymmetrize(&product)?;
    let norm: f64 = anti
        .amplitudes()
        .iter()
        .map(|a| a * a)
        .sum::<f64>()
        .sqrt();
    let scaled: Vec<f64> = anti.amplitudes().iter().map(|a| a / norm).collect();
    Ok(NBodyTensor::new(d, modes.len(), scaled)?)
}

/// JSON form of a sparse operator:
/// `{"dim": n, "triplets": [[row, col, "value"], ...]}`.
pub fn sparse_to_json<T: OpScalar + std::fmt::Display>(op: &SparseOp<T>) -> serde_json::Value {
    let triplets: Vec<serde_json::Value> = op
        .entries
        .iter()
        .map(|(&(r, c), v)| serde_json::json!([r, c, v.to_string()]))
        .collect();
    serde_json::json!({
        "dim": op.dim,
        "triplets": triplets,
    })
}
