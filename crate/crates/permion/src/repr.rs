//! Matrix representations of `S_n` over exact rationals.
//!
//! Builds the five named representations (trivial, alternating, natural,
//! regular, standard), verifies the homomorphism property exhaustively at
//! desk scale, computes characters, forms symmetrizer/antisymmetrizer images,
//! and runs the floating-point Schur-Weyl commutation check. Everything but
//! the Schur-Weyl check is exact.

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::caps;
use crate::linalg::{rat, rational_to_string, LinAlgError, Matrix, Rational};
use crate::perm::{
    enumerate_group, format_cycles, CycleType, PermError, Permutation,
};

#[derive(Debug, thiserror::Error)]
pub enum ReprError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("degree {degree} exceeds cap {cap} for this construction")]
    DegreeOutOfRange { degree: usize, cap: usize },
    #[error("ordering is not a complete enumeration of S_{0}")]
    IncompleteOrdering(usize),
    #[error("character not constant on class {class}: {a} vs {b}")]
    CharacterInconsistent {
        class: CycleType,
        a: String,
        b: String,
    },
    #[error("similarity transform did not block-diagonalize element {0}")]
    NotBlockDiagonal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepLabel {
    Trivial,
    Alternating,
    Natural,
    Regular,
    Standard,
    Custom,
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepLabel::Trivial => "trivial",
            RepLabel::Alternating => "alternating",
            RepLabel::Natural => "natural",
            RepLabel::Regular => "regular",
            RepLabel::Standard => "standard",
            RepLabel::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// A matrix representation of `S_n`: one `dim x dim` rational matrix per
/// group element, stored eagerly. Iteration order over `matrices` is the
/// lexicographic one-line order of the elements.
#[derive(Debug, Clone)]
pub struct Representation {
    pub label: RepLabel,
    pub group_degree: usize,
    pub dim: usize,
    pub matrices: BTreeMap<Permutation, Matrix>,
}

impl Representation {
    pub fn matrix(&self, p: &Permutation) -> Option<&Matrix> {
        self.matrices.get(p)
    }

    pub fn order(&self) -> usize {
        self.matrices.len()
    }
}

/// Trivial (`D^g = [1]`) or alternating (`D^g = [sgn(g)]`) representation.
pub fn one_dim_rep(n: usize, alternating: bool) -> Result<Representation, ReprError> {
    let matrices = enumerate_group(n)?
        .into_iter()
        .map(|p| {
            let value = if alternating { rat(p.sign()) } else { rat(1) };
            (p, Matrix::from_rows(vec![vec![value]]))
        })
        .collect();
    Ok(Representation {
        label: if alternating {
            RepLabel::Alternating
        } else {
            RepLabel::Trivial
        },
        group_degree: n,
        dim: 1,
        matrices,
    })
}

/// Permutation matrix of a single element: entry 1 at `(sigma(k), k)`.
pub fn permutation_matrix(p: &Permutation) -> Matrix {
    let n = p.degree();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m[(p.apply(k) - 1, k - 1)] = Rational::one();
    }
    m
}

/// The natural representation: `S_n` acting on basis vectors of an
/// n-dimensional space by permutation matrices.
pub fn natural_rep(n: usize) -> Result<Representation, ReprError> {
    let matrices = enumerate_group(n)?
        .into_iter()
        .map(|p| {
            let m = permutation_matrix(&p);
            (p, m)
        })
        .collect();
    Ok(Representation {
        label: RepLabel::Natural,
        group_degree: n,
        dim: n,
        matrices,
    })
}

/// The regular representation under an explicit element ordering:
/// `D^g(reg)` sends the basis index of `g'` to the index of `g*g'`.
pub fn regular_rep(n: usize, ordering: &[Permutation]) -> Result<Representation, ReprError> {
    let cap = caps::effective(caps::MAX_REGULAR_N);
    if n == 0 || n > cap {
        return Err(ReprError::DegreeOutOfRange { degree: n, cap });
    }
    let group = enumerate_group(n)?;
    let h = group.len();
    let index: BTreeMap<&Permutation, usize> =
        ordering.iter().enumerate().map(|(i, p)| (p, i)).collect();
    if index.len() != h || group.iter().any(|p| !index.contains_key(p)) {
        return Err(ReprError::IncompleteOrdering(n));
    }
    let mut matrices = BTreeMap::new();
    for g in &group {
        let mut m = Matrix::zeros(h, h);
        for (col, gp) in ordering.iter().enumerate() {
            let product = g.compose(gp)?;
            m[(index[&product], col)] = Rational::one();
        }
        matrices.insert(g.clone(), m);
    }
    Ok(Representation {
        label: RepLabel::Regular,
        group_degree: n,
        dim: h,
        matrices,
    })
}

/// The element ordering the worked `S_3` regular-representation example uses:
/// `e, (12), (13)(12), (13), (12)(13), (23)`.
pub fn s3_example_ordering() -> Vec<Permutation> {
    ["e", "(12)", "(123)", "(13)", "(132)", "(23)"]
        .iter()
        .map(|s| crate::perm::parse_cycles(s, 3).expect("fixed notation"))
        .collect()
}

/// Outcome of the exhaustive homomorphism check.
#[derive(Debug, Clone)]
pub struct HomomorphismReport {
    pub ok: bool,
    pub pairs_checked: usize,
    pub first_failure: Option<(Permutation, Permutation)>,
}

/// Checks `D^a * D^b = D^(a*b)` over all pairs, exactly.
pub fn verify_homomorphism(r: &Representation) -> Result<HomomorphismReport, ReprError> {
    let mut pairs_checked = 0;
    for (a, da) in &r.matrices {
        for (b, db) in &r.matrices {
            pairs_checked += 1;
            let product = a.compose(b)?;
            let expected = r
                .matrices
                .get(&product)
                .ok_or(ReprError::IncompleteOrdering(r.group_degree))?;
            if &da.mul(db)? != expected {
                return Ok(HomomorphismReport {
                    ok: false,
                    pairs_checked,
                    first_failure: Some((a.clone(), b.clone())),
                });
            }
        }
    }
    Ok(HomomorphismReport {
        ok: true,
        pairs_checked,
        first_failure: None,
    })
}

/// Character of a representation: the trace, verified to be constant on each
/// conjugacy class rather than assumed.
pub fn character(r: &Representation) -> Result<BTreeMap<CycleType, Rational>, ReprError> {
    let mut chi: BTreeMap<CycleType, Rational> = BTreeMap::new();
    for (p, m) in &r.matrices {
        let value = m.trace()?;
        let class = p.cycle_type();
        match chi.get(&class) {
            None => {
                chi.insert(class, value);
            }
            Some(existing) if *existing == value => {}
            Some(existing) => {
                return Err(ReprError::CharacterInconsistent {
                    class,
                    a: rational_to_string(existing),
                    b: rational_to_string(&value),
                });
            }
        }
    }
    Ok(chi)
}

/// `S = sum_g D^g`; satisfies `S^2 = h S`.
pub fn symmetrizer_image(r: &Representation) -> Result<Matrix, ReprError> {
    weighted_sum(r, |_| rat(1))
}

/// `A = sum_g sgn(g) D^g`; satisfies `A^2 = h A`.
pub fn antisymmetrizer_image(r: &Representation) -> Result<Matrix, ReprError> {
    weighted_sum(r, |p| rat(p.sign()))
}

fn weighted_sum(
    r: &Representation,
    weight: impl Fn(&Permutation) -> Rational,
) -> Result<Matrix, ReprError> {
    let mut sum = Matrix::zeros(r.dim, r.dim);
    for (p, m) in &r.matrices {
        sum = sum.add(&m.scale(&weight(p)))?;
    }
    Ok(sum)
}

/// Change-of-basis matrix whose first column is the uniform vector and whose
/// remaining columns are the difference vectors `e_k - e_{k+1}`.
pub fn standard_basis_matrix(n: usize) -> Matrix {
    let mut b = Matrix::zeros(n, n);
    for i in 0..n {
        b[(i, 0)] = Rational::one();
    }
    for k in 1..n {
        b[(k - 1, k)] = Rational::one();
        b[(k, k)] = -Rational::one();
    }
    b
}

/// The standard representation: the (n-1)-dimensional block left after
/// splitting the uniform vector off the natural representation.
pub fn standard_rep(n: usize) -> Result<Representation, ReprError> {
    let cap = caps::effective(caps::MAX_TABLE_N);
    if n < 2 || n > cap {
        return Err(ReprError::DegreeOutOfRange { degree: n, cap });
    }
    let nat = natural_rep(n)?;
    let b = standard_basis_matrix(n);
    let b_inv = b.inverse()?;
    let mut matrices = BTreeMap::new();
    for (p, m) in &nat.matrices {
        let conj = b_inv.mul(m)?.mul(&b)?;
        // expect 1 (+) (n-1)x(n-1) block structure
        if conj[(0, 0)] != Rational::one()
            || (1..n).any(|j| !conj[(0, j)].is_zero() || !conj[(j, 0)].is_zero())
        {
            return Err(ReprError::NotBlockDiagonal(format_cycles(p)));
        }
        matrices.insert(p.clone(), conj.block(1, 1, n - 1, n - 1));
    }
    Ok(Representation {
        label: RepLabel::Standard,
        group_degree: n,
        dim: n - 1,
        matrices,
    })
}

/// Dimension bookkeeping for the decomposition of the regular representation.
#[derive(Debug, Clone)]
pub struct RegularDecompositionReport {
    pub group_order: usize,
    pub sum_of_squared_dims: usize,
    pub ok: bool,
}

/// Checks `h = sum_lambda d(lambda)^2`, with `h = n!` the character of the
/// regular representation at the identity.
pub fn verify_regular_decomposition(n: usize, irrep_dims: &[usize]) -> RegularDecompositionReport {
    let group_order: usize = (1..=n).product();
    let sum_of_squared_dims = irrep_dims.iter().map(|d| d * d).sum();
    RegularDecompositionReport {
        group_order,
        sum_of_squared_dims,
        ok: group_order == sum_of_squared_dims,
    }
}

/// Result of the Schur-Weyl commutation check.
#[derive(Debug, Clone)]
pub struct SchurWeylReport {
    pub trials: usize,
    pub max_norm: f64,
    pub tol: f64,
    pub ok: bool,
}

/// Draws random unitaries `u`, forms `u^(x)n`, and measures the largest
/// entry of `P^sigma u^(x)n - u^(x)n P^sigma` over every permutation.
/// Identical local unitaries commute with all slot permutations, so the
/// norm should vanish to rounding error.
pub fn schur_weyl_commutation_check(
    n: usize,
    d: usize,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Result<SchurWeylReport, ReprError> {
    if n > 3 || d > 3 {
        return Err(ReprError::DegreeOutOfRange {
            degree: n.max(d),
            cap: 3,
        });
    }
    let group = enumerate_group(n)?;
    let dim = d.pow(n as u32);
    let perm_mats: Vec<Vec<usize>> = group.iter().map(|p| slot_permutation(p, d, n)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_norm: f64 = 0.0;
    for _ in 0..trials {
        let u = random_unitary(d, &mut rng);
        let big_u = tensor_power(&u, d, n);
        for targets in &perm_mats {
            // row permutation: (P U)[i][j] = U[p^-1(i)][j]; (U P)[i][j] = U[i][p(j)]
            for i in 0..dim {
                for j in 0..dim {
                    let lhs = big_u[targets_inverse_index(targets, i)][j];
                    let rhs = big_u[i][targets[j]];
                    let diff = (lhs - rhs).norm();
                    if diff > max_norm {
                        max_norm = diff;
                    }
                }
            }
        }
    }
    Ok(SchurWeylReport {
        trials,
        max_norm,
        tol,
        ok: max_norm < tol,
    })
}

/// Index map of the slot-permutation operator: basis vector `x` maps to the
/// basis vector `y` with `y_{sigma(k)} = x_k`.
fn slot_permutation(p: &Permutation, d: usize, n: usize) -> Vec<usize> {
    let dim = d.pow(n as u32);
    (0..dim)
        .map(|x| {
            let digits = unpack(x, d, n);
            let mut out = vec![0usize; n];
            for k in 0..n {
                out[p.apply(k + 1) - 1] = digits[k];
            }
            pack(&out, d)
        })
        .collect()
}

fn targets_inverse_index(targets: &[usize], i: usize) -> usize {
    // targets is a permutation of indices; find preimage of i
    targets.iter().position(|&t| t == i).expect("bijection")
}

fn unpack(mut x: usize, d: usize, n: usize) -> Vec<usize> {
    let mut digits = vec![0usize; n];
    for k in (0..n).rev() {
        digits[k] = x % d;
        x /= d;
    }
    digits
}

fn pack(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}

fn random_unitary(d: usize, rng: &mut impl Rng) -> Vec<Vec<Complex64>> {
    // Gaussian complex matrix orthonormalized column by column
    let gauss = |rng: &mut dyn FnMut() -> f64| {
        // Box-Muller
        let u1: f64 = rng().max(f64::MIN_POSITIVE);
        let u2: f64 = rng();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    };
    let mut sample = || {
        let mut draw = || rng.gen::<f64>();
        Complex64::new(gauss(&mut draw), gauss(&mut draw))
    };
    let mut cols: Vec<Vec<Complex64>> = (0..d).map(|_| (0..d).map(|_| sample()).collect()).collect();
    for j in 0..d {
        for i in 0..j {
            let (head, tail) = cols.split_at_mut(j);
            let col_i = &head[i];
            let col_j = &mut tail[0];
            let proj: Complex64 = col_i
                .iter()
                .zip(col_j.iter())
                .map(|(a, b)| a.conj() * b)
                .sum();
            for (zj, zi) in col_j.iter_mut().zip(col_i) {
                *zj -= proj * zi;
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    // transpose columns into a row-major matrix
    (0..d)
        .map(|i| (0..d).map(|j| cols[j][i]).collect())
        .collect()
}

fn tensor_power(u: &[Vec<Complex64>], d: usize, n: usize) -> Vec<Vec<Complex64>> {
    let dim = d.pow(n as u32);
    (0..dim)
        .map(|i| {
            let idig = unpack(i, d, n);
            (0..dim)
                .map(|j| {
                    let jdig = unpack(j, d, n);
                    (0..n).map(|k| u[idig[k]][jdig[k]]).product()
                })
                .collect()
        })
        .collect()
}

/// JSON form: `{"label":..., "n":..., "dim":..., "matrices": {"(12)": ...}}`
/// keyed by canonical cycle notation.
pub fn representation_to_json(r: &Representation) -> serde_json::Value {
    let matrices: serde_json::Map<String, serde_json::Value> = r
        .matrices
        .iter()
        .map(|(p, m)| (format_cycles(p), crate::linalg::matrix_to_json(m)))
        .collect();
    serde_json::json!({
        "label": r.label.to_string(),
        "n": r.group_degree,
        "dim": r.dim,
        "matrices": matrices,
    })
}
