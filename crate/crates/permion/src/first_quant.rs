//! First-quantized N-particle states as N-index tensors.
//!
//! An N-particle state over a d-dimensional single-particle space is a
//! tensor with N indices, each running over `1..=d`. Permutations act on the
//! particle slots; symmetrization and antisymmetrization project onto the
//! bosonic and fermionic subspaces. Amplitudes are exact rationals by
//! default; the scalar is generic so the Slater bridge from second
//! quantization can produce unit-norm floating-point tensors.

use num::{One, Zero};

use crate::caps;
use crate::linalg::Rational;
use crate::perm::{PermError, Permutation};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TensorError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("permutation degree {0} does not match particle count {1}")]
    DegreeMismatch(usize, usize),
    #[error("amplitude array length {got} != d^N = {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("tensor size d^N = {size} exceeds cap {cap}")]
    SizeOutOfRange { size: usize, cap: usize },
    #[error("particle count must be at least 1")]
    NoParticles,
}

/// Scalar requirements for tensor amplitudes: exact rationals and doubles
/// both qualify.
pub trait TensorScalar: Clone + PartialEq {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division by a positive integer (for the `1/N!` projector weight).
    fn div_nat(&self, n: u64) -> Self;
}

impl TensorScalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_nat(&self, n: u64) -> Self {
        self / Rational::from_integer(n.into())
    }
}

impl TensorScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_nat(&self, n: u64) -> Self {
        self / n as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Bosonic,
    Fermionic,
    Neither,
}

/// N-index tensor, row-major in `(x_1, ..., x_N)` with each `x_j` in `1..=d`.
#[derive(Debug, Clone, PartialEq)]
pub struct NBodyTensor<T = Rational> {
    dim: usize,
    particles: usize,
    amplitudes: Vec<T>,
}

impl<T: TensorScalar> NBodyTensor<T> {
    pub fn new(dim: usize, particles: usize, amplitudes: Vec<T>) -> Result<Self, TensorError> {
        if particles == 0 {
            return Err(TensorError::NoParticles);
        }
        let expected = dim
            .checked_pow(particles as u32)
            .filter(|&s| s <= caps::MAX_TENSOR_SIZE)
            .ok_or(TensorError::SizeOutOfRange {
                size: usize::MAX,
                cap: caps::MAX_TENSOR_SIZE,
            })?;
        if amplitudes.len() != expected {
            return Err(TensorError::BadLength {
                got: amplitudes.len(),
                expected,
            });
        }
        Ok(NBodyTensor {
            dim,
            particles,
            amplitudes,
        })
    }

    pub fn zeros(dim: usize, particles: usize) -> Result<Self, TensorError> {
        let size = dim.pow(particles as u32);
        NBodyTensor::new(dim, particles, vec![T::zero(); size])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn amplitudes(&self) -> &[T] {
        &self.amplitudes
    }

    /// Amplitude at a 1-based multi-index `(x_1, ..., x_N)`.
    pub fn amplitude(&self, index: &[usize]) -> &T {
        &self.amplitudes[self.flatten(index)]
    }

    pub fn amplitude_mut(&mut self, index: &[usize]) -> &mut T {
        let flat = self.flatten(index);
        &mut self.amplitudes[flat]
    }

    fn flatten(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.particles);
        index.iter().fold(0, |acc, &x| acc * self.dim + (x - 1))
    }

    fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut index = vec![0usize; self.particles];
        for slot in (0..self.particles).rev() {
            index[slot] = flat % self.dim + 1;
            flat /= self.dim;
        }
        index
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.iter().all(|a| *a == T::zero())
    }
}

/// Slot action: the output amplitude at `(x_1, ..., x_N)` is the input
/// amplitude at `(x_{sigma(1)}, ..., x_{sigma(N)})`.
pub fn permute_particles<T: TensorScalar>(
    tensor: &NBodyTensor<T>,
    sigma: &Permutation,
) -> Result<NBodyTensor<T>, TensorError> {
    if sigma.degree() != tensor.particles {
        return Err(TensorError::DegreeMismatch(
            sigma.degree(),
            tensor.particles,
        ));
    }
    let mut out = tensor.clone();
    for flat in 0..tensor.amplitudes.len() {
        let index = tensor.unflatten(flat);
        let permuted: Vec<usize> = (1..=tensor.particles)
            .map(|slot| index[sigma.apply(slot) - 1])
            .collect();
        out.amplitudes[flat] = tensor.amplitude(&permuted).clone();
    }
    Ok(out)
}

fn projector<T: TensorScalar>(
    tensor: &NBodyTensor<T>,
    signed: bool,
) -> Result<NBodyTensor<T>, TensorError> {
    let group = crate::perm::enumerate_group(tensor.particles)?;
    let factorial = group.len() as u64;
    let mut sum = NBodyTensor::<T>::zeros(tensor.dim, tensor.particles)?;
    for sigma in &group {
        let permuted = permute_particles(tensor, sigma)?;
        let negate = signed && sigma.sign() < 0;
        for (acc, term) in sum.amplitudes.iter_mut().zip(&permuted.amplitudes) {
            let term = if negate { term.neg() } else { term.clone() };
            *acc = acc.add(&term);
        }
    }
    for a in sum.amplitudes.iter_mut() {
        *a = a.div_nat(factorial);
    }
    Ok(sum)
}

/// `(1/N!) sum_sigma P_sigma`: projection onto the bosonic subspace.
pub fn symmetrize<T: TensorScalar>(tensor: &NBodyTensor<T>) -> Result<NBodyTensor<T>, TensorError> {
    projector(tensor, false)
}

/// `(1/N!) sum_sigma sgn(sigma) P_sigma`: projection onto the fermionic
/// subspace.
pub fn antisymmetrize<T: TensorScalar>(
    tensor: &NBodyTensor<T>,
) -> Result<NBodyTensor<T>, TensorError> {
    projector(tensor, true)
}

/// Checks the transformation law under the adjacent transpositions
/// `(k, k+1)`, which generate `S_N`, so the law extends to all of it.
pub fn classify_symmetry<T: TensorScalar>(
    tensor: &NBodyTensor<T>,
) -> Result<Symmetry, TensorError> {
    let n = tensor.particles;
    if n == 1 {
        return Ok(Symmetry::Bosonic);
    }
    let mut bosonic = true;
    let mut fermionic = true;
    for k in 1..n {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        let swap = Permutation::from_images(images).expect("adjacent transposition");
        let permuted = permute_particles(tensor, &swap)?;
        if permuted != *tensor {
            bosonic = false;
        }
        let negated: Vec<T> = permuted.amplitudes.iter().map(|a| a.neg()).collect();
        if negated != tensor.amplitudes {
            fermionic = false;
        }
        if !bosonic && !fermionic {
            return Ok(Symmetry::Neither);
        }
    }
    Ok(if bosonic {
        Symmetry::Bosonic
    } else if fermionic {
        Symmetry::Fermionic
    } else {
        Symmetry::Neither
    })
}

/// Elementary product tensor `e_{k_1} (x) ... (x) e_{k_N}` (1-based modes).
pub fn elementary_tensor<T: TensorScalar + One>(
    dim: usize,
    modes: &[usize],
) -> Result<NBodyTensor<T>, TensorError> {
    let mut tensor = NBodyTensor::<T>::zeros(dim, modes.len())?;
    *tensor.amplitude_mut(modes) = T::one();
    Ok(tensor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};
    use crate::perm::parse_cycles;

    fn matrix_tensor(d: usize, entries: &[&[i64]]) -> NBodyTensor {
        let amps = entries
            .iter()
            .flat_map(|row| row.iter().map(|&v| rat(v)))
            .collect();
        NBodyTensor::new(d, 2, amps).unwrap()
    }

    #[test]
    fn swap_is_transpose() {
        let a = matrix_tensor(2, &[&[1, 2], &[3, 4]]);
        let swap = parse_cycles("(12)", 2).unwrap();
        let swapped = permute_particles(&a, &swap).unwrap();
        assert_eq!(swapped, matrix_tensor(2, &[&[1, 3], &[2, 4]]));
        let e = Permutation::identity(2);
        assert_eq!(permute_particles(&a, &e).unwrap(), a);
        assert!(matches!(
            permute_particles(&a, &parse_cycles("(123)", 3).unwrap()),
            Err(TensorError::DegreeMismatch(3, 2))
        ));
    }

    #[test]
    fn permutation_composition_law() {
        // permute(permute(psi, tau), sigma) = permute(psi, sigma*tau)
        let amps: Vec<Rational> = (0..8).map(rat).collect();
        let psi = NBodyTensor::new(2, 3, amps).unwrap();
        for sigma in crate::perm::enumerate_group(3).unwrap() {
            for tau in crate::perm::enumerate_group(3).unwrap() {
                let two_step =
                    permute_particles(&permute_particles(&psi, &tau).unwrap(), &sigma).unwrap();
                let one_step =
                    permute_particles(&psi, &sigma.compose(&tau).unwrap()).unwrap();
                assert_eq!(two_step, one_step);
            }
        }
    }

    #[test]
    fn symmetrize_matches_matrix_formula() {
        let a = matrix_tensor(2, &[&[1, 2], &[3, 4]]);
        let sym = symmetrize(&a).unwrap();
        // (A + A^T)/2
        assert_eq!(*sym.amplitude(&[1, 2]), ratio(5, 2));
        assert_eq!(*sym.amplitude(&[2, 1]), ratio(5, 2));
        assert_eq!(*sym.amplitude(&[1, 1]), rat(1));
        assert_eq!(symmetrize(&sym).unwrap(), sym);
        // antisymmetric input is annihilated
        let anti = matrix_tensor(2, &[&[0, 1], &[-1, 0]]);
        assert!(symmetrize(&anti).unwrap().is_zero());
    }

    #[test]
    fn antisymmetrize_matches_matrix_formula() {
        let a = matrix_tensor(2, &[&[1, 2], &[3, 4]]);
        let asym = antisymmetrize(&a).unwrap();
        assert_eq!(*asym.amplitude(&[1, 2]), ratio(-1, 2));
        assert_eq!(*asym.amplitude(&[2, 1]), ratio(1, 2));
        assert_eq!(*asym.amplitude(&[1, 1]), rat(0));
        // A = A_sym + A_asym for N = 2
        let sym = symmetrize(&a).unwrap();
        for (flat, amp) in a.amplitudes().iter().enumerate() {
            assert_eq!(
                *amp,
                sym.amplitudes()[flat].clone() + asym.amplitudes()[flat].clone()
            );
        }
        // diagonal amplitudes vanish
        let b = matrix_tensor(3, &[&[5, 1, 2], &[0, 7, 3], &[9, 4, 6]]);
        let basym = antisymmetrize(&b).unwrap();
        for x in 1..=3 {
            assert_eq!(*basym.amplitude(&[x, x]), rat(0));
        }
    }

    #[test]
    fn classify_cases() {
        assert_eq!(
            classify_symmetry(&matrix_tensor(2, &[&[1, 2], &[2, 5]])).unwrap(),
            Symmetry::Bosonic
        );
        assert_eq!(
            classify_symmetry(&matrix_tensor(2, &[&[0, 3], &[-3, 0]])).unwrap(),
            Symmetry::Fermionic
        );
        assert_eq!(
            classify_symmetry(&matrix_tensor(3, &[&[1, 2, 0], &[5, 1, 7], &[0, 0, 2]])).unwrap(),
            Symmetry::Neither
        );
    }

    #[test]
    fn antisymmetric_rank_counts_fermion_states() {
        // antisymmetric subspace of (d=4, N=2) has dimension C(4,2) = 6:
        // antisymmetrize every basis tensor and count independent images
        use crate::linalg::Matrix;
        let d = 4;
        let mut columns: Vec<Vec<Rational>> = Vec::new();
        for i in 1..=d {
            for j in 1..=d {
                let basis = elementary_tensor::<Rational>(d, &[i, j]).unwrap();
                columns.push(antisymmetrize(&basis).unwrap().amplitudes().to_vec());
            }
        }
        let m = Matrix::from_rows(columns);
        assert_eq!(m.rank(), 6);
    }
}
