//! Exact checks of Neel eigenstates on small lattices.
//!
//! States live in the site-ordered tensor basis: site 0 is the slowest-varying
//! factor and each local factor uses the descending `m` order of
//! [`crate::spin`]. The Hamiltonian is applied matrix-free, one exchange term
//! per directed bond followed by one field term per site.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::factor::{energy_per_site, ModelContext, NeelAngles, Params};
use crate::lattice::{parity, Lattice};
use crate::spin::{coherent_state, spin_matrices, Spin, SpinMatrices};

/// Default cap on the Hilbert space dimension.
pub const DEFAULT_MAX_DIM: usize = 1 << 20;
/// Cap for dense diagonalization in [`spectrum_probe`].
pub const SPECTRUM_MAX_DIM: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zeros(dim: usize) -> Self {
        StateVector { amps: vec![Complex64::new(0.0, 0.0); dim] }
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = StateVector::zeros(dim);
        v.amps[index] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// `self + factor * other`.
    pub fn axpy(&self, factor: Complex64, other: &StateVector) -> StateVector {
        let amps = self.amps.iter().zip(&other.amps).map(|(a, b)| a + factor * b).collect();
        StateVector { amps }
    }

    pub fn scaled(&self, factor: Complex64) -> StateVector {
        StateVector { amps: self.amps.iter().map(|a| a * factor).collect() }
    }
}

/// Kronecker product of two vectors, `left` slowest.
fn kron_vec(left: &[Complex64], right: &[Complex64]) -> Vec<Complex64> {
    left.iter().flat_map(|a| right.iter().map(move |b| a * b)).collect()
}

/// Nonzero entries of a row-major operator, grouped by row.
#[derive(Debug, Clone)]
struct SparseRows {
    rows: Vec<Vec<(usize, Complex64)>>,
}

impl SparseRows {
    fn from_dense(m: &DMatrix<Complex64>) -> Self {
        let rows = (0..m.nrows())
            .map(|r| (0..m.ncols()).filter(|&c| m[(r, c)].norm() > 0.0).map(|c| (c, m[(r, c)])).collect())
            .collect();
        SparseRows { rows }
    }
}

fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.kronecker(b)
}

/// `Jx SxSx + Jy SySy + Jz SzSz` on two sites.
fn exchange_operator(p: &Params, m: &SpinMatrices) -> DMatrix<Complex64> {
    p.exchange()
        .iter()
        .zip(m.components())
        .map(|(&j, s)| kron(s, s) * Complex64::from(j))
        .fold(DMatrix::zeros(m.dim() * m.dim(), m.dim() * m.dim()), |acc, t| acc + t)
}

/// `-h . S` on one site.
fn field_operator(p: &Params, m: &SpinMatrices) -> DMatrix<Complex64> {
    -m.along(p.field())
}

/// Tensor-product space of a lattice of spins.
#[derive(Debug, Clone)]
pub struct HilbertSpace {
    lattice: Lattice,
    spin: Spin,
    dim: usize,
    strides: Vec<usize>,
    bonds: Vec<(usize, usize)>,
}

impl HilbertSpace {
    pub fn new(lattice: &Lattice, spin: Spin) -> Result<Self> {
        HilbertSpace::with_budget(lattice, spin, DEFAULT_MAX_DIM)
    }

    pub fn with_budget(lattice: &Lattice, spin: Spin, max_dim: usize) -> Result<Self> {
        let local = spin.multiplicity();
        let n = lattice.num_sites();
        let dim = u32::try_from(n)
            .ok()
            .and_then(|n| local.checked_pow(n))
            .filter(|&dim| dim <= max_dim)
            .ok_or(Error::BudgetExceeded { budget: max_dim })?;
        let strides = (0..n).map(|site| local.pow((n - 1 - site) as u32)).collect();
        Ok(HilbertSpace { lattice: lattice.clone(), spin, dim, strides, bonds: lattice.bond_pairs() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn context(&self) -> ModelContext {
        ModelContext { d: self.lattice.dim(), spin: self.spin }
    }

    /// Product of coherent states: `dir1` on even-parity sites, `dir2` on odd.
    pub fn neel_state(&self, angles: &NeelAngles) -> StateVector {
        let up = coherent_state(self.spin, angles.dir1);
        let down = coherent_state(self.spin, angles.dir2);
        let amps = self.lattice.sites().iter().fold(vec![Complex64::new(1.0, 0.0)], |acc, site| {
            kron_vec(&acc, if parity(site) == 0 { &up } else { &down })
        });
        StateVector { amps }
    }

    /// `H v` for `H = sum_bonds (Jx SxSx + Jy SySy + Jz SzSz) - sum_sites h . S`.
    pub fn apply_hamiltonian(&self, p: &Params, v: &StateVector) -> Result<StateVector> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        let m = spin_matrices(self.spin);
        let local = self.spin.multiplicity();
        let exchange = SparseRows::from_dense(&exchange_operator(p, &m));
        let field = SparseRows::from_dense(&field_operator(p, &m));
        let mut out = StateVector::zeros(self.dim);

        for &(i, j) in &self.bonds {
            let (si, sj) = (self.strides[i], self.strides[j]);
            for (idx, slot) in out.amps.iter_mut().enumerate() {
                let (a, b) = ((idx / si) % local, (idx / sj) % local);
                let base = idx - a * si - b * sj;
                for &(col, value) in &exchange.rows[a * local + b] {
                    let (a2, b2) = (col / local, col % local);
                    *slot += value * v.amps[base + a2 * si + b2 * sj];
                }
            }
        }
        for &si in &self.strides {
            for (idx, slot) in out.amps.iter_mut().enumerate() {
                let a = (idx / si) % local;
                let base = idx - a * si;
                for &(col, value) in &field.rows[a] {
                    *slot += value * v.amps[base + col * si];
                }
            }
        }
        Ok(out)
    }

    /// Total Neel energy `N * epsilon`.
    pub fn neel_energy(&self, p: &Params) -> f64 {
        self.lattice.num_sites() as f64 * energy_per_site(p, &self.context())
    }

    pub fn eigen_check(&self, p: &Params, angles: &NeelAngles) -> Result<EigenCheck> {
        let state = self.neel_state(angles);
        let applied = self.apply_hamiltonian(p, &state)?;
        let neel_energy = self.neel_energy(p);
        let residual = applied.axpy(Complex64::from(-neel_energy), &state).norm();
        let norm = state.norm();
        Ok(EigenCheck {
            residual,
            applied_norm: applied.norm(),
            expectation: state.inner(&applied).re / (norm * norm),
            neel_energy,
            state_norm: norm,
        })
    }

    /// Dense matrix of the Hamiltonian, assembled column by column.
    pub fn dense_hamiltonian(&self, p: &Params) -> Result<DMatrix<Complex64>> {
        let mut h = DMatrix::zeros(self.dim, self.dim);
        for col in 0..self.dim {
            let image = self.apply_hamiltonian(p, &StateVector::basis(self.dim, col))?;
            for (row, value) in image.amps.into_iter().enumerate() {
                h[(row, col)] = value;
            }
        }
        Ok(h)
    }
}

/// Diagnostics of one Neel state against the lattice Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenCheck {
    /// `|H|N> - N epsilon |N>|`.
    pub residual: f64,
    /// `|H|N>|`.
    pub applied_norm: f64,
    /// `<N|H|N> / <N|N>`.
    pub expectation: f64,
    /// `N epsilon`.
    pub neel_energy: f64,
    pub state_norm: f64,
}

pub fn build_neel_state(lattice: &Lattice, angles: &NeelAngles, spin: Spin) -> Result<StateVector> {
    Ok(HilbertSpace::new(lattice, spin)?.neel_state(angles))
}

pub fn apply_hamiltonian(p: &Params, lattice: &Lattice, spin: Spin, v: &StateVector) -> Result<StateVector> {
    HilbertSpace::new(lattice, spin)?.apply_hamiltonian(p, v)
}

/// `|H|N> - N epsilon |N>|` with `epsilon = -d s^2 (Jx + Jy + Jz)`.
pub fn eigen_residual(p: &Params, lattice: &Lattice, spin: Spin, angles: &NeelAngles) -> Result<f64> {
    Ok(HilbertSpace::new(lattice, spin)?.eigen_check(p, angles)?.residual)
}

/// Residual of the two-site eigen relation `H_12 |psi1 psi2> = (epsilon / d) |psi1 psi2>`,
/// where `H_12` carries the field with weight `1/(2d)` on each spin.
pub fn bond_residual(p: &Params, ctx: &ModelContext, angles: &NeelAngles) -> f64 {
    let m = spin_matrices(ctx.spin);
    let local = ctx.spin.multiplicity();
    let identity = DMatrix::<Complex64>::identity(local, local);
    let field = field_operator(p, &m);
    let weight = Complex64::from(1.0 / (2.0 * ctx.d as f64));
    let h12 = exchange_operator(p, &m) + (kron(&field, &identity) + kron(&identity, &field)) * weight;

    let psi = kron_vec(&coherent_state(ctx.spin, angles.dir1), &coherent_state(ctx.spin, angles.dir2));
    let target = energy_per_site(p, ctx) / ctx.d as f64;
    (0..psi.len())
        .map(|r| {
            let row: Complex64 = (0..psi.len()).map(|c| h12[(r, c)] * psi[c]).sum();
            (row - psi[r] * target).norm_sqr()
        })
        .sum::<f64>()
        .sqrt()
}

/// All eigenvalues of the lattice Hamiltonian, ascending, by dense
/// diagonalization. Limited to dimension [`SPECTRUM_MAX_DIM`].
pub fn spectrum_probe(p: &Params, lattice: &Lattice, spin: Spin) -> Result<Vec<f64>> {
    let space = HilbertSpace::with_budget(lattice, spin, SPECTRUM_MAX_DIM)?;
    let h = space.dense_hamiltonian(p)?;
    let mut values: Vec<f64> = SymmetricEigen::new(h).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::Direction;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn neel_state_basis_ordering() {
        let chain = Lattice::chain(2).unwrap();
        let up = NeelAngles::new(Direction::UP, Direction::UP);
        assert_eq!(build_neel_state(&chain, &up, Spin::HALF).unwrap().amps, vec![c(1.0), c(0.0), c(0.0), c(0.0)]);
        let up_down = NeelAngles::new(Direction::UP, Direction::DOWN);
        let v = build_neel_state(&chain, &up_down, Spin::HALF).unwrap();
        let expected = [0.0, 1.0, 0.0, 0.0];
        for (got, want) in v.amps.iter().zip(expected) {
            assert!((got - c(want)).norm() < 1e-15);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let lat = Lattice::new(&[4, 4, 2]).unwrap();
        assert_eq!(HilbertSpace::new(&lat, Spin::ONE).unwrap_err(), Error::BudgetExceeded { budget: DEFAULT_MAX_DIM });
        let small = Lattice::chain(4).unwrap();
        assert!(HilbertSpace::with_budget(&small, Spin::HALF, 15).is_err());
        assert_eq!(HilbertSpace::with_budget(&small, Spin::HALF, 16).unwrap().dim(), 16);
        let big = Lattice::new(&[4, 4]).unwrap();
        assert!(spectrum_probe(&Params::new([1.0; 3], [0.0; 3]), &big, Spin::ONE).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let lat = Lattice::chain(4).unwrap();
        let p = Params::new([1.0; 3], [0.0; 3]);
        let err = apply_hamiltonian(&p, &lat, Spin::HALF, &StateVector::zeros(8)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 16, got: 8 });
    }

    #[test]
    fn saturated_chain_eigenvalue() {
        let lat = Lattice::chain(4).unwrap();
        let p = Params::new([1.0, 1.0, 1.0], [0.0, 0.0, 2.0]);
        let up = NeelAngles::new(Direction::UP, Direction::UP);
        let v = build_neel_state(&lat, &up, Spin::HALF).unwrap();
        let hv = apply_hamiltonian(&p, &lat, Spin::HALF, &v).unwrap();
        assert!(hv.axpy(c(3.0), &v).norm() < 1e-15);
        assert!(eigen_residual(&p, &lat, Spin::HALF, &up).unwrap() <= 1e-12);
        let ctx = ModelContext::new(1, Spin::HALF).unwrap();
        assert!(bond_residual(&p, &ctx, &up) <= 1e-14);
    }

    #[test]
    fn spectrum_of_ising_dimer() {
        let lat = Lattice::chain(2).unwrap();
        let p = Params::new([0.0, 0.0, 1.0], [0.0; 3]);
        let spectrum = spectrum_probe(&p, &lat, Spin::HALF).unwrap();
        for (got, want) in spectrum.iter().zip([-0.5, -0.5, 0.5, 0.5]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
    }

    #[test]
    fn off_surface_state_is_not_an_eigenstate() {
        let lat = Lattice::chain(4).unwrap();
        let p = Params::new([1.0, 0.5, 0.0], [0.0, 0.0, 0.5f64.sqrt()]);
        let ctx = ModelContext::new(1, Spin::HALF).unwrap();
        let angles = crate::factor::solve_angles(&p, &ctx).unwrap();
        assert!(eigen_residual(&p, &lat, Spin::HALF, &angles).unwrap() <= 1e-10);
        let perturbed = p.with_field_scaled(1.01);
        assert!(eigen_residual(&perturbed, &lat, Spin::HALF, &angles).unwrap() > 1e-3);
        let random = NeelAngles::from_radians(0.4, 1.0, 2.2, -0.3).unwrap();
        assert!(bond_residual(&p, &ctx, &random) > 1e-3);
        assert!(eigen_residual(&p, &lat, Spin::HALF, &random).unwrap() > 1e-3);
    }

    #[test]
    fn pole_root_is_an_eigenstate() {
        let ctx = ModelContext::new(1, Spin::HALF).unwrap();
        let p = Params::new([1.25, 0.75, 0.25], [1.0, 0.0, -1.0]);
        let angles = crate::factor::solve_angles(&p, &ctx).unwrap();
        assert_eq!(angles.dir2.theta(), PI);
        assert!(bond_residual(&p, &ctx, &angles) < 1e-14);
        assert!(bond_residual(&p, &ctx, &angles.swapped()) < 1e-14);

        let p = Params::new([1.25, 0.75, 0.25], [1.0, 0.0, 1.0]);
        let angles = crate::factor::solve_angles(&p, &ctx).unwrap();
        assert!(bond_residual(&p, &ctx, &angles) < 1e-14);
    }
}
