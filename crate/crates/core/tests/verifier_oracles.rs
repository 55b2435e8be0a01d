mod common;

use common::{ctx, random_angles, rng, surface_params};
use nalgebra::DMatrix;
use neel_core::{
    bond_residual, energy_per_site, solve_angles, spectrum_probe, Complex64, HilbertSpace, Lattice, Params, Spin,
    StateVector,
};
use rand::Rng;

fn random_params(rng: &mut impl Rng) -> Params {
    Params::from_array(std::array::from_fn(|_| rng.random_range(-1.5..1.5)))
}

fn random_state(rng: &mut impl Rng, dim: usize) -> StateVector {
    StateVector {
        amps: (0..dim).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect(),
    }
}

/// `(extents, 2s)` with total dimension at most 256.
const SMALL: [(&[usize], u32); 6] = [(&[2], 1), (&[4], 1), (&[4], 2), (&[2], 3), (&[2, 2], 1), (&[8], 1)];

#[test]
fn matrix_free_matches_dense() {
    let mut r = rng(11);
    for (extents, two_s) in SMALL {
        let space = HilbertSpace::new(&Lattice::new(extents).unwrap(), Spin::new(two_s).unwrap()).unwrap();
        assert!(space.dim() <= 256);
        for _ in 0..3 {
            let p = random_params(&mut r);
            let h = space.dense_hamiltonian(&p).unwrap();
            let v = random_state(&mut r, space.dim());
            let dense = &h * nalgebra::DVector::from_vec(v.amps.clone());
            let free = space.apply_hamiltonian(&p, &v).unwrap();
            for (a, b) in free.amps.iter().zip(dense.iter()) {
                assert!((a - b).norm() < 1e-12, "{extents:?} 2s={two_s}: {a} vs {b}");
            }
        }
    }
}

/// Kronecker product of single-site operators placed on sites `i < j` (or one site).
fn embed(ops: &[(usize, &DMatrix<Complex64>)], n: usize, local: usize) -> DMatrix<Complex64> {
    let identity = DMatrix::<Complex64>::identity(local, local);
    let mut out = DMatrix::<Complex64>::identity(1, 1);
    for site in 0..n {
        let op = ops.iter().find(|(s, _)| *s == site).map_or(&identity, |(_, m)| *m);
        out = out.kronecker(op);
    }
    out
}

#[test]
fn dense_matches_explicit_kronecker_sum() {
    let mut r = rng(12);
    for (extents, two_s) in [(&[4usize][..], 1u32), (&[2, 2][..], 1), (&[2][..], 2)] {
        let lattice = Lattice::new(extents).unwrap();
        let spin = Spin::new(two_s).unwrap();
        let space = HilbertSpace::new(&lattice, spin).unwrap();
        let m = neel_core::spin_matrices(spin);
        let (n, local) = (lattice.num_sites(), spin.multiplicity());
        let p = random_params(&mut r);
        let j = p.exchange();
        let h = p.field();
        let ops = m.components();
        let mut expected = DMatrix::<Complex64>::zeros(space.dim(), space.dim());
        for (a, b) in lattice.bond_pairs() {
            for k in 0..3 {
                let term = if a == b {
                    embed(&[(a, &(ops[k] * ops[k]))], n, local)
                } else {
                    embed(&[(a, ops[k]), (b, ops[k])], n, local)
                };
                expected += term * Complex64::from(j[k]);
            }
        }
        for site in 0..n {
            for k in 0..3 {
                expected -= embed(&[(site, ops[k])], n, local) * Complex64::from(h[k]);
            }
        }
        let got = space.dense_hamiltonian(&p).unwrap();
        let diff = (&got - &expected).iter().map(|x| x.norm()).fold(0.0, f64::max);
        assert!(diff < 1e-12, "{extents:?}: {diff}");
    }
}

#[test]
fn hamiltonian_is_hermitian_linear_and_traceless() {
    let mut r = rng(13);
    for (extents, two_s) in SMALL {
        let lattice = Lattice::new(extents).unwrap();
        let spin = Spin::new(two_s).unwrap();
        let space = HilbertSpace::new(&lattice, spin).unwrap();
        let p = random_params(&mut r);
        let h = space.dense_hamiltonian(&p).unwrap();
        let asym = (&h - h.adjoint()).iter().map(|x| x.norm()).fold(0.0, f64::max);
        assert!(asym < 1e-12);

        let (u, v) = (random_state(&mut r, space.dim()), random_state(&mut r, space.dim()));
        let (a, b) = (Complex64::new(0.3, -1.2), Complex64::new(-0.7, 0.4));
        let combined = space.apply_hamiltonian(&p, &u.scaled(a).axpy(b, &v)).unwrap();
        let separate =
            space.apply_hamiltonian(&p, &u).unwrap().scaled(a).axpy(b, &space.apply_hamiltonian(&p, &v).unwrap());
        assert!(combined.axpy(Complex64::from(-1.0), &separate).norm() < 1e-12 * combined.norm().max(1.0));

        let spectrum = spectrum_probe(&p, &lattice, spin).unwrap();
        assert!(spectrum.iter().sum::<f64>().abs() < 1e-9);
    }
}

#[test]
fn neel_energy_is_in_the_spectrum() {
    let mut r = rng(14);
    for (extents, two_s) in [(&[4usize][..], 1u32), (&[2, 2][..], 1), (&[4][..], 2), (&[2, 2, 2][..], 1)] {
        let lattice = Lattice::new(extents).unwrap();
        let c = ctx(lattice.dim(), two_s);
        for _ in 0..3 {
            let p = surface_params(&mut r, &c);
            let target = lattice.num_sites() as f64 * energy_per_site(&p, &c);
            let spectrum = spectrum_probe(&p, &lattice, c.spin).unwrap();
            let nearest = spectrum.iter().map(|e| (e - target).abs()).fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-9 * target.abs().max(1.0), "{extents:?}: {nearest}");
        }
    }
}

#[test]
fn both_root_assignments_are_eigenstates() {
    let mut r = rng(15);
    for (extents, two_s) in [(&[4usize][..], 1u32), (&[6][..], 1), (&[4][..], 3), (&[2, 4][..], 1)] {
        let lattice = Lattice::new(extents).unwrap();
        let c = ctx(lattice.dim(), two_s);
        let space = HilbertSpace::new(&lattice, c.spin).unwrap();
        for _ in 0..10 {
            let p = surface_params(&mut r, &c);
            let a = solve_angles(&p, &c).unwrap();
            for angles in [a, a.swapped()] {
                let check = space.eigen_check(&p, &angles).unwrap();
                assert!(check.residual <= 1e-10 * check.applied_norm, "{check:?}");
            }
        }
    }
}

#[test]
fn bond_residual_agrees_with_lattice_residual() {
    let mut r = rng(16);
    for (extents, two_s) in [(&[4usize][..], 1u32), (&[4][..], 2), (&[2, 2][..], 1)] {
        let lattice = Lattice::new(extents).unwrap();
        let c = ctx(lattice.dim(), two_s);
        let space = HilbertSpace::new(&lattice, c.spin).unwrap();
        let bound = 1e-10 * ((lattice.num_sites() * lattice.dim()) as f64).sqrt();
        for trial in 0..20 {
            let p = surface_params(&mut r, &c);
            let angles = if trial % 2 == 0 { solve_angles(&p, &c).unwrap() } else { random_angles(&mut r) };
            let bond_ok = bond_residual(&p, &c, &angles) <= 1e-10;
            let lattice_ok = space.eigen_check(&p, &angles).unwrap().residual <= bound;
            assert_eq!(bond_ok, lattice_ok, "trial {trial}: {angles:?}");
            assert_eq!(bond_ok, trial % 2 == 0);
        }
    }
}

#[test]
fn product_states_have_unit_norm() {
    let mut r = rng(17);
    let space = HilbertSpace::new(&Lattice::new(&[2, 2]).unwrap(), Spin::HALF).unwrap();
    for _ in 0..100 {
        let v = space.neel_state(&random_angles(&mut r));
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }
}
