#![allow(dead_code)]

use std::f64::consts::PI;

use neel_core::{angle_invariants, factorizing_field_scan, ModelContext, NeelAngles, Params, Spin, Stereo};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ctx(d: usize, two_s: u32) -> ModelContext {
    ModelContext::new(d, Spin::new(two_s).unwrap()).unwrap()
}

pub fn unit_vector(rng: &mut impl Rng) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..1.0);
    let phi: f64 = rng.random_range(-PI..PI);
    let r = (1.0 - z * z).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

/// Random exchange integrals with every pairwise sum at least 0.2, and a
/// random field direction scaled onto the factorization surface with a scan.
pub fn surface_params(rng: &mut impl Rng, ctx: &ModelContext) -> Params {
    loop {
        let j: [f64; 3] = std::array::from_fn(|_| rng.random_range(-0.5..1.5));
        if j[0] + j[1] < 0.2 || j[0] + j[2] < 0.2 || j[1] + j[2] < 0.2 {
            continue;
        }
        let n = unit_vector(rng);
        let p0 = Params::new(j, [0.0; 3]);
        let direction = [0.0, 0.0, 0.0, n[0], n[1], n[2]];
        if let Ok(roots) = factorizing_field_scan(&p0, &direction, ctx, (0.0, 50.0), 2000) {
            let t = roots[0];
            return Params::new(j, n.map(|x| t * x));
        }
    }
}

/// Angle pairs away from the poles, with well separated stereographic
/// coordinates and `|chi| > 1e-3`.
pub fn generic_angles(rng: &mut impl Rng) -> NeelAngles {
    loop {
        let a = NeelAngles::from_radians(
            rng.random_range(0.2..PI - 0.2),
            rng.random_range(-PI..PI),
            rng.random_range(0.2..PI - 0.2),
            rng.random_range(-PI..PI),
        )
        .unwrap();
        let inv = angle_invariants(&a).unwrap();
        let z1 = Stereo::from_direction(a.dir1).value().unwrap();
        let z2 = Stereo::from_direction(a.dir2).value().unwrap();
        if inv.chi.abs() > 1e-3 && (z1 - z2).norm() > 0.05 {
            return a;
        }
    }
}

pub fn random_angles(rng: &mut impl Rng) -> NeelAngles {
    NeelAngles::from_radians(
        rng.random_range(0.0..PI),
        rng.random_range(-PI..PI),
        rng.random_range(0.0..PI),
        rng.random_range(-PI..PI),
    )
    .unwrap()
}

/// (d, 2s) pairs cycled through by the ray-level checks.
pub const CONTEXTS: [(usize, u32); 6] = [(1, 1), (2, 1), (3, 1), (1, 2), (2, 3), (3, 2)];
