//! Factorization condition, Neel energy, and the two maps between Hamiltonian
//! parameters and sublattice polarization angles, for any dimension `d` and
//! spin `s`.
//!
//! The spin-`s` problem with field `h` has the same Neel angles as the spin-1/2
//! problem with field `h / (2s)`, so every field coefficient below carries the
//! weight `2ds` where the spin-1/2 equations carry `d`.

use std::cmp::Ordering;

use nalgebra::{Matrix6, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spin::{Direction, Spin};
use crate::stereo::{homogeneous_roots, Stereo};

/// Relative threshold below which a pairwise exchange sum counts as zero.
pub const DENOMINATOR_TOLERANCE: f64 = 1e-12;
/// Default condition tolerance, relative to `(2ds)^2`.
pub const CONDITION_TOLERANCE: f64 = 1e-9;
/// Relative singular-value threshold for the parameter nullspace.
pub const NULLSPACE_TOLERANCE: f64 = 1e-10;
/// Largest accepted `tan(theta/2)` when forming angle invariants.
pub const MAX_HALF_TANGENT: f64 = 1e9;
/// Two polar angles closer than this are ordered by azimuth.
pub const ORDERING_TIE: f64 = 1e-12;

/// Exchange integrals and field components, in one common energy unit.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Params {
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
    pub hx: f64,
    pub hy: f64,
    pub hz: f64,
}

impl Params {
    pub const NAMES: [&'static str; 6] = ["Jx", "Jy", "Jz", "hx", "hy", "hz"];

    pub fn new(exchange: [f64; 3], field: [f64; 3]) -> Self {
        let [jx, jy, jz] = exchange;
        let [hx, hy, hz] = field;
        Params { jx, jy, jz, hx, hy, hz }
    }

    pub fn from_array(v: [f64; 6]) -> Self {
        Params { jx: v[0], jy: v[1], jz: v[2], hx: v[3], hy: v[4], hz: v[5] }
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.jx, self.jy, self.jz, self.hx, self.hy, self.hz]
    }

    pub fn exchange(&self) -> [f64; 3] {
        [self.jx, self.jy, self.jz]
    }

    pub fn field(&self) -> [f64; 3] {
        [self.hx, self.hy, self.hz]
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Params::from_array(self.to_array().map(|x| x * factor))
    }

    pub fn with_field_scaled(&self, factor: f64) -> Self {
        Params::new(self.exchange(), self.field().map(|h| h * factor))
    }

    /// Largest absolute component.
    pub fn magnitude(&self) -> f64 {
        self.to_array().iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.to_array();
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParams(format!("non-finite component in {v:?}")));
        }
        if v.iter().all(|&x| x == 0.0) {
            return Err(Error::InvalidParams("all six parameters vanish".into()));
        }
        Ok(())
    }
}

/// Lattice dimension and spin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelContext {
    pub d: usize,
    pub spin: Spin,
}

impl ModelContext {
    pub fn new(d: usize, spin: Spin) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidLattice("dimension must be at least 1".into()));
        }
        Ok(ModelContext { d, spin })
    }

    /// `2ds`, the scale of the factorizing field.
    pub fn field_weight(&self) -> f64 {
        2.0 * self.d as f64 * self.spin.value()
    }
}

/// Sublattice directions; `dir1` sits on even-parity sites.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeelAngles {
    pub dir1: Direction,
    pub dir2: Direction,
}

impl NeelAngles {
    pub fn new(dir1: Direction, dir2: Direction) -> Self {
        NeelAngles { dir1, dir2 }
    }

    pub fn from_radians(theta1: f64, phi1: f64, theta2: f64, phi2: f64) -> Result<Self> {
        Ok(NeelAngles::new(Direction::new(theta1, phi1)?, Direction::new(theta2, phi2)?))
    }

    pub fn swapped(&self) -> Self {
        NeelAngles { dir1: self.dir2, dir2: self.dir1 }
    }

    pub fn is_canonical(&self) -> bool {
        canonical_order(&self.dir1, &self.dir2) != Ordering::Greater
    }

    /// Smaller polar angle first; near-ties broken by smaller azimuth.
    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            *self
        } else {
            self.swapped()
        }
    }

    /// Componentwise angle error, minimized over the sublattice swap.
    pub fn error_up_to_swap(&self, other: &NeelAngles) -> f64 {
        let direct = self.dir1.angle_error(&other.dir1).max(self.dir2.angle_error(&other.dir2));
        let swapped = self.dir1.angle_error(&other.dir2).max(self.dir2.angle_error(&other.dir1));
        direct.min(swapped)
    }
}

fn canonical_order(a: &Direction, b: &Direction) -> Ordering {
    if (a.theta() - b.theta()).abs() <= ORDERING_TIE {
        a.phi().total_cmp(&b.phi())
    } else {
        a.theta().total_cmp(&b.theta())
    }
}

/// The scalars `gamma, delta, chi, zeta` built from `t_k = tan(theta_k / 2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleInvariants {
    pub gamma: f64,
    pub delta: f64,
    pub chi: f64,
    pub zeta: f64,
}

impl AngleInvariants {
    /// Shared denominator of the closed-form inverse map.
    pub fn closed_form_denominator(&self) -> f64 {
        let AngleInvariants { gamma: g, delta: de, chi: c, zeta: z } = *self;
        c * (c * c + g * g - de * de + z * z - 1.0) + 2.0 * g * de * z
    }
}

/// Both stereographic coordinates of a Neel state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StereoPair {
    pub z1: Stereo,
    pub z2: Stereo,
}

impl StereoPair {
    pub fn from_angles(angles: &NeelAngles) -> Self {
        StereoPair { z1: Stereo::from_direction(angles.dir1), z2: Stereo::from_direction(angles.dir2) }
    }

    pub fn to_angles(&self) -> NeelAngles {
        NeelAngles::new(self.z1.to_direction(), self.z2.to_direction())
    }
}

/// Orthonormal basis of the parameter nullspace for given angles.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamRay {
    /// Unit 6-vectors in `(Jx, Jy, Jz, hx, hy, hz)` order.
    pub basis: Vec<[f64; 6]>,
    /// All six singular values of the system matrix, descending.
    pub singular_values: [f64; 6],
    /// For a one-dimensional nullspace with non-negligible `Jx`, the member with `Jx = 1`.
    pub unit_jx: Option<Params>,
}

impl ParamRay {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Distance from `v` to the spanned subspace, relative to `|v|`.
    pub fn relative_distance(&self, v: &[f64; 6]) -> f64 {
        let norm = dot(v, v).sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        let mut rest = *v;
        for b in &self.basis {
            let coeff = dot(&rest, b);
            for (r, bi) in rest.iter_mut().zip(b) {
                *r -= coeff * bi;
            }
        }
        dot(&rest, &rest).sqrt() / norm
    }
}

fn dot(a: &[f64; 6], b: &[f64; 6]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

const PAIR_LABELS: [[&str; 2]; 3] = [["Jx+Jy", "Jx+Jz"], ["Jy+Jx", "Jy+Jz"], ["Jz+Jx", "Jz+Jy"]];
const FIELD_LABELS: [&str; 3] = ["hx", "hy", "hz"];

/// The three terms `h_a^2 / ((J_a + J_b)(J_a + J_c))` of the condition.
fn condition_terms(p: &Params) -> Result<[f64; 3]> {
    p.validate()?;
    let j = p.exchange();
    let h = p.field();
    let j_scale = j.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let h_zero = DENOMINATOR_TOLERANCE * p.magnitude();
    let others = [[1, 2], [0, 2], [0, 1]];
    let mut terms = [0.0; 3];
    let mut indeterminate = None;
    for a in 0..3 {
        let sums = others[a].map(|b| j[a] + j[b]);
        if let Some(k) = sums.iter().position(|s| s.abs() <= DENOMINATOR_TOLERANCE * j_scale) {
            let (pair, field) = (PAIR_LABELS[a][k], FIELD_LABELS[a]);
            if h[a].abs() > h_zero {
                return Err(Error::DegenerateDenominator { pair, field });
            }
            indeterminate.get_or_insert(Error::IndeterminateTerm { pair, field });
            continue;
        }
        terms[a] = h[a] * h[a] / (sums[0] * sums[1]);
    }
    if let Some(e) = indeterminate {
        return Err(e);
    }
    Ok(terms)
}

/// Left side of the factorization condition minus `(2ds)^2`; zero exactly
/// when the Hamiltonian has Neel-type eigenstates.
pub fn condition_residual(p: &Params, ctx: &ModelContext) -> Result<f64> {
    let w = ctx.field_weight();
    Ok(condition_terms(p)?.iter().sum::<f64>() - w * w)
}

/// Factor `lambda > 0` such that `(J, lambda h)` satisfies the condition
/// exactly. Fails when the field part of the left side is not positive.
pub fn field_normalizing_scale(p: &Params, ctx: &ModelContext) -> Result<f64> {
    let lhs: f64 = condition_terms(p)?.iter().sum();
    if !(lhs > 0.0 && lhs.is_finite()) {
        return Err(Error::InvalidParams(format!("condition left side {lhs} is not positive")));
    }
    Ok(ctx.field_weight() / lhs.sqrt())
}

/// Energy per site of the Neel eigenstates, `-d s^2 (Jx + Jy + Jz)`.
pub fn energy_per_site(p: &Params, ctx: &ModelContext) -> f64 {
    let s = ctx.spin.value();
    -(ctx.d as f64) * s * s * (p.jx + p.jy + p.jz)
}

/// One equation `p * (z1 z2) + q * (z1 + z2) = rhs` of the reduced bond system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedEquation {
    pub product: Complex64,
    pub sum: Complex64,
    pub rhs: Complex64,
}

impl ReducedEquation {
    fn scale(&self) -> f64 {
        self.product.norm().max(self.sum.norm()).max(self.rhs.norm())
    }

    /// Residual with both roots in homogeneous form, so infinite roots are allowed.
    pub fn homogeneous_residual(&self, roots: &StereoPair) -> f64 {
        let (u1, v1) = (roots.z1.numerator(), roots.z1.denominator());
        let (u2, v2) = (roots.z2.numerator(), roots.z2.denominator());
        (self.product * u1 * u2 + self.sum * (u1 * v2 + u2 * v1) - self.rhs * v1 * v2).norm()
    }
}

/// The three independent bond equations in `P = z1 z2` and `S = z1 + z2`
/// once the energy is fixed, each multiplied through by `2ds`.
pub fn reduced_system(p: &Params, ctx: &ModelContext) -> [ReducedEquation; 3] {
    let w = ctx.field_weight();
    let h_plus = Complex64::new(p.hx, p.hy);
    let h_minus = Complex64::new(p.hx, -p.hy);
    let b = p.jx - p.jy;
    let k = p.jx + p.jy;
    let a = k + 2.0 * p.jz - 2.0 * p.hz / w;
    let c = k + 2.0 * p.jz + 2.0 * p.hz / w;
    let re = |x: f64| Complex64::new(x, 0.0);
    [
        ReducedEquation { product: re(w * b), sum: -h_minus, rhs: re(-w * a) },
        ReducedEquation { product: re(w * c), sum: -h_plus, rhs: re(-w * b) },
        ReducedEquation { product: -h_minus, sum: re(w * k), rhs: h_plus },
    ]
}

/// Unscaled quadratic `a z^2 + b z + c` whose roots are `z1, z2`, obtained
/// by eliminating between two reduced equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticCoefficients {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    /// Indices (0-based) of the two reduced equations used.
    pub equations: (usize, usize),
}

impl QuadraticCoefficients {
    fn from_pair(eqs: &[ReducedEquation; 3], i: usize, j: usize) -> Self {
        let (e, f) = (eqs[i], eqs[j]);
        let det = e.product * f.sum - f.product * e.sum;
        let product_num = e.rhs * f.sum - f.rhs * e.sum;
        let sum_num = e.product * f.rhs - f.product * e.rhs;
        QuadraticCoefficients { a: det, b: -sum_num, c: product_num, equations: (i, j) }
    }

    fn norm(&self) -> f64 {
        self.a.norm().max(self.b.norm()).max(self.c.norm())
    }

    /// `z1 z2 = c / a`, absent when `a = 0`.
    pub fn product(&self) -> Option<Complex64> {
        (self.a.norm() > 0.0).then(|| self.c / self.a)
    }

    /// `z1 + z2 = -b / a`, absent when `a = 0`.
    pub fn sum(&self) -> Option<Complex64> {
        (self.a.norm() > 0.0).then(|| -self.b / self.a)
    }
}

/// Coefficients from the first and third reduced equations:
/// `a = (2ds)^2 (Jx^2 - Jy^2) - (hx - i hy)^2`,
/// `c = hx^2 + hy^2 - (2ds)^2 (Jx + Jy)(Jx + Jy + 2Jz - hz/(ds))`,
/// `b = -2ds [(hx + i hy)(Jx - Jy) - (hx - i hy)(Jx + Jy + 2Jz - hz/(ds))]`.
pub fn vieta_coefficients(p: &Params, ctx: &ModelContext) -> QuadraticCoefficients {
    QuadraticCoefficients::from_pair(&reduced_system(p, ctx), 0, 2)
}

/// Outcome of [`solve_angles_detailed`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleSolution {
    /// Canonically ordered.
    pub angles: NeelAngles,
    /// Roots in the same order as `angles`.
    pub roots: StereoPair,
    pub coefficients: QuadraticCoefficients,
    /// Condition residual, or `None` if the condition is indeterminate and
    /// consistency was checked on the reduced system instead.
    pub condition_residual: Option<f64>,
}

/// Neel angles for parameters on the factorization surface.
pub fn solve_angles(p: &Params, ctx: &ModelContext) -> Result<NeelAngles> {
    solve_angles_detailed(p, ctx, CONDITION_TOLERANCE).map(|s| s.angles)
}

/// As [`solve_angles`] with an explicit condition tolerance (relative to `(2ds)^2`).
pub fn solve_angles_detailed(p: &Params, ctx: &ModelContext, tolerance: f64) -> Result<AngleSolution> {
    p.validate()?;
    let w = ctx.field_weight();
    let allowed = tolerance * w * w;
    let residual = match condition_residual(p, ctx) {
        Ok(r) if r.abs() > allowed => return Err(Error::ConditionViolated { residual: r, tolerance: allowed }),
        Ok(r) => Some(r),
        Err(Error::IndeterminateTerm { .. }) => None,
        Err(e) => return Err(e),
    };

    let eqs = reduced_system(p, ctx);
    let pairs = [(0, 2), (0, 1), (1, 2)].map(|(i, j)| QuadraticCoefficients::from_pair(&eqs, i, j));
    let largest = pairs.iter().map(QuadraticCoefficients::norm).fold(0.0, f64::max);
    let row_scale = eqs.iter().map(ReducedEquation::scale).fold(0.0, f64::max);
    if largest <= 1e-13 * row_scale * row_scale {
        return Err(Error::AllCoefficientsZero);
    }
    let chosen = if pairs[0].norm() >= 1e-6 * largest {
        pairs[0]
    } else {
        *pairs[1..].iter().max_by(|x, y| x.norm().total_cmp(&y.norm())).expect("non-empty")
    };

    let (r1, r2) = homogeneous_roots(chosen.a, chosen.b, chosen.c)?;
    let mut roots = StereoPair { z1: r1, z2: r2 };

    if residual.is_none() {
        // Condition form broke down; demand the full reduced system holds.
        let worst =
            eqs.iter().map(|e| e.homogeneous_residual(&roots) / e.scale().max(f64::MIN_POSITIVE)).fold(0.0, f64::max);
        if worst > tolerance {
            return Err(Error::ConditionViolated { residual: worst, tolerance });
        }
    }

    let mut angles = roots.to_angles();
    if !angles.is_canonical() {
        angles = angles.swapped();
        roots = StereoPair { z1: roots.z2, z2: roots.z1 };
    }
    Ok(AngleSolution { angles, roots, coefficients: chosen, condition_residual: residual })
}

pub fn angle_invariants(a: &NeelAngles) -> Result<AngleInvariants> {
    let t1 = (a.dir1.theta() / 2.0).tan();
    let t2 = (a.dir2.theta() / 2.0).tan();
    if !(t1.is_finite() && t2.is_finite()) || t1 > MAX_HALF_TANGENT || t2 > MAX_HALF_TANGENT {
        return Err(Error::PoleDegeneracy);
    }
    let (p1, p2) = (a.dir1.phi(), a.dir2.phi());
    Ok(AngleInvariants {
        gamma: t1 * t2 * (p1 + p2).cos(),
        delta: t1 * p1.cos() + t2 * p2.cos(),
        chi: t1 * t2 * (p1 + p2).sin(),
        zeta: t1 * p1.sin() + t2 * p2.sin(),
    })
}

/// Real and imaginary parts of the three reduced equations as a homogeneous
/// linear system in `(Jx, Jy, Jz, hx, hy, hz)`; field columns carry `1/(2ds)`.
pub fn system_matrix(inv: &AngleInvariants, ctx: &ModelContext) -> Matrix6<f64> {
    let AngleInvariants { gamma: g, delta: de, chi: c, zeta: z } = *inv;
    let k = ctx.field_weight();
    #[rustfmt::skip]
    let m = Matrix6::new(
        1.0 + g, 1.0 - g,  2.0,     -de / k,        -z / k,         -2.0 / k,
        c,       -c,       0.0,     -z / k,         de / k,         0.0,
        1.0 + g, g - 1.0,  2.0 * g, -de / k,        z / k,          2.0 * g / k,
        c,       c,        2.0 * c, -z / k,         -de / k,        2.0 * c / k,
        de,      de,       0.0,     -(1.0 + g) / k, -c / k,         0.0,
        z,       z,        0.0,     -c / k,         -(1.0 - g) / k, 0.0,
    );
    m
}

/// Nullspace of [`system_matrix`]: every parameter set for which the given
/// Neel state is an eigenstate with the Neel energy.
pub fn solve_params(a: &NeelAngles, ctx: &ModelContext) -> Result<ParamRay> {
    solve_params_with(a, ctx, NULLSPACE_TOLERANCE)
}

pub fn solve_params_with(a: &NeelAngles, ctx: &ModelContext, tolerance: f64) -> Result<ParamRay> {
    let inv = angle_invariants(a)?;
    let m = system_matrix(&inv, ctx);
    let svd = SVD::new(m, false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut order: Vec<usize> = (0..6).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let singular_values: [f64; 6] = std::array::from_fn(|k| svd.singular_values[order[k]]);
    let sigma_max = singular_values[0];

    let basis: Vec<[f64; 6]> = order
        .iter()
        .filter(|&&i| svd.singular_values[i] < tolerance * sigma_max)
        .map(|&i| {
            let mut v: [f64; 6] = std::array::from_fn(|c| v_t[(i, c)]);
            let lead = v.iter().position(|x| x.abs() > 1e-8).unwrap_or(0);
            if v[lead] < 0.0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
            v
        })
        .collect();
    if basis.is_empty() {
        return Err(Error::EmptyNullspace(singular_values[5] / sigma_max));
    }
    let unit_jx = match basis.as_slice() {
        [v] if v[0].abs() > 1e-8 => Some(Params::from_array(v.map(|x| x / v[0]))),
        _ => None,
    };
    Ok(ParamRay { basis, singular_values, unit_jx })
}

/// Closed-form member of the parameter ray with `Jx = 1`. Returns `None`
/// when the shared denominator vanishes (below `1e-12`).
pub fn closed_form_params(inv: &AngleInvariants, ctx: &ModelContext) -> Option<Params> {
    let AngleInvariants { gamma: g, delta: de, chi: c, zeta: z } = *inv;
    let den = inv.closed_form_denominator();
    if den.abs() < 1e-12 {
        return None;
    }
    let ds = ctx.d as f64 * ctx.spin.value();
    let jy = (c * (c * c + g * g + de * de - z * z - 1.0) - 2.0 * g * de * z) / den;
    let jz = -(c * (c * c + g * g + g * (z * z - de * de) - de * c * z - 1.0) + (1.0 + g * g) * de * z) / den;
    let hx = 4.0 * c * (de * (g - 1.0) + c * z) * ds / den;
    let hy = -4.0 * c * (z * (1.0 + g) - de * c) * ds / den;
    let hz = (de * de * c * (1.0 - g) + de * z * (g * g - c * c - 1.0) + c * z * z * (1.0 + g)) * 2.0 * ds / den;
    Some(Params { jx: 1.0, jy, jz, hx, hy, hz })
}

/// Residual magnitude below which a bisection stops.
pub const SCAN_RESIDUAL_TOLERANCE: f64 = 1e-12;

/// Roots of `t -> condition_residual(p0 + t * direction)` over `range`,
/// bracketed on `samples` equal steps and refined by bisection.
pub fn factorizing_field_scan(
    p0: &Params,
    direction: &[f64; 6],
    ctx: &ModelContext,
    range: (f64, f64),
    samples: usize,
) -> Result<Vec<f64>> {
    let (lo, hi) = range;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || samples == 0 {
        return Err(Error::InvalidParams(format!("bad scan range {range:?} with {samples} samples")));
    }
    let base = p0.to_array();
    let at = |t: f64| {
        let v: [f64; 6] = std::array::from_fn(|i| base[i] + t * direction[i]);
        condition_residual(&Params::from_array(v), ctx)
    };

    let grid: Vec<f64> = (0..=samples).map(|i| lo + (hi - lo) * i as f64 / samples as f64).collect();
    let values = grid.iter().map(|&t| at(t)).collect::<Result<Vec<f64>>>()?;

    let mut roots: Vec<f64> = Vec::new();
    for i in 0..samples {
        let (t0, t1) = (grid[i], grid[i + 1]);
        let (r0, r1) = (values[i], values[i + 1]);
        if r0 == 0.0 {
            if roots.last() != Some(&t0) {
                roots.push(t0);
            }
            continue;
        }
        if r1 == 0.0 {
            roots.push(t1);
            continue;
        }
        if (r0 < 0.0) != (r1 < 0.0) {
            roots.push(bisect(&at, t0, t1, r0)?);
        }
    }
    if roots.is_empty() {
        return Err(Error::NoRoot);
    }
    Ok(roots)
}

fn bisect(f: &impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Result<f64> {
    let mut best = (lo, f_lo.abs());
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid.abs() < best.1 {
            best = (mid, f_mid.abs());
        }
        if f_mid.abs() < SCAN_RESIDUAL_TOLERANCE {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let f_hi = f(hi)?;
    Ok(if f_hi.abs() < best.1 { hi } else { best.0 })
}
