//! Command dispatch: a resolved job in, a JSON report and exit code out.

use std::f64::consts::PI;

use neel_core::factor::solve_params_with;
use neel_core::{
    angle_invariants, bond_residual, closed_form_params, condition_residual, energy_per_site, factorizing_field_scan,
    field_normalizing_scale, solve_angles, solve_angles_detailed, spectrum_probe, Complex64, HilbertSpace,
    ModelContext, NeelAngles, ParamRay, Params, Stereo,
};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::job::{Command, Job, JobSpec};

pub const SCHEMA: u32 = 1;

/// Samples on the half circle when intersecting a two-dimensional
/// parameter family with the condition.
pub const FAMILY_SAMPLES: usize = 3600;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: u8,
}

type Fields = Map<String, Value>;

/// Resolves and runs `spec`; failures are reported, never raised.
pub fn run_spec(spec: &JobSpec) -> Outcome {
    match spec.resolve() {
        Ok(job) => run(&job),
        Err(e) => rejected(spec.command, &e),
    }
}

/// Report for a job that could not be assembled or resolved.
pub fn rejected(command: Option<Command>, e: &CliError) -> Outcome {
    let mut fields = Fields::new();
    fields.insert("schema".into(), json!(SCHEMA));
    fields.insert("command".into(), json!(command.map(Command::as_str)));
    failure(fields, e)
}

pub fn run(job: &Job) -> Outcome {
    let mut fields = header(job);
    let result = match job.command {
        Command::Check => check(job),
        Command::Angles => angles(job),
        Command::Params => params(job),
        Command::Verify => verify(job),
        Command::Sweep => sweep(job),
        Command::Spectrum => spectrum(job),
    };
    match result {
        Ok((body, pass)) => {
            fields.extend(body);
            fields.insert("pass".into(), json!(pass));
            Outcome { report: Value::Object(fields), exit_code: if pass { 0 } else { 2 } }
        }
        Err(e) => failure(fields, &e),
    }
}

fn failure(mut fields: Fields, e: &CliError) -> Outcome {
    fields.insert("pass".into(), json!(false));
    fields.insert("error".into(), json!({ "name": e.name(), "message": e.to_string() }));
    Outcome { report: Value::Object(fields), exit_code: e.exit_code() }
}

fn header(job: &Job) -> Fields {
    let mut fields = Fields::new();
    fields.insert("schema".into(), json!(SCHEMA));
    fields.insert("command".into(), json!(job.command.as_str()));
    fields.insert("d".into(), json!(job.ctx.d));
    fields.insert("s".into(), json!(job.ctx.spin.to_string()));
    fields.insert("two_s".into(), json!(job.ctx.spin.two_s()));
    if let Some(lattice) = &job.lattice {
        fields.insert("extents".into(), json!(lattice.extents()));
    }
    fields.insert(
        "tolerances".into(),
        json!({
            "condition": job.tolerances.condition,
            "nullspace": job.tolerances.nullspace,
            "eigen": job.tolerances.eigen,
            "bond": job.tolerances.bond,
        }),
    );
    fields
}

pub fn params_json(p: &Params) -> Value {
    Value::Object(Params::NAMES.iter().zip(p.to_array()).map(|(k, v)| (k.to_string(), json!(v))).collect())
}

pub fn angles_json(a: &NeelAngles) -> Value {
    json!({
        "theta1": a.dir1.theta(),
        "phi1": a.dir1.phi(),
        "theta2": a.dir2.theta(),
        "phi2": a.dir2.phi(),
        "unit": "rad",
    })
}

fn complex_json(z: Option<Complex64>) -> Value {
    match z {
        Some(z) => json!({ "re": z.re, "im": z.im }),
        None => Value::Null,
    }
}

fn stereo_json(z: &Stereo) -> Value {
    match z.value() {
        Some(v) => json!({ "re": v.re, "im": v.im, "infinite": false }),
        None => json!({ "re": null, "im": null, "infinite": true }),
    }
}

/// Residual as a number, or the name of the error that prevented it.
fn residual_or_error(p: &Params, ctx: &ModelContext) -> (Value, Value) {
    match condition_residual(p, ctx) {
        Ok(r) => (json!(r), Value::Null),
        Err(e) => (Value::Null, json!(e.name())),
    }
}

fn check(job: &Job) -> Result<(Fields, bool), CliError> {
    let p = job.params()?;
    let ctx = job.ctx;
    let w2 = ctx.field_weight().powi(2);
    let residual = condition_residual(&p, &ctx)?;
    let bound = job.tolerances.condition * w2;
    let mut f = Fields::new();
    f.insert("params".into(), params_json(&p));
    f.insert("residual".into(), json!(residual));
    f.insert("relative_residual".into(), json!(residual / w2));
    f.insert("bound".into(), json!(bound));
    f.insert("energy_per_site".into(), json!(energy_per_site(&p, &ctx)));
    Ok((f, residual.abs() <= bound))
}

fn angles(job: &Job) -> Result<(Fields, bool), CliError> {
    let p = job.params()?;
    let ctx = job.ctx;
    let sol = solve_angles_detailed(&p, &ctx, job.tolerances.condition)?;
    let bond = bond_residual(&p, &ctx, &sol.angles);
    let coeffs = sol.coefficients;
    let mut f = Fields::new();
    f.insert("params".into(), params_json(&p));
    f.insert("angles".into(), angles_json(&sol.angles));
    f.insert("z1".into(), stereo_json(&sol.roots.z1));
    f.insert("z2".into(), stereo_json(&sol.roots.z2));
    f.insert("alpha_s".into(), complex_json(coeffs.product()));
    f.insert("beta_s".into(), complex_json(coeffs.sum()));
    f.insert("equations".into(), json!([coeffs.equations.0, coeffs.equations.1]));
    f.insert("condition_residual".into(), json!(sol.condition_residual));
    f.insert("energy_per_site".into(), json!(energy_per_site(&p, &ctx)));
    f.insert("bond_residual".into(), json!(bond));
    Ok((f, bond <= job.tolerances.bond))
}

/// Members of a two-dimensional nullspace that satisfy the condition.
#[derive(Debug, Clone, PartialEq)]
pub struct Family {
    /// The condition holds at every sample where it is defined.
    pub identically: bool,
    pub members: Vec<Params>,
}

/// Scans `cos(a) b1 + sin(a) b2` over `a` in `[0, pi)`; the condition is
/// invariant under overall sign and scale, so this covers the family.
pub fn resolve_family(ray: &ParamRay, ctx: &ModelContext, tolerance: f64) -> Option<Family> {
    let [b1, b2] = ray.basis.as_slice() else { return None };
    let bound = tolerance * ctx.field_weight().powi(2);
    let member = |alpha: f64| -> [f64; 6] {
        let (s, c) = alpha.sin_cos();
        std::array::from_fn(|i| c * b1[i] + s * b2[i])
    };
    let residual =
        |alpha: f64| condition_residual(&Params::from_array(member(alpha)), ctx).ok().filter(|r| r.is_finite());

    let alphas: Vec<f64> = (0..=FAMILY_SAMPLES).map(|i| PI * i as f64 / FAMILY_SAMPLES as f64).collect();
    let values: Vec<Option<f64>> = alphas.iter().map(|&a| residual(a)).collect();
    let defined: Vec<f64> = values.iter().flatten().copied().collect();
    if defined.is_empty() {
        return Some(Family { identically: false, members: Vec::new() });
    }
    if defined.iter().all(|r| r.abs() <= bound) {
        return Some(Family { identically: true, members: Vec::new() });
    }

    let mut roots = Vec::new();
    for i in 0..FAMILY_SAMPLES {
        let (Some(ra), Some(rb)) = (values[i], values[i + 1]) else { continue };
        if ra == 0.0 {
            roots.push(alphas[i]);
            continue;
        }
        if ra.signum() == rb.signum() || rb == 0.0 {
            continue;
        }
        let (mut lo, mut hi, mut r_lo) = (alphas[i], alphas[i + 1], ra);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            match residual(mid) {
                Some(0.0) => {
                    lo = mid;
                    hi = mid;
                }
                Some(r) if r.signum() == r_lo.signum() => {
                    lo = mid;
                    r_lo = r;
                }
                Some(_) => hi = mid,
                None => break,
            }
        }
        let alpha = 0.5 * (lo + hi);
        // sign flips through a pole are not roots
        if residual(alpha).is_some_and(|r| r.abs() <= bound) {
            roots.push(alpha);
        }
    }
    let members = roots.into_iter().map(|a| normalize(member(a))).collect();
    Some(Family { identically: false, members })
}

/// Scales to `Jx = 1` when possible, otherwise to unit norm with the first
/// significant component positive.
fn normalize(v: [f64; 6]) -> Params {
    if v[0].abs() > 1e-8 {
        return Params::from_array(v.map(|x| x / v[0]));
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let lead = v.iter().find(|x| x.abs() > 1e-8).copied().unwrap_or(1.0);
    Params::from_array(v.map(|x| x * lead.signum() / norm))
}

fn params(job: &Job) -> Result<(Fields, bool), CliError> {
    let a = job.angles()?;
    let ctx = job.ctx;
    let ray = solve_params_with(&a, &ctx, job.tolerances.nullspace)?;
    let mut f = Fields::new();
    f.insert("angles".into(), angles_json(&a));
    f.insert("nullspace_dim".into(), json!(ray.dim()));
    f.insert("singular_values".into(), json!(ray.singular_values));
    f.insert("basis".into(), Value::Array(ray.basis.iter().map(|b| params_json(&Params::from_array(*b))).collect()));

    let closed = angle_invariants(&a).ok().and_then(|inv| closed_form_params(&inv, &ctx));
    f.insert("closed_form".into(), closed.as_ref().map_or(Value::Null, params_json));

    let mut candidates: Vec<Params> = Vec::new();
    if let Some(p) = ray.unit_jx {
        candidates.push(p);
        let delta =
            closed.map(|c| p.to_array().iter().zip(c.to_array()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max));
        f.insert("closed_form_delta".into(), json!(delta));
        f.insert("field_scale".into(), json!(field_normalizing_scale(&p, &ctx).ok()));
    }
    if ray.dim() >= 2 {
        let family = resolve_family(&ray, &ctx, job.tolerances.condition);
        f.insert(
            "family".into(),
            match &family {
                Some(fam) => json!({
                    "condition_holds_identically": fam.identically,
                    "members": fam.members.iter().map(params_json).collect::<Vec<_>>(),
                }),
                None => Value::Null,
            },
        );
        if let Some(fam) = family {
            candidates.extend(fam.members);
        }
    }

    let mut pass = true;
    if let Some(p) = candidates.first() {
        let (residual, error) = residual_or_error(p, &ctx);
        let bond = bond_residual(p, &ctx, &a);
        f.insert("params".into(), params_json(p));
        f.insert("condition_residual".into(), residual);
        f.insert("condition_error".into(), error);
        f.insert("bond_residual".into(), json!(bond));
        pass = bond <= job.tolerances.bond;
    }
    Ok((f, pass))
}

fn verify(job: &Job) -> Result<(Fields, bool), CliError> {
    let p = job.params()?;
    let ctx = job.ctx;
    let lattice = job.lattice()?;
    let (a, source) = match job.angles {
        Some(a) => (a, "given"),
        None => (solve_angles(&p, &ctx)?, "solved"),
    };
    let space = HilbertSpace::new(lattice, ctx.spin)?;
    let check = space.eigen_check(&p, &a)?;
    let bond = bond_residual(&p, &ctx, &a);
    let (residual, error) = residual_or_error(&p, &ctx);
    let mut f = Fields::new();
    f.insert("params".into(), params_json(&p));
    f.insert("angles".into(), angles_json(&a));
    f.insert("angles_source".into(), json!(source));
    f.insert("sites".into(), json!(lattice.num_sites()));
    f.insert("dimension".into(), json!(space.dim()));
    f.insert("eigen_residual".into(), json!(check.residual));
    f.insert("applied_norm".into(), json!(check.applied_norm));
    f.insert("relative_eigen_residual".into(), json!(check.residual / check.applied_norm));
    f.insert("bond_residual".into(), json!(bond));
    f.insert("energy".into(), json!(check.neel_energy));
    f.insert("expectation".into(), json!(check.expectation));
    f.insert("state_norm".into(), json!(check.state_norm));
    f.insert("condition_residual".into(), residual);
    f.insert("condition_error".into(), error);
    let pass = check.residual <= job.tolerances.eigen * check.applied_norm && bond <= job.tolerances.bond;
    Ok((f, pass))
}

fn sweep(job: &Job) -> Result<(Fields, bool), CliError> {
    let p0 = job.params()?;
    let direction = job.sweep.direction.ok_or_else(|| CliError::input("sweep needs sweep.direction"))?;
    let [lo, hi] = job.sweep.range.ok_or_else(|| CliError::input("sweep needs sweep.range"))?;
    let roots = factorizing_field_scan(&p0, &direction, &job.ctx, (lo, hi), job.sweep.samples)?;
    let base = p0.to_array();
    let points: Vec<Value> = roots
        .iter()
        .map(|&t| params_json(&Params::from_array(std::array::from_fn(|i| base[i] + t * direction[i]))))
        .collect();
    let mut f = Fields::new();
    f.insert("params".into(), params_json(&p0));
    f.insert("direction".into(), json!(direction));
    f.insert("range".into(), json!([lo, hi]));
    f.insert("samples".into(), json!(job.sweep.samples));
    f.insert("roots".into(), json!(roots));
    f.insert("points".into(), Value::Array(points));
    Ok((f, true))
}

fn spectrum(job: &Job) -> Result<(Fields, bool), CliError> {
    let p = job.params()?;
    let lattice = job.lattice()?;
    let values = spectrum_probe(&p, lattice, job.ctx.spin)?;
    let neel = lattice.num_sites() as f64 * energy_per_site(&p, &job.ctx);
    let gap = values.iter().map(|e| (e - neel).abs()).fold(f64::INFINITY, f64::min);
    let mut f = Fields::new();
    f.insert("params".into(), params_json(&p));
    f.insert("dimension".into(), json!(values.len()));
    f.insert("eigenvalues".into(), json!(values));
    f.insert("neel_energy".into(), json!(neel));
    f.insert("distance_to_neel_energy".into(), json!(gap));
    Ok((f, true))
}
