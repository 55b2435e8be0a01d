//! Job description as read from JSON, merged with command-line overrides,
//! and resolved into core types.

use std::fmt;
use std::str::FromStr;

use neel_core::factor::{CONDITION_TOLERANCE, NULLSPACE_TOLERANCE};
use neel_core::{Direction, Lattice, ModelContext, NeelAngles, Params, Spin};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Check,
    Angles,
    Params,
    Verify,
    Sweep,
    Spectrum,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Angles => "angles",
            Command::Params => "params",
            Command::Verify => "verify",
            Command::Sweep => "sweep",
            Command::Spectrum => "spectrum",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The six parameters by name; absent entries may be filled from flags.
#[derive(Debug, Clone, Copy, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamSpec {
    #[serde(rename = "Jx")]
    pub jx: Option<f64>,
    #[serde(rename = "Jy")]
    pub jy: Option<f64>,
    #[serde(rename = "Jz")]
    pub jz: Option<f64>,
    pub hx: Option<f64>,
    pub hy: Option<f64>,
    pub hz: Option<f64>,
}

impl ParamSpec {
    fn slots(&self) -> [Option<f64>; 6] {
        [self.jx, self.jy, self.jz, self.hx, self.hy, self.hz]
    }

    fn slots_mut(&mut self) -> [&mut Option<f64>; 6] {
        [&mut self.jx, &mut self.jy, &mut self.jz, &mut self.hx, &mut self.hy, &mut self.hz]
    }

    pub fn is_empty(&self) -> bool {
        self.slots().iter().all(Option::is_none)
    }

    pub fn overlay(&mut self, other: &ParamSpec) {
        for (slot, value) in self.slots_mut().into_iter().zip(other.slots()) {
            if value.is_some() {
                *slot = value;
            }
        }
    }

    fn complete(&self) -> Result<Params, CliError> {
        let mut out = [0.0; 6];
        for ((dst, value), name) in out.iter_mut().zip(self.slots()).zip(Params::NAMES) {
            *dst = value.ok_or_else(|| CliError::input(format!("parameter {name} is missing")))?;
        }
        Ok(Params::from_array(out))
    }

    /// Missing entries count as zero.
    fn or_zero(&self) -> [f64; 6] {
        self.slots().map(|v| v.unwrap_or(0.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleUnit {
    Rad,
    Deg,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AngleSpec {
    pub theta1: Option<f64>,
    pub phi1: Option<f64>,
    pub theta2: Option<f64>,
    pub phi2: Option<f64>,
    pub unit: Option<AngleUnit>,
}

impl AngleSpec {
    fn slots(&self) -> [Option<f64>; 4] {
        [self.theta1, self.phi1, self.theta2, self.phi2]
    }

    pub fn is_empty(&self) -> bool {
        self.slots().iter().all(Option::is_none)
    }

    pub fn overlay(&mut self, other: &AngleSpec) {
        let slots = [&mut self.theta1, &mut self.phi1, &mut self.theta2, &mut self.phi2];
        for (slot, value) in slots.into_iter().zip(other.slots()) {
            if value.is_some() {
                *slot = value;
            }
        }
        if other.unit.is_some() {
            self.unit = other.unit;
        }
    }

    fn complete(&self) -> Result<NeelAngles, CliError> {
        let mut out = [0.0; 4];
        for ((dst, value), name) in out.iter_mut().zip(self.slots()).zip(["theta1", "phi1", "theta2", "phi2"]) {
            *dst = value.ok_or_else(|| CliError::input(format!("angle {name} is missing")))?;
        }
        if self.unit == Some(AngleUnit::Deg) {
            out = out.map(f64::to_radians);
        }
        let [t1, p1, t2, p2] = out;
        Ok(NeelAngles::new(Direction::new(t1, p1)?, Direction::new(t2, p2)?))
    }
}

/// Spin given as a number (`0.5`, `1`) or a string (`"1.5"`, `"3/2"`).
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum SpinSpec {
    Number(f64),
    Text(String),
}

impl SpinSpec {
    fn resolve(&self) -> Result<Spin, CliError> {
        Ok(match self {
            SpinSpec::Number(s) => Spin::from_f64(*s)?,
            SpinSpec::Text(text) => Spin::from_str(text)?,
        })
    }
}

/// Sweep direction as six numbers or as named components (missing = 0).
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum DirectionSpec {
    Vector([f64; 6]),
    Named(ParamSpec),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub direction: Option<DirectionSpec>,
    pub range: Option<[f64; 2]>,
    pub samples: Option<usize>,
}

impl SweepSpec {
    pub fn overlay(&mut self, other: &SweepSpec) {
        if other.direction.is_some() {
            self.direction = other.direction;
        }
        if other.range.is_some() {
            self.range = other.range;
        }
        if other.samples.is_some() {
            self.samples = other.samples;
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceSpec {
    /// Condition residual bound, relative to `(2ds)^2`.
    pub condition: Option<f64>,
    /// Singular value threshold, relative to the largest.
    pub nullspace: Option<f64>,
    /// Lattice eigen residual bound, relative to `|H|N>|`.
    pub eigen: Option<f64>,
    /// Two-site residual bound, absolute.
    pub bond: Option<f64>,
}

impl ToleranceSpec {
    pub fn overlay(&mut self, other: &ToleranceSpec) {
        let slots = [&mut self.condition, &mut self.nullspace, &mut self.eigen, &mut self.bond];
        let values = [other.condition, other.nullspace, other.eigen, other.bond];
        for (slot, value) in slots.into_iter().zip(values) {
            if value.is_some() {
                *slot = value;
            }
        }
    }
}

/// Raw job as it appears in a job file. Unknown top-level keys are ignored,
/// so a report can be fed back as a job.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
pub struct JobSpec {
    pub command: Option<Command>,
    #[serde(default)]
    pub params: ParamSpec,
    #[serde(default)]
    pub angles: AngleSpec,
    pub d: Option<usize>,
    pub s: Option<SpinSpec>,
    pub two_s: Option<u32>,
    pub extents: Option<Vec<usize>>,
    #[serde(default)]
    pub tolerances: ToleranceSpec,
    #[serde(default)]
    pub sweep: SweepSpec,
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input { name: "MalformedJson", message: e.to_string() })
    }

    /// Entries present in `other` replace those in `self`.
    pub fn overlay(&mut self, other: &JobSpec) {
        if other.command.is_some() {
            self.command = other.command;
        }
        self.params.overlay(&other.params);
        self.angles.overlay(&other.angles);
        if other.d.is_some() {
            self.d = other.d;
        }
        if other.s.is_some() || other.two_s.is_some() {
            self.s = other.s.clone();
            self.two_s = other.two_s;
        }
        if other.extents.is_some() {
            self.extents = other.extents.clone();
        }
        self.tolerances.overlay(&other.tolerances);
        self.sweep.overlay(&other.sweep);
    }

    pub fn resolve(&self) -> Result<Job, CliError> {
        let command = self.command.ok_or_else(|| CliError::input("no command given"))?;
        let spin = match (&self.s, self.two_s) {
            (Some(s), Some(two_s)) => {
                let spin = s.resolve()?;
                if spin.two_s() != two_s {
                    return Err(CliError::input(format!("s = {spin} disagrees with two_s = {two_s}")));
                }
                spin
            }
            (Some(s), None) => s.resolve()?,
            (None, Some(two_s)) => Spin::new(two_s)?,
            (None, None) => return Err(CliError::input("spin is missing (give s or two_s)")),
        };
        let lattice = self.extents.as_deref().map(Lattice::new).transpose()?;
        let d = match (self.d, &lattice) {
            (Some(d), Some(l)) if d != l.dim() => {
                return Err(CliError::input(format!("d = {d} disagrees with {} extents", l.dim())))
            }
            (Some(d), _) => d,
            (None, Some(l)) => l.dim(),
            (None, None) => return Err(CliError::input("lattice dimension is missing (give d or extents)")),
        };
        let ctx = ModelContext::new(d, spin)?;
        let params = if self.params.is_empty() { None } else { Some(self.params.complete()?) };
        let angles = if self.angles.is_empty() { None } else { Some(self.angles.complete()?) };
        let tol = &self.tolerances;
        let tolerances = Tolerances {
            condition: tol.condition.unwrap_or(CONDITION_TOLERANCE),
            nullspace: tol.nullspace.unwrap_or(NULLSPACE_TOLERANCE),
            eigen: tol.eigen.unwrap_or(Tolerances::EIGEN),
            bond: tol.bond.unwrap_or(Tolerances::BOND),
        };
        for (name, value) in [
            ("condition", tolerances.condition),
            ("nullspace", tolerances.nullspace),
            ("eigen", tolerances.eigen),
            ("bond", tolerances.bond),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(CliError::input(format!("tolerance {name} must be positive, got {value}")));
            }
        }
        let sweep = Sweep {
            direction: match self.sweep.direction {
                Some(DirectionSpec::Vector(v)) => Some(v),
                Some(DirectionSpec::Named(named)) => Some(named.or_zero()),
                None => None,
            },
            range: self.sweep.range,
            samples: self.sweep.samples.unwrap_or(Sweep::DEFAULT_SAMPLES),
        };
        Ok(Job { command, ctx, lattice, params, angles, tolerances, sweep })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub condition: f64,
    pub nullspace: f64,
    pub eigen: f64,
    pub bond: f64,
}

impl Tolerances {
    pub const EIGEN: f64 = 1e-10;
    pub const BOND: f64 = 1e-10;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub direction: Option<[f64; 6]>,
    pub range: Option<[f64; 2]>,
    pub samples: usize,
}

impl Sweep {
    pub const DEFAULT_SAMPLES: usize = 1000;
}

/// A validated job. Command-specific requirements are checked on use.
#[derive(Debug, Clone)]
pub struct Job {
    pub command: Command,
    pub ctx: ModelContext,
    pub lattice: Option<Lattice>,
    pub params: Option<Params>,
    pub angles: Option<NeelAngles>,
    pub tolerances: Tolerances,
    pub sweep: Sweep,
}

impl Job {
    pub fn params(&self) -> Result<Params, CliError> {
        let p = self.params.ok_or_else(|| CliError::input(format!("{} needs params", self.command)))?;
        p.validate()?;
        Ok(p)
    }

    pub fn angles(&self) -> Result<NeelAngles, CliError> {
        self.angles.ok_or_else(|| CliError::input(format!("{} needs angles", self.command)))
    }

    pub fn lattice(&self) -> Result<&Lattice, CliError> {
        self.lattice.as_ref().ok_or_else(|| CliError::input(format!("{} needs extents", self.command)))
    }
}
