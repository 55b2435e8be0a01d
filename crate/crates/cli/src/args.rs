use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::CliError;
use crate::job::{
    AngleSpec, AngleUnit, Command, DirectionSpec, JobSpec, ParamSpec, SpinSpec, SweepSpec, ToleranceSpec,
};

#[derive(Debug, Parser)]
#[command(name = "neel", version, about = "Factorized Neel eigenstates of the XYZ model in a field")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Evaluate the factorization condition for a parameter set
    Check(JobArgs),
    /// Sublattice directions for parameters on the factorization surface
    Angles(JobArgs),
    /// Parameter sets for which given directions form an eigenstate
    Params(JobArgs),
    /// Apply the lattice Hamiltonian to the Neel state and report residuals
    Verify(JobArgs),
    /// Roots of the condition along a line in parameter space
    Sweep(JobArgs),
    /// Full spectrum of a small lattice by dense diagonalization
    Spectrum(JobArgs),
}

impl CommandArgs {
    pub fn split(&self) -> (Command, &JobArgs) {
        match self {
            CommandArgs::Check(a) => (Command::Check, a),
            CommandArgs::Angles(a) => (Command::Angles, a),
            CommandArgs::Params(a) => (Command::Params, a),
            CommandArgs::Verify(a) => (Command::Verify, a),
            CommandArgs::Sweep(a) => (Command::Sweep, a),
            CommandArgs::Spectrum(a) => (Command::Spectrum, a),
        }
    }
}

/// Flags override the corresponding entries of `--job`.
#[derive(Debug, Args)]
pub struct JobArgs {
    /// JSON job file
    #[arg(long)]
    pub job: Option<PathBuf>,

    #[arg(long = "Jx", allow_negative_numbers = true)]
    pub jx: Option<f64>,
    #[arg(long = "Jy", allow_negative_numbers = true)]
    pub jy: Option<f64>,
    #[arg(long = "Jz", allow_negative_numbers = true)]
    pub jz: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub hx: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub hy: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub hz: Option<f64>,

    /// Lattice dimension
    #[arg(long)]
    pub d: Option<usize>,
    /// Spin as "0.5", "1", "3/2", ...
    #[arg(long)]
    pub s: Option<String>,
    /// Periodic extents, e.g. 4 or 2,4
    #[arg(long, value_delimiter = ',')]
    pub extents: Option<Vec<usize>>,

    #[arg(long, allow_negative_numbers = true)]
    pub theta1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub phi1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub theta2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub phi2: Option<f64>,
    /// Angles are in degrees
    #[arg(long)]
    pub deg: bool,

    /// Sweep direction as six comma-separated numbers (Jx,Jy,Jz,hx,hy,hz)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub direction: Option<Vec<f64>>,
    /// Sweep range as lo,hi
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub range: Option<Vec<f64>>,
    #[arg(long)]
    pub samples: Option<usize>,

    #[arg(long)]
    pub condition_tol: Option<f64>,
    #[arg(long)]
    pub nullspace_tol: Option<f64>,
    #[arg(long)]
    pub eigen_tol: Option<f64>,
    #[arg(long)]
    pub bond_tol: Option<f64>,
}

impl JobArgs {
    /// The flags as a partial job.
    pub fn to_spec(&self, command: Command) -> Result<JobSpec, CliError> {
        let direction = match &self.direction {
            Some(v) => Some(DirectionSpec::Vector(
                v.as_slice()
                    .try_into()
                    .map_err(|_| CliError::input(format!("--direction needs 6 values, got {}", v.len())))?,
            )),
            None => None,
        };
        let range = match &self.range {
            Some(v) => Some(
                v.as_slice()
                    .try_into()
                    .map_err(|_| CliError::input(format!("--range needs 2 values, got {}", v.len())))?,
            ),
            None => None,
        };
        Ok(JobSpec {
            command: Some(command),
            params: ParamSpec { jx: self.jx, jy: self.jy, jz: self.jz, hx: self.hx, hy: self.hy, hz: self.hz },
            angles: AngleSpec {
                theta1: self.theta1,
                phi1: self.phi1,
                theta2: self.theta2,
                phi2: self.phi2,
                unit: self.deg.then_some(AngleUnit::Deg),
            },
            d: self.d,
            s: self.s.clone().map(SpinSpec::Text),
            two_s: None,
            extents: self.extents.clone(),
            tolerances: ToleranceSpec {
                condition: self.condition_tol,
                nullspace: self.nullspace_tol,
                eigen: self.eigen_tol,
                bond: self.bond_tol,
            },
            sweep: SweepSpec { direction, range, samples: self.samples },
        })
    }
}

/// Job file (if any) overlaid with the flags.
pub fn build_spec(cli: &Cli) -> Result<JobSpec, CliError> {
    let (command, args) = cli.command.split();
    let mut spec = match &args.job {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input { name: "Io", message: format!("{}: {e}", path.display()) })?;
            let spec = JobSpec::from_json(&text)?;
            if let Some(other) = spec.command.filter(|&c| c != command) {
                return Err(CliError::input(format!("job file is for {other}, invoked as {command}")));
            }
            spec
        }
        None => JobSpec::default(),
    };
    spec.overlay(&args.to_spec(command)?);
    Ok(spec)
}
