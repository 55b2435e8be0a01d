//! Single-site spin algebra in the `S^z` eigenbasis.
//!
//! Basis vectors are ordered by descending magnetic quantum number,
//! `m = s, s-1, ..., -s`, so index `k` carries `m = s - k`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Below this `sin(theta)` the azimuth carries no information.
pub const POLE_SIN_TOLERANCE: f64 = 1e-12;

/// Spin quantum number stored as the integer `2s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spin {
    two_s: u32,
}

impl Spin {
    pub const HALF: Spin = Spin { two_s: 1 };
    pub const ONE: Spin = Spin { two_s: 2 };

    pub fn new(two_s: u32) -> Result<Self> {
        if two_s == 0 {
            return Err(Error::InvalidSpin(two_s));
        }
        Ok(Spin { two_s })
    }

    /// Accepts `s` only if `2s` is exactly a positive integer.
    pub fn from_f64(s: f64) -> Result<Self> {
        let doubled = 2.0 * s;
        if !doubled.is_finite() || doubled < 1.0 || doubled.fract() != 0.0 || doubled > u32::MAX as f64 {
            return Err(Error::NonHalfInteger(s.to_string()));
        }
        Spin::new(doubled as u32)
    }

    pub fn two_s(self) -> u32 {
        self.two_s
    }

    pub fn value(self) -> f64 {
        self.two_s as f64 / 2.0
    }

    /// Local Hilbert space dimension `2s + 1`.
    pub fn multiplicity(self) -> usize {
        self.two_s as usize + 1
    }

    /// Magnetic quantum number of basis index `k`.
    pub fn m(self, k: usize) -> f64 {
        self.value() - k as f64
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.two_s.is_multiple_of(2) {
            write!(f, "{}", self.two_s / 2)
        } else {
            write!(f, "{}/2", self.two_s)
        }
    }
}

impl FromStr for Spin {
    type Err = Error;

    /// Parses `"1/2"`-style fractions or exact decimals such as `"0.5"`, `"1"`, `"1.5"`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::NonHalfInteger(text.to_string());
        if let Some((num, den)) = text.split_once('/') {
            let num: u32 = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "2" => Spin::new(num),
                "1" => num.checked_mul(2).ok_or_else(bad).and_then(Spin::new),
                _ => Err(bad()),
            };
        }
        let (int_part, frac_part) = text.split_once('.').unwrap_or((text, ""));
        let whole: u32 = int_part.parse().map_err(|_| bad())?;
        let half = match frac_part.trim_end_matches('0') {
            "" => 0,
            "5" => 1,
            _ => return Err(bad()),
        };
        whole
            .checked_mul(2)
            .and_then(|w| w.checked_add(half))
            .ok_or_else(bad)
            .and_then(|two_s| Spin::new(two_s).map_err(|_| bad()))
    }
}

/// Spin operators `S^x`, `S^y`, `S^z` with hbar = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinMatrices {
    pub sx: DMatrix<Complex64>,
    pub sy: DMatrix<Complex64>,
    pub sz: DMatrix<Complex64>,
}

impl SpinMatrices {
    pub fn dim(&self) -> usize {
        self.sz.nrows()
    }

    pub fn components(&self) -> [&DMatrix<Complex64>; 3] {
        [&self.sx, &self.sy, &self.sz]
    }

    /// `n . S` for a real 3-vector `n`.
    pub fn along(&self, n: [f64; 3]) -> DMatrix<Complex64> {
        &self.sx * Complex64::from(n[0]) + &self.sy * Complex64::from(n[1]) + &self.sz * Complex64::from(n[2])
    }
}

/// Ladder-operator construction: `<m+1|S+|m> = sqrt(s(s+1) - m(m+1))`.
pub fn spin_matrices(spin: Spin) -> SpinMatrices {
    let n = spin.multiplicity();
    let s = spin.value();
    let mut raise = DMatrix::<Complex64>::zeros(n, n);
    for k in 1..n {
        let m = spin.m(k);
        raise[(k - 1, k)] = Complex64::from((s * (s + 1.0) - m * (m + 1.0)).sqrt());
    }
    let lower = raise.adjoint();
    let half = Complex64::from(0.5);
    let sx = (&raise + &lower) * half;
    let sy = (&raise - &lower) * Complex64::new(0.0, -0.5);
    let sz = DMatrix::from_fn(n, n, |i, j| if i == j { Complex64::from(spin.m(i)) } else { Complex64::from(0.0) });
    SpinMatrices { sx, sy, sz }
}

/// A point on the unit sphere: polar angle in `[0, pi]`, azimuth in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    pub const UP: Direction = Direction { theta: 0.0, phi: 0.0 };
    pub const DOWN: Direction = Direction { theta: PI, phi: 0.0 };

    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::InvalidDirection(format!("non-finite angle ({theta}, {phi})")));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::InvalidDirection(format!("theta = {theta} outside [0, pi]")));
        }
        let phi = if theta == 0.0 || theta == PI { 0.0 } else { wrap_angle(phi) };
        Ok(Direction { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// Largest of `|dtheta|` and the wrapped `|dphi|`; the azimuth is skipped
    /// when either direction sits on a pole.
    pub fn angle_error(&self, other: &Direction) -> f64 {
        let dtheta = (self.theta - other.theta).abs();
        if self.theta.sin() < POLE_SIN_TOLERANCE || other.theta.sin() < POLE_SIN_TOLERANCE {
            return dtheta;
        }
        dtheta.max(wrap_angle(self.phi - other.phi).abs())
    }
}

/// Maps an angle into `(-pi, pi]`.
pub fn wrap_angle(angle: f64) -> f64 {
    let mut a = angle.rem_euclid(2.0 * PI);
    if a > PI {
        a -= 2.0 * PI;
    }
    a
}

fn binomial(n: u32, k: u32) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Spin coherent state pointing along `dir`:
/// `c_m = sqrt(C(2s, s-m)) cos(theta/2)^(s+m) sin(theta/2)^(s-m) exp(-i m phi)`.
pub fn coherent_state(spin: Spin, dir: Direction) -> Vec<Complex64> {
    let two_s = spin.two_s();
    let (sin_half, cos_half) = (dir.theta / 2.0).sin_cos();
    (0..spin.multiplicity())
        .map(|k| {
            let down = k as i32;
            let up = two_s as i32 - down;
            let magnitude = binomial(two_s, k as u32).sqrt() * cos_half.powi(up) * sin_half.powi(down);
            Complex64::from_polar(magnitude, -spin.m(k) * dir.phi)
        })
        .collect()
}

/// `<state| op |state>`.
pub fn expectation(state: &[Complex64], op: &DMatrix<Complex64>) -> Result<Complex64> {
    if op.nrows() != state.len() || op.ncols() != state.len() {
        return Err(Error::DimensionMismatch { expected: op.nrows().max(op.ncols()), got: state.len() });
    }
    let mut total = Complex64::from(0.0);
    for (i, bra) in state.iter().enumerate() {
        let row: Complex64 = state.iter().enumerate().map(|(j, ket)| op[(i, j)] * ket).sum();
        total += bra.conj() * row;
    }
    Ok(total)
}
