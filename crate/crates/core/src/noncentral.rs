//! Angular part of the Coulomb plus `−c·cot θ / r²` problem.
//!
//! With `θ = 2·arctan(eᶻ)` (so `sinh z = −cot θ`) the polar equation becomes a
//! Scarf II problem whose parameters satisfy
//! `l(l+1) = a(a+1) − b²`, `c = −b(2a+1)`, `m² = (a − n)²`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polycore::{int, rat, to_f64, Rational};
use crate::quadrature::{integrate_line, QuadratureSpec};
use crate::romanovski::{romanovski, RomanovskiParams};
use crate::scarf::{wavefunction_ii, ScarfParams, WaveFunction};

/// `z = ln tan(θ/2)`, equivalently `sinh z = −cot θ`.
pub fn theta_to_z(theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::Domain(format!("θ must lie in (0, π), got {theta}")));
    }
    Ok((0.5 * theta).tan().ln())
}

/// `θ = 2·arctan(eᶻ)`.
pub fn z_to_theta(z: f64) -> f64 {
    2.0 * z.exp().atan()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// `(a, b)` from `(l, c)`; `n` supplied.
    ClosedInLc,
    /// `a = m + n`, `b = −c/(2a+1)`; `l` follows.
    MnBased,
    /// `a = b = l(l+1)`, `n = a − m`, integer `l`.
    #[default]
    LOnly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AngularProblem {
    pub l: f64,
    pub m: f64,
    pub c: f64,
    pub a: f64,
    pub b: f64,
    pub n: u32,
    pub strategy: Strategy,
    /// Exact `(a, b)` when the strategy yields rationals.
    pub exact: Option<(Rational, Rational)>,
}

/// Residuals of the three defining constraints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstraintResiduals {
    pub separation: f64,
    pub strength: f64,
    pub azimuthal: f64,
}

impl ConstraintResiduals {
    pub fn max(&self) -> f64 {
        self.separation.abs().max(self.strength.abs()).max(self.azimuthal.abs())
    }
}

impl AngularProblem {
    pub fn residuals(&self) -> ConstraintResiduals {
        let (a, b, n) = (self.a, self.b, self.n as f64);
        ConstraintResiduals {
            separation: self.l * (self.l + 1.0) + (b * b - a * (a + 1.0)),
            strength: self.c + b * (2.0 * a + 1.0),
            azimuthal: self.m * self.m - (a - n) * (a - n),
        }
    }

    /// Scarf II parameters at `α = 1`.
    pub fn scarf(&self) -> Result<ScarfParams> {
        let (a, b) = match &self.exact {
            Some((a, b)) => (a.clone(), b.clone()),
            None => (
                Rational::from_float(self.a).ok_or(Error::NonFinite(self.a))?,
                Rational::from_float(self.b).ok_or(Error::NonFinite(self.b))?,
            ),
        };
        ScarfParams::unit(a, b)
    }
}

fn bound_check(a: f64, n: u32) -> Result<()> {
    if (n as f64) < a {
        Ok(())
    } else {
        Err(Error::UnboundState { n, bound: a.to_string() })
    }
}

/// `(a+½)² = ½((l+½)² + √((l+½)⁴ + c²))`, `b = −c/(2a+1)`, `m = a − n`.
pub fn solve_closed_in_lc(l: f64, c: f64, n: u32) -> Result<AngularProblem> {
    if !(l >= 0.0) {
        return Err(Error::InvalidParameter(format!("l must be non-negative, got {l}")));
    }
    let s = (l + 0.5).powi(2);
    let a = (0.5 * (s + (s * s + c * c).sqrt())).sqrt() - 0.5;
    let b = -c / (2.0 * a + 1.0);
    bound_check(a, n)?;
    let exact = if c == 0.0 {
        Rational::from_float(l).map(|l| (l, Rational::zero()))
    } else {
        None
    };
    Ok(AngularProblem { l, m: a - n as f64, c, a, b, n, strategy: Strategy::ClosedInLc, exact })
}

/// `a = m + n`, `b = −c/(2a+1)`, `l = −½ + √(¼ + a(a+1) − b²)`.
pub fn solve_mn_based(m: &Rational, n: u32, c: &Rational) -> Result<AngularProblem> {
    if !m.is_positive() {
        return Err(Error::InvalidParameter(format!("m must be positive, got {m}")));
    }
    let a = m + int(n as i64);
    let b = -(c / (int(2) * &a + int(1)));
    let radicand = rat(1, 4) + &a * (&a + int(1)) - &b * &b;
    if radicand.is_negative() {
        return Err(Error::Domain(format!("l(l+1) = a(a+1) − b² is below −1/4 (radicand {radicand})")));
    }
    let l = -0.5 + to_f64(&radicand).sqrt();
    Ok(AngularProblem {
        l,
        m: to_f64(m),
        c: to_f64(c),
        a: to_f64(&a),
        b: to_f64(&b),
        n,
        strategy: Strategy::MnBased,
        exact: Some((a, b)),
    })
}

/// `a = b = l(l+1)`, `n = l(l+1) − m`, `c = −b(2a+1)`.
pub fn solve_l_only(l: u32, m: u32) -> Result<AngularProblem> {
    let ll = (l as u64) * (l as u64 + 1);
    if m == 0 || m as u64 > ll {
        return Err(Error::InvalidParameter(format!("need 0 < m ≤ l(l+1) = {ll}, got m = {m}")));
    }
    let a = int(ll as i64);
    let c = -(&a * (int(2) * &a + int(1)));
    let n = u32::try_from(ll - m as u64).map_err(|_| Error::InvalidParameter("n overflows".into()))?;
    Ok(AngularProblem {
        l: l as f64,
        m: m as f64,
        c: to_f64(&c),
        a: to_f64(&a),
        b: to_f64(&a),
        n,
        strategy: Strategy::LOnly,
        exact: Some((a.clone(), a)),
    })
}

/// Inputs per strategy.
#[derive(Clone, Debug, PartialEq)]
pub enum StrategyInput {
    ClosedInLc { l: f64, c: f64, n: u32 },
    MnBased { m: Rational, n: u32, c: Rational },
    LOnly { l: u32, m: u32 },
}

pub fn solve_params(input: &StrategyInput) -> Result<AngularProblem> {
    match input {
        StrategyInput::ClosedInLc { l, c, n } => solve_closed_in_lc(*l, *c, *n),
        StrategyInput::MnBased { m, n, c } => solve_mn_based(m, *n, c),
        StrategyInput::LOnly { l, m } => solve_l_only(*l, *m),
    }
}

/// `Θ(θ) = ψₙ(z(θ))` and `Z(θ, φ) = Θ(θ)·e^{imφ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct AngularFunction {
    pub problem: AngularProblem,
    pub wave: WaveFunction,
}

impl AngularFunction {
    pub fn theta_part(&self, theta: f64) -> Result<f64> {
        Ok(self.wave.eval(theta_to_z(theta)?))
    }

    pub fn z(&self, theta: f64, phi: f64) -> Result<Complex64> {
        let t = self.theta_part(theta)?;
        Ok(Complex64::from_polar(1.0, self.problem.m * phi) * t)
    }

    pub fn abs_z(&self, theta: f64) -> Result<f64> {
        Ok(self.theta_part(theta)?.abs())
    }
}

pub fn angular_function(problem: &AngularProblem) -> Result<AngularFunction> {
    let wave = wavefunction_ii(&problem.scarf()?, problem.n)?;
    Ok(AngularFunction { problem: problem.clone(), wave })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Su11Labels {
    pub j: f64,
    pub mprime: f64,
    pub j_exact: Option<Rational>,
    pub mprime_exact: Option<Rational>,
    /// `−(j − ½)²`.
    pub epsilon_from_labels: f64,
    /// `−(a − n)²`.
    pub epsilon: f64,
}

/// `m′ = a + ½`, `j = m′ − n`.
pub fn su11_labels(problem: &AngularProblem) -> Su11Labels {
    let mprime = problem.a + 0.5;
    let j = mprime - problem.n as f64;
    let exact = problem.exact.as_ref().map(|(a, _)| {
        let mp = a + rat(1, 2);
        (&mp - int(problem.n as i64), mp)
    });
    Su11Labels {
        j,
        mprime,
        j_exact: exact.as_ref().map(|e| e.0.clone()),
        mprime_exact: exact.map(|e| e.1),
        epsilon_from_labels: -(j - 0.5).powi(2),
        epsilon: -(problem.a - problem.n as f64).powi(2),
    }
}

/// `P_l^m(x)` without the Condon–Shortley phase, by upward recurrence in `l`.
pub fn assoc_legendre(l: u32, m: u32, x: f64) -> f64 {
    if m > l {
        return 0.0;
    }
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= (2 * k - 1) as f64 * s;
    }
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = x * (2 * m + 1) as f64 * pmm;
    for k in (m + 2)..=l {
        let next = ((2 * k - 1) as f64 * x * cur - (k + m - 1) as f64 * prev) / (k - m) as f64;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(1+cot²θ)^{−l/2} R_{l−m}^{(l+½, 0)}(−cot θ)`.
pub fn legendre_via_romanovski(l: u32, m: u32, theta: f64) -> f64 {
    let params = RomanovskiParams::new(int(l as i64) + rat(1, 2), int(0)).expect("p = l + 1/2 > 0");
    let r = romanovski(&params, l - m);
    let x = -theta.cos() / theta.sin();
    (1.0 + x * x).powf(-(l as f64) / 2.0) * r.eval(x)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BridgeReport {
    pub l: u32,
    pub m: u32,
    pub thetas: Vec<f64>,
    /// Legendre over Romanovski side, at points where Legendre is not
    /// negligible.
    pub ratios: Vec<f64>,
    pub mean: f64,
    /// Standard deviation over `|mean|`.
    pub relative_spread: f64,
}

/// Compares both sides of the Legendre/Romanovski proportionality on
/// `points` angles in `[margin, π − margin]`. `m = 0` is accepted.
pub fn legendre_bridge(l: u32, m: u32, margin: f64, points: usize) -> Result<BridgeReport> {
    if m > l {
        return Err(Error::InvalidParameter(format!("need m ≤ l, got l = {l}, m = {m}")));
    }
    if !(margin > 0.0 && margin < PI / 2.0) || points < 2 {
        return Err(Error::InvalidParameter("margin must lie in (0, π/2) and points ≥ 2".into()));
    }
    let thetas: Vec<f64> = (0..points)
        .map(|i| margin + (PI - 2.0 * margin) * i as f64 / (points - 1) as f64)
        .collect();
    let left: Vec<f64> = thetas.iter().map(|t| assoc_legendre(l, m, t.cos())).collect();
    let peak = left.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let ratios: Vec<f64> = thetas
        .iter()
        .zip(&left)
        .filter(|(_, p)| p.abs() >= 1e-8 * peak)
        .map(|(t, p)| p / legendre_via_romanovski(l, m, *t))
        .collect();
    let k = ratios.len() as f64;
    let mean = ratios.iter().sum::<f64>() / k;
    let var = ratios.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / k;
    Ok(BridgeReport { l, m, thetas, relative_spread: var.sqrt() / mean.abs(), mean, ratios })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthogonalityReport {
    pub value: f64,
    /// `√(I(l,l)·I(l′,l′))`.
    pub norm_scale: f64,
}

impl OrthogonalityReport {
    pub fn relative(&self) -> f64 {
        self.value.abs() / self.norm_scale
    }
}

fn mixed_integral(l: u32, lp: u32, m: u32, spec: &QuadratureSpec) -> Result<f64> {
    let rp = |l: u32| RomanovskiParams::new(int(l as i64) + rat(1, 2), int(0)).expect("p > 0");
    let r = romanovski(&rp(l), l - m);
    let rq = romanovski(&rp(lp), lp - m);
    let s = -((l + lp + 1) as f64) / 2.0 - 1.0;
    Ok(integrate_line(|x| (1.0 + x * x).powf(s) * r.eval(x) * rq.eval(x), spec)?.value)
}

/// `∫ √w_l √w_{l′} R_{l−m}^{(l+½,0)} R_{l′−m}^{(l′+½,0)} dx/(1+x²)`,
/// `w_l = (1+x²)^{−(l+½)}`.
pub fn infinite_orthogonality(l: u32, lp: u32, m: u32, spec: &QuadratureSpec) -> Result<OrthogonalityReport> {
    if m > l || m > lp {
        return Err(Error::InvalidParameter(format!("need m ≤ l, l′; got ({l}, {lp}, {m})")));
    }
    let value = mixed_integral(l, lp, m, spec)?;
    let norm_scale = (mixed_integral(l, l, m, spec)? * mixed_integral(lp, lp, m, spec)?).sqrt();
    Ok(OrthogonalityReport { value, norm_scale })
}

/// `−1/(2(n_r + l + 1)²)` in units `Z = e = μ = ħ = 1`.
pub fn coulomb_energy(n_r: u32, l: f64) -> Result<f64> {
    if !(l > -1.0) {
        return Err(Error::InvalidParameter(format!("need l > −1, got {l}")));
    }
    Ok(-0.5 / (n_r as f64 + l + 1.0).powi(2))
}
