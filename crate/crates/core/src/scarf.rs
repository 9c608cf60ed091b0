//! Trigonometric (I) and hyperbolic (II) Scarf potentials, their spectra and
//! bound-state wavefunctions.
//!
//! Scarf II is solved through the point transformation `x = sinh(αz)`, which
//! maps the Schrödinger equation onto the Romanovski equation with
//! `p = a/α + 1/2`, `q = −2b/α`. Energies scale with `α²`.

use std::f64::consts::FRAC_PI_2;

use num_traits::{Signed, Zero};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::hypergeq::{rodrigues_poly_any, HypergeqParams};
use crate::polycore::{int, rat, to_f64, ExactPoly, GaussianRational, QArctanForm, Rational};
use crate::quadrature::{integrate_line, QuadratureSpec};
use crate::romanovski::{romanovski, weight, RomanovskiParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Potential {
    ScarfI,
    ScarfII,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScarfParams {
    pub a: Rational,
    pub b: Rational,
    pub alpha: Rational,
}

impl ScarfParams {
    pub fn new(a: Rational, b: Rational, alpha: Rational) -> Result<Self> {
        if !a.is_positive() {
            return Err(Error::InvalidParameter(format!("a must be positive, got {a}")));
        }
        if !alpha.is_positive() {
            return Err(Error::InvalidParameter(format!("alpha must be positive, got {alpha}")));
        }
        Ok(ScarfParams { a, b, alpha })
    }

    /// `α = 1`.
    pub fn unit(a: Rational, b: Rational) -> Result<Self> {
        Self::new(a, b, int(1))
    }

    /// `(a/α, b/α)`, the parameters of the problem in `αz`.
    pub fn reduced(&self) -> (Rational, Rational) {
        (&self.a / &self.alpha, &self.b / &self.alpha)
    }

    /// Romanovski parameters `(a/α + 1/2, −2b/α)`.
    pub fn romanovski(&self) -> RomanovskiParams {
        let (a, b) = self.reduced();
        RomanovskiParams::from_scarf(&a, &b).expect("a > 0 keeps p > 1/2")
    }

    /// Scarf I Jacobi indices `γ = (a−b)/α`, `δ = (a+b)/α`.
    pub fn gamma_delta(&self) -> (Rational, Rational) {
        ((&self.a - &self.b) / &self.alpha, (&self.a + &self.b) / &self.alpha)
    }

    /// Number of Scarf II bound states, `#{n : nα < a}`.
    pub fn bound_count(&self) -> u32 {
        let (a, _) = self.reduced();
        let c = a.ceil().to_integer();
        u32::try_from(c).unwrap_or(u32::MAX)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyLevel {
    pub n: u32,
    pub epsilon: Rational,
    pub e: Rational,
}

impl EnergyLevel {
    pub fn e_f64(&self) -> f64 {
        to_f64(&self.e)
    }
}

fn sech(x: f64) -> f64 {
    1.0 / x.cosh()
}

/// `a² + (b² − a² − aα)sech²αz + b(2a+α)sech αz tanh αz`.
pub fn potential_ii(params: &ScarfParams, z: f64) -> f64 {
    let (a, b, al) = (to_f64(&params.a), to_f64(&params.b), to_f64(&params.alpha));
    let s = sech(al * z);
    a * a + (b * b - a * a - a * al) * s * s + b * (2.0 * a + al) * s * (al * z).tanh()
}

/// `−a² + (a² + b² − aα)sec²αz − b(2a−α)tan αz sec αz` on `|αz| < π/2`.
pub fn potential_i(params: &ScarfParams, z: f64) -> Result<f64> {
    let (a, b, al) = (to_f64(&params.a), to_f64(&params.b), to_f64(&params.alpha));
    let t = al * z;
    if !(t.abs() < FRAC_PI_2) {
        return Err(Error::Domain(format!("Scarf I needs |αz| < π/2, got αz = {t}")));
    }
    let sec = 1.0 / t.cos();
    Ok(-a * a + (a * a + b * b - a * al) * sec * sec - b * (2.0 * a - al) * t.tan() * sec)
}

/// `εₙ = −(a − nα)²`, `eₙ = εₙ + a²`, for every `n` with `nα < a`.
pub fn spectrum_ii(params: &ScarfParams) -> Vec<EnergyLevel> {
    let a2 = &params.a * &params.a;
    (0..params.bound_count())
        .map(|n| {
            let gap = &params.a - int(n as i64) * &params.alpha;
            let epsilon = -(&gap * &gap);
            EnergyLevel { n, e: &epsilon + &a2, epsilon }
        })
        .collect()
}

/// `εₙ = (a + nα)²`, `eₙ = εₙ − a²`, for `n = 0..=n_max`.
pub fn spectrum_i(params: &ScarfParams, n_max: u32) -> Vec<EnergyLevel> {
    let a2 = &params.a * &params.a;
    (0..=n_max)
        .map(|n| {
            let s = &params.a + int(n as i64) * &params.alpha;
            let epsilon = &s * &s;
            EnergyLevel { n, e: &epsilon - &a2, epsilon }
        })
        .collect()
}

/// `(ia + n(−i))²` in exact Gaussian arithmetic: the Scarf I level under
/// `a → ia`, `α → −iα` at `α = 1`.
pub fn rotated_scarf_i_level(a: &Rational, n: u32) -> GaussianRational {
    let s = GaussianRational::new(Rational::zero(), a - int(n as i64));
    &s * &s
}

#[derive(Clone, Debug, PartialEq)]
pub enum WaveForm {
    /// `g(x)`, `x = sinh αz`.
    Hyperbolic(QArctanForm),
    /// `√((1−x)^γ(1+x)^δ)·P(x)`, `x = sin αz`, `P` the classical Jacobi
    /// polynomial `Pₙ^{(γ−1/2, δ−1/2)}`.
    Trigonometric { gamma: Rational, delta: Rational, poly: ExactPoly },
}

#[derive(Clone, Debug, PartialEq)]
pub struct WaveFunction {
    pub params: ScarfParams,
    pub level: EnergyLevel,
    pub form: WaveForm,
    /// Multiplies the form so that `∫ψ² dz = 1`.
    pub normalization: f64,
}

impl WaveFunction {
    pub fn potential(&self) -> Potential {
        match self.form {
            WaveForm::Hyperbolic(_) => Potential::ScarfII,
            WaveForm::Trigonometric { .. } => Potential::ScarfI,
        }
    }

    /// Normalized `ψ(z)`. Scarf I returns 0 outside `|αz| < π/2`.
    pub fn eval(&self, z: f64) -> f64 {
        let al = to_f64(&self.params.alpha);
        match &self.form {
            WaveForm::Hyperbolic(g) => self.normalization * g.eval_f64((al * z).sinh()),
            WaveForm::Trigonometric { gamma, delta, poly } => {
                let t = al * z;
                if t.abs() >= FRAC_PI_2 {
                    return 0.0;
                }
                let x = t.sin();
                let env = ((1.0 - x).powf(to_f64(gamma)) * (1.0 + x).powf(to_f64(delta))).sqrt();
                self.normalization * env * poly.eval_f64(x)
            }
        }
    }

    /// Sign changes of `ψ` on a uniform grid (exact zeros are skipped).
    pub fn node_count(&self, z_min: f64, z_max: f64, points: usize) -> usize {
        let mut last = 0.0f64;
        let mut count = 0;
        for i in 0..points {
            let z = z_min + (z_max - z_min) * i as f64 / (points - 1).max(1) as f64;
            let v = self.eval(z);
            if v != 0.0 {
                if last != 0.0 && v.signum() != last.signum() {
                    count += 1;
                }
                last = v;
            }
        }
        count
    }
}

/// `g(x) = (1+x²)^{−a/2} e^{−b·arctan x} Rₙ^{(a+1/2, −2b)}(x)` (in reduced
/// parameters), normalized over `z` and signed positive as `x → +∞`.
pub fn wavefunction_ii(params: &ScarfParams, n: u32) -> Result<WaveFunction> {
    let (a, b) = params.reduced();
    if int(n as i64) >= a {
        return Err(Error::UnboundState { n, bound: a.to_string() });
    }
    let rp = params.romanovski();
    let r = romanovski(&rp, n);
    let form = QArctanForm::new(r.poly.clone(), -(&a / int(2)), -b);
    // ∫ψ² dz = (1/α)∫ w Rₙ² dx
    let spec = QuadratureSpec::default();
    let norm2 = integrate_line(|x| weight(&rp, x) * r.eval(x).powi(2), &spec)?.value / to_f64(&params.alpha);
    let sign = r.poly.leading_coeff().map_or(1.0, |c| if c.is_negative() { -1.0 } else { 1.0 });
    let level = spectrum_ii(params).swap_remove(n as usize);
    Ok(WaveFunction { params: params.clone(), level, form: WaveForm::Hyperbolic(form), normalization: sign / norm2.sqrt() })
}

/// Classical Jacobi `Pₙ^{(ν,μ)}` from the Rodrigues polynomial of the
/// canonical tuple, divided by `(−2)ⁿ n!`.
pub fn jacobi_classical(nu: &Rational, mu: &Rational, n: u32) -> ExactPoly {
    let rod = rodrigues_poly_any(&HypergeqParams::jacobi(nu.clone(), mu.clone()), n)
        .expect("Jacobi σ is nonzero")
        .poly;
    let fact = (1..=n as i64).fold(int(1), |acc, k| acc * int(k));
    let scale = int(-2).pow(n as i32) * fact;
    rod.scale(&(int(1) / scale))
}

/// `ψₙ = √((1−x)^γ(1+x)^δ) Pₙ^{(γ−1/2, δ−1/2)}(x)`, `x = sin αz`.
pub fn wavefunction_i(params: &ScarfParams, n: u32) -> Result<WaveFunction> {
    let (gamma, delta) = params.gamma_delta();
    if !gamma.is_positive() || !delta.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "Scarf I needs γ, δ > 0 for normalizable states, got γ = {gamma}, δ = {delta}"
        )));
    }
    let half = rat(1, 2);
    let (nu, mu) = (&gamma - &half, &delta - &half);
    let poly = jacobi_classical(&nu, &mu, n);
    // ∫ψ² dz = (1/α) h_n, h_n the classical Jacobi norm
    let (nf, nuf, muf) = (n as f64, to_f64(&nu), to_f64(&mu));
    let ln_h = (nuf + muf + 1.0) * std::f64::consts::LN_2 + ln_gamma(nf + nuf + 1.0) + ln_gamma(nf + muf + 1.0)
        - (2.0 * nf + nuf + muf + 1.0).ln()
        - ln_gamma(nf + 1.0)
        - ln_gamma(nf + nuf + muf + 1.0);
    let norm2 = ln_h.exp() / to_f64(&params.alpha);
    let level = spectrum_i(params, n).swap_remove(n as usize);
    Ok(WaveFunction {
        params: params.clone(),
        level,
        form: WaveForm::Trigonometric { gamma, delta, poly },
        normalization: 1.0 / norm2.sqrt(),
    })
}

/// Stable `ln cosh t`.
fn ln_cosh(t: f64) -> f64 {
    let u = t.abs();
    u + (-2.0 * u).exp().ln_1p() - std::f64::consts::LN_2
}

/// `exp(−∫U)` with `U = a tanh αz + b sech αz`, using
/// `∫U dz = (a/α) ln cosh αz + (2b/α) arctan(tanh(αz/2))`.
pub fn susy_groundstate(params: &ScarfParams, z_samples: &[f64]) -> Vec<f64> {
    let (a, b, al) = (to_f64(&params.a), to_f64(&params.b), to_f64(&params.alpha));
    z_samples
        .iter()
        .map(|&z| (-(a / al) * ln_cosh(al * z) - (2.0 * b / al) * (0.5 * al * z).tanh().atan()).exp())
        .collect()
}

/// Superpotential `U(z) = a tanh αz + b sech αz`.
pub fn superpotential(params: &ScarfParams, z: f64) -> f64 {
    let (a, b, al) = (to_f64(&params.a), to_f64(&params.b), to_f64(&params.alpha));
    a * (al * z).tanh() + b * sech(al * z)
}

/// Exact residual of
/// `(1+x²)g″ + xg′ + [(a(a+1) − b² − b(2a+1)x)/(1+x²) + ε]g`
/// for `g = gₙ` (reduced parameters) and the given `ε`.
pub fn schrodinger_residual_ii_with(params: &ScarfParams, n: u32, epsilon: &Rational) -> Result<QArctanForm> {
    let (a, b) = params.reduced();
    let r = romanovski(&params.romanovski(), n);
    let g = QArctanForm::new(r.poly, -(&a / int(2)), -b.clone());
    let g1 = g.deriv();
    let g2 = g1.deriv();
    let t1 = g2.mul_poly(&ExactPoly::one_plus_x2());
    let t2 = g1.mul_poly(&ExactPoly::x());
    let centrifugal = ExactPoly::linear(&a * (&a + int(1)) - &b * &b, -(&b * (int(2) * &a + int(1))));
    let t3 = QArctanForm::new(&g.poly * &centrifugal, &g.power - int(1), g.arc.clone());
    let t4 = g.scale(epsilon);
    t1.try_add(&t2)?.try_add(&t3)?.try_add(&t4)
}

/// Residual at the analytic `εₙ = −(a − n)²` (reduced parameters).
pub fn schrodinger_residual_ii(params: &ScarfParams, n: u32) -> Result<QArctanForm> {
    let (a, _) = params.reduced();
    if int(n as i64) >= a {
        return Err(Error::UnboundState { n, bound: a.to_string() });
    }
    let gap = &a - int(n as i64);
    schrodinger_residual_ii_with(params, n, &-(&gap * &gap))
}
