//! Closed-form solutions of the Pearson equation `(σW)′ = τW`.

use num_complex::Complex64;
use num_traits::Zero;

use super::HypergeqParams;
use crate::error::{Error, Result};
use crate::polycore::{int, to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightKind {
    TwoLinearFactors,
    RepeatedFactor,
    IrreducibleQuadratic,
    ExponentialLimit,
}

/// Weight up to a constant factor. Rational data are kept exact; the only
/// irrational ingredient (a square root of a rational) is taken at
/// evaluation time.
#[derive(Clone, Debug, PartialEq)]
pub enum ClosedWeight {
    /// `|x−m+h|^{s−t/h} · |x−m−h|^{s+t/h}` with `h = √half_gap_sq`.
    TwoLinearFactors { center: Rational, half_gap_sq: Rational, sym: Rational, asym: Rational },
    /// `|x−r|^s · exp(k/(x−r))`.
    RepeatedFactor { root: Rational, exponent: Rational, pole: Rational },
    /// `((x−m)² + w²)^s · exp((C/w)·arctan((x−m)/w))` with `w = √width_sq`.
    IrreducibleQuadratic { center: Rational, width_sq: Rational, exponent: Rational, arc: Rational },
    /// `|x−r|^s · exp(lin·x + quad·x²)`; `root = None` means no algebraic factor.
    ExponentialLimit { root: Option<Rational>, exponent: Rational, lin: Rational, quad: Rational },
}

/// Closed weight for a tuple, selected by `a` and the sign of `b² − 4ac`.
pub fn pearson_weight(p: &HypergeqParams) -> Result<ClosedWeight> {
    let (a, b, c, d, e) = (&p.a, &p.b, &p.c, &p.d, &p.e);
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::DegenerateSigma);
    }
    if a.is_zero() {
        if b.is_zero() {
            return Ok(ClosedWeight::ExponentialLimit {
                root: None,
                exponent: int(0),
                lin: e / c,
                quad: d / (int(2) * c),
            });
        }
        let root = -(c / b);
        let exponent = (e - b - d * c / b) / b;
        return Ok(ClosedWeight::ExponentialLimit { root: Some(root), exponent, lin: d / b, quad: int(0) });
    }
    let disc = p.discriminant();
    let center = -(b / (int(2) * a));
    let shifted = (d - int(2) * a) * &center + e - b;
    if disc.is_zero() {
        return Ok(ClosedWeight::RepeatedFactor {
            root: center,
            exponent: (d - int(2) * a) / a,
            pole: -(&shifted / a),
        });
    }
    let four_a2 = int(4) * a * a;
    let sym = (d - int(2) * a) / (int(2) * a);
    if disc > int(0) {
        Ok(ClosedWeight::TwoLinearFactors {
            center,
            half_gap_sq: disc / four_a2,
            sym,
            asym: shifted / (int(2) * a),
        })
    } else {
        Ok(ClosedWeight::IrreducibleQuadratic {
            center,
            width_sq: -disc / four_a2,
            exponent: sym,
            arc: shifted / a,
        })
    }
}

/// `|z − r|^s` continued analytically from the real side that `z` sits on.
fn abs_pow(z: Complex64, r: f64, s: f64) -> Complex64 {
    let u = z - r;
    if u.re >= 0.0 {
        u.powf(s)
    } else {
        (-u).powf(s)
    }
}

/// `arctan` that keeps a tiny imaginary part intact (the library version
/// goes through `ln(1 ± iz)` and rounds it away).
fn catan(z: Complex64) -> Complex64 {
    if z.im.abs() < 1e-8 * (1.0 + z.re.abs()) {
        Complex64::new(z.re.atan(), z.im / (1.0 + z.re * z.re))
    } else {
        z.atan()
    }
}

impl ClosedWeight {
    pub fn kind(&self) -> WeightKind {
        match self {
            ClosedWeight::TwoLinearFactors { .. } => WeightKind::TwoLinearFactors,
            ClosedWeight::RepeatedFactor { .. } => WeightKind::RepeatedFactor,
            ClosedWeight::IrreducibleQuadratic { .. } => WeightKind::IrreducibleQuadratic,
            ClosedWeight::ExponentialLimit { .. } => WeightKind::ExponentialLimit,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_complex(Complex64::new(x, 0.0)).re
    }

    /// Holomorphic extension near the real axis (used for complex-step
    /// differentiation).
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        match self {
            ClosedWeight::TwoLinearFactors { center, half_gap_sq, sym, asym } => {
                let (m, h) = (to_f64(center), to_f64(half_gap_sq).sqrt());
                let (s, t) = (to_f64(sym), to_f64(asym));
                abs_pow(z, m - h, s - t / h) * abs_pow(z, m + h, s + t / h)
            }
            ClosedWeight::RepeatedFactor { root, exponent, pole } => {
                let r = to_f64(root);
                abs_pow(z, r, to_f64(exponent)) * (to_f64(pole) / (z - r)).exp()
            }
            ClosedWeight::IrreducibleQuadratic { center, width_sq, exponent, arc } => {
                let (m, w) = (to_f64(center), to_f64(width_sq).sqrt());
                let u = z - m;
                (u * u + w * w).powf(to_f64(exponent)) * (catan(u / w) * (to_f64(arc) / w)).exp()
            }
            ClosedWeight::ExponentialLimit { root, exponent, lin, quad } => {
                let alg = match root {
                    Some(r) => abs_pow(z, to_f64(r), to_f64(exponent)),
                    None => Complex64::new(1.0, 0.0),
                };
                alg * (z * to_f64(lin) + z * z * to_f64(quad)).exp()
            }
        }
    }

    /// Relative residual of `(σW)′ − τW` at `x`, derivatives by complex step.
    pub fn pearson_residual(&self, params: &HypergeqParams, x: f64) -> f64 {
        const H: f64 = 1e-30;
        let sigma = |z: Complex64| z * z * to_f64(&params.a) + z * to_f64(&params.b) + to_f64(&params.c);
        let zh = Complex64::new(x, H);
        let w = self.eval(x);
        let dw = self.eval_complex(zh).im / H;
        let dsw = (sigma(zh) * self.eval_complex(zh)).im / H;
        let s = sigma(Complex64::new(x, 0.0)).re;
        let tau = to_f64(&params.d) * x + to_f64(&params.e);
        let ds = 2.0 * to_f64(&params.a) * x + to_f64(&params.b);
        let scale = (ds * w).abs().max((s * dw).abs()).max((tau * w).abs());
        if scale == 0.0 {
            return 0.0;
        }
        (dsw - tau * w).abs() / scale
    }
}
