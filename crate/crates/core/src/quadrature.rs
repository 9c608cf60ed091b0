//! Integration over the whole real line, gamma function support, and the
//! Gram matrices that witness finite orthogonality.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::romanovski::{orthogonal_pair, romanovski, weight, RomanovskiParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    GaussLegendre,
    AdaptiveSimpson,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Transform {
    /// `x = tan φ` on `(−π/2, π/2)`.
    ArctanCompactification,
    /// `[−X, X]`, split into geometrically growing panels.
    Truncated(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub rule: Rule,
    /// Gauss-Legendre: nodes per panel. Adaptive Simpson: recursion depth cap.
    pub nodes: usize,
    pub transform: Transform,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { rule: Rule::GaussLegendre, nodes: 256, transform: Transform::ArctanCompactification }
    }
}

impl QuadratureSpec {
    pub fn new(rule: Rule, nodes: usize, transform: Transform) -> Result<Self> {
        if nodes < 2 {
            return Err(Error::InvalidParameter(format!("need at least 2 nodes, got {nodes}")));
        }
        if let Transform::Truncated(x) = transform {
            if !(x > 0.0 && x.is_finite()) {
                return Err(Error::InvalidParameter(format!("truncation X must be positive, got {x}")));
            }
        }
        Ok(QuadratureSpec { rule, nodes, transform })
    }

    pub fn truncated(x: f64) -> Result<Self> {
        Self::new(Rule::GaussLegendre, 64, Transform::Truncated(x))
    }
}

/// Value with an error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[−1, 1]`,
/// ascending in `x`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = vec![(0.0, 0.0); n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = x;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out[i] = (-x, w);
        out[n - 1 - i] = (x, w);
    }
    out
}

fn gl_interval<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, rule: &[(f64, f64)]) -> Result<f64> {
    let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    let mut acc = 0.0;
    for &(t, w) in rule {
        let x = mid + half * t;
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFinite(x));
        }
        acc += w * v;
    }
    Ok(acc * half)
}

/// Panel edges `0, 1, 2, 4, …, X` (mirrored by the caller).
fn geometric_panels(x_max: f64) -> Vec<f64> {
    let mut edges = vec![0.0];
    let mut e = 1.0f64.min(x_max);
    loop {
        edges.push(e);
        if e >= x_max {
            return edges;
        }
        e = (2.0 * e).min(x_max);
    }
}

fn gl_line<F: Fn(f64) -> f64>(f: &F, nodes: usize, transform: Transform) -> Result<f64> {
    let rule = gauss_legendre(nodes);
    match transform {
        Transform::ArctanCompactification => {
            let g = |phi: f64| {
                let (s, c) = phi.sin_cos();
                f(s / c) / (c * c)
            };
            gl_interval(&g, -FRAC_PI_2, FRAC_PI_2, &rule)
        }
        Transform::Truncated(x_max) => {
            let edges = geometric_panels(x_max);
            let mut acc = 0.0;
            for w in edges.windows(2) {
                acc += gl_interval(f, w[0], w[1], &rule)?;
                acc += gl_interval(f, -w[1], -w[0], &rule)?;
            }
            Ok(acc)
        }
    }
}

struct Simpson<'a, F: Fn(f64) -> f64> {
    f: &'a F,
    max_depth: usize,
}

impl<F: Fn(f64) -> f64> Simpson<'_, F> {
    fn sample(&self, x: f64) -> Result<f64> {
        let v = (self.f)(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite(x))
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse(&self, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: usize) -> Result<(f64, f64)> {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (self.sample(lm)?, self.sample(rm)?);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth >= self.max_depth || delta.abs() <= 15.0 * tol {
            return Ok((left + right + delta / 15.0, delta.abs() / 15.0));
        }
        let (l, el) = self.recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)?;
        let (r, er) = self.recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)?;
        Ok((l + r, el + er))
    }

    fn run(&self, a: f64, b: f64, tol: f64) -> Result<(f64, f64)> {
        let (fa, fb) = (self.sample(a)?, self.sample(b)?);
        let fm = self.sample(0.5 * (a + b))?;
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        self.recurse(a, b, fa, fm, fb, whole, tol, 0)
    }
}

fn simpson_line<F: Fn(f64) -> f64>(f: &F, max_depth: usize, transform: Transform) -> Result<(f64, f64)> {
    const TOL: f64 = 1e-12;
    match transform {
        Transform::ArctanCompactification => {
            // stay off the poles of tan
            let edge = FRAC_PI_2 - 1e-9;
            let g = |phi: f64| {
                let (s, c) = phi.sin_cos();
                f(s / c) / (c * c)
            };
            Simpson { f: &g, max_depth }.run(-edge, edge, TOL)
        }
        Transform::Truncated(x_max) => {
            let edges = geometric_panels(x_max);
            let s = Simpson { f, max_depth };
            let (mut acc, mut err) = (0.0, 0.0);
            for w in edges.windows(2) {
                for (a, b) in [(w[0], w[1]), (-w[1], -w[0])] {
                    let (v, e) = s.run(a, b, TOL)?;
                    acc += v;
                    err += e;
                }
            }
            Ok((acc, err))
        }
    }
}

/// `∫_{−∞}^{∞} f(x) dx` (or over `[−X, X]`). The Gauss-Legendre error
/// estimate is the difference against the rule with half the nodes.
pub fn integrate_line<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<Integral> {
    match spec.rule {
        Rule::GaussLegendre => {
            let value = gl_line(&f, spec.nodes, spec.transform)?;
            let coarse = gl_line(&f, (spec.nodes / 2).max(1), spec.transform)?;
            Ok(Integral { value, error: (value - coarse).abs() })
        }
        Rule::AdaptiveSimpson => {
            let (value, error) = simpson_line(&f, spec.nodes, spec.transform)?;
            Ok(Integral { value, error })
        }
    }
}

/// `Γ(x)` for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("gamma needs a finite x > 0, got {x}")));
    }
    Ok(statrs::function::gamma::gamma(x))
}

/// `⟨Rₘ, Rₘ′⟩_w` for `m, m′ ≤ max_n`; entries whose integral diverges are
/// left at `NaN` and flagged in `convergent_mask`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    pub params: RomanovskiParams,
    pub max_n: u32,
    pub entries: Vec<Vec<f64>>,
    pub convergent_mask: Vec<Vec<bool>>,
}

impl GramMatrix {
    /// Largest `|G_{mm′}| / √(G_{mm} G_{m′m′})` over convergent off-diagonal
    /// pairs.
    pub fn max_off_diagonal_ratio(&self) -> f64 {
        let size = self.entries.len();
        let mut worst: f64 = 0.0;
        for m in 0..size {
            for k in 0..size {
                if m == k || !self.convergent_mask[m][k] {
                    continue;
                }
                let scale = (self.entries[m][m] * self.entries[k][k]).sqrt();
                worst = worst.max(self.entries[m][k].abs() / scale);
            }
        }
        worst
    }
}

pub fn gram(params: &RomanovskiParams, max_n: u32, spec: &QuadratureSpec) -> Result<GramMatrix> {
    let size = max_n as usize + 1;
    let polys: Vec<_> = (0..=max_n).map(|n| romanovski(params, n)).collect();
    let mut entries = vec![vec![f64::NAN; size]; size];
    let mut mask = vec![vec![false; size]; size];
    for m in 0..size {
        for k in m..size {
            if !orthogonal_pair(params, m as u32, k as u32) {
                continue;
            }
            let (pm, pk) = (&polys[m], &polys[k]);
            let v = integrate_line(|x| weight(params, x) * pm.eval(x) * pk.eval(x), spec)?.value;
            entries[m][k] = v;
            entries[k][m] = v;
            mask[m][k] = true;
            mask[k][m] = true;
        }
    }
    Ok(GramMatrix { params: params.clone(), max_n, entries, convergent_mask: mask })
}

/// Truncated integrals at two cutoffs and their relative change.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DivergenceWitness {
    pub cutoffs: (f64, f64),
    pub values: (f64, f64),
    pub relative_change: f64,
}

impl DivergenceWitness {
    pub fn diverges(&self, threshold: f64) -> bool {
        self.relative_change > threshold
    }
}

/// `∫_{−X}^{X} w Rₘ Rₘ′ dx` at `X = small` and `X = large`.
pub fn divergence_witness(params: &RomanovskiParams, m: u32, m_prime: u32, small: f64, large: f64) -> Result<DivergenceWitness> {
    let (pm, pk) = (romanovski(params, m), romanovski(params, m_prime));
    let f = |x: f64| weight(params, x) * pm.eval(x) * pk.eval(x);
    let lo = integrate_line(f, &QuadratureSpec::truncated(small)?)?.value;
    let hi = integrate_line(f, &QuadratureSpec::truncated(large)?)?.value;
    let scale = lo.abs().max(f64::MIN_POSITIVE);
    Ok(DivergenceWitness { cutoffs: (small, large), values: (lo, hi), relative_change: (hi - lo).abs() / scale })
}
