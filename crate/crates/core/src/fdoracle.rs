//! Finite-difference eigensolver for `−ψ″ + v(z)ψ = eψ` on `[−L, L]` with
//! Dirichlet walls, used as an independent check of analytic spectra.

use crate::error::{Error, Result};
use crate::scarf::{potential_ii, spectrum_ii, EnergyLevel, ScarfParams};

/// `N` interior points on `[−L, L]`, spacing `h = 2L/(N+1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdGrid {
    pub half_width: f64,
    pub interior: usize,
}

impl Default for FdGrid {
    fn default() -> Self {
        FdGrid { half_width: 20.0, interior: 4000 }
    }
}

impl FdGrid {
    pub fn new(half_width: f64, interior: usize) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidParameter(format!("L must be positive, got {half_width}")));
        }
        if interior < 3 {
            return Err(Error::InvalidParameter(format!("need at least 3 interior points, got {interior}")));
        }
        Ok(FdGrid { half_width, interior })
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.interior + 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        -self.half_width + (i + 1) as f64 * self.spacing()
    }

    /// Same interval, exactly half the spacing.
    pub fn refined(&self) -> FdGrid {
        FdGrid { half_width: self.half_width, interior: 2 * self.interior + 1 }
    }
}

/// Symmetric tridiagonal matrix with constant off-diagonal.
struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    fn hamiltonian<V: Fn(f64) -> f64>(v: V, grid: &FdGrid) -> Self {
        let h2 = grid.spacing().powi(2);
        let diag = (0..grid.interior).map(|i| 2.0 / h2 + v(grid.point(i))).collect();
        Tridiagonal { diag, off: -1.0 / h2 }
    }

    /// Number of eigenvalues strictly below `x` (Sturm sequence).
    fn count_below(&self, x: f64) -> usize {
        let off2 = self.off * self.off;
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            q = if i == 0 { d - x } else { d - x - off2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (d.abs() + self.off.abs());
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let r = 2.0 * self.off.abs();
        let lo = self.diag.iter().fold(f64::INFINITY, |m, &d| m.min(d - r));
        let hi = self.diag.iter().fold(f64::NEG_INFINITY, |m, &d| m.max(d + r));
        (lo, hi)
    }

    /// `j`-th smallest eigenvalue, bisected until the bracket stops shrinking.
    fn eigenvalue(&self, j: usize, mut lo: f64, mut hi: f64) -> f64 {
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                return mid;
            }
            if self.count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
}

/// Number of eigenvalues of the discretized Hamiltonian below `x`.
pub fn sturm_count<V: Fn(f64) -> f64>(v: V, grid: &FdGrid, x: f64) -> usize {
    Tridiagonal::hamiltonian(v, grid).count_below(x)
}

/// Lowest `k` eigenvalues, ascending. Each one is bisected independently
/// from the Gershgorin bracket, so the result does not depend on `k`.
pub fn fd_eigenvalues<V: Fn(f64) -> f64>(v: V, grid: &FdGrid, k: usize) -> Result<Vec<f64>> {
    if k > grid.interior {
        return Err(Error::TooManyEigenvalues { requested: k, available: grid.interior });
    }
    let t = Tridiagonal::hamiltonian(v, grid);
    let (lo, hi) = t.gershgorin();
    Ok((0..k).map(|j| t.eigenvalue(j, lo, hi)).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub analytic: Vec<EnergyLevel>,
    /// Richardson-extrapolated eigenvalues `(4·e(h/2) − e(h))/3`.
    pub numeric: Vec<f64>,
    /// Eigenvalues at the requested spacing `h`.
    pub raw: Vec<f64>,
    /// `|numeric − e|`.
    pub deviations: Vec<f64>,
    /// `|raw − e|`.
    pub raw_deviations: Vec<f64>,
}

impl SpectrumReport {
    pub fn max_deviation(&self) -> f64 {
        self.deviations.iter().fold(0.0, |m, &d| m.max(d))
    }

    pub fn max_raw_deviation(&self) -> f64 {
        self.raw_deviations.iter().fold(0.0, |m, &d| m.max(d))
    }
}

/// Lowest `k` Scarf II levels against the finite-difference spectrum on
/// `grid` and on its refinement.
pub fn compare_spectrum(params: &ScarfParams, grid: &FdGrid, k: usize) -> Result<SpectrumReport> {
    let levels = spectrum_ii(params);
    if k > levels.len() {
        return Err(Error::TooManyEigenvalues { requested: k, available: levels.len() });
    }
    let v = |z| potential_ii(params, z);
    let raw = fd_eigenvalues(v, grid, k)?;
    let fine = fd_eigenvalues(v, &grid.refined(), k)?;
    let numeric: Vec<f64> = raw.iter().zip(&fine).map(|(c, f)| (4.0 * f - c) / 3.0).collect();
    let analytic: Vec<EnergyLevel> = levels.into_iter().take(k).collect();
    let dev = |xs: &[f64]| xs.iter().zip(&analytic).map(|(x, l)| (x - l.e_f64()).abs()).collect::<Vec<_>>();
    Ok(SpectrumReport { deviations: dev(&numeric), raw_deviations: dev(&raw), analytic, numeric, raw })
}
