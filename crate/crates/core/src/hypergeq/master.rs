//! Monic solutions from the hypergeometric master formula.
//!
//! With `Δ² = b² − 4ac`, the monic degree-`n` solution is `Σ C(n,k) Gₖ xᵏ`
//! where
//!
//! `Gₖ = ((b+Δ)/(2a))^{n−k} · ₂F₁(k−n, β; γ; 2Δ/(b+Δ))`,
//! `β = (2ae − bd)/(2aΔ) + 1 − d/(2a) − n`, `γ = 2 − d/a − 2n`.
//!
//! The coincident-root and `a = 0` cases are the confluent limits of the
//! same expression. Everything runs over Gaussian rationals so that complex
//! tuples (as produced by the imaginary rotation to Jacobi form) are handled.

use num_traits::{One, Signed, Zero};

use super::HypergeqParams;
use crate::error::{Error, Result};
use crate::polycore::{binomial, exact_sqrt, int, ExactPoly, GaussianRational as G, Rational};

/// `(a, b, c, d, e)` with Gaussian-rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexTuple {
    pub a: G,
    pub b: G,
    pub c: G,
    pub d: G,
    pub e: G,
}

impl From<&HypergeqParams> for ComplexTuple {
    fn from(p: &HypergeqParams) -> Self {
        ComplexTuple {
            a: G::real(p.a.clone()),
            b: G::real(p.b.clone()),
            c: G::real(p.c.clone()),
            d: G::real(p.d.clone()),
            e: G::real(p.e.clone()),
        }
    }
}

fn gi(n: i64) -> G {
    G::real(int(n))
}

fn gpow(z: &G, k: u32) -> G {
    (0..k).fold(G::one(), |acc, _| &acc * z)
}

fn div(num: &G, den: &G, what: &str) -> Result<G> {
    match den.recip() {
        Some(r) => Ok(num * &r),
        None => Err(Error::DegenerateGauss(format!("{what} vanishes"))),
    }
}

/// `P(x + h)` for ascending Gaussian coefficients.
fn shift(coeffs: &[G], h: &G) -> Vec<G> {
    let mut out: Vec<G> = Vec::with_capacity(coeffs.len());
    for c in coeffs.iter().rev() {
        // out ← out·(x + h) + c
        let mut next = vec![G::zero(); out.len() + 1];
        for (k, o) in out.iter().enumerate() {
            next[k + 1] = &next[k + 1] + o;
            next[k] = &next[k] + &(o * h);
        }
        next[0] = &next[0] + c;
        out = next;
    }
    out
}

/// `√D` when `D` is real and `±` a rational square.
fn gauss_sqrt(d: &G) -> Result<G> {
    if !d.is_real() {
        return Err(Error::IrrationalDiscriminant(format!("discriminant {d} is not real")));
    }
    if d.re.is_negative() {
        exact_sqrt(&-&d.re)
            .map(|s| G::new(Rational::zero(), s))
            .ok_or_else(|| Error::IrrationalDiscriminant(format!("√({}) is irrational", d.re)))
    } else {
        exact_sqrt(&d.re)
            .map(G::real)
            .ok_or_else(|| Error::IrrationalDiscriminant(format!("√{} is irrational", d.re)))
    }
}

/// Rejects a tuple whose lower Gauss parameter hits a non-positive integer
/// within the range used; these are exactly the zeros of the leading product.
fn check_gamma(t: &ComplexTuple, gamma: &G, n: u32) -> Result<()> {
    for j in 0..n {
        if (gamma + &gi(j as i64)).is_zero() {
            let k = n - j;
            return Err(Error::DegenerateGauss(format!(
                "d + {}a = 0 (factor k = {k} of the leading product, a = {}, d = {})",
                n as i64 + k as i64 - 2,
                t.a,
                t.d
            )));
        }
    }
    Ok(())
}

/// Ascending coefficients (length `n+1`) of the monic solution.
pub fn monic_master_complex(t: &ComplexTuple, n: u32) -> Result<Vec<G>> {
    if t.a.is_zero() && t.b.is_zero() && t.c.is_zero() {
        return Err(Error::DegenerateSigma);
    }
    let nn = n as i64;
    if !t.a.is_zero() {
        let gamma = &gi(2 - 2 * nn) - &div(&t.d, &t.a, "a")?;
        check_gamma(t, &gamma, n)?;
        let disc = &(&t.b * &t.b) - &(&(&gi(4) * &t.a) * &t.c);
        let two_a = &gi(2) * &t.a;
        if disc.is_zero() {
            return coincident(t, n, &gamma);
        }
        let mut delta = gauss_sqrt(&disc)?;
        if (&t.b + &delta).is_zero() {
            delta = -delta;
        }
        let b_plus = &t.b + &delta;
        let base = div(&b_plus, &two_a, "2a")?;
        let z = div(&(&gi(2) * &delta), &b_plus, "b + Δ")?;
        let beta_num = &(&two_a * &t.e) - &(&t.b * &t.d);
        let beta = &(&div(&beta_num, &(&two_a * &delta), "2aΔ")? + &gi(1 - nn))
            - &div(&t.d, &two_a, "2a")?;
        let mut out = Vec::with_capacity(n as usize + 1);
        for k in 0..=n {
            let m = n - k;
            let mut term = G::one();
            let mut sum = G::one();
            for j in 0..m {
                let jj = j as i64;
                let num = &(&gi(k as i64 - nn + jj) * &(&beta + &gi(jj))) * &z;
                let den = &(&gamma + &gi(jj)) * &gi(jj + 1);
                term = &term * &div(&num, &den, "γ + j")?;
                sum = &sum + &term;
            }
            let gk = &gpow(&base, m) * &sum;
            out.push(&G::real(binomial(n, k)) * &gk);
        }
        return Ok(out);
    }
    if !t.b.is_zero() {
        return linear_sigma(t, n);
    }
    constant_sigma(t, n)
}

/// `Δ = 0`: in `t = x + b/(2a)` one has `Gₖ = (−e′/a)^{n−k}/(γ)_{n−k}`.
fn coincident(t: &ComplexTuple, n: u32, gamma: &G) -> Result<Vec<G>> {
    let r = -div(&t.b, &(&gi(2) * &t.a), "2a")?;
    let e_shift = &t.e + &(&t.d * &r);
    let ratio = -div(&e_shift, &t.a, "a")?;
    let mut in_t = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let m = n - k;
        let mut poch = G::one();
        for j in 0..m {
            poch = &poch * &(gamma + &gi(j as i64));
        }
        let gk = div(&gpow(&ratio, m), &poch, "(γ)ₘ")?;
        in_t.push(&G::real(binomial(n, k)) * &gk);
    }
    // x = t + r, so P(x) = Pₜ(x − r)
    Ok(shift(&in_t, &-r))
}

/// `a = 0, b ≠ 0`: the ₂F₀ limit.
fn linear_sigma(t: &ComplexTuple, n: u32) -> Result<Vec<G>> {
    if t.d.is_zero() && n > 0 {
        return Err(Error::DegenerateGauss("d = 0 with a = 0 (leading product vanishes)".into()));
    }
    if n == 0 {
        return Ok(vec![G::one()]);
    }
    let nn = n as i64;
    let c_over_b = div(&t.c, &t.b, "b")?;
    let b_over_d = div(&t.b, &t.d, "d")?;
    let beta = &(&gi(1 - nn) - &div(&t.e, &t.b, "b")?)
        + &div(&(&t.d * &t.c), &(&t.b * &t.b), "b²")?;
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let m = n - k;
        let mut sum = G::zero();
        let mut term = G::one(); // (k−n)_j (β)_j / j! · (b/d)^j
        for j in 0..=m {
            if j > 0 {
                let jj = j as i64 - 1;
                let f = &(&gi(k as i64 - nn + jj) * &(&beta + &gi(jj))) * &b_over_d;
                term = div(&(&term * &f), &gi(jj + 1), "j")?;
            }
            sum = &sum + &(&term * &gpow(&c_over_b, m - j));
        }
        out.push(&G::real(binomial(n, k)) * &sum);
    }
    Ok(out)
}

/// `a = b = 0`: Hermite-type; in `u = x + e/d` the coefficient of `u^{n−2i}` is
/// `(2c/d)^i (−n/2)ᵢ ((1−n)/2)ᵢ / i!`.
fn constant_sigma(t: &ComplexTuple, n: u32) -> Result<Vec<G>> {
    if t.d.is_zero() && n > 0 {
        return Err(Error::DegenerateGauss("d = 0 with a = b = 0 (leading product vanishes)".into()));
    }
    if n == 0 {
        return Ok(vec![G::one()]);
    }
    let ratio = div(&(&gi(2) * &t.c), &t.d, "d")?;
    let half = |k: i64| G::real(Rational::new(k.into(), 2.into()));
    let mut in_u = vec![G::zero(); n as usize + 1];
    let mut term = G::one();
    for i in 0..=(n / 2) {
        if i > 0 {
            let ii = i as i64 - 1;
            let f = &(&(&half(-(n as i64)) + &gi(ii)) * &(&half(1 - n as i64) + &gi(ii))) * &ratio;
            term = div(&(&term * &f), &gi(ii + 1), "i")?;
        }
        in_u[(n - 2 * i) as usize] = term.clone();
    }
    let h = div(&t.e, &t.d, "d")?;
    Ok(shift(&in_u, &h))
}

/// Real monic solution of a real tuple.
pub fn monic_master(params: &HypergeqParams, n: u32) -> Result<ExactPoly> {
    let coeffs = monic_master_complex(&ComplexTuple::from(params), n)?;
    if let Some(c) = coeffs.iter().find(|c| !c.is_real()) {
        return Err(Error::Domain(format!("non-real coefficient {c} for a real tuple")));
    }
    let poly = ExactPoly::from_coeffs(coeffs.into_iter().map(|c| c.re).collect());
    debug_assert!(poly.leading_coeff().is_some_and(|c| c.is_one()));
    Ok(poly)
}
