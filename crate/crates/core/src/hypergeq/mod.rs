//! The generalized hypergeometric equation
//! `σ(x)y″ + τ(x)y′ − λₙy = 0` with `σ = ax² + bx + c`, `τ = dx + e` and
//! `λₙ = n(n−1)a + nd`.
//!
//! Two independent construction routes are provided: the Rodrigues
//! representation (built exactly through the Pearson relation, see
//! [`rodrigues_poly`]) and the monic hypergeometric master formula
//! ([`monic_master`]). They are tied together by [`leading_product`].

mod classify;
mod master;
mod weight;

pub use classify::{affine_transform, classify, AffineShift, CanonicalFamily, CanonicalParams, FamilyTag};
pub use master::{monic_master, monic_master_complex, ComplexTuple};
pub use weight::{pearson_weight, ClosedWeight, WeightKind};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::{int, ExactPoly, Rational};

/// Coefficients of `σ(x) = ax² + bx + c` and `τ(x) = dx + e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HypergeqParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
}

/// `λₙ` together with its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    pub n: u32,
    pub lambda: Rational,
}

impl HypergeqParams {
    /// Rejects `σ ≡ 0`.
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational, e: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::DegenerateSigma);
        }
        Ok(HypergeqParams { a, b, c, d, e })
    }

    /// `(1, 0, 1, 2(1−p), q)`.
    pub fn romanovski(p: Rational, q: Rational) -> Self {
        let d = int(2) * (Rational::one() - p);
        HypergeqParams { a: int(1), b: int(0), c: int(1), d, e: q }
    }

    /// `(−1, 0, 1, −γ−δ−2, −γ+δ)`, weight `(1−x)^γ(1+x)^δ`.
    pub fn jacobi(gamma: Rational, delta: Rational) -> Self {
        HypergeqParams {
            a: int(-1),
            b: int(0),
            c: int(1),
            d: -&gamma - &delta - int(2),
            e: delta - gamma,
        }
    }

    /// `(0, 1, 0, −1, α+1)`.
    pub fn laguerre(alpha: Rational) -> Self {
        HypergeqParams { a: int(0), b: int(1), c: int(0), d: int(-1), e: alpha + int(1) }
    }

    /// `(0, 0, 1, −2, 0)`.
    pub fn hermite() -> Self {
        HypergeqParams { a: int(0), b: int(0), c: int(1), d: int(-2), e: int(0) }
    }

    /// `(1, 0, 0, α+2, β)`.
    pub fn bessel(alpha: Rational, beta: Rational) -> Self {
        HypergeqParams { a: int(1), b: int(0), c: int(0), d: alpha + int(2), e: beta }
    }

    pub fn sigma(&self) -> ExactPoly {
        ExactPoly::from_coeffs(vec![self.c.clone(), self.b.clone(), self.a.clone()])
    }

    pub fn tau(&self) -> ExactPoly {
        ExactPoly::linear(self.e.clone(), self.d.clone())
    }

    pub fn discriminant(&self) -> Rational {
        &self.b * &self.b - int(4) * &self.a * &self.c
    }

    pub fn lambda(&self, n: u32) -> Rational {
        lambda_n(self, n)
    }

    pub fn eigenvalue(&self, n: u32) -> Eigenvalue {
        Eigenvalue { n, lambda: lambda_n(self, n) }
    }

    /// `σy″ + τy′ − λₙy` as an exact polynomial.
    pub fn residual(&self, y: &ExactPoly, n: u32) -> ExactPoly {
        let t1 = &self.sigma() * &y.nth_derivative(2);
        let t2 = &self.tau() * &y.derivative();
        &(&t1 + &t2) - &y.scale(&self.lambda(n))
    }
}

/// `λₙ = n(n−1)a + nd`.
pub fn lambda_n(params: &HypergeqParams, n: u32) -> Rational {
    let n = int(n as i64);
    &n * (&n - int(1)) * &params.a + &n * &params.d
}

/// `Π_{k=1}^{n} (d + (n+k−2)a)`, the leading coefficient of the Rodrigues
/// polynomial and the factor between it and the monic solution. Zero marks a
/// degree-deficient Rodrigues polynomial.
pub fn leading_product(params: &HypergeqParams, n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| {
        acc * (&params.d + int(n as i64 + k as i64 - 2) * &params.a)
    })
}

/// Output of the Rodrigues construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RodriguesPoly {
    pub n: u32,
    pub poly: ExactPoly,
    /// Actual degree; `None` only if the polynomial vanishes identically.
    pub degree: Option<usize>,
    pub degree_deficient: bool,
}

/// `Pₙ = (1/W)·dⁿ/dxⁿ(σⁿW)`.
///
/// Bessel-type tuples are refused because they have no real orthogonality
/// interval; [`rodrigues_poly_any`] constructs them anyway.
pub fn rodrigues_poly(params: &HypergeqParams, n: u32) -> Result<RodriguesPoly> {
    if classify(params).reducible_to == Some(FamilyTag::Bessel) {
        return Err(Error::BesselRefused);
    }
    rodrigues_poly_any(params, n)
}

/// Rodrigues construction without the orthogonality gate.
///
/// Uses `dᵏ/dxᵏ(σⁿW) = Qₖ·σ^{n−k}·W`, where the Pearson relation
/// `σW′ = (τ − σ′)W` gives `Q_{k+1} = Qₖ′σ + (n−k−1)Qₖσ′ + Qₖτ`, `Q₀ = 1`.
/// The recurrence is exact for every weight kind.
pub fn rodrigues_poly_any(params: &HypergeqParams, n: u32) -> Result<RodriguesPoly> {
    let sigma = params.sigma();
    if sigma.is_zero() {
        return Err(Error::DegenerateSigma);
    }
    let dsigma = sigma.derivative();
    let tau = params.tau();
    let mut q = ExactPoly::one();
    for k in 0..n {
        let m = int(n as i64 - k as i64 - 1);
        let next = &(&(&q.derivative() * &sigma) + &(&q * &dsigma).scale(&m)) + &(&q * &tau);
        q = next;
    }
    let degree = q.degree();
    Ok(RodriguesPoly {
        n,
        degree_deficient: degree != Some(n as usize),
        degree,
        poly: q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    #[test]
    fn eigenvalues() {
        let p52 = HypergeqParams::romanovski(rat(5, 2), int(0));
        assert_eq!(lambda_n(&p52, 0), int(0));
        assert_eq!(lambda_n(&p52, 2), int(-4));
        assert_eq!(lambda_n(&HypergeqParams::hermite(), 3), int(-6));
        assert_eq!(p52.eigenvalue(2).lambda, int(-4));
    }

    #[test]
    fn sigma_zero_rejected() {
        assert_eq!(
            HypergeqParams::new(int(0), int(0), int(0), int(1), int(1)),
            Err(Error::DegenerateSigma)
        );
    }

    #[test]
    fn leading_products() {
        let rom = |a: Rational| HypergeqParams::romanovski(a + rat(1, 2), int(0));
        assert_eq!(leading_product(&rom(int(3)), 0), int(1));
        for a in [int(3), rat(7, 3), int(-2)] {
            let expect = int(6) - int(10) * &a + int(4) * &a * &a;
            assert_eq!(leading_product(&rom(a), 2), expect);
        }
        assert_eq!(leading_product(&rom(int(1)), 2), int(0));
    }

    #[test]
    fn rodrigues_romanovski_low_orders() {
        let (a, b) = (rat(7, 2), rat(-1, 3));
        let params = HypergeqParams::romanovski(&a + rat(1, 2), int(-2) * &b);
        let r0 = rodrigues_poly(&params, 0).unwrap();
        assert_eq!(r0.poly, ExactPoly::one());
        let r1 = rodrigues_poly(&params, 1).unwrap();
        assert_eq!(r1.poly, ExactPoly::linear(int(-2) * &b, int(1) - int(2) * &a));
    }

    #[test]
    fn rodrigues_degree_collapse_reported() {
        // a = 1, b = 0: R₂ collapses to the constant 1
        let params = HypergeqParams::romanovski(rat(3, 2), int(0));
        let r2 = rodrigues_poly(&params, 2).unwrap();
        assert_eq!(r2.poly, ExactPoly::one());
        assert_eq!(r2.degree, Some(0));
        assert!(r2.degree_deficient);
    }

    /// Hermite oracle: H₀ = 1, H₁ = 2x, H_{n+1} = 2xHₙ − 2nH_{n−1}.
    fn hermite_recurrence(n: usize) -> ExactPoly {
        let two_x = ExactPoly::from_i64(&[0, 2]);
        let mut prev = ExactPoly::one();
        let mut cur = two_x.clone();
        if n == 0 {
            return prev;
        }
        for k in 1..n {
            let next = &(&two_x * &cur) - &prev.scale(&int(2 * k as i64));
            prev = cur;
            cur = next;
        }
        cur
    }

    #[test]
    fn rodrigues_hermite_matches_recurrence() {
        let params = HypergeqParams::hermite();
        for n in 0..7u32 {
            let r = rodrigues_poly(&params, n).unwrap();
            let h = hermite_recurrence(n as usize);
            // e^{x²} dⁿ/dxⁿ e^{−x²} = (−1)ⁿ Hₙ
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(r.poly, h.scale(&sign), "n = {n}");
        }
        assert_eq!(
            rodrigues_poly(&params, 2).unwrap().poly,
            ExactPoly::from_i64(&[-2, 0, 4])
        );
    }

    #[test]
    fn bessel_refused_but_constructible() {
        let params = HypergeqParams::bessel(int(1), int(2));
        assert_eq!(rodrigues_poly(&params, 2), Err(Error::BesselRefused));
        let r = rodrigues_poly_any(&params, 2).unwrap();
        assert!(params.residual(&r.poly, 2).is_zero());
    }

    #[test]
    fn rodrigues_solves_the_equation() {
        let tuples = [
            HypergeqParams::romanovski(rat(21, 2), int(-10)),
            HypergeqParams::jacobi(rat(1, 2), rat(3, 2)),
            HypergeqParams::laguerre(rat(2, 3)),
            HypergeqParams::hermite(),
            HypergeqParams::new(int(2), int(-3), int(1), int(5), rat(1, 2)).unwrap(),
        ];
        for params in &tuples {
            for n in 0..8u32 {
                let r = rodrigues_poly_any(params, n).unwrap();
                assert!(params.residual(&r.poly, n).is_zero(), "{params:?} n = {n}");
                assert_eq!(r.poly.coeff(n as usize), leading_product(params, n));
            }
        }
    }
}
