//! Finite Romanovski polynomials `Rₙ^{(p,q)}`, orthogonal on the real line
//! with weight `(1+x²)^{−p} e^{q·arctan x}` for finitely many degrees only.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hypergeq::{monic_master, monic_master_complex, ComplexTuple, HypergeqParams};
use crate::polycore::{int, rat, to_f64, ExactPoly, GaussianRational, QArctanForm, Rational};
use crate::quadrature::gamma;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RomanovskiParams {
    p: Rational,
    q: Rational,
}

impl RomanovskiParams {
    pub fn new(p: Rational, q: Rational) -> Result<Self> {
        if !p.is_positive() {
            return Err(Error::InvalidParameter(format!("p must be positive, got {p}")));
        }
        Ok(RomanovskiParams { p, q })
    }

    /// `p = a + 1/2`, `q = −2b`.
    pub fn from_scarf(a: &Rational, b: &Rational) -> Result<Self> {
        Self::new(a + rat(1, 2), int(-2) * b)
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn hypergeq(&self) -> HypergeqParams {
        HypergeqParams::romanovski(self.p.clone(), self.q.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RomanovskiPoly {
    pub params: RomanovskiParams,
    pub n: u32,
    pub poly: ExactPoly,
    pub degree_deficient: bool,
}

impl RomanovskiPoly {
    pub fn eval(&self, x: f64) -> f64 {
        self.poly.eval_f64(x)
    }
}

/// `Rₙ = (1/w)·dⁿ/dxⁿ[(1+x²)ⁿ w]`, differentiated exactly inside the
/// `P·(1+x²)^s·e^{q·atan x}` family starting from `s = n − p`.
pub fn romanovski(params: &RomanovskiParams, n: u32) -> RomanovskiPoly {
    let start = QArctanForm::weight(int(n as i64) - &params.p, params.q.clone());
    let poly = start.nth_deriv(n as usize).poly;
    RomanovskiPoly {
        params: params.clone(),
        n,
        degree_deficient: poly.degree() != Some(n as usize),
        poly,
    }
}

/// `(1+x²)^{−p} e^{q·arctan x}`.
pub fn weight(params: &RomanovskiParams, x: f64) -> f64 {
    (1.0 + x * x).powf(-to_f64(&params.p)) * (to_f64(&params.q) * x.atan()).exp()
}

/// Whether `∫ w Rₘ Rₘ′ dx` converges: `m + m′ < 2p − 1`.
pub fn orthogonal_pair(params: &RomanovskiParams, m: u32, m_prime: u32) -> bool {
    int(m as i64 + m_prime as i64) < int(2) * &params.p - int(1)
}

/// Closed-form `Nₙ²` for `p = a + 1/2`, `q = 0`, `n ∈ {1, 2, 3}`.
pub fn norm_closed_q0(a: &Rational, n: u32) -> Result<f64> {
    if !(1..=3).contains(&n) {
        return Err(Error::InvalidParameter(format!("closed norm known for n = 1, 2, 3 only, got {n}")));
    }
    if *a <= int(n as i64) {
        return Err(Error::Divergent(format!("norm of R_{n} needs a > {n}, got a = {a}")));
    }
    let af = to_f64(a);
    let sqrt_pi = std::f64::consts::PI.sqrt();
    Ok(match n {
        1 => (2.0 * af - 1.0).powi(2) * sqrt_pi * gamma(af - 1.0)? / (2.0 * gamma(af + 0.5)?),
        2 => 2.0 * sqrt_pi * (af - 1.0) * gamma(af - 2.0)? / gamma(af - 0.5)? * (3.0 - 2.0 * af).powi(2),
        _ => {
            3.0 * sqrt_pi * (af - 2.0) * gamma(af - 3.0)? / gamma(af - 0.5)?
                * (4.0 * af * af - 16.0 * af + 15.0).powi(2)
        }
    })
}

/// The tuple reached from the Romanovski equation by `x = i·t`:
/// `(−1, 0, 1, −2(1−p), −iq)`, a Jacobi-type tuple with complex `e`.
pub fn rotated_jacobi_tuple(params: &RomanovskiParams) -> ComplexTuple {
    let g = GaussianRational::real;
    ComplexTuple {
        a: g(int(-1)),
        b: g(Rational::zero()),
        c: g(int(1)),
        d: g(int(-2) * (int(1) - &params.p)),
        e: GaussianRational::new(Rational::zero(), -params.q.clone()),
    }
}

/// Checks `R̄ₙ(x) = i^{−n}·P̄ₙ(ix)` coefficient by coefficient, where `R̄` and
/// `P̄` are the monic master-formula outputs of the Romanovski tuple and of
/// [`rotated_jacobi_tuple`].
pub fn phase_relation_holds(params: &RomanovskiParams, n: u32) -> Result<bool> {
    let rom = monic_master(&params.hypergeq(), n)?;
    let jac = monic_master_complex(&rotated_jacobi_tuple(params), n)?;
    Ok(jac.iter().enumerate().all(|(k, c)| {
        let rotated = c * &GaussianRational::i_pow(k as i64 - n as i64);
        rotated == GaussianRational::real(rom.coeff(k))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: Rational, q: Rational) -> RomanovskiParams {
        RomanovskiParams::new(p, q).unwrap()
    }

    #[test]
    fn rejects_nonpositive_p() {
        assert!(RomanovskiParams::new(int(0), int(1)).is_err());
        assert!(RomanovskiParams::new(rat(-1, 2), int(1)).is_err());
    }

    #[test]
    fn low_orders() {
        let pr = params(rat(5, 2), int(0));
        assert_eq!(romanovski(&pr, 0).poly, ExactPoly::one());
        assert_eq!(romanovski(&pr, 2).poly, ExactPoly::from_i64(&[-1, 0, 2]));
        let pr = params(rat(7, 3), rat(-4, 5));
        assert_eq!(romanovski(&pr, 1).poly, ExactPoly::linear(rat(-4, 5), rat(-8, 3)));
    }

    #[test]
    fn third_order_collapse_at_a_2() {
        let r3 = romanovski(&params(rat(5, 2), int(-2)), 3);
        assert_eq!(r3.poly.coeff(3), int(0));
        assert!(r3.degree_deficient);
    }

    #[test]
    fn weight_values() {
        assert_eq!(weight(&params(int(1), int(0)), 0.0), 1.0);
        let w = weight(&params(rat(3, 2), int(2)), 1.0);
        let expect = 2f64.powf(-1.5) * std::f64::consts::FRAC_PI_2.exp();
        assert!((w - expect).abs() < 1e-14 * expect);
        let x: f64 = 2.5;
        assert!((weight(&params(int(1), int(0)), x) - 1.0 / (1.0 + x * x)).abs() < 1e-16);
    }

    #[test]
    fn orthogonality_predicate() {
        let p32 = params(rat(3, 2), int(0));
        assert!(orthogonal_pair(&p32, 0, 0));
        assert!(!orthogonal_pair(&p32, 1, 1));
        assert!(orthogonal_pair(&params(rat(21, 2), int(0)), 9, 9));
        assert!(!orthogonal_pair(&params(rat(21, 2), int(0)), 10, 10));
    }

    #[test]
    fn closed_norms() {
        let n1 = norm_closed_q0(&int(3), 1).unwrap();
        assert!((n1 - 20.0 / 3.0).abs() < 1e-12);
        assert!(matches!(norm_closed_q0(&int(1), 1), Err(Error::Divergent(_))));
        assert!(norm_closed_q0(&int(5), 4).is_err());
    }

    #[test]
    fn phase_relation_small_n() {
        for (p, q) in [(rat(41, 2), int(0)), (rat(21, 2), int(-10)), (rat(7, 3), rat(3, 4))] {
            let pr = params(p, q);
            for n in 0..=6 {
                assert!(phase_relation_holds(&pr, n).unwrap(), "{pr:?} n = {n}");
            }
        }
    }
}
