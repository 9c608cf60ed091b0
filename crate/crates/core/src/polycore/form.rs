use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{int, to_f64, ExactPoly, Rational};
use crate::error::{Error, Result};

/// Exact representation of `poly(x)·(1+x²)^power·exp(arc·arctan x)`.
///
/// The family is closed under differentiation:
/// `d/dx[P·(1+x²)^s·e^{q·atan x}] = [P′·(1+x²) + 2sxP + qP]·(1+x²)^{s−1}·e^{q·atan x}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QArctanForm {
    pub poly: ExactPoly,
    pub power: Rational,
    pub arc: Rational,
}

impl QArctanForm {
    pub fn new(poly: ExactPoly, power: Rational, arc: Rational) -> Self {
        QArctanForm { poly, power, arc }
    }

    /// `(1+x²)^power·exp(arc·arctan x)` with unit polynomial factor.
    pub fn weight(power: Rational, arc: Rational) -> Self {
        Self::new(ExactPoly::one(), power, arc)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn deriv(&self) -> Self {
        let two_s_x = ExactPoly::monomial(&self.power * int(2), 1);
        let poly = &(&self.poly.derivative() * &ExactPoly::one_plus_x2())
            + &(&(&two_s_x * &self.poly) + &self.poly.scale(&self.arc));
        QArctanForm {
            poly,
            power: &self.power - Rational::one(),
            arc: self.arc.clone(),
        }
    }

    pub fn nth_deriv(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |f, _| f.deriv())
    }

    /// Re-expresses the form with a smaller exponent `target`, absorbing the
    /// integer difference into the polynomial factor.
    pub fn lower_power_to(&self, target: &Rational) -> Result<Self> {
        let diff = &self.power - target;
        if !diff.is_integer() || diff.is_negative() {
            return Err(Error::IncompatibleForms(format!(
                "cannot lower exponent {} to {}",
                self.power, target
            )));
        }
        let k = diff.to_integer().to_u32().ok_or_else(|| {
            Error::IncompatibleForms(format!("exponent gap {diff} too large"))
        })?;
        Ok(QArctanForm {
            poly: &self.poly * &ExactPoly::one_plus_x2().pow(k),
            power: target.clone(),
            arc: self.arc.clone(),
        })
    }

    /// Sum of two forms sharing the same `arc` and exponents that differ by an
    /// integer. The result carries the smaller exponent.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.arc != other.arc {
            return Err(Error::IncompatibleForms(format!(
                "arctan coefficients differ ({} vs {})",
                self.arc, other.arc
            )));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let target = if self.power <= other.power {
            self.power.clone()
        } else {
            other.power.clone()
        };
        let a = self.lower_power_to(&target)?;
        let b = other.lower_power_to(&target)?;
        Ok(QArctanForm {
            poly: &a.poly + &b.poly,
            power: target,
            arc: self.arc.clone(),
        })
    }

    pub fn mul_poly(&self, p: &ExactPoly) -> Self {
        QArctanForm {
            poly: &self.poly * p,
            power: self.power.clone(),
            arc: self.arc.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QArctanForm {
            poly: self.poly.scale(c),
            power: self.power.clone(),
            arc: self.arc.clone(),
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let envelope =
            (1.0 + x * x).powf(to_f64(&self.power)) * (to_f64(&self.arc) * x.atan()).exp();
        self.poly.eval_f64(x) * envelope
    }
}

impl Default for QArctanForm {
    fn default() -> Self {
        Self::new(ExactPoly::zero(), Rational::zero(), Rational::zero())
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use proptest::prelude::*;

    use super::*;
    use crate::polycore::rat;

    /// Independent oracle: a sum of monomial terms `c·x^k·(1+x²)^s·e^{q·atan x}`
    /// differentiated term by term with the plain product rule.
    #[derive(Clone, Debug)]
    struct TermSum {
        arc: Rational,
        terms: BTreeMap<(usize, Rational), Rational>,
    }

    impl TermSum {
        fn from_form(f: &QArctanForm) -> Self {
            let mut terms = BTreeMap::new();
            for (k, c) in f.poly.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((k, f.power.clone()), c.clone());
                }
            }
            TermSum { arc: f.arc.clone(), terms }
        }

        fn push(map: &mut BTreeMap<(usize, Rational), Rational>, key: (usize, Rational), c: Rational) {
            let e = map.entry(key).or_insert_with(Rational::zero);
            *e += c;
        }

        fn deriv(&self) -> Self {
            let mut out = BTreeMap::new();
            for ((k, s), c) in &self.terms {
                let s1 = s - Rational::one();
                if *k > 0 {
                    Self::push(&mut out, (k - 1, s.clone()), c * int(*k as i64));
                }
                Self::push(&mut out, (k + 1, s1.clone()), c * s * int(2));
                Self::push(&mut out, (*k, s1), c * &self.arc);
            }
            out.retain(|_, c| !c.is_zero());
            TermSum { arc: self.arc.clone(), terms: out }
        }

        /// Collects everything onto the exponent `power`.
        fn to_poly_at(&self, power: &Rational) -> ExactPoly {
            let mut acc = ExactPoly::zero();
            for ((k, s), c) in &self.terms {
                let gap = (s - power).to_integer().to_u32().expect("integer gap");
                let term = &ExactPoly::monomial(c.clone(), *k) * &ExactPoly::one_plus_x2().pow(gap);
                acc = &acc + &term;
            }
            acc
        }
    }

    #[test]
    fn derivative_of_constant_vanishes() {
        let f = QArctanForm::weight(int(0), int(0));
        assert!(f.deriv().is_zero());
    }

    #[test]
    fn derivative_of_one_plus_x2() {
        let d = QArctanForm::weight(int(1), int(0)).deriv();
        assert_eq!(d.poly, ExactPoly::from_i64(&[0, 2]));
        assert_eq!(d.power, int(0));
    }

    #[test]
    fn derivative_of_exp_arctan() {
        let d = QArctanForm::weight(int(0), int(1)).deriv();
        assert_eq!(d.poly, ExactPoly::one());
        assert_eq!(d.power, int(-1));
        assert_eq!(d.arc, int(1));
    }

    #[test]
    fn nth_deriv_zero_is_identity() {
        let f = QArctanForm::new(ExactPoly::from_i64(&[1, 2, 3]), rat(-5, 2), rat(3, 7));
        assert_eq!(f.nth_deriv(0), f);
    }

    #[test]
    fn second_derivative_of_one_plus_x2() {
        let d2 = QArctanForm::weight(int(1), int(0)).nth_deriv(2);
        let oracle = TermSum::from_form(&QArctanForm::weight(int(1), int(0))).deriv().deriv();
        assert_eq!(d2.power, int(-1));
        assert_eq!(d2.poly, oracle.to_poly_at(&int(-1)));
        // (2x)' = 2, written over (1+x²)^{-1}: 2(1+x²)
        assert_eq!(d2.poly, ExactPoly::from_i64(&[2, 0, 2]));
    }

    #[test]
    fn first_romanovski_kernel() {
        // d/dx[(1+x²)^{1-p} e^{q atan x}] = (2(1-p)x + q)(1+x²)^{-p} e^{q atan x}
        let p = rat(7, 3);
        let q = rat(-4, 5);
        let f = QArctanForm::weight(int(1) - &p, q.clone());
        let d = f.deriv();
        assert_eq!(d.power, -p.clone());
        assert_eq!(d.poly, ExactPoly::linear(q.clone(), int(2) * (int(1) - &p)));
        assert_eq!(d.poly, TermSum::from_form(&f).deriv().to_poly_at(&-p));
    }

    #[test]
    fn add_aligns_exponents() {
        let a = QArctanForm::new(ExactPoly::one(), int(0), int(2));
        let b = QArctanForm::new(ExactPoly::x(), int(-1), int(2));
        let s = a.try_add(&b).unwrap();
        assert_eq!(s.power, int(-1));
        assert_eq!(s.poly, ExactPoly::from_i64(&[1, 1, 1]));
        let c = QArctanForm::new(ExactPoly::x(), rat(-1, 2), int(2));
        assert!(a.try_add(&c).is_err());
        let d = QArctanForm::new(ExactPoly::x(), int(0), int(3));
        assert!(a.try_add(&d).is_err());
    }

    #[test]
    fn float_evaluation_matches_closed_form() {
        let f = QArctanForm::new(ExactPoly::from_i64(&[1, 1]), rat(-3, 2), int(2));
        let x: f64 = 0.7;
        let expect = (1.0 + x) * (1.0 + x * x).powf(-1.5) * (2.0 * x.atan()).exp();
        assert!((f.eval_f64(x) - expect).abs() < 1e-15);
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
    }

    fn small_form() -> impl Strategy<Value = QArctanForm> {
        (prop::collection::vec(-5i64..=5, 0..4), small_rat(), small_rat())
            .prop_map(|(c, s, q)| QArctanForm::new(ExactPoly::from_i64(&c), s, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn derivative_orders_compose(f in small_form(), n in 0usize..4, m in 0usize..4) {
            prop_assert_eq!(f.nth_deriv(n).nth_deriv(m), f.nth_deriv(n + m));
        }

        #[test]
        fn derivative_is_linear(c1 in prop::collection::vec(-5i64..=5, 0..4),
                                c2 in prop::collection::vec(-5i64..=5, 0..4),
                                s in small_rat(), q in small_rat()) {
            let f = QArctanForm::new(ExactPoly::from_i64(&c1), s.clone(), q.clone());
            let g = QArctanForm::new(ExactPoly::from_i64(&c2), s.clone(), q.clone());
            let sum = QArctanForm::new(&f.poly + &g.poly, s, q);
            prop_assert_eq!(sum.deriv().poly, &f.deriv().poly + &g.deriv().poly);
        }

        #[test]
        fn agrees_with_product_rule_oracle(f in small_form(), n in 0usize..5) {
            let fast = f.nth_deriv(n);
            let slow = (0..n).fold(TermSum::from_form(&f), |t, _| t.deriv());
            prop_assert_eq!(&fast.poly, &slow.to_poly_at(&fast.power));
        }

        #[test]
        fn agrees_with_polynomial_expansion(s in 0u32..7, n in 0usize..7) {
            prop_assume!(n as u32 <= s);
            let f = QArctanForm::weight(int(s as i64), int(0));
            let d = f.nth_deriv(n);
            let direct = ExactPoly::one_plus_x2().pow(s).nth_derivative(n);
            // d.poly·(1+x²)^{s-n} must equal the direct expansion
            let lhs = &d.poly * &ExactPoly::one_plus_x2().pow(s - n as u32);
            prop_assert_eq!(lhs, direct);
        }
    }
}
