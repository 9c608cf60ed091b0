//! Reduction of a tuple to one of the canonical families by an affine change
//! of variable `x = αt + β` followed by division of the equation by `κ`.

use std::fmt;

use num_traits::{Signed, Zero};

use super::HypergeqParams;
use crate::polycore::{exact_sqrt, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Jacobi,
    Laguerre,
    Hermite,
    Romanovski,
    Bessel,
    Other,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::Jacobi => "jacobi",
            FamilyTag::Laguerre => "laguerre",
            FamilyTag::Hermite => "hermite",
            FamilyTag::Romanovski => "romanovski",
            FamilyTag::Bessel => "bessel",
            FamilyTag::Other => "other",
        };
        f.write_str(s)
    }
}

/// Canonical parameters, in the conventions of the `HypergeqParams`
/// constructors of the same name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalParams {
    Jacobi { gamma: Rational, delta: Rational },
    Laguerre { alpha: Rational },
    Hermite,
    Romanovski { p: Rational, q: Rational },
    Bessel { alpha: Rational, beta: Rational },
    None,
}

impl CanonicalParams {
    pub fn tuple(&self) -> Option<HypergeqParams> {
        Some(match self {
            CanonicalParams::Jacobi { gamma, delta } => HypergeqParams::jacobi(gamma.clone(), delta.clone()),
            CanonicalParams::Laguerre { alpha } => HypergeqParams::laguerre(alpha.clone()),
            CanonicalParams::Hermite => HypergeqParams::hermite(),
            CanonicalParams::Romanovski { p, q } => HypergeqParams::romanovski(p.clone(), q.clone()),
            CanonicalParams::Bessel { alpha, beta } => HypergeqParams::bessel(alpha.clone(), beta.clone()),
            CanonicalParams::None => return None,
        })
    }
}

/// `x = scale·t + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineShift {
    pub scale: Rational,
    pub offset: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFamily {
    pub tag: FamilyTag,
    pub params: CanonicalParams,
    pub shift: Option<AffineShift>,
    /// Equation divisor `κ`.
    pub factor: Option<Rational>,
    /// Family the tuple belongs to up to a possibly irrational shift.
    pub reducible_to: Option<FamilyTag>,
    pub note: String,
}

impl CanonicalFamily {
    fn found(tag: FamilyTag, params: CanonicalParams, scale: Rational, offset: Rational, factor: Rational) -> Self {
        CanonicalFamily {
            tag,
            params,
            shift: Some(AffineShift { scale, offset }),
            factor: Some(factor),
            reducible_to: Some(tag),
            note: String::new(),
        }
    }

    fn other(reducible_to: Option<FamilyTag>, note: impl Into<String>) -> Self {
        CanonicalFamily {
            tag: FamilyTag::Other,
            params: CanonicalParams::None,
            shift: None,
            factor: None,
            reducible_to,
            note: note.into(),
        }
    }
}

/// Tuple obtained from `params` by `x = αt + β` and division by `κ`.
pub fn affine_transform(params: &HypergeqParams, shift: &AffineShift, kappa: &Rational) -> HypergeqParams {
    let (al, be) = (&shift.scale, &shift.offset);
    let (a, b, c, d, e) = (&params.a, &params.b, &params.c, &params.d, &params.e);
    HypergeqParams {
        a: a * al * al / kappa,
        b: (int(2) * a * al * be + b * al) / kappa,
        c: (a * be * be + b * be + c) / kappa,
        d: al * al * d / kappa,
        e: al * (d * be + e) / kappa,
    }
}

pub fn classify(params: &HypergeqParams) -> CanonicalFamily {
    let (a, b, c, d, e) = (&params.a, &params.b, &params.c, &params.d, &params.e);
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return CanonicalFamily::other(None, "σ vanishes identically");
    }
    if a.is_zero() && b.is_zero() {
        if d.is_zero() {
            return CanonicalFamily::other(None, "constant σ with d = 0");
        }
        let alpha2 = int(-2) * c / d;
        if !alpha2.is_positive() {
            return CanonicalFamily::other(None, format!("constant σ needs −2c/d > 0, got {alpha2}"));
        }
        let Some(alpha) = exact_sqrt(&alpha2) else {
            return CanonicalFamily::other(Some(FamilyTag::Hermite), format!("scale √({alpha2}) is irrational"));
        };
        return CanonicalFamily::found(FamilyTag::Hermite, CanonicalParams::Hermite, alpha, -(e / d), c.clone());
    }
    if a.is_zero() {
        if d.is_zero() {
            return CanonicalFamily::other(None, "linear σ with d = 0");
        }
        let beta = -(c / b);
        let alpha = -(b / d);
        let lag = (d * &beta + e) / b - int(1);
        let kappa = b * &alpha;
        return CanonicalFamily::found(FamilyTag::Laguerre, CanonicalParams::Laguerre { alpha: lag }, alpha, beta, kappa);
    }
    let disc = params.discriminant();
    let beta = -(b / (int(2) * a));
    if disc.is_zero() {
        let ab = d / a - int(2);
        let bb = (d * &beta + e) / a;
        return CanonicalFamily::found(
            FamilyTag::Bessel,
            CanonicalParams::Bessel { alpha: ab, beta: bb },
            int(1),
            beta,
            a.clone(),
        );
    }
    let alpha2 = disc.abs() / (int(4) * a * a);
    let (tag, kappa_sign) = if disc.is_positive() { (FamilyTag::Jacobi, int(-1)) } else { (FamilyTag::Romanovski, int(1)) };
    let Some(alpha) = exact_sqrt(&alpha2) else {
        return CanonicalFamily::other(Some(tag), format!("scale √({alpha2}) is irrational"));
    };
    let kappa = kappa_sign * a * &alpha2;
    let shift = AffineShift { scale: alpha.clone(), offset: beta.clone() };
    let t = affine_transform(params, &shift, &kappa);
    if tag == FamilyTag::Jacobi {
        let gamma = (-&t.d - int(2) - &t.e) / int(2);
        let delta = (-&t.d - int(2) + &t.e) / int(2);
        return CanonicalFamily::found(tag, CanonicalParams::Jacobi { gamma, delta }, alpha, beta, kappa);
    }
    let p = int(1) - &t.d / int(2);
    if !p.is_positive() {
        return CanonicalFamily::other(Some(FamilyTag::Romanovski), format!("p = {p} is not positive"));
    }
    CanonicalFamily::found(tag, CanonicalParams::Romanovski { p, q: t.e }, alpha, beta, kappa)
}
