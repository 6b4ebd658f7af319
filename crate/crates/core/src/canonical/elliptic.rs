use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::form::canonical_matrix;
use crate::error::{Error, Result};
use crate::moebius::{
    arc_contains, classify_cycle, cross_ratio, x_canonical, DihedralElement, Monotonicity,
    ProjPoint,
};
use crate::ratpoly::Polynomial;
use crate::scalar::Scalar;
use crate::special::{
    canonical_i0, canonical_p, canonical_p_pv, ellip_f, ellip_pi, ellip_pi_pv, quad_sqrt,
    Integrand, QuadratureSpec, Radicand,
};

/// The rational factor `R(x)` of `∫ R(x) dx / √|Q₄(x)|`.
#[derive(Debug, Clone, PartialEq)]
pub enum IntegrandKind<S> {
    /// `R ≡ 1`
    Const,
    /// `R = x`
    X,
    /// `R = 1/(x - p)`
    Pole(S),
}

impl<S> IntegrandKind<S> {
    pub fn name(&self) -> &'static str {
        match self {
            IntegrandKind::Const => "const",
            IntegrandKind::X => "x",
            IntegrandKind::Pole(_) => "pole",
        }
    }

    pub fn pole(&self) -> Option<&S> {
        match self {
            IntegrandKind::Pole(p) => Some(p),
            _ => None,
        }
    }
}

/// `t`, `k`, `h`, `h_p` of the elliptic formulas and the Legendre `ν`, `q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EllipticParams {
    /// `t = (x₃,x₄;x₁,u)` at the upper limit, for definite forms.
    pub t: Option<f64>,
    /// `k = (x₃,x₄;x₁,x₂)⁻¹`
    pub k: f64,
    /// `h = (x₄-x₁)/(x₃-x₁)`
    pub h: f64,
    /// `h_p = (x₃,x₄;x₁,p)⁻¹`
    pub h_p: Option<f64>,
    /// `ν = arcsin √t`
    pub nu: Option<f64>,
    /// `q = √k`
    pub q: f64,
}

/// One summand `coeff · f(…)` of an elliptic combination.
///
/// `I0` and `P` are antiderivatives in `t`; the `*_path` variants integrate
/// the same densities along the `t`-image of an arc that leaves `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "fn")]
pub enum EllipticTerm {
    I0 {
        k: f64,
        coeff: f64,
    },
    P {
        h: f64,
        k: f64,
        coeff: f64,
    },
    F {
        nu: f64,
        q: f64,
        coeff: f64,
    },
    Pi {
        nu: f64,
        h: f64,
        q: f64,
        coeff: f64,
    },
    #[serde(rename = "I0_path")]
    I0Path {
        from: ProjPoint<f64>,
        to: f64,
        k: f64,
        coeff: f64,
    },
    #[serde(rename = "P_path")]
    PPath {
        from: ProjPoint<f64>,
        to: f64,
        h: f64,
        k: f64,
        coeff: f64,
    },
}

/// `scale · Σ terms`, one formula of the elliptic family.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticCombination<S> {
    pub kind: IntegrandKind<S>,
    /// Orbit element applied to the base labeling.
    pub element: DihedralElement,
    /// Element taking the caller's root order to `labels`.
    pub from_input: DihedralElement,
    /// `x₁, …, x₄` as used by this formula.
    pub labels: Vec<S>,
    pub epsilon: i8,
    /// `|a₄(x₃-x₁)(x₄-x₂)|`
    pub prefactor_sq: S,
    /// `(x₃-p)(x₄-p)` for the pole kind.
    pub pole_factor: Option<S>,
    /// `ε/(√prefactor_sq · pole_factor)`, doubled for `F`/`Π` forms.
    pub scale: f64,
    pub params: EllipticParams,
    pub terms: Vec<EllipticTerm>,
    /// Sign of `Q₄` on the integration arc.
    pub radicand_sign: i8,
    pub principal_value: bool,
    /// Numeric value of a definite form.
    pub value: Option<f64>,
}

impl<S: Scalar> EllipticCombination<S> {
    /// Evaluates an indefinite form (`I0`/`P` terms) at `x`, normalised to
    /// vanish at `x₄`. `x` must lie on `L(x₄, x₁)`.
    pub fn antiderivative(&self, x: &S) -> Result<f64> {
        let t = t_of(&self.labels, x)?
            .expect_finite("t(x)")
            .map_err(|_| Error::domain("antiderivative", "x is x₃"))?
            .to_f64();
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::domain(
                "antiderivative",
                "x is not on the arc L(x4, x1)",
            ));
        }
        let mut acc = 0.0;
        for term in &self.terms {
            acc += match *term {
                EllipticTerm::I0 { k, coeff } => coeff * canonical_i0(t, k)?,
                EllipticTerm::P { h, k, coeff } => {
                    let v = if self.principal_value {
                        canonical_p_pv(t, h, k)?
                    } else {
                        canonical_p(t, h, k)?
                    };
                    coeff * v
                }
                _ => return Err(Error::InvalidArgument("not an indefinite form".into())),
            };
        }
        Ok(self.scale * acc)
    }

    /// Numeric value of a definite form.
    pub fn evaluate(&self) -> Result<f64> {
        let mut acc = 0.0;
        for term in &self.terms {
            acc += term_value(term, self.principal_value)?;
        }
        Ok(self.scale * acc)
    }
}

impl<S: Scalar + fmt::Display> Serialize for EllipticCombination<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let mut m = s.serialize_map(Some(14))?;
        m.serialize_entry("kind", self.kind.name())?;
        m.serialize_entry("p", &self.kind.pole().map(|p| p.to_string()))?;
        m.serialize_entry("element", &self.element)?;
        m.serialize_entry("from_input", &self.from_input)?;
        let labels: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        m.serialize_entry("labels", &labels)?;
        m.serialize_entry("epsilon", &self.epsilon)?;
        m.serialize_entry("prefactor_sq", &self.prefactor_sq.to_string())?;
        m.serialize_entry(
            "pole_factor",
            &self.pole_factor.as_ref().map(|v| v.to_string()),
        )?;
        m.serialize_entry("scale", &self.scale)?;
        m.serialize_entry("params", &self.params)?;
        m.serialize_entry("terms", &self.terms)?;
        m.serialize_entry("radicand_sign", &self.radicand_sign)?;
        m.serialize_entry("principal_value", &self.principal_value)?;
        m.serialize_entry("value", &self.value)?;
        m.end()
    }
}

fn fin<S: Clone>(v: &S) -> ProjPoint<S> {
    ProjPoint::Finite(v.clone())
}

/// `(x₃, x₄; x₁, x)`
fn t_of<S: Scalar>(labels: &[S], x: &S) -> Result<ProjPoint<S>> {
    cross_ratio(
        &fin(&labels[2]),
        &fin(&labels[3]),
        &fin(&labels[0]),
        &fin(x),
    )
}

/// Quantities of one labeling `x₁..x₄`.
struct Frame<S> {
    labels: Vec<S>,
    epsilon: i8,
    prefactor_sq: S,
    k: S,
    h: S,
    h_p: Option<S>,
    pole_factor: Option<S>,
    /// Coefficient of the `I₀`/`F` term.
    c0: S,
    /// Coefficient and characteristic of the `P`/`Π` term.
    c1: Option<(S, S)>,
}

fn frame<S: Scalar>(leading: &S, labels: Vec<S>, kind: &IntegrandKind<S>) -> Result<Frame<S>> {
    if labels.len() != 4 {
        return Err(Error::BadRootCount(labels.len()));
    }
    if classify_cycle(&labels) == Monotonicity::NotMonotonous {
        return Err(Error::NotMonotonous);
    }
    if leading.is_zero() {
        return Err(Error::DegeneratePolynomial(
            "leading coefficient is zero".into(),
        ));
    }
    let x = |i: usize| labels[i - 1].clone();
    let det = (x(4) - x(1)) * (x(4) - x(3)) * (x(3) - x(1));
    let prefactor_sq = (leading.clone() * (x(3) - x(1)) * (x(4) - x(2))).abs();
    let k = S::one() / t_of(&labels, &x(2))?.expect_finite("(x3,x4;x1,x2)")?;
    let h = (x(4) - x(1)) / (x(3) - x(1));
    let (h_p, pole_factor, c0, c1) = match kind {
        IntegrandKind::Const => (None, None, S::one(), None),
        IntegrandKind::X => (None, None, x(3), Some((x(4) - x(3), h.clone()))),
        IntegrandKind::Pole(p) => {
            if labels.contains(p) {
                return Err(Error::PoleOnRoot(format!("{p:?}")));
            }
            let h_p = S::one() / t_of(&labels, p)?.expect_finite("(x3,x4;x1,p)")?;
            (
                Some(h_p.clone()),
                Some((x(3) - p.clone()) * (x(4) - p.clone())),
                x(4) - p.clone(),
                Some((-(x(4) - x(3)), h_p)),
            )
        }
    };
    Ok(Frame {
        epsilon: det.signum(),
        labels,
        prefactor_sq,
        k,
        h,
        h_p,
        pole_factor,
        c0,
        c1,
    })
}

impl<S: Scalar> Frame<S> {
    fn base_scale(&self) -> f64 {
        let pf = self.pole_factor.as_ref().map_or(1.0, |v| v.to_f64());
        f64::from(self.epsilon) / (self.prefactor_sq.to_f64().sqrt() * pf)
    }

    fn params(&self, t: Option<f64>, nu: Option<f64>) -> EllipticParams {
        let k = self.k.to_f64();
        EllipticParams {
            t,
            k,
            h: self.h.to_f64(),
            h_p: self.h_p.as_ref().map(|v| v.to_f64()),
            nu,
            q: k.sqrt(),
        }
    }
}

fn sign_of_q<S: Scalar>(leading: &S, labels: &[S], x: &S) -> i8 {
    labels
        .iter()
        .fold(leading.clone(), |acc, r| acc * (x.clone() - r.clone()))
        .signum()
}

fn element_between<S: Scalar>(from: &[S], to: &[S]) -> Result<DihedralElement> {
    for g in DihedralElement::all(from.len()) {
        if g.apply(from)? == to {
            return Ok(g);
        }
    }
    Err(Error::NotMonotonous)
}

fn snap(v: f64, targets: &[f64]) -> f64 {
    for &r in targets {
        if (v - r).abs() <= 1e-14 * r.abs().max(1.0) {
            return r;
        }
    }
    v
}

/// `∫ ds / ((1 - h s)√|s(1-s)(1-ks)|)` along the branch-point-free path
/// from `from` to `to` (`h = None` drops the rational factor).
fn path_integral(from: &ProjPoint<f64>, to: f64, k: f64, h: Option<f64>, pv: bool) -> Result<f64> {
    let branch = [0.0, 1.0, 1.0 / k];
    let pole = h.filter(|h| *h != 0.0).map(|h| 1.0 / h);
    let singular = |lo: f64, hi: f64| -> Result<Option<f64>> {
        match pole {
            Some(s) if lo < s && s < hi => {
                if pv {
                    Ok(Some(s))
                } else {
                    Err(Error::domain(
                        "P",
                        "pole on the path (principal value not requested)",
                    ))
                }
            }
            _ => Ok(None),
        }
    };
    if let ProjPoint::Finite(a) = *from {
        if (0.0..=1.0).contains(&a) && (0.0..=1.0).contains(&to) {
            singular(a.min(to), a.max(to))?;
            let j = |t: f64| match h {
                None => canonical_i0(t, k),
                Some(h) => canonical_p_pv(t, h, k),
            };
            return Ok(j(to)? - j(a)?);
        }
    }
    let (a, b, sign) = match *from {
        ProjPoint::Infinity if to > 1.0 / k => (to, f64::INFINITY, -1.0),
        ProjPoint::Infinity if to < 0.0 => (f64::NEG_INFINITY, to, 1.0),
        ProjPoint::Infinity => {
            return Err(Error::domain(
                "path",
                "no branch-point-free path from infinity",
            ))
        }
        ProjPoint::Finite(a) => {
            let a = snap(a, &branch);
            if a <= to {
                (a, to, 1.0)
            } else {
                (to, a, -1.0)
            }
        }
    };
    let mut integrand = Integrand::inverse_sqrt(Radicand::Factored {
        leading: k,
        roots: branch.to_vec(),
    });
    if let Some(h) = h {
        integrand = integrand.with_denominator(Polynomial::new(vec![1.0, -h]));
    }
    let mut spec = QuadratureSpec::new(integrand, a, b);
    if let Some(s) = singular(a, b)? {
        spec = spec.with_principal_value(s);
    }
    Ok(sign * quad_sqrt(&spec)?)
}

fn term_value(term: &EllipticTerm, pv: bool) -> Result<f64> {
    Ok(match term {
        EllipticTerm::F { nu, q, coeff } => coeff * ellip_f(*nu, *q)?,
        EllipticTerm::Pi { nu, h, q, coeff } => {
            let v = if pv {
                ellip_pi_pv(*nu, *h, *q)?
            } else {
                ellip_pi(*nu, *h, *q)?
            };
            coeff * v
        }
        EllipticTerm::I0Path { from, to, k, coeff } => {
            coeff * path_integral(from, *to, *k, None, pv)?
        }
        EllipticTerm::PPath {
            from,
            to,
            h,
            k,
            coeff,
        } => coeff * path_integral(from, *to, *k, Some(*h), pv)?,
        EllipticTerm::I0 { .. } | EllipticTerm::P { .. } => {
            return Err(Error::InvalidArgument(
                "indefinite term has no value".into(),
            ))
        }
    })
}

fn reduce_variant<S: Scalar>(
    kind: &IntegrandKind<S>,
    leading: &S,
    input: &[S],
    base: &[S],
    element: DihedralElement,
    pv: bool,
) -> Result<EllipticCombination<S>> {
    let labels = element.apply(base)?;
    let fr = frame(leading, labels, kind)?;
    let k = fr.k.to_f64();
    let mut terms = vec![EllipticTerm::I0 {
        k,
        coeff: fr.c0.to_f64(),
    }];
    if let Some((c1, h)) = &fr.c1 {
        terms.push(EllipticTerm::P {
            h: h.to_f64(),
            k,
            coeff: c1.to_f64(),
        });
    }
    // a point of L(x4, x1): ψ(1/2), or ψ(1/3) if that is ∞
    let x = |i: usize| &fr.labels[i - 1];
    let psi = canonical_matrix(x(3), x(4), x(1))?;
    let half = S::one() / S::from_i64(2);
    let third = S::one() / S::from_i64(3);
    let sample = match psi.apply_finite(&half) {
        ProjPoint::Finite(v) => v,
        ProjPoint::Infinity => psi.apply_finite(&third).expect_finite("sample")?,
    };
    Ok(EllipticCombination {
        kind: kind.clone(),
        element,
        from_input: element_between(input, &fr.labels)?,
        epsilon: fr.epsilon,
        prefactor_sq: fr.prefactor_sq.clone(),
        pole_factor: fr.pole_factor.clone(),
        scale: fr.base_scale(),
        params: fr.params(None, None),
        terms,
        radicand_sign: sign_of_q(leading, &fr.labels, &sample),
        principal_value: pv,
        value: None,
        labels: fr.labels,
    })
}

fn definite_variant<S: Scalar>(
    kind: &IntegrandKind<S>,
    leading: &S,
    input: &[S],
    canon: &[S],
    element: DihedralElement,
    u: &S,
    pv: bool,
) -> Result<EllipticCombination<S>> {
    let labels = element.apply(canon)?;
    let fr = frame(leading, labels, kind)?;
    let t1 = t_of(&fr.labels, &canon[3])?;
    let t2 = t_of(&fr.labels, u)?.expect_finite("t(u)")?;
    let t2f = t2.to_f64();
    let k = fr.k.to_f64();
    let q = k.sqrt();
    let standard = t1 == ProjPoint::Finite(S::zero()) && t2 > S::zero() && t2 < S::one();
    let c0 = fr.c0.to_f64();
    let c1 = fr.c1.as_ref().map(|(c, h)| (c.to_f64(), h.to_f64()));
    let (scale, nu, terms) = if standard {
        let nu = t2f.sqrt().asin();
        let mut terms = vec![EllipticTerm::F { nu, q, coeff: c0 }];
        if let Some((coeff, h)) = c1 {
            terms.push(EllipticTerm::Pi { nu, h, q, coeff });
        }
        (2.0 * fr.base_scale(), Some(nu), terms)
    } else {
        let from = t1.to_f64();
        let mut terms = vec![EllipticTerm::I0Path {
            from: from.clone(),
            to: t2f,
            k,
            coeff: c0,
        }];
        if let Some((coeff, h)) = c1 {
            terms.push(EllipticTerm::PPath {
                from,
                to: t2f,
                h,
                k,
                coeff,
            });
        }
        (fr.base_scale(), None, terms)
    };
    let mut out = EllipticCombination {
        kind: kind.clone(),
        element,
        from_input: element_between(input, &fr.labels)?,
        epsilon: fr.epsilon,
        prefactor_sq: fr.prefactor_sq.clone(),
        pole_factor: fr.pole_factor.clone(),
        scale,
        params: fr.params(Some(t2f), nu),
        terms,
        radicand_sign: sign_of_q(leading, &fr.labels, u),
        principal_value: pv,
        value: None,
        labels: fr.labels,
    };
    out.value = Some(out.evaluate()?);
    Ok(out)
}

/// x-canonical labels for `u`, after checking that the integral over
/// `L(x₄, u)` exists (as a principal value if `pv`).
fn definite_setup<S: Scalar>(
    kind: &IntegrandKind<S>,
    roots: &[S],
    u: &S,
    pv: bool,
) -> Result<Vec<S>> {
    if roots.len() != 4 {
        return Err(Error::BadRootCount(roots.len()));
    }
    let (cycle, _) = x_canonical(roots, &fin(u))?;
    let x4 = &cycle.roots[3];
    match kind {
        IntegrandKind::X if arc_contains(x4, u, &ProjPoint::Infinity)? => Err(Error::domain(
            "elliptic_definite",
            "x dx/sqrt|Q| diverges on an arc through infinity",
        )),
        IntegrandKind::Pole(p) if p == u => Err(Error::domain(
            "elliptic_definite",
            "pole at the upper limit",
        )),
        IntegrandKind::Pole(p) if !pv && !roots.contains(p) && arc_contains(x4, u, &fin(p))? => {
            Err(Error::domain(
                "elliptic_definite",
                "pole inside the arc; request the principal value",
            ))
        }
        _ => Ok(cycle.roots),
    }
}

/// Indefinite closed form for the labels as given, valid for `x ∈ L(x₄, x₁)`:
///
/// * const: `ε/√|a₄(x₃-x₁)(x₄-x₂)| · I₀(t,k)`
/// * x: same prefactor times `x₃I₀(t,k) + (x₄-x₃)P(t,h,k)`
/// * pole: `ε/(√|…|(x₃-p)(x₄-p)) · ((x₄-p)I₀(t,k) - (x₄-x₃)P(t,h_p,k))`
///
/// `pv` selects principal values when `P` is later evaluated across `1/h_p`.
pub fn elliptic_reduce<S: Scalar>(
    kind: &IntegrandKind<S>,
    leading: &S,
    roots: &[S],
    pv: bool,
) -> Result<EllipticCombination<S>> {
    reduce_variant(
        kind,
        leading,
        roots,
        roots,
        DihedralElement::identity(4),
        pv,
    )
}

/// `∫_{L(x₄,u)} R(x) dx/√|Q₄(x)|` in terms of `F(ν,q)` and `Π(ν,h,q)`.
///
/// The roots are relabeled x-canonically for `u` first. For the pole kind
/// with `p` inside the arc the integral exists only as a principal value,
/// which must be requested with `pv`.
pub fn elliptic_definite<S: Scalar>(
    kind: &IntegrandKind<S>,
    leading: &S,
    roots: &[S],
    u: &S,
    pv: bool,
) -> Result<EllipticCombination<S>> {
    let canon = definite_setup(kind, roots, u, pv)?;
    definite_variant(
        kind,
        leading,
        roots,
        &canon,
        DihedralElement::identity(4),
        u,
        pv,
    )
}

/// The eight formula variants obtained by relabeling the roots with every
/// `τ_i`, `η_i`. With `u` the variants are definite integrals over the same
/// arc and share one value; without `u` they are indefinite forms built on
/// `roots` as given.
pub fn d4_orbit<S: Scalar>(
    kind: &IntegrandKind<S>,
    leading: &S,
    roots: &[S],
    u: Option<&S>,
    pv: bool,
) -> Result<Vec<EllipticCombination<S>>> {
    match u {
        Some(u) => {
            let canon = definite_setup(kind, roots, u, pv)?;
            DihedralElement::all(4)
                .into_iter()
                .map(|g| definite_variant(kind, leading, roots, &canon, g, u, pv))
                .collect()
        }
        None => DihedralElement::all(4)
            .into_iter()
            .map(|g| reduce_variant(kind, leading, roots, roots, g, pv))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, Rational};
    use approx::assert_relative_eq;

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    fn quartic() -> Radicand {
        Radicand::Factored {
            leading: 1.0,
            roots: vec![1.0, 2.0, 3.0, 4.0],
        }
    }

    fn oracle(num: Vec<f64>, den: Vec<f64>, a: f64, b: f64, pv: Option<f64>) -> f64 {
        let it = Integrand::inverse_sqrt(quartic())
            .with_numerator(Polynomial::new(num))
            .with_denominator(Polynomial::new(den));
        let mut spec = QuadratureSpec::new(it, a, b);
        if let Some(p) = pv {
            spec = spec.with_principal_value(p);
        }
        quad_sqrt(&spec).unwrap()
    }

    #[test]
    fn reduce_const_prefactor() {
        let c =
            elliptic_reduce(&IntegrandKind::Const, &rat(1, 1), &r(&[1, 2, 3, 4]), false).unwrap();
        assert_eq!(c.prefactor_sq, rat(4, 1));
        assert_eq!(c.scale, 0.5);
        assert_eq!(
            c.terms,
            vec![EllipticTerm::I0 {
                k: 0.75,
                coeff: 1.0
            }]
        );
        assert_eq!(c.radicand_sign, 1);
    }

    #[test]
    fn reduce_x_coefficients() {
        let c = elliptic_reduce(&IntegrandKind::X, &rat(1, 1), &r(&[1, 2, 3, 4]), false).unwrap();
        assert_eq!(
            c.terms,
            vec![
                EllipticTerm::I0 {
                    k: 0.75,
                    coeff: 3.0
                },
                EllipticTerm::P {
                    h: 1.5,
                    k: 0.75,
                    coeff: 1.0
                },
            ]
        );
    }

    #[test]
    fn pole_on_root_rejected() {
        let err = elliptic_reduce(
            &IntegrandKind::Pole(rat(4, 1)),
            &rat(1, 1),
            &r(&[1, 2, 3, 4]),
            false,
        );
        assert!(matches!(err, Err(Error::PoleOnRoot(_))));
    }

    #[test]
    fn definite_matches_quadrature() {
        let roots = r(&[1, 2, 3, 4]);
        let one = rat(1, 1);
        let u = rat(6, 1);
        let c = elliptic_definite(&IntegrandKind::Const, &one, &roots, &u, false).unwrap();
        assert!(matches!(c.terms[0], EllipticTerm::F { .. }));
        assert_relative_eq!(
            c.value.unwrap(),
            oracle(vec![1.0], vec![1.0], 4.0, 6.0, None),
            max_relative = 1e-12
        );
        let c = elliptic_definite(&IntegrandKind::X, &one, &roots, &u, false).unwrap();
        assert_relative_eq!(
            c.value.unwrap(),
            oracle(vec![0.0, 1.0], vec![1.0], 4.0, 6.0, None),
            max_relative = 1e-12
        );
        let pole = IntegrandKind::Pole(rat(5, 1));
        assert!(elliptic_definite(&pole, &one, &roots, &u, false).is_err());
        let c = elliptic_definite(&pole, &one, &roots, &u, true).unwrap();
        assert_relative_eq!(
            c.value.unwrap(),
            oracle(vec![1.0], vec![-5.0, 1.0], 4.0, 6.0, Some(5.0)),
            max_relative = 1e-10
        );
    }

    #[test]
    fn empty_arc_vanishes() {
        let c = elliptic_definite(
            &IntegrandKind::Const,
            &rat(1, 1),
            &r(&[1, 2, 3, 4]),
            &rat(4_000_000_001, 1_000_000_000),
            false,
        );
        let v = c.unwrap().value.unwrap();
        assert!(v > 0.0 && v < 1e-3, "{v}");
    }

    #[test]
    fn arc_through_infinity() {
        // u = -3 on L(4, 1) through ∞, and the unsorted input order is relabeled
        let roots = r(&[2, 3, 4, 1]);
        let c = elliptic_definite(
            &IntegrandKind::Const,
            &rat(2, 1),
            &roots,
            &rat(-3, 1),
            false,
        )
        .unwrap();
        let it = Integrand::inverse_sqrt(Radicand::Factored {
            leading: 2.0,
            roots: vec![1.0, 2.0, 3.0, 4.0],
        });
        let q = quad_sqrt(&QuadratureSpec::new(it, 4.0, -3.0)).unwrap();
        assert_relative_eq!(c.value.unwrap(), q, max_relative = 1e-12);
        assert!(
            elliptic_definite(&IntegrandKind::X, &rat(2, 1), &roots, &rat(-3, 1), false).is_err()
        );
    }

    #[test]
    fn orbit_values_agree() {
        let roots = r(&[1, 2, 3, 4]);
        let one = rat(1, 1);
        let u = rat(6, 1);
        for (kind, pv) in [
            (IntegrandKind::Const, false),
            (IntegrandKind::X, false),
            (IntegrandKind::Pole(rat(5, 1)), true),
        ] {
            let orbit = d4_orbit(&kind, &one, &roots, Some(&u), pv).unwrap();
            assert_eq!(orbit.len(), 8);
            let v0 = orbit[0].value.unwrap();
            for rec in &orbit {
                assert_eq!(rec.prefactor_sq, rat(4, 1));
                assert_relative_eq!(rec.value.unwrap(), v0, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn decreasing_case_matches_table_form() {
        // x1 = d, x2 = c, x3 = b, x4 = a with a > b > c > d, u > a
        let (a, b, c, d) = (7.0f64, 5.0, 2.0, 1.0);
        let u = 9.0;
        let res = elliptic_definite(
            &IntegrandKind::Const,
            &rat(1, 1),
            &r(&[1, 2, 5, 7]),
            &rat(9, 1),
            false,
        )
        .unwrap();
        let beta = ((b - d) * (u - a) / ((a - d) * (u - b))).sqrt().asin();
        let q = ((b - c) * (a - d) / ((a - c) * (b - d))).sqrt();
        assert_relative_eq!(res.params.nu.unwrap(), beta, max_relative = 1e-15);
        assert_relative_eq!(res.params.q, q, max_relative = 1e-15);
        assert_relative_eq!(
            res.scale,
            2.0 / ((a - c) * (b - d)).sqrt(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn indefinite_difference_is_definite() {
        let roots = r(&[1, 2, 3, 4]);
        let one = rat(1, 1);
        let f = elliptic_reduce(&IntegrandKind::X, &one, &roots, false).unwrap();
        let (u1, u2) = (rat(9, 2), rat(7, 1));
        let diff = f.antiderivative(&u2).unwrap() - f.antiderivative(&u1).unwrap();
        assert_relative_eq!(
            diff,
            oracle(vec![0.0, 1.0], vec![1.0], 4.5, 7.0, None),
            max_relative = 1e-11
        );
        let d = elliptic_definite(&IntegrandKind::X, &one, &roots, &u2, false).unwrap();
        assert_relative_eq!(
            d.value.unwrap(),
            f.antiderivative(&u2).unwrap(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn p_bridge() {
        // P(t,h,k) = -(1/h) I_{-1,1/h}(t,k)
        for &(t, h, k) in &[(0.3, 0.5, 0.2), (0.8, -2.0, 0.6), (0.5, 1.2, 0.9)] {
            let s = 1.0 / h;
            let it = Integrand::inverse_sqrt(Radicand::Factored {
                leading: k,
                roots: vec![0.0, 1.0, 1.0 / k],
            })
            .with_denominator(Polynomial::new(vec![-s, 1.0]));
            let i = quad_sqrt(&QuadratureSpec::new(it, 0.0, t)).unwrap();
            assert_relative_eq!(canonical_p(t, h, k).unwrap(), -i / h, max_relative = 1e-11);
        }
    }
}
