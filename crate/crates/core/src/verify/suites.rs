use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::checks::{
    verify_lauricella, verify_lauricella_definite, verify_lauricella_with, verify_orbit,
    verify_reduction_exact, verify_reduction_numeric, worked_example_column,
    worked_example_polynomial,
};
use super::random::{
    cyclic_order, distinct_sorted, homography, nonzero, pick, polynomial, rational,
};
use super::VerificationReport;
use crate::canonical::{canonical_form, IntegrandKind};
use crate::error::{Error, Result};
use crate::moebius::{
    classify_cycle, cross_ratio, r_operator, DihedralElement, Monotonicity, ProjPoint, RootCycle,
};
use crate::ratpoly::{elementary_symmetric, rat, Polynomial, Rational, Variable};
use crate::reduction::{recurrence_oracle, reduce, BasisElement};

/// Named groups of verification cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Reduction,
    Canonical,
    Property,
    Numeric,
    Controls,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "reduction" => Suite::Reduction,
            "canonical" => Suite::Canonical,
            "property" => Suite::Property,
            "numeric" => Suite::Numeric,
            "controls" => Suite::Controls,
            "all" => Suite::All,
            other => return Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Reduction => "reduction",
            Suite::Canonical => "canonical",
            Suite::Property => "property",
            Suite::Numeric => "numeric",
            Suite::Controls => "controls",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteSummary {
    pub fn from_reports(suite: Suite, seed: u64, reports: &[VerificationReport]) -> Self {
        let passed = reports.iter().filter(|r| r.pass).count();
        SuiteSummary {
            suite: suite.to_string(),
            seed,
            cases: reports.len(),
            passed,
            failed: reports.len() - passed,
        }
    }
}

pub const REDUCTION_CASES: usize = 200;
pub const CANONICAL_CASES: usize = 50;
pub const PROPERTY_CASES: usize = 1000;

/// Runs one suite with the standard case counts.
pub fn run_suite(suite: Suite, seed: u64, tol: f64) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        Suite::Reduction => reduction_suite(seed, REDUCTION_CASES),
        Suite::Canonical => canonical_suite(seed, CANONICAL_CASES),
        Suite::Property => property_suite(seed, PROPERTY_CASES),
        Suite::Numeric => numeric_suite(tol)?,
        Suite::Controls => negative_controls(seed)?,
        Suite::All => {
            let mut v = reduction_suite(seed, REDUCTION_CASES);
            v.extend(canonical_suite(seed, CANONICAL_CASES));
            v.extend(property_suite(seed, PROPERTY_CASES));
            v.extend(numeric_suite(tol)?);
            v.extend(negative_controls(seed)?);
            v
        }
    })
}

fn failed(case: String, seed: u64, err: &Error) -> VerificationReport {
    VerificationReport::exact(case, "error".into())
        .with_seed(seed)
        .with_detail(err.to_string())
}

/// Random `Q` (`M ∈ 3..=8`), `p` with `Q(p) ≠ 0`, `n ∈ -6..=15`: exact replay
/// of `reduce`, and agreement with the recurrence oracle.
pub fn reduction_suite(seed: u64, cases: usize) -> Vec<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(2 * cases);
    for i in 0..cases {
        let m = rng.gen_range(3..=8);
        let q = polynomial(&mut rng, m);
        let p = loop {
            let p = rational(&mut rng, 9, 6);
            if !q.eval(&p).is_zero() {
                break p;
            }
        };
        let n = rng.gen_range(-6..=15);
        let detail = format!("M={m} p={p} n={n} Q=[{q}]");
        let r = match reduce(&q, &p, n) {
            Ok(r) => r,
            Err(e) => {
                out.push(failed(format!("reduction/{i}"), seed, &e));
                continue;
            }
        };
        let mut rep = verify_reduction_exact(&q, &p, n, &r)
            .with_seed(seed)
            .with_detail(detail.clone());
        rep.case = format!("reduction/{i}");
        out.push(rep);
        let agree = match recurrence_oracle(&q, &p, n) {
            Ok(o) if o == r => "0".to_string(),
            Ok(_) => "mismatch".to_string(),
            Err(e) => format!("oracle error: {e}"),
        };
        out.push(
            VerificationReport::exact(format!("oracle/{i}"), agree)
                .with_seed(seed)
                .with_detail(detail),
        );
    }
    out
}

/// Random rational root sets, `N ∈ {4, 6, 8}`, in random cyclic order and
/// orientation: exact canonical identity, moduli ordering, sign of `ε`.
pub fn canonical_suite(seed: u64, cases: usize) -> Vec<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC0DE);
    let mut out = Vec::with_capacity(cases);
    for i in 0..cases {
        let n = pick(&mut rng, &[4usize, 6, 8]);
        let sorted = distinct_sorted(&mut rng, n);
        let (order, increasing) = cyclic_order(&mut rng, &sorted);
        let leading = nonzero(&mut rng, 9, 4);
        let case = format!("canonical/{i}");
        let form = RootCycle::new(order).and_then(|c| canonical_form(&leading, &c));
        let form = match form {
            Ok(f) => f,
            Err(e) => {
                out.push(failed(case, seed, &e));
                continue;
            }
        };
        let residual = match form.identity_residual() {
            Ok(r) => r.to_string(),
            Err(e) => {
                out.push(failed(case, seed, &e));
                continue;
            }
        };
        let mut rep = VerificationReport::exact(case, residual).with_seed(seed);
        let ordered = form.moduli_ordered();
        let eps_ok = form.epsilon == if increasing { 1 } else { -1 };
        rep.pass &= ordered && eps_ok;
        let k: Vec<String> = form.k.iter().map(|k| k.to_string()).collect();
        out.push(rep.with_detail(format!(
            "N={n} k=[{}] ordered={ordered} epsilon={}",
            k.join(","),
            form.epsilon
        )));
    }
    out
}

fn law_cross_ratio(rng: &mut ChaCha8Rng) -> Result<bool> {
    let h = homography(rng);
    let mut pts: Vec<ProjPoint<Rational>> = distinct_sorted(rng, 4)
        .into_iter()
        .map(ProjPoint::Finite)
        .collect();
    pts.rotate_left(rng.gen_range(0..4));
    if rng.gen_bool(0.2) {
        pts[rng.gen_range(0..4)] = ProjPoint::Infinity;
    }
    let img: Vec<_> = pts.iter().map(|x| h.apply(x)).collect();
    Ok(cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3])?
        == cross_ratio(&img[0], &img[1], &img[2], &img[3])?)
}

fn law_orientation(rng: &mut ChaCha8Rng) -> Result<bool> {
    let sorted = distinct_sorted(rng, 3);
    let (abc, _) = cyclic_order(rng, &sorted);
    let (a, b, c) = (abc[0].clone(), abc[1].clone(), abc[2].clone());
    let want = match classify_cycle(&abc) {
        Monotonicity::CyclicallyIncreasing => 1,
        _ => -1,
    };
    // f(x) = (b,c;a,x) = (a-b)(x-c) / ((a-c)(x-b))
    let f =
        crate::moebius::Homography::new(&a - &b, -(&(&a - &b) * &c), &a - &c, -(&(&a - &c) * &b))?;
    for _ in 0..3 {
        let x = rational(rng, 40, 7);
        if x == b {
            continue;
        }
        let fx = cross_ratio(
            &ProjPoint::Finite(b.clone()),
            &ProjPoint::Finite(c.clone()),
            &ProjPoint::Finite(a.clone()),
            &ProjPoint::Finite(x.clone()),
        )?;
        if fx != f.apply_finite(&x) || f.derivative_at(&x).signum() != want {
            return Ok(false);
        }
    }
    Ok(true)
}

fn law_monotone_t(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(4..=9);
    let sorted = distinct_sorted(rng, n);
    let (x, _) = cyclic_order(rng, &sorted);
    let fin = |i: usize| ProjPoint::Finite(x[i - 1].clone());
    let mut prev = Rational::one();
    for k in 2..=n - 2 {
        let t = cross_ratio(&fin(n - 1), &fin(n), &fin(1), &fin(k))?.expect_finite("t_k")?;
        if t <= prev {
            return Ok(false);
        }
        prev = t;
    }
    Ok(true)
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Polynomial<Rational> {
    let deg = rng.gen_range(0..=max_deg);
    Polynomial::new((0..=deg).map(|_| rational(rng, 7, 4)).collect())
}

fn law_operator(rng: &mut ChaCha8Rng) -> Result<bool> {
    let h = homography(rng);
    let (k, l) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
    let f = random_poly(rng, k);
    let g = random_poly(rng, l);
    let product = &r_operator(&h, k, &f)? * &r_operator(&h, l, &g)?;
    let joint = r_operator(&h, k + l, &(&f * &g))?;
    let m = rng.gen_range(1..=4);
    let roots: Vec<Rational> = (0..m).map(|_| rational(rng, 9, 4)).collect();
    let lhs = r_operator(&h, m, &Polynomial::from_roots(Rational::one(), &roots))?;
    let (num, den) = (h.numerator(), h.denominator());
    let rhs = roots.iter().fold(
        Polynomial::with_var(vec![Rational::one()], Variable::T),
        |acc, xi| &acc * &(&num - &den.scale(xi)),
    );
    Ok(product == joint && lhs == rhs)
}

fn law_group(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(3..=8);
    let (k, l) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
    let id = DihedralElement::identity(n);
    let tk = DihedralElement::tau(k, n)?;
    let tl = DihedralElement::tau(l, n)?;
    let sum = DihedralElement::tau((k + l - 1) % n + 1, n)?;
    let ek = DihedralElement::eta(k, n)?;
    let all = DihedralElement::all(n);
    let mut perms: Vec<Vec<usize>> = all.iter().map(|g| g.perm()).collect();
    perms.sort();
    perms.dedup();
    let g = pick(rng, &all);
    let seq: Vec<i64> = (0..n as i64).collect();
    let flips = all.iter().all(|g| {
        let c = classify_cycle(&g.apply(&seq).expect("length n"));
        (c == Monotonicity::CyclicallyDecreasing) == g.reverses_orientation()
    });
    Ok(tk.compose(&tl) == sum
        && ek.compose(&ek) == id
        && perms.len() == 2 * n
        && g.compose(&g.inverse()) == id
        && flips)
}

fn law_sigma(rng: &mut ChaCha8Rng) -> Result<bool> {
    let count = rng.gen_range(0..=5);
    let ks: Vec<Rational> = (0..count).map(|_| rational(rng, 9, 5)).collect();
    let lin = |a: Rational, b: Rational| Polynomial::new(vec![b, a]);
    let mut p = &lin(Rational::one(), Rational::zero()) * &lin(-Rational::one(), Rational::one());
    for k in &ks {
        p = &p * &lin(-k.clone(), Rational::one());
    }
    let mut args = vec![Rational::one()];
    args.extend(ks);
    for i in 1..=count + 2 {
        let sign = if i % 2 == 1 { rat(1, 1) } else { rat(-1, 1) };
        if p.coeff(i) != &sign * &elementary_symmetric(&args, i - 1)? {
            return Ok(false);
        }
    }
    Ok(p.coeff(0).is_zero())
}

/// Cross-ratio invariance, orientation of `x ↦ (b,c;a,x)`, monotone `t_k`,
/// operator laws of `r_k`, the dihedral group law and the `σ`-coefficient
/// lemma, each on fresh random data per instance.
pub fn property_suite(seed: u64, cases: usize) -> Vec<VerificationReport> {
    type Law = fn(&mut ChaCha8Rng) -> Result<bool>;
    let laws: [(&str, Law); 6] = [
        ("cross-ratio-invariance", law_cross_ratio),
        ("orientation", law_orientation),
        ("monotone-t", law_monotone_t),
        ("operator-laws", law_operator),
        ("group-law", law_group),
        ("sigma-coefficients", law_sigma),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9E37);
    (0..cases)
        .map(|i| {
            let mut broken = Vec::new();
            for (name, law) in &laws {
                match law(&mut rng) {
                    Ok(true) => {}
                    Ok(false) => broken.push(name.to_string()),
                    Err(e) => broken.push(format!("{name}: {e}")),
                }
            }
            let residual = if broken.is_empty() {
                "0".to_string()
            } else {
                format!("violated: {}", broken.join("; "))
            };
            VerificationReport::exact(format!("property/{i}"), residual).with_seed(seed)
        })
        .collect()
}

/// Quadrature cross-checks of the worked example, the elliptic orbit and
/// the Lauricella identity.
pub fn numeric_suite(tol: f64) -> Result<Vec<VerificationReport>> {
    let q = worked_example_polynomial();
    let p = rat(3, 2);
    let mut out = Vec::new();
    for n in [-3, 0, 4] {
        let r = reduce(&q, &p, n)?;
        out.push(verify_reduction_numeric(&q, &p, n, &r, (0.1, 0.9), tol)?);
    }
    let roots: Vec<Rational> = (1..=4).map(|x| rat(x, 1)).collect();
    let (one, u) = (rat(1, 1), rat(6, 1));
    for (kind, pv) in [
        (IntegrandKind::Const, false),
        (IntegrandKind::X, false),
        (IntegrandKind::Pole(rat(5, 1)), true),
    ] {
        out.push(verify_orbit(&kind, &one, &roots, &u, pv, tol)?);
    }
    out.push(verify_lauricella()?);
    out.push(verify_lauricella_definite()?);
    Ok(out)
}

/// Corrupted inputs that every check must reject.
pub fn negative_controls(seed: u64) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let q = worked_example_polynomial();
    let p = rat(3, 2);
    let mut r = reduce(&q, &p, -3)?;
    *r.basic.entry(BasisElement::Power(0)).or_default() += rat(1, 1000);
    let mut rep = verify_reduction_exact(&q, &p, -3, &r).into_control();
    rep.case = "control/reduction-coefficient".into();
    out.push(rep);
    let mut rep = verify_reduction_numeric(&q, &p, -3, &r, (0.1, 0.9), 1e-9)?.into_control();
    rep.case = "control/reduction-numeric".into();
    out.push(rep);

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xBAD);
    let m = rng.gen_range(3..=8);
    let qr = polynomial(&mut rng, m);
    let pr = loop {
        let v = rational(&mut rng, 9, 6);
        if !qr.eval(&v).is_zero() {
            break v;
        }
    };
    let mut rr = reduce(&qr, &pr, -4)?;
    rr.elementary.add_term(-2, rat(1, 7));
    let mut rep = verify_reduction_exact(&qr, &pr, -4, &rr)
        .into_control()
        .with_seed(seed);
    rep.case = "control/elementary-term".into();
    out.push(rep);

    let cycle = RootCycle::new(vec![rat(1, 1), rat(2, 1), rat(3, 1), rat(4, 1)])?;
    let mut form = canonical_form(&rat(1, 1), &cycle)?;
    form.k[0] += rat(1, 100);
    let residual = form.identity_residual()?.to_string();
    out.push(VerificationReport::exact("control/canonical-modulus", residual).into_control());

    let mut u = worked_example_column()?;
    *u.entry(-1).or_default() *= rat(1001, 1000);
    let mut rep = verify_lauricella_with(&u)?.into_control();
    rep.case = "control/lauricella-coefficient".into();
    out.push(rep);
    Ok(out)
}
