use std::io::Write;

use hyperint::canonical::{canonical_form, d4_orbit, elliptic_definite, IntegrandKind};
use hyperint::moebius::RootCycle;
use hyperint::reduction::{reduce, reduce_root_pole, ReductionResult};
use hyperint::special::{
    canonical_i0, canonical_p, canonical_p_pv, ellip_f, ellip_pi, ellip_pi_pv, lauricella_fd,
};
use hyperint::verify::{run_suite, Suite, SuiteSummary, NUMERIC_TOLERANCE};
use hyperint::{Polynomial, Rational};
use serde::Serialize;
use serde_json::json;

use crate::args::{
    CanonicalArgs, EllipticArgs, EvalFunction, Format, Kind, PolySpec, ReduceArgs, SuiteArg,
    VerifyArgs,
};
use crate::error::CliError;

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a SuiteSummary,
}

pub const TOLERANCE_ENV: &str = "HYPERINT_TOLERANCE";

type Out<'a> = &'a mut dyn Write;

fn emit<T: Serialize>(out: Out, value: &T) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn polynomial(spec: &PolySpec, leading: Option<&Rational>) -> Polynomial<Rational> {
    match (&spec.coeffs, &spec.roots) {
        (Some(c), _) => Polynomial::new(c.clone()),
        (None, Some(r)) => {
            Polynomial::from_roots(leading.cloned().unwrap_or_else(Rational::one), r)
        }
        (None, None) => unreachable!("clap requires one of --coeffs/--roots"),
    }
}

fn reduction_text(out: Out, r: &ReductionResult) -> Result<(), CliError> {
    writeln!(out, "degree {} pole {} exponent {}", r.degree, r.p, r.n)?;
    for (b, c) in &r.basic {
        writeln!(out, "  {c} * {b}")?;
    }
    for (e, c) in r.elementary.terms() {
        writeln!(out, "  {c} * (x - {})^{e} * sqrt(Q)", r.p)?;
    }
    Ok(())
}

pub fn reduce_cmd(args: &ReduceArgs, format: Format, out: Out) -> Result<(), CliError> {
    let q = polynomial(&args.poly, args.leading.as_ref());
    let r = if args.root_pole {
        if args.n != -1 {
            return Err(CliError::Usage("--root-pole needs --n -1".into()));
        }
        reduce_root_pole(&q, &args.p)?
    } else {
        reduce(&q, &args.p, args.n)?
    };
    match format {
        Format::Json => emit(out, &r),
        Format::Text => reduction_text(out, &r),
    }
}

pub fn canonical_cmd(args: &CanonicalArgs, format: Format, out: Out) -> Result<(), CliError> {
    let mut roots = args.roots.clone();
    if !args.keep_order {
        roots.sort();
    }
    let form = canonical_form(&args.leading, &RootCycle::new(roots)?)?;
    match format {
        Format::Json => emit(out, &form),
        Format::Text => {
            let k: Vec<String> = form.k.iter().map(ToString::to_string).collect();
            writeln!(out, "epsilon {}", form.epsilon)?;
            writeln!(out, "moduli {}", k.join(", "))?;
            writeln!(out, "C {}", form.c)?;
            writeln!(out, "prefactor^2 {}", form.prefactor_sq)?;
            writeln!(out, "reduced {}", form.reduced())?;
            Ok(())
        }
    }
}

fn integrand(args: &EllipticArgs) -> IntegrandKind<Rational> {
    match args.kind {
        Kind::Const => IntegrandKind::Const,
        Kind::X => IntegrandKind::X,
        Kind::Pole => IntegrandKind::Pole(args.p.clone().expect("clap requires --p for pole")),
    }
}

fn value_out(out: Out, format: Format, function: &str, value: f64) -> Result<(), CliError> {
    match format {
        Format::Json => emit(out, &json!({ "function": function, "value": value })),
        Format::Text => {
            writeln!(out, "{value}")?;
            Ok(())
        }
    }
}

pub fn eval_cmd(function: &EvalFunction, format: Format, out: Out) -> Result<(), CliError> {
    let (name, value) = match function {
        EvalFunction::F { phi, l } => ("F", ellip_f(*phi, *l)?),
        EvalFunction::Pi { phi, h, l, pv } => {
            let f = if *pv { ellip_pi_pv } else { ellip_pi };
            ("Pi", f(*phi, *h, *l)?)
        }
        EvalFunction::I0 { t, k } => ("I0", canonical_i0(*t, *k)?),
        EvalFunction::P { t, h, k, pv } => {
            let f = if *pv { canonical_p_pv } else { canonical_p };
            ("P", f(*t, *h, *k)?)
        }
        EvalFunction::Fd { a, b, c, x } => ("FD", lauricella_fd(*a, b, *c, x)?),
        EvalFunction::Definite(args) => {
            let rec = elliptic_definite(
                &integrand(args),
                &args.leading,
                &args.roots,
                &args.u,
                args.pv,
            )?;
            return match format {
                Format::Json => emit(out, &rec),
                Format::Text => {
                    writeln!(out, "{}", rec.evaluate()?)?;
                    Ok(())
                }
            };
        }
    };
    value_out(out, format, name, value)
}

pub fn orbit_cmd(args: &EllipticArgs, format: Format, out: Out) -> Result<(), CliError> {
    let orbit = d4_orbit(
        &integrand(args),
        &args.leading,
        &args.roots,
        Some(&args.u),
        args.pv,
    )?;
    for rec in &orbit {
        match format {
            Format::Json => emit(out, rec)?,
            Format::Text => writeln!(
                out,
                "{:<6} {}",
                rec.element.to_string(),
                rec.value.map_or("-".into(), |v| v.to_string())
            )?,
        }
    }
    Ok(())
}

fn tolerance(flag: Option<f64>) -> Result<f64, CliError> {
    let tol = match (flag, std::env::var(TOLERANCE_ENV)) {
        (Some(t), _) => t,
        (None, Ok(s)) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{TOLERANCE_ENV}={s:?} is not a number")))?,
        (None, Err(_)) => NUMERIC_TOLERANCE,
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(tol)
}

pub fn verify_cmd(args: &VerifyArgs, format: Format, out: Out) -> Result<(), CliError> {
    let suite = match args.suite {
        SuiteArg::Reduction => Suite::Reduction,
        SuiteArg::Canonical => Suite::Canonical,
        SuiteArg::Property => Suite::Property,
        SuiteArg::Numeric => Suite::Numeric,
        SuiteArg::Controls => Suite::Controls,
        SuiteArg::All => Suite::All,
    };
    let reports = run_suite(suite, args.seed, tolerance(args.tolerance)?)?;
    let summary = SuiteSummary::from_reports(suite, args.seed, &reports);
    for r in &reports {
        match format {
            Format::Json => writeln!(out, "{}", r.to_json_line())?,
            Format::Text if !r.pass => writeln!(out, "FAIL {}", r.case)?,
            Format::Text => {}
        }
    }
    match format {
        Format::Json => emit(out, &SummaryLine { summary: &summary })?,
        Format::Text => writeln!(
            out,
            "{}: {} passed, {} failed (seed {})",
            summary.suite, summary.passed, summary.failed, summary.seed
        )?,
    }
    if summary.failed > 0 {
        return Err(CliError::Verification {
            failed: summary.failed,
            cases: summary.cases,
        });
    }
    Ok(())
}
