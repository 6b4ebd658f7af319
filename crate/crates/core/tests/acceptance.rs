//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperint::canonical::{d4_orbit, elliptic_definite, IntegrandKind};
use hyperint::reduction::{reduce, solve_b_column};
use hyperint::special::{ellip_f, ellip_pi, quad_sqrt, Integrand, QuadratureSpec, Radicand};
use hyperint::verify::{
    canonical_suite, lauricella_identity_sides, property_suite, reduction_suite,
    worked_example_polynomial, VerificationReport,
};
use hyperint::{rat, Polynomial, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 42;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

fn summarize(reports: &[VerificationReport]) -> Outcome {
    let bad: Vec<&str> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.case.as_str())
        .collect();
    outcome(
        bad.is_empty(),
        format!(
            "{} cases, {} failed {:?}",
            reports.len(),
            bad.len(),
            &bad[..bad.len().min(5)]
        ),
    )
}

fn worked_example() -> Outcome {
    let r = reduce(&worked_example_polynomial(), &rat(3, 2), -3).unwrap();
    let want = BTreeMap::from([
        (3, rat(-8, 25)),
        (2, rat(16, 45)),
        (1, rat(4, 15)),
        (0, rat(-4, 9)),
        (-1, rat(1027, 450)),
    ]);
    let elementary_ok = r.elementary.coeff(-2) == rat(2 * 64, 15)
        && r.elementary.coeff(-1) == rat(2 * 64, 25)
        && r.elementary.len() == 2;
    outcome(
        r.shifted == want && elementary_ok,
        format!(
            "U column {:?}",
            r.shifted
                .values()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
        ),
    )
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-30..=30), rng.gen_range(1..=9))
}

fn degree_seven_closed_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let m = rat(7, 1);
    let k = |c: i64| &m + &rat(c, 1);
    for case in 0..100 {
        let mut a: Vec<Rational> = (0..=7).map(|_| random_coefficient(&mut rng)).collect();
        while a[7].is_zero() {
            a[7] = random_coefficient(&mut rng);
        }
        let q = Polynomial::new(a.clone());
        let col = solve_b_column(&q, 9).unwrap();
        let (am, a1, a2, a3) = (&a[7], &a[6], &a[5], &a[4]);
        let b9 = (&k(6) * am).recip();
        let b8 = -(&(&k(5) * a1) / &(&(&k(4) * &k(6)) * &am.pow(2)));
        let b7 = &(&(&(&k(3) * &k(5)) * &a1.pow(2)) - &(&(&k(4).pow(2) * a2) * am))
            / &(&(&(&k(2) * &k(4)) * &k(6)) * &am.pow(3));
        let mid = &(&(&k(1) * &k(4).pow(2)) + &(&k(2).pow(2) * &k(5))) * &(&(a2 * a1) * am);
        let b6 = -(&(&(&(&(&(&k(1) * &k(3)) * &k(5)) * &a1.pow(3)) - &mid)
            + &(&(&(&(&k(2) * &k(3)) * &k(4)) * a3) * &am.pow(2)))
            / &(&(&(&(&m * &k(2)) * &k(4)) * &k(6)) * &am.pow(4)));
        let d = [b6, b7, b8, b9];
        if [col.get(6), col.get(7), col.get(8), col.get(9)] != d {
            return outcome(false, format!("case {case}: D block differs"));
        }
        for l in 0..=5i64 {
            // row l of C: (l + k - 5) a_{l + 7 - k}, k = 6..9
            let mut want = Rational::zero();
            for (j, dk) in d.iter().enumerate() {
                let kk = 6 + j as i64;
                let idx = l + 7 - kk;
                if idx >= 0 {
                    want -= &(&rat(l + kk - 5, 1) * &a[idx as usize]) * dk;
                }
            }
            if col.get(l) != want {
                return outcome(false, format!("case {case}: top row {l} differs"));
            }
        }
    }
    outcome(true, "100 coefficient sets")
}

fn roots_1234() -> Vec<Rational> {
    (1..=4).map(|x| rat(x, 1)).collect()
}

fn kinds() -> [(IntegrandKind<Rational>, bool); 3] {
    [
        (IntegrandKind::Const, false),
        (IntegrandKind::X, false),
        (IntegrandKind::Pole(rat(5, 1)), true),
    ]
}

fn elliptic_numeric() -> Outcome {
    let roots = roots_1234();
    let u = rat(6, 1);
    let mut worst = 0.0f64;
    for (kind, pv) in kinds() {
        let value = elliptic_definite(&kind, &rat(1, 1), &roots, &u, pv)
            .and_then(|r| r.evaluate())
            .unwrap();
        let radicand = Radicand::Factored {
            leading: 1.0,
            roots: vec![1.0, 2.0, 3.0, 4.0],
        };
        let it = Integrand::inverse_sqrt(radicand);
        let spec = match &kind {
            IntegrandKind::Const => QuadratureSpec::new(it, 4.0, 6.0),
            IntegrandKind::X => {
                QuadratureSpec::new(it.with_numerator(Polynomial::new(vec![0.0, 1.0])), 4.0, 6.0)
            }
            IntegrandKind::Pole(_) => QuadratureSpec::new(
                it.with_denominator(Polynomial::new(vec![-5.0, 1.0])),
                4.0,
                6.0,
            )
            .with_principal_value(5.0),
        };
        worst = worst.max(relative(value, quad_sqrt(&spec).unwrap()));
    }
    outcome(worst <= 1e-9, format!("max relative error {worst:.3e}"))
}

fn orbit_invariance() -> Outcome {
    let roots = roots_1234();
    let u = rat(6, 1);
    let mut worst = 0.0f64;
    let mut prefactor_ok = true;
    for (kind, pv) in kinds() {
        let orbit = d4_orbit(&kind, &rat(1, 1), &roots, Some(&u), pv).unwrap();
        if orbit.len() != 8 {
            return outcome(false, format!("{} variants", orbit.len()));
        }
        let values: Vec<f64> = orbit.iter().map(|r| r.value.unwrap_or(f64::NAN)).collect();
        for a in &values {
            for b in &values {
                worst = worst.max(relative(*a, *b));
            }
        }
        // |a₄(x₃-x₁)(x₄-x₂)| = 4 for the labels 1,2,3,4
        prefactor_ok &= orbit.iter().all(|r| r.prefactor_sq == rat(4, 1));
    }
    outcome(
        worst <= 1e-9 && prefactor_ok,
        format!("pairwise spread {worst:.3e}, prefactor identical: {prefactor_ok}"),
    )
}

fn complete_by_agm(l: f64) -> f64 {
    let (mut a, mut b) = (1.0f64, (1.0 - l * l).sqrt());
    for _ in 0..64 {
        if a == b {
            break;
        }
        let next = (0.5 * (a + b), (a * b).sqrt());
        a = next.0;
        b = next.1;
    }
    PI / (2.0 * a)
}

fn legendre_by_quadrature(phi: f64, l: f64, h: Option<f64>) -> f64 {
    // x = sin α: ∫₀^{sin φ} dx / ((1 - h x²)√((1-x²)(1-l²x²)))
    let radicand = Radicand::Factored {
        leading: l * l,
        roots: vec![-1.0 / l, -1.0, 1.0, 1.0 / l],
    };
    let mut it = Integrand::inverse_sqrt(radicand);
    if let Some(h) = h {
        it = it.with_denominator(Polynomial::new(vec![1.0, 0.0, -h]));
    }
    quad_sqrt(&QuadratureSpec::new(it, 0.0, phi.sin()).with_tolerance(1e-13)).unwrap()
}

fn special_bridges() -> Outcome {
    let grid: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    let mut agm = 0.0f64;
    for &l in &grid {
        agm = agm.max(relative(ellip_f(FRAC_PI_2, l).unwrap(), complete_by_agm(l)));
    }
    let mut quad = 0.0f64;
    for i in 1..=9 {
        let phi = i as f64 * FRAC_PI_2 / 10.0;
        for &l in &grid {
            quad = quad.max(relative(
                ellip_f(phi, l).unwrap(),
                legendre_by_quadrature(phi, l, None),
            ));
            for h in [-0.7, 0.6] {
                let pi = ellip_pi(phi, h, l).unwrap();
                quad = quad.max(relative(pi, legendre_by_quadrature(phi, l, Some(h))));
            }
        }
    }
    outcome(
        agm <= 1e-13 && quad <= 1e-10,
        format!("AGM {agm:.3e}, quadrature grid {quad:.3e}"),
    )
}

fn lauricella() -> Outcome {
    let col = reduce(&worked_example_polynomial(), &rat(3, 2), -3)
        .unwrap()
        .shifted;
    let (lhs, rhs) = lauricella_identity_sides(&col).unwrap();
    let err = relative(lhs, rhs);
    outcome(
        err <= 1e-6,
        format!("lhs={lhs:.15} rhs={rhs:.15} rel={err:.3e}"),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        (
            "worked example exact column",
            Duration::from_secs(1),
            worked_example,
        ),
        (
            "degree-7 closed forms",
            Duration::from_secs(5),
            degree_seven_closed_forms,
        ),
        ("reduction identity suite", Duration::from_secs(30), || {
            summarize(&reduction_suite(SEED, 200))
        }),
        ("canonical form suite", Duration::from_secs(10), || {
            summarize(&canonical_suite(SEED, 50))
        }),
        (
            "elliptic numeric agreement",
            Duration::from_secs(5),
            elliptic_numeric,
        ),
        (
            "D4 orbit invariance",
            Duration::from_secs(5),
            orbit_invariance,
        ),
        (
            "special-function bridges",
            Duration::from_secs(10),
            special_bridges,
        ),
        ("Lauricella identity", Duration::from_secs(10), lauricella),
        ("property suite", Duration::from_secs(30), || {
            summarize(&property_suite(SEED, 1000))
        }),
    ];
    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed <= *budget;
        failures += usize::from(!ok);
        println!(
            "{} criterion {}: {name} ({:.3}s of {}s) {}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64(),
            budget.as_secs(),
            out.detail
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
