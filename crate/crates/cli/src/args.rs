use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperint::Rational;

/// Exact reduction, canonical forms and evaluation of hyper-elliptic integrals.
#[derive(Debug, Parser)]
#[command(name = "hyperint", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce `∫ (x-p)^n dx/√Q` to the fundamental basis.
    #[command(allow_negative_numbers = true)]
    Reduce(ReduceArgs),
    /// Riemann canonical form of a polynomial with real roots.
    #[command(allow_negative_numbers = true)]
    Canonical(CanonicalArgs),
    /// Evaluate a special function or a definite elliptic integral.
    Eval(EvalArgs),
    /// All eight dihedral variants of a definite elliptic integral.
    #[command(allow_negative_numbers = true)]
    Orbit(OrbitArgs),
    /// Run the verification suites and print JSON-lines reports.
    Verify(VerifyArgs),
}

/// `Q` by coefficients or by roots and leading coefficient.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PolySpec {
    /// Coefficients `a_0,…,a_M` as rationals `p/q`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational)]
    pub coeffs: Option<Vec<Rational>>,

    /// Roots of `Q` as rationals.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational)]
    pub roots: Option<Vec<Rational>>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub poly: PolySpec,

    /// Leading coefficient when `Q` is given by roots.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, requires = "roots")]
    pub leading: Option<Rational>,

    /// Pole `p`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, default_value = "0")]
    pub p: Rational,

    /// Exponent `n`.
    #[arg(long)]
    pub n: i64,

    /// `p` is a simple root of `Q` (only with `n = -1`).
    #[arg(long)]
    pub root_pole: bool,
}

#[derive(Debug, Args)]
pub struct CanonicalArgs {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational, required = true)]
    pub roots: Vec<Rational>,

    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, default_value = "1")]
    pub leading: Rational,

    /// Use the roots in the given cyclic order instead of sorting them.
    #[arg(long)]
    pub keep_order: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Const,
    X,
    Pole,
}

/// A four-root elliptic integral `∫ R(x) dx/√Q` from `x₄` to `u`.
#[derive(Debug, Args)]
pub struct EllipticArgs {
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational, required = true)]
    pub roots: Vec<Rational>,

    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, default_value = "1")]
    pub leading: Rational,

    #[arg(long, value_enum)]
    pub kind: Kind,

    /// Upper endpoint; decimals are read exactly.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_exact)]
    pub u: Rational,

    /// Pole of the `pole` kind.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_exact, required_if_eq("kind", "pole"))]
    pub p: Option<Rational>,

    /// Take the principal value when the pole lies on the path.
    #[arg(long)]
    pub pv: bool,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[command(flatten)]
    pub integral: EllipticArgs,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(subcommand)]
    pub function: EvalFunction,
}

#[derive(Debug, Subcommand)]
pub enum EvalFunction {
    /// `F(φ, l)`
    #[command(name = "F", allow_negative_numbers = true)]
    F {
        #[arg(long)]
        phi: f64,
        #[arg(long)]
        l: f64,
    },
    /// `Π(φ, h, l)`
    #[command(name = "Pi", allow_negative_numbers = true)]
    Pi {
        #[arg(long)]
        phi: f64,
        #[arg(long)]
        h: f64,
        #[arg(long)]
        l: f64,
        #[arg(long)]
        pv: bool,
    },
    /// `I₀(t, k) = ∫₀ᵗ ds/√(s(1-s)(1-ks))`
    #[command(name = "I0", allow_negative_numbers = true)]
    I0 {
        #[arg(long)]
        t: f64,
        #[arg(long)]
        k: f64,
    },
    /// `P(t, h, k) = ∫₀ᵗ ds/((1-hs)√(s(1-s)(1-ks)))`
    #[command(name = "P", allow_negative_numbers = true)]
    P {
        #[arg(long)]
        t: f64,
        #[arg(long)]
        h: f64,
        #[arg(long)]
        k: f64,
        #[arg(long)]
        pv: bool,
    },
    /// Lauricella `F_D(a; b; c; x)`
    #[command(name = "FD", allow_negative_numbers = true)]
    Fd {
        #[arg(long)]
        a: f64,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        b: Vec<f64>,
        #[arg(long)]
        c: f64,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        x: Vec<f64>,
    },
    /// Definite elliptic integral from `x₄` to `u`.
    #[command(allow_negative_numbers = true)]
    Definite(EllipticArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Reduction,
    Canonical,
    Property,
    Numeric,
    Controls,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,

    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Numeric tolerance; overrides `HYPERINT_TOLERANCE`.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: hyperint::Error| e.to_string())
}

/// `p/q`, an integer, or a plain decimal such as `-6.25`.
pub fn parse_exact(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    let Some((int, frac)) = t.split_once('.') else {
        return parse_rational(t);
    };
    let bad = || format!("cannot parse number from {s:?}");
    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
        return Err(bad());
    }
    let negative = int.starts_with('-');
    let int = int.trim_start_matches(['+', '-']);
    if !int.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: Rational = format!("{}{frac}", if int.is_empty() { "0" } else { int })
        .parse()
        .map_err(|_| bad())?;
    let scale = Rational::from_integer(10).pow(frac.len() as i32);
    let value = &digits / &scale;
    Ok(if negative { -value } else { value })
}
