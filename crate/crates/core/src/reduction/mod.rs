//! Reduction of `I_{n,p} = ∫ (x-p)^n dx/√Q(x)` to the fundamental basis.
//!
//! Non-negative exponents go through the polynomial basis `φ_n` and the
//! inverse `B` of its transition matrix `A`; exponents below `-1` go through
//! the shifted Laurent basis `ψ_n` and the inverse `U` of `T`. Only the one
//! column of `B` (resp. `U`) that is needed is ever computed.

mod band;
mod recurrence;
mod reduce;

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::ratpoly::{LaurentPolynomial, Rational};

pub use band::{matrix_a_entry, matrix_t_entry, solve_b_column, solve_u_column};
pub use recurrence::recurrence_oracle;
pub use reduce::{binomial_rebase, reduce, reduce_root_pole};

/// One fundamental integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    /// `I_{-1,p} = ∫ dx / ((x-p)√Q)`
    Pole,
    /// `I_l = ∫ x^l dx / √Q`
    Power(u32),
    /// `I_{l,p} = ∫ (x-p)^l dx / √Q`
    Shifted(u32),
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Pole => f.write_str("I-1@p"),
            BasisElement::Power(l) => write!(f, "I{l}"),
            BasisElement::Shifted(l) => write!(f, "I{l}@p"),
        }
    }
}

/// `{I_{-1,p} (when a pole is set), I_0, …, I_{M-2}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalBasis {
    pub degree: usize,
    pub pole: Option<Rational>,
}

impl FundamentalBasis {
    pub fn elements(&self) -> Vec<BasisElement> {
        let mut v = Vec::with_capacity(self.degree);
        if self.pole.is_some() {
            v.push(BasisElement::Pole);
        }
        v.extend((0..self.degree.saturating_sub(1) as u32).map(BasisElement::Power));
        v
    }
}

/// A single solved column of `B = A⁻¹` or `U = T⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandColumn {
    pub n: i64,
    pub entries: BTreeMap<i64, Rational>,
}

impl BandColumn {
    pub(crate) fn unit(n: i64) -> Self {
        BandColumn {
            n,
            entries: BTreeMap::from([(n, Rational::one())]),
        }
    }

    /// Entry in row `l` (zero if absent).
    pub fn get(&self, l: i64) -> Rational {
        self.entries.get(&l).cloned().unwrap_or_default()
    }

    /// Rows with nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(l, _)| *l)
    }
}

/// `∫ (x-p)^n dx/√Q = Σ c_b·I_b + E(x)·√Q(x)`.
///
/// `elementary` stores `E` as a Laurent polynomial in `x - p` with the factor 2
/// of the matrix formulas already folded in: the term for matrix row `l` has
/// exponent `l + 1` and coefficient `2·U_{l,n}` (or `2·B_{l,n}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    /// Degree `M` of `Q`.
    pub degree: usize,
    pub p: Rational,
    pub n: i64,
    /// Coefficients on the canonical basis.
    pub basic: BTreeMap<BasisElement, Rational>,
    /// Coefficients on `I_{l,p}`, `l = -1..=M-2`, before re-expansion of the
    /// positive shifted integrals; these are the solved matrix column entries.
    pub shifted: BTreeMap<i64, Rational>,
    pub elementary: LaurentPolynomial,
}

impl ReductionResult {
    pub fn coeff(&self, b: BasisElement) -> Rational {
        self.basic.get(&b).cloned().unwrap_or_default()
    }

    pub fn shifted_coeff(&self, l: i64) -> Rational {
        self.shifted.get(&l).cloned().unwrap_or_default()
    }
}

struct Keyed<'a>(&'a BTreeMap<BasisElement, Rational>);

impl Serialize for Keyed<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(&k.to_string(), v)?;
        }
        m.end()
    }
}

struct ShiftedKeyed<'a>(&'a BTreeMap<i64, Rational>);

impl Serialize for ShiftedKeyed<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (l, v) in self.0 {
            let key = if *l == -1 {
                "I-1@p".to_string()
            } else {
                format!("I{l}@p")
            };
            m.serialize_entry(&key, v)?;
        }
        m.end()
    }
}

#[derive(Serialize)]
struct ElementaryTerm {
    exp: i64,
    coeff: Rational,
    /// `coeff / 2`, the matrix entry of row `exp - 1`.
    matrix_entry: Rational,
}

impl Serialize for ReductionResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let elementary: Vec<ElementaryTerm> = self
            .elementary
            .terms()
            .map(|(e, c)| ElementaryTerm {
                exp: e,
                coeff: c.clone(),
                matrix_entry: c / &Rational::from_integer(2),
            })
            .collect();
        let mut m = s.serialize_map(Some(7))?;
        m.serialize_entry("degree", &self.degree)?;
        m.serialize_entry("p", &self.p)?;
        m.serialize_entry("n", &self.n)?;
        m.serialize_entry("basis", &Keyed(&self.basic))?;
        m.serialize_entry("shifted_basis", &ShiftedKeyed(&self.shifted))?;
        m.serialize_entry("elementary", &elementary)?;
        m.serialize_entry("convention", "coeff-includes-factor-2")?;
        m.end()
    }
}
