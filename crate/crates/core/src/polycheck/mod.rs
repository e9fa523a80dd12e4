//! Exact certification of polynomial averages and of the action of `∂`
//! on products of the `h_m`.

mod acoeff;
mod fd;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::Result;
use crate::measure::{
    average_series, growth_kernel, jack_plancherel_from_table, plancherel, Provenance,
};
use crate::observables::{h_rho, h_series, Evaluator, Observable};
use crate::partition::{dim_standard, enumerate_partitions, Partition};
use crate::rat::{binomial, from_biguint, pow, to_compact_string, to_fraction_string, Rat};
use crate::symfunc::monomial_structure_constants;

pub use acoeff::{a_coefficients, ACoeffTable, UniPoly};
pub use fd::{finite_difference_check, forward_differences, BinomialPoly, DifferenceCheck};

/// Points beyond the degree bound sampled by default.
pub const DEFAULT_EXTRA_POINTS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyReport {
    pub observable: String,
    pub theta: Rat,
    pub source: Provenance,
    /// `⟨F⟩_n` for `n = 0..=n_max`.
    pub values: Vec<Rat>,
    pub degree_bound: usize,
    pub verdict: bool,
    pub interpolant: BinomialPoly,
}

impl PolyReport {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// Degree of the interpolant, reported but not asserted.
    pub fn attained_degree(&self) -> Option<usize> {
        self.interpolant.degree()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// `n,average` rows.
    pub fn table_csv(&self) -> String {
        let mut out = String::from("n,average\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{}\n", to_compact_string(v)));
        }
        out
    }
}

impl Serialize for PolyReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fr = |v: &[Rat]| v.iter().map(to_fraction_string).collect::<Vec<_>>();
        let mut st = s.serialize_struct("PolyReport", 8)?;
        st.serialize_field("observable", &self.observable)?;
        st.serialize_field("theta", &to_fraction_string(&self.theta))?;
        st.serialize_field("source", self.source.name())?;
        st.serialize_field("degree_bound", &self.degree_bound)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("attained_degree", &self.attained_degree())?;
        st.serialize_field("values", &fr(&self.values))?;
        st.serialize_field("interpolant", &fr(&self.interpolant.coeffs))?;
        st.end()
    }
}

/// Computes `⟨F⟩_{n;θ}` for `n = 0..=n_max` and tests the degree bound of
/// `F` by finite differences. The default range is `D + 4`.
pub fn check_polynomiality(
    obs: &Observable,
    eval: &Evaluator,
    n_max: Option<usize>,
    source: Provenance,
) -> Result<PolyReport> {
    let d = obs.degree_bound();
    let n_max = n_max.unwrap_or(d + DEFAULT_EXTRA_POINTS);
    if n_max < d + 2 {
        return Err(crate::Error::SequenceTooShort {
            len: n_max + 1,
            degree: d,
        });
    }
    let values = average_series(obs, n_max, source, eval)?;
    let check = finite_difference_check(&values, d)?;
    Ok(PolyReport {
        observable: obs.to_string(),
        theta: eval.theta().clone(),
        source,
        values,
        degree_bound: d,
        verdict: check.verdict,
        interpolant: check.interpolant,
    })
}

/// A failed equality between two exact values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub case: String,
    pub expected: Rat,
    pub actual: Rat,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: expected {}, got {}",
            self.case,
            to_compact_string(&self.expected),
            to_compact_string(&self.actual)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub checked: usize,
    pub counterexample: Option<Mismatch>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Terms `c^ρ_{στ} a_σ(x)` of the right side, grouped by `τ`.
fn identity_terms(rho: &Partition, table: &ACoeffTable) -> Vec<(UniPoly, Partition)> {
    let n = rho.size();
    let mut terms = Vec::new();
    for k in 0..=n {
        for sigma in enumerate_partitions(k) {
            for tau in enumerate_partitions(n - k) {
                let Some(c) = monomial_structure_constants(&sigma, &tau).remove(rho) else {
                    continue;
                };
                let poly = table.a_sigma(sigma.parts());
                if poly.is_zero() {
                    continue;
                }
                let scaled =
                    UniPoly::new(poly.coeffs().iter().map(|a| a * from_biguint(&c)).collect());
                terms.push((scaled, tau));
            }
        }
    }
    terms
}

/// Checks, for every `λ` with `|λ| ≤ n_max`,
/// `Σ_ν p↑(λ, ν) h_ρ(ν) = Σ_{σ,τ} c^ρ_{στ} ⟨a_σ(x)⟩↑(λ) h_τ(λ)`,
/// where `⟨x^m⟩↑ = h_m(λ)`. The left side is `(1 + ∂) h_ρ` computed from
/// the growth kernel.
pub fn check_del_identity(rho: &Partition, theta: &Rat, n_max: usize) -> IdentityReport {
    let table = a_coefficients(theta, rho.size().max(2));
    let terms = identity_terms(rho, &table);
    let mut checked = 0;
    for n in 0..=n_max {
        for lambda in enumerate_partitions(n) {
            let lhs: Rat = growth_kernel(&lambda, theta)
                .targets()
                .map(|(nu, p)| p * h_rho(rho, nu, theta))
                .sum();
            let moments = h_series(&lambda, theta, rho.size());
            let rhs: Rat = terms
                .iter()
                .map(|(poly, tau)| poly.apply_moments(&moments) * h_rho(tau, &lambda, theta))
                .sum();
            checked += 1;
            if lhs != rhs {
                return IdentityReport {
                    checked,
                    counterexample: Some(Mismatch {
                        case: format!("rho=({rho}) lambda=({lambda})"),
                        expected: rhs,
                        actual: lhs,
                    }),
                };
            }
        }
    }
    IdentityReport {
        checked,
        counterexample: None,
    }
}

/// `⟨F_μ⟩_n = C(n, m) dim μ` at θ = 1 and
/// `⟨F_{μ;θ}⟩_{n;θ} = θ^m C(n, m) dim′_θ μ` for every θ, `n = 0..=n_max`.
/// The last factor is `(P_μ, p_1^m)_θ = dim′_θ μ`; it agrees with
/// `dim_θ μ` only at θ = 1. Averages are taken over the directly
/// constructed measures.
pub fn verify_closed_forms(
    mu: &Partition,
    eval: &Evaluator,
    n_max: usize,
) -> Result<IdentityReport> {
    let theta = eval.theta();
    let m = mu.size();
    let mut checked = 0;
    let mut fail = |case: String, expected: Rat, actual: Rat| {
        checked += 1;
        (expected != actual).then_some(Mismatch {
            case,
            expected,
            actual,
        })
    };
    let mut first = None;
    if num_traits::One::is_one(theta) {
        let dim = from_biguint(&dim_standard(mu));
        let obs = Observable::FMu(mu.clone());
        for n in 0..=n_max {
            let actual = plancherel(n)?.average(&obs, eval)?;
            let case = format!("F_({mu}) n={n}");
            if let Some(f) = fail(case, binomial(n, m) * &dim, actual) {
                first.get_or_insert(f);
            }
        }
    }
    let jack = eval.jack_table()?;
    let dim = jack.dim_theta_prime(mu)?.clone();
    let obs = Observable::FMuJack(mu.clone());
    let scale = pow(theta, m as i32) * dim;
    for n in 0..=n_max {
        let actual = jack_plancherel_from_table(n, &jack)?.average(&obs, eval)?;
        let case = format!("F_({mu};θ) n={n}");
        if let Some(f) = fail(case, binomial(n, m) * &scale, actual) {
            first.get_or_insert(f);
        }
    }
    Ok(IdentityReport {
        checked,
        counterexample: first,
    })
}
