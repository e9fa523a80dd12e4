//! Plancherel and Jack–Plancherel measures on `𝕐_n`, the growth process
//! and exact averaging.

mod growth;
mod sample;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::observables::{check_jack_level, Evaluator, Observable};
use crate::partition::{dim_standard, enumerate_partitions, Partition};
use crate::rat::{factorial, from_biguint, to_compact_string, to_fraction_string, Rat};
use crate::symfunc::JackTable;

pub use growth::{del_operator, growth_kernel, GrowthKernel};
pub use sample::{sample_trajectory, Sampler};

/// Largest level for which measures are tabulated by full enumeration.
pub const MAX_LEVEL: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Plancherel,
    JackDirect,
    Growth,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Plancherel => "plancherel",
            Provenance::JackDirect => "jack-direct",
            Provenance::Growth => "growth",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plancherel" => Ok(Provenance::Plancherel),
            "jack-direct" => Ok(Provenance::JackDirect),
            "growth" => Ok(Provenance::Growth),
            _ => Err(Error::parse(
                s,
                "expected plancherel, jack-direct or growth",
            )),
        }
    }
}

/// A probability measure on `𝕐_n`, weights in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureTable {
    n: usize,
    theta: Rat,
    weights: Vec<(Partition, Rat)>,
    provenance: Provenance,
}

impl MeasureTable {
    fn from_fn(
        n: usize,
        theta: Rat,
        provenance: Provenance,
        mut weight: impl FnMut(&Partition) -> Result<Rat>,
    ) -> Result<Self> {
        let weights = enumerate_partitions(n)
            .into_iter()
            .map(|lambda| weight(&lambda).map(|w| (lambda, w)))
            .collect::<Result<_>>()?;
        Ok(MeasureTable {
            n,
            theta,
            weights,
            provenance,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> &Rat {
        &self.theta
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.weights.iter().map(|(p, w)| (p, w))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Weight of `λ`; zero off the level.
    pub fn weight(&self, lambda: &Partition) -> Rat {
        // Canonical order within a level is reverse lexicographic.
        self.weights
            .binary_search_by(|(p, _)| lambda.cmp(p))
            .map(|i| self.weights[i].1.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    pub fn total(&self) -> Rat {
        self.weights.iter().map(|(_, w)| w).sum()
    }

    /// Strictly positive weights summing to one.
    pub fn is_probability(&self) -> bool {
        self.weights.iter().all(|(_, w)| w.is_positive()) && self.total().is_one()
    }

    /// Same weights, ignoring provenance.
    pub fn same_weights(&self, other: &MeasureTable) -> bool {
        self.n == other.n && self.weights == other.weights
    }

    /// `⟨F⟩ = Σ_λ F(λ) M(λ)`.
    pub fn average(&self, obs: &Observable, eval: &Evaluator) -> Result<Rat> {
        check_jack_level(obs, eval, self.n)?;
        let mut sum = Rat::zero();
        for (lambda, w) in &self.weights {
            sum += eval.eval(obs, lambda)? * w;
        }
        Ok(sum)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("measure tables serialize")
    }

    /// `partition,weight` rows; partitions are quoted, integers drop `/1`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("partition,weight\n");
        for (lambda, w) in &self.weights {
            out.push_str(&format!("\"{lambda}\",{}\n", to_compact_string(w)));
        }
        out
    }
}

impl Serialize for MeasureTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let weights: Vec<[String; 2]> = self
            .weights
            .iter()
            .map(|(p, w)| [p.to_string(), to_fraction_string(w)])
            .collect();
        let mut st = s.serialize_struct("MeasureTable", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("theta", &to_fraction_string(&self.theta))?;
        st.serialize_field("weights", &weights)?;
        st.end()
    }
}

fn check_level(n: usize) -> Result<()> {
    if n > MAX_LEVEL {
        return Err(Error::LevelBound {
            requested: n,
            max: MAX_LEVEL,
        });
    }
    Ok(())
}

/// `M_n(λ) = (dim λ)² / n!`.
pub fn plancherel(n: usize) -> Result<MeasureTable> {
    check_level(n)?;
    let nf = from_biguint(&factorial(n));
    MeasureTable::from_fn(n, Rat::one(), Provenance::Plancherel, |lambda| {
        let d = from_biguint(&dim_standard(lambda));
        Ok(&d * &d / &nf)
    })
}

/// `M_{n;θ}(λ) = θ^n dim_θ λ dim′_θ λ / n!` from Jack data.
pub fn jack_plancherel_direct(n: usize, theta: &Rat) -> Result<MeasureTable> {
    check_level(n)?;
    let table = JackTable::build(theta, n)?;
    jack_plancherel_from_table(n, &table)
}

pub fn jack_plancherel_from_table(n: usize, table: &JackTable) -> Result<MeasureTable> {
    check_level(n)?;
    MeasureTable::from_fn(n, table.theta().clone(), Provenance::JackDirect, |lambda| {
        table.plancherel_weight(lambda)
    })
}

/// Marginals `M′_{0;θ}, …, M′_{n_max;θ}` of the growth process.
pub fn growth_marginals(n_max: usize, theta: &Rat) -> Result<Vec<MeasureTable>> {
    check_level(n_max)?;
    let mut levels = Vec::with_capacity(n_max + 1);
    let mut current = vec![(Partition::empty(), Rat::one())];
    for n in 0..=n_max {
        if n > 0 {
            let mut next = std::collections::BTreeMap::<Partition, Rat>::new();
            for (lambda, w) in &current {
                for (nu, p) in growth_kernel(lambda, theta).targets() {
                    *next.entry(nu.clone()).or_insert_with(Rat::zero) += w * p;
                }
            }
            current = next.into_iter().rev().collect();
        }
        levels.push(MeasureTable {
            n,
            theta: theta.clone(),
            weights: current.clone(),
            provenance: Provenance::Growth,
        });
    }
    Ok(levels)
}

pub fn growth_marginal(n: usize, theta: &Rat) -> Result<MeasureTable> {
    Ok(growth_marginals(n, theta)?.pop().expect("level n present"))
}

/// `M_n` from the requested pipeline. The Plancherel source requires θ = 1.
pub fn measure(n: usize, theta: &Rat, source: Provenance) -> Result<MeasureTable> {
    match source {
        Provenance::Plancherel => {
            require_theta_one(theta)?;
            plancherel(n)
        }
        Provenance::JackDirect => jack_plancherel_direct(n, theta),
        Provenance::Growth => growth_marginal(n, theta),
    }
}

/// Tables for every level `0..=n_max`.
pub fn measures(n_max: usize, theta: &Rat, source: Provenance) -> Result<Vec<MeasureTable>> {
    match source {
        Provenance::Plancherel => {
            require_theta_one(theta)?;
            (0..=n_max).map(plancherel).collect()
        }
        Provenance::JackDirect => {
            check_level(n_max)?;
            let table = JackTable::build(theta, n_max)?;
            (0..=n_max)
                .map(|n| jack_plancherel_from_table(n, &table))
                .collect()
        }
        Provenance::Growth => growth_marginals(n_max, theta),
    }
}

fn require_theta_one(theta: &Rat) -> Result<()> {
    if !theta.is_one() {
        return Err(Error::Invalid(format!(
            "the plancherel source needs theta = 1, got {}",
            to_fraction_string(theta)
        )));
    }
    Ok(())
}

/// `⟨F⟩_{n;θ}` over the measure from `source`.
pub fn average(obs: &Observable, n: usize, theta: &Rat, source: Provenance) -> Result<Rat> {
    measure(n, theta, source)?.average(obs, &Evaluator::new(theta.clone()))
}

/// `⟨F⟩_{n;θ}` for `n = 0..=n_max`, sharing one evaluator and one pass
/// over the levels.
pub fn average_series(
    obs: &Observable,
    n_max: usize,
    source: Provenance,
    eval: &Evaluator,
) -> Result<Vec<Rat>> {
    check_jack_level(obs, eval, n_max)?;
    measures(n_max, eval.theta(), source)?
        .iter()
        .map(|m| m.average(obs, eval))
        .collect()
}
