//! Symmetric functions over exact rationals.
//!
//! A [`SymFunc`] is a sparse combination of monomial (`m_λ`) or power-sum
//! (`p_λ`) basis elements. Products are native in the power-sum basis;
//! the θ-deformed inner product is diagonal there.

mod basis;
mod jack;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::rat::{factorial, from_biguint, pow, to_fraction_string, Rat};

pub use basis::TransitionTable;
pub use jack::{JackTable, DEFAULT_JACK_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    Monomial,
    PowerSum,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::PowerSum => "power-sum",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rat>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        Self::zero(basis).with_term(index, Rat::one())
    }

    pub fn monomial(index: Partition) -> Self {
        Self::basis_element(Basis::Monomial, index)
    }

    pub fn power_sum(index: Partition) -> Self {
        Self::basis_element(Basis::PowerSum, index)
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rat)>) -> Self {
        let mut f = Self::zero(basis);
        for (index, c) in terms {
            f.add_term(index, c);
        }
        f
    }

    pub fn with_term(mut self, index: Partition, c: Rat) -> Self {
        self.add_term(index, c);
        self
    }

    pub fn add_term(&mut self, index: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &Partition) -> Rat {
        self.terms.get(index).cloned().unwrap_or_else(Rat::zero)
    }

    /// Largest index size among the stored terms; zero for the empty sum.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn combine(&self, other: &SymFunc, sign: &Rat) -> SymFunc {
        assert_eq!(
            self.basis, other.basis,
            "cannot combine symmetric functions in different bases"
        );
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v * sign);
        }
        out
    }

    /// Multiplies by `p_1^k`; power-sum basis only.
    pub fn times_p1_power(&self, k: usize) -> Self {
        assert_eq!(self.basis, Basis::PowerSum);
        let ones = Partition::from_unsorted(vec![1; k]);
        SymFunc {
            basis: Basis::PowerSum,
            terms: self
                .terms
                .iter()
                .map(|(idx, c)| (idx.union(&ones), c.clone()))
                .collect(),
        }
    }

    /// Exact product. Power sums multiply by concatenating indices;
    /// monomials go through the structure constants.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(
            self.basis, other.basis,
            "cannot multiply symmetric functions in different bases"
        );
        let mut out = SymFunc::zero(self.basis);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                match self.basis {
                    Basis::PowerSum => out.add_term(a.union(b), c),
                    Basis::Monomial => {
                        for (rho, k) in monomial_structure_constants(a, b) {
                            out.add_term(rho, &c * from_biguint(&k));
                        }
                    }
                }
            }
        }
        out
    }

    /// Evaluates at finitely many variables (the rest being zero).
    pub fn evaluate(&self, vars: &[Rat]) -> Rat {
        match self.basis {
            Basis::PowerSum => {
                let mut cache: BTreeMap<usize, Rat> = BTreeMap::new();
                let mut power = |r: usize| -> Rat {
                    cache
                        .entry(r)
                        .or_insert_with(|| vars.iter().map(|x| pow(x, r as i32)).sum())
                        .clone()
                };
                self.terms
                    .iter()
                    .map(|(idx, c)| idx.parts().iter().fold(c.clone(), |acc, &r| acc * power(r)))
                    .sum()
            }
            Basis::Monomial => self
                .terms
                .iter()
                .map(|(idx, c)| c * monomial_eval(idx, vars))
                .sum(),
        }
    }

    /// Terms in canonical order (by degree, then reverse lexicographic).
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.canonical_cmp(b.0));
        v
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.combine(rhs, &Rat::one())
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self.combine(rhs, &-Rat::one())
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(&-Rat::one())
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(String, String)> = self
            .sorted_terms()
            .into_iter()
            .map(|(k, v)| (k.to_string(), to_fraction_string(v)))
            .collect();
        let mut st = s.serialize_struct("SymFunc", 2)?;
        st.serialize_field("basis", self.basis.name())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `m_λ(x_1, …, x_k)` by summing over distinct placements of the parts.
fn monomial_eval(index: &Partition, vars: &[Rat]) -> Rat {
    if index.len() > vars.len() {
        return Rat::zero();
    }
    let mut exps = index.parts().to_vec();
    exps.resize(vars.len(), 0);
    distinct_permutations(exps)
        .into_iter()
        .map(|e| {
            e.iter()
                .zip(vars)
                .fold(Rat::one(), |acc, (&k, x)| acc * pow(x, k as i32))
        })
        .sum()
}

/// `z_λ = ∏ i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigUint {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (i, m)| {
            acc * num_traits::pow(BigUint::from(i), m) * factorial(m)
        })
}

/// `(f, g)_θ` with `(p_λ, p_μ)_θ = δ_{λμ} z_λ θ^{-ℓ(λ)}`.
///
/// The exponent is the length of `λ` (Macdonald's `α^{ℓ(λ)}` with
/// `α = 1/θ`); a size-dependent factor would be constant on each degree
/// and collapse every Jack function to a Schur function.
///
/// Both arguments must be in the power-sum basis; see
/// [`TransitionTable::inner_product`] for mixed inputs.
pub fn inner_product_jack(f: &SymFunc, g: &SymFunc, theta: &Rat) -> Result<Rat> {
    if f.basis != Basis::PowerSum || g.basis != Basis::PowerSum {
        return Err(Error::Invalid(
            "inner product needs power-sum inputs".to_string(),
        ));
    }
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    Ok(small
        .terms
        .iter()
        .filter_map(|(idx, c)| large.terms.get(idx).map(|d| (idx, c * d)))
        .map(|(idx, cd)| cd * from_biguint(&z_lambda(idx)) * pow(theta, -(idx.len() as i32)))
        .sum())
}

/// All distinct rearrangements of a multiset, in lexicographic order.
pub(crate) fn distinct_permutations(mut v: Vec<usize>) -> Vec<Vec<usize>> {
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len())
            .rev()
            .find(|&j| v[j] > v[i - 1])
            .expect("pivot");
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

/// Structure constants `c^ρ_{στ}` of `m_σ m_τ = Σ c^ρ_{στ} m_ρ`.
///
/// Reads off the coefficient of `x^ρ` in the product taken in `ℓ(ρ)`
/// variables, for every `ρ` of size `|σ| + |τ|`.
pub fn monomial_structure_constants(
    sigma: &Partition,
    tau: &Partition,
) -> BTreeMap<Partition, BigUint> {
    let mut out = BTreeMap::new();
    let n = sigma.size() + tau.size();
    for rho in enumerate_partitions(n) {
        let k = rho.len();
        if sigma.len() > k || tau.len() > k || k > sigma.len() + tau.len() {
            continue;
        }
        let mut padded = sigma.parts().to_vec();
        padded.resize(k, 0);
        let count = distinct_permutations(padded)
            .into_iter()
            .filter(|alpha| {
                if alpha.iter().zip(rho.parts()).any(|(a, r)| a > r) {
                    return false;
                }
                let rest: Vec<usize> = rho.parts().iter().zip(alpha).map(|(r, a)| r - a).collect();
                Partition::from_unsorted(rest) == *tau
            })
            .count();
        if count > 0 {
            out.insert(rho, BigUint::from(count));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rat::{rat, ratio};

    #[test]
    fn z_values() {
        assert_eq!(z_lambda(&part![1]), BigUint::from(1u32));
        assert_eq!(z_lambda(&part![1, 1]), BigUint::from(2u32));
        assert_eq!(z_lambda(&part![2, 2, 1]), BigUint::from(8u32));
        assert_eq!(z_lambda(&part![]), BigUint::from(1u32));
    }

    #[test]
    fn inner_product_examples() {
        let theta = ratio(3, 5);
        let p1 = SymFunc::power_sum(part![1]);
        let p11 = SymFunc::power_sum(part![1, 1]);
        let p2 = SymFunc::power_sum(part![2]);
        assert_eq!(inner_product_jack(&p1, &p1, &theta).unwrap(), theta.recip());
        assert_eq!(
            inner_product_jack(&p11, &p11, &theta).unwrap(),
            rat(2) / (&theta * &theta)
        );
        assert_eq!(inner_product_jack(&p2, &p11, &theta).unwrap(), rat(0));
        assert_eq!(
            inner_product_jack(&p2, &p2, &theta).unwrap(),
            rat(2) / &theta
        );
        assert!(inner_product_jack(&SymFunc::monomial(part![1]), &p1, &theta).is_err());
    }

    #[test]
    fn multiply_examples() {
        let p1 = SymFunc::power_sum(part![1]);
        assert_eq!(p1.multiply(&p1), SymFunc::power_sum(part![1, 1]));
        let m1 = SymFunc::monomial(part![1]);
        let expected =
            SymFunc::from_terms(Basis::Monomial, [(part![2], rat(1)), (part![1, 1], rat(2))]);
        assert_eq!(m1.multiply(&m1), expected);
        assert!(m1.multiply(&SymFunc::zero(Basis::Monomial)).is_zero());
    }

    #[test]
    fn structure_constant_examples() {
        let c = monomial_structure_constants(&part![1], &part![1]);
        assert_eq!(
            c,
            BTreeMap::from([
                (part![2], BigUint::from(1u32)),
                (part![1, 1], BigUint::from(2u32))
            ])
        );
        let s = part![3, 1];
        assert_eq!(
            monomial_structure_constants(&s, &part![]),
            BTreeMap::from([(s.clone(), BigUint::one())])
        );
        assert_eq!(
            monomial_structure_constants(&part![2], &part![1]),
            BTreeMap::from([(part![3], BigUint::one()), (part![2, 1], BigUint::one())])
        );
    }

    /// Checks `c^ρ_{στ}` by evaluating both sides at sample points in
    /// enough variables.
    #[test]
    fn structure_constants_match_evaluation() {
        let vars: Vec<Rat> = vec![
            rat(2),
            ratio(-1, 3),
            rat(5),
            ratio(7, 2),
            rat(-3),
            ratio(1, 7),
        ];
        for a in 0..=3 {
            for b in 0..=3 {
                for sigma in enumerate_partitions(a) {
                    for tau in enumerate_partitions(b) {
                        let lhs = monomial_eval(&sigma, &vars) * monomial_eval(&tau, &vars);
                        let rhs: Rat = monomial_structure_constants(&sigma, &tau)
                            .iter()
                            .map(|(rho, c)| from_biguint(c) * monomial_eval(rho, &vars))
                            .sum();
                        assert_eq!(lhs, rhs, "{sigma} * {tau}");
                    }
                }
            }
        }
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let mut f = SymFunc::power_sum(part![2]);
        f.add_term(part![2], rat(-1));
        assert!(f.is_zero());
        let g = &SymFunc::power_sum(part![1]) - &SymFunc::power_sum(part![1]);
        assert!(g.is_zero());
    }

    #[test]
    fn permutations_are_distinct() {
        let p = distinct_permutations(vec![1, 0, 1]);
        assert_eq!(p, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn json_form() {
        let f = SymFunc::from_terms(
            Basis::PowerSum,
            [(part![1, 1], ratio(1, 2)), (part![2], ratio(-1, 2))],
        );
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"basis":"power-sum","terms":[["2","-1/2"],["1,1","1/2"]]}"#
        );
    }
}
