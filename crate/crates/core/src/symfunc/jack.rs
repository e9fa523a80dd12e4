//! Jack `P` and `Q` functions by Gram–Schmidt against `(·,·)_θ`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use super::{inner_product_jack, SymFunc, TransitionTable};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::rat::{factorial, from_biguint, pow, Rat};

pub const DEFAULT_JACK_DEGREE: usize = 8;

#[derive(Clone, Debug)]
struct JackEntry {
    monomial: SymFunc,
    power_sum: SymFunc,
    norm: Rat,
    dim: Rat,
    dim_prime: Rat,
}

/// Jack `P_λ` for every `|λ| ≤ max_degree` at a fixed parameter θ.
///
/// `P_λ` is monic in `m_λ`; `Q_λ = P_λ / (P_λ, P_λ)_θ`.
#[derive(Clone, Debug)]
pub struct JackTable {
    theta: Rat,
    max_degree: usize,
    transitions: Arc<TransitionTable>,
    entries: HashMap<Partition, JackEntry>,
}

impl JackTable {
    pub fn build(theta: &Rat, max_degree: usize) -> Result<Self> {
        Self::build_with(
            theta,
            max_degree,
            Arc::new(TransitionTable::new(max_degree)),
        )
    }

    pub fn build_with(
        theta: &Rat,
        max_degree: usize,
        transitions: Arc<TransitionTable>,
    ) -> Result<Self> {
        // Increasing lexicographic order is a linear extension of dominance.
        Self::build_ordered(theta, max_degree, transitions, |n| {
            let mut v = enumerate_partitions(n);
            v.reverse();
            v
        })
    }

    /// Gram–Schmidt over the partitions of each degree in the order
    /// returned by `order`, which must be a linear extension of dominance
    /// (smallest first).
    pub fn build_ordered(
        theta: &Rat,
        max_degree: usize,
        transitions: Arc<TransitionTable>,
        order: impl Fn(usize) -> Vec<Partition>,
    ) -> Result<Self> {
        if !theta.is_positive() {
            return Err(Error::InvalidTheta(theta.to_string()));
        }
        if transitions.max_degree() < max_degree {
            return Err(Error::DegreeBound {
                requested: max_degree,
                max: transitions.max_degree(),
            });
        }
        let mut entries = HashMap::new();
        for n in 0..=max_degree {
            let mut done: Vec<(SymFunc, Rat)> = Vec::new();
            let p1n = SymFunc::power_sum(Partition::from_unsorted(vec![1; n]));
            for lambda in order(n) {
                let m = transitions.m_to_p(&SymFunc::monomial(lambda.clone()))?;
                let mut p = m.clone();
                for (prev, norm) in &done {
                    let c = inner_product_jack(&m, prev, theta)? / norm;
                    if !c.is_zero() {
                        p = &p - &prev.scale(&c);
                    }
                }
                let norm = inner_product_jack(&p, &p, theta)?;
                debug_assert!(norm.is_positive());
                let dim_prime = inner_product_jack(&p1n, &p, theta)?;
                let dim = &dim_prime / &norm;
                entries.insert(
                    lambda,
                    JackEntry {
                        monomial: transitions.p_to_m(&p)?,
                        power_sum: p.clone(),
                        norm: norm.clone(),
                        dim,
                        dim_prime,
                    },
                );
                done.push((p, norm));
            }
        }
        Ok(JackTable {
            theta: theta.clone(),
            max_degree,
            transitions,
            entries,
        })
    }

    pub fn theta(&self) -> &Rat {
        &self.theta
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn transitions(&self) -> &TransitionTable {
        &self.transitions
    }

    fn entry(&self, lambda: &Partition) -> Result<&JackEntry> {
        self.entries.get(lambda).ok_or(Error::DegreeBound {
            requested: lambda.size(),
            max: self.max_degree,
        })
    }

    /// `P_λ` in the monomial basis.
    pub fn p(&self, lambda: &Partition) -> Result<&SymFunc> {
        Ok(&self.entry(lambda)?.monomial)
    }

    /// `P_λ` in the power-sum basis.
    pub fn p_power_sum(&self, lambda: &Partition) -> Result<&SymFunc> {
        Ok(&self.entry(lambda)?.power_sum)
    }

    /// `Q_λ` in the monomial basis.
    pub fn q(&self, lambda: &Partition) -> Result<SymFunc> {
        let e = self.entry(lambda)?;
        Ok(e.monomial.scale(&e.norm.recip()))
    }

    /// `(P_λ, P_λ)_θ`.
    pub fn norm(&self, lambda: &Partition) -> Result<&Rat> {
        Ok(&self.entry(lambda)?.norm)
    }

    /// `dim_θ λ = (p_1^n, Q_λ)_θ`.
    pub fn dim_theta(&self, lambda: &Partition) -> Result<&Rat> {
        Ok(&self.entry(lambda)?.dim)
    }

    /// `dim'_θ λ = (p_1^n, P_λ)_θ`.
    pub fn dim_theta_prime(&self, lambda: &Partition) -> Result<&Rat> {
        Ok(&self.entry(lambda)?.dim_prime)
    }

    /// `(p_1^{|λ|-|μ|} P_μ, P_λ)_θ`; zero when `|μ| > |λ|`.
    fn skew_pairing(&self, mu: &Partition, lambda: &Partition) -> Result<Rat> {
        let target = self.entry(lambda)?;
        if mu.size() > lambda.size() {
            return Ok(Rat::zero());
        }
        let source = self.entry(mu)?;
        let lifted = source.power_sum.times_p1_power(lambda.size() - mu.size());
        inner_product_jack(&lifted, &target.power_sum, &self.theta)
    }

    /// `dim_θ(μ, λ) = (p_1^{|λ|-|μ|} P_μ, Q_λ)_θ`.
    pub fn dim_theta_skew(&self, mu: &Partition, lambda: &Partition) -> Result<Rat> {
        Ok(self.skew_pairing(mu, lambda)? / self.norm(lambda)?)
    }

    /// `dim'_θ(μ, λ) = (p_1^{|λ|-|μ|} Q_μ, P_λ)_θ`.
    pub fn dim_theta_prime_skew(&self, mu: &Partition, lambda: &Partition) -> Result<Rat> {
        if mu.size() > lambda.size() {
            self.entry(lambda)?;
            return Ok(Rat::zero());
        }
        Ok(self.skew_pairing(mu, lambda)? / self.norm(mu)?)
    }

    /// Pieri multiplicity `κ_θ(μ, ν) = (p_1 P_μ, Q_ν)_θ` of the edge `μ ↗ ν`.
    pub fn pieri_kappa(&self, mu: &Partition, nu: &Partition) -> Result<Rat> {
        if nu.size() != mu.size() + 1 || !nu.contains(mu) {
            return Err(Error::NotCovering {
                mu: format!("({mu})"),
                nu: format!("({nu})"),
            });
        }
        self.dim_theta_skew(mu, nu)
    }

    /// Jack–Plancherel weight `θ^n dim_θ λ dim'_θ λ / n!`.
    pub fn plancherel_weight(&self, lambda: &Partition) -> Result<Rat> {
        let e = self.entry(lambda)?;
        let n = lambda.size();
        Ok(pow(&self.theta, n as i32) * &e.dim * &e.dim_prime / from_biguint(&factorial(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::{dim_skew, dim_standard, partitions_up_to};
    use crate::rat::{rat, ratio};
    use crate::symfunc::Basis;

    fn thetas() -> Vec<Rat> {
        vec![ratio(1, 2), rat(1), rat(2), ratio(3, 5)]
    }

    #[test]
    fn low_degree_examples() {
        let theta = ratio(3, 5);
        let t = JackTable::build(&theta, 4).unwrap();
        assert_eq!(t.p(&part![1]).unwrap(), &SymFunc::monomial(part![1]));
        assert_eq!(
            t.p(&part![1, 1, 1]).unwrap(),
            &SymFunc::monomial(part![1, 1, 1])
        );
        let c = rat(2) * &theta / (rat(1) + &theta);
        let expected = SymFunc::from_terms(Basis::Monomial, [(part![2], rat(1)), (part![1, 1], c)]);
        assert_eq!(t.p(&part![2]).unwrap(), &expected);
        assert_eq!(t.dim_theta(&part![1]).unwrap(), &rat(1));
        assert_eq!(t.dim_theta_prime(&part![1]).unwrap(), &theta.recip());
        assert_eq!(t.dim_theta(&part![]).unwrap(), &rat(1));
        assert_eq!(t.dim_theta_prime(&part![]).unwrap(), &rat(1));
    }

    #[test]
    fn schur_at_theta_one() {
        let t = JackTable::build(&rat(1), 8).unwrap();
        let s21 = SymFunc::from_terms(
            Basis::Monomial,
            [(part![2, 1], rat(1)), (part![1, 1, 1], rat(2))],
        );
        assert_eq!(t.p(&part![2, 1]).unwrap(), &s21);
        let s31 = SymFunc::from_terms(
            Basis::Monomial,
            [
                (part![3, 1], rat(1)),
                (part![2, 2], rat(1)),
                (part![2, 1, 1], rat(2)),
                (part![1, 1, 1, 1], rat(3)),
            ],
        );
        assert_eq!(t.p(&part![3, 1]).unwrap(), &s31);
        for lambda in partitions_up_to(8) {
            let d = from_biguint(&dim_standard(&lambda));
            assert_eq!(t.dim_theta(&lambda).unwrap(), &d, "{lambda}");
            assert_eq!(t.dim_theta_prime(&lambda).unwrap(), &d, "{lambda}");
            assert_eq!(t.q(&lambda).unwrap(), *t.p(&lambda).unwrap());
        }
    }

    #[test]
    fn biorthogonality_and_triangularity() {
        for theta in thetas() {
            let t = JackTable::build(&theta, 7).unwrap();
            for n in 0..=7 {
                let parts = enumerate_partitions(n);
                for lambda in &parts {
                    let p = t.p(lambda).unwrap();
                    assert_eq!(p.coeff(lambda), rat(1));
                    for (mu, _) in p.terms() {
                        assert!(lambda.dominates(mu), "P_{lambda} has m_{mu} at θ={theta}");
                    }
                    assert!(t.norm(lambda).unwrap().is_positive());
                    assert!(t.dim_theta(lambda).unwrap().is_positive());
                    assert!(t.dim_theta_prime(lambda).unwrap().is_positive());
                    for mu in &parts {
                        let ip = t
                            .transitions()
                            .inner_product(p, &t.q(mu).unwrap(), &theta)
                            .unwrap();
                        let expected = if lambda == mu { rat(1) } else { rat(0) };
                        assert_eq!(ip, expected, "(P_{lambda}, Q_{mu}) at θ={theta}");
                    }
                }
            }
        }
    }

    #[test]
    fn independent_of_linear_extension() {
        let theta = ratio(3, 5);
        let trans = Arc::new(TransitionTable::new(7));
        let lex = JackTable::build_with(&theta, 7, trans.clone()).unwrap();
        // Sum of squared parts is strictly monotone along dominance.
        let by_squares = JackTable::build_ordered(&theta, 7, trans, |n| {
            let mut v = enumerate_partitions(n);
            v.sort_by_key(|p| (p.parts().iter().map(|x| x * x).sum::<usize>(), p.clone()));
            v
        })
        .unwrap();
        for lambda in partitions_up_to(7) {
            assert_eq!(lex.p(&lambda).unwrap(), by_squares.p(&lambda).unwrap());
        }
    }

    #[test]
    fn skew_dimensions() {
        for theta in thetas() {
            let t = JackTable::build(&theta, 6).unwrap();
            for lambda in partitions_up_to(6) {
                assert_eq!(t.dim_theta_skew(&lambda, &lambda).unwrap(), rat(1));
                assert_eq!(t.dim_theta_prime_skew(&lambda, &lambda).unwrap(), rat(1));
                for mu in partitions_up_to(6) {
                    let d = t.dim_theta_skew(&mu, &lambda).unwrap();
                    let dp = t.dim_theta_prime_skew(&mu, &lambda).unwrap();
                    if lambda.contains(&mu) {
                        assert!(d.is_positive() && dp.is_positive(), "{mu} ⊆ {lambda}");
                    } else {
                        assert!(d.is_zero() && dp.is_zero(), "{mu} ⊄ {lambda}");
                    }
                }
            }
            assert_eq!(t.dim_theta_skew(&part![2], &part![1, 1]).unwrap(), rat(0));
        }
        let t = JackTable::build(&rat(1), 3).unwrap();
        assert_eq!(t.dim_theta_skew(&part![1], &part![2, 1]).unwrap(), rat(2));
    }

    /// Sum over monotone paths of the product of edge multiplicities.
    fn path_weight_sum(t: &JackTable, mu: &Partition, lambda: &Partition) -> Rat {
        if mu == lambda {
            return rat(1);
        }
        if mu.size() >= lambda.size() {
            return rat(0);
        }
        mu.addable_boxes()
            .into_iter()
            .filter(|nu| lambda.contains(nu))
            .map(|nu| t.pieri_kappa(mu, &nu).unwrap() * path_weight_sum(t, &nu, lambda))
            .sum()
    }

    #[test]
    fn path_weights_reproduce_skew_dimensions() {
        for theta in thetas() {
            let t = JackTable::build(&theta, 6).unwrap();
            for lambda in partitions_up_to(6) {
                for mu in partitions_up_to(lambda.size()) {
                    if lambda.contains(&mu) {
                        assert_eq!(
                            path_weight_sum(&t, &mu, &lambda),
                            t.dim_theta_skew(&mu, &lambda).unwrap(),
                            "{mu} -> {lambda} at θ={theta}"
                        );
                    }
                }
            }
            assert_eq!(t.pieri_kappa(&part![], &part![1]).unwrap(), rat(1));
            let k = t.pieri_kappa(&part![], &part![1]).unwrap()
                * t.pieri_kappa(&part![1], &part![2]).unwrap();
            assert_eq!(&k, t.dim_theta(&part![2]).unwrap());
        }
    }

    #[test]
    fn pieri_is_one_at_theta_one() {
        let t = JackTable::build(&rat(1), 6).unwrap();
        for mu in partitions_up_to(5) {
            for nu in mu.addable_boxes() {
                assert_eq!(t.pieri_kappa(&mu, &nu).unwrap(), rat(1));
                assert_eq!(from_biguint(&dim_skew(&mu, &nu)), rat(1));
            }
        }
    }

    #[test]
    fn pieri_rejects_non_edges() {
        let t = JackTable::build(&rat(2), 3).unwrap();
        assert!(matches!(
            t.pieri_kappa(&part![1], &part![3]),
            Err(Error::NotCovering { .. })
        ));
        assert!(matches!(
            t.pieri_kappa(&part![2], &part![1, 1, 1]),
            Err(Error::NotCovering { .. })
        ));
    }

    #[test]
    fn bound_exceeded() {
        let t = JackTable::build(&rat(2), 3).unwrap();
        assert_eq!(
            t.dim_theta(&part![2, 2]).unwrap_err(),
            Error::DegreeBound {
                requested: 4,
                max: 3
            }
        );
        assert!(JackTable::build(&rat(0), 3).is_err());
    }
}
