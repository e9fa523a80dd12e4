use std::collections::HashMap;

use num_traits::Zero;

use super::{inner_product_jack, Basis, SymFunc};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::rat::{rat, Rat};

/// Change of basis between monomials and power sums up to a fixed degree.
#[derive(Clone, Debug)]
pub struct TransitionTable {
    max_degree: usize,
    p_in_m: HashMap<Partition, SymFunc>,
    m_in_p: HashMap<Partition, SymFunc>,
}

/// Number of ways to distribute the parts of `lambda` over the slots of
/// `mu` so that every slot is filled exactly; this is the coefficient of
/// `m_μ` in `p_λ`.
fn placement_count(parts: &[usize], slots: &mut [usize]) -> u64 {
    let Some((&first, rest)) = parts.split_first() else {
        return u64::from(slots.iter().all(|&s| s == 0));
    };
    let mut total = 0;
    for j in 0..slots.len() {
        if slots[j] >= first {
            slots[j] -= first;
            total += placement_count(rest, slots);
            slots[j] += first;
        }
    }
    total
}

impl TransitionTable {
    pub fn new(max_degree: usize) -> Self {
        let mut p_in_m = HashMap::new();
        let mut m_in_p: HashMap<Partition, SymFunc> = HashMap::new();
        for n in 0..=max_degree {
            // Reverse lexicographic: every μ strictly above λ in dominance
            // comes before λ.
            let parts = enumerate_partitions(n);
            for lambda in &parts {
                let mut p = SymFunc::zero(Basis::Monomial);
                for mu in &parts {
                    let mut slots = mu.parts().to_vec();
                    let c = placement_count(lambda.parts(), &mut slots);
                    p.add_term(mu.clone(), rat(c as i64));
                }
                p_in_m.insert(lambda.clone(), p);
            }
            for lambda in &parts {
                let row = &p_in_m[lambda];
                let diag = row.coeff(lambda);
                let mut m = SymFunc::power_sum(lambda.clone());
                for (mu, c) in row.terms() {
                    if mu != lambda {
                        m = &m - &m_in_p[mu].scale(c);
                    }
                }
                m_in_p.insert(lambda.clone(), m.scale(&diag.recip()));
            }
        }
        TransitionTable {
            max_degree,
            p_in_m,
            m_in_p,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn check(&self, f: &SymFunc) -> Result<()> {
        let d = f.degree();
        if d > self.max_degree {
            return Err(Error::DegreeBound {
                requested: d,
                max: self.max_degree,
            });
        }
        Ok(())
    }

    fn convert(
        &self,
        f: &SymFunc,
        table: &HashMap<Partition, SymFunc>,
        to: Basis,
    ) -> Result<SymFunc> {
        self.check(f)?;
        let mut out = SymFunc::zero(to);
        for (idx, c) in f.terms() {
            for (k, v) in table[idx].terms() {
                out.add_term(k.clone(), c * v);
            }
        }
        Ok(out)
    }

    /// Monomial to power-sum basis; inputs already in power sums pass through.
    pub fn m_to_p(&self, f: &SymFunc) -> Result<SymFunc> {
        match f.basis() {
            Basis::PowerSum => {
                self.check(f)?;
                Ok(f.clone())
            }
            Basis::Monomial => self.convert(f, &self.m_in_p, Basis::PowerSum),
        }
    }

    /// Power-sum to monomial basis; inputs already in monomials pass through.
    pub fn p_to_m(&self, f: &SymFunc) -> Result<SymFunc> {
        match f.basis() {
            Basis::Monomial => {
                self.check(f)?;
                Ok(f.clone())
            }
            Basis::PowerSum => self.convert(f, &self.p_in_m, Basis::Monomial),
        }
    }

    pub fn to_basis(&self, f: &SymFunc, basis: Basis) -> Result<SymFunc> {
        match basis {
            Basis::Monomial => self.p_to_m(f),
            Basis::PowerSum => self.m_to_p(f),
        }
    }

    /// `(f, g)_θ` for inputs in either basis.
    pub fn inner_product(&self, f: &SymFunc, g: &SymFunc, theta: &Rat) -> Result<Rat> {
        inner_product_jack(&self.m_to_p(f)?, &self.m_to_p(g)?, theta)
    }

    /// Product computed in the power-sum basis, returned in the basis of `f`.
    pub fn multiply(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        let prod = self.m_to_p(f)?.multiply(&self.m_to_p(g)?);
        if prod.degree() > self.max_degree {
            return Err(Error::DegreeBound {
                requested: prod.degree(),
                max: self.max_degree,
            });
        }
        self.to_basis(&prod, f.basis())
    }

    /// Coefficient of `m_μ` in `p_λ`.
    pub fn p_coefficient_in_m(&self, lambda: &Partition, mu: &Partition) -> Rat {
        self.p_in_m
            .get(lambda)
            .map(|f| f.coeff(mu))
            .unwrap_or_else(Rat::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::partitions_up_to;
    use crate::rat::ratio;
    use proptest::prelude::*;

    #[test]
    fn basis_change_examples() {
        let t = TransitionTable::new(4);
        assert_eq!(
            t.m_to_p(&SymFunc::monomial(part![1])).unwrap(),
            SymFunc::power_sum(part![1])
        );
        let m11 = t.m_to_p(&SymFunc::monomial(part![1, 1])).unwrap();
        assert_eq!(
            m11,
            SymFunc::from_terms(
                Basis::PowerSum,
                [(part![1, 1], ratio(1, 2)), (part![2], ratio(-1, 2))]
            )
        );
        assert_eq!(
            t.p_to_m(&SymFunc::power_sum(part![2])).unwrap(),
            SymFunc::monomial(part![2])
        );
    }

    #[test]
    fn m11_checked_by_evaluation() {
        let t = TransitionTable::new(2);
        let vars = [rat(1), rat(2)];
        let m = SymFunc::monomial(part![1, 1]);
        assert_eq!(m.evaluate(&vars), rat(2));
        assert_eq!(t.m_to_p(&m).unwrap().evaluate(&vars), rat(2));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let t = TransitionTable::new(3);
        let err = t.m_to_p(&SymFunc::monomial(part![2, 2])).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeBound {
                requested: 4,
                max: 3
            }
        );
    }

    #[test]
    fn monomial_product_matches_structure_constants() {
        let t = TransitionTable::new(6);
        for sigma in partitions_up_to(3) {
            for tau in partitions_up_to(3) {
                let via_p = t
                    .multiply(
                        &SymFunc::monomial(sigma.clone()),
                        &SymFunc::monomial(tau.clone()),
                    )
                    .unwrap();
                let direct =
                    SymFunc::monomial(sigma.clone()).multiply(&SymFunc::monomial(tau.clone()));
                assert_eq!(via_p, direct, "{sigma} * {tau}");
            }
        }
    }

    fn arb_symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
        let all = partitions_up_to(max_degree);
        proptest::collection::vec((0..all.len(), -20i64..20, 1i64..6), 0..8).prop_map(move |ts| {
            SymFunc::from_terms(
                Basis::Monomial,
                ts.into_iter()
                    .map(|(i, n, d)| (all[i].clone(), ratio(n, d))),
            )
        })
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(f in arb_symfunc(8)) {
            let t = TransitionTable::new(8);
            let p = t.m_to_p(&f).unwrap();
            prop_assert_eq!(t.p_to_m(&p).unwrap(), f);
        }

        #[test]
        fn conversion_preserves_values(f in arb_symfunc(5)) {
            let t = TransitionTable::new(5);
            let vars = [rat(2), ratio(-1, 2), rat(3), ratio(1, 3), rat(-1)];
            prop_assert_eq!(t.m_to_p(&f).unwrap().evaluate(&vars), f.evaluate(&vars));
        }
    }
}
