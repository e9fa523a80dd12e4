//! Observables: exactly evaluatable functions on Young diagrams, each
//! carrying a certified upper bound on its filtration degree.

mod kerov;
mod parse;
mod regular;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::measure::growth_kernel;
use crate::partition::Partition;
use crate::rat::{to_compact_string, Rat};
use crate::symfunc::{Basis, JackTable, SymFunc, TransitionTable, DEFAULT_JACK_DEGREE};

pub use kerov::{frak_p, h_rho, h_series, hh_eval, kerov_coords, KerovCoords};
pub use parse::parse_observable;
pub use regular::{
    content_power, content_power_theta, eval_g_phi, eval_h_psi, f_mu, f_mu_jack, h_psi_arguments,
    phi_eval, pstar, superp, theta_contents,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Observable {
    Const(Rat),
    /// `p*_{m;θ}`.
    PStar(u32),
    /// Super power sum in the modified Frobenius coordinates (θ-free).
    SuperP(u32),
    /// `G_φ` over θ-contents; φ stored in the power-sum basis.
    ContentG(SymFunc),
    /// `H_ψ`; ψ stored in the power-sum basis.
    HPsi(SymFunc),
    FMu(Partition),
    FMuJack(Partition),
    /// `h_m`.
    HCoeff(u32),
    /// `h_ρ = ∏ h_{ρ_i}`.
    HProd(Partition),
    /// `𝔭_m`.
    Frak(u32),
    Product(Vec<Observable>),
    Linear(Vec<(Rat, Observable)>),
    /// `∂F`.
    Del(Box<Observable>),
}

impl Observable {
    pub fn one() -> Self {
        Observable::Const(Rat::one())
    }

    /// `G_φ`; monomial inputs are converted to power sums.
    pub fn content_g(phi: &SymFunc) -> Result<Self> {
        Ok(Observable::ContentG(to_power_sums(phi)?))
    }

    pub fn h_psi(psi: &SymFunc) -> Result<Self> {
        Ok(Observable::HPsi(to_power_sums(psi)?))
    }

    /// `p̂_{r_1} p̂_{r_2} ⋯`; zero exponents contribute `p̂_0 = |λ| = p*_1`.
    pub fn content_product(exponents: &[usize]) -> Self {
        let zeros = exponents.iter().filter(|&&r| r == 0).count();
        let nonzero = Partition::from_unsorted(exponents.to_vec());
        let g = Observable::ContentG(SymFunc::power_sum(nonzero));
        if zeros == 0 {
            return g;
        }
        let mut factors = vec![Observable::PStar(1); zeros];
        if exponents.len() > zeros {
            factors.push(g);
        }
        if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Observable::Product(factors)
        }
    }

    pub fn del(self) -> Self {
        Observable::Del(Box::new(self))
    }

    pub fn times(self, other: Observable) -> Self {
        Observable::Product(vec![self, other])
    }

    /// Upper bound for the filtration degree. Products add, linear
    /// combinations take the maximum, `∂` lowers the bound by one.
    pub fn degree_bound(&self) -> usize {
        let shifted = |f: &SymFunc| {
            f.terms()
                .map(|(rho, _)| rho.size() + rho.len())
                .max()
                .unwrap_or(0)
        };
        match self {
            Observable::Const(_) => 0,
            Observable::PStar(m) | Observable::SuperP(m) => *m as usize,
            Observable::ContentG(f) | Observable::HPsi(f) => shifted(f),
            Observable::FMu(mu) | Observable::FMuJack(mu) => mu.size(),
            Observable::HCoeff(m) | Observable::Frak(m) => (*m as usize).saturating_sub(1),
            Observable::HProd(rho) => rho.size() - rho.len(),
            Observable::Product(fs) => fs.iter().map(Observable::degree_bound).sum(),
            Observable::Linear(ts) => ts.iter().map(|(_, o)| o.degree_bound()).max().unwrap_or(0),
            Observable::Del(inner) => inner.degree_bound().saturating_sub(1),
        }
    }

    /// Whether the value at a diagram depends on θ.
    pub fn is_theta_sensitive(&self) -> bool {
        match self {
            Observable::Const(_) | Observable::SuperP(_) | Observable::FMu(_) => false,
            Observable::PStar(m) => *m > 1,
            Observable::ContentG(_)
            | Observable::HPsi(_)
            | Observable::FMuJack(_)
            | Observable::HCoeff(_)
            | Observable::HProd(_)
            | Observable::Frak(_)
            | Observable::Del(_) => true,
            Observable::Product(fs) => fs.iter().any(Observable::is_theta_sensitive),
            Observable::Linear(ts) => ts.iter().any(|(_, o)| o.is_theta_sensitive()),
        }
    }

    /// Whether some `F_{μ;θ}` appears inside.
    pub fn uses_jack(&self) -> bool {
        match self {
            Observable::FMuJack(_) => true,
            Observable::Product(fs) => fs.iter().any(Observable::uses_jack),
            Observable::Linear(ts) => ts.iter().any(|(_, o)| o.uses_jack()),
            Observable::Del(inner) => inner.uses_jack(),
            _ => false,
        }
    }
}

impl Observable {
    /// Maximal nesting of `∂`; evaluation at level n reaches level n + depth.
    pub fn del_depth(&self) -> usize {
        match self {
            Observable::Del(inner) => 1 + inner.del_depth(),
            Observable::Product(fs) => fs.iter().map(Observable::del_depth).max().unwrap_or(0),
            Observable::Linear(ts) => ts.iter().map(|(_, o)| o.del_depth()).max().unwrap_or(0),
            _ => 0,
        }
    }
}

fn to_power_sums(f: &SymFunc) -> Result<SymFunc> {
    match f.basis() {
        Basis::PowerSum => Ok(f.clone()),
        Basis::Monomial => TransitionTable::new(f.degree()).m_to_p(f),
    }
}

fn fmt_symfunc_atom(f: &mut fmt::Formatter<'_>, name: &str, phi: &SymFunc) -> fmt::Result {
    let atom = |idx: &Partition| format!("{name}:p({idx})");
    match phi.sorted_terms().as_slice() {
        [] => f.write_str("0"),
        [(idx, c)] if c.is_one() => f.write_str(&atom(idx)),
        terms => {
            f.write_str("(")?;
            for (k, (idx, c)) in terms.iter().enumerate() {
                if k > 0 {
                    f.write_str("+")?;
                }
                write!(f, "{}*{}", to_compact_string(c), atom(idx))?;
            }
            f.write_str(")")
        }
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Observable::Const(c) => f.write_str(&to_compact_string(c)),
            Observable::PStar(m) => write!(f, "pstar:{m}"),
            Observable::SuperP(m) => write!(f, "superp:{m}"),
            Observable::ContentG(phi) => fmt_symfunc_atom(f, "content", phi),
            Observable::HPsi(psi) => fmt_symfunc_atom(f, "hpsi", psi),
            Observable::FMu(mu) => write!(f, "fmu:{mu}"),
            Observable::FMuJack(mu) => write!(f, "fmujack:{mu}"),
            Observable::HCoeff(m) => write!(f, "h:{m}"),
            Observable::HProd(rho) => write!(f, "hrho:{rho}"),
            Observable::Frak(m) => write!(f, "frak:{m}"),
            Observable::Product(fs) => {
                if fs.is_empty() {
                    return f.write_str("1");
                }
                for (k, o) in fs.iter().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    match o {
                        Observable::Linear(_) => write!(f, "({o})")?,
                        _ => write!(f, "{o}")?,
                    }
                }
                Ok(())
            }
            Observable::Linear(ts) => {
                if ts.is_empty() {
                    return f.write_str("0");
                }
                for (k, (c, o)) in ts.iter().enumerate() {
                    if k > 0 {
                        f.write_str("+")?;
                    }
                    let inner = match o {
                        Observable::Linear(_) => format!("({o})"),
                        _ => o.to_string(),
                    };
                    if c.is_one() {
                        f.write_str(&inner)?;
                    } else {
                        write!(f, "{}*{inner}", to_compact_string(c))?;
                    }
                }
                Ok(())
            }
            Observable::Del(inner) => write!(f, "del({inner})"),
        }
    }
}

/// Evaluates observables at a fixed θ. The Jack table needed by
/// `F_{μ;θ}` is built on first use.
#[derive(Debug)]
pub struct Evaluator {
    theta: Rat,
    jack_degree: usize,
    jack: OnceLock<Result<Arc<JackTable>>>,
}

impl Evaluator {
    pub fn new(theta: Rat) -> Self {
        Evaluator {
            theta,
            jack_degree: DEFAULT_JACK_DEGREE,
            jack: OnceLock::new(),
        }
    }

    pub fn with_jack_degree(mut self, degree: usize) -> Self {
        self.jack_degree = degree;
        self
    }

    /// Uses an existing table; its θ must match.
    pub fn with_jack_table(self, table: Arc<JackTable>) -> Self {
        assert_eq!(table.theta(), &self.theta, "Jack table built for another θ");
        let degree = table.max_degree();
        let cell = OnceLock::new();
        let _ = cell.set(Ok(table));
        Evaluator {
            jack_degree: degree,
            jack: cell,
            ..self
        }
    }

    pub fn theta(&self) -> &Rat {
        &self.theta
    }

    pub fn jack_table(&self) -> Result<Arc<JackTable>> {
        self.jack
            .get_or_init(|| JackTable::build(&self.theta, self.jack_degree).map(Arc::new))
            .clone()
    }

    pub fn eval(&self, obs: &Observable, lambda: &Partition) -> Result<Rat> {
        let theta = &self.theta;
        Ok(match obs {
            Observable::Const(c) => c.clone(),
            Observable::PStar(m) => pstar(*m, lambda, theta),
            Observable::SuperP(m) => superp(*m, lambda),
            Observable::ContentG(phi) => eval_g_phi(phi, lambda, theta)?,
            Observable::HPsi(psi) => eval_h_psi(psi, lambda, theta)?,
            Observable::FMu(mu) => f_mu(mu, lambda),
            Observable::FMuJack(mu) => {
                if lambda.size() < mu.size() || !lambda.contains(mu) {
                    Rat::zero()
                } else {
                    f_mu_jack(mu, lambda, &*self.jack_table()?)?
                }
            }
            Observable::HCoeff(m) => h_series(lambda, theta, *m as usize)[*m as usize].clone(),
            Observable::HProd(rho) => h_rho(rho, lambda, theta),
            Observable::Frak(m) => frak_p(*m, lambda, theta),
            Observable::Product(fs) => {
                let mut acc = Rat::one();
                for o in fs {
                    acc *= self.eval(o, lambda)?;
                    if acc.is_zero() {
                        break;
                    }
                }
                acc
            }
            Observable::Linear(ts) => {
                let mut acc = Rat::zero();
                for (c, o) in ts {
                    if !c.is_zero() {
                        acc += c * self.eval(o, lambda)?;
                    }
                }
                acc
            }
            Observable::Del(inner) => {
                let kernel = growth_kernel(lambda, theta);
                let mut acc = -self.eval(inner, lambda)?;
                for (nu, p) in kernel.targets() {
                    acc += p * self.eval(inner, nu)?;
                }
                acc
            }
        })
    }
}

/// Guards the evaluation levels a Jack observable can reach.
pub fn check_jack_level(obs: &Observable, eval: &Evaluator, n: usize) -> Result<()> {
    let needed = n + obs.del_depth();
    if obs.uses_jack() && needed > eval.jack_degree {
        return Err(Error::DegreeBound {
            requested: needed,
            max: eval.jack_degree,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::partitions_up_to;
    use crate::rat::{rat, ratio};

    #[test]
    fn degree_bound_examples() {
        assert_eq!(Observable::PStar(3).degree_bound(), 3);
        assert_eq!(Observable::HProd(part![3, 2]).degree_bound(), 3);
        let prod = Observable::content_product(&[2]).times(Observable::FMu(part![1]));
        assert_eq!(prod.degree_bound(), 4);
        assert_eq!(Observable::Frak(1).degree_bound(), 0);
        assert_eq!(Observable::HCoeff(5).degree_bound(), 4);
        assert_eq!(Observable::one().del().degree_bound(), 0);
        assert_eq!(Observable::PStar(3).del().degree_bound(), 2);
        let lin = Observable::Linear(vec![
            (rat(2), Observable::PStar(2)),
            (rat(-1), Observable::Frak(5)),
        ]);
        assert_eq!(lin.degree_bound(), 4);
    }

    #[test]
    fn content_product_maps_zero_to_size() {
        let obs = Observable::content_product(&[0, 2]);
        assert_eq!(obs.degree_bound(), 4);
        let ev = Evaluator::new(rat(1));
        let lambda = part![2, 1];
        assert_eq!(ev.eval(&obs, &lambda).unwrap(), rat(6));
        assert_eq!(
            ev.eval(&Observable::content_product(&[0]), &lambda)
                .unwrap(),
            rat(3)
        );
    }

    #[test]
    fn del_of_constant_vanishes() {
        for theta in [ratio(1, 2), rat(1), rat(3)] {
            let ev = Evaluator::new(theta);
            let obs = Observable::one().del();
            for lambda in partitions_up_to(6) {
                assert_eq!(ev.eval(&obs, &lambda).unwrap(), rat(0));
            }
        }
    }

    #[test]
    fn del_h2_at_empty() {
        let theta = ratio(7, 4);
        let ev = Evaluator::new(theta.clone());
        let obs = Observable::HCoeff(2).del();
        assert_eq!(ev.eval(&obs, &part![]).unwrap(), theta);
    }

    #[test]
    fn fmu_jack_needs_table_bound() {
        let ev = Evaluator::new(rat(2)).with_jack_degree(3);
        let obs = Observable::FMuJack(part![1]);
        assert!(ev.eval(&obs, &part![2, 1]).is_ok());
        assert_eq!(
            ev.eval(&obs, &part![2, 2]).unwrap_err(),
            Error::DegreeBound {
                requested: 4,
                max: 3
            }
        );
        assert_eq!(
            ev.eval(&Observable::FMuJack(part![3]), &part![1]).unwrap(),
            rat(0)
        );
    }

    #[test]
    fn display_and_parse_agree() {
        let sources = [
            "pstar:3",
            "superp:2",
            "content:p(2,1)",
            "hpsi:p(1)",
            "fmu:2,1",
            "fmujack:",
            "h:4",
            "hrho:3,2",
            "frak:5",
            "2*pstar:2+-1/2*frak:3",
            "content:p(2)*(pstar:1+frak:2)",
            "del(h:3)",
        ];
        let ev = Evaluator::new(ratio(2, 3));
        for src in sources {
            let obs = parse_observable(src).unwrap();
            let again = parse_observable(&obs.to_string()).unwrap();
            assert_eq!(obs, again, "{src}");
            for lambda in partitions_up_to(4) {
                assert_eq!(
                    ev.eval(&obs, &lambda).unwrap(),
                    ev.eval(&again, &lambda).unwrap()
                );
            }
        }
    }

    #[test]
    fn theta_sensitivity() {
        assert!(!Observable::FMu(part![2]).is_theta_sensitive());
        assert!(Observable::FMuJack(part![2]).is_theta_sensitive());
        assert!(!Observable::PStar(1).is_theta_sensitive());
        assert!(Observable::one()
            .times(Observable::Frak(2))
            .is_theta_sensitive());
    }
}
