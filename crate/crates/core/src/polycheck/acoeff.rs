//! The coefficients `a_s(x)` of
//! `(u-x)(u-x+θ-1) / ((u-x-1)(u-x+θ)) = Σ_s a_s(x) u^{-s}`.

use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{binomial, to_compact_string, Rat};

/// Polynomial in one variable, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::default();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Linear map `x^m ↦ moments[m]`.
    pub fn apply_moments(&self, moments: &[Rat]) -> Rat {
        self.coeffs.iter().zip(moments).map(|(c, m)| c * m).sum()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let c = to_compact_string(c);
                match k {
                    0 => c,
                    1 => format!("({c})*x"),
                    _ => format!("({c})*x^{k}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ACoeffTable {
    pub theta: Rat,
    pub a: Vec<UniPoly>,
}

impl ACoeffTable {
    pub fn s_max(&self) -> usize {
        self.a.len() - 1
    }

    /// `a_σ = ∏ a_{σ_i}`.
    pub fn a_sigma(&self, sigma: &[usize]) -> UniPoly {
        sigma
            .iter()
            .fold(UniPoly::constant(Rat::one()), |acc, &s| acc.mul(&self.a[s]))
    }
}

/// Writes the ratio as `1 + θ / ((v - 1)(v + θ))` with `v = u - x`. With
/// `1 / ((v - 1)(v + θ)) = Σ_{k≥2} e_{k-2} v^{-k}` and
/// `v^{-k} = Σ_j C(k+j-1, j) x^j u^{-k-j}`,
/// `a_s(x) = Σ_{k=2}^{s} θ e_{k-2} C(s-1, s-k) x^{s-k}`.
pub fn a_coefficients(theta: &Rat, s_max: usize) -> ACoeffTable {
    let one = Rat::one();
    let mut e: Vec<Rat> = vec![one.clone()];
    for k in 1..=s_max.saturating_sub(2) {
        let prev2 = if k >= 2 {
            &e[k - 2] * theta
        } else {
            Rat::zero()
        };
        let next = -(theta - &one) * &e[k - 1] + prev2;
        e.push(next);
    }
    let mut a = Vec::with_capacity(s_max + 1);
    for s in 0..=s_max {
        let poly = match s {
            0 => UniPoly::constant(one.clone()),
            1 => UniPoly::default(),
            _ => {
                let mut coeffs = vec![Rat::zero(); s - 1];
                for k in 2..=s {
                    coeffs[s - k] = theta * &e[k - 2] * binomial(s - 1, s - k);
                }
                UniPoly::new(coeffs)
            }
        };
        a.push(poly);
    }
    ACoeffTable {
        theta: theta.clone(),
        a,
    }
}
