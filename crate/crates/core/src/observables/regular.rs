//! Pointwise evaluation of the generators of the algebra of regular
//! functions.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{dim_skew, dim_standard, frobenius_modified, Partition};
use crate::rat::{falling_factorial, from_biguint, pow, rat, to_compact_string, Rat};
use crate::symfunc::{Basis, JackTable, SymFunc, TransitionTable};

/// `Φ_θ(u; λ) = ∏_{i ≤ ℓ(λ)} (u + θi) / (u - λ_i + θi)`.
pub fn phi_eval(lambda: &Partition, theta: &Rat, u: &Rat) -> Result<Rat> {
    let mut acc = Rat::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        let ti = theta * rat(i as i64 + 1);
        let den = u - rat(row as i64) + &ti;
        if den.is_zero() {
            return Err(Error::Pole {
                index: i + 1,
                u: to_compact_string(u),
            });
        }
        acc *= (u + ti) / den;
    }
    Ok(acc)
}

/// `p*_{m;θ}(λ) = Σ_i [(λ_i - θi)^m - (-θi)^m]`.
pub fn pstar(m: u32, lambda: &Partition, theta: &Rat) -> Rat {
    let e = m as i32;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            let ti = theta * rat(i as i64 + 1);
            pow(&(rat(row as i64) - &ti), e) - pow(&-ti, e)
        })
        .sum()
}

/// Super power sum `Σ_i (a_i^m - (-b_i)^m)` in the modified Frobenius
/// coordinates.
pub fn superp(m: u32, lambda: &Partition) -> Rat {
    let f = frobenius_modified(lambda);
    let e = m as i32;
    f.a.iter()
        .zip(&f.b)
        .map(|(a, b)| pow(a, e) - pow(&-b.clone(), e))
        .sum()
}

/// θ-contents `(j - 1) - θ(i - 1)` of the boxes; `j - i` at θ = 1.
pub fn theta_contents(lambda: &Partition, theta: &Rat) -> Vec<Rat> {
    lambda
        .boxes()
        .map(|(i, j)| rat(j as i64 - 1) - theta * rat(i as i64 - 1))
        .collect()
}

/// `p̂_r(λ) = Σ_boxes c^r`, with `p̂_0 = |λ|`.
pub fn content_power(r: u32, lambda: &Partition) -> Rat {
    lambda
        .contents()
        .into_iter()
        .map(|c| pow(&rat(c), r as i32))
        .sum()
}

/// `p̂_r` over θ-contents.
pub fn content_power_theta(r: u32, lambda: &Partition, theta: &Rat) -> Rat {
    theta_contents(lambda, theta)
        .iter()
        .map(|c| pow(c, r as i32))
        .sum()
}

fn power_sum_form(f: &SymFunc) -> Result<SymFunc> {
    match f.basis() {
        Basis::PowerSum => Ok(f.clone()),
        Basis::Monomial => TransitionTable::new(f.degree()).m_to_p(f),
    }
}

/// Evaluates a power-sum expansion given the power sums of the variables.
fn eval_power_sums(f: &SymFunc, power: impl Fn(usize) -> Rat) -> Rat {
    let max = f
        .terms()
        .flat_map(|(k, _)| k.parts().first().copied())
        .max()
        .unwrap_or(0);
    let powers: Vec<Rat> = (0..=max).map(power).collect();
    f.terms()
        .map(|(idx, c)| {
            idx.parts()
                .iter()
                .fold(c.clone(), |acc, &r| acc * &powers[r])
        })
        .sum()
}

/// `G_φ(λ) = φ(c_1, …, c_n, 0, 0, …)` over θ-contents (ordinary contents
/// at θ = 1). Monomial inputs are converted to power sums first.
pub fn eval_g_phi(phi: &SymFunc, lambda: &Partition, theta: &Rat) -> Result<Rat> {
    let phi = power_sum_form(phi)?;
    let contents = theta_contents(lambda, theta);
    Ok(eval_power_sums(&phi, |r| {
        contents.iter().map(|c| pow(c, r as i32)).sum()
    }))
}

/// Arguments of `H_ψ`: `λ_i + θ(n - i)` for `i = 1..n`, `n = |λ|`.
pub fn h_psi_arguments(lambda: &Partition, theta: &Rat) -> Vec<Rat> {
    let n = lambda.size();
    (1..=n)
        .map(|i| rat(lambda.row(i) as i64) + theta * rat((n - i) as i64))
        .collect()
}

/// `H_ψ(λ) = ψ(λ_1 + θ(n-1), λ_2 + θ(n-2), …, λ_n, 0, …)`.
pub fn eval_h_psi(psi: &SymFunc, lambda: &Partition, theta: &Rat) -> Result<Rat> {
    let psi = power_sum_form(psi)?;
    let args = h_psi_arguments(lambda, theta);
    Ok(eval_power_sums(&psi, |r| {
        args.iter().map(|c| pow(c, r as i32)).sum()
    }))
}

/// `F_μ(λ) = n^{↓m} dim(μ, λ) / dim λ`.
pub fn f_mu(mu: &Partition, lambda: &Partition) -> Rat {
    let n = lambda.size();
    let m = mu.size();
    if n < m || !lambda.contains(mu) {
        return Rat::zero();
    }
    let num = falling_factorial(n, m) * dim_skew(mu, lambda);
    from_biguint(&num) / from_biguint(&dim_standard(lambda))
}

/// `F_{μ;θ}(λ) = n^{↓m} dim_θ(μ, λ) / dim_θ λ`.
pub fn f_mu_jack(mu: &Partition, lambda: &Partition, table: &JackTable) -> Result<Rat> {
    let n = lambda.size();
    let m = mu.size();
    if n < m || !lambda.contains(mu) {
        return Ok(Rat::zero());
    }
    let ratio = table.dim_theta_skew(mu, lambda)? / table.dim_theta(lambda)?;
    Ok(from_biguint(&falling_factorial(n, m)) * ratio)
}
