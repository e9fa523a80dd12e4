//! Kerov interlacing coordinates and the corner generating function
//! `ℋ(u; λ) = u ∏(u - y_j) / ∏(u - x_i) = Σ h_m u^{-m}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rat::{pow, rat, to_compact_string, Rat};

/// Inner-corner coordinates `X` (length `d`) and outer-corner
/// coordinates `Y` (length `d - 1`), both strictly decreasing and
/// interlacing: `x_1 > y_1 > x_2 > … > y_{d-1} > x_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KerovCoords {
    pub x: Vec<Rat>,
    pub y: Vec<Rat>,
    pub theta: Rat,
}

/// Corner `(r, s)` has coordinate `s - θ r`; inner corners are listed top
/// row first, which is also the order of [`Partition::addable_boxes`].
pub fn kerov_coords(lambda: &Partition, theta: &Rat) -> KerovCoords {
    let coord = |r: usize, s: usize| rat(s as i64) - theta * rat(r as i64);
    let l = lambda.len();
    let x = (1..=l + 1)
        .filter(|&i| i == 1 || lambda.row(i) < lambda.row(i - 1))
        .map(|i| coord(i - 1, lambda.row(i)))
        .collect();
    let y = (1..=l)
        .filter(|&i| lambda.row(i + 1) < lambda.row(i))
        .map(|i| coord(i, lambda.row(i)))
        .collect();
    KerovCoords {
        x,
        y,
        theta: theta.clone(),
    }
}

impl KerovCoords {
    pub fn is_interlacing(&self) -> bool {
        if self.x.len() != self.y.len() + 1 {
            return false;
        }
        let merged: Vec<&Rat> = self
            .x
            .iter()
            .zip(self.y.iter().map(Some).chain(std::iter::once(None)))
            .flat_map(|(x, y)| std::iter::once(x).chain(y))
            .collect();
        merged.windows(2).all(|w| w[0] > w[1])
    }

    /// `𝔭_m = Σ x_i^m - Σ y_j^m`.
    pub fn frak_p(&self, m: u32) -> Rat {
        let e = m as i32;
        let xs: Rat = self.x.iter().map(|x| pow(x, e)).sum();
        let ys: Rat = self.y.iter().map(|y| pow(y, e)).sum();
        xs - ys
    }

    /// `h_0, …, h_max` from `m h_m = Σ_{k=1}^{m} 𝔭_k h_{m-k}`.
    pub fn h_series(&self, max: usize) -> Vec<Rat> {
        let frak: Vec<Rat> = (0..=max).map(|k| self.frak_p(k as u32)).collect();
        let mut h = vec![Rat::one()];
        for m in 1..=max {
            let s: Rat = (1..=m).map(|k| &frak[k] * &h[m - k]).sum();
            h.push(s / rat(m as i64));
        }
        h
    }

    /// `ℋ(u; λ)`; a pole when `u` hits an inner corner.
    pub fn hh_eval(&self, u: &Rat) -> Result<Rat> {
        let mut den = Rat::one();
        for (i, x) in self.x.iter().enumerate() {
            let f = u - x;
            if f.is_zero() {
                return Err(Error::Pole {
                    index: i + 1,
                    u: to_compact_string(u),
                });
            }
            den *= f;
        }
        let num = self.y.iter().fold(u.clone(), |acc, y| acc * (u - y));
        Ok(num / den)
    }

    /// Partial-fraction coefficients
    /// `π↑_i = ∏_j (x_i - y_j) / ∏_{l≠i} (x_i - x_l)`.
    pub fn transition_probabilities(&self) -> Vec<Rat> {
        self.x
            .iter()
            .enumerate()
            .map(|(i, xi)| {
                let num = self.y.iter().fold(Rat::one(), |acc, y| acc * (xi - y));
                let den = self
                    .x
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != i)
                    .fold(Rat::one(), |acc, (_, xl)| acc * (xi - xl));
                num / den
            })
            .collect()
    }
}

pub fn hh_eval(lambda: &Partition, theta: &Rat, u: &Rat) -> Result<Rat> {
    kerov_coords(lambda, theta).hh_eval(u)
}

pub fn h_series(lambda: &Partition, theta: &Rat, max: usize) -> Vec<Rat> {
    kerov_coords(lambda, theta).h_series(max)
}

pub fn frak_p(m: u32, lambda: &Partition, theta: &Rat) -> Rat {
    kerov_coords(lambda, theta).frak_p(m)
}

/// `h_ρ = ∏ h_{ρ_i}`.
pub fn h_rho(rho: &Partition, lambda: &Partition, theta: &Rat) -> Rat {
    let max = rho.parts().first().copied().unwrap_or(0);
    let h = h_series(lambda, theta, max);
    rho.parts().iter().fold(Rat::one(), |acc, &r| acc * &h[r])
}
