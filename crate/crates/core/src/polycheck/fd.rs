//! Finite differences and Newton interpolation in the binomial basis.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{binomial, Rat};

/// `f(n) = Σ_k c_k C(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPoly {
    pub coeffs: Vec<Rat>,
}

impl BinomialPoly {
    pub fn eval(&self, n: usize) -> Rat {
        self.coeffs
            .iter()
            .enumerate()
            .take(n + 1)
            .map(|(k, c)| c * binomial(n, k))
            .sum()
    }

    /// Index of the last nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

/// Outcome of a finite-difference test of a claimed degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceCheck {
    pub degree_bound: usize,
    pub verdict: bool,
    pub interpolant: BinomialPoly,
    /// Order-`(D + 1)` differences, one per admissible starting point.
    pub top_differences: Vec<Rat>,
}

pub fn forward_differences(values: &[Rat]) -> Vec<Rat> {
    values.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Tests whether `values[n]`, `n = 0, 1, …`, agrees with a polynomial of
/// degree at most `degree` by checking that all order-`(degree + 1)`
/// differences vanish.
pub fn finite_difference_check(values: &[Rat], degree: usize) -> Result<DifferenceCheck> {
    if values.len() < degree + 2 {
        return Err(Error::SequenceTooShort {
            len: values.len(),
            degree,
        });
    }
    let mut row = values.to_vec();
    let mut leading = Vec::with_capacity(degree + 1);
    for _ in 0..=degree {
        leading.push(row[0].clone());
        row = forward_differences(&row);
    }
    Ok(DifferenceCheck {
        degree_bound: degree,
        verdict: row.iter().all(Zero::is_zero),
        interpolant: BinomialPoly { coeffs: leading },
        top_differences: row,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn examples() {
        let c = finite_difference_check(&ints(&[1, 1, 1, 1]), 0).unwrap();
        assert!(c.verdict);
        assert_eq!(c.interpolant.coeffs, ints(&[1]));

        let c = finite_difference_check(&ints(&[0, 1, 2, 3, 4]), 1).unwrap();
        assert!(c.verdict);
        assert_eq!(c.interpolant.coeffs, ints(&[0, 1]));

        let c = finite_difference_check(&ints(&[0, 0, 1, 3, 6, 10]), 2).unwrap();
        assert!(c.verdict);
        assert_eq!(c.interpolant.coeffs, ints(&[0, 0, 1]));
        assert_eq!(c.top_differences.len(), 3);
    }

    #[test]
    fn rejects_and_errors() {
        let c = finite_difference_check(&ints(&[0, 1, 4, 9]), 1).unwrap();
        assert!(!c.verdict);
        assert_eq!(
            finite_difference_check(&ints(&[1, 2]), 1),
            Err(Error::SequenceTooShort { len: 2, degree: 1 })
        );
    }

    proptest! {
        #[test]
        fn recovers_polynomials(coeffs in prop::collection::vec(-20i64..20, 1..6), extra in 1usize..5) {
            let d = coeffs.len() - 1;
            let f = |n: i64| coeffs.iter().rev().fold(0i64, |acc, &c| acc * n + c);
            let values: Vec<Rat> = (0..(d + 1 + extra) as i64).map(|n| rat(f(n))).collect();
            let c = finite_difference_check(&values, d).unwrap();
            prop_assert!(c.verdict);
            for (n, v) in values.iter().enumerate() {
                prop_assert_eq!(&c.interpolant.eval(n), v);
            }
            let expected_degree = coeffs.iter().rposition(|&c| c != 0);
            prop_assert_eq!(c.interpolant.degree(), expected_degree);
        }
    }
}
