//! The Kerov growth kernel `p↑(λ, λ ∪ □_i) = π↑_i(λ)`.

use crate::observables::{kerov_coords, Observable};
use crate::partition::Partition;
use crate::rat::Rat;

/// Transition probabilities out of one diagram, aligned with the inner
/// corners `x_1 > … > x_d` (top row first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthKernel {
    source: Partition,
    targets: Vec<(Partition, Rat)>,
}

impl GrowthKernel {
    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn targets(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.targets.iter().map(|(p, r)| (p, r))
    }

    pub fn probabilities(&self) -> impl Iterator<Item = &Rat> {
        self.targets.iter().map(|(_, r)| r)
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }
}

pub fn growth_kernel(lambda: &Partition, theta: &Rat) -> GrowthKernel {
    let probs = kerov_coords(lambda, theta).transition_probabilities();
    let targets = lambda.addable_boxes().into_iter().zip(probs).collect();
    GrowthKernel {
        source: lambda.clone(),
        targets,
    }
}

/// `∂F` with `(∂F)(λ) = -F(λ) + Σ_ν p↑(λ, ν) F(ν)`.
pub fn del_operator(obs: Observable) -> Observable {
    obs.del()
}
