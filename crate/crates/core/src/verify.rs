//! Named verification suites. Each suite runs a fixed family of exact
//! checks and reports one result per case.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::measure::{
    growth_kernel, growth_marginals, jack_plancherel_from_table, plancherel, Provenance, Sampler,
};
use crate::observables::{content_power, kerov_coords, phi_eval, superp, Evaluator, Observable};
use crate::partition::{
    dim_hook, dim_paths, enumerate_partitions, frobenius_modified, partitions_up_to, Partition,
};
use crate::polycheck::{
    a_coefficients, check_del_identity, check_polynomiality, verify_closed_forms, PolyReport,
    UniPoly,
};
use crate::rat::{binomial, factorial, from_biguint, pow, rat, ratio, to_compact_string, Rat};
use crate::symfunc::{JackTable, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Stanley,
    JackClosedForm,
    Polynomiality,
    GrowthVsJack,
    KerovIdentities,
    DelIdentity,
    Duality,
    Structural,
    Combinatorial,
    Sampler,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Stanley,
        Suite::JackClosedForm,
        Suite::Polynomiality,
        Suite::GrowthVsJack,
        Suite::KerovIdentities,
        Suite::DelIdentity,
        Suite::Duality,
        Suite::Structural,
        Suite::Combinatorial,
        Suite::Sampler,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Stanley => "stanley",
            Suite::JackClosedForm => "jack-closed-form",
            Suite::Polynomiality => "polynomiality",
            Suite::GrowthVsJack => "growth-vs-jack",
            Suite::KerovIdentities => "kerov-identities",
            Suite::DelIdentity => "del-identity",
            Suite::Duality => "duality",
            Suite::Structural => "structural",
            Suite::Combinatorial => "combinatorial",
            Suite::Sampler => "sampler",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::parse(s, "unknown verification suite"))
    }
}

/// Overrides for a suite's default parameters.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Replaces the suite's θ set with a single value.
    pub theta: Option<Rat>,
    pub n_max: Option<usize>,
    /// Replaces the polynomiality suite's observable list.
    pub obs: Option<Observable>,
    pub seed: u64,
    pub trajectories: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        match &self.detail {
            Some(d) => write!(f, "{tag} {}: {d}", self.label),
            None => write!(f, "{tag} {}", self.label),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseResult>,
    /// Per-observable reports of the polynomiality suite.
    pub poly_reports: Vec<PolyReport>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            cases: Vec::new(),
            poly_reports: Vec::new(),
        }
    }

    fn push(&mut self, label: impl Into<String>, passed: bool, detail: Option<String>) {
        self.cases.push(CaseResult {
            label: label.into(),
            passed,
            detail,
        });
    }

    fn check_eq(&mut self, label: impl Into<String>, expected: &Rat, actual: &Rat) {
        let detail = (expected != actual).then(|| {
            format!(
                "expected {}, got {}",
                to_compact_string(expected),
                to_compact_string(actual)
            )
        });
        self.push(label, detail.is_none(), detail);
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CaseResult> {
        self.cases.iter().find(|c| !c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    match suite {
        Suite::Stanley => stanley(opts),
        Suite::JackClosedForm => jack_closed_form(opts),
        Suite::Polynomiality => polynomiality(opts),
        Suite::GrowthVsJack => growth_vs_jack(opts),
        Suite::KerovIdentities => kerov_identities(opts),
        Suite::DelIdentity => del_identity(opts),
        Suite::Duality => duality(opts),
        Suite::Structural => structural(opts),
        Suite::Combinatorial => combinatorial(opts),
        Suite::Sampler => sampler(opts),
    }
}

fn thetas(opts: &SuiteOptions, defaults: &[(i64, i64)]) -> Vec<Rat> {
    match &opts.theta {
        Some(t) => vec![t.clone()],
        None => defaults.iter().map(|&(p, q)| ratio(p, q)).collect(),
    }
}

fn fmt_theta(theta: &Rat) -> String {
    to_compact_string(theta)
}

/// `⟨F_μ⟩_n = C(n, |μ|) dim μ` for `|μ| ≤ 4`, `n ≤ 8`.
fn stanley(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(8);
    let mut report = SuiteReport::new(Suite::Stanley);
    let eval = Evaluator::new(Rat::one());
    let tables = (0..=n_max).map(plancherel).collect::<Result<Vec<_>>>()?;
    for mu in partitions_up_to(4) {
        let dim = from_biguint(&dim_hook(&mu));
        let obs = Observable::FMu(mu.clone());
        for (n, table) in tables.iter().enumerate() {
            let expected = binomial(n, mu.size()) * &dim;
            let actual = table.average(&obs, &eval)?;
            report.check_eq(format!("mu=({mu}) n={n}"), &expected, &actual);
        }
    }
    Ok(report)
}

/// `⟨F_{μ;θ}⟩_{n;θ} = θ^m C(n, m) dim′_θ μ` for `|μ| ≤ 3`, `n ≤ 7`.
fn jack_closed_form(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(7);
    let mut report = SuiteReport::new(Suite::JackClosedForm);
    for theta in thetas(opts, &[(1, 2), (1, 1), (2, 1), (3, 5)]) {
        let eval = Evaluator::new(theta.clone()).with_jack_degree(n_max.max(3));
        for mu in partitions_up_to(3) {
            let r = verify_closed_forms(&mu, &eval, n_max)?;
            let label = format!("theta={} mu=({mu}) n<={n_max}", fmt_theta(&theta));
            report.push(label, r.holds(), r.counterexample.map(|m| m.to_string()));
        }
    }
    Ok(report)
}

/// The observable families of the polynomiality acceptance list.
pub fn polynomiality_observables() -> Vec<Observable> {
    let shifted = |p: &Partition| p.size() + p.len();
    let nonempty: Vec<Partition> = partitions_up_to(5)
        .into_iter()
        .filter(|p| !p.is_empty() && shifted(p) <= 6)
        .collect();
    let mut out = Vec::new();
    for rho in &nonempty {
        out.push(Observable::content_product(rho.parts()));
    }
    for sigma in &nonempty {
        out.push(Observable::HPsi(SymFunc::power_sum(sigma.clone())));
    }
    for rho in &nonempty {
        for sigma in &nonempty {
            if shifted(rho) + shifted(sigma) <= 6 {
                let g = Observable::ContentG(SymFunc::power_sum(rho.clone()));
                let h = Observable::HPsi(SymFunc::power_sum(sigma.clone()));
                out.push(g.times(h));
            }
        }
    }
    for rho in partitions_up_to(6) {
        if !rho.is_empty() && rho.parts().iter().all(|&r| r >= 2) && rho.size() - rho.len() <= 3 {
            out.push(Observable::HProd(rho));
        }
    }
    out.extend((1..=5).map(Observable::Frak));
    out
}

/// Order-`(D+1)` differences of `⟨F⟩_{n;θ}` vanish on `n = 0..=D+4`.
fn polynomiality(opts: &SuiteOptions) -> Result<SuiteReport> {
    let observables = match &opts.obs {
        Some(o) => vec![o.clone()],
        None => polynomiality_observables(),
    };
    let mut report = SuiteReport::new(Suite::Polynomiality);
    for theta in thetas(opts, &[(1, 2), (1, 1), (2, 1)]) {
        for obs in &observables {
            let n_max = opts
                .n_max
                .unwrap_or(obs.degree_bound() + crate::polycheck::DEFAULT_EXTRA_POINTS);
            let jack_degree = (n_max + obs.del_depth()).max(crate::symfunc::DEFAULT_JACK_DEGREE);
            let eval = Evaluator::new(theta.clone()).with_jack_degree(jack_degree);
            let r = check_polynomiality(obs, &eval, Some(n_max), Provenance::Growth)?;
            let label = format!(
                "theta={} obs={obs} D={} n<={}",
                fmt_theta(&theta),
                r.degree_bound,
                r.n_max()
            );
            let detail = if r.verdict {
                None
            } else {
                Some(format!(
                    "nonzero differences of order {}",
                    r.degree_bound + 1
                ))
            };
            report.push(label, r.verdict, detail);
            report.poly_reports.push(r);
        }
    }
    Ok(report)
}

/// Growth marginals equal the Jack–Plancherel measure; at θ = 1 both equal
/// the Plancherel measure.
fn growth_vs_jack(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(6);
    let mut report = SuiteReport::new(Suite::GrowthVsJack);
    for theta in thetas(opts, &[(1, 3), (1, 2), (1, 1), (2, 1), (3, 1)]) {
        let jack = JackTable::build(&theta, n_max)?;
        let growth = growth_marginals(n_max, &theta)?;
        for (n, g) in growth.iter().enumerate() {
            let direct = jack_plancherel_from_table(n, &jack)?;
            let ok = g.same_weights(&direct) && g.is_probability();
            let detail = (!ok).then(|| first_difference(g.iter(), direct.iter()));
            report.push(format!("theta={} n={n}", fmt_theta(&theta)), ok, detail);
        }
    }
    if opts.theta.as_ref().is_none_or(One::is_one) {
        let n_planch = opts.n_max.unwrap_or(8);
        let growth = growth_marginals(n_planch, &Rat::one())?;
        for (n, g) in growth.iter().enumerate() {
            let p = plancherel(n)?;
            let ok = g.same_weights(&p);
            let detail = (!ok).then(|| first_difference(g.iter(), p.iter()));
            report.push(format!("theta=1 n={n} plancherel"), ok, detail);
        }
    }
    Ok(report)
}

fn first_difference<'a>(
    a: impl Iterator<Item = (&'a Partition, &'a Rat)>,
    b: impl Iterator<Item = (&'a Partition, &'a Rat)>,
) -> String {
    for ((pa, wa), (pb, wb)) in a.zip(b) {
        if pa != pb || wa != wb {
            return format!(
                "({pa}) {} vs ({pb}) {}",
                to_compact_string(wa),
                to_compact_string(wb)
            );
        }
    }
    "supports differ".to_string()
}

/// Draws a rational `p/q` avoiding the poles of `Φ(u)`, `Φ(u - θ)` and
/// `ℋ(u)`.
fn draw_u(rng: &mut ChaCha20Rng, lambda: &Partition, theta: &Rat) -> Rat {
    loop {
        let u = ratio(rng.random_range(-60..=60), rng.random_range(1..=13));
        let ok = phi_eval(lambda, theta, &u).is_ok()
            && phi_eval(lambda, theta, &(&u - theta)).is_ok()
            && kerov_coords(lambda, theta).hh_eval(&u).is_ok();
        if ok {
            return u;
        }
    }
}

/// Stochastic kernel rows, the fundamental identity and
/// `ℋ(u) Φ(u) = Φ(u - θ)`.
fn kerov_identities(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::KerovIdentities);
    let n_rows = opts.n_max.unwrap_or(8);
    let n_small = opts.n_max.unwrap_or(6);
    for theta in thetas(opts, &[(1, 3), (1, 2), (1, 1), (2, 1), (3, 1)]) {
        let t = fmt_theta(&theta);
        let mut bad = None;
        for lambda in partitions_up_to(n_rows) {
            let k = growth_kernel(&lambda, &theta);
            let total: Rat = k.probabilities().sum();
            if !total.is_one() || !k.probabilities().all(Signed::is_positive) {
                bad.get_or_insert(format!(
                    "row ({lambda}) sums to {}",
                    to_compact_string(&total)
                ));
            }
        }
        report.push(
            format!("theta={t} kernel rows |lambda|<={n_rows}"),
            bad.is_none(),
            bad,
        );

        let mut bad = None;
        for lambda in partitions_up_to(n_small) {
            let coords = kerov_coords(&lambda, &theta);
            let probs = coords.transition_probabilities();
            let h = coords.h_series(8);
            for (m, hm) in h.iter().enumerate() {
                let e = m as i32;
                let moment: Rat = probs
                    .iter()
                    .zip(&coords.x)
                    .map(|(p, x)| p * pow(x, e))
                    .sum();
                if &moment != hm {
                    bad.get_or_insert(format!("({lambda}) m={m}"));
                }
            }
        }
        report.push(
            format!("theta={t} fundamental identity m<=8 |lambda|<={n_small}"),
            bad.is_none(),
            bad,
        );
    }
    for theta in thetas(opts, &[(1, 2), (1, 1), (2, 1)]) {
        let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
        let mut bad = None;
        for lambda in partitions_up_to(n_small) {
            for _ in 0..20 {
                let u = draw_u(&mut rng, &lambda, &theta);
                let lhs =
                    kerov_coords(&lambda, &theta).hh_eval(&u)? * phi_eval(&lambda, &theta, &u)?;
                let rhs = phi_eval(&lambda, &theta, &(&u - &theta))?;
                if lhs != rhs {
                    bad.get_or_insert(format!("({lambda}) u={}", to_compact_string(&u)));
                }
            }
        }
        report.push(
            format!(
                "theta={} H(u)Phi(u)=Phi(u-theta) 20 u per lambda |lambda|<={n_small}",
                fmt_theta(&theta)
            ),
            bad.is_none(),
            bad,
        );
    }
    Ok(report)
}

/// All `ρ` with parts at least 2 and `|ρ| ≤ max`.
pub fn del_identity_partitions(max: usize) -> Vec<Partition> {
    partitions_up_to(max)
        .into_iter()
        .filter(|p| !p.is_empty() && p.parts().iter().all(|&r| r >= 2))
        .collect()
}

fn del_identity(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(5);
    let mut report = SuiteReport::new(Suite::DelIdentity);
    for theta in thetas(opts, &[(1, 1), (1, 2), (2, 1)]) {
        let t = fmt_theta(&theta);
        for rho in del_identity_partitions(6) {
            let r = check_del_identity(&rho, &theta, n_max);
            let label = format!("theta={t} rho=({rho}) n<={n_max} ({} diagrams)", r.checked);
            report.push(label, r.holds(), r.counterexample.map(|m| m.to_string()));
        }
        let table = a_coefficients(&theta, 8);
        let one = Rat::one();
        let low = [
            UniPoly::constant(one.clone()),
            UniPoly::default(),
            UniPoly::constant(theta.clone()),
            UniPoly::new(vec![&theta * (&one - &theta), rat(2) * &theta]),
        ];
        let ok = low.iter().zip(&table.a).all(|(e, a)| e == a);
        let detail = (!ok).then(|| format!("a_3 = {}", table.a[3]));
        report.push(
            format!("theta={t} a_0=1 a_1=0 a_2=theta a_3=2theta x+theta(1-theta)"),
            ok,
            detail,
        );
        let mut bad = None;
        for s in 2..=8usize {
            let a = &table.a[s];
            let lead = rat(s as i64 - 1) * &theta;
            let next = rat(((s - 1) * (s - 2) / 2) as i64) * &theta * (&one - &theta);
            let ok = a.degree() == Some(s - 2)
                && a.coeff(s - 2) == lead
                && (s < 3 || a.coeff(s - 3) == next);
            if !ok {
                bad.get_or_insert(format!("a_{s} = {a}"));
            }
        }
        report.push(
            format!("theta={t} leading terms of a_s, s<=8"),
            bad.is_none(),
            bad,
        );
    }
    Ok(report)
}

/// `M_{n;θ}(λ′) = M_{n;1/θ}(λ)` from the directly built Jack measures.
fn duality(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(6);
    let mut report = SuiteReport::new(Suite::Duality);
    for theta in thetas(opts, &[(1, 2), (2, 1), (1, 3), (3, 1)]) {
        let a = JackTable::build(&theta, n_max)?;
        let b = JackTable::build(&theta.recip(), n_max)?;
        for n in 0..=n_max {
            let ma = jack_plancherel_from_table(n, &a)?;
            let mb = jack_plancherel_from_table(n, &b)?;
            let bad = ma
                .iter()
                .find(|(lambda, w)| mb.weight(&lambda.transpose()) != **w)
                .map(|(lambda, w)| {
                    format!(
                        "({lambda}): {} vs {}",
                        to_compact_string(w),
                        to_compact_string(&mb.weight(&lambda.transpose()))
                    )
                });
            report.push(
                format!("theta={} n={n}", fmt_theta(&theta)),
                bad.is_none(),
                bad,
            );
        }
    }
    Ok(report)
}

/// Frobenius and content factorizations of `Φ(u - 1/2)` at θ = 1 and the
/// expansion of super power sums in content power sums.
fn structural(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(8);
    let mut report = SuiteReport::new(Suite::Structural);
    let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
    let half = ratio(1, 2);
    let one = Rat::one();
    let (mut frob_bad, mut cont_bad, mut rel_bad) = (None, None, None);
    for lambda in partitions_up_to(n_max) {
        let f = frobenius_modified(&lambda);
        let mut drawn = 0;
        while drawn < 10 {
            let u = ratio(rng.random_range(-60..=60), rng.random_range(1..=13));
            let Ok(lhs) = phi_eval(&lambda, &one, &(&u - &half)) else {
                continue;
            };
            let contents = lambda.contents();
            if f.a.iter().any(|a| a == &u) || contents.iter().any(|&c| &u - rat(c) == half) {
                continue;
            }
            drawn += 1;
            let frob =
                f.a.iter()
                    .zip(&f.b)
                    .fold(Rat::one(), |acc, (a, b)| acc * (&u + b) / (&u - a));
            if frob != lhs {
                frob_bad.get_or_insert(format!("({lambda}) u={}", to_compact_string(&u)));
            }
            let cont = contents.into_iter().fold(Rat::one(), |acc, c| {
                acc * (&u - rat(c) + &half) / (&u - rat(c) - &half)
            });
            if cont != lhs {
                cont_bad.get_or_insert(format!("({lambda}) u={}", to_compact_string(&u)));
            }
        }
        for m in 1..=8u32 {
            let rhs: Rat = (0..=((m as usize - 1) / 2))
                .map(|k| {
                    pow(&rat(2), -2 * k as i32)
                        * binomial(m as usize, 2 * k + 1)
                        * content_power(m - 1 - 2 * k as u32, &lambda)
                })
                .sum();
            if superp(m, &lambda) != rhs {
                rel_bad.get_or_insert(format!("({lambda}) m={m}"));
            }
        }
    }
    report.push(
        format!("Frobenius factorization |lambda|<={n_max}"),
        frob_bad.is_none(),
        frob_bad,
    );
    report.push(
        format!("content factorization |lambda|<={n_max}"),
        cont_bad.is_none(),
        cont_bad,
    );
    report.push(
        format!("p_m in terms of content sums m<=8 |lambda|<={n_max}"),
        rel_bad.is_none(),
        rel_bad,
    );
    Ok(report)
}

/// Hook formula against path counting, and `Σ (dim λ)² = n!`.
fn combinatorial(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n_max = opts.n_max.unwrap_or(12);
    let mut report = SuiteReport::new(Suite::Combinatorial);
    for n in 0..=n_max {
        let lambdas = enumerate_partitions(n);
        let bad = lambdas
            .iter()
            .find(|l| dim_hook(l) != dim_paths(l))
            .map(|l| format!("({l})"));
        report.push(
            format!("hook formula = path count n={n}"),
            bad.is_none(),
            bad,
        );
        let total: num_bigint::BigUint = lambdas.iter().map(|l| dim_hook(l).pow(2)).sum();
        let expected = factorial(n);
        let detail = (total != expected).then(|| format!("sum is {total}, n! = {expected}"));
        report.push(format!("sum of dim^2 = n! n={n}"), detail.is_none(), detail);
    }
    Ok(report)
}

/// Empirical level-6 frequencies from seeded trajectories against the
/// exact measure, tolerance 0.01.
fn sampler(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n = opts.n_max.unwrap_or(6);
    let count = opts.trajectories.unwrap_or(100_000);
    let mut report = SuiteReport::new(Suite::Sampler);
    let tol = ratio(1, 100);
    for theta in thetas(opts, &[(1, 1), (2, 1)]) {
        let t = fmt_theta(&theta);
        let exact = growth_marginals(n, &theta)?.pop().expect("level n");
        let mut sampler = Sampler::new(theta.clone(), opts.seed);
        let freq = sampler.frequencies(n, count);
        let mut worst = Rat::zero();
        let mut worst_at = None;
        for (lambda, w) in exact.iter() {
            let hits = freq.get(lambda).copied().unwrap_or(0);
            let emp = Rat::new(hits.into(), count.into());
            let dev = (&emp - w).abs();
            if dev > worst {
                worst = dev;
                worst_at = Some(lambda.clone());
            }
        }
        let ok = worst <= tol && freq.keys().all(|l| exact.weight(l).is_positive());
        let worst_f = worst.to_f64().unwrap_or(f64::NAN);
        let detail = Some(format!(
            "max deviation {worst_f:.5} at ({})",
            worst_at.map(|l| l.to_string()).unwrap_or_default()
        ));
        report.push(
            format!("theta={t} n={n} {count} trajectories within 0.01"),
            ok,
            detail,
        );

        let mut again = Sampler::new(theta.clone(), opts.seed);
        let same = (0..100).all(|i| sampler.trajectory(n, i) == again.trajectory(n, i));
        report.push(format!("theta={t} deterministic per seed"), same, None);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("stanly".parse::<Suite>().is_err());
    }

    #[test]
    fn observable_list_respects_bounds() {
        let obs = polynomiality_observables();
        assert!(obs.iter().all(|o| o.degree_bound() <= 6));
        assert!(obs.contains(&Observable::Frak(5)));
        assert!(obs.contains(&Observable::HProd(Partition::new(vec![2, 2, 2]).unwrap())));
    }

    #[test]
    fn small_runs_pass() {
        let opts = SuiteOptions {
            theta: Some(ratio(2, 1)),
            n_max: Some(4),
            ..Default::default()
        };
        for s in [Suite::GrowthVsJack, Suite::Duality, Suite::KerovIdentities] {
            let r = run_suite(s, &opts).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.first_failure());
        }
    }
}
