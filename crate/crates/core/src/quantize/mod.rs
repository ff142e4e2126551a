//! Highest weights quantizing hypersurface orbital varieties.
//!
//! Weights are written in `ε`-coordinates with the last coordinate fixed to
//! zero. For an admissible subset `I` with chain lengths `c_1, …, c_l`,
//! [`solve_b`] produces the integers `b_2, …, b_l` from which [`build_mu`]
//! assembles `μ + ρ`; [`check_prop42`] and [`check_lemma44`] then enumerate
//! the reflection data that controls the Jantzen filtration of the
//! generalized Verma module with highest weight `μ`.

mod fm;

pub use fm::{fourier_motzkin, Constraint, FarkasCertificate};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bsgen::{bs_element, BsInstance};
use crate::parabolic::SimpleSubset;
use crate::report::CheckReport;
use crate::sympoly::Weight;
use crate::{Error, Result};

/// A rational weight `(v_1, …, v_n)`; the pairing with `α_{i,j}` is
/// `v_i − v_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec(Vec<BigRational>);

impl WeightVec {
    pub fn new(coords: Vec<BigRational>) -> Self {
        WeightVec(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        WeightVec(
            coords
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    /// `(v, α_{i,j}) = v_i − v_j`, one-based.
    pub fn pair(&self, i: usize, j: usize) -> BigRational {
        &self.0[i - 1] - &self.0[j - 1]
    }

    /// `Σ_k w_k v_k`.
    pub fn pair_weight(&self, w: &Weight) -> BigRational {
        self.0
            .iter()
            .zip(&w.0)
            .map(|(v, &k)| v * BigRational::from_integer(BigInt::from(k)))
            .sum()
    }

    /// The reflection `s_{ε_i − ε_j}`, which swaps two coordinates.
    pub fn reflect(&self, i: usize, j: usize) -> WeightVec {
        let mut out = self.0.clone();
        out.swap(i - 1, j - 1);
        WeightVec(out)
    }

    /// Whether no root of the Levi factor vanishes on `v`: no two coordinates
    /// in one chain of `subset` agree.
    pub fn is_regular_for(&self, subset: &SimpleSubset) -> bool {
        subset
            .levi_positive_roots()
            .into_iter()
            .all(|(i, j)| self.0[i - 1] != self.0[j - 1])
    }

    /// The coordinates as strings, integers printed plainly and others as `p/q`.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(BigRational::to_string).collect()
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

/// A pair `(m, γ)` with `γ = ε_i − ε_j` a positive root outside the Levi
/// factor and `m = (γ^∨, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootEvent {
    pub m: i64,
    pub root: (usize, usize),
}

impl fmt::Display for RootEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},a[{},{}])", self.m, self.root.0, self.root.1)
    }
}

/// `β_i = ε_i − ε_{n+1−i} = α_i + … + α_{n−i}`.
pub fn beta(n: usize, i: usize) -> Result<Weight> {
    if i == 0 || 2 * i > n {
        return Err(Error::OutOfRange(format!(
            "beta_{i} needs 1 <= i < (n+1)/2, n={n}"
        )));
    }
    Ok(Weight::root(n, i, n + 1 - i))
}

/// `γ_c = β_1 + … + β_c`.
pub fn gamma(n: usize, c: usize) -> Result<Weight> {
    (1..=c).try_fold(Weight::zero(n), |acc, i| Ok(&acc + &beta(n, i)?))
}

/// Outcome of [`solve_b`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BSolution {
    /// The integral solution taking equality in the left-hand inequalities.
    Solution(Vec<i64>),
    /// The system has no real solution.
    Infeasible(FarkasCertificate),
}

fn validate_lengths(lengths: &[usize]) -> Result<usize> {
    if lengths.len() < 2 {
        return Err(Error::SingleChain);
    }
    if lengths.contains(&0) {
        return Err(Error::InvalidSubset(format!(
            "chain lengths must be positive: {lengths:?}"
        )));
    }
    let (first, last) = (lengths[0], lengths[lengths.len() - 1]);
    if first != last {
        return Err(Error::UnequalEndChains { first, last });
    }
    Ok(first)
}

/// The linear system in `b_2, …, b_l` attached to chain lengths with
/// `c_1 = c_l = c`:
///
/// 1. `1 + Σ_{i=2}^{s} b_i ≤ Σ_{i=2}^{s−1} c_i + max(c, c_s)` for `2 ≤ s < l`,
/// 2. `1 + Σ_{i=s+1}^{l} b_i ≤ Σ_{i=s+1}^{l−1} c_i + max(c, c_s)` for `2 ≤ s < l`,
/// 3. `1 + Σ_{i=2}^{l} b_i = Σ_{i=2}^{l} c_i`, as a pair of inequalities.
pub fn b_system(lengths: &[usize]) -> Result<Vec<Constraint>> {
    let c = validate_lengths(lengths)? as i64;
    let l = lengths.len();
    let cs = |i: usize| lengths[i - 1] as i64;
    let unit = |range: std::ops::RangeInclusive<usize>, sign: i64| -> Vec<i64> {
        (2..=l)
            .map(|i| if range.contains(&i) { sign } else { 0 })
            .collect()
    };
    let mut system = Vec::new();
    for s in 2..l {
        let rhs: i64 = (2..s).map(cs).sum::<i64>() + c.max(cs(s)) - 1;
        system.push(Constraint::from_integers(
            &unit(2..=s, 1),
            rhs,
            format!("1) s={s}"),
        ));
    }
    for s in 2..l {
        let rhs: i64 = (s + 1..l).map(cs).sum::<i64>() + c.max(cs(s)) - 1;
        system.push(Constraint::from_integers(
            &unit(s + 1..=l, 1),
            rhs,
            format!("2) s={s}"),
        ));
    }
    let total: i64 = (2..=l).map(cs).sum::<i64>() - 1;
    system.push(Constraint::from_integers(&unit(2..=l, 1), total, "3) <="));
    system.push(Constraint::from_integers(&unit(2..=l, -1), -total, "3) >="));
    Ok(system)
}

/// `b_2 = max(c, c_2) − 1` and `b_i = c_{i−1} + max(c, c_i) − max(c, c_{i−1})`.
fn closed_form_b(lengths: &[usize]) -> Vec<i64> {
    let c = lengths[0] as i64;
    let cs = |i: usize| lengths[i - 1] as i64;
    (2..=lengths.len())
        .map(|i| {
            if i == 2 {
                c.max(cs(2)) - 1
            } else {
                cs(i - 1) + c.max(cs(i)) - c.max(cs(i - 1))
            }
        })
        .collect()
}

/// Solves the `b`-system. When no interior chain has length `c` the closed
/// form is returned after checking it against every constraint; otherwise
/// Fourier–Motzkin elimination produces an infeasibility certificate.
pub fn solve_b(lengths: &[usize]) -> Result<BSolution> {
    let c = validate_lengths(lengths)?;
    let system = b_system(lengths)?;
    let l = lengths.len();
    if lengths[1..l - 1].contains(&c) {
        return match fourier_motzkin(&system) {
            Some(cert) if cert.verifies(&system) => Ok(BSolution::Infeasible(cert)),
            _ => Err(Error::OutOfRange(format!(
                "b-system for {lengths:?} was not refuted"
            ))),
        };
    }
    let b = closed_form_b(lengths);
    if let Some(bad) = system.iter().find(|k| !k.holds_at(&b)) {
        return Err(Error::OutOfRange(format!(
            "closed form {b:?} violates {bad}"
        )));
    }
    Ok(BSolution::Solution(b))
}

/// `μ + ρ`, normalized by `v_n = 0`: consecutive differences are `1` inside
/// a chain and `−(b_{i+1} − 1)` across the boundary after chain `i`.
pub fn build_mu(subset: &SimpleSubset) -> Result<WeightVec> {
    let chains = subset.chains();
    let lengths = chains.lengths();
    let b = match solve_b(lengths)? {
        BSolution::Solution(b) => b,
        BSolution::Infeasible(_) => {
            let c = lengths[0];
            let repeats = (2..lengths.len())
                .filter(|&j| lengths[j - 1] == c)
                .collect();
            return Err(Error::InfeasibleBSystem(repeats));
        }
    };
    let n = subset.n();
    let mut v = vec![0i64; n];
    let mut boundary = chains.len() - 1;
    for k in (1..n).rev() {
        let step = if subset.contains(k) {
            1
        } else {
            // `k` closes chain `boundary`; `b` starts at `b_2`.
            let d = -(b[boundary - 1] - 1);
            boundary -= 1;
            d
        };
        v[k - 1] = v[k] + step;
    }
    Ok(WeightVec::from_integers(&v))
}

fn events(
    v: &WeightVec,
    subset: &SimpleSubset,
    negative: bool,
) -> Result<(Vec<RootEvent>, Vec<RootEvent>)> {
    let n = subset.n();
    if v.n() != n {
        return Err(Error::SizeMismatch(v.n(), n));
    }
    let (mut all, mut regular) = (Vec::new(), Vec::new());
    for i in 1..=n {
        for j in i + 1..=n {
            if subset.same_chain(i, j) {
                continue;
            }
            let m = v.pair(i, j);
            if !m.is_integer() || m.is_zero() || m.is_negative() != negative {
                continue;
            }
            let m = m
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::OutOfRange(format!("pairing {m} too large")))?;
            let event = RootEvent { m, root: (i, j) };
            all.push(event);
            if v.reflect(i, j).is_regular_for(subset) {
                regular.push(event);
            }
        }
    }
    Ok((all, regular))
}

/// `S_v`: the `(m, γ)` with `m = (γ^∨, v)` a positive integer and `γ` a
/// positive root outside the Levi factor; and `S_vᵒ`, those whose reflection
/// `s_γ(v)` is regular for the Levi factor.
pub fn s_sets(v: &WeightVec, subset: &SimpleSubset) -> Result<(Vec<RootEvent>, Vec<RootEvent>)> {
    events(v, subset, false)
}

/// `Š_v` and `Š_vᵒ`: as [`s_sets`] with `m` a negative integer.
pub fn s_check_sets(
    v: &WeightVec,
    subset: &SimpleSubset,
) -> Result<(Vec<RootEvent>, Vec<RootEvent>)> {
    events(v, subset, true)
}

fn listed(events: &[RootEvent]) -> String {
    let parts: Vec<String> = events.iter().map(RootEvent::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn generic_instance(subset: &SimpleSubset) -> Result<BsInstance> {
    let inst = BsInstance::new(subset.clone())?;
    inst.require_generic()?;
    Ok(inst)
}

/// `S_μᵒ = {(c, β)}` with `β = ε_1 − ε_n`, and `(μ + ρ, β) = c`.
pub fn check_prop42(subset: &SimpleSubset) -> CheckReport {
    let name = "prop42";
    let inst = match generic_instance(subset) {
        Ok(inst) => inst,
        Err(e) => return CheckReport::fail(name, subset, format!("precondition violated: {e}")),
    };
    let outcome = (|| -> Result<(bool, String)> {
        let (n, c) = (inst.n(), inst.c() as i64);
        let v = build_mu(subset)?;
        let on_beta = v.pair(1, n);
        if on_beta != BigRational::from_integer(BigInt::from(c)) {
            return Ok((
                false,
                format!("mu+rho={v}: (mu+rho, beta) = {on_beta}, expected c={c}"),
            ));
        }
        let (all, regular) = s_sets(&v, subset)?;
        let expected = [RootEvent { m: c, root: (1, n) }];
        Ok((
            regular == expected,
            format!("mu+rho={v}, |S|={}, S°={}", all.len(), listed(&regular)),
        ))
    })();
    match outcome {
        Ok((pass, detail)) => CheckReport::new(name, subset, pass, detail),
        Err(e) => CheckReport::fail(name, subset, format!("error: {e}")),
    }
}

/// `Š_μᵒ = ∅` for the `μ` built from the closed-form `b`.
pub fn check_lemma44(subset: &SimpleSubset) -> CheckReport {
    let name = "lemma44";
    if let Err(e) = generic_instance(subset) {
        return CheckReport::fail(name, subset, format!("precondition violated: {e}"));
    }
    let outcome = (|| -> Result<(bool, String)> {
        let v = build_mu(subset)?;
        let (all, regular) = s_check_sets(&v, subset)?;
        Ok((
            regular.is_empty(),
            format!("mu+rho={v}, |Š|={}, Š°={}", all.len(), listed(&regular)),
        ))
    })();
    match outcome {
        Ok((pass, detail)) => CheckReport::new(name, subset, pass, detail),
        Err(e) => CheckReport::fail(name, subset, format!("error: {e}")),
    }
}

/// The linear factors of the characteristic polynomial `γ_c · p_I`:
/// `γ_c` followed by the positive roots of the Levi factor.
pub fn characteristic_factors(subset: &SimpleSubset) -> Result<Vec<Weight>> {
    let inst = BsInstance::new(subset.clone())?;
    let n = inst.n();
    let mut factors = vec![gamma(n, inst.c())?];
    factors.extend(
        subset
            .levi_positive_roots()
            .into_iter()
            .map(|(i, j)| Weight::root(n, i, j)),
    );
    Ok(factors)
}

/// There are `1 + Σ c_i(c_i − 1)/2` factors, `γ_c` pairs to zero with every
/// `α ∈ I`, and `−γ_c` is the weight of the generator.
pub fn check_characteristic_factors(subset: &SimpleSubset) -> CheckReport {
    let name = "characteristic";
    let outcome = (|| -> Result<(bool, String)> {
        let inst = BsInstance::new(subset.clone())?;
        let factors = characteristic_factors(subset)?;
        let expected: usize = 1 + inst
            .chains()
            .lengths()
            .iter()
            .map(|&c| c * (c - 1) / 2)
            .sum::<usize>();
        if factors.len() != expected {
            return Ok((
                false,
                format!("{} factors, expected {expected}", factors.len()),
            ));
        }
        let gamma_c = &factors[0];
        if let Some(&a) = subset
            .members()
            .iter()
            .find(|&&a| gamma_c.pair_root(a, a + 1) != 0)
        {
            return Ok((
                false,
                format!("gamma_c={gamma_c} pairs nontrivially with a{a}"),
            ));
        }
        let wt = bs_element(&inst)?.weight(inst.n());
        if wt.as_ref() != Some(&-gamma_c) {
            return Ok((
                false,
                format!("generator weight {wt:?}, expected -({gamma_c})"),
            ));
        }
        Ok((
            true,
            format!("gamma_c={gamma_c} and {} Levi roots", expected - 1),
        ))
    })();
    match outcome {
        Ok((pass, detail)) => CheckReport::new(name, subset, pass, detail),
        Err(e) => CheckReport::fail(name, subset, format!("error: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(n: usize, members: &str) -> SimpleSubset {
        SimpleSubset::parse(n, members).unwrap()
    }

    fn ev(m: i64, i: usize, j: usize) -> RootEvent {
        RootEvent { m, root: (i, j) }
    }

    #[test]
    fn betas_and_gammas() {
        assert_eq!(beta(5, 1).unwrap(), Weight::root(5, 1, 5));
        assert_eq!(beta(5, 2).unwrap().to_string(), "a2+a3");
        assert_eq!(beta(4, 2).unwrap().to_string(), "a2");
        assert!(beta(4, 3).is_err());
        assert!(beta(5, 0).is_err());
        assert_eq!(gamma(5, 2).unwrap().to_string(), "a1+2a2+2a3+a4");
        assert_eq!(gamma(4, 2).unwrap(), Weight(vec![1, 1, -1, -1]));
        assert_eq!(gamma(2, 1).unwrap().to_string(), "a1");
    }

    #[test]
    fn b_values() {
        assert_eq!(
            solve_b(&[2, 1, 4, 1, 2]).unwrap(),
            BSolution::Solution(vec![1, 3, 2, 1])
        );
        assert_eq!(solve_b(&[3, 3]).unwrap(), BSolution::Solution(vec![2]));
        match solve_b(&[2, 2, 2]).unwrap() {
            BSolution::Infeasible(cert) => assert!(cert.verifies(&b_system(&[2, 2, 2]).unwrap())),
            other => panic!("expected infeasible, got {other:?}"),
        }
        assert_eq!(
            solve_b(&[2, 1]),
            Err(Error::UnequalEndChains { first: 2, last: 1 })
        );
        assert_eq!(solve_b(&[2]), Err(Error::SingleChain));
    }

    #[test]
    fn sl5_weight() {
        let i = subset(5, "1,4");
        let v = build_mu(&i).unwrap();
        assert_eq!(v, WeightVec::from_integers(&[2, 1, 1, 1, 0]));
        assert_eq!(v.to_string(), "(2,1,1,1,0)");
        let (s, so) = s_sets(&v, &i).unwrap();
        assert_eq!(
            s,
            vec![
                ev(1, 1, 3),
                ev(1, 1, 4),
                ev(2, 1, 5),
                ev(1, 2, 5),
                ev(1, 3, 5)
            ]
        );
        assert_eq!(so, vec![ev(2, 1, 5)]);
        assert_eq!(so[0].to_string(), "(2,a[1,5])");
        let (neg, neg_o) = s_check_sets(&v, &i).unwrap();
        assert!(neg.is_empty() && neg_o.is_empty());
        assert_eq!(
            build_mu(&subset(6, "1,3,5")),
            Err(Error::InfeasibleBSystem(vec![2]))
        );
    }

    #[test]
    fn index_sets_edge_cases() {
        let empty = SimpleSubset::empty(2).unwrap();
        let v = build_mu(&empty).unwrap();
        assert_eq!(v, WeightVec::from_integers(&[1, 0]));
        let (s, so) = s_sets(&v, &empty).unwrap();
        assert_eq!(s, so);
        assert!(s_check_sets(&v, &empty).unwrap().0.is_empty());
        let q = |a: i64| BigRational::new(BigInt::from(a), BigInt::from(4));
        let fractional = WeightVec::new(vec![q(0), q(2), q(3)]);
        assert!(s_sets(&fractional, &SimpleSubset::empty(3).unwrap())
            .unwrap()
            .0
            .is_empty());
        assert!(s_sets(&v, &SimpleSubset::empty(3).unwrap()).is_err());
    }

    #[test]
    fn checks_on_small_cases() {
        for i in [
            subset(5, "1,4"),
            SimpleSubset::empty(2).unwrap(),
            subset(10, "1,4,5,6,9"),
        ] {
            for r in [
                check_prop42(&i),
                check_lemma44(&i),
                check_characteristic_factors(&i),
            ] {
                assert!(r.pass, "{}", r.to_text());
            }
        }
        let r = check_prop42(&subset(6, "1,3,5"));
        assert!(!r.pass && r.detail.starts_with("precondition violated"));
    }

    #[test]
    fn factors() {
        let f = characteristic_factors(&subset(5, "1,4")).unwrap();
        assert_eq!(
            f,
            vec![
                gamma(5, 2).unwrap(),
                Weight::simple_root(5, 1),
                Weight::simple_root(5, 4)
            ]
        );
        assert_eq!(
            characteristic_factors(&SimpleSubset::empty(3).unwrap())
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            characteristic_factors(&subset(10, "1,4,5,6,9"))
                .unwrap()
                .len(),
            9
        );
    }
}
