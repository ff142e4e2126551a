//! Exhaustive verification over every admissible subset up to a rank bound.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bsgen::{
    check_cofactors, check_degree, check_descendants, check_general_generator,
    check_irreducibility_witness, check_lowest_t, check_minor_gcd, check_multilinear,
    check_poisson, check_vanishing, check_weight, BsInstance,
};
use crate::parabolic::SimpleSubset;
use crate::quantize::{check_characteristic_factors, check_lemma44, check_prop42};
use crate::report::CheckReport;
use crate::{Error, Result};

/// Checks run on every instance whose end chains have equal length.
pub const ADMISSIBLE_CHECKS: &[&str] = &[
    "descendants",
    "vanishing",
    "cofactors",
    "poisson",
    "weight",
    "lowest_t",
    "degree",
    "multilinear",
    "characteristic",
];

/// Checks that additionally require no interior chain to share the end length.
pub const GENERIC_CHECKS: &[&str] = &[
    "general_generator",
    "witness",
    "minor_gcd",
    "prop42",
    "lemma44",
];

/// Every check name, in the order reports are emitted for one instance.
pub fn all_checks() -> Vec<&'static str> {
    ADMISSIBLE_CHECKS
        .iter()
        .chain(GENERIC_CHECKS)
        .copied()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_n: usize,
    /// Restricts the run to one subset.
    pub subset: Option<SimpleSubset>,
    /// Restricts the run to these checks; `None` runs all of them.
    pub checks: Option<BTreeSet<String>>,
    /// Seed for the randomized half of the minor gcd check.
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(max_n: usize) -> Result<Self> {
        if max_n < 2 {
            return Err(Error::OutOfRange(format!(
                "max_n must be at least 2, got {max_n}"
            )));
        }
        Ok(SuiteConfig {
            max_n,
            subset: None,
            checks: None,
            seed: 0,
        })
    }

    /// Parses and validates a comma-separated list of check names.
    pub fn with_checks(mut self, list: &str) -> Result<Self> {
        let known = all_checks();
        let mut chosen = BTreeSet::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if !known.contains(&name) {
                return Err(Error::OutOfRange(format!(
                    "unknown check '{name}'; known: {}",
                    known.join(",")
                )));
            }
            chosen.insert(name.to_string());
        }
        self.checks = Some(chosen);
        Ok(self)
    }

    pub fn with_subset(mut self, subset: SimpleSubset) -> Self {
        self.subset = Some(subset);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn wants(&self, name: &str) -> bool {
        self.checks.as_ref().is_none_or(|c| c.contains(name))
    }
}

/// Counts for a finished run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub instances: usize,
    pub generic: usize,
    /// Subsets whose end chains differ in length.
    pub skipped: usize,
    pub reports: usize,
    pub failures: usize,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs the selected checks on one admissible instance.
pub fn run_instance(inst: &BsInstance, config: &SuiteConfig) -> Vec<CheckReport> {
    let subset = inst.subset();
    let mut out = Vec::new();
    let mut run = |name: &str, f: &dyn Fn() -> CheckReport| {
        if config.wants(name) {
            out.push(f());
        }
    };
    run("descendants", &|| check_descendants(subset));
    run("vanishing", &|| check_vanishing(inst));
    run("cofactors", &|| check_cofactors(inst));
    run("poisson", &|| check_poisson(inst));
    run("weight", &|| check_weight(inst));
    run("lowest_t", &|| check_lowest_t(inst));
    run("degree", &|| check_degree(inst));
    run("multilinear", &|| check_multilinear(inst));
    run("characteristic", &|| check_characteristic_factors(subset));
    if inst.is_generic() {
        run("general_generator", &|| check_general_generator(inst));
        run("witness", &|| check_irreducibility_witness(inst));
        run("minor_gcd", &|| check_minor_gcd(inst, config.seed));
        run("prop42", &|| check_prop42(subset));
        run("lemma44", &|| check_lemma44(subset));
    }
    out
}

/// The subsets of one rank, in bitmask order, split into admissible
/// instances and a count of skipped subsets.
pub fn instances_of_rank(n: usize) -> Result<(Vec<BsInstance>, usize)> {
    let mut found = Vec::new();
    let mut skipped = 0;
    for mask in 0u64..1 << (n - 1) {
        match BsInstance::new(SimpleSubset::from_bitmask(n, mask)?) {
            Ok(inst) => found.push(inst),
            Err(_) => skipped += 1,
        }
    }
    Ok((found, skipped))
}

/// Runs the suite, handing reports to `emit` in enumeration order. Instances
/// of one rank are checked in parallel and emitted once the rank finishes.
pub fn run_suite(config: &SuiteConfig, mut emit: impl FnMut(&CheckReport)) -> Result<SuiteSummary> {
    let mut summary = SuiteSummary::default();
    let batches: Vec<(Vec<BsInstance>, usize)> = match &config.subset {
        Some(subset) => vec![match BsInstance::new(subset.clone()) {
            Ok(inst) => (vec![inst], 0),
            Err(_) => (Vec::new(), 1),
        }],
        None => (2..=config.max_n)
            .map(instances_of_rank)
            .collect::<Result<_>>()?,
    };
    for (batch, skipped) in batches {
        summary.skipped += skipped;
        summary.instances += batch.len();
        summary.generic += batch.iter().filter(|i| i.is_generic()).count();
        let results: Vec<Vec<CheckReport>> = batch
            .par_iter()
            .map(|inst| run_instance(inst, config))
            .collect();
        for report in results.iter().flatten() {
            summary.reports += 1;
            summary.failures += usize::from(!report.pass);
            emit(report);
        }
    }
    Ok(summary)
}
