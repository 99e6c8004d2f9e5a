//! Randomised connectivity checks: thin seeded random volumes and compare the
//! object's 26-component count before and after every deletion round.

use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::engine::{thin_observed, ThinOptions};
use crate::templates::{TemplateSet, Variant};
use crate::verify::components::component_count;
use crate::verify::fixtures::random_volume;
use crate::volume::{Adjacency, BinaryVolume, Dims};

/// One round that changed the component count, with enough data to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub volume_seed: u64,
    pub pass: usize,
    pub round: usize,
    pub components_before: usize,
    pub components_after: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzReport {
    pub variant: Variant,
    pub trials: usize,
    pub seed: u64,
    pub dims: Dims,
    pub density: f64,
    /// Sorted by volume seed, then pass, then round.
    pub violations: Vec<Violation>,
    pub rounds_checked: usize,
}

impl FuzzReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_structured(&self) -> String {
        let mut s = format!(
            "variant={} trials={} seed={} dims={}x{}x{} density={} rounds={} violations={}\n",
            self.variant,
            self.trials,
            self.seed,
            self.dims.x,
            self.dims.y,
            self.dims.z,
            self.density,
            self.rounds_checked,
            self.violations.len()
        );
        for v in &self.violations {
            let _ = writeln!(
                s,
                "volume_seed={} pass={} round={} before={} after={}",
                v.volume_seed, v.pass, v.round, v.components_before, v.components_after
            );
        }
        s
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "fuzz {}: {} trials of {} at density {} (seed {}), {} rounds checked",
            self.variant, self.trials, self.dims, self.density, self.seed, self.rounds_checked
        )?;
        for v in &self.violations {
            writeln!(
                f,
                "  volume seed {} pass {} round {}: {} -> {} components",
                v.volume_seed, v.pass, v.round, v.components_before, v.components_after
            )?;
        }
        write!(f, "violations: {}", self.violations.len())
    }
}

/// Seed of trial `i` in a run seeded with `seed`.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_add(i as u64)
}

/// Thins `vol`, checking every round; returns violations and rounds checked.
pub fn check_volume(set: &TemplateSet, vol: &BinaryVolume, volume_seed: u64) -> (Vec<Violation>, usize) {
    let mut out = Vec::new();
    let mut rounds = 0;
    let mut count = component_count(vol, Adjacency::TwentySix);
    thin_observed(vol, set, &ThinOptions::default(), |ev| {
        rounds += 1;
        if ev.deleted.is_empty() {
            return;
        }
        let after = component_count(ev.after, Adjacency::TwentySix);
        if after != count {
            out.push(Violation {
                volume_seed,
                pass: ev.pass_index,
                round: ev.round_index,
                components_before: count,
                components_after: after,
            });
        }
        count = after;
    });
    (out, rounds)
}

/// Runs `trials` random volumes with seeds `seed, seed + 1, ...`.
pub fn fuzz_connectivity(
    set: &TemplateSet,
    trials: usize,
    dims: Dims,
    density: f64,
    seed: u64,
) -> FuzzReport {
    fuzz_with(set, trials, dims, density, seed, false)
}

/// [`fuzz_connectivity`] with trials optionally spread over the rayon pool;
/// the report is identical either way.
pub fn fuzz_with(
    set: &TemplateSet,
    trials: usize,
    dims: Dims,
    density: f64,
    seed: u64,
    parallel: bool,
) -> FuzzReport {
    let run = |i: usize| {
        let s = trial_seed(seed, i);
        check_volume(set, &random_volume(s, dims, density), s)
    };
    let results: Vec<(Vec<Violation>, usize)> = if parallel {
        (0..trials).into_par_iter().map(run).collect()
    } else {
        (0..trials).map(run).collect()
    };
    let rounds_checked = results.iter().map(|r| r.1).sum();
    let mut violations: Vec<Violation> = results.into_iter().flat_map(|r| r.0).collect();
    violations.sort_by_key(|v| (v.volume_seed, v.pass, v.round));
    FuzzReport { variant: set.variant(), trials, seed, dims, density, violations, rounds_checked }
}
