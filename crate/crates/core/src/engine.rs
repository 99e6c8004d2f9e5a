//! The fully parallel thinning loop.
//!
//! Each pass marks the border (object points 26-adjacent to background), then
//! runs deletion rounds: every marked, non-tail point matching a template in
//! the round's snapshot is removed at once. Rounds repeat until one deletes
//! nothing; passes repeat until a pass deletes nothing.

use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::tail::classify_bits;
use crate::templates::{TemplateSet, TopologicalSimple, Variant};
use crate::volume::{BinaryVolume, Point3};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinOptions {
    /// Hang guard; exceeding it ends the run with `fixpoint_reached = false`.
    pub max_passes: usize,
    /// Evaluate the deletion predicate on the rayon pool.
    pub parallel: bool,
    /// Keep the deleted points of every round in the report.
    pub record_points: bool,
    /// Only marked border points are candidates. Turning this off makes every
    /// object point a candidate in every round.
    pub restrict_to_marked: bool,
}

impl Default for ThinOptions {
    fn default() -> Self {
        ThinOptions { max_passes: 10_000, parallel: false, record_points: false, restrict_to_marked: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassRecord {
    pub pass_index: usize,
    pub marked_count: usize,
    /// Points deleted per round; the last entry is 0 unless the run was cut short.
    pub rounds: Vec<usize>,
    /// Sorted deleted points per round, when requested.
    pub deleted_points: Option<Vec<Vec<Point3>>>,
}

impl PassRecord {
    pub fn deleted(&self) -> usize {
        self.rounds.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinningReport {
    pub variant: Variant,
    pub passes: Vec<PassRecord>,
    pub total_deleted: usize,
    pub fixpoint_reached: bool,
}

impl ThinningReport {
    /// Deleted counts of every round in order, across passes.
    pub fn round_counts(&self) -> Vec<usize> {
        self.passes.iter().flat_map(|p| p.rounds.iter().copied()).collect()
    }

    /// `key=value` lines: one summary line, then one line per pass.
    pub fn to_structured(&self) -> String {
        let mut s = format!(
            "variant={} passes={} total_deleted={} fixpoint={}\n",
            self.variant,
            self.passes.len(),
            self.total_deleted,
            self.fixpoint_reached
        );
        for p in &self.passes {
            let rounds: Vec<String> = p.rounds.iter().map(usize::to_string).collect();
            let _ = writeln!(
                s,
                "pass={} marked={} deleted={} rounds={}",
                p.pass_index,
                p.marked_count,
                p.deleted(),
                rounds.join(",")
            );
        }
        s
    }
}

impl fmt::Display for ThinningReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_structured())
    }
}

/// Object points with at least one background point in `N26`, in index order.
pub fn mark_border(vol: &BinaryVolume) -> Vec<Point3> {
    const FULL: u32 = 0x7ff_ffff;
    vol.object_points().filter(|&p| vol.neighborhood_bits(p) != FULL).collect()
}

/// A point chosen for deletion and the index of the first template it matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deletion {
    pub point: Point3,
    pub template: usize,
}

fn decide(snapshot: &BinaryVolume, p: Point3, set: &TemplateSet) -> Option<Deletion> {
    if !snapshot.get(p) {
        return None;
    }
    let bits = snapshot.neighborhood_bits(p);
    if classify_bits(bits).is_tail() {
        return None;
    }
    let t = set.first_match_bits(bits, snapshot, p, &TopologicalSimple)?;
    let template = set.templates().iter().position(|u| std::ptr::eq(u, t)).expect("member");
    Some(Deletion { point: p, template })
}

/// The deletion predicate over `candidates`, evaluated against `snapshot`
/// only. Output follows candidate order, whatever the schedule.
pub fn deletion_decisions(
    snapshot: &BinaryVolume,
    candidates: &[Point3],
    set: &TemplateSet,
    parallel: bool,
) -> Vec<Deletion> {
    if parallel {
        candidates.par_iter().filter_map(|&p| decide(snapshot, p, set)).collect()
    } else {
        candidates.iter().filter_map(|&p| decide(snapshot, p, set)).collect()
    }
}

/// One simultaneous deletion round; returns the deleted points.
pub fn deletion_round(
    vol: &mut BinaryVolume,
    candidates: &[Point3],
    set: &TemplateSet,
    parallel: bool,
) -> Vec<Point3> {
    let deleted: Vec<Point3> =
        deletion_decisions(vol, candidates, set, parallel).into_iter().map(|d| d.point).collect();
    for &p in &deleted {
        vol.set(p, false).expect("candidate inside volume");
    }
    deleted
}

/// What an observer sees after each deletion round.
pub struct RoundEvent<'a> {
    pub pass_index: usize,
    pub round_index: usize,
    pub before: &'a BinaryVolume,
    pub after: &'a BinaryVolume,
    pub deleted: &'a [Point3],
}

/// Runs the thinning loop to a fixpoint.
pub fn thin(vol: &BinaryVolume, set: &TemplateSet, options: &ThinOptions) -> (BinaryVolume, ThinningReport) {
    thin_observed(vol, set, options, |_| {})
}

/// [`thin`], calling `observer` after every round (including the final empty one).
pub fn thin_observed(
    vol: &BinaryVolume,
    set: &TemplateSet,
    options: &ThinOptions,
    mut observer: impl FnMut(&RoundEvent<'_>),
) -> (BinaryVolume, ThinningReport) {
    let mut current = vol.clone();
    let mut passes = Vec::new();
    let mut total_deleted = 0;
    let mut fixpoint_reached = false;
    for pass_index in 0..options.max_passes.max(1) {
        let marked = mark_border(&current);
        let mut rounds = Vec::new();
        let mut points = options.record_points.then(Vec::new);
        let mut candidates = marked.clone();
        loop {
            if !options.restrict_to_marked {
                candidates = current.object_points().collect();
            }
            let before = current.clone();
            let deleted = deletion_round(&mut current, &candidates, set, options.parallel);
            observer(&RoundEvent {
                pass_index,
                round_index: rounds.len(),
                before: &before,
                after: &current,
                deleted: &deleted,
            });
            rounds.push(deleted.len());
            if let Some(pts) = points.as_mut() {
                let mut d = deleted.clone();
                d.sort();
                pts.push(d);
            }
            if deleted.is_empty() {
                break;
            }
            total_deleted += deleted.len();
            candidates.retain(|&p| current.get(p));
        }
        let pass_deleted: usize = rounds.iter().sum();
        passes.push(PassRecord { pass_index, marked_count: marked.len(), rounds, deleted_points: points });
        if pass_deleted == 0 {
            fixpoint_reached = true;
            break;
        }
    }
    let report = ThinningReport { variant: set.variant(), passes, total_deleted, fixpoint_reached };
    (current, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::templates::build_template_set;
    use crate::verify::fixtures::solid_box;
    use crate::volume::Dims;

    #[test]
    fn border_of_small_and_large_cubes() {
        // The centre of a 3x3x3 cube sees only object points.
        assert_eq!(mark_border(&solid_box(3, 3, 3).unwrap().volume).len(), 26);
        assert_eq!(mark_border(&solid_box(5, 5, 5).unwrap().volume).len(), 98);
        assert!(mark_border(&BinaryVolume::new(Dims::new(3, 3, 3).unwrap())).is_empty());
    }

    #[test]
    fn empty_volume_is_one_pass() {
        let v = BinaryVolume::new(Dims::new(4, 4, 4).unwrap());
        for variant in Variant::ALL {
            let (out, r) = thin(&v, &build_template_set(variant), &ThinOptions::default());
            assert_eq!(out, v);
            assert_eq!(r.passes.len(), 1);
            assert_eq!(r.total_deleted, 0);
            assert!(r.fixpoint_reached);
        }
    }

    #[test]
    fn pass_limit_is_reported() {
        let v = solid_box(6, 6, 6).unwrap().volume;
        let opts = ThinOptions { max_passes: 1, ..ThinOptions::default() };
        let (_, r) = thin(&v, &build_template_set(Variant::Corrected), &opts);
        assert!(!r.fixpoint_reached);
        assert_eq!(r.passes.len(), 1);
    }
}
