//! Acceptance suite: prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thin3d::engine::{thin, ThinOptions};
use thin3d::io;
use thin3d::templates::{build_template_set, TemplateClass, Variant};
use thin3d::verify::components::{background_component_count, component_count};
use thin3d::verify::fixtures::{self, Fixture};
use thin3d::verify::{audit_p1p2, fuzz_connectivity, is_simple};
use thin3d::{Adjacency, BinaryVolume, Dims, Point3};

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn recorded() -> ThinOptions {
    ThinOptions { record_points: true, ..ThinOptions::default() }
}

fn first_round_labels(f: &Fixture, variant: Variant) -> (BTreeSet<char>, BinaryVolume) {
    let (out, report) = thin(&f.volume, &build_template_set(variant), &recorded());
    let round1 = &report.passes[0].deleted_points.as_ref().expect("recorded")[0];
    let labels = round1.iter().map(|&p| f.label_of(p).expect("labelled point")).collect();
    (labels, out)
}

fn labels(s: &str) -> BTreeSet<char> {
    s.chars().collect()
}

fn counterexample() -> Outcome {
    let f = fixtures::fig7();
    let (deleted, out) = first_round_labels(&f, Variant::OriginalMaSonka);
    let comps = component_count(&out, Adjacency::TwentySix);
    check(
        deleted == labels("cde") && comps == 2,
        format!("original deletes {deleted:?} in round 1, {comps} components after thinning"),
    )
}

fn fix_verification() -> Outcome {
    let f = fixtures::fig7();
    let (deleted, out) = first_round_labels(&f, Variant::Corrected);
    let comps = component_count(&out, Adjacency::TwentySix);
    let d_kept = out.get(f.point('d'));
    let f12 = fixtures::fig12();
    let (out12, _) = thin(&f12.volume, &build_template_set(Variant::Corrected), &ThinOptions::default());
    let comps12 = component_count(&out12, Adjacency::TwentySix);
    check(
        deleted == labels("ce") && d_kept && comps == 1 && comps12 == 1,
        format!(
            "corrected deletes {deleted:?} in round 1, d kept: {d_kept}, fig7 components {comps}, fig12 components {comps12}"
        ),
    )
}

fn template_counts() -> Outcome {
    let counts: Vec<usize> = Variant::ALL.iter().map(|&v| build_template_set(v).len()).collect();
    let orig = build_template_set(Variant::OriginalMaSonka);
    let per_class: Vec<usize> = [TemplateClass::A, TemplateClass::B, TemplateClass::C, TemplateClass::D]
        .iter()
        .map(|&c| orig.count_class(c))
        .collect();
    check(
        counts == [38, 62, 62] && per_class == [6, 12, 8, 12],
        format!("original/corrected/errata = {counts:?}, original per class {per_class:?}"),
    )
}

fn p1p2_audit() -> Outcome {
    let sets: Vec<_> = Variant::ALL.iter().map(|&v| build_template_set(v)).collect();
    let reports: Vec<_> = sets.iter().map(audit_p1p2).collect();
    let v: Vec<usize> = reports.iter().map(|r| r.violation_count()).collect();
    // Classes A-C carry no (p1, p2) pair, so none of them can realize (1, 1).
    let abc_violations = sets
        .iter()
        .zip(&reports)
        .flat_map(|(set, r)| r.violations().map(move |x| set.get(&x.id).expect("audited id").class()))
        .filter(|&c| c != TemplateClass::D)
        .count();
    let abc_skipped: Vec<usize> = reports.iter().map(|r| r.not_applicable).collect();
    check(
        v == [12, 0, 0] && abc_violations == 0 && abc_skipped == [26, 26, 26],
        format!(
            "violations original/corrected/errata = {v:?}, class A-C violations {abc_violations} ({abc_skipped:?} templates not applicable)"
        ),
    )
}

fn connectivity_fuzz() -> Outcome {
    let set = build_template_set(Variant::CorrectedErrata);
    let dims = Dims::new(8, 8, 8).unwrap();
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut total = 0;
    let mut first = None;
    for (density, seed) in [(0.2, 20_000), (0.4, 40_000), (0.6, 60_000)] {
        let r = fuzz_connectivity(&set, 500, dims, density, seed);
        total += r.violations.len();
        if first.is_none() {
            first = r.violations.first().cloned();
        }
        parts.push(format!("{density}: {}", r.violations.len()));
    }
    let secs = start.elapsed().as_secs_f64();
    let mut detail = format!(
        "corrected-errata, 3 x 500 volumes 8x8x8, violations by density [{}], {secs:.1}s single-threaded",
        parts.join(", ")
    );
    if let Some(v) = first {
        detail += &format!("; first: volume seed {} pass {} round {}", v.volume_seed, v.pass, v.round);
    }
    check(total == 0 && secs < 60.0, detail)
}

fn sample_volumes() -> Vec<BinaryVolume> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    (0..50)
        .map(|i| {
            let d = Dims::new(rng.gen_range(4..=12), rng.gen_range(4..=12), rng.gen_range(4..=12)).unwrap();
            let density = [0.2, 0.4, 0.6, 0.8][i % 4];
            fixtures::random(rng.gen(), d, density).unwrap().volume
        })
        .collect()
}

fn parallel_determinism(vols: &[BinaryVolume]) -> Outcome {
    let mut mismatches = 0;
    for variant in Variant::ALL {
        let set = build_template_set(variant);
        for v in vols {
            let (a, ra) = thin(v, &set, &recorded());
            let (b, rb) = thin(v, &set, &ThinOptions { parallel: true, ..recorded() });
            if a != b || ra != rb {
                mismatches += 1;
            }
        }
    }
    check(mismatches == 0, format!("{} volumes x 3 variants, {mismatches} mismatches", vols.len()))
}

fn idempotence(vols: &[BinaryVolume]) -> Outcome {
    let mut nonzero = 0;
    for variant in Variant::ALL {
        let set = build_template_set(variant);
        for v in vols {
            let (once, _) = thin(v, &set, &ThinOptions::default());
            let (twice, r) = thin(&once, &set, &ThinOptions::default());
            if r.total_deleted != 0 || twice != once {
                nonzero += 1;
            }
        }
    }
    check(nonzero == 0, format!("{} volumes x 3 variants, {nonzero} re-thinnings deleted points", vols.len()))
}

fn simple_point_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let dims = Dims::new(5, 5, 5).unwrap();
    let centre = Point3::new(2, 2, 2);
    let (mut simple, mut failures) = (0, 0);
    for _ in 0..10_000 {
        let density = rng.gen_range(0.1..0.9);
        let mut block = BinaryVolume::new(dims);
        for z in 1..4 {
            for y in 1..4 {
                for x in 1..4 {
                    let p = Point3::new(x, y, z);
                    block.set(p, p == centre || rng.gen_bool(density)).unwrap();
                }
            }
        }
        if !is_simple(&block, centre).unwrap() {
            continue;
        }
        simple += 1;
        let mut after = block.clone();
        after.set(centre, false).unwrap();
        if component_count(&block, Adjacency::TwentySix) != component_count(&after, Adjacency::TwentySix)
            || background_component_count(&block) != background_component_count(&after)
        {
            failures += 1;
        }
    }
    check(failures == 0, format!("10000 neighbourhoods, {simple} simple, {failures} failures"))
}

fn format_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failures = 0;
    for _ in 0..200 {
        let d = Dims::new(rng.gen_range(1..=10), rng.gen_range(1..=10), rng.gen_range(1..=10)).unwrap();
        let v = fixtures::random(rng.gen(), d, rng.gen_range(0.0..=1.0)).unwrap().volume;
        let text = io::to_text(&v);
        let bin = io::to_binary(&v);
        let ok = io::from_text(&text).is_ok_and(|t| io::to_text(&t) == text && t == v)
            && io::from_binary(&bin).is_ok_and(|b| io::to_binary(&b) == bin && b == v);
        if !ok {
            failures += 1;
        }
    }
    check(failures == 0, format!("200 volumes, {failures} failures"))
}

fn main() -> ExitCode {
    let vols = sample_volumes();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("counterexample reproduction", Box::new(counterexample)),
        ("fix verification", Box::new(fix_verification)),
        ("template counts", Box::new(template_counts)),
        ("p1p2 audit", Box::new(p1p2_audit)),
        ("connectivity fuzzing", Box::new(connectivity_fuzz)),
        ("sequential/parallel determinism", Box::new(|| parallel_determinism(&vols))),
        ("idempotence", Box::new(|| idempotence(&vols))),
        ("simple-point soundness", Box::new(simple_point_soundness)),
        ("format round-trip", Box::new(format_round_trip)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(d) => println!("criterion {}: PASS {name}: {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {d}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
