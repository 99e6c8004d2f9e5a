use proptest::prelude::*;

use thin3d::engine::{deletion_decisions, mark_border, thin, thin_observed, ThinOptions};
use thin3d::io;
use thin3d::tail::{classify, is_tail, TailClassification};
use thin3d::templates::{matches, CellRequirement, Template, TemplateClass, TopologicalSimple};
use thin3d::verify::components::{background_component_count, component_count};
use thin3d::verify::is_simple;
use thin3d::volume::{cell_offset, count_object_neighbors, neighbors};
use thin3d::{build_template_set, Adjacency, BinaryVolume, Dims, Point3, Variant};

fn volume(max: usize) -> impl Strategy<Value = BinaryVolume> {
    (1..=max, 1..=max, 1..=max, 0.05f64..0.95).prop_flat_map(|(x, y, z, d)| {
        prop::collection::vec(prop::bool::weighted(d), x * y * z)
            .prop_map(move |v| BinaryVolume::from_voxels(Dims::new(x, y, z).unwrap(), v).unwrap())
    })
}

fn variant() -> impl Strategy<Value = Variant> {
    prop::sample::select(Variant::ALL.to_vec())
}

fn point() -> impl Strategy<Value = Point3> {
    (-20i64..20, -20i64..20, -20i64..20).prop_map(|(x, y, z)| Point3::new(x, y, z))
}

fn adjacency() -> impl Strategy<Value = Adjacency> {
    prop::sample::select(vec![Adjacency::Six, Adjacency::Eighteen, Adjacency::TwentySix])
}

/// A random 3x3x3 neighbourhood centred in a 5x5x5 block.
fn block() -> impl Strategy<Value = BinaryVolume> {
    (0.1f64..0.9).prop_flat_map(|d| {
        prop::collection::vec(prop::bool::weighted(d), 27).prop_map(|bits| {
            let mut v = BinaryVolume::new(Dims::new(5, 5, 5).unwrap());
            for (i, b) in bits.into_iter().enumerate() {
                let p = cell_offset(i) + Point3::new(2, 2, 2);
                v.set(p, b || i == 13).unwrap();
            }
            v
        })
    })
}

fn object_subset(a: &BinaryVolume, b: &BinaryVolume) -> bool {
    a.voxels().iter().zip(b.voxels()).all(|(&x, &y)| !x || y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn neighbourhoods_nest_and_are_symmetric(p in point(), k in adjacency()) {
        let n6 = neighbors(p, Adjacency::Six);
        let n18 = neighbors(p, Adjacency::Eighteen);
        let n26 = neighbors(p, Adjacency::TwentySix);
        prop_assert_eq!((n6.len(), n18.len(), n26.len()), (6, 18, 26));
        prop_assert!(n6.iter().all(|q| n18.contains(q)));
        prop_assert!(n18.iter().all(|q| n26.contains(q)));
        for q in neighbors(p, k) {
            prop_assert!(neighbors(q, k).contains(&p));
        }
    }

    #[test]
    fn voxel_writes_read_back(v in volume(6)) {
        let mut w = BinaryVolume::new(v.dims());
        for i in 0..v.voxels().len() {
            let p = v.point(i);
            w.set(p, v.get(p)).unwrap();
        }
        prop_assert_eq!(w.object_count(), v.voxels().iter().filter(|&&b| b).count());
        prop_assert_eq!(w, v);
    }

    #[test]
    fn formats_round_trip_and_agree(v in volume(7)) {
        let text = io::to_text(&v);
        let bin = io::to_binary(&v);
        let from_text = io::from_text(&text).unwrap();
        let from_bin = io::from_binary(&bin).unwrap();
        prop_assert_eq!(bin.len(), 17 + v.dims().len());
        prop_assert_eq!(io::to_text(&from_text), text.clone());
        prop_assert_eq!(io::to_binary(&from_bin), bin.clone());
        prop_assert_eq!(&from_text, &from_bin);
        prop_assert_eq!(io::to_binary(&from_text), bin);
        prop_assert_eq!(io::to_text(&from_bin), text);
    }

    #[test]
    fn components_ignore_translation_and_axis_order(v in volume(6), k in adjacency(), shift in 0usize..3) {
        let d = v.dims();
        let mut moved = BinaryVolume::new(Dims::new(d.z + shift, d.x, d.y).unwrap());
        for p in v.object_points() {
            moved.set(Point3::new(p.z + shift as i64, p.x, p.y), true).unwrap();
        }
        prop_assert_eq!(component_count(&v, k), component_count(&moved, k));
    }

    #[test]
    fn simple_deletion_keeps_block_topology(b in block()) {
        let c = Point3::new(2, 2, 2);
        if is_simple(&b, c).unwrap() {
            let mut after = b.clone();
            after.set(c, false).unwrap();
            prop_assert_eq!(component_count(&b, Adjacency::TwentySix), component_count(&after, Adjacency::TwentySix));
            prop_assert_eq!(background_component_count(&b), background_component_count(&after));
        }
    }

    #[test]
    fn point_tests_only_see_the_neighbourhood(b in block(), outer in prop::collection::vec((0i64..5, 0i64..5, 0i64..5), 1..20)) {
        let c = Point3::new(2, 2, 2);
        let mut m = b.clone();
        for (x, y, z) in outer {
            let p = Point3::new(x, y, z);
            if (p - c).x.abs() > 1 || (p - c).y.abs() > 1 || (p - c).z.abs() > 1 {
                m.set(p, true).unwrap();
            }
        }
        prop_assert_eq!(is_simple(&b, c).unwrap(), is_simple(&m, c).unwrap());
        prop_assert_eq!(classify(&b, c).unwrap(), classify(&m, c).unwrap());
    }

    #[test]
    fn near_line_ends_have_two_face_neighbours(b in block()) {
        let c = Point3::new(2, 2, 2);
        if classify(&b, c).unwrap() == TailClassification::NearLineEnd {
            prop_assert_eq!(count_object_neighbors(&b, c, Adjacency::TwentySix).unwrap(), 2);
            prop_assert_eq!(count_object_neighbors(&b, c, Adjacency::Six).unwrap(), 2);
        }
    }

    #[test]
    fn extra_requirements_only_shrink_matches(
        v in volume(7),
        var in variant(),
        which in any::<prop::sample::Index>(),
        cell in 0usize..27,
        object in any::<bool>(),
    ) {
        let set = build_template_set(var);
        let t = which.get(set.templates());
        let o = cell_offset(cell);
        prop_assume!(o != Point3::ORIGIN && t.cell(o) == CellRequirement::DontCare);
        let req = if object { CellRequirement::Object } else { CellRequirement::Background };
        let group: Vec<Point3> = t.at_least_one_object().iter().copied().filter(|&g| g != o).collect();
        prop_assume!(group.is_empty() == (t.class() != TemplateClass::D));
        let stricter = Template::new(
            "stricter",
            t.class(),
            t.fixed_cells().chain([(o, req)]),
            group,
            t.p1p2_offsets(),
        )
        .unwrap();
        for p in v.object_points() {
            if matches(&stricter, &v, p, &TopologicalSimple).unwrap() {
                prop_assert!(matches(t, &v, p, &TopologicalSimple).unwrap(), "{} at {}", t.id(), p);
            }
        }
    }

    #[test]
    fn matching_only_sees_the_template_box(
        v in volume(8),
        var in variant(),
        which in any::<prop::sample::Index>(),
        flips in prop::collection::vec(any::<prop::sample::Index>(), 1..10),
    ) {
        let set = build_template_set(var);
        let t = which.get(set.templates());
        let (lo, hi) = t.bounds();
        for p in v.object_points() {
            let mut m = v.clone();
            for f in &flips {
                let q = m.point(f.index(m.voxels().len()));
                let o = q - p;
                let inside = o.x >= lo.x && o.x <= hi.x && o.y >= lo.y && o.y <= hi.y && o.z >= lo.z && o.z <= hi.z;
                if !inside {
                    let now = m.get(q);
                    m.set(q, !now).unwrap();
                }
            }
            prop_assert_eq!(
                matches(t, &v, p, &TopologicalSimple).unwrap(),
                matches(t, &m, p, &TopologicalSimple).unwrap()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn thinning_only_removes_points_and_is_idempotent(v in volume(9), var in variant()) {
        let set = build_template_set(var);
        let (once, r) = thin(&v, &set, &ThinOptions::default());
        prop_assert!(r.fixpoint_reached);
        prop_assert!(object_subset(&once, &v));
        prop_assert_eq!(r.total_deleted, v.object_count() - once.object_count());
        let (twice, r2) = thin(&once, &set, &ThinOptions::default());
        prop_assert_eq!(r2.total_deleted, 0);
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn parallel_runs_match_sequential_runs(v in volume(9), var in variant()) {
        let set = build_template_set(var);
        let seq = ThinOptions { record_points: true, ..ThinOptions::default() };
        let par = ThinOptions { parallel: true, ..seq.clone() };
        prop_assert_eq!(thin(&v, &set, &seq), thin(&v, &set, &par));
    }

    #[test]
    fn rounds_spare_tails_and_class_d_needs_simple_points(v in volume(8), var in variant()) {
        let set = build_template_set(var);
        let mut bad = Vec::new();
        thin_observed(&v, &set, &ThinOptions::default(), |ev| {
            let cands: Vec<Point3> = ev.deleted.to_vec();
            let decisions = deletion_decisions(ev.before, &cands, &set, false);
            if decisions.len() != cands.len() {
                bad.push(format!("{} deleted points no longer deletable", cands.len() - decisions.len()));
            }
            for d in decisions {
                if is_tail(ev.before, d.point).unwrap() {
                    bad.push(format!("tail {} deleted", d.point));
                }
                if set.templates()[d.template].class() == TemplateClass::D && !is_simple(ev.before, d.point).unwrap() {
                    bad.push(format!("non-simple {} deleted by {}", d.point, set.templates()[d.template].id()));
                }
            }
        });
        prop_assert!(bad.is_empty(), "{:?}", bad);
    }

    #[test]
    fn rounds_only_delete_marked_points(v in volume(8), var in variant()) {
        let set = build_template_set(var);
        let mut marked: Vec<Point3> = Vec::new();
        let mut stray = 0;
        thin_observed(&v, &set, &ThinOptions::default(), |ev| {
            if ev.round_index == 0 {
                marked = mark_border(ev.before);
            }
            stray += ev.deleted.iter().filter(|p| !marked.contains(p)).count();
        });
        prop_assert_eq!(stray, 0);
    }
}
