//! Three pairwise face-diagonal voxels that every template family deletes
//! in one round: each point is non-tail, simple, and matched by a Class D
//! template through its diagonal neighbour, which is deleted as well.

use thin3d::engine::{deletion_decisions, thin, ThinOptions};
use thin3d::verify::components::component_count;
use thin3d::{build_template_set, Adjacency, BinaryVolume, Point3, Variant};

fn main() {
    let pts = [Point3::new(0, 1, 0), Point3::new(0, 0, 1), Point3::new(1, 1, 1)];
    let (vol, shift) = BinaryVolume::from_points(&pts, 2);
    for variant in Variant::ALL {
        let set = build_template_set(variant);
        let cands: Vec<Point3> = vol.object_points().collect();
        let ids: Vec<String> = deletion_decisions(&vol, &cands, &set, false)
            .iter()
            .map(|d| format!("{}:{}", d.point - shift, set.templates()[d.template].id()))
            .collect();
        let (out, _) = thin(&vol, &set, &ThinOptions::default());
        println!(
            "{:>16}: round 1 {:?}, components {} -> {}",
            variant.name(),
            ids,
            component_count(&vol, Adjacency::TwentySix),
            component_count(&out, Adjacency::TwentySix)
        );
    }
}
