//! Watch every deletion round of a run: deleted count and component count.

use thin3d::engine::{thin_observed, ThinOptions};
use thin3d::verify::components::component_count;
use thin3d::verify::fixtures::fig12;
use thin3d::{build_template_set, Adjacency, Variant};

fn main() {
    let f = fig12();
    for variant in [Variant::OriginalMaSonka, Variant::Corrected] {
        println!("{variant}");
        let set = build_template_set(variant);
        thin_observed(&f.volume, &set, &ThinOptions::default(), |ev| {
            if ev.deleted.is_empty() {
                return;
            }
            println!(
                "  pass {} round {}: -{:<3} objects {:<3} components {}",
                ev.pass_index,
                ev.round_index,
                ev.deleted.len(),
                ev.after.object_count(),
                component_count(ev.after, Adjacency::TwentySix)
            );
        });
    }
}
