//! The seven-point chain a–g: the original family cuts it in the first
//! round, the corrected families keep `d` and the chain stays connected.

use thin3d::engine::{thin, ThinOptions};
use thin3d::verify::components::component_count;
use thin3d::verify::fixtures::fig7;
use thin3d::{build_template_set, Adjacency, Variant};

fn main() {
    let f = fig7();
    let opts = ThinOptions { record_points: true, ..ThinOptions::default() };
    for variant in Variant::ALL {
        let set = build_template_set(variant);
        let (out, report) = thin(&f.volume, &set, &opts);
        let rounds = report.passes[0].deleted_points.as_ref().unwrap();
        let mut first: Vec<char> = rounds[0].iter().filter_map(|&p| f.label_of(p)).collect();
        first.sort();
        let first: String = first.into_iter().collect();
        let kept: String = f.labels.iter().filter(|(_, p)| out.get(*p)).map(|(c, _)| *c).collect();
        println!(
            "{:>16}: round 1 deletes {{{first}}}, keeps {{{kept}}}, {} component(s)",
            variant.name(),
            component_count(&out, Adjacency::TwentySix)
        );
    }
}
