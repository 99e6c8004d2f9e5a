//! Thin a volume file, or a solid box when no path is given.
//!
//! cargo run --example skeletonize -- [input] [variant]

use std::env;

use thin3d::engine::{thin, ThinOptions};
use thin3d::io;
use thin3d::verify::components::component_count;
use thin3d::verify::fixtures::solid_box;
use thin3d::{build_template_set, Adjacency, Variant};

fn main() -> thin3d::Result<()> {
    let args: Vec<String> = env::args().skip(1).collect();
    let vol = match args.first() {
        Some(path) => io::read_volume(path)?.0,
        None => solid_box(12, 8, 5)?.volume,
    };
    let variant: Variant = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(Variant::CorrectedErrata);
    let opts = ThinOptions { parallel: true, ..ThinOptions::default() };
    let (skel, report) = thin(&vol, &build_template_set(variant), &opts);
    print!("{report}");
    println!(
        "{} -> {} voxels, {} -> {} components",
        vol.object_count(),
        skel.object_count(),
        component_count(&vol, Adjacency::TwentySix),
        component_count(&skel, Adjacency::TwentySix)
    );
    print!("{}", io::to_text(&skel));
    Ok(())
}
