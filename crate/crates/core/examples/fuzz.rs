//! Random-volume connectivity check with replay of the first failing round.
//!
//! cargo run --release --example fuzz -- [trials] [density] [seed]

use std::env;

use thin3d::engine::{thin_observed, ThinOptions};
use thin3d::verify::components::component_count;
use thin3d::verify::fixtures::random;
use thin3d::verify::fuzz::fuzz_with;
use thin3d::{build_template_set, Adjacency, Dims, Variant};

fn main() -> thin3d::Result<()> {
    let args: Vec<String> = env::args().skip(1).collect();
    let trials = args.first().and_then(|s| s.parse().ok()).unwrap_or(200);
    let density = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(0.2);
    let seed = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(0);
    let dims = Dims::new(8, 8, 8)?;
    let set = build_template_set(Variant::CorrectedErrata);
    let report = fuzz_with(&set, trials, dims, density, seed, true);
    println!("{report}");

    let Some(v) = report.violations.first() else { return Ok(()) };
    let vol = random(v.volume_seed, dims, density)?.volume;
    thin_observed(&vol, &set, &ThinOptions::default(), |ev| {
        if (ev.pass_index, ev.round_index) != (v.pass, v.round) {
            return;
        }
        println!("\nreplay of volume seed {} pass {} round {}:", v.volume_seed, v.pass, v.round);
        for &p in ev.deleted {
            let t = set.matches_any(ev.before, p, &thin3d::templates::TopologicalSimple).unwrap().unwrap();
            println!("  {p} deleted by {}", t.id());
        }
        println!(
            "  components {} -> {}",
            component_count(ev.before, Adjacency::TwentySix),
            component_count(ev.after, Adjacency::TwentySix)
        );
    });
    Ok(())
}
