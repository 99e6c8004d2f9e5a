//! Build a template by hand and match it with a custom simple-point oracle.

use thin3d::templates::{matches, CellRequirement, Template, TemplateClass, TopologicalSimple};
use thin3d::verify::fixtures::fig7;
use thin3d::Point3;

fn main() {
    use CellRequirement::{Background, Object};
    // Background everywhere above, object straight below.
    let mut cells = vec![(Point3::new(0, 0, -1), Object)];
    for y in -1..=1 {
        for x in -1..=1 {
            cells.push((Point3::new(x, y, 1), Background));
        }
    }
    let top = Template::new("top", TemplateClass::A, cells, vec![], None).unwrap();

    let f = fig7();
    for (label, p) in &f.labels {
        println!("{label}: {}", matches(&top, &f.volume, *p, &TopologicalSimple).unwrap());
    }

    let d = Template::new(
        "picky",
        TemplateClass::D,
        [(Point3::new(0, 0, 1), Object)],
        vec![Point3::new(0, 0, -1)],
        Some((Point3::new(0, 0, 1), Point3::new(0, 0, -1))),
    )
    .unwrap();
    let never = |_: &thin3d::BinaryVolume, _: Point3| false;
    println!(
        "d with topological oracle: {}, with a rejecting oracle: {}",
        matches(&d, &f.volume, f.point('d'), &TopologicalSimple).unwrap(),
        matches(&d, &f.volume, f.point('d'), &never).unwrap()
    );
}
