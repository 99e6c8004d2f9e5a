//! Structural (p1, p2) audit of every template family.

use thin3d::verify::audit_p1p2;
use thin3d::{build_template_set, Variant};

fn main() {
    for variant in Variant::ALL {
        let report = audit_p1p2(&build_template_set(variant));
        println!("{report}\n");
    }
}
