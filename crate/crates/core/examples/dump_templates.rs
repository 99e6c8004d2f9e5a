//! Print a template family, or selected templates.
//!
//! cargo run --example dump_templates -- corrected-errata d7-1 d7-2

use std::env;

use thin3d::templates::{format_template, TemplateClass};
use thin3d::{build_template_set, Variant};

fn main() -> thin3d::Result<()> {
    let args: Vec<String> = env::args().skip(1).collect();
    let variant: Variant = args.first().map(|s| s.parse()).transpose()?.unwrap_or(Variant::Corrected);
    let set = build_template_set(variant);
    if args.len() > 1 {
        for id in &args[1..] {
            match set.get(id) {
                Some(t) => println!("{}", format_template(t)),
                None => eprintln!("no template {id}"),
            }
        }
        return Ok(());
    }
    print!("{}", set.dump());
    let counts: Vec<String> = [TemplateClass::A, TemplateClass::B, TemplateClass::C, TemplateClass::D]
        .iter()
        .map(|&c| format!("{c}={}", set.count_class(c)))
        .collect();
    eprintln!("{variant}: {} templates ({})", set.len(), counts.join(" "));
    Ok(())
}
