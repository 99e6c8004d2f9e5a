use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use thin3d::engine::{thin_observed, ThinOptions};
use thin3d::io::{self, Format};
use thin3d::verify::fixtures::{Axis, FixtureSpec};
use thin3d::verify::{audit_p1p2, fuzz::fuzz_with, label_components};
use thin3d::{build_template_set, Adjacency, Dims, Error, Variant};

#[derive(Parser)]
#[command(name = "thin3d", version, about = "Fully parallel 3D thinning and topology audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct VariantArg {
    /// original, corrected or corrected-errata
    #[arg(long, short, default_value = "corrected-errata")]
    variant: Variant,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Binary,
}

#[derive(Subcommand)]
enum Command {
    /// Thin a volume to its skeleton; the output uses the input's format.
    Thin {
        input: PathBuf,
        output: PathBuf,
        #[command(flatten)]
        variant: VariantArg,
        /// Print the run report as key=value lines.
        #[arg(long)]
        stats: bool,
        /// Write every round's result into this directory.
        #[arg(long, value_name = "DIR")]
        dump_iterations: Option<PathBuf>,
        #[arg(long, default_value_t = ThinOptions::default().max_passes)]
        max_passes: usize,
        /// Evaluate candidates on the thread pool.
        #[arg(long)]
        parallel: bool,
    },
    /// Count connected components and their sizes.
    Components {
        input: PathBuf,
        /// 6, 18 or 26
        #[arg(long, short, default_value = "26")]
        adjacency: Adjacency,
    },
    /// Check that every template fixes p1 or p2 to background.
    Audit {
        #[command(flatten)]
        variant: VariantArg,
        /// Print key=value lines instead of the summary.
        #[arg(long)]
        structured: bool,
    },
    /// Write a fixture volume.
    Gen {
        /// fig7, fig12, single, line, box, random, or a full spec like `box(3,4,5)`
        shape: String,
        #[arg(long, short)]
        output: PathBuf,
        /// Defaults to binary for `.bv3d` paths, text otherwise.
        #[arg(long)]
        format: Option<FormatArg>,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value = "x")]
        axis: Axis,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], default_values_t = [8, 8, 8])]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
    },
    /// Thin random volumes and report rounds that change the 26-component count.
    Fuzz {
        #[command(flatten)]
        variant: VariantArg,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], default_values_t = [8, 8, 8])]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        structured: bool,
    },
    /// Print the template table.
    DumpTemplates {
        #[command(flatten)]
        variant: VariantArg,
        /// Only this template.
        #[arg(long)]
        id: Option<String>,
    },
}

fn dims(v: &[usize]) -> Result<Dims, Error> {
    Dims::new(v[0], v[1], v[2])
}

fn format_for(path: &Path, explicit: Option<FormatArg>) -> Format {
    match explicit {
        Some(FormatArg::Text) => Format::Text,
        Some(FormatArg::Binary) => Format::Binary,
        None if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("bv3d")) => Format::Binary,
        None => Format::Text,
    }
}

fn shape_spec(shape: &str, n: usize, axis: Axis, seed: u64, d: Dims, density: f64) -> Result<FixtureSpec, Error> {
    Ok(match shape {
        "line" => FixtureSpec::Line(n, axis),
        "box" => FixtureSpec::Box(d.x, d.y, d.z),
        "random" => FixtureSpec::Random { seed, dims: d, density },
        other => other.parse()?,
    })
}

fn at(path: &Path) -> impl Fn(Error) -> String + '_ {
    move |e| format!("{}: {e}", path.display())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Thin { input, output, variant, stats, dump_iterations, max_passes, parallel } => {
            let (vol, format) = io::read_volume(&input).map_err(at(&input))?;
            let set = build_template_set(variant.variant);
            let opts = ThinOptions { max_passes, parallel, ..ThinOptions::default() };
            if let Some(dir) = &dump_iterations {
                fs::create_dir_all(dir).map_err(|e| at(dir)(e.into()))?;
            }
            let ext = match format {
                Format::Text => "txt",
                Format::Binary => "bv3d",
            };
            let mut dump_err = None;
            let (out, report) = thin_observed(&vol, &set, &opts, |ev| {
                let Some(dir) = &dump_iterations else { return };
                if ev.deleted.is_empty() || dump_err.is_some() {
                    return;
                }
                let name = format!("pass{:04}_round{:03}.{ext}", ev.pass_index, ev.round_index);
                let path = dir.join(name);
                if let Err(e) = io::write_volume(&path, ev.after, format) {
                    dump_err = Some(at(&path)(e));
                }
            });
            if let Some(e) = dump_err {
                return Err(e);
            }
            io::write_volume(&output, &out, format).map_err(at(&output))?;
            if stats {
                print!("{}", report.to_structured());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Components { input, adjacency } => {
            let (vol, _) = io::read_volume(&input).map_err(at(&input))?;
            let lab = label_components(&vol, adjacency);
            println!("components={}", lab.count);
            for s in lab.sizes() {
                println!("{s}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit { variant, structured } => {
            let report = audit_p1p2(&build_template_set(variant.variant));
            if structured {
                print!("{}", report.to_structured());
            } else {
                println!("{report}");
            }
            Ok(if report.violation_count() == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Gen { shape, output, format, n, axis, seed, dims: d, density } => {
            let fixture = dims(&d)
                .and_then(|d| shape_spec(&shape, n, axis, seed, d, density))
                .and_then(|spec| spec.build())
                .map_err(|e| e.to_string())?;
            io::write_volume(&output, &fixture.volume, format_for(&output, format)).map_err(at(&output))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fuzz { variant, trials, dims: d, density, seed, parallel, structured } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(format!("density must be in [0, 1], got {density}"));
            }
            let set = build_template_set(variant.variant);
            let report = fuzz_with(&set, trials, dims(&d).map_err(|e| e.to_string())?, density, seed, parallel);
            if structured {
                print!("{}", report.to_structured());
            } else {
                println!("{report}");
            }
            Ok(if report.is_clean() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::DumpTemplates { variant, id } => {
            let set = build_template_set(variant.variant);
            match id {
                None => print!("{}", set.dump()),
                Some(id) => {
                    let t = set
                        .get(&id)
                        .ok_or_else(|| format!("no template `{id}` in variant {}", set.variant()))?;
                    print!("{}", thin3d::templates::format_template(t));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("thin3d: {e}");
            ExitCode::from(2)
        }
    }
}
