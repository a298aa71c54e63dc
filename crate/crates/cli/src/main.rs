use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use zigzag_cli::analysis::{analyze, csv_report, text_report};
use zigzag_cli::{tables, verify};
use zigzag_core::error::Error;
use zigzag_core::families::{self, Family};
use zigzag_core::maps::{FlagSystem, LinsOp};
use zigzag_core::symmetry;
use zigzag_core::{hasse, ops, wythoff, Complex, FlagIndex};

/// Combinatorial complexes and their zigzag structure.
#[derive(Parser)]
#[command(name = "zigzag", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InOut {
    /// input complex in Hasse format
    #[arg(short = 'i', long)]
    input: PathBuf,
    /// output file (Hasse format)
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named complex and write it in Hasse format.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// comma-separated part sizes for type34
        #[arg(long, value_delimiter = ',')]
        partition: Option<Vec<usize>>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Validate a complex and report its zigzag structure.
    Analyze {
        #[arg(short = 'i', long)]
        input: PathBuf,
        /// comma-separated report pieces: z,int,orbits,group,validate
        #[arg(long, value_delimiter = ',', default_value = "validate,z")]
        report: Vec<String>,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        flag_cap: Option<u64>,
    },
    /// Wythoff kaleidoscope construction K(V).
    Wythoff {
        #[command(flatten)]
        io: InOut,
        /// comma-separated dimensions, e.g. 0,1,3
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
    },
    /// Order-reversed complex.
    Dual {
        #[command(flatten)]
        io: InOut,
    },
    /// Medial complex K({1}).
    Medial {
        #[command(flatten)]
        io: InOut,
    },
    /// Pyramid over the complex.
    Pyr {
        #[command(flatten)]
        io: InOut,
    },
    /// Bipyramid over the complex.
    Bpyr {
        #[command(flatten)]
        io: InOut,
    },
    /// Direct product of two complexes.
    Product {
        #[arg(short = 'i', long)]
        left: PathBuf,
        #[arg(short = 'j', long)]
        right: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Quotient by a fixed-point free involution. Families gamma, beta,
    /// dodecahedron, and icosahedron fold by their antipodal map; an input
    /// file is searched for its first such involution.
    Fold {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(short = 'i', long)]
        input: Option<PathBuf>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Special cuts of the 600-cell.
    Cut600 {
        /// number of removed vertices for class enumeration
        #[arg(long)]
        k: Option<usize>,
        /// enumerate isomorphism classes
        #[arg(long)]
        enumerate: bool,
        /// build the snub 24-cell cut
        #[arg(long)]
        snub: bool,
        /// explicit vertex ids to cut
        #[arg(long, value_delimiter = ',')]
        vertices: Option<Vec<u32>>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Flag-system (map) operations.
    Maps {
        /// one of dual, skew, phial, skew_dual, phial_dual
        #[arg(long)]
        op: Option<String>,
        /// print the vertex/face/zigzag census
        #[arg(long)]
        census: bool,
        /// input flag system (.fs)
        #[arg(short = 'i', long)]
        input: Option<PathBuf>,
        /// build the flag system of a complex (.hasse)
        #[arg(long)]
        from_complex: Option<PathBuf>,
        /// rebuild the orbit complex of a flag system
        #[arg(long)]
        to_complex: Option<PathBuf>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Run a conjecture verification suite.
    Verify {
        #[arg(long)]
        conjecture: String,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long)]
        deep: bool,
    },
    /// Reproduce a golden table and diff against the embedded values.
    Tables {
        #[arg(long)]
        table: u32,
        /// restrict to rows whose label contains any of these strings
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<String>>,
        /// include the long-running rows
        #[arg(long)]
        deep: bool,
    },
}

fn read_complex(path: &PathBuf) -> Result<Complex, Error> {
    let text = fs::read_to_string(path)?;
    hasse::read_string(&text, &path.display().to_string())
}

fn emit_complex(k: &Complex, output: Option<&PathBuf>) -> Result<(), Error> {
    let text = hasse::write_string(k);
    match output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run() -> Result<i32, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Generate {
            family,
            d,
            m,
            partition,
            output,
        } => {
            let fam = Family::from_cli(&family, d, m, partition.as_deref())?;
            let k = fam.build()?;
            emit_complex(&k, output.as_ref())?;
            Ok(0)
        }
        Command::Analyze {
            input,
            report,
            format,
            flag_cap,
        } => {
            let k = read_complex(&input)?;
            let cap = flag_cap.unwrap_or_else(zigzag_core::flag_cap_from_env);
            let pieces: Vec<&str> = report.iter().map(|s| s.as_str()).collect();
            let with_group = pieces.contains(&"group") || pieces.contains(&"orbits");
            let analysis = analyze(&k, cap, with_group)?;
            match format.as_str() {
                "csv" => print!("{}", csv_report(&analysis)),
                _ => print!("{}", text_report(&analysis, &pieces)),
            }
            Ok(0)
        }
        Command::Wythoff { io, subset } => {
            let k = read_complex(&io.input)?;
            let out = wythoff::wythoff(&k, &subset)?;
            emit_complex(&out, io.output.as_ref())?;
            Ok(0)
        }
        Command::Dual { io } => {
            let k = read_complex(&io.input)?;
            emit_complex(&k.dual(), io.output.as_ref())?;
            Ok(0)
        }
        Command::Medial { io } => {
            let k = read_complex(&io.input)?;
            emit_complex(&wythoff::medial(&k)?, io.output.as_ref())?;
            Ok(0)
        }
        Command::Pyr { io } => {
            let k = read_complex(&io.input)?;
            emit_complex(&ops::pyramid(&k), io.output.as_ref())?;
            Ok(0)
        }
        Command::Bpyr { io } => {
            let k = read_complex(&io.input)?;
            emit_complex(&ops::bipyramid(&k), io.output.as_ref())?;
            Ok(0)
        }
        Command::Product {
            left,
            right,
            output,
        } => {
            let a = read_complex(&left)?;
            let b = read_complex(&right)?;
            emit_complex(&ops::product(&a, &b), output.as_ref())?;
            Ok(0)
        }
        Command::Fold {
            family,
            d,
            input,
            output,
        } => {
            let (k, inv) = match (family.as_deref(), input) {
                (Some("gamma"), _) => families::antipodal_cube(d.ok_or_else(|| {
                    Error::ParameterOutOfRange("fold --family gamma needs --d".into())
                })?)?,
                (Some("beta"), _) => families::antipodal_cross(d.ok_or_else(|| {
                    Error::ParameterOutOfRange("fold --family beta needs --d".into())
                })?)?,
                (Some("dodecahedron"), _) => families::antipodal_dodecahedron(),
                (Some("icosahedron"), _) => families::antipodal_icosahedron(),
                (Some(other), _) => {
                    return Err(Error::ParameterOutOfRange(format!(
                        "fold has no built-in involution for family `{other}`"
                    )))
                }
                (None, Some(path)) => {
                    let k = read_complex(&path)?;
                    let inv = find_fixed_point_free_involution(&k)?;
                    (k, inv)
                }
                (None, None) => {
                    return Err(Error::ParameterOutOfRange(
                        "fold needs --family or -i".into(),
                    ))
                }
            };
            let folded = ops::quotient(&k, &inv)?;
            emit_complex(&folded, output.as_ref())?;
            Ok(0)
        }
        Command::Cut600 {
            k,
            enumerate,
            snub,
            vertices,
            output,
        } => {
            if snub {
                let cut = families::snub24()?;
                emit_complex(&cut, output.as_ref())?;
                return Ok(0);
            }
            if let Some(vs) = vertices {
                let cut = families::special_cut(&families::cell600(), &vs)?;
                emit_complex(&cut, output.as_ref())?;
                return Ok(0);
            }
            if enumerate {
                let k = k.ok_or_else(|| {
                    Error::ParameterOutOfRange("cut600 --enumerate needs --k".into())
                })?;
                let (count, reps) = symmetry::enumerate_special_cut_classes(k)?;
                println!("special cuts with {k} removed vertices: {count} classes");
                for rep in reps {
                    println!(
                        "  representative: {}",
                        rep.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                }
                return Ok(0);
            }
            Err(Error::ParameterOutOfRange(
                "cut600 needs --enumerate, --snub, or --vertices".into(),
            ))
        }
        Command::Maps {
            op,
            census,
            input,
            from_complex,
            to_complex,
            output,
        } => {
            let fs_in: Option<FlagSystem> = match (&input, &from_complex) {
                (Some(path), _) => {
                    let text = fs::read_to_string(path)?;
                    Some(FlagSystem::from_text(&text, &path.display().to_string())?)
                }
                (None, Some(path)) => Some(FlagSystem::from_complex(&read_complex(path)?)?),
                (None, None) => None,
            };
            if let Some(path) = to_complex {
                let text = fs::read_to_string(&path)?;
                let fs_sys = FlagSystem::from_text(&text, &path.display().to_string())?;
                emit_complex(&fs_sys.to_complex()?, output.as_ref())?;
                return Ok(0);
            }
            let Some(mut fs_sys) = fs_in else {
                return Err(Error::ParameterOutOfRange(
                    "maps needs -i, --from-complex, or --to-complex".into(),
                ));
            };
            if let Some(op) = op {
                fs_sys = fs_sys.lins(LinsOp::parse(&op)?);
            }
            if census {
                println!("{}", fs_sys.census());
                return Ok(0);
            }
            let text = fs_sys.to_text();
            match output {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Verify {
            conjecture,
            max,
            deep,
        } => {
            let suite = verify::run(&conjecture, max, deep)?;
            for i in &suite.instances {
                println!(
                    "{} {}: {}",
                    if i.ok { "match   " } else { "MISMATCH" },
                    i.label,
                    i.details
                );
            }
            let bad = suite.mismatches();
            println!(
                "suite {}: {}/{} match ({} ms)",
                suite.id,
                suite.instances.len() - bad,
                suite.instances.len(),
                suite.millis
            );
            Ok(if bad == 0 { 0 } else { 1 })
        }
        Command::Tables {
            table,
            subset,
            deep,
        } => {
            let outcomes = tables::run_table(table, deep, subset.as_deref())?;
            let mut bad = 0;
            for o in &outcomes {
                let status = if o.ok() { "match   " } else { "MISMATCH" };
                println!(
                    "{status} {:<32} z = {:<24} expected {:<24} ints {} ({} ms)",
                    o.label,
                    o.got_z,
                    o.expected_z,
                    if o.int_ok { "ok" } else { "DIFFER" },
                    o.millis
                );
                if !o.ok() {
                    bad += 1;
                }
            }
            println!(
                "table {}: {}/{} rows match",
                table,
                outcomes.len() - bad,
                outcomes.len()
            );
            Ok(if bad == 0 { 0 } else { 1 })
        }
    }
}

/// First (by base-flag image) automorphism that is an involution without
/// fixed elements.
fn find_fixed_point_free_involution(
    k: &Complex,
) -> Result<zigzag_core::ops::ElementInvolution, Error> {
    let fi = FlagIndex::build(k, zigzag_core::flag_cap_from_env())?;
    let group = symmetry::automorphisms(&fi);
    for &image in &group.base_images {
        if image == group.base_flag {
            continue;
        }
        let Some(map) = symmetry::flag_permutation(&fi, image) else {
            continue;
        };
        if (0..fi.len() as u32).any(|f| map[map[f as usize] as usize] != f) {
            continue;
        }
        let elems = symmetry::element_map(k, &fi, &map);
        let fixed = elems
            .iter()
            .any(|lvl| lvl.iter().enumerate().any(|(i, &j)| i as u32 == j));
        if !fixed {
            return Ok(elems);
        }
    }
    Err(Error::ParameterOutOfRange(
        "no fixed-point free involution found".into(),
    ))
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse { .. }
                | Error::ParameterOutOfRange(_)
                | Error::Unsupported(_)
                | Error::BadRingedSubset(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
