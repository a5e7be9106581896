//! `omkit` — exact computations on hyperplane arrangements and oriented
//! matroids: face enumeration, axiom checking, canonical forms, catalog
//! verification, and the census of isomorphism classes.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use omkit_core::catalog;
use omkit_core::enumerate;
use omkit_core::export;
use omkit_core::geometry::RationalArrangement;
use omkit_core::io as fmtio;
use omkit_core::iso;
use omkit_core::matroid::CovectorSet;

#[derive(Parser)]
#[command(
    name = "omkit",
    about = "exact hyperplane arrangements and oriented matroids",
    version,
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the face table of an arrangement: covector, dimension,
    /// boundedness.
    Faces { input: String },
    /// Check the covector axioms of a covector file, or of the raw face
    /// covectors of an arrangement. Nonzero exit if any axiom fails.
    CheckOm { input: String },
    /// Print the canonical covector list and the certifying signed
    /// permutation. For an arrangement the coned covectors are used.
    Canon {
        input: String,
        /// Canonicalize as an affine object with this marked element
        /// (1-based). Arrangements default to their coned base element.
        #[arg(long)]
        affine: Option<usize>,
    },
    /// Decide equivalence of two arrangements or two covector sets (files
    /// or catalog names). Exit 0 when equivalent, 1 when not.
    Iso {
        first: String,
        second: String,
        /// For covector-set inputs: compare as affine objects with the last
        /// element marked. Arrangement comparison is always the affine
        /// face-poset equivalence.
        #[arg(long)]
        affine: bool,
    },
    /// Emit an arrangement from a construction family.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Print the isomorphism-invariant fingerprint of an arrangement.
    Stats { input: String },
    /// Enumerate isomorphism classes of simple oriented matroids
    /// (or affine classes with --affine).
    Enumerate {
        /// Ground-set size (elements of the oriented matroid, or affine
        /// elements with --affine).
        #[arg(long)]
        elements: usize,
        #[arg(long)]
        rank: usize,
        /// Enumerate affine classes (mark every element, deduplicate).
        #[arg(long)]
        affine: bool,
        /// Write one covector file per class into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Print the census grid of affine class counts and compare against the
    /// published constants. Nonzero exit on any mismatch.
    Census {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Write an SVG drawing of a line arrangement (d=2).
    ExportSvg {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a plain-text scene of a plane arrangement (d=3).
    ExportScene {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// n parallel hyperplanes in dimension d.
    Trivial {
        n: usize,
        #[arg(default_value_t = 3)]
        d: usize,
    },
    /// Cartesian product of a line arrangement with the z-axis.
    Product { input: String },
    /// Suspension: lift to a central arrangement one dimension up.
    Cone { input: String },
    /// Append the horizontal hyperplane to an arrangement.
    Bisect { input: String },
    /// The moment-curve general-position arrangement.
    GeneralPosition { n: usize, d: usize },
    /// Nine lines realizing the classical incidence configuration.
    Pappus,
    /// Eight planes with four forced-coplanar intersection points.
    Gp8,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Run every catalog assertion; nonzero exit if any fails.
    Verify,
    /// List the catalog entries.
    List,
    /// Print one catalog entry as an arrangement file.
    Emit { name: String },
}

/// Either a file path or a catalog entry name.
fn load_arrangement(input: &str) -> anyhow::Result<RationalArrangement> {
    if let Ok(a) = catalog::build(input) {
        return Ok(a);
    }
    let text = fs::read_to_string(input)
        .with_context(|| format!("cannot read {input:?} (not a catalog name either)"))?;
    Ok(fmtio::parse_arrangement(&text)?)
}

enum Input {
    Arrangement(RationalArrangement),
    Covectors(CovectorSet),
    Chirotope(omkit_core::Chirotope),
}

fn load_input(input: &str) -> anyhow::Result<Input> {
    if let Ok(a) = catalog::build(input) {
        return Ok(Input::Arrangement(a));
    }
    let text = fs::read_to_string(input)
        .with_context(|| format!("cannot read {input:?} (not a catalog name either)"))?;
    let head = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if head.starts_with("d=") {
        Ok(Input::Arrangement(fmtio::parse_arrangement(&text)?))
    } else if head.starts_with("n=") {
        Ok(Input::Covectors(fmtio::parse_covectors(&text)?))
    } else if head.starts_with("m=") {
        Ok(Input::Chirotope(fmtio::parse_chirotope(&text)?))
    } else {
        bail!("unrecognized input format in {input:?}: expected 'd=', 'n=' or 'm=' header");
    }
}

fn write_out(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content)?;
        }
        None => {
            print!("{content}");
            std::io::stdout().flush()?;
        }
    }
    Ok(())
}

fn cmd_faces(input: &str) -> anyhow::Result<ExitCode> {
    let a = load_arrangement(input)?;
    let faces = a.faces()?;
    println!(
        "covector{} dim bounded",
        " ".repeat(a.len().saturating_sub(8))
    );
    for f in &faces {
        println!(
            "{} {:>3} {}",
            f.covector,
            f.dimension,
            if f.bounded { "yes" } else { "no" }
        );
    }
    println!("# {} faces", faces.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_check_om(input: &str) -> anyhow::Result<ExitCode> {
    let set = match load_input(input)? {
        Input::Covectors(v) => v,
        Input::Arrangement(a) => a.face_covectors()?,
        Input::Chirotope(chi) => {
            if let Err(defect) = chi.verify_exchange() {
                println!("chirotope: FAIL ({defect})");
                return Ok(ExitCode::FAILURE);
            }
            println!("chirotope: pass");
            chi.covectors()?
        }
    };
    let report = set.check_axioms();
    print!("{report}");
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_canon(input: &str, affine: Option<usize>) -> anyhow::Result<ExitCode> {
    let (set, mark) = match load_input(input)? {
        Input::Covectors(v) => {
            let mark = affine.map(|g| g.checked_sub(1).expect("1-based index"));
            (v, mark)
        }
        Input::Arrangement(a) => {
            // arrangements are canonicalized through their cone, marked at
            // the base element unless overridden
            let n = a.len();
            let cone = a.cone();
            let mark = affine.map(|g| g - 1).unwrap_or(n);
            (cone.face_covectors()?, Some(mark))
        }
        Input::Chirotope(chi) => {
            let mark = affine.map(|g| g.checked_sub(1).expect("1-based index"));
            (chi.covectors()?, mark)
        }
    };
    let form = match mark {
        Some(g) => iso::canonicalize_affine(&set, g)?,
        None => iso::canonicalize(&set)?,
    };
    println!("{form}");
    Ok(ExitCode::SUCCESS)
}

/// First fingerprint field that differs, as a human-readable reason.
fn difference_reason(a: &iso::Fingerprint, b: &iso::Fingerprint) -> String {
    if a.rank != b.rank {
        return format!("rank differs ({} vs {})", a.rank, b.rank);
    }
    if a.faces_per_dim != b.faces_per_dim {
        return format!(
            "face counts differ ({:?} vs {:?})",
            a.faces_per_dim, b.faces_per_dim
        );
    }
    let quads = |f: &iso::Fingerprint| {
        f.bounded_chamber_shapes()
            .iter()
            .filter(|s| **s == (4, 4))
            .count()
    };
    if a.ambient_dim() == 2 && quads(a) != quads(b) {
        return format!(
            "bounded quadrilateral count differs ({} vs {})",
            quads(a),
            quads(b)
        );
    }
    if a.bounded_chamber_shapes() != b.bounded_chamber_shapes() {
        return format!(
            "bounded chamber shapes differ ({:?} vs {:?})",
            a.bounded_chamber_shapes(),
            b.bounded_chamber_shapes()
        );
    }
    if a.bounded_per_dim != b.bounded_per_dim {
        return format!(
            "bounded face counts differ ({:?} vs {:?})",
            a.bounded_per_dim, b.bounded_per_dim
        );
    }
    if (a.rays, a.segments, a.lines) != (b.rays, b.segments, b.lines) {
        return "1-face types differ".into();
    }
    if a.incidence_profile != b.incidence_profile {
        return "incidence profiles differ".into();
    }
    "no isomorphism exists".into()
}

fn cmd_iso(first: &str, second: &str, affine: bool) -> anyhow::Result<ExitCode> {
    match (load_input(first)?, load_input(second)?) {
        (Input::Arrangement(a), Input::Arrangement(b)) => {
            if iso::arrangements_equivalent(&a, &b)? {
                println!("equivalent");
                Ok(ExitCode::SUCCESS)
            } else {
                let reason = if a.len() != b.len() {
                    format!("sizes differ ({} vs {})", a.len(), b.len())
                } else if a.dim() == b.dim() {
                    difference_reason(
                        &iso::fingerprint(&a.faces()?),
                        &iso::fingerprint(&b.faces()?),
                    )
                } else {
                    "no isomorphism exists".into()
                };
                println!("not equivalent, reason: {reason}");
                Ok(ExitCode::FAILURE)
            }
        }
        (va, vb) => {
            let as_set = |input: Input| -> anyhow::Result<CovectorSet> {
                match input {
                    Input::Covectors(v) => Ok(v),
                    Input::Chirotope(chi) => Ok(chi.covectors()?),
                    Input::Arrangement(_) => {
                        bail!("cannot compare an arrangement with a covector set")
                    }
                }
            };
            let (va, vb) = (as_set(va)?, as_set(vb)?);
            let equal = if affine {
                let (ma, mb) = (va.ground_size() - 1, vb.ground_size() - 1);
                iso::affine_equivalent(&va, ma, &vb, mb)?
            } else {
                iso::covector_sets_equivalent(&va, &vb)?
            };
            if equal {
                println!("equivalent");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not equivalent, reason: canonical forms differ");
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn cmd_construct(family: Family) -> anyhow::Result<ExitCode> {
    let a = match family {
        Family::Trivial { n, d } => {
            if n == 0 || d == 0 {
                bail!("need n ≥ 1 and d ≥ 1");
            }
            let rows: Vec<(Vec<i64>, i64)> = (0..n as i64)
                .map(|k| {
                    let mut normal = vec![0i64; d];
                    normal[d - 1] = 1;
                    (normal, k)
                })
                .collect();
            let refs: Vec<(&[i64], i64)> = rows.iter().map(|(v, b)| (v.as_slice(), *b)).collect();
            RationalArrangement::from_ints(d, &refs)?
        }
        Family::Product { input } => load_arrangement(&input)?.product_with_axis()?,
        Family::Cone { input } => load_arrangement(&input)?.cone(),
        Family::Bisect { input } => load_arrangement(&input)?.bisect()?,
        Family::GeneralPosition { n, d } => RationalArrangement::general_position(n, d)?,
        Family::Pappus => omkit_core::geometry::pappus(),
        Family::Gp8 => omkit_core::geometry::goodman_pollack_8(),
    };
    print!("{}", fmtio::format_arrangement(&a));
    Ok(ExitCode::SUCCESS)
}

fn cmd_stats(input: &str) -> anyhow::Result<ExitCode> {
    let a = load_arrangement(input)?;
    let fp = iso::fingerprint(&a.faces()?);
    print!("{fp}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(
    elements: usize,
    rank: usize,
    affine: bool,
    out_dir: Option<PathBuf>,
) -> anyhow::Result<ExitCode> {
    if affine {
        let classes = enumerate::enumerate_affine(elements, rank)?;
        println!(
            "{} affine classes with n={elements}, rank {rank}",
            classes.len()
        );
        if let Some(dir) = out_dir {
            fs::create_dir_all(&dir)?;
            for (i, cls) in classes.iter().enumerate() {
                let set = cls.chirotope.covectors()?;
                let mut text = format!(
                    "# affine class {:04}, marked element {}\n",
                    i + 1,
                    cls.mark + 1
                );
                text.push_str(&fmtio::format_covectors(&set));
                fs::write(dir.join(format!("affine-{:04}.cov", i + 1)), text)?;
            }
            println!("wrote {} files to {}", classes.len(), dir.display());
        }
    } else {
        let classes = enumerate::enumerate_oms(elements, rank)?;
        println!(
            "{} simple oriented-matroid classes with m={elements}, rank {rank}",
            classes.len()
        );
        if let Some(dir) = out_dir {
            fs::create_dir_all(&dir)?;
            for (i, cls) in classes.iter().enumerate() {
                let set = cls.chirotope.covectors()?;
                let mut text = format!("# class {:04}\n", i + 1);
                text.push_str(&fmtio::format_covectors(&set));
                fs::write(dir.join(format!("om-{:04}.cov", i + 1)), text)?;
            }
            println!("wrote {} files to {}", classes.len(), dir.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_census(n: usize) -> anyhow::Result<ExitCode> {
    let table = enumerate::census_table(n)?;
    print!("{table}");
    let diff = table.diff();
    if diff.is_empty() {
        println!("census matches the published table");
        Ok(ExitCode::SUCCESS)
    } else {
        for (n, r, got, want) in diff {
            if r == 0 {
                println!("MISMATCH at n={n} total: got {got}, expected {want}");
            } else {
                println!("MISMATCH at n={n} r={r}: got {got}, expected {want}");
            }
        }
        Ok(ExitCode::FAILURE)
    }
}

fn cmd_catalog(action: CatalogAction) -> anyhow::Result<ExitCode> {
    match action {
        CatalogAction::Verify => {
            let report = catalog::verify()?;
            print!("{report}");
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        CatalogAction::List => {
            for entry in catalog::entries() {
                let a = catalog::build_entry(&entry)?;
                println!(
                    "{:28} {:14} n={} d={}",
                    entry.name,
                    entry.group,
                    a.len(),
                    a.dim()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        CatalogAction::Emit { name } => {
            let a = catalog::build(&name)?;
            print!("{}", fmtio::format_arrangement(&a));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. piping into `head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    // worker-count control for reproducibility experiments
    if let Ok(v) = std::env::var("OMKIT_WORKERS") {
        if let Ok(threads) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }

    let cli = Cli::parse();
    let result = match cli.command {
        Command::Faces { input } => cmd_faces(&input),
        Command::CheckOm { input } => cmd_check_om(&input),
        Command::Canon { input, affine } => cmd_canon(&input, affine),
        Command::Iso {
            first,
            second,
            affine,
        } => cmd_iso(&first, &second, affine),
        Command::Construct { family } => cmd_construct(family),
        Command::Stats { input } => cmd_stats(&input),
        Command::Enumerate {
            elements,
            rank,
            affine,
            out_dir,
        } => cmd_enumerate(elements, rank, affine, out_dir),
        Command::Census { n } => cmd_census(n),
        Command::Catalog { action } => cmd_catalog(action),
        Command::ExportSvg { input, out } => (|| {
            let a = load_arrangement(&input)?;
            write_out(&out, &export::to_svg(&a)?)?;
            Ok(ExitCode::SUCCESS)
        })(),
        Command::ExportScene { input, out } => (|| {
            let a = load_arrangement(&input)?;
            write_out(&out, &export::to_scene(&a)?)?;
            Ok(ExitCode::SUCCESS)
        })(),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            // parse and usage problems exit 2, everything else 1
            let msg = format!("{err:#}");
            if msg.contains("parse error") || msg.contains("unrecognized input") {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
