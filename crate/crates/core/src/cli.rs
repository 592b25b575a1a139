//! Command-line front end. Every command ends with one `key=value` summary
//! line on stdout; diagnostics go to stderr as a single `error:` line.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::catalog::{
    parse_catalog, parse_quandle_file, write_catalog, write_quandle_file, CatalogRecord,
};
use crate::construct::{affine_quandle, conj_quandle, Matrix};
use crate::enumerate::{classify_affine, enumerate_degree, Mode, Options};
use crate::error::{Error, Result};
use crate::library;
use crate::perm::Permutation;
use crate::quandle::{brute_force_enumerate, Quandle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

/// Largest order `oracle` will search exhaustively.
pub const ORACLE_MAX_ORDER: usize = 7;

#[derive(Parser, Debug)]
#[command(
    name = "quandle",
    version,
    about = "Finite quandles from permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a quandle table or a group catalog (records are verified).
    Validate { file: PathBuf },
    /// Print the invariants and structural flags of a quandle table.
    Analyze { file: PathBuf },
    /// Decide isomorphism of two quandle tables.
    Iso { first: PathBuf, second: PathBuf },
    /// Conjugation quandle on the class of an element of a catalog group.
    Conj {
        #[arg(long)]
        catalog: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Affine quandle x ▷ y = ψ(x − y) + y over Z_p^k.
    Affine {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: usize,
        /// Matrix rows separated by `;`, entries by `,`.
        #[arg(long, allow_hyphen_values = true)]
        psi: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quandles of one order from a catalog of transitive groups.
    Enumerate {
        #[arg(long)]
        degree: usize,
        /// A catalog file, or `@primitive`, `@quasiprimitive`, `@spot`.
        /// Repeat to merge several catalogs.
        #[arg(long, required = true)]
        catalog: Vec<String>,
        #[arg(long, default_value = "primitive")]
        mode: String,
        #[arg(long)]
        non_affine_only: bool,
        /// Directory for the report and one table file per quandle.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        no_verify_flags: bool,
        /// Enumeration bound on listed elements.
        #[arg(long)]
        max_elements: Option<u64>,
    },
    /// Exhaustive enumeration of small quandles up to isomorphism.
    Oracle {
        #[arg(long)]
        max_order: usize,
    },
    /// Regenerate the bundled catalogs into a directory.
    #[command(hide = true)]
    CatalogBuild {
        #[arg(long)]
        out: PathBuf,
    },
}

/// Runs the CLI on `args` (including the program name), writing normal
/// output to `out` and the diagnostic to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_bound() {
                EXIT_BOUND
            } else if matches!(e, Error::InvalidArgument(_)) {
                EXIT_USAGE
            } else {
                EXIT_INVALID
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Validate { file } => validate(&file, out),
        Command::Analyze { file } => {
            let q = load_quandle(&file)?;
            writeln!(out, "{}", analysis_line(&q)?)?;
            Ok(EXIT_OK)
        }
        Command::Iso { first, second } => {
            let a = load_quandle(&first)?;
            let b = load_quandle(&second)?;
            match a.isomorphism(&b) {
                Some(map) => {
                    let pairs: Vec<String> = map
                        .iter()
                        .enumerate()
                        .map(|(x, y)| format!("{}->{}", x + 1, y + 1))
                        .collect();
                    writeln!(out, "iso=yes map={}", pairs.join(","))?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "iso=no")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Conj {
            catalog,
            group,
            rep,
            out: path,
        } => {
            let records = load_catalog(&catalog)?;
            let record = records.iter().find(|r| r.label == group).ok_or_else(|| {
                Error::InvalidArgument(format!("no group {group:?} in the catalog"))
            })?;
            let g = record.group()?;
            let x = Permutation::parse(&rep, record.degree)?;
            let (q, _) = conj_quandle(&g, &x)?;
            emit_quandle(&q, path.as_deref(), out)
        }
        Command::Affine {
            p,
            k,
            psi,
            out: path,
        } => {
            let m = Matrix::parse(p, &psi)?;
            if m.dim() != k {
                return Err(Error::InvalidArgument(format!(
                    "psi is {}x{0}, expected {k}x{k}",
                    m.dim()
                )));
            }
            let q = affine_quandle(&m)?;
            emit_quandle(&q, path.as_deref(), out)
        }
        Command::Enumerate {
            degree,
            catalog,
            mode,
            non_affine_only,
            out: dir,
            jobs,
            no_verify_flags,
            max_elements,
        } => {
            let mode: Mode = mode.parse()?;
            let records = merge_catalogs(&catalog)?;
            let mut opts = Options {
                verify_flags: !no_verify_flags,
                non_affine_only,
                jobs,
                ..Options::default()
            };
            if let Some(m) = max_elements {
                opts.limits.elements = m;
            }
            let result = enumerate_degree(degree, &records, mode, &opts)?;
            let report = result.report();
            if let Some(dir) = dir {
                std::fs::create_dir_all(&dir)?;
                std::fs::write(dir.join("report.txt"), &report)?;
                for (i, e) in result.entries.iter().enumerate() {
                    let name = format!("q{}_{}.qnd", degree, i + 1);
                    std::fs::write(dir.join(name), write_quandle_file(&e.quandle))?;
                }
            }
            write!(out, "{report}")?;
            writeln!(out, "{}", result.summary_line())?;
            Ok(EXIT_OK)
        }
        Command::Oracle { max_order } => {
            if max_order > ORACLE_MAX_ORDER {
                return Err(Error::BoundExceeded {
                    what: "brute-force quandle enumeration",
                    size: max_order.to_string(),
                    bound: ORACLE_MAX_ORDER as u64,
                });
            }
            let mut total = 0;
            for n in 1..=max_order {
                let of_order = brute_force_enumerate(n, ORACLE_MAX_ORDER)?;
                let simple = of_order.iter().filter(|q| q.is_simple()).count();
                let connected = of_order.iter().filter(|q| q.is_connected()).count();
                total += of_order.len();
                writeln!(
                    out,
                    "order={n} count={} connected={connected} simple={simple}",
                    of_order.len()
                )?;
            }
            writeln!(out, "max_order={max_order} total={total}")?;
            Ok(EXIT_OK)
        }
        Command::CatalogBuild { out: dir } => {
            std::fs::create_dir_all(&dir)?;
            let sets = [
                ("primitive.cat", library::primitive_catalog()?),
                ("quasiprimitive.cat", library::quasiprimitive_catalog()?),
                ("spot.cat", library::spot_catalog()?),
            ];
            for (name, records) in &sets {
                std::fs::write(dir.join(name), write_catalog(records))?;
                writeln!(out, "file={name} records={}", records.len())?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn validate(file: &Path, out: &mut dyn Write) -> Result<i32> {
    let text = std::fs::read_to_string(file)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with("quandle") {
        let q = parse_quandle_file(&text)?;
        writeln!(out, "valid=yes kind=quandle order={}", q.order())?;
    } else {
        let records = parse_catalog(&text)?;
        for r in &records {
            r.verify(&r.group()?)?;
        }
        writeln!(out, "valid=yes kind=catalog records={}", records.len())?;
    }
    Ok(EXIT_OK)
}

/// `order= inn= dis= connected= faithful= latin= simple= primitive= quasiprimitive= affine=`.
pub fn analysis_line(q: &Quandle) -> Result<String> {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let inv = q.invariants();
    let simple = q.is_simple();
    Ok(format!(
        "order={} inn={} dis={} connected={} faithful={} latin={} simple={} primitive={} quasiprimitive={} affine={}",
        q.order(),
        inv.inn_order,
        inv.dis_order,
        yes(inv.connected),
        yes(q.is_faithful()),
        yes(q.is_latin()),
        yes(simple),
        yes(q.is_primitive()),
        yes(q.is_quasiprimitive()?),
        classify_affine(q, simple).label(),
    ))
}

fn emit_quandle(q: &Quandle, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let text = write_quandle_file(q);
    match path {
        Some(p) => std::fs::write(p, &text)?,
        None => write!(out, "{text}")?,
    }
    let inv = q.invariants();
    writeln!(
        out,
        "order={} inn={} dis={} connected={}",
        q.order(),
        inv.inn_order,
        inv.dis_order,
        if inv.connected { "yes" } else { "no" }
    )?;
    Ok(EXIT_OK)
}

fn load_quandle(path: &Path) -> Result<Quandle> {
    parse_quandle_file(&std::fs::read_to_string(path)?)
}

fn merge_catalogs(specs: &[String]) -> Result<Vec<CatalogRecord>> {
    let mut all: Vec<CatalogRecord> = Vec::new();
    let mut labels = std::collections::HashSet::new();
    for spec in specs {
        for r in load_catalog(spec)? {
            if !labels.insert(r.label.clone()) {
                return Err(Error::DuplicateLabel(r.label));
            }
            all.push(r);
        }
    }
    Ok(all)
}

/// A catalog file, or one of the bundled catalogs by `@name`.
pub fn load_catalog(spec: &str) -> Result<Vec<CatalogRecord>> {
    if spec.starts_with('@') {
        let text = library::bundled(spec)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown bundled catalog {spec:?}")))?;
        return parse_catalog(text);
    }
    parse_catalog(&std::fs::read_to_string(spec)?)
}
