//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 numerical failure, 3 property
//! violation (verify subcommands only).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bands::{self, Band};
use crate::carleson::{self, DiscreteMeasure, TestingWeight};
use crate::cnp;
use crate::error::{Error, Result};
use crate::hankel::{self, HankelOperator};
use crate::io;
use crate::kernels::{self, DiskPoint, DEFAULT_TAIL_TOL};
use crate::matrix;
use crate::spaces::{CoefficientFunction, NormEvaluator, NormVariant, Space, SpaceSpec};
use crate::weights::{self, RatioRange};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dspaces", version, about = "Weights, norms, kernels and Carleson tests for the spaces D_d and HS_d")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output layout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a_d(k) for k = 0..=kmax.
    Weights {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 20)]
        kmax: usize,
        /// Add the exact rational value (kmax ≤ 64).
        #[arg(long)]
        exact: bool,
    },
    /// Check one of the comparison claims and exit 3 if it fails.
    #[command(subcommand)]
    Verify(Verify),
    /// Norm of a polynomial read from a `k,re,im` file.
    Norm {
        #[arg(long)]
        space: Space,
        #[arg(long, default_value_t = NormVariant::Coeff)]
        variant: NormVariant,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        input: PathBuf,
        /// Relative quadrature tolerance for the area variant.
        #[arg(long, default_value_t = weights::DEFAULT_REL_TOL)]
        tol: f64,
    },
    /// Gram matrix of kernel functions at points read from a `re,im` file.
    Gram {
        #[arg(long, default_value_t = Space::Dd)]
        space: Space,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        input: PathBuf,
        /// Certified truncation error per entry.
        #[arg(long, default_value_t = DEFAULT_TAIL_TOL)]
        tol: f64,
    },
    /// Hilbert–Schmidt norm of the Hankel-type operators with a symbol file.
    Hankel {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        symbol: PathBuf,
        /// Restrict the matrix evaluation to one operator.
        #[arg(long)]
        operator: Option<HankelOperator>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// CNP coefficients and their log-convexity.
    Cnp {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 20)]
        nmax: usize,
    },
    /// Pick matrix of the CNP kernel and its positive semidefiniteness.
    Pick {
        #[arg(long)]
        d: u32,
        /// Interpolation nodes, `re,im`.
        #[arg(long)]
        nodes: PathBuf,
        /// Target values, `re,im`.
        #[arg(long)]
        targets: PathBuf,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Single-box testing ratios for a measure read from a `re,im,mass` file.
    Carleson {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        input: PathBuf,
        /// Box vertices, `re,im`. Defaults to dyadic vertices below each atom.
        #[arg(long)]
        vertices: Option<PathBuf>,
        #[arg(long, default_value_t = 256)]
        grid: usize,
        /// Test against HS_d instead of D_d.
        #[arg(long)]
        dual: bool,
    },
    /// Lower bound for the D_d embedding constant of a measure.
    Embed {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 60)]
        degree: usize,
    },
    /// Emit `index,ratio` rows for plotting.
    Emit {
        kind: EmitKind,
        #[arg(long, default_value_t = 2)]
        d: u32,
        /// Sweep length; each kind has its own default.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitKind {
    Lemma1,
    Lemma2,
    Lemma3,
    NotteBand,
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// `comparison_weight/a_d` stays in its frozen band.
    Lemma1 {
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = bands::LEMMA1_KMAX)]
        kmax: usize,
    },
    /// Radial moments of `w_{d-1}` against `log^{d-1}(k+2)/(k+1)`.
    Lemma2 {
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = bands::LEMMA1_KMAX)]
        kmax: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// `∫w_d · ∫1/w_d / ε²` lies in `[1, C]`.
    Lemma3 {
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// `a_{d+1} ≥ a_d` and the `D_{d+1}` norm is at most the `D_d` norm.
    Chain {
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 1000)]
        kmax: usize,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// CNP coefficients are log-convex and comparable to `(1+log^{d-1}(n+1))/(n+1)`.
    Notte {
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = bands::NOTTE_NMAX)]
        nmax: usize,
    },
    /// Gram matrices of `k_λ` in HS_d and `k_λ^d` in D_d agree.
    Unitary {
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 5)]
        points: usize,
        #[arg(long, default_value_t = 0.8)]
        radius: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Tuple-enumeration Hankel norm equals the coefficient HS_d norm.
    Eqb {
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[command(flatten)]
        sweep: Sweep,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

/// Seeded random polynomials.
#[derive(Debug, Clone, Copy, Args)]
pub struct Sweep {
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, default_value_t = 60)]
    pub degree: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl Sweep {
    fn polynomials(&self) -> Vec<CoefficientFunction> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.samples).map(|_| CoefficientFunction::random(&mut rng, self.degree)).collect()
    }
}

/// A rendered result: labelled scalars, an optional table, and the
/// property violations found.
#[derive(Debug, Default)]
pub struct Report {
    pub fields: Vec<(String, String)>,
    pub table: Option<Table>,
    pub violations: Vec<String>,
    /// Disagreements between independent evaluations of one quantity.
    pub failures: Vec<String>,
    /// Tables only, never fields, in every format.
    pub raw_csv: bool,
}

#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    fn push<I: IntoIterator<Item = String>>(&mut self, row: I) {
        self.rows.push(row.into_iter().collect());
    }
}

impl Report {
    fn field(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.violations.push(what());
        }
    }

    fn check_band(&mut self, label: &str, range: &RatioRange, band: Option<Band>) {
        self.require(range.min > 0.0 && range.max.is_finite(), || {
            format!("{label}: ratios leave (0, ∞): [{}, {}]", range.min, range.max)
        });
        if let Some(b) = band {
            self.field("band", format!("[{}, {}]", num(b.lo), num(b.hi)));
            self.require(b.contains(range.min) && b.contains(range.max), || {
                format!("{label}: [{}, {}] leaves the frozen band [{}, {}]", range.min, range.max, b.lo, b.hi)
            });
        }
    }

    fn range(&mut self, r: &RatioRange) {
        self.field("min", num(r.min));
        self.field("argmin", r.argmin);
        self.field("max", num(r.max));
        self.field("argmax", r.argmax);
    }

    /// Writes the report in the chosen layout.
    pub fn render(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        if format == Format::Csv || self.raw_csv {
            let mut wtr = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            if let Some(t) = &self.table {
                wtr.write_record(&t.header)?;
                for row in &t.rows {
                    wtr.write_record(row)?;
                }
            } else {
                wtr.write_record(["key", "value"])?;
                for (k, v) in &self.fields {
                    wtr.write_record([k, v])?;
                }
            }
            wtr.flush()?;
            return Ok(());
        }
        for (k, v) in &self.fields {
            writeln!(out, "{k}: {v}")?;
        }
        if let Some(t) = &self.table {
            let mut widths: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
            for row in &t.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
            };
            writeln!(out, "{}", line(&t.header))?;
            for row in &t.rows {
                writeln!(out, "{}", line(row))?;
            }
        }
        for v in &self.violations {
            writeln!(out, "violation: {v}")?;
        }
        Ok(())
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::File::create(path).and_then(|f| {
            let mut f = std::io::BufWriter::new(f);
            report.render(cli.format, &mut f)?;
            f.flush()
        }),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            report.render(cli.format, &mut lock).and_then(|_| lock.flush())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return EXIT_INPUT;
    }
    for v in &report.failures {
        eprintln!("error: {v}");
    }
    for v in &report.violations {
        eprintln!("violation: {v}");
    }
    if !report.failures.is_empty() {
        EXIT_NUMERICAL
    } else if !report.violations.is_empty() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_INPUT
    }
}

/// Executes one subcommand.
pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Weights { d, kmax, exact } => run_weights(*d, *kmax, *exact),
        Command::Verify(v) => run_verify(v),
        Command::Norm { space, variant, d, input, tol } => {
            let f = io::read_path(input, io::read_coefficients)?;
            let mut eval = NormEvaluator::with_tolerance(SpaceSpec::new(*d, *space, *variant)?, *tol);
            let mut r = Report::default();
            r.field("space", space);
            r.field("variant", variant);
            r.field("d", d);
            r.field("norm", num(eval.norm(&f)?));
            Ok(r)
        }
        Command::Gram { space, d, input, tol } => run_gram(*space, *d, input, *tol),
        Command::Hankel { d, symbol, operator, tol } => run_hankel(*d, symbol, *operator, *tol),
        Command::Cnp { d, nmax } => {
            let seq = cnp::cnp_coefficients(*d, *nmax)?;
            let mut r = Report::default();
            r.field("d", d);
            r.field("threshold", num(seq.threshold()));
            r.field("log-convex", convexity_label(cnp::check_log_convexity(seq.values())?));
            let mut t = Table::new(&["n", "a_n"]);
            for (n, a) in seq.values().iter().enumerate() {
                t.push([n.to_string(), num(*a)]);
            }
            r.table = Some(t);
            Ok(r)
        }
        Command::Pick { d, nodes, targets, tol } => {
            let z = io::read_path(nodes, io::read_points)?;
            let w = io::read_path(targets, io::read_complex)?;
            let seq = cnp::cnp_coefficients(*d, 0)?;
            let m = cnp::pick_matrix(&z, &w, &seq, DEFAULT_TAIL_TOL)?;
            let psd = matrix::psd_check(&m, *tol);
            let mut r = Report::default();
            r.field("dim", m.dim());
            r.field("psd", if psd.is_psd { "yes" } else { "no" });
            r.field("min-pivot", num(psd.min_pivot));
            if let Some(w) = psd.witness {
                r.field("witness-step", w);
            }
            Ok(r)
        }
        Command::Carleson { d, input, vertices, grid, dual } => {
            run_carleson(*d, input, vertices.as_deref(), *grid, *dual)
        }
        Command::Embed { d, input, degree } => {
            let mu = io::read_path(input, io::read_measure)?;
            let mut r = Report::default();
            r.field("d", d);
            r.field("degree", degree);
            r.field("embedding-constant-lower-bound", num(carleson::embedding_constant(&mu, *d, *degree)?));
            Ok(r)
        }
        Command::Emit { kind, d, kmax, tol } => run_emit(*kind, *d, *kmax, *tol),
    }
}

/// Shortest round-trip form, in exponent notation outside `[1e-4, 1e16)`.
pub fn num(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && a.is_finite() && !(1e-4..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

fn convexity_label(first_failure: Option<usize>) -> String {
    match first_failure {
        None => "pass".into(),
        Some(n) => format!("fail at n = {n}"),
    }
}

fn run_weights(d: u32, kmax: usize, exact: bool) -> Result<Report> {
    let a = weights::compute_weights(d, kmax)?;
    let exact_values = if exact { Some(weights::compute_weights_exact(d, kmax)?) } else { None };
    let mut t = Table::new(if exact { &["k", "a_d", "exact"] } else { &["k", "a_d"] });
    for (k, v) in a.values().iter().enumerate() {
        let mut row = vec![k.to_string(), num(*v)];
        if let Some(ex) = &exact_values {
            row.push(ex[k].to_string());
        }
        t.push(row);
    }
    Ok(Report { table: Some(t), ..Report::default() })
}

fn run_gram(space: Space, d: u32, input: &Path, tol: f64) -> Result<Report> {
    let points = io::read_path(input, io::read_points)?;
    let g = kernels::gram_matrix(&points, SpaceSpec::new(d, space, NormVariant::Coeff)?, tol)?;
    let psd = matrix::psd_check(&g, 1e-12);
    let mut r = Report::default();
    r.field("space", space);
    r.field("d", d);
    r.field("psd", if psd.is_psd { "yes" } else { "no" });
    let mut t = Table::new(&["i", "j", "re", "im"]);
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let v = g.get(i, j);
            t.push([i.to_string(), j.to_string(), num(v.re), num(v.im)]);
        }
    }
    r.table = Some(t);
    Ok(r)
}

fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn run_hankel(d: u32, symbol: &Path, operator: Option<HankelOperator>, tol: f64) -> Result<Report> {
    let b = io::read_path(symbol, io::read_coefficients)?;
    let enumerated = hankel::hs_norm_hankel(&b, d)?;
    let coeff = crate::spaces::norm(SpaceSpec::new(d, Space::HSd, NormVariant::Coeff)?, &b)?;
    let ops: Vec<HankelOperator> = match operator {
        Some(op) => vec![op],
        None if d == 2 => vec![HankelOperator::Hb],
        None => vec![HankelOperator::Tb, HankelOperator::Ub],
    };
    let mut r = Report::default();
    r.field("d", d);
    r.field("hs-norm", num(enumerated));
    let mut worst = relative_gap(enumerated, coeff);
    for op in ops {
        let m = hankel::hs_norm_from_matrix(op, &b, d)?;
        r.field(&format!("{op}-matrix-norm"), num(m));
        worst = worst.max(relative_gap(enumerated, m));
    }
    if worst > tol {
        r.field("identity-check", format!("fail (relative gap {worst:e})"));
        r.failures.push(format!("hankel: evaluations disagree by {worst:e}"));
        return Ok(r);
    }
    r.field("identity-check", "pass");
    Ok(r)
}

/// Dyadic vertices `(1-2^{-j}) p/|p|` strictly inside each atom's circle.
fn default_vertices(mu: &DiscreteMeasure) -> Result<Vec<DiskPoint>> {
    let mut out = Vec::new();
    for (p, _) in mu.atoms() {
        let r = p.modulus();
        if r < carleson::MIN_VERTEX_MODULUS {
            continue;
        }
        let u = p.value() / r;
        let mut j = 1;
        while 1.0 - 2f64.powi(-j) < r {
            out.push(DiskPoint::new(u * (1.0 - 2f64.powi(-j)))?);
            j += 1;
        }
    }
    Ok(out)
}

fn run_carleson(d: u32, input: &Path, vertices: Option<&Path>, grid: usize, dual: bool) -> Result<Report> {
    let mu = io::read_path(input, io::read_measure)?;
    let mut r = Report::default();
    r.field("d", d);
    r.field("space", if dual { "hsd" } else { "dd" });
    if dual && d >= 3 {
        r.field("carleson", "yes: the HS_d kernel is continuous for d >= 3, so every finite measure is Carleson");
        return Ok(r);
    }
    let vs = match vertices {
        Some(path) => io::read_path(path, io::read_points)?,
        None => default_vertices(&mu)?,
    };
    let weight = if dual { TestingWeight::HSd(d) } else { TestingWeight::Dd(d) };
    let report = carleson::carleson_report_weighted(&mu, weight, &vs, grid)?;
    r.field("vertices", report.rows.len());
    r.field("max-ratio", num(report.max_ratio));
    let mut t = Table::new(&["re", "im", "box_mass", "lhs", "ratio"]);
    for row in &report.rows {
        let v = row.vertex.value();
        t.push([num(v.re), num(v.im), num(row.box_mass), num(row.lhs), row.ratio.map_or_else(String::new, num)]);
    }
    r.table = Some(t);
    Ok(r)
}

/// The CNP ratio `a_n (n+1) / (1 + log^{d-1}(n+1))`.
pub fn notte_ratios(d: u32, nmax: usize) -> Result<Vec<f64>> {
    let seq = cnp::cnp_coefficients(d, nmax)?;
    Ok(seq
        .values()
        .iter()
        .enumerate()
        .map(|(n, a)| {
            let n1 = n as f64 + 1.0;
            a * n1 / (1.0 + n1.ln().powi(d as i32 - 1))
        })
        .collect())
}

fn run_emit(kind: EmitKind, d: u32, kmax: Option<usize>, tol: f64) -> Result<Report> {
    let rows: Vec<(String, f64)> = match kind {
        EmitKind::Lemma1 => weights::lemma1_ratios(d, kmax.unwrap_or(bands::LEMMA1_KMAX))?
            .into_iter()
            .enumerate()
            .map(|(k, x)| (k.to_string(), x))
            .collect(),
        EmitKind::Lemma2 => {
            let ks = bands::lemma2_sample(d, kmax.unwrap_or(bands::LEMMA1_KMAX));
            weights::lemma2_check(d, &ks, tol)?.into_iter().map(|(k, x)| (k.to_string(), x)).collect()
        }
        EmitKind::Lemma3 => weights::lemma3_b2_check(d, &bands::lemma3_epsilons(), tol)?
            .into_iter()
            .enumerate()
            .map(|(i, (_, x))| ((i + 1).to_string(), x))
            .collect(),
        EmitKind::NotteBand => notte_ratios(d, kmax.unwrap_or(bands::NOTTE_NMAX))?
            .into_iter()
            .enumerate()
            .map(|(n, x)| (n.to_string(), x))
            .collect(),
    };
    let mut t = Table::new(&["index", "ratio"]);
    for (i, x) in rows {
        t.push([i, num(x)]);
    }
    Ok(Report { table: Some(t), raw_csv: true, ..Report::default() })
}

fn run_verify(v: &Verify) -> Result<Report> {
    let mut r = Report::default();
    match *v {
        Verify::Lemma1 { d, kmax } => {
            let range = weights::lemma1_ratio_range(d, kmax)?;
            r.field("d", d);
            r.field("kmax", kmax);
            r.range(&range);
            let band = if kmax <= bands::LEMMA1_KMAX { bands::lookup(&bands::LEMMA1, d) } else { None };
            r.check_band("lemma1", &range, band);
        }
        Verify::Lemma2 { d, kmax, tol } => {
            let ks = bands::lemma2_sample(d, kmax);
            let vals = weights::lemma2_check(d, &ks, tol)?;
            let range = RatioRange::from_pairs(vals).ok_or_else(|| Error::InvalidParameter("empty k sample".into()))?;
            r.field("d", d);
            r.field("samples", ks.len());
            r.range(&range);
            let band = if kmax == bands::LEMMA1_KMAX { bands::lookup(&bands::LEMMA2, d) } else { None };
            r.check_band("lemma2", &range, band);
        }
        Verify::Lemma3 { d, tol } => {
            let vals = weights::lemma3_b2_check(d, &bands::lemma3_epsilons(), tol)?;
            let range = RatioRange::from_pairs(vals.iter().enumerate().map(|(i, &(_, x))| (i + 1, x)))
                .ok_or_else(|| Error::InvalidParameter("empty ε grid".into()))?;
            r.field("d", d);
            r.range(&range);
            // Cauchy–Schwarz gives ratio ≥ 1 exactly; allow the quadrature error.
            r.require(range.min >= 1.0 - 10.0 * tol, || format!("lemma3: ratio {} below 1", range.min));
            if let Some(&c) = (d as usize).checked_sub(1).and_then(|i| bands::LEMMA3_UPPER.get(i)) {
                r.field("upper", num(c));
                r.require(range.max <= c, || format!("lemma3: ratio {} above {c}", range.max));
            }
        }
        Verify::Chain { d, kmax, sweep } => verify_chain(&mut r, d, kmax, sweep)?,
        Verify::Notte { d, nmax } => {
            let seq = cnp::cnp_coefficients(d, nmax)?;
            let convex = cnp::check_log_convexity(seq.values())?;
            let range = RatioRange::from_pairs(notte_ratios(d, nmax)?.into_iter().enumerate())
                .ok_or_else(|| Error::InvalidParameter("empty sequence".into()))?;
            r.field("d", d);
            r.field("threshold", num(seq.threshold()));
            r.field("log-convex", convexity_label(convex));
            r.range(&range);
            r.require(convex.is_none(), || format!("notte: log-convexity fails at n = {}", convex.unwrap_or(0)));
            let band = if nmax <= bands::NOTTE_NMAX { bands::lookup(&bands::NOTTE, d) } else { None };
            r.check_band("notte", &range, band);
        }
        Verify::Unitary { d, points, radius, seed, tol } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pts: Vec<DiskPoint> = Vec::with_capacity(points);
            while pts.len() < points {
                let p = DiskPoint::random(&mut rng, radius)?;
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
            let check = kernels::verify_unitary(&pts, d, tol)?;
            r.field("d", d);
            r.field("points", points);
            r.field("max-deviation", num(check.max_deviation));
            r.field("tail-tol", num(check.tail_tol));
            r.require(check.passes(tol), || format!("unitary: Gram deviation {} exceeds {tol}", check.max_deviation));
        }
        Verify::Eqb { d, sweep, tol } => {
            let mut eval = NormEvaluator::new(SpaceSpec::new(d, Space::HSd, NormVariant::Coeff)?);
            let mut worst: f64 = 0.0;
            for b in sweep.polynomials() {
                let enumerated = hankel::hs_norm_hankel(&b, d)?;
                worst = worst.max(relative_gap(enumerated, eval.norm(&b)?));
            }
            r.field("d", d);
            r.field("samples", sweep.samples);
            r.field("max-relative-gap", num(worst));
            r.require(worst <= tol, || format!("eqb: relative gap {worst} exceeds {tol}"));
        }
    }
    r.field("status", if r.violations.is_empty() { "pass" } else { "fail" });
    Ok(r)
}

fn verify_chain(r: &mut Report, d: u32, kmax: usize, sweep: Sweep) -> Result<()> {
    let lo = weights::compute_weights(d, kmax)?;
    let hi = weights::compute_weights(d + 1, kmax)?;
    let bad = (0..=kmax).find(|&k| hi[k] < lo[k]);
    r.require(bad.is_none(), || format!("chain: a_{}({}) < a_{d}", d + 1, bad.unwrap_or(0)));
    let exact_k = kmax.min(weights::EXACT_KMAX);
    let lo_x = weights::compute_weights_exact(d, exact_k)?;
    let hi_x = weights::compute_weights_exact(d + 1, exact_k)?;
    let bad_x = (0..=exact_k).find(|&k| hi_x[k] < lo_x[k]);
    r.require(bad_x.is_none(), || format!("chain: exact a_{}({}) < a_{d}", d + 1, bad_x.unwrap_or(0)));

    let mut small = NormEvaluator::new(SpaceSpec::new(d + 1, Space::Dd, NormVariant::Coeff)?);
    let mut big = NormEvaluator::new(SpaceSpec::new(d, Space::Dd, NormVariant::Coeff)?);
    let mut worst: f64 = 0.0;
    for f in sweep.polynomials() {
        let (a, b) = (small.norm(&f)?, big.norm(&f)?);
        if b > 0.0 {
            worst = worst.max(a / b);
        }
    }
    r.field("d", d);
    r.field("kmax", kmax);
    r.field("samples", sweep.samples);
    r.field("max-norm-ratio", num(worst));
    r.require(worst <= 1.0 + 4.0 * f64::EPSILON, || format!("chain: norm ratio {worst} exceeds 1"));
    Ok(())
}
