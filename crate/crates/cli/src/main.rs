//! `tnn`: exact Toeplitz, Schur and Hessian computations for bivariate
//! forms, and the verification suite.
//!
//! Every subcommand writes JSON to stdout unless `--pretty` asks for a
//! human-readable rendering. Exit codes: 0 on success, 1 on usage or input
//! errors, 2 when a cross-check finds a property violation.

use std::fmt::Write as _;
use std::io::{Read as _, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use tnn_core::corpus::{self, CorpusSpec, Family};
use tnn_core::expansion::{alpha_statistic, expand_minor};
use tnn_core::hessian::{
    enumerate_path_systems, m_polynomial, mixed_hessian_permuted, plucker_determinant, plucker_terms,
    specialize_path_minor,
};
use tnn_core::lorentzian::lorentzian_chain_with;
use tnn_core::poly::order_at_zero;
use tnn_core::schur::{jacobi_trudi_eval, schur_eval, EvaluationPoint};
use tnn_core::tableau::{enumerate_lr_tableaux, lr_expansion};
use tnn_core::{verify, BivariateForm, Error, FormSpec, IndexSet, Partition, Rational, SkewShape, ToeplitzMatrix};

/// Environment variable that may override the worker-thread count.
const THREADS_ENV: &str = "TNN_THREADS";

#[derive(Parser)]
#[command(
    name = "tnn",
    version,
    about = "Exact total-nonnegativity, Schur and mixed-Hessian computations for bivariate forms",
    after_help = "Forms are given as JSON, either {\"degree\": 2, \"coeffs\": [\"1\", \"0\", \"1\"]} \
with normalized coefficients c_k of F = sum binom(d,k) c_k X^k Y^(d-k), or factored as \
{\"roots\": [\"1\", \"2\"], \"extra_x\": 0, \"extra_y\": 0}.\n\n\
Examples:\n  \
tnn classify --coeffs 1,0,1 --cross-check\n  \
tnn toeplitz --coeffs 1,2,3,2,1 --i 1 --pretty\n  \
tnn lr --outer 7,7,6 --inner 5,2,1 --ascii\n  \
echo '{\"roots\":[\"1\",\"2\",\"3\",\"4\"]}' | tnn hessian --input - --r 1 --i 2 --t 1/2\n  \
tnn verify-suite --paper-examples --seed 7\n\n\
Exit codes: 0 success, 1 usage or input error, 2 property violation."
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Include ASCII diagrams (tableaux, path systems) where available.
    #[arg(long, global = true)]
    ascii: bool,

    /// Worker threads for parallel checks (overrides TNN_THREADS).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FormInput {
    /// Read the form JSON from FILE, or from stdin when FILE is `-`.
    #[arg(long, value_name = "FILE|-", group = "form_source")]
    input: Option<PathBuf>,

    /// The form JSON inline.
    #[arg(long, value_name = "JSON", group = "form_source")]
    form: Option<String>,

    /// Normalized coefficients c_0,…,c_d as a comma list of rationals.
    #[arg(long, value_name = "C0,C1,…", group = "form_source", allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a form as i-Lorentzian for every 0 <= i <= d/2.
    #[command(after_help = "Example: tnn classify --coeffs 1,0,1 --cross-check")]
    Classify {
        #[command(flatten)]
        form: FormInput,
        /// Also decide strong total nonnegativity and mixed HRR and fail
        /// with exit code 2 unless all three criteria agree.
        #[arg(long)]
        cross_check: bool,
    },
    /// Print the Toeplitz matrix phi^i of a form.
    #[command(after_help = "Example: tnn toeplitz --coeffs 1,2,3,2,1 --i 2 --pretty")]
    Toeplitz {
        #[command(flatten)]
        form: FormInput,
        #[arg(long)]
        i: usize,
    },
    /// Expand a minor of phi^i into maximal minors of phi^r.
    #[command(after_help = "Example: tnn minor-expand --coeffs 0,1,3,2,5,1,4,2,6,1 --i 4 --rows 0,2,4 --cols 0,2,4")]
    MinorExpand {
        #[command(flatten)]
        form: FormInput,
        #[arg(long)]
        i: usize,
        /// Expected r = |I| - 1; checked if given.
        #[arg(long)]
        r: Option<usize>,
        /// Row indices I, comma separated.
        #[arg(long)]
        rows: String,
        /// Column indices J, comma separated.
        #[arg(long)]
        cols: String,
    },
    /// Littlewood–Richardson tableaux of a skew shape.
    #[command(after_help = "Example: tnn lr --outer 7,7,6 --inner 5,2,1 --ascii")]
    Lr {
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
    },
    /// Evaluate a skew Schur function at a point.
    #[command(after_help = "Example: tnn schur --outer 3,2 --inner 1 --point 1,2,1/3 --mode both")]
    Schur {
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        /// Variable values, comma separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum, default_value_t = SchurMode::Both)]
        mode: SchurMode,
    },
    /// Mixed Hessian of a form and its lattice-path expansion.
    #[command(after_help = "Example: tnn hessian --form '{\"roots\":[\"1\",\"2\",\"3\",\"4\",\"5\",\"6\"]}' --r 2 --i 3 --t 1/2 --ascii")]
    Hessian {
        #[command(flatten)]
        form: FormInput,
        #[arg(long)]
        r: usize,
        /// Specialize Y_1..Y_(i-r) to t and every other variable to 1.
        #[arg(long)]
        i: Option<usize>,
        /// Evaluate the specialized determinant at t (needs --i).
        #[arg(long, requires = "i")]
        t: Option<Rational>,
    },
    /// Emit the seeded fixture corpus.
    #[command(after_help = "Example: tnn corpus --seed 1 --max-degree 6 --families monomial-multiples")]
    Corpus {
        #[arg(long, default_value_t = CorpusSpec::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = CorpusSpec::default().min_degree)]
        min_degree: usize,
        #[arg(long, default_value_t = CorpusSpec::default().max_degree)]
        max_degree: usize,
        /// Comma-separated family names; all families by default.
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        #[arg(long, default_value_t = CorpusSpec::default().per_family)]
        per_family: usize,
    },
    /// Run the acceptance checks.
    #[command(after_help = "Example: tnn verify-suite --paper-examples --seed 20240601")]
    VerifySuite {
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
        /// Also replay the worked examples row by row.
        #[arg(long)]
        paper_examples: bool,
        /// Record wall time per check (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchurMode {
    Tableaux,
    JacobiTrudi,
    Both,
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::PropertyViolation(_)) { 2 } else { 1 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

/// Successful output: the JSON value and its human-readable rendering.
/// `violation` carries a cross-check failure to report after printing.
struct Output {
    json: Value,
    text: String,
    violation: Option<String>,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, violation: None }
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("core types serialize")
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(format!("bad {what} {t:?}"))))
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

fn parse_index_set(s: &str) -> Result<IndexSet, Failure> {
    Ok(IndexSet::new(parse_list(s.trim_matches(|c| c == '{' || c == '}'), "index")?)?)
}

impl FormInput {
    fn read(&self) -> Result<BivariateForm, Failure> {
        let text = match (&self.input, &self.form, &self.coeffs) {
            (_, _, Some(list)) => {
                let coeffs: Vec<Rational> = parse_list(list, "coefficient")?;
                if coeffs.is_empty() {
                    return Err(usage("--coeffs needs at least one coefficient"));
                }
                return Ok(BivariateForm::new(coeffs)?);
            }
            (_, Some(json), _) => json.clone(),
            (Some(path), _, _) if path.as_os_str() == "-" => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| usage(format!("reading stdin: {e}")))?;
                buf
            }
            (Some(path), _, _) => std::fs::read_to_string(path)
                .map_err(|e| usage(format!("reading {}: {e}", path.display())))?,
            (None, None, None) => return Err(usage("a form is required: use --input, --form or --coeffs")),
        };
        let spec: FormSpec = serde_json::from_str(&text).map_err(|e| usage(format!("invalid form JSON: {e}")))?;
        Ok(spec.into_form()?)
    }
}

fn classify(form: &BivariateForm, cross_check: bool) -> Result<Output, Failure> {
    let report = lorentzian_chain_with(form, cross_check)?;
    let mut text = String::new();
    let _ = writeln!(text, "form {form}, degree {}, Sperner number {}", report.degree, report.sperner);
    for v in &report.verdicts {
        let _ = write!(text, "  i = {}: {}", v.i, if v.lorentzian { "Lorentzian" } else { "not Lorentzian" });
        if let Some(w) = &v.negative_minor {
            let _ = write!(text, " (minor {} x {} = {})", w.rows, w.cols, w.value);
        }
        text.push('\n');
    }
    let max = report
        .max_lorentzian_index
        .map_or_else(|| "none".to_string(), |i| i.to_string());
    let _ = writeln!(text, "max Lorentzian index: {max}");
    let _ = writeln!(text, "normally stable: {}", report.normally_stable);
    Ok(Output::new(to_json(&report), text))
}

fn toeplitz(form: &BivariateForm, i: usize) -> Result<Output, Failure> {
    let t = ToeplitzMatrix::build(form, i)?;
    let rows: Vec<Vec<String>> = (0..t.nrows())
        .map(|p| (0..t.ncols()).map(|q| t.entry(p, q).to_string()).collect())
        .collect();
    Ok(Output::new(json!({ "i": i, "d": form.degree(), "rows": rows }), t.to_string()))
}

fn minor_expand(
    form: &BivariateForm,
    i: usize,
    r: Option<usize>,
    rows: &str,
    cols: &str,
) -> Result<Output, Failure> {
    let rows = parse_index_set(rows)?;
    let cols = parse_index_set(cols)?;
    if let Some(r) = r {
        if rows.len() != r + 1 {
            return Err(usage(format!("--r {r} needs {} rows, got {}", r + 1, rows.len())));
        }
    }
    let e = expand_minor(form, i, &rows, &cols)?;
    let mut text = String::new();
    let _ = writeln!(text, "minor {rows} x {cols} of phi^{i} = {}", e.lhs);
    let _ = writeln!(text, "shape {}, r = {}, a = {}", e.shape.skew_shape(), e.shape.r, e.shape.a);
    let _ = writeln!(text, "{:>6}  {:<16} {:<14} {:>5}  minor", "coeff", "nu", "K", "alpha");
    for t in &e.terms {
        let _ = writeln!(
            text,
            "{:>6}  {:<16} {:<14} {:>5}  {}",
            t.coefficient,
            t.nu.to_string(),
            t.k.to_string(),
            t.alpha,
            t.minor
        );
    }
    let _ = writeln!(text, "sum = {}", e.rhs);
    Ok(Output::new(to_json(&e), text))
}

/// The skew diagram with `#` for boxes and `.` for removed cells.
fn render_shape(shape: &SkewShape) -> String {
    let mut out = String::new();
    for p in 0..shape.num_rows() {
        let cells: Vec<&str> = (0..shape.outer().part(p))
            .map(|c| if shape.contains(p, c) { "#" } else { "." })
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn lr(outer: &str, inner: &str, ascii: bool) -> Result<Output, Failure> {
    let shape = SkewShape::new(parse_partition(outer)?, parse_partition(inner)?)?;
    let tableaux = enumerate_lr_tableaux(&shape);
    let coefficients: Vec<Value> = lr_expansion(&shape)
        .into_iter()
        .map(|(nu, c)| json!({ "nu": nu, "coefficient": c }))
        .collect();
    let mut listed = Vec::new();
    let mut text = format!("{} tableaux of shape {shape}\n", tableaux.len());
    if ascii {
        text.push('\n');
        text.push_str(&render_shape(&shape));
    }
    for (n, t) in tableaux.iter().enumerate() {
        let mut entry = json!({ "rows": to_json(t)["rows"], "content": t.content() });
        if ascii {
            entry["ascii"] = json!(t.render());
        }
        listed.push(entry);
        let _ = writeln!(text, "\ntableau {} with content {:?}", n + 1, t.content());
        text.push_str(&t.render());
    }
    text.push('\n');
    for c in &coefficients {
        let _ = writeln!(text, "c({}) = {}", c["nu"], c["coefficient"]);
    }
    let mut json = json!({
        "outer": shape.outer(),
        "inner": shape.inner(),
        "count": tableaux.len(),
        "tableaux": listed,
        "coefficients": coefficients,
    });
    if ascii {
        json["diagram"] = json!(render_shape(&shape));
    }
    Ok(Output::new(json, text))
}

fn schur(outer: &str, inner: &str, point: &str, mode: SchurMode) -> Result<Output, Failure> {
    let shape = SkewShape::new(parse_partition(outer)?, parse_partition(inner)?)?;
    let point = EvaluationPoint::new(parse_list(point, "value")?)?;
    let tableaux = (mode != SchurMode::JacobiTrudi).then(|| schur_eval(&shape, &point));
    let jt = (mode != SchurMode::Tableaux).then(|| jacobi_trudi_eval(&shape, &point));
    let mut json = json!({ "outer": shape.outer(), "inner": shape.inner(), "point": point.values() });
    let mut text = format!("s_{shape} at {:?}\n", point.values().iter().map(ToString::to_string).collect::<Vec<_>>());
    if let Some(v) = &tableaux {
        json["tableaux"] = to_json(v);
        let _ = writeln!(text, "tableau sum:   {v}");
    }
    if let Some(v) = &jt {
        json["jacobi_trudi"] = to_json(v);
        let _ = writeln!(text, "Jacobi-Trudi:  {v}");
    }
    let mut out = Output::new(json, text);
    if let (Some(a), Some(b)) = (&tableaux, &jt) {
        out.json["agree"] = json!(a == b);
        if a != b {
            out.violation = Some(format!("tableau sum {a} differs from Jacobi-Trudi determinant {b}"));
        }
    }
    Ok(out)
}

fn hessian(
    form: &BivariateForm,
    r: usize,
    i: Option<usize>,
    t: Option<Rational>,
    ascii: bool,
) -> Result<Output, Failure> {
    let d = form.degree();
    let matrix = mixed_hessian_permuted(form, r)?;
    let determinant = plucker_determinant(form, r)?;
    let terms = plucker_terms(form, r)?;
    let mut text = format!("mixed Hessian of order {} for {form}\n", r + 1);
    for row in &matrix {
        let cells: Vec<String> = row.iter().map(|p| format!("[{p}]")).collect();
        let _ = writeln!(text, "  {}", cells.join("  "));
    }
    let _ = writeln!(text, "determinant = {determinant}\n");
    let width = terms.iter().map(|t| t.minor.to_string().len()).max().unwrap_or(0).max(5);
    let alpha_header = if i.is_some() { format!("{:>6}", "alpha") } else { String::new() };
    let _ = writeln!(text, "{:<14} {:<width$}{alpha_header}  path minor", "K", "minor");
    let mut table = Vec::new();
    for term in &terms {
        let mut row = json!({ "k": term.k, "minor": term.minor, "path_minor": term.path_minor });
        let mut alpha_cell = String::new();
        if let Some(i) = i {
            let alpha = alpha_statistic(&term.k, i, r);
            let spec = specialize_path_minor(&term.k, r, i, d)?;
            row["alpha"] = json!(alpha);
            row["specialized"] = to_json(&spec);
            alpha_cell = format!("{alpha:>6}");
            if !spec.is_zero() && order_at_zero(&spec)? != Some(alpha as u32) {
                return Err(Error::PropertyViolation(format!(
                    "specialized path minor for {} vanishes to the wrong order",
                    term.k
                ))
                .into());
            }
        }
        if ascii {
            let systems = enumerate_path_systems(&term.k, r, d)?;
            row["diagrams"] = json!(systems.iter().map(|s| s.render()).collect::<Vec<_>>());
        }
        let _ = writeln!(
            text,
            "{:<14} {:<width$}{alpha_cell}  {}",
            term.k.to_string(),
            term.minor.to_string(),
            term.path_minor
        );
        if ascii {
            for s in enumerate_path_systems(&term.k, r, d)? {
                for line in s.render().lines() {
                    let _ = writeln!(text, "    {line}");
                }
                text.push('\n');
            }
        }
        table.push(row);
    }
    let mut json = json!({
        "d": d,
        "r": r,
        "matrix": matrix,
        "determinant": determinant,
        "table": table,
    });
    if let Some(i) = i {
        let m = m_polynomial(form, r, i)?;
        let _ = writeln!(text, "\nspecialized determinant (i = {i}) = {m}");
        json["i"] = json!(i);
        json["specialized_determinant"] = to_json(&m);
        if let Some(t) = t {
            let value: Rational = m
                .univariate_coeffs()?
                .iter()
                .enumerate()
                .map(|(k, c)| c * &t.pow(k as u32))
                .sum();
            let _ = writeln!(text, "value at t = {t}: {value}");
            json["t"] = to_json(&t);
            json["value"] = to_json(&value);
        }
    }
    Ok(Output::new(json, text))
}

fn corpus_command(spec: CorpusSpec) -> Result<Output, Failure> {
    let fixtures = corpus::generate(&spec)?;
    let mut text = String::new();
    for f in &fixtures {
        let _ = writeln!(text, "{:<36} d = {:<2} {}", f.id, f.form.degree(), f.form);
    }
    Ok(Output::new(to_json(&fixtures), text))
}

fn verify_suite(seed: u64, paper_examples: bool, timings: bool) -> Result<Output, Failure> {
    let report = verify::run(seed, paper_examples, timings);
    let mut text = String::new();
    for c in &report.checks {
        let _ = writeln!(text, "{c}");
    }
    let passed = report.checks.iter().filter(|c| c.status.is_ok()).count();
    let _ = writeln!(text, "{passed} of {} checks pass (seed {seed})", report.checks.len());
    let mut out = Output::new(to_json(&report), text);
    if !report.all_ok() {
        out.violation = Some(format!("{} checks did not pass", report.checks.len() - passed));
    }
    Ok(out)
}

fn configure_threads(threads: Option<usize>) -> Result<(), Failure> {
    let threads = match threads {
        Some(n) => Some(n),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => Some(v.parse().map_err(|_| usage(format!("{THREADS_ENV}={v:?} is not a count")))?),
            Err(_) => None,
        },
    };
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| usage(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Output, Failure> {
    configure_threads(cli.threads)?;
    match cli.command {
        Command::Classify { form, cross_check } => classify(&form.read()?, cross_check),
        Command::Toeplitz { form, i } => toeplitz(&form.read()?, i),
        Command::MinorExpand { form, i, r, rows, cols } => minor_expand(&form.read()?, i, r, &rows, &cols),
        Command::Lr { outer, inner } => lr(&outer, &inner, cli.ascii),
        Command::Schur { outer, inner, point, mode } => schur(&outer, &inner, &point, mode),
        Command::Hessian { form, r, i, t } => hessian(&form.read()?, r, i, t, cli.ascii),
        Command::Corpus { seed, min_degree, max_degree, families, per_family } => corpus_command(CorpusSpec {
            seed,
            min_degree,
            max_degree,
            families: if families.is_empty() { Family::ALL.to_vec() } else { families },
            per_family,
        }),
        Command::VerifySuite { seed, paper_examples, timings } => verify_suite(seed, paper_examples, timings),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let pretty = cli.pretty;
    match run(cli) {
        Ok(out) => {
            let body = if pretty {
                out.text
            } else {
                serde_json::to_string_pretty(&out.json).expect("JSON values serialize") + "\n"
            };
            // A closed pipe (e.g. `tnn ... | head`) is not an error.
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(body.as_bytes()).and_then(|()| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("tnn: writing output: {e}");
                    return ExitCode::from(1);
                }
            }
            match out.violation {
                Some(message) => {
                    eprintln!("tnn: property violation: {message}");
                    ExitCode::from(2)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("tnn: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
