use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tfsax::audit::{audit_lower_bound, audit_pairs, AuditReport, DEFAULT_AUDIT_PAIRS};
use tfsax::bench::bench_methods;
use tfsax::classify::{classify_1nn, doubling, grid_search, GridResult, GridSpec, Selection};
use tfsax::dataset::{default_data_dir, find_ucr_dataset, load_ucr, load_ucr_dataset};
use tfsax::report::{emit_report, write_results_csv, write_runtime_csv, EvalReport, MethodResult};
use tfsax::synthetic::{gen_cbf_split, gen_cbf_standard, random_walk_pairs};
use tfsax::words::{parse_words, render_words, WordsHeader, WORDS_MAGIC};
use tfsax::{
    reduction_ratio, ConstantMode, Dataset, Error, LoadOptions, Method, Params, Representation,
    Representer, TimeSeries,
};

const DEFAULT_SEED: u64 = 7;
const BENCHMARK_DATASETS: [&str; 5] = ["ECG200", "Two_Pattern", "Beef", "Coffee", "CBF"];

#[derive(Parser)]
#[command(
    name = "tfsax",
    version,
    about = "Trend-feature symbolic approximation of time series"
)]
struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode every series of a UCR-format file into words.
    Encode(EncodeArgs),
    /// Distances between encoded series.
    Dist(DistArgs),
    /// 1-NN classification, optionally with a parameter grid search.
    Classify(ClassifyArgs),
    /// Audit lower-bounding distances against the Euclidean distance.
    Audit(AuditArgs),
    /// Generate synthetic datasets.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time transform and classification for a range of word sizes.
    Bench(BenchArgs),
    /// Run the full comparison and write CSV tables.
    Report(ReportArgs),
}

#[derive(Args, Clone)]
struct LoadArgs {
    /// Use values as stored instead of z-normalizing each series.
    #[arg(long)]
    no_normalize: bool,
    /// Map constant series to all zeros instead of failing.
    #[arg(long)]
    zeros_on_constant: bool,
}

impl LoadArgs {
    fn options(&self) -> LoadOptions {
        LoadOptions {
            normalize: !self.no_normalize,
            constant: if self.zeros_on_constant {
                ConstantMode::Zeros
            } else {
                ConstantMode::Error
            },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Euclid,
    Sax,
    Esax,
    Saxtd,
    Tfsax,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Euclid => Method::Euclid,
            MethodArg::Sax => Method::Sax,
            MethodArg::Esax => Method::Esax,
            MethodArg::Saxtd => Method::SaxTd,
            MethodArg::Tfsax => Method::Tfsax,
        }
    }
}

#[derive(Args, Clone)]
struct WordArgs {
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Number of segments.
    #[arg(long, default_value_t = Params::default().w)]
    w: usize,
    /// Value alphabet size.
    #[arg(long, default_value_t = Params::default().alpha)]
    alpha: usize,
    /// Trend alphabet size.
    #[arg(long, default_value_t = Params::default().alpha_t)]
    alpha_t: usize,
}

impl WordArgs {
    fn params(&self) -> Params {
        Params::new(self.w, self.alpha, self.alpha_t)
    }
}

#[derive(Args)]
struct EncodeArgs {
    input: PathBuf,
    #[command(flatten)]
    word: WordArgs,
    #[command(flatten)]
    load: LoadArgs,
    /// Output file (default: stdout).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DistArgs {
    /// A words file, or a UCR-format file encoded with --method.
    input: PathBuf,
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    #[arg(long, default_value_t = Params::default().w)]
    w: usize,
    #[arg(long, default_value_t = Params::default().alpha)]
    alpha: usize,
    #[arg(long, default_value_t = Params::default().alpha_t)]
    alpha_t: usize,
    /// Only the distance between series I and J.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pair: Option<Vec<usize>>,
    #[command(flatten)]
    load: LoadArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// Dataset name looked up under the data directory; "cbf" falls back to generated data.
    #[arg(long, conflicts_with_all = ["train", "test"])]
    dataset: Option<String>,
    #[arg(long, requires = "test")]
    train: Option<PathBuf>,
    #[arg(long, requires = "train")]
    test: Option<PathBuf>,
    /// Root of UCR-format datasets (default: $TFSAX_DATA_DIR).
    #[arg(long)]
    data_dir: Option<PathBuf>,
    /// Seed for generated data and pair sampling.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    load: LoadArgs,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long, conflicts_with = "grid")]
    w: Option<usize>,
    #[arg(long, conflicts_with = "grid")]
    alpha: Option<usize>,
    #[arg(long, conflicts_with = "grid")]
    alpha_t: Option<usize>,
    /// Search w = 2, 4, ... n/2 and alpha = 3..10, reporting the best point.
    #[arg(long)]
    grid: bool,
    /// Override the grid's w axis (range syntax).
    #[arg(long, requires = "grid", value_parser = parse_range)]
    grid_w: Option<Range>,
    /// Override the grid's alpha axis (range syntax).
    #[arg(long, requires = "grid", value_parser = parse_range)]
    grid_alpha: Option<Range>,
    /// Also search alpha_t = 2..6.
    #[arg(long, requires = "grid")]
    sweep_trend_alpha: bool,
    /// Select grid points by leave-one-out error on the training split.
    #[arg(long, requires = "grid")]
    honest_selection: bool,
    /// Write every grid point to this CSV.
    #[arg(long, requires = "grid")]
    grid_csv: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Audit this many seeded random-walk pairs instead of a dataset.
    #[arg(long, conflicts_with_all = ["dataset", "train"])]
    random_walks: Option<usize>,
    /// Random-walk length.
    #[arg(long, default_value_t = 128)]
    len: usize,
    /// Word sizes (range syntax, default 2:n/2:x2).
    #[arg(long, value_parser = parse_range)]
    w: Option<Range>,
    /// Value alphabet sizes (range syntax).
    #[arg(long, value_parser = parse_range, default_value = "3:10")]
    alphas: Range,
    #[arg(long, default_value_t = Params::default().alpha_t)]
    alpha_t: usize,
    /// Upper bound on audited train x test pairs; larger sets are sampled.
    #[arg(long, default_value_t = DEFAULT_AUDIT_PAIRS)]
    max_pairs: usize,
    /// Directory for audit_records.csv and audit_summary.csv (default: summary to stdout).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenKind {
    /// Cylinder-Bell-Funnel series in UCR tab-separated format.
    Cbf {
        #[arg(long, default_value_t = 10)]
        per_class: usize,
        /// Test series per class (default: same as --per-class).
        #[arg(long)]
        test_per_class: Option<usize>,
        #[arg(long, default_value_t = 128)]
        len: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Output directory for CBF_TRAIN.tsv and CBF_TEST.tsv.
        #[arg(short, long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Methods to time (default: all).
    #[arg(long, value_enum, value_delimiter = ',')]
    method: Vec<MethodArg>,
    #[arg(long, value_parser = parse_range, default_value = "2:64:x2")]
    w: Range,
    #[arg(long, default_value_t = 10)]
    alpha: usize,
    #[arg(long, default_value_t = Params::default().alpha_t)]
    alpha_t: usize,
    /// Runs per point; the fastest is kept.
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// Datasets to evaluate; missing ones are skipped.
    #[arg(long, value_delimiter = ',', default_values_t = BENCHMARK_DATASETS.map(String::from))]
    datasets: Vec<String>,
    #[arg(long)]
    data_dir: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    sweep_trend_alpha: bool,
    #[arg(long)]
    honest_selection: bool,
    /// Also audit lower bounds at w = 32 (or n/2), alpha = 3..10.
    #[arg(long)]
    audit: bool,
    /// Also time every method at alpha = 10, w = 2..64.
    #[arg(long)]
    bench: bool,
    #[command(flatten)]
    load: LoadArgs,
    #[arg(short, long)]
    out: PathBuf,
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T = ()> = Result<T, CliError>;

/// Parsed range argument.
#[derive(Clone, Debug)]
struct Range(Vec<usize>);

/// `a`, `a,b,c`, `a:b` (step 1) or `a:b:x2` (doubling).
fn parse_range(text: &str) -> Result<Range, String> {
    parse_range_values(text).map(Range)
}

fn parse_range_values(text: &str) -> Result<Vec<usize>, String> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("not a number: {s:?}"))
    };
    if text.contains(',') {
        return text.split(',').map(num).collect();
    }
    let parts: Vec<&str> = text.split(':').collect();
    let out = match parts.as_slice() {
        [a] => vec![num(a)?],
        [a, b] => (num(a)?..=num(b)?).collect(),
        [a, b, "x2"] => {
            let start = num(a)?;
            if start == 0 {
                return Err("doubling range must start above 0".into());
            }
            doubling(start, num(b)?)
        }
        _ => return Err(format!("bad range {text:?}; expected a, a:b or a:b:x2")),
    };
    if out.is_empty() {
        return Err(format!("range {text:?} is empty"));
    }
    Ok(out)
}

fn open_output(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Error::Io {
            path: p.to_path_buf(),
            source: e,
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |e| {
        CliError::Lib(Error::Io {
            path: path.to_path_buf(),
            source: e,
        })
    }
}

fn finish(mut out: Box<dyn Write>, path: Option<&Path>) -> CliResult {
    out.flush()
        .map_err(io_err(path.unwrap_or(Path::new("<stdout>"))))
}

fn resolve_dataset(
    name: &str,
    data_dir: Option<&Path>,
    seed: u64,
    opts: LoadOptions,
) -> CliResult<Dataset> {
    let root = data_dir.map(Path::to_path_buf).or_else(default_data_dir);
    if let Some((train, test)) = root.as_deref().and_then(|r| find_ucr_dataset(r, name)) {
        return Ok(load_ucr_dataset(name, train, test, opts)?);
    }
    if name.eq_ignore_ascii_case("cbf") {
        eprintln!("note: no CBF files found; using generated CBF (seed {seed})");
        return Ok(gen_cbf_standard(seed)?);
    }
    Err(CliError::Lib(Error::Io {
        path: root.unwrap_or_default().join(name),
        source: io::Error::new(io::ErrorKind::NotFound, "dataset not found"),
    }))
}

fn load_source(src: &SourceArgs) -> CliResult<Dataset> {
    let opts = src.load.options();
    match (&src.dataset, &src.train, &src.test) {
        (Some(name), _, _) => resolve_dataset(name, src.data_dir.as_deref(), src.seed, opts),
        (None, Some(train), Some(test)) => {
            let name = train
                .file_stem()
                .map(|s| s.to_string_lossy().trim_end_matches("_TRAIN").to_string())
                .unwrap_or_else(|| "dataset".into());
            Ok(load_ucr_dataset(name, train, test, opts)?)
        }
        _ => Err(CliError::Usage(
            "give --dataset NAME or both --train and --test".into(),
        )),
    }
}

fn cmd_encode(args: EncodeArgs) -> CliResult {
    let series = load_ucr(&args.input, args.load.options())?;
    let method: Method = args.word.method.into();
    let rep = Representer::for_method(method, args.word.params())?;
    let entries = series
        .iter()
        .map(|s| Ok((s.label, rep.encode(s)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let header = WordsHeader::new(method, args.word.params(), series[0].len());
    let mut out = open_output(args.output.as_deref())?;
    let sink = args.output.clone().unwrap_or_else(|| "<stdout>".into());
    out.write_all(render_words(&header, &entries).as_bytes())
        .map_err(io_err(&sink))?;
    finish(out, args.output.as_deref())
}

fn cmd_dist(args: DistArgs) -> CliResult {
    let text = fs::read(&args.input).map_err(io_err(&args.input))?;
    let is_words = text.starts_with(format!("# {WORDS_MAGIC}").as_bytes());
    let (rep, words): (Representer, Vec<Representation>) = if is_words {
        let text = String::from_utf8_lossy(&text);
        let (header, entries) = parse_words(&text)?;
        let rep = Representer::for_method(header.method, header.params)?;
        (rep, entries.into_iter().map(|(_, r)| r).collect())
    } else {
        let method = args
            .method
            .ok_or_else(|| CliError::Usage("--method is required for series input".into()))?;
        let rep =
            Representer::for_method(method.into(), Params::new(args.w, args.alpha, args.alpha_t))?;
        let series = load_ucr(&args.input, args.load.options())?;
        let words = series
            .iter()
            .map(|s| rep.encode(s))
            .collect::<Result<_, _>>()?;
        (rep, words)
    };
    let pairs: Vec<(usize, usize)> = match &args.pair {
        Some(p) => {
            for &i in p {
                if i >= words.len() {
                    return Err(Error::InvalidArgument(format!(
                        "series index {i} out of range (file has {})",
                        words.len()
                    ))
                    .into());
                }
            }
            vec![(p[0], p[1])]
        }
        None => (0..words.len())
            .flat_map(|i| (i + 1..words.len()).map(move |j| (i, j)))
            .collect(),
    };
    let mut out = open_output(args.output.as_deref())?;
    let sink = args.output.clone().unwrap_or_else(|| "<stdout>".into());
    writeln!(out, "i,j,distance").map_err(io_err(&sink))?;
    for (i, j) in pairs {
        let d = rep.distance(&words[i], &words[j])?;
        writeln!(out, "{i},{j},{d}").map_err(io_err(&sink))?;
    }
    finish(out, args.output.as_deref())
}

fn method_result(dataset: &Dataset, method: Method, params: Params, fpr: f64) -> MethodResult {
    let n = dataset.n();
    let (params, ratio) = if method.uses_word_params() {
        (Some(params), reduction_ratio(method, params.w, n))
    } else {
        (None, reduction_ratio(method, 0, n))
    };
    MethodResult {
        dataset: dataset.name.clone(),
        method,
        params,
        n,
        ratio,
        fpr,
    }
}

fn write_grid_csv(path: &Path, dataset: &str, result: &GridResult) -> CliResult {
    let mut out = open_output(Some(path))?;
    let write = |out: &mut Box<dyn Write>| -> io::Result<()> {
        writeln!(
            out,
            "dataset,method,w,alpha,alpha_t,test_errors,test_fpr,selection_errors"
        )?;
        for p in &result.points {
            writeln!(
                out,
                "{dataset},{},{},{},{},{},{},{}",
                result.method,
                p.params.w,
                p.params.alpha,
                p.params.alpha_t,
                p.test_errors,
                p.test_fpr,
                p.selection_errors
            )?;
        }
        Ok(())
    };
    write(&mut out).map_err(io_err(path))?;
    finish(out, Some(path))
}

fn build_grid(n: usize, w: Option<Range>, alpha: Option<Range>, sweep_trend: bool) -> GridSpec {
    let mut grid = GridSpec::standard(n);
    if sweep_trend {
        grid = grid.with_trend_sweep();
    }
    if let Some(w) = w {
        grid.w_values = w.0;
    }
    if let Some(a) = alpha {
        grid.alpha_values = a.0;
    }
    grid
}

fn selection(honest: bool) -> Selection {
    if honest {
        Selection::TrainLeaveOneOut
    } else {
        Selection::TestSet
    }
}

fn cmd_classify(args: ClassifyArgs) -> CliResult {
    let dataset = load_source(&args.source)?;
    let method: Method = args.method.into();
    let row = if args.grid {
        let grid = build_grid(
            dataset.n(),
            args.grid_w,
            args.grid_alpha,
            args.sweep_trend_alpha,
        );
        let result = grid_search(&dataset, method, &grid, selection(args.honest_selection))?;
        if let Some(path) = &args.grid_csv {
            write_grid_csv(path, &dataset.name, &result)?;
        }
        method_result(&dataset, method, result.best, result.fpr)
    } else {
        let d = Params::default();
        let params = Params::new(
            args.w.unwrap_or(d.w),
            args.alpha.unwrap_or(d.alpha),
            args.alpha_t.unwrap_or(d.alpha_t),
        );
        let rep = Representer::for_method(method, params)?;
        let c = classify_1nn(&dataset.train, &dataset.test, &rep)?;
        method_result(&dataset, method, params, c.fpr)
    };
    let out = open_output(None)?;
    write_results_csv(&[row], out)?;
    Ok(())
}

fn audit_grid(ws: &[usize], alphas: &[usize], alpha_t: usize) -> Vec<Params> {
    let mut grid = Vec::with_capacity(ws.len() * alphas.len());
    for &w in ws {
        for &alpha in alphas {
            grid.push(Params::new(w, alpha, alpha_t));
        }
    }
    grid
}

fn report_audit_warnings(report: &AuditReport) {
    for w in &report.warnings {
        eprintln!("warning: {}: {w}", report.dataset);
    }
    eprintln!(
        "{}: violations mindist={} saxtd={} tdist={}",
        report.dataset,
        report.total_violations(Method::Sax),
        report.total_violations(Method::SaxTd),
        report.total_violations(Method::Tfsax)
    );
}

fn cmd_audit(args: AuditArgs) -> CliResult {
    let report = if let Some(count) = args.random_walks {
        let ws = args
            .w
            .clone()
            .map(|r| r.0)
            .unwrap_or_else(|| doubling(2, args.len / 2));
        let grid = audit_grid(&ws, &args.alphas.0, args.alpha_t);
        let walks = random_walk_pairs(count, args.len, args.source.seed);
        let pairs: Vec<(&[f64], &[f64])> = walks
            .iter()
            .map(|(a, b)| (a.as_slice(), b.as_slice()))
            .collect();
        audit_pairs("random_walk", &pairs, &grid)?
    } else {
        let dataset = load_source(&args.source)?;
        let ws = args
            .w
            .clone()
            .map(|r| r.0)
            .unwrap_or_else(|| doubling(2, dataset.n() / 2));
        let grid = audit_grid(&ws, &args.alphas.0, args.alpha_t);
        audit_lower_bound(&dataset, &grid, args.max_pairs, args.source.seed)?
    };
    report_audit_warnings(&report);
    match &args.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(io_err(dir))?;
            let records = dir.join("audit_records.csv");
            report.write_records_csv(open_output(Some(&records))?)?;
            let summary = dir.join("audit_summary.csv");
            report.write_summary_csv(open_output(Some(&summary))?)?;
        }
        None => report.write_summary_csv(open_output(None)?)?,
    }
    Ok(())
}

fn write_ucr(path: &Path, series: &[TimeSeries]) -> CliResult {
    let mut out = open_output(Some(path))?;
    let write = |out: &mut Box<dyn Write>| -> io::Result<()> {
        for s in series {
            write!(out, "{}", s.label.unwrap_or_default())?;
            for v in s.values() {
                write!(out, "\t{v}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    };
    write(&mut out).map_err(io_err(path))?;
    finish(out, Some(path))
}

fn cmd_gen(kind: GenKind) -> CliResult {
    match kind {
        GenKind::Cbf {
            per_class,
            test_per_class,
            len,
            seed,
            out,
        } => {
            let d = gen_cbf_split(per_class, test_per_class.unwrap_or(per_class), len, seed)?;
            fs::create_dir_all(&out).map_err(io_err(&out))?;
            write_ucr(&out.join("CBF_TRAIN.tsv"), &d.train)?;
            write_ucr(&out.join("CBF_TEST.tsv"), &d.test)?;
        }
    }
    Ok(())
}

fn all_methods() -> Vec<Method> {
    let mut m = vec![Method::Euclid];
    m.extend(Method::SYMBOLIC);
    m
}

fn cmd_bench(args: BenchArgs) -> CliResult {
    let mut source = args.source.clone();
    if source.dataset.is_none() && source.train.is_none() {
        source.dataset = Some("cbf".into());
    }
    let dataset = load_source(&source)?;
    let methods: Vec<Method> = if args.method.is_empty() {
        all_methods()
    } else {
        args.method.iter().map(|&m| m.into()).collect()
    };
    let rows = bench_methods(
        &dataset,
        &methods,
        &args.w.0,
        args.alpha,
        args.alpha_t,
        args.repeats,
    )?;
    write_runtime_csv(&rows, open_output(args.output.as_deref())?)?;
    Ok(())
}

fn cmd_report(args: ReportArgs) -> CliResult {
    let opts = args.load.options();
    let mut report = EvalReport::default();
    for name in &args.datasets {
        let dataset = match resolve_dataset(name, args.data_dir.as_deref(), args.seed, opts) {
            Ok(d) => d,
            Err(CliError::Lib(e)) if e.is_io() => {
                eprintln!("warning: skipping {name}: {e}");
                continue;
            }
            Err(e) => return Err(e),
        };
        let grid = build_grid(dataset.n(), None, None, args.sweep_trend_alpha);
        for method in all_methods() {
            let result = grid_search(&dataset, method, &grid, selection(args.honest_selection))?;
            eprintln!(
                "{}: {method} fpr={} at {:?}",
                dataset.name, result.fpr, result.best
            );
            report
                .results
                .push(method_result(&dataset, method, result.best, result.fpr));
        }
        if args.audit {
            let w = 32.min(dataset.n() / 2);
            let audit = audit_lower_bound(
                &dataset,
                &audit_grid(
                    &[w],
                    &(3..=10).collect::<Vec<_>>(),
                    Params::default().alpha_t,
                ),
                DEFAULT_AUDIT_PAIRS,
                args.seed,
            )?;
            report_audit_warnings(&audit);
            report.audits.push(audit);
        }
        if args.bench {
            let ws = doubling(2, 64.min(dataset.n() / 2));
            report.runtimes.extend(bench_methods(
                &dataset,
                &all_methods(),
                &ws,
                10,
                Params::default().alpha_t,
                3,
            )?);
        }
    }
    for path in emit_report(&report, &args.out)? {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Encode(a) => cmd_encode(a),
        Command::Dist(a) => cmd_dist(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Audit(a) => cmd_audit(a),
        Command::Gen { kind } => cmd_gen(kind),
        Command::Bench(a) => cmd_bench(a),
        Command::Report(a) => cmd_report(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_io() { 2 } else { 1 })
        }
    }
}
