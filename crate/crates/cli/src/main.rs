mod config;
mod plot;
mod table;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use cogfis::analysis::{
    build_with_rules, correlation_report, pearson, run_sweep, run_sweep_on, standard_sweeps,
    surface_grid, Exec, SurfaceSpec, SweepSpec, VariantId, DEFAULT_FIXED, STANDARD_PAIRS,
    STANDARD_SWEEPS,
};
use cogfis::crmetrics::RawMetric;
use cogfis::ruledsl::{
    builtin_rulebase, check_rules, decision_variables, parse_rules, serialize_rules, RuleBase,
};
use cogfis::variable::label_key;
use cogfis::{DecisionId, InputId, MfFamily};

use config::CliConfig;
use table::{
    correlation_table, fmt_full, fmt_sig, read_sweep_csv, surface_table, sweep_table, Table,
};

#[derive(Parser)]
#[command(
    name = "cogfis",
    version,
    about = "Fuzzy inference for cognitive-radio spectrum decisions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one system at one input point.
    Eval(EvalArgs),
    /// Vary one input over a grid, others fixed.
    Sweep(SweepArgs),
    /// Vary two inputs over a Cartesian grid.
    Surface(SurfaceArgs),
    /// Write the fourteen standard sweeps and their correlation table.
    Tables(TablesArgs),
    /// Correlate variant columns of sweep CSVs (or of the standard sweeps).
    Correlate(CorrelateArgs),
    /// Draw a sweep CSV as an SVG line chart.
    Plot(PlotArgs),
    /// Validate a rule file: count, gaps and duplicates.
    CheckRules(CheckRulesArgs),
    /// Print a built-in rule base in rule-file syntax.
    Rules(RulesArgs),
}

#[derive(Args)]
struct Common {
    /// TOML settings file.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    decision: Option<String>,
    #[arg(long, default_value = "triangular-mamdani")]
    variant: String,
    /// Crisp input, e.g. `snr=70`. Unset inputs take the fixed value.
    #[arg(long = "in", value_name = "NAME=VALUE")]
    inputs: Vec<String>,
    /// Raw metric normalized through the calibration table, e.g. `sinr_db=12`.
    #[arg(long = "raw", value_name = "METRIC=VALUE")]
    raw: Vec<String>,
    /// Value for unset inputs.
    #[arg(long)]
    fixed: Option<f64>,
    /// Rule file to use instead of the built-in rules.
    #[arg(long)]
    rules: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    decision: Option<String>,
    /// Input to vary.
    #[arg(long)]
    input: String,
    #[arg(long)]
    fixed: Option<f64>,
    /// Comma list (`10,20,40`) or range (`0:100:5`).
    #[arg(long)]
    grid: Option<String>,
    #[arg(long, value_delimiter = ',')]
    variants: Vec<String>,
    #[arg(long)]
    rules: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SurfaceArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    decision: Option<String>,
    /// Outer input.
    #[arg(long)]
    a: String,
    /// Inner input.
    #[arg(long)]
    b: String,
    #[arg(long)]
    fixed: Option<f64>,
    /// Axis grid for both inputs, as for `sweep --grid`.
    #[arg(long, default_value = "0:100:2")]
    grid: String,
    #[arg(long, value_delimiter = ',')]
    variants: Vec<String>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TablesArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, env = "COGFIS_OUTPUT_DIR")]
    out_dir: Option<PathBuf>,
}

#[derive(Args)]
struct CorrelateArgs {
    #[command(flatten)]
    common: Common,
    /// Sweep CSVs; the standard sweeps are generated when none are given.
    files: Vec<PathBuf>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// Sweep CSV to draw.
    input: PathBuf,
    #[arg(short, long)]
    out: PathBuf,
    #[arg(long, default_value = "output")]
    y_label: String,
}

#[derive(Args)]
struct CheckRulesArgs {
    path: PathBuf,
    /// Decision the rules are for; inferred from the first conclusion if omitted.
    #[arg(long)]
    decision: Option<String>,
}

#[derive(Args)]
struct RulesArgs {
    #[arg(long)]
    decision: String,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let num = |t: &str| -> Result<f64> {
        t.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| anyhow!("bad grid value `{t}`"))
    };
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if step <= 0.0 || stop < start {
                bail!("grid range needs step > 0 and stop >= start");
            }
            let n = ((stop - start) / step + 1e-9).floor() as usize;
            Ok((0..=n).map(|k| start + k as f64 * step).collect())
        }
        [_] => s.split(',').map(num).collect(),
        _ => bail!("grid must be `a,b,c` or `start:stop:step`"),
    }
}

fn parse_assignment(s: &str) -> Result<(&str, f64)> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| anyhow!("expected NAME=VALUE, got `{s}`"))?;
    let v: f64 = v
        .trim()
        .parse()
        .with_context(|| format!("`{s}`: value is not a number"))?;
    if !v.is_finite() {
        bail!("`{s}`: value must be finite");
    }
    Ok((k.trim(), v))
}

fn input_of(decision: DecisionId, name: &str) -> Result<InputId> {
    let key = label_key(name);
    decision
        .inputs()
        .iter()
        .copied()
        .find(|i| label_key(i.key()) == key)
        .ok_or_else(|| {
            let valid: Vec<_> = decision.inputs().iter().map(|i| i.key()).collect();
            anyhow!(
                "`{name}` is not an input of {decision} (inputs: {})",
                valid.join(", ")
            )
        })
}

fn load_rules(decision: DecisionId, path: Option<&Path>) -> Result<RuleBase> {
    match path {
        None => Ok(builtin_rulebase(decision)),
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let (inputs, output) = decision_variables(decision, MfFamily::Triangular);
            parse_rules(&text, &inputs, &output).with_context(|| format!("in {}", p.display()))
        }
    }
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let cfg = CliConfig::load(args.common.config.as_deref())?;
    let decision = cfg.decision(args.decision.as_deref())?;
    let variant: VariantId = args.variant.parse()?;
    let opts = cfg.system_options()?;
    let calibration = cfg.calibration()?;
    let fixed = args.fixed.or(cfg.fixed).unwrap_or(DEFAULT_FIXED);

    let mut x = vec![fixed; decision.inputs().len()];
    let mut set = vec![false; x.len()];
    let mut assign = |input: InputId, v: f64| -> Result<()> {
        let k = decision.inputs().iter().position(|&i| i == input).unwrap();
        if set[k] {
            bail!("input `{input}` assigned twice");
        }
        set[k] = true;
        x[k] = v;
        Ok(())
    };
    for a in &args.inputs {
        let (name, v) = parse_assignment(a)?;
        assign(input_of(decision, name)?, v)?;
    }
    for a in &args.raw {
        let (name, raw) = parse_assignment(a)?;
        let metric: RawMetric = name.parse()?;
        let (input, v) = calibration.crisp(metric, raw);
        if !decision.inputs().contains(&input) {
            bail!("raw metric `{metric}` feeds `{input}`, which {decision} does not use");
        }
        assign(input, v)?;
    }

    let rules = load_rules(decision, args.rules.as_deref())?;
    let system = build_with_rules(decision, variant, &rules, &opts)?;
    println!("{}", fmt_sig(system.evaluate(&x)?, 4));
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let cfg = CliConfig::load(args.common.config.as_deref())?;
    let decision = cfg.decision(args.decision.as_deref())?;
    let opts = cfg.system_options()?;
    let mut spec = SweepSpec::new(decision, input_of(decision, &args.input)?)
        .with_variants(cfg.variants(&args.variants)?);
    if let Some(f) = args.fixed.or(cfg.fixed) {
        spec = spec.with_fixed(f);
    }
    match (&args.grid, &cfg.grid) {
        (Some(g), _) => spec = spec.with_grid(parse_grid(g)?),
        (None, Some(g)) => spec = spec.with_grid(g.clone()),
        _ => {}
    }
    let result = match &args.rules {
        None => run_sweep(&spec, &opts)?,
        Some(p) => {
            let rules = load_rules(decision, Some(p))?;
            let systems = spec
                .variants
                .iter()
                .map(|&v| build_with_rules(decision, v, &rules, &opts))
                .collect::<cogfis::Result<Vec<_>>>()?;
            run_sweep_on(&spec, &systems, Exec::default())?
        }
    };
    sweep_table(&result).emit(args.out.as_deref())
}

fn cmd_surface(args: SurfaceArgs) -> Result<()> {
    let cfg = CliConfig::load(args.common.config.as_deref())?;
    let decision = cfg.decision(args.decision.as_deref())?;
    let opts = cfg.system_options()?;
    let axis = parse_grid(&args.grid)?;
    let mut spec = SurfaceSpec::new(
        decision,
        input_of(decision, &args.a)?,
        input_of(decision, &args.b)?,
    );
    spec.fixed = args.fixed.or(cfg.fixed).unwrap_or(DEFAULT_FIXED);
    spec.grid_a = axis.clone();
    spec.grid_b = axis;
    spec.variants = cfg.variants(&args.variants)?;
    let grid = surface_grid(&spec, &opts, Exec::default())?;
    surface_table(&grid).emit(args.out.as_deref())
}

fn output_dir(flag: Option<PathBuf>, cfg: &CliConfig) -> PathBuf {
    flag.or_else(|| cfg.output_dir.clone())
        .unwrap_or_else(|| PathBuf::from("."))
}

fn cmd_tables(args: TablesArgs) -> Result<()> {
    let cfg = CliConfig::load(args.common.config.as_deref())?;
    let opts = cfg.system_options()?;
    let dir = output_dir(args.out_dir, &cfg);
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let sweeps = standard_sweeps(&opts, Exec::default())?;
    for (s, result) in STANDARD_SWEEPS.iter().zip(&sweeps) {
        sweep_table(result).emit(Some(&dir.join(format!("table{:02}.csv", s.number))))?;
    }
    let report = correlation_report(&sweeps, &STANDARD_PAIRS)?;
    correlation_table(&report).emit(Some(&dir.join("table23.csv")))?;
    eprintln!("wrote {} files to {}", sweeps.len() + 1, dir.display());
    Ok(())
}

fn cmd_correlate(args: CorrelateArgs) -> Result<()> {
    let cfg = CliConfig::load(args.common.config.as_deref())?;
    if args.files.is_empty() {
        let sweeps = standard_sweeps(&cfg.system_options()?, Exec::default())?;
        let report = correlation_report(&sweeps, &STANDARD_PAIRS)?;
        return correlation_table(&report).emit(args.out.as_deref());
    }
    let mut header = vec!["file".to_owned()];
    header.extend(STANDARD_PAIRS.iter().map(|(a, b)| format!("{a}~{b}")));
    let mut rows = Vec::new();
    for path in &args.files {
        let data = read_sweep_csv(path)?;
        let mut row = vec![path.display().to_string()];
        for (a, b) in STANDARD_PAIRS {
            let col = |v: VariantId| {
                data.series
                    .iter()
                    .position(|s| s == v.key())
                    .map(|k| &data.ys[k])
                    .ok_or_else(|| anyhow!("{}: no `{v}` column", path.display()))
            };
            let r = pearson(col(a)?, col(b)?)
                .with_context(|| format!("{}: {a} vs {b}", path.display()))?;
            row.push(fmt_full(r));
        }
        rows.push(row);
    }
    Table { header, rows }.emit(args.out.as_deref())
}

fn cmd_plot(args: PlotArgs) -> Result<()> {
    let data = read_sweep_csv(&args.input)?;
    let svg = plot::line_chart(&data, &args.y_label);
    fs::write(&args.out, svg).with_context(|| format!("writing {}", args.out.display()))
}

/// Output variable named by the first conclusion in rule text.
fn conclusion_variable(text: &str) -> Option<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .find(|l| !l.trim().is_empty())
        .and_then(|l| {
            let tokens: Vec<&str> = l.split_whitespace().collect();
            let then = tokens.iter().position(|t| t.eq_ignore_ascii_case("THEN"))?;
            let is = tokens[then..]
                .iter()
                .position(|t| t.eq_ignore_ascii_case("IS"))?
                + then;
            Some(tokens[then + 1..is].join("_"))
        })
}

fn cmd_check_rules(args: CheckRulesArgs) -> Result<bool> {
    let text = fs::read_to_string(&args.path)
        .with_context(|| format!("reading {}", args.path.display()))?;
    let decision = match &args.decision {
        Some(d) => d.parse::<DecisionId>()?,
        None => conclusion_variable(&text)
            .and_then(|v| DecisionId::from_output(&v))
            .ok_or_else(|| {
                anyhow!("cannot tell which decision the rules are for; pass --decision")
            })?,
    };
    let (inputs, output) = decision_variables(decision, MfFamily::Triangular);
    let report = check_rules(&text, &inputs, &output)
        .with_context(|| format!("in {}", args.path.display()))?;
    println!("{report}");
    Ok(report.is_clean())
}

fn cmd_rules(args: RulesArgs) -> Result<()> {
    let decision: DecisionId = args.decision.parse()?;
    let mut text = serialize_rules(&builtin_rulebase(decision));
    text.push('\n');
    match &args.out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Eval(a) => cmd_eval(a)?,
        Command::Sweep(a) => cmd_sweep(a)?,
        Command::Surface(a) => cmd_surface(a)?,
        Command::Tables(a) => cmd_tables(a)?,
        Command::Correlate(a) => cmd_correlate(a)?,
        Command::Plot(a) => cmd_plot(a)?,
        Command::CheckRules(a) => {
            return Ok(if cmd_check_rules(a)? {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Rules(a) => cmd_rules(a)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        // Downstream closed early, as with `| head`.
        Err(e)
            if e.chain()
                .filter_map(|c| c.downcast_ref::<std::io::Error>())
                .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
