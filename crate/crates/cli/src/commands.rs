use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use diambound::report::{
    distributions_from_rows, read_records, summary_fields, write_distributions_json,
    write_distributions_tsv, write_records_tsv, write_report_json,
};
use diambound::{
    connected_components, distributions, exact_diameter_with, generate as build,
    largest_connected_component, load_edge_list, run_auto_with, run_single_method_with,
    DistributionSummary, EngineOptions, ExactOptions, GeneratorSpec, Graph, LoadOptions, Method,
    Report, StopReason, StoppingCriterion, StrategyKind,
};
use serde_json::{json, Map, Value};

use crate::args::{
    BoundsArgs, ExactArgs, Family, Format, GenerateArgs, InputArgs, MethodTag, Mode, StatsArgs,
    StrategyTag,
};
use crate::error::CliError;

type CliResult<T = ()> = Result<T, CliError>;

/// Graph under analysis plus what is needed to describe it.
struct Input {
    n: usize,
    m: usize,
    lcc: Option<(usize, usize)>,
    graph: Graph,
    /// Original input id of each vertex of `graph`, when requested.
    original_ids: Option<Vec<u64>>,
}

fn open(path: &Path) -> CliResult<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(io::stdin().lock()));
    }
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    Ok(Box::new(BufReader::new(file)))
}

fn create(path: &Path) -> CliResult<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| CliError::io(path, e))
}

/// Runs `write` against `path`, or standard output when `path` is `None`.
fn emit(
    path: Option<&Path>,
    write: impl FnOnce(&mut dyn Write) -> diambound::Result<()>,
) -> CliResult {
    match path {
        Some(p) => {
            let mut out = create(p)?;
            write(&mut out).map_err(|e| match e {
                diambound::Error::Io(source) => CliError::io(p, source),
                other => other.into(),
            })
        }
        None => Ok(write(&mut io::stdout().lock())?),
    }
}

fn load(args: &InputArgs, keep_ids: bool) -> CliResult<Input> {
    let started = Instant::now();
    let options = LoadOptions {
        keep_original_ids: keep_ids,
        ..Default::default()
    };
    let loaded = load_edge_list::<u32, _>(open(&args.input)?, &options)?;
    let (n, m) = (loaded.graph.vertex_count(), loaded.graph.edge_count());
    let input = if args.lcc {
        let (graph, mapping) = largest_connected_component(&loaded.graph)?;
        let original_ids = loaded
            .original_ids
            .map(|ids| mapping.new_to_old.iter().map(|&v| ids[v as usize]).collect());
        Input {
            n,
            m,
            lcc: Some((graph.vertex_count(), graph.edge_count())),
            graph,
            original_ids,
        }
    } else {
        let components = connected_components(&loaded.graph);
        if !components.is_connected() {
            return Err(CliError::Disconnected(components.count()));
        }
        Input {
            n,
            m,
            lcc: None,
            graph: loaded.graph,
            original_ids: loaded.original_ids,
        }
    };
    eprintln!("# time load {:.3}s", started.elapsed().as_secs_f64());
    Ok(input)
}

enum Plan {
    Engine {
        stop: StoppingCriterion,
        guard: Option<usize>,
    },
    Single {
        method: Method,
        strategy: StrategyKind,
        iterations: usize,
    },
}

impl Plan {
    fn fixed(&self) -> bool {
        matches!(
            self,
            Plan::Single { .. }
                | Plan::Engine {
                    stop: StoppingCriterion::FixedIterations(_),
                    ..
                }
        )
    }
}

fn plan(a: &BoundsArgs) -> CliResult<Plan> {
    let mode = a.mode.unwrap_or(if a.precision.is_some() {
        Mode::Precision
    } else if a.iterations.is_some() {
        Mode::Fixed
    } else {
        Mode::Auto
    });
    let reject = |set: bool, flag: &str, mode: &str| -> CliResult {
        if set {
            Err(CliError::usage(format!("{flag} cannot be used with --mode {mode}")))
        } else {
            Ok(())
        }
    };
    if a.workers == 0 {
        return Err(CliError::usage("--workers must be at least 1"));
    }
    if a.method.is_none() && a.strategy.is_some() {
        return Err(CliError::usage("--strategy requires --method"));
    }
    if a.method.is_some() && mode != Mode::Fixed {
        return Err(CliError::usage("--method requires --mode fixed"));
    }
    let stop = match mode {
        Mode::Auto => {
            reject(a.precision.is_some(), "--precision", "auto")?;
            reject(a.iterations.is_some(), "--iterations", "auto")?;
            StoppingCriterion::GapThreshold(a.threshold.unwrap_or(diambound::engine::DEFAULT_GAP_THRESHOLD))
        }
        Mode::Precision => {
            reject(a.threshold.is_some(), "--threshold", "precision")?;
            reject(a.iterations.is_some(), "--iterations", "precision")?;
            let p = a
                .precision
                .ok_or_else(|| CliError::usage("--mode precision requires --precision"))?;
            StoppingCriterion::RelativePrecision(p)
        }
        Mode::Fixed => {
            reject(a.threshold.is_some(), "--threshold", "fixed")?;
            reject(a.precision.is_some(), "--precision", "fixed")?;
            reject(a.max_iterations.is_some(), "--max-iterations", "fixed")?;
            let k = a
                .iterations
                .ok_or_else(|| CliError::usage("--mode fixed requires --iterations"))?;
            StoppingCriterion::FixedIterations(k)
        }
    };
    stop.validate()?;
    if a.max_iterations == Some(0) {
        return Err(CliError::usage("--max-iterations must be at least 1"));
    }
    let Some(tag) = a.method else {
        return Ok(Plan::Engine {
            stop,
            guard: a.max_iterations,
        });
    };
    let (method, forced) = match tag {
        MethodTag::Tlb => (Method::TrivialLower, None),
        MethodTag::Tub => (Method::TrivialUpper, None),
        MethodTag::Dslb => (Method::DoubleSweepLower, None),
        MethodTag::Rtub => (Method::TreeUpper, Some(StrategyTag::Random)),
        MethodTag::Hdtub => (Method::TreeUpper, Some(StrategyTag::Degree)),
    };
    let strategy = match (forced, a.strategy) {
        (Some(f), Some(s)) if f != s => {
            return Err(CliError::usage(format!(
                "--method {} implies --strategy {}",
                tag_name(tag),
                if f == StrategyTag::Random { "random" } else { "degree" }
            )))
        }
        (Some(f), _) => f,
        (None, Some(s)) => s,
        (None, None) => StrategyTag::Random,
    };
    let strategy = match strategy {
        StrategyTag::Random => StrategyKind::UniformRandom { seed: a.seed },
        StrategyTag::Degree => StrategyKind::DegreeDescending { seed: a.seed },
    };
    let StoppingCriterion::FixedIterations(iterations) = stop else {
        unreachable!("method runs are fixed-mode only")
    };
    Ok(Plan::Single {
        method,
        strategy,
        iterations,
    })
}

fn tag_name(tag: MethodTag) -> &'static str {
    match tag {
        MethodTag::Tlb => "tlb",
        MethodTag::Tub => "tub",
        MethodTag::Dslb => "dslb",
        MethodTag::Rtub => "rtub",
        MethodTag::Hdtub => "hdtub",
    }
}

pub fn bounds(a: &BoundsArgs) -> CliResult {
    let plan = plan(a)?;
    let input = load(&a.input, a.id_map.is_some())?;
    let g = &input.graph;

    let started = Instant::now();
    let report: Report = match plan {
        Plan::Engine { stop, guard } => {
            let options = EngineOptions {
                max_iterations: match stop {
                    StoppingCriterion::FixedIterations(k) => Some(k),
                    _ => guard,
                },
                workers: a.workers,
            };
            run_auto_with(g, stop, a.seed, &options)?
        }
        Plan::Single {
            method,
            strategy,
            iterations,
        } => {
            let options = EngineOptions {
                workers: a.workers,
                ..Default::default()
            };
            run_single_method_with(g, method, strategy, iterations, &options)?
        }
    };
    eprintln!("# time run {:.3}s", started.elapsed().as_secs_f64());
    if let Some(t) = report.iteration_times.iter().max() {
        eprintln!("# time slowest_iteration {:.3}s", t.as_secs_f64());
    }

    if let Some(path) = &a.records {
        emit(Some(path), |out| match a.format {
            Format::Tsv => write_records_tsv(&report, out),
            Format::Structured => write_report_json(&report, out),
        })?;
    }
    if let Some(path) = &a.distributions {
        let tables = distributions(&report)?;
        emit(Some(path), |out| write_tables(&tables, a.format, out))?;
    }
    if let (Some(path), Some(ids)) = (&a.id_map, &input.original_ids) {
        emit(Some(path), |out| {
            for (dense, original) in ids.iter().enumerate() {
                writeln!(out, "{dense} {original}")?;
            }
            Ok(())
        })?;
    }
    emit(None, |out| write_summary(&input, &report, a.format, out))?;

    if report.stop_reason == StopReason::MaxIterations && !plan.fixed() {
        return Err(CliError::NotConverged(report.state.iterations()));
    }
    Ok(())
}

fn write_tables(tables: &[DistributionSummary], format: Format, out: &mut dyn Write) -> diambound::Result<()> {
    match format {
        Format::Tsv => write_distributions_tsv(tables, out),
        Format::Structured => write_distributions_json(tables, out),
    }
}

fn write_summary(input: &Input, report: &Report, format: Format, out: &mut dyn Write) -> diambound::Result<()> {
    let mut rows: Vec<Vec<String>> = vec![
        vec!["n".into(), input.n.to_string()],
        vec!["m".into(), input.m.to_string()],
    ];
    if let Some((n, m)) = input.lcc {
        rows.push(vec!["lcc_n".into(), n.to_string()]);
        rows.push(vec!["lcc_m".into(), m.to_string()]);
    }
    rows.extend(summary_fields(report));
    match format {
        Format::Tsv => {
            for row in rows {
                writeln!(out, "{}", row.join(" "))?;
            }
        }
        Format::Structured => {
            let mut doc = Map::new();
            let mut methods = Map::new();
            for row in rows {
                match row[0].as_str() {
                    "method" => {
                        let fields: Map<String, Value> = row[2..]
                            .chunks(2)
                            .map(|kv| (kv[0].clone(), scalar(&kv[1])))
                            .collect();
                        methods.insert(row[1].clone(), Value::Object(fields));
                    }
                    "lower_witness" => {
                        doc.insert(row[0].clone(), json!([scalar(&row[1]), scalar(&row[2])]));
                    }
                    key => {
                        doc.insert(key.to_string(), scalar(&row[1]));
                    }
                }
            }
            doc.insert("methods".into(), Value::Object(methods));
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Numbers stay numbers; everything else is kept as text.
fn scalar(text: &str) -> Value {
    if let Ok(v) = text.parse::<u64>() {
        return json!(v);
    }
    match text.parse::<f64>() {
        Ok(v) if text.contains('.') => json!(v),
        _ => json!(text),
    }
}

pub fn exact(a: &ExactArgs) -> CliResult {
    if a.workers == 0 {
        return Err(CliError::usage("--workers must be at least 1"));
    }
    let input = load(&a.input, false)?;
    let options = ExactOptions {
        size_limit: (a.size_limit > 0).then_some(a.size_limit),
        workers: a.workers,
    };
    let started = Instant::now();
    let d = exact_diameter_with(&input.graph, &options)?;
    eprintln!("# time exact {:.3}s", started.elapsed().as_secs_f64());
    println!("diameter {d}");
    Ok(())
}

pub fn generate(a: &GenerateArgs) -> CliResult {
    if a.m.is_some() && a.family != Family::Gnm {
        return Err(CliError::usage("--m applies to --family gnm only"));
    }
    let n = a.n;
    let spec = match a.family {
        Family::Path => GeneratorSpec::Path { n },
        Family::Cycle => GeneratorSpec::Cycle { n },
        Family::Star => GeneratorSpec::Star { n },
        Family::Tree => GeneratorSpec::RandomTree { n, seed: a.seed },
        Family::Gnm => GeneratorSpec::Gnm {
            n,
            m: a.m.ok_or_else(|| CliError::usage("--family gnm requires --m"))?,
            seed: a.seed,
        },
    };
    let g: Graph = build(&spec)?;
    emit(a.output.as_deref(), |out| {
        g.write_edge_list(&mut *out)?;
        out.flush()?;
        Ok(())
    })
}

pub fn stats(a: &StatsArgs) -> CliResult {
    let rows = read_records(open(&a.input)?)?;
    let tables = distributions_from_rows(&rows)?;
    emit(a.output.as_deref(), |out| write_tables(&tables, a.format, out))
}
