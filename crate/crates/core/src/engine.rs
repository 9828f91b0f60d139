//! Iterated bound computation.
//!
//! The engine repeatedly evaluates heuristics from start vertices supplied by
//! a [`StartStrategy`], keeps the best lower and upper bound in a
//! [`BoundsState`], and stops on a [`StoppingCriterion`] or a safety guard
//! on the iteration count. The guard is needed: on a cycle every tree bound
//! is `n - 1` while the diameter is `n / 2`, so a gap criterion may never be
//! met.
//!
//! With more than one worker, iterations are evaluated in batches on a
//! thread pool. Start vertices are still drawn sequentially, so a parallel
//! run produces the same records as a sequential one, except that the
//! criterion is only checked at batch boundaries and may be overshot by at
//! most one batch.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundValue, Bounder, Method};
use crate::error::{Error, Result};
use crate::graph_store::{degree_descending_order, CsrGraph, VertexId};
use crate::rng::SeededSampler;

pub const DEFAULT_GAP_THRESHOLD: u64 = 5;

/// Iteration guard per vertex when none is configured.
pub const DEFAULT_GUARD_PER_VERTEX: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyKind {
    /// Uniform draws with replacement from `[0, n)`.
    UniformRandom { seed: u64 },
    /// Vertices by decreasing degree (ties by id); once all `n` are used,
    /// continues with uniform draws from `seed`.
    DegreeDescending { seed: u64 },
}

/// Source of start vertices.
#[derive(Clone, Debug)]
pub struct StartStrategy<I> {
    kind: StrategyKind,
    vertex_count: usize,
    order: Vec<I>,
    cursor: usize,
    sampler: SeededSampler,
}

impl<I: VertexId> StartStrategy<I> {
    pub fn new(kind: StrategyKind, g: &CsrGraph<I>) -> Result<Self> {
        if g.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let (order, seed) = match kind {
            StrategyKind::UniformRandom { seed } => (Vec::new(), seed),
            StrategyKind::DegreeDescending { seed } => (degree_descending_order(g), seed),
        };
        Ok(StartStrategy {
            kind,
            vertex_count: g.vertex_count(),
            order,
            cursor: 0,
            sampler: SeededSampler::new(seed),
        })
    }

    pub fn kind(&self) -> StrategyKind {
        self.kind
    }

    pub fn next_vertex(&mut self) -> I {
        if let Some(&v) = self.order.get(self.cursor) {
            self.cursor += 1;
            return v;
        }
        let drawn = self.sampler.below(self.vertex_count as u64);
        I::from_index(drawn as usize).expect("drawn below vertex count")
    }
}

impl<I: VertexId> Iterator for StartStrategy<I> {
    type Item = I;

    fn next(&mut self) -> Option<I> {
        Some(self.next_vertex())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StoppingCriterion {
    /// Stop once `best_upper - best_lower <= t`.
    GapThreshold(u64),
    /// Stop once `(best_upper - best_lower) / best_lower < p`.
    RelativePrecision(f64),
    /// Stop after exactly `k` iterations.
    FixedIterations(usize),
}

impl Default for StoppingCriterion {
    fn default() -> Self {
        StoppingCriterion::GapThreshold(DEFAULT_GAP_THRESHOLD)
    }
}

impl StoppingCriterion {
    pub fn validate(&self) -> Result<()> {
        match *self {
            StoppingCriterion::RelativePrecision(p) if !(p > 0.0 && p.is_finite()) => Err(
                Error::InvalidCriterion(format!("precision must be positive, got {p}")),
            ),
            StoppingCriterion::FixedIterations(0) => {
                Err(Error::InvalidCriterion("iteration count must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }

    pub fn is_met(&self, state: &BoundsState) -> bool {
        match *self {
            StoppingCriterion::GapThreshold(t) => state.gap().is_some_and(|gap| gap <= t),
            StoppingCriterion::RelativePrecision(p) => {
                match (state.best_lower(), state.best_upper()) {
                    // Only the single-vertex graph has a zero lower bound.
                    (Some(0), Some(upper)) => upper == 0,
                    (Some(lower), Some(upper)) => {
                        (upper.saturating_sub(lower) as f64) / (lower as f64) < p
                    }
                    _ => false,
                }
            }
            StoppingCriterion::FixedIterations(k) => state.iterations() >= k,
        }
    }

    /// Iterations left before a fixed-iteration criterion is met.
    fn remaining(&self, state: &BoundsState) -> Option<usize> {
        match *self {
            StoppingCriterion::FixedIterations(k) => Some(k.saturating_sub(state.iterations())),
            _ => None,
        }
    }
}

/// Best value and hit statistics of one method.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodStats {
    pub best: u64,
    /// 1-based iteration at which `best` was first obtained.
    pub first_hit: usize,
    /// Number of samples equal to `best`.
    pub hits: usize,
    pub samples: usize,
}

impl MethodStats {
    pub fn frequency(&self) -> f64 {
        self.hits as f64 / self.samples as f64
    }
}

/// Running best bounds with per-method first-hit and frequency bookkeeping.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsState {
    iterations: usize,
    methods: BTreeMap<Method, MethodStats>,
}

impl BoundsState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn method(&self, method: Method) -> Option<&MethodStats> {
        self.methods.get(&method)
    }

    pub fn methods(&self) -> impl Iterator<Item = (Method, &MethodStats)> {
        self.methods.iter().map(|(&m, s)| (m, s))
    }

    pub fn best_lower(&self) -> Option<u64> {
        self.methods().filter(|(m, _)| m.is_lower()).map(|(_, s)| s.best).max()
    }

    pub fn best_upper(&self) -> Option<u64> {
        self.methods().filter(|(m, _)| m.is_upper()).map(|(_, s)| s.best).min()
    }

    pub fn gap(&self) -> Option<u64> {
        Some(self.best_upper()?.saturating_sub(self.best_lower()?))
    }

    pub fn frequency(&self, method: Method) -> Option<f64> {
        self.method(method).map(MethodStats::frequency)
    }

    /// Accounts one sample of `method` taken during global iteration
    /// `iteration` (1-based).
    pub fn observe(&mut self, iteration: usize, method: Method, value: u64) {
        let stats = self.methods.entry(method).or_insert(MethodStats {
            best: value,
            first_hit: iteration,
            hits: 0,
            samples: 0,
        });
        stats.samples += 1;
        if method.improves(value, stats.best) {
            stats.best = value;
            stats.first_hit = iteration;
            stats.hits = 1;
        } else if value == stats.best {
            stats.hits += 1;
            stats.first_hit = stats.first_hit.min(iteration);
        }
    }

    /// Marks one more iteration as complete.
    pub fn finish_iteration(&mut self) {
        self.iterations += 1;
    }

    /// The same state with every first-hit index moved by `offset`, for
    /// placing a batch that ran with local indices into a global run.
    pub fn shifted(&self, offset: usize) -> Self {
        let mut out = self.clone();
        for stats in out.methods.values_mut() {
            stats.first_hit += offset;
        }
        out
    }
}

/// Combines states produced on the same graph over disjoint iterations.
///
/// Hit counts only carry over from a side whose best equals the merged best,
/// and the first hit is the earliest index among those sides.
pub fn merge_states(a: &BoundsState, b: &BoundsState) -> BoundsState {
    let mut methods = a.methods.clone();
    for (&method, theirs) in &b.methods {
        let merged = match methods.get(&method) {
            None => *theirs,
            Some(ours) => {
                let best = method.better(ours.best, theirs.best);
                let sides = [ours, theirs];
                let agreeing = sides.iter().filter(|s| s.best == best);
                MethodStats {
                    best,
                    first_hit: agreeing.clone().map(|s| s.first_hit).min().unwrap(),
                    hits: agreeing.map(|s| s.hits).sum(),
                    samples: ours.samples + theirs.samples,
                }
            }
        };
        methods.insert(method, merged);
    }
    BoundsState {
        iterations: a.iterations + b.iterations,
        methods,
    }
}

/// One heuristic invocation within a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord<I> {
    pub iteration: usize,
    pub method: Method,
    pub start: I,
    pub value: u64,
    pub witness: Vec<I>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    CriterionMet,
    MaxIterations,
}

impl StopReason {
    pub fn tag(self) -> &'static str {
        match self {
            StopReason::CriterionMet => "criterion_met",
            StopReason::MaxIterations => "max_iterations",
        }
    }
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistributionKind {
    /// Number of samples `>= k`; used for lower bounds.
    Ccdf,
    /// Number of samples `<= k`; used for upper bounds.
    Cdf,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionPoint {
    pub k: u64,
    pub count: usize,
    pub fraction: f64,
}

/// Cumulative distribution of one method's sampled values over
/// `k = 0 ..= max + 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionSummary {
    pub method: Method,
    pub kind: DistributionKind,
    pub total: usize,
    pub points: Vec<DistributionPoint>,
}

impl DistributionSummary {
    /// Count at `k`, extended beyond the tabulated range.
    pub fn count_at(&self, k: u64) -> usize {
        match self.points.get(k as usize) {
            Some(p) => p.count,
            None => match self.kind {
                DistributionKind::Ccdf => 0,
                DistributionKind::Cdf => self.total,
            },
        }
    }

    /// Best sampled value: the maximum for lower bounds, the minimum for
    /// upper bounds.
    pub fn best_value(&self) -> u64 {
        match self.kind {
            DistributionKind::Ccdf => self.points.iter().rev().find(|p| p.count > 0),
            DistributionKind::Cdf => self.points.iter().find(|p| p.count > 0),
        }
        .map(|p| p.k)
        .expect("a summary has at least one sample")
    }

    /// Fraction of samples equal to [`best_value`](Self::best_value).
    pub fn best_frequency(&self) -> f64 {
        self.points[self.best_value() as usize].fraction
    }
}

/// Tabulates per-method distributions from `(method, value)` samples,
/// ordered by method tag.
pub fn summarize_samples(
    samples: impl IntoIterator<Item = (Method, u64)>,
) -> Result<Vec<DistributionSummary>> {
    let mut by_method: BTreeMap<Method, Vec<u64>> = BTreeMap::new();
    for (method, value) in samples {
        by_method.entry(method).or_default().push(value);
    }
    if by_method.is_empty() {
        return Err(Error::EmptyReport);
    }
    Ok(by_method
        .into_iter()
        .map(|(method, values)| {
            let max = *values.iter().max().unwrap();
            let mut histogram = vec![0usize; max as usize + 2];
            for &v in &values {
                histogram[v as usize] += 1;
            }
            let kind = if method.is_lower() {
                DistributionKind::Ccdf
            } else {
                DistributionKind::Cdf
            };
            let mut counts = histogram;
            match kind {
                DistributionKind::Ccdf => {
                    for k in (0..counts.len() - 1).rev() {
                        counts[k] += counts[k + 1];
                    }
                }
                DistributionKind::Cdf => {
                    for k in 1..counts.len() {
                        counts[k] += counts[k - 1];
                    }
                }
            }
            let total = values.len();
            DistributionSummary {
                method,
                kind,
                total,
                points: counts
                    .into_iter()
                    .enumerate()
                    .map(|(k, count)| DistributionPoint {
                        k: k as u64,
                        count,
                        fraction: count as f64 / total as f64,
                    })
                    .collect(),
            }
        })
        .collect())
}

/// Complete history and outcome of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport<I> {
    pub state: BoundsState,
    pub records: Vec<BoundRecord<I>>,
    pub stop_reason: StopReason,
    /// Wall-clock time of each iteration; not serialized so that reports of
    /// identical runs compare equal byte for byte.
    #[serde(skip)]
    pub iteration_times: Vec<Duration>,
    pub distributions: Vec<DistributionSummary>,
}

impl<I: VertexId> RunReport<I> {
    pub fn best_lower(&self) -> Option<u64> {
        self.state.best_lower()
    }

    pub fn best_upper(&self) -> Option<u64> {
        self.state.best_upper()
    }

    pub fn gap(&self) -> Option<u64> {
        self.state.gap()
    }

    /// Record holding the first occurrence of `method`'s best value.
    pub fn best_record(&self, method: Method) -> Option<&BoundRecord<I>> {
        let stats = self.state.method(method)?;
        self.records
            .iter()
            .find(|r| r.method == method && r.value == stats.best && r.iteration == stats.first_hit)
    }

    pub fn total_time(&self) -> Duration {
        self.iteration_times.iter().sum()
    }
}

/// Per-method CDF (upper bounds) or CCDF (lower bounds) of a run's values.
pub fn distributions<I: VertexId>(report: &RunReport<I>) -> Result<Vec<DistributionSummary>> {
    summarize_samples(report.records.iter().map(|r| (r.method, r.value)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineOptions {
    /// Iteration guard; `None` means `10 n`.
    pub max_iterations: Option<usize>,
    /// Worker threads; `1` runs strictly sequentially.
    pub workers: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            max_iterations: None,
            workers: 1,
        }
    }
}

impl EngineOptions {
    fn guard(&self, n: usize) -> usize {
        self.max_iterations
            .unwrap_or_else(|| DEFAULT_GUARD_PER_VERTEX.saturating_mul(n).max(1))
    }

    fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::InvalidOptions("at least one worker is required".into()));
        }
        if self.max_iterations == Some(0) {
            return Err(Error::InvalidOptions("iteration guard must be at least 1".into()));
        }
        Ok(())
    }
}

type Task<I> = (Method, I);

struct Outcome<I> {
    bounds: Vec<BoundValue<I>>,
    elapsed: Duration,
}

fn evaluate_iteration<I: VertexId>(
    bounder: &mut Bounder<I>,
    g: &CsrGraph<I>,
    tasks: &[Task<I>],
) -> Result<Outcome<I>> {
    let started = Instant::now();
    let bounds = tasks
        .iter()
        .map(|&(method, start)| bounder.evaluate(method, g, start))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome {
        bounds,
        elapsed: started.elapsed(),
    })
}

fn drive<I: VertexId>(
    g: &CsrGraph<I>,
    mut next_tasks: impl FnMut() -> Vec<Task<I>>,
    criterion: StoppingCriterion,
    limit: usize,
    workers: usize,
) -> Result<RunReport<I>> {
    criterion.validate()?;
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let pool = if workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| Error::InvalidOptions(e.to_string()))?,
        )
    } else {
        None
    };

    let mut state = BoundsState::new();
    let mut records = Vec::new();
    let mut iteration_times = Vec::new();
    let mut bounder = Bounder::new();

    let stop_reason = loop {
        if criterion.is_met(&state) {
            break StopReason::CriterionMet;
        }
        if state.iterations() >= limit {
            break StopReason::MaxIterations;
        }
        let mut batch = workers.min(limit - state.iterations());
        if let Some(remaining) = criterion.remaining(&state) {
            batch = batch.min(remaining);
        }
        let planned: Vec<Vec<Task<I>>> = (0..batch).map(|_| next_tasks()).collect();
        let outcomes = match &pool {
            None => planned
                .iter()
                .map(|tasks| evaluate_iteration(&mut bounder, g, tasks))
                .collect::<Result<Vec<_>>>()?,
            Some(pool) => pool.install(|| {
                planned
                    .par_iter()
                    .map_init(Bounder::new, |b, tasks| evaluate_iteration(b, g, tasks))
                    .collect::<Result<Vec<_>>>()
            })?,
        };
        for outcome in outcomes {
            let iteration = state.iterations() + 1;
            for bound in outcome.bounds {
                state.observe(iteration, bound.method, bound.value);
                records.push(BoundRecord {
                    iteration,
                    method: bound.method,
                    start: bound.start,
                    value: bound.value,
                    witness: bound.witness,
                });
            }
            state.finish_iteration();
            iteration_times.push(outcome.elapsed);
        }
    };

    let distributions = summarize_samples(records.iter().map(|r: &BoundRecord<I>| (r.method, r.value)))?;
    Ok(RunReport {
        state,
        records,
        stop_reason,
        iteration_times,
        distributions,
    })
}

/// Default behaviour: each iteration runs one double sweep from a uniformly
/// random vertex and one tree bound from the next vertex in decreasing
/// degree order, until `stop` holds or the guard is reached.
pub fn run_auto<I: VertexId>(
    g: &CsrGraph<I>,
    stop: StoppingCriterion,
    seed: u64,
) -> Result<RunReport<I>> {
    run_auto_with(g, stop, seed, &EngineOptions::default())
}

pub fn run_auto_with<I: VertexId>(
    g: &CsrGraph<I>,
    stop: StoppingCriterion,
    seed: u64,
    options: &EngineOptions,
) -> Result<RunReport<I>> {
    options.validate()?;
    let mut random = StartStrategy::new(StrategyKind::UniformRandom { seed }, g)?;
    let mut by_degree = StartStrategy::new(StrategyKind::DegreeDescending { seed }, g)?;
    drive(
        g,
        || {
            vec![
                (Method::DoubleSweepLower, random.next_vertex()),
                (Method::TreeUpper, by_degree.next_vertex()),
            ]
        },
        stop,
        options.guard(g.vertex_count()),
        options.workers,
    )
}

/// Runs exactly `iterations` invocations of one heuristic.
pub fn run_single_method<I: VertexId>(
    g: &CsrGraph<I>,
    method: Method,
    strategy: StrategyKind,
    iterations: usize,
) -> Result<RunReport<I>> {
    run_single_method_with(g, method, strategy, iterations, &EngineOptions::default())
}

/// As [`run_single_method`]; only `workers` is taken from `options`.
pub fn run_single_method_with<I: VertexId>(
    g: &CsrGraph<I>,
    method: Method,
    strategy: StrategyKind,
    iterations: usize,
    options: &EngineOptions,
) -> Result<RunReport<I>> {
    options.validate()?;
    let mut starts = StartStrategy::new(strategy, g)?;
    drive(
        g,
        || vec![(method, starts.next_vertex())],
        StoppingCriterion::FixedIterations(iterations),
        iterations,
        options.workers,
    )
}

/// Runs one heuristic from each of the given start vertices, in order.
/// Iterating the double sweep over every vertex this way yields the exact
/// diameter at `Θ(nm)` cost.
pub fn run_on_starts<I: VertexId>(
    g: &CsrGraph<I>,
    method: Method,
    starts: &[I],
) -> Result<RunReport<I>> {
    let mut next = starts.iter().copied();
    drive(
        g,
        || vec![(method, next.next().expect("bounded by the start count"))],
        StoppingCriterion::FixedIterations(starts.len()),
        starts.len(),
        1,
    )
}
