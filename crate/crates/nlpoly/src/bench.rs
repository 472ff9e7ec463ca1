//! Timing and operation-count harness over seeded random functions.
//!
//! For each variable count the same seeded batch of functions is fed to
//! every requested method; per-function wall times come from the monotonic
//! clock and operation counts from one instrumented run (they do not depend
//! on the input for the instrumented methods). With a fixed seed the CSV
//! output is byte-identical across runs except for the timing column.

use std::hint::black_box;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::method::MethodRegistry;
use crate::rng::SplitMix64;
use crate::truth_table::TruthTable;

/// One CSV row: mean wall time and operation counts for one (n, method).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub n: u32,
    pub method: String,
    pub trials: u32,
    pub mean_ns: u64,
    pub sums: u64,
    pub doublings: u64,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n_min: u32,
    pub n_max: u32,
    pub trials: u32,
    pub seed: u64,
    pub methods: Vec<String>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n_min: 6,
            n_max: 12,
            trials: 1000,
            seed: 0,
            methods: vec!["fwt".into(), "nlp".into()],
        }
    }
}

pub const CSV_HEADER: &str = "n,method,trials,mean_ns,sums,doublings";

pub fn csv_row(r: &BenchRecord) -> String {
    format!(
        "{},{},{},{},{},{}",
        r.n, r.method, r.trials, r.mean_ns, r.sums, r.doublings
    )
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

/// Runs the harness; `progress` sees each record as it is produced.
pub fn run_with_progress(
    registry: &MethodRegistry,
    config: &BenchConfig,
    mut progress: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>> {
    if config.n_min < 1 || config.n_min > config.n_max {
        return Err(Error::Invalid(format!(
            "need 1 <= n_min <= n_max, got {}..{}",
            config.n_min, config.n_max
        )));
    }
    if config.trials < 1 {
        return Err(Error::Invalid("trials must be >= 1".into()));
    }
    if config.methods.is_empty() {
        return Err(Error::Invalid("no methods requested".into()));
    }
    for name in &config.methods {
        let method = registry.get(name)?;
        if config.n_max > method.max_vars() {
            return Err(Error::SizeLimit(format!(
                "method `{name}` is capped at n<={}, requested n_max={}",
                method.max_vars(),
                config.n_max
            )));
        }
    }

    let mut rng = SplitMix64::new(config.seed);
    let mut records = Vec::new();
    for n in config.n_min..=config.n_max {
        let tables: Vec<TruthTable> = (0..config.trials)
            .map(|_| TruthTable::random(&mut rng, n))
            .collect();
        for name in &config.methods {
            let method = registry.get(name)?;
            let (_, counters) = method.counted_nonlinearity(&tables[0])?;
            // Short warm-up so allocator pools and clock frequency settle
            // before the timed loop.
            for tt in tables.iter().take(32) {
                black_box(method.nonlinearity(tt)?);
            }
            let mut total_ns: u128 = 0;
            for tt in &tables {
                let start = Instant::now();
                let value = method.nonlinearity(tt)?;
                total_ns += start.elapsed().as_nanos();
                black_box(value);
            }
            let record = BenchRecord {
                n,
                method: name.clone(),
                trials: config.trials,
                mean_ns: (total_ns / u128::from(config.trials)).max(1) as u64,
                sums: counters.sums,
                doublings: counters.doublings,
            };
            progress(&record);
            records.push(record);
        }
    }
    Ok(records)
}

pub fn run(registry: &MethodRegistry, config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    run_with_progress(registry, config, |_| {})
}

/// log2 of the n -> n+1 cost ratio an O(n 2^n) algorithm predicts.
pub fn theoretical_growth(n: u32) -> f64 {
    let num = f64::from(n + 1) * (1u64 << (n + 1)) as f64;
    let den = f64::from(n) * (1u64 << n) as f64;
    (num / den).log2()
}

/// Measured log2(t(n+1)/t(n)) per method, one row per consecutive pair.
#[derive(Debug, Clone)]
pub struct GrowthRow {
    pub from_n: u32,
    pub theory: f64,
    /// (method, measured ratio), in the order methods were requested.
    pub measured: Vec<(String, f64)>,
}

pub fn growth_table(records: &[BenchRecord]) -> Vec<GrowthRow> {
    let mut methods: Vec<&str> = Vec::new();
    for r in records {
        if !methods.contains(&r.method.as_str()) {
            methods.push(&r.method);
        }
    }
    let mut ns: Vec<u32> = records.iter().map(|r| r.n).collect();
    ns.sort_unstable();
    ns.dedup();
    let mean_of = |n: u32, method: &str| {
        records
            .iter()
            .find(|r| r.n == n && r.method == method)
            .map(|r| r.mean_ns)
    };
    let mut rows = Vec::new();
    for pair in ns.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if b != a + 1 {
            continue;
        }
        let mut measured = Vec::new();
        for &method in &methods {
            if let (Some(t0), Some(t1)) = (mean_of(a, method), mean_of(b, method)) {
                measured.push((method.to_string(), (t1 as f64 / t0 as f64).log2()));
            }
        }
        rows.push(GrowthRow {
            from_n: a,
            theory: theoretical_growth(a),
            measured,
        });
    }
    rows
}
