use anyhow::{Context, Result};
use clap::Args;
use kegraph::generators::{fixture_names, CorpusDescriptor, Parity};

/// Corpus selection shared by `verify` and `search`. Sources combine in the
/// order exhaustive, random (as given), family, fixture.
#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// All labeled graphs with n from --min-n up to N.
    #[arg(long, value_name = "N")]
    pub exhaustive_n: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "exhaustive_n")]
    pub min_n: usize,
    /// Random graphs, `n=..,p=..,count=..[,seed=..]`. Repeatable.
    #[arg(long, value_name = "SPEC")]
    pub random: Vec<String>,
    /// Seed for random specs that do not carry their own.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Named family (cycle, path, complete, ...).
    #[arg(long, value_name = "NAME")]
    pub family: Option<String>,
    #[arg(long, requires = "family")]
    pub min: Option<usize>,
    #[arg(long, requires = "family")]
    pub max: Option<usize>,
    #[arg(long, requires = "family", conflicts_with = "even")]
    pub odd: bool,
    #[arg(long, requires = "family")]
    pub even: bool,
    /// Comma-separated fixture names, or `all`.
    #[arg(long, value_name = "NAMES")]
    pub fixture: Option<String>,
}

/// A malformed flag, reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

macro_rules! usage {
    ($($arg:tt)*) => {
        return Err(UsageError(format!($($arg)*)).into())
    };
}

fn parse_random(spec: &str, default_seed: Option<u64>) -> Result<CorpusDescriptor> {
    let (mut n, mut p, mut count, mut seed) = (None, None, None, default_seed);
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((key, value)) = part.split_once('=') else {
            usage!("random spec `{spec}`: expected key=value, got `{part}`");
        };
        let bad = || UsageError(format!("random spec `{spec}`: bad value for {key}"));
        match key.trim() {
            "n" => n = Some(value.parse().map_err(|_| bad())?),
            "p" => p = Some(value.parse().map_err(|_| bad())?),
            "count" => count = Some(value.parse().map_err(|_| bad())?),
            "seed" => seed = Some(value.parse().map_err(|_| bad())?),
            other => usage!("random spec `{spec}`: unknown key `{other}`"),
        }
    }
    let (Some(n), Some(p), Some(count)) = (n, p, count) else {
        usage!("random spec `{spec}` needs n, p and count");
    };
    let Some(seed) = seed else {
        usage!("random spec `{spec}` has no seed; pass seed=.. or --seed");
    };
    Ok(CorpusDescriptor::Random { n, p, count, seed })
}

impl CorpusArgs {
    pub fn descriptors(&self) -> Result<Vec<CorpusDescriptor>> {
        let mut out = Vec::new();
        if let Some(max_n) = self.exhaustive_n {
            out.push(CorpusDescriptor::Exhaustive {
                min_n: self.min_n,
                max_n,
            });
        }
        for spec in &self.random {
            out.push(parse_random(spec, self.seed)?);
        }
        if let Some(name) = &self.family {
            let parity = match (self.odd, self.even) {
                (true, _) => Parity::Odd,
                (_, true) => Parity::Even,
                _ => Parity::Any,
            };
            let Some(max) = self.max else {
                usage!("--family needs --max");
            };
            out.push(CorpusDescriptor::Family {
                name: name.clone(),
                min: self.min.unwrap_or(0),
                max,
                parity,
            });
        }
        if let Some(list) = &self.fixture {
            let names: Vec<String> = if list == "all" {
                fixture_names().map(String::from).collect()
            } else {
                list.split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect()
            };
            out.push(CorpusDescriptor::Fixture { names });
        }
        if out.is_empty() {
            usage!("no corpus selected; use --exhaustive-n, --random, --family or --fixture");
        }
        for d in &out {
            d.validate()
                .map_err(|e| UsageError(e.to_string()))
                .with_context(|| "invalid corpus descriptor")?;
        }
        Ok(out)
    }
}
