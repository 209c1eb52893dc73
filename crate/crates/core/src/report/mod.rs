//! Run configuration, verification reports and their serializations.

pub mod anchors;
pub mod quantity;
mod render;
mod runners;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::census::exec;
use crate::error::{Error, Result};
use crate::numtheory;
pub use quantity::{Quantity, Wide};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_IMPLEMENTATION: i32 = 3;
pub const EXIT_UNVERIFIED: i32 = 4;

/// Default number of samples in sample mode.
pub const DEFAULT_SAMPLE_SIZE: u64 = 100_000;

macro_rules! text_enum {
    ($name:ident { $($variant:ident => $text:literal $(| $alias:literal)*),+ $(,)? }) => {
        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(&self) -> &'static str {
                match self { $($name::$variant => $text),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($text $(| $alias)* => Ok($name::$variant),)+
                    _ => Err(Error::Parse(format!(
                        "unknown {} '{s}' (expected one of: {})",
                        stringify!($name).to_lowercase(),
                        [$($text),+].join(", ")
                    ))),
                }
            }
        }
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Fibers,
    Coprime,
    Sigma,
    Toeplitz,
    Splitting,
    Pointed,
    Bounds,
    Binomial,
    Trinomial,
    Nilpotent,
    All,
}

text_enum!(Command {
    Fibers => "fibers",
    Coprime => "coprime",
    Sigma => "sigma",
    Toeplitz => "toeplitz",
    Splitting => "splitting",
    Pointed => "pointed",
    Bounds => "bounds",
    Binomial => "binomial",
    Trinomial => "trinomial",
    Nilpotent => "nilpotent",
    All => "all",
});

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sample,
}

text_enum!(Mode { Exhaustive => "exhaustive", Sample => "sample" });

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Md,
}

text_enum!(Format { Json => "json", Csv => "csv", Md => "md" | "markdown" });

/// Test hook: perturbs every formula value of one claim kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Fault {
    Conjectured,
    Proven,
}

text_enum!(Fault { Conjectured => "conjecture" | "conjectured", Proven => "theorem" | "proven" });

/// Whether a formula is established or conjectural; decides the failure status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Proven,
    Conjectured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    CounterexampleCandidate,
    ImplementationError,
    UnverifiedSampled,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::CounterexampleCandidate => "counterexample_candidate",
            Status::ImplementationError => "implementation_error",
            Status::UnverifiedSampled => "unverified_sampled",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub q: Option<u64>,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub r: Option<u32>,
    pub d: Option<u32>,
    pub mode: Mode,
    pub sample_size: u64,
    pub seed: u64,
    pub format: Format,
    pub ceiling: u64,
    /// Worker threads; `None` uses every core. Not part of the report.
    pub workers: Option<usize>,
    pub fault: Option<Fault>,
    /// Record wall-clock time in the report.
    pub timing: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            q: None,
            m: None,
            n: None,
            r: None,
            d: None,
            mode: Mode::Exhaustive,
            sample_size: DEFAULT_SAMPLE_SIZE,
            seed: 0,
            format: Format::Json,
            ceiling: exec::DEFAULT_EXHAUSTIVE_CEILING,
            workers: None,
            fault: None,
            timing: false,
        }
    }

    /// Parameters each command takes, in `q, m, n, r, d` order.
    pub fn parameters(command: Command) -> &'static [&'static str] {
        match command {
            Command::Fibers | Command::Splitting | Command::Pointed | Command::Bounds => &["q", "m", "n"],
            Command::Coprime => &["q", "n", "r"],
            Command::Sigma | Command::Toeplitz | Command::Trinomial => &["q", "n"],
            Command::Binomial => &["q", "d"],
            Command::Nilpotent => &["q", "m"],
            Command::All => &[],
        }
    }

    /// Checks parameter applicability before any work starts.
    pub fn validate(&self) -> Result<()> {
        let wanted = Self::parameters(self.command);
        let given = [
            ("q", self.q.is_some()),
            ("m", self.m.is_some()),
            ("n", self.n.is_some()),
            ("r", self.r.is_some()),
            ("d", self.d.is_some()),
        ];
        for (name, present) in given {
            match (wanted.contains(&name), present) {
                (true, false) => {
                    return Err(Error::InvalidConfig(format!("{} requires --{name}", self.command)));
                }
                (false, true) => {
                    return Err(Error::InvalidConfig(format!("{} does not take --{name}", self.command)));
                }
                _ => {}
            }
        }
        if let Some(q) = self.q {
            numtheory::prime_power(q).map_err(|_| Error::InvalidConfig(format!("q = {q} is not a prime power")))?;
            if q > crate::gf::MAX_FIELD_ORDER {
                return Err(Error::InvalidConfig(format!("q = {q} is too large")));
            }
        }
        for (name, v) in [("m", self.m), ("n", self.n), ("r", self.r)] {
            if v == Some(0) {
                return Err(Error::InvalidConfig(format!("--{name} must be positive")));
            }
        }
        if matches!(self.d, Some(d) if d < 2) {
            return Err(Error::InvalidConfig("--d must be at least 2".into()));
        }
        if self.ceiling == 0 {
            return Err(Error::InvalidConfig("--ceiling must be positive".into()));
        }
        if self.mode == Mode::Sample {
            if self.command != Command::Fibers {
                return Err(Error::InvalidConfig(format!("{} has no sample mode", self.command)));
            }
            if self.sample_size == 0 {
                return Err(Error::InvalidConfig("--sample-size must be positive".into()));
            }
        }
        if self.workers == Some(0) {
            return Err(Error::InvalidConfig("--workers must be positive".into()));
        }
        Ok(())
    }
}

/// Configuration as recorded in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    pub mode: Mode,
    pub sample_size: Wide,
    pub seed: Wide,
    pub ceiling: Wide,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

impl From<&RunConfig> for ConfigEcho {
    fn from(c: &RunConfig) -> Self {
        ConfigEcho {
            command: c.command,
            q: c.q,
            m: c.m,
            n: c.n,
            r: c.r,
            d: c.d,
            mode: c.mode,
            sample_size: Wide(c.sample_size as i128),
            seed: Wide(c.seed as i128),
            ceiling: Wide(c.ceiling as i128),
            fault: c.fault,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub paper_anchor: String,
    pub claim: Claim,
    pub formula_value: Quantity,
    pub observed_value: Quantity,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub config: ConfigEcho,
    pub checks: Vec<CheckRecord>,
    pub notes: Vec<String>,
    pub ceiling_exceeded: bool,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl VerificationReport {
    pub fn empty(config: &RunConfig) -> Self {
        VerificationReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config: config.into(),
            checks: Vec::new(),
            notes: Vec::new(),
            ceiling_exceeded: false,
            exit_code: EXIT_OK,
            runtime_ms: None,
        }
    }

    /// 3 over 2 over 4 over 0.
    pub fn compute_exit_code(&self) -> i32 {
        let has = |s: Status| self.checks.iter().any(|c| c.status == s);
        if has(Status::ImplementationError) {
            EXIT_IMPLEMENTATION
        } else if has(Status::CounterexampleCandidate) {
            EXIT_COUNTEREXAMPLE
        } else if self.ceiling_exceeded || has(Status::UnverifiedSampled) {
            EXIT_UNVERIFIED
        } else {
            EXIT_OK
        }
    }

    pub fn serialize(&self, format: Format) -> Result<Vec<u8>> {
        match format {
            Format::Json => render::json(self),
            Format::Csv => render::csv(self),
            Format::Md => Ok(render::markdown(self).into_bytes()),
        }
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        serde_json::from_slice(bytes).map_err(|e| Error::Parse(format!("report JSON: {e}")))
    }
}

/// Executes the configured census on a pool of `config.workers` threads.
pub fn run(config: &RunConfig) -> Result<VerificationReport> {
    config.validate()?;
    let start = Instant::now();
    let mut report = exec::with_workers(config.workers, || runners::execute(config))??;
    report.exit_code = report.compute_exit_code();
    if config.timing {
        report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(command: Command) -> RunConfig {
        RunConfig::new(command)
    }

    #[test]
    fn validation() {
        let mut c = cfg(Command::Fibers);
        assert!(c.validate().is_err());
        c.q = Some(2);
        c.m = Some(2);
        c.n = Some(2);
        assert!(c.validate().is_ok());
        c.r = Some(2);
        assert!(c.validate().is_err());
        c.r = None;
        c.q = Some(6);
        assert!(c.validate().is_err());
        c.q = Some(2);
        c.mode = Mode::Sample;
        assert!(c.validate().is_ok());
        let mut t = cfg(Command::Toeplitz);
        t.q = Some(2);
        t.n = Some(2);
        t.mode = Mode::Sample;
        assert!(t.validate().is_err());
        let mut a = cfg(Command::All);
        assert!(a.validate().is_ok());
        a.q = Some(2);
        assert!(a.validate().is_err());
        let mut b = cfg(Command::Binomial);
        b.q = Some(3);
        b.d = Some(1);
        assert!(b.validate().is_err());
    }

    #[test]
    fn text_enums() {
        for c in Command::ALL {
            assert_eq!(c.as_str().parse::<Command>().unwrap(), *c);
        }
        assert_eq!("markdown".parse::<Format>().unwrap(), Format::Md);
        assert_eq!("theorem".parse::<Fault>().unwrap(), Fault::Proven);
        assert!("nope".parse::<Mode>().is_err());
    }

    fn record(status: Status) -> CheckRecord {
        CheckRecord {
            name: "x".into(),
            paper_anchor: "Eq. TGLn".into(),
            claim: Claim::Proven,
            formula_value: Quantity::int(1),
            observed_value: Quantity::int(1),
            status,
            detail: None,
        }
    }

    #[test]
    fn exit_code_priority() {
        let mut r = VerificationReport::empty(&cfg(Command::All));
        assert_eq!(r.compute_exit_code(), EXIT_OK);
        r.ceiling_exceeded = true;
        assert_eq!(r.compute_exit_code(), EXIT_UNVERIFIED);
        r.checks.push(record(Status::UnverifiedSampled));
        r.checks.push(record(Status::CounterexampleCandidate));
        assert_eq!(r.compute_exit_code(), EXIT_COUNTEREXAMPLE);
        r.checks.push(record(Status::ImplementationError));
        assert_eq!(r.compute_exit_code(), EXIT_IMPLEMENTATION);
    }

    #[test]
    fn empty_report_serializes() {
        let r = VerificationReport::empty(&cfg(Command::All));
        let json = r.serialize(Format::Json).unwrap();
        assert_eq!(VerificationReport::from_json(&json).unwrap(), r);
        let csv = String::from_utf8(r.serialize(Format::Csv).unwrap()).unwrap();
        assert_eq!(csv, "name,paper_anchor,formula,observed,status\n");
        let md = String::from_utf8(r.serialize(Format::Md).unwrap()).unwrap();
        assert!(md.contains("| name | anchor | formula | observed | status |"));
    }

    #[test]
    fn statuses_follow_values() {
        let mut c = cfg(Command::Toeplitz);
        c.q = Some(3);
        c.n = Some(2);
        let r = run(&c).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].observed_value, Quantity::int(18));
        assert_eq!(r.exit_code, EXIT_OK);
        c.fault = Some(Fault::Proven);
        let r = run(&c).unwrap();
        assert_eq!(r.checks[0].status, Status::ImplementationError);
        assert_eq!(r.exit_code, EXIT_IMPLEMENTATION);
        c.fault = Some(Fault::Conjectured);
        assert_eq!(run(&c).unwrap().exit_code, EXIT_OK);
    }

    #[test]
    fn conjectured_fault_gives_counterexample() {
        let mut c = cfg(Command::Pointed);
        (c.q, c.m, c.n) = (Some(2), Some(3), Some(2));
        let r = run(&c).unwrap();
        assert!(r.checks.iter().all(|x| x.status == Status::Match && x.claim == Claim::Conjectured));
        c.fault = Some(Fault::Conjectured);
        let r = run(&c).unwrap();
        assert_eq!(r.exit_code, EXIT_COUNTEREXAMPLE);
        assert!(r.checks.iter().all(|x| x.status == Status::CounterexampleCandidate));
    }

    #[test]
    fn every_record_anchored() {
        let r = run(&cfg(Command::All)).unwrap();
        assert_eq!(r.exit_code, EXIT_OK);
        for c in &r.checks {
            assert!(!c.paper_anchor.is_empty(), "{}", c.name);
            assert_eq!(c.status == Status::Match, c.formula_value == c.observed_value, "{}", c.name);
        }
        let json = r.serialize(Format::Json).unwrap();
        assert_eq!(VerificationReport::from_json(&json).unwrap(), r);
    }

    #[test]
    fn sample_mode_is_unverified() {
        let mut c = cfg(Command::Fibers);
        (c.q, c.m, c.n) = (Some(2), Some(2), Some(2));
        c.mode = Mode::Sample;
        c.sample_size = 5000;
        c.seed = 11;
        let r = run(&c).unwrap();
        assert_eq!(r.exit_code, EXIT_UNVERIFIED);
        assert!(r.checks.iter().all(|x| x.status == Status::UnverifiedSampled));
        assert_eq!(run(&c).unwrap(), r);
    }
}
