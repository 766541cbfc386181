//! End-to-end run: ingest, local counts, five-vertex counts, six-vertex
//! counts, optional brute-force cross-check, and the JSON/CSV report.

use std::fmt::Write as _;
use std::path::Path;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::five::{count_five_reference, count_five_scalable, FiveMotifVector, FiveSource};
use crate::graph::Graph;
use crate::oracle::{
    count_noninduced_guarded, Catalog, Comparison, MotifFamily, VerificationReport,
};
use crate::primitives::LocalCounts;
use crate::six::{count_six, SixMotifVector, SIX_MOTIFS};

/// Where the five-vertex counts come from.
#[derive(Clone, Debug)]
pub enum FiveInput {
    Scalable,
    Reference,
    /// Counts supplied by the caller, e.g. parsed from a counts file.
    Given(Box<FiveMotifVector>),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub five: FiveInput,
    /// Cross-check every count against brute force when `n ≤ max_oracle_n`.
    pub oracle_check: bool,
    pub max_oracle_n: usize,
    /// Path of the five-vertex counts file, echoed in the report.
    pub five_counts_path: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            five: FiveInput::Scalable,
            oracle_check: false,
            max_oracle_n: 12,
            five_counts_path: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct StageTimes {
    pub ingest: Duration,
    pub primitives: Duration,
    pub five: Duration,
    pub six: Duration,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub dataset: String,
    pub n: usize,
    pub m: usize,
    pub five_source: FiveSource,
    pub six: SixMotifVector,
    pub times: StageTimes,
    pub oracle: Option<VerificationReport>,
    pub oracle_check: bool,
    pub max_oracle_n: usize,
    pub five_counts_path: Option<String>,
}

/// Reads an edge list from `path` and runs it; ingest time is recorded.
pub fn run_path(path: &Path, cfg: &RunConfig) -> Result<RunReport> {
    let start = Instant::now();
    let file = std::fs::File::open(path)?;
    let g = Graph::read_edge_list(std::io::BufReader::new(file))?;
    let ingest = start.elapsed();
    let dataset = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let mut r = run(&dataset, &g, cfg)?;
    r.times.ingest = ingest;
    Ok(r)
}

pub fn run(dataset: &str, g: &Graph, cfg: &RunConfig) -> Result<RunReport> {
    let mut times = StageTimes::default();

    let start = Instant::now();
    let lc = LocalCounts::compute(g)?;
    times.primitives = start.elapsed();

    let start = Instant::now();
    let f5 = match &cfg.five {
        FiveInput::Scalable => count_five_scalable(g, &lc)?,
        FiveInput::Reference => count_five_reference(g)?,
        FiveInput::Given(v) => (**v).clone(),
    };
    times.five = start.elapsed();

    let six = count_six(g, &lc, &f5)?;
    times.six = six.stage_time;

    let oracle = if cfg.oracle_check {
        if g.n() > cfg.max_oracle_n {
            return Err(Error::SizeGuard {
                what: "oracle check (raise --max-oracle-n or drop --oracle-check)",
                n: g.n(),
                limit: cfg.max_oracle_n,
            });
        }
        Some(cross_check(dataset, g, &f5, &six, cfg.max_oracle_n)?)
    } else {
        None
    };

    Ok(RunReport {
        dataset: dataset.to_string(),
        n: g.n(),
        m: g.m(),
        five_source: f5.source,
        six,
        times,
        oracle,
        oracle_check: cfg.oracle_check,
        max_oracle_n: cfg.max_oracle_n,
        five_counts_path: cfg.five_counts_path.clone(),
    })
}

fn cross_check(
    name: &str,
    g: &Graph,
    f5: &FiveMotifVector,
    six: &SixMotifVector,
    guard: usize,
) -> Result<VerificationReport> {
    let cat = Catalog::standard();
    let mut report = VerificationReport::default();
    for (index, v) in f5.populated() {
        report.comparisons.push(Comparison {
            graph: name.to_string(),
            family: MotifFamily::Five,
            index,
            formula: v,
            oracle: count_noninduced_guarded(g, cat.five_pattern(index), guard)?,
        });
    }
    for index in 1..=SIX_MOTIFS {
        report.comparisons.push(Comparison {
            graph: name.to_string(),
            family: MotifFamily::Six,
            index,
            formula: six.get(index),
            oracle: count_noninduced_guarded(g, cat.six_pattern(index), guard)?,
        });
    }
    Ok(report)
}

impl RunReport {
    /// Counts are decimal strings so 128-bit values survive JSON readers.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut six = Map::new();
        for i in 1..=SIX_MOTIFS {
            six.insert(format!("N{i}"), Value::String(self.six.get(i).to_string()));
        }
        let mut out = json!({
            "dataset": self.dataset,
            "n": self.n,
            "m": self.m,
            "six_motifs": six,
            "five_source": self.five_source.to_string(),
        });
        if timing {
            out["timings"] = json!({
                "ingest": self.times.ingest.as_secs_f64(),
                "primitives": self.times.primitives.as_secs_f64(),
                "five": self.times.five.as_secs_f64(),
                "six": self.times.six.as_secs_f64(),
            });
        }
        out["config"] = json!({
            "five_counts": self.five_counts_path,
            "oracle_check": self.oracle_check,
            "max_oracle_n": self.max_oracle_n,
        });
        if let Some(r) = &self.oracle {
            let mism: Vec<Value> = r
                .mismatches()
                .iter()
                .map(|m| {
                    let family = match m.family {
                        MotifFamily::Five => "five",
                        MotifFamily::Six => "six",
                    };
                    json!({
                        "family": family,
                        "index": m.index,
                        "formula": m.formula.to_string(),
                        "oracle": m.oracle.to_string(),
                    })
                })
                .collect();
            out["oracle"] = json!({
                "status": if r.all_match() { "match" } else { "mismatch" },
                "comparisons": r.comparisons.len(),
                "mismatches": mism,
            });
        }
        out
    }

    /// One header row and one value row.
    pub fn to_csv(&self, timing: bool) -> String {
        let mut head = String::from("dataset,n,m,five_source");
        let mut row = format!(
            "{},{},{},{}",
            self.dataset, self.n, self.m, self.five_source
        );
        for i in 1..=SIX_MOTIFS {
            let _ = write!(head, ",N{i}");
            let _ = write!(row, ",{}", self.six.get(i));
        }
        if timing {
            head.push_str(",ingest_s,primitives_s,five_s,six_s");
            let t = &self.times;
            let _ = write!(
                row,
                ",{:.6},{:.6},{:.6},{:.6}",
                t.ingest.as_secs_f64(),
                t.primitives.as_secs_f64(),
                t.five.as_secs_f64(),
                t.six.as_secs_f64()
            );
        }
        format!("{head}\n{row}\n")
    }

    pub fn oracle_ok(&self) -> bool {
        self.oracle.as_ref().is_none_or(|r| r.all_match())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn k6_report() {
        let cfg = RunConfig {
            oracle_check: true,
            ..RunConfig::default()
        };
        let r = run("k6", &complete(6), &cfg).unwrap();
        let j = r.to_json(false);
        assert_eq!(j["six_motifs"]["N1"], "6");
        assert_eq!(j["six_motifs"]["N16"], "90");
        assert_eq!(j["oracle"]["status"], "match");
        assert!(j.get("timings").is_none());
        assert!(r.oracle_ok());
    }

    #[test]
    fn oracle_guard_exceeded() {
        let cfg = RunConfig {
            oracle_check: true,
            max_oracle_n: 5,
            ..RunConfig::default()
        };
        assert!(matches!(
            run("p6", &path(6), &cfg),
            Err(Error::SizeGuard { n: 6, limit: 5, .. })
        ));
    }

    #[test]
    fn csv_shape() {
        let r = run("p6", &path(6), &RunConfig::default()).unwrap();
        let csv = r.to_csv(true);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].split(',').count(), lines[1].split(',').count());
        assert!(lines[1].starts_with("p6,6,5,scalable-engine,"));
    }
}
