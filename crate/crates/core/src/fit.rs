//! Least-squares runtime model: seconds ≈ intercept + slope · (edges in
//! millions).

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    /// Seconds per million edges.
    pub slope: f64,
    /// Seconds.
    pub intercept: f64,
    pub points: Vec<(f64, f64)>,
}

impl FitResult {
    pub fn predict(&self, edges_millions: f64) -> f64 {
        self.intercept + self.slope * edges_millions
    }
}

/// Ordinary least squares over `(edges in millions, seconds)` points.
pub fn fit_runtime_model(points: &[(f64, f64)]) -> Result<FitResult> {
    if points.len() < 2 {
        return Err(Error::DegenerateFit(format!(
            "need at least 2 points, got {}",
            points.len()
        )));
    }
    if points.iter().any(|(a, b)| !a.is_finite() || !b.is_finite()) {
        return Err(Error::DegenerateFit("non-finite coordinate".into()));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateFit("all abscissae are identical".into()));
    }
    let slope = sxy / sxx;
    Ok(FitResult {
        slope,
        intercept: my - slope * mx,
        points: points.to_vec(),
    })
}

/// Parses an edge count such as `2900000`, `2.9M` or `212.9K` into millions.
pub fn parse_edges_millions(s: &str) -> Option<f64> {
    let s = s.trim();
    let (num, scale) = match s.chars().last()? {
        'M' | 'm' => (&s[..s.len() - 1], 1.0),
        'K' | 'k' => (&s[..s.len() - 1], 1e-3),
        'B' | 'b' | 'G' | 'g' => (&s[..s.len() - 1], 1e3),
        _ => (s, 1e-6),
    };
    let v: f64 = num.trim().parse().ok()?;
    (v.is_finite() && v >= 0.0).then_some(v * scale)
}

/// A `name,edges,seconds` table row.
#[derive(Clone, Debug, PartialEq)]
pub struct TimingRow {
    pub name: String,
    pub edges_millions: f64,
    pub seconds: f64,
}

pub fn read_timing_table<R: std::io::Read>(reader: R) -> Result<Vec<TimingRow>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut rows = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let line = i + 2;
        let rec = rec.map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
        if rec.len() != 3 {
            return Err(Error::Parse {
                line,
                msg: format!("expected name,edges,seconds; got {} fields", rec.len()),
            });
        }
        let edges = parse_edges_millions(&rec[1]).ok_or_else(|| Error::Parse {
            line,
            msg: format!("bad edge count {:?}", &rec[1]),
        })?;
        let seconds: f64 = rec[2].parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad seconds {:?}", &rec[2]),
        })?;
        rows.push(TimingRow {
            name: rec[0].to_string(),
            edges_millions: edges,
            seconds,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line() {
        let f = fit_runtime_model(&[(1.0, 1.0), (2.0, 2.0)]).unwrap();
        assert!((f.slope - 1.0).abs() < 1e-12);
        assert!(f.intercept.abs() < 1e-12);
        assert!((f.predict(3.0) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            fit_runtime_model(&[(1.0, 1.0)]),
            Err(Error::DegenerateFit(_))
        ));
        assert!(matches!(
            fit_runtime_model(&[(1.0, 1.0), (1.0, 3.0)]),
            Err(Error::DegenerateFit(_))
        ));
        assert!(fit_runtime_model(&[(1.0, f64::NAN), (2.0, 1.0)]).is_err());
    }

    #[test]
    fn edge_suffixes() {
        assert_eq!(parse_edges_millions("2.9M"), Some(2.9));
        assert!((parse_edges_millions("212.9K").unwrap() - 0.2129).abs() < 1e-12);
        assert!((parse_edges_millions("2900000").unwrap() - 2.9).abs() < 1e-12);
        assert_eq!(parse_edges_millions("x"), None);
        assert_eq!(parse_edges_millions("-1"), None);
    }

    #[test]
    fn table_parsing() {
        let rows =
            read_timing_table("name,edges,seconds\na,1.9M,3.233\nb, 364.4K ,0.479\n".as_bytes())
                .unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].name, "a");
        assert!((rows[1].edges_millions - 0.3644).abs() < 1e-12);
        assert!(read_timing_table("name,edges,seconds\na,zz,1\n".as_bytes()).is_err());
    }
}
