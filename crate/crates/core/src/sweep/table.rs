use super::RunConfig;
use crate::error::{Error, Result};
use crate::params::Unit;
use serde::{Deserialize, Serialize};
use std::io::Write;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    pub unit: Unit,
    pub lambda_method: String,
    pub n_max: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub swept: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl Metadata {
    pub fn new(unit: Unit, config: &RunConfig) -> Self {
        Metadata {
            version: env!("CARGO_PKG_VERSION").to_string(),
            unit,
            lambda_method: config.lambda.to_string(),
            n_max: config.n_max,
            preset: None,
            swept: None,
            note: None,
            wall_time_s: None,
        }
    }

    fn entries(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![
            ("version", self.version.clone()),
            ("unit", self.unit.to_string()),
            ("lambda_method", self.lambda_method.clone()),
            ("n_max", self.n_max.to_string()),
        ];
        let optional = [
            ("preset", self.preset.clone()),
            ("swept", self.swept.clone()),
            ("note", self.note.clone()),
            ("wall_time_s", self.wall_time_s.map(|t| format!("{t:.6}"))),
        ];
        out.extend(optional.into_iter().filter_map(|(k, v)| v.map(|v| (k, v))));
        out
    }
}

/// Labeled grid of results, one row per parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub metadata: Metadata,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn validate(&self) -> Result<()> {
        if self.columns.is_empty() {
            return Err(Error::InvalidSpec("table has no columns".into()));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.columns.len() {
                return Err(Error::InvalidSpec(format!(
                    "row {i} has {} values for {} columns",
                    row.len(),
                    self.columns.len()
                )));
            }
            if let Some(j) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::InvalidSpec(format!(
                    "non-finite value in row {i}, column {}",
                    self.columns[j]
                )));
            }
        }
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    /// Comment lines, header, then one record per row; returns bytes written.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<usize> {
        self.validate()?;
        let mut out = CountingWriter { inner: out, count: 0 };
        for (k, v) in self.metadata.entries() {
            writeln!(out, "# {k}: {}", v.replace('\n', " ")).map_err(csv::Error::from)?;
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(&mut out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| format!("{v:.11e}")))?;
        }
        w.flush().map_err(csv::Error::from)?;
        drop(w);
        Ok(out.count)
    }

    pub fn write_json<W: Write>(&self, out: W) -> Result<usize> {
        self.validate()?;
        let mut out = CountingWriter { inner: out, count: 0 };
        serde_json::to_writer_pretty(&mut out, self)?;
        out.write_all(b"\n").map_err(serde_json::Error::io)?;
        Ok(out.count)
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }

    pub fn to_json_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_json(&mut buf)?;
        Ok(String::from_utf8(buf).expect("json output is utf-8"))
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let t: SweepTable = serde_json::from_str(s)?;
        t.validate()?;
        Ok(t)
    }
}

struct CountingWriter<W> {
    inner: W,
    count: usize,
}

impl<W: Write> Write for CountingWriter<W> {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.count += n;
        Ok(n)
    }
    fn flush(&mut self) -> std::io::Result<()> {
        self.inner.flush()
    }
}
