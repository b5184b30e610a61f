//! Output plumbing: RFC-4180 CSV, JSON run metadata with a config
//! hash, and the per-run bookkeeping shared by all subcommands.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::opts::CommonOpts;
use crate::{CliError, CliResult};

/// In-memory CSV: a header and stringly rows.
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }
}

/// Shortest round-trip decimal form, '.' decimal separator.
pub fn fmt_f(v: f64) -> String {
    format!("{v}")
}

fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\r', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Writes a table as RFC-4180 CSV: UTF-8, CRLF records, quoted fields
/// only where required.
pub fn write_csv(path: &Path, table: &Table) -> std::io::Result<()> {
    let mut buf = String::new();
    let mut record = |fields: &[String]| {
        buf.push_str(
            &fields
                .iter()
                .map(|f| csv_field(f))
                .collect::<Vec<_>>()
                .join(","),
        );
        buf.push_str("\r\n");
    };
    record(&table.columns);
    for row in &table.rows {
        record(row);
    }
    fs::write(path, buf)
}

/// Reads a CSV written by [`write_csv`] back into header plus rows.
pub fn read_csv(path: &Path) -> CliResult<(Vec<String>, Vec<Vec<String>>)> {
    let text = fs::read_to_string(path).map_err(CliError::Io)?;
    let mut records: Vec<Vec<String>> = Vec::new();
    let mut row: Vec<String> = Vec::new();
    let mut field = String::new();
    let mut quoted = false;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if quoted {
            match c {
                '"' if chars.peek() == Some(&'"') => {
                    chars.next();
                    field.push('"');
                }
                '"' => quoted = false,
                _ => field.push(c),
            }
            continue;
        }
        match c {
            '"' => quoted = true,
            ',' => row.push(std::mem::take(&mut field)),
            '\r' | '\n' => {
                if c == '\r' && chars.peek() == Some(&'\n') {
                    chars.next();
                }
                row.push(std::mem::take(&mut field));
                records.push(std::mem::take(&mut row));
            }
            _ => field.push(c),
        }
    }
    if !field.is_empty() || !row.is_empty() {
        row.push(field);
        records.push(row);
    }
    if records.is_empty() {
        return Err(wre::Error::Parameter(format!("{} holds no header", path.display())).into());
    }
    let header = records.remove(0);
    Ok((header, records))
}

/// Numeric column by name; empty fields become NaN so plots skip them.
pub fn fcol(header: &[String], rows: &[Vec<String>], name: &str) -> CliResult<Vec<f64>> {
    let idx = header
        .iter()
        .position(|h| h == name)
        .ok_or_else(|| wre::Error::Parameter(format!("missing CSV column {name}")))?;
    rows.iter()
        .map(|row| {
            let raw = &row[idx];
            if raw.is_empty() {
                return Ok(f64::NAN);
            }
            raw.parse::<f64>()
                .map_err(|_| wre::Error::Parameter(format!("non-numeric {name} field {raw:?}")).into())
        })
        .collect()
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Per-run bookkeeping: collects outputs, metrics, and deviation notes,
/// then writes `<subcommand>.meta.json`.
pub struct RunContext {
    started: Instant,
    subcommand: &'static str,
    schema: &'static str,
    pub out_dir: PathBuf,
    pub seed: u64,
    pub threads: usize,
    pub log2: bool,
    config: Value,
    deviations: Vec<String>,
    metrics: Map<String, Value>,
    outputs: Vec<String>,
}

impl RunContext {
    /// `config` is the data-determining parameter map (defaults filled
    /// in); the config hash covers exactly this value plus the seed.
    pub fn new(
        common: &CommonOpts,
        subcommand: &'static str,
        schema: &'static str,
        config: Value,
    ) -> CliResult<Self> {
        let threads = common.resolve_threads()?;
        fs::create_dir_all(&common.out)?;
        Ok(Self {
            started: Instant::now(),
            subcommand,
            schema,
            out_dir: common.out.clone(),
            seed: common.seed,
            threads,
            log2: common.log2,
            config,
            deviations: Vec::new(),
            metrics: Map::new(),
            outputs: Vec::new(),
        })
    }

    pub fn schema(&self) -> &'static str {
        self.schema
    }

    pub fn deviation(&mut self, note: &str) {
        self.deviations.push(note.to_string());
    }

    pub fn metric(&mut self, key: &str, value: Value) {
        self.metrics.insert(key.to_string(), value);
    }

    pub fn write_table(&mut self, name: &str, table: &Table) -> CliResult<PathBuf> {
        let path = self.out_dir.join(name);
        write_csv(&path, table)?;
        self.outputs.push(name.to_string());
        Ok(path)
    }

    pub fn write_svg(&mut self, name: &str, svg: &str) -> CliResult<()> {
        fs::write(self.out_dir.join(name), svg)?;
        self.outputs.push(name.to_string());
        Ok(())
    }

    /// Writes metadata and prints the one-line run summary.
    pub fn finish(self) -> CliResult<()> {
        let hashed = json!({ "config": self.config, "seed": self.seed });
        let config_hash = sha256_hex(serde_json::to_string(&hashed).expect("config json").as_bytes());
        let meta = json!({
            "tool": "wre",
            "version": env!("CARGO_PKG_VERSION"),
            "subcommand": self.subcommand,
            "schema": self.schema,
            "seed": self.seed,
            "threads": self.threads,
            "config": self.config,
            "config_hash": config_hash,
            "deviations": self.deviations,
            "metrics": Value::Object(self.metrics),
            "outputs": self.outputs,
            "wall_clock_ms": self.started.elapsed().as_millis() as u64,
        });
        let name = format!("{}.meta.json", self.subcommand);
        let mut body = serde_json::to_string_pretty(&meta).expect("meta json");
        body.push('\n');
        fs::write(self.out_dir.join(&name), body)?;
        println!(
            "{}: {} data files + {} in {}",
            self.subcommand,
            self.outputs.len(),
            name,
            self.out_dir.display()
        );
        Ok(())
    }
}

/// Appends `<name>_bits` columns for the named nats columns.
pub fn with_bits(table: &mut Table, nats_columns: &[&str]) {
    let indices: Vec<usize> = nats_columns
        .iter()
        .map(|name| {
            table
                .columns
                .iter()
                .position(|c| c == name)
                .expect("bits column source")
        })
        .collect();
    for name in nats_columns {
        table.columns.push(format!("{name}_bits"));
    }
    for row in &mut table.rows {
        for &idx in &indices {
            let bits = row[idx]
                .parse::<f64>()
                .map(wre::entropy::nats_to_bits)
                .map(|v| fmt_f(v))
                .unwrap_or_default();
            row.push(bits);
        }
    }
}
