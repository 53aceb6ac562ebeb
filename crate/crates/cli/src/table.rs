//! Result tables and their CSV / JSON Lines renderings.
//!
//! Every table embeds the config hash and seed needed to reproduce it.
//! Floats render in fixed significant-digit scientific notation so repeated
//! invocations diff cleanly byte for byte.

use crate::config::OutputFormat;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    UInt(u64),
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(String),
}

#[derive(Debug, Clone)]
pub struct ResultTable {
    pub config_hash: String,
    pub seed: u64,
    /// Extra header entries, e.g. the swept parameter name.
    pub extras: Vec<(&'static str, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl ResultTable {
    pub fn new(config_hash: &str, seed: u64, columns: Vec<&'static str>) -> Self {
        Self {
            config_hash: config_hash.to_owned(),
            seed,
            extras: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn render(&self, format: OutputFormat, sig_digits: u8) -> String {
        match format {
            OutputFormat::Csv => self.render_csv(sig_digits),
            OutputFormat::Json => self.render_jsonl(sig_digits),
        }
    }

    fn render_csv(&self, sig_digits: u8) -> String {
        let mut out = String::new();
        out.push_str(&format!("# config_sha256 = {}\n", self.config_hash));
        out.push_str(&format!("# seed = {}\n", self.seed));
        for (key, value) in &self.extras {
            out.push_str(&format!("# {key} = {value}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            debug_assert_eq!(row.len(), self.columns.len());
            let line: Vec<String> = row.iter().map(|c| csv_cell(c, sig_digits)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    fn render_jsonl(&self, sig_digits: u8) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{{\"config_sha256\":\"{}\",\"seed\":{}",
            self.config_hash, self.seed
        ));
        for (key, value) in &self.extras {
            out.push_str(&format!(",\"{key}\":\"{value}\""));
        }
        out.push_str("}\n");
        for row in &self.rows {
            debug_assert_eq!(row.len(), self.columns.len());
            let fields: Vec<String> = self
                .columns
                .iter()
                .zip(row.iter())
                .map(|(name, cell)| format!("\"{name}\":{}", json_cell(cell, sig_digits)))
                .collect();
            out.push('{');
            out.push_str(&fields.join(","));
            out.push_str("}\n");
        }
        out
    }
}

/// Scientific notation with a fixed number of significant digits; negative
/// zero is normalized so outputs stay byte-stable.
pub fn fmt_sci(x: f64, sig_digits: u8) -> String {
    let digits = sig_digits.clamp(1, 17) as usize;
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{:.*e}", digits - 1, x)
}

fn csv_cell(cell: &Cell, sig_digits: u8) -> String {
    match cell {
        Cell::UInt(v) => v.to_string(),
        Cell::Int(v) => v.to_string(),
        Cell::Float(v) => fmt_sci(*v, sig_digits),
        Cell::Bool(v) => v.to_string(),
        Cell::Text(v) => v.clone(),
    }
}

fn json_cell(cell: &Cell, sig_digits: u8) -> String {
    match cell {
        Cell::UInt(v) => v.to_string(),
        Cell::Int(v) => v.to_string(),
        // fixed-precision scientific notation is a valid JSON number token
        Cell::Float(v) => fmt_sci(*v, sig_digits),
        Cell::Bool(v) => v.to_string(),
        Cell::Text(v) => format!("\"{v}\""),
    }
}
