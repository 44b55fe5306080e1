//! Tabular output documents with deterministic rendering to JSON, CSV, and
//! Markdown.

use std::fmt::Write as _;

/// Output formats selectable with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(format!("unknown format `{other}` (expected json, csv, or md)")),
        }
    }
}

/// A titled table of string cells.  Rows are kept in the order they were
/// pushed; every command pushes rows in a deterministic order (label, then
/// parameters), so repeated invocations are byte-identical.
#[derive(Debug, Clone)]
pub struct OutputDocument {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl OutputDocument {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Markdown => self.render_markdown(),
        }
    }

    fn render_json(&self) -> String {
        // Arrays keep column order stable regardless of serializer map
        // ordering.
        let doc = serde_json::json!({
            "title": self.title,
            "columns": self.columns,
            "rows": self.rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("plain strings serialize");
        s.push('\n');
        s
    }

    fn render_csv(&self) -> String {
        fn field(s: &str) -> String {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        let mut out = String::new();
        let header: Vec<String> = self.columns.iter().map(|c| field(c)).collect();
        let _ = writeln!(out, "{}", header.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| field(c)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    fn render_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "### {}\n", self.title);
        let _ = writeln!(out, "| {} |", self.columns.join(" | "));
        let rule: Vec<&str> = self.columns.iter().map(|_| "---").collect();
        let _ = writeln!(out, "| {} |", rule.join(" | "));
        for row in &self.rows {
            let _ = writeln!(out, "| {} |", row.join(" | "));
        }
        out
    }
}

/// Renders several documents in sequence.
pub fn render_all(docs: &[OutputDocument], format: Format) -> String {
    let mut parts: Vec<String> = Vec::new();
    for d in docs {
        parts.push(d.render(format));
    }
    parts.join("\n")
}

/// Fixed 4-decimal rendering for floating approximations.
pub fn approx(x: f64) -> String {
    format!("{x:.4}")
}
