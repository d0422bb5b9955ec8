//! Swatch tables: one row per expression, its value shown in several models.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{ColorError, Result};
use crate::eval::EvalContext;
use crate::expr::parse_expr;
use crate::model::{ColorValue, Model};

pub const DEFAULT_SWATCH_MODELS: [Model; 5] = [
    Model::Rgb,
    Model::Cmyk,
    Model::Hsb,
    Model::Html,
    Model::Gray,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwatchFormat {
    Text,
    Json,
    Html,
}

impl FromStr for SwatchFormat {
    type Err = ColorError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(SwatchFormat::Text),
            "json" => Ok(SwatchFormat::Json),
            "html" => Ok(SwatchFormat::Html),
            other => Err(ColorError::Syntax(format!(
                "unknown swatch format `{other}`"
            ))),
        }
    }
}

pub struct SwatchReport {
    pub output: String,
    /// 0 if at least one row evaluated, else 4.
    pub exit_code: i32,
}

struct Row<'a> {
    expr: &'a str,
    result: Result<ColorValue>,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    expr: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<Map<String, Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hex: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// Evaluates every expression in `ctx` and renders the table. Failing
/// expressions become error rows instead of aborting the report.
pub fn cmd_swatch(
    ctx: &mut EvalContext,
    exprs: &[String],
    models: &[Model],
    format: SwatchFormat,
) -> SwatchReport {
    let rows: Vec<Row> = exprs
        .iter()
        .map(|text| Row {
            expr: text,
            result: parse_expr(text).and_then(|e| ctx.evaluate(&e)),
        })
        .collect();
    let exit_code = if rows.iter().any(|r| r.result.is_ok()) {
        0
    } else {
        4
    };
    let output = match format {
        SwatchFormat::Text => render_text(&rows, models),
        SwatchFormat::Json => render_json(&rows, models),
        SwatchFormat::Html => render_html(&rows, models),
    };
    SwatchReport { output, exit_code }
}

fn cell(value: &ColorValue, model: Model) -> String {
    if model == Model::Html {
        return value.to_hex().to_string();
    }
    value
        .convert(model)
        .channels()
        .iter()
        .map(|c| format!("{c:.6}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn render_text(rows: &[Row], models: &[Model]) -> String {
    let mut table: Vec<Vec<String>> = Vec::with_capacity(rows.len() + 1);
    let mut header = vec!["expr".to_string()];
    header.extend(models.iter().map(|m| m.name().to_string()));
    table.push(header);
    for row in rows {
        let mut line = vec![row.expr.to_string()];
        match &row.result {
            Ok(value) => line.extend(models.iter().map(|m| cell(value, *m))),
            Err(e) => line.push(format!("error: {e}")),
        }
        table.push(line);
    }
    let columns = models.len() + 1;
    let widths: Vec<usize> = (0..columns)
        .map(|i| {
            table
                .iter()
                .filter(|line| line.len() == columns)
                .filter_map(|line| line.get(i))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for line in table {
        let mut text = String::new();
        for (i, field) in line.iter().enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            let _ = write!(text, "{field:<width$}", width = widths[i]);
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

fn render_json(rows: &[Row], models: &[Model]) -> String {
    let json_rows: Vec<JsonRow> = rows
        .iter()
        .map(|row| match &row.result {
            Ok(value) => {
                let mut values = Map::new();
                for model in models.iter().filter(|m| **m != Model::Html) {
                    let channels = value.convert(*model).channels().to_vec();
                    values.insert(model.name().to_string(), Value::from(channels));
                }
                JsonRow {
                    expr: row.expr,
                    values: Some(values),
                    hex: Some(value.to_hex().to_string()),
                    error: None,
                }
            }
            Err(e) => JsonRow {
                expr: row.expr,
                values: None,
                hex: None,
                error: Some(e.to_string()),
            },
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&json_rows).expect("rows serialize");
    out.push('\n');
    out
}

fn escape_html(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

fn render_html(rows: &[Row], models: &[Model]) -> String {
    let mut out = String::from("<table>\n<tr><th>expr</th><th>swatch</th>");
    for model in models {
        let _ = write!(out, "<th>{}</th>", model.name());
    }
    out.push_str("</tr>\n");
    for row in rows {
        let _ = write!(out, "<tr><td>{}</td>", escape_html(row.expr));
        match &row.result {
            Ok(value) => {
                let _ = write!(
                    out,
                    "<td style=\"background-color:#{};width:2em\"></td>",
                    value.to_hex()
                );
                for model in models {
                    let _ = write!(out, "<td>{}</td>", cell(value, *model));
                }
            }
            Err(e) => {
                let _ = write!(
                    out,
                    "<td></td><td colspan=\"{}\">error: {}</td>",
                    models.len().max(1),
                    escape_html(&e.to_string())
                );
            }
        }
        out.push_str("</tr>\n");
    }
    out.push_str("</table>\n");
    out
}
