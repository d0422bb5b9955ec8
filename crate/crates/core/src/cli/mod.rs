//! Command implementations behind the `colorexpr` binary.
//!
//! Every command returns its report as a string so it can be tested
//! without spawning a process; the binary only prints and maps exit codes.

pub mod defs;
pub mod swatch;

use std::fmt::Write as _;

use crate::error::{ColorError, Result};
use crate::eval::EvalContext;
use crate::expr::{parse_expr, ColorExpr, SeriesAccess};
use crate::model::{parse_channel_spec, ColorValue, Model};
use crate::stripes::{cell_paint, StripeScheduler};

pub use defs::{apply_defs, load_defs, DefsScript, Directive};
pub use swatch::{cmd_swatch, SwatchFormat, SwatchReport, DEFAULT_SWATCH_MODELS};

/// `model c1 c2 … #RRGGBB` with six decimals per channel.
pub fn format_value(value: &ColorValue) -> String {
    let mut out = value.model().name().to_string();
    for ch in value.channels() {
        write!(out, " {ch:.6}").unwrap();
    }
    write!(out, " #{}", value.to_hex()).unwrap();
    out
}

/// Evaluates `expr_text`, optionally after setting the current color and
/// converting the result into `model`.
pub fn cmd_eval(
    ctx: &mut EvalContext,
    expr_text: &str,
    model: Option<Model>,
    current: Option<&str>,
) -> Result<String> {
    let expr = parse_expr(expr_text)?;
    if let Some(current) = current {
        ctx.set_current(&parse_expr(current)?)?;
    }
    let mut value = ctx.evaluate(&expr)?;
    if let Some(model) = model {
        value = value.convert(model);
    }
    Ok(format_value(&value))
}

/// Converts `model:spec` (e.g. `rgb:.4,.5,.6`) into `to`.
pub fn cmd_convert(input: &str, to: Model) -> Result<String> {
    let (model, spec) = input
        .split_once(':')
        .ok_or_else(|| ColorError::Syntax(format!("expected <model>:<spec>, got `{input}`")))?;
    let value = parse_channel_spec(model.trim().parse()?, spec)?;
    Ok(format_value(&value.convert(to)))
}

/// Parses an access list such as `+,+,+`, `++ x7` or `[2] x7`.
pub fn parse_access_spec(spec: &str) -> Result<Vec<SeriesAccess>> {
    let bad = |item: &str| ColorError::Syntax(format!("bad series access `{item}`"));
    let mut out = Vec::new();
    for item in spec.split(',') {
        let item = item.trim();
        let mut parts = item.split_whitespace();
        let token = parts.next().ok_or_else(|| bad(item))?;
        let repeat = match parts.next() {
            None => 1,
            Some(rep) => rep
                .strip_prefix('x')
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| bad(item))?,
        };
        if parts.next().is_some() {
            return Err(bad(item));
        }
        let access = if !token.is_empty() && token.bytes().all(|b| b == b'+') {
            SeriesAccess::Advance(u32::try_from(token.len()).map_err(|_| bad(item))?)
        } else if let Some(k) = token.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            if k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad(item));
            }
            SeriesAccess::Index(k.parse().map_err(|_| bad(item))?)
        } else {
            return Err(bad(item));
        };
        out.extend(std::iter::repeat_n(access, repeat));
    }
    Ok(out)
}

/// One line per access, in order.
pub fn cmd_series(ctx: &mut EvalContext, name: &str, accesses: &str) -> Result<String> {
    let accesses = parse_access_spec(accesses)?;
    let mut out = String::new();
    for access in accesses {
        let value = ctx.series_access(name, access)?;
        writeln!(out, "{}", format_value(&value)).unwrap();
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub enum StripeEvent {
    RowColor(ColorExpr),
    Hide,
    Show,
}

/// Events keyed by row: `before` events fire before that row begins, cell
/// overrides apply to that row's cell.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct StripeEvents {
    pub before: Vec<(u32, StripeEvent)>,
    pub cells: Vec<(u32, ColorExpr)>,
}

impl StripeEvents {
    /// ```text
    /// before <n> rowcolor <expr>
    /// before <n> hide
    /// before <n> show
    /// cell <n> <expr>
    /// ```
    pub fn parse(source: &str) -> Result<Self> {
        let mut events = StripeEvents::default();
        for (idx, raw) in source.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            events.parse_line(line).map_err(|e| e.at_line(idx + 1))?;
        }
        Ok(events)
    }

    fn parse_line(&mut self, line: &str) -> Result<()> {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let bad = || ColorError::Syntax(format!("malformed stripe event `{line}`"));
        let row = |tok: &str| -> Result<u32> {
            tok.parse::<u32>()
                .ok()
                .filter(|n| *n >= 1)
                .ok_or_else(|| ColorError::Syntax(format!("bad row number `{tok}`")))
        };
        match tokens.as_slice() {
            ["before", n, "rowcolor", expr] => self
                .before
                .push((row(n)?, StripeEvent::RowColor(parse_expr(expr)?))),
            ["before", n, "hide"] => self.before.push((row(n)?, StripeEvent::Hide)),
            ["before", n, "show"] => self.before.push((row(n)?, StripeEvent::Show)),
            ["cell", n, expr] => self.cells.push((row(n)?, parse_expr(expr)?)),
            _ => return Err(bad()),
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StripeOptions {
    pub rows: u32,
    pub start: u32,
    pub odd: Option<ColorExpr>,
    pub even: Option<ColorExpr>,
    pub command: Option<String>,
}

/// Parses a stripe color argument; an empty string means no color.
pub fn parse_optional_expr(text: &str) -> Result<Option<ColorExpr>> {
    if text.trim().is_empty() {
        Ok(None)
    } else {
        parse_expr(text.trim()).map(Some)
    }
}

/// One line per row: number, effective color (or `-`), command tokens.
pub fn cmd_stripe(opts: &StripeOptions, events: &StripeEvents) -> Result<String> {
    let mut scheduler = StripeScheduler::rowcolors(
        opts.start,
        opts.odd.clone(),
        opts.even.clone(),
        opts.command.clone(),
    )?;
    let mut out = String::new();
    for n in 1..=opts.rows {
        for (_, event) in events.before.iter().filter(|(row, _)| *row == n) {
            match event {
                StripeEvent::RowColor(expr) => scheduler.set_row_override(expr.clone()),
                StripeEvent::Hide => scheduler.hide_row_colors(),
                StripeEvent::Show => scheduler.show_row_colors(),
            }
        }
        let paint = scheduler.begin_row();
        let cell = events
            .cells
            .iter()
            .rev()
            .find(|(row, _)| *row == n)
            .map(|(_, expr)| expr);
        let color = cell_paint(&paint, cell).map_or_else(|| "-".to_string(), ToString::to_string);
        write!(out, "{} {}", paint.row_number, color).unwrap();
        for cmd in &paint.commands {
            write!(out, " {cmd}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}
