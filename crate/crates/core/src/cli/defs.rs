//! Definition scripts: one directive per line, tokens separated by spaces.
//!
//! ```text
//! definecolor <name> <model> <spec>
//! providecolor <name> <model> <spec>
//! colorlet <name> <expr>
//! definecolorseries <name> <model> <scheme> <expr> <expr>
//! resetcolorseries <div> <name>
//! current <expr>
//! ```
//!
//! `#` starts a comment. The first failing line aborts the script.

use std::path::Path;

use crate::error::{ColorError, Result};
use crate::eval::EvalContext;
use crate::expr::{parse_expr, ColorExpr};
use crate::model::{Model, ModelTag};
use crate::series::Scheme;

#[derive(Debug, Clone, PartialEq)]
pub enum Directive {
    DefineColor {
        name: String,
        model: ModelTag,
        spec: String,
    },
    ProvideColor {
        name: String,
        model: ModelTag,
        spec: String,
    },
    ColorLet {
        name: String,
        expr: ColorExpr,
    },
    DefineSeries {
        name: String,
        model: Model,
        scheme: Scheme,
        start: ColorExpr,
        second: ColorExpr,
    },
    ResetSeries {
        div: f64,
        name: String,
    },
    Current(ColorExpr),
}

/// A parsed script; each directive keeps its 1-based source line.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DefsScript {
    pub directives: Vec<(usize, Directive)>,
}

impl DefsScript {
    pub fn parse(source: &str) -> Result<Self> {
        let mut directives = Vec::new();
        for (idx, raw) in source.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let directive = parse_directive(line).map_err(|e| e.at_line(idx + 1))?;
            directives.push((idx + 1, directive));
        }
        Ok(DefsScript { directives })
    }

    /// Runs every directive in order against `ctx`.
    pub fn apply(&self, ctx: &mut EvalContext) -> Result<()> {
        for (line, directive) in &self.directives {
            apply_directive(ctx, directive).map_err(|e| e.at_line(*line))?;
        }
        Ok(())
    }
}

fn syntax(msg: impl Into<String>) -> ColorError {
    ColorError::Syntax(msg.into())
}

fn expect_args(directive: &str, args: &[&str], n: usize, usage: &str) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(syntax(format!(
            "`{directive}` expects: {directive} {usage}"
        )))
    }
}

fn parse_directive(line: &str) -> Result<Directive> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let (head, args) = tokens.split_first().expect("line is not empty");
    match *head {
        "definecolor" | "providecolor" => {
            if args.len() < 3 {
                return Err(syntax(format!(
                    "`{head}` expects: {head} <name> <model> <spec>"
                )));
            }
            let name = args[0].to_string();
            let model: ModelTag = args[1].parse()?;
            let spec = args[2..].join(" ");
            Ok(if *head == "definecolor" {
                Directive::DefineColor { name, model, spec }
            } else {
                Directive::ProvideColor { name, model, spec }
            })
        }
        "colorlet" => {
            expect_args(head, args, 2, "<name> <expr>")?;
            Ok(Directive::ColorLet {
                name: args[0].to_string(),
                expr: parse_expr(args[1])?,
            })
        }
        "definecolorseries" => {
            expect_args(head, args, 5, "<name> <model> <scheme> <expr> <expr>")?;
            Ok(Directive::DefineSeries {
                name: args[0].to_string(),
                model: args[1].parse()?,
                scheme: args[2].parse()?,
                start: parse_expr(args[3])?,
                second: parse_expr(args[4])?,
            })
        }
        "resetcolorseries" => {
            expect_args(head, args, 2, "<div> <name>")?;
            let div: f64 = args[0]
                .parse()
                .map_err(|_| syntax(format!("series divisor `{}` is not a number", args[0])))?;
            Ok(Directive::ResetSeries {
                div,
                name: args[1].to_string(),
            })
        }
        "current" => {
            expect_args(head, args, 1, "<expr>")?;
            Ok(Directive::Current(parse_expr(args[0])?))
        }
        other => Err(syntax(format!("unknown directive `{other}`"))),
    }
}

fn apply_directive(ctx: &mut EvalContext, directive: &Directive) -> Result<()> {
    match directive {
        Directive::DefineColor { name, model, spec } => ctx.define_color(name, *model, spec),
        Directive::ProvideColor { name, model, spec } => ctx.provide_color(name, *model, spec),
        Directive::ColorLet { name, expr } => ctx.color_let(name, expr),
        Directive::DefineSeries {
            name,
            model,
            scheme,
            start,
            second,
        } => {
            if !crate::expr::is_valid_name(name) {
                return Err(ColorError::InvalidName(name.clone()));
            }
            ctx.define_series(name, *model, *scheme, start.clone(), second.clone());
            Ok(())
        }
        Directive::ResetSeries { div, name } => ctx.reset_series(*div, name),
        Directive::Current(expr) => ctx.set_current(expr),
    }
}

/// Applies the script text in `source` to `ctx`.
pub fn apply_defs(ctx: &mut EvalContext, source: &str) -> Result<()> {
    DefsScript::parse(source)?.apply(ctx)
}

/// Reads the script at `path` and runs it against a fresh default context.
pub fn load_defs(path: &Path) -> Result<EvalContext> {
    let mut ctx = EvalContext::new();
    apply_defs(&mut ctx, &read_file(path)?)?;
    Ok(ctx)
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| ColorError::Io(format!("cannot read {}: {e}", path.display())))
}
