//! Expression evaluation against a database, an ambient current color and
//! the color series table.

use crate::error::{ColorError, Result};
use crate::expr::{Atom, ColorExpr, ExtendedExpr, MixOperand, SeriesAccess, StandardExpr};
use crate::model::{ColorValue, Model, ModelTag};
use crate::registry::ColorDatabase;
use crate::series::{Scheme, SeriesDefinition, SeriesTable};

#[derive(Debug, Clone, Default)]
pub struct EvalContext {
    pub db: ColorDatabase,
    current: Option<ColorValue>,
    pub series: SeriesTable,
}

impl EvalContext {
    /// Context over the default database (base colors plus named table).
    pub fn new() -> Self {
        Self::with_database(ColorDatabase::new())
    }

    pub fn with_database(db: ColorDatabase) -> Self {
        EvalContext {
            db,
            current: None,
            series: SeriesTable::new(),
        }
    }

    pub fn current(&self) -> Option<ColorValue> {
        self.current
    }

    /// Evaluates `expr`. Only series `Advance` accesses mutate the context.
    pub fn evaluate(&mut self, expr: &ColorExpr) -> Result<ColorValue> {
        match expr {
            ColorExpr::Standard(s) => self.standard(s),
            ColorExpr::Extended(e) => self.extended(e),
        }
    }

    pub fn evaluate_in(&mut self, expr: &ColorExpr, target: Model) -> Result<ColorValue> {
        Ok(self.evaluate(expr)?.convert(target))
    }

    /// Sets the ambient color. On error the previous current color is kept.
    pub fn set_current(&mut self, expr: &ColorExpr) -> Result<()> {
        let value = self.evaluate(expr)?;
        self.current = Some(value);
        Ok(())
    }

    pub fn set_current_value(&mut self, value: ColorValue) {
        self.current = Some(value);
    }

    /// Evaluates `expr` now and stores the resulting value under `name`.
    pub fn color_let(&mut self, name: &str, expr: &ColorExpr) -> Result<()> {
        let value = self.evaluate(expr)?;
        self.db.set(name, value)
    }

    pub fn define_color(&mut self, name: &str, model: ModelTag, spec: &str) -> Result<()> {
        self.db.define_color(name, model, spec)
    }

    pub fn provide_color(&mut self, name: &str, model: ModelTag, spec: &str) -> Result<()> {
        self.db.provide_color(name, model, spec)
    }

    pub fn define_series(
        &mut self,
        name: &str,
        model: Model,
        scheme: Scheme,
        start: ColorExpr,
        second: ColorExpr,
    ) {
        self.series.define(
            name,
            SeriesDefinition {
                model,
                scheme,
                start,
                second,
            },
        );
    }

    /// Evaluates the series' start and second expressions in this context
    /// and restarts the series with `div` steps.
    pub fn reset_series(&mut self, div: f64, name: &str) -> Result<()> {
        let def = self.series.get(name)?.definition.clone();
        if !(div > 0.0 && div.is_finite()) {
            return Err(ColorError::Range(format!(
                "series divisor must be positive, got {div}"
            )));
        }
        let start = self.evaluate(&def.start)?;
        let second = self.evaluate(&def.second)?;
        self.series.apply_reset(name, div, &start, &second)
    }

    pub fn series_access(&mut self, name: &str, access: SeriesAccess) -> Result<ColorValue> {
        self.series.access(name, access)
    }

    fn atom(&mut self, atom: &Atom) -> Result<ColorValue> {
        match atom {
            Atom::Name(name) => self.db.resolve(name),
            Atom::Current => self
                .current
                .ok_or_else(|| ColorError::Eval("current color `.` is not set".into())),
            Atom::Series { name, access } => self.series.access(name, *access),
        }
    }

    fn standard(&mut self, expr: &StandardExpr) -> Result<ColorValue> {
        let mut acc = self.atom(&expr.head)?;
        for step in &expr.chain {
            let other = match &step.with {
                MixOperand::Atom(a) => self.atom(a)?,
                MixOperand::White => self.db.resolve("white")?,
            };
            acc = acc.mix(step.percent, &other)?;
        }
        if expr.minus_count % 2 == 1 {
            acc = acc.complement();
        }
        Ok(acc)
    }

    fn extended(&mut self, expr: &ExtendedExpr) -> Result<ColorValue> {
        let model = expr.model;
        let mut sum = [0.0; 4];
        let mut total_weight = 0.0;
        for term in &expr.terms {
            let value = self.standard(&term.expr)?.convert(model);
            for (acc, ch) in sum.iter_mut().zip(value.channels()) {
                *acc += term.weight * ch;
            }
            total_weight += term.weight;
        }
        let divisor = expr.divisor.unwrap_or(total_weight);
        if divisor == 0.0 {
            return Err(ColorError::Eval(match expr.divisor {
                Some(_) => "extended expression divisor is zero".to_string(),
                None => "extended expression weights sum to zero".to_string(),
            }));
        }
        Ok(ColorValue::from_raw(model, sum.map(|s| s / divisor)))
    }
}
