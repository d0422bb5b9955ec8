//! Arithmetic color series.
//!
//! A series is defined from two unevaluated expressions and only turns into
//! numbers when it is reset, so `.` binds to whatever the current color is
//! at reset time. After a reset the k-th color is `clamp(base + k * step)`;
//! the affine state itself is never clamped.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{ColorError, Result};
use crate::expr::{ColorExpr, SeriesAccess};
use crate::model::{ColorValue, Model};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// The second expression is the color reached after `div` steps.
    Last,
    /// The second expression's channels are the raw per-step increment.
    Step,
}

impl FromStr for Scheme {
    type Err = ColorError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "last" => Ok(Scheme::Last),
            "step" => Ok(Scheme::Step),
            other => Err(ColorError::UnknownScheme(other.to_string())),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Last => "last",
            Scheme::Step => "step",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesDefinition {
    pub model: Model,
    pub scheme: Scheme,
    pub start: ColorExpr,
    pub second: ColorExpr,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesState {
    base: [f64; 4],
    step: [f64; 4],
    cursor: u64,
    div: f64,
}

impl SeriesState {
    pub fn cursor(&self) -> u64 {
        self.cursor
    }

    pub fn div(&self) -> f64 {
        self.div
    }

    pub fn step(&self) -> [f64; 4] {
        self.step
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColorSeries {
    pub definition: SeriesDefinition,
    state: Option<SeriesState>,
}

impl ColorSeries {
    pub fn state(&self) -> Option<&SeriesState> {
        self.state.as_ref()
    }

    /// `clamp(base + k * step)`; `None` before the first reset.
    pub fn value_at(&self, k: u64) -> Option<ColorValue> {
        let state = self.state.as_ref()?;
        let model = self.definition.model;
        let kf = k as f64;
        let mut raw = [0.0; 4];
        for (i, slot) in raw.iter_mut().enumerate().take(model.arity()) {
            *slot = state.base[i] + kf * state.step[i];
        }
        Some(ColorValue::from_raw(model, raw))
    }
}

#[derive(Debug, Clone, Default)]
pub struct SeriesTable {
    series: HashMap<String, ColorSeries>,
}

impl SeriesTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores (or replaces) a definition. A replaced series must be reset again.
    pub fn define(&mut self, name: &str, definition: SeriesDefinition) {
        self.series.insert(
            name.to_string(),
            ColorSeries {
                definition,
                state: None,
            },
        );
    }

    pub fn get(&self, name: &str) -> Result<&ColorSeries> {
        self.series
            .get(name)
            .ok_or_else(|| ColorError::UndefinedSeries(name.to_string()))
    }

    /// Installs a fresh state from already evaluated start and second colors.
    /// Both are converted into the series model first.
    pub fn apply_reset(
        &mut self,
        name: &str,
        div: f64,
        start: &ColorValue,
        second: &ColorValue,
    ) -> Result<()> {
        let series = self
            .series
            .get_mut(name)
            .ok_or_else(|| ColorError::UndefinedSeries(name.to_string()))?;
        if !(div > 0.0 && div.is_finite()) {
            return Err(ColorError::Range(format!(
                "series divisor must be positive, got {div}"
            )));
        }
        let model = series.definition.model;
        let arity = model.arity();
        let base_value = start.convert(model);
        let second_value = second.convert(model);
        let mut base = [0.0; 4];
        base[..arity].copy_from_slice(base_value.channels());
        let mut step = [0.0; 4];
        match series.definition.scheme {
            Scheme::Last => {
                for (i, s) in step.iter_mut().enumerate().take(arity) {
                    *s = (second_value.channels()[i] - base[i]) / div;
                }
            }
            Scheme::Step => step[..arity].copy_from_slice(second_value.channels()),
        }
        series.state = Some(SeriesState {
            base,
            step,
            cursor: 0,
            div,
        });
        Ok(())
    }

    /// `Advance(n)` returns the color at the cursor and moves it by `n`;
    /// `Index(k)` returns the k-th color counted from the reset base and
    /// leaves the cursor alone.
    pub fn access(&mut self, name: &str, access: SeriesAccess) -> Result<ColorValue> {
        let series = self
            .series
            .get_mut(name)
            .ok_or_else(|| ColorError::UndefinedSeries(name.to_string()))?;
        let state = series
            .state
            .as_mut()
            .ok_or_else(|| ColorError::SeriesNotReset(name.to_string()))?;
        match access {
            SeriesAccess::Advance(n) => {
                let k = state.cursor;
                state.cursor = state.cursor.saturating_add(u64::from(n));
                Ok(series.value_at(k).expect("state checked above"))
            }
            SeriesAccess::Index(k) => {
                Ok(series.value_at(u64::from(k)).expect("state checked above"))
            }
        }
    }
}
