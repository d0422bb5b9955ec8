//! Named color store.
//!
//! Lookups check the user table first, then the driver-level named table.
//! The user table is preloaded with the base colors (`red`, `cyan`, `gray`,
//! ...); the named table ships with the dvips names (`JungleGreen`, ...).
//! Both are plain data files and both are case-sensitive.

use std::collections::HashMap;

use crate::error::{ColorError, Result};
use crate::expr::is_valid_name;
use crate::model::{parse_channel_spec, ColorValue, Model, ModelTag};

/// Base colors loaded into every new database.
pub const BASE_COLORS: &str = include_str!("../data/base.txt");

/// The shipped dvips named-color table.
pub const DVIPS_NAMED_COLORS: &str = include_str!("../data/dvipsnam.txt");

#[derive(Debug, Clone, Default)]
pub struct ColorDatabase {
    user: HashMap<String, ColorValue>,
    named: HashMap<String, ColorValue>,
}

impl ColorDatabase {
    /// A database with the base colors defined and the dvips table loaded.
    pub fn new() -> Self {
        let user = parse_table(BASE_COLORS).expect("shipped base table is well formed");
        let named = parse_table(DVIPS_NAMED_COLORS).expect("shipped named table is well formed");
        ColorDatabase {
            user: user.into_iter().collect(),
            named: named.into_iter().collect(),
        }
    }

    /// A database with no colors at all.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Defines (or overwrites) `name`. With [`ModelTag::Named`], `spec` is
    /// the name of a named-table entry whose value is copied.
    pub fn define_color(&mut self, name: &str, model: ModelTag, spec: &str) -> Result<()> {
        check_name(name)?;
        let value = match model {
            ModelTag::Model(m) => parse_channel_spec(m, spec)?,
            ModelTag::Named => {
                let key = spec.trim();
                *self
                    .named
                    .get(key)
                    .ok_or_else(|| ColorError::UndefinedColor(key.to_string()))?
            }
        };
        self.user.insert(name.to_string(), value);
        Ok(())
    }

    /// Like [`define_color`](Self::define_color), but does nothing if `name`
    /// is already in the user table.
    pub fn provide_color(&mut self, name: &str, model: ModelTag, spec: &str) -> Result<()> {
        if self.user.contains_key(name) {
            return Ok(());
        }
        self.define_color(name, model, spec)
    }

    /// Stores a concrete value under `name`.
    pub fn set(&mut self, name: &str, value: ColorValue) -> Result<()> {
        check_name(name)?;
        self.user.insert(name.to_string(), value);
        Ok(())
    }

    pub fn resolve(&self, name: &str) -> Result<ColorValue> {
        self.user
            .get(name)
            .or_else(|| self.named.get(name))
            .copied()
            .ok_or_else(|| ColorError::UndefinedColor(name.to_string()))
    }

    /// Looks `name` up in the named table only.
    pub fn resolve_named(&self, name: &str) -> Result<ColorValue> {
        self.named
            .get(name)
            .copied()
            .ok_or_else(|| ColorError::UndefinedColor(name.to_string()))
    }

    /// Replaces the named table with the entries in `source` and returns
    /// the number of entries loaded.
    pub fn load_named_table(&mut self, source: &str) -> Result<usize> {
        let entries = parse_table(source)?;
        self.named = entries.into_iter().collect();
        Ok(self.named.len())
    }

    pub fn user_names(&self) -> impl Iterator<Item = &str> {
        self.user.keys().map(String::as_str)
    }

    pub fn named_names(&self) -> impl Iterator<Item = &str> {
        self.named.keys().map(String::as_str)
    }
}

fn check_name(name: &str) -> Result<()> {
    if is_valid_name(name) {
        Ok(())
    } else {
        Err(ColorError::InvalidName(name.to_string()))
    }
}

/// `name model ch1 [ch2 ch3 [ch4]]` per line; `#` starts a comment.
fn parse_table(source: &str) -> Result<Vec<(String, ColorValue)>> {
    let mut entries = Vec::new();
    for (idx, raw) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let entry = parse_table_line(line).map_err(|e| e.at_line(line_no))?;
        entries.push(entry);
    }
    Ok(entries)
}

fn parse_table_line(line: &str) -> Result<(String, ColorValue)> {
    let mut tokens = line.split_whitespace();
    let name = tokens.next().unwrap_or_default();
    check_name(name)?;
    let model: Model = tokens
        .next()
        .ok_or_else(|| ColorError::Spec(format!("missing model for `{name}`")))?
        .parse()?;
    let spec = tokens.collect::<Vec<_>>().join(" ");
    Ok((name.to_string(), parse_channel_spec(model, &spec)?))
}
