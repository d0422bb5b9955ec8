//! Color models, channel arithmetic and conversions.
//!
//! Every [`ColorValue`] carries a concrete [`Model`] and a channel vector of
//! unit reals. Conversions use rgb as the hub, except for the direct pairs
//! rgb/cmy, cmy/cmyk and gray/rgb.

use std::fmt;
use std::str::FromStr;

use crate::error::{ColorError, Result};

/// Luma weights used for rgb to gray.
pub const GRAY_WEIGHTS: [f64; 3] = [0.3, 0.59, 0.11];

/// A concrete color model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    Rgb,
    Cmy,
    Cmyk,
    Hsb,
    Gray,
    /// rgb with 8-bit quantization at serialization time.
    Html,
}

impl Model {
    pub const ALL: [Model; 6] = [
        Model::Rgb,
        Model::Cmy,
        Model::Cmyk,
        Model::Hsb,
        Model::Gray,
        Model::Html,
    ];

    pub fn arity(self) -> usize {
        match self {
            Model::Rgb | Model::Cmy | Model::Hsb | Model::Html => 3,
            Model::Cmyk => 4,
            Model::Gray => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Model::Rgb => "rgb",
            Model::Cmy => "cmy",
            Model::Cmyk => "cmyk",
            Model::Hsb => "hsb",
            Model::Gray => "gray",
            Model::Html => "HTML",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = ColorError;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| ColorError::UnknownModel(s.to_string()))
    }
}

/// Model tag as written in a color definition: a concrete model, or the
/// `named` pseudo-model that resolves against the named-color table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelTag {
    Model(Model),
    Named,
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelTag::Model(m) => m.fmt(f),
            ModelTag::Named => f.write_str("named"),
        }
    }
}

impl FromStr for ModelTag {
    type Err = ColorError;

    fn from_str(s: &str) -> Result<Self> {
        if s == "named" {
            Ok(ModelTag::Named)
        } else {
            s.parse().map(ModelTag::Model)
        }
    }
}

impl From<Model> for ModelTag {
    fn from(m: Model) -> Self {
        ModelTag::Model(m)
    }
}

/// A color in a concrete model. Channels are always clamped to `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColorValue {
    model: Model,
    channels: [f64; 4],
}

fn clamp_unit(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

impl ColorValue {
    /// Builds a value from a channel slice, clamping every channel.
    pub fn new(model: Model, channels: &[f64]) -> Result<Self> {
        if channels.len() != model.arity() {
            return Err(ColorError::Spec(format!(
                "model {} takes {} channel(s), got {}",
                model,
                model.arity(),
                channels.len()
            )));
        }
        if let Some(bad) = channels.iter().find(|c| !c.is_finite()) {
            return Err(ColorError::Spec(format!(
                "channel value {bad} is not finite"
            )));
        }
        let mut raw = [0.0; 4];
        raw[..channels.len()].copy_from_slice(channels);
        Ok(Self::from_raw(model, raw))
    }

    /// Clamps `raw` into a value; unused trailing channels are zeroed.
    pub(crate) fn from_raw(model: Model, raw: [f64; 4]) -> Self {
        let mut channels = [0.0; 4];
        for (dst, src) in channels.iter_mut().zip(raw).take(model.arity()) {
            // `+ 0.0` folds -0.0 into 0.0
            *dst = if src.is_nan() {
                0.0
            } else {
                clamp_unit(src) + 0.0
            };
        }
        ColorValue { model, channels }
    }

    pub fn rgb(r: f64, g: f64, b: f64) -> Self {
        Self::from_raw(Model::Rgb, [r, g, b, 0.0])
    }

    pub fn cmy(c: f64, m: f64, y: f64) -> Self {
        Self::from_raw(Model::Cmy, [c, m, y, 0.0])
    }

    pub fn cmyk(c: f64, m: f64, y: f64, k: f64) -> Self {
        Self::from_raw(Model::Cmyk, [c, m, y, k])
    }

    /// Hue is a unit real: a full turn is 1.0.
    pub fn hsb(h: f64, s: f64, b: f64) -> Self {
        Self::from_raw(Model::Hsb, [h, s, b, 0.0])
    }

    pub fn gray(g: f64) -> Self {
        Self::from_raw(Model::Gray, [g, 0.0, 0.0, 0.0])
    }

    pub fn html(r: f64, g: f64, b: f64) -> Self {
        Self::from_raw(Model::Html, [r, g, b, 0.0])
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn channels(&self) -> &[f64] {
        &self.channels[..self.model.arity()]
    }

    /// Converts into `to`. Converting into the value's own model is the identity.
    pub fn convert(&self, to: Model) -> ColorValue {
        if to == self.model {
            return *self;
        }
        match (self.model, to) {
            (Model::Cmy, Model::Cmyk) => {
                let [c, m, y, _] = self.channels;
                cmy_to_cmyk(c, m, y)
            }
            (Model::Cmyk, Model::Cmy) => {
                let [c, m, y, k] = self.channels;
                cmyk_to_cmy(c, m, y, k)
            }
            _ => from_rgb(to, self.rgb_channels()),
        }
    }

    fn rgb_channels(self) -> [f64; 3] {
        let [a, b, c, d] = self.channels;
        match self.model {
            Model::Rgb | Model::Html => [a, b, c],
            Model::Cmy => [1.0 - a, 1.0 - b, 1.0 - c],
            Model::Cmyk => {
                let cmy = cmyk_to_cmy(a, b, c, d).channels;
                [1.0 - cmy[0], 1.0 - cmy[1], 1.0 - cmy[2]]
            }
            Model::Hsb => hsb_to_rgb(a, b, c),
            Model::Gray => [a, a, a],
        }
    }

    /// `p` percent of `self` mixed with `100 - p` percent of `other`,
    /// computed in `self`'s model.
    pub fn mix(&self, percent: f64, other: &ColorValue) -> Result<ColorValue> {
        if !(0.0..=100.0).contains(&percent) {
            return Err(ColorError::Range(format!(
                "mix percentage {percent} outside [0, 100]"
            )));
        }
        let other = other.convert(self.model);
        let t = percent / 100.0;
        let mut raw = [0.0; 4];
        for (i, slot) in raw.iter_mut().enumerate().take(self.model.arity()) {
            *slot = t * self.channels[i] + (1.0 - t) * other.channels[i];
        }
        Ok(ColorValue::from_raw(self.model, raw))
    }

    /// The color whose 50/50 mix with `self` is medium gray (for the
    /// additive and subtractive models). Keeps the input model.
    pub fn complement(&self) -> ColorValue {
        match self.model {
            Model::Rgb | Model::Cmy | Model::Gray | Model::Html => {
                let mut raw = self.channels;
                for ch in raw.iter_mut().take(self.model.arity()) {
                    *ch = 1.0 - *ch;
                }
                ColorValue::from_raw(self.model, raw)
            }
            Model::Cmyk => self.convert(Model::Cmy).complement().convert(Model::Cmyk),
            Model::Hsb => self.convert(Model::Rgb).complement().convert(Model::Hsb),
        }
    }

    pub fn to_hex(&self) -> HexCode {
        let [r, g, b] = self.rgb_channels();
        HexCode([quantize(r), quantize(g), quantize(b)])
    }

    pub fn from_hex(hex: &HexCode) -> ColorValue {
        let [r, g, b] = hex.0.map(|byte| f64::from(byte) / 255.0);
        ColorValue::rgb(r, g, b)
    }
}

impl fmt::Display for ColorValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.model)?;
        for (i, ch) in self.channels().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{ch}")?;
        }
        f.write_str(")")
    }
}

/// Round-half-up 8-bit quantization.
fn quantize(x: f64) -> u8 {
    (clamp_unit(x) * 255.0 + 0.5).floor() as u8
}

fn cmy_to_cmyk(c: f64, m: f64, y: f64) -> ColorValue {
    let k = c.min(m).min(y);
    ColorValue::cmyk(c - k, m - k, y - k, k)
}

fn cmyk_to_cmy(c: f64, m: f64, y: f64, k: f64) -> ColorValue {
    ColorValue::cmy((c + k).min(1.0), (m + k).min(1.0), (y + k).min(1.0))
}

fn from_rgb(to: Model, [r, g, b]: [f64; 3]) -> ColorValue {
    match to {
        Model::Rgb => ColorValue::rgb(r, g, b),
        Model::Html => ColorValue::html(r, g, b),
        Model::Cmy => ColorValue::cmy(1.0 - r, 1.0 - g, 1.0 - b),
        Model::Cmyk => cmy_to_cmyk(1.0 - r, 1.0 - g, 1.0 - b),
        Model::Hsb => {
            let [h, s, v] = rgb_to_hsb(r, g, b);
            ColorValue::hsb(h, s, v)
        }
        Model::Gray => {
            let [wr, wg, wb] = GRAY_WEIGHTS;
            ColorValue::gray(wr * r + wg * g + wb * b)
        }
    }
}

fn rgb_to_hsb(r: f64, g: f64, b: f64) -> [f64; 3] {
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let delta = max - min;
    if delta <= 0.0 {
        // hue of a gray is pinned to 0
        return [0.0, 0.0, max];
    }
    let sat = delta / max;
    let sector = if max == r {
        (g - b) / delta
    } else if max == g {
        2.0 + (b - r) / delta
    } else {
        4.0 + (r - g) / delta
    };
    let mut hue = sector / 6.0;
    if hue < 0.0 {
        hue += 1.0;
    }
    if hue >= 1.0 {
        hue -= 1.0;
    }
    [hue, sat, max]
}

fn hsb_to_rgb(h: f64, s: f64, v: f64) -> [f64; 3] {
    if s <= 0.0 {
        return [v, v, v];
    }
    let h6 = (h - h.floor()) * 6.0;
    let sector = h6.floor();
    let f = h6 - sector;
    let p = v * (1.0 - s);
    let q = v * (1.0 - s * f);
    let t = v * (1.0 - s * (1.0 - f));
    match sector as u8 {
        0 => [v, t, p],
        1 => [q, v, p],
        2 => [p, v, t],
        3 => [p, q, v],
        4 => [t, p, v],
        _ => [v, p, q],
    }
}

/// Six hexadecimal digits `RRGGBB`. Parses either case, prints uppercase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HexCode(pub [u8; 3]);

impl fmt::Display for HexCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [r, g, b] = self.0;
        write!(f, "{r:02X}{g:02X}{b:02X}")
    }
}

impl FromStr for HexCode {
    type Err = ColorError;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() != 6 || !s.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(ColorError::Hex(s.to_string()));
        }
        let byte = |i: usize| u8::from_str_radix(&s[i..i + 2], 16).expect("validated hex digits");
        Ok(HexCode([byte(0), byte(2), byte(4)]))
    }
}

/// Parses a channel list such as `.7,.6,.5` or `.7 .6 .5` for `model`.
/// For `HTML` the text is a hex code.
pub fn parse_channel_spec(model: Model, text: &str) -> Result<ColorValue> {
    let text = text.trim();
    if model == Model::Html {
        let hex: HexCode = text.parse()?;
        let [r, g, b, _] = ColorValue::from_hex(&hex).channels;
        return Ok(ColorValue::html(r, g, b));
    }
    let tokens: Vec<&str> = if text.contains(',') {
        text.split(',').map(str::trim).collect()
    } else {
        text.split_whitespace().collect()
    };
    let mut values = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let value: f64 = tok
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite() && !tok.is_empty())
            .ok_or_else(|| ColorError::Spec(format!("`{tok}` is not a number")))?;
        values.push(value);
    }
    ColorValue::new(model, &values)
}
