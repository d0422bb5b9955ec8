//! Test-only oracle: a small, separately written evaluator for standard
//! and extended expressions over the base colors, plus random generators.
//! It shares no code with the library's conversion or evaluation paths.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

/// The seventeen base colors as (name, model, channels).
pub const BASE: [(&str, &str, &[f64]); 17] = [
    ("red", "rgb", &[1.0, 0.0, 0.0]),
    ("green", "rgb", &[0.0, 1.0, 0.0]),
    ("blue", "rgb", &[0.0, 0.0, 1.0]),
    ("cyan", "cmyk", &[1.0, 0.0, 0.0, 0.0]),
    ("magenta", "cmyk", &[0.0, 1.0, 0.0, 0.0]),
    ("yellow", "cmyk", &[0.0, 0.0, 1.0, 0.0]),
    ("orange", "rgb", &[1.0, 0.5, 0.0]),
    ("violet", "rgb", &[0.5, 0.0, 0.5]),
    ("purple", "rgb", &[0.75, 0.0, 0.25]),
    ("brown", "rgb", &[0.75, 0.5, 0.25]),
    ("pink", "rgb", &[1.0, 0.75, 0.75]),
    ("olive", "rgb", &[0.5, 0.5, 0.0]),
    ("black", "gray", &[0.0]),
    ("darkgray", "gray", &[0.25]),
    ("gray", "gray", &[0.5]),
    ("lightgray", "gray", &[0.75]),
    ("white", "gray", &[1.0]),
];

/// Every color expression used by the example documents.
pub const DOC_CORPUS: &[&str] = &[
    "red",
    "green",
    "blue",
    "cyan",
    "magenta",
    "yellow",
    "orange",
    "violet",
    "purple",
    "brown",
    "pink",
    "olive",
    "black",
    "darkgray",
    "gray",
    "lightgray",
    "white",
    "-red",
    "-green",
    "-blue",
    "-cyan",
    "-magenta",
    "-yellow",
    "-orange",
    "-violet",
    "-purple",
    "-brown",
    "-pink",
    "-olive",
    "-black",
    "-darkgray",
    "-gray",
    "-lightgray",
    "-white",
    "JungleGreen",
    "DarkOrchid",
    "-JungleGreen",
    "-DarkOrchid",
    "dummy",
    "c1",
    "c2",
    "c1a",
    "c2a",
    "rgb,10:red,7;green,6;blue,5",
    "rgb,15:red,10.5;green,9;blue,7.5",
    "rgb:red!50,4;green!25,2",
    "JungleGreen!50!DarkOrchid",
    "green!50!red",
    ".!50",
    "-.",
    "yellow!50!.",
    ".!80",
    ".",
    "foo!!+",
    "foo!!++",
    "foo!![2]",
    "green!25",
    "yellow!50",
    "blue!25",
    "red!12",
];

/// The 38 swatch rows of the predefined-colors table.
pub fn swatch_rows() -> Vec<String> {
    let mut rows: Vec<String> = BASE.iter().map(|(n, _, _)| n.to_string()).collect();
    rows.extend(BASE.iter().map(|(n, _, _)| format!("-{n}")));
    rows.extend(["JungleGreen", "DarkOrchid", "-JungleGreen", "-DarkOrchid"].map(String::from));
    rows
}

#[derive(Debug, Clone, PartialEq)]
pub struct OValue {
    pub model: &'static str,
    pub ch: Vec<f64>,
}

fn unit(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

impl OValue {
    pub fn new(model: &'static str, ch: &[f64]) -> Self {
        OValue {
            model,
            ch: ch.iter().map(|x| unit(*x)).collect(),
        }
    }

    fn rgb(&self) -> [f64; 3] {
        let c = &self.ch;
        match self.model {
            "rgb" => [c[0], c[1], c[2]],
            "cmy" => [1.0 - c[0], 1.0 - c[1], 1.0 - c[2]],
            "cmyk" => [
                1.0 - (c[0] + c[3]).min(1.0),
                1.0 - (c[1] + c[3]).min(1.0),
                1.0 - (c[2] + c[3]).min(1.0),
            ],
            "gray" => [c[0]; 3],
            m => panic!("oracle has no model {m}"),
        }
    }

    pub fn to(&self, model: &'static str) -> OValue {
        if model == self.model {
            return self.clone();
        }
        if self.model == "cmyk" && model == "cmy" {
            let c = &self.ch;
            return OValue::new(
                "cmy",
                &[
                    (c[0] + c[3]).min(1.0),
                    (c[1] + c[3]).min(1.0),
                    (c[2] + c[3]).min(1.0),
                ],
            );
        }
        let cmy_in = if self.model == "cmy" {
            Some(self.ch.clone())
        } else {
            None
        };
        let [r, g, b] = self.rgb();
        match model {
            "rgb" => OValue::new("rgb", &[r, g, b]),
            "cmy" => OValue::new("cmy", &[1.0 - r, 1.0 - g, 1.0 - b]),
            "cmyk" => {
                let cmy = cmy_in.unwrap_or_else(|| vec![1.0 - r, 1.0 - g, 1.0 - b]);
                let k = cmy.iter().cloned().fold(f64::INFINITY, f64::min);
                OValue::new("cmyk", &[cmy[0] - k, cmy[1] - k, cmy[2] - k, k])
            }
            "gray" => OValue::new("gray", &[0.3 * r + 0.59 * g + 0.11 * b]),
            m => panic!("oracle has no model {m}"),
        }
    }

    pub fn mix(&self, p: f64, other: &OValue) -> OValue {
        let o = other.to(self.model);
        let t = p / 100.0;
        let ch: Vec<f64> = self
            .ch
            .iter()
            .zip(&o.ch)
            .map(|(a, b)| t * a + (1.0 - t) * b)
            .collect();
        OValue::new(self.model, &ch)
    }

    pub fn complement(&self) -> OValue {
        match self.model {
            "cmyk" => self.to("cmy").complement().to("cmyk"),
            _ => OValue::new(
                self.model,
                &self.ch.iter().map(|x| 1.0 - x).collect::<Vec<_>>(),
            ),
        }
    }
}

pub fn base(name: &str) -> OValue {
    let (_, model, ch) = BASE
        .iter()
        .find(|(n, _, _)| *n == name)
        .expect("base color");
    OValue::new(model, ch)
}

/// Standard expression over base colors: `-…head!p!x!p…`.
#[derive(Debug, Clone)]
pub struct OStandard {
    pub minus: u32,
    pub head: &'static str,
    /// `None` operand means the trailing bare percent (mix with white).
    pub chain: Vec<(f64, Option<&'static str>)>,
}

#[derive(Debug, Clone)]
pub struct OExtended {
    pub model: &'static str,
    pub divisor: Option<f64>,
    pub terms: Vec<(OStandard, f64)>,
}

impl OStandard {
    pub fn text(&self) -> String {
        let mut s = "-".repeat(self.minus as usize);
        s.push_str(self.head);
        for (p, with) in &self.chain {
            s.push_str(&format!("!{p}"));
            if let Some(w) = with {
                s.push_str(&format!("!{w}"));
            }
        }
        s
    }

    pub fn eval(&self) -> OValue {
        let mut acc = base(self.head);
        for (p, with) in &self.chain {
            acc = acc.mix(*p, &base(with.unwrap_or("white")));
        }
        if self.minus % 2 == 1 {
            acc = acc.complement();
        }
        acc
    }
}

impl OExtended {
    pub fn text(&self) -> String {
        let mut s = self.model.to_string();
        if let Some(d) = self.divisor {
            s.push_str(&format!(",{d}"));
        }
        s.push(':');
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(t, w)| format!("{},{w}", t.text()))
            .collect();
        s.push_str(&terms.join(";"));
        s
    }

    /// Brute force: evaluate each term, convert, weight, divide.
    pub fn eval(&self) -> Option<OValue> {
        let n = match self.model {
            "cmyk" => 4,
            "gray" => 1,
            _ => 3,
        };
        let mut sum = vec![0.0; n];
        let mut wsum = 0.0;
        for (term, w) in &self.terms {
            let v = term.eval().to(self.model);
            for (s, c) in sum.iter_mut().zip(&v.ch) {
                *s += w * c;
            }
            wsum += w;
        }
        let d = self.divisor.unwrap_or(wsum);
        if d == 0.0 {
            return None;
        }
        Some(OValue::new(
            self.model,
            &sum.iter().map(|s| s / d).collect::<Vec<_>>(),
        ))
    }
}

/// Decimal with at most two fractional digits, as a user would type it.
fn decimal(rng: &mut StdRng, lo: u32, hi: u32) -> f64 {
    f64::from(rng.gen_range(lo * 100..=hi * 100)) / 100.0
}

pub fn random_standard(rng: &mut StdRng) -> OStandard {
    let name = |rng: &mut StdRng| BASE[rng.gen_range(0..BASE.len())].0;
    let head = name(rng);
    let steps = rng.gen_range(0..4);
    let mut chain = Vec::new();
    for i in 0..steps {
        let p = decimal(rng, 0, 100);
        let last = i + 1 == steps;
        let with = if last && rng.gen_bool(0.3) {
            None
        } else {
            Some(name(rng))
        };
        chain.push((p, with));
        if with.is_none() {
            break;
        }
    }
    OStandard {
        minus: rng.gen_range(0..3),
        head,
        chain,
    }
}

pub fn random_extended(rng: &mut StdRng) -> OExtended {
    let model = ["rgb", "cmy", "cmyk", "gray"][rng.gen_range(0..4)];
    let terms: Vec<(OStandard, f64)> = (0..rng.gen_range(1..5))
        .map(|_| (random_standard(rng), decimal(rng, 0, 10) + 0.01))
        .collect();
    let divisor = if rng.gen_bool(0.5) {
        Some(decimal(rng, 1, 20))
    } else {
        None
    };
    OExtended {
        model,
        divisor,
        terms,
    }
}

pub fn assert_channels_close(actual: &[f64], expected: &[f64], tol: f64) -> Result<(), String> {
    if actual.len() != expected.len() {
        return Err(format!("arity mismatch {actual:?} vs {expected:?}"));
    }
    for (a, e) in actual.iter().zip(expected) {
        if (a - e).abs() > tol {
            return Err(format!("{actual:?} vs {expected:?} (tol {tol:e})"));
        }
    }
    Ok(())
}
