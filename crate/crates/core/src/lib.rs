//! Color expressions in the style of LaTeX color packages.
//!
//! - [`model`]: rgb, cmy, cmyk, hsb, gray and HTML values and conversions
//! - [`registry`]: the named color store
//! - [`expr`]: parser and printer for expressions like `red!50!blue`,
//!   `-.` or `rgb,10:red,7;green,6;blue,5`
//! - [`eval`]: evaluation against a database and ambient current color
//! - [`series`]: arithmetic color series (`foo!!+`, `foo!![2]`)
//! - [`stripes`]: alternating table row colors
//! - [`cli`]: the commands behind the `colorexpr` binary

pub mod cli;
pub mod error;
pub mod eval;
pub mod expr;
pub mod model;
pub mod registry;
pub mod series;
pub mod stripes;

pub use error::{ColorError, Result};
pub use eval::EvalContext;
pub use expr::{parse_expr, unparse, ColorExpr};
pub use model::{parse_channel_spec, ColorValue, HexCode, Model, ModelTag};
pub use registry::ColorDatabase;
pub use series::{Scheme, SeriesTable};
pub use stripes::{cell_paint, RowPaint, StripeScheduler};
