//! Alternating table row colors.
//!
//! Precedence for a cell, highest first: cell override, one-shot row
//! override, hidden suppression, scheduled stripe, nothing.

use crate::error::{ColorError, Result};
use crate::expr::ColorExpr;

#[derive(Debug, Clone, PartialEq)]
pub struct StripeScheduler {
    start_row: u32,
    odd: Option<ColorExpr>,
    even: Option<ColorExpr>,
    command: Option<String>,
    row_counter: u32,
    hidden: bool,
    pending_override: Option<ColorExpr>,
}

/// What a single row receives when it begins.
#[derive(Debug, Clone, PartialEq)]
pub struct RowPaint {
    pub row_number: u32,
    pub color: Option<ColorExpr>,
    pub commands: Vec<String>,
}

impl StripeScheduler {
    /// Stripes start at `start_row` (1-based). `None` for a parity leaves
    /// those rows uncolored. `command` is an opaque token emitted at the
    /// start of every row from `start_row` on.
    pub fn rowcolors(
        start_row: u32,
        odd: Option<ColorExpr>,
        even: Option<ColorExpr>,
        command: Option<String>,
    ) -> Result<Self> {
        if start_row < 1 {
            return Err(ColorError::Range(format!(
                "stripe start row must be at least 1, got {start_row}"
            )));
        }
        Ok(StripeScheduler {
            start_row,
            odd,
            even,
            command,
            row_counter: 0,
            hidden: false,
            pending_override: None,
        })
    }

    pub fn row_counter(&self) -> u32 {
        self.row_counter
    }

    pub fn is_hidden(&self) -> bool {
        self.hidden
    }

    pub fn begin_row(&mut self) -> RowPaint {
        self.row_counter += 1;
        let n = self.row_counter;
        let striping = n >= self.start_row;
        let color = match self.pending_override.take() {
            Some(expr) => Some(expr),
            None if self.hidden || !striping => None,
            None if (n - self.start_row).is_multiple_of(2) => self.odd.clone(),
            None => self.even.clone(),
        };
        let commands = match &self.command {
            Some(cmd) if striping => vec![cmd.clone()],
            _ => Vec::new(),
        };
        RowPaint {
            row_number: n,
            color,
            commands,
        }
    }

    /// Colors the next row with `expr` regardless of schedule or hiding.
    pub fn set_row_override(&mut self, expr: ColorExpr) {
        self.pending_override = Some(expr);
    }

    pub fn hide_row_colors(&mut self) {
        self.hidden = true;
    }

    pub fn show_row_colors(&mut self) {
        self.hidden = false;
    }
}

/// Effective color of a cell: its own override, else the row's color.
pub fn cell_paint<'a>(
    row: &'a RowPaint,
    cell_override: Option<&'a ColorExpr>,
) -> Option<&'a ColorExpr> {
    cell_override.or(row.color.as_ref())
}
