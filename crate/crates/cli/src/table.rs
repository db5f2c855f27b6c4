//! The two built-in reference tables of zero locations.
//!
//! Table 1 lists the first three zeros of the degree-10 polynomial for
//! nine `(beta, c)` pairs in the order-2 regime; table 2 lists all five
//! zeros of the degree-5 polynomial at `c = 1/5` for two nearby `beta`
//! values, exhibiting the non-monotone second zero. Each cell is rendered
//! to a fixed per-cell precision; the underlying intervals are refined to
//! width 1e-20 first, so every printed digit is correctly rounded.

use std::str::FromStr;

use qmeixner::rational::pow10;
use qmeixner::{rat, zeros_of, MeixnerParams, Rational};

use crate::render::{decimal_sci, decimal_sig, minimal_decimal, significand_len};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    Table1,
    Table2,
}

impl FromStr for TableId {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "table1" => Ok(TableId::Table1),
            "table2" => Ok(TableId::Table2),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Style {
    Fixed,
    Sci,
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    sig: usize,
    style: Style,
}

const fn fixed(sig: usize) -> Cell {
    Cell {
        sig,
        style: Style::Fixed,
    }
}

const fn sci(sig: usize) -> Cell {
    Cell {
        sig,
        style: Style::Sci,
    }
}

struct Table1Row {
    beta: (i64, i64),
    c: (i64, i64),
    cells: [Cell; 3],
}

const TABLE1_DEGREE: usize = 10;
#[rustfmt::skip]
const TABLE1_ROWS: [Table1Row; 9] = [
    Table1Row { beta: (-199, 100), c: (1, 10), cells: [sci(4), fixed(12), fixed(11)] },
    Table1Row { beta: (-199, 100), c: (1, 2),  cells: [sci(4), fixed(6), fixed(6)] },
    Table1Row { beta: (-199, 100), c: (4, 5),  cells: [fixed(4), fixed(6), fixed(6)] },
    Table1Row { beta: (-3, 2),     c: (1, 10), cells: [sci(4), fixed(11), fixed(9)] },
    Table1Row { beta: (-3, 2),     c: (1, 2),  cells: [fixed(3), fixed(4), fixed(5)] },
    Table1Row { beta: (-3, 2),     c: (4, 5),  cells: [fixed(6), fixed(6), fixed(6)] },
    Table1Row { beta: (-101, 100), c: (1, 10), cells: [sci(4), fixed(12), fixed(8)] },
    Table1Row { beta: (-101, 100), c: (1, 2),  cells: [sci(4), fixed(6), fixed(5)] },
    Table1Row { beta: (-101, 100), c: (4, 5),  cells: [fixed(6), fixed(6), fixed(5)] },
];

struct Table2Row {
    beta: (i64, i64),
    cells: [Cell; 5],
}

const TABLE2_DEGREE: usize = 5;
const TABLE2_C: (i64, i64) = (1, 5);
#[rustfmt::skip]
const TABLE2_ROWS: [Table2Row; 2] = [
    Table2Row { beta: (-19, 10), cells: [fixed(3), fixed(6), fixed(7), fixed(7), fixed(8)] },
    Table2Row { beta: (-9, 5),   cells: [fixed(6), fixed(6), fixed(5), fixed(6), fixed(6)] },
];

#[derive(Debug, Clone)]
pub struct RenderedTable {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

fn render_cell(value: &Rational, cell: Cell) -> String {
    match cell.style {
        Style::Fixed => decimal_sig(value, cell.sig),
        Style::Sci => decimal_sci(value, cell.sig),
    }
}

/// Threshold column: exact decimal when it terminates within three
/// significant digits, else rounded to three.
fn render_threshold(value: &Rational) -> String {
    match minimal_decimal(value) {
        Some(s) if significand_len(&s) <= 3 => s,
        _ => decimal_sig(value, 3),
    }
}

/// Degrees of the polynomials behind a table, for help text.
pub fn table_degree(id: TableId) -> usize {
    match id {
        TableId::Table1 => TABLE1_DEGREE,
        TableId::Table2 => TABLE2_DEGREE,
    }
}

/// Computes and renders the requested table.
pub fn reference_table(id: TableId) -> RenderedTable {
    let width = pow10(-20);
    match id {
        TableId::Table1 => {
            let mut rows = Vec::new();
            for row in &TABLE1_ROWS {
                let beta = rat(row.beta.0, row.beta.1);
                let c = rat(row.c.0, row.c.1);
                let threshold = &beta / (&c - Rational::from_integer(1.into()));
                let p = MeixnerParams::new(TABLE1_DEGREE, beta.clone(), c.clone()).unwrap();
                let zeros = zeros_of(&p, &width);
                assert_eq!(zeros.real_count(), TABLE1_DEGREE);
                let mut out = vec![
                    minimal_decimal(&-&beta).unwrap(),
                    minimal_decimal(&c).unwrap(),
                    render_threshold(&threshold),
                ];
                for (i, cell) in row.cells.iter().enumerate() {
                    out.push(render_cell(&zeros.get(i).midpoint(), *cell));
                }
                rows.push(out);
            }
            RenderedTable {
                header: vec!["-beta", "c", "beta/(c-1)", "x1", "x2", "x3"],
                rows,
            }
        }
        TableId::Table2 => {
            let c = rat(TABLE2_C.0, TABLE2_C.1);
            let mut rows = Vec::new();
            for row in &TABLE2_ROWS {
                let beta = rat(row.beta.0, row.beta.1);
                let p = MeixnerParams::new(TABLE2_DEGREE, beta.clone(), c.clone()).unwrap();
                let zeros = zeros_of(&p, &width);
                assert_eq!(zeros.real_count(), TABLE2_DEGREE);
                let mut out = vec![minimal_decimal(&beta).unwrap()];
                for (i, cell) in row.cells.iter().enumerate() {
                    out.push(render_cell(&zeros.get(i).midpoint(), *cell));
                }
                rows.push(out);
            }
            RenderedTable {
                header: vec!["beta", "x1", "x2", "x3", "x4", "x5"],
                rows,
            }
        }
    }
}
