//! Parameter grids for verification sweeps.

use serde::Deserialize;

use qmeixner::{parse_rational, rat, Rational};

/// The rectangle of parameters a sweep runs over.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub beta_values: Vec<Rational>,
    pub c_values: Vec<Rational>,
    pub n_min: usize,
    pub n_max: usize,
    /// Target width for reported zero intervals.
    pub width: Rational,
}

impl Default for GridSpec {
    /// Off-integer `beta` values spanning the order-2, order-1 and
    /// orthogonal regimes, `c` across the unit interval, degrees up to 10.
    fn default() -> Self {
        GridSpec {
            beta_values: [
                (-19, 10),
                (-3, 2),
                (-11, 10),
                (-9, 10),
                (-1, 2),
                (-1, 10),
                (1, 2),
                (3, 2),
                (5, 1),
            ]
            .iter()
            .map(|&(n, d)| rat(n, d))
            .collect(),
            c_values: [(1, 10), (1, 5), (1, 2), (4, 5), (9, 10)]
                .iter()
                .map(|&(n, d)| rat(n, d))
                .collect(),
            n_min: 0,
            n_max: 10,
            width: rat(1, 1_000_000_000),
        }
    }
}

#[derive(Deserialize)]
struct GridFile {
    beta: Vec<String>,
    c: Vec<String>,
    #[serde(default)]
    n_min: usize,
    n_max: usize,
    #[serde(default)]
    width: Option<String>,
}

impl GridSpec {
    pub fn from_json(text: &str) -> Result<Self, String> {
        let raw: GridFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let parse_all = |items: &[String]| -> Result<Vec<Rational>, String> {
            items
                .iter()
                .map(|s| parse_rational(s).map_err(|e| e.to_string()))
                .collect()
        };
        let beta_values = parse_all(&raw.beta)?;
        let c_values = parse_all(&raw.c)?;
        if beta_values.is_empty() || c_values.is_empty() {
            return Err("grid needs at least one beta and one c value".to_string());
        }
        if raw.n_max < raw.n_min {
            return Err("n_max must be >= n_min".to_string());
        }
        let width = match raw.width {
            Some(w) => parse_rational(&w).map_err(|e| e.to_string())?,
            None => rat(1, 1_000_000_000),
        };
        if width <= rat(0, 1) {
            return Err("width must be positive".to_string());
        }
        Ok(GridSpec {
            beta_values,
            c_values,
            n_min: raw.n_min,
            n_max: raw.n_max,
            width,
        })
    }

    pub fn load(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::from_json(&text)
    }
}
