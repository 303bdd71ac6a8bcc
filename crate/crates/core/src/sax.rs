//! Classic SAX: Gaussian breakpoints, symbolization of PAA means, symbol distance and MINDIST.
//!
//! Symbols are stored as zero-based indices (`0` is the lowest interval) and rendered as
//! lowercase letters starting at `'a'`.

use std::fmt;

use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::series::{paa_values, PaaVector};

pub const MIN_ALPHA: usize = 2;
pub const MAX_ALPHA: usize = 26;

/// Equiprobable N(0,1) breakpoints for an alphabet of size `alpha`, plus the symbol
/// distance lookup matrix derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct BreakpointTable {
    alpha: usize,
    betas: Vec<f64>,
    dist: Vec<f64>,
}

impl BreakpointTable {
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// The `alpha - 1` interior breakpoints, strictly increasing.
    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    /// Interval index of `value`. A value equal to a breakpoint belongs to the upper interval.
    pub fn symbol_of(&self, value: f64) -> u8 {
        self.betas.partition_point(|&b| b <= value) as u8
    }

    /// Lookup distance between two symbols; 0 for equal or adjacent symbols.
    pub fn symbol_dist(&self, i: usize, j: usize) -> Result<f64> {
        for index in [i, j] {
            if index >= self.alpha {
                return Err(Error::SymbolOutOfRange {
                    index,
                    alpha: self.alpha,
                });
            }
        }
        Ok(self.dist_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn dist_unchecked(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.alpha + j]
    }
}

pub fn gaussian_breakpoints(alpha: usize) -> Result<BreakpointTable> {
    if !(MIN_ALPHA..=MAX_ALPHA).contains(&alpha) {
        return Err(Error::InvalidAlpha(alpha));
    }
    let normal = Normal::standard();
    let mut betas: Vec<f64> = (1..alpha)
        .map(|k| normal.inverse_cdf(k as f64 / alpha as f64))
        .collect();
    // Quantiles at k/alpha and (alpha-k)/alpha are mirror images; enforce exact symmetry.
    for k in 0..betas.len() / 2 {
        let m = betas.len() - 1 - k;
        let half = (betas[m] - betas[k]) / 2.0;
        betas[k] = -half;
        betas[m] = half;
    }
    if betas.len() % 2 == 1 {
        let mid = betas.len() / 2;
        betas[mid] = 0.0;
    }
    let dist = lookup_matrix(alpha, |hi, lo| betas[hi - 1] - betas[lo]);
    Ok(BreakpointTable { alpha, betas, dist })
}

/// Builds the `alpha x alpha` lookup matrix shared by the value and trend channels:
/// zero on and next to the diagonal, `gap(max - 1, min)` elsewhere (zero-based indices).
pub(crate) fn lookup_matrix(alpha: usize, gap: impl Fn(usize, usize) -> f64) -> Vec<f64> {
    let mut m = vec![0.0; alpha * alpha];
    for i in 0..alpha {
        for j in 0..alpha {
            if i.abs_diff(j) > 1 {
                m[i * alpha + j] = gap(i.max(j), i.min(j));
            }
        }
    }
    m
}

/// A SAX word: one symbol per segment of a length-`n` series.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SaxWord {
    symbols: Vec<u8>,
    alpha: usize,
    n: usize,
}

impl SaxWord {
    pub fn new(symbols: Vec<u8>, alpha: usize, n: usize) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| s as usize >= alpha) {
            return Err(Error::SymbolOutOfRange {
                index: s as usize,
                alpha,
            });
        }
        if symbols.is_empty() || symbols.len() > n {
            return Err(Error::InvalidW {
                w: symbols.len(),
                n,
            });
        }
        Ok(SaxWord { symbols, alpha, n })
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn w(&self) -> usize {
        self.symbols.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Parses a letter string such as `"feacdb"` (case-insensitive).
    pub fn parse(text: &str, alpha: usize, n: usize) -> Result<Self> {
        let symbols = parse_letters(text, alpha)?;
        SaxWord::new(symbols, alpha, n)
    }
}

impl fmt::Display for SaxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", value_letter(s))?;
        }
        Ok(())
    }
}

pub(crate) fn value_letter(symbol: u8) -> char {
    (b'a' + symbol) as char
}

pub(crate) fn parse_letters(text: &str, alpha: usize) -> Result<Vec<u8>> {
    text.trim()
        .chars()
        .map(|c| {
            let lc = c.to_ascii_lowercase();
            if !lc.is_ascii_lowercase() {
                return Err(Error::WordParse {
                    text: text.to_string(),
                    msg: format!("unexpected character {c:?}"),
                });
            }
            let s = lc as u8 - b'a';
            if s as usize >= alpha {
                return Err(Error::SymbolOutOfRange {
                    index: s as usize,
                    alpha,
                });
            }
            Ok(s)
        })
        .collect()
}

pub fn sax_symbolize(paa: &PaaVector, table: &BreakpointTable) -> SaxWord {
    SaxWord {
        symbols: paa.means.iter().map(|&m| table.symbol_of(m)).collect(),
        alpha: table.alpha(),
        n: paa.segmentation.n(),
    }
}

pub(crate) fn sax_encode_values(
    values: &[f64],
    w: usize,
    table: &BreakpointTable,
) -> Result<SaxWord> {
    Ok(sax_symbolize(&paa_values(values, w)?, table))
}

pub(crate) fn check_same_shape(q: &SaxWord, c: &SaxWord) -> Result<()> {
    if q.n != c.n || q.w() != c.w() || q.alpha != c.alpha {
        return Err(Error::ParamMismatch(format!(
            "(n={}, w={}, alpha={}) vs (n={}, w={}, alpha={})",
            q.n,
            q.w(),
            q.alpha,
            c.n,
            c.w(),
            c.alpha
        )));
    }
    Ok(())
}

/// Sum of squared symbol distances over aligned positions.
pub(crate) fn sum_sq_symbol_dist(q: &[u8], c: &[u8], table: &BreakpointTable) -> f64 {
    q.iter()
        .zip(c)
        .map(|(&a, &b)| {
            let d = table.dist_unchecked(a as usize, b as usize);
            d * d
        })
        .sum()
}

pub(crate) fn check_table(alpha: usize, table: &BreakpointTable) -> Result<()> {
    if table.alpha() != alpha {
        return Err(Error::ParamMismatch(format!(
            "word alphabet {alpha} vs breakpoint table {}",
            table.alpha()
        )));
    }
    Ok(())
}

/// `sqrt(n/w) * sqrt(sum dist(q_i, c_i)^2)`.
pub fn mindist(q: &SaxWord, c: &SaxWord, table: &BreakpointTable) -> Result<f64> {
    check_same_shape(q, c)?;
    check_table(q.alpha, table)?;
    let scale = q.n as f64 / q.w() as f64;
    Ok((scale * sum_sq_symbol_dist(&q.symbols, &c.symbols, table)).sqrt())
}
