//! Comparison representations: ESAX (max, min and mean symbols per segment, in time order)
//! and SAX-TD (SAX plus numeric start/end deviations from the segment mean).

use std::fmt;

use crate::error::{Error, Result};
use crate::sax::{
    check_table, sax_encode_values, sum_sq_symbol_dist, value_letter, BreakpointTable, SaxWord,
};
use crate::series::{mean, segment, TimeSeries};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EsaxWord {
    symbols: Vec<u8>,
    alpha: usize,
    w: usize,
    n: usize,
}

impl EsaxWord {
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parse(text: &str, alpha: usize, n: usize) -> Result<Self> {
        let symbols = crate::sax::parse_letters(text, alpha)?;
        if symbols.is_empty() || symbols.len() % 3 != 0 || symbols.len() / 3 > n {
            return Err(Error::WordParse {
                text: text.to_string(),
                msg: "ESAX words hold three symbols per segment".into(),
            });
        }
        let w = symbols.len() / 3;
        Ok(EsaxWord {
            symbols,
            alpha,
            w,
            n,
        })
    }
}

impl fmt::Display for EsaxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", value_letter(s))?;
        }
        Ok(())
    }
}

/// Per segment: max, min and mean symbols, ordered by where each occurs. The mean sits at the
/// segment's middle index; equal positions order max, then min, then mean.
pub fn esax_encode(series: &TimeSeries, w: usize, table: &BreakpointTable) -> Result<EsaxWord> {
    esax_encode_values(series.values(), w, table)
}

pub(crate) fn esax_encode_values(
    values: &[f64],
    w: usize,
    table: &BreakpointTable,
) -> Result<EsaxWord> {
    let segmentation = segment(values.len(), w)?;
    let mut symbols = Vec::with_capacity(3 * w);
    for seg in segmentation.slices(values) {
        let (mut imax, mut imin) = (0, 0);
        for (i, &v) in seg.iter().enumerate() {
            if v > seg[imax] {
                imax = i;
            }
            if v < seg[imin] {
                imin = i;
            }
        }
        let mut slots = [
            (imax, 0u8, seg[imax]),
            (imin, 1, seg[imin]),
            ((seg.len() - 1) / 2, 2, mean(seg)),
        ];
        slots.sort_by_key(|&(pos, rank, _)| (pos, rank));
        symbols.extend(slots.iter().map(|&(_, _, v)| table.symbol_of(v)));
    }
    Ok(EsaxWord {
        symbols,
        alpha: table.alpha(),
        w,
        n: values.len(),
    })
}

/// `sqrt(n / 3w) * sqrt(sum over the 3w positions of dist^2)`.
pub fn esax_dist(a: &EsaxWord, b: &EsaxWord, table: &BreakpointTable) -> Result<f64> {
    if a.n != b.n || a.w != b.w || a.alpha != b.alpha {
        return Err(Error::ParamMismatch(format!(
            "ESAX (n={}, w={}, alpha={}) vs (n={}, w={}, alpha={})",
            a.n, a.w, a.alpha, b.n, b.w, b.alpha
        )));
    }
    check_table(a.alpha, table)?;
    Ok(esax_dist_unchecked(a, b, table))
}

pub(crate) fn esax_dist_unchecked(a: &EsaxWord, b: &EsaxWord, table: &BreakpointTable) -> f64 {
    let scale = a.n as f64 / (3 * a.w) as f64;
    (scale * sum_sq_symbol_dist(&a.symbols, &b.symbols, table)).sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SaxTdWord {
    sax: SaxWord,
    /// `(start - mean, end - mean)` for each segment.
    deltas: Vec<(f64, f64)>,
}

impl SaxTdWord {
    pub fn new(sax: SaxWord, deltas: Vec<(f64, f64)>) -> Result<Self> {
        if deltas.len() != sax.w() {
            return Err(Error::ParamMismatch(format!(
                "{} deltas for {} segments",
                deltas.len(),
                sax.w()
            )));
        }
        Ok(SaxTdWord { sax, deltas })
    }

    pub fn sax(&self) -> &SaxWord {
        &self.sax
    }

    pub fn deltas(&self) -> &[(f64, f64)] {
        &self.deltas
    }

    /// Parses whitespace-separated `letter:start_delta:end_delta` tokens.
    pub fn parse(text: &str, alpha: usize, n: usize) -> Result<Self> {
        let bad = |msg: String| Error::WordParse {
            text: text.to_string(),
            msg,
        };
        let mut letters = String::new();
        let mut deltas = Vec::new();
        for tok in text.split_whitespace() {
            let parts: Vec<&str> = tok.split(':').collect();
            let [letter, ds, de] = parts[..] else {
                return Err(bad(format!("token {tok:?} is not letter:start:end")));
            };
            let num = |s: &str| s.parse::<f64>().map_err(|e| bad(format!("{s:?}: {e}")));
            letters.push_str(letter);
            deltas.push((num(ds)?, num(de)?));
        }
        SaxTdWord::new(SaxWord::parse(&letters, alpha, n)?, deltas)
    }
}

impl fmt::Display for SaxTdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&s, &(ds, de))) in self.sax.symbols().iter().zip(&self.deltas).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}:{}", value_letter(s), ds, de)?;
        }
        Ok(())
    }
}

pub fn saxtd_encode(series: &TimeSeries, w: usize, table: &BreakpointTable) -> Result<SaxTdWord> {
    saxtd_encode_values(series.values(), w, table)
}

pub(crate) fn saxtd_encode_values(
    values: &[f64],
    w: usize,
    table: &BreakpointTable,
) -> Result<SaxTdWord> {
    let sax = sax_encode_values(values, w, table)?;
    let segmentation = segment(values.len(), w)?;
    let deltas = segmentation
        .slices(values)
        .map(|seg| {
            let m = mean(seg);
            (seg[0] - m, seg[seg.len() - 1] - m)
        })
        .collect();
    Ok(SaxTdWord { sax, deltas })
}

/// `sqrt((n/w) * sum_i [dist^2 + (w/n) * td_i^2])` with
/// `td_i^2 = (dq_s - dc_s)^2 + (dq_e - dc_e)^2`.
pub fn saxtd_dist(a: &SaxTdWord, b: &SaxTdWord, table: &BreakpointTable) -> Result<f64> {
    crate::sax::check_same_shape(&a.sax, &b.sax)?;
    check_table(a.sax.alpha(), table)?;
    Ok(saxtd_dist_unchecked(a, b, table))
}

pub(crate) fn saxtd_dist_unchecked(a: &SaxTdWord, b: &SaxTdWord, table: &BreakpointTable) -> f64 {
    let n = a.sax.n() as f64;
    let w = a.sax.w() as f64;
    let mean_term = sum_sq_symbol_dist(a.sax.symbols(), b.sax.symbols(), table);
    let trend_term: f64 = a
        .deltas
        .iter()
        .zip(&b.deltas)
        .map(|(&(qs, qe), &(cs, ce))| (qs - cs) * (qs - cs) + (qe - ce) * (qe - ce))
        .sum();
    ((n / w) * (mean_term + (w / n) * trend_term)).sqrt()
}
