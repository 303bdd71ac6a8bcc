//! TFSAX words (a mean symbol and a trend symbol per segment) and the TDIST distance.

use std::fmt;

use crate::error::{Error, Result};
use crate::sax::{
    check_same_shape, check_table, gaussian_breakpoints, sax_encode_values, sum_sq_symbol_dist,
    value_letter, BreakpointTable, SaxWord,
};
use crate::series::{segment, TimeSeries};
use crate::trend::{
    angle_breakpoints, trend_encode_values, trend_letter, AngleBreakpointTable, TrendWord,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TfsaxWord {
    sax: SaxWord,
    trend: TrendWord,
}

impl TfsaxWord {
    pub fn new(sax: SaxWord, trend: TrendWord) -> Result<Self> {
        if sax.w() != trend.w() {
            return Err(Error::ParamMismatch(format!(
                "mean channel has {} symbols, trend channel has {}",
                sax.w(),
                trend.w()
            )));
        }
        Ok(TfsaxWord { sax, trend })
    }

    pub fn sax(&self) -> &SaxWord {
        &self.sax
    }

    pub fn trend(&self) -> &TrendWord {
        &self.trend
    }

    pub fn w(&self) -> usize {
        self.sax.w()
    }

    pub fn n(&self) -> usize {
        self.sax.n()
    }

    /// Parses either the canonical `"bE bA"` form (mean letter then trend letter per segment)
    /// or the underscore form `"E_bA_b"` (trend letter, `_`, mean letter). Letters are
    /// case-insensitive; their position decides the channel.
    pub fn parse(text: &str, alpha: usize, alpha_t: usize, n: usize) -> Result<Self> {
        let bad = |msg: &str| Error::WordParse {
            text: text.to_string(),
            msg: msg.to_string(),
        };
        let trimmed = text.trim();
        let pairs: Vec<(char, char)> = if trimmed.contains('_') {
            let chars: Vec<char> = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
            if !chars.len().is_multiple_of(3) {
                return Err(bad("underscore form needs groups of trend '_' mean"));
            }
            chars
                .chunks(3)
                .map(|g| {
                    if g[1] != '_' {
                        Err(bad("expected '_' between trend and mean letters"))
                    } else {
                        Ok((g[2], g[0]))
                    }
                })
                .collect::<Result<_>>()?
        } else {
            trimmed
                .split_whitespace()
                .map(|tok| {
                    let mut it = tok.chars();
                    match (it.next(), it.next(), it.next()) {
                        (Some(m), Some(t), None) => Ok((m, t)),
                        _ => Err(bad("each segment token must be two letters")),
                    }
                })
                .collect::<Result<_>>()?
        };
        let mut means = Vec::with_capacity(pairs.len());
        let mut trends = Vec::with_capacity(pairs.len());
        for (m, t) in pairs {
            means.push(letter_index(m, alpha, text)?);
            trends.push(letter_index(t, alpha_t, text)?);
        }
        TfsaxWord::new(
            SaxWord::new(means, alpha, n)?,
            TrendWord::new(trends, alpha_t)?,
        )
    }
}

fn letter_index(c: char, alpha: usize, text: &str) -> Result<u8> {
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
}

impl fmt::Display for TfsaxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&m, &t)) in self
            .sax
            .symbols()
            .iter()
            .zip(self.trend.symbols())
            .enumerate()
        {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", value_letter(m), trend_letter(t))?;
        }
        Ok(())
    }
}

/// Encodes series into TFSAX words for a fixed `(w, alpha, alpha_t)`.
#[derive(Debug, Clone)]
pub struct TfsaxEncoder {
    w: usize,
    values: BreakpointTable,
    angles: AngleBreakpointTable,
}

impl TfsaxEncoder {
    pub fn new(w: usize, alpha: usize, alpha_t: usize) -> Result<Self> {
        if w == 0 {
            return Err(Error::InvalidW { w, n: 0 });
        }
        Ok(TfsaxEncoder {
            w,
            values: gaussian_breakpoints(alpha)?,
            angles: angle_breakpoints(alpha_t)?,
        })
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn value_table(&self) -> &BreakpointTable {
        &self.values
    }

    pub fn angle_table(&self) -> &AngleBreakpointTable {
        &self.angles
    }

    pub fn encode(&self, series: &TimeSeries) -> Result<TfsaxWord> {
        self.encode_values(series.values())
    }

    /// Mean channel from PAA; trend channel from the raw points of each segment.
    pub fn encode_values(&self, values: &[f64]) -> Result<TfsaxWord> {
        let sax = sax_encode_values(values, self.w, &self.values)?;
        let segmentation = segment(values.len(), self.w)?;
        let trend = trend_encode_values(values, &segmentation, &self.angles);
        Ok(TfsaxWord { sax, trend })
    }

    pub fn tdist(&self, q: &TfsaxWord, c: &TfsaxWord) -> Result<f64> {
        tdist(q, c, &self.values, &self.angles)
    }
}

pub fn tfsax_encode(
    series: &TimeSeries,
    w: usize,
    alpha: usize,
    alpha_t: usize,
) -> Result<TfsaxWord> {
    TfsaxEncoder::new(w, alpha, alpha_t)?.encode(series)
}

/// `sqrt((n/w) * sum_i [dist(q_i, c_i)^2 + (w/n) * tfdist(tq_i, tc_i)^2])`.
pub fn tdist(
    q: &TfsaxWord,
    c: &TfsaxWord,
    values: &BreakpointTable,
    angles: &AngleBreakpointTable,
) -> Result<f64> {
    check_same_shape(&q.sax, &c.sax)?;
    check_table(q.sax.alpha(), values)?;
    if q.trend.alpha_t() != c.trend.alpha_t() || q.trend.alpha_t() != angles.alpha_t() {
        return Err(Error::ParamMismatch(format!(
            "trend alphabets {} / {} vs table {}",
            q.trend.alpha_t(),
            c.trend.alpha_t(),
            angles.alpha_t()
        )));
    }
    Ok(tdist_unchecked(q, c, values, angles))
}

pub(crate) fn tdist_unchecked(
    q: &TfsaxWord,
    c: &TfsaxWord,
    values: &BreakpointTable,
    angles: &AngleBreakpointTable,
) -> f64 {
    let n = q.n() as f64;
    let w = q.w() as f64;
    let mean_term = sum_sq_symbol_dist(q.sax.symbols(), c.sax.symbols(), values);
    let trend_term: f64 = q
        .trend
        .symbols()
        .iter()
        .zip(c.trend.symbols())
        .map(|(&a, &b)| {
            let d = angles.dist_unchecked(a as usize, b as usize);
            d * d
        })
        .sum();
    ((n / w) * (mean_term + (w / n) * trend_term)).sqrt()
}
