//! Trend features of a segment and their symbolization.
//!
//! A segment's trend is summarized by a right triangle whose vertical edge is the trend
//! distance factor (last point minus first point) and whose horizontal edge is the trend shape
//! factor `k` (number of trend points, at least 1). The triangle's angle, in degrees, is mapped
//! to an uppercase trend symbol through a fixed table of angle breakpoints.

use std::fmt;

use crate::error::{Error, Result};
use crate::sax::lookup_matrix;
use crate::series::Segmentation;

pub const MIN_TREND_ALPHA: usize = 2;
pub const MAX_TREND_ALPHA: usize = 6;
pub const DEFAULT_TREND_ALPHA: usize = 5;

/// Positions (0-based) of the interior points of `segment` where the first difference changes
/// sign, or where exactly one of the two neighbouring differences is zero.
pub fn trend_points(segment: &[f64]) -> Vec<usize> {
    (1..segment.len().saturating_sub(1))
        .filter(|&i| is_trend_point(segment[i - 1], segment[i], segment[i + 1]))
        .collect()
}

#[inline]
fn is_trend_point(prev: f64, cur: f64, next: f64) -> bool {
    let before = cur - prev;
    let after = next - cur;
    let product = before * after;
    product < 0.0 || (product == 0.0 && before != after)
}

/// Trend shape factor `k = max(1, number of trend points)`.
pub fn trend_shape_factor(segment: &[f64]) -> usize {
    let count = segment
        .windows(3)
        .filter(|w| is_trend_point(w[0], w[1], w[2]))
        .count();
    count.max(1)
}

/// Trend distance factor: `(end - mean) - (start - mean)`, i.e. `last - first`.
/// Positive for an up-trend. Empty or single-point segments have no trend.
pub fn trend_distance_factor(segment: &[f64]) -> f64 {
    match (segment.first(), segment.last()) {
        (Some(first), Some(last)) => last - first,
        _ => 0.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrendFeature {
    pub td: f64,
    pub k: usize,
    /// `atan(td / k)` in degrees, within (-90, 90).
    pub theta: f64,
}

pub fn trend_angle(segment: &[f64]) -> TrendFeature {
    let td = trend_distance_factor(segment);
    let k = trend_shape_factor(segment);
    let theta = (td / k as f64).atan().to_degrees();
    TrendFeature { td, k, theta }
}

/// Sorted angle breakpoints (degrees) and the derived trend symbol distance matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleBreakpointTable {
    alpha_t: usize,
    thetas: Vec<f64>,
    dist: Vec<f64>,
}

pub fn angle_breakpoints(alpha_t: usize) -> Result<AngleBreakpointTable> {
    let thetas: &[f64] = match alpha_t {
        2 => &[0.0],
        3 => &[-5.0, 5.0],
        4 => &[-30.0, 0.0, 30.0],
        5 => &[-30.0, -5.0, 5.0, 30.0],
        6 => &[-30.0, -5.0, 0.0, 5.0, 30.0],
        _ => return Err(Error::UnsupportedTrendAlpha(alpha_t)),
    };
    let dist = lookup_matrix(alpha_t, |hi, lo| {
        (thetas[hi - 1] - thetas[lo]).to_radians().tan()
    });
    Ok(AngleBreakpointTable {
        alpha_t,
        thetas: thetas.to_vec(),
        dist,
    })
}

impl AngleBreakpointTable {
    pub fn alpha_t(&self) -> usize {
        self.alpha_t
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    /// Trend symbol for an angle in degrees; angles on a breakpoint take the upper symbol.
    pub fn symbol_of(&self, theta: f64) -> u8 {
        self.thetas.partition_point(|&b| b <= theta) as u8
    }

    /// `tan` of the angular gap between two non-adjacent trend symbols, 0 otherwise.
    pub fn tfdist(&self, i: usize, j: usize) -> Result<f64> {
        for index in [i, j] {
            if index >= self.alpha_t {
                return Err(Error::SymbolOutOfRange {
                    index,
                    alpha: self.alpha_t,
                });
            }
        }
        Ok(self.dist_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn dist_unchecked(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.alpha_t + j]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrendWord {
    symbols: Vec<u8>,
    alpha_t: usize,
}

impl TrendWord {
    pub fn new(symbols: Vec<u8>, alpha_t: usize) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| s as usize >= alpha_t) {
            return Err(Error::SymbolOutOfRange {
                index: s as usize,
                alpha: alpha_t,
            });
        }
        Ok(TrendWord { symbols, alpha_t })
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alpha_t(&self) -> usize {
        self.alpha_t
    }

    pub fn w(&self) -> usize {
        self.symbols.len()
    }
}

impl fmt::Display for TrendWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", trend_letter(s))?;
        }
        Ok(())
    }
}

pub(crate) fn trend_letter(symbol: u8) -> char {
    (b'A' + symbol) as char
}

pub fn trend_symbolize(features: &[TrendFeature], table: &AngleBreakpointTable) -> TrendWord {
    TrendWord {
        symbols: features.iter().map(|f| table.symbol_of(f.theta)).collect(),
        alpha_t: table.alpha_t(),
    }
}

pub(crate) fn trend_encode_values(
    values: &[f64],
    segmentation: &Segmentation,
    table: &AngleBreakpointTable,
) -> TrendWord {
    let features: Vec<TrendFeature> = segmentation.slices(values).map(trend_angle).collect();
    trend_symbolize(&features, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tan_deg(d: f64) -> f64 {
        d.to_radians().tan()
    }

    #[test]
    fn trend_points_examples() {
        assert_eq!(trend_points(&[1.0, 2.0, 1.0]), vec![1]);
        assert!(trend_points(&[1.0, 2.0, 3.0, 4.0]).is_empty());
        assert_eq!(trend_points(&[1.0, 2.0, 2.0, 3.0]), vec![1, 2]);
        assert!(trend_points(&[5.0, 5.0, 5.0, 5.0]).is_empty());
        assert!(trend_points(&[1.0, 2.0]).is_empty());
        assert!(trend_points(&[1.0]).is_empty());
    }

    #[test]
    fn shape_factor_examples() {
        assert_eq!(trend_shape_factor(&[1.0, 2.0, 3.0, 4.0]), 1);
        assert_eq!(trend_shape_factor(&[1.0, 3.0, 2.0, 4.0]), 2);
        assert_eq!(trend_shape_factor(&[5.0, 5.0, 5.0, 5.0]), 1);
        assert_eq!(trend_shape_factor(&[0.0, 1.0]), 1);
    }

    #[test]
    fn distance_factor_examples() {
        // deltas about the mean 1.5 are -1.5 and 1.5
        assert_eq!(trend_distance_factor(&[0.0, 1.0, 2.0, 3.0]), 3.0);
        assert_eq!(trend_distance_factor(&[2.0, 2.0, 2.0]), 0.0);
        assert_eq!(trend_distance_factor(&[3.0, 2.0, 1.0, 0.0]), -3.0);
    }

    #[test]
    fn angle_examples() {
        let up = trend_angle(&[0.0, 1.0, 2.0, 3.0]);
        assert_eq!((up.td, up.k), (3.0, 1));
        assert!((up.theta - 71.565).abs() < 1e-3);
        assert!((up.theta - 3f64.atan().to_degrees()).abs() < 1e-12);

        let v = trend_angle(&[1.0, 0.0, 1.0]);
        assert_eq!((v.td, v.k, v.theta), (0.0, 1, 0.0));

        assert_eq!(trend_angle(&[2.0, 2.0, 2.0]).theta, 0.0);
    }

    #[test]
    fn angle_breakpoint_columns() {
        assert_eq!(angle_breakpoints(2).unwrap().thetas(), &[0.0]);
        assert_eq!(angle_breakpoints(3).unwrap().thetas(), &[-5.0, 5.0]);
        assert_eq!(angle_breakpoints(4).unwrap().thetas(), &[-30.0, 0.0, 30.0]);
        assert_eq!(
            angle_breakpoints(5).unwrap().thetas(),
            &[-30.0, -5.0, 5.0, 30.0]
        );
        assert_eq!(
            angle_breakpoints(6).unwrap().thetas(),
            &[-30.0, -5.0, 0.0, 5.0, 30.0]
        );
        for bad in [0, 1, 7, 10] {
            assert!(matches!(
                angle_breakpoints(bad),
                Err(Error::UnsupportedTrendAlpha(a)) if a == bad
            ));
        }
    }

    #[test]
    fn symbolize_examples() {
        let t = angle_breakpoints(5).unwrap();
        let f = |theta| TrendFeature {
            td: 0.0,
            k: 1,
            theta,
        };
        let w = trend_symbolize(&[f(71.565), f(-40.0), f(0.0), f(-5.0), f(30.0)], &t);
        assert_eq!(w.to_string(), "EACCE");
    }

    #[test]
    fn tfdist_examples() {
        let t = angle_breakpoints(5).unwrap();
        assert_eq!(t.tfdist(0, 1).unwrap(), 0.0);
        assert!((t.tfdist(0, 4).unwrap() - 3f64.sqrt()).abs() < 1e-12);
        assert!((t.tfdist(1, 3).unwrap() - tan_deg(10.0)).abs() < 1e-12);
        assert!((t.tfdist(1, 3).unwrap() - 0.17633).abs() < 1e-5);
        assert!(matches!(
            t.tfdist(5, 0),
            Err(Error::SymbolOutOfRange { index: 5, alpha: 5 })
        ));
    }

    #[test]
    fn tfdist_matrix_properties() {
        for alpha_t in MIN_TREND_ALPHA..=MAX_TREND_ALPHA {
            let t = angle_breakpoints(alpha_t).unwrap();
            for i in 0..alpha_t {
                for j in 0..alpha_t {
                    let d = t.tfdist(i, j).unwrap();
                    assert!(d >= 0.0);
                    assert_eq!(d, t.tfdist(j, i).unwrap());
                    if i.abs_diff(j) <= 1 {
                        assert_eq!(d, 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn length_two_segments() {
        let f = trend_angle(&[0.5, -0.5]);
        assert_eq!((f.td, f.k), (-1.0, 1));
        assert!((f.theta + 45.0).abs() < 1e-12);
    }

    #[test]
    fn steep_monotone_maps_to_extremes() {
        let t = angle_breakpoints(5).unwrap();
        let up: Vec<f64> = (0..10).map(|i| i as f64 * 0.2).collect();
        let down: Vec<f64> = up.iter().rev().copied().collect();
        assert_eq!(t.symbol_of(trend_angle(&up).theta), 4);
        assert_eq!(t.symbol_of(trend_angle(&down).theta), 0);
    }

    proptest! {
        #[test]
        fn reversal_negates_angle(seg in prop::collection::vec(-3.0f64..3.0, 2..40)) {
            let rev: Vec<f64> = seg.iter().rev().copied().collect();
            let a = trend_angle(&seg);
            let b = trend_angle(&rev);
            prop_assert_eq!(a.k, b.k);
            prop_assert!((a.td + b.td).abs() < 1e-12);
            prop_assert!((a.theta + b.theta).abs() < 1e-9);
            prop_assert_eq!(trend_points(&seg).len(), trend_points(&rev).len());
        }

        #[test]
        fn angle_consistent(seg in prop::collection::vec(-3.0f64..3.0, 2..40)) {
            let f = trend_angle(&seg);
            prop_assert!(f.theta > -90.0 && f.theta < 90.0);
            prop_assert!((f.theta.to_radians().tan() * f.k as f64 - f.td).abs() < 1e-9);
            let pts = trend_points(&seg);
            prop_assert!(pts.windows(2).all(|p| p[0] < p[1]));
            prop_assert!(pts.iter().all(|&i| i >= 1 && i + 1 < seg.len()));
        }

        #[test]
        fn monotone_beyond_outer_breakpoint_is_extreme(
            start in -2.0f64..2.0,
            steps in prop::collection::vec(0.01f64..1.0, 1..30),
        ) {
            let mut seg = vec![start];
            for s in &steps {
                seg.push(seg.last().unwrap() + s);
            }
            let f = trend_angle(&seg);
            prop_assert_eq!(f.k, 1);
            let t = angle_breakpoints(5).unwrap();
            if f.td / f.k as f64 > tan_deg(30.0) {
                prop_assert_eq!(t.symbol_of(f.theta), 4);
                let down: Vec<f64> = seg.iter().map(|v| -v).collect();
                prop_assert_eq!(t.symbol_of(trend_angle(&down).theta), 0);
            }
        }
    }
}
