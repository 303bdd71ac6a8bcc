//! Time series container, z-normalization, integer segmentation and PAA.

use crate::error::{Error, Result};

/// Standard deviations below this are treated as constant input.
pub const CONSTANT_EPSILON: f64 = 1e-12;

/// A finite, labeled sequence of at least two real values.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    values: Vec<f64>,
    pub label: Option<i64>,
    pub id: Option<String>,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooShort(values.len()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(TimeSeries {
            values,
            label: None,
            id: None,
        })
    }

    pub fn with_label(mut self, label: i64) -> Self {
        self.label = Some(label);
        self
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

impl AsRef<[f64]> for TimeSeries {
    fn as_ref(&self) -> &[f64] {
        &self.values
    }
}

/// What [`znormalize`] does with a series whose standard deviation is (numerically) zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConstantMode {
    #[default]
    Error,
    Zeros,
}

pub(crate) fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Population (divide-by-n) standard deviation.
pub(crate) fn std_dev(values: &[f64], mean: f64) -> f64 {
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / values.len() as f64;
    var.sqrt()
}

/// Shifts and scales a series to mean 0 and population standard deviation 1.
pub fn znormalize(series: &TimeSeries, mode: ConstantMode) -> Result<TimeSeries> {
    let values = znormalize_values(series.values(), mode)?;
    Ok(TimeSeries {
        values,
        label: series.label,
        id: series.id.clone(),
    })
}

pub(crate) fn znormalize_values(values: &[f64], mode: ConstantMode) -> Result<Vec<f64>> {
    let mu = mean(values);
    let sigma = std_dev(values, mu);
    if sigma < CONSTANT_EPSILON {
        return match mode {
            ConstantMode::Error => Err(Error::ConstantSeries(sigma)),
            ConstantMode::Zeros => Ok(vec![0.0; values.len()]),
        };
    }
    Ok(values.iter().map(|v| (v - mu) / sigma).collect())
}

/// A partition of `[0, n)` into `w` contiguous, near-equal segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segmentation {
    n: usize,
    bounds: Vec<(usize, usize)>,
}

impl Segmentation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> usize {
        self.bounds.len()
    }

    /// Half-open `(start, end)` index pairs, one per segment.
    pub fn bounds(&self) -> &[(usize, usize)] {
        &self.bounds
    }

    /// Iterates the segments of `values` in order.
    pub fn slices<'a>(&'a self, values: &'a [f64]) -> impl Iterator<Item = &'a [f64]> + 'a {
        self.bounds.iter().map(move |&(s, e)| &values[s..e])
    }
}

/// Splits `n` points into `w` segments; segment `i` spans `[floor(i*n/w), floor((i+1)*n/w))`.
pub fn segment(n: usize, w: usize) -> Result<Segmentation> {
    if w == 0 || w > n {
        return Err(Error::InvalidW { w, n });
    }
    let bounds = (0..w).map(|i| (i * n / w, (i + 1) * n / w)).collect();
    Ok(Segmentation { n, bounds })
}

/// Per-segment means of a series.
#[derive(Debug, Clone, PartialEq)]
pub struct PaaVector {
    pub means: Vec<f64>,
    pub segmentation: Segmentation,
}

pub fn paa(series: &TimeSeries, w: usize) -> Result<PaaVector> {
    paa_values(series.values(), w)
}

pub(crate) fn paa_values(values: &[f64], w: usize) -> Result<PaaVector> {
    let segmentation = segment(values.len(), w)?;
    let means = segmentation.slices(values).map(mean).collect();
    Ok(PaaVector {
        means,
        segmentation,
    })
}

pub fn euclidean(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(squared_euclidean(a, b).sqrt())
}

pub(crate) fn squared_euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}
