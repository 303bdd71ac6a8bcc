//! 1-NN classification, error rate and the parameter grid search.

use rayon::prelude::*;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::method::{Method, Params, Representation, Representer};
use crate::series::TimeSeries;
use crate::trend::{DEFAULT_TREND_ALPHA, MAX_TREND_ALPHA, MIN_TREND_ALPHA};

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    /// Predicted label for each test series, in test order.
    pub predictions: Vec<Option<i64>>,
    pub errors: usize,
    /// Misclassified fraction of the test set.
    pub fpr: f64,
}

fn encode_all(series: &[TimeSeries], representer: &Representer) -> Result<Vec<Representation>> {
    series.par_iter().map(|s| representer.encode(s)).collect()
}

/// Index of the nearest candidate; the lowest index wins ties. `skip` excludes one index.
fn nearest(
    query: &Representation,
    candidates: &[Representation],
    representer: &Representer,
    skip: Option<usize>,
) -> usize {
    let mut best = (usize::MAX, f64::INFINITY);
    for (i, c) in candidates.iter().enumerate() {
        if Some(i) == skip {
            continue;
        }
        let d = representer.distance_unchecked(query, c);
        if d < best.1 || best.0 == usize::MAX {
            best = (i, d);
        }
    }
    best.0
}

fn check_lengths(train: &[TimeSeries], test: &[TimeSeries]) -> Result<()> {
    let n = train[0].len();
    if let Some(s) = train.iter().chain(test).find(|s| s.len() != n) {
        return Err(Error::LengthMismatch(n, s.len()));
    }
    Ok(())
}

fn score(predictions: Vec<Option<i64>>, truth: &[TimeSeries]) -> Classification {
    let errors = predictions
        .iter()
        .zip(truth)
        .filter(|(p, s)| **p != s.label)
        .count();
    let fpr = errors as f64 / truth.len() as f64;
    Classification {
        predictions,
        errors,
        fpr,
    }
}

/// Labels each test series with the label of its nearest training series.
pub fn classify_1nn(
    train: &[TimeSeries],
    test: &[TimeSeries],
    representer: &Representer,
) -> Result<Classification> {
    if train.is_empty() || test.is_empty() {
        return Err(Error::EmptyDataset);
    }
    check_lengths(train, test)?;
    let train_reps = encode_all(train, representer)?;
    let test_reps = encode_all(test, representer)?;
    let predictions: Vec<Option<i64>> = test_reps
        .par_iter()
        .map(|q| train[nearest(q, &train_reps, representer, None)].label)
        .collect();
    Ok(score(predictions, test))
}

/// Leave-one-out 1-NN over the training split.
pub fn classify_loo(train: &[TimeSeries], representer: &Representer) -> Result<Classification> {
    if train.len() < 2 {
        return Err(Error::InvalidArgument(
            "leave-one-out needs at least two training series".into(),
        ));
    }
    check_lengths(train, &[])?;
    let reps = encode_all(train, representer)?;
    let predictions: Vec<Option<i64>> = (0..reps.len())
        .into_par_iter()
        .map(|i| train[nearest(&reps[i], &reps, representer, Some(i))].label)
        .collect();
    Ok(score(predictions, train))
}

/// Grid of word parameters searched for each method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub w_values: Vec<usize>,
    pub alpha_values: Vec<usize>,
    pub alpha_t_values: Vec<usize>,
}

impl GridSpec {
    /// `w = 2, 4, 8, ...` up to `floor(n/2)`, `alpha = 3..=10`, `alpha_t = 5`.
    pub fn standard(n: usize) -> Self {
        GridSpec {
            w_values: doubling(2, n / 2),
            alpha_values: (3..=10).collect(),
            alpha_t_values: vec![DEFAULT_TREND_ALPHA],
        }
    }

    pub fn with_trend_sweep(mut self) -> Self {
        self.alpha_t_values = (MIN_TREND_ALPHA..=MAX_TREND_ALPHA).collect();
        self
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.w_values.is_empty()
            || self.alpha_values.is_empty()
            || self.alpha_t_values.is_empty()
        {
            return Err(Error::InvalidArgument("grid has an empty axis".into()));
        }
        if let Some(&w) = self.w_values.iter().find(|&&w| w == 0 || w > n / 2) {
            return Err(Error::InvalidArgument(format!(
                "grid w={w} outside 1..={} for series length {n}",
                n / 2
            )));
        }
        Ok(())
    }

    /// Grid points in ascending `(w, alpha, alpha_t)` order; `alpha_t` collapses to its
    /// smallest value for methods without a trend channel, and Euclidean has one point.
    pub fn points(&self, method: Method) -> Vec<Params> {
        if !method.uses_word_params() {
            return vec![Params::new(0, 0, 0)];
        }
        let mut ws = self.w_values.clone();
        let mut alphas = self.alpha_values.clone();
        let mut trends = self.alpha_t_values.clone();
        for v in [&mut ws, &mut alphas, &mut trends] {
            v.sort_unstable();
            v.dedup();
        }
        if !method.uses_trend_alpha() {
            trends.truncate(1);
        }
        let mut out = Vec::with_capacity(ws.len() * alphas.len() * trends.len());
        for &w in &ws {
            for &alpha in &alphas {
                for &alpha_t in &trends {
                    out.push(Params::new(w, alpha, alpha_t));
                }
            }
        }
        out
    }
}

/// `start, 2*start, 4*start, ...` while `<= max`.
pub fn doubling(start: usize, max: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut w = start.max(1);
    while w <= max {
        out.push(w);
        w *= 2;
    }
    out
}

/// How grid points are ranked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Selection {
    /// Rank by test-set error (the standard benchmark protocol).
    #[default]
    TestSet,
    /// Rank by leave-one-out error on the training split; the test set is only scored.
    TrainLeaveOneOut,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridPoint {
    pub params: Params,
    pub test_errors: usize,
    pub test_fpr: f64,
    pub selection_errors: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridResult {
    pub method: Method,
    pub best: Params,
    pub fpr: f64,
    pub points: Vec<GridPoint>,
}

/// Evaluates every grid point and keeps the lowest selection error; ties go to the earlier
/// point, i.e. smaller `w`, then smaller `alpha`, then smaller `alpha_t`.
pub fn grid_search(
    dataset: &Dataset,
    method: Method,
    grid: &GridSpec,
    selection: Selection,
) -> Result<GridResult> {
    if dataset.train.is_empty() || dataset.test.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if method.uses_word_params() {
        grid.validate(dataset.n())?;
    }
    let mut points = Vec::new();
    for params in grid.points(method) {
        let rep = Representer::for_method(method, params)?;
        let test = classify_1nn(&dataset.train, &dataset.test, &rep)?;
        let selection_errors = match selection {
            Selection::TestSet => test.errors,
            Selection::TrainLeaveOneOut => classify_loo(&dataset.train, &rep)?.errors,
        };
        points.push(GridPoint {
            params,
            test_errors: test.errors,
            test_fpr: test.fpr,
            selection_errors,
        });
    }
    let best = points
        .iter()
        .reduce(|best, p| {
            if p.selection_errors < best.selection_errors {
                p
            } else {
                best
            }
        })
        .expect("grid has at least one point");
    Ok(GridResult {
        method,
        best: best.params,
        fpr: best.test_fpr,
        points,
    })
}
