//! Wall-clock cost of transforming a dataset into words and classifying its test split.

use std::time::Instant;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::method::{Method, Params, Representation, Representer};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub dataset: String,
    pub method: Method,
    pub w: usize,
    pub alpha: usize,
    pub transform_secs: f64,
    pub classify_secs: f64,
}

impl BenchRow {
    pub fn total_secs(&self) -> f64 {
        self.transform_secs + self.classify_secs
    }
}

fn nearest_label(
    query: &Representation,
    train: &[Representation],
    labels: &[Option<i64>],
    rep: &Representer,
) -> Option<i64> {
    let mut best = (0, f64::INFINITY);
    for (i, c) in train.iter().enumerate() {
        let d = rep.distance_unchecked(query, c);
        if d < best.1 {
            best = (i, d);
        }
    }
    labels[best.0]
}

/// Times one transform + 1-NN pass per `w`, single-threaded. Each phase reports the fastest of
/// `repeats` runs.
pub fn bench_runtime(
    dataset: &Dataset,
    method: Method,
    w_values: &[usize],
    alpha: usize,
    alpha_t: usize,
    repeats: usize,
) -> Result<Vec<BenchRow>> {
    bench_methods(dataset, &[method], w_values, alpha, alpha_t, repeats)
}

/// Like [`bench_runtime`] for several methods. Repeats cycle over every (method, w) point so
/// that a transient slowdown cannot land on all samples of one point; rows come back ordered by
/// method, then `w`.
pub fn bench_methods(
    dataset: &Dataset,
    methods: &[Method],
    w_values: &[usize],
    alpha: usize,
    alpha_t: usize,
    repeats: usize,
) -> Result<Vec<BenchRow>> {
    if dataset.train.is_empty() || dataset.test.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let labels: Vec<Option<i64>> = dataset.train.iter().map(|s| s.label).collect();
    let mut points = Vec::with_capacity(methods.len() * w_values.len());
    for &method in methods {
        for &w in w_values {
            let rep = Representer::for_method(method, Params::new(w, alpha, alpha_t))?;
            points.push((w, rep, f64::INFINITY, f64::INFINITY));
        }
    }
    for _ in 0..repeats.max(1) {
        for (_, rep, transform_secs, classify_secs) in points.iter_mut() {
            let start = Instant::now();
            let train: Vec<Representation> = dataset
                .train
                .iter()
                .map(|s| rep.encode(s))
                .collect::<Result<_>>()?;
            let test: Vec<Representation> = dataset
                .test
                .iter()
                .map(|s| rep.encode(s))
                .collect::<Result<_>>()?;
            let encoded = Instant::now();
            let mut errors = 0usize;
            for (q, truth) in test.iter().zip(&dataset.test) {
                if nearest_label(q, &train, &labels, rep) != truth.label {
                    errors += 1;
                }
            }
            std::hint::black_box(errors);
            let done = Instant::now();
            *transform_secs = transform_secs.min((encoded - start).as_secs_f64());
            *classify_secs = classify_secs.min((done - encoded).as_secs_f64());
        }
    }
    Ok(points
        .into_iter()
        .map(|(w, rep, transform_secs, classify_secs)| BenchRow {
            dataset: dataset.name.clone(),
            method: rep.method(),
            w,
            alpha,
            transform_secs,
            classify_secs,
        })
        .collect())
}
