//! Seeded synthetic data: the Cylinder-Bell-Funnel classification problem and random walks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::series::{znormalize, ConstantMode, TimeSeries};

pub const CBF_MIN_LENGTH: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbfShape {
    Cylinder = 1,
    Bell = 2,
    Funnel = 3,
}

impl CbfShape {
    pub const ALL: [CbfShape; 3] = [CbfShape::Cylinder, CbfShape::Bell, CbfShape::Funnel];

    pub fn label(self) -> i64 {
        self as i64
    }
}

/// One CBF instance, z-normalized. With `L = length`, the event window `[a, b]` has
/// `a ~ U[L/8, L/4]` and `b - a ~ U[L/4, 3L/4]` (16, 32 and 96 at `L = 128`); the amplitude is
/// `6 + eta` and every point gets unit Gaussian noise.
pub fn cbf_series<R: Rng + ?Sized>(shape: CbfShape, length: usize, rng: &mut R) -> Vec<f64> {
    let l = length as f64;
    let a = rng.random_range(l / 8.0..=l / 4.0);
    let b = a + rng.random_range(l / 4.0..=3.0 * l / 4.0);
    let amp = 6.0 + rng.sample::<f64, _>(StandardNormal);
    let raw: Vec<f64> = (1..=length)
        .map(|t| {
            let t = t as f64;
            let noise: f64 = rng.sample(StandardNormal);
            let inside = t >= a && t <= b;
            let event = match (shape, inside) {
                (_, false) => 0.0,
                (CbfShape::Cylinder, true) => 1.0,
                (CbfShape::Bell, true) => (t - a) / (b - a),
                (CbfShape::Funnel, true) => (b - t) / (b - a),
            };
            amp * event + noise
        })
        .collect();
    let series = TimeSeries::new(raw).expect("length >= 16 and finite");
    znormalize(&series, ConstantMode::Zeros)
        .expect("zeros mode never fails")
        .into_values()
}

fn cbf_split<R: Rng + ?Sized>(
    per_class: usize,
    length: usize,
    rng: &mut R,
    tag: &str,
) -> Vec<TimeSeries> {
    let mut out = Vec::with_capacity(3 * per_class);
    for _ in 0..per_class {
        for shape in CbfShape::ALL {
            let values = cbf_series(shape, length, rng);
            out.push(
                TimeSeries::new(values)
                    .expect("valid")
                    .with_label(shape.label())
                    .with_id(format!("{tag}{}", out.len())),
            );
        }
    }
    out
}

/// CBF dataset with `train_per_class` / `test_per_class` instances of each shape.
/// Classes are interleaved (cylinder, bell, funnel, cylinder, ...).
pub fn gen_cbf_split(
    train_per_class: usize,
    test_per_class: usize,
    length: usize,
    seed: u64,
) -> Result<Dataset> {
    if length < CBF_MIN_LENGTH {
        return Err(Error::InvalidArgument(format!(
            "CBF length must be at least {CBF_MIN_LENGTH}, got {length}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let train = cbf_split(train_per_class, length, &mut rng, "train");
    let test = cbf_split(test_per_class, length, &mut rng, "test");
    Dataset::new("CBF", train, test)
}

/// CBF with the same number of instances per class in both splits.
pub fn gen_cbf(per_class: usize, length: usize, seed: u64) -> Result<Dataset> {
    gen_cbf_split(per_class, per_class, length, seed)
}

/// The archive-shaped CBF problem: 30 train and 900 test series of length 128.
pub fn gen_cbf_standard(seed: u64) -> Result<Dataset> {
    gen_cbf_split(10, 300, 128, seed)
}

/// Z-normalized Gaussian random walk.
pub fn random_walk<R: Rng + ?Sized>(length: usize, rng: &mut R) -> Vec<f64> {
    let mut acc = 0.0;
    let raw: Vec<f64> = (0..length)
        .map(|_| {
            acc += rng.sample::<f64, _>(StandardNormal);
            acc
        })
        .collect();
    let series = TimeSeries::new(raw).expect("length >= 2");
    znormalize(&series, ConstantMode::Zeros)
        .expect("zeros mode never fails")
        .into_values()
}

/// `count` independent pairs of z-normalized random walks.
pub fn random_walk_pairs(count: usize, length: usize, seed: u64) -> Vec<(Vec<f64>, Vec<f64>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (random_walk(length, &mut rng), random_walk(length, &mut rng)))
        .collect()
}
