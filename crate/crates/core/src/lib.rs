//! Trend-feature symbolic aggregate approximation (TFSAX) of time series.
//!
//! Each segment of a z-normalized series becomes two symbols: the SAX symbol of its mean and a
//! trend symbol derived from the angle of its trend feature triangle. The TDIST distance
//! combines the SAX symbol distance with a `w/n`-weighted trend symbol distance.
//!
//! Besides the representation itself the crate ships the comparison methods (SAX, ESAX and
//! SAX-TD), a lower-bound audit, and a 1-NN evaluation harness over UCR-format datasets.
//!
//! ```
//! use tfsax::{TfsaxEncoder, TimeSeries};
//!
//! let up_down = TimeSeries::new(vec![-1.2, -0.4, 0.4, 1.2, 1.2, 0.4, -0.4, -1.2]).unwrap();
//! let down_up = TimeSeries::new(vec![1.2, 0.4, -0.4, -1.2, -1.2, -0.4, 0.4, 1.2]).unwrap();
//! let enc = TfsaxEncoder::new(2, 3, 5).unwrap();
//! let (a, b) = (enc.encode(&up_down).unwrap(), enc.encode(&down_up).unwrap());
//! assert_eq!(a.to_string(), "bE bA");
//! assert_eq!(b.to_string(), "bA bE");
//! assert!((enc.tdist(&a, &b).unwrap() - 6f64.sqrt()).abs() < 1e-12);
//! ```

pub mod audit;
pub mod baselines;
pub mod bench;
pub mod classify;
pub mod dataset;
pub mod error;
pub mod method;
pub mod report;
pub mod sax;
pub mod series;
pub mod synthetic;
pub mod tfsax;
pub mod trend;
pub mod words;

pub use audit::{audit_lower_bound, audit_pairs, tlb, AuditReport, BoundAuditRecord};
pub use baselines::{esax_dist, esax_encode, saxtd_dist, saxtd_encode, EsaxWord, SaxTdWord};
pub use classify::{classify_1nn, grid_search, GridSpec, Selection};
pub use dataset::{load_ucr, Dataset, LoadOptions};
pub use error::{Error, Result};
pub use method::{reduction_ratio, Method, Params, Representation, Representer};
pub use sax::{gaussian_breakpoints, mindist, sax_symbolize, BreakpointTable, SaxWord};
pub use series::{
    euclidean, paa, segment, znormalize, ConstantMode, PaaVector, Segmentation, TimeSeries,
};
pub use tfsax::{tdist, tfsax_encode, TfsaxEncoder, TfsaxWord};
pub use trend::{
    angle_breakpoints, trend_angle, trend_distance_factor, trend_points, trend_shape_factor,
    trend_symbolize, AngleBreakpointTable, TrendFeature, TrendWord,
};
