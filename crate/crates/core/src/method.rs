//! Uniform access to every representation and its distance, keyed by [`Method`].

use std::fmt;
use std::str::FromStr;

use crate::baselines::{
    esax_dist_unchecked, esax_encode_values, saxtd_dist_unchecked, saxtd_encode_values, EsaxWord,
    SaxTdWord,
};
use crate::error::{Error, Result};
use crate::sax::{
    gaussian_breakpoints, sax_encode_values, sum_sq_symbol_dist, BreakpointTable, SaxWord,
};
use crate::series::{squared_euclidean, TimeSeries};
use crate::tfsax::{tdist_unchecked, TfsaxWord};
use crate::trend::{
    angle_breakpoints, trend_encode_values, AngleBreakpointTable, DEFAULT_TREND_ALPHA,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Euclid,
    Sax,
    Esax,
    SaxTd,
    Tfsax,
}

impl Method {
    /// The four symbolic methods compared in the evaluation, in report order.
    pub const SYMBOLIC: [Method; 4] = [Method::Sax, Method::Esax, Method::SaxTd, Method::Tfsax];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Euclid => "euclid",
            Method::Sax => "sax",
            Method::Esax => "esax",
            Method::SaxTd => "saxtd",
            Method::Tfsax => "tfsax",
        }
    }

    pub fn uses_word_params(self) -> bool {
        self != Method::Euclid
    }

    pub fn uses_trend_alpha(self) -> bool {
        self == Method::Tfsax
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "euclid" | "euclidean" | "ed" => Ok(Method::Euclid),
            "sax" => Ok(Method::Sax),
            "esax" => Ok(Method::Esax),
            "saxtd" => Ok(Method::SaxTd),
            "tfsax" => Ok(Method::Tfsax),
            _ => Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
        }
    }
}

/// Dimensionality reduction ratio: stored values per word over the series length.
pub fn reduction_ratio(method: Method, w: usize, n: usize) -> f64 {
    let (w, n) = (w as f64, n as f64);
    match method {
        Method::Euclid => 1.0,
        Method::Sax => w / n,
        Method::Esax => 3.0 * w / n,
        Method::SaxTd => (2.0 * w + 1.0) / n,
        Method::Tfsax => 2.0 * w / n,
    }
}

/// Word parameters. `alpha_t` only matters for TFSAX.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub w: usize,
    pub alpha: usize,
    pub alpha_t: usize,
}

impl Params {
    pub fn new(w: usize, alpha: usize, alpha_t: usize) -> Self {
        Params { w, alpha, alpha_t }
    }
}

impl Default for Params {
    fn default() -> Self {
        Params {
            w: 8,
            alpha: 10,
            alpha_t: DEFAULT_TREND_ALPHA,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Representation {
    Raw(Vec<f64>),
    Sax(SaxWord),
    Esax(EsaxWord),
    SaxTd(SaxTdWord),
    Tfsax(TfsaxWord),
}

impl Representation {
    pub fn method(&self) -> Method {
        match self {
            Representation::Raw(_) => Method::Euclid,
            Representation::Sax(_) => Method::Sax,
            Representation::Esax(_) => Method::Esax,
            Representation::SaxTd(_) => Method::SaxTd,
            Representation::Tfsax(_) => Method::Tfsax,
        }
    }

    fn n(&self) -> usize {
        match self {
            Representation::Raw(v) => v.len(),
            Representation::Sax(w) => w.n(),
            Representation::Esax(w) => w.n(),
            Representation::SaxTd(w) => w.sax().n(),
            Representation::Tfsax(w) => w.n(),
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Representation::Raw(v) => {
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Representation::Sax(w) => w.fmt(f),
            Representation::Esax(w) => w.fmt(f),
            Representation::SaxTd(w) => w.fmt(f),
            Representation::Tfsax(w) => w.fmt(f),
        }
    }
}

/// A configured method: lookup tables are built once and shared by every encode and distance.
#[derive(Debug, Clone)]
pub struct Representer {
    method: Method,
    params: Params,
    values: Option<BreakpointTable>,
    angles: Option<AngleBreakpointTable>,
}

impl Representer {
    pub fn new(method: Method, params: Params) -> Result<Self> {
        let values = if method.uses_word_params() {
            if params.w == 0 {
                return Err(Error::InvalidW { w: 0, n: 0 });
            }
            Some(gaussian_breakpoints(params.alpha)?)
        } else {
            None
        };
        let angles = if method.uses_trend_alpha() {
            Some(angle_breakpoints(params.alpha_t)?)
        } else {
            None
        };
        Ok(Representer {
            method,
            params,
            values,
            angles,
        })
    }

    /// Like [`Representer::new`], but parameter-free methods ignore `params`.
    pub fn for_method(method: Method, params: Params) -> Result<Self> {
        if method.uses_word_params() {
            Representer::new(method, params)
        } else {
            Ok(Representer::euclid())
        }
    }

    pub fn euclid() -> Self {
        Representer {
            method: Method::Euclid,
            params: Params::new(0, 0, 0),
            values: None,
            angles: None,
        }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn value_table(&self) -> Option<&BreakpointTable> {
        self.values.as_ref()
    }

    pub fn angle_table(&self) -> Option<&AngleBreakpointTable> {
        self.angles.as_ref()
    }

    pub fn encode(&self, series: &TimeSeries) -> Result<Representation> {
        self.encode_values(series.values())
    }

    pub fn encode_values(&self, values: &[f64]) -> Result<Representation> {
        let w = self.params.w;
        Ok(match self.method {
            Method::Euclid => Representation::Raw(values.to_vec()),
            Method::Sax => Representation::Sax(sax_encode_values(values, w, self.vt())?),
            Method::Esax => Representation::Esax(esax_encode_values(values, w, self.vt())?),
            Method::SaxTd => Representation::SaxTd(saxtd_encode_values(values, w, self.vt())?),
            Method::Tfsax => {
                let sax = sax_encode_values(values, w, self.vt())?;
                let segmentation = crate::series::segment(values.len(), w)?;
                let trend = trend_encode_values(values, &segmentation, self.at());
                Representation::Tfsax(TfsaxWord::new(sax, trend)?)
            }
        })
    }

    fn vt(&self) -> &BreakpointTable {
        self.values
            .as_ref()
            .expect("symbolic method has a breakpoint table")
    }

    fn at(&self) -> &AngleBreakpointTable {
        self.angles.as_ref().expect("tfsax has an angle table")
    }

    /// Distance between two representations produced by this representer.
    pub fn distance(&self, a: &Representation, b: &Representation) -> Result<f64> {
        if a.method() != self.method || b.method() != self.method {
            return Err(Error::ParamMismatch(format!(
                "{} / {} representations given to a {} representer",
                a.method(),
                b.method(),
                self.method
            )));
        }
        if a.n() != b.n() {
            return Err(match self.method {
                Method::Euclid => Error::LengthMismatch(a.n(), b.n()),
                _ => Error::ParamMismatch(format!("n={} vs n={}", a.n(), b.n())),
            });
        }
        self.check_shape(a)?;
        self.check_shape(b)?;
        Ok(self.distance_unchecked(a, b))
    }

    fn check_shape(&self, r: &Representation) -> Result<()> {
        let p = self.params;
        let ok = match r {
            Representation::Raw(_) => true,
            Representation::Sax(x) => x.w() == p.w && x.alpha() == p.alpha,
            Representation::Esax(x) => x.w() == p.w && x.alpha() == p.alpha,
            Representation::SaxTd(x) => x.sax().w() == p.w && x.sax().alpha() == p.alpha,
            Representation::Tfsax(x) => {
                x.w() == p.w && x.sax().alpha() == p.alpha && x.trend().alpha_t() == p.alpha_t
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ParamMismatch(format!(
                "representation does not match w={} alpha={} alpha_t={}",
                p.w, p.alpha, p.alpha_t
            )))
        }
    }

    /// Distance without shape checks; the caller guarantees both sides came from `self`.
    pub(crate) fn distance_unchecked(&self, a: &Representation, b: &Representation) -> f64 {
        match (a, b) {
            (Representation::Raw(x), Representation::Raw(y)) => squared_euclidean(x, y).sqrt(),
            (Representation::Sax(x), Representation::Sax(y)) => {
                let scale = x.n() as f64 / x.w() as f64;
                (scale * sum_sq_symbol_dist(x.symbols(), y.symbols(), self.vt())).sqrt()
            }
            (Representation::Esax(x), Representation::Esax(y)) => {
                esax_dist_unchecked(x, y, self.vt())
            }
            (Representation::SaxTd(x), Representation::SaxTd(y)) => {
                saxtd_dist_unchecked(x, y, self.vt())
            }
            (Representation::Tfsax(x), Representation::Tfsax(y)) => {
                tdist_unchecked(x, y, self.vt(), self.at())
            }
            _ => unreachable!("mixed representations"),
        }
    }
}
