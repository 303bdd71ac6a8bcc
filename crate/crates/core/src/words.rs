//! Text serialization of encoded series.
//!
//! ```text
//! # tfsax-words v1 method=tfsax w=2 alpha=3 alpha_t=5 n=8
//! 0<TAB>1<TAB>bE bA
//! 1<TAB>2<TAB>bA bE
//! ```
//!
//! After the header, each line holds the series index, its label (empty when unknown) and the
//! word, separated by tabs.

use std::fmt::Write as _;

use crate::baselines::{EsaxWord, SaxTdWord};
use crate::error::{Error, Result};
use crate::method::{Method, Params, Representation};
use crate::sax::SaxWord;
use crate::tfsax::TfsaxWord;

pub const WORDS_MAGIC: &str = "tfsax-words";
pub const WORDS_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordsHeader {
    pub method: Method,
    pub params: Params,
    pub n: usize,
}

impl WordsHeader {
    /// Keeps only the parameters the method uses; the others are zeroed.
    pub fn new(method: Method, params: Params, n: usize) -> Self {
        let params = match method {
            Method::Euclid => Params::new(0, 0, 0),
            Method::Tfsax => params,
            _ => Params::new(params.w, params.alpha, 0),
        };
        WordsHeader { method, params, n }
    }

    pub fn render(&self) -> String {
        let mut s = format!("# {WORDS_MAGIC} v{WORDS_VERSION} method={}", self.method);
        if self.method.uses_word_params() {
            write!(s, " w={} alpha={}", self.params.w, self.params.alpha).unwrap();
        }
        if self.method.uses_trend_alpha() {
            write!(s, " alpha_t={}", self.params.alpha_t).unwrap();
        }
        write!(s, " n={}", self.n).unwrap();
        s
    }

    pub fn parse(line: &str) -> Result<Self> {
        let bad = |msg: String| Error::WordParse {
            text: line.to_string(),
            msg,
        };
        let mut it = line.split_whitespace();
        if it.next() != Some("#") || it.next() != Some(WORDS_MAGIC) {
            return Err(bad("missing words header".into()));
        }
        let version = it.next().unwrap_or_default();
        if version != format!("v{WORDS_VERSION}") {
            return Err(bad(format!("unsupported version {version:?}")));
        }
        let (mut method, mut n) = (None, None);
        let mut params = Params::new(0, 0, 0);
        for kv in it {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| bad(format!("bad field {kv:?}")))?;
            let num = || {
                v.parse::<usize>()
                    .map_err(|_| bad(format!("bad number in {kv:?}")))
            };
            match k {
                "method" => method = Some(v.parse::<Method>()?),
                "w" => params.w = num()?,
                "alpha" => params.alpha = num()?,
                "alpha_t" => params.alpha_t = num()?,
                "n" => n = Some(num()?),
                _ => return Err(bad(format!("unknown field {k:?}"))),
            }
        }
        let method = method.ok_or_else(|| bad("header has no method".into()))?;
        let n = n.ok_or_else(|| bad("header has no n".into()))?;
        Ok(WordsHeader { method, params, n })
    }

    pub fn parse_word(&self, text: &str) -> Result<Representation> {
        let p = self.params;
        let rep = match self.method {
            Method::Euclid => Representation::Raw(
                text.split(',')
                    .map(|v| {
                        v.trim().parse::<f64>().map_err(|_| Error::WordParse {
                            text: text.to_string(),
                            msg: format!("bad value {v:?}"),
                        })
                    })
                    .collect::<Result<_>>()?,
            ),
            Method::Sax => Representation::Sax(SaxWord::parse(text, p.alpha, self.n)?),
            Method::Esax => Representation::Esax(EsaxWord::parse(text, p.alpha, self.n)?),
            Method::SaxTd => Representation::SaxTd(SaxTdWord::parse(text, p.alpha, self.n)?),
            Method::Tfsax => {
                Representation::Tfsax(TfsaxWord::parse(text, p.alpha, p.alpha_t, self.n)?)
            }
        };
        Ok(rep)
    }
}

/// A label and its encoded series, one per words-file line.
pub type WordEntry = (Option<i64>, Representation);

/// Renders a words file.
pub fn render_words(header: &WordsHeader, entries: &[WordEntry]) -> String {
    let mut out = header.render();
    out.push('\n');
    for (i, (label, rep)) in entries.iter().enumerate() {
        let label = label.map(|l| l.to_string()).unwrap_or_default();
        writeln!(out, "{i}\t{label}\t{rep}").unwrap();
    }
    out
}

/// Parses a words file back into its header and `(label, representation)` entries.
pub fn parse_words(text: &str) -> Result<(WordsHeader, Vec<WordEntry>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = WordsHeader::parse(lines.next().unwrap_or_default())?;
    let mut entries = Vec::new();
    for line in lines {
        let mut cols = line.splitn(3, '\t');
        let (_, label, word) = match (cols.next(), cols.next(), cols.next()) {
            (Some(i), Some(l), Some(w)) => (i, l, w),
            _ => {
                return Err(Error::WordParse {
                    text: line.to_string(),
                    msg: "expected index<TAB>label<TAB>word".into(),
                })
            }
        };
        let label = if label.is_empty() {
            None
        } else {
            Some(label.parse::<i64>().map_err(|_| Error::WordParse {
                text: line.to_string(),
                msg: format!("bad label {label:?}"),
            })?)
        };
        entries.push((label, header.parse_word(word)?));
    }
    Ok((header, entries))
}
