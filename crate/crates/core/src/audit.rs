//! Tightness of lower bound (TLB) and the empirical lower-bound audit.
//!
//! The audit measures, pair by pair, whether MINDIST, SAX-TD and TDIST stay below the
//! Euclidean distance. Violations are counted, never assumed away.

use std::io::Write;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::method::{Method, Params, Representation, Representer};
use crate::series::euclidean;

/// Absolute slack allowed before a lower bound counts as exceeding the Euclidean distance.
pub const VIOLATION_TOLERANCE: f64 = 1e-9;

/// Default cap on audited pairs: all train x test pairs up to this many, else a sample.
pub const DEFAULT_AUDIT_PAIRS: usize = 10_000;

/// Ratio of the lower-bounding distance chosen by `representer` to the Euclidean distance.
pub fn tlb(a: &[f64], b: &[f64], representer: &Representer) -> Result<f64> {
    let ed = euclidean(a, b)?;
    if ed == 0.0 {
        return Err(Error::ZeroEuclidean);
    }
    let lb = representer.distance(
        &representer.encode_values(a)?,
        &representer.encode_values(b)?,
    )?;
    Ok(lb / ed)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundAuditRecord {
    pub pair_id: usize,
    pub params: Params,
    pub euclid: f64,
    pub mindist: f64,
    pub saxtd: f64,
    pub tdist: f64,
    pub tlb_mindist: f64,
    pub tlb_saxtd: f64,
    pub tlb_tdist: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditSummaryRow {
    pub params: Params,
    pub pairs: usize,
    pub mean_tlb_mindist: f64,
    pub mean_tlb_saxtd: f64,
    pub mean_tlb_tdist: f64,
    pub mindist_violations: usize,
    pub saxtd_violations: usize,
    pub tdist_violations: usize,
    /// Largest `tdist / euclid` seen; above 1 means TDIST failed to lower-bound.
    pub max_tlb_tdist: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub dataset: String,
    pub records: Vec<BoundAuditRecord>,
    pub summary: Vec<AuditSummaryRow>,
    /// Pairs skipped because their Euclidean distance is zero.
    pub excluded_pairs: usize,
    pub warnings: Vec<String>,
}

impl AuditReport {
    pub fn total_violations(&self, method: Method) -> usize {
        self.summary
            .iter()
            .map(|r| match method {
                Method::Sax => r.mindist_violations,
                Method::SaxTd => r.saxtd_violations,
                Method::Tfsax => r.tdist_violations,
                _ => 0,
            })
            .sum()
    }

    pub fn write_records_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut wr = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        wr.write_record([
            "dataset",
            "w",
            "alpha",
            "alpha_t",
            "pair_id",
            "euclid",
            "mindist",
            "tdist",
            "tlb_mindist",
            "tlb_tdist",
        ])?;
        for r in &self.records {
            wr.write_record([
                self.dataset.clone(),
                r.params.w.to_string(),
                r.params.alpha.to_string(),
                r.params.alpha_t.to_string(),
                r.pair_id.to_string(),
                r.euclid.to_string(),
                r.mindist.to_string(),
                r.tdist.to_string(),
                r.tlb_mindist.to_string(),
                r.tlb_tdist.to_string(),
            ])?;
        }
        wr.flush().map_err(|e| Error::io("<audit records>", e))?;
        Ok(())
    }

    pub fn write_summary_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut wr = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        wr.write_record([
            "dataset",
            "w",
            "alpha",
            "alpha_t",
            "pairs",
            "mean_tlb_mindist",
            "mean_tlb_saxtd",
            "mean_tlb_tdist",
            "mindist_violations",
            "saxtd_violations",
            "tdist_violations",
            "max_tlb_tdist",
        ])?;
        for r in &self.summary {
            wr.write_record([
                self.dataset.clone(),
                r.params.w.to_string(),
                r.params.alpha.to_string(),
                r.params.alpha_t.to_string(),
                r.pairs.to_string(),
                r.mean_tlb_mindist.to_string(),
                r.mean_tlb_saxtd.to_string(),
                r.mean_tlb_tdist.to_string(),
                r.mindist_violations.to_string(),
                r.saxtd_violations.to_string(),
                r.tdist_violations.to_string(),
                r.max_tlb_tdist.to_string(),
            ])?;
        }
        wr.flush().map_err(|e| Error::io("<audit summary>", e))?;
        Ok(())
    }
}

/// Picks train x test index pairs: all of them when there are at most `max_pairs`, otherwise a
/// seeded uniform sample of `max_pairs` without replacement, in ascending order.
pub fn select_pairs(train: usize, test: usize, max_pairs: usize, seed: u64) -> Vec<(usize, usize)> {
    let total = train * test;
    let flat: Vec<usize> = if total <= max_pairs {
        (0..total).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut idx = sample(&mut rng, total, max_pairs).into_vec();
        idx.sort_unstable();
        idx
    };
    flat.into_iter().map(|k| (k / test, k % test)).collect()
}

/// Audits train x test pairs of a dataset at every grid point.
pub fn audit_lower_bound(
    dataset: &Dataset,
    grid: &[Params],
    max_pairs: usize,
    seed: u64,
) -> Result<AuditReport> {
    if dataset.train.is_empty() || dataset.test.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let pairs: Vec<(&[f64], &[f64])> =
        select_pairs(dataset.train.len(), dataset.test.len(), max_pairs, seed)
            .into_iter()
            .map(|(i, j)| (dataset.train[i].values(), dataset.test[j].values()))
            .collect();
    audit_pairs(&dataset.name, &pairs, grid)
}

/// Audits an explicit list of series pairs at every grid point.
pub fn audit_pairs(name: &str, pairs: &[(&[f64], &[f64])], grid: &[Params]) -> Result<AuditReport> {
    if pairs.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if grid.is_empty() {
        return Err(Error::InvalidArgument("audit grid is empty".into()));
    }
    for (a, b) in pairs {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
    }
    let euclids: Vec<f64> = pairs
        .par_iter()
        .map(|(a, b)| euclidean(a, b))
        .collect::<Result<_>>()?;
    let kept: Vec<usize> = (0..pairs.len()).filter(|&i| euclids[i] > 0.0).collect();
    let excluded_pairs = pairs.len() - kept.len();
    let mut warnings = Vec::new();
    if excluded_pairs > 0 {
        warnings.push(format!(
            "{excluded_pairs} of {} pairs have zero Euclidean distance and were excluded",
            pairs.len()
        ));
    }
    if kept.is_empty() {
        warnings.push("all pairs excluded; summary is empty".into());
        return Ok(AuditReport {
            dataset: name.to_string(),
            records: Vec::new(),
            summary: Vec::new(),
            excluded_pairs,
            warnings,
        });
    }

    let mut records = Vec::with_capacity(kept.len() * grid.len());
    let mut summary = Vec::with_capacity(grid.len());
    for &params in grid {
        let tfsax = Representer::new(Method::Tfsax, params)?;
        let saxtd = Representer::new(Method::SaxTd, params)?;
        let rows: Vec<BoundAuditRecord> = kept
            .par_iter()
            .map(|&i| {
                let (a, b) = pairs[i];
                let (ta, tb) = (tfsax.encode_values(a)?, tfsax.encode_values(b)?);
                let tdist = tfsax.distance_unchecked(&ta, &tb);
                let mindist = match (&ta, &tb) {
                    (Representation::Tfsax(x), Representation::Tfsax(y)) => {
                        crate::sax::mindist(x.sax(), y.sax(), tfsax.value_table().expect("table"))?
                    }
                    _ => unreachable!(),
                };
                let sd =
                    saxtd.distance_unchecked(&saxtd.encode_values(a)?, &saxtd.encode_values(b)?);
                let euclid = euclids[i];
                Ok(BoundAuditRecord {
                    pair_id: i,
                    params,
                    euclid,
                    mindist,
                    saxtd: sd,
                    tdist,
                    tlb_mindist: mindist / euclid,
                    tlb_saxtd: sd / euclid,
                    tlb_tdist: tdist / euclid,
                })
            })
            .collect::<Result<_>>()?;
        summary.push(summarize(params, &rows));
        records.extend(rows);
    }
    Ok(AuditReport {
        dataset: name.to_string(),
        records,
        summary,
        excluded_pairs,
        warnings,
    })
}

fn summarize(params: Params, rows: &[BoundAuditRecord]) -> AuditSummaryRow {
    let count = rows.len() as f64;
    let violates = |lb: f64, ed: f64| lb > ed + VIOLATION_TOLERANCE;
    AuditSummaryRow {
        params,
        pairs: rows.len(),
        mean_tlb_mindist: rows.iter().map(|r| r.tlb_mindist).sum::<f64>() / count,
        mean_tlb_saxtd: rows.iter().map(|r| r.tlb_saxtd).sum::<f64>() / count,
        mean_tlb_tdist: rows.iter().map(|r| r.tlb_tdist).sum::<f64>() / count,
        mindist_violations: rows
            .iter()
            .filter(|r| violates(r.mindist, r.euclid))
            .count(),
        saxtd_violations: rows.iter().filter(|r| violates(r.saxtd, r.euclid)).count(),
        tdist_violations: rows.iter().filter(|r| violates(r.tdist, r.euclid)).count(),
        max_tlb_tdist: rows.iter().map(|r| r.tlb_tdist).fold(0.0, f64::max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TimeSeries;

    const S: [f64; 8] = [-1.2, -0.4, 0.4, 1.2, 1.2, 0.4, -0.4, -1.2];

    #[test]
    fn tlb_fixture() {
        let r: Vec<f64> = S.iter().map(|v| -v).collect();
        let tf = Representer::new(Method::Tfsax, Params::new(2, 3, 5)).unwrap();
        let t = tlb(&S, &r, &tf).unwrap();
        assert!((t - 6f64.sqrt() / 25.6f64.sqrt()).abs() < 1e-12);
        assert!((t - 0.48412).abs() < 1e-5);
        let sax = Representer::new(Method::Sax, Params::new(2, 3, 5)).unwrap();
        assert_eq!(tlb(&S, &r, &sax).unwrap(), 0.0);
        assert!(matches!(tlb(&S, &S, &tf), Err(Error::ZeroEuclidean)));
    }

    #[test]
    fn identical_pairs_are_excluded() {
        let s = TimeSeries::new(S.to_vec()).unwrap().with_label(1);
        let ds = Dataset::new("twins", vec![s.clone()], vec![s]).unwrap();
        let rep = audit_lower_bound(&ds, &[Params::new(2, 3, 5)], 100, 0).unwrap();
        assert!(rep.records.is_empty());
        assert!(rep.summary.is_empty());
        assert_eq!(rep.excluded_pairs, 1);
        assert!(!rep.warnings.is_empty());
    }

    #[test]
    fn pair_selection() {
        assert_eq!(select_pairs(2, 3, 10, 0).len(), 6);
        assert_eq!(select_pairs(30, 30, DEFAULT_AUDIT_PAIRS, 1).len(), 900);
        let a = select_pairs(200, 200, 500, 9);
        assert_eq!(a.len(), 500);
        assert_eq!(a, select_pairs(200, 200, 500, 9));
        assert_ne!(a, select_pairs(200, 200, 500, 10));
        assert!(a.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn empty_inputs() {
        assert!(matches!(
            audit_pairs("x", &[], &[Params::default()]),
            Err(Error::EmptyDataset)
        ));
        assert!(audit_pairs("x", &[(&S[..], &S[..])], &[]).is_err());
    }

    #[test]
    fn csv_layout() {
        let r: Vec<f64> = S.iter().map(|v| -v).collect();
        let rep = audit_pairs("fx", &[(&S[..], &r[..])], &[Params::new(2, 3, 5)]).unwrap();
        let mut buf = Vec::new();
        rep.write_records_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "dataset,w,alpha,alpha_t,pair_id,euclid,mindist,tdist,tlb_mindist,tlb_tdist"
        );
        assert!(lines.next().unwrap().starts_with("fx,2,3,5,0,"));
        assert!(lines.next().is_none());
        assert!(!text.contains('\r'));

        let mut buf = Vec::new();
        rep.write_summary_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 2);
    }
}
