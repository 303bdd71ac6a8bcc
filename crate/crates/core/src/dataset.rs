//! Labeled train/test splits and the UCR text format.
//!
//! A UCR split file holds one series per line: the class label followed by the values,
//! separated by commas, tabs or spaces. Files ending in `.gz` (or starting with the gzip magic
//! bytes) are decompressed transparently.

use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{BufRead, BufReader, Read};
use std::path::{Path, PathBuf};

use flate2::read::GzDecoder;

use crate::error::{Error, Result};
use crate::series::{znormalize, ConstantMode, TimeSeries};

/// Environment variable naming the default dataset root.
pub const DATA_DIR_ENV: &str = "TFSAX_DATA_DIR";

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub train: Vec<TimeSeries>,
    pub test: Vec<TimeSeries>,
}

impl Dataset {
    /// Builds a dataset; every series must carry a label and share one length.
    pub fn new(
        name: impl Into<String>,
        train: Vec<TimeSeries>,
        test: Vec<TimeSeries>,
    ) -> Result<Self> {
        let mut lengths = train.iter().chain(&test).map(TimeSeries::len);
        if let Some(n) = lengths.next() {
            if let Some(m) = lengths.find(|&m| m != n) {
                return Err(Error::LengthMismatch(n, m));
            }
        }
        if train.iter().chain(&test).any(|s| s.label.is_none()) {
            return Err(Error::InvalidArgument(
                "every series in a dataset needs a label".into(),
            ));
        }
        Ok(Dataset {
            name: name.into(),
            train,
            test,
        })
    }

    /// Common series length, or 0 for an empty dataset.
    pub fn n(&self) -> usize {
        self.train
            .first()
            .or_else(|| self.test.first())
            .map_or(0, TimeSeries::len)
    }

    pub fn classes(&self) -> BTreeSet<i64> {
        self.train
            .iter()
            .chain(&self.test)
            .filter_map(|s| s.label)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoadOptions {
    pub normalize: bool,
    pub constant: ConstantMode,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            normalize: true,
            constant: ConstantMode::Error,
        }
    }
}

fn open_text(path: &Path) -> Result<Box<dyn BufRead>> {
    let mut file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut magic = [0u8; 2];
    let got = file.read(&mut magic).map_err(|e| Error::io(path, e))?;
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    if got == 2 && magic == [0x1f, 0x8b] {
        Ok(Box::new(BufReader::new(GzDecoder::new(file))))
    } else {
        Ok(Box::new(BufReader::new(file)))
    }
}

/// Reads one UCR split file.
pub fn load_ucr(path: impl AsRef<Path>, opts: LoadOptions) -> Result<Vec<TimeSeries>> {
    let path = path.as_ref();
    parse_ucr(open_text(path)?, path, opts)
}

pub fn parse_ucr(reader: impl BufRead, path: &Path, opts: LoadOptions) -> Result<Vec<TimeSeries>> {
    let parse_err = |line: usize, msg: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let mut out = Vec::new();
    let mut expected: Option<usize> = None;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::io(path, e))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty());
        let label_text = fields.next().expect("non-empty line has a field");
        let label_value: f64 = label_text
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad label {label_text:?}")))?;
        if !label_value.is_finite() || label_value.fract() != 0.0 {
            return Err(parse_err(
                lineno,
                format!("label {label_text:?} is not an integer"),
            ));
        }
        let values: Vec<f64> = fields
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| parse_err(lineno, format!("bad value {f:?}")))
            })
            .collect::<Result<_>>()?;
        match expected {
            None => expected = Some(values.len()),
            Some(n) if n != values.len() => {
                return Err(Error::RaggedRows {
                    path: path.to_path_buf(),
                    line: lineno,
                    expected: n,
                    got: values.len(),
                })
            }
            _ => {}
        }
        let series = TimeSeries::new(values)
            .map_err(|e| parse_err(lineno, e.to_string()))?
            .with_label(label_value as i64);
        let series = if opts.normalize {
            znormalize(&series, opts.constant).map_err(|e| parse_err(lineno, e.to_string()))?
        } else {
            series
        };
        out.push(series);
    }
    if out.is_empty() {
        return Err(parse_err(0, "no series found".into()));
    }
    Ok(out)
}

pub fn load_ucr_dataset(
    name: impl Into<String>,
    train: impl AsRef<Path>,
    test: impl AsRef<Path>,
    opts: LoadOptions,
) -> Result<Dataset> {
    let train = load_ucr(train, opts)?;
    let test = load_ucr(test, opts)?;
    Dataset::new(name, train, test)
}

fn aliases(name: &str) -> Vec<String> {
    let lower = name.to_ascii_lowercase();
    let mut out = vec![lower.clone()];
    match lower.as_str() {
        "two_pattern" | "two_patterns" | "twopatterns" | "twopattern" => {
            for a in ["twopatterns", "two_patterns", "two_pattern"] {
                if a != lower {
                    out.push(a.to_string());
                }
            }
        }
        _ => {}
    }
    out
}

const SPLIT_SUFFIXES: [&str; 8] = [
    "", ".tsv", ".txt", ".csv", ".gz", ".tsv.gz", ".txt.gz", ".csv.gz",
];

fn find_in_dir(dir: &Path, stem: &str) -> Option<PathBuf> {
    let entries = fs::read_dir(dir).ok()?;
    let mut found: Vec<(usize, PathBuf)> = entries
        .filter_map(|e| e.ok())
        .filter_map(|e| {
            let fname = e.file_name().to_string_lossy().to_ascii_lowercase();
            SPLIT_SUFFIXES
                .iter()
                .position(|suffix| fname == format!("{stem}{suffix}"))
                .map(|rank| (rank, e.path()))
        })
        .filter(|(_, p)| p.is_file())
        .collect();
    found.sort();
    found.into_iter().next().map(|(_, p)| p)
}

/// Locates `<name>_TRAIN` / `<name>_TEST` under `root` or `root/<name>/`, matching names
/// case-insensitively and accepting both "Two_Pattern" and "TwoPatterns".
pub fn find_ucr_dataset(root: &Path, name: &str) -> Option<(PathBuf, PathBuf)> {
    for alias in aliases(name) {
        let mut dirs = vec![root.to_path_buf()];
        if let Ok(entries) = fs::read_dir(root) {
            let mut subdirs: Vec<PathBuf> = entries
                .filter_map(|e| e.ok())
                .filter(|e| e.file_name().to_string_lossy().to_ascii_lowercase() == alias)
                .map(|e| e.path())
                .filter(|p| p.is_dir())
                .collect();
            subdirs.sort();
            dirs.extend(subdirs);
        }
        for dir in dirs {
            let train = find_in_dir(&dir, &format!("{alias}_train"));
            let test = find_in_dir(&dir, &format!("{alias}_test"));
            if let (Some(train), Some(test)) = (train, test) {
                return Some((train, test));
            }
        }
    }
    None
}

/// The dataset root from `TFSAX_DATA_DIR`, if set.
pub fn default_data_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_DIR_ENV).map(PathBuf::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::{Cursor, Write};

    fn parse(text: &str, opts: LoadOptions) -> Result<Vec<TimeSeries>> {
        parse_ucr(Cursor::new(text.as_bytes()), Path::new("mem"), opts)
    }

    const RAW: LoadOptions = LoadOptions {
        normalize: false,
        constant: ConstantMode::Error,
    };

    #[test]
    fn parses_label_first_rows() {
        let s = parse("2,0.1,0.2,0.3\n", RAW).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].label, Some(2));
        assert_eq!(s[0].values(), &[0.1, 0.2, 0.3]);

        let s = parse("  1.0000000e+00  -1.5  2.5\t3.0\n\n-1\t4\t5\t6\n", RAW).unwrap();
        assert_eq!(s[0].label, Some(1));
        assert_eq!(s[0].values(), &[-1.5, 2.5, 3.0]);
        assert_eq!(s[1].label, Some(-1));
    }

    #[test]
    fn normalizes_on_load() {
        let s = parse("1,1,2,3\n", LoadOptions::default()).unwrap();
        let v = s[0].values();
        assert!(v[1].abs() < 1e-12 && (v[2] - 1.224744871391589).abs() < 1e-12);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse("", RAW), Err(Error::Parse { line: 0, .. })));
        assert!(matches!(
            parse("1,2,3\n1,2,x\n", RAW),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse("1.5,2,3\n", RAW),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse("1,2,3\n\n2,1,2,3\n", RAW),
            Err(Error::RaggedRows {
                line: 3,
                expected: 2,
                got: 3,
                ..
            })
        ));
        assert!(matches!(
            parse("1,5,5,5\n", LoadOptions::default()),
            Err(Error::Parse { line: 1, .. })
        ));
        let zeros = LoadOptions {
            normalize: true,
            constant: ConstantMode::Zeros,
        };
        assert_eq!(parse("1,5,5,5\n", zeros).unwrap()[0].values(), &[0.0; 3]);
    }

    #[test]
    fn dataset_checks_lengths() {
        let a = TimeSeries::new(vec![0.0, 1.0]).unwrap().with_label(1);
        let b = TimeSeries::new(vec![0.0, 1.0, 2.0]).unwrap().with_label(1);
        assert!(matches!(
            Dataset::new("x", vec![a.clone()], vec![b]),
            Err(Error::LengthMismatch(2, 3))
        ));
        let unlabeled = TimeSeries::new(vec![0.0, 1.0]).unwrap();
        assert!(Dataset::new("x", vec![a.clone()], vec![unlabeled]).is_err());
        let d = Dataset::new("x", vec![a.clone()], vec![a]).unwrap();
        assert_eq!(d.n(), 2);
        assert_eq!(d.classes().len(), 1);
    }

    #[test]
    fn finds_and_loads_files() {
        let dir = tempfile::tempdir().unwrap();
        let sub = dir.path().join("TwoPatterns");
        fs::create_dir(&sub).unwrap();
        fs::write(
            sub.join("TwoPatterns_TRAIN.tsv"),
            "1\t0\t1\t2\n2\t2\t1\t0\n",
        )
        .unwrap();
        let gz = File::create(sub.join("TwoPatterns_TEST.tsv.gz")).unwrap();
        let mut enc = flate2::write::GzEncoder::new(gz, flate2::Compression::default());
        enc.write_all(b"1\t0\t1\t3\n").unwrap();
        enc.finish().unwrap();

        let (train, test) = find_ucr_dataset(dir.path(), "Two_Pattern").unwrap();
        let ds = load_ucr_dataset("Two_Pattern", train, test, LoadOptions::default()).unwrap();
        assert_eq!((ds.train.len(), ds.test.len(), ds.n()), (2, 1, 3));
        assert!(find_ucr_dataset(dir.path(), "Beef").is_none());

        fs::write(dir.path().join("beef_train"), "1,0,1\n").unwrap();
        fs::write(dir.path().join("BEEF_TEST.txt"), "1,1,0\n").unwrap();
        assert!(find_ucr_dataset(dir.path(), "Beef").is_some());
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = load_ucr("/nonexistent/file", RAW).unwrap_err();
        assert!(err.is_io());
        assert!(matches!(err, Error::Io { .. }));
    }
}
