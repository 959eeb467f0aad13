//! LIBSVM text and CSV readers, and the LIBSVM writer.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::problem::Instance;
use crate::{Error, Result};

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Read a LIBSVM-format file: one `label idx:val ...` line per instance,
/// 1-based strictly ascending indices, omitted indices meaning zero. The
/// dense dimension is the largest index seen anywhere in the file.
pub fn read_libsvm<P: AsRef<Path>>(path: P) -> Result<Vec<Instance>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let parse_err = |line: usize, msg: String| Error::ParseLibsvm {
        path: path.display().to_string(),
        line,
        msg,
    };

    let mut rows: Vec<(f64, Vec<(usize, f64)>)> = Vec::new();
    let mut max_index = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let label_tok = parts.next().expect("non-empty line has a first token");
        let label: f64 = label_tok
            .parse()
            .map_err(|_| parse_err(lineno, format!("invalid label '{label_tok}'")))?;
        let mut pairs = Vec::new();
        let mut last_index = 0usize;
        for tok in parts {
            let (idx_str, val_str) = tok
                .split_once(':')
                .ok_or_else(|| parse_err(lineno, format!("expected index:value, got '{tok}'")))?;
            let idx: usize = idx_str
                .parse()
                .map_err(|_| parse_err(lineno, format!("invalid index '{idx_str}'")))?;
            let val: f64 = val_str
                .parse()
                .map_err(|_| parse_err(lineno, format!("invalid value '{val_str}'")))?;
            if idx == 0 {
                return Err(parse_err(lineno, "indices are 1-based, got 0".into()));
            }
            if idx == last_index {
                return Err(parse_err(lineno, format!("duplicate index {idx}")));
            }
            if idx < last_index {
                return Err(parse_err(
                    lineno,
                    format!("indices must be ascending, {idx} after {last_index}"),
                ));
            }
            last_index = idx;
            max_index = max_index.max(idx);
            pairs.push((idx, val));
        }
        rows.push((label, pairs));
    }
    if rows.is_empty() {
        return Err(Error::EmptyDataset);
    }
    Ok(rows
        .into_iter()
        .map(|(label, pairs)| {
            let mut features = vec![0.0; max_index];
            for (idx, val) in pairs {
                features[idx - 1] = val;
            }
            Instance::new(features, label)
        })
        .collect())
}

/// Which CSV column carries the label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelColumn {
    /// Rightmost column.
    Last,
    /// Zero-based column index.
    Index(usize),
}

/// Read a rectangular numeric CSV. The label column is extracted and the
/// remaining columns become features in order. Set `header` to skip the
/// first row.
pub fn read_csv<P: AsRef<Path>>(
    path: P,
    label_column: LabelColumn,
    header: bool,
) -> Result<Vec<Instance>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let parse_err = |row: usize, col: usize, msg: String| Error::ParseCsv {
        path: path.display().to_string(),
        row,
        col,
        msg,
    };

    let mut instances = Vec::new();
    let mut width: Option<usize> = None;
    for (rowno, line) in text.lines().enumerate() {
        let rowno = rowno + 1;
        if line.trim().is_empty() {
            continue;
        }
        if header && rowno == 1 {
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        match width {
            None => width = Some(cells.len()),
            Some(w) if w != cells.len() => {
                return Err(parse_err(
                    rowno,
                    cells.len(),
                    format!("ragged row: {} cells, expected {w}", cells.len()),
                ));
            }
            _ => {}
        }
        let w = cells.len();
        let label_idx = match label_column {
            LabelColumn::Last => w - 1,
            LabelColumn::Index(i) => {
                if i >= w {
                    return Err(parse_err(
                        rowno,
                        i,
                        format!("label column {i} out of range for width {w}"),
                    ));
                }
                i
            }
        };
        let mut label = 0.0;
        let mut features = Vec::with_capacity(w - 1);
        for (col, cell) in cells.iter().enumerate() {
            let value: f64 = cell
                .parse()
                .map_err(|_| parse_err(rowno, col + 1, format!("non-numeric cell '{cell}'")))?;
            if col == label_idx {
                label = value;
            } else {
                features.push(value);
            }
        }
        instances.push(Instance::new(features, label));
    }
    if instances.is_empty() {
        return Err(Error::EmptyDataset);
    }
    Ok(instances)
}

/// Write instances in LIBSVM text format. Values are printed with Rust's
/// shortest round-trip float formatting and zero features are omitted, so
/// `read_libsvm` recovers the exact bytes of every stored value.
pub fn write_libsvm<P: AsRef<Path>>(instances: &[Instance], path: P) -> Result<()> {
    let path = path.as_ref();
    if instances.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let mut buf = String::new();
    for inst in instances {
        buf.push_str(&format!("{}", inst.label));
        for (j, &x) in inst.features.iter().enumerate() {
            if x != 0.0 {
                buf.push_str(&format!(" {}:{}", j + 1, x));
            }
        }
        buf.push('\n');
    }
    let mut file = fs::File::create(path).map_err(|e| io_err(path, e))?;
    file.write_all(buf.as_bytes()).map_err(|e| io_err(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataio::gen_toy_gaussian;

    fn tmp(name: &str) -> std::path::PathBuf {
        let mut p = std::env::temp_dir();
        p.push(format!("dviscreen-io-{}-{name}", std::process::id()));
        p
    }

    #[test]
    fn libsvm_dense_padding() {
        let p = tmp("pad.svm");
        fs::write(&p, "+1 1:0.5 3:2\n-1 2:1\n").unwrap();
        let data = read_libsvm(&p).unwrap();
        assert_eq!(data[0].features, vec![0.5, 0.0, 2.0]);
        assert_eq!(data[0].label, 1.0);
        assert_eq!(data[1].features, vec![0.0, 1.0, 0.0]);
        fs::remove_file(&p).ok();
    }

    #[test]
    fn libsvm_rejects_malformed() {
        let p = tmp("bad.svm");
        fs::write(&p, "").unwrap();
        assert!(matches!(read_libsvm(&p), Err(Error::EmptyDataset)));

        fs::write(&p, "+1 1:0.5 1:0.7\n").unwrap();
        let err = read_libsvm(&p).unwrap_err();
        assert!(matches!(err, Error::ParseLibsvm { line: 1, .. }), "{err}");

        fs::write(&p, "+1 1:0.5\nx 1:1\n").unwrap();
        let err = read_libsvm(&p).unwrap_err();
        assert!(matches!(err, Error::ParseLibsvm { line: 2, .. }), "{err}");

        fs::write(&p, "+1 2:0.5 1:1\n").unwrap();
        assert!(read_libsvm(&p).is_err(), "descending indices");
        fs::remove_file(&p).ok();
    }

    #[test]
    fn csv_label_extraction() {
        let p = tmp("basic.csv");
        fs::write(&p, "1.0,2.0,-1\n3.5,-0.5,1\n").unwrap();
        let data = read_csv(&p, LabelColumn::Last, false).unwrap();
        assert_eq!(data[0].features, vec![1.0, 2.0]);
        assert_eq!(data[0].label, -1.0);

        let by_index = read_csv(&p, LabelColumn::Index(0), false).unwrap();
        assert_eq!(by_index[0].features, vec![2.0, -1.0]);
        assert_eq!(by_index[0].label, 1.0);
        fs::remove_file(&p).ok();
    }

    #[test]
    fn csv_header_and_errors() {
        let p = tmp("hdr.csv");
        fs::write(&p, "a,b,label\n1,2,-1\n").unwrap();
        let data = read_csv(&p, LabelColumn::Last, true).unwrap();
        assert_eq!(data.len(), 1);
        // without the flag the header is a parse error at row 1
        let err = read_csv(&p, LabelColumn::Last, false).unwrap_err();
        assert!(matches!(err, Error::ParseCsv { row: 1, .. }), "{err}");

        fs::write(&p, "1,2,-1\n1,2\n").unwrap();
        let err = read_csv(&p, LabelColumn::Last, false).unwrap_err();
        assert!(matches!(err, Error::ParseCsv { row: 2, .. }), "{err}");

        fs::write(&p, "1,2,-1\n").unwrap();
        assert!(read_csv(&p, LabelColumn::Index(5), false).is_err());
        fs::remove_file(&p).ok();
    }

    #[test]
    fn libsvm_round_trip_is_exact() {
        let data = gen_toy_gaussian(1.5, -1.5, 0.75, 25, 9);
        let p = tmp("roundtrip.svm");
        write_libsvm(&data, &p).unwrap();
        let back = read_libsvm(&p).unwrap();
        assert_eq!(data.len(), back.len());
        for (a, b) in data.iter().zip(&back) {
            assert_eq!(a.label.to_bits(), b.label.to_bits());
            assert_eq!(a.features.len(), b.features.len());
            for (x, y) in a.features.iter().zip(&b.features) {
                assert_eq!(x.to_bits(), y.to_bits());
            }
        }
        fs::remove_file(&p).ok();
    }

    #[test]
    fn writer_omits_zeros_and_rejects_empty() {
        let p = tmp("zeros.svm");
        write_libsvm(&[Instance::new(vec![0.0, 1.5, 0.0], 1.0)], &p).unwrap();
        let text = fs::read_to_string(&p).unwrap();
        assert_eq!(text, "1 2:1.5\n");
        assert!(matches!(write_libsvm(&[], &p), Err(Error::EmptyDataset)));
        fs::remove_file(&p).ok();
    }
}
