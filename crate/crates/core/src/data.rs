//! Multivariate time-series container and CSV interchange.

use crate::error::{Error, Result};
use std::io::Write;
use std::path::Path;

/// A T x n matrix of observed series, one column per node.
///
/// Stored column-major so that a node's full series is a contiguous slice.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesMatrix {
    t_len: usize,
    n_nodes: usize,
    // column-major: data[r * t_len + t]
    data: Vec<f64>,
}

impl TimeSeriesMatrix {
    /// Build from column slices. All columns must share the same length.
    pub fn from_columns(columns: Vec<Vec<f64>>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::invalid("time series needs at least one node"));
        }
        let t_len = columns[0].len();
        if columns.iter().any(|c| c.len() != t_len) {
            return Err(Error::invalid("columns have unequal lengths"));
        }
        let n_nodes = columns.len();
        let mut data = Vec::with_capacity(t_len * n_nodes);
        for col in &columns {
            for &v in col {
                if !v.is_finite() {
                    return Err(Error::NonFinite("observation in time series".into()));
                }
                data.push(v);
            }
        }
        Ok(Self { t_len, n_nodes, data })
    }

    /// Number of time points T.
    pub fn len(&self) -> usize {
        self.t_len
    }

    pub fn is_empty(&self) -> bool {
        self.t_len == 0
    }

    /// Number of nodes n.
    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    /// The full series of one node (0-based index).
    pub fn col(&self, r: usize) -> &[f64] {
        &self.data[r * self.t_len..(r + 1) * self.t_len]
    }

    /// Value of node `r` at time index `t` (0-based).
    pub fn value(&self, t: usize, r: usize) -> f64 {
        self.data[r * self.t_len + t]
    }

    /// Read from CSV with header `node1,...,nodeN` followed by T data rows.
    pub fn read_csv(path: &Path) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_path(path)?;
        let n_nodes = reader.headers().map_err(csv_err)?.len();
        if n_nodes == 0 {
            return Err(Error::Parse { line: 1, message: "empty header row".into() });
        }
        let mut columns: Vec<Vec<f64>> = vec![Vec::new(); n_nodes];
        for (i, record) in reader.records().enumerate() {
            let line = i + 2; // header is line 1
            let record = record.map_err(csv_err)?;
            if record.len() != n_nodes {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {} fields, found {}", n_nodes, record.len()),
                });
            }
            for (j, field) in record.iter().enumerate() {
                let v: f64 = field.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("non-numeric value {:?} in column {}", field, j + 1),
                })?;
                columns[j].push(v);
            }
        }
        if columns[0].is_empty() {
            return Err(Error::Parse { line: 2, message: "no data rows".into() });
        }
        Self::from_columns(columns)
    }

    /// Write as CSV with header `node1,...,nodeN`. Values use the shortest
    /// round-tripping decimal form, so write/read is lossless.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        let header: Vec<String> = (1..=self.n_nodes).map(|r| format!("node{r}")).collect();
        writeln!(out, "{}", header.join(","))?;
        for t in 0..self.t_len {
            let mut row = String::new();
            for r in 0..self.n_nodes {
                if r > 0 {
                    row.push(',');
                }
                row.push_str(&format!("{}", self.value(t, r)));
            }
            writeln!(out, "{row}")?;
        }
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> Error {
    let line = match e.kind() {
        csv::ErrorKind::Utf8 { pos, .. } => pos.as_ref().map(|p| p.line() as usize).unwrap_or(0),
        _ => e.position().map(|p| p.line() as usize).unwrap_or(0),
    };
    Error::Parse { line, message: e.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_csv() {
        let m = TimeSeriesMatrix::from_columns(vec![
            vec![1.0, 2.5, -0.125],
            vec![0.1, 0.2, 0.3000000001],
        ])
        .unwrap();
        let dir = std::env::temp_dir().join("mdm_data_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("roundtrip.csv");
        m.write_csv(&path).unwrap();
        let back = TimeSeriesMatrix::read_csv(&path).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn rejects_non_numeric_cell_with_position() {
        let dir = std::env::temp_dir().join("mdm_data_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.csv");
        std::fs::write(&path, "node1,node2\n1.0,2.0\n3.0,oops\n").unwrap();
        match TimeSeriesMatrix::read_csv(&path) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("column 2"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_ragged_columns() {
        assert!(TimeSeriesMatrix::from_columns(vec![vec![1.0], vec![1.0, 2.0]]).is_err());
    }
}
