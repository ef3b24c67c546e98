//! `+`/`-` matrix files: a header `hadamard <order>` or `matrix <order>`, then one row per line.

use super::{IntMatrix, MatrixError, SignMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// The file claims the matrix is Hadamard.
    Hadamard,
    Plain,
}

impl MatrixKind {
    fn token(self) -> &'static str {
        match self {
            MatrixKind::Hadamard => "hadamard",
            MatrixKind::Plain => "matrix",
        }
    }
}

pub fn write_matrix(m: &SignMatrix, kind: MatrixKind) -> String {
    let n = m.order();
    let mut out = String::with_capacity((n + 1) * (n + 1) + 16);
    out.push_str(kind.token());
    out.push(' ');
    out.push_str(&n.to_string());
    out.push('\n');
    for i in 0..n {
        out.extend(m.as_int().row(i).iter().map(|&x| if x == 1 { '+' } else { '-' }));
        out.push('\n');
    }
    out
}

pub fn read_matrix(text: &str) -> Result<(MatrixKind, SignMatrix), MatrixError> {
    let err = |line: usize, message: String| MatrixError::Parse { line, message };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
    let (kind, order) = match header.trim().split_once(' ') {
        Some(("hadamard", n)) => (MatrixKind::Hadamard, n),
        Some(("matrix", n)) => (MatrixKind::Plain, n),
        _ => return Err(err(1, format!("bad header {header:?}"))),
    };
    let order: usize = order.trim().parse().map_err(|_| err(1, format!("bad order {order:?}")))?;
    let mut rows = Vec::with_capacity(order);
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        let line = line.trim_end();
        if line.is_empty() && rows.len() == order {
            continue;
        }
        let row = line
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(err(line_no, format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<i32>, _>>()?;
        if row.len() != order {
            return Err(err(line_no, format!("row has {} entries, expected {order}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(err(rows.len() + 2, format!("found {} rows, expected {order}", rows.len())));
    }
    let m = SignMatrix::try_from(IntMatrix::from_rows(&rows)?)?;
    Ok((kind, m))
}
