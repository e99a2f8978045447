//! Plain-text triangle cache.
//!
//! ```text
//! STIRLING2 v1 max_n=<N>
//! <n> <k> <value>        one line per 0 <= k <= n <= N, lexicographic
//! END <count>            count = number of value lines
//! ```

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_bigint::BigInt;

use super::StirlingTriangle;
use crate::error::{Error, Result};

pub const CACHE_HEADER_TAG: &str = "STIRLING2";
pub const CACHE_VERSION: &str = "v1";

/// Writes through a sibling temp file and renames, so readers never see a
/// partial cache.
pub fn triangle_save(t: &StirlingTriangle, path: &Path) -> Result<()> {
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        write_triangle(t, &mut w)?;
        w.flush()?;
    }
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })?;
    Ok(())
}

pub(crate) fn write_triangle(t: &StirlingTriangle, w: &mut impl Write) -> Result<()> {
    writeln!(w, "{CACHE_HEADER_TAG} {CACHE_VERSION} max_n={}", t.max_n())?;
    let mut count = 0usize;
    for (n, row) in t.rows().iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            writeln!(w, "{n} {k} {v}")?;
            count += 1;
        }
    }
    writeln!(w, "END {count}")?;
    Ok(())
}

pub fn triangle_load(path: &Path) -> Result<StirlingTriangle> {
    let text = fs::read_to_string(path)?;
    parse_triangle(&text)
}

pub(crate) fn parse_triangle(text: &str) -> Result<StirlingTriangle> {
    let fmt_err = |line: usize, message: String| Error::CacheFormat { line, message };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines.next().ok_or_else(|| fmt_err(1, "empty file".into()))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some(CACHE_HEADER_TAG) {
        return Err(fmt_err(1, format!("missing {CACHE_HEADER_TAG} header")));
    }
    match parts.next() {
        Some(CACHE_VERSION) => {}
        Some(other) => return Err(Error::CacheVersion(other.to_string())),
        None => return Err(fmt_err(1, "missing version".into())),
    }
    let max_n: usize = parts
        .next()
        .and_then(|p| p.strip_prefix("max_n="))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| fmt_err(1, "missing or malformed max_n".into()))?;
    if parts.next().is_some() {
        return Err(fmt_err(1, "trailing header fields".into()));
    }

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut value_lines = 0usize;
    let mut end: Option<(usize, usize)> = None;
    for (lineno, line) in lines.by_ref() {
        if let Some(rest) = line.strip_prefix("END") {
            let count = rest.trim().parse().map_err(|_| fmt_err(lineno, "malformed END line".into()))?;
            end = Some((lineno, count));
            break;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [n, k, v] = fields.as_slice() else {
            return Err(fmt_err(lineno, "expected `<n> <k> <value>`".into()));
        };
        let n: usize = n.parse().map_err(|_| fmt_err(lineno, format!("bad n `{n}`")))?;
        let k: usize = k.parse().map_err(|_| fmt_err(lineno, format!("bad k `{k}`")))?;
        let v: BigInt = v.parse().map_err(|_| fmt_err(lineno, format!("bad value `{v}`")))?;
        // rows must appear in order; a row cut short shows up as a length invariant below
        if n == rows.len() {
            rows.push(Vec::new());
        } else if n + 1 != rows.len() {
            return Err(fmt_err(lineno, format!("row {n} out of order")));
        }
        let row = rows.last_mut().expect("row pushed");
        if k != row.len() {
            return Err(Error::CacheInvariant(format!("row {n}: entry k={k} found at position {}", row.len())));
        }
        row.push(v);
        value_lines += 1;
    }
    let Some((end_line, count)) = end else {
        return Err(fmt_err(text.lines().count(), "missing END line".into()));
    };
    if lines.any(|(_, l)| !l.trim().is_empty()) {
        return Err(fmt_err(end_line + 1, "content after END".into()));
    }
    if rows.len() != max_n + 1 {
        return Err(Error::CacheInvariant(format!("header says max_n={max_n}, found {} rows", rows.len())));
    }
    let t = StirlingTriangle::from_rows(rows)?;
    if count != value_lines {
        return Err(fmt_err(end_line, format!("END count {count} but {value_lines} value lines")));
    }
    Ok(t)
}
