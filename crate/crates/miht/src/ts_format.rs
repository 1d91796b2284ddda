//! Reader and writer for the UCR/UEA `.ts` text format.
//!
//! The format is line oriented: `#` comment lines, `@key value` header lines,
//! then `@data` followed by one series per line. Dimensions are separated by
//! `:`, values within a dimension by `,`, and (when `@classLabel true ...`)
//! the final `:`-separated field is the class label.

use std::io::{BufRead, Write};

use crate::dataset::{Dataset, MultivariateSeries};
use crate::error::{MihtError, Result};

/// How to handle `?` (missing) values while parsing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MissingPolicy {
    /// Any missing value is a parse error.
    #[default]
    Reject,
    /// Fill each missing value by linear interpolation within its dimension;
    /// missing values at the edges repeat the nearest observed value.
    Interpolate,
}

#[derive(Debug, Default)]
struct Header {
    problem_name: Option<String>,
    dimensions: Option<usize>,
    series_length: Option<usize>,
    equal_length: Option<bool>,
    timestamps: Option<bool>,
    class_labels: Option<Vec<String>>,
}

/// Parses a `.ts` stream into a [`Dataset`].
pub fn parse_ts<R: BufRead>(reader: R, missing: MissingPolicy) -> Result<Dataset> {
    let mut header = Header::default();
    let mut series = Vec::new();
    let mut in_data = false;
    let mut dims_seen: Option<usize> = None;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !in_data {
            if let Some(rest) = line.strip_prefix('@') {
                parse_header_line(rest, line_no, &mut header, &mut in_data)?;
                continue;
            }
            return Err(parse_err(
                line_no,
                "expected a header line or @data before series data",
            ));
        }
        let s = parse_series_line(line, line_no, &header, missing)?;
        if let Some(expected) = header.dimensions.or(dims_seen) {
            if s.dims() != expected {
                return Err(parse_err(
                    line_no,
                    format!("series has {} dimensions, expected {expected}", s.dims()),
                ));
            }
        }
        dims_seen.get_or_insert(s.dims());
        series.push(s);
    }

    if !in_data {
        return Err(parse_err(0, "no @data section found"));
    }
    if let (Some(true), Some(expected)) = (header.equal_length, header.series_length) {
        if let Some(bad) = series.iter().position(|s| s.len() != expected) {
            return Err(parse_err(
                0,
                format!(
                    "@seriesLength declares {expected} but series {bad} has length {}",
                    series[bad].len()
                ),
            ));
        }
    }

    Dataset::new(
        header.problem_name.unwrap_or_default(),
        header.class_labels.unwrap_or_default(),
        series,
    )
}

/// Parses a `.ts` file from disk.
pub fn load_ts_file(path: impl AsRef<std::path::Path>, missing: MissingPolicy) -> Result<Dataset> {
    let file = std::fs::File::open(path)?;
    parse_ts(std::io::BufReader::new(file), missing)
}

fn parse_header_line(
    rest: &str,
    line_no: usize,
    header: &mut Header,
    in_data: &mut bool,
) -> Result<()> {
    let mut parts = rest.split_whitespace();
    let key = parts.next().unwrap_or_default();
    match key.to_ascii_lowercase().as_str() {
        "data" => *in_data = true,
        "problemname" => header.problem_name = Some(parts.collect::<Vec<_>>().join(" ")),
        "dimensions" => {
            header.dimensions = Some(parse_header_value(parts.next(), line_no, "dimensions")?)
        }
        "serieslength" => {
            header.series_length = Some(parse_header_value(parts.next(), line_no, "seriesLength")?)
        }
        "equallength" => {
            header.equal_length = Some(parse_header_value(parts.next(), line_no, "equalLength")?)
        }
        "timestamps" => {
            let v: bool = parse_header_value(parts.next(), line_no, "timeStamps")?;
            if v {
                return Err(parse_err(line_no, "timestamped .ts files are not supported"));
            }
            header.timestamps = Some(v);
        }
        "classlabel" => {
            let has_labels: bool = parse_header_value(parts.next(), line_no, "classLabel")?;
            if has_labels {
                let labels: Vec<String> = parts.map(str::to_owned).collect();
                if labels.is_empty() {
                    return Err(parse_err(line_no, "@classLabel true lists no labels"));
                }
                header.class_labels = Some(labels);
            }
        }
        // Unknown headers (@missing, @univariate, ...) carry no information we
        // need; values are validated directly from the data section.
        _ => {}
    }
    Ok(())
}

fn parse_header_value<T: std::str::FromStr>(
    value: Option<&str>,
    line_no: usize,
    key: &str,
) -> Result<T> {
    value
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| parse_err(line_no, format!("invalid or missing value for @{key}")))
}

fn parse_series_line(
    line: &str,
    line_no: usize,
    header: &Header,
    missing: MissingPolicy,
) -> Result<MultivariateSeries> {
    let mut fields: Vec<&str> = line.split(':').collect();
    let label = match &header.class_labels {
        Some(labels) => {
            if fields.len() < 2 {
                return Err(parse_err(line_no, "missing class label field"));
            }
            let raw = fields.pop().unwrap().trim();
            let idx = labels
                .iter()
                .position(|l| l == raw)
                .ok_or_else(|| parse_err(line_no, format!("unknown class label {raw:?}")))?;
            Some(idx)
        }
        None => None,
    };

    let mut dims = Vec::with_capacity(fields.len());
    for field in &fields {
        dims.push(parse_dimension(field, line_no, missing)?);
    }
    let len = dims.first().map_or(0, Vec::len);
    if dims.iter().any(|d| d.len() != len) {
        return Err(parse_err(
            line_no,
            "dimensions of one series differ in length",
        ));
    }
    MultivariateSeries::from_dimensions(&dims, label)
        .map_err(|e| parse_err(line_no, e.to_string()))
}

fn parse_dimension(field: &str, line_no: usize, missing: MissingPolicy) -> Result<Vec<f64>> {
    let mut values = Vec::new();
    let mut missing_at = Vec::new();
    for token in field.split(',') {
        let token = token.trim();
        if token == "?" {
            if missing == MissingPolicy::Reject {
                return Err(parse_err(
                    line_no,
                    "missing value '?' (enable imputation to interpolate)",
                ));
            }
            missing_at.push(values.len());
            values.push(f64::NAN);
            continue;
        }
        let v: f64 = token
            .parse()
            .map_err(|_| parse_err(line_no, format!("non-numeric value {token:?}")))?;
        values.push(v);
    }
    if !missing_at.is_empty() {
        interpolate_missing(&mut values)
            .map_err(|m| parse_err(line_no, m))?;
    }
    Ok(values)
}

/// Linear interpolation over NaN gaps; edge gaps repeat the nearest value.
fn interpolate_missing(values: &mut [f64]) -> std::result::Result<(), String> {
    let known: Vec<usize> = (0..values.len()).filter(|&i| !values[i].is_nan()).collect();
    if known.is_empty() {
        return Err("dimension consists entirely of missing values".into());
    }
    for i in 0..values.len() {
        if !values[i].is_nan() {
            continue;
        }
        let before = known.iter().rev().find(|&&k| k < i);
        let after = known.iter().find(|&&k| k > i);
        values[i] = match (before, after) {
            (Some(&b), Some(&a)) => {
                let frac = (i - b) as f64 / (a - b) as f64;
                values[b] + frac * (values[a] - values[b])
            }
            (Some(&b), None) => values[b],
            (None, Some(&a)) => values[a],
            (None, None) => unreachable!("known is non-empty"),
        };
    }
    Ok(())
}

fn parse_err(line: usize, message: impl Into<String>) -> MihtError {
    MihtError::Parse {
        line,
        message: message.into(),
    }
}

/// Serializes a dataset back to `.ts` text; `parse_ts` inverts it exactly.
pub fn write_ts<W: Write>(dataset: &Dataset, mut sink: W) -> Result<()> {
    writeln!(sink, "@problemName {}", dataset.name)?;
    writeln!(sink, "@timeStamps false")?;
    writeln!(sink, "@missing false")?;
    let dims = dataset.dims().max(1);
    writeln!(sink, "@univariate {}", dims == 1)?;
    writeln!(sink, "@dimensions {dims}")?;
    let equal = dataset
        .series
        .windows(2)
        .all(|w| w[0].len() == w[1].len());
    writeln!(sink, "@equalLength {equal}")?;
    if equal {
        if let Some(first) = dataset.series.first() {
            writeln!(sink, "@seriesLength {}", first.len())?;
        }
    }
    if dataset.class_names.is_empty() {
        writeln!(sink, "@classLabel false")?;
    } else {
        writeln!(sink, "@classLabel true {}", dataset.class_names.join(" "))?;
    }
    writeln!(sink, "@data")?;
    for s in &dataset.series {
        let mut line = String::new();
        for d in 0..s.dims() {
            if d > 0 {
                line.push(':');
            }
            for (t, v) in s.dimension(d).enumerate() {
                if t > 0 {
                    line.push(',');
                }
                line.push_str(&format!("{v}"));
            }
        }
        if let Some(label) = s.label {
            line.push(':');
            line.push_str(&dataset.class_names[label]);
        }
        writeln!(sink, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Dataset> {
        parse_ts(text.as_bytes(), MissingPolicy::Reject)
    }

    const MINIMAL: &str = "@problemName tiny\n@dimensions 2\n@classLabel true A\n@data\n1.0,2.0:3.0,4.0:A\n";

    #[test]
    fn parses_minimal_file() {
        let d = parse(MINIMAL).unwrap();
        assert_eq!(d.name, "tiny");
        assert_eq!(d.n_series(), 1);
        assert_eq!(d.dims(), 2);
        assert_eq!(d.series[0].len(), 2);
        assert_eq!(d.series[0].label, Some(0));
        assert_eq!(d.series[0].value(0, 0), 1.0);
        assert_eq!(d.series[0].value(1, 1), 4.0);
    }

    #[test]
    fn rejects_unknown_label() {
        let text = MINIMAL.replace(":A\n", ":B\n");
        let err = parse(&text).unwrap_err();
        assert!(matches!(err, MihtError::Parse { line: 5, .. }), "{err}");
    }

    #[test]
    fn rejects_inconsistent_dimension_count() {
        let text = "@dimensions 2\n@classLabel true A\n@data\n1.0:2.0:A\n1.0:A\n";
        let err = parse(text).unwrap_err();
        assert!(matches!(err, MihtError::Parse { line: 5, .. }), "{err}");
    }

    #[test]
    fn rejects_ragged_dimensions_within_series() {
        let text = "@classLabel true A\n@data\n1.0,2.0:3.0:A\n";
        assert!(parse(text).is_err());
    }

    #[test]
    fn rejects_non_numeric_token() {
        let text = "@classLabel true A\n@data\n1.0,zz:2.0,3.0:A\n";
        let err = parse(text).unwrap_err();
        assert!(err.to_string().contains("non-numeric"), "{err}");
    }

    #[test]
    fn missing_value_rejected_by_default() {
        let text = "@classLabel true A\n@data\n1.0,?,3.0:A\n";
        assert!(parse(text).is_err());
    }

    #[test]
    fn missing_value_interpolated_when_enabled() {
        let text = "@classLabel true A\n@data\n1.0,?,3.0,?,?:A\n";
        let d = parse_ts(text.as_bytes(), MissingPolicy::Interpolate).unwrap();
        let got: Vec<f64> = d.series[0].dimension(0).collect();
        // gap interpolated, trailing edge replicated
        assert_eq!(got, vec![1.0, 2.0, 3.0, 3.0, 3.0]);
    }

    #[test]
    fn all_missing_dimension_fails_even_with_imputation() {
        let text = "@classLabel true A\n@data\n?,?:1.0,2.0:A\n";
        assert!(parse_ts(text.as_bytes(), MissingPolicy::Interpolate).is_err());
    }

    #[test]
    fn class_order_follows_header() {
        let text = "@classLabel true z y x\n@data\n1.0:x\n2.0:z\n";
        let d = parse(text).unwrap();
        assert_eq!(d.class_names, vec!["z", "y", "x"]);
        assert_eq!(d.series[0].label, Some(2));
        assert_eq!(d.series[1].label, Some(0));
    }

    #[test]
    fn variable_lengths_preserved() {
        let text = "@equalLength false\n@classLabel true A\n@data\n1.0,2.0,3.0:A\n1.0:A\n";
        let d = parse(text).unwrap();
        assert_eq!(d.series[0].len(), 3);
        assert_eq!(d.series[1].len(), 1);
    }

    #[test]
    fn declared_series_length_enforced() {
        let text = "@equalLength true\n@seriesLength 3\n@classLabel true A\n@data\n1.0,2.0:A\n";
        assert!(parse(text).is_err());
    }

    #[test]
    fn round_trip_preserves_dataset() {
        let text = "@problemName rt\n@classLabel true A B\n@data\n1.5,-2.25:0.1,0.2:A\n3.0,4.0:5.0,6.5:B\n";
        let d = parse(text).unwrap();
        let mut out = Vec::new();
        write_ts(&d, &mut out).unwrap();
        let d2 = parse_ts(out.as_slice(), MissingPolicy::Reject).unwrap();
        assert_eq!(d, d2);
    }

    #[test]
    fn handles_crlf_and_comments() {
        let text = "# comment\r\n@classLabel true A\r\n@data\r\n1.0,2.0:A\r\n";
        let d = parse(text).unwrap();
        assert_eq!(d.n_series(), 1);
        assert_eq!(d.series[0].len(), 2);
    }
}
