use serde::Serialize;

use crate::CliError;

pub(crate) fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub(crate) fn csv(header: &str, rows: &[Vec<String>]) -> String {
    let mut s = format!("{header}\n");
    for row in rows {
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

pub(crate) fn angle(x: f64, degrees: bool) -> String {
    if degrees {
        format!("{:.9} deg", x.to_degrees())
    } else {
        format!("{x:.12}")
    }
}

pub(crate) fn angles(xs: &[f64], degrees: bool) -> String {
    xs.iter()
        .map(|&x| angle(x, degrees))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Aligned `key  value` lines.
pub(crate) fn human(lines: &[(&str, String)]) -> String {
    let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    lines
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}
