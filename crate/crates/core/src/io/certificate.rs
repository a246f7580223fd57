//! Certificate JSON, version 1. Unknown fields are rejected.

use crate::certificate::{Certificate, CERTIFICATE_VERSION};
use crate::error::{Error, Result};

fn violation(path: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::SchemaViolation {
        path: path.into(),
        reason: reason.into(),
    }
}

pub fn read_certificate(json: &str) -> Result<Certificate> {
    let mut de = serde_json::Deserializer::from_str(json);
    let cert: Certificate = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        violation(path, e.into_inner().to_string())
    })?;
    de.end().map_err(|e| violation(".", e.to_string()))?;
    validate(&cert)?;
    Ok(cert)
}

pub fn write_certificate(cert: &Certificate) -> Result<String> {
    validate(cert)?;
    serde_json::to_string_pretty(cert).map_err(|e| violation(".", e.to_string()))
}

fn validate(cert: &Certificate) -> Result<()> {
    if cert.version != CERTIFICATE_VERSION {
        return Err(violation(
            "version",
            format!("unsupported version {}", cert.version),
        ));
    }
    let n = cert.fingerprint.n;
    if cert.colors.len() != n {
        return Err(violation(
            "colors",
            format!("length {} differs from n = {n}", cert.colors.len()),
        ));
    }
    if let Some((v, &c)) = cert
        .colors
        .iter()
        .enumerate()
        .find(|(_, &c)| c == 0 || c > cert.k)
    {
        return Err(violation(
            format!("colors[{v}]"),
            format!("color {c} outside 1..={}", cert.k),
        ));
    }
    for (&class, &v) in &cert.b_vertices {
        if class == 0 || class > cert.k {
            return Err(violation(
                format!("b_vertices.{class}"),
                format!("class outside 1..={}", cert.k),
            ));
        }
        if v >= n {
            return Err(violation(
                format!("b_vertices.{class}"),
                format!("vertex {v} >= n"),
            ));
        }
    }
    if cert.center >= n && n > 0 {
        return Err(violation("center", format!("vertex {} >= n", cert.center)));
    }
    let lists = [
        ("neighbor_order", Some(&cert.neighbor_order)),
        ("row_order", cert.row_order.as_ref()),
    ];
    for (name, list) in lists {
        if let Some((i, v)) = list
            .into_iter()
            .flatten()
            .enumerate()
            .find(|(_, &v)| v >= n)
        {
            return Err(violation(
                format!("{name}[{i}]"),
                format!("vertex {v} >= n"),
            ));
        }
    }
    Ok(())
}
