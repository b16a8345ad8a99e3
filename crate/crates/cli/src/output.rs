//! Serialization of series, spectra, and sidecar metadata.
//!
//! CSV: UTF-8, comma separator, `.` decimal point, LF line endings, header
//! exactly `omega_tau,value` (`k,weight` for spectra), values in decimal
//! notation with 12 significant digits. JSON carries full-precision floats.

use std::io::Write;

use kepcorr::correlators::{CorrelationKind, CorrelationSeries, SpectrumLine};
use serde::Serialize;

pub fn kind_name(kind: CorrelationKind) -> &'static str {
    match kind {
        CorrelationKind::FirstOrder => "first_order",
        CorrelationKind::SecondOrder => "second_order",
    }
}

/// Decimal notation with 12 significant digits.
pub fn format_sig12(v: f64) -> String {
    if v == 0.0 {
        return "0.00000000000".to_string();
    }
    let mut mag = v.abs().log10().floor() as i32;
    // Guard the floor against log10 rounding at decade boundaries.
    if 10f64.powi(mag + 1) <= v.abs() {
        mag += 1;
    } else if 10f64.powi(mag) > v.abs() {
        mag -= 1;
    }
    let decimals = (11 - mag).max(0) as usize;
    let formatted = format!("{v:.decimals$}");
    // Rounding can bump the value into the next decade ("999.9..." ->
    // "1000.0..."); drop one decimal so twelve significant digits remain.
    if decimals > 0 && formatted.parse::<f64>().unwrap_or(0.0).abs() >= 10f64.powi(mag + 1) {
        let fewer = decimals - 1;
        format!("{v:.fewer$}")
    } else {
        formatted
    }
}

#[derive(Debug, Serialize)]
pub struct QuadratureDoc {
    pub phi_nodes: usize,
    pub convergence_tol: f64,
    pub kmax: usize,
}

#[derive(Debug, Serialize)]
pub struct SeriesDoc {
    pub kind: &'static str,
    pub epsilon: f64,
    pub normalization: f64,
    pub omega_tau: Vec<f64>,
    pub value: Vec<f64>,
    pub quadrature: QuadratureDoc,
}

#[derive(Debug, Serialize)]
pub struct SpectrumDoc {
    pub kind: &'static str,
    pub epsilon: f64,
    pub k: Vec<usize>,
    pub weight: Vec<f64>,
    pub quadrature: QuadratureDoc,
}

/// Sidecar record; every output can be regenerated from this block alone.
#[derive(Debug, Serialize)]
pub struct MetaDoc {
    pub scenario: &'static str,
    pub kind: &'static str,
    pub epsilon: f64,
    pub omega: f64,
    pub a: f64,
    pub phi_nodes: usize,
    pub convergence_tol: f64,
    pub kmax: usize,
    pub tau_min: Option<f64>,
    pub tau_max: Option<f64>,
    pub points: Option<usize>,
    pub normalization: Option<f64>,
    pub format: &'static str,
    pub library_version: &'static str,
}

pub fn write_series_csv<W: Write>(
    w: &mut W,
    series: &CorrelationSeries<f64>,
) -> std::io::Result<()> {
    w.write_all(b"omega_tau,value\n")?;
    for (tau, value) in series.tau_scaled.iter().zip(series.values.iter()) {
        writeln!(w, "{},{}", format_sig12(*tau), format_sig12(*value))?;
    }
    Ok(())
}

pub fn write_series_json<W: Write>(w: &mut W, doc: &SeriesDoc) -> std::io::Result<()> {
    serde_json::to_writer(&mut *w, doc)?;
    w.write_all(b"\n")
}

pub fn write_spectrum_csv<W: Write>(w: &mut W, lines: &[SpectrumLine<f64>]) -> std::io::Result<()> {
    w.write_all(b"k,weight\n")?;
    for line in lines {
        writeln!(w, "{},{}", line.k, format_sig12(line.weight))?;
    }
    Ok(())
}

pub fn write_spectrum_json<W: Write>(w: &mut W, doc: &SpectrumDoc) -> std::io::Result<()> {
    serde_json::to_writer(&mut *w, doc)?;
    w.write_all(b"\n")
}

pub fn write_metadata<W: Write>(w: &mut W, doc: &MetaDoc) -> std::io::Result<()> {
    serde_json::to_writer(&mut *w, doc)?;
    w.write_all(b"\n")
}
