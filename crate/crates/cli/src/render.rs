//! Table output formats.
//!
//! JSON is the canonical machine format (term order and key order are
//! fixed, so identical invocations are byte-identical). CSV carries the
//! same records with the value embedded as a JSON string. LaTeX is
//! presentation-only: polynomials rendered in `x_i` and `q^{-1/2}`.

use num_traits::{One, Signed};
use serde::Serialize;
use shalika_core::formula::OmegaBody;
use shalika_core::{LaurentPoly, RationalFn};

#[derive(Serialize)]
pub struct TableRecord {
    pub lambda: Vec<i32>,
    pub mode: String,
    pub value: OmegaBody,
}

pub fn to_json(records: &[TableRecord]) -> Result<String, String> {
    serde_json::to_string_pretty(records).map_err(|e| e.to_string())
}

pub fn to_csv(records: &[TableRecord]) -> Result<String, String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["lambda", "mode", "value"])
        .map_err(|e| e.to_string())?;
    for record in records {
        let lambda = serde_json::to_string(&record.lambda).map_err(|e| e.to_string())?;
        let value = serde_json::to_string(&record.value).map_err(|e| e.to_string())?;
        writer
            .write_record([lambda.as_str(), record.mode.as_str(), value.as_str()])
            .map_err(|e| e.to_string())?;
    }
    let bytes = writer.into_inner().map_err(|e| e.to_string())?;
    // the caller appends the final newline
    String::from_utf8(bytes)
        .map(|s| s.trim_end().to_string())
        .map_err(|e| e.to_string())
}

pub fn to_latex(records: &[TableRecord]) -> String {
    let mut out = String::from("\\begin{align*}\n");
    for record in records {
        let lambda = record
            .lambda
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let body = match &record.value {
            OmegaBody::Poly(p) => poly_to_latex(p),
            OmegaBody::Ratio(f) => ratio_to_latex(f),
        };
        out.push_str(&format!(
            "\\Omega^{{\\mathrm{{{}}}}}_{{({lambda})}} &= {body} \\\\\n",
            record.mode
        ));
    }
    out.push_str("\\end{align*}");
    out
}

fn ratio_to_latex(f: &RationalFn) -> String {
    let f = f.clear_monomial();
    if f.den().is_one() {
        poly_to_latex(f.num())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            poly_to_latex(f.num()),
            poly_to_latex(f.den())
        )
    }
}

fn poly_to_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mut factors = Vec::new();
        for (k, &e) in m.x_exponents().iter().enumerate() {
            if e == 1 {
                factors.push(format!("x_{{{}}}", k + 1));
            } else if e != 0 {
                factors.push(format!("x_{{{}}}^{{{e}}}", k + 1));
            }
        }
        // u^k = q^{-k/2}
        let k = m.u_exponent();
        if k != 0 {
            if k % 2 == 0 {
                factors.push(format!("q^{{{}}}", -k / 2));
            } else {
                factors.push(format!("q^{{{}/2}}", -k));
            }
        }
        if factors.is_empty() {
            out.push_str(&latex_rational(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&latex_rational(&abs));
                out.push_str(" \\, ");
            }
            out.push_str(&factors.join(" "));
        }
    }
    out
}

fn latex_rational(r: &shalika_core::Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}
