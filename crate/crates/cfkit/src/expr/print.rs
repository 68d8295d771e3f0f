use crate::cf::{Poly, PolyRat};

/// Polynomial in descending powers: "n^2 - 2*n + 1", "-2*n + 1", "0".
pub fn poly_to_string(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let coeffs = p.coeffs();
    for i in (0..coeffs.len()).rev() {
        let c = &coeffs[i];
        if c.is_zero() {
            continue;
        }
        let first = out.is_empty();
        if first {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs = c.abs().to_string();
        let body = match i {
            0 => abs,
            1 if abs == "1" => "n".to_string(),
            1 => format!("{abs}*n"),
            _ if abs == "1" => format!("n^{i}"),
            _ => format!("{abs}*n^{i}"),
        };
        out.push_str(&body);
    }
    out
}

/// Canonical textual form; `parse_sequence_expr(print_expr(p)) == p`.
///
/// A trivial denominator is omitted, a constant fraction prints as "p/q",
/// and anything else is written "(num)/(den)".
pub fn print_expr(p: &PolyRat) -> String {
    let den = p.den();
    if den.degree() == Some(0) && den.leading().is_some_and(|l| l.is_one()) {
        return poly_to_string(p.num());
    }
    let num_str = poly_to_string(p.num());
    let den_str = poly_to_string(den);
    if p.num().degree().unwrap_or(0) == 0 && den.degree() == Some(0) {
        format!("{num_str}/{den_str}")
    } else {
        format!("({num_str})/({den_str})")
    }
}
