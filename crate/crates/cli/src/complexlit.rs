//! Parsing of complex literals of the form "re", "imi", or "re+imi",
//! and of row-major comma-separated matrices built from them.

use num_complex::Complex64;

use xyseq_core::Unitary;

/// Parse one complex literal: "1.5", "-2i", "0.3+0.4i", "1e-3-2e-4i".
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // Split at the last +/- that is not a leading sign and not an
        // exponent sign.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = body[..k]
                    .parse()
                    .map_err(|_| format!("bad real part in '{text}'"))?;
                let im = parse_signed_unit(&body[k..], text)?;
                Ok(Complex64::new(re, im))
            }
            None => Ok(Complex64::new(0.0, parse_signed_unit(body, text)?)),
        }
    } else {
        let re: f64 = s
            .parse()
            .map_err(|_| format!("bad complex literal '{text}'"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

fn parse_signed_unit(body: &str, original: &str) -> Result<f64, String> {
    match body {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => body
            .parse()
            .map_err(|_| format!("bad imaginary part in '{original}'")),
    }
}

/// Parse a dim x dim matrix from dim^2 comma-separated complex
/// literals in row-major order; an argument of the form "@path" is
/// read from that file first.
pub fn parse_matrix(arg: &str, dim: usize) -> Result<Unitary, String> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    } else {
        arg.to_string()
    };
    let entries: Vec<Complex64> = text
        .split(',')
        .map(parse_complex)
        .collect::<Result<_, _>>()?;
    if entries.len() != dim * dim {
        return Err(format!(
            "expected {} matrix entries, got {}",
            dim * dim,
            entries.len()
        ));
    }
    Ok(Unitary::from_fn(dim, |r, c| entries[r * dim + c]))
}
