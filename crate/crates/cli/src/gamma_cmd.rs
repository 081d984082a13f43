//! Generator inspection: matrix image and basis expansion.

use efb_core::text::render_efb;
use efb_core::{to_matrix, Algebra, Rational};
use serde_json::json;

use crate::{CliError, Format};

fn rational_json(r: &Rational) -> serde_json::Value {
    if r.is_integer() {
        if let Ok(n) = r.as_ratio().numer().try_into() {
            let n: i64 = n;
            return json!(n);
        }
    }
    json!(r.to_string())
}

pub fn run(m: u8, i: usize, format: Format) -> Result<String, CliError> {
    let limit = match format {
        Format::Text => 6,
        Format::Json => 10,
    };
    if m < 1 || m > limit {
        return Err(CliError::Usage(format!(
            "gamma needs 1 <= m <= {limit} for this format, got {m}"
        )));
    }
    let alg = Algebra::<Rational>::new(m).map_err(|e| CliError::Usage(e.to_string()))?;
    if i < 1 || i > alg.generator_count() {
        return Err(CliError::Usage(format!(
            "generator index must be in 1..={}, got {i}",
            alg.generator_count()
        )));
    }
    let gamma = alg.gamma(i)?;
    let mat = to_matrix(&gamma);
    match format {
        Format::Text => {
            let side = mat.side();
            let mut entries: Vec<Vec<String>> = Vec::with_capacity(side);
            let mut width = 1;
            for r in 0..side {
                let mut row = Vec::with_capacity(side);
                for c in 0..side {
                    let s = mat.get(r, c).to_string();
                    width = width.max(s.len());
                    row.push(s);
                }
                entries.push(row);
            }
            let mut out = format!("gamma {i} in Cl({m},{m})\n\nmatrix:\n");
            for row in &entries {
                let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
                out.push_str("  ");
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            out.push_str("\nexpansion:\n  ");
            out.push_str(&render_efb(&gamma));
            Ok(out)
        }
        Format::Json => {
            let side = mat.side();
            let rows: Vec<Vec<serde_json::Value>> = (0..side)
                .map(|r| (0..side).map(|c| rational_json(mat.get(r, c))).collect())
                .collect();
            Ok(json!({
                "m": m,
                "i": i,
                "matrix": rows,
                "expansion": render_efb(&gamma),
                "trace": rational_json(&efb_core::trace(&gamma)),
            })
            .to_string())
        }
    }
}
