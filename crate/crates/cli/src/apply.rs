//! Parse an expression, apply an automorphism, echo it back in the basis
//! the input was written in.

use efb_core::automorphisms::{
    beta_anti, conjugation_auto, dual_transpose, inner, main_auto, reversion_auto,
};
use efb_core::text::{
    detect_basis, parse_multivector, render_efb, render_gamma, required_m, TextBasis,
};
use efb_core::{Multivector, Rational};
use serde_json::json;

use crate::{AutoKind, CliError, Format};

pub fn run(
    auto: AutoKind,
    input: &str,
    x: Option<&str>,
    m: Option<u8>,
    format: Format,
) -> Result<String, CliError> {
    if auto != AutoKind::Inner && x.is_some() {
        return Err(CliError::Usage("--x is only meaningful for `inner`".into()));
    }
    let mut needed = required_m(input)?;
    if let Some(xs) = x {
        needed = needed.max(required_m(xs)?);
    }
    let m = match m {
        None => needed,
        Some(given) if given >= needed => given,
        Some(given) => {
            return Err(CliError::Usage(format!(
                "the expression needs m >= {needed}, got --m {given}"
            )))
        }
    };
    let v: Multivector<Rational> = parse_multivector(input, Some(m))?;
    let result = match auto {
        AutoKind::Main => main_auto(&v),
        AutoKind::Reversion => reversion_auto(&v),
        AutoKind::Conjugation => conjugation_auto(&v),
        AutoKind::Beta => beta_anti(&v),
        AutoKind::Dual => dual_transpose(&v),
        AutoKind::Inner => {
            let xs = x.ok_or_else(|| {
                CliError::Usage("`inner` needs a conjugator: --x \"<expr>\"".into())
            })?;
            let conjugator: Multivector<Rational> = parse_multivector(xs, Some(m))?;
            inner(&conjugator, &v)?
        }
    };
    let echo_basis = detect_basis(input)?;
    let rendered = match echo_basis {
        TextBasis::Gamma => render_gamma(&result),
        TextBasis::Null => render_efb(&result),
    };
    match format {
        Format::Text => Ok(rendered),
        Format::Json => Ok(json!({
            "automorphism": format!("{auto:?}").to_lowercase(),
            "input": input,
            "m": m,
            "result": rendered,
            "efb": render_efb(&result),
            "gamma": render_gamma(&result),
        })
        .to_string()),
    }
}
