//! Spinor-space classification of conjugation by an element.

use efb_core::spinor::{classify_stabilizer, ChiralityFactor, SpaceMap};
use efb_core::text::{parse_multivector, required_m};
use efb_core::{Multivector, Rational};
use serde_json::json;

use crate::{CliError, Format};

pub fn run(input: &str, m: Option<u8>, format: Format) -> Result<String, CliError> {
    let needed = required_m(input)?;
    let m = match m {
        None => needed,
        Some(given) if given >= needed => given,
        Some(given) => {
            return Err(CliError::Usage(format!(
                "the expression needs m >= {needed}, got --m {given}"
            )))
        }
    };
    let x: Multivector<Rational> = parse_multivector(input, Some(m))?;
    let report = classify_stabilizer(&x)?;
    let description = match &report.space_map {
        SpaceMap::Permutation(map) => {
            if report.space_map.stabilizes_all() {
                "stabilizes all spaces".to_string()
            } else if report.space_map.negates_all() {
                "maps every space S_b to S_-b".to_string()
            } else {
                let moves: Vec<String> = map.iter().map(|(b, c)| format!("{b} -> {c}")).collect();
                format!("permutes spaces: {}", moves.join(", "))
            }
        }
        SpaceMap::NotSpaceAligned => "not a permutation of spaces".to_string(),
    };
    let factor = match report.chirality_factor {
        ChiralityFactor::Plus => "+1",
        ChiralityFactor::Minus => "-1",
        ChiralityFactor::Mixed => "mixed",
    };
    match format {
        Format::Text => Ok(format!(
            "element: {input}\nm: {m}\nspace map: {description}\nchirality factor: {factor}\nleft/right stabilization agree: {}",
            if report.prop_two_agrees { "yes" } else { "no" }
        )),
        Format::Json => {
            let map_json = match &report.space_map {
                SpaceMap::Permutation(map) => {
                    let entries: serde_json::Map<String, serde_json::Value> = map
                        .iter()
                        .map(|(b, c)| (b.to_string(), json!(c.to_string())))
                        .collect();
                    serde_json::Value::Object(entries)
                }
                SpaceMap::NotSpaceAligned => serde_json::Value::Null,
            };
            Ok(json!({
                "element": input,
                "m": m,
                "space_map": map_json,
                "stabilizes_all": report.space_map.stabilizes_all(),
                "negates_all": report.space_map.negates_all(),
                "chirality_factor": factor,
                "prop_two_agrees": report.prop_two_agrees,
            })
            .to_string())
        }
    }
}
