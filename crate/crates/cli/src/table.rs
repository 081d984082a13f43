//! The signed basis table: rows are `h` signatures, columns `h∘g`
//! signatures, each cell the signed canonical word whose matrix image is
//! the corresponding matrix unit.

use efb_core::generators::table_sign;
use efb_core::text::render_word;
use efb_core::{EfbIndex, Signature};
use serde_json::json;

use crate::{CliError, Format};

fn cell(a: Signature, b: Signature) -> (i8, String) {
    let sign = table_sign(&a, &b).expect("same m");
    let word = render_word(&EfbIndex::new(a, b).expect("same m"));
    (sign, word)
}

pub fn run(m: u8, format: Format) -> Result<String, CliError> {
    let limit = match format {
        Format::Text => 6,
        Format::Json => 16,
    };
    if m < 1 || m > limit {
        return Err(CliError::Usage(format!(
            "table needs 1 <= m <= {limit} for this format, got {m}"
        )));
    }
    let signatures: Vec<Signature> = Signature::all(m)
        .map_err(|e| CliError::Usage(e.to_string()))?
        .collect();
    match format {
        Format::Text => {
            let mut cells: Vec<Vec<String>> = Vec::new();
            for &a in &signatures {
                cells.push(
                    signatures
                        .iter()
                        .map(|&b| {
                            let (sign, word) = cell(a, b);
                            if sign < 0 {
                                format!("-{word}")
                            } else {
                                word
                            }
                        })
                        .collect(),
                );
            }
            let label_width = m as usize;
            let mut widths: Vec<usize> = signatures.iter().map(|b| b.to_string().len()).collect();
            for row in &cells {
                for (k, c) in row.iter().enumerate() {
                    widths[k] = widths[k].max(c.len());
                }
            }
            let mut lines = Vec::with_capacity(cells.len() + 1);
            let mut header = " ".repeat(label_width);
            for (k, b) in signatures.iter().enumerate() {
                header.push_str("  ");
                header.push_str(&format!("{:<width$}", b.to_string(), width = widths[k]));
            }
            lines.push(header);
            for (r, a) in signatures.iter().enumerate() {
                let mut line = format!("{:<label_width$}", a.to_string());
                for (k, c) in cells[r].iter().enumerate() {
                    line.push_str("  ");
                    line.push_str(&format!("{:<width$}", c, width = widths[k]));
                }
                lines.push(line);
            }
            Ok(lines
                .iter()
                .map(|l| l.trim_end())
                .collect::<Vec<_>>()
                .join("\n"))
        }
        Format::Json => {
            let rows: Vec<_> = signatures
                .iter()
                .map(|&a| {
                    let cells: Vec<_> = signatures
                        .iter()
                        .map(|&b| {
                            let (sign, word) = cell(a, b);
                            json!({
                                "column": b.to_string(),
                                "sign": sign,
                                "word": word,
                            })
                        })
                        .collect();
                    json!({ "row": a.to_string(), "cells": cells })
                })
                .collect();
            Ok(json!({ "m": m, "side": 1u64 << m, "rows": rows }).to_string())
        }
    }
}
