//! Instrumented comparison of the two product routes.
//!
//! For a generator times a dense spinor the basis route performs exactly
//! `2^m` scalar multiplications against `2^{2m}` for the dense
//! matrix-times-vector route — a ratio of exactly `2^m`, asserted here from
//! the counter. Wall-clock medians are reported as information. For full
//! operands both routes count `2^{3m}`, which bounds the claim's scope.

use std::hint::black_box;
use std::time::Instant;

use efb_core::kernels::{to_matrix_coordinates, ColumnAction};
use efb_core::{scalar_mul_count, to_matrix, Algebra, Multivector, Scalar, Signature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{CliError, Format};

struct Row {
    m: u8,
    efb_muls: u64,
    dense_muls: u64,
    count_ratio: u64,
    efb_ns: f64,
    dense_ns: f64,
    wall_ratio: f64,
    general_muls: Option<(u64, u64)>,
}

fn parse_range(range: &str) -> Result<(u8, u8), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "cannot parse m range '{range}' (use e.g. 2..8 or 4)"
        ))
    };
    let (lo, hi) = if let Some((a, b)) = range.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        (
            a.trim().parse::<u8>().map_err(|_| bad())?,
            b.trim().parse::<u8>().map_err(|_| bad())?,
        )
    } else {
        let v = range.trim().parse::<u8>().map_err(|_| bad())?;
        (v, v)
    };
    if lo < 2 || hi > 10 || lo > hi {
        return Err(CliError::Usage(format!(
            "m range must lie within 2..=10, got {lo}..={hi}"
        )));
    }
    Ok((lo, hi))
}

/// Median nanoseconds per call, with the repetition count calibrated so
/// each sample lasts long enough to be measurable.
fn median_ns<F: FnMut()>(trials: u32, mut op: F) -> f64 {
    let mut reps: u64 = 1;
    loop {
        let start = Instant::now();
        for _ in 0..reps {
            op();
        }
        if start.elapsed().as_micros() >= 20 || reps >= 1 << 22 {
            break;
        }
        reps *= 8;
    }
    let mut samples: Vec<f64> = (0..trials.max(1))
        .map(|_| {
            let start = Instant::now();
            for _ in 0..reps {
                op();
            }
            start.elapsed().as_nanos() as f64 / reps as f64
        })
        .collect();
    samples.sort_by(|a, b| a.partial_cmp(b).expect("no NaN timings"));
    samples[samples.len() / 2]
}

fn measure<R>(f: impl FnOnce() -> R) -> (u64, R) {
    let before = scalar_mul_count();
    let result = f();
    (scalar_mul_count() - before, result)
}

fn run_one(m: u8, trials: u32) -> Result<Row, CliError> {
    let alg = Algebra::<f64>::new(m)?;
    let column = Signature::all_minus(m)?;
    let side = alg.matrix_side();
    let gamma = alg.gamma(1)?;
    let action = ColumnAction::new(&gamma, column)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xefb + m as u64);
    let phi: Vec<f64> = (0..side).map(|_| rng.gen_range(0.5..1.5)).collect();
    let mut sparse_out = vec![0.0; side];

    let (efb_muls, ()) = measure(|| action.apply_into(&phi, &mut sparse_out));

    let mat = to_matrix(&gamma);
    let dense_in = to_matrix_coordinates(&phi, column);
    let mut dense_out = vec![0.0; side];
    let (dense_muls, res) = measure(|| mat.mul_vec_into(&dense_in, &mut dense_out));
    res?;

    // The two routes compute the same product (up to coordinate folding).
    let folded = to_matrix_coordinates(&dense_out, column);
    if !folded.iter().zip(&sparse_out).all(|(a, b)| a.approx_eq(b)) {
        return Err(CliError::Domain(
            "the two product routes disagree; instrumentation is untrustworthy".into(),
        ));
    }
    if efb_muls != 1 << m || dense_muls != 1 << (2 * m) {
        return Err(CliError::Domain(format!(
            "unexpected multiplication counts at m={m}: {efb_muls} and {dense_muls}"
        )));
    }

    let efb_ns = median_ns(trials, || {
        action.apply_into(black_box(&phi), &mut sparse_out);
        black_box(&sparse_out);
    });
    let dense_ns = median_ns(trials, || {
        mat.mul_vec_into(black_box(&dense_in), &mut dense_out)
            .expect("sides match");
        black_box(&dense_out);
    });

    // Full operands: no advantage for either route.
    let general_muls = if m <= 6 {
        let dense_mv = |seed: u64| -> Multivector<f64> {
            let mut r = ChaCha8Rng::seed_from_u64(seed);
            Multivector::from_terms(
                m,
                efb_core::basis_indices(m)
                    .expect("valid m")
                    .map(|x| (x, r.gen_range(0.5..1.5))),
            )
            .expect("consistent terms")
        };
        let u = dense_mv(17 + m as u64);
        let v = dense_mv(29 + m as u64);
        let (efb_general, res) = measure(|| u.product(&v));
        res?;
        let (ua, va) = (to_matrix(&u), to_matrix(&v));
        let (dense_general, res) = measure(|| ua.mul(&va));
        res?;
        Some((efb_general, dense_general))
    } else {
        None
    };

    Ok(Row {
        m,
        efb_muls,
        dense_muls,
        count_ratio: dense_muls / efb_muls,
        efb_ns,
        dense_ns,
        wall_ratio: dense_ns / efb_ns,
        general_muls,
    })
}

pub fn run(range: &str, trials: u32, format: Format) -> Result<String, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("trials must be at least 1".into()));
    }
    let (lo, hi) = parse_range(range)?;
    let rows: Vec<Row> = (lo..=hi)
        .map(|m| run_one(m, trials))
        .collect::<Result<_, _>>()?;
    match format {
        Format::Text => {
            let mut out =
                String::from("generator times dense spinor (exact scalar-multiplication counts)\n");
            out.push_str(&format!(
                "{:>3} {:>10} {:>12} {:>12} {:>12} {:>12} {:>11}\n",
                "m", "efb_muls", "dense_muls", "count_ratio", "efb_ns", "dense_ns", "wall_ratio"
            ));
            for r in &rows {
                out.push_str(&format!(
                    "{:>3} {:>10} {:>12} {:>12} {:>12.1} {:>12.1} {:>11.2}\n",
                    r.m,
                    r.efb_muls,
                    r.dense_muls,
                    r.count_ratio,
                    r.efb_ns,
                    r.dense_ns,
                    r.wall_ratio
                ));
            }
            out.push_str("\nfull operands, both routes (no advantage claimed)\n");
            out.push_str(&format!(
                "{:>3} {:>12} {:>12}\n",
                "m", "efb_muls", "dense_muls"
            ));
            for r in &rows {
                if let Some((e, d)) = r.general_muls {
                    out.push_str(&format!("{:>3} {:>12} {:>12}\n", r.m, e, d));
                }
            }
            out.pop();
            Ok(out)
        }
        Format::Json => {
            let results: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "m": r.m,
                        "efb_muls": r.efb_muls,
                        "dense_muls": r.dense_muls,
                        "count_ratio": r.count_ratio,
                        "efb_ns": r.efb_ns,
                        "dense_ns": r.dense_ns,
                        "wall_ratio": r.wall_ratio,
                        "general": r.general_muls.map(|(e, d)| json!({
                            "efb_muls": e,
                            "dense_muls": d,
                        })),
                    })
                })
                .collect();
            Ok(json!({ "trials": trials, "results": results }).to_string())
        }
    }
}
