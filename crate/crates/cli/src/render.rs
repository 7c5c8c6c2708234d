//! Per-command output in the three formats.

use crate::{CliError, Format};
use serde_json::{json, Value};
use tangent_triangles::diophantine::QuarticHit;
use tangent_triangles::generator::{FullConfig, CSV_HEADER};
use tangent_triangles::integrality::IntegralityReport;
use tangent_triangles::lengths::{assemble_triangles, verify_pythagorean, LengthSet, RadiiPair};
use tangent_triangles::lengths::GROUP_SUMMARIES;
use tangent_triangles::oracle::{AngleReport, CrossCheckReport};
use tangent_triangles::Int;

/// Display names for the sixteen surd lengths, in `LengthSet` field order.
const SURD_DISPLAY_NAMES: [&str; 16] = [
    "T1T2", "x1", "x2", "a1", "a2", "h1", "h2", "M1M", "M2M", "IM", "C2K", "C1K", "T2K", "T1K",
    "d1", "d2",
];

fn emit_json(value: Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("valid JSON"));
}

pub fn generate(config: &FullConfig<Int>, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => emit_json(config.to_json()),
        Format::Csv => {
            println!("{CSV_HEADER}");
            println!("{}", config.csv_row());
        }
        Format::Human => {
            let triple = &config.triple;
            println!("m = {}", config.params.m());
            println!("n = {}", config.params.n());
            println!("t = {}", config.t);
            println!("triple = ({}, {}, {})", triple.r1(), triple.r2(), triple.r3());
            println!("delta = {}", config.delta);
            println!("R1 = {}", config.radius1);
            println!("R2 = {}", config.radius2);
            for (name, value) in config.lengths.named() {
                println!("{name} = {value}");
            }
            let surds = config.length_set();
            println!("d1 = {}", surds.d1);
            println!("d2 = {}", surds.d2);
            println!("d1_radicand = {}", config.d1_radicand);
            println!("d2_radicand = {}", config.d2_radicand);
        }
    }
    Ok(())
}

pub fn classify(report: &IntegralityReport<Int>, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => emit_json(report.to_json()),
        Format::Csv => {
            println!("tier,delta,r1,r2,r3,t");
            let blank = String::new();
            let delta = report.delta().map(|v| v.to_string()).unwrap_or_default();
            let (r1, r2) = match report {
                IntegralityReport::TangentIntegral { r1, r2, .. } => {
                    (r1.to_string(), r2.to_string())
                }
                _ => report
                    .triple()
                    .map(|t| (t.r1().to_string(), t.r2().to_string()))
                    .unwrap_or((blank.clone(), blank.clone())),
            };
            let r3 = report
                .triple()
                .map(|t| t.r3().to_string())
                .unwrap_or_default();
            let t = report.scale().map(|v| v.to_string()).unwrap_or_default();
            println!("{},{delta},{r1},{r2},{r3},{t}", report.tier());
        }
        Format::Human => {
            match report {
                IntegralityReport::NonSquareProduct => {
                    println!("NonSquareProduct");
                    println!("R1*R2 is not a perfect square, so T1T2 = 2*sqrt(R1*R2) is irrational.");
                }
                IntegralityReport::TangentIntegral { delta, r1, r2 } => {
                    println!("TangentIntegral delta={delta} r=({r1},{r2})");
                    println!("T1T2 = {} and IM = {} are integers; r1^2 + r2^2 is not a perfect square, so the cevians x1, x2 are irrational.",
                        Int::from(2) * delta * r1 * r2, delta * r1 * r2);
                }
                IntegralityReport::CevianIntegral { delta, triple, lengths } => {
                    println!(
                        "CevianIntegral delta={delta} triple=({},{},{})",
                        triple.r1(),
                        triple.r2(),
                        triple.r3()
                    );
                    for (name, value) in lengths.named() {
                        println!("{name} = {value}");
                    }
                }
                IntegralityReport::FullyIntegral { delta, triple, t, lengths } => {
                    println!(
                        "FullyIntegral t={t} delta={delta} triple=({},{},{})",
                        triple.r1(),
                        triple.r2(),
                        triple.r3()
                    );
                    for (name, value) in lengths.named() {
                        println!("{name} = {value}");
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn lengths(lengths: &LengthSet<Int>, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => emit_json(lengths.to_json()),
        Format::Csv => {
            println!("name,value");
            for (display, (_, value)) in SURD_DISPLAY_NAMES.iter().zip(lengths.named()) {
                println!("{display},{value}");
            }
        }
        Format::Human => {
            for (display, (_, value)) in SURD_DISPLAY_NAMES.iter().zip(lengths.named()) {
                println!("{display} = {value}");
            }
        }
    }
    Ok(())
}

pub fn enumerate(configs: &[FullConfig<Int>], max_r1: u64, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => emit_json(Value::Array(configs.iter().map(|c| c.to_json()).collect())),
        Format::Csv => {
            println!("{CSV_HEADER}");
            for config in configs {
                println!("{}", config.csv_row());
            }
        }
        Format::Human => {
            if configs.is_empty() {
                println!("no fully integral configurations with R1 <= {max_r1}");
            }
            for config in configs {
                println!(
                    "R1={} R2={} (m={}, n={}, t={}, delta={}, triple=({},{},{}))",
                    config.radius1,
                    config.radius2,
                    config.params.m(),
                    config.params.n(),
                    config.t,
                    config.delta,
                    config.triple.r1(),
                    config.triple.r2(),
                    config.triple.r3()
                );
            }
        }
    }
    Ok(())
}

pub fn search(hits: &[QuarticHit<i128>], bound: i128, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let hits: Vec<Value> = hits
                .iter()
                .map(|h| json!({"x": h.x as i64, "y": h.y as i64, "z": h.z.to_string()}))
                .collect();
            emit_json(json!({"bound": bound as i64, "hits": hits}));
        }
        Format::Csv => {
            println!("x,y,z");
            for hit in hits {
                println!("{},{},{}", hit.x, hit.y, hit.z);
            }
        }
        Format::Human => {
            if hits.is_empty() {
                println!("no solutions with 1 <= x, y <= {bound}");
            }
            for hit in hits {
                println!("{} {} {}", hit.x, hit.y, hit.z);
            }
        }
    }
    Ok(())
}

pub fn verify(
    radii: &RadiiPair<Int>,
    cross: &CrossCheckReport,
    angles: &AngleReport,
    tol: f64,
    format: Format,
) -> Result<(), CliError> {
    // exact check of the sixteen triangles alongside the float oracle
    let lengths = tangent_triangles::lengths::compute_lengths(radii);
    let triangles = assemble_triangles(&lengths, radii);
    let verified = triangles.iter().filter(|t| verify_pythagorean(t)).count();
    if verified < triangles.len() {
        return Err(CliError {
            code: 2,
            message: format!(
                "only {verified}/{} triangles satisfied the Pythagorean identity exactly",
                triangles.len()
            ),
        });
    }

    match format {
        Format::Json => emit_json(json!({
            "triangles_total": triangles.len(),
            "triangles_verified": verified,
            "tol": tol,
            "max_rel_dev": cross.max_rel_dev,
            "max_angle_deviation": angles.max_deviation,
            "lengths": cross.deviations.iter().map(|d| json!({
                "name": d.name,
                "formula": d.formula,
                "measured": d.measured,
                "rel_dev": d.rel_dev,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            println!("name,formula,measured,rel_dev");
            for d in &cross.deviations {
                println!("{},{},{},{:e}", d.name, d.formula, d.measured, d.rel_dev);
            }
        }
        Format::Human => {
            println!(
                "{verified}/{} triangles verified; max rel dev < {tol:e} (oracle max {:.3e})",
                triangles.len(),
                cross.max_rel_dev
            );
            println!(
                "angle checks passed at {tol:e} (max deviation {:.3e})",
                angles.max_deviation
            );
            println!("triangle groups:");
            for (index, summary) in GROUP_SUMMARIES.iter().enumerate() {
                let names: Vec<&str> = triangles
                    .iter()
                    .filter(|t| usize::from(t.group) == index + 1)
                    .map(|t| t.name)
                    .collect();
                println!("  {}. {summary}: {}", index + 1, names.join(", "));
            }
        }
    }
    Ok(())
}
