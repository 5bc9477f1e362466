use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use apolar_cli::domain::{parse_bbox, parse_complex, parse_domain};
use apolar_cli::figures::render_figures;
use apolar_cli::render::{points_to_svg_polyline, raster_to_ppm};
use apolar_core::apolarity::{bracket, is_apolar};
use apolar_core::harness::{
    verify_bernstein, verify_grace_classical, verify_grace_relative, verify_walsh_relative,
    TrialReport,
};
use apolar_core::poly::Polynomial;
use apolar_core::pullback::{t_matrix, MatrixBasis, OperatorMatrix};
use apolar_core::regions::{
    boundary_samples, classify_preimage_raster, classify_raster, is_positive_definite,
    q_circ_empty_scan, schur_cohn, ScanOutcome,
};
use apolar_core::takagi::{skew_eigenbasis, verify_complex_symmetry, verify_double_orthogonality};

/// Apolarity, pullback operators and circular-domain pushforwards for
/// complex polynomials.
#[derive(Parser)]
#[command(name = "apolar", version, about)]
struct Cli {
    /// Seed for the randomized verifiers.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Relative tolerance for verdicts.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Monomial,
    Orthonormal,
}

#[derive(Subcommand)]
enum Command {
    /// Apolarity bracket of two polynomials in degree n.
    Bracket {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Matrix of the pullback operator of a monic map.
    Tqn {
        #[arg(long)]
        q: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Monomial)]
        basis: BasisArg,
        /// Emit CSV (columns re, im interleaved) instead of JSON rows.
        #[arg(long)]
        csv: bool,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a rectangle of the image plane by fiber count against a
    /// circular domain, writing a PPM map.
    Regions {
        #[arg(long)]
        q: PathBuf,
        /// disk:cx,cy,r or halfplane:bre,bim,c
        #[arg(long)]
        domain: String,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        complement: bool,
        /// x0,y0,x1,y1
        #[arg(long)]
        bbox: String,
        #[arg(long)]
        res: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write the image of the domain boundary as an SVG polyline.
        #[arg(long)]
        overlay: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9)]
        guard: f64,
        /// Classify source-plane pixels through the map instead.
        #[arg(long)]
        preimage: bool,
    },
    /// Schur-Cohn matrix of a monic map, with the unit-disk verdict.
    SchurCohn {
        #[arg(long)]
        q: PathBuf,
        /// Shift to test, as re,im (default 0,0).
        #[arg(long)]
        lambda: Option<String>,
        /// Scan the image square at this resolution for a shift with all
        /// fiber points in the unit disk.
        #[arg(long)]
        scan: Option<usize>,
    },
    /// Skew eigenbasis of the pullback operator (even map degree).
    Takagi {
        #[arg(long)]
        q: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1e-8)]
        cluster_tol: f64,
        /// Write the basis polynomials and singular values as JSON.
        #[arg(long)]
        emit_basis: Option<PathBuf>,
    },
    /// Randomized certificates of the zero-location theorems.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
    /// Reproduce the worked-example figures into a directory.
    RenderFigures {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 300)]
        res: usize,
        #[arg(long, default_value_t = 512)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Classical Grace: apolar partners share a circular domain.
    Grace {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        domain: String,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        complement: bool,
        #[arg(long, default_value_t = 500)]
        trials: u64,
    },
    /// Relative Grace along a monic map.
    GraceRel {
        #[arg(long)]
        q: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        domain: String,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        complement: bool,
        #[arg(long, default_value_t = 300)]
        trials: u64,
    },
    /// Relative Walsh along a monic map.
    WalshRel {
        #[arg(long)]
        q: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        domain: String,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        complement: bool,
        #[arg(long, default_value_t = 300)]
        trials: u64,
    },
    /// Majorization of the multi-point forms under a ratio hypothesis.
    Bernstein {
        #[arg(long)]
        q: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        domain: String,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: u64,
    },
}

fn read_poly(path: &Path) -> Result<Polynomial> {
    let data = std::fs::read_to_string(path)
        .with_context(|| format!("reading polynomial file {}", path.display()))?;
    serde_json::from_str(&data)
        .with_context(|| format!("parsing polynomial JSON in {}", path.display()))
}

fn fmt_complex(z: Complex64) -> String {
    format!("{:.12}{:+.12}i", z.re, z.im)
}

fn complex_json(z: Complex64) -> serde_json::Value {
    serde_json::json!([z.re, z.im])
}

fn matrix_rows_json(m: &OperatorMatrix) -> serde_json::Value {
    let n = m.n;
    let rows: Vec<serde_json::Value> = (0..=n)
        .map(|i| {
            serde_json::Value::Array((0..=n).map(|j| complex_json(m.entries.get(i, j))).collect())
        })
        .collect();
    serde_json::json!({
        "n": n,
        "basis": match m.basis {
            MatrixBasis::Monomial => "monomial",
            MatrixBasis::FischerOrthonormal => "fischer-orthonormal",
        },
        "rows": rows,
    })
}

fn matrix_csv(m: &OperatorMatrix) -> String {
    let n = m.n;
    let mut out = String::new();
    for i in 0..=n {
        let row: Vec<String> = (0..=n)
            .map(|j| {
                let v = m.entries.get(i, j);
                format!("{},{}", v.re, v.im)
            })
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn print_report(name: &str, report: &TrialReport, json: bool) -> Result<()> {
    if json {
        let mut value = serde_json::to_value(report)?;
        value["verifier"] = serde_json::Value::String(name.to_string());
        value["passes"] = serde_json::Value::from(report.passes());
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!(
            "{}: {} trials, {} passes, {} violations, {} indeterminate skips (seed {})",
            name,
            report.trials,
            report.passes(),
            report.violations,
            report.indeterminate_skips,
            report.seed
        );
        println!("worst margin: {:.3e}", report.worst_margin);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Bracket { f, g, n } => {
            let fp = read_poly(&f)?;
            let gp = read_poly(&g)?;
            let value = bracket(&fp, &gp, n)?;
            let apolar = is_apolar(&fp, &gp, n, cli.tol)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "n": n,
                        "bracket": complex_json(value),
                        "apolar": apolar,
                        "tol": cli.tol,
                    })
                );
            } else {
                println!("[f, g]_{} = {}", n, fmt_complex(value));
                println!("apolar (tol {:.1e}): {}", cli.tol, if apolar { "yes" } else { "no" });
            }
        }
        Command::Tqn {
            q,
            n,
            basis,
            csv,
            out,
        } => {
            let qp = read_poly(&q)?;
            let m = t_matrix(&qp, n)?;
            let m = match basis {
                BasisArg::Monomial => m,
                BasisArg::Orthonormal => m.to_basis(MatrixBasis::FischerOrthonormal)?,
            };
            let body = if csv {
                matrix_csv(&m)
            } else {
                serde_json::to_string_pretty(&matrix_rows_json(&m))? + "\n"
            };
            match out {
                Some(path) => std::fs::write(&path, body)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{}", body),
            }
        }
        Command::Regions {
            q,
            domain,
            closed,
            complement,
            bbox,
            res,
            out,
            overlay,
            guard,
            preimage,
        } => {
            let qp = read_poly(&q)?;
            let dom = parse_domain(&domain, closed, complement)?;
            let bounds = parse_bbox(&bbox)?;
            let raster = if preimage {
                classify_preimage_raster(&qp, &dom, bounds, res, guard)?
            } else {
                classify_raster(&qp, &dom, bounds, res, guard)?
            };
            std::fs::write(&out, raster_to_ppm(&raster))
                .with_context(|| format!("writing {}", out.display()))?;
            if let Some(svg_path) = overlay {
                let samples = boundary_samples(&qp, &dom, 512)?;
                let svg = points_to_svg_polyline(&bounds, res, res, &samples);
                std::fs::write(&svg_path, svg)
                    .with_context(|| format!("writing {}", svg_path.display()))?;
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "out": out.display().to_string(),
                        "indeterminate": raster.indeterminate_pixels(),
                        "pixels": raster.cells.len(),
                    })
                );
            } else {
                println!(
                    "wrote {} ({} x {} pixels, {} indeterminate)",
                    out.display(),
                    res,
                    res,
                    raster.indeterminate_pixels()
                );
            }
        }
        Command::SchurCohn { q, lambda, scan } => {
            let qp = read_poly(&q)?;
            let shift = match &lambda {
                Some(spec) => parse_complex(spec)?,
                None => Complex64::new(0.0, 0.0),
            };
            let shifted = qp.sub(&Polynomial::constant(shift));
            let sc = schur_cohn(&shifted)?;
            let pd = is_positive_definite(&sc, 1e-12)?;
            let scan_outcome = match scan {
                Some(res) => Some(q_circ_empty_scan(&qp, res)?),
                None => None,
            };
            if cli.json {
                let rows: Vec<serde_json::Value> = (0..sc.dim())
                    .map(|j| {
                        serde_json::Value::Array(
                            (0..sc.dim()).map(|k| complex_json(sc.get(j, k))).collect(),
                        )
                    })
                    .collect();
                let scan_json = match scan_outcome {
                    Some(ScanOutcome::NonemptyWitness(w)) => {
                        serde_json::json!({"witness": complex_json(w)})
                    }
                    Some(ScanOutcome::EmptyUpToGrid) => serde_json::json!("empty-up-to-grid"),
                    None => serde_json::Value::Null,
                };
                println!(
                    "{}",
                    serde_json::json!({
                        "lambda": complex_json(shift),
                        "matrix": rows,
                        "positive_definite": pd,
                        "scan": scan_json,
                    })
                );
            } else {
                println!("SC(q - lambda) at lambda = {}:", fmt_complex(shift));
                for j in 0..sc.dim() {
                    let row: Vec<String> =
                        (0..sc.dim()).map(|k| fmt_complex(sc.get(j, k))).collect();
                    println!("  [{}]", row.join(", "));
                }
                println!(
                    "positive definite: {} (all fiber points of lambda in the open unit disk)",
                    if pd { "yes" } else { "no" }
                );
                match scan_outcome {
                    Some(ScanOutcome::NonemptyWitness(w)) => {
                        println!("scan: witness {}", fmt_complex(w))
                    }
                    Some(ScanOutcome::EmptyUpToGrid) => {
                        println!("scan: full-fiber region empty up to the grid")
                    }
                    None => {}
                }
            }
        }
        Command::Takagi {
            q,
            n,
            cluster_tol,
            emit_basis,
        } => {
            let qp = read_poly(&q)?;
            let symmetry = verify_complex_symmetry(&qp, n, false)?;
            let basis = skew_eigenbasis(&qp, n, cluster_tol)?;
            let report = verify_double_orthogonality(&qp, n, &basis)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "n": n,
                        "singular_values": basis.singulars,
                        "symmetry_residual": symmetry,
                        "gram_residual": report.gram_residual,
                        "bracket_residual": report.bracket_residual,
                    })
                );
            } else {
                println!("singular values: {:?}", basis.singulars);
                println!("T* = CTC residual: {:.3e}", symmetry);
                println!("Fischer Gram residual: {:.3e}", report.gram_residual);
                println!("bracket diagonal residual: {:.3e}", report.bracket_residual);
            }
            if let Some(path) = emit_basis {
                let body = serde_json::json!({
                    "singulars": basis.singulars,
                    "polys": basis.polys,
                });
                std::fs::write(&path, serde_json::to_string_pretty(&body)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
        Command::Verify { which } => {
            let report = match which {
                VerifyCommand::Grace {
                    n,
                    domain,
                    closed,
                    complement,
                    trials,
                } => {
                    let dom = parse_domain(&domain, closed, complement)?;
                    let report = verify_grace_classical(n, &dom, trials, cli.seed);
                    print_report("grace", &report, cli.json)?;
                    report
                }
                VerifyCommand::GraceRel {
                    q,
                    n,
                    domain,
                    closed,
                    complement,
                    trials,
                } => {
                    let qp = read_poly(&q)?;
                    let dom = parse_domain(&domain, closed, complement)?;
                    let report = verify_grace_relative(&qp, n, &dom, trials, cli.seed)?;
                    print_report("grace-rel", &report, cli.json)?;
                    report
                }
                VerifyCommand::WalshRel {
                    q,
                    n,
                    domain,
                    closed,
                    complement,
                    trials,
                } => {
                    let qp = read_poly(&q)?;
                    let dom = parse_domain(&domain, closed, complement)?;
                    let report = verify_walsh_relative(&qp, n, &dom, trials, cli.seed)?;
                    print_report("walsh-rel", &report, cli.json)?;
                    report
                }
                VerifyCommand::Bernstein {
                    q,
                    n,
                    domain,
                    closed,
                    complement,
                    f,
                    g,
                    samples,
                } => {
                    let qp = read_poly(&q)?;
                    let fp = read_poly(&f)?;
                    let gp = read_poly(&g)?;
                    let dom = parse_domain(&domain, closed, complement)?;
                    let report = verify_bernstein(&qp, n, &dom, &fp, &gp, samples, cli.seed)?;
                    print_report("bernstein", &report, cli.json)?;
                    report
                }
            };
            if report.violations > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::RenderFigures { out, res, samples } => {
            let written = render_figures(&out, res, samples)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({"dir": out.display().to_string(), "files": written})
                );
            } else {
                for name in &written {
                    println!("wrote {}", out.join(name).display());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::FAILURE
        }
    }
}
