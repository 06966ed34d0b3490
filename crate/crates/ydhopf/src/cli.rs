//! Command-line surface. Exit-code contract: 0 every assertion passed,
//! 1 something checkable was verified false (including failed construction
//! preconditions like a non-symmetric braiding), 2 invalid input or flags.

use crate::dual::{quasi_dual_build, quasi_dual_check};
use crate::duality::{default_comodule, duality_data, exchange_law_assertions, verify_duality};
use crate::error::{Error, Result};
use crate::expr::{expr_evaluate, expr_validate, parse_expr};
use crate::field::Field;
use crate::fileio::{
    algebra_to_file, digest, file_to_hopf, file_to_pairing, load_env, pairing_to_file,
    read_algebra, read_pairing, write_json,
};
use crate::group::{Character, Group};
use crate::homyd::check_hom_yd;
use crate::hopf::hopf_axiom_assertions;
use crate::morphism::LinearMorphism;
use crate::qta::{build_preset, quantum_tensor_algebra, QtaParams};
use crate::report::{Assertion, Checker, InputDigest, Report};
use crate::smash::ComoduleAlgebra;
use crate::ydcond::check_yd_condition;
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "ydhopf",
    version,
    about = "Exact verifier for braided Hopf algebra duality over finite abelian group algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate algebra files.
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Run a verification suite against algebra files.
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Build the quasi-dual of an algebra file plus its pairing sidecar.
    Dual {
        h: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Pairing sidecar path (default: OUT with .pairing.json appended).
        #[arg(long)]
        pair_out: Option<PathBuf>,
    },
    /// End-to-end theorem verification.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Evaluate a diagram expression against an environment file.
    Eval {
        #[arg(long)]
        env: PathBuf,
        #[arg(long)]
        expr: String,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// One of the named desk-scale profiles: bline, two-gen, z4q2.
    Preset {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// A truncated quantum tensor algebra from explicit data.
    Qta {
        #[arg(long)]
        prime: u64,
        /// Cyclic factor orders, comma separated.
        #[arg(long)]
        group: String,
        /// One per generator: "g=a1,a2;chi=c1,c2" (degree exponents and
        /// character images on the cyclic generators).
        #[arg(long = "gen")]
        gens: Vec<String>,
        #[arg(long)]
        trunc: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Full braided Hopf axiom suite.
    Hopf {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Carrier well-formedness and the compatibility condition.
    Yd {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// The three pairing displays for an (H, H^d, pairing) triple.
    Pairing {
        h: PathBuf,
        hd: PathBuf,
        pair: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Hom(V, W) module/comodule displays and the compatibility condition.
    Hom {
        v: PathBuf,
        w: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// The lambda/rho exchange identities including the full composition law.
    Exchange {
        h: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Quantum cocommutativity: braiding . comult = comult.
    Cocomm {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// The whole duality ladder: displays, harpoon laws, CRL, w, Psi/Phi.
    Duality {
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        hd: Option<PathBuf>,
        #[arg(long)]
        pair: Option<PathBuf>,
        /// Comodule algebra file; defaults to R = H^d with the
        /// comultiplication as coaction.
        #[arg(long)]
        r: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// 0 all pass, 1 verified false, 2 invalid input.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::AxiomFailure { .. }
        | Error::NotYdMorphism(_)
        | Error::ModuleAxiomFailure(..)
        | Error::NonSymmetricBraiding
        | Error::NoAntipode
        | Error::NonInvertibleAntipode
        | Error::RankDeficient { .. }
        | Error::InconsistentSystem(_)
        | Error::GradingActionClash { .. }
        | Error::NonCommutingAction(..)
        | Error::WrongActionOrder { .. } => 1,
        _ => 2,
    }
}

fn emit(
    assertions: Vec<Assertion>,
    inputs: Vec<InputDigest>,
    report_path: Option<&Path>,
) -> Result<i32> {
    let report = Report::new(inputs, assertions);
    print!("{}", report.render_text());
    if let Some(p) = report_path {
        write_json(p, &report)?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn input_digest(label: &str, path: &Path) -> Result<InputDigest> {
    let file = read_algebra(path)?;
    Ok(InputDigest {
        label: label.to_string(),
        sha256: digest(&file),
    })
}

fn carrier_assertions(h: &crate::hopf::BraidedHopf) -> Vec<Assertion> {
    let mut ck = Checker::new();
    match h.carrier.validate() {
        Ok(()) => {
            ck.claim(
                "object.well-formed",
                "grading-compatible commuting action",
                true,
            );
        }
        Err(e) => {
            ck.claim("object.well-formed", format!("carrier invalid: {e}"), false);
        }
    }
    ck.into_assertions()
}

fn parse_qta_gen(field: &Field, group: &Group, raw: &str) -> Result<(Vec<u32>, Character)> {
    let mut deg = None;
    let mut chi = None;
    for part in raw.split(';') {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("bad generator `{raw}`")))?;
        let nums: Vec<u64> = val
            .split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad number `{s}`")))
            })
            .collect::<Result<_>>()?;
        match key.trim() {
            "g" => deg = Some(nums.iter().map(|&x| x as u32).collect::<Vec<_>>()),
            "chi" => chi = Some(nums),
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown generator field `{other}`"
                )))
            }
        }
    }
    let deg = deg.ok_or_else(|| Error::InvalidInput("generator needs g=".into()))?;
    let chi = chi.ok_or_else(|| Error::InvalidInput("generator needs chi=".into()))?;
    let deg = group.reduce(&deg.iter().map(|&x| x as i64).collect::<Vec<_>>());
    Ok((deg.clone(), Character::new(field, group, chi)?))
}

pub fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Gen { what } => match what {
            GenCmd::Preset { name, out } => {
                let t = build_preset(&name)?;
                let file = algebra_to_file(&t.hopf, Some(t.word_names()));
                write_json(&out, &file)?;
                println!(
                    "wrote {} (dim {}, sha256 {})",
                    out.display(),
                    t.hopf.dim(),
                    digest(&file)
                );
                Ok(0)
            }
            GenCmd::Qta {
                prime,
                group,
                gens,
                trunc,
                out,
            } => {
                if gens.is_empty() {
                    return Err(Error::InvalidInput("at least one --gen required".into()));
                }
                let field = Field::new(prime)?;
                let orders: Vec<u32> = group
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse()
                            .map_err(|_| Error::InvalidInput(format!("bad order `{s}`")))
                    })
                    .collect::<Result<_>>()?;
                let group = Group::new(orders)?;
                let generators = gens
                    .iter()
                    .map(|g| parse_qta_gen(&field, &group, g))
                    .collect::<Result<Vec<_>>>()?;
                let t = quantum_tensor_algebra(QtaParams {
                    field,
                    group,
                    generators,
                    trunc,
                })?;
                let file = algebra_to_file(&t.hopf, Some(t.word_names()));
                write_json(&out, &file)?;
                println!(
                    "wrote {} (dim {}, sha256 {})",
                    out.display(),
                    t.hopf.dim(),
                    digest(&file)
                );
                Ok(0)
            }
        },
        Cmd::Check { what } => match what {
            CheckCmd::Hopf { file, report } => {
                let inputs = vec![input_digest("H", &file)?];
                let h = file_to_hopf(&read_algebra(&file)?)?;
                let mut asts = carrier_assertions(&h);
                asts.extend(hopf_axiom_assertions(&h));
                emit(asts, inputs, report.as_deref())
            }
            CheckCmd::Yd { file, report } => {
                let inputs = vec![input_digest("M", &file)?];
                let h = file_to_hopf(&read_algebra(&file)?)?;
                let mut asts = carrier_assertions(&h);
                asts.extend(check_yd_condition(&h.carrier)?);
                emit(asts, inputs, report.as_deref())
            }
            CheckCmd::Pairing {
                h,
                hd,
                pair,
                report,
            } => {
                let h_file = read_algebra(&h)?;
                let hd_file = read_algebra(&hd)?;
                let pair_file = read_pairing(&pair)?;
                if pair_file.h_sha256 != digest(&h_file) || pair_file.hd_sha256 != digest(&hd_file)
                {
                    return Err(Error::InvalidInput(
                        "pairing sidecar digests do not match the algebra files".into(),
                    ));
                }
                let h_alg = file_to_hopf(&h_file)?;
                let hd_alg = file_to_hopf(&hd_file)?;
                let pairing = file_to_pairing(&pair_file, &h_alg, &hd_alg)?;
                let inputs = vec![
                    InputDigest {
                        label: "H".into(),
                        sha256: digest(&h_file),
                    },
                    InputDigest {
                        label: "Hd".into(),
                        sha256: digest(&hd_file),
                    },
                ];
                let asts = quasi_dual_check(&h_alg, &hd_alg, &pairing)?;
                emit(asts, inputs, report.as_deref())
            }
            CheckCmd::Hom { v, w, report } => {
                let inputs = vec![input_digest("V", &v)?, input_digest("W", &w)?];
                let v_alg = file_to_hopf(&read_algebra(&v)?)?;
                let w_alg = file_to_hopf(&read_algebra(&w)?)?;
                if v_alg.ctx() != w_alg.ctx() {
                    return Err(Error::MismatchedContext(
                        "hom check needs one group/field".into(),
                    ));
                }
                let asts = check_hom_yd(&v_alg.carrier, &w_alg.carrier)?;
                emit(asts, inputs, report.as_deref())
            }
            CheckCmd::Exchange { h, report } => {
                let inputs = vec![input_digest("H", &h)?];
                let h_alg = file_to_hopf(&read_algebra(&h)?)?;
                let (hd, pairing) = quasi_dual_build(&h_alg)?;
                let data = duality_data(&h_alg, &hd, &pairing)?;
                let asts = exchange_law_assertions(&data)?;
                emit(asts, inputs, report.as_deref())
            }
            CheckCmd::Cocomm { file, report } => {
                let inputs = vec![input_digest("H", &file)?];
                let h = file_to_hopf(&read_algebra(&file)?)?;
                let w = h.word();
                let c = LinearMorphism::braiding(&w, &w)?;
                let mut ck = Checker::new();
                ck.eq(
                    "cocomm.semantic",
                    "braiding . comult = comult",
                    &c.compose(&h.comult)?,
                    &h.comult,
                );
                emit(ck.into_assertions(), inputs, report.as_deref())
            }
        },
        Cmd::Dual { h, out, pair_out } => {
            let h_file = read_algebra(&h)?;
            let h_alg = file_to_hopf(&h_file)?;
            let (hd, pairing) = quasi_dual_build(&h_alg)?;
            let hd_file = algebra_to_file(&hd, None);
            write_json(&out, &hd_file)?;
            let sidecar = pairing_to_file(&digest(&h_file), &digest(&hd_file), &pairing);
            let pair_path = pair_out.unwrap_or_else(|| {
                let mut s = out.as_os_str().to_owned();
                s.push(".pairing.json");
                PathBuf::from(s)
            });
            write_json(&pair_path, &sidecar)?;
            println!(
                "wrote {} (dim {}) and {}",
                out.display(),
                hd.dim(),
                pair_path.display()
            );
            Ok(0)
        }
        Cmd::Verify { what } => match what {
            VerifyCmd::Duality {
                h,
                hd,
                pair,
                r,
                report,
            } => {
                let h_file = read_algebra(&h)?;
                let h_alg = file_to_hopf(&h_file)?;
                let mut inputs = vec![InputDigest {
                    label: "H".into(),
                    sha256: digest(&h_file),
                }];
                let (hd_alg, pairing) = match (&hd, &pair) {
                    (Some(hd_path), Some(pair_path)) => {
                        let hd_file = read_algebra(hd_path)?;
                        let pair_file = read_pairing(pair_path)?;
                        if pair_file.h_sha256 != digest(&h_file)
                            || pair_file.hd_sha256 != digest(&hd_file)
                        {
                            return Err(Error::InvalidInput(
                                "pairing sidecar digests do not match".into(),
                            ));
                        }
                        let hd_alg = file_to_hopf(&hd_file)?;
                        inputs.push(InputDigest {
                            label: "Hd".into(),
                            sha256: digest(&hd_file),
                        });
                        let pairing = file_to_pairing(&pair_file, &h_alg, &hd_alg)?;
                        (hd_alg, pairing)
                    }
                    (None, None) => quasi_dual_build(&h_alg)?,
                    _ => {
                        return Err(Error::InvalidInput(
                            "--hd and --pair must be given together".into(),
                        ))
                    }
                };
                let data = duality_data(&h_alg, &hd_alg, &pairing)?;
                let r_alg = match &r {
                    Some(r_path) => {
                        let r_file = read_algebra(r_path)?;
                        let r_hopf = file_to_hopf(&r_file)?;
                        inputs.push(InputDigest {
                            label: "R".into(),
                            sha256: digest(&r_file),
                        });
                        ComoduleAlgebra {
                            alg: crate::smash::Algebra::of_hopf(&r_hopf),
                            coaction: r_hopf.comult.clone(),
                        }
                    }
                    None => default_comodule(&data.hd),
                };
                let asts = verify_duality(&data, &r_alg)?;
                emit(asts, inputs, report.as_deref())
            }
        },
        Cmd::Eval { env, expr } => {
            let genv = load_env(&env)?;
            let e = parse_expr(&expr, &genv)?;
            let (dom, cod) = expr_validate(&e, &genv)?;
            let m = expr_evaluate(&e, &genv)?;
            println!("domain:   {} (dim {})", dom.display(), dom.dim());
            println!("codomain: {} (dim {})", cod.display(), cod.dim());
            let mut count = 0;
            for (col, entries) in m.columns().iter().enumerate() {
                for &(row, v) in entries {
                    println!("({row}, {col}) = {v}");
                    count += 1;
                }
            }
            println!("{count} nonzero entries");
            Ok(0)
        }
    }
}
