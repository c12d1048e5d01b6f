//! `biquad`: command-line front end to the algebra library.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use biquad_core::algebra::{parse_element, GradedElement, Mode};
use biquad_core::automorphisms::verify_is_automorphism;
use biquad_core::grid;
use biquad_core::linalg::{element_vector, same_span};
use biquad_core::oracle::{oracle_centralizer, MonomialFrame};
use biquad_core::presentation::{classify_case, AlgebraParams, CaseTag};
use biquad_core::spectrum::{dimensions, is_simple_localized, stratify, CentralIdeal, StratifyInput, Stratum};
use biquad_core::structure::{
    centralizer_generators, centre_generators, decompose_over_centre, free_basis_index, is_central, is_normal, is_weight_vector,
    ore_monoid_generators, weight_decompose,
};
use biquad_core::verify;
use biquad_core::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "biquad", version, about = "Exact computation in the bi-quadratic algebras A(q, alpha, mu)")]
struct Cli {
    /// TOML document with the field and algebra parameters.
    #[arg(long, short, global = true, conflicts_with = "case")]
    config: Option<PathBuf>,
    /// Use the built-in grid instance of a case (C1 .. C11, C7a, C7b).
    #[arg(long, global = true)]
    case: Option<String>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// The algebra A.
    A,
    /// The localization at x1 x2.
    Loc,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::A => Mode::Polynomial,
            ModeArg::Loc => Mode::Laurent,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Case tag and case data.
    Classify,
    /// Product of two elements in normal form.
    Mul {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "a")]
        mode: ModeArg,
    },
    /// Generators of the centre.
    Center {
        #[arg(long, value_enum, default_value = "a")]
        mode: ModeArg,
        /// Check every generator against the commutation relations.
        #[arg(long)]
        verify: bool,
    },
    /// Generators of the centralizer of x1, x2; with --degree, compared with the brute-force kernel.
    Centralizer {
        #[arg(long, value_enum, default_value = "a")]
        mode: ModeArg,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Coordinates in the free basis over the centre.
    Decompose {
        element: String,
        #[arg(long, value_enum, default_value = "a")]
        mode: ModeArg,
    },
    /// Split an element into weight components.
    Weights {
        element: String,
        #[arg(long, value_enum, default_value = "a")]
        mode: ModeArg,
    },
    /// Whether an element is normal, with its weight.
    Normal {
        element: String,
        #[arg(long, value_enum, default_value = "a")]
        mode: ModeArg,
    },
    /// Generators of the central monoid of monomials.
    Ore,
    /// Check that images of x1, x2, x3 define an automorphism.
    AutomorphismVerify {
        y1: String,
        y2: String,
        y3: String,
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
    /// Whether the localization at x1 x2 is simple.
    Simple,
    /// Stratum of `x1`, `x2`, or the ideal generated by central elements.
    Strata {
        #[arg(required = true)]
        targets: Vec<String>,
        /// Ring of the central ideal; defaults to the one labelling the localized stratum.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
    /// Gelfand-Kirillov, Krull, classical Krull and global dimension of an n-fold tensor product.
    Dims {
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Run every verification suite on the built-in grid.
    VerifyAll {
        /// Cap on the oracle degree.
        #[arg(long)]
        degree: Option<usize>,
    },
}

/// Failure modes, mapped to exit codes.
enum Failure {
    /// A check ran and did not pass; carries the report.
    Check(String, Value),
    /// Bad input or a library error.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(String, Value), Failure>;

fn load_params(cli: &Cli) -> Result<AlgebraParams, Failure> {
    if let Some(name) = &cli.case {
        let tag = CaseTag::ALL
            .iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(name))
            .ok_or_else(|| Failure::Usage(format!("unknown case `{name}`")))?;
        return Ok(grid::instance(*tag));
    }
    let path = cli.config.as_ref().ok_or_else(|| Failure::Usage("this command needs --config or --case".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(AlgebraParams::from_toml_str(&text)?)
}

fn el(text: &str, p: &AlgebraParams, mode: Mode) -> Result<GradedElement, Failure> {
    Ok(parse_element(text, p, mode)?)
}

fn strings(es: &[GradedElement]) -> Vec<String> {
    es.iter().map(|e| e.to_string()).collect()
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Dims { n } => {
            let d = dimensions(*n)?;
            let text = format!("GK {}  Krull {}  classical Krull {}  global {}", d.gk, d.krull, d.classical_krull, d.global);
            return Ok((text, json!(d)));
        }
        Command::VerifyAll { degree } => return verify_all(*degree),
        _ => {}
    }
    let p = load_params(cli)?;
    match &cli.command {
        Command::Classify => {
            let c = classify_case(&p)?;
            let d = &c.data;
            let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
            let text = format!(
                "tag {}\np {}\nn {}\nmu1 {}\nmu2 {}\nxi {:?}",
                c.tag,
                d.p,
                d.n.map_or("infinite".to_string(), |v| v.to_string()),
                opt(d.mu1),
                opt(d.mu2),
                d.xi
            );
            Ok((text, json!({"tag": c.tag, "p": d.p, "n": d.n, "mu1": d.mu1, "mu2": d.mu2, "xi": d.xi})))
        }
        Command::Mul { a, b, mode } => {
            let m = (*mode).into();
            let r = el(a, &p, m)?.try_mul(&el(b, &p, m)?)?;
            Ok((r.to_string(), json!({"product": r.to_string()})))
        }
        Command::Center { mode, verify } => {
            let desc = centre_generators(&p, (*mode).into())?;
            let gens = desc.generators();
            let mut text = desc.to_string();
            let mut record = json!({"tag": desc.tag, "generators": strings(&gens)});
            if *verify {
                let flags: Vec<bool> = gens.iter().map(is_central).collect();
                for (g, ok) in gens.iter().zip(&flags) {
                    text.push_str(&format!("\n  {g}: {}", if *ok { "central" } else { "NOT central" }));
                }
                record["central"] = json!(flags);
                if flags.iter().any(|ok| !ok) {
                    return Err(Failure::Check(text, record));
                }
            }
            Ok((text, record))
        }
        Command::Centralizer { mode, degree } => {
            let m: Mode = (*mode).into();
            let desc = centralizer_generators(&p, m)?;
            let mut text = desc.to_string();
            let mut record = json!({"generators": strings(&desc.generators())});
            if let Some(d) = degree {
                let frame = MonomialFrame::new(&p, m, *d)?;
                let targets = [GradedElement::x1(&p, m), GradedElement::x2(&p, m)];
                let got = oracle_centralizer(&frame, &targets)?;
                let want = desc.span_in_frame(*d);
                let v = |xs: &[GradedElement]| xs.iter().map(element_vector).collect::<Vec<_>>();
                let agree = same_span(&v(&got), &v(&want));
                text.push_str(&format!("\noracle at degree {d}: dimension {}, {}", got.len(), if agree { "agrees" } else { "DISAGREES" }));
                record["oracle_dimension"] = json!(got.len());
                record["agrees"] = json!(agree);
                if !agree {
                    return Err(Failure::Check(text, record));
                }
            }
            Ok((text, record))
        }
        Command::Decompose { element, mode } => {
            let a = el(element, &p, (*mode).into())?;
            let dec = decompose_over_centre(&a)?;
            let mut text = free_basis_index(&p, (*mode).into())?.to_string();
            let mut coords = Vec::new();
            for ((i, beta), z) in &dec.coords {
                text.push_str(&format!("\n  x3^{i} x^{beta:?}: {z}"));
                coords.push(json!({"i": i, "beta": beta, "coefficient": z.to_string()}));
            }
            Ok((text, json!({"coordinates": coords})))
        }
        Command::Weights { element, mode } => {
            let a = el(element, &p, (*mode).into())?;
            let mut text = Vec::new();
            let mut parts = Vec::new();
            for (w, e) in weight_decompose(&a) {
                text.push(format!("{w}: {e}"));
                parts.push(json!({"weight": [w.u1.to_string(), w.u2.to_string(), w.c.to_string()], "component": e.to_string()}));
            }
            Ok((text.join("\n"), json!({"components": parts})))
        }
        Command::Normal { element, mode } => {
            let a = el(element, &p, (*mode).into())?;
            let normal = is_normal(&a);
            let weight = if a.is_zero() { None } else { is_weight_vector(&a)? };
            let text = match &weight {
                Some(w) => format!("normal, weight {w}"),
                None if normal => "normal".to_string(),
                None => "not normal".to_string(),
            };
            Ok((text, json!({"normal": normal, "weight": weight.map(|w| w.to_string())})))
        }
        Command::Ore => {
            let gens = ore_monoid_generators(&p)?;
            let s = strings(&gens);
            let text = if s.is_empty() { "T_A = {1}".to_string() } else { format!("T_A generated by {}", s.join(", ")) };
            Ok((text, json!({"generators": s})))
        }
        Command::AutomorphismVerify { y1, y2, y3, degree } => {
            let m = Mode::Polynomial;
            let images = [el(y1, &p, m)?, el(y2, &p, m)?, el(y3, &p, m)?];
            let ok = verify_is_automorphism(&images, *degree)?;
            Ok((ok.to_string(), json!({"automorphism": ok})))
        }
        Command::Simple => {
            let s = is_simple_localized(&p)?;
            let text = if s { "A_x1x2 is simple" } else { "A_x1x2 is not simple" };
            Ok((text.to_string(), json!({"simple": s})))
        }
        Command::Strata { targets, mode, degree } => strata(&p, targets, *mode, *degree),
        Command::Dims { .. } | Command::VerifyAll { .. } => unreachable!("handled before loading parameters"),
    }
}

fn strata(p: &AlgebraParams, targets: &[String], mode: Option<ModeArg>, degree: usize) -> Outcome {
    let input = match targets {
        [t] if t == "x1" => StratifyInput::X1,
        [t] if t == "x2" => StratifyInput::X2,
        _ => {
            let tag = classify_case(p)?.tag;
            let m = mode.map(Mode::from).unwrap_or(match tag {
                CaseTag::C7a | CaseTag::C11 => Mode::Laurent,
                _ => Mode::Polynomial,
            });
            let gens = targets.iter().map(|t| el(t, p, m)).collect::<Result<Vec<_>, _>>()?;
            StratifyInput::Central(CentralIdeal::new(p, m, gens, true)?)
        }
    };
    let d = stratify(p, input, degree)?;
    let (kind, branch) = match &d.stratum {
        Stratum::ContainsX1 => ("contains_x1", None),
        Stratum::ContainsX2 => ("contains_x2", None),
        Stratum::Localized { branch, .. } => ("localized", Some(*branch)),
    };
    Ok((d.to_string(), json!({"stratum": kind, "branch": branch})))
}

fn verify_all(cap: Option<usize>) -> Outcome {
    let reports = verify::all(cap);
    let text = reports.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n");
    let record = json!({"reports": reports, "passed": reports.iter().all(|r| r.passed)});
    if reports.iter().all(|r| r.passed) {
        Ok((text, record))
    } else {
        Err(Failure::Check(text, record))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emit = |text: &str, record: &Value| {
        if cli.json {
            println!("{record}");
        } else {
            println!("{text}");
        }
    };
    match run(&cli) {
        Ok((text, record)) => {
            emit(&text, &record);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(text, record)) => {
            emit(&text, &record);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
