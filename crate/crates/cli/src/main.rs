//! Command-line surface: load Hopf algebras and objects from files, run the
//! verification, construction and decomposition machinery, and report.
//!
//! Exit codes: 0 = all checks passed (or verdict CONSISTENT-SEMISIMPLE),
//! 1 = a mathematical check failed (or COUNTEREXAMPLE verdict),
//! 2 = input or parse error.

mod expr;
mod reports;

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};

use hopflab::compat::{
    check_kind, hom_coaction, hom_object, qybe_check, Object, ObjectKind,
};
use hopflab::decomp::{
    decompose_object, is_projective, semisimplicity_report, DecompOptions, DecompStatus,
    SampleSpec, SimplicityCertificate,
};
use hopflab::double::drinfeld_double;
use hopflab::error::Error;
use hopflab::format::{self, HopfFile, HopfRef};
use hopflab::hopf::{verify_hopf, Hopf, HopfData, AXIOM_FAMILIES};
use hopflab::linalg::Field;
use hopflab::rep::{coinvariants, verify_comodule, verify_module};

#[derive(Parser)]
#[command(name = "hopflab", about = "Exact laboratory for finite-dimensional Hopf algebras, Yetter-Drinfeld modules and Long dimodules", version)]
struct Cli {
    /// Emit the machine-readable JSON report instead of human text.
    #[arg(long, global = true)]
    machine: bool,
    /// Override the field of loaded Hopf files, e.g. `gf:7` or `q`.
    #[arg(long, global = true)]
    field: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the seven Hopf axiom families on a structure-constant file.
    VerifyHopf { hopf: PathBuf },
    /// Verify module/comodule laws and the kind's compatibility on an object.
    /// Takes `[HOPF] OBJECT`; an explicit Hopf file overrides the object
    /// file's own reference.
    VerifyObject {
        #[arg(long)]
        kind: Option<String>,
        #[arg(num_args = 1..=2, required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Evaluate a construction expression and emit the object file.
    Construct {
        #[arg(long, default_value = "yd")]
        kind: String,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
        expr: String,
    },
    /// Coinvariants of an object or comodule file.
    Coinv {
        #[arg(long)]
        hopf: Option<PathBuf>,
        object: PathBuf,
    },
    /// Internal Hom object (commutative H) or its comodule, emitted as a file.
    Hom {
        #[arg(long, default_value = "yd")]
        kind: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
        a: PathBuf,
        b: PathBuf,
    },
    /// Construct the Drinfeld double D(H) and emit it as a Hopf file.
    Double {
        hopf: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Decompose an object into simple subobjects or report the witness.
    Decompose {
        #[arg(long)]
        hopf: Option<PathBuf>,
        #[arg(long, default_value_t = 0xD1D0)]
        seed: u64,
        object: PathBuf,
    },
    /// Is the object projective (splitting of the canonical free cover)?
    Projective {
        #[arg(long)]
        hopf: Option<PathBuf>,
        object: PathBuf,
    },
    /// Hypotheses, sample decompositions and verdict for one category.
    SemisimpleReport {
        #[arg(long, default_value = "yd")]
        kind: String,
        /// Decompose constructed sample objects up to this dimension.
        #[arg(long, default_value_t = 8)]
        dims: usize,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        hopf: PathBuf,
    },
    /// Braiding battery: invertibility and the quantum Yang-Baxter equation.
    Qybe {
        #[arg(long)]
        hopf: Option<PathBuf>,
        object: PathBuf,
    },
    /// Verify the tensor-Hom adjunction bijection on a triple of objects.
    AdjunctionCheck {
        #[arg(long = "kind", default_value = "yd")]
        kind: String,
        #[arg(long)]
        hopf: Option<PathBuf>,
        m: PathBuf,
        n: PathBuf,
        p: PathBuf,
    },
    /// Write the shipped fixture files into a directory.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Io(_)
        | Error::Json(_)
        | Error::BadScalar(_)
        | Error::NotPrime(_)
        | Error::DimensionMismatch(_)
        | Error::ShapeMismatch(_)
        | Error::NotAGroup(_)
        | Error::BadCharacteristic(_)
        | Error::KindMismatch
        | Error::Unsupported(_) => 2,
        _ => 1,
    }
}

fn fname(p: &Path) -> String {
    p.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| p.display().to_string())
}

fn parse_field_override(s: &str) -> Result<Field, Error> {
    if s == "q" {
        return Ok(Field::rationals());
    }
    if let Some(p) = s.strip_prefix("gf:") {
        let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad field {s:?}")))?;
        return Field::gf(p);
    }
    Err(Error::Parse(format!("bad field override {s:?} (use gf:<p> or q)")))
}

fn load_hopf_with(path: &Path, field: &Option<String>) -> Result<HopfData, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut file: HopfFile = serde_json::from_str(&text)?;
    if let Some(f) = field {
        let f = parse_field_override(f)?;
        file.field = format::FieldDto::from_field(f);
    }
    file.to_data()
}

fn load_verified_hopf(path: &Path, field: &Option<String>) -> Result<Hopf, Error> {
    Ok(Arc::new(load_hopf_with(path, field)?.into_hopf()?))
}

fn load_full_object(
    object: &Path,
    hopf: &Option<PathBuf>,
    field: &Option<String>,
    kind_flag: Option<&str>,
) -> Result<Object, Error> {
    let over = hopf
        .as_ref()
        .map(|p| load_verified_hopf(p, field))
        .transpose()?;
    let (file, m, c) = format::load_object_parts(object, over)?;
    let kind = match kind_flag {
        Some(k) => ObjectKind::parse(k)?,
        None => ObjectKind::parse(&file.kind)?,
    };
    let m = m.ok_or_else(|| Error::Parse("object file has no action".into()))?;
    let c = c.ok_or_else(|| Error::Parse("object file has no coaction".into()))?;
    Object::new(kind, m, c)
}

fn emit_object(
    obj: &Object,
    hopf_path: Option<String>,
    out: &Option<PathBuf>,
) -> Result<(), Error> {
    let href = match hopf_path {
        Some(p) => HopfRef::Path(p),
        None => HopfRef::Inline(HopfFile::from_data(obj.hopf().data())),
    };
    let file = format::object_to_file(obj, href);
    match out {
        Some(path) => format::save_object_file(path, &file)?,
        None => println!("{}", serde_json::to_string_pretty(&file)?),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::VerifyHopf { hopf } => {
            let data = load_hopf_with(hopf, &cli.field)?;
            let rep = verify_hopf(&data)?;
            let out = reports::VerifyHopfReport {
                verb: "verify-hopf",
                input: fname(hopf),
                passed: rep.passed,
                axioms: AXIOM_FAMILIES.to_vec(),
                failures: rep.failures.clone(),
                commutative: rep.commutative,
                cocommutative: rep.cocommutative,
                finite_dimensional: true,
                noetherian: reports::NOETHERIAN_NOTE,
            };
            if cli.machine {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!("hopf algebra {} (dim {})", out.input, data.dim());
                for ax in AXIOM_FAMILIES {
                    let ok = !rep.failures.iter().any(|f| f == ax);
                    println!("  axiom family {ax}: {}", if ok { "passed" } else { "FAILED" });
                }
                for d in &rep.details {
                    println!("  detail: {d}");
                }
                println!("  commutative: {}", rep.commutative);
                println!("  cocommutative: {}", rep.cocommutative);
                println!("  finite-dimensional: true ({})", reports::NOETHERIAN_NOTE);
                println!("verdict: {}", if rep.passed { "passed" } else { "FAILED" });
            }
            Ok(if rep.passed { 0 } else { 1 })
        }
        Command::VerifyObject { kind, inputs } => {
            let (hopf, object) = match inputs.len() {
                1 => (None, &inputs[0]),
                _ => (Some(&inputs[0]), &inputs[1]),
            };
            let over = hopf
                .map(|p| load_verified_hopf(p, &cli.field))
                .transpose()?;
            let (file, m, c) = format::load_object_parts(object, over)?;
            let kind_name = kind.clone().unwrap_or_else(|| file.kind.clone());
            let module_passed = m.as_ref().map(|m| verify_module(m)).transpose()?.map(|r| r.passed);
            let comodule_passed = c
                .as_ref()
                .map(|c| verify_comodule(c))
                .transpose()?
                .map(|r| r.passed);
            let (compat_passed, failing_pairs) = match (kind_name.as_str(), &m, &c) {
                ("yd" | "long", Some(m), Some(c))
                    if module_passed == Some(true) && comodule_passed == Some(true) =>
                {
                    let rep = check_kind(ObjectKind::parse(&kind_name)?, m, c);
                    (Some(rep.passed), rep.failing_pairs)
                }
                ("yd" | "long", _, _) => (Some(false), Vec::new()),
                _ => (None, Vec::new()),
            };
            let passed = module_passed.unwrap_or(true)
                && comodule_passed.unwrap_or(true)
                && compat_passed.unwrap_or(true);
            let out = reports::VerifyObjectReport {
                verb: "verify-object",
                input: fname(object),
                kind: kind_name.clone(),
                module_passed,
                comodule_passed,
                compat_passed,
                failing_pairs: failing_pairs.clone(),
                passed,
            };
            if cli.machine {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!("object {} (dim {}, kind {})", out.input, file.dim, kind_name);
                if let Some(ok) = module_passed {
                    println!("  module axioms: {}", if ok { "passed" } else { "FAILED" });
                }
                if let Some(ok) = comodule_passed {
                    println!("  comodule axioms: {}", if ok { "passed" } else { "FAILED" });
                }
                if let Some(ok) = compat_passed {
                    println!(
                        "  {} compatibility: {}",
                        kind_name,
                        if ok { "passed" } else { "FAILED" }
                    );
                    for (t, j) in &failing_pairs {
                        println!("    fails at basis pair (h = e{t}, v = v{j})");
                    }
                }
                println!("verdict: {}", if passed { "passed" } else { "FAILED" });
            }
            Ok(if passed { 0 } else { 1 })
        }
        Command::Construct { kind, out, expr } => {
            let kind = ObjectKind::parse(kind)?;
            let cwd = std::env::current_dir()?;
            let outcome = expr::parse_and_eval(expr, kind, &cwd)?;
            emit_object(&outcome.object, outcome.hopf_path, out)?;
            Ok(0)
        }
        Command::Coinv { hopf, object } => {
            let over = hopf
                .as_ref()
                .map(|p| load_verified_hopf(p, &cli.field))
                .transpose()?;
            let (_, _, c) = format::load_object_parts(object, over)?;
            let c = c.ok_or_else(|| Error::Parse("input has no coaction".into()))?;
            let rep = verify_comodule(&c)?;
            if !rep.passed {
                return Err(Error::StructureAxioms(rep.failures));
            }
            let co = coinvariants(&c);
            let f = c.field();
            let out = reports::CoinvReport {
                verb: "coinv",
                input: fname(object),
                dim: co.dim(),
                basis: co
                    .basis()
                    .iter()
                    .map(|b| b.iter().map(|x| f.render(x)).collect())
                    .collect(),
            };
            if cli.machine {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!("coinvariants of {}: dim {}", out.input, out.dim);
                for b in &out.basis {
                    println!("  [{}]", b.join(", "));
                }
            }
            Ok(0)
        }
        Command::Hom { kind, out, a, b } => {
            let kind = ObjectKind::parse(kind)?;
            let oa = load_full_object(a, &None, &cli.field, Some(kind.name()))?;
            let ob = load_full_object(b, &None, &cli.field, Some(kind.name()))?;
            if oa.hopf().is_commutative() {
                let (obj, _) = hom_object(&oa, &ob)?;
                emit_object(&obj, None, out)?;
            } else {
                // noncommutative: the hom space is only a comodule (Long)
                let hc = hom_coaction(&oa, &ob)?;
                let file = format::comodule_to_file(
                    &hc.comodule,
                    HopfRef::Inline(HopfFile::from_data(oa.hopf().data())),
                );
                match out {
                    Some(path) => format::save_object_file(path, &file)?,
                    None => println!("{}", serde_json::to_string_pretty(&file)?),
                }
            }
            Ok(0)
        }
        Command::Double { hopf, out } => {
            let h = load_verified_hopf(hopf, &cli.field)?;
            let d = drinfeld_double(&h)?;
            let file = HopfFile::from_data(d.hopf.data());
            match out {
                Some(path) => std::fs::write(path, serde_json::to_string_pretty(&file)?)?,
                None => println!("{}", serde_json::to_string_pretty(&file)?),
            }
            Ok(0)
        }
        Command::Decompose { hopf, seed, object } => {
            let obj = load_full_object(object, hopf, &cli.field, None)?;
            let opts = DecompOptions { seed: *seed, ..DecompOptions::default() };
            let rep = decompose_object(&obj, &opts)?;
            let (status, witness_dim) = match &rep.status {
                DecompStatus::Semisimple => ("semisimple".to_string(), None),
                DecompStatus::NonSplit { witness, .. } => {
                    ("non-split-witness".to_string(), Some(witness.dim()))
                }
            };
            let certificates = rep
                .summands
                .iter()
                .map(|s| match &s.certificate {
                    SimplicityCertificate::Exhaustive { lines_checked } => {
                        format!("exhaustive({lines_checked} lines)")
                    }
                    SimplicityCertificate::Heuristic { tests } => format!("heuristic({tests} tests)"),
                })
                .collect();
            let out = reports::DecomposeReport {
                verb: "decompose",
                input: fname(object),
                kind: obj.kind().name().into(),
                dim: obj.dim(),
                status: status.clone(),
                summand_dims: rep.summand_dims(),
                certificates,
                witness_dim,
            };
            let ok = rep.is_semisimple();
            if cli.machine {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!(
                    "decompose {} (dim {}, kind {}): {}",
                    out.input, out.dim, out.kind, status
                );
                for (s, c) in rep.summands.iter().zip(&out.certificates) {
                    println!("  simple summand of dim {} [{}]", s.subspace.dim(), c);
                }
                if let Some(wd) = witness_dim {
                    println!("  non-split subobject of dim {wd}");
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Projective { hopf, object } => {
            let obj = load_full_object(object, hopf, &cli.field, None)?;
            let projective = is_projective(&obj)?;
            let out = reports::ProjectiveReport {
                verb: "projective",
                input: fname(object),
                kind: obj.kind().name().into(),
                projective,
            };
            if cli.machine {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!(
                    "projective({}) = {}",
                    out.input,
                    if projective { "true" } else { "false" }
                );
            }
            Ok(if projective { 0 } else { 1 })
        }
        Command::SemisimpleReport { kind, dims, seed, hopf } => {
            let h = load_verified_hopf(hopf, &cli.field)?;
            let kind = ObjectKind::parse(kind)?;
            let spec = SampleSpec { max_dim: *dims, seed: *seed };
            let rep = semisimplicity_report(&h, kind, &spec)?;
            let out = reports::SemisimpleReport {
                verb: "semisimple-report",
                input: fname(hopf),
                kind: kind.name().into(),
                hypotheses: reports::HypothesesDto {
                    commutative_required: rep.hypotheses.commutative_required,
                    commutative: rep.hypotheses.commutative,
                    finite_dimensional: rep.hypotheses.finite_dimensional,
                    noetherian: reports::NOETHERIAN_NOTE,
                    semisimple: rep.hypotheses.semisimple,
                    cosemisimple: rep.hypotheses.cosemisimple,
                    all_hold: rep.hypotheses.all_hold,
                },
                onedim_classes: rep.onedim_classes,
                samples: rep
                    .samples
                    .iter()
                    .map(|s| reports::SampleDto {
                        name: s.name.clone(),
                        dim: s.dim,
                        semisimple: s.semisimple,
                        summand_dims: s.summand_dims.clone(),
                        witness_dim: s.witness_dim,
                    })
                    .collect(),
                simple_object_count: rep.simple_object_count,
                center_simple_count: rep.center_simple_count,
                verdict: rep.verdict.name().into(),
            };
            if cli.machine {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!("semisimplicity report for {} ({} kind)", out.input, out.kind);
                println!(
                    "  hypotheses: commutative {}{}, semisimple {}, cosemisimple {}, finite-dimensional true",
                    rep.hypotheses.commutative,
                    if rep.hypotheses.commutative_required { " (required)" } else { " (not required)" },
                    rep.hypotheses.semisimple,
                    rep.hypotheses.cosemisimple
                );
                println!("  one-dimensional classes: {}", rep.onedim_classes);
                for s in &rep.samples {
                    match s.witness_dim {
                        None => println!(
                            "  sample {} (dim {}): semisimple, summands {:?}",
                            s.name, s.dim, s.summand_dims
                        ),
                        Some(wd) => println!(
                            "  sample {} (dim {}): NON-SPLIT witness of dim {wd}",
                            s.name, s.dim
                        ),
                    }
                }
                if let Some(c) = rep.simple_object_count {
                    println!("  simple objects (regular decomposition): {c}");
                }
                if let Some(c) = rep.center_simple_count {
                    println!("  simple objects (central idempotents): {c}");
                }
                println!("verdict: {}", out.verdict);
            }
            Ok(match rep.verdict {
                hopflab::decomp::Verdict::ConsistentSemisimple => 0,
                _ => 1,
            })
        }
        Command::Qybe { hopf, object } => {
            let obj = load_full_object(object, hopf, &cli.field, Some("yd"))?;
            let braid = hopflab::compat::braiding(&obj, &obj)?;
            let qybe = qybe_check(&obj)?;
            let out = reports::QybeReport {
                verb: "qybe",
                input: fname(object),
                invertible: braid.matrix.mul(&braid.inverse).is_identity(),
                qybe,
            };
            if cli.machine {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!(
                    "braiding on {}: invertible {}, QYBE {}",
                    out.input, out.invertible, out.qybe
                );
            }
            Ok(if qybe && out.invertible { 0 } else { 1 })
        }
        Command::AdjunctionCheck { kind, hopf, m, n, p } => {
            let kind = ObjectKind::parse(kind)?;
            let om = load_full_object(m, hopf, &cli.field, Some(kind.name()))?;
            let on = load_full_object(n, hopf, &cli.field, Some(kind.name()))?;
            let op = load_full_object(p, hopf, &cli.field, Some(kind.name()))?;
            let rep = hopflab::compat::adjunction_iso(&om, &on, &op)?;
            let out = reports::AdjunctionReport {
                verb: "adjunction-check",
                inputs: vec![fname(m), fname(n), fname(p)],
                kind: kind.name().into(),
                lhs_dim: rep.lhs_dim,
                rhs_dim: rep.rhs_dim,
                bijective: rep.bijective,
                projectivity_route: match rep.route {
                    hopflab::compat::ProjectivityRoute::Semisimple => "semisimple".into(),
                    hopflab::compat::ProjectivityRoute::SplitCover => "split-cover".into(),
                },
            };
            if cli.machine {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!(
                    "adjunction on ({}, {}, {}): lhs dim {}, rhs dim {}, bijective {}, route {}",
                    out.inputs[0],
                    out.inputs[1],
                    out.inputs[2],
                    out.lhs_dim,
                    out.rhs_dim,
                    out.bijective,
                    out.projectivity_route
                );
            }
            Ok(if rep.bijective { 0 } else { 1 })
        }
        Command::Fixtures { out } => {
            std::fs::create_dir_all(out)?;
            for (name, h) in hopflab::fixtures::shipped_fixtures() {
                format::save_hopf(&out.join(format!("{name}.hopf")), h.data())?;
            }
            format::save_hopf(
                &out.join("gf3_c2.hopf"),
                hopflab::fixtures::gf3_c2().data(),
            )?;
            let witness = hopflab::fixtures::nonsplit_witness_gf2(ObjectKind::Yd);
            let file = format::object_to_file(&witness, HopfRef::Path("gf2_c2.hopf".into()));
            format::save_object_file(&out.join("nonsplit_gf2_c2.obj"), &file)?;
            println!("wrote fixtures into {}", out.display());
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code_for(&e));
        }
    }
}
