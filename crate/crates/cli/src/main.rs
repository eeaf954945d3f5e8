use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gk3::checks::{self, CheckDescriptor, ConfigFile, Format, RunConfig, Status, TParam, ZetaParam};
use gk3::cohomology::CohClass;
use gk3::expr::{self, Value};
use gk3::families;
use gk3::gcs::{self, j_zeta, natural_pairing};
use gk3::harmonic::{phi_homega, phi_ht, phi_t, HtClass};
use gk3::mirror;
use gk3::scalar::{rat, GaussRational, Scalar};
use gk3::spinor;

#[derive(Parser)]
#[command(name = "gk3", version, about = "Exact checks for generalized K3 structures and their mirrors")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// TOML file with run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for the randomized property suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks (default: all).
    Verify {
        name: Option<String>,
        /// Override the t grid; repeatable. `symbolic` is allowed.
        #[arg(long = "t", allow_hyphen_values = true)]
        t: Vec<String>,
        /// Override the zeta grid; repeatable. `symbolic` is allowed.
        #[arg(long = "zeta", allow_hyphen_values = true)]
        zeta: Vec<String>,
        /// Cases per property suite.
        #[arg(long)]
        cases: Option<usize>,
        /// List the check names instead of reporting verdicts.
        #[arg(long)]
        list: bool,
    },
    /// Apply a cohomological transform to a class expression.
    Transform {
        #[arg(long, value_enum)]
        map: MapArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Parse and evaluate an expression, optionally substituting t and zeta.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long = "t", allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long = "zeta", allow_hyphen_values = true)]
        zeta: Option<String>,
    },
    /// Pointwise generalized complex structure checks.
    Gcs {
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
        #[arg(long = "t", allow_hyphen_values = true)]
        t: String,
        #[arg(long, value_enum)]
        check: GcsCheck,
    },
    /// Pure spinor checks.
    Spinor {
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
        #[arg(long = "t", allow_hyphen_values = true)]
        t: String,
        #[arg(long, value_enum)]
        check: SpinorCheck,
    },
    /// Direction classes of the two families.
    Families {
        #[arg(long = "t", allow_hyphen_values = true)]
        t: String,
        /// Include every lattice identity with its verdict.
        #[arg(long)]
        report: bool,
    },
    /// Mirror of the twistor period.
    Mirror {
        #[arg(long = "t", allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    #[value(name = "phiOmega")]
    PhiOmega,
    #[value(name = "phiHT")]
    PhiHt,
    #[value(name = "phiT")]
    PhiT,
}

#[derive(Clone, Copy, ValueEnum)]
enum GcsCheck {
    Square,
    Orthogonal,
    Graph,
    SpinorMatch,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpinorCheck {
    Purity,
    AnnihilatorMatch,
    ExpIdentity,
}

/// Usage or configuration problem; exits with status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg = ConfigFile::load(path)?.apply(cfg)?;
    }
    if let Some(f) = cli.format {
        cfg.format = match f {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        };
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    let format = cfg.format;
    match cli.command {
        Command::Verify { name, t, zeta, cases, list } => {
            if !t.is_empty() {
                cfg.t = t.iter().map(|s| TParam::parse(s)).collect::<Result<_, _>>()?;
            }
            if !zeta.is_empty() {
                cfg.zeta = zeta.iter().map(|s| ZetaParam::parse(s)).collect::<Result<_, _>>()?;
            }
            if let Some(n) = cases {
                cfg.property_cases = n;
            }
            if let Some(n) = name {
                cfg.checks = vec![n];
            }
            let results = checks::run_checks(&cfg)?;
            if list {
                for d in &results {
                    println!("{}", d.name);
                }
                return Ok(true);
            }
            Ok(report(&results, format))
        }
        Command::Transform { map, expr } => transform(map, &expr, format),
        Command::Eval { expr, t, zeta } => eval(&expr, t.as_deref(), zeta.as_deref(), format),
        Command::Gcs { zeta, t, check } => {
            let (z, t) = (gauss(&zeta)?, positive_t(&t)?);
            Ok(report(&[gcs_check(check, &z, &t)?], format))
        }
        Command::Spinor { zeta, t, check } => {
            let (z, t) = (gauss(&zeta)?, positive_t(&t)?);
            Ok(report(&[spinor_check(check, &z, &t)?], format))
        }
        Command::Families { t, report: full } => families_cmd(&t, full, format),
        Command::Mirror { t, zeta } => mirror_cmd(&t, &zeta, format),
    }
}

fn gauss(src: &str) -> Result<GaussRational, UsageError> {
    expr::parse_gauss(src).map_err(|e| UsageError(format!("--zeta {src}: {e}")))
}

fn positive_t(src: &str) -> Result<num_rational::BigRational, UsageError> {
    let q = expr::parse_rational(src).map_err(|e| UsageError(format!("--t {src}: {e}")))?;
    if q <= rat(0, 1) {
        return Err(UsageError(format!("--t {src}: t must be positive")));
    }
    Ok(q)
}

fn t_scalar(src: &str) -> Result<(Scalar, String), UsageError> {
    if src.trim() == "symbolic" {
        return Ok((Scalar::t(), "symbolic".to_owned()));
    }
    let q = positive_t(src)?;
    Ok((Scalar::rational(q.clone()), TParam::Value(q).to_string()))
}

fn zeta_scalar(src: &str) -> Result<(Scalar, String), UsageError> {
    if src.trim() == "symbolic" {
        return Ok((Scalar::zeta(), "symbolic".to_owned()));
    }
    let z = gauss(src)?;
    if z.is_zero() {
        return Err(UsageError("--zeta must be nonzero".to_owned()));
    }
    Ok((Scalar::constant(z.clone()), ZetaParam::Value(z).to_string()))
}

fn descriptor(name: String, anchor: &'static str, params: String, pass: bool, witness: String) -> CheckDescriptor {
    CheckDescriptor {
        name,
        anchor,
        params,
        verdict: if pass { Status::Pass } else { Status::Fail },
        witness: if pass { "0".to_owned() } else { witness },
    }
}

/// Prints the verdicts and returns whether all passed.
fn report(results: &[CheckDescriptor], format: Format) -> bool {
    match format {
        Format::Structured => {
            for d in results {
                println!("{}", serde_json::to_string(d).expect("descriptor serializes"));
            }
        }
        Format::Text => {
            let name_w = results.iter().map(|d| d.name.len()).max().unwrap_or(0).max(4);
            println!("{:<name_w$}  {:<7}  WITNESS", "NAME", "VERDICT");
            for d in results {
                println!("{:<name_w$}  {:<7}  {}", d.name, d.verdict.to_string().to_uppercase(), d.witness);
            }
            let failed = results.iter().filter(|d| !d.passed()).count();
            println!("{} checks, {} passed, {} failed", results.len(), results.len() - failed, failed);
        }
    }
    results.iter().all(CheckDescriptor::passed)
}

fn print_value(fields: &[(&str, String)], format: Format) {
    match format {
        Format::Structured => {
            let obj: serde_json::Map<String, serde_json::Value> =
                fields.iter().map(|(k, v)| ((*k).to_owned(), serde_json::Value::String(v.clone()))).collect();
            println!("{}", serde_json::Value::Object(obj));
        }
        Format::Text => {
            for (k, v) in fields {
                println!("{k}: {v}");
            }
        }
    }
}

fn transform(map: MapArg, src: &str, format: Format) -> Outcome {
    let (name, out) = match (map, expr::parse_class_expr(src)?) {
        (MapArg::PhiOmega, Value::Coh(c)) => ("phiOmega", phi_homega(&c).to_string()),
        (MapArg::PhiHt, Value::Ht(h)) => ("phiHT", phi_ht(&h)?.to_string()),
        (MapArg::PhiT, Value::Ht(h)) => ("phiT", phi_t(&h)?.to_string()),
        (MapArg::PhiOmega, _) => return Err(UsageError("phiOmega expects a class in {one, C, F, sigma, sigmabar, eta}".to_owned())),
        (_, _) => return Err(UsageError("phiHT and phiT expect a class in {sigma^-1, sigma^-1*C, sigma^-1*F, sigmabar}".to_owned())),
    };
    print_value(&[("map", name.to_owned()), ("input", src.to_owned()), ("output", out)], format);
    Ok(true)
}

fn subst(s: &Scalar, t: Option<&num_rational::BigRational>, z: Option<&GaussRational>) -> Result<Scalar, UsageError> {
    let mut out = s.clone();
    if let Some(t) = t {
        out = out.eval_t(t)?;
    }
    if let Some(z) = z {
        out = out.eval_zeta(z)?;
    }
    Ok(out)
}

fn eval(src: &str, t: Option<&str>, zeta: Option<&str>, format: Format) -> Outcome {
    let t = t.map(positive_t).transpose()?;
    let z = zeta.map(gauss).transpose()?;
    let (t, z) = (t.as_ref(), z.as_ref());
    let ctx = expr::detect_context(src);
    let value = match expr::parse(src, ctx)? {
        Value::Scalar(s) => Value::Scalar(subst(&s, t, z)?),
        Value::Coh(c) => Value::Coh(CohClass {
            one: subst(&c.one, t, z)?,
            c: subst(&c.c, t, z)?,
            f: subst(&c.f, t, z)?,
            sigma: subst(&c.sigma, t, z)?,
            sigmabar: subst(&c.sigmabar, t, z)?,
            eta: subst(&c.eta, t, z)?,
        }),
        Value::Ht(h) => Value::Ht(HtClass::new(subst(&h.p, t, z)?, subst(&h.q_c, t, z)?, subst(&h.q_f, t, z)?, subst(&h.r, t, z)?)),
    };
    let kind = match value {
        Value::Scalar(_) => "scalar",
        Value::Coh(_) => "cohomology",
        Value::Ht(_) => "HT",
    };
    print_value(&[("input", src.to_owned()), ("kind", kind.to_owned()), ("value", value.to_string())], format);
    Ok(true)
}

fn params(z: &GaussRational, t: &num_rational::BigRational) -> String {
    format!("t={},zeta={}", TParam::Value(t.clone()), ZetaParam::Value(z.clone()))
}

fn gcs_check(check: GcsCheck, z: &GaussRational, t: &num_rational::BigRational) -> Result<CheckDescriptor, UsageError> {
    let j = j_zeta(z, t);
    let p = params(z, t);
    Ok(match check {
        GcsCheck::Square => descriptor("gcs/square".into(), "J_zeta^2 = -1", p, j.squares_to_minus_identity(), format!("{:?}", j.square_residual())),
        GcsCheck::Orthogonal => descriptor("gcs/orthogonal".into(), "J_zeta is orthogonal for the natural pairing", p, j.is_orthogonal(), format!("{:?}", j.orthogonality_residual())),
        GcsCheck::Graph => {
            let a = gcs::deformation_graph_y(z, t)?;
            let expected = gcs::expected_deformation_graph_y(z, t);
            let eqs = gcs::deformation_eigen_equations(z, t);
            let pass = a == expected && eqs.iter().all(|&b| b);
            descriptor("gcs/graph".into(), "L_zeta is the graph of zeta/2 (-(1/t) sigma^-1 + t sigmabar)", p, pass, format!("{:?}", &a - &expected))
        }
        GcsCheck::SpinorMatch => {
            let rho = spinor::family_spinor(z, &GaussRational::real(t.clone()));
            let ann = spinor::clifford_annihilator(&rho)?;
            let l = j.eigenspace_i();
            let pass = ann == l && ann.is_isotropic(&natural_pairing());
            descriptor("gcs/spinor-match".into(), "annihilator of the pure spinor = +i eigenspace of J_zeta", p, pass, format!("annihilator {:?}, eigenspace {:?}", ann.basis(), l.basis()))
        }
    })
}

fn spinor_check(check: SpinorCheck, z: &GaussRational, t: &num_rational::BigRational) -> Result<CheckDescriptor, UsageError> {
    let rho = spinor::family_spinor(z, &GaussRational::real(t.clone()));
    let p = params(z, t);
    Ok(match check {
        SpinorCheck::Purity => {
            let ann = spinor::clifford_annihilator(&rho)?;
            descriptor("spinor/purity".into(), "the family spinor is pure", p, spinor::is_pure(&rho)?, format!("annihilator dimension {}", ann.dim()))
        }
        SpinorCheck::AnnihilatorMatch => {
            let ann = spinor::clifford_annihilator(&rho)?;
            let l = j_zeta(z, t).eigenspace_i();
            descriptor("spinor/annihilator-match".into(), "annihilator of the pure spinor = +i eigenspace of J_zeta", p, ann == l, format!("annihilator {:?}, eigenspace {:?}", ann.basis(), l.basis()))
        }
        SpinorCheck::ExpIdentity => {
            let lhs = spinor::exp_identity_lhs(z, t)?;
            let rhs = spinor::exp_identity_rhs(z, t)?;
            descriptor(
                "spinor/exp-identity".into(),
                "e^B e^{i omega} = 1 + (sigma/2zeta - zeta sigmabar/2) - sigma sigmabar/4",
                p,
                lhs == rhs,
                (&lhs - &rhs).to_string(),
            )
        }
    })
}

fn families_cmd(t_src: &str, full: bool, format: Format) -> Outcome {
    let (t, tag) = t_scalar(t_src)?;
    let rep = families::family_report(&t, &tag)?;
    let fields = [
        ("t", rep.t_tag.clone()),
        ("u_t", rep.direction_x.to_string()),
        ("v_t", rep.direction_y.to_string()),
        ("phiT(u_t) - v_t", rep.correction.to_string()),
    ];
    if !full {
        print_value(&fields, format);
        return Ok(true);
    }
    if format == Format::Text {
        print_value(&fields, format);
        println!();
    }
    let results: Vec<CheckDescriptor> = rep
        .verdicts
        .iter()
        .map(|v| descriptor(format!("families/{}", v.name.replace(' ', "")), "lattice identities of the two families", format!("t={tag}"), v.pass, v.witness.clone()))
        .collect();
    Ok(report(&results, format))
}

fn mirror_cmd(t_src: &str, zeta_src: &str, format: Format) -> Outcome {
    let (t, t_tag) = t_scalar(t_src)?;
    let (z, z_tag) = zeta_scalar(zeta_src)?;
    let out = mirror::verify_mirror_period(&t, &z)?;
    let inv_t = Scalar::one().div_unit(&t)?;
    let p = format!("t={t_tag},zeta={z_tag}");
    if format == Format::Text {
        print_value(&[("[F].[Re sigma]", out.normalizer.to_string()), ("mirror B + i omega", out.mirror_kahler.to_string())], format);
        println!();
    }
    let results = [
        descriptor("mirror/normalizer".into(), "[F].[Re sigma] = 1/t", p.clone(), out.normalizer == inv_t, (&out.normalizer - &inv_t).to_string()),
        descriptor("mirror/kahler".into(), "mirror of the twistor period is t sigma/2zeta - zeta t sigmabar/2 mod F", p, out.holds(), out.residual.to_string()),
    ];
    Ok(report(&results, format))
}
