//! Registry of named verification checks and the run configuration.
//!
//! A suite expands into one descriptor per table row, basis pair or grid
//! sample. Descriptor names are `suite` or `suite/detail` and are unique.

use std::fmt;
use std::path::Path;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::{fibre_period, twistor_period, CohBasis, CohClass};
use crate::expr::{parse_coh, parse_gauss, parse_ht, parse_rational};
use crate::families::{self, Family};
use crate::gcs::{self, j_complex, j_zeta, j_zeta_infinity, natural_pairing};
use crate::harmonic::{contract_sigma, phi_homega, phi_ht, phi_t, HtBasis, HtClass};
use crate::mirror::{self, HyperbolicFrame, MirrorClasses, Shifts};
use crate::properties;
use crate::scalar::{rat, GaussRational, Scalar};
use crate::spinor::{self, Spinor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("the {0} grid is empty")]
    EmptyGrid(&'static str),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid value `{value}` for {key}: {msg}")]
    InvalidValue { key: &'static str, value: String, msg: String },
    #[error("cannot read config: {0}")]
    Io(String),
    #[error("malformed config: {0}")]
    Malformed(String),
}

/// A value of `t`: symbolic, or a rational sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TParam {
    Symbolic,
    Value(BigRational),
}

/// A value of `ζ`: symbolic (with `ζ̄`), or a Gaussian rational sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZetaParam {
    Symbolic,
    Value(GaussRational),
}

impl TParam {
    pub fn parse(src: &str) -> Result<Self, ConfigError> {
        if src.trim() == "symbolic" {
            return Ok(Self::Symbolic);
        }
        let q = parse_rational(src).map_err(|e| ConfigError::InvalidValue { key: "t", value: src.to_owned(), msg: e.to_string() })?;
        if q <= rat(1, 1) {
            return Err(ConfigError::InvalidValue { key: "t", value: src.to_owned(), msg: "t must exceed 1".to_owned() });
        }
        Ok(Self::Value(q))
    }

    pub fn scalar(&self) -> Scalar {
        match self {
            Self::Symbolic => Scalar::t(),
            Self::Value(q) => Scalar::rational(q.clone()),
        }
    }
}

impl ZetaParam {
    pub fn parse(src: &str) -> Result<Self, ConfigError> {
        if src.trim() == "symbolic" {
            return Ok(Self::Symbolic);
        }
        let z = parse_gauss(src).map_err(|e| ConfigError::InvalidValue { key: "zeta", value: src.to_owned(), msg: e.to_string() })?;
        if z.is_zero() {
            return Err(ConfigError::InvalidValue { key: "zeta", value: src.to_owned(), msg: "zeta must be nonzero".to_owned() });
        }
        Ok(Self::Value(z))
    }

    pub fn scalar(&self) -> Scalar {
        match self {
            Self::Symbolic => Scalar::zeta(),
            Self::Value(z) => Scalar::constant(z.clone()),
        }
    }
}

fn compact(s: String) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

impl fmt::Display for TParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Symbolic => write!(f, "symbolic"),
            Self::Value(q) => write!(f, "{}", compact(GaussRational::real(q.clone()).to_string())),
        }
    }
}

impl fmt::Display for ZetaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Symbolic => write!(f, "symbolic"),
            Self::Value(z) => write!(f, "{}", compact(z.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub t: Vec<TParam>,
    pub zeta: Vec<ZetaParam>,
    pub format: Format,
    /// Suite or descriptor names; empty or `all` selects everything.
    pub checks: Vec<String>,
    pub seed: u64,
    pub property_cases: usize,
}

pub const DEFAULT_T: [&str; 5] = ["3/2", "2", "5", "10", "100"];

pub const DEFAULT_ZETA: [&str; 20] = [
    "i", "3/5 + 4/5*i", "-1", "-3/5 - 4/5*i", "1", "-i", "1/2", "1/3", "-1/2", "2",
    "1/2 + 1/3*i", "-1/3 + 1/2*i", "2*i", "-3/2*i", "1 + i", "1 - i", "-2 + i", "3/2 - 1/4*i", "1/5", "-5/4 + 2/3*i",
];

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            t: DEFAULT_T.iter().map(|s| TParam::parse(s).expect("default grid parses")).collect(),
            zeta: DEFAULT_ZETA.iter().map(|s| ZetaParam::parse(s).expect("default grid parses")).collect(),
            format: Format::Text,
            checks: Vec::new(),
            seed: 0,
            property_cases: 1000,
        }
    }
}

/// On-disk form of [`RunConfig`]; every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub t: Option<Vec<String>>,
    pub zeta: Option<Vec<String>>,
    pub format: Option<Format>,
    pub checks: Option<Vec<String>>,
    pub seed: Option<u64>,
    pub property_cases: Option<usize>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError::Malformed(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Overrides fields of `base` with those present in the file.
    pub fn apply(self, mut base: RunConfig) -> Result<RunConfig, ConfigError> {
        if let Some(ts) = self.t {
            base.t = ts.iter().map(|s| TParam::parse(s)).collect::<Result<_, _>>()?;
        }
        if let Some(zs) = self.zeta {
            base.zeta = zs.iter().map(|s| ZetaParam::parse(s)).collect::<Result<_, _>>()?;
        }
        if let Some(f) = self.format {
            base.format = f;
        }
        if let Some(c) = self.checks {
            base.checks = c;
        }
        if let Some(s) = self.seed {
            base.seed = s;
        }
        if let Some(n) = self.property_cases {
            base.property_cases = n;
        }
        Ok(base)
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.t.is_empty() {
            return Err(ConfigError::EmptyGrid("t"));
        }
        if self.zeta.is_empty() {
            return Err(ConfigError::EmptyGrid("zeta"));
        }
        for name in &self.checks {
            if name != "all" && find_suite(name).is_none() {
                return Err(ConfigError::UnknownCheck(name.clone()));
            }
        }
        Ok(())
    }

    fn numeric_t(&self) -> Vec<BigRational> {
        self.t.iter().filter_map(|p| if let TParam::Value(q) = p { Some(q.clone()) } else { None }).collect()
    }

    fn numeric_zeta(&self) -> Vec<GaussRational> {
        self.zeta.iter().filter_map(|p| if let ZetaParam::Value(z) = p { Some(z.clone()) } else { None }).collect()
    }

    /// Sample pairs for pointwise checks.
    fn samples(&self) -> Vec<(BigRational, GaussRational)> {
        let zs = self.numeric_zeta();
        self.numeric_t().into_iter().flat_map(|t| zs.iter().map(move |z| (t.clone(), z.clone()))).collect()
    }

    /// `t` values for exact identities: symbolic first, then the grid.
    fn t_params(&self) -> Vec<TParam> {
        let mut out = self.t.clone();
        if !out.contains(&TParam::Symbolic) {
            out.insert(0, TParam::Symbolic);
        }
        out
    }

    /// `(t, ζ)` pairs for exact identities; the symbolic pair is always
    /// included.
    fn symbolic_pairs(&self) -> Vec<(TParam, ZetaParam)> {
        let mut out: Vec<(TParam, ZetaParam)> =
            self.t.iter().flat_map(|t| self.zeta.iter().map(move |z| (t.clone(), z.clone()))).collect();
        let sym = (TParam::Symbolic, ZetaParam::Symbolic);
        if !out.contains(&sym) {
            out.insert(0, sym);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One executed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckDescriptor {
    pub name: String,
    pub anchor: &'static str,
    pub params: String,
    pub verdict: Status,
    pub witness: String,
}

impl CheckDescriptor {
    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }
}

/// A check result before it is attached to its suite.
struct Outcome {
    detail: String,
    params: String,
    pass: bool,
    witness: String,
}

impl Outcome {
    fn new(detail: impl Into<String>, params: impl Into<String>, pass: bool, witness: impl Into<String>) -> Self {
        Self { detail: detail.into(), params: params.into(), pass, witness: witness.into() }
    }

    /// Passes when `residual` is zero; the witness is the residual.
    fn residual<T: fmt::Display>(detail: impl Into<String>, params: impl Into<String>, residual: &T, zero: bool) -> Self {
        Self::new(detail, params, zero, residual.to_string())
    }

    fn error(detail: impl Into<String>, params: impl Into<String>, err: impl fmt::Display) -> Self {
        Self::new(detail, params, false, format!("error: {err}"))
    }
}

pub struct Suite {
    pub name: &'static str,
    pub anchor: &'static str,
    run: fn(&RunConfig) -> Vec<Outcome>,
}

pub fn suites() -> &'static [Suite] {
    &SUITES
}

static SUITES: [Suite; 20] = [
    Suite { name: "phiOmega-table", anchor: "phi_HOmega on {1, C, F, sigma, sigmabar, eta}", run: phi_omega_table },
    Suite { name: "phiOmega-isometry", anchor: "phi_HOmega preserves the Mukai pairing", run: phi_omega_isometry },
    Suite { name: "contraction-table", anchor: "contraction with sigma: HT^2 -> HOmega_0", run: contraction_table },
    Suite { name: "phiHT-table", anchor: "phi_HT = (contract sigma_Y)^-1 . phi_HOmega . (contract sigma_X)", run: phi_ht_table },
    Suite { name: "phiT-table", anchor: "phi_T = (1+eta) . phi_HT . (1-eta)", run: phi_t_table },
    Suite { name: "kahler-class", anchor: "alpha = (1/t)C + ((t^2+1)/t)F", run: kahler_class },
    Suite { name: "period-square", anchor: "periods of the twistor and fibre families are isotropic", run: period_square },
    Suite { name: "bfield-correction", anchor: "phi_T(u_t) = v_t - (1/2t) sigmabar", run: bfield_correction },
    Suite { name: "directions", anchor: "first-order directions u_t, v_t of the two families", run: directions },
    Suite { name: "limits", anchor: "t = 1 and renormalized t -> infinity directions", run: limits },
    Suite { name: "spinor-exp", anchor: "e^B e^{i omega} = 1 + (sigma/2zeta - zeta sigmabar/2) - sigma sigmabar/4", run: spinor_exp },
    Suite { name: "bfield-data", anchor: "B + i omega = t sigma/2zeta - zeta t sigmabar/2 in spherical angles", run: bfield_data },
    Suite { name: "j-zeta-algebra", anchor: "J_zeta^2 = -1, J_zeta orthogonal, L and conj(L) transverse", run: j_zeta_algebra },
    Suite { name: "j-theta-factorization", anchor: "J_theta = e^{-B} J_{csc theta omega_J} e^{B}, B = -cot theta omega_K", run: j_theta_factorization },
    Suite { name: "spinor-annihilator", anchor: "annihilator of the pure spinor = +i eigenspace of J_zeta", run: spinor_annihilator },
    Suite { name: "deformation-graph", anchor: "L_zeta is the graph of zeta/2 (-(1/t) sigma^-1 + t sigmabar)", run: deformation_graph },
    Suite { name: "twistor-graph", anchor: "T^{0,1} of I_zeta is the graph of -2 zeta sigma^-1 omega_I", run: twistor_graph },
    Suite { name: "mirror-thm4", anchor: "mirror of the twistor period is t sigma/2zeta - zeta t sigmabar/2 mod F", run: mirror_period },
    Suite { name: "mirror-normalization", anchor: "normalizations Re^2 = Im^2 = omega^2, pairwise orthogonal", run: mirror_normalization },
    Suite { name: "properties", anchor: "randomized algebraic laws", run: property_suites },
];

/// The suite owning `name`, which is a suite name or `suite/detail`.
pub fn find_suite(name: &str) -> Option<&'static Suite> {
    let head = name.split('/').next().unwrap_or(name);
    SUITES.iter().find(|s| s.name == head)
}

fn selected(cfg: &RunConfig, suite: &Suite, full_name: &str) -> bool {
    cfg.checks.is_empty() || cfg.checks.iter().any(|c| c == "all" || c == suite.name || c == full_name)
}

/// Runs the selected checks. Suites run concurrently; the result is in
/// registration order.
pub fn run_checks(cfg: &RunConfig) -> Result<Vec<CheckDescriptor>, ConfigError> {
    cfg.validate()?;
    let active: Vec<&Suite> = SUITES
        .iter()
        .filter(|s| cfg.checks.is_empty() || cfg.checks.iter().any(|c| c == "all" || find_suite(c).is_some_and(|f| f.name == s.name)))
        .collect();
    let per_suite: Vec<Vec<CheckDescriptor>> = active
        .par_iter()
        .map(|suite| {
            (suite.run)(cfg)
                .into_iter()
                .map(|o| {
                    let name = if o.detail.is_empty() { suite.name.to_owned() } else { format!("{}/{}", suite.name, o.detail) };
                    CheckDescriptor {
                        name,
                        anchor: suite.anchor,
                        params: o.params,
                        verdict: if o.pass { Status::Pass } else { Status::Fail },
                        witness: if o.pass { "0".to_owned() } else { o.witness },
                    }
                })
                .filter(|d| selected(cfg, suite, &d.name))
                .collect()
        })
        .collect();
    let out: Vec<CheckDescriptor> = per_suite.into_iter().flatten().collect();
    for c in &cfg.checks {
        if c != "all" && !out.iter().any(|d| &d.name == c || d.name.split('/').next() == Some(c.as_str())) {
            return Err(ConfigError::UnknownCheck(c.clone()));
        }
    }
    Ok(out)
}

fn sample_label(t: &BigRational, z: &GaussRational) -> String {
    format!("t={},zeta={}", TParam::Value(t.clone()), ZetaParam::Value(z.clone()))
}

fn pair_label(t: &TParam, z: &ZetaParam) -> String {
    format!("t={t},zeta={z}")
}

fn coh(src: &str) -> CohClass {
    parse_coh(src).expect("table entry parses")
}

fn ht(src: &str) -> HtClass {
    parse_ht(src).expect("table entry parses")
}

// ----------------------------------------------------------------------------
// Cohomological transforms
// ----------------------------------------------------------------------------

const PHI_OMEGA_TABLE: [(CohBasis, &str); 6] = [
    (CohBasis::One, "-C - F"),
    (CohBasis::Eta, "F"),
    (CohBasis::C, "one + eta"),
    (CohBasis::F, "-eta"),
    (CohBasis::Sigma, "sigma"),
    (CohBasis::SigmaBar, "sigmabar"),
];

fn phi_omega_table(_: &RunConfig) -> Vec<Outcome> {
    PHI_OMEGA_TABLE
        .iter()
        .map(|(b, expected)| {
            let residual = phi_homega(&b.class()) - coh(expected);
            Outcome::residual(b.name(), "symbolic", &residual, residual.is_zero())
        })
        .collect()
}

fn phi_omega_isometry(_: &RunConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (i, a) in CohBasis::ALL.iter().enumerate() {
        for b in &CohBasis::ALL[i..] {
            let (x, y) = (a.class(), b.class());
            let residual = phi_homega(&x).mukai_pairing(&phi_homega(&y)) - x.mukai_pairing(&y);
            out.push(Outcome::residual(format!("{},{}", a.name(), b.name()), "symbolic", &residual, residual.is_zero()));
        }
    }
    out
}

const CONTRACTION_TABLE: [(HtBasis, &str); 4] = [
    (HtBasis::SigmaInv, "4*one"),
    (HtBasis::SigmaBar, "4*eta"),
    (HtBasis::SigmaInvC, "C"),
    (HtBasis::SigmaInvF, "F"),
];

fn contraction_table(_: &RunConfig) -> Vec<Outcome> {
    CONTRACTION_TABLE
        .iter()
        .map(|(b, expected)| {
            let residual = contract_sigma(&b.class()) - coh(expected);
            Outcome::residual(b.name(), "symbolic", &residual, residual.is_zero())
        })
        .collect()
}

const PHI_HT_TABLE: [(HtBasis, &str); 4] = [
    (HtBasis::SigmaInv, "-4*sigma^-1*C - 4*sigma^-1*F"),
    (HtBasis::SigmaBar, "4*sigma^-1*F"),
    (HtBasis::SigmaInvC, "1/4*sigma^-1 + 1/4*sigmabar"),
    (HtBasis::SigmaInvF, "-1/4*sigmabar"),
];

const PHI_T_TABLE: [(HtBasis, &str); 4] = [
    (HtBasis::SigmaInv, "-4*sigma^-1*C - 8*sigma^-1*F"),
    (HtBasis::SigmaBar, "4*sigma^-1*F"),
    (HtBasis::SigmaInvC, "1/4*sigma^-1 + 1/2*sigmabar"),
    (HtBasis::SigmaInvF, "-1/4*sigmabar"),
];

fn ht_table(table: &[(HtBasis, &str); 4], map: fn(&HtClass) -> Result<HtClass, crate::harmonic::HarmonicError>) -> Vec<Outcome> {
    table
        .iter()
        .map(|(b, expected)| match map(&b.class()) {
            Ok(img) => {
                let residual = img - ht(expected);
                Outcome::residual(b.name(), "symbolic", &residual, residual.is_zero())
            }
            Err(e) => Outcome::error(b.name(), "symbolic", e),
        })
        .collect()
}

fn phi_ht_table(_: &RunConfig) -> Vec<Outcome> {
    ht_table(&PHI_HT_TABLE, phi_ht)
}

fn phi_t_table(_: &RunConfig) -> Vec<Outcome> {
    ht_table(&PHI_T_TABLE, phi_t)
}

// ----------------------------------------------------------------------------
// Families
// ----------------------------------------------------------------------------

fn kahler_class(cfg: &RunConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for t in cfg.t_params() {
        for v in families::kahler_checks(&t.scalar()) {
            out.push(Outcome::new(format!("{}[t={t}]", v.name), format!("t={t}"), v.pass, v.witness));
        }
    }
    let v = families::semi_kahler_check();
    out.push(Outcome::new("alpha.C[t=1]", "t=1", v.pass, v.witness));
    out
}

fn period_square(_: &RunConfig) -> Vec<Outcome> {
    let p = twistor_period(&Scalar::t(), &Scalar::zeta());
    let sq = p.wedge(&p);
    let f = fibre_period(&Scalar::zeta());
    let fsq = f.wedge(&f);
    vec![
        Outcome::residual("twistor", "t=symbolic,zeta=symbolic", &sq, sq.is_zero()),
        Outcome::residual("fibre", "zeta=symbolic", &fsq, fsq.is_zero()),
    ]
}

fn bfield_correction(cfg: &RunConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for t in cfg.t_params() {
        let s = t.scalar();
        let params = format!("t={t}");
        match families::bfield_correction(&s) {
            Ok(c) => {
                let residual = c - families::expected_correction(&s);
                out.push(Outcome::residual(format!("phiT[t={t}]"), params.clone(), &residual, residual.is_zero()));
            }
            Err(e) => out.push(Outcome::error(format!("phiT[t={t}]"), params.clone(), e)),
        }
        match families::ht_correction(&s) {
            Ok(c) => out.push(Outcome::residual(format!("phiHT[t={t}]"), params, &c, c.is_zero())),
            Err(e) => out.push(Outcome::error(format!("phiHT[t={t}]"), params, e)),
        }
    }
    match families::correction_decay(6) {
        Ok(d) => {
            let witness = d.iter().map(|(_, r)| r.to_string()).collect::<Vec<_>>().join(", ");
            out.push(Outcome::new("decay", "t=10^k,k=1..6", families::is_strictly_decaying(&d), witness));
        }
        Err(e) => out.push(Outcome::error("decay", "t=10^k,k=1..6", e)),
    }
    out
}

fn directions(_: &RunConfig) -> Vec<Outcome> {
    let t = Scalar::t();
    let u = families::direction_x(&t);
    let v = families::direction_y(&t);
    let u_formula = ht("(-2/t)*sigma^-1*C + (-2*(t^2+1)/t)*sigma^-1*F");
    let v_formula = ht("(-1/(2*t))*sigma^-1 + (t/2)*sigmabar");
    let mut out = vec![
        Outcome::residual("u_t", "t=symbolic", &(u.clone() - u_formula.clone()), u == u_formula),
        Outcome::residual("v_t", "t=symbolic", &(v.clone() - v_formula.clone()), v == v_formula),
    ];
    for (label, family, expected) in [("twistor-family", Family::Twistor, &u), ("spinor-family", Family::Gualtieri, &v)] {
        match families::direction_from_spinor_family(family, &t) {
            Ok(d) => {
                let residual = d - expected.clone();
                out.push(Outcome::residual(label, "t=symbolic", &residual, residual.is_zero()));
            }
            Err(e) => out.push(Outcome::error(label, "t=symbolic", e)),
        }
    }
    out
}

fn limits(_: &RunConfig) -> Vec<Outcome> {
    match families::limit_checks() {
        Ok(vs) => vs.into_iter().map(|v| Outcome::new(v.name, "t in {1, infinity}", v.pass, v.witness)).collect(),
        Err(e) => vec![Outcome::error("", "", e)],
    }
}

// ----------------------------------------------------------------------------
// Pointwise checks on the flat model
// ----------------------------------------------------------------------------

fn per_sample(cfg: &RunConfig, f: impl Fn(&BigRational, &GaussRational) -> (bool, String) + Sync) -> Vec<Outcome> {
    cfg.samples()
        .par_iter()
        .map(|(t, z)| {
            let label = sample_label(t, z);
            let (pass, witness) = f(t, z);
            Outcome::new(label.clone(), label, pass, witness)
        })
        .collect()
}

fn verdict_list(items: &[(&str, bool)]) -> (bool, String) {
    let failed: Vec<&str> = items.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    if failed.is_empty() {
        (true, "0".to_owned())
    } else {
        (false, format!("failed: {}", failed.join(", ")))
    }
}

fn spinor_exp(cfg: &RunConfig) -> Vec<Outcome> {
    let mut out = per_sample(cfg, |t, z| {
        let (lhs, rhs) = match (spinor::exp_identity_lhs(z, t), spinor::exp_identity_rhs(z, t)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(e), _) | (_, Err(e)) => return (false, format!("error: {e}")),
        };
        let family = spinor::family_spinor(z, &GaussRational::real(t.clone()));
        let rescaled = lhs.scale(&(z * &GaussRational::from(2)));
        if lhs != rhs {
            return (false, (&lhs - &rhs).to_string());
        }
        if rescaled != family {
            return (false, format!("2 zeta e^B e^(i omega) - family = {}", &rescaled - &family));
        }
        (true, "0".to_owned())
    });
    for t in cfg.numeric_t() {
        let tg = GaussRational::real(t.clone());
        let sigma = Spinor::<GaussRational>::from_two_form(&gcs::TwoForm::sigma());
        let at_zero = spinor::family_spinor(&GaussRational::zero(), &tg);
        let at_inf = spinor::family_spinor_at_infinity(&GaussRational::zero(), &tg);
        let label = format!("t={}", TParam::Value(t));
        out.push(Outcome::new(format!("zeta=0[{label}]"), label.clone(), at_zero.same_line(&sigma), at_zero.to_string()));
        out.push(Outcome::new(format!("zeta=infinity[{label}]"), label.clone(), at_inf.same_line(&sigma.conj()), at_inf.to_string()));
    }
    out
}

fn bfield_data(cfg: &RunConfig) -> Vec<Outcome> {
    per_sample(cfg, |t, z| {
        let (direct, angles) = match (spinor::bfield_symplectic_data(z, t), spinor::bfield_from_angles(z, t)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return (false, format!("error: {e}")),
        };
        let unit = z.norm_sqr() == rat(1, 1);
        verdict_list(&[
            ("angle formulas", direct == angles),
            ("real forms", direct.b.is_real() && direct.omega.is_real()),
            ("B = 0 on |zeta| = 1", !unit || direct.b.is_zero()),
        ])
    })
}

fn j_zeta_algebra(cfg: &RunConfig) -> Vec<Outcome> {
    let mut out = per_sample(cfg, |t, z| {
        let j = j_zeta(z, t);
        let l = j.eigenspace_i();
        let unit = z.norm_sqr() == rat(1, 1);
        let coeffs = gcs::zeta_coefficients(z);
        verdict_list(&[
            ("square", j.squares_to_minus_identity()),
            ("orthogonal", j.is_orthogonal()),
            ("dim L = 4", l.dim() == 4),
            ("L isotropic", l.is_isotropic(&natural_pairing())),
            ("L and conj(L) transverse", l.intersection_dim(&l.conj()) == 0),
            ("symplectic on |zeta| = 1", !unit || coeffs.complex == rat(0, 1)),
        ])
    });
    let ji = j_complex();
    let jinf = j_zeta_infinity();
    let (ok, w) = verdict_list(&[
        ("J_0 = J_I", cfg.numeric_t().iter().all(|t| j_zeta(&GaussRational::zero(), t) == ji)),
        ("J_I square", ji.squares_to_minus_identity()),
        ("J_I orthogonal", ji.is_orthogonal()),
    ]);
    out.push(Outcome::new("zeta=0", "zeta=0", ok, w));
    let (ok, w) = verdict_list(&[
        ("J_inf = -J_I", jinf == -&ji),
        ("square", jinf.squares_to_minus_identity()),
        ("L_inf = conj(L_0)", jinf.eigenspace_i() == ji.eigenspace_i().conj()),
    ]);
    out.push(Outcome::new("zeta=infinity", "zeta=infinity", ok, w));
    out
}

const THETA_S: [(i64, i64); 5] = [(1, 3), (1, 2), (2, 1), (-5, 7), (3, 1)];

fn j_theta_factorization(cfg: &RunConfig) -> Vec<Outcome> {
    let pairs: Vec<(BigRational, BigRational)> =
        cfg.numeric_t().into_iter().flat_map(|t| THETA_S.iter().map(move |&(n, d)| (rat(n, d), t.clone()))).collect();
    pairs
        .par_iter()
        .map(|(s, t)| {
            let label = format!("s={},t={}", TParam::Value(s.clone()), TParam::Value(t.clone()));
            let jt = gcs::j_theta(s, t);
            let zeta = GaussRational::new(rat(0, 1), -s.clone());
            let (pass, witness) = match gcs::j_theta_factorized(s, t) {
                Ok(f) => verdict_list(&[("J_theta = J_zeta(-is)", jt == j_zeta(&zeta, t)), ("B-transform factorization", jt == f)]),
                Err(e) => (false, format!("error: {e}")),
            };
            Outcome::new(label.clone(), label, pass, witness)
        })
        .collect()
}

fn spinor_annihilator(cfg: &RunConfig) -> Vec<Outcome> {
    let mut out = per_sample(cfg, |t, z| {
        let rho = spinor::family_spinor(z, &GaussRational::real(t.clone()));
        match spinor::clifford_annihilator(&rho) {
            Ok(ann) => verdict_list(&[
                ("annihilator = L", ann == j_zeta(z, t).eigenspace_i()),
                ("pure", ann.dim() == 4),
                ("isotropic", ann.is_isotropic(&natural_pairing())),
            ]),
            Err(e) => (false, format!("error: {e}")),
        }
    });
    let sigma = Spinor::<GaussRational>::from_two_form(&gcs::TwoForm::sigma());
    let inf = spinor::family_spinor_at_infinity(&GaussRational::zero(), &GaussRational::one());
    let (ok, w) = match (spinor::clifford_annihilator(&sigma), spinor::clifford_annihilator(&inf)) {
        (Ok(a0), Ok(ainf)) => verdict_list(&[
            ("ann(sigma) = L_I", a0 == j_complex().eigenspace_i()),
            ("ann(sigmabar) = L_-I", ainf == j_zeta_infinity().eigenspace_i()),
        ]),
        (Err(e), _) | (_, Err(e)) => (false, format!("error: {e}")),
    };
    out.push(Outcome::new("endpoints", "zeta in {0, infinity}", ok, w));
    out
}

fn deformation_graph(cfg: &RunConfig) -> Vec<Outcome> {
    let mut out = per_sample(cfg, |t, z| match gcs::deformation_graph_y(z, t) {
        Ok(a) => {
            let expected = gcs::expected_deformation_graph_y(z, t);
            let eqs = gcs::deformation_eigen_equations(z, t);
            if a != expected {
                return (false, format!("graph - expected = {:?}", &a - &expected));
            }
            verdict_list(&[
                ("T^{0,1} equation", eqs[0]),
                ("Omega^{1,0} equation", eqs[1]),
                ("Omega^{0,1} equation", eqs[2]),
                ("T^{1,0} equation", eqs[3]),
            ])
        }
        Err(e) => (false, format!("error: {e}")),
    });
    let zs = cfg.numeric_zeta();
    if let [z1, z2, ..] = zs.as_slice() {
        for t in cfg.numeric_t() {
            let label = format!("t={}", TParam::Value(t.clone()));
            let sum = z1 + z2;
            let (pass, witness) = match (gcs::deformation_graph_y(z1, &t), gcs::deformation_graph_y(z2, &t), gcs::deformation_graph_y(&sum, &t)) {
                (Ok(a), Ok(b), Ok(c)) => {
                    let r = &(&a + &b) - &c;
                    (r.is_zero(), format!("{r:?}"))
                }
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => (false, format!("error: {e}")),
            };
            out.push(Outcome::new(format!("linear[{label}]"), label, pass, if pass { "0".to_owned() } else { witness }));
        }
    }
    out
}

fn twistor_graph(cfg: &RunConfig) -> Vec<Outcome> {
    cfg.numeric_zeta()
        .par_iter()
        .map(|z| {
            let label = format!("zeta={}", ZetaParam::Value(z.clone()));
            let (pass, witness) = match gcs::twistor_pointwise_graph(z) {
                Ok(a) => {
                    let expected = gcs::expected_twistor_graph(z);
                    if a == expected {
                        verdict_list(&[("kernel dimension 2", gcs::twistor_kernel(z).dim() == 2)])
                    } else {
                        (false, format!("graph - expected = {:?}", &a - &expected))
                    }
                }
                Err(e) => (false, format!("error: {e}")),
            };
            Outcome::new(label.clone(), label, pass, witness)
        })
        .collect()
}

// ----------------------------------------------------------------------------
// Mirror symmetry
// ----------------------------------------------------------------------------

fn mirror_period(cfg: &RunConfig) -> Vec<Outcome> {
    let mut out: Vec<Outcome> = cfg
        .symbolic_pairs()
        .par_iter()
        .map(|(t, z)| {
            let label = pair_label(t, z);
            let ts = t.scalar();
            match mirror::verify_mirror_period(&ts, &z.scalar()) {
                Ok(o) => {
                    let inv_t = Scalar::one().div_unit(&ts).expect("t is a unit");
                    if o.normalizer != inv_t {
                        return Outcome::new(label.clone(), label, false, format!("[F].[Re sigma] = {}", o.normalizer));
                    }
                    let pass = o.holds();
                    Outcome::residual(label.clone(), label, &o.residual, pass)
                }
                Err(e) => Outcome::error(label.clone(), label, e),
            }
        })
        .collect();
    // The identity is frame dependent: exchanging fibre and section breaks it.
    let swapped = mirror::verify_mirror_period_in_frame(&Scalar::t(), &Scalar::zeta(), &HyperbolicFrame::swapped());
    let (pass, witness) = match swapped {
        Ok(o) if o.holds() => (false, "identity also holds in the swapped frame".to_owned()),
        Ok(o) => (true, format!("residual {}", o.residual)),
        Err(e) => (true, e.to_string()),
    };
    out.push(Outcome::new("swapped-frame-fails", "frame=(C,F)", pass, witness));
    out
}

fn mirror_normalization(_: &RunConfig) -> Vec<Outcome> {
    let frame = HyperbolicFrame::standard();
    let mut out = Vec::new();
    let mirrored = mirror::gross_mirror(&mirror::sample_full_triple(&Scalar::t()), &frame).and_then(|m| MirrorClasses::from_triple(&m));
    let classes = match mirrored {
        Ok(c) => c,
        Err(e) => return vec![Outcome::error("", "t=symbolic", e)],
    };
    match mirror::normalize_mod_f(&classes, &frame) {
        Ok((norm, _)) => {
            for (name, r) in mirror::normalization_residuals(&norm) {
                out.push(Outcome::residual(name, "t=symbolic", &r, r.is_zero()));
            }
            let bf = frame.f().intersect(&norm.b);
            out.push(Outcome::residual("B.F", "t=symbolic", &bf, bf.is_zero()));
            let expected_re = coh("t*C + 2*t*F");
            let r = norm.re_sigma.clone() - expected_re;
            out.push(Outcome::residual("Re sigma = t(C + 2F)", "t=symbolic", &r, r.is_zero()));
            let kick = Shifts { omega: Scalar::frac(3, 2), re_sigma: Scalar::t(), im_sigma: Scalar::int(-5) * Scalar::zeta() };
            let (pass, witness) = match mirror::normalize_mod_f(&kick.apply(&norm, &frame), &frame) {
                Ok((back, _)) if back == norm => (true, "0".to_owned()),
                Ok((back, _)) => (false, format!("recovered Re sigma {}", back.re_sigma)),
                Err(e) => (false, format!("error: {e}")),
            };
            out.push(Outcome::new("round-trip", "t=symbolic", pass, witness));
            let (pass, witness) = match mirror::normalize_mod_f(&norm, &frame) {
                Ok((_, shifts)) => (shifts.is_zero(), shifts.to_string()),
                Err(e) => (false, format!("error: {e}")),
            };
            out.push(Outcome::new("fixed-point", "t=symbolic", pass, witness));
        }
        Err(e) => out.push(Outcome::error("", "t=symbolic", e)),
    }
    out
}

fn property_suites(cfg: &RunConfig) -> Vec<Outcome> {
    properties::SUITES
        .par_iter()
        .map(|name| {
            let o = properties::run_suite(name, cfg.seed, cfg.property_cases).expect("registered suite");
            let witness = format!("{} of {} cases failed: {}", o.failures, o.cases, o.first_failure.clone().unwrap_or_default());
            Outcome::new(*name, format!("seed={},cases={}", o.seed, o.cases), o.passed(), witness)
        })
        .collect()
}
