//! The `steinerforge` command line: `build`, `weights`, `design` and `check`.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 computation infeasible,
//! 3 certification failed.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::affine::{certify_invariance, InvarianceMode};
use crate::am::assmus_mattson;
use crate::code::{
    build_cyclic, build_extended_from_defining_set, dual, extend, load_code, min_distance,
    save_code, CodeRole, LinearCode, MinDistance, COORDINATE_CONVENTION,
};
use crate::cyclotomic::{defining_set_for, klp_affine_invariant, DefiningSet};
use crate::design::{
    extract_design, s24_admissible, CertificateRecord, DesignVerdict, EnumerationMode,
};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Poly, Gf2mField};
use crate::search::EXHAUSTIVE_DIMENSION_CAP;
use crate::weights::{
    brute_weight_distribution, closed_form_dual_wd, macwilliams_transform, WeightDistribution,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INFEASIBLE: u8 = 2;
pub const EXIT_CERTIFICATION_FAILED: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "steinerforge",
    version,
    about = "Cyclic codes C_E, their weight distributions and designs"
)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "STEINERFORGE_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct C_E (optionally extended and/or dualized) and write it to a directory.
    Build(BuildArgs),
    /// Compute a weight distribution.
    Weights(WeightsArgs),
    /// Extract the support design of one weight and optionally certify it.
    Design(DesignArgs),
    /// KLP, affine-invariance or Assmus–Mattson checks.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub m: u32,
    /// Exponent set, comma separated.
    #[arg(long = "E", value_delimiter = ',', required = true)]
    pub e: Vec<u32>,
    #[arg(long)]
    pub extended: bool,
    #[arg(long)]
    pub dual: bool,
    /// Primitive modulus as an integer (e.g. 0x43 or 67); default is the smallest one.
    #[arg(long)]
    pub modulus: Option<String>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Macwilliams,
    ClosedForm,
}

#[derive(Debug, Args)]
pub struct WeightsArgs {
    /// Path to code.json.
    pub code: PathBuf,
    #[arg(long, value_enum, default_value = "brute")]
    pub method: Method,
    /// Run every feasible method and fail on any disagreement.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Exhaustive,
    Mitm,
}

#[derive(Debug, Args)]
pub struct DesignArgs {
    /// Path to code.json.
    pub code: PathBuf,
    #[arg(long)]
    pub weight: usize,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Block file to write.
    #[arg(long)]
    pub out: PathBuf,
    /// Certificate file (default: `<out>.cert.json`).
    #[arg(long)]
    pub cert: Option<PathBuf>,
    #[arg(long)]
    pub certify: bool,
    #[arg(long, value_enum, default_value = "auto")]
    pub mode: ModeArg,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["klp", "affine", "am"])))]
pub struct CheckArgs {
    #[arg(long)]
    pub klp: bool,
    #[arg(long)]
    pub affine: bool,
    #[arg(long)]
    pub am: bool,
    /// A code.json to check instead of (m, E).
    #[arg(long)]
    pub code: Option<PathBuf>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long = "E", value_delimiter = ',')]
    pub e: Vec<u32>,
    /// Extended defining set given by coset representatives (e.g. 0,3).
    #[arg(long, value_delimiter = ',')]
    pub cosets: Vec<u32>,
    /// Number of random group elements; full group when omitted and m <= 6.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

/// Everything needed to rerun a command and check its outputs.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub m: Option<u32>,
    #[serde(rename = "E")]
    pub e: Vec<u32>,
    pub modulus_bits: Option<u64>,
    pub convention: String,
    pub command: Vec<String>,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    pub elapsed_ms: f64,
    pub summary: Value,
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let bytes = fs::read(path)?;
    Ok(Sha256::digest(&bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect())
}

fn digests(paths: &[&Path]) -> Result<Vec<FileDigest>> {
    paths
        .iter()
        .map(|p| {
            Ok(FileDigest {
                path: p.display().to_string(),
                sha256: sha256_file(p)?,
            })
        })
        .collect()
}

struct Outcome {
    summary: Value,
    m: Option<u32>,
    e: Vec<u32>,
    modulus_bits: Option<u64>,
    inputs: Vec<PathBuf>,
    outputs: Vec<PathBuf>,
    manifest: Option<PathBuf>,
    exit: u8,
}

impl Outcome {
    fn new(summary: Value) -> Self {
        Self {
            summary,
            m: None,
            e: Vec::new(),
            modulus_bits: None,
            inputs: Vec::new(),
            outputs: Vec::new(),
            manifest: None,
            exit: EXIT_OK,
        }
    }

    fn with_code(mut self, code: &LinearCode) -> Self {
        if let Some(p) = code.provenance() {
            self.m = Some(p.m);
            self.e = p.e.clone();
            self.modulus_bits = Some(p.modulus_bits);
        }
        self
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Infeasible(_) | Error::DimensionCap { .. } => EXIT_INFEASIBLE,
        _ => EXIT_USAGE,
    }
}

/// Entry point used by the binary.
pub fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

/// Parses `args` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Some(n) = cli.threads {
        // a pool may already exist when called repeatedly in one process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let start = Instant::now();
    let result = match &cli.command {
        Command::Build(a) => cmd_build(a),
        Command::Weights(a) => cmd_weights(a),
        Command::Design(a) => cmd_design(a),
        Command::Check(a) => cmd_check(a),
    };
    match result.and_then(|o| finish(o, &argv, start)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn finish(o: Outcome, argv: &[std::ffi::OsString], start: Instant) -> Result<u8> {
    println!("{}", serde_json::to_string_pretty(&o.summary)?);
    if let Some(path) = &o.manifest {
        let inputs: Vec<&Path> = o.inputs.iter().map(PathBuf::as_path).collect();
        let outputs: Vec<&Path> = o.outputs.iter().map(PathBuf::as_path).collect();
        let manifest = RunManifest {
            tool_version: env!("CARGO_PKG_VERSION").into(),
            m: o.m,
            e: o.e,
            modulus_bits: o.modulus_bits,
            convention: COORDINATE_CONVENTION.into(),
            command: argv
                .iter()
                .map(|a| a.to_string_lossy().into_owned())
                .collect(),
            inputs: digests(&inputs)?,
            outputs: digests(&outputs)?,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            summary: o.summary,
        };
        fs::write(path, serde_json::to_string_pretty(&manifest)? + "\n")?;
    }
    Ok(o.exit)
}

fn parse_modulus(s: &str) -> Result<u64> {
    let s = s.trim();
    let parsed = if let Some(hex) = s.strip_prefix("0x") {
        u64::from_str_radix(hex, 16)
    } else if let Some(bin) = s.strip_prefix("0b") {
        u64::from_str_radix(bin, 2)
    } else {
        s.parse()
    };
    parsed.map_err(|e| Error::InvalidParameters(format!("modulus {s:?}: {e}")))
}

fn exponent_set(e: &[u32]) -> BTreeSet<u32> {
    e.iter().copied().collect()
}

/// Builds `C_E`, then optionally extends and dualizes (extension first).
pub fn build_code(
    field: &Gf2mField,
    e: &BTreeSet<u32>,
    extended: bool,
    dualize: bool,
) -> Result<LinearCode> {
    let mut code = build_cyclic(field, e)?;
    if extended {
        code = extend(&code)?;
    }
    if dualize {
        code = dual(&code);
    }
    Ok(code)
}

fn cheap_min_distance(code: &LinearCode) -> Result<Option<MinDistance>> {
    if code.dimension() <= 22 || (code.length() <= 128 && code.length() - code.dimension() <= 128) {
        match min_distance(code, 8) {
            Ok(d) => Ok(Some(d)),
            Err(Error::Infeasible(_)) => Ok(None),
            Err(e) => Err(e),
        }
    } else {
        Ok(None)
    }
}

fn cmd_build(a: &BuildArgs) -> Result<Outcome> {
    let modulus = a
        .modulus
        .as_deref()
        .map(parse_modulus)
        .transpose()?
        .map(Gf2Poly::from_bits);
    let field = Gf2mField::build(a.m, modulus)?;
    let code = build_code(&field, &exponent_set(&a.e), a.extended, a.dual)?;
    let json_path = save_code(&code, &a.out)?;
    let d = cheap_min_distance(&code)?;
    eprintln!("[{}, {}]", code.length(), code.dimension());
    let summary = json!({
        "length": code.length(),
        "dimension": code.dimension(),
        "role": code.role(),
        "min_distance": d,
    });
    let mut o = Outcome::new(summary).with_code(&code);
    o.outputs = vec![json_path, a.out.join(crate::code::GENERATOR_BLOB)];
    o.manifest = Some(a.out.join("manifest.json"));
    Ok(o)
}

fn closed_form_for(code: &LinearCode) -> Result<WeightDistribution> {
    let p = code.provenance().ok_or_else(|| {
        Error::InvalidParameters("closed form needs a code with provenance".into())
    })?;
    let [e] = p.e[..] else {
        return Err(Error::Infeasible(format!(
            "no closed form for |E| = {} (only |E| = 1)",
            p.e.len()
        )));
    };
    match p.role {
        CodeRole::Dual => closed_form_dual_wd(p.m, e, false),
        CodeRole::ExtendedDual => closed_form_dual_wd(p.m, e, true),
        CodeRole::Cyclic | CodeRole::Extended => {
            let d = closed_form_dual_wd(p.m, e, p.role == CodeRole::Extended)?;
            let k = d.dimension().expect("counts sum to a power of two");
            macwilliams_transform(&d, k)
        }
        other => Err(Error::Infeasible(format!(
            "no closed form for role {other}"
        ))),
    }
}

fn weights_by(code: &LinearCode, method: Method) -> Result<WeightDistribution> {
    match method {
        Method::Brute => brute_weight_distribution(code),
        Method::Macwilliams => {
            let d = dual(code);
            let dual_wd = brute_weight_distribution(&d)?;
            macwilliams_transform(&dual_wd, d.dimension())
        }
        Method::ClosedForm => closed_form_for(code),
    }
}

fn cmd_weights(a: &WeightsArgs) -> Result<Outcome> {
    let code = load_code(&a.code)?;
    let wd = weights_by(&code, a.method)?;
    let mut checked = vec![a.method];
    let mut mismatch = Vec::new();
    if a.verify {
        for other in [Method::Brute, Method::Macwilliams, Method::ClosedForm] {
            if other == a.method {
                continue;
            }
            match weights_by(&code, other) {
                Ok(w) => {
                    checked.push(other);
                    if w != wd {
                        mismatch.push(other);
                    }
                }
                Err(Error::Infeasible(_)) | Err(Error::DimensionCap { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    let text = wd.to_json();
    let mut o = Outcome::new(json!({
        "length": wd.length(),
        "dimension": code.dimension(),
        "min_distance": wd.min_distance(),
        "methods": checked.iter().map(|m| format!("{m:?}").to_lowercase()).collect::<Vec<_>>(),
        "agree": mismatch.is_empty(),
        "distribution": serde_json::from_str::<Value>(&text)?,
    }))
    .with_code(&code);
    o.inputs = vec![a.code.clone()];
    if let Some(out) = &a.out {
        fs::write(out, text + "\n")?;
        o.outputs = vec![out.clone()];
        o.manifest = Some(sidecar(out, "manifest.json"));
    }
    if !mismatch.is_empty() {
        o.exit = EXIT_CERTIFICATION_FAILED;
    }
    Ok(o)
}

fn sidecar(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

fn cmd_design(a: &DesignArgs) -> Result<Outcome> {
    let code = load_code(&a.code)?;
    let mode = match a.mode {
        ModeArg::Auto => EnumerationMode::Auto,
        ModeArg::Exhaustive => EnumerationMode::Exhaustive,
        ModeArg::Mitm => EnumerationMode::MeetInTheMiddle,
    };
    let mut design = extract_design(&code, a.weight, mode)?;
    let source = sha256_file(&a.code)?;
    fs::write(&a.out, design.to_block_file(&source))?;
    let mut o =
        Outcome::new(json!({ "v": design.v(), "k": design.k(), "b": design.block_count() }))
            .with_code(&code);
    o.inputs = vec![a.code.clone()];
    o.outputs = vec![a.out.clone()];
    if a.certify {
        let verdict = design.certify(a.t)?;
        let record = CertificateRecord::new(&design, a.t, &verdict);
        if record.steiner && record.t == 2 && record.k == 4 && !s24_admissible(record.v as u64) {
            return Err(Error::Consistency(format!(
                "S(2,4,{}) violates v ≡ 1, 4 (mod 12)",
                record.v
            )));
        }
        let cert_path = a
            .cert
            .clone()
            .unwrap_or_else(|| sidecar(&a.out, "cert.json"));
        fs::write(&cert_path, serde_json::to_string_pretty(&record)? + "\n")?;
        o.summary = serde_json::to_value(&record)?;
        o.outputs.push(cert_path);
        if matches!(verdict, DesignVerdict::NotDesign(_)) {
            o.exit = EXIT_CERTIFICATION_FAILED;
        }
    }
    o.manifest = Some(sidecar(&a.out, "manifest.json"));
    Ok(o)
}

/// The code a `check` runs on: a file, an explicit extended defining set, or `C̄_E`.
fn check_target(a: &CheckArgs) -> Result<(LinearCode, Gf2mField)> {
    if let Some(path) = &a.code {
        let code = load_code(path)?;
        let p = code.provenance().expect("loaded codes carry provenance");
        let field = Gf2mField::with_modulus(p.m, Gf2Poly::from_bits(p.modulus_bits))?;
        return Ok((code, field));
    }
    let m =
        a.m.ok_or_else(|| Error::InvalidParameters("give --code or --m".into()))?;
    let field = Gf2mField::new(m)?;
    if !a.cosets.is_empty() {
        let t = DefiningSet::from_cosets(m, a.cosets.iter().copied())?;
        return Ok((build_extended_from_defining_set(&field, &t)?, field));
    }
    let code = build_code(&field, &exponent_set(&a.e), true, false)?;
    Ok((code, field))
}

/// Both distributions, brute-forcing whichever side is small and transforming.
pub fn weight_pair(code: &LinearCode) -> Result<(WeightDistribution, WeightDistribution)> {
    let d = dual(code);
    if d.dimension() <= code.dimension() && d.dimension() <= EXHAUSTIVE_DIMENSION_CAP {
        let dual_wd = brute_weight_distribution(&d)?;
        Ok((macwilliams_transform(&dual_wd, d.dimension())?, dual_wd))
    } else {
        let wd = brute_weight_distribution(code)?;
        let dual_wd = macwilliams_transform(&wd, code.dimension())?;
        Ok((wd, dual_wd))
    }
}

fn cmd_check(a: &CheckArgs) -> Result<Outcome> {
    let mut o = if a.klp {
        let t_bar = match (&a.code, a.cosets.is_empty()) {
            (None, false) => {
                let m =
                    a.m.ok_or_else(|| Error::InvalidParameters("--cosets needs --m".into()))?;
                DefiningSet::from_cosets(m, a.cosets.iter().copied())?
            }
            (None, true) => {
                let m =
                    a.m.ok_or_else(|| Error::InvalidParameters("give --code or --m".into()))?;
                defining_set_for(m, &exponent_set(&a.e), true)?
            }
            (Some(_), _) => check_target(a)?
                .0
                .defining_set()
                .cloned()
                .ok_or_else(|| Error::InvalidDefiningSet("code has no defining set".into()))?,
        };
        let witness = klp_affine_invariant(&t_bar)?;
        let mut o = Outcome::new(json!({
            "check": "klp",
            "m": t_bar.m(),
            "coset_leaders": t_bar.coset_leaders(),
            "invariant": witness.is_none(),
            "witness": witness,
        }));
        o.m = Some(t_bar.m());
        o.e = a.e.clone();
        if witness.is_some() {
            o.exit = EXIT_CERTIFICATION_FAILED;
        }
        o
    } else if a.affine {
        let (code, field) = check_target(a)?;
        let mode = match a.sample {
            Some(n) => InvarianceMode::Sample(n),
            None if field.m() <= 6 => InvarianceMode::Full,
            None => InvarianceMode::Sample(1000),
        };
        let report = certify_invariance(&code, &field, mode, a.seed)?;
        let mut o = Outcome::new(json!({
            "check": "affine",
            "mode": mode,
            "seed": a.seed,
            "report": report,
        }))
        .with_code(&code);
        if !report.invariant {
            o.exit = EXIT_CERTIFICATION_FAILED;
        }
        o
    } else {
        let (code, _) = check_target(a)?;
        let (wd, dual_wd) = weight_pair(&code)?;
        let report = assmus_mattson(&wd, &dual_wd, a.t)?;
        let mut o = Outcome::new(json!({
            "check": "am",
            "holds": report.hypothesis_holds,
            "s": report.s,
            "report": report,
        }))
        .with_code(&code);
        if !report.hypothesis_holds {
            o.exit = EXIT_CERTIFICATION_FAILED;
        }
        o
    };
    if let Some(code) = &a.code {
        o.inputs = vec![code.clone()];
    }
    if let Some(out) = &a.out {
        fs::write(out, serde_json::to_string_pretty(&o.summary)? + "\n")?;
        o.outputs = vec![out.clone()];
        o.manifest = Some(sidecar(out, "manifest.json"));
    }
    Ok(o)
}
