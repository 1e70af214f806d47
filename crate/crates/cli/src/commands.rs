use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use doiko_core::bialgebroid::{check_bialgebroid, from_weak_hopf, re_bialgebroid, to_weak_bialgebra};
use doiko_core::corpus::{cyclic_group_algebra, pair_groupoid_algebra};
use doiko_core::doikoppinen::{
    build_dk_coring, build_weak_coring, check_comodule_algebra, check_dk_datum, check_dk_module,
    check_forgetful_separable, check_induction_separable, check_module_coalgebra, check_weak_comodule_algebra,
    check_weak_coring_iso, check_weak_dk_components, check_weak_module_coalgebra, comodule_algebra_backward,
    comodule_algebra_forward, datum_forward, module_coalgebra_backward, module_coalgebra_forward,
    search_forgetful_certificate, search_induction_certificate,
};
use doiko_core::exactlin::{tensor_vec, unit_vector};
use doiko_core::findim::check_coring;
use doiko_core::weakhopf::{check_frobenius_pair, check_weak_bialgebra, check_weak_hopf, extract_base};
use doiko_core::{
    Bialgebroid, DkDatum, Field, FinAlgebra, Fp, Law, Matrix, Report, StructureError, WeakHopf, WeakSetting, Q,
};
use thiserror::Error;

use crate::schema::{self, Certificate, Doc, Object, SchemaError, Separability};

/// Exact verification and construction of weak Hopf algebras,
/// bialgebroids, corings and Doi-Koppinen data.
#[derive(Debug, Parser)]
#[command(name = "doiko", version)]
pub struct Cli {
    /// Scalar field, `Q` or `Fp:<p>`; defaults to the field of the first input.
    #[arg(long, global = true, value_name = "FIELD")]
    pub field: Option<String>,
    /// Where to write the constructed structure or found certificate.
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Also write the verification report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub report: Option<PathBuf>,
    /// Solve for a separability certificate instead of reading one.
    #[arg(long, global = true)]
    pub search_certificate: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every axiom of the structures in the given files.
    Verify {
        kind: VerifyKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Construct a derived structure.
    Build {
        kind: BuildKind,
        file: PathBuf,
        /// Weak Hopf algebra to translate back to (for bialgebroid-side inputs).
        #[arg(long, value_name = "FILE")]
        weak_hopf: Option<PathBuf>,
    },
    /// Check a property of a datum.
    Check {
        kind: CheckKind,
        file: PathBuf,
        /// Certificate to verify.
        #[arg(long, value_name = "FILE")]
        certificate: Option<PathBuf>,
    },
    /// Write a member of a standard family.
    Corpus {
        kind: CorpusKind,
        /// Group order, number of objects, or dimension of the base.
        #[arg(default_value_t = 2)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    WeakHopf,
    Bialgebroid,
    Coring,
    ModuleCoalgebra,
    ComoduleAlgebra,
    DkDatum,
    DkModule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    Bialgebroid,
    WeakBialgebra,
    DkCoring,
    WeakCoringIso,
    TranslateCa,
    TranslateMc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    DkIso,
    InductionSep,
    ForgetfulSep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorpusKind {
    Group,
    PairGroupoid,
    Re,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("{0}")]
    Usage(String),
    #[error("construction failed: {0}")]
    Construction(#[from] StructureError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Construction(_) => 1,
            CliError::Schema(_) | CliError::Usage(_) => 2,
        }
    }
}

/// Result of one command before anything is written.
#[derive(Debug, Default)]
pub struct Outcome {
    pub reports: Vec<Report>,
    pub document: Option<Object>,
    /// Whether reports are the primary output on stdout.
    pub reports_on_stdout: bool,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FieldChoice {
    Rational,
    Prime(u64),
}

/// Primes available through `--field Fp:<p>`.
pub const PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 101, 1009, 10007, 1_000_003];

fn parse_field(tag: &str) -> Result<FieldChoice, CliError> {
    if tag == "Q" {
        return Ok(FieldChoice::Rational);
    }
    let p = tag
        .strip_prefix("Fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| CliError::Usage(format!("unknown field `{tag}`, expected `Q` or `Fp:<p>`")))?;
    if !PRIMES.contains(&p) {
        return Err(CliError::Usage(format!("unsupported prime {p}; available: {PRIMES:?}")));
    }
    Ok(FieldChoice::Prime(p))
}

fn first_input(cli: &Cli) -> Option<&Path> {
    match &cli.command {
        Command::Verify { files, .. } => files.first().map(PathBuf::as_path),
        Command::Build { file, .. } | Command::Check { file, .. } => Some(file),
        Command::Corpus { .. } => None,
    }
}

fn field_of(cli: &Cli) -> Result<FieldChoice, CliError> {
    if let Some(tag) = &cli.field {
        return parse_field(tag);
    }
    match first_input(cli) {
        Some(path) => parse_field(schema::load(path)?.field_tag()?),
        None => Ok(FieldChoice::Rational),
    }
}

macro_rules! over_primes {
    ($p:expr, $cli:expr; $($q:literal),*) => {
        match $p {
            $($q => execute::<Fp<$q>>($cli),)*
            p => Err(CliError::Usage(format!("unsupported prime {p}"))),
        }
    };
}

/// Runs a parsed command without writing anything.
pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match field_of(cli)? {
        FieldChoice::Rational => execute::<Q>(cli),
        FieldChoice::Prime(p) => over_primes!(p, cli; 2, 3, 5, 7, 11, 13, 101, 1009, 10007, 1_000_003),
    }
}

fn execute<F: Field>(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Verify { kind, files } => {
            let reports = files.iter().map(|f| verify::<F>(*kind, f)).collect::<Result<Vec<_>, _>>()?;
            Ok(Outcome { reports, document: None, reports_on_stdout: true })
        }
        Command::Build { kind, file, weak_hopf } => build::<F>(*kind, file, weak_hopf.as_deref()),
        Command::Check { kind, file, certificate } => {
            let mut out = check::<F>(*kind, file, certificate.as_deref(), cli.search_certificate)?;
            out.reports_on_stdout = true;
            Ok(out)
        }
        Command::Corpus { kind, n } => corpus::<F>(*kind, *n),
    }
}

fn labeled(path: &Path, mut report: Report) -> Report {
    report.subject = format!("{} ({})", report.subject, path.display());
    report
}

fn verify<F: Field>(kind: VerifyKind, path: &Path) -> Result<Report, CliError> {
    let doc = schema::load(path)?;
    let report = match kind {
        VerifyKind::WeakHopf => check_weak_hopf(&doc.weak_hopf::<F>()?),
        VerifyKind::Bialgebroid => {
            let (b, sep) = doc.bialgebroid::<F>()?;
            let mut report = check_bialgebroid(&b);
            if let Some(s) = sep {
                report.absorb("separability", check_frobenius_pair(&b.base, &s.idempotent, &s.functional));
            }
            report
        }
        VerifyKind::Coring => check_coring(&doc.coring::<F>()?),
        VerifyKind::ModuleCoalgebra => {
            let (b, c) = doc.module_coalgebra::<F>()?;
            check_module_coalgebra(&b, &c)
        }
        VerifyKind::ComoduleAlgebra => {
            let (b, a) = doc.comodule_algebra::<F>()?;
            check_comodule_algebra(&b, &a)
        }
        VerifyKind::DkDatum => check_dk_datum(&doc.dk_datum::<F>()?),
        VerifyKind::DkModule => {
            let (d, m) = doc.dk_module::<F>()?;
            let mut report = check_dk_module(&d, &m);
            report.absorb("datum", check_dk_datum(&d));
            report
        }
    };
    Ok(labeled(path, report))
}

/// Stops with the input's report when it fails.
fn gate(reports: &mut Vec<Report>, report: Report) -> bool {
    let ok = report.passed();
    reports.push(report);
    ok
}

fn setting<F: Field>(h: WeakHopf<F>) -> Result<WeakSetting<F>, CliError> {
    Ok(WeakSetting::new(h)?)
}

fn same_bialgebroid<F: Field>(file: &Bialgebroid<F>, w: &WeakSetting<F>) -> Result<(), CliError> {
    if schema::bialgebroid_json(file, None) != schema::bialgebroid_json(&w.bialgebroid, None) {
        return Err(CliError::Usage("the bialgebroid of the input is not the one built from --weak-hopf".into()));
    }
    Ok(())
}

fn weak_hopf_arg<F: Field>(path: Option<&Path>) -> Result<WeakSetting<F>, CliError> {
    let path = path.ok_or_else(|| CliError::Usage("translating back needs --weak-hopf FILE".into()))?;
    let h = schema::load(path)?.weak_hopf::<F>()?;
    setting(h)
}

fn build<F: Field>(kind: BuildKind, path: &Path, weak_hopf: Option<&Path>) -> Result<Outcome, CliError> {
    let doc = schema::load(path)?;
    let mut reports = Vec::new();
    let document = match kind {
        BuildKind::Bialgebroid => {
            let h = doc.weak_hopf::<F>()?;
            if !gate(&mut reports, labeled(path, check_weak_hopf(&h))) {
                None
            } else {
                let base = extract_base(&h)?;
                let b = from_weak_hopf(&h, &base)?;
                reports.push(check_bialgebroid(&b));
                let sep = Separability { idempotent: base.idempotent.clone(), functional: base.frobenius.clone() };
                Some(schema::bialgebroid_json(&b, Some(&sep)))
            }
        }
        BuildKind::WeakBialgebra => {
            let (b, sep) = doc.bialgebroid::<F>()?;
            let sep = sep.ok_or_else(|| {
                CliError::Usage("building a weak bialgebra needs a `separability` entry in the bialgebroid".into())
            })?;
            if !gate(&mut reports, labeled(path, check_bialgebroid(&b))) {
                None
            } else {
                let (alg, coalg) = to_weak_bialgebra(&b, &sep.idempotent, &sep.functional)?;
                reports.push(check_weak_bialgebra(&alg, &coalg));
                Some(schema::weak_bialgebra_json(&alg, &coalg))
            }
        }
        BuildKind::DkCoring => {
            let d = doc.dk_datum::<F>()?;
            if !gate(&mut reports, labeled(path, check_dk_datum(&d))) {
                None
            } else {
                let coring = build_dk_coring(&d)?.coring(&d)?;
                reports.push(check_coring(&coring));
                Some(schema::coring_json(&coring))
            }
        }
        BuildKind::WeakCoringIso => {
            let d = doc.weak_dk_datum::<F>()?;
            if !gate(&mut reports, labeled(path, check_weak_dk_components(&d))) {
                None
            } else {
                let w = setting(d.hopf.clone())?;
                let forward = datum_forward(&w, &d)?;
                let dk = build_dk_coring(&forward)?;
                let coring = dk.coring(&forward)?;
                let iso = build_weak_coring(&d, &dk)?;
                reports.push(check_weak_coring_iso(&d, &dk, &iso, Some(&coring)));
                Some(schema::weak_coring_iso_json(&d, &iso))
            }
        }
        BuildKind::TranslateCa => match doc.kind()? {
            "weak-comodule-algebra" => {
                let (h, a) = doc.weak_comodule_algebra::<F>()?;
                if !gate(&mut reports, labeled(path, check_weak_comodule_algebra(&h, &a))) {
                    None
                } else {
                    let w = setting(h)?;
                    let out = comodule_algebra_forward(&w, &a)?;
                    reports.push(check_comodule_algebra(&w.bialgebroid, &out));
                    Some(schema::comodule_algebra_json(&w.bialgebroid, &out))
                }
            }
            _ => {
                let (b, a) = doc.comodule_algebra::<F>()?;
                let w = weak_hopf_arg::<F>(weak_hopf)?;
                same_bialgebroid(&b, &w)?;
                if !gate(&mut reports, labeled(path, check_comodule_algebra(&b, &a))) {
                    None
                } else {
                    let out = comodule_algebra_backward(&w, &a)?;
                    reports.push(check_weak_comodule_algebra(&w.hopf, &out));
                    Some(schema::weak_comodule_algebra_json(&w.hopf, &out))
                }
            }
        },
        BuildKind::TranslateMc => match doc.kind()? {
            "weak-module-coalgebra" => {
                let (h, c) = doc.weak_module_coalgebra::<F>()?;
                if !gate(&mut reports, labeled(path, check_weak_module_coalgebra(&h, &c))) {
                    None
                } else {
                    let w = setting(h)?;
                    let out = module_coalgebra_forward(&w, &c)?;
                    reports.push(check_module_coalgebra(&w.bialgebroid, &out));
                    Some(schema::module_coalgebra_json(&w.bialgebroid, &out))
                }
            }
            _ => {
                let (b, c) = doc.module_coalgebra::<F>()?;
                let w = weak_hopf_arg::<F>(weak_hopf)?;
                same_bialgebroid(&b, &w)?;
                if !gate(&mut reports, labeled(path, check_module_coalgebra(&b, &c))) {
                    None
                } else {
                    let out = module_coalgebra_backward(&w, &c)?;
                    reports.push(check_weak_module_coalgebra(&w.hopf, &out));
                    Some(schema::weak_module_coalgebra_json(&w.hopf, &out))
                }
            }
        },
    };
    Ok(Outcome { reports, document, reports_on_stdout: false })
}

fn missing_certificate(subject: &str) -> Report {
    let mut report = Report::new(subject);
    let mut law = Law::new("certificate.exists");
    law.fail(&[], "the defining conditions have no solution");
    report.push(law.finish());
    report
}

fn check<F: Field>(kind: CheckKind, path: &Path, cert: Option<&Path>, search: bool) -> Result<Outcome, CliError> {
    let doc = schema::load(path)?;
    if kind == CheckKind::DkIso {
        let d = doc.weak_dk_datum::<F>()?;
        let mut report = Report::new("weak coring isomorphism");
        report.absorb("datum", check_weak_dk_components(&d));
        if report.passed() {
            let w = setting(d.hopf.clone())?;
            let forward = datum_forward(&w, &d)?;
            let dk = build_dk_coring(&forward)?;
            let coring = dk.coring(&forward)?;
            let iso = build_weak_coring(&d, &dk)?;
            merge(&mut report, check_weak_coring_iso(&d, &dk, &iso, Some(&coring)));
        }
        return Ok(Outcome { reports: vec![labeled(path, report)], document: None, reports_on_stdout: true });
    }

    let d = doc.dk_datum::<F>()?;
    let subject = match kind {
        CheckKind::InductionSep => "induction separability",
        _ => "forgetful separability",
    };
    let mut combined = Report::new(subject);
    combined.absorb("datum", check_dk_datum(&d));
    if !combined.passed() {
        return Ok(Outcome { reports: vec![labeled(path, combined)], document: None, reports_on_stdout: true });
    }
    let given = match (cert, search) {
        (Some(_), true) => return Err(CliError::Usage("give either --certificate or --search-certificate".into())),
        (None, false) => return Err(CliError::Usage("needs --certificate FILE or --search-certificate".into())),
        (Some(p), false) => Some(certificate_for(&schema::load(p)?, &d)?),
        (None, true) => None,
    };
    let dk = build_dk_coring(&d)?;
    let cc = &d.coalgebra.coring.tensor;
    let (report, document) = match (kind, given) {
        (CheckKind::InductionSep, None) => match search_induction_certificate(&d)? {
            Some(e) => (
                check_induction_separable(&d, &e),
                Some(schema::certificate_json(&Certificate::Induction(dk.tensor.lift(&e)))),
            ),
            None => (missing_certificate(subject), None),
        },
        (CheckKind::InductionSep, Some(Certificate::Induction(e))) => {
            (check_induction_separable(&d, &dk.tensor.project(&e)), None)
        }
        (CheckKind::ForgetfulSep, None) => match search_forgetful_certificate(&d)? {
            Some(g) => (
                check_forgetful_separable(&d, &g),
                Some(schema::certificate_json(&Certificate::Forgetful(g.mul(cc.quotient().projection())))),
            ),
            None => (missing_certificate(subject), None),
        },
        (CheckKind::ForgetfulSep, Some(Certificate::Forgetful(g))) => {
            let mut law = Law::new("well_defined");
            let descended = cc.descend(&g, &mut law);
            let mut report = Report::new(subject);
            report.push(law.finish());
            let rest = check_forgetful_separable(&d, &descended);
            report.absorb("conditions", rest);
            (report, None)
        }
        (_, Some(_)) => return Err(CliError::Usage("certificate kind does not match the check".into())),
        (CheckKind::DkIso, None) => unreachable!("handled above"),
    };
    merge(&mut combined, report);
    Ok(Outcome { reports: vec![labeled(path, combined)], document, reports_on_stdout: true })
}

fn merge(into: &mut Report, other: Report) {
    for law in other.laws {
        into.push(law);
    }
}

fn certificate_for<F: Field>(doc: &Doc, d: &DkDatum<F>) -> Result<Certificate<F>, CliError> {
    let (nc, na) = (d.coalgebra.dim(), d.algebra.dim());
    Ok(doc.certificate::<F>(nc * na, nc * nc, na)?)
}

fn corpus<F: Field>(kind: CorpusKind, n: usize) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Usage("the size must be positive".into()));
    }
    let document = match kind {
        CorpusKind::Group => schema::weak_hopf_json(&cyclic_group_algebra::<F>(n)),
        CorpusKind::PairGroupoid => schema::weak_hopf_json(&pair_groupoid_algebra::<F>(n)),
        CorpusKind::Re => {
            let b = re_bialgebroid(&FinAlgebra::<F>::diagonal(n))?;
            let mut idempotent = vec![F::zero(); n * n];
            for i in 0..n {
                idempotent = add(&idempotent, &tensor_vec(&unit_vector::<F>(n, i), &unit_vector::<F>(n, i)));
            }
            let functional = Matrix::from_rows(1, n, vec![vec![F::one(); n]]).expect("functional shape");
            schema::bialgebroid_json(&b, Some(&Separability { idempotent, functional }))
        }
    };
    Ok(Outcome { reports: Vec::new(), document: Some(document), reports_on_stdout: false })
}

fn add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn reports_json(reports: &[Report]) -> String {
    let mut s = match reports {
        [one] => serde_json::to_string_pretty(one),
        many => serde_json::to_string_pretty(many),
    }
    .expect("reports serialize");
    s.push('\n');
    s
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit(cli: &Cli, outcome: &Outcome) -> anyhow::Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let reports = reports_json(&outcome.reports);
    if let Some(path) = &cli.report {
        write_file(path, &reports)?;
    }
    if outcome.reports_on_stdout || (outcome.document.is_none() && !outcome.reports.is_empty()) {
        out.write_all(reports.as_bytes())?;
    }
    if let Some(doc) = &outcome.document {
        let text = schema::render(doc);
        match &cli.output {
            Some(path) => write_file(path, &text)?,
            None if !outcome.reports_on_stdout => out.write_all(text.as_bytes())?,
            None => {}
        }
    }
    Ok(())
}

/// Parses `args`, runs the command and writes its outputs. Returns the
/// process exit status: 0 on pass, 1 on a failed verification, 2 on a
/// usage, parse or schema error.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return u8::try_from(e.exit_code()).unwrap_or(2);
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Construction(StructureError::Verification { report, .. }) = &e {
                let _ =
                    emit(&cli, &Outcome { reports: vec![(**report).clone()], document: None, reports_on_stdout: true });
            }
            return e.exit_code();
        }
    };
    if let Err(e) = emit(&cli, &outcome) {
        eprintln!("error: {e:#}");
        return 2;
    }
    if outcome.passed() {
        0
    } else {
        1
    }
}
