//! Command-line front end. Exit codes: 0 pass, 1 mathematical failure, 2 input failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::braiding::{assemble_sigma, certify_quadruple, decompose_sigma, search_braidings, sigma_tsv, BraidingError};
use crate::crossed::{factorize, transform_by_lazy_cocycle, verify_crossed_system, CertifiedSystem, CrossedError, CrossedSystemData};
use crate::field::Field;
use crate::hopf::{derive_antipode, verify_hopf, AxiomReport, HopfData, HopfError};
use crate::io::{self, CrossedDoc, IoError, MapDoc, QuadrupleDoc};
use crate::polybraid::{br_axioms_bounded, closed_form_sigma, PolySigmaParams};
use crate::structure::{integrals, is_semisimple, Side};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hopfcross", version, about = "Exact verification of Hopf algebras, crossed products and braidings")]
pub struct Cli {
    /// Ground field: `rational`, `cyclotomic:N` or `qN`.
    #[arg(long, global = true)]
    pub field: Option<Field>,
    /// Machine-readable reports.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    #[command(subcommand)]
    Hopf(HopfCmd),
    #[command(subcommand)]
    Crossed(CrossedCmd),
    #[command(subcommand)]
    Braid(BraidCmd),
    #[command(subcommand)]
    Poly(PolyCmd),
}

#[derive(Debug, Subcommand)]
pub enum HopfCmd {
    /// Check every Hopf algebra axiom.
    Check { path: PathBuf },
    /// Derive the antipode as the convolution inverse of the identity.
    Antipode { path: PathBuf },
    /// Solve for the space of integrals.
    Integrals {
        path: PathBuf,
        #[arg(long, default_value = "right")]
        side: Side,
    },
    /// Decide semisimplicity by the counit of an integral.
    Semisimple { path: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CrossedCmd {
    /// Check the crossed system axioms.
    Check { system: PathBuf },
    /// Build the crossed product Hopf algebra.
    Build { system: PathBuf },
    /// Recover a crossed system from E and embeddings of A and H.
    Factorize { e: PathBuf, a_embed: PathBuf, h_embed: PathBuf },
    /// Transform a system by a lazy cocycle map H → A.
    Transform { system: PathBuf, u: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum BraidCmd {
    /// Certify a braiding quadruple against a system.
    Check { system: PathBuf, quadruple: PathBuf },
    /// Assemble the braiding of the crossed product.
    Assemble { system: PathBuf, quadruple: PathBuf },
    /// Split a braiding of the crossed product into its quadruple.
    Decompose { system: PathBuf, sigma: PathBuf },
    /// Enumerate certified instances of a quadruple template.
    Search {
        system: PathBuf,
        template: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        max_search: u128,
    },
    /// Assemble and print the braiding as a TSV table.
    Table { system: PathBuf, quadruple: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum PolyCmd {
    /// Closed-form braiding value on X^a⊗X^b, X^c⊗X^d.
    Sigma {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        d: u32,
        /// `s_p,s_tau,s_u,s_v`
        #[arg(long)]
        params: String,
    },
    /// Bounded check of BR1–BR5 on the closed form.
    Verify {
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 6)]
        degree: u32,
    },
}

enum Failure {
    Input(String),
    Math(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Hopf(HopfError::NoAntipode) => Failure::Math(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn math(e: impl std::fmt::Display) -> Failure {
    Failure::Math(e.to_string())
}

/// What a command produced: a document to emit and whether it counts as a pass.
struct Outcome {
    body: String,
    passed: bool,
    /// Extra text for stderr, e.g. a failed certification report.
    diagnostics: Option<String>,
}

impl Outcome {
    fn doc(body: String) -> Self {
        Outcome { body, passed: true, diagnostics: None }
    }
}

struct Session {
    field: Option<Field>,
    json: bool,
}

impl Session {
    fn report(&self, r: &AxiomReport) -> Outcome {
        let body = if self.json { io::to_json(r) } else { format!("{r}\n") };
        Outcome { body, passed: r.all_passed(), diagnostics: None }
    }

    fn render<T: Serialize>(&self, v: &T, text: impl FnOnce() -> String) -> String {
        if self.json {
            io::to_json(v)
        } else {
            text()
        }
    }

    fn hopf(&self, path: &Path) -> Result<HopfData, Failure> {
        Ok(io::load_hopf(path, self.field)?)
    }

    fn system(&self, path: &Path) -> Result<CrossedSystemData, Failure> {
        Ok(io::load_system(path, self.field)?)
    }

    fn certified(&self, path: &Path) -> Result<CertifiedSystem, Failure> {
        CertifiedSystem::certify(self.system(path)?).map_err(certification_failure)
    }

    fn quad_field(&self, s: &CrossedSystemData, quad: &Path) -> Result<Field, Failure> {
        let f = io::quadruple_field(quad, s)?;
        Ok(match self.field {
            Some(g) => io::join_fields(f, g)?,
            None => f,
        })
    }

    fn run(&self, cmd: &Command) -> Result<Outcome, Failure> {
        match cmd {
            Command::Hopf(c) => self.run_hopf(c),
            Command::Crossed(c) => self.run_crossed(c),
            Command::Braid(c) => self.run_braid(c),
            Command::Poly(c) => self.run_poly(c),
        }
    }

    fn run_hopf(&self, cmd: &HopfCmd) -> Result<Outcome, Failure> {
        match cmd {
            HopfCmd::Check { path } => Ok(self.report(&verify_hopf(&self.hopf(path)?))),
            HopfCmd::Antipode { path } => {
                let h = self.hopf(path)?;
                let s = derive_antipode(&h).map_err(math)?;
                Ok(Outcome::doc(io::map_json(&s, Some(h.labels.clone()))))
            }
            HopfCmd::Integrals { path, side } => {
                let h = self.hopf(path)?;
                let space = integrals(&h, *side);
                let body = self.render(&space, || {
                    let mut t = format!("{} {side:?} integrals, dimension {}\n", h.name, space.dim()).to_lowercase();
                    for (v, e) in space.basis.iter().zip(&space.epsilon_values) {
                        t.push_str(&format!("{}  eps = {e}\n", h.render(&v.coords)));
                    }
                    t
                });
                Ok(Outcome::doc(body))
            }
            HopfCmd::Semisimple { path } => {
                let h = self.hopf(path)?;
                let s = is_semisimple(&h);
                let body = self.render(&s, || {
                    let w = s.witness.as_ref().map(|w| h.render(&w.coords)).unwrap_or_else(|| "none".into());
                    format!("semisimple: {}\nintegral: {w}\n", s.semisimple)
                });
                Ok(Outcome::doc(body))
            }
        }
    }

    fn run_crossed(&self, cmd: &CrossedCmd) -> Result<Outcome, Failure> {
        match cmd {
            CrossedCmd::Check { system } => Ok(self.report(&verify_crossed_system(&self.system(system)?))),
            CrossedCmd::Build { system } => {
                let data = self.system(system)?;
                let report = verify_crossed_system(&data);
                if !report.all_passed() {
                    return Ok(Outcome { body: String::new(), passed: false, diagnostics: Some(format!("{report}\n")) });
                }
                let s = CertifiedSystem::certify(data).map_err(certification_failure)?;
                Ok(Outcome::doc(io::hopf_json(s.product())))
            }
            CrossedCmd::Factorize { e, a_embed, h_embed } => {
                let e = self.hopf(e)?;
                let (ia, la) = io::load_map(a_embed, e.field)?;
                let (ih, lh) = io::load_map(h_embed, e.field)?;
                let la = la.unwrap_or_else(|| (0..ia.cols()).map(|i| format!("a{i}")).collect());
                let lh = lh.unwrap_or_else(|| (0..ih.cols()).map(|i| format!("h{i}")).collect());
                let w = factorize(&e, &ia, &ih, la, lh).map_err(factorize_failure)?;
                let doc = json!({
                    "system": CrossedDoc::from_system(w.recovered.data()),
                    "iso": MapDoc::from_map(&w.iso, Some(w.recovered.product().labels.clone())),
                });
                Ok(Outcome::doc(io::to_json(&doc)))
            }
            CrossedCmd::Transform { system, u } => {
                let s = self.certified(system)?;
                let (u, _) = io::load_map(u, s.product().field)?;
                let (t, _) = transform_by_lazy_cocycle(&s, &u).map_err(math)?;
                Ok(Outcome::doc(io::system_json(t.data())))
            }
        }
    }

    fn run_braid(&self, cmd: &BraidCmd) -> Result<Outcome, Failure> {
        match cmd {
            BraidCmd::Check { system, quadruple } => {
                let s = self.system(system)?;
                let f = self.quad_field(&s, quadruple)?;
                let q = io::load_quadruple(quadruple, &s, f)?;
                Ok(self.report(&certify_quadruple(&s, &q)))
            }
            BraidCmd::Assemble { system, quadruple } | BraidCmd::Table { system, quadruple } => {
                let s = self.certified(system)?;
                let f = self.quad_field(&s, quadruple)?;
                let q = io::load_quadruple(quadruple, &s, f)?;
                let sigma = match assemble_sigma(&s, &q) {
                    Ok(x) => x,
                    Err(e @ (BraidingError::QuadrupleNotCertified(_) | BraidingError::NotABraiding(_))) => {
                        return Ok(Outcome { body: String::new(), passed: false, diagnostics: Some(format!("{e}\n")) })
                    }
                    Err(e) => return Err(Failure::Input(e.to_string())),
                };
                let labels = &s.product().labels;
                let body = match cmd {
                    BraidCmd::Table { .. } => sigma_tsv(&sigma, labels, labels),
                    _ => io::pairing_json(&sigma, "A#H", "A#H", Some(f).filter(|f| *f != Field::Rational)),
                };
                Ok(Outcome::doc(body))
            }
            BraidCmd::Decompose { system, sigma } => {
                let s = self.certified(system)?;
                let f = match self.field {
                    Some(g) => io::join_fields(s.product().field, g)?,
                    None => s.product().field,
                };
                let sigma = io::load_pairing(sigma, &s, f)?;
                match decompose_sigma(&s, &sigma) {
                    Ok(q) => Ok(Outcome::doc(io::quadruple_json(&q, Some(f).filter(|f| *f != Field::Rational)))),
                    Err(e @ (BraidingError::QuadrupleNotCertified(_) | BraidingError::NotABraiding(_))) => {
                        Ok(Outcome { body: String::new(), passed: false, diagnostics: Some(format!("{e}\n")) })
                    }
                    Err(e) => Err(Failure::Input(e.to_string())),
                }
            }
            BraidCmd::Search { system, template, max_search } => {
                let s = self.system(system)?;
                let doc = io::load_template(template)?;
                let f = match self.field {
                    Some(g) => io::join_fields(doc.field(&s)?, g)?,
                    None => doc.field(&s)?,
                };
                let (t, candidates) = doc.to_template(&s, f)?;
                let hits = search_braidings(&s, &t, &candidates, *max_search).map_err(|e| Failure::Input(e.to_string()))?;
                let field = Some(f).filter(|f| *f != Field::Rational);
                let list: Vec<serde_json::Value> = hits
                    .iter()
                    .map(|h| {
                        let q: QuadrupleDoc = serde_json::from_str(&io::quadruple_json(&h.quadruple, field)).expect("own output");
                        json!({
                            "assignment": t.unknowns.iter().zip(&h.assignment).map(|(n, v)| (n.clone(), v.to_string())).collect::<std::collections::BTreeMap<_, _>>(),
                            "quadruple": q,
                        })
                    })
                    .collect();
                let body = self.render(&list, || {
                    let mut out = format!("{} certified assignments\n", hits.len());
                    for h in &hits {
                        let parts: Vec<String> = t.unknowns.iter().zip(&h.assignment).map(|(n, v)| format!("{n} = {v}")).collect();
                        out.push_str(&parts.join(", "));
                        out.push('\n');
                    }
                    out
                });
                Ok(Outcome::doc(body))
            }
        }
    }

    fn run_poly(&self, cmd: &PolyCmd) -> Result<Outcome, Failure> {
        let field = self.field.unwrap_or(Field::Rational);
        let params = |text: &str| PolySigmaParams::parse(text, field).map_err(|e| Failure::Input(e.to_string()));
        match cmd {
            PolyCmd::Sigma { a, b, c, d, params: p } => {
                let v = closed_form_sigma(&params(p)?, *a, *b, *c, *d);
                let body = self.render(&json!({ "sigma": v.to_string() }), || format!("{v}\n"));
                Ok(Outcome::doc(body))
            }
            PolyCmd::Verify { params: p, degree } => Ok(self.report(&br_axioms_bounded(&params(p)?, *degree))),
        }
    }
}

fn certification_failure(e: CrossedError) -> Failure {
    match e {
        CrossedError::SystemNotCertified(r) => Failure::Math(format!("crossed system is not certified:\n{r}")),
        other => Failure::Input(other.to_string()),
    }
}

fn factorize_failure(e: CrossedError) -> Failure {
    match e {
        CrossedError::LinAlg(_) | CrossedError::Hopf(_) => Failure::Input(e.to_string()),
        other => Failure::Math(format!("{other:?}: {other}")),
    }
}

/// Caps the global thread pool from `HOPF_THREADS`.
fn configure_threads() {
    if let Some(n) = std::env::var("HOPF_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_PASS
            };
        }
    };
    configure_threads();
    let session = Session { field: cli.field, json: cli.json };
    match session.run(&cli.command) {
        Ok(o) => {
            if let Some(d) = &o.diagnostics {
                let _ = write!(err, "{d}");
            }
            if !o.body.is_empty() {
                match &cli.out {
                    Some(p) => {
                        if let Err(e) = fs::write(p, &o.body) {
                            let _ = writeln!(err, "{}: {e}", p.display());
                            return EXIT_INPUT;
                        }
                    }
                    None => {
                        let _ = write!(out, "{}", o.body);
                    }
                }
            }
            if o.passed {
                EXIT_PASS
            } else {
                EXIT_MATH
            }
        }
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Math(m)) => {
            let _ = writeln!(err, "failed: {m}");
            EXIT_MATH
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_flags_parse() {
        let cli = Cli::try_parse_from(["hopfcross", "--field", "cyclotomic:3", "--json", "poly", "verify", "--params", "1,1,1,1"]).unwrap();
        assert_eq!(cli.field, Some(Field::cyclotomic(3)));
        assert!(cli.json);
        assert!(matches!(cli.command, Command::Poly(PolyCmd::Verify { degree: 6, .. })));
        assert!(Cli::try_parse_from(["hopfcross", "--field", "cyclotomic:0", "hopf", "check", "x"]).is_err());
    }

    #[test]
    fn failure_classes() {
        let e = CrossedError::SystemNotCertified(AxiomReport::default());
        assert!(matches!(certification_failure(e), Failure::Math(_)));
        assert!(matches!(factorize_failure(CrossedError::NotNormal("x".into())), Failure::Math(_)));
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run_with(["hopfcross", "braid"], &mut out, &mut err), EXIT_INPUT);
        assert!(!err.is_empty());
        assert_eq!(run_with(["hopfcross", "--version"], &mut out, &mut err), EXIT_PASS);
    }
}
