//! The `triaut` command line. [`run`] is the whole program minus process
//! I/O, so it can be driven from tests.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::analysis::{self, Diagonalization};
use crate::document::AutomorphismDocument;
use crate::endomorphism::{Elementary, Endomorphism};
use crate::error::{Error, ParseError};
use crate::group_word::GroupWord;
use crate::parse::{parse_elementary, parse_endomorphism, parse_polynomial};
use crate::polynomial::{AlgebraMode, Budget, Polynomial};
use crate::presentation::{self, BWord, RelationFamily};
use crate::scalar::{parse_scalar, Scalar};
use crate::structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    Poly,
    Free,
}

impl From<AlgebraArg> for AlgebraMode {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Poly => AlgebraMode::Commutative,
            AlgebraArg::Free => AlgebraMode::Free,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "triaut", version, about = "Exact computations with triangular automorphisms")]
struct Cli {
    /// `poly` for Q[x1..xn], `free` for Q<x1..xn> (default poly)
    #[arg(long, global = true, value_enum)]
    algebra: Option<AlgebraArg>,
    /// Number of variables; taken from the automorphism document when omitted
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Maximum number of terms in any intermediate polynomial
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    output: OutputArg,
    #[command(subcommand)]
    command: Command,
}

/// An automorphism: a JSON document, `@path` to one, or `(img1, ..., imgn)`.
#[derive(Debug, Args)]
struct Auto {
    #[arg(long)]
    auto: String,
}

#[derive(Debug, Args)]
struct ElementOrAuto {
    /// `sigma(i, alpha; poly)`
    #[arg(long, conflicts_with = "auto", allow_hyphen_values = true)]
    elem: Option<String>,
    #[arg(long)]
    auto: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Left-to-right product of one or more automorphisms
    Compose {
        #[arg(long, required = true)]
        auto: Vec<String>,
    },
    Invert(Auto),
    Power {
        #[command(flatten)]
        map: Auto,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// `[a, b] = a^-1 b^-1 a b`
    Commutator {
        #[arg(long, num_args = 1, required = true)]
        auto: Vec<String>,
    },
    /// Layer factors of a unitriangular automorphism, `G_n` first
    Factorize {
        #[command(flatten)]
        map: Auto,
        #[arg(long)]
        check: bool,
    },
    /// A derived-subgroup element as one commutator
    CommExpress {
        #[command(flatten)]
        map: Auto,
        #[arg(long)]
        check: bool,
    },
    /// `sigma(i, 1, g)` as `[sigma(i, 1, f), sigma(j, 1, h)]`
    LayerComm {
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Defaults to `i + 1`
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        h: String,
        #[arg(long)]
        check: bool,
    },
    /// Solve `f(.., x_i + a, ..) - f = g`
    SolveDiff {
        #[arg(long)]
        var: usize,
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Elementary automorphism to `phi`/`t` word, or a word to its map
    Translate {
        #[arg(long, conflicts_with = "word", required_unless_present = "word", allow_hyphen_values = true)]
        elem: Option<String>,
        #[arg(long)]
        word: Option<String>,
    },
    /// Check relation families on seeded random instances
    CheckRelations {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// One of R1, R2_1, R2_2, R3, R4, R5, R6, R7 (default all)
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Degree-growth certificate for a word in `sigma(1, alpha, f)`, `sigma(2, beta, g)`
    FreeCheck {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    ClassifyPair {
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
    },
    /// `x1^w - x1` for `w = [phi_p^l, _m [chi^l, psi^l]]` in `P_3`
    NonlinWitness {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        /// Print only the value at `x2 = 0`
        #[arg(long)]
        at_zero: bool,
    },
    Order(ElementOrAuto),
    Diag {
        #[command(flatten)]
        input: ElementOrAuto,
        #[arg(long)]
        check: bool,
    },
    IaLevel(Auto),
    FixSplit {
        #[command(flatten)]
        map: Auto,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Lib(Error::Parse(e))
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Ctx {
    algebra: Option<AlgebraMode>,
    n: Option<usize>,
    budget: Budget,
    json: bool,
}

fn mode_name(mode: AlgebraMode) -> &'static str {
    mode.name()
}

impl Ctx {
    fn mode(&self) -> AlgebraMode {
        self.algebra.unwrap_or(AlgebraMode::Commutative)
    }

    fn n_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }

    fn require_n(&self) -> CliResult<usize> {
        self.n.ok_or_else(|| Failure::Usage("--n is required for this command".into()))
    }

    fn poly(&self, text: &str, n: usize) -> CliResult<Polynomial> {
        Ok(parse_polynomial(text, self.mode(), n)?)
    }

    fn auto(&self, arg: &str) -> CliResult<Endomorphism> {
        let text = match arg.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| Failure::Lib(Error::Document(format!("cannot read {path}: {e}"))))?,
            None => arg.to_string(),
        };
        let trimmed = text.trim_start();
        let phi = if trimmed.starts_with('{') {
            let doc = AutomorphismDocument::from_json(&text)?;
            if let Some(mode) = self.algebra {
                if mode != doc.algebra {
                    return Err(Error::ModeMismatch { left: mode, right: doc.algebra }.into());
                }
            }
            doc.to_endomorphism()?
        } else {
            parse_endomorphism(&text, self.mode())?
        };
        if let Some(n) = self.n {
            if n != phi.n() {
                return Err(Error::ArityMismatch { left: n, right: phi.n() }.into());
            }
        }
        Ok(phi)
    }

    fn elementary(&self, text: &str, n: usize) -> CliResult<Elementary> {
        Ok(parse_elementary(text, self.mode(), n)?)
    }

    fn element(&self, input: &ElementOrAuto) -> CliResult<Elementary> {
        match (&input.elem, &input.auto) {
            (Some(e), _) => self.elementary(e, self.require_n()?),
            (None, Some(a)) => Ok(Elementary::from_endomorphism(&self.auto(a)?)?),
            (None, None) => Err(Failure::Usage("one of --elem or --auto is required".into())),
        }
    }
}

fn scalar_arg(text: &str) -> CliResult<Scalar> {
    parse_scalar(text.trim()).ok_or_else(|| ParseError::new(1, format!("invalid scalar '{text}'")).into())
}

fn map_json(phi: &Endomorphism) -> Value {
    serde_json::to_value(AutomorphismDocument::from(phi)).expect("document serializes")
}

fn poly_json(p: &Polynomial) -> Value {
    json!({ "algebra": mode_name(p.mode()), "n": p.n(), "polynomial": p.to_string() })
}

fn elem_json(e: &Elementary) -> Value {
    json!({ "index": e.index(), "alpha": e.alpha().to_string(), "f": e.f().to_string() })
}

/// Text and JSON renderings of one result.
struct Report {
    text: String,
    json: Value,
}

fn report(text: impl Into<String>, json: Value) -> Report {
    Report { text: text.into(), json }
}

fn map_report(phi: &Endomorphism) -> Report {
    report(phi.to_string(), map_json(phi))
}

fn execute(ctx: &Ctx, command: Command) -> CliResult<Report> {
    let budget = &ctx.budget;
    match command {
        Command::Compose { auto } => {
            let maps = auto.iter().map(|a| ctx.auto(a)).collect::<CliResult<Vec<_>>>()?;
            let mut acc = maps[0].clone();
            for phi in &maps[1..] {
                acc = acc.compose_within(phi, budget)?;
            }
            Ok(map_report(&acc))
        }
        Command::Invert(a) => Ok(map_report(&ctx.auto(&a.auto)?.inverse()?)),
        Command::Power { map, k } => Ok(map_report(&ctx.auto(&map.auto)?.power_within(k, budget)?)),
        Command::Commutator { auto } => {
            if auto.len() != 2 {
                return Err(Failure::Usage("commutator needs exactly two --auto arguments".into()));
            }
            let (a, b) = (ctx.auto(&auto[0])?, ctx.auto(&auto[1])?);
            Ok(map_report(&a.commutator_within(&b, budget)?))
        }
        Command::Factorize { map, check } => {
            let phi = ctx.auto(&map.auto)?;
            let fac = structure::factorize_unitriangular(&phi)?;
            if check && fac.recompose()? != phi {
                return Err(Error::CheckFailed("factors do not recompose to the input".into()).into());
            }
            let json = json!({ "factors": fac.factors.iter().map(elem_json).collect::<Vec<_>>() });
            Ok(report(fac.to_string(), json))
        }
        Command::CommExpress { map, check } => {
            let omega = ctx.auto(&map.auto)?;
            let expr = structure::express_as_single_commutator(&omega)?;
            if check && (expr.evaluate()? != omega || !expr.parts_in_layers()) {
                return Err(Error::CheckFailed("commutator does not evaluate to the input".into()).into());
            }
            let mut text = format!("left: {}\nright: {}", expr.left, expr.right);
            for (k, part) in expr.parts.iter().enumerate() {
                write!(text, "\nphi{}: {part}", k + 1).expect("write to string");
            }
            let json = json!({
                "left": map_json(&expr.left),
                "right": map_json(&expr.right),
                "parts": expr.parts.iter().map(elem_json).collect::<Vec<_>>(),
            });
            Ok(report(text, json))
        }
        Command::LayerComm { i, g, j, h, check } => {
            let n = ctx.require_n()?;
            let target = Elementary::unipotent(i, ctx.poly(&g, n)?)?;
            let (phi, psi) = structure::express_in_layer_commutator(&target, j.unwrap_or(i + 1), &scalar_arg(&h)?)?;
            if check && phi.to_endomorphism().commutator(&psi.to_endomorphism())? != target.to_endomorphism() {
                return Err(Error::CheckFailed("commutator does not equal the target".into()).into());
            }
            Ok(report(format!("phi: {phi}\npsi: {psi}"), json!({ "phi": elem_json(&phi), "psi": elem_json(&psi) })))
        }
        Command::SolveDiff { var, shift, g } => {
            let n = ctx.require_n()?;
            let f = structure::solve_difference(&ctx.poly(&g, n)?, var, &scalar_arg(&shift)?)?;
            Ok(report(f.to_string(), poly_json(&f)))
        }
        Command::Translate { elem, word } => match (elem, word) {
            (Some(e), _) => {
                let n = ctx.require_n()?;
                let w = presentation::to_b_generators(&ctx.elementary(&e, n)?)?;
                Ok(report(w.to_string(), json!({ "word": w.to_string() })))
            }
            (None, Some(w)) => {
                let n = ctx.require_n()?;
                let word = BWord::parse(&w, ctx.mode(), n)?;
                Ok(map_report(&presentation::evaluate_b_word(&word, ctx.mode(), n)?))
            }
            (None, None) => Err(Failure::Usage("one of --elem or --word is required".into())),
        },
        Command::CheckRelations { seed, count, family, max_degree } => {
            let n = ctx.n_or(4);
            let families: Vec<RelationFamily> = match family {
                Some(name) => vec![RelationFamily::from_name(&name)
                    .ok_or_else(|| Failure::Usage(format!("unknown relation family '{name}'")))?],
                None => RelationFamily::ALL.to_vec(),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            let mut failed = Vec::new();
            for fam in families {
                let mut held = 0;
                let mut tried = 0;
                for _ in 0..count {
                    let Some(inst) = presentation::random_instance(&mut rng, fam, ctx.mode(), n, max_degree) else {
                        break;
                    };
                    tried += 1;
                    if inst.check()?.holds {
                        held += 1;
                    } else {
                        failed.push(format!("{inst:?}"));
                    }
                }
                let status = if tried == 0 {
                    format!("skipped (needs n >= {})", fam.min_n())
                } else {
                    format!("{held}/{tried} hold")
                };
                lines.push(format!("{}: {status}", fam.name()));
                rows.push(json!({ "family": fam.name(), "tried": tried, "held": held }));
            }
            if !failed.is_empty() {
                return Err(Error::CheckFailed(format!("{} instance(s) failed: {}", failed.len(), failed[0])).into());
            }
            Ok(report(lines.join("\n"), json!({ "seed": seed, "n": n, "families": rows })))
        }
        Command::FreeCheck { f, g, alpha, beta, word } => {
            let n = ctx.n_or(2);
            let phi = Elementary::new(1, scalar_arg(&alpha)?, ctx.poly(&f, n)?)?;
            let psi = Elementary::new(2, scalar_arg(&beta)?, ctx.poly(&g, n)?)?;
            let word = GroupWord::parse(&word)?;
            let c = analysis::free_pair_check_within(&phi, &psi, &word, budget)?;
            let text = format!(
                "p: {}\nq: {}\nword: {}\nnormalized: {}\nconjugator: {}\nm: {}\nobserved degree: {}\nexpected degree: {}\nvalid: {}",
                c.p, c.q, c.word, c.normalized, c.conjugator, c.m, c.observed_degree, c.expected_degree, c.valid
            );
            let json = json!({
                "p": c.p, "q": c.q, "word": c.word.to_string(), "normalized": c.normalized.to_string(),
                "conjugator": c.conjugator.to_string(), "m": c.m, "observed_degree": c.observed_degree,
                "expected_degree": c.expected_degree, "valid": c.valid,
            });
            Ok(report(text, json))
        }
        Command::ClassifyPair { e1, e2 } => {
            let n = ctx.require_n()?;
            let v = analysis::classify_pair(&ctx.elementary(&e1, n)?, &ctx.elementary(&e2, n)?)?;
            Ok(report(v.to_string(), json!({ "class": v.class.name(), "reason": v.reason })))
        }
        Command::NonlinWitness { p, l, m, at_zero } => {
            if let Some(n) = ctx.n {
                if n != 3 {
                    return Err(Error::ArityMismatch { left: n, right: 3 }.into());
                }
            }
            let w = analysis::nonlinearity_witness_within(p, l, m, budget)?;
            if at_zero {
                let v = analysis::value_at_zero(&w)?;
                Ok(report(v.to_string(), json!({ "value_at_zero": v.to_string() })))
            } else {
                Ok(report(w.to_string(), poly_json(&w)))
            }
        }
        Command::Order(input) => {
            let order = analysis::element_order(&ctx.element(&input)?);
            let json = match order {
                analysis::ElementOrder::Finite(m) => json!({ "order": "finite", "m": m }),
                analysis::ElementOrder::Infinite => json!({ "order": "infinite" }),
            };
            Ok(report(order.to_string(), json))
        }
        Command::Diag { input, check } => {
            let e = ctx.element(&input)?;
            match analysis::diagonalize_elementary(&e)? {
                Diagonalization::Conjugator { c, d } => {
                    if check && e.to_endomorphism().conjugate(&c.to_endomorphism())? != d {
                        return Err(Error::CheckFailed("conjugation does not give the reported map".into()).into());
                    }
                    Ok(report(
                        format!("c: {c}\nd: {d}"),
                        json!({ "diagonalizable": true, "c": elem_json(&c), "d": map_json(&d) }),
                    ))
                }
                Diagonalization::NotDiagonalizable => {
                    Ok(report("not diagonalizable", json!({ "diagonalizable": false })))
                }
            }
        }
        Command::IaLevel(a) => {
            let level = analysis::ia_level(&ctx.auto(&a.auto)?)?;
            let json = match level {
                analysis::IaLevel::Level(k) => json!({ "ia": true, "level": k }),
                analysis::IaLevel::NotIA => json!({ "ia": false }),
                analysis::IaLevel::Unbounded => json!({ "ia": true, "level": null }),
            };
            Ok(report(level.to_string(), json))
        }
        Command::FixSplit { map, f } => {
            let phi = ctx.auto(&map.auto)?;
            let f = parse_polynomial(&f, phi.mode(), phi.n())?;
            let (f1, f2) = analysis::fix_ifix_split(&f, &phi)?;
            Ok(report(
                format!("fix: {f1}\nifix: {f2}"),
                json!({ "fix": f1.to_string(), "ifix": f2.to_string() }),
            ))
        }
    }
}

/// Runs one invocation. Exit codes: 0 success, 1 domain error, 2 parse or
/// usage error.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    if cli.n == Some(0) {
        return Outcome { code: 2, stdout: String::new(), stderr: "error: --n must be at least 1\n".into() };
    }
    if cli.budget == Some(0) {
        return Outcome { code: 2, stdout: String::new(), stderr: "error: --budget must be at least 1\n".into() };
    }
    let ctx = Ctx {
        algebra: cli.algebra.map(AlgebraMode::from),
        n: cli.n,
        budget: cli.budget.map_or(Budget::UNLIMITED, Budget::terms),
        json: cli.output == OutputArg::Json,
    };
    match execute(&ctx, cli.command) {
        Ok(r) => {
            let body = if ctx.json { r.json.to_string() } else { r.text };
            Outcome { code: 0, stdout: format!("{body}\n"), stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Lib(e)) => {
            let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}
