//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and writes the report; the binary only forwards its streams.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::diagram::{alpha_pq, GaussCode};
use crate::error::Error;
use crate::fatgraph::{build_carter, EmbeddedDiagram};
use crate::fuzz::{self, FuzzConfig};
use crate::graded::{
    genus, is_cobordant, is_hyperbolic, isomorphism, p_genus, reduce_primitive, GradedMatrix, DEFAULT_COEFF_BOUND,
};
use crate::invariants::{graded_matrix_of, halves, higher_invariants, u_polynomials, DEFAULT_MAX_CROSSINGS};
use crate::linalg::is_prime;
use crate::slice::{obstruction_report, SliceConfig};
use crate::Sign;

#[derive(Parser, Debug)]
#[command(name = "knotcob", version, about = "Cobordism invariants of knots in thickened surfaces")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct CodeInput {
    /// Gauss code, e.g. "O1+ O2+ U1+ U2+"
    #[arg(long, conflicts_with = "file")]
    code: Option<String>,
    /// File holding a Gauss code
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a code and report its canonical form and Carter surface
    Validate(CodeInput),
    /// Halves, u+ and u- of a diagram
    Invariants(CodeInput),
    /// T(D) and its primitive reduction with the deletion sequence
    Matrix(CodeInput),
    /// Genus, p-genera and hyperbolicity of a matrix file, or of T_bullet of a code
    Genus {
        #[command(flatten)]
        input: CodeInput,
        /// Read a JSON matrix instead of a code
        #[arg(long, conflicts_with_all = ["code", "file"])]
        matrix: Option<PathBuf>,
        /// Comma-separated primes
        #[arg(long, default_value = "2,3,5")]
        primes: String,
    },
    /// Cobordism test for two JSON matrices
    Cobordant {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
        bound: i64,
    },
    /// Invariants of an iterated covering knot
    Cover {
        #[command(flatten)]
        input: CodeInput,
        /// Covering sequence, e.g. "2" or "2,3"
        #[arg(long)]
        covers: String,
        #[arg(long, default_value_t = DEFAULT_MAX_CROSSINGS)]
        max_crossings: usize,
    },
    /// Sliceness obstructions
    SliceCheck {
        #[command(flatten)]
        input: CodeInput,
        /// Covering sequences, separated by ';', e.g. "2;3;2,2"
        #[arg(long, default_value = "2;3")]
        covers: String,
        #[arg(long, default_value = "2,3,5")]
        primes: String,
        /// Moduli for the Lagrangian test; empty to skip
        #[arg(long, default_value = "2")]
        lagrangian: String,
        #[arg(long, default_value_t = DEFAULT_MAX_CROSSINGS)]
        max_crossings: usize,
    },
    /// The alpha(p,q) family
    Alpha {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// One '+' or '-' per crossing; all '+' by default
        #[arg(long)]
        signs: Option<String>,
    },
    /// Random Reidemeister-move fuzzing
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        cases: usize,
        /// Crossings of the starting codes
        #[arg(long, default_value_t = 6)]
        max_crossings: usize,
        #[arg(long, default_value_t = 8)]
        moves: usize,
    },
    /// Isomorphism test for two JSON matrices
    Isomorphic {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
}

/// What a subcommand produced: a text rendering and a JSON value.
struct Report {
    text: String,
    json: Value,
    /// Exit code on success; `fuzz` returns 1 on violations.
    code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Report {
        Report { text, json, code: 0 }
    }
}

/// Runs the command line `args` (including the program name). Returns the
/// exit code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(r) => {
            let _ = match cli.format {
                Format::Text => writeln!(out, "{}", r.text.trim_end()),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r.json).expect("json")),
            };
            r.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = match cli.format {
                Format::Text => writeln!(err, "error: {e}"),
                Format::Json => {
                    let v = json!({"error": e.kind(), "message": e.to_string()});
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))
                }
            };
            1
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::Domain(e.into())
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Domain(Error::Input(format!("{}: {e}", path.display()))))
}

impl CodeInput {
    fn code(&self) -> Result<GaussCode, Failure> {
        let text = match (&self.code, &self.file) {
            (Some(c), _) => c.clone(),
            (None, Some(f)) => read(f)?,
            (None, None) => return Err(Failure::Usage("one of --code or --file is required".into())),
        };
        Ok(GaussCode::parse(&text)?)
    }

    fn diagram(&self) -> Result<(GaussCode, EmbeddedDiagram), Failure> {
        let code = self.code()?;
        let d = build_carter(&code);
        Ok((code, d))
    }
}

fn matrix_file(path: &PathBuf) -> Result<GradedMatrix, Failure> {
    Ok(GradedMatrix::from_json(&read(path)?)?)
}

fn list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| Failure::Usage(format!("bad {what} `{x}`"))))
        .collect()
}

fn primes(text: &str) -> Result<Vec<u64>, Failure> {
    let ps: Vec<u64> = list(text, "prime")?;
    match ps.iter().find(|&&p| !is_prime(p)) {
        Some(p) => Err(Failure::Usage(format!("{p} is not prime"))),
        None => Ok(ps),
    }
}

fn cover_sequence(text: &str) -> Result<Vec<u32>, Failure> {
    let seq: Vec<u32> = list(text, "covering degree")?;
    if seq.contains(&0) {
        return Err(Failure::Usage("covering degrees must be positive".into()));
    }
    Ok(seq)
}

fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Validate(input) => {
            let (code, d) = input.diagram()?;
            let canonical = code.canonical();
            let text = format!(
                "valid\ncanonical: {canonical}\ncrossings: {}\nsurface genus: {}",
                code.crossing_count(),
                d.genus()
            );
            let json = json!({
                "valid": true,
                "canonical": canonical.to_string(),
                "crossings": code.crossing_count(),
                "genus": d.genus(),
            });
            Ok(Report::ok(text, json))
        }
        Command::Invariants(input) => {
            let (code, d) = input.diagram()?;
            let hs = halves(&d);
            let (up, um) = u_polynomials(&d);
            let u = &up - &um;
            let mut text =
                format!("code: {code}\ncrossings: {}\nsurface genus: {}\n", code.crossing_count(), d.genus());
            for h in &hs {
                let _ = writeln!(text, "  {}: sign {} n {}", h.label, h.sign.symbol(), h.n);
            }
            let _ = write!(text, "u+ = {up}\nu- = {um}\nu = {u}");
            let json = json!({
                "code": code.to_string(),
                "crossings": code.crossing_count(),
                "genus": d.genus(),
                "halves": hs,
                "u_plus": up,
                "u_minus": um,
                "u": u,
            });
            Ok(Report::ok(text, json))
        }
        Command::Matrix(input) => {
            let (_, d) = input.diagram()?;
            let t = graded_matrix_of(&d);
            let (prim, deletions) = reduce_primitive(&t)?;
            let mut text =
                format!("T(D):\n{t}\nT_bullet ({} elements besides s):\n{prim}\ndeletions:\n", prim.size() - 1);
            for del in &deletions {
                let _ = writeln!(text, "  {}", serde_json::to_string(del).expect("json"));
            }
            if deletions.is_empty() {
                text.push_str("  none, T(D) is primitive\n");
            }
            let _ = write!(text, "every diagram of this knot has at least {} crossings", prim.size() - 1);
            let json = json!({
                "matrix": t.to_json(),
                "primitive": prim.to_json(),
                "deletions": deletions,
                "crossing_lower_bound": prim.size() - 1,
            });
            Ok(Report::ok(text, json))
        }
        Command::Genus { input, matrix, primes: ps } => {
            let ps = primes(ps)?;
            let t = match matrix {
                Some(path) => matrix_file(path)?,
                None => {
                    let (_, d) = input.diagram()?;
                    reduce_primitive(&graded_matrix_of(&d))?.0
                }
            };
            let sigma = genus(&t)?;
            let hyperbolic = is_hyperbolic(&t)?;
            let mut text = format!("genus {sigma}\nhyperbolic: {hyperbolic}\n");
            let mut pj = serde_json::Map::new();
            if t.ring() == crate::graded::Ring::Integers {
                for &p in &ps {
                    let sp = p_genus(&t, p)?;
                    let _ = writeln!(text, "{p}-genus {sp}");
                    pj.insert(p.to_string(), json!(sp));
                }
            }
            let json = json!({"genus": sigma, "hyperbolic": hyperbolic, "p_genus": pj});
            Ok(Report::ok(text, json))
        }
        Command::Cobordant { left, right, bound } => {
            let (t1, t2) = (matrix_file(left)?, matrix_file(right)?);
            let v = is_cobordant(&t1, &t2, *bound)?;
            Ok(Report::ok(v.to_string(), serde_json::to_value(&v).expect("json")))
        }
        Command::Cover { input, covers, max_crossings } => {
            let (_, d) = input.diagram()?;
            let seq = cover_sequence(covers)?;
            let h = higher_invariants(&d, &seq, *max_crossings)?;
            let cover_code = h.diagram.gauss_code();
            let text = format!(
                "cover {seq:?}\ncode: {cover_code}\ncrossings: {}\nsurface genus: {}\nu+ = {}\nu- = {}\nT_bullet:\n{}",
                h.diagram.crossing_count(),
                h.diagram.genus(),
                h.u_plus,
                h.u_minus,
                h.primitive
            );
            let json = json!({
                "cover": seq,
                "code": cover_code.to_string(),
                "crossings": h.diagram.crossing_count(),
                "genus": h.diagram.genus(),
                "u_plus": h.u_plus,
                "u_minus": h.u_minus,
                "primitive": h.primitive.to_json(),
            });
            Ok(Report::ok(text, json))
        }
        Command::SliceCheck { input, covers, primes: ps, lagrangian, max_crossings } => {
            let (_, d) = input.diagram()?;
            let covers =
                covers.split(';').filter(|s| !s.trim().is_empty()).map(cover_sequence).collect::<Result<_, _>>()?;
            let lagrangian: Vec<u32> = list(lagrangian, "modulus")?;
            if let Some(m) = lagrangian.iter().find(|&&m| m < 2) {
                return Err(Failure::Usage(format!("Lagrangian modulus {m} is below 2")));
            }
            let config = SliceConfig { covers, primes: primes(ps)?, lagrangian, max_crossings: *max_crossings };
            let r = obstruction_report(&d, &config);
            Ok(Report::ok(r.to_string(), serde_json::to_value(&r).expect("json")))
        }
        Command::Alpha { p, q, signs } => {
            let signs: Vec<Sign> = match signs {
                None => vec![Sign::Plus; p + q],
                Some(s) => s
                    .chars()
                    .map(|c| match c {
                        '+' => Ok(Sign::Plus),
                        '-' => Ok(Sign::Minus),
                        _ => Err(Failure::Usage(format!("bad sign `{c}`"))),
                    })
                    .collect::<Result<_, _>>()?,
            };
            let code = alpha_pq(*p, *q, &signs)?;
            let d = build_carter(&code);
            let t = graded_matrix_of(&d);
            let (up, um) = u_polynomials(&d);
            let text = format!("code: {code}\nsurface genus: {}\nu+ = {up}\nu- = {um}\nT(D):\n{t}", d.genus());
            let json = json!({
                "code": code.to_string(),
                "genus": d.genus(),
                "u_plus": up,
                "u_minus": um,
                "matrix": t.to_json(),
            });
            Ok(Report::ok(text, json))
        }
        Command::Fuzz { seed, cases, max_crossings, moves } => {
            let config = FuzzConfig { seed: *seed, cases: *cases, max_crossings: *max_crossings, max_moves: *moves };
            let s = fuzz::run(&config);
            let mut text = format!("{} cases, {} moves, {} violations", s.cases, s.moves, s.violations.len());
            for v in &s.violations {
                let _ = write!(
                    text,
                    "\ncase {} (replay: fuzz --seed {} --cases 1): {}\n  start {}\n  moves {}\n  reached {}",
                    v.case,
                    v.case_seed,
                    v.property,
                    v.start,
                    v.moves.join(" "),
                    v.code
                );
            }
            let code = if s.violations.is_empty() { 0 } else { 1 };
            Ok(Report { text, json: serde_json::to_value(&s).expect("json"), code })
        }
        Command::Isomorphic { left, right } => {
            let (t1, t2) = (matrix_file(left)?, matrix_file(right)?);
            let f = isomorphism(&t1, &t2);
            let text = match &f {
                Some(f) => {
                    let pairs: Vec<String> =
                        (1..t1.size()).map(|g| format!("{} -> {}", t1.name(g), t2.name(f[g]))).collect();
                    format!("isomorphic\n{}", pairs.join("\n"))
                }
                None => "not isomorphic".to_string(),
            };
            let witness = f.map(|f| {
                (1..t1.size()).map(|g| (t1.name(g).to_string(), t2.name(f[g]).to_string())).collect::<Vec<_>>()
            });
            Ok(Report::ok(text, json!({"isomorphic": witness.is_some(), "witness": witness})))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("knotcob").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn invariants_text() {
        let (code, out, _) = call(&["invariants", "--code", "O1+ O2+ U1+ U2+"]);
        assert_eq!(code, 0);
        assert!(out.contains("u+ = t"));
        assert!(out.contains("u- = t"));
        assert!(out.contains("surface genus: 1"));
    }

    #[test]
    fn slice_check_json() {
        let (code, out, _) = call(&["slice-check", "--code", "O1+ U2+ O3+ U1+ O2+ U3+", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "Inconclusive");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["invariants", "--code", "O1+ U1-"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["invariants"]).0, 2);
        assert_eq!(call(&["genus", "--code", "O1+ U1+", "--primes", "4"]).0, 2);
        let (code, out, _) = call(&["validate", "--code", "O1+ O1+", "--format", "json"]);
        assert_eq!(code, 1);
        assert!(out.contains("\"error\": \"FlagConflict\""));
    }
}
