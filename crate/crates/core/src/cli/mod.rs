//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for input
//! errors (unreadable or malformed polytopes, violated hypotheses, `y = -1`).

mod report;
mod svg;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmath::{fmt_vector, parse_rational, Rational};
use crate::latticegen::{brion_check, chi_y_eval, weighted_count, CodimCounts, WeightedLatticeSum};
use crate::polarize::{find_polarizing, polarize_cones};
use crate::polytope::{builtin, from_file, Polytope, BUILTIN_HELP};
use crate::series::{lhat_series, qy_series, todd_series, verify_identities};
use crate::weights::{check_with_cones, sample_points, SymbolicY, WeightParam};

pub use report::RunReport;
pub use svg::render_svg;

#[derive(Parser, Debug)]
#[command(
    name = "weighted-polar",
    about = "Exact weighted polar decompositions and weighted lattice-point identities",
    after_help = BUILTIN_HELP
)]
pub struct Cli {
    /// Render rationals as decimals with this many digits.
    #[arg(long, global = true, value_name = "K")]
    decimal: Option<usize>,

    /// Append wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Polytope file (JSON).
    file: Option<String>,

    /// Named polytope instead of a file, e.g. `simplex:2,2`.
    #[arg(long, value_name = "NAME:PARAMS")]
    builtin: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List vertices, active facets, edge vectors and flags.
    Vertices(Input),
    /// Polarize and check the weighted decomposition at sample points.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        seed: i64,
        /// Evaluate at this y instead of symbolically.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Also polarize with this seed and compare the cone sums.
        #[arg(long, allow_hyphen_values = true)]
        compare_seed: Option<i64>,
        /// Number of random probe points.
        #[arg(long, default_value_t = 20)]
        random: usize,
    },
    /// Weighted lattice-point count.
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "symbolic")]
        y: Option<String>,
        #[arg(long)]
        symbolic: bool,
    },
    /// Evaluate both sides of the chi_y identity at (y, z).
    Chi {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Comma-separated nonzero rationals z_1,..,z_n.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Exact check of the vertex rational-function sum against the weighted lattice polynomial.
    Brion(Input),
    /// Todd, L-hat and Q_y coefficients and the identities between them.
    Series {
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
    },
    /// Draw the weighted polar decomposition of a 2-D polytope as SVG.
    Svg {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        seed: i64,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        y: String,
        #[arg(long)]
        out: Option<String>,
    },
}

/// Result of running the CLI in-process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(mut report) => {
            report.elapsed = Some(start.elapsed());
            Outcome {
                code: if report.all_passed() { 0 } else { 1 },
                stdout: report.render(cli.timing),
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn load(input: &Input) -> Result<(Polytope, String)> {
    match (&input.file, &input.builtin) {
        (Some(path), None) => {
            let p = from_file(path)?;
            let digest = format!("file {path} (dim {}, {} facets)", p.dim(), p.facets().len());
            Ok((p, digest))
        }
        (None, Some(spec)) => {
            let p = builtin(spec)?;
            let digest = format!("builtin {spec} (dim {}, {} facets)", p.dim(), p.facets().len());
            Ok((p, digest))
        }
        _ => Err(Error::Parse {
            line: 0,
            field: "input".into(),
            message: "give exactly one of a polytope file or --builtin".into(),
        }),
    }
}

fn rational_arg(field: &str, text: &str) -> Result<Rational> {
    parse_rational(text).ok_or_else(|| Error::Parse {
        line: 0,
        field: field.into(),
        message: format!("`{text}` is not an integer or p/q literal"),
    })
}

fn weight_arg(text: &str) -> Result<WeightParam> {
    WeightParam::new(rational_arg("--y", text)?)
}

fn execute(cli: &Cli) -> Result<RunReport> {
    let mut r = RunReport::new(String::new(), cli.decimal);
    match &cli.command {
        Command::Vertices(input) => {
            r.command = "vertices".into();
            let (p, digest) = load(input)?;
            r.input = digest;
            cmd_vertices(&p, &mut r);
        }
        Command::Decompose { input, seed, y, compare_seed, random } => {
            r.command = format!("decompose --seed {seed}");
            let (p, digest) = load(input)?;
            r.input = digest;
            let y = y.as_deref().map(weight_arg).transpose()?;
            cmd_decompose(&p, *seed, y.as_ref(), *compare_seed, *random, &mut r)?;
        }
        Command::Count { input, y, symbolic } => {
            r.command = "count".into();
            let (p, digest) = load(input)?;
            r.input = digest;
            crate::latticegen::require_regular_integral(&p)?;
            match (y, symbolic) {
                (Some(y), false) => {
                    let w = weight_arg(y)?;
                    let c = weighted_count(&p, &w);
                    r.line(format!("y = {}", r.q(w.y())));
                    r.line(format!("weighted count: {}", r.q(&c)));
                }
                _ => {
                    let counts = CodimCounts::of(&p);
                    r.line(format!("weighted count: {counts}"));
                    r.line(format!("points by codimension: {:?}", counts.0));
                }
            }
        }
        Command::Chi { input, y, z } => {
            r.command = "chi".into();
            let (p, digest) = load(input)?;
            r.input = digest;
            let y = weight_arg(y)?;
            let z: Vec<Rational> = z
                .split(',')
                .map(|s| rational_arg("--z", s))
                .collect::<Result<_>>()?;
            let c = chi_y_eval(&p, y.y(), &z)?;
            r.line(format!("y = {}, z = {}", r.q(y.y()), r.qv(&z)));
            r.line(format!("lhs (vertex sum):      {}", r.q(&c.lhs)));
            r.line(format!("rhs (lattice sum):     {}", r.q(&c.rhs)));
            r.line(if c.equal { "EQUAL" } else { "DIFFER" });
            r.check("chi_y vertex sum = weighted lattice sum", c.equal);
        }
        Command::Brion(input) => {
            r.command = "brion".into();
            let (p, digest) = load(input)?;
            r.input = digest;
            let chk = brion_check(&p)?;
            r.line(format!("lattice points: {}", chk.rhs.points.len()));
            r.line(format!("weighted lattice sum: {}", CodimCounts::of(&p)));
            r.line(format!(
                "vertex sum: numerator {} terms, denominator {} terms",
                chk.lhs.numer().len(),
                chk.lhs.denom().len()
            ));
            r.line(if chk.equal { "EQUAL" } else { "DIFFER" });
            r.check("sum of vertex rational functions = weighted lattice polynomial", chk.equal);
        }
        Command::Series { order, y } => {
            r.command = format!("series --order {order}");
            let k = *order;
            let fmt = |r: &RunReport, s: &[Rational]| {
                s.iter().map(|c| r.q(c)).collect::<Vec<_>>().join(", ")
            };
            r.line(format!("Todd: {}", fmt(&r, todd_series(k).coeffs())));
            r.line(format!("Lhat: {}", fmt(&r, lhat_series(k).coeffs())));
            if let Some(y) = y {
                let w = weight_arg(y)?;
                r.line(format!("Q_y (y = {}): {}", r.q(w.y()), fmt(&r, qy_series(&w, k).coeffs())));
            }
            if k >= 2 {
                let report = verify_identities(k)?;
                for c in &report.checks {
                    r.check(c.name, c.holds);
                }
                r.line(format!("identities (order {k}):"));
                r.line(report.to_string().trim_end().to_string());
            }
        }
        Command::Svg { input, seed, y, out } => {
            r.command = format!("svg --seed {seed}");
            let (p, digest) = load(input)?;
            r.input = digest;
            let w = weight_arg(y)?;
            let xi = find_polarizing(&p, *seed);
            let doc = render_svg(&p, &xi, &w)?;
            match out {
                Some(path) => {
                    std::fs::write(path, &doc).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                    r.line(format!("wrote {path} ({} bytes)", doc.len()));
                }
                None => r.line(doc),
            }
        }
    }
    Ok(r)
}

fn cmd_vertices(p: &Polytope, r: &mut RunReport) {
    r.line(format!(
        "dim {}, {} facets, {} vertices",
        p.dim(),
        p.facets().len(),
        p.vertices().len()
    ));
    r.line(format!(
        "simple: {}, regular: {}, integral: {}",
        p.is_simple(),
        p.is_regular(),
        p.is_integral()
    ));
    for (i, v) in p.vertices().iter().enumerate() {
        let edges: Vec<String> = v.edges.iter().map(|e| r.qv(e)).collect();
        r.line(format!(
            "v{i} {} active {:?} edges {}",
            r.qv(&v.point),
            v.active,
            edges.join(" ")
        ));
    }
}

fn cmd_decompose(
    p: &Polytope,
    seed: i64,
    y: Option<&WeightParam>,
    compare_seed: Option<i64>,
    random: usize,
    r: &mut RunReport,
) -> Result<()> {
    let xi = find_polarizing(p, seed);
    let cones = polarize_cones(p, &xi)?;
    r.line(format!("xi = {}", fmt_vector(xi.xi())));
    for c in &cones {
        let gens: Vec<String> = c
            .generators
            .iter()
            .zip(&c.flipped)
            .map(|(g, &f)| format!("{}{}", r.qv(g), if f { "*" } else { "" }))
            .collect();
        r.line(format!(
            "cone v{} apex {} generators {} flips {} sign {}",
            c.vertex,
            r.qv(&c.apex),
            gens.join(" "),
            c.flip_count,
            if c.sign() > 0 { "+" } else { "-" }
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed as u64);
    let samples = sample_points(p, &xi, random, &mut rng);
    let other = compare_seed
        .map(|s| {
            let xi2 = find_polarizing(p, s);
            polarize_cones(p, &xi2).map(|c| (xi2, c))
        })
        .transpose()?;
    if let Some((xi2, _)) = &other {
        r.line(format!("compare xi = {}", fmt_vector(xi2.xi())));
    }

    let mut failures = 0;
    let mut mismatches = 0;
    match y {
        None => {
            r.line(format!("mode: symbolic y, {} sample points", samples.len()));
            for x in &samples {
                let chk = check_with_cones(p, &cones, x, &SymbolicY);
                if !chk.equal {
                    failures += 1;
                    r.line(format!("  mismatch at {}: {chk}", r.qv(x)));
                }
                if let Some((_, c2)) = &other {
                    if check_with_cones(p, c2, x, &SymbolicY).rhs != chk.rhs {
                        mismatches += 1;
                    }
                }
            }
        }
        Some(w) => {
            r.line(format!("mode: y = {}, {} sample points", r.q(w.y()), samples.len()));
            for x in &samples {
                let chk = check_with_cones(p, &cones, x, w);
                if !chk.equal {
                    failures += 1;
                    r.line(format!("  mismatch at {}: {chk}", r.qv(x)));
                }
                if let Some((_, c2)) = &other {
                    if check_with_cones(p, c2, x, w).rhs != chk.rhs {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    r.line(format!("weighted decomposition holds at {}/{} points", samples.len() - failures, samples.len()));
    r.check("weighted polytope indicator = signed sum of cone indicators", failures == 0);
    if other.is_some() {
        r.line(format!("cone sums agree across polarizations at {}/{} points", samples.len() - mismatches, samples.len()));
        r.check("cone sum independent of polarizing vector", mismatches == 0);
    }
    let sum = WeightedLatticeSum::new(p);
    r.line(format!("lattice points in polytope: {}", sum.points.len()));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut full = vec!["weighted-polar"];
        full.extend_from_slice(args);
        run(full)
    }

    #[test]
    fn series_order_four() {
        let out = run_args(&["series", "--order", "4"]);
        assert_eq!(out.code, 0, "{out:?}");
        assert!(out.stdout.contains("Todd: 1, 1/2, 1/12, 0, -1/720"), "{}", out.stdout);
    }

    #[test]
    fn count_symbolic_interval() {
        let out = run_args(&["count", "--builtin", "interval:2", "--symbolic"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("weighted count: 1 + 2/(1+y)"), "{}", out.stdout);
    }

    #[test]
    fn y_minus_one_is_input_error() {
        let out = run_args(&["decompose", "--builtin", "simplex:2,2", "--y", "-1"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("y != -1"), "{}", out.stderr);
    }

    #[test]
    fn decimal_flag() {
        let out = run_args(&["--decimal", "3", "series", "--order", "2"]);
        assert!(out.stdout.contains("Todd: 1.000, 0.500, 0.083"), "{}", out.stdout);
    }
}
