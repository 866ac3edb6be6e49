mod problem;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pushout_core::glue::{a1_glue, glue_generators, glue_presentation, GluingProblem};
use pushout_core::groebner::{standard_monomials, StandardMonomials};
use pushout_core::monoid::{intersect_monomial, ExponentVector, MonomialSubalgebra};
use pushout_core::parse::{
    collect_identifiers, parse_field, parse_point, parse_poly, parse_polys_auto, split_top_level,
};
use pushout_core::pullback::{prop6_reduce, pullback_presentation, validate, verdict, Shape};
use pushout_core::tangent::{lines_union_ideal, p20_bound, tangent_dim, PointedPresentation};
use pushout_core::{AlgebraError, FieldSpec, IdealPresentation, Monomial, Polynomial, Ring};
use thiserror::Error;

use problem::{ProblemError, ProblemFile};

#[derive(Parser)]
#[command(name = "pushout", version, about = "Glue points of affine varieties and decide finite generation of pullbacks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced grevlex Gröbner basis of every ideal in the file (or just one).
    Gb {
        file: PathBuf,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Present the algebra of the variety with the given points (or ideal) glued together.
    Glue {
        file: PathBuf,
        /// Ideal of the ambient variety; defaults to `X` if defined, else affine space.
        #[arg(long)]
        ambient: Option<String>,
        /// Points block to glue.
        #[arg(long, conflicts_with = "ideal")]
        points: Option<String>,
        /// Ideal whose zero set is glued.
        #[arg(long)]
        ideal: Option<String>,
        /// Also report the tangent space at the glued point.
        #[arg(long)]
        tangent: bool,
    },
    /// Closed-form presentation for gluing the roots of a monic squarefree polynomial in one variable.
    GlueA1 {
        #[arg(long)]
        phi0: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Generators of the intersection of two monomial subalgebras.
    IntersectMonomials {
        #[arg(long)]
        gens1: String,
        #[arg(long)]
        gens2: String,
        /// Variable order, comma separated; defaults to order of first appearance.
        #[arg(long)]
        vars: Option<String>,
    },
    /// Decide whether the pullback of the file's diagram is finitely generated.
    PullbackCheck {
        file: PathBuf,
        /// Assert that the source algebra B is a domain.
        #[arg(long)]
        assert_domain: bool,
        /// Fail with exit code 3 unless a presentation of the pullback is produced.
        #[arg(long)]
        present: bool,
    },
    /// Tangent space dimension of an ideal's zero set at a point.
    Tangent {
        file: PathBuf,
        /// Coordinates, e.g. `0,0` or `(1, -1/2)`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Ideal of a union of lines through the origin.
    Lines {
        /// Direction vectors, e.g. `(1,1,1),(1,s,s^2)`.
        #[arg(long, allow_hyphen_values = true)]
        directions: String,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Coordinate names; defaults to y0, y1, ...
        #[arg(long)]
        vars: Option<String>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Problem(#[from] ProblemError),
    #[error("{}: {}", .0.kind(), .0)]
    Algebra(#[from] AlgebraError),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        let algebra = match self {
            CliError::Io { .. } => return 1,
            CliError::Usage(_) => return 2,
            CliError::Problem(p) => &p.source,
            CliError::Algebra(e) => e,
        };
        match algebra {
            AlgebraError::UnsupportedShape(_) => 3,
            AlgebraError::NotZeroDimensional(_)
            | AlgebraError::NotSquarefree(_)
            | AlgebraError::NotMonic(_)
            | AlgebraError::PointOffVariety(_)
            | AlgebraError::DuplicatePoint(_)
            | AlgebraError::PointNotOnVariety(_)
            | AlgebraError::IllFormedMap(_)
            | AlgebraError::ReducibleModulus(_)
            | AlgebraError::RegularityUnknown(_)
            | AlgebraError::ZeroDirection => 4,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn load(path: &Path) -> Result<ProblemFile> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(problem::parse(&text)?)
}

fn named_ideal<'a>(file: &'a ProblemFile, name: &str) -> Result<&'a IdealPresentation> {
    file.ideal(name)
        .ok_or_else(|| AlgebraError::UndefinedName(name.to_string()).into())
}

fn indented(out: &mut String, polys: &[Polynomial]) {
    for p in polys {
        let _ = writeln!(out, "  {p}");
    }
}

fn monomial_list(ms: &[Monomial], vars: &[String]) -> String {
    ms.iter().map(|m| m.format(vars)).collect::<Vec<_>>().join(", ")
}

fn cmd_gb(file: &ProblemFile, only: Option<&str>) -> Result<String> {
    let selected: Vec<&(String, IdealPresentation)> = match only {
        Some(n) => file.ideals.iter().filter(|(k, _)| k == n).collect(),
        None => file.ideals.iter().collect(),
    };
    if let (Some(n), true) = (only, selected.is_empty()) {
        return Err(AlgebraError::UndefinedName(n.to_string()).into());
    }
    if selected.is_empty() {
        return Err(CliError::Usage("the file defines no ideals".into()));
    }
    let mut out = String::new();
    for (name, ideal) in selected {
        let gb = ideal.groebner();
        let _ = writeln!(out, "ideal {name}:");
        indented(&mut out, gb.basis());
    }
    Ok(out)
}

fn gluing_problem(
    file: &ProblemFile,
    ambient: Option<&str>,
    points: Option<&str>,
    ideal: Option<&str>,
) -> Result<GluingProblem> {
    let ring = file
        .ring
        .as_ref()
        .ok_or_else(|| CliError::Usage("the file declares no ring".into()))?;
    let ambient = match ambient {
        Some(n) => named_ideal(file, n)?.clone(),
        None => file
            .ideal("X")
            .cloned()
            .unwrap_or_else(|| IdealPresentation::zero(ring)),
    };
    if let Some(n) = points {
        let pts = file
            .point_set(n)
            .ok_or_else(|| AlgebraError::UndefinedName(n.to_string()))?;
        return Ok(GluingProblem::points(ambient, pts.clone())?);
    }
    if let Some(n) = ideal {
        return Ok(GluingProblem::ideal(ambient, named_ideal(file, n)?.clone())?);
    }
    match (file.points.as_slice(), file.ideal("J")) {
        ([(_, pts)], _) => Ok(GluingProblem::points(ambient, pts.clone())?),
        ([], Some(j)) => Ok(GluingProblem::ideal(ambient, j.clone())?),
        _ => Err(CliError::Usage(
            "say what to glue with --points or --ideal".into(),
        )),
    }
}

fn cmd_glue(
    file: &ProblemFile,
    ambient: Option<&str>,
    points: Option<&str>,
    ideal: Option<&str>,
    tangent: bool,
) -> Result<String> {
    let problem = gluing_problem(file, ambient, points, ideal)?;
    let mut out = String::new();
    let jgb = problem.preimage_basis()?;
    let _ = writeln!(out, "glued ideal:");
    indented(&mut out, jgb.basis());
    let generators = glue_generators(&problem)?;
    if let StandardMonomials::Finite(std) = standard_monomials(&jgb, None) {
        let _ = writeln!(out, "standard monomials: {}", monomial_list(&std, problem.ring().vars()));
    }
    let _ = writeln!(out, "generators:");
    indented(&mut out, &generators);
    let presentation = glue_presentation(&problem)?;
    out.push_str(&presentation.render());
    if tangent {
        let report = tangent_dim(&PointedPresentation::glued_point(&presentation)?)?;
        let _ = writeln!(
            out,
            "tangent: variables {}, jacobian rank {}, dimension {}",
            report.variable_count, report.jacobian_rank, report.tangent_dim
        );
        match p20_bound(&presentation, &problem) {
            Ok(b) => {
                let _ = writeln!(
                    out,
                    "bound: {} x {} = {}, computed {}, {}",
                    b.k,
                    b.quotient_dim,
                    b.bound,
                    b.computed,
                    if b.holds { "holds" } else { "VIOLATED" }
                );
            }
            Err(e) => {
                let _ = writeln!(out, "bound: unavailable ({e})");
            }
        }
    }
    Ok(out)
}

fn cmd_glue_a1(phi0: &str, field: &str) -> Result<String> {
    let field = parse_field(field)?;
    let names = collect_identifiers(&[phi0], &field)?;
    let ring = match names.as_slice() {
        [] => Ring::grevlex(&["x"], field)?,
        [_] => Ring::grevlex(&names, field)?,
        _ => {
            return Err(CliError::Usage(format!(
                "--phi0 must use a single variable, found {}",
                names.join(", ")
            )))
        }
    };
    let phi = parse_poly(phi0, &ring)?;
    Ok(a1_glue(&phi)?.render())
}

fn exponent_vectors(polys: &[Polynomial]) -> Result<Vec<ExponentVector>> {
    polys
        .iter()
        .map(|p| match p.terms() {
            [(m, _)] if !m.is_one() => Ok(ExponentVector::new(m.exponents().to_vec())),
            _ => Err(CliError::Usage(format!("`{p}` is not a non-constant monomial"))),
        })
        .collect()
}

fn cmd_intersect(gens1: &str, gens2: &str, vars: Option<&str>) -> Result<String> {
    let field = FieldSpec::rationals();
    let (l1, l2) = (split_top_level(gens1), split_top_level(gens2));
    let texts: Vec<&str> = l1.iter().chain(&l2).copied().collect();
    let (ring, polys) = match vars {
        Some(v) => {
            let names: Vec<&str> = v.split(',').map(str::trim).collect();
            let ring = Ring::grevlex(&names, field)?;
            let polys = texts
                .iter()
                .map(|t| parse_poly(t, &ring))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            (ring, polys)
        }
        None => parse_polys_auto(&texts, &field)?,
    };
    let n = ring.nvars();
    let s1 = MonomialSubalgebra::new(n, exponent_vectors(&polys[..l1.len()])?)?;
    let s2 = MonomialSubalgebra::new(n, exponent_vectors(&polys[l1.len()..])?)?;
    let meet = intersect_monomial(&s1, &s2)?;
    let mut out = String::new();
    let _ = writeln!(out, "vars: {}", ring.vars().join(", "));
    let _ = writeln!(out, "generators:");
    for g in meet.generators() {
        let _ = writeln!(out, "  {}", Monomial::new(g.entries().to_vec()).format(ring.vars()));
    }
    if meet.generators().is_empty() {
        let _ = writeln!(out, "note: the intersection is K");
    } else {
        let _ = writeln!(out, "note: generating set, not minimized");
    }
    Ok(out)
}

fn cmd_pullback(file: &ProblemFile, assert_domain: bool, present: bool) -> Result<String> {
    let d = file
        .diagram
        .as_ref()
        .ok_or_else(|| CliError::Usage("the file declares no diagram".into()))?;
    let mut out = String::new();
    let shape = match validate(d) {
        Shape::CanonicalQuotient => "canonical quotient",
        Shape::Monomial { .. } => "monomial",
        Shape::Other => "other",
    };
    let _ = writeln!(out, "shape: {shape}");
    let (in_b, in_c) = prop6_reduce(d);
    let _ = writeln!(out, "preimage in B: {in_b}");
    let _ = writeln!(out, "preimage in C: {in_c}");
    let v = verdict(d, assert_domain)?;
    let _ = writeln!(out, "certificate: {}", v.certificate);
    if let Some(p) = &v.presentation {
        let _ = writeln!(out, "presentation:");
        out.push_str(&p.render());
    }
    let _ = writeln!(out, "VERDICT: {}", v.status.tag());
    if present && v.presentation.is_none() {
        print!("{out}");
        let reason = match pullback_presentation(d) {
            Err(AlgebraError::UnsupportedShape(msg)) => msg,
            _ => format!("no presentation for verdict {}", v.status.tag()),
        };
        return Err(AlgebraError::UnsupportedShape(reason).into());
    }
    Ok(out)
}

fn cmd_tangent(file: &ProblemFile, point: &str, ideal: Option<&str>) -> Result<String> {
    let ideal = match ideal {
        Some(n) => named_ideal(file, n)?,
        None => match (file.ideal("X"), file.ideals.as_slice()) {
            (Some(x), _) => x,
            (None, [(_, only)]) => only,
            _ => return Err(CliError::Usage("say which ideal with --ideal".into())),
        },
    };
    let text = point.trim();
    let wrapped = if text.starts_with('(') {
        text.to_string()
    } else {
        format!("({text})")
    };
    let pt = parse_point(&wrapped, ideal.ring().field())?;
    let report = tangent_dim(&PointedPresentation::new(ideal, pt)?)?;
    Ok(format!(
        "variables: {}\njacobian rank: {}\ntangent dimension: {}\n",
        report.variable_count, report.jacobian_rank, report.tangent_dim
    ))
}

fn cmd_lines(directions: &str, field: &str, vars: Option<&str>) -> Result<String> {
    let field = parse_field(field)?;
    let dirs = split_top_level(directions)
        .into_iter()
        .map(|d| parse_point(d, &field))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let n = dirs.first().map_or(0, Vec::len);
    let names: Vec<String> = match vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
        None => (0..n).map(|i| format!("y{i}")).collect(),
    };
    let ring = Ring::grevlex(&names, field)?;
    let ideal = lines_union_ideal(&ring, &dirs)?;
    let mut out = String::new();
    let _ = writeln!(out, "ring: {} over {}", names.join(", "), ring.field());
    let _ = writeln!(out, "ideal:");
    indented(&mut out, ideal.generators());
    Ok(out)
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Gb { file, ideal } => cmd_gb(&load(&file)?, ideal.as_deref()),
        Command::Glue {
            file,
            ambient,
            points,
            ideal,
            tangent,
        } => cmd_glue(
            &load(&file)?,
            ambient.as_deref(),
            points.as_deref(),
            ideal.as_deref(),
            tangent,
        ),
        Command::GlueA1 { phi0, field } => cmd_glue_a1(&phi0, &field),
        Command::IntersectMonomials { gens1, gens2, vars } => {
            cmd_intersect(&gens1, &gens2, vars.as_deref())
        }
        Command::PullbackCheck {
            file,
            assert_domain,
            present,
        } => cmd_pullback(&load(&file)?, assert_domain, present),
        Command::Tangent { file, point, ideal } => cmd_tangent(&load(&file)?, &point, ideal.as_deref()),
        Command::Lines {
            directions,
            field,
            vars,
        } => cmd_lines(&directions, &field, vars.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
