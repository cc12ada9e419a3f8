//! Command-line front end for `varinterp`: problem-file parsing and the
//! subcommands behind the `varinterp` binary.
//!
//! Exit codes: 0 success or feasible, 1 infeasible or negative answer,
//! 2 parse or usage error, 3 undecided or a solver precondition failed.

pub mod error;
pub mod problem;
mod report;

use serde_json::{json, Value};
use varinterp::groebner::Certificate;
use varinterp::ideal::{intersect_all, is_radical, is_zero_dimensional, radical_member, Ideal};
use varinterp::interp::{
    compatibility_check, interpolate_disjoint, interpolate_pair, interpolate_restricted, interpolate_sequential,
    separator, InterpolationProblem, InterpolationResult, Status,
};
use varinterp::pde::{harmonic_interpolate, pde_interpolate};
use varinterp::{MonomialOrder, Polynomial};

pub use error::CliError;
pub use problem::{parse_problem, Mode, ProblemFile};
use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    /// Reduced Gröbner basis of every ideal.
    Groebner,
    /// Certified membership of every datum in its ideal.
    Member,
    /// Whether every datum vanishes on the variety of its ideal.
    RadicalMember,
    /// Intersection of all ideals.
    Intersect,
    /// Separator: 1 on the first variety, 0 on the second.
    Separate,
    /// Interpolate the data on their varieties.
    Interpolate,
    /// Polynomial boundary-value problem on the hypersurface of an ideal.
    Pde,
    /// Harmonic interpolant on a quadric.
    Harmonic,
    /// Pointwise agreement of the data on pairwise intersections.
    CheckCompat,
    /// Radicality of every zero-dimensional ideal.
    IsRadical,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OrderArg {
    #[default]
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub certificate: bool,
    pub json: bool,
    pub order: OrderArg,
    /// Overrides the file's `mode` line.
    pub mode: Option<Mode>,
}

/// Exit code and rendered standard output of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

/// Parse `text` and run `command` on it.
pub fn run_text(command: Command, text: &str, options: &Options) -> Result<Outcome, CliError> {
    run(command, &parse_problem(text)?, options)
}

pub fn run(command: Command, problem: &ProblemFile, options: &Options) -> Result<Outcome, CliError> {
    let mut report = Report::new(command_name(command));
    let code = match command {
        Command::Groebner => groebner(problem, options, &mut report)?,
        Command::Member => member(problem, options, &mut report)?,
        Command::RadicalMember => radical(problem, &mut report)?,
        Command::Intersect => intersect(problem, &mut report)?,
        Command::Separate => separate(problem, options, &mut report)?,
        Command::Interpolate => interpolate(problem, options, &mut report)?,
        Command::Pde => pde(problem, options, &mut report)?,
        Command::Harmonic => harmonic(problem, &mut report)?,
        Command::CheckCompat => check_compat(problem, &mut report)?,
        Command::IsRadical => check_radical(problem, &mut report)?,
    };
    Ok(Outcome { code, output: report.render(options.json) })
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Groebner => "groebner",
        Command::Member => "member",
        Command::RadicalMember => "radical-member",
        Command::Intersect => "intersect",
        Command::Separate => "separate",
        Command::Interpolate => "interpolate",
        Command::Pde => "pde",
        Command::Harmonic => "harmonic",
        Command::CheckCompat => "check-compat",
        Command::IsRadical => "is-radical",
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Disjoint => "disjoint",
        Mode::Pair => "pair",
        Mode::Sequential => "sequential",
        Mode::Restricted => "restricted",
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

fn texts(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

/// `<g1, g2, ...>`
fn angle(ps: &[Polynomial]) -> String {
    format!("<{}>", texts(ps).join(", "))
}

/// Reduced basis, largest leading monomial first.
fn basis_desc(ideal: &Ideal, order: MonomialOrder) -> Result<Vec<Polynomial>, CliError> {
    let mut b = ideal.groebner(order)?.elements().to_vec();
    b.reverse();
    Ok(b)
}

fn certificate_json(label: &str, cert: &Certificate) -> Value {
    json!({
        "for": label,
        "target": cert.target.to_string(),
        "generators": texts(&cert.generators),
        "cofactors": texts(&cert.cofactors),
    })
}

fn require_data(problem: &ProblemFile) -> Result<(), CliError> {
    if problem.data.is_empty() {
        Err(usage("the problem declares no data"))
    } else {
        Ok(())
    }
}

fn groebner(problem: &ProblemFile, options: &Options, report: &mut Report) -> Result<i32, CliError> {
    let order = MonomialOrder::from(options.order);
    report.field("order", order.to_string());
    let mut items = Vec::new();
    for named in &problem.ideals {
        let gb = named.ideal.groebner(order)?;
        let basis = basis_desc(&named.ideal, order)?;
        report.line(format!("{} = {}", named.name, angle(&basis)));
        let mut item = json!({ "ideal": named.name, "basis": texts(&basis) });
        if options.certificate {
            let exprs = gb.expressions().expect("ideal bases track expressions");
            let mut certs = Vec::new();
            for (el, row) in gb.elements().iter().zip(exprs).rev() {
                let cert = Certificate::new(el.clone(), named.ideal.generators().to_vec(), row.clone());
                report.line(format!("  {cert}"));
                certs.push(certificate_json(&el.to_string(), &cert));
            }
            item["certificates"] = Value::Array(certs);
        }
        items.push(item);
    }
    report.field("ideals", items);
    Ok(EXIT_OK)
}

fn member(problem: &ProblemFile, options: &Options, report: &mut Report) -> Result<i32, CliError> {
    require_data(problem)?;
    let mut all = true;
    let mut items = Vec::new();
    for d in &problem.data {
        let named = &problem.ideals[d.ideal];
        let cert = named.ideal.member(&d.value)?;
        let symbol = if cert.is_some() { "∈" } else { "∉" };
        report.line(format!("{}: {} {symbol} {}", d.name, d.value, named.name));
        let mut item = json!({ "datum": d.name, "ideal": named.name, "member": cert.is_some() });
        if let (true, Some(c)) = (options.certificate, &cert) {
            report.line(format!("  {c}"));
            item["certificate"] = certificate_json(&d.name, c);
        }
        all &= cert.is_some();
        items.push(item);
    }
    report.field("results", items);
    Ok(if all { EXIT_OK } else { EXIT_INFEASIBLE })
}

fn radical(problem: &ProblemFile, report: &mut Report) -> Result<i32, CliError> {
    require_data(problem)?;
    let mut all = true;
    let mut items = Vec::new();
    for d in &problem.data {
        let named = &problem.ideals[d.ideal];
        let yes = radical_member(&d.value, &named.ideal)?;
        let symbol = if yes { "∈" } else { "∉" };
        report.line(format!("{}: {} {symbol} rad {}", d.name, d.value, named.name));
        items.push(json!({ "datum": d.name, "ideal": named.name, "radical_member": yes }));
        all &= yes;
    }
    report.field("results", items);
    Ok(if all { EXIT_OK } else { EXIT_INFEASIBLE })
}

fn intersect(problem: &ProblemFile, report: &mut Report) -> Result<i32, CliError> {
    if problem.ideals.is_empty() {
        return Err(usage("the problem declares no ideals"));
    }
    let all = intersect_all(&problem.ideals.iter().map(|n| &n.ideal).collect::<Vec<_>>())?;
    let basis = basis_desc(&all, MonomialOrder::Grevlex)?;
    let names: Vec<&str> = problem.ideals.iter().map(|n| n.name.as_str()).collect();
    report.line(format!("{} = {}", names.join(" ∩ "), angle(&basis)));
    report.field("ideals", names);
    report.field("basis", texts(&basis));
    Ok(EXIT_OK)
}

fn separate(problem: &ProblemFile, options: &Options, report: &mut Report) -> Result<i32, CliError> {
    let [a, b] = problem.ideals.as_slice() else {
        return Err(usage("separate needs exactly two ideals"));
    };
    report.field("ideals", vec![a.name.clone(), b.name.clone()]);
    match separator(&a.ideal, &b.ideal) {
        Ok(s) => {
            report.status("feasible");
            report.line(format!("f = {}", s.polynomial));
            report.field("f", s.polynomial.to_string());
            if options.certificate {
                report.line(format!("certificate {}: {}", a.name, s.near));
                report.line(format!("certificate {}: {}", b.name, s.far));
                report
                    .field("certificates", vec![certificate_json(&a.name, &s.near), certificate_json(&b.name, &s.far)]);
            }
            Ok(EXIT_OK)
        }
        Err(varinterp::Error::VarietiesIntersect(..)) => {
            report.status("infeasible");
            report.line(format!("witness: 1 ∉ {} + {}", a.name, b.name));
            report.field("witness", format!("1 ∉ {} + {}", a.name, b.name));
            Ok(EXIT_INFEASIBLE)
        }
        Err(e) => Err(e.into()),
    }
}

fn build_problem(problem: &ProblemFile) -> Result<InterpolationProblem, CliError> {
    require_data(problem)?;
    let ideals = problem.data.iter().map(|d| problem.ideals[d.ideal].ideal.clone()).collect();
    let data = problem.data.iter().map(|d| d.value.clone()).collect();
    Ok(InterpolationProblem::new(ideals, data)?)
}

fn interpolate(problem: &ProblemFile, options: &Options, report: &mut Report) -> Result<i32, CliError> {
    let mode = options.mode.or(problem.mode).unwrap_or(Mode::Sequential);
    report.field("mode", mode_name(mode));
    report.line(format!("mode: {}", mode_name(mode)));
    let prob = build_problem(problem)?;
    let result = match mode {
        Mode::Disjoint => interpolate_disjoint(&prob)?,
        Mode::Sequential => interpolate_sequential(&prob)?,
        Mode::Restricted => interpolate_restricted(&prob)?,
        Mode::Pair => {
            if prob.len() != 2 {
                return Err(usage("pair mode needs exactly two data"));
            }
            interpolate_pair(&prob.ideals()[0], &prob.ideals()[1], &prob.data()[0], &prob.data()[1])?
        }
    };
    Ok(render_result(problem, mode, &result, options, report))
}

fn render_result(
    problem: &ProblemFile,
    mode: Mode,
    result: &InterpolationResult,
    options: &Options,
    report: &mut Report,
) -> i32 {
    let name = |k: usize| problem.data[k].name.as_str();
    report.status(&result.status.to_string());
    if mode == Mode::Sequential && !result.radicality.is_empty() {
        let verdicts: Vec<&str> = result.radicality.iter().map(|r| report::radicality_name(*r)).collect();
        report.line(format!("radicality: {}", verdicts.join(", ")));
        report.field("radicality", verdicts);
    }
    if let Some(f) = &result.interpolant {
        report.line(format!("f = {f}"));
        report.field("f", f.to_string());
    }
    let mut witnesses = Vec::new();
    for w in &result.witnesses {
        let (i, j) = w.pair;
        let label =
            if mode == Mode::Sequential { format!("at {}", name(j)) } else { format!("{}, {}", name(i), name(j)) };
        report.line(format!("witness {label}: {w}"));
        witnesses.push(json!({
            "pair": [name(i), name(j)],
            "difference": w.difference.to_string(),
            "ideal": texts(&w.ideal),
        }));
    }
    if !witnesses.is_empty() {
        report.field("witnesses", witnesses);
    }
    if options.certificate && !result.certificates.is_empty() {
        let mut certs = Vec::new();
        for (k, c) in result.certificates.iter().enumerate() {
            let label = format!("{} on {}", name(k), problem.ideals[problem.data[k].ideal].name);
            report.line(format!("certificate {label}: {c}"));
            certs.push(certificate_json(name(k), c));
        }
        report.field("certificates", certs);
    }
    match result.status {
        Status::Feasible => EXIT_OK,
        Status::Infeasible => EXIT_INFEASIBLE,
        Status::Undecided => EXIT_UNDECIDED,
    }
}

fn pde(problem: &ProblemFile, options: &Options, report: &mut Report) -> Result<i32, CliError> {
    let prob = build_problem(problem)?;
    let (p, modulus_ideal) = if prob.len() == 1 {
        (prob.data()[0].clone(), prob.ideals()[0].clone())
    } else {
        // one polynomial matching every datum, then the union as the boundary
        let r = interpolate_sequential(&prob)?;
        if !r.is_feasible() {
            return Ok(render_result(problem, Mode::Sequential, &r, options, report));
        }
        let union = intersect_all(&prob.ideals().iter().collect::<Vec<_>>())?;
        let p = r.interpolant.expect("feasible");
        report.line(format!("p = {p}"));
        report.field("p", p.to_string());
        (p, union.canonical())
    };
    let gens: Vec<&Polynomial> = modulus_ideal.generators().iter().filter(|g| !g.is_zero()).collect();
    let q = gens.first().ok_or_else(|| usage("the boundary ideal has no nonzero generator"))?;
    if gens.len() > 1 {
        report.line("note: boundary taken as V(q) for the first generator q; the result is unique on V(q) only");
        report.field("note", "first generator used");
    }
    let operator = problem.operator.as_ref().map(|(_, l)| l);
    let split = pde_interpolate(&p, q, operator)?;
    report.status("feasible");
    report.line(format!("q = {}", split.modulus));
    report.line(format!("L = {}", split.operator));
    report.line(format!("f = {}", split.kernel_part));
    report.line(format!("h = {}", split.cofactor));
    report.field("q", split.modulus.to_string());
    report.field("L", split.operator.to_string());
    report.field("f", split.kernel_part.to_string());
    report.field("h", split.cofactor.to_string());
    Ok(EXIT_OK)
}

fn harmonic(problem: &ProblemFile, report: &mut Report) -> Result<i32, CliError> {
    let [d] = problem.data.as_slice() else {
        return Err(usage("harmonic needs exactly one datum"));
    };
    let ideal = &problem.ideals[d.ideal];
    let quadric = ideal.ideal.generators().first().ok_or_else(|| usage("the quadric ideal is empty"))?;
    let split = harmonic_interpolate(&d.value, quadric)?;
    report.status("feasible");
    report.line(format!("f = {}", split.kernel_part));
    report.line(format!("h = {}", split.cofactor));
    report.field("quadric", quadric.to_string());
    report.field("f", split.kernel_part.to_string());
    report.field("h", split.cofactor.to_string());
    Ok(EXIT_OK)
}

fn check_compat(problem: &ProblemFile, report: &mut Report) -> Result<i32, CliError> {
    let prob = build_problem(problem)?;
    let compat = compatibility_check(&prob)?;
    let mut items = Vec::new();
    for pc in &compat.pairs {
        let (j, k) = pc.pair;
        let (a, b) = (&problem.data[j].name, &problem.data[k].name);
        let verdict = if pc.compatible { "compatible" } else { "incompatible" };
        report.line(format!("{a}, {b}: {verdict}"));
        items.push(json!({ "pair": [a, b], "compatible": pc.compatible }));
    }
    report.status(if compat.is_compatible() { "compatible" } else { "incompatible" });
    report.field("pairs", items);
    Ok(if compat.is_compatible() { EXIT_OK } else { EXIT_INFEASIBLE })
}

fn check_radical(problem: &ProblemFile, report: &mut Report) -> Result<i32, CliError> {
    if problem.ideals.is_empty() {
        return Err(usage("the problem declares no ideals"));
    }
    let (mut undecided, mut negative) = (false, false);
    let mut items = Vec::new();
    for named in &problem.ideals {
        let verdict = if !is_zero_dimensional(&named.ideal) {
            undecided = true;
            "undecided (not zero-dimensional)"
        } else if is_radical(&named.ideal)? {
            "radical"
        } else {
            negative = true;
            "not radical"
        };
        report.line(format!("{}: {verdict}", named.name));
        items.push(json!({ "ideal": named.name, "verdict": verdict }));
    }
    report.field("ideals", items);
    Ok(if undecided {
        EXIT_UNDECIDED
    } else if negative {
        EXIT_INFEASIBLE
    } else {
        EXIT_OK
    })
}
