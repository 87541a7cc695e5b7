use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

use rsfix::dynamics::{orbit, MAX_CAP};
use rsfix::format::{emit_dot, emit_system, parse_system};
use rsfix::logic::{self, AttractorEncoding, Mode, SolveOptions};
use rsfix::polytime;
use rsfix::reductions::{DecodeFrom, Target};
use rsfix::{BruteForce, Construction, Error, Formula, Problem, ReactionSystem, State, Verdict};

use crate::{AnalyzeProblem, Command, CompareProblem, Encoding, Engine, EngineMode};

/// Largest graph written without `--force`, in entities.
const GRAPH_CAP: usize = 8;

pub struct Failure {
    pub error: Error,
    pub path: Option<PathBuf>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, path: None }
    }
}

type Res<T> = Result<T, Failure>;

fn at(path: &Path) -> impl FnOnce(Error) -> Failure + '_ {
    move |error| Failure {
        error,
        path: Some(path.to_path_buf()),
    }
}

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| at(path)(e.into()))
}

fn write(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|e| at(path)(e.into()))
}

fn load_system(path: &Path) -> Res<ReactionSystem> {
    parse_system(&read(path)?).map_err(at(path))
}

fn load_formula(path: &Path) -> Res<Formula> {
    Formula::parse(&read(path)?).map_err(at(path))
}

pub fn run(command: Command) -> Res<()> {
    match command {
        Command::Analyze {
            system,
            problem,
            engine,
            state,
        } => analyze(&system, problem, &engine, state.as_deref()),
        Command::Compare { a, b, problem, engine } => compare(&a, &b, problem, &engine),
        Command::Bijective { system, cap } => bijective(&system, cap),
        Command::Lfp { system } => lfp(&system),
        Command::Reduce {
            construction,
            formula,
            output,
        } => reduce(&construction, &formula, output.as_deref()),
        Command::Orbit {
            system,
            init,
            max_steps,
        } => run_orbit(&system, &init, max_steps),
        Command::Graph {
            system,
            output,
            restrict,
            force,
        } => graph(&system, &output, restrict.as_deref(), force),
        Command::Solve {
            formula,
            cap,
            outer_cap,
        } => solve(&formula, cap, outer_cap),
    }
}

fn yes_no(answer: bool) -> &'static str {
    if answer {
        "YES"
    } else {
        "NO"
    }
}

fn elapsed(start: Instant) -> String {
    format!("time: {:.3} ms", start.elapsed().as_secs_f64() * 1e3)
}

fn print_verdict(sys: &ReactionSystem, problem: Problem, v: &Verdict) {
    println!("verdict: {}", yes_no(v.answer));
    if let Some(w) = &v.witness {
        let label = if problem.is_universal() { "counterexample" } else { "witness" };
        println!("{label}: {}", sys.format_state(w));
    }
    for u in &v.preimages {
        println!("preimage: {}", sys.format_state(u));
    }
}

/// Routes a decision problem to brute force or the logic back end.
fn decide(
    engine: &Engine,
    problem: Problem,
    a: &ReactionSystem,
    b: Option<&ReactionSystem>,
    given: Option<&State>,
) -> Res<(Verdict, String)> {
    if engine.mode == EngineMode::Brute {
        let brute = BruteForce::new().with_cap(engine.cap);
        let v = brute.decide(problem, a, b, given)?;
        return Ok((v, format!("brute (cap {})", brute.cap())));
    }
    let mode = Mode::for_problem(problem)
        .ok_or_else(|| Error::Precondition(format!("{problem} has no encoding; use --mode brute")))?;
    match (engine.mode, mode.is_qbf()) {
        (EngineMode::Sat, true) => {
            return Err(Error::Precondition(format!("{mode} is a forall-exists problem; use --mode qbf")).into())
        }
        (EngineMode::Qbf, false) => {
            return Err(Error::Precondition(format!("{mode} is propositional; use --mode sat")).into())
        }
        _ => {}
    }
    let att = match engine.encoding {
        Encoding::Direct => AttractorEncoding::Direct,
        Encoding::Reach => AttractorEncoding::Reach,
    };
    let p = logic::encode_problem_with(mode, a, b, given, att)?;
    let (sol, how) = match &engine.solver {
        Some(cmd) => (logic::solve_external(&p, cmd)?, format!("external `{cmd}`")),
        None => (logic::solve_brute(&p)?, "internal".to_string()),
    };
    let v = p.verdict(&sol, a, b)?;
    let desc = format!(
        "{} {mode} via {how} ({} vars, {} clauses)",
        if mode.is_qbf() { "qbf" } else { "sat" },
        p.num_vars,
        p.num_clauses()
    );
    Ok((v, desc))
}

fn analyze(path: &Path, problem: AnalyzeProblem, engine: &Engine, state: Option<&str>) -> Res<()> {
    let sys = load_system(path)?;
    let start = Instant::now();
    let listing = matches!(problem, AnalyzeProblem::Fixpoints | AnalyzeProblem::Attractors);
    if listing && engine.mode == EngineMode::Brute {
        let report = BruteForce::new().with_cap(engine.cap).enumerate_fixed_points(&sys)?;
        let attractors_only = problem == AnalyzeProblem::Attractors;
        println!("problem: {}", if attractors_only { "attractors" } else { "fixpoints" });
        let mut count = 0;
        for fp in &report.fixed_points {
            if attractors_only && !fp.is_attractor() {
                continue;
            }
            count += 1;
            match &fp.preimage {
                Some(u) => println!(
                    "fixed point: {} (attractor, from {})",
                    sys.format_state(&fp.state),
                    sys.format_state(u)
                ),
                None => println!("fixed point: {} (not an attractor)", sys.format_state(&fp.state)),
            }
        }
        println!("verdict: {}", yes_no(count > 0));
        println!("{}", elapsed(start));
        return Ok(());
    }
    let p = match problem {
        AnalyzeProblem::Fixpoints | AnalyzeProblem::ExistsFixpoint => Problem::ExistsFixpoint,
        AnalyzeProblem::Attractors | AnalyzeProblem::ExistsAttractor => Problem::ExistsAttractor,
        AnalyzeProblem::ExistsFixge => Problem::ExistsFixge,
        AnalyzeProblem::GivenStateAttractor => Problem::GivenStateAttractor,
    };
    let given = match (p, state) {
        (Problem::GivenStateAttractor, Some(s)) => Some(sys.entities().parse_set(s)?),
        (Problem::GivenStateAttractor, None) => {
            return Err(Error::Precondition("given-state-attractor needs --state".into()).into())
        }
        (_, Some(_)) => return Err(Error::Precondition(format!("{p} takes no --state")).into()),
        (_, None) => None,
    };
    let (v, how) = decide(engine, p, &sys, None, given.as_ref())?;
    println!("problem: {p}");
    println!("engine: {how}");
    print_verdict(&sys, p, &v);
    println!("{}", elapsed(start));
    Ok(())
}

fn compare(pa: &Path, pb: &Path, problem: CompareProblem, engine: &Engine) -> Res<()> {
    let a = load_system(pa)?;
    let b = load_system(pb)?;
    let start = Instant::now();
    let p = match problem {
        CompareProblem::ResEq => Problem::ResEq,
        CompareProblem::CommonFixpoint => Problem::CommonFixpoint,
        CompareProblem::CommonAttractor => Problem::CommonAttractor,
        CompareProblem::CommonFixge => Problem::CommonFixge,
        CompareProblem::SharedFixpoints => Problem::ShareAllFixpoints,
        CompareProblem::SharedAttractors => Problem::ShareAllAttractors,
        CompareProblem::SharedFixge => Problem::ShareAllFixge,
    };
    println!("problem: {p}");
    if p == Problem::ResEq && engine.mode == EngineMode::Brute {
        let (ca, cb) = (a.classify(), b.classify());
        let poly = if ca.is_inhibitorless && cb.is_inhibitorless {
            Some(("inhibitorless", polytime::res_eq_inhibitorless(&a, &b)?))
        } else if ca.is_reactantless && cb.is_reactantless {
            Some(("reactantless", polytime::res_eq_reactantless(&a, &b)?))
        } else {
            None
        };
        if let Some((class, answer)) = poly {
            println!("engine: polynomial ({class})");
            println!("verdict: {}", yes_no(answer));
            println!("{}", elapsed(start));
            return Ok(());
        }
    }
    let (v, how) = decide(engine, p, &a, Some(&b), None)?;
    println!("engine: {how}");
    print_verdict(&a, p, &v);
    println!("{}", elapsed(start));
    Ok(())
}

fn bijective(path: &Path, cap: usize) -> Res<()> {
    let sys = load_system(path)?;
    let start = Instant::now();
    let class = sys.classify();
    let poly = if class.is_inhibitorless {
        Some(("inhibitorless", polytime::bijective_inhibitorless(&sys)?))
    } else if class.is_reactantless {
        Some(("reactantless", polytime::bijective_reactantless(&sys)?))
    } else {
        None
    };
    match poly {
        Some((class, b)) => {
            println!("engine: polynomial ({class})");
            println!("verdict: {}", yes_no(b.is_bijective()));
            if let polytime::Bijectivity::Fails(why) = b {
                println!("reason: {why:?}");
            }
        }
        None => {
            let brute = BruteForce::new().with_cap(cap);
            let answer = brute.is_bijective(&sys)?;
            println!("engine: brute (cap {})", brute.cap());
            println!("verdict: {}", yes_no(answer));
        }
    }
    println!("{}", elapsed(start));
    Ok(())
}

fn lfp(path: &Path) -> Res<()> {
    let sys = load_system(path)?;
    let chain = polytime::lfp_chain(&sys)?;
    let gfp = polytime::gfp_monotone(&sys)?;
    let chain_text: Vec<String> = chain.iter().map(|s| sys.format_state(s)).collect();
    println!("problem: {}", Problem::ExistsFixpoint);
    println!("chain: {}", chain_text.join(" -> "));
    println!("lfp: {}", sys.format_state(chain.last().expect("non-empty chain")));
    println!("gfp: {}", sys.format_state(&gfp));
    println!("verdict: YES");
    Ok(())
}

#[derive(Serialize)]
struct Manifest {
    construction: String,
    question: String,
    target_problem: String,
    claims: Vec<ClaimEntry>,
    systems: Vec<SystemEntry>,
    distinguished_state: Option<String>,
    decoder: Vec<DecoderEntry>,
}

#[derive(Serialize)]
struct ClaimEntry {
    problem: String,
    systems: &'static str,
    negated: bool,
    decode_from: &'static str,
}

#[derive(Serialize)]
struct SystemEntry {
    role: &'static str,
    path: String,
    entities: usize,
    reactions: usize,
}

#[derive(Serialize)]
struct DecoderEntry {
    variable: usize,
    entity: String,
}

fn reduce(construction: &str, formula: &Path, output: Option<&Path>) -> Res<()> {
    let c: Construction = construction.parse()?;
    let f = load_formula(formula)?;
    let out = c.apply(&f).map_err(at(formula))?;
    let Some(path) = output else {
        print!("{}", emit_system(&out.system_a));
        if let Some(b) = &out.system_b {
            println!("# second system");
            print!("{}", emit_system(b));
        }
        return Ok(());
    };
    let b_path = path.with_extension("b.rsys");
    let manifest_path = path.with_extension("json");
    write(path, &emit_system(&out.system_a))?;
    let mut systems = vec![SystemEntry {
        role: "A",
        path: path.display().to_string(),
        entities: out.system_a.width(),
        reactions: out.system_a.reactions().len(),
    }];
    if let Some(b) = &out.system_b {
        write(&b_path, &emit_system(b))?;
        systems.push(SystemEntry {
            role: "B",
            path: b_path.display().to_string(),
            entities: b.width(),
            reactions: b.reactions().len(),
        });
    }
    let names = out.system_a.entities();
    let manifest = Manifest {
        construction: c.name().into(),
        question: format!("{:?}", out.question),
        target_problem: out.target_problem().name().into(),
        claims: out
            .claims
            .iter()
            .map(|cl| ClaimEntry {
                problem: cl.problem.name().into(),
                systems: match cl.target {
                    Target::A => "A",
                    Target::AB => "A,B",
                },
                negated: cl.negated,
                decode_from: match cl.decode {
                    DecodeFrom::Witness => "witness",
                    DecodeFrom::Preimage => "preimage",
                },
            })
            .collect(),
        distinguished_state: out.distinguished_state.as_ref().map(|s| out.system_a.format_state(s)),
        decoder: out
            .decoder
            .table()
            .iter()
            .map(|&(v, e)| DecoderEntry {
                variable: v,
                entity: names.name(e).to_string(),
            })
            .collect(),
        systems,
    };
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write(&manifest_path, &(json + "\n"))?;
    println!("construction: {c}");
    for s in &manifest.systems {
        println!("system {}: {} ({} entities, {} reactions)", s.role, s.path, s.entities, s.reactions);
    }
    println!("manifest: {}", manifest_path.display());
    Ok(())
}

fn run_orbit(path: &Path, init: &str, max_steps: usize) -> Res<()> {
    let sys = load_system(path)?;
    let start = sys.entities().parse_set(init)?;
    let report = orbit(&sys, &start, max_steps)?;
    for (k, s) in report.sequence.iter().enumerate() {
        println!("{k}: {}", sys.format_state(s));
    }
    println!("tail: {}", report.tail_length);
    match report.cycle_length {
        Some(c) => println!("cycle: {c}"),
        None => println!("cycle: none within {max_steps} steps"),
    }
    Ok(())
}

fn graph(path: &Path, output: &Path, restrict: Option<&str>, force: bool) -> Res<()> {
    let sys = load_system(path)?;
    let restrict = restrict.map(|r| sys.entities().parse_set(r)).transpose()?;
    let size = restrict.as_ref().map_or(sys.width(), |r| r.len());
    if size > GRAPH_CAP && !force {
        return Err(Error::Capability {
            what: "transition graph",
            size,
            cap: GRAPH_CAP,
            hint: "pass --force to write larger graphs",
        }
        .into());
    }
    let brute = if force { BruteForce::new().with_cap(MAX_CAP) } else { BruteForce::new() };
    let edges = brute.transition_graph(&sys, restrict.as_ref())?;
    write(output, &emit_dot(&sys, &edges))?;
    println!("graph: {} nodes written to {}", edges.len(), output.display());
    Ok(())
}

fn solve(path: &Path, cap: usize, outer_cap: usize) -> Res<()> {
    let f = load_formula(path)?;
    let opts = SolveOptions {
        cnf_cap: cap,
        qbf_outer_cap: outer_cap,
    };
    let sol = logic::solve_formula(&f, opts).map_err(at(path))?;
    let lits = |vars: &mut dyn Iterator<Item = usize>, model: &[bool]| -> String {
        vars.map(|v| format!("{} ", if model[v - 1] { v as i64 } else { -(v as i64) }))
            .collect()
    };
    if f.is_quantified() {
        println!("s cnf {} {} {}", u8::from(sol.truth), f.num_vars(), f.clauses().len());
        if let Some(m) = &sol.model {
            for &v in f.universal_vars() {
                println!("V {} 0", if m[v - 1] { v as i64 } else { -(v as i64) });
            }
        }
    } else if let Some(m) = &sol.model {
        println!("s SATISFIABLE");
        println!("v {}0", lits(&mut (1..=f.num_vars()), m));
    } else {
        println!("s UNSATISFIABLE");
    }
    println!("c verdict: {}", yes_no(sol.truth));
    Ok(())
}
