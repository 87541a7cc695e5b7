//! Piping encodings through an external DIMACS/QDIMACS solver.

use std::io::Write as _;
use std::process::Command;

use super::encode::{EncodedProblem, EncodingKind, Solution};
use crate::error::{Error, Result};

/// Placeholder for the input path in a command template.
pub const INPUT_PLACEHOLDER: &str = "{input}";

/// A parsed solver answer: the truth value and every literal from `v`/`V`
/// lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOutput {
    pub truth: bool,
    pub literals: Vec<i32>,
}

/// Reads `s SATISFIABLE`, `s UNSATISFIABLE` or the QDIMACS `s cnf 1|0 ...`
/// line, plus `v`/`V` value lines. Other lines are ignored.
pub fn parse_solver_output(text: &str) -> Result<SolverOutput> {
    let mut truth = None;
    let mut literals = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let mut toks = line.split_whitespace();
        let fail = |msg: String| Error::Solver {
            message: format!("line {}: {msg}", ln + 1),
            output: text.to_string(),
        };
        match toks.next() {
            Some("s") => {
                let verdict = match (toks.next(), toks.next()) {
                    (Some("SATISFIABLE"), _) => true,
                    (Some("UNSATISFIABLE"), _) => false,
                    (Some("cnf"), Some("1")) => true,
                    (Some("cnf"), Some("0")) => false,
                    _ => return Err(fail(format!("unrecognised result line `{}`", line.trim()))),
                };
                if truth.replace(verdict).is_some() {
                    return Err(fail("more than one result line".into()));
                }
            }
            Some("v") | Some("V") => {
                for tok in toks {
                    let lit: i32 = tok
                        .parse()
                        .map_err(|_| fail(format!("bad literal `{tok}` in value line")))?;
                    if lit == 0 {
                        break;
                    }
                    literals.push(lit);
                }
            }
            _ => {}
        }
    }
    let truth = truth.ok_or_else(|| Error::Solver {
        message: "no result line in solver output".into(),
        output: text.to_string(),
    })?;
    Ok(SolverOutput { truth, literals })
}

/// Writes `input` to a temporary file and runs `template` through `sh -c`
/// with the placeholder replaced by the file's path (appended when the
/// template has no placeholder). Returns stdout.
pub fn run_solver(input: &str, template: &str) -> Result<String> {
    let mut file = tempfile::Builder::new().suffix(".cnf").tempfile()?;
    file.write_all(input.as_bytes())?;
    file.flush()?;
    let path = file.path().to_string_lossy().into_owned();
    let quoted = format!("'{}'", path.replace('\'', "'\\''"));
    let cmd = if template.contains(INPUT_PLACEHOLDER) {
        template.replace(INPUT_PLACEHOLDER, &quoted)
    } else {
        format!("{template} {quoted}")
    };
    let out = Command::new("sh").arg("-c").arg(&cmd).output().map_err(|e| Error::Solver {
        message: format!("cannot run `{cmd}`: {e}"),
        output: String::new(),
    })?;
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    // SAT solvers conventionally exit with 10/20, so the status only
    // matters when no result line was printed.
    if !stdout.lines().any(|l| l.trim_start().starts_with("s ")) {
        return Err(Error::Solver {
            message: format!("`{cmd}` exited with {} and printed no result line", out.status),
            output: format!("{stdout}{}", String::from_utf8_lossy(&out.stderr)),
        });
    }
    Ok(stdout)
}

/// Solves an encoding with an external solver. A CNF model must assign
/// every state variable; a false ∀∃ answer must certify the universal block.
pub fn solve_external(p: &EncodedProblem, template: &str) -> Result<Solution> {
    let stdout = run_solver(&p.to_text(), template)?;
    let parsed = parse_solver_output(&stdout)?;
    let needed: Vec<i32> = match (p.kind, parsed.truth) {
        (EncodingKind::Cnf, true) => p.state_groups().flat_map(|g| g.vars.iter().copied()).collect(),
        (EncodingKind::ForallExists, false) => p.outer.clone(),
        _ => {
            return Ok(Solution {
                truth: parsed.truth,
                model: None,
            })
        }
    };
    let mut model = vec![false; p.num_vars];
    let mut seen = vec![false; p.num_vars];
    for &l in &parsed.literals {
        let v = l.unsigned_abs() as usize;
        if v > p.num_vars {
            return Err(Error::Solver {
                message: format!("value line mentions variable {v} beyond {}", p.num_vars),
                output: stdout,
            });
        }
        model[v - 1] = l > 0;
        seen[v - 1] = true;
    }
    if let Some(v) = needed.iter().find(|&&v| !seen[v as usize - 1]) {
        return Err(Error::Solver {
            message: format!("solver output does not assign variable {v}"),
            output: stdout,
        });
    }
    Ok(Solution {
        truth: parsed.truth,
        model: Some(model),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_dimacs_answers() {
        let out = parse_solver_output("c hi\ns SATISFIABLE\nv 1 -2\nv 3 0\n").unwrap();
        assert_eq!(out, SolverOutput { truth: true, literals: vec![1, -2, 3] });
        assert!(!parse_solver_output("s UNSATISFIABLE\n").unwrap().truth);
    }

    #[test]
    fn parses_qdimacs_answers() {
        let out = parse_solver_output("s cnf 0 3 2\nV -1 0\n").unwrap();
        assert_eq!(out, SolverOutput { truth: false, literals: vec![-1] });
        assert!(parse_solver_output("s cnf 1 3 2\n").unwrap().truth);
    }

    #[test]
    fn malformed_output_is_reported() {
        for text in ["", "v 1 0\n", "s MAYBE\n", "s SATISFIABLE\nv x 0\n", "s SATISFIABLE\ns SATISFIABLE\n"] {
            match parse_solver_output(text) {
                Err(Error::Solver { output, .. }) => assert_eq!(output, text),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn command_failure_carries_output() {
        match run_solver("p cnf 0 0\n", "echo oops >&2; exit 1") {
            Err(Error::Solver { output, .. }) => assert!(output.contains("oops")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn placeholder_is_substituted() {
        let out = run_solver("p cnf 0 0\n", "head -c 9 {input}; echo; echo 's SATISFIABLE'").unwrap();
        assert!(out.starts_with("p cnf 0 0"));
    }
}
