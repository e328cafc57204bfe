//! Line-oriented instance and solution text formats.
//!
//! Instances:
//! ```text
//! # optional comments anywhere
//! p domvar <variant> <kind> <n> <m> <k> <l> <r>
//! e <u> <v>
//! m <v>
//! ```
//! ASCII with LF newlines and 0-based vertex ids; `n`/`m`/`k` are the vertex,
//! edge and modulator counts and must match the body. The modulator property
//! is re-verified on load. Solutions are a single line
//! `s <FEASIBLE|INFEASIBLE> <size> : v1 v2 ...`.

use crate::graph::Graph;
use crate::modulator::{verify_modulator, Modulator, ModulatorKind};
use crate::problem::{DomInstance, DomSolution, SolveStats, Status, Variant};
use crate::VertexSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error("modulator mismatch: deleting the modulator does not leave a {kind} residual")]
    ModulatorMismatch { kind: ModulatorKind },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn invalid(msg: impl Into<String>) -> ParseError {
    ParseError::Invalid(msg.into())
}

pub fn serialize_instance(inst: &DomInstance) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    writeln!(
        out,
        "p domvar {} {} {} {} {} {} {}",
        inst.variant,
        inst.modulator.kind,
        g.vertex_count(),
        g.edge_count(),
        inst.modulator.size(),
        inst.budget,
        inst.threshold
    )
    .unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    for v in inst.modulator.vertices.iter() {
        writeln!(out, "m {v}").unwrap();
    }
    out
}

pub fn parse_instance(text: &str) -> Result<DomInstance, ParseError> {
    let mut header: Option<(Variant, ModulatorKind, usize, usize, usize, usize, u32)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut modulator: Vec<usize> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_ascii_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(lineno, "duplicate header"));
                }
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 8 || rest[0] != "domvar" {
                    return Err(syntax(
                        lineno,
                        "expected `p domvar <variant> <kind> <n> <m> <k> <l> <r>`",
                    ));
                }
                let variant = Variant::parse(rest[1])
                    .ok_or_else(|| syntax(lineno, format!("unknown variant `{}`", rest[1])))?;
                let kind = ModulatorKind::parse(rest[2]).ok_or_else(|| {
                    syntax(lineno, format!("unknown modulator kind `{}`", rest[2]))
                })?;
                let nums: Vec<usize> = rest[3..8]
                    .iter()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| syntax(lineno, format!("bad integer `{t}`")))
                    })
                    .collect::<Result<_, _>>()?;
                let r = nums[4] as u32;
                if r < 1 {
                    return Err(syntax(lineno, "threshold must be at least 1"));
                }
                header = Some((variant, kind, nums[0], nums[1], nums[2], nums[3], r));
            }
            Some("e") => {
                let pair: Vec<&str> = tokens.collect();
                if pair.len() != 2 {
                    return Err(syntax(lineno, "expected `e <u> <v>`"));
                }
                let u = pair[0]
                    .parse()
                    .map_err(|_| syntax(lineno, "bad vertex id"))?;
                let v = pair[1]
                    .parse()
                    .map_err(|_| syntax(lineno, "bad vertex id"))?;
                edges.push((u, v));
            }
            Some("m") => {
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 1 {
                    return Err(syntax(lineno, "expected `m <v>`"));
                }
                modulator.push(
                    rest[0]
                        .parse()
                        .map_err(|_| syntax(lineno, "bad vertex id"))?,
                );
            }
            Some(other) => {
                return Err(syntax(lineno, format!("unknown line type `{other}`")));
            }
            None => unreachable!(),
        }
    }

    let Some((variant, kind, n, m, k, budget, threshold)) = header else {
        return Err(invalid("missing `p domvar` header"));
    };
    let graph = Graph::build(n, &edges).map_err(|e| invalid(e.to_string()))?;
    if graph.edge_count() != m {
        return Err(invalid(format!(
            "header declares {m} edges, body has {}",
            graph.edge_count()
        )));
    }
    if modulator.len() != k {
        return Err(invalid(format!(
            "header declares {k} modulator vertices, body has {}",
            modulator.len()
        )));
    }
    for &v in &modulator {
        if v >= n {
            return Err(invalid(format!("modulator vertex {v} out of range")));
        }
    }
    let dedup: VertexSet = modulator.iter().copied().collect();
    if dedup.len() != modulator.len() {
        return Err(invalid("duplicate modulator vertex"));
    }
    let modulator = Modulator::new(kind, dedup);
    if !verify_modulator(&graph, &modulator) {
        return Err(ParseError::ModulatorMismatch { kind });
    }
    Ok(DomInstance {
        graph,
        modulator,
        variant,
        budget,
        threshold,
    })
}

pub fn serialize_solution(sol: &DomSolution) -> String {
    let mut out = format!("s {} {} :", sol.status, sol.size);
    for v in sol.vertices.iter() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    out
}

pub fn parse_solution(text: &str) -> Result<DomSolution, ParseError> {
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_ascii_whitespace();
        if tokens.next() != Some("s") {
            return Err(syntax(i + 1, "expected `s <status> <size> : v1 v2 ...`"));
        }
        let status = match tokens.next() {
            Some("FEASIBLE") => Status::Feasible,
            Some("INFEASIBLE") => Status::Infeasible,
            other => return Err(syntax(i + 1, format!("bad status {other:?}"))),
        };
        let size: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| syntax(i + 1, "bad size"))?;
        if tokens.next() != Some(":") {
            return Err(syntax(i + 1, "expected `:` before the vertex list"));
        }
        let mut vertices = VertexSet::new();
        for t in tokens {
            vertices.insert(t.parse().map_err(|_| syntax(i + 1, "bad vertex id"))?);
        }
        if status == Status::Feasible && vertices.len() != size {
            return Err(syntax(i + 1, "size does not match the vertex list"));
        }
        return Ok(DomSolution {
            status,
            size,
            vertices,
            guess_used: None,
            stats: SolveStats::default(),
        });
    }
    Err(invalid("missing `s` line"))
}
