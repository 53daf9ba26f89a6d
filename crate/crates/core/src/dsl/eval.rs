//! Interpreter: evaluates a checked script against the semantics engines.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ast::{Expr, ExprKind, Mode, Pos, Statement};
use super::check::CheckedScript;
use super::{DslError, Stage};
use crate::error::Error;
use crate::exact::ExactVector;
use crate::projector::Projector;
use crate::semantics::{evaluate, SemanticsKind, State, TruthValue};

/// One executed query and its outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryResult {
    /// The query in canonical source form, e.g.
    /// `eval many_valued P_D1 in psi_notO`.
    pub query: String,
    pub mode: Mode,
    pub value: TruthValue,
}

#[derive(Clone)]
enum Value {
    Vector(ExactVector),
    Projector(Projector),
}

/// Runs the script: bindings are evaluated in order, queries are answered
/// in order. Deterministic: the same script always yields the same
/// results in the same order.
pub fn run(checked: &CheckedScript) -> Result<Vec<QueryResult>, DslError> {
    let mut env: BTreeMap<String, Value> = BTreeMap::new();
    let mut results = Vec::new();
    for stmt in &checked.script().statements {
        match stmt {
            Statement::Let { name, value, .. } => {
                let v = match eval_expr(value, &env)? {
                    Value::Projector(p) => Value::Projector(p.with_label(name.clone())),
                    v @ Value::Vector(_) => v,
                };
                env.insert(name.clone(), v);
            }
            Statement::Eval { mode, prop, state, post, pos } => {
                let Value::Projector(p) = eval_expr(prop, &env)? else {
                    unreachable!("check guarantees a projector-valued proposition");
                };
                let psi = state_value(state, *pos, &env)?;
                let kind = match (mode, post) {
                    (Mode::Bivalent, None) => SemanticsKind::Bivalent,
                    (Mode::Supervaluationist, None) => SemanticsKind::Supervaluationist,
                    (Mode::ManyValued, None) => SemanticsKind::ManyValued,
                    (Mode::Weak, Some(post)) => {
                        SemanticsKind::WeakValued(state_value(post, *pos, &env)?)
                    }
                    _ => unreachable!("check guarantees post iff weak"),
                };
                let value = evaluate(&kind, &p, &psi)
                    .map_err(|e| eval_err(*pos, &e))?;
                results.push(QueryResult { query: stmt.to_string(), mode: *mode, value });
            }
        }
    }
    Ok(results)
}

fn state_value(name: &str, pos: Pos, env: &BTreeMap<String, Value>) -> Result<State, DslError> {
    let Some(Value::Vector(v)) = env.get(name) else {
        unreachable!("check guarantees states are bound kets");
    };
    State::new(v.clone(), name).map_err(|_| {
        DslError::new(pos, Stage::Eval, format!("state `{name}` is the zero vector"))
    })
}

fn eval_expr(expr: &Expr, env: &BTreeMap<String, Value>) -> Result<Value, DslError> {
    match &expr.kind {
        ExprKind::Ket(entries) => Ok(Value::Vector(ExactVector::new(entries.clone()))),
        ExprKind::Name(name) => {
            Ok(env.get(name).expect("check guarantees bound names").clone())
        }
        ExprKind::Proj(inner) => {
            let Value::Vector(v) = eval_expr(inner, env)? else {
                unreachable!("check guarantees proj takes a ket");
            };
            let label = expr.to_string();
            Projector::from_ket(&v, label)
                .map(Value::Projector)
                .map_err(|_| {
                    DslError::new(expr.pos, Stage::Eval, "cannot project onto the zero ket")
                })
        }
        ExprKind::Not(inner) => {
            let Value::Projector(p) = eval_expr(inner, env)? else {
                unreachable!("check guarantees not takes a projector");
            };
            Ok(Value::Projector(p.negate()))
        }
        ExprKind::Tensor(a, b) => {
            let (Value::Projector(pa), Value::Projector(pb)) =
                (eval_expr(a, env)?, eval_expr(b, env)?)
            else {
                unreachable!("check guarantees tensor takes projectors");
            };
            Ok(Value::Projector(pa.tensor(&pb)))
        }
    }
}

fn eval_err(pos: Pos, e: &Error) -> DslError {
    DslError::new(pos, Stage::Eval, e.to_string())
}
