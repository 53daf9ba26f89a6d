//! Name resolution, kinding, and dimension inference.
//!
//! Every expression is either ket-valued or projector-valued, with a
//! dimension inferable bottom-up. `check` walks a parsed script once and
//! rejects unbound names, kind mismatches, post-selection misuse, and
//! dimensions beyond [`crate::exact::MAX_DIM`], each with the position
//! of the offending construct.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;

use super::ast::{Expr, ExprKind, Mode, Pos, Script, Statement};
use super::{DslError, Stage};
use crate::exact::MAX_DIM;

/// What an expression denotes: a ket or a projector, with its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Vector(usize),
    Projector(usize),
}

impl Kind {
    pub fn dim(self) -> usize {
        match self {
            Kind::Vector(d) | Kind::Projector(d) => d,
        }
    }

    fn describe(self) -> String {
        match self {
            Kind::Vector(d) => format!("a {d}-dimensional ket"),
            Kind::Projector(d) => format!("a {d}-dimensional projector"),
        }
    }
}

/// A script that passed `check`; the only input [`super::run`] accepts.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckedScript {
    script: Script,
}

impl CheckedScript {
    pub fn script(&self) -> &Script {
        &self.script
    }
}

/// Validates the script, consuming it into a [`CheckedScript`].
pub fn check(script: Script) -> Result<CheckedScript, DslError> {
    let mut env: BTreeMap<String, Kind> = BTreeMap::new();
    for stmt in &script.statements {
        match stmt {
            Statement::Let { name, value, pos } => {
                let kind = kind_of(value, &env)?;
                if env.insert(name.clone(), kind).is_some() {
                    return Err(err(*pos, format!("name `{name}` is already bound")));
                }
            }
            Statement::Eval { mode, prop, state, post, pos } => {
                let prop_kind = kind_of(prop, &env)?;
                let Kind::Projector(dim) = prop_kind else {
                    return Err(err(
                        prop.pos,
                        format!("eval needs a projector-valued proposition, found {}", prop_kind.describe()),
                    ));
                };
                check_state(state, dim, *pos, &env)?;
                match (mode, post) {
                    (Mode::Weak, Some(post)) => check_state(post, dim, *pos, &env)?,
                    (Mode::Weak, None) => {
                        return Err(err(*pos, "weak evaluation requires a `post` state"));
                    }
                    (_, Some(_)) => {
                        return Err(err(
                            *pos,
                            format!("`post` is only allowed with `weak`, not `{mode}`"),
                        ));
                    }
                    (_, None) => {}
                }
            }
        }
    }
    Ok(CheckedScript { script })
}

fn check_state(
    name: &str,
    prop_dim: usize,
    pos: Pos,
    env: &BTreeMap<String, Kind>,
) -> Result<(), DslError> {
    match env.get(name) {
        None => Err(err(pos, format!("unbound name `{name}`"))),
        Some(Kind::Projector(_)) => {
            Err(err(pos, format!("`{name}` is a projector; eval states must be kets")))
        }
        Some(Kind::Vector(d)) if *d != prop_dim => Err(err(
            pos,
            format!(
                "proposition has dimension {prop_dim} but state `{name}` has dimension {d}"
            ),
        )),
        Some(Kind::Vector(_)) => Ok(()),
    }
}

fn kind_of(expr: &Expr, env: &BTreeMap<String, Kind>) -> Result<Kind, DslError> {
    match &expr.kind {
        ExprKind::Ket(entries) => {
            if entries.len() > MAX_DIM {
                return Err(err(
                    expr.pos,
                    format!("ket dimension {} exceeds the supported maximum {MAX_DIM}", entries.len()),
                ));
            }
            Ok(Kind::Vector(entries.len()))
        }
        ExprKind::Name(name) => env
            .get(name)
            .copied()
            .ok_or_else(|| err(expr.pos, format!("unbound name `{name}`"))),
        ExprKind::Proj(inner) => match kind_of(inner, env)? {
            Kind::Vector(d) => Ok(Kind::Projector(d)),
            k @ Kind::Projector(_) => Err(err(
                inner.pos,
                format!("proj expects a ket-valued expression, found {}", k.describe()),
            )),
        },
        ExprKind::Not(inner) => match kind_of(inner, env)? {
            Kind::Projector(d) => Ok(Kind::Projector(d)),
            k @ Kind::Vector(_) => Err(err(
                inner.pos,
                format!("not expects a projector-valued expression, found {}", k.describe()),
            )),
        },
        ExprKind::Tensor(a, b) => {
            let ka = kind_of(a, env)?;
            let kb = kind_of(b, env)?;
            match (ka, kb) {
                (Kind::Projector(da), Kind::Projector(db)) => {
                    let dim = da * db;
                    if dim > MAX_DIM {
                        Err(err(
                            expr.pos,
                            format!("tensor dimension {dim} exceeds the supported maximum {MAX_DIM}"),
                        ))
                    } else {
                        Ok(Kind::Projector(dim))
                    }
                }
                (Kind::Vector(_), _) => Err(err(
                    a.pos,
                    format!("(x) expects projector-valued operands, found {}", ka.describe()),
                )),
                (_, Kind::Vector(_)) => Err(err(
                    b.pos,
                    format!("(x) expects projector-valued operands, found {}", kb.describe()),
                )),
            }
        }
    }
}

fn err(pos: Pos, message: impl Into<String>) -> DslError {
    DslError::new(pos, Stage::Check, message)
}
