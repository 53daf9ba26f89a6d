//! A small declarative language for defining kets and projectors and
//! running valuation queries.
//!
//! ```text
//! # two-arm interferometer, one particle
//! let oa   = ket[1,0]
//! let d1a  = ket[1,-1]
//! let P_D1 = proj(d1a)
//! eval supervaluationist P_D1 in oa
//! ```
//!
//! Grammar (LL(1); `#` starts a comment running to end of line):
//!
//! ```text
//! script    := statement*
//! statement := "let" IDENT "=" expr
//!            | "eval" MODE expr "in" IDENT ("post" IDENT)?
//! MODE      := "bivalent" | "supervaluationist" | "many_valued" | "weak"
//! expr      := term ("(x)" term)*
//! term      := "not" term
//!            | "proj" "(" expr ")"
//!            | "ket" "[" scalar ("," scalar)* "]"
//!            | IDENT
//!            | "(" expr ")"
//! scalar    := SIGNED_INT ("/" INT)? (("+"|"-") SIGNED_INT ("/" INT)? "i")?
//!            | "i"
//! ```
//!
//! Scalar literals are exact: integers, rationals `p/q`, and Gaussian
//! rationals like `1/2-3/4i`. Decimal floats are deliberately not
//! accepted: exactness cannot be forged from the input surface.
//!
//! `proj(v)` builds the projector onto the line of `v`, normalized by
//! `⟨v|v⟩`; raw outer products are not exposed. `not` negates a projector
//! and `(x)` is the tensor product of projectors. The token `(x)` must be
//! written without inner spaces; consequently `x` cannot be used as a
//! binding name, which the parser reports explicitly.
//!
//! A script is processed in three stages: [`parse`] to an AST, [`check`]
//! for name resolution, kinding, and dimension inference, and [`run`] to
//! evaluate queries in source order. Each stage reports positional
//! diagnostics.

mod ast;
mod check;
mod eval;
mod parse;
mod token;

pub use ast::{Expr, ExprKind, Mode, Pos, Script, Statement};
pub use check::{check, CheckedScript, Kind};
pub use eval::{run, QueryResult};
pub use parse::parse;

use alloc::string::String;
use core::fmt;

/// Which processing stage produced a diagnostic. The CLI maps parse and
/// check failures to one exit code and evaluation failures to another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Parse,
    Check,
    Eval,
}

/// A positional diagnostic for a script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslError {
    pub pos: Pos,
    pub stage: Stage,
    pub message: String,
}

impl DslError {
    pub(crate) fn new(pos: Pos, stage: Stage, message: impl Into<String>) -> Self {
        DslError { pos, stage, message: message.into() }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.pos.line, self.pos.col, self.message)
    }
}

impl core::error::Error for DslError {}
