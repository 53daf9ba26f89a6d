//! AST for the proposition DSL, with a pretty-printer whose output
//! re-parses to a structurally identical tree.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::Scalar;

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

/// A parsed script: bindings and queries in source order.
#[derive(Debug, Clone, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

#[derive(Debug, Clone)]
pub enum Statement {
    Let { name: String, value: Expr, pos: Pos },
    Eval { mode: Mode, prop: Expr, state: String, post: Option<String>, pos: Pos },
}

/// The four valuation modes a query can request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Bivalent,
    Supervaluationist,
    ManyValued,
    Weak,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Bivalent => "bivalent",
            Mode::Supervaluationist => "supervaluationist",
            Mode::ManyValued => "many_valued",
            Mode::Weak => "weak",
        }
    }

    pub(crate) fn from_name(name: &str) -> Option<Self> {
        match name {
            "bivalent" => Some(Mode::Bivalent),
            "supervaluationist" => Some(Mode::Supervaluationist),
            "many_valued" => Some(Mode::ManyValued),
            "weak" => Some(Mode::Weak),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    /// Exact scalar entries of a ket literal.
    Ket(Vec<Scalar>),
    /// Projector onto the line of a ket, normalized by `⟨v|v⟩`.
    Proj(Box<Expr>),
    /// Projector negation `1 − P`.
    Not(Box<Expr>),
    /// Tensor product of projectors, spelled `(x)` in source.
    Tensor(Box<Expr>, Box<Expr>),
    Name(String),
}

// Structural equality ignores source positions: a round-tripped tree is
// equal to the original even though the printer changes layout.

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (
                Statement::Let { name: a, value: x, .. },
                Statement::Let { name: b, value: y, .. },
            ) => a == b && x == y,
            (
                Statement::Eval { mode: m1, prop: p1, state: s1, post: q1, .. },
                Statement::Eval { mode: m2, prop: p2, state: s2, post: q2, .. },
            ) => m1 == m2 && p1 == p2 && s1 == s2 && q1 == q2,
            _ => false,
        }
    }
}

impl PartialEq for Script {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements
    }
}

impl Expr {
    /// Prints with the minimal parentheses the grammar needs: the tensor
    /// chain is left-associative, and `not` binds a single term.
    fn fmt_expr(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Tensor(a, b) => {
                a.fmt_expr(f)?;
                write!(f, " (x) ")?;
                b.fmt_term(f)
            }
            _ => self.fmt_term(f),
        }
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Ket(entries) => {
                write!(f, "ket[")?;
                for (k, s) in entries.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, "]")
            }
            ExprKind::Proj(inner) => {
                write!(f, "proj(")?;
                inner.fmt_expr(f)?;
                write!(f, ")")
            }
            ExprKind::Not(inner) => {
                write!(f, "not ")?;
                if matches!(inner.kind, ExprKind::Tensor(..)) {
                    write!(f, "(")?;
                    inner.fmt_expr(f)?;
                    write!(f, ")")
                } else {
                    inner.fmt_term(f)
                }
            }
            ExprKind::Tensor(..) => {
                write!(f, "(")?;
                self.fmt_expr(f)?;
                write!(f, ")")
            }
            ExprKind::Name(name) => f.write_str(name),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_expr(f)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Let { name, value, .. } => write!(f, "let {name} = {value}"),
            Statement::Eval { mode, prop, state, post, .. } => {
                write!(f, "eval {mode} {prop} in {state}")?;
                if let Some(post) = post {
                    write!(f, " post {post}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for stmt in &self.statements {
            writeln!(f, "{stmt}")?;
        }
        Ok(())
    }
}
