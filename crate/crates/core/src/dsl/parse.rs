//! Recursive-descent parser for the proposition DSL.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ast::{Expr, ExprKind, Mode, Pos, Script, Statement};
use super::token::{tokenize, Token, TokenKind};
use super::{DslError, Stage};
use crate::exact::{Rational, Scalar};

/// Parses a script to an AST; all failures carry line/column positions.
pub fn parse(source: &str) -> Result<Script, DslError> {
    let tokens = tokenize(source)?;
    Parser { tokens, idx: 0 }.script()
}

struct Parser {
    tokens: Vec<Token>,
    idx: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.idx]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.idx].clone();
        if self.idx + 1 < self.tokens.len() {
            self.idx += 1;
        }
        t
    }

    fn error(&self, pos: Pos, message: impl Into<String>) -> DslError {
        DslError::new(pos, Stage::Parse, message)
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<Token, DslError> {
        let t = self.peek().clone();
        if t.kind == kind {
            Ok(self.advance())
        } else {
            Err(self.error(t.pos, format!("expected {what}, found {}", t.kind.describe())))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Pos), DslError> {
        let t = self.peek().clone();
        match t.kind {
            TokenKind::Ident(name) => {
                self.advance();
                Ok((name, t.pos))
            }
            other => Err(self.error(t.pos, format!("expected {what}, found {}", other.describe()))),
        }
    }

    /// `x` is reserved outright: `(x)` is the tensor operator, so a name
    /// `x` could not be printed back unambiguously.
    fn reject_reserved(&self, name: &str, pos: Pos) -> Result<(), DslError> {
        if name == "x" {
            Err(self.error(pos, "the name `x` is reserved: `(x)` is the tensor operator"))
        } else {
            Ok(())
        }
    }

    fn script(&mut self) -> Result<Script, DslError> {
        let mut statements = Vec::new();
        loop {
            let t = self.peek().clone();
            match t.kind {
                TokenKind::Eof => break,
                TokenKind::Let => statements.push(self.let_statement()?),
                TokenKind::Eval => statements.push(self.eval_statement()?),
                other => {
                    return Err(self.error(
                        t.pos,
                        format!("expected `let` or `eval`, found {}", other.describe()),
                    ));
                }
            }
        }
        Ok(Script { statements })
    }

    fn let_statement(&mut self) -> Result<Statement, DslError> {
        let pos = self.advance().pos; // `let`
        let (name, name_pos) = self.expect_ident("a name to bind")?;
        self.reject_reserved(&name, name_pos)?;
        self.expect(TokenKind::Equals, "`=`")?;
        let value = self.expr()?;
        Ok(Statement::Let { name, value, pos })
    }

    fn eval_statement(&mut self) -> Result<Statement, DslError> {
        let pos = self.advance().pos; // `eval`
        let (mode_name, mode_pos) = self.expect_ident("a semantics mode")?;
        let mode = Mode::from_name(&mode_name).ok_or_else(|| {
            self.error(
                mode_pos,
                format!(
                    "unknown semantics mode `{mode_name}`; expected `bivalent`, \
                     `supervaluationist`, `many_valued`, or `weak`"
                ),
            )
        })?;
        let prop = self.expr()?;
        self.expect(TokenKind::In, "`in`")?;
        let (state, state_pos) = self.expect_ident("a state name")?;
        self.reject_reserved(&state, state_pos)?;
        let post = if self.peek().kind == TokenKind::Post {
            self.advance();
            let (post, post_pos) = self.expect_ident("a post-selection state name")?;
            self.reject_reserved(&post, post_pos)?;
            Some(post)
        } else {
            None
        };
        Ok(Statement::Eval { mode, prop, state, post, pos })
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        while self.peek().kind == TokenKind::Tensor {
            let pos = self.advance().pos;
            let rhs = self.term()?;
            lhs = Expr { kind: ExprKind::Tensor(Box::new(lhs), Box::new(rhs)), pos };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let t = self.peek().clone();
        match t.kind {
            TokenKind::Not => {
                self.advance();
                let inner = self.term()?;
                Ok(Expr { kind: ExprKind::Not(Box::new(inner)), pos: t.pos })
            }
            TokenKind::Proj => {
                self.advance();
                self.expect(TokenKind::LParen, "`(` after `proj`")?;
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(Expr { kind: ExprKind::Proj(Box::new(inner)), pos: t.pos })
            }
            TokenKind::Ket => {
                self.advance();
                self.expect(TokenKind::LBracket, "`[` after `ket`")?;
                let mut entries = alloc::vec![self.scalar()?];
                while self.peek().kind == TokenKind::Comma {
                    self.advance();
                    entries.push(self.scalar()?);
                }
                self.expect(TokenKind::RBracket, "`]`")?;
                Ok(Expr { kind: ExprKind::Ket(entries), pos: t.pos })
            }
            TokenKind::Ident(name) => {
                self.advance();
                self.reject_reserved(&name, t.pos)?;
                Ok(Expr { kind: ExprKind::Name(name), pos: t.pos })
            }
            TokenKind::LParen => {
                self.advance();
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(inner)
            }
            other => Err(self.error(
                t.pos,
                format!("expected an expression, found {}", other.describe()),
            )),
        }
    }

    /// `SIGNED_INT ("/" INT)? (("+"|"-") SIGNED_INT ("/" INT)? "i")? | "i"`
    fn scalar(&mut self) -> Result<Scalar, DslError> {
        if let TokenKind::Ident(name) = &self.peek().kind {
            if name == "i" {
                self.advance();
                return Ok(Scalar::i());
            }
        }
        let re = self.signed_rational("a scalar literal")?;
        let t = self.peek().clone();
        let negative_im = match t.kind {
            TokenKind::Plus => false,
            TokenKind::Minus => true,
            _ => return Ok(Scalar::from_rational(re)),
        };
        self.advance();
        let magnitude = self.signed_rational("the imaginary part")?;
        let (unit, unit_pos) = self.expect_ident("`i` after the imaginary part")?;
        if unit != "i" {
            return Err(self.error(
                unit_pos,
                format!("expected `i` after the imaginary part, found identifier `{unit}`"),
            ));
        }
        let im = if negative_im { -magnitude } else { magnitude };
        Ok(Scalar::new(re, im))
    }

    fn signed_rational(&mut self, what: &str) -> Result<Rational, DslError> {
        let negative = if self.peek().kind == TokenKind::Minus {
            self.advance();
            true
        } else {
            false
        };
        let numer = self.integer(what)?;
        let denom = if self.peek().kind == TokenKind::Slash {
            self.advance();
            let pos = self.peek().pos;
            let d = self.integer("a denominator")?;
            if d.is_zero() {
                return Err(self.error(pos, "denominator is zero"));
            }
            d
        } else {
            BigInt::from(1)
        };
        let signed = if negative { -numer } else { numer };
        Ok(Rational::new(signed, denom))
    }

    fn integer(&mut self, what: &str) -> Result<BigInt, DslError> {
        let t = self.peek().clone();
        match t.kind {
            TokenKind::Int(digits) => {
                self.advance();
                Ok(digits.parse::<BigInt>().expect("lexer emits decimal digits"))
            }
            other => Err(self.error(t.pos, format!("expected {what}, found {}", other.describe()))),
        }
    }
}
