//! Lexer for the proposition DSL.

use alloc::string::String;
use alloc::vec::Vec;

use super::ast::Pos;
use super::{DslError, Stage};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum TokenKind {
    Let,
    Eval,
    In,
    Post,
    Not,
    Proj,
    Ket,
    Ident(String),
    /// Unsigned decimal digits; signs are separate tokens.
    Int(String),
    /// The tensor operator `(x)`, written without inner spaces.
    Tensor,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Equals,
    Plus,
    Minus,
    Slash,
    Eof,
}

impl TokenKind {
    pub(super) fn describe(&self) -> String {
        use TokenKind::*;
        match self {
            Let => "`let`".into(),
            Eval => "`eval`".into(),
            In => "`in`".into(),
            Post => "`post`".into(),
            Not => "`not`".into(),
            Proj => "`proj`".into(),
            Ket => "`ket`".into(),
            Ident(name) => alloc::format!("identifier `{name}`"),
            Int(digits) => alloc::format!("integer `{digits}`"),
            Tensor => "`(x)`".into(),
            LParen => "`(`".into(),
            RParen => "`)`".into(),
            LBracket => "`[`".into(),
            RBracket => "`]`".into(),
            Comma => "`,`".into(),
            Equals => "`=`".into(),
            Plus => "`+`".into(),
            Minus => "`-`".into(),
            Slash => "`/`".into(),
            Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

pub(super) fn tokenize(source: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line: u32 = 1;
    let mut col: u32 = 1;

    macro_rules! push {
        ($kind:expr, $pos:expr, $len:expr) => {{
            tokens.push(Token { kind: $kind, pos: $pos });
            i += $len;
            col += $len as u32;
        }};
    }

    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                // newline handled by the main loop
            }
            '(' => {
                if i + 2 < chars.len() && chars[i + 1] == 'x' && chars[i + 2] == ')' {
                    push!(TokenKind::Tensor, pos, 3);
                } else {
                    push!(TokenKind::LParen, pos, 1);
                }
            }
            ')' => push!(TokenKind::RParen, pos, 1),
            '[' => push!(TokenKind::LBracket, pos, 1),
            ']' => push!(TokenKind::RBracket, pos, 1),
            ',' => push!(TokenKind::Comma, pos, 1),
            '=' => push!(TokenKind::Equals, pos, 1),
            '+' => push!(TokenKind::Plus, pos, 1),
            '-' => push!(TokenKind::Minus, pos, 1),
            '/' => push!(TokenKind::Slash, pos, 1),
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                col += (i - start) as u32;
                tokens.push(Token { kind: TokenKind::Int(digits), pos });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                col += (i - start) as u32;
                let kind = match word.as_str() {
                    "let" => TokenKind::Let,
                    "eval" => TokenKind::Eval,
                    "in" => TokenKind::In,
                    "post" => TokenKind::Post,
                    "not" => TokenKind::Not,
                    "proj" => TokenKind::Proj,
                    "ket" => TokenKind::Ket,
                    _ => TokenKind::Ident(word),
                };
                tokens.push(Token { kind, pos });
            }
            other => {
                return Err(DslError::new(
                    pos,
                    Stage::Parse,
                    alloc::format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    tokens.push(Token { kind: TokenKind::Eof, pos: Pos { line, col } });
    Ok(tokens)
}
