//! Parser for the textual syntax of types and terms.
//!
//! Accepts everything the printer emits, in either syntax, plus two
//! conveniences: a parenthesized group may hold an application chain
//! `(t u v [A])`, read left to right, and a parenthesized type may hold an
//! arrow chain `(A ⇒ B ⇒ C)`, read right to left. Redundant parentheses are
//! accepted. Binder bodies (λ, Λ, ∀) are a single term or type, so
//! `(λx:A.x y)` applies `λx:A.x` to `y`.
//!
//! Bound identifiers become fresh variables. Other identifiers are looked up
//! through a [`Resolver`].

use std::collections::HashMap;
use std::fmt;

use bindbox::{bind_var, unbox, BoxVal, Var};

use crate::ast::{new_te_var, new_ty_var, te_abs, te_app, te_lam, te_spe, te_var, ty_all, ty_arr, ty_var, Te, Ty};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Lambda,
    BigLambda,
    Forall,
    Arrow,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Dot,
    Colon,
    Semi,
    Equals,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(x) => write!(f, "identifier `{x}`"),
            Tok::Lambda => f.write_str("`λ`"),
            Tok::BigLambda => f.write_str("`Λ`"),
            Tok::Forall => f.write_str("`∀`"),
            Tok::Arrow => f.write_str("`⇒`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBrack => f.write_str("`[`"),
            Tok::RBrack => f.write_str("`]`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Equals => f.write_str("`=`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("unbound identifier `{name}`")]
    Unbound { pos: Pos, name: String },
}

impl ParseError {
    pub fn pos(&self) -> Pos {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::Unbound { pos, .. } => *pos,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax-error",
            ParseError::Unbound { .. } => "unbound-identifier",
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() && !matches!(c, 'λ' | 'Λ') || c == '_'
}

fn is_ident_char(c: char) -> bool {
    is_ident_start(c) || c.is_ascii_digit() || c == '\''
}

/// Split `src` into tokens. `//` starts a comment running to end of line.
pub fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let mut pos = Pos { line: 1, col: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.col = 1;
        } else {
            pos.col += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut pos);
            continue;
        }
        if is_ident_start(c) {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !is_ident_char(c) {
                    break;
                }
                s.push(c);
                chars.next();
                advance(c, &mut pos);
            }
            let tok = match s.as_str() {
                "fun" => Tok::Lambda,
                "Lam" => Tok::BigLambda,
                "all" => Tok::Forall,
                _ => Tok::Ident(s),
            };
            out.push((tok, start));
            continue;
        }
        chars.next();
        advance(c, &mut pos);
        let tok = match c {
            'λ' => Tok::Lambda,
            'Λ' => Tok::BigLambda,
            '∀' => Tok::Forall,
            '⇒' => Tok::Arrow,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '.' => Tok::Dot,
            ':' => Tok::Colon,
            ';' => Tok::Semi,
            '=' if chars.peek() == Some(&'>') => {
                chars.next();
                advance('>', &mut pos);
                Tok::Arrow
            }
            '=' => Tok::Equals,
            '/' if chars.peek() == Some(&'/') => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    advance(c, &mut pos);
                }
                continue;
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((tok, start));
    }
    out.push((Tok::Eof, pos));
    Ok(out)
}

/// Meaning of identifiers that are not bound in the text being parsed.
pub trait Resolver {
    fn term(&mut self, name: &str) -> Option<BoxVal<Te>>;
    fn ty(&mut self, name: &str) -> Option<BoxVal<Ty>>;
}

/// A table of free variables by name. With `create` set, unknown names get
/// a new variable, which is remembered for later occurrences.
#[derive(Clone, Default)]
pub struct FreeVars {
    pub te: HashMap<String, Var<Te>>,
    pub ty: HashMap<String, Var<Ty>>,
    pub create: bool,
}

impl FreeVars {
    /// Free names are an error.
    pub fn none() -> Self {
        FreeVars::default()
    }

    /// Free names become variables.
    pub fn creating() -> Self {
        FreeVars {
            create: true,
            ..FreeVars::default()
        }
    }
}

impl Resolver for FreeVars {
    fn term(&mut self, name: &str) -> Option<BoxVal<Te>> {
        if !self.te.contains_key(name) && self.create {
            self.te.insert(name.to_string(), new_te_var(name));
        }
        self.te.get(name).map(te_var)
    }

    fn ty(&mut self, name: &str) -> Option<BoxVal<Ty>> {
        if !self.ty.contains_key(name) && self.create {
            self.ty.insert(name.to_string(), new_ty_var(name));
        }
        self.ty.get(name).map(ty_var)
    }
}

pub struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
    te_scope: Vec<(String, Var<Te>)>,
    ty_scope: Vec<(String, Var<Ty>)>,
}

type Res<T> = Result<T, ParseError>;

impl Parser {
    pub fn new(src: &str) -> Res<Self> {
        Ok(Parser {
            toks: lex(src)?,
            i: 0,
            te_scope: Vec::new(),
            ty_scope: Vec::new(),
        })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    pub fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    pub fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if t != Tok::Eof {
            self.i += 1;
        }
        t
    }

    pub fn error<T>(&self, what: &str) -> Res<T> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: format!("expected {what}, found {}", self.peek()),
        })
    }

    pub fn expect(&mut self, tok: Tok) -> Res<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(&tok.to_string())
        }
    }

    /// Consume `tok` if it is next.
    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn ident(&mut self) -> Res<String> {
        match self.peek().clone() {
            Tok::Ident(x) => {
                self.bump();
                Ok(x)
            }
            _ => self.error("an identifier"),
        }
    }

    pub fn ty(&mut self, r: &mut dyn Resolver) -> Res<BoxVal<Ty>> {
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(x) => {
                if let Some((_, v)) = self.ty_scope.iter().rev().find(|(y, _)| *y == x) {
                    return Ok(ty_var(v));
                }
                r.ty(&x).ok_or(ParseError::Unbound { pos, name: x })
            }
            Tok::Forall => {
                let x = self.ident()?;
                self.expect(Tok::Dot)?;
                let v = new_ty_var(&x);
                self.ty_scope.push((x, v.clone()));
                let body = self.ty(r);
                self.ty_scope.pop();
                Ok(ty_all(bind_var(&v, body?)))
            }
            Tok::LParen => {
                let mut parts = vec![self.ty(r)?];
                while self.eat(&Tok::Arrow) {
                    parts.push(self.ty(r)?);
                }
                self.expect(Tok::RParen)?;
                let last = parts.pop().unwrap();
                Ok(parts.into_iter().rev().fold(last, |b, a| ty_arr(a, b)))
            }
            _ => {
                self.i -= 1;
                self.error("a type")
            }
        }
    }

    pub fn term(&mut self, r: &mut dyn Resolver) -> Res<BoxVal<Te>> {
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(x) => {
                if let Some((_, v)) = self.te_scope.iter().rev().find(|(y, _)| *y == x) {
                    return Ok(te_var(v));
                }
                r.term(&x).ok_or(ParseError::Unbound { pos, name: x })
            }
            Tok::Lambda => {
                let x = self.ident()?;
                self.expect(Tok::Colon)?;
                let a = self.ty(r)?;
                self.expect(Tok::Dot)?;
                let v = new_te_var(&x);
                self.te_scope.push((x, v.clone()));
                let body = self.term(r);
                self.te_scope.pop();
                Ok(te_abs(a, bind_var(&v, body?)))
            }
            Tok::BigLambda => {
                let x = self.ident()?;
                self.expect(Tok::Dot)?;
                let v = new_ty_var(&x);
                self.ty_scope.push((x, v.clone()));
                let body = self.term(r);
                self.ty_scope.pop();
                Ok(te_lam(bind_var(&v, body?)))
            }
            Tok::LParen => {
                let mut t = self.term(r)?;
                loop {
                    match self.peek() {
                        Tok::RParen => {
                            self.bump();
                            return Ok(t);
                        }
                        Tok::LBrack => {
                            self.bump();
                            let a = self.ty(r)?;
                            self.expect(Tok::RBrack)?;
                            t = te_spe(t, a);
                        }
                        _ => t = te_app(t, self.term(r)?),
                    }
                }
            }
            Tok::Eof => self.error("a term"),
            _ => {
                self.i -= 1;
                self.error("a term")
            }
        }
    }
}

fn whole<T>(src: &str, f: impl FnOnce(&mut Parser) -> Res<BoxVal<T>>) -> Res<BoxVal<T>> {
    let mut p = Parser::new(src)?;
    let b = f(&mut p)?;
    if !p.at_eof() {
        return p.error("end of input");
    }
    Ok(b)
}

pub fn parse_ty(src: &str, r: &mut dyn Resolver) -> Res<Ty> {
    whole(src, |p| p.ty(r)).map(unbox)
}

pub fn parse_te(src: &str, r: &mut dyn Resolver) -> Res<Te> {
    whole(src, |p| p.term(r)).map(unbox)
}
