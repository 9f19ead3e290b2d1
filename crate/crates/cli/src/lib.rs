//! Script runner behind the `sysf` binary.
//!
//! A script is a sequence of statements, each ended by `;`:
//!
//! ```text
//! def name [: TYPE] = TERM;   check, then make `name` available
//! assert TERM : TYPE;         check TERM against TYPE
//! eval TERM;                  type, normalize, print the normal form
//! print TERM;                 print TERM
//! ```
//!
//! Definitions are inlined where used. Type identifiers that are not bound
//! by a `∀` or `Λ` denote free type variables shared by the whole script.
//! Statements run in order and the first error stops the script.

use std::collections::HashMap;
use std::fmt::Write as _;

use bindbox::{unbox, BoxVal, Var};
use systemf::parse::Tok;
use systemf::{
    check, infer, lift_te, new_ty_var, nf_limited, print_te_with, print_ty_with, ty_var, update_names,
    update_names_ty, Context, ParseError, Parser, Pos, Resolver, Syntax, Te, Ty,
};

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// β-step budget for each `eval`.
    pub steps: u64,
    pub syntax: Syntax,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            steps: 1_000_000,
            syntax: Syntax::Unicode,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub pos: Pos,
    pub code: &'static str,
    pub message: String,
}

impl Diagnostic {
    /// `file:line:col: code: message`
    pub fn render(&self, file: &str) -> String {
        format!("{file}:{}: {}: {}", self.pos, self.code, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    UserError(Diagnostic),
    BudgetExhausted(Diagnostic),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::UserError(_) => 1,
            Outcome::BudgetExhausted(_) => 2,
        }
    }

    pub fn diagnostic(&self) -> Option<&Diagnostic> {
        match self {
            Outcome::Ok => None,
            Outcome::UserError(d) | Outcome::BudgetExhausted(d) => Some(d),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub stdout: String,
    pub outcome: Outcome,
}

#[derive(Default)]
struct Globals {
    defs: HashMap<String, Te>,
    tys: HashMap<String, Var<Ty>>,
}

impl Resolver for Globals {
    fn term(&mut self, name: &str) -> Option<BoxVal<Te>> {
        self.defs.get(name).map(lift_te)
    }

    fn ty(&mut self, name: &str) -> Option<BoxVal<Ty>> {
        let v = self.tys.entry(name.to_string()).or_insert_with(|| new_ty_var(name));
        Some(ty_var(v))
    }
}

fn parse_error(e: ParseError) -> Outcome {
    Outcome::UserError(Diagnostic {
        pos: e.pos(),
        code: e.code(),
        message: e.to_string(),
    })
}

fn user_error(pos: Pos, code: &'static str, message: String) -> Outcome {
    Outcome::UserError(Diagnostic { pos, code, message })
}

struct Runner<'a> {
    opts: &'a Options,
    globals: Globals,
    out: String,
}

impl Runner<'_> {
    fn show_ty(&self, a: &Ty) -> String {
        print_ty_with(self.opts.syntax, &update_names_ty(a))
    }

    fn show_te(&self, t: &Te) -> String {
        print_te_with(self.opts.syntax, &update_names(t))
    }

    fn term(&mut self, p: &mut Parser) -> Result<(Pos, Te), Outcome> {
        let pos = p.pos();
        let t = p.term(&mut self.globals).map_err(parse_error)?;
        Ok((pos, unbox(t)))
    }

    fn ty(&mut self, p: &mut Parser) -> Result<Ty, Outcome> {
        p.ty(&mut self.globals).map(unbox).map_err(parse_error)
    }

    fn statement(&mut self, p: &mut Parser) -> Result<(), Outcome> {
        let pos = p.pos();
        let keyword = p.ident().map_err(parse_error)?;
        match keyword.as_str() {
            "def" => {
                let name_pos = p.pos();
                let name = p.ident().map_err(parse_error)?;
                let annot = if p.eat(&Tok::Colon) { Some(self.ty(p)?) } else { None };
                p.expect(Tok::Equals).map_err(parse_error)?;
                let (tpos, t) = self.term(p)?;
                p.expect(Tok::Semi).map_err(parse_error)?;
                if self.globals.defs.contains_key(&name) {
                    return Err(user_error(
                        name_pos,
                        "duplicate-definition",
                        format!("`{name}` is already defined"),
                    ));
                }
                let a = match annot {
                    Some(a) => check(&Context::new(), &t, &a).map(|()| a),
                    None => infer(&Context::new(), &t),
                }
                .map_err(|e| user_error(tpos, e.code(), e.to_string()))?;
                writeln!(self.out, "{name} : {}", self.show_ty(&a)).unwrap();
                self.globals.defs.insert(name, t);
            }
            "assert" => {
                let (tpos, t) = self.term(p)?;
                p.expect(Tok::Colon).map_err(parse_error)?;
                let a = self.ty(p)?;
                p.expect(Tok::Semi).map_err(parse_error)?;
                check(&Context::new(), &t, &a).map_err(|e| user_error(tpos, e.code(), e.to_string()))?;
            }
            "eval" => {
                let (tpos, t) = self.term(p)?;
                p.expect(Tok::Semi).map_err(parse_error)?;
                infer(&Context::new(), &t).map_err(|e| user_error(tpos, e.code(), e.to_string()))?;
                let (n, _) = nf_limited(&t, self.opts.steps).map_err(|e| {
                    Outcome::BudgetExhausted(Diagnostic {
                        pos: tpos,
                        code: "budget-exhausted",
                        message: e.to_string(),
                    })
                })?;
                writeln!(self.out, "{}", self.show_te(&n)).unwrap();
            }
            "print" => {
                let (_, t) = self.term(p)?;
                p.expect(Tok::Semi).map_err(parse_error)?;
                writeln!(self.out, "{}", self.show_te(&t)).unwrap();
            }
            other => {
                return Err(user_error(
                    pos,
                    "syntax-error",
                    format!("expected `def`, `assert`, `eval` or `print`, found `{other}`"),
                ))
            }
        }
        Ok(())
    }
}

pub fn run(src: &str, opts: &Options) -> Report {
    let mut runner = Runner {
        opts,
        globals: Globals::default(),
        out: String::new(),
    };
    let outcome = match Parser::new(src) {
        Err(e) => parse_error(e),
        Ok(mut p) => loop {
            if p.at_eof() {
                break Outcome::Ok;
            }
            if let Err(o) = runner.statement(&mut p) {
                break o;
            }
        },
    };
    Report {
        stdout: runner.out,
        outcome,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(src: &str) -> Report {
        run(src, &Options::default())
    }

    #[test]
    fn definitions_are_typed_and_inlined() {
        let r = go("def id : ∀X.(X ⇒ X) = ΛX.λx:X.x;\neval ((id [A]) a);");
        assert_eq!(r.outcome.exit_code(), 1);
        let d = r.outcome.diagnostic().unwrap();
        assert_eq!(d.code, "unbound-identifier");
        assert_eq!(d.pos, Pos { line: 2, col: 16 });

        let r = go("def id : ∀X.(X ⇒ X) = ΛX.λx:X.x;\neval λa:A.((id [A]) a);\nprint id;");
        assert_eq!(r.outcome, Outcome::Ok);
        assert_eq!(r.stdout, "id : ∀X.(X ⇒ X)\nλa:A.a\nΛX.λx:X.x\n");
    }

    #[test]
    fn mismatch_is_reported() {
        let r = go("assert λx:A.x : (B ⇒ B);");
        let d = r.outcome.diagnostic().unwrap();
        assert_eq!(r.outcome.exit_code(), 1);
        assert_eq!(d.code, "type-mismatch-abs");
        assert_eq!(d.render("f.sf"), "f.sf:1:8: type-mismatch-abs: [check] type mismatch... (abs) (expected B, found A)");
    }

    #[test]
    fn budget() {
        let src = "def two = ΛX.λf:(X ⇒ X).λx:X.(f (f x));\neval ΛX.((two [(X ⇒ X)]) (two [X]));";
        let r = run(src, &Options { steps: 3, ..Options::default() });
        assert_eq!(r.outcome.exit_code(), 2);
        assert_eq!(r.outcome.diagnostic().unwrap().code, "budget-exhausted");
        let r = go(src);
        assert_eq!(r.stdout.lines().last().unwrap(), "ΛX.λx:(X ⇒ X).λx0:X.(x (x (x (x x0))))");
    }

    #[test]
    fn ascii_output() {
        let r = run("print ΛX.λx:X.x;", &Options { syntax: Syntax::Ascii, ..Options::default() });
        assert_eq!(r.stdout, "Lam X.fun x:X.x\n");
    }

    #[test]
    fn errors() {
        assert_eq!(go("def x = ;").outcome.diagnostic().unwrap().code, "syntax-error");
        assert_eq!(go("frobnicate x;").outcome.diagnostic().unwrap().code, "syntax-error");
        let r = go("def a = λx:A.x;\ndef a = λx:A.x;");
        assert_eq!(r.outcome.diagnostic().unwrap().code, "duplicate-definition");
        let r = go("eval λx:A.(x x);");
        assert_eq!(r.outcome.diagnostic().unwrap().code, "expected-arrow");
        let r = go("eval λx:X.");
        assert_eq!(r.outcome.diagnostic().unwrap().pos, Pos { line: 1, col: 11 });
    }
}
