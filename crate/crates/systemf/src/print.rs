//! Printing in the canonical grammar.
//!
//! Arrows are always parenthesized; quantifier, λ and Λ bodies extend to the
//! right without parentheses; applications are always parenthesized.
//! Variables print under their own names, so a term should go through
//! `update_names` first if its names may clash.

use bindbox::name_of;

use crate::ast::{Te, TeKind, Ty, TyKind};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Syntax {
    #[default]
    Unicode,
    Ascii,
}

struct Tokens {
    arrow: &'static str,
    forall: &'static str,
    lambda: &'static str,
    big_lambda: &'static str,
}

impl Syntax {
    fn tokens(self) -> Tokens {
        match self {
            Syntax::Unicode => Tokens {
                arrow: " ⇒ ",
                forall: "∀",
                lambda: "λ",
                big_lambda: "Λ",
            },
            Syntax::Ascii => Tokens {
                arrow: " => ",
                forall: "all ",
                lambda: "fun ",
                big_lambda: "Lam ",
            },
        }
    }
}

fn ty_into(out: &mut String, tk: &Tokens, a: &Ty) {
    match a.kind() {
        TyKind::Var(x) => out.push_str(&name_of(x)),
        TyKind::Arr(a, b) => {
            out.push('(');
            ty_into(out, tk, a);
            out.push_str(tk.arrow);
            ty_into(out, tk, b);
            out.push(')');
        }
        TyKind::All(f) => {
            let (x, a) = f.unbind();
            out.push_str(tk.forall);
            out.push_str(&name_of(&x));
            out.push('.');
            ty_into(out, tk, &a);
        }
    }
}

fn te_into(out: &mut String, tk: &Tokens, t: &Te) {
    match t.kind() {
        TeKind::Var(x) => out.push_str(&name_of(x)),
        TeKind::Abs(a, f) => {
            let (x, t) = f.unbind();
            out.push_str(tk.lambda);
            out.push_str(&name_of(&x));
            out.push(':');
            ty_into(out, tk, a);
            out.push('.');
            te_into(out, tk, &t);
        }
        TeKind::App(t, u) => {
            out.push('(');
            te_into(out, tk, t);
            out.push(' ');
            te_into(out, tk, u);
            out.push(')');
        }
        TeKind::Lam(f) => {
            let (x, t) = f.unbind();
            out.push_str(tk.big_lambda);
            out.push_str(&name_of(&x));
            out.push('.');
            te_into(out, tk, &t);
        }
        TeKind::Spe(t, a) => {
            out.push('(');
            te_into(out, tk, t);
            out.push_str(" [");
            ty_into(out, tk, a);
            out.push_str("])");
        }
    }
}

pub fn print_ty_with(syntax: Syntax, a: &Ty) -> String {
    let mut out = String::new();
    ty_into(&mut out, &syntax.tokens(), a);
    out
}

pub fn print_te_with(syntax: Syntax, t: &Te) -> String {
    let mut out = String::new();
    te_into(&mut out, &syntax.tokens(), t);
    out
}

pub fn print_ty(a: &Ty) -> String {
    print_ty_with(Syntax::Unicode, a)
}

pub fn print_te(t: &Te) -> String {
    print_te_with(Syntax::Unicode, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::*;
    use bindbox::{bind_var, unbox};

    #[test]
    fn polymorphic_identity_type() {
        let x = new_ty_var("X");
        let a = unbox(ty_all(bind_var(&x, ty_arr(ty_var(&x), ty_var(&x)))));
        assert_eq!(print_ty(&a), "∀X.(X ⇒ X)");
        assert_eq!(print_ty_with(Syntax::Ascii, &a), "all X.(X => X)");
        assert_eq!(print_ty(&Ty::var(x)), "X");
    }

    #[test]
    fn every_term_form() {
        let xt = new_ty_var("X");
        let x = new_te_var("x");
        let f = new_te_var("f");
        let body = te_spe(te_app(te_var(&f), te_var(&x)), ty_var(&xt));
        let t = unbox(te_lam(bind_var(&xt, te_abs(ty_var(&xt), bind_var(&x, body)))));
        assert_eq!(print_te(&t), "ΛX.λx:X.((f x) [X])");
        assert_eq!(print_te_with(Syntax::Ascii, &t), "Lam X.fun x:X.((f x) [X])");
    }
}
