//! Untyped λ-terms in named and de Bruijn form.

use std::collections::BTreeSet;

use crate::fresh_name;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Abs(String, Box<Term>),
    App(Box<Term>, Box<Term>),
}

/// De Bruijn form: bound variables are 1-based distances to their binder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DbTerm {
    Var(String),
    Ind(usize),
    Abs(Box<DbTerm>),
    App(Box<DbTerm>, Box<DbTerm>),
}

pub fn var(x: &str) -> Term {
    Term::Var(x.to_string())
}

pub fn abs(x: &str, t: Term) -> Term {
    Term::Abs(x.to_string(), Box::new(t))
}

pub fn app(t: Term, u: Term) -> Term {
    Term::App(Box::new(t), Box::new(u))
}

pub fn free_vars(t: &Term) -> BTreeSet<String> {
    fn go(t: &Term, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match t {
            Term::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            Term::Abs(x, b) => {
                bound.push(x.clone());
                go(b, bound, out);
                bound.pop();
            }
            Term::App(a, b) => {
                go(a, bound, out);
                go(b, bound, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

/// `t[x := u]`, renaming binders that would capture free variables of `u`.
pub fn subst(t: &Term, x: &str, u: &Term) -> Term {
    match t {
        Term::Var(y) if y == x => u.clone(),
        Term::Var(_) => t.clone(),
        Term::App(a, b) => app(subst(a, x, u), subst(b, x, u)),
        Term::Abs(y, _) if y == x => t.clone(),
        Term::Abs(y, body) => {
            let fu = free_vars(u);
            if fu.contains(y) && free_vars(body).contains(x) {
                let mut avoid = fu;
                avoid.extend(free_vars(body));
                avoid.insert(x.to_string());
                let y2 = fresh_name(y, &avoid);
                let body = subst(body, y, &var(&y2));
                abs(&y2, subst(&body, x, u))
            } else {
                abs(y, subst(body, x, u))
            }
        }
    }
}

pub fn to_db(t: &Term) -> DbTerm {
    fn go(t: &Term, scope: &mut Vec<String>) -> DbTerm {
        match t {
            Term::Var(x) => match scope.iter().rev().position(|y| y == x) {
                Some(i) => DbTerm::Ind(i + 1),
                None => DbTerm::Var(x.clone()),
            },
            Term::Abs(x, b) => {
                scope.push(x.clone());
                let b = go(b, scope);
                scope.pop();
                DbTerm::Abs(Box::new(b))
            }
            Term::App(a, b) => DbTerm::App(Box::new(go(a, scope)), Box::new(go(b, scope))),
        }
    }
    go(t, &mut Vec::new())
}

pub fn alpha_eq(t: &Term, u: &Term) -> bool {
    to_db(t) == to_db(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn de_bruijn_of_application_combinator() {
        let t = abs("x", abs("y", app(var("x"), var("y"))));
        let expected = DbTerm::Abs(Box::new(DbTerm::Abs(Box::new(DbTerm::App(
            Box::new(DbTerm::Ind(2)),
            Box::new(DbTerm::Ind(1)),
        )))));
        assert_eq!(to_db(&t), expected);
    }

    #[test]
    fn overloaded_binder_names() {
        let t = abs("x", abs("x", var("x")));
        let u = abs("x", abs("y", var("y")));
        let w = abs("x", abs("y", var("x")));
        assert!(alpha_eq(&t, &u));
        assert!(!alpha_eq(&t, &w));
        assert!(alpha_eq(&t, &t));
    }

    #[test]
    fn substitution_avoids_capture() {
        let t = abs("y", var("x"));
        let r = subst(&t, "x", &var("y"));
        let Term::Abs(y2, body) = &r else { panic!() };
        assert_ne!(y2, "y");
        assert_eq!(**body, var("y"));
        assert!(alpha_eq(&r, &abs("z", var("y"))));
    }

    #[test]
    fn substitution_basics() {
        assert_eq!(subst(&var("x"), "x", &var("u")), var("u"));
        assert_eq!(subst(&var("z"), "x", &var("u")), var("z"));
        let shadow = abs("x", var("x"));
        assert_eq!(subst(&shadow, "x", &var("u")), shadow);
    }
}
