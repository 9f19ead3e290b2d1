//! System F with string names for every variable, bound or free.
//!
//! Term variables and type variables live in separate namespaces.

use std::collections::BTreeSet;
use std::fmt;

use crate::fresh_name;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedTy {
    Var(String),
    Arr(Box<NamedTy>, Box<NamedTy>),
    All(String, Box<NamedTy>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedTe {
    Var(String),
    Abs(String, NamedTy, Box<NamedTe>),
    App(Box<NamedTe>, Box<NamedTe>),
    Lam(String, Box<NamedTe>),
    Spe(Box<NamedTe>, NamedTy),
}

impl NamedTy {
    pub fn var(x: &str) -> Self {
        NamedTy::Var(x.to_string())
    }

    pub fn arr(a: NamedTy, b: NamedTy) -> Self {
        NamedTy::Arr(Box::new(a), Box::new(b))
    }

    pub fn all(x: &str, a: NamedTy) -> Self {
        NamedTy::All(x.to_string(), Box::new(a))
    }

    pub fn size(&self) -> usize {
        match self {
            NamedTy::Var(_) => 1,
            NamedTy::Arr(a, b) => 1 + a.size() + b.size(),
            NamedTy::All(_, a) => 1 + a.size(),
        }
    }
}

impl NamedTe {
    pub fn var(x: &str) -> Self {
        NamedTe::Var(x.to_string())
    }

    pub fn abs(x: &str, a: NamedTy, t: NamedTe) -> Self {
        NamedTe::Abs(x.to_string(), a, Box::new(t))
    }

    pub fn app(t: NamedTe, u: NamedTe) -> Self {
        NamedTe::App(Box::new(t), Box::new(u))
    }

    pub fn lam(x: &str, t: NamedTe) -> Self {
        NamedTe::Lam(x.to_string(), Box::new(t))
    }

    pub fn spe(t: NamedTe, a: NamedTy) -> Self {
        NamedTe::Spe(Box::new(t), a)
    }

    /// Number of term constructors (type annotations not counted).
    pub fn size(&self) -> usize {
        match self {
            NamedTe::Var(_) => 1,
            NamedTe::Abs(_, _, t) | NamedTe::Lam(_, t) | NamedTe::Spe(t, _) => 1 + t.size(),
            NamedTe::App(t, u) => 1 + t.size() + u.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            NamedTe::Var(_) => 1,
            NamedTe::Abs(_, _, t) | NamedTe::Lam(_, t) | NamedTe::Spe(t, _) => 1 + t.depth(),
            NamedTe::App(t, u) => 1 + t.depth().max(u.depth()),
        }
    }
}

pub fn ftv_ty(a: &NamedTy) -> BTreeSet<String> {
    fn go(a: &NamedTy, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match a {
            NamedTy::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            NamedTy::Arr(a, b) => {
                go(a, bound, out);
                go(b, bound, out);
            }
            NamedTy::All(x, a) => {
                bound.push(x.clone());
                go(a, bound, out);
                bound.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(a, &mut Vec::new(), &mut out);
    out
}

/// Free type variables of a term (in annotations and instantiations).
pub fn ftv_te(t: &NamedTe) -> BTreeSet<String> {
    fn go(t: &NamedTe, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let ty = |a: &NamedTy, bound: &Vec<String>, out: &mut BTreeSet<String>| {
            out.extend(ftv_ty(a).into_iter().filter(|x| !bound.contains(x)));
        };
        match t {
            NamedTe::Var(_) => {}
            NamedTe::Abs(_, a, t) => {
                ty(a, bound, out);
                go(t, bound, out);
            }
            NamedTe::App(t, u) => {
                go(t, bound, out);
                go(u, bound, out);
            }
            NamedTe::Lam(x, t) => {
                bound.push(x.clone());
                go(t, bound, out);
                bound.pop();
            }
            NamedTe::Spe(t, a) => {
                go(t, bound, out);
                ty(a, bound, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

/// Free term variables of a term.
pub fn fv_te(t: &NamedTe) -> BTreeSet<String> {
    fn go(t: &NamedTe, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match t {
            NamedTe::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            NamedTe::Abs(x, _, t) => {
                bound.push(x.clone());
                go(t, bound, out);
                bound.pop();
            }
            NamedTe::App(t, u) => {
                go(t, bound, out);
                go(u, bound, out);
            }
            NamedTe::Lam(_, t) | NamedTe::Spe(t, _) => go(t, bound, out),
        }
    }
    let mut out = BTreeSet::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

/// `a[x := b]` on types.
pub fn subst_ty(a: &NamedTy, x: &str, b: &NamedTy) -> NamedTy {
    match a {
        NamedTy::Var(y) if y == x => b.clone(),
        NamedTy::Var(_) => a.clone(),
        NamedTy::Arr(a1, a2) => NamedTy::arr(subst_ty(a1, x, b), subst_ty(a2, x, b)),
        NamedTy::All(y, _) if y == x => a.clone(),
        NamedTy::All(y, body) => {
            let fb = ftv_ty(b);
            if fb.contains(y) && ftv_ty(body).contains(x) {
                let mut avoid = fb;
                avoid.extend(ftv_ty(body));
                avoid.insert(x.to_string());
                let y2 = fresh_name(y, &avoid);
                let body = subst_ty(body, y, &NamedTy::var(&y2));
                NamedTy::all(&y2, subst_ty(&body, x, b))
            } else {
                NamedTy::all(y, subst_ty(body, x, b))
            }
        }
    }
}

/// `t[X := b]`: a type substituted for a type variable inside a term.
pub fn subst_ty_te(t: &NamedTe, x: &str, b: &NamedTy) -> NamedTe {
    match t {
        NamedTe::Var(_) => t.clone(),
        NamedTe::Abs(y, a, body) => NamedTe::abs(y, subst_ty(a, x, b), subst_ty_te(body, x, b)),
        NamedTe::App(t, u) => NamedTe::app(subst_ty_te(t, x, b), subst_ty_te(u, x, b)),
        NamedTe::Spe(t, a) => NamedTe::spe(subst_ty_te(t, x, b), subst_ty(a, x, b)),
        NamedTe::Lam(y, _) if y == x => t.clone(),
        NamedTe::Lam(y, body) => {
            let fb = ftv_ty(b);
            if fb.contains(y) && ftv_te(body).contains(x) {
                let mut avoid = fb;
                avoid.extend(ftv_te(body));
                avoid.insert(x.to_string());
                let y2 = fresh_name(y, &avoid);
                let body = subst_ty_te(body, y, &NamedTy::var(&y2));
                NamedTe::lam(&y2, subst_ty_te(&body, x, b))
            } else {
                NamedTe::lam(y, subst_ty_te(body, x, b))
            }
        }
    }
}

/// `t[x := u]`: a term substituted for a term variable.
///
/// Term binders clashing with free term variables of `u` and type binders
/// clashing with free type variables of `u` are renamed first.
pub fn subst_te(t: &NamedTe, x: &str, u: &NamedTe) -> NamedTe {
    match t {
        NamedTe::Var(y) if y == x => u.clone(),
        NamedTe::Var(_) => t.clone(),
        NamedTe::App(a, b) => NamedTe::app(subst_te(a, x, u), subst_te(b, x, u)),
        NamedTe::Spe(a, ty) => NamedTe::spe(subst_te(a, x, u), ty.clone()),
        NamedTe::Abs(y, _, _) if y == x => t.clone(),
        NamedTe::Abs(y, a, body) => {
            let fu = fv_te(u);
            if fu.contains(y) && fv_te(body).contains(x) {
                let mut avoid = fu;
                avoid.extend(fv_te(body));
                avoid.insert(x.to_string());
                let y2 = fresh_name(y, &avoid);
                let body = subst_te(body, y, &NamedTe::var(&y2));
                NamedTe::abs(&y2, a.clone(), subst_te(&body, x, u))
            } else {
                NamedTe::abs(y, a.clone(), subst_te(body, x, u))
            }
        }
        NamedTe::Lam(y, body) => {
            let fu = ftv_te(u);
            if fu.contains(y) && fv_te(body).contains(x) {
                let mut avoid = fu;
                avoid.extend(ftv_te(body));
                let y2 = fresh_name(y, &avoid);
                let body = subst_ty_te(body, y, &NamedTy::var(&y2));
                NamedTe::lam(&y2, subst_te(&body, x, u))
            } else {
                NamedTe::lam(y, subst_te(body, x, u))
            }
        }
    }
}

impl fmt::Display for NamedTy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedTy::Var(x) => f.write_str(x),
            NamedTy::Arr(a, b) => write!(f, "({a} ⇒ {b})"),
            NamedTy::All(x, a) => write!(f, "∀{x}.{a}"),
        }
    }
}

impl fmt::Display for NamedTe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedTe::Var(x) => f.write_str(x),
            NamedTe::Abs(x, a, t) => write!(f, "λ{x}:{a}.{t}"),
            NamedTe::App(t, u) => write!(f, "({t} {u})"),
            NamedTe::Lam(x, t) => write!(f, "Λ{x}.{t}"),
            NamedTe::Spe(t, a) => write!(f, "({t} [{a}])"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::debruijn::{alpha_eq, alpha_eq_ty};

    fn tv(x: &str) -> NamedTy {
        NamedTy::var(x)
    }

    fn v(x: &str) -> NamedTe {
        NamedTe::var(x)
    }

    #[test]
    fn term_substitution_avoids_capture() {
        // (λy:A.x)[x := y]
        let t = NamedTe::abs("y", tv("A"), v("x"));
        let r = subst_te(&t, "x", &v("y"));
        let NamedTe::Abs(y2, _, body) = &r else { panic!() };
        assert_ne!(y2, "y");
        assert_eq!(**body, v("y"));
    }

    #[test]
    fn term_substitution_avoids_type_capture() {
        // (ΛY.x)[x := λz:Y.z] must rename the type binder
        let t = NamedTe::lam("Y", NamedTe::app(v("x"), v("x")));
        let u = NamedTe::abs("z", tv("Y"), v("z"));
        let r = subst_te(&t, "x", &u);
        let NamedTe::Lam(y2, _) = &r else { panic!() };
        assert_ne!(y2, "Y");
        assert!(ftv_te(&r).contains("Y"));
    }

    #[test]
    fn type_substitution_avoids_capture() {
        // (∀Y.(X ⇒ Y))[X := Y]
        let a = NamedTy::all("Y", NamedTy::arr(tv("X"), tv("Y")));
        let r = subst_ty(&a, "X", &tv("Y"));
        let expected = NamedTy::all("Z", NamedTy::arr(tv("Y"), tv("Z")));
        assert!(alpha_eq_ty(&r, &expected));
        assert!(!alpha_eq_ty(&r, &NamedTy::all("Y", NamedTy::arr(tv("Y"), tv("Y")))));
    }

    #[test]
    fn type_into_term() {
        // (λx:X.(x [X]))[X := B]
        let t = NamedTe::abs("x", tv("X"), NamedTe::spe(v("x"), tv("X")));
        let r = subst_ty_te(&t, "X", &tv("B"));
        assert_eq!(r, NamedTe::abs("x", tv("B"), NamedTe::spe(v("x"), tv("B"))));
        let shadowed = NamedTe::lam("X", NamedTe::abs("x", tv("X"), v("x")));
        assert_eq!(subst_ty_te(&shadowed, "X", &tv("B")), shadowed);
    }

    #[test]
    fn substitution_identity_cases() {
        assert_eq!(subst_te(&v("x"), "x", &v("u")), v("u"));
        let shadow = NamedTe::abs("x", tv("A"), v("x"));
        assert_eq!(subst_te(&shadow, "x", &v("u")), shadow);
        let t = NamedTe::abs("y", tv("A"), NamedTe::app(v("y"), v("x")));
        let r = subst_te(&t, "x", &v("z"));
        assert!(alpha_eq(&r, &NamedTe::abs("w", tv("A"), NamedTe::app(v("w"), v("z")))));
    }

    #[test]
    fn display_uses_canonical_grammar() {
        let t = NamedTe::lam(
            "X",
            NamedTe::abs("x", NamedTy::arr(tv("X"), tv("X")), NamedTe::spe(v("x"), NamedTy::all("Y", tv("Y")))),
        );
        assert_eq!(t.to_string(), "ΛX.λx:(X ⇒ X).(x [∀Y.Y])");
    }
}
