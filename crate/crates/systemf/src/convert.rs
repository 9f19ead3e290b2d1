//! Translation to and from the oracle's named terms.

use std::collections::HashMap;

use bindbox::{bind_var, unbox, BoxVal, Var};
use oracle::{NamedTe, NamedTy};

use crate::ast::*;

/// Free variables shared between the two representations. A named free
/// variable maps to one library variable and back; every other variable is
/// rendered as `name#key`, which keeps distinct variables distinct.
#[derive(Default)]
pub struct Converter {
    ty: HashMap<String, Var<Ty>>,
    te: HashMap<String, Var<Te>>,
    names: HashMap<u64, String>,
}

fn qualified(name: &str, key: u64) -> String {
    format!("{name}#{key}")
}

impl Converter {
    pub fn new() -> Self {
        Converter::default()
    }

    pub fn ty_var(&mut self, name: &str) -> Var<Ty> {
        let v = self.ty.entry(name.to_string()).or_insert_with(|| new_ty_var(name)).clone();
        self.names.insert(v.key(), name.to_string());
        v
    }

    pub fn te_var(&mut self, name: &str) -> Var<Te> {
        let v = self.te.entry(name.to_string()).or_insert_with(|| new_te_var(name)).clone();
        self.names.insert(v.key(), name.to_string());
        v
    }

    /// The free variables seen so far, for parsing printed terms back.
    pub fn free_vars(&self) -> crate::parse::FreeVars {
        crate::parse::FreeVars {
            te: self.te.clone(),
            ty: self.ty.clone(),
            create: false,
        }
    }

    fn render(&self, name: String, key: u64) -> String {
        match self.names.get(&key) {
            Some(n) => n.clone(),
            None => qualified(&name, key),
        }
    }

    fn box_ty(&mut self, a: &NamedTy, scope: &mut Vec<(String, Var<Ty>)>) -> BoxVal<Ty> {
        match a {
            NamedTy::Var(x) => match scope.iter().rev().find(|(y, _)| y == x) {
                Some((_, v)) => ty_var(v),
                None => ty_var(&self.ty_var(x)),
            },
            NamedTy::Arr(a, b) => {
                let a = self.box_ty(a, scope);
                ty_arr(a, self.box_ty(b, scope))
            }
            NamedTy::All(x, a) => {
                let v = new_ty_var(x);
                scope.push((x.clone(), v.clone()));
                let a = self.box_ty(a, scope);
                scope.pop();
                ty_all(bind_var(&v, a))
            }
        }
    }

    fn box_te(
        &mut self,
        t: &NamedTe,
        tes: &mut Vec<(String, Var<Te>)>,
        tys: &mut Vec<(String, Var<Ty>)>,
    ) -> BoxVal<Te> {
        match t {
            NamedTe::Var(x) => match tes.iter().rev().find(|(y, _)| y == x) {
                Some((_, v)) => te_var(v),
                None => te_var(&self.te_var(x)),
            },
            NamedTe::Abs(x, a, t) => {
                let a = self.box_ty(a, tys);
                let v = new_te_var(x);
                tes.push((x.clone(), v.clone()));
                let t = self.box_te(t, tes, tys);
                tes.pop();
                te_abs(a, bind_var(&v, t))
            }
            NamedTe::App(t, u) => {
                let t = self.box_te(t, tes, tys);
                te_app(t, self.box_te(u, tes, tys))
            }
            NamedTe::Lam(x, t) => {
                let v = new_ty_var(x);
                tys.push((x.clone(), v.clone()));
                let t = self.box_te(t, tes, tys);
                tys.pop();
                te_lam(bind_var(&v, t))
            }
            NamedTe::Spe(t, a) => {
                let t = self.box_te(t, tes, tys);
                te_spe(t, self.box_ty(a, tys))
            }
        }
    }

    pub fn ty_from_named(&mut self, a: &NamedTy) -> Ty {
        unbox(self.box_ty(a, &mut Vec::new()))
    }

    pub fn te_from_named(&mut self, t: &NamedTe) -> Te {
        unbox(self.box_te(t, &mut Vec::new(), &mut Vec::new()))
    }

    pub fn ty_to_named(&self, a: &Ty) -> NamedTy {
        match a.kind() {
            TyKind::Var(x) => NamedTy::Var(self.render(x.name(), x.key())),
            TyKind::Arr(a, b) => NamedTy::arr(self.ty_to_named(a), self.ty_to_named(b)),
            TyKind::All(f) => {
                let (x, a) = f.unbind();
                NamedTy::all(&qualified(&x.name(), x.key()), self.ty_to_named(&a))
            }
        }
    }

    pub fn te_to_named(&self, t: &Te) -> NamedTe {
        match t.kind() {
            TeKind::Var(x) => NamedTe::Var(self.render(x.name(), x.key())),
            TeKind::Abs(a, f) => {
                let (x, t) = f.unbind();
                NamedTe::abs(&qualified(&x.name(), x.key()), self.ty_to_named(a), self.te_to_named(&t))
            }
            TeKind::App(t, u) => NamedTe::app(self.te_to_named(t), self.te_to_named(u)),
            TeKind::Lam(f) => {
                let (x, t) = f.unbind();
                NamedTe::lam(&qualified(&x.name(), x.key()), self.te_to_named(&t))
            }
            TeKind::Spe(t, a) => NamedTe::spe(self.te_to_named(t), self.ty_to_named(a)),
        }
    }
}

/// Named form with every variable written `name#key`.
pub fn to_named_ty(a: &Ty) -> NamedTy {
    Converter::new().ty_to_named(a)
}

/// Named form with every variable written `name#key`.
pub fn to_named_te(t: &Te) -> NamedTe {
    Converter::new().te_to_named(t)
}
