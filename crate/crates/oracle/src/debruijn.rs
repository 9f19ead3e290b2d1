//! Canonical de Bruijn forms, used only to decide α-equivalence.
//!
//! Indices are 1-based. Term and type variables are counted separately: a
//! term index skips type binders and vice versa.

use crate::named::{NamedTe, NamedTy};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DbTy {
    Free(String),
    Ind(usize),
    Arr(Box<DbTy>, Box<DbTy>),
    All(Box<DbTy>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DbTe {
    Free(String),
    Ind(usize),
    Abs(DbTy, Box<DbTe>),
    App(Box<DbTe>, Box<DbTe>),
    Lam(Box<DbTe>),
    Spe(Box<DbTe>, DbTy),
}

fn index(scope: &[String], x: &str) -> Option<usize> {
    scope.iter().rev().position(|y| y == x).map(|i| i + 1)
}

fn ty_in(a: &NamedTy, tys: &mut Vec<String>) -> DbTy {
    match a {
        NamedTy::Var(x) => match index(tys, x) {
            Some(i) => DbTy::Ind(i),
            None => DbTy::Free(x.clone()),
        },
        NamedTy::Arr(a, b) => DbTy::Arr(Box::new(ty_in(a, tys)), Box::new(ty_in(b, tys))),
        NamedTy::All(x, a) => {
            tys.push(x.clone());
            let a = ty_in(a, tys);
            tys.pop();
            DbTy::All(Box::new(a))
        }
    }
}

fn te_in(t: &NamedTe, tes: &mut Vec<String>, tys: &mut Vec<String>) -> DbTe {
    match t {
        NamedTe::Var(x) => match index(tes, x) {
            Some(i) => DbTe::Ind(i),
            None => DbTe::Free(x.clone()),
        },
        NamedTe::Abs(x, a, t) => {
            let a = ty_in(a, tys);
            tes.push(x.clone());
            let t = te_in(t, tes, tys);
            tes.pop();
            DbTe::Abs(a, Box::new(t))
        }
        NamedTe::App(t, u) => DbTe::App(Box::new(te_in(t, tes, tys)), Box::new(te_in(u, tes, tys))),
        NamedTe::Lam(x, t) => {
            tys.push(x.clone());
            let t = te_in(t, tes, tys);
            tys.pop();
            DbTe::Lam(Box::new(t))
        }
        NamedTe::Spe(t, a) => DbTe::Spe(Box::new(te_in(t, tes, tys)), ty_in(a, tys)),
    }
}

pub fn to_db_ty(a: &NamedTy) -> DbTy {
    ty_in(a, &mut Vec::new())
}

pub fn to_db(t: &NamedTe) -> DbTe {
    te_in(t, &mut Vec::new(), &mut Vec::new())
}

pub fn alpha_eq_ty(a: &NamedTy, b: &NamedTy) -> bool {
    to_db_ty(a) == to_db_ty(b)
}

pub fn alpha_eq(t: &NamedTe, u: &NamedTe) -> bool {
    to_db(t) == to_db(u)
}
