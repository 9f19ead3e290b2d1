//! Types and terms, their boxed constructors, and lifting.

use std::fmt;
use std::sync::Arc;

use bindbox::{
    box_apply, box_apply2, box_binder, box_var, new_var, Binder, BoxVal, Var,
};

#[derive(Clone)]
pub struct Ty(Arc<TyKind>);

pub enum TyKind {
    Var(Var<Ty>),
    Arr(Ty, Ty),
    All(Binder<Ty, Ty>),
}

#[derive(Clone)]
pub struct Te(Arc<TeKind>);

pub enum TeKind {
    Var(Var<Te>),
    Abs(Ty, Binder<Te, Te>),
    App(Te, Te),
    Lam(Binder<Ty, Te>),
    Spe(Te, Ty),
}

impl Ty {
    pub fn var(x: Var<Ty>) -> Ty {
        Ty(Arc::new(TyKind::Var(x)))
    }

    pub fn arr(a: Ty, b: Ty) -> Ty {
        Ty(Arc::new(TyKind::Arr(a, b)))
    }

    pub fn all(f: Binder<Ty, Ty>) -> Ty {
        Ty(Arc::new(TyKind::All(f)))
    }

    pub fn kind(&self) -> &TyKind {
        &self.0
    }

    pub fn ptr_eq(&self, other: &Ty) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Te {
    pub fn var(x: Var<Te>) -> Te {
        Te(Arc::new(TeKind::Var(x)))
    }

    pub fn abs(a: Ty, f: Binder<Te, Te>) -> Te {
        Te(Arc::new(TeKind::Abs(a, f)))
    }

    pub fn app(t: Te, u: Te) -> Te {
        Te(Arc::new(TeKind::App(t, u)))
    }

    pub fn lam(f: Binder<Ty, Te>) -> Te {
        Te(Arc::new(TeKind::Lam(f)))
    }

    pub fn spe(t: Te, a: Ty) -> Te {
        Te(Arc::new(TeKind::Spe(t, a)))
    }

    pub fn kind(&self) -> &TeKind {
        &self.0
    }

    pub fn ptr_eq(&self, other: &Te) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Number of term constructors.
    pub fn size(&self) -> usize {
        match self.kind() {
            TeKind::Var(_) => 1,
            TeKind::Abs(_, f) => 1 + f.unbind().1.size(),
            TeKind::Lam(f) => 1 + f.unbind().1.size(),
            TeKind::App(t, u) => 1 + t.size() + u.size(),
            TeKind::Spe(t, _) => 1 + t.size(),
        }
    }
}

impl fmt::Debug for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::print::print_ty(self))
    }
}

impl fmt::Debug for Te {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::print::print_te(self))
    }
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::print::print_ty(self))
    }
}

impl fmt::Display for Te {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::print::print_te(self))
    }
}

pub fn new_ty_var(name: &str) -> Var<Ty> {
    new_var(Ty::var, name)
}

pub fn new_te_var(name: &str) -> Var<Te> {
    new_var(Te::var, name)
}

pub fn ty_var(x: &Var<Ty>) -> BoxVal<Ty> {
    box_var(x)
}

pub fn ty_arr(a: BoxVal<Ty>, b: BoxVal<Ty>) -> BoxVal<Ty> {
    box_apply2(Ty::arr, a, b)
}

pub fn ty_all(f: BoxVal<Binder<Ty, Ty>>) -> BoxVal<Ty> {
    box_apply(Ty::all, f)
}

pub fn te_var(x: &Var<Te>) -> BoxVal<Te> {
    box_var(x)
}

pub fn te_abs(a: BoxVal<Ty>, f: BoxVal<Binder<Te, Te>>) -> BoxVal<Te> {
    box_apply2(Te::abs, a, f)
}

pub fn te_app(t: BoxVal<Te>, u: BoxVal<Te>) -> BoxVal<Te> {
    box_apply2(Te::app, t, u)
}

pub fn te_lam(f: BoxVal<Binder<Ty, Te>>) -> BoxVal<Te> {
    box_apply(Te::lam, f)
}

pub fn te_spe(t: BoxVal<Te>, a: BoxVal<Ty>) -> BoxVal<Te> {
    box_apply2(Te::spe, t, a)
}

pub fn lift_ty(a: &Ty) -> BoxVal<Ty> {
    match a.kind() {
        TyKind::Var(x) => ty_var(x),
        TyKind::Arr(a, b) => ty_arr(lift_ty(a), lift_ty(b)),
        TyKind::All(f) => ty_all(box_binder(lift_ty, f)),
    }
}

pub fn lift_te(t: &Te) -> BoxVal<Te> {
    match t.kind() {
        TeKind::Var(x) => te_var(x),
        TeKind::Abs(a, f) => te_abs(lift_ty(a), box_binder(lift_te, f)),
        TeKind::App(t, u) => te_app(lift_te(t), lift_te(u)),
        TeKind::Lam(f) => te_lam(box_binder(lift_te, f)),
        TeKind::Spe(t, a) => te_spe(lift_te(t), lift_ty(a)),
    }
}
