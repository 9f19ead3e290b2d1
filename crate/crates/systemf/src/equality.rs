//! α-equality. Binders are compared by opening both with one fresh variable.

use bindbox::{eq_binder, eq_vars};

use crate::ast::{Te, TeKind, Ty, TyKind};

fn ty_with(shortcut: bool, a: &Ty, b: &Ty) -> bool {
    if shortcut && a.ptr_eq(b) {
        return true;
    }
    match (a.kind(), b.kind()) {
        (TyKind::Var(x), TyKind::Var(y)) => eq_vars(x, y),
        (TyKind::Arr(a1, b1), TyKind::Arr(a2, b2)) => ty_with(shortcut, a1, a2) && ty_with(shortcut, b1, b2),
        (TyKind::All(f1), TyKind::All(f2)) => eq_binder(|a, b| ty_with(shortcut, a, b), f1, f2),
        _ => false,
    }
}

fn te_with(shortcut: bool, t: &Te, u: &Te) -> bool {
    if shortcut && t.ptr_eq(u) {
        return true;
    }
    match (t.kind(), u.kind()) {
        (TeKind::Var(x), TeKind::Var(y)) => eq_vars(x, y),
        (TeKind::Abs(a1, f1), TeKind::Abs(a2, f2)) => {
            ty_with(shortcut, a1, a2) && eq_binder(|t, u| te_with(shortcut, t, u), f1, f2)
        }
        (TeKind::App(t1, u1), TeKind::App(t2, u2)) => te_with(shortcut, t1, t2) && te_with(shortcut, u1, u2),
        (TeKind::Lam(f1), TeKind::Lam(f2)) => eq_binder(|t, u| te_with(shortcut, t, u), f1, f2),
        (TeKind::Spe(t1, a1), TeKind::Spe(t2, a2)) => te_with(shortcut, t1, t2) && ty_with(shortcut, a1, a2),
        _ => false,
    }
}

pub fn eq_ty(a: &Ty, b: &Ty) -> bool {
    ty_with(true, a, b)
}

pub fn eq_te(t: &Te, u: &Te) -> bool {
    te_with(true, t, u)
}

/// `eq_ty` without the pointer-equality fast path.
pub fn eq_ty_full(a: &Ty, b: &Ty) -> bool {
    ty_with(false, a, b)
}

/// `eq_te` without the pointer-equality fast path.
pub fn eq_te_full(t: &Te, u: &Te) -> bool {
    te_with(false, t, u)
}
