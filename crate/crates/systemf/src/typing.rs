//! Bidirectional type checking.

use std::sync::Arc;

use bindbox::{bind_var, eq_vars, unbind2, unbox, Var};

use crate::ast::{lift_ty, Te, TeKind, Ty, TyKind};
use crate::equality::eq_ty;

/// Typing context: a persistent list of term variables and their types,
/// most recent binding first.
#[derive(Clone, Default)]
pub struct Context(Option<Arc<Entry>>);

struct Entry {
    var: Var<Te>,
    ty: Ty,
    next: Context,
}

impl Context {
    pub fn new() -> Self {
        Context(None)
    }

    pub fn push(&self, var: Var<Te>, ty: Ty) -> Self {
        Context(Some(Arc::new(Entry {
            var,
            ty,
            next: self.clone(),
        })))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var<Te>, &Ty)> {
        let mut cur = self.0.as_deref();
        std::iter::from_fn(move || {
            let e = cur?;
            cur = e.next.0.as_deref();
            Some((&e.var, &e.ty))
        })
    }
}

impl FromIterator<(Var<Te>, Ty)> for Context {
    /// Later items are more recent.
    fn from_iter<I: IntoIterator<Item = (Var<Te>, Ty)>>(iter: I) -> Self {
        iter.into_iter().fold(Context::new(), |ctx, (x, a)| ctx.push(x, a))
    }
}

pub fn find_ctxt(x: &Var<Te>, ctx: &Context) -> Option<Ty> {
    ctx.iter().find(|(y, _)| eq_vars(x, y)).map(|(_, a)| a.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Infer,
    Check,
}

impl Mode {
    fn tag(self) -> &'static str {
        match self {
            Mode::Infer => "[infer]",
            Mode::Check => "[check]",
        }
    }
}

#[derive(Clone, Debug, thiserror::Error)]
pub enum TypeError {
    #[error("{} variable not in context... ({name})", .mode.tag())]
    VariableNotInContext { mode: Mode, name: String },
    #[error("[infer] expected arrow type... (found {found})")]
    ExpectedArrow { found: String },
    #[error("[infer] expected quantifier... (found {found})")]
    ExpectedQuantifier { found: String },
    #[error("[check] type mismatch... (var) (expected {expected}, found {found})")]
    MismatchVar { expected: String, found: String },
    #[error("[check] type mismatch... (abs) (expected {expected}, found {found})")]
    MismatchAbs { expected: String, found: String },
    #[error("[check] type mismatch... (spe) (expected {expected}, found {found})")]
    MismatchSpe { expected: String, found: String },
    #[error("[check] not typable... (against {against})")]
    NotTypable { against: String },
}

impl TypeError {
    pub fn code(&self) -> &'static str {
        match self {
            TypeError::VariableNotInContext { .. } => "variable-not-in-context",
            TypeError::ExpectedArrow { .. } => "expected-arrow",
            TypeError::ExpectedQuantifier { .. } => "expected-quantifier",
            TypeError::MismatchVar { .. } => "type-mismatch-var",
            TypeError::MismatchAbs { .. } => "type-mismatch-abs",
            TypeError::MismatchSpe { .. } => "type-mismatch-spe",
            TypeError::NotTypable { .. } => "not-typable",
        }
    }
}

fn show(a: &Ty) -> String {
    crate::print::print_ty(&crate::eval::update_names_ty(a))
}

pub fn infer(ctx: &Context, t: &Te) -> Result<Ty, TypeError> {
    match t.kind() {
        TeKind::Var(x) => find_ctxt(x, ctx).ok_or_else(|| TypeError::VariableNotInContext {
            mode: Mode::Infer,
            name: x.name(),
        }),
        TeKind::Abs(a, f) => {
            let (x, t) = f.unbind();
            let b = infer(&ctx.push(x, a.clone()), &t)?;
            Ok(Ty::arr(a.clone(), b))
        }
        TeKind::App(t, u) => {
            let ft = infer(ctx, t)?;
            match ft.kind() {
                TyKind::Arr(a, b) => {
                    check(ctx, u, a)?;
                    Ok(b.clone())
                }
                _ => Err(TypeError::ExpectedArrow { found: show(&ft) }),
            }
        }
        TeKind::Lam(f) => {
            let (x, t) = f.unbind();
            // X ∉ Γ: the opened variable is newer than anything in scope
            assert!(ctx.iter().all(|(y, _)| y.key() < x.key()));
            let a = infer(ctx, &t)?;
            Ok(Ty::all(unbox(bind_var(&x, lift_ty(&a)))))
        }
        TeKind::Spe(t, b) => {
            let a = infer(ctx, t)?;
            match a.kind() {
                TyKind::All(f) => Ok(f.subst(b.clone())),
                _ => Err(TypeError::ExpectedQuantifier { found: show(&a) }),
            }
        }
    }
}

pub fn check(ctx: &Context, t: &Te, a: &Ty) -> Result<(), TypeError> {
    match (t.kind(), a.kind()) {
        (TeKind::Var(x), _) => {
            let found = find_ctxt(x, ctx).ok_or_else(|| TypeError::VariableNotInContext {
                mode: Mode::Check,
                name: x.name(),
            })?;
            if eq_ty(&found, a) {
                Ok(())
            } else {
                Err(TypeError::MismatchVar {
                    expected: show(a),
                    found: show(&found),
                })
            }
        }
        (TeKind::Abs(c, f), TyKind::Arr(dom, cod)) => {
            if !eq_ty(c, dom) {
                return Err(TypeError::MismatchAbs {
                    expected: show(dom),
                    found: show(c),
                });
            }
            let (x, t) = f.unbind();
            check(&ctx.push(x, dom.clone()), &t, cod)
        }
        (TeKind::App(t, u), _) => {
            let dom = infer(ctx, u)?;
            check(ctx, t, &Ty::arr(dom, a.clone()))
        }
        (TeKind::Lam(f1), TyKind::All(f2)) => {
            let (_, t, a) = unbind2(f1, f2);
            check(ctx, &t, &a)
        }
        (TeKind::Spe(t, b), _) => {
            let q = infer(ctx, t)?;
            match q.kind() {
                TyKind::All(f) => {
                    let c = f.subst(b.clone());
                    if eq_ty(&c, a) {
                        Ok(())
                    } else {
                        Err(TypeError::MismatchSpe {
                            expected: show(a),
                            found: show(&c),
                        })
                    }
                }
                _ => Err(TypeError::ExpectedQuantifier { found: show(&q) }),
            }
        }
        _ => Err(TypeError::NotTypable { against: show(a) }),
    }
}
