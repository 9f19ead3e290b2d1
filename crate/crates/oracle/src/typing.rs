//! Type synthesis for named terms, used to validate generated terms.

use std::collections::BTreeSet;

use crate::debruijn::alpha_eq_ty;
use crate::fresh_name;
use crate::named::{ftv_te, ftv_ty, subst_ty, subst_ty_te, NamedTe, NamedTy};

/// Type of `t` in the context `ctx` (innermost binding last), or `None` if
/// `t` is ill-typed. Free type variables are allowed anywhere.
pub fn type_of(ctx: &mut Vec<(String, NamedTy)>, t: &NamedTe) -> Option<NamedTy> {
    match t {
        NamedTe::Var(x) => ctx.iter().rev().find(|(y, _)| y == x).map(|(_, a)| a.clone()),
        NamedTe::Abs(x, a, body) => {
            ctx.push((x.clone(), a.clone()));
            let b = type_of(ctx, body);
            ctx.pop();
            Some(NamedTy::arr(a.clone(), b?))
        }
        NamedTe::App(f, u) => {
            let NamedTy::Arr(a, b) = type_of(ctx, f)? else {
                return None;
            };
            let actual = type_of(ctx, u)?;
            alpha_eq_ty(&a, &actual).then_some(*b)
        }
        NamedTe::Lam(x, body) => {
            let mut taken: BTreeSet<String> = ctx.iter().flat_map(|(_, a)| ftv_ty(a)).collect();
            if !taken.contains(x) {
                return Some(NamedTy::all(x, type_of(ctx, body)?));
            }
            // ΛX.t with X free in the context: type an α-variant instead
            taken.extend(ftv_te(body));
            let y = fresh_name(x, &taken);
            let body = subst_ty_te(body, x, &NamedTy::var(&y));
            Some(NamedTy::all(&y, type_of(ctx, &body)?))
        }
        NamedTe::Spe(f, b) => {
            let NamedTy::All(x, a) = type_of(ctx, f)? else {
                return None;
            };
            Some(subst_ty(&a, &x, b))
        }
    }
}
