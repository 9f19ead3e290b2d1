//! Church-style System F built on `bindbox`.
//!
//! Types and terms use library binders for ∀, λ and Λ, so substitution is a
//! function call and α-equivalent terms behave identically. On top of the
//! syntax this crate provides normalization, printing, α-equality, a
//! bidirectional type checker, a parser, and conversion to the named
//! representation used by the `oracle` crate.

pub mod ast;
pub mod convert;
pub mod equality;
pub mod eval;
pub mod parse;
pub mod print;
pub mod typing;

pub use ast::{
    lift_te, lift_ty, new_te_var, new_ty_var, te_abs, te_app, te_lam, te_spe, te_var, ty_all, ty_arr, ty_var, Te,
    TeKind, Ty, TyKind,
};
pub use convert::{to_named_te, to_named_ty, Converter};
pub use equality::{eq_te, eq_te_full, eq_ty, eq_ty_full};
pub use eval::{hnf, nf, nf_limited, update_names, update_names_ty, BudgetExhausted};
pub use parse::{parse_te, parse_ty, FreeVars, ParseError, Parser, Pos, Resolver};
pub use print::{print_te, print_te_with, print_ty, print_ty_with, Syntax};
pub use typing::{check, find_ctxt, infer, Context, TypeError};

/// Run `f` on a thread with a large stack. Normal forms of arithmetic on
/// Church numerals are deep spines, and every traversal here is recursive.
pub fn with_big_stack<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> T {
    std::thread::Builder::new()
        .stack_size(1 << 30)
        .spawn(f)
        .expect("spawn worker thread")
        .join()
        .unwrap_or_else(|e| std::panic::resume_unwind(e))
}
