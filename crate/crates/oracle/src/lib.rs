//! Reference implementations for System F terms with plain string names.
//!
//! Nothing here shares code with `bindbox`: substitution renames binders the
//! textbook way, α-equivalence goes through de Bruijn indices, and
//! normalization is a direct recursive evaluator. The binder-based
//! implementation is tested against these.

use std::collections::BTreeSet;

pub mod debruijn;
pub mod gen;
pub mod named;
pub mod normalize;
pub mod pure;
pub mod typing;

pub use debruijn::{alpha_eq, alpha_eq_ty, to_db, to_db_ty, DbTe, DbTy};
pub use named::{ftv_te, ftv_ty, fv_te, subst_te, subst_ty, subst_ty_te, NamedTe, NamedTy};
pub use normalize::{oracle_nf, oracle_nf_limited};
pub use typing::type_of;

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("normalization needed more than {limit} β-steps")]
pub struct BudgetExhausted {
    pub limit: u64,
}

/// `base` followed by as many primes as needed to avoid `avoid`.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let mut name = base.to_string();
    while avoid.contains(&name) {
        name.push('\'');
    }
    name
}
