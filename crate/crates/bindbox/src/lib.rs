//! Variable binding for abstract syntax.
//!
//! Values with free variables are built as [`BoxVal`]s: a box is either a
//! closed value or a closure over an environment, together with the sorted
//! list of variables it contains. [`bind_var`] turns a box into a boxed
//! [`Binder`], and [`unbox`] finishes construction. Binders are plain
//! functions from the bound value to the body, so [`subst`] never traverses
//! or renames anything: all name-to-slot resolution happened when the closure
//! was built.
//!
//! Every type that can contain variables needs a lifting function
//! `T -> BoxVal<T>` written with the smart constructors of that syntax and
//! [`box_binder`]. Re-lifting a value recomputes binder names so that no two
//! distinct variables print the same in one scope.

mod binder;
mod boxed;
mod combinators;
pub mod debug;
mod env;
mod var;

pub use binder::{bind_var, binder_info, box_binder, eq_binder, subst, unbind, unbind2, Binder, BinderInfo};
pub use boxed::{apply_box, boxed, is_closed, occur, unbox, BoxVal};
pub use combinators::{box_apply, box_apply2, box_apply3, box_list, box_opt, box_pair};
pub use env::{Environment, VarPosMap};
pub use var::{box_var, eq_vars, name_of, new_var, MkFree, Name, Var};

/// Bound on anything stored in a box or substituted into a binder.
pub trait Value: Clone + Send + Sync + 'static {}

impl<T: Clone + Send + Sync + 'static> Value for T {}
