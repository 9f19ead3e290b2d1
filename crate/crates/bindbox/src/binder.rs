use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::boxed::{boxed, BoxVal, Closure, FreeVar, OpenBox, Repr};
use crate::env::{Environment, VarPosMap};
use crate::var::{MkFree, Name, Var};
use crate::{debug, Value};

/// A value of type `B` with one bound variable of type `A`.
pub struct Binder<A, B> {
    name: Name,
    occurs: bool,
    rank: usize,
    mkfree: MkFree<A>,
    value: Arc<dyn Fn(A) -> B + Send + Sync>,
}

impl<A, B> Clone for Binder<A, B> {
    fn clone(&self) -> Self {
        Binder {
            name: self.name.clone(),
            occurs: self.occurs,
            rank: self.rank,
            mkfree: self.mkfree.clone(),
            value: self.value.clone(),
        }
    }
}

impl<A, B> fmt::Debug for Binder<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Binder")
            .field("name", &self.name.to_string())
            .field("occurs", &self.occurs)
            .field("rank", &self.rank)
            .finish_non_exhaustive()
    }
}

/// Metadata stored in a binder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinderInfo {
    pub name: String,
    pub occurs: bool,
    pub rank: usize,
}

impl<A: Value, B: Value> Binder<A, B> {
    /// Rendered name of the bound variable.
    pub fn name(&self) -> String {
        self.name.to_string()
    }

    /// Whether the bound variable occurs in the body.
    pub fn occurs(&self) -> bool {
        self.occurs
    }

    /// Number of free variables left in the body.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn info(&self) -> BinderInfo {
        BinderInfo {
            name: self.name(),
            occurs: self.occurs,
            rank: self.rank,
        }
    }

    pub fn subst(&self, a: A) -> B {
        debug::track_subst(|| (self.value)(a))
    }

    /// Substitute a fresh variable named after the bound one.
    pub fn unbind(&self) -> (Var<A>, B) {
        let x = Var::fresh(self.name.clone(), self.mkfree.clone());
        let body = self.subst(x.mkfree());
        (x, body)
    }
}

pub fn subst<A: Value, B: Value>(b: &Binder<A, B>, a: A) -> B {
    b.subst(a)
}

pub fn unbind<A: Value, B: Value>(b: &Binder<A, B>) -> (Var<A>, B) {
    b.unbind()
}

/// Open two binders with the same fresh variable, named after the first.
pub fn unbind2<A: Value, B: Value, C: Value>(b1: &Binder<A, B>, b2: &Binder<A, C>) -> (Var<A>, B, C) {
    let (x, t1) = b1.unbind();
    let t2 = b2.subst(x.mkfree());
    (x, t1, t2)
}

/// Compare two binders by opening them with one shared fresh variable.
pub fn eq_binder<A: Value, B: Value>(
    eq: impl FnOnce(&B, &B) -> bool,
    b1: &Binder<A, B>,
    b2: &Binder<A, B>,
) -> bool {
    let (_, t1, t2) = unbind2(b1, b2);
    eq(&t1, &t2)
}

/// Turn a binder back into a boxed binder, given a lifting function for its
/// body.
pub fn box_binder<A: Value, B: Value>(lift: impl FnOnce(&B) -> BoxVal<B>, b: &Binder<A, B>) -> BoxVal<Binder<A, B>> {
    let (x, body) = b.unbind();
    bind_var(&x, lift(&body))
}

pub fn binder_info<A: Value, B: Value>(b: &Binder<A, B>) -> BinderInfo {
    b.info()
}

/// Name for a binder of `x` over a body whose other free variables are
/// `others`. Free variables of the same sort keep their names, so the binder
/// must avoid them, as well as any inner binder name `x` sits under.
fn binder_name<A: Value>(x: &Var<A>, others: &[FreeVar], x_avoid: Option<&FreeVar>) -> Name {
    let sort = std::any::TypeId::of::<A>();
    let mut taken: BTreeSet<String> = others
        .iter()
        .filter(|v| v.var.sort() == sort)
        .map(|v| v.var.name().to_string())
        .collect();
    if let Some(fv) = x_avoid {
        taken.extend(fv.avoid.iter().cloned());
    }
    x.full_name().avoiding(&taken)
}

/// Record that the remaining variables of `x`'s sort now sit under a binder
/// called `name`.
fn under_binder<A: Value>(vars: Vec<FreeVar>, name: &Name) -> Vec<FreeVar> {
    let sort = std::any::TypeId::of::<A>();
    let rendered = name.to_string();
    vars.into_iter()
        .map(|v| {
            if v.var.sort() == sort {
                FreeVar {
                    avoid: v.avoid.with(rendered.clone()),
                    var: v.var,
                }
            } else {
                v
            }
        })
        .collect()
}

/// Bind `x` in `b`.
///
/// Four cases: `b` closed (constant binder); `x` not free in `b` (constant
/// binder, still open); `x` the only free variable (closed binder over a
/// private environment); `x` one of several (open binder, `x` takes the next
/// reserved slot).
pub fn bind_var<A: Value, B: Value>(x: &Var<A>, b: BoxVal<B>) -> BoxVal<Binder<A, B>> {
    let mkfree = x.mkfree_fn().clone();
    let open = match b.0 {
        Repr::Closed(body) => {
            return boxed(Binder {
                name: x.full_name().clone(),
                occurs: false,
                rank: 0,
                mkfree,
                value: Arc::new(move |_| body.clone()),
            });
        }
        Repr::Open(open) => open,
    };
    let pos = open.vars.binary_search_by_key(&x.key(), FreeVar::key);
    let n = open.bound;
    let body = open.closure.clone();

    match pos {
        Err(_) => {
            let name = binder_name(x, &open.vars, None);
            let rank = open.vars.len();
            let vars = under_binder::<A>(open.vars.clone(), &name);
            let closure = Closure::new(move |vp| {
                let eval = body.resolve(vp);
                let (name, mkfree) = (name.clone(), mkfree.clone());
                Arc::new(move |env| {
                    let v = eval(env);
                    Binder {
                        name: name.clone(),
                        occurs: false,
                        rank,
                        mkfree: mkfree.clone(),
                        value: Arc::new(move |_| v.clone()),
                    }
                })
            });
            BoxVal::from_open(Arc::new(OpenBox {
                vars,
                bound: n,
                closure,
            }))
        }
        Ok(_) if open.vars.len() == 1 => {
            let name = binder_name(x, &[], Some(&open.vars[0]));
            let mut vp = VarPosMap::with_capacity(1);
            vp.insert(x.key(), n);
            let eval = body.resolve(&vp);
            boxed(Binder {
                name,
                occurs: true,
                rank: 0,
                mkfree,
                value: Arc::new(move |a| {
                    let mut env = Environment::new(n + 1);
                    env.set(n, a);
                    eval(&env)
                }),
            })
        }
        Ok(i) => {
            let mut others = open.vars.clone();
            let own = others.remove(i);
            let name = binder_name(x, &others, Some(&own));
            let rank = others.len();
            let vars = under_binder::<A>(others, &name);
            let key = x.key();
            let closure = Closure::new(move |vp| {
                let mut vp = vp.clone();
                vp.insert(key, n);
                let eval = body.resolve(&vp);
                let (name, mkfree) = (name.clone(), mkfree.clone());
                Arc::new(move |env: &Environment| {
                    let env = env.clone();
                    let eval = eval.clone();
                    Binder {
                        name: name.clone(),
                        occurs: true,
                        rank,
                        mkfree: mkfree.clone(),
                        value: Arc::new(move |a| {
                            let mut env = env.clone();
                            env.set(n, a);
                            eval(&env)
                        }),
                    }
                })
            });
            BoxVal::from_open(Arc::new(OpenBox {
                vars,
                bound: n + 1,
                closure,
            }))
        }
    }
}
