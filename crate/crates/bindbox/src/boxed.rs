use std::cmp::{max, Ordering};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::env::{Environment, VarPosMap};
use crate::var::{AnyVar, Var};
use crate::Value;

/// Second phase of a closure: reads slots, never looks up keys.
pub(crate) type Eval<T> = Arc<dyn Fn(&Environment) -> T + Send + Sync>;

/// A value with free variables, split in two phases. The first phase resolves
/// every variable key to a slot; the second only reads the environment.
pub(crate) struct Closure<T>(Arc<Resolve<T>>);

type Resolve<T> = dyn Fn(&VarPosMap) -> Eval<T> + Send + Sync;

impl<T> Clone for Closure<T> {
    fn clone(&self) -> Self {
        Closure(self.0.clone())
    }
}

impl<T> Closure<T> {
    pub(crate) fn new(phase1: impl Fn(&VarPosMap) -> Eval<T> + Send + Sync + 'static) -> Self {
        Closure(Arc::new(phase1))
    }

    pub(crate) fn resolve(&self, vp: &VarPosMap) -> Eval<T> {
        (self.0)(vp)
    }
}

/// Rendered names of binders (of the same sort as the variable) that a free
/// variable sits under. When that variable gets bound, its binder must not
/// reuse any of them, or the occurrences would print as captured.
#[derive(Clone, Default)]
pub(crate) struct NameSet(Option<Arc<BTreeSet<String>>>);

impl NameSet {
    pub(crate) fn iter(&self) -> impl Iterator<Item = &String> {
        self.0.iter().flat_map(|s| s.iter())
    }

    pub(crate) fn with(&self, name: String) -> NameSet {
        let mut set = self.0.as_deref().cloned().unwrap_or_default();
        set.insert(name);
        NameSet(Some(Arc::new(set)))
    }

    fn union(&self, other: &NameSet) -> NameSet {
        match (&self.0, &other.0) {
            (None, _) => other.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) if Arc::ptr_eq(a, b) || b.is_subset(a) => self.clone(),
            (Some(a), Some(b)) if a.is_subset(b) => other.clone(),
            (Some(a), Some(b)) => NameSet(Some(Arc::new(a.union(b).cloned().collect()))),
        }
    }
}

#[derive(Clone)]
pub(crate) struct FreeVar {
    pub(crate) var: AnyVar,
    pub(crate) avoid: NameSet,
}

impl FreeVar {
    pub(crate) fn key(&self) -> u64 {
        self.var.key()
    }
}

pub(crate) struct OpenBox<T> {
    /// Free variables, strictly ascending by key, never empty.
    pub(crate) vars: Vec<FreeVar>,
    /// Slots `[0, bound)` are reserved for variables bound inside the value.
    pub(crate) bound: usize,
    pub(crate) closure: Closure<T>,
}

impl<T> OpenBox<T> {
    pub(crate) fn single(var: AnyVar, closure: Closure<T>) -> Self {
        OpenBox {
            vars: vec![FreeVar {
                var,
                avoid: NameSet::default(),
            }],
            bound: 0,
            closure,
        }
    }
}

/// A value of type `T` under construction: its free variables can still be
/// bound with [`bind_var`](crate::bind_var).
pub struct BoxVal<T>(pub(crate) Repr<T>);

pub(crate) enum Repr<T> {
    Closed(T),
    Open(Arc<OpenBox<T>>),
}

impl<T: Clone> Clone for BoxVal<T> {
    fn clone(&self) -> Self {
        BoxVal(match &self.0 {
            Repr::Closed(v) => Repr::Closed(v.clone()),
            Repr::Open(o) => Repr::Open(o.clone()),
        })
    }
}

impl<T> fmt::Debug for BoxVal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Closed(_) => f.write_str("Closed(..)"),
            Repr::Open(o) => {
                let vars: Vec<String> = o
                    .vars
                    .iter()
                    .map(|v| format!("{}#{}", v.var.name(), v.key()))
                    .collect();
                write!(f, "Open({vars:?}, {})", o.bound)
            }
        }
    }
}

impl<T> BoxVal<T> {
    pub(crate) fn from_open(open: Arc<OpenBox<T>>) -> Self {
        BoxVal(Repr::Open(open))
    }

    pub fn is_closed(&self) -> bool {
        matches!(self.0, Repr::Closed(_))
    }

    /// Keys of the free variables, ascending.
    pub fn free_keys(&self) -> Vec<u64> {
        match &self.0 {
            Repr::Closed(_) => Vec::new(),
            Repr::Open(o) => o.vars.iter().map(FreeVar::key).collect(),
        }
    }

    /// Rendered names of the free variables, in key order.
    pub fn free_names(&self) -> Vec<String> {
        match &self.0 {
            Repr::Closed(_) => Vec::new(),
            Repr::Open(o) => o.vars.iter().map(|v| v.var.name().to_string()).collect(),
        }
    }

    /// Number of environment slots reserved for variables bound inside.
    pub fn bound_count(&self) -> usize {
        match &self.0 {
            Repr::Closed(_) => 0,
            Repr::Open(o) => o.bound,
        }
    }

    pub fn occurs<A>(&self, x: &Var<A>) -> bool {
        match &self.0 {
            Repr::Closed(_) => false,
            Repr::Open(o) => o.vars.binary_search_by_key(&x.key(), FreeVar::key).is_ok(),
        }
    }

    /// Open boxes list their variables non-empty and strictly ascending.
    pub fn is_well_formed(&self) -> bool {
        match &self.0 {
            Repr::Closed(_) => true,
            Repr::Open(o) => !o.vars.is_empty() && o.vars.windows(2).all(|w| w[0].key() < w[1].key()),
        }
    }
}

/// Inject a value into a box. The value must not contain any variable that
/// is meant to be bound later; such variables would stay free.
pub fn boxed<T>(v: T) -> BoxVal<T> {
    BoxVal(Repr::Closed(v))
}

pub fn is_closed<T>(b: &BoxVal<T>) -> bool {
    b.is_closed()
}

/// Whether `x` is among the free variables of `b`.
pub fn occur<A, T>(x: &Var<A>, b: &BoxVal<T>) -> bool {
    b.occurs(x)
}

/// Merge two key-sorted variable lists, joining the avoid sets of shared
/// variables.
fn merge_vars(a: &[FreeVar], b: &[FreeVar]) -> Vec<FreeVar> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].key().cmp(&b[j].key()) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(FreeVar {
                    var: a[i].var.clone(),
                    avoid: a[i].avoid.union(&b[j].avoid),
                });
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Apply a boxed function to a boxed argument.
pub fn apply_box<A, B, F>(f: BoxVal<F>, a: BoxVal<A>) -> BoxVal<B>
where
    A: Value,
    B: Value,
    F: Fn(A) -> B + Value,
{
    match (f.0, a.0) {
        (Repr::Closed(f), Repr::Closed(a)) => boxed(f(a)),
        (Repr::Closed(f), Repr::Open(oa)) => {
            let ca = oa.closure.clone();
            let closure = Closure::new(move |vp| {
                let ea = ca.resolve(vp);
                let f = f.clone();
                Arc::new(move |env| f(ea(env)))
            });
            BoxVal::from_open(Arc::new(OpenBox {
                vars: oa.vars.clone(),
                bound: oa.bound,
                closure,
            }))
        }
        (Repr::Open(of), Repr::Closed(a)) => {
            let cf = of.closure.clone();
            let closure = Closure::new(move |vp| {
                let ef = cf.resolve(vp);
                let a = a.clone();
                Arc::new(move |env| ef(env)(a.clone()))
            });
            BoxVal::from_open(Arc::new(OpenBox {
                vars: of.vars.clone(),
                bound: of.bound,
                closure,
            }))
        }
        (Repr::Open(of), Repr::Open(oa)) => {
            let (cf, ca) = (of.closure.clone(), oa.closure.clone());
            let closure = Closure::new(move |vp| {
                let ef = cf.resolve(vp);
                let ea = ca.resolve(vp);
                Arc::new(move |env| ef(env)(ea(env)))
            });
            BoxVal::from_open(Arc::new(OpenBox {
                vars: merge_vars(&of.vars, &oa.vars),
                bound: max(of.bound, oa.bound),
                closure,
            }))
        }
    }
}

/// Finish construction. Remaining free variables stay free: each is
/// injected into its syntax through its `mkfree` function.
pub fn unbox<T: Value>(b: BoxVal<T>) -> T {
    match b.0 {
        Repr::Closed(v) => v,
        Repr::Open(o) => {
            let n = o.bound;
            let mut vp = VarPosMap::with_capacity(o.vars.len());
            for (i, v) in o.vars.iter().enumerate() {
                vp.insert(v.key(), n + i);
            }
            let eval = o.closure.resolve(&vp);
            let mut env = Environment::new(n + o.vars.len());
            for (i, v) in o.vars.iter().enumerate() {
                env.set_cell(n + i, v.var.free_cell());
            }
            eval(&env)
        }
    }
}
