use std::any::TypeId;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::boxed::{BoxVal, Closure, OpenBox};
use crate::env::Cell;
use crate::Value;

static NEXT_KEY: AtomicU64 = AtomicU64::new(0);

fn fresh_key() -> u64 {
    NEXT_KEY.fetch_add(1, AtomicOrdering::Relaxed)
}

/// Injection of a variable into the syntax it ranges over.
pub type MkFree<T> = Arc<dyn Fn(Var<T>) -> T + Send + Sync>;

/// A variable name: a fixed prefix and an optional numeric suffix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Name {
    prefix: Arc<str>,
    suffix: Option<u64>,
}

impl Name {
    pub fn new(prefix: impl Into<Arc<str>>, suffix: Option<u64>) -> Self {
        Name {
            prefix: prefix.into(),
            suffix,
        }
    }

    /// Split a name into prefix and the trailing run of decimal digits.
    ///
    /// Leading zeros stay in the prefix (`x007` is `x00` + `7`) so rendering
    /// gives back the original text; a lone `0` is a suffix (`x0` is `x` + `0`).
    pub fn parse(name: &str) -> Self {
        let bytes = name.as_bytes();
        let digits = bytes.iter().rev().take_while(|b| b.is_ascii_digit()).count();
        if digits == 0 {
            return Name::new(name, None);
        }
        let mut start = name.len() - digits;
        while start + 1 < name.len() && bytes[start] == b'0' {
            start += 1;
        }
        match name[start..].parse::<u64>() {
            Ok(n) => Name::new(&name[..start], Some(n)),
            Err(_) => Name::new(name, None),
        }
    }

    pub fn prefix(&self) -> &str {
        &self.prefix
    }

    pub fn suffix(&self) -> Option<u64> {
        self.suffix
    }

    /// Keep this name if it is not taken; otherwise the first of
    /// `prefix`, `prefix0`, `prefix1`, ... that is free.
    pub(crate) fn avoiding(&self, taken: &BTreeSet<String>) -> Name {
        if !taken.contains(&self.to_string()) {
            return self.clone();
        }
        std::iter::once(None)
            .chain((0..).map(Some))
            .map(|suffix| Name::new(self.prefix.clone(), suffix))
            .find(|n| !taken.contains(&n.to_string()))
            .expect("suffixes are unbounded")
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.prefix)?;
        if let Some(n) = self.suffix {
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

pub(crate) struct VarData<T> {
    key: u64,
    name: Name,
    mkfree: MkFree<T>,
}

/// Type-erased view of a variable, as stored in the free-variable list of an
/// open box.
pub(crate) trait ErasedVar: Send + Sync {
    fn key(&self) -> u64;
    fn name(&self) -> &Name;
    fn sort(&self) -> TypeId;
    /// The variable injected into its own syntax, ready to go in a slot.
    fn free_cell(self: Arc<Self>) -> Cell;
}

impl<T: Value> ErasedVar for VarData<T> {
    fn key(&self) -> u64 {
        self.key
    }

    fn name(&self) -> &Name {
        &self.name
    }

    fn sort(&self) -> TypeId {
        TypeId::of::<T>()
    }

    fn free_cell(self: Arc<Self>) -> Cell {
        let x = Var::from_data(self);
        Arc::new(x.mkfree())
    }
}

#[derive(Clone)]
pub(crate) struct AnyVar(Arc<dyn ErasedVar>);

impl AnyVar {
    pub(crate) fn key(&self) -> u64 {
        self.0.key()
    }

    pub(crate) fn name(&self) -> &Name {
        self.0.name()
    }

    pub(crate) fn sort(&self) -> TypeId {
        self.0.sort()
    }

    pub(crate) fn free_cell(&self) -> Cell {
        self.0.clone().free_cell()
    }
}

/// A free variable ranging over values of type `T`.
///
/// Variables are compared by their key, which is unique in the process;
/// names are for display only.
pub struct Var<T> {
    data: Arc<VarData<T>>,
    open: Arc<OpenBox<T>>,
}

impl<T> Clone for Var<T> {
    fn clone(&self) -> Self {
        Var {
            data: self.data.clone(),
            open: self.open.clone(),
        }
    }
}

impl<T: Value> Var<T> {
    pub(crate) fn fresh(name: Name, mkfree: MkFree<T>) -> Self {
        Var::from_data(Arc::new(VarData {
            key: fresh_key(),
            name,
            mkfree,
        }))
    }

    fn from_data(data: Arc<VarData<T>>) -> Self {
        let key = data.key;
        let closure = Closure::new(move |vp| {
            let slot = vp.slot(key);
            Arc::new(move |env| env.get::<T>(slot))
        });
        let open = Arc::new(OpenBox::single(AnyVar(data.clone()), closure));
        Var { data, open }
    }

    /// The variable injected into its syntax.
    pub fn mkfree(&self) -> T {
        (self.data.mkfree)(self.clone())
    }

    pub(crate) fn mkfree_fn(&self) -> &MkFree<T> {
        &self.data.mkfree
    }

    pub(crate) fn self_box(&self) -> BoxVal<T> {
        BoxVal::from_open(self.open.clone())
    }
}

impl<T> Var<T> {
    pub fn key(&self) -> u64 {
        self.data.key
    }

    pub fn name(&self) -> String {
        self.data.name.to_string()
    }

    pub fn prefix(&self) -> &str {
        self.data.name.prefix()
    }

    pub fn suffix(&self) -> Option<u64> {
        self.data.name.suffix()
    }

    pub(crate) fn full_name(&self) -> &Name {
        &self.data.name
    }
}

impl<T> fmt::Debug for Var<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.data.name, self.data.key)
    }
}

impl<T> PartialEq for Var<T> {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl<T> Eq for Var<T> {}

impl<T> PartialOrd for Var<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T> Ord for Var<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl<T> Hash for Var<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

/// Create a fresh variable with the given preferred name.
///
/// Panics if `name` is empty.
pub fn new_var<T: Value>(mkfree: impl Fn(Var<T>) -> T + Send + Sync + 'static, name: &str) -> Var<T> {
    assert!(!name.is_empty(), "variable names must be non-empty");
    Var::fresh(Name::parse(name), Arc::new(mkfree))
}

pub fn name_of<T>(x: &Var<T>) -> String {
    x.name()
}

pub fn eq_vars<T>(x: &Var<T>, y: &Var<T>) -> bool {
    x.key() == y.key()
}

/// The boxed form of `x`, with `x` as its only free variable.
///
/// The box is built once per variable; repeated calls share it.
pub fn box_var<T: Value>(x: &Var<T>) -> BoxVal<T> {
    x.self_box()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug)]
    struct Atom(Var<Atom>);

    fn atom(name: &str) -> Var<Atom> {
        new_var(Atom, name)
    }

    #[test]
    fn name_split() {
        let cases = [
            ("X", "X", None),
            ("x17", "x", Some(17)),
            ("x0", "x", Some(0)),
            ("x007", "x00", Some(7)),
            ("x00", "x0", Some(0)),
            ("42", "", Some(42)),
        ];
        for (input, prefix, suffix) in cases {
            let n = Name::parse(input);
            assert_eq!((n.prefix(), n.suffix()), (prefix, suffix), "{input}");
            assert_eq!(n.to_string(), input);
        }
    }

    #[test]
    fn overlong_digit_run_is_kept_in_prefix() {
        let n = Name::parse("x123456789012345678901234567890");
        assert_eq!(n.suffix(), None);
        assert_eq!(n.to_string(), "x123456789012345678901234567890");
    }

    #[test]
    fn new_var_splits_name() {
        let x = atom("X");
        assert_eq!((x.prefix(), x.suffix()), ("X", None));
        let y = atom("x17");
        assert_eq!((y.prefix(), y.suffix()), ("x", Some(17)));
        assert_eq!(name_of(&y), "x17");
    }

    #[test]
    fn keys_are_fresh() {
        let a = atom("x");
        let b = atom("x");
        assert_ne!(a.key(), b.key());
        assert!(!eq_vars(&a, &b));
        assert!(eq_vars(&a, &a.clone()));
    }

    #[test]
    #[should_panic(expected = "non-empty")]
    fn empty_name_is_rejected() {
        atom("");
    }

    #[test]
    fn avoiding_picks_smallest_free_suffix() {
        let taken: BTreeSet<String> = ["x", "x0", "x2"].iter().map(|s| s.to_string()).collect();
        assert_eq!(Name::parse("x").avoiding(&taken).to_string(), "x1");
        assert_eq!(Name::parse("x5").avoiding(&taken).to_string(), "x5");
        assert_eq!(Name::parse("x2").avoiding(&taken).to_string(), "x1");
        assert_eq!(Name::parse("y").avoiding(&taken).to_string(), "y");
    }

    #[test]
    fn mkfree_injects_the_variable_itself() {
        let x = atom("x");
        let Atom(y) = x.mkfree();
        assert!(eq_vars(&x, &y));
    }
}
