#![allow(dead_code)]

use std::collections::HashMap;

use oracle::gen::{gen_closed, gen_term, random_ty, Config, BASE_TYPES, TERM_NAMES, TYPE_NAMES};
use oracle::{NamedTe, NamedTy};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use systemf::{new_te_var, new_ty_var, parse_te, Converter, FreeVars, Te, TeKind, Ty, TyKind};

pub struct Sample {
    pub named: NamedTe,
    pub named_ty: NamedTy,
    pub te: Te,
    pub ty: Ty,
    pub conv: Converter,
}

/// The closed well-typed term generated from `seed`, in both representations.
pub fn sample(seed: u64) -> Sample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (named, named_ty) = gen_closed(&mut rng, &Config::default());
    let mut conv = Converter::new();
    let te = conv.te_from_named(&named);
    let ty = conv.ty_from_named(&named_ty);
    Sample {
        named,
        named_ty,
        te,
        ty,
        conv,
    }
}

pub const NAT: &str = "∀X.((X ⇒ X) ⇒ (X ⇒ X))";

/// Church numeral `n` in the concrete syntax.
pub fn numeral_src(n: usize) -> String {
    let mut body = "x".to_string();
    for _ in 0..n {
        body = format!("(f {body})");
    }
    format!("ΛX.λf:(X ⇒ X).λx:X.{body}")
}

pub fn closed(src: &str) -> Te {
    parse_te(src, &mut FreeVars::none()).unwrap()
}

#[derive(Default, Clone)]
struct Scope {
    te: HashMap<String, u64>,
    ty: HashMap<String, u64>,
}

fn ty_unambiguous(a: &Ty, scope: &Scope) -> bool {
    match a.kind() {
        TyKind::Var(x) => scope.ty.get(&x.name()).is_none_or(|k| *k == x.key()),
        TyKind::Arr(a, b) => ty_unambiguous(a, scope) && ty_unambiguous(b, scope),
        TyKind::All(f) => {
            let (x, a) = f.unbind();
            let mut inner = scope.clone();
            inner.ty.insert(x.name(), x.key());
            ty_unambiguous(&a, &inner)
        }
    }
}

/// True if every variable occurrence, read back by name, denotes the
/// variable it actually is: the innermost binder printed with that name
/// binds it, or no binder of that name is in scope and it is free.
pub fn no_visual_capture(t: &Te) -> bool {
    fn go(t: &Te, scope: &Scope) -> bool {
        match t.kind() {
            TeKind::Var(x) => scope.te.get(&x.name()).is_none_or(|k| *k == x.key()),
            TeKind::Abs(a, f) => {
                let (x, body) = f.unbind();
                let mut inner = scope.clone();
                inner.te.insert(x.name(), x.key());
                ty_unambiguous(a, scope) && go(&body, &inner)
            }
            TeKind::App(t, u) => go(t, scope) && go(u, scope),
            TeKind::Lam(f) => {
                let (x, body) = f.unbind();
                let mut inner = scope.clone();
                inner.ty.insert(x.name(), x.key());
                go(&body, &inner)
            }
            TeKind::Spe(t, a) => go(t, scope) && ty_unambiguous(a, scope),
        }
    }
    go(t, &Scope::default())
}

/// Names of the binders of `key`'s sort that have an occurrence of `key`
/// beneath them.
fn names_above(t: &Te, key: u64, term_sort: bool) -> Vec<String> {
    struct Walk {
        key: u64,
        term_sort: bool,
        path: Vec<String>,
        out: Vec<String>,
    }
    impl Walk {
        fn hit(&mut self) {
            self.out.extend(self.path.iter().cloned());
        }
        fn ty(&mut self, a: &Ty) {
            match a.kind() {
                TyKind::Var(x) => {
                    if !self.term_sort && x.key() == self.key {
                        self.hit();
                    }
                }
                TyKind::Arr(a, b) => {
                    self.ty(a);
                    self.ty(b);
                }
                TyKind::All(f) => {
                    let (_, body) = f.unbind();
                    self.under(!self.term_sort, f.name(), |w| w.ty(&body));
                }
            }
        }
        fn under(&mut self, same_sort: bool, name: String, k: impl FnOnce(&mut Self)) {
            if same_sort {
                self.path.push(name);
                k(self);
                self.path.pop();
            } else {
                k(self);
            }
        }
        fn te(&mut self, t: &Te) {
            match t.kind() {
                TeKind::Var(x) => {
                    if self.term_sort && x.key() == self.key {
                        self.hit();
                    }
                }
                TeKind::Abs(a, f) => {
                    self.ty(a);
                    let (_, body) = f.unbind();
                    self.under(self.term_sort, f.name(), |w| w.te(&body));
                }
                TeKind::App(t, u) => {
                    self.te(t);
                    self.te(u);
                }
                TeKind::Lam(f) => {
                    let (_, body) = f.unbind();
                    self.under(!self.term_sort, f.name(), |w| w.te(&body));
                }
                TeKind::Spe(t, a) => {
                    self.te(t);
                    self.ty(a);
                }
            }
        }
    }
    let mut w = Walk {
        key,
        term_sort,
        path: Vec::new(),
        out: Vec::new(),
    };
    w.te(t);
    w.out
}

/// Take a name from `pool`, preferring one of `binders`.
fn pick<'a>(pool: &mut Vec<&'a str>, binders: &[String], rng: &mut ChaCha8Rng) -> Option<&'a str> {
    let clashing: Vec<usize> = (0..pool.len()).filter(|&i| binders.iter().any(|b| b == pool[i])).collect();
    let i = match clashing.choose(rng) {
        Some(&i) if rng.gen_bool(0.8) => i,
        _ if pool.is_empty() => return None,
        _ => rng.gen_range(0..pool.len()),
    };
    Some(pool.swap_remove(i))
}

/// A term `λ/Λ b1 ... bn. body` with n ≥ 3 leading binders, then each
/// leading binder substituted by a new free variable whose name is drawn
/// from the binder pool. Returns the result and the free variables used.
pub fn peeled(seed: u64) -> Option<(Te, FreeVars)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 3 + (seed % 2) as usize;
    let mut binders = Vec::new();
    let mut ctx = Vec::new();
    for _ in 0..n {
        if rng.gen_bool(0.6) {
            let x = TERM_NAMES.choose(&mut rng).unwrap().to_string();
            let a = random_ty(&mut rng, 1);
            ctx.push((x.clone(), a.clone()));
            binders.push((x, Some(a)));
        } else {
            let x = TYPE_NAMES.choose(&mut rng).unwrap().to_string();
            ctx.retain(|(_, a): &(String, NamedTy)| !oracle::ftv_ty(a).contains(&x));
            binders.push((x, None));
        }
    }
    let cfg = Config { max_size: 30, ..Config::default() };
    let body = (0..10).find_map(|_| {
        let target = match ctx.choose(&mut rng) {
            Some((_, a)) if rng.gen_bool(0.5) => a.clone(),
            _ => random_ty(&mut rng, 2),
        };
        gen_term(&mut rng, &cfg, &ctx, &target)
    })?;
    let named = binders.iter().rev().fold(body, |t, (x, a)| match a {
        Some(a) => NamedTe::abs(x, a.clone(), t),
        None => NamedTe::lam(x, t),
    });
    let mut conv = Converter::new();
    let mut t = conv.te_from_named(&named);

    // free names must stay distinct from one another to be read back
    let mut fv = conv.free_vars();
    let mut te_pool: Vec<&str> = TERM_NAMES.iter().copied().filter(|x| !fv.te.contains_key(*x)).collect();
    let mut ty_pool: Vec<&str> = TYPE_NAMES
        .iter()
        .chain(BASE_TYPES)
        .copied()
        .filter(|x| !fv.ty.contains_key(*x))
        .collect();
    let mut substituted = 0;
    loop {
        t = match t.kind() {
            TeKind::Abs(_, f) => {
                let (x, body) = f.unbind();
                let above = names_above(&body, x.key(), true);
                let Some(name) = pick(&mut te_pool, &above, &mut rng) else { break };
                let v = new_te_var(name);
                fv.te.insert(name.to_string(), v.clone());
                substituted += 1;
                f.subst(Te::var(v))
            }
            TeKind::Lam(f) => {
                let (x, body) = f.unbind();
                let above = names_above(&body, x.key(), false);
                let Some(name) = pick(&mut ty_pool, &above, &mut rng) else { break };
                let v = new_ty_var(name);
                fv.ty.insert(name.to_string(), v.clone());
                substituted += 1;
                f.subst(Ty::var(v))
            }
            _ => break,
        };
    }
    (substituted >= 3).then_some((t, fv))
}
