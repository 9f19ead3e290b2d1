//! Random well-typed terms.
//!
//! Generation is type-directed: pick a type, then build a term of that type
//! from introductions, variables, applications of context variables, and
//! explicit β-redexes of both sorts so that normalization has work to do.
//! Binder names come from small pools, so shadowing and clashes are common.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::debruijn::alpha_eq_ty;
use crate::named::{ftv_ty, NamedTe, NamedTy};

pub const TERM_NAMES: &[&str] = &["x", "y", "z", "f"];
pub const TYPE_NAMES: &[&str] = &["X", "Y", "Z"];
pub const BASE_TYPES: &[&str] = &["A", "B"];

#[derive(Clone, Copy, Debug)]
pub struct Config {
    /// Bound on `NamedTe::size`.
    pub max_size: usize,
    /// Bound on `NamedTe::depth`.
    pub max_depth: usize,
    /// Nesting bound for generated types.
    pub max_ty_depth: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_size: 50,
            max_depth: 8,
            max_ty_depth: 3,
        }
    }
}

/// Random type over `TYPE_NAMES` and `BASE_TYPES`.
pub fn random_ty<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> NamedTy {
    let pick = |rng: &mut R| {
        let pool = if rng.gen_bool(0.5) { TYPE_NAMES } else { BASE_TYPES };
        NamedTy::var(pool.choose(rng).unwrap())
    };
    if depth == 0 {
        return pick(rng);
    }
    match rng.gen_range(0..10) {
        0..=3 => pick(rng),
        4..=7 => NamedTy::arr(random_ty(rng, depth - 1), random_ty(rng, depth - 1)),
        _ => NamedTy::all(TYPE_NAMES.choose(rng).unwrap(), random_ty(rng, depth - 1)),
    }
}

// `None` marks a binding hidden by a type binder of the same name as one of
// its free type variables; it still shadows older bindings.
type Ctx = Vec<(String, Option<NamedTy>)>;

#[derive(Clone, Copy)]
enum Rule {
    Intro,
    Var,
    Head,
    Beta,
    TypeBeta,
}

struct Gen<'r, R: ?Sized> {
    rng: &'r mut R,
    cfg: Config,
    fuel: usize,
}

fn visible(ctx: &Ctx) -> Vec<(&str, &NamedTy)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (x, a) in ctx.iter().rev() {
        if seen.insert(x.as_str()) {
            if let Some(a) = a {
                out.push((x.as_str(), a));
            }
        }
    }
    out
}

fn hide(ctx: &Ctx, x: &str) -> Ctx {
    ctx.iter()
        .map(|(y, a)| match a {
            Some(a) if ftv_ty(a).contains(x) => (y.clone(), None),
            _ => (y.clone(), a.clone()),
        })
        .collect()
}

/// Argument types if `a` is `A1 ⇒ … ⇒ An ⇒ target` with n ≥ 1.
fn spine(a: &NamedTy, target: &NamedTy) -> Option<Vec<NamedTy>> {
    let mut args = Vec::new();
    let mut cur = a;
    while let NamedTy::Arr(l, r) = cur {
        args.push((**l).clone());
        if alpha_eq_ty(r, target) {
            return Some(args);
        }
        cur = r;
    }
    None
}

fn all_names(a: &NamedTy, out: &mut BTreeSet<String>) {
    match a {
        NamedTy::Var(x) => {
            out.insert(x.clone());
        }
        NamedTy::Arr(a, b) => {
            all_names(a, out);
            all_names(b, out);
        }
        NamedTy::All(x, a) => {
            out.insert(x.clone());
            all_names(a, out);
        }
    }
}

impl<R: Rng + ?Sized> Gen<'_, R> {
    /// Replace some occurrences of `b` in `a` by `z`, so that
    /// `a'[z := b] = a`.
    fn abstract_ty(&mut self, a: &NamedTy, b: &NamedTy, z: &str, bound: &mut Vec<String>) -> NamedTy {
        if a == b && ftv_ty(b).iter().all(|x| !bound.contains(x)) && self.rng.gen_bool(0.7) {
            return NamedTy::var(z);
        }
        match a {
            NamedTy::Var(_) => a.clone(),
            NamedTy::Arr(l, r) => {
                let l = self.abstract_ty(l, b, z, bound);
                NamedTy::arr(l, self.abstract_ty(r, b, z, bound))
            }
            NamedTy::All(x, body) => {
                bound.push(x.clone());
                let body = self.abstract_ty(body, b, z, bound);
                bound.pop();
                NamedTy::all(x, body)
            }
        }
    }

    fn subtypes(a: &NamedTy, out: &mut Vec<NamedTy>) {
        out.push(a.clone());
        match a {
            NamedTy::Var(_) => {}
            NamedTy::Arr(l, r) => {
                Self::subtypes(l, out);
                Self::subtypes(r, out);
            }
            NamedTy::All(_, body) => Self::subtypes(body, out),
        }
    }

    fn term(&mut self, ctx: &Ctx, ty: &NamedTy, depth: usize) -> Option<NamedTe> {
        if depth > self.cfg.max_depth || self.fuel == 0 {
            return None;
        }
        let mut rules: Vec<(u32, Rule)> = Vec::new();
        if matches!(ty, NamedTy::Arr(..) | NamedTy::All(..)) {
            rules.push((3, Rule::Intro));
        }
        let vis = visible(ctx);
        if vis.iter().any(|(_, a)| alpha_eq_ty(a, ty)) {
            rules.push((4, Rule::Var));
        }
        if vis.iter().any(|(_, a)| spine(a, ty).is_some()) {
            rules.push((3, Rule::Head));
        }
        if depth + 2 <= self.cfg.max_depth && self.fuel >= 3 {
            rules.push((2, Rule::Beta));
            rules.push((1, Rule::TypeBeta));
        }
        while !rules.is_empty() {
            let total: u32 = rules.iter().map(|(w, _)| w).sum();
            let mut k = self.rng.gen_range(0..total);
            let i = rules
                .iter()
                .position(|(w, _)| {
                    if k < *w {
                        true
                    } else {
                        k -= w;
                        false
                    }
                })
                .unwrap();
            let (_, rule) = rules.remove(i);
            let saved = self.fuel;
            if let Some(t) = self.apply(rule, ctx, ty, depth) {
                return Some(t);
            }
            self.fuel = saved;
        }
        None
    }

    fn apply(&mut self, rule: Rule, ctx: &Ctx, ty: &NamedTy, depth: usize) -> Option<NamedTe> {
        self.fuel -= 1;
        match rule {
            Rule::Intro => match ty {
                NamedTy::Arr(a, b) => {
                    let x = *TERM_NAMES.choose(self.rng).unwrap();
                    let mut ctx = ctx.clone();
                    ctx.push((x.to_string(), Some((**a).clone())));
                    Some(NamedTe::abs(x, (**a).clone(), self.term(&ctx, b, depth + 1)?))
                }
                NamedTy::All(x, a) => {
                    let body = self.term(&hide(ctx, x), a, depth + 1)?;
                    Some(NamedTe::lam(x, body))
                }
                NamedTy::Var(_) => None,
            },
            Rule::Var => {
                let vis = visible(ctx);
                let found: Vec<&str> = vis
                    .iter()
                    .filter(|(_, a)| alpha_eq_ty(a, ty))
                    .map(|(x, _)| *x)
                    .collect();
                Some(NamedTe::var(found.choose(self.rng)?))
            }
            Rule::Head => {
                let vis = visible(ctx);
                let heads: Vec<(&str, Vec<NamedTy>)> = vis
                    .iter()
                    .filter_map(|(x, a)| spine(a, ty).map(|args| (*x, args)))
                    .collect();
                let (f, args) = heads.choose(self.rng)?.clone();
                let n = args.len();
                if depth + n > self.cfg.max_depth || self.fuel < 2 * n {
                    return None;
                }
                // one App node was paid for above; pay for the rest and the head
                self.fuel -= n;
                let mut t = NamedTe::var(f);
                for (i, a) in args.iter().enumerate() {
                    let u = self.term(ctx, a, depth + n - i)?;
                    t = NamedTe::app(t, u);
                }
                Some(t)
            }
            Rule::Beta => {
                let a = random_ty(self.rng, 2);
                let x = *TERM_NAMES.choose(self.rng).unwrap();
                self.fuel -= 1;
                let mut inner = ctx.clone();
                inner.push((x.to_string(), Some(a.clone())));
                let body = self.term(&inner, ty, depth + 2)?;
                let arg = self.term(ctx, &a, depth + 1)?;
                Some(NamedTe::app(NamedTe::abs(x, a, body), arg))
            }
            Rule::TypeBeta => {
                let b = if self.rng.gen_bool(0.6) {
                    let mut subs = Vec::new();
                    Self::subtypes(ty, &mut subs);
                    subs.choose(self.rng)?.clone()
                } else {
                    random_ty(self.rng, 1)
                };
                let mut taken = ftv_ty(&b);
                all_names(ty, &mut taken);
                let free: Vec<&str> = TYPE_NAMES.iter().copied().filter(|z| !taken.contains(*z)).collect();
                let z = *free.choose(self.rng)?;
                let s = self.abstract_ty(ty, &b, z, &mut Vec::new());
                self.fuel -= 1;
                let body = self.term(&hide(ctx, z), &s, depth + 2)?;
                Some(NamedTe::spe(NamedTe::lam(z, body), b))
            }
        }
    }
}

/// A term of type `ty` in `ctx` (innermost binding last) within the bounds
/// of `cfg`, if one was found.
pub fn gen_term<R: Rng + ?Sized>(
    rng: &mut R,
    cfg: &Config,
    ctx: &[(String, NamedTy)],
    ty: &NamedTy,
) -> Option<NamedTe> {
    let ctx: Ctx = ctx.iter().map(|(x, a)| (x.clone(), Some(a.clone()))).collect();
    let mut g = Gen {
        rng,
        cfg: *cfg,
        fuel: cfg.max_size,
    };
    g.term(&ctx, ty, 1)
}

/// A random closed well-typed term together with its type.
pub fn gen_closed<R: Rng + ?Sized>(rng: &mut R, cfg: &Config) -> (NamedTe, NamedTy) {
    loop {
        let ty = random_ty(rng, cfg.max_ty_depth);
        if let Some(t) = gen_term(rng, cfg, &[], &ty) {
            return (t, ty);
        }
    }
}
