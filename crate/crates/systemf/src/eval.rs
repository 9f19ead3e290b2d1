//! Head and strong normalization.
//!
//! Both reduce applications right to left: the argument is evaluated before
//! the function, and a β-redex is contracted with `Binder::subst`.

use bindbox::{bind_var, unbox};

use crate::ast::{lift_te, lift_ty, Te, TeKind, Ty};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("normalization needed more than {limit} β-steps")]
pub struct BudgetExhausted {
    pub limit: u64,
}

pub fn hnf(t: &Te) -> Te {
    match t.kind() {
        TeKind::App(f, u) => {
            let u = hnf(u);
            let f = hnf(f);
            match f.kind() {
                TeKind::Abs(_, b) => hnf(&b.subst(u)),
                _ => Te::app(f, u),
            }
        }
        TeKind::Spe(f, a) => {
            let f = hnf(f);
            match f.kind() {
                TeKind::Lam(b) => hnf(&b.subst(a.clone())),
                _ => Te::spe(f, a.clone()),
            }
        }
        _ => t.clone(),
    }
}

struct Normalizer {
    steps: u64,
    limit: Option<u64>,
}

impl Normalizer {
    fn step(&mut self) -> Result<(), BudgetExhausted> {
        self.steps += 1;
        match self.limit {
            Some(limit) if self.steps > limit => Err(BudgetExhausted { limit }),
            _ => Ok(()),
        }
    }

    fn nf(&mut self, t: &Te) -> Result<Te, BudgetExhausted> {
        Ok(match t.kind() {
            TeKind::Var(_) => t.clone(),
            TeKind::Abs(a, f) => {
                let (x, body) = f.unbind();
                let body = self.nf(&body)?;
                Te::abs(a.clone(), unbox(bind_var(&x, lift_te(&body))))
            }
            TeKind::App(f, u) => {
                let u = self.nf(u)?;
                let f = self.nf(f)?;
                match f.kind() {
                    TeKind::Abs(_, b) => {
                        self.step()?;
                        self.nf(&b.subst(u))?
                    }
                    _ => Te::app(f, u),
                }
            }
            TeKind::Lam(f) => {
                let (x, body) = f.unbind();
                let body = self.nf(&body)?;
                Te::lam(unbox(bind_var(&x, lift_te(&body))))
            }
            TeKind::Spe(f, a) => {
                let f = self.nf(f)?;
                match f.kind() {
                    TeKind::Lam(b) => {
                        self.step()?;
                        self.nf(&b.subst(a.clone()))?
                    }
                    _ => Te::spe(f, a.clone()),
                }
            }
        })
    }
}

/// β-normal form. Terminates on well-typed terms; may loop otherwise.
pub fn nf(t: &Te) -> Te {
    Normalizer { steps: 0, limit: None }
        .nf(t)
        .expect("no step limit")
}

/// β-normal form and the number of β-steps taken, or an error once more
/// than `limit` steps were needed.
pub fn nf_limited(t: &Te, limit: u64) -> Result<(Te, u64), BudgetExhausted> {
    let mut n = Normalizer {
        steps: 0,
        limit: Some(limit),
    };
    let t = n.nf(t)?;
    Ok((t, n.steps))
}

/// Re-lift and unbox `t` so that every binder picks its name again against
/// the variables actually free beneath it. The result is α-equal to `t` but
/// prints without visual capture.
pub fn update_names(t: &Te) -> Te {
    unbox(lift_te(t))
}

pub fn update_names_ty(a: &Ty) -> Ty {
    unbox(lift_ty(a))
}
