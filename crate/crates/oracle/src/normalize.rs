//! Reference normalizer on named terms.
//!
//! Same strategy as the binder-based normalizer: arguments first, then the
//! head, then reduce; bodies of λ and Λ are normalized in place.

use crate::named::{subst_te, subst_ty_te, NamedTe};
use crate::BudgetExhausted;

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

    fn nf(&mut self, t: &NamedTe) -> Result<NamedTe, BudgetExhausted> {
        Ok(match t {
            NamedTe::Var(_) => t.clone(),
            NamedTe::Abs(x, a, body) => NamedTe::abs(x, a.clone(), self.nf(body)?),
            NamedTe::Lam(x, body) => NamedTe::lam(x, self.nf(body)?),
            NamedTe::App(t, u) => {
                let u = self.nf(u)?;
                match self.nf(t)? {
                    NamedTe::Abs(x, _, body) => {
                        self.step()?;
                        self.nf(&subst_te(&body, &x, &u))?
                    }
                    t => NamedTe::app(t, u),
                }
            }
            NamedTe::Spe(t, a) => match self.nf(t)? {
                NamedTe::Lam(x, body) => {
                    self.step()?;
                    self.nf(&subst_ty_te(&body, &x, a))?
                }
                t => NamedTe::spe(t, a.clone()),
            },
        })
    }
}

/// β-normal form, or an error once more than `limit` β-steps were needed.
pub fn oracle_nf_limited(t: &NamedTe, limit: u64) -> Result<NamedTe, BudgetExhausted> {
    Normalizer {
        steps: 0,
        limit: Some(limit),
    }
    .nf(t)
}

/// β-normal form. Only terminates on terms that have one under this
/// strategy (all well-typed terms do).
pub fn oracle_nf(t: &NamedTe) -> NamedTe {
    Normalizer { steps: 0, limit: None }
        .nf(t)
        .expect("no step limit")
}
