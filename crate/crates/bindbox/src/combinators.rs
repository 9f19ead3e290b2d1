//! Lifting helpers derived from `boxed` and `apply_box`.

use crate::boxed::{apply_box, boxed, BoxVal};
use crate::Value;

/// Apply a function that contains no variables to a boxed argument.
pub fn box_apply<A, B, F>(f: F, a: BoxVal<A>) -> BoxVal<B>
where
    A: Value,
    B: Value,
    F: Fn(A) -> B + Value,
{
    apply_box(boxed(f), a)
}

pub fn box_apply2<A, B, C, F>(f: F, a: BoxVal<A>, b: BoxVal<B>) -> BoxVal<C>
where
    A: Value,
    B: Value,
    C: Value,
    F: Fn(A, B) -> C + Value,
{
    let curried = move |a: A| {
        let f = f.clone();
        move |b: B| f(a.clone(), b)
    };
    apply_box(box_apply(curried, a), b)
}

pub fn box_apply3<A, B, C, D, F>(f: F, a: BoxVal<A>, b: BoxVal<B>, c: BoxVal<C>) -> BoxVal<D>
where
    A: Value,
    B: Value,
    C: Value,
    D: Value,
    F: Fn(A, B, C) -> D + Value,
{
    let curried = move |a: A, b: B| {
        let f = f.clone();
        move |c: C| f(a.clone(), b.clone(), c)
    };
    apply_box(box_apply2(curried, a, b), c)
}

pub fn box_opt<A: Value>(o: Option<BoxVal<A>>) -> BoxVal<Option<A>> {
    match o {
        None => boxed(None),
        Some(b) => box_apply(Some, b),
    }
}

pub fn box_pair<A: Value, B: Value>(a: BoxVal<A>, b: BoxVal<B>) -> BoxVal<(A, B)> {
    box_apply2(|a, b| (a, b), a, b)
}

/// Right fold of cons over the list. The accumulator holds the tail in
/// reverse so that each cons is a push.
pub fn box_list<A: Value>(l: Vec<BoxVal<A>>) -> BoxVal<Vec<A>> {
    let rev_tail = l.into_iter().rev().fold(boxed(Vec::new()), |acc, x| {
        box_apply2(
            |x: A, mut tail: Vec<A>| {
                tail.push(x);
                tail
            },
            x,
            acc,
        )
    });
    box_apply(
        |mut v: Vec<A>| {
            v.reverse();
            v
        },
        rev_tail,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{box_var, new_var, unbox, Var};

    #[derive(Clone, Debug, PartialEq)]
    enum Tm {
        Var(u64),
        Num(i64),
    }

    fn var(name: &str) -> Var<Tm> {
        new_var(|x: Var<Tm>| Tm::Var(x.key()), name)
    }

    #[test]
    fn functor_identity_and_composition() {
        let x = var("x");
        let b = box_var(&x);
        assert_eq!(unbox(box_apply(|t: Tm| t, b.clone())), unbox(b.clone()));

        let f = |t: Tm| match t {
            Tm::Var(k) => Tm::Num(k as i64),
            n => n,
        };
        let g = |t: Tm| match t {
            Tm::Num(n) => Tm::Num(n + 1),
            v => v,
        };
        let composed = unbox(box_apply(move |t| g(f(t)), b.clone()));
        let stepwise = unbox(box_apply(g, box_apply(f, b)));
        assert_eq!(composed, stepwise);
        assert_eq!(composed, Tm::Num(x.key() as i64 + 1));
    }

    #[test]
    fn apply2_pairs() {
        let b = box_apply2(|a: i32, b: i32| (a, b), boxed(1), boxed(2));
        assert!(b.is_closed());
        assert_eq!(unbox(b), (1, 2));
    }

    #[test]
    fn apply2_unions_variables() {
        let x = var("x");
        let y = var("y");
        let b = box_pair(box_var(&y), box_var(&x));
        let mut keys = vec![x.key(), y.key()];
        keys.sort();
        assert_eq!(b.free_keys(), keys);
        assert_eq!(unbox(b), (Tm::Var(y.key()), Tm::Var(x.key())));
    }

    #[test]
    fn options() {
        assert!(box_opt::<Tm>(None).is_closed());
        assert_eq!(unbox(box_opt::<Tm>(None)), None);
        let x = var("x");
        let b = box_opt(Some(box_var(&x)));
        assert_eq!(b.free_keys(), vec![x.key()]);
        assert_eq!(unbox(b), Some(Tm::Var(x.key())));
    }

    #[test]
    fn lists() {
        let empty = box_list::<i32>(vec![]);
        assert!(empty.is_closed());
        assert_eq!(unbox(empty), Vec::<i32>::new());
        assert_eq!(unbox(box_list(vec![boxed(1), boxed(2)])), vec![1, 2]);

        let x = var("x");
        let y = var("y");
        let b = box_list(vec![box_var(&y), boxed(Tm::Num(0)), box_var(&x), box_var(&y)]);
        assert_eq!(b.free_keys().len(), 2);
        assert_eq!(
            unbox(b),
            vec![Tm::Var(y.key()), Tm::Num(0), Tm::Var(x.key()), Tm::Var(y.key())]
        );
    }

    #[test]
    fn three_way_application() {
        let x = var("x");
        let b = box_apply3(|a: Tm, b: i32, c: Tm| (a, b, c), box_var(&x), boxed(5), boxed(Tm::Num(1)));
        assert_eq!(unbox(b), (Tm::Var(x.key()), 5, Tm::Num(1)));
    }
}
