//! ΛX.ΛY.λf:(X ⇒ Y).λa:X.(f a) and its type, built with the boxed
//! constructors.

use bindbox::{bind_var, unbox};
use systemf::*;

fn appl_ty() -> bindbox::BoxVal<Ty> {
    let x = new_ty_var("X");
    let y = new_ty_var("Y");
    let xy = ty_arr(ty_var(&x), ty_var(&y));
    let body = ty_arr(xy.clone(), xy);
    ty_all(bind_var(&x, ty_all(bind_var(&y, body))))
}

fn appl_te() -> bindbox::BoxVal<Te> {
    let x = new_ty_var("X");
    let y = new_ty_var("Y");
    let f = new_te_var("f");
    let a = new_te_var("a");
    let app = te_app(te_var(&f), te_var(&a));
    let inner = te_abs(ty_var(&x), bind_var(&a, app));
    let outer = te_abs(ty_arr(ty_var(&x), ty_var(&y)), bind_var(&f, inner));
    te_lam(bind_var(&x, te_lam(bind_var(&y, outer))))
}

#[test]
fn printed_forms() {
    assert_eq!(print_ty(&unbox(appl_ty())), "∀X.∀Y.((X ⇒ Y) ⇒ (X ⇒ Y))");
    assert_eq!(print_te(&unbox(appl_te())), "ΛX.ΛY.λf:(X ⇒ Y).λa:X.(f a)");
}

#[test]
fn inferred_type_is_the_expected_one() {
    let t = unbox(appl_te());
    let a = unbox(appl_ty());
    let inferred = infer(&Context::new(), &t).unwrap();
    assert!(eq_ty(&inferred, &a));
    assert!(eq_ty_full(&inferred, &a));
    check(&Context::new(), &t, &a).unwrap();
}

#[test]
fn parses_to_the_same_term() {
    let t = unbox(appl_te());
    let parsed = parse_te(&print_te(&t), &mut FreeVars::none()).unwrap();
    assert!(eq_te(&t, &parsed));
    let back = Converter::new().te_from_named(&to_named_te(&t));
    assert!(eq_te(&t, &back));
}

#[test]
fn instantiating_both_quantifiers() {
    let t = unbox(appl_te());
    let mut fv = FreeVars::creating();
    let a = parse_ty("A", &mut fv).unwrap();
    let b = parse_ty("B", &mut fv).unwrap();
    let inst = Te::spe(Te::spe(t, a), b);
    let expected = parse_ty("((A ⇒ B) ⇒ (A ⇒ B))", &mut fv).unwrap();
    assert!(eq_ty(&infer(&Context::new(), &inst).unwrap(), &expected));
    assert_eq!(print_te(&nf(&inst)), "λf:(A ⇒ B).λa:A.(f a)");
}
