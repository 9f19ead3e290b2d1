//! Visual capture after substitution, and its removal by `update_names`.

mod common;

use common::{no_visual_capture, peeled, sample};
use proptest::prelude::*;
use systemf::*;

#[test]
fn substituted_variable_shares_the_binder_name() {
    let mut fv = FreeVars::creating();
    let t = parse_te("λx:A.λy:A.(x y)", &mut fv).unwrap();
    let TeKind::Abs(_, f) = t.kind() else { panic!() };
    let y = new_te_var("y");
    let captured = f.subst(Te::var(y.clone()));
    assert_eq!(print_te(&captured), "λy:A.(y y)");
    assert!(!no_visual_capture(&captured));

    let renamed = update_names(&captured);
    assert_eq!(print_te(&renamed), "λy0:A.(y y0)");
    assert!(no_visual_capture(&renamed));
    fv.te.insert("y".into(), y);
    let back = parse_te(&print_te(&renamed), &mut fv).unwrap();
    assert!(eq_te(&back, &captured));
}

#[test]
fn clean_terms_print_unchanged() {
    let src = "ΛX.ΛY.λf:(X ⇒ Y).λa:X.(f a)";
    let t = parse_te(src, &mut FreeVars::none()).unwrap();
    assert_eq!(print_te(&update_names(&t)), src);
}

#[test]
fn type_capture_through_instantiation() {
    let mut fv = FreeVars::creating();
    let t = parse_te("ΛX.ΛY.λx:X.x", &mut fv).unwrap();
    let TeKind::Lam(f) = t.kind() else { panic!() };
    let y = new_ty_var("Y");
    let captured = f.subst(Ty::var(y.clone()));
    assert_eq!(print_te(&captured), "ΛY.λx:Y.x");
    let renamed = update_names(&captured);
    assert_eq!(print_te(&renamed), "ΛY0.λx:Y.x");
    fv.ty.insert("Y".into(), y);
    assert!(eq_te(&parse_te(&print_te(&renamed), &mut fv).unwrap(), &captured));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn renamed_terms_print_unambiguously(seed in any::<u64>()) {
        let Some((t, mut fv)) = peeled(seed) else { return Ok(()) };
        let renamed = update_names(&t);
        prop_assert!(no_visual_capture(&renamed));
        let text = print_te(&renamed);
        let back = parse_te(&text, &mut fv).unwrap();
        prop_assert!(eq_te(&back, &t), "{}", text);
    }

    #[test]
    fn normal_forms_print_unambiguously(seed in any::<u64>()) {
        let s = sample(seed);
        let n = update_names(&nf(&s.te));
        prop_assert!(no_visual_capture(&n));
    }
}

#[test]
fn peeling_does_provoke_capture() {
    let terms: Vec<Te> = (0..300).filter_map(|s| peeled(s).map(|(t, _)| t)).collect();
    let captured = terms.iter().filter(|t| !no_visual_capture(t)).count();
    eprintln!("{} peeled terms, {} with visual capture", terms.len(), captured);
    assert!(terms.len() >= 200);
    assert!(captured >= terms.len() / 20);
}
