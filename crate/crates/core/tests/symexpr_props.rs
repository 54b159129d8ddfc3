use proptest::prelude::*;
use resokit::{parse, Expr, FuncKind, LinearOperator};

fn leaf() -> impl Strategy<Value = Expr> {
    let scale = prop_oneof![Just(1.0), Just(2.0), Just(0.5), Just(-1.0), Just(1.5)];
    prop_oneof![
        (-4i32..=4).prop_map(|c| Expr::Const(c as f64 / 2.0)),
        Just(Expr::X),
        (prop_oneof![Just(FuncKind::Sin), Just(FuncKind::Cos), Just(FuncKind::Exp)], scale.clone())
            .prop_map(|(k, s)| Expr::func(k, s)),
        Just(Expr::func(FuncKind::Log, 1.0)),
        (prop_oneof![Just(FuncKind::Ai), Just(FuncKind::Bi), Just(FuncKind::AiP)], scale).prop_map(|(k, s)| Expr::func(k, s)),
        (prop_oneof![Just(FuncKind::J), Just(FuncKind::Y), Just(FuncKind::I), Just(FuncKind::K)], 0u32..4)
            .prop_map(|(k, n)| Expr::ordered(k, n, 1.0)),
        (prop_oneof![Just(FuncKind::P), Just(FuncKind::H)], 0u32..5).prop_map(|(k, n)| Expr::ordered(k, n, 1.0)),
        (prop_oneof![Just(-1.0), Just(0.5), Just(2.0)]).prop_map(|p| Expr::real_power(p, 1.0)),
    ]
}

/// Expressions up to depth 5.
fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..=3).prop_map(Expr::Sum),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(Expr::Product),
            (inner, -2i32..=3).prop_map(|(e, n)| e.powi(n)),
        ]
    })
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn print_parse_round_trip(e in expr()) {
        let canon = e.simplify();
        let text = canon.to_string();
        let back = parse(&text).unwrap_or_else(|err| panic!("'{text}' does not re-parse: {err}"));
        prop_assert_eq!(back.to_string(), text.clone());
        for x in [0.7, 1.3] {
            if let (Ok(a), Ok(b)) = (canon.eval(x), back.eval(x)) {
                prop_assert!(close(a, b, 1e-12), "{} at {}: {} vs {}", text, x, a, b);
            }
        }
    }

    #[test]
    fn simplify_preserves_value_and_is_idempotent(e in expr()) {
        let s = e.simplify();
        prop_assert_eq!(s.simplify(), s.clone());
        for x in [0.6, 1.7] {
            if let (Ok(a), Ok(b)) = (e.eval(x), s.eval(x)) {
                if a.abs() < 1e6 {
                    prop_assert!(close(a, b, 1e-9), "{:?} at {}: {} vs {}", e, x, a, b);
                }
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference(e in expr(), x in 0.6f64..2.0) {
        let d = e.differentiate();
        let h = 1e-4;
        let f = |t: f64| e.eval(t).ok().filter(|v| v.is_finite() && v.abs() < 1e4);
        if let (Some(fp), Some(fm), Some(fp2), Some(fm2), Ok(dv)) = (f(x + h), f(x - h), f(x + h / 2.0), f(x - h / 2.0), d.eval(x)) {
            let coarse = (fp - fm) / (2.0 * h);
            let fine = (fp2 - fm2) / h;
            let fd = (4.0 * fine - coarse) / 3.0;
            let scale = 1.0 + fp.abs().max(fm.abs());
            // near a pole the step is not small; widen by the Richardson error estimate
            let slack = (fine - coarse).abs();
            prop_assert!((fd - dv).abs() <= 1e-6 * scale + 1e-6 * dv.abs() + slack, "{} at {}: d = {}, fd = {}", e.simplify(), x, dv, fd);
        }
    }

    #[test]
    fn operators_are_linear(u in expr(), v in expr(), a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let l = LinearOperator::new(vec![Expr::Const(2.0), Expr::X.powi(-1), Expr::Const(1.0) - Expr::X.powi(2)]);
        let combo = l.apply(&(a * u.clone() + b * v.clone()));
        let split = a * l.apply(&u) + b * l.apply(&v);
        for x in [0.8, 1.4] {
            if let (Ok(p), Ok(q)) = (combo.eval(x), split.eval(x)) {
                if p.abs() < 1e6 {
                    prop_assert!(close(p, q, 1e-9), "at {}: {} vs {}", x, p, q);
                }
            }
        }
    }
}

#[test]
fn depth_of_generated_trees_is_bounded() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let mut evaluable = 0;
    for _ in 0..200 {
        let e = expr().new_tree(&mut runner).unwrap().current();
        assert!(e.depth() <= 5, "depth {}", e.depth());
        if e.eval(1.1).is_ok() && e.differentiate().eval(1.1).is_ok() {
            evaluable += 1;
        }
    }
    // the value-based properties above are not vacuous
    assert!(evaluable > 150, "{evaluable}");
}
