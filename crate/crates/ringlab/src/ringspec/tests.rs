use super::*;
use crate::ring::{Element, FiniteRing};

#[test]
fn parses_modular() {
    assert_eq!(
        parse_ring_spec("Z8").unwrap(),
        RingSpecAst::Modular { modulus: 8 }
    );
}

#[test]
fn parses_quotient_with_exponent_vectors() {
    assert_eq!(
        parse_ring_spec("Z2[X,Y]/(X^3, X^2*Y, Y^2)").unwrap(),
        RingSpecAst::Quotient {
            modulus: 2,
            variables: vec!["X".into(), "Y".into()],
            generators: vec![vec![3, 0], vec![2, 1], vec![0, 2]],
        }
    );
}

#[test]
fn parses_product() {
    assert_eq!(
        parse_ring_spec("Z3 x Z3").unwrap(),
        RingSpecAst::Product(vec![
            RingSpecAst::Modular { modulus: 3 },
            RingSpecAst::Modular { modulus: 3 },
        ])
    );
}

#[test]
fn product_binds_looser_than_quotient() {
    let ast = parse_ring_spec("Z2[X]/(X^2) x Z2").unwrap();
    match ast {
        RingSpecAst::Product(factors) => {
            assert_eq!(factors.len(), 2);
            assert!(matches!(factors[0], RingSpecAst::Quotient { .. }));
            assert!(matches!(factors[1], RingSpecAst::Modular { modulus: 2 }));
        }
        other => panic!("expected product, got {other:?}"),
    }
}

#[test]
fn grouping_parentheses_nest_products() {
    let ast = parse_ring_spec("(Z2 x Z2) x Z3").unwrap();
    match &ast {
        RingSpecAst::Product(factors) => {
            assert!(matches!(&factors[0], RingSpecAst::Product(inner) if inner.len() == 2));
        }
        other => panic!("expected product, got {other:?}"),
    }
    // round-trips through the printer with explicit parentheses
    assert_eq!(ast.to_string(), "(Z2 x Z2) x Z3");
    assert_eq!(parse_ring_spec(&ast.to_string()).unwrap(), ast);
}

#[test]
fn whitespace_is_insignificant() {
    assert_eq!(
        parse_ring_spec("  Z2 [ X , Y ] / ( X^3 , X^2 * Y , Y^2 )  ").unwrap(),
        parse_ring_spec("Z2[X,Y]/(X^3,X^2*Y,Y^2)").unwrap()
    );
}

#[test]
fn syntax_errors_carry_byte_offsets() {
    match parse_ring_spec("Z8 x") {
        Err(SpecError::Syntax { offset, .. }) => assert_eq!(offset, 4),
        other => panic!("expected syntax error, got {other:?}"),
    }
    match parse_ring_spec("Z2[X,Y]/(X^3,)") {
        Err(SpecError::Syntax { offset, .. }) => assert_eq!(offset, 13),
        other => panic!("expected syntax error, got {other:?}"),
    }
    match parse_ring_spec("Z2[X]/(W^2)") {
        Err(SpecError::UnknownVariable { offset, name }) => {
            assert_eq!(offset, 7);
            assert_eq!(name, "W");
        }
        other => panic!("expected unknown variable, got {other:?}"),
    }
}

#[test]
fn modulus_below_two_is_rejected() {
    assert!(matches!(
        parse_ring_spec("Z1"),
        Err(SpecError::ModulusTooSmall { n: 1, .. })
    ));
    assert!(matches!(
        parse_ring_spec("Z0 x Z2"),
        Err(SpecError::ModulusTooSmall { n: 0, .. })
    ));
}

#[test]
fn constant_generator_rejected() {
    assert!(matches!(
        parse_ring_spec("Z2[X]/(X^0)"),
        Err(SpecError::ConstantGenerator { .. })
    ));
}

#[test]
fn validate_rejects_unbounded_variable() {
    let ast = parse_ring_spec("Z2[X,Y]/(X^3,X^2*Y)").unwrap();
    match validate_finiteness(&ast) {
        Err(SpecError::UnboundedVariable { name }) => assert_eq!(name, "Y"),
        other => panic!("expected unbounded variable, got {other:?}"),
    }
}

#[test]
fn validate_counts_elements() {
    let modular = validate_finiteness(&parse_ring_spec("Z12").unwrap()).unwrap();
    assert_eq!(modular.element_count(), 12);

    // standard monomials {1, X, X^2, Y, XY}: 2^5 = 32 elements
    let quotient =
        validate_finiteness(&parse_ring_spec("Z2[X,Y]/(X^3,X^2*Y,Y^2)").unwrap()).unwrap();
    assert_eq!(quotient.element_count(), 32);
}

#[test]
fn pure_power_only_ideal_gives_box_count() {
    let r = validate_finiteness(&parse_ring_spec("Z3[X,Y]/(X^2,Y^3)").unwrap()).unwrap();
    assert_eq!(r.quotient_ring().unwrap().basis().len(), 2 * 3);
    assert_eq!(r.element_count(), 3usize.pow(6));
}

#[test]
fn ideal_spec_integer_mod_n() {
    let r = validate_finiteness(&parse_ring_spec("Z8").unwrap()).unwrap();
    assert_eq!(parse_ideal_spec("4", &r).unwrap(), vec![Element(4)]);
    assert_eq!(parse_ideal_spec("12", &r).unwrap(), vec![Element(4)]);
    assert_eq!(parse_ideal_spec("-1", &r).unwrap(), vec![Element(7)]);
    assert_eq!(parse_ideal_spec("0", &r).unwrap(), vec![r.zero()]);
}

#[test]
fn ideal_spec_polynomials_normal_form() {
    let r = validate_finiteness(&parse_ring_spec("Z2[X,Y]/(X^3,X^2*Y,Y^2)").unwrap()).unwrap();
    let gens = parse_ideal_spec("X, Y", &r).unwrap();
    assert_eq!(gens.len(), 2);
    assert_ne!(gens[0], r.zero());
    assert_ne!(gens[1], r.zero());
    assert_eq!(r.label(gens[0]), "X");
    assert_eq!(r.label(gens[1]), "Y");
    // X^2*Y lies in the ideal, so its normal form is zero
    assert_eq!(parse_ideal_spec("X^2*Y", &r).unwrap(), vec![r.zero()]);
    // sums reduce termwise: X + X = 0 over Z2
    assert_eq!(parse_ideal_spec("X + X", &r).unwrap(), vec![r.zero()]);
}

#[test]
fn ideal_spec_tuples_for_products() {
    let r = validate_finiteness(&parse_ring_spec("Z4 x Z2").unwrap()).unwrap();
    let gens = parse_ideal_spec("(2,1)", &r).unwrap();
    assert_eq!(r.label(gens[0]), "(2,1)");
    // integers embed diagonally
    let one = parse_ideal_spec("1", &r).unwrap();
    assert_eq!(one[0], r.one());
    assert!(matches!(
        parse_ideal_spec("(1,0,0)", &r),
        Err(SpecError::ArityMismatch { expected: 2, got: 3, .. })
    ));
}

#[test]
fn ideal_spec_shape_mismatches() {
    let modular = validate_finiteness(&parse_ring_spec("Z8").unwrap()).unwrap();
    assert!(matches!(
        parse_ideal_spec("(1,0)", &modular),
        Err(SpecError::ShapeMismatch { .. })
    ));
    assert!(matches!(
        parse_ideal_spec("X", &modular),
        Err(SpecError::ShapeMismatch { .. })
    ));
    let quotient =
        validate_finiteness(&parse_ring_spec("Z2[X]/(X^2)").unwrap()).unwrap();
    assert!(matches!(
        parse_ideal_spec("Y", &quotient),
        Err(SpecError::UnknownVariable { .. })
    ));
}

#[test]
fn nested_tuples_for_nested_products() {
    let r = validate_finiteness(&parse_ring_spec("(Z2 x Z2) x Z3").unwrap()).unwrap();
    let gens = parse_ideal_spec("((1,0),2)", &r).unwrap();
    assert_eq!(r.label(gens[0]), "((1,0),2)");
}

#[test]
fn display_round_trips_examples() {
    for text in [
        "Z8",
        "Z2[X,Y]/(X^3,X^2*Y,Y^2)",
        "Z3 x Z3",
        "Z2[X]/(X^2) x Z2",
        "Z2 x Z2 x Z2",
    ] {
        let ast = parse_ring_spec(text).unwrap();
        let printed = ast.to_string();
        assert_eq!(parse_ring_spec(&printed).unwrap(), ast, "round trip of {text}");
        assert_eq!(printed, text);
    }
}
