mod common;

use common::load_system;
use realforms::exactfield::FieldScalar;
use realforms::polysolve::{format_poly, groebner, ideal_equal, parse_poly, solve, split_case, SolutionSet};

#[test]
fn reference_b4_basis_splits_into_known_cases() {
    let (vars, gb) = load_system("b4_in_e6_reference_gb.json");
    let mut ours = groebner(&gb).unwrap();
    let mut theirs = gb.clone();
    ours.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    theirs.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    assert_eq!(ours, theirs, "reference basis is already reduced");
    for (extra, expected) in [("x7", "b4_in_e6_case_x7.json"), ("x7 - 1", "b4_in_e6_case_x7_minus_1.json")] {
        let split = split_case(&gb, &[parse_poly(extra, &vars).unwrap()]).unwrap();
        let (_, want) = load_system(expected);
        assert!(ideal_equal(&split, &want).unwrap(), "case {extra}");
    }
}

#[test]
fn x7_equal_one_case_has_two_points() {
    let (vars, gb) = load_system("b4_in_e6_reference_gb.json");
    let split = split_case(&gb, &[parse_poly("x7 - 1", &vars).unwrap()]).unwrap();
    let SolutionSet::Finite(pts) = solve(&split, vars.len()).unwrap() else { panic!("expected points") };
    assert_eq!(pts.len(), 2);
    let x5: Vec<FieldScalar> = pts.iter().map(|p| p[4].clone()).collect();
    assert!(x5.contains(&FieldScalar::from_integer(1)) && x5.contains(&FieldScalar::from_integer(-1)));
}

#[test]
fn x7_zero_case_is_a_circle() {
    let (vars, gb) = load_system("b4_in_e6_reference_gb.json");
    let split = split_case(&gb, &[parse_poly("x7", &vars).unwrap()]).unwrap();
    let SolutionSet::Parametric { free, constraints, .. } = solve(&split, vars.len()).unwrap() else {
        panic!("expected a family")
    };
    let names: Vec<&str> = free.iter().map(|&v| vars[v].as_str()).collect();
    assert_eq!(names, vec!["x6", "y6"]);
    assert_eq!(format_poly(&constraints[0], &vars), "x6^2 + y6^2 - 1");
}

#[test]
fn e8_regression_basis_has_one_solution() {
    let (vars, gb) = load_system("e8_single_solution_gb.json");
    let SolutionSet::Finite(pts) = solve(&groebner(&gb).unwrap(), vars.len()).unwrap() else { panic!() };
    assert_eq!(pts.len(), 1);
    let want = [-1, 0, 1, -1, 1, -1, 0, 0, 0, 0, 0, 0];
    assert_eq!(pts[0], want.iter().map(|&v| FieldScalar::from_integer(v)).collect::<Vec<_>>());
}
