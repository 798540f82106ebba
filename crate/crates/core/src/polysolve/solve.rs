use super::groebner::groebner;
use super::poly::Poly;
use super::univariate::{gcd, real_roots};
use super::PolyError;
use crate::exactfield::{Field, FieldScalar};

/// Real solution set of a polynomial system given by a reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq)]
pub enum SolutionSet {
    Inconsistent,
    /// Every point, one value per variable.
    Finite(Vec<Vec<FieldScalar>>),
    /// Positive-dimensional: each dependent variable equals a polynomial in
    /// the free ones, subject to the remaining constraints.
    Parametric {
        free: Vec<usize>,
        dependent: Vec<(usize, Poly<FieldScalar>)>,
        constraints: Vec<Poly<FieldScalar>>,
    },
}

fn is_unit_ideal(gb: &[Poly<FieldScalar>]) -> bool {
    gb.iter().any(|g| g.is_constant() && !g.is_zero())
}

/// Index of `v` when `m` is a pure power of one variable.
fn pure_power(m: &[u16]) -> Option<usize> {
    let nz: Vec<usize> = (0..m.len()).filter(|&i| m[i] > 0).collect();
    (nz.len() == 1).then(|| nz[0])
}

pub fn is_zero_dimensional(gb: &[Poly<FieldScalar>], nvars: usize) -> bool {
    (0..nvars).all(|v| gb.iter().any(|g| g.leading_monomial().and_then(|m| pure_power(m)) == Some(v)))
}

/// Solves the system whose reduced lex Gröbner basis is `gb`.
pub fn solve(gb: &[Poly<FieldScalar>], nvars: usize) -> Result<SolutionSet, PolyError> {
    if is_unit_ideal(gb) {
        return Ok(SolutionSet::Inconsistent);
    }
    if is_zero_dimensional(gb, nvars) {
        let pts = solve_finite(gb, nvars)?;
        return Ok(if pts.is_empty() { SolutionSet::Inconsistent } else { SolutionSet::Finite(pts) });
    }
    let mut dependent = Vec::new();
    let mut constraints = Vec::new();
    for g in gb {
        let (m, _) = g.leading_term().expect("nonzero");
        match pure_power(m) {
            Some(v) if m[v] == 1 => {
                let mut tail = g.clone();
                tail.add_term(m.clone(), -FieldScalar::one());
                dependent.push((v, tail.neg()));
            }
            _ => constraints.push(g.clone()),
        }
    }
    let free = (0..nvars).filter(|v| !dependent.iter().any(|(d, _)| d == v)).collect();
    Ok(SolutionSet::Parametric { free, dependent, constraints })
}

fn solve_finite(gb: &[Poly<FieldScalar>], nvars: usize) -> Result<Vec<Vec<FieldScalar>>, PolyError> {
    // partial assignments for variables v..nvars
    let mut partial: Vec<Vec<FieldScalar>> = vec![Vec::new()];
    for v in (0..nvars).rev() {
        let relevant: Vec<&Poly<FieldScalar>> =
            gb.iter().filter(|g| g.variables().first().is_some_and(|&f| f == v)).collect();
        let mut next = Vec::new();
        for tail in partial {
            let mut g_acc: Option<Vec<FieldScalar>> = None;
            for g in &relevant {
                let mut h = (*g).clone();
                for (k, val) in tail.iter().enumerate() {
                    h = h.substitute(v + 1 + k, val);
                }
                let u = h.to_univariate(v).expect("only v remains");
                g_acc = Some(match g_acc {
                    None => u,
                    Some(a) => gcd(&a, &u),
                });
            }
            let Some(u) = g_acc else {
                return Err(PolyError::Shape(format!("no polynomial constrains variable {v}")));
            };
            if u.iter().all(|c| c.is_zero()) {
                return Err(PolyError::Shape(format!("variable {v} is unconstrained")));
            }
            for r in real_roots(&u)? {
                let mut full = vec![r];
                full.extend(tail.iter().cloned());
                next.push(full);
            }
        }
        partial = next;
    }
    for pt in &partial {
        if let Some(g) = gb.iter().find(|g| !g.eval(pt).is_zero()) {
            return Err(PolyError::Verification(format!("solution does not satisfy {g:?}")));
        }
    }
    Ok(partial)
}

/// Gröbner basis of `gb` together with extra equations, e.g. a case split.
pub fn split_case(gb: &[Poly<FieldScalar>], extra: &[Poly<FieldScalar>]) -> Result<Vec<Poly<FieldScalar>>, PolyError> {
    let mut all = gb.to_vec();
    all.extend(extra.iter().cloned());
    groebner(&all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polysolve::text::{format_poly, parse_poly};

    fn vars(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    fn system(src: &[&str], v: &[String]) -> Vec<Poly<FieldScalar>> {
        groebner(&src.iter().map(|s| parse_poly(s, v).unwrap()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn finite_with_radicals() {
        let v = vars(&["x", "y"]);
        let gb = system(&["x^2 - 2", "y - x"], &v);
        let SolutionSet::Finite(pts) = solve(&gb, 2).unwrap() else { panic!() };
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert_eq!(&p[0], &p[1]);
            assert_eq!(p[0].mul_ref(&p[0]), FieldScalar::from_integer(2));
        }
    }

    #[test]
    fn complex_only_is_inconsistent() {
        let v = vars(&["x"]);
        assert_eq!(solve(&system(&["x^2 + 1"], &v), 1).unwrap(), SolutionSet::Inconsistent);
        assert_eq!(solve(&system(&["x - 1", "x - 2"], &v), 1).unwrap(), SolutionSet::Inconsistent);
    }

    #[test]
    fn circle_is_parametric() {
        let v = vars(&["a", "b", "x", "y"]);
        let gb = system(&["a - 1", "b - x", "x^2 + y^2 - 1"], &v);
        let SolutionSet::Parametric { free, dependent, constraints } = solve(&gb, 4).unwrap() else { panic!() };
        assert_eq!(free, vec![2, 3]);
        assert_eq!(dependent.len(), 2);
        assert_eq!(format_poly(&dependent[1].1, &v), "x");
        assert_eq!(format_poly(&constraints[0], &v), "x^2 + y^2 - 1");
    }

    #[test]
    fn splitting_a_case() {
        let v = vars(&["x", "y"]);
        let gb = system(&["x*y", "y^2 - y"], &v);
        let a = split_case(&gb, &[parse_poly("y", &v).unwrap()]).unwrap();
        let b = split_case(&gb, &[parse_poly("y - 1", &v).unwrap()]).unwrap();
        assert_eq!(a.iter().map(|p| format_poly(p, &v)).collect::<Vec<_>>(), vec!["y"]);
        assert_eq!(b.iter().map(|p| format_poly(p, &v)).collect::<Vec<_>>(), vec!["x", "y - 1"]);
    }
}
