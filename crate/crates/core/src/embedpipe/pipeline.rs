use super::balance::{balance_by_system, is_balanced, rescaling_trick, RescalingOutcome};
use super::system::{involution_system, InvolutionSystem};
use super::{EmbedError, Embedding};
use crate::exactfield::{ComplexScalar, FieldScalar};
use crate::polysolve::univariate::{format_univariate, real_roots, root_multiplicity};
use crate::polysolve::{
    charpoly_mod_ideal, constant_coefficients, format_poly, groebner_with_limits, solve, GroebnerLimits,
    Poly, PolyError, SolutionSet, SolutionSetJson,
};
use crate::realform::{classify_real_form, compact_form, real_form_from_involution, Involution, RealFormReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    /// Variable order for the Gröbner basis, largest first; defaults to `x1..xs, y1..ys`.
    pub var_order: Option<Vec<String>>,
    /// Warn when more finite solutions than this are found.
    pub expected_max_solutions: usize,
    pub limits: GroebnerLimits,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { var_order: None, expected_max_solutions: 2, limits: GroebnerLimits::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    /// Finite solution as `(variable, value)` pairs, absent for a parametric family.
    pub point: Option<Vec<(String, String)>>,
    /// Reduced characteristic polynomial of `A` (parametric case).
    pub charpoly: Option<String>,
    pub report: Option<RealFormReport>,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct PipelineResult {
    /// The balanced embedding actually used.
    pub embedding: Embedding,
    pub rescaled: bool,
    pub system: InvolutionSystem,
    /// Variables in the order used for the Gröbner basis.
    pub variables: Vec<String>,
    pub num_polynomials: usize,
    pub groebner: Vec<Poly<FieldScalar>>,
    pub solutions: SolutionSet,
    pub reports: Vec<SolutionReport>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineJson {
    pub source: String,
    pub target: String,
    pub rescaled: bool,
    pub intertwiner_dim: usize,
    pub num_polynomials: usize,
    pub variables: Vec<String>,
    pub groebner: Vec<String>,
    pub solutions: SolutionSetJson,
    pub reports: Vec<SolutionReport>,
    pub warnings: Vec<String>,
}

impl PipelineResult {
    pub fn to_json(&self) -> PipelineJson {
        PipelineJson {
            source: self.embedding.source.type_name(),
            target: self.embedding.target.type_name(),
            rescaled: self.rescaled,
            intertwiner_dim: self.system.dim(),
            num_polynomials: self.num_polynomials,
            variables: self.variables.clone(),
            groebner: self.groebner.iter().map(|p| format_poly(p, &self.variables)).collect(),
            solutions: SolutionSetJson::new(&self.solutions, &self.variables),
            reports: self.reports.clone(),
            warnings: self.warnings.clone(),
        }
    }

    /// Distinct real form names among the reports.
    pub fn real_forms(&self) -> Vec<String> {
        let mut names: Vec<String> = self.reports.iter().filter_map(|r| r.report.as_ref().map(|r| r.name.clone())).collect();
        names.sort();
        names.dedup();
        names
    }
}

/// `perm[k]` = position of default variable `k` in the chosen order.
fn order_permutation(defaults: &[String], order: &Option<Vec<String>>) -> Result<Vec<usize>, EmbedError> {
    let Some(order) = order else {
        return Ok((0..defaults.len()).collect());
    };
    let mut sorted_a = order.clone();
    let mut sorted_b = defaults.to_vec();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Err(EmbedError::Poly(PolyError::Shape(format!(
            "variable order must be a permutation of {}",
            defaults.join(", ")
        ))));
    }
    Ok(defaults.iter().map(|v| order.iter().position(|w| w == v).expect("permutation")).collect())
}

/// Balances `ε` if needed, sets up and solves the involution system, and
/// classifies the real forms attached to its solutions. Results are up to
/// linear equivalence of embeddings.
pub fn run_pipeline(emb: &Embedding, theta: &Involution, opts: &PipelineOptions) -> Result<PipelineResult, EmbedError> {
    let mut warnings = Vec::new();
    let (emb, rescaled) = if is_balanced(emb)?.balanced {
        (emb.clone(), false)
    } else {
        match rescaling_trick(emb)? {
            RescalingOutcome::Success { embedding, .. } => (embedding, true),
            RescalingOutcome::Failure { reason, .. } => {
                warnings.push(format!("rescaling failed ({reason}); used the balancing system"));
                (balance_by_system(emb)?, true)
            }
        }
    };
    let sys = involution_system(&emb, theta)?;
    let s = sys.dim();
    let nv = 2 * s;
    let perm = order_permutation(&sys.variables, &opts.var_order)?;
    let mut variables = vec![String::new(); nv];
    for (k, &p) in perm.iter().enumerate() {
        variables[p] = sys.variables[k].clone();
    }
    let polys: Vec<Poly<FieldScalar>> = sys.polynomials().iter().map(|p| p.remap(nv, &perm)).collect();
    let gb = groebner_with_limits(&polys, &opts.limits)?;
    let solutions = solve(&gb, nv)?;

    let mut reports = Vec::new();
    let ctx = Ctx { emb: &emb, sys: &sys, perm: &perm, variables: &variables, limits: &opts.limits };
    let finite = ctx.analyse(&gb, &solutions, &[], &mut reports, &mut warnings)?;
    if finite > opts.expected_max_solutions {
        warnings.push(format!("{finite} solutions found, more than the expected {}", opts.expected_max_solutions));
    }
    Ok(PipelineResult {
        embedding: emb,
        rescaled,
        system: sys,
        variables,
        num_polynomials: polys.len(),
        groebner: gb,
        solutions,
        reports,
        warnings,
    })
}

const MAX_SPLIT_DEPTH: usize = 4;

struct Ctx<'a> {
    emb: &'a Embedding,
    sys: &'a InvolutionSystem,
    perm: &'a [usize],
    variables: &'a [String],
    limits: &'a GroebnerLimits,
}

impl Ctx<'_> {
    /// Classifies every solution of `gb`, splitting parametric families on a
    /// univariate generator when the characteristic polynomial depends on the
    /// parameters. Returns the number of finite solutions seen.
    fn analyse(
        &self,
        gb: &[Poly<FieldScalar>],
        solutions: &SolutionSet,
        case: &[String],
        reports: &mut Vec<SolutionReport>,
        warnings: &mut Vec<String>,
    ) -> Result<usize, EmbedError> {
        let target = &self.emb.target;
        let n = target.dim();
        let nv = self.variables.len();
        let case_note = || (!case.is_empty()).then(|| format!("case {}", case.join(", ")));
        match solutions {
            SolutionSet::Inconsistent => {
                if case.is_empty() {
                    warnings.push("the system has no real solution".into());
                }
                Ok(0)
            }
            SolutionSet::Finite(points) => {
                let cf = compact_form(target);
                for pt in points {
                    let values: Vec<FieldScalar> = self.perm.iter().map(|&p| pt[p].clone()).collect();
                    let th = self.sys.involution_at(self.emb, &values)?;
                    let cd = real_form_from_involution(target, &cf, &th)?;
                    reports.push(SolutionReport {
                        point: Some(self.variables.iter().cloned().zip(pt.iter().map(|v| v.to_string())).collect()),
                        charpoly: None,
                        report: Some(cd.report),
                        note: case_note(),
                    });
                }
                Ok(points.len())
            }
            SolutionSet::Parametric { .. } => {
                let m: Vec<Vec<Poly<ComplexScalar>>> = self
                    .sys
                    .symbolic_matrix()
                    .iter()
                    .map(|row| row.iter().map(|p| p.remap(nv, self.perm)).collect())
                    .collect();
                let cgb: Vec<Poly<ComplexScalar>> =
                    gb.iter().map(|g| g.map_coeffs(|c| ComplexScalar::real(c.clone()))).collect();
                let cp = charpoly_mod_ideal(&m, &cgb, nv);
                let real_consts = constant_coefficients(&cp)
                    .filter(|cs| cs.iter().all(|c| c.im.is_zero()))
                    .map(|cs| cs.into_iter().rev().map(|c| c.re).collect::<Vec<FieldScalar>>());
                if let Some(low_first) = real_consts {
                    let text = format_univariate(&low_first, "T");
                    let plus = root_multiplicity(&low_first, &FieldScalar::from_integer(1));
                    let minus = root_multiplicity(&low_first, &FieldScalar::from_integer(-1));
                    if plus + minus != n {
                        return Err(EmbedError::Contract(format!(
                            "characteristic polynomial {text} is not (T-1)^a(T+1)^b"
                        )));
                    }
                    let mut report = RealFormReport { dim_k: plus, dim_p: minus, killing: [plus, minus], name: String::new() };
                    report.name = classify_real_form(&target.type_name(), &report)?;
                    let mut note = "every solution of the parametric family".to_string();
                    if let Some(c) = case_note() {
                        note = format!("{note}, {c}");
                    }
                    reports.push(SolutionReport { point: None, charpoly: Some(text), report: Some(report), note: Some(note) });
                    return Ok(0);
                }
                if case.len() < MAX_SPLIT_DEPTH {
                    if let Some((v, roots)) = splitting_variable(gb)? {
                        let mut total = 0;
                        for r in roots {
                            let extra = Poly::var(nv, v).sub(&Poly::constant(nv, r.clone()));
                            let mut all = gb.to_vec();
                            all.push(extra);
                            let sub = groebner_with_limits(&all, self.limits)?;
                            let sols = solve(&sub, nv)?;
                            let mut c = case.to_vec();
                            c.push(format!("{} = {}", self.variables[v], r));
                            total += self.analyse(&sub, &sols, &c, reports, warnings)?;
                        }
                        return Ok(total);
                    }
                }
                let text: Vec<String> = cp.iter().map(|c| format_poly(c, self.variables)).collect();
                let mut note = "parameter-dependent characteristic polynomial; case unresolved".to_string();
                if let Some(c) = case_note() {
                    note = format!("{note}, {c}");
                }
                reports.push(SolutionReport { point: None, charpoly: Some(text.join(" ; ")), report: None, note: Some(note) });
                warnings.push("parametric case unresolved".into());
                Ok(0)
            }
        }
    }
}

/// A variable with a univariate generator of degree at least two, together
/// with the real roots of that generator.
fn splitting_variable(gb: &[Poly<FieldScalar>]) -> Result<Option<(usize, Vec<FieldScalar>)>, EmbedError> {
    let mut best: Option<(usize, Vec<FieldScalar>)> = None;
    for g in gb {
        let vars = g.variables();
        if vars.len() != 1 || g.total_degree() < 2 {
            continue;
        }
        let v = vars[0];
        let coeffs = g.to_univariate(v).expect("univariate");
        let roots = match real_roots(&coeffs) {
            Ok(r) => r,
            Err(PolyError::UnsupportedExtension(_)) => continue,
            Err(e) => return Err(e.into()),
        };
        // prefer the largest variable index, the end of the triangular chain
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, roots));
        }
    }
    Ok(best)
}
