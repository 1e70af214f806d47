use crate::error::StructureError;
use crate::exactlin::{axpy, unit_vector, vec_sub, zero_vector, Matrix, Vector};
use crate::field::Field;
use crate::report::{Law, Report};

use super::bialgebroid::DkDatum;
use super::coring::{build_dk_coring, DkCoring};
use super::weak::split_terms;

/// Both sides of one instance of a law.
struct Equation<F> {
    law: &'static str,
    indices: Vec<usize>,
    lhs: Vector<F>,
    rhs: Vector<F>,
}

fn report_from<F: Field>(subject: &str, laws: &[&'static str], eqs: Vec<Equation<F>>) -> Report {
    let mut report = Report::new(subject);
    let mut open: Vec<Law> = laws.iter().map(|l| Law::new(*l)).collect();
    for eq in eqs {
        let k = laws.iter().position(|l| *l == eq.law).expect("declared law");
        open[k].check(&eq.indices, &eq.lhs, &eq.rhs);
    }
    for law in open {
        report.push(law.finish());
    }
    report
}

fn residual<F: Field>(eqs: Vec<Equation<F>>) -> Vector<F> {
    eqs.into_iter().flat_map(|e| vec_sub(&e.lhs, &e.rhs)).collect()
}

/// Any `x` with `f(x) = 0`, for `f` affine on `F^n`.
fn solve_affine<F: Field>(n: usize, f: impl Fn(&[F]) -> Vector<F>) -> Option<Vector<F>> {
    let zero: Vector<F> = zero_vector(n);
    let base = f(&zero);
    let cols: Vec<_> = (0..n).map(|k| vec_sub(&f(&unit_vector(n, k)), &base)).collect();
    let m = Matrix::from_columns(base.len(), &cols).expect("affine system");
    let minus: Vector<F> = base.iter().map(|v| v.neg()).collect();
    m.solve(&minus)
}

const INDUCTION_LAWS: [&str; 2] = ["normalized", "central"];

fn induction_equations<F: Field>(d: &DkDatum<F>, dk: &DkCoring<F>, e: &[F]) -> Vec<Equation<F>> {
    let mut eqs = vec![Equation {
        law: "normalized",
        indices: vec![],
        lhs: dk.counit.apply(e),
        rhs: d.algebra.algebra.unit().to_vec(),
    }];
    for a in 0..d.algebra.dim() {
        eqs.push(Equation {
            law: "central",
            indices: vec![a],
            lhs: dk.bimodule.left.basis_op(a).apply(e),
            rhs: dk.bimodule.right.basis_op(a).apply(e),
        });
    }
    eqs
}

fn coring_or_report<F: Field>(d: &DkDatum<F>, subject: &str) -> Result<DkCoring<F>, Report> {
    build_dk_coring(d).map_err(|err| {
        let mut report = Report::new(subject);
        let mut law = Law::new("coring");
        law.fail(&[], err.to_string());
        report.push(law.finish());
        report
    })
}

/// Whether `e ∈ C ⊗_R A` (quotient coordinates) satisfies `ε(e) = 1` and
/// `a·e = e·a` for every basis element `a`, certifying that induction
/// `C ⊗_R -` is separable.
pub fn check_induction_separable<F: Field>(d: &DkDatum<F>, e: &[F]) -> Report {
    let subject = "induction separability";
    match coring_or_report(d, subject) {
        Ok(dk) if e.len() == dk.dim() => report_from(subject, &INDUCTION_LAWS, induction_equations(d, &dk, e)),
        Ok(dk) => {
            let mut report = Report::new(subject);
            let mut law = Law::new("shape");
            law.fail(&[], format!("certificate of length {}, expected {}", e.len(), dk.dim()));
            report.push(law.finish());
            report
        }
        Err(report) => report,
    }
}

/// Some certificate for [`check_induction_separable`], if one exists.
pub fn search_induction_certificate<F: Field>(d: &DkDatum<F>) -> Result<Option<Vector<F>>, StructureError> {
    let dk = build_dk_coring(d)?;
    Ok(solve_affine(dk.dim(), |e| residual(induction_equations(d, &dk, e))))
}

const FORGETFUL_LAWS: [&str; 5] = ["bimodule.left", "bimodule.right", "counit", "module", "colinear"];

fn forgetful_equations<F: Field>(d: &DkDatum<F>, dk: &DkCoring<F>, gamma: &Matrix<F>) -> Vec<Equation<F>> {
    let alg = &d.algebra.algebra;
    let coring = &d.coalgebra.coring;
    let cc = &coring.tensor;
    let act = &d.coalgebra.action;
    let (na, nc, nr) = (alg.dim(), coring.dim(), d.bialgebroid.base_dim());
    let s_a = |r: &[F]| d.algebra.source.apply(r);
    let gamma_pair = |x: &[F], y: &[F]| gamma.apply(&cc.project_pair(x, y));
    let mut eqs = Vec::new();

    let left = cc.induced_left(&coring.bimodule.left);
    let right = cc.induced_right(&coring.bimodule.right);
    for r in 0..nr {
        let sr = s_a(&unit_vector(nr, r));
        for q in 0..cc.quot_dim() {
            let g = gamma.column(q);
            eqs.push(Equation {
                law: "bimodule.left",
                indices: vec![r, q],
                lhs: gamma.apply(&left.basis_op(r).column(q)),
                rhs: alg.mul(&sr, &g),
            });
            eqs.push(Equation {
                law: "bimodule.right",
                indices: vec![r, q],
                lhs: gamma.apply(&right.basis_op(r).column(q)),
                rhs: alg.mul(&g, &sr),
            });
        }
    }

    for c in 0..nc {
        eqs.push(Equation {
            law: "counit",
            indices: vec![c],
            lhs: gamma.apply(&coring.delta(&unit_vector(nc, c))),
            rhs: s_a(&coring.epsilon(&unit_vector(nc, c))),
        });
    }

    let bialg = &d.bialgebroid;
    let nh = bialg.dim();
    let expanded: Vec<Vec<(usize, usize, usize, F)>> = (0..na)
        .map(|a| {
            let mut out = Vec::new();
            for (h, a0, w) in split_terms(&d.algebra.rho_lift(&unit_vector(na, a)), na) {
                for (h1, h2, w2) in split_terms(&bialg.coring.delta_lift(&unit_vector(nh, h)), nh) {
                    out.push((h1, h2, a0, w.mul(&w2)));
                }
            }
            out
        })
        .collect();
    for (a, terms) in expanded.iter().enumerate() {
        for c in 0..nc {
            for c2 in 0..nc {
                let mut lhs: Vector<F> = zero_vector(na);
                for (h1, h2, a0, w) in terms {
                    let g = gamma_pair(&act.basis_op(*h1).column(c), &act.basis_op(*h2).column(c2));
                    axpy(&mut lhs, w, &alg.mul(&g, &alg.basis(*a0)));
                }
                eqs.push(Equation {
                    law: "module",
                    indices: vec![a, c, c2],
                    lhs,
                    rhs: alg.mul(&alg.basis(a), &gamma_pair(&unit_vector(nc, c), &unit_vector(nc, c2))),
                });
            }
        }
    }

    let deltas: Vec<_> = (0..nc).map(|c| split_terms(&coring.delta_lift(&unit_vector(nc, c)), nc)).collect();
    for c2 in 0..nc {
        for c in 0..nc {
            let mut lhs: Vector<F> = zero_vector(dk.dim());
            for (x, y, w) in &deltas[c] {
                let g = gamma_pair(&unit_vector(nc, *y), &unit_vector(nc, c2));
                axpy(&mut lhs, w, &dk.tensor.project_pair(&unit_vector(nc, *x), &g));
            }
            let mut rhs: Vector<F> = zero_vector(dk.dim());
            for (x, y, w) in &deltas[c2] {
                let g = gamma_pair(&unit_vector(nc, c), &unit_vector(nc, *x));
                for (h, a0, u) in split_terms(&d.algebra.rho_lift(&g), na) {
                    let moved = act.basis_op(h).column(*y);
                    axpy(&mut rhs, &w.mul(&u), &dk.tensor.project_pair(&moved, &unit_vector(na, a0)));
                }
            }
            eqs.push(Equation { law: "colinear", indices: vec![c, c2], lhs, rhs });
        }
    }
    eqs
}

/// Whether `γ: C ⊗_R C → A` (columns indexed by quotient coordinates) is an
/// `R`-bimodule map with `γ(c₁ ⊗ c₂) = ε(c)·1`,
/// `γ(a₋₂·c ⊗ a₋₁·c') a₀ = a γ(c ⊗ c')` and
/// `c₁ ⊗ γ(c₂ ⊗ c') = γ(c ⊗ c'₁)₋₁·c'₂ ⊗ γ(c ⊗ c'₁)₀`, certifying that the
/// forgetful functor to `A`-modules is separable.
pub fn check_forgetful_separable<F: Field>(d: &DkDatum<F>, gamma: &Matrix<F>) -> Report {
    let subject = "forgetful separability";
    let dk = match coring_or_report(d, subject) {
        Ok(dk) => dk,
        Err(report) => return report,
    };
    let expected = (d.algebra.dim(), d.coalgebra.coring.tensor.quot_dim());
    if gamma.shape() != expected {
        let mut report = Report::new(subject);
        let mut law = Law::new("shape");
        law.fail(&[], format!("γ of shape {:?}, expected {:?}", gamma.shape(), expected));
        report.push(law.finish());
        return report;
    }
    report_from(subject, &FORGETFUL_LAWS, forgetful_equations(d, &dk, gamma))
}

/// Some certificate for [`check_forgetful_separable`], if one exists.
pub fn search_forgetful_certificate<F: Field>(d: &DkDatum<F>) -> Result<Option<Matrix<F>>, StructureError> {
    let dk = build_dk_coring(d)?;
    let (rows, cols) = (d.algebra.dim(), d.coalgebra.coring.tensor.quot_dim());
    let to_matrix = |x: &[F]| {
        let columns: Vec<Vector<F>> = x.chunks(rows.max(1)).map(|c| c.to_vec()).collect();
        Matrix::from_columns(rows, &columns[..cols]).expect("γ shape")
    };
    let found = solve_affine(rows * cols, |x| residual(forgetful_equations(d, &dk, &to_matrix(x))));
    Ok(found.map(|x| to_matrix(&x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::from_weak_hopf;
    use crate::corpus::{cyclic_group_algebra, pair_groupoid_algebra};
    use crate::doikoppinen::{ComoduleAlgebra, ModuleCoalgebra};
    use crate::field::Q;
    use crate::weakhopf::{extract_base, WeakHopf};

    fn regular(h: &WeakHopf<Q>) -> DkDatum<Q> {
        let b = from_weak_hopf(h, &extract_base(h).unwrap()).unwrap();
        DkDatum { algebra: ComoduleAlgebra::regular(&b), coalgebra: ModuleCoalgebra::regular(&b), bialgebroid: b }
    }

    fn trivial(h: &WeakHopf<Q>) -> DkDatum<Q> {
        let b = from_weak_hopf(h, &extract_base(h).unwrap()).unwrap();
        DkDatum { algebra: ComoduleAlgebra::base(&b), coalgebra: ModuleCoalgebra::base(&b), bialgebroid: b }
    }

    #[test]
    fn trivial_datum_certificates() {
        let d = trivial(&pair_groupoid_algebra(2));
        let dk = build_dk_coring(&d).unwrap();
        let one = dk.tensor.project_pair(d.bialgebroid.base.unit(), d.algebra.algebra.unit());
        assert!(check_induction_separable(&d, &one).passed());
        // multiplication R ⊗_R R → R
        let cc = &d.coalgebra.coring.tensor;
        let cols: Vec<_> = (0..cc.quot_dim())
            .map(|q| {
                let (i, j) = cc.pair_of(q);
                d.bialgebroid.base.basis_product(i, j)
            })
            .collect();
        let gamma = Matrix::from_columns(2, &cols).unwrap();
        let r = check_forgetful_separable(&d, &gamma);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn counit_squared_fails_colinearity_on_group_algebra() {
        let h = cyclic_group_algebra::<Q>(2);
        let d = regular(&h);
        let cc = &d.coalgebra.coring.tensor;
        let cols: Vec<_> = (0..cc.quot_dim())
            .map(|q| {
                let (i, j) = cc.pair_of(q);
                let e = h.epsilon(&unit_vector(2, i)).mul(&h.epsilon(&unit_vector(2, j)));
                crate::exactlin::vec_scale(&e, h.algebra.unit())
            })
            .collect();
        let r = check_forgetful_separable(&d, &Matrix::from_columns(2, &cols).unwrap());
        assert_eq!(r.failed_law_names(), vec!["colinear"]);
        assert_eq!(r.law("colinear").unwrap().witness.as_ref().unwrap().indices, vec![1, 0]);
    }

    #[test]
    fn canonical_unit_candidate_on_pair_groupoid() {
        let h = pair_groupoid_algebra::<Q>(2);
        let d = regular(&h);
        let dk = build_dk_coring(&d).unwrap();
        let diag = |i: usize| unit_vector(4, 3 * i);
        let mut e: Vector<Q> = zero_vector(dk.dim());
        for z in 0..2 {
            axpy(&mut e, &Q::one(), &dk.tensor.project_pair(&diag(z), &diag(z)));
        }
        let r = check_induction_separable(&d, &e);
        assert!(r.law("normalized").unwrap().passed());
        assert_eq!(r.law("central").unwrap().witness.as_ref().unwrap().indices, vec![1]);
        let single = dk.tensor.project_pair(&diag(0), &diag(0));
        assert!(!check_induction_separable(&d, &single).law("normalized").unwrap().passed());
    }

    #[test]
    fn search_agrees_with_checker() {
        for d in [regular(&pair_groupoid_algebra::<Q>(2)), trivial(&pair_groupoid_algebra(2))] {
            if let Some(e) = search_induction_certificate(&d).unwrap() {
                assert!(check_induction_separable(&d, &e).passed());
            }
            if let Some(g) = search_forgetful_certificate(&d).unwrap() {
                assert!(check_forgetful_separable(&d, &g).passed());
            }
        }
        let t = trivial(&pair_groupoid_algebra::<Q>(2));
        assert!(search_induction_certificate(&t).unwrap().is_some());
        assert!(search_forgetful_certificate(&t).unwrap().is_some());
    }
}
