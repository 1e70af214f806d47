use crate::error::StructureError;
use crate::exactlin::{apply_kron, axpy, image, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::field::Field;
use crate::findim::Coring;
use crate::report::{Law, Report};

use super::coring::DkCoring;
use super::weak::{split_terms, WeakDkDatum};

/// The image `C̃ ⊂ C ⊗ A` of `c ⊗ a ↦ 1₋₁·c ⊗ 1₀a`, with the mutually
/// inverse maps to and from the balanced tensor `C ⊗_R A`.
#[derive(Debug, Clone)]
pub struct WeakCoringIso<F> {
    /// `c ⊗ a ↦ 1₋₁·c ⊗ 1₀a` on `C ⊗ A`.
    pub projector: Matrix<F>,
    pub image: Subspace<F>,
    /// `C ⊗_R A → C̃`, in coordinates of `image`.
    pub theta: Matrix<F>,
    /// `C̃ → C ⊗_R A`
    pub theta_inv: Matrix<F>,
}

impl<F: Field> WeakCoringIso<F> {
    pub fn dim(&self) -> usize {
        self.image.dim()
    }

    /// `θ` with values as vectors of `C ⊗ A`.
    pub fn theta_ambient(&self) -> Matrix<F> {
        self.image.basis_matrix().mul(&self.theta)
    }
}

/// `a ⊗ x ↦ a₋₁·c ⊗ a₀a'` on `C ⊗ A`, summed over the weak coaction of `a`.
fn left_op<F: Field>(d: &WeakDkDatum<F>, a: usize) -> Matrix<F> {
    let alg = &d.algebra.algebra;
    let na = alg.dim();
    let nc = d.coalgebra.dim();
    let mut out = Matrix::zeros(nc * na, nc * na);
    for (h, x, w) in split_terms(&d.algebra.rho(&unit_vector(na, a)), na) {
        out.add_scaled(&w, &d.coalgebra.action.basis_op(h).kron(&alg.left_mult(&alg.basis(x))));
    }
    out
}

/// Builds `C̃` and `θ`, failing if the projector is not idempotent or does
/// not factor through `C ⊗_R A`.
pub fn build_weak_coring<F: Field>(d: &WeakDkDatum<F>, dk: &DkCoring<F>) -> Result<WeakCoringIso<F>, StructureError> {
    let n = d.coalgebra.dim() * d.algebra.dim();
    let projector = {
        // `1₋₁·c ⊗ 1₀a` is the left action of the unit
        let unit = d.algebra.algebra.unit();
        let mut out = Matrix::zeros(n, n);
        for (i, u) in unit.iter().enumerate() {
            if !u.is_zero() {
                out.add_scaled(u, &left_op(d, i));
            }
        }
        out
    };
    let mut report = Report::new("weak coring");
    let mut law = Law::new("projector.idempotent");
    let squared = projector.mul(&projector);
    for j in 0..projector.cols() {
        law.check(&[j], &squared.column(j), &projector.column(j));
    }
    report.push(law.finish());
    let mut law = Law::new("projector.balanced");
    let through = dk.tensor.descend(&projector, &mut law);
    report.push(law.finish());
    StructureError::from_report(report)?;
    let image = image(&projector);
    let coords = image.coordinate_matrix();
    let theta = coords.mul(&through);
    let cols: Vec<_> = image.basis().iter().map(|v| dk.tensor.project(v)).collect();
    let theta_inv = Matrix::from_columns(dk.dim(), &cols)?;
    Ok(WeakCoringIso { projector, image, theta, theta_inv })
}

/// `(c ⊗ a) ⊗ (c' ⊗ a') ↦ c ⊗ a₋₁·c' ⊗ a₀a'` into `C ⊗ C ⊗ A`.
fn unfold<F: Field>(d: &WeakDkDatum<F>, x: &[F], y: &[F]) -> Vector<F> {
    let na = d.algebra.dim();
    let nc = d.coalgebra.dim();
    let mut out: Vector<F> = zero_vector(nc * nc * na);
    for (c, a, u) in split_terms(x, na) {
        let moved = left_op(d, a).apply(y);
        for (k, v) in moved.iter().enumerate() {
            if !v.is_zero() {
                out[c * nc * na + k].add_mul(&u, v);
            }
        }
    }
    out
}

/// `θ` and its inverse, `A`-bilinearity of `θ`, and, when the coring
/// structure on `C ⊗_R A` is supplied, compatibility with comultiplication
/// `c ⊗ a ↦ c₁ ⊗ c₂ ⊗ a` and counit `c ⊗ a ↦ ε(c)a`.
pub fn check_weak_coring_iso<F: Field>(
    d: &WeakDkDatum<F>,
    dk: &DkCoring<F>,
    iso: &WeakCoringIso<F>,
    coring: Option<&Coring<F>>,
) -> Report {
    let mut report = Report::new("weak coring isomorphism");
    let (n, m) = (dk.dim(), iso.dim());
    let mut law = Law::new("dims");
    law.check::<F>(&[], &[F::from_i64(n as i64)], &[F::from_i64(m as i64)]);
    report.push(law.finish());
    if n != m {
        return report;
    }
    let mut law = Law::new("inverse.left");
    let tt = iso.theta_inv.mul(&iso.theta);
    for j in 0..n {
        law.check(&[j], &tt.column(j), &unit_vector(n, j));
    }
    report.push(law.finish());
    let mut law = Law::new("inverse.right");
    let tt = iso.theta.mul(&iso.theta_inv);
    for j in 0..n {
        law.check(&[j], &tt.column(j), &unit_vector(n, j));
    }
    report.push(law.finish());

    let alg = &d.algebra.algebra;
    let (na, nc) = (alg.dim(), d.coalgebra.dim());
    let amb = iso.theta_ambient();
    let mut left = Law::new("bimodule.left");
    let mut right = Law::new("bimodule.right");
    for a in 0..na {
        let lop = left_op(d, a);
        let rop = Matrix::identity(nc).kron(&alg.right_mult(&alg.basis(a)));
        let l_dk = dk.bimodule.left.basis_op(a);
        let r_dk = dk.bimodule.right.basis_op(a);
        for q in 0..n {
            left.check(&[a, q], &amb.apply(&l_dk.column(q)), &lop.apply(&amb.column(q)));
            right.check(&[a, q], &amb.apply(&r_dk.column(q)), &rop.apply(&amb.column(q)));
        }
    }
    report.push(left.finish());
    report.push(right.finish());

    let Some(coring) = coring else {
        return report;
    };
    let delta_c = &d.coalgebra.coalgebra.comult;
    let id_a = Matrix::identity(na);
    let mut law = Law::new("coring_map.comult");
    for q in 0..n {
        let lifted = coring.delta_lift(&unit_vector(n, q));
        let mut lhs: Vector<F> = zero_vector(nc * nc * na);
        for (q1, q2, w) in split_terms(&lifted, n) {
            axpy(&mut lhs, &w, &unfold(d, &amb.column(q1), &amb.column(q2)));
        }
        law.check(&[q], &lhs, &apply_kron(delta_c, &id_a, &amb.column(q)));
    }
    report.push(law.finish());
    let eps_c = &d.coalgebra.coalgebra.counit;
    let mut law = Law::new("coring_map.counit");
    for q in 0..n {
        let lhs = apply_kron(eps_c, &id_a, &amb.column(q));
        law.check(&[q], &lhs, &coring.counit.column(q));
    }
    report.push(law.finish());
    report
}
