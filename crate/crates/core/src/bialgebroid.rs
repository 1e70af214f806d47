//! Bialgebroids over a finite-dimensional base: R-rings, R^e-rings, the
//! bialgebroid axioms, the bialgebroid of a weak Hopf algebra and the
//! converse passage back to a weak bialgebra.

use crate::error::StructureError;
use crate::exactlin::{axpy, tensor_vec, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::field::Field;
use crate::findim::{
    check_algebra, check_algebra_map, check_coring, takeuchi_subspace, Action, BalancedTensor, Bimodule, Coring,
    FinAlgebra, FinCoalgebra,
};
use crate::report::{Law, Report};
use crate::weakhopf::{check_frobenius_pair, section_sigma, BaseAlgebra, WeakHopf};

/// An algebra `U` with a unital algebra map `R → U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RRing<F> {
    pub base: FinAlgebra<F>,
    pub total: FinAlgebra<F>,
    /// `dim U x dim R`
    pub map: Matrix<F>,
}

impl<F: Field> RRing<F> {
    pub fn new(base: FinAlgebra<F>, total: FinAlgebra<F>, map: Matrix<F>) -> Result<Self, StructureError> {
        if map.shape() != (total.dim(), base.dim()) {
            return Err(StructureError::Shape(format!(
                "R-ring map {:?}, expected {:?}",
                map.shape(),
                (total.dim(), base.dim())
            )));
        }
        Ok(RRing { base, total, map })
    }

    /// `r·u·r' = i(r) u i(r')`
    pub fn bimodule(&self) -> Bimodule<F> {
        let left = Action::left_regular(&self.total).pullback(&self.map);
        let right = Action::right_regular(&self.total).pullback(&self.map);
        Bimodule { left, right }
    }
}

pub fn check_r_ring<F: Field>(r: &RRing<F>) -> Report {
    let mut report = Report::new("R-ring");
    report.absorb("base", check_algebra(&r.base));
    report.absorb("total", check_algebra(&r.total));
    report.absorb("map", check_algebra_map(&r.base, &r.total, &r.map, false));
    report.absorb("bimodule", crate::findim::check_bimodule(&r.base, &r.bimodule()));
    report
}

/// An R-bialgebroid: `H` with source and target maps from `R`, and an
/// R-coring structure on the bimodule `r·h·r' = s(r)t(r')h`.
#[derive(Debug, Clone)]
pub struct Bialgebroid<F> {
    pub base: FinAlgebra<F>,
    pub total: FinAlgebra<F>,
    /// `dim H x dim R`
    pub source: Matrix<F>,
    /// `dim H x dim R`, an anti-homomorphism
    pub target: Matrix<F>,
    pub coring: Coring<F>,
    /// `H ×_R H` inside the quotient coordinates of `coring.tensor`.
    pub takeuchi: Subspace<F>,
}

impl<F: Field> Bialgebroid<F> {
    /// `comult` is given in quotient coordinates of `H ⊗_R H`.
    pub fn new(
        base: FinAlgebra<F>,
        total: FinAlgebra<F>,
        source: Matrix<F>,
        target: Matrix<F>,
        comult: Matrix<F>,
        counit: Matrix<F>,
    ) -> Result<Self, StructureError> {
        let bimodule = Self::structure_bimodule(&base, &total, &source, &target)?;
        let tensor = BalancedTensor::new(&bimodule.right, &bimodule.left)?;
        let coring = Coring::with_tensor(base.clone(), bimodule, tensor, comult, counit)?;
        Self::assemble(base, total, source, target, coring)
    }

    /// As [`Bialgebroid::new`] with `comult` given on representatives in `H ⊗ H`.
    pub fn from_ambient(
        base: FinAlgebra<F>,
        total: FinAlgebra<F>,
        source: Matrix<F>,
        target: Matrix<F>,
        comult: &Matrix<F>,
        counit: Matrix<F>,
    ) -> Result<Self, StructureError> {
        let bimodule = Self::structure_bimodule(&base, &total, &source, &target)?;
        let coring = Coring::from_ambient(base.clone(), bimodule, comult, counit)?;
        Self::assemble(base, total, source, target, coring)
    }

    fn structure_bimodule(
        base: &FinAlgebra<F>,
        total: &FinAlgebra<F>,
        source: &Matrix<F>,
        target: &Matrix<F>,
    ) -> Result<Bimodule<F>, StructureError> {
        let shape = (total.dim(), base.dim());
        if source.shape() != shape || target.shape() != shape {
            return Err(StructureError::Shape(format!(
                "source {:?} and target {:?}, expected {shape:?}",
                source.shape(),
                target.shape()
            )));
        }
        let left = Action::left_regular(total);
        Ok(Bimodule { left: left.pullback(source), right: left.pullback(target) })
    }

    fn assemble(
        base: FinAlgebra<F>,
        total: FinAlgebra<F>,
        source: Matrix<F>,
        target: Matrix<F>,
        coring: Coring<F>,
    ) -> Result<Self, StructureError> {
        let (first, second) = takeuchi_ops(&total, &target, &source);
        let takeuchi = takeuchi_subspace(&coring.tensor, &first, &second)?;
        Ok(Bialgebroid { base, total, source, target, coring, takeuchi })
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn tensor(&self) -> &BalancedTensor<F> {
        &self.coring.tensor
    }

    pub fn s(&self, r: &[F]) -> Vector<F> {
        self.source.apply(r)
    }

    pub fn t(&self, r: &[F]) -> Vector<F> {
        self.target.apply(r)
    }

    pub fn delta(&self, h: &[F]) -> Vector<F> {
        self.coring.delta(h)
    }

    pub fn epsilon(&self, h: &[F]) -> Vector<F> {
        self.coring.epsilon(h)
    }

    /// Right action of `R` on `H`, i.e. left multiplication by target images.
    pub fn right_action(&self) -> &Action<F> {
        &self.coring.bimodule.right
    }

    pub fn left_action(&self) -> &Action<F> {
        &self.coring.bimodule.left
    }

    /// `h ▷ a = ε(h s(a))`, checked against `ε(h t(a))`.
    pub fn triangle_action(&self, h: &[F], a: &[F]) -> Result<Vector<F>, StructureError> {
        let via_s = self.epsilon(&self.total.mul(h, &self.s(a)));
        let via_t = self.epsilon(&self.total.mul(h, &self.t(a)));
        if via_s != via_t {
            return Err(StructureError::Closure(format!("ε(h s(a)) = {via_s:?} but ε(h t(a)) = {via_t:?}")));
        }
        Ok(via_s)
    }

    /// `dim R x dim R` matrix of `a ↦ h ▷ a`, built from the source form.
    pub fn triangle_matrix(&self, h: &[F]) -> Matrix<F> {
        let d = self.base_dim();
        let cols: Vec<_> = (0..d).map(|k| self.epsilon(&self.total.mul(h, &self.source.column(k)))).collect();
        Matrix::from_columns(d, &cols).expect("square")
    }

    /// Left action of `H` on `R` by `▷`.
    pub fn triangle_module(&self) -> Action<F> {
        let ops = (0..self.dim()).map(|i| self.triangle_matrix(&unit_vector(self.dim(), i))).collect();
        Action::new(self.base_dim(), ops).expect("triangle action shape")
    }

    /// `1_H ⊗_R 1_H` in quotient coordinates.
    pub fn unit_tensor(&self) -> Vector<F> {
        self.tensor().project_pair(self.total.unit(), self.total.unit())
    }
}

/// Right multiplications by target images on the first leg and by source
/// images (of the second leg's R-ring) on the second leg.
pub fn takeuchi_ops<F: Field>(
    total: &FinAlgebra<F>,
    target: &Matrix<F>,
    second_source: &Matrix<F>,
) -> (Vec<Matrix<F>>, Vec<Matrix<F>>) {
    takeuchi_ops_for(total, target, total, second_source)
}

pub fn takeuchi_ops_for<F: Field>(
    total: &FinAlgebra<F>,
    target: &Matrix<F>,
    second: &FinAlgebra<F>,
    second_source: &Matrix<F>,
) -> (Vec<Matrix<F>>, Vec<Matrix<F>>) {
    let first = target.columns().iter().map(|t| total.right_mult(t)).collect();
    let second = second_source.columns().iter().map(|s| second.right_mult(s)).collect();
    (first, second)
}

/// Source algebra map, target anti-map, commuting images, the coring
/// laws, Takeuchi membership and multiplicativity of the comultiplication,
/// unitality of both structure maps, and the two counit identities
/// `ε(gh) = ε(g s(ε h)) = ε(g t(ε h))`.
pub fn check_bialgebroid<F: Field>(b: &Bialgebroid<F>) -> Report {
    let mut report = Report::new("bialgebroid");
    report.absorb("total", check_algebra(&b.total));
    report.absorb("source", check_algebra_map(&b.base, &b.total, &b.source, false));
    report.absorb("target", check_algebra_map(&b.base, &b.total, &b.target, true));
    let (n, d) = (b.dim(), b.base_dim());
    let mut commute = Law::new("source_target_commute");
    for i in 0..d {
        for j in 0..d {
            let (s, t) = (b.source.column(i), b.target.column(j));
            commute.check(&[i, j], &b.total.mul(&s, &t), &b.total.mul(&t, &s));
        }
    }
    report.push(commute.finish());
    report.absorb("coring", check_coring(&b.coring));

    let deltas = b.coring.comult.columns();
    let mut member = Law::new("comult.takeuchi");
    for (i, dv) in deltas.iter().enumerate() {
        member.require(&[i], b.takeuchi.contains(dv), "Δ leaves H ×_R H");
    }
    report.push(member.finish());
    let mut mult = Law::new("comult.multiplicative");
    for i in 0..n {
        for j in 0..n {
            let lhs = b.delta(&b.total.basis_product(i, j));
            let rhs = b.tensor().product(&b.total, &b.total, &deltas[i], &deltas[j]);
            mult.check(&[i, j], &lhs, &rhs);
        }
    }
    report.push(mult.finish());
    let mut dunit = Law::new("comult.unital");
    dunit.check(&[], &b.delta(b.total.unit()), &b.unit_tensor());
    report.push(dunit.finish());
    let mut eunit = Law::new("counit.unital");
    eunit.check(&[], &b.epsilon(b.total.unit()), b.base.unit());
    report.push(eunit.finish());

    let mut via_s = Law::new("counit.source_absorption");
    let mut via_t = Law::new("counit.target_absorption");
    let eps: Vec<_> = b.coring.counit.columns();
    for g in 0..n {
        let gv = unit_vector(n, g);
        for h in 0..n {
            let lhs = b.epsilon(&b.total.basis_product(g, h));
            via_s.check(&[g, h], &lhs, &b.epsilon(&b.total.mul(&gv, &b.s(&eps[h]))));
            via_t.check(&[g, h], &lhs, &b.epsilon(&b.total.mul(&gv, &b.t(&eps[h]))));
        }
    }
    report.push(via_s.finish());
    report.push(via_t.finish());
    report
}

/// The bialgebroid of a weak Hopf algebra over `R = Im Π^L`: source the
/// inclusion, target `S⁻¹` on `R`, `Δ` projected to `H ⊗_R H`, counit `Π^L`.
pub fn from_weak_hopf<F: Field>(h: &WeakHopf<F>, base: &BaseAlgebra<F>) -> Result<Bialgebroid<F>, StructureError> {
    let source = base.inclusion.clone();
    let target = h.antipode_inv.mul(&base.inclusion);
    let counit = base.coordinate_matrix().mul(&h.pi_left_matrix());
    let b = Bialgebroid::from_ambient(
        base.algebra.clone(),
        h.algebra.clone(),
        source,
        target,
        &h.coalgebra.comult,
        counit,
    )?;
    let mut report = check_bialgebroid(&b);
    let mut closed = Law::new("target.closed_form");
    for k in 0..base.dim() {
        let r = base.inclusion.column(k);
        closed.check(&[k], &b.target.column(k), &h.target_formula(&r));
    }
    report.push(closed.finish());
    StructureError::from_report(report)?;
    Ok(b)
}

/// Weak bialgebra structure on `H` from a bialgebroid over a base with a
/// separability idempotent `e` and Frobenius functional `phi`:
/// `Δ(h) = h₁·e¹ ⊗ e²·h₂`, `ε = phi ∘ ε_H`.
pub fn to_weak_bialgebra<F: Field>(
    b: &Bialgebroid<F>,
    e: &[F],
    phi: &Matrix<F>,
) -> Result<(FinAlgebra<F>, FinCoalgebra<F>), StructureError> {
    StructureError::from_report(check_frobenius_pair(&b.base, e, phi))?;
    let d = b.base_dim();
    let terms: Vec<(usize, usize, F)> =
        e.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(ab, c)| (ab / d, ab % d, c.clone())).collect();
    let sigma = section_sigma(&terms, b.right_action(), b.left_action(), b.tensor())?;
    let comult = sigma.mul(&b.coring.comult);
    let counit = phi.mul(&b.coring.counit);
    Ok((b.total.clone(), FinCoalgebra::new(comult, counit)?))
}

/// `s(h₁ ▷ r) h₂ = h s(r)` on basis pairs, evaluated on representatives of `Δ(h)`.
pub fn check_triangle_source_identity<F: Field>(b: &Bialgebroid<F>) -> Report {
    let mut report = Report::new("triangle action identity");
    let mut law = Law::new("source_of_triangle");
    let n = b.dim();
    let t = b.tensor();
    let m = t.right_dim();
    for h in 0..n {
        let lifted = b.coring.delta_lift(&unit_vector(n, h));
        for r in 0..b.base_dim() {
            let rv = unit_vector(b.base_dim(), r);
            let mut lhs: Vector<F> = zero_vector(n);
            for (ij, c) in lifted.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, j) = (ij / m, ij % m);
                let tri = b.triangle_matrix(&unit_vector(n, i)).apply(&rv);
                axpy(&mut lhs, c, &b.total.mul(&b.s(&tri), &unit_vector(n, j)));
            }
            law.check(&[h, r], &lhs, &b.total.mul(&unit_vector(n, h), &b.source.column(r)));
        }
    }
    report.push(law.finish());
    report
}

/// `R ⊗ R^op` over `R`, with `s(a) = a ⊗ 1`, `t(b) = 1 ⊗ b`,
/// `Δ(r ⊗ r') = (r ⊗ 1) ⊗_R (1 ⊗ r')` and `ε(r ⊗ r') = r r'`.
pub fn re_bialgebroid<F: Field>(r: &FinAlgebra<F>) -> Result<Bialgebroid<F>, StructureError> {
    let d = r.dim();
    let total = r.tensor(&r.opposite());
    let one = r.unit();
    let source_cols: Vec<_> = (0..d).map(|a| tensor_vec(&r.basis(a), one)).collect();
    let target_cols: Vec<_> = (0..d).map(|a| tensor_vec(one, &r.basis(a))).collect();
    let source = Matrix::from_columns(d * d, &source_cols)?;
    let target = Matrix::from_columns(d * d, &target_cols)?;
    let comult_cols: Vec<_> = (0..d * d).map(|ab| tensor_vec(&source_cols[ab / d], &target_cols[ab % d])).collect();
    let comult = Matrix::from_columns(d * d * d * d, &comult_cols)?;
    let counit_cols: Vec<_> = (0..d * d).map(|ab| r.basis_product(ab / d, ab % d)).collect();
    let counit = Matrix::from_columns(d, &counit_cols)?;
    Bialgebroid::from_ambient(r.clone(), total, source, target, &comult, counit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::weakhopf::extract_base;

    fn p2() -> WeakHopf<Q> {
        let s = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        WeakHopf::new(FinAlgebra::matrix_units(2), FinCoalgebra::grouplike(4), s.clone(), Some(s)).unwrap()
    }

    #[test]
    fn re_bialgebroid_over_two_points() {
        let b = re_bialgebroid(&FinAlgebra::<Q>::diagonal(2)).unwrap();
        assert_eq!(b.dim(), 4);
        assert_eq!(b.tensor().quot_dim(), 8);
        let r = check_bialgebroid(&b);
        assert!(r.passed(), "{r}");
        assert!(check_triangle_source_identity(&b).passed());
    }

    #[test]
    fn re_bialgebroid_over_noncommutative_base() {
        let b = re_bialgebroid(&FinAlgebra::<Q>::upper_triangular_2()).unwrap();
        assert_eq!(b.dim(), 9);
        let r = check_bialgebroid(&b);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn swapped_counit_breaks_absorption() {
        let mut b = re_bialgebroid(&FinAlgebra::<Q>::diagonal(2)).unwrap();
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        b.coring.counit = swap.mul(&b.coring.counit);
        let r = check_bialgebroid(&b);
        let law = r.law("counit.source_absorption").unwrap();
        assert!(!law.passed());
        // oracle: first (g, h) with ε'(gh) ≠ ε'(g s(ε' h)), scanning directly
        let eps = |v: &[Q]| b.coring.counit.apply(v);
        let mut first = None;
        'outer: for g in 0..4 {
            for h in 0..4 {
                let lhs = eps(&b.total.basis_product(g, h));
                let rhs = eps(&b.total.mul(&unit_vector(4, g), &b.s(&eps(&unit_vector(4, h)))));
                if lhs != rhs {
                    first = Some(vec![g, h]);
                    break 'outer;
                }
            }
        }
        assert_eq!(law.witness.as_ref().unwrap().indices, first.unwrap());
    }

    #[test]
    fn pair_groupoid_bialgebroid() {
        let h = p2();
        let base = extract_base(&h).unwrap();
        let b = from_weak_hopf(&h, &base).unwrap();
        assert_eq!(b.tensor().quot_dim(), 8);
        assert_eq!(b.source, b.target);
        // ε̃(e12) = e11 in R-coordinates
        assert_eq!(b.epsilon(&unit_vector(4, 1)), vec![Q::one(), Q::zero()]);
        assert_eq!(b.triangle_action(&unit_vector(4, 1), &[Q::zero(), Q::one()]).unwrap(), vec![Q::one(), Q::zero()]);
        assert_eq!(b.triangle_action(h.unit(), &[Q::from(3), Q::from(5)]).unwrap(), vec![Q::from(3), Q::from(5)]);
        assert!(check_triangle_source_identity(&b).passed());
    }

    #[test]
    fn weak_bialgebra_round_trip() {
        let h = p2();
        let base = extract_base(&h).unwrap();
        let b = from_weak_hopf(&h, &base).unwrap();
        let (_, coalg) = to_weak_bialgebra(&b, &base.idempotent, &base.frobenius).unwrap();
        assert_eq!(coalg, h.coalgebra);
    }

    #[test]
    fn re_bialgebroid_gives_weak_bialgebra() {
        let r = FinAlgebra::<Q>::diagonal(2);
        let b = re_bialgebroid(&r).unwrap();
        let e = vec![Q::one(), Q::zero(), Q::zero(), Q::one()];
        let phi = Matrix::from_i64(&[&[1, 1]]);
        let (alg, coalg) = to_weak_bialgebra(&b, &e, &phi).unwrap();
        let rep = crate::weakhopf::check_weak_bialgebra(&alg, &coalg);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn triangle_on_re() {
        // (r ⊗ r') ▷ a = r a r'
        let r = FinAlgebra::<Q>::upper_triangular_2();
        let b = re_bialgebroid(&r).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for a in 0..3 {
                    let h = unit_vector(9, i * 3 + j);
                    let want = r.mul(&r.basis_product(i, a), &r.basis(j));
                    assert_eq!(b.triangle_action(&h, &r.basis(a)).unwrap(), want);
                }
            }
        }
    }
}
