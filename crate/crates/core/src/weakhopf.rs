//! Weak bialgebras and weak Hopf algebras, the counital maps onto the
//! target and source subalgebras, and the separable Frobenius base.

use crate::error::StructureError;
use crate::exactlin::{apply_kron, axpy, image, tensor_vec, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::field::Field;
use crate::findim::{check_algebra, check_coalgebra, Action, BalancedTensor, FinAlgebra, FinCoalgebra};
use crate::report::{Law, Report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakHopf<F> {
    pub algebra: FinAlgebra<F>,
    pub coalgebra: FinCoalgebra<F>,
    pub antipode: Matrix<F>,
    pub antipode_inv: Matrix<F>,
}

impl<F: Field> WeakHopf<F> {
    /// Without an explicit inverse the antipode is inverted exactly.
    pub fn new(
        algebra: FinAlgebra<F>,
        coalgebra: FinCoalgebra<F>,
        antipode: Matrix<F>,
        antipode_inv: Option<Matrix<F>>,
    ) -> Result<Self, StructureError> {
        let n = algebra.dim();
        if coalgebra.dim() != n || antipode.shape() != (n, n) {
            return Err(StructureError::Shape(format!(
                "algebra dim {n}, coalgebra dim {}, antipode {:?}",
                coalgebra.dim(),
                antipode.shape()
            )));
        }
        let antipode_inv = match antipode_inv {
            Some(m) if m.shape() == (n, n) => m,
            Some(m) => return Err(StructureError::Shape(format!("inverse antipode {:?}", m.shape()))),
            None => antipode.inverse()?,
        };
        Ok(WeakHopf { algebra, coalgebra, antipode, antipode_inv })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn delta(&self, v: &[F]) -> Vector<F> {
        self.coalgebra.delta(v)
    }

    pub fn epsilon(&self, v: &[F]) -> F {
        self.coalgebra.epsilon(v)
    }

    pub fn unit(&self) -> &[F] {
        self.algebra.unit()
    }

    /// `Δ(1)`
    pub fn unit_delta(&self) -> Vector<F> {
        self.delta(self.unit())
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vector<F> {
        self.algebra.mul(a, b)
    }

    /// `Π^L(g) = ε(1₁g)1₂`
    pub fn pi_left(&self, g: &[F]) -> Vector<F> {
        let n = self.dim();
        let mut out: Vector<F> = zero_vector(n);
        for (ab, d) in self.unit_delta().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            let e = self.epsilon(&self.mul(&unit_vector(n, a), g));
            out[b].add_mul(d, &e);
        }
        out
    }

    /// `Π^R(g) = ε(g1₂)1₁`
    pub fn pi_right(&self, g: &[F]) -> Vector<F> {
        let n = self.dim();
        let mut out: Vector<F> = zero_vector(n);
        for (ab, d) in self.unit_delta().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            let e = self.epsilon(&self.mul(g, &unit_vector(n, b)));
            out[a].add_mul(d, &e);
        }
        out
    }

    pub fn pi_maps(&self, g: &[F]) -> (Vector<F>, Vector<F>) {
        (self.pi_left(g), self.pi_right(g))
    }

    pub fn pi_left_matrix(&self) -> Matrix<F> {
        self.map_matrix(|g| self.pi_left(g))
    }

    pub fn pi_right_matrix(&self) -> Matrix<F> {
        self.map_matrix(|g| self.pi_right(g))
    }

    /// `ε(1₂g)1₁`, the closed form of the target map on `Im Π^L`.
    pub fn target_formula(&self, g: &[F]) -> Vector<F> {
        let n = self.dim();
        let mut out: Vector<F> = zero_vector(n);
        for (ab, d) in self.unit_delta().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            let e = self.epsilon(&self.mul(&unit_vector(n, b), g));
            out[a].add_mul(d, &e);
        }
        out
    }

    fn map_matrix(&self, f: impl Fn(&[F]) -> Vector<F>) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<_> = (0..n).map(|i| f(&unit_vector(n, i))).collect();
        Matrix::from_columns(n, &cols).expect("square")
    }
}

/// Axioms of a weak bialgebra: algebra and coalgebra laws, multiplicative
/// comultiplication, weak multiplicativity of the counit and weak
/// comultiplicativity of the unit.
pub fn check_weak_bialgebra<F: Field>(alg: &FinAlgebra<F>, coalg: &FinCoalgebra<F>) -> Report {
    let mut report = Report::new("weak bialgebra");
    report.absorb("algebra", check_algebra(alg));
    report.absorb("coalgebra", check_coalgebra(coalg));
    let n = alg.dim();
    if coalg.dim() != n {
        let mut law = Law::new("dimensions");
        law.fail(&[alg.dim(), coalg.dim()], "algebra and coalgebra dimensions differ");
        report.push(law.finish());
        return report;
    }
    let deltas = coalg.comult.columns();
    let mut mult = Law::new("comult.multiplicative");
    for i in 0..n {
        for j in 0..n {
            let lhs = coalg.delta(&alg.basis_product(i, j));
            let rhs = alg.tensor_mul(alg, &deltas[i], &deltas[j]);
            mult.check(&[i, j], &lhs, &rhs);
        }
    }
    report.push(mult.finish());

    // pairing[a][b] = ε(b_a b_b)
    let pairing: Vec<Vec<F>> =
        (0..n).map(|a| (0..n).map(|b| coalg.epsilon(&alg.basis_product(a, b))).collect()).collect();
    let mut first = Law::new("counit.weak_multiplicative.first");
    let mut second = Law::new("counit.weak_multiplicative.second");
    for x in 0..n {
        for y in 0..n {
            let xy = alg.basis_product(x, y);
            for z in 0..n {
                let mut whole = F::zero();
                for (k, c) in xy.iter().enumerate() {
                    whole.add_mul(c, &pairing[k][z]);
                }
                let mut f1 = F::zero();
                let mut f2 = F::zero();
                for (ab, d) in deltas[y].iter().enumerate() {
                    if d.is_zero() {
                        continue;
                    }
                    let (a, b) = (ab / n, ab % n);
                    f1.add_mul(d, &pairing[x][a].mul(&pairing[b][z]));
                    f2.add_mul(d, &pairing[x][b].mul(&pairing[a][z]));
                }
                let w = std::slice::from_ref(&whole);
                first.check(&[x, y, z], w, std::slice::from_ref(&f1));
                second.check(&[x, y, z], w, std::slice::from_ref(&f2));
            }
        }
    }
    report.push(first.finish());
    report.push(second.finish());

    let id = Matrix::identity(n);
    let d1 = coalg.delta(alg.unit());
    let lhs = apply_kron(&coalg.comult, &id, &d1);
    let d1_1 = tensor_vec(&d1, alg.unit());
    let one_d1 = tensor_vec(alg.unit(), &d1);
    let mut u1 = Law::new("unit.weak_comultiplicative.first");
    u1.check(&[], &lhs, &alg.tensor_power_mul(3, &d1_1, &one_d1));
    report.push(u1.finish());
    let mut u2 = Law::new("unit.weak_comultiplicative.second");
    u2.check(&[], &lhs, &alg.tensor_power_mul(3, &one_d1, &d1_1));
    report.push(u2.finish());
    report
}

/// Weak bialgebra laws, the three antipode laws and invertibility of the antipode.
pub fn check_weak_hopf<F: Field>(h: &WeakHopf<F>) -> Report {
    let mut report = check_weak_bialgebra(&h.algebra, &h.coalgebra);
    report.subject = "weak Hopf algebra".into();
    let n = h.dim();
    let s = &h.antipode;
    let id = Matrix::identity(n);
    let mult = h.algebra.mult_matrix();
    let mut left = Law::new("antipode.left");
    let mut right = Law::new("antipode.right");
    let mut sandwich = Law::new("antipode.sandwich");
    for i in 0..n {
        let g = unit_vector(n, i);
        let d = h.delta(&g);
        left.check(&[i], &mult.apply(&apply_kron(&id, s, &d)), &h.pi_left(&g));
        right.check(&[i], &mult.apply(&apply_kron(s, &id, &d)), &h.pi_right(&g));
        // S(h1) h2 S(h3) from (Δ ⊗ id)Δ(h)
        let d3 = apply_kron(&h.coalgebra.comult, &id, &d);
        let mut acc: Vector<F> = zero_vector(n);
        for (abc, c) in d3.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b, cc) = (abc / (n * n), (abc / n) % n, abc % n);
            let t = h.mul(&h.mul(&s.column(a), &unit_vector(n, b)), &s.column(cc));
            axpy(&mut acc, c, &t);
        }
        sandwich.check(&[i], &acc, &s.column(i));
    }
    report.push(left.finish());
    report.push(right.finish());
    report.push(sandwich.finish());
    let mut inv = Law::new("antipode.inverse");
    if h.antipode_inv.shape() == (n, n) {
        inv.check(&[0], h.antipode_inv.mul(s).entries(), id.entries());
        inv.check(&[1], s.mul(&h.antipode_inv).entries(), id.entries());
    } else {
        inv.fail(&[], "inverse antipode has the wrong shape");
    }
    report.push(inv.finish());
    report
}

/// `R = Im Π^L` with its structure constants in the echelon basis, the
/// separability idempotent `S(1₁) ⊗ 1₂` and the Frobenius functional `ε|_R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseAlgebra<F> {
    pub subspace: Subspace<F>,
    pub algebra: FinAlgebra<F>,
    /// `dim H x dim R`
    pub inclusion: Matrix<F>,
    /// `R ⊗ R` coordinates `(a, b) ↦ a * dim R + b`.
    pub idempotent: Vector<F>,
    /// `1 x dim R`
    pub frobenius: Matrix<F>,
}

impl<F: Field> BaseAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// R-coordinates of an element of `H` lying in `R`.
    pub fn coordinates(&self, h: &[F]) -> Option<Vector<F>> {
        self.subspace.coordinates(h)
    }

    /// `dim R x dim H`, reading coordinates off the echelon pivots.
    pub fn coordinate_matrix(&self) -> Matrix<F> {
        self.subspace.coordinate_matrix()
    }

    pub fn include(&self, r: &[F]) -> Vector<F> {
        self.inclusion.apply(r)
    }

    /// `(e_ab)` as a matrix indexed by both tensor legs.
    pub fn idempotent_terms(&self) -> Vec<(usize, usize, F)> {
        let d = self.dim();
        self.idempotent
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(ab, c)| (ab / d, ab % d, c.clone()))
            .collect()
    }
}

/// Computes `R = Im Π^L` and verifies it is a separable Frobenius subalgebra.
pub fn extract_base<F: Field>(h: &WeakHopf<F>) -> Result<BaseAlgebra<F>, StructureError> {
    let n = h.dim();
    let subspace = image(&h.pi_left_matrix());
    let d = subspace.dim();
    let basis = subspace.basis().to_vec();
    let mut products = Vec::with_capacity(d * d);
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let xy = h.mul(x, y);
            let c = subspace.coordinates(&xy).ok_or_else(|| {
                StructureError::Closure(format!("product of base elements {i} and {j} leaves Im Π^L"))
            })?;
            products.push(c);
        }
    }
    let unit =
        subspace.coordinates(h.unit()).ok_or_else(|| StructureError::Closure("the unit is not in Im Π^L".into()))?;
    let names = basis
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let nz: Vec<usize> = (0..n).filter(|&k| !v[k].is_zero()).collect();
            match nz.as_slice() {
                [k] if v[*k].is_one() => h.algebra.basis_names()[*k].clone(),
                _ => format!("r{}", i + 1),
            }
        })
        .collect();
    let algebra = FinAlgebra::new(names, products, unit)?;
    let inclusion = subspace.basis_matrix();

    let e_h = apply_kron(&h.antipode, &Matrix::identity(n), &h.unit_delta());
    let pivots = subspace.pivots();
    let mut idempotent: Vector<F> = zero_vector(d * d);
    for a in 0..d {
        for b in 0..d {
            idempotent[a * d + b] = e_h[pivots[a] * n + pivots[b]].clone();
        }
    }
    let rebuilt = apply_kron(&inclusion, &inclusion, &idempotent);
    if rebuilt != e_h {
        return Err(StructureError::Closure("S(1₁) ⊗ 1₂ does not lie in R ⊗ R".into()));
    }
    let frobenius = h.coalgebra.counit.mul(&inclusion);
    let base = BaseAlgebra { subspace, algebra, inclusion, idempotent, frobenius };

    let mut report = Report::new("separable Frobenius base");
    let mut sep = Law::new("separability");
    let coords = base.coordinate_matrix();
    for g in 0..n {
        let r = coords.apply(&h.pi_left(&unit_vector(n, g)));
        let one = base.algebra.unit();
        let lhs = base.algebra.tensor_mul(&base.algebra, &tensor_vec(&r, one), &base.idempotent);
        let rhs = base.algebra.tensor_mul(&base.algebra, &base.idempotent, &tensor_vec(one, &r));
        sep.check(&[g], &lhs, &rhs);
    }
    report.push(sep.finish());
    report.absorb("pair", check_frobenius_pair(&base.algebra, &base.idempotent, &base.frobenius));
    StructureError::from_report(report)?;
    Ok(base)
}

/// `e¹e² = 1`, `r e = e r`, and `φ(e¹)e² = e¹φ(e²) = 1`.
pub fn check_frobenius_pair<F: Field>(r: &FinAlgebra<F>, e: &[F], phi: &Matrix<F>) -> Report {
    let mut report = Report::new("Frobenius pair");
    let d = r.dim();
    let mut shape = Law::new("shape");
    if e.len() != d * d || phi.shape() != (1, d) {
        shape.fail(&[e.len(), phi.cols()], "idempotent or functional has the wrong size");
        report.push(shape.finish());
        return report;
    }
    report.push(shape.finish());
    let one = r.unit().to_vec();
    let mut comm = Law::new("idempotent.central");
    for k in 0..d {
        let rk = r.basis(k);
        let lhs = r.tensor_mul(r, &tensor_vec(&rk, &one), e);
        let rhs = r.tensor_mul(r, e, &tensor_vec(&one, &rk));
        comm.check(&[k], &lhs, &rhs);
    }
    report.push(comm.finish());
    let mut unit = Law::new("idempotent.multiplies_to_unit");
    unit.check(&[], &r.mult_matrix().apply(e), &one);
    report.push(unit.finish());
    let id = Matrix::identity(d);
    let mut fl = Law::new("frobenius.left");
    fl.check(&[], &apply_kron(phi, &id, e), &one);
    report.push(fl.finish());
    let mut fr = Law::new("frobenius.right");
    fr.check(&[], &apply_kron(&id, phi, e), &one);
    report.push(fr.finish());
    report
}

/// `σ(m ⊗_R n) = m·e¹ ⊗ e²·n` as a `dim(M ⊗ N) x dim(M ⊗_R N)` matrix,
/// verified to be a section of the projection.
pub fn section_sigma<F: Field>(
    idempotent: &[(usize, usize, F)],
    m_right: &Action<F>,
    n_left: &Action<F>,
    tensor: &BalancedTensor<F>,
) -> Result<Matrix<F>, StructureError> {
    let cols: Vec<_> = (0..tensor.quot_dim())
        .map(|q| {
            let (i, j) = tensor.pair_of(q);
            sigma_pure(idempotent, m_right, n_left, i, j)
        })
        .collect();
    let sigma = Matrix::from_columns(tensor.ambient_dim(), &cols).expect("section shape");
    let mut law = Law::new("projection_after_section");
    for (q, c) in cols.iter().enumerate() {
        law.check(&[q], &tensor.project(c), &unit_vector(tensor.quot_dim(), q));
    }
    let mut report = Report::new("separability section");
    report.push(law.finish());
    StructureError::from_report(report)?;
    Ok(sigma)
}

/// `b_i·e¹ ⊗ e²·b_j` on basis vectors of the ambient tensor.
pub fn sigma_pure<F: Field>(
    idempotent: &[(usize, usize, F)],
    m_right: &Action<F>,
    n_left: &Action<F>,
    i: usize,
    j: usize,
) -> Vector<F> {
    let mut out: Vector<F> = zero_vector(m_right.dim() * n_left.dim());
    for (a, b, c) in idempotent {
        let x = m_right.basis_op(*a).column(i);
        let y = n_left.basis_op(*b).column(j);
        axpy(&mut out, c, &tensor_vec(&x, &y));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    /// kP₂ built by hand: matrix units, grouplike comultiplication,
    /// transpose antipode.
    fn p2() -> WeakHopf<Q> {
        let alg = FinAlgebra::matrix_units(2);
        let coalg = FinCoalgebra::grouplike(4);
        let s = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        WeakHopf::new(alg, coalg, s.clone(), Some(s)).unwrap()
    }

    #[test]
    fn pair_groupoid_passes_with_nontrivial_unit_coproduct() {
        let h = p2();
        let r = check_weak_hopf(&h);
        assert!(r.passed(), "{r}");
        let d1 = h.unit_delta();
        // Δ(1) = e11⊗e11 + e22⊗e22
        let nz: Vec<usize> = (0..16).filter(|&k| !d1[k].is_zero()).collect();
        assert_eq!(nz, vec![0, 15]);
    }

    #[test]
    fn identity_antipode_fails_at_off_diagonal_unit() {
        let mut h = p2();
        h.antipode = Matrix::identity(4);
        h.antipode_inv = Matrix::identity(4);
        let r = check_weak_hopf(&h);
        let w = r.law("antipode.left").unwrap().witness.clone().unwrap();
        assert_eq!(w.indices, vec![1]);
    }

    #[test]
    fn pi_maps_on_matrix_units() {
        let h = p2();
        let e12 = unit_vector(4, 1);
        let e22 = unit_vector(4, 3);
        assert_eq!(h.pi_left(&e12), unit_vector(4, 0));
        assert_eq!(h.pi_maps(&e22), (e22.clone(), e22));
    }

    #[test]
    fn base_of_pair_groupoid() {
        let h = p2();
        let b = extract_base(&h).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.subspace.basis(), &[unit_vector(4, 0), unit_vector(4, 3)]);
        assert_eq!(b.idempotent, vec![Q::one(), Q::zero(), Q::zero(), Q::one()]);
        assert_eq!(b.frobenius, Matrix::from_i64(&[&[1, 1]]));
    }
}
