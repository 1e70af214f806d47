//! Identity suites evaluated on basis tuples, shared by the integration tests.

#![allow(dead_code)]

pub mod random;

use doiko_core::exactlin::{apply_kron, axpy, tensor_vec, unit_vector, zero_vector};
use doiko_core::weakhopf::section_sigma;
use doiko_core::{ComoduleAlgebra, Field, Law, Matrix, Report, Vector, WeakComoduleAlgebra, WeakHopf, WeakSetting};

/// `(i, j, coefficient)` of a vector in `X ⊗ Y` with `dim Y = ny`.
pub fn terms<F: Field>(v: &[F], ny: usize) -> Vec<(usize, usize, F)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k / ny, k % ny, c.clone())).collect()
}

/// `ε(1₁g)1₂` computed directly from `Δ(1)`.
fn pi_left<F: Field>(h: &WeakHopf<F>, g: &[F]) -> Vector<F> {
    let n = h.dim();
    let mut out: Vector<F> = zero_vector(n);
    for (a, b, d) in terms(&h.delta(h.unit()), n) {
        let e = h.epsilon(&h.mul(&unit_vector(n, a), g));
        out[b].add_mul(&d, &e);
    }
    out
}

/// `ε(g1₂)1₁`
fn pi_right<F: Field>(h: &WeakHopf<F>, g: &[F]) -> Vector<F> {
    let n = h.dim();
    let mut out: Vector<F> = zero_vector(n);
    for (a, b, d) in terms(&h.delta(h.unit()), n) {
        let e = h.epsilon(&h.mul(g, &unit_vector(n, b)));
        out[a].add_mul(&d, &e);
    }
    out
}

fn right_mult<F: Field>(h: &WeakHopf<F>, x: &[F]) -> Matrix<F> {
    h.algebra.right_mult(x)
}

/// Identities of the counital maps over all basis pairs `g, h`.
pub fn weak_hopf_lemmas<F: Field>(h: &WeakHopf<F>) -> Report {
    let n = h.dim();
    let basis = |i: usize| unit_vector::<F>(n, i);
    let id = Matrix::identity(n);
    let mut report = Report::new("weak Hopf identities");

    let mut idem_l = Law::new("pi_left.idempotent");
    let mut idem_r = Law::new("pi_right.idempotent");
    for g in 0..n {
        let (l, r) = (pi_left(h, &basis(g)), pi_right(h, &basis(g)));
        idem_l.check(&[g], &pi_left(h, &l), &l);
        idem_r.check(&[g], &pi_right(h, &r), &r);
    }
    report.push(idem_l.finish());
    report.push(idem_r.finish());

    // h₁ ⊗ h₂Π^L(g) = h₁S⁻¹(Π^L(g)) ⊗ h₂
    let mut slide = Law::new("pi_left.slides_across_comult");
    // Π^R(g)h = h₁ε(gh₂)
    let mut via_counit = Law::new("pi_right.via_counit");
    // ε(gΠ^L(h)) = ε(Π^R(g)h)
    let mut exchange = Law::new("counit.pi_exchange");
    for g in 0..n {
        let pl = pi_left(h, &basis(g));
        let pr = pi_right(h, &basis(g));
        let s_inv = h.antipode_inv.apply(&pl);
        for k in 0..n {
            let d = h.delta(&basis(k));
            slide.check(
                &[g, k],
                &apply_kron(&id, &right_mult(h, &pl), &d),
                &apply_kron(&right_mult(h, &s_inv), &id, &d),
            );
            let mut rhs: Vector<F> = zero_vector(n);
            for (a, b, w) in terms(&d, n) {
                let e = h.epsilon(&h.mul(&basis(g), &basis(b)));
                rhs[a].add_mul(&w, &e);
            }
            via_counit.check(&[g, k], &h.mul(&pr, &basis(k)), &rhs);
            let lhs = h.epsilon(&h.mul(&basis(g), &pi_left(h, &basis(k))));
            let rhs = h.epsilon(&h.mul(&pr, &basis(k)));
            exchange.check(&[g, k], &[lhs], &[rhs]);
        }
    }
    report.push(slide.finish());
    report.push(via_counit.finish());
    report.push(exchange.finish());
    report
}

/// `Π^R(a₋₁) ⊗ a₀ = 1₋₁ ⊗ a1₀` for a weak comodule algebra.
pub fn weak_comodule_lemmas<F: Field>(h: &WeakHopf<F>, a: &WeakComoduleAlgebra<F>) -> Report {
    let (nh, na) = (h.dim(), a.dim());
    let one = a.algebra.unit().to_vec();
    let rho_one = a.rho(&one);
    let mut law = Law::new("coaction.pi_right");
    for x in 0..na {
        let mut lhs: Vector<F> = zero_vector(nh * na);
        for (p, q, w) in terms(&a.rho(&unit_vector(na, x)), na) {
            axpy(&mut lhs, &w, &tensor_vec(&pi_right(h, &unit_vector(nh, p)), &unit_vector(na, q)));
        }
        let rhs = apply_kron(&Matrix::identity(nh), &a.algebra.left_mult(&unit_vector(na, x)), &rho_one);
        law.check(&[x], &lhs, &rhs);
    }
    let mut report = Report::new("weak comodule algebra identities");
    report.push(law.finish());
    report
}

/// Identities linking a comodule algebra over the bialgebroid of `w`, its
/// weak counterpart `σ ∘ ρ̃`, the unit and the source map.
pub fn section_lemmas<F: Field>(w: &WeakSetting<F>, a: &ComoduleAlgebra<F>) -> Report {
    let h = &w.hopf;
    let b = &w.bialgebroid;
    let (nh, na, nr) = (h.dim(), a.dim(), w.base.dim());
    let alg = &a.algebra;
    let one_a = alg.unit().to_vec();
    let id_h = Matrix::identity(nh);
    let id_a = Matrix::identity(na);
    let mut report = Report::new("section identities");
    let sigma = match section_sigma(&w.base.idempotent_terms(), b.right_action(), &a.r_module(), &a.tensor) {
        Ok(s) => s,
        Err(e) => {
            let mut law = Law::new("section");
            law.fail(&[], e.to_string());
            report.push(law.finish());
            return report;
        }
    };
    let weak = |x: &[F]| sigma.apply(&a.coaction.apply(x));
    let r_coords = |v: &[F]| w.base.coordinates(v).expect("element of the base");
    let s_a = |v: &[F]| a.source.apply(&r_coords(v));

    // ρ̃(1) = 1 ⊗_R 1
    let mut law = Law::new("unit.balanced");
    law.check(&[], &a.coaction.apply(&one_a), &a.tensor.project_pair(h.unit(), &one_a));
    report.push(law.finish());

    // (Δ ⊗ A)ρ(1) = 1₁ ⊗ 1₂1₋₁ ⊗ 1₀
    let rho_one = weak(&one_a);
    let unit_delta = h.delta(h.unit());
    let mut rhs: Vector<F> = zero_vector(nh * nh * na);
    for (p, q, d) in terms(&unit_delta, nh) {
        for (i, j, y) in terms(&rho_one, na) {
            let prod = h.mul(&unit_vector(nh, q), &unit_vector(nh, i));
            let leg = tensor_vec(&tensor_vec(&unit_vector(nh, p), &prod), &unit_vector(na, j));
            axpy(&mut rhs, &d.mul(&y), &leg);
        }
    }
    let mut law = Law::new("unit.comult");
    law.check(&[], &apply_kron(&h.coalgebra.comult, &id_a, &rho_one), &rhs);
    report.push(law.finish());

    // 1₁1₋₁ ⊗ 1₂·1₀ = 1₁ ⊗ s_A(1₂), and σ(ρ̃(1)) is the same element
    let mut expected: Vector<F> = zero_vector(nh * na);
    let mut second_legs: Vec<Vector<F>> = vec![zero_vector(nh); nh];
    for (p, q, d) in terms(&unit_delta, nh) {
        second_legs[p][q].add_mul(&d, &F::one());
    }
    for (p, leg) in second_legs.iter().enumerate() {
        if leg.iter().any(|c| !c.is_zero()) {
            axpy(&mut expected, &F::one(), &tensor_vec(&unit_vector(nh, p), &s_a(leg)));
        }
    }
    let mut lhs: Vector<F> = zero_vector(nh * na);
    for (p, leg) in second_legs.iter().enumerate() {
        if leg.iter().all(|c| c.is_zero()) {
            continue;
        }
        let act = alg.left_mult(&s_a(leg));
        for (i, j, y) in terms(&rho_one, na) {
            let first = h.mul(&unit_vector(nh, p), &unit_vector(nh, i));
            axpy(&mut lhs, &y, &tensor_vec(&first, &act.column(j)));
        }
    }
    let mut law = Law::new("unit.source");
    law.check(&[], &lhs, &expected);
    report.push(law.finish());
    let mut law = Law::new("unit.section");
    law.check(&[], &rho_one, &expected);
    report.push(law.finish());

    let weak_basis: Vec<_> = (0..na).map(|x| weak(&unit_vector(na, x))).collect();

    // (R_{t(r)} ⊗ A)σρ̃(a) = (H ⊗ R_{s_A(r)})σρ̃(a)
    let mut law = Law::new("section.balanced");
    for r in 0..nr {
        let rt = h.algebra.right_mult(&b.t(&unit_vector(nr, r)));
        let rs = alg.right_mult(&a.source.column(r));
        for (x, v) in weak_basis.iter().enumerate() {
            law.check(&[r, x], &apply_kron(&rt, &id_a, v), &apply_kron(&id_h, &rs, v));
        }
    }
    report.push(law.finish());

    // σρ̃(ab) = σ(ρ̃(a)ρ̃(b))
    let mut law = Law::new("section.multiplicative");
    for x in 0..na {
        let rx = a.coaction.column(x);
        for y in 0..na {
            let prod = a.tensor.product(&h.algebra, alg, &rx, &a.coaction.column(y));
            let lhs = weak(&alg.basis_product(x, y));
            law.check(&[x, y], &lhs, &sigma.apply(&prod));
        }
    }
    report.push(law.finish());

    // a₋₁S⁻¹(Π^L(g)) ⊗ a₀ = a₋₁ ⊗ a₀s_A(Π^L(g))
    let mut law = Law::new("section.pi_left_transfer");
    for g in 0..nh {
        let pl = pi_left(h, &unit_vector(nh, g));
        let left = h.algebra.right_mult(&h.antipode_inv.apply(&pl));
        let right = alg.right_mult(&s_a(&pl));
        for (x, v) in weak_basis.iter().enumerate() {
            law.check(&[x, g], &apply_kron(&left, &id_a, v), &apply_kron(&id_h, &right, v));
        }
    }
    report.push(law.finish());
    report
}
