//! Random exact linear algebra cases with a checker per case.

use doiko_core::exactlin::{image, intersect, kernel, quotient, unit_vector, vec_add, zero_vector};
use doiko_core::{Field, Fp, Matrix, Subspace, Vector, Q};
use rand::Rng;

pub const P: u64 = 1_000_003;

/// Small integers and simple fractions, often zero so ranks vary.
pub fn random_q<R: Rng>(rng: &mut R) -> Q {
    if rng.gen_bool(0.35) {
        return Q::zero();
    }
    Q::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<Q> {
    let data: Vec<Vector<Q>> = (0..rows).map(|_| (0..cols).map(|_| random_q(rng)).collect()).collect();
    Matrix::from_rows(rows, cols, data).expect("shape")
}

fn ensure(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

/// Rank-nullity, kernel and image membership, canonical form stability,
/// quotient projection/section laws, intersection dimensions and solving,
/// for one matrix `m`, a second matrix `n` with the same row count, and
/// a mixing matrix `mix` applied to the image basis.
pub fn exactlin_case(m: &Matrix<Q>, n: &Matrix<Q>, mix: &Matrix<Q>) -> Result<(), String> {
    let (rows, cols) = m.shape();
    let ker = kernel(m);
    ensure(m.rank() + ker.dim() == cols, "rank-nullity")?;
    for v in ker.basis() {
        ensure(m.apply(v).iter().all(|c| c.is_zero()), "kernel vector not killed")?;
    }
    let im = image(m);
    ensure(im.dim() == m.rank(), "image dimension")?;
    for j in 0..cols {
        ensure(im.contains(&m.column(j)), "column outside image")?;
    }

    // canonical form: any invertible recombination of a spanning set spans the same echelon basis
    let basis = im.basis().to_vec();
    let k = basis.len();
    if k > 0 && mix.shape() == (k, k) && mix.rank() == k {
        let mixed: Vec<Vector<Q>> = (0..k)
            .map(|i| {
                let mut v: Vector<Q> = zero_vector(rows);
                for (j, b) in basis.iter().enumerate() {
                    for (x, y) in v.iter_mut().zip(b) {
                        x.add_mul(mix.get(i, j), y);
                    }
                }
                v
            })
            .collect();
        let mut padded = mixed.clone();
        padded.push(zero_vector(rows));
        padded.push(vec_add(&mixed[0], &mixed[k - 1]));
        ensure(Subspace::span(rows, padded) == im, "echelon basis depends on the spanning set")?;
    }

    let q = quotient(rows, im.clone()).map_err(|e| e.to_string())?;
    ensure(q.quot_dim() + im.dim() == rows, "quotient dimension")?;
    let ps = q.projection().mul(q.section());
    ensure(ps.is_identity(), "projection after section")?;
    for r in im.basis() {
        ensure(q.project(r).iter().all(|c| c.is_zero()), "relation not killed")?;
    }
    for i in 0..rows {
        let e: Vector<Q> = unit_vector(rows, i);
        let back = q.lift(&q.project(&e));
        let diff: Vector<Q> = e.iter().zip(&back).map(|(a, b)| a.sub(b)).collect();
        ensure(im.contains(&diff), "lift of projection differs by a non-relation")?;
        if let Some(r) = im.basis().first() {
            ensure(q.project(&vec_add(&e, r)) == q.project(&e), "projection not constant on cosets")?;
        }
    }

    let other = image(n);
    let meet = intersect(&im, &other).map_err(|e| e.to_string())?;
    let join = im.sum(&other).map_err(|e| e.to_string())?;
    ensure(meet.dim() + join.dim() == im.dim() + other.dim(), "dimension of sum and intersection")?;
    ensure(meet.is_subspace_of(&im) && meet.is_subspace_of(&other), "intersection not contained")?;

    for j in 0..n.cols() {
        let b = n.column(j);
        match m.solve(&b) {
            Some(x) => ensure(m.apply(&x) == b, "solution does not solve")?,
            None => ensure(!im.contains(&b), "solvable system reported unsolvable")?,
        }
    }
    if rows == cols && m.rank() == rows {
        let inv = m.inverse().map_err(|e| e.to_string())?;
        ensure(m.mul(&inv).is_identity() && inv.mul(m).is_identity(), "inverse")?;
    }
    Ok(())
}

/// Integer matrices multiplied over `ℚ` then reduced, against reduced then multiplied.
pub fn field_consistency_case(a: &Matrix<Q>, b: &Matrix<Q>) -> Result<(), String> {
    let reduce = |m: &Matrix<Q>| -> Option<Matrix<Fp<P>>> {
        let rows: Option<Vec<Vector<Fp<P>>>> =
            (0..m.rows()).map(|i| m.row(i).iter().map(|c| c.reduce_mod::<P>()).collect()).collect();
        Some(Matrix::from_rows(m.rows(), m.cols(), rows?).expect("shape"))
    };
    let (ra, rb) = match (reduce(a), reduce(b)) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err("denominator divisible by the modulus".into()),
    };
    let over_q = reduce(&a.mul(b)).ok_or("product has a bad denominator")?;
    ensure(over_q == ra.mul(&rb), "products disagree")?;
    ensure(ra.rank() <= a.rank(), "rank grew under reduction")
}
