use crate::error::StructureError;
use crate::exactlin::{unit_vector, zero_vector, Matrix, Vector};
use crate::field::Field;
use crate::findim::{FinAlgebra, FinCoalgebra};
use crate::weakhopf::WeakHopf;

/// A morphism `source → target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A finite groupoid. `compose[f][g]` is `f ∘ g`, defined exactly when
/// `source(f) = target(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    pub objects: usize,
    pub arrows: Vec<Arrow>,
    pub compose: Vec<Vec<Option<usize>>>,
}

impl Groupoid {
    /// Validates composability, associativity, identities and inverses.
    pub fn new(objects: usize, arrows: Vec<Arrow>, compose: Vec<Vec<Option<usize>>>) -> Result<Self, StructureError> {
        let g = Groupoid { objects, arrows, compose };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), StructureError> {
        let n = self.arrows.len();
        let bad = |m: String| Err(StructureError::Invalid(m));
        if self.compose.len() != n || self.compose.iter().any(|r| r.len() != n) {
            return bad(format!("composition table must be {n} x {n}"));
        }
        if let Some(a) = self.arrows.iter().find(|a| a.source >= self.objects || a.target >= self.objects) {
            return bad(format!("arrow {} has an endpoint outside {} objects", a.label, self.objects));
        }
        for f in 0..n {
            for g in 0..n {
                let composable = self.arrows[f].source == self.arrows[g].target;
                match (composable, self.compose[f][g]) {
                    (true, Some(h)) => {
                        let (af, ag, ah) = (&self.arrows[f], &self.arrows[g], self.arrows.get(h));
                        match ah {
                            Some(ah) if ah.source == ag.source && ah.target == af.target => {}
                            _ => return bad(format!("{} ∘ {} has the wrong endpoints", af.label, ag.label)),
                        }
                    }
                    (false, None) => {}
                    (true, None) => return bad(format!("{f} ∘ {g} is composable but undefined")),
                    (false, Some(_)) => return bad(format!("{f} ∘ {g} is defined but not composable")),
                }
            }
        }
        for f in 0..n {
            for g in 0..n {
                for h in 0..n {
                    let left = self.compose[f][g].and_then(|fg| self.compose[fg][h]);
                    let right = self.compose[g][h].and_then(|gh| self.compose[f][gh]);
                    if left != right {
                        return bad(format!("composition is not associative at ({f}, {g}, {h})"));
                    }
                }
            }
        }
        for x in 0..self.objects {
            self.identity(x).ok_or_else(|| StructureError::Invalid(format!("object {x} has no identity")))?;
        }
        for f in 0..n {
            self.inverse(f)
                .ok_or_else(|| StructureError::Invalid(format!("arrow {} is not invertible", self.arrows[f].label)))?;
        }
        Ok(())
    }

    pub fn identity(&self, x: usize) -> Option<usize> {
        (0..self.arrows.len()).find(|&e| {
            self.arrows[e].source == x
                && self.arrows[e].target == x
                && (0..self.arrows.len()).all(|f| {
                    (self.arrows[f].source != x || self.compose[f][e] == Some(f))
                        && (self.arrows[f].target != x || self.compose[e][f] == Some(f))
                })
        })
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        let a = &self.arrows[f];
        let (ids, idt) = (self.identity(a.source)?, self.identity(a.target)?);
        (0..self.arrows.len()).find(|&g| self.compose[g][f] == Some(ids) && self.compose[f][g] == Some(idt))
    }

    /// Cyclic group of order `n` as a one-object groupoid, arrow `k` = `u^k`.
    pub fn cyclic(n: usize) -> Self {
        let arrows = (0..n)
            .map(|k| Arrow { source: 0, target: 0, label: if k == 0 { "1".into() } else { format!("u{k}") } })
            .collect();
        let compose = (0..n).map(|i| (0..n).map(|j| Some((i + j) % n)).collect()).collect();
        Groupoid { objects: 1, arrows, compose }
    }

    /// One arrow `e_xy: y → x` for every pair; `e_xy ∘ e_yz = e_xz`.
    pub fn pair(n: usize) -> Self {
        let arrows = (0..n * n)
            .map(|xy| Arrow { source: xy % n, target: xy / n, label: format!("e{}{}", xy / n + 1, xy % n + 1) })
            .collect();
        let compose = (0..n * n)
            .map(|xy| (0..n * n).map(|zw| (xy % n == zw / n).then_some((xy / n) * n + zw % n)).collect())
            .collect();
        Groupoid { objects: n, arrows, compose }
    }

    /// `n` objects and only identities.
    pub fn discrete(n: usize) -> Self {
        let arrows = (0..n).map(|x| Arrow { source: x, target: x, label: format!("id{}", x + 1) }).collect();
        let compose = (0..n).map(|i| (0..n).map(|j| (i == j).then_some(i)).collect()).collect();
        Groupoid { objects: n, arrows, compose }
    }

    /// Disjoint union, arrows of `self` first.
    pub fn disjoint_union(&self, other: &Groupoid) -> Groupoid {
        let (n, m) = (self.arrows.len(), other.arrows.len());
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().map(|a| Arrow {
            source: a.source + self.objects,
            target: a.target + self.objects,
            label: a.label.clone(),
        }));
        let mut compose = vec![vec![None; n + m]; n + m];
        for f in 0..n {
            for g in 0..n {
                compose[f][g] = self.compose[f][g];
            }
        }
        for f in 0..m {
            for g in 0..m {
                compose[n + f][n + g] = other.compose[f][g].map(|h| h + n);
            }
        }
        Groupoid { objects: self.objects + other.objects, arrows, compose }
    }
}

/// Groupoid algebra: product = composition or zero, `Δ(f) = f ⊗ f`,
/// `ε(f) = 1`, `S(f) = f⁻¹`, unit the sum of identities.
pub fn groupoid_algebra<F: Field>(g: &Groupoid) -> Result<WeakHopf<F>, StructureError> {
    g.validate()?;
    let n = g.arrows.len();
    let names = g.arrows.iter().map(|a| a.label.clone()).collect();
    let mut unit: Vector<F> = zero_vector(n);
    for x in 0..g.objects {
        unit[g.identity(x).expect("validated")] = F::one();
    }
    let algebra = FinAlgebra::from_fn(names, unit, |i, j| match g.compose[i][j] {
        Some(k) => unit_vector(n, k),
        None => zero_vector(n),
    });
    let coalgebra = FinCoalgebra::grouplike(n);
    let inv_cols: Vec<_> = (0..n).map(|f| unit_vector(n, g.inverse(f).expect("validated"))).collect();
    let antipode = Matrix::from_columns(n, &inv_cols)?;
    WeakHopf::new(algebra, coalgebra, antipode.clone(), Some(antipode))
}

pub fn cyclic_group_algebra<F: Field>(n: usize) -> WeakHopf<F> {
    groupoid_algebra(&Groupoid::cyclic(n)).expect("cyclic group")
}

pub fn pair_groupoid_algebra<F: Field>(n: usize) -> WeakHopf<F> {
    groupoid_algebra(&Groupoid::pair(n)).expect("pair groupoid")
}

pub fn discrete_groupoid_algebra<F: Field>(n: usize) -> WeakHopf<F> {
    groupoid_algebra(&Groupoid::discrete(n)).expect("discrete groupoid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::weakhopf::{check_weak_hopf, extract_base};

    #[test]
    fn pair_groupoid_matches_matrix_units() {
        let h: WeakHopf<Q> = pair_groupoid_algebra(2);
        assert_eq!(h.algebra.basis_names(), FinAlgebra::<Q>::matrix_units(2).basis_names());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(h.algebra.basis_product(i, j), FinAlgebra::<Q>::matrix_units(2).basis_product(i, j));
            }
        }
        assert!(check_weak_hopf(&h).passed());
    }

    #[test]
    fn cyclic_group_is_hopf() {
        let h: WeakHopf<Q> = cyclic_group_algebra(2);
        assert!(check_weak_hopf(&h).passed());
        assert_eq!(h.unit_delta(), vec![Q::one(), Q::zero(), Q::zero(), Q::zero()]);
        let u = unit_vector(2, 1);
        assert_eq!(h.pi_maps(&u), (h.unit().to_vec(), h.unit().to_vec()));
        let base = extract_base(&h).unwrap();
        assert_eq!(base.dim(), 1);
        assert_eq!(base.idempotent, vec![Q::one()]);
    }

    #[test]
    fn discrete_groupoid_base_is_everything() {
        let h: WeakHopf<Q> = discrete_groupoid_algebra(2);
        assert!(h.pi_left_matrix().is_identity());
        assert_eq!(extract_base(&h).unwrap().dim(), 2);
    }

    #[test]
    fn base_dimension_counts_objects() {
        let g = Groupoid::pair(2).disjoint_union(&Groupoid::cyclic(3));
        let h: WeakHopf<Q> = groupoid_algebra(&g).unwrap();
        assert!(check_weak_hopf(&h).passed());
        assert_eq!(extract_base(&h).unwrap().dim(), 3);
        for (f, a) in g.arrows.iter().enumerate() {
            let id = g.identity(a.target).unwrap();
            assert_eq!(h.pi_left(&unit_vector(7, f)), unit_vector(7, id));
        }
    }

    #[test]
    fn invalid_presentations() {
        let mut g = Groupoid::cyclic(3);
        g.compose[1][1] = Some(1);
        assert!(matches!(groupoid_algebra::<Q>(&g), Err(StructureError::Invalid(_))));
        let mut g = Groupoid::pair(2);
        g.compose[0][1] = None;
        assert!(groupoid_algebra::<Q>(&g).is_err());
    }
}
