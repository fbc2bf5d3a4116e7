//! Chain complexes of presented abelian groups and their homology,
//! computed by Smith normal form with explicit cycle/class lifting.

use num_bigint::BigInt;
use num_traits::Zero;

use super::group::{AbHom, FgAbGroup};
use super::matrix::{lattice_basis, lattice_contains_vec, preimage_lattice, solve_linear, IntMatrix};
use crate::error::{EngineError, Result};

/// A (homologically indexed) chain complex: `boundaries[n]` maps
/// `groups[n+1] -> groups[n]`. Cochain complexes are fed in reversed.
pub struct ChainComplexZ {
    pub groups: Vec<FgAbGroup>,
    pub boundaries: Vec<AbHom>,
}

impl ChainComplexZ {
    pub fn new(groups: Vec<FgAbGroup>, boundaries: Vec<AbHom>) -> Result<Self> {
        if !groups.is_empty() && boundaries.len() + 1 != groups.len() {
            return Err(EngineError::dimension(format!(
                "complex with {} groups needs {} boundary maps, got {}",
                groups.len(),
                groups.len() - 1,
                boundaries.len()
            )));
        }
        let c = ChainComplexZ { groups, boundaries };
        c.validate()?;
        Ok(c)
    }

    /// Well-typedness plus d∘d = 0 as maps of presented groups.
    pub fn validate(&self) -> Result<()> {
        for (n, b) in self.boundaries.iter().enumerate() {
            if b.matrix.cols != self.groups[n + 1].generator_count()
                || b.matrix.rows != self.groups[n].generator_count()
            {
                return Err(EngineError::dimension(format!(
                    "boundary {n} has shape {}x{}, expected {}x{}",
                    b.matrix.rows,
                    b.matrix.cols,
                    self.groups[n].generator_count(),
                    self.groups[n + 1].generator_count()
                )));
            }
            b.check_well_defined()?;
        }
        for n in 0..self.boundaries.len().saturating_sub(1) {
            let dd = self.boundaries[n].compose(&self.boundaries[n + 1]);
            if !dd.is_zero_map() {
                return Err(EngineError::validation(format!(
                    "consecutive differentials at degree {} do not compose to zero",
                    n + 1
                )));
            }
        }
        Ok(())
    }
}

/// Homology at one degree, with maps between cycle vectors and classes.
pub struct HomologyAt {
    pub group: FgAbGroup,
    /// Columns: a lattice basis of the cycle lattice Z_n inside Z^{g_n}.
    cycle_basis: IntMatrix,
    /// Generator coordinates (in cycle basis) of the boundary lattice.
    ambient_gens: usize,
}

impl HomologyAt {
    /// Class of a cycle, as coordinates on `group`'s generators.
    pub fn class_of(&self, cycle: &[BigInt]) -> Result<Vec<BigInt>> {
        if cycle.len() != self.ambient_gens {
            return Err(EngineError::dimension("cycle vector has wrong length".into()));
        }
        match solve_linear(&self.cycle_basis, cycle)? {
            Some(c) => Ok(c),
            None => Err(EngineError::validation(
                "vector is not a cycle (not in the kernel lattice)".into(),
            )),
        }
    }

    /// A representative cycle for a class given by generator coordinates.
    pub fn representative(&self, class: &[BigInt]) -> Vec<BigInt> {
        self.cycle_basis.mul_vec(class)
    }

    pub fn is_cycle(&self, v: &[BigInt]) -> bool {
        matches!(solve_linear(&self.cycle_basis, v), Ok(Some(_)))
    }

    /// Do two cycles represent the same class?
    pub fn classes_equal(&self, a: &[BigInt], b: &[BigInt]) -> Result<bool> {
        let ca = self.class_of(a)?;
        let cb = self.class_of(b)?;
        Ok(self.group.elements_equal(&ca, &cb))
    }
}

/// `ker(d_n) / im(d_{n+1})` in canonical invariant-factor form.
///
/// `d_n` is `boundaries[n-1]: groups[n] -> groups[n-1]` (absent for n = 0,
/// treated as the zero map), and `d_{n+1}` is `boundaries[n]`.
pub fn homology_at(c: &ChainComplexZ, n: usize) -> Result<HomologyAt> {
    if n >= c.groups.len() {
        return Err(EngineError::dimension(format!(
            "degree {n} out of range for complex of length {}",
            c.groups.len()
        )));
    }
    let gens = c.groups[n].generator_count();

    // Cycle lattice: everything if d_n is zero, else preimage of the
    // relation lattice downstairs.
    let cycle_lattice = if n == 0 {
        IntMatrix::identity(gens)
    } else {
        let d_n = &c.boundaries[n - 1];
        preimage_lattice(&d_n.matrix, &c.groups[n - 1].relation_lattice())
    };

    // Boundary lattice: images of the generators one degree up, plus the
    // relations of this degree.
    let rel = c.groups[n].relation_lattice();
    let boundary_lattice = if n + 1 < c.groups.len() {
        c.boundaries[n].matrix.hconcat(&rel)
    } else {
        rel
    };

    // Relations of the homology group: boundary lattice in cycle coordinates.
    let basis = lattice_basis(&cycle_lattice);
    let mut rel_rows = Vec::new();
    for j in 0..boundary_lattice.cols {
        let b = boundary_lattice.col(j);
        let coords = solve_linear(&basis, &b)?.ok_or_else(|| {
            EngineError::validation(
                "boundary lattice does not lie inside the cycle lattice (complex invalid)".into(),
            )
        })?;
        rel_rows.push(coords);
    }
    let relations = if rel_rows.is_empty() {
        IntMatrix::zeros(0, basis.cols)
    } else {
        IntMatrix::from_big_rows(rel_rows)
    };
    Ok(HomologyAt {
        group: FgAbGroup::from_relations(relations),
        cycle_basis: basis,
        ambient_gens: gens,
    })
}

/// Convenience check used by tests: membership of `v` in the cycle lattice
/// of degree `n` without computing homology.
pub fn is_cycle_at(c: &ChainComplexZ, n: usize, v: &[BigInt]) -> bool {
    if n == 0 {
        return v.len() == c.groups[0].generator_count();
    }
    let d_n = &c.boundaries[n - 1];
    let img = d_n.matrix.mul_vec(v);
    lattice_contains_vec(&c.groups[n - 1].relation_lattice(), &img)
        || img.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_complex(maps: Vec<(usize, usize, Vec<Vec<i64>>)>) -> ChainComplexZ {
        // maps[n] = (rows=g_n gens, cols=g_{n+1} gens, matrix)
        let mut groups = Vec::new();
        let mut boundaries = Vec::new();
        for (i, (r, c, m)) in maps.iter().enumerate() {
            if i == 0 {
                groups.push(FgAbGroup::free(*r));
            }
            groups.push(FgAbGroup::free(*c));
            let mat = if m.is_empty() {
                IntMatrix::zeros(*r, *c)
            } else {
                IntMatrix::from_rows(m.clone())
            };
            boundaries.push(AbHom::new_unchecked(
                groups[i + 1].clone(),
                groups[i].clone(),
                mat,
            ));
        }
        ChainComplexZ::new(groups, boundaries).unwrap()
    }

    #[test]
    fn times_two_cokernel() {
        // 0 -> Z --(x2)--> Z -> 0; H_0 = Z/2, H_1 = 0.
        let c = free_complex(vec![(1, 1, vec![vec![2]])]);
        assert_eq!(homology_at(&c, 0).unwrap().group, FgAbGroup::cyclic(2));
        assert!(homology_at(&c, 1).unwrap().group.is_trivial());
    }

    #[test]
    fn zero_complex() {
        let c = free_complex(vec![(0, 0, vec![])]);
        assert!(homology_at(&c, 0).unwrap().group.is_trivial());
        assert!(homology_at(&c, 1).unwrap().group.is_trivial());
    }

    #[test]
    fn identity_exact() {
        let c = free_complex(vec![(1, 1, vec![vec![1]])]);
        assert!(homology_at(&c, 0).unwrap().group.is_trivial());
        assert!(homology_at(&c, 1).unwrap().group.is_trivial());
    }

    #[test]
    fn circle_h1() {
        // Simplicial circle: 3 vertices, 3 edges. H_0 = Z, H_1 = Z.
        let c = free_complex(vec![(
            3,
            3,
            vec![vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]],
        )]);
        let h0 = homology_at(&c, 0).unwrap().group;
        let h1 = homology_at(&c, 1).unwrap().group;
        assert_eq!(h0.invariant_factors(), vec![BigInt::zero()]);
        assert_eq!(h1.invariant_factors(), vec![BigInt::zero()]);
    }

    #[test]
    fn class_lifting_roundtrip() {
        let c = free_complex(vec![(1, 1, vec![vec![2]])]);
        let h = homology_at(&c, 0).unwrap();
        let cl = h.class_of(&[BigInt::from(1)]).unwrap();
        let rep = h.representative(&cl);
        assert!(h.classes_equal(&rep, &[BigInt::from(1)]).unwrap());
        assert!(!h.classes_equal(&rep, &[BigInt::from(2)]).unwrap());
    }
}
