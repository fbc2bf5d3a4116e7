//! Finitely generated abelian groups presented by integer relation
//! matrices, their elements, homomorphisms, and Hom-groups.
//!
//! The canonical identifier of a group is its invariant-factor list
//! (1s dropped, 0s kept as free rank); every cross-module equality of
//! groups goes through it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{
    kernel_basis, lattice_basis, lattice_contains_vec, preimage_lattice, smith_normal_form,
    solve_linear, solve_modulo, vec_sub, IntMatrix, Snf,
};
use crate::error::{EngineError, Result};

/// A finitely generated abelian group `Z^g / rowspan(relations)`.
///
/// Rows of `relations` are relations between the `g` generators.
#[derive(Clone, Debug)]
pub struct FgAbGroup {
    relations: IntMatrix,
}

impl PartialEq for FgAbGroup {
    /// Groups compare equal iff their invariant-factor lists agree.
    fn eq(&self, other: &Self) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }
}
impl Eq for FgAbGroup {}

/// Canonical coordinates: `y = u * x` diagonalizes the relation lattice,
/// with `y_i` taken modulo `divisors[i]` (0 meaning a free coordinate).
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub divisors: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn new(generator_count: usize, relation_rows: Vec<Vec<i64>>) -> Self {
        let relations = if relation_rows.is_empty() {
            IntMatrix::zeros(0, generator_count)
        } else {
            let m = IntMatrix::from_rows(relation_rows);
            assert_eq!(m.cols, generator_count, "relation width mismatch");
            m
        };
        FgAbGroup { relations }
    }

    pub fn from_relations(relations: IntMatrix) -> Self {
        FgAbGroup { relations }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { relations: IntMatrix::zeros(0, rank) }
    }

    pub fn zero() -> Self {
        FgAbGroup::free(0)
    }

    pub fn cyclic(n: u64) -> Self {
        FgAbGroup::new(1, vec![vec![n as i64]])
    }

    /// Group with the given invariant factors; 0 entries contribute free rank.
    pub fn from_invariant_factors(factors: &[u64]) -> Self {
        let g = factors.len();
        let mut rows = Vec::new();
        for (i, &f) in factors.iter().enumerate() {
            if f != 0 {
                let mut row = vec![0i64; g];
                row[i] = f as i64;
                rows.push(row);
            }
        }
        let mut m = IntMatrix::zeros(rows.len(), g);
        for (i, row) in rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*e);
            }
        }
        FgAbGroup { relations: m }
    }

    pub fn generator_count(&self) -> usize {
        self.relations.cols
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Relation lattice as columns (transpose of the relation rows).
    pub fn relation_lattice(&self) -> IntMatrix {
        self.relations.transpose()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let a = self.relation_lattice();
        let snf: Snf = smith_normal_form(&a);
        let n = a.rows.min(a.cols);
        let mut divisors = Vec::with_capacity(a.rows);
        for i in 0..a.rows {
            if i < n {
                divisors.push(snf.d[(i, i)].clone());
            } else {
                divisors.push(BigInt::zero());
            }
        }
        CanonicalForm { u: snf.u, u_inv: snf.u_inv, divisors }
    }

    /// Invariant factors > 1 in ascending divisibility order, with one 0 per
    /// free rank appended. The canonical identifier of the group.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let cf = self.canonical_form();
        let mut torsion: Vec<BigInt> =
            cf.divisors.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect();
        torsion.sort();
        let free = cf.divisors.iter().filter(|d| d.is_zero()).count();
        torsion.extend(std::iter::repeat(BigInt::zero()).take(free));
        torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors().is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.invariant_factors().iter().all(|d| !d.is_zero())
    }

    pub fn order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        let mut n = BigInt::one();
        for d in self.invariant_factors() {
            n *= d;
        }
        Some(n)
    }

    /// Decide `x ≡ y` modulo the relation lattice.
    pub fn elements_equal(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let diff = vec_sub(x, y);
        lattice_contains_vec(&self.relation_lattice(), &diff)
    }

    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        lattice_contains_vec(&self.relation_lattice(), x)
    }

    /// Reduce an element to canonical residue coordinates.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        let cf = self.canonical_form();
        let y = cf.u.mul_vec(x);
        y.iter()
            .zip(cf.divisors.iter())
            .map(|(yi, di)| if di.is_zero() { yi.clone() } else { yi.mod_floor(di) })
            .collect()
    }

    /// All elements of a finite group, in deterministic order, as generator
    /// coordinate vectors.
    pub fn elements(&self) -> Result<Vec<Vec<BigInt>>> {
        let cf = self.canonical_form();
        if cf.divisors.iter().any(|d| d.is_zero()) {
            return Err(EngineError::unsupported(
                "element enumeration requires a finite group",
            ));
        }
        let mut out = vec![vec![]];
        for d in &cf.divisors {
            let dn: u64 = d.to_string().parse().map_err(|_| {
                EngineError::unsupported("group too large to enumerate")
            })?;
            let mut next = Vec::with_capacity(out.len() * dn as usize);
            for prefix in &out {
                for r in 0..dn {
                    let mut p = prefix.clone();
                    p.push(BigInt::from(r));
                    next.push(p);
                }
            }
            out = next;
        }
        // Map canonical residues back to generator coordinates.
        Ok(out.into_iter().map(|y| cf.u_inv.mul_vec(&y)).collect())
    }

    /// Index of the element congruent to `x` in the `elements()` ordering.
    pub fn element_index(&self, x: &[BigInt]) -> Result<usize> {
        let cf = self.canonical_form();
        let y = cf.u.mul_vec(x);
        let mut idx: usize = 0;
        for (yi, di) in y.iter().zip(cf.divisors.iter()) {
            if di.is_zero() {
                return Err(EngineError::unsupported("element_index on infinite group"));
            }
            let r = yi.mod_floor(di);
            let dn: usize = di.to_string().parse().map_err(|_| {
                EngineError::unsupported("group too large to index")
            })?;
            let rn: usize = r.to_string().parse().unwrap();
            idx = idx * dn + rn;
        }
        Ok(idx)
    }

    /// Block direct sum.
    pub fn direct_sum(groups: &[&FgAbGroup]) -> FgAbGroup {
        let total_gens: usize = groups.iter().map(|g| g.generator_count()).sum();
        let total_rels: usize = groups.iter().map(|g| g.relations.rows).sum();
        let mut rel = IntMatrix::zeros(total_rels, total_gens);
        let mut roff = 0;
        let mut coff = 0;
        for g in groups {
            for i in 0..g.relations.rows {
                for j in 0..g.relations.cols {
                    rel[(roff + i, coff + j)] = g.relations[(i, j)].clone();
                }
            }
            roff += g.relations.rows;
            coff += g.relations.cols;
        }
        FgAbGroup { relations: rel }
    }
}

impl std::fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let factors = self.invariant_factors();
        if factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = factors
            .iter()
            .map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{}", d) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of a group, held as generator coordinates. Equality is
/// congruence modulo the relation lattice, decided by a Diophantine solve.
#[derive(Clone, Debug)]
pub struct AbElement {
    pub coords: Vec<BigInt>,
}

impl AbElement {
    pub fn new(coords: Vec<BigInt>) -> Self {
        AbElement { coords }
    }
    pub fn zero(group: &FgAbGroup) -> Self {
        AbElement { coords: vec![BigInt::zero(); group.generator_count()] }
    }
}

/// Homomorphism between presented groups, stored as its matrix on
/// generators (target_gens x source_gens).
#[derive(Clone, Debug)]
pub struct AbHom {
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    pub matrix: IntMatrix,
}

impl AbHom {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows != target.generator_count() || matrix.cols != source.generator_count() {
            return Err(EngineError::dimension(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows,
                matrix.cols,
                target.generator_count(),
                source.generator_count()
            )));
        }
        let h = AbHom { source, target, matrix };
        h.check_well_defined()?;
        Ok(h)
    }

    /// Trusted constructor for maps known well-defined by construction.
    pub fn new_unchecked(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Self {
        AbHom { source, target, matrix }
    }

    pub fn identity(group: &FgAbGroup) -> Self {
        AbHom {
            source: group.clone(),
            target: group.clone(),
            matrix: IntMatrix::identity(group.generator_count()),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        AbHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.generator_count(), source.generator_count()),
        }
    }

    /// Every source relation row must map into the target relation lattice.
    pub fn check_well_defined(&self) -> Result<()> {
        let tl = self.target.relation_lattice();
        for i in 0..self.source.relations().rows {
            let rel = self.source.relations().row(i);
            let img = self.matrix.mul_vec(&rel);
            if !lattice_contains_vec(&tl, &img) {
                return Err(EngineError::validation(format!(
                    "homomorphism not well-defined on source relation {i}"
                )));
            }
        }
        Ok(())
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }

    pub fn compose(&self, inner: &AbHom) -> AbHom {
        assert_eq!(
            inner.target.generator_count(),
            self.source.generator_count(),
            "hom composition mismatch"
        );
        AbHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        }
    }

    pub fn add(&self, other: &AbHom) -> AbHom {
        AbHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix),
        }
    }

    pub fn neg(&self) -> AbHom {
        AbHom { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.neg() }
    }

    /// Equality as maps of presented groups: each generator image may differ
    /// only by a target relation.
    pub fn equals(&self, other: &AbHom) -> bool {
        if self.matrix.cols != other.matrix.cols || self.matrix.rows != other.matrix.rows {
            return false;
        }
        let tl = self.target.relation_lattice();
        for j in 0..self.matrix.cols {
            let diff = vec_sub(&self.matrix.col(j), &other.matrix.col(j));
            if !lattice_contains_vec(&tl, &diff) {
                return false;
            }
        }
        true
    }

    pub fn is_zero_map(&self) -> bool {
        self.equals(&AbHom::zero(&self.source, &self.target))
    }

    /// Surjectivity: image lattice together with target relations spans Z^t.
    pub fn is_surjective(&self) -> bool {
        let span = self.matrix.hconcat(&self.target.relation_lattice());
        let snf = smith_normal_form(&span);
        let r = snf.rank();
        if r < self.target.generator_count() {
            return false;
        }
        (0..r).all(|i| snf.d[(i, i)].is_one())
    }

    /// Injectivity: preimage of target relations lies inside source relations.
    pub fn is_injective(&self) -> bool {
        let pre = preimage_lattice(&self.matrix, &self.target.relation_lattice());
        let sl = self.source.relation_lattice();
        (0..pre.cols).all(|j| lattice_contains_vec(&sl, &pre.col(j)))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_surjective() && self.is_injective()
    }

    /// Preimage of a single element (any representative) if one exists.
    pub fn preimage(&self, y: &[BigInt]) -> Option<Vec<BigInt>> {
        solve_modulo(&self.matrix, y, &self.target.relation_lattice())
    }

    /// Inverse of an isomorphism, as a matrix on generators.
    pub fn inverse(&self) -> Result<AbHom> {
        let mut cols = Vec::with_capacity(self.target.generator_count());
        for j in 0..self.target.generator_count() {
            let mut e = vec![BigInt::zero(); self.target.generator_count()];
            e[j] = BigInt::one();
            let pre = self.preimage(&e).ok_or_else(|| {
                EngineError::validation("inverse requested of a non-surjective hom")
            })?;
            cols.push(pre);
        }
        let m = IntMatrix::from_cols(cols, self.source.generator_count());
        let inv = AbHom::new(self.target.clone(), self.source.clone(), m)?;
        // inv is a two-sided inverse exactly when self is an isomorphism.
        if !inv.compose(self).equals(&AbHom::identity(&self.source)) {
            return Err(EngineError::validation("hom is not invertible"));
        }
        Ok(inv)
    }

    /// Kernel as a group with its inclusion into the source.
    pub fn kernel(&self) -> (FgAbGroup, AbHom) {
        // Lattice of x with self(x) in target relations.
        let z = preimage_lattice(&self.matrix, &self.target.relation_lattice());
        // Relations among these kernel generators: those combos landing in
        // the source relation lattice.
        let rel_in_z = preimage_lattice(&z, &self.source.relation_lattice());
        let group = FgAbGroup::from_relations(rel_in_z.transpose());
        let incl = AbHom {
            source: group.clone(),
            target: self.source.clone(),
            matrix: z,
        };
        (group, incl)
    }

    /// Cokernel as a group with the projection from the target.
    pub fn cokernel(&self) -> (FgAbGroup, AbHom) {
        let combined = self.matrix.hconcat(&self.target.relation_lattice());
        let group = FgAbGroup::from_relations(combined.transpose());
        let proj = AbHom {
            source: self.target.clone(),
            target: group.clone(),
            matrix: IntMatrix::identity(self.target.generator_count()),
        };
        (group, proj)
    }
}

/// The group `Hom(A, B)` of homomorphisms between two presented groups,
/// with an explicit basis of representing matrices.
pub struct HomGroup {
    pub group: FgAbGroup,
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    /// One matrix (flattened column-major by basis index) per generator of `group`.
    pub basis: Vec<IntMatrix>,
    flat_basis: IntMatrix,
    flat_degenerate: IntMatrix,
}

/// Compute Hom(A, B) subject to extra Z-linear constraints on the matrix
/// entries. Each constraint is a pair (C, j0) meaning: rows of C express
/// linear conditions on the flattened matrix entries that must land in the
/// lattice `deg_lattice` columns... Constraints arrive instead as closures
/// below; see `hom_group_constrained`.
pub fn hom_group(a: &FgAbGroup, b: &FgAbGroup) -> HomGroup {
    hom_group_constrained(a, b, &[])
}

/// Hom(A, B) cut out by additional constraints: each constraint maps a
/// candidate matrix H (s source gens, t target gens, flattened row-major)
/// to a vector that must vanish in B (i.e., lie in B's relation lattice).
/// Constraints must be Z-linear in the entries of H; they are supplied as
/// explicit matrices acting on the flattened entries.
pub fn hom_group_constrained(
    a: &FgAbGroup,
    b: &FgAbGroup,
    extra: &[(IntMatrix, FgAbGroup)],
) -> HomGroup {
    let s = a.generator_count();
    let t = b.generator_count();
    let n = s * t; // unknowns: H entries, flattened row-major (i*s + j)

    // Well-definedness: for each source relation r, H * r^T must lie in
    // B's relation lattice. Stack all conditions into one map and take the
    // preimage lattice of the product of relation lattices.
    let mut cond_rows = 0;
    let rel_a = a.relations();
    cond_rows += rel_a.rows * t;
    for (c, _) in extra {
        cond_rows += c.rows;
    }
    let mut cond = IntMatrix::zeros(cond_rows, n);
    let mut lat_blocks: Vec<(usize, IntMatrix)> = Vec::new(); // (row offset, lattice)
    let mut off = 0;
    for ri in 0..rel_a.rows {
        // (H * rel_row^T)_i = sum_j H[i][j] * rel[ri][j]
        for i in 0..t {
            for j in 0..s {
                cond[(off + i, i * s + j)] = rel_a[(ri, j)].clone();
            }
        }
        lat_blocks.push((off, b.relation_lattice()));
        off += t;
    }
    for (c, g) in extra {
        for i in 0..c.rows {
            for j in 0..n {
                cond[(off + i, j)] = c[(i, j)].clone();
            }
        }
        lat_blocks.push((off, g.relation_lattice()));
        off += c.rows;
    }

    // Block-diagonal lattice for the stacked conditions.
    let lat_cols: usize = lat_blocks.iter().map(|(_, l)| l.cols).sum();
    let mut lat = IntMatrix::zeros(cond_rows, lat_cols);
    let mut coff = 0;
    for (roff, l) in &lat_blocks {
        for i in 0..l.rows {
            for j in 0..l.cols {
                lat[(roff + i, coff + j)] = l[(i, j)].clone();
            }
        }
        coff += l.cols;
    }

    let valid = preimage_lattice(&cond, &lat); // columns: valid flattened H

    // Degenerate homs: generator j maps into B's relation lattice for all j.
    let bl = b.relation_lattice();
    let mut deg_cols = Vec::new();
    for j in 0..s {
        for k in 0..bl.cols {
            let mut flat = vec![BigInt::zero(); n];
            for i in 0..t {
                flat[i * s + j] = bl[(i, k)].clone();
            }
            deg_cols.push(flat);
        }
    }
    let deg = lattice_basis(&IntMatrix::from_cols(deg_cols, n));

    // Hom group = valid / degenerate, in coordinates of the valid basis.
    let mut rel_rows = Vec::new();
    for j in 0..deg.cols {
        let coords = solve_linear(&valid, &deg.col(j))
            .expect("dimension")
            .expect("degenerate homs lie in the valid lattice");
        rel_rows.push(coords);
    }
    let rel = if rel_rows.is_empty() {
        IntMatrix::zeros(0, valid.cols)
    } else {
        IntMatrix::from_big_rows(rel_rows)
    };
    let group = FgAbGroup::from_relations(rel);
    let basis: Vec<IntMatrix> = (0..valid.cols)
        .map(|j| {
            let flat = valid.col(j);
            let mut m = IntMatrix::zeros(t, s);
            for i in 0..t {
                for jj in 0..s {
                    m[(i, jj)] = flat[i * s + jj].clone();
                }
            }
            m
        })
        .collect();
    HomGroup {
        group,
        source: a.clone(),
        target: b.clone(),
        basis,
        flat_basis: valid,
        flat_degenerate: deg,
    }
}

impl HomGroup {
    /// Coordinates of a concrete hom matrix in the HomGroup basis.
    pub fn coords_of(&self, h: &IntMatrix) -> Option<Vec<BigInt>> {
        let s = self.source.generator_count();
        let t = self.target.generator_count();
        if h.rows != t || h.cols != s {
            return None;
        }
        let mut flat = vec![BigInt::zero(); s * t];
        for i in 0..t {
            for j in 0..s {
                flat[i * s + j] = h[(i, j)].clone();
            }
        }
        solve_modulo(&self.flat_basis, &flat, &self.flat_degenerate)
    }

    /// The hom matrix represented by coordinates in the HomGroup basis.
    pub fn matrix_of(&self, coords: &[BigInt]) -> IntMatrix {
        let s = self.source.generator_count();
        let t = self.target.generator_count();
        let mut m = IntMatrix::zeros(t, s);
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for i in 0..t {
                for j in 0..s {
                    let add = &self.basis[k][(i, j)] * c;
                    m[(i, j)] += add;
                }
            }
        }
        m
    }
}

/// Kernel of a block system: `{ x in ⊕ sources : Σ L_k x ≡ 0 }` style
/// computations are assembled by callers from `AbHom::kernel` on a summed
/// hom; this helper builds the direct-sum hom from a row of blocks.
pub fn block_hom(
    sources: &[&FgAbGroup],
    target: &FgAbGroup,
    blocks: &[Option<&IntMatrix>],
) -> AbHom {
    assert_eq!(sources.len(), blocks.len());
    let total: usize = sources.iter().map(|g| g.generator_count()).sum();
    let mut m = IntMatrix::zeros(target.generator_count(), total);
    let mut off = 0;
    for (src, blk) in sources.iter().zip(blocks.iter()) {
        if let Some(b) = blk {
            assert_eq!(b.rows, target.generator_count());
            assert_eq!(b.cols, src.generator_count());
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(i, off + j)] = b[(i, j)].clone();
                }
            }
        }
        off += src.generator_count();
    }
    let source = FgAbGroup::direct_sum(sources);
    AbHom::new_unchecked(source, target.clone(), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factors_canonical() {
        // Z^2 / <(2,0),(0,4)> = Z/2 + Z/4
        let g = FgAbGroup::new(2, vec![vec![2, 0], vec![0, 4]]);
        let f: Vec<String> = g.invariant_factors().iter().map(|x| x.to_string()).collect();
        assert_eq!(f, vec!["2", "4"]);
        // A messier presentation of the same group.
        let h = FgAbGroup::new(3, vec![vec![2, 0, 0], vec![0, 4, 0], vec![0, 0, 1]]);
        assert_eq!(g, h);
    }

    #[test]
    fn element_equality_mod_relations() {
        let g = FgAbGroup::cyclic(3);
        assert!(g.elements_equal(&[BigInt::from(1)], &[BigInt::from(4)]));
        assert!(!g.elements_equal(&[BigInt::from(1)], &[BigInt::from(2)]));
    }

    #[test]
    fn enumerate_z2_sum_z3() {
        let g = FgAbGroup::new(2, vec![vec![2, 0], vec![0, 3]]);
        let els = g.elements().unwrap();
        assert_eq!(els.len(), 6);
        // indices are consistent with enumeration order
        for (i, e) in els.iter().enumerate() {
            assert_eq!(g.element_index(e).unwrap(), i);
        }
    }

    #[test]
    fn hom_well_definedness() {
        let z2 = FgAbGroup::cyclic(2);
        let z4 = FgAbGroup::cyclic(4);
        // Z/2 -> Z/4 by 1 -> 2 is fine; 1 -> 1 is not.
        assert!(AbHom::new(z2.clone(), z4.clone(), IntMatrix::from_rows(vec![vec![2]])).is_ok());
        assert!(AbHom::new(z2.clone(), z4.clone(), IntMatrix::from_rows(vec![vec![1]])).is_err());
    }

    #[test]
    fn kernel_cokernel_times_two() {
        let z = FgAbGroup::free(1);
        let h = AbHom::new(z.clone(), z.clone(), IntMatrix::from_rows(vec![vec![2]])).unwrap();
        let (k, _) = h.kernel();
        assert!(k.is_trivial());
        let (c, _) = h.cokernel();
        assert_eq!(c, FgAbGroup::cyclic(2));
    }

    #[test]
    fn iso_detection() {
        let z6 = FgAbGroup::cyclic(6);
        let g = FgAbGroup::new(2, vec![vec![2, 0], vec![0, 3]]);
        // Z/2 + Z/3 -> Z/6 by (1,0) -> 3, (0,1) -> 2 is an isomorphism.
        let h = AbHom::new(g, z6, IntMatrix::from_rows(vec![vec![3, 2]])).unwrap();
        assert!(h.is_isomorphism());
        let inv = h.inverse().unwrap();
        assert!(inv.compose(&h).equals(&AbHom::identity(&h.source)));
    }

    #[test]
    fn hom_group_z2_to_z4() {
        let z2 = FgAbGroup::cyclic(2);
        let z4 = FgAbGroup::cyclic(4);
        let hg = hom_group(&z2, &z4);
        assert_eq!(hg.group, FgAbGroup::cyclic(2));
    }

    #[test]
    fn hom_group_free_to_torsion() {
        let z = FgAbGroup::free(1);
        let z6 = FgAbGroup::cyclic(6);
        assert_eq!(hom_group(&z, &z6).group, FgAbGroup::cyclic(6));
        assert_eq!(hom_group(&z6, &z).group, FgAbGroup::zero());
    }
}
