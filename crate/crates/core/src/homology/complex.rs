//! Simplicial complexes and reduced homology.

use std::collections::HashMap;

use super::field::{rank, FieldSpec, SparseMatrix};
use crate::monomial::MonomialIdeal;
use crate::varset::{graded_cmp, VarSet};

/// A simplicial complex given by its facets.
///
/// The void complex has no faces at all; the irrelevant complex has only
/// the empty face. They have different reduced homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: VarSet,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    pub fn void(ground: VarSet) -> Self {
        SimplicialComplex { ground, facets: Vec::new() }
    }

    pub fn irrelevant(ground: VarSet) -> Self {
        SimplicialComplex { ground, facets: vec![VarSet::EMPTY] }
    }

    /// Downward closure of `generators`, which must lie in `ground`.
    pub fn from_facets(ground: VarSet, generators: impl IntoIterator<Item = VarSet>) -> Self {
        let mut gens: Vec<VarSet> = generators.into_iter().collect();
        debug_assert!(gens.iter().all(|f| f.is_subset(ground)));
        gens.sort_by(|a, b| graded_cmp(b, a));
        gens.dedup();
        let mut facets: Vec<VarSet> = Vec::new();
        for f in gens {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { ground, facets }
    }

    pub fn ground(&self) -> VarSet {
        self.ground
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [VarSet::EMPTY]
    }

    pub fn contains(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Dimension; `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Every face, sorted by size then lexicographically.
    pub fn faces(&self) -> Vec<VarSet> {
        let mut out = Vec::new();
        if self.is_void() {
            return out;
        }
        let mut stack = vec![VarSet::EMPTY];
        while let Some(face) = stack.pop() {
            out.push(face);
            let room = self
                .facets
                .iter()
                .filter(|f| face.is_subset(**f))
                .fold(VarSet::EMPTY, |acc, f| acc.union(*f));
            for v in room.difference(face).iter().filter(|&v| v >= face.bound()) {
                let next = face.with(v);
                if self.contains(next) {
                    stack.push(next);
                }
            }
        }
        out.sort_by(graded_cmp);
        out
    }
}

/// `K^b(M) = { a ⊆ b : x^b / x^a ∈ M }` for square-free `M`.
///
/// Its facets are `b \ g` for the generators `g` dividing `x^b`.
pub fn upper_koszul_complex(m: &MonomialIdeal, b: VarSet) -> SimplicialComplex {
    let facets: Vec<VarSet> = m
        .generators()
        .iter()
        .filter(|g| g.0.is_subset(b))
        .map(|g| b.difference(g.0))
        .collect();
    if facets.is_empty() {
        SimplicialComplex::void(b)
    } else {
        SimplicialComplex::from_facets(b, facets)
    }
}

/// Ranks of reduced homology `H̃_k` for `k = -1 ..= dim`; entry `i` of the
/// result is `H̃_{i-1}`. The void complex gives an empty list.
pub fn reduced_homology_ranks(k: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    let Some(dim) = k.dim() else { return Vec::new() };
    let levels = (dim + 2) as usize;
    let mut by_dim: Vec<Vec<VarSet>> = vec![Vec::new(); levels];
    for f in k.faces() {
        by_dim[f.len()].push(f);
    }
    let index: Vec<HashMap<VarSet, usize>> = by_dim
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    // boundary_rank[s]: rank of the map from size-s faces to size-(s-1) faces
    let mut boundary_rank = vec![0usize; levels + 1];
    for s in 1..levels {
        let mut m = SparseMatrix::new(by_dim[s - 1].len());
        for f in &by_dim[s] {
            let col = f
                .iter()
                .enumerate()
                .map(|(j, v)| (index[s - 1][&f.without(v)], if j % 2 == 0 { 1 } else { -1 }))
                .collect();
            m.push_col(col);
        }
        boundary_rank[s] = rank(&m, field);
    }
    (0..levels)
        .map(|s| by_dim[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn set(v: &[usize]) -> VarSet {
        v.iter().copied().collect()
    }

    const FIELDS: [FieldSpec; 3] = [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Rationals];

    #[test]
    fn koszul_of_two_disjoint_edges() {
        let m = MonomialIdeal::new(4, [Monomial::from_vars([0, 2]), Monomial::from_vars([1, 3])]).unwrap();
        let k = upper_koszul_complex(&m, VarSet::full(4));
        assert_eq!(k.facets(), &[set(&[0, 2]), set(&[1, 3])]);
        // direct membership over all 16 subsets
        let brute: Vec<VarSet> = {
            let mut v: Vec<VarSet> = VarSet::full(4)
                .subsets()
                .filter(|a| m.contains(Monomial(VarSet::full(4).difference(*a))))
                .collect();
            v.sort_by(graded_cmp);
            v
        };
        assert_eq!(k.faces(), brute);
        for f in FIELDS {
            assert_eq!(reduced_homology_ranks(&k, f), vec![0, 1, 0]);
        }
    }

    #[test]
    fn void_and_irrelevant() {
        let m = MonomialIdeal::new(4, [Monomial::from_vars([0, 2]), Monomial::from_vars([1, 3])]).unwrap();
        let k = upper_koszul_complex(&m, set(&[0, 2]));
        assert!(k.is_irrelevant());
        assert_eq!(reduced_homology_ranks(&k, FieldSpec::GF2), vec![1]);
        let v = upper_koszul_complex(&m, set(&[0, 1]));
        assert!(v.is_void());
        assert!(v.faces().is_empty());
        assert!(reduced_homology_ranks(&v, FieldSpec::GF2).iter().all(|&r| r == 0));
    }

    #[test]
    fn circle_and_simplex() {
        let triangle = SimplicialComplex::from_facets(VarSet::full(3), [set(&[0, 1]), set(&[1, 2]), set(&[0, 2])]);
        let simplex = SimplicialComplex::from_facets(VarSet::full(3), [VarSet::full(3), set(&[0, 1])]);
        assert_eq!(simplex.facets(), &[VarSet::full(3)]);
        for f in FIELDS {
            assert_eq!(reduced_homology_ranks(&triangle, f), vec![0, 0, 1]);
            assert!(reduced_homology_ranks(&simplex, f).iter().all(|&r| r == 0));
        }
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let facets = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ];
        let k = SimplicialComplex::from_facets(VarSet::full(6), facets.iter().map(|f| set(f)));
        assert_eq!(k.faces().len(), 1 + 6 + 15 + 10);
        assert_eq!(reduced_homology_ranks(&k, FieldSpec::Rationals), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology_ranks(&k, FieldSpec::GF3), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology_ranks(&k, FieldSpec::GF2), vec![0, 0, 1, 1]);
    }
}
