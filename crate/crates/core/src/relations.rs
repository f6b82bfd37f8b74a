//! The subspace `W_{k,k}` of `V_{k,k}` cut out by the slash relations of
//! `SL_2(O_K)`, and its quotient by the coboundary line
//! `X^k Xb^k - Y^k Yb^k`.

use crate::error::Result;
use crate::linalg::{KMatrix, SubspaceBasis};
use crate::polyspace::{idx, GroupWord};
use crate::quadfield::{Field, QuadElem};

/// Relation words for each field. `w` products are read left to right.
pub fn relation_words(field: Field) -> Vec<&'static str> {
    match field {
        Field::D1 | Field::D3 => vec!["I+S", "I-L", "I+U+U^2", "I+Tw*S*L+(Tw*S*L)^2"],
        Field::D2 => vec!["I+S", "I+U+U^2", "I+S*Tw+Tw*S+Tw^-1*S*Tw*S"],
        Field::D7 => vec!["I+S", "I+U+U^2", "T+S*Tw+Tw*S*T+S*Tw^-1*S*Tw"],
        Field::D11 => {
            vec!["I+S", "I+U+U^2", "T+S*Tw+T*E+S*Tw*E^-1+Tw*S*T+S*Tw^-1*S*Tw"]
        }
    }
}

#[derive(Clone, Debug)]
pub struct RelationSystem {
    pub field: Field,
    pub k: usize,
    pub words: Vec<GroupWord>,
    /// One `(k+1)^2` square block per word, stacked vertically.
    pub stacked_map: KMatrix,
}

impl RelationSystem {
    pub fn blocks(&self) -> usize {
        self.words.len()
    }

    pub fn with_words(field: Field, k: usize, words: Vec<GroupWord>) -> Result<Self> {
        let n = (k + 1) * (k + 1);
        let mut stacked = KMatrix::zeros(field, 0, n);
        for w in &words {
            stacked = stacked.vstack(&w.slash_matrix(field, k)?.to_field());
        }
        Ok(RelationSystem { field, k, words, stacked_map: stacked })
    }

    /// `true` when `v` is annihilated by every word.
    pub fn annihilates(&self, v: &[QuadElem]) -> bool {
        self.stacked_map.mul_vec(v).iter().all(QuadElem::is_zero)
    }
}

pub fn build_relations(field: Field, k: usize) -> RelationSystem {
    let words = relation_words(field)
        .into_iter()
        .map(|w| GroupWord::parse(w).expect("built-in relation word parses"))
        .collect();
    RelationSystem::with_words(field, k, words).expect("built-in relations use available generators")
}

/// Right kernel of `mat` in reduced echelon form.
pub fn kernel(mat: &KMatrix) -> SubspaceBasis {
    mat.kernel()
}

/// The coboundary vector: `1` at `(0,0)`, `-1` at `(k,k)`. Zero when `k = 0`.
pub fn coboundary_vector(field: Field, k: usize) -> Vec<QuadElem> {
    let mut v = vec![QuadElem::zero(field); (k + 1) * (k + 1)];
    if k > 0 {
        v[0] = QuadElem::one(field);
        v[idx(k, k, k)] = QuadElem::from_ints(field, -1, 0);
    }
    v
}

#[derive(Clone, Debug, PartialEq)]
pub struct Wkk {
    pub field: Field,
    pub k: usize,
    pub w: SubspaceBasis,
    /// Representatives of `W / <coboundary>`: the vectors of `W` with zero
    /// `(0,0)` coordinate, which form a complement of the coboundary line.
    pub w_tilde: SubspaceBasis,
    pub contains_coboundary: bool,
}

impl Wkk {
    /// Image of `v` in the quotient representatives: `v - v[0] * coboundary`.
    pub fn reduce_mod_coboundary(&self, v: &[QuadElem]) -> Vec<QuadElem> {
        if !self.contains_coboundary {
            return v.to_vec();
        }
        let cob = coboundary_vector(self.field, self.k);
        v.iter().zip(&cob).map(|(x, c)| x - &(&v[0] * c)).collect()
    }

    pub fn quotient_image(&self, space: &SubspaceBasis) -> SubspaceBasis {
        let reduced = space.vectors.iter().map(|v| self.reduce_mod_coboundary(v)).collect();
        SubspaceBasis::from_spanning(self.field, space.ambient_dim, reduced)
    }
}

pub fn wkk_from_system(system: &RelationSystem) -> Wkk {
    let w = kernel(&system.stacked_map);
    let cob = coboundary_vector(system.field, system.k);
    let contains_coboundary = system.k > 0 && w.contains(&cob);
    let mut out = Wkk { field: system.field, k: system.k, w_tilde: w.clone(), w, contains_coboundary };
    out.w_tilde = out.quotient_image(&out.w);
    out
}

pub fn wkk_basis(field: Field, k: usize) -> Wkk {
    wkk_from_system(&build_relations(field, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyspace::{apply_group_word, PolyKK};

    #[test]
    fn block_counts() {
        for k in 0..=2 {
            assert_eq!(build_relations(Field::D1, k).blocks(), 4);
            assert_eq!(build_relations(Field::D3, k).blocks(), 4);
            assert_eq!(build_relations(Field::D2, k).blocks(), 3);
            assert_eq!(build_relations(Field::D7, k).blocks(), 3);
            assert_eq!(build_relations(Field::D11, k).blocks(), 3);
        }
    }

    #[test]
    fn weight_zero_is_trivial() {
        for field in Field::ALL {
            let w = wkk_basis(field, 0);
            assert_eq!(w.w.dim(), 0);
            assert_eq!(w.w_tilde.dim(), 0);
            assert!(!w.contains_coboundary);
        }
    }

    #[test]
    fn kernel_examples() {
        let f = Field::D1;
        assert_eq!(kernel(&KMatrix::identity(f, 3)).dim(), 0);
        assert_eq!(kernel(&KMatrix::zeros(f, 2, 3)).dim(), 3);
        let m = KMatrix::from_rows(f, vec![vec![QuadElem::one(f), QuadElem::from_ints(f, -1, 0)]]);
        let ker = kernel(&m);
        assert_eq!(ker.vectors, vec![vec![QuadElem::one(f), QuadElem::one(f)]]);
    }

    #[test]
    fn coboundary_and_basis_satisfy_relations() {
        for field in Field::ALL {
            for k in 1..=4 {
                let system = build_relations(field, k);
                let w = wkk_from_system(&system);
                assert!(w.contains_coboundary, "D={} k={k}", field.d());
                assert_eq!(w.w_tilde.dim() + 1, w.w.dim());
                for v in &w.w.vectors {
                    let poly = PolyKK::from_vector(field, k, v);
                    for word in &system.words {
                        assert!(apply_group_word(&poly, word).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn one_plus_s_sign_identity() {
        for field in Field::ALL {
            for k in 1..=4 {
                let w = wkk_basis(field, k);
                for v in &w.w.vectors {
                    for p in 0..=k {
                        for q in 0..=k {
                            let lhs = &v[idx(k, p, q)];
                            let mut rhs = v[idx(k, k - p, k - q)].clone();
                            if (p + q) % 2 == 0 {
                                rhs = -&rhs;
                            }
                            assert_eq!(lhs, &rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reordering_words_keeps_the_kernel() {
        for field in Field::ALL {
            let k = 3;
            let system = build_relations(field, k);
            let mut words = system.words.clone();
            words.reverse();
            let reordered = RelationSystem::with_words(field, k, words).unwrap();
            assert_eq!(kernel(&system.stacked_map), kernel(&reordered.stacked_map));
        }
    }
}
