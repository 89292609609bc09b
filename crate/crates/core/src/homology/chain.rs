//! Augmented simplicial chain complexes with boundary matrices over a generic scalar.

use num_traits::{One, Zero};

use super::linalg::{
    rank_over_field, smith_invariants, FieldScalar, IntegerScalar, Matrix, Overflow,
};
use super::profile::{AbelianGroup, HomologyProfile};
use crate::complex::{Simplex, SimplicialComplex};

/// The augmented chain complex `... → C_1 → C_0 → C_{-1} = Z` of a simplicial complex.
///
/// Bases are the faces of each dimension in lexicographic order. The face
/// omitting the `j`-th vertex (0-based, sorted order) carries sign `(-1)^j`.
#[derive(Clone, Debug)]
pub struct ChainComplex<T> {
    /// `bases[d + 1]` lists the `d`-faces.
    bases: Vec<Vec<Simplex>>,
    /// `boundaries[d]` is `∂_d : C_d → C_{d-1}` for `d ≥ 0`, shape `|C_{d-1}| × |C_d|`.
    boundaries: Vec<Matrix<T>>,
}

impl<T: Clone + Zero + One + std::ops::Neg<Output = T>> ChainComplex<T> {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let bases = k.faces_by_dimension();
        let mut boundaries = Vec::new();
        for d in 1..bases.len() {
            let (lower, upper) = (&bases[d - 1], &bases[d]);
            let mut matrix = Matrix::zeros(lower.len(), upper.len());
            for (col, face) in upper.iter().enumerate() {
                for (j, v) in face.iter().enumerate() {
                    let row = lower
                        .binary_search(&face.without(v))
                        .expect("boundary face present in a simplicial complex");
                    let sign = if j % 2 == 0 { T::one() } else { -T::one() };
                    matrix.set(row, col, sign);
                }
            }
            boundaries.push(matrix);
        }
        ChainComplex { bases, boundaries }
    }

    /// Faces of dimension `d`.
    pub fn basis(&self, d: isize) -> &[Simplex] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.bases.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// `∂_d`, or `None` outside `0..=top`.
    pub fn boundary(&self, d: isize) -> Option<&Matrix<T>> {
        usize::try_from(d).ok().and_then(|i| self.boundaries.get(i))
    }

    /// Top dimension carrying chains (`-1` for `{∅}`, `-2` for the void complex).
    pub fn top_dimension(&self) -> isize {
        self.bases.len() as isize - 2
    }
}

impl<T: Clone + num_traits::Num + std::ops::Neg<Output = T>> ChainComplex<T> {
    /// Checks `∂_{d-1} ∘ ∂_d = 0` in every degree.
    pub fn boundary_squares_to_zero(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|pair| pair[0].mul(&pair[1]).is_zero())
    }
}

impl<T: IntegerScalar> ChainComplex<T> {
    /// Reduced integer homology via Smith normal form of every boundary map.
    pub fn reduced_homology(&self) -> Result<HomologyProfile, Overflow> {
        let invariants: Vec<Vec<T>> = self
            .boundaries
            .iter()
            .map(smith_invariants)
            .collect::<Result<_, _>>()?;
        let mut profile = HomologyProfile::trivial();
        for d in -1..=self.top_dimension() {
            let chains = self.basis(d).len();
            let rank_out = usize::try_from(d)
                .ok()
                .and_then(|i| invariants.get(i))
                .map_or(0, Vec::len);
            let incoming = invariants.get((d + 1) as usize);
            let rank_in = incoming.map_or(0, Vec::len);
            let torsion: Vec<u64> = incoming
                .into_iter()
                .flatten()
                .filter(|x| !x.is_one())
                .map(|x| x.to_u64().expect("torsion coefficient exceeds u64"))
                .collect();
            profile.add(d, &AbelianGroup::new(chains - rank_out - rank_in, torsion));
        }
        Ok(profile)
    }
}

impl<F: FieldScalar + std::ops::Neg<Output = F>> ChainComplex<F> {
    /// Reduced Betti numbers over the field `F`, as a free profile.
    pub fn reduced_betti(&self) -> HomologyProfile {
        let ranks: Vec<usize> = self.boundaries.iter().map(rank_over_field).collect();
        let mut profile = HomologyProfile::trivial();
        for d in -1..=self.top_dimension() {
            let rank_out = usize::try_from(d)
                .ok()
                .and_then(|i| ranks.get(i))
                .copied()
                .unwrap_or(0);
            let rank_in = ranks.get((d + 1) as usize).copied().unwrap_or(0);
            profile.add(
                d,
                &AbelianGroup::free(self.basis(d).len() - rank_out - rank_in),
            );
        }
        profile
    }
}
