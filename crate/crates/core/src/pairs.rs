//! Pair classes `(X_i, A_i)` for polyhedral products.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::HomologyProfile;

/// One space `A_i` of a pair `(CA_i, A_i)`, known through its reduced homology
/// plus attested homotopy-level flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomSpec {
    pub name: String,
    /// Reduced homology of `A_i`.
    pub homology: HomologyProfile,
    /// Attested: `ΣA_i` is a finite type wedge of spheres (`ΣA_i ∈ 𝒲`).
    pub suspension_in_w: bool,
    /// Attested: `A_i` is itself a suspension (enables half-smash splitting).
    pub is_suspension: bool,
}

impl AtomSpec {
    /// `S^k` with all flags justified (`k >= 1` is a suspension; `ΣS^k` is a sphere).
    pub fn sphere(k: usize) -> Self {
        AtomSpec {
            name: format!("S{k}"),
            homology: HomologyProfile::sphere(k as isize),
            suspension_in_w: true,
            is_suspension: k >= 1,
        }
    }

    /// Sphere dimension when the attested homology is that of a sphere.
    pub fn sphere_dimension(&self) -> Option<usize> {
        let degrees = self.homology.degrees();
        match degrees.as_slice() {
            [d] if *d >= 0 && self.homology.rank(*d) == 1 && self.homology.is_torsion_free() => {
                Some(*d as usize)
            }
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairKind {
    /// `(D², S¹)`.
    MomentAngle,
    /// `(D¹, S⁰)`.
    Real,
    /// `(CA_i, A_i)` with a per-vertex atom.
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("general pair class has {got} atoms but the complex has {m} vertices")]
    AtomCount { got: usize, m: usize },
    #[error("general pair class needs per-vertex atoms")]
    MissingAtoms,
}

/// The pairs `(X_i, A_i)` of a polyhedral product; `X_i = CA_i` throughout.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairClass {
    pub kind: PairKind,
    /// Per-vertex atoms, only for [`PairKind::General`].
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub atoms: Vec<AtomSpec>,
}

impl PairClass {
    pub fn moment_angle() -> Self {
        PairClass {
            kind: PairKind::MomentAngle,
            atoms: Vec::new(),
        }
    }

    pub fn real() -> Self {
        PairClass {
            kind: PairKind::Real,
            atoms: Vec::new(),
        }
    }

    pub fn general(atoms: Vec<AtomSpec>) -> Self {
        PairClass {
            kind: PairKind::General,
            atoms,
        }
    }

    /// Checks the atom list against the vertex count.
    pub fn validate(&self, m: usize) -> Result<(), PairError> {
        match self.kind {
            PairKind::General if self.atoms.is_empty() => Err(PairError::MissingAtoms),
            PairKind::General if self.atoms.len() != m => Err(PairError::AtomCount {
                got: self.atoms.len(),
                m,
            }),
            _ => Ok(()),
        }
    }

    /// `A_i` for vertex `i` (1-based).
    pub fn atom(&self, i: usize) -> AtomSpec {
        match self.kind {
            PairKind::MomentAngle => AtomSpec::sphere(1),
            PairKind::Real => AtomSpec::sphere(0),
            PairKind::General => self.atoms[i - 1].clone(),
        }
    }

    /// Every `ΣA_i ∈ 𝒲` flag is attested.
    pub fn all_suspensions_in_w(&self, m: usize) -> bool {
        (1..=m).all(|i| self.atom(i).suspension_in_w)
    }

    pub fn label(&self) -> &'static str {
        match self.kind {
            PairKind::MomentAngle => "moment-angle",
            PairKind::Real => "real",
            PairKind::General => "general",
        }
    }
}

impl Default for PairClass {
    fn default() -> Self {
        PairClass::moment_angle()
    }
}
