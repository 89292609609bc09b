//! Hilton–Milnor expansion of `Ω(S^{n_1} ∨ … ∨ S^{n_k})` via Lyndon words (basic products).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum HiltonMilnorError {
    #[error("Hilton–Milnor needs simply connected spheres: S^{0} has dimension < 2")]
    SphereTooSmall(usize),
    #[error("cutoff {cutoff} is below the generator dimension {needed}")]
    CutoffTooLow { cutoff: usize, needed: usize },
    #[error("empty wedge: no generators")]
    NoGenerators,
}

/// `multiplicity` copies of `ΩS^{sphere_dim}` coming from basic products of the given weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LoopFactor {
    pub weight: usize,
    pub sphere_dim: usize,
    pub multiplicity: usize,
}

/// All Lyndon words over `{0, …, k-1}` of length `1..=max_len` (Duval's algorithm, lex order).
pub fn lyndon_words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || max_len == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    loop {
        out.push(w.clone());
        // extend periodically to max_len, then increment the last non-maximal letter
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => return out,
        }
    }
}

/// Dimension of the sphere indexed by a basic product: `1 + Σ (n_letter − 1)`.
pub fn bracket_dimension(word: &[usize], dims: &[usize]) -> usize {
    1 + word.iter().map(|&l| dims[l] - 1).sum::<usize>()
}

/// `ΩΣ(⋁ S^{n_i - 1}) ≃ ∏_w ΩS^{dim w}` over Lyndon words `w`, truncated at `cutoff`.
/// Factors are grouped by `(weight, sphere dimension)` and ordered by weight, then dimension.
pub fn hilton_milnor(dims: &[usize], cutoff: usize) -> Result<Vec<LoopFactor>, HiltonMilnorError> {
    let (Some(&min), Some(&max)) = (dims.iter().min(), dims.iter().max()) else {
        return Err(HiltonMilnorError::NoGenerators);
    };
    if min < 2 {
        return Err(HiltonMilnorError::SphereTooSmall(min));
    }
    if cutoff < max {
        return Err(HiltonMilnorError::CutoffTooLow {
            cutoff,
            needed: max,
        });
    }
    let max_len = (cutoff - 1) / (min - 1);
    let mut groups: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for word in lyndon_words(dims.len(), max_len) {
        let d = bracket_dimension(&word, dims);
        if d <= cutoff {
            *groups.entry((word.len(), d)).or_default() += 1;
        }
    }
    Ok(groups
        .into_iter()
        .map(|((weight, sphere_dim), multiplicity)| LoopFactor {
            weight,
            sphere_dim,
            multiplicity,
        })
        .collect())
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut result, mut p) = (n, 1i64, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Necklace number `M(k, w) = (1/w) Σ_{d | w} μ(d) k^{w/d}`: Lyndon words of length `w` on `k` letters.
pub fn necklace(k: usize, w: usize) -> u64 {
    if w == 0 {
        return 0;
    }
    let total: i128 = (1..=w)
        .filter(|d| w.is_multiple_of(*d))
        .map(|d| mobius(d) as i128 * (k as i128).pow((w / d) as u32))
        .sum();
    (total / w as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(weight: usize, sphere_dim: usize, multiplicity: usize) -> LoopFactor {
        LoopFactor {
            weight,
            sphere_dim,
            multiplicity,
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(
            hilton_milnor(&[3, 3], 7).unwrap(),
            vec![f(1, 3, 2), f(2, 5, 1), f(3, 7, 2)]
        );
        assert_eq!(hilton_milnor(&[2], 9).unwrap(), vec![f(1, 2, 1)]);
        assert_eq!(
            hilton_milnor(&[2, 2, 2], 3).unwrap(),
            vec![f(1, 2, 3), f(2, 3, 3)]
        );
        assert_eq!(
            hilton_milnor(&[1, 3], 5),
            Err(HiltonMilnorError::SphereTooSmall(1))
        );
        assert_eq!(
            hilton_milnor(&[3, 5], 4),
            Err(HiltonMilnorError::CutoffTooLow {
                cutoff: 4,
                needed: 5
            })
        );
    }

    #[test]
    fn duval_counts_match_necklaces() {
        let words = lyndon_words(3, 6);
        for w in 1..=6 {
            assert_eq!(
                words.iter().filter(|x| x.len() == w).count() as u64,
                necklace(3, w)
            );
        }
        assert_eq!(
            (1..=6).map(|w| necklace(2, w)).collect::<Vec<_>>(),
            vec![2, 1, 2, 3, 6, 9]
        );
    }
}
