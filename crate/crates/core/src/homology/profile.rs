//! Graded finitely generated abelian groups.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_1 | t_2 | ... | t_k`, each `t_i > 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Builds a group from arbitrary cyclic orders; normalizes to invariant factors.
    pub fn new(rank: usize, cyclic_orders: Vec<u64>) -> Self {
        AbelianGroup {
            rank,
            torsion: invariant_factors(cyclic_orders),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = self.torsion.clone();
        orders.extend_from_slice(&other.torsion);
        AbelianGroup::new(self.rank + other.rank, orders)
    }

    /// `self^k`.
    pub fn power(&self, k: usize) -> AbelianGroup {
        let mut orders = Vec::with_capacity(self.torsion.len() * k);
        for _ in 0..k {
            orders.extend_from_slice(&self.torsion);
        }
        AbelianGroup::new(self.rank * k, orders)
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = Vec::new();
        for _ in 0..other.rank {
            orders.extend_from_slice(&self.torsion);
        }
        for _ in 0..self.rank {
            orders.extend_from_slice(&other.torsion);
        }
        for a in &self.torsion {
            for b in &other.torsion {
                orders.push(a.gcd(b));
            }
        }
        AbelianGroup::new(self.rank * other.rank, orders)
    }

    /// `Tor(self, other)`.
    pub fn tor(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = Vec::new();
        for a in &self.torsion {
            for b in &other.torsion {
                orders.push(a.gcd(b));
            }
        }
        AbelianGroup::new(0, orders)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Canonical invariant-factor form of a list of cyclic orders; entries `<= 1` vanish.
pub fn invariant_factors(orders: Vec<u64>) -> Vec<u64> {
    // prime -> exponents
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for order in orders.into_iter().filter(|&o| o > 1) {
        for (p, e) in factorize(order) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for (p, mut exps) in by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        // largest exponent goes to the last invariant factor
        for (slot, e) in exps.into_iter().enumerate() {
            factors[len - 1 - slot] *= p.pow(e);
        }
    }
    factors
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KunnethError {
    #[error("Künneth with torsion in more than one factor is not supported")]
    TorsionInSeveralFactors,
}

/// Homology by degree; only nonzero degrees are stored. Degree `-1` appears
/// only in reduced homology of the empty-simplex complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyProfile {
    groups: BTreeMap<isize, AbelianGroup>,
}

impl HomologyProfile {
    /// The zero profile (reduced homology of a contractible space).
    pub fn trivial() -> Self {
        HomologyProfile::default()
    }

    /// Reduced homology of `S^k`.
    pub fn sphere(k: isize) -> Self {
        HomologyProfile::trivial().with(k, AbelianGroup::free(1))
    }

    /// Profile with free groups of the given ranks, listed as `(degree, rank)`.
    pub fn from_ranks<I: IntoIterator<Item = (isize, usize)>>(ranks: I) -> Self {
        let mut p = HomologyProfile::trivial();
        for (d, r) in ranks {
            p.add(d, &AbelianGroup::free(r));
        }
        p
    }

    #[must_use]
    pub fn with(mut self, degree: isize, group: AbelianGroup) -> Self {
        self.add(degree, &group);
        self
    }

    /// Adds `group` as a direct summand in `degree`.
    pub fn add(&mut self, degree: isize, group: &AbelianGroup) {
        if group.is_zero() {
            return;
        }
        let merged = self
            .groups
            .get(&degree)
            .map_or_else(|| group.clone(), |g| g.direct_sum(group));
        self.groups.insert(degree, merged);
    }

    pub fn group(&self, degree: isize) -> AbelianGroup {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn rank(&self, degree: isize) -> usize {
        self.groups.get(&degree).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, degree: isize) -> &[u64] {
        self.groups
            .get(&degree)
            .map_or(&[], |g| g.torsion.as_slice())
    }

    /// Nonzero degrees with their groups, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (isize, &AbelianGroup)> {
        self.groups.iter().map(|(d, g)| (*d, g))
    }

    pub fn degrees(&self) -> Vec<isize> {
        self.groups.keys().copied().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.values().all(AbelianGroup::is_free)
    }

    pub fn min_degree(&self) -> Option<isize> {
        self.groups.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<isize> {
        self.groups.keys().next_back().copied()
    }

    /// First degree carrying torsion, with its coefficients.
    pub fn first_torsion(&self) -> Option<(isize, Vec<u64>)> {
        self.groups
            .iter()
            .find(|(_, g)| !g.is_free())
            .map(|(d, g)| (*d, g.torsion.clone()))
    }

    /// True if free and nonzero only in degree `d` (the trivial profile counts).
    pub fn free_and_concentrated_in(&self, d: isize) -> bool {
        self.is_torsion_free() && self.groups.keys().all(|&k| k == d)
    }

    /// Degreewise shift by `k`, as for a `k`-fold suspension.
    #[must_use]
    pub fn shifted(&self, k: isize) -> Self {
        HomologyProfile {
            groups: self
                .groups
                .iter()
                .map(|(d, g)| (d + k, g.clone()))
                .collect(),
        }
    }

    #[must_use]
    pub fn direct_sum(&self, other: &HomologyProfile) -> Self {
        let mut out = self.clone();
        for (d, g) in other.iter() {
            out.add(d, g);
        }
        out
    }

    /// Reduced Künneth formula for `X ∧ Y`. Tor terms vanish because at most
    /// one side may carry torsion.
    pub fn smash(&self, other: &HomologyProfile) -> Result<HomologyProfile, KunnethError> {
        if !self.is_torsion_free() && !other.is_torsion_free() {
            return Err(KunnethError::TorsionInSeveralFactors);
        }
        let mut out = HomologyProfile::trivial();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                out.add(i + j, &a.tensor(b));
            }
        }
        Ok(out)
    }

    /// Reduced homology of `X × Y`: `H̃(X) ⊕ H̃(Y) ⊕ H̃(X ∧ Y)`.
    pub fn product(&self, other: &HomologyProfile) -> Result<HomologyProfile, KunnethError> {
        Ok(self.direct_sum(other).direct_sum(&self.smash(other)?))
    }

    /// Reduced Euler characteristic `Σ (-1)^d rank_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|(d, g)| {
                if d.rem_euclid(2) == 0 {
                    g.rank as i64
                } else {
                    -(g.rank as i64)
                }
            })
            .sum()
    }

    /// Betti numbers of the unreduced homology of a nonempty space, indexed from degree 0.
    pub fn poincare_coefficients(&self) -> Vec<usize> {
        let top = self.max_degree().unwrap_or(0).max(0) as usize;
        let mut coeffs = vec![0; top + 1];
        coeffs[0] = 1;
        for (d, g) in self.iter() {
            if d >= 0 {
                coeffs[d as usize] += g.rank;
            }
        }
        coeffs
    }

    /// Poincaré polynomial of the unreduced homology, e.g. `1 + 2t^3 + t^6`.
    pub fn poincare_polynomial(&self) -> String {
        let mut terms = Vec::new();
        for (d, &c) in self.poincare_coefficients().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (d, 1) => format!("t^{d}"),
                (d, c) => format!("{c}t^{d}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.iter().map(|(d, g)| format!("H{d}={g}")).collect();
        f.write_str(&parts.join(", "))
    }
}
