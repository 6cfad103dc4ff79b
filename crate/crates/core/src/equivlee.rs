//! Equivariant Lee (and, in characteristic 2, Bar-Natan) ranks of periodic
//! links, computed from orbits of the period action on orientations.
//!
//! An orientation is stored as a bitmask: bit `i` set means component `i`
//! is reversed relative to the base orientation.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::EquivError;
use crate::laurent::BiLaurent;
use crate::repcyc::{rep_dimension, totient};

const MAX_COMPONENTS: usize = 30;

/// How the homological degree of an orientation is read off its linking
/// number relative to the base orientation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomDegreeConvention {
    /// `i = 2·(lk(O) − lk(O_0))`.
    #[default]
    TwiceLinkingDifference,
    /// `i = lk(O) − lk(O_0)`.
    LinkingDifference,
}

/// A link with a `Z_m` action permuting its components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicLinkData {
    pub components: usize,
    pub period: u64,
    /// Image of each component (0-based) under a generator of the action.
    pub permutation: Vec<usize>,
    /// Symmetric linking matrix of the base orientation, zero diagonal.
    pub linking: Vec<Vec<i64>>,
    /// Quantum offsets of orientation-reversal pairs, keyed by the
    /// lexicographically least sign string of the pair (e.g. `"+-+"`).
    #[serde(default)]
    pub pair_offsets: BTreeMap<String, i64>,
}

impl PeriodicLinkData {
    /// A knot with period `m`.
    pub fn knot(period: u64) -> Self {
        Self {
            components: 1,
            period,
            permutation: vec![0],
            linking: vec![vec![0]],
            pair_offsets: BTreeMap::new(),
        }
    }

    /// `k` components cyclically permuted by a `Z_k` action, all linking zero.
    pub fn cyclic_unlinked(k: usize) -> Self {
        Self {
            components: k,
            period: k as u64,
            permutation: (0..k).map(|i| (i + 1) % k).collect(),
            linking: vec![vec![0; k]; k],
            pair_offsets: BTreeMap::new(),
        }
    }

    pub fn validate(&self) -> Result<(), EquivError> {
        let k = self.components;
        let bad = |msg: String| Err(EquivError::InvalidData(msg));
        if k == 0 {
            return bad("no components".into());
        }
        if k > MAX_COMPONENTS {
            return Err(EquivError::TooManyComponents(k));
        }
        if self.period == 0 {
            return bad("period must be positive".into());
        }
        if self.permutation.len() != k {
            return bad(format!(
                "permutation has length {}, expected {k}",
                self.permutation.len()
            ));
        }
        let image: BTreeSet<usize> = self.permutation.iter().copied().collect();
        if image.len() != k || image.iter().any(|&x| x >= k) {
            return bad("permutation is not a bijection of the components".into());
        }
        for i in 0..k {
            let mut x = i;
            for _ in 0..self.period {
                x = self.permutation[x];
            }
            if x != i {
                return bad(format!(
                    "the permutation does not have order dividing {}",
                    self.period
                ));
            }
        }
        if self.linking.len() != k || self.linking.iter().any(|row| row.len() != k) {
            return bad(format!("linking matrix must be {k}x{k}"));
        }
        for i in 0..k {
            if self.linking[i][i] != 0 {
                return bad("linking matrix has a nonzero diagonal entry".into());
            }
            for j in 0..k {
                if self.linking[i][j] != self.linking[j][i] {
                    return bad("linking matrix is not symmetric".into());
                }
                let (pi, pj) = (self.permutation[i], self.permutation[j]);
                if self.linking[pi][pj] != self.linking[i][j] {
                    return bad("linking matrix is not invariant under the action".into());
                }
            }
        }
        Ok(())
    }

    /// Whether the action fixes every component.
    pub fn is_trivial_action(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &x)| i == x)
    }

    fn act(&self, mask: u32) -> u32 {
        let mut out = 0;
        for (i, &target) in self.permutation.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out |= 1 << target;
            }
        }
        out
    }

    /// `Σ_{i<j} ε_i ε_j lk_ij`.
    pub fn linking_number(&self, mask: u32) -> i64 {
        let sign = |i: usize| if mask >> i & 1 == 1 { -1 } else { 1 };
        let mut total = 0;
        for i in 0..self.components {
            for j in i + 1..self.components {
                total += sign(i) * sign(j) * self.linking[i][j];
            }
        }
        total
    }

    fn full_mask(&self) -> u32 {
        if self.components == 32 {
            u32::MAX
        } else {
            (1u32 << self.components) - 1
        }
    }

    pub fn sign_string(&self, mask: u32) -> String {
        (0..self.components)
            .map(|i| if mask >> i & 1 == 1 { '-' } else { '+' })
            .collect()
    }
}

/// An orbit of the action on orientations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationOrbit {
    /// Lexicographically least sign string in the orbit.
    pub representative: String,
    pub members: Vec<u32>,
    pub orbit_size: u64,
    /// Order of the isotropy group.
    pub isotropy_d: u64,
    pub hom_degree: i64,
}

/// Orbits of `Z_m` on `{±1}^k`, ordered by representative.
pub fn enumerate_orbits(
    data: &PeriodicLinkData,
    convention: HomDegreeConvention,
) -> Result<Vec<OrientationOrbit>, EquivError> {
    data.validate()?;
    let total = 1usize << data.components;
    let mut seen = vec![false; total];
    let base = data.linking_number(0);
    let mut orbits = Vec::new();
    for start in 0..total as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut members = vec![start];
        seen[start as usize] = true;
        let mut x = data.act(start);
        while x != start {
            seen[x as usize] = true;
            members.push(x);
            x = data.act(x);
        }
        members.sort_unstable();
        let diff = data.linking_number(start) - base;
        let hom_degree = match convention {
            HomDegreeConvention::TwiceLinkingDifference => 2 * diff,
            HomDegreeConvention::LinkingDifference => diff,
        };
        let orbit_size = members.len() as u64;
        let representative = members
            .iter()
            .map(|&m| data.sign_string(m))
            .min()
            .expect("orbit is nonempty");
        orbits.push(OrientationOrbit {
            representative,
            orbit_size,
            isotropy_d: data.period / orbit_size,
            members,
            hom_degree,
        });
    }
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(orbits)
}

fn check_rep(data: &PeriodicLinkData, d: u64, r: u64) -> Result<u64, EquivError> {
    let m = data.period;
    if d == 0 || !m.is_multiple_of(d) {
        return Err(EquivError::NotADivisor { d, m });
    }
    if r != 0 && r.gcd(&m) != 1 {
        return Err(EquivError::BadCharacteristic { r, m });
    }
    Ok(rep_dimension(m, d, r)?)
}

/// Ranks, by homological degree, of the equivariant Lee homology for the
/// irreducible representation attached to the gcd class `d` of `Z_m`
/// (`d = m` is the trivial representation).
pub fn elee_ranks(
    data: &PeriodicLinkData,
    d: u64,
    r: u64,
    convention: HomDegreeConvention,
) -> Result<BTreeMap<i64, u64>, EquivError> {
    let dim = check_rep(data, d, r)?;
    let mut ranks = BTreeMap::new();
    for orbit in enumerate_orbits(data, convention)? {
        if d.is_multiple_of(orbit.isotropy_d) {
            *ranks.entry(orbit.hom_degree).or_insert(0) += dim;
        }
    }
    Ok(ranks)
}

/// Equivariant Lee polynomial for the representation attached to `d`.
///
/// Each pair of orbits `{O, Ō}` contributes `dim · t^h q^s (q + q^{-1})`
/// with `s` taken from `pair_offsets` (default 0).
pub fn elee_poly(
    data: &PeriodicLinkData,
    d: u64,
    r: u64,
    convention: HomDegreeConvention,
) -> Result<BiLaurent, EquivError> {
    let dim = check_rep(data, d, r)?;
    let orbits = enumerate_orbits(data, convention)?;
    let full = data.full_mask();
    let mut out = BiLaurent::zero();
    let mut done: BTreeSet<usize> = BTreeSet::new();
    for (idx, orbit) in orbits.iter().enumerate() {
        if done.contains(&idx) || !d.is_multiple_of(orbit.isotropy_d) {
            continue;
        }
        let reversed = orbit.members[0] ^ full;
        if orbit.members.binary_search(&reversed).is_ok() {
            return Err(EquivError::SelfReverseOrbit(orbit.representative.clone()));
        }
        let partner = orbits
            .iter()
            .position(|o| o.members.binary_search(&reversed).is_ok())
            .expect("reversal of an orientation lies in some orbit");
        done.insert(idx);
        done.insert(partner);
        let key = orbit
            .representative
            .clone()
            .min(orbits[partner].representative.clone());
        let s = data.pair_offsets.get(&key).copied().unwrap_or(0);
        let pair = BiLaurent::lee_pair(s).shift(orbit.hom_degree, 0);
        out += &pair.scale_i64(dim as i64);
    }
    Ok(out)
}

/// Free parts `P_k^{Lee}` for `k = 0..n` of a link with period `p^n`:
/// the equivariant Lee polynomial of the representation of dimension
/// `φ(p^k)` divided by that dimension.
pub fn free_parts(
    data: &PeriodicLinkData,
    p: u64,
    n: u32,
    r: u64,
    convention: HomDegreeConvention,
) -> Result<Vec<BiLaurent>, EquivError> {
    let m = p.pow(n);
    if data.period != m {
        return Err(EquivError::InvalidData(format!(
            "period {} does not match p^n = {m}",
            data.period
        )));
    }
    (0..=n)
        .map(|k| {
            let poly = elee_poly(data, p.pow(n - k), r, convention)?;
            let dim = rep_dimension(m, p.pow(n - k), r)?;
            if dim != totient(p.pow(k)) {
                return Err(EquivError::BadCharacteristic { r, m });
            }
            poly.div_exact_scalar(&dim.into())
                .map_err(|e| EquivError::InvalidData(e.to_string()))
        })
        .collect()
}
