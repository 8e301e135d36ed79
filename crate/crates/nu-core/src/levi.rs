//! Restriction to the derived subgroup of the maximal Levi L_i: the maximal
//! alpha_i-level e_i(lambda), the decomposition of a character into levels,
//! char-0 decomposition of a level into Levi highest-weight factors, and the
//! duality symmetry between complementary levels.

use crate::character::{freudenthal_levi, Character};
use crate::rootsys::*;
use crate::{NuError, Result};
use std::collections::BTreeMap;

/// Levels of a character with respect to a simple root index.
#[derive(Debug, Clone)]
pub struct LevelDecomposition {
    pub fr: FamilyRank,
    pub lambda: Weight,
    pub i: usize,
    pub levels: Vec<Character>,
}

/// Multiset of Levi highest weights (stored in ambient coordinates) with
/// multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviFactorList {
    pub factors: Vec<(Weight, i64)>,
}

/// The maximal alpha_i-level e_i(lambda): the alpha_i coefficient of
/// lambda - w0(lambda) over the simple roots.
pub fn max_level(fr: &FamilyRank, lambda: &Weight, i: usize) -> Result<i64> {
    if !is_dominant(lambda) {
        return Err(NuError::NotDominant(lambda.clone()));
    }
    let w0 = w0_image(fr, lambda);
    let diff: Weight = lambda.iter().zip(w0.iter()).map(|(&a, &b)| a - b).collect();
    let coeffs = expand_over_simple_roots(fr, &diff);
    let c = &coeffs[i - 1];
    if !c.is_integer() {
        return Err(NuError::MalformedCharacter(
            "lambda - w0(lambda) not in the root lattice".into(),
        ));
    }
    Ok(*c.numer() as i64)
}

/// Split the weight multiset of a module with highest weight lambda by the
/// alpha_i coefficient of lambda - mu.
pub fn level_decompose(
    ch: &Character,
    lambda: &Weight,
    i: usize,
) -> Result<LevelDecomposition> {
    let fr = ch.fr;
    let e = max_level(&fr, lambda, i)?;
    let mut levels: Vec<Character> = (0..=e).map(|_| Character::empty(fr)).collect();
    for (w, &m) in &ch.entries {
        let coeffs = root_cone_difference(&fr, lambda, w).ok_or_else(|| {
            NuError::MalformedCharacter(format!("weight {w:?} outside the cone under {lambda:?}"))
        })?;
        let j = coeffs[i - 1];
        if j < 0 || j > e {
            return Err(NuError::MalformedCharacter(format!(
                "weight {w:?} at level {j} outside 0..={e}"
            )));
        }
        levels[j as usize].add_weight(w.clone(), m);
    }
    Ok(LevelDecomposition {
        fr,
        lambda: lambda.clone(),
        i,
        levels,
    })
}

/// Levi coordinates of an ambient weight: drop the i-th entry.
pub fn levi_coords(w: &Weight, i: usize) -> Vec<i64> {
    w.iter()
        .enumerate()
        .filter(|(k, _)| *k != i - 1)
        .map(|(_, &d)| d)
        .collect()
}

fn is_levi_dominant(w: &Weight, i: usize) -> bool {
    w.iter().enumerate().all(|(k, &d)| k == i - 1 || d >= 0)
}

/// Greedy char-0 decomposition of one level into irreducible factors of the
/// Levi derived subgroup. Repeatedly picks the lexicographically largest
/// Levi-dominant weight of maximal height and strips its Levi character.
pub fn decompose_level(level: &Character, i: usize) -> Result<LeviFactorList> {
    let fr = level.fr;
    let mut rest = level.clone();
    let mut factors: BTreeMap<Weight, i64> = BTreeMap::new();
    while !rest.entries.is_empty() {
        // among Levi-dominant weights not dominated by another entry, take
        // the lexicographically largest coordinate vector
        let mut top: Option<Weight> = None;
        for w in rest.entries.keys() {
            if !is_levi_dominant(w, i) {
                continue;
            }
            let dominated = rest.entries.keys().any(|other| {
                other != w
                    && root_cone_difference(&fr, other, w)
                        .map(|c| c[i - 1] == 0)
                        .unwrap_or(false)
            });
            if dominated {
                continue;
            }
            match &top {
                None => top = Some(w.clone()),
                Some(t) => {
                    if w > t {
                        top = Some(w.clone());
                    }
                }
            }
        }
        let top = top.ok_or_else(|| {
            NuError::InconsistentLevel("no Levi-dominant maximal weight in remainder".into())
        })?;
        let mult = rest.mult(&top);
        let factor_ch = freudenthal_levi(&fr, i, &top)?;
        rest = rest.checked_sub(&factor_ch, mult)?;
        *factors.entry(top).or_insert(0) += mult;
    }
    Ok(LeviFactorList {
        factors: factors.into_iter().collect(),
    })
}

/// Whether the module with this highest weight is self-dual.
pub fn is_self_dual(fr: &FamilyRank, lambda: &Weight) -> bool {
    dual_weight(fr, lambda) == *lambda
}

/// Check the symmetry V^{e-j} = (V^j)^* between complementary levels, as
/// multisets of Levi weights.
pub fn check_level_duality(dec: &LevelDecomposition) -> Result<bool> {
    if !is_self_dual(&dec.fr, &dec.lambda) {
        return Err(NuError::NotSelfDual);
    }
    let e = dec.levels.len() - 1;
    for j in 0..=e {
        let mut a: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (w, &m) in &dec.levels[e - j].entries {
            *a.entry(levi_coords(w, dec.i)).or_insert(0) += m;
        }
        let mut b: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (w, &m) in &dec.levels[j].entries {
            let neg: Vec<i64> = levi_coords(w, dec.i).iter().map(|&d| -d).collect();
            *b.entry(neg).or_insert(0) += m;
        }
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}
