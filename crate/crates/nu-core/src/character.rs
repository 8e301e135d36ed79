//! Characters as finite weight multisets: Weyl dimension formula, Freudenthal
//! weight multiplicities, and the tensor / exterior / symmetric power functors
//! used by the module constructions.

use crate::rootsys::*;
use crate::{NuError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use std::collections::{BTreeMap, HashMap, HashSet};

/// A formal character: weight -> multiplicity, all multiplicities positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub fr: FamilyRank,
    pub entries: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn empty(fr: FamilyRank) -> Character {
        Character {
            fr,
            entries: BTreeMap::new(),
        }
    }

    pub fn trivial(fr: FamilyRank) -> Character {
        let mut c = Character::empty(fr);
        c.entries.insert(zero_weight(&fr), 1);
        c
    }

    pub fn dim(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn add_weight(&mut self, w: Weight, mult: i64) {
        let e = self.entries.entry(w).or_insert(0);
        *e += mult;
        if *e == 0 {
            // keep the map clean of zero entries
            let key: Vec<Weight> = self
                .entries
                .iter()
                .filter(|(_, &m)| m == 0)
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.entries.remove(&k);
            }
        }
    }

    pub fn mult(&self, w: &Weight) -> i64 {
        *self.entries.get(w).unwrap_or(&0)
    }

    /// Subtract another character; fails if any multiplicity would go negative.
    pub fn checked_sub(&self, other: &Character, times: i64) -> Result<Character> {
        let mut out = self.clone();
        for (w, &m) in &other.entries {
            let have = out.mult(w);
            let need = m * times;
            if have < need {
                return Err(NuError::InconsistentLevel(format!(
                    "multiplicity of {w:?} would drop below zero ({have} - {need})"
                )));
            }
            if have == need {
                out.entries.remove(w);
            } else {
                out.entries.insert(w.clone(), have - need);
            }
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Character, times: i64) {
        for (w, &m) in &other.entries {
            let e = self.entries.entry(w.clone()).or_insert(0);
            *e += m * times;
            if *e == 0 {
                self.entries.remove(w);
            }
        }
    }

    /// Dual character (weights negated).
    pub fn dual(&self) -> Character {
        let mut out = Character::empty(self.fr);
        for (w, &m) in &self.entries {
            out.add_weight(w.iter().map(|&d| -d).collect(), m);
        }
        out
    }

    /// Frobenius-style twist: multiply every weight by n.
    pub fn twist(&self, n: i64) -> Character {
        let mut out = Character::empty(self.fr);
        for (w, &m) in &self.entries {
            out.add_weight(w.iter().map(|&d| n * d).collect(), m);
        }
        out
    }

    /// The highest weight of the character (maximal in the dominance order
    /// among dominant entries; for characters of modules this is unique).
    pub fn highest_weight(&self) -> Option<Weight> {
        let mut best: Option<Weight> = None;
        for w in self.entries.keys() {
            if !is_dominant(w) {
                continue;
            }
            match &best {
                None => best = Some(w.clone()),
                Some(b) => {
                    if root_cone_difference(&self.fr, w, b).is_some() {
                        best = Some(w.clone());
                    }
                }
            }
        }
        best
    }
}

/// Weyl dimension formula (characteristic zero).
pub fn weyl_dim(fr: &FamilyRank, lambda: &Weight) -> Result<BigInt> {
    if !is_dominant(lambda) {
        return Err(NuError::NotDominant(lambda.clone()));
    }
    let rho_plus_lambda: Weight = lambda.iter().map(|&d| d + 1).collect();
    let num_v = weight_to_eps2(fr, &rho_plus_lambda);
    let den_v = rho2_eps(fr);
    let mut acc = BigRational::one();
    for rv in positive_roots(fr) {
        let alpha = root_to_eps2(fr, &rv);
        let n = dot(&num_v, &alpha);
        let d = dot(&den_v, &alpha);
        acc *= BigRational::new(BigInt::from(n), BigInt::from(d));
    }
    assert!(acc.is_integer(), "Weyl dimension must be an integer");
    Ok(acc.to_integer())
}

pub fn weyl_dim_i64(fr: &FamilyRank, lambda: &Weight) -> Result<i64> {
    Ok(weyl_dim(fr, lambda)?
        .to_i64()
        .expect("dimension fits in i64 at desk scale"))
}

/// Which simple-root indices are active: the full system, or the Levi
/// subsystem obtained by deleting one node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootScope {
    Full,
    LeviWithout(usize),
}

impl RootScope {
    pub fn active(&self, i: usize) -> bool {
        match self {
            RootScope::Full => true,
            RootScope::LeviWithout(x) => i != *x,
        }
    }
}

fn scope_dominant(scope: RootScope, w: &Weight) -> bool {
    w.iter().enumerate().all(|(k, &d)| !scope.active(k + 1) || d >= 0)
}

fn scope_dominant_rep(fr: &FamilyRank, scope: RootScope, w: &Weight) -> Weight {
    let mut cur = w.clone();
    'outer: loop {
        for i in 1..=fr.rank {
            if scope.active(i) && cur[i - 1] < 0 {
                cur = simple_reflection(fr, &cur, i);
                continue 'outer;
            }
        }
        return cur;
    }
}

/// lambda - mu as nonnegative coefficients over the active simple roots, if
/// it lies in that cone.
fn scope_cone_difference(
    fr: &FamilyRank,
    scope: RootScope,
    lambda: &Weight,
    mu: &Weight,
) -> Option<Vec<i64>> {
    let c = root_cone_difference(fr, lambda, mu)?;
    for (k, &v) in c.iter().enumerate() {
        if !scope.active(k + 1) && v != 0 {
            return None;
        }
    }
    Some(c)
}

/// All weights of the irreducible char-0 module of highest weight lambda
/// (without multiplicities): the saturated set of weights below lambda.
fn saturated_weight_set(fr: &FamilyRank, scope: RootScope, lambda: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut stack = vec![lambda.clone()];
    seen.insert(lambda.clone());
    while let Some(cur) = stack.pop() {
        for i in 1..=fr.rank {
            if !scope.active(i) {
                continue;
            }
            let alpha = simple_root_fund(fr, i);
            let nxt: Weight = cur.iter().zip(alpha.iter()).map(|(&x, &a)| x - a).collect();
            if seen.contains(&nxt) {
                continue;
            }
            let rep = scope_dominant_rep(fr, scope, &nxt);
            if scope_cone_difference(fr, scope, lambda, &rep).is_some() {
                seen.insert(nxt.clone());
                stack.push(nxt);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}

/// Dominant weights mu with lambda - mu a nonnegative combination of simple
/// roots (the sub-dominant weights, including lambda itself).
pub fn subdominant_weights(fr: &FamilyRank, lambda: &Weight) -> Result<Vec<Weight>> {
    if !is_dominant(lambda) {
        return Err(NuError::NotDominant(lambda.clone()));
    }
    subdominant_weights_scoped(fr, RootScope::Full, lambda)
}

fn subdominant_weights_scoped(
    fr: &FamilyRank,
    scope: RootScope,
    lambda: &Weight,
) -> Result<Vec<Weight>> {
    let mut out: Vec<Weight> = saturated_weight_set(fr, scope, lambda)
        .into_iter()
        .filter(|w| scope_dominant(scope, w))
        .collect();
    // sort by increasing height of lambda - mu, highest weight first
    out.sort_by_key(|mu| {
        let c = scope_cone_difference(fr, scope, lambda, mu).expect("in cone by construction");
        (c.iter().sum::<i64>(), mu.clone())
    });
    Ok(out)
}

/// Full char-0 weight multiset of the irreducible of highest weight lambda,
/// via the Freudenthal recursion on dominant weights.
pub fn freudenthal_character(fr: &FamilyRank, lambda: &Weight) -> Result<Character> {
    if !is_dominant(lambda) {
        return Err(NuError::NotDominant(lambda.clone()));
    }
    freudenthal_scoped(fr, RootScope::Full, lambda)
}

/// Freudenthal over the Levi subsystem with node i deleted: the character of
/// the irreducible module of the Levi derived subgroup, written in ambient
/// coordinates. The ambient rho can be used throughout because rho - rho_Levi
/// is orthogonal to every Levi root.
pub fn freudenthal_levi(fr: &FamilyRank, i: usize, lambda: &Weight) -> Result<Character> {
    let scope = RootScope::LeviWithout(i);
    if !scope_dominant(scope, lambda) {
        return Err(NuError::NotDominant(lambda.clone()));
    }
    freudenthal_scoped(fr, scope, lambda)
}

fn freudenthal_scoped(fr: &FamilyRank, scope: RootScope, lambda: &Weight) -> Result<Character> {
    let dominants = subdominant_weights_scoped(fr, scope, lambda)?;
    let root_vectors: Vec<RootVector> = positive_roots(fr)
        .into_iter()
        .filter(|rv| {
            rv.iter()
                .enumerate()
                .all(|(k, &c)| c == 0 || scope.active(k + 1))
        })
        .collect();
    let pos_roots: Vec<Vec<i64>> = root_vectors.iter().map(|rv| root_to_eps2(fr, rv)).collect();
    let pos_roots_fund: Vec<Weight> = root_vectors
        .iter()
        .map(|rv| {
            let mut w = vec![0i64; fr.rank];
            for (j, &c) in rv.iter().enumerate() {
                let alpha = simple_root_fund(fr, j + 1);
                for (x, &a) in w.iter_mut().zip(alpha.iter()) {
                    *x += c * a;
                }
            }
            w
        })
        .collect();
    let lam_rho: Weight = lambda.iter().map(|&d| d + 1).collect();
    let lam_rho_e = weight_to_eps2(fr, &lam_rho);
    let norm_top = form_dot(fr, &lam_rho_e, &lam_rho_e);

    let mut mults: HashMap<Weight, i64> = HashMap::new();
    for mu in &dominants {
        if mu == lambda {
            mults.insert(mu.clone(), 1);
            continue;
        }
        let mu_rho: Weight = mu.iter().map(|&d| d + 1).collect();
        let mu_rho_e = weight_to_eps2(fr, &mu_rho);
        let denom = norm_top - form_dot(fr, &mu_rho_e, &mu_rho_e);
        assert!(denom > 0, "Freudenthal denominator must be positive");
        let mut num: i128 = 0;
        for (alpha_e, alpha_f) in pos_roots.iter().zip(pos_roots_fund.iter()) {
            let mut k = 1i64;
            loop {
                let nu: Weight = mu
                    .iter()
                    .zip(alpha_f.iter())
                    .map(|(&m, &a)| m + k * a)
                    .collect();
                let rep = scope_dominant_rep(fr, scope, &nu);
                if scope_cone_difference(fr, scope, lambda, &rep).is_none() {
                    break;
                }
                let m_nu = *mults.get(&rep).unwrap_or(&0);
                if m_nu > 0 {
                    let nu_e = weight_to_eps2(fr, &nu);
                    num += m_nu as i128 * form_dot(fr, &nu_e, alpha_e);
                }
                k += 1;
            }
        }
        let val = 2 * num;
        assert!(val % denom == 0, "Freudenthal division must be exact");
        mults.insert(mu.clone(), (val / denom) as i64);
    }

    // Expand over orbits of the active reflection subgroup.
    let mut out = Character::empty(*fr);
    for (mu, m) in mults {
        if m == 0 {
            continue;
        }
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut stack = vec![mu.clone()];
        seen.insert(mu);
        while let Some(cur) = stack.pop() {
            for i in 1..=fr.rank {
                if !scope.active(i) {
                    continue;
                }
                let nxt = simple_reflection(fr, &cur, i);
                if seen.insert(nxt.clone()) {
                    stack.push(nxt);
                }
            }
        }
        for w in seen {
            out.add_weight(w, m);
        }
    }
    Ok(out)
}

/// Tensor product of two characters.
pub fn tensor(a: &Character, b: &Character) -> Result<Character> {
    if a.fr != b.fr {
        return Err(NuError::Mismatch);
    }
    let mut out = Character::empty(a.fr);
    for (wa, &ma) in &a.entries {
        for (wb, &mb) in &b.entries {
            let w: Weight = wa.iter().zip(wb.iter()).map(|(&x, &y)| x + y).collect();
            out.add_weight(w, ma * mb);
        }
    }
    Ok(out)
}

/// k-th exterior power of a character as a weight multiset.
pub fn wedge(k: usize, a: &Character) -> Result<Character> {
    plethysm(k, a, true)
}

/// k-th symmetric power of a character as a weight multiset.
pub fn sym(k: usize, a: &Character) -> Result<Character> {
    plethysm(k, a, false)
}

/// Shared driver: convolve per-weight elementary (wedge) or complete (sym)
/// generating characters, keeping track of the total degree.
fn plethysm(k: usize, a: &Character, alternating: bool) -> Result<Character> {
    let binom = |n: i64, r: i64| -> i64 {
        if r < 0 || r > n {
            return 0;
        }
        let mut acc: i128 = 1;
        for i in 0..r {
            acc = acc * (n - i) as i128 / (i + 1) as i128;
        }
        acc as i64
    };
    // state[d] = character of degree-d part accumulated so far
    let mut state: Vec<Character> = (0..=k).map(|_| Character::empty(a.fr)).collect();
    state[0] = Character::trivial(a.fr);
    for (w, &m) in &a.entries {
        let mut next: Vec<Character> = (0..=k).map(|_| Character::empty(a.fr)).collect();
        for d in 0..=k {
            if state[d].entries.is_empty() {
                continue;
            }
            for j in 0..=(k - d) {
                let coeff = if alternating {
                    binom(m, j as i64)
                } else {
                    binom(m + j as i64 - 1, j as i64)
                };
                if coeff == 0 {
                    continue;
                }
                let jw: Weight = w.iter().map(|&x| x * j as i64).collect();
                for (sw, &sm) in &state[d].entries {
                    let nw: Weight = sw.iter().zip(jw.iter()).map(|(&x, &y)| x + y).collect();
                    next[d + j].add_weight(nw, sm * coeff);
                }
            }
        }
        state = next;
    }
    Ok(state.pop().unwrap())
}

/// Character consisting of the Weyl orbit of lambda with multiplicity one.
pub fn orbit_character(fr: &FamilyRank, lambda: &Weight) -> Result<Character> {
    if !is_dominant(lambda) {
        return Err(NuError::NotDominant(lambda.clone()));
    }
    let mut out = Character::empty(*fr);
    for w in weyl_orbit(fr, lambda) {
        out.add_weight(w, 1);
    }
    Ok(out)
}
