//! Root-system combinatorics for the classical families A, B, C, D.
//!
//! Weights are stored as integer vectors over the fundamental weights
//! (coordinates d_1..d_l). Coordinates over the orthonormal epsilon basis are
//! derived on demand as *doubled* integers so that the half-integer spin
//! coordinates of B and D stay exact.

use crate::{NuError, Result};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 3,
            Family::C => 2,
            Family::D => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyRank {
    pub family: Family,
    pub rank: usize,
}

impl FamilyRank {
    pub fn new(family: Family, rank: usize) -> Result<FamilyRank> {
        if rank < family.min_rank() {
            return Err(NuError::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(FamilyRank { family, rank })
    }

    /// Dimension of the natural module W.
    pub fn natural_dim(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l + 1,
            Family::B => 2 * l + 1,
            Family::C | Family::D => 2 * l,
        }
    }

    /// Dimension of the ambient epsilon coordinate space.
    pub fn eps_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }
}

/// Weight in fundamental-weight coordinates.
pub type Weight = Vec<i64>;

/// Vector over the simple roots alpha_1..alpha_l (integer coefficients).
pub type RootVector = Vec<i64>;

pub fn zero_weight(fr: &FamilyRank) -> Weight {
    vec![0; fr.rank]
}

pub fn fundamental(fr: &FamilyRank, i: usize) -> Weight {
    let mut w = vec![0; fr.rank];
    w[i - 1] = 1;
    w
}

pub fn is_dominant(w: &Weight) -> bool {
    w.iter().all(|&d| d >= 0)
}

pub fn is_p_restricted(w: &Weight, p: i64) -> bool {
    p == 0 || w.iter().all(|&d| d < p)
}

/// Natural pairing <lambda, alpha_i-coroot> = d_i (1-based index).
pub fn pairing(w: &Weight, i: usize) -> i64 {
    w[i - 1]
}

/// Cartan matrix entries cartan[i][j] = <alpha_{j+1}, alpha_{i+1}-coroot>.
pub fn cartan(fr: &FamilyRank) -> Vec<Vec<i64>> {
    let l = fr.rank;
    let mut m = vec![vec![0i64; l]; l];
    for i in 0..l {
        m[i][i] = 2;
    }
    let chain = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match fr.family {
        Family::A => {
            for i in 0..l.saturating_sub(1) {
                chain(&mut m, i, i + 1);
            }
        }
        Family::B => {
            for i in 0..l - 1 {
                chain(&mut m, i, i + 1);
            }
            // alpha_l is short: <alpha_{l-1}, alpha_l-coroot> = -2.
            m[l - 1][l - 2] = -2;
            m[l - 2][l - 1] = -1;
        }
        Family::C => {
            for i in 0..l - 1 {
                chain(&mut m, i, i + 1);
            }
            // alpha_l is long: <alpha_l, alpha_{l-1}-coroot> = -2... transposed to B.
            m[l - 2][l - 1] = -2;
            m[l - 1][l - 2] = -1;
        }
        Family::D => {
            for i in 0..l - 2 {
                chain(&mut m, i, i + 1);
            }
            chain(&mut m, l - 3, l - 1);
            // The fork: alpha_{l-1} and alpha_l both attach to alpha_{l-2},
            // and not to each other.
            m[l - 2][l - 1] = 0;
            m[l - 1][l - 2] = 0;
            m[l - 3][l - 2] = -1;
            m[l - 2][l - 3] = -1;
        }
    }
    m
}

/// Simple root alpha_j in fundamental-weight coordinates (column j of Cartan).
pub fn simple_root_fund(fr: &FamilyRank, j: usize) -> Weight {
    let c = cartan(fr);
    (0..fr.rank).map(|i| c[i][j - 1]).collect()
}

/// Doubled epsilon coordinates of a weight (denominator 2 absorbed).
pub fn weight_to_eps2(fr: &FamilyRank, w: &Weight) -> Vec<i64> {
    let l = fr.rank;
    match fr.family {
        Family::A => {
            // gl coordinates a_j = sum_{i>=j} d_i, a_{l+1} = 0. The sl weight
            // differs by a multiple of (1,..,1), which every determinant-one
            // torus element kills.
            let mut out = vec![0i64; l + 1];
            let mut acc = 0i64;
            for j in (0..l).rev() {
                acc += w[j];
                out[j] = 2 * acc;
            }
            out
        }
        Family::C => {
            let mut out = vec![0i64; l];
            let mut acc = 0i64;
            for j in (0..l).rev() {
                acc += w[j];
                out[j] = 2 * acc;
            }
            out
        }
        Family::B => {
            let mut out = vec![0i64; l];
            let mut acc = 0i64;
            for j in (0..l).rev() {
                if j < l - 1 {
                    acc += w[j];
                }
                out[j] = 2 * acc + w[l - 1];
            }
            out
        }
        Family::D => {
            let mut out = vec![0i64; l];
            out[l - 1] = w[l - 1] - w[l - 2];
            let mut acc = 0i64;
            for j in (0..l - 1).rev() {
                if j < l - 2 {
                    acc += w[j];
                }
                out[j] = 2 * acc + w[l - 2] + w[l - 1];
            }
            out
        }
    }
}

/// Positive roots as vectors over the simple roots, sorted by height then
/// lexicographically (this is the fixed total order used everywhere).
pub fn positive_roots(fr: &FamilyRank) -> Vec<RootVector> {
    let l = fr.rank;
    let mut roots: Vec<RootVector> = Vec::new();
    let mut span = |from: usize, to: usize, scale: i64, base: Option<&RootVector>| {
        // helper producing scale*(alpha_from+..+alpha_to) added to base
        let mut v = base.cloned().unwrap_or_else(|| vec![0; l]);
        for k in from..=to {
            v[k - 1] += scale;
        }
        v
    };
    match fr.family {
        Family::A => {
            for i in 1..=l {
                for j in i..=l {
                    roots.push(span(i, j, 1, None));
                }
            }
        }
        Family::B => {
            // e_i - e_j = a_i + .. + a_{j-1}
            for i in 1..l {
                for j in (i + 1)..=l {
                    roots.push(span(i, j - 1, 1, None));
                }
            }
            // e_i = a_i + .. + a_l
            for i in 1..=l {
                roots.push(span(i, l, 1, None));
            }
            // e_i + e_j = a_i + .. + a_{j-1} + 2(a_j + .. + a_l), i < j
            for i in 1..l {
                for j in (i + 1)..=l {
                    let v = span(j, l, 2, None);
                    roots.push(span(i, j - 1, 1, Some(&v)));
                }
            }
        }
        Family::C => {
            for i in 1..l {
                for j in (i + 1)..=l {
                    roots.push(span(i, j - 1, 1, None));
                }
            }
            // 2 e_i = 2(a_i + .. + a_{l-1}) + a_l
            for i in 1..=l {
                let mut v = vec![0; l];
                if i <= l - 1 {
                    for k in i..=l - 1 {
                        v[k - 1] += 2;
                    }
                }
                v[l - 1] += 1;
                roots.push(v);
            }
            // e_i + e_j = a_i+..+a_{j-1} + 2(a_j+..+a_{l-1}) + a_l, i < j
            for i in 1..l {
                for j in (i + 1)..=l {
                    let mut v = vec![0; l];
                    for k in i..j {
                        v[k - 1] += 1;
                    }
                    if j <= l - 1 {
                        for k in j..=l - 1 {
                            v[k - 1] += 2;
                        }
                    }
                    v[l - 1] += 1;
                    roots.push(v);
                }
            }
        }
        Family::D => {
            for i in 1..l {
                for j in (i + 1)..=l {
                    if j < l {
                        // e_i - e_j
                        roots.push(span(i, j - 1, 1, None));
                    } else {
                        // e_i - e_l = a_i + .. + a_{l-2} + a_{l-1}
                        let mut v = vec![0; l];
                        for k in i..=l - 1 {
                            v[k - 1] += 1;
                        }
                        roots.push(v);
                    }
                }
            }
            for i in 1..l {
                for j in (i + 1)..=l {
                    let mut v = vec![0; l];
                    if j < l {
                        // e_i + e_j = a_i+..+a_{j-1} + 2(a_j+..+a_{l-2}) + a_{l-1} + a_l
                        for k in i..j {
                            v[k - 1] += 1;
                        }
                        for k in j..=l - 2 {
                            v[k - 1] += 2;
                        }
                        v[l - 2] += 1;
                        v[l - 1] += 1;
                    } else {
                        // e_i + e_l = a_i + .. + a_{l-2} + a_l
                        for k in i..=l - 2 {
                            v[k - 1] += 1;
                        }
                        v[l - 1] += 1;
                    }
                    roots.push(v);
                }
            }
        }
    }
    roots.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    roots
}

/// Doubled epsilon coordinates of a root given over the simple roots.
pub fn root_to_eps2(fr: &FamilyRank, rv: &RootVector) -> Vec<i64> {
    let mut out = vec![0i64; fr.eps_dim()];
    for (j, &c) in rv.iter().enumerate() {
        let alpha = simple_root_eps2(fr, j + 1);
        for (o, a) in out.iter_mut().zip(alpha.iter()) {
            *o += c * a;
        }
    }
    out
}

/// Doubled epsilon coordinates of a simple root.
pub fn simple_root_eps2(fr: &FamilyRank, i: usize) -> Vec<i64> {
    let l = fr.rank;
    let n = fr.eps_dim();
    let mut v = vec![0i64; n];
    match fr.family {
        Family::A => {
            v[i - 1] = 2;
            v[i] = -2;
        }
        Family::B => {
            if i < l {
                v[i - 1] = 2;
                v[i] = -2;
            } else {
                v[l - 1] = 2;
            }
        }
        Family::C => {
            if i < l {
                v[i - 1] = 2;
                v[i] = -2;
            } else {
                v[l - 1] = 4;
            }
        }
        Family::D => {
            if i < l {
                v[i - 1] = 2;
                v[i] = -2;
            } else {
                v[l - 2] = 2;
                v[l - 1] = 2;
            }
        }
    }
    v
}

/// Apply the simple reflection s_i to a weight in fundamental coordinates.
pub fn simple_reflection(fr: &FamilyRank, w: &Weight, i: usize) -> Weight {
    let d = w[i - 1];
    if d == 0 {
        return w.clone();
    }
    let alpha = simple_root_fund(fr, i);
    w.iter().zip(alpha.iter()).map(|(&x, &a)| x - d * a).collect()
}

/// Dominant representative of the Weyl orbit of a weight.
pub fn dominant_representative(fr: &FamilyRank, w: &Weight) -> Weight {
    let mut cur = w.clone();
    'outer: loop {
        for i in 1..=fr.rank {
            if cur[i - 1] < 0 {
                cur = simple_reflection(fr, &cur, i);
                continue 'outer;
            }
        }
        return cur;
    }
}

/// The full Weyl orbit of a weight.
pub fn weyl_orbit(fr: &FamilyRank, w: &Weight) -> Vec<Weight> {
    use std::collections::HashSet;
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut stack = vec![w.clone()];
    seen.insert(w.clone());
    while let Some(cur) = stack.pop() {
        for i in 1..=fr.rank {
            let nxt = simple_reflection(fr, &cur, i);
            if seen.insert(nxt.clone()) {
                stack.push(nxt);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}

/// Image of a weight under the longest Weyl element w0.
pub fn w0_image(fr: &FamilyRank, w: &Weight) -> Weight {
    let l = fr.rank;
    match fr.family {
        Family::A => {
            // w0(omega_r) = -omega_{l+1-r}
            let mut out = vec![0i64; l];
            for r in 0..l {
                out[l - 1 - r] = -w[r];
            }
            out
        }
        Family::B | Family::C => w.iter().map(|&d| -d).collect(),
        Family::D => {
            if l % 2 == 0 {
                w.iter().map(|&d| -d).collect()
            } else {
                let mut out: Weight = w.iter().map(|&d| -d).collect();
                out.swap(l - 2, l - 1);
                out
            }
        }
    }
}

/// The dual module's highest weight, -w0(lambda).
pub fn dual_weight(fr: &FamilyRank, w: &Weight) -> Weight {
    w0_image(fr, w).iter().map(|&d| -d).collect()
}

/// Expand a weight over the simple roots with exact rational coefficients.
pub fn expand_over_simple_roots(fr: &FamilyRank, w: &Weight) -> Vec<Ratio<i128>> {
    // Solve cartan * c = d.
    let l = fr.rank;
    let c = cartan(fr);
    let mut m: Vec<Vec<Ratio<i128>>> = (0..l)
        .map(|i| {
            (0..=l)
                .map(|j| {
                    if j < l {
                        Ratio::from_integer(c[i][j] as i128)
                    } else {
                        Ratio::from_integer(w[i] as i128)
                    }
                })
                .collect()
        })
        .collect();
    // Gaussian elimination with partial pivoting over the rationals.
    for col in 0..l {
        let piv = (col..l)
            .find(|&r| m[r][col] != Ratio::from_integer(0))
            .expect("Cartan matrix is invertible");
        m.swap(col, piv);
        let inv = m[col][col];
        for j in col..=l {
            m[col][j] /= inv;
        }
        for r in 0..l {
            if r != col && m[r][col] != Ratio::from_integer(0) {
                let f = m[r][col];
                for j in col..=l {
                    let sub = f * m[col][j];
                    m[r][j] -= sub;
                }
            }
        }
    }
    (0..l).map(|i| m[i][l]).collect()
}

/// Check whether lambda - mu is a nonnegative integer combination of simple
/// roots; if so return the coefficient vector.
pub fn root_cone_difference(fr: &FamilyRank, lambda: &Weight, mu: &Weight) -> Option<RootVector> {
    let diff: Weight = lambda.iter().zip(mu.iter()).map(|(&a, &b)| a - b).collect();
    let coeffs = expand_over_simple_roots(fr, &diff);
    let mut out = Vec::with_capacity(fr.rank);
    for c in coeffs {
        if !c.is_integer() || c < Ratio::from_integer(0) {
            return None;
        }
        out.push(*c.numer() as i64);
    }
    Some(out)
}

/// Doubled coordinates of rho (half-sum of positive roots): each entry of
/// 2*rho in fundamental coordinates is 2.
pub fn rho2_eps(fr: &FamilyRank) -> Vec<i64> {
    // weight_to_eps2 of (1,..,1) equals the doubled eps coordinates of rho
    // only after halving: 2*rho has fundamental coordinates (2,..,2), so
    // rho's doubled eps coordinates are exactly weight_to_eps2(1,..,1).
    weight_to_eps2(fr, &vec![1; fr.rank])
}

/// Inner product of two doubled-eps vectors; the true inner product is this
/// value divided by 4, but all uses cancel the factor.
pub fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b.iter()).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Weyl-invariant symmetric form on doubled epsilon coordinates. For family A
/// the stored coordinates are gl representatives (last coordinate pinned to
/// zero), so the trace component must be projected out; the result is then
/// scaled by l+1 relative to the plain dot product, which is harmless wherever
/// the same form appears on both sides of an equation or in a ratio.
pub fn form_dot(fr: &FamilyRank, a: &[i64], b: &[i64]) -> i128 {
    match fr.family {
        Family::A => {
            let n = (fr.rank + 1) as i128;
            let sa: i128 = a.iter().map(|&v| v as i128).sum();
            let sb: i128 = b.iter().map(|&v| v as i128).sum();
            n * dot(a, b) - sa * sb
        }
        _ => dot(a, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(f: Family, l: usize) -> FamilyRank {
        FamilyRank::new(f, l).unwrap()
    }

    #[test]
    fn rank_bounds_enforced() {
        assert!(FamilyRank::new(Family::A, 1).is_ok());
        assert!(FamilyRank::new(Family::B, 2).is_err());
        assert!(FamilyRank::new(Family::C, 1).is_err());
        assert!(FamilyRank::new(Family::D, 3).is_err());
    }

    #[test]
    fn positive_root_counts() {
        for l in 1..=10 {
            assert_eq!(positive_roots(&fr(Family::A, l)).len(), l * (l + 1) / 2);
        }
        for l in 3..=10 {
            assert_eq!(positive_roots(&fr(Family::B, l)).len(), l * l);
        }
        for l in 2..=10 {
            assert_eq!(positive_roots(&fr(Family::C, l)).len(), l * l);
        }
        for l in 4..=10 {
            assert_eq!(positive_roots(&fr(Family::D, l)).len(), l * (l - 1));
        }
    }

    #[test]
    fn roots_reassemble_in_eps_coordinates() {
        // Every positive root's simple-root expansion must reproduce a genuine
        // root vector of the ambient family in eps coordinates.
        for f in [Family::A, Family::B, Family::C, Family::D] {
            let l = match f {
                Family::A => 5,
                Family::B => 4,
                Family::C => 4,
                Family::D => 5,
            };
            let fr = fr(f, l);
            for rv in positive_roots(&fr) {
                let e = root_to_eps2(&fr, &rv);
                let nonzero: Vec<i64> = e.iter().copied().filter(|&x| x != 0).collect();
                match f {
                    Family::A => assert_eq!(nonzero, vec![2, -2]),
                    Family::B => assert!(
                        nonzero == vec![2] || nonzero == vec![2, 2] || nonzero == vec![2, -2]
                    ),
                    Family::C => assert!(
                        nonzero == vec![4] || nonzero == vec![2, 2] || nonzero == vec![2, -2]
                    ),
                    Family::D => {
                        assert!(nonzero == vec![2, 2] || nonzero == vec![2, -2])
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_reads_coordinates() {
        let a2 = fr(Family::A, 2);
        let w = vec![1, 2];
        assert_eq!(pairing(&w, 2), 2);
        assert_eq!(pairing(&fundamental(&a2, 1), 1), 1);
        assert_eq!(pairing(&fundamental(&a2, 1), 2), 0);
        assert_eq!(pairing(&zero_weight(&a2), 1), 0);
    }

    #[test]
    fn w0_examples() {
        let b3 = fr(Family::B, 3);
        assert_eq!(w0_image(&b3, &fundamental(&b3, 2)), vec![0, -1, 0]);
        let a4 = fr(Family::A, 4);
        assert_eq!(w0_image(&a4, &fundamental(&a4, 1)), vec![0, 0, 0, -1]);
        let d5 = fr(Family::D, 5);
        assert_eq!(w0_image(&d5, &fundamental(&d5, 4)), vec![0, 0, 0, 0, -1]);
    }

    #[test]
    fn w0_is_an_involution() {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            for l in f.min_rank()..=7 {
                let fr = fr(f, l);
                for i in 1..=l {
                    let w = fundamental(&fr, i);
                    assert_eq!(w0_image(&fr, &w0_image(&fr, &w)), w);
                }
                let mixed: Weight = (0..l as i64).map(|x| x % 3).collect();
                assert_eq!(w0_image(&fr, &w0_image(&fr, &mixed)), mixed);
            }
        }
    }

    #[test]
    fn w0_matches_orbit_minimum() {
        // w0(lambda) is the unique antidominant weight in the orbit.
        for f in [Family::A, Family::B, Family::C, Family::D] {
            let l = match f {
                Family::A => 4,
                Family::B => 3,
                Family::C => 3,
                Family::D => 4,
            };
            let fr = fr(f, l);
            for i in 1..=l {
                let w = fundamental(&fr, i);
                let neg = w0_image(&fr, &w);
                let orbit = weyl_orbit(&fr, &w);
                assert!(orbit.contains(&neg));
                assert!(neg.iter().all(|&d| d <= 0), "{f:?} {i} -> {neg:?}");
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let a3 = fr(Family::A, 3);
        let e = expand_over_simple_roots(&a3, &fundamental(&a3, 2));
        assert_eq!(
            e,
            vec![
                Ratio::new(1, 2),
                Ratio::from_integer(1),
                Ratio::new(1, 2)
            ]
        );
        let c2 = fr(Family::C, 2);
        let e = expand_over_simple_roots(&c2, &fundamental(&c2, 2));
        assert_eq!(e, vec![Ratio::from_integer(1), Ratio::from_integer(1)]);
        let any = fr(Family::D, 4);
        let e = expand_over_simple_roots(&any, &zero_weight(&any));
        assert!(e.iter().all(|&x| x == Ratio::from_integer(0)));
    }

    #[test]
    fn expansion_inverts_cartan() {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            for l in f.min_rank()..=8 {
                let fr = fr(f, l);
                let w: Weight = (0..l as i64).map(|x| (x % 4) - 1).collect();
                let c = expand_over_simple_roots(&fr, &w);
                // reassemble: sum c_j alpha_j in fundamental coordinates
                let mut back = vec![Ratio::from_integer(0i128); l];
                for (j, &cj) in c.iter().enumerate() {
                    let alpha = simple_root_fund(&fr, j + 1);
                    for (b, &a) in back.iter_mut().zip(alpha.iter()) {
                        *b += cj * Ratio::from_integer(a as i128);
                    }
                }
                for (b, &orig) in back.iter().zip(w.iter()) {
                    assert_eq!(*b, Ratio::from_integer(orig as i128));
                }
            }
        }
    }

    #[test]
    fn eps_coordinates_of_spin_weights() {
        let b3 = fr(Family::B, 3);
        assert_eq!(weight_to_eps2(&b3, &fundamental(&b3, 3)), vec![1, 1, 1]);
        let d4 = fr(Family::D, 4);
        assert_eq!(weight_to_eps2(&d4, &fundamental(&d4, 4)), vec![1, 1, 1, 1]);
        assert_eq!(
            weight_to_eps2(&d4, &fundamental(&d4, 3)),
            vec![1, 1, 1, -1]
        );
        let c3 = fr(Family::C, 3);
        assert_eq!(weight_to_eps2(&c3, &fundamental(&c3, 2)), vec![2, 2, 0]);
    }

    #[test]
    fn reflections_preserve_eps_norm() {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            let l = f.min_rank() + 2;
            let fr = fr(f, l);
            let w: Weight = (0..l as i64).map(|x| x % 3).collect();
            let e0 = weight_to_eps2(&fr, &w);
            let n0 = form_dot(&fr, &e0, &e0);
            for i in 1..=l {
                let r = simple_reflection(&fr, &w, i);
                let e1 = weight_to_eps2(&fr, &r);
                let n1 = form_dot(&fr, &e1, &e1);
                assert_eq!(n0, n1);
            }
        }
    }
}
