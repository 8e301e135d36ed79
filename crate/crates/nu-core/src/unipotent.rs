//! Jordan-type arithmetic for unipotent elements: types of root elements on
//! the natural module, tensor / exterior / symmetric powers of Jordan types
//! in characteristic zero and p, fixed-space dimensions, and the filtration
//! upper bound.
//!
//! Two exact backends: in characteristic zero a Jordan type is the character
//! of an sl2 action and the functors act on weight multisets; in positive
//! characteristic the functors act on explicit nilpotent matrices over the
//! prime field and the type is read off the rank sequence of powers.

use crate::rootsys::{Family, FamilyRank};
use crate::{NuError, Result};
use std::collections::BTreeMap;

/// Partition of the module dimension: Jordan block sizes of a unipotent
/// element, together with the ambient characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanType {
    pub blocks: Vec<usize>,
    pub p: i64,
}

impl JordanType {
    pub fn new(mut blocks: Vec<usize>, p: i64) -> JordanType {
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        blocks.retain(|&b| b > 0);
        JordanType { blocks, p }
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// dim ker(u - 1): the number of blocks.
    pub fn fixed_dim(&self) -> usize {
        self.blocks.len()
    }
}

/// Which root-element conjugacy class representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootElementClass {
    Alpha1,
    AlphaEll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootElementSpec {
    pub fr: FamilyRank,
    pub class: RootElementClass,
}

/// Jordan type of the root element on the natural module. The two classes
/// coincide for family A. For family B the Alpha1 class is the short-root
/// representative (a single J_3, regular in a B_1 subgroup, characteristic
/// not 2), and AlphaEll the long-root one.
pub fn root_element_on_natural(re: &RootElementSpec) -> Result<JordanType> {
    let l = re.fr.rank;
    let p = 0;
    let t = match (re.fr.family, re.class) {
        (Family::A, _) => {
            let mut b = vec![2];
            b.extend(std::iter::repeat(1).take(l - 1));
            b
        }
        (Family::C, RootElementClass::AlphaEll) => {
            let mut b = vec![2];
            b.extend(std::iter::repeat(1).take(2 * l - 2));
            b
        }
        (Family::C, RootElementClass::Alpha1) => {
            let mut b = vec![2, 2];
            b.extend(std::iter::repeat(1).take(2 * l - 4));
            b
        }
        (Family::B, RootElementClass::Alpha1) => {
            let mut b = vec![3];
            b.extend(std::iter::repeat(1).take(2 * l - 2));
            b
        }
        (Family::B, RootElementClass::AlphaEll) => {
            let mut b = vec![2, 2];
            b.extend(std::iter::repeat(1).take(2 * l - 3));
            b
        }
        (Family::D, _) => {
            let mut b = vec![2, 2];
            b.extend(std::iter::repeat(1).take(2 * l - 4));
            b
        }
    };
    Ok(JordanType::new(t, p))
}

// sl2-character backend (characteristic zero): a Jordan type corresponds to
// the weight multiset in which J_n contributes n-1, n-3, ..., 1-n.

fn to_sl2_weights(t: &JordanType) -> BTreeMap<i64, i64> {
    let mut m = BTreeMap::new();
    for &b in &t.blocks {
        let n = b as i64;
        let mut w = n - 1;
        while w >= 1 - n {
            *m.entry(w).or_insert(0) += 1;
            w -= 2;
        }
    }
    m
}

fn from_sl2_weights(mut m: BTreeMap<i64, i64>) -> Vec<usize> {
    let mut blocks = Vec::new();
    while let Some((&top, &mult)) = m.iter().next_back() {
        if mult == 0 {
            m.remove(&top);
            continue;
        }
        assert!(top >= 0, "sl2 weight multiset is not symmetric");
        let n = top + 1;
        let mut w = top;
        while w >= -top {
            let e = m.get_mut(&w).expect("missing sl2 weight");
            *e -= mult;
            assert!(*e >= 0, "sl2 weight multiset is not a module character");
            if *e == 0 {
                m.remove(&w);
            }
            w -= 2;
        }
        for _ in 0..mult {
            blocks.push(n as usize);
        }
    }
    blocks
}

// Matrix backend (positive characteristic): nilpotent part of the unipotent
// Jordan matrix, functors on explicit matrices over the prime field, Jordan
// type from the rank sequence of powers.

#[derive(Clone)]
struct PMatrix {
    n: usize,
    p: i64,
    a: Vec<i64>,
}

impl PMatrix {
    fn identity(n: usize, p: i64) -> PMatrix {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        PMatrix { n, p, a }
    }

    fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v.rem_euclid(self.p);
    }

    fn mul(&self, other: &PMatrix) -> PMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let p = self.p;
        let mut out = PMatrix {
            n,
            p,
            a: vec![0; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let v = self.get(i, k);
                if v == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] = (out.a[i * n + j] + v * other.get(k, j)).rem_euclid(p);
                }
            }
        }
        out
    }

    fn rank(&self) -> usize {
        let n = self.n;
        let p = self.p;
        let mut a = self.a.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..n {
            let piv = (row..n).find(|&r| a[r * n + col] % p != 0);
            let Some(piv) = piv else { continue };
            for j in 0..n {
                a.swap(row * n + j, piv * n + j);
            }
            let inv = mod_inverse(a[row * n + col], p);
            for j in col..n {
                a[row * n + j] = (a[row * n + j] * inv).rem_euclid(p);
            }
            for r in 0..n {
                if r != row && a[r * n + col] != 0 {
                    let f = a[r * n + col];
                    for j in col..n {
                        a[r * n + j] = (a[r * n + j] - f * a[row * n + j]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == n {
                break;
            }
        }
        rank
    }
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // Fermat; p is prime and a nonzero mod p
    let mut result = 1i64;
    let mut base = a.rem_euclid(p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn unipotent_matrix(t: &JordanType, p: i64) -> PMatrix {
    let n = t.dim();
    let mut m = PMatrix::identity(n, p);
    let mut off = 0;
    for &b in &t.blocks {
        for i in 0..b - 1 {
            m.set(off + i, off + i + 1, 1);
        }
        off += b;
    }
    m
}

/// Jordan type of a unipotent matrix over the prime field, via the rank
/// sequence of powers of u - 1.
fn jordan_of_unipotent(u: &PMatrix) -> JordanType {
    let n = u.n;
    let p = u.p;
    let mut nil = u.clone();
    for i in 0..n {
        nil.set(i, i, nil.get(i, i) - 1);
    }
    // ranks[k] = rank((u-1)^k); blocks with size > k contribute size - k
    let mut ranks = vec![n];
    let mut pow = PMatrix::identity(n, p);
    loop {
        pow = pow.mul(&nil);
        let r = pow.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    // number of blocks of size exactly k: r_{k-1} - 2 r_k + r_{k+1}
    let kmax = ranks.len() - 1;
    let mut blocks = Vec::new();
    for k in 1..=kmax {
        let r_prev = ranks[k - 1];
        let r_k = ranks[k];
        let r_next = if k + 1 < ranks.len() { ranks[k + 1] } else { 0 };
        let count = (r_prev + r_next) as i64 - 2 * r_k as i64;
        assert!(count >= 0);
        for _ in 0..count {
            blocks.push(k);
        }
    }
    JordanType::new(blocks, p)
}

fn tensor_matrix(a: &PMatrix, b: &PMatrix) -> PMatrix {
    let n = a.n * b.n;
    let p = a.p;
    let mut out = PMatrix {
        n,
        p,
        a: vec![0; n * n],
    };
    for i1 in 0..a.n {
        for j1 in 0..a.n {
            let va = a.get(i1, j1);
            if va == 0 {
                continue;
            }
            for i2 in 0..b.n {
                for j2 in 0..b.n {
                    let vb = b.get(i2, j2);
                    if vb == 0 {
                        continue;
                    }
                    out.set(i1 * b.n + i2, j1 * b.n + j2, va * vb);
                }
            }
        }
    }
    out
}

fn wedge2_matrix(u: &PMatrix) -> PMatrix {
    let n = u.n;
    let p = u.p;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let dim = pairs.len();
    let idx = |i: usize, j: usize| -> (usize, i64) {
        // position of e_i ^ e_j with sign
        if i < j {
            (
                pairs.iter().position(|&(a, b)| a == i && b == j).unwrap(),
                1,
            )
        } else {
            (
                pairs.iter().position(|&(a, b)| a == j && b == i).unwrap(),
                -1,
            )
        }
    };
    let mut out = PMatrix {
        n: dim,
        p,
        a: vec![0; dim * dim],
    };
    for (col, &(j1, j2)) in pairs.iter().enumerate() {
        // u(e_j1) ^ u(e_j2)
        for i1 in 0..n {
            let v1 = u.get(i1, j1);
            if v1 == 0 {
                continue;
            }
            for i2 in 0..n {
                if i1 == i2 {
                    continue;
                }
                let v2 = u.get(i2, j2);
                if v2 == 0 {
                    continue;
                }
                let (row, sign) = idx(i1, i2);
                let cur = out.get(row, col);
                out.set(row, col, cur + sign * v1 * v2);
            }
        }
    }
    out
}

fn sym2_matrix(u: &PMatrix) -> PMatrix {
    let n = u.n;
    let p = u.p;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let dim = pairs.len();
    let pos = |i: usize, j: usize| -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        pairs.iter().position(|&(a, b)| a == i && b == j).unwrap()
    };
    let mut out = PMatrix {
        n: dim,
        p,
        a: vec![0; dim * dim],
    };
    for (col, &(j1, j2)) in pairs.iter().enumerate() {
        for i1 in 0..n {
            let v1 = u.get(i1, j1);
            if v1 == 0 {
                continue;
            }
            for i2 in 0..n {
                let v2 = u.get(i2, j2);
                if v2 == 0 {
                    continue;
                }
                let row = pos(i1, i2);
                let cur = out.get(row, col);
                out.set(row, col, cur + v1 * v2);
            }
        }
    }
    out
}

fn wedge3_matrix(u: &PMatrix) -> PMatrix {
    let n = u.n;
    let p = u.p;
    let mut triples = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                triples.push((i, j, k));
            }
        }
    }
    let dim = triples.len();
    let mut out = PMatrix {
        n: dim,
        p,
        a: vec![0; dim * dim],
    };
    let pos = |mut t: [usize; 3]| -> Option<(usize, i64)> {
        let mut sign = 1i64;
        // insertion sort tracking the permutation sign
        for a in 1..3 {
            let mut b = a;
            while b > 0 && t[b - 1] > t[b] {
                t.swap(b - 1, b);
                sign = -sign;
                b -= 1;
            }
        }
        if t[0] == t[1] || t[1] == t[2] {
            return None;
        }
        let row = triples
            .iter()
            .position(|&(a, b, c)| (a, b, c) == (t[0], t[1], t[2]))
            .unwrap();
        Some((row, sign))
    };
    for (col, &(j1, j2, j3)) in triples.iter().enumerate() {
        for i1 in 0..n {
            let v1 = u.get(i1, j1);
            if v1 == 0 {
                continue;
            }
            for i2 in 0..n {
                let v2 = u.get(i2, j2);
                if v2 == 0 {
                    continue;
                }
                for i3 in 0..n {
                    let v3 = u.get(i3, j3);
                    if v3 == 0 {
                        continue;
                    }
                    if let Some((row, sign)) = pos([i1, i2, i3]) {
                        let cur = out.get(row, col);
                        out.set(row, col, cur + sign * v1 * v2 * v3);
                    }
                }
            }
        }
    }
    out
}

fn sym3_matrix(u: &PMatrix) -> PMatrix {
    let n = u.n;
    let p = u.p;
    let mut triples = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                triples.push((i, j, k));
            }
        }
    }
    let dim = triples.len();
    let pos = |mut t: [usize; 3]| -> usize {
        t.sort_unstable();
        triples
            .iter()
            .position(|&(a, b, c)| (a, b, c) == (t[0], t[1], t[2]))
            .unwrap()
    };
    let mut out = PMatrix {
        n: dim,
        p,
        a: vec![0; dim * dim],
    };
    for (col, &(j1, j2, j3)) in triples.iter().enumerate() {
        for i1 in 0..n {
            let v1 = u.get(i1, j1);
            if v1 == 0 {
                continue;
            }
            for i2 in 0..n {
                let v2 = u.get(i2, j2);
                if v2 == 0 {
                    continue;
                }
                for i3 in 0..n {
                    let v3 = u.get(i3, j3);
                    if v3 == 0 {
                        continue;
                    }
                    let row = pos([i1, i2, i3]);
                    let cur = out.get(row, col);
                    out.set(row, col, cur + v1 * v2 * v3);
                }
            }
        }
    }
    out
}

fn check_same_p(a: &JordanType, b: &JordanType) -> Result<()> {
    if a.p != b.p {
        Err(NuError::Mismatch)
    } else {
        Ok(())
    }
}

/// Jordan type of the tensor product of two unipotent actions.
pub fn jordan_tensor(a: &JordanType, b: &JordanType) -> Result<JordanType> {
    check_same_p(a, b)?;
    let p = a.p;
    let max_sum = a.blocks.first().unwrap_or(&1) + b.blocks.first().unwrap_or(&1);
    if p == 0 || p >= max_sum as i64 {
        // Clebsch-Gordan regime: J_m (x) J_n = J_{m+n-1} + J_{m+n-3} + ...
        let mut blocks = Vec::new();
        for &m in &a.blocks {
            for &n in &b.blocks {
                let (lo, hi) = (m.min(n), m.max(n));
                for k in 0..lo {
                    blocks.push(hi + lo - 1 - 2 * k);
                }
            }
        }
        return Ok(JordanType::new(blocks, p));
    }
    let ua = unipotent_matrix(a, p);
    let ub = unipotent_matrix(b, p);
    Ok(jordan_of_unipotent(&tensor_matrix(&ua, &ub)))
}

/// Fixed-space dimension of the wedge square of a single block J_i at p=2.
pub fn wedge2_fixed_dim_char2(i: usize) -> usize {
    i / 2
}

/// The characteristic-2 recursion for the wedge square of a single Jordan
/// block J_i: with q the smallest power of 2 with q >= i,
/// wedge2(J_i) = wedge2(J_{q-i}) + (i - q/2 - 1) J_q + J_{3q/2 - i}.
fn wedge2_block_char2(i: usize) -> Vec<usize> {
    if i <= 1 {
        return vec![];
    }
    if i == 2 {
        return vec![1];
    }
    let mut q = 1usize;
    while q < i {
        q *= 2;
    }
    if i == q {
        // wedge2(J_q) = (q/2 - 1) J_q + J_{q/2}: the recursion with i = q
        let mut out = vec![q; q / 2 - 1];
        out.push(q / 2);
        return out;
    }
    let mut out = wedge2_block_char2(q - i);
    let extra = i as i64 - q as i64 / 2 - 1;
    if extra > 0 {
        out.extend(std::iter::repeat(q).take(extra as usize));
    }
    out.push(3 * q / 2 - i);
    out
}

/// Jordan type of the wedge square of a unipotent action.
pub fn jordan_wedge2(a: &JordanType) -> Result<JordanType> {
    let p = a.p;
    if p == 0 {
        let mut m = to_sl2_weights(a);
        m = wedge2_weights(&m);
        return Ok(JordanType::new(from_sl2_weights(m), 0));
    }
    if p == 2 {
        // expand over blocks: wedge2(A + B) = wedge2(A) + A(x)B + wedge2(B)
        let mut blocks = Vec::new();
        for (x, &bx) in a.blocks.iter().enumerate() {
            blocks.extend(wedge2_block_char2(bx));
            for &by in &a.blocks[x + 1..] {
                let t = jordan_tensor(
                    &JordanType::new(vec![bx], 2),
                    &JordanType::new(vec![by], 2),
                )?;
                blocks.extend(t.blocks);
            }
        }
        return Ok(JordanType::new(blocks, 2));
    }
    let u = unipotent_matrix(a, p);
    Ok(jordan_of_unipotent(&wedge2_matrix(&u)))
}

/// Jordan type of the symmetric square of a unipotent action.
pub fn jordan_sym2(a: &JordanType) -> Result<JordanType> {
    let p = a.p;
    if p == 0 {
        let m = to_sl2_weights(a);
        return Ok(JordanType::new(from_sl2_weights(sym2_weights(&m)), 0));
    }
    let u = unipotent_matrix(a, p);
    Ok(jordan_of_unipotent(&sym2_matrix(&u)))
}

/// Jordan type of the wedge cube of a unipotent action.
pub fn jordan_wedge3(a: &JordanType) -> Result<JordanType> {
    let p = a.p;
    if p == 0 {
        let m = to_sl2_weights(a);
        return Ok(JordanType::new(from_sl2_weights(wedge3_weights(&m)), 0));
    }
    let u = unipotent_matrix(a, p);
    Ok(jordan_of_unipotent(&wedge3_matrix(&u)))
}

/// Jordan type of the symmetric cube of a unipotent action.
pub fn jordan_sym3(a: &JordanType) -> Result<JordanType> {
    let p = a.p;
    if p == 0 {
        let m = to_sl2_weights(a);
        return Ok(JordanType::new(from_sl2_weights(sym3_weights(&m)), 0));
    }
    let u = unipotent_matrix(a, p);
    Ok(jordan_of_unipotent(&sym3_matrix(&u)))
}

fn tensor_weights(a: &BTreeMap<i64, i64>, b: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for (&wa, &ma) in a {
        for (&wb, &mb) in b {
            *out.entry(wa + wb).or_insert(0) += ma * mb;
        }
    }
    out
}

fn wedge2_weights(a: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    plethysm_weights(a, 2, true)
}

fn sym2_weights(a: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    plethysm_weights(a, 2, false)
}

fn wedge3_weights(a: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    plethysm_weights(a, 3, true)
}

fn sym3_weights(a: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    plethysm_weights(a, 3, false)
}

fn plethysm_weights(a: &BTreeMap<i64, i64>, k: usize, alternating: bool) -> BTreeMap<i64, i64> {
    let binom = |n: i64, r: i64| -> i64 {
        if r < 0 || r > n {
            return 0;
        }
        let mut acc = 1i64;
        for i in 0..r {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    };
    let mut state: Vec<BTreeMap<i64, i64>> = (0..=k).map(|_| BTreeMap::new()).collect();
    state[0].insert(0, 1);
    for (&w, &m) in a {
        let mut next: Vec<BTreeMap<i64, i64>> = (0..=k).map(|_| BTreeMap::new()).collect();
        for d in 0..=k {
            for j in 0..=(k - d) {
                let coeff = if alternating {
                    binom(m, j as i64)
                } else {
                    binom(m + j as i64 - 1, j as i64)
                };
                if coeff == 0 {
                    continue;
                }
                let st = state[d].clone();
                for (&sw, &sm) in &st {
                    *next[d + j].entry(sw + w * j as i64).or_insert(0) += sm * coeff;
                }
            }
        }
        state = next;
    }
    state.pop().unwrap()
}

/// Tensor over the sl2-weight backend (used in tests as an independent path).
pub fn jordan_tensor_char0_via_weights(a: &JordanType, b: &JordanType) -> JordanType {
    let m = tensor_weights(&to_sl2_weights(a), &to_sl2_weights(b));
    JordanType::new(from_sl2_weights(m), 0)
}

/// Upper bound for dim V_u(1) from a filtration with the given per-layer
/// fixed dimensions.
pub fn filtration_bound(level_fixed_dims: &[usize]) -> usize {
    level_fixed_dims.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn jt(blocks: &[usize], p: i64) -> JordanType {
        JordanType::new(blocks.to_vec(), p)
    }

    #[test]
    fn root_element_types() {
        let re = |f, l, c| RootElementSpec {
            fr: FamilyRank::new(f, l).unwrap(),
            class: c,
        };
        assert_eq!(
            root_element_on_natural(&re(Family::C, 3, RootElementClass::Alpha1))
                .unwrap()
                .blocks,
            vec![2, 2, 1, 1]
        );
        assert_eq!(
            root_element_on_natural(&re(Family::B, 3, RootElementClass::Alpha1))
                .unwrap()
                .blocks,
            vec![3, 1, 1, 1, 1]
        );
        assert_eq!(
            root_element_on_natural(&re(Family::B, 3, RootElementClass::AlphaEll))
                .unwrap()
                .blocks,
            vec![2, 2, 1, 1, 1]
        );
        assert_eq!(
            root_element_on_natural(&re(Family::A, 4, RootElementClass::Alpha1))
                .unwrap()
                .blocks,
            vec![2, 1, 1, 1]
        );
        assert_eq!(
            root_element_on_natural(&re(Family::D, 4, RootElementClass::AlphaEll))
                .unwrap()
                .blocks,
            vec![2, 2, 1, 1, 1, 1]
        );
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            jordan_tensor(&jt(&[2], 0), &jt(&[2], 0)).unwrap().blocks,
            vec![3, 1]
        );
        assert_eq!(
            jordan_tensor(&jt(&[2], 2), &jt(&[2], 2)).unwrap().blocks,
            vec![2, 2]
        );
        assert_eq!(
            jordan_tensor(&jt(&[1], 5), &jt(&[4], 5)).unwrap().blocks,
            vec![4]
        );
        // dimension always multiplies
        for p in [0, 2, 3, 5] {
            let a = jt(&[3, 2], p);
            let b = jt(&[4, 1], p);
            let t = jordan_tensor(&a, &b).unwrap();
            assert_eq!(t.dim(), a.dim() * b.dim());
        }
    }

    #[test]
    fn char0_tensor_matches_clebsch_gordan_and_weights() {
        for m in 1..=8usize {
            for n in 1..=8usize {
                let a = jt(&[m], 0);
                let b = jt(&[n], 0);
                let cg = jordan_tensor(&a, &b).unwrap();
                let expect: Vec<usize> = (0..m.min(n))
                    .map(|k| m + n - 1 - 2 * k)
                    .collect();
                assert_eq!(cg.blocks, expect);
                assert_eq!(jordan_tensor_char0_via_weights(&a, &b), cg);
            }
        }
    }

    #[test]
    fn char2_wedge_fixed_dims() {
        for i in 1..=64usize {
            let t = jordan_wedge2(&jt(&[i], 2)).unwrap();
            assert_eq!(t.fixed_dim(), wedge2_fixed_dim_char2(i), "block {i}");
            assert_eq!(t.dim(), i * (i - 1) / 2);
        }
    }

    #[test]
    fn char2_wedge_recursion_matches_matrices() {
        for i in 2..=12usize {
            let rec = jordan_wedge2(&jt(&[i], 2)).unwrap();
            let u = unipotent_matrix(&jt(&[i], 2), 2);
            let m = jordan_of_unipotent(&wedge2_matrix(&u));
            assert_eq!(rec, m, "block {i}");
        }
        // a sample with the stated full type
        assert_eq!(jordan_wedge2(&jt(&[6], 2)).unwrap().blocks, vec![8, 6, 1]);
        // multi-block expansion
        let t = jordan_wedge2(&jt(&[3, 2], 2)).unwrap();
        let u = unipotent_matrix(&jt(&[3, 2], 2), 2);
        assert_eq!(t, jordan_of_unipotent(&wedge2_matrix(&u)));
    }

    #[test]
    fn trivial_wedges() {
        assert_eq!(jordan_wedge2(&jt(&[1, 1], 0)).unwrap().blocks, vec![1]);
        assert_eq!(jordan_wedge2(&jt(&[1], 3)).unwrap().blocks, Vec::<usize>::new());
    }

    #[test]
    fn functors_agree_with_matrices_in_odd_characteristic() {
        for p in [3, 5, 7] {
            for blocks in [vec![4], vec![3, 2], vec![5, 1]] {
                let a = JordanType::new(blocks.clone(), p);
                let u = unipotent_matrix(&a, p);
                assert_eq!(
                    jordan_wedge2(&a).unwrap(),
                    jordan_of_unipotent(&wedge2_matrix(&u))
                );
                assert_eq!(
                    jordan_sym2(&a).unwrap(),
                    jordan_of_unipotent(&sym2_matrix(&u))
                );
            }
        }
    }

    #[test]
    fn char0_functor_dimensions() {
        let a = jt(&[4, 2], 0);
        let n = a.dim();
        assert_eq!(jordan_wedge2(&a).unwrap().dim(), n * (n - 1) / 2);
        assert_eq!(jordan_sym2(&a).unwrap().dim(), n * (n + 1) / 2);
        assert_eq!(jordan_wedge3(&a).unwrap().dim(), n * (n - 1) * (n - 2) / 6);
        assert_eq!(jordan_sym3(&a).unwrap().dim(), n * (n + 1) * (n + 2) / 6);
    }

    #[test]
    fn large_p_matches_char0() {
        // p larger than any block sum behaves like characteristic zero
        let a0 = jt(&[3, 2], 0);
        let b0 = jt(&[2, 2], 0);
        let a7 = jt(&[3, 2], 7);
        let b7 = jt(&[2, 2], 7);
        let t0 = jordan_tensor(&a0, &b0).unwrap();
        let t7 = jordan_tensor(&a7, &b7).unwrap();
        assert_eq!(t0.blocks, t7.blocks);
        let u = tensor_matrix(&unipotent_matrix(&a7, 7), &unipotent_matrix(&b7, 7));
        assert_eq!(jordan_of_unipotent(&u).blocks, t0.blocks);
    }

    #[test]
    fn construction_fixed_dims_from_propositions() {
        // wedge square of the natural symplectic module at the long root
        // element: fixed dimension 2l^2-3l+2 in characteristic zero
        for l in 2..=5usize {
            let re = RootElementSpec {
                fr: FamilyRank::new(Family::C, l).unwrap(),
                class: RootElementClass::AlphaEll,
            };
            let nat = root_element_on_natural(&re).unwrap();
            let w2 = jordan_wedge2(&nat).unwrap();
            assert_eq!(w2.fixed_dim(), 2 * l * l - 3 * l + 2);
        }
        // symmetric square for the special linear family: l(l+1)/2 blocks
        for l in 2..=5usize {
            let re = RootElementSpec {
                fr: FamilyRank::new(Family::A, l).unwrap(),
                class: RootElementClass::Alpha1,
            };
            let nat = root_element_on_natural(&re).unwrap();
            let s2 = jordan_sym2(&nat).unwrap();
            assert_eq!(s2.fixed_dim(), l * (l + 1) / 2);
        }
    }

    #[test]
    fn filtration_bound_sums() {
        assert_eq!(filtration_bound(&[3, 3, 3]), 9);
        assert_eq!(filtration_bound(&[7]), 7);
        // wedge cube route for the special linear family at rank 5:
        // binom(l,3) + l - 1 = 14
        let re = RootElementSpec {
            fr: FamilyRank::new(Family::A, 5).unwrap(),
            class: RootElementClass::Alpha1,
        };
        let nat = root_element_on_natural(&re).unwrap();
        let w3 = jordan_wedge3(&nat).unwrap();
        assert_eq!(w3.fixed_dim(), 14);
    }
}
