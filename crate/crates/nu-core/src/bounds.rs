//! The lower bound s_lambda for nu: for each sub-dominant weight lambda',
//! the quantity r_Psi attached to the subsystem generated by the simple roots
//! orthogonal to lambda', summed over all sub-dominant weights.

use crate::character::subdominant_weights;
use crate::rootsys::*;
use crate::{NuError, Result};

/// Number of roots and Weyl-group order of an irreducible subsystem
/// component of the given type and rank.
fn component_counts(family: Family, k: usize) -> (i128, i128) {
    let k = k as i128;
    let fact = |n: i128| (1..=n).product::<i128>();
    match family {
        Family::A => (k * (k + 1), fact(k + 1)),
        Family::B | Family::C => (2 * k * k, fact(k) << k),
        Family::D => (2 * k * (k - 1), fact(k) << (k - 1)),
    }
}

/// Connected components of the sub-Dynkin diagram on the given simple-root
/// indices (1-based), each with its inherited type.
fn components(fr: &FamilyRank, subset: &[usize]) -> Vec<(Family, Vec<usize>)> {
    let c = cartan(fr);
    let mut remaining: Vec<usize> = subset.to_vec();
    remaining.sort_unstable();
    remaining.dedup();
    let mut out = Vec::new();
    while let Some(&start) = remaining.first() {
        let mut comp = vec![start];
        remaining.retain(|&x| x != start);
        let mut frontier = vec![start];
        while let Some(cur) = frontier.pop() {
            let adjacent: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&x| c[cur - 1][x - 1] != 0)
                .collect();
            for x in adjacent {
                remaining.retain(|&y| y != x);
                comp.push(x);
                frontier.push(x);
            }
        }
        comp.sort_unstable();
        let l = fr.rank;
        let family = match fr.family {
            Family::A => Family::A,
            Family::B => {
                if comp.contains(&l) {
                    Family::B
                } else {
                    Family::A
                }
            }
            Family::C => {
                if comp.contains(&l) {
                    Family::C
                } else {
                    Family::A
                }
            }
            Family::D => {
                if comp.contains(&l) && comp.contains(&(l - 1)) {
                    Family::D
                } else {
                    Family::A
                }
            }
        };
        out.push((family, comp));
    }
    out
}

/// r_Psi = |W : W(Psi)| * |Phi minus Psi| / (2 |Phi_short|), for the
/// subsystem Psi generated by a subset of the simple roots. Rational in
/// general; integral for every subset arising from a dominant weight.
pub fn r_psi(fr: &FamilyRank, subset: &[usize]) -> num_rational::Ratio<i128> {
    let l = fr.rank as i128;
    let (phi, weyl) = component_counts(fr.family, fr.rank);
    let phi_short = match fr.family {
        Family::A => l * (l + 1),
        Family::B => 2 * l,
        Family::C => 2 * l * (l - 1),
        Family::D => 2 * l * (l - 1),
    };
    let mut psi_roots: i128 = 0;
    let mut psi_weyl: i128 = 1;
    for (family, comp) in components(fr, subset) {
        let (r, w) = component_counts(family, comp.len());
        psi_roots += r;
        psi_weyl *= w;
    }
    num_rational::Ratio::new(weyl * (phi - psi_roots), psi_weyl * 2 * phi_short)
}

/// Indices of the simple roots orthogonal to the weight (zero coordinates).
pub fn orthogonal_subset(w: &Weight) -> Vec<usize> {
    w.iter()
        .enumerate()
        .filter(|(_, &d)| d == 0)
        .map(|(i, _)| i + 1)
        .collect()
}

/// s_lambda = sum of r_Psi(lambda') over the sub-dominant weights lambda'.
pub fn s_lambda(fr: &FamilyRank, lambda: &Weight) -> Result<i128> {
    if !is_dominant(lambda) {
        return Err(NuError::NotDominant(lambda.clone()));
    }
    let mut total = num_rational::Ratio::from_integer(0i128);
    for mu in subdominant_weights(fr, lambda)? {
        total += r_psi(fr, &orthogonal_subset(&mu));
    }
    assert!(total.is_integer(), "s_lambda must be an integer");
    Ok(total.to_integer())
}
