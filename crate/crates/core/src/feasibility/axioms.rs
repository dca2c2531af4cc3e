use std::collections::HashSet;

use crate::family::{AxiomViolation, SetFamily};
use crate::vertex::Indexer;

/// Dense membership bitmap is used up to this many ground elements.
const DENSE_BITS: usize = 24;
/// Union closure is checked over all `2^n` masks up to this size.
const SUBSET_DP_BITS: usize = 20;

/// Checks the antimatroid axioms in the order AM0, AM1, AM2 and reports the
/// first violation found.
pub fn verify_antimatroid(fam: &SetFamily) -> Result<(), AxiomViolation> {
    if !fam.contains(fam.ground()) {
        return Err(AxiomViolation::MissingGround {
            ground: fam.ground().clone(),
        });
    }
    match fam.masks() {
        Some((ix, masks)) => check_masks(&ix, &masks),
        None => check_sets(fam),
    }
}

enum Membership {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl Membership {
    fn new(n: usize, masks: &[u64]) -> Self {
        if n <= DENSE_BITS {
            let mut bits = vec![0u64; ((1usize << n) + 63) / 64];
            for &m in masks {
                bits[(m / 64) as usize] |= 1 << (m % 64);
            }
            Membership::Dense(bits)
        } else {
            Membership::Sparse(masks.iter().copied().collect())
        }
    }

    fn contains(&self, m: u64) -> bool {
        match self {
            Membership::Dense(bits) => bits[(m / 64) as usize] >> (m % 64) & 1 == 1,
            Membership::Sparse(set) => set.contains(&m),
        }
    }
}

fn check_masks(ix: &Indexer, masks: &[u64]) -> Result<(), AxiomViolation> {
    let member = Membership::new(ix.len(), masks);
    let pair = if ix.len() <= SUBSET_DP_BITS {
        union_violation_dp(ix.len(), &member)
    } else {
        union_violation_pairs(masks, &member)
    };
    if let Some((a, b)) = pair {
        let (a, b) = (ix.set(a), ix.set(b));
        let (left, right) = if a <= b { (a, b) } else { (b, a) };
        return Err(AxiomViolation::NotUnionClosed { left, right });
    }
    for &m in masks {
        if m == 0 {
            continue;
        }
        let mut rest = m;
        let mut accessible = false;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if member.contains(m & !bit) {
                accessible = true;
                break;
            }
            rest &= rest - 1;
        }
        if !accessible {
            return Err(AxiomViolation::NotAccessible { set: ix.set(m) });
        }
    }
    Ok(())
}

fn union_violation_pairs(masks: &[u64], member: &Membership) -> Option<(u64, u64)> {
    for (n, &a) in masks.iter().enumerate() {
        for &b in &masks[n + 1..] {
            // Nested pairs are trivially closed.
            if a & b == a || a & b == b {
                continue;
            }
            if !member.contains(a | b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `g(M)`, the union of the members inside `M`, is a member for every `M`
/// iff the family is union closed. Masks are visited in increasing order, so
/// at the first failure every `g(M ∖ {x})` is a member and folding them
/// together exposes a concrete pair.
fn union_violation_dp(n: usize, member: &Membership) -> Option<(u64, u64)> {
    const NONE: u64 = u64::MAX;
    let mut g = vec![NONE; 1 << n];
    for m in 0..g.len() as u64 {
        if member.contains(m) {
            g[m as usize] = m;
            continue;
        }
        let mut acc = NONE;
        let mut rest = m;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let part = g[(m & !bit) as usize];
            if part == NONE {
                continue;
            }
            if acc == NONE || member.contains(acc | part) {
                acc = if acc == NONE { part } else { acc | part };
            } else {
                return Some((acc, part));
            }
        }
        g[m as usize] = acc;
    }
    None
}

fn check_sets(fam: &SetFamily) -> Result<(), AxiomViolation> {
    let sets = fam.sets();
    for (n, a) in sets.iter().enumerate() {
        for b in &sets[n + 1..] {
            if !fam.contains(&a.union(b)) {
                return Err(AxiomViolation::NotUnionClosed {
                    left: a.clone(),
                    right: b.clone(),
                });
            }
        }
    }
    for s in sets.iter().filter(|s| !s.is_empty()) {
        if !s.iter().any(|v| fam.contains(&s.without(v))) {
            return Err(AxiomViolation::NotAccessible { set: s.clone() });
        }
    }
    Ok(())
}
