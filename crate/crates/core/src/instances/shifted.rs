//! Shifted shapes of strict partitions. Row `r` (1-based) of the shifted
//! diagram of `λ` occupies columns `r ..= λ_r + r - 1`; the main diagonal is
//! the set of boxes with `r = c`.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;

use crate::gmodule::{
    ASequence, BasisElement, BasisKind, FormalVector, Lattice, ModuleError, StrictPartition,
};
use crate::polyring::Rational;

type Cell = (u32, u32);

pub fn shifted_cells(lambda: &StrictPartition) -> BTreeSet<Cell> {
    let mut cells = BTreeSet::new();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let r = idx as u32 + 1;
        for c in r..r + part {
            cells.insert((r, c));
        }
    }
    cells
}

/// Connected components of a skew shifted shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewComponentCount {
    /// All edge-connected components.
    pub cc: u32,
    /// Components that do not meet the main diagonal.
    pub cc0: u32,
}

fn components(cells: &BTreeSet<Cell>) -> SkewComponentCount {
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut cc = 0;
    let mut cc0 = 0;
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        cc += 1;
        let mut on_diagonal = false;
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some((r, c)) = queue.pop_front() {
            on_diagonal |= r == c;
            let neighbours = [(r + 1, c), (r.wrapping_sub(1), c), (r, c + 1), (r, c.wrapping_sub(1))];
            for n in neighbours {
                if cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        if !on_diagonal {
            cc0 += 1;
        }
    }
    SkewComponentCount { cc, cc0 }
}

/// `cc` and `cc0` of the skew shape `λ ∖ ν`.
pub fn shifted_cc(
    lambda: &StrictPartition,
    nu: &StrictPartition,
) -> Result<SkewComponentCount, ModuleError> {
    let outer = shifted_cells(lambda);
    let inner = shifted_cells(nu);
    if !inner.is_subset(&outer) {
        return Err(ModuleError::Precondition(format!("{nu} is not contained in {lambda}")));
    }
    Ok(components(&outer.difference(&inner).copied().collect()))
}

/// `Some(counts)` when `ν ⊆ λ` and the boxes of `λ ∖ ν` lie on distinct
/// diagonals (distinct `c - r`).
fn diagonal_strip(lambda: &StrictPartition, nu: &StrictPartition) -> Option<SkewComponentCount> {
    let outer = shifted_cells(lambda);
    let inner = shifted_cells(nu);
    if !inner.is_subset(&outer) {
        return None;
    }
    let skew: BTreeSet<Cell> = outer.difference(&inner).copied().collect();
    let diagonals: BTreeSet<u32> = skew.iter().map(|&(r, c)| c - r).collect();
    if diagonals.len() != skew.len() {
        return None;
    }
    Some(components(&skew))
}

fn pow2(e: u32) -> Rational {
    Rational::from_integer(BigInt::from(1u64) << e)
}

/// `U_i λ = Σ_μ 2^{cc(μ∖λ)} μ` over `μ` obtained by adding `i` boxes on
/// distinct diagonals.
pub fn shifted_up(i: usize, lambda: &StrictPartition) -> FormalVector {
    FormalVector::scalar(StrictPartition::all(lambda.size() + i).into_iter().filter_map(|mu| {
        diagonal_strip(&mu, lambda).map(|k| (BasisElement::StrictPartition(mu), pow2(k.cc)))
    }))
}

/// `D_i λ = Σ_ν 2^{cc0(λ∖ν)} ν` over `ν` obtained by removing `i` boxes on
/// distinct diagonals.
pub fn shifted_down(i: usize, lambda: &StrictPartition) -> FormalVector {
    if i > lambda.size() {
        return FormalVector::zero(0);
    }
    FormalVector::scalar(StrictPartition::all(lambda.size() - i).into_iter().filter_map(|nu| {
        diagonal_strip(lambda, &nu).map(|k| (BasisElement::StrictPartition(nu), pow2(k.cc0)))
    }))
}

/// Shifted shapes with `a = 1,2,2,2,…`.
#[derive(Clone, Debug, Default)]
pub struct Shifted;

fn as_strict(b: &BasisElement) -> &StrictPartition {
    match b {
        BasisElement::StrictPartition(p) => p,
        other => panic!("shifted lattice given a non-strict partition {other}"),
    }
}

impl Lattice for Shifted {
    fn name(&self) -> String {
        "shifted".into()
    }

    fn kind(&self) -> BasisKind {
        BasisKind::StrictPartition
    }

    fn level(&self, k: usize) -> Vec<BasisElement> {
        StrictPartition::all(k).into_iter().map(BasisElement::StrictPartition).collect()
    }

    fn up(&self, i: usize, b: &BasisElement) -> FormalVector {
        shifted_up(i, as_strict(b))
    }

    fn down(&self, i: usize, b: &BasisElement) -> FormalVector {
        shifted_down(i, as_strict(b))
    }

    fn a_seq(&self) -> ASequence {
        ASequence::OneTwo
    }

    fn minimum(&self) -> Option<BasisElement> {
        Some(BasisElement::StrictPartition(StrictPartition::empty()))
    }
}
