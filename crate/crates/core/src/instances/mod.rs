//! Concrete lattices: Young's lattice (horizontal and vertical strip up
//! families), shifted shapes, planar binary trees (right- and left-strict up
//! families) and the monomial basis of `K[x]`.

mod monomial;
mod shifted;
mod tree;
mod young;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::gmodule::{BasisElement, Lattice, SharedLattice};

pub use monomial::{mono_down, mono_up, Monomials};
pub use shifted::{shifted_cc, shifted_cells, shifted_down, shifted_up, Shifted, SkewComponentCount};
pub use tree::{
    strict_additions, tree_down, tree_evacuate, tree_r_chain, tree_up_left, tree_up_right,
    Strictness, Trees,
};
pub use young::{
    horizontal_strip_additions, horizontal_strip_removals, young_down, young_dual_up, young_up,
    StripKind, Young,
};

/// The six built-in operator configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InstanceName {
    Young,
    YoungDual,
    Shifted,
    Tree,
    TreeDual,
    Monomial,
}

impl InstanceName {
    pub const ALL: [InstanceName; 6] = [
        InstanceName::Young,
        InstanceName::YoungDual,
        InstanceName::Shifted,
        InstanceName::Tree,
        InstanceName::TreeDual,
        InstanceName::Monomial,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InstanceName::Young => "young",
            InstanceName::YoungDual => "young-dual",
            InstanceName::Shifted => "shifted",
            InstanceName::Tree => "tree",
            InstanceName::TreeDual => "tree-dual",
            InstanceName::Monomial => "monomial",
        }
    }

    pub fn build(self) -> SharedLattice {
        match self {
            InstanceName::Young => Arc::new(Young::new()),
            InstanceName::YoungDual => Arc::new(Young::dual()),
            InstanceName::Shifted => Arc::new(Shifted),
            InstanceName::Tree => Arc::new(Trees::right_strict()),
            InstanceName::TreeDual => Arc::new(Trees::left_strict()),
            InstanceName::Monomial => Arc::new(Monomials),
        }
    }
}

impl fmt::Display for InstanceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InstanceName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InstanceName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown instance `{s}`"))
    }
}

/// `Y_k` for the given lattice, canonically ordered.
pub fn level_enumerate(inst: &dyn Lattice, k: usize) -> Vec<BasisElement> {
    inst.level(k)
}
