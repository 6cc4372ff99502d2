//! The graded module `V = ⊕ V_i` spanned by a lattice basis, the natural
//! pairing, generating-series application and adjoints.

mod basis;
mod series;
mod vector;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyring::{int, Rational};

pub use basis::{BasisElement, BasisKind, BinaryTree, Partition, StrictPartition, Word};
pub use series::{
    adjoint_component, apply_down, apply_down_series, apply_up, apply_up_series, down_product,
    schur_d, schur_d_vars, schur_u, schur_u_vars, up_product, AdjointLattice, Direction,
    LevelMatrix,
};
pub use vector::{pairing, FormalVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("invalid basis element: {0}")]
    InvalidElement(String),
    #[error("basis kind mismatch: {0:?} vs {1:?}")]
    KindMismatch(BasisKind, BasisKind),
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A scalar sequence `{a_m}`; its generating function is `a(x) = Σ a_m x^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ASequence {
    /// `1, 1, 1, …`, i.e. `1/(1-x)`.
    Ones,
    /// `1, 1, 0, 0, …`, i.e. `1 + x`.
    OneOne,
    /// `1, 2, 2, …`, i.e. `(1+x)/(1-x)`.
    OneTwo,
    /// `1/m!`, i.e. `exp(x)`.
    InvFactorial,
    /// Explicit leading values; zero beyond the table.
    Finite(Vec<Rational>),
}

impl ASequence {
    pub fn eval(&self, m: usize) -> Rational {
        match self {
            ASequence::Ones => Rational::one(),
            ASequence::OneOne => {
                if m <= 1 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            ASequence::OneTwo => {
                if m == 0 {
                    Rational::one()
                } else {
                    int(2)
                }
            }
            ASequence::InvFactorial => {
                let fact: BigInt = (1..=m as u64).map(BigInt::from).product();
                Rational::new(BigInt::one(), fact)
            }
            ASequence::Finite(v) => v.get(m).cloned().unwrap_or_else(Rational::zero),
        }
    }

    /// `a_0, …, a_len-1`.
    pub fn prefix(&self, len: usize) -> Vec<Rational> {
        (0..len).map(|m| self.eval(m)).collect()
    }

    pub fn name(&self) -> &'static str {
        match self {
            ASequence::Ones => "ones",
            ASequence::OneOne => "one-one",
            ASequence::OneTwo => "one-two",
            ASequence::InvFactorial => "inv-factorial",
            ASequence::Finite(_) => "finite",
        }
    }

    pub fn from_name(name: &str) -> Option<ASequence> {
        match name {
            "ones" => Some(ASequence::Ones),
            "one-one" => Some(ASequence::OneOne),
            "one-two" => Some(ASequence::OneTwo),
            "inv-factorial" => Some(ASequence::InvFactorial),
            _ => None,
        }
    }
}

impl fmt::Display for ASequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ASequence::Finite(v) => {
                let vals: Vec<String> = v.iter().map(|r| r.to_string()).collect();
                write!(f, "({})", vals.join(","))
            }
            other => write!(f, "{}", other.name()),
        }
    }
}

/// A graded lattice with a pair of operator families.
///
/// `up(i, b)` must be supported on rank `rank(b) + i` and `down(i, b)` on
/// rank `rank(b) - i`. Both return vectors with constant coefficients
/// (zero variables). Every level must be finite.
pub trait Lattice: Send + Sync {
    fn name(&self) -> String;

    fn kind(&self) -> BasisKind;

    /// The basis `Y_k` in canonical order.
    fn level(&self, k: usize) -> Vec<BasisElement>;

    fn rank(&self, b: &BasisElement) -> usize {
        b.rank()
    }

    fn up(&self, i: usize, b: &BasisElement) -> FormalVector;

    fn down(&self, i: usize, b: &BasisElement) -> FormalVector;

    fn a_seq(&self) -> ASequence;

    fn minimum(&self) -> Option<BasisElement>;

    /// Coefficient `u_0` with `U_0 ∅ = u_0 ∅`.
    fn u0(&self) -> Option<Rational> {
        let m = self.minimum()?;
        Some(self.up(0, &m).coeff(&m).constant_term())
    }

    /// Coefficient `d_0` with `D_0 ∅ = d_0 ∅`.
    fn d0(&self) -> Option<Rational> {
        let m = self.minimum()?;
        Some(self.down(0, &m).coeff(&m).constant_term())
    }
}

pub type SharedLattice = Arc<dyn Lattice>;

/// All basis elements of rank at most `max_rank`.
pub fn basis_up_to(inst: &dyn Lattice, max_rank: usize) -> Vec<BasisElement> {
    (0..=max_rank).flat_map(|k| inst.level(k)).collect()
}
