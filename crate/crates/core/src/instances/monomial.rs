//! The polynomial ring `K[x]` with basis `x^d`, `D_i = ∂^i/i!` and
//! `U_i = x^i/i!`, so that `D(t) = exp(t∂)` and `U(t) = exp(tx)`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::gmodule::{ASequence, BasisElement, BasisKind, FormalVector, Lattice};
use crate::polyring::Rational;

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `D_i x^d = C(d, i) x^{d-i}`, zero for `i > d`.
pub fn mono_down(i: u32, d: u32) -> FormalVector {
    if i > d {
        return FormalVector::zero(0);
    }
    let c = Rational::from_integer(binomial(BigInt::from(d), BigInt::from(i)));
    FormalVector::scalar([(BasisElement::MonomialDegree(d - i), c)])
}

/// `U_i x^d = x^{d+i} / i!`.
pub fn mono_up(i: u32, d: u32) -> FormalVector {
    let c = Rational::new(BigInt::one(), factorial(i));
    FormalVector::scalar([(BasisElement::MonomialDegree(d + i), c)])
}

/// Monomials `x^d` (all normalising constants equal to 1), `a_m = 1/m!`.
#[derive(Clone, Debug, Default)]
pub struct Monomials;

fn degree(b: &BasisElement) -> u32 {
    match b {
        BasisElement::MonomialDegree(d) => *d,
        other => panic!("monomial lattice given {other}"),
    }
}

impl Lattice for Monomials {
    fn name(&self) -> String {
        "monomial".into()
    }

    fn kind(&self) -> BasisKind {
        BasisKind::MonomialDegree
    }

    fn level(&self, k: usize) -> Vec<BasisElement> {
        vec![BasisElement::MonomialDegree(k as u32)]
    }

    fn up(&self, i: usize, b: &BasisElement) -> FormalVector {
        mono_up(i as u32, degree(b))
    }

    fn down(&self, i: usize, b: &BasisElement) -> FormalVector {
        mono_down(i as u32, degree(b))
    }

    fn a_seq(&self) -> ASequence {
        ASequence::InvFactorial
    }

    fn minimum(&self) -> Option<BasisElement> {
        Some(BasisElement::MonomialDegree(0))
    }
}
