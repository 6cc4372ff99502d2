//! Partition statistics and the `b`/`a'` sequences built from `{a_m}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gmodule::{ASequence, Partition};
use crate::polyring::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// `z_λ = Π_i i^{m_i} m_i!`.
    pub z: Rational,
    /// `m_i(λ)` for every part size `i` that occurs.
    pub multiplicities: BTreeMap<u32, u32>,
    /// `(-1)^{Σ (λ_i - 1)}`.
    pub sgn: i8,
}

pub fn partition_stats(lambda: &Partition) -> PartitionStats {
    let mut multiplicities = BTreeMap::new();
    for &p in lambda.parts() {
        *multiplicities.entry(p).or_insert(0u32) += 1;
    }
    let mut z = BigInt::one();
    for (&part, &m) in &multiplicities {
        z *= BigInt::from(part).pow(m);
        z *= (1..=m).map(BigInt::from).product::<BigInt>();
    }
    let exponent: u32 = lambda.parts().iter().map(|p| p - 1).sum();
    PartitionStats {
        z: Rational::from_integer(z),
        multiplicities,
        sgn: if exponent % 2 == 0 { 1 } else { -1 },
    }
}

fn b_product(b: &[Rational], lambda: &Partition) -> Rational {
    lambda.parts().iter().map(|&p| b[p as usize].clone()).product()
}

fn solve_b(a: &ASequence, len: usize, with_weight: bool) -> ASequence {
    let mut b = vec![Rational::zero(); len + 1];
    for l in 1..=len {
        let mut rest = a.eval(l);
        for lambda in Partition::all(l) {
            if lambda.part(0) as usize == l {
                continue;
            }
            rest -= b_product(&b, &lambda) / partition_stats(&lambda).z;
        }
        b[l] = if with_weight { rest * Rational::from_integer(BigInt::from(l)) } else { rest };
    }
    ASequence::Finite(b)
}

/// `b_1..b_L` with `a_l = Σ_{λ ⊢ l} b_λ / z_λ`, i.e.
/// `b_l = l · (a_l - Σ_{λ ⊢ l, λ_1 < l} b_λ / z_λ)`. Index 0 holds 0.
pub fn b_from_a(a: &ASequence, len: usize) -> ASequence {
    solve_b(a, len, true)
}

/// The recursion `b_l = a_l - Σ_{λ ⊢ l, λ_1 < l} b_λ / z_λ` taken without the
/// `z_{(l)} = l` factor. Kept for comparison only; it does not satisfy
/// `a_l = Σ b_λ / z_λ` for `l ≥ 2`.
pub fn b_from_a_literal(a: &ASequence, len: usize) -> ASequence {
    solve_b(a, len, false)
}

/// `a'_0..a'_L` with `a'_l = Σ_{λ ⊢ l} sgn(λ) b_λ / z_λ` and `b = b_from_a(a)`.
pub fn dual_a(a: &ASequence, len: usize) -> ASequence {
    let b = match b_from_a(a, len) {
        ASequence::Finite(v) => v,
        _ => unreachable!(),
    };
    let values = (0..=len)
        .map(|l| {
            Partition::all(l)
                .iter()
                .map(|lambda| {
                    let s = partition_stats(lambda);
                    let signed = if s.sgn < 0 { -b_product(&b, lambda) } else { b_product(&b, lambda) };
                    signed / s.z
                })
                .sum()
        })
        .collect();
    ASequence::Finite(values)
}

/// Coefficients of `a(t) · a'(-t)` up to `t^len`.
pub fn product_with_reflected(a: &ASequence, a_dual: &ASequence, len: usize) -> Vec<Rational> {
    (0..=len)
        .map(|k| {
            (0..=k)
                .map(|j| {
                    let term = a.eval(j) * a_dual.eval(k - j);
                    if (k - j) % 2 == 1 {
                        -term
                    } else {
                        term
                    }
                })
                .sum()
        })
        .collect()
}

/// Indices `1..=len` at which `b_l = 0`.
pub fn vanishing_b(b: &ASequence, len: usize) -> Vec<usize> {
    (1..=len).filter(|&l| b.eval(l).is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{int, rat};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn stats_examples() {
        let s = partition_stats(&p(&[1, 1]));
        assert_eq!((s.z, s.sgn), (int(2), 1));
        let s = partition_stats(&p(&[2, 1]));
        assert_eq!((s.z, s.sgn), (int(2), -1));
        let s = partition_stats(&p(&[3]));
        assert_eq!((s.z, s.sgn), (int(3), 1));
        assert_eq!(s.multiplicities, BTreeMap::from([(3, 1)]));
        assert_eq!(partition_stats(&Partition::empty()).z, int(1));
    }

    #[test]
    fn z_sums_to_one_over_factorial() {
        // Σ_{λ ⊢ n} 1/z_λ = 1 (class sizes n!/z_λ add up to n!)
        for n in 0..8 {
            let total: Rational = Partition::all(n).iter().map(|l| int(1) / partition_stats(l).z).sum();
            assert_eq!(total, int(1));
        }
    }

    #[test]
    fn b_for_ones_is_all_ones() {
        let b = b_from_a(&ASequence::Ones, 6);
        for l in 1..=6 {
            assert_eq!(b.eval(l), int(1));
        }
        let any = ASequence::Finite(vec![int(1), rat(7, 3), int(2)]);
        assert_eq!(b_from_a(&any, 3).eval(1), rat(7, 3));
    }

    #[test]
    fn b_for_one_two_vanishes_at_even_indices() {
        let b = b_from_a(&ASequence::OneTwo, 6);
        let got: Vec<Rational> = (1..=6).map(|l| b.eval(l)).collect();
        assert_eq!(got, [int(2), int(0), int(2), int(0), int(2), int(0)]);
        assert_eq!(vanishing_b(&b, 6), [2, 4, 6]);
    }

    #[test]
    fn literal_recursion_differs_from_second_order_on() {
        let lit = b_from_a_literal(&ASequence::Ones, 3);
        assert_eq!(lit.eval(1), int(1));
        assert_eq!(lit.eval(2), rat(1, 2));
        let lit_dual = {
            // a' built from the literal b breaks a(t)·a'(-t) = 1 at order 2
            let b = match lit {
                ASequence::Finite(v) => v,
                _ => unreachable!(),
            };
            let a2: Rational = Partition::all(2)
                .iter()
                .map(|l| {
                    let s = partition_stats(l);
                    let v = b_product(&b, l) / s.z;
                    if s.sgn < 0 { -v } else { v }
                })
                .sum();
            ASequence::Finite(vec![int(1), b[1].clone(), a2])
        };
        assert_ne!(product_with_reflected(&ASequence::Ones, &lit_dual, 2)[2], int(0));
    }

    #[test]
    fn dual_of_ones() {
        let d = dual_a(&ASequence::Ones, 6);
        let got: Vec<Rational> = (0..=6).map(|l| d.eval(l)).collect();
        assert_eq!(got, [int(1), int(1), int(0), int(0), int(0), int(0), int(0)]);
    }

    #[test]
    fn reflected_product_is_one() {
        for a in [ASequence::Ones, ASequence::OneTwo, ASequence::InvFactorial] {
            let d = dual_a(&a, 6);
            let prod = product_with_reflected(&a, &d, 6);
            assert_eq!(prod[0], int(1));
            assert!(prod[1..].iter().all(Zero::is_zero), "{a}");
        }
    }
}
