//! Weighted complete symmetric polynomials `h_i^{a}` and power sums.

use crate::gmodule::{ASequence, Partition};
use crate::polyring::{Monomial, MultiPoly, Rational};

use super::stats::partition_stats;

/// `h_i^{a}(t_1..t_n)`, the coefficient of `t^i` in `a(t_1 t)⋯a(t_n t)`,
/// via `h_i(t_1..t_n) = Σ_j h_j(t_1..t_{n-1}) h_{i-j}(t_n)` with
/// `h_i(t_1) = a_i t_1^i`. For `n = 0` this is the empty product.
pub fn weighted_complete(a: &ASequence, i: usize, n: usize) -> MultiPoly {
    weighted_complete_table(a, i, n).swap_remove(i)
}

/// `[h_0, …, h_max]` in `n` variables.
pub fn weighted_complete_table(a: &ASequence, max: usize, n: usize) -> Vec<MultiPoly> {
    let coeffs = a.prefix(max + 1);
    let mut table: Vec<MultiPoly> = (0..=max)
        .map(|j| if j == 0 { MultiPoly::one(n) } else { MultiPoly::zero(n) })
        .collect();
    for k in 0..n {
        let single: Vec<MultiPoly> = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| MultiPoly::one(n).mul_var_pow(k, j as u32).scale(c))
            .collect();
        table = (0..=max)
            .map(|i| {
                let mut acc = MultiPoly::zero(n);
                for j in 0..=i {
                    acc.add_assign_ref(&(&table[j] * &single[i - j]));
                }
                acc
            })
            .collect();
    }
    table
}

/// `h_i^{a}` by expanding the truncated product `a(t_1 t)⋯a(t_n t)` in
/// `n + 1` variables and reading off the `t^i` coefficient.
pub fn weighted_complete_by_extraction(a: &ASequence, i: usize, n: usize) -> MultiPoly {
    let t = n;
    let cap = 2 * i as u32;
    let mut product = MultiPoly::one(n + 1);
    for k in 0..n {
        let mut factor = MultiPoly::zero(n + 1);
        for m in 0..=i {
            let mut exps = vec![0; n + 1];
            exps[k] = m as u32;
            exps[t] = m as u32;
            factor.add_term(Monomial::new(exps), a.eval(m));
        }
        product = product.mul_truncated(&factor, cap);
    }
    if n == 0 {
        return if i == 0 { MultiPoly::one(0) } else { MultiPoly::zero(0) };
    }
    let mut out = MultiPoly::zero(n);
    for (m, c) in product.terms() {
        if m.exps()[t] as usize == i {
            out.add_term(Monomial::new(m.exps()[..n].to_vec()), c.clone());
        }
    }
    out
}

/// `p_k(t_1..t_n) = t_1^k + ⋯ + t_n^k`.
pub fn power_sum(k: usize, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for v in 0..n {
        out.add_assign_ref(&MultiPoly::one(n).mul_var_pow(v, k as u32));
    }
    out
}

/// `Σ_{λ ⊢ i} b_λ p_λ / z_λ` with `b_λ = Π b_{λ_j}` (`b` indexed from 1).
pub fn lam_complete(b: &ASequence, i: usize, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for lambda in Partition::all(i) {
        let stats = partition_stats(&lambda);
        let mut term = MultiPoly::one(n);
        let mut weight = Rational::from_integer(1.into());
        for &part in lambda.parts() {
            term = &term * &power_sum(part as usize, n);
            weight *= b.eval(part as usize);
        }
        out.add_scaled(&term, &(weight / stats.z));
    }
    out
}

/// `(t_1 + ⋯ + t_n)^i / i!`.
pub fn exponential_term(i: usize, n: usize) -> MultiPoly {
    power_sum(1, n).pow(i as u32).scale(&ASequence::InvFactorial.eval(i))
}
