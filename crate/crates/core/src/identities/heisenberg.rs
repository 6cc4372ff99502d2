//! Boson operators `B_l`, `B_{-l}` built from the operator families and
//! their commutators.

use rayon::prelude::*;

use super::stats::{b_from_a, partition_stats};
use super::{compare_vectors, CheckReport, Counterexample};
use crate::gmodule::{apply_down, apply_up, basis_up_to, FormalVector, Lattice, Partition};
use crate::polyring::{int, Rational};

/// `B_l v` (lowering) or `B_{-l} v` (raising), the unique operators with
/// `D_l = Σ_{λ ⊢ l} B_λ / z_λ` and `B_λ = B_{λ_1} B_{λ_2} ⋯`, i.e.
/// `B_l = l · (D_l - Σ_{λ ⊢ l, λ_1 < l} B_λ / z_λ)`; likewise with `U_l`.
pub fn apply_boson(inst: &dyn Lattice, l: usize, raising: bool, v: &FormalVector) -> FormalVector {
    let mut out = if raising { apply_up(inst, l, v) } else { apply_down(inst, l, v) };
    for lambda in Partition::all(l) {
        if lambda.part(0) as usize == l {
            continue;
        }
        let mut cur = v.clone();
        for &p in lambda.parts().iter().rev() {
            cur = apply_boson(inst, p as usize, raising, &cur);
        }
        out.add_rational_scaled(&cur, &(-int(1) / partition_stats(&lambda).z));
    }
    out.scale(&int(l as i64))
}

/// `[B_l, B_{-k}] = δ_{lk} l b_l I` on every basis element of rank
/// `<= rank_cap`.
pub fn check_heisenberg(inst: &dyn Lattice, l: usize, k: usize, rank_cap: usize) -> CheckReport {
    let b = b_from_a(&inst.a_seq(), l.max(k));
    let scale: Rational = if l == k { int(l as i64) * b.eval(l) } else { int(0) };
    let found: Vec<Counterexample> = basis_up_to(inst, rank_cap)
        .par_iter()
        .flat_map_iter(|e| {
            let v = FormalVector::basis(e.clone());
            let lhs = apply_boson(inst, l, false, &apply_boson(inst, k, true, &v))
                .sub(&apply_boson(inst, k, true, &apply_boson(inst, l, false, &v)));
            let rhs = v.scale(&scale);
            let mut out = Vec::new();
            compare_vectors(&format!("l={l}, k={k}, b={e}"), &lhs, &rhs, &mut out);
            out
        })
        .collect();
    CheckReport::new("heisenberg", inst.name(), format!("l={l}, k={k}, rank<={rank_cap}"), found)
}
