//! Sweeps for the commutation axiom, Pieri's formula and its variants, the
//! duality relations and the truncated Cauchy identity.
//!
//! Each literal `check_*` evaluates one displayed equation exactly as
//! written. The `*_sweep` versions evaluate the same equation for every `μ`
//! at once by comparing the underlying formal vectors.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::weighted::weighted_complete_table;
use super::{compare, compare_vectors, CheckReport, Counterexample};
use crate::gmodule::{
    apply_down, apply_up, basis_up_to, down_product, schur_d, schur_d_vars, schur_u, schur_u_vars,
    up_product, AdjointLattice, BasisElement, FormalVector, Lattice, ModuleError, SharedLattice,
};
use crate::polyring::{int, rat, Monomial, MultiPoly, Rational};

fn first_vars(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn h_tables(inst: &dyn Lattice, i_max: usize, n_max: usize) -> Vec<Vec<MultiPoly>> {
    let a = inst.a_seq();
    (0..=n_max).map(|n| weighted_complete_table(&a, i_max, n)).collect()
}

fn rpow(r: &Rational, e: usize) -> Rational {
    (0..e).fold(int(1), |acc, _| acc * r)
}

/// `D_j U_i b = Σ_{k ≤ min(i,j)} a_k U_{i-k} D_{j-k} b` for every basis
/// element `b` of rank at most `rank_cap`.
pub fn check_commutation(inst: &dyn Lattice, i_max: usize, j_max: usize, rank_cap: usize) -> CheckReport {
    let a = inst.a_seq();
    let found: Vec<Counterexample> = basis_up_to(inst, rank_cap)
        .par_iter()
        .flat_map_iter(|b| {
            let mut out = Vec::new();
            let v = FormalVector::basis(b.clone());
            for i in 0..=i_max {
                let up = apply_up(inst, i, &v);
                for j in 0..=j_max {
                    let lhs = apply_down(inst, j, &up);
                    let mut rhs = FormalVector::zero(0);
                    for k in 0..=i.min(j) {
                        let term = apply_up(inst, i - k, &apply_down(inst, j - k, &v));
                        rhs.add_rational_scaled(&term, &a.eval(k));
                    }
                    compare_vectors(&format!("b={b}, i={i}, j={j}"), &lhs, &rhs, &mut out);
                }
            }
            out
        })
        .collect();
    CheckReport::new(
        "commutation",
        inst.name(),
        format!("i<={i_max}, j<={j_max}, rank<={rank_cap}"),
        found,
    )
}

fn pieri_literal(
    inst: &dyn Lattice,
    v: &FormalVector,
    mu: &BasisElement,
    i: usize,
    n: usize,
    tag: &str,
    out: &mut Vec<Counterexample>,
) {
    let k = inst.rank(mu);
    let h = weighted_complete_table(&inst.a_seq(), i, n);
    let lhs = schur_d(inst, &apply_up(inst, i, v), mu, n);
    let mut rhs = MultiPoly::zero(n);
    for j in 0..=i.min(k) {
        let mut inner = MultiPoly::zero(n);
        for nu in inst.level(k - j) {
            let c = inst.up(j, &nu).coeff(mu).constant_term();
            if !c.is_zero() {
                inner.add_scaled(&schur_d(inst, v, &nu, n), &c);
            }
        }
        rhs.add_assign_ref(&(&h[i - j] * &inner));
    }
    compare(|| format!("{tag}v={}, mu={mu}, i={i}, n={n}", v_label(v)), lhs, rhs, out);
}

fn v_label(v: &FormalVector) -> String {
    let parts: Vec<String> = v.scalar_iter().map(|(b, c)| format!("{c}*{b}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// Pieri's formula for one `(v, μ, i, n)`:
/// `s^D_{U_i v, μ} = Σ_j h_{i-j} Σ_{ν ∈ Y_{k-j}} ⟨U_j ν, μ⟩ s^D_{v,ν}`.
pub fn check_pieri(inst: &dyn Lattice, v: &FormalVector, mu: &BasisElement, i: usize, n: usize) -> CheckReport {
    let mut out = Vec::new();
    pieri_literal(inst, v, mu, i, n, "", &mut out);
    CheckReport::new("pieri", inst.name(), format!("i={i}, n={n}"), out)
}

fn pieri_sweep_into(
    inst: &dyn Lattice,
    rank_cap: usize,
    i_max: usize,
    n_max: usize,
    tag: &str,
) -> Vec<Counterexample> {
    let tables = h_tables(inst, i_max, n_max);
    basis_up_to(inst, rank_cap)
        .par_iter()
        .flat_map_iter(|b| {
            let mut out = Vec::new();
            let v = FormalVector::basis(b.clone());
            for n in 1..=n_max {
                let vars = first_vars(n);
                let h = &tables[n];
                let dv = down_product(inst, &v, &vars, n);
                for i in 0..=i_max {
                    let lhs = down_product(inst, &apply_up(inst, i, &v), &vars, n);
                    let mut rhs = FormalVector::zero(n);
                    for j in 0..=i {
                        rhs.add_scaled(&apply_up(inst, j, &dv), &h[i - j]);
                    }
                    compare_vectors(&format!("{tag}v={b}, i={i}, n={n}"), &lhs, &rhs, &mut out);
                }
            }
            out
        })
        .collect()
}

/// Pieri's formula for every basis `v` of rank `<= rank_cap`, every `μ`,
/// `i <= i_max` and `1 <= n <= n_max`, compared as the vector identity
/// `D(t_1)⋯D(t_n) U_i v = Σ_j h_{i-j} U_j D(t_1)⋯D(t_n) v`.
pub fn check_pieri_sweep(inst: &dyn Lattice, rank_cap: usize, i_max: usize, n_max: usize) -> CheckReport {
    CheckReport::new(
        "pieri",
        inst.name(),
        format!("rank(v)<={rank_cap}, all mu, i<={i_max}, n<={n_max}"),
        pieri_sweep_into(inst, rank_cap, i_max, n_max, ""),
    )
}

fn pieri_minimum_into(
    inst: &dyn Lattice,
    v: &FormalVector,
    i: usize,
    n: usize,
    tag: &str,
    out: &mut Vec<Counterexample>,
) -> Result<(), ModuleError> {
    let m = inst
        .minimum()
        .ok_or_else(|| ModuleError::Precondition(format!("{} has no minimum", inst.name())))?;
    let u0 = inst.u0().unwrap_or_else(Rational::zero);
    let d0 = inst.d0().unwrap_or_else(Rational::zero);
    let h = weighted_complete_table(&inst.a_seq(), i, n).swap_remove(i);
    let lhs = schur_d(inst, &apply_up(inst, i, v), &m, n);
    let rhs = (&h * &schur_d(inst, v, &m, n)).scale(&u0);
    if *v == FormalVector::basis(m.clone()) {
        let closed = h.scale(&(rpow(&d0, n) * &u0));
        compare(|| format!("{tag}v=minimum, i={i}, n={n}, closed form"), lhs.clone(), closed, out);
    }
    compare(|| format!("{tag}v={}, i={i}, n={n}", v_label(v)), lhs, rhs, out);
    Ok(())
}

/// `s^D_{U_i v, ∅} = u_0 h_i s^D_{v,∅}`, and for `v = ∅` also
/// `s^D_{U_i ∅, ∅} = d_0^n u_0 h_i`.
pub fn check_pieri_minimum(
    inst: &dyn Lattice,
    v: &FormalVector,
    i: usize,
    n: usize,
) -> Result<CheckReport, ModuleError> {
    let mut out = Vec::new();
    pieri_minimum_into(inst, v, i, n, "", &mut out)?;
    Ok(CheckReport::new("pieri-min", inst.name(), format!("i={i}, n={n}"), out))
}

fn pieri_minimum_sweep_into(
    inst: &dyn Lattice,
    rank_cap: usize,
    i_max: usize,
    n_max: usize,
    tag: &str,
) -> Result<Vec<Counterexample>, ModuleError> {
    if inst.minimum().is_none() {
        return Err(ModuleError::Precondition(format!("{} has no minimum", inst.name())));
    }
    let parts: Result<Vec<Vec<Counterexample>>, ModuleError> = basis_up_to(inst, rank_cap)
        .par_iter()
        .map(|b| {
            let mut out = Vec::new();
            let v = FormalVector::basis(b.clone());
            for n in 1..=n_max {
                for i in 0..=i_max {
                    pieri_minimum_into(inst, &v, i, n, tag, &mut out)?;
                }
            }
            Ok(out)
        })
        .collect();
    Ok(parts?.into_iter().flatten().collect())
}

/// [`check_pieri_minimum`] for every basis `v` of rank `<= rank_cap`.
pub fn check_pieri_minimum_sweep(
    inst: &dyn Lattice,
    rank_cap: usize,
    i_max: usize,
    n_max: usize,
) -> Result<CheckReport, ModuleError> {
    Ok(CheckReport::new(
        "pieri-min",
        inst.name(),
        format!("rank(v)<={rank_cap}, i<={i_max}, n<={n_max}"),
        pieri_minimum_sweep_into(inst, rank_cap, i_max, n_max, "")?,
    ))
}

/// `Σ_κ ⟨D_i κ, μ⟩ s^U_{κ,v} = Σ_j h_{i-j} s^U_{μ, D_j v}`.
fn variant_literal(
    inst: &dyn Lattice,
    v: &FormalVector,
    mu: &BasisElement,
    i: usize,
    n: usize,
    tag: &str,
    out: &mut Vec<Counterexample>,
) {
    let k = inst.rank(mu);
    let h = weighted_complete_table(&inst.a_seq(), i, n);
    let mut lhs = MultiPoly::zero(n);
    for kappa in inst.level(k + i) {
        let c = inst.down(i, &kappa).coeff(mu).constant_term();
        if !c.is_zero() {
            lhs.add_scaled(&schur_u(inst, &kappa, v, n), &c);
        }
    }
    let mut rhs = MultiPoly::zero(n);
    for j in 0..=i {
        rhs.add_assign_ref(&(&h[i - j] * &schur_u(inst, mu, &apply_down(inst, j, v), n)));
    }
    compare(|| format!("{tag}v={}, mu={mu}, i={i}, n={n}", v_label(v)), lhs, rhs, out);
}

/// Vector form of [`variant_literal`]:
/// `D_i U(t_n)⋯U(t_1) v = Σ_j h_{i-j} U(t_n)⋯U(t_1) D_j v` on ranks `<= rank_cap`.
fn variant_sweep_into(
    inst: &dyn Lattice,
    rank_cap: usize,
    i_max: usize,
    n_max: usize,
    tag: &str,
) -> Vec<Counterexample> {
    let tables = h_tables(inst, i_max, n_max);
    basis_up_to(inst, rank_cap)
        .par_iter()
        .flat_map_iter(|b| {
            let mut out = Vec::new();
            let v = FormalVector::basis(b.clone());
            for n in 1..=n_max {
                let vars = first_vars(n);
                let h = &tables[n];
                for i in 0..=i_max {
                    let lhs = apply_down(inst, i, &up_product(inst, &v, &vars, n, rank_cap + i))
                        .truncate_rank(rank_cap);
                    let mut rhs = FormalVector::zero(n);
                    for j in 0..=i {
                        let dv = apply_down(inst, j, &v);
                        rhs.add_scaled(&up_product(inst, &dv, &vars, n, rank_cap), &h[i - j]);
                    }
                    compare_vectors(&format!("{tag}v={b}, i={i}, n={n}"), &lhs, &rhs, &mut out);
                }
            }
            out
        })
        .collect()
}

const V1: &str = "D_i/U-series: ";
const V2: &str = "D*_i/U*-series: ";
const V3: &str = "U*_i/D*-series: ";
const VCOR: &str = "adjoint minimum: ";

/// The three variant equations for one `(v, μ, i, n)`, plus the two
/// minimum-case statements when the lattice has a minimum. The second and
/// third equations are Pieri's formula and the first variant equation for
/// the adjoint pair `(D*, U*)`.
pub fn check_pieri_variants(
    inst: &SharedLattice,
    v: &FormalVector,
    mu: &BasisElement,
    i: usize,
    n: usize,
) -> CheckReport {
    let adj = AdjointLattice::new(inst.clone());
    let mut out = Vec::new();
    variant_literal(inst.as_ref(), v, mu, i, n, V1, &mut out);
    pieri_literal(&adj, v, mu, i, n, V2, &mut out);
    variant_literal(&adj, v, mu, i, n, V3, &mut out);
    if inst.minimum().is_some() {
        pieri_minimum_into(&adj, v, i, n, VCOR, &mut out).expect("minimum exists");
    }
    CheckReport::new("variants", inst.name(), format!("i={i}, n={n}"), out)
}

/// [`check_pieri_variants`] over every basis `v` of rank `<= rank_cap`,
/// every `μ`, `i <= i_max`, `1 <= n <= n_max`.
pub fn check_pieri_variants_sweep(
    inst: &SharedLattice,
    rank_cap: usize,
    i_max: usize,
    n_max: usize,
) -> CheckReport {
    let adj = AdjointLattice::new(inst.clone());
    let mut out = variant_sweep_into(inst.as_ref(), rank_cap, i_max, n_max, V1);
    out.extend(pieri_sweep_into(&adj, rank_cap, i_max, n_max, V2));
    out.extend(variant_sweep_into(&adj, rank_cap, i_max, n_max, V3));
    if inst.minimum().is_some() {
        out.extend(pieri_minimum_sweep_into(&adj, rank_cap, i_max, n_max, VCOR).expect("minimum exists"));
    }
    CheckReport::new(
        "variants",
        inst.name(),
        format!("rank(v)<={rank_cap}, all mu, i<={i_max}, n<={n_max}"),
        out,
    )
}

/// Small test vectors for the linear-combination identities: `λ`,
/// `λ - μ/2`, and the sum of the level of `λ` weighted `1, 2, 3, …`.
pub fn duality_test_vectors(inst: &dyn Lattice, lambda: &BasisElement, mu: &BasisElement) -> Vec<FormalVector> {
    let mut mixed = FormalVector::basis(lambda.clone());
    mixed.add_rational_scaled(&FormalVector::basis(mu.clone()), &rat(-1, 2));
    let weighted = FormalVector::scalar(
        inst.level(inst.rank(lambda))
            .into_iter()
            .enumerate()
            .map(|(k, b)| (b, int(k as i64 + 1))),
    );
    vec![FormalVector::basis(lambda.clone()), mixed, weighted]
}

/// `Σ_ν ⟨v, ν⟩ f(ν)`.
fn expand<F: Fn(&BasisElement) -> MultiPoly>(v: &FormalVector, n: usize, f: F) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for (nu, c) in v.scalar_iter() {
        out.add_scaled(&f(nu), &c);
    }
    out
}

/// The duality relations for one pair `(λ, μ)`: `s^D_{λ,μ} = s^{D*}_{λ,μ}`,
/// `s^U_{λ,μ} = s^{U*}_{λ,μ}`, and the four expansions over
/// [`duality_test_vectors`].
pub fn check_duality(inst: &SharedLattice, lambda: &BasisElement, mu: &BasisElement, n: usize) -> CheckReport {
    let base = inst.as_ref();
    let adj = AdjointLattice::new(inst.clone());
    let l = FormalVector::basis(lambda.clone());
    let m = FormalVector::basis(mu.clone());
    let mut out = Vec::new();
    let at = |what: &str| format!("{what}: lambda={lambda}, mu={mu}, n={n}");
    compare(|| at("s^D = s^D*"), schur_d(base, &l, mu, n), schur_u(&adj, lambda, &m, n), &mut out);
    compare(|| at("s^U = s^U*"), schur_u(base, lambda, &m, n), schur_d(&adj, &l, mu, n), &mut out);
    for (k, v) in duality_test_vectors(base, lambda, mu).iter().enumerate() {
        let tag = |eq: usize| format!("expansion {eq}, v#{k}: lambda={lambda}, mu={mu}, n={n}");
        compare(
            || tag(1),
            schur_d(base, v, mu, n),
            expand(v, n, |nu| schur_u(&adj, nu, &m, n)),
            &mut out,
        );
        compare(
            || tag(2),
            schur_u(&adj, mu, v, n),
            expand(v, n, |nu| schur_d(base, &m, nu, n)),
            &mut out,
        );
        compare(
            || tag(3),
            schur_d(&adj, v, mu, n),
            expand(v, n, |nu| schur_u(base, nu, &m, n)),
            &mut out,
        );
        compare(
            || tag(4),
            schur_u(base, mu, v, n),
            expand(v, n, |nu| schur_d(&adj, &m, nu, n)),
            &mut out,
        );
    }
    CheckReport::new("duality", inst.name(), format!("n={n}"), out)
}

/// The duality relations for all `λ, μ` of rank `<= rank_cap` and
/// `1 <= n <= n_max`. Each operator product is expanded once per basis
/// element and read off for every partner.
pub fn check_duality_sweep(inst: &SharedLattice, rank_cap: usize, n_max: usize) -> CheckReport {
    let base = inst.as_ref();
    let adj = AdjointLattice::new(inst.clone());
    let basis = basis_up_to(base, rank_cap);
    let mut out = Vec::new();
    for n in 1..=n_max {
        let vars = first_vars(n);
        let expanded: Vec<[FormalVector; 4]> = basis
            .par_iter()
            .map(|b| {
                let v = FormalVector::basis(b.clone());
                [
                    down_product(base, &v, &vars, n),
                    up_product(&adj, &v, &vars, n, rank_cap),
                    up_product(base, &v, &vars, n, rank_cap),
                    down_product(&adj, &v, &vars, n),
                ]
            })
            .collect();
        let index: HashMap<&BasisElement, &[FormalVector; 4]> = basis.iter().zip(&expanded).collect();
        // sd[λ][μ] = s^D_{λ,μ}, su_adj[μ][λ] = s^{D*}_{λ,μ}, su[μ][λ] = s^U_{λ,μ}, sd_adj[λ][μ] = s^{U*}_{λ,μ}
        let sd = |l: &BasisElement, m: &BasisElement| index[l][0].coeff(m).lift(n);
        let su_adj = |l: &BasisElement, m: &BasisElement| index[m][1].coeff(l).lift(n);
        let su = |l: &BasisElement, m: &BasisElement| index[m][2].coeff(l).lift(n);
        let sd_adj = |l: &BasisElement, m: &BasisElement| index[l][3].coeff(m).lift(n);
        let found: Vec<Counterexample> = basis
            .par_iter()
            .enumerate()
            .flat_map_iter(|(idx, lambda)| {
                let mut out = Vec::new();
                for mu in &basis {
                    let at = |what: &str| format!("{what}: lambda={lambda}, mu={mu}, n={n}");
                    compare(|| at("s^D = s^D*"), sd(lambda, mu), su_adj(lambda, mu), &mut out);
                    compare(|| at("s^U = s^U*"), su(lambda, mu), sd_adj(lambda, mu), &mut out);
                }
                let partner = &basis[(idx * 7 + 3) % basis.len()];
                for (k, v) in duality_test_vectors(base, lambda, partner).iter().enumerate() {
                    let e_sd = down_product(base, v, &vars, n);
                    let e_su_adj = up_product(&adj, v, &vars, n, rank_cap);
                    let e_sd_adj = down_product(&adj, v, &vars, n);
                    let e_su = up_product(base, v, &vars, n, rank_cap);
                    for mu in &basis {
                        let tag = |eq: usize| format!("expansion {eq}, v#{k} from lambda={lambda}: mu={mu}, n={n}");
                        compare(|| tag(1), e_sd.coeff(mu).lift(n), expand(v, n, |nu| su_adj(nu, mu)), &mut out);
                        compare(|| tag(2), e_su_adj.coeff(mu).lift(n), expand(v, n, |nu| sd(mu, nu)), &mut out);
                        compare(|| tag(3), e_sd_adj.coeff(mu).lift(n), expand(v, n, |nu| su(nu, mu)), &mut out);
                        compare(|| tag(4), e_su.coeff(mu).lift(n), expand(v, n, |nu| sd_adj(mu, nu)), &mut out);
                    }
                }
                out
            })
            .collect();
        out.extend(found);
    }
    CheckReport::new(
        "duality",
        inst.name(),
        format!("rank(lambda),rank(mu)<={rank_cap}, n<={n_max}"),
        out,
    )
}

/// `Π_{i,j} a(t_i t'_j)` truncated to total degree `deg_cap`; `t` occupies
/// variables `0..n`, `t'` variables `n..2n`.
fn cauchy_kernel(inst: &dyn Lattice, n: usize, deg_cap: u32) -> MultiPoly {
    let a = inst.a_seq();
    let nv = 2 * n;
    let mut prod = MultiPoly::one(nv);
    for i in 0..n {
        for j in 0..n {
            let mut factor = MultiPoly::zero(nv);
            for m in 0..=deg_cap / 2 {
                let mut exps = vec![0; nv];
                exps[i] = m;
                exps[n + j] = m;
                factor.add_term(Monomial::new(exps), a.eval(m as usize));
            }
            prod = prod.mul_truncated(&factor, deg_cap);
        }
    }
    prod
}

/// The truncated Cauchy identity
/// `Σ_ν s^D_{ν,μ}(t) s^U_{ν,v}(t') = Π a(t_i t'_j) Σ_κ s^U_{μ,κ}(t') s^D_{v,κ}(t)`
/// modulo total degree `> deg_cap` in `t, t'`.
pub fn check_cauchy(inst: &dyn Lattice, v: &FormalVector, mu: &BasisElement, n: usize, deg_cap: u32) -> CheckReport {
    let nv = 2 * n;
    let t: Vec<usize> = (0..n).collect();
    let tp: Vec<usize> = (n..nv).collect();
    let k = inst.rank(mu);
    let top = (deg_cap as usize + k + v.max_rank().unwrap_or(0)) / 2;

    let mut lhs = MultiPoly::zero(nv);
    for (nu, c) in up_product(inst, v, &tp, nv, top).iter() {
        let s = schur_d_vars(inst, &FormalVector::basis(nu.clone()), mu, &t, nv);
        lhs.add_assign_ref(&c.mul_truncated(&s, deg_cap));
    }

    let mut sum = MultiPoly::zero(nv);
    for (kappa, c) in down_product(inst, v, &t, nv).iter() {
        let s = schur_u_vars(inst, mu, &FormalVector::basis(kappa.clone()), &tp, nv);
        sum.add_assign_ref(&c.mul_truncated(&s, deg_cap));
    }
    let rhs = cauchy_kernel(inst, n, deg_cap).mul_truncated(&sum, deg_cap);

    let mut out = Vec::new();
    compare(
        || format!("v={}, mu={mu}, n={n}, deg<={deg_cap}", v_label(v)),
        lhs.truncate_total_degree(deg_cap),
        rhs,
        &mut out,
    );
    CheckReport::new("cauchy", inst.name(), format!("n={n}, deg<={deg_cap}"), out)
}

/// [`check_cauchy`] for every pair of basis elements `v`, `μ` of rank
/// `<= rank_cap`.
pub fn check_cauchy_sweep(inst: &dyn Lattice, rank_cap: usize, n: usize, deg_cap: u32) -> CheckReport {
    let basis = basis_up_to(inst, rank_cap);
    let pairs: Vec<(&BasisElement, &BasisElement)> =
        basis.iter().flat_map(|v| basis.iter().map(move |mu| (v, mu))).collect();
    let found: Vec<Counterexample> = pairs
        .par_iter()
        .flat_map_iter(|(v, mu)| check_cauchy(inst, &FormalVector::basis((*v).clone()), mu, n, deg_cap).counterexamples)
        .collect();
    CheckReport::new(
        "cauchy",
        inst.name(),
        format!("rank(v),rank(mu)<={rank_cap}, n={n}, deg<={deg_cap}"),
        found,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::InstanceName;

    fn all() -> Vec<SharedLattice> {
        InstanceName::ALL.iter().map(|n| n.build()).collect()
    }

    fn assert_pass(r: &CheckReport) {
        assert!(r.pass, "{} on {} failed: {:?}", r.identity, r.instance, r.counterexamples.first());
    }

    #[test]
    fn commutation_small() {
        for inst in all() {
            assert_pass(&check_commutation(inst.as_ref(), 2, 2, 3));
        }
    }

    #[test]
    fn commutation_detects_a_wrong_sequence() {
        struct Wrong(crate::instances::Young);
        impl Lattice for Wrong {
            fn name(&self) -> String {
                "wrong".into()
            }
            fn kind(&self) -> crate::gmodule::BasisKind {
                self.0.kind()
            }
            fn level(&self, k: usize) -> Vec<BasisElement> {
                self.0.level(k)
            }
            fn up(&self, i: usize, b: &BasisElement) -> FormalVector {
                self.0.up(i, b)
            }
            fn down(&self, i: usize, b: &BasisElement) -> FormalVector {
                self.0.down(i, b)
            }
            fn a_seq(&self) -> crate::gmodule::ASequence {
                crate::gmodule::ASequence::OneOne
            }
            fn minimum(&self) -> Option<BasisElement> {
                self.0.minimum()
            }
        }
        let r = check_commutation(&Wrong(crate::instances::Young::new()), 2, 2, 1);
        assert!(!r.pass);
        assert!(r.counterexamples.iter().any(|c| c.input.starts_with("b=[], i=2, j=2")));
    }

    #[test]
    fn pieri_worked_example() {
        let young = InstanceName::Young.build();
        let v = FormalVector::basis(BasisElement::partition(&[1]));
        let empty = BasisElement::partition(&[]);
        assert_pass(&check_pieri(young.as_ref(), &v, &empty, 1, 2));
        let lhs = schur_d(young.as_ref(), &apply_up(young.as_ref(), 1, &v), &empty, 2);
        assert_eq!(lhs.to_string(), "t1^2 + 2*t1*t2 + t2^2");
        let v21 = FormalVector::basis(BasisElement::partition(&[2, 1]));
        assert_pass(&check_pieri(young.as_ref(), &v21, &empty, 2, 2));
        assert_pass(&check_pieri(young.as_ref(), &v21, &BasisElement::partition(&[2]), 0, 2));
    }

    #[test]
    fn pieri_sweeps_small() {
        for inst in all() {
            assert_pass(&check_pieri_sweep(inst.as_ref(), 2, 2, 2));
            assert_pass(&check_pieri_minimum_sweep(inst.as_ref(), 2, 3, 2).unwrap());
            assert_pass(&check_pieri_variants_sweep(&inst, 2, 2, 2));
        }
    }

    #[test]
    fn literal_and_sweep_agree_on_samples() {
        for inst in all() {
            for mu in basis_up_to(inst.as_ref(), 2) {
                for b in basis_up_to(inst.as_ref(), 2) {
                    let v = FormalVector::basis(b);
                    assert_pass(&check_pieri(inst.as_ref(), &v, &mu, 2, 2));
                    assert_pass(&check_pieri_variants(&inst, &v, &mu, 2, 2));
                }
            }
        }
    }

    #[test]
    fn minimum_case_values() {
        let young = InstanceName::Young.build();
        let empty = BasisElement::partition(&[]);
        let s = schur_d(young.as_ref(), &FormalVector::basis(BasisElement::partition(&[2])), &empty, 2);
        assert_eq!(s.to_string(), "t1^2 + t1*t2 + t2^2");
        let mono = InstanceName::Monomial.build();
        let zero = BasisElement::MonomialDegree(0);
        let up2 = apply_up(mono.as_ref(), 2, &FormalVector::basis(zero.clone()));
        assert_eq!(schur_d(mono.as_ref(), &up2, &zero, 2).to_string(), "1/2*t1^2 + t1*t2 + 1/2*t2^2");
        let r = check_pieri_minimum(mono.as_ref(), &FormalVector::basis(zero), 2, 2).unwrap();
        assert_pass(&r);
    }

    #[test]
    fn duality_examples() {
        let young = InstanceName::Young.build();
        let r = check_duality(&young, &BasisElement::partition(&[2, 1]), &BasisElement::partition(&[]), 2);
        assert_pass(&r);
        let tree = InstanceName::Tree.build();
        let t = BasisElement::tree(&["0", "1", "12"]);
        let empty = BasisElement::tree(&[]);
        assert_pass(&check_duality(&tree, &t, &empty, 2));
        let adj = AdjointLattice::new(tree.clone());
        let s = schur_u(&adj, &t, &FormalVector::basis(empty), 2);
        assert_eq!(s.to_string(), "t1*t2^2");
        for inst in all() {
            assert_pass(&check_duality_sweep(&inst, 2, 2));
        }
    }

    #[test]
    fn cauchy_examples() {
        let young = InstanceName::Young.build();
        let empty = BasisElement::partition(&[]);
        let e = FormalVector::basis(empty.clone());
        assert_pass(&check_cauchy(young.as_ref(), &e, &empty, 1, 4));
        assert_pass(&check_cauchy(young.as_ref(), &e, &empty, 2, 0));
        assert_pass(&check_cauchy(young.as_ref(), &e, &BasisElement::partition(&[1]), 1, 3));
        for inst in all() {
            assert_pass(&check_cauchy_sweep(inst.as_ref(), 2, 2, 3));
        }
    }

    #[test]
    fn cauchy_geometric_series() {
        // v = μ = ∅, n = 1: both sides are Σ_k (t1 t'1)^k
        let young = InstanceName::Young.build();
        let kernel = cauchy_kernel(young.as_ref(), 1, 4);
        assert_eq!(kernel.to_string(), "t1^2*t2^2 + t1*t2 + 1");
    }
}
