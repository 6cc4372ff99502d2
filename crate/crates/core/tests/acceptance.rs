//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every comparison is exact.

use std::time::{Duration, Instant};

use gschur::gmodule::{apply_up, schur_d, BasisElement, FormalVector, SharedLattice};
use gschur::identities::{
    check_cauchy, check_commutation, check_duality_sweep, check_heisenberg, check_pieri_minimum_sweep,
    check_pieri_sweep, check_pieri_variants_sweep, dual_a, product_with_reflected, weighted_complete,
    weighted_complete_by_extraction, CheckReport,
};
use gschur::instances::InstanceName;
use gschur::oracle::{check_oracle, count_level};
use gschur::polyring::{int, rat, Monomial, MultiPoly, Rational};
use gschur::ASequence;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[CheckReport]) -> Self {
        let failing: Vec<String> = reports
            .iter()
            .filter(|r| !r.pass)
            .map(|r| {
                let first = &r.counterexamples[0];
                format!("{} on {}: {} (lhs {}, rhs {})", r.identity, r.instance, first.input, first.lhs, first.rhs)
            })
            .collect();
        Outcome { ok: failing.is_empty(), detail: failing.join("; ") }
    }

    fn all(checks: Vec<(bool, String)>) -> Self {
        let failing: Vec<String> = checks.into_iter().filter(|(ok, _)| !ok).map(|(_, what)| what).collect();
        Outcome { ok: failing.is_empty(), detail: failing.join("; ") }
    }
}

fn lattices() -> Vec<(InstanceName, SharedLattice)> {
    InstanceName::ALL.iter().map(|&n| (n, n.build())).collect()
}

/// Every monomial of degree `d` in `n` variables, each with coefficient 1,
/// optionally only the square-free ones.
fn monomial_sum(n: usize, d: u32, square_free: bool) -> MultiPoly {
    fn go(n: usize, k: usize, left: u32, square_free: bool, cur: &mut Vec<u32>, out: &mut MultiPoly) {
        if k == n {
            if left == 0 {
                out.add_term(Monomial::new(cur.clone()), int(1));
            }
            return;
        }
        let top = if square_free { left.min(1) } else { left };
        for e in 0..=top {
            cur.push(e);
            go(n, k + 1, left - e, square_free, cur, out);
            cur.pop();
        }
    }
    let mut out = MultiPoly::zero(n);
    go(n, 0, d, square_free, &mut Vec::new(), &mut out);
    out
}

fn power_of_sum_over_factorial(n: usize, i: u32) -> MultiPoly {
    let mut s = MultiPoly::zero(n);
    for k in 0..n {
        s.add_assign_ref(&MultiPoly::var(n, k));
    }
    let fact: i64 = (1..=i as i64).product();
    s.pow(i).scale(&rat(1, fact))
}

fn criterion_1() -> Outcome {
    let young = InstanceName::Young.build();
    let start = Instant::now();
    let got = schur_d(
        young.as_ref(),
        &FormalVector::basis(BasisElement::partition(&[2, 1])),
        &BasisElement::partition(&[]),
        2,
    );
    let elapsed = start.elapsed();
    let expected = MultiPoly::from_terms(2, [(int(1), vec![2, 1]), (int(1), vec![1, 2])]).unwrap();
    Outcome::all(vec![
        (got == expected, format!("got {got}")),
        (elapsed < Duration::from_secs(1), format!("took {elapsed:?}")),
    ])
}

fn timed(limit: Duration, f: impl FnOnce() -> Vec<CheckReport>) -> Outcome {
    let start = Instant::now();
    let reports = f();
    let elapsed = start.elapsed();
    let mut out = Outcome::from_reports(&reports);
    if elapsed >= limit {
        out.ok = false;
        out.detail = format!("{} took {elapsed:?}", out.detail);
    }
    out
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(60), || vec![check_oracle(InstanceName::Young, 6, 3)])
}

fn criterion_3() -> Outcome {
    timed(Duration::from_secs(60), || {
        lattices().iter().map(|(_, l)| check_commutation(l.as_ref(), 4, 4, 6)).collect()
    })
}

fn criterion_4() -> Outcome {
    timed(Duration::from_secs(300), || {
        lattices().iter().map(|(_, l)| check_pieri_sweep(l.as_ref(), 5, 3, 3)).collect()
    })
}

fn criterion_5() -> Outcome {
    let reports: Vec<CheckReport> = lattices()
        .iter()
        .map(|(_, l)| check_pieri_minimum_sweep(l.as_ref(), 0, 5, 3).expect("minimum exists"))
        .collect();
    let mut checks = Vec::new();
    let young = InstanceName::Young.build();
    let shifted = InstanceName::Shifted.build();
    for n in 1..=3usize {
        for i in 0..=5usize {
            let row_parts: Vec<u32> = if i == 0 { vec![] } else { vec![i as u32] };
            let row = schur_d(
                young.as_ref(),
                &FormalVector::basis(BasisElement::partition(&row_parts)),
                &BasisElement::partition(&[]),
                n,
            );
            checks.push((row == monomial_sum(n, i as u32, false), format!("s_({i}) != h_{i} for n={n}")));
            if i > 0 {
                let q = schur_d(
                    shifted.as_ref(),
                    &FormalVector::basis(BasisElement::strict(&[i as u32])),
                    &BasisElement::strict(&[]),
                    n,
                );
                let h = weighted_complete(&ASequence::OneTwo, i, n);
                checks.push((h == q.scale(&int(2)), format!("h_{i}^(1,2,2,..) != 2 s^D_(({i}),()) for n={n}")));
            }
            // U_i applied to the minimum, spelled out
            let e = FormalVector::basis(BasisElement::partition(&[]));
            let lhs = schur_d(young.as_ref(), &apply_up(young.as_ref(), i, &e), &BasisElement::partition(&[]), n);
            checks.push((lhs == weighted_complete(&ASequence::Ones, i, n), format!("young minimum case i={i} n={n}")));
        }
    }
    let extra = Outcome::all(checks);
    let mut out = Outcome::from_reports(&reports);
    out.ok &= extra.ok;
    if !extra.detail.is_empty() {
        out.detail = format!("{} {}", out.detail, extra.detail);
    }
    out
}

fn criterion_6() -> Outcome {
    timed(Duration::from_secs(300), || {
        lattices().iter().map(|(_, l)| check_pieri_variants_sweep(l, 5, 3, 3)).collect()
    })
}

fn criterion_7() -> Outcome {
    Outcome::from_reports(&lattices().iter().map(|(_, l)| check_duality_sweep(l, 5, 3)).collect::<Vec<_>>())
}

fn criterion_8() -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=4usize {
        for i in 0..=6usize {
            let d = i as u32;
            let h = weighted_complete(&ASequence::Ones, i, n);
            checks.push((h == monomial_sum(n, d, false), format!("h_{i} n={n}")));
            let e = weighted_complete(&ASequence::OneOne, i, n);
            checks.push((e == monomial_sum(n, d, true), format!("e_{i} n={n}")));
            let x = weighted_complete(&ASequence::InvFactorial, i, n);
            checks.push((x == power_of_sum_over_factorial(n, d), format!("exp_{i} n={n}")));
            for a in [ASequence::Ones, ASequence::OneOne, ASequence::OneTwo, ASequence::InvFactorial] {
                let rec = weighted_complete(&a, i, n);
                let ext = weighted_complete_by_extraction(&a, i, n);
                checks.push((rec == ext, format!("recurrence vs extraction {a} i={i} n={n}")));
                checks.push((rec.is_symmetric() && rec.is_homogeneous(d), format!("symmetry/degree {a} i={i} n={n}")));
            }
        }
    }
    Outcome::all(checks)
}

fn criterion_9() -> Outcome {
    let mut out = Outcome::from_reports(&[check_oracle(InstanceName::Tree, 5, 3), check_oracle(InstanceName::TreeDual, 5, 3)]);
    let tree = InstanceName::Tree.build();
    let s = schur_d(
        tree.as_ref(),
        &FormalVector::basis(BasisElement::tree(&["0", "1", "12"])),
        &BasisElement::tree(&[]),
        2,
    );
    let expected = MultiPoly::monomial(2, vec![1, 2], int(1));
    let extra = Outcome::all(vec![
        (s == expected, format!("s^D_{{0,1,12}} = {s}")),
        (!s.is_symmetric(), "s^D_{0,1,12} reported symmetric".to_string()),
    ]);
    out.ok &= extra.ok;
    out.detail.push_str(&extra.detail);
    out
}

fn criterion_10() -> Outcome {
    let tree = InstanceName::Tree.build();
    let young = InstanceName::Young.build();
    let trees: Vec<u64> = (0..=5).map(|k| tree.level(k).len() as u64).collect();
    let tree_oracle: Vec<u64> = (0..=5).map(|k| count_level(InstanceName::Tree, k)).collect();
    let parts: Vec<u64> = (0..=5).map(|k| young.level(k).len() as u64).collect();
    let part_oracle: Vec<u64> = (0..=5).map(|k| count_level(InstanceName::Young, k)).collect();
    Outcome::all(vec![
        (trees == [1, 1, 2, 5, 14, 42], format!("tree levels {trees:?}")),
        (tree_oracle == [1, 1, 2, 5, 14, 42], format!("tree oracle {tree_oracle:?}")),
        (parts == [1, 1, 2, 3, 5, 7], format!("young levels {parts:?}")),
        (part_oracle == [1, 1, 2, 3, 5, 7], format!("young oracle {part_oracle:?}")),
    ])
}

fn criterion_11() -> Outcome {
    let young = InstanceName::Young.build();
    let basis: Vec<BasisElement> = (0..=2).flat_map(|k| young.level(k)).collect();
    let mut reports = Vec::new();
    for v in &basis {
        for mu in &basis {
            for n in 1..=2 {
                reports.push(check_cauchy(young.as_ref(), &FormalVector::basis(v.clone()), mu, n, 4));
            }
        }
    }
    Outcome::from_reports(&reports)
}

fn criterion_12() -> Outcome {
    let d = dual_a(&ASequence::Ones, 6);
    let got: Vec<Rational> = (0..=6).map(|l| d.eval(l)).collect();
    let expected = vec![int(1), int(1), int(0), int(0), int(0), int(0), int(0)];
    let mut checks = vec![(got == expected, format!("dual_a(ones, 6) = {got:?}"))];
    for a in [ASequence::Ones, ASequence::OneTwo] {
        let prod = product_with_reflected(&a, &dual_a(&a, 6), 6);
        let mut unit = vec![int(0); 7];
        unit[0] = int(1);
        checks.push((prod == unit, format!("a(t)a'(-t) for {a}: {prod:?}")));
    }
    Outcome::all(checks)
}

fn criterion_13() -> Outcome {
    let young = InstanceName::Young.build();
    let reports: Vec<CheckReport> = (1..=3)
        .flat_map(|l| (1..=3).map(move |k| (l, k)))
        .map(|(l, k)| check_heisenberg(young.as_ref(), l, k, 5))
        .collect();
    Outcome::from_reports(&reports)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("prototype value s^D_{(2,1),()}(t1,t2)", criterion_1),
        ("Young oracle equivalence, |lambda| <= 6, n <= 3", criterion_2),
        ("commutation axiom, six instances, i,j <= 4, rank <= 6", criterion_3),
        ("Pieri, all instances, rank <= 5, i <= 3, n <= 3", criterion_4),
        ("minimum-case identities, i <= 5, n <= 3", criterion_5),
        ("Pieri variants and adjoint forms, same ranges as Pieri", criterion_6),
        ("duality, rank <= 5, n <= 3", criterion_7),
        ("weighted complete closed forms, i <= 6, n <= 4", criterion_8),
        ("tree generating functions, <= 5 nodes, n <= 3", criterion_9),
        ("level counts", criterion_10),
        ("truncated Cauchy identity on Young", criterion_11),
        ("sequence duality, L = 6", criterion_12),
        ("Heisenberg commutators on Young, l,k <= 3, rank <= 5", criterion_13),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        if outcome.ok {
            println!("PASS {:>2}. {name} ({secs:.2}s)", k + 1);
        } else {
            failed += 1;
            println!("FAIL {:>2}. {name} ({secs:.2}s): {}", k + 1, outcome.detail);
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
