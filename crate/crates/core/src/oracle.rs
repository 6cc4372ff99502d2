//! Brute-force generating functions used as ground truth: semistandard
//! tableaux of skew Young shapes, the three labeling classes on trees, and
//! direct level counts. None of this goes through the operator code.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::binomial;
use rayon::prelude::*;
use thiserror::Error;

use crate::gmodule::{schur_d, schur_u, BasisElement, BinaryTree, FormalVector, Partition, Word};
use crate::identities::{CheckReport, Counterexample};
use crate::instances::{strict_additions, tree_down, InstanceName, Strictness};
use crate::polyring::{int, Monomial, MultiPoly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },
}

/// `s_{λ/μ}(t_1..t_n)`: the sum of `t^T` over semistandard fillings `T` of
/// `λ/μ` with entries in `1..=n`, enumerated row by row.
pub fn ssyt_polynomial(lambda: &Partition, mu: &Partition, n: usize) -> Result<MultiPoly, OracleError> {
    if !lambda.contains(mu) {
        return Err(OracleError::NotContained { outer: lambda.clone(), inner: mu.clone() });
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (mu.part(r) as usize..lambda.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = MultiPoly::zero(n);
    fill(&cells, 0, n, &mut filling, &mut out);
    Ok(out)
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    n: usize,
    filling: &mut BTreeMap<(usize, usize), usize>,
    out: &mut MultiPoly,
) {
    if idx == cells.len() {
        let mut exps = vec![0u32; n];
        for &e in filling.values() {
            exps[e - 1] += 1;
        }
        out.add_term(Monomial::new(exps), int(1));
        return;
    }
    let (r, c) = cells[idx];
    let mut low = 1;
    if c > 0 {
        if let Some(&left) = filling.get(&(r, c - 1)) {
            low = low.max(left);
        }
    }
    if r > 0 {
        if let Some(&above) = filling.get(&(r - 1, c)) {
            low = low.max(above + 1);
        }
    }
    for e in low..=n {
        filling.insert((r, c), e);
        fill(cells, idx + 1, n, filling, out);
    }
    filling.remove(&(r, c));
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelingKind {
    /// Weak into left subtrees, strict into right subtrees.
    RightStrict,
    /// Strict into left subtrees, weak into right subtrees.
    LeftStrict,
    /// Weakly decreasing into left subtrees, strict into right subtrees.
    BinarySearching,
}

/// Whether `label(w)` and `label(v)` are compatible for `v` a proper
/// descendant of `w`.
fn pair_ok(kind: LabelingKind, w: &Word, lw: u32, v: &Word, lv: u32) -> bool {
    let left = w.left().is_prefix_of(v);
    match (kind, left) {
        (LabelingKind::RightStrict, true) => lw <= lv,
        (LabelingKind::RightStrict, false) => lw < lv,
        (LabelingKind::LeftStrict, true) => lw < lv,
        (LabelingKind::LeftStrict, false) => lw <= lv,
        (LabelingKind::BinarySearching, true) => lw >= lv,
        (LabelingKind::BinarySearching, false) => lw < lv,
    }
}

pub fn is_valid_labeling(t: &BinaryTree, labels: &BTreeMap<Word, u32>, kind: LabelingKind) -> bool {
    if labels.len() != t.size() || t.nodes().iter().any(|w| !labels.contains_key(w)) {
        return false;
    }
    if labels.values().any(|&l| l == 0) {
        return false;
    }
    t.nodes().iter().all(|w| {
        t.nodes()
            .iter()
            .filter(|v| *v != w && w.is_prefix_of(v))
            .all(|v| pair_ok(kind, w, labels[w], v, labels[v]))
    })
}

/// Every labeling of `t` of the given kind with labels in `1..=m`.
/// Nodes are assigned ancestors first; each new label is checked against
/// all labelled ancestors.
pub fn labelings(t: &BinaryTree, kind: LabelingKind, m: u32) -> Vec<BTreeMap<Word, u32>> {
    fn go(
        nodes: &[Word],
        idx: usize,
        kind: LabelingKind,
        m: u32,
        cur: &mut BTreeMap<Word, u32>,
        out: &mut Vec<BTreeMap<Word, u32>>,
    ) {
        if idx == nodes.len() {
            out.push(cur.clone());
            return;
        }
        let v = &nodes[idx];
        for lv in 1..=m {
            let ok = cur
                .iter()
                .filter(|(w, _)| w.is_prefix_of(v))
                .all(|(w, &lw)| pair_ok(kind, w, lw, v, lv));
            if ok {
                cur.insert(v.clone(), lv);
                go(nodes, idx + 1, kind, m, cur, out);
                cur.remove(v);
            }
        }
    }
    let nodes: Vec<Word> = t.nodes().iter().cloned().collect();
    let mut out = Vec::new();
    go(&nodes, 0, kind, m, &mut BTreeMap::new(), &mut out);
    out
}

/// `Σ_φ t^φ` over labelings of the given kind into `1..=n`.
pub fn tree_labeling_polynomial(t: &BinaryTree, kind: LabelingKind, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for phi in labelings(t, kind, n as u32) {
        let mut exps = vec![0u32; n];
        for &l in phi.values() {
            exps[l as usize - 1] += 1;
        }
        out.add_term(Monomial::new(exps), int(1));
    }
    out
}

/// Number of chains `∅ = T^0 ⊆ T^1 ⊆ ⋯ ⊆ T^m = t` in which every step adds
/// nodes with the given strictness.
pub fn count_addition_chains(t: &BinaryTree, m: usize, strictness: Strictness) -> u64 {
    fn go(cur: &BinaryTree, target: &BinaryTree, steps: usize, strictness: Strictness) -> u64 {
        if steps == 0 {
            return u64::from(cur == target);
        }
        (0..=target.size() - cur.size())
            .flat_map(|i| strict_additions(i, cur, strictness))
            .filter(|next| next.nodes().is_subset(target.nodes()))
            .map(|next| go(&next, target, steps - 1, strictness))
            .sum()
    }
    go(&BinaryTree::empty(), t, m, strictness)
}

/// Number of chains `t = T^m, T^{m-1}, …, T^0 = ∅` with
/// `D_{k_i} T^i = T^{i-1}` for some `k_i`.
pub fn count_evacuation_chains(t: &BinaryTree, m: usize) -> u64 {
    if m == 0 {
        return u64::from(t.is_empty());
    }
    (0..=t.size())
        .filter_map(|k| {
            let v = tree_down(k, t);
            let next = v.support().next().and_then(|b| match b {
                BasisElement::BinaryTree(s) => Some(s.clone()),
                _ => None,
            });
            next
        })
        .map(|s| count_evacuation_chains(&s, m - 1))
        .sum()
}

fn partitions_bounded(n: usize, max_part: usize, strict: bool) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max_part.min(n))
        .map(|p| partitions_bounded(n - p, if strict { p - 1 } else { p }, strict))
        .sum()
}

/// Prefix-closed sets of `k` words over `{1,2}`, found by testing every
/// `k`-subset of the words of length `< k`.
fn count_trees(k: usize) -> u64 {
    let mut words = vec![Word::root()];
    let mut frontier = vec![Word::root()];
    for _ in 1..k {
        frontier = frontier.iter().flat_map(|w| [w.left(), w.right()]).collect();
        words.extend(frontier.iter().cloned());
    }
    if k == 0 {
        return 1;
    }
    fn choose(words: &[Word], start: usize, k: usize, chosen: &mut Vec<usize>, count: &mut u64) {
        if chosen.len() == k {
            let set: BTreeSet<&Word> = chosen.iter().map(|&i| &words[i]).collect();
            if set.iter().all(|w| w.parent().map_or(true, |p| set.contains(&p))) {
                *count += 1;
            }
            return;
        }
        for i in start..words.len() {
            chosen.push(i);
            choose(words, i + 1, k, chosen, count);
            chosen.pop();
        }
    }
    let mut count = 0;
    choose(&words, 0, k, &mut Vec::new(), &mut count);
    count
}

/// `|Y_k|` by direct enumeration, independent of the lattice code.
pub fn count_level(inst: InstanceName, k: usize) -> u64 {
    match inst {
        InstanceName::Young | InstanceName::YoungDual => partitions_bounded(k, k, false),
        InstanceName::Shifted => partitions_bounded(k, k, true),
        InstanceName::Tree | InstanceName::TreeDual => count_trees(k),
        InstanceName::Monomial => 1,
    }
}

fn sum_power(n: usize, j: u32) -> MultiPoly {
    let mut s = MultiPoly::zero(n);
    for v in 0..n {
        s.add_assign_ref(&MultiPoly::var(n, v));
    }
    s.pow(j)
}

fn factorial(j: u32) -> BigInt {
    (1..=j).map(BigInt::from).product()
}

fn cmp_push(out: &mut Vec<Counterexample>, input: String, lhs: MultiPoly, rhs: MultiPoly) {
    if lhs != rhs {
        out.push(Counterexample { input, lhs, rhs });
    }
}

fn young_oracle(inst: InstanceName, rank_cap: usize, n_max: usize) -> Vec<Counterexample> {
    let lattice = inst.build();
    let shapes: Vec<Partition> = (0..=rank_cap).flat_map(Partition::all).collect();
    shapes
        .par_iter()
        .flat_map_iter(|lambda| {
            let lattice = lattice.clone();
            let mut out = Vec::new();
            let l = BasisElement::Partition(lambda.clone());
            let inner: Vec<Partition> = (0..=lambda.size())
                .flat_map(Partition::all)
                .filter(|mu| lambda.contains(mu))
                .collect();
            for mu in inner {
                let m = BasisElement::Partition(mu.clone());
                for n in 1..=n_max {
                    let at = |what: &str| format!("{what}: lambda={lambda}, mu={mu}, n={n}");
                    let sd = schur_d(lattice.as_ref(), &FormalVector::basis(l.clone()), &m, n);
                    let su = schur_u(lattice.as_ref(), &l, &FormalVector::basis(m.clone()), n);
                    let tableau = ssyt_polynomial(lambda, &mu, n).expect("contained");
                    cmp_push(&mut out, at("s^D vs tableaux"), sd, tableau.clone());
                    if inst == InstanceName::Young {
                        cmp_push(&mut out, at("s^U vs tableaux"), su, tableau);
                    } else {
                        let conj = ssyt_polynomial(&lambda.transpose(), &mu.transpose(), n).expect("contained");
                        cmp_push(&mut out, at("s^U vs transposed tableaux"), su, conj);
                    }
                }
            }
            out
        })
        .collect()
}

fn tree_oracle(inst: InstanceName, rank_cap: usize, n_max: usize) -> Vec<Counterexample> {
    let lattice = inst.build();
    let (up_kind, chain_kind) = match inst {
        InstanceName::Tree => (LabelingKind::RightStrict, Strictness::Right),
        _ => (LabelingKind::LeftStrict, Strictness::Left),
    };
    let trees: Vec<BinaryTree> = (0..=rank_cap).flat_map(BinaryTree::all).collect();
    let mut out: Vec<Counterexample> = trees
        .par_iter()
        .flat_map_iter(|t| {
            let lattice = lattice.clone();
            let mut out = Vec::new();
            let b = BasisElement::BinaryTree(t.clone());
            let empty = BasisElement::BinaryTree(BinaryTree::empty());
            for n in 1..=n_max {
                let at = |what: &str| format!("{what}: T={t}, n={n}");
                let su = schur_u(lattice.as_ref(), &b, &FormalVector::basis(empty.clone()), n);
                cmp_push(&mut out, at("s^U vs labelings"), su, tree_labeling_polynomial(t, up_kind, n));
                let sd = schur_d(lattice.as_ref(), &FormalVector::basis(b.clone()), &empty, n);
                cmp_push(
                    &mut out,
                    at("s^D vs binary-searching labelings"),
                    sd,
                    tree_labeling_polynomial(t, LabelingKind::BinarySearching, n),
                );
            }
            if t.size() <= 4 {
                for m in 1..=3usize {
                    let at = |what: &str| format!("{what}: T={t}, m={m}");
                    let count = |k| int(labelings(t, k, m as u32).len() as i64);
                    let as_poly = |c: u64| MultiPoly::constant(0, int(c as i64));
                    cmp_push(
                        &mut out,
                        at("labelings vs addition chains"),
                        MultiPoly::constant(0, count(up_kind)),
                        as_poly(count_addition_chains(t, m, chain_kind)),
                    );
                    cmp_push(
                        &mut out,
                        at("labelings vs evacuation chains"),
                        MultiPoly::constant(0, count(LabelingKind::BinarySearching)),
                        as_poly(count_evacuation_chains(t, m)),
                    );
                }
            }
            out
        })
        .collect();
    let example = example_tree();
    let (labels, kind) = match inst {
        InstanceName::Tree => (example_labeling(&[1, 2, 2, 2, 2, 3]), LabelingKind::RightStrict),
        _ => (example_labeling(&[1, 2, 1, 3, 2, 3]), LabelingKind::LeftStrict),
    };
    for (labels, kind) in [(labels, kind), (example_labeling(&[2, 1, 3, 1, 3, 4]), LabelingKind::BinarySearching)] {
        let members = labelings(&example, kind, 4);
        let valid = is_valid_labeling(&example, &labels, kind) && members.contains(&labels);
        cmp_push(
            &mut out,
            format!("example labeling {kind:?} on T={example}"),
            MultiPoly::constant(0, int(i64::from(valid))),
            MultiPoly::constant(0, int(1)),
        );
    }
    out
}

/// `T = {0,1,2,11,21,22}`.
pub fn example_tree() -> BinaryTree {
    BinaryTree::from_words(&["0", "1", "2", "11", "21", "22"]).expect("valid tree")
}

/// Labels for the nodes `0, 1, 2, 11, 21, 22` of [`example_tree`].
pub fn example_labeling(values: &[u32; 6]) -> BTreeMap<Word, u32> {
    ["0", "1", "2", "11", "21", "22"]
        .iter()
        .zip(values)
        .map(|(w, &l)| (Word::parse(w).expect("valid word"), l))
        .collect()
}

fn monomial_oracle(rank_cap: usize, n_max: usize) -> Vec<Counterexample> {
    let lattice = InstanceName::Monomial.build();
    let mut out = Vec::new();
    for i in 0..=rank_cap {
        for j in 0..=rank_cap - i {
            let low = BasisElement::MonomialDegree(i as u32);
            let high = BasisElement::MonomialDegree((i + j) as u32);
            for n in 1..=n_max {
                let at = |what: &str| format!("{what}: i={i}, j={j}, n={n}");
                let sd = schur_d(lattice.as_ref(), &FormalVector::basis(high.clone()), &low, n);
                let c = Rational::from_integer(binomial(BigInt::from(i + j), BigInt::from(i)));
                cmp_push(&mut out, at("s^D closed form"), sd, sum_power(n, j as u32).scale(&c));
                let su = schur_u(lattice.as_ref(), &high, &FormalVector::basis(low.clone()), n);
                let c = Rational::new(BigInt::from(1), factorial(j as u32));
                cmp_push(&mut out, at("s^U closed form"), su, sum_power(n, j as u32).scale(&c));
            }
        }
    }
    out
}

fn level_counts(inst: InstanceName, rank_cap: usize) -> Vec<Counterexample> {
    let lattice = inst.build();
    let mut out = Vec::new();
    for k in 0..=rank_cap {
        let got = lattice.level(k).len() as i64;
        let expected = count_level(inst, k) as i64;
        cmp_push(
            &mut out,
            format!("level count k={k}"),
            MultiPoly::constant(0, int(got)),
            MultiPoly::constant(0, int(expected)),
        );
    }
    out
}

/// Operator-based polynomials against the brute-force oracles for one
/// instance, plus level counts. The shifted instance has no tableau oracle
/// and is checked on level counts only.
pub fn check_oracle(inst: InstanceName, rank_cap: usize, n_max: usize) -> CheckReport {
    let mut out = level_counts(inst, rank_cap);
    match inst {
        InstanceName::Young | InstanceName::YoungDual => out.extend(young_oracle(inst, rank_cap, n_max)),
        InstanceName::Tree | InstanceName::TreeDual => out.extend(tree_oracle(inst, rank_cap, n_max)),
        InstanceName::Monomial => out.extend(monomial_oracle(rank_cap, n_max)),
        InstanceName::Shifted => {}
    }
    CheckReport::new("oracle", inst.as_str(), format!("rank<={rank_cap}, n<={n_max}"), out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tr(words: &[&str]) -> BinaryTree {
        BinaryTree::from_words(words).unwrap()
    }

    #[test]
    fn tableau_examples() {
        assert_eq!(ssyt_polynomial(&p(&[2, 1]), &Partition::empty(), 2).unwrap().to_string(), "t1^2*t2 + t1*t2^2");
        assert_eq!(ssyt_polynomial(&p(&[1]), &Partition::empty(), 1).unwrap().to_string(), "t1");
        // (2,2)/(1): fillings a|b over c|d with the top-left box removed
        let s = ssyt_polynomial(&p(&[2, 2]), &p(&[1]), 2).unwrap();
        assert_eq!(s.to_string(), "t1^2*t2 + t1*t2^2");
        assert!(ssyt_polynomial(&p(&[2]), &p(&[1, 1]), 2).is_err());
        assert_eq!(ssyt_polynomial(&p(&[2]), &p(&[2]), 3).unwrap(), MultiPoly::one(3));
    }

    #[test]
    fn tableau_count_against_hook_free_enumeration() {
        // s_{(1,1)}(t1,t2,t3) = e_2
        let s = ssyt_polynomial(&p(&[1, 1]), &Partition::empty(), 3).unwrap();
        assert_eq!(s.to_string(), "t1*t2 + t1*t3 + t2*t3");
    }

    #[test]
    fn labeling_examples() {
        let t = tr(&["0", "1", "12"]);
        assert_eq!(tree_labeling_polynomial(&t, LabelingKind::BinarySearching, 2).to_string(), "t1*t2^2");
        for kind in [LabelingKind::RightStrict, LabelingKind::LeftStrict, LabelingKind::BinarySearching] {
            assert_eq!(tree_labeling_polynomial(&tr(&["0"]), kind, 3).to_string(), "t1 + t2 + t3");
            assert_eq!(tree_labeling_polynomial(&BinaryTree::empty(), kind, 2), MultiPoly::one(2));
        }
    }

    #[test]
    fn reference_example_labelings() {
        let t = example_tree();
        let right = example_labeling(&[1, 2, 2, 2, 2, 3]);
        let left = example_labeling(&[1, 2, 1, 3, 2, 3]);
        let search = example_labeling(&[2, 1, 3, 1, 3, 4]);
        assert!(is_valid_labeling(&t, &right, LabelingKind::RightStrict));
        assert!(is_valid_labeling(&t, &left, LabelingKind::LeftStrict));
        assert!(is_valid_labeling(&t, &search, LabelingKind::BinarySearching));
        assert!(!is_valid_labeling(&t, &right, LabelingKind::LeftStrict));
        assert!(!is_valid_labeling(&t, &left, LabelingKind::RightStrict));
        assert!(!is_valid_labeling(&t, &search, LabelingKind::RightStrict));
    }

    #[test]
    fn backtracking_matches_exhaustive_filter() {
        for size in 0..5 {
            for t in BinaryTree::all(size) {
                for kind in [LabelingKind::RightStrict, LabelingKind::LeftStrict, LabelingKind::BinarySearching] {
                    let nodes: Vec<Word> = t.nodes().iter().cloned().collect();
                    let m = 3u32;
                    let mut count = 0;
                    let total = m.pow(nodes.len() as u32);
                    for code in 0..total {
                        let mut c = code;
                        let labels: BTreeMap<Word, u32> = nodes
                            .iter()
                            .map(|w| {
                                let l = c % m + 1;
                                c /= m;
                                (w.clone(), l)
                            })
                            .collect();
                        if is_valid_labeling(&t, &labels, kind) {
                            count += 1;
                        }
                    }
                    assert_eq!(labelings(&t, kind, m).len(), count, "{t} {kind:?}");
                }
            }
        }
    }

    #[test]
    fn level_count_examples() {
        let trees: Vec<u64> = (0..6).map(|k| count_level(InstanceName::Tree, k)).collect();
        assert_eq!(trees, [1, 1, 2, 5, 14, 42]);
        assert_eq!(count_level(InstanceName::Young, 5), 7);
        assert_eq!(count_level(InstanceName::Shifted, 6), 4);
        for inst in InstanceName::ALL {
            assert_eq!(count_level(inst, 0), 1);
        }
    }

    #[test]
    fn chains_match_labelings() {
        for size in 0..4 {
            for t in BinaryTree::all(size) {
                for m in 1..=3 {
                    assert_eq!(
                        labelings(&t, LabelingKind::RightStrict, m as u32).len() as u64,
                        count_addition_chains(&t, m, Strictness::Right)
                    );
                    assert_eq!(
                        labelings(&t, LabelingKind::BinarySearching, m as u32).len() as u64,
                        count_evacuation_chains(&t, m)
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_reports_pass() {
        for inst in InstanceName::ALL {
            let r = check_oracle(inst, 4, 2);
            assert!(r.pass, "{inst}: {:?}", r.counterexamples.first());
        }
    }
}
