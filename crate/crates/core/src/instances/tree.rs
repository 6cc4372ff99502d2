//! Planar binary trees: finite order ideals of the free monoid on `{1,2}`.
//! `w1` is the left child of `w`, `w2` the right child.

use std::collections::{BTreeSet, HashSet};

use crate::gmodule::{ASequence, BasisElement, BasisKind, BinaryTree, FormalVector, Lattice, ModuleError, Word};
use crate::polyring::int;

/// Which child added nodes may not have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    /// Added nodes get no right child (`U_i`, `a = 1,1,1,…`).
    Right,
    /// Added nodes get no left child (`U'_i`, `a = 1,1,0,0,…`).
    Left,
}

/// Every ideal `T' ⊇ T` with `|T' ∖ T| = i`.
fn supersets(t: &BinaryTree, i: usize) -> Vec<BTreeSet<Word>> {
    let mut frontier: HashSet<BTreeSet<Word>> = HashSet::from([t.nodes().clone()]);
    for _ in 0..i {
        let mut next = HashSet::new();
        for set in &frontier {
            let candidates: Vec<Word> = if set.is_empty() {
                vec![Word::root()]
            } else {
                set.iter()
                    .flat_map(|w| [w.left(), w.right()])
                    .filter(|c| !set.contains(c))
                    .collect()
            };
            for c in candidates {
                let mut grown = set.clone();
                grown.insert(c);
                next.insert(grown);
            }
        }
        frontier = next;
    }
    frontier.into_iter().collect()
}

/// Trees obtained from `t` by adding `i` nodes with the given strictness.
pub fn strict_additions(i: usize, t: &BinaryTree, strictness: Strictness) -> Vec<BinaryTree> {
    let mut out: Vec<BinaryTree> = supersets(t, i)
        .into_iter()
        .filter(|set| {
            set.iter().filter(|w| !t.contains(w)).all(|w| {
                let forbidden = match strictness {
                    Strictness::Right => w.right(),
                    Strictness::Left => w.left(),
                };
                !set.contains(&forbidden)
            })
        })
        .map(BinaryTree::from_set_unchecked)
        .collect();
    out.sort();
    out
}

fn unit_sum(trees: Vec<BinaryTree>) -> FormalVector {
    FormalVector::scalar(trees.into_iter().map(|t| (BasisElement::BinaryTree(t), int(1))))
}

/// `U_i T`: add `i` nodes right-strictly.
pub fn tree_up_right(i: usize, t: &BinaryTree) -> FormalVector {
    unit_sum(strict_additions(i, t, Strictness::Right))
}

/// `U'_i T`: add `i` nodes left-strictly.
pub fn tree_up_left(i: usize, t: &BinaryTree) -> FormalVector {
    unit_sum(strict_additions(i, t, Strictness::Left))
}

/// The chain `r_T = { w ∈ T | w2 ∉ T, and v2 ∉ T whenever w = v1w' }`,
/// listed in increasing prefix order.
pub fn tree_r_chain(t: &BinaryTree) -> Vec<Word> {
    let mut chain: Vec<Word> = t
        .nodes()
        .iter()
        .filter(|w| {
            if t.contains(&w.right()) {
                return false;
            }
            let letters = w.letters();
            (0..letters.len())
                .filter(|&k| letters[k] == 1)
                .all(|k| {
                    let mut v = Word::root();
                    for &l in &letters[..k] {
                        v = v.child(l);
                    }
                    !t.contains(&v.right())
                })
        })
        .cloned()
        .collect();
    chain.sort_by_key(Word::len);
    debug_assert!(chain.windows(2).all(|p| p[0].is_prefix_of(&p[1])));
    chain
}

/// `T ⊖ w = (T ∖ T_w) ∪ { wv | w1v ∈ T_w }`: delete `w` and regraft its left
/// subtree in its place.
pub fn tree_evacuate(t: &BinaryTree, w: &Word) -> Result<BinaryTree, ModuleError> {
    if !t.contains(w) || t.contains(&w.right()) {
        return Err(ModuleError::Precondition(format!(
            "evacuation needs {w} in the tree and {w}2 absent"
        )));
    }
    let left = w.left();
    let mut out: BTreeSet<Word> = t.nodes().iter().filter(|x| !w.is_prefix_of(x)).cloned().collect();
    for x in t.nodes() {
        if let Some(rest) = left.strip_prefix_of(x) {
            out.insert(w.concat(&rest));
        }
    }
    let tree = BinaryTree::from_set_unchecked(out);
    debug_assert!(tree.is_ideal());
    Ok(tree)
}

/// `D_i T`: evacuate `w_{T,i}, …, w_{T,1}` in that order, or zero when
/// `i > |r_T|`.
pub fn tree_down(i: usize, t: &BinaryTree) -> FormalVector {
    let chain = tree_r_chain(t);
    if i > chain.len() {
        return FormalVector::zero(0);
    }
    let mut cur = t.clone();
    for w in chain[..i].iter().rev() {
        cur = tree_evacuate(&cur, w).expect("chain nodes stay evacuable");
    }
    FormalVector::basis(BasisElement::BinaryTree(cur))
}

/// Planar binary trees with the evacuation down family and a right- or
/// left-strict up family.
#[derive(Clone, Debug)]
pub struct Trees {
    pub up_strictness: Strictness,
}

impl Trees {
    pub fn right_strict() -> Self {
        Trees { up_strictness: Strictness::Right }
    }

    pub fn left_strict() -> Self {
        Trees { up_strictness: Strictness::Left }
    }
}

fn as_tree(b: &BasisElement) -> &BinaryTree {
    match b {
        BasisElement::BinaryTree(t) => t,
        other => panic!("tree lattice given a non-tree {other}"),
    }
}

impl Lattice for Trees {
    fn name(&self) -> String {
        match self.up_strictness {
            Strictness::Right => "tree".into(),
            Strictness::Left => "tree-dual".into(),
        }
    }

    fn kind(&self) -> BasisKind {
        BasisKind::BinaryTree
    }

    fn level(&self, k: usize) -> Vec<BasisElement> {
        BinaryTree::all(k).into_iter().map(BasisElement::BinaryTree).collect()
    }

    fn up(&self, i: usize, b: &BasisElement) -> FormalVector {
        match self.up_strictness {
            Strictness::Right => tree_up_right(i, as_tree(b)),
            Strictness::Left => tree_up_left(i, as_tree(b)),
        }
    }

    fn down(&self, i: usize, b: &BasisElement) -> FormalVector {
        tree_down(i, as_tree(b))
    }

    fn a_seq(&self) -> ASequence {
        match self.up_strictness {
            Strictness::Right => ASequence::Ones,
            Strictness::Left => ASequence::OneOne,
        }
    }

    fn minimum(&self) -> Option<BasisElement> {
        Some(BasisElement::BinaryTree(BinaryTree::empty()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(words: &[&str]) -> BinaryTree {
        BinaryTree::from_words(words).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn trees_of(v: &FormalVector) -> Vec<BasisElement> {
        v.support().cloned().collect()
    }

    #[test]
    fn right_strict_additions_to_root() {
        let mut expected = vec![
            BasisElement::tree(&["0", "1", "11"]),
            BasisElement::tree(&["0", "1", "2"]),
            BasisElement::tree(&["0", "2", "21"]),
        ];
        expected.sort();
        assert_eq!(trees_of(&tree_up_right(2, &tr(&["0"]))), expected);
    }

    #[test]
    fn left_strict_additions_to_root() {
        let mut expected = vec![
            BasisElement::tree(&["0", "2", "22"]),
            BasisElement::tree(&["0", "1", "2"]),
            BasisElement::tree(&["0", "1", "12"]),
        ];
        expected.sort();
        assert_eq!(trees_of(&tree_up_left(2, &tr(&["0"]))), expected);
        let t = tr(&["0", "1"]);
        assert_eq!(trees_of(&tree_up_left(0, &t)), vec![BasisElement::BinaryTree(t)]);
    }

    #[test]
    fn chain_of_worked_example() {
        let t = tr(&["0", "1", "11", "12", "121"]);
        let chain = tree_r_chain(&t);
        assert_eq!(chain, vec![w("0"), w("12"), w("121")]);
        assert_eq!(tree_r_chain(&tr(&["0"])), vec![w("0")]);
        assert!(tree_r_chain(&BinaryTree::empty()).is_empty());
    }

    #[test]
    fn evacuation_examples() {
        let t = tr(&["0", "1", "11", "12", "121"]);
        let step = tree_evacuate(&t, &w("12")).unwrap();
        assert_eq!(step, tr(&["0", "1", "11", "12"]));
        assert_eq!(tree_evacuate(&step, &w("0")).unwrap(), tr(&["0", "1", "2"]));
        assert_eq!(tree_evacuate(&tr(&["0"]), &w("0")).unwrap(), BinaryTree::empty());
        assert!(tree_evacuate(&tr(&["0", "2"]), &w("0")).is_err());
        assert!(tree_evacuate(&tr(&["0"]), &w("1")).is_err());
    }

    #[test]
    fn down_examples() {
        let t = tr(&["0", "1", "11", "12", "121"]);
        assert_eq!(tree_down(2, &t), FormalVector::basis(BasisElement::tree(&["0", "1", "2"])));
        assert_eq!(tree_down(0, &t), FormalVector::basis(BasisElement::BinaryTree(t.clone())));
        assert!(tree_down(9, &tr(&["0"])).is_zero());
        let s = tr(&["0", "1", "12"]);
        assert_eq!(tree_down(1, &s), FormalVector::basis(BasisElement::tree(&["0", "2"])));
        assert_eq!(tree_down(2, &s), FormalVector::basis(BasisElement::tree(&["0"])));
        assert!(tree_down(3, &s).is_zero());
    }

    #[test]
    fn down_results_are_ideals_of_the_right_size() {
        for n in 0..7 {
            for t in BinaryTree::all(n) {
                let chain = tree_r_chain(&t);
                for i in 0..=chain.len() {
                    let v = tree_down(i, &t);
                    let (b, _) = v.iter().next().unwrap();
                    match b {
                        BasisElement::BinaryTree(s) => {
                            assert!(s.is_ideal());
                            assert_eq!(s.size(), n - i);
                        }
                        _ => unreachable!(),
                    }
                }
            }
        }
    }
}
