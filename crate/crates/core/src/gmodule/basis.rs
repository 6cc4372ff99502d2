//! Basis elements of the graded lattices and their text encodings.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::Value;

use super::ModuleError;

/// Weakly decreasing positive parts. The empty partition is the minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, ModuleError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ModuleError::InvalidElement(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Trailing zeros are dropped; the remaining parts must already be sorted.
    pub(crate) fn from_padded(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `r` (zero-based), zero past the end.
    pub fn part(&self, r: usize) -> u32 {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|r| self.0[r] >= other.0[r])
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", encode_parts(&self.0))
    }
}

/// Strictly decreasing positive parts, drawn as a shifted diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, ModuleError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(ModuleError::InvalidElement(format!(
                "not a strict partition: {parts:?}"
            )));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Strict partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<StrictPartition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", encode_parts(&self.0))
    }
}

fn encode_parts(parts: &[u32]) -> String {
    let inner: Vec<String> = parts.iter().map(u32::to_string).collect();
    format!("[{}]", inner.join(","))
}

/// A word over `{1,2}`; the empty word is the root node `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn root() -> Self {
        Word(Vec::new())
    }

    pub fn parse(s: &str) -> Result<Self, ModuleError> {
        if s == "0" {
            return Ok(Word::root());
        }
        s.bytes()
            .map(|b| match b {
                b'1' => Ok(1),
                b'2' => Ok(2),
                _ => Err(ModuleError::InvalidElement(format!("bad tree word `{s}`"))),
            })
            .collect::<Result<Vec<u8>, _>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, letter: u8) -> Word {
        debug_assert!(letter == 1 || letter == 2);
        let mut w = self.0.clone();
        w.push(letter);
        Word(w)
    }

    pub fn left(&self) -> Word {
        self.child(1)
    }

    pub fn right(&self) -> Word {
        self.child(2)
    }

    pub fn parent(&self) -> Option<Word> {
        if self.0.is_empty() {
            None
        } else {
            Some(Word(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    /// `other = self · rest`, returning `rest`.
    pub fn strip_prefix_of(&self, other: &Word) -> Option<Word> {
        other.0.strip_prefix(self.0.as_slice()).map(|r| Word(r.to_vec()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A planar binary tree: a finite prefix-closed set of words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryTree(BTreeSet<Word>);

impl BinaryTree {
    pub fn new<I: IntoIterator<Item = Word>>(nodes: I) -> Result<Self, ModuleError> {
        let set: BTreeSet<Word> = nodes.into_iter().collect();
        let closed = set
            .iter()
            .all(|w| w.parent().map_or(true, |p| set.contains(&p)));
        if !closed {
            return Err(ModuleError::InvalidElement(format!(
                "node set is not prefix-closed: {}",
                BinaryTree(set)
            )));
        }
        Ok(BinaryTree(set))
    }

    /// Parses words written as in `0`, `1`, `12`.
    pub fn from_words(words: &[&str]) -> Result<Self, ModuleError> {
        Self::new(words.iter().map(|w| Word::parse(w)).collect::<Result<Vec<_>, _>>()?)
    }

    pub fn empty() -> Self {
        BinaryTree(BTreeSet::new())
    }

    pub(crate) fn from_set_unchecked(set: BTreeSet<Word>) -> Self {
        BinaryTree(set)
    }

    pub fn nodes(&self) -> &BTreeSet<Word> {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.contains(w)
    }

    pub fn is_ideal(&self) -> bool {
        self.0
            .iter()
            .all(|w| w.parent().map_or(true, |p| self.0.contains(&p)))
    }

    /// The subtree `T_v = { w ∈ T | v ≤ w }`.
    pub fn subtree(&self, v: &Word) -> BTreeSet<Word> {
        self.0.iter().filter(|w| v.is_prefix_of(w)).cloned().collect()
    }

    /// All trees with `n` nodes (Catalan many), sorted.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        fn shapes(n: usize, memo: &mut Vec<Option<Vec<BTreeSet<Word>>>>) -> Vec<BTreeSet<Word>> {
            if let Some(v) = &memo[n] {
                return v.clone();
            }
            let mut out = Vec::new();
            if n == 0 {
                out.push(BTreeSet::new());
            } else {
                for left in 0..n {
                    let right = n - 1 - left;
                    let ls = shapes(left, memo);
                    let rs = shapes(right, memo);
                    for l in &ls {
                        for r in &rs {
                            let mut t = BTreeSet::new();
                            t.insert(Word::root());
                            t.extend(l.iter().map(|w| Word::root().left().concat(w)));
                            t.extend(r.iter().map(|w| Word::root().right().concat(w)));
                            out.push(t);
                        }
                    }
                }
            }
            memo[n] = Some(out.clone());
            out
        }
        let mut memo = vec![None; n + 1];
        let mut trees: Vec<BinaryTree> = shapes(n, &mut memo).into_iter().map(BinaryTree).collect();
        trees.sort();
        trees
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.0.iter().map(|w| format!("\"{}\"", word_json(w))).collect();
        write!(f, "[{}]", words.join(","))
    }
}

fn word_json(w: &Word) -> String {
    w.letters().iter().map(|l| char::from(b'0' + l)).collect()
}

/// Which family a basis element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    Partition,
    StrictPartition,
    BinaryTree,
    MonomialDegree,
}

/// An element of the distinguished basis `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    Partition(Partition),
    StrictPartition(StrictPartition),
    BinaryTree(BinaryTree),
    MonomialDegree(u32),
}

impl BasisElement {
    pub fn kind(&self) -> BasisKind {
        match self {
            BasisElement::Partition(_) => BasisKind::Partition,
            BasisElement::StrictPartition(_) => BasisKind::StrictPartition,
            BasisElement::BinaryTree(_) => BasisKind::BinaryTree,
            BasisElement::MonomialDegree(_) => BasisKind::MonomialDegree,
        }
    }

    /// Boxes, boxes, nodes, or degree.
    pub fn rank(&self) -> usize {
        match self {
            BasisElement::Partition(p) => p.size(),
            BasisElement::StrictPartition(p) => p.size(),
            BasisElement::BinaryTree(t) => t.size(),
            BasisElement::MonomialDegree(d) => *d as usize,
        }
    }

    pub fn partition(parts: &[u32]) -> Self {
        BasisElement::Partition(Partition::new(parts.to_vec()).expect("valid partition"))
    }

    pub fn strict(parts: &[u32]) -> Self {
        BasisElement::StrictPartition(StrictPartition::new(parts.to_vec()).expect("valid strict partition"))
    }

    pub fn tree(words: &[&str]) -> Self {
        BasisElement::BinaryTree(BinaryTree::from_words(words).expect("valid tree"))
    }

    /// Encoding used on the command line and in JSON output.
    pub fn encode(&self) -> String {
        match self {
            BasisElement::Partition(p) => p.to_string(),
            BasisElement::StrictPartition(p) => p.to_string(),
            BasisElement::BinaryTree(t) => t.to_string(),
            BasisElement::MonomialDegree(d) => d.to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::from_str(&self.encode()).expect("encodings are valid JSON")
    }

    pub fn from_json(kind: BasisKind, v: &Value) -> Result<Self, ModuleError> {
        let bad = || ModuleError::InvalidElement(format!("cannot read {v} as {kind:?}"));
        let ints = |v: &Value| -> Result<Vec<u32>, ModuleError> {
            v.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(bad))
                .collect()
        };
        match kind {
            BasisKind::Partition => Ok(BasisElement::Partition(Partition::new(ints(v)?)?)),
            BasisKind::StrictPartition => {
                Ok(BasisElement::StrictPartition(StrictPartition::new(ints(v)?)?))
            }
            BasisKind::BinaryTree => {
                let words = v
                    .as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| x.as_str().ok_or_else(bad).and_then(|s| {
                        if s.is_empty() { Ok(Word::root()) } else { Word::parse(s) }
                    }))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(BasisElement::BinaryTree(BinaryTree::new(words)?))
            }
            BasisKind::MonomialDegree => v
                .as_u64()
                .and_then(|d| u32::try_from(d).ok())
                .map(BasisElement::MonomialDegree)
                .ok_or_else(bad),
        }
    }

    pub fn parse(kind: BasisKind, s: &str) -> Result<Self, ModuleError> {
        let v: Value = serde_json::from_str(s.trim())
            .map_err(|e| ModuleError::InvalidElement(format!("`{s}`: {e}")))?;
        Self::from_json(kind, &v)
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}
