//! Young's lattice with horizontal-strip operators, and its dual up family
//! adding vertical strips.

use crate::gmodule::{ASequence, BasisElement, BasisKind, FormalVector, Lattice, Partition};
use crate::polyring::int;

fn unit_sum(parts: impl IntoIterator<Item = Partition>) -> FormalVector {
    FormalVector::scalar(parts.into_iter().map(|p| (BasisElement::Partition(p), int(1))))
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal strip of `i` boxes, i.e. the
/// interlacing `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ …`.
pub fn horizontal_strip_additions(i: usize, lambda: &Partition) -> Vec<Partition> {
    fn go(
        lambda: &Partition,
        row: usize,
        rest: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row > lambda.len() {
            if rest == 0 {
                out.push(Partition::from_padded(cur.clone()));
            }
            return;
        }
        let low = lambda.part(row);
        let high = if row == 0 { low + rest } else { lambda.part(row - 1) };
        for p in (low..=high.min(low + rest)).rev() {
            cur.push(p);
            go(lambda, row + 1, rest - (p - low), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, i as u32, &mut Vec::new(), &mut out);
    out
}

/// All `ν ⊆ λ` with `λ/ν` a horizontal strip of `i` boxes.
pub fn horizontal_strip_removals(i: usize, lambda: &Partition) -> Vec<Partition> {
    fn go(
        lambda: &Partition,
        row: usize,
        rest: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == lambda.len() {
            if rest == 0 {
                out.push(Partition::from_padded(cur.clone()));
            }
            return;
        }
        let high = lambda.part(row);
        let low = lambda.part(row + 1);
        for p in (low..=high).rev() {
            let removed = high - p;
            if removed > rest {
                continue;
            }
            cur.push(p);
            go(lambda, row + 1, rest - removed, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, i as u32, &mut Vec::new(), &mut out);
    out
}

/// `U_i λ`: add a horizontal strip of `i` boxes.
pub fn young_up(i: usize, lambda: &Partition) -> FormalVector {
    unit_sum(horizontal_strip_additions(i, lambda))
}

/// `D_i λ`: remove a horizontal strip of `i` boxes.
pub fn young_down(i: usize, lambda: &Partition) -> FormalVector {
    unit_sum(horizontal_strip_removals(i, lambda))
}

/// `U'_i λ`: add `i` boxes, no two in the same row.
pub fn young_dual_up(i: usize, lambda: &Partition) -> FormalVector {
    unit_sum(
        horizontal_strip_additions(i, &lambda.transpose())
            .into_iter()
            .map(|p| p.transpose()),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

/// Young's lattice. The down family always removes horizontal strips; the
/// up family adds horizontal strips (`a = 1,1,1,…`) or vertical strips
/// (`a = 1,1,0,0,…`).
#[derive(Clone, Debug)]
pub struct Young {
    pub up_strips: StripKind,
}

impl Young {
    pub fn new() -> Self {
        Young { up_strips: StripKind::Horizontal }
    }

    pub fn dual() -> Self {
        Young { up_strips: StripKind::Vertical }
    }
}

impl Default for Young {
    fn default() -> Self {
        Self::new()
    }
}

fn as_partition(b: &BasisElement) -> &Partition {
    match b {
        BasisElement::Partition(p) => p,
        other => panic!("Young's lattice given a non-partition {other}"),
    }
}

impl Lattice for Young {
    fn name(&self) -> String {
        match self.up_strips {
            StripKind::Horizontal => "young".into(),
            StripKind::Vertical => "young-dual".into(),
        }
    }

    fn kind(&self) -> BasisKind {
        BasisKind::Partition
    }

    fn level(&self, k: usize) -> Vec<BasisElement> {
        Partition::all(k).into_iter().map(BasisElement::Partition).collect()
    }

    fn up(&self, i: usize, b: &BasisElement) -> FormalVector {
        match self.up_strips {
            StripKind::Horizontal => young_up(i, as_partition(b)),
            StripKind::Vertical => young_dual_up(i, as_partition(b)),
        }
    }

    fn down(&self, i: usize, b: &BasisElement) -> FormalVector {
        young_down(i, as_partition(b))
    }

    fn a_seq(&self) -> ASequence {
        match self.up_strips {
            StripKind::Horizontal => ASequence::Ones,
            StripKind::Vertical => ASequence::OneOne,
        }
    }

    fn minimum(&self) -> Option<BasisElement> {
        Some(BasisElement::Partition(Partition::empty()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn support(v: &FormalVector) -> Vec<String> {
        v.support().map(|b| b.to_string()).collect()
    }

    #[test]
    fn up_two_on_two_one() {
        let v = young_up(2, &p(&[2, 1]));
        assert_eq!(support(&v), ["[2,2,1]", "[3,1,1]", "[3,2]", "[4,1]"]);
        assert!(v.scalar_iter().all(|(_, c)| c == int(1)));
    }

    #[test]
    fn up_edge_cases() {
        assert_eq!(support(&young_up(0, &p(&[3, 1]))), ["[3,1]"]);
        assert_eq!(support(&young_up(1, &p(&[1]))), ["[1,1]", "[2]"]);
        assert_eq!(support(&young_up(3, &Partition::empty())), ["[3]"]);
    }

    #[test]
    fn down_two_on_three_one_one() {
        assert_eq!(support(&young_down(2, &p(&[3, 1, 1]))), ["[1,1,1]", "[2,1]"]);
        assert_eq!(support(&young_down(0, &p(&[2, 1]))), ["[2,1]"]);
        assert!(young_down(3, &p(&[2, 1])).is_zero());
    }

    #[test]
    fn vertical_strips() {
        assert_eq!(support(&young_dual_up(1, &Partition::empty())), ["[1]"]);
        assert_eq!(support(&young_dual_up(2, &p(&[1]))), ["[1,1,1]", "[2,1]"]);
        assert_eq!(support(&young_dual_up(0, &p(&[2]))), ["[2]"]);
    }

    #[test]
    fn strips_against_brute_force() {
        // horizontal strip: containment plus at most one box per column
        for n in 0..6 {
            for lam in Partition::all(n) {
                for i in 0..4 {
                    let mut expected: Vec<Partition> = Partition::all(n + i)
                        .into_iter()
                        .filter(|mu| {
                            mu.contains(&lam)
                                && (1..=mu.part(0)).all(|c| {
                                    let col = |q: &Partition| q.parts().iter().filter(|&&x| x >= c).count();
                                    col(mu) - col(&lam) <= 1
                                })
                        })
                        .collect();
                    expected.sort();
                    let mut got = horizontal_strip_additions(i, &lam);
                    got.sort();
                    assert_eq!(got, expected, "add {i} to {lam}");
                    if n >= i {
                        let mut exp_down: Vec<Partition> = Partition::all(n - i)
                            .into_iter()
                            .filter(|nu| horizontal_strip_additions(i, nu).contains(&lam))
                            .collect();
                        exp_down.sort();
                        let mut got_down = horizontal_strip_removals(i, &lam);
                        got_down.sort();
                        assert_eq!(got_down, exp_down, "remove {i} from {lam}");
                    }
                }
            }
        }
    }
}
