use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use super::{ASequence, BasisElement, BasisKind, FormalVector, Lattice, SharedLattice};
use crate::polyring::{MultiPoly, Rational};

/// `U_i v`, coefficient-wise.
pub fn apply_up(inst: &dyn Lattice, i: usize, v: &FormalVector) -> FormalVector {
    let mut out = FormalVector::zero(v.nvars());
    for (b, c) in v.iter() {
        out.add_scaled(&inst.up(i, b), c);
    }
    out
}

/// `D_i v`, coefficient-wise.
pub fn apply_down(inst: &dyn Lattice, i: usize, v: &FormalVector) -> FormalVector {
    let mut out = FormalVector::zero(v.nvars());
    for (b, c) in v.iter() {
        if inst.rank(b) >= i {
            out.add_scaled(&inst.down(i, b), c);
        }
    }
    out
}

/// `D(t_{var+1}) v = Σ_i t^i D_i v`. Finite because `D_i` lowers rank.
pub fn apply_down_series(inst: &dyn Lattice, var: usize, v: &FormalVector) -> FormalVector {
    assert!(var < v.nvars(), "variable index {var} out of range");
    let mut out = FormalVector::zero(v.nvars());
    for (b, c) in v.iter() {
        for i in 0..=inst.rank(b) {
            let image = inst.down(i, b);
            if !image.is_zero() {
                out.add_scaled(&image, &c.mul_var_pow(var, i as u32));
            }
        }
    }
    out
}

/// Components of `U(t_{var+1}) v` of rank at most `rank_cap`.
pub fn apply_up_series(
    inst: &dyn Lattice,
    var: usize,
    v: &FormalVector,
    rank_cap: usize,
) -> FormalVector {
    assert!(var < v.nvars(), "variable index {var} out of range");
    let mut out = FormalVector::zero(v.nvars());
    for (b, c) in v.iter() {
        let r = inst.rank(b);
        if r > rank_cap {
            continue;
        }
        for i in 0..=rank_cap - r {
            let image = inst.up(i, b);
            if !image.is_zero() {
                out.add_scaled(&image, &c.mul_var_pow(var, i as u32));
            }
        }
    }
    out
}

/// `D(t_{vars[0]+1}) ⋯ D(t_{vars[last]+1}) v`; the rightmost factor acts first.
/// A scalar `v` is lifted to `nvars` variables.
pub fn down_product(inst: &dyn Lattice, v: &FormalVector, vars: &[usize], nvars: usize) -> FormalVector {
    let mut cur = v.lift(nvars);
    for &k in vars.iter().rev() {
        cur = apply_down_series(inst, k, &cur);
    }
    cur
}

/// `U(t_{vars[last]+1}) ⋯ U(t_{vars[0]+1}) v` truncated to ranks `<= rank_cap`.
pub fn up_product(
    inst: &dyn Lattice,
    v: &FormalVector,
    vars: &[usize],
    nvars: usize,
    rank_cap: usize,
) -> FormalVector {
    let mut cur = v.lift(nvars).truncate_rank(rank_cap);
    for &k in vars {
        cur = apply_up_series(inst, k, &cur, rank_cap);
    }
    cur
}

fn first_vars(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `s^D_{v,μ}(t_1..t_n) = ⟨D(t_1)⋯D(t_n) v, μ⟩`.
pub fn schur_d(inst: &dyn Lattice, v: &FormalVector, mu: &BasisElement, n: usize) -> MultiPoly {
    schur_d_vars(inst, v, mu, &first_vars(n), n)
}

/// `s^D_{v,μ}` evaluated in the variables `vars` of an `nvars`-variable ring.
pub fn schur_d_vars(
    inst: &dyn Lattice,
    v: &FormalVector,
    mu: &BasisElement,
    vars: &[usize],
    nvars: usize,
) -> MultiPoly {
    down_product(inst, v, vars, nvars).coeff(mu)
}

/// `s^U_{μ,v}(t_1..t_n) = ⟨U(t_n)⋯U(t_1) v, μ⟩`. Components above `rank(μ)`
/// never reach `μ`, so the series are cut there.
pub fn schur_u(inst: &dyn Lattice, mu: &BasisElement, v: &FormalVector, n: usize) -> MultiPoly {
    schur_u_vars(inst, mu, v, &first_vars(n), n)
}

pub fn schur_u_vars(
    inst: &dyn Lattice,
    mu: &BasisElement,
    v: &FormalVector,
    vars: &[usize],
    nvars: usize,
) -> MultiPoly {
    up_product(inst, v, vars, nvars, inst.rank(mu)).coeff(mu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// A map between two levels: `entries[r][c]` is the coefficient of `rows[r]`
/// in the image of `cols[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelMatrix {
    pub rows: Vec<BasisElement>,
    pub cols: Vec<BasisElement>,
    pub entries: Vec<Vec<Rational>>,
}

impl LevelMatrix {
    fn of_map<F>(rows: Vec<BasisElement>, cols: Vec<BasisElement>, f: F) -> Self
    where
        F: Fn(&BasisElement) -> FormalVector,
    {
        let mut entries = vec![vec![Rational::zero(); cols.len()]; rows.len()];
        let index: HashMap<&BasisElement, usize> = rows.iter().enumerate().map(|(i, b)| (b, i)).collect();
        for (c, col) in cols.iter().enumerate() {
            for (b, k) in f(col).scalar_iter() {
                let r = index[b];
                entries[r][c] = k;
            }
        }
        LevelMatrix { rows, cols, entries }
    }

    pub fn transpose(&self) -> LevelMatrix {
        let entries = (0..self.cols.len())
            .map(|c| self.entries.iter().map(|row| row[c].clone()).collect())
            .collect();
        LevelMatrix { rows: self.cols.clone(), cols: self.rows.clone(), entries }
    }

    /// Matrix of `U_i : V_j → V_{j+i}` or `D_i : V_j → V_{j-i}`.
    pub fn of_operator(inst: &dyn Lattice, direction: Direction, i: usize, j: usize) -> Self {
        let cols = inst.level(j);
        match direction {
            Direction::Up => LevelMatrix::of_map(inst.level(j + i), cols, |b| inst.up(i, b)),
            Direction::Down => {
                let rows = if j >= i { inst.level(j - i) } else { Vec::new() };
                LevelMatrix::of_map(rows, cols, |b| {
                    if j >= i {
                        inst.down(i, b)
                    } else {
                        FormalVector::zero(0)
                    }
                })
            }
        }
    }
}

/// Matrix of `U*_i : V_j → V_{j-i}` (direction `Up`) or `D*_i : V_j → V_{j+i}`
/// (direction `Down`), as the transpose of the operator between the
/// neighbouring levels.
pub fn adjoint_component(inst: &dyn Lattice, direction: Direction, i: usize, j: usize) -> LevelMatrix {
    match direction {
        Direction::Up => {
            if j < i {
                return LevelMatrix { rows: Vec::new(), cols: inst.level(j), entries: Vec::new() };
            }
            LevelMatrix::of_operator(inst, Direction::Up, i, j - i).transpose()
        }
        Direction::Down => LevelMatrix::of_operator(inst, Direction::Down, i, j + i).transpose(),
    }
}

type AdjointTable = Arc<HashMap<BasisElement, FormalVector>>;

/// The adjoint operators packaged as a new lattice: `D*` raises rank and
/// plays the role of the up family, `U*` lowers rank and plays the role of
/// the down family. The pair again satisfies the commutation relation with
/// the same `{a_m}`.
///
/// Images are computed one whole level at a time and cached.
pub struct AdjointLattice {
    base: SharedLattice,
    cache: RwLock<HashMap<(Direction, usize, usize), AdjointTable>>,
}

impl AdjointLattice {
    pub fn new(base: SharedLattice) -> Self {
        AdjointLattice { base, cache: RwLock::new(HashMap::new()) }
    }

    pub fn base(&self) -> &SharedLattice {
        &self.base
    }

    /// Images of every basis element under the adjoint, built by pulling the
    /// base operator back from `source_level`.
    fn table(&self, direction: Direction, i: usize, source_level: usize) -> AdjointTable {
        let key = (direction, i, source_level);
        if let Some(t) = self.cache.read().expect("adjoint cache poisoned").get(&key) {
            return Arc::clone(t);
        }
        let mut map: HashMap<BasisElement, FormalVector> = HashMap::new();
        // D*_i sends level j to j+i: pull back D_i from level j+i.
        // U*_i sends level j to j-i: pull back U_i from level j-i.
        let (sources, op): (Vec<BasisElement>, Box<dyn Fn(&BasisElement) -> FormalVector + '_>) =
            match direction {
                Direction::Down => (self.base.level(source_level), Box::new(|c| self.base.down(i, c))),
                Direction::Up => (self.base.level(source_level), Box::new(|c| self.base.up(i, c))),
            };
        for c in &sources {
            for (b, k) in op(c).scalar_iter() {
                map.entry(b.clone())
                    .or_insert_with(|| FormalVector::zero(0))
                    .add_term(c.clone(), MultiPoly::constant(0, k));
            }
        }
        let table = Arc::new(map);
        self.cache
            .write()
            .expect("adjoint cache poisoned")
            .insert(key, Arc::clone(&table));
        table
    }
}

impl Lattice for AdjointLattice {
    fn name(&self) -> String {
        format!("adjoint({})", self.base.name())
    }

    fn kind(&self) -> BasisKind {
        self.base.kind()
    }

    fn level(&self, k: usize) -> Vec<BasisElement> {
        self.base.level(k)
    }

    fn rank(&self, b: &BasisElement) -> usize {
        self.base.rank(b)
    }

    /// `D*_i b`.
    fn up(&self, i: usize, b: &BasisElement) -> FormalVector {
        let target = self.base.rank(b) + i;
        self.table(Direction::Down, i, target)
            .get(b)
            .cloned()
            .unwrap_or_else(|| FormalVector::zero(0))
    }

    /// `U*_i b`.
    fn down(&self, i: usize, b: &BasisElement) -> FormalVector {
        let r = self.base.rank(b);
        if r < i {
            return FormalVector::zero(0);
        }
        self.table(Direction::Up, i, r - i)
            .get(b)
            .cloned()
            .unwrap_or_else(|| FormalVector::zero(0))
    }

    fn a_seq(&self) -> ASequence {
        self.base.a_seq()
    }

    fn minimum(&self) -> Option<BasisElement> {
        self.base.minimum()
    }
}
