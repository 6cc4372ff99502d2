use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Value};

use super::{BasisElement, BasisKind, ModuleError};
use crate::polyring::{MultiPoly, Rational};

/// A finite linear combination of basis elements with polynomial
/// coefficients in a shared number of variables. Zero coefficients are not
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalVector {
    nvars: usize,
    entries: BTreeMap<BasisElement, MultiPoly>,
}

impl FormalVector {
    pub fn zero(nvars: usize) -> Self {
        FormalVector { nvars, entries: BTreeMap::new() }
    }

    /// `b` with coefficient 1, as a scalar (zero-variable) vector.
    pub fn basis(b: BasisElement) -> Self {
        Self::scalar([(b, Rational::from_integer(1.into()))])
    }

    /// A vector with constant coefficients and no variables.
    pub fn scalar<I: IntoIterator<Item = (BasisElement, Rational)>>(terms: I) -> Self {
        let mut v = Self::zero(0);
        for (b, c) in terms {
            v.add_term(b, MultiPoly::constant(0, c));
        }
        v
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisElement, &MultiPoly)> {
        self.entries.iter()
    }

    /// Iterates constant coefficients; only meaningful for scalar vectors.
    pub fn scalar_iter(&self) -> impl Iterator<Item = (&BasisElement, Rational)> {
        self.entries.iter().map(|(b, c)| (b, c.constant_term()))
    }

    pub fn support(&self) -> impl Iterator<Item = &BasisElement> {
        self.entries.keys()
    }

    pub fn coeff(&self, b: &BasisElement) -> MultiPoly {
        self.entries
            .get(b)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    pub fn kind(&self) -> Option<BasisKind> {
        self.entries.keys().next().map(BasisElement::kind)
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.entries.keys().map(BasisElement::rank).max()
    }

    pub fn add_term(&mut self, b: BasisElement, c: MultiPoly) {
        assert_eq!(c.nvars(), self.nvars, "coefficient variable count");
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&b) {
            Some(existing) => {
                existing.add_assign_ref(&c);
                if existing.is_zero() {
                    self.entries.remove(&b);
                }
            }
            None => {
                self.entries.insert(b, c);
            }
        }
    }

    /// Adds `factor * other`. A scalar `other` is allowed for any `self`.
    pub fn add_scaled(&mut self, other: &FormalVector, factor: &MultiPoly) {
        assert_eq!(factor.nvars(), self.nvars, "factor variable count");
        for (b, c) in &other.entries {
            let term = if other.nvars == 0 {
                factor.scale(&c.constant_term())
            } else {
                assert_eq!(other.nvars, self.nvars, "vector variable count");
                factor * c
            };
            self.add_term(b.clone(), term);
        }
    }

    /// Adds `c * other` for a rational `c`; `other` must share `nvars`.
    pub fn add_rational_scaled(&mut self, other: &FormalVector, c: &Rational) {
        assert_eq!(other.nvars, self.nvars, "vector variable count");
        if c.is_zero() {
            return;
        }
        for (b, k) in &other.entries {
            self.add_term(b.clone(), k.scale(c));
        }
    }

    pub fn scale(&self, c: &Rational) -> FormalVector {
        let mut out = FormalVector::zero(self.nvars);
        out.add_rational_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &FormalVector) -> FormalVector {
        let mut out = self.clone();
        out.add_rational_scaled(other, &-Rational::from_integer(1.into()));
        out
    }

    pub fn add(&self, other: &FormalVector) -> FormalVector {
        let mut out = self.clone();
        out.add_rational_scaled(other, &Rational::from_integer(1.into()));
        out
    }

    /// Re-expresses coefficients in `nvars >= self.nvars` variables.
    pub fn lift(&self, nvars: usize) -> FormalVector {
        if nvars == self.nvars {
            return self.clone();
        }
        FormalVector {
            nvars,
            entries: self.entries.iter().map(|(b, c)| (b.clone(), c.lift(nvars))).collect(),
        }
    }

    /// Drops every component of rank above `max_rank`.
    pub fn truncate_rank(&self, max_rank: usize) -> FormalVector {
        FormalVector {
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .filter(|(b, _)| b.rank() <= max_rank)
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(b, c)| json!({ "basis": b.to_json(), "coeff": c }))
                .collect(),
        )
    }

    pub fn from_json(kind: BasisKind, nvars: usize, v: &Value) -> Result<Self, ModuleError> {
        let bad = |why: &str| ModuleError::InvalidElement(format!("formal vector JSON: {why}"));
        let mut out = FormalVector::zero(nvars);
        for entry in v.as_array().ok_or_else(|| bad("expected an array"))? {
            let b = BasisElement::from_json(kind, entry.get("basis").ok_or_else(|| bad("missing basis"))?)?;
            let c: MultiPoly = serde_json::from_value(
                entry.get("coeff").cloned().ok_or_else(|| bad("missing coeff"))?,
            )
            .map_err(|e| bad(&e.to_string()))?;
            if c.nvars() != nvars {
                return Err(ModuleError::VarMismatch(nvars, c.nvars()));
            }
            out.add_term(b, c);
        }
        Ok(out)
    }
}

/// The natural pairing `⟨w, v⟩ = Σ_b w_b v_b`, making the basis orthonormal.
pub fn pairing(w: &FormalVector, v: &FormalVector) -> Result<MultiPoly, ModuleError> {
    if let (Some(a), Some(b)) = (w.kind(), v.kind()) {
        if a != b {
            return Err(ModuleError::KindMismatch(a, b));
        }
    }
    let nvars = match (w.nvars, v.nvars) {
        (a, b) if a == b => a,
        (0, b) => b,
        (a, 0) => a,
        (a, b) => return Err(ModuleError::VarMismatch(a, b)),
    };
    let (small, large) = if w.len() <= v.len() { (w, v) } else { (v, w) };
    let mut out = MultiPoly::zero(nvars);
    for (b, c) in &small.entries {
        if let Some(d) = large.entries.get(b) {
            out.add_assign_ref(&(&c.lift(nvars) * &d.lift(nvars)));
        }
    }
    Ok(out)
}
