//! Weighted complete symmetric polynomials and the identity checks.

mod checks;
mod heisenberg;
mod stats;
mod weighted;

use serde::{Deserialize, Serialize};

use crate::gmodule::FormalVector;
use crate::polyring::MultiPoly;

pub use checks::{
    check_cauchy, check_cauchy_sweep, check_commutation, check_duality, check_duality_sweep, check_pieri,
    check_pieri_minimum, check_pieri_minimum_sweep, check_pieri_sweep, check_pieri_variants,
    check_pieri_variants_sweep, duality_test_vectors,
};
pub use heisenberg::{apply_boson, check_heisenberg};
pub use stats::{
    b_from_a, b_from_a_literal, dual_a, partition_stats, product_with_reflected, vanishing_b,
    PartitionStats,
};
pub use weighted::{
    exponential_term, lam_complete, power_sum, weighted_complete, weighted_complete_by_extraction,
    weighted_complete_table,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: String,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

/// Outcome of one identity sweep. `pass` holds exactly when no
/// counterexample was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub instance: String,
    pub ranges: String,
    pub pass: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckReport {
    pub fn new(
        identity: impl Into<String>,
        instance: impl Into<String>,
        ranges: impl Into<String>,
        mut counterexamples: Vec<Counterexample>,
    ) -> Self {
        counterexamples.sort_by(|a, b| a.input.cmp(&b.input));
        CheckReport {
            identity: identity.into(),
            instance: instance.into(),
            ranges: ranges.into(),
            pass: counterexamples.is_empty(),
            counterexamples,
        }
    }

    /// Concatenate reports of the same identity and instance.
    pub fn merge(identity: &str, instance: &str, ranges: &str, parts: Vec<CheckReport>) -> Self {
        let all = parts.into_iter().flat_map(|r| r.counterexamples).collect();
        CheckReport::new(identity, instance, ranges, all)
    }
}

/// Record `lhs != rhs`.
pub(crate) fn compare(input: impl FnOnce() -> String, lhs: MultiPoly, rhs: MultiPoly, out: &mut Vec<Counterexample>) {
    if lhs != rhs {
        out.push(Counterexample { input: input(), lhs, rhs });
    }
}

/// Record every component where two formal vectors differ.
pub(crate) fn compare_vectors(input: &str, lhs: &FormalVector, rhs: &FormalVector, out: &mut Vec<Counterexample>) {
    let mut keys: Vec<_> = lhs.support().chain(rhs.support()).cloned().collect();
    keys.sort();
    keys.dedup();
    for b in keys {
        let (l, r) = (lhs.coeff(&b), rhs.coeff(&b));
        let n = l.nvars().max(r.nvars());
        compare(|| format!("{input}, component {b}"), l.lift(n), r.lift(n), out);
    }
}
