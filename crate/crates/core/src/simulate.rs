//! Exhaustive classical simulator for circuits — the ground-truth oracle for
//! the rest of the pipeline. Values are small exact integers; gates only
//! permute rail contents, so every intermediate state is a permutation of
//! `{0..k-1}`.

use crate::cascade::{truth_vector_of, Cascade};
use crate::lowering::{lower, Circuit, Gate};
use crate::spectral::TruthVector;
use crate::{Error, Result};

/// Exhaustive-sweep guard for [`output_function`].
pub const MAX_SWEEP_VARS: usize = 24;

/// Runs the circuit on one control assignment (`x[v]` drives control wire v,
/// i.e. variable `x_{v+1}`) and returns the final rail contents. Control
/// bits are copied into working state so NOT gates only affect downstream
/// gates of the same run.
pub fn run_circuit(circ: &Circuit, x: &[bool]) -> Result<Vec<usize>> {
    if x.len() != circ.n() {
        return Err(Error::Arity { expected: circ.n(), got: x.len() });
    }
    let mut ctrl = x.to_vec();
    let mut rails = circ.init().to_vec();
    for gate in circ.gates() {
        match *gate {
            Gate::Not { ctrl: c } => ctrl[c] = !ctrl[c],
            Gate::Swap { r1, r2 } => rails.swap(r1, r2),
            Gate::CSwap { ctrl: c, r1, r2 } => {
                if ctrl[c] {
                    rails.swap(r1, r2);
                }
            }
        }
    }
    Ok(rails)
}

/// Sweeps all 2^n control assignments in index order (x_1 is the most
/// significant index bit) and reads the output rail.
pub fn output_function(circ: &Circuit) -> Result<TruthVector> {
    let n = circ.n();
    if n > MAX_SWEEP_VARS {
        return Err(Error::Size(format!(
            "exhaustive sweep over n = {n} variables exceeds the {MAX_SWEEP_VARS}-variable guard"
        )));
    }
    let values = (0..1usize << n)
        .map(|i| {
            let x: Vec<bool> = (0..n).map(|v| (i >> (n - 1 - v)) & 1 == 1).collect();
            run_circuit(circ, &x).map(|rails| rails[circ.output_rail()])
        })
        .collect::<Result<Vec<_>>>()?;
    TruthVector::new(circ.k(), n, values)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub equal: bool,
    /// First lexicographic mismatch, as (input index, expected, got).
    pub first_mismatch: Option<(usize, usize, usize)>,
}

fn compare(got: &TruthVector, expected: &TruthVector) -> Result<VerifyReport> {
    if got.k() != expected.k() || got.n() != expected.n() {
        return Err(Error::Dimension(format!(
            "cannot compare (k={}, n={}) against (k={}, n={})",
            got.k(),
            got.n(),
            expected.k(),
            expected.n()
        )));
    }
    let mismatch = got
        .values()
        .iter()
        .zip(expected.values())
        .enumerate()
        .find(|(_, (g, e))| g != e)
        .map(|(i, (&g, &e))| (i, e, g));
    Ok(VerifyReport { equal: mismatch.is_none(), first_mismatch: mismatch })
}

/// Compares a circuit's output function against a specification.
pub fn verify_circuit(circ: &Circuit, f: &TruthVector) -> Result<VerifyReport> {
    compare(&output_function(circ)?, f)
}

/// Compares a cascade's group-level truth vector against a specification.
pub fn verify_cascade(c: &Cascade, f: &TruthVector) -> Result<VerifyReport> {
    compare(&truth_vector_of(c), f)
}

/// Cross-checks group-level semantics against gate-level semantics:
/// `truth_vector_of(c) == output_function(lower(c))`. Must always hold.
pub fn oracle_equiv(c: &Cascade) -> bool {
    match output_function(&lower(c)) {
        Ok(f) => f == truth_vector_of(c),
        Err(_) => false,
    }
}
