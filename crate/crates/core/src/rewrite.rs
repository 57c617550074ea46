//! Local transformations on cascades with a deterministic fixpoint driver.
//!
//! All rules preserve the output-rail function: the value read from the
//! designated output rail is unchanged for every input, even where the full
//! rail permutation is not (trailing-cell removal changes it).

use crate::cascade::{Cascade, Cell};
use crate::dihedral::GroupElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleApplication {
    pub rule: &'static str,
    /// Cell index of the first change.
    pub position: usize,
    pub cells_before: usize,
    pub cells_after: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RewriteReport {
    pub applications: Vec<RuleApplication>,
    pub initial_cells: usize,
    pub final_cells: usize,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimizeOptions {
    /// Keep the full rail permutation intact: disables trailing-cell removal
    /// and output retargeting. For users composing cascades end to end.
    pub preserve_permutation: bool,
    /// Also move unconditional boundary cells out of the word: retarget the
    /// output past a trailing shift and fold a leading constant cell into the
    /// rail initialization. Off by default so the optimized word matches the
    /// algebraic form `g^{..} a^{..} ...` cell for cell.
    pub boundary: bool,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        Self { preserve_permutation: false, boundary: false }
    }
}

/// Collapses every maximal run of consecutive g-cells. Control sets combine
/// by symmetric difference (g^2 = e, so shared variables cancel);
/// unconditional g's contribute a constant parity offset. A run folds to
/// nothing, one cell, or `[g, g^{mask}]` when both an offset and a residual
/// mask remain.
pub fn merge_adjacent_g(c: &Cascade) -> Cascade {
    let mut cells = Vec::with_capacity(c.cells().len());
    let mut i = 0;
    let src = c.cells();
    while i < src.len() {
        match src[i] {
            Cell::A { .. } => {
                cells.push(src[i]);
                i += 1;
            }
            Cell::G { .. } => {
                let mut mask = 0u32;
                let mut offset = false;
                while i < src.len() {
                    match src[i] {
                        Cell::G { controls: 0 } => offset = !offset,
                        Cell::G { controls } => mask ^= controls,
                        Cell::A { .. } => break,
                    }
                    i += 1;
                }
                if offset {
                    cells.push(Cell::G { controls: 0 });
                }
                if mask != 0 {
                    cells.push(Cell::G { controls: mask });
                }
            }
        }
    }
    c.with_parts(cells, c.init().to_vec(), c.output_rail())
}

/// Removes every a-cell with exponent 0 mod k.
pub fn drop_identity_a(c: &Cascade) -> Cascade {
    let cells = c
        .cells()
        .iter()
        .copied()
        .filter(|cell| !matches!(cell, Cell::A { exp: 0 }))
        .collect();
    c.with_parts(cells, c.init().to_vec(), c.output_rail())
}

/// Whether a cell fixes the given rail for every control value.
fn fixes_rail(cell: &Cell, g: &GroupElement, rail: usize) -> bool {
    match cell {
        Cell::A { exp } => *exp == 0,
        // g moves every rail except rail 0 (k odd), regardless of controls
        Cell::G { .. } => g.apply(rail) == rail,
    }
}

/// Repeatedly removes the last cell while its permutation fixes the output
/// rail under all control values (a trailing g never moves rail 0).
pub fn drop_trailing(c: &Cascade) -> Cascade {
    let group = c.group();
    let mut cells = c.cells().to_vec();
    while let Some(last) = cells.last() {
        if fixes_rail(last, group.reflection(), c.output_rail()) {
            cells.pop();
        } else {
            break;
        }
    }
    c.with_parts(cells, c.init().to_vec(), c.output_rail())
}

/// Removes a trailing unconditional cell by moving the output rail to the
/// rail whose content would have landed on it. No-op when the last cell is
/// controlled.
pub fn retarget_output(c: &Cascade) -> Cascade {
    let k = c.k();
    let (element, rest) = match c.cells().split_last() {
        Some((Cell::A { exp }, rest)) => (c.group().rotation_power(*exp as i64), rest),
        Some((Cell::G { controls: 0 }, rest)) => (c.group().reflection().clone(), rest),
        _ => return c.clone(),
    };
    let out = c.output_rail();
    let new_out = (0..k).find(|&i| element.apply(i) == out).expect("bijection");
    c.with_parts(rest.to_vec(), c.init().to_vec(), new_out)
}

/// Removes a leading unconditional cell by routing the rail constants
/// through its permutation. No-op when the first cell is controlled.
pub fn absorb_leading(c: &Cascade) -> Cascade {
    let (element, rest) = match c.cells().split_first() {
        Some((Cell::A { exp }, rest)) => (c.group().rotation_power(*exp as i64), rest),
        Some((Cell::G { controls: 0 }, rest)) => (c.group().reflection().clone(), rest),
        _ => return c.clone(),
    };
    let init = element.route(c.init());
    c.with_parts(rest.to_vec(), init, c.output_rail())
}

fn first_difference(before: &Cascade, after: &Cascade) -> usize {
    before
        .cells()
        .iter()
        .zip(after.cells())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| after.cells().len().min(before.cells().len()))
}

pub fn optimize(c: &Cascade) -> (Cascade, RewriteReport) {
    optimize_with(c, OptimizeOptions::default())
}

/// Applies the rule list to a fixed point. Each iteration that changes the
/// cascade strictly reduces cell count or reaches a normal form of the
/// merge rule, so the driver terminates.
pub fn optimize_with(c: &Cascade, opts: OptimizeOptions) -> (Cascade, RewriteReport) {
    let mut report = RewriteReport {
        initial_cells: c.cells().len(),
        ..Default::default()
    };
    let mut current = c.clone();
    loop {
        report.iterations += 1;
        let before_pass = current.clone();
        let mut rules: Vec<(&'static str, fn(&Cascade) -> Cascade)> = vec![
            ("merge_adjacent_g", merge_adjacent_g),
            ("drop_identity_a", drop_identity_a),
        ];
        if !opts.preserve_permutation {
            rules.push(("drop_trailing", drop_trailing));
            if opts.boundary {
                rules.push(("retarget_output", retarget_output));
            }
        }
        if opts.boundary {
            rules.push(("absorb_leading", absorb_leading));
        }
        for (name, rule) in rules {
            let next = rule(&current);
            if next != current {
                report.applications.push(RuleApplication {
                    rule: name,
                    position: first_difference(&current, &next),
                    cells_before: current.cells().len(),
                    cells_after: next.cells().len(),
                });
                current = next;
            }
        }
        if current == before_pass {
            break;
        }
    }
    report.final_cells = current.cells().len();
    (current, report)
}
