//! The cascade IR: a word over shift cells `a^w` and controlled reflection
//! cells `g^S`, plus rail initialization and the designated output rail.
//!
//! A fresh canonical cascade loads `(k - i) mod k` on rail i and reads the
//! function value from rail 0: `a^f` routes the content of rail `(-f mod k)`
//! to rail 0, so rail 0 ends up carrying exactly `f(x)`.

use crate::dihedral::{compose, make_group, DihedralGroup, GroupElement};
use crate::spectral::{Spectrum, TruthVector};
use crate::{Error, Result};

/// One cascade cell. `G { controls: 0 }` is the unconditional constant `g`
/// (it only appears transiently, produced by boundary transforms); a nonzero
/// mask activates `g` when the XOR of the selected variables is 1, which is
/// the parity semantics of `g^{x_i + x_j + ...}` since `g^2 = e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    /// `a^exp`, exponent stored as a canonical residue `0..k-1`.
    A { exp: usize },
    /// `g` raised to the parity of the selected variables; bit `v-1` of the
    /// mask selects `x_v`.
    G { controls: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cascade {
    k: usize,
    n: usize,
    cells: Vec<Cell>,
    init: Vec<usize>,
    output_rail: usize,
}

/// Rail constants of a fresh canonical cascade: `(k - i) mod k`,
/// i.e. `(0, 2, 1)` for k = 3.
pub fn canonical_init(k: usize) -> Vec<usize> {
    (0..k).map(|i| (k - i) % k).collect()
}

impl Cascade {
    pub fn new(
        k: usize,
        n: usize,
        cells: Vec<Cell>,
        init: Vec<usize>,
        output_rail: usize,
    ) -> Result<Self> {
        if k < 3 || k % 2 == 0 {
            return Err(Error::InvalidRadix(k));
        }
        if n == 0 || n > 32 {
            return Err(Error::Size(format!("n = {n} out of range 1..=32")));
        }
        let mut seen = vec![false; k];
        for &v in &init {
            if v >= k || seen[v] {
                return Err(Error::Structure(format!(
                    "init {init:?} is not a permutation of 0..{k}"
                )));
            }
            seen[v] = true;
        }
        if init.len() != k {
            return Err(Error::Dimension(format!(
                "init has {} entries, expected {k}",
                init.len()
            )));
        }
        if output_rail >= k {
            return Err(Error::Structure(format!("output rail {output_rail} out of range")));
        }
        for cell in &cells {
            match cell {
                Cell::A { exp } if *exp >= k => {
                    return Err(Error::Structure(format!("a-exponent {exp} out of range 0..{k}")))
                }
                Cell::G { controls } if *controls >> n != 0 => {
                    return Err(Error::Structure(format!(
                        "g-controls {controls:#b} reference variables beyond x{n}"
                    )))
                }
                _ => {}
            }
        }
        Ok(Self { k, n, cells, init, output_rail })
    }

    pub fn fresh(k: usize, n: usize, cells: Vec<Cell>) -> Result<Self> {
        let init = canonical_init(k);
        Self::new(k, n, cells, init, 0)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn init(&self) -> &[usize] {
        &self.init
    }

    pub fn output_rail(&self) -> usize {
        self.output_rail
    }

    pub(crate) fn with_parts(
        &self,
        cells: Vec<Cell>,
        init: Vec<usize>,
        output_rail: usize,
    ) -> Self {
        Self {
            k: self.k,
            n: self.n,
            cells,
            init,
            output_rail,
        }
    }

    pub fn group(&self) -> DihedralGroup {
        make_group(self.k).expect("radix validated at construction")
    }
}

/// Whether a `G` cell fires for the given assignment (`x[v-1]` is `x_v`).
pub fn g_active(controls: u32, x: &[bool]) -> bool {
    if controls == 0 {
        return true; // unconditional constant g
    }
    let mut parity = false;
    for (v, &bit) in x.iter().enumerate() {
        if bit && controls & (1 << v) != 0 {
            parity = !parity;
        }
    }
    parity
}

/// The rail permutation a cell performs under the given assignment.
pub fn cell_element(cell: &Cell, group: &DihedralGroup, x: &[bool]) -> GroupElement {
    match cell {
        Cell::A { exp } => group.rotation_power(*exp as i64),
        Cell::G { controls } => {
            if g_active(*controls, x) {
                group.reflection().clone()
            } else {
                group.identity().clone()
            }
        }
    }
}

/// Canonical cascade from a spectrum, with the abutting g-pairs of the
/// recursive expansion already merged: `2^n` a-cells (exponents = spectrum
/// entries in order) alternating with `2^n` g-cells whose control sets follow
/// the ruler pattern `S_j = {x_n, ..., x_{n-r(j)+1}}`,
/// `r(j) = 1 + trailing_zeros(j)` capped at n.
pub fn build_canonical(w: &Spectrum) -> Cascade {
    let n = w.n();
    let mut cells = Vec::with_capacity(1 << (n + 1));
    for (j, &exp) in w.w().iter().enumerate() {
        cells.push(Cell::A { exp });
        let r = (1 + (j + 1).trailing_zeros() as usize).min(n);
        // the r lowest-indexed bits are x_n, x_{n-1}, ..., x_{n-r+1}
        let controls = ((1u32 << r) - 1) << (n - r);
        cells.push(Cell::G { controls });
    }
    Cascade::fresh(w.k(), n, cells).expect("spectrum shape is valid")
}

/// Pre-merge canonical cascade: the literal n-fold recursive expansion of
/// `F = F_a g^x F_b g^x`, with `3*2^n - 2` cells.
pub fn build_canonical_raw(w: &Spectrum) -> Cascade {
    fn expand(ws: &[usize], var: usize, cells: &mut Vec<Cell>) {
        if ws.len() == 1 {
            cells.push(Cell::A { exp: ws[0] });
            return;
        }
        let (lo, hi) = ws.split_at(ws.len() / 2);
        let controls = 1u32 << (var - 1);
        expand(lo, var + 1, cells);
        cells.push(Cell::G { controls });
        expand(hi, var + 1, cells);
        cells.push(Cell::G { controls });
    }
    let mut cells = Vec::new();
    expand(w.w(), 1, &mut cells);
    Cascade::fresh(w.k(), w.n(), cells).expect("spectrum shape is valid")
}

fn assignment_of_index(i: usize, n: usize) -> Vec<bool> {
    // x_1 is the most significant index bit
    (0..n).map(|v| (i >> (n - 1 - v)) & 1 == 1).collect()
}

/// Group-level evaluation: composes the cell permutations for the given
/// assignment, routes the rail constants through them, and reads the output
/// rail. An active g flips the sign of every a-exponent accumulated to its
/// left, which is exactly the `g a g = a^{-1}` conjugation identity.
pub fn evaluate_group(c: &Cascade, x: &[bool]) -> Result<usize> {
    if x.len() != c.n {
        return Err(Error::Arity { expected: c.n, got: x.len() });
    }
    let group = c.group();
    let mut word = group.identity().clone();
    for cell in &c.cells {
        word = compose(&word, &cell_element(cell, &group, x))?;
    }
    Ok(word.route(&c.init)[c.output_rail])
}

/// Exhaustive group-level evaluation in index-convention order.
pub fn truth_vector_of(c: &Cascade) -> TruthVector {
    let values = (0..1usize << c.n)
        .map(|i| evaluate_group(c, &assignment_of_index(i, c.n)).expect("arity matches"))
        .collect();
    TruthVector::new(c.k, c.n, values).expect("shape is valid")
}

/// The sign each a-cell contributes under an assignment:
/// `(-1)^{number of active g-cells to its right}`. Over all assignments the
/// sign matrix of a canonical cascade is exactly `W_n`.
pub fn sign_pattern(c: &Cascade, x: &[bool]) -> Vec<i64> {
    let mut active_after = 0u32;
    let mut signs_rev = Vec::new();
    for cell in c.cells.iter().rev() {
        match cell {
            Cell::G { controls } => {
                if g_active(*controls, x) {
                    active_after += 1;
                }
            }
            Cell::A { .. } => {
                signs_rev.push(if active_after % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    signs_rev.reverse();
    signs_rev
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellCounts {
    pub a_cells: usize,
    pub g_cells: usize,
    pub total: usize,
}

pub fn count_cells(c: &Cascade) -> CellCounts {
    let a_cells = c.cells.iter().filter(|c| matches!(c, Cell::A { .. })).count();
    let g_cells = c.cells.len() - a_cells;
    CellCounts { a_cells, g_cells, total: c.cells.len() }
}

/// Cell-count bound for an optimized cascade: `2^{n+1} - 1` (the merged
/// canonical form minus the always-removable trailing g).
pub fn upper_bound(n: usize, _k: usize) -> usize {
    (1 << (n + 1)) - 1
}
