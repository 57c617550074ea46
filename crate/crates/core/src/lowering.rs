//! Lowering cascades to NOT/SWAP/CSWAP circuits over n binary control wires
//! and k value rails, plus circuit-level peephole cleanups.
//!
//! Control wires and rails are disjoint wire classes: NOT acts only on
//! control wires, swaps act only on rails. Control wire `v` carries the
//! variable `x_{v+1}`. No ancilla wires are introduced anywhere; a
//! multi-variable g-cell lowers to one singly-controlled block per variable.

use crate::cascade::{Cascade, Cell};
use crate::dihedral::{make_group, GroupElement};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    /// Inverter on a control wire.
    Not { ctrl: usize },
    /// Unconditional exchange of two rail contents.
    Swap { r1: usize, r2: usize },
    /// Fredkin gate: exchanges two rail contents when the control wire
    /// currently carries 1.
    CSwap { ctrl: usize, r1: usize, r2: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    k: usize,
    n: usize,
    gates: Vec<Gate>,
    init: Vec<usize>,
    output_rail: usize,
    /// Control wires left inverted at circuit end by NOT gates that peephole
    /// elided instead of restoring. Informational; inputs are usually not
    /// read back.
    ctrl_polarity_note: Vec<usize>,
}

impl Circuit {
    pub fn new(
        k: usize,
        n: usize,
        gates: Vec<Gate>,
        init: Vec<usize>,
        output_rail: usize,
    ) -> Result<Self> {
        if k < 3 || k % 2 == 0 {
            return Err(Error::InvalidRadix(k));
        }
        if init.len() != k {
            return Err(Error::Dimension(format!(
                "init has {} entries, expected {k}",
                init.len()
            )));
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
        if output_rail >= k {
            return Err(Error::Structure(format!("output rail {output_rail} out of range")));
        }
        for gate in &gates {
            match *gate {
                Gate::Not { ctrl } if ctrl >= n => {
                    return Err(Error::Structure(format!("NOT control wire {ctrl} out of range")))
                }
                Gate::Swap { r1, r2 } | Gate::CSwap { r1, r2, .. } if r1 == r2 || r1 >= k || r2 >= k => {
                    return Err(Error::Structure(format!("swap rails ({r1},{r2}) invalid for k={k}")))
                }
                Gate::CSwap { ctrl, .. } if ctrl >= n => {
                    return Err(Error::Structure(format!("CSWAP control wire {ctrl} out of range")))
                }
                _ => {}
            }
        }
        Ok(Self { k, n, gates, init, output_rail, ctrl_polarity_note: Vec::new() })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn init(&self) -> &[usize] {
        &self.init
    }

    pub fn output_rail(&self) -> usize {
        self.output_rail
    }

    pub fn ctrl_polarity_note(&self) -> &[usize] {
        &self.ctrl_polarity_note
    }

    /// Gates that act on rails (everything except NOT).
    pub fn rail_gate_count(&self) -> usize {
        self.gates.iter().filter(|g| !matches!(g, Gate::Not { .. })).count()
    }
}

/// Transposition list realizing the content routing of a permutation:
/// each cycle `(c0 c1 ... c_{L-1})` becomes swaps
/// `(c0,c1), (c0,c2), ..., (c0,c_{L-1})`, cycles taken by ascending start.
fn transpositions(element: &GroupElement) -> Vec<(usize, usize)> {
    let k = element.k();
    let mut visited = vec![false; k];
    let mut out = Vec::new();
    for start in 0..k {
        if visited[start] {
            continue;
        }
        let mut cur = start;
        visited[cur] = true;
        let mut cycle = vec![cur];
        loop {
            cur = element.apply(cur);
            if cur == start {
                break;
            }
            visited[cur] = true;
            cycle.push(cur);
        }
        for &c in &cycle[1..] {
            out.push((start, c));
        }
    }
    out
}

/// Lowers `a^exp` to swaps; controlled when a control wire is given.
/// `exp = 0` yields the empty list.
pub fn lower_a(exp: usize, k: usize, ctrl: Option<usize>) -> Vec<Gate> {
    let group = make_group(k).expect("validated radix");
    let element = group.rotation_power(exp as i64);
    transpositions(&element)
        .into_iter()
        .map(|(r1, r2)| match ctrl {
            Some(ctrl) => Gate::CSwap { ctrl, r1, r2 },
            None => Gate::Swap { r1, r2 },
        })
        .collect()
}

/// The swap pairs of the reflection g: `(i, k-i)` for `1 <= i <= k/2`.
fn g_pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=k / 2).map(move |i| (i, k - i))
}

/// Lowers `g^S`: one singly-controlled swap block per variable in the set,
/// ascending; an empty set is the unconditional g.
pub fn lower_g(controls: u32, k: usize, n: usize) -> Vec<Gate> {
    if controls == 0 {
        return g_pairs(k).map(|(r1, r2)| Gate::Swap { r1, r2 }).collect();
    }
    let mut out = Vec::new();
    for v in 0..n {
        if controls & (1 << v) != 0 {
            out.extend(g_pairs(k).map(|(r1, r2)| Gate::CSwap { ctrl: v, r1, r2 }));
        }
    }
    out
}

/// Concatenates per-cell lowerings left-to-right.
pub fn lower(c: &Cascade) -> Circuit {
    let mut gates = Vec::new();
    for cell in c.cells() {
        match cell {
            Cell::A { exp } => gates.extend(lower_a(*exp, c.k(), None)),
            Cell::G { controls } => gates.extend(lower_g(*controls, c.k(), c.n())),
        }
    }
    Circuit::new(c.k(), c.n(), gates, c.init().to_vec(), c.output_rail())
        .expect("cascade invariants carry over")
}

fn is_g_block(gates: &[Gate], k: usize) -> Option<usize> {
    // a full controlled reflection block: CSWAPs (i, k-i) on one wire
    let pairs: Vec<(usize, usize)> = g_pairs(k).collect();
    if gates.len() < pairs.len() {
        return None;
    }
    let ctrl = match gates[0] {
        Gate::CSwap { ctrl, .. } => ctrl,
        _ => return None,
    };
    for (gate, &(p1, p2)) in gates.iter().zip(&pairs) {
        match *gate {
            Gate::CSwap { ctrl: c, r1, r2 } if c == ctrl && (r1, r2) == (p1, p2) => {}
            _ => return None,
        }
    }
    Some(ctrl)
}

fn swap_run_permutation(gates: &[Gate], k: usize) -> Option<(usize, Vec<usize>)> {
    // leading run of unconditional swaps, returned as a content permutation
    let mut image: Vec<usize> = (0..k).collect();
    let mut len = 0;
    for gate in gates {
        match *gate {
            Gate::Swap { r1, r2 } => {
                // content at r1 goes to r2 and vice versa: postcompose the swap
                for slot in image.iter_mut() {
                    if *slot == r1 {
                        *slot = r2;
                    } else if *slot == r2 {
                        *slot = r1;
                    }
                }
                len += 1;
            }
            _ => break,
        }
    }
    if len == 0 {
        None
    } else {
        Some((len, image))
    }
}

/// The polarity form of a conjugation `g^x a^w g^x`: NOT(x), the controlled
/// block of `a^w` minus its last transposition, that transposition as an
/// unconditional swap, NOT(x), the remaining transpositions reversed. The
/// two paths realize `a^w` when x = 0 and `a^{-w}` when x = 1.
fn fused_conjugation(ctrl: usize, shifts: &[(usize, usize)]) -> Vec<Gate> {
    let (last, head) = shifts.split_last().expect("nonempty shift");
    let mut out = vec![Gate::Not { ctrl }];
    out.extend(head.iter().map(|&(r1, r2)| Gate::CSwap { ctrl, r1, r2 }));
    out.push(Gate::Swap { r1: last.0, r2: last.1 });
    out.push(Gate::Not { ctrl });
    out.extend(head.iter().rev().map(|&(r1, r2)| Gate::CSwap { ctrl, r1, r2 }));
    out
}

/// Rewrites lowered `g^x a^w g^x` windows into the polarity form when that
/// strictly reduces gate count. Two source shapes are recognized: the direct
/// lowering (g-block, swaps, g-block) and the already-inverted form
/// (NOT, controlled shifts, NOT, reversed controlled shifts).
pub fn conjugation_fuse(circ: &Circuit) -> Circuit {
    let mut gates = circ.gates.clone();
    let k = circ.k;
    let g_len = k / 2;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < gates.len() {
            if let Some((window_len, replacement)) = match_conjugation(&gates[i..], k, g_len) {
                if replacement.len() < window_len {
                    gates.splice(i..i + window_len, replacement);
                    changed = true;
                }
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    Circuit { gates, ..circ.clone() }
}

fn match_conjugation(window: &[Gate], k: usize, g_len: usize) -> Option<(usize, Vec<Gate>)> {
    // direct shape: g-block(x), unconditional a^w swaps, g-block(x)
    if let Some(ctrl) = is_g_block(window, k) {
        let rest = &window[g_len..];
        if let Some((swap_len, image)) = swap_run_permutation(rest, k) {
            let element = GroupElement::new(image).ok()?;
            let group = make_group(k).ok()?;
            let is_rotation = (0..k as i64).any(|m| group.rotation_power(m) == element);
            if is_rotation && is_g_block(&rest[swap_len..], k) == Some(ctrl) {
                let shifts = transpositions(&element);
                if !shifts.is_empty() {
                    let total = 2 * g_len + swap_len;
                    return Some((total, fused_conjugation(ctrl, &shifts)));
                }
            }
        }
    }
    // inverted shape: NOT(x), CSWAP(x) run, NOT(x), reversed CSWAP(x) run
    if let Gate::Not { ctrl } = window.first().copied()? {
        let run_of = |gates: &[Gate]| -> Vec<(usize, usize)> {
            gates
                .iter()
                .take_while(|g| matches!(g, Gate::CSwap { ctrl: c, .. } if *c == ctrl))
                .map(|g| match *g {
                    Gate::CSwap { r1, r2, .. } => (r1, r2),
                    _ => unreachable!(),
                })
                .collect()
        };
        let first_run = run_of(&window[1..]);
        let l = first_run.len();
        if l >= 2 && window.get(1 + l) == Some(&Gate::Not { ctrl }) {
            let second_run = run_of(&window[2 + l..]);
            let reversed: Vec<_> = first_run.iter().rev().copied().collect();
            if second_run == reversed {
                let total = 2 + 2 * l;
                return Some((total, fused_conjugation(ctrl, &first_run)));
            }
        }
    }
    None
}

fn gate_uses_ctrl(gate: &Gate, wire: usize) -> bool {
    matches!(gate, Gate::Not { ctrl } | Gate::CSwap { ctrl, .. } if *ctrl == wire)
}

/// Fixpoint peephole pass:
/// 1. adjacent identical SWAP/CSWAP pairs cancel;
/// 2. `CSWAP(c;a,b) NOT(c) CSWAP(c;a,b)` becomes `SWAP(a,b) NOT(c)` (exactly
///    one of the two controlled swaps fires for either control value);
/// 3. NOT pairs on one wire with nothing controlled by it between cancel;
/// 4. leading unconditional swaps are folded into the rail constants;
/// 5. NOTs with no later gate on their wire are elided into the
///    polarity note instead of being restored.
pub fn peephole(circ: &Circuit) -> Circuit {
    let mut gates = circ.gates.clone();
    let mut init = circ.init.clone();
    let mut note_flips = vec![0usize; circ.n];
    loop {
        let mut changed = false;

        // (1) adjacent identical swap pairs
        let mut i = 0;
        while i + 1 < gates.len() {
            let same = match (gates[i], gates[i + 1]) {
                (Gate::Swap { r1, r2 }, Gate::Swap { r1: s1, r2: s2 }) => {
                    (r1, r2) == (s1, s2) || (r1, r2) == (s2, s1)
                }
                (Gate::CSwap { ctrl, r1, r2 }, Gate::CSwap { ctrl: c2, r1: s1, r2: s2 }) => {
                    ctrl == c2 && ((r1, r2) == (s1, s2) || (r1, r2) == (s2, s1))
                }
                _ => false,
            };
            if same {
                gates.drain(i..i + 2);
                changed = true;
            } else {
                i += 1;
            }
        }

        // (2) CSWAP / NOT / CSWAP sandwich
        let mut i = 0;
        while i + 2 < gates.len() {
            if let (
                Gate::CSwap { ctrl, r1, r2 },
                Gate::Not { ctrl: nc },
                Gate::CSwap { ctrl: c2, r1: s1, r2: s2 },
            ) = (gates[i], gates[i + 1], gates[i + 2])
            {
                let same_pair = (r1, r2) == (s1, s2) || (r1, r2) == (s2, s1);
                if ctrl == nc && ctrl == c2 && same_pair {
                    gates.splice(i..i + 3, [Gate::Swap { r1, r2 }, Gate::Not { ctrl }]);
                    changed = true;
                    continue;
                }
            }
            i += 1;
        }

        // (3) NOT pairs with nothing controlled between
        'outer: for i in 0..gates.len() {
            if let Gate::Not { ctrl } = gates[i] {
                for j in i + 1..gates.len() {
                    if gate_uses_ctrl(&gates[j], ctrl) {
                        if matches!(gates[j], Gate::Not { .. }) {
                            gates.remove(j);
                            gates.remove(i);
                            changed = true;
                            break 'outer;
                        }
                        break;
                    }
                }
            }
        }

        // (4) leading unconditional swaps fold into init
        while let Some(Gate::Swap { r1, r2 }) = gates.first().copied() {
            init.swap(r1, r2);
            gates.remove(0);
            changed = true;
        }

        // (5) dead NOTs at the tail go to the polarity note
        let mut i = 0;
        while i < gates.len() {
            if let Gate::Not { ctrl } = gates[i] {
                let used_later = gates[i + 1..].iter().any(|g| gate_uses_ctrl(g, ctrl));
                if !used_later {
                    note_flips[ctrl] += 1;
                    gates.remove(i);
                    changed = true;
                    continue;
                }
            }
            i += 1;
        }

        if !changed {
            break;
        }
    }
    let mut note: Vec<usize> = circ.ctrl_polarity_note.clone();
    for (wire, flips) in note_flips.iter().enumerate() {
        if flips % 2 == 1 && !note.contains(&wire) {
            note.push(wire);
        }
    }
    Circuit {
        gates,
        init,
        ctrl_polarity_note: note,
        ..circ.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::{build_canonical, Cascade, Cell};
    use crate::rewrite::optimize;
    use crate::simulate::{output_function, run_circuit};
    use crate::spectral::{spectrum, TruthVector};

    #[test]
    fn lower_a_k3() {
        let gates = lower_a(1, 3, None);
        assert_eq!(gates, vec![Gate::Swap { r1: 0, r2: 1 }, Gate::Swap { r1: 0, r2: 2 }]);
        assert!(lower_a(0, 5, None).is_empty());
    }

    #[test]
    fn lower_a_k5_exp2() {
        let gates = lower_a(2, 5, None);
        assert_eq!(gates.len(), 4);
        // apply the swaps to (0,1,2,3,4) and compare with the rotation
        let mut contents: Vec<usize> = (0..5).collect();
        for gate in &gates {
            if let Gate::Swap { r1, r2 } = gate {
                contents.swap(*r1, *r2);
            }
        }
        let group = make_group(5).unwrap();
        let expected = group.rotation_power(2).route(&(0..5).collect::<Vec<_>>());
        assert_eq!(contents, expected);
    }

    #[test]
    fn lower_g_shapes() {
        assert_eq!(
            lower_g(0b1, 3, 1),
            vec![Gate::CSwap { ctrl: 0, r1: 1, r2: 2 }]
        );
        assert_eq!(
            lower_g(0b11, 3, 2),
            vec![
                Gate::CSwap { ctrl: 0, r1: 1, r2: 2 },
                Gate::CSwap { ctrl: 1, r1: 1, r2: 2 },
            ]
        );
        assert_eq!(
            lower_g(0b1, 5, 1),
            vec![
                Gate::CSwap { ctrl: 0, r1: 1, r2: 4 },
                Gate::CSwap { ctrl: 0, r1: 2, r2: 3 },
            ]
        );
        assert_eq!(
            lower_g(0, 5, 1),
            vec![Gate::Swap { r1: 1, r2: 4 }, Gate::Swap { r1: 2, r2: 3 }]
        );
    }

    #[test]
    fn lower_successor_rail_table() {
        let f = TruthVector::new(3, 1, vec![1, 2]).unwrap();
        let (opt, _) = optimize(&build_canonical(&spectrum(&f).unwrap()));
        let circ = lower(&opt);
        assert_eq!(run_circuit(&circ, &[false]).unwrap(), vec![1, 0, 2]);
        assert_eq!(run_circuit(&circ, &[true]).unwrap(), vec![2, 0, 1]);
    }

    #[test]
    fn lower_empty_cascade() {
        let c = Cascade::fresh(3, 2, vec![]).unwrap();
        let circ = lower(&c);
        assert!(circ.gates().is_empty());
        assert_eq!(output_function(&circ).unwrap().values(), &[0, 0, 0, 0]);
    }

    #[test]
    fn lower_three_var_adder() {
        let f = TruthVector::new(3, 3, vec![0, 1, 1, 2, 1, 2, 2, 0]).unwrap();
        let (opt, _) = optimize(&build_canonical(&spectrum(&f).unwrap()));
        let circ = lower(&opt);
        assert_eq!(output_function(&circ).unwrap(), f);
    }

    fn polarity_block_circuit() -> Circuit {
        // NOT(x), x-controlled a^1 block, NOT(x), x-controlled a^{-1} block
        Circuit::new(
            3,
            1,
            vec![
                Gate::Not { ctrl: 0 },
                Gate::CSwap { ctrl: 0, r1: 0, r2: 1 },
                Gate::CSwap { ctrl: 0, r1: 0, r2: 2 },
                Gate::Not { ctrl: 0 },
                Gate::CSwap { ctrl: 0, r1: 0, r2: 2 },
                Gate::CSwap { ctrl: 0, r1: 0, r2: 1 },
            ],
            vec![0, 2, 1],
            0,
        )
        .unwrap()
    }

    #[test]
    fn fuse_polarity_block_drops_one_cswap() {
        let circ = polarity_block_circuit();
        assert_eq!(run_circuit(&circ, &[false]).unwrap(), vec![1, 0, 2]);
        assert_eq!(run_circuit(&circ, &[true]).unwrap(), vec![2, 1, 0]);

        let fused = conjugation_fuse(&circ);
        assert_eq!(
            fused.gates(),
            &[
                Gate::Not { ctrl: 0 },
                Gate::CSwap { ctrl: 0, r1: 0, r2: 1 },
                Gate::Swap { r1: 0, r2: 2 },
                Gate::Not { ctrl: 0 },
                Gate::CSwap { ctrl: 0, r1: 0, r2: 1 },
            ]
        );
        assert_eq!(run_circuit(&fused, &[false]).unwrap(), vec![1, 0, 2]);
        assert_eq!(run_circuit(&fused, &[true]).unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn fuse_direct_lowering_is_noop_for_prime_k() {
        // direct lowering of g^x a^1 g^x is already minimal (4 gates); the
        // polarity form would be 5, so the fuse must leave it alone
        let c = Cascade::fresh(
            3,
            1,
            vec![Cell::G { controls: 1 }, Cell::A { exp: 1 }, Cell::G { controls: 1 }],
        )
        .unwrap();
        let circ = lower(&c);
        assert_eq!(circ.gates().len(), 4);
        let fused = conjugation_fuse(&circ);
        assert_eq!(fused, circ);
        assert_eq!(run_circuit(&fused, &[false]).unwrap(), vec![1, 0, 2]);
        assert_eq!(run_circuit(&fused, &[true]).unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn fuse_direct_lowering_reduces_for_composite_shift() {
        // k = 9, a^3 splits into three 3-cycles: direct g a^3 g costs
        // 8 + 6 = 14 gates, the polarity form 2*6 + 1 = 13
        let c = Cascade::fresh(
            9,
            1,
            vec![Cell::G { controls: 1 }, Cell::A { exp: 3 }, Cell::G { controls: 1 }],
        )
        .unwrap();
        let circ = lower(&c);
        assert_eq!(circ.gates().len(), 14);
        let fused = conjugation_fuse(&circ);
        assert_eq!(fused.gates().len(), 13);
        for x in [false, true] {
            assert_eq!(run_circuit(&fused, &[x]).unwrap(), run_circuit(&circ, &[x]).unwrap());
        }
    }

    #[test]
    fn fuse_zero_shift_noop() {
        let c = Cascade::fresh(
            3,
            1,
            vec![Cell::G { controls: 1 }, Cell::A { exp: 0 }, Cell::G { controls: 1 }],
        )
        .unwrap();
        let circ = lower(&c);
        let fused = conjugation_fuse(&circ);
        // the two g blocks abut once a^0 lowers to nothing; peephole cancels them
        let cleaned = peephole(&fused);
        assert!(cleaned.gates().is_empty());
    }

    fn sandwich_circuit() -> Circuit {
        Circuit::new(
            3,
            1,
            vec![
                Gate::CSwap { ctrl: 0, r1: 0, r2: 1 },
                Gate::Not { ctrl: 0 },
                Gate::CSwap { ctrl: 0, r1: 0, r2: 1 },
                Gate::CSwap { ctrl: 0, r1: 0, r2: 2 },
            ],
            vec![0, 2, 1],
            0,
        )
        .unwrap()
    }

    #[test]
    fn peephole_sandwich_reduction() {
        let circ = sandwich_circuit();
        assert_eq!(run_circuit(&circ, &[false]).unwrap(), vec![1, 0, 2]);
        assert_eq!(run_circuit(&circ, &[true]).unwrap(), vec![2, 0, 1]);

        let reduced = peephole(&circ);
        assert_eq!(reduced.init(), &[2, 0, 1]);
        assert_eq!(
            reduced.gates(),
            &[Gate::Not { ctrl: 0 }, Gate::CSwap { ctrl: 0, r1: 0, r2: 2 }]
        );
        assert_eq!(reduced.rail_gate_count(), 1);
        assert_eq!(output_function(&reduced).unwrap().values(), &[1, 2]);
    }

    #[test]
    fn peephole_cancels_swap_pairs_and_dead_nots() {
        let circ = Circuit::new(
            3,
            1,
            vec![
                Gate::CSwap { ctrl: 0, r1: 1, r2: 2 },
                Gate::Swap { r1: 0, r2: 1 },
                Gate::Swap { r1: 1, r2: 0 },
                Gate::Not { ctrl: 0 },
            ],
            vec![0, 2, 1],
            0,
        )
        .unwrap();
        let reduced = peephole(&circ);
        assert_eq!(reduced.gates(), &[Gate::CSwap { ctrl: 0, r1: 1, r2: 2 }]);
        assert_eq!(reduced.ctrl_polarity_note(), &[0]);
    }

    #[test]
    fn peephole_not_pair_cancels_across_unrelated_gate() {
        let circ = Circuit::new(
            3,
            2,
            vec![
                Gate::Not { ctrl: 0 },
                Gate::CSwap { ctrl: 1, r1: 1, r2: 2 },
                Gate::Not { ctrl: 0 },
                Gate::CSwap { ctrl: 0, r1: 1, r2: 2 },
            ],
            vec![0, 2, 1],
            0,
        )
        .unwrap();
        let reduced = peephole(&circ);
        assert_eq!(
            reduced.gates(),
            &[
                Gate::CSwap { ctrl: 1, r1: 1, r2: 2 },
                Gate::CSwap { ctrl: 0, r1: 1, r2: 2 },
            ]
        );
    }

    #[test]
    fn peephole_and_fuse_never_increase_gate_count() {
        let f = TruthVector::new(3, 2, vec![2, 0, 1, 1]).unwrap();
        let circ = lower(&build_canonical(&spectrum(&f).unwrap()));
        let before = circ.gates().len();
        let fused = conjugation_fuse(&circ);
        assert!(fused.gates().len() <= before);
        let cleaned = peephole(&fused);
        assert!(cleaned.gates().len() <= fused.gates().len());
        assert_eq!(output_function(&cleaned).unwrap(), f);
    }
}
