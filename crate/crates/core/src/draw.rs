//! ASCII rendering of circuits: control wires on top, value rails below,
//! one column per gate. Presentation only, never parsed back.

use crate::lowering::{Circuit, Gate};

const SEG: &str = "---";

fn wire_rows(circ: &Circuit) -> Vec<String> {
    let mut labels: Vec<String> = (1..=circ.n()).map(|v| format!("x{v}")).collect();
    labels.extend(circ.init().iter().map(|v| v.to_string()));
    let width = labels.iter().map(|l| l.len()).max().unwrap_or(1);
    labels
        .iter()
        .map(|l| format!("{l:>width$} "))
        .collect()
}

/// Renders the circuit as one text block. Controls draw as `*`, swap ends as
/// `x`, inverters as `N`, with `|` connecting the wires a gate touches.
pub fn render_circuit(circ: &Circuit) -> String {
    let n = circ.n();
    let rows = n + circ.k();
    let mut lines = wire_rows(circ);
    for line in &mut lines {
        line.push_str(SEG);
    }
    for gate in circ.gates() {
        // marks[row] is the glyph this gate puts on that wire, if any
        let mut marks: Vec<Option<char>> = vec![None; rows];
        match *gate {
            Gate::Not { ctrl } => marks[ctrl] = Some('N'),
            Gate::Swap { r1, r2 } => {
                marks[n + r1] = Some('x');
                marks[n + r2] = Some('x');
            }
            Gate::CSwap { ctrl, r1, r2 } => {
                marks[ctrl] = Some('*');
                marks[n + r1] = Some('x');
                marks[n + r2] = Some('x');
            }
        }
        let touched: Vec<usize> = marks
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.map(|_| i))
            .collect();
        let (top, bottom) = (touched[0], *touched.last().expect("gate touches a wire"));
        for (row, line) in lines.iter_mut().enumerate() {
            let glyph = match marks[row] {
                Some(c) => c,
                None if row > top && row < bottom => '|',
                None => '-',
            };
            line.push('-');
            line.push(glyph);
            line.push('-');
        }
    }
    let mut out = String::new();
    for (row, line) in lines.iter().enumerate() {
        out.push_str(line);
        out.push_str(SEG);
        if row >= n && row - n == circ.output_rail() {
            out.push_str(" f(x)");
        }
        out.push('\n');
    }
    if !circ.ctrl_polarity_note().is_empty() {
        let wires: Vec<String> = circ
            .ctrl_polarity_note()
            .iter()
            .map(|w| format!("x{}", w + 1))
            .collect();
        out.push_str(&format!("note: control wires left inverted: {}\n", wires.join(", ")));
    }
    out
}
