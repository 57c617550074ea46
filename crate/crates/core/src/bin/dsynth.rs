//! Command-line driver for the synthesis pipeline: parse a function spec,
//! synthesize and optimize a cascade, lower it to gates, verify by
//! exhaustive simulation, and emit circuit documents and diagrams.
//!
//! Exit codes: 0 success, 1 input/format error, 2 unsupported radix,
//! 3 verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dsynth::cascade::{
    build_canonical, build_canonical_raw, count_cells, truth_vector_of, upper_bound,
};
use dsynth::dihedral::{cayley_table, compose, make_group, power};
use dsynth::draw::render_circuit;
use dsynth::format::{
    load_circuit_document, load_function_spec, render_word, to_json, CircuitDocument, FieldPolicy,
    FunctionSpec, Provenance,
};
use dsynth::lowering::lower;
use dsynth::rewrite::{optimize_with, OptimizeOptions, RewriteReport};
use dsynth::simulate::{verify_cascade, verify_circuit};
use dsynth::spectral::{spectrum, TruthVector};
use dsynth::Error;

const EXIT_INPUT: u8 = 1;
const EXIT_RADIX: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "dsynth", version, about = "Reversible cascade synthesis over dihedral groups")]
struct Cli {
    /// Reject unknown fields in input files instead of warning.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize, optimize, lower, and verify a function spec.
    Synth {
        spec: PathBuf,
        /// Output directory for the cascade word and circuit document.
        #[arg(short, long, default_value = ".")]
        out: PathBuf,
        /// Skip the rewrite passes; emit the canonical cascade as is.
        #[arg(long)]
        no_opt: bool,
        /// Keep the full rail permutation (disables trailing-cell removal).
        #[arg(long)]
        preserve_permutation: bool,
        /// Print a-exponents as canonical residues instead of signed form.
        #[arg(long, conflicts_with = "signed")]
        unsigned: bool,
        /// Signed exponent display (the default).
        #[arg(long)]
        signed: bool,
    },
    /// Check a circuit document against a function spec.
    Verify { circuit: PathBuf, spec: PathBuf },
    /// Print cell-count metrics and the gate bound; optionally sweep every
    /// function at the given size.
    Bound {
        n: usize,
        k: usize,
        #[arg(long)]
        sweep: bool,
    },
    /// Print the Cayley table of D_k.
    Cayley {
        k: usize,
        /// Also run the group-axiom checks.
        #[arg(long)]
        check: bool,
    },
    /// Render a circuit document as an ASCII diagram.
    Draw { circuit: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let policy = if cli.strict { FieldPolicy::Strict } else { FieldPolicy::Lenient };
    let result = match cli.command {
        Command::Synth { spec, out, no_opt, preserve_permutation, unsigned, signed: _ } => {
            cmd_synth(&spec, &out, no_opt, preserve_permutation, !unsigned, policy)
        }
        Command::Verify { circuit, spec } => cmd_verify(&circuit, &spec, policy),
        Command::Bound { n, k, sweep } => cmd_bound(n, k, sweep),
        Command::Cayley { k, check } => cmd_cayley(k, check),
        Command::Draw { circuit } => cmd_draw(&circuit, policy),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InvalidRadix(_) => EXIT_RADIX,
                _ => EXIT_INPUT,
            })
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))
}

fn load_spec(path: &Path, policy: FieldPolicy) -> Result<(FunctionSpec, TruthVector), Error> {
    let (spec, warnings) = load_function_spec(&read_file(path)?, policy)?;
    for w in warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    let f = spec.to_truth_vector()?;
    Ok((spec, f))
}

fn warn_composite(k: usize) {
    if let Ok(group) = make_group(k) {
        if group.radix_is_composite() {
            eprintln!(
                "warning: radix {k} is odd but composite; the construction still applies, \
                 though the method is usually stated for odd primes"
            );
        }
    }
}

fn pass_log(report: &RewriteReport) -> Vec<String> {
    let mut log = vec![format!(
        "optimize: {} -> {} cells in {} iterations",
        report.initial_cells, report.final_cells, report.iterations
    )];
    log.extend(report.applications.iter().map(|a| {
        format!(
            "{} @ cell {}: {} -> {} cells",
            a.rule, a.position, a.cells_before, a.cells_after
        )
    }));
    log
}

fn cmd_synth(
    spec_path: &Path,
    out_dir: &Path,
    no_opt: bool,
    preserve_permutation: bool,
    signed: bool,
    policy: FieldPolicy,
) -> Result<u8, Error> {
    let (spec, f) = load_spec(spec_path, policy)?;
    warn_composite(f.k());
    let w = spectrum(&f)?;
    let canonical = build_canonical(&w);
    let (cascade, report) = if no_opt {
        (canonical.clone(), RewriteReport::default())
    } else {
        optimize_with(&canonical, OptimizeOptions { preserve_permutation, boundary: false })
    };
    let circuit = lower(&cascade);

    // verification is mandatory; nothing is written on mismatch
    let cascade_check = verify_cascade(&cascade, &f)?;
    let circuit_check = verify_circuit(&circuit, &f)?;
    if !cascade_check.equal || !circuit_check.equal {
        let (input, expected, got) = cascade_check
            .first_mismatch
            .or(circuit_check.first_mismatch)
            .expect("unequal report carries a mismatch");
        eprintln!(
            "verification failed: input {input} expected {expected}, got {got}; refusing to write"
        );
        return Ok(EXIT_VERIFY);
    }

    let name = spec
        .name
        .clone()
        .or_else(|| spec_path.file_stem().map(|s| s.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "function".to_string());
    let word = render_word(&cascade, signed);
    let counts = count_cells(&cascade);
    let raw_count = count_cells(&build_canonical_raw(&w)).total;

    std::fs::create_dir_all(out_dir)
        .map_err(|e| Error::Format(format!("cannot create {}: {e}", out_dir.display())))?;
    let word_path = out_dir.join(format!("{name}.cascade.txt"));
    std::fs::write(&word_path, format!("{word}\n"))
        .map_err(|e| Error::Format(format!("cannot write {}: {e}", word_path.display())))?;
    let doc = CircuitDocument::from_circuit(
        &circuit,
        Provenance {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            source_spec: spec_path.display().to_string(),
            pass_log: pass_log(&report),
        },
    );
    let circ_path = out_dir.join(format!("{name}.circuit.json"));
    std::fs::write(&circ_path, to_json(&doc))
        .map_err(|e| Error::Format(format!("cannot write {}: {e}", circ_path.display())))?;

    println!("word: {word}");
    println!("output rail: {}", cascade.output_rail());
    println!(
        "cells: canonical pre-merge {raw_count}, merged {}, final {} (a: {}, g: {}), bound {}",
        2 * f.values().len(),
        counts.total,
        counts.a_cells,
        counts.g_cells,
        upper_bound(f.n(), f.k())
    );
    println!("gates: {}", circuit.gates().len());
    println!("verified: {} inputs", f.values().len());
    println!("wrote {} and {}", word_path.display(), circ_path.display());
    Ok(0)
}

fn cmd_verify(circuit_path: &Path, spec_path: &Path, policy: FieldPolicy) -> Result<u8, Error> {
    let (doc, warnings) = load_circuit_document(&read_file(circuit_path)?, policy)?;
    for w in warnings {
        eprintln!("warning: {}: {w}", circuit_path.display());
    }
    let circuit = doc.to_circuit()?;
    let (_, f) = load_spec(spec_path, policy)?;
    let report = verify_circuit(&circuit, &f)?;
    if report.equal {
        println!("equal: circuit matches the spec on all {} inputs", f.values().len());
        Ok(0)
    } else {
        let (input, expected, got) = report.first_mismatch.expect("mismatch present");
        println!("mismatch at input {input}: expected {expected}, got {got}");
        Ok(EXIT_VERIFY)
    }
}

fn cmd_bound(n: usize, k: usize, sweep: bool) -> Result<u8, Error> {
    if k % 2 == 0 || k < 3 {
        return Err(Error::InvalidRadix(k));
    }
    if n == 0 || n > 20 {
        return Err(Error::Size(format!("n = {n} out of range 1..=20")));
    }
    let cells = 1usize << n;
    println!("canonical pre-merge cells: {}", 3 * cells - 2);
    println!("merged canonical cells:    {}", 2 * cells);
    println!("optimized cell bound:      {}", upper_bound(n, k));
    if !sweep {
        return Ok(0);
    }
    let feasible = (n <= 2 && k <= 5) || (n == 3 && k == 3);
    if !feasible {
        eprintln!(
            "error: sweeping all {k}^{cells} functions at n={n}, k={k} is not feasible; \
             try (n<=2, k<=5) or (n=3, k=3), or sample functions yourself"
        );
        return Ok(EXIT_INPUT);
    }
    let total = k.pow(cells as u32);
    let (mut max_cells, mut max_gates) = (0usize, 0usize);
    let (mut sum_cells, mut sum_gates) = (0u64, 0u64);
    for code in 0..total {
        let mut c = code;
        let values: Vec<usize> = (0..cells)
            .map(|_| {
                let v = c % k;
                c /= k;
                v
            })
            .collect();
        let f = TruthVector::new(k, n, values)?;
        let (opt, _) = dsynth::rewrite::optimize(&build_canonical(&spectrum(&f)?));
        let circuit = lower(&opt);
        if truth_vector_of(&opt) != f || !verify_circuit(&circuit, &f)?.equal {
            eprintln!("verification failed for function {code}");
            return Ok(EXIT_VERIFY);
        }
        let cell_count = opt.cells().len();
        max_cells = max_cells.max(cell_count);
        sum_cells += cell_count as u64;
        max_gates = max_gates.max(circuit.gates().len());
        sum_gates += circuit.gates().len() as u64;
    }
    println!("swept {total} functions: all verified");
    println!(
        "optimized cells: max {max_cells}, mean {:.2}",
        sum_cells as f64 / total as f64
    );
    println!(
        "lowered gates:   max {max_gates}, mean {:.2}",
        sum_gates as f64 / total as f64
    );
    if max_cells > upper_bound(n, k) {
        eprintln!("error: max optimized cell count exceeds the bound");
        return Ok(EXIT_VERIFY);
    }
    Ok(0)
}

fn cmd_cayley(k: usize, check: bool) -> Result<u8, Error> {
    let group = make_group(k)?;
    warn_composite(k);
    let table = cayley_table(&group);
    let labels: Vec<String> = (0..2 * k).map(|i| group.element_label(i)).collect();
    let width = labels.iter().map(|l| l.len()).max().unwrap_or(1) + 1;
    print!("{:width$}", "");
    for label in &labels {
        print!("{label:>width$}");
    }
    println!();
    for (i, row) in table.iter().enumerate() {
        print!("{:>width$}", labels[i]);
        for &entry in row {
            print!("{:>width$}", labels[entry]);
        }
        println!();
    }
    if check {
        let (a, g) = (group.rotation(), group.reflection());
        assert!(power(a, k as i64).is_identity(), "a^k = e");
        assert!(power(g, 2).is_identity(), "g^2 = e");
        for m in 0..k as i64 {
            let am = group.rotation_power(m);
            let gag = compose(g, &compose(&am, g)?)?;
            assert_eq!(gag, group.rotation_power(-m), "g a^m g = a^-m");
        }
        let sorted: Vec<usize> = (0..2 * k).collect();
        for row in &table {
            let mut r = row.clone();
            r.sort_unstable();
            assert_eq!(r, sorted, "rows are permutations");
        }
        println!("axioms: a^{k} = e, g^2 = e, g a^m g = a^-m, Latin square -- all pass");
    }
    Ok(0)
}

fn cmd_draw(circuit_path: &Path, policy: FieldPolicy) -> Result<u8, Error> {
    let (doc, warnings) = load_circuit_document(&read_file(circuit_path)?, policy)?;
    for w in warnings {
        eprintln!("warning: {}: {w}", circuit_path.display());
    }
    let circuit = doc.to_circuit()?;
    print!("{}", render_circuit(&circuit));
    Ok(0)
}
