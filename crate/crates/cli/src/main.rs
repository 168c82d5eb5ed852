//! Command-line front end: compile logical gates to schedule files,
//! simulate schedules on input states, verify schedules against
//! targets, and check layout legality.
//!
//! Exit codes: 0 success/pass, 1 verification or legality failure,
//! 2 usage or input error.

mod complexlit;
mod schedule_file;
mod targets;

use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use complexlit::parse_matrix;
use schedule_file::{read_schedule, write_schedule};
use xyseq_core::{
    compile_cnot, compile_su2, compile_su3, controlled_phase_flip, count_ancilla_relocations,
    encoded_x, encoded_z, equivalent_up_to_phase, linear_layout, oracle_expm, qutrit_entangler,
    qutrit_su2_embedded_target, qutrit_su2_on_pair, qutrit_z, restrict_to_logical, shift_excitation,
    sqrt_minus_zz, triangular_layout, two_plane_layout, validate_schedule, xy_generator_matrix,
    AncillaMode, Block, Encoding, EntanglerVariant, Error as CoreError, LayoutGraph, LevelPair,
    Schedule, SqrtZzVariant, StateVector, Unitary,
};

#[derive(Parser)]
#[command(
    name = "xyseq",
    about = "Compile, simulate, and verify XY-exchange pulse schedules",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a logical gate to a pulse schedule file
    Compile {
        #[command(subcommand)]
        target: CompileTarget,
    },
    /// Apply a schedule to an input state and list the amplitudes
    Simulate(SimulateArgs),
    /// Verify a schedule's logical action against a target gate
    Verify(VerifyArgs),
    /// Check every pulse of a schedule against a layout's edges
    LayoutCheck(LayoutCheckArgs),
}

#[derive(Args)]
struct CommonCompile {
    /// Output path for the schedule file
    #[arg(short, long)]
    output: PathBuf,
    /// Interpret angle arguments as degrees
    #[arg(long)]
    degrees: bool,
}

#[derive(Subcommand)]
enum CompileTarget {
    /// Arbitrary 2x2 unitary on one encoded qubit (3 physical qubits)
    Su2 {
        /// Row-major "re+imi" entries m00,m01,m10,m11 (or @file)
        #[arg(long, conflicts_with = "identity")]
        matrix: Option<String>,
        /// Compile the identity (an empty schedule)
        #[arg(long)]
        identity: bool,
        #[command(flatten)]
        common: CommonCompile,
    },
    /// Logical X rotation e^{i phi X}: a single pulse
    X {
        #[arg(long, allow_negative_numbers = true)]
        phi: f64,
        #[command(flatten)]
        common: CommonCompile,
    },
    /// Logical phase gate diag(e^{+i phi/2}, e^{-i phi/2}): five pulses
    Z {
        #[arg(long, allow_negative_numbers = true)]
        phi: f64,
        #[command(flatten)]
        common: CommonCompile,
    },
    /// Entangling square root of -Z(x)Z on two code pairs (4 qubits, 5 pulses)
    SqrtZz {
        /// Which code qubit of the second pair carries the sequence
        #[arg(long, value_enum, default_value_t = ZzRouteArg::First)]
        variant: ZzRouteArg,
        #[command(flatten)]
        common: CommonCompile,
    },
    /// Controlled phase flip diag(1,1,1,-1) on two blocks (6 qubits)
    Cz {
        #[command(flatten)]
        common: CommonCompile,
    },
    /// Controlled-NOT on two blocks (6 qubits)
    Cnot {
        #[command(flatten)]
        common: CommonCompile,
    },
    /// 2x2 unitary on a pair of qutrit levels (at most 12 pulses)
    QutritSu2 {
        #[arg(long, value_enum)]
        pair: PairArg,
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        common: CommonCompile,
    },
    /// Arbitrary 3x3 unitary on one qutrit
    QutritSu3 {
        /// Row-major 9 entries (or @file)
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        common: CommonCompile,
    },
    /// Qutrit phase gate (10 pulses)
    QutritZ {
        #[arg(long, allow_negative_numbers = true)]
        phi: f64,
        #[command(flatten)]
        common: CommonCompile,
    },
    /// Two-qutrit entangler (8 or 10 pulses)
    QutritEntangler {
        #[arg(long, value_enum)]
        variant: EntanglerArg,
        #[command(flatten)]
        common: CommonCompile,
    },
    /// Move an excitation between two sites (one pulse of phase pi/2)
    Shift {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Register size (defaults to max(from, to) + 1)
        #[arg(long)]
        num_qubits: Option<usize>,
        #[command(flatten)]
        common: CommonCompile,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum ZzRouteArg {
    First,
    Second,
}

#[derive(ValueEnum, Clone, Copy)]
enum EntanglerArg {
    Serial,
    Swap,
}

#[derive(ValueEnum, Clone, Copy)]
enum PairArg {
    #[value(name = "01")]
    ZeroOne,
    #[value(name = "12")]
    OneTwo,
    #[value(name = "02")]
    ZeroTwo,
}

impl From<PairArg> for LevelPair {
    fn from(p: PairArg) -> LevelPair {
        match p {
            PairArg::ZeroOne => LevelPair::ZeroOne,
            PairArg::OneTwo => LevelPair::OneTwo,
            PairArg::ZeroTwo => LevelPair::ZeroTwo,
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum EncodingArg {
    Truncated,
    Qutrit,
}

impl From<EncodingArg> for Encoding {
    fn from(e: EncodingArg) -> Encoding {
        match e {
            EncodingArg::Truncated => Encoding::TruncatedQubit,
            EncodingArg::Qutrit => Encoding::Qutrit,
        }
    }
}

#[derive(Args)]
struct SimulateArgs {
    /// Schedule file to run
    schedule: PathBuf,
    /// Input basis state as a bit string like 010, or @file with a
    /// JSON list of [re, im] amplitude pairs; defaults to |0...0>
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Schedule file to verify
    schedule: PathBuf,
    /// Target gate: identity, x, z, sqrt-zz, cz, cnot, qutrit-z,
    /// qutrit-entangler, su2, qutrit-su2, qutrit-su3
    #[arg(long)]
    target: String,
    /// Angle for x, z, qutrit-z targets
    #[arg(long, allow_negative_numbers = true)]
    phi: Option<f64>,
    /// Matrix for su2, qutrit-su2, qutrit-su3 targets
    #[arg(long)]
    matrix: Option<String>,
    /// Level pair for the qutrit-su2 target
    #[arg(long, value_enum)]
    pair: Option<PairArg>,
    /// Block encoding; inferred from the register when omitted
    #[arg(long, value_enum)]
    encoding: Option<EncodingArg>,
    /// Number of blocks; inferred from the register when omitted
    #[arg(long)]
    blocks: Option<usize>,
    /// Infidelity allowed before the verification fails
    #[arg(long, default_value_t = 1e-9, allow_negative_numbers = true)]
    tolerance: f64,
    /// Interpret --phi as degrees
    #[arg(long)]
    degrees: bool,
}

#[derive(ValueEnum, Clone, Copy)]
enum LayoutArg {
    Triangular,
    Linear,
    LinearNnn,
    TwoPlane,
}

#[derive(ValueEnum, Clone, Copy)]
enum AncillaModeArg {
    StaticRow,
    Mobile,
}

#[derive(Args)]
struct LayoutCheckArgs {
    /// Schedule file to check
    schedule: PathBuf,
    #[arg(long, value_enum)]
    layout: LayoutArg,
    /// Number of three-site blocks (triangular; defaults to register/3)
    #[arg(long)]
    blocks: Option<usize>,
    /// Number of sites (linear layouts; defaults to the register size)
    #[arg(long)]
    sites: Option<usize>,
    /// Number of code pairs (two-plane; defaults to register/2 rounded down)
    #[arg(long)]
    pairs: Option<usize>,
    #[arg(long, value_enum, default_value_t = AncillaModeArg::StaticRow)]
    ancilla_mode: AncillaModeArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Compile { target } => cmd_compile(target),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::LayoutCheck(args) => cmd_layout_check(args),
    }
}

fn core(e: CoreError) -> String {
    e.to_string()
}

fn radians(value: f64, degrees: bool) -> f64 {
    if degrees {
        value.to_radians()
    } else {
        value
    }
}

/// What the compiled schedule is checked against for the summary line.
enum BuiltTarget {
    /// Compare the logical restriction over these blocks.
    Logical {
        encoding: Encoding,
        blocks: Vec<Block>,
        matrix: Unitary,
    },
    /// Compare the full physical unitary.
    Physical(Unitary),
}

fn cmd_compile(target: CompileTarget) -> Result<u8, String> {
    let one_block = Block::contiguous(0);
    let two_blocks = (Block::contiguous(0), Block::contiguous(1));

    let (schedule, check, common) = match target {
        CompileTarget::Su2 {
            matrix,
            identity,
            common,
        } => {
            let u = if identity {
                Unitary::identity(2)
            } else {
                let spec = matrix.ok_or("su2 needs --matrix or --identity")?;
                parse_matrix(&spec, 2)?
            };
            let s = compile_su2(3, &u, &one_block).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::TruncatedQubit,
                    blocks: vec![one_block],
                    matrix: u,
                },
                common,
            )
        }
        CompileTarget::X { phi, common } => {
            let phi = radians(phi, common.degrees);
            let s = encoded_x(3, phi, &one_block).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::TruncatedQubit,
                    blocks: vec![one_block],
                    matrix: targets::x_rotation(phi),
                },
                common,
            )
        }
        CompileTarget::Z { phi, common } => {
            let phi = radians(phi, common.degrees);
            let s = encoded_z(3, phi, &one_block).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::TruncatedQubit,
                    blocks: vec![one_block],
                    matrix: targets::z_rotation(phi),
                },
                common,
            )
        }
        CompileTarget::SqrtZz { variant, common } => {
            let a = Block::pair(0, 1).map_err(core)?;
            let b = Block::pair(2, 3).map_err(core)?;
            let v = match variant {
                ZzRouteArg::First => SqrtZzVariant::ViaFirst,
                ZzRouteArg::Second => SqrtZzVariant::ViaSecond,
            };
            let s = sqrt_minus_zz(4, &a, &b, v).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::TruncatedQubit,
                    blocks: vec![a, b],
                    matrix: targets::sqrt_minus_zz(),
                },
                common,
            )
        }
        CompileTarget::Cz { common } => {
            let s = controlled_phase_flip(6, &two_blocks.0, &two_blocks.1).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::TruncatedQubit,
                    blocks: vec![two_blocks.0, two_blocks.1],
                    matrix: targets::controlled_phase_flip(),
                },
                common,
            )
        }
        CompileTarget::Cnot { common } => {
            let s = compile_cnot(6, &two_blocks.0, &two_blocks.1).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::TruncatedQubit,
                    blocks: vec![two_blocks.0, two_blocks.1],
                    matrix: targets::cnot(),
                },
                common,
            )
        }
        CompileTarget::QutritSu2 {
            pair,
            matrix,
            common,
        } => {
            let u = parse_matrix(&matrix, 2)?;
            let pair: LevelPair = pair.into();
            let s = qutrit_su2_on_pair(3, &u, pair, &one_block).map_err(core)?;
            let emb = qutrit_su2_embedded_target(&u, pair).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::Qutrit,
                    blocks: vec![one_block],
                    matrix: emb,
                },
                common,
            )
        }
        CompileTarget::QutritSu3 { matrix, common } => {
            let u = parse_matrix(&matrix, 3)?;
            let s = compile_su3(3, &u, &one_block).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::Qutrit,
                    blocks: vec![one_block],
                    matrix: u,
                },
                common,
            )
        }
        CompileTarget::QutritZ { phi, common } => {
            let phi = radians(phi, common.degrees);
            let s = qutrit_z(3, phi, &one_block).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::Qutrit,
                    blocks: vec![one_block],
                    matrix: targets::qutrit_z(phi),
                },
                common,
            )
        }
        CompileTarget::QutritEntangler { variant, common } => {
            let v = match variant {
                EntanglerArg::Serial => EntanglerVariant::Serial,
                EntanglerArg::Swap => EntanglerVariant::SwapConjugated,
            };
            let s = qutrit_entangler(6, &two_blocks.0, &two_blocks.1, v).map_err(core)?;
            (
                s,
                BuiltTarget::Logical {
                    encoding: Encoding::Qutrit,
                    blocks: vec![two_blocks.0, two_blocks.1],
                    matrix: targets::qutrit_entangler(),
                },
                common,
            )
        }
        CompileTarget::Shift {
            from,
            to,
            num_qubits,
            common,
        } => {
            let n = num_qubits.unwrap_or(from.max(to) + 1);
            let s = shift_excitation(n, from, to).map_err(core)?;
            let h = xy_generator_matrix(n, from, to).map_err(core)?;
            let expected = oracle_expm(&h, FRAC_PI_2).map_err(core)?;
            (s, BuiltTarget::Physical(expected), common)
        }
    };

    let fidelity_report = summarize(&schedule, &check)?;
    write_schedule(&common.output, &schedule)?;
    println!(
        "wrote {}: {} pulses over {} qubits; fidelity {:.12} vs target (global phase {:+.6})",
        common.output.display(),
        schedule.len(),
        schedule.num_qubits(),
        fidelity_report.0,
        fidelity_report.1,
    );
    Ok(0)
}

fn summarize(schedule: &Schedule, check: &BuiltTarget) -> Result<(f64, f64), String> {
    let u = schedule.unitary().map_err(core)?;
    let report = match check {
        BuiltTarget::Logical {
            encoding,
            blocks,
            matrix,
        } => {
            let r = restrict_to_logical(&u, *encoding, blocks).map_err(core)?;
            equivalent_up_to_phase(&r.matrix, matrix).map_err(core)?
        }
        BuiltTarget::Physical(expected) => equivalent_up_to_phase(&u, expected).map_err(core)?,
    };
    Ok((report.fidelity, report.global_phase))
}

fn cmd_simulate(args: SimulateArgs) -> Result<u8, String> {
    let (_, schedule) = read_schedule(&args.schedule)?;
    let n = schedule.num_qubits();
    let input = match args.input.as_deref() {
        None => StateVector::zero_state(n).map_err(core)?,
        Some(spec) => parse_state(spec, n)?,
    };
    let output = schedule.simulate(&input).map_err(core)?;
    for (index, amp) in output.amplitudes().iter().enumerate() {
        if amp.norm() < 1e-12 {
            continue;
        }
        println!(
            "|{index:0width$b}>  amplitude = {:.12e} {} {:.12e}i  magnitude = {:.12e}  phase = {:+.12e}",
            amp.re,
            if amp.im < 0.0 { "-" } else { "+" },
            amp.im.abs(),
            amp.norm(),
            amp.arg(),
            width = n,
        );
    }
    Ok(0)
}

fn parse_state(spec: &str, num_qubits: usize) -> Result<StateVector, String> {
    if let Some(path) = spec.strip_prefix('@') {
        let text =
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        let pairs: Vec<[f64; 2]> =
            serde_json::from_str(&text).map_err(|e| format!("amplitude file: {e}"))?;
        let amps: Vec<Complex64> = pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect();
        return StateVector::from_amplitudes(num_qubits, amps).map_err(core);
    }
    let bits: Vec<u8> = spec
        .trim()
        .trim_start_matches('|')
        .trim_end_matches('>')
        .chars()
        .map(|c| match c {
            '0' => Ok(0u8),
            '1' => Ok(1u8),
            _ => Err(format!("bad basis label '{spec}'")),
        })
        .collect::<Result<_, _>>()?;
    if bits.len() != num_qubits {
        return Err(format!(
            "basis label '{spec}' has {} bits but the schedule spans {num_qubits} qubits",
            bits.len()
        ));
    }
    StateVector::from_bits(&bits).map_err(core)
}

#[derive(Serialize)]
struct VerifyReport {
    pass: bool,
    pulses: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    fidelity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    global_phase: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_entry_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    leakage: Option<f64>,
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, String> {
    let (_, schedule) = read_schedule(&args.schedule)?;
    let n = schedule.num_qubits();
    let (encoding, blocks) = placement(n, args.encoding.map(Into::into), args.blocks)?;
    let logical_dim = encoding.logical_dim().pow(blocks.len() as u32);
    let target = build_target(&args, logical_dim, encoding)?;

    let u = schedule.unitary().map_err(core)?;
    let restricted = match restrict_to_logical(&u, encoding, &blocks) {
        Ok(r) => r,
        Err(CoreError::CodeSpaceLeakage { weight }) => {
            let report = VerifyReport {
                pass: false,
                pulses: schedule.len(),
                fidelity: None,
                global_phase: None,
                max_entry_deviation: None,
                leakage: Some(weight),
            };
            println!("{}", serde_json::to_string(&report).unwrap());
            return Ok(1);
        }
        Err(e) => return Err(core(e)),
    };
    let eq = equivalent_up_to_phase(&restricted.matrix, &target).map_err(core)?;
    let pass = eq.passes(args.tolerance);
    let report = VerifyReport {
        pass,
        pulses: schedule.len(),
        fidelity: Some(eq.fidelity),
        global_phase: Some(eq.global_phase),
        max_entry_deviation: Some(eq.max_entry_deviation),
        leakage: None,
    };
    println!("{}", serde_json::to_string(&report).unwrap());
    Ok(if pass { 0 } else { 1 })
}

/// Resolve the block placement: explicit flags first, then contiguous
/// three-site blocks when the register divides by 3, then code pairs.
fn placement(
    num_qubits: usize,
    encoding: Option<Encoding>,
    blocks: Option<usize>,
) -> Result<(Encoding, Vec<Block>), String> {
    let encoding = encoding.unwrap_or(Encoding::TruncatedQubit);
    let triples = |k: usize| (0..k).map(Block::contiguous).collect::<Vec<_>>();
    let pairs = |k: usize| {
        (0..k)
            .map(|i| Block::pair(2 * i, 2 * i + 1).expect("distinct"))
            .collect::<Vec<_>>()
    };
    let blocks = match blocks {
        Some(k) => {
            if 3 * k == num_qubits {
                triples(k)
            } else if 2 * k == num_qubits {
                pairs(k)
            } else {
                return Err(format!(
                    "{k} blocks do not tile a {num_qubits}-qubit register"
                ));
            }
        }
        None => {
            if num_qubits.is_multiple_of(3) {
                triples(num_qubits / 3)
            } else if num_qubits.is_multiple_of(2) {
                pairs(num_qubits / 2)
            } else {
                return Err(format!(
                    "cannot infer a block placement for {num_qubits} qubits; pass --blocks"
                ));
            }
        }
    };
    Ok((encoding, blocks))
}

fn build_target(
    args: &VerifyArgs,
    logical_dim: usize,
    encoding: Encoding,
) -> Result<Unitary, String> {
    let need_phi = || {
        args.phi
            .map(|p| radians(p, args.degrees))
            .ok_or_else(|| format!("target '{}' needs --phi", args.target))
    };
    let need_matrix = |dim: usize| {
        args.matrix
            .as_deref()
            .ok_or_else(|| format!("target '{}' needs --matrix", args.target))
            .and_then(|m| parse_matrix(m, dim))
    };
    let expect_dim = |want: usize, u: Unitary| {
        if want == logical_dim {
            Ok(u)
        } else {
            Err(format!(
                "target '{}' is {want}-dimensional but the placement gives a logical dimension of {logical_dim}",
                args.target
            ))
        }
    };
    match args.target.as_str() {
        "identity" => Ok(Unitary::identity(logical_dim)),
        "x" => expect_dim(2, targets::x_rotation(need_phi()?)),
        "z" => expect_dim(2, targets::z_rotation(need_phi()?)),
        "sqrt-zz" => expect_dim(4, targets::sqrt_minus_zz()),
        "cz" => expect_dim(4, targets::controlled_phase_flip()),
        "cnot" => expect_dim(4, targets::cnot()),
        "qutrit-z" => expect_dim(3, targets::qutrit_z(need_phi()?)),
        "qutrit-entangler" => expect_dim(9, targets::qutrit_entangler()),
        "su2" => expect_dim(2, need_matrix(2)?),
        "qutrit-su2" => {
            if encoding != Encoding::Qutrit {
                return Err("target 'qutrit-su2' needs --encoding qutrit".into());
            }
            let pair: LevelPair = args
                .pair
                .ok_or("target 'qutrit-su2' needs --pair")?
                .into();
            let emb = qutrit_su2_embedded_target(&need_matrix(2)?, pair).map_err(core)?;
            expect_dim(3, emb)
        }
        "qutrit-su3" => expect_dim(3, need_matrix(3)?),
        other => Err(format!("unknown target '{other}'")),
    }
}

fn cmd_layout_check(args: LayoutCheckArgs) -> Result<u8, String> {
    let (_, schedule) = read_schedule(&args.schedule)?;
    let n = schedule.num_qubits();
    let layout: LayoutGraph = match args.layout {
        LayoutArg::Triangular => {
            let blocks = args.blocks.unwrap_or(n / 3);
            if blocks == 0 {
                return Err("triangular layout needs at least one block".into());
            }
            triangular_layout(blocks, Encoding::TruncatedQubit)
        }
        LayoutArg::Linear => linear_layout(args.sites.unwrap_or(n), false),
        LayoutArg::LinearNnn => linear_layout(args.sites.unwrap_or(n), true),
        LayoutArg::TwoPlane => {
            let pairs = args.pairs.unwrap_or(n / 2);
            if pairs == 0 {
                return Err("two-plane layout needs at least one pair".into());
            }
            let mode = match args.ancilla_mode {
                AncillaModeArg::StaticRow => AncillaMode::StaticRow,
                AncillaModeArg::Mobile => AncillaMode::Mobile,
            };
            two_plane_layout(pairs, mode)
        }
    };

    let violations = validate_schedule(&schedule, &layout);
    if violations.is_empty() {
        println!(
            "ok: all {} pulses legal on the layout ({} sites, {} edges)",
            schedule.len(),
            layout.num_sites(),
            layout.num_edges(),
        );
        if matches!(args.layout, LayoutArg::TwoPlane)
            && matches!(args.ancilla_mode, AncillaModeArg::Mobile)
        {
            println!(
                "mobile ancilla relocations: {}",
                count_ancilla_relocations(&schedule, &layout)
            );
        }
        Ok(0)
    } else {
        for v in &violations {
            println!(
                "gate {}: pulse on ({}, {}) {}",
                v.gate_index,
                v.pair.0,
                v.pair.1,
                match v.kind {
                    xyseq_core::ViolationKind::NotAnEdge => "is not an edge of the layout",
                    xyseq_core::ViolationKind::SiteOutOfRange => "lies outside the layout",
                }
            );
        }
        println!("{} violation(s)", violations.len());
        Ok(1)
    }
}
