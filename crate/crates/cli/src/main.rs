mod render;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cauchon::oreset::{OreSetGenerators, MAX_EXHAUSTIVE_D};
use cauchon::verify::{
    verify_border_sets, verify_containment, verify_counts, verify_minor_routes,
    verify_necklace_routes, verify_separating, verify_square_sets, verify_trace_vs_subword, Scope,
    SweepReport,
};
use cauchon::{
    diagram_from_permutation, enumerate, expand_quantum_minor, gl_variant, hprime_poset,
    is_separating, minor_to_plucker, necklace_from_diagram, ore_generators,
    permutation_from_diagram, prune_main_diagonal, sl_variant, vanishes, vanishing_minor_set,
    CauchonDiagram, Error, Grid, MinorIndex, Permutation, Square, Subset,
};

#[derive(Parser)]
#[command(name = "cauchon", version, about = "Cauchon diagrams, Grassmann necklaces and separating Ore sets")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Diagram rows, '+' white and '0' black, separated by newlines, "\n" or '/'.
    #[arg(long)]
    grid: Option<String>,
    /// File holding a grid or a JSON diagram.
    #[arg(long)]
    file: Option<String>,
    /// Restricted permutation in one-line notation; needs --m and --n.
    #[arg(long)]
    perm: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Clone, Copy)]
struct Bounds {
    /// Largest m+n swept.
    #[arg(long)]
    max_d: Option<usize>,
    /// Largest number of cells m*n swept.
    #[arg(long)]
    max_mn: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Cauchon condition and report every violating square.
    Validate(Input),
    /// Grassmann necklace of a diagram.
    Necklace(Input),
    /// Restricted permutation of a diagram.
    Permutation(Input),
    /// The diagram of a restricted permutation.
    Diagram(Input),
    /// Chains rooted at the border boxes, or at one square.
    Chains {
        #[command(flatten)]
        input: Input,
        /// Root square "r,c".
        #[arg(long)]
        square: Option<String>,
    },
    /// Vanishing Plücker coordinates, or whether one coordinate vanishes.
    Vanishing {
        #[command(flatten)]
        input: Input,
        /// Plücker index such as 3467 or {3,4,6,7}.
        #[arg(long)]
        plucker: Option<String>,
    },
    /// Quantum minors lying in the H-prime, or whether one minor does.
    MinorsIn {
        #[command(flatten)]
        input: Input,
        /// Minor such as [12|23].
        #[arg(long)]
        minor: Option<String>,
    },
    /// Separating Ore set generators, with the separation report.
    OreSet(Input),
    /// Exhaustive agreement of the chain and permutation constructions.
    VerifyEquivalence(Bounds),
    /// Exhaustive check of the separating property and the containment order.
    VerifySeparating(Bounds),
    /// Containment order on all diagrams of one shape.
    Poset {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Generators viewed in quantum GL_n.
    Gl {
        #[command(flatten)]
        input: Input,
        /// Drop generators whose chain starts on the main diagonal.
        #[arg(long)]
        prune: bool,
    },
    /// Generators viewed in quantum SL_n.
    Sl(Input),
    /// Expand a quantum minor as a signed sum of words.
    ExpandMinor {
        #[arg(long)]
        minor: String,
    },
    /// Draw a diagram with its border boxes, or as a pipe dream.
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pipedream: bool,
    },
    /// List or count every diagram of a shape.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: bool,
    },
}

/// Failures that map to exit code 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

/// Command output and whether verification passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, ok: true }
    }
}

type Outcome = Result<Output, InputError>;

fn emit(json: bool, value: Value, text: impl FnOnce() -> String) -> String {
    if json {
        serde_json::to_string_pretty(&value).expect("JSON values serialize")
    } else {
        text()
    }
}

fn read_grid(input: &Input) -> Result<Grid, InputError> {
    let text = match (&input.grid, &input.file) {
        (Some(g), None) => g.clone(),
        (None, Some(path)) => {
            let raw = fs::read_to_string(path)
                .map_err(|e| InputError(format!("cannot read {path}: {e}")))?;
            if raw.trim_start().starts_with('{') {
                let d: CauchonDiagram = serde_json::from_str(&raw)
                    .map_err(|e| InputError(format!("bad diagram JSON in {path}: {e}")))?;
                return Ok(d.into_grid());
            }
            raw
        }
        (Some(_), Some(_)) => return Err(InputError("give only one of --grid and --file".into())),
        (None, None) => return Err(InputError("a diagram is required (--grid, --file or --perm)".into())),
    };
    Ok(Grid::parse(&text)?)
}

fn shape(input: &Input) -> Result<(usize, usize), InputError> {
    match (input.m, input.n) {
        (Some(m), Some(n)) => Ok((m, n)),
        _ => Err(InputError("--perm needs both --m and --n".into())),
    }
}

fn read_diagram(input: &Input) -> Result<CauchonDiagram, InputError> {
    if let Some(p) = &input.perm {
        if input.grid.is_some() || input.file.is_some() {
            return Err(InputError("give either a grid or a permutation, not both".into()));
        }
        let (m, n) = shape(input)?;
        let v = Permutation::parse(p)?;
        return Ok(diagram_from_permutation(&v, m, n)?);
    }
    Ok(read_grid(input)?.validate()?)
}

fn one_line(d: &CauchonDiagram) -> String {
    d.grid().row_strings().join("/")
}

fn generator_lines(e: &OreSetGenerators) -> String {
    e.entries
        .iter()
        .map(|g| format!("{}: {} chain {}", g.k, g.minor.compact(), g.chain))
        .collect::<Vec<_>>()
        .join("\n")
}

fn validate(json: bool, input: &Input) -> Outcome {
    let grid = read_grid(input)?;
    let violations = grid.violations();
    let ok = violations.is_empty();
    let text = emit(
        json,
        json!({"valid": ok, "violations": violations}),
        || {
            if ok {
                "valid Cauchon diagram".to_string()
            } else {
                violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\n")
            }
        },
    );
    Ok(Output { text, ok })
}

fn necklace(json: bool, input: &Input) -> Outcome {
    let nk = necklace_from_diagram(&read_diagram(input)?);
    Ok(Output::ok(emit(json, json!(nk), || nk.to_string())))
}

fn permutation(json: bool, input: &Input) -> Outcome {
    let v = permutation_from_diagram(&read_diagram(input)?);
    Ok(Output::ok(emit(json, json!(v), || v.to_string())))
}

fn diagram(json: bool, input: &Input) -> Outcome {
    let d = read_diagram(input)?;
    Ok(Output::ok(emit(json, json!(d), || d.to_text())))
}

fn parse_square(text: &str) -> Result<Square, InputError> {
    let parts: Vec<&str> = text
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(str::trim)
        .collect();
    match parts.as_slice() {
        [r, c] => match (r.parse(), c.parse()) {
            (Ok(r), Ok(c)) => Ok(Square::new(r, c)),
            _ => Err(InputError(format!("bad square {text:?}"))),
        },
        _ => Err(InputError(format!("bad square {text:?}, expected r,c"))),
    }
}

fn chains(json: bool, input: &Input, square: Option<&str>) -> Outcome {
    let d = read_diagram(input)?;
    if let Some(sq) = square {
        let chain = d.chain_rooted_at(parse_square(sq)?)?;
        return Ok(Output::ok(emit(json, json!(chain), || chain.to_string())));
    }
    let chains = d.border_chains();
    let value = json!(chains
        .iter()
        .enumerate()
        .map(|(i, c)| json!({"k": i + 1, "chain": c}))
        .collect::<Vec<_>>());
    Ok(Output::ok(emit(json, value, || {
        chains
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}: {c}", i + 1))
            .collect::<Vec<_>>()
            .join("\n")
    })))
}

fn vanishing(json: bool, input: &Input, plucker: Option<&str>) -> Outcome {
    let d = read_diagram(input)?;
    let (m, n) = d.shape();
    let nk = necklace_from_diagram(&d);
    if let Some(p) = plucker {
        let t = Subset::parse(p, m + n)?;
        let v = vanishes(&nk, t)?;
        return Ok(Output::ok(emit(json, json!(v), || v.to_string())));
    }
    let sets: Vec<Subset> = vanishing_minor_set(&d)
        .iter()
        .map(|mi| minor_to_plucker(m, n, mi).expect("minor in range"))
        .collect();
    Ok(Output::ok(emit(json, json!(sets), || {
        sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n")
    })))
}

fn minors_in(json: bool, input: &Input, minor: Option<&str>) -> Outcome {
    let d = read_diagram(input)?;
    let (m, n) = d.shape();
    let set = vanishing_minor_set(&d);
    if let Some(text) = minor {
        let mi = MinorIndex::parse(text)?;
        mi.check(m, n)?;
        let inside = set.contains(&mi);
        return Ok(Output::ok(emit(json, json!(inside), || inside.to_string())));
    }
    Ok(Output::ok(emit(json, json!(set), || {
        set.iter().map(|mi| mi.compact()).collect::<Vec<_>>().join("\n")
    })))
}

fn ore_set(json: bool, input: &Input) -> Outcome {
    let d = read_diagram(input)?;
    let e = ore_generators(&d);
    let (m, n) = d.shape();
    if m + n > MAX_EXHAUSTIVE_D {
        let value = json!({"K": d, "generators": e.entries});
        return Ok(Output::ok(emit(json, value, || generator_lines(&e))));
    }
    let report = is_separating(&e, &d)?;
    let ok = report.separating;
    let text = emit(json, json!(report), || {
        let mut t = generator_lines(&e);
        if !t.is_empty() {
            t.push('\n');
        }
        t.push_str(&format!("separating: {ok}"));
        for l in report.uncaught() {
            t.push_str(&format!("\nuncaught: {}", one_line(l)));
        }
        t
    });
    Ok(Output { text, ok })
}

fn scope(bounds: Bounds, default_d: usize) -> Scope {
    let s = Scope::new(bounds.max_d.unwrap_or(default_d));
    match bounds.max_mn {
        Some(b) => s.with_max_mn(b),
        None => s,
    }
}

fn sweep_output(json: bool, reports: Vec<SweepReport>) -> Output {
    let ok = reports.iter().all(SweepReport::passed);
    let text = emit(json, json!({"passed": ok, "sweeps": reports}), || {
        let mut lines = Vec::new();
        for r in &reports {
            let status = if r.passed() { "ok" } else { "FAILED" };
            lines.push(format!(
                "{status} {}: {} checks, {} failures",
                r.name, r.checked, r.failures
            ));
            lines.extend(r.counterexamples.iter().map(|c| format!("  {c}")));
        }
        lines.join("\n")
    });
    Output { text, ok }
}

fn verify_equivalence(json: bool, bounds: Bounds) -> Outcome {
    let s = scope(bounds, 8);
    let reports = vec![
        verify_trace_vs_subword(s, true)?,
        verify_minor_routes(s, true)?,
        verify_necklace_routes(s, true)?,
        verify_border_sets(s, true)?,
        verify_square_sets(s, true)?,
    ];
    let mut out = sweep_output(json, reports);
    if s.max_d <= 6 {
        let (_, counts) = verify_counts(s)?;
        if !counts.passed() {
            out.ok = false;
        }
        if !json {
            out.text.push_str(&format!(
                "\n{} counts: {} shapes, {} failures",
                if counts.passed() { "ok" } else { "FAILED" },
                counts.checked,
                counts.failures
            ));
        }
    }
    Ok(out)
}

fn verify_separating_cmd(json: bool, bounds: Bounds) -> Outcome {
    let s = scope(bounds, 7);
    let reports = vec![verify_separating(s, true)?, verify_containment(s, true)?];
    Ok(sweep_output(json, reports))
}

fn poset(json: bool, m: usize, n: usize) -> Outcome {
    let p = hprime_poset(m, n)?;
    let covers = p.covers();
    let value = json!({
        "m": m,
        "n": n,
        "diagrams": p.diagrams(),
        "covers": covers,
        "relation_size": p.relation_size(),
    });
    Ok(Output::ok(emit(json, value, || {
        let mut lines = vec![
            format!("elements: {}", p.len()),
            format!("related pairs: {}", p.relation_size()),
            format!("covers: {}", covers.len()),
        ];
        lines.extend(
            covers
                .iter()
                .map(|&(l, k)| format!("{} < {}", one_line(&p.diagrams()[l]), one_line(&p.diagrams()[k]))),
        );
        lines.join("\n")
    })))
}

fn gl(json: bool, input: &Input, prune: bool) -> Outcome {
    let d = read_diagram(input)?;
    let g = gl_variant(&d)?;
    let e = if prune {
        prune_main_diagonal(&g.generators)?
    } else {
        g.generators.clone()
    };
    let value = json!({"survives": g.survives, "generators": e.entries});
    Ok(Output::ok(emit(json, value, || {
        let mut t = generator_lines(&e);
        if !t.is_empty() {
            t.push('\n');
        }
        t.push_str(&format!("survives in GL_{}: {}", d.rows(), g.survives));
        t
    })))
}

fn sl(json: bool, input: &Input) -> Outcome {
    let d = read_diagram(input)?;
    let g = gl_variant(&d)?;
    let e = sl_variant(&g.generators)?;
    Ok(Output::ok(emit(json, json!({"generators": e.entries}), || generator_lines(&e))))
}

fn expand(json: bool, minor: &str) -> Outcome {
    let mi = MinorIndex::parse(minor)?;
    let e = expand_quantum_minor(&mi)?;
    let value = json!(e
        .terms
        .iter()
        .map(|t| json!({"exponent": t.exponent, "word": t.word}))
        .collect::<Vec<_>>());
    Ok(Output::ok(emit(json, value, || e.to_string())))
}

fn render_cmd(json: bool, input: &Input, pipedream: bool) -> Outcome {
    let d = read_diagram(input)?;
    let art = if pipedream {
        render::pipe_dream(&d)
    } else {
        render::grid(&d)
    };
    let art = art.trim_end().to_string();
    Ok(Output::ok(emit(json, json!({"diagram": d, "art": art}), || art.clone())))
}

fn enumerate_cmd(json: bool, m: usize, n: usize, count: bool) -> Outcome {
    let diagrams = enumerate(m, n)?;
    if count {
        let c = diagrams.count();
        return Ok(Output::ok(emit(json, json!(c), || c.to_string())));
    }
    let all: Vec<CauchonDiagram> = diagrams.collect();
    Ok(Output::ok(emit(json, json!(all), || {
        all.iter().map(one_line).collect::<Vec<_>>().join("\n")
    })))
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Validate(i) => validate(json, i),
        Command::Necklace(i) => necklace(json, i),
        Command::Permutation(i) => permutation(json, i),
        Command::Diagram(i) => diagram(json, i),
        Command::Chains { input, square } => chains(json, input, square.as_deref()),
        Command::Vanishing { input, plucker } => vanishing(json, input, plucker.as_deref()),
        Command::MinorsIn { input, minor } => minors_in(json, input, minor.as_deref()),
        Command::OreSet(i) => ore_set(json, i),
        Command::VerifyEquivalence(b) => verify_equivalence(json, *b),
        Command::VerifySeparating(b) => verify_separating_cmd(json, *b),
        Command::Poset { m, n } => poset(json, *m, *n),
        Command::Gl { input, prune } => gl(json, input, *prune),
        Command::Sl(i) => sl(json, i),
        Command::ExpandMinor { minor } => expand(json, minor),
        Command::Render { input, pipedream } => render_cmd(json, input, *pipedream),
        Command::Enumerate { m, n, count } => enumerate_cmd(json, *m, *n, *count),
    }
}

fn configure_threads() -> Result<(), InputError> {
    let Ok(raw) = std::env::var("NECKLACE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| InputError(format!("NECKLACE_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| InputError(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("{}", first.trim());
            return ExitCode::from(2);
        }
    };
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok(out) => {
            println!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
