//! `arcalg`: enumeration, rendering, multiplication, tables, centers,
//! relation checks and Tanisaki reports for cup-diagram algebras.

use std::fmt::Write as _;
use std::process::ExitCode;

use arcalg::algebra::{BasisVector, FiniteAlgebra};
use arcalg::arc_algebra::ArcAlgebra;
use arcalg::braden::BradenMap;
use arcalg::colored_algebra::ColoredAlgebra;
use arcalg::diagram::{ext_diagram, BoxPartition, SignSeq, TwoRowTableau};
use arcalg::gluing::render_cups;
use arcalg::invariants::{
    binomial, catalan, center, commutator_quotient_dim, corner_isomorphism_check, dim_table,
    hilbert_series,
};
use arcalg::rational::{display, to_string};
use arcalg::tanisaki::{
    allowed_pairs, default_cutoff, f_construction, graded_quotient_dims, tanisaki_generators,
    vanishing_failures, Composition,
};
use arcalg::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const MAX_N: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "arcalg", version, about = "Cup-diagram algebras at desk scale")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Allow n above the default cap of 4.
    #[arg(long, global = true)]
    force: bool,
    /// Worker threads for parallel assembly.
    #[arg(long, global = true, env = "ARCALG_THREADS", default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Size {
    #[arg(long)]
    n: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    /// The colored algebra 𝒦ⁿ.
    Colored,
    /// Khovanov's arc algebra ℋⁿ.
    Arc,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List sign sequences with their partitions and cup closability.
    Enum(Size),
    /// Draw the cup diagram of a sequence, or the colored gluing of two.
    Render {
        #[command(flatten)]
        size: Size,
        /// Bottom sequence (a letter or a sign word).
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        /// Top sequence; when given, draws the glued diagram.
        #[arg(long, allow_hyphen_values = true)]
        top: Option<String>,
    },
    /// Multiply two basis vectors written `t|s|labels`, e.g. `a|b|1`.
    Mult {
        #[command(flatten)]
        size: Size,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Table of hom-space dimensions.
    Dims(Size),
    /// Graded dimension of the center.
    Center {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Which::Colored)]
        algebra: Which,
    },
    /// Evaluate every relation family of the Braden presentation.
    CheckRelations(Size),
    /// Generators and graded quotient dimensions of the Tanisaki ideal.
    Tanisaki {
        /// Composition, e.g. `2,2`.
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random points per interpolating polynomial.
        #[arg(long, default_value_t = 100)]
        points: usize,
    },
    /// Compare the cup-sequence corner of 𝒦ⁿ with ℋⁿ.
    CornerCheck {
        #[command(flatten)]
        size: Size,
        /// Compare dimensions only.
        #[arg(long)]
        dims_only: bool,
    },
}

/// Output text plus whether every mathematical check passed.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn new(cli: &Cli, value: Value, text: String, ok: bool) -> Report {
        let text = if cli.json {
            serde_json::to_string_pretty(&value).expect("json")
        } else {
            text
        };
        Report { text, ok }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.text.trim_end());
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn check_size(cli: &Cli, n: usize) -> Result<usize, Error> {
    if n == 0 {
        return Err(Error::Degenerate("n must be at least 1".into()));
    }
    if n > MAX_N && !cli.force {
        return Err(Error::SizeMismatch(format!(
            "n = {n} exceeds {MAX_N}; pass --force to run anyway"
        )));
    }
    Ok(n)
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Enum(size) => enumerate(cli, check_size(cli, size.n)?),
        Command::Render { size, seq, top } => {
            render(cli, check_size(cli, size.n)?, seq, top.as_deref())
        }
        Command::Mult { size, left, right } => mult(cli, check_size(cli, size.n)?, left, right),
        Command::Dims(size) => dims(cli, check_size(cli, size.n)?),
        Command::Center { size, algebra } => center_report(cli, check_size(cli, size.n)?, *algebra),
        Command::CheckRelations(size) => relations(cli, check_size(cli, size.n)?),
        Command::Tanisaki {
            mu,
            cutoff,
            seed,
            points,
        } => tanisaki(cli, mu, *cutoff, *seed, *points),
        Command::CornerCheck { size, dims_only } => {
            corner(cli, check_size(cli, size.n)?, !dims_only)
        }
    }
}

/// a, b, …, z, aa, ab, …
fn letter(mut i: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

fn sequence_index(k: &ColoredAlgebra, token: &str) -> Result<usize, Error> {
    if let Some(i) = (0..k.idempotent_count()).find(|&i| letter(i) == token) {
        return Ok(i);
    }
    let seq: SignSeq = token.parse()?;
    k.sequence_index(&seq)
        .ok_or_else(|| Error::SizeMismatch(format!("{token} is not a sequence for n = {}", k.n())))
}

fn basis_key(k: &ColoredAlgebra, v: &BasisVector) -> String {
    format!(
        "{}|{}|{}",
        letter(v.target),
        letter(v.source),
        k.label_string(v)
    )
}

/// `t|s|X⊗1` → basis vector; labels follow the display order of circles.
fn parse_key(k: &ColoredAlgebra, key: &str) -> Result<BasisVector, Error> {
    let parts: Vec<&str> = key.split('|').collect();
    let [t, s, labels] = parts[..] else {
        return Err(Error::Parse(format!(
            "{key:?}: expected target|source|labels"
        )));
    };
    let (t, s) = (sequence_index(k, t.trim())?, sequence_index(k, s.trim())?);
    let order = k.display_order(t, s);
    let labels: Vec<&str> = labels.split(['⊗', ',', '*']).map(str::trim).collect();
    if labels.len() != order.len() {
        return Err(Error::Parse(format!(
            "{key:?}: {} labels for {} circles",
            labels.len(),
            order.len()
        )));
    }
    let mut mask = 0u64;
    for (&circle, label) in order.iter().zip(&labels) {
        match *label {
            "1" => {}
            "X" | "x" => mask |= 1 << circle,
            other => return Err(Error::Parse(format!("label {other:?} is neither 1 nor X"))),
        }
    }
    let v = BasisVector::new(t, s, mask);
    if k.index().position(&v).is_none() {
        return Err(Error::InvalidGenerator(format!(
            "{key:?} is not a basis vector of 𝒦^{}",
            k.n()
        )));
    }
    Ok(v)
}

fn enumerate(cli: &Cli, n: usize) -> Result<Report, Error> {
    let k_seqs = arcalg::diagram::enumerate_sequences(n)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, s) in k_seqs.iter().enumerate() {
        let partition = BoxPartition::from_sequence(s);
        let cup = s.is_cup_sequence();
        let tableau = if cup {
            Some(TwoRowTableau::from_cup_diagram(
                &arcalg::diagram::lambda_pairs(s)?,
            ))
        } else {
            None
        };
        let _ = writeln!(
            text,
            "{:>3}  {s}  {:<width$}  {}",
            letter(i),
            format!("{:?}", partition.parts()),
            if cup { "cup" } else { "" },
            width = 3 * n + 2
        );
        rows.push(json!({
            "letter": letter(i),
            "sequence": s.to_string(),
            "partition": partition.parts(),
            "cup": cup,
            "tableau": tableau,
        }));
    }
    Ok(Report::new(
        cli,
        json!({ "n": n, "sequences": rows }),
        text,
        true,
    ))
}

fn render(cli: &Cli, n: usize, seq: &str, top: Option<&str>) -> Result<Report, Error> {
    let k = ColoredAlgebra::new(n)?;
    let bottom = sequence_index(&k, seq)?;
    let (text, value) = match top {
        None => {
            let s = &k.sequences()[bottom];
            let d = ext_diagram(&s.extend())?;
            let text = render_cups(&d);
            (
                text.clone(),
                json!({ "sequence": s.to_string(), "arcs": d, "text": text }),
            )
        }
        Some(top) => {
            let t = sequence_index(&k, top)?;
            let g = k.glued(t, bottom);
            let colors: String = k.colors(t, bottom).iter().map(|c| c.letter()).collect();
            let text = g.render();
            (
                text.clone(),
                json!({
                    "top": k.sequences()[t].to_string(),
                    "bottom": k.sequences()[bottom].to_string(),
                    "circles": g.circles(),
                    "colors": colors,
                    "text": text,
                }),
            )
        }
    };
    Ok(Report::new(cli, value, text, true))
}

fn mult(cli: &Cli, n: usize, left: &str, right: &str) -> Result<Report, Error> {
    let k = ColoredAlgebra::new(n)?;
    let (f, g) = (parse_key(&k, left)?, parse_key(&k, right)?);
    let product = if f.source == g.target {
        k.mul_basis(&f, &g)
    } else {
        Default::default()
    };
    let text = if product.is_zero() {
        "0".to_string()
    } else {
        product
            .iter()
            .map(|(v, c)| {
                if *c == arcalg::rational::int(1) {
                    basis_key(&k, v)
                } else {
                    format!("{}·{}", display(c), basis_key(&k, v))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let terms: serde_json::Map<String, Value> = product
        .iter()
        .map(|(v, c)| (basis_key(&k, v), Value::String(to_string(c))))
        .collect();
    let value = json!({ "left": basis_key(&k, &f), "right": basis_key(&k, &g), "product": terms });
    Ok(Report::new(cli, value, text, true))
}

fn table_text(labels: &[String], rows: &[Vec<usize>]) -> String {
    let width = labels
        .iter()
        .map(String::len)
        .chain(rows.iter().flatten().map(|d| d.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut out = format!("{:>width$}", "");
    for l in labels {
        let _ = write!(out, " {l:>width$}");
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(rows) {
        let _ = write!(out, "{l:>width$}");
        for d in row {
            let _ = write!(out, " {d:>width$}");
        }
        out.push('\n');
    }
    out
}

fn dims(cli: &Cli, n: usize) -> Result<Report, Error> {
    let k = ColoredAlgebra::new(n)?;
    let table = dim_table(&k);
    let labels: Vec<String> = k.sequences().iter().map(|s| s.to_string()).collect();
    let symmetric = (0..table.len()).all(|i| (0..table.len()).all(|j| table[i][j] == table[j][i]));
    let total: usize = table.iter().flatten().sum();
    let hilbert = hilbert_series(&k);
    let mut text = table_text(&labels, &table);
    let _ = writeln!(text, "total {total}");
    let graded: Vec<String> = hilbert.iter().map(|(d, m)| format!("{d}:{m}")).collect();
    let _ = writeln!(text, "graded {}", graded.join(" "));
    let ok = symmetric && total == k.dim();
    let value = json!({
        "n": n,
        "sequences": labels,
        "table": table,
        "total": total,
        "graded": hilbert,
        "symmetric": symmetric,
    });
    Ok(Report::new(cli, value, text, ok))
}

fn center_report(cli: &Cli, n: usize, which: Which) -> Result<Report, Error> {
    let (z, commutator) = match which {
        Which::Colored => (center(&ColoredAlgebra::new(n)?), None),
        Which::Arc => {
            let h = ArcAlgebra::new(n)?;
            (center(&h), Some(commutator_quotient_dim(&h)))
        }
    };
    let expected_dim = binomial(2 * n as u64, n as u64) as usize;
    let expected_top = (2 * n as i32, catalan(n as u64) as usize);
    let ok = z.dim() == expected_dim
        && z.top_degree() == Some(expected_top)
        && commutator.is_none_or(|c| c == z.dim());
    let degrees: Vec<String> = z.graded_dims.keys().map(i32::to_string).collect();
    let dims: Vec<String> = z.graded_dims.values().map(usize::to_string).collect();
    let width = degrees
        .iter()
        .chain(&dims)
        .map(String::len)
        .max()
        .unwrap_or(1);
    let mut text = String::new();
    for (name, row) in [("degree", &degrees), ("dim", &dims)] {
        let _ = write!(text, "{name:<6}");
        for cell in row {
            let _ = write!(text, " {cell:>width$}");
        }
        text.push('\n');
    }
    let _ = writeln!(text, "dim {} (expected {expected_dim})", z.dim());
    if let Some((d, m)) = z.top_degree() {
        let _ = writeln!(text, "top degree {d}, dim {m}");
    }
    if let Some(c) = commutator {
        let _ = writeln!(text, "commutator quotient {c}");
    }
    let value = json!({
        "n": n,
        "algebra": format!("{which:?}").to_lowercase(),
        "graded": z.graded_dims,
        "dim": z.dim(),
        "top": z.top_degree(),
        "commutator_quotient": commutator,
        "expected_dim": expected_dim,
    });
    Ok(Report::new(cli, value, text, ok))
}

fn relations(cli: &Cli, n: usize) -> Result<Report, Error> {
    let k = ColoredAlgebra::new(n)?;
    let map = BradenMap::new(&k)?;
    let report = map.check_relations()?;
    let mut text = String::new();
    let width = report.families.keys().map(String::len).max().unwrap_or(0);
    for (name, f) in &report.families {
        let _ = writeln!(
            text,
            "{name:<width$}  {:>6} checked  {:>3} failed",
            f.instances,
            f.failures.len()
        );
        for failure in f.failures.iter().take(5) {
            let _ = writeln!(text, "    {failure}");
        }
    }
    let ok = report.all_hold();
    let _ = writeln!(
        text,
        "{}",
        if ok {
            "all relations hold"
        } else {
            "relations FAIL"
        }
    );
    let value = serde_json::to_value(&report).expect("json");
    Ok(Report::new(cli, value, text, ok))
}

fn tanisaki(
    cli: &Cli,
    mu: &Composition,
    cutoff: Option<usize>,
    seed: u64,
    points: usize,
) -> Result<Report, Error> {
    let ideal = tanisaki_generators(mu);
    let dims = graded_quotient_dims(&ideal, cutoff.unwrap_or_else(|| default_cutoff(mu)))?;
    let mut interpolants = Vec::new();
    let mut interpolants_ok = true;
    for (i, (k, l)) in allowed_pairs(mu).into_iter().enumerate() {
        let f = f_construction(k, l, mu)?;
        let reduces = f.reduces_to_generator();
        let failures = vanishing_failures(&f, mu, points, seed.wrapping_add(i as u64));
        interpolants_ok &= reduces && failures == 0;
        interpolants
            .push(json!({ "k": k, "l": l, "reduces": reduces, "vanishing_failures": failures }));
    }
    let expected = mu.multinomial();
    let ok = dims.total as u128 == expected && interpolants_ok;
    let mut text = String::new();
    let _ = writeln!(text, "mu {mu}, dual {:?}", ideal.dual);
    let kinds: Vec<String> = ideal
        .kinds()
        .iter()
        .map(|(k, l)| format!("e{l}/{k}"))
        .collect();
    let _ = writeln!(
        text,
        "generators {} ({})",
        ideal.generators.len(),
        kinds.join(" ")
    );
    let _ = writeln!(text, "hilbert {:?}", dims.hilbert);
    let _ = writeln!(
        text,
        "total {} (expected {expected}), top {}",
        dims.total, dims.top
    );
    let _ = writeln!(
        text,
        "interpolants {}",
        if interpolants_ok { "ok" } else { "FAIL" }
    );
    let value = json!({
        "mu": mu.parts(),
        "generators": ideal.generators,
        "hilbert": dims.hilbert,
        "total": dims.total,
        "top": dims.top,
        "palindromic": dims.is_palindromic(),
        "interpolants": interpolants,
    });
    Ok(Report::new(cli, value, text, ok))
}

fn corner(cli: &Cli, n: usize, full: bool) -> Result<Report, Error> {
    let k = ColoredAlgebra::new(n)?;
    let report = corner_isomorphism_check(&k, full)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "corner dim {}, arc algebra dim {}",
        report.corner_dim, report.arc_algebra_dim
    );
    let _ = writeln!(
        text,
        "graded dims {}",
        if report.graded_match {
            "match"
        } else {
            "differ"
        }
    );
    let constants = match report.structure_constants_match {
        Some(true) => "match",
        Some(false) => "differ",
        None => "not compared",
    };
    let _ = writeln!(text, "structure constants {constants}");
    for m in report.mismatches.iter().take(5) {
        let _ = writeln!(text, "    {m}");
    }
    let value = serde_json::to_value(&report).expect("json");
    Ok(Report::new(cli, value, text, report.holds()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters() {
        assert_eq!(letter(0), "a");
        assert_eq!(letter(25), "z");
        assert_eq!(letter(26), "aa");
        assert_eq!(letter(69), "br");
    }

    #[test]
    fn keys_round_trip() {
        let k = ColoredAlgebra::new(2).unwrap();
        for v in k.basis() {
            assert_eq!(parse_key(&k, &basis_key(&k, v)).unwrap(), *v);
        }
        assert!(parse_key(&k, "a|b").is_err());
        assert!(parse_key(&k, "a|a|Y").is_err());
    }
}
