use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thompson_knots::action::{evaluate, DigitWord};
use thompson_knots::invariants::{components, jones_polynomial, kauffman_bracket, writhe};
use thompson_knots::link::{build_link_checked, oriented_link, render_svg};
use thompson_knots::morphisms::{flip, iota, phi, ren_embed, shift_left, shift_right};
use thompson_knots::strip::strip_three_color;
use thompson_knots::tait::{oriented_witness, tait_graph, two_color};
use thompson_knots::word::{abelianization, in_rectangular, is_positive, normal_form, word_to_diagram};
use thompson_knots::{canonical_pd, Arity, Error, GeneratorWord, LinkDiagram, TreeDiagram};

#[derive(Parser)]
#[command(name = "thompson", version, about = "Thompson group elements and the links they give")]
struct Cli {
    /// Group the input words live in.
    #[arg(long, value_enum, default_value_t = Family::F, global = true)]
    family: Family,

    /// Worker threads for the bracket state sum.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    F,
    F3,
    F4,
}

impl Family {
    fn arity(self) -> Arity {
        match self {
            Family::F => Arity::BINARY,
            Family::F3 => Arity::TERNARY,
            Family::F4 => Arity::QUATERNARY,
        }
    }
}

/// One element: a word, a `top|bottom` diagram, or a file with one of
/// those per line.
#[derive(Args)]
struct Source {
    word: Option<String>,

    /// Read inputs from a file, one per line; `#` starts a comment.
    #[arg(long, conflicts_with_all = ["word", "diagram"])]
    file: Option<PathBuf>,

    /// Tree diagram in the form `top|bottom`.
    #[arg(long, conflicts_with = "word")]
    diagram: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an element of F.
    Nf(Source),
    /// Reduced diagram of a product.
    Mul { left: String, right: String },
    /// Reduced diagram of the inverse.
    Inv(Source),
    /// Subgroup membership with a witness.
    Member {
        #[command(flatten)]
        src: Source,
        /// oriented, 3color, positive or rect:a:b
        #[arg(long = "in")]
        subgroup: String,
    },
    /// Image of a point under the action on [0,1].
    Act { word: String, point: String },
    /// Tait graph.
    Tait {
        #[command(flatten)]
        src: Source,
        /// Write Graphviz output here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Link diagram as a PD code.
    Link {
        #[command(flatten)]
        src: Source,
        /// Write the PD code here instead of stdout.
        #[arg(long)]
        pd: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Use the orientation from the Tait graph coloring.
        #[arg(long)]
        oriented: bool,
    },
    /// Link invariants.
    Invariant {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        which: Which,
        /// Print the Jones polynomial in t = A^-4.
        #[arg(long, requires = "jones")]
        t: bool,
    },
    /// Apply a homomorphism.
    Map {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        which: MapWhich,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Which {
    #[arg(long)]
    components: bool,
    #[arg(long)]
    bracket: bool,
    #[arg(long)]
    jones: bool,
    #[arg(long)]
    writhe: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MapWhich {
    #[arg(long)]
    iota: bool,
    #[arg(long)]
    ren: bool,
    #[arg(long)]
    phi: bool,
    #[arg(long)]
    flip: bool,
    #[arg(long = "shift-l")]
    shift_l: bool,
    #[arg(long = "shift-r")]
    shift_r: bool,
}

enum Failure {
    Domain(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Inconsistency(_) => Failure::Internal(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

type Run<T> = Result<T, Failure>;

fn parse_element(text: &str, arity: Arity) -> Run<TreeDiagram> {
    if text.contains('|') {
        return Ok(TreeDiagram::parse(text, arity)?);
    }
    let w: GeneratorWord = text.parse()?;
    Ok(word_to_diagram(&w, arity)?)
}

impl Source {
    fn inputs(&self) -> Run<Vec<String>> {
        if let Some(p) = &self.file {
            let text = fs::read_to_string(p).map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))?;
            return Ok(text
                .lines()
                .map(|l| l.split('#').next().unwrap().trim())
                .filter(|l| !l.is_empty())
                .map(str::to_string)
                .collect());
        }
        match (&self.word, &self.diagram) {
            (Some(w), _) => Ok(vec![w.clone()]),
            (None, Some(d)) if d.contains('|') => Ok(vec![d.clone()]),
            (None, Some(d)) => Err(Failure::Domain(format!("diagram `{d}` has no `|`"))),
            (None, None) => Err(Failure::Domain("no input: give a word, --diagram or --file".into())),
        }
    }

    fn elements(&self, arity: Arity) -> Run<Vec<TreeDiagram>> {
        self.inputs()?.iter().map(|s| parse_element(s, arity)).collect()
    }

    fn single(&self, arity: Arity) -> Run<TreeDiagram> {
        let mut v = self.elements(arity)?;
        if v.len() != 1 {
            return Err(Failure::Domain(format!("file output needs exactly one input, got {}", v.len())));
        }
        Ok(v.pop().unwrap())
    }
}

fn write_out(path: &Path, text: &str) -> Run<()> {
    fs::write(path, text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn member(d: &TreeDiagram, subgroup: &str) -> Run<String> {
    let answer = |yes: bool, witness: String| {
        if yes {
            "yes".to_string()
        } else {
            format!("no\n{witness}")
        }
    };
    Ok(match subgroup {
        "oriented" => match oriented_witness(d)? {
            Ok(_) => answer(true, String::new()),
            Err(cycle) => answer(false, cycle.to_string()),
        },
        "3color" => match strip_three_color(d)? {
            Ok(_) => answer(true, String::new()),
            Err(conflict) => answer(false, conflict.to_string()),
        },
        "positive" => {
            if d.arity() == Arity::BINARY {
                let nf = normal_form(d)?;
                let neg = thompson_knots::word::NormalForm { a: Vec::new(), b: nf.b.clone() };
                answer(nf.is_positive(), format!("negative part {neg}"))
            } else {
                answer(is_positive(d), format!("bottom tree {}", d.reduce().bottom()))
            }
        }
        rect => {
            let bad = || Failure::Domain(format!("unknown subgroup `{rect}`"));
            let (a, b) = rect.strip_prefix("rect:").and_then(|r| r.split_once(':')).ok_or_else(bad)?;
            let a: u32 = a.parse().map_err(|_| bad())?;
            let b: u32 = b.parse().map_err(|_| bad())?;
            answer(in_rectangular(d, a, b)?, format!("pi = {}", abelianization(d)?))
        }
    })
}

/// Jones's orientation when the element has one, otherwise the one read
/// off by tracing each component.
fn orient(d: &TreeDiagram, l: LinkDiagram) -> Run<LinkDiagram> {
    Ok(match oriented_link(d)? {
        Ok(o) => o,
        Err(_) => l.orient_by_tracing(),
    })
}

fn invariant(d: &TreeDiagram, which: &Which, t: bool) -> Run<String> {
    let l = build_link_checked(d)?;
    Ok(if which.components {
        components(&l).to_string()
    } else if which.bracket {
        kauffman_bracket(&l)?.to_string()
    } else if which.writhe {
        writhe(&orient(d, l)?)?.to_string()
    } else {
        let v = jones_polynomial(&orient(d, l)?)?;
        match (t, v.to_t_string()) {
            (true, Some(s)) => s,
            (true, None) => return Err(Failure::Domain(format!("{v} has exponents outside 4Z"))),
            (false, _) => v.to_string(),
        }
    })
}

fn show(d: &TreeDiagram) -> Run<String> {
    Ok(if d.arity() == Arity::BINARY { normal_form(d)?.to_string() } else { d.reduce().to_string() })
}

fn map(d: &TreeDiagram, which: &MapWhich) -> Run<String> {
    let image = if which.iota {
        iota(d)?
    } else if which.ren {
        ren_embed(d)?
    } else if which.phi {
        phi(d)?
    } else if which.flip {
        flip(d)
    } else if which.shift_l {
        shift_left(d)
    } else {
        shift_right(d)
    };
    show(&image)
}

fn run(cli: &Cli) -> Run<String> {
    let k = cli.family.arity();
    let mut out = String::new();
    let mut each = |src: &Source, f: &dyn Fn(&TreeDiagram) -> Run<String>| -> Run<()> {
        for d in src.elements(k)? {
            writeln!(out, "{}", f(&d)?).unwrap();
        }
        Ok(())
    };
    match &cli.command {
        Command::Nf(src) => each(src, &|d| Ok(normal_form(d)?.to_string()))?,
        Command::Inv(src) => each(src, &|d| Ok(d.invert().reduce().to_string()))?,
        Command::Member { src, subgroup } => each(src, &|d| member(d, subgroup))?,
        Command::Invariant { src, which, t } => each(src, &|d| invariant(d, which, *t))?,
        Command::Map { src, which } => each(src, &|d| map(d, which))?,
        Command::Mul { left, right } => {
            let p = parse_element(left, k)?.multiply(&parse_element(right, k)?)?;
            writeln!(out, "{}", p.reduce()).unwrap();
        }
        Command::Act { word, point } => {
            let t = DigitWord::parse(point, k.get() as u8)?;
            writeln!(out, "{}", evaluate(&parse_element(word, k)?, &t)?).unwrap();
        }
        Command::Tait { src, dot: None } => each(src, &|d| Ok(tait_graph(d)?.to_string()))?,
        Command::Tait { src, dot: Some(path) } => {
            let g = tait_graph(&src.single(k)?)?;
            write_out(path, &g.to_dot(two_color(&g).ok().as_ref()))?;
            writeln!(out, "{g}").unwrap();
        }
        Command::Link { src, pd, svg, oriented } => {
            if pd.is_none() && svg.is_none() {
                each(src, &|d| link(d, *oriented).map(|(_, s)| s.trim_end().to_string()))?;
            } else {
                let (l, text) = link(&src.single(k)?, *oriented)?;
                match pd {
                    Some(p) => write_out(p, &text)?,
                    None => out.push_str(&text),
                }
                if let Some(p) = svg {
                    write_out(p, &render_svg(&l))?;
                }
            }
        }
    }
    Ok(out)
}

fn link(d: &TreeDiagram, oriented: bool) -> Run<(LinkDiagram, String)> {
    let l = build_link_checked(d)?;
    let mut text = canonical_pd(&l).to_string();
    if !oriented {
        return Ok((l, text));
    }
    let o = match oriented_link(d)? {
        Ok(o) => o,
        Err(cycle) => return Err(Failure::Domain(format!("not in an oriented subgroup: {cycle}"))),
    };
    writeln!(text, "writhe={}", writhe(&o)?).unwrap();
    Ok((o, text))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
