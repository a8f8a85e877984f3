use std::io::Read;
use std::panic;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symplectic_keys::demazure::character;
use symplectic_keys::jdt::frank_shape;
use symplectic_keys::keys::key;
use symplectic_keys::plactic::try_insert;
use symplectic_keys::*;

#[derive(Parser)]
#[command(name = "sympkeys", version, about = "Symplectic crystals, keys and Demazure atoms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AtomMethod {
    Keys,
    Difference,
}

#[derive(clap::Args, Clone)]
struct Common {
    /// Rank n of the alphabet 1..n, -n..-1. Inferred from the input when omitted.
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a (skew) filling is a Kashiwara-Nakashima tableau.
    Validate {
        #[command(flatten)]
        common: Common,
        /// Tableau file in row format, or "-" for standard input.
        #[arg(long)]
        tableau: String,
    },
    /// Admissibility and left/right columns of a column given as a word.
    Split {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Insertion tableau of a word.
    Insert {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Insertion tableau and the shapes of the prefix insertions.
    Rs {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Rectification of a skew tableau.
    Rectify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tableau: String,
    },
    /// The frank skew tableau of a given shape rectifying to the input.
    ///
    /// With --inner, --shape and --inner are the outer and inner partitions.
    /// Otherwise --shape lists column lengths left to right, laid out with
    /// shorter right neighbours top-aligned and longer ones bottom-aligned.
    Reshape {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        inner: Option<String>,
    },
    /// The crystal graph of KN(shape, rank).
    Crystal {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        shape: String,
    },
    /// Right or left key of a tableau.
    Key {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
    /// Demazure atom of a weight in the orbit of a partition.
    Atom {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "keys")]
        method: AtomMethod,
    },
    /// Demazure crystal of a weight.
    Demazure {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Key polynomial of a weight, its atom with --atom, or the character
    /// of a shape when only --shape is given.
    Charpoly {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        atom: bool,
    },
    /// Bruhat comparison v <= u of two weights in the same orbit.
    Bruhat {
        #[command(flatten)]
        common: Common,
        /// Pass twice: first v, then u.
        #[arg(long, allow_hyphen_values = true, num_args = 1, required = true)]
        weight: Vec<String>,
    },
    /// Minimal signed permutation carrying the dominant weight to the input.
    CosetRep {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Evacuation of a tableau.
    Evacuate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tableau: String,
    },
    /// Signed-permutation orbit of a partition.
    Orbit {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        shape: String,
    },
}

enum Failure {
    Input(String, String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.code().to_string(), e.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

fn input(code: &str, msg: impl Into<String>) -> Failure {
    Failure::Input(code.to_string(), msg.into())
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| input("io", e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| input("io", format!("{path}: {e}")))
    }
}

fn max_entry(values: impl IntoIterator<Item = i32>) -> usize {
    values.into_iter().map(|v| v.unsigned_abs() as usize).max().unwrap_or(0).max(1)
}

fn load_tableau(path: &str, rank: Option<usize>) -> Result<Tableau, Failure> {
    let text = read_source(path)?;
    let rank = match rank {
        Some(r) => r,
        None => max_entry(
            text.split_whitespace().filter(|t| *t != ".").filter_map(|t| t.parse::<i32>().ok()),
        ),
    };
    Ok(Tableau::parse(rank, &text)?)
}

fn load_word(text: &str, rank: Option<usize>) -> Result<Word, Failure> {
    let values: Vec<i32> = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|_| input("parse", format!("bad letter {t:?}"))))
            .collect::<Result<_, _>>()?
    };
    let rank = rank.unwrap_or_else(|| max_entry(values.iter().copied()));
    Ok(Word::new(rank, &values)?)
}

fn load_weight(text: &str, rank: Option<usize>) -> Result<Weight, Failure> {
    let w = Weight::parse(text)?;
    match rank {
        Some(r) if r != w.rank() => Err(Error::WeightLength { expected: r, found: w.rank() }.into()),
        _ => Ok(w),
    }
}

fn load_partition(text: &str) -> Result<Partition, Failure> {
    Ok(Partition::parse(text)?)
}

fn rank_for_shape(rank: Option<usize>, shape: &Partition) -> usize {
    rank.unwrap_or_else(|| shape.length().max(1))
}

fn parse_lengths(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| input("parse", format!("bad column length {t:?}"))))
        .collect()
}

fn tableau_json(t: &Tableau) -> Value {
    let rows: Vec<Value> = t
        .rows()
        .into_iter()
        .map(|r| Value::Array(r.into_iter().map(|c| c.map_or(Value::Null, |l| json!(l.value()))).collect()))
        .collect();
    Value::Array(rows)
}

fn tableau_out(t: &Tableau, format: Format) -> String {
    match format {
        Format::Json => tableau_json(t).to_string(),
        _ => t.to_string(),
    }
}

fn set_out(ts: &[Tableau], format: Format) -> String {
    match format {
        Format::Json => Value::Array(ts.iter().map(tableau_json).collect()).to_string(),
        _ => ts.iter().map(Tableau::to_string).collect::<Vec<_>>().join("\n\n"),
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { common, tableau } => {
            let t = load_tableau(&tableau, common.rank)?;
            check_kn(&t).map_err(|v| input(v.code(), v.to_string()))?;
            Ok(match common.format {
                Format::Json => json!({"kn": true}).to_string(),
                _ => "valid".to_string(),
            })
        }
        Command::Split { common, word } => {
            let w = load_word(&word, common.rank)?;
            let c = Column::new(w.letters().to_vec())?;
            let s = split(&c)?;
            Ok(match common.format {
                Format::Json => json!({
                    "left": s.left.values(),
                    "right": s.right.values(),
                    "pairs": s.pairs,
                })
                .to_string(),
                _ => format!("left {}\nright {}", join(&s.left.values()), join(&s.right.values())),
            })
        }
        Command::Insert { common, word } => {
            let w = load_word(&word, common.rank)?;
            Ok(tableau_out(&try_insert(&w)?, common.format))
        }
        Command::Rs { common, word } => {
            let w = load_word(&word, common.rank)?;
            let p = try_insert(&w)?;
            let (_, q) = rs(&w);
            Ok(match common.format {
                Format::Json => json!({"p": tableau_json(&p), "q": q}).to_string(),
                _ => {
                    let shapes: Vec<String> = q.0.iter().map(|s| format!("({})", join(s))).collect();
                    format!("{p}\n\nQ {}", shapes.join(" "))
                }
            })
        }
        Command::Rectify { common, tableau } => {
            let t = load_tableau(&tableau, common.rank)?;
            Ok(tableau_out(&rectify(&t)?, common.format))
        }
        Command::Reshape { common, tableau, shape, inner } => {
            let t = load_tableau(&tableau, common.rank)?;
            let target = match inner {
                Some(inner) => SkewShape::new(load_partition(&shape)?, load_partition(&inner)?)?,
                None => frank_shape(&parse_lengths(&shape)?)?,
            };
            Ok(tableau_out(&reshape(&t, &target)?, common.format))
        }
        Command::Crystal { common, shape } => {
            let lambda = load_partition(&shape)?;
            let g = build_crystal(&lambda, rank_for_shape(common.rank, &lambda))?;
            Ok(match common.format {
                Format::Json => g.to_json().to_string(),
                Format::Dot => g.to_dot(),
                Format::Text => {
                    let mut out = format!("{} vertices, {} edges", g.len(), g.edges().len());
                    for &(s, i, d) in g.edges() {
                        let (a, b) = (&g.vertices()[s], &g.vertices()[d]);
                        out.push_str(&format!("\n{} -{i}-> {}", inline(a), inline(b)));
                    }
                    out
                }
            })
        }
        Command::Key { common, tableau, side } => {
            let t = load_tableau(&tableau, common.rank)?;
            let side = match side {
                SideArg::Right => Side::Right,
                SideArg::Left => Side::Left,
            };
            Ok(tableau_out(&key(&t, side)?, common.format))
        }
        Command::Atom { common, weight, method } => {
            let v = load_weight(&weight, common.rank)?;
            let set = match method {
                AtomMethod::Keys => atom_via_keys(&v)?,
                AtomMethod::Difference => atom_via_difference(&v)?,
            };
            Ok(set_out(set.members(), common.format))
        }
        Command::Demazure { common, weight } => {
            let v = load_weight(&weight, common.rank)?;
            Ok(set_out(demazure_crystal(&v).members(), common.format))
        }
        Command::Charpoly { common, weight, shape, atom } => {
            let p = match (weight, shape) {
                (Some(w), None) => {
                    let v = load_weight(&w, common.rank)?;
                    if atom {
                        atom_polynomial(&v)?
                    } else {
                        key_polynomial(&v)
                    }
                }
                (None, Some(s)) => {
                    let lambda = load_partition(&s)?;
                    character(&lambda, rank_for_shape(common.rank, &lambda))?
                }
                _ => return Err(input("usage", "give exactly one of --weight and --shape")),
            };
            Ok(match common.format {
                Format::Json => serde_json::to_string(&p).expect("polynomials serialize"),
                _ => p.to_string(),
            })
        }
        Command::Bruhat { common, weight } => {
            let [v, u] = weight.as_slice() else {
                return Err(input("usage", "bruhat needs --weight twice"));
            };
            let (v, u) = (load_weight(v, common.rank)?, load_weight(u, common.rank)?);
            let r = bruhat_leq(&v, &u)?;
            Ok(match common.format {
                Format::Json => json!({"leq": r}).to_string(),
                _ => r.to_string(),
            })
        }
        Command::CosetRep { common, weight } => {
            let v = load_weight(&weight, common.rank)?;
            let s = minimal_coset_rep(&v);
            Ok(match common.format {
                Format::Json => json!({"window": s.window(), "length": s.length(), "reduced_word": s.reduced_word()})
                    .to_string(),
                _ => s.to_string(),
            })
        }
        Command::Evacuate { common, tableau } => {
            let t = load_tableau(&tableau, common.rank)?;
            check_kn(&t).map_err(|v| input(v.code(), v.to_string()))?;
            if !t.is_straight() {
                return Err(input("shape-mismatch", "evacuation needs a straight tableau"));
            }
            Ok(tableau_out(&evacuate(&t), common.format))
        }
        Command::Orbit { common, shape } => {
            let lambda = load_partition(&shape)?;
            let orb = orbit(&lambda, rank_for_shape(common.rank, &lambda));
            Ok(match common.format {
                Format::Json => Value::Array(orb.iter().map(|w| json!(w.entries())).collect()).to_string(),
                _ => orb.iter().map(|w| join(w.entries())).collect::<Vec<_>>().join("\n"),
            })
        }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn inline(t: &Tableau) -> String {
    t.to_string().replace('\n', " / ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    panic::set_hook(Box::new(|info| eprintln!("error[internal]: {info}")));
    match panic::catch_unwind(|| run(cli.command)) {
        Ok(Ok(out)) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Err(Failure::Input(code, msg))) => {
            eprintln!("error[{code}]: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("error[internal]: {msg}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(2),
    }
}
