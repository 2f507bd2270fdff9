//! `tori`: command-line front end.
//!
//! Every command prints one JSON document on standard output. Exit codes:
//! 0 success, 1 usage error, 2 unparseable input, 3 domain or precondition
//! error. Diagnostics go to standard error only.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use tori_core::alexpoly::{axis_alexander, closure_alexander, hosokawa, AssociateClass, LaurentPoly};
use tori_core::braid::{parse_braid, BraidWord};
use tori_core::obstruct::{braided_torus_obstruction, simple_cover_obstruction};
use tori_core::surgeryfam::{family_equal, mms_evaluate, SurgeryBasisTriple};
use tori_core::swring::{adjunction_check, fibersum_relative, knot_surgery, link_surgery, ManifoldBlock};
use tori_core::Error;

#[derive(Parser)]
#[command(name = "tori", version, about = "Exact invariants of braided and surgered tori")]
struct Cli {
    /// Indent JSON output
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial of a closed braid, e.g. "2: 1 1 1"
    Alexander {
        braid: String,
        /// Include the braid axis as an extra component
        #[arg(long)]
        axis: bool,
    },
    /// Hosokawa polynomial of a closed braid with at least two components
    Hosokawa { braid: String },
    /// Knot surgery on a block along one of its classes
    KnotSurgery {
        #[arg(long)]
        block: PathBuf,
        #[arg(long)]
        braid: String,
        #[arg(long = "class")]
        class: String,
    },
    /// Link surgery, one block per component of the closed braid
    LinkSurgery {
        #[arg(long, num_args = 1.., required = true)]
        blocks: Vec<PathBuf>,
        #[arg(long)]
        link_braid: String,
    },
    /// Relative invariant of the braided torus T_B in a block
    Fibersum {
        #[arg(long)]
        block: PathBuf,
        #[arg(long)]
        braid: String,
        /// Expected strand count (defaults to the braid's)
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Evaluate a surgery triple at coefficients (p, q, r)
    #[command(allow_negative_numbers = true)]
    Mms {
        #[arg(long)]
        triple: PathBuf,
        #[arg(short = 'p')]
        p: i64,
        #[arg(short = 'q')]
        q: i64,
        #[arg(short = 'r')]
        r: i64,
    },
    /// Compare the families generated by two surgery triples
    FamilyEqual {
        #[arg(long)]
        t1: PathBuf,
        #[arg(long)]
        t2: PathBuf,
    },
    /// Axis-link obstruction to isotopy of two braided tori
    Distinguish { braid1: String, braid2: String },
    /// Hosokawa obstruction for two three-component closed braids
    SimpleCover { braid1: String, braid2: String },
    /// Adjunction inequality 2g - 2 >= s + p for each pairing p
    #[command(allow_negative_numbers = true)]
    Adjunction {
        #[arg(short = 'g')]
        genus: u64,
        #[arg(short = 's')]
        self_intersection: i64,
        #[arg(long, num_args = 0.., value_delimiter = ',')]
        pairings: Vec<i64>,
    },
}

enum Failure {
    Input(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<serde_json::Value, Failure>;

fn braid(text: &str) -> Result<BraidWord, Failure> {
    parse_braid(text).map_err(|e| Failure::Input(format!("braid `{text}`: {e}")))
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn value<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("serializable")
}

/// Representative with a positive value at 1 when that value is nonzero.
fn positive_at_one(p: &LaurentPoly) -> LaurentPoly {
    if p.eval_at_one() < 0.into() {
        -p
    } else {
        p.clone()
    }
}

fn require_knot(b: &BraidWord) -> Result<(), Failure> {
    let c = b.closure();
    if c.is_knot() {
        Ok(())
    } else {
        Err(Error::NotAKnot(c.count).into())
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Alexander { braid: text, axis } => {
            let b = braid(&text)?;
            let delta = if axis { axis_alexander(&b)? } else { closure_alexander(&b)? };
            let poly = positive_at_one(delta.poly());
            let sym = match poly.symmetrize() {
                Ok(s) => value(&positive_at_one(&s)),
                Err(Error::AsymmetricSupport) => serde_json::Value::Null,
                Err(e) => return Err(e.into()),
            };
            Ok(json!({
                "braid": b.to_string(),
                "axis": axis,
                "components": delta.vars().len(),
                "alexander": value(&poly),
                "symmetrized": sym,
                "at_one": poly.eval_at_one().to_string(),
            }))
        }
        Command::Hosokawa { braid: text } => {
            let b = braid(&text)?;
            let k = b.closure().count;
            let nabla = hosokawa(closure_alexander(&b)?.poly(), k)?;
            Ok(json!({ "braid": b.to_string(), "components": k, "hosokawa": value(nabla.poly()) }))
        }
        Command::KnotSurgery { block, braid: text, class } => {
            let x: ManifoldBlock = load(&block)?;
            let b = braid(&text)?;
            require_knot(&b)?;
            Ok(value(&knot_surgery(&x, &closure_alexander(&b)?, &class)?))
        }
        Command::LinkSurgery { blocks, link_braid } => {
            let xs = blocks.iter().map(|p| load(p)).collect::<Result<Vec<ManifoldBlock>, _>>()?;
            let b = braid(&link_braid)?;
            Ok(value(&link_surgery(&xs, &closure_alexander(&b)?)?))
        }
        Command::Fibersum { block, braid: text, strands } => {
            let x: ManifoldBlock = load(&block)?;
            let b = braid(&text)?;
            let m = strands.unwrap_or(b.strands());
            Ok(value(&fibersum_relative(&x, &b, m)?))
        }
        Command::Mms { triple, p, q, r } => {
            let tr: SurgeryBasisTriple = load(&triple)?;
            Ok(value(&mms_evaluate(&tr, p, q, r)))
        }
        Command::FamilyEqual { t1, t2 } => {
            let a: SurgeryBasisTriple = load(&t1)?;
            let b: SurgeryBasisTriple = load(&t2)?;
            Ok(value(&family_equal(&a, &b)))
        }
        Command::Distinguish { braid1, braid2 } => {
            let (b1, b2) = (braid(&braid1)?, braid(&braid2)?);
            Ok(value(&braided_torus_obstruction(&b1, &b2)?))
        }
        Command::SimpleCover { braid1, braid2 } => {
            let (b1, b2) = (braid(&braid1)?, braid(&braid2)?);
            let d = |b: &BraidWord| -> Result<(AssociateClass, usize), Failure> {
                Ok((closure_alexander(b)?, b.closure().count))
            };
            let ((d1, k1), (d2, k2)) = (d(&b1)?, d(&b2)?);
            Ok(value(&simple_cover_obstruction(&d1, &d2, k1, k2)?))
        }
        Command::Adjunction { genus, self_intersection, pairings } => {
            Ok(json!(adjunction_check(genus, self_intersection, &pairings)?))
        }
    }
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
    match run(cli.command) {
        Ok(v) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&v)
            } else {
                serde_json::to_string(&v)
            };
            println!("{}", text.expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
