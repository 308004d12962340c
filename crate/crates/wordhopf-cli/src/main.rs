//! Command-line frontend: parse elements in the shared grammar, dispatch
//! computations in a chosen algebra, and run the verification suites.
//!
//! Exit codes: 0 success or all checks passed, 1 verification failure,
//! 2 parse or usage error, 3 precondition violation.

mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use wordhopf::dwha::{subst_compose, DwhaAlgebra, DwhaPairing, Substitution};
use wordhopf::endo::{act, ActionKind};
use wordhopf::hopf::{AntipodeTable, HopfAlgebra, Pairing};
use wordhopf::lincomb::{Coeff, LinComb, Tensor};
use wordhopf::mpr::{compose as mpr_compose, MprAlgebra, MprPairing};
use wordhopf::nsymm::NsymmAlgebra;
use wordhopf::shuffle_algebra::ShuffleAlgebra;
use wordhopf::text::{
    display_with_unit, parse_expr, parse_single, sorted_terms, sorted_tensor_terms, BasisSyntax,
};
use wordhopf::wha::{decode, encode, WhaAlgebra};
use wordhopf::words::{PermWord, Word};

#[derive(Parser)]
#[command(
    name = "wordhopf",
    about = "Exact computations and verification in word Hopf algebras over the integers",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algebra {
    Shuffle,
    Nsymm,
    Mpr,
    Wha,
    Dwha,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two expressions in the selected algebra.
    Mul {
        #[arg(long, value_enum)]
        algebra: Algebra,
        lhs: String,
        rhs: String,
        #[arg(long)]
        json: bool,
    },
    /// Comultiply an expression in the selected algebra.
    Comul {
        #[arg(long, value_enum)]
        algebra: Algebra,
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply the antipode to an expression in the selected algebra.
    Antipode {
        #[arg(long, value_enum)]
        algebra: Algebra,
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the inner product of two expressions (mpr and dwha only).
    Pair {
        #[arg(long, value_enum)]
        algebra: Algebra,
        lhs: String,
        rhs: String,
    },
    /// Embed a permutation word into the substitution algebra.
    Embed {
        perm: String,
        #[arg(long)]
        json: bool,
    },
    /// Encode an integer word as its run-form substitution.
    Encode {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Decode a run-form substitution back to an integer word.
    Decode {
        subst: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply an endomorphism recipe to a basis word of the shuffle algebra.
    Act {
        #[command(flatten)]
        recipe: RecipeArg,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Compose two permutations (mpr) or two substitution recipes (dwha).
    Compose {
        #[arg(long, value_enum)]
        algebra: Algebra,
        lhs: String,
        rhs: String,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites and print one report line per law.
    Verify(verify::VerifyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RecipeArg {
    /// Permutation word recipe, e.g. "[3,1,4,5,2]".
    #[arg(long)]
    perm: Option<String>,
    /// Substitution recipe, e.g. "{[1,2,1]/[2,1,2]}".
    #[arg(long)]
    subst: Option<String>,
    /// Arbitrary word acting by positions through its height, e.g. "[3,2,7,2,4]".
    #[arg(long)]
    naive: Option<String>,
}

/// A command error carrying the exit code mandated by the interface.
enum CmdError {
    Parse(String),
    Precondition(String),
}

impl CmdError {
    fn exit(self) -> ExitCode {
        match self {
            CmdError::Parse(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CmdError::Precondition(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

type CmdResult = Result<(), CmdError>;

fn parse<B: BasisSyntax>(input: &str) -> Result<LinComb<B>, CmdError> {
    parse_expr(input).map_err(|e| CmdError::Parse(e.to_string()))
}

fn single<B: BasisSyntax>(input: &str) -> Result<B, CmdError> {
    parse_single(input).map_err(|e| CmdError::Parse(e.to_string()))
}

fn print_lincomb<B: BasisSyntax>(lc: &LinComb<B>, json: bool) {
    if json {
        println!("{}", terms_json(sorted_terms(lc)));
    } else {
        println!("{}", display_with_unit(lc));
    }
}

fn print_tensor<B: BasisSyntax>(lc: &LinComb<Tensor<B, B>>, json: bool) {
    if json {
        println!("{}", terms_json(sorted_tensor_terms(lc)));
    } else {
        println!("{}", wordhopf::text::display_tensor_with_unit(lc));
    }
}

fn terms_json(terms: Vec<(String, Coeff)>) -> String {
    let items: Vec<serde_json::Value> = terms
        .into_iter()
        .map(|(basis, coeff)| {
            serde_json::json!({ "coeff": coeff.to_string(), "basis": basis })
        })
        .collect();
    serde_json::json!({ "terms": items }).to_string()
}

fn cmd_mul(algebra: Algebra, lhs: &str, rhs: &str, json: bool) -> CmdResult {
    fn run<H: HopfAlgebra>(h: &H, lhs: &str, rhs: &str, json: bool) -> CmdResult
    where
        H::Basis: BasisSyntax,
    {
        let a: LinComb<H::Basis> = parse(lhs)?;
        let b = parse(rhs)?;
        print_lincomb(&wordhopf::hopf::product_lin(h, &a, &b), json);
        Ok(())
    }
    match algebra {
        Algebra::Shuffle => run(&ShuffleAlgebra, lhs, rhs, json),
        Algebra::Nsymm => run(&NsymmAlgebra, lhs, rhs, json),
        Algebra::Mpr => run(&MprAlgebra, lhs, rhs, json),
        Algebra::Wha => run(&WhaAlgebra, lhs, rhs, json),
        Algebra::Dwha => run(&DwhaAlgebra, lhs, rhs, json),
    }
}

fn cmd_comul(algebra: Algebra, expr: &str, json: bool) -> CmdResult {
    fn run<H: HopfAlgebra>(h: &H, expr: &str, json: bool) -> CmdResult
    where
        H::Basis: BasisSyntax,
    {
        let x: LinComb<H::Basis> = parse(expr)?;
        print_tensor(&wordhopf::hopf::coproduct_lin(h, &x), json);
        Ok(())
    }
    match algebra {
        Algebra::Shuffle => run(&ShuffleAlgebra, expr, json),
        Algebra::Nsymm => run(&NsymmAlgebra, expr, json),
        Algebra::Mpr => run(&MprAlgebra, expr, json),
        Algebra::Wha => run(&WhaAlgebra, expr, json),
        Algebra::Dwha => run(&DwhaAlgebra, expr, json),
    }
}

fn cmd_antipode(algebra: Algebra, expr: &str, json: bool) -> CmdResult {
    fn run<H: HopfAlgebra>(h: &H, expr: &str, json: bool) -> CmdResult
    where
        H::Basis: BasisSyntax,
    {
        let x: LinComb<H::Basis> = parse(expr)?;
        let mut table = AntipodeTable::new(h);
        print_lincomb(&x.lift(|b| table.get(b)), json);
        Ok(())
    }
    match algebra {
        Algebra::Shuffle => run(&ShuffleAlgebra, expr, json),
        Algebra::Nsymm => run(&NsymmAlgebra, expr, json),
        Algebra::Mpr => run(&MprAlgebra, expr, json),
        Algebra::Wha => run(&WhaAlgebra, expr, json),
        Algebra::Dwha => run(&DwhaAlgebra, expr, json),
    }
}

fn cmd_pair(algebra: Algebra, lhs: &str, rhs: &str) -> CmdResult {
    fn run<B: BasisSyntax, P: Pairing<B>>(p: &P, lhs: &str, rhs: &str) -> CmdResult {
        let a: LinComb<B> = parse(lhs)?;
        let b: LinComb<B> = parse(rhs)?;
        let mut value = Coeff::from(0);
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                value += cx * cy * p.pair(x, y);
            }
        }
        println!("{value}");
        Ok(())
    }
    match algebra {
        Algebra::Mpr => run::<PermWord, _>(&MprPairing, lhs, rhs),
        Algebra::Dwha => run::<Substitution, _>(&DwhaPairing, lhs, rhs),
        _ => Err(CmdError::Precondition(
            "no inner product is defined for this algebra (use mpr or dwha)".to_string(),
        )),
    }
}

fn cmd_embed(perm: &str, json: bool) -> CmdResult {
    let p: PermWord = single(perm)?;
    print_basis(&wordhopf::dwha::embed(&p), json);
    Ok(())
}

fn cmd_encode(word: &str, json: bool) -> CmdResult {
    let w: Word = single(word)?;
    print_basis(&encode(&w), json);
    Ok(())
}

fn cmd_decode(subst: &str, json: bool) -> CmdResult {
    let s: Substitution = single(subst)?;
    let w = decode(&s).map_err(|e| CmdError::Precondition(e.to_string()))?;
    print_basis(&w, json);
    Ok(())
}

fn print_basis<B: std::fmt::Display>(b: &B, json: bool) {
    if json {
        println!(
            "{}",
            terms_json(vec![(b.to_string(), Coeff::from(1))])
        );
    } else {
        println!("{b}");
    }
}

fn cmd_act(recipe: &RecipeArg, word: &str, json: bool) -> CmdResult {
    let kind = if let Some(p) = &recipe.perm {
        ActionKind::Perm(single(p)?)
    } else if let Some(s) = &recipe.subst {
        ActionKind::Subst(single(s)?)
    } else if let Some(n) = &recipe.naive {
        ActionKind::Naive(single(n)?)
    } else {
        unreachable!("clap enforces exactly one recipe")
    };
    let w: Word = single(word)?;
    print_lincomb(&act(&kind, &w), json);
    Ok(())
}

fn cmd_compose(algebra: Algebra, lhs: &str, rhs: &str, json: bool) -> CmdResult {
    match algebra {
        Algebra::Mpr => {
            let a: PermWord = single(lhs)?;
            let b: PermWord = single(rhs)?;
            print_lincomb(&mpr_compose(&a, &b), json);
            Ok(())
        }
        Algebra::Dwha => {
            let a: Substitution = single(lhs)?;
            let b: Substitution = single(rhs)?;
            print_lincomb(&subst_compose(&a, &b), json);
            Ok(())
        }
        _ => Err(CmdError::Precondition(
            "composition is defined for mpr and dwha only".to_string(),
        )),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Mul { algebra, lhs, rhs, json } => cmd_mul(*algebra, lhs, rhs, *json),
        Cmd::Comul { algebra, expr, json } => cmd_comul(*algebra, expr, *json),
        Cmd::Antipode { algebra, expr, json } => cmd_antipode(*algebra, expr, *json),
        Cmd::Pair { algebra, lhs, rhs } => cmd_pair(*algebra, lhs, rhs),
        Cmd::Embed { perm, json } => cmd_embed(perm, *json),
        Cmd::Encode { word, json } => cmd_encode(word, *json),
        Cmd::Decode { subst, json } => cmd_decode(subst, *json),
        Cmd::Act { recipe, word, json } => cmd_act(recipe, word, *json),
        Cmd::Compose { algebra, lhs, rhs, json } => cmd_compose(*algebra, lhs, rhs, *json),
        Cmd::Verify(args) => return verify::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => e.exit(),
    }
}
