//! `gwa`: command-line surface of the kernel. Every subcommand maps onto
//! one library operation. Exit codes: 0 verdict true / success, 1 verdict
//! false, 2 usage or input error.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};

use gwa_core::checkers::{
    self, elementary_symmetric, membership_polynomial, membership_symmetric, CheckReport,
};
use gwa_core::expr::{parse_element, parse_poly, parse_rational, parse_ratfunc, parse_skew};
use gwa_core::group::{enumerate_group, Permutation, DEFAULT_GROUP_CAP};
use gwa_core::gwa::{GwaElement, GwaPresentation};
use gwa_core::json::presentation_from_json;
use gwa_core::poly::Poly;
use gwa_core::ratfunc::RatFunc;
use gwa_core::skew::{embed_in, SkewContext, SkewElement};
use gwa_core::{KernelError, Result};

#[derive(Parser)]
#[command(
    name = "gwa",
    version,
    about = "Exact kernel for generalized Weyl algebras, skew group rings, and Galois-order checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an element over an algebra and print its normal form.
    Normalize {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Multiply two elements and print the normal-form product.
    Mul {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the skew-ring image of an element at a rational function.
    Eval {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        at: String,
        #[arg(long)]
        json: bool,
    },
    /// Embed an element into the skew group ring and print it.
    Embed {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide simplicity of a rank-1 classical or quantum presentation.
    CheckSimple {
        #[arg(long = "type", value_parser = ["classical", "quantum"])]
        kind: String,
        /// Defining element, e.g. "h*(h-2)".
        #[arg(long)]
        a: String,
        /// Scaling parameter for the quantum type, e.g. "2" or "1/2".
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check that generator supports generate the degree lattice as a monoid.
    CheckGaloisGen {
        #[arg(long)]
        algebra: PathBuf,
        /// Element expression; repeat for several generators.
        #[arg(long = "expr")]
        exprs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Bounded certificate that every generator maps Gamma into Gamma.
    CheckPrincipal {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, default_value_t = 4)]
        deg_bound: u32,
        /// Use the symmetric-invariant Gamma and generator set.
        #[arg(long)]
        symmetric: bool,
        /// Skew element in textual form, e.g. "1/h * m[0]"; repeatable.
        #[arg(long = "skew-gen")]
        skew_gens: Vec<String>,
        /// Gamma generator as a polynomial expression; repeatable.
        #[arg(long = "gamma-gen")]
        gamma_gens: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Recover the fixed ring of a rank-1 presentation under G_m.
    FixedRing {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the orbit set S(m,n) of two rational points under S_n.
    OrbitSet {
        /// Comma-separated rational coordinates, e.g. "0,1".
        #[arg(long = "m-point")]
        m_point: String,
        #[arg(long = "n-point")]
        n_point: String,
        /// Presentation to take the shift lattice from; defaults to the
        /// classical tensor Weyl algebra of matching rank.
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Reynolds average of an element under G(m,p,n), n = algebra rank.
    Reynolds {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        p: u32,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn load_algebra(path: &Path) -> Result<Arc<GwaPresentation>> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| KernelError::InvalidInput(format!("{}: {e}", path.display())))?;
    presentation_from_json(&src)
}

fn print_result(value: String, json: bool) -> i32 {
    if json {
        println!("{}", serde_json::json!({ "result": value }));
    } else {
        println!("{value}");
    }
    0
}

fn print_report(report: &CheckReport, json: bool) -> i32 {
    if json {
        println!("{}", report.to_json());
    } else {
        println!("check: {}", report.check);
        println!("verdict: {}", report.verdict);
        match (report.bounded, report.bound) {
            (true, Some(b)) => println!("bounded: yes (degree <= {b})"),
            (true, None) => println!("bounded: yes"),
            (false, Some(b)) => println!("bound: {b}"),
            (false, None) => {}
        }
        for w in &report.witnesses {
            println!("witness: {w}");
        }
    }
    if report.verdict {
        0
    } else {
        1
    }
}

fn parse_point(src: &str) -> Result<Vec<gwa_core::Rational>> {
    src.split(',')
        .map(|part| parse_rational(part.trim()))
        .collect()
}

fn run(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Normalize { algebra, expr, json } => {
            let a = load_algebra(&algebra)?;
            let x = parse_element(&expr, &a)?;
            Ok(print_result(x.to_string(), json))
        }
        Cmd::Mul {
            algebra,
            lhs,
            rhs,
            json,
        } => {
            let a = load_algebra(&algebra)?;
            let x = parse_element(&lhs, &a)?;
            let y = parse_element(&rhs, &a)?;
            Ok(print_result(x.mul(&y)?.to_string(), json))
        }
        Cmd::Eval {
            algebra,
            expr,
            at,
            json,
        } => {
            let a = load_algebra(&algebra)?;
            let ctx = SkewContext::from_presentation(&a);
            let x = embed_in(&ctx, &parse_element(&expr, &a)?)?;
            let l = parse_ratfunc(&at, a.base())?;
            Ok(print_result(x.evaluate(&l)?.to_string(), json))
        }
        Cmd::Embed { algebra, expr, json } => {
            let a = load_algebra(&algebra)?;
            let ctx = SkewContext::from_presentation(&a);
            let x = embed_in(&ctx, &parse_element(&expr, &a)?)?;
            Ok(print_result(x.to_string(), json))
        }
        Cmd::CheckSimple {
            kind,
            a,
            lambda,
            json,
        } => {
            let report = if kind == "classical" {
                let ring = gwa_core::poly::PolyRing::rational(&["h"]);
                let p = parse_poly(&a, &ring)?;
                checkers::check_simple_classical(&p)?
            } else {
                let ring = gwa_core::poly::PolyRing::rational_laurent(&["h"]);
                let p = parse_poly(&a, &ring)?;
                let lam = parse_rational(&lambda.ok_or_else(|| {
                    KernelError::InvalidInput("--lambda is required for the quantum type".into())
                })?)?;
                checkers::check_simple_quantum(&p, &lam)?
            };
            Ok(print_report(&report, json))
        }
        Cmd::CheckGaloisGen {
            algebra,
            exprs,
            json,
        } => {
            let a = load_algebra(&algebra)?;
            if exprs.is_empty() {
                return Err(KernelError::InvalidInput(
                    "pass at least one --expr generator".into(),
                ));
            }
            let ctx = SkewContext::from_presentation(&a);
            let gens: Vec<SkewElement> = exprs
                .iter()
                .map(|e| embed_in(&ctx, &parse_element(e, &a)?))
                .collect::<Result<_>>()?;
            let report = checkers::check_galois_generation(&gens, a.rank())?;
            Ok(print_report(&report, json))
        }
        Cmd::CheckPrincipal {
            algebra,
            deg_bound,
            symmetric,
            skew_gens,
            gamma_gens,
            json,
        } => {
            let a = load_algebra(&algebra)?;
            let ctx = SkewContext::from_presentation(&a);
            let ring = a.base().clone();
            let gens: Vec<SkewElement> = if !skew_gens.is_empty() {
                skew_gens
                    .iter()
                    .map(|s| parse_skew(s, &ctx))
                    .collect::<Result<_>>()?
            } else if symmetric {
                let mut plus = GwaElement::zero(&a);
                let mut minus = GwaElement::zero(&a);
                for i in 0..a.rank() {
                    plus = plus.add(&GwaElement::generator(&a, i, 1)?)?;
                    minus = minus.add(&GwaElement::generator(&a, i, -1)?)?;
                }
                vec![embed_in(&ctx, &plus)?, embed_in(&ctx, &minus)?]
            } else {
                let mut out = Vec::new();
                for i in 0..a.rank() {
                    out.push(embed_in(&ctx, &GwaElement::generator(&a, i, 1)?)?);
                    out.push(embed_in(&ctx, &GwaElement::generator(&a, i, -1)?)?);
                }
                for i in 0..ring.nvars() {
                    out.push(SkewElement::from_ratfunc(
                        &ctx,
                        RatFunc::from_poly(Poly::var(&ring, i)),
                    )?);
                }
                out
            };
            let gammas: Vec<Poly> = if !gamma_gens.is_empty() {
                gamma_gens
                    .iter()
                    .map(|s| parse_poly(s, &ring))
                    .collect::<Result<_>>()?
            } else if symmetric {
                let mut out: Vec<Poly> = (1..=ring.nvars())
                    .map(|k| elementary_symmetric(&ring, k))
                    .collect();
                if ring.laurent_flags().iter().all(|&f| f) {
                    out.push(elementary_symmetric(&ring, ring.nvars()).inverse_unit()?);
                }
                out
            } else {
                let mut out: Vec<Poly> = (0..ring.nvars()).map(|i| Poly::var(&ring, i)).collect();
                for i in 0..ring.nvars() {
                    if ring.is_laurent(i) {
                        out.push(Poly::var(&ring, i).inverse_unit()?);
                    }
                }
                out
            };
            let report = if symmetric {
                let membership = membership_symmetric(&ring, a.rank())?;
                checkers::check_principal(&gens, &gammas, &membership, deg_bound)?
            } else {
                let membership = membership_polynomial();
                checkers::check_principal(&gens, &gammas, &membership, deg_bound)?
            };
            Ok(print_report(&report, json))
        }
        Cmd::FixedRing { algebra, m, json } => {
            let a = load_algebra(&algebra)?;
            let (recovered, report) = checkers::jw_fixed_ring(&a, m)?;
            let a_tilde = recovered.defining(0).to_string();
            let tau = if recovered.base().nvars() == 1 {
                recovered
                    .sigma(0)
                    .apply(&Poly::var(recovered.base(), 0))
                    .to_string()
            } else {
                recovered.sigma(0).to_string()
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "a_tilde": a_tilde,
                        "tau": tau,
                        "report": report,
                    })
                );
            } else {
                println!("a_tilde: {a_tilde}");
                println!("tau: {tau}");
                println!("verdict: {}", report.verdict);
                for w in &report.witnesses {
                    println!("witness: {w}");
                }
            }
            Ok(if report.verdict { 0 } else { 1 })
        }
        Cmd::OrbitSet {
            m_point,
            n_point,
            algebra,
            json,
        } => {
            let mp = parse_point(&m_point)?;
            let np = parse_point(&n_point)?;
            if mp.len() != np.len() {
                return Err(KernelError::InvalidInput(
                    "points must have the same length".into(),
                ));
            }
            let a = match algebra {
                Some(path) => load_algebra(&path)?,
                None => {
                    if mp.len() == 1 {
                        GwaPresentation::first_weyl()
                    } else {
                        GwaPresentation::tensor_power(&GwaPresentation::first_weyl(), mp.len())?
                    }
                }
            };
            let perms = Permutation::all(mp.len());
            let (set, report) = checkers::orbit_set(&a, &mp, &np, &perms)?;
            if json {
                let vectors: Vec<Vec<i64>> = set.iter().map(|d| d.0.clone()).collect();
                println!(
                    "{}",
                    serde_json::json!({ "set": vectors, "report": report })
                );
            } else {
                let parts: Vec<String> = set.iter().map(|d| d.to_string()).collect();
                println!("orbit set: {}", parts.join(", "));
                println!("size: {}", set.len());
                if let Some(b) = report.bound {
                    println!("bound: {b}");
                }
                println!("verdict: {}", report.verdict);
            }
            Ok(if report.verdict { 0 } else { 1 })
        }
        Cmd::Reynolds {
            algebra,
            expr,
            m,
            p,
            json,
        } => {
            let a = load_algebra(&algebra)?;
            let x = parse_element(&expr, &a)?;
            let group = enumerate_group(m, p, a.rank(), DEFAULT_GROUP_CAP)?;
            let avg = checkers::reynolds(&group, &x)?;
            Ok(print_result(avg.to_string(), json))
        }
    }
}
