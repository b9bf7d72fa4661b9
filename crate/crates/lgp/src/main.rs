//! Command-line interface: verify a curve, search for parameters, or print a
//! Hilbert-symbol table.
//!
//! Exit codes for `verify`: 0 when the certificate concludes a local-global
//! violation (proven or empirical), 2 for every other conclusion, 1 on input
//! errors. `search` and `symbols` exit 0 on success and 1 on input errors.

use clap::{Parser, Subcommand};
use lgp::arith::Int;
use lgp::brauer::{certify, CertifyConfig, Conclusion};
use lgp::certdoc::{parse_rat, CertificateDocument};
use lgp::curve::QuarticCurve;
use lgp::localfields::{hilbert_symbol, symbol_support, Place};
use lgp::search::{find_parameters, SearchConfig};
use num_traits::{Signed, Zero};

#[derive(Parser)]
#[command(name = "lgp", version, about = "Certify genus-one quartic curves that have points in \
every completion of Q but no rational points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on one curve q·y² = x⁴ − p and emit a certificate.
    Verify {
        /// The parameter p (nonzero integer, coprime to q).
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// The parameter q (nonzero integer, coprime to p).
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Auxiliary place for the six-condition check (default: |q| if prime).
        #[arg(long)]
        v0: Option<String>,
        /// Height bound for the rational point search.
        #[arg(long, default_value_t = 1000)]
        height: u64,
        /// Local precision for sampled witnesses.
        #[arg(long, default_value_t = 24)]
        precision: u32,
        /// Sampled witnesses per place in the invariant table.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Write the JSON document to this path instead of stdout ("-" = stdout).
        #[arg(long)]
        json: Option<String>,
    },
    /// Enumerate parameters (p, q, v0) passing all six conditions, with
    /// proven certificates.
    Search {
        #[arg(long)]
        pmax: String,
        #[arg(long)]
        qmax: String,
        /// Stop after this many hits.
        #[arg(long)]
        limit: Option<usize>,
        /// Also try q = −v0.
        #[arg(long)]
        negq: bool,
        /// One compact JSON certificate document per line.
        #[arg(long)]
        json_lines: bool,
    },
    /// Print the Hilbert symbols (a, b)_v over the support and their product.
    Symbols {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Restrict to one place: "real" or a prime.
        #[arg(long)]
        place: Option<String>,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    match Cli::parse().command {
        Command::Verify { p, q, v0, height, precision, samples, json } => {
            cmd_verify(&p, &q, v0.as_deref(), height, precision, samples, json.as_deref())
        }
        Command::Search { pmax, qmax, limit, negq, json_lines } => {
            cmd_search(&pmax, &qmax, limit, negq, json_lines)
        }
        Command::Symbols { a, b, place } => cmd_symbols(&a, &b, place.as_deref()),
    }
}

fn parse_int(s: &str, what: &str) -> Result<Int, String> {
    s.parse::<Int>().map_err(|_| format!("{what}: `{s}` is not an integer"))
}

fn cmd_verify(
    p: &str,
    q: &str,
    v0: Option<&str>,
    height: u64,
    precision: u32,
    samples: usize,
    json: Option<&str>,
) -> i32 {
    let inner = || -> Result<(CertificateDocument, Conclusion), String> {
        let p = parse_int(p, "--p")?;
        let q = parse_int(q, "--q")?;
        let v0 = match v0 {
            None => None,
            Some(s) => Some(parse_int(s, "--v0")?),
        };
        let curve = QuarticCurve::new(p, q).map_err(|e| e.to_string())?;
        if height == 0 {
            return Err("--height must be at least 1".into());
        }
        let config = CertifyConfig {
            height,
            precision: precision.max(4),
            samples_per_place: samples.max(1),
            good_places: 5,
            v0,
        };
        let cert = certify(&curve, &config).map_err(|e| e.to_string())?;
        Ok((CertificateDocument::from_certificate(&cert), cert.conclusion))
    };
    match inner() {
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
        Ok((doc, conclusion)) => {
            match json {
                None | Some("-") => println!("{}", doc.to_json()),
                Some(path) => {
                    if let Err(e) = std::fs::write(path, doc.to_json()) {
                        eprintln!("error: cannot write {path}: {e}");
                        return 1;
                    }
                    println!(
                        "curve {}·y² = x⁴ − {}: {} (mode {}), document written to {}",
                        doc.curve.q, doc.curve.p, doc.conclusion, doc.mode, path
                    );
                }
            }
            match conclusion {
                Conclusion::LgpViolationProven | Conclusion::LgpViolationEmpirical => 0,
                _ => 2,
            }
        }
    }
}

fn cmd_search(pmax: &str, qmax: &str, limit: Option<usize>, negq: bool, json_lines: bool) -> i32 {
    let inner = || -> Result<i32, String> {
        let p_max = parse_int(pmax, "--pmax")?;
        let q_max = parse_int(qmax, "--qmax")?;
        if !p_max.is_positive() || !q_max.is_positive() {
            return Err("--pmax and --qmax must be positive".into());
        }
        let mut config = SearchConfig::new(p_max, q_max);
        config.include_negative_q = negq;
        config.limit = limit;
        let hits = find_parameters(&config).map_err(|e| e.to_string())?;
        for hit in &hits {
            let doc = CertificateDocument::from_certificate(&hit.certificate);
            if json_lines {
                println!("{}", doc.to_json_compact());
            } else {
                println!(
                    "p={} q={} v0={} conclusion={} obstruction={} jacobian: Y² = X³ + {}·X",
                    hit.p,
                    hit.q,
                    hit.v0,
                    doc.conclusion,
                    doc.obstruction_sum.as_deref().unwrap_or("-"),
                    doc.jacobian.a,
                );
            }
        }
        Ok(0)
    };
    match inner() {
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
        Ok(code) => code,
    }
}

fn cmd_symbols(a: &str, b: &str, place: Option<&str>) -> i32 {
    let inner = || -> Result<i32, String> {
        let a = parse_rat(a).ok_or_else(|| format!("--a: `{a}` is not a rational"))?;
        let b = parse_rat(b).ok_or_else(|| format!("--b: `{b}` is not a rational"))?;
        if a.is_zero() || b.is_zero() {
            return Err("the Hilbert symbol needs nonzero arguments".into());
        }
        let places: Vec<Place> = match place {
            Some("real") => vec![Place::Real],
            Some(s) => {
                let p = parse_int(s, "--place")?;
                if !lgp::arith::is_prime(&p) {
                    return Err(format!("--place: {p} is not prime"));
                }
                vec![Place::Finite(p)]
            }
            None => {
                let mut places = vec![Place::Real];
                places.extend(symbol_support(&a, &b).into_iter().map(Place::Finite));
                places
            }
        };
        let mut product = 1i32;
        for v in &places {
            let s = hilbert_symbol(&a, &b, v);
            product *= s;
            println!("({a}, {b})_{v} = {s:+}");
        }
        if place.is_none() {
            println!("product over all places = {product:+}");
        }
        Ok(0)
    };
    match inner() {
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
        Ok(code) => code,
    }
}
