use std::fmt::Write as _;
use std::process::ExitCode;

use bitableau::ideals::{
    betti_linear_check, check_grobner_js, check_primary, check_standard_basis, diagonal_ideal, straighten, Arith,
    MonomialIdeal, SweepOptions, DEFAULT_DIM_CAP,
};
use bitableau::krs::{diag, extract_witness, krs_array, krs_insert};
use bitableau::ktheory::{check_hilbert, k_polynomial, k_polynomial_of_ideal, schur_expand, DEFAULT_GEN_CAP};
use bitableau::rees::{
    check_all_lifts, check_kernel, check_lift, degree_one_relations, hibi_relations, LatticeElement,
};
use bitableau::report::Report;
use bitableau::tableaux::DEFAULT_ENUM_CAP;
use bitableau::{Bitableau, Error, Exec, Monomial, Shape};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bitableau",
    version,
    about = "Bitableaux, KRS, and verification sweeps for products of row-initial minor ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Number of matrix rows.
    #[arg(long, default_value_t = 3)]
    m: usize,
    /// Number of matrix columns.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Emit `key=value` records instead of text.
    #[arg(long)]
    machine: bool,
    /// Run sweeps on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

impl Common {
    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ArithArg {
    Rational,
    Modular,
}

#[derive(Args, Clone)]
struct Sweep {
    #[command(flatten)]
    common: Common,
    /// Shape `S` as a comma list, e.g. `3,2`.
    #[arg(long, default_value = "2,1")]
    shape: Shape,
    /// Largest total degree examined [default: sum of the parts + 2].
    #[arg(long)]
    max_degree: Option<usize>,
    /// Limit on standard bitableaux enumerated per bidegree.
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
    cap_enum: usize,
    /// Limit on spanning vectors tried per graded piece.
    #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
    cap_dim: usize,
    /// Field used for elimination.
    #[arg(long, value_enum, default_value_t = ArithArg::Rational)]
    arith: ArithArg,
}

impl Sweep {
    fn options(&self) -> SweepOptions {
        let mut o = SweepOptions::for_shape(&self.shape).with_exec(self.common.exec()).with_arith(match self.arith {
            ArithArg::Rational => Arith::Rational,
            ArithArg::Modular => Arith::Modular,
        });
        if let Some(d) = self.max_degree {
            o = o.with_max_degree(d);
        }
        o.cap_enum = self.cap_enum;
        o.cap_dim = self.cap_dim;
        o
    }
}

#[derive(Args, Clone)]
struct IdealArgs {
    #[command(flatten)]
    common: Common,
    /// Use the initial ideal of `J_S`, generated by the diagonals of its row-superstandard generators.
    #[arg(long, default_value = "2,1")]
    shape: Shape,
    /// Use the monomial ideal with these comma-separated generators instead, e.g. `x11,x12*x21`.
    #[arg(long)]
    generators: Option<String>,
    /// Limit on the number of generators in Taylor sums.
    #[arg(long, default_value_t = DEFAULT_GEN_CAP)]
    cap_gens: usize,
}

impl IdealArgs {
    fn ideal(&self) -> Result<MonomialIdeal, Error> {
        let (m, n) = (self.common.m, self.common.n);
        match &self.generators {
            Some(g) => {
                let gens = g
                    .split(',')
                    .filter(|w| !w.trim().is_empty())
                    .map(|w| w.trim().parse::<Monomial>())
                    .collect::<Result<Vec<_>, _>>()?;
                if let Some(w) = gens.iter().find(|w| !w.fits(m, n)) {
                    return Err(Error::Parse(format!("generator {w} does not fit a {m}x{n} matrix")));
                }
                Ok(MonomialIdeal::new(m, n, gens))
            }
            None => diagonal_ideal(m, n, &self.shape),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Delete a standard bitableau to its KRS monomial, printing the three-row array (left entries, right entries, row marks).
    Krs {
        #[command(flatten)]
        common: Common,
        /// Standard bitableau, e.g. "[1 2|1 3]*[1|2]".
        #[arg(long)]
        tableau: Bitableau,
        /// Shape of the superstandard subtableau tracked by the row marks.
        #[arg(long, default_value = "")]
        shape: Shape,
    },
    /// Insert a monomial, recovering the standard bitableau it corresponds to.
    KrsInverse {
        #[command(flatten)]
        common: Common,
        /// Monomial such as `x11*x22` or `x[1,1]^2*x[2,3]`.
        #[arg(long)]
        monomial: Monomial,
    },
    /// Extract a row-superstandard bitableau whose diagonal divides the KRS monomial.
    Witness {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tableau: Bitableau,
        #[arg(long)]
        shape: Shape,
    },
    /// Write a product of minors in the basis of standard bitableaux.
    Straighten {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tableau: Bitableau,
    },
    /// Check that the row-superstandard generators of J_S form a Groebner basis, and the
    /// product and intersection formulas for the initial ideal.
    GrobnerCheck(Sweep),
    /// Check that standard bitableaux containing a superstandard tableau of shape S form a basis of J_S.
    StandardBasisCheck(Sweep),
    /// Check the primary decomposition of J_S into powers of J_t and its irredundancy.
    PrimaryCheck(Sweep),
    /// Check that a monomial ideal generated in one degree has a linear resolution.
    BettiCheck {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Largest total multidegree examined [default: generating degree + 2].
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Print the degree-one and Hibi relations presenting the multi-Rees algebra.
    Hibi {
        #[command(flatten)]
        common: Common,
    },
    /// Verify the presentation of the multi-Rees algebra by counting standard monomials.
    KernelCheck {
        #[command(flatten)]
        common: Common,
        /// Largest number of p variables.
        #[arg(long, default_value_t = 2)]
        max_p_degree: usize,
        /// Largest degree in the x variables.
        #[arg(long, default_value_t = 3)]
        max_x_degree: usize,
    },
    /// Check that Hibi relations lift through straightening (all incomparable pairs unless --a and --b are given).
    LiftCheck {
        #[command(flatten)]
        common: Common,
        /// Column set such as `2,3`.
        #[arg(long, requires = "b")]
        a: Option<LatticeElement>,
        #[arg(long, requires = "a")]
        b: Option<LatticeElement>,
    },
    /// Print K(R/I) and K(I) from the Taylor resolution, and the lcm of the generators.
    Kpoly(IdealArgs),
    /// Expand K(I) in Schur polynomials of the column variables.
    SchurExpand(IdealArgs),
    /// Compare the Hilbert series from the K-polynomial with direct monomial counts.
    HilbertCheck {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Largest total degree examined [default: sum of the parts + 2].
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

enum Outcome {
    Done(String),
    Checked(String, bool),
}

fn render(report: &Report, machine: bool) -> Outcome {
    let text = if machine { report.render_machine() } else { report.render_text() };
    Outcome::Checked(text, report.passed())
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let mut out = String::new();
    match cli.command {
        Command::Krs { common, tableau, shape } => {
            check_fits(&tableau, &common)?;
            let array = krs_array(&tableau, &shape)?;
            let factors: Vec<String> = array.columns().iter().map(|c| format!("x[{},{}]", c.ell, c.r)).collect();
            if common.machine {
                let join = |v: Vec<usize>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                let _ = writeln!(out, "ell={}", join(array.ells()));
                let _ = writeln!(out, "r={}", join(array.rs()));
                let _ = writeln!(out, "rho={}", join(array.rhos()));
                let _ = writeln!(out, "monomial={}", array.monomial());
            } else {
                let _ = writeln!(out, "{array}");
                let _ = writeln!(out, "factors {}", factors.join(" "));
                let _ = writeln!(out, "monomial {}", array.monomial());
            }
        }
        Command::KrsInverse { common, monomial } => {
            if !monomial.fits(common.m, common.n) {
                return Err(Error::Parse(format!(
                    "monomial {monomial} does not fit a {}x{} matrix",
                    common.m, common.n
                )));
            }
            let sigma = krs_insert(&monomial);
            let _ = writeln!(out, "{}{sigma}", if common.machine { "bitableau=" } else { "" });
        }
        Command::Witness { common, tableau, shape } => {
            check_fits(&tableau, &common)?;
            let w = extract_witness(&tableau, &shape)?;
            let key = |k: &str| if common.machine { format!("{k}=") } else { format!("{k} ") };
            let _ = writeln!(out, "{}{w}", key("witness"));
            let _ = writeln!(out, "{}{}", key("diag"), diag(&w));
            let _ = writeln!(out, "{}{}", key("krs"), krs_array(&tableau, &Shape::empty())?.monomial());
        }
        Command::Straighten { common, tableau } => {
            check_fits(&tableau, &common)?;
            let rep = straighten(&tableau);
            for (sigma, c) in &rep.terms {
                if common.machine {
                    let _ = writeln!(out, "coefficient={c} bitableau={sigma}");
                } else {
                    let sign = if *c < bitableau::Rational::from_integer(0.into()) { "" } else { "+" };
                    let _ = writeln!(out, "{sign}{c} {sigma}");
                }
            }
        }
        Command::GrobnerCheck(s) => {
            return Ok(render(&check_grobner_js(s.common.m, s.common.n, &s.shape, &s.options())?, s.common.machine))
        }
        Command::StandardBasisCheck(s) => {
            return Ok(render(&check_standard_basis(s.common.m, s.common.n, &s.shape, &s.options())?, s.common.machine))
        }
        Command::PrimaryCheck(s) => {
            return Ok(render(&check_primary(s.common.m, s.common.n, &s.shape, &s.options())?, s.common.machine))
        }
        Command::BettiCheck { ideal, max_degree } => {
            let i = ideal.ideal()?;
            let g = i.generating_degree().ok_or(Error::NotEquigenerated)?;
            let report = betti_linear_check(&i, max_degree.unwrap_or(g + 2), ideal.common.exec())?;
            return Ok(render(&report, ideal.common.machine));
        }
        Command::Hibi { common } => {
            let one = degree_one_relations(common.m, common.n);
            let hibi = hibi_relations(common.m, common.n);
            for (kind, list) in [("degree_one", &one), ("hibi", &hibi)] {
                for b in list {
                    if common.machine {
                        let _ = writeln!(out, "kind={kind} plus={} minus={}", b.plus, b.minus);
                    } else {
                        let _ = writeln!(out, "{b}");
                    }
                }
            }
            let total = one.len() + hibi.len();
            if common.machine {
                let _ = writeln!(out, "degree_one={} hibi={} total={total}", one.len(), hibi.len());
            } else {
                let _ = writeln!(out, "# {} degree-one, {} Hibi, {total} relations", one.len(), hibi.len());
            }
        }
        Command::KernelCheck { common, max_p_degree, max_x_degree } => {
            let report = check_kernel(common.m, common.n, max_p_degree, max_x_degree, common.exec())?;
            return Ok(render(&report, common.machine));
        }
        Command::LiftCheck { common, a, b } => {
            let report = match (a, b) {
                (Some(a), Some(b)) => {
                    for e in [&a, &b] {
                        if e.size() > common.m || e.cols().iter().any(|&c| c > common.n) {
                            return Err(Error::Parse(format!("{e} does not fit a {}x{} matrix", common.m, common.n)));
                        }
                    }
                    check_lift(&a, &b)?
                }
                _ => check_all_lifts(common.m, common.n, common.exec())?,
            };
            return Ok(render(&report, common.machine));
        }
        Command::Kpoly(args) => {
            let i = args.ideal()?;
            let quotient = k_polynomial(&i, args.cap_gens)?;
            let ideal = k_polynomial_of_ideal(&i, args.cap_gens)?;
            let sep = if args.common.machine { "=" } else { " " };
            let _ = writeln!(out, "generators{sep}{i}");
            let _ = writeln!(out, "lcm{sep}{}", i.lcm_of_generators());
            let _ = writeln!(out, "K(R/I){sep}{quotient}");
            let _ = writeln!(out, "K(I){sep}{ideal}");
        }
        Command::SchurExpand(args) => {
            let i = args.ideal()?;
            let k = k_polynomial_of_ideal(&i, args.cap_gens)?;
            let e = schur_expand(&k, args.common.n)?;
            assert_eq!(e.reassemble(), k, "Schur expansion must reassemble its input");
            out.push_str(&e.to_string());
            if args.generators.is_none() {
                let bound = args.shape.transpose().part(1);
                let ok = e.max_length() <= bound;
                let _ = writeln!(
                    out,
                    "# longest shape has {} parts, bound {bound}: {}",
                    e.max_length(),
                    if ok { "PASS" } else { "FAIL" }
                );
                if !ok {
                    return Ok(Outcome::Checked(out, false));
                }
            }
        }
        Command::HilbertCheck { ideal, max_degree } => {
            let i = ideal.ideal()?;
            let bound = max_degree.unwrap_or(ideal.shape.total() + 2);
            let report = check_hilbert(&i, bound, ideal.cap_gens, ideal.common.exec())?;
            return Ok(render(&report, ideal.common.machine));
        }
    }
    Ok(Outcome::Done(out))
}

fn check_fits(t: &Bitableau, c: &Common) -> Result<(), Error> {
    if t.fits(c.m, c.n) {
        Ok(())
    } else {
        Err(Error::Parse(format!("{t} does not fit a {}x{} matrix", c.m, c.n)))
    }
}

/// Errors caused by the input itself are usage errors.
fn is_usage(e: &Error) -> bool {
    !matches!(e, Error::DegreeBoundExceeded { .. } | Error::TooManyGenerators { .. })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Checked(text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}
