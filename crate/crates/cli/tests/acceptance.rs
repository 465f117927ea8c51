//! End-to-end acceptance checks, one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bitableau::grading::Bidegree;
use bitableau::krs::{krs, krs_insert};
use bitableau::polyring::{count_monomials, monomials_of_degree};
use bitableau::tableaux::{enumerate_standard, DEFAULT_ENUM_CAP};
use bitableau::{Monomial, Shape};

struct Run {
    code: i32,
    stdout: String,
}

fn cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_bitableau")).args(args).output().expect("binary runs");
    Run { code: out.status.code().unwrap_or(-1), stdout: String::from_utf8_lossy(&out.stdout).into_owned() }
}

fn mono(s: &str) -> Monomial {
    s.parse().expect("valid monomial")
}

/// Result of one criterion: failures found, plus a short summary.
struct Outcome {
    problems: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { problems: Vec::new(), summary: String::new() }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.problems.push(what.into());
        }
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        let took = start.elapsed();
        self.require(took < limit, format!("took {took:.2?}, limit {limit:?}"));
        self.summary = format!(
            "{}{took:.2?}",
            if self.summary.is_empty() { String::new() } else { format!("{}, ", self.summary) }
        );
    }
}

const FIGURE: &str = "[1 2 3|1 2 3]*[1 2 4|2 3 4]*[2|4]";

fn figure_two() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    let run = cli(&["krs", "--m", "4", "--n", "4", "--tableau", FIGURE, "--shape", "3,2"]);
    let lines: Vec<&str> = run.stdout.lines().collect();
    o.require(run.code == 0, format!("krs exit {}", run.code));
    o.require(lines.first() == Some(&"1 2 1 4 2 3 2"), "first array row");
    o.require(lines.get(1) == Some(&"1 2 2 3 3 4 4"), "second array row");
    o.require(lines.get(2) == Some(&"1 1 2 0 2 1 0"), "third array row");
    let printed = lines.iter().find_map(|l| l.strip_prefix("monomial ")).map(mono);
    let expected = mono("x11*x22*x12*x23*x44*x34*x24");
    o.require(
        printed.as_ref() == Some(&expected),
        format!("monomial {} != {expected}", printed.map(|m| m.to_string()).unwrap_or_default()),
    );
    let run = cli(&["witness", "--m", "4", "--n", "4", "--tableau", FIGURE, "--shape", "3,2"]);
    let diag = run.stdout.lines().find_map(|l| l.strip_prefix("diag ")).map(mono);
    o.require(run.code == 0 && diag == Some(mono("x11*x22*x34*x12*x23")), "witness diagonal");
    o.within(start, Duration::from_secs(1));
    o
}

fn krs_bijection() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    let mut checked = 0usize;
    for d in 0..=6 {
        for w in monomials_of_degree(3, 3, d) {
            checked += 1;
            o.require(krs(&krs_insert(&w)).ok().as_ref() == Some(&w), format!("krs(insert({w}))"));
        }
    }
    for b in Bidegree::all_up_to(3, 3, 6) {
        let standard = enumerate_standard(3, 3, &b, DEFAULT_ENUM_CAP).expect("within cap");
        o.require(standard.len() as u64 == count_monomials(&b), format!("count in {b}"));
        for sigma in standard {
            checked += 1;
            o.require(
                krs(&sigma).map(|w| krs_insert(&w)).ok().as_ref() == Some(&sigma),
                format!("insert(krs({sigma}))"),
            );
        }
    }
    o.summary = format!("{checked} round trips");
    o.within(start, Duration::from_secs(60));
    o
}

/// All shapes with total at most 6 and parts at most 3.
fn small_shapes() -> Vec<String> {
    (1..=6).flat_map(|d| Shape::partitions(d, 3)).map(|s| s.to_string()).collect()
}

fn sweep_cases() -> Vec<(&'static str, String)> {
    let mut cases: Vec<(&str, String)> = small_shapes().into_iter().map(|s| ("3", s)).collect();
    cases.extend(["2,1", "3,2", "2,2"].iter().map(|s| ("4", s.to_string())));
    cases
}

fn sweep(o: &mut Outcome, command: &str, size: &str, shape: &str) -> Run {
    let run = cli(&[command, "--m", size, "--n", size, "--shape", shape]);
    let tail = run.stdout.lines().last().unwrap_or("").to_string();
    o.require(run.code == 0 && tail.ends_with(" 0 FAILURES"), format!("{command} {size}x{size} {shape}: {tail}"));
    run
}

fn grobner() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    let cases = sweep_cases();
    for (size, shape) in &cases {
        let run = sweep(&mut o, "grobner-check", size, shape);
        for key in ["generated_by_diagonals PASS", "product_of_initials PASS", "intersection_of_initial_powers PASS"] {
            o.require(run.stdout.contains(key), format!("{size}x{size} {shape}: missing {key}"));
        }
    }
    o.summary = format!("{} shapes", cases.len());
    o.within(start, Duration::from_secs(600));
    o
}

fn standard_and_primary() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    let cases = sweep_cases();
    for (size, shape) in &cases {
        sweep(&mut o, "standard-basis-check", size, shape);
        let run = sweep(&mut o, "primary-check", size, shape);
        if shape == "2,1" || shape == "2,2,1" {
            let found = run.stdout.lines().filter(|l| l.starts_with("irredundant") && l.ends_with("PASS")).count();
            o.require(
                found == 2 && !run.stdout.contains("inconclusive"),
                format!("{size}x{size} {shape}: {found} witnesses"),
            );
        }
    }
    o.summary = format!("{} shapes", cases.len());
    o.within(start, Duration::from_secs(600));
    o
}

/// The presentation of the multi-Rees algebra for a 4x4 matrix.
const TABLE: [&str; 27] = [
    "x13 p4 - x14 p3",
    "x12 p4 - x14 p2",
    "x11 p4 - x14 p1",
    "x12 p3 - x13 p2",
    "x11 p3 - x13 p1",
    "x11 p2 - x12 p1",
    "x23 p24 - x24 p23",
    "x23 p14 - x24 p13",
    "x22 p14 - x24 p12",
    "x12 p34 - x13 p24",
    "x11 p34 - x13 p14",
    "x11 p24 - x12 p14",
    "x22 p13 - x23 p12",
    "x11 p23 - x12 p13",
    "x33 p124 - x34 p123",
    "x22 p134 - x23 p124",
    "x11 p234 - x12 p134",
    "p34 p2 - p24 p3",
    "p34 p1 - p14 p3",
    "p24 p1 - p14 p2",
    "p23 p1 - p13 p2",
    "p14 p23 - p13 p24",
    "p234 p1 - p134 p2",
    "p234 p14 - p134 p24",
    "p234 p13 - p134 p23",
    "p234 p12 - p124 p23",
    "p134 p12 - p124 p13",
];

type Side = BTreeSet<String>;

/// A binomial as the unordered pair of its two sides, each a set of factor names.
fn normalize(plus: Side, minus: Side) -> BTreeSet<Side> {
    [plus, minus].into_iter().collect()
}

fn table_binomial(s: &str) -> BTreeSet<Side> {
    let (a, b) = s.split_once(" - ").expect("binomial");
    let side = |t: &str| t.split_whitespace().map(str::to_string).collect::<Side>();
    normalize(side(a), side(b))
}

/// `x[1,3]*p[4]` becomes `{x13, p4}`.
fn printed_binomial(s: &str) -> BTreeSet<Side> {
    let (a, b) = s.split_once(" - ").expect("binomial");
    let side = |t: &str| {
        t.split('*').map(|f| f.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>()).collect::<Side>()
    };
    normalize(side(a), side(b))
}

fn presentation() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    let run = cli(&["hibi", "--m", "4", "--n", "4"]);
    let ours: BTreeSet<BTreeSet<Side>> =
        run.stdout.lines().filter(|l| !l.starts_with('#')).map(printed_binomial).collect();
    let table: BTreeSet<BTreeSet<Side>> = TABLE.iter().map(|s| table_binomial(s)).collect();
    o.require(run.code == 0 && ours.len() == 27, format!("hibi printed {} binomials", ours.len()));
    o.require(ours == table, format!("{} binomials differ from the table", ours.symmetric_difference(&table).count()));
    let run = cli(&["kernel-check", "--m", "4", "--n", "4", "--max-p-degree", "2", "--max-x-degree", "3"]);
    let tail = run.stdout.lines().last().unwrap_or("").to_string();
    o.require(run.code == 0 && tail.ends_with(" 0 FAILURES"), format!("kernel-check: {tail}"));
    o.summary = tail;
    o.within(start, Duration::from_secs(120));
    o
}

fn lifts() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    let run = cli(&["lift-check", "--m", "4", "--n", "4"]);
    let pairs = run.stdout.lines().filter(|l| l.starts_with("p[")).count();
    o.require(run.code == 0 && run.stdout.contains(" 0 FAILURES"), "lift-check failed");
    o.require(pairs == 10, format!("{pairs} pairs certified"));
    o.summary = format!("{pairs} pairs");
    o.within(start, Duration::from_secs(60));
    o
}

fn linear_resolutions() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    for shape in ["1", "2", "2,1", "2,2", "3,2"] {
        let s: Shape = shape.parse().expect("shape");
        let bound = (s.total() + 4).to_string();
        let run = cli(&["betti-check", "--m", "3", "--n", "3", "--shape", shape, "--max-degree", &bound]);
        let tail = run.stdout.lines().last().unwrap_or("").to_string();
        o.require(run.code == 0 && tail.ends_with(" 0 FAILURES"), format!("{shape}: {tail}"));
    }
    o.within(start, Duration::from_secs(600));
    o
}

fn k_theory_example() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    let run = cli(&["schur-expand", "--m", "3", "--n", "3", "--shape", "2,1"]);
    let expected = [
        "shape 2,1: +u[1]^2*u[2]",
        "shape 2,2: -u[1]^3*u[2]",
        "shape 3,1: -u[1]^3*u[2] -u[1]^2*u[2]^2",
        "shape 3,2: +u[1]^4*u[2] +u[1]^3*u[2]^2",
        "shape 3,3: -u[1]^4*u[2]^2",
    ];
    let got: Vec<&str> = run.stdout.lines().filter(|l| l.starts_with("shape")).collect();
    o.require(run.code == 0 && got == expected, format!("expansion {got:?}"));
    let run = cli(&["kpoly", "--m", "3", "--n", "3", "--shape", "2,1"]);
    let lcm = run.stdout.lines().find_map(|l| l.strip_prefix("lcm ")).map(mono);
    o.require(lcm == Some(mono("x11^2*x12^2*x22*x13*x23")), "generator lcm");
    o.within(start, Duration::from_secs(10));
    o
}

fn hilbert() -> Outcome {
    let start = Instant::now();
    let mut o = Outcome::new();
    let run = cli(&["hilbert-check", "--m", "3", "--n", "3", "--shape", "2,1", "--max-degree", "6"]);
    let tail = run.stdout.lines().last().unwrap_or("").to_string();
    o.require(run.code == 0 && tail.ends_with(" 0 FAILURES"), tail.clone());
    o.summary = tail;
    o.within(start, Duration::from_secs(60));
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("figure two krs array, monomial and witness", figure_two),
        ("krs bijection round trips, 3x3, degree <= 6", krs_bijection),
        ("groebner basis, product and intersection identities", grobner),
        ("standard basis and primary decomposition", standard_and_primary),
        ("toric presentation table and kernel counting, 4x4", presentation),
        ("sagbi lifts of all incomparable pairs, 4x4", lifts),
        ("linear strands of initial ideals, 3x3", linear_resolutions),
        ("k-polynomial schur expansion for 2,1", k_theory_example),
        ("hilbert series consistency for 2,1, degree <= 6", hilbert),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        let status = if o.problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {} {name}: {status} ({})", i + 1, o.summary);
        for p in o.problems.iter().take(10) {
            println!("    {p}");
        }
        if !o.problems.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
