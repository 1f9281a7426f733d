//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Two criteria compare against published values that are wrong as printed
//! (a vertex list and a generator list). They are reported as FAIL. The
//! process still exits 0 when those are the only assertions that fail and
//! everything else passes.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use latvert::reproduce::{eventual_period, reproduce, Report};
use latvert_core::decomposition::hilbert_vertex_counts;
use latvert_core::fan::vertex_ideal_intersection;
use latvert_core::properties::{check, Instance, Property};
use latvert_core::vertex_ideal::{oracle_mismatches, vertex_ideal_circuits};
use latvert_core::{Error, IntMatrix, Lattice, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Assertions known to fail because the published value is wrong.
const KNOWN: &[(usize, &[&str])] = &[
    (
        3,
        &[
            "V_L has the 10 listed generators",
            "P_L is strictly contained in V_L",
            "Top(P_L) differs from Top(V_L)",
        ],
    ),
    (4, &["R_u has exactly the six listed vertices"]),
];

struct Verdict {
    failures: Vec<String>,
    note: String,
}

impl Verdict {
    fn from_report(rep: &Report) -> Self {
        Verdict {
            failures: rep.failures().map(|a| a.label.clone()).collect(),
            note: format!("{} assertions", rep.assertions.len()),
        }
    }
}

type Run = Result<Verdict, Error>;

fn lim() -> Limits {
    Limits::default()
}

fn fan_lim() -> Limits {
    Limits {
        fan_cones: 300,
        ..Limits::default()
    }
}

fn via_reproduce(id: &str) -> Run {
    reproduce(id, &lim()).map(|r| Verdict::from_report(&r))
}

/// Pointed lattices stratified over `(n, m)`, basis entries in `[-6, 6]`
/// (`[-3, 3]` for `m = 3`, to keep Graver bases small).
fn corpus() -> Vec<Lattice> {
    let shapes = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::new();
    let mut k = 0;
    while out.len() < 50 {
        let (n, m) = shapes[k % shapes.len()];
        let r: i64 = if m == 3 { 3 } else { 6 };
        let cols: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-r..=r)).collect()).collect();
        let Ok(l) = Lattice::from_columns(n, &cols) else { continue };
        if l.rank() == m && l.is_pointed() {
            out.push(l);
            k += 1;
        }
    }
    out
}

fn oracle_box(n: usize) -> u32 {
    match n {
        2 => 12,
        3 => 7,
        _ => 4,
    }
}

fn describe(l: &Lattice) -> String {
    format!("{:?}", l.basis_columns())
}

fn c7(corpus: &[Lattice]) -> Run {
    let mut failures = Vec::new();
    let mut fans = 0;
    for l in corpus {
        let v = vertex_ideal_circuits(l, &lim())?;
        let bad = oracle_mismatches(l, &v, oracle_box(l.ambient_dim()), &lim())?;
        if !bad.is_empty() {
            failures.push(format!("{}: oracle disagrees at {:?}", describe(l), bad));
        }
        match vertex_ideal_intersection(l, &fan_lim()) {
            Ok(w) => {
                fans += 1;
                if w != v {
                    failures.push(format!("{}: intersection {} vs circuits {}", describe(l), w, v));
                }
            }
            Err(e) if e.is_budget() => {}
            Err(e) => return Err(e),
        }
    }
    Ok(Verdict {
        failures,
        note: format!("{} lattices, fan enumerated for {}", corpus.len(), fans),
    })
}

/// Runs `props` on each lattice; `InvalidInput` (hypotheses unmet) and fan
/// budget overruns are skipped and counted.
fn properties(lattices: &[Lattice], props: &[Property], limits: &Limits) -> Run {
    let mut failures = Vec::new();
    let (mut ran, mut skipped) = (0, 0);
    for l in lattices {
        let inst = Instance::new(l.clone(), &lim())?;
        for &p in props {
            match check(&inst, p, limits) {
                Ok(v) => {
                    ran += 1;
                    failures.extend(v.into_iter().map(|s| format!("{} {}: {}", describe(l), p, s)));
                }
                Err(Error::InvalidInput(_)) => skipped += 1,
                Err(e) if e.is_budget() => skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Verdict {
        failures,
        note: format!("{} checks on {} lattices, {} not applicable", ran, lattices.len(), skipped),
    })
}

fn c9() -> Run {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut plane = Vec::new();
    while plane.len() < 50 {
        let cols: Vec<Vec<i64>> = (0..2).map(|_| (0..2).map(|_| rng.gen_range(-12..=12)).collect()).collect();
        if cols[0][0] * cols[1][1] != cols[0][1] * cols[1][0] {
            plane.push(Lattice::from_columns(2, &cols)?);
        }
    }
    let a = properties(&plane, &[Property::Dim2Equal], &lim())?;
    let mut space = Vec::new();
    for row in [[3i64, 4, 5], [1, 2, 3], [2, 3, 7], [4, 5, 6]] {
        space.push(Lattice::from_defining_matrix(IntMatrix::from_rows(&[row])?)?);
    }
    let b = properties(&space, &[Property::TopEqual], &lim())?;
    Ok(Verdict {
        failures: a.failures.into_iter().chain(b.failures).collect(),
        note: format!("P_L = V_L: {}; top: {}", a.note, b.note),
    })
}

/// Vertices of `conv{u ∈ N^3 : a + 2b + 3c = t}` by a monotone-chain hull
/// in the `(a, b)` chart.
fn fiber_vertex_count(t: i64) -> u64 {
    let mut pts: Vec<(i64, i64)> = Vec::new();
    for a in 0..=t {
        for b in 0..=(t - a) / 2 {
            if (t - a - 2 * b) % 3 == 0 {
                pts.push((a, b));
            }
        }
    }
    pts.sort();
    if pts.len() <= 2 {
        return pts.len() as u64;
    }
    let cross = |o: (i64, i64), p: (i64, i64), q: (i64, i64)| (p.0 - o.0) * (q.1 - o.1) - (p.1 - o.1) * (q.0 - o.0);
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<(i64, i64)> = if pass == 0 { pts.clone() } else { pts.iter().rev().copied().collect() };
        for p in seq {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull.len() as u64
}

fn c11() -> Run {
    let a = IntMatrix::from_rows(&[[1i64, 2, 3]])?;
    let l = Lattice::from_defining_matrix(a.clone())?;
    let v = vertex_ideal_circuits(&l, &lim())?;
    let degrees: Vec<Vec<i64>> = (0..=60).map(|b| vec![b]).collect();
    let counts: Vec<u64> = hilbert_vertex_counts(&v, &a, &degrees, &lim())?
        .into_iter()
        .map(|h| h.count)
        .collect();
    let mut failures = Vec::new();
    for (b, &c) in counts.iter().enumerate() {
        let want = fiber_vertex_count(b as i64);
        if c != want {
            failures.push(format!("b = {}: {} standard monomials, {} hull vertices", b, c, want));
        }
    }
    let note = match eventual_period(&counts, 6) {
        Some((p, start)) => {
            if 6 % p != 0 {
                failures.push(format!("period {} does not divide 6", p));
            }
            format!("period {} from b = {}", p, start)
        }
        None => {
            failures.push("no period up to 6".into());
            "not periodic".into()
        }
    };
    Ok(Verdict { failures, note })
}

/// Pointed `(n − 2) × n` configurations with entries in `[0, 8]`.
fn codim_two_corpus() -> Vec<Lattice> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut out = Vec::new();
    let mut k = 0;
    while out.len() < 30 {
        let n = 3 + k % 3;
        let rows: Vec<Vec<i64>> = (0..n - 2).map(|_| (0..n).map(|_| rng.gen_range(0..=8)).collect()).collect();
        let Ok(a) = IntMatrix::from_rows(&rows) else { continue };
        let Ok(l) = Lattice::from_defining_matrix(a) else { continue };
        if l.rank() == 2 && l.is_pointed() {
            out.push(l);
            k += 1;
        }
    }
    out
}

fn c13(corpus: &[Lattice]) -> Run {
    let a = properties(corpus, &[Property::DimensionBounds, Property::Localization], &lim())?;
    let b = properties(corpus, &[Property::AssContainment, Property::IntersectionAgrees], &fan_lim())?;
    Ok(Verdict {
        failures: a.failures.into_iter().chain(b.failures).collect(),
        note: format!("bounds and localization: {}; fan containments: {}", a.note, b.note),
    })
}

fn main() -> ExitCode {
    let corpus = corpus();
    let codim2 = codim_two_corpus();
    let criteria: Vec<(usize, &str, u64, Box<dyn Fn() -> Run + '_>)> = vec![
        (1, "A = [1 2 3] worked example", 5, Box::new(|| via_reproduce("ex-123"))),
        (2, "A = [3 4 5]: P_L strictly inside V_L", 5, Box::new(|| via_reproduce("ex-345"))),
        (3, "full-rank lattice in Z^3: listed P_L and V_L", 60, Box::new(|| via_reproduce("ex-4.3"))),
        (4, "tetrahedron R_u, u = (9,7,7,1)", 60, Box::new(|| via_reproduce("ex-3.12"))),
        (5, "five-facet Groebner cone", 600, Box::new(|| via_reproduce("thm-3.13"))),
        (6, "six-facet Groebner cone", 600, Box::new(|| via_reproduce("ex-6facet"))),
        (7, "circuits vs fiber-vertex oracle vs fan", 600, Box::new(|| c7(&corpus))),
        (8, "radical laws", 600, Box::new(|| properties(&corpus, &[Property::RadEqual], &lim()))),
        (9, "two-dimensional lattices", 600, Box::new(c9)),
        (10, "Segre 2 x 3, unimodular", 600, Box::new(|| via_reproduce("segre-3"))),
        (11, "vertex-count periodicity", 600, Box::new(c11)),
        (12, "codimension-two embedded primes", 600, Box::new(|| properties(&codim2, &[Property::Codim2Embedded], &lim()))),
        (13, "dimension bounds, fan containments, localization", 600, Box::new(|| c13(&corpus))),
    ];

    let mut unexpected = 0;
    let mut known = 0;
    for (k, title, secs, f) in &criteria {
        let t = Instant::now();
        let run = f();
        let dt = t.elapsed();
        let slow = dt > Duration::from_secs(*secs);
        let (ok, body, failures) = match run {
            Ok(v) => (v.failures.is_empty() && !slow, v.note, v.failures),
            Err(e) => (false, format!("error: {}", e), vec![e.to_string()]),
        };
        println!(
            "criterion {:>2}: {} ({:.2} s{}) {}: {}",
            k,
            if ok { "PASS" } else { "FAIL" },
            dt.as_secs_f64(),
            if slow { format!(", over the {} s limit", secs) } else { String::new() },
            title,
            body
        );
        for f in failures.iter().take(10) {
            println!("      {}", f);
        }
        if ok {
            continue;
        }
        let expected = KNOWN.iter().find(|(c, _)| c == k).map(|(_, l)| *l).unwrap_or(&[]);
        if !slow && !failures.is_empty() && failures.iter().all(|f| expected.contains(&f.as_str())) {
            println!("      known: the published value is wrong; see README");
            known += 1;
        } else {
            unexpected += 1;
        }
    }
    println!(
        "{} of {} criteria pass; {} fail on known published errors; {} unexpected failures",
        criteria.len() - known - unexpected,
        criteria.len(),
        known,
        unexpected
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
