//! Argument definitions and command dispatch.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use latvert_core::decomposition::{
    associated_primes, hilbert_vertex_counts, irreducible_decomposition, standard_pairs, top,
};
use latvert_core::fan::{groebner_fan, vertex_ideal_intersection};
use latvert_core::groebner::{facet_text, groebner_cone, reduced_gb};
use latvert_core::monomial::var_name;
use latvert_core::properties::{check, configuration, Instance, Property};
use latvert_core::vertex_ideal::{
    matroid_radical, oracle_mismatches, product_ideal, vertex_ideal_circuits, vertex_ideal_oracle,
};
use latvert_core::{graver_basis, Error, Lattice, Limits, Monomial, MonomialIdeal};
use serde_json::{json, Value};

use crate::input;
use crate::reproduce::{self, EXAMPLES};

pub const EXIT_OK: i32 = 0;
/// Malformed input, unmet preconditions or an unknown example id.
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
/// A `check` found violations or a `reproduce` assertion failed.
pub const EXIT_FAILED: i32 = 3;

const DEFAULT_BOX: u32 = 6;

#[derive(Parser, Debug)]
#[command(name = "latvert", version, about = "Graver bases, vertex ideals and Groebner fans of integer lattices")]
pub struct Cli {
    /// Defining matrix A (L = ker A), as a file or inline like "[1 2 3]".
    #[arg(long, global = true, value_name = "A")]
    pub matrix: Option<String>,
    /// Lattice basis B (n x m, basis vectors as columns), as a file or inline.
    #[arg(long, global = true, value_name = "B")]
    pub lattice_basis: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap on lattice points enumerated and on Graver elements held.
    #[arg(long, global = true, value_name = "N")]
    pub budget: Option<u64>,
    /// Box [0, N]^n for the fiber-vertex oracle.
    #[arg(long = "box", global = true, value_name = "N")]
    pub box_bound: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Graver basis of L.
    Graver,
    /// Vertex ideal V_L.
    VertexIdeal {
        #[arg(long, value_enum, default_value_t = Method::Circuits)]
        method: Method,
    },
    /// Product ideal P_L.
    ProductIdeal,
    /// Radical of V_L.
    Radical {
        #[arg(long, value_enum, default_value_t = Via::Matroid)]
        via: Via,
    },
    /// Standard pairs of a monomial ideal (V_L by default).
    StdPairs(Target),
    /// Irreducible decomposition of a monomial ideal.
    IrrDecomp(Target),
    /// Associated primes of a monomial ideal.
    AssocPrimes(Target),
    /// Intersection of the top-dimensional primary components.
    Top(Target),
    /// Initial ideal of I_L for a weight vector.
    Initial {
        /// Comma-separated rationals, e.g. "100,10,1" or "1/2,3,0".
        #[arg(long)]
        weight: String,
        /// Also print the reduced Groebner basis.
        #[arg(long)]
        show_gb: bool,
    },
    /// Groebner cone of a weight vector.
    Cone {
        #[arg(long)]
        weight: String,
        /// Print only the facet count.
        #[arg(long)]
        count_facets: bool,
    },
    /// All maximal cones of the Groebner fan.
    Fan {
        #[arg(long, default_value_t = 100_000)]
        max_cones: usize,
    },
    /// Number of fiber vertices (standard monomials of V_L) in given degrees.
    HilbertCounts {
        /// "0..=60" for a one-row matrix, or vectors like "3,1; 4,2".
        #[arg(long)]
        degrees: String,
    },
    /// Check structural identities between P_L, V_L and their radicals.
    Check {
        /// A property name, or "all".
        #[arg(long, default_value = "all")]
        property: String,
        /// Cone cap for the checks that walk the Groebner fan.
        #[arg(long, default_value_t = 100_000)]
        max_cones: usize,
    },
    /// Rerun a worked example against its published values.
    Reproduce {
        /// Example id; see --list.
        id: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Positive circuits of the Graver basis.
    Circuits,
    /// Intersection of all initial ideals.
    Intersection,
    /// Fiber vertices inside the --box.
    Oracle,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Via {
    /// Stanley-Reisner ideal of the matroid complex.
    Matroid,
    /// Supports of the generators of V_L.
    Supports,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Vertex,
    Product,
}

#[derive(Args, Debug)]
pub struct Target {
    /// Lattice ideal to work on.
    #[arg(long, value_enum, default_value_t = Which::Vertex)]
    pub of: Which,
    /// An explicit ideal such as "abc, a^2b" instead of a lattice ideal.
    #[arg(long, requires = "vars")]
    pub ideal: Option<String>,
    /// Number of variables of --ideal.
    #[arg(long)]
    pub vars: Option<usize>,
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => {
            let code = match e.downcast_ref::<Error>() {
                Some(err) if err.is_budget() => EXIT_BUDGET,
                _ => EXIT_INVALID,
            };
            Outcome {
                stdout: String::new(),
                stderr: format!("error: {:#}\n", e),
                code,
            }
        }
    }
}

fn limits(cli: &Cli) -> Result<Limits> {
    let mut l = Limits::default();
    if let Some(b) = cli.budget {
        if b == 0 {
            bail!("--budget must be positive");
        }
        l.fiber_points = b;
        l.graver_elements = usize::try_from(b).unwrap_or(usize::MAX);
    }
    Ok(l)
}

fn lattice(cli: &Cli) -> Result<Lattice> {
    input::lattice(cli.matrix.as_deref(), cli.lattice_basis.as_deref())
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let lim = limits(cli)?;
    let json = cli.json;
    let mut code = EXIT_OK;
    let value: Value;
    let mut text = String::new();

    match &cli.command {
        Command::Graver => {
            let l = lattice(cli)?;
            let g = graver_basis(&l, &lim)?;
            let vecs: Vec<&Vec<i64>> = g.iter().collect();
            value = json!({ "graver": vecs, "count": g.len() });
            writeln!(text, "elements: {}", g.len())?;
            for v in g.iter() {
                writeln!(text, "{}", join(v))?;
            }
        }
        Command::VertexIdeal { method } => {
            let l = lattice(cli)?;
            let n = l.ambient_dim();
            let pointed = l.is_pointed();
            match method {
                Method::Oracle => {
                    let bound = cli.box_bound.unwrap_or(DEFAULT_BOX);
                    let standard = vertex_ideal_oracle(&l, bound, &lim)?;
                    let names: Vec<String> =
                        standard.iter().map(|u| Monomial::new(u.clone()).pretty()).collect();
                    value = json!({
                        "method": "oracle",
                        "box": bound,
                        "standard": standard,
                        "standard_monomials": names,
                    });
                    writeln!(text, "standard monomials in [0,{}]^{}: {}", bound, n, standard.len())?;
                    for s in names {
                        writeln!(text, "{}", s)?;
                    }
                }
                Method::Circuits | Method::Intersection => {
                    let v = if *method == Method::Circuits {
                        vertex_ideal_circuits(&l, &lim)?
                    } else {
                        vertex_ideal_intersection(&l, &lim)?
                    };
                    let mut obj = json!({
                        "method": if *method == Method::Circuits { "circuits" } else { "intersection" },
                        "pointed": pointed,
                        "ideal": ideal_json(&v),
                    });
                    if !pointed {
                        writeln!(text, "# L is not pointed: unvalidated regime")?;
                    }
                    writeln!(text, "{}", v)?;
                    if let Some(bound) = cli.box_bound {
                        let bad = oracle_mismatches(&l, &v, bound, &lim)?;
                        obj["oracle_mismatches"] = json!(bad);
                        writeln!(text, "mismatches against fiber vertices in [0,{}]^{}: {}", bound, n, bad.len())?;
                        for u in &bad {
                            writeln!(text, "  {}", join(u))?;
                        }
                        if !bad.is_empty() {
                            code = EXIT_FAILED;
                        }
                    }
                    value = obj;
                }
            }
        }
        Command::ProductIdeal => {
            let l = lattice(cli)?;
            let p = product_ideal(&l, &lim)?;
            value = json!({ "ideal": ideal_json(&p) });
            writeln!(text, "{}", p)?;
        }
        Command::Radical { via } => {
            let l = lattice(cli)?;
            let r = match via {
                Via::Matroid => matroid_radical(&l)?,
                Via::Supports => vertex_ideal_circuits(&l, &lim)?.radical(),
            };
            value = json!({ "ideal": ideal_json(&r) });
            writeln!(text, "{}", r)?;
        }
        Command::StdPairs(t) => {
            let m = target_ideal(cli, t, &lim)?;
            let n = m.ambient();
            let pairs = standard_pairs(&m)?;
            let items: Vec<Value> = pairs
                .iter()
                .map(|p| json!({ "root": p.root.exponents(), "free": p.free }))
                .collect();
            value = json!({ "standard_pairs": items, "count": pairs.len() });
            writeln!(text, "standard pairs: {}", pairs.len())?;
            for p in &pairs {
                writeln!(text, "({}, {})", p.root.pretty(), var_set(n, &p.free))?;
            }
        }
        Command::IrrDecomp(t) => {
            let m = target_ideal(cli, t, &lim)?;
            let comps = irreducible_decomposition(&m)?;
            let items: Vec<Value> = comps
                .iter()
                .map(|c| json!({ "ideal": ideal_json(&c.ideal()), "prime": c.prime() }))
                .collect();
            value = json!({ "components": items });
            for c in &comps {
                writeln!(text, "{}", c.ideal())?;
            }
        }
        Command::AssocPrimes(t) => {
            let m = target_ideal(cli, t, &lim)?;
            let n = m.ambient();
            let primes = associated_primes(&m)?;
            let names: Vec<String> = primes.iter().map(|p| prime_name(n, p)).collect();
            value = json!({ "primes": primes, "names": names });
            for s in names {
                writeln!(text, "{}", s)?;
            }
        }
        Command::Top(t) => {
            let m = target_ideal(cli, t, &lim)?;
            let tm = top(&m)?;
            value = json!({ "ideal": ideal_json(&tm) });
            writeln!(text, "{}", tm)?;
        }
        Command::Initial { weight, show_gb } => {
            let l = lattice(cli)?;
            let w = input::parse_weight(weight, l.ambient_dim())?;
            let gb = reduced_gb(&l, &w, &lim)?;
            let init = gb.initial_ideal(l.ambient_dim());
            let mut obj = json!({ "ideal": ideal_json(&init), "generic": gb.is_generic() });
            writeln!(text, "{}", init)?;
            writeln!(text, "generic: {}", gb.is_generic())?;
            if *show_gb {
                let elems: Vec<String> = gb.elements.iter().map(|e| e.pretty()).collect();
                obj["groebner_basis"] = json!(elems);
                writeln!(text, "groebner basis: {}", elems.len())?;
                for e in elems {
                    writeln!(text, "{}", e)?;
                }
            }
            value = obj;
        }
        Command::Cone { weight, count_facets } => {
            let l = lattice(cli)?;
            let w = input::parse_weight(weight, l.ambient_dim())?;
            let gb = reduced_gb(&l, &w, &lim)?;
            let cone = groebner_cone(&gb)?;
            let facets: Vec<String> = cone.facets.iter().map(facet_text).collect();
            value = json!({
                "facet_count": cone.facet_count(),
                "facets": facets,
                "normals": cone.facets.iter().map(|h| h.primitive().iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "degenerate": cone.degenerate,
            });
            if !count_facets {
                for f in &facets {
                    writeln!(text, "{}", f)?;
                }
                if cone.degenerate {
                    writeln!(text, "# weight is not generic: cone is degenerate")?;
                }
            }
            writeln!(text, "facets: {}", cone.facet_count())?;
        }
        Command::Fan { max_cones } => {
            let l = lattice(cli)?;
            let lim = Limits {
                fan_cones: *max_cones,
                ..lim
            };
            let cones = groebner_fan(&l, &lim)?;
            let items: Vec<Value> = cones
                .iter()
                .map(|c| json!({ "initial": ideal_json(&c.initial), "facets": c.cone.facet_count() }))
                .collect();
            value = json!({ "cones": items, "count": cones.len() });
            writeln!(text, "cones: {}", cones.len())?;
            for c in &cones {
                writeln!(text, "{}  facets: {}", c.initial, c.cone.facet_count())?;
            }
        }
        Command::HilbertCounts { degrees } => {
            let l = lattice(cli)?;
            let a = configuration(&l);
            let degs = input::parse_degrees(degrees, a.rows())?;
            let v = vertex_ideal_circuits(&l, &lim)?;
            let counts = hilbert_vertex_counts(&v, &a, &degs, &lim)?;
            let items: Vec<Value> = counts
                .iter()
                .map(|h| json!({ "degree": h.degree, "count": h.count, "in_semigroup": h.in_semigroup }))
                .collect();
            value = json!({ "counts": items });
            for h in &counts {
                writeln!(text, "{}: {}", join(&h.degree), h.count)?;
            }
        }
        Command::Check { property, max_cones } => {
            let l = lattice(cli)?;
            let props: Vec<Property> = if property == "all" {
                Property::ALL.to_vec()
            } else {
                vec![property.parse::<Property>()?]
            };
            let lim = Limits {
                fan_cones: *max_cones,
                ..lim
            };
            let inst = Instance::new(l, &lim)?;
            let mut items = Vec::new();
            let mut budget_hit = false;
            for p in props {
                let (status, details): (&str, Vec<String>) = match check(&inst, p, &lim) {
                    Ok(v) if v.is_empty() => ("pass", v),
                    Ok(v) => {
                        code = EXIT_FAILED;
                        ("fail", v)
                    }
                    Err(Error::InvalidInput(why)) => ("n/a", vec![why]),
                    Err(e) if e.is_budget() => {
                        budget_hit = true;
                        ("budget", vec![e.to_string()])
                    }
                    Err(e) => return Err(e.into()),
                };
                match details.first() {
                    Some(d) if status != "fail" => writeln!(text, "{} {}: {}", status.to_uppercase(), p, d)?,
                    _ => writeln!(text, "{} {}", status.to_uppercase(), p)?,
                }
                if status == "fail" {
                    for d in &details {
                        writeln!(text, "  {}", d)?;
                    }
                }
                items.push(json!({ "property": p.name(), "status": status, "details": details }));
            }
            if budget_hit && code == EXIT_OK {
                code = EXIT_BUDGET;
            }
            value = json!({ "checks": items });
        }
        Command::Reproduce { id, list } => {
            if *list {
                let items: Vec<Value> = EXAMPLES.iter().map(|(id, t)| json!({ "id": id, "title": t })).collect();
                value = json!({ "examples": items });
                for (id, t) in EXAMPLES {
                    writeln!(text, "{:<18} {}", id, t)?;
                }
            } else {
                let id = id.as_deref().ok_or_else(|| anyhow!("give an example id or --list"))?;
                let rep = reproduce::reproduce(id, &lim)?;
                if !rep.passed() {
                    code = EXIT_FAILED;
                }
                writeln!(text, "{}: {}", rep.id, rep.title)?;
                for a in &rep.assertions {
                    writeln!(text, "{} {}", if a.passed { "PASS" } else { "FAIL" }, a.label)?;
                    if let Some(d) = &a.detail {
                        writeln!(text, "  {}", d)?;
                    }
                }
                let failed = rep.failures().count();
                writeln!(
                    text,
                    "{}: {} of {} assertions passed",
                    if failed == 0 { "pass" } else { "fail" },
                    rep.assertions.len() - failed,
                    rep.assertions.len()
                )?;
                let items: Vec<Value> = rep
                    .assertions
                    .iter()
                    .map(|a| json!({ "label": a.label, "passed": a.passed, "detail": a.detail }))
                    .collect();
                value = json!({ "id": rep.id, "passed": rep.passed(), "assertions": items });
            }
        }
    }

    let out = if json {
        let mut s = serde_json::to_string_pretty(&value)?;
        s.push('\n');
        s
    } else {
        text
    };
    Ok((out, code))
}

fn target_ideal(cli: &Cli, t: &Target, lim: &Limits) -> Result<MonomialIdeal> {
    if let Some(s) = &t.ideal {
        let n = t.vars.ok_or_else(|| anyhow!("--ideal needs --vars"))?;
        return input::parse_monomial_ideal(s, n);
    }
    let l = lattice(cli)?;
    Ok(match t.of {
        Which::Vertex => vertex_ideal_circuits(&l, lim)?,
        Which::Product => product_ideal(&l, lim)?,
    })
}

fn ideal_json(m: &MonomialIdeal) -> Value {
    let gens: Vec<String> = m.generators().iter().map(Monomial::pretty).collect();
    let exps: Vec<&[u32]> = m.generators().iter().map(Monomial::exponents).collect();
    json!({ "variables": m.ambient(), "generators": gens, "exponents": exps })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn var_set(n: usize, vars: &[usize]) -> String {
    let names: Vec<String> = vars.iter().map(|&i| var_name(n, i)).collect();
    format!("{{{}}}", names.join(", "))
}

fn prime_name(n: usize, vars: &[usize]) -> String {
    let names: Vec<String> = vars.iter().map(|&i| var_name(n, i)).collect();
    format!("<{}>", names.join(", "))
}
