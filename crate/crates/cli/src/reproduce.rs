//! Worked examples with their published values, rerun and compared
//! assertion by assertion.

use std::fmt::Debug;

use latvert_core::decomposition::{
    associated_primes, hilbert_vertex_counts, irreducible_decomposition, standard_pairs, top,
};
use latvert_core::fan::{enumerate_initial_ideals, vertex_ideal_intersection};
use latvert_core::groebner::{groebner_cone, initial_ideal, reduced_gb};
use latvert_core::lp::RatVec;
use latvert_core::monomial::{parse_ideal, parse_monomial};
use latvert_core::polyhedra::{fiber, is_critical, origin_is_vertex, r_polyhedron};
use latvert_core::properties::is_unimodular;
use latvert_core::vertex_ideal::{
    matroid_radical, matroid_radical_by_intersection, product_ideal, row_bases, vertex_ideal_circuits,
    verify_standard_pair,
};
use latvert_core::{Error, IntMatrix, Lattice, Limits, Monomial, MonomialIdeal, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assertion {
    pub label: String,
    pub passed: bool,
    /// What was computed, when it differs from the expectation.
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub id: &'static str,
    pub title: &'static str,
    pub assertions: Vec<Assertion>,
}

impl Report {
    fn new(id: &'static str) -> Self {
        let title = EXAMPLES.iter().find(|e| e.0 == id).map(|e| e.1).unwrap_or("");
        Report {
            id,
            title,
            assertions: Vec::new(),
        }
    }

    fn check(&mut self, label: impl Into<String>, passed: bool) {
        self.assertions.push(Assertion {
            label: label.into(),
            passed,
            detail: None,
        });
    }

    fn check_eq<T: Debug + PartialEq>(&mut self, label: impl Into<String>, got: &T, want: &T) {
        let passed = got == want;
        self.assertions.push(Assertion {
            label: label.into(),
            passed,
            detail: (!passed).then(|| format!("got {:?}, expected {:?}", got, want)),
        });
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.passed)
    }
}

/// Registered example ids with a one-line description.
pub const EXAMPLES: &[(&str, &str)] = &[
    ("ex-123", "A = [1 2 3]: vertex ideal, its decomposition and one initial ideal"),
    ("ex-345", "A = [3 4 5]: the product ideal sits strictly inside the vertex ideal"),
    ("ex-4.3", "a full-rank lattice in Z^3 with P_L and V_L listed"),
    ("ex-3.12", "A = [15 247 248 345], u = (9,7,7,1): the polytope R_u and its facets"),
    ("ex-3.12-embedded", "A = [15 247 248 345]: the maximal ideal is associated to V_L"),
    ("thm-3.13", "A = [15 247 248 345], w = (111,0,342,1): a Groebner cone with five facets"),
    ("ex-6facet", "a 4 x 7 configuration with a six-facet Groebner cone"),
    ("segre-3", "the 2 x 3 Segre configuration: the unimodular case"),
    ("periodicity-123", "A = [1 2 3]: fiber vertex counts over b = 0..60 are periodic"),
];

pub fn reproduce(id: &str, limits: &Limits) -> Result<Report> {
    match id {
        "ex-123" => ex_123(limits),
        "ex-345" => ex_345(limits),
        "ex-4.3" => ex_4_3(limits),
        "ex-3.12" => ex_3_12(limits),
        "ex-3.12-embedded" => ex_3_12_embedded(limits),
        "thm-3.13" => thm_3_13(limits),
        "ex-6facet" => ex_6facet(limits),
        "segre-3" => segre_3(limits),
        "periodicity-123" => periodicity_123(limits),
        _ => Err(Error::UnknownExample(id.into())),
    }
}

fn ker<R: AsRef<[i64]>>(rows: &[R]) -> Result<Lattice> {
    Lattice::from_defining_matrix(IntMatrix::from_rows(rows)?)
}

fn ideal(n: usize, s: &str) -> MonomialIdeal {
    parse_ideal(n, s).expect("embedded ideal parses")
}

fn primes(v: &[&[usize]]) -> Vec<Vec<usize>> {
    v.iter().map(|p| p.to_vec()).collect()
}

fn ex_123(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("ex-123");
    let l = ker(&[[1i64, 2, 3]])?;
    let listed = ideal(3, "abc, a^2b, a^3c, b^3c^2");
    let v = vertex_ideal_circuits(&l, limits)?;
    r.check_eq("V_L from positive circuits", &v, &listed);
    r.check_eq("V_L as intersection of initial ideals", &vertex_ideal_intersection(&l, limits)?, &listed);
    r.check_eq(
        "Ass(V_L) = {<a,b>, <a,c>, <b,c>}",
        &associated_primes(&v)?,
        &primes(&[&[0, 1], &[0, 2], &[1, 2]]),
    );
    let comps: Vec<MonomialIdeal> = irreducible_decomposition(&v)?.iter().map(|c| c.ideal()).collect();
    r.check_eq("irreducible components recombine to V_L", &MonomialIdeal::intersect_all(3, &comps)?, &v);
    let decomposition = ["a^3, ab, b^3", "a^2, ac, c^2", "b, c"].map(|s| ideal(3, s));
    r.check_eq(
        "<a^3,ab,b^3> ∩ <a^2,ac,c^2> ∩ <b,c> = V_L",
        &MonomialIdeal::intersect_all(3, &decomposition)?,
        &v,
    );
    let (init, generic) = initial_ideal(&l, &RatVec::from_ints(&[100, 10, 1]), limits)?;
    r.check("w = (100,10,1) is generic", generic);
    r.check_eq("in_w(I_L) = <a^2, ab, ac, b^3>", &init, &ideal(3, "a^2, ab, ac, b^3"));
    r.check_eq(
        "Ass(in_w(I_L)) = {<a,b>, <a,b,c>}",
        &associated_primes(&init)?,
        &primes(&[&[0, 1], &[0, 1, 2]]),
    );
    Ok(r)
}

fn ex_345(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("ex-345");
    let l = ker(&[[3i64, 4, 5]])?;
    let p = product_ideal(&l, limits)?;
    let v = vertex_ideal_circuits(&l, limits)?;
    r.check_eq("P_L", &p, &ideal(3, "ab^2c, a^2bc^2, a^3bc, a^4b^3, a^5c^3, b^5c^4"));
    r.check_eq("V_L", &v, &ideal(3, "ab^2c, a^2bc, a^4b^3, a^5c^3, b^5c^4"));
    r.check("P_L is strictly contained in V_L", p.is_subset_of(&v) && p != v);
    r.check_eq("V_L as intersection of initial ideals", &vertex_ideal_intersection(&l, limits)?, &v);
    r.check_eq("top(P_L) = top(V_L)", &top(&p)?, &top(&v)?);
    Ok(r)
}

fn ex_4_3(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("ex-4.3");
    let l = Lattice::from_columns(3, &[vec![1, -2, -1], vec![4, 0, 1], vec![3, 5, -9]])?;
    let p = product_ideal(&l, limits)?;
    let v = vertex_ideal_circuits(&l, limits)?;
    let listed_p = ideal(
        3,
        "ab^2c, a^4c, a^5b^2, b^8c^5, abc^12, b^3c^11, b^19c, ab^21, a^4b^19, \
         ac^26, a^3c^25, b^2c^27, bc^38, a^49b, c^103, b^103, a^103",
    );
    let listed_v = ideal(
        3,
        "c^3, ab^2c, a^4c, a^5b^2, b^19c, ab^21, a^4b^19, a^49b, b^103, a^103",
    );
    r.check_eq("P_L has the 17 listed generators", &p, &listed_p);
    r.check_eq("V_L has the 10 listed generators", &v, &listed_v);
    r.check("P_L is strictly contained in V_L", p.is_subset_of(&v) && p != v);
    let (tp, tv) = (top(&p)?, top(&v)?);
    r.check_eq("Top(P_L) = P_L", &tp, &p);
    r.check_eq("Top(V_L) = V_L", &tv, &v);
    r.check("Top(P_L) differs from Top(V_L)", tp != tv);
    r.check(
        "c^3 is standard: (0,0,3) uniquely minimizes (4,4,1) on its fiber",
        unique_minimizer(&l, &[0, 0, 3], &[4, 4, 1]),
    );
    r.check("the computed V_L does not contain c^3", !v.contains_exponents(&[0, 0, 3]));
    Ok(r)
}

/// Whether `u` is the only `v ∈ N^n` with `u − v ∈ L` and `w·v ≤ w·u`, for a
/// strictly positive `w`. That makes `u` a vertex of its fiber.
fn unique_minimizer(l: &Lattice, u: &[i64], w: &[i64]) -> bool {
    let cap: i64 = u.iter().zip(w).map(|(a, b)| a * b).sum();
    let mut v = vec![0i64; u.len()];
    fn walk(l: &Lattice, u: &[i64], w: &[i64], v: &mut Vec<i64>, i: usize, left: i64) -> bool {
        if i == v.len() {
            let d: Vec<i64> = u.iter().zip(v.iter()).map(|(a, b)| a - b).collect();
            return v.as_slice() == u || !l.contains(&d);
        }
        for x in 0..=left / w[i] {
            v[i] = x;
            if !walk(l, u, w, v, i + 1, left - x * w[i]) {
                return false;
            }
        }
        v[i] = 0;
        true
    }
    w.iter().all(|&x| x > 0) && walk(l, u, w, &mut v, 0, cap)
}

fn tetrahedron() -> Result<Lattice> {
    Lattice::from_columns(4, &[vec![-4, -6, 9, -2], vec![-3, 9, -6, -2], vec![-3, -2, -2, 3]])
}

const U: [i64; 4] = [9, 7, 7, 1];

fn ex_3_12(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("ex-3.12");
    let l = tetrahedron()?;
    r.check("B spans ker [15 247 248 345]", l == ker(&[[15i64, 247, 248, 345]])?);
    let all = [0usize, 1, 2, 3];
    let sample = r_polyhedron(&l, &U, &all, limits)?;
    let mut got = sample.hull_vertices.clone();
    got.sort();
    let sorted = |v: &[[i64; 3]]| {
        let mut v: Vec<Vec<i64>> = v.iter().map(|x| x.to_vec()).collect();
        v.sort();
        v
    };
    let printed = sorted(&[[0, 0, -3], [0, 0, 0], [1, 0, 1], [0, 1, 1], [3, 3, 1], [23, 23, 31]]);
    let corrected = sorted(&[[0, 0, -3], [0, 0, 0], [1, 0, 1], [0, 1, 1], [1, 1, -2], [23, 23, 31]]);
    r.check_eq("R_u has exactly the six listed vertices", &got, &printed);
    r.check_eq("R_u has these six vertices, with (1,1,-2) for (3,3,1)", &got, &corrected);
    r.check(
        "(3,3,1) lies in R_u on the edge from (1,1,-2) to (23,23,31)",
        sample.lattice_points.contains(&vec![3, 3, 1]) && !got.contains(&vec![3, 3, 1]),
    );

    let rows = l.basis_rows();
    let in_q = |keep: &[usize], z: &[i64]| {
        keep.iter().all(|&i| rows[i].iter().zip(z).map(|(b, x)| b * x).sum::<i64>() <= U[i])
    };
    // (dropped row, published lattice points of the larger polyhedron)
    let witnesses: [(usize, &[[i64; 3]]); 4] = [
        (1, &[[-1, 0, -1]]),
        (2, &[[0, -1, -1]]),
        (3, &[[-1, 0, 0], [0, -1, 0]]),
        (0, &[[-1, -1, -1]]),
    ];
    for (drop, points) in witnesses {
        let keep: Vec<usize> = all.iter().copied().filter(|&i| i != drop).collect();
        let name: String = keep.iter().map(|i| (b'1' + *i as u8) as char).collect();
        r.check(
            format!("R^{{{}}}_u contains {:?}", name, points),
            points.iter().all(|z| in_q(&keep, z)),
        );
        r.check(
            format!("the origin is not a vertex of R^{{{}}}_u", name),
            !origin_is_vertex(&l, &U, &keep, limits)?,
        );
    }
    r.check("Q_u is critical", is_critical(&l, &U, &all, limits)?);
    r.check("(x^u, {}) is a standard pair of V_L", verify_standard_pair(&l, &U, &[], limits)?);
    Ok(r)
}

fn ex_3_12_embedded(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("ex-3.12-embedded");
    let l = tetrahedron()?;
    let v = vertex_ideal_circuits(&l, limits)?;
    let ass = associated_primes(&v)?;
    r.check("<a,b,c,d> is an associated prime of V_L", ass.contains(&vec![0, 1, 2, 3]));
    let pairs = standard_pairs(&v)?;
    let root = Monomial::new(U.iter().map(|&x| x as u32).collect());
    r.check(
        "(a^9b^7c^7d, {}) appears among the standard pairs of V_L",
        pairs.iter().any(|p| p.root == root && p.free.is_empty()),
    );
    Ok(r)
}

fn binomial(n: usize, s: &str) -> Vec<i64> {
    let (l, r) = s.split_once('-').expect("binomial has two terms");
    let a = parse_monomial(n, l).expect("lead parses");
    let b = parse_monomial(n, r).expect("trail parses");
    a.exponents().iter().zip(b.exponents()).map(|(&x, &y)| x as i64 - y as i64).collect()
}

const THM_3_13_GB: &str = "a^23-d, da^10-bc, d^12a^4-b^16c, d^55a^3-b^76c, d^161a^2-b^225, \
    d^204a-b^285, d^247-b^345, cd^9a^7-b^14, cd^20a-b^29, cd^63-b^89, \
    c^2d^8-b^13a^3, c^4d^5-b^11, c^5d^4-b^10a^10, c^6d^2a^3-b^9, c^7a^16-b^8, \
    c^7d-b^8a^7, c^8-b^7a^17, bca^13-d^2, b^2c^2a^3-d^3, b^3c^3-d^4a^7, \
    b^9a^20-c^6d^3, b^12a^13-c^3d^7, b^15a^6-d^11, b^31ca^2-d^23, b^44a^5-cd^31, \
    b^47c^2-d^35a^2, b^60a-d^43, b^136c-d^98a^2";

fn thm_3_13(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("thm-3.13");
    let l = ker(&[[15i64, 247, 248, 345]])?;
    let w = RatVec::from_ints(&[111, 0, 342, 1]);
    let gb = reduced_gb(&l, &w, limits)?;
    let mut want: Vec<Vec<i64>> = THM_3_13_GB.split(',').map(|s| binomial(4, s.trim())).collect();
    want.sort();
    let mut got: Vec<Vec<i64>> = gb.elements.iter().map(|e| e.vector.clone()).collect();
    got.sort();
    r.check_eq("the reduced Groebner basis has 28 elements", &got.len(), &28);
    r.check_eq("the reduced Groebner basis is the listed one, leading terms first", &got, &want);
    r.check("w is generic", gb.is_generic());
    let cone = groebner_cone(&gb)?;
    r.check_eq("the Groebner cone has 5 facets", &cone.facet_count(), &5);
    let mut facets: Vec<Vec<i64>> = cone
        .facets
        .iter()
        .map(|h| h.primitive().iter().map(|x| i64::try_from(x).unwrap_or(i64::MAX)).collect())
        .collect();
    facets.sort();
    // h·w <= 0, read off the displayed system.
    let mut displayed = vec![
        vec![0, 345, 0, -247],
        vec![-20, -9, 6, 3],
        vec![2, -136, -1, 98],
        vec![-3, 76, 1, -55],
        vec![7, -3, -3, 4],
    ];
    displayed.sort();
    r.check_eq("facets match the displayed inequalities", &facets, &displayed);
    r.check("w lies in the interior of the cone", cone.contains_in_interior(&w));
    Ok(r)
}

fn ex_6facet(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("ex-6facet");
    let l = ker(&[
        [1i64, 1, 1, 1, 1, 1, 1],
        [2, 8, 9, 7, 10, 6, 5],
        [8, 7, 4, 8, 7, 2, 2],
        [5, 9, 4, 2, 9, 8, 3],
    ])?;
    let w = RatVec::from_ints(&[252, 197, 0, 0, 153, 0, 0]);
    let gb = reduced_gb(&l, &w, limits)?;
    r.check("w is generic", gb.is_generic());
    let cone = groebner_cone(&gb)?;
    r.check_eq("the Groebner cone has 6 facets", &cone.facet_count(), &6);
    r.check("w lies in the interior of the cone", cone.contains_in_interior(&w));
    Ok(r)
}

fn segre_3(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("segre-3");
    let l = ker(&[
        [1i64, 1, 1, 0, 0, 0],
        [0, 0, 0, 1, 1, 1],
        [1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 1],
    ])?;
    r.check("all maximal minors are ±1", is_unimodular(&l)?);
    let p = product_ideal(&l, limits)?;
    let v = vertex_ideal_circuits(&l, limits)?;
    let sr = matroid_radical(&l)?;
    r.check_eq("P_L = V_L", &p, &v);
    r.check_eq("V_L = matroid radical", &v, &sr);
    r.check_eq("matroid radical by both constructions", &matroid_radical_by_intersection(&l)?, &sr);
    r.check_eq("the matroid complex has 3·2^2 = 12 facets", &row_bases(&l).len(), &12);
    let ideals = enumerate_initial_ideals(&l, limits)?;
    r.check(
        format!("at least 3! = 6 initial ideals ({} found)", ideals.len()),
        ideals.len() >= 6,
    );
    r.check("every initial ideal is squarefree", ideals.iter().all(|i| i.radical() == *i));
    r.check_eq("the initial ideals intersect to V_L", &MonomialIdeal::intersect_all(6, &ideals)?, &v);
    Ok(r)
}

/// Smallest `p` with `counts[b] = counts[b + p]` from some prefix on, with
/// the tail required to cover at least two full periods of `max_p`.
pub fn eventual_period(counts: &[u64], max_p: usize) -> Option<(usize, usize)> {
    let last = counts.len().checked_sub(2 * max_p + 1)?;
    (1..=max_p).find_map(|p| {
        let start = (0..=last).find(|&s| (s..counts.len() - p).all(|b| counts[b] == counts[b + p]))?;
        Some((p, start))
    })
}

fn periodicity_123(limits: &Limits) -> Result<Report> {
    let mut r = Report::new("periodicity-123");
    let l = ker(&[[1i64, 2, 3]])?;
    let v = vertex_ideal_circuits(&l, limits)?;
    let a = IntMatrix::from_rows(&[[1i64, 2, 3]])?;
    let degrees: Vec<Vec<i64>> = (0..=60).map(|b| vec![b]).collect();
    let counts: Vec<u64> = hilbert_vertex_counts(&v, &a, &degrees, limits)?
        .into_iter()
        .map(|h| h.count)
        .collect();
    let direct: Vec<u64> = (0..=60i64)
        .map(|b| fiber(&l, &[b, 0, 0], limits).map(|f| f.vertices.len() as u64))
        .collect::<Result<_>>()?;
    r.check_eq("standard monomials of V_L count fiber vertices", &counts, &direct);
    match eventual_period(&counts, 6) {
        Some((p, start)) => r.check(
            format!("counts are periodic with period {} from b = {}", p, start),
            6 % p == 0,
        ),
        None => r.check("counts become periodic with period dividing 6", false),
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn period_detection() {
        let c: Vec<u64> = (0..40).map(|b| if b < 5 { 9 } else { [1, 2, 3][b % 3] }).collect();
        assert_eq!(eventual_period(&c, 6), Some((3, 5)));
        assert_eq!(eventual_period(&[1, 2, 3], 6), None);
    }

    #[test]
    fn unknown_id() {
        assert_eq!(
            reproduce("nope", &Limits::default()).unwrap_err(),
            Error::UnknownExample("nope".into())
        );
    }

    #[test]
    fn small_examples_pass() {
        for id in ["ex-123", "ex-345", "periodicity-123"] {
            let rep = reproduce(id, &Limits::default()).unwrap();
            assert!(rep.passed(), "{}: {:?}", id, rep.failures().collect::<Vec<_>>());
        }
    }
}
