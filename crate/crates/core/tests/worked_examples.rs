use latvert_core::decomposition::{
    associated_primes, hilbert_vertex_counts, irreducible_decomposition, top,
};
use latvert_core::fan::{enumerate_initial_ideals, vertex_ideal_intersection};
use latvert_core::groebner::initial_ideal;
use latvert_core::lp::RatVec;
use latvert_core::monomial::parse_ideal;
use latvert_core::vertex_ideal::{
    matroid_radical, matroid_radical_by_intersection, product_ideal, row_bases,
    vertex_ideal_circuits, verify_standard_pair,
};
use latvert_core::{IntMatrix, Lattice, Limits, MonomialIdeal};

fn ker(rows: &[&[i64]]) -> Lattice {
    Lattice::from_defining_matrix(IntMatrix::from_rows(rows).unwrap()).unwrap()
}

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn one_two_three() {
    let l = ker(&[&[1, 2, 3]]);
    let v = vertex_ideal_circuits(&l, &lim()).unwrap();
    assert_eq!(v, parse_ideal(3, "abc, a^2b, a^3c, b^3c^2").unwrap());
    assert_eq!(vertex_ideal_intersection(&l, &lim()).unwrap(), v);
    assert_eq!(associated_primes(&v).unwrap(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);

    let comps = irreducible_decomposition(&v).unwrap();
    let back = MonomialIdeal::intersect_all(3, comps.iter().map(|c| c.ideal()).collect::<Vec<_>>().iter()).unwrap();
    assert_eq!(back, v);
    let listed = ["a^3, ab, b^3", "a^2, ac, c^2", "b, c"].map(|s| parse_ideal(3, s).unwrap());
    assert_eq!(MonomialIdeal::intersect_all(3, listed.iter()).unwrap(), v);

    let (init, _) = initial_ideal(&l, &RatVec::from_ints(&[100, 10, 1]), &lim()).unwrap();
    assert_eq!(init, parse_ideal(3, "a^2, ab, ac, b^3").unwrap());
    assert_eq!(associated_primes(&init).unwrap(), vec![vec![0, 1], vec![0, 1, 2]]);
}

/// The radical of the initial ideal at a generic weight is cut out by the
/// row bases `σ` of `B` with `ωB` strictly inside `cone(b_σ)`.
#[test]
fn radical_of_initial_ideal_from_triangulation() {
    let l = ker(&[&[1, 2, 3]]);
    let rows = l.basis_rows();
    for w in [[100i64, 10, 1], [1, 10, 100], [5, 1, 7], [2, 9, 3]] {
        let target: Vec<i128> = (0..2)
            .map(|k| (0..3).map(|i| (w[i] * rows[i][k]) as i128).sum())
            .collect();
        let mut primes = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                let (p, q) = (&rows[i], &rows[j]);
                let det = (p[0] * q[1] - p[1] * q[0]) as i128;
                if det == 0 {
                    continue;
                }
                // target = s·p + t·q by Cramer's rule.
                let s = target[0] * q[1] as i128 - target[1] * q[0] as i128;
                let t = p[0] as i128 * target[1] - p[1] as i128 * target[0];
                if s * det > 0 && t * det > 0 {
                    primes.push(MonomialIdeal::prime(3, &[i, j]));
                }
            }
        }
        let sr = MonomialIdeal::intersect_all(3, primes.iter()).unwrap();
        let (init, generic) = initial_ideal(&l, &RatVec::from_ints(&w), &lim()).unwrap();
        assert!(!generic || !primes.is_empty());
        assert_eq!(init.radical(), sr, "ω = {:?}", w);
    }
}

#[test]
fn three_four_five() {
    let l = ker(&[&[3, 4, 5]]);
    let p = product_ideal(&l, &lim()).unwrap();
    let v = vertex_ideal_circuits(&l, &lim()).unwrap();
    assert_eq!(p, parse_ideal(3, "ab^2c, a^2bc^2, a^3bc, a^4b^3, a^5c^3, b^5c^4").unwrap());
    assert_eq!(v, parse_ideal(3, "ab^2c, a^2bc, a^4b^3, a^5c^3, b^5c^4").unwrap());
    assert!(p.is_subset_of(&v) && p != v);
    assert_eq!(vertex_ideal_intersection(&l, &lim()).unwrap(), v);
    assert_eq!(top(&p).unwrap(), top(&v).unwrap());
}

fn dim3() -> Lattice {
    Lattice::from_columns(3, &[vec![1, -2, -1], vec![4, 0, 1], vec![3, 5, -9]]).unwrap()
}

#[test]
fn full_rank_product_ideal() {
    let l = dim3();
    let p = product_ideal(&l, &lim()).unwrap();
    let listed = "ab^2c, a^4c, a^5b^2, b^8c^5, abc^12, b^3c^11, b^19c, ab^21, a^4b^19, \
        ac^26, a^3c^25, b^2c^27, bc^38, a^49b, c^103, b^103, a^103";
    assert_eq!(p, parse_ideal(3, listed).unwrap());
    assert_eq!(p.len(), 17);
    assert_eq!(top(&p).unwrap(), p);
}

/// `c^3` is standard for `V_L`: `(0,0,3)` is the unique minimizer of the
/// strictly positive weight `(4,4,1)` on its fiber, hence a vertex.
#[test]
fn full_rank_vertex_ideal_keeps_c_cubed_standard() {
    let l = dim3();
    let v = vertex_ideal_circuits(&l, &lim()).unwrap();
    // Under (4,4,1), fiber points of weight ≤ 3 are (0,0,c) with c ≤ 3.
    for c in 0..3i64 {
        assert!(!l.contains(&[0, 0, c - 3]));
    }
    assert!(!v.contains_exponents(&[0, 0, 3]));
    assert_eq!(v, product_ideal(&l, &lim()).unwrap());
    assert_eq!(top(&v).unwrap(), v);
}

#[test]
fn tetrahedron_standard_pair() {
    let l = Lattice::from_columns(4, &[vec![-4, -6, 9, -2], vec![-3, 9, -6, -2], vec![-3, -2, -2, 3]]).unwrap();
    assert!(verify_standard_pair(&l, &[9, 7, 7, 1], &[], &lim()).unwrap());
}

fn segre() -> Lattice {
    ker(&[
        &[1, 1, 1, 0, 0, 0],
        &[0, 0, 0, 1, 1, 1],
        &[1, 0, 0, 1, 0, 0],
        &[0, 1, 0, 0, 1, 0],
        &[0, 0, 1, 0, 0, 1],
    ])
}

#[test]
fn segre_two_by_three() {
    let l = segre();
    let v = vertex_ideal_circuits(&l, &lim()).unwrap();
    let p = product_ideal(&l, &lim()).unwrap();
    let sr = matroid_radical(&l).unwrap();
    assert_eq!(p, v);
    assert_eq!(v, sr);
    assert_eq!(sr, matroid_radical_by_intersection(&l).unwrap());
    assert_eq!(row_bases(&l).len(), 12);
    let ideals = enumerate_initial_ideals(&l, &lim()).unwrap();
    assert!(ideals.len() >= 6);
    for i in &ideals {
        assert_eq!(&i.radical(), i);
    }
    assert_eq!(MonomialIdeal::intersect_all(6, ideals.iter()).unwrap(), v);
}

/// Vertices of the fiber `{u ∈ N^3 : a + 2b + 3c = t}` by a planar convex
/// hull in the `(a, b)` chart.
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
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull.len() as u64
}

#[test]
fn vertex_counts_are_periodic() {
    let l = ker(&[&[1, 2, 3]]);
    let v = vertex_ideal_circuits(&l, &lim()).unwrap();
    let a = IntMatrix::from_rows(&[[1i64, 2, 3]]).unwrap();
    let degrees: Vec<Vec<i64>> = (0..=60).map(|b| vec![b]).collect();
    let counts: Vec<u64> = hilbert_vertex_counts(&v, &a, &degrees, &lim())
        .unwrap()
        .into_iter()
        .map(|h| h.count)
        .collect();
    let oracle: Vec<u64> = (0..=60).map(fiber_vertex_count).collect();
    assert_eq!(counts, oracle);
    let start = (0..=54).find(|&s| (s..=54).all(|b| counts[b] == counts[b + 6])).unwrap();
    assert!(start <= 12, "periodic only from {}", start);
}
