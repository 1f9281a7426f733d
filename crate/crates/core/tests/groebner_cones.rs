use latvert_core::groebner::{groebner_cone, reduced_gb};
use latvert_core::lp::RatVec;
use latvert_core::monomial::parse_monomial;
use latvert_core::{IntMatrix, Lattice, Limits};

fn binomial(n: usize, s: &str) -> Vec<i64> {
    let (l, r) = s.split_once('-').unwrap();
    let a = parse_monomial(n, l).unwrap();
    let b = parse_monomial(n, r).unwrap();
    a.exponents().iter().zip(b.exponents()).map(|(&x, &y)| x as i64 - y as i64).collect()
}

#[test]
fn codim_three_five_facets() {
    let l = Lattice::from_defining_matrix(IntMatrix::from_rows(&[[15i64, 247, 248, 345]]).unwrap()).unwrap();
    let gb = reduced_gb(&l, &RatVec::from_ints(&[111, 0, 342, 1]), &Limits::default()).unwrap();
    let listed = "a^23-d, da^10-bc, d^12a^4-b^16c, d^55a^3-b^76c, d^161a^2-b^225, \
        d^204a-b^285, d^247-b^345, cd^9a^7-b^14, cd^20a-b^29, cd^63-b^89, \
        c^2d^8-b^13a^3, c^4d^5-b^11, c^5d^4-b^10a^10, c^6d^2a^3-b^9, c^7a^16-b^8, \
        c^7d-b^8a^7, c^8-b^7a^17, bca^13-d^2, b^2c^2a^3-d^3, b^3c^3-d^4a^7, \
        b^9a^20-c^6d^3, b^12a^13-c^3d^7, b^15a^6-d^11, b^31ca^2-d^23, b^44a^5-cd^31, \
        b^47c^2-d^35a^2, b^60a-d^43, b^136c-d^98a^2";
    let mut want: Vec<Vec<i64>> = listed.split(',').map(|s| binomial(4, s.trim())).collect();
    want.sort();
    let mut got: Vec<Vec<i64>> = gb.elements.iter().map(|e| e.vector.clone()).collect();
    got.sort();
    assert_eq!(want.len(), 28);
    assert_eq!(got, want);
    assert!(gb.is_generic());
    let cone = groebner_cone(&gb).unwrap();
    let mut facets: Vec<Vec<i64>> = cone
        .facets
        .iter()
        .map(|h| h.primitive().iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect();
    facets.sort();
    let mut expect = vec![
        vec![0, 345, 0, -247],
        vec![-20, -9, 6, 3],
        vec![2, -136, -1, 98],
        vec![-3, 76, 1, -55],
        vec![7, -3, -3, 4],
    ];
    expect.sort();
    assert_eq!(facets, expect);
}

#[test]
fn six_facet_cone() {
    let a = IntMatrix::from_rows(&[
        [1i64, 1, 1, 1, 1, 1, 1],
        [2, 8, 9, 7, 10, 6, 5],
        [8, 7, 4, 8, 7, 2, 2],
        [5, 9, 4, 2, 9, 8, 3],
    ])
    .unwrap();
    let l = Lattice::from_defining_matrix(a).unwrap();
    let gb = reduced_gb(&l, &RatVec::from_ints(&[252, 197, 0, 0, 153, 0, 0]), &Limits::default()).unwrap();
    assert!(gb.is_generic());
    assert_eq!(groebner_cone(&gb).unwrap().facet_count(), 6);
}
