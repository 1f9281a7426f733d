//! Breadth-first traversal of the Gröbner fan of `I_L`.
//!
//! From each cone, every facet is crossed with the lexicographic order
//! `(p, h, grlex)` where `p` is a relative interior point of the facet and `h`
//! its outward normal: for small `ε > 0` this is the order of `p + εh`, which
//! lies inside the neighbouring cone.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graver::{graver_basis, GraverBasis};
use crate::groebner::{groebner_cone, reduced_gb_from_graver, GroebnerCone, ReducedGB, TermOrder};
use crate::lattice::Lattice;
use crate::lp::{lp_feasible, Feasibility, LinearConstraint, RatVec, Relation};
use crate::monomial::MonomialIdeal;
use crate::Limits;

/// One maximal cone of the fan.
#[derive(Clone, Debug)]
pub struct FanCone {
    pub initial: MonomialIdeal,
    pub gb: ReducedGB,
    pub cone: GroebnerCone,
}

/// A point in the relative interior of facet `i`.
fn facet_point(cone: &GroebnerCone, i: usize) -> Result<RatVec> {
    let h = &cone.facets[i];
    let dim = h.len();
    let mut cons = alloc::vec![LinearConstraint::new(h.clone(), Relation::Eq, BigRational::zero())];
    for (j, f) in cone.facets.iter().enumerate() {
        if j != i {
            cons.push(LinearConstraint::new(
                f.clone(),
                Relation::Le,
                -BigRational::from_integer(1.into()),
            ));
        }
    }
    match lp_feasible(dim, &cons)? {
        Feasibility::Feasible(p) => Ok(p),
        Feasibility::Infeasible => Err(Error::CheckFailed(alloc::vec![alloc::format!(
            "facet {:?} has empty relative interior",
            h
        )])),
    }
}

/// All maximal cones of the Gröbner fan, found by flipping across facets
/// starting from the all-ones weight. Facets whose binomial has trailing term
/// `1` bound the region of admissible weights and are not crossed.
pub fn groebner_fan_from_graver(n: usize, g: &GraverBasis, limits: &Limits) -> Result<Vec<FanCone>> {
    let start = TermOrder::weight(&RatVec::from_ints(&alloc::vec![1; n]));
    let mut seen: BTreeSet<MonomialIdeal> = BTreeSet::new();
    let mut out: Vec<FanCone> = Vec::new();
    let mut queue: VecDeque<TermOrder> = VecDeque::new();
    queue.push_back(start);
    while let Some(order) = queue.pop_front() {
        let gb = reduced_gb_from_graver(n, g, &order, limits)?;
        let initial = gb.initial_ideal(n);
        if !seen.insert(initial.clone()) {
            continue;
        }
        if seen.len() > limits.fan_cones {
            return Err(Error::BudgetExceeded {
                what: "Gröbner cone",
                budget: limits.fan_cones as u64,
            });
        }
        let cone = groebner_cone(&gb)?;
        for i in 0..cone.facets.len() {
            let h = &cone.facets[i];
            if h.0.iter().all(|x| !x.is_positive()) {
                continue;
            }
            let p = facet_point(&cone, i)?;
            queue.push_back(TermOrder::weight(&p).then(h));
        }
        out.push(FanCone { initial, gb, cone });
    }
    out.sort_by(|a, b| a.initial.cmp(&b.initial));
    Ok(out)
}

pub fn groebner_fan(l: &Lattice, limits: &Limits) -> Result<Vec<FanCone>> {
    let g = graver_basis(l, limits)?;
    groebner_fan_from_graver(l.ambient_dim(), &g, limits)
}

/// The distinct monomial initial ideals of `I_L`, sorted.
pub fn enumerate_initial_ideals(l: &Lattice, limits: &Limits) -> Result<Vec<MonomialIdeal>> {
    Ok(groebner_fan(l, limits)?.into_iter().map(|c| c.initial).collect())
}

/// `V_L` as the intersection of all initial ideals.
pub fn vertex_ideal_intersection(l: &Lattice, limits: &Limits) -> Result<MonomialIdeal> {
    let ideals = enumerate_initial_ideals(l, limits)?;
    MonomialIdeal::intersect_all(l.ambient_dim(), &ideals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;
    use crate::monomial::parse_ideal;

    fn ker(rows: &[&[i64]]) -> Lattice {
        Lattice::from_defining_matrix(IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn rank_one_fan() {
        let l = Lattice::from_columns(2, &[vec![1, -1]]).unwrap();
        let ideals = enumerate_initial_ideals(&l, &Limits::default()).unwrap();
        assert_eq!(ideals, alloc::vec![parse_ideal(2, "b").unwrap(), parse_ideal(2, "a").unwrap()]);
    }

    #[test]
    fn intersection_gives_vertex_ideal() {
        let l = ker(&[&[1, 2, 3]]);
        let v = vertex_ideal_intersection(&l, &Limits::default()).unwrap();
        assert_eq!(v, parse_ideal(3, "abc, a^2b, a^3c, b^3c^2").unwrap());
        let l = ker(&[&[1, 1]]);
        assert_eq!(vertex_ideal_intersection(&l, &Limits::default()).unwrap(), parse_ideal(2, "ab").unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let l = ker(&[&[1, 2, 3]]);
        let limits = Limits {
            fan_cones: 1,
            ..Limits::default()
        };
        assert!(enumerate_initial_ideals(&l, &limits).unwrap_err().is_budget());
    }
}
