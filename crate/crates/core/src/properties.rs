//! Checkable identities relating `P_L`, `V_L`, their radicals, top
//! components, projections and the Gröbner fan. Each check returns the list
//! of violations (empty when the identity holds), or
//! [`Error::InvalidInput`] when the lattice is outside its hypotheses.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::decomposition::{associated_primes, top};
use crate::error::{Error, Result};
use crate::fan::groebner_fan_from_graver;
use crate::graver::{graver_basis, GraverBasis};
use crate::lattice::Lattice;
use crate::lp::{lp_feasible, LinearConstraint, RatVec, Relation};
use crate::matrix::{det_i128, kernel_basis, IntMatrix};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::vertex_ideal::{
    dimension_bounds_report, matroid_radical, positive_circuits, product_ideal_from_graver,
    vertex_ideal_from_graver,
};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    /// `P_L ⊆ V_L`, and the two-element positive circuits give exactly `P_L`.
    PlSubsetVl,
    /// `rad(P_L) = rad(V_L)` = Stanley–Reisner ideal of the matroid complex.
    RadEqual,
    /// `top(P_L) = top(V_L)` for two-dimensional lattices.
    TopEqual,
    /// `P_L = V_L` for full-rank sublattices of `Z^2`.
    Dim2Equal,
    /// `P_L = V_L = rad(V_L)` when every maximal minor of `B` is in `{0, ±1}`.
    UnimodularEqual,
    /// For saturated pointed two-dimensional lattices: no embedded prime
    /// `P_τ` has `cone{a_i : i ∈ τ}` a face of `cone(A)`.
    Codim2Embedded,
    /// Associated primes of `V_L` have codimension at most `min(n, 2^m − 1)`.
    DimensionBounds,
    /// `Ass(V_L) ⊆ ∪ Ass(in_ω)` and the minimal primes agree.
    AssContainment,
    /// `V_L` equals the intersection of all initial ideals.
    IntersectionAgrees,
    /// Graver bases and both ideals commute with coordinate projections.
    Localization,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::PlSubsetVl,
        Property::RadEqual,
        Property::TopEqual,
        Property::Dim2Equal,
        Property::UnimodularEqual,
        Property::Codim2Embedded,
        Property::DimensionBounds,
        Property::AssContainment,
        Property::IntersectionAgrees,
        Property::Localization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::PlSubsetVl => "pl-subset-vl",
            Property::RadEqual => "rad-equal",
            Property::TopEqual => "top-equal",
            Property::Dim2Equal => "dim2-equal",
            Property::UnimodularEqual => "unimodular-equal",
            Property::Codim2Embedded => "codim2-embedded",
            Property::DimensionBounds => "dimension-bounds",
            Property::AssContainment => "ass-containment",
            Property::IntersectionAgrees => "intersection-agrees",
            Property::Localization => "localization",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidInput(alloc::format!("unknown property {:?}", s)))
    }
}

/// A lattice together with its Graver basis, `P_L` and `V_L`, computed once
/// and shared by the checks.
#[derive(Clone, Debug)]
pub struct Instance {
    pub lattice: Lattice,
    pub graver: GraverBasis,
    pub product: MonomialIdeal,
    pub vertex: MonomialIdeal,
}

impl Instance {
    pub fn new(lattice: Lattice, limits: &Limits) -> Result<Self> {
        let n = lattice.ambient_dim();
        let graver = graver_basis(&lattice, limits)?;
        let product = product_ideal_from_graver(n, &graver)?;
        let vertex = vertex_ideal_from_graver(n, &graver)?;
        Ok(Instance {
            lattice,
            graver,
            product,
            vertex,
        })
    }

    fn n(&self) -> usize {
        self.lattice.ambient_dim()
    }
}

pub fn check(inst: &Instance, property: Property, limits: &Limits) -> Result<Vec<String>> {
    match property {
        Property::PlSubsetVl => pl_subset_vl(inst),
        Property::RadEqual => rad_equal(inst),
        Property::TopEqual => top_equal(inst),
        Property::Dim2Equal => dim2_equal(inst),
        Property::UnimodularEqual => unimodular_equal(inst),
        Property::Codim2Embedded => codim2_embedded(inst),
        Property::DimensionBounds => dimension_bounds_report(&inst.vertex, inst.lattice.rank()),
        Property::AssContainment => ass_containment(inst, limits),
        Property::IntersectionAgrees => intersection_agrees(inst, limits),
        Property::Localization => localization(inst, limits),
    }
}

fn mismatch(what: &str, left: &MonomialIdeal, right: &MonomialIdeal) -> String {
    alloc::format!("{}: {} vs {}", what, left, right)
}

fn pl_subset_vl(inst: &Instance) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for g in inst.product.generators() {
        if !inst.vertex.contains(g) {
            out.push(alloc::format!("{} is in P_L but not in V_L", g));
        }
    }
    let pairs: Vec<Monomial> = positive_circuits(&inst.graver)?
        .into_iter()
        .filter(|c| c.members.len() == 2)
        .map(|c| c.generator)
        .collect();
    let from_pairs = MonomialIdeal::minimalize(inst.n(), pairs)?;
    if from_pairs != inst.product {
        out.push(mismatch("two-element circuits vs P_L", &from_pairs, &inst.product));
    }
    Ok(out)
}

fn rad_equal(inst: &Instance) -> Result<Vec<String>> {
    let rp = inst.product.radical();
    let rv = inst.vertex.radical();
    let sr = matroid_radical(&inst.lattice)?;
    let mut out = Vec::new();
    if rp != rv {
        out.push(mismatch("rad(P_L) vs rad(V_L)", &rp, &rv));
    }
    if rv != sr {
        out.push(mismatch("rad(V_L) vs matroid radical", &rv, &sr));
    }
    Ok(out)
}

fn top_equal(inst: &Instance) -> Result<Vec<String>> {
    if inst.lattice.rank() != 2 {
        return Err(Error::InvalidInput("top-equal needs a two-dimensional lattice".into()));
    }
    let tp = top(&inst.product)?;
    let tv = top(&inst.vertex)?;
    Ok(if tp == tv {
        Vec::new()
    } else {
        alloc::vec![mismatch("top(P_L) vs top(V_L)", &tp, &tv)]
    })
}

fn dim2_equal(inst: &Instance) -> Result<Vec<String>> {
    if inst.n() != 2 || inst.lattice.rank() != 2 {
        return Err(Error::InvalidInput("dim2-equal needs a rank-2 sublattice of Z^2".into()));
    }
    Ok(if inst.product == inst.vertex {
        Vec::new()
    } else {
        alloc::vec![mismatch("P_L vs V_L", &inst.product, &inst.vertex)]
    })
}

/// All nonzero maximal minors of the lattice basis.
pub fn maximal_minors(l: &Lattice) -> Result<Vec<i128>> {
    let rows = l.basis_rows();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    minors_rec(&rows, l.rank(), 0, &mut pick, &mut out)?;
    Ok(out)
}

fn minors_rec(rows: &[Vec<i64>], m: usize, from: usize, pick: &mut Vec<usize>, out: &mut Vec<i128>) -> Result<()> {
    if pick.len() == m {
        let sub: Vec<Vec<i64>> = pick.iter().map(|&i| rows[i].clone()).collect();
        let d = det_i128(&sub).ok_or(Error::Overflow("maximal minor"))?;
        if d != 0 {
            out.push(d);
        }
        return Ok(());
    }
    for i in from..rows.len() {
        pick.push(i);
        minors_rec(rows, m, i + 1, pick, out)?;
        pick.pop();
    }
    Ok(())
}

/// Every nonzero maximal minor of `B` is `±1`.
pub fn is_unimodular(l: &Lattice) -> Result<bool> {
    Ok(maximal_minors(l)?.iter().all(|d| d.abs() == 1))
}

/// `L = ker(A) ∩ Z^n` for some `A`, i.e. the maximal minors are coprime.
pub fn is_saturated(l: &Lattice) -> Result<bool> {
    if l.rank() == 0 {
        return Ok(true);
    }
    Ok(maximal_minors(l)?.into_iter().fold(0i128, |g, d| g.gcd(&d)) == 1)
}

fn unimodular_equal(inst: &Instance) -> Result<Vec<String>> {
    if !is_unimodular(&inst.lattice)? {
        return Err(Error::InvalidInput("lattice is not unimodular".into()));
    }
    let sr = matroid_radical(&inst.lattice)?;
    let mut out = Vec::new();
    if inst.product != inst.vertex {
        out.push(mismatch("P_L vs V_L", &inst.product, &inst.vertex));
    }
    if inst.vertex != sr {
        out.push(mismatch("V_L vs matroid radical", &inst.vertex, &sr));
    }
    Ok(out)
}

/// A matrix `A` with `L ⊗ Q = ker(A)`: the given defining matrix, else the
/// left kernel of `B`.
pub fn configuration(l: &Lattice) -> IntMatrix {
    match l.defining_matrix() {
        Some(a) => a.clone(),
        None => kernel_basis(&l.basis().transpose()).transpose(),
    }
}

/// Whether `cone{a_i : i ∈ τ}` is a face of `cone(A)` cut out exactly by
/// `τ`: some `y` has `y·a_i = 0` on `τ` and `y·a_j ≥ 1` off `τ`.
pub fn spans_face(a: &IntMatrix, tau: &[usize]) -> Result<bool> {
    let d = a.rows();
    let cons: Vec<LinearConstraint> = (0..a.cols())
        .map(|j| {
            let col = RatVec(a.column(j).into_iter().map(BigRational::from_integer).collect());
            if tau.contains(&j) {
                LinearConstraint::new(col, Relation::Eq, BigRational::zero())
            } else {
                LinearConstraint::new(col, Relation::Ge, BigRational::one())
            }
        })
        .collect();
    Ok(lp_feasible(d, &cons)?.is_feasible())
}

fn minimal_sets(sets: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t != *s && t.iter().all(|i| s.contains(i))))
        .cloned()
        .collect()
}

fn codim2_embedded(inst: &Instance) -> Result<Vec<String>> {
    let l = &inst.lattice;
    if l.rank() != 2 || !l.is_pointed() || !is_saturated(l)? {
        return Err(Error::InvalidInput(
            "codim2-embedded needs a saturated pointed two-dimensional lattice".into(),
        ));
    }
    let n = inst.n();
    let a = configuration(l);
    let primes = associated_primes(&inst.vertex)?;
    let minimal = minimal_sets(&primes);
    let mut out = Vec::new();
    for p in &primes {
        if p.len() == n {
            out.push(String::from("the maximal ideal is associated to V_L"));
        }
        if minimal.contains(p) {
            continue;
        }
        let tau: Vec<usize> = (0..n).filter(|i| !p.contains(i)).collect();
        if spans_face(&a, &tau)? {
            out.push(alloc::format!(
                "embedded prime {} has its free columns spanning a face",
                MonomialIdeal::prime(n, p)
            ));
        }
    }
    Ok(out)
}

fn ass_containment(inst: &Instance, limits: &Limits) -> Result<Vec<String>> {
    let n = inst.n();
    let fan = groebner_fan_from_graver(n, &inst.graver, limits)?;
    let mut ass_union: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut min_union: BTreeSet<Vec<usize>> = BTreeSet::new();
    for c in &fan {
        let a = associated_primes(&c.initial)?;
        min_union.extend(minimal_sets(&a));
        ass_union.extend(a);
    }
    let ass_v = associated_primes(&inst.vertex)?;
    let min_v = minimal_sets(&ass_v);
    let mut out = Vec::new();
    for p in &ass_v {
        if !ass_union.contains(p) {
            out.push(alloc::format!(
                "{} is associated to V_L but to no initial ideal",
                MonomialIdeal::prime(n, p)
            ));
        }
    }
    if min_v != min_union {
        out.push(alloc::format!(
            "minimal primes differ: V_L {:?}, initial ideals {:?}",
            min_v, min_union
        ));
    }
    Ok(out)
}

fn intersection_agrees(inst: &Instance, limits: &Limits) -> Result<Vec<String>> {
    let n = inst.n();
    let fan = groebner_fan_from_graver(n, &inst.graver, limits)?;
    let meet = MonomialIdeal::intersect_all(n, fan.iter().map(|c| &c.initial))?;
    Ok(if meet == inst.vertex {
        Vec::new()
    } else {
        alloc::vec![mismatch("intersection of initial ideals vs V_L", &meet, &inst.vertex)]
    })
}

fn project_vector(v: &[i64], sigma: &[usize]) -> Vec<i64> {
    v.iter()
        .enumerate()
        .filter(|(i, _)| !sigma.contains(i))
        .map(|(_, &x)| x)
        .collect()
}

/// Checks every proper coordinate subset `σ` whose projection keeps the
/// dimension.
fn localization(inst: &Instance, limits: &Limits) -> Result<Vec<String>> {
    let n = inst.n();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) - 1 {
        let sigma: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let projected = match inst.lattice.project(&sigma) {
            Ok(p) => p,
            Err(Error::DimensionDrop { .. }) => continue,
            Err(e) => return Err(e),
        };
        let image: BTreeSet<Vec<i64>> = inst
            .graver
            .iter()
            .map(|g| project_vector(g, &sigma))
            .collect();
        let sub = Instance::new(projected, limits)?;
        for g in sub.graver.iter() {
            if !image.contains(g) {
                out.push(alloc::format!("σ={:?}: Graver element {:?} is not a projection", sigma, g));
            }
        }
        let lv = inst.vertex.localize(&sigma)?;
        if lv != sub.vertex {
            out.push(mismatch(&alloc::format!("σ={:?}: localized V_L vs V of projection", sigma), &lv, &sub.vertex));
        }
        let lp = inst.product.localize(&sigma)?;
        if lp != sub.product {
            out.push(mismatch(&alloc::format!("σ={:?}: localized P_L vs P of projection", sigma), &lp, &sub.product));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ker(rows: &[&[i64]]) -> Lattice {
        Lattice::from_defining_matrix(IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn run(l: Lattice, p: Property) -> Result<Vec<String>> {
        let lim = Limits::default();
        check(&Instance::new(l, &lim).unwrap(), p, &lim)
    }

    #[test]
    fn names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!("nope".parse::<Property>().is_err());
    }

    #[test]
    fn ker_345_passes_everything_applicable() {
        for p in Property::ALL {
            match run(ker(&[&[3, 4, 5]]), p) {
                Ok(v) => assert!(v.is_empty(), "{}: {:?}", p, v),
                Err(Error::InvalidInput(_)) => {
                    assert!(matches!(p, Property::Dim2Equal | Property::UnimodularEqual))
                }
                Err(e) => panic!("{}: {}", p, e),
            }
        }
    }

    #[test]
    fn faces_of_a_ray_configuration() {
        let a = IntMatrix::from_rows(&[&[1i64, 2, 3]]).unwrap();
        assert!(spans_face(&a, &[]).unwrap());
        assert!(!spans_face(&a, &[0]).unwrap());
        assert!(spans_face(&a, &[0, 1, 2]).unwrap());
        let a = IntMatrix::from_rows(&[&[1i64, 0, 1], &[0, 1, 1]]).unwrap();
        assert!(spans_face(&a, &[0]).unwrap());
        assert!(!spans_face(&a, &[2]).unwrap());
    }

    #[test]
    fn saturation_and_unimodularity() {
        let l = Lattice::from_columns(1, &[vec![2]]).unwrap();
        assert!(!is_saturated(&l).unwrap());
        assert!(is_unimodular(&ker(&[&[1, 1, 1]])).unwrap());
        assert!(!is_unimodular(&ker(&[&[1, 2, 3]])).unwrap());
    }
}
