//! Reduced Gröbner bases, initial ideals and Gröbner cones of the lattice
//! ideal `I_L`.
//!
//! The Graver basis contains every reduced Gröbner basis of `I_L`, so a
//! reduced basis is read off from it: orient each Graver element by the term
//! order, take the minimal leading monomials, and pair each with its normal
//! form.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graver::{graver_basis, GraverBasis};
use crate::lattice::Lattice;
use crate::lp::{irredundant_inequalities, lp_feasible, LinearConstraint, RatVec, Relation};
use crate::monomial::{var_name, Monomial, MonomialIdeal};
use crate::vector;
use crate::Limits;

/// A term order on `N^n`: compare by each weight vector in turn, then by
/// graded lexicographic order (`x_1 > x_2 > …`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    weights: Vec<Vec<BigInt>>,
}

impl TermOrder {
    /// A single weight vector (scaled to a primitive integer vector).
    pub fn weight(w: &RatVec) -> Self {
        TermOrder {
            weights: alloc::vec![w.primitive()],
        }
    }

    pub fn from_ints(w: &[i64]) -> Self {
        Self::weight(&RatVec::from_ints(w))
    }

    /// Plain graded lexicographic order.
    pub fn grlex() -> Self {
        TermOrder { weights: Vec::new() }
    }

    /// Appends a tie-breaking weight.
    pub fn then(mut self, w: &RatVec) -> Self {
        self.weights.push(w.primitive());
        self
    }

    pub fn weights(&self) -> &[Vec<BigInt>] {
        &self.weights
    }

    /// Compares `x^{g+}` with `x^{g−}`. The flag is set when the weights tie
    /// and graded lex decides.
    pub fn compare_parts(&self, g: &[i64]) -> (Ordering, bool) {
        for w in &self.weights {
            let s = w
                .iter()
                .zip(g)
                .fold(BigInt::zero(), |acc, (a, &b)| acc + a * BigInt::from(b));
            if s.is_positive() {
                return (Ordering::Greater, false);
            }
            if s.is_negative() {
                return (Ordering::Less, false);
            }
        }
        let d: i64 = g.iter().sum();
        let ord = match d.cmp(&0) {
            Ordering::Equal => match g.iter().find(|&&x| x != 0) {
                Some(&x) if x > 0 => Ordering::Greater,
                Some(_) => Ordering::Less,
                None => Ordering::Equal,
            },
            o => o,
        };
        (ord, true)
    }

    /// `g` or `−g`, whichever has the larger positive part.
    pub fn orient(&self, g: &[i64]) -> Vec<i64> {
        match self.compare_parts(g).0 {
            Ordering::Less => vector::neg(g),
            _ => g.to_vec(),
        }
    }
}

/// A lattice vector read as the binomial `x^{g+} − x^{g−}` with `x^{g+}` the
/// leading term.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedVector {
    pub vector: Vec<i64>,
}

impl MarkedVector {
    pub fn lead(&self) -> Monomial {
        Monomial::new(self.vector.iter().map(|&x| x.max(0) as u32).collect())
    }

    pub fn trail(&self) -> Monomial {
        Monomial::new(self.vector.iter().map(|&x| (-x).max(0) as u32).collect())
    }

    /// `lead - trail`, e.g. `a^23 - d`.
    pub fn pretty(&self) -> String {
        alloc::format!("{} - {}", self.lead().pretty(), self.trail().pretty())
    }
}

impl fmt::Debug for MarkedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// The reduced Gröbner basis of `I_L` for a term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGB {
    /// Sorted by leading monomial.
    pub elements: Vec<MarkedVector>,
    pub order: TermOrder,
    /// Some element needed the graded-lex tie-break, so the leading weight
    /// alone does not give a monomial initial ideal.
    pub tie_broken: bool,
}

impl ReducedGB {
    pub fn initial_ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, self.elements.iter().map(MarkedVector::lead).collect())
            .expect("leads live in n variables")
    }

    pub fn is_generic(&self) -> bool {
        !self.tie_broken
    }
}

/// A Gröbner cone, held by its facet inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerCone {
    /// Primitive facet normals `h`; the cone is `{ω : h·ω ≤ 0}`.
    pub facets: Vec<RatVec>,
    /// The defining order tied on some element (degenerate cone).
    pub degenerate: bool,
}

impl GroebnerCone {
    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Whether `w` satisfies every facet inequality strictly.
    pub fn contains_in_interior(&self, w: &RatVec) -> bool {
        self.facets.iter().all(|h| {
            let s = h
                .0
                .iter()
                .zip(&w.0)
                .fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
            s.is_negative()
        })
    }

    pub fn contains(&self, w: &RatVec) -> bool {
        self.facets.iter().all(|h| {
            let s = h
                .0
                .iter()
                .zip(&w.0)
                .fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
            !s.is_positive()
        })
    }
}

/// Checks `ω · u > 0` for every nonzero `u ∈ L ∩ N^n`: no `λ` with `Bλ ≥ 0`,
/// `Σ (Bλ)_i ≥ 1` and `ω·Bλ ≤ 0`.
pub fn weight_is_positive(l: &Lattice, w: &RatVec) -> Result<bool> {
    let n = l.ambient_dim();
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.len(),
        });
    }
    let m = l.rank();
    if m == 0 {
        return Ok(true);
    }
    let rows = l.basis_rows();
    let mut cons: Vec<LinearConstraint> = rows
        .iter()
        .map(|b| LinearConstraint::ints(b, Relation::Ge, 0))
        .collect();
    let sum: Vec<i64> = (0..m).map(|k| rows.iter().map(|b| b[k]).sum()).collect();
    cons.push(LinearConstraint::ints(&sum, Relation::Ge, 1));
    let wb: Vec<BigRational> = (0..m)
        .map(|k| {
            rows.iter()
                .zip(&w.0)
                .fold(BigRational::zero(), |acc, (b, x)| acc + x * BigInt::from(b[k]))
        })
        .collect();
    cons.push(LinearConstraint::new(RatVec(wb), Relation::Le, BigRational::zero()));
    Ok(!lp_feasible(m, &cons)?.is_feasible())
}

/// Reduces `c` to its normal form modulo the oriented vectors: the unique
/// standard monomial of its fiber.
fn normal_form(mut c: Vec<i64>, oriented: &[Vec<i64>], limits: &Limits) -> Result<Vec<i64>> {
    let mut steps: u64 = 0;
    'outer: loop {
        for g in oriented {
            if g.iter().zip(&c).all(|(&x, &y)| x <= 0 || x <= y) {
                for (y, &x) in c.iter_mut().zip(g) {
                    *y -= x;
                }
                steps += 1;
                if steps > limits.fiber_points {
                    return Err(Error::BudgetExceeded {
                        what: "normal form step",
                        budget: limits.fiber_points,
                    });
                }
                continue 'outer;
            }
        }
        return Ok(c);
    }
}

/// The reduced Gröbner basis for `order`, read off a Graver basis of `L`.
/// The order must be positive on `L ∩ N^n` (not rechecked here).
pub fn reduced_gb_from_graver(n: usize, g: &GraverBasis, order: &TermOrder, limits: &Limits) -> Result<ReducedGB> {
    let mut oriented: Vec<Vec<i64>> = Vec::new();
    for v in g.iter() {
        let (ord, _) = order.compare_parts(v);
        if ord == Ordering::Greater {
            oriented.push(v.clone());
        }
    }
    // Small leading terms first, so normal forms use cheap steps.
    oriented.sort_by_key(|v| (vector::one_norm(&vector::pos_part(v)), v.clone()));
    let leads: Vec<Monomial> = oriented
        .iter()
        .map(|v| Monomial::new(v.iter().map(|&x| x.max(0) as u32).collect()))
        .collect();
    let initial = MonomialIdeal::minimalize(n, leads)?;
    let mut elements = Vec::with_capacity(initial.len());
    let mut tie_broken = false;
    for a in initial.generators() {
        let start: Vec<i64> = a.exponents().iter().map(|&e| e as i64).collect();
        let nf = normal_form(start.clone(), &oriented, limits)?;
        let v = vector::checked_sub(&start, &nf)?;
        tie_broken |= order.compare_parts(&v).1;
        elements.push(MarkedVector { vector: v });
    }
    elements.sort_by(|x, y| x.lead().cmp(&y.lead()));
    Ok(ReducedGB {
        elements,
        order: order.clone(),
        tie_broken,
    })
}

/// Reduced Gröbner basis of `I_L` for the weight `ω` refined by graded lex.
pub fn reduced_gb(l: &Lattice, w: &RatVec, limits: &Limits) -> Result<ReducedGB> {
    if !weight_is_positive(l, w)? {
        return Err(Error::NonPositiveWeight);
    }
    let g = graver_basis(l, limits)?;
    reduced_gb_from_graver(l.ambient_dim(), &g, &TermOrder::weight(w), limits)
}

/// `in_ω(I_L)` and whether `ω` is generic for it.
pub fn initial_ideal(l: &Lattice, w: &RatVec, limits: &Limits) -> Result<(MonomialIdeal, bool)> {
    let gb = reduced_gb(l, w, limits)?;
    Ok((gb.initial_ideal(l.ambient_dim()), gb.is_generic()))
}

/// The Gröbner cone `{ω : ω·g ≥ 0 for all g in the basis}` with its facets.
pub fn groebner_cone(gb: &ReducedGB) -> Result<GroebnerCone> {
    let system: Vec<RatVec> = gb
        .elements
        .iter()
        .map(|e| RatVec::from_ints(&vector::neg(&e.vector)))
        .collect();
    let facets = if system.is_empty() {
        Vec::new()
    } else {
        irredundant_inequalities(&system)?
    };
    Ok(GroebnerCone {
        facets,
        degenerate: gb.tie_broken,
    })
}

/// Renders a facet inequality `h·ω ≤ 0` as `+345b -247d <= 0`.
pub fn facet_text(h: &RatVec) -> String {
    let n = h.len();
    let mut s = String::new();
    for (i, x) in h.0.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if !s.is_empty() {
            s.push(' ');
        }
        let sign = if x.is_negative() { '-' } else { '+' };
        s.push_str(&alloc::format!("{}{}{}", sign, x.abs(), var_name(n, i)));
    }
    s.push_str(" <= 0");
    s
}
