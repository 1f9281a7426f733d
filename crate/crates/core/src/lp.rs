//! Exact rational linear feasibility.
//!
//! Systems are solved with a phase-one simplex on an integer tableau
//! (fraction-free pivoting, Bland's rule). The tableau first runs in `i128`
//! and is rerun in `BigInt` if any intermediate value overflows, so answers
//! never depend on a tolerance.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A vector of exact rationals (kept in lowest terms by `BigRational`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RatVec(pub Vec<BigRational>);

impl RatVec {
    pub fn from_ints(v: &[i64]) -> Self {
        RatVec(v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot_ints(&self, v: &[i64]) -> BigRational {
        self.0
            .iter()
            .zip(v)
            .fold(BigRational::zero(), |acc, (a, &b)| acc + a * BigInt::from(b))
    }

    /// The positive integer multiple with coprime entries.
    pub fn primitive(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|x| x / &g).collect()
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs · x  (relation)  rhs`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: RatVec,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl LinearConstraint {
    pub fn new(coeffs: RatVec, relation: Relation, rhs: BigRational) -> Self {
        LinearConstraint {
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn ints(coeffs: &[i64], relation: Relation, rhs: i64) -> Self {
        LinearConstraint {
            coeffs: RatVec::from_ints(coeffs),
            relation,
            rhs: BigRational::from_integer(rhs.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A point satisfying every constraint.
    Feasible(RatVec),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides whether the system has a solution over free real variables in
/// dimension `dim`, returning an exact witness when it does.
pub fn lp_feasible(dim: usize, constraints: &[LinearConstraint]) -> Result<Feasibility> {
    let mut rows = Vec::with_capacity(constraints.len());
    for c in constraints {
        if c.coeffs.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: c.coeffs.len(),
            });
        }
        let (ints, rhs) = clear_denominators(&c.coeffs.0, &c.rhs);
        // x = x⁺ − x⁻
        let mut split = Vec::with_capacity(2 * dim);
        split.extend(ints.iter().cloned());
        split.extend(ints.iter().map(|x| -x));
        rows.push(IntRow {
            coeffs: split,
            relation: c.relation,
            rhs,
        });
    }
    Ok(match solve_nonneg(&rows, 2 * dim) {
        Some(x) => {
            let w = (0..dim).map(|j| &x[j] - &x[j + dim]).collect();
            Feasibility::Feasible(RatVec(w))
        }
        None => Feasibility::Infeasible,
    })
}

/// One integer constraint over nonnegative variables.
#[derive(Clone, Debug)]
pub(crate) struct IntRow {
    pub coeffs: Vec<BigInt>,
    pub relation: Relation,
    pub rhs: BigInt,
}

impl IntRow {
    pub(crate) fn from_i64(coeffs: impl IntoIterator<Item = i64>, relation: Relation, rhs: i64) -> Self {
        IntRow {
            coeffs: coeffs.into_iter().map(BigInt::from).collect(),
            relation,
            rhs: BigInt::from(rhs),
        }
    }
}

fn clear_denominators(coeffs: &[BigRational], rhs: &BigRational) -> (Vec<BigInt>, BigInt) {
    let lcm = coeffs
        .iter()
        .chain(core::iter::once(rhs))
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let conv = |x: &BigRational| x.numer() * (&lcm / x.denom());
    (coeffs.iter().map(conv).collect(), conv(rhs))
}

/// Feasibility of `{x ≥ 0 : rows}`; returns a witness.
pub(crate) fn solve_nonneg(rows: &[IntRow], nvars: usize) -> Option<Vec<BigRational>> {
    if let Some(t) = Tableau::<i128>::build(rows, nvars) {
        match t.run() {
            Outcome::Done(x) => return x,
            Outcome::Overflow => {}
        }
    }
    match Tableau::<BigInt>::build(rows, nvars)
        .expect("BigInt tableau always builds")
        .run()
    {
        Outcome::Done(x) => x,
        Outcome::Overflow => unreachable!("BigInt arithmetic cannot overflow"),
    }
}

trait Ring: Clone + fmt::Debug {
    fn rzero() -> Self;
    fn rone() -> Self;
    fn from_big(x: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Self;
    fn sign(&self) -> i8;
}

impl Ring for i128 {
    fn rzero() -> Self {
        0
    }
    fn rone() -> Self {
        1
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        // Leave headroom so products of two entries stay representable.
        x.to_i128().filter(|v| v.unsigned_abs() < (1u128 << 62))
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn sign(&self) -> i8 {
        self.signum() as i8
    }
}

impl Ring for BigInt {
    fn rzero() -> Self {
        Zero::zero()
    }
    fn rone() -> Self {
        One::one()
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn sign(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

enum Outcome {
    Done(Option<Vec<BigRational>>),
    Overflow,
}

/// Integer tableau: real entry = stored entry / `denom`.
struct Tableau<R> {
    /// Constraint rows followed by the phase-one objective row; last column is the rhs.
    rows: Vec<Vec<R>>,
    basis: Vec<usize>,
    denom: R,
    nvars: usize,
    first_artificial: usize,
}

impl<R: Ring> Tableau<R> {
    fn build(rows: &[IntRow], nvars: usize) -> Option<Self> {
        let m = rows.len();
        let nslack = rows.iter().filter(|r| r.relation != Relation::Eq).count();
        let first_artificial = nvars + nslack;
        let width = first_artificial + m + 1;
        let mut t = Vec::with_capacity(m + 1);
        let mut slack = nvars;
        for (i, r) in rows.iter().enumerate() {
            let flip = r.rhs.is_negative();
            let mut row = vec![R::rzero(); width];
            for (j, c) in r.coeffs.iter().enumerate() {
                let c = if flip { -c } else { c.clone() };
                row[j] = R::from_big(&c)?;
            }
            match r.relation {
                Relation::Le => {
                    row[slack] = if flip { R::from_big(&BigInt::from(-1))? } else { R::rone() };
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = if flip { R::rone() } else { R::from_big(&BigInt::from(-1))? };
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[first_artificial + i] = R::rone();
            let rhs = if flip { -&r.rhs } else { r.rhs.clone() };
            row[width - 1] = R::from_big(&rhs)?;
            t.push(row);
        }
        // Phase-one objective: minimize the sum of artificials, written in
        // terms of the nonbasic columns.
        let mut obj = vec![R::rzero(); width];
        for j in 0..width {
            if (first_artificial..first_artificial + m).contains(&j) {
                continue;
            }
            let mut s = R::rzero();
            for row in &t {
                s = s.sub(&row[j])?;
            }
            obj[j] = s;
        }
        t.push(obj);
        Some(Tableau {
            rows: t,
            basis: (first_artificial..first_artificial + m).collect(),
            denom: R::rone(),
            nvars,
            first_artificial,
        })
    }

    fn run(mut self) -> Outcome {
        let m = self.basis.len();
        let width = self.rows[0].len();
        let rhs = width - 1;
        loop {
            // Bland: lowest-index column with negative reduced cost.
            let entering = (0..rhs).find(|&j| self.rows[m][j].sign() < 0);
            let Some(c) = entering else { break };
            let mut leave: Option<usize> = None;
            for i in 0..m {
                if self.rows[i][c].sign() <= 0 {
                    continue;
                }
                leave = match leave {
                    None => Some(i),
                    Some(l) => {
                        // rows[i][rhs]/rows[i][c] vs rows[l][rhs]/rows[l][c]
                        let Some(a) = self.rows[i][rhs].mul(&self.rows[l][c]) else {
                            return Outcome::Overflow;
                        };
                        let Some(b) = self.rows[l][rhs].mul(&self.rows[i][c]) else {
                            return Outcome::Overflow;
                        };
                        let Some(d) = a.sub(&b) else {
                            return Outcome::Overflow;
                        };
                        match d.sign() {
                            -1 => Some(i),
                            0 if self.basis[i] < self.basis[l] => Some(i),
                            _ => Some(l),
                        }
                    }
                };
            }
            // Phase-one objective is bounded below by zero, so a leaving row exists.
            let r = leave.expect("phase one cannot be unbounded");
            if self.pivot(r, c).is_none() {
                return Outcome::Overflow;
            }
        }
        // Feasible iff every basic artificial sits at zero.
        for (i, &b) in self.basis.iter().enumerate() {
            if b >= self.first_artificial && self.rows[i][rhs].sign() != 0 {
                return Outcome::Done(None);
            }
        }
        let denom = self.denom.to_big();
        let mut x = vec![BigRational::zero(); self.nvars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.nvars {
                x[b] = BigRational::new(self.rows[i][rhs].to_big(), denom.clone());
            }
        }
        Outcome::Done(Some(x))
    }

    fn pivot(&mut self, r: usize, c: usize) -> Option<()> {
        let p = self.rows[r][c].clone();
        let width = self.rows[r].len();
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for j in 0..width {
                let v = p.mul(&row[j])?.sub(&f.mul(&pivot_row[j])?)?;
                row[j] = v.div_exact(&self.denom);
            }
        }
        self.denom = p;
        self.basis[r] = c;
        Some(())
    }
}

/// Given halfspaces `h · ω ≤ 0`, returns the unique irredundant subsystem
/// (each normalized to a primitive integer vector), sorted lexicographically.
/// Every survivor is facet-defining for the cone.
pub fn irredundant_inequalities(system: &[RatVec]) -> Result<Vec<RatVec>> {
    let dim = system.first().map_or(0, RatVec::len);
    let mut distinct: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for h in system {
        if h.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: h.len(),
            });
        }
        if !h.is_zero() {
            distinct.insert(h.primitive());
        }
    }
    let hs: Vec<Vec<BigInt>> = distinct.into_iter().collect();
    let row = |h: &Vec<BigInt>, rel: Relation, rhs: i64| {
        let mut coeffs: Vec<BigInt> = h.clone();
        coeffs.extend(h.iter().map(|x| -x));
        IntRow {
            coeffs,
            relation: rel,
            rhs: BigInt::from(rhs),
        }
    };
    let interior: Vec<IntRow> = hs.iter().map(|h| row(h, Relation::Le, -1)).collect();
    if solve_nonneg(&interior, 2 * dim).is_none() {
        return Err(Error::NotFullDimensional);
    }
    let mut out = Vec::new();
    for (i, h) in hs.iter().enumerate() {
        let mut rows: Vec<IntRow> = hs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| row(g, Relation::Le, 0))
            .collect();
        rows.push(row(h, Relation::Ge, 1));
        if solve_nonneg(&rows, 2 * dim).is_some() {
            out.push(RatVec(h.iter().map(|x| BigRational::from_integer(x.clone())).collect()));
        }
    }
    Ok(out)
}
