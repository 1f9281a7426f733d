//! Fibers `P_u` and the polyhedra `Q_u = {z : Bz ≤ u}`, their integer hulls
//! `R_u`, and the vertex tests built on them.
//!
//! Integer hulls of possibly unbounded `Q` are handled exactly: when the
//! recession cone `C` is pointed, `R = conv(S) + C` where `S` is the set of
//! lattice points of `Q` within the vertices of `Q` plus the parallelepiped of
//! the integral extreme rays of `C`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::lp::{lp_feasible, solve_nonneg, Feasibility, IntRow, LinearConstraint, Relation};
use crate::matrix::det_i128;
use crate::vector::{self, rank_of, subsets};
use crate::Limits;

/// The fiber `P_u`: all `v ∈ N^n` with `u − v ∈ L`, and the vertices of their
/// convex hull. Points and vertices are sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub base: Vec<i64>,
    pub points: Vec<Vec<i64>>,
    pub vertices: Vec<Vec<i64>>,
}

/// Lattice points of `Q^τ̄_u = {z : B^τ̄ z ≤ u^τ̄}` and the vertices of their hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolyhedronSample {
    pub u: Vec<i64>,
    /// Kept row indices `τ̄`, sorted.
    pub keep: Vec<usize>,
    pub lattice_points: Vec<Vec<i64>>,
    pub hull_vertices: Vec<Vec<i64>>,
}

/// `{z ∈ R^m : rows · z ≤ rhs}`.
struct Polyhedron {
    m: usize,
    rows: Vec<Vec<i64>>,
    rhs: Vec<i64>,
}

/// A rational point `num / den` with `den > 0`.
struct RatPoint {
    num: Vec<i128>,
    den: i128,
}

impl Polyhedron {
    fn new(l: &Lattice, u: &[i64], keep: &[usize]) -> Result<Self> {
        let n = l.ambient_dim();
        if u.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: u.len(),
            });
        }
        if let Some(&i) = keep.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidInput(alloc::format!("row {} out of range", i + 1)));
        }
        // Work in a reduced basis: the boxes below are much tighter there.
        let all = l.reduced_rows();
        Ok(Polyhedron {
            m: l.rank(),
            rows: keep.iter().map(|&i| all[i].clone()).collect(),
            rhs: keep.iter().map(|&i| u[i]).collect(),
        })
    }

    fn contains(&self, z: &[i64]) -> bool {
        self.rows
            .iter()
            .zip(&self.rhs)
            .all(|(r, &b)| vector::dot(r, z) <= b as i128)
    }

    fn full_rank(&self) -> bool {
        rank_of(&self.rows) == self.m
    }

    /// Vertices, from every nonsingular `m`-subset of rows.
    fn vertices(&self) -> Result<Vec<RatPoint>> {
        let m = self.m;
        let mut out = Vec::new();
        for s in subsets(self.rows.len(), m) {
            let a: Vec<Vec<i64>> = s.iter().map(|&i| self.rows[i].clone()).collect();
            let det = det_i128(&a).ok_or(Error::Overflow("vertex determinant"))?;
            if det == 0 {
                continue;
            }
            let mut num = Vec::with_capacity(m);
            for k in 0..m {
                let mut ak = a.clone();
                for (row, &i) in ak.iter_mut().zip(&s) {
                    row[k] = self.rhs[i];
                }
                num.push(det_i128(&ak).ok_or(Error::Overflow("vertex determinant"))?);
            }
            let (num, den) = if det < 0 {
                (num.into_iter().map(|x| -x).collect(), -det)
            } else {
                (num, det)
            };
            let p = RatPoint { num, den };
            let feasible = self.rows.iter().zip(&self.rhs).all(|(r, &b)| {
                let lhs: i128 = r.iter().zip(&p.num).map(|(&x, &y)| x as i128 * y).sum();
                lhs <= b as i128 * p.den
            });
            if feasible {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Primitive integral extreme rays of `{z : rows · z ≤ 0}`, assumed pointed.
    fn extreme_rays(&self) -> Result<Vec<Vec<i64>>> {
        let m = self.m;
        let mut rays: BTreeSet<Vec<i64>> = BTreeSet::new();
        for s in subsets(self.rows.len(), m - 1) {
            let a: Vec<Vec<i64>> = s.iter().map(|&i| self.rows[i].clone()).collect();
            // Generalized cross product: the kernel of the m−1 rows.
            let mut d = Vec::with_capacity(m);
            for k in 0..m {
                let minor: Vec<Vec<i64>> = a
                    .iter()
                    .map(|r| (0..m).filter(|&j| j != k).map(|j| r[j]).collect())
                    .collect();
                let det = det_i128(&minor).ok_or(Error::Overflow("ray determinant"))?;
                d.push(if k % 2 == 0 { det } else { -det });
            }
            if d.iter().all(|&x| x == 0) {
                continue;
            }
            let g = d.iter().fold(0i128, |g, &x| gcd_i128(g, x));
            let d: Vec<i64> = d
                .iter()
                .map(|&x| i64::try_from(x / g).map_err(|_| Error::Overflow("ray")))
                .collect::<Result<_>>()?;
            for cand in [d.clone(), vector::neg(&d)] {
                if self.rows.iter().all(|r| vector::dot(r, &cand) <= 0) {
                    rays.insert(cand);
                }
            }
        }
        Ok(rays.into_iter().collect())
    }

    /// Lattice points in the region that determines the integer hull, and the
    /// extreme rays of the recession cone. Requires full row rank.
    fn hull_generators(&self, budget: u64) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
        let m = self.m;
        let verts = self.vertices()?;
        let rays = if m == 0 { Vec::new() } else { self.extreme_rays()? };
        if verts.is_empty() {
            return Ok((Vec::new(), rays));
        }
        let mut lo = vec![i64::MAX; m];
        let mut hi = vec![i64::MIN; m];
        for p in &verts {
            for k in 0..m {
                let f = floor_div(p.num[k], p.den);
                let c = -floor_div(-p.num[k], p.den);
                lo[k] = lo[k].min(clamp64(f)?);
                hi[k] = hi[k].max(clamp64(c)?);
            }
        }
        for r in &rays {
            for k in 0..m {
                if r[k] < 0 {
                    lo[k] = lo[k].checked_add(r[k]).ok_or(Error::Overflow("box"))?;
                } else {
                    hi[k] = hi[k].checked_add(r[k]).ok_or(Error::Overflow("box"))?;
                }
            }
        }
        let mut size: u128 = 1;
        for k in 0..m {
            size = size.saturating_mul((hi[k] - lo[k] + 1) as u128);
        }
        if size > budget as u128 {
            return Err(Error::BudgetExceeded {
                what: "lattice point",
                budget,
            });
        }
        let mut pts = Vec::new();
        let mut z = lo.clone();
        loop {
            if self.contains(&z) {
                pts.push(z.clone());
            }
            let mut k = 0;
            loop {
                if k == m {
                    return Ok((pts, rays));
                }
                if z[k] < hi[k] {
                    z[k] += 1;
                    break;
                }
                z[k] = lo[k];
                k += 1;
            }
        }
    }
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn clamp64(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("coordinate bound"))
}

/// Whether `p` is a point of `conv(others) + cone(rays)`, with `p` excluded
/// from `others` by the caller. Exact LP.
fn in_hull(p: &[i64], others: &[Vec<i64>], rays: &[Vec<i64>]) -> bool {
    if others.is_empty() {
        return false;
    }
    let m = p.len();
    let cols: Vec<Vec<i64>> = others
        .iter()
        .map(|s| s.iter().zip(p).map(|(a, b)| a - b).collect())
        .chain(rays.iter().cloned())
        .collect();
    let mut sys: Vec<IntRow> = (0..m)
        .map(|k| IntRow::from_i64(cols.iter().map(|c| c[k]), Relation::Eq, 0))
        .collect();
    sys.push(IntRow {
        coeffs: vec![BigInt::from(1); cols.len()],
        relation: Relation::Eq,
        rhs: BigInt::from(1),
    });
    solve_nonneg(&sys, cols.len()).is_some()
}

/// Vertices of `conv(points)` (sorted). A point that is the midpoint of two
/// others is discarded before the exact test.
pub fn hull_vertices(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let set: BTreeSet<&Vec<i64>> = points.iter().collect();
    let uniq: Vec<&Vec<i64>> = set.iter().copied().collect();
    let mut out = Vec::new();
    for (i, p) in uniq.iter().enumerate() {
        let midpoint = uniq.iter().enumerate().any(|(j, q)| {
            j != i && {
                let r: Vec<i64> = p.iter().zip(q.iter()).map(|(a, b)| 2 * a - b).collect();
                set.contains(&r)
            }
        });
        if midpoint {
            continue;
        }
        let others: Vec<Vec<i64>> = uniq
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| (*q).clone())
            .collect();
        if !in_hull(p, &others, &[]) {
            out.push((*p).clone());
        }
    }
    out
}

/// Whether the origin is a vertex of `R^τ̄_u`, the integer hull of
/// `{z : B^τ̄ z ≤ u^τ̄}` (bounded or not).
///
/// Cutting-plane loop: keep a set `S` of nonzero lattice points of `Q`; look
/// for `c` with `c·s ≥ 1` on `S` and on the extreme rays. None means the
/// origin lies in `conv(S) + cone(rays)`. Otherwise the lattice points of the
/// polytope `Q ∩ {c·z < 1}` either certify `c` (only the origin) or are
/// added to `S`.
pub fn origin_is_vertex(l: &Lattice, u: &[i64], keep: &[usize], limits: &Limits) -> Result<bool> {
    if u.iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput("u must be nonnegative".into()));
    }
    let q = Polyhedron::new(l, u, keep)?;
    let m = q.m;
    if m == 0 {
        return Ok(true);
    }
    // A lineality space contains integral directions through the origin.
    if !q.full_rank() {
        return Ok(false);
    }
    let rays = q.extreme_rays()?;
    let origin = vec![0i64; m];
    let mut s: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut z = vec![-1i64; m];
    loop {
        if z != origin && q.contains(&z) {
            s.insert(z.clone());
        }
        let Some(k) = (0..m).find(|&k| z[k] < 1) else { break };
        z[k] += 1;
        for x in z.iter_mut().take(k) {
            *x = -1;
        }
    }
    let mut visited: u64 = 0;
    loop {
        if s.iter().any(|p| s.contains(&vector::neg(p))) {
            return Ok(false);
        }
        let cons: Vec<LinearConstraint> = s
            .iter()
            .chain(&rays)
            .map(|p| LinearConstraint::ints(p, Relation::Ge, 1))
            .collect();
        let Feasibility::Feasible(c) = lp_feasible(m, &cons)? else {
            return Ok(false);
        };
        // c = c' / D with c' integral: c·z < 1  ⇔  c'·z ≤ D − 1.
        let d = c.0.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let cz: Vec<i64> = c
            .0
            .iter()
            .map(|x| (x.numer() * (&d / x.denom())).to_i64().ok_or(Error::Overflow("separating vector")))
            .collect::<Result<_>>()?;
        let bound = (&d - BigInt::from(1)).to_i64().ok_or(Error::Overflow("separating vector"))?;
        let mut cut = Polyhedron {
            m,
            rows: q.rows.clone(),
            rhs: q.rhs.clone(),
        };
        cut.rows.push(cz);
        cut.rhs.push(bound);
        let (pts, _) = cut.hull_generators(limits.fiber_points)?;
        visited += pts.len() as u64;
        if visited > limits.fiber_points {
            return Err(Error::BudgetExceeded {
                what: "lattice point",
                budget: limits.fiber_points,
            });
        }
        let before = s.len();
        s.extend(pts.into_iter().filter(|p| *p != origin));
        if s.len() == before {
            return Ok(true);
        }
    }
}

/// Enumerates `Q^τ̄_u ∩ Z^m` and its hull vertices. Errors with
/// [`Error::Unbounded`] if the polyhedron is unbounded.
pub fn r_polyhedron(l: &Lattice, u: &[i64], keep: &[usize], limits: &Limits) -> Result<QPolyhedronSample> {
    let q = Polyhedron::new(l, u, keep)?;
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if q.m == 0 {
        return Ok(QPolyhedronSample {
            u: u.to_vec(),
            keep: keep_sorted,
            lattice_points: vec![Vec::new()],
            hull_vertices: vec![Vec::new()],
        });
    }
    if !q.full_rank() {
        return Err(Error::Unbounded);
    }
    let (pts, rays) = q.hull_generators(limits.fiber_points)?;
    if !rays.is_empty() {
        return Err(Error::Unbounded);
    }
    let hull = hull_vertices(&pts);
    let mut lattice_points: Vec<Vec<i64>> = pts.iter().map(|z| l.reduced_to_basis(z)).collect();
    let mut hull_vertices: Vec<Vec<i64>> = hull.iter().map(|z| l.reduced_to_basis(z)).collect();
    lattice_points.sort();
    hull_vertices.sort();
    Ok(QPolyhedronSample {
        u: u.to_vec(),
        keep: keep_sorted,
        lattice_points,
        hull_vertices,
    })
}

fn require_pointed(l: &Lattice) -> Result<()> {
    if l.is_pointed() {
        Ok(())
    } else {
        Err(Error::UnboundedFiber)
    }
}

/// The fiber `P_u` of a pointed lattice.
pub fn fiber(l: &Lattice, u: &[i64], limits: &Limits) -> Result<Fiber> {
    require_pointed(l)?;
    if u.iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput("u must be nonnegative".into()));
    }
    let all: Vec<usize> = (0..l.ambient_dim()).collect();
    let sample = r_polyhedron(l, u, &all, limits)?;
    let to_fiber = |z: &Vec<i64>| -> Result<Vec<i64>> { vector::checked_sub(u, &l.point(z)) };
    let mut points: Vec<Vec<i64>> = sample.lattice_points.iter().map(to_fiber).collect::<Result<_>>()?;
    let mut vertices: Vec<Vec<i64>> = sample.hull_vertices.iter().map(to_fiber).collect::<Result<_>>()?;
    points.sort();
    vertices.sort();
    Ok(Fiber {
        base: u.to_vec(),
        points,
        vertices,
    })
}

/// Whether `u` is a vertex of its fiber `P_u` (pointed lattices only).
pub fn is_fiber_vertex(l: &Lattice, u: &[i64], limits: &Limits) -> Result<bool> {
    require_pointed(l)?;
    let all: Vec<usize> = (0..l.ambient_dim()).collect();
    origin_is_vertex(l, u, &all, limits)
}

/// `Q^τ̄_u` is critical: the origin is a vertex of `R^τ̄_u` but of no
/// `R^τ̄_{u+e_i}` for `i ∈ τ̄`.
pub fn is_critical(l: &Lattice, u: &[i64], keep: &[usize], limits: &Limits) -> Result<bool> {
    if !origin_is_vertex(l, u, keep, limits)? {
        return Ok(false);
    }
    for &i in keep {
        let mut w = u.to_vec();
        w[i] = w[i].checked_add(1).ok_or(Error::Overflow("u + e_i"))?;
        if origin_is_vertex(l, &w, keep, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}
