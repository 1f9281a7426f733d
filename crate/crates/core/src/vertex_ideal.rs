//! The vertex ideal `V_L`, the product ideal `P_L` and the matroid radical.
//!
//! `V_L` is generated by `lcm` of the positive parts over the positive
//! circuits of the Graver basis. Circuits are found by a depth-first search
//! over linearly independent subsets; a candidate closes a circuit when it is
//! a strictly negative combination of the current subset.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graver::{graver_basis, GraverBasis};
use crate::lattice::Lattice;
use crate::matrix::det_i128;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polyhedra::origin_is_vertex;
use crate::vector::{self, rank_of, subsets};
use crate::Limits;

/// A support-minimal positive dependency `Σ c_i g_i = 0` among Graver
/// elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PositiveCircuit {
    /// Indices into the Graver basis, increasing.
    pub members: Vec<usize>,
    /// Coprime positive coefficients, aligned with `members`.
    pub coefficients: Vec<u64>,
    /// `lcm` of the positive parts of the members.
    pub generator: Monomial,
}

impl fmt::Debug for PositiveCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}·{:?} -> {}", self.coefficients, self.members, self.generator.pretty())
    }
}

/// A linearly independent list of vectors with `k` rows on which it is
/// nonsingular, and the adjugate of that `k × k` block.
struct Frame {
    members: Vec<usize>,
    pivots: Vec<usize>,
    det: i128,
    /// `adj · S_P = det · I`.
    adj: Vec<Vec<i128>>,
    /// `|adj| · max|g| · k` fits, so dot products need no overflow checks.
    small: bool,
    /// The same bound holds in `i64` and the adjugate fits there too.
    adj64: Option<Vec<Vec<i64>>>,
    lcm: Vec<i64>,
}

fn overflow() -> Error {
    Error::Overflow("circuit search")
}

impl Frame {
    fn new(vecs: &[Vec<i64>], gmax: i128, members: Vec<usize>, pivots: Vec<usize>, lcm: Vec<i64>) -> Result<Self> {
        let k = members.len();
        let block: Vec<Vec<i64>> = pivots
            .iter()
            .map(|&r| members.iter().map(|&j| vecs[j][r]).collect())
            .collect();
        let (det, adj) = adjugate(&block)?;
        let amax = adj.iter().flatten().map(|a| a.unsigned_abs()).max().unwrap_or(0);
        let small = amax
            .checked_mul(gmax.unsigned_abs())
            .and_then(|x| x.checked_mul(k as u128 + 1))
            .is_some_and(|x| x < i128::MAX as u128);
        let adj64 = (amax
            .checked_mul(gmax.unsigned_abs())
            .and_then(|x| x.checked_mul(k as u128 + 1))
            .is_some_and(|x| x < i64::MAX as u128))
        .then(|| adj.iter().map(|r| r.iter().map(|&a| a as i64).collect()).collect());
        Ok(Frame {
            members,
            pivots,
            det,
            adj,
            small,
            adj64,
            lcm,
        })
    }

    /// Numerators `ν` with `det · g = Σ ν_i s_i` on the pivot rows, written
    /// into `nu`.
    fn numerators(&self, g: &[i64], nu: &mut Vec<i128>) -> Result<()> {
        nu.clear();
        for row in &self.adj {
            let mut acc = 0i128;
            for (&a, &r) in row.iter().zip(&self.pivots) {
                acc = a
                    .checked_mul(g[r] as i128)
                    .and_then(|t| acc.checked_add(t))
                    .ok_or_else(overflow)?;
            }
            nu.push(acc);
        }
        Ok(())
    }

    /// `g = Σ (ν_i/det) s_i` with every coefficient strictly negative.
    fn closes(&self, nu: &[i128]) -> bool {
        nu.iter().all(|&c| c != 0 && (c > 0) != (self.det > 0))
    }

    /// [`Frame::closes`] for a spanning frame, stopping at the first
    /// coefficient of the wrong sign.
    fn may_close(&self, g: &[i64]) -> Result<bool> {
        if self.small {
            let positive = self.det > 0;
            return Ok(self.adj.iter().all(|row| {
                let acc: i128 = row.iter().zip(&self.pivots).map(|(&a, &r)| a * g[r] as i128).sum();
                acc != 0 && (acc > 0) != positive
            }));
        }
        for row in &self.adj {
            let mut acc = 0i128;
            for (&a, &r) in row.iter().zip(&self.pivots) {
                acc = a
                    .checked_mul(g[r] as i128)
                    .and_then(|t| acc.checked_add(t))
                    .ok_or_else(overflow)?;
            }
            if acc == 0 || (acc > 0) == (self.det > 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First row where `det · g − Σ ν_i s_i` is nonzero, if any.
    fn residual_row(&self, vecs: &[Vec<i64>], g: &[i64], nu: &[i128]) -> Result<Option<usize>> {
        for r in 0..g.len() {
            let mut v = self.det.checked_mul(g[r] as i128).ok_or_else(overflow)?;
            for (&j, &c) in self.members.iter().zip(nu) {
                v = c
                    .checked_mul(vecs[j][r] as i128)
                    .and_then(|t| v.checked_sub(t))
                    .ok_or_else(overflow)?;
            }
            if v != 0 {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }
}

/// Determinant and adjugate of a small square block.
fn adjugate(b: &[Vec<i64>]) -> Result<(i128, Vec<Vec<i128>>)> {
    let x = |i: usize, j: usize| b[i][j] as i128;
    match b.len() {
        1 => Ok((x(0, 0), vec![vec![1]])),
        2 => Ok((
            x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0),
            vec![vec![x(1, 1), -x(0, 1)], vec![-x(1, 0), x(0, 0)]],
        )),
        3 if b.iter().flatten().all(|v| v.unsigned_abs() < 1 << 40) => {
            let c = |i0: usize, i1: usize, j0: usize, j1: usize| x(i0, j0) * x(i1, j1) - x(i0, j1) * x(i1, j0);
            let adj = vec![
                vec![c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
                vec![-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
                vec![c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
            ];
            let det = x(0, 0) * adj[0][0] + x(0, 1) * adj[1][0] + x(0, 2) * adj[2][0];
            Ok((det, adj))
        }
        k => {
            let det = det_i128(b).ok_or_else(overflow)?;
            let mut adj = vec![vec![0i128; k]; k];
            for i in 0..k {
                for j in 0..k {
                    // adj[i][j] = (−1)^{i+j} · minor(j, i)
                    let minor: Vec<Vec<i64>> = (0..k)
                        .filter(|&r| r != j)
                        .map(|r| (0..k).filter(|&c| c != i).map(|c| b[r][c]).collect())
                        .collect();
                    let d = det_i128(&minor).ok_or_else(overflow)?;
                    adj[i][j] = if (i + j) % 2 == 0 { d } else { -d };
                }
            }
            Ok((det, adj))
        }
    }
}

fn lcm_pos(a: &[i64], g: &[i64]) -> Vec<i64> {
    a.iter().zip(g).map(|(&x, &y)| x.max(y)).collect()
}

fn to_monomial(v: &[i64]) -> Monomial {
    Monomial::new(v.iter().map(|&x| x as u32).collect())
}

struct Search<'a> {
    vecs: &'a [Vec<i64>],
    /// `columns[r][j]` is coordinate `r` of element `j`.
    columns: Vec<Vec<i64>>,
    /// Largest absolute entry of any element.
    gmax: i128,
    rank: usize,
    /// Generators known to lie in `V_L`; branches whose `lcm` they divide are
    /// cut. `None` disables pruning.
    prune: Option<Vec<Vec<i64>>>,
    found: Vec<PositiveCircuit>,
}

impl Search<'_> {
    /// Whether `lcm(base, g⁺)` is divisible by a known generator.
    fn pruned(&self, base: &[i64], g: &[i64]) -> bool {
        let Some(gens) = &self.prune else { return false };
        gens.iter()
            .any(|h| h.iter().zip(base).zip(g).all(|((&e, &b), &x)| e <= b.max(x)))
    }

    fn run(&mut self) -> Result<()> {
        let n = self.vecs.first().map_or(0, Vec::len);
        for j in 0..self.vecs.len() {
            let g = &self.vecs[j];
            let zero = vec![0; n];
            if self.pruned(&zero, g) {
                continue;
            }
            let lcm = lcm_pos(&zero, g);
            let r = g.iter().position(|&x| x != 0).expect("Graver elements are nonzero");
            let frame = Frame::new(self.vecs, self.gmax, vec![j], vec![r], lcm)?;
            self.descend(&frame)?;
        }
        Ok(())
    }

    fn descend(&mut self, frame: &Frame) -> Result<()> {
        let start = frame.members.last().map_or(0, |&j| j + 1);
        let full = frame.members.len() == self.rank;
        let mut nu = Vec::with_capacity(frame.members.len());
        if full {
            if let Some(adj) = &frame.adj64 {
                return self.close_spanning(frame, adj, start, &mut nu);
            }
        }
        for j in start..self.vecs.len() {
            let g = &self.vecs[j];
            if full {
                // Spanning frames only close; test signs before anything else.
                if frame.may_close(g)? && !self.pruned(&frame.lcm, g) {
                    frame.numerators(g, &mut nu)?;
                    self.record(frame, j, &nu, lcm_pos(&frame.lcm, g))?;
                }
                continue;
            }
            frame.numerators(g, &mut nu)?;
            match frame.residual_row(self.vecs, g, &nu)? {
                None => {
                    if frame.closes(&nu) && !self.pruned(&frame.lcm, g) {
                        self.record(frame, j, &nu, lcm_pos(&frame.lcm, g))?;
                    }
                }
                Some(r) => {
                    if self.pruned(&frame.lcm, g) {
                        continue;
                    }
                    let mut members = frame.members.clone();
                    members.push(j);
                    let mut pivots = frame.pivots.clone();
                    pivots.push(r);
                    let next = Frame::new(self.vecs, self.gmax, members, pivots, lcm_pos(&frame.lcm, g))?;
                    self.descend(&next)?;
                }
            }
        }
        Ok(())
    }

    /// Closing scan of a spanning frame in `i64`, one numerator row at a
    /// time over the surviving candidates.
    fn close_spanning(&mut self, frame: &Frame, adj: &[Vec<i64>], start: usize, nu: &mut Vec<i128>) -> Result<()> {
        let positive = frame.det > 0;
        let len = self.vecs.len() - start;
        let mut acc = vec![0i64; len];
        for (&a, &p) in adj[0].iter().zip(&frame.pivots) {
            for (x, &c) in acc.iter_mut().zip(&self.columns[p][start..]) {
                *x += a * c;
            }
        }
        let mut alive: Vec<usize> = (0..len)
            .filter(|&t| acc[t] != 0 && (acc[t] > 0) != positive)
            .map(|t| t + start)
            .collect();
        for row in &adj[1..] {
            alive.retain(|&j| {
                let v: i64 = row.iter().zip(&frame.pivots).map(|(&a, &p)| a * self.columns[p][j]).sum();
                v != 0 && (v > 0) != positive
            });
        }
        for j in alive {
            let g = &self.vecs[j];
            if !self.pruned(&frame.lcm, g) {
                frame.numerators(g, nu)?;
                self.record(frame, j, nu, lcm_pos(&frame.lcm, g))?;
            }
        }
        Ok(())
    }

    fn record(&mut self, frame: &Frame, j: usize, nu: &[i128], lcm: Vec<i64>) -> Result<()> {
        let mut coeffs: Vec<u128> = nu.iter().map(|c| c.unsigned_abs()).collect();
        coeffs.push(frame.det.unsigned_abs());
        let g = coeffs.iter().fold(0u128, |a, &b| gcd_u128(a, b));
        let coefficients = coeffs
            .iter()
            .map(|&c| u64::try_from(c / g).map_err(|_| overflow()))
            .collect::<Result<Vec<u64>>>()?;
        let mut members = frame.members.clone();
        members.push(j);
        if let Some(gens) = &mut self.prune {
            gens.push(lcm.clone());
        }
        self.found.push(PositiveCircuit {
            members,
            coefficients,
            generator: to_monomial(&lcm),
        });
        Ok(())
    }
}

fn transpose(vecs: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = vecs.first().map_or(0, Vec::len);
    (0..n).map(|r| vecs.iter().map(|v| v[r]).collect()).collect()
}

fn entry_max(vecs: &[Vec<i64>]) -> i128 {
    vecs.iter().flatten().map(|&x| (x as i128).abs()).max().unwrap_or(0)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// All positive circuits of a Graver basis, ordered by member list.
pub fn positive_circuits(g: &GraverBasis) -> Result<Vec<PositiveCircuit>> {
    let vecs = g.vectors();
    let mut s = Search {
        vecs,
        columns: transpose(vecs),
        gmax: entry_max(vecs),
        rank: rank_of(vecs),
        prune: None,
        found: Vec::new(),
    };
    s.run()?;
    let mut out = s.found;
    out.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(out)
}

/// `V_L` from a precomputed Graver basis.
///
/// Elements are visited in order of the degree of their positive part, and
/// the search is seeded with the product ideal (the circuits `{g, −g}`), so
/// any branch whose partial `lcm` is already in the ideal found so far is cut.
pub fn vertex_ideal_from_graver(n: usize, g: &GraverBasis) -> Result<MonomialIdeal> {
    let mut vecs: Vec<Vec<i64>> = g.vectors().to_vec();
    vecs.sort_by_key(|v| (vector::one_norm(&vector::pos_part(v)), vector::one_norm(v)));
    let seed = product_ideal_from_graver(n, g)?;
    let mut s = Search {
        vecs: &vecs,
        columns: transpose(&vecs),
        gmax: entry_max(&vecs),
        rank: rank_of(&vecs),
        prune: Some(
            seed.generators()
                .iter()
                .map(|m| m.exponents().iter().map(|&e| e as i64).collect())
                .collect(),
        ),
        found: Vec::new(),
    };
    s.run()?;
    let mut gens: Vec<Monomial> = seed.generators().to_vec();
    gens.extend(s.found.into_iter().map(|c| c.generator));
    MonomialIdeal::minimalize(n, gens)
}

/// `V_L` via positive circuits of the Graver basis.
pub fn vertex_ideal_circuits(l: &Lattice, limits: &Limits) -> Result<MonomialIdeal> {
    let g = graver_basis(l, limits)?;
    vertex_ideal_from_graver(l.ambient_dim(), &g)
}

/// `P_L` from a precomputed Graver basis.
pub fn product_ideal_from_graver(n: usize, g: &GraverBasis) -> Result<MonomialIdeal> {
    let gens = g
        .iter()
        .map(|v| to_monomial(&v.iter().map(|x| x.abs()).collect::<Vec<_>>()))
        .collect();
    MonomialIdeal::minimalize(n, gens)
}

/// `P_L = ⟨x^{g+} x^{g−} : g ∈ Gr_L⟩`.
pub fn product_ideal(l: &Lattice, limits: &Limits) -> Result<MonomialIdeal> {
    let g = graver_basis(l, limits)?;
    product_ideal_from_graver(l.ambient_dim(), &g)
}

/// The Stanley–Reisner ideal of the matroid complex of the rows of `B`:
/// `x^S` is a non-face when the rows outside `S` do not have full rank.
pub fn matroid_radical(l: &Lattice) -> Result<MonomialIdeal> {
    let n = l.ambient_dim();
    let m = l.rank();
    if n > 24 {
        return Err(Error::InvalidInput("matroid radical supports at most 24 variables".into()));
    }
    let rows = l.basis_rows();
    let mut gens = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let outside: Vec<Vec<i64>> = (0..n)
            .filter(|&i| mask & (1 << i) == 0)
            .map(|i| rows[i].clone())
            .collect();
        if rank_of(&outside) < m {
            gens.push(Monomial::new((0..n).map(|i| (mask >> i) & 1).collect()));
        }
    }
    MonomialIdeal::minimalize(n, gens)
}

/// Independent check of [`matroid_radical`]: the intersection of
/// `⟨x_i : i ∈ σ⟩` over the row bases `σ` of `B`.
pub fn matroid_radical_by_intersection(l: &Lattice) -> Result<MonomialIdeal> {
    let n = l.ambient_dim();
    let m = l.rank();
    let rows = l.basis_rows();
    let primes: Vec<MonomialIdeal> = subsets(n, m)
        .into_iter()
        .filter(|s| {
            let picked: Vec<Vec<i64>> = s.iter().map(|&i| rows[i].clone()).collect();
            rank_of(&picked) == m
        })
        .map(|s| MonomialIdeal::prime(n, &s))
        .collect();
    MonomialIdeal::intersect_all(n, &primes)
}

/// The row bases of `B`, i.e. the complements of the facets of the matroid
/// complex.
pub fn row_bases(l: &Lattice) -> Vec<Vec<usize>> {
    let n = l.ambient_dim();
    let m = l.rank();
    let rows = l.basis_rows();
    subsets(n, m)
        .into_iter()
        .filter(|s| {
            let picked: Vec<Vec<i64>> = s.iter().map(|&i| rows[i].clone()).collect();
            rank_of(&picked) == m
        })
        .collect()
}

/// Standard monomials of `V_L` with every exponent at most `bound`, decided
/// directly from fibers: `u` is standard iff `u` is a vertex of `P_u`, i.e.
/// the origin is a vertex of `R_u`. Fibers may be unbounded.
///
/// Uses only that the standard set is closed under division: `u` is tested
/// when all `u − e_i` are standard, and is non-standard otherwise.
pub fn vertex_ideal_oracle(l: &Lattice, bound: u32, limits: &Limits) -> Result<Vec<Vec<u32>>> {
    let n = l.ambient_dim();
    let all: Vec<usize> = (0..n).collect();
    let side = bound as usize + 1;
    let total = side.checked_pow(n as u32).ok_or(Error::BudgetExceeded {
        what: "oracle box",
        budget: limits.fiber_points,
    })?;
    if total as u64 > limits.fiber_points {
        return Err(Error::BudgetExceeded {
            what: "oracle box",
            budget: limits.fiber_points,
        });
    }
    let index = |u: &[u32]| u.iter().rev().fold(0usize, |acc, &x| acc * side + x as usize);
    let mut standard = vec![false; total];
    let mut out = Vec::new();
    // Lexicographic counting visits every u − e_i before u.
    let mut u = vec![0u32; n];
    for _ in 0..total {
        let below_ok = (0..n).all(|i| {
            if u[i] == 0 {
                return true;
            }
            let mut w = u.clone();
            w[i] -= 1;
            standard[index(&w)]
        });
        if below_ok {
            let ui: Vec<i64> = u.iter().map(|&x| x as i64).collect();
            if origin_is_vertex(l, &ui, &all, limits)? {
                standard[index(&u)] = true;
                out.push(u.clone());
            }
        }
        for x in u.iter_mut() {
            if *x < bound {
                *x += 1;
                break;
            }
            *x = 0;
        }
    }
    out.sort();
    Ok(out)
}

/// Points of the box `[0, bound]^n` where `ideal` and the oracle disagree.
pub fn oracle_mismatches(
    l: &Lattice,
    ideal: &MonomialIdeal,
    bound: u32,
    limits: &Limits,
) -> Result<Vec<Vec<u32>>> {
    let standard = vertex_ideal_oracle(l, bound, limits)?;
    let n = l.ambient_dim();
    let mut bad = Vec::new();
    let mut u = vec![0u32; n];
    let mut k = 0usize;
    loop {
        let is_std = standard.get(k).is_some_and(|s| *s == u);
        if is_std {
            k += 1;
        }
        if ideal.contains_exponents(&u) == is_std {
            bad.push(u.clone());
        }
        // Lexicographic increment, matching the sort order of `standard`.
        let mut i = n;
        loop {
            if i == 0 {
                bad.sort();
                return Ok(bad);
            }
            i -= 1;
            if u[i] < bound {
                u[i] += 1;
                for x in u.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Decides whether `(x^u, τ)` is a standard pair of `V_L` from polyhedra:
/// the origin is a vertex of `R^τ̄_u` and of no `R^{τ̄∖i}_u`.
pub fn verify_standard_pair(l: &Lattice, u: &[i64], tau: &[usize], limits: &Limits) -> Result<bool> {
    let n = l.ambient_dim();
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.len(),
        });
    }
    if tau.iter().any(|&i| i >= n) {
        return Err(Error::InvalidInput("τ index out of range".into()));
    }
    if tau.iter().any(|&i| u[i] != 0) {
        return Ok(false);
    }
    let keep: Vec<usize> = (0..n).filter(|i| !tau.contains(i)).collect();
    if !origin_is_vertex(l, u, &keep, limits)? {
        return Ok(false);
    }
    for &i in &keep {
        let fewer: Vec<usize> = keep.iter().copied().filter(|&j| j != i).collect();
        if origin_is_vertex(l, u, &fewer, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Violations of the dimension bounds for the associated primes of `V_L`
/// of an `m`-dimensional lattice: codimension at most `min(n, 2^m − 1)`.
pub fn dimension_bounds_report(v: &MonomialIdeal, m: usize) -> Result<Vec<String>> {
    let n = v.ambient();
    let cap = if m >= 63 { n } else { n.min((1usize << m) - 1) };
    let primes = if v.is_zero() || v.is_unit() {
        Vec::new()
    } else {
        crate::decomposition::associated_primes(v)?
    };
    Ok(primes
        .into_iter()
        .filter(|p| p.len() > cap)
        .map(|p| alloc::format!("associated prime {:?} has codimension {} > {}", p, p.len(), cap))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;
    use crate::monomial::parse_ideal;

    fn ker(row: &[i64]) -> Lattice {
        Lattice::from_defining_matrix(IntMatrix::from_rows(&[row]).unwrap()).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn example_123() {
        let l = ker(&[1, 2, 3]);
        let v = vertex_ideal_circuits(&l, &lim()).unwrap();
        assert_eq!(v, parse_ideal(3, "abc, a^2b, a^3c, b^3c^2").unwrap());
    }

    #[test]
    fn example_345() {
        let l = ker(&[3, 4, 5]);
        let v = vertex_ideal_circuits(&l, &lim()).unwrap();
        let p = product_ideal(&l, &lim()).unwrap();
        assert_eq!(v, parse_ideal(3, "ab^2c, a^2bc, a^4b^3, a^5c^3, b^5c^4").unwrap());
        assert_eq!(p, parse_ideal(3, "ab^2c, a^2bc^2, a^3bc, a^4b^3, a^5c^3, b^5c^4").unwrap());
        assert!(p.is_subset_of(&v) && p != v);
    }

    #[test]
    fn circuit_a2bc_for_345() {
        let l = ker(&[3, 4, 5]);
        let g = graver_basis(&l, &lim()).unwrap();
        let cs = positive_circuits(&g).unwrap();
        let idx = |v: &[i64]| g.vectors().iter().position(|x| x == v).unwrap();
        let mut want = vec![idx(&[-3, 1, 1]), idx(&[1, -2, 1]), idx(&[2, 1, -2])];
        want.sort();
        let c = cs.iter().find(|c| c.members == want).expect("circuit present");
        assert_eq!(c.coefficients, vec![1, 1, 1]);
        assert_eq!(c.generator, Monomial::new(vec![2, 1, 1]));
        for c in &cs {
            let mut sum = vec![0i64; 3];
            for (&j, &k) in c.members.iter().zip(&c.coefficients) {
                for i in 0..3 {
                    sum[i] += k as i64 * g.vectors()[j][i];
                }
            }
            assert_eq!(sum, vec![0, 0, 0]);
            assert!(c.members.len() <= 3);
        }
    }

    #[test]
    fn pruned_search_matches_full_enumeration() {
        for row in [[1i64, 2, 3], [3, 4, 5], [2, 3, 7], [1, 1, 4]] {
            let l = ker(&row);
            let g = graver_basis(&l, &lim()).unwrap();
            let all = positive_circuits(&g).unwrap();
            let full = MonomialIdeal::minimalize(3, all.into_iter().map(|c| c.generator).collect()).unwrap();
            assert_eq!(full, vertex_ideal_from_graver(3, &g).unwrap(), "{:?}", row);
        }
    }

    #[test]
    fn rank_one_lattice_has_one_circuit_pair() {
        let l = Lattice::from_columns(2, &[vec![1, -1]]).unwrap();
        let g = graver_basis(&l, &lim()).unwrap();
        let cs = positive_circuits(&g).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].coefficients, vec![1, 1]);
        assert_eq!(product_ideal(&l, &lim()).unwrap(), parse_ideal(2, "ab").unwrap());
    }

    #[test]
    fn matroid_radical_examples() {
        let l = ker(&[1, 2, 3]);
        let r = matroid_radical(&l).unwrap();
        assert_eq!(r, parse_ideal(3, "ab, ac, bc").unwrap());
        assert_eq!(r, matroid_radical_by_intersection(&l).unwrap());
        let line = Lattice::from_columns(1, &[vec![1]]).unwrap();
        assert_eq!(matroid_radical(&line).unwrap(), parse_ideal(1, "a").unwrap());
    }

    #[test]
    fn oracle_agrees_on_small_lattices() {
        let l = ker(&[1, 1]);
        let std = vertex_ideal_oracle(&l, 5, &lim()).unwrap();
        assert!(std.iter().all(|u| u[0] == 0 || u[1] == 0));
        assert_eq!(std.len(), 11);
        for row in [[1i64, 2, 3], [3, 4, 5]] {
            let l = ker(&row);
            let v = vertex_ideal_circuits(&l, &lim()).unwrap();
            assert!(oracle_mismatches(&l, &v, 8, &lim()).unwrap().is_empty());
        }
    }

    #[test]
    fn standard_pairs_from_polyhedra() {
        let l = ker(&[1, 2, 3]);
        assert!(verify_standard_pair(&l, &[0, 0, 0], &[0], &lim()).unwrap());
        assert!(!verify_standard_pair(&l, &[1, 1, 1], &[], &lim()).unwrap());
        let v = vertex_ideal_circuits(&l, &lim()).unwrap();
        let pairs = crate::decomposition::standard_pairs(&v).unwrap();
        for p in &pairs {
            let u: Vec<i64> = p.root.exponents().iter().map(|&x| x as i64).collect();
            assert!(verify_standard_pair(&l, &u, &p.free, &lim()).unwrap(), "{:?}", p);
        }
    }

    #[test]
    fn dimension_bounds() {
        let v = parse_ideal(3, "abc, a^2b, a^3c, b^3c^2").unwrap();
        assert!(dimension_bounds_report(&v, 2).unwrap().is_empty());
        assert_eq!(dimension_bounds_report(&v, 1).unwrap().len(), 3);
    }
}
