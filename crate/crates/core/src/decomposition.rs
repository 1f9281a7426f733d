//! Standard pairs, associated primes, irreducible decompositions and
//! Hilbert counts of monomial ideals.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::lp::{lp_feasible, Feasibility, LinearConstraint, Relation};
use crate::matrix::IntMatrix;
use crate::monomial::{var_name, Monomial, MonomialIdeal};
use crate::Limits;

/// A standard pair `(x^u, τ)`: the monomials `x^{u+v}` with `supp(v) ⊆ τ`
/// are all standard, and the pair is maximal with that property.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardPair {
    pub root: Monomial,
    /// The free variables `τ`, sorted.
    pub free: Vec<usize>,
}

impl StandardPair {
    /// Whether `x^w` lies in `x^u · k[x_τ]`.
    pub fn covers(&self, w: &[u32]) -> bool {
        self.root
            .exponents()
            .iter()
            .zip(w)
            .enumerate()
            .all(|(i, (&r, &x))| if self.free.contains(&i) { r <= x } else { r == x })
    }
}

impl fmt::Debug for StandardPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.root.len();
        let names: Vec<_> = self.free.iter().map(|&i| var_name(n, i)).collect();
        write!(f, "({}, {{{}}})", self.root, names.join(","))
    }
}

/// Localized ideals `π̂_τ(M)` (in the full ring) for every `τ`, computed on demand.
struct Localizations<'a> {
    m: &'a MonomialIdeal,
    cache: Vec<Option<MonomialIdeal>>,
}

impl<'a> Localizations<'a> {
    fn new(m: &'a MonomialIdeal) -> Self {
        Localizations {
            m,
            cache: vec![None; 1 << m.ambient()],
        }
    }

    fn get(&mut self, tau: u32) -> &MonomialIdeal {
        let n = self.m.ambient();
        let idx = tau as usize;
        if self.cache[idx].is_none() {
            let sigma: Vec<usize> = (0..n).filter(|i| tau & (1 << i) != 0).collect();
            self.cache[idx] = Some(self.m.localize_keep(&sigma));
        }
        self.cache[idx].as_ref().unwrap()
    }

    /// `(x^u, τ)` admissible, assuming `u` vanishes on `τ`.
    fn admissible(&mut self, u: &[u32], tau: u32) -> bool {
        !self.get(tau).contains_exponents(u)
    }
}

fn check_proper(m: &MonomialIdeal) -> Result<()> {
    if m.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if m.ambient() > 20 {
        return Err(Error::InvalidInput("more than 20 variables".into()));
    }
    Ok(())
}

/// All standard pairs of a proper monomial ideal, sorted.
///
/// Recurses on a variable `x_i` of largest exponent `D`: pairs with `x_i`
/// free are the pairs of `M` with `x_i = 1`; the others have root exponent
/// `e < D` in `x_i` and come from the slice `(M : x_i^e)|_{x_i = 0}`, kept
/// unless they extend to a pair with `x_i` free.
pub fn standard_pairs(m: &MonomialIdeal) -> Result<Vec<StandardPair>> {
    check_proper(m)?;
    let n = m.ambient();
    let gens: Vec<Vec<u32>> = m.generators().iter().map(|g| g.exponents().to_vec()).collect();
    let mut memo = BTreeMap::new();
    let raw = pairs_rec(&gens, n, (1u32 << n) - 1, &mut memo);
    let mut out: Vec<StandardPair> = raw
        .iter()
        .map(|(u, tau)| StandardPair {
            root: Monomial::new(u.clone()),
            free: (0..n).filter(|i| tau & (1 << i) != 0).collect(),
        })
        .collect();
    out.sort();
    Ok(out)
}

type RawPairs = Rc<Vec<(Vec<u32>, u32)>>;

/// `gens` is a minimal generating set using only variables in `active`.
fn pairs_rec(
    gens: &[Vec<u32>],
    n: usize,
    active: u32,
    memo: &mut BTreeMap<(Vec<Vec<u32>>, u32), RawPairs>,
) -> RawPairs {
    let key = (gens.to_vec(), active);
    if let Some(r) = memo.get(&key) {
        return r.clone();
    }
    let result = if gens.is_empty() {
        Rc::new(vec![(vec![0; n], active)])
    } else if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
        Rc::new(Vec::new())
    } else {
        let i = (0..n)
            .max_by_key(|&i| (gens.iter().map(|g| g[i]).max().unwrap_or(0), core::cmp::Reverse(i)))
            .expect("n > 0");
        let d = gens.iter().map(|g| g[i]).max().unwrap_or(0);
        let rest = active & !(1 << i);
        let saturated = slice(gens, i, u32::MAX);
        let mut out: Vec<(Vec<u32>, u32)> = pairs_rec(&saturated, n, rest, memo)
            .iter()
            .map(|(u, tau)| (u.clone(), tau | (1 << i)))
            .collect();
        let mut thresholds: Vec<u32> = gens.iter().map(|g| g[i]).filter(|&e| e < d).collect();
        thresholds.push(0);
        thresholds.sort_unstable();
        thresholds.dedup();
        for (k, &lo) in thresholds.iter().enumerate() {
            let hi = thresholds.get(k + 1).copied().unwrap_or(d);
            let sub = slice(gens, i, lo);
            let kept: Vec<(Vec<u32>, u32)> = pairs_rec(&sub, n, rest, memo)
                .iter()
                .filter(|(u, tau)| {
                    saturated.iter().any(|g| {
                        (0..n).all(|j| tau & (1 << j) != 0 || g[j] <= u[j])
                    })
                })
                .cloned()
                .collect();
            for e in lo..hi {
                for (u, tau) in &kept {
                    let mut w = u.clone();
                    w[i] = e;
                    out.push((w, *tau));
                }
            }
        }
        Rc::new(out)
    };
    memo.insert(key, result.clone());
    result
}

/// Minimal generators of `(M : x_i^e)` that avoid `x_i`.
fn slice(gens: &[Vec<u32>], i: usize, e: u32) -> Vec<Vec<u32>> {
    let mut picked: Vec<Vec<u32>> = gens
        .iter()
        .filter(|g| g[i] <= e)
        .map(|g| {
            let mut h = g.clone();
            h[i] = 0;
            h
        })
        .collect();
    picked.sort_unstable_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>()).then_with(|| a.cmp(b)));
    picked.dedup();
    let mut minimal: Vec<Vec<u32>> = Vec::with_capacity(picked.len());
    for g in picked {
        if !minimal.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            minimal.push(g);
        }
    }
    minimal.sort_unstable();
    minimal
}

/// Reference implementation of [`standard_pairs`] that walks every
/// standard monomial below the generator exponents. Slow; kept for testing.
pub fn standard_pairs_exhaustive(m: &MonomialIdeal) -> Result<Vec<StandardPair>> {
    check_proper(m)?;
    let n = m.ambient();
    let d = m.max_exponents();
    let mut loc = Localizations::new(m);
    let mut out = Vec::new();
    for tau in 0u32..(1 << n) {
        if !loc.admissible(&vec![0; n], tau) {
            continue;
        }
        let fixed: Vec<usize> = (0..n).filter(|i| tau & (1 << i) == 0).collect();
        let mut u = vec![0u32; n];
        walk_staircase(&mut loc, tau, &fixed, &d, 0, &mut u, &mut |loc, u| {
            let maximal = fixed.iter().all(|&j| {
                let mut w = u.to_vec();
                w[j] = 0;
                !loc.admissible(&w, tau | (1 << j))
            });
            if maximal {
                out.push(StandardPair {
                    root: Monomial::new(u.to_vec()),
                    free: (0..n).filter(|i| tau & (1 << i) != 0).collect(),
                });
            }
        });
    }
    out.sort();
    Ok(out)
}

/// Visits every `u` supported on `fixed`, `u_i < d_i`, with `(x^u, τ)` admissible.
fn walk_staircase(
    loc: &mut Localizations<'_>,
    tau: u32,
    fixed: &[usize],
    d: &[u32],
    k: usize,
    u: &mut Vec<u32>,
    visit: &mut dyn FnMut(&mut Localizations<'_>, &[u32]),
) {
    if k == fixed.len() {
        visit(loc, u);
        return;
    }
    let i = fixed[k];
    for e in 0..d[i].max(1) {
        u[i] = e;
        if !loc.admissible(u, tau) {
            break;
        }
        walk_staircase(loc, tau, fixed, d, k + 1, u, visit);
    }
    u[i] = 0;
}

/// Associated primes, each given by its generating variables `τ̄ = [n] ∖ τ`.
pub fn associated_primes(m: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    let n = m.ambient();
    let primes: BTreeSet<Vec<usize>> = standard_pairs(m)?
        .into_iter()
        .map(|p| (0..n).filter(|i| !p.free.contains(i)).collect())
        .collect();
    let mut out: Vec<Vec<usize>> = primes.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// An irreducible monomial ideal `⟨x_i^{a_i} : i ∈ S⟩`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    pub n: usize,
    /// `(i, a_i)` pairs, sorted by variable, all `a_i ≥ 1`.
    pub powers: Vec<(usize, u32)>,
}

impl IrreducibleComponent {
    pub fn ideal(&self) -> MonomialIdeal {
        let gens = self
            .powers
            .iter()
            .map(|&(i, a)| {
                let mut e = vec![0; self.n];
                e[i] = a;
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::minimalize(self.n, gens).expect("same ambient")
    }

    pub fn prime(&self) -> Vec<usize> {
        self.powers.iter().map(|&(i, _)| i).collect()
    }

    pub fn codim(&self) -> usize {
        self.powers.len()
    }

    /// `self ⊆ other` (as ideals).
    fn contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.powers.iter().all(|&(i, a)| {
            other
                .powers
                .iter()
                .any(|&(j, b)| j == i && b <= a)
        })
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ideal())
    }
}

/// Irredundant irreducible decomposition. Each standard pair `(x^u, τ)`
/// with `x^u x_i ∈ π̂_τ(M)` for every `i ∉ τ` contributes
/// `⟨x_i^{u_i+1} : i ∉ τ⟩`; the result is checked to intersect back to `M`.
pub fn irreducible_decomposition(m: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    let n = m.ambient();
    let pairs = standard_pairs(m)?;
    let mut loc = Localizations::new(m);
    let mut comps: BTreeSet<IrreducibleComponent> = BTreeSet::new();
    for p in &pairs {
        let tau: u32 = p.free.iter().map(|&i| 1u32 << i).sum();
        let u = p.root.exponents();
        let fixed: Vec<usize> = (0..n).filter(|i| !p.free.contains(i)).collect();
        let critical = fixed.iter().all(|&i| {
            let mut w = u.to_vec();
            w[i] += 1;
            !loc.admissible(&w, tau)
        });
        if critical {
            comps.insert(IrreducibleComponent {
                n,
                powers: fixed.iter().map(|&i| (i, u[i] + 1)).collect(),
            });
        }
    }
    let all: Vec<IrreducibleComponent> = comps.into_iter().collect();
    let mut kept: Vec<IrreducibleComponent> = Vec::new();
    for (k, c) in all.iter().enumerate() {
        // A component containing another one is redundant.
        let redundant = all
            .iter()
            .enumerate()
            .any(|(j, o)| j != k && o.contained_in(c));
        if !redundant {
            kept.push(c.clone());
        }
    }
    kept.sort_by(|a, b| a.codim().cmp(&b.codim()).then_with(|| a.cmp(b)));
    let ideals: Vec<MonomialIdeal> = kept.iter().map(IrreducibleComponent::ideal).collect();
    let back = MonomialIdeal::intersect_all(n, ideals.iter())?;
    if &back != m {
        return Err(Error::CheckFailed(vec![alloc::format!(
            "components intersect to {} instead of {}",
            back, m
        )]));
    }
    Ok(kept)
}

/// Intersection of the components of minimal codimension.
pub fn top(m: &MonomialIdeal) -> Result<MonomialIdeal> {
    let comps = irreducible_decomposition(m)?;
    let Some(c) = comps.iter().map(IrreducibleComponent::codim).min() else {
        return Ok(MonomialIdeal::unit(m.ambient()));
    };
    let ideals: Vec<MonomialIdeal> = comps
        .iter()
        .filter(|x| x.codim() == c)
        .map(IrreducibleComponent::ideal)
        .collect();
    MonomialIdeal::intersect_all(m.ambient(), ideals.iter())
}

/// Number of standard monomials of `M` in one multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertCount {
    pub degree: Vec<i64>,
    pub count: u64,
    /// Whether `b ∈ NA` (some `u ∈ N^n` has `Au = b`).
    pub in_semigroup: bool,
}

/// For each `b`, counts the `u ∈ N^n` with `Au = b` and `x^u ∉ M`. When
/// `M = V_L` these are the vertex counts `|Vert(P_b)|`.
pub fn hilbert_vertex_counts(
    m: &MonomialIdeal,
    a: &IntMatrix,
    degrees: &[Vec<i64>],
    limits: &Limits,
) -> Result<Vec<HilbertCount>> {
    let n = m.ambient();
    if a.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.cols(),
        });
    }
    let rows = a.rows_i64()?;
    let w = positive_row_combination(&rows, n)?;
    let mut out = Vec::with_capacity(degrees.len());
    for b in degrees {
        if b.len() != rows.len() {
            return Err(Error::DimensionMismatch {
                expected: rows.len(),
                found: b.len(),
            });
        }
        let (ref y, ref wv) = w;
        let total: i128 = y.iter().zip(b).map(|(&p, &q)| p as i128 * q as i128).sum();
        let mut count = 0u64;
        let mut hits = 0u64;
        let mut visited = 0u64;
        let mut u = vec![0i64; n];
        enumerate_weighted(
            &rows, b, wv, total, 0, &mut u, &mut visited, limits.fiber_points,
            &mut |u| {
                hits += 1;
                let e: Vec<u32> = u.iter().map(|&x| x as u32).collect();
                if !m.contains_exponents(&e) {
                    count += 1;
                }
            },
        )?;
        out.push(HilbertCount {
            degree: b.clone(),
            count,
            in_semigroup: hits > 0,
        });
    }
    Ok(out)
}

/// An integer `y` with `yA > 0` entrywise, and `yA`.
fn positive_row_combination(rows: &[Vec<i64>], n: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    let d = rows.len();
    let cons: Vec<LinearConstraint> = (0..n)
        .map(|i| {
            let col: Vec<i64> = rows.iter().map(|r| r[i]).collect();
            LinearConstraint::ints(&col, Relation::Ge, 1)
        })
        .collect();
    let Feasibility::Feasible(y) = lp_feasible(d, &cons)? else {
        return Err(Error::UnboundedFiber);
    };
    let yi: Vec<i64> = y
        .primitive()
        .iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow("grading")))
        .collect::<Result<_>>()?;
    let wv: Vec<i64> = (0..n)
        .map(|i| rows.iter().zip(&yi).map(|(r, &c)| r[i] * c).sum())
        .collect();
    debug_assert!(wv.iter().all(|x| x.is_positive()));
    Ok((yi, wv))
}

#[allow(clippy::too_many_arguments)]
fn enumerate_weighted(
    rows: &[Vec<i64>],
    b: &[i64],
    w: &[i64],
    remaining: i128,
    k: usize,
    u: &mut Vec<i64>,
    visited: &mut u64,
    budget: u64,
    visit: &mut dyn FnMut(&[i64]),
) -> Result<()> {
    *visited += 1;
    if *visited > budget {
        return Err(Error::BudgetExceeded {
            what: "fiber point",
            budget,
        });
    }
    if k == u.len() {
        if remaining == 0 && rows.iter().zip(b).all(|(r, &bi)| {
            r.iter().zip(u.iter()).map(|(&x, &y)| x as i128 * y as i128).sum::<i128>() == bi as i128
        }) {
            visit(u);
        }
        return Ok(());
    }
    let mut e = 0i64;
    while (e as i128) * (w[k] as i128) <= remaining {
        u[k] = e;
        enumerate_weighted(rows, b, w, remaining - e as i128 * w[k] as i128, k + 1, u, visited, budget, visit)?;
        e += 1;
    }
    u[k] = 0;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::parse_ideal;

    fn id(n: usize, s: &str) -> MonomialIdeal {
        parse_ideal(n, s).unwrap()
    }

    fn pair(n: usize, root: &str, free: &[usize]) -> StandardPair {
        StandardPair {
            root: crate::monomial::parse_monomial(n, root).unwrap(),
            free: free.to_vec(),
        }
    }

    #[test]
    fn standard_pairs_of_small_ideals() {
        let mut want = vec![
            pair(3, "1", &[2]),
            pair(3, "b", &[2]),
            pair(3, "b^2", &[2]),
            pair(3, "a", &[]),
        ];
        want.sort();
        assert_eq!(standard_pairs(&id(3, "a^2, ab, ac, b^3")).unwrap(), want);

        let mut want = vec![pair(2, "1", &[0]), pair(2, "1", &[1])];
        want.sort();
        assert_eq!(standard_pairs(&id(2, "ab")).unwrap(), want);

        assert_eq!(
            standard_pairs(&MonomialIdeal::zero(1)).unwrap(),
            vec![pair(1, "1", &[0])]
        );
        assert_eq!(standard_pairs(&MonomialIdeal::unit(2)), Err(Error::UnitIdeal));
    }

    #[test]
    fn recursive_pairs_match_exhaustive_walk() {
        let mut seed = 12345u64;
        let mut next = |k: u64| {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % k) as u32
        };
        for _ in 0..300 {
            let n = 1 + next(4) as usize;
            let count = 1 + next(5);
            let gens: Vec<Monomial> = (0..count)
                .map(|_| Monomial::new((0..n).map(|_| next(5)).collect()))
                .collect();
            let m = MonomialIdeal::minimalize(n, gens).unwrap();
            if m.is_unit() {
                continue;
            }
            assert_eq!(standard_pairs(&m).unwrap(), standard_pairs_exhaustive(&m).unwrap(), "{}", m);
        }
    }

    #[test]
    fn primes() {
        let v = id(3, "abc, a^2b, a^3c, b^3c^2");
        assert_eq!(associated_primes(&v).unwrap(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let init = id(3, "a^2, ab, ac, b^3");
        assert_eq!(associated_primes(&init).unwrap(), vec![vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(associated_primes(&id(2, "ab")).unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn irreducible_components() {
        let v = id(3, "abc, a^2b, a^3c, b^3c^2");
        let comps: BTreeSet<MonomialIdeal> = irreducible_decomposition(&v)
            .unwrap()
            .iter()
            .map(|c| c.ideal())
            .collect();
        let want: BTreeSet<MonomialIdeal> = ["a, b^3", "a^3, b", "a^2, c", "a, c^2", "b, c"]
            .iter()
            .map(|s| id(3, s))
            .collect();
        assert_eq!(comps, want);

        let c = irreducible_decomposition(&id(2, "a^2, ab")).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].ideal(), id(2, "a"));
        assert_eq!(c[1].ideal(), id(2, "a^2, b"));
    }

    #[test]
    fn top_components() {
        let v = id(3, "abc, a^2b, a^3c, b^3c^2");
        assert_eq!(top(&v).unwrap(), v);
        assert_eq!(top(&id(2, "a^2, ab")).unwrap(), id(2, "a"));
    }

    #[test]
    fn hilbert_counts_of_a_segment() {
        let a = IntMatrix::from_rows(&[[1i64, 1]]).unwrap();
        let v = id(2, "ab");
        let degs: Vec<Vec<i64>> = (0..5).map(|b| vec![b]).collect();
        let c = hilbert_vertex_counts(&v, &a, &degs, &Limits::default()).unwrap();
        let counts: Vec<u64> = c.iter().map(|h| h.count).collect();
        assert_eq!(counts, vec![1, 2, 2, 2, 2]);
        assert!(c.iter().all(|h| h.in_semigroup));
    }

    #[test]
    fn hilbert_counts_outside_semigroup() {
        let a = IntMatrix::from_rows(&[[2i64, 3]]).unwrap();
        let c = hilbert_vertex_counts(&MonomialIdeal::zero(2), &a, &[vec![1], vec![5]], &Limits::default())
            .unwrap();
        assert_eq!((c[0].count, c[0].in_semigroup), (0, false));
        assert_eq!((c[1].count, c[1].in_semigroup), (1, true));
    }

    #[test]
    fn covering() {
        let p = pair(3, "b", &[2]);
        assert!(p.covers(&[0, 1, 7]));
        assert!(!p.covers(&[0, 2, 0]));
    }
}
