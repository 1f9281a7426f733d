//! Graver bases of lattices.
//!
//! The main routine is a project-and-lift completion: pick `m` coordinates on
//! which the projection of `L` is injective, complete a generating set to a
//! Graver basis there, then lift one coordinate at a time. Each stage is a
//! Pottier-style completion (sums of pairs reduced to normal form under the
//! conformal order on the coordinates handled so far). The orthant oracle
//! below is an independent brute-force check used by the tests.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::det_i128;
use crate::vector::{self, conformal_le, norm_lex_cmp};
use crate::Limits;

/// The Graver basis of a lattice: the union of the Hilbert bases of
/// `L ∩ R_ρ` over all orthants `ρ`, sorted by (1-norm, lex). Closed under
/// negation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GraverBasis {
    vectors: Vec<Vec<i64>>,
}

impl GraverBasis {
    /// Wraps a set of vectors, sorting and deduplicating them.
    pub fn from_vectors(mut vectors: Vec<Vec<i64>>) -> Self {
        vectors.sort_by(|a, b| norm_lex_cmp(a, b));
        vectors.dedup();
        GraverBasis { vectors }
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.vectors
            .binary_search_by(|x| norm_lex_cmp(x, v))
            .is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.vectors.iter()
    }
}

/// Computes the Graver basis of `l`.
pub fn graver_basis(l: &Lattice, limits: &Limits) -> Result<GraverBasis> {
    let m = l.rank();
    let n = l.ambient_dim();
    if m == 0 {
        return Ok(GraverBasis::default());
    }
    if n > 31 {
        return Err(Error::InvalidInput("ambient dimension above 31 is not supported".into()));
    }
    let cols = l.reduced_columns();
    let start = injective_coordinates(l);

    let mut gens: Vec<Vec<i64>> = Vec::with_capacity(2 * m);
    for c in cols {
        gens.push(c.clone());
        gens.push(vector::neg(c));
    }
    let mut coords = start.clone();
    let mut current = complete(gens, &coords, None, limits)?;
    for k in (0..n).filter(|k| !start.contains(k)) {
        let old = coords.clone();
        coords.push(k);
        current = complete(current, &coords, Some((&old, k)), limits)?;
    }
    Ok(GraverBasis::from_vectors(minimal_elements(current, &coords)))
}

/// `m` coordinates where the basis minor is nonsingular, preferring the
/// smallest absolute determinant (the projected lattice then has the smallest
/// index in `Z^m`, so the first completion is cheap).
fn injective_coordinates(l: &Lattice) -> Vec<usize> {
    let n = l.ambient_dim();
    let m = l.rank();
    let rows = l.basis_rows();
    let all = vector::subsets(n, m);
    let mut best: Option<(u128, Vec<usize>)> = None;
    if all.len() <= 20_000 {
        for s in all {
            let minor: Vec<Vec<i64>> = s.iter().map(|&i| rows[i].clone()).collect();
            let d = match det_i128(&minor) {
                Some(d) => d.unsigned_abs(),
                None => u128::MAX,
            };
            if d != 0 && best.as_ref().map_or(true, |(bd, _)| d < *bd) {
                best = Some((d, s));
            }
        }
    }
    match best {
        Some((_, s)) => s,
        None => {
            // Greedy: add rows that raise the rank.
            let mut chosen: Vec<usize> = Vec::new();
            let mut picked: Vec<Vec<i64>> = Vec::new();
            for i in 0..n {
                picked.push(rows[i].clone());
                if vector::rank_of(&picked) == picked.len() {
                    chosen.push(i);
                } else {
                    picked.pop();
                }
            }
            chosen
        }
    }
}

#[derive(Clone)]
struct Elem {
    v: Vec<i64>,
    pos: u32,
    neg: u32,
}

fn masks(v: &[i64], coords: &[usize]) -> (u32, u32) {
    let mut pos = 0u32;
    let mut neg = 0u32;
    for (bit, &c) in coords.iter().enumerate() {
        if v[c] > 0 {
            pos |= 1 << bit;
        } else if v[c] < 0 {
            neg |= 1 << bit;
        }
    }
    (pos, neg)
}

fn restricted_conformal_le(g: &[i64], s: &[i64], coords: &[usize]) -> bool {
    coords.iter().all(|&c| {
        let (x, y) = (g[c], s[c]);
        if x > 0 {
            y >= x
        } else if x < 0 {
            y <= x
        } else {
            true
        }
    })
}

/// Set of elements indexed by sign pattern on the active coordinates, for
/// fast lookup of conformal reducers.
struct Store {
    coords: Vec<usize>,
    elems: Vec<Elem>,
    by_pattern: BTreeMap<(u32, u32), Vec<usize>>,
    seen: BTreeSet<Vec<i64>>,
}

impl Store {
    fn new(coords: &[usize]) -> Self {
        Store {
            coords: coords.to_vec(),
            elems: Vec::new(),
            by_pattern: BTreeMap::new(),
            seen: BTreeSet::new(),
        }
    }

    fn insert(&mut self, v: Vec<i64>) -> bool {
        if !self.seen.insert(v.clone()) {
            return false;
        }
        let (pos, neg) = masks(&v, &self.coords);
        let idx = self.elems.len();
        self.by_pattern.entry((pos, neg)).or_default().push(idx);
        self.elems.push(Elem { v, pos, neg });
        true
    }

    /// Some stored `g ≠ 0` with `g ⊑ s` on the active coordinates.
    fn find_reducer(&self, s: &[i64], skip_equal: bool) -> Option<usize> {
        let (pos, neg) = masks(s, &self.coords);
        // Enumerate sub-patterns (sp ⊆ pos, sn ⊆ neg).
        let mut sp = pos;
        loop {
            let mut sn = neg;
            loop {
                if sp | sn != 0 {
                    if let Some(list) = self.by_pattern.get(&(sp, sn)) {
                        for &i in list {
                            let g = &self.elems[i].v;
                            if restricted_conformal_le(g, s, &self.coords)
                                && !(skip_equal && g.as_slice() == s)
                            {
                                return Some(i);
                            }
                        }
                    }
                }
                if sn == 0 {
                    break;
                }
                sn = (sn - 1) & neg;
            }
            if sp == 0 {
                break;
            }
            sp = (sp - 1) & pos;
        }
        None
    }

    fn normal_form(&self, mut s: Vec<i64>) -> Result<Vec<i64>> {
        while !self.coords.iter().all(|&c| s[c] == 0) {
            match self.find_reducer(&s, false) {
                Some(i) => s = vector::checked_sub(&s, &self.elems[i].v)?,
                None => break,
            }
        }
        Ok(s)
    }
}

/// Completion under the conformal order on `coords`. When lifting, `lift`
/// gives the previous coordinate set and the new coordinate: the input is
/// then already a Graver basis on the previous coordinates and only pairs
/// that agree in sign there and disagree at the new coordinate need to be
/// examined.
fn complete(
    gens: Vec<Vec<i64>>,
    coords: &[usize],
    lift: Option<(&[usize], usize)>,
    limits: &Limits,
) -> Result<Vec<Vec<i64>>> {
    let mut store = Store::new(coords);
    for g in gens {
        if !coords.iter().all(|&c| g[c] == 0) {
            store.insert(g);
        }
    }
    let mut i = 0;
    while i < store.elems.len() {
        for j in 0..i {
            let (f, g) = (&store.elems[i], &store.elems[j]);
            // Same closed orthant on the active coordinates: f + g reduces by f to g.
            if f.pos & g.neg == 0 && f.neg & g.pos == 0 {
                continue;
            }
            if let Some((old, k)) = lift {
                if (f.v[k] as i128) * (g.v[k] as i128) >= 0 {
                    continue;
                }
                if !old.iter().all(|&c| (f.v[c] as i128) * (g.v[c] as i128) >= 0) {
                    continue;
                }
            }
            let s = vector::checked_add(&f.v, &g.v)?;
            let r = store.normal_form(s)?;
            if coords.iter().all(|&c| r[c] == 0) {
                continue;
            }
            if store.insert(r) && store.elems.len() > limits.graver_elements {
                return Err(Error::BudgetExceeded {
                    what: "Graver element",
                    budget: limits.graver_elements as u64,
                });
            }
        }
        i += 1;
    }
    Ok(store.elems.into_iter().map(|e| e.v).collect())
}

/// Keeps the `⊑`-minimal elements (on `coords`).
fn minimal_elements(vs: Vec<Vec<i64>>, coords: &[usize]) -> Vec<Vec<i64>> {
    let mut store = Store::new(coords);
    for v in vs.iter() {
        store.insert(v.clone());
    }
    vs.into_iter()
        .filter(|v| store.find_reducer(v, true).is_none())
        .collect()
}

/// Brute-force Hilbert basis of `L ∩ R_ρ` inside the box `|v_i| ≤ bound`:
/// enumerate the lattice points of the orthant in the box and keep those that
/// are not the sum of two nonzero enumerated points. `signs[i]` is `true` for
/// `+` and `false` for `−`.
pub fn orthant_hilbert_basis_oracle(l: &Lattice, signs: &[bool], bound: i64) -> Result<Vec<Vec<i64>>> {
    let n = l.ambient_dim();
    if signs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: signs.len(),
        });
    }
    let mut points: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut v = vec![0i64; n];
    loop {
        if !vector::is_zero(&v) && l.contains(&v) {
            points.insert(v.clone());
        }
        // Odometer over the orthant box.
        let mut i = 0;
        loop {
            if i == n {
                let mut out: Vec<Vec<i64>> = points
                    .iter()
                    .filter(|p| {
                        !points.iter().any(|q| {
                            q != *p && conformal_le(q, p) && {
                                let d = vector::checked_sub(p, q).unwrap_or_default();
                                points.contains(&d)
                            }
                        })
                    })
                    .cloned()
                    .collect();
                out.sort_by(|a, b| norm_lex_cmp(a, b));
                return Ok(out);
            }
            let step = if signs[i] { 1 } else { -1 };
            if v[i].abs() < bound {
                v[i] += step;
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// Union of the orthant oracle over all sign patterns.
pub fn graver_basis_oracle(l: &Lattice, bound: i64) -> Result<GraverBasis> {
    let n = l.ambient_dim();
    let mut all = Vec::new();
    for mask in 0u32..(1 << n) {
        let signs: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        all.extend(orthant_hilbert_basis_oracle(l, &signs, bound)?);
    }
    Ok(GraverBasis::from_vectors(all))
}

/// Checks the structural invariants of a Graver basis: negation closure,
/// membership in `L`, and conformal minimality.
pub fn check_graver_invariants(l: &Lattice, g: &GraverBasis) -> Vec<alloc::string::String> {
    let mut problems = Vec::new();
    for v in g.iter() {
        if !l.contains(v) {
            problems.push(alloc::format!("{:?} is not in the lattice", v));
        }
        if !g.contains(&vector::neg(v)) {
            problems.push(alloc::format!("negation of {:?} missing", v));
        }
        if let Some(w) = g.iter().find(|w| *w != v && conformal_le(w, v)) {
            problems.push(alloc::format!("{:?} is reducible by {:?}", v, w));
        }
    }
    problems
}
