//! Monomials and monomial ideals in `k[x_1, …, x_n]`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A monomial `x^u`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// Exponent vector from signed integers; errors on negative or oversized entries.
    pub fn from_i64(v: &[i64]) -> Result<Self> {
        v.iter()
            .map(|&x| {
                u32::try_from(x).map_err(|_| Error::InvalidInput(alloc::format!("bad exponent {}", x)))
            })
            .collect::<Result<Vec<u32>>>()
            .map(Monomial)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// The squarefree monomial on the support.
    pub fn support_monomial(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| u32::from(e > 0)).collect())
    }

    /// Deletes the coordinates in `sigma`.
    pub fn drop_vars(&self, sigma: &[usize]) -> Monomial {
        Monomial(
            (0..self.0.len())
                .filter(|i| !sigma.contains(i))
                .map(|i| self.0[i])
                .collect(),
        )
    }

    /// Human-readable form with variables `a, b, c, …` (`x1, x2, …` when `n > 26`).
    pub fn pretty(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        let n = self.0.len();
        let mut s = String::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if n > 26 && !s.is_empty() {
                s.push('*');
            }
            s.push_str(&var_name(n, i));
            if e > 1 {
                s.push_str(&alloc::format!("^{}", e));
            }
        }
        s
    }
}

pub fn var_name(n: usize, i: usize) -> String {
    if n <= 26 {
        String::from((b'a' + i as u8) as char)
    } else {
        alloc::format!("x{}", i + 1)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// Graded order: total degree, then lexicographic on exponent vectors.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial ideal, held by its minimal generators in graded order. No
/// generators means the zero ideal; the generator `1` means the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// `⟨x_i : i ∈ vars⟩`.
    pub fn prime(n: usize, vars: &[usize]) -> Self {
        Self::minimalize(n, vars.iter().map(|&i| Monomial::var(n, i)).collect())
            .expect("variables are in range")
    }

    /// The ideal generated by `gens`, reduced to its minimal generating set.
    pub fn minimalize(n: usize, mut gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.len(),
            });
        }
        gens.sort();
        gens.dedup();
        // Sorted by degree, so a divisor of g always comes before g.
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        Ok(MonomialIdeal { n, gens: kept })
    }

    pub fn from_exponents(n: usize, gens: &[Vec<u32>]) -> Result<Self> {
        Self::minimalize(n, gens.iter().cloned().map(Monomial).collect())
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_exponents(&self, u: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.0.iter().zip(u).all(|(a, b)| a <= b))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        Self::minimalize(self.n, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Self::minimalize(self.n, lcms)
    }

    /// Intersection of a family; the empty family gives the unit ideal.
    pub fn intersect_all<'a, I>(n: usize, ideals: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut acc = MonomialIdeal::unit(n);
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::minimalize(self.n, self.gens.iter().map(Monomial::support_monomial).collect())
            .expect("same ambient")
    }

    /// Sets the variables in `sigma` to 1 and deletes them; the result lives
    /// in `n − |σ|` variables.
    pub fn localize(&self, sigma: &[usize]) -> Result<MonomialIdeal> {
        if let Some(&i) = sigma.iter().find(|&&i| i >= self.n) {
            return Err(Error::InvalidInput(alloc::format!("variable {} out of range", i + 1)));
        }
        let mut s = sigma.to_vec();
        s.sort_unstable();
        s.dedup();
        Self::minimalize(
            self.n - s.len(),
            self.gens.iter().map(|g| g.drop_vars(&s)).collect(),
        )
    }

    /// Sets the variables in `sigma` to 1 but keeps the ambient ring.
    pub fn localize_keep(&self, sigma: &[usize]) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.0.clone();
                for &i in sigma {
                    if i < e.len() {
                        e[i] = 0;
                    }
                }
                Monomial(e)
            })
            .collect();
        Self::minimalize(self.n, gens).expect("same ambient")
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.n];
        for g in &self.gens {
            for (x, &e) in d.iter_mut().zip(&g.0) {
                *x = (*x).max(e);
            }
        }
        d
    }

    /// Generators as text, one exponent vector per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.gens {
            let line: Vec<String> = g.0.iter().map(|e| alloc::format!("{}", e)).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn pretty(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(Monomial::pretty).collect();
        alloc::format!("<{}>", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// Parses the short form used in tests and docs: `"abc, a^2b, b^3c^2"`.
/// Variables are single letters starting from `a`.
pub fn parse_ideal(n: usize, s: &str) -> Result<MonomialIdeal> {
    let mut gens = Vec::new();
    for term in s.split(',') {
        let term = term.trim();
        if term.is_empty() {
            continue;
        }
        gens.push(parse_monomial(n, term)?);
    }
    MonomialIdeal::minimalize(n, gens)
}

pub fn parse_monomial(n: usize, s: &str) -> Result<Monomial> {
    let mut e = vec![0u32; n];
    if s.trim() == "1" {
        return Ok(Monomial(e));
    }
    let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if !c.is_ascii_lowercase() {
            return Err(Error::InvalidInput(alloc::format!("bad monomial {:?}", s)));
        }
        let v = (c as u8 - b'a') as usize;
        if v >= n {
            return Err(Error::InvalidInput(alloc::format!("variable {} out of range", c)));
        }
        i += 1;
        let mut power = 1u32;
        if i < bytes.len() && bytes[i] == '^' {
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = bytes[start..i].iter().collect();
            power = digits
                .parse()
                .map_err(|_| Error::InvalidInput(alloc::format!("bad exponent in {:?}", s)))?;
        }
        e[v] += power;
    }
    Ok(Monomial(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(n: usize, s: &str) -> MonomialIdeal {
        parse_ideal(n, s).unwrap()
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(id(2, "a^2, a^2b, b"), id(2, "a^2, b"));
        assert_eq!(id(2, "a^2, a^2b, b").len(), 2);
        assert_eq!(
            id(3, "abc, a^2b, a^3c, b^3c^2, a^3bc").generators(),
            id(3, "abc, a^2b, a^3c, b^3c^2").generators()
        );
        assert!(MonomialIdeal::minimalize(3, vec![]).unwrap().is_zero());
    }

    #[test]
    fn membership() {
        let m = id(2, "ab");
        assert!(m.contains(&parse_monomial(2, "a^2b").unwrap()));
        assert!(!m.contains(&parse_monomial(2, "a^3").unwrap()));
        let v = id(3, "abc, a^2b, a^3c, b^3c^2");
        assert!(v.contains(&parse_monomial(3, "a^2bc").unwrap()));
    }

    #[test]
    fn intersections() {
        assert_eq!(id(2, "a").intersect(&id(2, "b")).unwrap(), id(2, "ab"));
        let p = id(3, "a^3, ab, b^3")
            .intersect(&id(3, "a^2, ac, c^2"))
            .unwrap()
            .intersect(&id(3, "b, c"))
            .unwrap();
        assert_eq!(p, id(3, "abc, a^2b, a^3c, b^3c^2"));
        let m = id(3, "ab, c^2");
        assert_eq!(m.intersect(&MonomialIdeal::unit(3)).unwrap(), m);
        assert!(id(2, "a").intersect(&id(3, "a")).is_err());
    }

    #[test]
    fn radicals() {
        assert_eq!(id(3, "a^2, ab, ac, b^3").radical(), id(3, "a, b"));
        assert_eq!(id(3, "abc, a^2b, a^3c, b^3c^2").radical(), id(3, "ab, ac, bc"));
        let sq = id(3, "ab, bc");
        assert_eq!(sq.radical(), sq);
    }

    #[test]
    fn localization() {
        let v = id(3, "abc, a^2b, a^3c, b^3c^2");
        assert_eq!(v.localize(&[2]).unwrap(), id(2, "ab, a^3, b^3"));
        assert_eq!(v.localize(&[]).unwrap(), v);
        assert_eq!(id(2, "ab").localize(&[0]).unwrap(), id(1, "a"));
        assert_eq!(v.localize_keep(&[2]), id(3, "ab, a^3, b^3"));
    }

    #[test]
    fn canonical_order_and_printing() {
        let v = id(3, "b^3c^2, a^3c, a^2b, abc");
        assert_eq!(v.pretty(), "<abc, a^2b, a^3c, b^3c^2>");
        assert_eq!(v.to_text(), "1 1 1\n2 1 0\n3 0 1\n0 3 2\n");
        assert_eq!(MonomialIdeal::unit(2).pretty(), "<1>");
    }
}
