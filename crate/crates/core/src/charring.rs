//! Finitely supported sums of exponentials `sum m_Lambda e^Lambda`, taken mod
//! `delta`.

use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde_json::{json, Value};

use crate::cartan::{AlgebraLabel, CartanData};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::weight::{AffineWeight, FiniteWeight};

fn accumulate<K: std::hash::Hash + Eq>(map: &mut FxHashMap<K, Coeff>, key: K, c: &Coeff) {
    if c.is_zero() {
        return;
    }
    use std::collections::hash_map::Entry;
    match map.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

fn coeff_json(c: &Coeff) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

/// Element of the group algebra of affine weights mod `delta`.
#[derive(Clone)]
pub struct Character {
    cartan: Arc<CartanData>,
    terms: FxHashMap<AffineWeight, Coeff>,
}

impl Character {
    pub fn zero(cartan: &Arc<CartanData>) -> Self {
        Self {
            cartan: Arc::clone(cartan),
            terms: FxHashMap::default(),
        }
    }

    pub fn monomial(cartan: &Arc<CartanData>, w: AffineWeight) -> Self {
        let mut x = Self::zero(cartan);
        x.add_term(w, &Coeff::ONE);
        x
    }

    pub fn from_terms(
        cartan: &Arc<CartanData>,
        terms: impl IntoIterator<Item = (AffineWeight, Coeff)>,
    ) -> Self {
        let mut x = Self::zero(cartan);
        for (w, c) in terms {
            x.add_term(w, &c);
        }
        x
    }

    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    pub fn label(&self) -> AlgebraLabel {
        self.cartan.label()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &AffineWeight) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineWeight, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in lexicographic order of their coordinates.
    pub fn sorted_terms(&self) -> Vec<(&AffineWeight, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, w: AffineWeight, c: &Coeff) {
        debug_assert_eq!(w.len(), self.cartan.size());
        accumulate(&mut self.terms, w, c);
    }

    /// Sum of all coefficients; the dimension for a module character.
    pub fn mass(&self) -> Coeff {
        self.terms.values().sum()
    }

    fn check_same(&self, other: &Character) -> Result<()> {
        if self.label() != other.label() {
            return Err(Error::AlgebraMismatch {
                left: self.label(),
                right: other.label(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Character) -> Result<Character> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Character {
        let mut out = Self::zero(&self.cartan);
        if k != 0 {
            out.terms = self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.mul_i64(k)))
                .collect();
        }
        out
    }

    pub fn multiply(&self, other: &Character) -> Result<Character> {
        self.check_same(other)?;
        let mut out = Self::zero(&self.cartan);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1 + w2, &(c1 * c2));
            }
        }
        Ok(out)
    }

    /// Applies a diagram automorphism: `e^Lambda -> e^{sigma(Lambda)}` where
    /// `sigma(Lambda)` has coordinate `c_i` at node `perm[i]`.
    pub fn twist(&self, perm: &[usize]) -> Result<Character> {
        if !self.cartan.is_automorphism(perm) {
            return Err(Error::InvalidPermutation {
                label: self.label(),
                perm: perm.to_vec(),
            });
        }
        let mut out = Self::zero(&self.cartan);
        out.terms = self
            .terms
            .iter()
            .map(|(w, c)| (permute(w, perm), c.clone()))
            .collect();
        Ok(out)
    }

    /// Common level of all terms; `None` for the zero character.
    pub fn level(&self) -> Result<Option<i64>> {
        let mut level = None;
        for w in self.terms.keys() {
            let l = self.cartan.level(w);
            match level {
                None => level = Some(l),
                Some(first) if first != l => return Err(Error::MixedLevels { first, second: l }),
                Some(_) => {}
            }
        }
        Ok(level)
    }

    /// Writes `x = e^{k Lambda_0} * (finite part)` and returns `(k, finite part)`.
    pub fn project_to_finite(&self) -> Result<(i64, FiniteCharacter)> {
        self.project_at(0)
    }

    /// Like [`Self::project_to_finite`] with basepoint `k`: the coordinate at
    /// node `k` is dropped.
    pub fn project_at(&self, k: usize) -> Result<(i64, FiniteCharacter)> {
        if !self.cartan.is_affine() {
            return Err(Error::NotAffine {
                label: self.label(),
            });
        }
        let level = self.level()?.unwrap_or(0);
        let mut out = FiniteCharacter::zero(self.cartan.size() - 1);
        for (w, c) in &self.terms {
            out.add_term(drop_coord(w, k), c);
        }
        Ok((level, out))
    }

    pub fn to_json(&self) -> Value {
        let level = self.level().ok().flatten().unwrap_or(0);
        let mut sorted = self.sorted_terms();
        sorted.sort_by(|a, b| a.0.coords()[1..].cmp(&b.0.coords()[1..]));
        let terms: Vec<Value> = sorted
            .into_iter()
            .map(|(w, c)| json!({ "weight": w.coords()[1..], "mult": coeff_json(c) }))
            .collect();
        json!({ "algebra": self.label().to_string(), "level": level, "terms": terms })
    }
}

pub(crate) fn permute(w: &AffineWeight, perm: &[usize]) -> AffineWeight {
    let mut out = AffineWeight::zero(w.len());
    for (i, &p) in perm.iter().enumerate() {
        out[p] = w[i];
    }
    out
}

pub(crate) fn drop_coord(w: &AffineWeight, k: usize) -> FiniteWeight {
    FiniteWeight::new(
        w.coords()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &c)| c),
    )
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.label() == other.label() && self.terms == other.terms
    }
}

impl Eq for Character {}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character[{}]", self.label())?;
        f.debug_map().entries(self.sorted_terms()).finish()
    }
}

/// Element of the group algebra of the finite weight lattice.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteCharacter {
    rank: usize,
    terms: FxHashMap<FiniteWeight, Coeff>,
}

impl FiniteCharacter {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: FxHashMap::default(),
        }
    }

    pub fn unit(rank: usize) -> Self {
        Self::monomial(FiniteWeight::zero(rank))
    }

    pub fn monomial(w: FiniteWeight) -> Self {
        let mut x = Self::zero(w.len());
        x.add_term(w, &Coeff::ONE);
        x
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (FiniteWeight, Coeff)>) -> Self {
        let mut x = Self::zero(rank);
        for (w, c) in terms {
            x.add_term(w, &c);
        }
        x
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &FiniteWeight) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FiniteWeight, &Coeff)> {
        self.terms.iter()
    }

    pub fn sorted_terms(&self) -> Vec<(&FiniteWeight, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, w: FiniteWeight, c: &Coeff) {
        debug_assert_eq!(w.len(), self.rank);
        accumulate(&mut self.terms, w, c);
    }

    pub fn mass(&self) -> Coeff {
        self.terms.values().sum()
    }

    fn check_rank(&self, other: &FiniteCharacter) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &FiniteCharacter) -> Result<FiniteCharacter> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FiniteCharacter) -> Result<FiniteCharacter> {
        self.add(&other.scale(-1))
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, k: &Coeff, other: &FiniteCharacter) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(k * c));
        }
    }

    pub fn scale(&self, k: i64) -> FiniteCharacter {
        let mut out = Self::zero(self.rank);
        if k != 0 {
            out.terms = self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.mul_i64(k)))
                .collect();
        }
        out
    }

    pub fn multiply(&self, other: &FiniteCharacter) -> Result<FiniteCharacter> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1 + w2, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> FiniteCharacter {
        let mut out = Self::unit(self.rank);
        for _ in 0..n {
            out = out.multiply(self).expect("same rank");
        }
        out
    }

    pub fn to_json(&self, algebra: &str, level: i64) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| json!({ "weight": w.coords(), "mult": coeff_json(c) }))
            .collect();
        json!({ "algebra": algebra, "level": level, "terms": terms })
    }
}

impl fmt::Debug for FiniteCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.sorted_terms()).finish()
    }
}

/// One tab-separated row per term: coordinates, then multiplicity.
pub fn terms_tsv<'a>(terms: impl IntoIterator<Item = (&'a [i64], &'a Coeff)>) -> String {
    let mut out = String::new();
    for (w, c) in terms {
        for x in w {
            out.push_str(&x.to_string());
            out.push('\t');
        }
        out.push_str(&c.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a11() -> Arc<CartanData> {
        Arc::new(CartanData::from_label("A1^1").unwrap())
    }

    #[test]
    fn monomials() {
        let cd = a11();
        let x = Character::monomial(&cd, AffineWeight::from([1, 0]));
        assert_eq!(x.len(), 1);
        assert_eq!(x.coeff(&AffineWeight::from([1, 0])), Coeff::ONE);
        let w = &cd.fundamental(0) + &cd.embed_finite(&FiniteWeight::from([2])).unwrap();
        assert_eq!(w, AffineWeight::from([-1, 2]));
    }

    #[test]
    fn a1_square() {
        let x = FiniteCharacter::from_terms(
            1,
            [
                (FiniteWeight::from([1]), Coeff::ONE),
                (FiniteWeight::from([-1]), Coeff::ONE),
            ],
        );
        let sq = x.multiply(&x).unwrap();
        assert_eq!(sq.coeff(&FiniteWeight::from([2])), Coeff::ONE);
        assert_eq!(sq.coeff(&FiniteWeight::from([0])), Coeff::from(2));
        assert_eq!(sq.coeff(&FiniteWeight::from([-2])), Coeff::ONE);
        assert_eq!(sq.len(), 3);
        assert_eq!(x.multiply(&FiniteCharacter::unit(1)).unwrap(), x);
        assert!(x.add(&x.scale(-1)).unwrap().is_empty());
    }

    #[test]
    fn twist_swaps_fundamentals() {
        let cd = a11();
        let x = Character::monomial(&cd, cd.fundamental(0));
        let t = x.twist(&[1, 0]).unwrap();
        assert_eq!(t, Character::monomial(&cd, cd.fundamental(1)));
        assert_eq!(t.twist(&[1, 0]).unwrap(), x);
        assert_eq!(x.twist(&[0, 1]).unwrap(), x);
        assert!(x.twist(&[0, 0]).is_err());
    }

    #[test]
    fn projection() {
        let cd = a11();
        let x = Character::from_terms(
            &cd,
            [
                (AffineWeight::from([-1, 2]), Coeff::ONE),
                (AffineWeight::from([1, 0]), Coeff::from(2)),
                (AffineWeight::from([3, -2]), Coeff::ONE),
            ],
        );
        let (level, fin) = x.project_to_finite().unwrap();
        assert_eq!(level, 1);
        assert_eq!(fin.coeff(&FiniteWeight::from([0])), Coeff::from(2));
        assert_eq!(fin.mass(), Coeff::from(4));
        let mixed = x
            .add(&Character::monomial(&cd, AffineWeight::from([2, 0])))
            .unwrap();
        assert!(matches!(
            mixed.project_to_finite(),
            Err(Error::MixedLevels { .. })
        ));
        let (l3, unit) = Character::monomial(&cd, AffineWeight::from([3, 0]))
            .project_to_finite()
            .unwrap();
        assert_eq!((l3, unit), (3, FiniteCharacter::unit(1)));
    }

    #[test]
    fn json_is_sorted() {
        let cd = a11();
        let x = Character::from_terms(
            &cd,
            [
                (AffineWeight::from([0, 1]), Coeff::ONE),
                (AffineWeight::from([2, -1]), Coeff::ONE),
            ],
        );
        let s = x.to_json().to_string();
        assert_eq!(
            s,
            r#"{"algebra":"A1^1","level":1,"terms":[{"weight":[-1],"mult":1},{"weight":[1],"mult":1}]}"#
        );
    }
}
