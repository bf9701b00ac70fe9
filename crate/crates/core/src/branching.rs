//! Irreducible decompositions of finite-type characters.

use std::sync::Arc;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;
use serde_json::{json, Value};

use crate::charring::FiniteCharacter;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::roots::RootSystem;
use crate::weight::FiniteWeight;

/// Multiset of highest weights.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IrrDecomposition {
    parts: Vec<(FiniteWeight, Coeff)>,
}

impl IrrDecomposition {
    /// Multiplicity-one parts; repeated weights accumulate.
    pub fn from_weights(weights: impl IntoIterator<Item = FiniteWeight>) -> Self {
        Self::from_parts(weights.into_iter().map(|w| (w, Coeff::ONE)))
    }

    pub fn from_parts(parts: impl IntoIterator<Item = (FiniteWeight, Coeff)>) -> Self {
        let mut map: FxHashMap<FiniteWeight, Coeff> = FxHashMap::default();
        for (w, c) in parts {
            *map.entry(w).or_default() += &c;
        }
        let mut parts: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        Self { parts }
    }

    /// Parts sorted by highest weight.
    pub fn parts(&self) -> &[(FiniteWeight, Coeff)] {
        &self.parts
    }

    pub fn multiplicity(&self, w: &FiniteWeight) -> Coeff {
        self.parts
            .iter()
            .find(|(v, _)| v == w)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn count(&self) -> Coeff {
        self.parts.iter().map(|(_, c)| c).sum()
    }

    pub fn dimension(&self, roots: &RootSystem) -> BigInt {
        self.parts
            .iter()
            .map(|(w, c)| roots.weyl_dimension(w) * c.to_bigint())
            .sum()
    }

    /// `sum mult * char V(lambda)`.
    pub fn character(&self, frame: &Arc<Frame>) -> Result<FiniteCharacter> {
        let mut out = FiniteCharacter::zero(frame.rank());
        for (w, c) in &self.parts {
            out.add_scaled(c, &*frame.irreducible(w)?);
        }
        Ok(out)
    }

    pub fn to_json(&self, roots: &RootSystem) -> Value {
        let parts: Vec<Value> = self
            .parts
            .iter()
            .map(|(w, c)| {
                json!({
                    "weight": w.coords(),
                    "mult": c.to_i64().map(Value::from).unwrap_or_else(|| Value::from(c.to_string())),
                    "dim": big_json(&roots.weyl_dimension(w)),
                })
            })
            .collect();
        json!({ "parts": parts })
    }
}

pub(crate) fn big_json(b: &BigInt) -> Value {
    i64::try_from(b)
        .map(Value::from)
        .unwrap_or_else(|_| Value::from(b.to_string()))
}

/// Highest-weight stripping: repeatedly remove the irreducible character of
/// the highest dominant weight in the support.
pub fn decompose(frame: &Arc<Frame>, x: &FiniteCharacter) -> Result<IrrDecomposition> {
    frame.check_finite(&FiniteWeight::zero(x.rank()))?;
    let roots = frame.roots();
    let mut rest = x.clone();
    let mut parts = Vec::new();
    while !rest.is_empty() {
        let top = rest
            .terms()
            .filter(|(w, _)| w.is_dominant())
            .max_by(|a, b| {
                roots
                    .scaled_height(a.0)
                    .cmp(&roots.scaled_height(b.0))
                    .then_with(|| a.0.cmp(b.0))
            })
            .map(|(w, c)| (w.clone(), c.clone()));
        let Some((w, c)) = top else {
            return Err(Error::NotModuleCharacter(format!(
                "{} terms remain but none is dominant",
                rest.len()
            )));
        };
        if c.is_negative() {
            return Err(Error::NotModuleCharacter(format!(
                "highest remaining weight {w} has coefficient {c}"
            )));
        }
        rest.add_scaled(&(-&c), &*frame.irreducible(&w)?);
        parts.push((w, c));
    }
    Ok(IrrDecomposition::from_parts(parts))
}

/// Character of `V(lambda)` by Freudenthal's multiplicity formula, computed
/// without Demazure operators.
pub fn freudenthal_character(roots: &RootSystem, lambda: &FiniteWeight) -> Result<FiniteCharacter> {
    if lambda.len() != roots.rank() {
        return Err(Error::RankMismatch {
            expected: roots.rank(),
            got: lambda.len(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant {
            what: "highest weight",
            coords: lambda.to_vec(),
        });
    }
    let rho = roots.rho();
    let pos: Vec<FiniteWeight> = roots
        .positive_roots()
        .iter()
        .map(|b| roots.root_to_weight(b))
        .collect();
    let lr = lambda + &rho;
    let top = roots.form(&lr, &lr) as i128;

    let dominant = roots.dominant_weights_below(lambda);
    let mut mult: FxHashMap<FiniteWeight, i128> = FxHashMap::default();
    for mu in &dominant {
        if mu == lambda {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num: i128 = 0;
        for a in &pos {
            let mut v = mu + a;
            loop {
                let m = mult
                    .get(&roots.dominant_conjugate(&v))
                    .copied()
                    .unwrap_or(0);
                if m == 0 {
                    break;
                }
                num += m * roots.form(&v, a) as i128;
                v = &v + a;
            }
        }
        let mr = mu + &rho;
        let den = top - roots.form(&mr, &mr) as i128;
        let m = 2 * num / den;
        debug_assert_eq!(2 * num % den, 0);
        mult.insert(mu.clone(), m);
    }

    let mut out = FiniteCharacter::zero(roots.rank());
    for mu in &dominant {
        let m = mult[mu];
        if m == 0 {
            continue;
        }
        let c = Coeff::from(BigInt::from(m));
        for w in roots.orbit(mu) {
            out.add_term(w, &c);
        }
    }
    Ok(out)
}

/// `-w_0(lambda)`.
pub fn dual_weight(roots: &RootSystem, lambda: &FiniteWeight) -> FiniteWeight {
    roots.dual(lambda)
}

pub fn weyl_dimension(roots: &RootSystem, lambda: &FiniteWeight) -> BigInt {
    roots.weyl_dimension(lambda)
}
