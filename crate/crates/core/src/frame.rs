//! An affine Cartan datum seen from a basepoint vertex `k`.
//!
//! Deleting `k` leaves a finite diagram; finite weights are read in the
//! coordinates of the remaining nodes (ascending node order) and lifted back
//! to affine weights at a chosen level. For untwisted data the basepoint is 0
//! and the finite part is numbered as in Bourbaki.

use std::sync::{Arc, RwLock};

use rustc_hash::FxHashMap;

use crate::cartan::{submatrix, AlgebraLabel, CartanData};
use crate::charring::FiniteCharacter;
use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::weight::{AffineWeight, FiniteWeight};

pub struct Frame {
    cartan: Arc<CartanData>,
    base: usize,
    nodes: Vec<usize>,
    roots: RootSystem,
    nu_ratios: Vec<i64>,
    theta_weight: FiniteWeight,
    lattice: Vec<Vec<i64>>,
    irreducibles: RwLock<FxHashMap<FiniteWeight, Arc<FiniteCharacter>>>,
}

impl std::fmt::Debug for Frame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Frame({}, base {})", self.cartan.label(), self.base)
    }
}

impl Frame {
    /// Frame at a special vertex of an affine datum.
    pub fn new(cartan: Arc<CartanData>, base: usize) -> Result<Arc<Self>> {
        let label = cartan.label();
        if !cartan.is_special_vertex(base)? || cartan.comarks()[base] != 1 {
            return Err(Error::NotSpecial {
                label,
                vertex: base,
            });
        }
        let nodes: Vec<usize> = (0..cartan.size()).filter(|&i| i != base).collect();
        let roots = RootSystem::new(submatrix(cartan.gcm(), &nodes))?;
        let nu_ratios = nodes
            .iter()
            .map(|&i| {
                if label.is_twisted() {
                    1
                } else {
                    cartan.marks()[i] / cartan.comarks()[i]
                }
            })
            .collect();

        // nu(theta_k^vee) = theta_k / (a_k a_k^vee) with theta_k = delta - a_k alpha_k
        let theta: Vec<i64> = nodes.iter().map(|&i| cartan.marks()[i]).collect();
        let scale = cartan.marks()[base] * cartan.comarks()[base];
        let tw = roots.root_to_weight(&theta);
        if tw.coords().iter().any(|c| c % scale != 0) {
            return Err(Error::Internal(format!(
                "{label}: nu(theta_{base}^vee) is not integral"
            )));
        }
        let theta_weight = FiniteWeight::new(tw.coords().iter().map(|c| c / scale));
        let orbit: Vec<Vec<i64>> = roots
            .orbit(&theta_weight)
            .iter()
            .map(|w| w.to_vec())
            .collect();
        let lattice = echelon(orbit, nodes.len());

        Ok(Arc::new(Self {
            cartan,
            base,
            nodes,
            roots,
            nu_ratios,
            theta_weight,
            lattice,
            irreducibles: RwLock::new(FxHashMap::default()),
        }))
    }

    /// Basepoint-0 frame of a label; finite labels are affinized first.
    pub fn standard(label: AlgebraLabel) -> Result<Arc<Self>> {
        Self::new(Arc::new(CartanData::build(label.affinized())?), 0)
    }

    pub fn parse(label: &str) -> Result<Arc<Self>> {
        Self::standard(label.parse()?)
    }

    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    pub fn label(&self) -> AlgebraLabel {
        self.cartan.label()
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Affine node ids of the finite part, in finite coordinate order.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Position of an affine node in the finite coordinates.
    pub fn finite_index(&self, node: usize) -> Option<usize> {
        self.nodes.iter().position(|&n| n == node)
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn nu_ratios(&self) -> &[i64] {
        &self.nu_ratios
    }

    pub fn check_finite(&self, w: &FiniteWeight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.len(),
            });
        }
        Ok(())
    }

    /// Level-zero affine weight with finite part `lambda`.
    pub fn embed(&self, lambda: &FiniteWeight) -> AffineWeight {
        self.lift(lambda, 0)
    }

    /// `lambda + level * Lambda_k`.
    pub fn lift(&self, lambda: &FiniteWeight, level: i64) -> AffineWeight {
        debug_assert_eq!(lambda.len(), self.rank());
        let mut w = AffineWeight::zero(self.cartan.size());
        let mut c = level;
        for (j, &node) in self.nodes.iter().enumerate() {
            w[node] = lambda[j];
            c -= self.cartan.comarks()[node] * lambda[j];
        }
        w[self.base] = c;
        w
    }

    /// Drops the basepoint coordinate.
    pub fn project(&self, w: &AffineWeight) -> FiniteWeight {
        FiniteWeight::new(self.nodes.iter().map(|&i| w[i]))
    }

    /// `nu` on a coweight in fundamental-coweight coordinates. Twisted data
    /// use the identity, so their translations are given directly as weights.
    pub fn nu(&self, coweight: &FiniteWeight) -> Result<FiniteWeight> {
        self.check_finite(coweight)?;
        Ok(FiniteWeight::new(
            coweight
                .coords()
                .iter()
                .zip(&self.nu_ratios)
                .map(|(c, r)| c * r),
        ))
    }

    /// `nu(theta_k^vee)`; for untwisted data this is the highest root.
    pub fn theta_weight(&self) -> &FiniteWeight {
        &self.theta_weight
    }

    /// The coweight `theta_k^vee` in fundamental-coweight coordinates.
    pub fn theta_coweight(&self) -> FiniteWeight {
        let theta: Vec<i64> = self.nodes.iter().map(|&i| self.cartan.marks()[i]).collect();
        let k = self.roots.root_index(&theta).expect("special vertex");
        // <alpha_j, theta^vee> = sum_i coroot_i a_ij
        let coroot = self.roots.coroot(k);
        FiniteWeight::new((0..self.rank()).map(|j| {
            (0..self.rank())
                .map(|i| coroot[i] * self.roots.cartan()[i][j])
                .sum()
        }))
    }

    /// Membership in the lattice spanned by the Weyl orbit of `nu(theta_k^vee)`.
    pub fn in_lattice(&self, w: &FiniteWeight) -> bool {
        let mut v = w.to_vec();
        for row in &self.lattice {
            let c = row.iter().position(|&x| x != 0).expect("nonzero basis row");
            if v[c] % row[c] != 0 {
                return false;
            }
            let q = v[c] / row[c];
            for (x, y) in v.iter_mut().zip(row) {
                *x -= q * y;
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Memoized character of the irreducible finite-type module `V(lambda)`.
    pub fn irreducible(self: &Arc<Self>, lambda: &FiniteWeight) -> Result<Arc<FiniteCharacter>> {
        self.check_finite(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant {
                what: "highest weight",
                coords: lambda.to_vec(),
            });
        }
        if let Some(c) = self.irreducibles.read().expect("poisoned").get(lambda) {
            return Ok(Arc::clone(c));
        }
        let computed = Arc::new(crate::demazure::weyl_character_uncached(self, lambda)?);
        let mut cache = self.irreducibles.write().expect("poisoned");
        Ok(Arc::clone(cache.entry(lambda.clone()).or_insert(computed)))
    }
}

/// Integer row echelon form of the lattice spanned by `rows`.
fn echelon(mut rows: Vec<Vec<i64>>, n: usize) -> Vec<Vec<i64>> {
    let mut basis = Vec::new();
    for col in 0..n {
        loop {
            let mut live: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            if live.len() <= 1 {
                if let Some(&r) = live.first() {
                    basis.push(rows.swap_remove(r));
                }
                break;
            }
            live.sort_by_key(|&r| rows[r][col].abs());
            let p = live[0];
            let pivot = rows[p].clone();
            for &r in &live[1..] {
                let q = rows[r][col] / pivot[col];
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x -= q * y;
                }
            }
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
    }
    basis
}
