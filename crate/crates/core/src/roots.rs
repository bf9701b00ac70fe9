//! Root data of a finite-type Cartan matrix.
//!
//! Positive roots are produced by the usual root-string recursion, so the
//! same code serves every finite subdiagram of an affine diagram (the finite
//! part at a basepoint, the subdiagram left after deleting a vertex, a
//! parabolic subsystem).

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weight::FiniteWeight;

type Q = Ratio<i64>;

/// More positive roots than this means the matrix is not of finite type.
const ROOT_LIMIT: usize = 20_000;

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: Vec<Vec<i64>>,
    half_norms: Vec<i64>,
    positive: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    /// `gram[i][j] = scale * (omega_i, omega_j)`
    gram: Vec<Vec<i64>>,
    /// `height[i] = scale * height(omega_i)` in the simple-root basis.
    height: Vec<i64>,
}

impl RootSystem {
    /// Builds the root system of a finite-type Cartan matrix `a[i][j] =
    /// <alpha_i^vee, alpha_j>`.
    pub fn new(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let r = cartan.len();
        if cartan.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidArgument("Cartan matrix is not square".into()));
        }
        let half_norms = symmetrizer(&cartan)?;
        let positive = positive_roots(&cartan)?;
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, b)| (b.clone(), i))
            .collect();

        let mut coroots = Vec::with_capacity(positive.len());
        for beta in &positive {
            // (beta, beta)/2 = 1/2 sum_ij beta_i beta_j d_i a_ij
            let mut twice: i64 = 0;
            for i in 0..r {
                for j in 0..r {
                    twice += beta[i] * beta[j] * half_norms[i] * cartan[i][j];
                }
            }
            let d_beta = twice / 2;
            let coroot: Vec<i64> = (0..r)
                .map(|j| {
                    let num = beta[j] * half_norms[j];
                    debug_assert_eq!(num % d_beta, 0);
                    num / d_beta
                })
                .collect();
            coroots.push(coroot);
        }

        let inv = inverse(&cartan)?;
        let mut denom = 1i64;
        for row in &inv {
            for q in row {
                denom = denom.lcm(q.denom());
            }
        }
        let scaled = |q: &Q| (q * denom).to_integer();
        let gram = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| scaled(&(inv[j][i] * half_norms[j])))
                    .collect()
            })
            .collect();
        let height = (0..r)
            .map(|i| (0..r).map(|k| scaled(&inv[k][i])).sum())
            .collect();

        Ok(Self {
            cartan,
            half_norms,
            positive,
            coroots,
            index,
            gram,
            height,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `d_i = (alpha_i, alpha_i)/2` up to a common factor per component.
    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    /// Positive roots in the simple-root basis, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Coroot of the `k`-th positive root in the simple-coroot basis.
    pub fn coroot(&self, k: usize) -> &[i64] {
        &self.coroots[k]
    }

    pub fn is_positive_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Highest root; for a reducible system, the last root of maximal height.
    pub fn highest_root(&self) -> &[i64] {
        self.positive.last().expect("nonempty root system")
    }

    /// `alpha_j` expressed in fundamental-weight coordinates.
    pub fn simple_root_weight(&self, j: usize) -> FiniteWeight {
        FiniteWeight::new((0..self.rank()).map(|i| self.cartan[i][j]))
    }

    /// A root given in the simple-root basis, rewritten in fundamental-weight
    /// coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> FiniteWeight {
        FiniteWeight::new(
            (0..self.rank()).map(|i| (0..self.rank()).map(|j| self.cartan[i][j] * root[j]).sum()),
        )
    }

    /// `<lambda, beta^vee>` for the `k`-th positive root.
    pub fn pair_coroot(&self, lambda: &FiniteWeight, k: usize) -> i64 {
        self.coroots[k]
            .iter()
            .zip(lambda.coords())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn rho(&self) -> FiniteWeight {
        FiniteWeight::new(std::iter::repeat_n(1, self.rank()))
    }

    /// `s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, lambda: &FiniteWeight, i: usize) -> FiniteWeight {
        let c = lambda[i];
        if c == 0 {
            return lambda.clone();
        }
        FiniteWeight::new((0..self.rank()).map(|j| lambda[j] - c * self.cartan[j][i]))
    }

    /// The dominant element of the Weyl orbit of `lambda`.
    pub fn dominant_conjugate(&self, lambda: &FiniteWeight) -> FiniteWeight {
        let mut w = lambda.clone();
        while let Some(i) = w.coords().iter().position(|&c| c < 0) {
            w = self.reflect(&w, i);
        }
        w
    }

    /// Weyl orbit of a weight, sorted.
    pub fn orbit(&self, lambda: &FiniteWeight) -> Vec<FiniteWeight> {
        let start = self.dominant_conjugate(lambda);
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                if w[i] > 0 {
                    let v = self.reflect(&w, i);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// `-w_0(lambda)`, the highest weight of the dual representation.
    pub fn dual(&self, lambda: &FiniteWeight) -> FiniteWeight {
        self.dominant_conjugate(&-lambda)
    }

    /// Scaled invariant form on weights; the scale is common to all pairs.
    pub fn form(&self, a: &FiniteWeight, b: &FiniteWeight) -> i64 {
        let mut s = 0;
        for i in 0..self.rank() {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank() {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// Scaled height in the simple-root basis (exact: the scale clears all
    /// denominators of the inverse Cartan matrix).
    pub fn scaled_height(&self, lambda: &FiniteWeight) -> i64 {
        self.height
            .iter()
            .zip(lambda.coords())
            .map(|(h, c)| h * c)
            .sum()
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &FiniteWeight) -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let shifted = &self.rho() + lambda;
        for k in 0..self.positive.len() {
            num *= self.pair_coroot(&shifted, k);
            den *= self.coroots[k].iter().sum::<i64>();
        }
        debug_assert!((&num % &den).is_zero());
        num / den
    }

    /// Dominant weights `mu` with `lambda - mu` in the positive root cone,
    /// i.e. the dominant weights of `V(lambda)`.
    pub fn dominant_weights_below(&self, lambda: &FiniteWeight) -> Vec<FiniteWeight> {
        let roots: Vec<FiniteWeight> = self
            .positive
            .iter()
            .map(|b| self.root_to_weight(b))
            .collect();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(w) = queue.pop_front() {
            for b in &roots {
                let v = &w - b;
                if v.is_dominant() && seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by_key(|w| std::cmp::Reverse(self.scaled_height(w)));
        out
    }
}

/// Minimal positive integers `d_i` with `d_i a_ij = d_j a_ji`.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let r = a.len();
    let mut d: Vec<Option<Q>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Q::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..r {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                if a[j][i] == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "Cartan matrix has a[{i}][{j}] != 0 but a[{j}][{i}] == 0"
                    )));
                }
                let dj = di * Q::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(old) if old != dj => {
                        return Err(Error::InvalidArgument(
                            "Cartan matrix is not symmetrizable".into(),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(Option::unwrap).collect();
    let denom = d.iter().fold(1i64, |acc, q| acc.lcm(q.denom()));
    let ints: Vec<i64> = d.iter().map(|q| (q * denom).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    Ok(ints.into_iter().map(|x| x / g).collect())
}

fn positive_roots(a: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let r = a.len();
    let mut roots: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut k = 0;
    // roots are appended in nondecreasing height, so every root of lower
    // height is known when beta is processed
    while k < roots.len() {
        let beta = roots[k].clone();
        k += 1;
        for i in 0..r {
            let pairing: i64 = (0..r).map(|j| a[i][j] * beta[j]).sum();
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if down[i] < 0 || !known.contains(&down) {
                    break;
                }
                p += 1;
            }
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if known.insert(up.clone()) {
                    roots.push(up);
                }
            }
        }
        if roots.len() > ROOT_LIMIT {
            return Err(Error::InvalidArgument(
                "Cartan matrix is not of finite type".into(),
            ));
        }
    }
    roots.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
    Ok(roots)
}

fn inverse(a: &[Vec<i64>]) -> Result<Vec<Vec<Q>>> {
    let r = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            v.extend((0..r).map(|j| if i == j { Q::one() } else { Q::zero() }));
            v
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r)
            .find(|&i| !m[i][col].is_zero())
            .ok_or_else(|| Error::InvalidArgument("Cartan matrix is singular".into()))?;
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for i in 0..r {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    let out = m
        .into_iter()
        .map(|row| row[r..].to_vec())
        .collect::<Vec<_>>();
    debug_assert!(out.iter().flatten().all(|q| q.denom().is_positive()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> RootSystem {
        RootSystem::new(vec![vec![2, -2], vec![-1, 2]]).unwrap()
    }

    #[test]
    fn rank_two_root_counts() {
        assert_eq!(
            RootSystem::new(vec![vec![2, -1], vec![-1, 2]])
                .unwrap()
                .positive_roots()
                .len(),
            3
        );
        assert_eq!(c2().positive_roots().len(), 4);
        let g2 = RootSystem::new(vec![vec![2, -3], vec![-1, 2]]).unwrap();
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.highest_root(), &[3, 2]);
    }

    #[test]
    fn c2_highest_root_and_coroot() {
        let rs = c2();
        // alpha_1 short, alpha_2 long: theta = 2 alpha_1 + alpha_2
        assert_eq!(rs.highest_root(), &[2, 1]);
        let k = rs.root_index(&[2, 1]).unwrap();
        // theta^vee = alpha_1^vee + alpha_2^vee
        assert_eq!(rs.coroot(k), &[1, 1]);
        assert_eq!(rs.half_norms(), &[1, 2]);
    }

    #[test]
    fn affine_matrix_is_rejected() {
        assert!(RootSystem::new(vec![vec![2, -2], vec![-2, 2]]).is_err());
    }

    #[test]
    fn form_is_symmetric_and_invariant() {
        let rs = c2();
        let a = FiniteWeight::from([1, 2]);
        let b = FiniteWeight::from([3, -1]);
        assert_eq!(rs.form(&a, &b), rs.form(&b, &a));
        for i in 0..2 {
            assert_eq!(
                rs.form(&rs.reflect(&a, i), &rs.reflect(&b, i)),
                rs.form(&a, &b)
            );
        }
    }

    #[test]
    fn weyl_dimensions_c2() {
        let rs = c2();
        assert_eq!(
            rs.weyl_dimension(&FiniteWeight::from([0, 1])),
            BigInt::from(5)
        );
        assert_eq!(
            rs.weyl_dimension(&FiniteWeight::from([1, 0])),
            BigInt::from(4)
        );
        assert_eq!(
            rs.weyl_dimension(&FiniteWeight::from([2, 0])),
            BigInt::from(10)
        );
    }

    #[test]
    fn orbit_sizes() {
        let rs = c2();
        assert_eq!(rs.orbit(&FiniteWeight::from([1, 0])).len(), 4);
        assert_eq!(rs.orbit(&FiniteWeight::from([1, 1])).len(), 8);
        assert_eq!(rs.orbit(&FiniteWeight::from([0, 0])).len(), 1);
    }
}
