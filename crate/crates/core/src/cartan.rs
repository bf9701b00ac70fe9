//! Finite and affine Cartan data.
//!
//! Conventions: `gcm[i][j] = <alpha_i^vee, alpha_j>`, finite nodes numbered as
//! in Bourbaki, affine node 0 first. Twisted diagrams follow Kac's tables,
//! whose numbering of the finite part does not always agree with Bourbaki
//! (for `E6^2` the `F4` part is numbered from the short end).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::weight::{AffineWeight, FiniteWeight};

/// `X_n` (twist 0), `X_n^(1)` or twisted `X_n^(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraLabel {
    family: char,
    rank: usize,
    twist: u8,
}

impl AlgebraLabel {
    pub fn new(family: char, rank: usize, twist: u8) -> Result<Self> {
        let illegal = |reason: &str| Error::IllegalLabel {
            family,
            rank,
            twist,
            reason: reason.to_string(),
        };
        let ok = match twist {
            0 | 1 => match family {
                'A' => rank >= 1,
                'B' | 'C' => rank >= 2,
                'D' => rank >= 4,
                'E' => (6..=8).contains(&rank),
                'F' => rank == 4,
                'G' => rank == 2,
                _ => return Err(illegal("family must be one of A-G")),
            },
            2 => match family {
                'A' => rank >= 2,
                'D' => rank >= 3,
                'E' => rank == 6,
                _ => return Err(illegal("twist 2 exists only for A, D and E6")),
            },
            3 => family == 'D' && rank == 4,
            _ => return Err(illegal("twist must be 0, 1, 2 or 3")),
        };
        if !ok {
            return Err(illegal("no such Dynkin diagram"));
        }
        Ok(Self {
            family,
            rank,
            twist,
        })
    }

    pub fn family(&self) -> char {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn twist(&self) -> u8 {
        self.twist
    }

    pub fn is_affine(&self) -> bool {
        self.twist > 0
    }

    pub fn is_twisted(&self) -> bool {
        self.twist > 1
    }

    /// The untwisted affinization of a finite label; affine labels are
    /// returned unchanged.
    pub fn affinized(&self) -> Self {
        if self.twist == 0 {
            Self { twist: 1, ..*self }
        } else {
            *self
        }
    }

    /// The finite label of the same family and rank.
    pub fn finite(&self) -> Option<Self> {
        (self.twist <= 1).then_some(Self { twist: 0, ..*self })
    }

    /// Number of nodes of the Dynkin diagram.
    pub fn node_count(&self) -> usize {
        match (self.twist, self.family) {
            (0, _) => self.rank,
            (1, _) => self.rank + 1,
            (2, 'A') => self.rank / 2 + if self.rank.is_multiple_of(2) { 1 } else { 2 },
            (2, 'D') => self.rank,
            (2, 'E') => 5,
            (3, _) => 3,
            _ => unreachable!("validated label"),
        }
    }
}

impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)?;
        if self.twist > 0 {
            write!(f, "^{}", self.twist)?;
        }
        Ok(())
    }
}

impl FromStr for AlgebraLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syntax = |column: usize, reason: &str| Error::LabelSyntax {
            input: s.to_string(),
            column,
            reason: reason.to_string(),
        };
        let bytes = s.as_bytes();
        let family = match bytes.first() {
            None => return Err(syntax(1, "empty label")),
            Some(b) if b.is_ascii_alphabetic() => b.to_ascii_uppercase() as char,
            Some(_) => return Err(syntax(1, "expected a family letter A-G")),
        };
        if !('A'..='G').contains(&family) {
            return Err(syntax(1, "expected a family letter A-G"));
        }
        let digits = |from: usize| {
            bytes[from..]
                .iter()
                .take_while(|b| b.is_ascii_digit())
                .count()
        };
        let nrank = digits(1);
        if nrank == 0 {
            return Err(syntax(2, "expected a rank"));
        }
        let rank: usize = s[1..1 + nrank]
            .parse()
            .map_err(|_| syntax(2, "rank out of range"))?;
        let mut pos = 1 + nrank;
        let mut twist = 0u8;
        if pos < bytes.len() {
            if bytes[pos] != b'^' {
                return Err(syntax(pos + 1, "expected `^` or end of label"));
            }
            pos += 1;
            let ntwist = digits(pos);
            if ntwist == 0 {
                return Err(syntax(pos + 1, "expected a twist after `^`"));
            }
            twist = s[pos..pos + ntwist]
                .parse()
                .map_err(|_| syntax(pos + 1, "twist out of range"))?;
            pos += ntwist;
            if pos < bytes.len() {
                return Err(syntax(pos + 1, "unexpected trailing characters"));
            }
        }
        if rank == 0 {
            return Err(syntax(2, "rank must be positive"));
        }
        AlgebraLabel::new(family, rank, twist)
    }
}

/// Finite Cartan matrix in Bourbaki numbering (indices shifted down by one).
pub fn finite_cartan(family: char, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match family {
        'A' => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
        'B' => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 1, n, -1, -2);
        }
        'C' => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 1, n, -2, -1);
        }
        'D' => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n, -1, -1);
        }
        'E' => {
            link(1, 3, -1, -1);
            link(2, 4, -1, -1);
            (3..n).for_each(|i| link(i, i + 1, -1, -1));
        }
        'F' => {
            link(1, 2, -1, -1);
            link(2, 3, -1, -2);
            link(3, 4, -1, -1);
        }
        'G' => link(1, 2, -3, -1),
        _ => unreachable!("validated family"),
    }
    a
}

fn twisted_cartan(label: &AlgebraLabel) -> Vec<Vec<i64>> {
    let embed = |fin: Vec<Vec<i64>>| {
        let n = fin.len() + 1;
        let mut a = vec![vec![0i64; n]; n];
        a[0][0] = 2;
        for i in 1..n {
            for j in 1..n {
                a[i][j] = fin[i - 1][j - 1];
            }
        }
        a
    };
    match (label.family, label.rank, label.twist) {
        ('A', 2, 2) => vec![vec![2, -4], vec![-1, 2]],
        ('A', r, 2) if r % 2 == 0 => {
            let mut a = embed(finite_cartan('C', r / 2));
            a[0][1] = -2;
            a[1][0] = -1;
            a
        }
        ('A', r, 2) => {
            let l = r.div_ceil(2);
            let mut a = embed(finite_cartan('C', l));
            for j in 2..=l {
                a[0][j] = a[1][j];
                a[j][0] = a[j][1];
            }
            a
        }
        ('D', r, 2) => {
            let mut a = embed(finite_cartan('B', r - 1));
            a[0][1] = -2;
            a[1][0] = -1;
            a
        }
        ('E', 6, 2) => {
            let mut a = vec![vec![0i64; 5]; 5];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = 2;
            }
            for (i, j) in [(0, 1), (1, 2), (3, 4)] {
                a[i][j] = -1;
                a[j][i] = -1;
            }
            a[2][3] = -2;
            a[3][2] = -1;
            a
        }
        ('D', 4, 3) => vec![vec![2, -1, 0], vec![-1, 2, -3], vec![0, -1, 2]],
        _ => unreachable!("validated twisted label"),
    }
}

/// Primitive positive integer generator of the kernel of a corank-one
/// matrix.
fn null_vector(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    type Q = Ratio<i64>;
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .map(|row| row.iter().map(|&x| Q::from_integer(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pv = m[row][col];
        for x in m[row].iter_mut() {
            *x /= pv;
        }
        for i in 0..n {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col];
                let r = m[row].clone();
                for (x, y) in m[i].iter_mut().zip(r) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Err(Error::Internal(format!("matrix has corank {}", free.len())));
    }
    let f = free[0];
    let mut v = vec![Q::zero(); n];
    v[f] = Q::one();
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = -m[r][f];
    }
    let denom = v.iter().fold(1i64, |acc, q| acc.lcm(q.denom()));
    let mut ints: Vec<i64> = v.iter().map(|q| (q * denom).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    ints.iter_mut().for_each(|x| *x /= g);
    if ints.iter().any(|x| x.is_negative()) {
        ints.iter_mut().for_each(|x| *x = -*x);
    }
    if ints.iter().any(|&x| x <= 0) {
        return Err(Error::Internal("null vector is not positive".into()));
    }
    Ok(ints)
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    (0..a.len())
        .map(|i| (0..a.len()).map(|j| a[j][i]).collect())
        .collect()
}

/// Rows and columns of `a` indexed by `nodes`.
pub(crate) fn submatrix(a: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<i64>> {
    nodes
        .iter()
        .map(|&i| nodes.iter().map(|&j| a[i][j]).collect())
        .collect()
}

/// Complete numerical datum of one Cartan matrix.
///
/// For affine labels `marks`, `comarks` and `dual_marks` have `n + 1`
/// entries and the finite data refer to the diagram with node 0 removed. For
/// finite labels they have `n` entries and hold the coordinates of the highest
/// root, its coroot and the highest coroot.
#[derive(Debug, Clone)]
pub struct CartanData {
    label: AlgebraLabel,
    gcm: Vec<Vec<i64>>,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    dual_marks: Vec<i64>,
    nu_ratios: Vec<i64>,
    theta_root_coords: Vec<i64>,
    theta_covector: Vec<i64>,
    finite: RootSystem,
}

impl CartanData {
    pub fn build(label: AlgebraLabel) -> Result<Self> {
        let gcm = match label.twist {
            0 => finite_cartan(label.family, label.rank),
            1 => {
                let fin = finite_cartan(label.family, label.rank);
                let rs = RootSystem::new(fin.clone())?;
                let theta = rs.highest_root().to_vec();
                let k = rs.root_index(&theta).expect("highest root is a root");
                let theta_co = rs.coroot(k).to_vec();
                let n = label.rank + 1;
                let mut a = vec![vec![0i64; n]; n];
                a[0][0] = 2;
                for i in 1..n {
                    for j in 1..n {
                        a[i][j] = fin[i - 1][j - 1];
                    }
                }
                for j in 1..n {
                    a[0][j] = -(1..n)
                        .map(|i| theta_co[i - 1] * fin[i - 1][j - 1])
                        .sum::<i64>();
                    a[j][0] = -(1..n)
                        .map(|i| fin[j - 1][i - 1] * theta[i - 1])
                        .sum::<i64>();
                }
                a
            }
            _ => twisted_cartan(&label),
        };

        let n = gcm.len();
        let finite_nodes: Vec<usize> = if label.is_affine() {
            (1..n).collect()
        } else {
            (0..n).collect()
        };
        let fin = submatrix(&gcm, &finite_nodes);
        let finite = RootSystem::new(fin.clone())?;
        let dual = RootSystem::new(transpose(&fin))?;

        let (marks, comarks, dual_marks, theta_root_coords) = if label.is_affine() {
            let marks = null_vector(&gcm)?;
            let comarks = null_vector(&transpose(&gcm))?;
            let mut dual_marks = vec![1];
            dual_marks.extend_from_slice(dual.highest_root());
            let theta = marks[1..].to_vec();
            (marks, comarks, dual_marks, theta)
        } else {
            let theta = finite.highest_root().to_vec();
            let k = finite.root_index(&theta).unwrap();
            let coroot = finite.coroot(k).to_vec();
            (theta.clone(), coroot, dual.highest_root().to_vec(), theta)
        };

        let theta_index = finite.root_index(&theta_root_coords).ok_or_else(|| {
            Error::Internal(format!(
                "{label}: delta - a_0 alpha_0 is not a root of the finite part"
            ))
        })?;
        let theta_covector = finite.coroot(theta_index).to_vec();

        let nu_ratios = if label.is_twisted() {
            vec![1; finite.rank()]
        } else {
            let off = usize::from(label.is_affine());
            (0..finite.rank())
                .map(|i| {
                    let (a, c) = (marks[i + off], comarks[i + off]);
                    debug_assert_eq!(a % c, 0);
                    a / c
                })
                .collect()
        };

        let cd = Self {
            label,
            gcm,
            marks,
            comarks,
            dual_marks,
            nu_ratios,
            theta_root_coords,
            theta_covector,
            finite,
        };
        cd.check_invariants()?;
        Ok(cd)
    }

    /// Parses a label and builds its data.
    pub fn from_label(s: &str) -> Result<Self> {
        Self::build(s.parse()?)
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.gcm.len();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (self.gcm[i][j], self.gcm[j][i]);
                let bad = if i == j {
                    a != 2
                } else {
                    a > 0 || (a == 0) != (b == 0)
                };
                if bad {
                    return Err(Error::Internal(format!("{}: malformed gcm", self.label)));
                }
            }
        }
        if self.label.is_affine() {
            let null = (0..n)
                .all(|i| (0..n).map(|j| self.gcm[i][j] * self.marks[j]).sum::<i64>() == 0)
                && (0..n).all(|j| {
                    (0..n)
                        .map(|i| self.comarks[i] * self.gcm[i][j])
                        .sum::<i64>()
                        == 0
                });
            if !null || self.comarks[0] != 1 {
                return Err(Error::Internal(format!(
                    "{}: marks are not null vectors",
                    self.label
                )));
            }
            if !self.label.is_twisted() && self.marks[0] != 1 {
                return Err(Error::Internal(format!("{}: a_0 != 1", self.label)));
            }
        }
        Ok(())
    }

    pub fn label(&self) -> AlgebraLabel {
        self.label
    }

    pub fn is_affine(&self) -> bool {
        self.label.is_affine()
    }

    /// Number of nodes, `n + 1` for affine data.
    pub fn size(&self) -> usize {
        self.gcm.len()
    }

    pub fn gcm(&self) -> &[Vec<i64>] {
        &self.gcm
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn dual_marks(&self) -> &[i64] {
        &self.dual_marks
    }

    pub fn nu_ratios(&self) -> &[i64] {
        &self.nu_ratios
    }

    /// `delta - a_0 alpha_0` in simple-root coordinates of the finite part
    /// (the highest root for untwisted and finite data).
    pub fn theta_root_coords(&self) -> &[i64] {
        &self.theta_root_coords
    }

    /// Coroot of [`Self::theta_root_coords`] in simple-coroot coordinates, so
    /// that `<lambda, theta^vee> = sum_i theta_covector[i] * lambda_i`.
    pub fn theta_covector(&self) -> &[i64] {
        &self.theta_covector
    }

    /// `delta = sum a_i alpha_i`; empty for finite data.
    pub fn delta_coords(&self) -> &[i64] {
        if self.is_affine() {
            &self.marks
        } else {
            &[]
        }
    }

    /// Root system of the finite part (node 0 removed for affine data).
    pub fn finite_roots(&self) -> &RootSystem {
        &self.finite
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i >= self.size() {
            return Err(Error::NodeOutOfRange {
                label: self.label,
                index: i,
                max: self.size() - 1,
            });
        }
        Ok(())
    }

    fn check_len(&self, w: &AffineWeight) -> Result<()> {
        if w.len() != self.size() {
            return Err(Error::RankMismatch {
                expected: self.size(),
                got: w.len(),
            });
        }
        Ok(())
    }

    /// `<Lambda, alpha_i^vee>`.
    pub fn pairing(&self, w: &AffineWeight, i: usize) -> Result<i64> {
        self.check_len(w)?;
        self.check_node(i)?;
        Ok(w[i])
    }

    /// `<Lambda, K> = sum a_i^vee c_i`.
    pub fn level(&self, w: &AffineWeight) -> i64 {
        self.comarks
            .iter()
            .zip(w.coords())
            .map(|(a, c)| a * c)
            .sum()
    }

    /// `alpha_i` as a weight mod `delta`: column `i` of the gcm.
    pub fn simple_root(&self, i: usize) -> AffineWeight {
        AffineWeight::new(self.gcm.iter().map(|row| row[i]))
    }

    /// Fundamental weight `Lambda_i`.
    pub fn fundamental(&self, i: usize) -> AffineWeight {
        AffineWeight::unit(self.size(), i)
    }

    /// The weight with all pairings equal to one.
    pub fn rho_hat(&self) -> AffineWeight {
        AffineWeight::new(std::iter::repeat_n(1, self.size()))
    }

    /// `s_i(Lambda) = Lambda - c_i alpha_i`.
    pub fn reflect(&self, w: &AffineWeight, i: usize) -> AffineWeight {
        let c = w[i];
        if c == 0 {
            return w.clone();
        }
        AffineWeight::new((0..self.size()).map(|j| w[j] - c * self.gcm[j][i]))
    }

    /// Level-zero weight whose pairings with `alpha_1^vee..alpha_n^vee` are
    /// the coordinates of `lambda`.
    pub fn embed_finite(&self, lambda: &FiniteWeight) -> Result<AffineWeight> {
        if !self.is_affine() {
            return Err(Error::NotAffine { label: self.label });
        }
        if lambda.len() + 1 != self.size() {
            return Err(Error::RankMismatch {
                expected: self.size() - 1,
                got: lambda.len(),
            });
        }
        let c0: i64 = -(1..self.size())
            .map(|i| self.comarks[i] * lambda[i - 1])
            .sum::<i64>();
        Ok(AffineWeight::new(
            std::iter::once(c0).chain(lambda.coords().iter().copied()),
        ))
    }

    /// `nu` on a coweight given in fundamental-coweight coordinates.
    pub fn nu(&self, coweight: &FiniteWeight) -> Result<FiniteWeight> {
        if coweight.len() != self.nu_ratios.len() {
            return Err(Error::RankMismatch {
                expected: self.nu_ratios.len(),
                got: coweight.len(),
            });
        }
        Ok(FiniteWeight::new(
            coweight
                .coords()
                .iter()
                .zip(&self.nu_ratios)
                .map(|(c, r)| c * r),
        ))
    }

    /// `delta - a_k alpha_k` is a positive root of the diagram with `k`
    /// deleted.
    pub fn is_special_vertex(&self, k: usize) -> Result<bool> {
        if !self.is_affine() {
            return Err(Error::NotAffine { label: self.label });
        }
        self.check_node(k)?;
        let nodes: Vec<usize> = (0..self.size()).filter(|&i| i != k).collect();
        let rs = RootSystem::new(submatrix(&self.gcm, &nodes))?;
        let coords: Vec<i64> = nodes.iter().map(|&i| self.marks[i]).collect();
        Ok(rs.is_positive_root(&coords))
    }

    /// Nodes `k` for which [`Self::is_special_vertex`] holds.
    pub fn special_vertices(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&k| self.is_special_vertex(k).unwrap_or(false))
            .collect()
    }

    /// Whether `perm` (node `i` maps to `perm[i]`) preserves the gcm.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.size();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.gcm[perm[i]][perm[j]] == self.gcm[i][j]))
    }
}
