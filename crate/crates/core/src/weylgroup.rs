//! Extended affine Weyl group elements acting on affine weights mod `delta`.

use std::sync::Arc;

use crate::charring::permute;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::weight::{AffineWeight, FiniteWeight};

/// `g = w . t_mu . sigma`: the automorphism acts first, then the translation,
/// then the finite word (last letter first).
#[derive(Clone, Debug)]
pub struct ExtAffineElement {
    frame: Arc<Frame>,
    finite_word: Vec<usize>,
    translation: FiniteWeight,
    sigma: Vec<usize>,
}

/// `g = s_{i_1} ... s_{i_l} sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
    pub sigma: Vec<usize>,
}

pub fn identity_perm(n: usize) -> Vec<usize> {
    (0..n).collect()
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>, sigma: Vec<usize>) -> Self {
        Self { letters, sigma }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn sigma_is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Acts on a weight: `sigma` first, then the letters right to left.
    pub fn act(&self, frame: &Frame, w: &AffineWeight) -> AffineWeight {
        let cd = frame.cartan();
        let mut v = permute(w, &self.sigma);
        for &i in self.letters.iter().rev() {
            v = cd.reflect(&v, i);
        }
        v
    }

    /// Concatenation `self . other`; only defined when `self` has trivial
    /// automorphism part.
    pub fn then(&self, other: &ReducedWord) -> Result<ReducedWord> {
        if !self.sigma_is_identity() {
            return Err(Error::InvalidArgument(
                "cannot concatenate after a nontrivial automorphism".into(),
            ));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(ReducedWord::new(letters, other.sigma.clone()))
    }
}

impl ExtAffineElement {
    pub fn identity(frame: &Arc<Frame>) -> Self {
        Self {
            frame: Arc::clone(frame),
            finite_word: Vec::new(),
            translation: FiniteWeight::zero(frame.rank()),
            sigma: identity_perm(frame.cartan().size()),
        }
    }

    /// Pure translation `t_mu`.
    pub fn translation(frame: &Arc<Frame>, mu: FiniteWeight) -> Result<Self> {
        frame.check_finite(&mu)?;
        Ok(Self {
            translation: mu,
            ..Self::identity(frame)
        })
    }

    /// `w t_mu sigma` from its parts; `finite_word` uses affine node ids of
    /// the finite part.
    pub fn from_parts(
        frame: &Arc<Frame>,
        finite_word: Vec<usize>,
        translation: FiniteWeight,
        sigma: Vec<usize>,
    ) -> Result<Self> {
        frame.check_finite(&translation)?;
        if let Some(&bad) = finite_word
            .iter()
            .find(|&&i| frame.finite_index(i).is_none())
        {
            return Err(Error::NodeOutOfRange {
                label: frame.label(),
                index: bad,
                max: frame.cartan().size() - 1,
            });
        }
        if !frame.cartan().is_automorphism(&sigma) {
            return Err(Error::InvalidPermutation {
                label: frame.label(),
                perm: sigma,
            });
        }
        Ok(Self {
            frame: Arc::clone(frame),
            finite_word,
            translation,
            sigma,
        })
    }

    /// `t_{-nu(coweight)}` for a dominant coweight.
    pub fn translation_element(frame: &Arc<Frame>, coweight: &FiniteWeight) -> Result<Self> {
        frame.check_finite(coweight)?;
        if !coweight.is_dominant() {
            return Err(Error::NotDominant {
                what: "coweight",
                coords: coweight.to_vec(),
            });
        }
        Self::translation(frame, -&frame.nu(coweight)?)
    }

    /// The element with the given reduced word.
    pub fn from_word(frame: &Arc<Frame>, word: &ReducedWord) -> Result<Self> {
        if let Some(&bad) = word.letters.iter().find(|&&i| i >= frame.cartan().size()) {
            return Err(Error::NodeOutOfRange {
                label: frame.label(),
                index: bad,
                max: frame.cartan().size() - 1,
            });
        }
        if !frame.cartan().is_automorphism(&word.sigma) {
            return Err(Error::InvalidPermutation {
                label: frame.label(),
                perm: word.sigma.clone(),
            });
        }
        Self::from_action(frame, |w| word.act(frame, w))
    }

    /// Recovers `w t_mu` from the action of an element: `w` from level-zero
    /// weights, `mu` from the image of `Lambda_k`.
    pub fn from_action(
        frame: &Arc<Frame>,
        f: impl Fn(&AffineWeight) -> AffineWeight,
    ) -> Result<Self> {
        let rs = frame.roots();
        let image = frame.project(&f(&frame.embed(&rs.rho())));
        let mut p = image;
        let mut word = Vec::new();
        while let Some(j) = p.coords().iter().position(|&c| c < 0) {
            word.push(frame.nodes()[j]);
            p = rs.reflect(&p, j);
        }
        if p != rs.rho() {
            return Err(Error::Internal(
                "level-zero action is not a Weyl group element".into(),
            ));
        }
        let cd = frame.cartan();
        let base = cd.fundamental(frame.base());
        let mut v = f(&base);
        for &i in &word {
            v = cd.reflect(&v, i);
        }
        let mu = frame.project(&(&v - &base));
        Ok(Self {
            frame: Arc::clone(frame),
            finite_word: word,
            translation: mu,
            sigma: identity_perm(cd.size()),
        })
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn finite_word(&self) -> &[usize] {
        &self.finite_word
    }

    pub fn translation_part(&self) -> &FiniteWeight {
        &self.translation
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn act(&self, w: &AffineWeight) -> AffineWeight {
        let cd = self.frame.cartan();
        let mut v = permute(w, &self.sigma);
        let level = cd.level(&v);
        if level != 0 {
            v = v.add_scaled(level, &self.frame.embed(&self.translation));
        }
        for &i in self.finite_word.iter().rev() {
            v = cd.reflect(&v, i);
        }
        v
    }

    /// `self . other`, normalized to `w t_mu`.
    pub fn compose(&self, other: &ExtAffineElement) -> Result<ExtAffineElement> {
        if self.frame.label() != other.frame.label() || self.frame.base() != other.frame.base() {
            return Err(Error::AlgebraMismatch {
                left: self.frame.label(),
                right: other.frame.label(),
            });
        }
        Self::from_action(&self.frame, |w| self.act(&other.act(w)))
    }

    /// The normal form `w t_mu` with trivial automorphism part.
    pub fn normalized(&self) -> Result<ExtAffineElement> {
        Self::from_action(&self.frame, |w| self.act(w))
    }

    pub fn peel(&self) -> Result<ReducedWord> {
        peel_reduced_word(self)
    }

    pub fn length(&self) -> Result<usize> {
        Ok(self.peel()?.len())
    }
}

/// Descent peeling: track `g(rho_hat)` and reflect at the smallest negative
/// coordinate until the chamber is reached; the residual element stabilizes
/// the fundamental chamber and is a diagram automorphism.
pub fn peel_reduced_word(g: &ExtAffineElement) -> Result<ReducedWord> {
    let cd = g.frame.cartan();
    let mut p = g.act(&cd.rho_hat());
    let mut letters = Vec::new();
    loop {
        if p.coords().contains(&0) {
            return Err(Error::Internal("peeling reached a wall".into()));
        }
        match p.coords().iter().position(|&c| c < 0) {
            Some(i) => {
                letters.push(i);
                p = cd.reflect(&p, i);
            }
            None => break,
        }
    }
    let residual = |w: &AffineWeight| {
        let mut v = g.act(w);
        for &i in &letters {
            v = cd.reflect(&v, i);
        }
        v
    };
    let sigma = sigma_of(&g.frame, residual)?;
    Ok(ReducedWord::new(letters, sigma))
}

/// The permutation `pi` with `g(Lambda_i) = Lambda_{pi(i)}` for a
/// chamber-stabilizing element.
pub fn detect_sigma(g: &ExtAffineElement) -> Result<Vec<usize>> {
    let cd = g.frame.cartan();
    if g.act(&cd.rho_hat()).coords().iter().any(|&c| c <= 0) {
        return Err(Error::NotChamberStabilizing);
    }
    sigma_of(&g.frame, |w| g.act(w))
}

fn sigma_of(frame: &Frame, f: impl Fn(&AffineWeight) -> AffineWeight) -> Result<Vec<usize>> {
    let cd = frame.cartan();
    let n = cd.size();
    let mut perm = Vec::with_capacity(n);
    for j in 0..n {
        let img = f(&cd.fundamental(j));
        let target = (0..n).find(|&i| img == cd.fundamental(i));
        match target {
            Some(i) => perm.push(i),
            None => {
                return Err(Error::Internal(format!(
                    "chamber-stabilizing residual sends Lambda_{j} to {img}"
                )))
            }
        }
    }
    if !cd.is_automorphism(&perm) {
        return Err(Error::InvalidPermutation {
            label: frame.label(),
            perm,
        });
    }
    Ok(perm)
}

/// Reduced word of the longest element of the parabolic subgroup generated
/// by `nodes` (any subset of nodes whose diagram is of finite type).
pub fn longest_word(frame: &Frame, nodes: &[usize]) -> ReducedWord {
    let cd = frame.cartan();
    let n = cd.size();
    let mut p = AffineWeight::new((0..n).map(|i| if nodes.contains(&i) { -1 } else { 1 }));
    let mut letters = Vec::new();
    while let Some(i) = (0..n).find(|&i| nodes.contains(&i) && p[i] < 0) {
        letters.push(i);
        p = cd.reflect(&p, i);
    }
    ReducedWord::new(letters, identity_perm(n))
}

/// Longest element of the finite Weyl group at the frame's basepoint.
pub fn finite_longest_word(frame: &Frame) -> ReducedWord {
    longest_word(frame, frame.nodes())
}
