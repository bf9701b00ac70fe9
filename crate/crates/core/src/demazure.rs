//! Demazure operators on characters and the Demazure character formula.

use std::sync::Arc;

use crate::charring::{Character, FiniteCharacter};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::weight::{AffineWeight, FiniteWeight};
use crate::weylgroup::{finite_longest_word, ExtAffineElement, ReducedWord};

/// `D_i(e^lambda) = (e^lambda - e^{s_i(lambda) - alpha_i}) / (1 - e^{-alpha_i})`,
/// expanded as an alpha_i-string.
pub fn apply_simple(x: &Character, i: usize) -> Character {
    let cd = x.cartan();
    let alpha = cd.simple_root(i);
    let mut out = Character::zero(cd);
    for (w, c) in x.terms() {
        let n = w[i];
        if n >= 0 {
            let mut v = w.clone();
            out.add_term(v.clone(), c);
            for _ in 0..n {
                v = &v - &alpha;
                out.add_term(v.clone(), c);
            }
        } else if n <= -2 {
            let neg = -c;
            let mut v = w.clone();
            for _ in 1..(-n) {
                v = &v + &alpha;
                out.add_term(v.clone(), &neg);
            }
        }
    }
    out
}

/// `D_{w sigma}(x) = D_{i_1} ... D_{i_l}(sigma(x))`.
pub fn apply_word(x: &Character, word: &ReducedWord) -> Result<Character> {
    let mut y = x.twist(&word.sigma)?;
    for &i in word.letters.iter().rev() {
        if i >= x.cartan().size() {
            return Err(Error::NodeOutOfRange {
                label: x.label(),
                index: i,
                max: x.cartan().size() - 1,
            });
        }
        y = apply_simple(&y, i);
    }
    Ok(y)
}

fn check_dominant(w: &AffineWeight) -> Result<()> {
    if !w.is_dominant() {
        return Err(Error::NotDominant {
            what: "highest weight",
            coords: w.to_vec(),
        });
    }
    Ok(())
}

/// Character of the Demazure module `V_{t_{-nu(coweight)}}(highest)`.
pub fn demazure_character(
    frame: &Arc<Frame>,
    coweight: &FiniteWeight,
    highest: &AffineWeight,
) -> Result<Character> {
    let g = ExtAffineElement::translation_element(frame, coweight)?;
    demazure_for(&g, highest)
}

/// Character of `V_{t_{-mu}}(highest)` for a translation weight `mu`, the
/// form used for twisted data where translations are given directly.
pub fn demazure_translation(
    frame: &Arc<Frame>,
    mu: &FiniteWeight,
    highest: &AffineWeight,
) -> Result<Character> {
    let g = ExtAffineElement::translation(frame, -mu)?;
    demazure_for(&g, highest)
}

/// `D_g(e^highest)` along the peeled reduced word of `g`.
pub fn demazure_for(g: &ExtAffineElement, highest: &AffineWeight) -> Result<Character> {
    let cd = g.frame().cartan();
    if highest.len() != cd.size() {
        return Err(Error::RankMismatch {
            expected: cd.size(),
            got: highest.len(),
        });
    }
    check_dominant(highest)?;
    let word = g.peel()?;
    apply_word(&Character::monomial(cd, highest.clone()), &word)
}

/// Character of the irreducible module `V(lambda)` of the finite part,
/// memoized per frame.
pub fn finite_weyl_character(
    frame: &Arc<Frame>,
    lambda: &FiniteWeight,
) -> Result<Arc<FiniteCharacter>> {
    frame.irreducible(lambda)
}

/// `D_{w_0}(e^lambda)` on level-zero weights.
pub(crate) fn weyl_character_uncached(
    frame: &Frame,
    lambda: &FiniteWeight,
) -> Result<FiniteCharacter> {
    let cd = frame.cartan();
    let x = Character::monomial(cd, frame.embed(lambda));
    let y = apply_word(&x, &finite_longest_word(frame))?;
    let mut out = FiniteCharacter::zero(frame.rank());
    for (w, c) in y.terms() {
        out.add_term(frame.project(w), c);
    }
    Ok(out)
}

/// Level-zero character with the finite part `x`, lifted to `level`.
pub fn lift_character(frame: &Frame, x: &FiniteCharacter, level: i64) -> Character {
    Character::from_terms(
        frame.cartan(),
        x.terms().map(|(w, c)| (frame.lift(w, level), c.clone())),
    )
}

/// Finite part of a homogeneous character with respect to the frame's
/// basepoint.
pub fn project_character(frame: &Frame, x: &Character) -> Result<(i64, FiniteCharacter)> {
    x.project_at(frame.base())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coeff;

    fn a1() -> Arc<Frame> {
        Frame::parse("A1").unwrap()
    }

    fn ch(frame: &Frame, terms: &[([i64; 2], i64)]) -> Character {
        Character::from_terms(
            frame.cartan(),
            terms
                .iter()
                .map(|(w, c)| (AffineWeight::from(*w), Coeff::from(*c))),
        )
    }

    #[test]
    fn simple_operator_cases() {
        let f = a1();
        let cd = f.cartan();
        let l1 = Character::monomial(cd, cd.fundamental(1));
        // Lambda_0 + omega_1 = (0,1), Lambda_0 - omega_1 = (2,-1)
        assert_eq!(apply_simple(&l1, 1), ch(&f, &[([0, 1], 1), ([2, -1], 1)]));
        let minus_one = Character::monomial(cd, AffineWeight::from([3, -1]));
        assert!(apply_simple(&minus_one, 1).is_empty());
        let l0 = Character::monomial(cd, cd.fundamental(0));
        assert_eq!(apply_simple(&l0, 0), ch(&f, &[([1, 0], 1), ([-1, 2], 1)]));
        let minus_three = Character::monomial(cd, AffineWeight::from([4, -2]));
        assert_eq!(apply_simple(&minus_three, 1), ch(&f, &[([2, 0], -1)]));
    }

    #[test]
    fn words_on_lambda0() {
        let f = a1();
        let cd = f.cartan();
        let l0 = Character::monomial(cd, cd.fundamental(0));
        assert_eq!(
            apply_word(&l0, &ReducedWord::new(vec![], vec![0, 1])).unwrap(),
            l0
        );
        let w1 = ReducedWord::new(vec![1], vec![1, 0]);
        assert_eq!(
            apply_word(&l0, &w1).unwrap(),
            ch(&f, &[([0, 1], 1), ([2, -1], 1)])
        );
        let w10 = ReducedWord::new(vec![1, 0], vec![0, 1]);
        assert_eq!(
            apply_word(&l0, &w10).unwrap(),
            ch(&f, &[([-1, 2], 1), ([1, 0], 2), ([3, -2], 1)])
        );
    }

    #[test]
    fn demazure_characters_a1() {
        let f = a1();
        let l0 = f.cartan().fundamental(0);
        let x = demazure_character(&f, &FiniteWeight::from([1]), &l0).unwrap();
        assert_eq!(x, ch(&f, &[([0, 1], 1), ([2, -1], 1)]));
        let y = demazure_character(&f, &FiniteWeight::from([2]), &l0).unwrap();
        let (level, fin) = y.project_to_finite().unwrap();
        assert_eq!(level, 1);
        let v1 = FiniteCharacter::from_terms(
            1,
            [
                (FiniteWeight::from([1]), Coeff::ONE),
                (FiniteWeight::from([-1]), Coeff::ONE),
            ],
        );
        assert_eq!(fin, v1.multiply(&v1).unwrap());
        let z = demazure_character(&f, &FiniteWeight::from([0]), &l0).unwrap();
        assert_eq!(z, Character::monomial(f.cartan(), l0));
    }

    #[test]
    fn weyl_characters() {
        let f = a1();
        for m in 0..5 {
            let x = finite_weyl_character(&f, &FiniteWeight::from([m])).unwrap();
            assert_eq!(x.mass(), Coeff::from(m + 1));
            for j in 0..=m {
                assert_eq!(x.coeff(&FiniteWeight::from([m - 2 * j])), Coeff::ONE);
            }
        }
        let c2 = Frame::parse("C2").unwrap();
        let x = finite_weyl_character(&c2, &FiniteWeight::from([0, 1])).unwrap();
        assert_eq!(x.len(), 5);
        assert_eq!(
            finite_weyl_character(&c2, &FiniteWeight::zero(2))
                .unwrap()
                .as_ref(),
            &FiniteCharacter::unit(2)
        );
        assert!(finite_weyl_character(&c2, &FiniteWeight::from([-1, 0])).is_err());
    }

    #[test]
    fn nondominant_highest_weight_rejected() {
        let f = a1();
        assert!(
            demazure_character(&f, &FiniteWeight::from([1]), &AffineWeight::from([2, -1])).is_err()
        );
        assert!(
            demazure_character(&f, &FiniteWeight::from([-1]), &AffineWeight::from([1, 0])).is_err()
        );
    }
}
