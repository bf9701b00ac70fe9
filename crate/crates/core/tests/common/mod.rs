#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use demazure::weylgroup::identity_perm;
use demazure::{AffineWeight, CartanData, Character, Coeff, ExtAffineElement, Frame, ReducedWord};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_weight(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> AffineWeight {
    AffineWeight::new((0..n).map(|_| rng.gen_range(-bound..=bound)))
}

/// Up to six terms with small nonzero coefficients.
pub fn random_character(rng: &mut ChaCha8Rng, cd: &Arc<CartanData>) -> Character {
    let terms = rng.gen_range(1..=6);
    let mut x = Character::zero(cd);
    for _ in 0..terms {
        let c = loop {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                break c;
            }
        };
        x.add_term(random_weight(rng, cd.size(), 4), &Coeff::from(c));
    }
    x
}

/// Diagram automorphisms of the generalized Cartan matrix, by brute force.
pub fn automorphisms(cd: &CartanData) -> Vec<Vec<usize>> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let a = cd.gcm();
    perms(cd.size())
        .into_iter()
        .filter(|p| (0..p.len()).all(|i| (0..p.len()).all(|j| a[p[i]][p[j]] == a[i][j])))
        .collect()
}

/// Reduced words of length at most `max_len`, grouped by the element they
/// represent; only groups with at least two words.
pub fn reduced_word_classes(frame: &Arc<Frame>, max_len: usize) -> Vec<Vec<Vec<usize>>> {
    let n = frame.cartan().size();
    let mut classes: BTreeMap<(Vec<usize>, Vec<i64>), Vec<Vec<usize>>> = BTreeMap::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..n {
                if w.last() == Some(&i) {
                    continue;
                }
                let mut v = w.clone();
                v.push(i);
                let g = ExtAffineElement::from_word(
                    frame,
                    &ReducedWord::new(v.clone(), identity_perm(n)),
                )
                .unwrap();
                if g.length().unwrap() != v.len() {
                    continue;
                }
                classes
                    .entry((g.finite_word().to_vec(), g.translation_part().to_vec()))
                    .or_default()
                    .push(v.clone());
                next.push(v);
            }
        }
        frontier = next;
    }
    classes.into_values().filter(|c| c.len() > 1).collect()
}
