//! Integer weight vectors.
//!
//! Affine weights are stored by their pairings with the simple coroots
//! `(c_0, ..., c_n)`, i.e. as coordinates in the affine fundamental-weight
//! basis. `delta` pairs to zero with every coroot, so this is a faithful
//! representation of weights modulo `delta` and equality mod `delta` is plain
//! coordinate equality.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use smallvec::SmallVec;

pub(crate) type Coords = SmallVec<[i64; 9]>;

macro_rules! weight_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(pub(crate) Coords);

        impl $name {
            pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
                Self(coords.into_iter().collect())
            }

            pub fn zero(len: usize) -> Self {
                Self(std::iter::repeat(0).take(len).collect())
            }

            /// Unit vector `e_i` of length `len`.
            pub fn unit(len: usize, i: usize) -> Self {
                let mut w = Self::zero(len);
                w.0[i] = 1;
                w
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            /// All coordinates nonnegative.
            pub fn is_dominant(&self) -> bool {
                self.0.iter().all(|&c| c >= 0)
            }

            pub fn scaled(&self, k: i64) -> Self {
                Self(self.0.iter().map(|&c| c * k).collect())
            }

            pub fn to_vec(&self) -> Vec<i64> {
                self.0.to_vec()
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                Self(v.into_iter().collect())
            }
        }

        impl From<&[i64]> for $name {
            fn from(v: &[i64]) -> Self {
                Self(v.iter().copied().collect())
            }
        }

        impl<const N: usize> From<[i64; N]> for $name {
            fn from(v: [i64; N]) -> Self {
                Self(v.into_iter().collect())
            }
        }

        impl Index<usize> for $name {
            type Output = i64;
            fn index(&self, i: usize) -> &i64 {
                &self.0[i]
            }
        }

        impl IndexMut<usize> for $name {
            fn index_mut(&mut self, i: usize) -> &mut i64 {
                &mut self.0[i]
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.len(), rhs.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.len(), rhs.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|c| -c).collect())
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{:?}", stringify!($name), self.0.as_slice())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

weight_type!(
    /// Affine weight mod `delta`, coordinates `c_i = <Lambda, alpha_i^vee>` for
    /// `i = 0..=n`.
    AffineWeight
);

weight_type!(
    /// Weight of the finite-type subalgebra in fundamental-weight
    /// coordinates. Also used for coweights in fundamental-coweight
    /// coordinates.
    FiniteWeight
);

impl AffineWeight {
    /// `self + k * other`, the workhorse of reflections and translations.
    pub fn add_scaled(&self, k: i64, other: &AffineWeight) -> AffineWeight {
        AffineWeight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }
}

impl FiniteWeight {
    pub fn add_scaled(&self, k: i64, other: &FiniteWeight) -> FiniteWeight {
        FiniteWeight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    /// Sum of coordinates.
    pub fn coordinate_sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// All dominant vectors of length `rank` whose coordinates sum to at most
/// `max_sum`, in lexicographic order.
pub fn dominant_vectors(rank: usize, max_sum: i64) -> Vec<FiniteWeight> {
    fn rec(rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<FiniteWeight>) {
        if cur.len() == rank {
            out.push(FiniteWeight::from(cur.as_slice()));
            return;
        }
        for c in 0..=left {
            cur.push(c);
            rec(rank, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, max_sum, &mut Vec::with_capacity(rank), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominant_vector_count() {
        // stars and bars: C(max_sum + rank, rank)
        assert_eq!(dominant_vectors(2, 2).len(), 6);
        assert_eq!(dominant_vectors(4, 4).len(), 70);
        assert!(dominant_vectors(3, 0).iter().all(|w| w.is_zero()));
    }

    #[test]
    fn add_scaled_matches_repeated_add() {
        let a = AffineWeight::from([1, -2, 3]);
        let b = AffineWeight::from([0, 1, -1]);
        assert_eq!(a.add_scaled(2, &b), &(&a + &b) + &b);
    }
}
