//! Laurent polynomials in z_1..z_r with integer coefficients, plus the
//! Demazure operators.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{reduced_word, Permutation};

pub type Exponent = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    rank: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(rank: usize) -> Self {
        LaurentPolynomial { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(&vec![0; rank])
    }

    pub fn monomial(mu: &[i64]) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mu.to_vec(), BigInt::one());
        LaurentPolynomial { rank: mu.len(), terms }
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(rank);
        for (mu, c) in terms {
            if mu.len() != rank {
                return Err(Error::RankMismatch { expected: rank, got: mu.len() });
            }
            p.add_term(mu, c.into());
        }
        Ok(p)
    }

    /// The variable z_i (1-based).
    pub fn var(rank: usize, i: usize) -> Self {
        let mut mu = vec![0; rank];
        mu[i - 1] = 1;
        Self::monomial(&mu)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mu: &[i64]) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mu: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPolynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by z^mu.
    pub fn shift(&self, mu: &[i64]) -> Self {
        assert_eq!(mu.len(), self.rank, "rank mismatch");
        LaurentPolynomial {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.iter().zip(mu).map(|(a, b)| a + b).collect(), v.clone()))
                .collect(),
        }
    }

    /// f(s_i z): swaps exponents i and i+1.
    pub fn swap_vars(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        Ok(LaurentPolynomial {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let mut k = k.clone();
                    k.swap(i - 1, i);
                    (k, v.clone())
                })
                .collect(),
        })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        Ok(())
    }

    /// (z_i f - z_{i+1} f(s_i z)) / (z_i - z_{i+1}), divided exactly.
    pub fn demazure(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut ei = vec![0; self.rank];
        ei[i - 1] = 1;
        let mut ej = vec![0; self.rank];
        ej[i] = 1;
        let mut g = &self.shift(&ei) - &self.swap_vars(i)?.shift(&ej);
        if g.is_zero() {
            return Ok(g);
        }
        let floor = g.terms.keys().map(|k| k[i - 1]).min().unwrap();
        let mut q = Self::zero(self.rank);
        // long division, leading variable z_i
        while !g.is_zero() {
            let top = g.terms.keys().map(|k| k[i - 1]).max().unwrap();
            if top <= floor {
                return Err(Error::InexactDivision { index: i });
            }
            let lead: Vec<(Exponent, BigInt)> = g
                .terms
                .iter()
                .filter(|(k, _)| k[i - 1] == top)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            for (mut mu, c) in lead {
                mu[i - 1] -= 1;
                let mut nu = mu.clone();
                nu[i] += 1;
                g.add_term(nu, c.clone());
                let mut full = mu.clone();
                full[i - 1] += 1;
                g.add_term(full, -c.clone());
                q.add_term(mu, c);
            }
        }
        Ok(q)
    }

    /// The atom operator: demazure minus the identity.
    pub fn demazure_atom_op(&self, i: usize) -> Result<Self> {
        Ok(&self.demazure(i)? - self)
    }

    /// Sum of coefficients, i.e. the value at z = (1, ..., 1).
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Total degree if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|k| k.iter().sum::<i64>());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }
}

/// `∂_{a_1} ∘ ... ∘ ∂_{a_k}` applied to `f`, innermost `a_k`.
pub fn apply_word(f: &LaurentPolynomial, word: &[usize], atom: bool) -> Result<LaurentPolynomial> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = if atom { g.demazure_atom_op(i)? } else { g.demazure(i)? };
    }
    Ok(g)
}

/// `∂_w f` along the canonical reduced word of `w`.
pub fn demazure_w(f: &LaurentPolynomial, w: &Permutation) -> Result<LaurentPolynomial> {
    check_rank(f.rank(), w)?;
    apply_word(f, &reduced_word(w), false)
}

/// `∂°_w f` along the canonical reduced word of `w`.
pub fn atom_w(f: &LaurentPolynomial, w: &Permutation) -> Result<LaurentPolynomial> {
    check_rank(f.rank(), w)?;
    apply_word(f, &reduced_word(w), true)
}

fn check_rank(r: usize, w: &Permutation) -> Result<()> {
    if r != w.rank() {
        return Err(Error::RankMismatch { expected: r, got: w.rank() });
    }
    Ok(())
}

pub fn check_partition(lambda: &[i64]) -> Result<()> {
    if lambda.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidPartition(lambda.to_vec()));
    }
    Ok(())
}

pub fn demazure_char(lambda: &[i64], w: &Permutation) -> Result<LaurentPolynomial> {
    check_partition(lambda)?;
    demazure_w(&LaurentPolynomial::monomial(lambda), w)
}

pub fn demazure_atom(lambda: &[i64], w: &Permutation) -> Result<LaurentPolynomial> {
    check_partition(lambda)?;
    atom_w(&LaurentPolynomial::monomial(lambda), w)
}

/// (r-1, r-2, ..., 0)
pub fn rho(r: usize) -> Vec<i64> {
    (0..r as i64).rev().collect()
}

pub fn eval_ones(f: &LaurentPolynomial) -> BigInt {
    f.eval_ones()
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = LaurentPolynomial::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mu = a.iter().zip(b).map(|(s, t)| s + t).collect();
                out.add_term(mu, x * y);
            }
        }
        out
    }
}

macro_rules! owned_op {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

impl fmt::Display for LaurentPolynomial {
    /// Terms in descending lexicographic order of exponent, e.g. `z1^2*z2 + z1*z2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (mu, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = mu
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(k, &e)| if e == 1 { format!("z{}", k + 1) } else { format!("z{}^{}", k + 1, e) })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}
