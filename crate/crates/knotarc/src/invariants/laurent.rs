use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer Laurent polynomial in `v` and `z`, keyed by `(v_exp, z_exp)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, v: i32, z: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(v, z, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (v, z, c) in terms {
            p.add_term(v, z, c);
        }
        p
    }

    /// The split-unknot factor `(v + v^-1) z^-1 - 1`.
    pub fn delta() -> Self {
        Self::from_terms([(1, -1, 1), (-1, -1, 1), (0, 0, -1)])
    }

    pub fn add_term(&mut self, v: i32, z: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((v, z)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(v, z));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: i32, z: i32) -> i64 {
        self.terms.get(&(v, z)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.terms.iter().map(|(&(v, z), &c)| (v, z, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(min, max)` exponent of `v`, or `None` for zero.
    pub fn v_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|&(v, _)| v);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v))))
    }

    /// Multiply by `v^dv z^dz`.
    pub fn shift(&self, dv: i32, dz: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&(v, z), &c)| ((v + dv, z + dz), c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `v -> v^-1`; the polynomial of the mirror image.
    pub fn mirror(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(v, z), &c)| ((-v, z), c)).collect() }
    }

    /// Sorted `[v_exp, z_exp, coeff]` triples.
    pub fn to_triples(&self) -> Vec<[i64; 3]> {
        self.terms().map(|(v, z, c)| [v as i64, z as i64, c]).collect()
    }

    pub fn from_triples(t: &[[i64; 3]]) -> Self {
        Self::from_terms(t.iter().map(|&[v, z, c]| (v as i32, z as i32, c)))
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let t: Vec<[i64; 3]> = Vec::deserialize(d)?;
        Ok(Self::from_triples(&t))
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(v, z), &c) in &rhs.terms {
            self.add_term(v, z, c);
        }
    }
}

impl SubAssign<&LaurentPoly2> for LaurentPoly2 {
    fn sub_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(v, z), &c) in &rhs.terms {
            self.add_term(v, z, -c);
        }
    }
}

impl Add<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(v1, z1), &c1) in &self.terms {
            for (&(v2, z2), &c2) in &rhs.terms {
                out.add_term(v1 + v2, z1 + z2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly2> for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $f(self, rhs: LaurentPoly2) -> LaurentPoly2 {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly2> for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $f(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.scale(-1)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (v, z, c) in self.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let mut parts = Vec::new();
            if v != 0 {
                parts.push(if v == 1 { "v".to_string() } else { format!("v^{v}") });
            }
            if z != 0 {
                parts.push(if z == 1 { "z".to_string() } else { format!("z^{z}") });
            }
            if parts.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{}", parts.join(" "))?;
            } else {
                write!(f, "{a} {}", parts.join(" "))?;
            }
        }
        Ok(())
    }
}
