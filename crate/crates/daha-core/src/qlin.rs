//! Small exact linear algebra over the rationals, plus the integer weight
//! type used throughout (coordinates in the fundamental-weight basis).

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

pub type Z = BigInt;
pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from(Z::from(n))
}

pub const MAX_RANK: usize = 4;

/// A lattice vector given by its pairings with the simple coroots,
/// i.e. integer coordinates in the `ω`-basis. Rank-padded with zeros.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Wt(pub [i32; MAX_RANK]);

impl Wt {
    pub fn zero() -> Self {
        Wt([0; MAX_RANK])
    }

    pub fn from_slice(v: &[i32]) -> Self {
        let mut a = [0; MAX_RANK];
        a[..v.len()].copy_from_slice(v);
        Wt(a)
    }

    pub fn fundamental(i: usize) -> Self {
        let mut a = [0; MAX_RANK];
        a[i] = 1;
        Wt(a)
    }

    pub fn coords(&self, rank: usize) -> &[i32] {
        &self.0[..rank]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &Wt) -> Wt {
        let mut a = [0; MAX_RANK];
        for i in 0..MAX_RANK {
            a[i] = self.0[i] + o.0[i];
        }
        Wt(a)
    }

    pub fn sub(&self, o: &Wt) -> Wt {
        let mut a = [0; MAX_RANK];
        for i in 0..MAX_RANK {
            a[i] = self.0[i] - o.0[i];
        }
        Wt(a)
    }

    pub fn neg(&self) -> Wt {
        let mut a = [0; MAX_RANK];
        for i in 0..MAX_RANK {
            a[i] = -self.0[i];
        }
        Wt(a)
    }

    pub fn scale(&self, c: i32) -> Wt {
        let mut a = [0; MAX_RANK];
        for i in 0..MAX_RANK {
            a[i] = c * self.0[i];
        }
        Wt(a)
    }

    pub fn to_qvec(&self, rank: usize) -> Vec<Q> {
        self.coords(rank).iter().map(|&c| qi(c as i64)).collect()
    }
}

impl fmt::Debug for Wt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Wt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct QMat {
    pub n: usize,
    pub m: usize,
    pub a: Vec<Q>,
}

impl QMat {
    pub fn zero(n: usize, m: usize) -> Self {
        QMat { n, m, a: vec![Q::zero(); n * m] }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::zero(n, n);
        for i in 0..n {
            r[(i, i)] = Q::one();
        }
        r
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Self {
        let n = rows.len();
        let m = if n == 0 { 0 } else { rows[0].len() };
        let mut a = Vec::with_capacity(n * m);
        for r in rows {
            assert_eq!(r.len(), m);
            a.extend(r.iter().cloned());
        }
        QMat { n, m, a }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.m);
        (0..self.n)
            .map(|i| {
                let mut s = Q::zero();
                for j in 0..self.m {
                    s += &self[(i, j)] * &v[j];
                }
                s
            })
            .collect()
    }

    /// Gauss-Jordan inverse; panics if singular (callers invert Cartan-type
    /// matrices that are invertible by construction).
    pub fn inverse(&self) -> QMat {
        assert_eq!(self.n, self.m);
        let n = self.n;
        let mut a = self.clone();
        let mut inv = QMat::identity(n);
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .expect("singular matrix");
            for j in 0..n {
                a.a.swap(piv * n + j, col * n + j);
                inv.a.swap(piv * n + j, col * n + j);
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= p.clone();
                inv[(col, j)] /= p.clone();
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for j in 0..n {
                        let x = &a[(col, j)] * &f;
                        a[(r, j)] -= x;
                        let y = &inv[(col, j)] * &f;
                        inv[(r, j)] -= y;
                    }
                }
            }
        }
        inv
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.a[i * self.m + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.a[i * self.m + j]
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    assert_eq!(a.len(), b.len());
    let mut s = Q::zero();
    for (x, y) in a.iter().zip(b) {
        s += x * y;
    }
    s
}

/// lcm of the denominators appearing in a rational.
pub fn denom_lcm(acc: &Z, x: &Q) -> Z {
    let d = x.denom().abs();
    num::integer::lcm(acc.clone(), d)
}
