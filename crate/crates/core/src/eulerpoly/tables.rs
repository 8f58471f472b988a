use std::sync::{Arc, OnceLock, RwLock};

use crate::exact::{binomial, Rational, RationalPolynomial};

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n as u64, k as u64).expect("k <= n"))
}

/// Euler polynomials `E_n(x)` and Euler numbers `E_n` for `n = 0..=max_index`.
///
/// The two families come from different generating functions: polynomials
/// from `2e^{xt}/(e^t+1)` via `E_n(x) = x^n − ½·Σ_{j<n} C(n,j)·E_j(x)`, numbers
/// from `2e^t/(e^{2t}+1) = sech t` via `Σ_{j even} C(n,j)·E_{n−j} = 0`.
/// Keeping them separate is what makes `E_n = 2^n·E_n(1/2)` a real check.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerTable {
    polys: Vec<RationalPolynomial>,
    numbers: Vec<Rational>,
}

impl EulerTable {
    pub fn build(max_index: usize) -> Self {
        let mut t = EulerTable { polys: Vec::new(), numbers: Vec::new() };
        t.extend_to(max_index);
        t
    }

    pub fn extend_to(&mut self, max_index: usize) {
        let half = Rational::new(1, 2);
        for n in self.polys.len()..=max_index {
            let mut acc = RationalPolynomial::zero();
            for (j, ej) in self.polys.iter().enumerate() {
                acc = &acc + &ej.scale(&binom(n, j));
            }
            let p = &RationalPolynomial::monomial(Rational::one(), n) - &acc.scale(&half);
            self.polys.push(p);
        }
        for n in self.numbers.len()..=max_index {
            let e = if n == 0 {
                Rational::one()
            } else {
                let s: Rational = (2..=n)
                    .step_by(2)
                    .map(|j| binom(n, j) * &self.numbers[n - j])
                    .sum();
                -s
            };
            self.numbers.push(e);
        }
    }

    pub fn max_index(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn polynomial(&self, n: usize) -> &RationalPolynomial {
        &self.polys[n]
    }

    pub fn number(&self, n: usize) -> &Rational {
        &self.numbers[n]
    }

    /// Overwrites one Euler number. Only useful for negative-control runs of
    /// the identity suite.
    pub fn replace_number(&mut self, n: usize, value: Rational) {
        self.numbers[n] = value;
    }

    /// Overwrites one Euler polynomial (negative controls only).
    pub fn replace_polynomial(&mut self, n: usize, p: RationalPolynomial) {
        self.polys[n] = p;
    }
}

/// Bernoulli numbers (with `B_1 = −1/2`) and Bernoulli polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    polys: Vec<RationalPolynomial>,
    numbers: Vec<Rational>,
}

impl BernoulliTable {
    pub fn build(max_index: usize) -> Self {
        let mut t = BernoulliTable { polys: Vec::new(), numbers: Vec::new() };
        t.extend_to(max_index);
        t
    }

    pub fn extend_to(&mut self, max_index: usize) {
        for m in self.numbers.len()..=max_index {
            let b = if m == 0 {
                Rational::one()
            } else {
                // Σ_{j≤m} C(m+1, j)·B_j = 0
                let s: Rational = (0..m).map(|j| binom(m + 1, j) * &self.numbers[j]).sum();
                -s / Rational::from_integer(m as i64 + 1)
            };
            self.numbers.push(b);
        }
        for n in self.polys.len()..=max_index {
            let coeffs = (0..=n)
                .map(|i| binom(n, i) * &self.numbers[n - i])
                .collect();
            self.polys.push(RationalPolynomial::new(coeffs));
        }
    }

    pub fn max_index(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn polynomial(&self, n: usize) -> &RationalPolynomial {
        &self.polys[n]
    }

    pub fn number(&self, n: usize) -> &Rational {
        &self.numbers[n]
    }

    /// `B_{n,χ₄} = 4^{n−1}·(B_n(1/4) − B_n(3/4))` for `n ≥ 1`.
    pub fn generalized_chi4(&self, n: usize) -> Rational {
        assert!(n >= 1);
        let p = &self.polys[n];
        let diff = p.eval(&Rational::new(1, 4)) - p.eval(&Rational::new(3, 4));
        Rational::pow2(2 * (n as i64 - 1)) * diff
    }
}

// Process-wide memo tables. Readers take a cheap `Arc` snapshot; a request past
// the cached range builds an extended copy and swaps it in.
fn grow<T: Clone>(
    cell: &'static OnceLock<RwLock<Arc<T>>>,
    init: impl FnOnce() -> T,
    len: impl Fn(&T) -> usize,
    extend: impl Fn(&mut T, usize),
    want: usize,
) -> Arc<T> {
    let lock = cell.get_or_init(|| RwLock::new(Arc::new(init())));
    {
        let cur = lock.read().expect("table lock poisoned");
        if len(&cur) >= want {
            return Arc::clone(&cur);
        }
    }
    let mut w = lock.write().expect("table lock poisoned");
    if len(&w) < want {
        let mut next = (**w).clone();
        extend(&mut next, want - 1);
        *w = Arc::new(next);
    }
    Arc::clone(&w)
}

/// Shared Euler table covering at least `0..=n`.
pub fn euler_table(n: usize) -> Arc<EulerTable> {
    static CELL: OnceLock<RwLock<Arc<EulerTable>>> = OnceLock::new();
    grow(&CELL, || EulerTable::build(16), |t| t.max_index() + 1, EulerTable::extend_to, n + 1)
}

/// Shared Bernoulli table covering at least `0..=n`.
pub fn bernoulli_table(n: usize) -> Arc<BernoulliTable> {
    static CELL: OnceLock<RwLock<Arc<BernoulliTable>>> = OnceLock::new();
    grow(&CELL, || BernoulliTable::build(17), |t| t.max_index() + 1, BernoulliTable::extend_to, n + 1)
}
