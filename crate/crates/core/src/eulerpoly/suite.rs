//! Exact verification of the Euler-polynomial identity families.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{generalized_bernoulli_chi4_series, BernoulliTable, EulerTable};
use crate::exact::{Rational, RationalPolynomial};
use crate::par::{self, Execution};

/// The identity families checked by [`run_identity_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `E_n(1−x) = (−1)^n E_n(x)`, and `E_n(1/2) = 0` for odd `n`.
    Reflection,
    /// `E_n = 2^n E_n(1/2)`.
    HalfValue,
    /// `E_n(x+1) + E_n(x) = 2x^n`.
    ShiftSum,
    /// `E_n(0) = E_n(1) = 0` for even `n ≥ 2`.
    EvenEndpoints,
    /// `E_n' = n·E_{n−1}`, `E_0' = 0`.
    Derivative,
    /// `E_{2k}(1/2) = −B_{2k+1,χ₄} / ((2k+1)·2^{2k−1})`.
    GeneralizedBernoulli,
    /// `B_{n,χ₄} = 4^{n−1}(B_n(1/4) − B_n(3/4))` against the twisted generating function.
    BridgeChi4,
    /// `E_{n−1}(x) = (2^n/n)(B_n((x+1)/2) − B_n(x/2))` as polynomials.
    BridgeEulerBernoulli,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::Reflection,
        IdentityId::HalfValue,
        IdentityId::ShiftSum,
        IdentityId::EvenEndpoints,
        IdentityId::Derivative,
        IdentityId::GeneralizedBernoulli,
        IdentityId::BridgeChi4,
        IdentityId::BridgeEulerBernoulli,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Reflection => "reflection",
            IdentityId::HalfValue => "half_value",
            IdentityId::ShiftSum => "shift_sum",
            IdentityId::EvenEndpoints => "even_endpoints",
            IdentityId::Derivative => "derivative",
            IdentityId::GeneralizedBernoulli => "gen_bernoulli_half",
            IdentityId::BridgeChi4 => "bridge.gen_bernoulli_chi4",
            IdentityId::BridgeEulerBernoulli => "bridge.euler_bernoulli",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::Reflection => "E_n(1-x) = (-1)^n E_n(x); E_odd(1/2) = 0",
            IdentityId::HalfValue => "E_n = 2^n E_n(1/2)",
            IdentityId::ShiftSum => "E_n(x+1) + E_n(x) = 2x^n",
            IdentityId::EvenEndpoints => "E_2k(0) = E_2k(1) = 0 (2k >= 2)",
            IdentityId::Derivative => "E_n'(x) = n E_(n-1)(x)",
            IdentityId::GeneralizedBernoulli => "E_2k(1/2) = -B_(2k+1,chi4) / ((2k+1) 2^(2k-1))",
            IdentityId::BridgeChi4 => "B_(n,chi4) = 4^(n-1) (B_n(1/4) - B_n(3/4))",
            IdentityId::BridgeEulerBernoulli => "E_(n-1)(x) = 2^n/n (B_n((x+1)/2) - B_n(x/2))",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FirstFailure {
    pub n: usize,
    pub x: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityResult {
    pub identity_id: IdentityId,
    pub instances: u64,
    pub passed: bool,
    pub first_failure: Option<FirstFailure>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub nmax: usize,
    pub trials: usize,
    pub seed: u64,
    pub identities: Vec<IdentityResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> usize {
        self.identities.iter().filter(|r| !r.passed).count()
    }

    pub fn get(&self, id: IdentityId) -> Option<&IdentityResult> {
        self.identities.iter().find(|r| r.identity_id == id)
    }
}

/// Tables the suite reads. Build with [`SuiteTables::build`], or tamper with a
/// copy to run a negative control.
#[derive(Debug, Clone)]
pub struct SuiteTables {
    pub euler: EulerTable,
    pub bernoulli: BernoulliTable,
    /// `B_{n,χ₄}` from the twisted generating function, `n = 0..=nmax+1`.
    pub chi4_series: Vec<Rational>,
}

impl SuiteTables {
    pub fn build(nmax: usize) -> Self {
        SuiteTables {
            euler: (*super::euler_table(nmax)).clone(),
            bernoulli: (*super::bernoulli_table(nmax + 1)).clone(),
            chi4_series: generalized_bernoulli_chi4_series(nmax + 2),
        }
    }
}

struct Instance {
    id: IdentityId,
    n: usize,
    x: Option<Rational>,
}

fn random_point(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-1000i64..=1000), rng.gen_range(1i64..=1000))
}

fn instances(nmax: usize, trials: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for id in IdentityId::ALL {
        match id {
            IdentityId::Reflection | IdentityId::ShiftSum => {
                for n in 0..=nmax {
                    for _ in 0..trials {
                        out.push(Instance { id, n, x: Some(random_point(&mut rng)) });
                    }
                    if id == IdentityId::Reflection && n % 2 == 1 {
                        out.push(Instance { id, n, x: Some(Rational::new(1, 2)) });
                    }
                }
            }
            IdentityId::HalfValue | IdentityId::Derivative => {
                out.extend((0..=nmax).map(|n| Instance { id, n, x: None }));
            }
            IdentityId::EvenEndpoints => {
                out.extend((2..=nmax).step_by(2).map(|n| Instance { id, n, x: None }));
            }
            IdentityId::GeneralizedBernoulli => {
                out.extend((0..=nmax).step_by(2).map(|n| Instance { id, n, x: None }));
            }
            IdentityId::BridgeChi4 | IdentityId::BridgeEulerBernoulli => {
                out.extend((1..=nmax + 1).map(|n| Instance { id, n, x: None }));
            }
        }
    }
    out
}

fn check(t: &SuiteTables, inst: &Instance) -> bool {
    let half = Rational::new(1, 2);
    let n = inst.n;
    match inst.id {
        IdentityId::Reflection => {
            let e = t.euler.polynomial(n);
            let x = inst.x.as_ref().expect("pointwise");
            if *x == half && n % 2 == 1 {
                return e.eval(&half).is_zero();
            }
            let lhs = e.eval(&(Rational::one() - x));
            let rhs = e.eval(x);
            if n.is_multiple_of(2) {
                lhs == rhs
            } else {
                lhs == -rhs
            }
        }
        IdentityId::HalfValue => {
            *t.euler.number(n) == Rational::pow2(n as i64) * t.euler.polynomial(n).eval(&half)
        }
        IdentityId::ShiftSum => {
            let e = t.euler.polynomial(n);
            let x = inst.x.as_ref().expect("pointwise");
            e.eval(&(x + Rational::one())) + e.eval(x) == Rational::from_integer(2) * x.pow(n as i32)
        }
        IdentityId::EvenEndpoints => {
            let e = t.euler.polynomial(n);
            e.eval(&Rational::zero()).is_zero() && e.eval(&Rational::one()).is_zero()
        }
        IdentityId::Derivative => {
            let d = t.euler.polynomial(n).derivative();
            if n == 0 {
                d.is_zero()
            } else {
                d == t.euler.polynomial(n - 1).scale(&Rational::from_integer(n as i64))
            }
        }
        IdentityId::GeneralizedBernoulli => {
            let k = (n / 2) as i64;
            let b = t.bernoulli.generalized_chi4(n + 1);
            let rhs = -b / (Rational::from_integer(2 * k + 1) * Rational::pow2(2 * k - 1));
            t.euler.polynomial(n).eval(&half) == rhs
        }
        IdentityId::BridgeChi4 => t.bernoulli.generalized_chi4(n) == t.chi4_series[n],
        IdentityId::BridgeEulerBernoulli => {
            let b = t.bernoulli.polynomial(n);
            let upper = b.compose_affine(&half, &half);
            let lower = b.compose_affine(&half, &Rational::zero());
            let rhs: RationalPolynomial =
                (&upper - &lower).scale(&(Rational::pow2(n as i64) / Rational::from_integer(n as i64)));
            *t.euler.polynomial(n - 1) == rhs
        }
    }
}

/// Runs every identity family exactly for `n ≤ nmax`, with `trials` seeded
/// random rational points for the pointwise families.
pub fn run_identity_suite(nmax: usize, trials: usize, seed: u64) -> Report {
    run_identity_suite_with(&SuiteTables::build(nmax), nmax, trials, seed, Execution::default())
}

/// Like [`run_identity_suite`] against caller-supplied tables. The report is
/// identical for either execution mode.
pub fn run_identity_suite_with(
    tables: &SuiteTables,
    nmax: usize,
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Report {
    let insts = instances(nmax, trials, seed);
    let ok = par::map(exec, &insts, |i| check(tables, i));
    let identities = IdentityId::ALL
        .iter()
        .map(|&id| {
            let mut count = 0u64;
            let mut first_failure = None;
            for (inst, &pass) in insts.iter().zip(&ok).filter(|(i, _)| i.id == id) {
                count += 1;
                if !pass && first_failure.is_none() {
                    first_failure = Some(FirstFailure { n: inst.n, x: inst.x.clone() });
                }
            }
            IdentityResult { identity_id: id, instances: count, passed: first_failure.is_none(), first_failure }
        })
        .collect();
    Report { nmax, trials, seed, identities }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let rep = run_identity_suite(10, 5, 42);
        assert!(rep.all_passed(), "{rep:#?}");
        assert_eq!(rep.identities.len(), 8);
        // 11 n-values × 5 trials + 5 odd midpoints
        assert_eq!(rep.get(IdentityId::Reflection).unwrap().instances, 60);
        assert_eq!(rep.get(IdentityId::EvenEndpoints).unwrap().instances, 5);
    }

    #[test]
    fn trivial_suite() {
        let rep = run_identity_suite(0, 1, 7);
        assert!(rep.all_passed());
        assert_eq!(rep.get(IdentityId::EvenEndpoints).unwrap().instances, 0);
    }

    #[test]
    fn corrupted_number_is_caught() {
        let mut t = SuiteTables::build(10);
        t.euler.replace_number(4, Rational::from_integer(6));
        let rep = run_identity_suite_with(&t, 10, 5, 42, Execution::Sequential);
        let r = rep.get(IdentityId::HalfValue).unwrap();
        assert!(!r.passed);
        assert_eq!(r.first_failure, Some(FirstFailure { n: 4, x: None }));
        assert_eq!(rep.failures(), 1);
    }

    #[test]
    fn corrupted_polynomial_is_caught_pointwise() {
        let mut t = SuiteTables::build(6);
        let bad = &t.euler.polynomial(3).clone() + &RationalPolynomial::monomial(Rational::new(1, 1000), 1);
        t.euler.replace_polynomial(3, bad);
        let rep = run_identity_suite_with(&t, 6, 4, 1, Execution::Sequential);
        let f = rep.get(IdentityId::ShiftSum).unwrap().first_failure.clone().unwrap();
        assert_eq!(f.n, 3);
        assert!(f.x.is_some());
    }

    #[test]
    fn deterministic_across_modes() {
        let t = SuiteTables::build(12);
        let a = run_identity_suite_with(&t, 12, 6, 99, Execution::Sequential);
        let b = run_identity_suite_with(&t, 12, 6, 99, Execution::Parallel);
        assert_eq!(a, b);
    }

    #[test]
    fn report_json_shape() {
        let mut t = SuiteTables::build(4);
        t.euler.replace_number(4, Rational::from_integer(6));
        let rep = run_identity_suite_with(&t, 4, 1, 3, Execution::Sequential);
        let v = serde_json::to_value(&rep).unwrap();
        let entry = &v["identities"][1];
        assert_eq!(entry["identity_id"], "half_value");
        assert_eq!(entry["passed"], false);
        assert_eq!(entry["first_failure"]["n"], 4);
        assert!(entry["first_failure"]["x"].is_null());
        assert!(v["identities"][0]["first_failure"].is_null());
    }
}
