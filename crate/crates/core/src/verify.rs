//! Batch verification of every identity in the crate over all partitions up to a size.
//!
//! Work is split into independent `(partition, k)` cases and fanned out with
//! [`par::map`]; results are sorted before reporting, so the report does not
//! depend on the execution mode.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bijections::lemma52_check;
use crate::cycpoly::{eval_at, eval_at_root, pochhammer, q_pochhammer, IntPoly, RootOfUnity};
use crate::error::Error;
use crate::par::{self, Execution};
use crate::partitions::Partition;
use crate::symfunc::{
    lemma46_rhs, mn_character, schur_at_root, schur_principal, stanley_series, theorem_rhs,
};
use crate::tableaux::{
    count_bst, enumerate_bst, enumerate_syt_tuples, fake_degree, littlewood_inverse,
    littlewood_map, sign_epsilon,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `f(xi, t)` is integral and equals `eps * sum t^stat`.
    MainIdentity,
    /// `(-1)^height` is constant on `BST(lambda, k)`.
    SignConstant,
    /// The Littlewood map is a bijection carrying descents and `height(B^1) = idx1`.
    QuotientDescents,
    /// Hook and content multisets split along the quotient.
    QuotientMultisets,
    /// Hook-content polynomial at a root of unity equals the quotient product, all `m` in range.
    SchurAtRoot,
    /// Both generating-function identities behind the composition bijection.
    CompositionSeries,
    /// Murnaghan-Nakayama on `(k^(n/k))` equals `eps * |BST|`, or 0.
    Characters,
    /// Pochhammer times the principal Schur series gives back `f(q, t)`; Pochhammer at a root.
    StanleySeries,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::MainIdentity,
        Check::SignConstant,
        Check::QuotientDescents,
        Check::QuotientMultisets,
        Check::SchurAtRoot,
        Check::CompositionSeries,
        Check::Characters,
        Check::StanleySeries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::MainIdentity => "main-identity",
            Check::SignConstant => "sign-constant",
            Check::QuotientDescents => "quotient-descents",
            Check::QuotientMultisets => "quotient-multisets",
            Check::SchurAtRoot => "schur-at-root",
            Check::CompositionSeries => "composition-series",
            Check::Characters => "characters",
            Check::StanleySeries => "stanley-series",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of one check on one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The check does not apply, e.g. a nonempty core.
    Skip,
    Fail(String),
}

impl Outcome {
    fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_n: usize,
    /// Restrict to one `k`; otherwise every divisor of `n`.
    pub k: Option<usize>,
    /// Truncation order of the power series checks.
    pub series_order: usize,
    /// Largest number of variables `m` in the root-of-unity Schur check.
    pub schur_max_m: usize,
    pub execution: Execution,
}

impl VerifyOptions {
    pub fn new(max_n: usize, series_order: usize, schur_max_m: usize) -> Self {
        VerifyOptions {
            max_n,
            k: None,
            series_order,
            schur_max_m,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub n: usize,
    pub partition: Partition,
    pub k: usize,
    pub check: Check,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: usize,
    pub skipped: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub max_n: usize,
    pub cases: usize,
    pub tallies: BTreeMap<Check, Tally>,
    /// Sorted by size, then partition, then `k`; the first one is a smallest counterexample.
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// One unit of work: a partition, a strip size, and whether per-partition checks run here.
#[derive(Debug, Clone)]
struct Case {
    lambda: Partition,
    k: usize,
    owns_partition_checks: bool,
}

fn cases(opts: &VerifyOptions) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=opts.max_n {
        for lambda in Partition::all(n) {
            let ks: Vec<usize> = (1..=n)
                .filter(|k| n % k == 0 && opts.k.is_none_or(|f| f == *k))
                .collect();
            for (i, &k) in ks.iter().enumerate() {
                out.push(Case {
                    lambda: lambda.clone(),
                    k,
                    owns_partition_checks: i == 0,
                });
            }
        }
    }
    out
}

pub fn run(opts: &VerifyOptions) -> Report {
    let cases = cases(opts);
    let results = par::map(&cases, opts.execution, |case| check_case(case, opts));
    let mut tallies: BTreeMap<Check, Tally> =
        Check::ALL.iter().map(|&c| (c, Tally::default())).collect();
    let mut failures = Vec::new();
    for (case, outcomes) in cases.iter().zip(results) {
        for (check, outcome) in outcomes {
            let tally = tallies.get_mut(&check).expect("every check is tallied");
            match outcome {
                Outcome::Pass => tally.passed += 1,
                Outcome::Skip => tally.skipped += 1,
                Outcome::Fail(detail) => {
                    tally.failed += 1;
                    failures.push(Failure {
                        n: case.lambda.size(),
                        partition: case.lambda.clone(),
                        k: case.k,
                        check,
                        detail,
                    });
                }
            }
        }
    }
    failures.sort();
    Report {
        max_n: opts.max_n,
        cases: cases.len(),
        tallies,
        failures,
    }
}

fn check_case(case: &Case, opts: &VerifyOptions) -> Vec<(Check, Outcome)> {
    let (lambda, k) = (&case.lambda, case.k);
    let mut out = vec![
        (Check::MainIdentity, main_identity(lambda, k)),
        (Check::SignConstant, sign_constant(lambda, k)),
        (Check::QuotientDescents, quotient_descents(lambda, k)),
        (Check::QuotientMultisets, quotient_multisets(lambda, k)),
        (Check::SchurAtRoot, schur_root(lambda, k, opts.schur_max_m)),
        (
            Check::CompositionSeries,
            composition_series(lambda, k, opts.series_order),
        ),
        (Check::Characters, characters(lambda, k)),
    ];
    if case.owns_partition_checks {
        out.push((Check::StanleySeries, stanley(lambda)));
    }
    out
}

fn guard(lambda: &Partition, k: usize) -> Option<Outcome> {
    match lambda.has_empty_core(k) {
        Ok(true) => None,
        Ok(false) => Some(Outcome::Skip),
        Err(e) => Some(Outcome::Fail(e.to_string())),
    }
}

pub fn main_identity(lambda: &Partition, k: usize) -> Outcome {
    if let Some(o) = guard(lambda, k) {
        return o;
    }
    let eval = match eval_at_root(&fake_degree(lambda), k) {
        Ok(e) => e,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let Some(lhs) = eval.as_integer_poly() else {
        return Outcome::Fail(format!("f(xi, t) = {eval} is not integral"));
    };
    match theorem_rhs(lambda, k) {
        Ok(rhs) => Outcome::from_bool(lhs == rhs, || {
            format!("f(xi, t) = {lhs} but tableau side is {rhs}")
        }),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

pub fn sign_constant(lambda: &Partition, k: usize) -> Outcome {
    let mut parities = enumerate_bst(lambda, k).map(|b| b.height() % 2);
    let Some(first) = parities.next() else {
        return Outcome::Skip;
    };
    Outcome::from_bool(parities.all(|p| p == first), || {
        "height parity varies".into()
    })
}

pub fn quotient_descents(lambda: &Partition, k: usize) -> Outcome {
    if let Some(o) = guard(lambda, k) {
        return o;
    }
    let quotient = match lambda.k_quotient(k) {
        Ok(q) => q,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let mut seen = 0u128;
    for b in enumerate_bst(lambda, k) {
        seen += 1;
        let t = match littlewood_map(&b) {
            Ok(t) => t,
            Err(e) => return Outcome::Fail(format!("{b:?}: {e}")),
        };
        if t.shapes() != &quotient {
            return Outcome::Fail(format!("{b:?} maps to shapes {}", t.shapes()));
        }
        if t.descents() != b.descents() {
            return Outcome::Fail(format!(
                "{b:?}: DES {:?} vs {:?}",
                b.descents().set(),
                t.descents().set()
            ));
        }
        if t.idx1() != Some(b.first_height()) {
            return Outcome::Fail(format!(
                "{b:?}: height(B^1) = {} but idx1 = {:?}",
                b.first_height(),
                t.idx1()
            ));
        }
        match littlewood_inverse(&t, k) {
            Ok(back) if back == b => {}
            Ok(back) => return Outcome::Fail(format!("{b:?} comes back as {back:?}")),
            Err(e) => return Outcome::Fail(format!("{b:?}: {e}")),
        }
    }
    let tuples = enumerate_syt_tuples(&quotient).count() as u128;
    Outcome::from_bool(tuples == seen, || {
        format!("{seen} tableaux but {tuples} tuples")
    })
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort_unstable();
    v
}

pub fn quotient_multisets(lambda: &Partition, k: usize) -> Outcome {
    if let Some(o) = guard(lambda, k) {
        return o;
    }
    let quotient = match lambda.k_quotient(k) {
        Ok(q) => q,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let hooks = sorted(
        lambda
            .hook_multiset()
            .into_iter()
            .filter(|h| h % k == 0)
            .map(|h| h / k)
            .collect(),
    );
    let quotient_hooks = sorted(
        quotient
            .components()
            .iter()
            .flat_map(Partition::hook_multiset)
            .collect(),
    );
    if hooks != quotient_hooks {
        return Outcome::Fail(format!(
            "hooks/k {hooks:?} vs quotient hooks {quotient_hooks:?}"
        ));
    }
    let ki = k as i64;
    for r in 0..ki {
        let lhs = sorted(
            lambda
                .content_multiset()
                .into_iter()
                .filter(|c| (c + r).rem_euclid(ki) == 0)
                .map(|c| (c + r) / ki)
                .collect(),
        );
        let rhs = sorted(
            quotient
                .components()
                .iter()
                .enumerate()
                .flat_map(|(i, p)| {
                    let shift = i64::from(i as i64 >= ki - r);
                    p.content_multiset().into_iter().map(move |c| c + shift)
                })
                .collect(),
        );
        if lhs != rhs {
            return Outcome::Fail(format!("r = {r}: contents {lhs:?} vs {rhs:?}"));
        }
    }
    Outcome::Pass
}

pub fn schur_root(lambda: &Partition, k: usize, max_m: usize) -> Outcome {
    if let Some(o) = guard(lambda, k) {
        return o;
    }
    let root = match RootOfUnity::new(k) {
        Ok(r) => r,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    for m in 0..=max_m {
        let direct = root.eval(&schur_principal(lambda, m));
        match schur_at_root(lambda, k, m) {
            Ok(v) if direct == root.from_int(v.clone()) => {}
            Ok(v) => return Outcome::Fail(format!("m = {m}: reduction {direct} vs formula {v}")),
            Err(e) => return Outcome::Fail(e.to_string()),
        }
    }
    Outcome::Pass
}

pub fn composition_series(lambda: &Partition, k: usize, order: usize) -> Outcome {
    if let Some(o) = guard(lambda, k) {
        return o;
    }
    let n = lambda.size();
    let quotient = match lambda.k_quotient(k) {
        Ok(q) => q,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    if !lemma52_check(&quotient, k, order) {
        return Outcome::Fail(format!("tuple series differ for quotient {quotient}"));
    }
    let Some(f) = eval_at_root(&fake_degree(lambda), k)
        .ok()
        .and_then(|e| e.as_integer_poly())
    else {
        return Outcome::Fail("f(xi, t) is not integral".into());
    };
    let inv = IntPoly::one_minus_power(k)
        .pow(n / k - 1)
        .series_inverse(order)
        .expect("constant term is 1");
    let lhs = f.mul_truncated(&inv, order);
    match lemma46_rhs(lambda, k, order) {
        Ok(rhs) => Outcome::from_bool(lhs == rhs, || format!("{lhs} vs {rhs}")),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

pub fn characters(lambda: &Partition, k: usize) -> Outcome {
    let n = lambda.size();
    let rho = match Partition::new(vec![k; n / k]) {
        Ok(r) => r,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let chi = match mn_character(lambda, &rho) {
        Ok(c) => c,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let expected = match sign_epsilon(lambda, k) {
        Ok(eps) => BigInt::from(eps) * BigInt::from(count_bst(lambda, k)),
        Err(Error::NonEmptyCore { .. }) => BigInt::zero(),
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    Outcome::from_bool(chi == expected, || {
        format!("chi = {chi}, tableaux give {expected}")
    })
}

pub fn stanley(lambda: &Partition) -> Outcome {
    let n = lambda.size();
    let lhs = q_pochhammer(n + 1).mul_truncated_t(&stanley_series(lambda, n), n);
    let f = fake_degree(lambda);
    if lhs != f {
        return Outcome::Fail(format!("Pochhammer times series is {lhs}, f is {f}"));
    }
    pochhammer_at_roots(n)
}

/// `(t; xi)_(n+1) = (1 - t)(1 - t^k)^(n/k)` for every `k | n`.
pub fn pochhammer_at_roots(n: usize) -> Outcome {
    let symbolic = q_pochhammer(n + 1);
    for k in (1..=n).filter(|k| n.is_multiple_of(*k)) {
        let root = RootOfUnity::new(k).expect("k is positive");
        let lifted = eval_at(&symbolic, &root).as_integer_poly();
        let closed = pochhammer(k, n).expect("k divides n");
        if lifted.as_ref() != Some(&closed) {
            return Outcome::Fail(format!("k = {k}: {lifted:?} vs {closed}"));
        }
    }
    Outcome::Pass
}
