//! Schur function specialisations, Murnaghan-Nakayama characters and the
//! series identities linking them to fake degrees.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cycpoly::{BiPoly, IntPoly};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::{enumerate_bst, enumerate_ssyt_tuples, sign_epsilon};

/// `chi^lambda(rho)` by the Murnaghan-Nakayama rule.
///
/// Works on the beta set of `lambda`: removing a `r`-strip slides a bead from
/// position `p` to the empty position `p - r`, with sign `(-1)^(beads jumped)`.
/// Parts of `rho` are consumed from the last one.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    fn go(
        beads: &[usize],
        rho: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
    ) -> BigInt {
        let Some((&r, rest)) = rho.split_last() else {
            return BigInt::one();
        };
        let key = (beads.to_vec(), rho.len());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (i, &p) in beads.iter().enumerate() {
            let Some(target) = p.checked_sub(r) else {
                continue;
            };
            let j = beads.partition_point(|&b| b < target);
            if beads.get(j) == Some(&target) {
                continue;
            }
            // beads[j..i] lie strictly between target and p
            let jumped = i - j;
            let mut next = beads.to_vec();
            next.remove(i);
            next.insert(j, target);
            let sub = go(&next, rest, memo);
            if jumped % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        memo.insert(key, total.clone());
        total
    }
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: rho.size(),
        });
    }
    let mut beads = lambda.beta_set(lambda.len());
    beads.reverse();
    Ok(go(&beads, rho.parts(), &mut HashMap::new()))
}

/// Number of semistandard tableaux of shape `lambda` with entries at most `m`.
pub fn ssyt_count(lambda: &Partition, m: usize) -> BigInt {
    let mut num = BigInt::one();
    for c in lambda.content_multiset() {
        let factor = m as i64 + c;
        if factor <= 0 {
            return BigInt::zero();
        }
        num *= factor;
    }
    let den: BigInt = lambda
        .hook_multiset()
        .into_iter()
        .map(BigInt::from)
        .product();
    num / den
}

/// `s_lambda(1, q, ..., q^(m-1))` by the hook-content formula.
pub fn schur_principal(lambda: &Partition, m: usize) -> IntPoly {
    let mut num = IntPoly::one();
    for c in lambda.content_multiset() {
        let e = m as i64 + c;
        if e <= 0 {
            return IntPoly::zero();
        }
        num = &num * &IntPoly::one_minus_power(e as usize);
    }
    for h in lambda.hook_multiset() {
        num = num
            .div_exact(&IntPoly::one_minus_power(h))
            .expect("hook-content quotient is a polynomial");
    }
    &num * &IntPoly::monomial(1, lambda.b_weight())
}

/// `s_lambda(1, xi, ..., xi^(m-1))` for a primitive `k`-th root `xi`, via the `k`-quotient.
pub fn schur_at_root(lambda: &Partition, k: usize, m: usize) -> Result<BigInt> {
    let eps = sign_epsilon(lambda, k)?;
    let quotient = lambda.k_quotient(k)?;
    let (l, r) = (m / k, m % k);
    let mut value = BigInt::from(eps);
    for (i, component) in quotient.components().iter().enumerate() {
        let vars = if i < k - r { l } else { l + 1 };
        value *= ssyt_count(component, vars);
    }
    Ok(value)
}

/// `sum_{m=0}^{order} t^m s_lambda(1, q, ..., q^m)`.
pub fn stanley_series(lambda: &Partition, order: usize) -> BiPoly {
    let mut out = BiPoly::zero();
    for m in 0..=order {
        out = &out + &BiPoly::from_q_poly(&schur_principal(lambda, m + 1), m);
    }
    out
}

/// `eps(lambda, k) * sum_{B in BST(lambda, k)} t^stat(B)`.
pub fn theorem_rhs(lambda: &Partition, k: usize) -> Result<IntPoly> {
    let eps = sign_epsilon(lambda, k)?;
    let mut sum = IntPoly::zero();
    for b in enumerate_bst(lambda, k) {
        sum += &IntPoly::monomial(1, b.stat());
    }
    Ok(sum.scale(&eps.into()))
}

/// `eps(lambda, k) * sum t^(k(max - 1) + idx1)` over semistandard tuples on the
/// `k`-quotient that contain a 1, truncated at `t^order`.
///
/// The empty partition gets the empty product, 1.
pub fn lemma46_rhs(lambda: &Partition, k: usize, order: usize) -> Result<IntPoly> {
    let eps = sign_epsilon(lambda, k)?;
    if lambda.is_empty() {
        return Ok(IntPoly::one());
    }
    let quotient = lambda.k_quotient(k)?;
    Ok(ssyt_tuple_series(&quotient, k, order).scale(&eps.into()))
}

/// `sum t^(k(max - 1) + idx1)` over semistandard tuples on `shapes` containing a 1, up to `t^order`.
pub(crate) fn ssyt_tuple_series(
    shapes: &crate::partitions::PartitionTuple,
    k: usize,
    order: usize,
) -> IntPoly {
    let mut coeffs = vec![0u64; order + 1];
    enumerate_ssyt_tuples(shapes, order / k + 1).for_each_stat(|max, idx1| {
        let e = k * (max - 1) + idx1;
        if e <= order {
            coeffs[e] += 1;
        }
    });
    IntPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycpoly::{eval_at_root, pochhammer, q_pochhammer, RootOfUnity};
    use crate::partitions::PartitionTuple;
    use crate::tableaux::{count_bst, fake_degree, SemistandardTableauTuple};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Weighted count of semistandard fillings with entries `<= m`, weight `q^(sum of entry - 1)`.
    fn brute_schur(lambda: &Partition, m: usize) -> IntPoly {
        if lambda.is_empty() {
            return IntPoly::one();
        }
        if m == 0 {
            return IntPoly::zero();
        }
        let shapes = PartitionTuple::new(vec![lambda.clone()]);
        let mut out = IntPoly::zero();
        // every filling either uses a 1 or is a shifted filling with entries in 2..=m
        let mut add = |t: &SemistandardTableauTuple, shift: usize| {
            let w: usize = t
                .entries()
                .iter()
                .flatten()
                .flatten()
                .map(|v| v - 1 + shift)
                .sum();
            out += &IntPoly::monomial(1, w);
        };
        for shift in 0..m {
            for t in enumerate_ssyt_tuples(&shapes, m - shift) {
                add(&t, shift);
            }
        }
        out
    }

    #[test]
    fn mn_examples() {
        let l = p("2,2,2");
        assert_eq!(mn_character(&l, &p("2,2,2")).unwrap(), 3.into());
        assert_eq!(mn_character(&l, &p("3,3")).unwrap(), 2.into());
        assert_eq!(mn_character(&l, &p("1,1,1,1,1,1")).unwrap(), 5.into());
        assert_eq!(mn_character(&l, &p("6")).unwrap(), 0.into());
        assert_eq!(mn_character(&p("5"), &p("3,1,1")).unwrap(), 1.into());
        assert_eq!(mn_character(&p("1,1,1"), &p("2,1")).unwrap(), (-1).into());
        assert!(mn_character(&l, &p("5")).is_err());
        assert_eq!(
            mn_character(&Partition::empty(), &Partition::empty()).unwrap(),
            1.into()
        );
    }

    #[test]
    fn mn_column_orthogonality_for_s4() {
        // sum over lambda of chi(rho)^2 = |centralizer(rho)|
        let centralizers = [
            ("4", 4),
            ("3,1", 3),
            ("2,2", 8),
            ("2,1,1", 4),
            ("1,1,1,1", 24),
        ];
        for (rho, z) in centralizers {
            let s: BigInt = Partition::all(4)
                .map(|l| {
                    let c = mn_character(&l, &p(rho)).unwrap();
                    &c * &c
                })
                .sum();
            assert_eq!(s, z.into(), "rho = {rho}");
        }
    }

    #[test]
    fn ssyt_count_examples() {
        for m in 0..6 {
            assert_eq!(ssyt_count(&p("1"), m), m.into());
        }
        assert_eq!(ssyt_count(&p("2,2,2"), 2), 0.into());
        assert_eq!(ssyt_count(&p("2,2,2"), 3), 1.into());
        assert_eq!(ssyt_count(&p("2,1"), 3), 8.into());
        assert_eq!(ssyt_count(&Partition::empty(), 0), 1.into());
    }

    #[test]
    fn schur_principal_examples() {
        assert_eq!(
            schur_principal(&p("1"), 4).to_string_in("q"),
            "q^3 + q^2 + q + 1"
        );
        assert!(schur_principal(&p("2,1"), 0).is_zero());
        assert_eq!(schur_principal(&p("2,2,2"), 3), IntPoly::monomial(1, 6));
        assert_eq!(schur_principal(&Partition::empty(), 0), IntPoly::one());
    }

    #[test]
    fn schur_principal_matches_brute_force() {
        for n in 0..=5 {
            for lambda in Partition::all(n) {
                for m in 0..=4 {
                    let s = schur_principal(&lambda, m);
                    assert_eq!(s, brute_schur(&lambda, m), "{lambda:?} m={m}");
                    assert_eq!(s.eval(&BigInt::one()), ssyt_count(&lambda, m));
                }
            }
        }
    }

    #[test]
    fn schur_at_root_examples() {
        let l = p("2,2,2");
        assert_eq!(schur_at_root(&l, 3, 3).unwrap(), 1.into());
        for k in [1, 2, 3] {
            assert_eq!(schur_at_root(&l, k, 0).unwrap(), 0.into());
        }
        let root = RootOfUnity::new(2).unwrap();
        let direct = root.eval(&schur_principal(&l, 2));
        assert_eq!(direct, root.from_int(schur_at_root(&l, 2, 2).unwrap()));
        assert!(schur_at_root(&l, 6, 2).is_err());
    }

    #[test]
    fn schur_at_root_all_residues() {
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                for k in 2..=4 {
                    if !lambda.has_empty_core(k).unwrap() {
                        continue;
                    }
                    let root = RootOfUnity::new(k).unwrap();
                    for m in 0..=7 {
                        let direct = root.eval(&schur_principal(&lambda, m));
                        let formula = schur_at_root(&lambda, k, m).unwrap();
                        assert_eq!(direct, root.from_int(formula), "{lambda:?} k={k} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn stanley_series_examples() {
        assert_eq!(
            stanley_series(&p("1"), 2).to_string(),
            "(q^2+q+1)*t^2 + (q+1)*t + 1"
        );
        let series = stanley_series(&Partition::empty(), 3);
        assert_eq!(
            series,
            BiPoly::from_t_poly(&IntPoly::from_coeffs([1, 1, 1, 1]))
        );
        // f / (t;q)_7 for 222, expanded with a truncated inverse
        let f = fake_degree(&p("2,2,2"));
        let poch = q_pochhammer(7);
        let product = poch.mul_truncated_t(&stanley_series(&p("2,2,2"), 6), 6);
        assert_eq!(product, f);
    }

    #[test]
    fn stanley_identity_small() {
        for n in 0..=6 {
            for lambda in Partition::all(n) {
                let lhs = q_pochhammer(n + 1).mul_truncated_t(&stanley_series(&lambda, n), n);
                assert_eq!(lhs, fake_degree(&lambda), "{lambda:?}");
            }
        }
    }

    #[test]
    fn theorem_rhs_examples() {
        assert_eq!(
            theorem_rhs(&p("2,2,2"), 2).unwrap().to_string(),
            "t^4 + t^3 + t^2"
        );
        assert_eq!(
            theorem_rhs(&p("2,2,2"), 3).unwrap().to_string(),
            "t^4 + t^2"
        );
        for n in 1..=6 {
            assert_eq!(theorem_rhs(&p(&n.to_string()), n).unwrap(), IntPoly::one());
        }
        assert!(matches!(
            theorem_rhs(&p("2,2,2"), 6),
            Err(Error::NonEmptyCore { .. })
        ));
    }

    #[test]
    fn theorem_holds_small() {
        for n in 1..=7 {
            for lambda in Partition::all(n) {
                let f = fake_degree(&lambda);
                for k in (1..=n).filter(|k| n % k == 0) {
                    let eval = eval_at_root(&f, k).unwrap();
                    match theorem_rhs(&lambda, k) {
                        Ok(rhs) => {
                            assert_eq!(eval.as_integer_poly(), Some(rhs), "{lambda:?} k={k}")
                        }
                        Err(Error::NonEmptyCore { .. }) => {
                            assert_eq!(
                                mn_character(&lambda, &Partition::new(vec![k; n / k]).unwrap())
                                    .unwrap(),
                                0.into()
                            )
                        }
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn lemma46_examples() {
        // f(xi_3, t) / (1 - t^3) for 222
        let rhs = lemma46_rhs(&p("2,2,2"), 3, 10).unwrap();
        let inv = IntPoly::one_minus_power(3).series_inverse(10).unwrap();
        let expected = IntPoly::from_coeffs([0, 0, 1, 0, 1]).mul_truncated(&inv, 10);
        assert_eq!(rhs, expected);
        assert_eq!(
            lemma46_rhs(&Partition::empty(), 2, 5).unwrap(),
            IntPoly::one()
        );
        // a single cell holding a 1 is the only tuple
        assert_eq!(lemma46_rhs(&p("1"), 1, 4).unwrap(), IntPoly::one());
        assert_eq!(
            lemma46_rhs(&p("1,1"), 2, 4).unwrap(),
            IntPoly::from_coeffs([0, -1])
        );
    }

    #[test]
    fn lemma46_identity_small() {
        let order = 8;
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                for k in (1..=n).filter(|k| n % k == 0) {
                    let Ok(rhs) = lemma46_rhs(&lambda, k, order) else {
                        continue;
                    };
                    let f = eval_at_root(&fake_degree(&lambda), k)
                        .unwrap()
                        .as_integer_poly()
                        .unwrap();
                    let inv = IntPoly::one_minus_power(k)
                        .pow(n / k - 1)
                        .series_inverse(order)
                        .unwrap();
                    assert_eq!(f.mul_truncated(&inv, order), rhs, "{lambda:?} k={k}");
                    let via_pochhammer = pochhammer(k, n).unwrap();
                    assert_eq!(via_pochhammer.coeff(0), BigInt::one());
                }
            }
        }
    }

    #[test]
    fn mn_matches_bst_count() {
        for n in 1..=8 {
            for lambda in Partition::all(n) {
                for k in (1..=n).filter(|k| n % k == 0) {
                    let rho = Partition::new(vec![k; n / k]).unwrap();
                    let chi = mn_character(&lambda, &rho).unwrap();
                    let expected = match sign_epsilon(&lambda, k) {
                        Ok(eps) => BigInt::from(eps) * BigInt::from(count_bst(&lambda, k)),
                        Err(_) => BigInt::zero(),
                    };
                    assert_eq!(chi, expected, "{lambda:?} k={k}");
                }
            }
        }
    }
}
