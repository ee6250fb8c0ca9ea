//! The map `phi` from (weak composition, standard tuple) pairs to semistandard
//! tuples, its inverse, and the generating-function identity it yields.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cycpoly::IntPoly;
use crate::error::{Error, Result};
use crate::partitions::PartitionTuple;
use crate::symfunc::ssyt_tuple_series;
use crate::tableaux::{
    enumerate_ssyt_tuples, enumerate_syt_tuples, SemistandardTableauTuple, StandardTableauTuple,
    TupleCell,
};

/// Fixed-length sequence of nonnegative integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition {
    parts: Vec<usize>,
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition { parts }
    }

    pub fn zeros(len: usize) -> Self {
        WeakComposition {
            parts: vec![0; len],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|alpha|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Every composition of length `len` with weight at most `max_weight`, in lexicographic order.
    pub fn all(len: usize, max_weight: usize) -> Vec<WeakComposition> {
        fn go(len: usize, budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
            if prefix.len() == len {
                out.push(WeakComposition::new(prefix.clone()));
                return;
            }
            for a in 0..=budget {
                prefix.push(a);
                go(len, budget - a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(len, max_weight, &mut Vec::with_capacity(len), &mut out);
        out
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn blank_entries(shapes: &PartitionTuple) -> Vec<Vec<Vec<usize>>> {
    shapes
        .components()
        .iter()
        .map(|p| p.parts().iter().map(|&len| vec![0; len]).collect())
        .collect()
}

/// Cell `x_s` gets `1 + d_s + alpha_1 + ... + alpha_(s-1)`, where `d_s` counts descents below `s`.
pub fn phi(alpha: &WeakComposition, t: &StandardTableauTuple) -> Result<SemistandardTableauTuple> {
    let n = t.size();
    if n == 0 || alpha.len() != n - 1 {
        return Err(Error::SizeMismatch {
            expected: n.saturating_sub(1),
            found: alpha.len(),
        });
    }
    let d = t.descents().prefix_counts(n);
    let mut entries = blank_entries(t.shapes());
    let mut partial = 0;
    for s in 1..=n {
        if s > 1 {
            partial += alpha.parts()[s - 2];
        }
        let x = t.position(s);
        entries[x.component][x.cell.row - 1][x.cell.col - 1] = 1 + d[s - 1] + partial;
    }
    SemistandardTableauTuple::new(t.shapes().clone(), entries)
        .map_err(|e| Error::Invariant(format!("phi produced an invalid tuple: {e}")))
}

/// Recovers `(alpha, T)` from `phi(alpha, T)`.
///
/// Cells are labelled in increasing order of their entry; equal entries are
/// labelled by increasing content, then component, which is the only order
/// creating no descent among them.
pub fn phi_inverse(
    s: &SemistandardTableauTuple,
) -> Result<(WeakComposition, StandardTableauTuple)> {
    let mut cells: Vec<(usize, i64, usize, TupleCell)> = s
        .cells()
        .map(|tc| (s.entry(tc), tc.content(), tc.component, tc))
        .collect();
    cells.sort_unstable_by_key(|&(v, c, comp, _)| (v, c, comp));
    let mut entries = blank_entries(s.shapes());
    for (label, &(_, _, _, tc)) in cells.iter().enumerate() {
        entries[tc.component][tc.cell.row - 1][tc.cell.col - 1] = label + 1;
    }
    let t = StandardTableauTuple::new(s.shapes().clone(), entries)
        .map_err(|e| Error::Invariant(format!("labelling equal entries failed: {e}")))?;
    let des = t.descents();
    let n = cells.len();
    if let Some(i) = (1..n).find(|&i| des.contains(i) && cells[i - 1].0 == cells[i].0) {
        return Err(Error::Invariant(format!(
            "equal entries {} ordered with a descent at {i}",
            cells[i].0
        )));
    }
    let d = des.prefix_counts(n);
    let base: Vec<i64> = (0..n).map(|i| cells[i].0 as i64 - d[i] as i64).collect();
    if base.first() != Some(&1) {
        return Err(Error::Invariant("smallest entry is not 1".into()));
    }
    let parts = base
        .windows(2)
        .map(|w| {
            usize::try_from(w[1] - w[0])
                .map_err(|_| Error::Invariant("negative composition part".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((WeakComposition::new(parts), t))
}

/// Exhaustively checks that `phi` maps pairs with `|alpha| + |DES(T)| <= bound`
/// bijectively onto tuples with `max <= bound + 1`, transporting the weight and `idx1`.
pub fn check_phi_bijection(shapes: &PartitionTuple, bound: usize) -> Result<usize> {
    let n = shapes.size();
    if n == 0 {
        return Ok(0);
    }
    let fail = |msg: String| Err(Error::Invariant(msg));
    let mut images = HashSet::new();
    for t in enumerate_syt_tuples(shapes) {
        let des = t.descents().count();
        if des > bound {
            continue;
        }
        for alpha in WeakComposition::all(n - 1, bound - des) {
            let image = phi(&alpha, &t)?;
            if image.max_entry() != alpha.weight() + des + 1 {
                return fail(format!(
                    "max entry of phi({alpha}, {t:?}) is {}",
                    image.max_entry()
                ));
            }
            if Some(image.idx1()) != t.idx1() {
                return fail(format!("idx1 not preserved by phi({alpha}, {t:?})"));
            }
            let (a2, t2) = phi_inverse(&image)?;
            if a2 != alpha || t2 != t {
                return fail(format!("phi_inverse(phi({alpha}, {t:?})) = ({a2}, {t2:?})"));
            }
            if !images.insert(image) {
                return fail(format!("phi is not injective at ({alpha}, {t:?})"));
            }
        }
    }
    let targets = enumerate_ssyt_tuples(shapes, bound + 1).count();
    if targets != images.len() {
        return fail(format!(
            "{} images but {targets} semistandard tuples",
            images.len()
        ));
    }
    Ok(targets)
}

/// `sum_T t^(k|DES(T)| + idx1(T)) / (1 - t^k)^(|shapes| - 1)` equals
/// `sum t^(k(max - 1) + idx1)` over semistandard tuples, up to `t^order`.
///
/// False when `shapes` does not have `k` components or has no cells.
pub fn lemma52_check(shapes: &PartitionTuple, k: usize, order: usize) -> bool {
    let n = shapes.size();
    if shapes.k() != k || k == 0 || n == 0 {
        return false;
    }
    let mut syt_side = IntPoly::zero();
    for t in enumerate_syt_tuples(shapes) {
        let e = k * t.descents().count() + t.idx1().expect("nonempty");
        syt_side += &IntPoly::monomial(1, e);
    }
    let inv = IntPoly::one_minus_power(k)
        .pow(n - 1)
        .series_inverse(order)
        .expect("constant term is 1");
    syt_side.mul_truncated(&inv, order) == ssyt_tuple_series(shapes, k, order)
}
