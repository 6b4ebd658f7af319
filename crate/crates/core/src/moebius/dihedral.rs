use std::fmt;

use serde::{Serialize, Serializer};

use super::projective::{arc_contains, ProjPoint};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Cyclic monotonicity of a finite sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Monotonicity {
    CyclicallyIncreasing,
    CyclicallyDecreasing,
    NotMonotonous,
}

/// Whether some rotation of `seq` is strictly increasing (or decreasing).
pub fn classify_cycle<S: PartialOrd>(seq: &[S]) -> Monotonicity {
    let n = seq.len();
    if n < 3 {
        return Monotonicity::NotMonotonous;
    }
    let (mut ups, mut downs) = (0usize, 0usize);
    for i in 0..n {
        let (a, b) = (&seq[i], &seq[(i + 1) % n]);
        if a < b {
            ups += 1;
        } else if a > b {
            downs += 1;
        } else {
            return Monotonicity::NotMonotonous;
        }
    }
    match (ups, downs) {
        (_, 1) => Monotonicity::CyclicallyIncreasing,
        (1, _) => Monotonicity::CyclicallyDecreasing,
        _ => Monotonicity::NotMonotonous,
    }
}

/// Roots in a cyclically monotonous order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootCycle<S> {
    pub roots: Vec<S>,
    pub monotonicity: Monotonicity,
}

impl<S: Scalar> RootCycle<S> {
    pub fn new(roots: Vec<S>) -> Result<Self> {
        match classify_cycle(&roots) {
            Monotonicity::NotMonotonous => Err(Error::NotMonotonous),
            monotonicity => Ok(RootCycle {
                roots,
                monotonicity,
            }),
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_increasing(&self) -> bool {
        self.monotonicity == Monotonicity::CyclicallyIncreasing
    }

    /// 1-based access, matching the `x_1..x_N` labels.
    pub fn x(&self, i: usize) -> &S {
        &self.roots[i - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DihedralKind {
    Tau,
    Eta,
}

/// `τ_k` or `η_k` acting on sequences of length `n`.
///
/// `τ_k(y)_i = y_{i+k}` and `η_k(y)_i = y_{k+1-i}`, indices mod `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub kind: DihedralKind,
    pub k: usize,
    pub n: usize,
}

impl DihedralElement {
    pub fn tau(k: usize, n: usize) -> Result<Self> {
        Self::checked(DihedralKind::Tau, k, n)
    }

    pub fn eta(k: usize, n: usize) -> Result<Self> {
        Self::checked(DihedralKind::Eta, k, n)
    }

    fn checked(kind: DihedralKind, k: usize, n: usize) -> Result<Self> {
        if n == 0 || k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                index: k as i64,
                len: n,
            });
        }
        Ok(DihedralElement { kind, k, n })
    }

    pub fn identity(n: usize) -> Self {
        DihedralElement {
            kind: DihedralKind::Tau,
            k: n,
            n,
        }
    }

    /// `τ_1..τ_n, η_1..η_n`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut v: Vec<Self> = (1..=n)
            .map(|k| DihedralElement {
                kind: DihedralKind::Tau,
                k,
                n,
            })
            .collect();
        v.extend((1..=n).map(|k| DihedralElement {
            kind: DihedralKind::Eta,
            k,
            n,
        }));
        v
    }

    /// Source index (0-based) feeding output position `i` (0-based).
    pub fn source(&self, i: usize) -> usize {
        let n = self.n;
        match self.kind {
            DihedralKind::Tau => (i + self.k) % n,
            DihedralKind::Eta => (self.k + 2 * n - 1 - i) % n,
        }
    }

    pub fn perm(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.source(i)).collect()
    }

    pub fn apply<T: Clone>(&self, seq: &[T]) -> Result<Vec<T>> {
        if seq.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "{} acts on length {}, got {}",
                self,
                self.n,
                seq.len()
            )));
        }
        Ok((0..self.n).map(|i| seq[self.source(i)].clone()).collect())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "composing elements of different D_N");
        let target: Vec<usize> = (0..self.n).map(|i| other.source(self.source(i))).collect();
        Self::all(self.n)
            .into_iter()
            .find(|g| g.perm() == target)
            .expect("D_N is closed under composition")
    }

    pub fn inverse(&self) -> Self {
        let id = Self::identity(self.n);
        Self::all(self.n)
            .into_iter()
            .find(|g| self.compose(g) == id)
            .expect("every element of D_N is invertible")
    }

    pub fn reverses_orientation(&self) -> bool {
        self.kind == DihedralKind::Eta
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            DihedralKind::Tau => "tau",
            DihedralKind::Eta => "eta",
        };
        write!(f, "{name}_{}", self.k)
    }
}

impl Serialize for DihedralElement {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        s.collect_str(self)
    }
}

/// The unique cyclically increasing relabeling of `roots` with `x` on the
/// arc `L(x_N, x_1)`, together with the group element producing it.
pub fn x_canonical<S: Scalar>(
    roots: &[S],
    x: &ProjPoint<S>,
) -> Result<(RootCycle<S>, DihedralElement)> {
    if classify_cycle(roots) == Monotonicity::NotMonotonous {
        return Err(Error::NotMonotonous);
    }
    if let ProjPoint::Finite(v) = x {
        if roots.contains(v) {
            return Err(Error::PointOnRoot(format!("{:?}", v)));
        }
    }
    let n = roots.len();
    for g in DihedralElement::all(n) {
        let y = g.apply(roots)?;
        if classify_cycle(&y) != Monotonicity::CyclicallyIncreasing {
            continue;
        }
        if arc_contains(&y[n - 1], &y[0], x)? {
            return Ok((RootCycle::new(y)?, g));
        }
    }
    unreachable!("the increasing arcs L(y_N, y_1) cover the projective line minus the roots")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, Rational};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify_cycle(&[3, 4, 1, 2]),
            Monotonicity::CyclicallyIncreasing
        );
        assert_eq!(
            classify_cycle(&[2, 1, 4, 3]),
            Monotonicity::CyclicallyDecreasing
        );
        assert_eq!(classify_cycle(&[1, 3, 2, 4]), Monotonicity::NotMonotonous);
        assert_eq!(classify_cycle(&[1, 1, 2]), Monotonicity::NotMonotonous);
    }

    #[test]
    fn tau_and_eta() {
        let y = [1, 2, 3, 4, 5];
        assert_eq!(DihedralElement::tau(5, 5).unwrap().apply(&y).unwrap(), y);
        assert_eq!(
            DihedralElement::tau(2, 5).unwrap().apply(&y).unwrap(),
            [3, 4, 5, 1, 2]
        );
        assert_eq!(
            DihedralElement::eta(1, 5).unwrap().apply(&y).unwrap(),
            [1, 5, 4, 3, 2]
        );
        assert_eq!(
            DihedralElement::eta(5, 5).unwrap().apply(&y).unwrap(),
            [5, 4, 3, 2, 1]
        );
        assert!(DihedralElement::tau(0, 5).is_err());
        assert!(DihedralElement::eta(6, 5).is_err());
    }

    #[test]
    fn group_has_2n_elements() {
        for n in 3..9 {
            let all = DihedralElement::all(n);
            let mut perms: Vec<Vec<usize>> = all.iter().map(|g| g.perm()).collect();
            perms.sort();
            perms.dedup();
            assert_eq!(perms.len(), 2 * n);
            for g in &all {
                for h in &all {
                    let gh = g.compose(h);
                    let seq: Vec<usize> = (0..n).collect();
                    assert_eq!(
                        gh.apply(&seq).unwrap(),
                        g.apply(&h.apply(&seq).unwrap()).unwrap()
                    );
                }
                assert_eq!(g.compose(&g.inverse()), DihedralElement::identity(n));
            }
        }
    }

    #[test]
    fn canonical_labeling() {
        let roots = r(&[1, 2, 3, 4]);
        let (c, g) = x_canonical(&roots, &ProjPoint::Finite(rat(6, 1))).unwrap();
        assert_eq!(c.roots, roots);
        assert_eq!(g, DihedralElement::identity(4));

        let (c, g) = x_canonical(&roots, &ProjPoint::Finite(rat(5, 2))).unwrap();
        assert_eq!(c.roots, r(&[3, 4, 1, 2]));
        assert_eq!(g, DihedralElement::tau(2, 4).unwrap());

        let (c, _) = x_canonical(&r(&[4, 3, 2, 1]), &ProjPoint::Finite(rat(6, 1))).unwrap();
        assert_eq!(c.roots, roots);

        assert!(matches!(
            x_canonical(&roots, &ProjPoint::Finite(rat(1, 1))),
            Err(Error::PointOnRoot(_))
        ));
    }
}
