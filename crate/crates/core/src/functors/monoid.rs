//! Table-level demonstration that extension of scalars along `ℕ ↪ ℤ` is not
//! full. A commutative monoid `X` is an `ℕ`-semimodule and `f*X = X ∐ X`;
//! `f*(g)` acts as `(x, x') ↦ (gx, gx')`. The swap `(x, x') ↦ (x', x)` is
//! a morphism of `f*X` that no endofunction `g` of `X` can produce.

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite commutative monoid with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommMonoid {
    name: String,
    add: Vec<Vec<usize>>,
}

impl CommMonoid {
    pub fn new(name: &str, add: Vec<Vec<usize>>) -> Result<CommMonoid> {
        let n = add.len();
        let bad = |what: String| Err(Error::NotASemimodule(what));
        if n == 0 || add.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return bad("monoid table must be square with entries in range".into());
        }
        for a in 0..n {
            if add[0][a] != a {
                return bad(format!("0 is not an identity at {a}"));
            }
            for b in 0..n {
                if add[a][b] != add[b][a] {
                    return bad(format!("not commutative at {a}, {b}"));
                }
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return bad(format!("not associative at {a}, {b}, {c}"));
                    }
                }
            }
        }
        Ok(CommMonoid { name: name.to_string(), add })
    }

    /// `({0, 1}, ∨)`.
    pub fn boolean() -> CommMonoid {
        CommMonoid::new("bool", vec![vec![0, 1], vec![1, 1]]).expect("valid")
    }

    pub fn trivial() -> CommMonoid {
        CommMonoid::new("trivial", vec![vec![0]]).expect("valid")
    }

    /// `{0, …, k}` under addition capped at `k`.
    pub fn threshold(k: usize) -> CommMonoid {
        let add = (0..=k).map(|a| (0..=k).map(|b| (a + b).min(k)).collect()).collect();
        CommMonoid::new(&format!("threshold-{k}"), add).expect("valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.add.len()
    }

    pub fn is_homomorphism(&self, g: &[usize]) -> bool {
        let n = self.size();
        g[0] == 0 && (0..n).all(|a| (0..n).all(|b| g[self.add[a][b]] == self.add[g[a]][g[b]]))
    }
}

/// Per-candidate evidence: the point `(x, x')` where `f*(g)` and the swap
/// disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub candidate: Vec<usize>,
    pub is_homomorphism: bool,
    pub at: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonFullnessReport {
    pub monoid: String,
    pub size: usize,
    pub candidates_checked: usize,
    pub homomorphisms: usize,
    /// `Some` when the swap has no preimage; every candidate is refuted.
    pub witness: Option<Vec<Refutation>>,
}

/// Every endofunction of `{0..n}` in lexicographic order.
fn endofunctions(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(n as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut code| {
        let mut g = vec![0; n];
        for slot in g.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        g
    })
}

/// Exhaustively searches for `g` with `f*(g) = swap` on `X ∐ X`.
pub fn non_fullness_demo(monoid: &CommMonoid) -> Result<NonFullnessReport> {
    let n = monoid.size();
    if n > 7 {
        return Err(Error::Dimension("non-fullness search is limited to 7 elements".into()));
    }
    let mut refutations = Vec::new();
    let mut homs = 0;
    let mut preimage_found = false;
    for g in endofunctions(n) {
        let is_hom = monoid.is_homomorphism(&g);
        homs += usize::from(is_hom);
        // f*(g)(x, x') = (gx, gx') against swap(x, x') = (x', x).
        let miss = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| (g[x], g[y]) != (y, x));
        match miss {
            Some(at) => refutations.push(Refutation { candidate: g, is_homomorphism: is_hom, at }),
            None => preimage_found = true,
        }
    }
    Ok(NonFullnessReport {
        monoid: monoid.name().to_string(),
        size: n,
        candidates_checked: refutations.len() + usize::from(preimage_found),
        homomorphisms: homs,
        witness: (!preimage_found).then_some(refutations),
    })
}
