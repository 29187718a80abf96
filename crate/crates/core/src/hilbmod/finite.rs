//! Finite Hilbert semimodules, given by explicit operation tables.
//!
//! Elements are indices `0..size`; index `0` is always the zero element.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::ScalarRing;

/// A finite commutative semiring with trivial involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteSemiring {
    /// `𝔹 = {0, 1}` with `1 + 1 = 1`.
    Bool,
    /// `ℕ` with everything `≥ k` identified with `k`.
    Threshold(usize),
}

impl FiniteSemiring {
    pub fn size(self) -> usize {
        match self {
            FiniteSemiring::Bool => 2,
            FiniteSemiring::Threshold(k) => k + 1,
        }
    }

    /// The shipped scalar ring this semiring is a quotient of.
    pub fn ring(self) -> ScalarRing {
        match self {
            FiniteSemiring::Bool => ScalarRing::Bool,
            FiniteSemiring::Threshold(_) => ScalarRing::Nat,
        }
    }

    fn cap(self) -> usize {
        self.size() - 1
    }

    pub fn add(self, a: usize, b: usize) -> usize {
        (a + b).min(self.cap())
    }

    pub fn mul(self, a: usize, b: usize) -> usize {
        (a * b).min(self.cap())
    }

    pub fn involute(self, a: usize) -> usize {
        a
    }

    /// Membership in the additive closure of `{t‡t}`. Every element here is a
    /// sum of copies of `1 = 1‡1`.
    pub fn is_positive(self, a: usize) -> bool {
        a < self.size()
    }
}

impl fmt::Display for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteSemiring::Bool => write!(f, "bool"),
            FiniteSemiring::Threshold(k) => write!(f, "nat/[{k},∞)"),
        }
    }
}

/// A semimodule over a [`FiniteSemiring`] with an inner product, all given
/// as tables: `add[m][n]`, `act[s][m]` and `inner[m][n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemimodule {
    semiring: FiniteSemiring,
    add: Vec<Vec<usize>>,
    act: Vec<Vec<usize>>,
    inner: Vec<Vec<usize>>,
}

fn square(table: &[Vec<usize>], rows: usize, cols: usize, bound: usize, what: &str) -> Result<()> {
    if table.len() != rows || table.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension(format!("{what} table must be {rows}x{cols}")));
    }
    if table.iter().flatten().any(|&v| v >= bound) {
        return Err(Error::Dimension(format!("{what} table has an out-of-range entry")));
    }
    Ok(())
}

impl FiniteSemimodule {
    /// Validates the semimodule equations and the Hilbert semimodule
    /// conditions (symmetry, positivity, nondegeneracy) exhaustively.
    /// Strictness is reported separately by [`Self::is_strict`].
    pub fn new(
        semiring: FiniteSemiring,
        add: Vec<Vec<usize>>,
        act: Vec<Vec<usize>>,
        inner: Vec<Vec<usize>>,
    ) -> Result<FiniteSemimodule> {
        let n = add.len();
        let k = semiring.size();
        if n == 0 {
            return Err(Error::Dimension("a semimodule has at least the zero element".into()));
        }
        square(&add, n, n, n, "addition")?;
        square(&act, k, n, n, "action")?;
        square(&inner, n, n, k, "inner product")?;
        let m = FiniteSemimodule { semiring, add, act, inner };
        m.check_semimodule()?;
        m.check_hilbert()?;
        Ok(m)
    }

    fn check_semimodule(&self) -> Result<()> {
        let s = self.semiring;
        let bad = |what: &str| Err(Error::NotASemimodule(what.to_string()));
        let els = 0..self.size();
        for a in els.clone() {
            if self.add(0, a) != a {
                return bad(&format!("0 + {a} ≠ {a}"));
            }
            if self.act(0, a) != 0 {
                return bad(&format!("0·{a} ≠ 0"));
            }
            if self.act(1, a) != a {
                return bad(&format!("1·{a} ≠ {a}"));
            }
            for b in els.clone() {
                if self.add(a, b) != self.add(b, a) {
                    return bad(&format!("{a} + {b} is not commutative"));
                }
                for c in els.clone() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return bad(&format!("({a} + {b}) + {c} is not associative"));
                    }
                }
            }
        }
        for r in 0..s.size() {
            if self.act(r, 0) != 0 {
                return bad(&format!("{r}·0 ≠ 0"));
            }
            for a in els.clone() {
                for b in els.clone() {
                    if self.act(r, self.add(a, b)) != self.add(self.act(r, a), self.act(r, b)) {
                        return bad(&format!("{r}·({a} + {b}) does not distribute"));
                    }
                }
                for t in 0..s.size() {
                    if self.act(s.add(r, t), a) != self.add(self.act(r, a), self.act(t, a)) {
                        return bad(&format!("({r} + {t})·{a} does not distribute"));
                    }
                    if self.act(s.mul(r, t), a) != self.act(r, self.act(t, a)) {
                        return bad(&format!("({r}{t})·{a} is not compatible"));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_hilbert(&self) -> Result<()> {
        let s = self.semiring;
        let bad = |what: String| Err(Error::NotHilbert(what));
        let els = 0..self.size();
        for a in els.clone() {
            if !s.is_positive(self.inner(a, a)) {
                return bad(format!("⟨{a},{a}⟩ is not positive"));
            }
            for b in els.clone() {
                if self.inner(a, b) != s.involute(self.inner(b, a)) {
                    return bad(format!("⟨{a},{b}⟩ ≠ ⟨{b},{a}⟩‡"));
                }
                for c in els.clone() {
                    let lhs = self.inner(a, self.add(b, c));
                    if lhs != s.add(self.inner(a, b), self.inner(a, c)) {
                        return bad(format!("⟨{a},−⟩ is not additive at {b}, {c}"));
                    }
                }
                for r in 0..s.size() {
                    if self.inner(a, self.act(r, b)) != s.mul(r, self.inner(a, b)) {
                        return bad(format!("⟨{a},−⟩ is not homogeneous at {r}·{b}"));
                    }
                }
            }
        }
        let mut seen = BTreeMap::new();
        for a in els {
            if let Some(b) = seen.insert(self.inner[a].clone(), a) {
                return bad(format!("⟨{b},−⟩ = ⟨{a},−⟩ but {b} ≠ {a}"));
            }
        }
        Ok(())
    }

    pub fn semiring(&self) -> FiniteSemiring {
        self.semiring
    }

    pub fn size(&self) -> usize {
        self.add.len()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn act(&self, s: usize, a: usize) -> usize {
        self.act[s][a]
    }

    pub fn inner(&self, a: usize, b: usize) -> usize {
        self.inner[a][b]
    }

    /// `⟨m, m⟩ = 0 ⇒ m = 0`.
    pub fn is_strict(&self) -> bool {
        (1..self.size()).all(|a| self.inner(a, a) != 0)
    }

    /// The zero module `{0}`.
    pub fn zero(semiring: FiniteSemiring) -> FiniteSemimodule {
        let k = semiring.size();
        FiniteSemimodule::new(semiring, vec![vec![0]], vec![vec![0]; k], vec![vec![0]])
            .expect("zero module is valid")
    }

    /// The semiring itself with `⟨s, t⟩ = s‡t`.
    pub fn line(semiring: FiniteSemiring) -> FiniteSemimodule {
        let k = semiring.size();
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..k).map(|a| (0..k).map(|b| f(a, b)).collect()).collect()
        };
        FiniteSemimodule::new(
            semiring,
            table(&|a, b| semiring.add(a, b)),
            table(&|r, a| semiring.mul(r, a)),
            table(&|a, b| semiring.mul(semiring.involute(a), b)),
        )
        .expect("the semiring is a Hilbert semimodule over itself")
    }

    /// `𝔹ⁿ` with `⟨x, y⟩ = ⋁ xᵢ ∧ yᵢ`; element `x` is the bitmask of its
    /// coordinates.
    pub fn boolean_power(n: u32) -> Result<FiniteSemimodule> {
        if n > 6 {
            return Err(Error::Dimension("boolean powers are limited to n ≤ 6".into()));
        }
        let size = 1usize << n;
        let add = (0..size).map(|a| (0..size).map(|b| a | b).collect()).collect();
        let act = vec![vec![0; size], (0..size).collect()];
        let inner = (0..size).map(|a| (0..size).map(|b| usize::from(a & b != 0)).collect()).collect();
        FiniteSemimodule::new(FiniteSemiring::Bool, add, act, inner)
    }

    /// `𝔹²` with `⟨x, y⟩ = x₁y₂ ∨ x₂y₁`: nondegenerate but not strict.
    pub fn boolean_hyperbolic_plane() -> FiniteSemimodule {
        let add = (0..4).map(|a| (0..4).map(|b| a | b).collect()).collect();
        let act = vec![vec![0; 4], (0..4).collect()];
        let swap = |x: usize| (x & 1) << 1 | (x >> 1);
        let inner = (0..4).map(|a| (0..4).map(|b| usize::from(swap(a) & b != 0)).collect()).collect();
        FiniteSemimodule::new(FiniteSemiring::Bool, add, act, inner)
            .expect("hyperbolic plane is a Hilbert semimodule")
    }

    /// `M ⊕ N`; the pair `(m, n)` is element `m·|N| + n`.
    pub fn biproduct(&self, other: &FiniteSemimodule) -> Result<FiniteSemimodule> {
        if self.semiring != other.semiring {
            return Err(Error::ObjectMismatch("semimodules over different semirings".into()));
        }
        let s = self.semiring;
        let (p, q) = (self.size(), other.size());
        let split = |x: usize| (x / q, x % q);
        let join = |a: usize, b: usize| a * q + b;
        let n = p * q;
        let add = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let ((a, b), (c, d)) = (split(x), split(y));
                        join(self.add(a, c), other.add(b, d))
                    })
                    .collect()
            })
            .collect();
        let act = (0..s.size())
            .map(|r| {
                (0..n)
                    .map(|x| {
                        let (a, b) = split(x);
                        join(self.act(r, a), other.act(r, b))
                    })
                    .collect()
            })
            .collect();
        let inner = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let ((a, b), (c, d)) = (split(x), split(y));
                        s.add(self.inner(a, c), other.inner(b, d))
                    })
                    .collect()
            })
            .collect();
        FiniteSemimodule::new(s, add, act, inner)
    }

    /// Whether `f` (given as `f[m]`) is a semimodule homomorphism into `cod`.
    pub fn is_homomorphism(&self, cod: &FiniteSemimodule, f: &[usize]) -> bool {
        f.len() == self.size()
            && f.iter().all(|&v| v < cod.size())
            && (0..self.size()).all(|a| {
                (0..self.size()).all(|b| f[self.add(a, b)] == cod.add(f[a], f[b]))
                    && (0..self.semiring.size()).all(|r| f[self.act(r, a)] == cod.act(r, f[a]))
            })
    }

    /// Whether `g: cod → self` satisfies `⟨f m, n⟩ = ⟨m, g n⟩` for all `m, n`.
    pub fn is_adjoint_pair(&self, cod: &FiniteSemimodule, f: &[usize], g: &[usize]) -> bool {
        (0..self.size()).all(|m| (0..cod.size()).all(|n| cod.inner(f[m], n) == self.inner(m, g[n])))
    }

    /// Exhaustive isomorphism test: a bijection preserving addition, action
    /// and inner product.
    pub fn is_isomorphic(&self, other: &FiniteSemimodule) -> bool {
        if self.semiring != other.semiring || self.size() != other.size() {
            return false;
        }
        let n = self.size();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;
        self.extend_iso(other, 1, &mut map, &mut used)
    }

    fn extend_iso(
        &self,
        other: &FiniteSemimodule,
        next: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = self.size();
        if next == n {
            return self.is_homomorphism(other, map)
                && (0..n).all(|a| (0..n).all(|b| self.inner(a, b) == other.inner(map[a], map[b])));
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            // Prune on the inner product against what is already mapped.
            let consistent = (0..next).all(|a| self.inner(next, a) == other.inner(cand, map[a]))
                && self.inner(next, next) == other.inner(cand, cand);
            if !consistent {
                continue;
            }
            map[next] = cand;
            used[cand] = true;
            if self.extend_iso(other, next + 1, map, used) {
                return true;
            }
            used[cand] = false;
        }
        map[next] = usize::MAX;
        false
    }
}

/// Searches for the adjoint of `f: dom → cod`. The constraints
/// `⟨f m, n⟩ = ⟨m, g n⟩` only couple `g(n)` to `n`, so the search over all
/// functions `cod → dom` splits into one search per `n`.
pub fn find_adjoint_finite(
    dom: &FiniteSemimodule,
    cod: &FiniteSemimodule,
    f: &[usize],
) -> Result<Option<Vec<usize>>> {
    if dom.semiring != cod.semiring {
        return Err(Error::ObjectMismatch("semimodules over different semirings".into()));
    }
    if !dom.is_homomorphism(cod, f) {
        return Err(Error::NotAHomomorphism(format!("{f:?} is not a homomorphism")));
    }
    let mut g = Vec::with_capacity(cod.size());
    for n in 0..cod.size() {
        let wanted: Vec<usize> = (0..dom.size()).map(|m| cod.inner(f[m], n)).collect();
        // `⟨m, g n⟩ = ⟨g n, m⟩‡`, so compare against rows of the inner table.
        let hits: Vec<usize> =
            (0..dom.size()).filter(|&c| (0..dom.size()).all(|m| dom.inner(m, c) == wanted[m])).collect();
        match hits.as_slice() {
            [] => return Ok(None),
            [c] => g.push(*c),
            _ => unreachable!("nondegeneracy makes adjoints unique"),
        }
    }
    Ok(Some(g))
}

/// Result of [`tensor_quotient`]: the module and, for each class, one
/// representative as a list of pure tensors `(h, k)`.
#[derive(Clone, Debug)]
pub struct TensorQuotient {
    pub module: FiniteSemimodule,
    pub representatives: Vec<Vec<(usize, usize)>>,
}

/// `M ⊗ N / ∼` with `Σ hᵢ⊗kᵢ ∼ Σ h'ⱼ⊗k'ⱼ` iff the functions
/// `(x, y) ↦ Σ ⟨hᵢ,x⟩⟨kᵢ,y⟩` agree. Classes are enumerated by closing the
/// pure tensors under addition, and the inner product is checked to be
/// independent of representatives on every edge of that closure.
pub fn tensor_quotient(m: &FiniteSemimodule, n: &FiniteSemimodule) -> Result<TensorQuotient> {
    if m.semiring != n.semiring {
        return Err(Error::ObjectMismatch("semimodules over different semirings".into()));
    }
    let s = m.semiring;
    let (p, q) = (m.size(), n.size());
    type Class = Vec<usize>;
    let pure = |h: usize, k: usize| -> Class {
        let mut t = Vec::with_capacity(p * q);
        for x in 0..p {
            for y in 0..q {
                t.push(s.mul(s.involute(m.inner(h, x)), s.involute(n.inner(k, y))));
            }
        }
        t
    };
    let sum = |a: &Class, b: &Class| -> Class { a.iter().zip(b).map(|(&x, &y)| s.add(x, y)).collect() };

    let mut generators: Vec<((usize, usize), Class)> = Vec::new();
    for h in 0..p {
        for k in 0..q {
            generators.push(((h, k), pure(h, k)));
        }
    }
    let zero: Class = vec![0; p * q];
    let mut index: BTreeMap<Class, usize> = BTreeMap::new();
    let mut classes: Vec<Class> = vec![zero.clone()];
    let mut reps: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    index.insert(zero, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for (g, (pair, gen)) in generators.iter().enumerate() {
            let next = sum(&classes[c], gen);
            let d = match index.get(&next) {
                Some(&d) => d,
                None => {
                    let d = classes.len();
                    let mut rep = reps[c].clone();
                    rep.push(*pair);
                    index.insert(next.clone(), d);
                    classes.push(next);
                    reps.push(rep);
                    queue.push_back(d);
                    d
                }
            };
            edges.push((c, g, d));
        }
    }

    // ⟨A, Σ h'⊗k'⟩ = Σ F_A(h', k') where F_A is A's table.
    let eval = |a: usize, pair: (usize, usize)| classes[a][pair.0 * q + pair.1];
    let size = classes.len();
    let value = |a: usize, rep: &[(usize, usize)]| rep.iter().fold(0, |acc, &pr| s.add(acc, eval(a, pr)));
    let inner: Vec<Vec<usize>> = (0..size).map(|a| (0..size).map(|b| value(a, &reps[b])).collect()).collect();
    for &(c, g, d) in &edges {
        let pair = generators[g].0;
        for (a, row) in inner.iter().enumerate() {
            if s.add(row[c], eval(a, pair)) != row[d] {
                return Err(Error::IllDefinedInnerProduct(format!(
                    "class {d} reached from class {c} via {pair:?} disagrees against class {a}"
                )));
            }
        }
    }

    let add: Vec<Vec<usize>> =
        (0..size).map(|a| (0..size).map(|b| index[&sum(&classes[a], &classes[b])]).collect()).collect();
    let act: Vec<Vec<usize>> = (0..s.size())
        .map(|r| {
            (0..size)
                .map(|a| {
                    let scaled: Class = classes[a].iter().map(|&x| s.mul(r, x)).collect();
                    index.get(&scaled).copied().ok_or_else(|| {
                        Error::IllDefinedInnerProduct(format!("{r}·class {a} left the closure"))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let module = FiniteSemimodule::new(s, add, act, inner)?;
    Ok(TensorQuotient { module, representatives: reps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u32) -> FiniteSemimodule {
        FiniteSemimodule::boolean_power(n).unwrap()
    }

    #[test]
    fn shipped_modules_validate() {
        for n in 0..=3 {
            assert!(b(n).is_strict());
        }
        assert!(FiniteSemimodule::line(FiniteSemiring::Threshold(3)).is_strict());
        let h = FiniteSemimodule::boolean_hyperbolic_plane();
        assert!(!h.is_strict());
    }

    #[test]
    fn degenerate_inner_product_rejected() {
        let m = b(2);
        let inner = vec![vec![0; 4]; 4];
        let err = FiniteSemimodule::new(FiniteSemiring::Bool, m.add.clone(), m.act.clone(), inner);
        assert!(matches!(err, Err(Error::NotHilbert(_))));
    }

    #[test]
    fn adjoints() {
        let one = b(1);
        assert_eq!(find_adjoint_finite(&one, &one, &[0, 1]).unwrap(), Some(vec![0, 1]));
        // join 𝔹⊕𝔹 → 𝔹 has the diagonal as adjoint
        let two = one.biproduct(&one).unwrap();
        let join: Vec<usize> = (0..4).map(|x| usize::from(x != 0)).collect();
        let diag = find_adjoint_finite(&two, &one, &join).unwrap().unwrap();
        assert_eq!(diag, vec![0, 3]);
        assert!(matches!(find_adjoint_finite(&one, &one, &[1, 1]), Err(Error::NotAHomomorphism(_))));
    }

    #[test]
    fn tensor_quotients() {
        let one = b(1);
        let t = tensor_quotient(&one, &one).unwrap();
        assert!(t.module.is_isomorphic(&one));
        let t = tensor_quotient(&b(2), &one).unwrap();
        assert!(t.module.is_isomorphic(&b(2)));
        let t = tensor_quotient(&b(2), &FiniteSemimodule::zero(FiniteSemiring::Bool)).unwrap();
        assert_eq!(t.module.size(), 1);
    }

    #[test]
    fn isomorphism_distinguishes_inner_products() {
        assert!(!b(2).is_isomorphic(&FiniteSemimodule::boolean_hyperbolic_plane()));
        assert!(b(2).is_isomorphic(&b(1).biproduct(&b(1)).unwrap()));
    }
}
