//! Index-level model of the stable module category of Lambda(n, t), the
//! path algebra of the cyclic quiver on `n` vertices truncated by all
//! paths of length `t`.
//!
//! Every non-projective indecomposable is uniserial and is determined by
//! its top vertex `i` (mod n) and its Loewy length `l` in `1..=t-1`,
//! written `S[i,l]`. The syzygy, Nakayama, Auslander-Reiten and Serre
//! functors act on these index pairs by affine maps, so the whole stable
//! category can be manipulated without any matrix data. The matrix model
//! lives in [`crate::homspace`] and is used to verify this one.
//!
//! Conventions: arrows of the quiver run `i -> i+1`, the shift of the
//! stable category is the cosyzygy, `[1] = omega^-1`, and the Serre
//! functor is `F = [1] . tau = omega . N`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The self-injective Nakayama algebra Lambda(n, t).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Algebra {
    n: u32,
    t: u32,
}

impl Algebra {
    /// Validates the defining pair: `n >= 1` vertices, truncation `t >= 2`.
    pub fn new(n: i64, t: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidVertexCount(n));
        }
        if t < 2 {
            return Err(Error::InvalidLoewyBound(t));
        }
        Ok(Self {
            n: n as u32,
            t: t as u32,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Canonical representative of a vertex index in `0..n`.
    pub fn vertex(&self, i: i64) -> u32 {
        i.rem_euclid(self.n as i64) as u32
    }

    /// Lambda(n, t) is a symmetric algebra exactly when n divides t - 1.
    pub fn is_symmetric(&self) -> bool {
        (self.t as u64 - 1).is_multiple_of(self.n as u64)
    }

    /// The non-projective indecomposable S[i,l]; rejects l outside 1..=t-1.
    pub fn module(&self, i: i64, l: i64) -> Result<IndecModule> {
        if l < 1 || l >= self.t as i64 {
            return Err(Error::ModuleLength {
                len: l,
                max: self.t - 1,
            });
        }
        Ok(self.mk(i, l))
    }

    /// Internal constructor for indices already known to be in range.
    pub(crate) fn mk(&self, i: i64, l: i64) -> IndecModule {
        debug_assert!(l >= 1 && l < self.t as i64, "Loewy length {l} out of range");
        IndecModule {
            top: self.vertex(i),
            len: l as u32,
        }
    }

    /// All n(t-1) non-projective indecomposables, ordered by (l, i).
    pub fn modules(&self) -> impl Iterator<Item = IndecModule> + '_ {
        let (n, t) = (self.n, self.t);
        (1..t).flat_map(move |len| (0..n).map(move |top| IndecModule { top, len }))
    }

    /// Arrows of the stable Auslander-Reiten quiver: the inclusions with
    /// `l <= t-2` and the quotients with `2 <= l <= t-1`. Empty for t = 2.
    pub fn stable_arrows(&self) -> impl Iterator<Item = IrreducibleMap> + '_ {
        let (n, t) = (self.n, self.t);
        let inclusions = (1..t.saturating_sub(1)).flat_map(move |len| {
            (0..n).map(move |top| IrreducibleMap {
                kind: ArrowKind::Inclusion,
                top,
                len,
            })
        });
        let projections = (2..t).flat_map(move |len| {
            (0..n).map(move |top| IrreducibleMap {
                kind: ArrowKind::Projection,
                top,
                len,
            })
        });
        inclusions.chain(projections)
    }
}

/// Functor actions on objects.
impl Algebra {
    /// k-th power of the syzygy functor. Even powers translate the top
    /// index by a multiple of t; odd powers additionally flip the Loewy
    /// length l to t - l. Any integer exponent is accepted.
    pub fn omega_pow(&self, x: IndecModule, k: i64) -> IndecModule {
        let (i, l) = (x.top as i64, x.len as i64);
        let t = self.t as i64;
        if k % 2 == 0 {
            // omega^{-2m} sends S[i,l] to S[i-mt,l]
            let m = -k / 2;
            self.mk(i - m * t, l)
        } else {
            // omega^{-(2m-1)} sends S[i,l] to S[i+l-mt,t-l]
            let m = (1 - k) / 2;
            self.mk(i + l - m * t, t - l)
        }
    }

    /// Nakayama functor: S[i,l] -> S[i+1-t,l].
    pub fn nakayama(&self, x: IndecModule) -> IndecModule {
        let t = self.t as i64;
        self.mk(x.top as i64 + 1 - t, x.len as i64)
    }

    /// k-th power of the shift `[1] = omega^-1`.
    pub fn shift(&self, x: IndecModule, k: i64) -> IndecModule {
        self.omega_pow(x, -k)
    }

    /// Auslander-Reiten translate `tau = omega^2 . N`; equals S[i+1,l].
    pub fn ar_translate(&self, x: IndecModule) -> IndecModule {
        self.omega_pow(self.nakayama(x), 2)
    }

    /// Serre functor `F = [1] . tau = omega . N`; equals S[i+l+1-t,t-l].
    pub fn serre(&self, x: IndecModule) -> IndecModule {
        self.omega_pow(self.nakayama(x), 1)
    }

    /// The orbit map `G = omega^{d+1} . N = [-d] . F` for any integer d.
    pub fn g_functor(&self, x: IndecModule, d: i64) -> IndecModule {
        self.omega_pow(self.nakayama(x), d + 1)
    }

    /// Order of the shift on objects: n when t = 2, otherwise 2m with m
    /// the minimal positive integer such that n divides m t.
    pub fn shift_order(&self) -> u64 {
        let (n, t) = (self.n as u64, self.t as u64);
        if t == 2 {
            n
        } else {
            2 * (n / gcd(n, t))
        }
    }
}

/// A non-projective indecomposable S[i,l]: top vertex `i`, Loewy length
/// `l` with `1 <= l <= t-1`. The projective S[i,t] is excluded here; it
/// vanishes in the stable category and appears only in the matrix model.
///
/// Ordering is by (l, i), which fixes the canonical representative of
/// orbits and the display order of direct sums.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IndecModule {
    #[cfg_attr(feature = "serde", serde(rename = "i"))]
    top: u32,
    #[cfg_attr(feature = "serde", serde(rename = "l"))]
    len: u32,
}

impl IndecModule {
    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    /// Socle vertex: i + l - 1 mod n.
    pub fn socle(&self, alg: &Algebra) -> u32 {
        alg.vertex(self.top as i64 + self.len as i64 - 1)
    }
}

impl Ord for IndecModule {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len, self.top).cmp(&(other.len, other.top))
    }
}

impl PartialOrd for IndecModule {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndecModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S[{},{}]", self.top, self.len)
    }
}

impl fmt::Debug for IndecModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite multiset of indecomposables: an object of the stable category
/// up to isomorphism. Summands are kept sorted, so multiset equality is
/// structural equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct StableObject {
    summands: Vec<IndecModule>,
}

impl StableObject {
    pub fn new(mut summands: Vec<IndecModule>) -> Self {
        summands.sort();
        Self { summands }
    }

    pub fn singleton(m: IndecModule) -> Self {
        Self { summands: vec![m] }
    }

    /// The zero object.
    pub fn empty() -> Self {
        Self {
            summands: Vec::new(),
        }
    }

    pub fn summands(&self) -> &[IndecModule] {
        &self.summands
    }

    pub fn summand_count(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Applies an object map summand-wise and renormalizes the ordering.
    pub fn map(&self, f: impl FnMut(IndecModule) -> IndecModule) -> StableObject {
        StableObject::new(self.summands.iter().copied().map(f).collect())
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.summands.windows(2).all(|w| w[0] != w[1])
    }
}

impl FromIterator<IndecModule> for StableObject {
    fn from_iter<T: IntoIterator<Item = IndecModule>>(iter: T) -> Self {
        StableObject::new(iter.into_iter().collect())
    }
}

impl fmt::Display for StableObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (k, m) in self.summands.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StableObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Minimal r >= 1 with `step^r(X)` isomorphic to X, found by explicit
/// iteration with cycle detection. Returns `None` when the iteration
/// falls into a cycle that misses X, which cannot happen for the
/// invertible functors modelled here but keeps the contract total for
/// arbitrary step maps.
pub fn relative_order(
    obj: &StableObject,
    mut step: impl FnMut(IndecModule) -> IndecModule,
) -> Option<u64> {
    let mut seen: HashSet<StableObject> = HashSet::new();
    let mut cur = obj.map(&mut step);
    let mut r = 1u64;
    loop {
        if cur == *obj {
            return Some(r);
        }
        if !seen.insert(cur.clone()) {
            return None;
        }
        cur = cur.map(&mut step);
        r += 1;
    }
}

/// Which kind of irreducible map of Lambda-mod.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ArrowKind {
    /// The socle inclusion sigma(i,l): S[i,l] -> S[i-1,l+1].
    Inclusion,
    /// The top-preserving quotient p(i,l): S[i,l] -> S[i,l-1].
    Projection,
}

/// An irreducible map of Lambda-mod, up to scalar, recorded by its kind
/// and the index pair (i, l) of its domain.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleMap {
    kind: ArrowKind,
    top: u32,
    len: u32,
}

impl IrreducibleMap {
    /// sigma(i,l): S[i,l] -> S[i-1,l+1], defined for 1 <= l <= t-1.
    pub fn inclusion(alg: &Algebra, i: i64, l: i64) -> Result<Self> {
        if l < 1 || l > alg.t as i64 - 1 {
            return Err(Error::ArrowLength {
                kind: "sigma",
                len: l,
                min: 1,
                max: alg.t - 1,
            });
        }
        Ok(Self {
            kind: ArrowKind::Inclusion,
            top: alg.vertex(i),
            len: l as u32,
        })
    }

    /// p(i,l): S[i,l] -> S[i,l-1], defined for 2 <= l <= t.
    pub fn projection(alg: &Algebra, i: i64, l: i64) -> Result<Self> {
        if l < 2 || l > alg.t as i64 {
            return Err(Error::ArrowLength {
                kind: "p",
                len: l,
                min: 2,
                max: alg.t,
            });
        }
        Ok(Self {
            kind: ArrowKind::Projection,
            top: alg.vertex(i),
            len: l as u32,
        })
    }

    pub fn kind(&self) -> ArrowKind {
        self.kind
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    /// Domain index pair (i, l); the domain is projective iff l = t.
    pub fn domain_pair(&self) -> (u32, u32) {
        (self.top, self.len)
    }

    /// Codomain index pair; the codomain is projective iff its length is t.
    pub fn codomain_pair(&self, alg: &Algebra) -> (u32, u32) {
        match self.kind {
            ArrowKind::Inclusion => (alg.vertex(self.top as i64 - 1), self.len + 1),
            ArrowKind::Projection => (self.top, self.len - 1),
        }
    }

    /// Domain as a stable object, `None` when projective.
    pub fn domain(&self, alg: &Algebra) -> Option<IndecModule> {
        (self.len < alg.t).then(|| alg.mk(self.top as i64, self.len as i64))
    }

    /// Codomain as a stable object, `None` when projective.
    pub fn codomain(&self, alg: &Algebra) -> Option<IndecModule> {
        let (i, l) = self.codomain_pair(alg);
        (l < alg.t).then(|| alg.mk(i as i64, l as i64))
    }

    /// Whether the map survives in the stable category, i.e. neither end
    /// is projective.
    pub fn is_stable(&self, alg: &Algebra) -> bool {
        self.domain(alg).is_some() && self.codomain(alg).is_some()
    }
}

impl fmt::Display for IrreducibleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            ArrowKind::Inclusion => "sigma",
            ArrowKind::Projection => "p",
        };
        write!(f, "{name}({},{})", self.top, self.len)
    }
}

impl fmt::Debug for IrreducibleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A functor that acts on irreducible maps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArrowFunctor {
    /// omega^k for any integer k.
    SyzygyPower(i64),
    Nakayama,
}

/// Functor actions on arrows, computed by iterating the one-step rules so
/// that there is a single source of truth; the closed forms serve as test
/// oracles.
impl Algebra {
    /// Image of a stable irreducible map under a syzygy power or the
    /// Nakayama functor. Arrows that meet a projective are rejected: they
    /// are zero in the stable category and have no well-defined image.
    pub fn apply_to_arrow(
        &self,
        f: IrreducibleMap,
        functor: ArrowFunctor,
    ) -> Result<IrreducibleMap> {
        if !f.is_stable(self) {
            return Err(Error::UnstableArrow { map: f.to_string() });
        }
        Ok(match functor {
            ArrowFunctor::Nakayama => self.nakayama_arrow(f),
            ArrowFunctor::SyzygyPower(k) => {
                let mut cur = f;
                for _ in 0..k.unsigned_abs() {
                    cur = if k > 0 {
                        self.omega_arrow(cur)
                    } else {
                        self.omega_inv_arrow(cur)
                    };
                }
                cur
            }
        })
    }

    /// One syzygy step on a stable arrow: swap kind, (i,l) -> (i+l, t-l).
    fn omega_arrow(&self, f: IrreducibleMap) -> IrreducibleMap {
        let out = IrreducibleMap {
            kind: f.kind.flip(),
            top: self.vertex(f.top as i64 + f.len as i64),
            len: self.t - f.len,
        };
        debug_assert!(out.is_stable(self));
        out
    }

    /// One cosyzygy step: swap kind, (i,l) -> (i+l-t, t-l).
    fn omega_inv_arrow(&self, f: IrreducibleMap) -> IrreducibleMap {
        let out = IrreducibleMap {
            kind: f.kind.flip(),
            top: self.vertex(f.top as i64 + f.len as i64 - self.t as i64),
            len: self.t - f.len,
        };
        debug_assert!(out.is_stable(self));
        out
    }

    /// Nakayama on arrows: keep kind, i -> i+1-t.
    fn nakayama_arrow(&self, f: IrreducibleMap) -> IrreducibleMap {
        IrreducibleMap {
            kind: f.kind,
            top: self.vertex(f.top as i64 + 1 - self.t as i64),
            len: f.len,
        }
    }
}

impl ArrowKind {
    fn flip(self) -> Self {
        match self {
            ArrowKind::Inclusion => ArrowKind::Projection,
            ArrowKind::Projection => ArrowKind::Inclusion,
        }
    }
}
