//! The catalog of primitive spherical systems without simple spherical
//! roots, as parameterized families.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::dynkin::{DynkinDiagram, Family, NodeSet, Weight};
use crate::system::SphericalSystem;
use crate::Error;

use Family::{A, B, C, D, E, F, G};

/// A system written in input coordinates: components as given (before
/// canonicalization), nodes as `(component, bourbaki)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawSystem {
    pub components: Vec<(Family, usize)>,
    pub sp: Vec<(usize, usize)>,
    pub sigma: Vec<Vec<(usize, usize, i64)>>,
}

impl RawSystem {
    pub(crate) fn on(components: &[(Family, usize)]) -> RawSystem {
        RawSystem { components: components.to_vec(), ..Default::default() }
    }

    /// α_lo, ..., α_hi of component `c` into S^p (nothing if lo > hi).
    pub(crate) fn sp(mut self, c: usize, lo: usize, hi: usize) -> Self {
        self.sp.extend((lo..=hi).map(|i| (c, i)));
        self
    }

    pub(crate) fn sp_odd(mut self, c: usize, hi: usize) -> Self {
        self.sp.extend((1..=hi).step_by(2).map(|i| (c, i)));
        self
    }

    pub(crate) fn root(mut self, terms: &[(usize, usize, i64)]) -> Self {
        self.sigma.push(terms.to_vec());
        self
    }

    /// k(α_lo + ... + α_hi).
    pub(crate) fn seg(self, c: usize, lo: usize, hi: usize, k: i64) -> Self {
        let t: Vec<_> = (lo..=hi).map(|i| (c, i, k)).collect();
        self.root(&t)
    }

    /// α_lo + 2α_{lo+1} + ... + 2α_{hi-1} + α_hi.
    pub(crate) fn hat(self, c: usize, lo: usize, hi: usize) -> Self {
        let t: Vec<_> = (lo..=hi).map(|i| (c, i, if i == lo || i == hi { 1 } else { 2 })).collect();
        self.root(&t)
    }

    /// 2α_lo + ... + 2α_{n-2} + α_{n-1} + α_n (type D tail).
    pub(crate) fn fork(self, c: usize, lo: usize, n: usize) -> Self {
        let t: Vec<_> = (lo..=n).map(|i| (c, i, if i + 2 <= n { 2 } else { 1 })).collect();
        self.root(&t)
    }

    /// α_i + α_{i+1} for i in lo..hi.
    pub(crate) fn pairs(mut self, c: usize, lo: usize, hi: usize) -> Self {
        for i in lo..hi {
            self = self.root(&[(c, i, 1), (c, i + 1, 1)]);
        }
        self
    }

    /// α_{2i-1} + 2α_{2i} + α_{2i+1} for 2i+1 ≤ hi.
    pub(crate) fn hats3(mut self, c: usize, hi: usize) -> Self {
        let mut i = 1;
        while 2 * i < hi {
            self = self.hat(c, 2 * i - 1, 2 * i + 1);
            i += 1;
        }
        self
    }

    /// kα_i for i in lo..=hi.
    pub(crate) fn doubles(mut self, c: usize, lo: usize, hi: usize) -> Self {
        for i in lo..=hi {
            self = self.root(&[(c, i, 2)]);
        }
        self
    }

    /// α_i + α'_i on two copies of one component.
    pub(crate) fn diagonal(mut self, p: usize) -> Self {
        for i in 1..=p {
            self = self.root(&[(0, i, 1), (1, i, 1)]);
        }
        self
    }

    /// Canonicalizes into a [`SphericalSystem`].
    pub fn build(&self) -> Result<SphericalSystem, Error> {
        let (d, map) = DynkinDiagram::with_positions(&self.components)?;
        let at = |c: usize, i: usize| -> Result<usize, Error> {
            map.get(c)
                .and_then(|m| m.get(i.wrapping_sub(1)))
                .copied()
                .ok_or_else(|| Error::UnknownNode(format!("({}, {})", c, i)))
        };
        let mut sp = NodeSet::EMPTY;
        for &(c, i) in &self.sp {
            sp.insert(at(c, i)?);
        }
        let mut sigma = Vec::new();
        for terms in &self.sigma {
            let mut w = vec![0; d.rank()];
            for &(c, i, k) in terms {
                w[at(c, i)?] += k;
            }
            sigma.push(Weight(w));
        }
        SphericalSystem::new(d, sp, sigma)
    }
}

type Builder = fn(&[usize]) -> Option<RawSystem>;

/// One catalog item.
#[derive(Clone, Copy)]
pub struct FamilyDatum {
    /// Position in the catalog, from 1.
    pub index: usize,
    /// Label with parameter names, e.g. `ac*(p)+b'(q)`.
    pub label: &'static str,
    pub params: &'static [&'static str],
    /// Whether every instance satisfies (R). `cc(p+q)` is strict except at q=2.
    pub strict: Strictness,
    build: Builder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    Strict,
    NonStrict,
    /// Non-strict exactly when the named parameter equals the value.
    NonStrictWhen(&'static str, usize),
}

impl core::fmt::Debug for FamilyDatum {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FamilyDatum").field("index", &self.index).field("label", &self.label).finish()
    }
}

impl FamilyDatum {
    /// The raw system at `params`, or `None` if inadmissible.
    pub fn raw(&self, params: &[usize]) -> Option<RawSystem> {
        if params.len() != self.params.len() {
            return None;
        }
        (self.build)(params)
    }

    pub fn instantiate(&self, params: &[usize]) -> Result<SphericalSystem, Error> {
        self.raw(params).ok_or_else(|| Error::BadParameters(format!("{} at {:?}", self.label, params)))?.build()
    }

    pub fn is_strict_at(&self, params: &[usize]) -> bool {
        match self.strict {
            Strictness::Strict => true,
            Strictness::NonStrict => false,
            Strictness::NonStrictWhen(name, v) => {
                let k = self.params.iter().position(|p| *p == name).expect("parameter exists");
                params[k] != v
            }
        }
    }

    /// Label with parameters substituted, e.g. `aa(1+2+1)`.
    pub fn label_at(&self, params: &[usize]) -> String {
        let mut out = String::new();
        let bytes = self.label.as_bytes();
        let mut i = 0;
        'scan: while i < bytes.len() {
            let prev = if i == 0 { b'(' } else { bytes[i - 1] };
            if matches!(prev, b'(' | b'+' | b',') {
                let mut order: Vec<usize> = (0..self.params.len()).collect();
                order.sort_by_key(|&k| core::cmp::Reverse(self.params[k].len()));
                for k in order {
                    let name = self.params[k].as_bytes();
                    let end = i + name.len();
                    if bytes[i..].starts_with(name) && matches!(bytes.get(end), Some(b')' | b'+' | b',')) {
                        out.push_str(&format!("{}", params[k]));
                        i = end;
                        continue 'scan;
                    }
                }
            }
            out.push(bytes[i] as char);
            i += 1;
        }
        out
    }

    /// All admissible parameter tuples with every entry at most `bound`.
    pub fn parameter_tuples(&self, bound: usize) -> Vec<Vec<usize>> {
        let k = self.params.len();
        let mut out = Vec::new();
        let mut t = vec![1; k];
        loop {
            if self.raw(&t).is_some() {
                out.push(t.clone());
            }
            let mut j = 0;
            while j < k && t[j] == bound {
                t[j] = 1;
                j += 1;
            }
            if j == k {
                break;
            }
            t[j] += 1;
        }
        out
    }
}

macro_rules! fam {
    ($i:expr, $label:expr, [$($p:expr),*], $strict:expr, $build:expr) => {
        FamilyDatum { index: $i, label: $label, params: &[$($p),*], strict: $strict, build: $build }
    };
}

use Strictness::{NonStrict, NonStrictWhen, Strict};

fn even(n: usize) -> bool {
    n.is_multiple_of(2)
}

static CATALOG: [FamilyDatum; 66] = [
    // type A
    fam!(1, "aa(p,p)", ["p"], Strict, |v| {
        let p = v[0];
        Some(RawSystem::on(&[(A, p), (A, p)]).diagonal(p))
    }),
    fam!(2, "ao(n)", ["n"], Strict, |v| Some(RawSystem::on(&[(A, v[0])]).doubles(0, 1, v[0]))),
    fam!(3, "ac(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 3 && !even(n)).then(|| RawSystem::on(&[(A, n)]).sp_odd(0, n).hats3(0, n))
    }),
    fam!(4, "aa(p+q+p)", ["p", "q"], Strict, |v| {
        let (p, q) = (v[0], v[1]);
        (q >= 2).then(|| {
            let n = 2 * p + q;
            let mut r = RawSystem::on(&[(A, n)]).sp(0, p + 2, p + q - 1);
            for i in 1..=p {
                r = r.root(&[(0, i, 1), (0, n + 1 - i, 1)]);
            }
            r.seg(0, p + 1, p + q, 1)
        })
    }),
    fam!(5, "aa'(p+1+p)", ["p"], Strict, |v| {
        let p = v[0];
        let n = 2 * p + 1;
        let mut r = RawSystem::on(&[(A, n)]);
        for i in 1..=p {
            r = r.root(&[(0, i, 1), (0, n + 1 - i, 1)]);
        }
        Some(r.root(&[(0, p + 1, 2)]))
    }),
    fam!(6, "a(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 2).then(|| RawSystem::on(&[(A, n)]).sp(0, 2, n - 1).seg(0, 1, n, 1))
    }),
    fam!(7, "ac*(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 3).then(|| RawSystem::on(&[(A, n)]).pairs(0, 1, n))
    }),
    // type B
    fam!(8, "bb(p,p)", ["p"], Strict, |v| {
        let p = v[0];
        (p >= 2).then(|| RawSystem::on(&[(B, p), (B, p)]).diagonal(p))
    }),
    fam!(9, "bo(p+q)", ["p", "q"], Strict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q;
        Some(RawSystem::on(&[(B, n)]).sp(0, p + 2, n).doubles(0, 1, p).seg(0, p + 1, n, 2))
    }),
    fam!(10, "b(n)", ["n"], NonStrict, |v| {
        let n = v[0];
        (n >= 2).then(|| RawSystem::on(&[(B, n)]).sp(0, 2, n).seg(0, 1, n, 1))
    }),
    fam!(11, "b'(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 2).then(|| RawSystem::on(&[(B, n)]).sp(0, 2, n).seg(0, 1, n, 2))
    }),
    fam!(12, "b*(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 2).then(|| RawSystem::on(&[(B, n)]).sp(0, 2, n - 1).seg(0, 1, n, 1))
    }),
    fam!(13, "bc*(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 3).then(|| RawSystem::on(&[(B, n)]).pairs(0, 1, n))
    }),
    fam!(14, "bc'(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 2).then(|| RawSystem::on(&[(B, n)]).pairs(0, 1, n).root(&[(0, n, 2)]))
    }),
    fam!(15, "a(p)+b(q)", ["p", "q"], NonStrict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q;
        (p >= 2 && q >= 2)
            .then(|| RawSystem::on(&[(B, n)]).sp(0, 2, p - 1).sp(0, p + 2, n).seg(0, 1, p, 1).seg(0, p + 1, n, 1))
    }),
    fam!(16, "a(p)+b'(q)", ["p", "q"], Strict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q;
        (p >= 2).then(|| RawSystem::on(&[(B, n)]).sp(0, 2, p - 1).sp(0, p + 2, n).seg(0, 1, p, 1).seg(0, p + 1, n, 2))
    }),
    fam!(17, "ac*(p)+b(q)", ["p", "q"], NonStrict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q;
        (p >= 2 && q >= 2).then(|| RawSystem::on(&[(B, n)]).sp(0, p + 2, n).pairs(0, 1, p).seg(0, p + 1, n, 1))
    }),
    fam!(18, "ac*(p)+b'(q)", ["p", "q"], Strict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q;
        (p >= 2).then(|| RawSystem::on(&[(B, n)]).sp(0, p + 2, n).pairs(0, 1, p).seg(0, p + 1, n, 2))
    }),
    fam!(19, "b**(3)", [], Strict, |_| Some(RawSystem::on(&[(B, 3)]).sp(0, 1, 2).root(&[
        (0, 1, 1),
        (0, 2, 2),
        (0, 3, 3)
    ]))),
    fam!(20, "b*(4)+b**(3)", [], Strict, |_| {
        Some(RawSystem::on(&[(B, 4)]).sp(0, 2, 3).seg(0, 1, 4, 1).root(&[(0, 2, 1), (0, 3, 2), (0, 4, 3)]))
    }),
    // type C
    fam!(21, "cc(p,p)", ["p"], Strict, |v| {
        let p = v[0];
        (p >= 3).then(|| RawSystem::on(&[(C, p), (C, p)]).diagonal(p))
    }),
    fam!(22, "co(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 3).then(|| RawSystem::on(&[(C, n)]).doubles(0, 1, n))
    }),
    fam!(23, "c(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 3).then(|| RawSystem::on(&[(C, n)]).sp(0, 1, 1).sp(0, 3, n).hat(0, 1, n))
    }),
    fam!(24, "cc(p+q)", ["p", "q"], NonStrictWhen("q", 2), |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q;
        (p >= 2 && even(p) && q >= 2)
            .then(|| RawSystem::on(&[(C, n)]).sp_odd(0, p + 1).sp(0, p + 3, n).hats3(0, p + 1).hat(0, p + 1, n))
    }),
    fam!(25, "cc'(p+2)", ["p"], Strict, |v| {
        let p = v[0];
        let n = p + 2;
        (p >= 2 && even(p))
            .then(|| RawSystem::on(&[(C, n)]).sp_odd(0, n - 1).hats3(0, n - 1).root(&[(0, n - 1, 2), (0, n, 2)]))
    }),
    fam!(26, "c*(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 3).then(|| RawSystem::on(&[(C, n)]).sp(0, 3, n).hat(0, 1, n))
    }),
    fam!(27, "ca(1+q+1)", ["q"], Strict, |v| {
        let q = v[0];
        let n = q + 2;
        (q >= 2).then(|| RawSystem::on(&[(C, n)]).sp(0, 3, q).root(&[(0, 1, 1), (0, n, 1)]).seg(0, 2, n - 1, 1))
    }),
    fam!(28, "aa(1+p+1)+c*(q)", ["p", "q"], Strict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q + 1;
        (p >= 2 && q >= 2).then(|| {
            RawSystem::on(&[(C, n)])
                .sp(0, 3, p)
                .sp(0, p + 4, n)
                .root(&[(0, 1, 1), (0, p + 2, 1)])
                .seg(0, 2, p + 1, 1)
                .hat(0, p + 2, n)
        })
    }),
    fam!(29, "aa(1,1)+c*(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 2).then(|| RawSystem::on(&[(A, 1), (C, n)]).sp(1, 3, n).root(&[(0, 1, 1), (1, 1, 1)]).hat(1, 1, n))
    }),
    fam!(30, "aa(1,1)+c*(n1)+c*(n2)", ["n1", "n2"], Strict, |v| {
        let (n1, n2) = (v[0], v[1]);
        (n1 >= 2 && n2 >= 2).then(|| {
            RawSystem::on(&[(C, n1), (C, n2)])
                .sp(0, 3, n1)
                .sp(1, 3, n2)
                .root(&[(0, 1, 1), (1, 1, 1)])
                .hat(0, 1, n1)
                .hat(1, 1, n2)
        })
    }),
    fam!(31, "ac*(p)+c*(q)", ["p", "q"], Strict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = (p + q).saturating_sub(1);
        (p >= 2 && q >= 2).then(|| RawSystem::on(&[(C, n)]).sp(0, p + 2, n).pairs(0, 1, p).hat(0, p, n))
    }),
    fam!(32, "a'(1)+c*(q)", ["q"], Strict, |v| {
        let n = v[0];
        (n >= 3).then(|| RawSystem::on(&[(C, n)]).sp(0, 3, n).root(&[(0, 1, 2)]).hat(0, 1, n))
    }),
    // type D
    fam!(33, "dd(p,p)", ["p"], Strict, |v| {
        let p = v[0];
        (p >= 4).then(|| RawSystem::on(&[(D, p), (D, p)]).diagonal(p))
    }),
    fam!(34, "do(p+q)", ["p", "q"], Strict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q;
        // At q = 2 the tail root is α_{n-1}+α_n, whose S^p trace is empty.
        let hi = if q == 2 { 0 } else { n };
        (n >= 4 && q >= 2).then(|| RawSystem::on(&[(D, n)]).sp(0, p + 2, hi).doubles(0, 1, p).fork(0, p + 1, n))
    }),
    fam!(35, "do(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 4).then(|| RawSystem::on(&[(D, n)]).doubles(0, 1, n))
    }),
    fam!(36, "d(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 4).then(|| RawSystem::on(&[(D, n)]).sp(0, 2, n).fork(0, 1, n))
    }),
    fam!(37, "dc'(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 6 && even(n)).then(|| RawSystem::on(&[(D, n)]).sp_odd(0, n - 1).hats3(0, n - 1).root(&[(0, n, 2)]))
    }),
    fam!(38, "dc(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 5 && !even(n)).then(|| {
            RawSystem::on(&[(D, n)]).sp_odd(0, n - 2).hats3(0, n - 2).root(&[(0, n - 2, 1), (0, n - 1, 1), (0, n, 1)])
        })
    }),
    fam!(39, "ds(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 4).then(|| {
            let mut last: Vec<_> = (1..=n - 2).map(|i| (0, i, 1)).collect();
            last.push((0, n, 1));
            RawSystem::on(&[(D, n)]).sp(0, 2, n - 2).seg(0, 1, n - 1, 1).root(&last)
        })
    }),
    fam!(40, "ds*(4)", [], Strict, |_| {
        Some(
            RawSystem::on(&[(D, 4)])
                .sp(0, 2, 2)
                .root(&[(0, 1, 1), (0, 2, 1), (0, 3, 1)])
                .root(&[(0, 3, 1), (0, 2, 1), (0, 4, 1)])
                .root(&[(0, 4, 1), (0, 2, 1), (0, 1, 1)]),
        )
    }),
    fam!(41, "dc*(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n >= 4).then(|| RawSystem::on(&[(D, n)]).pairs(0, 1, n - 1).root(&[(0, n - 2, 1), (0, n, 1)]))
    }),
    fam!(42, "a(p)+d(q)", ["p", "q"], Strict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q;
        let hi = if q == 2 { 0 } else { n };
        (p >= 2 && q >= 2)
            .then(|| RawSystem::on(&[(D, n)]).sp(0, 2, p - 1).sp(0, p + 2, hi).seg(0, 1, p, 1).fork(0, p + 1, n))
    }),
    fam!(43, "ac*(p)+d(q)", ["p", "q"], Strict, |v| {
        let (p, q) = (v[0], v[1]);
        let n = p + q;
        let hi = if q == 2 { 0 } else { n };
        (p >= 2 && q >= 2).then(|| RawSystem::on(&[(D, n)]).sp(0, p + 2, hi).pairs(0, 1, p).fork(0, p + 1, n))
    }),
    // type E
    fam!(44, "ee(p,p)", ["p"], Strict, |v| {
        let p = v[0];
        (6..=8).contains(&p).then(|| RawSystem::on(&[(E, p), (E, p)]).diagonal(p))
    }),
    fam!(45, "eo(n)", ["n"], Strict, |v| {
        let n = v[0];
        (6..=8).contains(&n).then(|| RawSystem::on(&[(E, n)]).doubles(0, 1, n))
    }),
    fam!(46, "ea(6)", [], Strict, |_| {
        Some(
            RawSystem::on(&[(E, 6)])
                .root(&[(0, 1, 1), (0, 6, 1)])
                .root(&[(0, 3, 1), (0, 5, 1)])
                .doubles(0, 2, 2)
                .doubles(0, 4, 4),
        )
    }),
    fam!(47, "ed(6)", [], Strict, |_| {
        Some(
            RawSystem::on(&[(E, 6)])
                .sp(0, 3, 5)
                .root(&[(0, 1, 1), (0, 3, 1), (0, 4, 1), (0, 5, 1), (0, 6, 1)])
                .root(&[(0, 2, 2), (0, 4, 2), (0, 3, 1), (0, 5, 1)]),
        )
    }),
    fam!(48, "ef(6)", [], Strict, |_| Some(ef_pair(RawSystem::on(&[(E, 6)]), true))),
    fam!(49, "ec(7)", [], Strict, |_| {
        Some(
            RawSystem::on(&[(E, 7)])
                .sp(0, 2, 2)
                .sp(0, 5, 5)
                .sp(0, 7, 7)
                .doubles(0, 1, 1)
                .doubles(0, 3, 3)
                .root(&[(0, 2, 1), (0, 4, 2), (0, 5, 1)])
                .root(&[(0, 5, 1), (0, 6, 2), (0, 7, 1)]),
        )
    }),
    fam!(50, "ef(n)", ["n"], Strict, |v| {
        let n = v[0];
        (n == 7 || n == 8).then(|| ef_pair(RawSystem::on(&[(E, n)]), false).doubles(0, 7, n))
    }),
    fam!(51, "ec*(n)", ["n"], Strict, |v| {
        let n = v[0];
        (6..=8).contains(&n).then(|| {
            RawSystem::on(&[(E, n)]).root(&[(0, 1, 1), (0, 3, 1)]).root(&[(0, 2, 1), (0, 4, 1)]).pairs(0, 3, n)
        })
    }),
    fam!(52, "ef(6)+a(2)", [], Strict, |_| Some(ef_pair(RawSystem::on(&[(E, 8)]), true).seg(0, 7, 8, 1))),
    fam!(53, "aa(2,2)+a(2)", [], Strict, |_| {
        Some(
            RawSystem::on(&[(E, 6)])
                .root(&[(0, 1, 1), (0, 6, 1)])
                .root(&[(0, 3, 1), (0, 5, 1)])
                .root(&[(0, 2, 1), (0, 4, 1)]),
        )
    }),
    fam!(54, "ac(5)+a(2)", [], Strict, |_| {
        Some(
            RawSystem::on(&[(E, 7)])
                .sp(0, 2, 2)
                .sp(0, 5, 5)
                .sp(0, 7, 7)
                .root(&[(0, 1, 1), (0, 3, 1)])
                .root(&[(0, 2, 1), (0, 4, 2), (0, 5, 1)])
                .root(&[(0, 5, 1), (0, 6, 2), (0, 7, 1)]),
        )
    }),
    // type F
    fam!(55, "ff(4,4)", [], Strict, |_| Some(RawSystem::on(&[(F, 4), (F, 4)]).diagonal(4))),
    fam!(56, "fo(4)", [], Strict, |_| Some(RawSystem::on(&[(F, 4)]).doubles(0, 1, 4))),
    fam!(57, "f(4)", [], Strict, |_| Some(RawSystem::on(&[(F, 4)]).sp(0, 1, 3).root(&[
        (0, 1, 1),
        (0, 2, 2),
        (0, 3, 3),
        (0, 4, 2)
    ]))),
    fam!(58, "fa(1+2+1)", [], Strict, |_| Some(RawSystem::on(&[(F, 4)]).root(&[(0, 1, 1), (0, 4, 1)]).seg(0, 2, 3, 1))),
    fam!(59, "fd(4)", [], Strict, |_| {
        Some(RawSystem::on(&[(F, 4)]).sp(0, 2, 2).seg(0, 1, 3, 1).root(&[(0, 2, 1), (0, 3, 2), (0, 4, 1)]))
    }),
    fam!(60, "ao(2)+a(2)", [], Strict, |_| Some(RawSystem::on(&[(F, 4)]).seg(0, 1, 2, 1).doubles(0, 3, 4))),
    fam!(61, "fc*(4)", [], Strict, |_| Some(RawSystem::on(&[(F, 4)]).pairs(0, 1, 4))),
    // type G
    fam!(62, "gg(2,2)", [], Strict, |_| Some(RawSystem::on(&[(G, 2), (G, 2)]).diagonal(2))),
    fam!(63, "go(2)", [], Strict, |_| Some(RawSystem::on(&[(G, 2)]).doubles(0, 1, 2))),
    fam!(64, "g(2)", [], NonStrict, |_| Some(RawSystem::on(&[(G, 2)]).sp(0, 2, 2).root(&[(0, 1, 2), (0, 2, 1)]))),
    fam!(65, "g'(2)", [], Strict, |_| Some(RawSystem::on(&[(G, 2)]).sp(0, 2, 2).root(&[(0, 1, 4), (0, 2, 2)]))),
    fam!(66, "g*(2)", [], Strict, |_| Some(RawSystem::on(&[(G, 2)]).root(&[(0, 1, 1), (0, 2, 1)]))),
];

// The two roots shared by ef(6), ef(7), ef(8) and ef(6)+a(2), with
// S^p = {α2, ..., α5}. E6 uses its own second root.
fn ef_pair(r: RawSystem, six: bool) -> RawSystem {
    let r = r.sp(0, 2, 5).root(&[(0, 1, 2), (0, 3, 2), (0, 4, 2), (0, 2, 1), (0, 5, 1)]);
    if six {
        r.root(&[(0, 2, 1), (0, 3, 1), (0, 4, 2), (0, 5, 2), (0, 6, 2)])
    } else {
        r.root(&[(0, 6, 2), (0, 5, 2), (0, 4, 2), (0, 2, 1), (0, 3, 1)])
    }
}

pub fn family_catalog() -> &'static [FamilyDatum] {
    &CATALOG
}

pub fn lookup_family(label: &str) -> Option<&'static FamilyDatum> {
    let label = crate::rank_one::normalize_label(label);
    CATALOG.iter().find(|f| f.label == label)
}

/// Instantiates a family by label, e.g. `instantiate("aa(p,p)", &[1])`.
pub fn instantiate(label: &str, params: &[usize]) -> Result<SphericalSystem, Error> {
    lookup_family(label).ok_or_else(|| Error::UnknownLabel(String::from(label)))?.instantiate(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixty_six_items_in_order() {
        assert_eq!(CATALOG.len(), 66);
        for (k, f) in CATALOG.iter().enumerate() {
            assert_eq!(f.index, k + 1);
        }
    }

    #[test]
    fn label_substitution() {
        let f = lookup_family("aa(p+q+p)").unwrap();
        assert_eq!(f.label_at(&[1, 2]), "aa(1+2+1)");
        let f = lookup_family("aa(1,1)+c*(n1)+c*(n2)").unwrap();
        assert_eq!(f.label_at(&[2, 3]), "aa(1,1)+c*(2)+c*(3)");
        let f = lookup_family("ac*(p)+b'(q)").unwrap();
        assert_eq!(f.label_at(&[3, 1]), "ac*(3)+b'(1)");
        assert_eq!(lookup_family("cc'(p+2)").unwrap().label_at(&[2]), "cc'(2+2)");
    }

    #[test]
    fn printed_instances() {
        let s = instantiate("aa(p,p)", &[1]).unwrap();
        assert_eq!(s.diagram().to_string(), "A1,A1");
        assert_eq!(s.sigma(), &[Weight(vec![1, 1])]);
        let s = instantiate("cc(p+q)", &[2, 2]).unwrap();
        assert_eq!(s.diagram().to_string(), "C4");
        assert_eq!(s.sigma(), &[Weight(vec![1, 2, 1, 0]), Weight(vec![0, 0, 1, 1])]);
        assert!(instantiate("ef(n)", &[9]).is_err());
        assert!(instantiate("ef(n)", &[7]).is_ok());
    }

    #[test]
    fn every_instance_validates() {
        for f in family_catalog() {
            for t in f.parameter_tuples(6) {
                let s = f.instantiate(&t).unwrap();
                if s.diagram().rank() > 9 {
                    continue;
                }
                let r = s.validate();
                assert!(r.is_valid(), "{} {:?}: {:?}", f.label, t, r);
                assert!(s.is_cuspidal(), "{} {:?}", f.label, t);
                assert_eq!(s.is_strict(), f.is_strict_at(&t), "{} {:?}", f.label, t);
            }
        }
    }
}
