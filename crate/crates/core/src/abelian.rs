//! Finite abelian groups, their characters, and exact sums of roots of unity.
//!
//! A group given by its addition table is split into cyclic factors
//! `Z_{d_1} + ... + Z_{d_k}` with `d_1 | d_2 | ... | d_k`. Characters are then
//! exponent tuples and take values `zeta_m^e` with `m = d_k`.

use serde::{Deserialize, Serialize};

use crate::error::{cap_check, Error, Result};
use crate::Elem;

/// Invariant-factor decomposition of a finite abelian group.
#[derive(Debug, Clone)]
pub struct AbelianDecomp {
    size: usize,
    zero: Elem,
    basis: Vec<Elem>,
    orders: Vec<u32>,
    /// `size * rank` coordinates, row per element
    coords: Vec<u32>,
    /// element with given mixed-radix coordinate index
    elem_of: Vec<Elem>,
    exponent: u32,
}

/// Decomposes the group with addition table `add` (`size x size`).
pub fn decompose(add: &[Elem], size: usize) -> Result<AbelianDecomp> {
    if size == 0 || add.len() != size * size || add.iter().any(|&x| x as usize >= size) {
        return Err(Error::NotAbelian("malformed table".into()));
    }
    let a = |x: Elem, y: Elem| add[x as usize * size + y as usize];
    let zero = (0..size as Elem)
        .find(|&z| (0..size as Elem).all(|x| a(z, x) == x))
        .ok_or_else(|| Error::NotAbelian("no identity".into()))?;
    for x in 0..size as Elem {
        for y in 0..x {
            if a(x, y) != a(y, x) {
                return Err(Error::NotAbelian("not commutative".into()));
            }
        }
    }
    let mult = |k: u32, x: Elem| (0..k).fold(zero, |acc, _| a(acc, x));

    // Basis built with decreasing orders; `hcoord` holds coordinates of the
    // subgroup spanned so far.
    let mut basis: Vec<Elem> = Vec::new();
    let mut orders: Vec<u32> = Vec::new();
    let mut hcoord: Vec<Option<Vec<u32>>> = vec![None; size];
    hcoord[zero as usize] = Some(Vec::new());
    let mut hsize = 1usize;
    while hsize < size {
        // element of maximal order modulo the current subgroup
        let mut best = (0u32, zero);
        for x in 0..size as Elem {
            if hcoord[x as usize].is_some() {
                continue;
            }
            let mut k = 1u32;
            let mut acc = x;
            while hcoord[acc as usize].is_none() {
                acc = a(acc, x);
                k += 1;
                if k as usize > size {
                    return Err(Error::NotAbelian("element of unbounded order".into()));
                }
            }
            if k > best.0 {
                best = (k, x);
            }
        }
        let (d, x) = best;
        // lift: replace x by x - h with d*(x - h) = 0
        let t = hcoord[mult(d, x) as usize].clone().unwrap();
        let mut y = x;
        for (j, &tj) in t.iter().enumerate() {
            if tj % d != 0 {
                return Err(Error::NotAbelian("basis lift failed".into()));
            }
            let s = tj / d;
            let h = mult(orders[j] - s % orders[j], basis[j]);
            y = a(y, h);
        }
        if mult(d, y) != zero {
            return Err(Error::NotAbelian("lifted element has wrong order".into()));
        }
        // extend the subgroup by multiples of y
        let old: Vec<(Elem, Vec<u32>)> = hcoord
            .iter()
            .enumerate()
            .filter_map(|(e, c)| c.clone().map(|c| (e as Elem, c)))
            .collect();
        for (e, c) in old {
            let mut acc = e;
            for i in 0..d {
                let mut cc = c.clone();
                cc.push(i);
                if i > 0 {
                    if hcoord[acc as usize].is_some() {
                        return Err(Error::NotAbelian("sum is not direct".into()));
                    }
                    hcoord[acc as usize] = Some(cc);
                }
                acc = a(acc, y);
            }
        }
        for c in hcoord.iter_mut().flatten() {
            c.resize(basis.len() + 1, 0);
        }
        basis.push(y);
        orders.push(d);
        hsize *= d as usize;
    }
    basis.reverse();
    orders.reverse();
    let k = basis.len();
    let mut coords = vec![0u32; size * k];
    let mut elem_of = vec![0 as Elem; size];
    for (e, c) in hcoord.into_iter().enumerate() {
        let mut c = c.ok_or_else(|| Error::NotAbelian("element missed by basis".into()))?;
        c.reverse();
        coords[e * k..(e + 1) * k].copy_from_slice(&c);
    }
    let exponent = orders.last().copied().unwrap_or(1);
    let mut dec = AbelianDecomp {
        size,
        zero,
        basis,
        orders,
        coords,
        elem_of: Vec::new(),
        exponent,
    };
    for e in 0..size as Elem {
        elem_of[dec.coord_index(dec.coords(e))] = e;
    }
    dec.elem_of = elem_of;

    // the coordinate map must turn the table into componentwise addition
    let mut buf = vec![0u32; k];
    for x in 0..size as Elem {
        for y in 0..size as Elem {
            let (cx, cy) = (dec.coords(x), dec.coords(y));
            for j in 0..k {
                buf[j] = (cx[j] + cy[j]) % dec.orders[j];
            }
            if dec.element(&buf) != a(x, y) {
                return Err(Error::NotAbelian(
                    "decomposition does not reproduce the table".into(),
                ));
            }
        }
    }
    Ok(dec)
}

impl AbelianDecomp {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    /// Invariant factors `d_1 | ... | d_k`.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Group exponent `m = d_k`; character values are `m`-th roots of unity.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn coords(&self, a: Elem) -> &[u32] {
        let k = self.rank();
        &self.coords[a as usize * k..(a as usize + 1) * k]
    }

    fn coord_index(&self, c: &[u32]) -> usize {
        let mut idx = 0usize;
        for (x, d) in c.iter().zip(&self.orders).rev() {
            idx = idx * *d as usize + *x as usize;
        }
        idx
    }

    /// Element with coordinates `c`.
    pub fn element(&self, c: &[u32]) -> Elem {
        self.elem_of[self.coord_index(c)]
    }

    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        let c: Vec<u32> = self
            .coords(x)
            .iter()
            .zip(self.coords(y))
            .zip(&self.orders)
            .map(|((a, b), d)| (a + b) % d)
            .collect();
        self.element(&c)
    }

    pub fn neg(&self, x: Elem) -> Elem {
        let c: Vec<u32> = self
            .coords(x)
            .iter()
            .zip(&self.orders)
            .map(|(a, d)| (d - a) % d)
            .collect();
        self.element(&c)
    }

    /// The character with mixed-radix index `idx` (same radix as elements).
    pub fn character(&self, idx: usize) -> Character {
        let mut exps = Vec::with_capacity(self.rank());
        let mut t = idx;
        for &d in &self.orders {
            exps.push((t % d as usize) as u32);
            t /= d as usize;
        }
        Character { exps }
    }

    pub fn char_index(&self, chi: &Character) -> usize {
        self.coord_index(&chi.exps)
    }

    /// All characters, in index order. There are exactly `|A|` of them.
    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.size).map(|i| self.character(i))
    }

    pub fn principal(&self) -> Character {
        Character {
            exps: vec![0; self.rank()],
        }
    }

    /// Exponents `chi(a)` for every element `a`, indexed by element.
    pub fn char_table(&self, chi: &Character) -> Vec<u32> {
        (0..self.size as Elem)
            .map(|a| char_eval(chi, a, self))
            .collect()
    }

    /// Pointwise product of characters.
    pub fn char_mul(&self, chi: &Character, psi: &Character) -> Character {
        Character {
            exps: chi
                .exps
                .iter()
                .zip(&psi.exps)
                .zip(&self.orders)
                .map(|((a, b), d)| (a + b) % d)
                .collect(),
        }
    }

    /// Finds the character whose values (as exponents mod `m`) are `table`.
    pub fn character_from_table(&self, table: &[u32]) -> Option<Character> {
        let m = self.exponent;
        let mut exps = Vec::with_capacity(self.rank());
        for (&b, &d) in self.basis.iter().zip(&self.orders) {
            let v = table[b as usize] % m;
            let step = m / d;
            if !v.is_multiple_of(step) {
                return None;
            }
            exps.push(v / step);
        }
        let chi = Character { exps };
        (self.char_table(&chi) == table).then_some(chi)
    }
}

/// A character as an exponent tuple against a fixed decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Character {
    pub exps: Vec<u32>,
}

impl Character {
    pub fn is_principal(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

/// Exponent `e` with `chi(a) = zeta_m^e`, `m` the group exponent.
pub fn char_eval(chi: &Character, a: Elem, dec: &AbelianDecomp) -> u32 {
    let m = dec.exponent as u64;
    let mut e = 0u64;
    for ((&c, &x), &d) in chi.exps.iter().zip(dec.coords(a)).zip(&dec.orders) {
        e += c as u64 * x as u64 * (m / d as u64);
    }
    (e % m) as u32
}

/// Exact sum of `chi` over `subset`, in `Z[zeta_m]` for the conductor of `cyc`
/// (which must be a multiple of the group exponent).
pub fn char_sum(chi: &Character, subset: &[Elem], dec: &AbelianDecomp, cyc: &Cyclotomic) -> CycInt {
    assert_eq!(
        cyc.m % dec.exponent,
        0,
        "conductor must be a multiple of the group exponent"
    );
    let scale = cyc.m / dec.exponent;
    let mut hist = vec![0i64; cyc.m as usize];
    for &a in subset {
        hist[(char_eval(chi, a, dec) * scale) as usize] += 1;
    }
    cyc.from_histogram(&hist)
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd];
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            r[i + j] -= c * dj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// `Phi_m` with coefficients from the constant term up.
pub fn cyclotomic_poly(m: u32, conductor_cap: usize) -> Result<Vec<i64>> {
    if m == 0 {
        return Err(Error::Invalid("cyclotomic index must be positive".into()));
    }
    cap_check("cyclotomic conductor", m as u128, conductor_cap as u128)?;
    let divisors: Vec<u32> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    let mut phis: Vec<(u32, Vec<i64>)> = Vec::new();
    for &d in &divisors {
        let mut p = vec![0i64; d as usize + 1];
        p[0] = -1;
        p[d as usize] = 1;
        for (e, phi) in &phis {
            if d % e == 0 {
                p = poly_div_exact(&p, phi);
            }
        }
        phis.push((d, p));
    }
    Ok(phis.pop().unwrap().1)
}

/// Arithmetic in `Z[x]/Phi_m(x)`.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    m: u32,
    phi: Vec<i64>,
    /// `x^e mod Phi_m` for `e < m`
    powers: Vec<Vec<i64>>,
}

impl Cyclotomic {
    pub fn new(m: u32, conductor_cap: usize) -> Result<Self> {
        let phi = cyclotomic_poly(m, conductor_cap)?;
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..deg {
                cur[i] -= top * phi[i];
            }
        }
        Ok(Cyclotomic { m, phi, powers })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    pub fn zero(&self) -> CycInt {
        CycInt {
            m: self.m,
            coeffs: vec![0; self.degree()],
        }
    }

    pub fn from_int(&self, k: i64) -> CycInt {
        let mut z = self.zero();
        z.coeffs[0] = k;
        z
    }

    /// `zeta_m^e`.
    pub fn root(&self, e: u32) -> CycInt {
        CycInt {
            m: self.m,
            coeffs: self.powers[(e % self.m) as usize].clone(),
        }
    }

    /// `sum_e hist[e] zeta^e`.
    pub fn from_histogram(&self, hist: &[i64]) -> CycInt {
        let mut z = self.zero();
        self.reduce_histogram_into(hist, &mut z.coeffs);
        z
    }

    /// Adds `sum_e hist[e] zeta^e` into `out` (length = degree).
    pub fn reduce_histogram_into(&self, hist: &[i64], out: &mut [i64]) {
        for (e, &h) in hist.iter().enumerate() {
            if h != 0 {
                for (o, &p) in out.iter_mut().zip(&self.powers[e]) {
                    *o += h * p;
                }
            }
        }
    }

    pub fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        let deg = self.degree();
        let mut prod = vec![0i64; 2 * deg];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for i in (deg..prod.len()).rev() {
            let c = prod[i];
            if c != 0 {
                for j in 0..=deg {
                    prod[i - deg + j] -= c * self.phi[j];
                }
            }
        }
        prod.truncate(deg);
        CycInt {
            m: self.m,
            coeffs: prod,
        }
    }
}

/// An element of `Z[zeta_m]`, canonically reduced modulo `Phi_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycInt {
    pub m: u32,
    pub coeffs: Vec<i64>,
}

impl CycInt {
    pub fn add(&self, o: &CycInt) -> CycInt {
        assert_eq!(self.m, o.m);
        CycInt {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, o: &CycInt) -> CycInt {
        assert_eq!(self.m, o.m);
        CycInt {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.coeffs[0])
    }
}

fn is_subgroup(dec: &AbelianDecomp, b: &[Elem]) -> bool {
    let mut member = vec![false; dec.size()];
    for &x in b {
        member[x as usize] = true;
    }
    member[dec.zero() as usize]
        && b.iter()
            .all(|&x| b.iter().all(|&y| member[dec.add(x, y) as usize]))
}

/// `B° = {chi : B in ker chi}` as sorted character indices.
pub fn subgroup_annihilator(dec: &AbelianDecomp, b: &[Elem]) -> Result<Vec<usize>> {
    if !is_subgroup(dec, b) {
        return Err(Error::NotASubgroup);
    }
    Ok((0..dec.size())
        .filter(|&i| {
            let chi = dec.character(i);
            b.iter().all(|&x| char_eval(&chi, x, dec) == 0)
        })
        .collect())
}

/// `C° = {a : chi(a) = 1 for all chi in C}` for a subgroup `C` of characters
/// given by index.
pub fn character_annihilator(dec: &AbelianDecomp, c: &[usize]) -> Result<Vec<Elem>> {
    let chars: Vec<Character> = c.iter().map(|&i| dec.character(i)).collect();
    let mut member = vec![false; dec.size()];
    for &i in c {
        member[i] = true;
    }
    let closed = member[0]
        && chars.iter().all(|x| {
            chars
                .iter()
                .all(|y| member[dec.char_index(&dec.char_mul(x, y))])
        });
    if !closed {
        return Err(Error::NotASubgroup);
    }
    Ok((0..dec.size() as Elem)
        .filter(|&a| chars.iter().all(|chi| char_eval(chi, a, dec) == 0))
        .collect())
}

/// Row orthogonality of the character table:
/// `sum_a chi(a) conj(psi(a)) = |A|` if `chi = psi` and 0 otherwise.
pub fn orthogonality_check(dec: &AbelianDecomp, cyc: &Cyclotomic) -> bool {
    let m = dec.exponent();
    if !cyc.m().is_multiple_of(m) {
        return false;
    }
    let scale = cyc.m() / m;
    let tables: Vec<Vec<u32>> = dec.characters().map(|c| dec.char_table(&c)).collect();
    let size = dec.size() as i64;
    tables.iter().enumerate().all(|(i, t)| {
        tables.iter().enumerate().all(|(j, u)| {
            let mut hist = vec![0i64; cyc.m() as usize];
            for (a, b) in t.iter().zip(u) {
                hist[(((a + m - b) % m) * scale) as usize] += 1;
            }
            cyc.from_histogram(&hist).as_integer() == Some(if i == j { size } else { 0 })
        })
    })
}

/// `(B°)° = B` for every subgroup `B`. Returns the number of subgroups.
pub fn double_dual_check(
    dec: &AbelianDecomp,
    add: &[Elem],
    caps: &crate::Caps,
) -> Result<Option<usize>> {
    let sys = crate::lattice::ClosureSystem::new(dec.size(), dec.zero(), add, vec![]);
    let subs = sys.enumerate(caps.lattice)?;
    for b in &subs {
        let elems = crate::lattice::elements(b);
        let ann = subgroup_annihilator(dec, &elems)?;
        if character_annihilator(dec, &ann)? != elems || ann.len() * elems.len() != dec.size() {
            return Ok(None);
        }
    }
    Ok(Some(subs.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{build_ring, RingSpec};
    use crate::Caps;

    fn dec_of(spec: RingSpec) -> AbelianDecomp {
        let r = build_ring(&spec, &Caps::default()).unwrap();
        decompose(r.add_table(), r.size()).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(dec_of(RingSpec::zn(24)).orders(), &[24]);
        assert_eq!(
            dec_of(RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"])).orders(),
            &[2, 2, 2]
        );
        assert_eq!(
            dec_of(RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(2)])).orders(),
            &[2, 2]
        );
        assert_eq!(
            dec_of(RingSpec::product(vec![RingSpec::zn(4), RingSpec::zn(6)])).orders(),
            &[2, 12]
        );
        assert_eq!(
            dec_of(RingSpec::matrix(RingSpec::zn(4), 2)).orders(),
            &[4, 4, 4, 4]
        );
    }

    #[test]
    fn non_abelian_table_is_rejected() {
        let bad = vec![0, 1, 0, 1];
        assert!(decompose(&bad, 2).is_err());
    }

    #[test]
    fn char_eval_examples() {
        let z2 = dec_of(RingSpec::zn(2));
        let eps = z2.principal();
        assert!((0..2).all(|a| char_eval(&eps, a, &z2) == 0));
        assert_eq!(char_eval(&Character { exps: vec![1] }, 1, &z2), 1);
    }

    #[test]
    fn chi2_of_the_local_ring_is_unique() {
        let r = build_ring(
            &RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]),
            &Caps::default(),
        )
        .unwrap();
        let dec = decompose(r.add_table(), r.size()).unwrap();
        let (one, x, y) = (
            r.element("1").unwrap(),
            r.element("x").unwrap(),
            r.element("y").unwrap(),
        );
        let hits: Vec<Character> = dec
            .characters()
            .filter(|c| {
                char_eval(c, one, &dec) == 0
                    && char_eval(c, y, &dec) == 0
                    && char_eval(c, x, &dec) == 1
            })
            .collect();
        assert_eq!(hits.len(), 1);
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic_poly(1, 256).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2, 256).unwrap(), vec![1, 1]);
        assert_eq!(cyclotomic_poly(12, 256).unwrap(), vec![1, 0, -1, 0, 1]);
        assert!(cyclotomic_poly(300, 256).is_err());
    }

    #[test]
    fn phi_12_times_lower_divisors_gives_x12_minus_1() {
        fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
            let mut out = vec![0; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        }
        let lower: [&[i64]; 5] = [&[-1, 1], &[1, 1], &[1, 1, 1], &[1, 0, 1], &[1, -1, 1]];
        let mut p = cyclotomic_poly(12, 256).unwrap();
        for l in lower {
            p = mul(&p, l);
        }
        let mut expect = vec![0i64; 13];
        expect[0] = -1;
        expect[12] = 1;
        assert_eq!(p, expect);
    }

    #[test]
    fn char_sum_examples_and_orthogonality() {
        for spec in [
            RingSpec::zn(4),
            RingSpec::zn(6),
            RingSpec::gf(2, &[1, 1, 1]),
            RingSpec::zn(24),
        ] {
            let dec = dec_of(spec);
            let cyc = Cyclotomic::new(dec.exponent(), 256).unwrap();
            let all: Vec<Elem> = (0..dec.size() as Elem).collect();
            for chi in dec.characters() {
                let s = char_sum(&chi, &all, &dec, &cyc);
                if chi.is_principal() {
                    assert_eq!(s.as_integer(), Some(dec.size() as i64));
                } else {
                    assert!(s.is_zero());
                }
            }
        }
        let z4 = dec_of(RingSpec::zn(4));
        let cyc = Cyclotomic::new(4, 256).unwrap();
        assert_eq!(
            char_sum(&Character { exps: vec![1] }, &[0], &z4, &cyc).as_integer(),
            Some(1)
        );
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in 2..40 {
            let cyc = Cyclotomic::new(m, 256).unwrap();
            let mut acc = cyc.zero();
            for e in 0..m {
                acc = acc.add(&cyc.root(e));
            }
            assert!(acc.is_zero(), "m = {m}");
            // zeta^a * zeta^b = zeta^(a+b)
            assert_eq!(cyc.mul(&cyc.root(1), &cyc.root(m - 1)), cyc.from_int(1));
        }
    }

    #[test]
    fn dual_subgroup_examples() {
        let z4 = dec_of(RingSpec::zn(4));
        assert_eq!(subgroup_annihilator(&z4, &[0]).unwrap().len(), 4);
        assert_eq!(subgroup_annihilator(&z4, &[0, 1, 2, 3]).unwrap(), vec![0]);
        let b = [0, 2];
        let bo = subgroup_annihilator(&z4, &b).unwrap();
        assert_eq!(bo.len(), 2);
        assert_eq!(character_annihilator(&z4, &bo).unwrap(), vec![0, 2]);
        assert!(matches!(
            subgroup_annihilator(&z4, &[0, 1]),
            Err(Error::NotASubgroup)
        ));
    }

    #[test]
    fn structural_checks_on_small_groups() {
        let caps = Caps::default();
        for spec in [
            RingSpec::zn(12),
            RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(4)]),
        ] {
            let r = build_ring(&spec, &caps).unwrap();
            let dec = decompose(r.add_table(), r.size()).unwrap();
            let cyc = Cyclotomic::new(dec.exponent(), 256).unwrap();
            assert!(orthogonality_check(&dec, &cyc));
            assert!(double_dual_check(&dec, r.add_table(), &caps)
                .unwrap()
                .is_some());
        }
        let r = build_ring(&RingSpec::zn(12), &caps).unwrap();
        let dec = decompose(r.add_table(), 12).unwrap();
        assert_eq!(
            double_dual_check(&dec, r.add_table(), &caps).unwrap(),
            Some(6)
        );
    }

    #[test]
    fn character_from_table_round_trips() {
        let dec = dec_of(RingSpec::product(vec![RingSpec::zn(4), RingSpec::zn(6)]));
        for chi in dec.characters() {
            assert_eq!(dec.character_from_table(&dec.char_table(&chi)), Some(chi));
        }
    }
}
