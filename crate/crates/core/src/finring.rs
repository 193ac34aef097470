//! Small finite rings as Cayley tables, matrices over them and the matrix
//! groups used by the extension searches.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{cap_check, Error, Result};
use crate::tuples::TupleSpace;
use crate::{Caps, Elem};

/// Declarative description of a finite ring.
///
/// ```json
/// {"kind":"zn","n":24}
/// {"kind":"gf","p":2,"poly":[1,1,1]}
/// {"kind":"quotient","chars":2,"gens":["x","y"],"relations":["x^2","y^2","x*y"]}
/// {"kind":"product","factors":[{"kind":"zn","n":2},{"kind":"zn","n":2}]}
/// {"kind":"matrix","base":{"kind":"zn","n":2},"k":2}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingSpec {
    /// Integers modulo `n`.
    Zn {
        n: u32,
    },
    /// `Z_p[a]/(poly)`; `poly` lists coefficients from the constant term
    /// up and must be monic and irreducible.
    Gf {
        p: u32,
        poly: Vec<u32>,
    },
    /// `Z_chars[gens]` modulo monomial relations such as `"x^2"` or `"x*y"`.
    Quotient {
        chars: u32,
        gens: Vec<String>,
        relations: Vec<String>,
    },
    Product {
        factors: Vec<RingSpec>,
    },
    /// Ring of `k x k` matrices over `base`.
    Matrix {
        base: Box<RingSpec>,
        k: usize,
    },
}

impl RingSpec {
    pub fn zn(n: u32) -> Self {
        RingSpec::Zn { n }
    }

    pub fn gf(p: u32, poly: &[u32]) -> Self {
        RingSpec::Gf {
            p,
            poly: poly.to_vec(),
        }
    }

    pub fn quotient(chars: u32, gens: &[&str], relations: &[&str]) -> Self {
        RingSpec::Quotient {
            chars,
            gens: gens.iter().map(|s| s.to_string()).collect(),
            relations: relations.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn product(factors: Vec<RingSpec>) -> Self {
        RingSpec::Product { factors }
    }

    pub fn matrix(base: RingSpec, k: usize) -> Self {
        RingSpec::Matrix {
            base: Box::new(base),
            k,
        }
    }

    /// Short display name, e.g. `Z24` or `F2[x,y]/(x^2,y^2,x*y)`.
    pub fn display_name(&self) -> String {
        match self {
            RingSpec::Zn { n } => format!("Z{n}"),
            RingSpec::Gf { p, poly } => {
                if poly.len() == 2 {
                    format!("F{p}")
                } else {
                    format!("F{}", (*p as u64).pow(poly.len() as u32 - 1))
                }
            }
            RingSpec::Quotient {
                chars,
                gens,
                relations,
            } => {
                let base = if *chars == 2 || is_prime(*chars) {
                    format!("F{chars}")
                } else {
                    format!("Z{chars}")
                };
                format!("{base}[{}]/({})", gens.join(","), relations.join(","))
            }
            RingSpec::Product { factors } => factors
                .iter()
                .map(|f| f.display_name())
                .collect::<Vec<_>>()
                .join("x"),
            RingSpec::Matrix { base, k } => format!("M{k}({})", base.display_name()),
        }
    }
}

/// A finite ring with identity, stored as dense tables over `0..size`.
#[derive(Debug, Clone)]
pub struct RingTable {
    name: String,
    size: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    zero: Elem,
    one: Elem,
    units: Vec<Elem>,
    unit_inverse: Vec<Option<Elem>>,
    additive_order: Vec<u32>,
    labels: Vec<String>,
}

impl RingTable {
    /// Builds a ring from full tables, verifying every ring axiom.
    pub fn from_tables(
        name: impl Into<String>,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let size = labels.len();
        if add.len() != size * size || mul.len() != size * size || size == 0 {
            return Err(Error::AxiomViolation("table dimensions".into()));
        }
        if add.iter().chain(mul.iter()).any(|&x| x as usize >= size) {
            return Err(Error::AxiomViolation("table entry out of range".into()));
        }
        let a = |x: usize, y: usize| add[x * size + y] as usize;
        let m = |x: usize, y: usize| mul[x * size + y] as usize;

        let zero = (0..size)
            .find(|&z| (0..size).all(|x| a(z, x) == x && a(x, z) == x))
            .ok_or_else(|| Error::AxiomViolation("no additive identity".into()))?;
        let one = (0..size)
            .find(|&e| (0..size).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| Error::AxiomViolation("no multiplicative identity".into()))?;

        let mut neg = vec![0 as Elem; size];
        for x in 0..size {
            let y = (0..size)
                .find(|&y| a(x, y) == zero)
                .ok_or_else(|| Error::AxiomViolation(format!("{} has no negative", labels[x])))?;
            neg[x] = y as Elem;
        }
        for x in 0..size {
            for y in 0..size {
                if a(x, y) != a(y, x) {
                    return Err(Error::AxiomViolation("addition not commutative".into()));
                }
                for z in 0..size {
                    if a(a(x, y), z) != a(x, a(y, z)) {
                        return Err(Error::AxiomViolation("addition not associative".into()));
                    }
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(Error::AxiomViolation(format!(
                            "multiplication not associative at ({},{},{})",
                            labels[x], labels[y], labels[z]
                        )));
                    }
                    if m(x, a(y, z)) != a(m(x, y), m(x, z)) || m(a(x, y), z) != a(m(x, z), m(y, z))
                    {
                        return Err(Error::AxiomViolation("distributivity fails".into()));
                    }
                }
            }
        }

        let mut unit_inverse = vec![None; size];
        let mut units = Vec::new();
        for x in 0..size {
            if let Some(y) = (0..size).find(|&y| m(x, y) == one && m(y, x) == one) {
                unit_inverse[x] = Some(y as Elem);
                units.push(x as Elem);
            }
        }

        let mut additive_order = vec![0u32; size];
        for x in 0..size {
            let mut k = 1u32;
            let mut acc = x;
            while acc != zero {
                acc = a(acc, x);
                k += 1;
            }
            additive_order[x] = k;
        }

        Ok(RingTable {
            name: name.into(),
            size,
            add,
            mul,
            neg,
            zero: zero as Elem,
            one: one as Elem,
            units,
            unit_inverse,
            additive_order,
            labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    /// Sorted list of units.
    pub fn units(&self) -> &[Elem] {
        &self.units
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.unit_inverse[a as usize].is_some()
    }

    pub fn unit_inverse(&self, a: Elem) -> Option<Elem> {
        self.unit_inverse[a as usize]
    }

    pub fn additive_order(&self, a: Elem) -> u32 {
        self.additive_order[a as usize]
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the element with the given label.
    pub fn element(&self, label: &str) -> Option<Elem> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as Elem)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size as Elem
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

impl fmt::Display for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Builds and verifies the ring described by `spec`.
pub fn build_ring(spec: &RingSpec, caps: &Caps) -> Result<RingTable> {
    let name = spec.display_name();
    let (add, mul, labels) = raw_tables(spec, caps)?;
    RingTable::from_tables(name, add, mul, labels)
}

type RawTables = (Vec<Elem>, Vec<Elem>, Vec<String>);

fn raw_tables(spec: &RingSpec, caps: &Caps) -> Result<RawTables> {
    match spec {
        RingSpec::Zn { n } => {
            let n = *n as usize;
            if n < 2 {
                return Err(Error::InvalidSpec("zn needs n >= 2".into()));
            }
            cap_check("ring size", n as u128, caps.ring_size as u128)?;
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    add.push(((a + b) % n) as Elem);
                    mul.push(((a * b) % n) as Elem);
                }
            }
            Ok((add, mul, (0..n).map(|i| i.to_string()).collect()))
        }
        RingSpec::Gf { p, poly } => gf_tables(*p, poly, caps),
        RingSpec::Quotient {
            chars,
            gens,
            relations,
        } => quotient_tables(*chars, gens, relations, caps),
        RingSpec::Product { factors } => {
            if factors.is_empty() {
                return Err(Error::InvalidSpec(
                    "product needs at least one factor".into(),
                ));
            }
            let mut acc = raw_tables(&factors[0], caps)?;
            let mut first = true;
            for f in &factors[1..] {
                let rhs = raw_tables(f, caps)?;
                acc = product_tables(&acc, &rhs, first, caps)?;
                first = false;
            }
            if factors.len() == 1 {
                acc.2 = acc.2.iter().map(|l| format!("({l})")).collect();
            }
            Ok(acc)
        }
        RingSpec::Matrix { base, k } => {
            let b = raw_tables(base, caps)?;
            matrix_tables(&b, *k, caps)
        }
    }
}

fn product_tables(
    lhs: &RawTables,
    rhs: &RawTables,
    wrap_lhs: bool,
    caps: &Caps,
) -> Result<RawTables> {
    let (n1, n2) = (lhs.2.len(), rhs.2.len());
    let n = n1 * n2;
    cap_check("ring size", n as u128, caps.ring_size as u128)?;
    // index = i1 + n1 * i2
    let split = |x: usize| (x % n1, x / n1);
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for x in 0..n {
        let (x1, x2) = split(x);
        for y in 0..n {
            let (y1, y2) = split(y);
            let a1 = lhs.0[x1 * n1 + y1] as usize;
            let a2 = rhs.0[x2 * n2 + y2] as usize;
            let m1 = lhs.1[x1 * n1 + y1] as usize;
            let m2 = rhs.1[x2 * n2 + y2] as usize;
            add[x * n + y] = (a1 + n1 * a2) as Elem;
            mul[x * n + y] = (m1 + n1 * m2) as Elem;
        }
    }
    let labels = (0..n)
        .map(|x| {
            let (x1, x2) = split(x);
            if wrap_lhs {
                format!("({},{})", lhs.2[x1], rhs.2[x2])
            } else {
                // lhs labels already look like "(a,b)"
                let inner = lhs.2[x1].trim_end_matches(')');
                format!("{inner},{})", rhs.2[x2])
            }
        })
        .collect();
    Ok((add, mul, labels))
}

fn matrix_tables(base: &RawTables, k: usize, caps: &Caps) -> Result<RawTables> {
    if k == 0 {
        return Err(Error::InvalidSpec("matrix size must be positive".into()));
    }
    let q = base.2.len();
    let n = (q as u128).pow((k * k) as u32);
    cap_check("ring size", n, caps.ring_size as u128)?;
    let n = n as usize;
    let space = TupleSpace::new(q, k * k, usize::MAX)?;
    let badd = |a: Elem, b: Elem| base.0[a as usize * q + b as usize];
    let bmul = |a: Elem, b: Elem| base.1[a as usize * q + b as usize];
    let zero = (0..q as Elem)
        .find(|&z| (0..q as Elem).all(|x| badd(z, x) == x))
        .ok_or_else(|| Error::AxiomViolation("base ring has no zero".into()))?;
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    let mut xa = vec![0; k * k];
    let mut ya = vec![0; k * k];
    let mut out = vec![0; k * k];
    for x in 0..n {
        space.decode_into(x as Elem, &mut xa);
        for y in 0..n {
            space.decode_into(y as Elem, &mut ya);
            for t in 0..k * k {
                out[t] = badd(xa[t], ya[t]);
            }
            add[x * n + y] = space.encode(&out);
            for i in 0..k {
                for j in 0..k {
                    let mut acc = zero;
                    for l in 0..k {
                        acc = badd(acc, bmul(xa[i * k + l], ya[l * k + j]));
                    }
                    out[i * k + j] = acc;
                }
            }
            mul[x * n + y] = space.encode(&out);
        }
    }
    let labels = (0..n)
        .map(|x| {
            let e = space.decode(x as Elem);
            let rows: Vec<String> = (0..k)
                .map(|i| {
                    let cells: Vec<&str> = (0..k)
                        .map(|j| base.2[e[i * k + j] as usize].as_str())
                        .collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    Ok((add, mul, labels))
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Remainder of `a` modulo the monic polynomial `m` over `Z_p`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        // every monic polynomial of degree d
        let count = (p as u64).pow(d as u32);
        for c in 0..count {
            let mut div = vec![0u32; d + 1];
            let mut c = c;
            for slot in div.iter_mut().take(d) {
                *slot = (c % p as u64) as u32;
                c /= p as u64;
            }
            div[d] = 1;
            if poly_rem(poly, &div, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

fn gf_tables(p: u32, poly: &[u32], caps: &Caps) -> Result<RawTables> {
    if !is_prime(p) {
        return Err(Error::InvalidSpec(format!(
            "gf characteristic {p} is not prime"
        )));
    }
    if poly.len() < 2 || *poly.last().unwrap() != 1 || poly.iter().any(|&c| c >= p) {
        return Err(Error::InvalidSpec(
            "gf polynomial must be monic with reduced coefficients".into(),
        ));
    }
    if !is_irreducible(poly, p) {
        return Err(Error::NotIrreducible(poly.to_vec(), p));
    }
    let k = poly.len() - 1;
    let q = (p as u128).pow(k as u32);
    cap_check("ring size", q, caps.ring_size as u128)?;
    let space = TupleSpace::new(p as usize, k, usize::MAX)?;
    let q = q as usize;
    let mut add = vec![0; q * q];
    let mut mul = vec![0; q * q];
    for x in 0..q {
        let xa = space.decode(x as Elem);
        for y in 0..q {
            let ya = space.decode(y as Elem);
            let s: Vec<u32> = xa.iter().zip(&ya).map(|(a, b)| (a + b) % p).collect();
            add[x * q + y] = space.encode(&s);
            let mut prod = vec![0u32; 2 * k - 1];
            for i in 0..k {
                for j in 0..k {
                    prod[i + j] =
                        ((prod[i + j] as u64 + xa[i] as u64 * ya[j] as u64) % p as u64) as u32;
                }
            }
            let mut r = poly_rem(&prod, poly, p);
            r.resize(k, 0);
            mul[x * q + y] = space.encode(&r);
        }
    }
    let labels = (0..q)
        .map(|x| {
            poly_label(&space.decode(x as Elem), &|i| match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            })
        })
        .collect();
    Ok((add, mul, labels))
}

fn poly_label(coeffs: &[u32], mono: &dyn Fn(usize) -> String) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let m = mono(i);
        terms.push(match (c, m.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => m,
            (_, false) => format!("{c}{m}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn parse_monomial(s: &str, gens: &[String]) -> Result<Vec<u32>> {
    let mut exps = vec![0u32; gens.len()];
    for factor in s.split('*').map(str::trim) {
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidSpec(format!("bad exponent in {s:?}")))?,
            ),
            None => (factor, 1),
        };
        let i = gens
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown generator {name:?} in {s:?}")))?;
        exps[i] += e;
    }
    Ok(exps)
}

fn quotient_tables(
    chars: u32,
    gens: &[String],
    relations: &[String],
    caps: &Caps,
) -> Result<RawTables> {
    if chars < 2 {
        return Err(Error::InvalidSpec("quotient needs chars >= 2".into()));
    }
    if gens.is_empty() || gens.len() > 3 {
        return Err(Error::InvalidSpec(
            "quotient rings take 1 to 3 generators".into(),
        ));
    }
    let rels: Vec<Vec<u32>> = relations
        .iter()
        .map(|r| parse_monomial(r, gens))
        .collect::<Result<_>>()?;
    let divides = |r: &[u32], e: &[u32]| r.iter().zip(e).all(|(a, b)| a <= b);
    let killed = |e: &[u32]| rels.iter().any(|r| divides(r, e));

    // each generator needs a pure power relation, otherwise the quotient is infinite
    let mut bounds = Vec::with_capacity(gens.len());
    for i in 0..gens.len() {
        let b = rels
            .iter()
            .filter(|r| r.iter().enumerate().all(|(j, &x)| j == i || x == 0) && r[i] > 0)
            .map(|r| r[i])
            .min()
            .ok_or_else(|| {
                Error::InvalidSpec(format!("generator {} has no power relation", gens[i]))
            })?;
        bounds.push(b);
    }
    let mut monos: Vec<Vec<u32>> = Vec::new();
    let box_space = bounds.iter().map(|&b| b as u128).product::<u128>();
    cap_check("quotient monomials", box_space, caps.ring_size as u128)?;
    for idx in 0..box_space as usize {
        let mut e = vec![0u32; gens.len()];
        let mut t = idx;
        for (slot, &b) in e.iter_mut().zip(&bounds) {
            *slot = (t % b as usize) as u32;
            t /= b as usize;
        }
        if !killed(&e) {
            monos.push(e);
        }
    }
    monos.sort_by(|a, b| {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    let dim = monos.len();
    let size = (chars as u128).pow(dim as u32);
    cap_check("ring size", size, caps.ring_size as u128)?;
    let size = size as usize;
    let space = TupleSpace::new(chars as usize, dim, usize::MAX)?;
    // product of basis monomials: Some(index) or None when killed
    let mut mono_mul = vec![None; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let e: Vec<u32> = monos[i].iter().zip(&monos[j]).map(|(a, b)| a + b).collect();
            if !killed(&e) {
                mono_mul[i * dim + j] = monos.iter().position(|m| *m == e);
                if mono_mul[i * dim + j].is_none() {
                    return Err(Error::InvalidSpec("monomial basis not closed".into()));
                }
            }
        }
    }
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    let c = chars as u64;
    for x in 0..size {
        let xa = space.decode(x as Elem);
        for y in 0..size {
            let ya = space.decode(y as Elem);
            let s: Vec<u32> = xa
                .iter()
                .zip(&ya)
                .map(|(a, b)| ((*a as u64 + *b as u64) % c) as u32)
                .collect();
            add[x * size + y] = space.encode(&s);
            let mut prod = vec![0u64; dim];
            for i in 0..dim {
                if xa[i] == 0 {
                    continue;
                }
                for j in 0..dim {
                    if let Some(t) = mono_mul[i * dim + j] {
                        prod[t] = (prod[t] + xa[i] as u64 * ya[j] as u64) % c;
                    }
                }
            }
            let prod: Vec<u32> = prod.into_iter().map(|v| v as u32).collect();
            mul[x * size + y] = space.encode(&prod);
        }
    }
    let mono_name = |i: usize| {
        let parts: Vec<String> = monos[i]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| {
                if e == 1 {
                    gens[g].clone()
                } else {
                    format!("{}^{e}", gens[g])
                }
            })
            .collect();
        parts.join("*")
    };
    let labels = (0..size)
        .map(|x| poly_label(&space.decode(x as Elem), &mono_name))
        .collect();
    Ok((add, mul, labels))
}

/// Dense matrix over a ring, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatrixR {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Elem>,
}

impl MatrixR {
    pub fn new(rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix given {} entries",
                entries.len()
            )));
        }
        Ok(MatrixR {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: &[&[Elem]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(MatrixR {
            rows: rows.len(),
            cols,
            entries: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        })
    }

    pub fn zero(ring: &RingTable, rows: usize, cols: usize) -> Self {
        MatrixR {
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &RingTable, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> MatrixR {
        let mut t = vec![0; self.entries.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[j * self.rows + i] = self.get(i, j);
            }
        }
        MatrixR {
            rows: self.cols,
            cols: self.rows,
            entries: t,
        }
    }

    pub fn is_lower_triangular(&self, ring: &RingTable) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == ring.zero()))
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn render(&self, ring: &RingTable) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<&str> = (0..self.cols).map(|j| ring.label(self.get(i, j))).collect();
                cells.join(" ")
            })
            .collect();
        format!("({})", rows.join("; "))
    }
}

/// Matrix product over `ring`.
pub fn mat_mul(a: &MatrixR, b: &MatrixR, ring: &RingTable) -> Result<MatrixR> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = MatrixR::zero(ring, a.rows, b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = ring.zero();
            for l in 0..a.cols {
                acc = ring.add(acc, ring.mul(a.get(i, l), b.get(l, j)));
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// Row vector times matrix, `vA`, over the ring itself.
pub fn vec_mul(v: &[Elem], a: &MatrixR, ring: &RingTable) -> Vec<Elem> {
    (0..a.cols)
        .map(|j| {
            v.iter().enumerate().fold(ring.zero(), |acc, (i, &x)| {
                ring.add(acc, ring.mul(x, a.get(i, j)))
            })
        })
        .collect()
}

/// Returns the inverse of `a` when it lies in `GL_n(R)`.
///
/// The left inverse is found row by row: row `i` is the unique `w` with
/// `wA = e_i`, located by one pass over `R^n` that also checks that
/// `v -> vA` has trivial kernel. The candidate is then confirmed as a
/// two-sided inverse.
pub fn is_invertible(a: &MatrixR, ring: &RingTable, caps: &Caps) -> Result<Option<MatrixR>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(
            "is_invertible needs a square matrix".into(),
        ));
    }
    let n = a.rows;
    if n == 1 {
        return Ok(ring.unit_inverse(a.entries[0]).map(|u| MatrixR {
            rows: 1,
            cols: 1,
            entries: vec![u],
        }));
    }
    let space = TupleSpace::new(ring.size(), n, caps.universe)?;
    let targets: Vec<Elem> = (0..n).map(|i| space.unit_vector(i, ring.one())).collect();
    let mut found: Vec<Option<Elem>> = vec![None; n];
    let mut v = vec![0; n];
    let mut img = vec![0; n];
    for idx in space.iter() {
        space.decode_into(idx, &mut v);
        for (j, slot) in img.iter_mut().enumerate() {
            let mut acc = ring.zero();
            for (i, &x) in v.iter().enumerate() {
                acc = ring.add(acc, ring.mul(x, a.get(i, j)));
            }
            *slot = acc;
        }
        if idx != 0 && img.iter().all(|&x| x == ring.zero()) {
            return Ok(None);
        }
        let code = space.encode(&img);
        if let Some(t) = targets.iter().position(|&t| t == code) {
            found[t] = Some(idx);
        }
    }
    let mut inv = MatrixR::zero(ring, n, n);
    for (i, f) in found.iter().enumerate() {
        let Some(idx) = f else { return Ok(None) };
        for (j, x) in space.decode(*idx).into_iter().enumerate() {
            inv.set(i, j, x);
        }
    }
    let id = MatrixR::identity(ring, n);
    if mat_mul(&inv, a, ring)? == id && mat_mul(a, &inv, ring)? == id {
        Ok(Some(inv))
    } else {
        Ok(None)
    }
}

/// Matrix families searched for extending matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixFamily {
    /// All of `M_n(R)`.
    All,
    Gl,
    Mon,
    /// Monomial matrices whose nonzero entries lie in the unit subgroup.
    MonSub(Vec<Elem>),
    Lt,
    Diag,
    /// Invertible diagonal matrices with entry `i` from the `i`-th subgroup.
    DiagSub(Vec<Vec<Elem>>),
    /// Block lower-triangular matrices with `block x block` blocks and
    /// invertible diagonal blocks.
    BlockLt {
        block: usize,
    },
}

impl MatrixFamily {
    pub fn name(&self) -> &'static str {
        match self {
            MatrixFamily::All => "M_n",
            MatrixFamily::Gl => "GL_n",
            MatrixFamily::Mon => "Mon_n",
            MatrixFamily::MonSub(_) => "Mon_{G,n}",
            MatrixFamily::Lt => "LT_n",
            MatrixFamily::Diag => "Diag_n",
            MatrixFamily::DiagSub(_) => "Diag_{G_i}",
            MatrixFamily::BlockLt { .. } => "BlockLT_n",
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Checks that `s` is a nonempty subset of the units closed under
/// multiplication, hence a subgroup of `R^*`.
pub fn check_unit_subgroup(ring: &RingTable, s: &[Elem]) -> Result<()> {
    if s.is_empty() || s.iter().any(|&x| !ring.is_unit(x)) {
        return Err(Error::NotAGroup);
    }
    for &a in s {
        for &b in s {
            if !s.contains(&ring.mul(a, b)) {
                return Err(Error::NotAGroup);
            }
        }
    }
    Ok(())
}

/// Closed-form size of a family, used for cap checks and completeness
/// checks. `None` when the size depends on an invertibility filter.
pub fn family_size(ring: &RingTable, n: usize, family: &MatrixFamily) -> Option<u128> {
    let units = ring.units().len() as u128;
    match family {
        MatrixFamily::All => Some((ring.size() as u128).pow((n * n) as u32)),
        MatrixFamily::Mon => Some(factorial(n) * units.pow(n as u32)),
        MatrixFamily::MonSub(s) => Some(factorial(n) * (s.len() as u128).pow(n as u32)),
        MatrixFamily::Diag => Some(units.pow(n as u32)),
        MatrixFamily::DiagSub(gs) => Some(gs.iter().map(|g| g.len() as u128).product()),
        MatrixFamily::Gl | MatrixFamily::Lt | MatrixFamily::BlockLt { .. } => None,
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Every tuple in `choices[0] x choices[1] x ...`.
fn cartesian(choices: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for &x in c {
                let mut p = prefix.clone();
                p.push(x);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Enumerates every member of `family` in `M_n(R)` exactly once, in a
/// deterministic order.
pub fn enumerate_group(
    ring: &RingTable,
    n: usize,
    family: &MatrixFamily,
    caps: &Caps,
) -> Result<Vec<MatrixR>> {
    let q = ring.size() as u128;
    let all_elems: Vec<Elem> = ring.elements().collect();
    match family {
        MatrixFamily::All | MatrixFamily::Gl => {
            let total = q.pow((n * n) as u32);
            cap_check("matrix family", total, caps.family as u128)?;
            let space = TupleSpace::new(ring.size(), n * n, usize::MAX)?;
            let mut out = Vec::new();
            for idx in space.iter() {
                let m = MatrixR {
                    rows: n,
                    cols: n,
                    entries: space.decode(idx),
                };
                if *family == MatrixFamily::All || is_invertible(&m, ring, caps)?.is_some() {
                    out.push(m);
                }
            }
            Ok(out)
        }
        MatrixFamily::Mon | MatrixFamily::MonSub(_) => {
            let scalars: Vec<Elem> = match family {
                MatrixFamily::MonSub(s) => {
                    check_unit_subgroup(ring, s)?;
                    let mut s = s.clone();
                    s.sort_unstable();
                    s.dedup();
                    s
                }
                _ => ring.units().to_vec(),
            };
            let total = factorial(n) * (scalars.len() as u128).pow(n as u32);
            cap_check("matrix family", total, caps.family as u128)?;
            let scalar_tuples = cartesian(&vec![scalars; n]);
            let mut out = Vec::with_capacity(total as usize);
            for perm in permutations(n) {
                for s in &scalar_tuples {
                    let mut m = MatrixR::zero(ring, n, n);
                    for i in 0..n {
                        m.set(i, perm[i], s[i]);
                    }
                    out.push(m);
                }
            }
            Ok(out)
        }
        MatrixFamily::Diag | MatrixFamily::DiagSub(_) => {
            let choices: Vec<Vec<Elem>> = match family {
                MatrixFamily::DiagSub(gs) => {
                    if gs.len() != n {
                        return Err(Error::DimensionMismatch(
                            "one subgroup per coordinate".into(),
                        ));
                    }
                    for g in gs {
                        check_unit_subgroup(ring, g)?;
                    }
                    gs.clone()
                }
                _ => vec![ring.units().to_vec(); n],
            };
            let total: u128 = choices.iter().map(|c| c.len() as u128).product();
            cap_check("matrix family", total, caps.family as u128)?;
            Ok(cartesian(&choices)
                .into_iter()
                .map(|d| {
                    let mut m = MatrixR::zero(ring, n, n);
                    for (i, x) in d.into_iter().enumerate() {
                        m.set(i, i, x);
                    }
                    m
                })
                .collect())
        }
        MatrixFamily::Lt => {
            let slots = n * (n + 1) / 2;
            cap_check("matrix family", q.pow(slots as u32), caps.family as u128)?;
            let mut out = Vec::new();
            for entries in cartesian(&vec![all_elems; slots]) {
                let mut m = MatrixR::zero(ring, n, n);
                let mut it = entries.into_iter();
                for i in 0..n {
                    for j in 0..=i {
                        m.set(i, j, it.next().unwrap());
                    }
                }
                if is_invertible(&m, ring, caps)?.is_some() {
                    out.push(m);
                }
            }
            Ok(out)
        }
        MatrixFamily::BlockLt { block } => {
            let b = *block;
            if b == 0 || !n.is_multiple_of(b) {
                return Err(Error::DimensionMismatch(format!(
                    "block size {b} does not divide {n}"
                )));
            }
            let blocks = n / b;
            let diag = enumerate_group(ring, b, &MatrixFamily::Gl, caps)?;
            let full = enumerate_group(ring, b, &MatrixFamily::All, caps)?;
            let below = blocks * (blocks - 1) / 2;
            let total =
                (diag.len() as u128).pow(blocks as u32) * (full.len() as u128).pow(below as u32);
            cap_check("matrix family", total, caps.family as u128)?;
            let mut choice_lists: Vec<&Vec<MatrixR>> = Vec::new();
            let mut positions = Vec::new();
            for i in 0..blocks {
                for j in 0..=i {
                    choice_lists.push(if i == j { &diag } else { &full });
                    positions.push((i, j));
                }
            }
            let index_choices: Vec<Vec<Elem>> = choice_lists
                .iter()
                .map(|l| (0..l.len() as Elem).collect())
                .collect();
            let mut out = Vec::with_capacity(total as usize);
            for pick in cartesian(&index_choices) {
                let mut m = MatrixR::zero(ring, n, n);
                for (t, &(bi, bj)) in positions.iter().enumerate() {
                    let blk = &choice_lists[t][pick[t] as usize];
                    for r in 0..b {
                        for c in 0..b {
                            m.set(bi * b + r, bj * b + c, blk.get(r, c));
                        }
                    }
                }
                out.push(m);
            }
            Ok(out)
        }
    }
}

/// Closure of a set of invertible matrices under multiplication.
pub fn group_closure(gens: &[MatrixR], ring: &RingTable, caps: &Caps) -> Result<Vec<MatrixR>> {
    use std::collections::BTreeSet;
    let n = gens.first().map_or(0, |g| g.rows);
    let id = MatrixR::identity(ring, n);
    let mut seen: BTreeSet<MatrixR> = BTreeSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for g in gens {
            let p = mat_mul(&m, g, ring)?;
            if seen.insert(p.clone()) {
                cap_check(
                    "group closure",
                    seen.len() as u128,
                    caps.group_closure as u128,
                )?;
                frontier.push(p);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn z2_is_a_field_with_one_unit() {
        let r = build_ring(&RingSpec::zn(2), &caps()).unwrap();
        assert_eq!(r.size(), 2);
        assert_eq!(r.units(), &[1]);
    }

    #[test]
    fn quotient_ring_units_match_the_four_listed() {
        let r = build_ring(
            &RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2", "x*y"]),
            &caps(),
        )
        .unwrap();
        assert_eq!(r.size(), 8);
        let units: Vec<&str> = r.units().iter().map(|&u| r.label(u)).collect();
        assert_eq!(units, vec!["1", "1+x", "1+y", "1+x+y"]);
        assert!(r.is_commutative());
        let x = r.element("x").unwrap();
        let y = r.element("y").unwrap();
        assert_eq!(r.mul(x, y), r.zero());
        assert_eq!(r.mul(x, x), r.zero());
    }

    #[test]
    fn z24_has_phi_24_units() {
        let r = build_ring(&RingSpec::zn(24), &caps()).unwrap();
        let by_gcd = (0u32..24).filter(|&a| num_integer::gcd(a, 24) == 1).count();
        assert_eq!(r.units().len(), by_gcd);
        assert_eq!(by_gcd, 8);
    }

    #[test]
    fn gf4_multiplication_is_a_field() {
        let r = build_ring(&RingSpec::gf(2, &[1, 1, 1]), &caps()).unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.units().len(), 3);
    }

    #[test]
    fn reducible_polynomial_is_rejected() {
        // x^2 + 1 = (x + 1)^2 over F2
        let err = build_ring(&RingSpec::gf(2, &[1, 0, 1]), &caps()).unwrap_err();
        assert!(matches!(err, Error::NotIrreducible(..)));
    }

    #[test]
    fn product_and_matrix_rings_build() {
        let r = build_ring(
            &RingSpec::product(vec![RingSpec::zn(2), RingSpec::zn(2)]),
            &caps(),
        )
        .unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.units().len(), 1);
        assert_eq!(r.label(3), "(1,1)");
        let m = build_ring(&RingSpec::matrix(RingSpec::zn(2), 2), &caps()).unwrap();
        assert_eq!(m.size(), 16);
        assert_eq!(m.units().len(), 6);
        assert!(!m.is_commutative());
    }

    #[test]
    fn ring_cap_is_enforced() {
        let c = Caps {
            ring_size: 16,
            ..Caps::default()
        };
        assert!(matches!(
            build_ring(&RingSpec::zn(24), &c),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn mat_mul_over_z24_matches_direct_arithmetic() {
        let r = build_ring(&RingSpec::zn(24), &caps()).unwrap();
        let a = MatrixR::from_rows(&[&[2, 1], &[3, 1]]).unwrap();
        let sq = mat_mul(&a, &a, &r).unwrap();
        // oracle: plain integer arithmetic mod 24
        let ai = [[2i64, 1], [3, 1]];
        let mut expect = vec![];
        for i in 0..2 {
            for j in 0..2 {
                expect.push(((0..2).map(|l| ai[i][l] * ai[l][j]).sum::<i64>() % 24) as Elem);
            }
        }
        assert_eq!(sq.entries, expect);
        assert_eq!(mat_mul(&MatrixR::identity(&r, 2), &a, &r).unwrap(), a);
        let one = MatrixR::from_rows(&[&[5]]).unwrap();
        let two = MatrixR::from_rows(&[&[7]]).unwrap();
        assert_eq!(mat_mul(&one, &two, &r).unwrap().entries, vec![r.mul(5, 7)]);
        assert!(mat_mul(&a, &one, &r).is_err());
    }

    #[test]
    fn invertibility_examples() {
        let r = build_ring(&RingSpec::zn(24), &caps()).unwrap();
        let a = MatrixR::from_rows(&[&[2, 1], &[3, 1]]).unwrap();
        let inv = is_invertible(&a, &r, &caps())
            .unwrap()
            .expect("det = -1 is a unit");
        assert_eq!(mat_mul(&a, &inv, &r).unwrap(), MatrixR::identity(&r, 2));
        assert!(is_invertible(&MatrixR::zero(&r, 2, 2), &r, &caps())
            .unwrap()
            .is_none());
        let z4 = build_ring(&RingSpec::zn(4), &caps()).unwrap();
        let d = MatrixR::from_rows(&[&[2]]).unwrap();
        assert!(is_invertible(&d, &z4, &caps()).unwrap().is_none());
    }

    #[test]
    fn family_counts_match_closed_forms() {
        let f2 = build_ring(&RingSpec::zn(2), &caps()).unwrap();
        assert_eq!(
            enumerate_group(&f2, 2, &MatrixFamily::Mon, &caps())
                .unwrap()
                .len(),
            2
        );
        let z24 = build_ring(&RingSpec::zn(24), &caps()).unwrap();
        let mon = enumerate_group(&z24, 2, &MatrixFamily::Mon, &caps()).unwrap();
        assert_eq!(mon.len(), 128);
        assert_eq!(family_size(&z24, 2, &MatrixFamily::Mon), Some(128));
        let lt1 = enumerate_group(&z24, 1, &MatrixFamily::Lt, &caps()).unwrap();
        assert_eq!(lt1.len(), z24.units().len());
        let gl1 = enumerate_group(&z24, 1, &MatrixFamily::Gl, &caps()).unwrap();
        let gl1: Vec<Elem> = gl1.iter().map(|m| m.entries[0]).collect();
        assert_eq!(gl1, z24.units());
    }

    #[test]
    fn mon_sub_requires_a_group() {
        let z24 = build_ring(&RingSpec::zn(24), &caps()).unwrap();
        assert!(enumerate_group(&z24, 2, &MatrixFamily::MonSub(vec![5]), &caps()).is_err());
        let g = enumerate_group(&z24, 2, &MatrixFamily::MonSub(vec![1, 5]), &caps()).unwrap();
        assert_eq!(g.len(), 8);
    }

    #[test]
    fn gl2_f2_has_six_elements_and_block_lt_counts() {
        let f2 = build_ring(&RingSpec::zn(2), &caps()).unwrap();
        assert_eq!(
            enumerate_group(&f2, 2, &MatrixFamily::Gl, &caps())
                .unwrap()
                .len(),
            6
        );
        // 6 * 6 diagonal blocks times 16 lower blocks
        let b = enumerate_group(&f2, 4, &MatrixFamily::BlockLt { block: 2 }, &caps()).unwrap();
        assert_eq!(b.len(), 576);
        assert!(b
            .iter()
            .all(|m| is_invertible(m, &f2, &caps()).unwrap().is_some()));
    }

    #[test]
    fn group_closure_of_transposition_and_scalar() {
        let f3 = build_ring(&RingSpec::zn(3), &caps()).unwrap();
        let swap = MatrixR::from_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let scale = MatrixR::from_rows(&[&[2, 0], &[0, 1]]).unwrap();
        let g = group_closure(&[swap, scale], &f3, &caps()).unwrap();
        assert_eq!(g.len(), 8);
    }
}
