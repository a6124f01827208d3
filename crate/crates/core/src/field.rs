//! Exact arithmetic in GF(p^k).
//!
//! Elements are packed base-p integers: the digit at position `i` is the
//! coefficient of `a^i`, where `a` is the class of the indeterminate modulo the
//! chosen irreducible polynomial. The packed value `0` is zero, and `1..p` are
//! the prime subfield.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest field size built with lookup tables.
pub const MAX_FIELD_SIZE: u32 = 1 << 22;

/// Fields at or below this size carry a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Fq(pub(crate) u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Packed base-p representation.
    #[inline]
    pub fn packed(self) -> u32 {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u32),
    OrderDivisibleByCharacteristic { n: u32, p: u32 },
    TooLarge { p: u32, k: u32 },
    DegreeMismatch { k: u32, n: u32 },
    DivisionByZero,
    NoRootOfUnity(u32),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::OrderDivisibleByCharacteristic { n, p } => {
                write!(f, "no primitive {n}-th root of unity exists in characteristic {p}")
            }
            FieldError::TooLarge { p, k } => {
                write!(f, "GF({p}^{k}) exceeds the table size limit {MAX_FIELD_SIZE}")
            }
            FieldError::DegreeMismatch { k, n } => {
                write!(f, "GF(p^{k}) has no element of order {n}")
            }
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::NoRootOfUnity(n) => write!(f, "no primitive {n}-th root registered"),
        }
    }
}

impl core::error::Error for FieldError {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Immutable description of GF(p^k) together with its registered roots of unity.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    k: u32,
    size: u32,
    /// Monic modulus, lowest degree first, length `k + 1`.
    modulus: Vec<u32>,
    /// `exp[j] = w^j` for `0 <= j < size - 1`.
    exp: Vec<u32>,
    /// `log[w^j] = j`; `log[0]` is unused.
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
    roots: BTreeMap<u32, Fq>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

/// Smallest field of characteristic `p` containing primitive `n`-th roots of
/// unity for every `n` in `orders`.
pub fn make_field(p: u32, orders: &[u32]) -> Result<FieldCtx, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    for &n in orders {
        if n == 0 || n % p == 0 {
            return Err(FieldError::OrderDivisibleByCharacteristic { n, p });
        }
    }
    let mut k = 1u32;
    loop {
        let size = (p as u64).pow(k);
        if size > MAX_FIELD_SIZE as u64 {
            return Err(FieldError::TooLarge { p, k });
        }
        if orders.iter().all(|&n| (size - 1) % n as u64 == 0) {
            return FieldCtx::with_degree(p, k, orders);
        }
        k += 1;
    }
}

impl FieldCtx {
    /// GF(p^k) with the given roots registered; every order must divide `p^k - 1`.
    pub fn with_degree(p: u32, k: u32, orders: &[u32]) -> Result<FieldCtx, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let size64 = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if k == 0 || size64 > MAX_FIELD_SIZE as u64 {
            return Err(FieldError::TooLarge { p, k });
        }
        let size = size64 as u32;
        for &n in orders {
            if n == 0 || n % p == 0 {
                return Err(FieldError::OrderDivisibleByCharacteristic { n, p });
            }
            if (size - 1) % n != 0 {
                return Err(FieldError::DegreeMismatch { k, n });
            }
        }
        let modulus = least_irreducible(p, k);
        let mut ctx = FieldCtx {
            p,
            k,
            size,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
            roots: BTreeMap::new(),
        };
        ctx.build_tables();
        for &n in orders {
            let r = ctx.least_of_order(n).ok_or(FieldError::NoRootOfUnity(n))?;
            ctx.roots.insert(n, r);
        }
        Ok(ctx)
    }

    fn build_tables(&mut self) {
        let n = self.size - 1;
        let mut w = 0u32;
        for cand in 1..self.size {
            if self.slow_order(cand) == n {
                w = cand;
                break;
            }
        }
        debug_assert!(w != 0);
        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![0u32; self.size as usize];
        let mut cur = 1u32;
        for j in 0..n {
            exp.push(cur);
            log[cur as usize] = j;
            cur = self.slow_mul(cur, w);
        }
        self.exp = exp;
        self.log = log;
        if self.size <= ADD_TABLE_LIMIT && self.p != 2 {
            let s = self.size as usize;
            let mut t = vec![0u32; s * s];
            for a in 0..s {
                for b in 0..s {
                    t[a * s + b] = self.digit_add(a as u32, b as u32);
                }
            }
            self.add_table = Some(t);
        }
    }

    fn slow_order(&self, a: u32) -> u32 {
        let mut cur = a;
        let mut ord = 1u32;
        while cur != 1 {
            cur = self.slow_mul(cur, a);
            ord += 1;
            if ord > self.size {
                return 0;
            }
        }
        ord
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0u32; self.k as usize];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn pack(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    fn digit_add(&self, mut a: u32, mut b: u32) -> u32 {
        let p = self.p;
        let mut out = 0u32;
        let mut place = 1u32;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    /// Schoolbook product modulo the modulus; independent of the log tables.
    pub fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let k = self.k as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..k {
                let m = self.modulus[i] as u64;
                prod[deg - k + i] = (prod[deg - k + i] + (p - c) * m) % p;
            }
        }
        let out: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.pack(&out)
    }

    fn least_of_order(&self, n: u32) -> Option<Fq> {
        (1..self.size).map(Fq).find(|&a| self.order(a) == n)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Modulus coefficients, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed multiplicative generator `w`.
    pub fn generator(&self) -> Fq {
        if self.size == 2 {
            Fq::ONE
        } else {
            Fq(self.exp[1])
        }
    }

    /// Registered primitive `n`-th root of unity.
    pub fn root(&self, n: u32) -> Result<Fq, FieldError> {
        if n == 1 {
            return Ok(Fq::ONE);
        }
        self.roots.get(&n).copied().ok_or(FieldError::NoRootOfUnity(n))
    }

    /// Primitive `n`-th root, computed on demand if not registered.
    pub fn root_of_unity(&self, n: u32) -> Result<Fq, FieldError> {
        if let Some(r) = self.roots.get(&n) {
            return Ok(*r);
        }
        if n == 0 || n % self.p == 0 {
            return Err(FieldError::OrderDivisibleByCharacteristic { n, p: self.p });
        }
        self.least_of_order(n).ok_or(FieldError::DegreeMismatch { k: self.k, n })
    }

    pub fn roots(&self) -> impl Iterator<Item = (u32, Fq)> + '_ {
        self.roots.iter().map(|(&n, &r)| (n, r))
    }

    /// All elements in the fixed enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.size).map(Fq)
    }

    pub fn element(&self, packed: u32) -> Option<Fq> {
        (packed < self.size).then_some(Fq(packed))
    }

    #[inline]
    pub fn zero(&self) -> Fq {
        Fq::ZERO
    }

    #[inline]
    pub fn one(&self) -> Fq {
        Fq::ONE
    }

    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.p as i64) as u32)
    }

    /// Prime-subfield value as an integer in `0..p`, if the element lies there.
    pub fn as_prime(&self, a: Fq) -> Option<u32> {
        (a.0 < self.p).then_some(a.0)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.p == 2 {
            return Fq(a.0 ^ b.0);
        }
        if self.k == 1 {
            let s = a.0 + b.0;
            return Fq(if s >= self.p { s - self.p } else { s });
        }
        match &self.add_table {
            Some(t) => Fq(t[(a.0 * self.size + b.0) as usize]),
            None => Fq(self.digit_add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        if self.k == 1 {
            return Fq(self.p - a.0);
        }
        let p = self.p;
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        Fq(out)
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        let n = self.size - 1;
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        Fq(self.exp[(if s >= n { s - n } else { s }) as usize])
    }

    pub fn inv(&self, a: Fq) -> Result<Fq, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.size - 1;
        let l = self.log[a.0 as usize];
        Ok(Fq(self.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return Fq::ONE;
        }
        if a.0 == 0 {
            return Fq::ZERO;
        }
        let n = (self.size - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        Fq(self.exp[((l * (e % n)) % n) as usize])
    }

    /// Power with a signed exponent; negative exponents need a unit.
    pub fn pow_signed(&self, a: Fq, e: i64) -> Result<Fq, FieldError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// Multiplicative order; zero for the zero element.
    pub fn order(&self, a: Fq) -> u32 {
        if a.0 == 0 {
            return 0;
        }
        let n = (self.size - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        (n / gcd(l, n)) as u32
    }

    /// Discrete logarithm to base `w`.
    pub fn log(&self, a: Fq) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    /// `w^j`.
    pub fn gen_pow(&self, j: u64) -> Fq {
        let n = (self.size - 1) as u64;
        Fq(self.exp[(j % n) as usize])
    }

    pub fn frobenius(&self, a: Fq) -> Fq {
        self.pow(a, self.p as u64)
    }

    /// Formats an element: prime-field values as integers, others as `w^j`.
    pub fn display(&self, a: Fq) -> FqDisplay<'_> {
        FqDisplay { ctx: self, a }
    }

    /// Inverse of [`FieldCtx::display`].
    pub fn parse_element(&self, s: &str) -> Option<Fq> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("w") {
            let rest = rest.trim();
            if rest.is_empty() {
                return Some(self.generator());
            }
            let e: u64 = rest.strip_prefix('^')?.trim().parse().ok()?;
            return Some(self.gen_pow(e));
        }
        let n: i64 = s.parse().ok()?;
        Some(self.from_int(n))
    }

    /// The map sending the generating class of `self` to a root of its modulus
    /// in `big`; exists when `self.k()` divides `big.k()`.
    pub fn embedding_into(&self, big: &FieldCtx) -> Option<Embedding> {
        if self.p != big.p || big.k % self.k != 0 {
            return None;
        }
        let alpha = big.elements().find(|&b| {
            let mut acc = Fq::ZERO;
            for &c in self.modulus.iter().rev() {
                acc = big.add(big.mul(acc, b), Fq(c));
            }
            acc.is_zero()
        })?;
        let mut powers = Vec::with_capacity(self.k as usize);
        let mut cur = Fq::ONE;
        for _ in 0..self.k {
            powers.push(cur);
            cur = big.mul(cur, alpha);
        }
        let image = (0..self.size)
            .map(|a| {
                let d = self.digits(a);
                d.iter().zip(&powers).fold(Fq::ZERO, |acc, (&c, &pw)| {
                    big.add(acc, big.mul(big.from_int(c as i64), pw))
                })
            })
            .collect();
        Some(Embedding { image })
    }
}

/// Field homomorphism between two finite fields, stored as a lookup table.
#[derive(Clone, Debug)]
pub struct Embedding {
    image: Vec<Fq>,
}

impl Embedding {
    pub fn apply(&self, a: Fq) -> Fq {
        self.image[a.0 as usize]
    }
}

pub struct FqDisplay<'a> {
    ctx: &'a FieldCtx,
    a: Fq,
}

impl fmt::Display for FqDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ctx.as_prime(self.a) {
            Some(n) => write!(f, "{n}"),
            None => match self.ctx.log(self.a) {
                Some(1) => write!(f, "w"),
                Some(j) => write!(f, "w^{j}"),
                None => write!(f, "0"),
            },
        }
    }
}

/// Lexicographically least monic irreducible polynomial of degree `k` over
/// GF(p), comparing coefficients from degree `k - 1` down to `0`.
fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = p.pow(k);
    for tail in 0..count {
        let mut poly = Vec::with_capacity(k as usize + 1);
        let mut t = tail;
        for _ in 0..k {
            poly.push(t % p);
            t /= p;
        }
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial exists in every degree")
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = modinv(m[dm], p);
    while r.len() > dm {
        let top = *r.last().unwrap();
        if top != 0 {
            let c = top * lead_inv % p;
            let shift = r.len() - 1 - dm;
            for (i, &mc) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * mc % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn modinv(a: u32, p: u32) -> u32 {
    let mut r = 1u32;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let k = poly.len() as u32 - 1;
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        for tail in 0..p.pow(d) {
            let mut cand = Vec::with_capacity(d as usize + 1);
            let mut t = tail;
            for _ in 0..d {
                cand.push(t % p);
                t /= p;
            }
            cand.push(1);
            if poly_rem(poly, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// `(n)_xi = 1 + xi + ... + xi^(n-1)`.
pub fn xi_int(ctx: &FieldCtx, xi: Fq, n: u64) -> Fq {
    let mut acc = Fq::ZERO;
    let mut pw = Fq::ONE;
    for _ in 0..n {
        acc = ctx.add(acc, pw);
        pw = ctx.mul(pw, xi);
    }
    acc
}

/// `(n)_xi! = (1)_xi (2)_xi ... (n)_xi`, with `(0)_xi! = 1`.
pub fn xi_factorial(ctx: &FieldCtx, xi: Fq, n: u64) -> Fq {
    (1..=n).fold(Fq::ONE, |acc, i| ctx.mul(acc, xi_int(ctx, xi, i)))
}

/// Row `n` of the xi-binomial triangle, built with the recurrence
/// `C(n, i) = C(n-1, i-1) + xi^i C(n-1, i)`; no division occurs.
pub fn xi_binomial_row(ctx: &FieldCtx, xi: Fq, n: usize) -> Vec<Fq> {
    let mut row = vec![Fq::ONE];
    for m in 1..=n {
        let mut next = vec![Fq::ZERO; m + 1];
        next[0] = Fq::ONE;
        next[m] = Fq::ONE;
        for i in 1..m {
            let t = ctx.mul(ctx.pow(xi, i as u64), row[i]);
            next[i] = ctx.add(row[i - 1], t);
        }
        row = next;
    }
    row
}

pub fn xi_binomial(ctx: &FieldCtx, xi: Fq, n: usize, i: usize) -> Fq {
    if i > n {
        return Fq::ZERO;
    }
    xi_binomial_row(ctx, xi, n)[i]
}

/// Ordinary binomial coefficient reduced into the prime field.
pub fn binomial_mod(ctx: &FieldCtx, n: u64, i: u64) -> Fq {
    if i > n {
        return Fq::ZERO;
    }
    let p = ctx.p() as u64;
    // Lucas' theorem over the base-p digits.
    let (mut n, mut i) = (n, i);
    let mut acc = 1u64;
    while n > 0 || i > 0 {
        let (nd, id) = (n % p, i % p);
        if id > nd {
            return Fq::ZERO;
        }
        let mut c = 1u64;
        for t in 0..id {
            c = c * (nd - t) % p;
        }
        let mut den = 1u64;
        for t in 1..=id {
            den = den * t % p;
        }
        c = c * modinv(den as u32, p as u32) as u64 % p;
        acc = acc * c % p;
        n /= p;
        i /= p;
    }
    ctx.from_int(acc as i64)
}

/// `(p-1)! / (i! (p-i)!)` for `0 < i < p`, i.e. `binom(p, i) / p` mod p.
pub fn reduced_binomial(ctx: &FieldCtx, i: u64) -> Fq {
    let p = ctx.p() as u64;
    debug_assert!(0 < i && i < p);
    let mut num = 1u64;
    for t in 1..p {
        num = num * t % p;
    }
    let mut den = 1u64;
    for t in 1..=i {
        den = den * t % p;
    }
    for t in 1..=(p - i) {
        den = den * t % p;
    }
    ctx.from_int((num * modinv(den as u32, p as u32) as u64 % p) as i64)
}
