"""Finite fields F_(p^r) with deterministic construction and fast tables.

Elements are encoded as integers sum(c_i * p^i) for coefficient vectors
(c_0, ..., c_(r-1)) on the power basis of F_p[x]/(modulus).  Construction is
fully deterministic: the modulus is the lexicographically smallest monic
irreducible (coefficients compared low to high) and the generator is the
smallest full-order element in the same ordering, so character tables and
everything derived from them are reproducible across runs.

The full exponential table g^0, g^1, ... is always built (it is the backbone
of every bulk sweep); the inverse table is kept only for fields up to
`dlog_limit` elements, with baby-step giant-step behind the same dlog() call
above that.  Bulk routines build a transient inverse permutation instead of
calling dlog() per element.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, isqrt, lcm

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import ResourceLimitError, ValidationError

DEFAULT_SIZE_LIMIT = 1 << 26
DEFAULT_DLOG_LIMIT = 1 << 20

_BLOCK = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; fine at the sizes this package allows."""
    out: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (coefficient lists, low degree first)

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            c = (c * inv_lead) % p
            for k in range(dm + 1):
                a[i - dm + k] = (a[i - dm + k] - c * m[k]) % p
    return _ptrim(a[:dm])


def _ppowmod(a, e, m, p):
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(f, p):
    """Rabin's test: x^(p^r) = x mod f, and x^(p^(r/l)) - x coprime to f."""
    r = len(f) - 1
    if r < 1:
        return False
    x_p = [0, 1]
    powers = {}
    h = list(x_p)
    for k in range(1, r + 1):
        h = _ppowmod(h, p, f, p)
        powers[k] = list(h)
    top = list(powers[r])
    if len(top) < 2:
        top += [0] * (2 - len(top))
    if _ptrim([(top[0]) % p, (top[1] - 1) % p] + [c % p for c in top[2:]]):
        return False
    for ell in factorize(r):
        h = list(powers[r // ell])
        if len(h) < 2:
            h += [0] * (2 - len(h))
        diff = _ptrim([h[0] % p, (h[1] - 1) % p] + [c % p for c in h[2:]])
        g = _pgcd(f, diff, p)
        if len(g) - 1 > 0:
            return False
    return True


def _find_modulus(p, r):
    if r == 1:
        return (0, 1)
    for tail in product(range(p), repeat=r):
        f = list(tail) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


class Field:
    """F_(p^r) with encoded-integer elements and a full exponential table."""

    def __init__(self, p, r, modulus, generator, exp_table, dlog_table):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        self.generator = generator
        self.exp = exp_table
        self._dlog_table = dlog_table
        self._baby = None
        self._giant_step = None
        self._pair_counts: dict = {}
        self._unit_factors = factorize(self.q - 1) if self.q > 1 else {}

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, p: int, r: int = 1, *, size_limit: int = DEFAULT_SIZE_LIMIT,
              dlog_limit: int = DEFAULT_DLOG_LIMIT, generator_index: int = 0) -> "Field":
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
        if r < 1:
            raise ValidationError("r must be >= 1")
        q = p**r
        if q > size_limit:
            raise ResourceLimitError(
                f"field with {q} elements exceeds the enumeration bound {size_limit}",
                required=q, limit=size_limit)
        modulus = _find_modulus(p, r)
        field = cls(p, r, modulus, None, None, None)
        gen = field._find_generator(generator_index)
        field.generator = gen
        field._build_exp_table()
        if q - 1 > 0 and np.unique(field.exp).size != q - 1:
            raise RuntimeError("generator failed to enumerate the unit group")
        if q <= dlog_limit:
            field._dlog_table = field._inverse_table()
        return field

    def _find_generator(self, index: int) -> int:
        q = self.q
        if q == 2:
            return 1
        targets = [(q - 1) // ell for ell in self._unit_factors]
        found = 0
        for digits in product(range(self.p), repeat=self.r):
            enc = self.encode(digits)
            if enc in (0, 1):
                continue
            if all(self.pow(enc, t) != 1 for t in targets):
                if found == index:
                    return enc
                found += 1
        raise RuntimeError("no generator found")  # unreachable for q > 2

    def _mul_by_g_matrix(self) -> np.ndarray:
        cols = []
        g_poly = self.decode(self.generator)
        for i in range(self.r):
            xi = [0] * i + [1]
            col = _pmod(_pmul(g_poly, xi, self.p), list(self.modulus), self.p)
            col = col + [0] * (self.r - len(col))
            cols.append(col)
        return np.array(cols, dtype=np.int64).T

    def _build_exp_table(self):
        q = self.q
        n = q - 1
        if n <= 0:
            self.exp = np.zeros(0, dtype=np.int64)
            return
        A = self._mul_by_g_matrix()
        block = min(_BLOCK, n)
        X = np.zeros((block, self.r), dtype=np.int64)
        X[0, 0] = 1
        for k in range(1, block):
            X[k] = (A @ X[k - 1]) % self.p
        AB = np.eye(self.r, dtype=np.int64)
        M = A.copy()
        e = block
        while e:
            if e & 1:
                AB = (AB @ M) % self.p
            M = (M @ M) % self.p
            e >>= 1
        ABt = AB.T.copy()
        powers = np.array([self.p**i for i in range(self.r)], dtype=np.int64)
        exp = np.empty(n, dtype=np.int64)
        pos = 0
        cur = X
        while pos < n:
            take = min(block, n - pos)
            exp[pos:pos + take] = cur[:take] @ powers
            pos += take
            if pos < n:
                cur = (cur @ ABt) % self.p
        self.exp = exp

    def _inverse_table(self) -> np.ndarray:
        inv = np.full(self.q, -1, dtype=np.int64)
        inv[self.exp] = np.arange(self.q - 1, dtype=np.int64)
        return inv

    # -- element encoding --------------------------------------------------

    def encode(self, digits) -> int:
        enc = 0
        for i, c in enumerate(digits):
            enc += (c % self.p) * self.p**i
        return enc

    def decode(self, enc: int) -> list[int]:
        out = []
        x = enc
        for _ in range(self.r):
            out.append(x % self.p)
            x //= self.p
        return _ptrim(out)

    def from_rational(self, value) -> int:
        """Reduce a rational number into the prime subfield."""
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise ValidationError(
                f"denominator of {value} is divisible by p={self.p}")
        num = value.numerator % self.p
        den = value.denominator % self.p
        return (num * pow(den, self.p - 2, self.p)) % self.p

    # -- element arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        out = 0
        pw = 1
        for _ in range(self.r):
            out += ((a % self.p + b % self.p) % self.p) * pw
            a //= self.p
            b //= self.p
            pw *= self.p
        return out

    def neg(self, a: int) -> int:
        out = 0
        pw = 1
        for _ in range(self.r):
            out += ((-a) % self.p) * pw
            a //= self.p
            pw *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        prod = _pmod(_pmul(self.decode(a), self.decode(b), self.p),
                     list(self.modulus), self.p)
        return self.encode(prod + [0] * (self.r - len(prod)))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        order = self.q - 1
        for ell, e in self._unit_factors.items():
            for _ in range(e):
                if self.pow(a, order // ell) == 1:
                    order //= ell
                else:
                    break
        return order

    # -- discrete logarithms -----------------------------------------------

    def dlog(self, a: int) -> int:
        """k with generator^k = a; raises for a = 0."""
        if a == 0:
            raise ValueError("dlog(0) is undefined")
        if a == 1:
            return 0
        if self._dlog_table is not None:
            return int(self._dlog_table[a])
        return self._dlog_bsgs(a)

    def _dlog_bsgs(self, a: int) -> int:
        n = self.q - 1
        m = isqrt(n) + 1
        if self._baby is None:
            baby = {}
            cur = 1
            for j in range(m):
                baby.setdefault(cur, j)
                cur = self.mul(cur, self.generator)
            self._baby = baby
            self._giant_step = self.inv(self.pow(self.generator, m))
        cur = a
        for i in range(m + 1):
            j = self._baby.get(cur)
            if j is not None:
                return (i * m + j) % n
            cur = self.mul(cur, self._giant_step)
        raise ValueError(f"element {a} is not in the group generated by g")

    def bulk_dlog(self, arr: np.ndarray) -> np.ndarray:
        """dlog of an array of nonzero encodings, via a transient inverse table."""
        if self._dlog_table is not None:
            return self._dlog_table[arr]
        inv = self._inverse_table()
        return inv[arr]

    # -- characters --------------------------------------------------------

    def character(self, n: int, power: int = 1) -> "Character":
        return Character(self, n, power)

    # -- bulk helpers ------------------------------------------------------

    def _one_minus(self, arr: np.ndarray) -> np.ndarray:
        """Encoding of 1 - x for an array of encodings."""
        p = self.p
        out = np.zeros_like(arr)
        rest = arr.copy()
        pw = 1
        for i in range(self.r):
            d = rest % p
            if i == 0:
                d = (1 - d) % p
            else:
                d = (-d) % p
            out += d * pw
            rest //= p
            pw *= p
        return out

    def pair_count_matrix(self, n1: int, n2: int) -> np.ndarray:
        """M[a][b] = #{t != 0,1 : dlog t = a mod n1, dlog(1-t) = b mod n2}."""
        key = (n1, n2)
        cached = self._pair_counts.get(key)
        if cached is not None:
            return cached
        n = self.q - 1
        k = np.arange(1, n, dtype=np.int64)
        one_minus = self._one_minus(self.exp[1:])
        logs = self.bulk_dlog(one_minus)
        combo = (k % n1) * n2 + (logs % n2)
        M = np.bincount(combo, minlength=n1 * n2).reshape(n1, n2)
        self._pair_counts[key] = M
        return M

    def __repr__(self):
        return f"Field(p={self.p}, r={self.r})"


@lru_cache(maxsize=32)
def build_field(p: int, r: int = 1, *, size_limit: int = DEFAULT_SIZE_LIMIT,
                dlog_limit: int = DEFAULT_DLOG_LIMIT, generator_index: int = 0) -> Field:
    """Cached deterministic field constructor; see Field.build."""
    return Field.build(p, r, size_limit=size_limit, dlog_limit=dlog_limit,
                       generator_index=generator_index)


class Character:
    """Multiplicative character x -> zeta_n^(power * dlog x), zero on 0 (excluded)."""

    def __init__(self, field: Field, n: int, power: int = 1):
        if n < 1:
            raise ValidationError("character order must be positive")
        if (field.q - 1) % n != 0:
            raise ValidationError(
                f"order {n} does not divide q - 1 = {field.q - 1}")
        self.field = field
        self.n = n
        self.power = power % n if n > 1 else 0

    @property
    def exact_order(self) -> int:
        if self.n == 1:
            return 1
        return self.n // gcd(self.n, self.power)

    @property
    def is_trivial(self) -> bool:
        return self.exact_order == 1

    def __call__(self, x: int) -> Cyclotomic:
        if x == 0:
            raise ValueError("characters are not evaluated at 0")
        k = self.field.dlog(x)
        return Cyclotomic.root_of_unity(self.n, (self.power * k) % self.n)

    def __pow__(self, m: int) -> "Character":
        return Character(self.field, self.n, (self.power * m) % self.n)

    def conj(self) -> "Character":
        return Character(self.field, self.n, (-self.power) % self.n)

    def __repr__(self):
        return f"Character(q={self.field.q}, n={self.n}, power={self.power})"


def jacobi_sum(chi: Character, psi: Character) -> Cyclotomic:
    """J(chi, psi) = sum over t != 0, 1 of chi(t) psi(1-t), exactly.

    Both characters must be nontrivial and live on the same field.  The result
    sits at cyclotomic level lcm(n_chi, n_psi).  When chi*psi is also
    nontrivial, |J|^2 = q; the degenerate pair gives J = -chi(-1).
    """
    if chi.field is not psi.field:
        raise ValidationError("jacobi_sum: characters on different fields")
    if chi.is_trivial or psi.is_trivial:
        raise ValidationError("jacobi_sum: characters must be nontrivial")
    field = chi.field
    n1, n2 = chi.n, psi.n
    M = field.pair_count_matrix(n1, n2)
    level = lcm(n1, n2)
    s1, s2 = level // n1, level // n2
    dense = [0] * level
    for a in range(n1):
        row = M[a]
        ea = (chi.power * a * s1) % level
        for b in range(n2):
            c = int(row[b])
            if c:
                dense[(ea + psi.power * b * s2) % level] += c
    return Cyclotomic(level, dense)


def count_affine_points(curve, field: Field) -> int:
    """Exact number of (x, y) in the field with y^e = gamma x^f + delta.

    Pure enumeration driven by the exponential table: for each x the number of
    e-th roots of v = gamma x^f + delta is gcd(e, q-1) or 0 according to
    dlog(v), and 1 when v = 0.
    """
    e, f = curve.e, curve.f
    p, q = field.p, field.q
    gamma, delta = Fraction(curve.gamma), Fraction(curve.delta)
    if (e * f) % p == 0:
        raise ValidationError(f"p={p} divides e*f: bad reduction")
    for name, val in (("gamma", gamma), ("delta", delta)):
        if val.numerator % p == 0 or val.denominator % p == 0:
            raise ValidationError(f"p={p} divides {name}: bad reduction")
    gbar = field.from_rational(gamma)
    dbar = field.from_rational(delta)
    ge = gcd(e, q - 1)
    n = q - 1
    log_gamma = field.dlog(gbar)
    k = np.arange(n, dtype=np.int64)
    # gamma * x^f for x = g^k, then add the scalar delta (touches digit 0 only)
    v = field.exp[(k * f + log_gamma) % n]
    v = v - (v % p) + ((v % p + dbar) % p)
    total = int(np.count_nonzero(v == 0))
    nonzero = v[v != 0]
    logs = field.bulk_dlog(nonzero)
    total += ge * int(np.count_nonzero(logs % ge == 0))
    # x = 0 contributes via v = delta, which is nonzero at a good prime
    if field.dlog(dbar) % ge == 0:
        total += ge
    return total
