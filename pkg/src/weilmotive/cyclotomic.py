"""Exact arithmetic in cyclotomic fields and polynomials over them.

Numbers are stored as coefficient vectors over Q on the power basis
1, z, ..., z^(phi(N)-1) of Q(zeta_N), reduced modulo the N-th cyclotomic
polynomial.  All arithmetic is exact (fractions.Fraction); floats only
appear in the complex embedding helper.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi: n must be positive")
    result, m = 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            result *= (p - 1) * p ** (e - 1)
        p += 1 if p == 2 else 2
    if m > 1:
        result *= m - 1
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _int_polydiv(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low-first), remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c % den[dd] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[dd]
        out[i - dd] = q
        for k in range(dd + 1):
            num[i - dd + k] -= q * den[k]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, monic."""
    if n < 1:
        raise ValueError("cyclotomic_polynomial: n must be positive")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in _divisors(n):
        if d < n:
            num = _int_polydiv(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _reduce_mod_phi(level: int, dense: list[Fraction]) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(level)
    deg = len(phi) - 1
    v = list(dense)
    if len(v) < deg:
        v += [Fraction(0)] * (deg - len(v))
    for i in range(len(v) - 1, deg - 1, -1):
        c = v[i]
        if c:
            v[i] = Fraction(0)
            # z^i = z^(i-deg) * (z^deg), and z^deg = -(phi minus leading term)
            for k in range(deg):
                v[i - deg + k] -= c * phi[k]
    return tuple(v[:deg])


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class Cyclotomic:
    """An element of Q(zeta_level), kept reduced mod the cyclotomic polynomial."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        if level < 1:
            raise ValueError("level must be positive")
        dense = [_as_fraction(c) for c in coeffs]
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", _reduce_mod_phi(level, dense))

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, x, level: int = 1) -> "Cyclotomic":
        return cls(level, [_as_fraction(x)])

    @classmethod
    def zero(cls, level: int = 1) -> "Cyclotomic":
        return cls(level, [])

    @classmethod
    def one(cls, level: int = 1) -> "Cyclotomic":
        return cls(level, [1])

    @classmethod
    def root_of_unity(cls, level: int, power: int = 1) -> "Cyclotomic":
        k = power % level
        dense = [Fraction(0)] * (k + 1)
        dense[k] = Fraction(1)
        return cls(level, dense)

    @classmethod
    def from_pairs(cls, level: int, pairs) -> "Cyclotomic":
        return cls(level, [Fraction(n, d) for n, d in pairs])

    # -- representation conversions ----------------------------------------

    def as_pairs(self) -> dict:
        return {
            "level": self.level,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    def lift(self, level: int) -> "Cyclotomic":
        """Rewrite at a larger level (the current level must divide it)."""
        if level % self.level != 0:
            raise ValueError(f"cannot lift level {self.level} to {level}")
        if level == self.level:
            return self
        step = level // self.level
        dense = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1 or 1)
        for k, c in enumerate(self.coeffs):
            dense[k * step] += c
        return Cyclotomic(level, dense)

    def descend(self, level: int) -> "Cyclotomic":
        """Rewrite at a smaller level, failing if the value does not live there."""
        if self.level % level != 0:
            raise ValueError(f"{level} does not divide level {self.level}")
        if level == self.level:
            return self
        target_dim = euler_phi(level)
        # columns: each basis power of zeta_level lifted to the current level
        cols = [
            Cyclotomic.root_of_unity(level, t).lift(self.level).coeffs
            for t in range(target_dim)
        ]
        n = len(self.coeffs)
        # solve cols * x = self.coeffs by Gaussian elimination over Q
        aug = [[cols[j][i] for j in range(target_dim)] + [self.coeffs[i]] for i in range(n)]
        piv_cols: list[int] = []
        row = 0
        for col in range(target_dim):
            sel = next((r for r in range(row, n) if aug[r][col] != 0), None)
            if sel is None:
                continue
            aug[row], aug[sel] = aug[sel], aug[row]
            inv = 1 / aug[row][col]
            aug[row] = [a * inv for a in aug[row]]
            for r in range(n):
                if r != row and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
            piv_cols.append(col)
            row += 1
        sol = [Fraction(0)] * target_dim
        for r, col in enumerate(piv_cols):
            sol[col] = aug[r][target_dim]
        for r in range(row, n):
            if aug[r][target_dim] != 0:
                raise ValueError(f"value does not lie in level {level}")
        # rows beyond the pivots must be consistent; also re-check the product
        out = Cyclotomic(level, sol)
        if out.lift(self.level) != self:
            raise ValueError(f"value does not lie in level {level}")
        return out

    def as_rational(self) -> Fraction | None:
        try:
            down = self.descend(1)
        except ValueError:
            return None
        return down.coeffs[0]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.level == self.level:
                return self, other
            common = lcm(self.level, other.level)
            return self.lift(common), other.lift(common)
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.from_rational(other, 1).lift(self.level) if self.level > 1 else Cyclotomic.from_rational(other)
        return self, NotImplemented

    def __add__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return Cyclotomic(a.level, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.level, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return Cyclotomic(a.level, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            return Cyclotomic(self.level, [c * f for c in self.coeffs])
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return Cyclotomic(a.level, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            if f == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.level, [c / f for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Cyclotomic.one(self.level)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, zeta -> zeta^(-1)."""
        n = self.level
        dense = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            dense[(n - k) % n] += c
        return Cyclotomic(n, dense)

    def galois(self, a: int) -> "Cyclotomic":
        """The automorphism zeta -> zeta^a (a must be a unit mod the level)."""
        n = self.level
        if gcd(a, n) != 1:
            raise ValueError(f"{a} is not a unit modulo {n}")
        dense = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            dense[(k * a) % n] += c
        return Cyclotomic(n, dense)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.level == self.level:
            return self.coeffs == other.coeffs
        common = lcm(self.level, other.level)
        return self.lift(common).coeffs == other.lift(common).coeffs

    def __bool__(self):
        return any(self.coeffs)

    __hash__ = None  # equality crosses levels; do not hash

    def embed(self) -> complex:
        """Numerical value under zeta_N -> exp(2*pi*i/N).  Display use only."""
        z = cmath.exp(2j * cmath.pi / self.level)
        total = 0j
        for k, c in enumerate(self.coeffs):
            if c:
                total += float(c) * z**k
        return total

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                zk = f"z{self.level}" if k == 1 else f"z{self.level}^{k}"
                if c == 1:
                    terms.append(zk)
                elif c == -1:
                    terms.append(f"-{zk}")
                else:
                    terms.append(f"{c}*{zk}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


ZERO = Cyclotomic.zero()
ONE = Cyclotomic.one()


def _as_cyclo(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    return Cyclotomic.from_rational(_as_fraction(x))


class Poly:
    """Dense univariate polynomial with cyclotomic coefficients, low degree first.

    The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_cyclo(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "Poly":
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Cyclotomic:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] - other[k] for k in range(n)])

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(x == y for x, y in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def reverse(self) -> "Poly":
        """X^deg * p(1/X); swaps a characteristic polynomial and its local factor."""
        return Poly(self.coeffs[::-1])

    def evaluate(self, x):
        acc = _as_cyclo(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def rational_coeffs(self) -> list[Fraction] | None:
        out = []
        for c in self.coeffs:
            r = c.as_rational()
            if r is None:
                return None
            out.append(r)
        return out

    def integer_coeffs(self) -> list[int] | None:
        rs = self.rational_coeffs()
        if rs is None:
            return None
        if any(r.denominator != 1 for r in rs):
            return None
        return [r.numerator for r in rs]

    def as_pairs(self) -> dict:
        level = 1
        for c in self.coeffs:
            level = lcm(level, c.level)
        rows = []
        for c in self.coeffs:
            lifted = c.lift(level)
            rows.append([[x.numerator, x.denominator] for x in lifted.coeffs])
        return {"level": level, "coeffs": rows}

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def charpoly_from_power_sums(q: int, g: int, power_sums) -> Poly:
    """Monic integer polynomial of degree 2g from its first g power sums.

    The coefficients a_1..a_g come out of Newton's identities; the upper half
    is filled in by the functional equation a_(2g-k) = q^(g-k) * a_k.  Raises
    if any intermediate coefficient fails to be an integer.
    """
    sums = [_as_fraction(s) for s in power_sums]
    if len(sums) != g:
        raise ValueError(f"need exactly {g} power sums, got {len(sums)}")
    if g < 0 or q < 2:
        raise ValueError("need g >= 0 and q >= 2")
    a = [Fraction(1)]
    for k in range(1, g + 1):
        acc = sums[k - 1]
        for i in range(1, k):
            acc += a[i] * sums[k - i - 1]
        ak = -acc / k
        if ak.denominator != 1:
            raise ValueError(f"power sums are not integral: a_{k} = {ak}")
        a.append(ak)
    full = a + [Fraction(0)] * g
    for k in range(g - 1, -1, -1):
        full[2 * g - k] = q ** (g - k) * a[k]
    # full[j] is the coefficient of T^(2g - j)
    return Poly([full[2 * g - m] for m in range(2 * g + 1)])


def power_sums_from_poly(poly: Poly, count: int) -> list[Fraction]:
    """First `count` power sums of the roots of a monic polynomial."""
    d = poly.degree
    if d < 0:
        raise ValueError("zero polynomial has no roots")
    lead = poly.coeffs[-1].as_rational()
    if lead != 1:
        raise ValueError("polynomial must be monic")
    a = []
    for i in range(1, d + 1):
        c = poly[d - i].as_rational()
        if c is None:
            raise ValueError("rational coefficients required")
        a.append(c)  # a[i-1] multiplies T^(d-i)
    sums: list[Fraction] = []
    for k in range(1, count + 1):
        if k <= d:
            acc = -k * a[k - 1]
            for i in range(1, k):
                acc -= a[i - 1] * sums[k - i - 1]
        else:
            acc = Fraction(0)
            for i in range(1, d + 1):
                acc -= a[i - 1] * sums[k - i - 1]
        sums.append(acc)
    return sums
