"""Curves y^e = gamma x^f + delta over Q and the isotypic pieces of their Jacobians.

Throughout, 2 <= e < f with gcd(e, f) = 1 and gamma, delta nonzero rationals.
The curve has genus (e-1)(f-1)/2, its differentials are indexed by pairs
(i, j) with 1 <= i < f, 1 <= j < e, and the Jacobian splits into pieces
indexed by proper divisor pairs (d, d') of (f, e).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclotomic import Cyclotomic, euler_phi
from .errors import ValidationError


@dataclass(frozen=True)
class WeilCurve:
    e: int
    f: int
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        if not (isinstance(self.e, int) and isinstance(self.f, int)):
            raise ValidationError("e and f must be integers")
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.e < 2:
            raise ValidationError(f"e = {self.e} violates e >= 2")
        if self.f <= self.e:
            raise ValidationError(f"f = {self.f} violates f > e")
        if gcd(self.e, self.f) != 1:
            raise ValidationError(
                f"gcd(e, f) = {gcd(self.e, self.f)} violates gcd(e, f) = 1")
        if self.gamma == 0:
            raise ValidationError("gamma must be nonzero")
        if self.delta == 0:
            raise ValidationError("delta must be nonzero")

    @property
    def genus(self) -> int:
        return (self.e - 1) * (self.f - 1) // 2

    def __repr__(self):
        return f"WeilCurve(y^{self.e} = {self.gamma}*x^{self.f} + {self.delta})"


def validate_curve(e, f, gamma, delta) -> WeilCurve:
    """Construct a curve, naming the violated condition on bad input."""
    return WeilCurve(e, f, gamma, delta)


@dataclass(frozen=True)
class Component:
    """One isotypic piece of the Jacobian, indexed by divisors d|f, d'|e."""

    d: int
    dprime: int
    f_d: int
    e_dp: int
    dim: int
    index_set: tuple[tuple[int, int], ...]
    units: tuple[int, ...]

    @property
    def level(self) -> int:
        """Conductor of the CM field piece: f_d * e_dp (coprime factors)."""
        return self.f_d * self.e_dp

    def unit_for_index(self, index: tuple[int, int]) -> int:
        i, j = index
        u = (i // self.d) % self.f_d
        v = (j // self.dprime) % self.e_dp
        return _crt(u, self.f_d, v, self.e_dp)

    def index_for_unit(self, b: int) -> tuple[int, int]:
        u = b % self.f_d
        v = b % self.e_dp
        return (self.d * u, self.dprime * v)

    def __repr__(self):
        return f"Component(d={self.d}, dprime={self.dprime}, dim={self.dim})"


def _crt(u: int, m: int, v: int, n: int) -> int:
    # gcd(m, n) = 1 here
    b = (u + m * ((v - u) * pow(m, -1, n) % n)) % (m * n)
    return b


def _proper_divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def components(curve: WeilCurve) -> tuple[Component, ...]:
    """All isotypic pieces, ordered by (d, d'); dimensions sum to the genus."""
    out = []
    for d in _proper_divisors(curve.f):
        for dp in _proper_divisors(curve.e):
            f_d = curve.f // d
            e_dp = curve.e // dp
            level = f_d * e_dp
            pairs = []
            for u in range(1, f_d):
                if gcd(u, f_d) != 1:
                    continue
                for v in range(1, e_dp):
                    if gcd(v, e_dp) != 1:
                        continue
                    pairs.append((u, v))
            pairs.sort()
            index_set = tuple((d * u, dp * v) for u, v in pairs)
            units = tuple(_crt(u, f_d, v, e_dp) for u, v in pairs)
            dim = euler_phi(f_d) * euler_phi(e_dp) // 2
            out.append(Component(d, dp, f_d, e_dp, dim, index_set, units))
    out.sort(key=lambda c: (c.d, c.dprime))
    return tuple(out)


def component(curve: WeilCurve, d: int, dprime: int) -> Component:
    for c in components(curve):
        if c.d == d and c.dprime == dprime:
            return c
    raise ValidationError(f"no component (d, d') = ({d}, {dprime})")


def differential_indices(curve: WeilCurve) -> list[tuple[int, int]]:
    """All 2g differential labels (i, j), holomorphic ones first in each row."""
    return [(i, j) for i in range(1, curve.f) for j in range(1, curve.e)]


def is_holomorphic(curve: WeilCurve, index: tuple[int, int]) -> bool:
    i, j = _check_index(curve, index)
    if curve.f % 2 == 1:
        return i <= (curve.f - 1) // 2
    return j <= (curve.e - 1) // 2


def holomorphic_indices(curve: WeilCurve) -> list[tuple[int, int]]:
    return [ij for ij in differential_indices(curve) if is_holomorphic(curve, ij)]


def _check_index(curve: WeilCurve, index) -> tuple[int, int]:
    i, j = index
    if not (1 <= i <= curve.f - 1 and 1 <= j <= curve.e - 1):
        raise ValidationError(f"index {index} out of range for (e, f) = "
                              f"({curve.e}, {curve.f})")
    return i, j


def conjugate_index(curve: WeilCurve, index: tuple[int, int]) -> tuple[int, int]:
    i, j = _check_index(curve, index)
    return (curve.f - i, curve.e - j)


def automorphism_eigenvalue(curve: WeilCurve, index: tuple[int, int],
                            kind: str) -> Cyclotomic:
    """Eigenvalue of the order-f ("f") or order-e ("e") automorphism on w_(i,j)."""
    i, j = _check_index(curve, index)
    if kind == "f":
        return Cyclotomic.root_of_unity(curve.f, i)
    if kind == "e":
        return Cyclotomic.root_of_unity(curve.e, -j)
    raise ValidationError(f"kind must be 'f' or 'e', not {kind!r}")


def is_good_prime(curve: WeilCurve, p: int) -> bool:
    if (curve.e * curve.f) % p == 0:
        return False
    for val in (curve.gamma, curve.delta):
        if val.numerator % p == 0 or val.denominator % p == 0:
            return False
    return True


def good_primes(curve: WeilCurve, bound: int) -> list[int]:
    """Primes p <= bound at which the curve and all pieces have good reduction."""
    from .ffield import is_prime
    return [p for p in range(2, bound + 1)
            if is_prime(p) and is_good_prime(curve, p)]


def small_rational_points(curve: WeilCurve, height: int = 12) -> dict:
    """Cheap diagnostic search for rational points; never used in verification.

    The smooth model always has a single rational point at infinity (e and f
    are coprime), so the interesting part is a small sweep over affine x.
    """
    found = []
    for num in range(-height, height + 1):
        for den in range(1, height + 1):
            if gcd(num, den) != 1:
                continue
            x = Fraction(num, den)
            v = curve.gamma * x**curve.f + curve.delta
            y = _rational_root(v, curve.e)
            if y is not None:
                found.append((x, y))
    return {"infinity": True, "affine": sorted(set(found))}


def _rational_root(v: Fraction, e: int) -> Fraction | None:
    if v == 0:
        return Fraction(0)
    if v < 0 and e % 2 == 0:
        return None
    sign = -1 if v < 0 else 1
    num = _int_root(abs(v.numerator), e)
    den = _int_root(v.denominator, e)
    if num is None or den is None:
        return None
    return Fraction(sign * num, den)


def _int_root(n: int, e: int) -> int | None:
    r = round(n ** (1.0 / e))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**e == n:
            return c
    return None
