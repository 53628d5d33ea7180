"""Parameter points, stability coordinates and the two wall arrangements."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence

from .multipartitions import MultiPartition, enumerate_multipartitions
from .partitions import n_statistic, transpose


def as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use Fraction or a 'p/q' string")
    return Fraction(x)


def format_fraction(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class ParamPoint:
    """A point ``(h, H_1, ..., H_{ell-1})`` of the parameter space."""

    ell: int
    h: Fraction
    H: tuple[Fraction, ...]

    def __init__(self, ell: int, h, H: Iterable = ()):
        H = tuple(as_fraction(x) for x in H)
        if ell < 1 or len(H) != ell - 1:
            raise ValueError(f"level {ell} needs {ell - 1} H-coordinates, got {len(H)}")
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "h", as_fraction(h))
        object.__setattr__(self, "H", H)

    @property
    def H0(self) -> Fraction:
        return -sum(self.H, Fraction(0))

    def H_full(self) -> tuple[Fraction, ...]:
        """``(H_0, H_1, ..., H_{ell-1})``."""
        return (self.H0,) + self.H

    def H_prefix(self, r: int) -> Fraction:
        """``H_1 + ... + H_{r-1}``."""
        return sum(self.H[: r - 1], Fraction(0))

    @property
    def theta(self) -> tuple[Fraction, ...]:
        return theta_of_h(self)

    def __str__(self) -> str:
        return format_param(self)


def theta_of_h(p: ParamPoint) -> tuple[Fraction, ...]:
    theta = (-p.h + p.H0,) + p.H
    assert sum(theta) == -p.h
    return theta


def h_of_theta(theta: Sequence) -> ParamPoint:
    theta = [as_fraction(x) for x in theta]
    return ParamPoint(len(theta), -sum(theta, Fraction(0)), theta[1:])


def bar_param(p: ParamPoint) -> ParamPoint:
    return ParamPoint(p.ell, -p.h, [-x for x in reversed(p.H)])


def format_param(p: ParamPoint) -> str:
    return f"h={format_fraction(p.h)} H=" + ",".join(format_fraction(x) for x in p.H)


def parse_param(text: str, ell: int | None = None) -> ParamPoint:
    fields = dict(tok.split("=", 1) for tok in text.split())
    h = Fraction(fields["h"])
    body = fields.get("H", "")
    H = [Fraction(x) for x in body.split(",") if x.strip()]
    return ParamPoint(ell if ell is not None else len(H) + 1, h, H)


@dataclass(frozen=True, order=True)
class WallForm:
    """The linear form ``a_h h + sum_i a_i H_i`` as a normalized integer vector
    ``(a_h, a_1, ..., a_{ell-1})``."""

    coefficients: tuple[int, ...]

    @classmethod
    def from_vector(cls, vec: Sequence) -> "WallForm":
        vec = [as_fraction(x) for x in vec]
        if not any(vec):
            raise ValueError("zero linear form")
        den = math.lcm(*(x.denominator for x in vec))
        ints = [int(x * den) for x in vec]
        g = math.gcd(*ints)
        ints = [x // g for x in ints]
        if next(x for x in ints if x) < 0:
            ints = [-x for x in ints]
        return cls(tuple(ints))

    def __call__(self, p: ParamPoint) -> Fraction:
        return self.coefficients[0] * p.h + sum(
            (a * x for a, x in zip(self.coefficients[1:], p.H)), Fraction(0))

    def __str__(self) -> str:
        terms = [(a, f"H{i}") for i, a in enumerate(self.coefficients[1:], start=1)]
        terms.append((self.coefficients[0], "h"))
        out = ""
        for a, name in terms:
            if not a:
                continue
            sign = "-" if a < 0 else ("+" if out else "")
            mag = "" if abs(a) == 1 else str(abs(a))
            out += f"{sign}{mag}{name}"
        return out


def parse_wall(text: str, ell: int) -> WallForm:
    vec = [0] * ell
    text = text.replace(" ", "").replace("-", "+-")
    for term in filter(None, text.split("+")):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("-")
        if term.endswith("h"):
            coeff, idx = term[:-1], 0
        else:
            coeff, name = term.split("H")
            idx = int(name)
        vec[idx] += sign * (int(coeff) if coeff else 1)
    return WallForm.from_vector(vec)


@lru_cache(maxsize=None)
def git_walls(ell: int, n: int) -> frozenset[WallForm]:
    walls = {WallForm.from_vector([1] + [0] * (ell - 1))}
    for i, j in itertools.combinations_with_replacement(range(1, ell), 2):
        for m in range(1 - n, n):
            vec = [m] + [1 if i <= k <= j else 0 for k in range(1, ell)]
            walls.add(WallForm.from_vector(vec))
    return frozenset(walls)


def c_coefficients(lam: MultiPartition) -> tuple[Fraction, ...]:
    """The c-function of ``lam`` as a linear form ``(coeff of h, coeff of H_i)``."""
    ell, n = lam.level, lam.degree
    ah = -ell * (Fraction(n * (n - 1), 2)
                 + sum(n_statistic(c) - n_statistic(transpose(c)) for c in lam))
    aH = [ell * sum(lam[r - 1].degree for r in range(i + 1, ell + 1)) for i in range(1, ell)]
    return (Fraction(ah),) + tuple(Fraction(x) for x in aH)


@lru_cache(maxsize=None)
def c_wall_forms(ell: int, n: int) -> frozenset[WallForm]:
    vectors = sorted({c_coefficients(lam) for lam in enumerate_multipartitions(ell, n)})
    return frozenset(WallForm.from_vector([x - y for x, y in zip(u, v)])
                     for u, v in itertools.combinations(vectors, 2))


def walls_through(p: ParamPoint, n: int) -> set[WallForm]:
    return {w for w in git_walls(p.ell, n) if w(p) == 0}


def is_git_regular(p: ParamPoint, n: int) -> bool:
    return not walls_through(p, n)


def on_c_wall(p: ParamPoint, n: int) -> bool:
    return any(w(p) == 0 for w in c_wall_forms(p.ell, n))
