"""The affine symmetric group acting on the slice ``sum(theta) = 1``.

Points of the slice are written either as ``theta = (theta_0, ..., theta_{l-1})``
or in weight coordinates ``x = (theta_1, ..., theta_{l-1})``. The fundamental
alcove is ``{theta : theta_i > 0 for all i}`` and its barycentre is
``ONE = (1/l, ..., 1/l)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .multipartitions import Charge, compose, identity_perm, inverse_perm, transposition
from .params import ParamPoint, bar_param, format_fraction

CANONICAL = "canonical"
UPPER_CLOSURE = "upper-closure"
ALCOVE_MODES = (CANONICAL, UPPER_CLOSURE)


def simple_reflect(i: int, theta: Sequence) -> tuple[Fraction, ...]:
    ell = len(theta)
    if ell < 2:
        raise ValueError("no reflections at level 1")
    t = [Fraction(x) for x in theta]
    ti = t[i]
    t[i] = -ti
    t[(i - 1) % ell] += ti
    t[(i + 1) % ell] += ti  # the same slot twice when ell == 2
    return tuple(t)


def one(ell: int) -> tuple[Fraction, ...]:
    return (Fraction(1, ell),) * ell


def theta_from_weight(x: Sequence) -> tuple[Fraction, ...]:
    return (1 - sum(x, Fraction(0)),) + tuple(Fraction(v) for v in x)


def positive_roots(ell: int) -> list[tuple[int, int]]:
    """Positive roots as index ranges ``(i, j)``, pairing ``theta_i + ... + theta_j``."""
    return [(i, j) for i in range(1, ell) for j in range(i, ell)]


def pair_root(theta: Sequence, root: tuple[int, int]) -> Fraction:
    i, j = root
    return sum(theta[i:j + 1], Fraction(0))


@dataclass(frozen=True)
class AffineMap:
    """``x -> linear @ x + translation`` in weight coordinates, with the word of
    simple reflections (in order of application) that produced it."""

    linear: tuple[tuple[Fraction, ...], ...]
    translation: tuple[Fraction, ...]
    word: tuple[int, ...]

    @classmethod
    def from_word(cls, word: Sequence[int], ell: int) -> "AffineMap":
        def run(x):
            theta = theta_from_weight(x)
            for i in word:
                theta = simple_reflect(i, theta)
            return theta[1:]

        dim = ell - 1
        origin = run([Fraction(0)] * dim)
        columns = []
        for k in range(dim):
            e = [Fraction(0)] * dim
            e[k] = Fraction(1)
            columns.append([a - b for a, b in zip(run(e), origin)])
        linear = tuple(tuple(columns[c][r] for c in range(dim)) for r in range(dim))
        return cls(linear, tuple(origin), tuple(word))

    def apply_weight(self, x: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((a * v for a, v in zip(row, x)), Fraction(0)) + t
                     for row, t in zip(self.linear, self.translation))

    def apply(self, theta: Sequence) -> tuple[Fraction, ...]:
        return theta_from_weight(self.apply_weight(theta[1:]))

    def finite_part(self) -> tuple[int, ...]:
        """The permutation given by the linear part: ``sigma_j`` maps to
        ``(j j+1)`` and ``sigma_0`` to ``(1 l)``."""
        ell = len(self.translation) + 1
        w = identity_perm(ell)
        for i in self.word:
            t = transposition(ell, ell, 1) if i == 0 else transposition(ell, i, i + 1)
            w = compose(t, w)
        return w


def perm_word(w: Sequence[int]) -> list[int]:
    """Indices ``j_1, ..., j_m`` with ``w = (j_1 j_1+1) ... (j_m j_m+1)``."""
    w = list(w)
    word = []
    # bubble sort w towards the identity by right multiplication
    for _ in range(len(w)):
        for j in range(1, len(w)):
            if w[j - 1] > w[j]:
                w[j - 1], w[j] = w[j], w[j - 1]
                word.append(j)
    return word[::-1]


def perm_act(w: Sequence[int], theta: Sequence) -> tuple[Fraction, ...]:
    """The finite symmetric group acting on the slice through ``sigma_1..sigma_{l-1}``."""
    theta = tuple(Fraction(x) for x in theta)
    for j in reversed(perm_word(w)):
        theta = simple_reflect(j, theta)
    return theta


def _iteration_cap(theta: Sequence[Fraction]) -> int:
    # the reduction crosses each separating affine root hyperplane once
    ell = len(theta)
    return 1 + sum(abs(pair_root(theta, r)).__ceil__() + 1 for r in positive_roots(ell))


def to_fundamental(theta: Sequence) -> tuple[tuple[Fraction, ...], AffineMap]:
    """Reduce a point of the slice into the closed fundamental alcove."""
    theta = tuple(Fraction(x) for x in theta)
    if sum(theta) != 1:
        raise ValueError(f"point {theta} is not on the slice sum = 1")
    ell = len(theta)
    cap = _iteration_cap(theta)
    word = []
    current = theta
    while True:
        neg = next((i for i, t in enumerate(current) if t < 0), None)
        if neg is None:
            break
        if len(word) >= cap:
            raise RuntimeError(f"reduction of {theta} exceeded {cap} steps")
        current = simple_reflect(neg, current)
        word.append(neg)
    g = AffineMap.from_word(word, ell)
    assert g.apply(theta) == current
    return current, g


def _coroot_coefficients(y: Sequence[Fraction]) -> list[Fraction]:
    # solve C a = y for the type A Cartan matrix C
    m = len(y)
    ell = m + 1
    return [sum((Fraction(min(i, j) * (ell - max(i, j)), ell) * y[j - 1]
                 for j in range(1, m + 1)), Fraction(0)) for i in range(1, m + 1)]


def charge_from_coroot(a: Sequence[int]) -> Charge:
    """``(a_1, a_2 - a_1, ..., a_{l-1} - a_{l-2}, -a_{l-1})``."""
    a = [0] + list(a) + [0]
    return Charge(a[i] - a[i - 1] for i in range(1, len(a)))


def charge_shift(s: Sequence[int]) -> tuple[int, ...]:
    """``(s_1 - s_l, s_2 - s_1, ..., s_l - s_{l-1})``."""
    return tuple(s[i] - s[i - 1] for i in range(len(s)))


def base_point(s: Sequence[int], w: Sequence[int]) -> tuple[Fraction, ...]:
    """The barycentre ``w^{-1}(ONE + charge_shift(s))`` of the alcove labelled ``(s, w)``."""
    ell = len(s)
    pt = tuple(o + d for o, d in zip(one(ell), charge_shift(s)))
    return perm_act(inverse_perm(w), pt)


@dataclass(frozen=True)
class AlcoveData:
    sign: str
    s: Charge
    w: tuple[int, ...]
    psi: tuple[Fraction, ...]
    J: tuple[int, ...]
    scale: Fraction
    mode: str = CANONICAL
    word: tuple[int, ...] = field(default=(), compare=False)

    @property
    def ell(self) -> int:
        return len(self.psi)

    def to_dict(self) -> dict:
        return {
            "sign": self.sign,
            "s": list(self.s),
            "w": list(self.w),
            "psi": [format_fraction(x) for x in self.psi],
            "J": list(self.J),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def normalized_theta(p: ParamPoint) -> tuple[str, tuple[Fraction, ...], Fraction]:
    """Sign, the point on the slice, and the scale removed. Points with
    ``h > 0`` are replaced by their bar first."""
    if p.h == 0:
        raise ValueError("theta.delta = 0: the point cannot be classified")
    sign = "+" if p.h < 0 else "-"
    q = p if sign == "+" else bar_param(p)
    scale = -q.h
    return sign, tuple(t / scale for t in q.theta), scale


def _upper_closure_probe(theta: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """A point of the alcove whose upper closure contains ``theta``: move
    slightly against every positive root."""
    ell = len(theta)
    gaps = []
    for r in positive_roots(ell):
        v = pair_root(theta, r)
        if v.denominator != 1:
            gaps.append(min(v - v.__floor__(), v.__ceil__() - v))
    t = min(gaps, default=Fraction(1)) / (2 * ell)
    x = [v - t for v in theta[1:]]
    return theta_from_weight(x)


def alcove_data(p: ParamPoint, n: int | None = None, mode: str = CANONICAL) -> AlcoveData:
    """Classify ``p``: sign, charge ``s``, permutation ``w``, the representative
    ``psi`` in the closed fundamental alcove, and the facet type ``J``."""
    if mode not in ALCOVE_MODES:
        raise ValueError(f"unknown alcove mode {mode!r}")
    sign, theta, scale = normalized_theta(p)
    ell = p.ell
    if ell == 1:
        return AlcoveData(sign, Charge([0]), (1,), (Fraction(1),), (), scale, mode)

    if mode == UPPER_CLOSURE:
        _, g = to_fundamental(_upper_closure_probe(theta))
        psi = g.apply(theta)
    else:
        psi, g = to_fundamental(theta)
    assert all(x >= 0 for x in psi)

    w = g.finite_part()
    a = _coroot_coefficients(g.translation)
    if any(x.denominator != 1 for x in a):
        raise AssertionError(f"non-integral translation {a}")
    s = charge_from_coroot(int(x) for x in a)
    J = tuple(i for i, x in enumerate(psi) if x == 0)
    data = AlcoveData(sign, s, w, psi, J, scale, mode, g.word)
    _self_check(data, g, theta, n)
    return data


def _self_check(d: AlcoveData, g: AffineMap, theta, n: int | None) -> None:
    base = base_point(d.s, d.w)
    assert g.apply(base) == one(d.ell), "alcove label does not match the reduction"
    if n is None:
        return
    for r in positive_roots(d.ell):
        for m in range(1 - n, n):
            u = pair_root(base, r) - m
            v = pair_root(theta, r) - m
            assert u * v >= 0, f"base point and point separated by a wall {r}, {m}"


def facet_type(p: ParamPoint, n: int | None = None, mode: str = CANONICAL) -> tuple[int, ...]:
    return alcove_data(p, n, mode).J
