"""Multipartitions, their dominance order, symmetries and the charge bijection."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .partitions import (
    Partition,
    Relation,
    _compare_prefix_sums,
    beta_numbers,
    format_partition,
    from_beta_numbers,
    is_ell_core,
    parse_partition,
    partitions_of,
    transpose,
)


class MultiPartition(tuple):
    """An ``ell``-tuple of partitions. Components are 1-based in the maths,
    0-based as Python indices."""

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = [c if isinstance(c, Partition) else Partition(c) for c in components]
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        return super().__new__(cls, comps)

    @property
    def level(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(c.degree for c in self)

    def __repr__(self) -> str:
        return f"MultiPartition({[list(c) for c in self]})"

    def __str__(self) -> str:
        return format_multipartition(self)


class Charge(tuple):
    """A vector of integers summing to zero."""

    def __new__(cls, entries: Iterable[int]):
        entries = [int(x) for x in entries]
        if sum(entries) != 0:
            raise ValueError(f"charge {entries} does not sum to 0")
        return super().__new__(cls, entries)

    def __repr__(self) -> str:
        return f"Charge({list(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self) + ")"


def format_multipartition(lam: Sequence[Sequence[int]]) -> str:
    return "[" + ",".join(format_partition(c) for c in lam) + "]"


def parse_multipartition(text: str) -> MultiPartition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"not a multipartition: {text!r}")
    body = text[1:-1]
    comps, depth, start = [], 0, None
    for i, ch in enumerate(body):
        if ch == "[":
            if depth == 0:
                start = i
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                comps.append(parse_partition(body[start:i + 1]))
        elif depth == 0 and ch not in ", \t":
            raise ValueError(f"not a multipartition: {text!r}")
    if depth != 0 or not comps:
        raise ValueError(f"not a multipartition: {text!r}")
    return MultiPartition(comps)


def parse_charge(text: str) -> Charge:
    text = text.strip().lstrip("(").rstrip(")")
    return Charge(int(x) for x in text.split(",") if x.strip())


def empty(ell: int) -> MultiPartition:
    return MultiPartition([()] * ell)


def top(ell: int, n: int) -> MultiPartition:
    """The dominance-maximal element ``((n), (), ..., ())``."""
    return MultiPartition([(n,) if n else ()] + [()] * (ell - 1))


def _sort_key(lam: MultiPartition):
    return tuple((-c.degree, tuple(-x for x in c)) for c in lam)


def enumerate_multipartitions(ell: int, n: int) -> list[MultiPartition]:
    """All of P(ell, n).

    Ordered lexicographically by component, where a single component is
    ordered by decreasing size and then reverse lexicographically; the first
    element is ``((n), (), ...)`` and the last ``((), ..., (1^n))``.
    """
    out = []
    for sizes in _compositions(n, ell):
        for comps in itertools.product(*(partitions_of(k) for k in sizes)):
            out.append(MultiPartition(comps))
    out.sort(key=_sort_key)
    return out


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def multi_dominates(lam: MultiPartition, mu: MultiPartition) -> Relation:
    """Dominance on multipartitions; ``GREATER`` means ``mu`` is below ``lam``."""
    if lam.level != mu.level or lam.degree != mu.degree:
        raise ValueError("multipartitions of different shape")
    return _compare_prefix_sums(_cumulative(lam, mu), _cumulative(mu, lam))


def _cumulative(lam: MultiPartition, other: MultiPartition) -> list[int]:
    # one entry per (component j, prefix length i), padded to a common length
    out, base = [], 0
    for a, b in zip(lam, other):
        width = max(len(a), len(b), 1)
        total = base
        for i in range(width):
            total += a[i] if i < len(a) else 0
            out.append(total)
        base += a.degree
    return out


def componentwise_transpose(lam: MultiPartition) -> MultiPartition:
    return MultiPartition(transpose(c) for c in lam)


def bar(lam: MultiPartition) -> MultiPartition:
    """Reverse the components and transpose each of them."""
    return MultiPartition(transpose(c) for c in reversed(lam))


# Permutations of {1..ell} are tuples w with w[i-1] = w(i); products compose
# as maps, (v w)(x) = v(w(x)).

def identity_perm(ell: int) -> tuple[int, ...]:
    return tuple(range(1, ell + 1))


def compose(v: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    return tuple(v[w[x] - 1] for x in range(len(w)))


def inverse_perm(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


def transposition(ell: int, a: int, b: int) -> tuple[int, ...]:
    w = list(range(1, ell + 1))
    w[a - 1], w[b - 1] = b, a
    return tuple(w)


def sym_act(w: Sequence[int], lam: MultiPartition) -> MultiPartition:
    """Left action of a permutation: component ``i`` of ``w . lam`` is
    component ``w^{-1}(i)`` of ``lam``. On a simple transposition this just
    swaps the two components."""
    if len(w) != lam.level:
        raise ValueError("permutation and multipartition have different level")
    winv = inverse_perm(w)
    return MultiPartition(lam[winv[i] - 1] for i in range(lam.level))


def _truncation(s: Sequence[int], n: int, ell: int) -> int:
    return n + max(abs(x) for x in s) + ell + 1


def tau(s: Sequence[int], lam: MultiPartition) -> Partition:
    """The partition whose charge-0 beta-set interleaves the components'
    beta-sets of charges ``s_i`` on the runners ``i = 1..ell``."""
    s = Charge(s)
    ell = len(s)
    if lam.level != ell:
        raise ValueError("charge and multipartition have different level")
    N = _truncation(s, lam.degree, ell)
    # below this cutoff every runner is a full staircase
    cutoff = ell * (min(s) - N + 1)
    merged = []
    for i, (si, comp) in enumerate(zip(s, lam), start=1):
        for x in beta_numbers(comp, si, si + N - min(s)):
            y = ell * (x - 1) + i
            if y >= cutoff:
                merged.append(y)
    merged.sort(reverse=True)
    # charge-0 beta-set truncated at the cutoff has exactly 1 - cutoff entries
    assert len(merged) == 1 - cutoff, "beta-set tail is not a staircase"
    return from_beta_numbers(merged, 0)


def _runner_decomposition(nu: Sequence[int], ell: int) -> tuple[list[int], list[Partition]]:
    """Split the beta-set of ``nu`` onto ``ell`` runners; return charges and
    the partitions on each runner."""
    count = len(nu) + ell
    beta = beta_numbers(nu, 0, count)
    cutoff = beta[-1]  # everything below is present
    charges, comps = [], []
    for i in range(1, ell + 1):
        xs = sorted(((y - i) // ell + 1 for y in beta if (y - i) % ell == 0), reverse=True)
        # smallest x on this runner whose image is still >= cutoff
        low = -((-(cutoff - i)) // ell) + 1
        si = len(xs) + low - 1
        charges.append(si)
        comps.append(from_beta_numbers(xs, si))
    return charges, comps


def tau_inverse(s: Sequence[int], nu: Sequence[int]) -> MultiPartition:
    s = Charge(s)
    charges, comps = _runner_decomposition(nu, len(s))
    if tuple(charges) != tuple(s):
        raise ValueError(f"partition {list(nu)} does not have the {len(s)}-core of charge {s}")
    return MultiPartition(comps)


def core_of_charge(s: Sequence[int]) -> Partition:
    return tau(s, empty(len(s)))


def charge_of_core(nu: Sequence[int], ell: int) -> Charge:
    if not is_ell_core(nu, ell):
        raise ValueError(f"{list(nu)} is not a {ell}-core")
    charges, _ = _runner_decomposition(nu, ell)
    return Charge(charges)


def charge_of(nu: Sequence[int], ell: int) -> Charge:
    """Charge of the ``ell``-core of ``nu``."""
    charges, _ = _runner_decomposition(nu, ell)
    return Charge(charges)
