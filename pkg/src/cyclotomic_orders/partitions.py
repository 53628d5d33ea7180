"""Integer partitions and the statistics attached to them.

A partition is stored as a tuple of positive, weakly decreasing parts.
Diagram nodes are pairs ``(p, q)`` with ``q`` the row (1-based) and
``1 <= p <= lambda_q`` the column; the residue of a node is ``p - q``.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, Sequence


class Relation(enum.Enum):
    """Outcome of comparing a left element against a right element."""

    LESS = "<"
    GREATER = ">"
    EQUAL = "="
    INCOMPARABLE = "||"

    def flip(self) -> "Relation":
        if self is Relation.LESS:
            return Relation.GREATER
        if self is Relation.GREATER:
            return Relation.LESS
        return self


class Partition(tuple):
    """An immutable partition. Trailing zeros are dropped on construction."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def degree(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The 1-based part ``lambda_i``, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def nodes(self) -> Iterator[tuple[int, int]]:
        """Yield the diagram nodes ``(p, q)`` row by row."""
        for q, row in enumerate(self, start=1):
            for p in range(1, row + 1):
                yield p, q

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"not a partition: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return Partition()
    return Partition(int(x) for x in body.split(","))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def transpose(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> Relation:
    """Compare ``lam`` with ``mu`` in dominance order.

    ``Relation.GREATER`` means ``mu`` is dominated by ``lam``.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"degree mismatch: {sum(lam)} vs {sum(mu)}")
    return _compare_prefix_sums(_prefix_sums(lam, len(mu)), _prefix_sums(mu, len(lam)))


def _prefix_sums(parts: Sequence[int], pad: int) -> list[int]:
    out, total = [], 0
    for i in range(max(len(parts), pad)):
        total += parts[i] if i < len(parts) else 0
        out.append(total)
    return out


def _compare_prefix_sums(a: Sequence[int], b: Sequence[int]) -> Relation:
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return Relation.EQUAL
    if ge:
        return Relation.GREATER
    if le:
        return Relation.LESS
    return Relation.INCOMPARABLE


def n_statistic(lam: Sequence[int]) -> int:
    return sum(x * i for i, x in enumerate(lam))


def beta_numbers(lam: Sequence[int], s: int, count: int) -> tuple[int, ...]:
    """The first ``count`` beta-numbers ``lambda_j + s + 1 - j``."""
    if count < len(lam):
        raise ValueError(f"count {count} below the {len(lam)} nonzero parts")
    return tuple((lam[j - 1] if j <= len(lam) else 0) + s + 1 - j
                 for j in range(1, count + 1))


def from_beta_numbers(beta: Iterable[int], s: int) -> Partition:
    """Recover a partition from a decreasing beta-set truncated anywhere.

    Entries past the supplied ones are taken to be the staircase ``s + 1 - j``.
    """
    beta = list(beta)
    if any(beta[i] <= beta[i + 1] for i in range(len(beta) - 1)):
        raise ValueError(f"beta-numbers not strictly decreasing: {beta}")
    parts = [b - s - 1 + j for j, b in enumerate(beta, start=1)]
    if parts and parts[-1] < 0:
        raise ValueError(f"not a beta-set of charge {s}: {beta}")
    return Partition(parts)


def residue_of(p: int, q: int, ell: int) -> int:
    return (p - q) % ell


def content_counts(lam: Sequence[int], ell: int) -> tuple[int, ...]:
    """Number of nodes of each residue class mod ``ell``."""
    counts = [0] * ell
    for q, row in enumerate(lam, start=1):
        # residues 1-q, ..., row-q; count full turns then the remainder
        full, rest = divmod(row, ell)
        for i in range(ell):
            counts[i] += full
        start = (1 - q + full * ell) % ell
        for k in range(rest):
            counts[(start + k) % ell] += 1
    return tuple(counts)


def ell_core(lam: Sequence[int], ell: int) -> Partition:
    """The ``ell``-core, computed on the abacus."""
    if ell == 1:
        return Partition()
    count = max(len(lam), 1)
    # shifted so that beads sit at positions >= 0 and every negative slot is full
    beads = [b + count - 1 for b in beta_numbers(lam, 0, count)]
    runners = [0] * ell
    for b in beads:
        runners[b % ell] += 1
    slid = sorted((r + ell * k for r in range(ell) for k in range(runners[r])),
                  reverse=True)
    return from_beta_numbers([b - count + 1 for b in slid], 0)


def is_ell_core(lam: Sequence[int], ell: int) -> bool:
    return tuple(ell_core(lam, ell)) == tuple(lam)


def removable_boxes(lam: Sequence[int], ell: int) -> list[tuple[int, int, int]]:
    """Removable boxes as ``(row q, column p, residue mod ell)``, by row."""
    out = []
    for q, row in enumerate(lam, start=1):
        below = lam[q] if q < len(lam) else 0
        if row > below:
            out.append((q, row, residue_of(row, q, ell)))
    return out


def remove_box(lam: Sequence[int], q: int) -> Partition:
    parts = list(lam)
    parts[q - 1] -= 1
    return Partition(parts)


def j_heart(lam: Sequence[int], J: Iterable[int], ell: int) -> Partition:
    """Strip removable boxes with residue in ``J`` until none remain.

    Boxes are taken leftmost first (largest row index); the result does not
    depend on this choice.
    """
    J = {j % ell for j in J}
    current = Partition(lam)
    while True:
        boxes = [b for b in removable_boxes(current, ell) if b[2] in J]
        if not boxes:
            return current
        current = remove_box(current, boxes[-1][0])
