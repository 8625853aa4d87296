"""Partition combinatorics for Jordan types of nilpotent matrices.

A partition is a weakly decreasing tuple of positive integers.  Partitions
double as Jordan types (block sizes) and as their transposes; the parity
constraints for symplectic and orthogonal Jordan types live here too.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        for i, p in enumerate(self.parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if i and self.parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part access; indices past the end read as 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def parse_partition(text: str) -> Partition:
    """Parse "5,1,1" or exponent shorthand like "2^4" / "3,1^2"."""
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
        if not m:
            raise ValueError(f"bad partition token: {token!r}")
        part, mult = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([part] * mult)
    return Partition(tuple(sorted(parts, reverse=True)))


def dual(p: Partition) -> Partition:
    """Transpose partition: i-th part counts the parts of p that are >= i."""
    if not p.parts:
        return p
    mu = [0] * p.parts[0]
    for part in p.parts:
        for i in range(part):
            mu[i] += 1
    return Partition(tuple(mu))


def multiplicities(p: Partition) -> dict[int, int]:
    """Map part value -> number of occurrences."""
    out: dict[int, int] = {}
    for part in p.parts:
        out[part] = out.get(part, 0) + 1
    return out


def is_valid_jordan_type(p: Partition, family_kind: str) -> bool:
    """Parity test for Jordan types.

    GL admits anything; Sp needs even multiplicity at every odd part,
    SO needs even multiplicity at every even part.
    """
    if family_kind == "GL":
        return True
    mults = multiplicities(p)
    if family_kind == "Sp":
        return all(m % 2 == 0 for part, m in mults.items() if part % 2 == 1)
    if family_kind == "SO":
        return all(m % 2 == 0 for part, m in mults.items() if part % 2 == 0)
    raise ValueError(f"unknown family kind: {family_kind!r}")


def hook_parameters(p: Partition) -> tuple[int, int] | None:
    """(n, k) with p = (n-k, 1^k) and n-k >= 2, else None.

    The zero Jordan type (1^n) is deliberately not a hook here; it is
    classified separately.
    """
    if not p.parts or p.parts[0] < 2:
        return None
    if any(part != 1 for part in p.parts[1:]):
        return None
    return p.n, len(p.parts) - 1


@lru_cache(maxsize=None)
def _partitions_of(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    for parts in _partitions_of(n, n):
        yield Partition(parts)


def valid_jordan_types(family_kind: str, n: int) -> list[Partition]:
    """Valid Jordan types of an n x n nilpotent for the family, reverse-lex."""
    return [p for p in partitions_of(n) if is_valid_jordan_type(p, family_kind)]
