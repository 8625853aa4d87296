"""Dimension and rank arithmetic for reductive groups and nilpotent orbits.

Covers the classical families GL(n), Sp(2n), SO(m) and the exceptional
types, slice dimensions of nilpotent orbits from the transpose of the
Jordan type, and the reductive centralizer of an sl2-triple as a formal
product of classical factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import Partition, dual, hook_parameters, is_valid_jordan_type

_EXCEPTIONAL = {  # kind -> (dim, rank)
    "G2": (14, 2),
    "F4": (52, 4),
    "E6": (78, 6),
    "E7": (133, 7),
    "E8": (248, 8),
}


@dataclass(frozen=True)
class AlgebraFamily:
    """GL(n) / Sp(2n) / SO(m) with matrix size, or an exceptional type."""

    kind: str   # "GL", "Sp", "SO", or an exceptional label
    size: int = 0  # matrix size for classical kinds, unused otherwise

    def __post_init__(self):
        if self.kind in ("GL", "Sp", "SO"):
            if self.size < 0:
                raise ValueError("negative matrix size")
            if self.kind == "Sp" and self.size % 2:
                raise ValueError("Sp needs an even matrix size")
        elif self.kind not in _EXCEPTIONAL:
            raise ValueError(f"unknown family kind: {self.kind!r}")

    @property
    def dim(self) -> int:
        if self.kind == "GL":
            return self.size ** 2
        if self.kind == "Sp":
            return self.size * (self.size + 1) // 2
        if self.kind == "SO":
            return self.size * (self.size - 1) // 2
        return _EXCEPTIONAL[self.kind][0]

    @property
    def rank(self) -> int:
        if self.kind == "GL":
            return self.size
        if self.kind == "Sp":
            return self.size // 2
        if self.kind == "SO":
            return self.size // 2
        return _EXCEPTIONAL[self.kind][1]

    def __str__(self) -> str:
        if self.kind in ("GL", "Sp", "SO"):
            return f"{self.kind}({self.size})"
        return self.kind


def gl(n: int) -> AlgebraFamily:
    return AlgebraFamily("GL", n)

def sp(size: int) -> AlgebraFamily:
    """Sp of the given (even) matrix size, i.e. sp(size) has rank size/2."""
    return AlgebraFamily("Sp", size)

def so(size: int) -> AlgebraFamily:
    return AlgebraFamily("SO", size)

def exceptional(kind: str) -> AlgebraFamily:
    return AlgebraFamily(kind)


# Simple-type dimension table used by exceptional orbit data: size is the
# Lie rank for A/B/C/D/T factors.
_SIMPLE_DIMS = {
    "A": lambda r: r * (r + 2),
    "B": lambda r: r * (2 * r + 1),
    "C": lambda r: r * (2 * r + 1),
    "D": lambda r: r * (2 * r - 1),
    "T": lambda r: r,
}


@dataclass(frozen=True)
class Factor:
    """One factor of a reductive product.

    kind "GL"/"Sp"/"SO" carries a matrix size; kinds "A".."D" and "T"
    carry a Lie rank; exceptional labels carry nothing.
    """

    kind: str
    size: int = 0

    @property
    def dim(self) -> int:
        if self.kind in ("GL", "Sp", "SO"):
            return AlgebraFamily(self.kind, self.size).dim
        if self.kind in _SIMPLE_DIMS:
            return _SIMPLE_DIMS[self.kind](self.size)
        return _EXCEPTIONAL[self.kind][0]

    @property
    def rank(self) -> int:
        if self.kind in ("GL", "Sp", "SO"):
            return AlgebraFamily(self.kind, self.size).rank
        if self.kind in _SIMPLE_DIMS:
            return self.size
        return _EXCEPTIONAL[self.kind][1]

    def __str__(self) -> str:
        if self.kind in ("GL", "Sp", "SO"):
            return f"{self.kind}({self.size})"
        if self.kind in _SIMPLE_DIMS:
            return f"{self.kind}{self.size}"
        return self.kind


@dataclass(frozen=True)
class ReductiveProduct:
    """Formal product of reductive factors with total dim and rank.

    torus_removed subtracts one central torus (dim 1, rank 1); used for
    the GL convention that a diagonal scalar acts trivially on the slice.
    """

    factors: tuple[Factor, ...]
    torus_removed: bool = False

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors) - (1 if self.torus_removed else 0)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors) - (1 if self.torus_removed else 0)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        body = "x".join(str(f) for f in self.factors)
        return body + ("/T1" if self.torus_removed else "")

TRIVIAL_PRODUCT = ReductiveProduct(())


def _require_valid(family: AlgebraFamily, p: Partition) -> None:
    if family.kind not in ("GL", "Sp", "SO"):
        raise ValueError("Jordan types are only modeled for classical families")
    if p.n != family.size:
        raise ValueError(f"partition of {p.n} does not fit {family}")
    if not is_valid_jordan_type(p, family.kind):
        raise ValueError(f"{p} is not a valid {family.kind} Jordan type")


def odd_part_count(p: Partition) -> int:
    return sum(1 for part in p.parts if part % 2 == 1)


def slice_dim(family: AlgebraFamily, p: Partition) -> int:
    """Dimension of the transverse slice e + z(f) at a nilpotent of type p.

    Computed from the transpose mu: sum(mu_i^2) for GL, and
    (sum(mu_i^2) +/- #odd parts of p)/2 for Sp / SO.  Both the
    alternating-sum and odd-part-count readings of the correction term
    are evaluated and must agree.
    """
    _require_valid(family, p)
    mu = dual(p)
    sq = sum(m * m for m in mu.parts)
    if family.kind == "GL":
        return sq
    alternating = sum((-1) ** i * m for i, m in enumerate(mu.parts))
    odd = odd_part_count(p)
    assert alternating == odd, "dual alternating sum must count odd parts"
    num = sq + odd if family.kind == "Sp" else sq - odd
    assert num % 2 == 0
    return num // 2


def reductive_centralizer(family: AlgebraFamily, p: Partition) -> ReductiveProduct:
    """Reductive centralizer of an sl2-triple through type p, as a product.

    With mu the transpose and d_i = mu_i - mu_{i+1} (the multiplicity of
    the part i in p): GL contributes GL(d_i) for every i; Sp contributes
    Sp(d_i) at odd i and SO(d_i) at even i; SO swaps the two.
    """
    _require_valid(family, p)
    mu = dual(p)
    factors = []
    for i in range(1, len(mu.parts) + 1):
        d = mu.part(i) - mu.part(i + 1)
        if d == 0:
            continue
        if family.kind == "GL":
            factors.append(Factor("GL", d))
        elif family.kind == "Sp":
            kind = "Sp" if i % 2 == 1 else "SO"
            if kind == "Sp" and d % 2:
                raise AssertionError("odd-size Sp factor from a valid Sp type")
            factors.append(Factor(kind, d))
        else:
            kind = "SO" if i % 2 == 1 else "Sp"
            if kind == "Sp" and d % 2:
                raise AssertionError("odd-size Sp factor from a valid SO type")
            factors.append(Factor(kind, d))
    return ReductiveProduct(tuple(factors))


def effective_centralizer(family: AlgebraFamily, p: Partition) -> ReductiveProduct:
    """Centralizer acting effectively on the slice.

    For GL one central scalar acts trivially and is removed (dim and rank
    drop by one); Sp and SO centralizers already act effectively.
    """
    full = reductive_centralizer(family, p)
    if family.kind == "GL":
        return ReductiveProduct(full.factors, torus_removed=True)
    return full


def orbit_dim(family: AlgebraFamily, p: Partition) -> int:
    return family.dim - slice_dim(family, p)


def is_regular_type(family: AlgebraFamily, p: Partition) -> bool:
    if family.kind in ("GL", "Sp"):
        return len(p.parts) == 1
    if family.kind == "SO":
        m = family.size
        if m % 2 == 1:
            return p.parts == (m,)
        return p.parts == (m - 1, 1) if m >= 2 else p.parts == ()
    raise ValueError("regular types are only modeled for classical families")


def is_zero_type(p: Partition) -> bool:
    return all(part == 1 for part in p.parts)


def is_very_even_type(family: AlgebraFamily, p: Partition) -> bool:
    """Type-D partitions with all parts even label two orbits, not one."""
    return (family.kind == "SO" and family.size % 2 == 0
            and all(part % 2 == 0 for part in p.parts))


@dataclass(frozen=True)
class OrbitDatum:
    family: AlgebraFamily
    jordan_type: Partition
    dual: Partition
    slice_dim: int
    orbit_dim: int
    centralizer: ReductiveProduct = field(compare=False)

    @property
    def effective_centralizer(self) -> ReductiveProduct:
        return effective_centralizer(self.family, self.jordan_type)


def orbit_datum(family: AlgebraFamily, p: Partition) -> OrbitDatum:
    s = slice_dim(family, p)
    return OrbitDatum(
        family=family,
        jordan_type=p,
        dual=dual(p),
        slice_dim=s,
        orbit_dim=family.dim - s,
        centralizer=reductive_centralizer(family, p),
    )


def hook_family(family_kind: str, jordan_type: Partition) -> AlgebraFamily:
    """The ambient family an n x n Jordan type lives in."""
    if family_kind == "GL":
        return gl(jordan_type.n)
    if family_kind == "Sp":
        return sp(jordan_type.n)
    if family_kind == "SO":
        return so(jordan_type.n)
    raise ValueError(f"unknown family kind: {family_kind!r}")


__all__ = [
    "AlgebraFamily", "Factor", "ReductiveProduct", "OrbitDatum",
    "TRIVIAL_PRODUCT",
    "gl", "sp", "so", "exceptional",
    "slice_dim", "reductive_centralizer", "effective_centralizer",
    "orbit_dim", "orbit_datum", "odd_part_count",
    "is_regular_type", "is_zero_type", "is_very_even_type", "hook_family",
]
