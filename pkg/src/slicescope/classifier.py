"""Hypersphericity classification of equivariant slices G x S_e.

The necessary dimension bound says a hyperspherical G x Q-variety has
dim at most dim(G x Q) + rk(G x Q).  For each classical family the bound
is also evaluated in a reduced form purely in terms of the transpose mu
of the Jordan type, and a finite sweep checks the two agree and isolates
the short exception lists beyond hooks.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .datasets import ExceptionalOrbitTable
from .liealg import (AlgebraFamily, OrbitDatum, ReductiveProduct, hook_family,
                     is_regular_type, is_very_even_type, is_zero_type,
                     orbit_datum)
from .partitions import (Partition, dual, hook_parameters, parse_partition,
                         valid_jordan_types)


class Status(Enum):
    ZERO_ORBIT = "ZeroOrbit"
    REGULAR_ORBIT = "RegularOrbit"
    HYPERSPHERICAL_HOOK = "HypersphericalHook"
    HYPERSPHERICAL_SPECIAL = "HypersphericalSpecial"
    HYPERSPHERICAL_VIA_ISOMORPHISM = "HypersphericalViaIsomorphism"
    NOT_HYPERSPHERICAL = "NotHyperspherical"
    CANDIDATE = "Candidate"

HYPERSPHERICAL_STATUSES = frozenset({
    Status.ZERO_ORBIT, Status.REGULAR_ORBIT, Status.HYPERSPHERICAL_HOOK,
    Status.HYPERSPHERICAL_SPECIAL, Status.HYPERSPHERICAL_VIA_ISOMORPHISM,
})


@dataclass(frozen=True)
class BoundReport:
    """Both sides of the necessary dimension bound for one orbit.

    lhs = dim G + dim S_e; rhs = dim G + dim Q + rk G + rk Q with the full
    centralizer Q.  For GL a diagonal scalar acts trivially, so the bound
    that actually decides is rhs_effective = rhs - 2; slack is lhs minus
    the deciding rhs.  slack > 0 certifies "not hyperspherical".
    """

    lhs: int
    rhs: int
    rhs_effective: int | None
    slack: int


@dataclass(frozen=True)
class Verdict:
    orbit: OrbitDatum
    status: Status
    bound: BoundReport
    note: str = ""           # isomorphism target, special-case name, warnings
    very_even: bool = False  # type-D label standing for two orbits


def necessary_bound(o: OrbitDatum) -> BoundReport:
    g = o.family
    q = o.centralizer
    lhs = g.dim + o.slice_dim
    rhs = g.dim + q.dim + g.rank + q.rank
    rhs_eff = rhs - 2 if g.kind == "GL" else None
    slack = lhs - (rhs_eff if rhs_eff is not None else rhs)
    return BoundReport(lhs=lhs, rhs=rhs, rhs_effective=rhs_eff, slack=slack)


def reduced_inequality(family_kind: str, mu: Partition) -> bool:
    """Reduced form of the strict dimension bound, in the transpose mu.

    True means the bound is strictly violated, i.e. the orbit is not
    hyperspherical.  With d_i = mu_i - mu_{i+1} (mu padded by 0):

      GL: sum mu_i^2 - sum mu_i > sum d_i^2 + mu_1 - 2
      Sp: sum mu_i^2 - 2 sum_{i odd} mu_i > sum d_i^2
      SO: sum mu_i^2 - 2 mu_1 - 2 sum_{i even} mu_i > sum d_i^2
    """
    sq = sum(m * m for m in mu.parts)
    d_sq = sum((mu.part(i) - mu.part(i + 1)) ** 2
               for i in range(1, len(mu.parts) + 1))
    if family_kind == "GL":
        return sq - mu.n > d_sq + mu.part(1) - 2
    odd_sum = sum(mu.part(i) for i in range(1, len(mu.parts) + 1, 2))
    if family_kind == "Sp":
        return sq - 2 * odd_sum > d_sq
    if family_kind == "SO":
        even_sum = mu.n - odd_sum
        return sq - 2 * mu.part(1) - 2 * even_sum > d_sq
    raise ValueError(f"unknown family kind: {family_kind!r}")


# Jordan types that fail to be hooks yet are hyperspherical, via low-rank
# classical isomorphisms (or triality for SO(8)).  Keyed by (kind, parts);
# the value describes the hook image: (target kind or label, target type).
_VIA_ISOMORPHISM: dict[tuple[str, tuple[int, ...]], tuple[str, str]] = {
    ("GL", (2, 2)): ("SO", "3,1,1,1"),
    ("Sp", (2, 2)): ("SO", "3,1,1"),
    ("SO", (3, 3)): ("GL", "3,1"),
    ("SO", (2, 2, 1, 1)): ("GL", "2,1,1"),
    ("SO", (2, 2, 1)): ("Sp", "2,1,1"),
    ("SO", (4, 4)): ("SO", "5,1,1,1"),       # triality
    ("SO", (2, 2, 2, 2)): ("SO", "3,1,1,1,1"),  # triality
}
# so(4) = sl(2)+sl(2): the (2,2) image is regular-plus-zero, not a hook.
_SO4_SPLIT = ("SO", (2, 2))


def iso_image(family_kind: str, p: Partition) -> tuple[AlgebraFamily, Partition] | None:
    """Hook image of an exceptional classical type, if there is one."""
    entry = _VIA_ISOMORPHISM.get((family_kind, p.parts))
    if entry is None:
        return None
    target_kind, target_parts = entry
    target = parse_partition(target_parts)
    return hook_family(target_kind, target), target


def classify(o: OrbitDatum) -> Verdict:
    bound = necessary_bound(o)
    family, p = o.family, o.jordan_type
    very_even = is_very_even_type(family, p)

    def verdict(status: Status, note: str = "") -> Verdict:
        return Verdict(o, status, bound, note=note, very_even=very_even)

    if is_zero_type(p):
        return verdict(Status.ZERO_ORBIT)
    if is_regular_type(family, p):
        return verdict(Status.REGULAR_ORBIT)
    if hook_parameters(p) is not None:
        return verdict(Status.HYPERSPHERICAL_HOOK)
    if (family.kind, p.parts) == _SO4_SPLIT:
        return verdict(Status.HYPERSPHERICAL_VIA_ISOMORPHISM,
                       note="(2)+(1,1) in sl(2)+sl(2)")
    if (family.kind, p.parts) == ("Sp", (3, 3)):
        return verdict(Status.HYPERSPHERICAL_SPECIAL, note="(3,3) in sp(6)")
    image = iso_image(family.kind, p)
    if image is not None:
        target, target_type = image
        tag = " (triality)" if (family.kind, target.kind) == ("SO", "SO") else ""
        return verdict(Status.HYPERSPHERICAL_VIA_ISOMORPHISM,
                       note=f"{target_type} in {target}{tag}")
    if bound.slack > 0:
        return verdict(Status.NOT_HYPERSPHERICAL)
    # Defensive: the bound alone never certifies hypersphericity.
    return verdict(Status.CANDIDATE,
                   note="passes the necessary bound but matches no proven case")


def _thread_count() -> int:
    raw = os.environ.get("SLICESCOPE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    n = _thread_count()
    items = list(items)
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def enumerate_and_classify(family: AlgebraFamily) -> list[Verdict]:
    """One verdict per valid Jordan type, in reverse-lex order."""
    if family.kind not in ("GL", "Sp", "SO"):
        raise ValueError("enumeration is for classical families")
    if family.size < 1:
        raise ValueError("family size must be positive")
    types = valid_jordan_types(family.kind, family.size)
    return _map_ordered(lambda p: classify(orbit_datum(family, p)), types)


EXPECTED_EXCEPTIONS: dict[str, frozenset[tuple[int, ...]]] = {
    "GL": frozenset({(2, 2)}),
    "Sp": frozenset({(2, 2), (3, 3)}),
    "SO": frozenset({(2, 2), (3, 3), (4, 4), (2, 2, 1), (2, 2, 1, 1),
                     (2, 2, 2, 2)}),
}


@dataclass(frozen=True)
class SweepReport:
    family_kind: str
    n_max: int
    checked: int
    mismatches: tuple[str, ...]   # types where reduced and direct bound disagree
    exceptions_beyond_hooks: frozenset[tuple[int, ...]]
    matches_expected: bool


def sweep_inequality_proof(family_kind: str, n_max: int) -> SweepReport:
    """Brute-force replacement for the induction arguments.

    Checks, for every valid Jordan type with n <= n_max, that the reduced
    inequality agrees with the direct bound comparison, and collects the
    non-hook types where the bound fails to exclude.
    """
    if n_max > 30:
        raise ValueError("n_max capped at 30")

    def check_size(n: int):
        rows = []
        for p in valid_jordan_types(family_kind, n):
            family = hook_family(family_kind, p)
            o = orbit_datum(family, p)
            direct = necessary_bound(o).slack > 0
            reduced = reduced_inequality(family_kind, dual(p))
            rows.append((p, direct, reduced))
        return rows

    mismatches: list[str] = []
    exceptions: set[tuple[int, ...]] = set()
    checked = 0
    for rows in _map_ordered(check_size, range(1, n_max + 1)):
        for p, direct, reduced in rows:
            checked += 1
            if direct != reduced:
                mismatches.append(f"{family_kind} {p}: direct={direct} reduced={reduced}")
            if not direct:
                if (hook_parameters(p) is None and not is_zero_type(p)
                        and not is_regular_type(hook_family(family_kind, p), p)):
                    exceptions.add(p.parts)
    expected = EXPECTED_EXCEPTIONS[family_kind]
    expected_in_range = {t for t in expected if sum(t) <= n_max}
    return SweepReport(
        family_kind=family_kind,
        n_max=n_max,
        checked=checked,
        mismatches=tuple(mismatches),
        exceptions_beyond_hooks=frozenset(exceptions),
        matches_expected=not mismatches and exceptions == expected_in_range,
    )


@dataclass(frozen=True)
class ScanRow:
    """Necessary-bound evaluation for one exceptional-algebra orbit."""

    algebra: AlgebraFamily
    label: str
    orbit_dim: int
    slice_dim: int
    centralizer: ReductiveProduct
    lhs: int
    rhs: int
    slack: int

    @property
    def passes_necessary_bound(self) -> bool:
        return self.slack <= 0


def scan_exceptional(table: ExceptionalOrbitTable) -> list[ScanRow]:
    """Evaluate the dimension bound on every row of an orbit table."""
    g = table.algebra
    out = []
    for row in table.rows:
        s = g.dim - row.orbit_dim
        q = row.centralizer
        lhs = g.dim + s
        rhs = g.dim + q.dim + g.rank + q.rank
        out.append(ScanRow(
            algebra=g, label=row.label, orbit_dim=row.orbit_dim, slice_dim=s,
            centralizer=q, lhs=lhs, rhs=rhs, slack=lhs - rhs,
        ))
    return out
