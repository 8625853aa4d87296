"""Experimental verification of slice geometry at sampled points.

For a realization, samples a point x = e + (small integer combination of
the z(f) basis) of the slice and checks, in exact arithmetic: that the
symplectic pairing on g + z(f) is nondegenerate, that the tangent space
of the symmetry orbit through x contains its symplectic orthogonal
(coisotropy), the dimension of that orthogonal, and the stabilizer
dimension.  Sampling can only support or falsify generic-point claims,
never prove them: a degenerate sample is retried and persistent
degeneracy is reported as inconclusive, never as success.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactlinalg import RatMatrix, Subspace, bracket, kernel, trace_form
from .realizations import MatrixRealization

_BOX = 5          # sample coefficients from [-BOX, BOX]
_MAX_ATTEMPTS = 3


class SliceError(ValueError):
    pass


@dataclass(frozen=True)
class SlicePoint:
    realization: MatrixRealization
    x: RatMatrix
    seed: int
    coefficients: tuple[Fraction, ...]


def slice_point(r: MatrixRealization, seed: int) -> SlicePoint:
    rng = random.Random(seed)
    coeffs = tuple(Fraction(rng.randint(-_BOX, _BOX)) for _ in r.zf_basis)
    x = r.e
    for c, b in zip(coeffs, r.zf_basis):
        if c:
            x = x + b.scale(c)
    return SlicePoint(r, x, seed, coeffs)


def point_at_e(r: MatrixRealization) -> SlicePoint:
    return SlicePoint(r, r.e, seed=-1, coefficients=tuple(Fraction(0) for _ in r.zf_basis))


def _check_in_slice(r: MatrixRealization, x: RatMatrix) -> None:
    if not r.zf_subspace().member((x - r.e).flatten()):
        raise SliceError("point is not on the slice")


def omega_gram(r: MatrixRealization, x: RatMatrix) -> RatMatrix:
    """Gram matrix of the slice symplectic form on the basis g + z(f).

    On tangent vectors (xi, u), (eta, v) with xi, eta in g and u, v in
    z(f), the form is (x, [xi, eta]) + (u, eta) - (v, xi), with (-,-)
    the trace pairing.
    """
    _check_in_slice(r, x)
    dg, dz = r.dim_g, r.dim_zf
    n = dg + dz
    gram = [[Fraction(0)] * n for _ in range(n)]
    # Invariance of the trace pairing: (x, [b_i, b_j]) = ([x, b_i], b_j),
    # so one bracket per basis element replaces one per basis pair.
    ad_x = [bracket(x, bi) for bi in r.g_basis]
    for i in range(dg):
        for j in range(i + 1, dg):
            val = trace_form(ad_x[i], r.g_basis[j])
            gram[i][j] = val
            gram[j][i] = -val
        bi = r.g_basis[i]
        for j in range(dz):
            val = -trace_form(r.zf_basis[j], bi)
            gram[i][dg + j] = val
            gram[dg + j][i] = -val
    return RatMatrix(gram)


def orbit_tangent(r: MatrixRealization, x: RatMatrix) -> Subspace:
    """Tangent space of the symmetry-group orbit at (1, x).

    In g + z(f) coordinates: all of g (left translations), plus the
    directions [c, x] for c in q (the slice rotations).  Each bracket
    must land back in z(f); anything else means a broken realization.
    """
    _check_in_slice(r, x)
    dg, dz = r.dim_g, r.dim_zf
    n = dg + dz
    zf = r.zf_subspace()
    gens = []
    for i in range(dg):
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        gens.append(v)
    for c in r.q_basis:
        img = bracket(c, x)
        coords = zf.coords(img.flatten())
        if coords is None:
            raise SliceError("q direction leaves z(f): broken realization")
        gens.append([Fraction(0)] * dg + list(coords))
    return Subspace.span(n, gens)


def stabilizer_dim(r: MatrixRealization, x: RatMatrix) -> int:
    """Dimension of {c in q : [c, x] = 0}."""
    _check_in_slice(r, x)
    if not r.q_basis:
        return 0
    cols = [bracket(c, x).flatten() for c in r.q_basis]
    return kernel(RatMatrix(list(zip(*cols)))).dim


@dataclass(frozen=True)
class CoisotropyReport:
    case: str
    seed: int              # seed of the retained sample
    dim_ambient: int
    omega_rank: int
    dim_W: int
    dim_W_perp: int
    contained: bool        # W contains its symplectic orthogonal
    dim_intersection: int
    stabilizer_dim: int
    inconclusive: bool     # omega stayed degenerate over all retries

    def to_dict(self) -> dict:
        return {
            "case": self.case, "seed": self.seed,
            "dim_ambient": self.dim_ambient, "omega_rank": self.omega_rank,
            "dim_W": self.dim_W, "dim_W_perp": self.dim_W_perp,
            "contained": self.contained,
            "dim_intersection": self.dim_intersection,
            "stabilizer_dim": self.stabilizer_dim,
            "inconclusive": self.inconclusive,
        }


def _pairing_rows(basis, gram: RatMatrix) -> RatMatrix:
    """Rows (v . gram) for each basis vector v, exploiting sparsity of v."""
    n = gram.cols
    out = []
    for v in basis:
        acc = [Fraction(0)] * n
        for j, c in enumerate(v):
            if c:
                grow = gram.data[j]
                for t in range(n):
                    g = grow[t]
                    if g:
                        acc[t] += c * g
        out.append(acc)
    return RatMatrix(out)


def _check_at(r: MatrixRealization, seed: int) -> CoisotropyReport:
    pt = slice_point(r, seed)
    gram = omega_gram(r, pt.x)
    w = orbit_tangent(r, pt.x)
    # v is omega-orthogonal to W iff (basis of W) . gram . v = 0.
    if w.dim:
        w_perp = kernel(_pairing_rows(w.basis, gram))
    else:
        w_perp = Subspace.span(gram.rows, [])
    contained = w.contains(w_perp)
    # If contained, the intersection is all of the orthogonal.
    intersection = w_perp.dim if contained else w.intersection_dim(w_perp)
    return CoisotropyReport(
        case=r.label, seed=seed,
        dim_ambient=gram.rows,
        omega_rank=gram.rank(),
        dim_W=w.dim,
        dim_W_perp=w_perp.dim,
        contained=contained,
        dim_intersection=intersection,
        stabilizer_dim=stabilizer_dim(r, pt.x),
        inconclusive=False,
    )


def coisotropy_check(r: MatrixRealization, seed: int) -> CoisotropyReport:
    """Coisotropy report at a sampled generic point, with retries.

    Up to three fresh seeds are tried; the sample of maximal rank data
    (omega rank, then orbit dimension) is kept.  If the symplectic form
    never reaches full rank the report is flagged inconclusive.
    """
    best: CoisotropyReport | None = None
    for attempt in range(_MAX_ATTEMPTS):
        rep = _check_at(r, seed + attempt)
        if best is None or (rep.omega_rank, rep.dim_W) > (best.omega_rank, best.dim_W):
            best = rep
        if best.omega_rank == best.dim_ambient and best.stabilizer_dim == 0:
            break
    assert best is not None
    if best.omega_rank < best.dim_ambient:
        best = CoisotropyReport(**{**best.to_dict(), "inconclusive": True})
    return best


def semisimplicity_probe(r: MatrixRealization, x: RatMatrix) -> bool:
    """Squarefree minimal polynomial certificate for diagonalizability.

    True iff the minimal polynomial of x over the rationals is squarefree
    (gcd with its derivative is constant), which certifies that x is a
    semisimple matrix; a nonzero nilpotent always fails.
    """
    _check_in_slice(r, x)
    p = _minimal_polynomial(x)
    return _is_squarefree(p)


def _minimal_polynomial(x: RatMatrix) -> list[Fraction]:
    """Monic minimal polynomial coefficients, lowest degree first."""
    n = x.rows
    power = RatMatrix.identity(n)
    flats = [power.flatten()]
    for _ in range(n):
        power = power @ x
        flats.append(power.flatten())
        a = RatMatrix(list(zip(*flats)))
        ker = kernel(a)
        if ker.dim:
            coeffs = list(ker.basis[0])
            # Normalize to a monic polynomial in the top power present.
            top = max(i for i, c in enumerate(coeffs) if c != 0)
            inv = 1 / coeffs[top]
            return [c * inv for c in coeffs[:top + 1]]
    raise AssertionError("no linear dependence among matrix powers")


def _poly_derivative(p: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(p)][1:] or [Fraction(0)]


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and any(c != 0 for c in a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a or [Fraction(0)]


def _is_squarefree(p: list[Fraction]) -> bool:
    if len(p) <= 2:
        return True  # constants and linear polynomials
    a, b = p, _poly_derivative(p)
    while any(c != 0 for c in b):
        a, b = b, _poly_mod(a, b)
    return len(a) == 1  # gcd is a nonzero constant
