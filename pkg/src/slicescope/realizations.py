"""Explicit exact-rational matrix models of slices and their symmetries.

A realization packages, for one concrete nilpotent: the ambient matrix
Lie algebra g (as a basis of the n x n matrix space cut out by a bilinear
form, or all of gl), an sl2-triple (e, h, f) through the nilpotent, a
basis of the centralizer z(f) (so the slice is e + span of it), and a
basis of the reductive symmetry algebra q commuting with e and f.  All
subspaces are found by exact kernel computations, then cross-checked
against the combinatorial dimension formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import liealg
from .exactlinalg import RatMatrix, Subspace, bracket, kernel
from .liealg import AlgebraFamily, effective_centralizer, slice_dim
from .partitions import Partition, hook_parameters


class RealizationError(ValueError):
    pass


@dataclass
class MatrixRealization:
    label: str
    family: AlgebraFamily
    jordan_type: Partition
    n_ambient: int
    e: RatMatrix
    f: RatMatrix
    h: RatMatrix
    g_basis: list[RatMatrix]
    zf_basis: list[RatMatrix]
    q_basis: list[RatMatrix]
    gram: RatMatrix | None = None    # bilinear form cutting out g, None for gl
    is_hook: bool = False

    @property
    def dim_g(self) -> int:
        return len(self.g_basis)

    @property
    def dim_zf(self) -> int:
        return len(self.zf_basis)

    @property
    def dim_q(self) -> int:
        return len(self.q_basis)

    def zf_subspace(self) -> Subspace:
        return Subspace(self.n_ambient ** 2,
                        [m.flatten() for m in self.zf_basis], check=False)

    def to_debug_dict(self) -> dict:
        def dump(m: RatMatrix):
            return [[str(x) for x in row] for row in m.data]
        return {
            "label": self.label,
            "family": str(self.family),
            "jordan_type": str(self.jordan_type),
            "n_ambient": self.n_ambient,
            "e": dump(self.e), "f": dump(self.f), "h": dump(self.h),
            "gram": dump(self.gram) if self.gram is not None else None,
            "g_basis": [dump(m) for m in self.g_basis],
            "zf_basis": [dump(m) for m in self.zf_basis],
            "q_basis": [dump(m) for m in self.q_basis],
        }


def _unit(n: int, i: int, j: int) -> RatMatrix:
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return RatMatrix(m)


def build_algebra(n: int, gram: RatMatrix | None) -> list[RatMatrix]:
    """Basis of {X : X^T M + M X = 0}, or all of gl(n) when gram is None."""
    if gram is None:
        return [_unit(n, i, j) for i in range(n) for j in range(n)]
    if gram.rows != n or gram.cols != n:
        raise RealizationError("gram matrix of wrong size")
    gt = gram.transpose()
    if gt != gram and gt != -gram:
        raise RealizationError("gram must be symmetric or antisymmetric")
    if gram.rank() != n:
        raise RealizationError("degenerate gram matrix")
    # Linear constraint map on the n^2-dimensional matrix space.
    cols = []
    for i in range(n):
        for j in range(n):
            x = _unit(n, i, j)
            cols.append((x.transpose() @ gram + gram @ x).flatten())
    constraint = RatMatrix(list(zip(*cols)))
    ker = kernel(constraint)
    return [RatMatrix.from_flat(v, n, n) for v in ker.basis]


def _ad_kernel_in(g_basis: list[RatMatrix], ops: list[RatMatrix]) -> list[RatMatrix]:
    """Basis of {X in span(g_basis) : [op, X] = 0 for every op}."""
    n = g_basis[0].rows
    cols = []
    for b in g_basis:
        col: list[Fraction] = []
        for op in ops:
            col.extend(bracket(op, b).flatten())
        cols.append(col)
    ker = kernel(RatMatrix(list(zip(*cols))))
    out = []
    for coeffs in ker.basis:
        acc = RatMatrix.zeros(n, n)
        for c, b in zip(coeffs, g_basis):
            if c:
                acc = acc + b.scale(c)
        out.append(acc)
    return out


def _sl2_on_jordan_block(m: int) -> tuple[RatMatrix, RatMatrix, RatMatrix]:
    """The standard triple on an m-dimensional irreducible module.

    e is the shift (Jordan block), h is diagonal with weights m+1-2i on
    the i-th basis vector, and f carries the coefficients i(m-i).
    """
    e = RatMatrix([[1 if j == i + 1 else 0 for j in range(m)] for i in range(m)])
    h = RatMatrix([[m + 1 - 2 * (i + 1) if i == j else 0 for j in range(m)]
                   for i in range(m)])
    f = RatMatrix.zeros(m, m)
    for i in range(1, m):
        f.data[i][i - 1] = Fraction(i * (m - i))
    return e, f, h


def _embed(top: RatMatrix, n: int, offset: int = 0) -> RatMatrix:
    out = RatMatrix.zeros(n, n)
    for i in range(top.rows):
        for j in range(top.cols):
            out.data[offset + i][offset + j] = top.data[i][j]
    return out


def invariant_form_on_block(m: int) -> RatMatrix:
    """The unique triple-invariant nondegenerate form on the m-block.

    Solved as the kernel of the invariance constraints, normalized so the
    (1, m) entry is 1.  Symmetric for odd m, antisymmetric for even m.
    """
    e, f, h = _sl2_on_jordan_block(m)
    cols = []
    for i in range(m):
        for j in range(m):
            b = _unit(m, i, j)
            col: list[Fraction] = []
            for x in (e, f, h):
                col.extend((x.transpose() @ b + b @ x).flatten())
            cols.append(col)
    ker = kernel(RatMatrix(list(zip(*cols))))
    if ker.dim != 1:
        raise RealizationError(f"invariant form on the {m}-block is not unique")
    form = RatMatrix.from_flat(ker.basis[0], m, m)
    pivot = form.data[0][m - 1]
    if pivot == 0:
        raise RealizationError("invariant form vanishes at (1, m)")
    form = form.scale(1 / pivot)
    sym = form.transpose() == form
    if sym != (m % 2 == 1):
        raise RealizationError("invariant form has the wrong symmetry")
    return form


def _standard_symplectic(k: int) -> RatMatrix:
    if k % 2:
        raise RealizationError("symplectic complement needs even dimension")
    half = k // 2
    m = RatMatrix.zeros(k, k)
    for i in range(half):
        m.data[i][half + i] = Fraction(1)
        m.data[half + i][i] = Fraction(-1)
    return m


def _check_triple(e: RatMatrix, f: RatMatrix, h: RatMatrix) -> None:
    if bracket(e, f) != h or bracket(h, e) != e.scale(2) or bracket(h, f) != f.scale(-2):
        raise RealizationError("triple relations fail")


def _finish(label: str, family: AlgebraFamily, p: Partition, n: int,
            e: RatMatrix, f: RatMatrix, h: RatMatrix,
            g_basis: list[RatMatrix], q_basis: list[RatMatrix],
            gram: RatMatrix | None, is_hook: bool) -> MatrixRealization:
    _check_triple(e, f, h)
    zf_basis = _ad_kernel_in(g_basis, [f])
    r = MatrixRealization(label=label, family=family, jordan_type=p,
                          n_ambient=n, e=e, f=f, h=h, g_basis=g_basis,
                          zf_basis=zf_basis, q_basis=q_basis, gram=gram,
                          is_hook=is_hook)
    expected_zf = slice_dim(family, p)
    if r.dim_zf != expected_zf:
        raise RealizationError(
            f"{label}: dim z(f) = {r.dim_zf}, expected {expected_zf}")
    expected_q = effective_centralizer(family, p).dim
    if r.dim_q != expected_q:
        raise RealizationError(
            f"{label}: dim q = {r.dim_q}, expected {expected_q}")
    for c in q_basis:
        if not bracket(c, e).is_zero() or not bracket(c, f).is_zero():
            raise RealizationError(f"{label}: q element fails to centralize e, f")
    return r


def gl_triple(p: Partition) -> MatrixRealization:
    """Block-diagonal triple through a nilpotent of any gl Jordan type."""
    n = p.n
    e = RatMatrix.zeros(n, n)
    f = RatMatrix.zeros(n, n)
    h = RatMatrix.zeros(n, n)
    offset = 0
    for part in p.parts:
        eb, fb, hb = _sl2_on_jordan_block(part)
        e = e + _embed(eb, n, offset)
        f = f + _embed(fb, n, offset)
        h = h + _embed(hb, n, offset)
        offset += part
    g_basis = build_algebra(n, None)
    q_full = _ad_kernel_in(g_basis, [e, f])
    # Effective symmetry algebra: quotient the trivially acting scalar,
    # realized as the traceless part of the full centralizer.
    cols = [[m.trace()] for m in q_full]
    ker = kernel(RatMatrix(list(zip(*cols))))
    q_eff = []
    for coeffs in ker.basis:
        acc = RatMatrix.zeros(n, n)
        for c, m in zip(coeffs, q_full):
            if c:
                acc = acc + m.scale(c)
        q_eff.append(acc)
    family = liealg.gl(n)
    return _finish(f"gl{n}-{'.'.join(map(str, p.parts))}", family, p, n,
                   e, f, h, g_basis, q_eff, gram=None,
                   is_hook=hook_parameters(p) is not None)


def hook_triple(family: AlgebraFamily, p: Partition) -> MatrixRealization:
    """Realization of a hook nilpotent (m, 1^k) in gl, sp or so.

    The big part acts on an irreducible m-dimensional module U carrying
    the unique invariant form; the k-dimensional complement W carries an
    identity (orthogonal) or standard block (symplectic) form, and the
    total form is the direct sum.
    """
    hook = hook_parameters(p)
    if hook is None:
        raise RealizationError(f"{p} is not a hook type")
    if family.size != p.n:
        raise RealizationError(f"{p} does not fit {family}")
    m = p.parts[0]
    k = len(p.parts) - 1
    n = m + k
    eb, fb, hb = _sl2_on_jordan_block(m)
    e, f, h = (_embed(x, n) for x in (eb, fb, hb))

    if family.kind == "GL":
        g_basis = build_algebra(n, None)
        q_basis = [_unit(n, m + a, m + b) for a in range(k) for b in range(k)]
        return _finish(f"gl{n}-hook{k}", family, p, n, e, f, h,
                       g_basis, q_basis, gram=None, is_hook=True)

    if family.kind == "Sp":
        if m % 2 or k % 2:
            raise RealizationError(f"{p} has the wrong parity for Sp")
        form_w = _standard_symplectic(k) if k else RatMatrix.zeros(0, 0)
    elif family.kind == "SO":
        if m % 2 == 0:
            raise RealizationError(f"{p} has the wrong parity for SO")
        form_w = RatMatrix.identity(k)
    else:
        raise RealizationError(f"no hook realization for {family}")

    form_u = invariant_form_on_block(m)
    gram = RatMatrix.zeros(n, n)
    for i in range(m):
        for j in range(m):
            gram.data[i][j] = form_u.data[i][j]
    for a in range(k):
        for b in range(k):
            gram.data[m + a][m + b] = form_w.data[a][b]
    g_basis = build_algebra(n, gram)
    if len(g_basis) != family.dim:
        raise RealizationError("algebra basis has the wrong dimension")
    for x in (e, f, h):
        if not (x.transpose() @ gram + gram @ x).is_zero():
            raise RealizationError("triple does not preserve the form")
    q_basis = _ad_kernel_in(g_basis, [e, f])
    kind = "sp" if family.kind == "Sp" else "so"
    return _finish(f"{kind}{n}-hook{k}", family, p, n, e, f, h,
                   g_basis, q_basis, gram=gram, is_hook=True)


def sp6_33_triple() -> MatrixRealization:
    """The explicit (3,3) triple in the rank-3 symplectic algebra.

    e is a pair of 3x3 Jordan blocks arranged as diag(e', -e'^T) for the
    split symplectic form [[0, I], [-I, 0]]; f = diag(f', -f'^T) with
    f' = [[0,0,0],[2,0,0],[0,2,0]].
    """
    n = 6
    ep = RatMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    fp = RatMatrix([[0, 0, 0], [2, 0, 0], [0, 2, 0]])
    hp = RatMatrix([[2, 0, 0], [0, 0, 0], [0, 0, -2]])

    def split(top: RatMatrix) -> RatMatrix:
        out = RatMatrix.zeros(n, n)
        for i in range(3):
            for j in range(3):
                out.data[i][j] = top.data[i][j]
                out.data[3 + i][3 + j] = -top.data[j][i]
        return out

    e, f, h = split(ep), split(fp), split(hp)
    gram = RatMatrix.zeros(n, n)
    for i in range(3):
        gram.data[i][3 + i] = Fraction(1)
        gram.data[3 + i][i] = Fraction(-1)
    g_basis = build_algebra(n, gram)
    family = liealg.sp(6)
    p = Partition((3, 3))
    q_basis = _ad_kernel_in(g_basis, [e, f])
    return _finish("sp6-33", family, p, n, e, f, h, g_basis, q_basis,
                   gram=gram, is_hook=False)


def sp6_q_cartan() -> RatMatrix:
    """Cartan element of the embedded sl2 symmetry of the (3,3) slice."""
    return RatMatrix([[1 if i == j else 0 for j in range(6)] for i in range(3)]
                     + [[-1 if i + 3 == j else 0 for j in range(6)] for i in range(3)])


def weight_space_dims(r: MatrixRealization, cartan: RatMatrix,
                      weights: tuple[int, ...]) -> dict[int, int]:
    """Dimensions of ad(cartan)-eigenspaces inside z(f).

    The listed weights must exhaust z(f); raises otherwise.
    """
    zf = r.zf_subspace()
    ad = []  # matrix of ad(cartan) on z(f), in zf coordinates
    for b in r.zf_basis:
        img = bracket(cartan, b)
        coords = zf.coords(img.flatten())
        if coords is None:
            raise RealizationError("ad(cartan) does not preserve z(f)")
        ad.append(coords)
    a = RatMatrix(list(zip(*ad)))
    dims: dict[int, int] = {}
    for w in weights:
        shifted = a - RatMatrix.identity(a.rows).scale(w)
        dims[w] = kernel(shifted).dim
    if sum(dims.values()) != r.dim_zf:
        raise RealizationError("weights do not exhaust z(f)")
    return dims


def hook_L_subspace(r: MatrixRealization) -> Subspace:
    """The distinguished tautological submodule of z(f) for a hook.

    Spanned by maps sending the highest weight vector into the complement
    W and W into the lowest weight line; k-dimensional for the form-
    preserving families (with the form-compatibility constraint), and
    2k-dimensional (W plus its dual) for gl.
    """
    if not r.is_hook:
        raise RealizationError(f"{r.label} is not a hook realization")
    m = r.jordan_type.parts[0]
    k = len(r.jordan_type.parts) - 1
    n = r.n_ambient
    mats: list[RatMatrix] = []
    if r.gram is None:
        for a in range(k):
            mats.append(_unit(n, m + a, 0))      # u_1 -> w_a
        for b in range(k):
            mats.append(_unit(n, m - 1, m + b))  # w_b -> u_m
    else:
        form_w = RatMatrix([[r.gram.data[m + a][m + b] for b in range(k)]
                            for a in range(k)])
        for a in range(k):
            xi = _unit(n, m + a, 0)
            for b in range(k):
                c = -form_w.data[a][b]
                if c:
                    xi = xi + _unit(n, m - 1, m + b).scale(c)
            if not (xi.transpose() @ r.gram + r.gram @ xi).is_zero():
                raise RealizationError("L element leaves the algebra")
            mats.append(xi)
    for xi in mats:
        if not bracket(r.f, xi).is_zero():
            raise RealizationError("L element fails to centralize f")
    sub = Subspace(n * n, [xi.flatten() for xi in mats])
    if not r.zf_subspace().contains(sub):
        raise RealizationError("L is not inside z(f)")
    expected = 2 * k if r.gram is None else k
    if sub.dim != expected:
        raise RealizationError(f"dim L = {sub.dim}, expected {expected}")
    return sub


def g2_realization() -> MatrixRealization | None:
    """Matrix model for the exceptional 14-dimensional algebra case.

    Not implemented; the scan of the shipped orbit table covers this case
    combinatorially, so the matrix path is an optional extra.
    """
    return None


def build_case(label: str) -> MatrixRealization:
    """Build a realization from a case label like gl5-hook2 or sp6-33."""
    import re
    if label == "sp6-33":
        return sp6_33_triple()
    m_ = re.fullmatch(r"(gl|sp|so)(\d+)-hook(\d+)", label)
    if m_:
        kind, size, k = m_.group(1), int(m_.group(2)), int(m_.group(3))
        family = {"gl": liealg.gl, "sp": liealg.sp, "so": liealg.so}[kind](size)
        p = Partition((size - k,) + (1,) * k)
        return hook_triple(family, p)
    m_ = re.fullmatch(r"gl(\d+)-([\d.]+)", label)
    if m_:
        parts = tuple(int(x) for x in m_.group(2).split("."))
        p = Partition(parts)
        if p.n != int(m_.group(1)):
            raise RealizationError(f"partition does not fit case {label!r}")
        return gl_triple(p)
    raise RealizationError(f"unknown case label: {label!r}")
