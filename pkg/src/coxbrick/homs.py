"""Hom spaces, endomorphism algebras, radicals, and socles, exactly over Q.

A homomorphism f: M -> N is a family of matrices f_v (one per vertex) with
f_u * M(g) = N(g) * f_v for every arrow g: u -> v (matrices act per the
convention in `coxbrick.quiver`).  The radical of an endomorphism algebra is
computed with the characteristic-zero trace-form criterion: x is radical iff
trace(x . y) vanishes for every y in a basis.  This is valid because the
algebra acts faithfully on the module and the ground field is Q; positive
characteristic is deliberately out of scope.
"""

from __future__ import annotations

from fractions import Fraction

from coxbrick import ratlinalg as rl
from coxbrick.coxeter import DynkinType, Family
from coxbrick.quiver import QuiverRepresentation
from coxbrick.ratlinalg import Mat, ZERO, ONE

Hom = dict[int, Mat]  # vertex -> block matrix


def hom_basis(m: QuiverRepresentation, n: QuiverRepresentation) -> list[Hom]:
    """Basis of Hom(m, n) as vertex-indexed matrix families."""
    if m.quiver != n.quiver:
        raise ValueError("representations live over different quivers")
    vertices = m.quiver.vertices
    offsets: dict[int, int] = {}
    total = 0
    for v in vertices:
        offsets[v] = total
        total += n.dims.get(v, 0) * m.dims.get(v, 0)
    if total == 0:
        return []

    def unknown(v: int, row: int, col: int) -> int:
        return offsets[v] + row * m.dims[v] + col

    equations: list[list[Fraction]] = []
    for arrow in m.quiver.arrows:
        u, v = arrow.src, arrow.tgt
        am, an = m.mats[arrow.name], n.mats[arrow.name]
        for r in range(n.dims.get(u, 0)):
            for c in range(m.dims.get(v, 0)):
                row = [ZERO] * total
                for k in range(m.dims.get(u, 0)):
                    row[unknown(u, r, k)] += am[k][c]
                for k in range(n.dims.get(v, 0)):
                    row[unknown(v, k, c)] -= an[r][k]
                if any(x != 0 for x in row):
                    equations.append(row)

    if equations:
        solutions = rl.nullspace(tuple(tuple(r) for r in equations))
    else:
        solutions = [tuple(ONE if i == k else ZERO for i in range(total)) for k in range(total)]

    basis = []
    for sol in solutions:
        f: Hom = {}
        for v in vertices:
            rows_n, cols_m = n.dims.get(v, 0), m.dims.get(v, 0)
            f[v] = tuple(
                tuple(sol[offsets[v] + r * cols_m + c] for c in range(cols_m))
                for r in range(rows_n)
            )
        basis.append(f)
    return basis


def hom_dim(m: QuiverRepresentation, n: QuiverRepresentation) -> int:
    return len(hom_basis(m, n))


def compose_homs(g: Hom, f: Hom) -> Hom:
    """g after f, blockwise."""
    return {v: rl.mat_mul(g[v], f[v]) for v in g}


def hom_trace(f: Hom) -> Fraction:
    return sum((f[v][i][i] for v in f for i in range(len(f[v]))), ZERO)


def radical_basis(end_basis: list[Hom]) -> list[Hom]:
    """Radical of the endomorphism algebra spanned by `end_basis`.

    Trace-form criterion (characteristic zero): the radical is the kernel of
    the Gram matrix [trace(b_i . b_j)].
    """
    k = len(end_basis)
    if k == 0:
        return []
    gram = tuple(
        tuple(hom_trace(compose_homs(end_basis[i], end_basis[j])) for j in range(k))
        for i in range(k)
    )
    combos = rl.nullspace(gram)
    out = []
    for coeffs in combos:
        f: Hom = {}
        for v in end_basis[0]:
            acc = None
            for c, b in zip(coeffs, end_basis):
                piece = rl.mat_scale(c, b[v])
                acc = piece if acc is None else rl.mat_add(acc, piece)
            f[v] = acc
        out.append(f)
    return out


def subrepresentation(
    rep: QuiverRepresentation, basis_rows: dict[int, list[tuple[Fraction, ...]]]
) -> QuiverRepresentation:
    """Restrict `rep` to the invariant subspace spanned per vertex.

    The subspace basis is canonicalised to reduced echelon form, so equal
    subspaces yield identical representations.  Raises ValueError if some
    arrow does not preserve the subspace.
    """
    bases = {v: rl.row_space_rref(basis_rows.get(v, [])) for v in rep.quiver.vertices}
    dims = {v: len(bases[v]) for v in rep.quiver.vertices}
    mats = {}
    for arrow in rep.quiver.arrows:
        u, v = arrow.src, arrow.tgt
        cols = []
        for b in bases[v]:
            image = tuple(
                sum((rep.mats[arrow.name][r][c] * b[c] for c in range(len(b))), ZERO)
                for r in range(rep.dims.get(u, 0))
            )
            if dims[u] == 0:
                if any(x != 0 for x in image):
                    raise ValueError(f"subspace not invariant under {arrow.name}")
                cols.append(())
                continue
            bu = tuple(zip(*bases[u]))  # dims[u] x len(bases[u])
            coords = rl.solve_exact(bu, image)
            if coords is None:
                raise ValueError(f"subspace not invariant under {arrow.name}")
            cols.append(coords)
        mats[arrow.name] = tuple(
            tuple(col[r] for col in cols) for r in range(dims[u])
        )
    return QuiverRepresentation(rep.quiver, dims, mats)


def socle_over_end(m: QuiverRepresentation) -> QuiverRepresentation:
    """The largest subrepresentation killed by the radical of End(m).

    For m = J(w) this is the brick S(w).  The result is a representation on
    the canonical echelon basis of the subspace.
    """
    if m.total_dim == 0:
        raise ValueError("socle of the zero module is undefined")
    rad = radical_basis(hom_basis(m, m))
    basis_rows: dict[int, list] = {}
    for v in m.quiver.vertices:
        d = m.dims.get(v, 0)
        stacked = [f[v][r] for f in rad for r in range(d)]
        if not stacked:
            basis_rows[v] = [
                tuple(ONE if i == k else ZERO for i in range(d)) for k in range(d)
            ]
        else:
            basis_rows[v] = rl.nullspace(tuple(stacked))
    return subrepresentation(m, basis_rows)


def is_brick(m: QuiverRepresentation) -> bool:
    """End one-dimensional over Q, hence a division ring."""
    return m.total_dim > 0 and hom_dim(m, m) == 1


def is_semibrick(mods: list[QuiverRepresentation]) -> bool:
    if not all(is_brick(m) for m in mods):
        return False
    for i, m in enumerate(mods):
        for j, n in enumerate(mods):
            if i != j and hom_dim(m, n) != 0:
                return False
    return True


def iso_bricks(m: QuiverRepresentation, n: QuiverRepresentation) -> bool:
    """Whether two bricks are isomorphic.

    Equal dimension vectors plus a one-dimensional Hom space whose generator
    is invertible at every vertex.
    """
    if not is_brick(m) or not is_brick(n):
        raise ValueError("iso_bricks expects bricks")
    if m.dim_vector() != n.dim_vector():
        return False
    basis = hom_basis(m, n)
    if len(basis) != 1:
        return False
    f = basis[0]
    return all(rl.invertible(f[v]) for v in f if len(f[v]) > 0)


def diagram_edges(dynkin: DynkinType) -> list[tuple[int, int]]:
    n = dynkin.rank
    if dynkin.family is Family.A:
        return [(i, i + 1) for i in range(1, n)]
    edges = []
    if n >= 3:
        edges = [(1, 2), (-1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    return edges


def tits_form(dynkin: DynkinType, dims: dict[int, int]) -> int:
    q = sum(dims.get(v, 0) ** 2 for v in dynkin.vertices)
    for u, v in diagram_edges(dynkin):
        q -= dims.get(u, 0) * dims.get(v, 0)
    return q


def is_positive_root(dynkin: DynkinType, dims: dict[int, int]) -> bool:
    """Nonzero, componentwise nonnegative, and Tits form equal to 1."""
    values = [dims.get(v, 0) for v in dynkin.vertices]
    if all(x == 0 for x in values) or any(x < 0 for x in values):
        return False
    return tits_form(dynkin, dims) == 1
