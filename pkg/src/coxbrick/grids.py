"""Grid bases of the projectives Pi e_l and of the modules J(w).

Each indecomposable projective has a basis indexed by pairs (i, j): j labels
a row, i the entry inside the row, and every arrow of the double quiver acts
by shifting within this index set (coefficient +1, except for one family of
-1 arrows in the type-D, l >= 2 pattern).  A join-irreducible element w with
unique descent l selects the subset Gamma(w) of kept entries, and J(w) is
the corresponding quotient grid: arrows send a kept entry to its shifted
neighbour, or to zero when the neighbour is deleted.

Index conventions per pattern:

* type A, descent l:     rows j in [l, n], row j holds i in [max(1, j-l+1), j];
  entry (i, j) sits at vertex i.
* type D, l = +-1:       rows j in {l} union [2, n-1]; row l holds only (l, l),
  row j >= 2 holds i in [2, j] plus the single sign iota(j) in {+1, -1} that
  alternates row by row.
* type D, l >= 2:        rows j in [l, n-1], row j holds the signed entries
  i in [j-(n-1)-l, j] minus 0 (clamped to +-[1, n-1]); both +1 and -1 occur
  in every row, and the basis depends on a sign epsilon: the +-1 entry equal
  to upper(j) = epsilon*(-1)^(j-l+1) maps straight to (-2, j) while its twin
  picks up a -1 and an extra vertical term.

Entry (i, j) sits at vertex i when |i| = 1 and at vertex |i| otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from coxbrick.coxeter import CoxeterElement, DynkinType, Family, join_irreducible_type
from coxbrick.homs import subrepresentation
from coxbrick.quiver import (
    DoubleQuiver,
    QuiverRepresentation,
    double_quiver,
    rep_from_basis_action,
)
from coxbrick.ratlinalg import ONE, ZERO

GridKey = tuple[int, int]  # (entry i, row j)


class UnsupportedCaseError(Exception):
    """The fast kernel route is not available for this element."""


@dataclass(frozen=True)
class GammaGrid:
    """The index set of one grid basis (with the sign choice for D, l >= 2)."""

    dynkin: DynkinType
    l: int
    entries: frozenset[GridKey]
    eps: int = 1

    def vertex_of(self, key: GridKey) -> int:
        i = key[0]
        return i if abs(i) == 1 else abs(i)


def _rows(dynkin: DynkinType, l: int) -> list[int]:
    n = dynkin.rank
    if dynkin.family is Family.A:
        return list(range(l, n + 1))
    if abs(l) == 1:
        return [l] + list(range(2, n))
    return list(range(l, n))


def _row_entries(dynkin: DynkinType, l: int, j: int) -> list[int]:
    n = dynkin.rank
    if dynkin.family is Family.A:
        return list(range(max(1, j - l + 1), j + 1))
    if abs(l) == 1:
        if abs(j) == 1:
            return [l]
        iota = -l if j % 2 == 0 else l
        return [iota] + list(range(2, j + 1))
    lo = max(j - (n - 1) - l, -(n - 1))
    return [i for i in range(lo, j + 1) if i != 0]


def _next_row(dynkin: DynkinType, l: int, j: int) -> int | None:
    rows = _rows(dynkin, l)
    k = rows.index(j)
    return rows[k + 1] if k + 1 < len(rows) else None


def gamma_full(dynkin: DynkinType, l: int, eps: int = 1) -> GammaGrid:
    """Gamma[l]: the full index set of Pi e_l."""
    if l not in dynkin.vertices:
        raise ValueError(f"{l} is not a vertex of {dynkin}")
    entries = {
        (i, j) for j in _rows(dynkin, l) for i in _row_entries(dynkin, l, j)
    }
    return GammaGrid(dynkin, l, frozenset(entries), eps)


def _keep(dynkin: DynkinType, l: int, w: CoxeterElement | None, i: int, j: int) -> bool:
    """Whether entry (i, j) of Gamma[l] survives in Gamma(w)."""
    if w is None:
        return True
    n = dynkin.rank
    if dynkin.family is Family.A:
        return i >= w(j + 1)
    if abs(l) == 1:
        return i >= w(abs(j) + 1)
    threshold = w(j + 1)
    if threshold >= 2:
        return i >= threshold
    if abs(threshold) == 1:
        return i >= 2 or i == threshold
    return i >= threshold + 1


def epsilon_for(w: CoxeterElement) -> int:
    """Sign choice of the grid basis of J(w) for type D, descent l >= 2."""
    l = join_irreducible_type(w)
    assert l is not None and l >= 2
    n = w.dynkin.rank
    if w(l + 1) >= 2:
        return 1
    m = max(k for k in range(l + 1, n + 1) if w(k) <= 1)
    sign = -1 if (m - (l + 1)) % 2 else 1
    return sign * (w(m) if abs(w(m)) == 1 else 1)


def gamma_of(w: CoxeterElement) -> GammaGrid:
    """Gamma(w): kept entries of the grid of J(w)."""
    l = join_irreducible_type(w)
    if l is None:
        raise ValueError(f"{w} is not join-irreducible")
    dynkin = w.dynkin
    eps = 1
    if dynkin.family is Family.D and l >= 2:
        eps = epsilon_for(w)
    full = gamma_full(dynkin, l, eps)
    kept = frozenset((i, j) for (i, j) in full.entries if _keep(dynkin, l, w, i, j))
    return GammaGrid(dynkin, l, kept, eps)


def _grid_action(
    quiver: DoubleQuiver, grid: GammaGrid
) -> dict[str, dict[GridKey, list[tuple[int, GridKey]]]]:
    """Arrow actions on the grid basis, restricted to kept entries."""
    dynkin, l, eps = grid.dynkin, grid.l, grid.eps
    family_d = dynkin.family is Family.D
    entries = grid.entries

    def img(coeff: int, key: GridKey) -> list[tuple[int, GridKey]]:
        return [(coeff, key)] if key in entries else []

    action: dict[str, dict[GridKey, list[tuple[int, GridKey]]]] = {
        a.name: {} for a in quiver.arrows
    }

    def upper(j: int) -> int:
        return eps * (-1 if (j - l + 1) % 2 else 1)

    for (i, j) in sorted(entries):
        nxt = _next_row(dynkin, l, j)
        if not family_d:
            # alpha_{i-1} walks left in the row, beta_{i+1} drops a row.
            if i >= 2:
                action[f"alpha{i - 1}"][(i, j)] = img(1, (i - 1, j))
            if i <= dynkin.rank - 1 and nxt is not None:
                action[f"beta{i + 1}"][(i, j)] = img(1, (i + 1, nxt))
            elif i <= dynkin.rank - 1:
                action[f"beta{i + 1}"][(i, j)] = []
        elif abs(l) == 1:
            if i >= 3:
                action[f"alpha{i - 1}"][(i, j)] = img(1, (i - 1, j))
            elif i == 2:
                for s in (1, -1):
                    name = "alpha1+" if s == 1 else "alpha1-"
                    action[name][(i, j)] = img(1, (s, j))
            if abs(i) == 1:
                name = "beta2+" if i == 1 else "beta2-"
                action[name][(i, j)] = img(1, (2, nxt)) if nxt is not None else []
            elif i <= dynkin.rank - 2 and nxt is not None:
                action[f"beta{i + 1}"][(i, j)] = img(1, (i + 1, nxt))
            elif i <= dynkin.rank - 2:
                action[f"beta{i + 1}"][(i, j)] = []
        else:
            if i >= 2:
                if i >= 3:
                    action[f"alpha{i - 1}"][(i, j)] = img(1, (i - 1, j))
                else:
                    for s in (1, -1):
                        name = "alpha1+" if s == 1 else "alpha1-"
                        action[name][(i, j)] = img(1, (s, j))
                if i <= dynkin.rank - 2 and nxt is not None:
                    action[f"beta{i + 1}"][(i, j)] = img(1, (i + 1, nxt))
            elif abs(i) == 1:
                name = "beta2+" if i == 1 else "beta2-"
                if i == upper(j):
                    action[name][(i, j)] = img(1, (-2, j))
                else:
                    terms = img(-1, (-2, j))
                    if nxt is not None:
                        terms += img(1, (2, nxt))
                    action[name][(i, j)] = terms
            elif i == -2:
                if nxt is not None:
                    s = upper(nxt)
                    name = "alpha1+" if s == 1 else "alpha1-"
                    action[name][(i, j)] = img(1, (s, nxt))
                if abs(i) <= dynkin.rank - 2:
                    action[f"beta{abs(i) + 1}"][(i, j)] = img(1, (i - 1, j))
            else:  # i <= -3
                if nxt is not None:
                    action[f"alpha{abs(i) - 1}"][(i, j)] = img(1, (i + 1, nxt))
                if abs(i) <= dynkin.rank - 2:
                    action[f"beta{abs(i) + 1}"][(i, j)] = img(1, (i - 1, j))
    return action


def _grid_rep(grid: GammaGrid) -> QuiverRepresentation:
    quiver = double_quiver(grid.dynkin)
    vertex_of = {key: grid.vertex_of(key) for key in grid.entries}
    rep = rep_from_basis_action(quiver, vertex_of, _grid_action(quiver, grid))
    rep.check_relations()
    return rep


def projective_rep(dynkin: DynkinType, l: int) -> QuiverRepresentation:
    """The indecomposable projective Pi e_l as an exact representation."""
    return _grid_rep(gamma_full(dynkin, l))


def j_module(w: CoxeterElement) -> QuiverRepresentation:
    """J(w) for a join-irreducible w, on the kept-grid basis."""
    return _grid_rep(gamma_of(w))


def grid_basis_order(grid: GammaGrid) -> dict[int, list[GridKey]]:
    """Basis order per vertex, matching the representation's coordinates."""
    order: dict[int, list[GridKey]] = {}
    for key in sorted(grid.entries):
        order.setdefault(grid.vertex_of(key), []).append(key)
    return order


def kernel_socle(w: CoxeterElement) -> QuiverRepresentation:
    """S(w) as the kernel of right multiplication by a fixed loop.

    Supported for type A and for type D with descent +-1, where the loop
    shifts the grid index: (i, j) -> (i, j+1) in type A, and two rows down
    (same i) in type D.  The kernel is spanned by the kept entries whose
    shift leaves Gamma(w).  For type D with l >= 2 the generic socle oracle
    must be used instead.
    """
    l = join_irreducible_type(w)
    if l is None:
        raise ValueError(f"{w} is not join-irreducible")
    dynkin = w.dynkin
    if dynkin.family is Family.D and l >= 2:
        raise UnsupportedCaseError(
            "kernel route is only implemented for type A and type D with l = +-1"
        )
    grid = gamma_of(w)

    def shifted_out(i: int, j: int) -> bool:
        if dynkin.family is Family.A:
            return (i, j + 1) not in grid.entries
        nxt = _next_row(dynkin, l, j)
        nxt2 = _next_row(dynkin, l, nxt) if nxt is not None else None
        return nxt2 is None or (i, nxt2) not in grid.entries

    kernel_keys = {key for key in grid.entries if shifted_out(*key)}
    rep = _grid_rep(grid)
    order = grid_basis_order(grid)
    basis_rows = {}
    for v in rep.quiver.vertices:
        keys = order.get(v, [])
        rows = []
        for key in keys:
            if key in kernel_keys:
                rows.append(
                    tuple(ONE if other == key else ZERO for other in keys)
                )
        basis_rows[v] = rows
    return subrepresentation(rep, basis_rows)
