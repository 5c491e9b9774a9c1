"""Combinatorial bricks attached to join-irreducible elements.

Every join-irreducible w with descent l yields a brick S(w) whose basis is a
set V of signed symbols.  In type A, V is the integer interval [b, a-1] with
a = w(l), b = w(l+1), and consecutive symbols are joined by one arrow whose
direction is decided by membership of the larger symbol in R = w([l+1, n+1]).
In type D the symbol set splits as V+ and V-, governed by

    r = max{k >= 0 : [1, k] inside +-R},
    c = the sign with which 1 occurs in the window (+1 when some w(i) = 1,
        -1 when some w(i) = -1) if r >= 1, else 1,

and the arrows carry coefficients from four sign tables; two of the entries
are -1 (the cross arrow out of the +-1 column when r = 0, and the arrow at
depth |i| = r).  All constructions here take the parameter tuple
(a, b, R) as input, so the same code serves both the per-element brick maps
and the direct semibrick formulas that bypass the intermediate elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from coxbrick.canjoin import r_set
from coxbrick.coxeter import CoxeterElement, DynkinType, Family, join_irreducible_type
from coxbrick.quiver import QuiverRepresentation, double_quiver, rep_from_basis_action


def symbol_vertex(s: int) -> int:
    """Symbols +-1 sit at the fork vertices; others at their absolute value."""
    return s if s >= -1 else -s


@dataclass(frozen=True)
class BrickParamsA:
    l: int
    a: int
    b: int
    r_values: frozenset[int]

    @property
    def v_plus(self) -> tuple[int, ...]:
        return tuple(range(self.b, self.a))

    @property
    def v_minus(self) -> tuple[int, ...]:
        return ()


@dataclass(frozen=True)
class BrickParamsD:
    l: int
    a: int
    b: int
    r: int
    c: int
    r_values: frozenset[int]

    @property
    def v_plus(self) -> tuple[int, ...]:
        return v_sets(self.a, self.b, self.c)[1]

    @property
    def v_minus(self) -> tuple[int, ...]:
        return v_sets(self.a, self.b, self.c)[0]


def depth_r(r_values: frozenset[int]) -> int:
    r = 0
    while r + 1 in r_values or -(r + 1) in r_values:
        r += 1
    return r


def sign_c(r_values: frozenset[int]) -> int:
    """+1 or -1 according to which of +-1 lies in R; +1 when neither does."""
    if 1 in r_values:
        return 1
    if -1 in r_values:
        return -1
    return 1


def v_sets(a: int, b: int, c: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(V-, V+) of the type-D construction, each sorted by absolute value."""
    if b >= 2:
        v_minus: tuple[int, ...] = ()
        v_plus = tuple(range(b, a))
    elif abs(b) == 1:
        v_minus = ()
        v_plus = (c,) + tuple(range(2, a))
    else:
        v_minus = (-c,) + tuple(range(-2, b, -1))
        v_plus = (c,) + tuple(range(2, a))
    return v_minus, v_plus


def brick_params_a(w: CoxeterElement) -> BrickParamsA:
    l = join_irreducible_type(w)
    if l is None:
        raise ValueError(f"{w} is not join-irreducible")
    return BrickParamsA(l, w(l), w(l + 1), r_set(w))


def brick_params_d(w: CoxeterElement) -> BrickParamsD:
    l = join_irreducible_type(w)
    if l is None:
        raise ValueError(f"{w} is not join-irreducible")
    r_vals = r_set(w)
    return BrickParamsD(
        l, w(l), w(abs(l) + 1), depth_r(r_vals), sign_c(r_vals), r_vals
    )


@dataclass(frozen=True)
class BrickDiagram:
    """Abbreviated form of a brick: symbols plus plain arrows between them."""

    dynkin: DynkinType
    window: tuple[int, ...] | None
    type_l: int | None
    a: int
    b: int
    r: int | None
    c: int | None
    r_values: frozenset[int]
    v_plus: tuple[int, ...]
    v_minus: tuple[int, ...]
    arrows: frozenset[tuple[int, int]]

    @property
    def symbols(self) -> frozenset[int]:
        return frozenset(self.v_plus) | frozenset(self.v_minus)

    def dim_vector(self) -> dict[int, int]:
        dims = {v: 0 for v in self.dynkin.vertices}
        for s in self.symbols:
            dims[symbol_vertex(s)] += 1
        return dims


def _diagram_arrows_a(a: int, b: int, r_values: frozenset[int]) -> set[tuple[int, int]]:
    arrows = set()
    for i in range(b, a - 1):
        if i + 1 in r_values:
            arrows.add((i, i + 1))
        else:
            arrows.add((i + 1, i))
    return arrows


def _diagram_arrows_d(
    a: int, b: int, r: int, c: int, r_values: frozenset[int]
) -> set[tuple[int, int]]:
    """Arrow rules (i)-(iv); arrows whose endpoint is not a symbol are dropped.

    The r = 0 cross arrows in (iv) are keyed directly to the sign-table
    conditions 2 not in R and -2 not in R rather than to the phrasing of the
    abbreviated rules, and they are not subject to any "max V+" exclusion:
    the coefficient tables define actions on every existing basis vector, so
    the arrow c -> -2 exists even when V+ = {c}.
    """
    v_minus, v_plus = v_sets(a, b, c)
    symbols = set(v_plus) | set(v_minus)
    arrows = set()

    def add(src: int, tgt: int) -> None:
        if src in symbols and tgt in symbols:
            arrows.add((src, tgt))

    for i in v_plus:
        up = abs(i) + 1
        if up in r_values:
            add(i, up)
        else:
            add(up, i)
    for i in v_minus:
        down = -(abs(i) + 1)
        if down in r_values:
            add(down, i)
        else:
            add(i, down)
    if r >= 1:
        for i in v_minus:
            if abs(i) <= r:
                if abs(i) + 1 in r_values:
                    add(-(abs(i) + 1), -i)
                else:
                    add(i, abs(i) + 1)
    else:
        if 2 not in r_values:
            add(2, -c)
        if -2 not in r_values:
            add(c, -2)
    return arrows


def diagram_from_params_a(
    dynkin: DynkinType,
    a: int,
    b: int,
    r_values: frozenset[int],
    window: tuple[int, ...] | None = None,
    type_l: int | None = None,
) -> BrickDiagram:
    return BrickDiagram(
        dynkin=dynkin,
        window=window,
        type_l=type_l,
        a=a,
        b=b,
        r=None,
        c=None,
        r_values=r_values,
        v_plus=tuple(range(b, a)),
        v_minus=(),
        arrows=frozenset(_diagram_arrows_a(a, b, r_values)),
    )


def brick_diagram_a(w: CoxeterElement) -> BrickDiagram:
    p = brick_params_a(w)
    return diagram_from_params_a(
        w.dynkin, p.a, p.b, p.r_values, window=w.window, type_l=p.l
    )


def diagram_from_params_d(
    dynkin: DynkinType,
    a: int,
    b: int,
    r_values: frozenset[int],
    window: tuple[int, ...] | None = None,
    type_l: int | None = None,
) -> BrickDiagram:
    r = depth_r(r_values)
    c = sign_c(r_values)
    v_minus, v_plus = v_sets(a, b, c)
    return BrickDiagram(
        dynkin=dynkin,
        window=window,
        type_l=type_l,
        a=a,
        b=b,
        r=r,
        c=c,
        r_values=r_values,
        v_plus=v_plus,
        v_minus=v_minus,
        arrows=frozenset(_diagram_arrows_d(a, b, r, c, r_values)),
    )


def brick_diagram_d(w: CoxeterElement) -> BrickDiagram:
    p = brick_params_d(w)
    return diagram_from_params_d(
        w.dynkin, p.a, p.b, p.r_values, window=w.window, type_l=p.l
    )


def brick_diagram(w: CoxeterElement) -> BrickDiagram:
    if w.dynkin.family is Family.A:
        return brick_diagram_a(w)
    return brick_diagram_d(w)


def rep_from_params_a(
    dynkin: DynkinType, a: int, b: int, r_values: frozenset[int]
) -> QuiverRepresentation:
    """The type-A brick on basis <i>, i in [b, a-1]."""
    quiver = double_quiver(dynkin)
    symbols = list(range(b, a))
    vertex_of = {s: s for s in symbols}
    action: dict[str, dict[int, list[tuple[int, int]]]] = {}

    def put(name: str, key: int, images: list[tuple[int, int]]) -> None:
        action.setdefault(name, {})[key] = [
            (coeff, s) for coeff, s in images if s in vertex_of
        ]

    for y in symbols:
        if y >= 2 and y - 1 >= b:
            put(f"alpha{y - 1}", y, [] if y in r_values else [(1, y - 1)])
        if y + 1 <= dynkin.rank:
            put(f"beta{y + 1}", y, [(1, y + 1)] if y + 1 in r_values else [])
    rep = rep_from_basis_action(quiver, vertex_of, action)
    rep.check_relations()
    return rep


def rep_from_params_d(
    dynkin: DynkinType, a: int, b: int, r_values: frozenset[int]
) -> QuiverRepresentation:
    """The type-D brick from the four coefficient tables.

    Basis <s> for s in V+ u V-; every arrow action on every basis vector is
    given below, with <x> read as zero when x is not a symbol.
    """
    n = dynkin.rank
    r = depth_r(r_values)
    c = sign_c(r_values)
    v_minus, v_plus = v_sets(a, b, c)
    quiver = double_quiver(dynkin)
    vertex_of = {s: symbol_vertex(s) for s in list(v_plus) + list(v_minus)}
    action: dict[str, dict[int, list[tuple[int, int]]]] = {}

    def put(name: str, key: int, images: list[tuple[int, int]]) -> None:
        action.setdefault(name, {})[key] = [
            (coeff, s) for coeff, s in images if coeff != 0 and s in vertex_of
        ]

    def alpha_into(s: int) -> str:
        # the alpha arrow landing at the vertex of symbol s (|s| = 1)
        return "alpha1+" if s == 1 else "alpha1-"

    def beta_from(s: int) -> str:
        return "beta2+" if s == 1 else "beta2-"

    for y in v_plus:
        ay = abs(y)
        # action of alpha_{ay-1} on <y>: table (i) with |i| = ay - 1
        if ay >= 3:
            xi_plus = 0 if ay in r_values else 1
            put(f"alpha{ay - 1}", y, [(xi_plus, y - 1)])
        elif ay == 2:
            xi_plus = 0 if 2 in r_values else 1
            xi_minus = 1 if (r == 0 and 2 not in r_values) else 0
            put(alpha_into(c), y, [(xi_plus, c)])
            put(alpha_into(-c), y, [(xi_minus, -c)])
        # action of beta_{ay+1} on <y>: table (ii) with i = y
        if ay + 1 <= n - 1:
            eta_plus = 1 if ay + 1 in r_values else 0
            eta_minus = -1 if (ay == 1 and r == 0 and -2 not in r_values) else 0
            images = [(eta_plus, ay + 1), (eta_minus, -(ay + 1))]
            if ay == 1:
                put(beta_from(y), y, images)
            else:
                put(f"beta{ay + 1}", y, images)
    for y in v_minus:
        ay = abs(y)
        # action of alpha_{ay-1} on <y> (= <-(|i|+1)>): table (iii) with |i| = ay - 1
        if ay >= 2:
            i = -c if ay == 2 else -(ay - 1)
            xi_plus = 1 if (abs(i) <= r and ay in r_values) else 0
            xi_minus = 1 if -ay in r_values else 0
            if ay == 2:
                put(alpha_into(c), y, [(xi_plus, c)])
                put(alpha_into(-c), y, [(xi_minus, -c)])
            else:
                put(f"alpha{ay - 1}", y, [(xi_plus, -i), (xi_minus, i)])
        # action of beta_{ay+1} on <y>: table (iv) with i = y
        if ay + 1 <= n - 1:
            eta_plus = 1 if (ay <= r and ay + 1 not in r_values) else 0
            if ay == r:
                eta_minus = -1
            elif -(ay + 1) not in r_values:
                eta_minus = 1
            else:
                eta_minus = 0
            images = [(eta_plus, ay + 1), (eta_minus, -(ay + 1))]
            if ay == 1:
                put(beta_from(y), y, images)
            else:
                put(f"beta{ay + 1}", y, images)
    rep = rep_from_basis_action(quiver, vertex_of, action)
    rep.check_relations()
    return rep


def brick_rep(w: CoxeterElement) -> QuiverRepresentation:
    """The brick S(w) as an exact quiver representation."""
    if w.dynkin.family is Family.A:
        p = brick_params_a(w)
        return rep_from_params_a(w.dynkin, p.a, p.b, p.r_values)
    p = brick_params_d(w)
    return rep_from_params_d(w.dynkin, p.a, p.b, p.r_values)


def rep_nonzero_arrows(rep: QuiverRepresentation, vertex_of: dict) -> set[tuple[int, int]]:
    """Symbol pairs (s, t) with a nonzero matrix entry from <s> to <t>.

    Matches the abbreviation rule used by the diagrams; the basis inside the
    representation is sorted per vertex, mirroring `rep_from_basis_action`.
    """
    keys_at: dict[int, list] = {}
    for key in sorted(vertex_of):
        keys_at.setdefault(vertex_of[key], []).append(key)
    out = set()
    for arrow in rep.quiver.arrows:
        m = rep.mats[arrow.name]
        for col, s in enumerate(keys_at.get(arrow.tgt, [])):
            for row, t in enumerate(keys_at.get(arrow.src, [])):
                if m[row][col] != 0:
                    out.add((s, t))
    return out


# --- text rendering -------------------------------------------------------


def _abs_sorted(symbols: tuple[int, ...]) -> list[int]:
    return sorted(symbols, key=lambda s: (abs(s), s < 0))


def arrow_sort_key(edge: tuple[int, int]) -> tuple:
    s, t = edge
    return (abs(s), s < 0, abs(t), t < 0)


def render_diagram(diag: BrickDiagram) -> str:
    """One-line path rendering in type A; two symbol rows plus an arrow list
    in type D (upper row V-, lower row V+, each by increasing absolute value)."""
    if diag.dynkin.family is Family.A:
        symbols = sorted(diag.symbols)
        parts = [str(symbols[0])]
        for i in symbols[:-1]:
            parts.append("->" if (i, i + 1) in diag.arrows else "<-")
            parts.append(str(i + 1))
        return " ".join(parts)
    lines = []
    if diag.v_minus:
        lines.append("upper: " + " ".join(str(s) for s in _abs_sorted(diag.v_minus)))
    lines.append("lower: " + " ".join(str(s) for s in _abs_sorted(diag.v_plus)))
    arrows = sorted(diag.arrows, key=arrow_sort_key)
    lines.append("arrows: " + " ".join(f"{s}>{t}" for s, t in arrows))
    return "\n".join(lines)


def diagram_to_json(diag: BrickDiagram) -> dict:
    params: dict = {
        "a": diag.a,
        "b": diag.b,
        "r": diag.r,
        "c": diag.c,
        "R": sorted(diag.r_values),
    }
    return {
        "family": diag.dynkin.family.value,
        "rank": diag.dynkin.rank,
        "window": list(diag.window) if diag.window is not None else None,
        "type_l": diag.type_l,
        "params": params,
        "symbols": sorted(diag.v_plus) + sorted(diag.v_minus, reverse=True),
        "arrows": sorted([list(e) for e in diag.arrows]),
        "dim_vector": {str(v): d for v, d in diag.dim_vector().items()},
    }


def diagram_from_json(data: dict) -> BrickDiagram:
    dynkin = DynkinType(Family(data["family"]), data["rank"])
    r_values = frozenset(data["params"]["R"])
    window = tuple(data["window"]) if data["window"] is not None else None
    if dynkin.family is Family.A:
        a, b = data["params"]["a"], data["params"]["b"]
        return BrickDiagram(
            dynkin=dynkin,
            window=window,
            type_l=data["type_l"],
            a=a,
            b=b,
            r=None,
            c=None,
            r_values=r_values,
            v_plus=tuple(range(b, a)),
            v_minus=(),
            arrows=frozenset((s, t) for s, t in data["arrows"]),
        )
    return diagram_from_params_d(
        dynkin,
        data["params"]["a"],
        data["params"]["b"],
        r_values,
        window=window,
        type_l=data["type_l"],
    )
