"""Semibricks: one brick per descent, glued by the canonical join representation.

`semibrick` routes through the join-irreducible elements w_d of the canonical
join representation and applies the per-element brick construction to each;
`semibrick_direct` feeds the descent data (a_d, b_d, R_d) straight into the
parameter-level constructors, swapping (a, b) to (-b, -a) in case (A).  The
two routes must agree summand by summand, which the verification report and
the test-suite sweeps check.
"""

from __future__ import annotations

from dataclasses import dataclass

from coxbrick.bricks import (
    BrickDiagram,
    brick_diagram,
    brick_rep,
    diagram_from_params_a,
    diagram_from_params_d,
    rep_from_params_a,
    rep_from_params_d,
    render_diagram,
)
from coxbrick.canjoin import decompose
from coxbrick.coxeter import CoxeterElement, Family, descents
from coxbrick.homs import hom_dim, is_brick, is_positive_root
from coxbrick.quiver import QuiverRepresentation
from coxbrick.weak_order import GroupPoset


@dataclass(frozen=True)
class SemibrickSummand:
    d: int
    diagram: BrickDiagram
    rep: QuiverRepresentation


@dataclass(frozen=True)
class Semibrick:
    element: CoxeterElement
    summands: tuple[SemibrickSummand, ...]  # ordered by descent, -1 first


def semibrick(w: CoxeterElement) -> Semibrick:
    """S(w) via the canonical join representation: one brick per w_d."""
    summands = []
    for row in decompose(w):
        summands.append(
            SemibrickSummand(row.d, brick_diagram(row.element), brick_rep(row.element))
        )
    return Semibrick(w, tuple(summands))


def semibrick_direct(w: CoxeterElement) -> Semibrick:
    """S(w) from descent data alone, without building the elements w_d."""
    summands = []
    for row in decompose(w):
        if w.dynkin.family is Family.A:
            diag = diagram_from_params_a(w.dynkin, row.a, row.b, row.r_values)
            rep = rep_from_params_a(w.dynkin, row.a, row.b, row.r_values)
        else:
            a, b = (-row.b, -row.a) if row.case == "A" else (row.a, row.b)
            diag = diagram_from_params_d(w.dynkin, a, b, row.r_values)
            rep = rep_from_params_d(w.dynkin, a, b, row.r_values)
        summands.append(SemibrickSummand(row.d, diag, rep))
    return Semibrick(w, tuple(summands))


@dataclass
class SemibrickReport:
    """Outcome of the structural checks on one semibrick."""

    element: CoxeterElement
    brick_flags: dict[int, bool]
    positive_root_flags: dict[int, bool]
    hom_dims: dict[tuple[int, int], int]  # off-diagonal Hom dimensions
    summands_match_descents: bool
    join_window: tuple[int, ...] | None = None
    join_matches: bool | None = None

    @property
    def ok(self) -> bool:
        checks = [
            all(self.brick_flags.values()),
            all(self.positive_root_flags.values()),
            all(d == 0 for d in self.hom_dims.values()),
            self.summands_match_descents,
        ]
        if self.join_matches is not None:
            checks.append(self.join_matches)
        return all(checks)


def verify_semibrick(s: Semibrick, poset: GroupPoset | None = None) -> SemibrickReport:
    """Check brickness, Hom-orthogonality, positive roots, and (optionally)
    that the join of the canonical join representation recovers the element."""
    brick_flags = {sm.d: is_brick(sm.rep) for sm in s.summands}
    root_flags = {
        sm.d: is_positive_root(s.element.dynkin, sm.rep.dim_vector())
        for sm in s.summands
    }
    hom_dims = {}
    for x in s.summands:
        for y in s.summands:
            if x.d != y.d:
                hom_dims[(x.d, y.d)] = hom_dim(x.rep, y.rep)
    report = SemibrickReport(
        element=s.element,
        brick_flags=brick_flags,
        positive_root_flags=root_flags,
        hom_dims=hom_dims,
        summands_match_descents=len(s.summands) == len(descents(s.element)),
    )
    if poset is not None:
        joined = poset.join_all([row.element for row in decompose(s.element)])
        report.join_window = joined.window
        report.join_matches = joined == s.element
    return report


def render_semibrick(s: Semibrick) -> str:
    """Stacked per-descent diagrams; type-D rows are flattened onto one line."""
    lines = []
    for sm in s.summands:
        body = render_diagram(sm.diagram)
        if "\n" in body:
            body = " | ".join(part for part in body.split("\n"))
        lines.append(f"S_{sm.d}: {body}")
    return "\n".join(lines)


def semibrick_to_json(s: Semibrick) -> dict:
    from coxbrick.bricks import diagram_to_json

    return {
        "window": list(s.element.window),
        "summands": [
            {"d": sm.d, "brick": diagram_to_json(sm.diagram)} for sm in s.summands
        ],
    }
