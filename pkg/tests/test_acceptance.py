"""Acceptance suite: the headline checks, one test per criterion.

Each test prints a PASS line with its measured numbers (visible under
``pytest -s``); any failure carries the counterexample in the assert message.
"""

import pytest

from coxbrick.canjoin import cjr_direct
from coxbrick.census import census, census_diff, global_count, parse_census_line
from coxbrick.cli import default_fixture_lines, main
from coxbrick.coxeter import (
    DynkinType,
    Family,
    descents,
    enumerate_group,
    join_irreducible_type,
    parse_window,
)
from coxbrick.grids import UnsupportedCaseError, j_module, kernel_socle
from coxbrick.homs import hom_dim, is_positive_root, iso_bricks, socle_over_end
from coxbrick.semibricks import semibrick_direct
from coxbrick.weak_order import GroupPoset


def test_counting_formulas_match_enumeration():
    checked = []
    for family, ranks, formula in [
        (Family.A, range(2, 8), lambda n: 2 ** (n + 1) - n - 2),
        (Family.D, range(4, 7), lambda n: 3**n - n * 2 ** (n - 1) - n - 1),
    ]:
        for n in ranks:
            dynkin = DynkinType(family, n)
            group = enumerate_group(dynkin)
            count = sum(1 for w in group if len(descents(w)) == 1)
            assert count == formula(n) == global_count(dynkin), dynkin
            checked.append(f"{dynkin}:{count}")
    assert "A7:247" in checked and "D5:157" in checked and "D6:530" in checked
    print("\nPASS counting formulas: " + " ".join(checked))


def test_rank5_census_reproduces_reference_list():
    groups = census(DynkinType(Family.D, 5))
    fixture = default_fixture_lines()
    problems = census_diff(groups, fixture)
    assert problems == [], problems[:5]

    sizes = {str(shape): len(entries) for shape, entries in groups.items()}
    assert sizes["2,-5,0"] == 4
    assert sizes["5,-4,3"] == 8
    assert sizes["5,1,0"] == 8
    total = sum(sizes.values())
    assert total == 157

    fixture_shapes = {parse_census_line(line)["sigma"] for line in fixture}
    assert len(groups) == len(fixture_shapes)

    # spot-check at least 20 entries directly against the parsed fixture
    parsed = [parse_census_line(line) for line in fixture]
    by_window = {
        w.window: diag for entries in groups.values() for w, diag in entries
    }
    for rec in parsed[::7][:22]:
        diag = by_window[rec["window"]]
        assert frozenset(diag.symbols) == rec["symbols"], rec["window"]
        assert frozenset(diag.arrows) == rec["arrows"], rec["window"]
    print(
        f"\nPASS rank-5 census: {total} entries in {len(groups)} shape groups "
        "match the reference list entry-by-entry"
    )


def test_socle_oracle_equivalence():
    from coxbrick.bricks import brick_rep

    totals = []
    for family, ranks in [(Family.A, range(2, 6)), (Family.D, range(4, 6))]:
        for n in ranks:
            dynkin = DynkinType(family, n)
            count = kernel_count = 0
            for w in enumerate_group(dynkin):
                if join_irreducible_type(w) is None:
                    continue
                module = j_module(w)
                socle = socle_over_end(module)
                assert iso_bricks(brick_rep(w), socle), w
                count += 1
                try:
                    kernel = kernel_socle(w)
                except UnsupportedCaseError:
                    continue
                assert kernel.dims == socle.dims, w
                assert kernel.mats == socle.mats, w
                kernel_count += 1
            totals.append(f"{dynkin}:{count}(kernel:{kernel_count})")
    print("\nPASS socle oracle equivalence: " + " ".join(totals))


def test_canonical_join_representations():
    for family, n in [(Family.A, 4), (Family.D, 4)]:
        dynkin = DynkinType(family, n)
        poset = GroupPoset.build(dynkin)
        for w in poset.elements:
            assert cjr_direct(w) == poset.cjr_oracle(w), w
    a3 = GroupPoset.build(DynkinType(Family.A, 3))
    for w in a3.elements:
        assert a3.verify_cjr_definition(w, cjr_direct(w)), w
    print(
        "\nPASS canonical join representations: direct formulas match the "
        "oracle on A4 (120) and D4 (192); definition verified on all of A3"
    )


def _cli_lines(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    assert code == 0, argv
    return out


def test_worked_examples_byte_for_byte(capsys):
    out = _cli_lines(
        capsys, "brick", "--type", "A", "--rank", "8", "--window", "2,5,8,1,3,4,6,7,9"
    )
    assert out == "1 <- 2 -> 3 -> 4 <- 5 -> 6 -> 7\n"

    out = _cli_lines(
        capsys, "brick", "--type", "D", "--rank", "9", "--window", "9,-7,-6,-4,-1,2,3,5,8"
    )
    assert out == (
        "upper: 1 -2 -3 -4 -5 -6\n"
        "lower: -1 2 3 4 5 6 7 8\n"
        "arrows: 1>-2 -1>2 2>3 -2>-1 -2>-3 -3>2 -3>4 4>3 4>5 -4>-3 -4>-5 "
        "-5>4 -5>6 6>5 -6>-5 -6>7 7>6 7>8\n"
    )

    out = _cli_lines(
        capsys, "brick", "--type", "D", "--rank", "9", "--window", "-6,9,-7,-4,-1,2,3,5,8"
    )
    assert out == (
        "upper: 1 -2 -3 -4 -5 -6\n"
        "lower: -1 2 3 4 5 6 7 8\n"
        "arrows: 1>-2 -1>2 2>3 -2>-1 -2>-3 -3>2 -3>4 4>3 4>5 -4>-3 -4>-5 "
        "-5>4 -5>6 -5>-6 6>5 7>6 7>8\n"
    )

    out = _cli_lines(
        capsys, "decompose", "--type", "A", "--rank", "8", "--window", "4,9,3,6,2,8,5,1,7"
    )
    assert out == (
        "d=2 a=9 b=3 R={3,5,6,7,8} w=1,2,4,9,3,5,6,7,8\n"
        "d=4 a=6 b=2 R={2,5,7,8,9} w=1,3,4,6,2,5,7,8,9\n"
        "d=6 a=8 b=5 R={5,7,9} w=1,2,3,4,6,8,5,7,9\n"
        "d=7 a=5 b=1 R={1,6,7,8,9} w=2,3,4,5,1,6,7,8,9\n"
    )

    out = _cli_lines(
        capsys, "semibrick", "--type", "A", "--rank", "8", "--window", "4,9,3,6,2,8,5,1,7"
    )
    assert out == (
        "S_2: 3 <- 4 -> 5 -> 6 -> 7 -> 8\n"
        "S_4: 2 <- 3 <- 4 -> 5\n"
        "S_6: 5 <- 6 -> 7\n"
        "S_7: 1 <- 2 <- 3 <- 4\n"
    )

    out = _cli_lines(
        capsys,
        "decompose",
        "--type",
        "D",
        "--rank",
        "9",
        "--window",
        "5,3,-7,4,-6,-8,9,-1,2",
    )
    assert out == (
        "d=1 a=5 b=3 case=B R={3,4,6,7,8,9} w=1,2,5,3,4,6,7,8,9\n"
        "d=2 a=3 b=-7 case=A R={-3,-1,2,4,5,8,9} w=6,7,-3,-1,2,4,5,8,9\n"
        "d=4 a=4 b=-6 case=B R={-6,-1,2,5,7,8,9} w=3,4,-6,-1,2,5,7,8,9\n"
        "d=5 a=-6 b=-8 case=A R={6,7,9} w=1,2,3,4,5,8,6,7,9\n"
        "d=7 a=9 b=-1 case=B R={-1,2} w=-3,4,5,6,7,8,9,-1,2\n"
    )

    out = _cli_lines(
        capsys, "decompose", "--type", "A", "--rank", "3", "--window", "4,3,1,2"
    )
    assert out == "d=1 a=4 b=3 R={3} w=1,2,4,3\nd=2 a=3 b=1 R={1,2,4} w=3,1,2,4\n"
    a3 = DynkinType(Family.A, 3)
    poset = GroupPoset.build(a3)
    joined = poset.join(parse_window(a3, "1,2,4,3"), parse_window(a3, "3,1,2,4"))
    assert joined == parse_window(a3, "4,3,1,2")
    print("\nPASS worked examples: all six reference displays reproduced byte-for-byte")


@pytest.mark.parametrize(
    "dynkin",
    [DynkinType(Family.A, 5), DynkinType(Family.D, 5)],
    ids=str,
)
def test_structural_properties_full_sweep(dynkin):
    elements = enumerate_group(dynkin)
    for w in elements:
        s = semibrick_direct(w)
        assert len(s.summands) == len(descents(w)), w
        for sm in s.summands:
            sm.rep.check_relations()
            assert hom_dim(sm.rep, sm.rep) == 1, (w, sm.d)
            assert is_positive_root(dynkin, sm.rep.dim_vector()), (w, sm.d)
        for x in s.summands:
            for y in s.summands:
                if x.d != y.d:
                    assert hom_dim(x.rep, y.rep) == 0, (w, x.d, y.d)
    print(
        f"\nPASS structural properties: exhaustive over {dynkin} "
        f"({len(elements)} elements)"
    )


def test_e_type_counts_are_cited_not_reproduced():
    # E6/E7/E8 are outside this package: no Dynkin family beyond A and D exists.
    assert {f.value for f in Family} == {"A", "D"}
    print("\nPASS scope guard: no E-type construction is present or attempted")
