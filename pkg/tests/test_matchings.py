from pathlib import Path

import pytest

from cudlab.matchings import (
    MatchingPair,
    arc_diagram_svg,
    from_matching_pair,
    matching_pair_text,
    render_arc_diagram,
    to_matching_pair,
)
from cudlab.oracle import enumerate_family
from cudlab.perms import DomainError, Family, from_cycles, parse_cycles
from cudlab.series import euler_numbers

GOLDEN = Path(__file__).parent / "golden"

FIG_PERM = "(1,4,2,6,3,7)(5,8)"


class TestConversion:
    def test_worked_example(self):
        mp = to_matching_pair(from_cycles(parse_cycles(FIG_PERM)))
        assert mp.red == ((1, 4), (2, 6), (3, 7), (5, 8))
        assert mp.blue == ((1, 7), (2, 4), (3, 6), (5, 8))

    def test_text_form(self):
        mp = to_matching_pair(from_cycles(parse_cycles(FIG_PERM)))
        assert matching_pair_text(mp) == "red: 1-4 2-6 3-7 5-8 / blue: 1-7 2-4 3-6 5-8"

    def test_single_arc(self):
        mp = to_matching_pair(from_cycles(parse_cycles("(1,2)")))
        assert mp.red == ((1, 2),) and mp.blue == ((1, 2),)
        assert from_matching_pair(mp) == from_cycles(parse_cycles("(1,2)"))

    def test_inverse_of_worked_example(self):
        mp = MatchingPair.from_arcs(
            8, [(1, 4), (2, 6), (3, 7), (5, 8)], [(1, 7), (2, 4), (3, 6), (5, 8)]
        )
        assert from_matching_pair(mp) == from_cycles(parse_cycles(FIG_PERM))

    def test_roundtrip_and_counts(self):
        E = euler_numbers(8)
        for n in (2, 4, 6, 8):
            pairs = set()
            for p in enumerate_family(Family.CUD_EVEN_ONLY, n):
                mp = to_matching_pair(p)
                assert from_matching_pair(mp) == p
                pairs.add((mp.red, mp.blue))
            assert len(pairs) == E[n]

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            to_matching_pair(from_cycles(parse_cycles("(1,2)(3)")))  # fixed point
        with pytest.raises(DomainError):
            to_matching_pair(from_cycles(parse_cycles("(1,3,2)")))  # odd cycle
        with pytest.raises(DomainError):
            to_matching_pair(from_cycles(parse_cycles("(1,2,3,4)")))  # not alternating

    def test_invalid_pairs_rejected(self):
        with pytest.raises(DomainError):
            MatchingPair.from_arcs(4, [(1, 2), (3, 4)], [(1, 3), (2, 4)])  # openers differ
        with pytest.raises(DomainError):
            MatchingPair.from_arcs(4, [(1, 2)], [(1, 2)])  # not perfect
        with pytest.raises(DomainError):
            MatchingPair.from_arcs(3, [(1, 2)], [(1, 2)])  # odd vertex count


class TestSvg:
    def test_golden(self):
        svg = arc_diagram_svg(from_cycles(parse_cycles(FIG_PERM)))
        assert svg == (GOLDEN / "example_arc_diagram.svg").read_text(encoding="ascii")

    def test_deterministic(self):
        p = from_cycles(parse_cycles(FIG_PERM))
        assert arc_diagram_svg(p) == arc_diagram_svg(p)

    def test_arc_counts(self):
        svg = arc_diagram_svg(from_cycles(parse_cycles(FIG_PERM)))
        assert svg.count("#cc0000") == 4
        assert svg.count("#0044cc") == 4

    def test_tiny_diagram(self):
        svg = arc_diagram_svg(from_cycles(parse_cycles("(1,2)")))
        assert svg.count("<path") == 2

    def test_render_to_file(self, tmp_path):
        out = tmp_path / "diagram.svg"
        render_arc_diagram(from_cycles(parse_cycles(FIG_PERM)), out)
        assert out.read_text(encoding="ascii") == arc_diagram_svg(
            from_cycles(parse_cycles(FIG_PERM))
        )
