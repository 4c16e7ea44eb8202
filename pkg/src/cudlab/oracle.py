"""Brute-force enumeration of the permutation families and exhaustive
verification of every counting claim, series identity, distribution formula,
and bijection property at desk scale.

Enumeration is deliberately dumb: filter all of S_n, in lexicographic order.
Up-down words (and cycle-up-down permutations) additionally have direct
backtracking constructions, and the two routes are compared rather than
trusted.  ``verify_all`` returns a machine-readable report; any failing row
is a bug somewhere, by design with no tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from . import bijections, matchings
from .catalog import (
    CapExceeded,
    catalog_series,
    exc_polynomial,
    expected_ud_cycles,
    no_ud_cycles_count,
    no_ud_fraction_formula,
    secant_cf_convergent,
)
from .perms import (
    CycleDecomposition,
    Family,
    Permutation,
    from_cycles,
    is_member,
)
from .series import (
    MPoly,
    euler_numbers,
    geometric_series,
    sec_series,
    stirling_c,
    tan_series,
    zigzag_egf_series,
)
from .statistics import MAX, MIN, MinMaxPattern, m_s, stats

WORD_FAMILIES = (Family.UD, Family.DOWNUP, Family.UD_LAST_GT_FIRST)

DEFAULT_CAPS = {family: 11 if family in WORD_FAMILIES else 9 for family in Family}

VERIFY_CAP = 9


@dataclass
class DistributionTable:
    """Joint distribution of statistics over one family at one size."""

    family: Family
    n: int
    stats: tuple[str, ...]
    rows: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.rows.values())

    def to_poly(self, markers: Sequence[str]) -> MPoly:
        """Encode the table as sum count * prod marker^value."""
        if len(markers) != len(self.stats):
            raise ValueError("one marker per statistic required")
        total = MPoly.zero()
        for values, count in self.rows.items():
            mono = MPoly.constant(count)
            for name, value in zip(markers, values):
                mono = mono * MPoly.marker(name) ** value
            total = total + mono
        return total


def _check_cap(family: Family, n: int, cap: int | None) -> None:
    limit = cap if cap is not None else DEFAULT_CAPS[family]
    if n > limit:
        raise CapExceeded(
            f"n={n} exceeds the enumeration cap {limit} for {family.value}"
        )
    if n < 0:
        raise ValueError("n must be nonnegative")


def enumerate_family(
    family: Family, n: int, cap: int | None = None
) -> Iterator[Permutation]:
    """Every member of the family in S_n exactly once, in lexicographic
    order of one-line notation."""
    _check_cap(family, n, cap)
    if family in WORD_FAMILIES:
        down_up = family is Family.DOWNUP
        for word in _alternating_words(tuple(range(1, n + 1)), down_up=down_up):
            if family is Family.UD_LAST_GT_FIRST and (
                len(word) < 2 or word[-1] <= word[0]
            ):
                continue
            yield Permutation(word)
        return
    for word in itertools.permutations(range(1, n + 1)):
        p = Permutation(word)
        if is_member(p, family):
            yield p


def count_family(family: Family, n: int, cap: int | None = None) -> int:
    return sum(1 for _ in enumerate_family(family, n, cap))


def _alternating_words(
    values: tuple[int, ...], down_up: bool = False
) -> Iterator[tuple[int, ...]]:
    """Backtracking generator of alternating words over the given values, in
    lexicographic order."""

    def extend(word: list[int], remaining: list[int]) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield tuple(word)
            return
        i = len(word)
        # appending position i compares w_{i-1} with w_i; up-down words rise
        # on odd i (0-based)
        want_up = (i % 2 == 1) != down_up
        for idx, x in enumerate(remaining):
            if word and (word[-1] < x) != want_up:
                continue
            word.append(x)
            yield from extend(word, remaining[:idx] + remaining[idx + 1 :])
            word.pop()

    yield from extend([], sorted(values))


def iter_ud_by_filter(n: int) -> Iterator[Permutation]:
    """Second route to UD_n, for cross-checking the backtracker."""
    for word in itertools.permutations(range(1, n + 1)):
        p = Permutation(word)
        if is_member(p, Family.UD):
            yield p


def iter_cud_direct(n: int) -> Iterator[Permutation]:
    """Second route to CUD_n: pick the cycle of the smallest remaining
    element directly as (min, then a down-up word of a subset)."""

    def build(remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if not remaining:
            yield ()
            return
        head, rest = remaining[0], remaining[1:]
        for size in range(len(rest) + 1):
            for subset in itertools.combinations(rest, size):
                left = tuple(x for x in rest if x not in subset)
                for tail_word in _alternating_words(subset, down_up=True):
                    for more in build(left):
                        yield ((head,) + tail_word,) + more

    for cycles in build(tuple(range(1, n + 1))):
        yield from_cycles(CycleDecomposition.from_raw(cycles))


def distribution(
    family: Family, n: int, stat_names: Sequence[str], cap: int | None = None
) -> DistributionTable:
    """Exact joint distribution of the named statistics."""
    rows: dict[tuple[int, ...], int] = {}
    for p in enumerate_family(family, n, cap):
        sv = stats(p)
        key = tuple(getattr(sv, name) for name in stat_names)
        rows[key] = rows.get(key, 0) + 1
    return DistributionTable(family, n, tuple(stat_names), rows)


def distribution_csv(table: DistributionTable) -> str:
    """CSV text: statistic columns then the count, rows sorted."""
    lines = [",".join(table.stats + ("count",))]
    for values in sorted(table.rows):
        lines.append(",".join(str(v) for v in values + (table.rows[values],)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# the verification suite


class _Report:
    def __init__(self) -> None:
        self.entries: list[dict] = []

    def add(self, check: str, n, expected, actual) -> None:
        self.entries.append(
            {
                "check": check,
                "n": n,
                "expected": _plain(expected),
                "actual": _plain(actual),
                "pass": expected == actual,
            }
        )


def _plain(value):
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


def report_passed(report: list[dict]) -> bool:
    return all(entry["pass"] for entry in report)


def verify_all(n_cap: int = 7, euler_fn=euler_numbers) -> list[dict]:
    """Run every check against the brute-force oracle up to size ``n_cap``
    and return one pass/fail entry per (check, n).

    ``euler_fn`` exists for fault injection in tests; the default is the
    boustrophedon recurrence.
    """
    if n_cap > VERIFY_CAP:
        raise CapExceeded(f"verification cap is {VERIFY_CAP}, got {n_cap}")
    if n_cap < 1:
        raise ValueError("n_cap must be at least 1")
    rep = _Report()
    eul = euler_fn(max(21, 2 * n_cap + 8))
    order = max(20, n_cap + 2)

    _verify_counts(rep, n_cap, eul)
    _verify_series_identities(rep, eul, order)
    _verify_specializations(rep, order)
    _verify_distributions(rep, n_cap, eul)
    _verify_bijections(rep, n_cap)
    _verify_matchings(rep, n_cap, eul)
    _verify_expectations(rep, n_cap, eul)
    return rep.entries


def _verify_counts(rep: _Report, n_cap: int, eul: list[int]) -> None:
    series_of = {
        seq_id: catalog_series(seq_id, n_cap)
        for seq_id in (
            "gcud",
            "gcud-even-only",
            "gcud-even-cyclic",
            "gcud-odd-only",
            "cud-derangements",
            "exc-def-swap",
            "k-euler-odd",
            "cud",
            "cud-cyclic",
        )
    }
    for n in range(n_cap + 1):
        rep.add("ud-count", n, eul[n], count_family(Family.UD, n))
        rep.add("downup-count", n, eul[n], count_family(Family.DOWNUP, n))
        rep.add("cud-count", n, eul[n + 1], count_family(Family.CUD, n))
        rep.add(
            "cud-count-series", n, series_of["cud"].egf_int(n), count_family(Family.CUD, n)
        )
        rep.add(
            "cud-odd-only-count", n, eul[n], count_family(Family.CUD_ODD_ONLY, n)
        )
        if n % 2 == 0:
            rep.add(
                "cud-even-only-count", n, eul[n], count_family(Family.CUD_EVEN_ONLY, n)
            )
        if n >= 1:
            rep.add(
                "cud-cyclic-count", n, eul[n - 1], count_family(Family.CUD_CYCLIC, n)
            )
            rep.add(
                "cud-derangement-count",
                n,
                series_of["cud-derangements"].egf_int(n),
                count_family(Family.CUD_DERANGEMENT, n),
            )
            rep.add(
                "gcud-count", n, series_of["gcud"].egf_int(n), count_family(Family.GCUD, n)
            )
            rep.add(
                "gcud-even-only-count",
                n,
                series_of["gcud-even-only"].egf_int(n),
                count_family(Family.GCUD_EVEN_ONLY, n),
            )
            rep.add(
                "gcud-odd-only-count",
                n,
                series_of["gcud-odd-only"].egf_int(n),
                count_family(Family.GCUD_ODD_ONLY, n),
            )
            # odd generalized up-down cycles have a unique up-down
            # representation, so odd cyclic counts are E_n (EGF tan z)
            rep.add(
                "gcud-cyclic-count",
                n,
                series_of["gcud-even-cyclic"].egf_int(n) + (eul[n] if n % 2 else 0),
                count_family(Family.GCUD_CYCLIC, n),
            )
        rep.add(
            "exc-def-swap-count",
            n,
            series_of["exc-def-swap"].egf_int(n),
            count_family(Family.EXC_DEF_SWAP, n),
        )
        if n >= 2 and n % 2 == 0:
            k = n // 2
            rep.add(
                "ud-last-gt-first-count",
                n,
                k * eul[n - 1],
                count_family(Family.UD_LAST_GT_FIRST, n),
            )
            rep.add(
                "ud-last-gt-first-series",
                n,
                series_of["k-euler-odd"].egf_int(n),
                count_family(Family.UD_LAST_GT_FIRST, n),
            )
            rep.add(
                "gcud-even-cyclic-lemma",
                n,
                eul[n] - (k - 1) * eul[n - 1],
                series_of["gcud-even-cyclic"].egf_int(n),
            )
    for n in range(min(n_cap, 8) + 1):
        rep.add(
            "ud-dual-generation",
            n,
            [p.word for p in iter_ud_by_filter(n)],
            [p.word for p in enumerate_family(Family.UD, n)],
        )
        rep.add(
            "cud-dual-generation",
            n,
            sorted(p.word for p in enumerate_family(Family.CUD, n)),
            sorted(p.word for p in iter_cud_direct(n)),
        )


def _verify_series_identities(rep: _Report, eul: list[int], order: int) -> None:
    egf = zigzag_egf_series(order + 2)
    e_prime = egf.differentiate()
    e_second = e_prime.differentiate()
    rep.add(
        "id-exp-int-zigzag",
        order,
        e_prime.truncate(order),
        egf.truncate(order - 1).integrate().exp(),
    )
    rep.add(
        "id-exp-int-tan",
        order,
        sec_series(order),
        tan_series(order - 1).integrate().exp(),
    )
    rep.add(
        "id-exp-int-sec",
        order,
        egf.truncate(order),
        sec_series(order - 1).integrate().exp(),
    )
    rep.add(
        "id-second-derivative",
        order,
        e_second.truncate(order),
        (egf.truncate(order) * e_prime.truncate(order)),
    )
    rep.add(
        "id-derivative-product",
        order,
        e_prime.truncate(order),
        egf.truncate(order) * sec_series(order),
    )
    rep.add(
        "euler-boustrophedon-vs-series",
        order,
        eul[: order + 1],
        [egf.egf_int(n) for n in range(order + 1)],
    )
    rep.add(
        "stirling-row-sums",
        order,
        [factorial(n) for n in range(13)],
        [sum(stirling_c(n, k) for k in range(n + 1)) for n in range(13)],
    )
    for depth in range(1, 11):
        rep.add(
            "cf-convergent",
            depth,
            [eul[2 * m] for m in range(depth + 1)],
            list(secant_cf_convergent(depth, depth).coeffs),
        )


def _verify_specializations(rep: _Report, order: int) -> None:
    order = min(order, 14)  # multivariate series get bulky beyond this
    pairs = [
        ("spec-cud-fp-cycles", "cud-fp-cycles", {"x": 1, "t": 1}, "cud"),
        ("spec-gcud-fp-cycles", "gcud-fp-cycles", {"x": 1, "t": 1}, "gcud"),
        ("spec-ud-st", "ud-st", {"t": 1}, "euler"),
    ]
    for name, marked, assign, plain in pairs:
        rep.add(
            name,
            order,
            catalog_series(plain, order),
            catalog_series(marked, order).substitute(assign).constants(),
        )
    rep.add(
        "spec-cud-odd-even",
        order,
        catalog_series("cud-cycles", order),
        catalog_series("cud-odd-even", order).substitute(
            {"t_o": MPoly.marker("t"), "t_e": MPoly.marker("t")}
        ),
    )
    rep.add(
        "spec-perm-ud-nud",
        order,
        geometric_series(order),
        catalog_series("perm-ud-nud", order).substitute({"v": 1, "w": 1}).constants(),
    )


_MARKED_TABLES = (
    # check name, sequence id, family, statistics, markers, first n
    ("dist-cud-cycles", "cud-cycles", Family.CUD, ("c",), ("t",), 0),
    ("dist-cud-fp-cycles", "cud-fp-cycles", Family.CUD, ("fp", "c"), ("x", "t"), 0),
    ("dist-cud-odd-even", "cud-odd-even", Family.CUD, ("c_o", "c_e"), ("t_o", "t_e"), 0),
    ("dist-gcud-fp-cycles", "gcud-fp-cycles", Family.GCUD, ("fp", "c"), ("x", "t"), 0),
    ("dist-perm-ud-nud", "perm-ud-nud", Family.ALL, ("ud", "nud"), ("v", "w"), 0),
    ("dist-ud-st", "ud-st", Family.UD, ("st",), ("t",), 0),
    ("dist-ud-lrm", "ud-lrm", Family.UD, ("lrm",), ("t",), 1),
    ("dist-ud-extr", "ud-extr", Family.UD, ("extr",), ("t",), 1),
)


def _verify_distributions(rep: _Report, n_cap: int, eul: list[int]) -> None:
    for name, seq_id, family, stat_names, markers, start in _MARKED_TABLES:
        series = catalog_series(seq_id, n_cap)
        for n in range(start, n_cap + 1):
            table = distribution(family, n, stat_names)
            rep.add(
                name,
                n,
                series.egf_term(n),
                table.to_poly(markers),
            )
    patterns = (
        MinMaxPattern.alternating(),
        MinMaxPattern.repeat(MIN),
        MinMaxPattern((), (MAX, MIN)),
    )
    for n in range(1, n_cap + 1):
        stirling_row = {k: stirling_c(n, k) for k in range(1, n + 1) if stirling_c(n, k)}
        for stat in ("st", "lrm", "c"):
            table = distribution(Family.ALL, n, (stat,))
            rep.add(
                f"dist-{stat}-stirling",
                n,
                stirling_row,
                {k: v for (k,), v in sorted(table.rows.items())},
            )
        for pattern in patterns:
            counts: dict[int, int] = {}
            for p in enumerate_family(Family.ALL, n):
                k = m_s(p, pattern)
                counts[k] = counts.get(k, 0) + 1
            rep.add(f"dist-ms-stirling[{pattern}]", n, stirling_row, dict(sorted(counts.items())))
        extr_expected = {
            k: (2**k) * stirling_c(n - 1, k)
            for k in range(1, n)
            if stirling_c(n - 1, k)
        }
        table = distribution(Family.ALL, n, ("extr",))
        rep.add(
            "dist-extr-stirling",
            n,
            extr_expected,
            {k: v for (k,), v in sorted(table.rows.items()) if k > 0},
        )
        rep.add(
            "dist-extr-zero",
            n,
            0 if n > 1 else 1,
            sum(v for (k,), v in table.rows.items() if k == 0),
        )
    for n in range(n_cap + 1):
        cud = list(enumerate_family(Family.CUD, n))
        rep.add(
            "exc-parity-relation",
            n,
            [n] * len(cud),
            [stats(p).c_o + 2 * stats(p).exc for p in cud],
        )
        exc_counts: dict[int, int] = {}
        for p in cud:
            e = stats(p).exc
            exc_counts[e] = exc_counts.get(e, 0) + 1
        poly = exc_polynomial(n)
        rep.add(
            "exc-poly-vs-oracle",
            n,
            {dict(mono).get("t", 0): int(c) for mono, c in poly.items()},
            exc_counts,
        )
        rep.add(
            "exc-poly-total",
            n,
            eul[n + 1],
            int(poly.substitute({"t": 1}).constant_value()),
        )


def _verify_bijections(rep: _Report, n_cap: int) -> None:
    for n in range(n_cap + 1):
        ud_words = list(enumerate_family(Family.UD, n))
        if n % 2 == 0:
            images = []
            ok_stats = True
            for p in ud_words:
                c = bijections.g_even(p)
                images.append(c)
                ok_stats = ok_stats and len(c) == stats(p).lrm
                ok_stats = ok_stats and bijections.g_even_inverse(c) == p
            even_only = {q.word for q in enumerate_family(Family.CUD_EVEN_ONLY, n)}
            rep.add("bij-g-roundtrip", n, True, ok_stats)
            rep.add(
                "bij-g-image",
                n,
                sorted(even_only),
                sorted(from_cycles(c).word for c in images),
            )
        images = []
        ok = True
        for p in ud_words:
            c = bijections.f_odd(p)
            images.append(c)
            ok = ok and len(c) == stats(p).st
            ok = ok and bijections.f_odd_inverse(c) == p
        odd_only = {q.word for q in enumerate_family(Family.CUD_ODD_ONLY, n)}
        rep.add("bij-f-roundtrip", n, True, ok)
        rep.add(
            "bij-f-image", n, sorted(odd_only), sorted(from_cycles(c).word for c in images)
        )
    for n in range(n_cap + 1):
        ud_next = list(enumerate_family(Family.UD, n + 1))
        cud_words = sorted(q.word for q in enumerate_family(Family.CUD, n))
        phi_images = []
        jbij_images = []
        ok_phi = ok_phi_stats = ok_jbij = ok_jbij_stats = True
        for p in ud_next:
            sv = stats(p)
            c = bijections.phi(p)
            phi_images.append(c)
            sc = stats(from_cycles(c))
            ok_phi_stats = ok_phi_stats and (
                sc.c_e == sv.lrm - 1 and sc.c_o == sv.st - 1 and sc.c == sv.lrm + sv.st - 2
            )
            ok_phi = ok_phi and bijections.phi_inverse(c) == p
            c2 = bijections.jbij(p)
            jbij_images.append(c2)
            ok_jbij_stats = ok_jbij_stats and len(c2) == sv.extr
            ok_jbij = ok_jbij and bijections.jbij_inverse(c2) == p
        rep.add("bij-phi-roundtrip", n, True, ok_phi)
        rep.add("bij-phi-stats", n, True, ok_phi_stats)
        rep.add(
            "bij-phi-image", n, cud_words, sorted(from_cycles(c).word for c in phi_images)
        )
        rep.add("bij-jbij-roundtrip", n, True, ok_jbij)
        rep.add("bij-jbij-stat", n, True, ok_jbij_stats)
        rep.add(
            "bij-jbij-image", n, cud_words, sorted(from_cycles(c).word for c in jbij_images)
        )
    for n in range(1, n_cap + 1):
        ud_words = list(enumerate_family(Family.UD, n))
        rep.add(
            "equidist-extr-vs-lrm-st",
            n,
            sorted(stats(p).extr for p in ud_words),
            sorted(stats(p).lrm + stats(p).st - 2 for p in ud_words),
        )
    for n in range(2, n_cap + 1, 2):
        k = n // 2
        starts_low = [p for p in enumerate_family(Family.UD, n) if p.word[0] == 1]
        produced = set()
        ok = True
        for p in starts_low:
            for i in range(1, k + 1):
                q = bijections.rotate_ud(p, i)
                ok = ok and is_member(q, Family.UD_LAST_GT_FIRST)
                produced.add(q.word)
        expected = sorted(q.word for q in enumerate_family(Family.UD_LAST_GT_FIRST, n))
        rep.add("rotation-bijection", n, expected, sorted(produced))
        rep.add("rotation-count", n, k * len(starts_low), len(produced))
    patterns = (
        MinMaxPattern.alternating(),
        MinMaxPattern.repeat(MIN),
        MinMaxPattern((), (MAX, MIN)),
    )
    for n in range(1, min(n_cap, 6) + 1):
        perms = list(enumerate_family(Family.ALL, n))
        for pattern in patterns:
            images = {bijections.h_map(p, pattern).word for p in perms}
            ok = all(
                stats(bijections.h_map(p, pattern)).lrm == m_s(p, pattern)
                for p in perms
            )
            rep.add(f"bij-h-transport[{pattern}]", n, True, ok)
            rep.add(f"bij-h-bijective[{pattern}]", n, factorial(n), len(images))
    for n in range(1, min(n_cap, 6) + 1):
        produced = set()
        ok = True
        for p in enumerate_family(Family.ALL, n):
            k = stats(p).lrm
            for bits in itertools.product((0, 1), repeat=k):
                q = bijections.ell_map(p, bits)
                produced.add(q.word)
                ok = ok and stats(q).extr == k
                ok = ok and bijections.ell_inverse(q) == (p, bits)
        rep.add("bij-ell-roundtrip", n, True, ok)
        rep.add("bij-ell-image", n, factorial(n + 1), len(produced))


def _verify_matchings(rep: _Report, n_cap: int, eul: list[int]) -> None:
    for n in range(2, n_cap + 1, 2):
        members = list(enumerate_family(Family.CUD_EVEN_ONLY, n))
        pairs = set()
        ok = True
        for p in members:
            mp = matchings.to_matching_pair(p)
            pairs.add((mp.red, mp.blue))
            ok = ok and matchings.from_matching_pair(mp) == p
        rep.add("matching-roundtrip", n, True, ok)
        rep.add("matching-count", n, eul[n], len(pairs))


def _verify_expectations(rep: _Report, n_cap: int, eul: list[int]) -> None:
    avg = catalog_series("avg-ud-cycles", 12)
    for n in range(1, 13):
        rep.add(
            "expected-ud-series", n, expected_ud_cycles(n), avg.coefficient(n)
        )
        rep.add(
            "r-count-formula",
            n,
            no_ud_fraction_formula(n) * factorial(n),
            no_ud_cycles_count(n),
        )
    for n in range(1, n_cap + 1):
        total = 0
        no_ud = 0
        for p in enumerate_family(Family.ALL, n):
            u = stats(p).ud
            total += u
            no_ud += u == 0
        rep.add(
            "expected-ud-vs-oracle",
            n,
            expected_ud_cycles(n),
            Fraction(total, factorial(n)),
        )
        rep.add("r-count-oracle", n, no_ud_cycles_count(n), no_ud)
