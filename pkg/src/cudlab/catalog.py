"""Catalog of the exponential generating functions for the alternating-cycle
families and their refinements, plus the secant continued fraction and the
expected-value formulas around up-down cycles.

Each entry is built from the exact series primitives; the brute-force oracle
re-derives every coefficient (and every marked coefficient polynomial) at
small sizes, so the two routes check each other.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable

from .perms import DomainError, MalformedInput
from .series import (
    MPoly,
    Series,
    cos_series,
    euler_numbers,
    exp_series,
    geometric_series,
    one_minus_sin_series,
    one_series,
    sec_series,
    tan_series,
    z_series,
    zigzag_egf_series,
)

DEFAULT_ORDER_CAP = 24


class CapExceeded(RuntimeError):
    """A request went past the configured truncation or enumeration cap."""


def _t() -> MPoly:
    return MPoly.marker("t")


def _half_z_tan(order: int) -> Series:
    return z_series(order).scale(Fraction(1, 2)) * tan_series(order)


def _gcud_exponent(order: int) -> Series:
    # sec z - 1 + (1 - z/2) tan z
    return (
        sec_series(order)
        - one_series(order)
        + tan_series(order)
        - _half_z_tan(order)
    )


def _build_euler(order: int) -> Series:
    return zigzag_egf_series(order)


def _build_cud(order: int) -> Series:
    return one_minus_sin_series(order).reciprocal()


def _build_cud_cyclic(order: int) -> Series:
    if order == 0:
        return Series((Fraction(0),))
    return zigzag_egf_series(order - 1).integrate()


def _build_cud_even_only(order: int) -> Series:
    return sec_series(order)


def _build_cud_odd_only(order: int) -> Series:
    return zigzag_egf_series(order)


def _build_exc_def_swap(order: int) -> Series:
    return exp_series(order) * sec_series(order)


def _build_gcud_odd_only(order: int) -> Series:
    return tan_series(order).exp()


def _build_k_euler_odd(order: int) -> Series:
    # EGF of the counts k*E_{2k-1} of even up-down words with last > first
    return _half_z_tan(order)


def _build_gcud_even_cyclic(order: int) -> Series:
    # sec z - 1 - (z/2) tan z - ln(cos z)
    return (
        sec_series(order)
        - one_series(order)
        - _half_z_tan(order)
        - cos_series(order).log()
    )


def _build_gcud_even_only(order: int) -> Series:
    inner = sec_series(order) - one_series(order) - _half_z_tan(order)
    return sec_series(order) * inner.exp()


def _build_gcud(order: int) -> Series:
    return sec_series(order) * _gcud_exponent(order).exp()


def _build_cud_derangements(order: int) -> Series:
    return exp_series(order, -1) * one_minus_sin_series(order).reciprocal()


def _build_cud_fp_cycles(order: int) -> Series:
    t, x = _t(), MPoly.marker("x")
    linear = z_series(order).lift().scale((x - 1) * t)
    return linear.exp() * one_minus_sin_series(order).pow_marker(-t)


def _build_cud_cycles(order: int) -> Series:
    return one_minus_sin_series(order).pow_marker(-_t())


def _build_cud_odd_even(order: int) -> Series:
    t_o, t_e = MPoly.marker("t_o"), MPoly.marker("t_e")
    return zigzag_egf_series(order).pow_marker(t_o) * sec_series(order).pow_marker(t_e)


def _build_ud_st(order: int) -> Series:
    return zigzag_egf_series(order).pow_marker(_t())


def _build_ud_lrm(order: int) -> Series:
    t = _t()
    integral = sec_series(order).pow_marker(t + 1).integrate().truncate(order)
    return integral.scale(t) + sec_series(order).pow_marker(t) - one_series(order).lift()


def _build_ud_extr(order: int) -> Series:
    return one_minus_sin_series(order).pow_marker(-_t()).integrate().truncate(order)


def _build_gcud_fp_cycles(order: int) -> Series:
    t, x = _t(), MPoly.marker("x")
    inner = z_series(order).lift().scale(x - 1) + _gcud_exponent(order).lift()
    return sec_series(order).pow_marker(t) * inner.scale(t).exp()


def _build_perm_ud_nud(order: int) -> Series:
    v, w = MPoly.marker("v"), MPoly.marker("w")
    one_minus_z = one_series(order) - z_series(order)
    return one_minus_z.pow_marker(-w) * one_minus_sin_series(order).pow_marker(w - v)


def _build_avg_ud_cycles(order: int) -> Series:
    return (-one_minus_sin_series(order).log()) * geometric_series(order)


def _build_no_ud_cycles(order: int) -> Series:
    return one_minus_sin_series(order) * geometric_series(order)


# id -> (builder, marker names, first n shown by the CLI)
_CATALOG: dict[str, tuple[Callable[[int], Series], tuple[str, ...], int]] = {
    "euler": (_build_euler, (), 0),
    "cud": (_build_cud, (), 0),
    "cud-cyclic": (_build_cud_cyclic, (), 1),
    "cud-even-only": (_build_cud_even_only, (), 0),
    "cud-odd-only": (_build_cud_odd_only, (), 0),
    "exc-def-swap": (_build_exc_def_swap, (), 0),
    "gcud-odd-only": (_build_gcud_odd_only, (), 0),
    "k-euler-odd": (_build_k_euler_odd, (), 1),
    "gcud-even-cyclic": (_build_gcud_even_cyclic, (), 1),
    "gcud-even-only": (_build_gcud_even_only, (), 1),
    "gcud": (_build_gcud, (), 1),
    "cud-derangements": (_build_cud_derangements, (), 1),
    "cud-fp-cycles": (_build_cud_fp_cycles, ("x", "t"), 0),
    "cud-cycles": (_build_cud_cycles, ("t",), 0),
    "cud-odd-even": (_build_cud_odd_even, ("t_o", "t_e"), 0),
    "ud-st": (_build_ud_st, ("t",), 0),
    "ud-lrm": (_build_ud_lrm, ("t",), 1),
    "ud-extr": (_build_ud_extr, ("t",), 1),
    "gcud-fp-cycles": (_build_gcud_fp_cycles, ("x", "t"), 0),
    "perm-ud-nud": (_build_perm_ud_nud, ("v", "w"), 0),
    "avg-ud-cycles": (_build_avg_ud_cycles, (), 1),
    "no-ud-cycles": (_build_no_ud_cycles, (), 1),
}

SEQUENCE_IDS = tuple(_CATALOG)


def catalog_markers(seq_id: str) -> tuple[str, ...]:
    _require_known(seq_id)
    return _CATALOG[seq_id][1]


def catalog_offset(seq_id: str) -> int:
    _require_known(seq_id)
    return _CATALOG[seq_id][2]


def _require_known(seq_id: str) -> None:
    if seq_id not in _CATALOG:
        known = ", ".join(SEQUENCE_IDS)
        raise MalformedInput(f"unknown sequence id {seq_id!r} (known: {known})")


def catalog_series(seq_id: str, n_max: int, cap: int = DEFAULT_ORDER_CAP) -> Series:
    """The named generating function, truncated at order ``n_max``."""
    _require_known(seq_id)
    if n_max < 0:
        raise DomainError("n_max must be nonnegative")
    if n_max > cap:
        raise CapExceeded(f"order {n_max} exceeds the cap {cap}")
    return _CATALOG[seq_id][0](n_max)


def sequence_terms(seq_id: str, n_max: int, cap: int = DEFAULT_ORDER_CAP) -> list:
    """EGF terms n!*[z^n] for n = offset..n_max: integers for plain entries,
    polynomials for marked ones."""
    ser = catalog_series(seq_id, n_max, cap)
    markers = catalog_markers(seq_id)
    out = []
    for n in range(catalog_offset(seq_id), n_max + 1):
        out.append(ser.egf_term(n) if markers else ser.egf_int(n))
    return out


def exc_polynomial(n: int, cap: int = DEFAULT_ORDER_CAP) -> MPoly:
    """Excedance distribution over CUD permutations of [n], read off the
    odd/even-cycle polynomial through c_o + 2*exc = n."""
    poly = catalog_series("cud-odd-even", n, cap).egf_term(n)
    poly = poly.substitute({"t_e": 1})
    t = MPoly.marker("t")
    total = MPoly.zero()
    for mono, coeff in poly.items():
        c_o = dict(mono).get("t_o", 0)
        if (n - c_o) % 2 != 0:
            raise DomainError(f"odd-cycle count {c_o} breaks parity at n={n}")
        total = total + coeff * t ** ((n - c_o) // 2)
    return total


def secant_cf_convergent(depth: int, n_max: int) -> Series:
    """Depth-d truncation of 1/(1 - 1^2 z/(1 - 2^2 z/(1 - 3^2 z/...))) as an
    ordinary series; it reproduces E_0, E_2, ..., E_{2d} exactly through z^d
    (observed agreement order: exactly d for every depth checked)."""
    if depth < 1:
        raise DomainError("depth must be at least 1")
    tail = one_series(n_max)
    for k in range(depth, 0, -1):
        shifted = Series((Fraction(0),) + tail.coeffs[:-1]).scale(k * k)
        tail = (one_series(n_max) - shifted).reciprocal()
    return tail


def expected_ud_cycles(n: int) -> Fraction:
    """Expected number of up-down cycles in a uniform permutation of [n]:
    E_0/1! + E_1/2! + ... + E_{n-1}/n!.  Approaches -ln(1 - sin 1)."""
    if n < 1:
        raise DomainError("n must be at least 1")
    eul = euler_numbers(n - 1)
    return sum(
        (Fraction(eul[k - 1], factorial(k)) for k in range(1, n + 1)), Fraction(0)
    )


def expected_ud_cycles_limit() -> float:
    import math

    return -math.log(1 - math.sin(1))


def no_ud_fraction_limit() -> float:
    import math

    return 1 - math.sin(1)


def no_ud_cycles_count(n: int, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Number of permutations of [n] without any up-down cycle, by series
    extraction from (1 - sin z)/(1 - z)."""
    if n < 1:
        raise DomainError("n must be at least 1")
    return catalog_series("no-ud-cycles", n, cap).egf_int(n)


def no_ud_fraction_formula(n: int) -> Fraction:
    """The same count over n!, as the alternating partial sum
    1/3! - 1/5! + ... +- 1/(2m-1)!  (empty for n <= 2)."""
    if n < 1:
        raise DomainError("n must be at least 1")
    m = (n + 1) // 2
    total = Fraction(0)
    for j in range(2, m + 1):
        total += Fraction((-1) ** j, factorial(2 * j - 1))
    return total
