"""Closed-form closeness of cycles and paths, and the residual-closeness gap
``delta = C(H(k, n)) - R(H(k, n))`` for every Harary family.

Formulas are stated in terms of the *graph order* ``n``; internally each
family works with the half-order ``m = n // 2``. Every branch returns an
exact :class:`DyadicValue` together with a stable regime tag.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .dyadic import DyadicValue, half_pow
from .harary import HararyParamError, validate

__all__ = [
    "REGIMES",
    "FAMILIES",
    "DeltaResult",
    "UncoveredRegimeError",
    "closeness_cycle",
    "closeness_path",
    "geometric_identity",
    "family_of",
    "delta_link",
    "residual_closed_form_h2",
    "saturating_delta",
    "odd_order_delta",
    "theorem5_delta",
    "theorem8_delta",
]

REGIMES = (
    "T1_even", "T1_odd", "T2", "T3_4k", "T3_4k2",
    "T4", "T4_small_05", "T4_small_075",
    "T5", "T5_small_05", "T5_small_075",
    "T6_4p1", "T6_4p3", "T6_small_H35", "T6_small_H37",
    "T7", "T7_small_05", "T7_small_075", "T7_small_1",
    "T8", "T8_small_05", "T8_small_075", "T8_small_1",
)  # fmt: skip

FAMILIES = (
    "H2", "H2p_even_k", "H3_even_n", "H5_even_n",
    "HoddK_even_n", "H3_odd_n", "H5_odd_n", "HoddK_odd_n",
)  # fmt: skip

HALF = DyadicValue(1, 1)
THREE_QUARTERS = DyadicValue(3, 2)
ONE = DyadicValue(1)


class UncoveredRegimeError(ValueError):
    """No documented regime covers the requested ``(k, n)``."""


@dataclass(frozen=True)
class DeltaResult:
    delta: DyadicValue
    source: str
    theorem_param: Optional[int] = None


def closeness_cycle(n: int) -> DyadicValue:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    k, odd = divmod(n, 2)
    if odd:
        return 2 * n - 2 * n * half_pow(k)
    return 4 * k - 6 * k * half_pow(k)


def closeness_path(n: int) -> DyadicValue:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    tail = DyadicValue(1 << (2 - n)) if n <= 2 else half_pow(n - 2)
    return 2 * n - 4 + tail


def geometric_identity(k: int) -> tuple[DyadicValue, DyadicValue]:
    """``sum_{j=3..k} j 2**(1-j)`` summed term by term, and ``2 - (k+2) 2**(1-k)``."""
    if k < 3:
        raise ValueError(f"identity starts at k = 3, got {k}")
    lhs = DyadicValue(0)
    for j in range(3, k + 1):
        lhs += j * half_pow(j - 1)
    return lhs, 2 - (k + 2) * half_pow(k - 1)


def saturating_delta(kappa: int) -> DyadicValue:
    """``2 - (kappa + 2) 2**-kappa``; the common gap of the even-order families."""
    return 2 - (kappa + 2) * half_pow(kappa)


def odd_order_delta(p: int) -> DyadicValue:
    """``4 - (3p + 4) 2**-p``; the common gap of the odd-``k``, odd-order families."""
    return 4 - (3 * p + 4) * half_pow(p)


def theorem5_delta(p: int, m: int) -> DeltaResult:
    """Gap of ``H(2p+1, 2m)`` for ``p >= 2`` (``p = 2`` is the ``H(5, 2m)`` case)."""
    if m < p + 1:
        raise UncoveredRegimeError(f"H({2 * p + 1}, {2 * m}) is not a Harary graph")
    if m <= 2 * p:
        return DeltaResult(HALF, "T5_small_05")
    if m <= 3 * p:
        return DeltaResult(THREE_QUARTERS, "T5_small_075")
    kappa = (m + p - 1) // (2 * p)
    return DeltaResult(saturating_delta(kappa), "T5", kappa)


def theorem8_delta(q: int, m: int) -> DeltaResult:
    """Gap of ``H(2q+1, 2m+1)`` for ``q >= 3``, with the small-order ladder as stated."""
    if m < q + 1:
        raise UncoveredRegimeError(f"H({2 * q + 1}, {2 * m + 1}) is not a Harary graph")
    if m <= 2 * q:
        return DeltaResult(HALF, "T8_small_05")
    if m < 3 * q:
        return DeltaResult(THREE_QUARTERS, "T8_small_075")
    if m == 3 * q:
        return DeltaResult(ONE, "T8_small_1")
    p = (m + q - 1) // (2 * q)
    return DeltaResult(odd_order_delta(p), "T8", p)


def family_of(k: int, n: int) -> str:
    validate(k, n)
    if k % 2 == 0:
        return "H2" if k == 2 else "H2p_even_k"
    if n % 2 == 0:
        return {3: "H3_even_n", 5: "H5_even_n"}.get(k, "HoddK_even_n")
    return {3: "H3_odd_n", 5: "H5_odd_n"}.get(k, "HoddK_odd_n")


def delta_link(k: int, n: int) -> DeltaResult:
    """Closed-form ``C(H(k, n)) - R(H(k, n))``."""
    try:
        family = family_of(k, n)
    except HararyParamError as exc:
        raise UncoveredRegimeError(str(exc)) from None
    m = n // 2

    if family == "H2":
        half_k = m
        if n % 2 == 0:
            d = 4 - half_pow(2 * half_k - 2) - 3 * half_k * half_pow(half_k - 1)
            return DeltaResult(d, "T1_even", half_k)
        d = 4 - half_pow(2 * half_k - 1) - n * half_pow(half_k - 1)
        return DeltaResult(d, "T1_odd", half_k)

    if family == "H2p_even_k":
        kappa = (n - 1) // k
        return DeltaResult(saturating_delta(kappa), "T2", kappa)

    if family == "H3_even_n":
        kappa, rem = divmod(n, 4)
        if rem == 0:
            return DeltaResult(3 - (2 * kappa + 3) * half_pow(kappa), "T3_4k", kappa)
        return DeltaResult(3 - 3 * (kappa + 2) * half_pow(kappa + 1), "T3_4k2", kappa)

    if family == "H5_even_n":
        if m <= 4:
            return DeltaResult(HALF, "T4_small_05")
        if m <= 6:
            return DeltaResult(THREE_QUARTERS, "T4_small_075")
        kappa = (m + 1) // 4
        return DeltaResult(saturating_delta(kappa), "T4", kappa)

    if family == "HoddK_even_n":
        return theorem5_delta(k // 2, m)

    if family == "H3_odd_n":
        if m == 2:
            return DeltaResult(HALF, "T6_small_H35")
        if m == 3:
            return DeltaResult(ONE, "T6_small_H37")
        p, odd = divmod(m, 2)
        if odd:
            return DeltaResult(4 - (5 * p + 8) * half_pow(p + 1), "T6_4p3", p)
        return DeltaResult(odd_order_delta(p), "T6_4p1", p)

    if family == "H5_odd_n":
        if m <= 4:
            return DeltaResult(HALF, "T7_small_05")
        if m == 5:
            return DeltaResult(THREE_QUARTERS, "T7_small_075")
        if m == 6:
            return DeltaResult(ONE, "T7_small_1")
        p = (m + 1) // 4
        return DeltaResult(odd_order_delta(p), "T7", p)

    return theorem8_delta(k // 2, m)


def residual_closed_form_h2(n: int) -> DyadicValue:
    """``R(H(2, n))`` from the cycle closeness minus the closed-form gap."""
    if n < 3:
        raise ValueError(f"H(2, n) needs n >= 3, got {n}")
    return closeness_cycle(n) - delta_link(2, n).delta
