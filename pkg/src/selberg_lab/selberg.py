"""Short-interval sums and the Selberg / modified Selberg integrals.

J(N,H) sums, over x in ]N, 2N], the squared deviation of the sharp short
sum over ]x, x+H] from the mean value H*q(log x); the modified integral
replaces the sharp window by the triangular Cesaro weight 1 - |n-x|/H.
Both integrals admit an O(1)-per-x sliding evaluation (the triangle is a
box convolved with a box) and an O(NH) brute evaluation kept as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._util import compensated_sum
from .arith_core import LogPolynomial, Window

CSV_HEADER = "N,H,J,J_tilde,ratio_J,ratio_J_tilde,lower_ratio,method,mean_mode"

MEAN_MODES = ("residue", "window-poly")
METHODS = ("sliding", "brute")


@dataclass(frozen=True)
class IntegralReport:
    """One (N, H) cell: integral values and their normalized ratios."""

    N: int
    H: int
    J: float | None
    J_tilde: float | None
    ratio_J: float | None
    ratio_J_tilde: float | None
    lower_ratio: float | None
    method: str
    mean_mode: str

    def csv_row(self) -> str:
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, float):
                return f"{v:.17g}"
            return str(v)

        return ",".join(
            fmt(v)
            for v in (
                self.N,
                self.H,
                self.J,
                self.J_tilde,
                self.ratio_J,
                self.ratio_J_tilde,
                self.lower_ratio,
                self.method,
                self.mean_mode,
            )
        )


def _report(N, H, J, J_tilde, method, mean_mode) -> IntegralReport:
    for v, name in ((J, "J"), (J_tilde, "J_tilde")):
        if v is not None and not (v >= 0 and math.isfinite(v)):
            raise ArithmeticError(f"{name} must be finite and nonnegative, got {v}")
    return IntegralReport(
        N=N,
        H=H,
        J=J,
        J_tilde=J_tilde,
        ratio_J=None if J is None else J / (N * H),
        ratio_J_tilde=None if J_tilde is None else J_tilde / (N * H),
        lower_ratio=None if J is None else J / (N * H * math.log(N) ** 4),
        method=method,
        mean_mode=mean_mode,
    )


def short_sum(f: Window, x: int, H: int) -> float:
    """Sharp short sum of f over ]x, x+H]."""
    if H < 1:
        raise ValueError("H must be >= 1")
    return float(np.sum(f.slice(x, x + H)))


def cesaro_sum(f: Window, x: int, H: int) -> float:
    """Triangle-weighted sum sum_{|n-x|<=H} (1 - |n-x|/H) f(n)."""
    if H < 1:
        raise ValueError("H must be >= 1")
    vals = f.slice(x - H - 1, x + H)
    w = 1.0 - np.abs(np.arange(-H, H + 1, dtype=np.float64)) / H
    return float(np.dot(w, vals))


def mean_value(x: int, H: int, poly: LogPolynomial) -> float:
    """Short-interval mean value H * poly(log x)."""
    if x < 1 or H < 1:
        raise ValueError("x and H must be >= 1")
    return H * poly(math.log(x))


def _check_args(f: Window, x_first: int, x_last: int, H: int, method: str, mean_mode: str):
    if H < 1:
        raise ValueError("H must be >= 1")
    if x_last < x_first:
        raise ValueError("empty x range")
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    if mean_mode not in MEAN_MODES:
        raise ValueError(f"mean_mode must be one of {MEAN_MODES}")


def _combined(f: Window, poly: LogPolynomial | None) -> np.ndarray:
    if poly is None or poly.is_zero():
        return np.asarray(f.values, dtype=np.float64)
    n = np.arange(f.lo, f.hi + 1, dtype=np.float64)
    return np.asarray(f.values, dtype=np.float64) + poly(np.log(n))


def box_deviations(
    f: Window,
    x_first: int,
    x_last: int,
    H: int,
    poly: LogPolynomial | None = None,
    mean_mode: str = "residue",
    method: str = "sliding",
) -> np.ndarray:
    """Deviation profile D(x) = sum_{x<n<=x+H} (f+poly(log.))(n) - mean(x).

    mean(x) is H*poly(log x) in "residue" mode; in "window-poly" mode the
    subtracted mean is the windowed polynomial sum itself, so D reduces to
    the sharp short sum of f alone.
    """
    _check_args(f, x_first, x_last, H, method, mean_mode)
    if not f.covers(x_first + 1, x_last + H):
        raise ValueError("window does not cover the x range plus H")
    xs = np.arange(x_first, x_last + 1, dtype=np.int64)
    if mean_mode == "window-poly":
        g = np.asarray(f.values, dtype=np.float64)
        mean = 0.0
    else:
        g = _combined(f, poly)
        mean = (
            0.0
            if poly is None or poly.is_zero()
            else H * poly(np.log(xs.astype(np.float64)))
        )
    if method == "sliding":
        prefix = np.concatenate(([0.0], np.cumsum(g)))
        i = xs - f.lo + 1
        sums = prefix[i + H] - prefix[i]
    else:
        sums = np.array(
            [np.sum(g[x + 1 - f.lo : x + H + 1 - f.lo]) for x in xs], dtype=np.float64
        )
    return sums - mean


def triangle_deviations(
    f: Window,
    x_first: int,
    x_last: int,
    H: int,
    poly: LogPolynomial | None = None,
    mean_mode: str = "residue",
    method: str = "sliding",
) -> np.ndarray:
    """Deviation profile with the Cesaro weight in place of the sharp window.

    The sliding method stacks two running box sums: with S(y) the sharp sum
    over ]y, y+H], the triangle sum at x is (1/H) * sum_{b=1..H} S(x-b).
    """
    _check_args(f, x_first, x_last, H, method, mean_mode)
    if not f.covers(x_first - H, x_last + H):
        raise ValueError("window does not cover the x range plus [-H, H]")
    xs = np.arange(x_first, x_last + 1, dtype=np.int64)
    if mean_mode == "window-poly":
        g = np.asarray(f.values, dtype=np.float64)
        mean = 0.0
    else:
        g = _combined(f, poly)
        mean = (
            0.0
            if poly is None or poly.is_zero()
            else H * poly(np.log(xs.astype(np.float64)))
        )
    if method == "sliding":
        prefix = np.concatenate(([0.0], np.cumsum(g)))
        y0 = x_first - H  # earliest y with S(y) needed
        ys = np.arange(y0, x_last)  # up to x_last - 1
        i = ys - f.lo + 1
        box = prefix[i + H] - prefix[i]
        bprefix = np.concatenate(([0.0], np.cumsum(box)))
        # sum of S(y) for y in [x-H, x-1]
        j = xs - y0
        sums = (bprefix[j] - bprefix[j - H]) / H
    else:
        w = 1.0 - np.abs(np.arange(-H, H + 1, dtype=np.float64)) / H
        sums = np.array(
            [np.dot(w, g[x - H - f.lo : x + H + 1 - f.lo]) for x in xs],
            dtype=np.float64,
        )
    return sums - mean


def _guard_pair(f: Window, N: int, H: int):
    if N < 1 or H < 1:
        raise ValueError("N and H must be >= 1")
    if H > N // 4:
        raise ValueError(f"H={H} too large for N={N} (need H <= N/4)")
    if not f.covers(N - H + 1, 2 * N + H):
        raise ValueError(f"window does not cover ]{N-H}, {2*N+H}]")


def selberg_integral(
    f: Window,
    N: int,
    H: int,
    poly: LogPolynomial | None = None,
    method: str = "sliding",
    mean_mode: str = "residue",
) -> IntegralReport:
    """J(N,H): mean square of the sharp short-sum deviation over x in ]N, 2N]."""
    _guard_pair(f, N, H)
    dev = box_deviations(f, N + 1, 2 * N, H, poly, mean_mode, method)
    J = compensated_sum(dev * dev)
    return _report(N, H, J, None, method, mean_mode)


def modified_selberg_integral(
    f: Window,
    N: int,
    H: int,
    poly: LogPolynomial | None = None,
    method: str = "sliding",
    mean_mode: str = "residue",
) -> IntegralReport:
    """J~(N,H): mean square of the Cesaro-weighted deviation over x in ]N, 2N]."""
    _guard_pair(f, N, H)
    dev = triangle_deviations(f, N + 1, 2 * N, H, poly, mean_mode, method)
    Jt = compensated_sum(dev * dev)
    return _report(N, H, None, Jt, method, mean_mode)


def integral_pair(
    f: Window,
    N: int,
    H: int,
    poly: LogPolynomial | None = None,
    method: str = "sliding",
    mean_mode: str = "residue",
) -> IntegralReport:
    """Both integrals for one (N, H) cell, merged into a single report."""
    a = selberg_integral(f, N, H, poly, method, mean_mode)
    b = modified_selberg_integral(f, N, H, poly, method, mean_mode)
    return _report(N, H, a.J, b.J_tilde, method, mean_mode)
