"""Correlations, kernel identities, and Fourier-side checks.

Everything here works with exponential sums truncated to the base range
]N, 2N]. The two weighted energies

    int |f^|^2 |u^|^2 da          (sharp window squared)
    int |f^|^2 |u^|^4 / H^2 da    (Fejer-type weight)

are evaluated exactly through correlation sums: the weights are
trigonometric polynomials whose Fourier coefficients are the box and
triangle autocorrelations, so no quadrature enters. Quadrature survives
only as an independent cross-check and in the range-classified splitting
of the sharp-window energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._util import compensated_sum, next_pow2
from .arith_core import BalancedSequence
from .selberg import modified_selberg_integral, selberg_integral

WEIGHTS = ("box2", "fejer2")


@dataclass(frozen=True)
class CorrelationTable:
    """C(h) for h in [-hmax, hmax]; values[h + hmax] holds shift h.

    base_lo/base_hi record the half-open index range of the outer sum
    within the source array (None when the whole array was used, as for
    the weight correlations).
    """

    hmax: int
    values: np.ndarray
    method: str
    base_lo: int | None = None
    base_hi: int | None = None

    def value(self, h: int):
        if abs(h) > self.hmax:
            raise ValueError(f"shift {h} outside [-{self.hmax}, {self.hmax}]")
        return self.values[h + self.hmax]

    def shifts(self) -> np.ndarray:
        return np.arange(-self.hmax, self.hmax + 1)


@dataclass(frozen=True)
class KernelProfile:
    """|u^(alpha)| sampled on a uniform grid over [-1/2, 1/2]."""

    H: int
    grid_m: int
    alphas: np.ndarray
    values: np.ndarray


def dirichlet_kernel_abs(alpha, H: int):
    """|sum_{h<=H} e(h*alpha)| = |sin(pi*H*alpha) / sin(pi*alpha)|, = H at alpha = 0."""
    if H < 1:
        raise ValueError("H must be >= 1")
    a = np.asarray(alpha, dtype=np.float64)
    s = np.abs(np.sin(np.pi * a))
    num = np.abs(np.sin(np.pi * H * a))
    out = np.divide(num, s, out=np.full_like(num, float(H)), where=s != 0.0)
    if a.ndim == 0:
        return float(out)
    return out


def kernel_profile(H: int, grid_m: int) -> KernelProfile:
    """Sample the kernel magnitude on an inclusive uniform grid."""
    if grid_m < 2:
        raise ValueError("grid must have at least 2 points")
    alphas = np.linspace(-0.5, 0.5, grid_m)
    return KernelProfile(H=H, grid_m=grid_m, alphas=alphas, values=dirichlet_kernel_abs(alphas, H))


def correlation(
    f: np.ndarray,
    hmax: int,
    method: str = "fft",
    base: tuple[int, int] | None = None,
) -> CorrelationTable:
    """Shifted autocorrelation C(h) = sum f(n) conj(f(n-h)).

    The outer index n runs over `base` (a half-open index range, default
    the whole array); the inner index n-h is clipped to the array. With
    the default base both indices live in the same range, the convention
    of the exact energy identities. With a proper sub-range the table is
    one-sided: C(-h) need not equal conj(C(h)).

    The fft method pads to the next power of two at or above twice the
    length, so no circular wraparound can reach |h| <= hmax; it must agree
    with the direct double loop.
    """
    f = np.asarray(f)
    M = len(f)
    if not 0 <= hmax < M:
        raise ValueError(f"hmax={hmax} out of range for length {M}")
    b0, b1 = (0, M) if base is None else base
    if not 0 <= b0 < b1 <= M:
        raise ValueError(f"invalid base range [{b0}, {b1}) for length {M}")
    if method == "direct":
        vals = np.empty(2 * hmax + 1, dtype=np.complex128)
        for h in range(-hmax, hmax + 1):
            i0 = max(b0, h)
            i1 = min(b1, M + h)
            if i0 >= i1:
                vals[hmax + h] = 0.0
            else:
                vals[hmax + h] = np.dot(f[i0:i1], np.conj(f[i0 - h : i1 - h]))
    elif method == "fft":
        L = next_pow2(2 * M)
        if base is None and np.isrealobj(f):
            power = np.abs(np.fft.rfft(f, L)) ** 2
            ac = np.fft.irfft(power, L)
        else:
            fo = f if base is None else np.concatenate(
                [np.zeros(b0, dtype=f.dtype), f[b0:b1], np.zeros(M - b1, dtype=f.dtype)]
            )
            ac = np.fft.ifft(np.fft.fft(fo, L) * np.conj(np.fft.fft(f, L)))
        vals = np.concatenate([ac[L - hmax : L], ac[: hmax + 1]])
    else:
        raise ValueError("method must be 'direct' or 'fft'")
    if np.isrealobj(f):
        vals = np.real(vals)
    lo, hi = (None, None) if base is None else (b0, b1)
    return CorrelationTable(hmax=hmax, values=vals, method=method, base_lo=lo, base_hi=hi)


def full_correlation(f: np.ndarray) -> np.ndarray:
    """All nonnegative lags 0..M-1 of the autocorrelation, via FFT."""
    f = np.asarray(f)
    M = len(f)
    L = next_pow2(2 * M)
    if np.isrealobj(f):
        return np.fft.irfft(np.abs(np.fft.rfft(f, L)) ** 2, L)[:M]
    F = np.fft.fft(f, L)
    return np.fft.ifft(F * np.conj(F))[:M]


def box_autocorrelation(H: int) -> CorrelationTable:
    """Correlation of the indicator of [1, H]; equals max(H-|h|, 0)."""
    if H < 1:
        raise ValueError("H must be >= 1")
    ones = np.ones(H)
    vals = np.convolve(ones, ones)  # even weight: convolution = correlation
    return CorrelationTable(hmax=H - 1, values=vals, method="direct")


def triangle_autocorrelation(H: int) -> CorrelationTable:
    """Correlation of the Cesaro weight max(1-|a|/H, 0); support |h| <= 2H-2."""
    if H < 1:
        raise ValueError("H must be >= 1")
    w = 1.0 - np.abs(np.arange(-(H - 1), H, dtype=np.float64)) / H
    vals = np.convolve(w, w)
    return CorrelationTable(hmax=2 * H - 2, values=vals, method="direct")


def spectral_energy(f: np.ndarray, H: int, weight: str = "box2") -> float:
    """Weighted energy of f^ via the exact correlation route.

    box2 gives int |f^|^2 |u^|^2, fejer2 gives int |f^|^2 |u^|^4 / H^2;
    both reduce to sum_h W(h) C_f(-h) with W the box (resp. triangle)
    autocorrelation, exact up to rounding.
    """
    if weight == "box2":
        wtable = box_autocorrelation(H)
    elif weight == "fejer2":
        wtable = triangle_autocorrelation(H)
    else:
        raise ValueError(f"weight must be one of {WEIGHTS}")
    f = np.asarray(f)
    hm = min(wtable.hmax, len(f) - 1)
    cf = correlation(f, hm, method="fft")
    w = wtable.values[wtable.hmax - hm : wtable.hmax + hm + 1]
    prod = w * cf.values[::-1]
    return compensated_sum(np.real(prod))


def band_energy(f: np.ndarray, c: float) -> float:
    """int_{-c}^{c} |f^(alpha)|^2 d(alpha), exactly, from the correlation table.

    The band indicator has Fourier transform kernel(0) = 2c and
    kernel(d) = sin(2*pi*c*d) / (pi*d); the full correlation is paired
    with it in O(range) time.
    """
    if not 0.0 <= c <= 0.5:
        raise ValueError("band half-width c must lie in [0, 1/2]")
    f = np.asarray(f)
    if c == 0.0:
        return 0.0
    ac = full_correlation(f)
    M = len(f)
    d = np.arange(1, M, dtype=np.float64)
    kern = np.sin(2.0 * np.pi * c * d) / (np.pi * d)
    terms = np.concatenate(([2.0 * c * np.real(ac[0])], 2.0 * kern * np.real(ac[1:])))
    return compensated_sum(terms)


def kernel_localization_check(H: int, eps: float, grid_m: int) -> int:
    """Count grid points with |u^(alpha)| > [eps*H] but |alpha| >= 1/(2*[eps*H]).

    Large kernel values can only occur near alpha = 0, so the count must
    be zero for every admissible (H, eps).
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie in (0, 1)")
    m = math.floor(eps * H)
    if m < 1:
        raise ValueError("[eps*H] must be >= 1")
    prof = kernel_profile(H, grid_m)
    bad = (prof.values > m) & (np.abs(prof.alphas) >= 1.0 / (2.0 * m))
    return int(np.count_nonzero(bad))


@dataclass(frozen=True)
class CorrelationRouteReport:
    """Direct integrals against their correlation-sum counterparts."""

    N: int
    H: int
    j_direct: float
    j_corr: float
    jt_direct: float
    jt_corr: float
    diff_j: float
    diff_jt: float
    norm_diff_j: float
    norm_diff_jt: float

    def to_record(self) -> dict:
        return {
            "check": "correlation_route",
            "params": {"N": self.N, "H": self.H},
            "lhs": self.j_direct,
            "rhs": self.j_corr,
            "ratio": self.norm_diff_j,
            "violations": None,
            "slack": self.norm_diff_jt,
        }


def _require_modest_h(N: int, H: int, label: str) -> None:
    if H > N**0.49:
        raise ValueError(f"{label}: H={H} exceeds N^0.49 at N={N}")


def correlation_route_check(f: BalancedSequence, N: int, H: int) -> CorrelationRouteReport:
    """Both integrals, both routes; discrepancies are reported per H^3.

    The correlation C_f has its outer index restricted to ]N, 2N] and the
    inner one clipped to the available window, so the two routes differ by
    range-edge products; that discrepancy is the H^3-order boundary term
    being tracked.
    """
    if f.N != N:
        raise ValueError("sequence metadata does not match N")
    _require_modest_h(N, H, "correlation_route_check")
    base = (N + 1 - f.lo, 2 * N + 1 - f.lo)
    j_direct = selberg_integral(f, N, H).J
    jt_direct = modified_selberg_integral(f, N, H).J_tilde
    cu = box_autocorrelation(H)
    cf = correlation(f.values, cu.hmax, method="fft", base=base)
    j_corr = compensated_sum(np.real(cu.values * cf.values))
    cw = triangle_autocorrelation(H)
    cfw = correlation(f.values, min(cw.hmax, len(f.values) - 1), method="fft", base=base)
    w = cw.values[cw.hmax - cfw.hmax : cw.hmax + cfw.hmax + 1]
    jt_corr = compensated_sum(np.real(w * cfw.values))
    h3 = float(H) ** 3
    return CorrelationRouteReport(
        N=N,
        H=H,
        j_direct=j_direct,
        j_corr=j_corr,
        jt_direct=jt_direct,
        jt_corr=jt_corr,
        diff_j=abs(j_direct - j_corr),
        diff_jt=abs(jt_direct - jt_corr),
        norm_diff_j=abs(j_direct - j_corr) / h3,
        norm_diff_jt=abs(jt_direct - jt_corr) / h3,
    )


@dataclass(frozen=True)
class GallagherReport:
    """Low-frequency energy against the modified integral plus h^3."""

    N: int
    h: int
    band: float
    j_tilde: float
    lhs: float
    rhs: float
    ratio: float

    def to_record(self) -> dict:
        return {
            "check": "gallagher",
            "params": {"N": self.N, "h": self.h},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ratio": self.ratio,
            "violations": None,
            "slack": None,
        }


def gallagher_check(f: BalancedSequence, N: int, h: int) -> GallagherReport:
    """Compare h^2 * int_{|a|<=1/(2h)} |f^|^2 with J~(N,h) + h^3."""
    if f.N != N:
        raise ValueError("sequence metadata does not match N")
    if h < 10:
        raise ValueError("h must be >= 10 (large-h regime)")
    _require_modest_h(N, h, "gallagher_check")
    band = band_energy(f.truncated(), 1.0 / (2.0 * h))
    jt = modified_selberg_integral(f, N, h).J_tilde
    lhs = h * h * band
    rhs = jt + float(h) ** 3
    return GallagherReport(
        N=N, h=h, band=band, j_tilde=jt, lhs=lhs, rhs=rhs, ratio=lhs / rhs
    )


@dataclass(frozen=True)
class ThreeRangeReport:
    """The classified splitting of the sharp-window energy."""

    N: int
    H: int
    eps: float
    E: float
    grid_m: int
    t1: float
    t2: float
    t3: float
    h_cubed: float
    majorant: float
    j_direct: float
    slack: float
    majorization_violations: int

    def to_record(self) -> dict:
        return {
            "check": "three_range_split",
            "params": {
                "N": self.N,
                "H": self.H,
                "eps": self.eps,
                "E": self.E,
                "grid_m": self.grid_m,
            },
            "lhs": self.j_direct,
            "rhs": self.majorant,
            "ratio": self.slack,
            "violations": self.majorization_violations,
            "slack": self.slack,
        }


def three_range_split(
    f: BalancedSequence,
    N: int,
    H: int,
    eps: float,
    E: float,
    grid_m: int | None = None,
) -> ThreeRangeReport:
    """Split int |f^|^2 |u^|^2 by kernel size and majorize each range.

    Grid points are classified by |u^|: at most [eps*H], between [eps*H]
    and E*H, or above E*H. The three pieces are bounded pointwise by
    eps^2 H^2 |f^|^2, E^2 H^2 |f^|^2 and |f^|^2 |u^|^4 / (E^2 H^2), and the
    slack (T1+T2+T3+H^3) / J is reported. The grid must resolve the kernel
    oscillations: at least 64*N points (rounded up to a power of two).
    """
    if f.N != N:
        raise ValueError("sequence metadata does not match N")
    if not 0.0 < eps < E <= 1.0:
        raise ValueError("need 0 < eps < E <= 1")
    m = math.floor(eps * H)
    if m < 1:
        raise ValueError("[eps*H] must be >= 1")
    min_points = 64 * N
    if grid_m is None:
        grid_m = next_pow2(min_points)
    elif grid_m < min_points:
        raise ValueError(f"grid of {grid_m} points too coarse (need >= {min_points})")
    M = next_pow2(grid_m)
    t = f.truncated()
    P = np.abs(np.fft.fft(t, M)) ** 2
    alphas = np.fft.fftfreq(M)
    u = dirichlet_kernel_abs(alphas, H)
    EH = E * H
    r1 = u <= m
    r3 = u > EH
    r2 = ~r1 & ~r3
    t1 = eps * eps * H * H * compensated_sum(P[r1]) / M
    t2 = EH * EH * compensated_sum(P[r2]) / M
    u3 = u[r3]
    t3 = compensated_sum(P[r3] * (u3 * u3) * (u3 * u3)) / (EH * EH * M)
    # per-point majorization, in rounding-monotone form
    v1 = int(np.count_nonzero(u[r1] * u[r1] > float(m) * float(m)))
    v2 = int(np.count_nonzero(u[r2] * u[r2] > EH * EH))
    v3 = int(np.count_nonzero(u3 * EH > u3 * u3))
    j_direct = selberg_integral(f, N, H).J
    h3 = float(H) ** 3
    majorant = t1 + t2 + t3 + h3
    slack = majorant / j_direct if j_direct > 0 else math.inf
    return ThreeRangeReport(
        N=N,
        H=H,
        eps=eps,
        E=E,
        grid_m=M,
        t1=t1,
        t2=t2,
        t3=t3,
        h_cubed=h3,
        majorant=majorant,
        j_direct=j_direct,
        slack=slack,
        majorization_violations=v1 + v2 + v3,
    )
