"""Exact divisor tables, zeta Laurent data, and balanced sequences.

The building blocks everything else consumes: a segmented sieve for the
k-factor divisor function d_k, the Stieltjes constants, the degree-(k-1)
polynomial q in L = log x with Res_{s=1} zeta(s)^k x^{s-1} = q(log x),
and the balanced values f(n) = d_3(n) - p_2(log n) on the window
]N-H, 2N+H].
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from decimal import Decimal
from pathlib import Path

import numpy as np

from ._util import INT64_MAX, primes_upto

_SIEVE_CHUNK = 1 << 20

# Laurent expansion of zeta at s=1: zeta(s) = 1/(s-1) + sum (-1)^j gamma_j (s-1)^j / j!.
# Standard published digits; an Euler-Maclaurin recomputation in the test suite
# confirms every stored digit.
_STIELTJES_DIGITS = (
    "0.5772156649015328606065120900824024310422",
    "-0.0728158454836767248605863758749013191377",
    "-0.0096903631928723184845303860352125293591",
)


@dataclass(frozen=True)
class Window:
    """Real or integer values attached to consecutive integers lo, lo+1, ...

    Index i holds the value at n = lo + i.
    """

    lo: int
    values: np.ndarray

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def covers(self, n0: int, n1: int) -> bool:
        """Whether every n in [n0, n1] is inside the window."""
        return self.lo <= n0 and n1 <= self.hi

    def value(self, n: int):
        if not self.lo <= n <= self.hi:
            raise ValueError(f"n={n} outside window [{self.lo}, {self.hi}]")
        return self.values[n - self.lo]

    def slice(self, n0: int, n1: int) -> np.ndarray:
        """Values on the interval ]n0, n1] (n0 excluded, n1 included)."""
        if not self.covers(n0 + 1, n1):
            raise ValueError(
                f"interval ]{n0}, {n1}] not covered by window [{self.lo}, {self.hi}]"
            )
        return self.values[n0 + 1 - self.lo : n1 + 1 - self.lo]


@dataclass(frozen=True)
class DivisorTable(Window):
    """Exact values of d_k on a contiguous window (int64, overflow-checked)."""

    k: int


@dataclass(frozen=True)
class StieltjesConstants:
    """High-precision gamma_0, gamma_1, ... as Decimals."""

    gamma: tuple[Decimal, ...]

    def __post_init__(self):
        if len(self.gamma) >= 1 and not Decimal("0.577") < self.gamma[0] < Decimal("0.578"):
            raise ValueError("gamma_0 outside its sanity bracket (0.577, 0.578)")
        if len(self.gamma) >= 2 and not Decimal("-0.073") < self.gamma[1] < Decimal("-0.072"):
            raise ValueError("gamma_1 outside its sanity bracket (-0.073, -0.072)")

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(g) for g in self.gamma)


DEFAULT_STIELTJES = StieltjesConstants(tuple(Decimal(s) for s in _STIELTJES_DIGITS))


def stieltjes_constant(j: int) -> Decimal:
    """Stored Stieltjes constant gamma_j (25+ significant digits)."""
    if not 0 <= j < len(DEFAULT_STIELTJES.gamma):
        raise ValueError(f"gamma_{j} not stored (have j=0..{len(DEFAULT_STIELTJES.gamma)-1})")
    return DEFAULT_STIELTJES.gamma[j]


@dataclass(frozen=True)
class LogPolynomial:
    """Polynomial in L = log x; coeffs[j] multiplies L**j."""

    coeffs: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.coeffs)

    def __call__(self, L):
        acc = np.zeros_like(np.asarray(L, dtype=np.float64))
        for c in reversed(self.coeffs):
            acc = acc * L + c
        if np.ndim(L) == 0:
            return float(acc)
        return acc

    def at(self, x):
        """Evaluate at L = log x."""
        return self(np.log(np.asarray(x, dtype=np.float64)))

    @staticmethod
    def zero() -> "LogPolynomial":
        return LogPolynomial((0.0,))


def _binomial_factors(k: int, hi: int) -> np.ndarray:
    """d_k(p^e) = C(e+k-1, k-1) for e = 0..max attainable exponent below hi."""
    e_max = hi.bit_length() - 1  # floor(log2 hi); 2^e_max <= hi
    table = [math.comb(e + k - 1, k - 1) for e in range(e_max + 2)]
    if table[e_max] > INT64_MAX:
        raise OverflowError(
            f"d_{k}(2^{e_max}) = {table[e_max]} exceeds the 64-bit table range"
        )
    return np.array([min(t, INT64_MAX) for t in table], dtype=np.int64)


def _checked_multiply(out: np.ndarray, idx: np.ndarray, factors: np.ndarray) -> None:
    cur = out[idx]
    if np.any(cur > INT64_MAX // factors):
        raise OverflowError("divisor value exceeds the 64-bit range")
    out[idx] = cur * factors


def _sieve_chunk(lo: int, hi: int, k: int, primes: np.ndarray, binom: np.ndarray) -> np.ndarray:
    size = hi - lo + 1
    rem = np.arange(lo, hi + 1, dtype=np.int64)
    out = np.ones(size, dtype=np.int64)
    for p in primes:
        p = int(p)
        start = (-lo) % p
        if start >= size:
            continue
        idx = np.arange(start, size, p, dtype=np.int64)
        exp = np.ones(idx.size, dtype=np.int64)
        rem[idx] //= p
        pos = np.nonzero(rem[idx] % p == 0)[0]
        while pos.size:
            sel = idx[pos]
            rem[sel] //= p
            exp[pos] += 1
            pos = pos[rem[sel] % p == 0]
        _checked_multiply(out, idx, binom[exp])
    # whatever survives the primes <= sqrt(hi) is itself prime
    left = np.nonzero(rem > 1)[0]
    if left.size:
        _checked_multiply(out, left, np.int64(k))
    return out


def sieve_dk(lo: int, hi: int, k: int) -> DivisorTable:
    """Exact d_k(n) for n in [lo, hi] by segmented smallest-prime sieving.

    Each n is reduced by the primes p <= sqrt(hi); per prime power p^e the
    value picks up the multiplicative factor C(e+k-1, k-1). Overflow of the
    64-bit value type raises instead of wrapping.
    """
    if lo < 1 or lo > hi:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    if k < 2:
        raise ValueError("divisor order k must be >= 2")
    primes = primes_upto(math.isqrt(hi))
    binom = _binomial_factors(k, hi)
    chunks = []
    a = lo
    while a <= hi:
        b = min(a + _SIEVE_CHUNK - 1, hi)
        chunks.append(_sieve_chunk(a, b, k, primes, binom))
        a = b + 1
    return DivisorTable(lo=lo, values=np.concatenate(chunks), k=k)


def _series_coeffs(constants: StieltjesConstants, order: int) -> list[float]:
    """Taylor coefficients of w*zeta(1+w) = 1 + g0*w - g1*w^2 + (g2/2)*w^3 - ..."""
    gam = constants.as_floats()
    g = [1.0]
    for n in range(1, order + 1):
        g.append((-1.0) ** (n - 1) * gam[n - 1] / math.factorial(n - 1))
    return g


def _series_power(g: list[float], k: int, order: int) -> list[float]:
    """Coefficients of g(w)^k truncated at w^order, fixed summation order."""
    acc = [1.0] + [0.0] * order
    for _ in range(k):
        nxt = [0.0] * (order + 1)
        for i in range(order + 1):
            s = 0.0
            for j in range(i + 1):
                s += acc[j] * g[i - j]
            nxt[i] = s
        acc = nxt
    return acc


def residue_polynomial(
    k: int,
    constants: StieltjesConstants = DEFAULT_STIELTJES,
    terms: int | None = None,
) -> LogPolynomial:
    """The degree-(k-1) polynomial q with Res_{s=1} zeta(s)^k x^{s-1} = q(log x).

    Writing s = 1+w, the residue is the w^(k-1) coefficient of
    (w*zeta(1+w))^k * x^w; expanding x^w = sum L^j w^j / j! gives
    q(L) = sum_j a_{k-1-j} L^j / j! with a_i the series coefficients of
    (w*zeta(1+w))^k. Raising `terms` beyond its default must not change
    the result (the extra coefficients never reach index k-1).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k - 2 >= len(constants.gamma):
        raise ValueError(
            f"residue of zeta^{k} needs gamma_0..gamma_{k-2}; "
            f"only {len(constants.gamma)} constants supplied"
        )
    order = max(k - 1, 0) if terms is None else terms
    if terms is not None and terms < k - 1:
        raise ValueError("series truncation shorter than the needed coefficient")
    g = _series_coeffs(constants, min(order, len(constants.gamma)))
    g += [0.0] * (order + 1 - len(g))
    a = _series_power(g, k, order)
    coeffs = tuple(a[k - 1 - j] / math.factorial(j) for j in range(k))
    return LogPolynomial(coeffs)


def summatory_polynomial(q: LogPolynomial) -> LogPolynomial:
    """P with d/dx [x * P(log x)] = q(log x), i.e. P + P' = q.

    x*P(log x) is then the main term of the summatory function whose
    density is q(log x).
    """
    c = list(q.coeffs)
    p = [0.0] * len(c)
    for m in range(len(c) - 1, -1, -1):
        p[m] = c[m] - (m + 1) * p[m + 1] if m + 1 < len(c) else c[m]
    return LogPolynomial(tuple(p))


@dataclass(frozen=True)
class BalancedSequence(Window):
    """f(n) = d_3(n) - p_2(log n) on the window ]N-H, 2N+H].

    lo = N-H+1 and len(values) = N+2H; adding back p_2(log n) must
    reconstruct the integer divisor values.
    """

    N: int
    H: int

    def __post_init__(self):
        if self.lo != self.N - self.H + 1:
            raise ValueError("window must start at N-H+1")
        if len(self.values) != self.N + 2 * self.H:
            raise ValueError("window must cover exactly ]N-H, 2N+H]")

    def truncated(self) -> np.ndarray:
        """The values on ]N, 2N], the base range of all spectral sums."""
        return self.slice(self.N, 2 * self.N)


def balanced_sequence(
    table: DivisorTable, poly: LogPolynomial, N: int, H: int
) -> BalancedSequence:
    """Pointwise d_k(n) - poly(log n) on ]N-H, 2N+H] from a covering table."""
    lo, hi = N - H + 1, 2 * N + H
    if not table.covers(lo, hi):
        raise ValueError(
            f"table [{table.lo}, {table.hi}] does not cover ]{N-H}, {2*N+H}]"
        )
    d = table.slice(lo - 1, hi).astype(np.float64)
    n = np.arange(lo, hi + 1, dtype=np.float64)
    vals = d - poly(np.log(n))
    return BalancedSequence(lo=lo, values=vals, N=N, H=H)


def balanced_window(N: int, H: int, k: int = 3,
                    constants: StieltjesConstants = DEFAULT_STIELTJES) -> BalancedSequence:
    """Sieve, build the residue polynomial, and subtract, in one step."""
    table = sieve_dk(max(N - H + 1, 1), 2 * N + H, k)
    return balanced_sequence(table, residue_polynomial(k, constants), N, H)


_MAGIC = b"DKT1"
_HEADER = struct.Struct("<4sqqi")  # magic, lo, length, k: 24 bytes


def save_table(table: DivisorTable, path) -> None:
    """Flat little-endian binary layout: 24-byte header then int64 values."""
    payload = _HEADER.pack(_MAGIC, table.lo, len(table.values), table.k)
    data = np.ascontiguousarray(table.values, dtype="<i8").tobytes()
    Path(path).write_bytes(payload + data)


def load_table(path) -> DivisorTable:
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size:
        raise ValueError(f"{path}: truncated table file")
    magic, lo, length, k = _HEADER.unpack_from(raw)
    if magic != _MAGIC:
        raise ValueError(f"{path}: not a divisor table file")
    if len(raw) != _HEADER.size + 8 * length:
        raise ValueError(f"{path}: length field does not match file size")
    values = np.frombuffer(raw, dtype="<i8", offset=_HEADER.size).astype(np.int64)
    return DivisorTable(lo=lo, values=values, k=k)
