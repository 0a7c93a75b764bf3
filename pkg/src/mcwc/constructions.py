"""Lower-bound constructions for multiply constant-weight codes.

Every constructor returns a ConstructionResult whose code has been verified
exhaustively against its guaranteed distance and weight profile; a failed
verification is an internal bug and raises.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import product

from .codes import (
    BinaryCode,
    CodeError,
    QaryCode,
    VerificationReport,
    WeightProfile,
    find_systematic_set,
    restriction,
    verify_code,
    word_blocks,
)
from .gf import Field, field_for_order, prime_power


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionResult:
    code: BinaryCode
    guaranteed_distance: int
    provenance: str
    report: VerificationReport

    @property
    def size(self) -> int:
        return len(self.code.words)


def _finish(words, length, guaranteed, profile, provenance, expected_size) -> ConstructionResult:
    code = BinaryCode.from_words(words, length, guaranteed, profile)
    if len(code.words) != expected_size:
        raise AssertionError(
            f"{provenance}: built {len(code.words)} words, expected {expected_size}"
        )
    report = verify_code(code)
    if not report.passed:
        raise AssertionError(f"{provenance}: verification failed: {report.summary()}")
    return ConstructionResult(code, guaranteed, provenance, report)


def _require_verified(code, what: str) -> VerificationReport:
    report = verify_code(code)
    if not report.passed:
        raise ConstructionError(f"{what} fails verification: {report.summary()}")
    return report


def _cwc_params(code: BinaryCode, what: str) -> tuple[int, int]:
    """(n, w) of a constant-weight ingredient; its profile must be a single block."""
    if code.profile is None or code.profile.m != 1:
        raise ConstructionError(f"{what} must carry a single-block weight profile")
    return code.profile.parts[0]


# ---------- concatenation ----------

def concatenate(outer: QaryCode, inner: BinaryCode) -> ConstructionResult:
    """Map outer symbols through an injection into inner codewords.

    The injection is fixed: symbol i goes to the i-th smallest inner word.
    Output distance is guaranteed >= d_inner * d_outer.
    """
    _require_verified(outer, "outer code")
    _require_verified(inner, "inner code")
    n, w = _cwc_params(inner, "inner code")
    if len(inner.words) < outer.q:
        raise ConstructionError(
            f"inner code has {len(inner.words)} words, need >= q = {outer.q}"
        )
    m = outer.length
    guaranteed = inner.claimed_distance * outer.claimed_distance
    words = []
    for symbols in outer.words:
        word = 0
        for s in symbols:
            word = (word << n) | inner.words[s]
        words.append(word)
    profile = WeightProfile.homogeneous(m, n, w)
    prov = f"concatenation(outer=({m},{outer.claimed_distance})_{outer.q}, inner=cwc({n},{inner.claimed_distance},{w}))"
    return _finish(words, m * n, guaranteed, profile, prov, len(outer.words))


# ---------- pseudo-product ----------

def _systematic_encoder(code: BinaryCode, what: str):
    """Return (k, encode) where encode(pattern) is the codeword restricting to pattern."""
    coords = find_systematic_set(code)
    if coords is None:
        raise ConstructionError(f"{what} is not systematic")
    k = len(coords)
    table = {restriction(wd, code.length, coords): wd for wd in code.words}
    return k, table.__getitem__


def pseudo_product(cwc: BinaryCode, sys: BinaryCode) -> ConstructionResult:
    """Row/column systematic encoding of all k2-by-k1 information matrices.

    Columns of the information matrix are encoded through `sys` (length m),
    then each of the m resulting rows is encoded through `cwc` (length n,
    weight w), giving an m-by-n matrix of constant row weight w.  Produces
    2^(k1*k2) codewords at distance >= d1*d2.
    """
    _require_verified(cwc, "constant-weight ingredient")
    _require_verified(sys, "systematic ingredient")
    n, w = _cwc_params(cwc, "constant-weight ingredient")
    k1, encode_row = _systematic_encoder(cwc, "constant-weight ingredient")
    k2, encode_col = _systematic_encoder(sys, "systematic ingredient")
    m = sys.length
    guaranteed = cwc.claimed_distance * sys.claimed_distance

    words = []
    for info_cols in product(range(1 << k2), repeat=k1):
        # Encode each column, then read off the m rows as k1-bit patterns.
        cols = [encode_col(c) for c in info_cols]
        word = 0
        for i in range(m):
            row_pattern = 0
            for col in cols:
                row_pattern = (row_pattern << 1) | ((col >> (m - 1 - i)) & 1)
            word = (word << n) | encode_row(row_pattern)
        words.append(word)

    profile = WeightProfile.homogeneous(m, n, w)
    prov = f"pseudo-product(cwc({n},{cwc.claimed_distance},{w})^2^{k1} x sys({m},{sys.claimed_distance})^2^{k2})"
    return _finish(words, m * n, guaranteed, profile, prov, 1 << (k1 * k2))


# ---------- complement extension ----------

def complement_extend(code: BinaryCode) -> ConstructionResult:
    """{(x, complement(x))}: doubles length and distance, weight becomes n."""
    _require_verified(code, "ingredient")
    if find_systematic_set(code) is None:
        raise ConstructionError("ingredient is not systematic")
    n = code.length
    mask = (1 << n) - 1
    words = [(wd << n) | (mask ^ wd) for wd in code.words]
    profile = WeightProfile.homogeneous(1, 2 * n, n)
    prov = f"complement-extend(({n},{code.claimed_distance}) systematic)"
    return _finish(words, 2 * n, 2 * code.claimed_distance, profile, prov, len(code.words))


# ---------- append extension ----------

def append_extend(k: int, cwc: BinaryCode) -> ConstructionResult:
    """{(x, complement(x), phi(x))} over all k-bit x, phi injective into cwc.

    phi maps the i-th k-bit pattern to the i-th smallest cwc word.  The result
    is a systematic constant-weight code with information set the first k
    coordinates, length n+2k, weight w+k, distance d+2.
    """
    if k < 0:
        raise ConstructionError("k must be >= 0")
    _require_verified(cwc, "constant-weight ingredient")
    n, w = _cwc_params(cwc, "constant-weight ingredient")
    if len(cwc.words) < (1 << k):
        raise ConstructionError(f"need at least 2^{k} codewords, have {len(cwc.words)}")
    mask = (1 << k) - 1
    words = [
        (x << (k + n)) | ((mask ^ x) << n) | cwc.words[x] for x in range(1 << k)
    ]
    profile = WeightProfile.homogeneous(1, n + 2 * k, w + k)
    prov = f"append-extend(k={k}, cwc({n},{cwc.claimed_distance},{w}))"
    return _finish(words, n + 2 * k, cwc.claimed_distance + 2, profile, prov, 1 << k)


# ---------- q-ary expansion ----------

def qary_expand(code: QaryCode, w: int) -> ConstructionResult:
    """Replace each symbol by its length-q indicator; group w symbols per block.

    An (L, d)_q code with L = m*w becomes an m-block binary code with blocks of
    length q*w and weight w, at distance >= 2d.
    """
    _require_verified(code, "q-ary code")
    if w < 1 or code.length % w:
        raise ConstructionError(f"length {code.length} not divisible by block weight {w}")
    q = code.q
    m = code.length // w
    words = []
    for symbols in code.words:
        word = 0
        for s in symbols:
            word = (word << q) | (1 << (q - 1 - s))
        words.append(word)
    profile = WeightProfile.homogeneous(m, q * w, w)
    prov = f"qary-expand(({code.length},{code.claimed_distance})_{q}, w={w})"
    return _finish(words, m * w * q, 2 * code.claimed_distance, profile, prov, len(code.words))


def qary_collapse(result_code: BinaryCode) -> QaryCode:
    """Inverse of qary_expand for w=1: read each block as one symbol indicator."""
    if result_code.profile is None:
        raise ConstructionError("need a weight profile to collapse")
    parts = result_code.profile.parts
    if any(w_i != 1 for _, w_i in parts):
        raise ConstructionError("collapse requires block weight 1")
    q = parts[0][0]
    if any(n_i != q for n_i, _ in parts):
        raise ConstructionError("collapse requires equal block lengths")
    words = []
    for wd in result_code.words:
        # An indicator block for symbol s is 1 << (q-1-s).
        symbols = tuple(q - b.bit_length() for b in word_blocks(wd, result_code.profile))
        words.append(symbols)
    return QaryCode.from_words(words, q, len(parts), result_code.claimed_distance // 2)


# ---------- Reed-Solomon ----------

def reed_solomon(field: Field, length: int, d: int) -> QaryCode:
    """Evaluation code of all polynomials of degree < length-d+1 over GF(q).

    Evaluation points are the first `length` elements in canonical field order;
    length q+1 is allowed, adding the coefficient of x^(k-1) as an extra
    coordinate (singly-extended code).  The code is MDS: minimum distance is
    verified to be exactly d via the minimum weight of the (linear) code.
    """
    q = field.q
    if not 1 <= d <= length:
        raise ConstructionError(f"need 1 <= d <= length, got d={d}, length={length}")
    if length > q + 1:
        raise ConstructionError(f"length {length} exceeds q+1 = {q + 1}")
    k = length - d + 1
    extended = length == q + 1
    points = [field.element(i) for i in range(min(length, q))]

    words = []
    for msg_idx in product(range(q), repeat=k):
        coeffs = [field.element(i) for i in msg_idx]  # little-endian polynomial
        symbols = []
        for x in points:
            acc = field.zero()
            for c in reversed(coeffs):  # Horner
                acc = field.add(field.mul(acc, x), c)
            symbols.append(field.index(acc))
        if extended:
            symbols.append(field.index(coeffs[-1]))
        words.append(tuple(symbols))

    code = QaryCode.from_words(words, q, length, d)
    # Linear code: min distance == min weight of a nonzero codeword.
    min_wt = min(
        (sum(s != 0 for s in wd) for wd in code.words if any(wd)), default=math.inf
    )
    if k >= 1 and min_wt != d:
        raise AssertionError(f"RS({length},{k})_{q}: min weight {min_wt} != {d}")
    return code


def rs_mcwc(m: int, n: int, d: int, w: int) -> ConstructionResult:
    """Reed-Solomon + q-ary expansion targeting an m x n, distance-d, weight-w cell.

    Needs w | n, q = n/w a prime power >= m*w - 1, and even d with
    1 <= d/2 <= m*w.  Yields q^(m*w - d/2 + 1) codewords.
    """
    if d % 2:
        raise ConstructionError("target distance must be even")
    if w < 1 or n % w:
        raise ConstructionError(f"block weight {w} must divide block length {n}")
    q = n // w
    mw = m * w
    if q < 2 or prime_power(q) is None:
        raise ConstructionError(f"n/w = {q} is not a prime power")
    if q < mw - 1:
        raise ConstructionError(f"alphabet q={q} too small for length {mw}")
    if not 1 <= d // 2 <= mw:
        raise ConstructionError(f"no Reed-Solomon code of length {mw} and distance {d // 2}")
    field = field_for_order(q)
    rs = reed_solomon(field, mw, d // 2)
    result = qary_expand(rs, w)
    prov = f"rs-expand(q={q}, len={mw}, d={d // 2}, w={w})"
    return ConstructionResult(result.code, d, prov, result.report)


# ---------- builtin ingredient catalog ----------

def _rm1(r: int) -> BinaryCode:
    """First-order Reed-Muller code [2^r, r+1, 2^(r-1)] as a word set."""
    n = 1 << r
    gens = [(1 << n) - 1]  # all-ones row
    for bit in range(r):
        row = 0
        for j in range(n):
            row = (row << 1) | ((j >> (r - 1 - bit)) & 1)
        gens.append(row)
    words = set()
    for mask in range(1 << len(gens)):
        wd = 0
        for i, g in enumerate(gens):
            if (mask >> i) & 1:
                wd ^= g
        words.add(wd)
    return BinaryCode.from_words(sorted(words), n, n // 2)


def _parity(n: int) -> BinaryCode:
    words = [wd for wd in range(1 << n) if wd.bit_count() % 2 == 0]
    return BinaryCode.from_words(words, n, 2)


_FIXED_CATALOG = {
    # Systematic constant-weight code of distance 2 on 4 coordinates.
    "cwc-4-2-2": lambda: BinaryCode.from_words(
        ["0011", "0101", "1010", "1100"], 4, 2, WeightProfile.homogeneous(1, 4, 2)
    ),
    "cwc-2-2-1": lambda: BinaryCode.from_words(
        ["01", "10"], 2, 2, WeightProfile.homogeneous(1, 2, 1)
    ),
    # Dimension-2 distance-4 linear code of length 6.
    "lin-6-2-4": lambda: BinaryCode.from_words(
        ["000000", "111100", "001111", "110011"], 6, 4
    ),
}

_PARAM_CATALOG = (
    (re.compile(r"rep-(\d+)$"), lambda n: BinaryCode.from_words([0, (1 << n) - 1], n, n)),
    (re.compile(r"parity-(\d+)$"), _parity),
    (re.compile(r"full-(\d+)$"), lambda n: BinaryCode.from_words(range(1 << n), n, 1)),
    (re.compile(r"rm1-(\d+)$"), _rm1),
)

_ALIASES = {"lin-4-3-2": "rm1-2", "lin-8-4-4": "rm1-3"}


def builtin_code(name: str) -> BinaryCode:
    """Look up a catalog ingredient by name (e.g. cwc-4-2-2, rep-3, rm1-3)."""
    name = _ALIASES.get(name, name)
    if name in _FIXED_CATALOG:
        return _FIXED_CATALOG[name]()
    for pattern, make in _PARAM_CATALOG:
        match = pattern.match(name)
        if match:
            arg = int(match.group(1))
            if arg < 1:
                break
            return make(arg)
    raise CodeError(f"unknown builtin code {name!r}")


def builtin_names() -> list[str]:
    return sorted(_FIXED_CATALOG) + ["rep-N", "parity-N", "full-N", "rm1-R"] + sorted(_ALIASES)


# ---------- ingredient pools for bound tables ----------

def systematic_binary_pool(m: int) -> list[BinaryCode]:
    """Verified systematic (m, d) ingredient codes of length m."""
    out = [builtin_code(f"full-{m}"), builtin_code(f"rep-{m}")]
    if m >= 2:
        out.append(builtin_code(f"parity-{m}"))
    if m >= 2 and m & (m - 1) == 0:
        out.append(builtin_code(f"rm1-{m.bit_length() - 1}"))
    if m == 6:
        out.append(builtin_code("lin-6-2-4"))
    return out


def systematic_cwc_pool(n: int, w: int, *, size_cap: int = 512) -> list[BinaryCode]:
    """Verified systematic constant-weight (n, d, w) ingredient codes."""
    out = []
    if (n, w) == (4, 2):
        out.append(builtin_code("cwc-4-2-2"))
    if (n, w) == (2, 1):
        out.append(builtin_code("cwc-2-2-1"))
    if n == 2 * w and w >= 1:
        for base in systematic_binary_pool(w):
            if len(base.words) <= size_cap:
                out.append(complement_extend(base).code)
    # Append extension of the small fixed constant-weight ingredients.
    for base_name in ("cwc-2-2-1", "cwc-4-2-2"):
        base = _FIXED_CATALOG[base_name]()
        bn, bw = base.profile.parts[0]
        k = w - bw
        if k >= 0 and n == bn + 2 * k and len(base.words) >= (1 << k) and (1 << k) <= size_cap:
            out.append(append_extend(k, base).code)
    return out
