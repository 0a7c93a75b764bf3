"""Codeword and code types, distance/weight verification, systematic sets, file I/O.

Binary words are packed into Python ints: coordinate j (0-based, reading the
word left to right) is bit (length-1-j), so ``format(word, f"0{n}b")`` prints
the word in natural order.  q-ary words are tuples of symbol indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, TextIO, Union


class CodeError(ValueError):
    pass


# ---------- weight profiles ----------

@dataclass(frozen=True)
class WeightProfile:
    """Per-block (length, weight) constraints; block i must hold exactly w_i ones."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.parts:
            raise CodeError("profile needs at least one block")
        for n_i, w_i in self.parts:
            if n_i < 0 or not 0 <= w_i <= n_i:
                raise CodeError(f"invalid profile block ({n_i},{w_i})")

    @classmethod
    def homogeneous(cls, m: int, n: int, w: int) -> "WeightProfile":
        if m < 1:
            raise CodeError("profile needs at least one block")
        return cls(((n, w),) * m)

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def length(self) -> int:
        return sum(n_i for n_i, _ in self.parts)

    def is_homogeneous(self) -> bool:
        return len(set(self.parts)) == 1

    def describe(self) -> str:
        return ",".join(f"{n_i}:{w_i}" for n_i, w_i in self.parts)

    @classmethod
    def parse(cls, text: str) -> "WeightProfile":
        try:
            parts = tuple(
                (int(n_i), int(w_i))
                for n_i, w_i in (chunk.split(":") for chunk in text.split(","))
            )
        except ValueError as exc:
            raise CodeError(f"bad profile spec {text!r}") from exc
        return cls(parts)


def word_blocks(word: int, profile: WeightProfile) -> tuple[int, ...]:
    """Split a packed word into per-block ints, leftmost block first."""
    out = []
    remaining = profile.length
    for n_i, _ in profile.parts:
        remaining -= n_i
        out.append((word >> remaining) & ((1 << n_i) - 1))
    return tuple(out)


def word_from_blocks(blocks: Sequence[int], widths: Sequence[int]) -> int:
    word = 0
    for b, n_i in zip(blocks, widths):
        word = (word << n_i) | b
    return word


def block_weights(word: int, profile: WeightProfile) -> tuple[int, ...]:
    return tuple(b.bit_count() for b in word_blocks(word, profile))


def word_to_str(word: int, length: int) -> str:
    return format(word, f"0{length}b")


def word_from_str(text: str) -> int:
    if not text or set(text) - {"0", "1"}:
        raise CodeError(f"bad binary word {text!r}")
    return int(text, 2)


# ---------- distance ----------

Wordlike = Union[str, Sequence[int]]


def hamming_distance(u: Wordlike, v: Wordlike) -> int:
    """Number of differing positions; raises on length mismatch."""
    if len(u) != len(v):
        raise CodeError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u, v))


def hamming(u: int, v: int) -> int:
    """Distance between two packed binary words of equal length."""
    return (u ^ v).bit_count()


# ---------- codes ----------

@dataclass(frozen=True)
class BinaryCode:
    """A set of equal-length binary words with a claimed minimum distance.

    Words are stored sorted and deduplicated, giving canonical equality.
    """

    length: int
    words: tuple[int, ...]
    claimed_distance: int = 0
    profile: WeightProfile | None = None

    def __post_init__(self):
        if self.length < 0:
            raise CodeError("negative length")
        prev = -1
        for wd in self.words:
            if not 0 <= wd < (1 << self.length):
                raise CodeError(f"word {wd} out of range for length {self.length}")
            if wd <= prev:
                raise CodeError("words must be strictly increasing (sorted, distinct)")
            prev = wd
        if self.profile is not None and self.profile.length != self.length:
            raise CodeError("profile length does not match code length")

    @classmethod
    def from_words(
        cls,
        words: Iterable[int | str],
        length: int | None = None,
        claimed_distance: int = 0,
        profile: WeightProfile | None = None,
    ) -> "BinaryCode":
        packed = []
        for wd in words:
            if isinstance(wd, str):
                if length is None:
                    length = len(wd)
                elif len(wd) != length:
                    raise CodeError("mixed word lengths")
                packed.append(word_from_str(wd))
            else:
                packed.append(int(wd))
        if length is None:
            raise CodeError("length required when words are given as ints")
        packed.sort()
        for a, b in zip(packed, packed[1:]):
            if a == b:
                raise CodeError(f"duplicate word {word_to_str(a, length)}")
        return cls(length, tuple(packed), claimed_distance, profile)

    def __len__(self) -> int:
        return len(self.words)

    def word_strings(self) -> list[str]:
        return [word_to_str(wd, self.length) for wd in self.words]


@dataclass(frozen=True)
class QaryCode:
    """A set of equal-length words over the alphabet {0, ..., q-1}."""

    q: int
    length: int
    words: tuple[tuple[int, ...], ...]
    claimed_distance: int = 0

    def __post_init__(self):
        if self.q < 2:
            raise CodeError("alphabet size must be >= 2")
        prev = None
        for wd in self.words:
            if len(wd) != self.length:
                raise CodeError("mixed word lengths")
            if any(not 0 <= s < self.q for s in wd):
                raise CodeError(f"symbol out of range in {wd}")
            if prev is not None and wd <= prev:
                raise CodeError("words must be strictly increasing (sorted, distinct)")
            prev = wd

    @classmethod
    def from_words(
        cls, words: Iterable[Sequence[int]], q: int, length: int | None = None,
        claimed_distance: int = 0,
    ) -> "QaryCode":
        tup = sorted(tuple(int(s) for s in wd) for wd in words)
        for a, b in zip(tup, tup[1:]):
            if a == b:
                raise CodeError(f"duplicate word {a}")
        if length is None:
            if not tup:
                raise CodeError("length required for an empty code")
            length = len(tup[0])
        return cls(q, length, tuple(tup), claimed_distance)

    def __len__(self) -> int:
        return len(self.words)


Code = Union[BinaryCode, QaryCode]


# ---------- verification ----------

@dataclass(frozen=True)
class VerificationReport:
    min_distance: float  # exact minimum pairwise distance; +inf if < 2 words
    claimed_distance: int
    profile_violations: tuple[tuple[int, int, int, int], ...]  # (word, block, got, want)
    closest_pair: tuple[int, int] | None
    passed: bool

    def summary(self) -> str:
        md = "inf" if math.isinf(self.min_distance) else str(int(self.min_distance))
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} min_distance={md} claimed={self.claimed_distance} "
            f"profile_violations={len(self.profile_violations)}"
        )


def verify_code(code: Code) -> VerificationReport:
    """Exhaustively verify distance claim and (for binary codes) profile weights."""
    if len(code.words) == 0:
        raise CodeError("cannot verify an empty code")

    violations: list[tuple[int, int, int, int]] = []
    if isinstance(code, BinaryCode) and code.profile is not None:
        for wi, wd in enumerate(code.words):
            for bi, (got, (_, want)) in enumerate(
                zip(block_weights(wd, code.profile), code.profile.parts)
            ):
                if got != want:
                    violations.append((wi, bi, got, want))

    min_dist: float = math.inf
    closest = None
    if isinstance(code, BinaryCode):
        words = code.words
        for i in range(len(words)):
            wi = words[i]
            for j in range(i + 1, len(words)):
                d = (wi ^ words[j]).bit_count()
                if d < min_dist:
                    min_dist, closest = d, (i, j)
    else:
        words = code.words
        for i in range(len(words)):
            wi = words[i]
            for j in range(i + 1, len(words)):
                d = sum(a != b for a, b in zip(wi, words[j]))
                if d < min_dist:
                    min_dist, closest = d, (i, j)

    passed = min_dist >= code.claimed_distance and not violations
    return VerificationReport(min_dist, code.claimed_distance, tuple(violations), closest, passed)


# ---------- systematic sets ----------

def find_systematic_set(code: BinaryCode) -> tuple[int, ...] | None:
    """Lexicographically first k-subset of coordinates on which the code hits all 2^k patterns.

    Requires |code| = 2^k.  Returns 0-based coordinate indices, or None.
    Coordinates that are constant across the code are pruned up front: they can
    never appear in a systematic set.
    """
    size = len(code.words)
    if size == 0 or size & (size - 1):
        raise CodeError(f"code size {size} is not a power of two")
    k = size.bit_length() - 1
    if k == 0:
        return ()
    n = code.length
    if k > n:
        return None

    ones = 0
    zeros = 0
    for wd in code.words:
        ones |= wd
        zeros |= ((1 << n) - 1) ^ wd
    varying = [j for j in range(n) if (ones >> (n - 1 - j)) & 1 and (zeros >> (n - 1 - j)) & 1]
    if len(varying) < k:
        return None

    for coords in combinations(varying, k):
        shifts = [n - 1 - j for j in coords]
        seen = set()
        for wd in code.words:
            pattern = 0
            for s in shifts:
                pattern = (pattern << 1) | ((wd >> s) & 1)
            seen.add(pattern)
        if len(seen) == size:
            return coords
    return None


def restriction(word: int, length: int, coords: Sequence[int]) -> int:
    """Pattern obtained by reading the given coordinates of a packed word."""
    pattern = 0
    for j in coords:
        pattern = (pattern << 1) | ((word >> (length - 1 - j)) & 1)
    return pattern


# ---------- file format ----------
#
#   # code q=<q> len=<N> d=<d> profile=<n1:w1,...|none>
#   <word per line: binary digits for q=2, comma-separated symbols otherwise>
#
# Extra comment lines (provenance, manifest) may precede or follow the header.

def code_write(f: TextIO, code: Code, extra_comments: Sequence[str] = ()) -> None:
    for line in extra_comments:
        f.write(f"# {line}\n")
    if isinstance(code, BinaryCode):
        prof = code.profile.describe() if code.profile is not None else "none"
        f.write(f"# code q=2 len={code.length} d={code.claimed_distance} profile={prof}\n")
        for wd in code.words:
            f.write(word_to_str(wd, code.length) + "\n")
    else:
        f.write(f"# code q={code.q} len={code.length} d={code.claimed_distance} profile=none\n")
        for wd in code.words:
            f.write(",".join(str(s) for s in wd) + "\n")


def code_read(f: TextIO) -> Code:
    header = None
    body: list[str] = []
    for raw in f:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            stripped = line[1:].strip()
            if stripped.startswith("code ") and header is None:
                header = stripped[5:]
            continue
        body.append(line)
    if header is None:
        raise CodeError("missing '# code ...' header line")

    fields = {}
    for chunk in header.split():
        key, _, val = chunk.partition("=")
        if not val:
            raise CodeError(f"malformed header field {chunk!r}")
        fields[key] = val
    try:
        q = int(fields["q"])
        length = int(fields["len"])
        d = int(fields["d"])
    except (KeyError, ValueError) as exc:
        raise CodeError(f"malformed header {header!r}") from exc
    profile = None
    if fields.get("profile", "none") != "none":
        profile = WeightProfile.parse(fields["profile"])

    if q == 2:
        for line in body:
            if len(line) != length:
                raise CodeError(f"word {line!r} does not have length {length}")
        return BinaryCode.from_words(body, length, d, profile)
    words = []
    for line in body:
        try:
            words.append(tuple(int(s) for s in line.split(",")))
        except ValueError as exc:
            raise CodeError(f"bad symbol line {line!r}") from exc
        if len(words[-1]) != length:
            raise CodeError(f"word {line!r} does not have length {length}")
    return QaryCode.from_words(words, q, length, d)


def code_write_path(path, code: Code, extra_comments: Sequence[str] = ()) -> None:
    with open(path, "w") as f:
        code_write(f, code, extra_comments)


def code_read_path(path) -> Code:
    with open(path) as f:
        return code_read(f)
