"""Loop-PUF delay simulation: challenge-response generation and reliability sweeps.

The device is an m x n grid of delay elements.  Element (i, j) under control
bit b contributes mu[i, b] + eps[i, j, b]: a row-and-bit average delay shared
by all devices plus a device-specific offset drawn once at manufacture.  The
measured delay of a control word is the sum over all elements, optionally
with per-measurement Gaussian noise.

Model delays are quantized to a dyadic grid (multiples of 2^-30) at device
creation, so every noise-free sum is exact in double precision regardless of
summation order: statements like "the deterministic delay difference is
exactly zero" are then bit-level facts, not tolerance checks.

Randomness uses the counter-based Philox generator with explicit seeds; all
per-pair measurement streams are spawned deterministically, so results do not
depend on evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .codes import BinaryCode, CodeError, word_blocks

QUANTUM = 2.0**-30


class ModelError(ValueError):
    pass


def _rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def _quantize(x: np.ndarray) -> np.ndarray:
    return np.round(np.asarray(x, dtype=float) / QUANTUM) * QUANTUM


@dataclass(frozen=True)
class DelayModel:
    """One simulated device: shared row means plus device-specific offsets."""

    mu: np.ndarray  # (m, 2): average delay of a row element under bit 0 / bit 1
    eps: np.ndarray  # (m, n, 2): per-element offsets, fixed for the device lifetime
    noise_sigma: float  # default per-measurement noise scale
    seed: int

    @property
    def m(self) -> int:
        return self.mu.shape[0]

    @property
    def n(self) -> int:
        return self.eps.shape[1]


def device_new(
    m: int,
    n: int,
    mu_spec=1.0,
    s_eps: float = 1e-3,
    seed: int = 0,
    noise_sigma: float = 0.0,
) -> DelayModel:
    """Draw one device.  mu_spec is deterministic: a scalar, a (mu0, mu1) pair,
    or a full (m, 2) array; eps is seed-dependent with scale s_eps."""
    if m < 1 or n < 1:
        raise ModelError(f"bad grid {m} x {n}")
    if s_eps < 0 or noise_sigma < 0:
        raise ModelError("scales must be nonnegative")
    spec = np.asarray(mu_spec, dtype=float)
    if spec.ndim == 0:
        mu = np.full((m, 2), float(spec))
    elif spec.shape == (2,):
        mu = np.tile(spec, (m, 1))
    elif spec.shape == (m, 2):
        mu = spec.copy()
    else:
        raise ModelError(f"mu_spec shape {spec.shape} not scalar, (2,) or ({m}, 2)")
    eps = _rng(seed).normal(0.0, 1.0, size=(m, n, 2)) * s_eps if s_eps > 0 else np.zeros((m, n, 2))
    model = DelayModel(_quantize(mu), _quantize(eps), float(noise_sigma), int(seed))
    model.mu.setflags(write=False)
    model.eps.setflags(write=False)
    return model


def word_matrix(dev: DelayModel, code: BinaryCode, word: int) -> np.ndarray:
    """Control word as an (m, n) 0/1 array; the code blocks must match the grid."""
    if code.profile is None:
        raise CodeError("code carries no weight profile")
    if code.profile.m != dev.m or any(n_i != dev.n for n_i, _ in code.profile.parts):
        raise ModelError(
            f"code profile {code.profile.describe()} does not fit a {dev.m} x {dev.n} device"
        )
    rows = word_blocks(word, code.profile)
    return np.array(
        [[(row >> (dev.n - 1 - j)) & 1 for j in range(dev.n)] for row in rows],
        dtype=np.intp,
    )


def measure_delay(
    dev: DelayModel,
    bits: np.ndarray,
    noisy: bool = False,
    rng: np.random.Generator | None = None,
) -> float:
    """Total delay of a control word: sum of mu[i, b] + eps[i, j, b] over the grid."""
    bits = np.asarray(bits)
    if bits.shape != (dev.m, dev.n):
        raise ModelError(f"control word shape {bits.shape} != ({dev.m}, {dev.n})")
    rows = np.arange(dev.m)[:, None]
    cols = np.arange(dev.n)[None, :]
    total = float(np.sum(dev.mu[rows, bits] + dev.eps[rows, cols, bits]))
    if noisy:
        if rng is None:
            raise ModelError("noisy measurement needs an explicit generator")
        total += rng.normal(0.0, dev.noise_sigma)
    return total


def mu_delay(dev: DelayModel, row_weights: Sequence[int]) -> float:
    """Deterministic part of the delay: sum of (n-w_i)*mu_i(0) + w_i*mu_i(1)."""
    if len(row_weights) != dev.m:
        raise ModelError(f"expected {dev.m} row weights, got {len(row_weights)}")
    total = 0.0
    for i, w_i in enumerate(row_weights):
        total += (dev.n - w_i) * dev.mu[i, 0] + w_i * dev.mu[i, 1]
    return total


def deterministic_difference(dev: DelayModel, bits_u: np.ndarray, bits_v: np.ndarray) -> float:
    """mu-part of D(u) - D(v): exactly 0 whenever u and v share row weights."""
    wu = [int(x) for x in np.asarray(bits_u).sum(axis=1)]
    wv = [int(x) for x in np.asarray(bits_v).sum(axis=1)]
    return mu_delay(dev, wu) - mu_delay(dev, wv)


@dataclass(frozen=True)
class ChallengeResponse:
    u_index: int
    v_index: int
    response: int | None  # +1 / -1, or None for an unusable (tied) pair
    usable: bool


def generate_crps(dev: DelayModel, code: BinaryCode) -> list[ChallengeResponse]:
    """All |C|(|C|-1) ordered pairs with noise-free reference responses.

    Exact zero differences are flagged unusable instead of being signed; a
    real enrollment would discard such pairs.
    """
    delays = [
        measure_delay(dev, word_matrix(dev, code, wd), noisy=False) for wd in code.words
    ]
    out = []
    for i in range(len(delays)):
        for j in range(len(delays)):
            if i == j:
                continue
            diff = delays[i] - delays[j]
            if diff == 0.0:
                out.append(ChallengeResponse(i, j, None, False))
            else:
                out.append(ChallengeResponse(i, j, 1 if diff > 0 else -1, True))
    return out


@dataclass(frozen=True)
class PairReliability:
    pair_index: int
    u_index: int
    v_index: int
    distance: int
    usable: bool
    flip_rate: float


@dataclass(frozen=True)
class SweepResult:
    pairs: tuple[PairReliability, ...]
    bucket_means: dict[int, float]  # distance -> mean flip rate over usable pairs
    noise_sigma: float
    trials: int
    seed: int


def reliability_sweep(
    dev: DelayModel,
    code: BinaryCode,
    noise_sigma: float,
    trials: int,
    seed: int = 0,
) -> SweepResult:
    """Monte-Carlo flip rates per unordered pair, bucketed by Hamming distance.

    Each trial re-measures both words with independent noise and compares the
    sign against the noise-free reference.  Pair streams are spawned from the
    root seed, so the result is independent of iteration order.
    """
    if trials < 1:
        raise ModelError("need at least one trial")
    if noise_sigma < 0:
        raise ModelError("noise must be nonnegative")
    words = code.words
    matrices = [word_matrix(dev, code, wd) for wd in words]
    delays = [measure_delay(dev, mat, noisy=False) for mat in matrices]

    pair_list = list(combinations(range(len(words)), 2))
    streams = np.random.SeedSequence(seed).spawn(len(pair_list))
    pairs = []
    sums: dict[int, list[float]] = {}
    for idx, (i, j) in enumerate(pair_list):
        dist = (words[i] ^ words[j]).bit_count()
        ref = delays[i] - delays[j]
        if ref == 0.0:
            pairs.append(PairReliability(idx, i, j, dist, False, float("nan")))
            continue
        if noise_sigma == 0.0:
            flip_rate = 0.0
        else:
            rng = np.random.Generator(np.random.Philox(streams[idx]))
            noise = rng.normal(0.0, noise_sigma, size=(2, trials))
            noisy = ref + noise[0] - noise[1]
            flip_rate = float(np.count_nonzero(np.sign(noisy) != np.sign(ref))) / trials
        pairs.append(PairReliability(idx, i, j, dist, True, flip_rate))
        sums.setdefault(dist, []).append(flip_rate)

    bucket_means = {dist: float(np.mean(rates)) for dist, rates in sorted(sums.items())}
    return SweepResult(tuple(pairs), bucket_means, noise_sigma, trials, seed)


# ---------- device files (JSON, round-trip exact via repr floats) ----------

def device_save(path, dev: DelayModel) -> None:
    import json

    payload = {
        "m": dev.m,
        "n": dev.n,
        "mu": dev.mu.tolist(),
        "eps": dev.eps.tolist(),
        "noise_sigma": dev.noise_sigma,
        "seed": dev.seed,
    }
    with open(path, "w") as f:
        json.dump(payload, f)


def device_load(path) -> DelayModel:
    import json

    with open(path) as f:
        payload = json.load(f)
    mu = np.array(payload["mu"], dtype=float)
    eps = np.array(payload["eps"], dtype=float)
    if mu.shape != (payload["m"], 2) or eps.shape != (payload["m"], payload["n"], 2):
        raise ModelError("device file shapes are inconsistent")
    model = DelayModel(mu, eps, float(payload["noise_sigma"]), int(payload["seed"]))
    model.mu.setflags(write=False)
    model.eps.setflags(write=False)
    return model
