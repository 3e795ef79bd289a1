"""
Monte Carlo estimates of Haar-unitary moments.

Samples come from the QR factorization of a complex Ginibre matrix with the
phases of diag(R) moved into Q, which makes the factorization unique and the
distribution of Q exactly Haar.
"""
import math
import typing
import logging

import numpy as np

from .concurrency import parallel_map
from .config import Config
from .models import MomentEstimate, MomentQuery

__all__ = ["haar_sample", "haar_batch", "mc_moment"]

logger = logging.getLogger(__name__)

# unitaries drawn per vectorized QR call
BATCH = 4096


def haar_batch(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """`size` independent Haar unitaries, shape (size, n, n)"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    z = (
        rng.standard_normal((size, n, n)) + 1j * rng.standard_normal((size, n, n))
    ) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diagonal = np.diagonal(r, axis1=-2, axis2=-1)
    # scale column c of q by the phase of r[c, c]
    return q * (diagonal / np.abs(diagonal))[..., np.newaxis, :]


def haar_sample(n: int, rng: np.random.Generator) -> np.ndarray:
    return haar_batch(n, 1, rng)[0]


def _monomial(unitaries: np.ndarray, query: MomentQuery) -> np.ndarray:
    values = np.ones(unitaries.shape[0], dtype=complex)
    for a, b in zip(query.i, query.j):
        values *= unitaries[:, a - 1, b - 1]
    for a, b in zip(query.k, query.l):
        values *= np.conj(unitaries[:, a - 1, b - 1])
    return values


class _Partial(typing.NamedTuple):
    count: int
    total: complex
    # sum of |value|^2, enough for the variance of a complex mean
    squares: float


def _run_stream(
    query: MomentQuery, seed: np.random.SeedSequence, samples: int
) -> _Partial:
    rng = np.random.default_rng(seed)
    total, squares, done = 0j, 0.0, 0
    while done < samples:
        size = min(BATCH, samples - done)
        values = _monomial(haar_batch(typing.cast(int, query.n), size, rng), query)
        total += complex(values.sum())
        squares += float(np.sum(np.abs(values) ** 2))
        done += size
    logger.debug(f"stream {seed.spawn_key}: {samples} samples")
    return _Partial(samples, total, squares)


def mc_moment(
    query: MomentQuery,
    samples: typing.Optional[int] = None,
    seed: typing.Optional[int] = None,
    streams: typing.Optional[int] = None,
    workers: typing.Optional[int] = None,
) -> MomentEstimate:
    """
    sample mean of the monomial and its standard error. The master seed is
    split into `streams` substreams whose partial sums are merged in stream
    order, so the estimate only depends on (seed, samples, streams, query).
    """
    config = Config()
    samples = config.SAMPLES if samples is None else samples
    seed = config.SEED if seed is None else seed
    streams = config.MC_STREAMS if streams is None else streams
    workers = config.WORKERS if workers is None else workers
    if query.n is None:
        raise ValueError("Monte Carlo needs a concrete n.")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}.")

    streams = max(1, min(streams, samples))
    sizes = [samples // streams + (1 if s < samples % streams else 0) for s in range(streams)]
    children = np.random.SeedSequence(seed).spawn(streams)
    partials = parallel_map(
        lambda job: _run_stream(query, *job), list(zip(children, sizes)), workers
    )

    total = sum((partial.total for partial in partials), 0j)
    squares = sum(partial.squares for partial in partials)
    mean = total / samples
    if samples > 1:
        variance = max(squares - samples * abs(mean) ** 2, 0.0) / (samples - 1)
        stderr = math.sqrt(variance / samples)
    else:
        stderr = math.inf
    return MomentEstimate(
        mean_re=mean.real, mean_im=mean.imag, stderr=stderr, samples=samples, seed=seed
    )
