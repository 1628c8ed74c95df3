# arrivals.py - Piecewise-constant arrival rate scale a(t) on [0, T].
# A(t) = integral of a over [t, T] is piecewise linear, so both A and its
# inverse are exact.

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from model.errors import DomainError, InvalidModelError


@dataclass(frozen=True)
class ArrivalRateSpec:
    """a(t) given as ordered (breakpoint, rate) pieces over [0, T].

    Piece j covers [pieces[j][0], pieces[j+1][0]) and the last piece runs to T.
    """

    pieces: tuple
    T: float
    _tail: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        try:
            horizon = float(self.T)
            pieces = tuple((float(t), float(r)) for t, r in self.pieces)
        except (TypeError, ValueError) as e:
            raise InvalidModelError(f"arrival rate pieces must be (time, rate) pairs: {e}") from None

        if not math.isfinite(horizon) or horizon <= 0:
            raise InvalidModelError(f"horizon T must be positive, got {self.T!r}")
        if not pieces:
            raise InvalidModelError("arrival rate needs at least one piece")
        if pieces[0][0] != 0.0:
            raise InvalidModelError(f"first breakpoint must be 0, got {pieces[0][0]}")

        for j, (t, r) in enumerate(pieces):
            if not (math.isfinite(t) and math.isfinite(r)):
                raise InvalidModelError(f"piece {j} is not finite: ({t}, {r})")
            if r < 0:
                raise InvalidModelError(f"piece {j} has negative rate {r}")
            if t >= horizon:
                raise InvalidModelError(f"piece {j} starts at {t}, not before T={horizon}")
            if j > 0 and t <= pieces[j - 1][0]:
                raise InvalidModelError(f"breakpoints must be strictly increasing (piece {j} at {t})")
        if not any(r > 0 for _, r in pieces):
            raise InvalidModelError("at least one piece must have a positive rate")

        # _tail[j] = A(start of piece j); _tail[-1] = A(T) = 0
        ends = [t for t, _ in pieces[1:]] + [horizon]
        tail = [0.0]
        for (start, rate), end in zip(reversed(pieces), reversed(ends)):
            tail.append(tail[-1] + rate * (end - start))
        tail.reverse()

        object.__setattr__(self, "T", horizon)
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "_tail", tuple(tail))

    @classmethod
    def constant(cls, rate, T=1.0):
        return cls(((0.0, rate),), T)

    @property
    def breakpoints(self):
        return np.array([t for t, _ in self.pieces])

    @property
    def rates(self):
        return np.array([r for _, r in self.pieces])

    @property
    def total_mass(self):
        """A(0), the integral of a over the whole horizon."""
        return self._tail[0]

    def _piece_index(self, t):
        j = int(np.searchsorted(self.breakpoints, t, side="right")) - 1
        return min(max(j, 0), len(self.pieces) - 1)

    def _piece_end(self, j):
        return self.pieces[j + 1][0] if j + 1 < len(self.pieces) else self.T

    def rate_at(self, t):
        """a(t); the last piece also covers t = T."""
        if not 0.0 <= t <= self.T:
            raise DomainError(f"t={t} is outside [0, {self.T}]")
        return self.pieces[self._piece_index(t)][1]

    def cumulative(self, t):
        return cumulative_arrivals(self, t)

    def scaled(self, k):
        """The same profile with every rate multiplied by k."""
        return ArrivalRateSpec(tuple((t, r * k) for t, r in self.pieces), self.T)

    def time_at_level(self, level):
        """Smallest t in [0, T] with A(t) == level.

        Args:
            level: target value of A, in [0, A(0)]

        Returns:
            The time t; exact up to floating point rounding.
        """
        if level < 0 or level > self._tail[0]:
            raise DomainError(f"level {level} is outside [0, {self._tail[0]}]")
        if level == self._tail[0]:
            return 0.0
        for j, (start, rate) in enumerate(self.pieces):
            a_start, a_end = self._tail[j], self._tail[j + 1]
            if rate > 0 and a_end <= level <= a_start:
                t = start + (a_start - level) / rate
                return min(max(t, start), self._piece_end(j))
        return self.T


def cumulative_arrivals(spec, t):
    """A(t) = integral of a(s) ds over [t, T], exact for piecewise-constant a.

    Raises:
        DomainError: if t is outside [0, T]
    """
    if not 0.0 <= t <= spec.T:
        raise DomainError(f"t={t} is outside [0, {spec.T}]")
    if t == spec.T:
        return 0.0
    j = spec._piece_index(t)
    rate = spec.pieces[j][1]
    return spec._tail[j + 1] + rate * (spec._piece_end(j) - t)


def comparable_arrival_rate(a2, w, q):
    """Arrival rate a1 = a2 * mu(w) / mu(q), giving equal demand lambda*mu.

    Args:
        a2: ArrivalRateSpec of the model with distribution w
        w:  order size distribution paired with a2
        q:  order size distribution of the model being constructed

    Returns:
        ArrivalRateSpec for the q model.
    """
    return a2.scaled(w.mean / q.mean)
