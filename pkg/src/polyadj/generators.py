"""Instance generators: named families and seeded random lattice polytopes."""

from __future__ import annotations

from .errors import LowerDimensionalError
from .polytope import HPolytope, from_inequalities, from_vertices

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator (splitmix64 finalizer over a Weyl
    sequence). Chosen for reproducibility: the whole state is one word and
    the outputs are platform independent, so seeded census runs can be
    replayed exactly."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], by rejection to avoid modulo bias."""
        if hi < lo:
            raise ValueError("empty range")
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            r = self.next_u64()
            if r < limit:
                return lo + r % span


def fig1() -> HPolytope:
    """The running pentagon: x, y >= 0, x - y <= 4, y <= 3, x <= 5."""
    return from_inequalities([
        ((0, -1), 0),
        ((-1, 0), 0),
        ((1, -1), 4),
        ((0, 1), 3),
        ((1, 0), 5),
    ])


def cube(d: int) -> HPolytope:
    """The unit cube [0, 1]^d."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    rows = []
    for j in range(d):
        e = tuple(1 if k == j else 0 for k in range(d))
        rows.append((e, 1))
        rows.append((tuple(-x for x in e), 0))
    return from_inequalities(rows)


def scaled_simplex(d: int, a: int) -> HPolytope:
    """conv(0, a e_1, e_2, ..., e_d) for integers d >= 1, a >= 1."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if a < 1:
        raise ValueError("scale must be at least 1")
    points = [tuple(0 for _ in range(d)),
              tuple(a if k == 0 else 0 for k in range(d))]
    for j in range(1, d):
        points.append(tuple(1 if k == j else 0 for k in range(d)))
    return from_vertices(points)


def random_lattice_polytope(d: int, n_points: int, seed: int, box: int = 5) -> HPolytope:
    """Hull of n_points uniform lattice points in [-box, box]^d.

    Lower-dimensional draws are rejected and redrawn from the same
    stream, so the result is deterministic per (d, n_points, seed, box).
    """
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if n_points < d + 1:
        raise ValueError("need at least d + 1 points to span the space")
    if box < 1:
        raise ValueError("box radius must be at least 1")
    rng = SplitMix64(seed)
    for _ in range(10000):
        points = [tuple(rng.randint(-box, box) for _ in range(d)) for _ in range(n_points)]
        try:
            return from_vertices(points)
        except LowerDimensionalError:
            continue
    raise ValueError("could not draw a full-dimensional point set; enlarge the box or point count")
