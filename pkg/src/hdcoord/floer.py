"""Generators of the Heegaard Floer complex and their homology coordinates.

A generator picks a permutation ``sigma`` of ``1..g`` and one crossing of
``alpha_i`` with ``beta_sigma(i)`` for each ``i``.  Its coordinate is the
class in ``H_1(M)`` of

    sum_i  [first k_i letters of alpha_i] + [letters after l_i of beta_sigma(i)]

and two generators are joined by a Whitney disk exactly when their
coordinates agree.  Because every ``[alpha_i]`` and ``[beta_j]`` is killed
in ``H_1(M)``, coordinates live in ``Z^(2g)`` modulo the lattice the curve
classes span.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .diagram import HeegaardDiagram
from .errors import InvalidInputError, NoDiskError
from .lattice import ClassCoordinate, QuotientGroup, build_quotient, reduce
from .words import abelianize, prefix_vector, suffix_vector


@dataclass(frozen=True)
class Generator:
    """A point of ``T_alpha ∩ T_beta``.

    ``sigma[i-1]`` is the beta index paired with ``alpha_i``; ``points[i-1]``
    is the chosen crossing on that pair.
    """

    sigma: tuple
    points: tuple
    id: str = field(init=False)

    def __post_init__(self):
        for i, (s, p) in enumerate(zip(self.sigma, self.points), 1):
            if p.alpha != i or p.beta != s:
                raise InvalidInputError(f"point {p.label} does not lie on alpha {i} and beta {s}")
        if sorted(self.sigma) != list(range(1, len(self.sigma) + 1)) or len(self.points) != len(self.sigma):
            raise InvalidInputError(f"sigma {self.sigma} is not a permutation matching the points")
        object.__setattr__(self, "id", generator_id(p.label for p in self.points))

    def __hash__(self):
        return hash(self.id)

    @classmethod
    def from_points(cls, points) -> "Generator":
        pts = tuple(sorted(points, key=lambda p: p.alpha))
        return cls(tuple(p.beta for p in pts), pts)


def generator_id(labels) -> str:
    return "{" + ",".join(sorted(labels)) + "}"


def _check_member(d: HeegaardDiagram, x: Generator) -> None:
    if len(x.points) != d.genus or any(d.point_map.get(p.label) != p for p in x.points):
        raise InvalidInputError(f"generator {x.id} does not belong to this diagram")


def find_generator(d: HeegaardDiagram, labels) -> Generator:
    """The generator of ``d`` made of the named points.

    ``labels`` is an iterable of point labels or a string such as
    ``"{a,b}"`` or ``"a,b"``.
    """
    if isinstance(labels, str):
        labels = [s.strip() for s in labels.strip().strip("{}").split(",") if s.strip()]
    labels = list(labels)
    missing = [s for s in labels if s not in d.point_map]
    if missing:
        raise InvalidInputError(f"unknown point label {missing[0]!r}")
    if len(set(labels)) != len(labels):
        raise InvalidInputError("repeated point label")
    if len(labels) != d.genus:
        raise InvalidInputError(f"a generator needs {d.genus} points, got {len(labels)}")
    return Generator.from_points(d.point_map[s] for s in labels)


@lru_cache(maxsize=256)
def manifold_h1(d: HeegaardDiagram) -> QuotientGroup:
    """``H_1(M)`` as ``Z^(2g)`` modulo the classes of all alpha and beta curves."""
    g = d.genus
    return build_quotient([abelianize(w, g) for w in d.alpha + d.beta], g)


def enumerate_generators(d: HeegaardDiagram) -> list:
    """All generators of ``d`` sorted by id.

    Permutations are built one alpha curve at a time and abandoned as soon
    as the next required pair has no crossings.
    """
    g = d.genus
    pairs = d.pair_points
    out = []

    def extend(i, used, chosen):
        if i > g:
            out.append(Generator(tuple(p.beta for p in chosen), tuple(chosen)))
            return
        for j in range(1, g + 1):
            if j in used:
                continue
            for p in pairs.get((i, j), ()):
                chosen.append(p)
                used.add(j)
                extend(i + 1, used, chosen)
                used.discard(j)
                chosen.pop()

    extend(1, set(), [])
    out.sort(key=lambda x: x.id)
    return out


def raw_coordinate(d: HeegaardDiagram, x: Generator) -> tuple:
    """Unreduced coordinate of ``x`` in ``Z^(2g)``."""
    g = d.genus
    total = [0] * (2 * g)
    for p in x.points:
        for vec in (prefix_vector(d.alpha[p.alpha - 1], p.k, g), suffix_vector(d.beta[p.beta - 1], p.l, g)):
            for t, a in enumerate(vec):
                total[t] += a
    return tuple(total)


@lru_cache(maxsize=65536)
def _coordinate(d: HeegaardDiagram, x: Generator) -> ClassCoordinate:
    return reduce(manifold_h1(d), raw_coordinate(d, x))


def generator_coordinate(d: HeegaardDiagram, x: Generator, q: QuotientGroup = None) -> ClassCoordinate:
    """Class of ``x`` in ``H_1(M)``, in canonical form for ``q`` (default ``manifold_h1(d)``)."""
    _check_member(d, x)
    if q is None or q == manifold_h1(d):
        return _coordinate(d, x)
    return reduce(q, raw_coordinate(d, x))


def whitney_exists(d: HeegaardDiagram, x: Generator, y: Generator) -> bool:
    """True iff some Whitney disk connects ``x`` and ``y``."""
    return generator_coordinate(d, x) == generator_coordinate(d, y)


def permutation_sign(sigma) -> int:
    inversions = sum(1 for a in range(len(sigma)) for b in range(a + 1, len(sigma)) if sigma[a] > sigma[b])
    return -1 if inversions % 2 else 1


def generator_sign(x: Generator) -> int:
    """Intersection sign of ``x``: ``sgn(sigma)`` times the product of its point signs."""
    s = permutation_sign(x.sigma)
    for p in x.points:
        s *= p.sign
    return s


def maslov_parity(d: HeegaardDiagram, x: Generator, y: Generator) -> int:
    """Maslov index mod 2 of any Whitney disk from ``x`` to ``y``.

    Raises :class:`NoDiskError` when no disk exists.
    """
    if not whitney_exists(d, x, y):
        raise NoDiskError(f"no Whitney disk connects {x.id} and {y.id}")
    return 0 if generator_sign(x) == generator_sign(y) else 1


@dataclass(frozen=True)
class ClassReport:
    quotient: QuotientGroup
    generators: tuple
    coordinates: dict
    signs: dict
    classes: tuple  # ((ClassCoordinate, (id, ...)), ...)

    def class_of(self, gen_id: str) -> ClassCoordinate:
        return self.coordinates[gen_id]


def partition_classes(d: HeegaardDiagram) -> ClassReport:
    """Group the generators of ``d`` by coordinate.

    Classes are sorted by coordinate and members by id.
    """
    q = manifold_h1(d)
    gens = enumerate_generators(d)
    coords = {x.id: generator_coordinate(d, x) for x in gens}
    groups: dict = {}
    for x in gens:
        groups.setdefault(coords[x.id], []).append(x.id)
    classes = tuple((c, tuple(groups[c])) for c in sorted(groups))
    return ClassReport(
        quotient=q,
        generators=tuple(gens),
        coordinates=coords,
        signs={x.id: generator_sign(x) for x in gens},
        classes=classes,
    )
