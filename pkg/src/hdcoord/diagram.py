"""Combinatorial Heegaard diagrams and their ``.hd`` text format.

Example file (the genus-one splitting of S^3)::

    genus 1
    alpha 1: c1
    beta 1: c2
    x x0: a1 b1 k=1 l=1 sign=+

Curves are words in ``c1 .. c2g``.  An intersection point of ``alpha_i``
and ``beta_j`` records how many letters of ``alpha_i`` precede it (``k``)
and how many letters of ``beta_j`` precede it (``l``), together with its
local intersection sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

from .errors import DiagramParseError, InvalidInputError, InvalidWordError
from .words import Word

LABEL_RE = r"[^\s:,{}#]+"


@dataclass(frozen=True)
class IntersectionPoint:
    label: str
    alpha: int
    beta: int
    k: int
    l: int
    sign: int

    def __post_init__(self):
        if not re.fullmatch(LABEL_RE, self.label or ""):
            raise InvalidInputError(f"bad point label {self.label!r}")
        if self.sign not in (1, -1):
            raise InvalidInputError(f"point {self.label}: sign must be +1 or -1")

    @property
    def position(self) -> tuple:
        return (self.alpha, self.beta, self.k, self.l)

    def to_line(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"x {self.label}: a{self.alpha} b{self.beta} k={self.k} l={self.l} sign={s}"


@dataclass(frozen=True)
class HeegaardDiagram:
    """Genus, ``g`` alpha words, ``g`` beta words and labeled intersection points.

    Points are kept sorted by label, so two diagrams with the same data
    compare equal regardless of input order.
    """

    genus: int
    alpha: tuple
    beta: tuple
    points: tuple = ()

    def __post_init__(self):
        g = self.genus
        alpha = tuple(w if isinstance(w, Word) else Word(w) for w in self.alpha)
        beta = tuple(w if isinstance(w, Word) else Word(w) for w in self.beta)
        points = tuple(sorted(self.points, key=lambda p: p.label))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "points", points)
        if not isinstance(g, int) or g < 1:
            raise InvalidInputError(f"genus must be a positive integer, got {g!r}")
        if len(alpha) != g or len(beta) != g:
            raise InvalidInputError(f"genus {g} needs {g} alpha and {g} beta curves")
        for name, words in (("alpha", alpha), ("beta", beta)):
            for i, w in enumerate(words, 1):
                if not len(w):
                    raise InvalidInputError(f"{name} {i} is empty")
                if w.max_index() > 2 * g:
                    raise InvalidWordError(f"{name} {i} uses a letter beyond c{2 * g}")
        seen = set()
        for p in points:
            if p.label in seen:
                raise InvalidInputError(f"duplicate point label {p.label!r}")
            seen.add(p.label)
            problem = _point_problem(p, alpha, beta, g)
            if problem:
                raise InvalidInputError(f"point {p.label}: {problem}")

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash((self.genus, self.alpha, self.beta, self.points))

    @cached_property
    def point_map(self) -> dict:
        return {p.label: p for p in self.points}

    @cached_property
    def pair_points(self) -> dict:
        """``(i, j) -> points of alpha_i meeting beta_j``, in label order."""
        out: dict = {}
        for p in self.points:
            out.setdefault((p.alpha, p.beta), []).append(p)
        return {key: tuple(v) for key, v in out.items()}


def _point_problem(p: IntersectionPoint, alpha, beta, g: int):
    if not 1 <= p.alpha <= g:
        return f"alpha index a{p.alpha} out of range a1..a{g}"
    if not 1 <= p.beta <= g:
        return f"beta index b{p.beta} out of range b1..b{g}"
    m, n = len(alpha[p.alpha - 1]), len(beta[p.beta - 1])
    if not 0 <= p.k <= m:
        return f"k={p.k} out of range 0..{m} for alpha {p.alpha}"
    if not 0 <= p.l <= n:
        return f"l={p.l} out of range 0..{n} for beta {p.beta}"
    return None


# -- text format -------------------------------------------------------------

_GENUS = re.compile(r"genus\s+(\d+)")
_CURVE = re.compile(r"(alpha|beta)\s+(\d+)\s*:(.*)")
_POINT = re.compile(
    r"x\s+(" + LABEL_RE + r")\s*:\s*a(\d+)\s+b(\d+)\s+k=(-?\d+)\s+l=(-?\d+)\s+sign=([+-])"
)
_LETTER = re.compile(r"-?c(\d+)")


def parse_diagram(text: Union[str, Iterable[str]]) -> HeegaardDiagram:
    """Parse ``.hd`` text, raising :class:`DiagramParseError` with a line number."""
    lines = text.splitlines() if isinstance(text, str) else [s.rstrip("\n") for s in text]
    genus = genus_line = None
    curves = {"alpha": {}, "beta": {}}
    raw_points = []
    lineno = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if genus is None:
            m = _GENUS.fullmatch(line)
            if not m:
                raise DiagramParseError("expected 'genus <g>' as the first line", lineno)
            genus, genus_line = int(m.group(1)), lineno
            if genus < 1:
                raise DiagramParseError("genus must be at least 1", lineno, "semantic")
            continue
        m = _CURVE.fullmatch(line)
        if m:
            kind, idx = m.group(1), int(m.group(2))
            tokens = m.group(3).split()
            for tok in tokens:
                lm = _LETTER.fullmatch(tok)
                if not lm:
                    raise DiagramParseError(f"bad letter {tok!r}", lineno)
                if not 1 <= int(lm.group(1)) <= 2 * genus:
                    raise DiagramParseError(
                        f"letter {tok} out of range c1..c{2 * genus}", lineno, "semantic"
                    )
            if not 1 <= idx <= genus:
                raise DiagramParseError(f"{kind} index {idx} out of range 1..{genus}", lineno, "semantic")
            if idx in curves[kind]:
                raise DiagramParseError(f"{kind} {idx} defined twice", lineno, "semantic")
            if not tokens:
                raise DiagramParseError(f"{kind} {idx} has an empty word", lineno, "semantic")
            curves[kind][idx] = Word.from_tokens(tokens)
            continue
        m = _POINT.fullmatch(line)
        if m:
            label, a, b, k, l, s = m.groups()
            raw_points.append((lineno, IntersectionPoint(label, int(a), int(b), int(k), int(l), 1 if s == "+" else -1)))
            continue
        raise DiagramParseError(f"cannot parse {line!r}", lineno)

    if genus is None:
        raise DiagramParseError("empty input: missing 'genus <g>' line")
    for kind in ("alpha", "beta"):
        missing = [i for i in range(1, genus + 1) if i not in curves[kind]]
        if missing:
            raise DiagramParseError(f"missing {kind} {missing[0]}", genus_line, "semantic")
    alpha = tuple(curves["alpha"][i] for i in range(1, genus + 1))
    beta = tuple(curves["beta"][i] for i in range(1, genus + 1))
    seen = {}
    for ln, p in raw_points:
        if p.label in seen:
            raise DiagramParseError(
                f"duplicate label {p.label!r} (first used on line {seen[p.label]})", ln, "semantic"
            )
        seen[p.label] = ln
        problem = _point_problem(p, alpha, beta, genus)
        if problem:
            raise DiagramParseError(problem, ln, "semantic")
    return HeegaardDiagram(genus, alpha, beta, tuple(p for _, p in raw_points))


def serialize_diagram(d: HeegaardDiagram) -> str:
    """Canonical text: curves in index order, points sorted by label."""
    out = [f"genus {d.genus}"]
    out += [f"alpha {i}: {w}" for i, w in enumerate(d.alpha, 1)]
    out += [f"beta {j}: {w}" for j, w in enumerate(d.beta, 1)]
    out += [p.to_line() for p in d.points]
    return "\n".join(out) + "\n"


def validate(d: HeegaardDiagram) -> list:
    """Non-fatal problems with ``d``, as human-readable strings."""
    warnings = []
    for i, w in enumerate(d.alpha, 1):
        if not w.is_freely_reduced():
            warnings.append(f"alpha {i}: word is not freely reduced")
    for j, w in enumerate(d.beta, 1):
        if not w.is_freely_reduced():
            warnings.append(f"beta {j}: word is not freely reduced")
        elif not w.is_cyclically_reduced():
            warnings.append(f"beta {j}: word is not cyclically reduced")
    by_pos: dict = {}
    for p in d.points:
        by_pos.setdefault(p.position, []).append(p.label)
    for (i, j, k, l), labels in by_pos.items():
        if len(labels) > 1:
            warnings.append(
                f"points {', '.join(labels)} share position a{i} b{j} k={k} l={l}"
            )
    return warnings
