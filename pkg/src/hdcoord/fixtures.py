"""Built-in diagrams used by tests and the ``hd fixture`` command."""

from __future__ import annotations

import re
from math import gcd

from .diagram import HeegaardDiagram, IntersectionPoint as P
from .errors import UnknownFixtureError
from .words import Word

LENS_MAX_P = 12


def lens_names() -> list:
    return [
        f"lens-{p}-{q}"
        for p in range(2, LENS_MAX_P + 1)
        for q in range(1, p)
        if gcd(p, q) == 1
    ]


def fixture_names() -> list:
    return ["s3", "s1xs2", "s3-genus2-stab"] + lens_names()


def s3() -> HeegaardDiagram:
    return HeegaardDiagram(1, (Word.parse("c1"),), (Word.parse("c2"),), (P("x0", 1, 1, 1, 1, 1),))


def s1xs2() -> HeegaardDiagram:
    # parallel curves: no intersection points
    return HeegaardDiagram(1, (Word.parse("c1"),), (Word.parse("c1"),), ())


def lens(p: int, q: int) -> HeegaardDiagram:
    """L(p, q): alpha = c1, beta = c1^q c2^p, crossings x0..x{p-1} at l = q + i."""
    alpha = Word(((1, 1),))
    beta = Word(((1, 1),) * q + ((2, 1),) * p)
    points = tuple(P(f"x{i}", 1, 1, 1, q + i, 1) for i in range(p))
    return HeegaardDiagram(1, (alpha,), (beta,), points)


def s3_genus2_stab() -> HeegaardDiagram:
    """Genus-two S^3 where alpha_2 and beta_2 meet three times after a finger move.

    ``a`` is the single crossing of alpha_1 with beta_1; ``b``, ``c``, ``d``
    lie on alpha_2 and beta_2 with signs +, -, +.  The three generators
    share one class since H_1 vanishes.
    """
    alpha = (Word.parse("c1"), Word.parse("c1 c3"))
    beta = (Word.parse("c2"), Word.parse("c4"))
    points = (
        P("a", 1, 1, 1, 1, 1),
        P("b", 2, 2, 1, 1, 1),
        P("c", 2, 2, 2, 1, -1),
        P("d", 2, 2, 2, 0, 1),
    )
    return HeegaardDiagram(2, alpha, beta, points)


_LENS = re.compile(r"lens-(\d+)-(\d+)")


def fixture(name: str) -> HeegaardDiagram:
    """Return the built-in diagram called ``name``."""
    if name == "s3":
        return s3()
    if name == "s1xs2":
        return s1xs2()
    if name == "s3-genus2-stab":
        return s3_genus2_stab()
    m = _LENS.fullmatch(name)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if 2 <= p <= LENS_MAX_P and 1 <= q < p and gcd(p, q) == 1:
            return lens(p, q)
    raise UnknownFixtureError(name, ["s3", "s1xs2", "s3-genus2-stab", f"lens-p-q (2 <= p <= {LENS_MAX_P}, 1 <= q < p, gcd(p, q) = 1)"])
