import random

from hdcoord.diagram import HeegaardDiagram, IntersectionPoint
from hdcoord.words import Word


def random_word(rng, g, max_len=6):
    return Word(tuple((rng.randint(1, 2 * g), rng.choice((1, -1))) for _ in range(rng.randint(1, max_len))))


def random_diagram(rng: random.Random, max_genus=3, max_len=6, max_points=4, density=0.6):
    g = rng.randint(1, max_genus)
    alpha = tuple(random_word(rng, g, max_len) for _ in range(g))
    beta = tuple(random_word(rng, g, max_len) for _ in range(g))
    points = []
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            if rng.random() > density:
                continue
            for _ in range(rng.randint(0, max_points)):
                points.append(
                    IntersectionPoint(
                        f"p{len(points)}",
                        i,
                        j,
                        rng.randint(0, len(alpha[i - 1])),
                        rng.randint(0, len(beta[j - 1])),
                        rng.choice((1, -1)),
                    )
                )
    return HeegaardDiagram(g, alpha, beta, tuple(points))


def rotate_beta(d, j):
    """Rotate beta_j left by one letter, moving each crossing on it back one slot."""
    n = len(d.beta[j - 1])
    beta = tuple(w.rotate(1) if idx == j else w for idx, w in enumerate(d.beta, 1))
    points = tuple(
        IntersectionPoint(p.label, p.alpha, p.beta, p.k, (p.l - 1) % n, p.sign) if p.beta == j else p
        for p in d.points
    )
    return HeegaardDiagram(d.genus, d.alpha, beta, points)


def coord_sub(a, b):
    """Difference of two coordinates in the same quotient."""
    assert a.moduli == b.moduli
    return (
        tuple(x - y for x, y in zip(a.free, b.free)),
        tuple((x - y) % d for x, y, d in zip(a.torsion, b.torsion, a.moduli)),
    )
