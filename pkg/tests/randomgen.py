"""Seeded random elements shared by the property tests."""

from semigraded.localization import fraction
from semigraded.ncpoly import NcPolynomial, word_product


def random_poly(p, rng, max_deg=3, terms=3):
    acc = NcPolynomial.zero(p)
    for _ in range(rng.randint(1, terms)):
        word = tuple(rng.randrange(p.ngens) for _ in range(rng.randint(0, max_deg)))
        acc = acc + word_product(p, word).scale(p.field.coerce(rng.randint(-3, 3)))
    return acc


def random_fraction(den, rng, max_deg=2, max_k=2):
    return fraction(random_poly(den.presentation, rng, max_deg, 2), rng.randint(0, max_k), den)


def random_word(p, rng, max_degree):
    """Word of generator indices with weighted degree at most ``max_degree``."""
    budget = rng.randint(1, max_degree)
    word = []
    while True:
        choices = [g for g in range(p.ngens) if p.degrees[g] <= budget]
        if not choices:
            return tuple(word)
        g = rng.choice(choices)
        word.append(g)
        budget -= p.degrees[g]
