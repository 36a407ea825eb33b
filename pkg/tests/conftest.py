"""Shared helpers: random object generators and independent oracles."""

import math
import random

from hypothesis import settings

settings.register_profile("suite", max_examples=50, deadline=None)
settings.load_profile("suite")

from twoshift.points import (EMPTY_POINT, Finite, Infinite, make_infinite)
from twoshift.words import EMPTY, STAR, LeftRay, canonicalize_ray


def random_word(rng: random.Random, length: int, letters: int = 5) -> tuple:
    return tuple(rng.randrange(letters) for _ in range(length))


def random_infinite(rng: random.Random, letters: int = 5) -> Infinite:
    p = random_word(rng, rng.randint(1, 3), letters)
    q = random_word(rng, rng.randint(1, 3), letters)
    body = random_word(rng, rng.randint(0, 4), letters)
    start = rng.randint(-3, 3)
    return make_infinite(p, body, q, start)


def random_ray(rng: random.Random, letters: int = 5) -> LeftRay:
    p = random_word(rng, rng.randint(1, 3), letters)
    t = random_word(rng, rng.randint(0, 4), letters)
    return canonicalize_ray(p, t, rng.randint(-3, 3))


def random_finite(rng: random.Random, letters: int = 5) -> Finite:
    return Finite(random_ray(rng, letters))


def random_point(rng: random.Random, letters: int = 5):
    roll = rng.random()
    if roll < 0.1:
        return EMPTY_POINT
    if roll < 0.45:
        return random_finite(rng, letters)
    return random_infinite(rng, letters)


def random_pattern(rng: random.Random, max_len: int = 4, letters: int = 5,
                   star_prob: float = 0.2) -> tuple:
    n = rng.randint(1, max_len)
    return tuple(STAR if rng.random() < star_prob else rng.randrange(letters)
                 for _ in range(n))


def naive_window_scan(spec, x, radius: int = 60) -> bool:
    """Independent membership oracle for points with infinite support: expand
    the point over [-radius, radius] and look for raw occurrences.

    A pattern is flagged if it matches any fully contained window; a
    forbidden tail is flagged if the point agrees with it on the trailing
    ``radius`` coordinates at some anchor.  Sound for the small periods the
    generators produce.
    """
    lo, hi = -radius, radius
    seq = {i: x[i] for i in range(lo - radius, hi + 1)}
    for pat in spec.patterns:
        n = len(pat)
        for j in range(lo, hi - n + 2):
            if all(c is STAR or c == seq[j + i] for i, c in enumerate(pat)):
                return False
    for ray in spec.rays:
        pr = len(ray.period)
        pl = len(getattr(x, "left_period", (0,)))
        for k in range(lo, hi + 1):
            shifted = ray.shift_to(k)
            # Both sides are purely periodic left of this coordinate, so
            # agreement down to one combined period further is equality.
            start = min(getattr(x, "body_start", k), k - len(ray.transient))
            depth = start - math.lcm(pl, pr) - pl - pr - 2
            if all(x[i] == shifted[i] for i in range(depth, k + 1)):
                return False
    if spec.alphabet is not None:
        if not {v for v in seq.values()} <= spec.alphabet:
            return False
    return True
