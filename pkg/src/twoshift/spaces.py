"""Shift spaces defined by finite forbidden specifications.

A :class:`ForbiddenSpec` finitely describes a forbidden set F = F' ∪ F'':
wildcard word patterns (F'), exact eventually periodic left tails (F''), an
optional allowlist of tail periods, and an optional finite alphabet
restriction.  The space X_F consists of the infinite points avoiding F
(with an allowed tail when the allowlist is present), the finite points
whose ending ray has an infinite first follower set inside the infinite
part, and the empty point when the infinite part is infinite.

Every query reduces to checks on concrete eventually periodic points.
Letters outside the mentioned set are interchangeable, so existential
questions (is this word a block, is this follower set infinite) are decided
by building a witness point that uses one fresh letter for everything
unconstrained and validating it against the specification directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from .errors import (AllowlistUnsupported, CutoffTooSmall, NotInLanguage,
                     ParseError)
from .points import (BiPoint, Empty, Finite, Infinite, make_infinite)
from .words import (EMPTY, STAR, LeftRay, canonicalize_ray, format_pattern,
                    parse_pattern, parse_ray, pattern_matches, primitive_root,
                    ray_append, ray_equals_pattern_tail,
                    ray_subword_occurrences, rotations, words_conjugate)


def _least_rotation(word: tuple) -> tuple:
    return min(rotations(word))


@dataclass(frozen=True)
class ForbiddenSpec:
    """Finite description of a forbidden set; construct via :func:`make_spec`."""

    patterns: frozenset = frozenset()
    rays: frozenset = frozenset()          # LeftRay, end index 0
    allow: Optional[frozenset] = None      # canonical primitive period words
    alphabet: Optional[frozenset] = None

    def mentioned(self) -> frozenset:
        out = set()
        for p in self.patterns:
            out |= {c for c in p if isinstance(c, int)}
        for r in self.rays:
            out |= r.letters()
        if self.allow:
            for a in self.allow:
                out |= set(a)
        return frozenset(out)


def make_spec(forbid_words: Iterable = (), forbid_tails: Iterable = (),
              forbid_tails_containing: Iterable = (), allow_tails=None,
              alphabet=None) -> ForbiddenSpec:
    """Build a spec; words may be given as strings in the pattern syntax.

    A tail restriction "no tail contains w" is the same as forbidding w as a
    word, since every occurrence of w lies inside some tail; it is
    normalized into the pattern part here.
    """
    pats = set()
    for w in forbid_words:
        pats.add(parse_pattern(w) if isinstance(w, str) else tuple(w))
    for w in forbid_tails_containing:
        pats.add(parse_pattern(w) if isinstance(w, str) else tuple(w))
    rays = set()
    for r in forbid_tails:
        ray = parse_ray(r) if isinstance(r, str) else r
        rays.add(ray.shift_to(0))
    allow = None
    if allow_tails is not None:
        allow = frozenset(
            _least_rotation(primitive_root(
                parse_pattern(a) if isinstance(a, str) else tuple(a)))
            for a in allow_tails)
        if any(any(not isinstance(c, int) for c in a) for a in allow):
            raise ParseError("allowlist periods admit plain letters only")
    alpha = frozenset(alphabet) if alphabet is not None else None
    return ForbiddenSpec(frozenset(pats), frozenset(rays), allow, alpha)


def spec_to_json(spec: ForbiddenSpec) -> dict:
    out = {"forbid_words": sorted(format_pattern(p) for p in spec.patterns)}
    if spec.rays:
        out["forbid_tails"] = sorted(
            ("(%s)^- %s" % (format_pattern(r.period),
                            format_pattern(r.transient))).rstrip()
            for r in sorted(spec.rays,
                            key=lambda r: (r.period, r.transient)))
    if spec.allow is not None:
        out["allow_tails"] = sorted(format_pattern(a) for a in spec.allow)
    if spec.alphabet is not None:
        out["alphabet"] = sorted(spec.alphabet)
    return out


def spec_from_json(data: dict) -> ForbiddenSpec:
    return make_spec(data.get("forbid_words", ()),
                     data.get("forbid_tails", ()),
                     data.get("forbid_tails_containing", ()),
                     data.get("allow_tails"),
                     data.get("alphabet"))


# ---------------------------------------------------------------------------
# direct validation of eventually periodic infinite points


def _max_pattern_len(spec: ForbiddenSpec) -> int:
    return max((len(p) for p in spec.patterns), default=1)


def infinite_ok(spec: ForbiddenSpec, x: Infinite) -> bool:
    """Exact membership of a bi-infinite point in the infinite part of X_F."""
    if spec.alphabet is not None and not x.letters() <= spec.alphabet:
        return False
    big = _max_pattern_len(spec)
    lo = x.body_start - len(x.left_period) - big
    hi = x.body_start + len(x.body) + len(x.right_period) + big
    for pat in spec.patterns:
        n = len(pat)
        for j in range(lo, hi + 1):
            if pattern_matches(pat, x.window(j - n + 1, j)):
                return False
    if spec.rays:
        pad = max(len(f.period) + len(f.transient) for f in spec.rays)
        k0 = x.body_start + len(x.body) + 2 * len(x.right_period) + pad + 1
        tail = x.tail_ray(k0)
        for f in spec.rays:
            if ray_equals_pattern_tail(tail, f):
                return False
    if spec.allow is not None:
        if not any(words_conjugate(x.left_period, a) for a in spec.allow):
            return False
    return True


# ---------------------------------------------------------------------------
# witness search

def _fresh(spec: ForbiddenSpec, extra: Iterable[int] = ()) -> int:
    used = set(spec.mentioned()) | set(extra)
    if spec.alphabet is not None:
        used |= set(spec.alphabet)
    return max(used, default=-1) + 1


def _left_periods(spec: ForbiddenSpec, f: int):
    """Candidate left periods for witness points: every rotation of every
    allowed period, or the fresh letter when tails are unconstrained."""
    if spec.allow is None:
        return [(f,)]
    return [r for base in sorted(spec.allow) for r in rotations(base)]


def _alphabet_periods(spec: ForbiddenSpec, max_len: int):
    letters = sorted(spec.alphabet)
    for n in range(1, max_len + 1):
        for p in itertools.product(letters, repeat=n):
            if primitive_root(p) == p and _least_rotation(p) == p:
                yield p


@lru_cache(maxsize=None)
def word_in_language(spec: ForbiddenSpec, word: tuple) -> bool:
    """Is the (ø-free) word a block of the infinite part of X_F?"""
    big = _max_pattern_len(spec)
    # Cheap necessary condition: no pattern occurs inside the word itself.
    for pat in spec.patterns:
        n = len(pat)
        for j in range(n - 1, len(word)):
            if pattern_matches(pat, word[j - n + 1: j + 1]):
                return False
    if spec.alphabet is not None:
        if not set(word) <= spec.alphabet:
            return False
        per_len = big + 1
        for u1 in itertools.product(sorted(spec.alphabet), repeat=big - 1):
            for u2 in itertools.product(sorted(spec.alphabet), repeat=big - 1):
                for pl in _alphabet_periods(spec, per_len):
                    for pr in _alphabet_periods(spec, per_len):
                        x = make_infinite(pl, u1 + word + u2, pr, 1)
                        if infinite_ok(spec, x):
                            return True
        return False
    # A fresh seam is the best possible witness: fresh cells are matched
    # only by wildcards, which also matched whatever they replaced, so any
    # valid witness stays valid after padding with the fresh letter.
    f = _fresh(spec, word)
    pad = (f,) * (big - 1)
    return any(infinite_ok(spec, make_infinite(pl, pad + word + pad, (f,), 1))
               for pl in _left_periods(spec, f))


@lru_cache(maxsize=None)
def ray_in_language(spec: ForbiddenSpec, ray: LeftRay) -> bool:
    """Is the ray a left-infinite subblock of the infinite part of X_F?"""
    big = _max_pattern_len(spec)
    if spec.alphabet is not None:
        if not ray.letters() <= spec.alphabet:
            return False
        for u2 in itertools.product(sorted(spec.alphabet), repeat=big - 1):
            for pr in _alphabet_periods(spec, big + 1):
                x = make_infinite(ray.period, ray.transient + u2, pr,
                                  ray.end_index - len(ray.transient) + 1)
                if infinite_ok(spec, x):
                    return True
        return False
    f = _fresh(spec, ray.letters())
    pad = (f,) * (big - 1)
    x = make_infinite(ray.period, ray.transient + pad, (f,),
                      ray.end_index - len(ray.transient) + 1)
    return infinite_ok(spec, x)


@lru_cache(maxsize=None)
def follower_infinite(spec: ForbiddenSpec, ray: LeftRay) -> bool:
    """Is the first follower set of the ray inside X_F^inf infinite?

    The mentioned set is finite, so the set is infinite exactly when some
    fresh letter follows the ray; fresh letters are interchangeable.
    """
    if spec.alphabet is not None:
        return False
    big = _max_pattern_len(spec)
    f = _fresh(spec, ray.letters())
    pad = (f,) * big
    x = make_infinite(ray.period, ray.transient + pad, (f,),
                      ray.end_index - len(ray.transient) + 1)
    return infinite_ok(spec, x)


@lru_cache(maxsize=None)
def inf_infinite(spec: ForbiddenSpec) -> bool:
    """Is the infinite part of X_F an infinite set?"""
    if spec.alphabet is not None:
        return _alphabet_walks_infinite(spec)
    if any(all(c is STAR for c in p) for p in spec.patterns):
        # An all-wildcard pattern matches every window, so no infinite
        # point survives at all.
        return False
    if spec.allow is None:
        # A fresh constant point is valid, and fresh letters are
        # interchangeable, so the infinite part is infinite.
        return True
    # Allowed tails only: the space is infinite exactly when some valid
    # point is not fully periodic (its shift orbit is then infinite), and
    # replacing everything right of the periodic tail by a fresh letter
    # preserves validity, so one witness per period rotation decides.
    f = _fresh(spec)
    return any(infinite_ok(spec, make_infinite(pl, (), (f,), 0))
               for pl in _left_periods(spec, f))


@lru_cache(maxsize=None)
def inf_nonempty(spec: ForbiddenSpec) -> bool:
    if spec.alphabet is not None:
        return bool(_alphabet_live_states(spec))
    if any(all(c is STAR for c in p) for p in spec.patterns):
        return False
    if spec.allow is None:
        return True
    if inf_infinite(spec):
        return True
    for pl in sorted(spec.allow):
        for p in rotations(pl):
            if infinite_ok(spec, make_infinite(p, (), p, 0)):
                return True
    return False


# concrete walk analysis for finite-alphabet specs

@lru_cache(maxsize=None)
def _alphabet_edges(spec: ForbiddenSpec):
    big = _max_pattern_len(spec)
    w = big - 1
    letters = sorted(spec.alphabet)
    states = list(itertools.product(letters, repeat=w))
    edges = {}
    for s in states:
        edges[s] = []
        for a in letters:
            win = s + (a,)
            if not any(pattern_matches(p, win[len(win) - len(p):])
                       for p in spec.patterns):
                edges[s].append(a)
    # Windows shorter than the pattern length also matter; re-check every
    # full window along transitions by validating length-big windows.
    ok = {}
    for s in states:
        for a in edges[s]:
            win = s + (a,)
            good = all(not pattern_matches(p, win[j - len(p) + 1: j + 1])
                       for p in spec.patterns
                       for j in range(len(p) - 1, len(win)))
            ok[(s, a)] = good
    return {s: [a for a in edges[s] if ok[(s, a)]] for s in states}


@lru_cache(maxsize=None)
def _alphabet_live_states(spec: ForbiddenSpec):
    """States lying on some bi-infinite valid walk."""
    edges = _alphabet_edges(spec)
    succ = {s: [s[1:] + (a,) for a in edges[s]] for s in edges}
    pred = {s: [] for s in edges}
    for s, ts in succ.items():
        for t in ts:
            pred[t].append(s)

    def closure(start_map):
        # States from which an infinite walk exists: iteratively remove
        # states with no remaining successor.
        alive = set(start_map)
        changed = True
        while changed:
            changed = False
            for s in list(alive):
                if not any(t in alive for t in start_map[s]):
                    alive.discard(s)
                    changed = True
        return alive

    fwd = closure(succ)
    bwd = closure(pred)
    return frozenset(fwd & bwd)


def _alphabet_walks_infinite(spec: ForbiddenSpec) -> bool:
    live = _alphabet_live_states(spec)
    if not live:
        return False
    edges = _alphabet_edges(spec)
    out_deg = {s: 0 for s in live}
    in_deg = {s: 0 for s in live}
    for s in live:
        for a in edges[s]:
            t = s[1:] + (a,)
            if t in live:
                out_deg[s] += 1
                in_deg[t] += 1
    # Degree ≤ 1 everywhere leaves only disjoint cycles: finitely many
    # points.  Any branching live state yields a non-periodic walk, whose
    # shift orbit is infinite.
    return any(out_deg[s] > 1 or in_deg[s] > 1 for s in live)


# ---------------------------------------------------------------------------
# membership and language


def contains(spec: ForbiddenSpec, x: BiPoint) -> bool:
    if isinstance(x, Infinite):
        return infinite_ok(spec, x)
    if isinstance(x, Empty):
        return inf_infinite(spec)
    return inf_infinite(spec) and follower_infinite(spec, x.ray)


def has_iep(spec: ForbiddenSpec, x: Finite) -> bool:
    """Does the finite point have infinitely many one-letter extensions
    inside the infinite part?"""
    return follower_infinite(spec, x.ray)


@lru_cache(maxsize=None)
def _finite_word_ok(spec: ForbiddenSpec, word: tuple) -> bool:
    """Does some finite point of X_F end exactly with this (ø-free) word?"""
    if not inf_infinite(spec):
        return False
    if spec.alphabet is not None:
        return False
    big = _max_pattern_len(spec)
    f = _fresh(spec, word)
    pad = (f,) * (big - 1)
    return any(follower_infinite(spec, canonicalize_ray(pl, pad + word, 0))
               for pl in _left_periods(spec, f))


def blocks(spec: ForbiddenSpec, n: int, cutoff: int) -> set:
    """B_n(X_F) restricted to letters below the cutoff (plus ø paddings)."""
    mentioned = spec.mentioned()
    if mentioned and cutoff < max(mentioned) + 1:
        raise CutoffTooSmall("cutoff %d below mentioned letters %s"
                             % (cutoff, sorted(mentioned)))
    letters = range(cutoff)
    if spec.alphabet is not None:
        letters = sorted(a for a in spec.alphabet if a < cutoff)
    out = set()
    for w in itertools.product(letters, repeat=n):
        if word_in_language(spec, w):
            out.add(w)
    for m in range(1, n):
        for w in itertools.product(letters, repeat=m):
            if _finite_word_ok(spec, w):
                out.add(w + (EMPTY,) * (n - m))
    if inf_infinite(spec):
        out.add((EMPTY,) * n)
    return out


def follower_set(spec: ForbiddenSpec, left, k: int = 1,
                 direction: str = "forward", cutoff: int = 8):
    """k-th follower (or predecessor) set of a word or left ray.

    Returns (set of words over letters < cutoff, infinite flag); the flag is
    exact, the listing is truncated at the cutoff.
    """
    big = _max_pattern_len(spec)
    f = _fresh(spec, left.letters() if isinstance(left, LeftRay) else left)
    probe = sorted(spec.mentioned()) + ([] if spec.alphabet is not None else [f])
    if isinstance(left, LeftRay):
        if direction != "forward":
            raise ValueError("predecessor sets apply to finite words only")
        if not ray_in_language(spec, left):
            raise NotInLanguage("ray %s is not a left-infinite subblock" % (left,))
        member = lambda v: ray_in_language(spec, ray_append(left, v))
    else:
        w = tuple(left)
        if not word_in_language(spec, w):
            raise NotInLanguage("word %s is not a block" % (w,))
        if direction == "forward":
            member = lambda v: word_in_language(spec, w + v)
        else:
            member = lambda v: word_in_language(spec, v + w)
    listed = {v for v in itertools.product(range(cutoff), repeat=k) if member(v)}
    infinite = any(f in v and member(v)
                   for v in itertools.product(probe, repeat=k)) \
        if spec.alphabet is None else False
    return listed, infinite


# ---------------------------------------------------------------------------
# minimality


def _instances(pattern: tuple, mentioned, f: int):
    """All concrete instantiations of a wildcard pattern, one fresh letter
    standing in for every non-mentioned choice."""
    options = [[c] if isinstance(c, int) else sorted(mentioned) + [f]
               for c in pattern]
    return itertools.product(*options)


def _pattern_bad(spec: ForbiddenSpec, pattern: tuple) -> bool:
    """True iff no instance of the pattern is a block of X_F."""
    mentioned = spec.mentioned()
    f = _fresh(spec, (c for c in pattern if isinstance(c, int)))
    return all(not word_in_language(spec, tuple(inst))
               for inst in _instances(pattern, mentioned, f))


def _pattern_occurs_in(small: tuple, big_pat: tuple) -> bool:
    """Every instance of big_pat contains an instance of small."""
    n = len(small)
    for o in range(len(big_pat) - n + 1):
        if all(s is STAR or s == big_pat[o + i]
               for i, s in enumerate(small)):
            return True
    return False


def _ray_windows(spec: ForbiddenSpec, ray: LeftRay, max_len: int):
    depth = len(ray.period) + len(ray.transient) + max_len
    for n in range(1, max_len + 1):
        for j in range(ray.end_index, ray.end_index - depth, -1):
            yield tuple(ray[j - n + 1 + i] for i in range(n))


def is_minimal(spec: ForbiddenSpec):
    """Is every proper finite subblock of every forbidden object a block of
    X_F?  Returns (True, None) or (False, (offending word, parent))."""
    if spec.allow is not None:
        raise AllowlistUnsupported("minimality needs a pure forbidden list")
    mentioned = spec.mentioned()
    big = _max_pattern_len(spec)
    for pat in sorted(spec.patterns, key=str):
        f = _fresh(spec)
        for n in range(1, len(pat)):
            for o in range(len(pat) - n + 1):
                sub = pat[o: o + n]
                for inst in _instances(sub, mentioned, f):
                    if not word_in_language(spec, tuple(inst)):
                        return False, (tuple(inst), pat)
    bound = big + max((len(r.period) + len(r.transient) for r in spec.rays),
                      default=0)
    for r in sorted(spec.rays, key=lambda r: (r.period, r.transient)):
        for w in _ray_windows(spec, r, bound):
            if not word_in_language(spec, w):
                return False, (w, r)
    return True, None


def minimalize(spec: ForbiddenSpec) -> ForbiddenSpec:
    """A minimal forbidden specification defining the same space.

    Each forbidden object is replaced by its minimal bad subwords: the
    shortest (partially specialized) subpatterns none of whose instances is
    a block of the original space.
    """
    if spec.allow is not None:
        raise AllowlistUnsupported("minimalize needs a pure forbidden list")
    mentioned = sorted(spec.mentioned())
    big = _max_pattern_len(spec)
    candidates = set()
    for pat in spec.patterns:
        for n in range(1, len(pat) + 1):
            for o in range(len(pat) - n + 1):
                sub = pat[o: o + n]
                # Wildcards may also be specialized to mentioned letters.
                options = [[c] if isinstance(c, int) else [STAR] + mentioned
                           for c in sub]
                for cand in itertools.product(*options):
                    candidates.add(tuple(cand))
    bound = big + max((len(r.period) + len(r.transient) for r in spec.rays),
                      default=0)
    for r in spec.rays:
        for w in _ray_windows(spec, r, bound):
            candidates.add(w)
    bad = {c for c in candidates if _pattern_bad(spec, c)}
    minimal = set()
    for c in sorted(bad, key=lambda c: (len(c), str(c))):
        if not any(d != c and _pattern_occurs_in(d, c) for d in bad):
            minimal.add(c)
    kept_rays = set()
    for r in spec.rays:
        covered = any(not ray_subword_occurrences(r, g).is_empty
                      for g in minimal)
        if not covered:
            kept_rays.add(r)
    return ForbiddenSpec(frozenset(minimal), frozenset(kept_rays), None,
                         spec.alphabet)


# ---------------------------------------------------------------------------
# classification and comparison


@dataclass(frozen=True)
class Classification:
    row_finite: bool
    column_finite: bool
    m_step: Optional[int]
    finite_type: bool


def classify(spec: ForbiddenSpec) -> Classification:
    if spec.alphabet is not None:
        row = col = True
    else:
        f = _fresh(spec)
        probes = sorted(spec.mentioned()) + [f]
        row = col = True
        for a in probes:
            if not word_in_language(spec, (a,)):
                continue
            _, flag = follower_set(spec, (a,), 1, "forward", cutoff=1)
            row = row and not flag
            _, flag = follower_set(spec, (a,), 1, "backward", cutoff=1)
            col = col and not flag
    if spec.rays or spec.allow is not None:
        m_step = None
    else:
        m_step = max(1, _max_pattern_len(spec)) - 1
    finite_type = (not spec.rays and spec.allow is None
                   and all(all(isinstance(c, int) for c in p)
                           for p in spec.patterns))
    return Classification(row, col, m_step, finite_type)


def equal_spaces(a: ForbiddenSpec, b: ForbiddenSpec, n_budget: int,
                 cutoff: int):
    """Bounded comparison: (True, None) when no difference is found within
    the budget, else (False, witness block or ray)."""
    for n in range(1, n_budget + 1):
        ba, bb = blocks(a, n, cutoff), blocks(b, n, cutoff)
        if ba != bb:
            return False, sorted(ba ^ bb, key=str)[0]
    seen = set()
    for plen in range(1, n_budget + 1):
        for tlen in range(0, n_budget + 1):
            for per in itertools.product(range(cutoff), repeat=plen):
                for tr in itertools.product(range(cutoff), repeat=tlen):
                    ray = canonicalize_ray(per, tr, 0)
                    if ray in seen:
                        continue
                    seen.add(ray)
                    if ray_in_language(a, ray) != ray_in_language(b, ray):
                        return False, ray
    return True, None
