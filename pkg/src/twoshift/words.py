"""Letters, finite words, wildcard patterns, and eventually periodic left rays.

Letters are nonnegative integers.  The empty letter (rendered ``_``) is the
module-level sentinel :data:`EMPTY`; it never belongs to an alphabet and only
shows up as padding at the right end of words.  The pattern wildcard
(rendered ``*``) is :data:`STAR` and matches exactly one non-empty letter.

A left ray represents a left-infinite, eventually periodic sequence
``...ppp.t`` whose last entry sits at a fixed integer index.  Rays are kept
in a canonical form (primitive period, minimal transient, fixed phase) so
that equality of rays is equality of the sequences they denote.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import EmptyLetterInRay, EmptyPeriod, ParseError


class _Sentinel:
    __slots__ = ("_name",)

    def __init__(self, name: str) -> None:
        self._name = name

    def __repr__(self) -> str:
        return self._name


#: The empty letter (the padding symbol at the right end of finite points).
EMPTY = _Sentinel("_")

#: Pattern wildcard matching any single non-empty letter.
STAR = _Sentinel("*")

Letter = int
Cell = Union[int, _Sentinel]
Word = tuple  # tuple of letters / EMPTY
Pattern = tuple  # tuple of letters / STAR


def check_word(word: Sequence[Cell]) -> Word:
    """Validate the empty-letter closure of a word and return it as a tuple.

    Once ``EMPTY`` occurs, every later cell must be ``EMPTY`` as well, since
    words are windows of valid points.
    """
    w = tuple(word)
    seen_empty = False
    for c in w:
        if c is EMPTY:
            seen_empty = True
        elif seen_empty:
            raise ValueError("empty letter must be terminal in a word: %r" % (w,))
        elif c is STAR or not isinstance(c, int) or c < 0:
            raise ValueError("bad letter in word: %r" % (c,))
    return w


def word_letters(word: Sequence[Cell]) -> frozenset:
    return frozenset(c for c in word if isinstance(c, int))


def primitive_root(word: Sequence[int]) -> tuple:
    """Shortest word w such that the input is a repetition of w."""
    w = tuple(word)
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


def rotations(word: Sequence[int]):
    w = tuple(word)
    return [w[i:] + w[:i] for i in range(len(w))]


def words_conjugate(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff the primitive roots of a and b are rotations of each other."""
    pa, pb = primitive_root(a), primitive_root(b)
    return len(pa) == len(pb) and pb in rotations(pa)


def _canonical_eventual(pre: tuple, per: tuple):
    """Canonicalize a right-infinite eventually periodic word pre . per^inf.

    Returns (pre', per') with per' primitive and pre' minimal: the last
    letter of pre' differs from the last letter of per'.
    """
    per = primitive_root(per)
    pre = tuple(pre)
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = (per[-1],) + per[:-1]
    return pre, per


@dataclass(frozen=True)
class LeftRay:
    """Eventually periodic left-infinite sequence ending at ``end_index``.

    Denotes (x_i)_{i <= end_index} = ...ppp.t where ``transient`` holds the
    last ``len(transient)`` entries and ``period`` repeats before them.
    Construct through :func:`canonicalize_ray`; direct construction assumes
    canonical fields.
    """

    period: tuple
    transient: tuple
    end_index: int

    def __getitem__(self, i: int) -> int:
        """Entry of the denoted sequence at absolute index ``i <= end_index``."""
        j = self.end_index - i
        if j < 0:
            raise IndexError("index %d is right of the ray end %d" % (i, self.end_index))
        t = self.transient
        if j < len(t):
            return t[len(t) - 1 - j]
        j -= len(t)
        p = self.period
        return p[len(p) - 1 - (j % len(p))]

    def expand(self, depth: int) -> tuple:
        """The last ``depth`` entries, oldest first."""
        return tuple(self[self.end_index - depth + 1 + j] for j in range(depth))

    def letters(self) -> frozenset:
        return frozenset(self.period) | frozenset(self.transient)

    def shift_to(self, end_index: int) -> "LeftRay":
        """Same sequence of letters re-anchored to end at ``end_index``."""
        return LeftRay(self.period, self.transient, end_index)

    def __str__(self) -> str:
        return "(%s)^- %s@%d" % (
            format_letters(self.period),
            (format_letters(self.transient) + " ") if self.transient else "",
            self.end_index,
        )


def canonicalize_ray(period: Sequence[int], transient: Sequence[int] = (),
                     end_index: int = 0) -> LeftRay:
    """Unique canonical :class:`LeftRay` denoting ...period^inf . transient.

    Idempotent: canonicalizing the fields of a canonical ray returns an
    equal ray.
    """
    p = tuple(period)
    t = tuple(transient)
    if not p:
        raise EmptyPeriod("ray period must be nonempty")
    for c in p + t:
        if c is EMPTY:
            raise EmptyLetterInRay("empty letter cannot occur in a ray")
        if not isinstance(c, int) or c < 0:
            raise ValueError("bad letter in ray: %r" % (c,))
    # Reverse so the ray reads as a right-infinite eventually periodic word.
    rpre, rper = _canonical_eventual(t[::-1], p[::-1])
    return LeftRay(rper[::-1], rpre[::-1], end_index)


def ray_tail(ray: LeftRay, m: int) -> LeftRay:
    """Canonical sub-ray of ``ray`` ending at index ``m <= ray.end_index``."""
    d = ray.end_index - m
    if d < 0:
        raise IndexError("tail end %d is right of ray end %d" % (m, ray.end_index))
    t = ray.transient
    if d <= len(t):
        return canonicalize_ray(ray.period, t[: len(t) - d], m)
    d -= len(t)
    n = len(ray.period)
    r = d % n
    p = ray.period[n - r:] + ray.period[: n - r]
    return canonicalize_ray(p, (), m)


def ray_append(ray: LeftRay, word: Sequence[int]) -> LeftRay:
    """Canonical ray obtained by appending ``word`` to the right of ``ray``."""
    w = tuple(word)
    return canonicalize_ray(ray.period, ray.transient + w, ray.end_index + len(w))


@dataclass(frozen=True)
class OccurrenceSummary:
    """All end positions at which a pattern matches inside a left ray.

    ``finite`` lists isolated end positions; ``families`` lists ultimately
    periodic infinite families as (first end position, negative stride).
    """

    finite: tuple
    families: tuple

    @property
    def is_empty(self) -> bool:
        return not self.finite and not self.families

    @property
    def is_infinite(self) -> bool:
        return bool(self.families)

    def positions_down_to(self, lo: int):
        """Concrete end positions >= lo, descending (testing helper)."""
        out = set(p for p in self.finite if p >= lo)
        for first, stride in self.families:
            p = first
            while p >= lo:
                out.add(p)
                p += stride
        return sorted(out, reverse=True)


def pattern_matches(pattern: Pattern, window: Sequence[Cell]) -> bool:
    """Match a wildcard pattern against a window of equal length."""
    if len(pattern) != len(window):
        return False
    for c, w in zip(pattern, window):
        if w is EMPTY:
            return False
        if c is STAR:
            continue
        if c != w:
            return False
    return True


def ray_subword_occurrences(ray: LeftRay, pattern: Pattern) -> OccurrenceSummary:
    """Classify all end positions j <= end_index where the pattern matches.

    Matches ending in the transient are listed individually; matches whose
    window lies entirely in the periodic part repeat with stride
    ``-len(period)`` and are reported as infinite families.
    """
    n = len(pattern)
    k = ray.end_index
    t_lo = k - len(ray.transient)  # last purely periodic position
    finite = []
    for j in range(k, t_lo, -1):
        if pattern_matches(pattern, tuple(ray[j - n + 1 + i] for i in range(n))):
            finite.append(j)
    families = []
    for j in range(t_lo, t_lo - len(ray.period), -1):
        if pattern_matches(pattern, tuple(ray[j - n + 1 + i] for i in range(n))):
            families.append((j, -len(ray.period)))
    return OccurrenceSummary(tuple(finite), tuple(families))


def ray_equals_pattern_tail(ray: LeftRay, forbidden: LeftRay) -> bool:
    """True iff ``forbidden`` denotes a tail of ``ray`` under some alignment.

    End indices are ignored: only the left-infinite letter sequences matter.
    """
    k = ray.end_index
    lo = k - len(ray.transient) - len(ray.period) + 1
    key = (forbidden.period, forbidden.transient)
    for m in range(k, lo - 1, -1):
        tail = ray_tail(ray, m)
        if (tail.period, tail.transient) == key:
            return True
    return False


# ---------------------------------------------------------------------------
# text syntax


def parse_letters(text: str) -> tuple:
    """Parse a run of letters: `011`, `0 1 12`, `0,1,12`, `*2`, `1_ _`.

    Single-token digit runs are read one letter per character; tokens with
    separators are read as multi-digit letters.
    """
    text = text.strip()
    if not text:
        return ()
    toks = re.split(r"[,\s]+", text)
    cells = []
    if len(toks) == 1:
        for ch in toks[0]:
            cells.append(_parse_cell(ch))
    else:
        for tok in toks:
            cells.append(_parse_cell(tok))
    return tuple(cells)


def _parse_cell(tok: str) -> Cell:
    if tok == "*":
        return STAR
    if tok == "_":
        return EMPTY
    if tok.isdigit():
        return int(tok)
    raise ParseError("bad letter token %r" % tok)


def format_letters(cells: Iterable[Cell]) -> str:
    """Inverse of :func:`parse_letters`; compact for single-digit alphabets."""
    parts = []
    wide = False
    for c in cells:
        if c is STAR:
            parts.append("*")
        elif c is EMPTY:
            parts.append("_")
        else:
            parts.append(str(c))
            wide = wide or c > 9
    return (" " if wide else "").join(parts)


_RAY_RE = re.compile(r"^\(\s*([^)]*?)\s*\)\^-\s*([^@]*?)\s*(?:@\s*(-?\d+))?$")


def parse_ray(text: str) -> LeftRay:
    """Parse ray syntax ``(p)^- t @k``; a missing ``@k`` defaults to ``@0``."""
    m = _RAY_RE.match(text.strip())
    if not m:
        raise ParseError("bad ray syntax: %r" % text)
    period = parse_letters(m.group(1))
    transient = parse_letters(m.group(2))
    end = int(m.group(3)) if m.group(3) is not None else 0
    if any(c is STAR or c is EMPTY for c in period + transient):
        raise ParseError("rays admit plain letters only: %r" % text)
    return canonicalize_ray(period, transient, end)


def parse_pattern(text: str) -> Pattern:
    """Parse a wildcard pattern such as ``*2`` or ``11``."""
    cells = parse_letters(text)
    if not cells:
        raise ParseError("empty pattern")
    if any(c is EMPTY for c in cells):
        raise ParseError("patterns never match the empty letter: %r" % text)
    return cells


def format_pattern(pattern: Pattern) -> str:
    return format_letters(pattern)
