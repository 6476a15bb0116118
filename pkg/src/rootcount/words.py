"""Substitution rules, words and count vectors.

Symbols are plain ``int`` indices in ``[0, m)``. A word is a tuple of symbols
and a count vector is a tuple of non-negative ints, one per symbol.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

Word = tuple[int, ...]
CountVector = tuple[int, ...]

DEFAULT_LENGTH_CAP = 10**6


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def _check_symbols(word: Iterable[int], m: int) -> None:
    for s in word:
        if not 0 <= s < m:
            raise DomainError(f"symbol {s} out of range for alphabet of size {m}")


@dataclass(frozen=True)
class RuleSet:
    """A substitution ``j -> images[j]`` over the alphabet ``{0, ..., m-1}``."""

    images: tuple[Word, ...]

    def __post_init__(self):
        images = tuple(tuple(int(s) for s in img) for img in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise DomainError("a rule set needs at least one symbol")
        for j, img in enumerate(images):
            if not img:
                raise DomainError(f"image of symbol {j} is empty")
            _check_symbols(img, len(images))

    @property
    def m(self) -> int:
        return len(self.images)

    def image_lengths(self) -> tuple[int, ...]:
        return tuple(len(img) for img in self.images)


def make_root_rules(m: int, N: int) -> RuleSet:
    """Rules whose letter-frequency ratios tend to ``N ** (1/m)``.

    ``j -> j (j+1)`` for ``j < m-1`` and ``m-1 -> (m-1) 0 ... 0`` with ``N``
    trailing zeros.

    >>> make_root_rules(2, 2).images
    ((0, 1), (1, 0, 0))
    """
    if m < 1:
        raise DomainError(f"alphabet size must be >= 1, got {m}")
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    images = [(j, j + 1) for j in range(m - 1)]
    images.append((m - 1,) + (0,) * N)
    return RuleSet(tuple(images))


def rewrite(rules: RuleSet, word: Sequence[int]) -> Word:
    _check_symbols(word, rules.m)
    images = rules.images
    out: list[int] = []
    for s in word:
        out.extend(images[s])
    return tuple(out)


class Expansion(NamedTuple):
    words: list[Word]
    truncated: bool


def iterate_words(
    rules: RuleSet,
    seed: Sequence[int] = (0,),
    depth: int = 0,
    length_cap: int = DEFAULT_LENGTH_CAP,
) -> Expansion:
    """Return ``W_0 .. W_depth`` where ``W_i = rewrite(rules, W_{i-1})``.

    Stops before building a word longer than ``length_cap``; ``truncated`` is
    then set and fewer than ``depth + 1`` words come back.
    """
    seed = tuple(seed)
    if not seed:
        raise DomainError("seed word must be nonempty")
    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    if length_cap < len(seed):
        raise DomainError(f"length cap {length_cap} is shorter than the seed")
    _check_symbols(seed, rules.m)

    lengths = rules.image_lengths()
    words = [seed]
    counts = count(seed, rules.m)
    for _ in range(depth):
        # next length is known from the counts alone
        next_len = sum(c * n for c, n in zip(counts, lengths))
        if next_len > length_cap:
            return Expansion(words, True)
        w = rewrite(rules, words[-1])
        words.append(w)
        counts = count(w, rules.m)
    return Expansion(words, False)


def count(word: Sequence[int], m: int) -> CountVector:
    _check_symbols(word, m)
    c = Counter(word)
    return tuple(c.get(j, 0) for j in range(m))


def parse_word(text: str) -> Word:
    """Parse ``"0112"`` (one digit per symbol) or ``"10 11 3"`` (space separated)."""
    text = text.strip()
    if not text:
        return ()
    parts = text.split() if any(ch.isspace() for ch in text) else list(text)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise DomainError(f"not a word: {text!r}") from None


def format_word(word: Sequence[int], m: int) -> str:
    if m <= 10:
        return "".join(str(s) for s in word)
    return " ".join(str(s) for s in word)


class RulesFormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def format_rules(rules: RuleSet) -> str:
    return "".join(
        f"{j}: {' '.join(str(s) for s in img)}\n" for j, img in enumerate(rules.images)
    )


def parse_rules(text: str) -> RuleSet:
    """Parse the ``<j>: <i1> <i2> ...`` rules text format.

    Lines must appear in order ``j = 0 .. m-1``; ``m`` is the number of rule
    lines. Blank lines and ``#`` comments are skipped.
    """
    images: list[Word] = []
    linenos: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise RulesFormatError(lineno, "expected '<symbol>: <image>'")
        try:
            j = int(head)
            img = tuple(int(tok) for tok in body.split())
        except ValueError:
            raise RulesFormatError(lineno, "non-integer symbol") from None
        if j != len(images):
            raise RulesFormatError(lineno, f"expected rule for symbol {len(images)}, got {j}")
        if not img:
            raise RulesFormatError(lineno, f"empty image for symbol {j}")
        images.append(img)
        linenos.append(lineno)
    if not images:
        raise RulesFormatError(0, "no rules found")
    m = len(images)
    for lineno, img in zip(linenos, images):
        bad = [s for s in img if not 0 <= s < m]
        if bad:
            raise RulesFormatError(lineno, f"symbol {bad[0]} out of range for {m} rules")
    return RuleSet(tuple(images))
