"""Bi-infinite symbolic sequences and their factor languages.

A sequence is described by a :class:`SequenceSpec` (substitution fixed
point, periodic word, or two spliced half-infinite periodic words) and is
only ever materialised through a finite window, so every downstream
result carries its truncation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional


class TruncationError(ValueError):
    """A query reached beyond the materialised window."""


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("alphabet must be non-empty")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("alphabet letters must be distinct")

    def __contains__(self, letter: str) -> bool:
        return letter in self.letters

    def __iter__(self):
        return iter(self.letters)


@dataclass(frozen=True)
class IndexedWord:
    """A finite window of a bi-infinite sequence: letters at indices
    [start_index, start_index + len)."""

    start_index: int
    letters: str

    def __len__(self):
        return len(self.letters)

    @property
    def end_index(self) -> int:
        return self.start_index + len(self.letters)

    def at(self, i: int) -> str:
        if not self.start_index <= i < self.end_index:
            raise TruncationError(f"index {i} outside window [{self.start_index}, {self.end_index})")
        return self.letters[i - self.start_index]


def expand_substitution(rule: dict[str, str], seed: str, iterations: int) -> str:
    """Iterate a non-erasing substitution on a seed letter."""
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    for letter, image in rule.items():
        if not image:
            raise ValueError(f"erasing rule {letter!r} -> '' rejected")
    word = seed
    for _ in range(iterations):
        word = "".join(rule[c] for c in word)
    return word


def _resolve_seed_pair(rule: dict[str, str], seed: str, seed_left: Optional[str]) -> tuple[str, int]:
    """Find (u, k): sigma^k(seed) starts with seed, sigma^k(u) ends with u,
    and the two-letter pair u+seed occurs in the language."""
    for k in range(1, 9):
        image = expand_substitution(rule, seed, k)
        if not image.startswith(seed):
            continue
        candidates = [seed_left] if seed_left else sorted(rule)
        for u in candidates:
            if not expand_substitution(rule, u, k).endswith(u):
                continue
            # legality of the seed pair: u+seed must occur
            probe = expand_substitution(rule, seed, max(k * 4, 8))
            if u + seed in probe:
                return u, k
    raise ValueError(f"no legal two-sided seed pair for seed {seed!r}"
                     + (f" with left letter {seed_left!r}" if seed_left else ""))


@dataclass(frozen=True)
class SequenceSpec:
    """One of: substitution(rule, seed[, seed_left]), periodic(word),
    spliced(left, right).

    For substitutions the two-sided fixed point is seeded from the legal
    pair seed_left | seed; when seed_left is omitted it is resolved once
    and recorded so runs are reproducible.
    """

    kind: str
    rule: Optional[dict[str, str]] = None
    seed: Optional[str] = None
    seed_left: Optional[str] = None
    word: Optional[str] = None
    left: Optional[str] = None
    right: Optional[str] = None

    def __post_init__(self):
        if self.kind == "substitution":
            if not self.rule or not self.seed:
                raise ValueError("substitution spec needs rule and seed")
            u, _ = _resolve_seed_pair(self.rule, self.seed, self.seed_left)
            object.__setattr__(self, "seed_left", u)
        elif self.kind == "periodic":
            if not self.word:
                raise ValueError("periodic spec needs a word")
        elif self.kind == "spliced":
            if not self.left or not self.right:
                raise ValueError("spliced spec needs left and right words")
        else:
            raise ValueError(f"unknown sequence kind {self.kind!r}")

    def alphabet(self) -> Alphabet:
        if self.kind == "substitution":
            return Alphabet(tuple(sorted(self.rule)))
        if self.kind == "periodic":
            return Alphabet(tuple(sorted(set(self.word))))
        return Alphabet(tuple(sorted(set(self.left + self.right))))

    # JSON form, e.g. {"kind":"substitution","rule":{"a":"ab","b":"a"},"seed":"a"}
    def to_json(self) -> str:
        data = {"kind": self.kind}
        if self.kind == "substitution":
            data |= {"rule": self.rule, "seed": self.seed, "seed_left": self.seed_left}
        elif self.kind == "periodic":
            data |= {"word": self.word}
        else:
            data |= {"left": self.left, "right": self.right}
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "SequenceSpec":
        data = json.loads(text)
        return cls(**data)


def two_sided_window(spec: SequenceSpec, half_width: int) -> IndexedWord:
    """Letters of the bi-infinite sequence at indices [-half_width, half_width].

    Conventions: T(0) is the first letter of the periodic word (periodic),
    the last letter of the left word (spliced), or the last letter of the
    left fixed-point half (substitution); indices >= 1 continue with the
    right half.
    """
    if half_width < 1:
        raise ValueError("half_width must be >= 1")
    h = half_width
    if spec.kind == "periodic":
        w = spec.word
        letters = "".join(w[i % len(w)] for i in range(-h, h + 1))
        return IndexedWord(-h, letters)
    if spec.kind == "spliced":
        nl, nr = len(spec.left), len(spec.right)
        left = "".join(spec.left[(i - 1) % nl] for i in range(-h, 1))
        right = "".join(spec.right[(i - 1) % nr] for i in range(1, h + 1))
        return IndexedWord(-h, left + right)
    u, k = _resolve_seed_pair(spec.rule, spec.seed, spec.seed_left)
    left, right = u, spec.seed
    while len(left) < h + 1 or len(right) < h:
        grown_left = expand_substitution(spec.rule, left, k)
        grown_right = expand_substitution(spec.rule, right, k)
        if len(grown_left) == len(left) and len(grown_right) == len(right):
            raise ValueError("substitution does not grow; two-sided extension undefined")
        left, right = grown_left, grown_right
    return IndexedWord(-h, left[-(h + 1):] + right[:h])


@dataclass(frozen=True)
class FactorLanguage:
    """All factors of a window up to max_len, stamped with the truncation
    they were computed from.  Factorial by construction."""

    words: frozenset[str]
    max_len: int
    window_start: int = 0
    window_len: int = 0

    def __contains__(self, word: str) -> bool:
        if len(word) > self.max_len:
            raise TruncationError(f"word of length {len(word)} beyond max_len {self.max_len}")
        return word in self.words

    def knows(self, word: str) -> bool:
        return len(word) <= self.max_len

    def of_length(self, n: int) -> list[str]:
        return sorted(w for w in self.words if len(w) == n)

    def alphabet(self) -> Alphabet:
        return Alphabet(tuple(sorted(self.of_length(1))))


def factor_language(word, max_len: int) -> FactorLanguage:
    """All distinct non-empty factors of length <= max_len in the window."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if isinstance(word, IndexedWord):
        text, start = word.letters, word.start_index
    else:
        text, start = str(word), 0
    found = set()
    n = len(text)
    for i in range(n):
        for length in range(1, min(max_len, n - i) + 1):
            found.add(text[i:i + length])
    return FactorLanguage(frozenset(found), max_len, start, n)
