"""Universal-group computations: the equal-length relation harvest for
1-D point sets, the connected tiling semigroup of a factorial language
(strings with in/out accents), and presentation assembly from partial
operation tables.

Truncation stamps travel with every result: a harvest knows the window
and factor length it was computed from, and accent products that would
leave the materialised language raise instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .exactnum import QuadraticRational as QR
from .modelset import PartialActionData
from .pointset import LengthFunction
from .presentation import Presentation, presentation_from_pairs, universal_presentation_from_table
from .sequences import FactorLanguage, IndexedWord, factor_language


# ---------------------------------------------------------------------------
# equal-length relation harvest


@dataclass(frozen=True)
class HarvestReport:
    """Presentation harvested from one window: every relation pair is two
    distinct factors of the same exact length."""

    presentation: Presentation
    window_start: int
    window_len: int
    max_len: int
    pairs: tuple[tuple[str, str, QR], ...]

    def to_json_dict(self) -> dict:
        return {
            "window": {"start": self.window_start, "length": self.window_len},
            "max_len": self.max_len,
            "generators": list(self.presentation.generators),
            "pairs": [[u, v, str(length)] for u, v, length in self.pairs],
        }


def word_length(word: str, lengths: LengthFunction) -> QR:
    total = QR(0)
    for c in word:
        total = total + lengths[c]
    return total


def harvest_equal_length_relations(
    window: IndexedWord,
    lengths: LengthFunction,
    max_len: int,
) -> HarvestReport:
    """Scan the factor language of the window, group factors by exact
    length, and emit one relation pair per unordered pair of distinct
    equal-length factors."""
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    lang = factor_language(window, max_len)
    factors = sorted(lang.words)
    by_length: dict[QR, list[str]] = {}
    for w in factors:
        by_length.setdefault(word_length(w, lengths), []).append(w)
    pairs = []
    for length in sorted(by_length):
        group = sorted(by_length[length])
        for i, u in enumerate(group):
            for v in group[i + 1:]:
                pairs.append((u, v, length))
    generators = sorted(set(window.letters))
    pres = presentation_from_pairs(generators, [(list(u), list(v)) for u, v, _ in pairs])
    return HarvestReport(pres, window.start_index, len(window), max_len, tuple(pairs))


# ---------------------------------------------------------------------------
# the connected tiling semigroup of a factorial language


@dataclass(frozen=True)
class AccentString:
    """A word carrying an out accent and an in accent (same position:
    check accent).  The underlying word must belong to the language the
    string is used with; operations take the language explicitly."""

    word: str
    out_pos: int
    in_pos: int

    def __post_init__(self):
        if not self.word:
            raise ValueError("accent string needs a non-empty word")
        for pos in (self.out_pos, self.in_pos):
            if not 0 <= pos < len(self.word):
                raise ValueError("accent position out of range")

    def __str__(self):
        marks = []
        for i, c in enumerate(self.word):
            if i == self.out_pos == self.in_pos:
                marks.append(f"{c}^")
            elif i == self.out_pos:
                marks.append(f"{c}`")
            elif i == self.in_pos:
                marks.append(f"{c}'")
            else:
                marks.append(c)
        return "".join(marks)


def accent_inverse(p: AccentString) -> AccentString:
    return AccentString(p.word, p.in_pos, p.out_pos)


def accent_is_idempotent(p: AccentString) -> bool:
    return p.out_pos == p.in_pos


def accent_multiply(p: AccentString, q: AccentString, lang: FactorLanguage):
    """Place p above q with p's in-letter over q's out-letter; match on the
    overlap ignoring accents, glue, keep p's out accent and q's in accent.
    None if the words mismatch or the glued word is not in the language."""
    offset = p.in_pos - q.out_pos  # q's frame shifted into p's frame
    lo = min(0, offset)
    hi = max(len(p.word), offset + len(q.word))
    over_lo, over_hi = max(0, offset), min(len(p.word), offset + len(q.word))
    if p.word[over_lo:over_hi] != q.word[over_lo - offset:over_hi - offset]:
        return None
    glued = []
    for i in range(lo, hi):
        if 0 <= i < len(p.word):
            glued.append(p.word[i])
        else:
            glued.append(q.word[i - offset])
    word = "".join(glued)
    if word not in lang:  # may raise TruncationError beyond the stamp
        return None
    return AccentString(word, p.out_pos - lo, q.in_pos + offset - lo)


def accent_natural_leq(s: AccentString, t: AccentString) -> bool:
    """s <= t iff t's word embeds in s's word with both accents aligned."""
    shift = s.out_pos - t.out_pos
    if shift < 0 or shift + len(t.word) > len(s.word):
        return False
    return (s.word[shift:shift + len(t.word)] == t.word
            and s.in_pos == t.in_pos + shift)


def accent_max_above(s: AccentString) -> AccentString:
    """Strip the context outside the accent span; the unique maximal
    element above s."""
    lo, hi = min(s.out_pos, s.in_pos), max(s.out_pos, s.in_pos)
    return AccentString(s.word[lo:hi + 1], s.out_pos - lo, s.in_pos - lo)


def enumerate_language_semigroup(lang: FactorLanguage) -> list[AccentString]:
    out = []
    for w in sorted(lang.words):
        for i in range(len(w)):
            for j in range(len(w)):
                out.append(AccentString(w, i, j))
    return out


def enumerate_end_accented_and_max(lang: FactorLanguage) -> tuple[list[AccentString], list[AccentString]]:
    """C = out accent on the first letter, in accent on the last; the
    maximal elements are C together with its inverses."""
    c_elems = [AccentString(w, 0, len(w) - 1) for w in sorted(lang.words)]
    maximal = list(c_elems)
    seen = {(e.word, e.out_pos, e.in_pos) for e in maximal}
    for e in c_elems:
        inv = accent_inverse(e)
        key = (inv.word, inv.out_pos, inv.in_pos)
        if key not in seen:
            seen.add(key)
            maximal.append(inv)
    return c_elems, maximal


def decompose_into_two_letter(c: AccentString) -> list[AccentString]:
    """The unique factorization of an end-accented string into overlapping
    two-letter end-accented strings."""
    if not (c.out_pos == 0 and c.in_pos == len(c.word) - 1):
        raise ValueError("decomposition applies to end-accented strings")
    if len(c.word) < 2:
        raise ValueError("length-1 strings do not decompose")
    return [AccentString(c.word[i:i + 2], 0, 1) for i in range(len(c.word) - 1)]


def compose_chain(parts: list[AccentString], lang: FactorLanguage) -> AccentString:
    out = parts[0]
    for nxt in parts[1:]:
        out = accent_multiply(out, nxt, lang)
        if out is None:
            raise ValueError("chain does not compose")
    return out


def universal_group_of_language(lang: FactorLanguage) -> tuple[Presentation, int]:
    """Free presentation on the two-letter factors of the language; its
    rank is the number of such factors."""
    if lang.max_len < 2:
        raise ValueError("language must be computed to length >= 2")
    two = lang.of_length(2)
    return Presentation(tuple(two), ()), len(two)


# ---------------------------------------------------------------------------
# presentations from partial-operation tables


TableSource = Union[dict, PartialActionData]


def maxset_presentation(source: TableSource) -> Presentation:
    """Presentation of the universal group of a finite partial-operation
    structure: a chained-difference table keyed by exact values, or a
    generator/relation harvest of a partial action.  Generators are
    labelled by their exact group values."""
    if isinstance(source, PartialActionData):
        labels = source.element_labels()
        pairs = [([str(g), str(gp)], [str(total)]) for g, gp, total in source.relations]
        return presentation_from_pairs(labels, pairs)
    elements: set[str] = set()
    table: dict[tuple[str, str], str] = {}
    for (a, b), c in source.items():
        ka, kb, kc = str(a), str(b), str(c)
        elements.update((ka, kb, kc))
        table[(ka, kb)] = kc
    return universal_presentation_from_table(sorted(elements), table)
