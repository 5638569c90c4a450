"""Free-group words, finite presentations and exact integer linear algebra.

Relators are stored as freely reduced words; abelianization goes through
Smith normal form over arbitrary-precision integers, with the unimodular
transforms returned so tests can verify U*A*V = D by exact multiplication.
No general isomorphism testing is attempted: reports state abelian
invariants plus the two named certificates (empty relator set => free;
commutators present and all relators in the commutator subgroup => free
abelian), which is exactly the level of argument the computations need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence


# ---------------------------------------------------------------------------
# free words


def reduce_word(letters: Iterable[tuple[str, int]]) -> "FreeWord":
    """Freely reduce a sequence of (generator, +-1) letters."""
    stack: list[tuple[str, int]] = []
    for gen, exp in letters:
        if exp not in (1, -1):
            raise ValueError(f"letter exponent must be +-1, got {exp}")
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return FreeWord(tuple(stack))


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word; letters are (generator label, +-1)."""

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for (g, e), (g2, e2) in zip(self.letters, self.letters[1:]):
            if g == g2 and e == -e2:
                raise ValueError("word is not freely reduced")

    @staticmethod
    def from_labels(labels: Sequence[str]) -> "FreeWord":
        return reduce_word((g, 1) for g in labels)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return reduce_word(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def exponent_sum(self, gen: str) -> int:
        return sum(e for g, e in self.letters if g == gen)

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def substitute(self, gen: str, image: "FreeWord") -> "FreeWord":
        out: list[tuple[str, int]] = []
        for g, e in self.letters:
            if g != gen:
                out.append((g, e))
            elif e == 1:
                out.extend(image.letters)
            else:
                out.extend(image.inverse().letters)
        return reduce_word(out)

    def cyclic_rotations(self) -> list["FreeWord"]:
        n = len(self.letters)
        return [reduce_word(self.letters[i:] + self.letters[:i]) for i in range(n)] or [self]

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}-" for g, e in self.letters)


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[FreeWord, ...]

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise ValueError("duplicate generator labels")
        for rel in self.relators:
            unknown = rel.generators() - gens
            if unknown:
                raise ValueError(f"relator uses unknown labels {sorted(unknown)}")

    def __str__(self):
        rels = "; ".join(str(r) for r in self.relators)
        return f"gens: {' '.join(self.generators)}; rel: {rels}"


def presentation_from_pairs(
    generators: Sequence[str],
    pairs: Iterable[tuple[Sequence[str], Sequence[str]]],
) -> Presentation:
    """Relators u * v^-1 from ordered pairs of positive words; trivial
    relators are dropped, duplicates kept once."""
    relators: list[FreeWord] = []
    seen = set()
    for u, v in pairs:
        rel = FreeWord.from_labels(u) * FreeWord.from_labels(v).inverse()
        if rel and rel.letters not in seen:
            seen.add(rel.letters)
            relators.append(rel)
    return Presentation(tuple(generators), tuple(relators))


def universal_presentation_from_table(
    elements: Sequence[str],
    table: dict[tuple[str, str], str],
) -> Presentation:
    """One generator per element, one relation (x)(y) = (x o y) per
    defined product in the partial-operation table."""
    known = set(elements)
    pairs = []
    for (x, y), z in sorted(table.items()):
        for label in (x, y, z):
            if label not in known:
                raise ValueError(f"table label {label!r} not among elements")
        pairs.append(([x, y], [z]))
    return presentation_from_pairs(list(elements), pairs)


# ---------------------------------------------------------------------------
# exact integer matrices

IntMatrix = list[list[int]]


def _identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(rows)]


def mat_det(a: IntMatrix) -> int:
    """Determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(matrix: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (D, U, V) with U*A*V = D diagonal, d1 | d2 | ..., U, V unimodular.

    Pivoting always picks the smallest nonzero absolute value, so the
    reduction is deterministic.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    d = [row[:] for row in matrix]
    u = _identity(rows)
    v = _identity(cols)

    def row_op(i, j, q):  # row_i -= q * row_j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            d[r][i] -= q * d[r][j]
        for r in range(cols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while True:
        # smallest nonzero |entry| in the remaining block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        if d[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, rows):
            if d[i][t] != 0:
                q = d[i][t] // d[t][t]
                row_op(i, t, q)
                if d[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if d[t][j] != 0:
                q = d[t][j] // d[t][t]
                col_op(j, t, q)
                if d[t][j] != 0:
                    dirty = True
        if dirty:
            continue  # re-pick a smaller pivot in the same block
        # pivot must divide every remaining entry
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            # fold the offending row into row t and restart the block
            d[t] = [x + y for x, y in zip(d[t], d[offender])]
            u[t] = [x + y for x, y in zip(u[t], u[offender])]
            continue
        t += 1
        if t == rows or t == cols:
            break
    return d, u, v


def smith_invariants(matrix: IntMatrix) -> list[int]:
    """Nonzero diagonal invariant factors d1 | d2 | ... of the matrix."""
    d, _, _ = smith_normal_form(matrix)
    out = [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]
    return [x for x in out if x != 0]


def hnf(matrix: IntMatrix) -> tuple[int, IntMatrix]:
    """Row Hermite normal form over Z: returns (rank, basis rows).

    Basis rows generate the same row lattice as the input; pivots are
    positive and entries above each pivot are reduced into [0, pivot).
    """
    rows = [row[:] for row in matrix if any(row)]
    if not rows:
        return 0, []
    cols = len(rows[0])
    basis: list[list[int]] = []
    r = 0
    for c in range(cols):
        # euclidean elimination in column c over rows r..
        while True:
            live = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(rows[i][c]))
            rows[r], rows[i0] = rows[i0], rows[r]
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][c] != 0:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c] != 0:
                        done = False
            if done:
                break
        if r < len(rows) and rows[r][c] != 0:
            for b in basis:
                if b[c] != 0:
                    q = b[c] // rows[r][c]
                    b[:] = [x - q * y for x, y in zip(b, rows[r])]
            basis.append(rows[r])
            r += 1
    return len(basis), basis


def abelian_invariants(pres: Presentation) -> tuple[int, list[int]]:
    """(free rank, torsion factors > 1) of the abelianized group."""
    if not pres.relators:
        return len(pres.generators), []
    matrix = [[rel.exponent_sum(g) for g in pres.generators] for rel in pres.relators]
    factors = smith_invariants(matrix)
    free_rank = len(pres.generators) - len(factors)
    torsion = [f for f in factors if f > 1]
    return free_rank, torsion


# ---------------------------------------------------------------------------
# Tietze simplification


def tietze_simplify(pres: Presentation, budget: int = 100) -> Presentation:
    """Bounded simplification: drop empty/duplicate relators and eliminate
    generators defined by relators of length <= 2.  Output presents an
    isomorphic group."""
    if budget < 0:
        raise ValueError("budget must be >= 0")
    gens = list(pres.generators)
    relators = list(pres.relators)
    for _ in range(budget):
        seen = set()
        cleaned = []
        for rel in relators:
            key = min(rel.letters, rel.inverse().letters)
            if rel and key not in seen:
                seen.add(key)
                cleaned.append(rel)
        relators = cleaned
        elim: Optional[tuple[str, FreeWord]] = None
        for rel in relators:
            if len(rel) == 1:
                elim = (rel.letters[0][0], FreeWord())
                break
            if len(rel) == 2:
                (g1, e1), (g2, e2) = rel.letters
                if g1 != g2:
                    # g1^e1 g2^e2 = 1  =>  g1 = g2^(-e2*e1)
                    image = FreeWord(((g2, -e2),)) if e1 == 1 else FreeWord(((g2, e2),))
                    elim = (g1, image)
                    break
        if elim is None:
            break
        gen, image = elim
        gens.remove(gen)
        relators = [r.substitute(gen, image) for r in relators]
    seen = set()
    final = []
    for rel in relators:
        key = min(rel.letters, rel.inverse().letters)
        if rel and key not in seen:
            seen.add(key)
            final.append(rel)
    return Presentation(tuple(gens), tuple(final))


# ---------------------------------------------------------------------------
# homomorphism checking against simple target oracles


def free_target_oracle() -> Callable[[FreeWord], bool]:
    """Triviality in a free group: the reduced word is empty."""
    return lambda word: not word


def free_abelian_target_oracle() -> Callable[[FreeWord], bool]:
    """Triviality in a free abelian group: all exponent sums vanish.
    With a single target generator this is triviality in Z."""
    return lambda word: all(word.exponent_sum(g) == 0 for g in word.generators())


def check_homomorphism(
    pres: Presentation,
    images: dict[str, FreeWord],
    target_is_trivial: Callable[[FreeWord], bool],
) -> bool:
    """True iff mapping each generator to its image kills every relator."""
    missing = set(pres.generators) - set(images)
    if missing:
        raise ValueError(f"no image for generators {sorted(missing)}")
    for rel in pres.relators:
        out = FreeWord()
        for g, e in rel.letters:
            out = out * (images[g] if e == 1 else images[g].inverse())
        if not target_is_trivial(out):
            return False
    return True


# ---------------------------------------------------------------------------
# named certificates


def certificate_free(pres: Presentation) -> Optional[int]:
    """Empty relator set certifies a free group; returns its rank."""
    if any(pres.relators):
        return None
    return len(pres.generators)


def certificate_free_abelian(pres: Presentation) -> Optional[int]:
    """Certify the group is Z^n.

    Conditions: every relator lies in the commutator subgroup (all exponent
    sums zero), and for each generator pair some relator is the plain
    commutator (up to inversion and cyclic rotation).  The relations then
    force commutativity, and abelianized they impose nothing, so the group
    is Z^n exactly.
    """
    for rel in pres.relators:
        if any(rel.exponent_sum(g) != 0 for g in pres.generators):
            return None
    needed = {frozenset((a, b)) for i, a in enumerate(pres.generators)
              for b in pres.generators[i + 1:]}
    found = set()
    for rel in pres.relators:
        if len(rel) != 4:
            continue
        gens = sorted(rel.generators())
        if len(gens) != 2:
            continue
        a, b = gens
        commutator = FreeWord(((a, 1), (b, 1), (a, -1), (b, -1)))
        variants = set()
        for w in (commutator, commutator.inverse()):
            for rot in w.cyclic_rotations():
                variants.add(rot.letters)
        if rel.letters in variants:
            found.add(frozenset((a, b)))
    if needed <= found:
        return len(pres.generators)
    return None
