"""The continuant-maximizing arrangement of an Abelian class.

Within the Abelian class described by an alphabet a_1 < ... < a_s and a
Parikh vector (p_1, ..., p_s), the continuant is maximized by a single
arrangement (up to reversal) whose shape depends only on s and the counts,
never on the letter values.  Writing a run a_i^{p_i - 1} as the "block" of
letter i, the arrangement walks the alphabet top-down emitting, per letter,
either the single letter or its block according to the parity of its
distance from the top, then walks bottom-up emitting the complementary
piece:

    down (i = s..1): single a_i if s - i even, block a_i^{p_i - 1} if odd
    up   (i = 1..s): block a_i^{p_i - 1} if s - i even, single a_i if odd

The two halves meet at the smallest letter, which consequently occurs as
one contiguous run a_1^{p_1} in the middle.  For the full alphabet
{1 < ... < s} with all counts m this reproduces

    s (s-1)^{m-1} (s-2) ... 1 1^{m-1} ... (s-2)^{m-1} (s-1) s^{m-1}.

The construction is verified against a brute-force oracle rather than
trusted: :func:`brute_force_extrema` enumerates the class exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import DEFAULT_CLASS_LIMIT, ClassTooLargeError, exact_class_count, multiset_permutations
from .core import Alphabet, CanonicalWord, ParikhVector, Word, canonicalize, check_aligned, continuant


@dataclass(frozen=True)
class ExtremalResult:
    """Extreme continuant values over a class, with all attaining words.

    ``argmax`` and ``argmin`` hold canonical representatives, sorted
    lexicographically.  For the regular continuant the argmax is a
    singleton (uniqueness up to reversal); the argmin is reported for
    exploratory use.
    """

    argmax: tuple[CanonicalWord, ...]
    argmin: tuple[CanonicalWord, ...]
    max_value: int
    min_value: int


def max_arrangement(alphabet: Alphabet, parikh: ParikhVector) -> Word:
    """Build the K-maximizing arrangement of the class.

    Rejects any zero count (shrink the alphabet first) and mismatched
    alphabet/Parikh lengths.  The output is a permutation of the class:
    its Parikh vector equals the input.
    """
    check_aligned(alphabet, parikh)
    letters, counts = alphabet.letters, parikh.counts
    s = len(letters)
    out: list[int] = []
    for idx in range(s - 1, -1, -1):  # top-down half
        if (s - 1 - idx) % 2 == 0:
            out.append(letters[idx])
        else:
            out.extend([letters[idx]] * (counts[idx] - 1))
    for idx in range(s):  # bottom-up half
        if (s - 1 - idx) % 2 == 0:
            out.extend([letters[idx]] * (counts[idx] - 1))
        else:
            out.append(letters[idx])
    return Word(out)


def brute_force_extrema(
    alphabet: Alphabet,
    parikh: ParikhVector,
    *,
    limit: int = DEFAULT_CLASS_LIMIT,
) -> ExtremalResult:
    """Exhaustive extremal oracle: evaluate K on the whole class.

    Enumerates every permutation, tracks the extreme values and all words
    attaining them, and reports the attaining reversal classes as
    deduplicated canonical words.
    """
    check_aligned(alphabet, parikh)
    size = exact_class_count(parikh)
    if size > limit:
        raise ClassTooLargeError(size, limit)
    best = worst = None
    best_words: list[tuple] = []
    worst_words: list[tuple] = []
    for w in multiset_permutations(alphabet.letters, parikh.counts):
        prev, cur = 0, 1
        for a in w:
            prev, cur = cur, a * cur + prev
        if best is None or cur > best:
            best, best_words = cur, [w]
        elif cur == best:
            best_words.append(w)
        if worst is None or cur < worst:
            worst, worst_words = cur, [w]
        elif cur == worst:
            worst_words.append(w)
    argmax = tuple(sorted(set(canonicalize(w) for w in best_words)))
    argmin = tuple(sorted(set(canonicalize(w) for w in worst_words)))
    return ExtremalResult(argmax=argmax, argmin=argmin, max_value=best, min_value=worst)


def verify_max_arrangement(
    alphabet: Alphabet,
    parikh: ParikhVector,
    *,
    limit: int = DEFAULT_CLASS_LIMIT,
) -> bool:
    """True iff the built arrangement is the unique brute-force argmax."""
    built = canonicalize(max_arrangement(alphabet, parikh))
    oracle = brute_force_extrema(alphabet, parikh, limit=limit)
    return oracle.argmax == (built,)


def rank_pattern(alphabet: Alphabet, parikh: ParikhVector) -> tuple[int, ...]:
    """Positions-by-rank shape of the arrangement: letter ranks, not values.

    Two alphabets of equal size with equal Parikh vectors always share this
    pattern; the arrangement depends only on (s, p).
    """
    word = max_arrangement(alphabet, parikh)
    index = {a: i for i, a in enumerate(alphabet.letters)}
    return tuple(index[a] for a in word)
