"""Abelian-class enumeration and exact continuant-value censuses.

An Abelian class is the set of all rearrangements of a word, with every
word identified with its reversal.  This module enumerates a class exactly
once per reversal pair, evaluates the continuant on every member, and
reports the class size N, the number of distinct values P, the multiplicity
spectrum (how many values are hit exactly mu times), and witnesses.

Enumeration is lexicographic next-multiset-permutation; a permutation is
kept iff it is <= its reversal, which visits each reversal class exactly
once (at its canonical representative, in lexicographic order) without any
seen-set.  Values are keyed by exact integer equality, never by hash alone.

Work shards over the first two letters of the word, so enumeration and
evaluation parallelize; the merge of value tables is associative and
commutative and is applied in fixed prefix order, making reports
bit-identical regardless of the worker count.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    Alphabet,
    CanonicalWord,
    ParikhVector,
    Word,
    abelian_class_of,
    check_aligned,
    continuant,
    format_word,
)

DEFAULT_CLASS_LIMIT = 10**8
DEFAULT_VALUE_BUDGET = 10**6

# Witness retention: the top WITNESS_TOP_K distinct multiplicities, at most
# WITNESS_VALUES_PER_MULT values for each, at most WITNESS_WORDS_PER_VALUE
# words for each value.  Bounded memory, useful diagnostics.
WITNESS_TOP_K = 3
WITNESS_VALUES_PER_MULT = 10
WITNESS_WORDS_PER_VALUE = 10


class ClassTooLargeError(Exception):
    """The Abelian class exceeds the configured enumeration limit."""

    def __init__(self, class_size: int, limit: int):
        super().__init__(
            f"class has {class_size} members up to reversal, exceeding the limit of {limit}"
        )
        self.class_size = class_size
        self.limit = limit

    def __reduce__(self):
        return (type(self), (self.class_size, self.limit))


class ValueBudgetExceededError(Exception):
    """The census value table outgrew its memory budget.

    The attached counters describe partial progress only; they are not
    valid census statistics.
    """

    def __init__(self, distinct_values_seen: int, budget: int, classes_evaluated: int):
        super().__init__(
            f"value table reached {distinct_values_seen} distinct values, exceeding the "
            f"budget of {budget} after {classes_evaluated} classes; partial counts are "
            "not valid statistics"
        )
        self.distinct_values_seen = distinct_values_seen
        self.budget = budget
        self.classes_evaluated = classes_evaluated

    def __reduce__(self):
        return (type(self), (self.distinct_values_seen, self.budget, self.classes_evaluated))


def _counts_of(parikh) -> tuple[int, ...]:
    if isinstance(parikh, ParikhVector):
        return parikh.counts
    return ParikhVector(tuple(parikh)).counts


def exact_class_count(parikh) -> int:
    """Exact number of class members up to reversal: (multinomial + palindromes) / 2.

    The multinomial n!/(p_1! ... p_s!) counts raw permutations; palindromic
    arrangements (fixed points of reversal) number 0 when more than one
    count is odd, and otherwise equal the multinomial of floor(n/2) over
    the halved counts.
    """
    counts = _counts_of(parikh)
    n = sum(counts)
    multi = math.factorial(n)
    for p in counts:
        multi //= math.factorial(p)
    odd = sum(1 for p in counts if p % 2)
    if odd > 1:
        pal = 0
    else:
        pal = math.factorial(n // 2)
        for p in counts:
            pal //= math.factorial(p // 2)
    return (multi + pal) // 2


def palindromic_count(parikh) -> int:
    """Number of palindromic arrangements in the class."""
    counts = _counts_of(parikh)
    odd = sum(1 for p in counts if p % 2)
    if odd > 1:
        return 0
    pal = math.factorial(sum(counts) // 2)
    for p in counts:
        pal //= math.factorial(p // 2)
    return pal


def multiset_permutations(letters: Sequence[int], counts: Sequence[int]) -> Iterator[tuple]:
    """All permutations of the multiset {letters[i] x counts[i]}, lex ascending."""
    start = []
    for a, p in zip(letters, counts):
        start.extend([a] * p)
    start.sort()
    return _perms_from(start)


def _perms_from(start: list) -> Iterator[tuple]:
    # Lexicographic successor loop on a working list; O(1) amortized extra
    # work per permutation.
    w = list(start)
    n = len(w)
    while True:
        yield tuple(w)
        i = n - 2
        while i >= 0 and w[i] >= w[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while w[j] <= w[i]:
            j -= 1
        w[i], w[j] = w[j], w[i]
        w[i + 1 :] = w[:i:-1]


def enumerate_classes(
    alphabet: Alphabet,
    parikh: ParikhVector,
    *,
    limit: int = DEFAULT_CLASS_LIMIT,
) -> Iterator[CanonicalWord]:
    """Yield each reversal class of the Abelian class exactly once.

    Palindromes appear once; output is in lexicographic order of the
    canonical representatives.  Raises ClassTooLargeError before yielding
    anything if the class exceeds ``limit``.
    """
    check_aligned(alphabet, parikh)
    size = exact_class_count(parikh)
    if size > limit:
        raise ClassTooLargeError(size, limit)

    def gen() -> Iterator[CanonicalWord]:
        for w in multiset_permutations(alphabet.letters, parikh.counts):
            if w <= w[::-1]:
                yield CanonicalWord._trusted(w)

    return gen()


# ---------------------------------------------------------------------------
# Census engine
# ---------------------------------------------------------------------------

def _scan_shard(args) -> tuple[int, dict, dict]:
    """Count continuant values over one prefix shard of the class.

    Returns (classes_seen, value -> count, value -> tuple of first words).
    Module level so ProcessPoolExecutor can pickle it.  Aborts as soon as
    the shard's own table outgrows the budget; the merge re-checks the
    union.
    """
    letters, counts, prefix, words_per_value, value_budget = args
    remaining = list(counts)
    for a in prefix:
        remaining[letters.index(a)] -= 1
    table: dict = {}
    words: dict = {}
    classes = 0
    for rest in multiset_permutations(letters, remaining):
        w = prefix + rest
        if w <= w[::-1]:
            prev, cur = 0, 1
            for a in w:
                prev, cur = cur, a * cur + prev
            classes += 1
            seen = table.get(cur)
            if seen is None:
                table[cur] = 1
                if len(table) > value_budget:
                    raise ValueBudgetExceededError(len(table), value_budget, classes)
            else:
                table[cur] = seen + 1
            if words_per_value:
                got = words.get(cur)
                if got is None:
                    words[cur] = [w]
                elif len(got) < words_per_value:
                    got.append(w)
    return classes, table, {v: tuple(ws) for v, ws in words.items()}


def _shard_prefixes(letters: tuple, counts: tuple) -> list[tuple]:
    """Distinct two-letter prefixes of class members, in lexicographic order."""
    prefixes = []
    for i, a in enumerate(letters):
        if counts[i] == 0:
            continue
        for j, b in enumerate(letters):
            left = counts[j] - (1 if i == j else 0)
            if left > 0:
                prefixes.append((a, b))
    return prefixes


def _value_table(
    alphabet: Alphabet,
    parikh: ParikhVector,
    *,
    workers: int = 1,
    limit: int = DEFAULT_CLASS_LIMIT,
    value_budget: int = DEFAULT_VALUE_BUDGET,
    words_per_value: int = 0,
) -> tuple[int, dict, dict]:
    """Full census table: (class count, value -> count, value -> first words).

    Deterministic for fixed inputs regardless of ``workers``: shards are
    merged in prefix order, so per-value word lists come out in global
    lexicographic order.
    """
    check_aligned(alphabet, parikh)
    size = exact_class_count(parikh)
    if size > limit:
        raise ClassTooLargeError(size, limit)

    letters, counts = alphabet.letters, parikh.counts
    n = parikh.n
    if workers <= 1 or n < 2:
        shards = [(letters, counts, (), words_per_value, value_budget)]
    else:
        shards = [
            (letters, counts, p, words_per_value, value_budget)
            for p in _shard_prefixes(letters, counts)
        ]

    classes = 0
    table: dict = {}
    words: dict = {}

    def merge(part: tuple[int, dict, dict]) -> None:
        nonlocal classes
        shard_classes, shard_table, shard_words = part
        classes += shard_classes
        for v, c in shard_table.items():
            table[v] = table.get(v, 0) + c
        for v, ws in shard_words.items():
            got = words.get(v)
            if got is None:
                words[v] = list(ws)
            elif len(got) < words_per_value:
                got.extend(ws[: words_per_value - len(got)])
        if len(table) > value_budget:
            raise ValueBudgetExceededError(len(table), value_budget, classes)

    if len(shards) == 1 or workers <= 1:
        for shard in shards:
            merge(_scan_shard(shard))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_shard, shards):
                merge(part)

    return classes, table, {v: tuple(ws) for v, ws in words.items()}


@dataclass(frozen=True)
class ValueWitnesses:
    """One census value with its multiplicity and some attaining words."""

    value: int
    multiplicity: int
    words: tuple[CanonicalWord, ...]

    def to_json_dict(self) -> dict:
        return {
            "value": str(self.value),
            "multiplicity": self.multiplicity,
            "words": [format_word(w) for w in self.words],
        }


@dataclass(frozen=True)
class CensusReport:
    """Exact census of continuant values over one Abelian class.

    spectrum maps multiplicity mu -> number of distinct values attained
    exactly mu times, stored as (mu, count) pairs in increasing mu.
    """

    alphabet: Alphabet
    parikh: ParikhVector
    class_size: int
    distinct_values: int
    spectrum: tuple[tuple[int, int], ...]
    max_multiplicity: int
    max_value: int
    min_value: int
    witnesses: tuple[ValueWitnesses, ...]

    def __post_init__(self) -> None:
        total = sum(mu * cnt for mu, cnt in self.spectrum)
        if total != self.class_size:
            raise ValueError(f"spectrum mass {total} != class size {self.class_size}")
        values = sum(cnt for _, cnt in self.spectrum)
        if values != self.distinct_values:
            raise ValueError(f"spectrum support {values} != distinct values {self.distinct_values}")

    @property
    def n(self) -> int:
        return self.parikh.n

    def spectrum_dict(self) -> dict[int, int]:
        return dict(self.spectrum)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "alphabet": list(self.alphabet.letters),
            "parikh": list(self.parikh.counts),
            "N": str(self.class_size),
            "P": str(self.distinct_values),
            "spectrum": [[mu, cnt] for mu, cnt in self.spectrum],
            "max_multiplicity": self.max_multiplicity,
            "max_value": str(self.max_value),
            "min_value": str(self.min_value),
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }


def run_census(
    alphabet: Alphabet,
    parikh: ParikhVector,
    *,
    workers: int = 1,
    limit: int = DEFAULT_CLASS_LIMIT,
    value_budget: int = DEFAULT_VALUE_BUDGET,
    witness_top_k: int = WITNESS_TOP_K,
) -> CensusReport:
    """Census the class: evaluate K on every member and aggregate by value."""
    classes, table, words = _value_table(
        alphabet,
        parikh,
        workers=workers,
        limit=limit,
        value_budget=value_budget,
        words_per_value=WITNESS_WORDS_PER_VALUE,
    )
    spectrum = Counter(table.values())
    witnesses = []
    for mu in sorted(spectrum, reverse=True)[:witness_top_k]:
        hit_values = sorted(v for v, c in table.items() if c == mu)
        for v in hit_values[:WITNESS_VALUES_PER_MULT]:
            witnesses.append(
                ValueWitnesses(
                    value=v,
                    multiplicity=mu,
                    words=tuple(CanonicalWord._trusted(w) for w in words[v]),
                )
            )
    return CensusReport(
        alphabet=alphabet,
        parikh=parikh,
        class_size=classes,
        distinct_values=len(table),
        spectrum=tuple(sorted(spectrum.items())),
        max_multiplicity=max(spectrum),
        max_value=max(table),
        min_value=min(table),
        witnesses=tuple(witnesses),
    )


def multiplicity_of(word: Sequence[int], *, limit: int = DEFAULT_CLASS_LIMIT) -> int:
    """How many reversal classes in the Abelian class of ``word`` share its value.

    Streaming count, O(1) memory: enumerates the class and counts members
    whose continuant equals K(word).
    """
    w = Word(word)
    target = continuant(w)
    if len(w) == 0:
        return 1
    alphabet, parikh = abelian_class_of(w)
    size = exact_class_count(parikh)
    if size > limit:
        raise ClassTooLargeError(size, limit)
    hits = 0
    for perm in multiset_permutations(alphabet.letters, parikh.counts):
        if perm <= perm[::-1] and continuant(perm) == target:
            hits += 1
    return hits
