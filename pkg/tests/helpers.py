"""Shared strategies and reference oracles for the test suite."""

from hypothesis import strategies as st

# Words of small positive letters; plenty for exercising the identities
# while keeping continuants at a few dozen digits.
letters = st.integers(min_value=1, max_value=9)
words = st.lists(letters, min_size=0, max_size=12).map(tuple)
nonempty_words = st.lists(letters, min_size=1, max_size=12).map(tuple)


def fibonacci(k: int) -> int:
    """F(1) = F(2) = 1; reference for the r = 1 recurrence."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def continuant_by_definition(word) -> int:
    """Literal top-down recursion, independent of the rolling-pair loop."""
    w = tuple(word)
    if len(w) == 0:
        return 1
    if len(w) == 1:
        return w[0]
    return w[-1] * continuant_by_definition(w[:-1]) + continuant_by_definition(w[:-2])


def small_classes(max_letters=4, max_total=8, max_letter=9):
    """Strategy producing (alphabet letters, parikh counts) for small classes."""

    @st.composite
    def build(draw):
        s = draw(st.integers(1, max_letters))
        alpha = tuple(sorted(draw(st.sets(st.integers(1, max_letter), min_size=s, max_size=s))))
        counts = []
        left = max_total - s
        for _ in range(s):
            c = draw(st.integers(0, min(3, left)))
            left -= c
            counts.append(1 + c)
        return alpha, tuple(counts)

    return build()
