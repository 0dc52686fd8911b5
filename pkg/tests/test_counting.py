import math

from diagcalc.counting import bell, catalan, order_preserving_count

# Frozen reference values (computed independently; standard sequences).
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def test_bell_sequence():
    assert [bell(n) for n in range(len(BELL))] == BELL


def test_catalan_sequence():
    assert [catalan(n) for n in range(len(CATALAN))] == CATALAN


def test_catalan_binomial_form():
    for n in range(1, 12):
        assert catalan(n) == math.comb(2 * n, n) // (n + 1)


def test_order_preserving_count():
    # |O_n| = C(2n - 1, n - 1)
    assert [order_preserving_count(n) for n in range(1, 7)] == [1, 3, 10, 35, 126, 462]
    for n in range(1, 10):
        assert order_preserving_count(n) == math.comb(2 * n - 1, n - 1)


def test_bell_via_partition_count():
    # cross-check bell against a direct count of restricted-growth strings
    def count(n: int) -> int:
        total = 0

        def extend(pos: int, used: int):
            nonlocal total
            if pos == n:
                total += 1
                return
            for label in range(used + 1):
                extend(pos + 1, used + (label == used))

        extend(0, 0)
        return total

    for n in range(7):
        assert bell(n) == count(n)
