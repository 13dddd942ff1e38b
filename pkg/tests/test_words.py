"""Word generators, factor machinery, recurrence diagnostics."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import bit_words
from wordgraphs.words import (
    ContinuedFraction,
    WordError,
    complement_word,
    explicit_word,
    factor_complexity,
    factors,
    fibonacci_word,
    golden_slope,
    mechanical_word,
    periodic_word,
    recurrence_bound,
    reverse_star,
    substitution_word,
    word_from_json,
    word_to_json,
)


def scan_recurrence(p: str, n: int) -> int | None:
    """Oracle: literal window scan, reported under the same L//2 threshold."""
    L = len(p)
    fac = {p[i:i + n] for i in range(L - n + 1)}
    for m in range(n, L + 1):
        if all(fac <= {p[a + i:a + i + n] for i in range(m - n + 1)}
               for a in range(L - m + 1)):
            return m if m <= L // 2 else None
    return None


# -- generators ----------------------------------------------------------------


def test_explicit_and_periodic():
    assert explicit_word("0100").prefix(3) == "010"
    with pytest.raises(WordError):
        explicit_word("0100").prefix(5)
    assert periodic_word("10").prefix(6) == "101010"
    with pytest.raises(WordError):
        periodic_word("")
    with pytest.raises(WordError):
        explicit_word("012")


def test_mechanical_examples():
    assert mechanical_word(Fraction(1, 2)).prefix(6) == "010101"
    assert mechanical_word(Fraction(1, 3)).prefix(6) == "001001"
    with pytest.raises(WordError):
        mechanical_word(Fraction(3, 2))


def test_substitution_examples():
    assert fibonacci_word().prefix(13) == "0100101001001"
    tm = substitution_word({"0": "01", "1": "10"}, "0")
    assert tm.prefix(8) == "01101001"
    with pytest.raises(WordError):
        substitution_word({"0": "0", "1": "0"}, "0")  # non-growing
    with pytest.raises(WordError):
        substitution_word({"0": "10", "1": "0"}, "0")  # not prolongable


def test_golden_slope_matches_fibonacci_substitution():
    # characteristic Sturmian word: intercept equal to the slope
    mech = mechanical_word(golden_slope(), "slope")
    assert mech.prefix(1000) == fibonacci_word().prefix(1000)


def test_golden_slope_intercept_zero_is_the_shifted_word():
    # with intercept 0 the mechanical word carries one extra leading 0
    mech = mechanical_word(golden_slope())
    assert mech.prefix(200) == ("0" + fibonacci_word().prefix(199))


def test_continued_fraction_convergent():
    cf = ContinuedFraction(head=(2,), tail=(1,))
    assert cf.convergent(1) == Fraction(1, 2)
    assert cf.convergent(2) == Fraction(1, 3)
    # convergents approach 1/phi^2 = (3 - sqrt(5)) / 2
    assert abs(float(cf.convergent(40)) - 0.3819660112501051) < 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=200), st.integers(min_value=1, max_value=200))
def test_prefix_coherence_all_generators(n, m):
    lo, hi = min(n, m), max(n, m)
    for w in (periodic_word("10"), fibonacci_word(),
              mechanical_word(Fraction(2, 7)),
              mechanical_word(golden_slope(), "slope")):
        assert w.prefix(hi)[:lo] == w.prefix(lo)


@given(bit_words)
def test_complement_word_is_involution(bits):
    w = explicit_word(bits)
    assert complement_word(complement_word(w)) is w
    if bits:
        flipped = complement_word(w).prefix(len(bits))
        assert all(a != b for a, b in zip(bits, flipped))


@given(bit_words)
def test_reverse_star_twice_is_identity(bits):
    w = explicit_word(bits)
    L = len(bits)
    assert reverse_star(reverse_star(w, L), L).prefix(L) == bits


def test_reverse_star_examples():
    assert reverse_star(explicit_word("0110"), 4).prefix(4) == "0110"
    assert reverse_star(explicit_word("100"), 3).prefix(3) == "001"


# -- factors -------------------------------------------------------------------


def test_factors_examples():
    assert factors(periodic_word("01"), 2, 6).factors == {"01", "10"}
    assert factors(periodic_word("1"), 3, 10).factors == {"111"}
    assert factors(fibonacci_word(), 2, 13).factors == {"00", "01", "10"}
    with pytest.raises(WordError):
        factors(periodic_word("1"), 5, 3)


def test_factor_complexity():
    fib = factor_complexity(fibonacci_word(), 200, 10)
    assert fib == [n + 1 for n in range(1, 11)]
    assert factor_complexity(periodic_word("01"), 100, 8) == [2] * 8
    assert factor_complexity(periodic_word("1"), 100, 5) == [1] * 5


def test_recurrence_bound_examples():
    # least window length containing both length-2 factors of 0101... is 3
    assert recurrence_bound(periodic_word("01"), 2, 100) == 3
    assert recurrence_bound(periodic_word("1"), 1, 10) == 1
    # 100111...: the factor 10 never recurs, so no honest bound exists
    w = explicit_word("100" + "1" * 97)
    assert recurrence_bound(w, 2, 100) is None


@settings(max_examples=25, deadline=None)
@given(st.text(alphabet="01", min_size=2, max_size=24),
       st.integers(min_value=1, max_value=3))
def test_recurrence_bound_matches_window_scan(bits, n):
    if n <= len(bits):
        w = explicit_word(bits)
        assert recurrence_bound(w, n, len(bits)) == scan_recurrence(bits, n)


def test_recurrence_bound_window_property():
    w = fibonacci_word()
    L = 400
    m = recurrence_bound(w, 3, L)
    assert m is not None
    p = w.prefix(L)
    fac = factors(w, 3, L).factors
    for a in range(0, L - m + 1, 7):
        window = p[a:a + m]
        assert {window[i:i + 3] for i in range(m - 2)} == fac


def test_fibonacci_recurrence_bounds_nondecreasing():
    w = fibonacci_word()
    bounds = [recurrence_bound(w, n, 400) for n in range(1, 6)]
    assert bounds == [3, 6, 10, 11, 17]
    assert all(a <= b for a, b in zip(bounds, bounds[1:]))


def test_fibonacci_uniform_recurrence_evidence_large_scale():
    w = fibonacci_word()
    bounds = [recurrence_bound(w, n, 100_000) for n in range(1, 21)]
    assert all(m is not None for m in bounds)
    assert all(a <= b for a, b in zip(bounds, bounds[1:]))


def test_prefix_coherence_at_ten_thousand():
    for w in (fibonacci_word(), mechanical_word(golden_slope(), "slope"),
              periodic_word("0110")):
        long = w.prefix(10_000)
        assert long[:137] == w.prefix(137)
        assert long[:9_999] == w.prefix(9_999)


# -- serialization ---------------------------------------------------------------


def test_round_trip_json_descriptors():
    words = [
        (explicit_word("0101"), 4),
        (periodic_word("10"), 64),
        (mechanical_word(Fraction(1, 3), Fraction(1, 7)), 64),
        (mechanical_word(golden_slope(), "slope"), 64),
        (substitution_word({"0": "01", "1": "0"}, "0"), 64),
        (complement_word(fibonacci_word()), 64),
    ]
    for w, length in words:
        back = word_from_json(word_to_json(w))
        assert back.prefix(length) == w.prefix(length)
