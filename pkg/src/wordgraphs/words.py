"""0-1 words: generators, factors, recurrence and complexity diagnostics.

A word is a generator descriptor (explicit bits, periodic pattern, mechanical
with exact rational or continued-fraction slope, or substitution fixed point)
able to produce any prefix on demand.  Prefixes are deterministic and
coherent: ``prefix(n)`` is always an initial segment of ``prefix(m)`` for
``n <= m``.  Uniform recurrence is only ever certified at a scale ``(n, L)``;
the infinite property is not decidable from a prefix and no function here
claims it.

Mechanical words use exact arithmetic throughout.  Irrational slopes are
given as continued fractions; letters are emitted once two consecutive
convergents (which bracket the limit slope) produce identical floor
sequences, which pins the exact prefix by monotonicity of ``floor(i*slope +
intercept)`` in the slope.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

_MAX_CF_DEPTH = 512


class WordError(ValueError):
    """Bad generator parameters or out-of-range prefix requests."""


@dataclass(frozen=True)
class ContinuedFraction:
    """Slope ``[0; a1, a2, ...]`` with an optionally repeating tail.

    ``head`` lists the leading partial quotients; ``tail`` repeats forever
    after them (empty tail means the fraction is finite, i.e. rational).
    """

    head: tuple[int, ...]
    tail: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.head and not self.tail:
            raise WordError("continued fraction needs at least one quotient")
        if any(q < 1 for q in self.head + self.tail):
            raise WordError("partial quotients must be positive")

    def quotient(self, k: int) -> int:
        if k < len(self.head):
            return self.head[k]
        if not self.tail:
            raise IndexError(k)
        return self.tail[(k - len(self.head)) % len(self.tail)]

    def depth_limit(self) -> int | None:
        return len(self.head) if not self.tail else None

    def convergent(self, depth: int) -> Fraction:
        """Value of ``[0; a1..a_depth]`` via the standard recurrence."""
        h_prev, h = 1, 0
        k_prev, k = 0, 1
        for i in range(depth):
            a = self.quotient(i)
            h_prev, h = h, a * h + h_prev
            k_prev, k = k, a * k + k_prev
        return Fraction(h, k)


@dataclass(frozen=True)
class FactorSet:
    """Distinct length-``length`` blocks seen in a prefix of given length."""

    length: int
    prefix_length: int
    factors: frozenset[str]


def _check_bits(bits: str, what: str) -> str:
    if any(c not in "01" for c in bits):
        raise WordError(f"{what} must be over the alphabet 0/1")
    return bits


@dataclass(frozen=True)
class Word:
    """Immutable 0-1 word handle; ``prefix(n)`` yields the first n letters."""

    kind: str
    params: tuple
    _buf: list = field(default_factory=lambda: [""], compare=False,
                       repr=False, hash=False)

    def prefix(self, n: int) -> str:
        if n < 0:
            raise WordError("prefix length must be nonnegative")
        if n > len(self._buf[0]):
            grown = _GENERATORS[self.kind](self.params, n)
            if not grown.startswith(self._buf[0]):
                raise AssertionError("generator prefix coherence violated")
            self._buf[0] = grown
        return self._buf[0][:n]

    def letter(self, i: int) -> int:
        return int(self.prefix(i + 1)[i])


# -- generators ---------------------------------------------------------------


def _gen_explicit(params: tuple, n: int) -> str:
    (bits,) = params
    if n > len(bits):
        raise WordError(f"explicit word has only {len(bits)} letters")
    return bits[:n]


def _gen_periodic(params: tuple, n: int) -> str:
    (pattern,) = params
    reps = -(-n // len(pattern))
    return (pattern * reps)[:n]


def _mechanical_prefix(slope: Fraction, intercept: Fraction, n: int) -> str:
    floors = [(k * slope + intercept).__floor__() for k in range(n + 1)]
    return "".join(str(floors[k + 1] - floors[k]) for k in range(n))


def _gen_mechanical(params: tuple, n: int) -> str:
    slope, intercept = params
    if isinstance(slope, Fraction):
        rho = slope if intercept == "slope" else intercept
        return _mechanical_prefix(slope, rho, n)
    limit = slope.depth_limit()
    depth = 1
    prev = None
    while True:
        if limit is not None and depth >= limit:
            value = slope.convergent(limit)
            rho = value if intercept == "slope" else intercept
            return _mechanical_prefix(value, rho, n)
        value = slope.convergent(depth)
        rho = value if intercept == "slope" else intercept
        cur = _mechanical_prefix(value, rho, n)
        if cur == prev:
            return cur
        prev = cur
        depth += 1
        if depth > _MAX_CF_DEPTH:
            raise WordError("continued fraction did not stabilize")


def _gen_substitution(params: tuple, n: int) -> str:
    rules_t, seed = params
    rules = dict(rules_t)
    word = seed
    # prolongability makes iterates nested prefixes; growth check catches
    # stalls like 0 -> 0
    while len(word) < n:
        nxt = "".join(rules[c] for c in word)
        if len(nxt) <= len(word):
            raise WordError("substitution does not grow from this seed")
        word = nxt
    return word[:n]


_GENERATORS = {
    "explicit": _gen_explicit,
    "periodic": _gen_periodic,
    "mechanical": _gen_mechanical,
    "substitution": _gen_substitution,
}


def explicit_word(bits: str) -> Word:
    return Word("explicit", (_check_bits(bits, "explicit word"),))


def periodic_word(pattern: str) -> Word:
    if not pattern:
        raise WordError("periodic pattern must be nonempty")
    return Word("periodic", (_check_bits(pattern, "pattern"),))


def mechanical_word(slope: Fraction | ContinuedFraction,
                    intercept: Fraction | str = Fraction(0)) -> Word:
    """Letters ``floor((i+1)s + r) - floor(is + r)``, exact arithmetic.

    ``intercept="slope"`` uses the slope itself, which yields characteristic
    Sturmian words (the fixed points of the classical substitutions).
    """
    if isinstance(slope, Fraction) and not 0 < slope < 1:
        raise WordError("slope must satisfy 0 < slope < 1")
    if isinstance(slope, ContinuedFraction) and not slope.tail:
        value = slope.convergent(len(slope.head))
        if not 0 < value < 1:
            raise WordError("slope must satisfy 0 < slope < 1")
    if isinstance(intercept, str) and intercept != "slope":
        raise WordError("intercept must be a Fraction or the string 'slope'")
    return Word("mechanical", (slope, intercept))


def substitution_word(rules: dict[str, str], seed: str) -> Word:
    for letter, image in rules.items():
        if letter not in "01" or not image:
            raise WordError("rules must map 0/1 letters to nonempty 0-1 words")
        _check_bits(image, "rule image")
    if len(seed) != 1 or seed not in rules:
        raise WordError("seed must be a single letter with a rule")
    if not rules[seed].startswith(seed):
        raise WordError("substitution must be prolongable on the seed")
    if rules[seed] == seed:
        raise WordError("substitution does not grow from this seed")
    return Word("substitution", (tuple(sorted(rules.items())), seed))


def fibonacci_word() -> Word:
    return substitution_word({"0": "01", "1": "0"}, "0")


def golden_slope() -> ContinuedFraction:
    """[0; 2, 1, 1, 1, ...], the slope whose characteristic word is Fibonacci."""
    return ContinuedFraction(head=(2,), tail=(1,))


def complement_word(w: Word) -> Word:
    if w.kind == "complement":
        return w.params[0]
    return Word("complement", (w,))


def _gen_complement(params: tuple, n: int) -> str:
    (inner,) = params
    return "".join("1" if c == "0" else "0" for c in inner.prefix(n))


_GENERATORS["complement"] = _gen_complement


def reverse_star(w: Word, L: int) -> Word:
    """Letterwise reversal of the length-L prefix, as a finite word."""
    return explicit_word(w.prefix(L)[::-1])


# -- factor machinery ---------------------------------------------------------


def factors(w: Word, n: int, L: int) -> FactorSet:
    """All distinct length-n contiguous blocks of prefix(L)."""
    if n > L:
        raise WordError("factor length exceeds prefix length")
    p = w.prefix(L)
    return FactorSet(
        length=n, prefix_length=L,
        factors=frozenset(p[i:i + n] for i in range(L - n + 1)))


def factor_complexity(w: Word, L: int, n_max: int) -> list[int]:
    """p(n) = number of distinct length-n factors of prefix(L), n = 1..n_max."""
    if n_max > L // 2:
        raise WordError("n_max beyond L/2; counts would not have stabilized")
    p = w.prefix(L)
    return [len({p[i:i + n] for i in range(L - n + 1)})
            for n in range(1, n_max + 1)]


def recurrence_bound(w: Word, n: int, L: int) -> int | None:
    """Least m with every length-n factor in every length-m window of prefix(L).

    Evidence threshold: the bound is reported only when m <= L // 2, so the
    certificate is supported by many windows; the whole prefix trivially
    contains its own factors, which certifies nothing.
    """
    if n > L:
        raise WordError("factor length exceeds prefix length")
    if n == 0:
        return 0
    p = w.prefix(L)
    positions: dict[str, list[int]] = {}
    for i in range(L - n + 1):
        positions.setdefault(p[i:i + n], []).append(i)
    m = n
    for occ in positions.values():
        need = max(occ[0] + n, L - occ[-1])
        for a, b in zip(occ, occ[1:]):
            need = max(need, b - a + n - 1)
        m = max(m, need)
    return m if m <= L // 2 else None


# -- serialization -------------------------------------------------------------


def word_to_json(w: Word) -> str:
    return json.dumps(_descriptor(w), sort_keys=True)


def _descriptor(w: Word) -> dict:
    if w.kind == "explicit":
        return {"kind": "explicit", "bits": w.params[0]}
    if w.kind == "periodic":
        return {"kind": "periodic", "pattern": w.params[0]}
    if w.kind == "mechanical":
        slope, intercept = w.params
        if isinstance(slope, Fraction):
            s: object = str(slope)
        else:
            s = {"head": list(slope.head), "tail": list(slope.tail)}
        r = "slope" if intercept == "slope" else str(intercept)
        return {"kind": "mechanical", "slope": s, "intercept": r}
    if w.kind == "substitution":
        rules, seed = w.params
        return {"kind": "substitution", "rules": dict(rules), "seed": seed}
    if w.kind == "complement":
        return {"kind": "complement", "of": _descriptor(w.params[0])}
    raise WordError(f"unknown word kind {w.kind!r}")


def word_from_json(doc: str | dict) -> Word:
    data = json.loads(doc) if isinstance(doc, str) else doc
    kind = data.get("kind")
    if kind == "explicit":
        return explicit_word(data["bits"])
    if kind == "periodic":
        return periodic_word(data["pattern"])
    if kind == "mechanical":
        raw = data["slope"]
        if isinstance(raw, dict):
            slope: Fraction | ContinuedFraction = ContinuedFraction(
                head=tuple(raw.get("head", ())), tail=tuple(raw.get("tail", ())))
        else:
            slope = Fraction(raw)
        rho = data.get("intercept", "0")
        intercept: Fraction | str = "slope" if rho == "slope" else Fraction(rho)
        return mechanical_word(slope, intercept)
    if kind == "substitution":
        return substitution_word(dict(data["rules"]), data["seed"])
    if kind == "complement":
        return complement_word(word_from_json(data["of"]))
    raise WordError(f"unknown word kind {kind!r}")
