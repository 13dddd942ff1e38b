"""Graphs built from 0-1 words.

The backward construction puts an extra vertex -1 in front of the letter
positions ``0..L-1`` and decides each pair ``i < j`` from the letter at the
larger index: edge iff the letter is 1 and the positions are consecutive, or
the letter is 0 and they are not.  The forward variant appends the extra
vertex at the end and reads the letter at the smaller index instead; the two
constructions swap under letterwise reversal of the word.

Age membership is certified positively only: a failed search at prefix
length L is reported as not-found-at-scale, never as non-membership in the
age of the infinite word graph.

Not every word-graph age transfers between one-sided and two-sided index
domains; the known obstructions are degree-counting arguments about
infinite graphs (a single 0 on a two-sided domain forces a vertex of
infinite degree).  They have no finite analogue, so nothing here decides
realizability questions; only prefixes of one-sided words are compiled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, embeds
from .words import Word, explicit_word


def _as_word(w: Word | str) -> Word:
    return explicit_word(w) if isinstance(w, str) else w


def graph_of_word(w: Word | str, L: int | None = None) -> Graph:
    """Backward word graph on vertex labels -1, 0, ..., L-1."""
    if isinstance(w, str) and L is None:
        L = len(w)
    if L is None or L < 0:
        raise GraphError("prefix length must be a nonnegative integer")
    bits = _as_word(w).prefix(L)
    n = L + 1
    rows = [0] * n
    # index i holds label i - 1; the deciding letter sits at the larger label
    for j_lab in range(L):
        bit = bits[j_lab]
        j = j_lab + 1
        for i in range(j):
            i_lab = i - 1
            if (bit == "1") == (j_lab == i_lab + 1):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows), labels=tuple(range(-1, L)))


def graph_of_word_forward(w: Word | str, L: int | None = None) -> Graph:
    """Forward variant on labels 0, ..., L-1, L; the letter at the smaller
    index decides each pair."""
    if isinstance(w, str) and L is None:
        L = len(w)
    if L is None or L < 0:
        raise GraphError("prefix length must be a nonnegative integer")
    bits = _as_word(w).prefix(L)
    n = L + 1
    rows = [0] * n
    for i in range(L):
        bit = bits[i]
        for j in range(i + 1, n):
            if (bit == "1") == (j == i + 1):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows), labels=tuple(range(n)))


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of an age membership search at a finite scale."""

    found: bool
    scale: int

    @property
    def verdict(self) -> str:
        return "yes" if self.found else f"not-found-at-L={self.scale}"


def age_membership(h: Graph, w: Word | str, L: int) -> MembershipResult:
    """Positive certificate iff h embeds in the word graph at prefix L."""
    if h.n > L + 1:
        raise GraphError(
            f"pattern on {h.n} vertices cannot embed at scale L={L}")
    return MembershipResult(found=embeds(h, graph_of_word(w, L)), scale=L)
