import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from wordgraphs.graphs import Graph


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0):
    """Random graph on up to max_n vertices from a random edge mask."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    rows = [0] * n
    for k, (i, j) in enumerate(pairs):
        if (mask >> k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


bit_words = st.text(alphabet="01", min_size=0, max_size=40)
