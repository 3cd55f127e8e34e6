"""Shared graph builders and hypothesis strategies for the test suite."""
import itertools

from hypothesis import strategies as st

from orespan.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if p is None:
        chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        # biased density through a drawn threshold per pair
        cut = int(p * 100)
        chosen = [x < cut for x in draw(st.lists(st.integers(0, 99), min_size=len(pairs), max_size=len(pairs)))]
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
