import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hamcheck.digraph import Digraph
from hamcheck.harness import bipartite_from_code, bip_positions, digraph_from_code

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@st.composite
def digraphs(draw, min_n=1, max_n=6, bipartite=False):
    """Labeled digraphs drawn uniformly from the adjacency-code space."""
    if bipartite:
        a = draw(st.integers(max(1, min_n // 2), max_n // 2))
        code = draw(st.integers(0, (1 << len(bip_positions(a))) - 1))
        return bipartite_from_code(a, code)
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << (n * (n - 1))) - 1))
    return digraph_from_code(n, code)
