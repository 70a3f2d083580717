import random
from itertools import permutations

from bicontract import graphs


def isomorphic_small(g: graphs.Graph, h: graphs.Graph) -> bool:
    """Brute-force isomorphism for tiny graphs (test oracle only)."""
    gv, hv = g.vertices, h.vertices
    if len(gv) != len(hv) or g.edge_count != h.edge_count:
        return False
    gedges = {frozenset(e) for e in g.edges}
    hedges = {frozenset(e) for e in h.edges}
    for perm in permutations(hv):
        mapping = dict(zip(gv, perm))
        if {frozenset((mapping[u], mapping[v])) for u, v in gedges} == hedges:
            return True
    return False


def random_graph(n: int, seed: int, p: float = 0.4) -> graphs.Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graphs.Graph.from_edges(n, edges)
