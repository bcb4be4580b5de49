"""
Shannon (strong) and Stanley-Reisner products.
"""

import networkx as nx

from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.graphs.graph import whitney_complex


def shannon_product(g: nx.Graph, h: nx.Graph) -> nx.Graph:
    """
    Shannon product G * H.

    Vertices are pairs (a, b); two distinct pairs are adjacent when each
    coordinate is equal or adjacent. Pairs are numbered in sorted order and
    kept in the node attribute ``pair``.

    Examples
    --------
    >>> k2 = nx.complete_graph(2)
    >>> p = shannon_product(k2, k2)
    >>> p.number_of_nodes(), p.number_of_edges()
    (4, 6)
    """
    strong = nx.strong_product(g, h)
    ordered = sorted(strong.nodes)
    mapping = {pair: i for i, pair in enumerate(ordered)}
    out = nx.Graph()
    for pair, i in mapping.items():
        out.add_node(i, pair=pair)
    out.add_edges_from((mapping[a], mapping[b]) for a, b in strong.edges)
    return out


def product_simplex_count(g: nx.Graph, h: nx.Graph) -> dict:
    """
    Count the Whitney simplices of g * h that are products x × y.

    Returns
    -------
    dict
        ``total`` simplices of the product's Whitney complex and
        ``products``, the number of the form x × y with x, y cliques.

    Examples
    --------
    >>> k2 = nx.complete_graph(2)
    >>> product_simplex_count(k2, k2)
    {'total': 15, 'products': 9}
    """
    p = shannon_product(g, h)
    pairs = nx.get_node_attributes(p, "pair")
    W = whitney_complex(p)
    products = 0
    for z in W:
        points = {pairs[i] for i in z}
        xs = {a for a, _ in points}
        ys = {b for _, b in points}
        if len(points) == len(xs) * len(ys):
            products += 1
    return {"total": len(W), "products": products}


def stanley_reisner_product(G: SimplicialComplex, H: SimplicialComplex) -> SimplicialComplex:
    """
    Whitney complex of the containment graph on simplex pairs.

    Vertex ``i * |H| + j`` is the pair (i-th simplex of G, j-th simplex of
    H). Two pairs are adjacent when both coordinates grow (or both shrink)
    by inclusion. A p-manifold times a q-manifold is a (p+q)-manifold.

    Examples
    --------
    >>> from topology_toolkit.complexes import point, closure
    >>> len(stanley_reisner_product(point(), closure([[1, 2]])))
    5
    """
    n = len(H)
    g = nx.Graph()
    if len(G) == 0 or n == 0:
        return SimplicialComplex.empty()
    g.add_nodes_from(range(len(G) * n))
    for i, xi in enumerate(G.core_lists):
        for j, yj in enumerate(H.core_lists):
            # faces (i2, j2) of (i, j), excluding (i, j) itself
            for i2 in xi:
                for j2 in yj:
                    if i2 != i or j2 != j:
                        g.add_edge(i2 * n + j2, i * n + j)
    return whitney_complex(g)
