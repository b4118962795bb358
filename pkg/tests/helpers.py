from mwss import Graph


def path_graph(n, weights=None):
    return Graph(n, [(i, i + 1) for i in range(n - 1)], weights)


def cycle_graph(n, weights=None):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], weights)


def complete_graph(n, weights=None):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)], weights)
