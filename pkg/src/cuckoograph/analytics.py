"""Graph analytics built on the store's edge and successor queries.

All tasks are read-only and deterministic: ties break on ascending node
id, frontier neighbours expand in sorted order. Tasks that operate on a
subgraph first rank nodes by total degree (out-degree plus in-degree)
and induce the graph on the top slice.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

TASKS = ("bfs", "sssp", "tc", "cc", "pr", "bc", "lcc")


@dataclass(frozen=True)
class TaskSpec:
    """One analytics run: which task, and its selection parameters."""

    task: str
    top_k: int = 10
    pr_iterations: int = 100
    pr_damping: float = 0.85
    sssp_sources: int = 10
    tc_count_paths: bool = False

    def __post_init__(self):
        if self.task not in TASKS:
            raise ValueError(f"unknown task {self.task!r}, expected one of {TASKS}")
        if self.top_k < 1 or self.pr_iterations < 1 or self.sssp_sources < 1:
            raise ValueError("top_k, pr_iterations and sssp_sources must be >= 1")
        if not (0.0 < self.pr_damping < 1.0):
            raise ValueError("pr_damping must be in (0, 1)")


def _succ_ids(graph, u):
    s = graph.successors(u)
    if graph.params.weighted:
        return {v for v, _ in s}
    return s


def adjacency_view(graph):
    """Successor-id sets for every endpoint node (plain dict snapshot)."""
    adj = {}
    for u in graph.nodes():
        vs = _succ_ids(graph, u)
        adj.setdefault(u, set()).update(vs)
        for v in vs:
            adj.setdefault(v, set())
    return adj


def total_degrees(graph) -> dict:
    deg = {}
    for u in graph.nodes():
        for v in _succ_ids(graph, u):
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
    return deg


def select_top_degree(graph, k: int) -> list:
    """The k nodes with the largest total degree, ties broken by id."""
    adj = adjacency_view(graph)
    if k > len(adj):
        raise ValueError(f"asked for {k} nodes, graph has only {len(adj)}")
    deg = total_degrees(graph)
    ranked = sorted(adj, key=lambda n: (-deg.get(n, 0), n))
    return ranked[:k]


def extract_subgraph(graph, nodes):
    """New store of the same kind, induced on the given node set."""
    from .graph import CuckooGraph

    keep = set(nodes)
    sub = CuckooGraph(graph.params)
    for edge in graph.iter_edges():
        if edge[0] in keep and edge[1] in keep:
            sub.insert_edge(*edge)
    return sub


def bfs(graph, source) -> list:
    """Visit order of a directed breadth-first traversal."""
    order = [source]
    seen = {source}
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y in sorted(_succ_ids(graph, x)):
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return order


def sssp_dijkstra(graph, source) -> dict:
    """Shortest distances from source; stored weights, or 1 when unweighted."""
    weighted = graph.params.weighted
    dist = {source: 0}
    heap = [(0, source)]
    while heap:
        d, x = heapq.heappop(heap)
        if d > dist.get(x, float("inf")):
            continue
        succ = graph.successors(x)
        pairs = succ if weighted else ((v, 1) for v in succ)
        for v, w in pairs:
            if w < 0:
                raise ValueError("negative edge weight")
            nd = d + w
            if nd < dist.get(v, float("inf")):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def triangle_count(graph, node, count_paths: bool = False) -> int:
    """Closing queries from the node's 2-hop successors back to the node.

    With ``count_paths`` every 2-hop witness path is queried separately,
    so closers reachable through several mid nodes count once per path.
    """
    firsts = _succ_ids(graph, node)
    count = 0
    if count_paths:
        for mid in firsts:
            for s in _succ_ids(graph, mid):
                if _edge_present(graph, s, node):
                    count += 1
        return count
    two_hop = set()
    for mid in firsts:
        two_hop |= _succ_ids(graph, mid)
    for s in two_hop:
        if _edge_present(graph, s, node):
            count += 1
    return count


def _edge_present(graph, u, v) -> bool:
    r = graph.query_edge(u, v)
    return r is not None and r is not False


def scc_tarjan(graph) -> list:
    """Strongly connected components, iteratively, smallest member first."""
    adj = adjacency_view(graph)
    index = {}
    lowlink = {}
    on_stack = set()
    stack = []
    comps = []
    counter = [0]
    for root in sorted(adj):
        if root in index:
            continue
        work = [(root, iter(sorted(adj[root])))]
        index[root] = lowlink[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            pushed = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = lowlink[nxt] = counter[0]
                    counter[0] += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(sorted(adj[nxt]))))
                    pushed = True
                    break
                if nxt in on_stack:
                    lowlink[node] = min(lowlink[node], index[nxt])
            if pushed:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                comp = []
                while True:
                    x = stack.pop()
                    on_stack.discard(x)
                    comp.append(x)
                    if x == node:
                        break
                comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def pagerank(graph, iterations: int = 100, damping: float = 0.85) -> dict:
    """Power iteration with uniform teleport; dangling mass spreads evenly."""
    adj = adjacency_view(graph)
    nodes = sorted(adj)
    n = len(nodes)
    if n == 0:
        return {}
    rank = {node: 1.0 / n for node in nodes}
    teleport = (1.0 - damping) / n
    for _ in range(iterations):
        dangling = sum(rank[u] for u in nodes if not adj[u]) / n
        nxt = {node: teleport + damping * dangling for node in nodes}
        for u in nodes:
            out = adj[u]
            if out:
                share = damping * rank[u] / len(out)
                for v in out:
                    nxt[v] += share
        rank = nxt
    return rank


def betweenness_brandes(graph) -> dict:
    """Unnormalized directed betweenness by dependency accumulation."""
    adj = adjacency_view(graph)
    nodes = sorted(adj)
    bc = {node: 0.0 for node in nodes}
    for s in nodes:
        order = []
        preds = {node: [] for node in nodes}
        sigma = {node: 0.0 for node in nodes}
        dist = {node: -1 for node in nodes}
        sigma[s] = 1.0
        dist[s] = 0
        queue = [s]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(adj[x]):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
                if dist[y] == dist[x] + 1:
                    sigma[y] += sigma[x]
                    preds[y].append(x)
        delta = {node: 0.0 for node in nodes}
        for y in reversed(order):
            for p in preds[y]:
                delta[p] += sigma[p] / sigma[y] * (1.0 + delta[y])
            if y != s:
                bc[y] += delta[y]
    return bc


def lcc(graph) -> dict:
    """Directed local clustering: links among neighbours over k*(k-1)."""
    adj = adjacency_view(graph)
    incoming = {node: set() for node in adj}
    for u, outs in adj.items():
        for v in outs:
            incoming[v].add(u)
    out = {}
    for node in adj:
        nbrs = (adj[node] | incoming[node]) - {node}
        k = len(nbrs)
        if k < 2:
            out[node] = 0.0
            continue
        links = sum(1 for a in nbrs for b in nbrs if a != b and b in adj[a])
        out[node] = links / (k * (k - 1))
    return out


def run_task(graph, spec: TaskSpec) -> dict:
    """Drive one task with the top-degree selection methodology.

    BFS runs from each of the top-k nodes on the full graph; triangle
    counting queries each top-k node on the full graph; the shortest-path
    task extracts the top-k subgraph and runs from the highest-degree
    sources inside it; the remaining tasks run on the top-k subgraph.
    """
    task = spec.task
    if task == "bfs":
        sources = select_top_degree(graph, spec.top_k)
        runs = {s: bfs(graph, s) for s in sources}
        return {"task": task, "sources": sources,
                "visited": {s: len(r) for s, r in runs.items()},
                "orders": runs}
    if task == "tc":
        nodes = select_top_degree(graph, spec.top_k)
        return {"task": task,
                "counts": {u: triangle_count(graph, u, spec.tc_count_paths)
                           for u in nodes}}
    top = select_top_degree(graph, spec.top_k)
    sub = extract_subgraph(graph, top)
    if task == "sssp":
        sources = top[:min(spec.sssp_sources, len(top))]
        return {"task": task, "sources": sources,
                "dist": {s: sssp_dijkstra(sub, s) for s in sources}}
    if task == "cc":
        comps = scc_tarjan(sub)
        return {"task": task, "count": len(comps), "components": comps}
    if task == "pr":
        return {"task": task,
                "scores": pagerank(sub, spec.pr_iterations, spec.pr_damping)}
    if task == "bc":
        return {"task": task, "scores": betweenness_brandes(sub)}
    return {"task": task, "scores": lcc(sub)}
