"""Two-level cuckoo-hash store for dynamic directed graphs.

Source nodes live in a chain of node tables; each node's cell stores its
destinations either inline (a handful of slots) or in the node's own
chain of adjacency tables. Placement failures after the kick budget go
to bounded overflow lists (one for node cells, one for edges), which are
drained back whenever the owning chain grows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .chain import MIN_TABLE_LEN, TableChain, lengths_for_step
from .cuckoo_table import CuckooTable, LevelCounters, TableShape
from .hashing import HashPair, mix64

NODE_BYTES = 8
TABLE_HEADER_BYTES = 48


class CapacityExhausted(RuntimeError):
    """Raised when an overflow list is full and forced growth also failed."""


class InsertResult(NamedTuple):
    status: str            # inserted | duplicate | incremented
    weight: Optional[int]


class DeleteResult(NamedTuple):
    status: str            # deleted | decremented | absent
    weight: Optional[int]


_INSERTED = InsertResult("inserted", None)
_DUPLICATE = InsertResult("duplicate", None)
_DELETED = DeleteResult("deleted", None)
_ABSENT = DeleteResult("absent", None)


def _is_pow2(n: int) -> bool:
    return n >= 2 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class GraphParams:
    """Tuning knobs; the defaults are the tuned operating point."""

    cells_per_bucket: int = 8
    chain_slots: int = 3
    expand_at: float = 0.9
    contract_at: float = 0.5
    kick_budget: int = 250
    node_table_len: int = 1024
    adj_table_len: int = 2
    denylist_cap: int = 64
    weighted: bool = False
    node_seeds: tuple = (0x243F6A8885A308D3, 0x13198A2E03707344)
    adj_seeds: tuple = (0xA4093822299F31D0, 0x082EFA98EC4E6C89)
    victim_seed: int = 0x452821E638D01377

    def __post_init__(self):
        if self.cells_per_bucket < 1:
            raise ValueError("cells_per_bucket must be >= 1")
        if self.chain_slots != 3:
            raise ValueError("only chain_slots=3 is supported; the length "
                             "schedule is defined for three-slot chains")
        if not (0.0 < self.expand_at < 1.0):
            raise ValueError("expand_at must be in (0, 1)")
        if not (0.0 < self.contract_at <= 2.0 * self.expand_at / 3.0 + 1e-12):
            raise ValueError("contract_at must satisfy 0 < contract_at <= (2/3) * expand_at")
        if self.kick_budget < 1:
            raise ValueError("kick_budget must be >= 1")
        if not _is_pow2(self.node_table_len) or not _is_pow2(self.adj_table_len):
            raise ValueError("initial table lengths must be powers of two >= 2")
        if self.denylist_cap < 1:
            raise ValueError("denylist_cap must be >= 1")
        if self.node_seeds[0] == self.node_seeds[1] or self.adj_seeds[0] == self.adj_seeds[1]:
            raise ValueError("seed pairs must contain distinct seeds")

    @classmethod
    def from_seed(cls, seed: int, **overrides) -> "GraphParams":
        """Derive all hash and victim seeds from one master seed."""
        base = mix64(seed)
        derived = dict(
            node_seeds=(mix64(base + 1), mix64(base + 2)),
            adj_seeds=(mix64(base + 3), mix64(base + 4)),
            victim_seed=mix64(base + 5),
        )
        derived.update(overrides)
        return cls(**derived)

    @property
    def inline_capacity(self) -> int:
        # a weighted destination takes two slots, halving the inline fan-out
        return self.chain_slots if self.weighted else 2 * self.chain_slots

    @property
    def node_cell_bytes(self) -> int:
        return NODE_BYTES + 2 * self.chain_slots * NODE_BYTES

    @property
    def adj_cell_bytes(self) -> int:
        return 2 * NODE_BYTES if self.weighted else NODE_BYTES

    @property
    def adj_dl_entry_bytes(self) -> int:
        return 3 * NODE_BYTES if self.weighted else 2 * NODE_BYTES


class NodeCell:
    """One node-table cell: the source node plus its destination storage."""

    __slots__ = ("node", "inline", "chain", "count")

    def __init__(self, node):
        self.node = node
        self.inline = []     # destination ids, or [v, w] pairs when weighted
        self.chain = None    # TableChain once the inline slots overflowed
        self.count = 0       # live destinations, wherever they are stored


@dataclass(frozen=True)
class GraphStats:
    """Structure-accounted snapshot; byte figures count cells, not RSS."""

    nodes: int
    edges: int
    node_cells: int
    adj_cells: int
    node_load_rate: float
    adj_load_rate: float
    inline_edges: int
    node_dl_len: int
    adj_dl_len: int
    dl_bytes: int
    bytes_total: int
    counters: dict


class CuckooGraph:
    """Dynamic directed graph with O(1)-probe edge queries.

    Construction is deterministic for fixed params: the same operation
    sequence always produces the same structure.
    """

    def __init__(self, params: GraphParams | None = None, **overrides):
        if params is None:
            params = GraphParams(**overrides)
        elif overrides:
            raise TypeError("pass either params or keyword overrides, not both")
        self.params = params
        self._weighted = params.weighted
        self._inline_cap = params.inline_capacity
        self._rng = random.Random(params.victim_seed)
        self._node_hash = HashPair(*params.node_seeds)
        self._adj_hash = HashPair(*params.adj_seeds)
        self.node_counters = LevelCounters()
        self.adj_counters = LevelCounters()
        self._node_chain = TableChain(
            params.node_table_len, params.expand_at, params.contract_at,
            make_table=self._make_node_table,
            on_grow=self._on_node_grow,
            fail_sink=self._node_fail_sink,
        )
        self._node_dl = []       # complete NodeCell objects
        self._adj_dl = []        # [u, v] rows, or [u, v, w] when weighted
        self._pending_node = []  # cells awaiting an overflow-list push
        self._pending_adj = []   # (owner, homeless adjacency entry) pairs
        self._node_count = 0
        self._edge_count = 0
        self._inline_edges = 0
        self._movements = 0
        self._dl_hits = 0
        self._sdl_peak = 0
        self._ldl_peak = 0
        self._max_q_node_probes = 0
        self._max_q_adj_probes = 0
        self._max_q_dl_scans = 0

    # -- table / chain factories ------------------------------------------

    def _make_node_table(self, length):
        shape = TableShape.for_length(length, self.params.cells_per_bucket)
        return CuckooTable(shape, self._rng, self.node_counters,
                           self.params.kick_budget)

    def _make_adj_table(self, length):
        shape = TableShape.for_length(length, self.params.cells_per_bucket)
        return CuckooTable(shape, self._rng, self.adj_counters,
                           self.params.kick_budget)

    def _new_adj_chain(self, owner):
        return TableChain(
            self.params.adj_table_len, self.params.expand_at,
            self.params.contract_at,
            make_table=self._make_adj_table,
            owner=owner,
            on_grow=self._on_adj_grow,
            fail_sink=lambda entry, u=owner: self._pending_adj.append((u, entry)),
        )

    def _node_fail_sink(self, entry):
        self._pending_node.append(entry[3])

    # -- grow hooks: count moves, then drain the overflow lists ------------

    def _on_node_grow(self, chain, event):
        self._movements += event.moved
        if not self._node_dl:
            return
        pending, self._node_dl = self._node_dl, []
        newest = chain.tables[-1]
        for cell in pending:
            h1, h2 = self._node_hash.pair(cell.node)
            _, homeless = newest.insert(cell.node, h1, h2, cell)
            if homeless is None:
                self._movements += 1
            else:
                self._node_dl.append(homeless[3])

    def _on_adj_grow(self, chain, event):
        self._movements += event.moved
        owner = chain.owner
        if not self._adj_dl:
            return
        kept = []
        newest = chain.tables[-1]
        for row in self._adj_dl:
            if row[0] != owner:
                kept.append(row)
                continue
            h1, h2 = self._adj_hash.pair(row[1])
            payload = row[2] if self._weighted else None
            _, homeless = newest.insert(row[1], h1, h2, payload)
            if homeless is None:
                self._movements += 1
            else:
                kept.append(self._adj_row(owner, homeless))
        self._adj_dl = kept

    # -- overflow-list pushes with the forced-growth fallback --------------

    def _adj_row(self, u, entry):
        if self._weighted:
            return [u, entry[0], entry[3]]
        return [u, entry[0]]

    def _push_node_dl(self, cell):
        if len(self._node_dl) < self.params.denylist_cap:
            self._node_dl.append(cell)
            self._ldl_peak = max(self._ldl_peak, len(self._node_dl))
            return
        self._node_chain.advance()
        h1, h2 = self._node_hash.pair(cell.node)
        _, homeless = self._node_chain.tables[-1].insert(cell.node, h1, h2, cell)
        if homeless is None:
            return
        if len(self._node_dl) < self.params.denylist_cap:
            self._node_dl.append(homeless[3])
            return
        raise CapacityExhausted(
            f"node overflow list full and forced growth failed for node {cell.node}")

    def _push_adj_dl(self, cell, entry):
        if len(self._adj_dl) < self.params.denylist_cap:
            self._adj_dl.append(self._adj_row(cell.node, entry))
            self._sdl_peak = max(self._sdl_peak, len(self._adj_dl))
            return
        chain = cell.chain
        chain.advance()
        _, homeless = chain.tables[-1].insert(entry[0], entry[1], entry[2], entry[3])
        if homeless is None:
            return
        if len(self._adj_dl) < self.params.denylist_cap:
            self._adj_dl.append(self._adj_row(cell.node, homeless))
            return
        raise CapacityExhausted(
            f"edge overflow list full and forced growth failed under node {cell.node}")

    def _flush_pending(self):
        # pending entries came out of structural moves; the structure may
        # have changed since they failed, so re-placement gets one free try
        # before the overflow list (and its forced-growth fallback) is used
        while self._pending_node or self._pending_adj:
            if self._pending_node:
                cell = self._pending_node.pop()
                h1, h2 = self._node_hash.pair(cell.node)
                _, homeless = self._node_chain.tables[-1].insert(
                    cell.node, h1, h2, cell)
                if homeless is not None:
                    self._push_node_dl(homeless[3])
                continue
            owner, entry = self._pending_adj.pop()
            cell, _, _ = self._find_cell(owner)
            if cell is None or cell.chain is None:
                # owner demoted meanwhile; keep the edge in the overflow list
                if len(self._adj_dl) >= self.params.denylist_cap:
                    raise CapacityExhausted(
                        f"edge overflow list full for detached node {owner}")
                self._adj_dl.append(self._adj_row(owner, entry))
                self._sdl_peak = max(self._sdl_peak, len(self._adj_dl))
                continue
            _, homeless = cell.chain.tables[-1].insert(entry[0], entry[1],
                                                       entry[2], entry[3])
            if homeless is not None:
                self._push_adj_dl(cell, homeless)

    # -- location helpers ---------------------------------------------------

    def _find_cell(self, u):
        """Locate u's cell: (cell, where, scanned_dl)."""
        h1, h2 = self._node_hash.pair(u)
        return self._find_cell_hashed(u, h1, h2)

    def _find_cell_hashed(self, u, h1, h2):
        st = self.node_counters
        probes = 0
        for t in self._node_chain.tables:
            probes += 1
            i = h1 & t.mask_major
            ks = t.k1[i]
            if u in ks:
                st.bucket_probes += probes
                return t.v1[i][ks.index(u)][3], ("table", t), False
            probes += 1
            i = h2 & t.mask_minor
            ks = t.k2[i]
            if u in ks:
                st.bucket_probes += probes
                return t.v2[i][ks.index(u)][3], ("table", t), False
        st.bucket_probes += probes
        for i, cell in enumerate(self._node_dl):
            if cell.node == u:
                self._dl_hits += 1
                return cell, ("dl", i), True
        return None, None, True

    def _locate_edge(self, u, v):
        """Full two-step lookup.

        Returns (cell, cell_where, handle, dl_scans, u_hashes, v_hashes);
        the hash pairs come back so mutating callers never rehash.
        """
        uh = self._node_hash.pair(u)
        cell, cwhere, scanned = self._find_cell_hashed(u, uh[0], uh[1])
        scans = 1 if scanned else 0
        if cell is None:
            return None, None, None, scans, uh, None
        vh = None
        if cell.chain is None:
            inline = cell.inline
            if self._weighted:
                for i, item in enumerate(inline):
                    if item[0] == v:
                        return cell, cwhere, ("inline", cell, i), scans, uh, vh
            elif v in inline:
                return (cell, cwhere, ("inline", cell, inline.index(v)),
                        scans, uh, vh)
        else:
            vh = self._adj_hash.pair(v)
            h1, h2 = vh
            st = self.adj_counters
            probes = 0
            for t in cell.chain.tables:
                probes += 1
                i = h1 & t.mask_major
                ks = t.k1[i]
                if v in ks:
                    st.bucket_probes += probes
                    j = ks.index(v)
                    return (cell, cwhere, ("slot", t, ks, t.v1[i], j),
                            scans, uh, vh)
                probes += 1
                i = h2 & t.mask_minor
                ks = t.k2[i]
                if v in ks:
                    st.bucket_probes += probes
                    j = ks.index(v)
                    return (cell, cwhere, ("slot", t, ks, t.v2[i], j),
                            scans, uh, vh)
            st.bucket_probes += probes
        scans += 1
        for i, row in enumerate(self._adj_dl):
            if row[0] == u and row[1] == v:
                self._dl_hits += 1
                return cell, cwhere, ("adj_dl", i), scans, uh, vh
        return cell, cwhere, None, scans, uh, vh

    # -- public operations ---------------------------------------------------

    def insert_edge(self, u: int, v: int, weight: int = 1) -> InsertResult:
        """Insert the directed edge u->v; duplicates increment w in weighted mode."""
        if weight < 1:
            raise ValueError("weight must be >= 1")
        cell, _, handle, _, uh, vh = self._locate_edge(u, v)
        if handle is not None:
            if not self._weighted:
                return _DUPLICATE
            w = self._read_weight(handle) + weight
            self._write_weight(handle, w)
            return InsertResult("incremented", w)
        if cell is None:
            cell = NodeCell(u)
            self._place_node_cell(cell, uh[0], uh[1])
            self._node_count += 1
            if self._pending_node or self._pending_adj:
                self._flush_pending()
        if cell.chain is None:
            if len(cell.inline) < self._inline_cap:
                cell.inline.append([v, weight] if self._weighted else v)
                self._inline_edges += 1
            else:
                self._promote(cell)
                self._chain_add(cell, v, weight, vh)
        else:
            self._chain_add(cell, v, weight, vh)
        cell.count += 1
        self._edge_count += 1
        if self._pending_node or self._pending_adj:
            self._flush_pending()
        return InsertResult("inserted", weight) if self._weighted else _INSERTED

    def query_edge(self, u: int, v: int):
        """Membership test; returns the weight (or None) in weighted mode."""
        np0 = self.node_counters.bucket_probes
        ap0 = self.adj_counters.bucket_probes
        cell, _, handle, scans, _, _ = self._locate_edge(u, v)
        np_ = self.node_counters.bucket_probes - np0
        ap = self.adj_counters.bucket_probes - ap0
        if np_ > self._max_q_node_probes:
            self._max_q_node_probes = np_
        if ap > self._max_q_adj_probes:
            self._max_q_adj_probes = ap
        if scans > self._max_q_dl_scans:
            self._max_q_dl_scans = scans
        if handle is None:
            return None if self._weighted else False
        if self._weighted:
            return self._read_weight(handle)
        return True

    def delete_edge(self, u: int, v: int) -> DeleteResult:
        """Delete u->v; weighted mode decrements w and removes only at zero."""
        cell, cwhere, handle, _, _, _ = self._locate_edge(u, v)
        if handle is None:
            return _ABSENT
        if self._weighted:
            w = self._read_weight(handle)
            if w > 1:
                self._write_weight(handle, w - 1)
                return DeleteResult("decremented", w - 1)
        hit_table = self._remove_at(cell, handle)
        cell.count -= 1
        self._edge_count -= 1
        if cell.count == 0:
            self._clear_cell(cell, cwhere)
        elif cell.chain is not None:
            chain = cell.chain
            if hit_table is not None and chain.should_contract():
                event = chain.contract(hit_table)
                if event is not None:
                    self._movements += event.moved
                self._flush_pending()
            self._maybe_demote(cell)
        if self._pending_node or self._pending_adj:
            self._flush_pending()
        return _DELETED

    def successors(self, u: int):
        """All v with edge u->v, as a set (of (v, w) pairs in weighted mode)."""
        cell, _, _ = self._find_cell(u)
        if cell is None:
            return set()
        weighted = self._weighted
        if cell.chain is None:
            if weighted:
                return {(item[0], item[1]) for item in cell.inline}
            return set(cell.inline)
        out = set()
        for t in cell.chain.tables:
            for e in t.entries():
                out.add((e[0], e[3]) if weighted else e[0])
        for row in self._adj_dl:
            if row[0] == u:
                out.add((row[1], row[2]) if weighted else row[1])
        return out

    def out_degree(self, u: int) -> int:
        cell, _, _ = self._find_cell(u)
        return cell.count if cell is not None else 0

    def nodes(self):
        """Iterate every stored source node."""
        for t in self._node_chain.tables:
            for e in t.entries():
                yield e[0]
        for cell in self._node_dl:
            yield cell.node

    def iter_edges(self):
        """Iterate distinct edges as (u, v) or (u, v, w) tuples."""
        weighted = self._weighted
        dl_by_u = {}
        for row in self._adj_dl:
            dl_by_u.setdefault(row[0], []).append(row)
        for cell in self._iter_cells():
            u = cell.node
            if cell.chain is None:
                for item in cell.inline:
                    yield (u, item[0], item[1]) if weighted else (u, item)
            else:
                for t in cell.chain.tables:
                    for e in t.entries():
                        yield (u, e[0], e[3]) if weighted else (u, e[0])
                for row in dl_by_u.get(u, ()):
                    yield tuple(row)

    def export_edges(self, path):
        """Write the deduplicated edge list as text lines."""
        with open(path, "w") as fh:
            for edge in self.iter_edges():
                fh.write(" ".join(str(x) for x in edge))
                fh.write("\n")

    def stats(self) -> GraphStats:
        p = self.params
        node_cells = self.node_counters.capacity_cells
        adj_cells = self.adj_counters.capacity_cells
        dl_bytes = (len(self._node_dl) * p.node_cell_bytes
                    + len(self._adj_dl) * p.adj_dl_entry_bytes)
        bytes_total = (node_cells * p.node_cell_bytes
                       + adj_cells * p.adj_cell_bytes
                       + dl_bytes
                       + (self.node_counters.tables + self.adj_counters.tables)
                       * TABLE_HEADER_BYTES)
        counters = {
            "node": self.node_counters.snapshot(),
            "adj": self.adj_counters.snapshot(),
            "movements": self._movements,
            "dl_hits": self._dl_hits,
            "sdl_peak": self._sdl_peak,
            "ldl_peak": self._ldl_peak,
            "max_query_probes_node": self._max_q_node_probes,
            "max_query_probes_adj": self._max_q_adj_probes,
            "max_query_dl_scans": self._max_q_dl_scans,
        }
        return GraphStats(
            nodes=self._node_count,
            edges=self._edge_count,
            node_cells=node_cells,
            adj_cells=adj_cells,
            node_load_rate=(self.node_counters.entries / node_cells)
            if node_cells else 0.0,
            adj_load_rate=(self.adj_counters.entries / adj_cells)
            if adj_cells else 0.0,
            inline_edges=self._inline_edges,
            node_dl_len=len(self._node_dl),
            adj_dl_len=len(self._adj_dl),
            dl_bytes=dl_bytes,
            bytes_total=bytes_total,
            counters=counters,
        )

    # -- introspection used by tests and the bench -------------------------

    def node_chain_lengths(self) -> tuple:
        return self._node_chain.lengths()

    def adjacency_lengths(self, u):
        """Chain table lengths for u, or None while destinations sit inline."""
        cell, _, _ = self._find_cell(u)
        if cell is None or cell.chain is None:
            return None
        return cell.chain.lengths()

    def chain_load_rates(self):
        """Load rate of the node chain and of every adjacency chain."""
        adj = [cell.chain.load_rate()
               for cell in self._iter_cells() if cell.chain is not None]
        return self._node_chain.load_rate(), adj

    def check_invariants(self):
        """Full-scan structural audit; raises AssertionError on violation."""
        p = self.params
        seen_nodes = {}
        for t in self._node_chain.tables:
            n_found = 0
            for bi, bucket in enumerate(t.v1):
                assert len(bucket) <= t.d, "bucket over capacity"
                assert t.k1[bi] == [e[0] for e in bucket], "key mirror drift"
                for e in bucket:
                    assert e[1] & t.mask_major == bi, "entry outside candidate bucket"
                    n_found += 1
                    assert e[0] not in seen_nodes, f"node {e[0]} stored twice"
                    seen_nodes[e[0]] = e[3]
            for bi, bucket in enumerate(t.v2):
                assert len(bucket) <= t.d, "bucket over capacity"
                assert t.k2[bi] == [e[0] for e in bucket], "key mirror drift"
                for e in bucket:
                    assert e[2] & t.mask_minor == bi, "entry outside candidate bucket"
                    n_found += 1
                    assert e[0] not in seen_nodes, f"node {e[0]} stored twice"
                    seen_nodes[e[0]] = e[3]
            assert n_found == t.count, "table count drift"
        for cell in self._node_dl:
            assert cell.node not in seen_nodes, f"node {cell.node} in table and overflow"
            seen_nodes[cell.node] = cell
        assert len(seen_nodes) == self._node_count, "node count drift"
        assert self._node_chain.lengths() == tuple(
            max(MIN_TABLE_LEN, x) for x in _schedule_row(self._node_chain)), \
            "node chain off schedule"
        dl_by_edge = {}
        for row in self._adj_dl:
            key = (row[0], row[1])
            assert key not in dl_by_edge, f"edge {key} duplicated in overflow"
            dl_by_edge[key] = row
        total_edges = 0
        inline_total = 0
        for cell in seen_nodes.values():
            assert cell.node in seen_nodes
            dests = set()
            if cell.chain is None:
                assert len(cell.inline) <= self._inline_cap, "inline overflow"
                for item in cell.inline:
                    v = item[0] if self._weighted else item
                    assert v not in dests, f"duplicate destination {v}"
                    dests.add(v)
                inline_total += len(cell.inline)
            else:
                chain = cell.chain
                assert len(chain.tables) <= p.chain_slots, "chain too long"
                assert chain.lengths() == tuple(
                    max(MIN_TABLE_LEN, x) for x in _schedule_row(chain)), \
                    "adjacency chain off schedule"
                for t in chain.tables:
                    for e in t.entries():
                        assert e[0] not in dests, f"duplicate destination {e[0]}"
                        dests.add(e[0])
            for (du, dv) in dl_by_edge:
                if du == cell.node:
                    assert dv not in dests, f"edge {(du, dv)} in table and overflow"
                    dests.add(dv)
            assert len(dests) == cell.count, \
                f"cell count drift for node {cell.node}"
            total_edges += cell.count
        assert total_edges == self._edge_count, "edge count drift"
        assert inline_total == self._inline_edges, "inline count drift"
        assert len(self._adj_dl) <= p.denylist_cap
        assert len(self._node_dl) <= p.denylist_cap
        assert not self._pending_node and not self._pending_adj

    # -- internals ----------------------------------------------------------

    def _iter_cells(self):
        for t in self._node_chain.tables:
            for e in t.entries():
                yield e[3]
        yield from self._node_dl

    def _place_node_cell(self, cell, h1=None, h2=None):
        if h1 is None:
            h1, h2 = self._node_hash.pair(cell.node)
        homeless = self._node_chain.insert(cell.node, h1, h2, cell)
        if homeless is not None:
            self._push_node_dl(homeless[3])

    def _chain_add(self, cell, v, weight, vh=None):
        if vh is None:
            vh = self._adj_hash.pair(v)
        homeless = cell.chain.insert(v, vh[0], vh[1],
                                     weight if self._weighted else None)
        if homeless is not None:
            self._push_adj_dl(cell, homeless)

    def _promote(self, cell):
        """Move an overflowing inline slot set into a fresh adjacency chain."""
        chain = self._new_adj_chain(cell.node)
        items = cell.inline
        cell.inline = []
        cell.chain = chain
        self._inline_edges -= len(items)
        for item in items:
            if self._weighted:
                v, w = item[0], item[1]
            else:
                v, w = item, None
            h1, h2 = self._adj_hash.pair(v)
            homeless = chain.insert(v, h1, h2, w)
            self._movements += 1
            if homeless is not None:
                self._pending_adj.append((cell.node, homeless))
        self._flush_pending()

    def _maybe_demote(self, cell):
        chain = cell.chain
        if chain is None or not chain.at_floor():
            return
        if cell.count > self._inline_cap:
            return
        if chain.entry_count() >= chain.contract_at * chain.capacity():
            return
        items = []
        for t in chain.tables:
            for e in t.entries():
                items.append([e[0], e[3]] if self._weighted else e[0])
            t.dispose()
        kept = []
        for row in self._adj_dl:
            if row[0] == cell.node:
                items.append([row[1], row[2]] if self._weighted else row[1])
            else:
                kept.append(row)
        self._adj_dl = kept
        cell.chain = None
        cell.inline = items
        self._inline_edges += len(items)
        self._movements += len(items)

    def _read_weight(self, handle):
        kind = handle[0]
        if kind == "inline":
            return handle[1].inline[handle[2]][1]
        if kind == "slot":
            return handle[3][handle[4]][3]
        return self._adj_dl[handle[1]][2]

    def _write_weight(self, handle, w):
        kind = handle[0]
        if kind == "inline":
            handle[1].inline[handle[2]][1] = w
        elif kind == "slot":
            _, table, kb, vb, j = handle
            e = vb[j]
            vb[j] = (e[0], e[1], e[2], w)
        else:
            self._adj_dl[handle[1]][2] = w

    def _remove_at(self, cell, handle):
        """Remove the located edge; returns the adjacency table hit, if any."""
        kind = handle[0]
        if kind == "inline":
            cell.inline.pop(handle[2])
            self._inline_edges -= 1
            return None
        if kind == "slot":
            _, table, kb, vb, j = handle
            table.clear_slot(kb, vb, j)
            return table
        self._adj_dl.pop(handle[1])
        return None

    def _clear_cell(self, cell, cwhere):
        if cell.chain is not None:
            for t in cell.chain.tables:
                t.dispose()
            cell.chain = None
        kind, ref = cwhere
        if kind == "table":
            h1, h2 = self._node_hash.pair(cell.node)
            ref.remove(cell.node, h1, h2)
            self._node_count -= 1
            if self._node_chain.should_contract():
                event = self._node_chain.contract(ref)
                if event is not None:
                    self._movements += event.moved
                self._flush_pending()
        else:
            self._node_dl.pop(ref)
            self._node_count -= 1


def _schedule_row(chain):
    return lengths_for_step(chain.step, chain.base_len)
