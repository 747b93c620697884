"""Benchmark harness: drive phases against one graph and report CSV.

Phases are given as compact strings:

    insert                    insert every dataset edge
    query                     query every dataset edge
    delete                    delete every dataset edge (insertion or random order)
    mixed:RI,RQ,RD:COUNT      random op mix over the node universe
    task:NAME[:TOP_K]         one analytics task (bfs sssp tc cc pr bc lcc)

The CSV has one summary row per phase plus "mem:" rows carrying the
structure-accounted byte samples taken every ``mem_interval`` operations.
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass, field

from . import analytics
from .analytics import TaskSpec
from .graph import CuckooGraph, GraphParams
from .hashing import mix64
from .workload import dedup_edges, mixed_ops, read_edge_file

CSV_COLUMNS = ("phase", "ops", "elapsed_ns", "mops", "bytes",
               "placements", "evictions", "dl_hits", "movements")


@dataclass(frozen=True)
class PhaseResult:
    phase: str
    ops: int
    elapsed_ns: int
    mops: float
    bytes: int
    placements: int
    evictions: int
    dl_hits: int
    movements: int


@dataclass(frozen=True)
class MemSample:
    phase: str
    ops: int
    bytes: int


@dataclass(frozen=True)
class Workload:
    dataset: str | None = None
    phases: tuple = ("insert", "query")
    dedup: bool = False
    params: GraphParams = field(default_factory=GraphParams)
    seed: int = 0
    top_k: int = 10
    delete_order: str = "insertion"
    mem_interval: int = 100_000

    def __post_init__(self):
        if not self.phases:
            raise ValueError("workload needs at least one phase")
        if self.delete_order not in ("insertion", "random"):
            raise ValueError("delete_order must be 'insertion' or 'random'")
        for spec in self.phases:
            _parse_phase(spec, self)  # validate early


@dataclass(frozen=True)
class Report:
    phases: tuple
    samples: tuple

    def to_csv(self, path):
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for p in self.phases:
                writer.writerow([p.phase, p.ops, p.elapsed_ns, repr(p.mops),
                                 p.bytes, p.placements, p.evictions,
                                 p.dl_hits, p.movements])
            for s in self.samples:
                writer.writerow([f"mem:{s.phase}", s.ops, 0, repr(0.0),
                                 s.bytes, 0, 0, 0, 0])
        return path

    @classmethod
    def from_csv(cls, path):
        phases, samples = [], []
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            if tuple(header) != CSV_COLUMNS:
                raise ValueError(f"unexpected CSV header {header}")
            for row in reader:
                if row[0].startswith("mem:"):
                    samples.append(MemSample(row[0][4:], int(row[1]),
                                             int(row[4])))
                else:
                    phases.append(PhaseResult(
                        row[0], int(row[1]), int(row[2]), float(row[3]),
                        int(row[4]), int(row[5]), int(row[6]), int(row[7]),
                        int(row[8])))
        return cls(tuple(phases), tuple(samples))


def _parse_phase(spec, workload):
    parts = spec.split(":")
    name = parts[0]
    if name in ("insert", "query", "delete") and len(parts) == 1:
        return (name,)
    if name == "mixed":
        if len(parts) != 3:
            raise ValueError(f"mixed phase needs mixed:RI,RQ,RD:COUNT, got {spec!r}")
        ratios = tuple(float(x) for x in parts[1].split(","))
        if len(ratios) != 3:
            raise ValueError("mixed phase needs three ratios")
        if abs(sum(ratios) - 1.0) > 1e-9:
            raise ValueError("mixed ratios must sum to 1")
        return ("mixed", ratios, int(parts[2]))
    if name == "task":
        if len(parts) not in (2, 3):
            raise ValueError(f"task phase needs task:NAME[:TOP_K], got {spec!r}")
        top_k = int(parts[2]) if len(parts) == 3 else workload.top_k
        return ("task", TaskSpec(parts[1], top_k=top_k))
    raise ValueError(f"unknown phase {spec!r}")


def _digest(value) -> str:
    """Stable cross-process digest of a task result."""
    def canon(x):
        if isinstance(x, dict):
            return tuple(sorted((canon(k), canon(v)) for k, v in x.items()))
        if isinstance(x, (list, tuple, set)):
            items = [canon(i) for i in x]
            return tuple(sorted(items)) if isinstance(x, set) else tuple(items)
        if isinstance(x, float):
            return round(x, 12)
        return x
    acc = 0xCBF29CE484222325
    for b in repr(canon(value)).encode():
        acc = mix64(acc ^ b)
    return format(acc, "016x")


class _PhaseTimer:
    def __init__(self, graph, mem_interval, samples, phase_name):
        self.graph = graph
        self.interval = mem_interval
        self.samples = samples
        self.phase = phase_name
        self.ops = 0

    def tick(self):
        self.ops += 1
        if self.interval and self.ops % self.interval == 0:
            self.samples.append(MemSample(self.phase, self.ops,
                                          self.graph.stats().bytes_total))


def run(workload: Workload) -> Report:
    """Execute every phase in order against a single graph instance."""
    edges = []
    if workload.dataset is not None:
        edges = read_edge_file(workload.dataset)
        if workload.dedup:
            edges = dedup_edges(edges)
    graph = CuckooGraph(workload.params)
    phases = []
    samples = []
    universe = 1 + max((max(e[0], e[1]) for e in edges), default=1 << 16)
    for i, spec in enumerate(workload.phases):
        parsed = _parse_phase(spec, workload)
        name = f"{i}:{spec}"
        before = _counter_totals(graph)
        timer = _PhaseTimer(graph, workload.mem_interval, samples, name)
        start = time.perf_counter_ns()
        if parsed[0] == "insert":
            for e in edges:
                graph.insert_edge(*e)
                timer.tick()
        elif parsed[0] == "query":
            for e in edges:
                graph.query_edge(e[0], e[1])
                timer.tick()
        elif parsed[0] == "delete":
            order = edges
            if workload.delete_order == "random":
                order = list(edges)
                random.Random(workload.seed).shuffle(order)
            for e in order:
                graph.delete_edge(e[0], e[1])
                timer.tick()
        elif parsed[0] == "mixed":
            _, ratios, count = parsed
            for op, u, v in mixed_ops(count, ratios, universe, workload.seed):
                if op == "i":
                    graph.insert_edge(u, v)
                elif op == "q":
                    graph.query_edge(u, v)
                else:
                    graph.delete_edge(u, v)
                timer.tick()
        else:
            result = analytics.run_task(graph, parsed[1])
            timer.ops = _task_units(result)
            name = f"{name}@{_digest(result)}"
        elapsed = max(1, time.perf_counter_ns() - start)
        after = _counter_totals(graph)
        stats = graph.stats()
        samples.append(MemSample(name, timer.ops, stats.bytes_total))
        phases.append(PhaseResult(
            phase=name,
            ops=timer.ops,
            elapsed_ns=elapsed,
            mops=timer.ops / elapsed * 1000.0,
            bytes=stats.bytes_total,
            placements=after["placements"] - before["placements"],
            evictions=after["evictions"] - before["evictions"],
            dl_hits=after["dl_hits"] - before["dl_hits"],
            movements=after["movements"] - before["movements"],
        ))
    return Report(tuple(phases), tuple(samples))


def _counter_totals(graph):
    c = graph.stats().counters
    return {
        "placements": c["node"]["placements"] + c["adj"]["placements"],
        "evictions": c["node"]["evictions"] + c["adj"]["evictions"],
        "dl_hits": c["dl_hits"],
        "movements": c["movements"],
    }


def _task_units(result):
    if "sources" in result:
        return len(result["sources"])
    if "counts" in result:
        return len(result["counts"])
    return 1
