"""Growth and contraction controller for a chain of cuckoo tables.

A chain starts as one table of ``base_len`` buckets and tracks how many
times the newest table's load rate crossed the grow threshold. The table
lengths for step k (three-table chains, base length n) follow a fixed
schedule:

    k=0: (n)            k=1: (n, n/2)     k=2: (n, n/2, n/2)
    k=3: (2n, n)        k=4: (2n, n, n)   k=5: (4n, 2n)
    k=6: (4n, 2n, 2n)   k=7: (8n, 4n)     ...

Odd steps beyond the first merge everything into one larger table and
enable a fresh one; even steps just enable another table. Total capacity
grows by 3/2 on merge steps and 4/3 on enable steps. New entries always
go to the newest table; lookups scan oldest to newest.
"""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_TABLES = 3
MIN_TABLE_LEN = 2


def lengths_for_step(step: int, base_len: int) -> tuple[int, ...]:
    """Pure schedule row: table lengths after ``step`` grow events."""
    if step < 0:
        raise ValueError("step must be >= 0")
    if base_len < 2 or base_len % 2:
        raise ValueError("base_len must be even and >= 2")
    if step == 0:
        return (base_len,)
    j, phase = divmod(step - 1, 2)
    big = base_len << j
    half = big >> 1
    if phase == 0:
        return (big, half)
    return (big, half, half)


def _materialized(step: int, base_len: int) -> tuple[int, ...]:
    # real tables cannot go below the minimum 2:1 shape
    return tuple(max(MIN_TABLE_LEN, ln) for ln in lengths_for_step(step, base_len))


@dataclass
class ChainEvent:
    """Outcome of one structural change."""

    kind: str                      # enabled | merged | removed | halved
    lengths: tuple[int, ...]
    moved: int = 0
    failed: list = field(default_factory=list)
    rebuilt: bool = False


class TableChain:
    """Ordered list of cuckoo tables plus the grow/shrink bookkeeping.

    ``make_table(length)`` builds a table of the given length;
    ``fail_sink(entry)`` receives entries that could not be re-placed
    during a structural move; ``on_grow(chain, event)`` runs after each
    grow event (the overflow-list drain hook).
    """

    __slots__ = ("base_len", "expand_at", "contract_at", "step", "tables",
                 "make_table", "owner", "on_grow", "fail_sink")

    def __init__(self, base_len, expand_at, contract_at, make_table,
                 owner=None, on_grow=None, fail_sink=None):
        self.base_len = base_len
        self.expand_at = expand_at
        self.contract_at = contract_at
        self.make_table = make_table
        self.owner = owner
        self.on_grow = on_grow
        self.fail_sink = fail_sink
        self.step = 0
        self.tables = [make_table(max(MIN_TABLE_LEN, base_len))]

    # -- metrics ---------------------------------------------------------

    def lengths(self) -> tuple[int, ...]:
        return tuple(t.shape.length for t in self.tables)

    def entry_count(self) -> int:
        return sum(t.count for t in self.tables)

    def capacity(self) -> int:
        return sum(t.cap for t in self.tables)

    def load_rate(self) -> float:
        return self.entry_count() / self.capacity()

    def newest(self):
        return self.tables[-1]

    def at_floor(self) -> bool:
        return len(self.tables) == 1 and self.tables[0].shape.length <= max(
            MIN_TABLE_LEN, self.base_len)

    # -- triggers ----------------------------------------------------------

    def should_expand(self) -> bool:
        """True when the newest table already sits at or above the grow threshold."""
        t = self.tables[-1]
        return t.count >= self.expand_at * t.cap

    def should_contract(self) -> bool:
        """True when the whole chain's load rate fell strictly below the floor threshold."""
        if self.at_floor():
            return False
        return self.entry_count() < self.contract_at * self.capacity()

    # -- operations --------------------------------------------------------

    def find(self, key, h1, h2):
        for t in self.tables:
            e = t.find(key, h1, h2)
            if e is not None:
                return e
        return None

    def find_slot(self, key, h1, h2):
        """Return (table, key_bucket, entry_bucket, index) for in-place edits."""
        for t in self.tables:
            slot = t.find_slot(key, h1, h2)
            if slot is not None:
                return (t,) + slot
        return None

    def insert(self, key, h1, h2, payload):
        """Insert into the newest table, growing first if it is at threshold.

        Returns the evicted entry when the kick budget ran out, else None.
        """
        t = self.tables[-1]
        if t.count >= self.expand_at * t.cap:
            self.advance()
            t = self.tables[-1]
        _, evicted = t.insert(key, h1, h2, payload)
        return evicted

    def advance(self) -> ChainEvent:
        """Perform one grow event and run the grow hook."""
        self.step += 1
        target = _materialized(self.step, self.base_len)
        if self.step == 1 or self.step % 2 == 0:
            # enable one more table; existing ones keep their contents
            self.tables.append(self.make_table(target[-1]))
            event = ChainEvent("enabled", target)
        else:
            old = self.tables
            merged = self.make_table(target[0])
            moved, failed = self._transfer(old, [merged])
            self.tables = [merged, self.make_table(target[1])]
            event = ChainEvent("merged", target, moved=moved, failed=failed)
        if self.on_grow is not None:
            self.on_grow(self, event)
        return event

    def contract(self, hit_table) -> ChainEvent | None:
        """Shrink after a deletion that left the chain under-loaded.

        With several tables active, the table the deletion hit is removed
        and its entries move to the remaining tables; with a single table,
        its length halves (never below the base length). The step counter
        is then re-anchored to the schedule, rebuilding the chain when the
        surviving configuration matches no schedule row.
        """
        if len(self.tables) >= 2:
            self.tables.remove(hit_table)
            moved, failed = self._transfer([hit_table], list(reversed(self.tables)))
            event = ChainEvent("removed", self.lengths(), moved=moved, failed=failed)
        else:
            t = self.tables[0]
            floor = max(MIN_TABLE_LEN, self.base_len)
            if t.shape.length <= floor:
                return None
            new = self.make_table(max(floor, t.shape.length // 2))
            self.tables = [new]
            moved, failed = self._transfer([t], [new])
            event = ChainEvent("halved", self.lengths(), moved=moved, failed=failed)
        self._reanchor(event)
        event.lengths = self.lengths()
        return event

    # -- internals ---------------------------------------------------------

    def _transfer(self, sources, dests):
        """Drain every source table into the destination tables, first fit.

        Entries that no destination accepts go to the fail sink. Returns
        (moved, failed) where moved counts all drained entries.
        """
        moved = 0
        failed = []
        for src in sources:
            for entry in src.entries():
                moved += 1
                homeless = entry
                for t in dests:
                    _, homeless = t.insert(homeless[0], homeless[1], homeless[2],
                                           homeless[3])
                    if homeless is None:
                        break
                if homeless is not None:
                    failed.append(homeless)
            src.dispose()
        if failed and self.fail_sink is not None:
            for e in failed:
                self.fail_sink(e)
            failed = []
        return moved, failed

    def _reanchor(self, event):
        """Snap the step counter back onto the schedule after a contraction."""
        lengths = self.lengths()
        total = sum(lengths)
        step = 0
        match = None
        best = 0
        while True:
            row = _materialized(step, self.base_len)
            if sum(row) > total and step > 0:
                break
            if row == lengths:
                match = step
                break
            if sum(row) <= total:
                best = step
            step += 1
        if match is not None:
            self.step = match
            return
        # off-schedule survivor: rebuild into the largest row that fits
        target = _materialized(best, self.base_len)
        old = self.tables
        self.tables = [self.make_table(ln) for ln in target]
        moved, failed = self._transfer(old, self.tables)
        self.step = best
        event.moved += moved
        event.failed.extend(failed)
        event.rebuilt = True
