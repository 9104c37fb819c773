"""Ordered partition with order-preserving prefix-split refinement.

Classes form a doubly linked list; so do the vertices inside each class.
Everything is stored in flat integer lists indexed by vertex id or class id,
which keeps the hot loops free of attribute lookups on small objects.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import VertexNotInGroundSet

NIL = -1


class OrderedPartition:
    """Ordered sequence of disjoint, non-empty vertex classes.

    Parameters
    ----------
    n : int
        Size of the id universe; vertices are ints in ``[0, n)``.
    initial : sequence of int
        Ground-set vertices in their initial order.  They start out in one
        class (or no class at all when empty).

    Every class keeps its members in the order they had in ``initial``
    except for vertices sent to the back by :meth:`move_to_back`.  With
    ``presorted=True``, :meth:`refine` relies on the caller listing subset
    members in current within-class order.
    """

    def __init__(self, n: int, initial: Sequence[int]):
        self.n = n
        # per-vertex
        self.cls = [NIL] * n
        self.vprev = [NIL] * n
        self.vnext = [NIL] * n
        self.rank = [NIL] * n
        # per-class (grown on demand)
        self.head: list[int] = []
        self.tail: list[int] = []
        self.size: list[int] = []
        self.cprev: list[int] = []
        self.cnext: list[int] = []
        self._twin: list[int] = []
        self._free: list[int] = []
        self.first = NIL
        self.last = NIL
        self.num_classes = 0
        self.moves = 0
        # ranks grow along every class; move_to_back hands out fresh ones
        self._next_rank = len(initial)

        if len(initial):
            c = self._new_class()
            self.first = self.last = c
            self.num_classes = 1
            prev = NIL
            for i, v in enumerate(initial):
                if self.cls[v] != NIL:
                    raise ValueError(f"vertex {v} listed twice")
                self.cls[v] = c
                self.rank[v] = i
                self.vprev[v] = prev
                if prev == NIL:
                    self.head[c] = v
                else:
                    self.vnext[prev] = v
                prev = v
            self.tail[c] = prev
            self.size[c] = len(initial)

    # -- class bookkeeping -------------------------------------------------

    def _new_class(self) -> int:
        if self._free:
            c = self._free.pop()
            self.head[c] = self.tail[c] = NIL
            self.size[c] = 0
            self.cprev[c] = self.cnext[c] = NIL
            self._twin[c] = NIL
            return c
        c = len(self.head)
        self.head.append(NIL)
        self.tail.append(NIL)
        self.size.append(0)
        self.cprev.append(NIL)
        self.cnext.append(NIL)
        self._twin.append(NIL)
        return c

    def _insert_class_before(self, c: int, before: int) -> None:
        p = self.cprev[before]
        self.cprev[c] = p
        self.cnext[c] = before
        self.cprev[before] = c
        if p == NIL:
            self.first = c
        else:
            self.cnext[p] = c
        self.num_classes += 1

    def _unlink_class(self, c: int) -> None:
        p, q = self.cprev[c], self.cnext[c]
        if p == NIL:
            self.first = q
        else:
            self.cnext[p] = q
        if q == NIL:
            self.last = p
        else:
            self.cprev[q] = p
        self.num_classes -= 1
        self._free.append(c)

    def _unlink_vertex(self, v: int) -> int:
        c = self.cls[v]
        p, q = self.vprev[v], self.vnext[v]
        if p == NIL:
            self.head[c] = q
        else:
            self.vnext[p] = q
        if q == NIL:
            self.tail[c] = p
        else:
            self.vprev[q] = p
        self.size[c] -= 1
        return c

    def _append_vertex(self, v: int, c: int) -> None:
        t = self.tail[c]
        self.vprev[v] = t
        self.vnext[v] = NIL
        if t == NIL:
            self.head[c] = v
        else:
            self.vnext[t] = v
        self.tail[c] = v
        self.size[c] += 1
        self.cls[v] = c

    # -- public operations -------------------------------------------------

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.cls[v] != NIL

    def refine(self, subset: Iterable[int], presorted: bool = False) -> None:
        """Split every class ``Q`` into ``(Q & subset, Q - subset)`` in place.

        Classes entirely inside or outside ``subset`` keep their contents.
        The relative order of vertices inside both halves is preserved.
        With ``presorted=True`` the caller promises that ``subset`` is listed
        in current within-class order, and the cost is O(|subset|).
        """
        if not presorted:
            subset = list(subset)
            for v in subset:
                if v not in self:
                    raise VertexNotInGroundSet(f"vertex {v} is not in the partition")
            subset.sort(key=self.rank.__getitem__)
        # hot loop: list operations inlined
        cls = self.cls
        vprev = self.vprev
        vnext = self.vnext
        head = self.head
        tail = self.tail
        size = self.size
        cprev = self.cprev
        cnext = self.cnext
        twin = self._twin
        touched = []
        moved = 0
        for v in subset:
            moved += 1
            c = cls[v]
            a = twin[c]
            if a < 0:
                a = self._new_class()
                p = cprev[c]
                cprev[a] = p
                cnext[a] = c
                cprev[c] = a
                if p < 0:
                    self.first = a
                else:
                    cnext[p] = a
                twin[c] = a
                touched.append(c)
            p = vprev[v]
            q = vnext[v]
            if p < 0:
                head[c] = q
            else:
                vnext[p] = q
            if q < 0:
                tail[c] = p
            else:
                vprev[q] = p
            size[c] -= 1
            t = tail[a]
            vprev[v] = t
            vnext[v] = NIL
            if t < 0:
                head[a] = v
            else:
                vnext[t] = v
            tail[a] = v
            size[a] += 1
            cls[v] = a
        self.moves += moved
        self.num_classes += len(touched)
        for c in touched:
            twin[c] = NIL
            if size[c] == 0:
                self._unlink_class(c)

    def split_front(self, c: int) -> int:
        """Make the head of class ``c`` a singleton class placed before ``c``.

        Returns the head vertex.  Does nothing structural if ``c`` is already
        a singleton.
        """
        v = self.head[c]
        if self.size[c] > 1:
            a = self._new_class()
            self._insert_class_before(a, c)
            self._unlink_vertex(v)
            self._append_vertex(v, a)
            self.moves += 1
        return v

    def remove(self, v: int) -> None:
        """Delete ``v`` from the ground set, dropping its class if it empties."""
        if v not in self:
            raise VertexNotInGroundSet(f"vertex {v} is not in the partition")
        c = self._unlink_vertex(v)
        self.cls[v] = NIL
        if self.size[c] == 0:
            self._unlink_class(c)

    def prepend_singleton(self, v: int) -> None:
        """Add ``v`` (not currently in the ground set) as a new first class."""
        if v in self:
            raise ValueError(f"vertex {v} already in the partition")
        c = self._new_class()
        self._append_vertex(v, c)
        if self.first == NIL:
            self.first = self.last = c
            self.num_classes = 1
        else:
            self._insert_class_before(c, self.first)

    def move_to_back(self, v: int) -> None:
        """Move ``v`` to the end of its own class."""
        c = self._unlink_vertex(v)
        self._append_vertex(v, c)
        self.rank[v] = self._next_rank
        self._next_rank += 1

    def class_members(self, c: int) -> list[int]:
        out = []
        v = self.head[c]
        nxt = self.vnext
        while v != NIL:
            out.append(v)
            v = nxt[v]
        return out

    def class_ids(self) -> list[int]:
        out = []
        c = self.first
        while c != NIL:
            out.append(c)
            c = self.cnext[c]
        return out

    def classes(self) -> list[list[int]]:
        return [self.class_members(c) for c in self.class_ids()]

    def flatten(self) -> list[int]:
        return [v for c in self.class_ids() for v in self.class_members(c)]

    def format(self, names: Sequence | None = None) -> str:
        """Render as ``(a,b)(c)`` using ``names`` for the vertex labels."""
        label = (lambda v: str(v)) if names is None else (lambda v: str(names[v]))
        return "".join("(" + ",".join(label(v) for v in part) + ")" for part in self.classes())

    def check_invariants(self) -> None:
        """Assert the structural invariants; meant for tests."""
        seen = set()
        c = self.first
        prev = NIL
        count = 0
        while c != NIL:
            assert self.cprev[c] == prev
            members = self.class_members(c)
            assert members, "empty class"
            assert len(members) == self.size[c]
            for v in members:
                assert self.cls[v] == c
                assert v not in seen
                seen.add(v)
            ranks = [self.rank[v] for v in members]
            assert ranks == sorted(ranks), "ranks out of order"
            prev = c
            c = self.cnext[c]
            count += 1
        assert self.last == prev
        assert count == self.num_classes
        for v in range(self.n):
            assert (self.cls[v] != NIL) == (v in seen)

    def __repr__(self):
        return f"OrderedPartition({self.format()})"
