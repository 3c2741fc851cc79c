"""Pure-Python criterion kernels: incremental checkers and the set sampler.

This is the fallback backend (and the reference the compiled extension in
``_ckernels.pyx`` mirrors). Both backends perform the identical sequence of
floating-point operations and SplitMix64 draws, so for a given (graph, kind,
weights, seed) they return bit-identical sets; ``benchmarks/bench_kernels.py``
and the test suite both assert this.

Criterion kinds are encoded as ints: 0 domination, 1 total domination,
2 two-domination, 3 secure domination.

State counters:
  dc[v]    members of S in v's closed neighborhood (open for total)
  defc[v]  S-neighbors of v capable of defending it (secure only, v not in S)
  und      vertices violating the basic coverage requirement
  t1/t2    secure split: undominated outside S / dominated but undefended
"""

from __future__ import annotations

BACKEND_NAME = "python"

DOMINATION = 0
TOTAL = 1
TWO = 2
SECURE = 3

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_INV53 = 2.0**-53


class State:
    """Incremental criterion state for one vertex set S of one graph."""

    def __init__(self, n, kind, adj, closed, ball3):
        self.n = n
        self.kind = kind
        self.adj = adj
        self.closed = closed
        self.ball3 = ball3
        self.in_set = bytearray(n)
        self.dc = [0] * n
        self.defc = [0] * n
        self.size = 0
        self.und = n
        self.t1 = n
        self.t2 = 0
        if kind == SECURE:
            cadj = bytearray(n * n)
            for v in range(n):
                base = v * n
                for u in closed[v]:
                    cadj[base + u] = 1
            self.cadj = cadj
        else:
            self.cadj = None

    def reset(self):
        n = self.n
        if self.size:
            self.in_set = bytearray(n)
            self.dc = [0] * n
            self.size = 0
        if self.kind == SECURE:
            self.defc = [0] * n
        self.und = n
        self.t1 = n
        self.t2 = 0

    # -- queries ---------------------------------------------------------

    def satisfied(self):
        if self.kind == SECURE:
            return self.t1 + self.t2 == 0
        return self.und == 0

    def deficiency(self):
        if self.kind == SECURE:
            return self.t1 + self.t2
        return self.und

    def contains(self, v):
        return bool(self.in_set[v])

    def members(self):
        in_set = self.in_set
        return [v for v in range(self.n) if in_set[v]]

    def domcount(self, v):
        return self.dc[v]

    def defender_count(self, v):
        return self.defc[v]

    def snapshot(self):
        return (
            self.size,
            self.und,
            self.t1,
            self.t2,
            bytes(self.in_set),
            tuple(self.dc),
            tuple(self.defc),
        )

    # -- updates ---------------------------------------------------------

    def add(self, v):
        kind = self.kind
        dc = self.dc
        if kind == DOMINATION:
            self.in_set[v] = 1
            self.size += 1
            for u in self.closed[v]:
                if dc[u] == 0:
                    self.und -= 1
                dc[u] += 1
        elif kind == TOTAL:
            self.in_set[v] = 1
            self.size += 1
            for u in self.adj[v]:
                if dc[u] == 0:
                    self.und -= 1
                dc[u] += 1
        elif kind == TWO:
            in_set = self.in_set
            if dc[v] <= 1:
                self.und -= 1  # v leaves the quantified universe V \ S
            in_set[v] = 1
            self.size += 1
            for u in self.closed[v]:
                if dc[u] == 1 and not in_set[u]:
                    self.und -= 1
                dc[u] += 1
        else:
            self._secure_retract(v)
            self.in_set[v] = 1
            self.size += 1
            for u in self.closed[v]:
                dc[u] += 1
            self._secure_restore(v)

    def remove(self, v):
        kind = self.kind
        dc = self.dc
        if kind == DOMINATION:
            self.in_set[v] = 0
            self.size -= 1
            for u in self.closed[v]:
                dc[u] -= 1
                if dc[u] == 0:
                    self.und += 1
        elif kind == TOTAL:
            self.in_set[v] = 0
            self.size -= 1
            for u in self.adj[v]:
                dc[u] -= 1
                if dc[u] == 0:
                    self.und += 1
        elif kind == TWO:
            in_set = self.in_set
            for u in self.closed[v]:
                dc[u] -= 1
                if dc[u] == 1 and not in_set[u]:
                    self.und += 1
            in_set[v] = 0
            self.size -= 1
            if dc[v] <= 1:
                self.und += 1
        else:
            self._secure_retract(v)
            self.in_set[v] = 0
            self.size -= 1
            for u in self.closed[v]:
                dc[u] -= 1
            self._secure_restore(v)

    def _secure_retract(self, v):
        # withdraw the deficiency contributions of every vertex whose
        # defender status may change; restored by _secure_restore
        in_set = self.in_set
        dc = self.dc
        defc = self.defc
        t1 = self.t1
        t2 = self.t2
        for u in self.ball3[v]:
            if not in_set[u]:
                if dc[u] == 0:
                    t1 -= 1
                elif defc[u] == 0:
                    t2 -= 1
        self.t1 = t1
        self.t2 = t2

    def _secure_restore(self, v):
        in_set = self.in_set
        dc = self.dc
        defc = self.defc
        t1 = self.t1
        t2 = self.t2
        for u in self.ball3[v]:
            if not in_set[u]:
                defc[u] = self._count_defenders(u)
                if dc[u] == 0:
                    t1 += 1
                elif defc[u] == 0:
                    t2 += 1
        self.t1 = t1
        self.t2 = t2

    def _count_defenders(self, u):
        in_set = self.in_set
        count = 0
        for w in self.adj[u]:
            if in_set[w] and self._capable(w, u):
                count += 1
        return count

    def _capable(self, w, v):
        # w (in S, adjacent to v outside S) can defend v unless the swap
        # strands some neighbor u of w whose only dominator was w
        dc = self.dc
        cadj_v = v * self.n
        cadj = self.cadj
        for u in self.adj[w]:
            if dc[u] == 1 and not cadj[cadj_v + u]:
                return False
        return True

    def capable(self, w, v):
        """Public defender test; out-of-contract inputs return False."""
        n = self.n
        if not (0 <= w < n and 0 <= v < n):
            return False
        if not self.in_set[w] or self.in_set[v]:
            return False
        if self.kind != SECURE or not self.cadj[w * n + v] or w == v:
            return False
        return self._capable(w, v)

    def try_remove(self, v):
        """Remove v if S \\ {v} still satisfies the criterion. Returns True
        when the removal happened."""
        kind = self.kind
        dc = self.dc
        if kind == DOMINATION:
            broken = 0
            for u in self.closed[v]:
                if dc[u] == 1:
                    broken += 1
            if self.und + broken:
                return False
        elif kind == TOTAL:
            broken = 0
            for u in self.adj[v]:
                if dc[u] == 1:
                    broken += 1
            if self.und + broken:
                return False
        elif kind == TWO:
            in_set = self.in_set
            broken = 1 if dc[v] <= 2 else 0
            for u in self.adj[v]:
                if dc[u] == 2 and not in_set[u]:
                    broken += 1
            if self.und + broken:
                return False
        else:
            self.remove(v)
            if self.t1 + self.t2 == 0:
                return True
            self.add(v)
            return False
        self.remove(v)
        return True


def make_state(graph, tables, kind):
    adj = graph.adj
    closed = tuple(tables.closed(v) for v in range(graph.n))
    ball3 = tuple(tables.ball3(v) for v in range(graph.n))
    return State(graph.n, kind, adj, closed, ball3)


class Sampler:
    """Two-phase minimal-set generator bound to one criterion state.

    Phase 1 grows S by weighted draws until the criterion holds; phase 2
    walks the members in complement-weighted random order, dropping each one
    whose removal keeps the criterion satisfied.
    """

    def __init__(self, state):
        self.state = state

    def generate(self, weights, seed):
        """One minimal satisfying set for the given weights and seed.

        weights may be any sequence of floats in [0, 1]; returns the sorted
        member list.
        """
        state = self.state
        state.reset()
        n = state.n
        in_set = state.in_set
        rng_s = seed & _MASK

        pdag = [float(w) for w in weights]
        porig = list(pdag)
        live = [i for i in range(n) if pdag[i] > 0.0]
        total = 0.0
        for i in live:
            total += pdag[i]

        # phase 1: weighted growth until the criterion is satisfied
        while not state.satisfied():
            rng_s = (rng_s + _GOLDEN) & _MASK
            z = rng_s
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
            draw = ((z ^ (z >> 31)) >> 11) * _INV53
            nlive = len(live)
            if nlive > 0:
                u = draw * total
                acc = 0.0
                pos = nlive - 1
                for idx in range(nlive):
                    acc += pdag[live[idx]]
                    if u < acc:
                        pos = idx
                        break
                v = live[pos]
                total -= pdag[v]
                pdag[v] = 0.0
                live[pos] = live[nlive - 1]
                live.pop()
            else:
                # weight mass exhausted: uniform over vertices still outside S
                k = n - state.size
                idx = int(draw * k)
                if idx >= k:
                    idx = k - 1
                v = -1
                count = -1
                for j in range(n):
                    if not in_set[j]:
                        count += 1
                        if count == idx:
                            v = j
                            break
            state.add(v)

        # phase 2: complement-weighted minimalization over the phase-1 set
        members0 = state.members()
        pbar = [0.0] * n
        live2 = []
        total2 = 0.0
        for j in members0:
            w = 1.0 - porig[j]
            pbar[j] = w
            if w > 0.0:
                live2.append(j)
                total2 += w
        unprocessed = bytearray(n)
        for j in members0:
            unprocessed[j] = 1
        remaining = len(members0)

        while remaining > 0:
            rng_s = (rng_s + _GOLDEN) & _MASK
            z = rng_s
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
            draw = ((z ^ (z >> 31)) >> 11) * _INV53
            nlive = len(live2)
            if nlive > 0:
                u = draw * total2
                acc = 0.0
                pos = nlive - 1
                for idx in range(nlive):
                    acc += pbar[live2[idx]]
                    if u < acc:
                        pos = idx
                        break
                v = live2[pos]
                total2 -= pbar[v]
                pbar[v] = 0.0
                live2[pos] = live2[nlive - 1]
                live2.pop()
            else:
                # all complements were zero: finish in uniform random order
                # so every member is still considered exactly once
                idx = int(draw * remaining)
                if idx >= remaining:
                    idx = remaining - 1
                v = -1
                count = -1
                for j in range(n):
                    if unprocessed[j]:
                        count += 1
                        if count == idx:
                            v = j
                            break
            state.try_remove(v)
            unprocessed[v] = 0
            remaining -= 1

        return state.members()
