"""Planar tangle diagrams with crossings and their skein reduction.

A diagram is built bottom-to-top from bricks (crossings, caps, cups) and
reduced to an exact linear combination of canonical matching diagrams.

Conventions, all pinned by the n=4 golden matrices:
  * composing x*y stacks x's diagram below y's;
  * the brick for a braid generator at (k, k+1) sends the strand rising
    from bottom-k to top-(k+1) underneath the other strand;
  * crossing slots are numbered counterclockwise 0=BL, 1=BR, 2=TR, 3=TL,
    so a pass occupies diagonal 0 (slots 0-2) or diagonal 1 (slots 1-3),
    and the braid brick has its over-pass on diagonal 1;
  * a closed loop contributes tau; removing a kink of writhe w
    contributes a^(-w).

Reduction strategy: greedily remove kinks and loops, then walk the
strands in canonical order (decreasing larger endpoint, closed loops
last).  If every crossing is first met on its over-pass the diagram is
descending: it is isotopic to the canonical picture of its boundary
matching and is worth a^(-self-writhe) * tau^(#loops).  Otherwise the
first offending crossing is exchanged via the skein relation
t - t^{-1} = epsilon(1 - e), which terminates because switches move the
first offence forward and smoothings lose a crossing.
"""

from __future__ import annotations

from .matchings import Matching
from .scalars import SC_ONE, Scalar

# slot coordinates, counterclockwise from bottom-left
_POS = ((-1, -1), (1, -1), (1, 1), (-1, 1))


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


class Tangle:
    """Finished diagram: an involution `arcs` on ports, `over[cid]` in
    {0, 1} giving the over-diagonal of each live crossing, and a count of
    already-removed free loops.  Ports are ('b', i) or (cid, slot)."""

    __slots__ = ("n_bottom", "over", "arcs", "nloops")

    def __init__(self, n_bottom, over, arcs, nloops=0):
        self.n_bottom = n_bottom
        self.over = over
        self.arcs = arcs
        self.nloops = nloops

    def switched(self, cid):
        over = dict(self.over)
        over[cid] = 1 - over[cid]
        return Tangle(self.n_bottom, over, self.arcs, self.nloops)

    def without_crossing(self, cid, joins):
        """Remove a crossing, reconnecting its slots along `joins`
        (pairs of slot numbers)."""
        over = dict(self.over)
        del over[cid]
        pairs = [((cid, a), (cid, b)) for a, b in joins]
        arcs, loops = _splice(self.arcs, pairs)
        return Tangle(self.n_bottom, over, arcs, self.nloops + loops)


def _splice(arcs, pairs):
    """Contract 2-valent junctions: each (x, y) in `pairs` becomes an
    internal connection between ports x and y.  Returns the new arc
    involution and the number of closed loops swallowed."""
    through = {}
    for x, y in pairs:
        through[x] = y
        through[y] = x
    out = {k: v for k, v in arcs.items() if k not in through and v not in through}
    loops = 0
    seen = set()
    for t0 in through:
        if t0 in seen:
            continue
        # walk across the junction at t0, then along arcs, until a real port
        cur = t0
        end1 = None
        while True:
            seen.add(cur)
            mate = through[cur]
            seen.add(mate)
            nxt = arcs[mate]
            if nxt not in through:
                end1 = nxt
                break
            cur = nxt
            if cur == t0:
                break
        if end1 is None:
            loops += 1
            continue
        # walk the other way, starting along t0's own arc
        prev = arcs[t0]
        while prev in through:
            seen.add(prev)
            mate = through[prev]
            seen.add(mate)
            prev = arcs[mate]
        end2 = prev
        out[end1] = end2
        out[end2] = end1
    return out, loops


class TangleBuilder:
    """Assembles a diagram brick by brick, bottom to top."""

    def __init__(self, n_bottom):
        self.n_bottom = n_bottom
        self.wires = [("b", i) for i in range(1, n_bottom + 1)]
        self.arcs = {}
        self.over = {}
        self._next_cid = 0
        self._next_uid = 0
        self._cups = []

    def _attach(self, wire, port):
        self.arcs[wire] = port
        self.arcs[port] = wire

    def cross(self, k, sign):
        """Braid brick on wires k, k+1; sign +1 is the generator, -1 its
        inverse."""
        cid = self._next_cid
        self._next_cid += 1
        self.over[cid] = 1 if sign > 0 else 0
        self._attach(self.wires[k - 1], (cid, 0))
        self._attach(self.wires[k], (cid, 1))
        self.wires[k - 1] = (cid, 3)
        self.wires[k] = (cid, 2)

    def cap(self, k):
        """Join wires k, k+1 from above."""
        w1 = self.wires.pop(k)
        w0 = self.wires.pop(k - 1)
        self._attach(w0, w1)

    def cup(self, k):
        """Create two new adjacent wires at positions k, k+1 connected
        from below."""
        uid = self._next_uid
        self._next_uid += 1
        e0, e1 = ("u", uid, 0), ("u", uid, 1)
        self._cups.append((e0, e1))
        self.wires[k - 1 : k - 1] = [e0, e1]

    def letter(self, lt):
        """Apply a word letter: ('t', i, sign) or ('e', i)."""
        if lt[0] == "t":
            self.cross(lt[1], lt[2])
        elif lt[0] == "e":
            self.cap(lt[1])
            self.cup(lt[1])
        else:
            raise ValueError(f"unknown letter {lt!r}")

    def finish(self):
        if self.wires:
            raise ValueError("diagram has dangling wires")
        arcs, loops = _splice(self.arcs, self._cups)
        return Tangle(self.n_bottom, self.over, arcs, loops)


def _kink_factor(params, over_diag, k):
    """Factor for removing a kink whose arc joins slots k, k+1 (mod 4)."""
    k1 = (k + 1) % 4
    under = 1 - over_diag
    u_arc = k if k % 2 == under else k1
    o_arc = k1 if u_arc == k else k
    u_free = (u_arc + 2) % 4
    sign = 1 if _cross2(_POS[u_free], _POS[o_arc]) > 0 else -1
    return params.a ** (-sign)


def _remove_kinks(t, coeff, params):
    """Greedily remove kinks (arcs joining adjacent slots of a crossing)."""
    changed = True
    while changed:
        changed = False
        for cid in sorted(t.over):
            for k in range(4):
                if t.arcs.get((cid, k)) == (cid, (k + 1) % 4):
                    coeff = coeff * _kink_factor(params, t.over[cid], k)
                    t = t.without_crossing(cid, [(0, 2), (1, 3)])
                    changed = True
                    break
            if changed:
                break
    return t, coeff


def _sweep(t):
    """Walk all strands in canonical order.

    Returns (violation, writhe, boundary_pairs, closed_count) where
    violation is a crossing id first met on its under-pass (or None),
    writhe is the total self-crossing writhe, and boundary_pairs lists
    the endpoint pairs of open strands.
    """
    arcs = t.arcs
    over = t.over
    # open strands: discover endpoints
    strands = []
    seen_b = set()
    for i in range(1, t.n_bottom + 1):
        start = ("b", i)
        if start in seen_b:
            continue
        port = arcs[start]
        while port[0] != "b":
            cid, s = port
            port = arcs[(cid, (s + 2) % 4)]
        seen_b.add(start)
        seen_b.add(port)
        j = port[1]
        strands.append((max(i, j), min(i, j)))
    strands.sort(key=lambda e: -e[0])

    first = {}
    passes_seen = set()
    writhe = 0
    boundary_pairs = []
    strand_id = 0

    def walk(entry, sid):
        """Walk from `entry` (an arrival port) until a boundary port or a
        return to the initial pass."""
        nonlocal writhe
        port = entry
        start_pass = None
        while True:
            if port[0] == "b":
                return ("end", port)
            cid, s = port
            diag = s % 2
            if start_pass is None:
                start_pass = (cid, diag)
            elif (cid, diag) == start_pass:
                return ("loop", None)
            passes_seen.add((cid, diag))
            if cid not in first:
                if diag != over[cid]:
                    return ("violation", cid)
                first[cid] = (sid, s)
            else:
                sid0, s0 = first[cid]
                if sid0 == sid and s0 % 2 != diag:
                    u_entry = s0 if s0 % 2 != over[cid] else s
                    o_entry = s if u_entry == s0 else s0
                    writhe += 1 if _cross2(_POS[u_entry], _POS[o_entry]) > 0 else -1
            port = arcs[(cid, (s + 2) % 4)]

    for mx, mn in strands:
        kind, res = walk(arcs[("b", mn)], strand_id)
        if kind == "violation":
            return res, 0, [], 0
        boundary_pairs.append((mn, mx))
        strand_id += 1

    closed = 0
    while True:
        remaining = [
            (cid, d) for cid in sorted(over) for d in (0, 1)
            if (cid, d) not in passes_seen
        ]
        if not remaining:
            break
        cid, diag = remaining[0]
        kind, res = walk((cid, diag), strand_id)
        if kind == "violation":
            return res, 0, [], 0
        if kind != "loop":
            raise AssertionError("closed walk ended on boundary")
        closed += 1
        strand_id += 1

    return None, writhe, boundary_pairs, closed


def reduce_tangle(t, params):
    """Skein-reduce a fully capped diagram to {Matching: Scalar}."""
    eps = params.epsilon
    out = {}
    stack = [(t, SC_ONE)]
    while stack:
        d, coeff = stack.pop()
        if d.nloops:
            coeff = coeff * params.tau**d.nloops
            d = Tangle(d.n_bottom, d.over, d.arcs, 0)
        d, coeff = _remove_kinks(d, coeff, params)
        if d.nloops:
            coeff = coeff * params.tau**d.nloops
            d = Tangle(d.n_bottom, d.over, d.arcs, 0)
        violation, writhe, pairs, closed = _sweep(d)
        if violation is None:
            value = coeff * params.a ** (-writhe) * params.tau**closed
            key = Matching(pairs)
            cur = out.get(key)
            total = value if cur is None else cur + value
            if total:
                out[key] = total
            elif key in out:
                del out[key]
            continue
        cid = violation
        sgn = 1 if d.over[cid] == 1 else -1
        stack.append((d.switched(cid), coeff))
        if eps:
            stack.append((d.without_crossing(cid, [(0, 3), (1, 2)]), coeff * (sgn * eps)))
            stack.append((d.without_crossing(cid, [(0, 1), (2, 3)]), coeff * (-sgn * eps)))
    return out


# -- diagram constructors


def state_tangle(matching, word=None):
    """Capped diagram of a basis state: the reduced word's bricks with
    the top arches closed off.  Evaluates to tau^(n/2) times the unit
    vector at `matching`."""
    from .matchings import matching_to_word

    n = matching.n
    b = TangleBuilder(n)
    if word is None:
        word = matching_to_word(matching)
    for lt in word.letters():
        b.letter(lt)
    for _ in range(n // 2):
        b.cap(1)
    return b.finish()


def letters_then_state(letters, matching):
    """Diagram of (product of letters) applied to a basis state."""
    from .matchings import matching_to_word

    n = matching.n
    b = TangleBuilder(n)
    for lt in letters:
        b.letter(lt)
    for lt in matching_to_word(matching).letters():
        b.letter(lt)
    for _ in range(n // 2):
        b.cap(1)
    return b.finish()


def closure_tangle(n, letters):
    """Annular closure of a word on n strands, as a rainbow-closed
    rectangle diagram."""
    b = TangleBuilder(0)
    for k in range(1, n + 1):
        b.cup(k)
    for lt in letters:
        b.letter(lt)
    for k in range(n, 0, -1):
        b.cap(k)
    return b.finish()


def closure_value(params, n, letters):
    """Scalar value of the closed diagram (loop factor tau, no trace
    normalization)."""
    out = reduce_tangle(closure_tangle(n, letters), params)
    if not out:
        return Scalar.from_int(0)
    (key, value), = out.items()
    if key.pairs != ():
        raise AssertionError("closure did not reduce to the empty diagram")
    return value


def markov_trace(params, n, letters):
    """Markov trace of a word on n strands, normalized so tr(1) = 1."""
    return closure_value(params, n, letters) * params.tau ** (-n)
