"""Perfect matchings of n boundary points and their reduced words.

A matching labels a basis tangle: chords pair the points 1..n, pairs of
interleaved chords cross exactly once, and the chord with the larger
right endpoint crosses over.  No crossing data is stored.
"""

from __future__ import annotations

from functools import lru_cache


class Matching:
    """Canonical perfect matching: sorted pairs (a_i, b_i), a_i < b_i,
    a_1 < a_2 < ..."""

    __slots__ = ("pairs", "_partner")

    def __init__(self, pairs):
        norm = tuple(sorted((a, b) if a < b else (b, a) for a, b in pairs))
        points = sorted(x for pair in norm for x in pair)
        n = 2 * len(norm)
        if points != list(range(1, n + 1)):
            raise ValueError(f"not a perfect matching of 1..{n}: {norm}")
        self.pairs = norm
        partner = {}
        for a, b in norm:
            partner[a] = b
            partner[b] = a
        self._partner = partner

    @property
    def n(self):
        return 2 * len(self.pairs)

    def partner(self, i):
        return self._partner[i]

    def connected(self, i, j):
        return self._partner[i] == j

    def __eq__(self, other):
        return isinstance(other, Matching) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __lt__(self, other):
        return self.pairs < other.pairs

    def __repr__(self):
        return "Matching(%s)" % ", ".join(f"({a},{b})" for a, b in self.pairs)

    def crossing_number(self):
        count = 0
        pairs = self.pairs
        for i in range(len(pairs)):
            a1, b1 = pairs[i]
            for j in range(i + 1, len(pairs)):
                a2, b2 = pairs[j]
                if a1 < a2 < b1 < b2:
                    count += 1
        return count

    def crossed_at(self, i):
        """Do the chords at points i and i+1 cross each other?"""
        if self.connected(i, i + 1):
            return False
        return chords_cross(_chord(i, self.partner(i)), _chord(i + 1, self.partner(i + 1)))

    def swap_at(self, i):
        """Exchange the partners of points i and i+1."""
        u, w = self.partner(i), self.partner(i + 1)
        pairs = [p for p in self.pairs if i not in p and i + 1 not in p]
        pairs.append((i, w))
        pairs.append((i + 1, u))
        return Matching(pairs)

    def contract_at(self, i):
        """Rewire for a cup-cap at (i, i+1): pair i with i+1 and join the
        old partners.  Requires i, i+1 not already connected."""
        u, w = self.partner(i), self.partner(i + 1)
        pairs = [p for p in self.pairs if i not in p and i + 1 not in p]
        pairs.append((i, i + 1))
        pairs.append((u, w) if u < w else (w, u))
        return Matching(pairs)

    def shift_cyclic(self):
        """Relabel i -> i-1 cyclically (1 -> n)."""
        n = self.n
        return Matching(
            tuple((a - 1 if a > 1 else n, b - 1 if b > 1 else n) for a, b in self.pairs)
        )

    def matched_runs(self):
        """All point pairs (j, k), j < k, such that no chord of the
        matching pairs two points inside [j, k].  For such a run the dual
        polynomial is divisible by the (j, k) linear form."""
        n = self.n
        runs = []
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                if all(not (j <= a and b <= k) for a, b in self.pairs):
                    runs.append((j, k))
        return runs


def _chord(x, y):
    return (x, y) if x < y else (y, x)


def chords_cross(c1, c2):
    a1, b1 = c1
    a2, b2 = c2
    return a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1


@lru_cache(maxsize=None)
def all_matchings(n):
    """All perfect matchings of 1..n in lexicographic order of their
    sorted pair sequence; length (n-1)!!."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")

    def rec(points):
        if not points:
            return [()]
        first, rest = points[0], points[1:]
        out = []
        for idx, other in enumerate(rest):
            sub = rest[:idx] + rest[idx + 1 :]
            for tail in rec(sub):
                out.append(((first, other),) + tail)
        return out

    return tuple(Matching(pairs) for pairs in rec(tuple(range(1, n + 1))))


def maximally_crossed(n):
    """The matching (i, n/2 + i); every pair of chords crosses."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    half = n // 2
    return Matching(tuple((i, half + i) for i in range(1, half + 1)))


def split_state(n):
    """The matching (2k-1, 2k): no chords cross."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    return Matching(tuple((2 * k - 1, 2 * k) for k in range(1, n // 2 + 1)))


class ReducedWord:
    """Reduced word indexed by descents (c_3, c_5, ..., c_{n-1}) with
    1 <= c_{2p+1} <= 2p+1.  The encoded word is the product of chunks
    (t^-1_c t^-1_{c+1} ... t^-1_{2p} e_{2p+1}) for p = n/2-1 down to 1,
    followed by e_1."""

    __slots__ = ("n", "descents")

    def __init__(self, n, descents):
        if n < 2 or n % 2:
            raise ValueError("n must be even and >= 2")
        descents = tuple(descents)
        if len(descents) != n // 2 - 1:
            raise ValueError("need n/2 - 1 descents")
        for p, c in enumerate(descents, start=1):
            if not 1 <= c <= 2 * p + 1:
                raise ValueError(f"descent c_{2*p+1}={c} out of range")
        self.n = n
        self.descents = descents

    def letters(self):
        """Word letters left to right: ('t', i, -1) or ('e', i)."""
        out = []
        for p in range(self.n // 2 - 1, 0, -1):
            c = self.descents[p - 1]
            for i in range(c, 2 * p + 1):
                out.append(("t", i, -1))
            out.append(("e", 2 * p + 1))
        out.append(("e", 1))
        return out

    def __repr__(self):
        return f"ReducedWord(n={self.n}, descents={self.descents})"


def word_to_matching(word):
    """Tangle of a reduced word: insert the strand (c_{2p+1}, 2p+2) after
    shifting endpoints >= c_{2p+1} of the smaller tangle right by one."""
    pairs = [(1, 2)]
    for p, c in enumerate(word.descents, start=1):
        shifted = [(a + (a >= c), b + (b >= c)) for a, b in pairs]
        shifted.append((c, 2 * p + 2))
        pairs = shifted
    return Matching(pairs)


def matching_to_word(m):
    """Inverse of word_to_matching."""
    pairs = list(m.pairs)
    descents = []
    for top in range(m.n, 2, -2):
        (c, _), = [p for p in pairs if p[1] == top]
        descents.append(c)
        pairs = [
            (a - (a > c), b - (b > c)) for a, b in pairs if b != top
        ]
    descents.reverse()
    return ReducedWord(m.n, descents)
