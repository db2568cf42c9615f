"""Matrices of the algebra acting on the matching basis.

Columns are computed by composing a generator brick below each basis
tangle and skein-reducing; (g h) v = M(g) (M(h) v).
"""

from __future__ import annotations

from .matchings import Matching, all_matchings, matching_to_word, split_state
from .scalars import SC_ONE, SC_ZERO, Scalar
from .tangles import letters_then_state, reduce_tangle


class OpMatrix:
    __slots__ = ("n", "label", "basis", "entries")

    def __init__(self, n, label, basis, entries):
        self.n = n
        self.label = label
        self.basis = tuple(basis)
        self.entries = tuple(tuple(row) for row in entries)

    @staticmethod
    def identity(n, basis):
        d = len(basis)
        return OpMatrix(
            n, "1", basis,
            [[SC_ONE if i == j else SC_ZERO for j in range(d)] for i in range(d)],
        )

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, OpMatrix) and self.entries == other.entries

    def __matmul__(self, other):
        d = self.dim
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = SC_ZERO
                for k in range(d):
                    x = self.entries[i][k]
                    y = other.entries[k][j]
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            rows.append(row)
        return OpMatrix(self.n, f"{self.label}*{other.label}", self.basis, rows)

    def __add__(self, other):
        return OpMatrix(
            self.n, self.label, self.basis,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other):
        return OpMatrix(
            self.n, self.label, self.basis,
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def scale(self, c):
        return OpMatrix(
            self.n, self.label, self.basis,
            [[c * x for x in row] for row in self.entries],
        )

    def is_zero(self):
        return all(not x for row in self.entries for x in row)

    def apply(self, vec):
        """Apply to a vector {Matching: Scalar}."""
        index = {m: j for j, m in enumerate(self.basis)}
        out = {}
        for m, c in vec.items():
            j = index[m]
            for i, b in enumerate(self.basis):
                x = self.entries[i][j]
                if x:
                    cur = out.get(b)
                    total = c * x if cur is None else cur + c * x
                    if total:
                        out[b] = total
                    elif b in out:
                        del out[b]
        return out

    def map_scalars(self, fn, label=None):
        return OpMatrix(
            self.n, label or self.label, self.basis,
            [[fn(x) for x in row] for row in self.entries],
        )

    def column(self, j):
        return [self.entries[i][j] for i in range(self.dim)]

    def row(self, i):
        return list(self.entries[i])

    def to_json_dict(self, names=("q", "p")):
        return {
            "n": self.n,
            "generator": self.label,
            "basis": [[list(pair) for pair in m.pairs] for m in self.basis],
            "entries": [[x.to_str(names) for x in row] for row in self.entries],
        }


def _letters(kind, i):
    if kind == "e":
        return [("e", i)]
    if kind == "t":
        return [("t", i, 1)]
    if kind == "tinv":
        return [("t", i, -1)]
    raise ValueError(f"unknown generator kind {kind!r}")


def generator_matrix(params, n, kind, i):
    """Matrix of e_i, t_i or t_i^{-1} on the matching basis."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    basis = all_matchings(n)
    norm = params.tau ** (n // 2)
    cols = []
    for m in basis:
        out = reduce_tangle(letters_then_state(_letters(kind, i), m), params)
        cols.append([out.get(b, SC_ZERO) / norm for b in basis])
    label = {"e": f"e{i}", "t": f"t{i}", "tinv": f"t{i}^-1"}[kind]
    entries = [[cols[j][i_] for j in range(len(basis))] for i_ in range(len(basis))]
    return OpMatrix(n, label, basis, entries)


class GeneratorSet:
    """All generator matrices for one n, computed once."""

    def __init__(self, params, n):
        self.params = params
        self.n = n
        self.basis = all_matchings(n)
        self.e = {i: generator_matrix(params, n, "e", i) for i in range(1, n)}
        self.t = {i: generator_matrix(params, n, "t", i) for i in range(1, n)}
        self.tinv = {i: generator_matrix(params, n, "tinv", i) for i in range(1, n)}

    def identity(self):
        return OpMatrix.identity(self.n, self.basis)


def sigma_matrix(params, n, gens=None):
    """Cyclic index-shift operator a * t_{n-1}^{-1} ... t_1^{-1}."""
    if gens is None:
        gens = GeneratorSet(params, n)
    m = gens.tinv[n - 1]
    for i in range(n - 2, 0, -1):
        m = m @ gens.tinv[i]
    m = m.scale(params.a)
    return OpMatrix(n, "sigma", gens.basis, m.entries)


def relation_suite(params, n, gens=None, a=None, epsilon=None, invert_t=False):
    """Check every defining relation as an exact matrix identity.

    With invert_t=True the substitution t -> t^{-1}, a -> a^{-1},
    epsilon -> -epsilon is applied first (the algebra isomorphism).
    Returns [(name, ok)].
    """
    if gens is None:
        gens = GeneratorSet(params, n)
    if a is None:
        a = params.a
    if epsilon is None:
        epsilon = params.epsilon
    tau = params.tau
    t = dict(gens.tinv) if invert_t else dict(gens.t)
    tinv = dict(gens.t) if invert_t else dict(gens.tinv)
    if invert_t:
        a = a.inverse()
        epsilon = -epsilon
    e = gens.e
    one = gens.identity()
    checks = []
    rng = range(1, n)
    for i in rng:
        checks.append((f"t{i}*t{i}^-1 = 1", (t[i] @ tinv[i]) == one))
        checks.append((f"e{i}^2 = tau e{i}", (e[i] @ e[i]) == e[i].scale(tau)))
        checks.append(
            (
                f"t{i} - t{i}^-1 = eps(1 - e{i})",
                (t[i] - tinv[i]) == (one - e[i]).scale(epsilon),
            )
        )
        checks.append((f"e{i}t{i} = a e{i}", (e[i] @ t[i]) == e[i].scale(a)))
        checks.append((f"t{i}e{i} = a e{i}", (t[i] @ e[i]) == e[i].scale(a)))
    for i in rng:
        for j in rng:
            if abs(i - j) == 1:
                checks.append(
                    (
                        f"e{i}t{j}e{i} = a^-1 e{i}",
                        (e[i] @ t[j] @ e[i]) == e[i].scale(a.inverse()),
                    )
                )
                checks.append((f"e{i}e{j}e{i} = e{i}", (e[i] @ e[j] @ e[i]) == e[i]))
                checks.append(
                    (
                        f"t{j}t{i}e{j} = e{i}t{j}t{i} = e{i}e{j}",
                        (t[j] @ t[i] @ e[j]) == (e[i] @ e[j])
                        and (e[i] @ t[j] @ t[i]) == (e[i] @ e[j]),
                    )
                )
            elif abs(i - j) >= 2 and i < j:
                checks.append((f"t{i}t{j} = t{j}t{i}", (t[i] @ t[j]) == (t[j] @ t[i])))
                checks.append((f"e{i}e{j} = e{j}e{i}", (e[i] @ e[j]) == (e[j] @ e[i])))
    for i in rng[:-1]:
        checks.append(
            (
                f"t{i}t{i+1}t{i} = t{i+1}t{i}t{i+1}",
                (t[i] @ t[i + 1] @ t[i]) == (t[i + 1] @ t[i] @ t[i + 1]),
            )
        )
    return checks


def role_classes(n, i):
    """Partition of the basis at position i.

    pi0: chord (i, i+1) present.  pi2: the braid brick at i purely
    creates the canonical crossing (its image class is pi1); this is the
    uncrossed same-side and crossed opposite-side configurations.
    """
    pi0, pi1, pi2 = [], [], []
    for m in all_matchings(n):
        if m.connected(i, i + 1):
            pi0.append(m)
            continue
        u, w = m.partner(i), m.partner(i + 1)
        same_side = (u < i and w < i) or (u > i + 1 and w > i + 1)
        if m.crossed_at(i) != same_side:
            pi2.append(m)
        else:
            pi1.append(m)
    return pi0, pi1, pi2


def block_structure_check(params, n, gens=None):
    """Verify the block pattern of e_i and t_i for all i.

    In the ordering (pi0, pi1, pi2) with pi1 = t_i pi2:
      e_i = [[tau, a v, v], [0]*2, [0]*2],
      t_i = [[a, -a eps v, 0], [0, eps, 1], [0, 1, 0]],
    with one shared block v supported on pi0.
    Returns [(name, ok)].
    """
    if gens is None:
        gens = GeneratorSet(params, n)
    basis = gens.basis
    index = {m: j for j, m in enumerate(basis)}
    a, eps, tau = params.a, params.epsilon, params.tau
    checks = []
    for i in range(1, n):
        pi0, pi1, pi2 = role_classes(n, i)
        te, tt, ti = gens.e[i], gens.t[i], gens.tinv[i]
        ok = True
        tmap = {}
        for m2 in pi2:
            m1 = m2.swap_at(i)
            ok &= m1 in pi1
            tmap[m2] = m1
            j2, j1 = index[m2], index[m1]
            # t_i column on pi2 is the unit vector at t_i pi2
            ok &= all(
                tt.entries[r][j2] == (SC_ONE if r == j1 else SC_ZERO)
                for r in range(len(basis))
            )
            # t_i^-1 column on pi1 is the unit vector at pi2
            ok &= all(
                ti.entries[r][j1] == (SC_ONE if r == j2 else SC_ZERO)
                for r in range(len(basis))
            )
            # v column: e_i pi2 supported on pi0
            vcol = te.column(j2)
            ok &= all(
                not vcol[r] or basis[r] in pi0 for r in range(len(basis))
            )
            # e_i pi1 = a * v, t_i pi1 = pi2 + eps pi1 - a eps v
            for r in range(len(basis)):
                ok &= te.entries[r][j1] == a * vcol[r]
                expect = -a * eps * vcol[r]
                if r == j2:
                    expect = expect + SC_ONE
                if r == j1:
                    expect = expect + eps
                ok &= tt.entries[r][j1] == expect
        ok &= len(tmap) == len(pi1)
        for m0 in pi0:
            j0 = index[m0]
            for r in range(len(basis)):
                want_e = tau if r == j0 else SC_ZERO
                want_t = a if r == j0 else SC_ZERO
                ok &= te.entries[r][j0] == want_e
                ok &= tt.entries[r][j0] == want_t
        # rows outside pi0 vanish in e_i
        for m in pi1 + pi2:
            r = index[m]
            ok &= all(not x for x in te.row(r))
        checks.append((f"block structure at i={i}", bool(ok)))
    return checks


def sigma_triangularity_check(params, n, gens=None):
    """sigma pi = (pi shifted) + tangles with strictly fewer crossings;
    the maximally crossed row of sigma is a unit row."""
    if gens is None:
        gens = GeneratorSet(params, n)
    sig = sigma_matrix(params, n, gens)
    basis = gens.basis
    index = {m: j for j, m in enumerate(basis)}
    checks = []
    ok = True
    for j, m in enumerate(basis):
        shifted = m.shift_cyclic()
        c = m.crossing_number()
        for r in range(len(basis)):
            x = sig.entries[r][j]
            if not x:
                continue
            if basis[r] == shifted:
                ok &= x == SC_ONE
            else:
                ok &= basis[r].crossing_number() < c
    checks.append(("sigma triangular in crossing order", bool(ok)))
    from .matchings import maximally_crossed

    rho = maximally_crossed(n)
    r = index[rho]
    row = sig.row(r)
    checks.append(
        (
            "maximally crossed row of sigma is a unit row",
            all(
                row[j] == (SC_ONE if basis[j] == rho else SC_ZERO)
                for j in range(len(basis))
            ),
        )
    )
    # sigma^-2 alpha = alpha, i.e. sigma^2 alpha = alpha
    alpha = split_state(n)
    j = index[alpha]
    sig2 = sig @ sig
    checks.append(
        (
            "sigma^2 fixes the split state",
            all(
                sig2.entries[r][j] == (SC_ONE if r == j else SC_ZERO)
                for r in range(len(basis))
            ),
        )
    )
    return checks


def star_letters(letters):
    """Word star: reverse and invert braid letters (e_i^* = e_i)."""
    out = []
    for lt in reversed(letters):
        if lt[0] == "t":
            out.append(("t", lt[1], -lt[2]))
        else:
            out.append(lt)
    return out


def scalar_product(params, w1, w2, gens=None):
    """<w1|w2> via w1^* w2 alpha = <w1|w2> alpha."""
    from .matchings import word_to_matching

    n = w1.n
    if w2.n != n:
        raise ValueError("words must have the same strand count")
    if gens is None:
        gens = GeneratorSet(params, n)
    vec = {word_to_matching(w2): SC_ONE}
    # w1^* applied to the vector: rightmost letter of w1^* acts first,
    # i.e. the starred letters of w1 act in their original order.
    for lt in w1.letters():
        if lt[0] == "t":
            mat = gens.tinv[lt[1]] if lt[2] > 0 else gens.t[lt[1]]
        else:
            mat = gens.e[lt[1]]
        vec = mat.apply(vec)
    alpha = split_state(n)
    extra = [m for m in vec if m != alpha]
    if extra:
        raise AssertionError(f"w1^* w2 not proportional to alpha: {extra}")
    return vec.get(alpha, SC_ZERO)


def module_generation_check(params, n, gens=None):
    """Applying generators repeatedly to the split state reaches every
    basis vector (computational surrogate for irreducibility)."""
    if gens is None:
        gens = GeneratorSet(params, n)
    reached = {split_state(n)}
    frontier = list(reached)
    mats = list(gens.e.values()) + list(gens.t.values()) + list(gens.tinv.values())
    while frontier:
        nxt = []
        for m in frontier:
            vec = {m: SC_ONE}
            for mat in mats:
                for b, c in mat.apply(vec).items():
                    if c and b not in reached:
                        reached.add(b)
                        nxt.append(b)
        frontier = nxt
    return len(reached) == len(gens.basis)
