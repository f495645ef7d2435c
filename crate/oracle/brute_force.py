"""Brute-force reference values for the finite presets.

Everything is recomputed from the defining relations over GF(181), a prime
that is 1 mod 12 and larger than every dimension involved, so the roots of
unity the presets use exist and the trace-form radical test is valid.
No code is shared with the Rust crates.

    python3 oracle/brute_force.py > crates/core/tests/data/oracle.json
"""

import itertools
import json
import sys

import numpy as np

P = 181


def root_of_unity(n):
    """A primitive n-th root of unity in GF(P)."""
    for a in range(2, P):
        if pow(a, n, P) == 1 and all(pow(a, n // q, P) != 1 for q in range(2, n + 1) if n % q == 0 and is_prime(q)):
            return a
    raise ValueError(n)


def is_prime(q):
    return q > 1 and all(q % d for d in range(2, int(q**0.5) + 1))


def inv(a):
    return pow(int(a) % P, P - 2, P)


# ---------------------------------------------------------------- linear algebra


def rref(m):
    """Row echelon form mod P; returns (rows, pivots)."""
    m = np.array(m, dtype=np.int64) % P
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * inv(m[r, c])) % P
        others = np.nonzero(m[:, c])[0]
        for o in others:
            if o != r:
                m[o] = (m[o] - m[o, c] * m[r]) % P
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(m):
    if len(m) == 0:
        return 0
    return len(rref(m)[1])


def nullspace(m):
    """Basis (as rows) of {v : m v = 0}."""
    m = np.array(m, dtype=np.int64) % P
    cols = m.shape[1]
    red, pivots = rref(m) if m.shape[0] else (np.zeros((0, cols), dtype=np.int64), [])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % P
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), cols)


def span(vectors, n):
    vectors = [np.asarray(v) % P for v in vectors]
    if not vectors:
        return np.zeros((0, n), dtype=np.int64)
    return rref(np.array(vectors))[0]


def matrix_order(m, cap=1000):
    ident = np.eye(len(m), dtype=np.int64)
    power = ident.copy()
    for k in range(1, cap + 1):
        power = (power @ m) % P
        if np.array_equal(power, ident):
            return k
    return None


# ---------------------------------------------------------------- Hopf algebras


class Hopf:
    """mul[i, j] is the coordinate vector of e_i e_j; comul[i] is the n x n
    coefficient matrix of Δ(e_i); antipode[:, i] is S(e_i)."""

    def __init__(self, mul, unit, comul, counit, antipode=None):
        self.mul = np.asarray(mul, dtype=np.int64) % P
        self.unit = np.asarray(unit, dtype=np.int64) % P
        self.comul = np.asarray(comul, dtype=np.int64) % P
        self.counit = np.asarray(counit, dtype=np.int64) % P
        self.n = len(self.unit)
        self.antipode = self.solve_antipode() if antipode is None else np.asarray(antipode) % P

    def product(self, a, b):
        return np.einsum("i,j,ijk->k", a, b, self.mul, optimize=True) % P

    def left(self, i):
        """Matrix of v ↦ e_i v."""
        return self.mul[i].T % P

    def right(self, i):
        return self.mul[:, i, :].T % P

    def solve_antipode(self):
        # Σ S(a_j) b_k c_jk = ε(e_i) 1, unknown S as n x n.
        n = self.n
        rows, rhs = [], []
        for i in range(n):
            for t in range(n):
                row = np.zeros(n * n, dtype=np.int64)
                for j in range(n):
                    for k in range(n):
                        c = self.comul[i, j, k]
                        if c:
                            # S(e_j) e_k at t: Σ_s S[s, j] mul[s, k, t]
                            row[np.arange(n) * n + j] += c * self.mul[:, k, t]
                rows.append(row % P)
                rhs.append(self.counit[i] * self.unit[t] % P)
        a = np.column_stack([np.array(rows), np.array(rhs)])
        red, pivots = rref(a)
        assert n * n not in pivots, "no antipode"
        assert len(pivots) == n * n, "antipode not unique"
        s = np.zeros(n * n, dtype=np.int64)
        for row, pc in zip(red, pivots):
            s[pc] = row[-1]
        return s.reshape(n, n)

    def tensor(self, other):
        n, m = self.n, other.n
        mul = np.einsum("ijk,abc->iajbkc", self.mul, other.mul).reshape(n * m, n * m, n * m)
        comul = np.einsum("ijk,abc->iajbkc", self.comul, other.comul).reshape(n * m, n * m, n * m)
        return Hopf(mul, np.kron(self.unit, other.unit), comul, np.kron(self.counit, other.counit),
                    np.kron(self.antipode, other.antipode))

    # axioms, checked in full
    def axioms(self):
        n = self.n
        e = np.eye(n, dtype=np.int64)
        ok = {}
        ok["associativity"] = np.array_equal(
            np.einsum("ijk,klm->ijlm", self.mul, self.mul, optimize=True) % P, np.einsum("jlk,ikm->ijlm", self.mul, self.mul, optimize=True) % P)
        ok["unit"] = all(np.array_equal(self.product(self.unit, e[i]), e[i]) and
                         np.array_equal(self.product(e[i], self.unit), e[i]) for i in range(n))
        ok["coassociativity"] = np.array_equal(
            np.einsum("ijk,jab->iabk", self.comul, self.comul, optimize=True) % P, np.einsum("ijk,kab->ijab", self.comul, self.comul, optimize=True) % P)
        ok["counit"] = np.array_equal(np.einsum("ijk,j->ik", self.comul, self.counit, optimize=True) % P, e) and np.array_equal(
            np.einsum("ijk,k->ij", self.comul, self.counit, optimize=True) % P, e)
        ok["counit multiplicative"] = np.array_equal(
            np.einsum("ijk,k->ij", self.mul, self.counit, optimize=True) % P, np.outer(self.counit, self.counit) % P)
        lhs = np.einsum("ijk,kab->ijab", self.mul, self.comul, optimize=True) % P
        rhs = np.einsum("iab,jcd,ack,bdl->ijkl", self.comul, self.comul, self.mul, self.mul, optimize=True) % P
        ok["coproduct multiplicative"] = np.array_equal(lhs, rhs)
        s = self.antipode
        anti_l = np.einsum("ijk,aj,akt->it", self.comul, s, self.mul, optimize=True) % P
        anti_r = np.einsum("ijk,bk,jbt->it", self.comul, s, self.mul, optimize=True) % P
        expected = np.outer(self.counit, self.unit) % P
        ok["antipode axiom"] = np.array_equal(anti_l, expected) and np.array_equal(anti_r, expected)
        return ok

    # invariants
    def integral_spaces(self):
        n = self.n
        left = nullspace(np.vstack([(self.left(i) - self.counit[i] * np.eye(n, dtype=np.int64)) for i in range(n)]))
        right = nullspace(np.vstack([(self.right(i) - self.counit[i] * np.eye(n, dtype=np.int64)) for i in range(n)]))
        return left, right

    def acting_character(self, t, act):
        pivot = int(np.nonzero(t)[0][0])
        values = []
        for i in range(self.n):
            image = act(i) @ t % P
            c = image[pivot] * inv(t[pivot]) % P
            assert np.array_equal(image, c * t % P)
            values.append(int(c))
        return np.array(values, dtype=np.int64)

    def convolve(self, f, g):
        return np.einsum("ijk,j,k->i", self.comul, f, g, optimize=True) % P

    def character_order(self, chi, cap=1000):
        power = chi.copy()
        for k in range(1, cap + 1):
            if np.array_equal(power, self.counit):
                return k
            power = self.convolve(power, chi)
        return None

    def winding(self, pi):
        """Matrix of h ↦ Σ h₁ π(h₂)."""
        return np.einsum("ijk,k->ji", self.comul, pi, optimize=True) % P

    def radical(self):
        n = self.n
        assert P > n
        ls = np.array([self.left(i) for i in range(n)])
        # Dickson: the radical is the kernel of (a, b) ↦ trace(L_a L_b).
        form = np.einsum("iab,jba->ij", ls, ls, optimize=True) % P
        return nullspace(form)

    def ideal(self, gens):
        n = self.n
        current = span(gens, n)
        while True:
            more = list(current)
            for v in current:
                for i in range(n):
                    more.append(self.left(i) @ v % P)
                    more.append(self.right(i) @ v % P)
            new = span(more, n)
            if len(new) == len(current):
                return current
            current = new

    def commutative(self):
        return np.array_equal(self.mul, self.mul.transpose(1, 0, 2))

    def cocommutative(self):
        return np.array_equal(self.comul, self.comul.transpose(0, 2, 1))

    def report(self, cap=1000, axioms=True):
        n = self.n
        left, right = self.integral_spaces()
        out = {"dim": n, "left_integral_dim": len(left), "right_integral_dim": len(right)}
        if axioms:
            out["axioms"] = all(self.axioms().values())
        t_l, t_r = left[0], right[0]
        sigma = self.acting_character(t_r, self.left)
        alpha = self.acting_character(t_l, self.right)
        out["unimodular"] = bool(np.array_equal(sigma, self.counit))
        out["alpha_left_is_sigma_right_after_antipode"] = bool(np.array_equal(alpha, self.antipode.T @ sigma % P))
        io = self.character_order(sigma, cap)
        out["io"] = io
        out["winding_order"] = matrix_order(self.winding(sigma), cap)
        out["epsilon_of_integral_zero"] = int(self.counit @ t_l % P) == 0
        out["radical_dim"] = len(self.radical())
        out["antipode_order"] = matrix_order(self.antipode, cap)
        commutators = [self.mul[i, j] - self.mul[j, i] for i in range(n) for j in range(n)]
        out["ab_dim"] = n - len(self.ideal(commutators))
        powers = [self.counit]
        for _ in range(io - 1):
            powers.append(self.convolve(powers[-1], sigma))
        out["iq_dim"] = rank(np.array(powers))
        # Coinvariants for H → H_iq: H_iq is dual to the span of the powers.
        stacked = np.vstack([self.winding(c) - np.eye(n, dtype=np.int64) for c in powers])
        coinv = nullspace(stacked)
        out["coinvariants_dim"] = len(coinv)
        out["coinvariants_commutative"] = all(
            np.array_equal(self.product(a, b), self.product(b, a)) for a in coinv for b in coinv)
        out["commutative"] = bool(self.commutative())
        out["cocommutative"] = bool(self.cocommutative())
        return out


# ---------------------------------------------------------------- presets


def group_algebra(table):
    n = len(table)
    mul = np.zeros((n, n, n), dtype=np.int64)
    comul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        comul[i, i, i] = 1
        for j in range(n):
            mul[i, j, table[i][j]] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[[r for r in range(n) if table[r] == list(range(n))][0]] = 1
    return Hopf(mul, unit, comul, np.ones(n, dtype=np.int64))


def cyclic(n):
    return group_algebra([[(i + j) % n for j in range(n)] for i in range(n)])


def klein():
    return group_algebra([[i ^ j for j in range(4)] for i in range(4)])


def s3():
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    return group_algebra([[index[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms])


def taft(n, q, t=1, depth=None, algebra_only=False):
    """k<g,x>/(g^n - 1, xg - q gx, x^depth), basis g^a x^b at index a*depth + b,
    Δ(g) = g⊗g, Δ(x) = x⊗1 + g^t⊗x. Truncations only get the algebra."""
    depth = n if depth is None else depth
    dim = n * depth
    idx = lambda a, b: (a % n) * depth + b
    mul = np.zeros((dim, dim, dim), dtype=np.int64)
    for a, b, c, d in itertools.product(range(n), range(depth), range(n), range(depth)):
        if b + d < depth:
            mul[idx(a, b), idx(c, d), idx(a + c, b + d)] = pow(q, b * c, P)
    unit = np.zeros(dim, dtype=np.int64)
    unit[0] = 1
    if algebra_only:
        return mul, unit
    # Δ on generators, extended multiplicatively inside H⊗H.
    def tmul(u, v):
        return np.einsum("ab,cd,ack,bdl->kl", u, v, mul, mul, optimize=True) % P
    g = np.zeros((dim, dim), dtype=np.int64)
    g[idx(1, 0), idx(1, 0)] = 1
    x = np.zeros((dim, dim), dtype=np.int64)
    x[idx(0, 1), idx(0, 0)] = 1
    x[idx(t, 0), idx(0, 1)] = 1
    one = np.zeros((dim, dim), dtype=np.int64)
    one[0, 0] = 1
    comul = np.zeros((dim, dim, dim), dtype=np.int64)
    for a in range(n):
        ga = one
        for _ in range(a):
            ga = tmul(ga, g)
        term = ga
        for b in range(n):
            comul[idx(a, b)] = term
            term = tmul(term, x)
    counit = np.zeros(dim, dtype=np.int64)
    for a in range(n):
        counit[idx(a, 0)] = 1
    return Hopf(mul, unit, comul, counit)


def circle(xi=1):
    """k[x,y]/(x² + ξy² − 1, xy), basis 1, x, y, y²."""
    # y³ = y/ξ, x² = 1 − ξy².
    mul = np.zeros((4, 4, 4), dtype=np.int64)
    for i in range(4):
        mul[0, i, i] = mul[i, 0, i] = 1
    xi_inv = inv(xi)
    mul[1, 1, 0] = 1
    mul[1, 1, 3] = -xi
    mul[2, 2, 3] = 1
    mul[2, 3, 2] = mul[3, 2, 2] = xi_inv
    mul[3, 3, 3] = xi_inv
    comul = np.zeros((4, 4, 4), dtype=np.int64)
    comul[0, 0, 0] = 1
    comul[1, 1, 1] = 1
    comul[1, 2, 2] = -xi
    comul[2, 1, 2] = comul[2, 2, 1] = 1
    # Δ(y²) = Δ(y)² computed by hand: x²⊗y² + y²⊗x² + 2xy⊗xy = (1−ξy²)⊗y² + y²⊗(1−ξy²)
    comul[3, 0, 3] = comul[3, 3, 0] = 1
    comul[3, 3, 3] = -2 * xi
    return Hopf(mul, [1, 0, 0, 0], comul, [1, 1, 0, 0])


def circle_characters(xi=1):
    """All algebra maps k[x,y]/(x² + ξy² − 1, xy) → GF(P), with their
    orders under convolution."""
    chars = [(a, b) for a in range(P) for b in range(P)
             if (a * a + xi * b * b - 1) % P == 0 and a * b % P == 0]

    def conv(u, v):
        # Δ(x) = x⊗x − ξ y⊗y, Δ(y) = x⊗y + y⊗x
        return ((u[0] * v[0] - xi * u[1] * v[1]) % P, (u[0] * v[1] + u[1] * v[0]) % P)

    def order(c):
        power, k = c, 1
        while power != (1, 0):
            power, k = conv(power, c), k + 1
        return k

    orders = sorted(order(c) for c in chars)
    return {"count": len(chars), "orders": orders, "exponent": max(orders)}


def truncation(n, q, s):
    """Taft-type truncation H/(x^s) with the windings by the clique
    characters g ↦ q^{-k}, x ↦ 0, which act as g^a x^b ↦ q^{-ka} g^a x^b."""
    mul, unit = taft(n, q, depth=s, algebra_only=True)
    dim = n * s
    alg = Hopf.__new__(Hopf)
    alg.mul, alg.unit, alg.n = mul % P, unit, dim
    rad = alg.radical()
    powers = [span(np.eye(dim, dtype=np.int64), dim), rad]
    while len(powers[-1]):
        nxt = span([alg.product(a, b) for a in powers[-1] for b in rad], dim)
        powers.append(nxt)
    layers = [len(powers[k]) - len(powers[k + 1]) for k in range(len(powers) - 1)]
    windings = []
    for k in range(n):
        w = np.zeros((dim, dim), dtype=np.int64)
        for a in range(n):
            for b in range(s):
                w[a * s + b, a * s + b] = pow(inv(q), k * a, P)
        windings.append(w)
    fixed = nullspace(np.vstack([w - np.eye(dim, dtype=np.int64) for w in windings]))
    labels = ["1" if b == 0 else ("x" if b == 1 else f"x^{b}") for b in range(s)]
    fixed_labels = [labels[int(np.nonzero(v)[0][0])] for v in fixed if np.count_nonzero(v) == 1]
    return {
        "dim": dim,
        "radical_layers": layers,
        "fixed_dim": len(fixed),
        "fixed_basis": fixed_labels,
        "fixed_commutative": all(np.array_equal(alg.product(a, b), alg.product(b, a)) for a in fixed for b in fixed),
    }


def main():
    z3, z4 = root_of_unity(3), root_of_unity(4)
    z5 = root_of_unity(5)
    sweedler = taft(2, P - 1)
    taft3 = taft(3, z3)
    cases = {
        "trivial": cyclic(1),
        "cyclic(n=2)": cyclic(2),
        "cyclic(n=3)": cyclic(3),
        "cyclic(n=4)": cyclic(4),
        "cyclic(n=6)": cyclic(6),
        "klein_four": klein(),
        "group_algebra(group=s3)": s3(),
        "sweedler": sweedler,
        "taft_finite(n=3)": taft3,
        "taft_finite(n=4)": taft(4, z4),
        "taft_finite(n=4,m=3)": taft(4, pow(z4, 3, P)),
        "taft_finite(n=5)": taft(5, z5),
        "circle_hopf": circle(1),
        "circle_xi(xi=2)": circle(2),
    }
    tensors = {
        "sweedler*sweedler": (sweedler, sweedler),
        "taft_finite(n=3)*sweedler": (taft3, sweedler),
        "taft_finite(n=3)*taft_finite(n=3)": (taft3, taft3),
        "sweedler*klein_four": (sweedler, klein()),
        "cyclic(n=3)*sweedler": (cyclic(3), sweedler),
    }
    out = {"field": f"GF({P})", "finite": {}, "tensor": {}, "truncation": {}, "circle_characters": {}}
    for name, h in cases.items():
        out["finite"][name] = h.report()
        print(name, file=sys.stderr)
    for name, (a, b) in tensors.items():
        out["tensor"][name] = a.tensor(b).report(axioms=False)
        print(name, file=sys.stderr)
    for s in range(1, 5):
        out["truncation"][f"taft_family(n=3) s={s}"] = truncation(3, z3, s)
    out["circle_characters"]["xi=1"] = circle_characters(1)
    out["circle_characters"]["xi=2"] = circle_characters(2)
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    print()


if __name__ == "__main__":
    main()
