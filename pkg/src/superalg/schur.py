"""Generalized Schur superalgebras S(n,d) and T(n,d) over the Brauer tree
algebra, their permutation modules, tensor space, and generation checks.

The xi basis element attached to an orbit representative is realized as the
full signed orbit sum inside M_n(A)^{@d}; all signs come from the signed
place-permutation action, never from an external sign formula.  Products
are computed in the sparse ambient algebra and recompressed by reading
coefficients at orbit representatives (signs are integers throughout).
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import combin as cb
from .brauer import basis_at_target, brauer_algebra, target_vertex
from .rings import QQ, PLocalIntegers, Span
from .superalgebra import BasedSuperalgebra, place_action_sign


AMBIENT_GUARD = 10 ** 7


class SchurAlgebra:
    """S^{A_ell}(n,d) with integer structure constants on the xi basis."""

    def __init__(self, n, d, ell):
        self.n, self.d, self.ell = n, d, ell
        self.alg = brauer_algebra(ell)
        ambient = (n * n * self.alg.rank) ** d
        if ambient > AMBIENT_GUARD:
            raise ValueError(f"ambient rank {ambient} exceeds guard {AMBIENT_GUARD}")
        self.triples = [(b, r, s) for b in range(self.alg.rank)
                        for r in range(1, n + 1) for s in range(1, n + 1)]
        self.reps = self._enumerate_reps()
        self.rep_index = {rep: i for i, rep in enumerate(self.reps)}
        self._orbit_cache = {}
        self._prod_cache = {}

    # -- basis ------------------------------------------------------------

    def _tri_parity(self, tri):
        return self.alg.parity(tri[0])

    def _tri_degree(self, tri):
        return self.alg.degree(tri[0])

    def _enumerate_reps(self):
        """Sorted triple-words; odd entries must be distinct."""
        reps = []

        def extend(prefix, start):
            if len(prefix) == self.d:
                reps.append(tuple(prefix))
                return
            for t in range(start, len(self.triples)):
                tri = self.triples[t]
                if prefix and prefix[-1] == tri and self._tri_parity(tri):
                    continue
                if prefix and prefix[-1] > tri:
                    continue
                extend(prefix + [tri], t)

        extend([], 0)
        return reps

    @property
    def rank(self):
        return len(self.reps)

    def degree(self, i):
        return sum(self._tri_degree(t) for t in self.reps[i])

    def parity(self, i):
        return sum(self._tri_parity(t) for t in self.reps[i]) % 2

    def bidegrees(self):
        return [(self.degree(i), self.parity(i)) for i in range(self.rank)]

    # -- orbit sums ---------------------------------------------------------

    def orbit(self, rep):
        """Signed orbit sum {monomial: +-1} with coefficient +1 at the rep."""
        if rep in self._orbit_cache:
            return self._orbit_cache[rep]
        out = {rep: 1}
        frontier = [rep]
        while frontier:
            new = []
            for mono in frontier:
                sgn = out[mono]
                for k in range(self.d - 1):
                    swapped = list(mono)
                    swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
                    swapped = tuple(swapped)
                    s = sgn * (-1) ** (self._tri_parity(mono[k])
                                       * self._tri_parity(mono[k + 1]))
                    if swapped in out:
                        if out[swapped] != s:
                            raise AssertionError(f"inconsistent orbit signs at {rep}")
                    else:
                        out[swapped] = s
                        new.append(swapped)
            frontier = new
        self._orbit_cache[rep] = out
        return out

    def _ambient_mul(self, m1, m2):
        """(integer coeff, monomial) or None for a product of ambient monomials."""
        sign = 0
        acc = 0
        for i in range(self.d):
            sign += self._tri_parity(m1[i]) * acc
            acc += self._tri_parity(m2[i])
        out = []
        for (b1, r1, s1), (b2, r2, s2) in zip(m1, m2):
            if s1 != r2:
                return None
            prod = self.alg.mul_basis(b1, b2)
            if not prod:
                return None
            (k, _), = prod.items()
            out.append((k, r1, s2))
        return (-1) ** (sign % 2), tuple(out)

    def xi_product(self, i, j):
        """xi_i xi_j = sum_k c^k xi_k with integer c; dict k -> int."""
        key = (i, j)
        if key in self._prod_cache:
            return self._prod_cache[key]
        acc = {}
        for m1, s1 in self.orbit(self.reps[i]).items():
            for m2, s2 in self.orbit(self.reps[j]).items():
                got = self._ambient_mul(m1, m2)
                if got is None:
                    continue
                c, mono = got
                acc[mono] = acc.get(mono, 0) + c * s1 * s2
        out = {}
        for rep, k in self.rep_index.items():
            c = acc.get(rep, 0)
            if c:
                out[k] = c
        self._prod_cache[key] = out
        return out

    def expand(self, x):
        """Expand an element {rep_idx: int} to the ambient {monomial: int}."""
        out = {}
        for i, c in x.items():
            for mono, s in self.orbit(self.reps[i]).items():
                v = out.get(mono, 0) + c * s
                if v:
                    out[mono] = v
                else:
                    out.pop(mono, None)
        return out

    def compress(self, ambient):
        """Inverse of expand for invariant elements (validated in tests)."""
        out = {}
        for rep, k in self.rep_index.items():
            c = ambient.get(rep, 0)
            if c:
                out[k] = c
        return out

    def multiply(self, x, y, ring=None):
        out = {}
        for i, c1 in x.items():
            for j, c2 in y.items():
                for k, c in self.xi_product(i, j).items():
                    out[k] = out.get(k, 0) + c1 * c2 * c
        out = {k: c for k, c in out.items() if c}
        if ring is not None:
            out = {k: ring.coerce(c) for k, c in out.items()
                   if not ring.is_zero(ring.coerce(c))}
        return out

    def one(self):
        out = {}
        for i, rep in enumerate(self.reps):
            if all(self.alg.labels[b][0] == "e" and r == s for (b, r, s) in rep):
                out[i] = 1
        return out

    # -- eta basis / T ---------------------------------------------------------

    def eta_factor(self, i):
        """[b,r,s]!_c: product of multiplicities! over repeated c-triples."""
        counts = {}
        for (b, r, s) in self.reps[i]:
            if self.alg.labels[b][0] == "c":
                counts[(b, r, s)] = counts.get((b, r, s), 0) + 1
        out = 1
        for m in counts.values():
            out *= factorial(m)
        return out

    def eta_product(self, i, j):
        """Structure constants on the eta basis, as exact Fractions."""
        fi, fj = self.eta_factor(i), self.eta_factor(j)
        out = {}
        for k, c in self.xi_product(i, j).items():
            out[k] = Fraction(c * fi * fj, self.eta_factor(k))
        return out

    def t_integrality_report(self, p):
        """Check every eta.eta structure constant lies in Z_(p)."""
        bad = []
        for i in range(self.rank):
            for j in range(self.rank):
                for k, c in self.eta_product(i, j).items():
                    if c.denominator % p == 0:
                        bad.append((i, j, k, c))
        return bad

    def to_based(self, ring, basis="xi"):
        """Package as a BasedSuperalgebra over `ring` on the xi or eta basis."""
        table = {}
        for i in range(self.rank):
            for j in range(self.rank):
                prod = self.xi_product(i, j) if basis == "xi" else self.eta_product(i, j)
                entry = {}
                for k, c in prod.items():
                    v = ring.coerce(c)
                    if not ring.is_zero(v):
                        entry[k] = v
                if entry:
                    table[(i, j)] = entry
        unit = {k: ring.one() for k in self.one()}
        labels = [("xi" if basis == "xi" else "eta",) + rep for rep in self.reps]
        return BasedSuperalgebra(ring, labels, self.bidegrees(), table, unit,
                                 name=f"{'S' if basis == 'xi' else 'T'}({self.n},{self.d},l={self.ell})")

    # -- distinguished elements -------------------------------------------------

    def xi_of_triple(self, bword, rword, sword):
        """+-xi at the orbit of the given (not necessarily sorted) triple word."""
        mono = tuple(zip(bword, rword, sword))
        for k in range(self.d):
            for l in range(k + 1, self.d):
                if mono[k] == mono[l] and self._tri_parity(mono[k]):
                    raise ValueError("repeated odd triple is not in Tri")
        rep = tuple(sorted(mono))
        sign = self.orbit(rep)[mono]
        return {self.rep_index[rep]: sign}

    def i_rs(self, r, s, x_label):
        """i_{r,s}(x) = sum_c 1^{@c} @ xi^x_{r,s} @ 1^{@(d-c-1)} in the xi basis."""
        xb = self.alg.index[x_label]
        unit_triples = [(self.alg.index[("e", j)], t, t)
                        for j in range(self.ell) for t in range(1, self.n + 1)]
        ambient = {}
        for pos in range(self.d):
            words = [()]
            for q in range(self.d):
                if q == pos:
                    words = [w + ((xb, r, s),) for w in words]
                else:
                    words = [w + (u,) for w in words for u in unit_triples]
            for mono in words:
                ambient[mono] = ambient.get(mono, 0) + 1
        return self.compress(ambient)

    def i_la(self, mlam, x_label):
        """i^{lambda}(x) = xi^{x e{lambda}}_{1 2^{h_1}...n^{h_{n-1}}, same}.

        mlam is an ell-multicomposition in Lambda^J(n-1, d-1); x a basis label.
        """
        xb = self.alg.index[x_label]
        eword, rword = [], []
        padded = [tuple(c) + (0,) * (self.n - 1 - len(c)) for c in mlam]
        for row in range(self.n - 1):
            for j in range(self.ell):
                count = padded[j][row]
                eword.extend([self.alg.index[("e", j)]] * count)
                rword.extend([row + 2] * count)
        bword = [xb] + eword
        rfull = [1] + rword
        return self.xi_of_triple(tuple(bword), tuple(rfull), tuple(rfull))

    def xi_la(self, mlam):
        """The idempotent xi_lambda for lambda in Lambda^J(n,d)."""
        eword, rword = [], []
        padded = [tuple(c) + (0,) * (self.n - len(c)) for c in mlam]
        for row in range(self.n):
            for j in range(self.ell):
                count = padded[j][row]
                eword.extend([self.alg.index[("e", j)]] * count)
                rword.extend([row + 1] * count)
        return self.xi_of_triple(tuple(eword), tuple(rword), tuple(rword))

    # -- ranks three ways ---------------------------------------------------------

    def invariant_rank(self, ring=QQ):
        """Rank of (M_n(A)^{@d})^{S_d} by sparse linear algebra on the ambient."""
        field = ring if ring.is_field else QQ
        span = Span(field)
        monos = [()]
        for _ in range(self.d):
            monos = [m + (t,) for m in monos for t in self.triples]
        rank_ambient = 0
        for mono in monos:
            rank_ambient += 1
            for k in range(self.d - 1):
                swapped = list(mono)
                swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
                swapped = tuple(swapped)
                sgn = (-1) ** (self._tri_parity(mono[k]) * self._tri_parity(mono[k + 1]))
                row = {mono: field.coerce(-1)}
                v = field.add(row.get(swapped, field.zero()), field.coerce(sgn))
                if field.is_zero(v):
                    row.pop(swapped, None)
                else:
                    row[swapped] = v
                if row:
                    span.add(row)
        return rank_ambient - span.rank


def degree_zero_dim_formula(n, d, ell):
    """Sum over (d_0..d_{ell-1}) of prod_j C(n^2 + d_j - 1, d_j)."""
    total = 0
    for comp in cb.compositions(ell, d):
        prod = 1
        for dj in comp:
            prod *= comb(n * n + dj - 1, dj)
        total += prod
    return total


def degree_zero_dim_count(s):
    """Independent count of degree-zero orbit representatives."""
    return sum(1 for i in range(s.rank) if s.degree(i) == 0)


# ---------------------------------------------------------------------------
# permutation modules


class PermModule:
    """Right W_d(A_ell)-supermodule M_{(lambda, colors)}.

    Basis: (bword, u) with b_k in the basis of e^[color(k)] A and u a
    minimal coset representative of S_lambda \\ S_d.
    """

    def __init__(self, lam, colors, ell, n=None):
        self.lam = tuple(lam)
        self.colors = tuple(colors)
        self.ell = ell
        self.d = sum(lam)
        self.alg = brauer_algebra(ell)
        if len(self.lam) != len(self.colors):
            raise ValueError("composition and colors must have equal length")
        self.pos_color = []
        for part, col in zip(self.lam, self.colors):
            self.pos_color.extend([col] * part)
        choices = [[self.alg.index[lab] for lab in basis_at_target(self.alg, c)]
                   for c in self.pos_color]
        bwords = [()]
        for ch in choices:
            bwords = [w + (b,) for w in bwords for b in ch]
        reps = cb.coset_reps(self.lam, self.d)
        self.basis = [(bw, u) for bw in bwords for u in reps]
        self.index = {v: i for i, v in enumerate(self.basis)}

    @property
    def rank(self):
        return len(self.basis)

    def expected_rank(self):
        """Lemma-level formula: multinomial * 4^(d-m) * 3^m, m = |lam,colors|_{ell-1}."""
        m = cb.color_weight(self.lam, self.colors, self.ell - 1)
        return cb.multinomial(self.d, self.lam) * 4 ** (self.d - m) * 3 ** m

    def bidegree(self, i):
        bw, _ = self.basis[i]
        deg = sum(self.alg.degree(b) for b in bw)
        par = sum(self.alg.parity(b) for b in bw) % 2
        return (deg, par)

    def generator(self):
        """m_{lambda, colors}: the (e-word, identity) basis vector."""
        bw = tuple(self.alg.index[("e", c)] for c in self.pos_color)
        return {(bw, cb.identity_perm(self.d)): 1}

    def _straighten(self, bword, w, coeff, out):
        g, u = cb.coset_decompose(w, self.lam)
        gi = cb.inverse(g)
        pars = [self.alg.parity(b) for b in bword]
        sgn = place_action_sign(gi, pars)
        new_b = cb.place_permute(gi, bword)
        key = (new_b, u)
        out[key] = out.get(key, 0) + coeff * (-1) ** sgn

    def act_wreath(self, vec, word, g):
        """Right action of the wreath basis element (word tensor g)."""
        out = {}
        for (bw, u), c in vec.items():
            s1 = place_action_sign(u, [self.alg.parity(y) for y in word])
            yw = cb.place_permute(u, word)
            # tensor product bw * yw with Koszul signs
            sign = 0
            acc = 0
            for i in range(self.d):
                sign += self.alg.parity(bw[i]) * acc
                acc += self.alg.parity(yw[i])
            new = []
            dead = False
            for b, y in zip(bw, yw):
                prod = self.alg.mul_basis(b, y)
                if not prod:
                    dead = True
                    break
                (k, _), = prod.items()
                new.append(k)
            if dead:
                continue
            total = c * (-1) ** ((s1 + sign) % 2)
            self._straighten(tuple(new), cb.compose(u, g), total, out)
        return {k: v for k, v in out.items() if v}

    def act_insert(self, vec, x_label, t):
        """Right action of iota_t(x): x lands in slot u(t) after commuting past u."""
        xb = self.alg.index[x_label]
        x_par = self.alg.parity(xb)
        out = {}
        for (bw, u), c in vec.items():
            pos = u[t - 1]
            prod = self.alg.mul_basis(bw[pos - 1], xb)
            if not prod:
                continue
            (k, _), = prod.items()
            new_b = bw[:pos - 1] + (k,) + bw[pos:]
            # x crosses the factors strictly right of slot pos
            right_par = sum(self.alg.parity(b) for b in bw[pos:]) % 2
            sgn = (-1) ** (x_par * right_par)
            key = (new_b, u)
            out[key] = out.get(key, 0) + c * sgn
        return {k: v for k, v in out.items() if v}

    def act_perm(self, vec, g):
        out = {}
        for (bw, u), c in vec.items():
            self._straighten(bw, cb.compose(u, g), c, out)
        return {k: v for k, v in out.items() if v}

    def check_action(self, samples=60, seed=0):
        """(v.x).y == v.(xy) for wreath generators via the regular product."""
        import random
        rng = random.Random(seed)
        gens = []
        for lab in self.alg.labels:
            for t in range(1, self.d + 1):
                gens.append(("ins", lab, t))
        for r in range(1, self.d):
            gens.append(("perm", cb.transposition(self.d, r)))
        for _ in range(samples):
            v = {self.basis[rng.randrange(self.rank)]: 1}
            g1 = gens[rng.randrange(len(gens))]
            g2 = gens[rng.randrange(len(gens))]
            lhs = self._apply(self._apply(v, g1), g2)
            rhs = self._apply_product(v, g1, g2)
            if lhs != rhs:
                raise AssertionError(f"action inconsistent for {g1}, {g2}")
        return True

    def _apply(self, v, g):
        if g[0] == "ins":
            return self.act_insert(v, g[1], g[2])
        return self.act_perm(v, g[1])

    def _apply_product(self, v, g1, g2):
        """Apply the single wreath element g1 * g2."""
        w1 = self._as_wreath(g1)
        w2 = self._as_wreath(g2)
        out = {}
        for (word1, p1), c1 in w1.items():
            for (word2, p2), c2 in w2.items():
                s1 = place_action_sign(p1, [self.alg.parity(y) for y in word2])
                yw = cb.place_permute(p1, word2)
                sign = 0
                acc = 0
                for i in range(self.d):
                    sign += self.alg.parity(word1[i]) * acc
                    acc += self.alg.parity(yw[i])
                new = []
                dead = False
                for b, y in zip(word1, yw):
                    prod = self.alg.mul_basis(b, y)
                    if not prod:
                        dead = True
                        break
                    (k, _), = prod.items()
                    new.append(k)
                if dead:
                    continue
                key = (tuple(new), cb.compose(p1, p2))
                out[key] = out.get(key, 0) + c1 * c2 * (-1) ** ((s1 + sign) % 2)
        result = {}
        for (word, p), c in out.items():
            if not c:
                continue
            cur = self.act_wreath(v, word, p)
            for k, vv in cur.items():
                result[k] = result.get(k, 0) + c * vv
        return {k: v for k, v in result.items() if v}

    def _as_wreath(self, g):
        ident = cb.identity_perm(self.d)
        if g[0] == "perm":
            out = {}
            words = [()]
            for _ in range(self.d):
                words = [w + (self.alg.index[("e", j)],) for w in words
                         for j in range(self.ell)]
            for w in words:
                out[(w, g[1])] = 1
            return out
        lab, t = g[1], g[2]
        xb = self.alg.index[lab]
        out = {}
        words = [()]
        for q in range(1, self.d + 1):
            if q == t:
                words = [w + (xb,) for w in words]
            else:
                words = [w + (self.alg.index[("e", j)],) for w in words
                         for j in range(self.ell)]
        for w in words:
            out[(w, ident)] = 1
        return out

    def hom_dim_from(self, source_lam, source_colors):
        """dim Hom_W(M_{source}, self) by Frobenius reciprocity:
        vectors fixed by e^{source} and S_{source_lam}."""
        field = QQ
        span = Span(field)
        d = self.d
        srccol = []
        for part, colr in zip(source_lam, source_colors):
            srccol.extend([colr] * part)
        for i, v in enumerate(self.basis):
            vec = {v: 1}
            # u e^{lambda,i} = u
            cur = dict(vec)
            for t in range(1, d + 1):
                cur = self.act_insert(cur, ("e", srccol[t - 1]), t)
            row = {k: field.coerce(c) for k, c in cur.items()}
            row[v] = field.add(row.get(v, field.zero()), field.coerce(-1))
            if row:
                span.add({k: c for k, c in row.items() if not field.is_zero(c)})
            for r in cb.young_subgroup_gens(source_lam, d):
                cur = self.act_perm(vec, cb.transposition(d, r))
                row = {k: field.coerce(c) for k, c in cur.items()}
                row[v] = field.add(row.get(v, field.zero()), field.coerce(-1))
                row = {k: c for k, c in row.items() if not field.is_zero(c)}
                if row:
                    span.add(row)
        return self.rank - span.rank


# ---------------------------------------------------------------------------
# tensor space


TENSOR_GUARD = 20000


class TensorSpace:
    """V_n^{@d} as a right W_d(A_ell)-supermodule; basis (row, b) words."""

    def __init__(self, n, d, ell):
        self.n, self.d, self.ell = n, d, ell
        self.alg = brauer_algebra(ell)
        if (n * self.alg.rank) ** d > TENSOR_GUARD:
            raise ValueError("tensor space guard exceeded")
        singles = [(r, b) for r in range(1, n + 1) for b in range(self.alg.rank)]
        words = [()]
        for _ in range(d):
            words = [w + (s,) for w in words for s in singles]
        self.basis = words
        self.index = {w: i for i, w in enumerate(words)}

    @property
    def rank(self):
        return len(self.basis)

    def _par(self, entry):
        return self.alg.parity(entry[1])

    def act_insert(self, vec, x_label, t):
        """Right action of iota_t(x)."""
        xb = self.alg.index[x_label]
        x_par = self.alg.parity(xb)
        out = {}
        for word, c in vec.items():
            right_par = sum(self._par(e) for e in word[t:]) % 2
            r, b = word[t - 1]
            prod = self.alg.mul_basis(b, xb)
            if not prod:
                continue
            (k, _), = prod.items()
            new = word[:t - 1] + ((r, k),) + word[t:]
            sgn = (-1) ** (x_par * right_par)
            out[new] = out.get(new, 0) + c * sgn
        return {k: v for k, v in out.items() if v}

    def act_perm(self, vec, g):
        """v . g = (g^{-1}-signed-place-permutation of v)."""
        gi = cb.inverse(g)
        out = {}
        for word, c in vec.items():
            sgn = place_action_sign(gi, [self._par(e) for e in word])
            new = cb.place_permute(gi, word)
            out[new] = out.get(new, 0) + c * (-1) ** sgn
        return {k: v for k, v in out.items() if v}

    def left_act_ambient(self, mono, vec):
        """Left action of an ambient monomial (tuple of (b, r, s) triples)."""
        out = {}
        pars_op = [self.alg.parity(t[0]) for t in mono]
        for word, c in vec.items():
            pars_v = [self._par(e) for e in word]
            sign = 0
            acc = 0
            for i in range(self.d):
                sign += pars_op[i] * acc
                acc += pars_v[i]
            new = []
            dead = False
            for (b, r, s), (row, y) in zip(mono, word):
                if s != row:
                    dead = True
                    break
                prod = self.alg.mul_basis(b, y)
                if not prod:
                    dead = True
                    break
                (k, _), = prod.items()
                new.append((r, k))
            if dead:
                continue
            key = tuple(new)
            out[key] = out.get(key, 0) + c * (-1) ** (sign % 2)
        return {k: v for k, v in out.items() if v}

    def left_act_schur(self, schur, x, vec):
        out = {}
        for i, c in x.items():
            for mono, s in schur.orbit(schur.reps[i]).items():
                cur = self.left_act_ambient(mono, vec)
                for k, v in cur.items():
                    val = out.get(k, 0) + c * s * v
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out

    def v_la(self, mlam):
        """v_lambda basis vector for lambda in Lambda^J(n,d)."""
        word = []
        padded = [tuple(c) + (0,) * (self.n - len(c)) for c in mlam]
        for row in range(self.n):
            for j in range(self.ell):
                word.extend([(row + 1, self.alg.index[("e", j)])] * padded[j][row])
        return {tuple(word): 1}
