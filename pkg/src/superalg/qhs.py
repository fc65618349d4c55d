"""Quiver Hecke superalgebra R_theta of type A_{2l}^(2) with normal-form
rewriting, and a degree-windowed cyclotomic quotient at desk scale.

Elements are sparse sums over normal monomials (w, k, i) meaning
psi_w y_1^{k_1}...y_n^{k_n} 1_i, with psi_w taken along the lexicographically
least reduced word of w.  Products are reduced with the defining relations;
braid and distant moves between reduced words are found by BFS and applied
with their (R7)/(R65) corrections at the move site.
"""

from functools import lru_cache

from . import combin as cb
from .rings import QQ, Span
from .rootdata import RootSystem, words_of


def letter_parity(i):
    """|i| = 1 iff i = 0."""
    return 1 if i == 0 else 0


@lru_cache(maxsize=None)
def _move_graph(word):
    """Single braid/distant moves from a reduced word; list of (newword, kind, p).

    kind "d" = distant swap at positions p, p+1; "b+" = pattern (r+1, r, r+1)
    -> (r, r+1, r) at positions p..p+2 (correction +B); "b-" = the reverse
    pattern (correction -B).
    """
    out = []
    n = len(word)
    for p in range(n - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) > 1:
            out.append((word[:p] + (b, a) + word[p + 2:], "d", p))
    for p in range(n - 2):
        a, b, c = word[p], word[p + 1], word[p + 2]
        if a == c and b == a - 1:
            out.append((word[:p] + (b, a, b) + word[p + 3:], "b+", p))
        if a == c and b == a + 1:
            out.append((word[:p] + (b, a, b) + word[p + 3:], "b-", p))
    return out


@lru_cache(maxsize=None)
def _path_to_canonical(word, d):
    """Moves rewriting `word` into the lex-least reduced word of its permutation."""
    target = cb.reduced_word(cb.from_word(d, word))
    if word == target:
        return ()
    seen = {word: ()}
    frontier = [word]
    while frontier:
        new = []
        for w in frontier:
            for nw, kind, p in _move_graph(w):
                if nw in seen:
                    continue
                seen[nw] = seen[w] + ((kind, p, w),)
                if nw == target:
                    return seen[nw]
                new.append(nw)
        frontier = new
    raise AssertionError(f"no move path from {word} to {target}")


class QHS:
    """R_theta for theta in Q_+ of type A_{2l}^(2)."""

    def __init__(self, ell, theta, ring=QQ):
        self.rs = RootSystem(ell)
        self.ell = ell
        self.theta = tuple(theta)
        self.ring = ring
        self.n = self.rs.height(self.theta)
        self.words = words_of(self.rs, self.theta)
        self.word_set = set(self.words)
        self._apply_cache = {}
        self._lmul_cache = {}

    # -- polynomial tables -----------------------------------------------------

    def q_poly(self, i, j):
        """Q_{i,j}(u, v) as {(a, b): int} for u^a v^b; Q_{ij}(u,v) = Q_{ji}(v,u)."""
        if i == j:
            return {}
        if abs(i - j) > 1:
            return {(0, 0): 1}
        if i < j:
            lo, hi = i, j
            if 1 <= lo and hi < self.ell:
                return {(1, 0): 1, (0, 1): -1}
            if lo == 0 and hi == 1 and self.ell == 1:
                return {(4, 0): 1, (0, 1): -1}
            # {0,1} with ell > 1, or {ell-1, ell}
            return {(2, 0): 1, (0, 1): -1}
        flipped = self.q_poly(j, i)
        return {(b, a): c for (a, b), c in flipped.items()}

    def b_poly(self, i, j, k):
        """B_{i,j,k}(u, v) as {(a, b): int} for u^a v^b (u = y_r, v = y_{r+2})."""
        if i != k:
            return {}
        if j == i - 1:
            return {(0, 0): -1}
        if j == i + 1:
            if i == self.ell - 1 and i > 0:
                return {(1, 0): 1, (0, 1): 1}
            if i == 0 and self.ell > 1:
                return {(0, 1): 1, (1, 0): -1}
            if i == 0 and self.ell == 1:
                # (u^2 + v^2)(v - u)
                return {(2, 1): 1, (0, 3): 1, (3, 0): -1, (1, 2): -1}
            return {(0, 0): 1}
        return {}

    # -- degrees ---------------------------------------------------------------

    def mono_bidegree(self, mono):
        w, k, iw = mono
        deg = sum(k[s] * self.rs.norm_sq(iw[s]) for s in range(self.n))
        par = sum(k[s] * letter_parity(iw[s]) for s in range(self.n)) % 2
        cur = iw
        for r in reversed(cb.reduced_word(w)):
            a, b = cur[r - 1], cur[r]
            deg -= self.rs.gram[a][b]
            par = (par + letter_parity(a) * letter_parity(b)) % 2
            cur = cur[:r - 1] + (b, a) + cur[r + 1:]
        return deg, par

    # -- element helpers ---------------------------------------------------------

    def add(self, x, y, c=None):
        R = self.ring
        out = dict(x)
        for key, v in y.items():
            v = v if c is None else R.mul(c, v)
            s = R.add(out.get(key, R.zero()), v)
            if R.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        return out

    def scale(self, c, x):
        R = self.ring
        if R.is_zero(c):
            return {}
        return {k: R.mul(c, v) for k, v in x.items()}

    def idem(self, iword):
        if tuple(iword) not in self.word_set:
            raise ValueError(f"{iword} is not in I^theta")
        return {(cb.identity_perm(self.n), (0,) * self.n, tuple(iword)): self.ring.one()}

    def one(self):
        out = {}
        for iw in self.words:
            out.update(self.idem(iw))
        return out

    def gen_y(self, s):
        out = {}
        for iw in self.words:
            k = [0] * self.n
            k[s - 1] = 1
            out[(cb.identity_perm(self.n), tuple(k), iw)] = self.ring.one()
        return out

    def gen_psi(self, r):
        out = {}
        w = cb.transposition(self.n, r)
        for iw in self.words:
            out[(w, (0,) * self.n, iw)] = self.ring.one()
        return out

    # -- rewriting core ----------------------------------------------------------

    def _merge_y(self, k1, k2, iword):
        """y^{k1} y^{k2} -> (sign, k1 + k2) using (R3) under 1_iword."""
        sign = 0
        for s in range(self.n):
            if k2[s] and letter_parity(iword[s]):
                tail = sum(k1[t] for t in range(s + 1, self.n)
                           if letter_parity(iword[t]))
                sign += k2[s] * tail
        return (-1) ** (sign % 2), tuple(a + b for a, b in zip(k1, k2))

    def _rmul_y(self, elem, kvec):
        if not any(kvec):
            return dict(elem)
        R = self.ring
        out = {}
        for (w, k, iw), c in elem.items():
            sgn, kk = self._merge_y(k, kvec, iw)
            key = (w, kk, iw)
            v = R.add(out.get(key, R.zero()), R.mul(c, R.coerce(sgn)))
            if R.is_zero(v):
                out.pop(key, None)
            else:
                out[key] = v
        return out

    def _cross_one_y(self, t, r, iword):
        """y_t psi_r 1_iword: list of (int coeff, has_psi, new index or None).

        The retained term carries y_{t'} with t' = s_r(t); corrections drop
        both the psi and the y.
        """
        a, b = iword[r - 1], iword[r]
        if t not in (r, r + 1):
            sgn = (-1) ** (letter_parity(a) * letter_parity(b) * letter_parity(iword[t - 1]))
            return [(sgn, True, t)]
        s0 = (-1) ** (letter_parity(a) * letter_parity(b))
        if t == r + 1:
            out = [(s0, True, r)]
            if a == b:
                out.append((1, False, None))
            return out
        out = [(s0, True, r + 1)]
        if a == b:
            out.append((-s0, False, None))
        return out

    def _ymono_through_gen(self, kvec, r, iword):
        """y^kvec psi_r 1_iword = sum c psi_r^{0/1} y^{k'} 1_iword.

        Returns a list of (int coeff, has_psi, kvec').  Factors are crossed
        highest index first (the factor adjacent to psi_r).
        """
        terms = [(1, list(kvec), [0] * self.n, True)]
        # crossing order: t = n down to 1, each k_t times; the crossed factor
        # lands left of the already-crossed monomial and is merged with signs
        done = []
        for t in range(self.n, 0, -1):
            for _ in range(kvec[t - 1]):
                new_terms = []
                for coeff, left, right, has in terms:
                    left2 = left[:]
                    left2[t - 1] -= 1
                    for c2, has2, idx in self._cross_one_y(t, r, iword):
                        if has2:
                            sgn, kk = self._merge_y(_unit_vec(self.n, idx),
                                                    tuple(right), iword)
                            new_terms.append((coeff * c2 * sgn, left2, list(kk), True))
                        else:
                            # psi and this y are consumed; merge left2 into right
                            sgn, kk = self._merge_y(tuple(left2), tuple(right), iword)
                            done.append((coeff * c2 * sgn, list(kk), None, False))
                terms = new_terms
        out = []
        for coeff, left, right, has in terms + done:
            if has:
                # all factors crossed: left is zero now
                out.append((coeff, True, tuple(right)))
            else:
                out.append((coeff, False, tuple(left)))
        return out

    def _lmul_psi_mono(self, r, mono):
        """psi_r . (psi_w y^k 1_i), normalized."""
        w, k, iw = mono
        key = (r, w, iw)
        cached = self._lmul_cache.get(key)
        if cached is None:
            word = (r,) + cb.reduced_word(w)
            cached = self._apply_word0(word, iw)
            self._lmul_cache[key] = cached
        return self._rmul_y(cached, k)

    def lmul_psi(self, r, elem):
        R = self.ring
        out = {}
        for mono, c in elem.items():
            for key, v in self._lmul_psi_mono(r, mono).items():
                s = R.add(out.get(key, R.zero()), R.mul(c, v))
                if R.is_zero(s):
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def lmul_y(self, s, elem):
        """y_s . (psi_w y^k 1_i): push y_s right through psi_w."""
        R = self.ring
        out = {}
        for (w, k, iw), c in elem.items():
            word = cb.reduced_word(w)
            got = self._ymono_times_word0(_unit_vec(self.n, s), word, iw)
            cur = self._rmul_y(got, k)
            for key, v in cur.items():
                val = R.add(out.get(key, R.zero()), R.mul(c, v))
                if R.is_zero(val):
                    out.pop(key, None)
                else:
                    out[key] = val
        return out

    def _apply_word0(self, word, iword):
        """psi_word 1_iword in normal form (word arbitrary)."""
        word = tuple(word)
        key = (word, iword)
        cached = self._apply_cache.get(key)
        if cached is not None:
            return cached
        result = self._apply_word0_uncached(word, iword)
        self._apply_cache[key] = result
        return result

    def _apply_word0_uncached(self, word, iword):
        R = self.ring
        n = self.n
        if not word:
            return {(cb.identity_perm(n), (0,) * n, iword): R.one()}
        perm = cb.from_word(n, word)
        if len(word) == cb.length(perm):
            # reduced: rewrite toward the canonical word, move by move
            canon = cb.reduced_word(perm)
            if word == canon:
                return {(perm, (0,) * n, iword): R.one()}
            path = _path_to_canonical(word, n)
            kind, p, src = path[0]
            assert src == word
            return self._apply_move(word, kind, p, iword)
        # non-reduced: find the first descent of the prefix chain
        q = 1
        u = cb.identity_perm(n)
        prefix = ()
        while True:
            r = word[q - 1]
            nu = cb.compose(u, cb.transposition(n, r))
            if cb.length(nu) < cb.length(u):
                break
            u, prefix, q = nu, prefix + (r,), q + 1
        r = word[q - 1]
        rest = word[q:]
        # rewrite the reduced prefix into canon(u s_r) + (r)
        target = cb.reduced_word(cb.compose(u, cb.transposition(n, r))) + (r,)
        if prefix == target:
            # psi_r psi_r hits (R6)
            out = {}
            inner = self._apply_word0(rest, iword)
            head = target[:-1]
            for (v, m, jv), c in inner.items():
                u_ctx = cb.place_permute(v, jv)
                q_tab = self.q_poly(u_ctx[r - 1], u_ctx[r])
                for (a, b), qc in q_tab.items():
                    kadd = [0] * n
                    kadd[r - 1] += a
                    kadd[r] += b
                    got = self._ymono_times_word0(tuple(kadd), cb.reduced_word(v), jv)
                    got = self._rmul_y(got, m)
                    piece = self._prepend_word(head, got)
                    out = self.add(out, piece, R.mul(c, R.coerce(qc)))
            return out
        # transform prefix -> target by one move, in context (r,) + rest
        path = _move_path_between(prefix, target, n)
        kind, p, src = path[0]
        new_prefix = _apply_move_word(prefix, kind, p)
        full_context = (r,) + rest
        main, corr = self._move_pieces(prefix, kind, p, full_context, iword)
        out = self.scale(main, self._apply_word0(new_prefix + full_context, iword))
        return self.add(out, corr)

    def _apply_move(self, word, kind, p, iword):
        """Apply one move at position p of `word` (the whole word, 1_iword context)."""
        new_word = _apply_move_word(word, kind, p)
        main, corr = self._move_pieces(word[:len(word)], kind, p, (), iword,
                                       whole=word)
        out = self.scale(main, self._apply_word0(new_word, iword))
        return self.add(out, corr)

    def _move_pieces(self, prefix_word, kind, p, extra_context, iword, whole=None):
        """Coefficient of the moved main term and the normalized correction.

        The move happens inside `prefix_word` at position p; `extra_context`
        is the rest of the psi word sitting to the right of prefix_word.
        """
        R = self.ring
        n = self.n
        word = whole if whole is not None else prefix_word
        if kind == "d":
            suffix = word[p + 2:] + extra_context
            ctx = cb.place_permute(cb.from_word(n, suffix), iword)
            a, b = word[p], word[p + 1]
            sgn = (-1) ** (letter_parity(ctx[a - 1]) * letter_parity(ctx[a])
                           * letter_parity(ctx[b - 1]) * letter_parity(ctx[b]))
            return R.coerce(sgn), {}
        # braid move: pattern at p..p+2 with lower generator index r
        r = min(word[p], word[p + 1])
        suffix = word[p + 3:] + extra_context
        ctx = cb.place_permute(cb.from_word(n, suffix), iword)
        b_tab = self.b_poly(ctx[r - 1], ctx[r], ctx[r + 1])
        sign = 1 if kind == "b+" else -1
        corr = {}
        if b_tab:
            head = word[:p]
            for (a, b), c in b_tab.items():
                kadd = [0] * n
                kadd[r - 1] += a
                kadd[r + 1] += b
                inner = self._ymono_times_word0(tuple(kadd), suffix, iword)
                piece = self._prepend_word(head, inner)
                corr = self.add(corr, piece, R.coerce(sign * c))
        return R.one(), corr

    def _prepend_word(self, word, elem):
        for r in reversed(word):
            elem = self.lmul_psi(r, elem)
        return elem

    def _ymono_times_word0(self, kadd, word, iword):
        """y^{kadd} psi_word 1_iword in normal form."""
        word = tuple(word)
        if not any(kadd):
            return self._apply_word0(word, iword)
        n = self.n
        R = self.ring
        if not word:
            return {(cb.identity_perm(n), tuple(kadd), iword): R.one()}
        r = word[0]
        rest = word[1:]
        ctx = cb.place_permute(cb.from_word(n, rest), iword)
        out = {}
        for coeff, has_psi, kvec in self._ymono_through_gen(kadd, r, ctx):
            if has_psi:
                inner = self._ymono_times_word0(kvec, rest, iword)
                piece = self.lmul_psi(r, inner)
            else:
                piece = self._ymono_times_word0(kvec, rest, iword)
            out = self.add(out, piece, R.coerce(coeff))
        return out

    # -- products -----------------------------------------------------------------

    def multiply(self, x, y):
        R = self.ring
        out = {}
        for (w1, k1, i1), c1 in x.items():
            word1 = cb.reduced_word(w1)
            for (w2, k2, i2), c2 in y.items():
                if i1 != cb.place_permute(w2, i2):
                    continue
                mid = self._ymono_times_word0(k1, cb.reduced_word(w2), i2)
                mid = self._rmul_y(mid, k2)
                mid = self._prepend_word(word1, mid)
                c = R.mul(c1, c2)
                for key, v in mid.items():
                    s = R.add(out.get(key, R.zero()), R.mul(c, v))
                    if R.is_zero(s):
                        out.pop(key, None)
                    else:
                        out[key] = s
        return out

    # -- graded enumeration ---------------------------------------------------------

    def base_monomials(self):
        """(w, iword) pairs with the bidegree of psi_w 1_iword."""
        out = []
        for w in cb.all_perms(self.n):
            for iw in self.words:
                deg, par = self.mono_bidegree((w, (0,) * self.n, iw))
                out.append((w, iw, deg, par))
        return out

    def monomials_of_degree(self, m):
        out = []
        for w, iw, base, _ in self.base_monomials():
            rem = m - base
            if rem < 0:
                continue
            norms = [self.rs.norm_sq(i) for i in iw]
            for k in _bounded_solutions(norms, rem):
                out.append((w, k, iw))
        return out

    def min_degree(self):
        return min(base for _, _, base, _ in self.base_monomials())


def _unit_vec(n, s):
    v = [0] * n
    v[s - 1] = 1
    return tuple(v)


def _bounded_solutions(weights, total):
    """All nonnegative k with sum k_i * weights_i = total (weights positive)."""
    if not weights:
        return [()] if total == 0 else []
    out = []
    w0 = weights[0]
    for k0 in range(total // w0 + 1):
        for rest in _bounded_solutions(weights[1:], total - k0 * w0):
            out.append((k0,) + rest)
    return out


def _apply_move_word(word, kind, p):
    if kind == "d":
        return word[:p] + (word[p + 1], word[p]) + word[p + 2:]
    a, b = word[p], word[p + 1]
    return word[:p] + (b, a, b) + word[p + 3:]


@lru_cache(maxsize=None)
def _move_path_between(w1, w2, d):
    """Moves from reduced word w1 to reduced word w2 of the same permutation."""
    if w1 == w2:
        return ()
    seen = {w1: ()}
    frontier = [w1]
    while frontier:
        new = []
        for w in frontier:
            for nw, kind, p in _move_graph(w):
                if nw in seen:
                    continue
                seen[nw] = seen[w] + ((kind, p, w),)
                if nw == w2:
                    return seen[nw]
                new.append(nw)
        frontier = new
    raise AssertionError(f"no move path from {w1} to {w2}")


# ---------------------------------------------------------------------------
# cyclotomic quotient (degree-windowed)


CYC_HEIGHT_GUARD = 5
CYC_ELL_GUARD = 2


class GuardExceeded(Exception):
    pass


class CyclotomicResult:
    """Per-degree ranks of H_theta = R_theta / (y_1, 1_i : i_1 != 0)."""

    def __init__(self, qhs, max_degree, window, spans, counts):
        self.qhs = qhs
        self.theta = qhs.theta
        self.max_degree = max_degree
        self.window = window
        self._spans = spans
        self.counts = counts
        self.ranks = {m: counts.get(m, 0) - (spans[m].rank if m in spans else 0)
                      for m in counts}
        nonzero = [m for m, r in self.ranks.items() if r > 0]
        self.top_nonzero = max(nonzero) if nonzero else None
        if self.top_nonzero is None:
            self.stabilized = True
        else:
            self.stabilized = (max_degree - self.top_nonzero) >= window

    @property
    def total_rank(self):
        return sum(r for r in self.ranks.values())

    def is_zero(self):
        return self.total_rank == 0

    def subquotient_rank(self, pred):
        """Rank of the image in H of the span of basis monomials with pred(mono)."""
        total = 0
        for m, count in self.counts.items():
            if count == 0:
                continue
            span = self._spans[m].copy() if m in self._spans else None
            for mono in self.qhs.monomials_of_degree(m):
                if not pred(mono):
                    continue
                vec = {mono: self.qhs.ring.one()}
                if span is None:
                    from .rings import Span as _Span
                    field = self.qhs.ring
                    span = _Span(field)
                if span.add(vec):
                    total += 1
        return total

    def report(self):
        return {
            "theta": list(self.theta),
            "max_degree": self.max_degree,
            "window": self.window,
            "ranks": {str(m): r for m, r in sorted(self.ranks.items()) if r},
            "total_rank": self.total_rank,
            "stabilized": self.stabilized,
        }


def cyclotomic_close(ell, theta, max_degree=None, window=None, ring=QQ):
    """Degreewise quotient H_theta = R_theta/(y_1, 1_i: i_1 != 0).

    The two-sided ideal is saturated by repeated one-generator
    multiplications on both sides within the degree window; the result is
    exact in the window whenever it stabilizes (trailing `window` degrees
    all vanish).
    """
    theta = tuple(theta)
    if sum(theta) > CYC_HEIGHT_GUARD or ell > CYC_ELL_GUARD:
        raise GuardExceeded(f"cyclotomic guards: ht <= {CYC_HEIGHT_GUARD}, ell <= {CYC_ELL_GUARD}")
    if not ring.is_field:
        raise ValueError("cyclotomic closure needs a field")
    q = QHS(ell, theta, ring=ring)
    letters = [i for i in range(ell + 1) if theta[i]]
    if window is None:
        gen_deg = max((q.rs.norm_sq(i) for i in letters), default=0)
        window = gen_deg + 4
    if max_degree is None:
        max_degree = window + 10
    if q.n == 0:
        counts = {0: 1}
        return CyclotomicResult(q, max_degree, window, {0: Span(ring)}, counts)
    mindeg = q.min_degree() if q.words else 0
    counts = {}
    for m in range(mindeg, max_degree + 1):
        counts[m] = len(q.monomials_of_degree(m))
    spans = {m: Span(ring) for m in counts}

    gens = []
    for iw in q.words:
        gens.append(q.multiply(q.gen_y(1), q.idem(iw)))
        if iw[0] != 0:
            gens.append(q.idem(iw))
    mults = [q.gen_psi(r) for r in range(1, q.n)]
    mults += [q.gen_y(s) for s in range(1, q.n + 1)]
    mults += [q.idem(iw) for iw in q.words]

    frontier = []
    for g in gens:
        if not g:
            continue
        deg = q.mono_bidegree(next(iter(g)))[0]
        if deg <= max_degree and spans[deg].add(g):
            frontier.append(g)
    while frontier:
        new_frontier = []
        for e in frontier:
            for mu in mults:
                for prod in (q.multiply(mu, e), q.multiply(e, mu)):
                    if not prod:
                        continue
                    deg = q.mono_bidegree(next(iter(prod)))[0]
                    if deg > max_degree or deg < mindeg:
                        continue
                    if spans[deg].add(prod):
                        new_frontier.append(prod)
        frontier = new_frontier
    return CyclotomicResult(q, max_degree, window, spans, counts)


def graded_dim_check(ell, theta, max_degree, ring=QQ):
    """Count normal-form monomials per degree vs the span of generator products."""
    q = QHS(ell, theta, ring=ring)
    mindeg = q.min_degree()
    counts = {m: len(q.monomials_of_degree(m)) for m in range(mindeg, max_degree + 1)}
    spans = {m: Span(ring) for m in counts}
    frontier = []
    for iw in q.words:
        e = q.idem(iw)
        if spans[0].add(e):
            frontier.append(e)
    mults = [q.gen_psi(r) for r in range(1, q.n)]
    mults += [q.gen_y(s) for s in range(1, q.n + 1)]
    mults += [q.idem(iw) for iw in q.words]
    while frontier:
        new_frontier = []
        for e in frontier:
            for mu in mults:
                prod = q.multiply(e, mu)
                if not prod:
                    continue
                deg = q.mono_bidegree(next(iter(prod)))[0]
                if deg > max_degree or deg < mindeg:
                    continue
                if spans[deg].add(prod):
                    new_frontier.append(prod)
        frontier = new_frontier
    ranks = {m: spans[m].rank for m in counts}
    return counts, ranks


def matrix_block_check(ell, rho, ring=QQ, max_degree=None):
    """Lemma-level check: 1_{i_rho} H_rho 1_{i_rho} has rank 1 and
    rank H_rho = (rank H_rho 1_{i_rho})^2; needs multiplicity-free i_rho."""
    from . import rootdata as rd
    rs = RootSystem(ell)
    dp, word = rd.i_rho(rs, tuple(rho))
    if any(a != 1 for _, a in dp):
        raise ValueError(f"i_rho has a divided power: {dp}; check restricted to "
                         "multiplicity-free words")
    iword = rd.flatten_dpword(dp)
    res = cyclotomic_close(ell, rho, ring=ring, max_degree=max_degree)
    if not res.stabilized:
        raise ArithmeticError("cyclotomic closure did not stabilize")
    corner = res.subquotient_rank(
        lambda mono: mono[2] == iword and cb.place_permute(mono[0], mono[2]) == iword)
    column = res.subquotient_rank(lambda mono: mono[2] == iword)
    total = res.total_rank
    return {
        "rho": list(rho),
        "i_rho": [list(p) for p in dp],
        "corner_rank": corner,
        "column_rank": column,
        "total_rank": total,
        "corner_is_one": corner == 1,
        "square_law": total == column * column,
    }
