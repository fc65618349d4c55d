"""Twisted affine type A_{2l}^(2) lattice data.

Roots theta in Q_+ are coefficient tuples (m_0, ..., m_l).  Weights in the
Lambda_0 - Q_+ cone are tracked through their Q_+ part, using
(Lambda_0 | alpha_i^vee) = delta_{i,0}.  Nuclei Lambda_0 - w Lambda_0 are
generated by a height-bounded BFS over simple reflections.
"""

from collections import deque
from functools import lru_cache
from math import factorial

from . import combin


class RootSystem:
    """Invariant-form data for A_{2l}^(2); p = 2l + 1."""

    def __init__(self, ell):
        if ell < 1:
            raise ValueError("ell must be positive")
        self.ell = ell
        self.p = 2 * ell + 1
        self.rank = ell + 1
        self.gram = self._gram_matrix(ell)
        self.delta = tuple([2] * ell + [1])

    @staticmethod
    def _gram_matrix(ell):
        if ell == 1:
            return ((2, -4), (-4, 8))
        rows = []
        for i in range(ell + 1):
            row = [0] * (ell + 1)
            if i == 0:
                row[0], row[1] = 2, -2
            elif i == ell:
                row[ell - 1], row[ell] = -4, 8
            else:
                row[i - 1], row[i], row[i + 1] = -2, 4, -2
                if i == ell - 1:
                    row[i + 1] = -4
            rows.append(tuple(row))
        return tuple(rows)

    def alpha(self, i):
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    def norm_sq(self, i):
        """(alpha_i | alpha_i): 2 for i=0, 8 for i=ell, 4 otherwise."""
        return self.gram[i][i]

    def pairing(self, theta, eta):
        return sum(theta[i] * self.gram[i][j] * eta[j]
                   for i in range(self.rank) for j in range(self.rank))

    def pair_root(self, theta, i):
        """(theta | alpha_i)."""
        return sum(theta[j] * self.gram[i][j] for j in range(self.rank))

    def copairing(self, theta, i):
        """(theta | alpha_i^vee) = 2 (theta | alpha_i) / (alpha_i | alpha_i)."""
        num = 2 * self.pair_root(theta, i)
        den = self.norm_sq(i)
        if num % den:
            raise ArithmeticError(f"non-integral copairing of {theta} with {i}")
        return num // den

    def weight_copairing(self, theta, i):
        """(Lambda_0 - theta | alpha_i^vee)."""
        return (1 if i == 0 else 0) - self.copairing(theta, i)

    def height(self, theta):
        return sum(theta)

    def add(self, theta, eta, c=1):
        return tuple(a + c * b for a, b in zip(theta, eta))

    def zero(self):
        return (0,) * self.rank


# ---------------------------------------------------------------------------
# words and divided powers


WORD_HEIGHT_GUARD = 12


class GuardExceeded(Exception):
    """A desk-scale enumeration guard was hit."""


def wt(rs, word):
    """Content of a word: sum of the alphas of its letters."""
    v = [0] * rs.rank
    for i in word:
        v[i] += 1
    return tuple(v)


def words_of(rs, theta):
    """All words in I^theta, lexicographic order."""
    n = rs.height(theta)
    if n > WORD_HEIGHT_GUARD:
        raise GuardExceeded(f"ht(theta)={n} exceeds word guard {WORD_HEIGHT_GUARD}")
    words = [()]
    remaining = [theta]
    for _ in range(n):
        new_words, new_remaining = [], []
        for w, rem in zip(words, remaining):
            for i in range(rs.rank):
                if rem[i]:
                    new_words.append(w + (i,))
                    r = list(rem)
                    r[i] -= 1
                    new_remaining.append(tuple(r))
        words, remaining = new_words, new_remaining
    return words


def divided_factorial(dpword):
    """i! = m_1! ... m_r! for a divided power word ((i_1,m_1),...)."""
    out = 1
    for _, m in dpword:
        out *= factorial(m)
    return out


def flatten_dpword(dpword):
    """bar(i): expand multiplicities into an ordinary word."""
    out = []
    for i, m in dpword:
        out.extend([i] * m)
    return tuple(out)


def gg_word(rs, mu, colors):
    """Gelfand-Graev divided power word l^{mu,colors} of weight |mu| delta.

    The building block for one part m with color j is
    l^{m,j} = ell^(m) (ell-1)^(2m) ... (j+1)^(2m) j^(m) ... 1^(m) 0^(2m) 1^(m) ... j^(m).
    """
    if len(mu) != len(colors):
        raise ValueError("composition and colors must have equal length")
    out = []
    for m, j in zip(mu, colors):
        if not (0 <= j <= rs.ell - 1):
            raise ValueError(f"color {j} outside J")
        if m == 0:
            continue
        block = [(rs.ell, m)]
        for i in range(rs.ell - 1, j, -1):
            block.append((i, 2 * m))
        for i in range(j, 0, -1):
            block.append((i, m))
        block.append((0, 2 * m))
        for i in range(1, j + 1):
            block.append((i, m))
        out.extend(block)
    return tuple(out)


def gg_factorial(rs, m, j):
    """l^{m,j}! = ((2m)!)^(ell-j) (m!)^(2j+1)."""
    return factorial(2 * m) ** (rs.ell - j) * factorial(m) ** (2 * j + 1)


# ---------------------------------------------------------------------------
# nuclei, masses, RoCK


@lru_cache(maxsize=None)
def _nuclei_up_to(ell, max_height):
    """BFS over theta' = Lambda_0 - w Lambda_0; returns {theta': word}.

    Reflection step: r_i sends theta' to theta' + (Lambda_0 - theta' | alpha_i^vee) alpha_i.
    Minimal paths from Lambda_0 move monotonically up in height, so pruning
    at max_height is exhaustive for nuclei of height <= max_height.
    The recorded word (i_t, ..., i_1) satisfies w = r_{i_t} ... r_{i_1}, built
    by appending each reflection on the left.
    """
    rs = RootSystem(ell)
    start = rs.zero()
    seen = {start: ()}
    queue = deque([start])
    while queue:
        theta = queue.popleft()
        for i in range(rs.rank):
            a = rs.weight_copairing(theta, i)
            new = rs.add(theta, rs.alpha(i), a)
            if any(x < 0 for x in new):
                continue
            if rs.height(new) > max_height or new in seen:
                continue
            seen[new] = (i,) + seen[theta]
            queue.append(new)
    return seen


def nuclei(rs, max_height):
    """All nuclei of height <= max_height, with witness reduced words."""
    return dict(_nuclei_up_to(rs.ell, max_height))


def nucleus_mass(rs, theta):
    """Decide theta in W; return (rho, d) or None.

    theta in W iff theta = rho + d*delta for a (unique) nucleus rho and d >= 0.
    """
    found = None
    table = _nuclei_up_to(rs.ell, rs.height(theta))
    for rho in table:
        diff = [a - b for a, b in zip(theta, rho)]
        if any(x < 0 for x in diff):
            continue
        d, rem = divmod(sum(diff), rs.height(rs.delta))
        if rem:
            continue
        if tuple(diff) == tuple(d * x for x in rs.delta):
            if found is not None:
                raise ArithmeticError(f"non-unique nucleus decomposition for {theta}")
            found = (rho, d)
    return found


def is_rock(rs, theta):
    """RoCK test: |(theta|a_0^vee)| >= 2d and |(theta|a_i^vee)| >= d-1 for i >= 1.

    Absolute values because nuclei come in mirror pairs with negated
    copairing vectors (e.g. the two staircase families of bar-cores), and
    d-Rouquier cores of both parities must exist for every d.  Only the
    nucleus matters: theta and rho(theta) pair equally with every coroot.
    """
    nm = nucleus_mass(rs, theta)
    if nm is None:
        return False
    _, d = nm
    if abs(rs.copairing(theta, 0)) < 2 * d:
        return False
    return all(abs(rs.copairing(theta, i)) >= d - 1 for i in range(1, rs.rank))


def smallest_rock(rs, d, max_height=30):
    """Smallest-height theta = rho + d*delta that is RoCK (exhaustive by height)."""
    best = None
    table = _nuclei_up_to(rs.ell, max_height)
    for rho in table:
        theta = rs.add(rho, rs.delta, d)
        if is_rock(rs, theta):
            key = (rs.height(theta), theta)
            if best is None or key < best[0]:
                best = (key, theta)
    return None if best is None else best[1]


def i_rho(rs, rho, word=None):
    """Divided power word i_rho = i_1^(a_1) ... i_t^(a_t) from a reduced word for rho.

    `word` is (i_t, ..., i_1) with w = r_{i_t} ... r_{i_1} and Lambda_0 - w Lambda_0 = rho;
    if omitted, the BFS witness word is used.  a_k = (r_{i_{k-1}} ... r_{i_1} Lambda_0 | alpha_{i_k}^vee).
    Returns (dpword, word) since the answer depends on the chosen word.
    """
    table = _nuclei_up_to(rs.ell, rs.height(rho))
    if rho not in table:
        raise ValueError(f"{rho} is not a nucleus")
    if word is None:
        word = table[rho]
    if len(word) != len(table[rho]):
        raise ValueError(f"word {word} is not reduced (BFS distance {len(table[rho])})")
    theta = rs.zero()
    dpword = []
    for i_k in reversed(word):  # apply r_{i_1} first
        a = rs.weight_copairing(theta, i_k)
        if a < 0:
            raise ValueError(f"word {word} gives negative exponent at {i_k}")
        dpword.append((i_k, a))
        theta = rs.add(theta, rs.alpha(i_k), a)
    if theta != tuple(rho):
        raise ValueError(f"word {word} reaches {theta}, not {rho}")
    return tuple(dpword), tuple(word)


# ---------------------------------------------------------------------------
# residue contents of p-strict partitions


def residue(rs, column):
    """Residue of a box in the given column (1-based): min(x, 2l - x), x = (c-1) mod p."""
    x = (column - 1) % rs.p
    return min(x, 2 * rs.ell - x)


def content(rs, lam):
    """Residue content of a p-strict partition, as an element of Q_+."""
    if not combin.is_p_strict(lam, rs.p):
        raise ValueError(f"{lam} is not {rs.p}-strict")
    v = [0] * rs.rank
    for part in lam:
        for c in range(1, part + 1):
            v[residue(rs, c)] += 1
    return tuple(v)
