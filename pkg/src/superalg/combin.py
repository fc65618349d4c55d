"""Partition, composition and symmetric-group combinatorics.

Compositions are tuples of nonnegative ints; canonical form trims
trailing zeros.  Enumerations are frozen in graded reverse-lexicographic
order (first part largest first), which golden files rely on.
"""

from functools import lru_cache
from itertools import permutations as _perms
from math import factorial


# ---------------------------------------------------------------------------
# compositions and partitions


def canonical(parts):
    """Trim trailing zeros."""
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def weight(parts):
    return sum(parts)


def is_partition(parts):
    parts = canonical(parts)
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def compositions(n, d):
    """Lambda(n,d): compositions of d into n parts (zeros allowed), rev-lex order."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in compositions(n - 1, d - first):
            out.append((first,) + rest)
    return out


def partitions(d, max_part=None):
    """P(d) in reverse-lexicographic order."""
    if max_part is None:
        max_part = d
    if d == 0:
        return [()]
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            out.append((first,) + rest)
    return out


def partitions_bounded(n, d):
    """Lambda_+(n,d): partitions of d with at most n parts."""
    return [p for p in partitions(d) if len(p) <= n]


def multicompositions(ell, n, d):
    """Lambda^J(n,d): ell-tuples of compositions in Lambda(n,·) of total weight d."""
    if ell == 0:
        return [()] if d == 0 else []
    out = []
    for d0 in range(d, -1, -1):
        for lam in compositions(n, d0):
            for rest in multicompositions(ell - 1, n, d - d0):
                out.append(((lam),) + rest)
    return out


def multipartitions(ell, d):
    """P^J(d): ell-tuples of partitions of total weight d."""
    if ell == 0:
        return [()] if d == 0 else []
    out = []
    for d0 in range(d, -1, -1):
        for lam in partitions(d0):
            for rest in multipartitions(ell - 1, d - d0):
                out.append((lam,) + rest)
    return out


def colored_compositions(ell, n, d):
    """Lambda^col(n,d): pairs (lambda, colors) with lambda in Lambda(n,d), colors in J^n."""
    out = []
    for lam in compositions(n, d):
        for js in _words(ell, n):
            out.append((lam, js))
    return out


def essential_compositions(d):
    """C(d): compositions with no internal zeros, canonical form (positive parts)."""
    if d == 0:
        return [()]
    out = []
    for first in range(d, 0, -1):
        for rest in essential_compositions(d - first):
            out.append((first,) + rest)
    return out


def essential_colored_compositions(ell, d):
    """C^col(d): (mu, colors) with mu essential, one color per (positive) part."""
    out = []
    for mu in essential_compositions(d):
        for js in _words(ell, len(mu)):
            out.append((mu, js))
    return out


def _words(ell, n):
    if n == 0:
        return [()]
    out = []
    for w in _words(ell, n - 1):
        for j in range(ell):
            out.append(w + (j,))
    return out


def enumerate_family(kind, *, n=None, d=None, ell=None):
    """Dispatch for the documented enumeration families."""
    table = {
        "compositions": lambda: compositions(n, d),
        "partitions_bounded": lambda: partitions_bounded(n, d),
        "partitions": lambda: partitions(d),
        "multipartitions": lambda: multipartitions(ell, d),
        "multicompositions": lambda: multicompositions(ell, n, d),
        "colored": lambda: colored_compositions(ell, n, d),
        "essential": lambda: essential_compositions(d),
        "essential_colored": lambda: essential_colored_compositions(ell, d),
    }
    if kind not in table:
        raise ValueError(f"unknown family {kind!r}")
    return table[kind]()


def color_weight(lam, js, j):
    """|lambda, j|_j: total size of parts colored j."""
    return sum(l for l, c in zip(lam, js) if c == j)


def alpha_bijection(mlam, n):
    """Interleave an ell-multicomposition into Lambda(n*ell, d)."""
    ell = len(mlam)
    padded = [tuple(c) + (0,) * (n - len(c)) for c in mlam]
    out = []
    for r in range(n):
        for j in range(ell):
            out.append(padded[j][r])
    return tuple(out)


def alpha_inverse(lam, n, ell):
    """Inverse of alpha_bijection."""
    lam = tuple(lam) + (0,) * (n * ell - len(lam))
    return tuple(tuple(lam[r * ell + j] for r in range(n)) for j in range(ell))


def gamma_embed(mlam, n):
    """The colored composition (alpha(mlam), (0 1 ... ell-1)^n)."""
    ell = len(mlam)
    return alpha_bijection(mlam, n), tuple(range(ell)) * n


# ---------------------------------------------------------------------------
# Kostka numbers by direct SSYT backtracking (independent oracle, no
# determinant formulas)


def kostka(lam, mu):
    """Number of semistandard Young tableaux of shape lam and content mu."""
    lam = canonical(lam)
    mu = canonical(mu)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    if weight(lam) != weight(mu):
        return 0
    if not lam:
        return 1
    rows = len(lam)
    tableau = [[0] * lam[r] for r in range(rows)]
    remaining = list(mu)
    cells = [(r, c) for r in range(rows) for c in range(lam[r])]

    def fits(r, c, v):
        if c > 0 and tableau[r][c - 1] > v:
            return False
        if r > 0 and tableau[r - 1][c] >= v:
            return False
        return True

    count = 0

    def backtrack(k):
        nonlocal count
        if k == len(cells):
            count += 1
            return
        r, c = cells[k]
        for v in range(1, len(remaining) + 1):
            if remaining[v - 1] and fits(r, c, v):
                tableau[r][c] = v
                remaining[v - 1] -= 1
                backtrack(k + 1)
                remaining[v - 1] += 1
        tableau[r][c] = 0

    backtrack(0)
    return count


def kostka_multi(mlam, mmu):
    """Product formula for multipartitions: prod_j K(lam^j, mu^j)."""
    out = 1
    for lam, mu in zip(mlam, mmu):
        out *= kostka(lam, mu)
    return out


# ---------------------------------------------------------------------------
# symmetric group


def identity_perm(d):
    return tuple(range(1, d + 1))


def compose(u, v):
    """(u v)(i) = u(v(i)); one-line tuples on {1..d}."""
    return tuple(u[v[i - 1] - 1] for i in range(1, len(u) + 1))


def inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[x - 1] = i
    return tuple(out)


def length(w):
    """Coxeter length = number of inversions."""
    d = len(w)
    return sum(1 for a in range(d) for b in range(a + 1, d) if w[a] > w[b])


def sign(w):
    return -1 if length(w) % 2 else 1


def transposition(d, r):
    """s_r = (r, r+1) in S_d."""
    w = list(range(1, d + 1))
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def apply_gen_left(r, w):
    """s_r * w (swap the values r, r+1 in one-line notation of w)."""
    return tuple(r + 1 if x == r else r if x == r + 1 else x for x in w)


def apply_gen_right(w, r):
    """w * s_r (swap positions r, r+1)."""
    w = list(w)
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def all_perms(d):
    return [tuple(p) for p in _perms(range(1, d + 1))]


def longest_element(d):
    return tuple(range(d, 0, -1))


@lru_cache(maxsize=None)
def reduced_word(w):
    """Lexicographically least reduced word of w, as a tuple of generator indices."""
    d = len(w)
    word = []
    w = tuple(w)
    while True:
        for r in range(1, d):
            # r is a left descent iff r+1 appears before r in one-line of w^{-1},
            # equivalently w^{-1}(r) > w^{-1}(r+1)
            wi = inverse(w)
            if wi[r - 1] > wi[r]:
                word.append(r)
                w = apply_gen_left(r, w)
                break
        else:
            return tuple(word)


def from_word(d, word):
    """Permutation s_{word[0]} s_{word[1]} ... s_{word[-1]}."""
    w = identity_perm(d)
    for r in word:
        w = compose(w, transposition(d, r))
    return w


def place_permute(g, word):
    """g acting by place permutation: result_a = word[g^{-1}(a)]."""
    gi = inverse(g)
    return tuple(word[gi[a - 1] - 1] for a in range(1, len(g) + 1))


def young_subgroup_blocks(lam, d):
    """Consecutive value blocks of S_lam inside S_d."""
    blocks = []
    start = 1
    for part in lam:
        blocks.append(tuple(range(start, start + part)))
        start += part
    if start <= d:
        # pad with singleton blocks so that blocks cover {1..d}
        for v in range(start, d + 1):
            blocks.append((v,))
    return blocks


def min_coset_rep(w, lam):
    """Minimal-length representative of the right coset S_lam w."""
    d = len(w)
    blocks = young_subgroup_blocks(lam, d)
    out = list(w)
    for block in blocks:
        positions = sorted(i for i, x in enumerate(out) if x in set(block))
        for pos, val in zip(positions, sorted(block)):
            out[pos] = val
    return tuple(out)


def coset_decompose(w, lam):
    """Write w = g * u with g in S_lam and u the minimal coset rep; return (g, u)."""
    u = min_coset_rep(w, lam)
    g = compose(w, inverse(u))
    return g, u


def coset_reps(lam, d):
    """All minimal-length representatives of S_lam \\ S_d."""
    reps = []
    for w in all_perms(d):
        if min_coset_rep(w, lam) == w:
            reps.append(w)
    return reps


def multinomial(d, lam):
    out = factorial(d)
    for part in lam:
        out //= factorial(part)
    return out


def young_subgroup_gens(lam, d):
    """Generator indices r with s_r inside S_lam."""
    gens = []
    start = 1
    for part in lam:
        gens.extend(range(start, start + part - 1))
        start += part
    return gens


# ---------------------------------------------------------------------------
# p-strict partitions and p-bar combinatorics


def is_p_strict(lam, p):
    """Parts divisible by p may repeat; all other parts must be distinct."""
    lam = canonical(lam)
    if not is_partition(lam):
        return False
    seen = set()
    for part in lam:
        if part % p:
            if part in seen:
                return False
            seen.add(part)
    return True


def p_strict_partitions(n, p):
    return [lam for lam in partitions(n) if is_p_strict(lam, p)]


def _bar_removals(lam, p):
    """All partitions obtained from lam by removing one p-bar."""
    lam = canonical(lam)
    out = set()
    # subtract p from one part, provided the result is again p-strict
    for i, part in enumerate(lam):
        if part >= p:
            new = list(lam)
            new[i] = part - p
            new = canonical(sorted(new, reverse=True))
            if is_p_strict(new, p):
                out.add(new)
    # remove two distinct parts summing to p
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            if lam[i] != lam[j] and lam[i] + lam[j] == p:
                new = [x for k, x in enumerate(lam) if k not in (i, j)]
                new = canonical(sorted(new, reverse=True))
                if is_p_strict(new, p):
                    out.add(new)
    return sorted(out, reverse=True)


def bar_core(lam, p):
    """Remove p-bars until none is possible."""
    if not is_p_strict(lam, p):
        raise ValueError(f"{lam} is not {p}-strict")
    lam = canonical(lam)
    while True:
        removals = _bar_removals(lam, p)
        if not removals:
            return lam
        lam = removals[0]


def bar_weight(lam, p):
    """(|lam| - |bar_core(lam)|) / p."""
    core = bar_core(lam, p)
    diff = weight(lam) - weight(core)
    assert diff % p == 0
    return diff // p
