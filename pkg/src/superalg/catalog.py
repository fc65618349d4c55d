"""Catalog of concrete (super)algebras: Clifford, twisted symmetric group,
Iwahori-Hecke, Olshanski, and group algebras.

Twisted group algebra signs are extracted from the Clifford realization
t_r |-> (c_r - c_{r+1})/sqrt(2): along two reduced words of the same w the
integer Clifford products differ by exactly the algebra sign, and each
factor c_r - c_{r+1} is invertible, so no product vanishes.
"""

from functools import lru_cache

from . import combin as cb
from .rings import QQ
from .superalgebra import BasedSuperalgebra


# ---------------------------------------------------------------------------
# integer Clifford arithmetic on bitmasks (c_1 ... c_n; bit i-1 <-> c_i)


def cliff_mono_mul(eps, kappa):
    """(sign, bitmask) for c^eps * c^kappa with integer sign."""
    sign = 1
    result = eps
    k = kappa
    while k:
        i = (k & -k).bit_length() - 1  # lowest set bit, 0-based
        k &= k - 1
        higher = result >> (i + 1)
        if bin(higher).count("1") % 2:
            sign = -sign
        result ^= 1 << i
    return sign, result


def cliff_mul(x, y):
    """Product of integer Clifford elements (dict bitmask -> coeff)."""
    out = {}
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            s, e = cliff_mono_mul(e1, e2)
            v = out.get(e, 0) + s * c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _tau(r):
    """c_r - c_{r+1} (1-based r)."""
    return {1 << (r - 1): 1, 1 << r: -1}


@lru_cache(maxsize=None)
def _tau_word_value(word):
    out = {0: 1}
    for r in word:
        out = cliff_mul(out, _tau(r))
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _twisted_sign_up(w, r):
    """sigma with t_w t_r = sigma t_{w s_r}, for l(w s_r) = l(w) + 1."""
    target = cb.apply_gen_right(w, r)
    lhs = dict(_tau_word_value(cb.reduced_word(w) + (r,)))
    rhs = dict(_tau_word_value(cb.reduced_word(target)))
    key = next(iter(lhs))
    sigma = lhs[key] // rhs[key]
    if sigma not in (1, -1) or lhs != {e: sigma * c for e, c in rhs.items()}:
        raise AssertionError(f"sign extraction failed at {w}, s_{r}")
    return sigma


def twisted_gen_mul(w, r):
    """(sign, w s_r) for t_w t_r in the twisted group algebra."""
    target = cb.apply_gen_right(w, r)
    if cb.length(target) > cb.length(w):
        return _twisted_sign_up(w, r), target
    return _twisted_sign_up(target, r), target


def twisted_mul_elt(ring, x, w2):
    """Right-multiply a sparse element {perm: coeff} by t_{w2}."""
    out = dict(x)
    for r in cb.reduced_word(w2):
        new = {}
        for w, c in out.items():
            s, target = twisted_gen_mul(w, r)
            v = ring.add(new.get(target, ring.zero()),
                         ring.mul(c, ring.coerce(s)))
            if ring.is_zero(v):
                new.pop(target, None)
            else:
                new[target] = v
        out = new
    return out


# ---------------------------------------------------------------------------
# catalog constructors


def clifford(n, ring=QQ):
    """Rank-n Clifford superalgebra on basis c^eps, eps in {0,1}^n."""
    labels = list(range(1 << n))
    bidegrees = [(0, bin(e).count("1") % 2) for e in labels]
    table = {}
    for e1 in labels:
        for e2 in labels:
            s, e = cliff_mono_mul(e1, e2)
            table[(e1, e2)] = {e: s}
    return BasedSuperalgebra(ring, labels, bidegrees, table, {0: 1},
                             name=f"Clifford({n})")


def clifford_form(alg):
    """t(c^eps) = delta_{eps,0}."""
    return {alg.index[0]: alg.ring.one()}


def group_algebra(d, ring=QQ):
    """kS_d, concentrated in bidegree (0,0)."""
    perms = cb.all_perms(d)
    index = {w: i for i, w in enumerate(perms)}
    table = {}
    for i, u in enumerate(perms):
        for j, v in enumerate(perms):
            table[(i, j)] = {index[cb.compose(u, v)]: 1}
    return BasedSuperalgebra(ring, perms, [(0, 0)] * len(perms), table,
                             {index[cb.identity_perm(d)]: 1}, name=f"kS_{d}")


def twisted_sym(n, ring=QQ):
    """Twisted group algebra T_n on basis t_w, w in S_n.

    Basis elements are defined along lexicographically least reduced words;
    braid moves carry sign +1, distant commutations -1.
    """
    perms = cb.all_perms(n)
    index = {w: i for i, w in enumerate(perms)}
    table = {}
    one = ring.one()
    for i, u in enumerate(perms):
        for j, v in enumerate(perms):
            prod = twisted_mul_elt(ring, {u: one}, v)
            table[(i, j)] = {index[w]: c for w, c in prod.items()}
    bidegrees = [(0, cb.length(w) % 2) for w in perms]
    return BasedSuperalgebra(ring, perms, bidegrees, table,
                             {index[cb.identity_perm(n)]: 1}, name=f"T_{n}")


def twisted_form(alg):
    """t(t_w) = delta_{w,1}."""
    n = len(alg.labels[0])
    return {alg.index[cb.identity_perm(n)]: alg.ring.one()}


def hecke(n, q, ring=QQ):
    """Iwahori-Hecke algebra H_n(q) on the T_w basis; needs q^2 != 1."""
    q = ring.coerce(q)
    if ring.mul(q, q) == ring.one():
        raise ValueError("need q^2 != 1")
    xi = ring.sub(q, ring.inv(q))
    perms = cb.all_perms(n)
    index = {w: i for i, w in enumerate(perms)}

    def right_gen(elt, r):
        out = {}
        for w, c in elt.items():
            target = cb.apply_gen_right(w, r)
            if cb.length(target) > cb.length(w):
                out[target] = ring.add(out.get(target, ring.zero()), c)
            else:
                # T_w T_r = xi T_w + T_{w s_r}
                out[w] = ring.add(out.get(w, ring.zero()), ring.mul(xi, c))
                out[target] = ring.add(out.get(target, ring.zero()), c)
        return {w: c for w, c in out.items() if not ring.is_zero(c)}

    table = {}
    for i, u in enumerate(perms):
        for j, v in enumerate(perms):
            elt = {u: ring.one()}
            for r in cb.reduced_word(v):
                elt = right_gen(elt, r)
            table[(i, j)] = {index[w]: c for w, c in elt.items()}
    return BasedSuperalgebra(ring, perms, [(0, 0)] * len(perms), table,
                             {index[cb.identity_perm(n)]: 1}, name=f"H_{n}({q})")


def hecke_form(alg):
    n = len(alg.labels[0])
    return {alg.index[cb.identity_perm(n)]: alg.ring.one()}


def olshanski(n, q, ring=QQ):
    """Olshanski superalgebra Y_n(q) on basis T_g c^eps; needs q^2 != 1.

    Relations: Hecke relations for T_r, Clifford relations for c_i, and
    T_r c_r = c_{r+1} T_r, T_r c_s = c_s T_r for s != r, r+1.
    """
    q = ring.coerce(q)
    if ring.mul(q, q) == ring.one():
        raise ValueError("need q^2 != 1")
    xi = ring.sub(q, ring.inv(q))
    perms = cb.all_perms(n)
    labels = [(w, e) for w in perms for e in range(1 << n)]
    index = {lab: i for i, lab in enumerate(labels)}

    def phi(mask, r):
        """Swap bits r-1 and r (the automorphism c_r <-> c_{r+1})."""
        a = (mask >> (r - 1)) & 1
        b = (mask >> r) & 1
        if a != b:
            mask ^= (1 << (r - 1)) | (1 << r)
        return mask

    @lru_cache(maxsize=None)
    def cliff_through_t(mask, r):
        """c^mask T_r = T_r . main + extra; returns (main, extra) over Z[xi].

        Scalars are dicts {xi_power: int}; specialization happens later.
        """
        if mask == 0:
            return ({0: {0: 1}}, {})
        i = (mask & -mask).bit_length() - 1
        s = i + 1  # 1-based generator index of the lowest Clifford factor
        nu = mask & (mask - 1)
        main_nu, extra_nu = cliff_through_t(nu, r)
        main, extra = {}, {}

        def add_to(target, mono, poly, mul_sign=1):
            for p, c in poly.items():
                cur = target.setdefault(mono, {})
                cur[p] = cur.get(p, 0) + mul_sign * c
                if cur[p] == 0:
                    del cur[p]
            if target.get(mono) == {}:
                del target[mono]

        if s == r:
            # c_r T_r = T_r c_{r+1} + xi c_r - xi c_{r+1}
            for mono, poly in main_nu.items():
                sgn, m2 = cliff_mono_mul(1 << r, mono)
                add_to(main, m2, poly, sgn)
            for mono, poly in main_nu.items():
                for c_mask, c_sign in ((1 << (r - 1), 1), (1 << r, -1)):
                    sgn, m2 = cliff_mono_mul(c_mask, mono)
                    shifted = {p + 1: c for p, c in poly.items()}
                    add_to(extra, m2, shifted, sgn * c_sign)
        elif s == r + 1:
            # c_{r+1} T_r = T_r c_r
            for mono, poly in main_nu.items():
                sgn, m2 = cliff_mono_mul(1 << (r - 1), mono)
                add_to(main, m2, poly, sgn)
        else:
            for mono, poly in main_nu.items():
                sgn, m2 = cliff_mono_mul(1 << i, mono)
                add_to(main, m2, poly, sgn)
        for mono, poly in extra_nu.items():
            sgn, m2 = cliff_mono_mul(1 << i, mono)
            add_to(extra, m2, poly, sgn)
        return main, extra

    def specialize(poly):
        val = ring.zero()
        xpow = ring.one()
        maxp = max(poly) if poly else 0
        powers = [ring.one()]
        for _ in range(maxp):
            powers.append(ring.mul(powers[-1], xi))
        for p, c in poly.items():
            val = ring.add(val, ring.mul(ring.coerce(c), powers[p]))
        return val

    def right_t(elt, r):
        out = {}

        def acc(key, c):
            v = ring.add(out.get(key, ring.zero()), c)
            if ring.is_zero(v):
                out.pop(key, None)
            else:
                out[key] = v

        for (w, mask), coeff in elt.items():
            main, extra = cliff_through_t(mask, r)
            target = cb.apply_gen_right(w, r)
            up = cb.length(target) > cb.length(w)
            for mono, poly in main.items():
                c = ring.mul(coeff, specialize(poly))
                if up:
                    acc((target, mono), c)
                else:
                    acc((w, mono), ring.mul(xi, c))
                    acc((target, mono), c)
            for mono, poly in extra.items():
                acc((w, mono), ring.mul(coeff, specialize(poly)))
        return out

    def right_c(elt, mask2):
        out = {}
        for (w, mask), coeff in elt.items():
            s, m = cliff_mono_mul(mask, mask2)
            key = (w, m)
            v = ring.add(out.get(key, ring.zero()),
                         ring.mul(coeff, ring.coerce(s)))
            if ring.is_zero(v):
                out.pop(key, None)
            else:
                out[key] = v
        return out

    table = {}
    for i, (u, e1) in enumerate(labels):
        base = {(u, e1): ring.one()}
        for j, (v, e2) in enumerate(labels):
            elt = base
            for r in cb.reduced_word(v):
                elt = right_t(elt, r)
            elt = right_c(elt, e2)
            table[(i, j)] = {index[lab]: c for lab, c in elt.items()}
    bidegrees = [(0, bin(e).count("1") % 2) for (_, e) in labels]
    ident = (cb.identity_perm(n), 0)
    return BasedSuperalgebra(ring, labels, bidegrees, table, {index[ident]: 1},
                             name=f"Y_{n}({q})")


def regular_trace_form(alg):
    """Trace of left multiplication: always a trace form, even on superalgebras
    (left multiplication by an odd element swaps parities, so its trace is 0);
    perfect whenever the underlying algebra is separable."""
    R = alg.ring
    t = {}
    for i in range(alg.rank):
        val = R.zero()
        for k in range(alg.rank):
            val = R.add(val, alg.mul_basis(i, k).get(k, R.zero()))
        if not R.is_zero(val):
            t[i] = val
    return t


def olshanski_form(alg):
    """Symmetrizing form on Y_n(q): the regular-representation trace.

    The delta-on-basis functional is not a trace form here: with
    T_r c_r = c_{r+1} T_r one gets t(c_1 T_1 c_1) = xi != 0 = t(T_1 c_1 c_1).
    The even trace-form space of Y_2(q) is one-dimensional and spanned by a
    perfect form; the regular trace is the canonical representative.
    """
    return regular_trace_form(alg)
