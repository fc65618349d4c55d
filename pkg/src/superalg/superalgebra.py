"""Based graded superalgebras with exact structure constants.

A BasedSuperalgebra is a finite homogeneous basis, a bidegree per basis
element, and sparse structure constants over a coefficient ring.  All the
sign-rule constructions (tensor products, opposites, wreath superproducts,
regradings, truncations, supercentralizers) operate on this one carrier.
"""

import json

from .rings import QQ, ExactMatrix, Span, matrix_rank, spadd, spscale


class BasedSuperalgebra:
    def __init__(self, ring, labels, bidegrees, table, unit, name=""):
        self.ring = ring
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate basis labels")
        self.bidegrees = tuple((int(d), int(p) % 2) for d, p in bidegrees)
        self.table = {
            ij: {k: ring.coerce(c) for k, c in prod.items() if not ring.is_zero(ring.coerce(c))}
            for ij, prod in table.items()
        }
        self.table = {ij: prod for ij, prod in self.table.items() if prod}
        self.unit = {k: ring.coerce(c) for k, c in unit.items()}
        self.name = name

    @property
    def rank(self):
        return len(self.labels)

    def bideg(self, i):
        return self.bidegrees[i]

    def parity(self, i):
        return self.bidegrees[i][1]

    def degree(self, i):
        return self.bidegrees[i][0]

    def mul_basis(self, i, j):
        return self.table.get((i, j), {})

    def multiply(self, x, y):
        """Product of sparse coefficient dicts (index -> scalar)."""
        R = self.ring
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                ab = R.mul(a, b)
                if R.is_zero(ab):
                    continue
                for k, c in self.mul_basis(i, j).items():
                    v = R.add(out.get(k, R.zero()), R.mul(ab, c))
                    if R.is_zero(v):
                        out.pop(k, None)
                    else:
                        out[k] = v
        return out

    def add(self, x, y, c=None):
        return spadd(self.ring, x, y, c)

    def scale(self, c, x):
        return spscale(self.ring, c, x)

    def basis_element(self, label):
        return {self.index[label]: self.ring.one()}

    def one(self):
        return dict(self.unit)

    def is_zero_elt(self, x):
        return not x

    def eq(self, x, y):
        return self.add(x, y, self.ring.coerce(-1)) == {}

    def element_bidegree(self, x):
        """Bidegree of a homogeneous element, or None for 0 / mixed."""
        degs = {self.bidegrees[i] for i in x}
        return degs.pop() if len(degs) == 1 else None

    def homogeneous_parts(self, x):
        parts = {}
        for i, c in x.items():
            parts.setdefault(self.bidegrees[i], {})[i] = c
        return parts

    # -- structural checks ---------------------------------------------------

    def check_unit(self):
        for i in range(self.rank):
            e = {i: self.ring.one()}
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                raise AssertionError(f"unit fails on basis element {self.labels[i]}")
        return True

    def check_bidegrees(self):
        """Every nonzero structure constant respects additive bidegrees."""
        for (i, j), prod in self.table.items():
            d = self.degree(i) + self.degree(j)
            p = (self.parity(i) + self.parity(j)) % 2
            for k in prod:
                if self.bidegrees[k] != (d, p):
                    raise AssertionError(
                        f"bidegree violation: {self.labels[i]} * {self.labels[j]} "
                        f"hits {self.labels[k]}")
        return True

    def check_associative(self, triples=None):
        if triples is None:
            rng = range(self.rank)
            triples = ((i, j, k) for i in rng for j in rng for k in rng)
        R = self.ring
        for i, j, k in triples:
            left = self.multiply(self.mul_basis(i, j), {k: R.one()})
            right = self.multiply({i: R.one()}, self.mul_basis(j, k))
            if left != right:
                raise AssertionError(
                    f"associativity fails at ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")
        return True

    def pretty(self, x):
        R = self.ring
        if not x:
            return "0"
        bits = []
        for i in sorted(x):
            bits.append(f"{R.scalar_str(x[i])}*{self.labels[i]}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# constructions


def trivial_algebra(ring):
    """The ground ring as a based superalgebra on one even degree-0 generator."""
    return BasedSuperalgebra(ring, ["1"], [(0, 0)], {(0, 0): {0: 1}}, {0: 1}, name="k")


def tensor(a, b):
    """Tensor product with the Koszul sign (x@y)(x'@y') = (-1)^{|y||x'|} xx' @ yy'."""
    if a.ring != b.ring:
        raise ValueError("ring mismatch")
    R = a.ring
    labels = [(la, lb) for la in a.labels for lb in b.labels]
    nb = b.rank

    def idx(i, j):
        return i * nb + j

    bidegrees = [
        (a.degree(i) + b.degree(j), (a.parity(i) + b.parity(j)) % 2)
        for i in range(a.rank) for j in range(b.rank)
    ]
    table = {}
    for (i1, j1), prod_a in a.table.items():
        for (i2, j2), prod_b in b.table.items():
            sign = (-1) ** (b.parity(i2) * a.parity(j1))
            out = {}
            for ka, ca in prod_a.items():
                for kb, cb in prod_b.items():
                    c = R.mul(ca, cb)
                    if sign < 0:
                        c = R.neg(c)
                    out[idx(ka, kb)] = c
            table[(idx(i1, i2), idx(j1, j2))] = out
    unit = {}
    for ka, ca in a.unit.items():
        for kb, cb in b.unit.items():
            unit[idx(ka, kb)] = R.mul(ca, cb)
    return BasedSuperalgebra(a.ring, labels, bidegrees, table, unit,
                             name=f"({a.name})@({b.name})")


def tensor_power(a, d):
    if d == 0:
        return trivial_algebra(a.ring)
    out = a
    for _ in range(d - 1):
        out = tensor(out, a)
    return out


def opposite(a):
    """Super-opposite: x * y = (-1)^{|x||y|} y x on the same basis."""
    table = {}
    for (i, j), prod in a.table.items():
        sign = (-1) ** (a.parity(i) * a.parity(j))
        entry = prod if sign > 0 else {k: a.ring.neg(c) for k, c in prod.items()}
        table[(j, i)] = entry
    return BasedSuperalgebra(a.ring, a.labels, a.bidegrees, table, a.unit,
                             name=f"sop({a.name})")


def koszul_sign_exponent(parities_x, parities_y):
    """Exponent for (x_1@...@x_d)(y_1@...@y_d): sum_{j<i} |y_j||x_i|."""
    total = 0
    acc = 0
    for i in range(len(parities_x)):
        total += parities_x[i] * acc
        acc += parities_y[i]
    return total


def place_action_sign(g, parities):
    """[g; v_1..v_d] = sum over pairs a<b with g^{-1}(a) > g^{-1}(b) of |v_a||v_b|.

    `parities` are the parities of v_1..v_d (before permuting); the result
    word has v_{g^{-1}(a)} in slot a.
    """
    from .combin import inverse
    gi = inverse(g)  # gi[k-1] = g^{-1}(k)
    d = len(parities)
    permuted = [parities[gi[a] - 1] for a in range(d)]
    total = 0
    for a in range(d):
        for b in range(a + 1, d):
            if gi[a] > gi[b]:
                total += permuted[a] * permuted[b]
    return total


def wreath(a, d):
    """Wreath superproduct A^{@d} x| S_d with the signed place-permutation action."""
    from . import combin as cb
    R = a.ring
    if d == 0:
        return trivial_algebra(R)
    perms = cb.all_perms(d)
    pindex = {w: i for i, w in enumerate(perms)}
    words = [()]
    for _ in range(d):
        words = [w + (i,) for w in words for i in range(a.rank)]
    windex = {w: i for i, w in enumerate(words)}
    labels = [(w, g) for w in words for g in perms]
    np = len(perms)

    def idx(wi, gi):
        return wi * np + gi

    bidegrees = []
    wdegs = []
    for w in words:
        deg = sum(a.degree(i) for i in w)
        par = sum(a.parity(i) for i in w) % 2
        wdegs.append((deg, par))
    for wd in wdegs:
        bidegrees.extend([wd] * np)

    # (x@g)(y@h) = x * (g.y) @ (g h) with the signed action g.y = +-(permuted y)
    def act(g, word):
        sign = place_action_sign(g, [a.parity(i) for i in word])
        return (-1) ** sign, cb.place_permute(g, word)

    def word_mul(x, y):
        # product in A^{@d} of basis words, sparse dict over word indices
        sign = koszul_sign_exponent([a.parity(i) for i in x], [a.parity(j) for j in y])
        factors = [a.mul_basis(i, j) for i, j in zip(x, y)]
        if any(not f for f in factors):
            return {}
        out = {(): R.coerce((-1) ** sign)}
        for f in factors:
            new = {}
            for prefix, c in out.items():
                for k, ck in f.items():
                    new[prefix + (k,)] = R.mul(c, ck)
            out = new
        return {windex[w]: c for w, c in out.items()}

    table = {}
    for wi, x in enumerate(words):
        for gi, g in enumerate(perms):
            for wj, y in enumerate(words):
                s, gy = act(g, y)
                prod = word_mul(x, gy)
                if s < 0:
                    prod = {k: R.neg(c) for k, c in prod.items()}
                if not prod:
                    continue
                for hj, h in enumerate(perms):
                    gh = pindex[cb.compose(g, h)]
                    entry = {idx(k, gh): c for k, c in prod.items()}
                    table[(idx(wi, gi), idx(wj, hj))] = entry
    unit_word = {}
    out = {(): R.one()}
    for _ in range(d):
        new = {}
        for prefix, c in out.items():
            for k, ck in a.unit.items():
                new[prefix + (k,)] = R.mul(c, ck)
        out = new
    ident = pindex[cb.identity_perm(d)]
    unit = {idx(windex[w], ident): c for w, c in out.items()}
    return BasedSuperalgebra(R, labels, bidegrees, table, unit, name=f"W_{d}({a.name})")


def component_of(a, idempotents, x_idx):
    """Find (s, r) with e_s x e_r = x, for x a basis element; None if none."""
    x = {x_idx: a.ring.one()}
    for s, es in enumerate(idempotents):
        if a.multiply(es, x) != x:
            continue
        for r, er in enumerate(idempotents):
            if a.multiply(x, er) == x:
                return s, r
    return None


def check_orthogonal_idempotents(a, idempotents, require_unit=True):
    R = a.ring
    for i, e in enumerate(idempotents):
        bd = a.element_bidegree(e)
        if bd != (0, 0):
            raise ValueError(f"idempotent {i} is not of bidegree (0,0)")
        if a.multiply(e, e) != e:
            raise ValueError(f"element {i} is not idempotent")
        for j, f in enumerate(idempotents):
            if i != j and a.multiply(e, f):
                raise ValueError(f"idempotents {i},{j} not orthogonal")
    if require_unit:
        total = {}
        for e in idempotents:
            total = a.add(total, e)
        if total != a.one():
            raise ValueError("idempotents do not sum to 1")


def regrade(a, idempotents, shifts):
    """Regraded algebra: x in e_s A e_r gets bidegree shifted by (t_r - t_s, p_r - p_s).

    `idempotents` are orthogonal bidegree-(0,0) idempotents summing to 1,
    `shifts` the corresponding (t, parity) pairs.  Every basis element must
    lie in a single two-sided component.
    """
    check_orthogonal_idempotents(a, idempotents)
    if len(shifts) != len(idempotents):
        raise ValueError("need one shift per idempotent")
    bidegrees = []
    for x in range(a.rank):
        comp = component_of(a, idempotents, x)
        if comp is None:
            raise ValueError(f"basis element {a.labels[x]} straddles components")
        s, r = comp
        d, p = a.bidegrees[x]
        bidegrees.append((d + shifts[r][0] - shifts[s][0],
                          (p + shifts[r][1] - shifts[s][1]) % 2))
    return BasedSuperalgebra(a.ring, a.labels, bidegrees, a.table, a.unit,
                             name=f"regrade({a.name})")


def truncate(a, e):
    """Idempotent truncation eAe on the sub-basis it spans."""
    bd = a.element_bidegree(e)
    if bd != (0, 0) or a.multiply(e, e) != e:
        raise ValueError("truncation needs a bidegree-(0,0) idempotent")
    keep = []
    for x in range(a.rank):
        ex = a.multiply(e, a.multiply({x: a.ring.one()}, e))
        if ex == {x: a.ring.one()}:
            keep.append(x)
    keep_set = set(keep)
    # completeness: eAe must be spanned by the kept basis elements
    for x in range(a.rank):
        exe = a.multiply(e, a.multiply({x: a.ring.one()}, e))
        if any(k not in keep_set for k in exe):
            raise ValueError("basis is not adapted to the truncation")
    reindex = {x: i for i, x in enumerate(keep)}
    labels = [a.labels[x] for x in keep]
    bidegrees = [a.bidegrees[x] for x in keep]
    table = {}
    for i, x in enumerate(keep):
        for j, y in enumerate(keep):
            prod = a.mul_basis(x, y)
            entry = {reindex[k]: c for k, c in prod.items() if k in keep_set}
            if entry:
                table[(i, j)] = entry
    unit = {reindex[k]: c for k, c in e.items()}
    return BasedSuperalgebra(a.ring, labels, bidegrees, table, unit,
                             name=f"e({a.name})e")


def end_algebra(a, idempotents):
    """The sum of components e_i A e_j, modelling End_A(+ A e_i)^sop.

    Idempotents need not be orthogonal or sum to 1 (repeats allowed);
    each must be bidegree-(0,0) idempotent with an adapted basis.
    """
    R = a.ring
    pieces = []  # (i, j, basis index in a)
    for i, ei in enumerate(idempotents):
        for j, ej in enumerate(idempotents):
            for x in range(a.rank):
                ex = a.multiply(ei, a.multiply({x: R.one()}, ej))
                if ex == {x: R.one()}:
                    pieces.append((i, j, x))
                elif ex and set(ex) != {x}:
                    # basis not adapted would give overlapping supports
                    raise ValueError("basis is not adapted to the idempotents")
    labels = [(i, j, a.labels[x]) for (i, j, x) in pieces]
    index = {piece: t for t, piece in enumerate(pieces)}
    bidegrees = [a.bidegrees[x] for (_, _, x) in pieces]
    table = {}
    for t1, (i1, j1, x) in enumerate(pieces):
        for t2, (i2, j2, y) in enumerate(pieces):
            if j1 != i2:
                continue
            prod = a.mul_basis(x, y)
            entry = {}
            for k, c in prod.items():
                key = (i1, j2, k)
                if key in index:
                    entry[index[key]] = c
            if entry:
                table[(t1, t2)] = entry
    unit = {}
    for i, ei in enumerate(idempotents):
        for k, c in ei.items():
            key = (i, i, k)
            if key in index:
                unit[index[key]] = c
    return BasedSuperalgebra(R, labels, bidegrees, table, unit,
                             name=f"end({a.name},{len(idempotents)})")


def supercentralizer(a, matrix_units):
    """Supercentralizer Z_A(B) of a matrix subalgebra B given by matrix units.

    `matrix_units` is a dict (i,j) -> element with the E_{i,j} relations;
    the units must sum to 1.  Returns (Z as BasedSuperalgebra, basis of Z as
    elements of A).  Also verifies the factorization B @ Z -> A is bijective
    (the supercentralizer lemma).
    """
    R = a.ring
    size = 1 + max(i for i, _ in matrix_units)
    # matrix-unit relations
    total = {}
    for i in range(size):
        total = a.add(total, matrix_units[(i, i)])
    if total != a.one():
        raise ValueError("matrix units do not sum to 1 in A")
    for (i, j), eij in matrix_units.items():
        for (k, l), ekl in matrix_units.items():
            prod = a.multiply(eij, ekl)
            expected = matrix_units[(i, l)] if j == k else {}
            if prod != expected:
                raise ValueError(f"matrix unit relations fail at {(i, j)}x{(k, l)}")

    # solve b z = (-1)^{|b||z|} z b for z of each parity
    z_basis = []
    for target_par in (0, 1):
        cols = [x for x in range(a.rank) if a.parity(x) == target_par]
        if not cols:
            continue
        rows = []
        for (i, j), b in matrix_units.items():
            bpar = a.element_bidegree(b)[1]
            sign = R.coerce((-1) ** (bpar * target_par))
            # row block: for unknown z = sum_c z_c x_c: b x_c - sign x_c b = 0
            block = {}
            for ci, x in enumerate(cols):
                xe = {x: R.one()}
                diff = a.add(a.multiply(b, xe), a.multiply(xe, b), R.neg(sign))
                for k, coeff in diff.items():
                    block.setdefault(k, {})[ci] = coeff
            rows.extend(block.values())
        mat = ExactMatrix(a.ring if a.ring.is_field else QQ,
                          [[row.get(ci, 0) for ci in range(len(cols))] for row in rows])
        from .rings import nullspace
        for vec in nullspace(mat):
            elt = {}
            for ci, c in enumerate(vec):
                if not R.is_zero(R.coerce(c)):
                    elt[cols[ci]] = R.coerce(c)
            if elt:
                z_basis.append(elt)

    # based algebra structure on Z: close the span, express products
    span = Span(a.ring if a.ring.is_field else QQ)
    reduced_basis = []
    for z in z_basis:
        if span.add(z):
            reduced_basis.append(z)
    z_elts = reduced_basis
    zn = len(z_elts)
    coords = _coordinate_solver(a, z_elts)
    table = {}
    for i, zi in enumerate(z_elts):
        for j, zj in enumerate(z_elts):
            prod = a.multiply(zi, zj)
            entry = coords(prod)
            if entry is None:
                raise ArithmeticError("centralizer is not closed under product")
            if entry:
                table[(i, j)] = entry
    unit = coords(a.one())
    if unit is None:
        raise ArithmeticError("1 does not lie in the centralizer span")
    bidegrees = [a.element_bidegree(z) for z in z_elts]
    if any(bd is None for bd in bidegrees):
        raise ArithmeticError("centralizer basis is not homogeneous")
    z = BasedSuperalgebra(a.ring, [f"z{i}" for i in range(zn)], bidegrees, table, unit,
                          name=f"Z({a.name})")

    # factorization check: multiplication B @ Z -> A is a linear bijection
    b_basis = list(matrix_units.values())
    prods = []
    for b in b_basis:
        for zel in z_elts:
            prods.append(a.multiply(b, zel))
    if len(prods) != a.rank:
        raise ArithmeticError(
            f"rank B * rank Z = {len(prods)} != rank A = {a.rank}")
    pspan = Span(a.ring if a.ring.is_field else QQ)
    for pr in prods:
        if not pspan.add(pr):
            raise ArithmeticError("multiplication B @ Z -> A is not injective")
    return z, z_elts


def _coordinate_solver(a, elements):
    """Return a function expressing elements of A in the span of `elements`.

    All keys are lifted to tuples so "elt" pivots sort before "tag" columns.
    """
    field = a.ring if a.ring.is_field else QQ
    span = Span(field)
    for t, el in enumerate(elements):
        tagged = {("elt", k): c for k, c in el.items()}
        tagged[("tag", t)] = field.one()  # tag columns record coordinates
        span.add(tagged)

    def coords(x):
        red = span.reduce({("elt", k): c for k, c in x.items()})
        out = {}
        for k, c in red.items():
            if k[0] == "tag":
                out[k[1]] = a.ring.coerce(field.neg(c))
            elif not field.is_zero(c):
                return None  # not in the span
        return out

    return coords


# ---------------------------------------------------------------------------
# symmetrizing forms


def validate_symmetrizing(a, t):
    """Check a would-be symmetrizing form; returns a report dict.

    t: dict basis index -> scalar.  Checks vanishing on the odd part,
    symmetry t(xy) = t(yx) on all basis pairs, and invertibility of the
    Gram matrix over the ring (unit determinant over Z_(p)).
    """
    R = a.ring
    failures = []
    for x in range(a.rank):
        if a.parity(x) and not R.is_zero(t.get(x, R.zero())):
            failures.append(f"t nonzero on odd basis element {a.labels[x]}")

    def t_of(elt):
        val = R.zero()
        for k, c in elt.items():
            val = R.add(val, R.mul(c, t.get(k, R.zero())))
        return val

    gram = [[R.zero()] * a.rank for _ in range(a.rank)]
    for x in range(a.rank):
        for y in range(a.rank):
            gram[x][y] = t_of(a.mul_basis(x, y))
    for x in range(a.rank):
        for y in range(x + 1, a.rank):
            if gram[x][y] != gram[y][x]:
                failures.append(
                    f"t(xy) != t(yx) at ({a.labels[x]}, {a.labels[y]})")
    from .rings import PLocalIntegers
    if isinstance(R, PLocalIntegers):
        mat = ExactMatrix(QQ, gram)
        full = matrix_rank(mat) == a.rank
        unit_det = full and _gram_det_is_p_unit(gram, R.p)
        if not full:
            failures.append("Gram matrix singular over Q")
        elif not unit_det:
            failures.append(f"Gram determinant is not a unit in Z_({R.p})")
        perfect = full and unit_det
    else:
        mat = ExactMatrix(R, gram)
        perfect = matrix_rank(mat) == a.rank
        if not perfect:
            failures.append("Gram matrix is not invertible")
    return {"ok": not failures, "failures": failures, "rank": a.rank}


def _gram_det_is_p_unit(gram, p):
    """det over Q has p-valuation 0 (necessary and sufficient for Z_(p)-perfectness
    given the form is defined over Z_(p))."""
    from fractions import Fraction
    det = _fraction_det([[Fraction(x) for x in row] for row in gram])
    if det == 0:
        return False
    return det.numerator % p != 0 and det.denominator % p != 0


def _fraction_det(rows):
    n = len(rows)
    rows = [row[:] for row in rows]
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def transport_form_opposite(a, t):
    """A symmetrizing form is unchanged under sop."""
    return dict(t)


def tensor_form(a, ta, b, tb):
    """Product form on tensor(a, b)."""
    R = a.ring
    out = {}
    nb = b.rank
    for i, ca in ta.items():
        for j, cb in tb.items():
            out[i * nb + j] = R.mul(ca, cb)
    return out


# ---------------------------------------------------------------------------
# supermodules and hom spaces


class BasedSupermodule:
    """Left supermodule over a BasedSuperalgebra, with explicit action data.

    action[i] is the sparse matrix of the i-th algebra basis element:
    dict col -> dict row -> scalar, i.e. a . v_col = sum_row c v_row.
    """

    def __init__(self, algebra, bidegrees, action, name=""):
        self.algebra = algebra
        self.bidegrees = tuple((int(d), int(p) % 2) for d, p in bidegrees)
        self.action = action
        self.name = name

    @property
    def rank(self):
        return len(self.bidegrees)

    def act(self, x, vec):
        """Action of an algebra element (sparse dict) on a module vector."""
        R = self.algebra.ring
        out = {}
        for i, c in x.items():
            cols = self.action.get(i, {})
            for col, v in vec.items():
                if col not in cols:
                    continue
                cv = R.mul(c, v)
                for row, coeff in cols[col].items():
                    val = R.add(out.get(row, R.zero()), R.mul(cv, coeff))
                    if R.is_zero(val):
                        out.pop(row, None)
                    else:
                        out[row] = val
        return out

    def check_module(self, pairs=None):
        """(xy).v = x.(y.v) on basis pairs, and unit acts as identity."""
        R = self.algebra.ring
        A = self.algebra
        for col in range(self.rank):
            v = {col: R.one()}
            if self.act(A.one(), v) != v:
                raise AssertionError(f"unit fails on module vector {col}")
        if pairs is None:
            pairs = [(i, j) for i in range(A.rank) for j in range(A.rank)]
        for i, j in pairs:
            for col in range(self.rank):
                v = {col: R.one()}
                lhs = self.act(A.mul_basis(i, j), v)
                rhs = self.act({i: R.one()}, self.act({j: R.one()}, v))
                if lhs != rhs:
                    raise AssertionError(f"action not associative at ({i},{j})")
        return True


def regular_module(a):
    """A as a left module over itself."""
    action = {}
    for i in range(a.rank):
        cols = {}
        for j in range(a.rank):
            prod = a.mul_basis(i, j)
            if prod:
                cols[j] = dict(prod)
        action[i] = cols
    return BasedSupermodule(a, a.bidegrees, action, name=f"reg({a.name})")


def hom_space(m, n, generators=None):
    """Graded basis of Hom_A(M, N): all homogeneous f with f(av) = (-1)^{|f||a|} a f(v).

    Returns a dict bidegree -> list of matrices (dict (row, col) -> scalar).
    Unknowns are matrix entries f[row, col]; constraints come from the
    action of `generators` (defaults: all algebra basis elements).
    """
    A = m.algebra
    if A is not n.algebra:
        raise ValueError("modules over different algebras")
    R = A.ring
    field = R if R.is_field else QQ
    gens = generators if generators is not None else list(range(A.rank))
    out = {}
    # f homogeneous of bidegree (dd, dp): f maps m-bidegree (d,p) to (d+dd, p+dp)
    target_bidegs = sorted({
        (dn - dm, (pn - pm) % 2)
        for dm, pm in m.bidegrees for dn, pn in n.bidegrees
    })
    for dd, dp in target_bidegs:
        cols = [(row, col) for col in range(m.rank) for row in range(n.rank)
                if (n.bidegrees[row][0] - m.bidegrees[col][0],
                    (n.bidegrees[row][1] - m.bidegrees[col][1]) % 2) == (dd, dp)]
        if not cols:
            continue
        cindex = {rc: i for i, rc in enumerate(cols)}
        rows = []
        for g in gens:
            gpar = A.parity(g)
            sign = field.coerce((-1) ** (gpar * dp))
            # constraint: f(g . v_c) - sign * g . f(v_c) = 0 for each c
            for c in range(m.rank):
                gv = m.act({g: R.one()}, {c: R.one()})  # in M
                # lhs rowdict over n-rows:
                lhs = {}
                for mc, coeff in gv.items():
                    for (rr, cc), ci in cindex.items():
                        if cc == mc:
                            lhs[(rr, ci)] = lhs.get((rr, ci), field.zero())
                            lhs[(rr, ci)] = field.add(lhs[(rr, ci)], field.coerce(coeff))
                gn = n.action.get(g, {})
                for (rr, cc), ci in cindex.items():
                    if cc != c:
                        continue
                    for nr, coeff in gn.get(rr, {}).items():
                        key = (nr, ci)
                        val = field.mul(sign, field.coerce(coeff))
                        lhs[key] = field.sub(lhs.get(key, field.zero()), val)
                byrow = {}
                for (nr, ci), coeff in lhs.items():
                    if not field.is_zero(coeff):
                        byrow.setdefault(nr, {})[ci] = coeff
                rows.extend(byrow.values())
        mat = ExactMatrix(field, [[row.get(ci, 0) for ci in range(len(cols))]
                                  for row in rows] or [[field.zero()] * len(cols)])
        from .rings import nullspace
        sols = []
        for vec in nullspace(mat):
            f = {}
            for ci, coeff in enumerate(vec):
                if not field.is_zero(field.coerce(coeff)):
                    f[cols[ci]] = R.coerce(coeff)
            sols.append(f)
        if sols:
            out[(dd, dp)] = sols
    return out


# ---------------------------------------------------------------------------
# serialization (documented JSON schema, version 1)
#
# {
#   "schema": "based-superalgebra/1",
#   "name": ..., "ring": "Q" | "F<p>" | "Z(<p>)", "rank": N,
#   "labels": [str, ...],                  # repr of each label
#   "bidegrees": [[deg, parity], ...],
#   "unit": {"<idx>": "<scalar>"},
#   "table": {"<i>,<j>": {"<k>": "<scalar>"}}   # only nonzero products
# }


def to_json(a):
    data = {
        "schema": "based-superalgebra/1",
        "name": a.name,
        "ring": a.ring.name,
        "rank": a.rank,
        "labels": [repr(lab) for lab in a.labels],
        "bidegrees": [list(bd) for bd in a.bidegrees],
        "unit": {str(k): a.ring.scalar_str(c) for k, c in sorted(a.unit.items())},
        "table": {
            f"{i},{j}": {str(k): a.ring.scalar_str(c) for k, c in sorted(prod.items())}
            for (i, j), prod in sorted(a.table.items())
        },
    }
    return json.dumps(data, indent=1, sort_keys=True)
