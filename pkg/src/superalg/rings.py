"""Exact coefficient rings and exact linear algebra.

Every computation in this package is exact: rationals are arbitrary
precision `Fraction`s, prime fields use ints mod p, and the p-local
integers are fractions whose denominator is checked to be coprime to p
at every construction.  No floating point anywhere.
"""

from fractions import Fraction
from math import gcd


class Rationals:
    """The field of rational numbers (arbitrary precision)."""

    name = "Q"
    is_field = True
    p = None

    def coerce(self, x):
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def scalar_str(self, a):
        return str(a)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """The prime field F_p for an odd prime p."""

    is_field = True

    def __init__(self, p):
        if p < 3 or p % 2 == 0 or not _is_prime(p):
            raise ValueError(f"need an odd prime, got {p}")
        self.p = p
        self.name = f"F{p}"

    def coerce(self, x):
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def is_unit(self, a):
        return a % self.p != 0

    def scalar_str(self, a):
        return str(a % self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


class PLocalIntegers:
    """Z_(p): rationals whose denominator is coprime to the odd prime p.

    Arithmetic is plain Fraction arithmetic; coercion rejects fractions
    with p dividing the denominator, which is how non-p-local structure
    constants are detected.
    """

    is_field = False

    def __init__(self, p):
        if p < 3 or p % 2 == 0 or not _is_prime(p):
            raise ValueError(f"need an odd prime, got {p}")
        self.p = p
        self.name = f"Z({p})"

    def coerce(self, x):
        f = Fraction(x)
        if f.denominator % self.p == 0:
            raise ValueError(f"{f} is not p-local for p={self.p}")
        return f

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if a.numerator % self.p == 0:
            raise ValueError(f"{a} is not a unit in Z_({self.p})")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0 and a.numerator % self.p != 0

    def is_local(self, a):
        return Fraction(a).denominator % self.p != 0

    def residue_field(self):
        return PrimeField(self.p)

    def scalar_str(self, a):
        return str(a)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PLocalIntegers) and other.p == self.p

    def __hash__(self):
        return hash(("Zp", self.p))


QQ = Rationals()


def ring_from_name(name, p=None):
    """Ring selector used by the CLI: one of Q, Fp, Zp (p required for the last two)."""
    if name == "Q":
        return QQ
    if name == "Fp":
        return PrimeField(p)
    if name == "Zp":
        return PLocalIntegers(p)
    raise ValueError(f"unknown ring {name!r}")


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# dense exact matrices


class ExactMatrix:
    """Dense matrix over a coefficient ring, stored as a list of rows."""

    def __init__(self, ring, rows):
        self.ring = ring
        self.rows = [[ring.coerce(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def zero(cls, ring, nrows, ncols):
        return cls(ring, [[ring.zero()] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, ring, n):
        m = cls.zero(ring, n, n)
        for i in range(n):
            m.rows[i][i] = ring.one()
        return m

    def copy(self):
        m = ExactMatrix.__new__(ExactMatrix)
        m.ring = self.ring
        m.rows = [row[:] for row in self.rows]
        m.nrows, m.ncols = self.nrows, self.ncols
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.ring == other.ring
                and self.rows == other.rows)

    def mul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        R = self.ring
        out = ExactMatrix.zero(R, self.nrows, other.ncols)
        for i in range(self.nrows):
            for k in range(self.ncols):
                a = self.rows[i][k]
                if R.is_zero(a):
                    continue
                orow = other.rows[k]
                row = out.rows[i]
                for j in range(other.ncols):
                    row[j] = R.add(row[j], R.mul(a, orow[j]))
        return out


def matrix_rank(m):
    """Exact rank over the fraction field of the ring."""
    R = m.ring
    if isinstance(R, PrimeField):
        return _rank_gf(m.rows, R.p)
    return _rank_bareiss([_int_row(row) for row in m.rows])


def _int_row(row):
    # clear denominators of a Fraction row (fraction-free elimination input)
    l = 1
    for x in row:
        f = Fraction(x)
        l = l * f.denominator // gcd(l, f.denominator)
    return [int(Fraction(x) * l) for x in row]


def _rank_bareiss(rows):
    """Fraction-free Gaussian elimination (Bareiss) over the integers."""
    rows = [row[:] for row in rows]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    rank = 0
    prev = 1
    pr = 0
    for pc in range(nc):
        piv = None
        for i in range(pr, nr):
            if rows[i][pc] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        p = rows[pr][pc]
        for i in range(pr + 1, nr):
            ri = rows[i]
            rp = rows[pr]
            c = ri[pc]
            for j in range(pc, nc):
                ri[j] = (p * ri[j] - c * rp[j]) // prev
        prev = p
        pr += 1
        rank += 1
        if pr == nr:
            break
    return rank


def _rank_gf(rows, p):
    rows = [[x % p for x in row] for row in rows]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    rank = 0
    pr = 0
    for pc in range(nc):
        piv = None
        for i in range(pr, nr):
            if rows[i][pc] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        inv = pow(rows[pr][pc], -1, p)
        rows[pr] = [x * inv % p for x in rows[pr]]
        for i in range(pr + 1, nr):
            c = rows[i][pc]
            if c:
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[pr])]
        pr += 1
        rank += 1
        if pr == nr:
            break
    return rank


class Inconsistent:
    """Returned by solve_linear when M x = rhs has no solution."""

    def __repr__(self):
        return "Inconsistent()"


def solve_linear(m, rhs):
    """Solve M x = rhs exactly; return (particular, kernel_basis) or Inconsistent.

    Columns of `rhs` are solved simultaneously; `particular` is a matrix of
    the same shape as `rhs`, kernel_basis a list of column vectors.  For
    Z_(p) the system is solved over Q and each solution entry is checked to
    be p-local (non-local solutions raise ValueError, per the ring contract).
    """
    R = m.ring
    if m.nrows != rhs.nrows:
        raise ValueError("shape mismatch")
    if isinstance(R, PLocalIntegers):
        sol = solve_linear(ExactMatrix(QQ, m.rows), ExactMatrix(QQ, rhs.rows))
        if isinstance(sol, Inconsistent):
            return sol
        part, ker = sol
        for row in part.rows:
            for x in row:
                R.coerce(x)  # raises if not p-local
        return ExactMatrix(R, part.rows), [[R.coerce(x) for x in v] for v in ker]

    work = [m.rows[i][:] + rhs.rows[i][:] for i in range(m.nrows)]
    nc = m.ncols
    pivots = []
    pr = 0
    for pc in range(nc):
        piv = None
        for i in range(pr, len(work)):
            if not R.is_zero(work[i][pc]):
                piv = i
                break
        if piv is None:
            continue
        work[pr], work[piv] = work[piv], work[pr]
        inv = R.inv(work[pr][pc])
        work[pr] = [R.mul(inv, x) for x in work[pr]]
        for i in range(len(work)):
            if i != pr and not R.is_zero(work[i][pc]):
                c = work[i][pc]
                work[i] = [R.sub(a, R.mul(c, b)) for a, b in zip(work[i], work[pr])]
        pivots.append(pc)
        pr += 1
    for i in range(pr, len(work)):
        if any(not R.is_zero(x) for x in work[i][nc:]):
            return Inconsistent()
    # particular solution: free variables set to 0
    part = ExactMatrix.zero(R, nc, rhs.ncols)
    for r, pc in enumerate(pivots):
        for j in range(rhs.ncols):
            part.rows[pc][j] = work[r][nc + j]
    free = [c for c in range(nc) if c not in set(pivots)]
    kernel = []
    for fc in free:
        v = [R.zero()] * nc
        v[fc] = R.one()
        for r, pc in enumerate(pivots):
            v[pc] = R.neg(work[r][fc])
        kernel.append(v)
    return part, kernel


def nullspace(m):
    """Kernel basis of M (list of column vectors)."""
    zero_rhs = ExactMatrix.zero(m.ring, m.nrows, 1)
    part, ker = solve_linear(m, zero_rhs)
    return ker


# ---------------------------------------------------------------------------
# sparse vectors and incremental spans


def spadd(R, v, w, c=None):
    """v + c*w for sparse dict vectors (c defaults to 1)."""
    out = dict(v)
    for k, x in w.items():
        x = x if c is None else R.mul(c, x)
        y = R.add(out.get(k, R.zero()), x)
        if R.is_zero(y):
            out.pop(k, None)
        else:
            out[k] = y
    return out


def spscale(R, c, v):
    if R.is_zero(c):
        return {}
    return {k: R.mul(c, x) for k, x in v.items()}


class Span:
    """Incremental echelon span of sparse vectors over a field.

    Pivot rows are normalized to pivot coefficient 1; `add` reduces the
    incoming vector and either absorbs it (rank grows, returns True) or
    finds it dependent (returns False).
    """

    def __init__(self, ring):
        if not ring.is_field:
            raise ValueError("Span needs a field")
        self.ring = ring
        self.pivots = {}  # pivot key -> normalized sparse row

    def reduce(self, vec):
        R = self.ring
        v = dict(vec)
        while v:
            k = min(v)
            row = self.pivots.get(k)
            if row is None:
                return v
            v = spadd(R, v, row, R.neg(v[k]))
        return v

    def add(self, vec):
        R = self.ring
        v = self.reduce(vec)
        if not v:
            return False
        k = min(v)
        v = spscale(R, R.inv(v[k]), v)
        self.pivots[k] = v
        # keep older rows reduced against the new pivot (full echelon)
        for pk, row in list(self.pivots.items()):
            if pk != k and k in row:
                self.pivots[pk] = spadd(R, row, v, R.neg(row[k]))
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.pivots)

    def copy(self):
        out = Span(self.ring)
        out.pivots = {k: dict(row) for k, row in self.pivots.items()}
        return out

    def basis(self):
        return [dict(row) for _, row in sorted(self.pivots.items())]
