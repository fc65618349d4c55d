from fractions import Fraction

import pytest

from superalg import catalog as cat
from superalg import combin as cb
from superalg import superalgebra as sa
from superalg.rings import QQ, PrimeField


def test_clifford_rank_and_relations():
    c3 = cat.clifford(3)
    assert c3.rank == 8
    c3.check_unit()
    c3.check_associative()
    c3.check_bidegrees()
    # c_r^2 = 1, c_r c_s = -c_s c_r
    for r in range(3):
        sq = c3.mul_basis(c3.index[1 << r], c3.index[1 << r])
        assert sq == {c3.index[0]: QQ.one()}
    for r in range(3):
        for s in range(3):
            if r != s:
                ab = c3.mul_basis(c3.index[1 << r], c3.index[1 << s])
                ba = c3.mul_basis(c3.index[1 << s], c3.index[1 << r])
                assert ab == {k: QQ.neg(v) for k, v in ba.items()}


def test_twisted_relations():
    t3 = cat.twisted_sym(3)
    t3.check_unit()
    t3.check_associative()
    s1 = t3.basis_element(cb.transposition(3, 1))
    s2 = t3.basis_element(cb.transposition(3, 2))
    sq = t3.multiply(s1, s1)
    assert sq == t3.one()
    # (t_1 t_2)^3 = 1
    x = t3.multiply(s1, s2)
    cube = t3.multiply(x, t3.multiply(x, x))
    assert cube == t3.one()


def test_twisted_distant_anticommute():
    t4 = cat.twisted_sym(4)
    s1 = t4.basis_element(cb.transposition(4, 1))
    s3 = t4.basis_element(cb.transposition(4, 3))
    ab = t4.multiply(s1, s3)
    ba = t4.multiply(s3, s1)
    assert ab == {k: QQ.neg(v) for k, v in ba.items()}
    t4.check_associative()


def test_twisted_basis_parity():
    t3 = cat.twisted_sym(3)
    for i, w in enumerate(t3.labels):
        assert t3.parity(i) == cb.length(w) % 2


def test_hecke_quadratic_relation():
    q = Fraction(2)
    h2 = cat.hecke(2, q)
    xi = QQ.sub(q, QQ.inv(q))
    t1 = h2.basis_element(cb.transposition(2, 1))
    sq = h2.multiply(t1, t1)
    expect = h2.add(h2.one(), h2.scale(xi, t1))
    assert sq == expect


def test_hecke_braid_and_assoc():
    h3 = cat.hecke(3, 2)
    h3.check_unit()
    h3.check_associative()
    s1 = h3.basis_element(cb.transposition(3, 1))
    s2 = h3.basis_element(cb.transposition(3, 2))
    lhs = h3.multiply(s1, h3.multiply(s2, s1))
    rhs = h3.multiply(s2, h3.multiply(s1, s2))
    assert lhs == rhs
    with pytest.raises(ValueError):
        cat.hecke(2, 1)


def test_hecke_form_orthogonality():
    # t(T_g T_h) = delta_{g, h^{-1}}
    h3 = cat.hecke(3, 2)
    t = cat.hecke_form(h3)
    for i, g in enumerate(h3.labels):
        for j, h in enumerate(h3.labels):
            prod = h3.mul_basis(i, j)
            val = QQ.zero()
            for k, c in prod.items():
                val = QQ.add(val, QQ.mul(c, t.get(k, QQ.zero())))
            assert val == (QQ.one() if cb.compose(g, h) == cb.identity_perm(3) else QQ.zero())


def test_olshanski_relations():
    y2 = cat.olshanski(2, 2)
    assert y2.rank == 2 * 4
    y2.check_unit()
    y2.check_associative()
    y2.check_bidegrees()
    ident = cb.identity_perm(2)
    s = cb.transposition(2, 1)
    T1 = y2.basis_element((s, 0))
    c1 = y2.basis_element((ident, 1))
    c2 = y2.basis_element((ident, 2))
    # T_1 c_1 = c_2 T_1
    assert y2.multiply(T1, c1) == y2.multiply(c2, T1)
    # Clifford inside: c_1 c_2 = -c_2 c_1
    assert y2.multiply(c1, c2) == y2.scale(QQ.coerce(-1), y2.multiply(c2, c1))
    # Hecke quadratic
    xi = QQ.sub(QQ.coerce(2), QQ.inv(QQ.coerce(2)))
    assert y2.multiply(T1, T1) == y2.add(y2.one(), y2.scale(xi, T1))


def test_olshanski3_assoc():
    y3 = cat.olshanski(3, 2)
    assert y3.rank == 6 * 8
    y3.check_unit()
    y3.check_bidegrees()
    # full associativity is covered by the acceptance sweep; spot-check here
    import random
    rng = random.Random(0)
    triples = [(rng.randrange(y3.rank), rng.randrange(y3.rank), rng.randrange(y3.rank))
               for _ in range(300)]
    y3.check_associative(triples)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_clifford_symmetrizing(n):
    c = cat.clifford(n)
    rep = sa.validate_symmetrizing(c, cat.clifford_form(c))
    assert rep["ok"], rep["failures"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_twisted_symmetrizing(n):
    t = cat.twisted_sym(n)
    rep = sa.validate_symmetrizing(t, cat.twisted_form(t))
    assert rep["ok"], rep["failures"]


def test_hecke_symmetrizing():
    for n in (2, 3, 4):
        h = cat.hecke(n, 2)
        rep = sa.validate_symmetrizing(h, cat.hecke_form(h))
        assert rep["ok"], rep["failures"]


def test_olshanski_symmetrizing():
    for n in (2, 3):
        y = cat.olshanski(n, 2)
        rep = sa.validate_symmetrizing(y, cat.olshanski_form(y))
        assert rep["ok"], rep["failures"]


def test_symmetricity_preserved_by_sop_and_regrade():
    # Lemma-level checks: sop preserves symmetricity with the same form
    for alg, form in [(cat.clifford(2), None), (cat.twisted_sym(3), None)]:
        t = cat.clifford_form(alg) if alg.name.startswith("Clifford") else cat.twisted_form(alg)
        op = sa.opposite(alg)
        rep = sa.validate_symmetrizing(op, sa.transport_form_opposite(alg, t))
        assert rep["ok"], rep["failures"]


def test_tensor_with_clifford_symmetric():
    # A symmetric => A @ C_1 symmetric with the product form
    t3 = cat.twisted_sym(3)
    c1 = cat.clifford(1)
    prod = sa.tensor(t3, c1)
    form = sa.tensor_form(t3, cat.twisted_form(t3), c1, cat.clifford_form(c1))
    rep = sa.validate_symmetrizing(prod, form)
    assert rep["ok"], rep["failures"]


def test_wreath_clifford_symmetrizing():
    # Y_n = W_n(C_1) with t(g @ c^eps) = delta_{g,1} delta_{eps,0}
    y2 = sa.wreath(cat.clifford(1), 2)
    ident = cb.identity_perm(2)
    t = {y2.index[((0, 0), ident)]: QQ.one()}
    rep = sa.validate_symmetrizing(y2, t)
    assert rep["ok"], rep["failures"]
