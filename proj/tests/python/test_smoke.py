import pytest

import rankeq as rq


def test_field_arithmetic():
    f = rq.Field(2, 2, modulus=[1, 1, 1])
    assert f.q == 4
    assert f.mul(2, 2) == 3
    assert f.inv(3) == 2
    with pytest.raises(rq.RankeqError):
        rq.Field(6)


def test_mcre_round_trip():
    f = rq.Field(3)
    c = rq.random_code(f, 3, 4, 3, seed=5)
    q = [[1, 0, 0, 0], [2, 1, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1]]
    d = rq.mul_right(c, q)
    out = rq.solve_mcre(c, d, seed=9)
    assert out.verdict == "equivalent"
    assert rq.verify_witness(c, d, out.left, out.right)


def test_mcre_negative():
    f = rq.Field(2)
    c = rq.random_code(f, 3, 3, 2, seed=1)
    d = rq.random_code(f, 3, 3, 2, seed=2)
    assert c != d
    out = rq.solve_mcre(c, d, seed=3)
    assert out.verdict == "not_equivalent"
    assert out.left is None and out.right is None


def test_brute_oracle_agreement():
    f = rq.Field(2)
    c = rq.random_code(f, 3, 3, 3, seed=7)
    q = [[0, 1, 0], [1, 0, 0], [1, 0, 1]]
    d = rq.mul_right(c, q)
    assert rq.brute_mcre(c, d) is not None
    out = rq.solve_mcre(c, d)
    assert out.verdict == "equivalent"


def test_expansion_and_hvmce():
    f4 = rq.Field(2, 2, modulus=[1, 1, 1])
    c = rq.expand_code(f4, [[1, 2, 0, 3]], [1, 2])
    assert c.dim == 2
    assert c.m == 2 and c.n == 4
    d = rq.expand_code(f4, [[1, 2, 0, 3]], [3, 1])
    out = rq.solve_hvmce(c, d, seed=2)
    assert out.verdict == "equivalent"
    assert rq.verify_witness(c, d, out.left, out.right)


def test_stabilizers_and_profile():
    f4 = rq.Field(2, 2, modulus=[1, 1, 1])
    c = rq.expand_code(f4, [[1, 2, 3]], [1, 2])
    sl = rq.left_stabilizer(c)
    assert len(sl) == 2  # the F_4 representation
    assert rq.component_profile(c, right=False) == [(1, 2)]


def test_conductor():
    f = rq.Field(2)
    c = rq.MatrixCode(f, 2, 2, [[[1, 0], [0, 0]]])
    cond = rq.conductor(c, c)
    assert len(cond) == 3


def test_reduction():
    f = rq.Field(5)
    a = [[1, 2, 0], [0, 1, 3]]
    cc, dd, cols_a, cols_b = rq.reduce_me_to_mce(f, a, a)
    assert cc == dd
    assert cols_a == [0, 1, 2]
    assert cc.m == 5 and cc.n == 2


def test_io_round_trip(tmp_path):
    f = rq.Field(3)
    c = rq.random_code(f, 2, 3, 2, seed=11)
    path = str(tmp_path / "c.mc")
    rq.save_mcode(path, c)
    assert rq.load_mcode(path) == c
