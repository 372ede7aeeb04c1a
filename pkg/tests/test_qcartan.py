import pytest

from qaffine.qcartan import ade_quiver, ctilde_formula, ctilde_oracle, ctilde_oracle_for


def delta(*ks):
    return lambda k: int(k in ks)


def test_coxeter_numbers():
    assert ade_quiver("A", 4).h == 5
    assert ade_quiver("D", 5).h == 8
    assert ade_quiver("E", 6).h == 12
    assert ade_quiver("E", 7).h == 18
    assert ade_quiver("E", 8).h == 30


def test_tau_words():
    assert ade_quiver("A", 5).tau_word == (1, 2, 3, 4, 5)
    assert ade_quiver("D", 5).tau_word == (1, 2, 3, 4, 5)
    assert ade_quiver("E", 6).tau_word == (1, 2, 3, 4, 5, 6)


def test_gamma_vectors():
    d = ade_quiver("D", 5)
    assert d.gamma[3] == (1, 1, 1, 0, 0)
    assert d.gamma[5] == (1, 1, 1, 0, 1)
    e = ade_quiver("E", 6)
    assert e.gamma[2] == (0, 1, 0, 0, 0, 0)
    assert e.gamma[3] == (1, 0, 1, 0, 0, 0)
    assert e.gamma[6] == (1, 1, 1, 1, 1, 1)


def test_type_a_ctilde():
    # paper-quoted: ctilde_{1,1}(2k+1) = delta_{k,0} for type A
    for n in (2, 3, 5):
        d = ade_quiver("A", n)
        assert ctilde_formula(d, 1, 1, 1) == 1
        for k in range(1, d.h):
            expected = int(k == 1)
            assert ctilde_formula(d, 1, 1, k) == expected


def test_type_d_ctilde_11():
    for n in (4, 5, 6):
        d = ade_quiver("D", n)
        for k in range(1, d.h):
            assert ctilde_formula(d, 1, 1, k) == delta(1, 2 * n - 3)(k)


def test_type_e6_ctilde():
    d = ade_quiver("E", 6)
    for k in range(1, 12):
        assert ctilde_formula(d, 1, 1, k) == delta(1, 7)(k)
        assert ctilde_formula(d, 1, 2, k) == delta(4, 8)(k)


def test_type_e7_ctilde():
    d = ade_quiver("E", 7)
    for k in range(1, 18):
        assert ctilde_formula(d, 1, 1, k) == delta(1, 7, 11, 17)(k)
        assert ctilde_formula(d, 1, 2, k) == delta(4, 8, 10, 14)(k)
        assert ctilde_formula(d, 7, 1, k) == delta(6, 12)(k)
        assert ctilde_formula(d, 7, 2, k) == delta(5, 9, 13)(k)
        assert ctilde_formula(d, 7, 7, k) == delta(1, 9, 17)(k)


def test_type_e8_ctilde():
    d = ade_quiver("E", 8)
    for k in range(1, 30):
        assert ctilde_formula(d, 1, 1, k) == delta(1, 7, 11, 13, 17, 19, 23, 29)(k)
        assert ctilde_formula(d, 1, 2, k) == delta(4, 8, 10, 12, 14, 16, 18, 20, 22, 26)(k)
        assert ctilde_formula(d, 8, 1, k) == delta(7, 13, 17, 23)(k)
        assert ctilde_formula(d, 8, 2, k) == delta(6, 10, 14, 16, 20, 24)(k)
        assert ctilde_formula(d, 8, 8, k) == delta(1, 11, 19, 29)(k)


def test_oracle_a2():
    d = ade_quiver("A", 2)
    table = ctilde_oracle(d.rs.cartan, 8)
    assert table.get(1, 2, 2) == 1
    assert table.get(1, 1, 1) == 1
    assert table.get(1, 1, 0) == 0
    assert table.get(2, 1, 0) == 0
    with pytest.raises(ValueError):
        table.get(1, 1, 9)


def test_oracle_equals_formula_small():
    for letter, rank in (("A", 1), ("A", 3), ("D", 4), ("E", 6)):
        d = ade_quiver(letter, rank)
        table = ctilde_oracle_for(letter, rank)
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                for k in range(0, 2 * d.h + 1):
                    assert table.get(i, j, k) == ctilde_formula(d, i, j, k), (letter, rank, i, j, k)


def test_ctilde_symmetry_and_signs():
    for letter, rank in (("A", 4), ("D", 5), ("E", 7)):
        d = ade_quiver(letter, rank)
        h = d.h
        for i in range(1, rank + 1):
            assert ctilde_formula(d, i, i, 1) == 1
            for j in range(1, rank + 1):
                for k in range(1, h):
                    assert ctilde_formula(d, i, j, k) >= 0
                    assert ctilde_formula(d, i, j, k) == ctilde_formula(d, j, i, k)
                    # quasi-periodicity used in the ADE Lambda-infinity identity
                    assert ctilde_formula(d, i, j, h + k) == -ctilde_formula(d, i, j, h - k)
                    assert ctilde_formula(d, i, j, h + k) == -ctilde_formula(d, d.rs.istar(j), i, k)
