import numpy as np
import pytest

from prism_silt.algebra.ideals import (
    generated_by,
    ideal_as_module,
    ideal_generated,
    ideal_of_word,
    ideal_product,
    whole_algebra,
)
from prism_silt.algebra.modules import direct_sum, iso_test, projective


def test_vertex_ideal_dims(pi):
    alg = pi(2)
    i1 = ideal_generated(alg, 1)
    assert i1.dim == 3 and i1.is_two_sided()
    # A / I_i is the simple at i, one-dimensional
    for n in range(1, 5):
        for i in range(1, n + 1):
            assert ideal_generated(pi(n), i).dim == pi(n).dim - 1


def test_products(pi):
    alg = pi(2)
    i1, i2 = ideal_generated(alg, 1), ideal_generated(alg, 2)
    prod = ideal_product(i1, i2)
    assert prod.dim == 1 and prod.is_two_sided()
    assert ideal_as_module(prod).dims == (1, 0)
    assert ideal_product(prod, i1).dim == 0
    assert ideal_of_word(alg, (1, 2, 1)).dim == 0


def test_idempotent(pi):
    # I_i^2 = I_i
    alg = pi(3)
    for i in range(1, 4):
        ii = ideal_generated(alg, i)
        assert ideal_product(ii, ii) == ii


def test_braid_relation(pi):
    alg = pi(3)
    assert ideal_of_word(alg, (1, 2, 1)) == ideal_of_word(alg, (2, 1, 2))
    assert ideal_of_word(alg, (1, 3)) == ideal_of_word(alg, (3, 1))


def test_empty_word(pi):
    alg = pi(2)
    assert ideal_of_word(alg, ()) == whole_algebra(alg)


@pytest.mark.parametrize("n", range(1, 6))
def test_whole_algebra_module(n, pi):
    alg = pi(n)
    reg, _ = direct_sum([projective(alg, i) for i in range(1, n + 1)], alg)
    assert iso_test(ideal_as_module(whole_algebra(alg)), reg).isomorphic


def test_generated_by_zero(pi):
    alg = pi(2)
    assert generated_by(alg, [np.zeros(alg.dim, dtype=np.int64)]).dim == 0


def test_bad_vertex(pi):
    with pytest.raises(ValueError):
        ideal_generated(pi(2), 3)
