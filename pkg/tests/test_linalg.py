import random

import numpy as np

from agraded.linalg import (
    RowSpan,
    SparseEchelon,
    inv_mod_p,
    kernel_dim,
    rank_and_basis,
    rank_mod_p,
)

P = 101


def test_rank_hand_cases():
    assert rank_mod_p([[1, 2], [2, 4]], P) == 1
    assert rank_mod_p([[1, 0], [0, 1]], P) == 2
    assert rank_mod_p([[0, 0]], P) == 0
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), P) == 0


def test_rank_depends_on_characteristic():
    # [[1,2],[3,6]] is singular everywhere, [[1,2],[2,1]] only mod 3
    assert rank_mod_p([[1, 2], [2, 1]], 3) == 1
    assert rank_mod_p([[1, 2], [2, 1]], 5) == 2


def test_rank_of_random_products():
    # rank(A @ B) with A (n x r), B (r x n) random is r almost surely
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randrange(3, 7)
        r = rng.randrange(1, n)
        a = np.array([[rng.randrange(P) for _ in range(r)] for _ in range(n)], dtype=np.int64)
        b = np.array([[rng.randrange(P) for _ in range(n)] for _ in range(r)], dtype=np.int64)
        m = (a @ b) % P
        assert rank_mod_p(m, P) <= r
        assert rank_mod_p(m, P) == min(rank_mod_p(a, P), rank_mod_p(b, P))


def test_kernel_dim_rank_nullity():
    rng = random.Random(7)
    for _ in range(20):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        m = [[rng.randrange(P) for _ in range(cols)] for _ in range(rows)]
        assert rank_mod_p(m, P) + kernel_dim(m, P) == cols


def test_inv_mod_p():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randrange(1, 5)
        while True:
            m = np.array([[rng.randrange(P) for _ in range(n)] for _ in range(n)], dtype=np.int64)
            if rank_mod_p(m, P) == n:
                break
        inv = inv_mod_p(m, P)
        assert ((m @ inv) % P == np.eye(n, dtype=np.int64)).all()


def test_row_span_membership():
    span = RowSpan([[1, 2, 3], [0, 1, 1]], P)
    assert span.rank == 2
    assert span.contains([1, 2, 3])
    assert span.contains([2, 5, 7])  # row0 + row1
    assert not span.contains([1, 0, 0])
    assert span.contains([0, 0, 0])


def test_sparse_echelon_matches_dense_rank():
    rng = random.Random(19)
    for _ in range(20):
        rows = rng.randrange(1, 8)
        cols = rng.randrange(1, 8)
        dense = [[0] * cols for _ in range(rows)]
        ech = SparseEchelon(P)
        for i in range(rows):
            vec = {}
            for j in range(cols):
                if rng.random() < 0.4:
                    c = rng.randrange(1, P)
                    vec[j] = c
                    dense[i][j] = c
            ech.insert(vec)
        assert ech.rank == rank_mod_p(dense, P)


def test_sparse_echelon_reduce_is_normal_form():
    ech = SparseEchelon(P)
    ech.insert({0: 1, 2: 5})
    ech.insert({1: 1})
    # reduce eliminates every pivot index from the support
    red = ech.reduce({0: 3, 1: 4, 2: 1, 3: 9})
    assert 0 not in red and 1 not in red
    assert red[3] == 9
    # membership: reduce of a span element is empty
    assert ech.reduce({0: 2, 2: 10}) == {}


def test_rank_and_basis_pivots():
    rank, basis, pivots = rank_and_basis([[0, 1, 2], [0, 2, 4], [1, 0, 0]], P)
    assert rank == 2
    assert len(pivots) == 2
    assert basis.shape == (2, 3)
