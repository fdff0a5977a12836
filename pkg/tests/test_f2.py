import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from c2stems.f2 import (
    CompositionNonzero,
    F2Matrix,
    F2Vector,
    homology,
    kernel_of_map,
    preimage,
    rref,
    solve,
)


def brute_rank(rows, ncols):
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


def brute_kernel(m):
    out = []
    for x in range(1 << m.ncols):
        if m.matvec(F2Vector(x, m.ncols)).bits == 0:
            out.append(x)
    return out


def all_matrices(max_dim=4):
    for nr in range(0, max_dim + 1):
        for nc in range(0, max_dim + 1):
            if nr * nc > 12:
                # sample the largest shapes; smaller ones are exhaustive
                rng = random.Random(nr * 31 + nc)
                picks = rng.sample(range(1 << (nr * nc)), 2000)
            else:
                picks = range(1 << (nr * nc))
            for packed in picks:
                rows = [(packed >> (i * nc)) & ((1 << nc) - 1) for i in range(nr)]
                yield F2Matrix.from_rows(rows, nc)


def test_rref_identity():
    m = F2Matrix.identity(2)
    rank, pivots, kernel = rref(m)
    assert rank == 2
    assert pivots == [0, 1]
    assert kernel == []


def test_rref_zero_matrix():
    m = F2Matrix.zero(3, 3)
    rank, pivots, kernel = rref(m)
    assert rank == 0
    assert pivots == []
    assert sorted(v.bits for v in kernel) == [1, 2, 4]


def test_rref_against_bruteforce_exhaustive():
    for m in all_matrices():
        rank, pivots, kernel = rref(m)
        assert rank == brute_rank([r.bits for r in m.rows], m.ncols)
        assert rank + len(kernel) == m.ncols
        for v in kernel:
            assert m.matvec(v).bits == 0
        # kernel basis spans the full brute-force kernel
        span = {0}
        for v in kernel:
            span |= {s ^ v.bits for s in span}
        assert sorted(span) == brute_kernel(m)


def test_rref_idempotent():
    rng = random.Random(7)
    for _ in range(200):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = F2Matrix.from_rows([rng.getrandbits(nc) for _ in range(nr)], nc)
        rank1, pivots1, _ = rref(m)
        # reduce manually, re-run
        rows = [r.bits for r in m.rows]
        red = []
        for r in rows:
            cur = r
            for b in red:
                top = b.bit_length() - 1
                if (cur >> top) & 1:
                    cur ^= b
            if cur:
                red.append(cur)
                red.sort(key=lambda x: -x.bit_length())
        m2 = F2Matrix.from_rows(red + [0] * (nr - len(red)), nc)
        rank2, pivots2, _ = rref(m2)
        assert (rank1, pivots1) == (rank2, pivots2)


def test_solve_identity():
    m = F2Matrix.identity(4)
    v = F2Vector(0b1010, 4)
    x = solve(m, v)
    assert x is not None and m.matvec(x) == v and x == v


def test_solve_zero_matrix_nonzero_target():
    m = F2Matrix.zero(3, 3)
    assert solve(m, F2Vector(0b001, 3)) is None


def test_solve_against_bruteforce():
    rng = random.Random(3)
    for m in itertools.islice(all_matrices(), 0, None, 7):
        v = F2Vector(rng.getrandbits(m.nrows) if m.nrows else 0, m.nrows)
        x = solve(m, v)
        brute = [
            c for c in range(1 << m.ncols) if m.matvec(F2Vector(c, m.ncols)) == v
        ]
        if x is None:
            assert brute == []
        else:
            assert m.matvec(x) == v
            assert x.bits in brute


def test_preimage_map_convention():
    # rows-as-images map: e0 -> (1,1), e1 -> (0,1)
    m = F2Matrix.from_rows([0b11, 0b10], 2)
    x = preimage(m, F2Vector(0b01, 2))
    assert x is not None and m.apply(x) == F2Vector(0b01, 2)
    assert kernel_of_map(m) == []


def test_homology_no_differentials():
    d_in = F2Matrix.zero(0, 3)
    d_out = F2Matrix.zero(3, 0)
    sq = homology(d_in, d_out)
    assert sq.dim == 3
    assert [v.bits for v in sq.quotient_reps] == [1, 2, 4]


def test_homology_everything_bounded():
    d_in = F2Matrix.identity(3)
    d_out = F2Matrix.zero(3, 0)
    sq = homology(d_in, d_out)
    assert sq.dim == 0


def test_homology_composition_nonzero():
    d_in = F2Matrix.identity(2)
    d_out = F2Matrix.identity(2)
    with pytest.raises(CompositionNonzero):
        homology(d_in, d_out)


def brute_subquotient_dim(d_in, d_out):
    cycles = [
        x for x in range(1 << d_out.nrows) if d_out.apply(F2Vector(x, d_out.nrows)).bits == 0
    ]
    bspan = {0}
    for r in d_in.rows:
        bspan |= {s ^ r.bits for s in bspan}
    return (len(cycles).bit_length() - 1) - (len(bspan).bit_length() - 1)


def test_homology_against_bruteforce_random():
    rng = random.Random(11)
    trials = 0
    while trials < 400:
        a, b, c = rng.randint(0, 4), rng.randint(1, 4), rng.randint(0, 4)
        d_out = F2Matrix.from_rows([rng.getrandbits(c) for _ in range(b)], c)
        # build d_in rows inside ker(d_out) so composition vanishes
        kb = kernel_of_map(d_out)
        rows = []
        for _ in range(a):
            bits = 0
            for v in kb:
                if rng.random() < 0.5:
                    bits ^= v.bits
            rows.append(bits)
        d_in = F2Matrix.from_rows(rows, b)
        sq = homology(d_in, d_out)
        assert sq.dim == brute_subquotient_dim(d_in, d_out)
        # rank-nullity per call
        rank, _, kernel = rref(d_out)
        assert rank + len(kernel) == d_out.ncols
        trials += 1


def test_homology_dim_independent_of_basis_permutation():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 5)
        d_out = F2Matrix.from_rows([rng.getrandbits(3) for _ in range(n)], 3)
        kb = kernel_of_map(d_out)
        rows = [kb[0].bits] if kb else []
        d_in = F2Matrix.from_rows(rows, n)
        base = homology(d_in, d_out).dim
        perm = list(range(n))
        rng.shuffle(perm)
        pm = F2Matrix.from_rows(
            [sum(((r.bits >> perm[i]) & 1) << i for i in range(n)) for r in d_in.rows], n
        )
        po = F2Matrix(tuple(d_out.rows[perm[i]] for i in range(n)), d_out.ncols)
        assert homology(pm, po).dim == base


@settings(max_examples=200)
@given(st.integers(1, 6), st.data())
def test_rank_nullity_property(ncols, data):
    nrows = data.draw(st.integers(0, 6))
    rows = [data.draw(st.integers(0, (1 << ncols) - 1)) for _ in range(nrows)]
    m = F2Matrix.from_rows(rows, ncols)
    rank, _, kernel = rref(m)
    assert rank + len(kernel) == ncols
