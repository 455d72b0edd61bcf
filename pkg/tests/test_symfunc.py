from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sixvertex.algebra import VarTable, exact_div, format_polynomial, product
from sixvertex.combinatorics import (
    enumerate_chains,
    lambda_of_x,
    partitions_in_box,
    strict_partitions,
    x_of_lambda,
)
from sixvertex.symfunc import (
    SchurContext,
    beta_pair_product,
    cauchy_sides,
    chain_weight,
    combinatorial_chain_sum,
    is_symmetric,
    schur_bialternant,
    schur_combinatorial,
    schur_q,
    skew_q,
    skew_q_single,
    specialize_beta,
)


def _monomial_schur(lam, ctx):
    """Oracle: s_lambda as a sum over semistandard tableaux, built by
    brute-force filling of the Young diagram."""
    N = ctx.N
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    total = ctx.table.zero()

    def fill(i, tab):
        nonlocal total
        if i == len(cells):
            counts = [0] * N
            for v in tab.values():
                counts[v] += 1
            total = total + product((ctx.z[k] ** counts[k] for k in range(N)), ctx.table)
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = tab[(r, c - 1)]
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for v in range(lo, N):
            tab[(r, c)] = v
            fill(i + 1, tab)
            del tab[(r, c)]

    fill(0, {})
    return total


def test_schur_of_single_box():
    ctx = SchurContext.create(2)
    assert format_polynomial(schur_bialternant((1, 0), ctx)) == "z1 + z2"


def test_schur_of_three_one():
    ctx = SchurContext.create(2)
    assert format_polynomial(schur_bialternant((3, 1), ctx)) == "z1^3*z2 + z1^2*z2^2 + z1*z2^3"


@pytest.mark.parametrize("N,width", [(1, 3), (2, 2), (3, 2), (2, 3)])
def test_bialternant_matches_tableaux(N, width):
    ctx = SchurContext.create(N, beta=0)
    for lam in partitions_in_box(N, width):
        assert schur_bialternant(lam, ctx) == _monomial_schur(lam, ctx)


@pytest.mark.parametrize("M,N", [(3, 1), (4, 2), (5, 2), (5, 3)])
def test_combinatorial_formula_symbolic_in_beta(M, N):
    ctx = SchurContext.create(N)
    for lam in partitions_in_box(N, M - N):
        assert schur_combinatorial(lam, ctx) == schur_bialternant(lam, ctx)


def test_three_chain_weights_for_one_box():
    ctx = SchurContext.create(2)
    z1, z2, beta = ctx.z[0], ctx.z[1], ctx.beta
    chains = enumerate_chains(x_of_lambda((1, 0), 2))
    assert len(chains) == 3
    lift = 1 + 2 * beta * z2
    # clear the single possible (1 + 2 beta z2) denominator
    cleared = [num * lift ** (1 - dens[1]) for num, dens in (chain_weight(c, ctx) for c in chains)]
    assert sum(cleared[1:], cleared[0]) == (z1 + z2 + 2 * beta * z1 * z2) * (z1 + z2) * lift


def test_chain_sum_equals_pair_product_times_schur():
    ctx = SchurContext.create(3)
    lam = (2, 1, 0)
    assert combinatorial_chain_sum(lam, ctx) == beta_pair_product(ctx.z, ctx.beta, ctx.table) * schur_bialternant(lam, ctx)


def test_specialized_beta_still_agrees():
    ctx = SchurContext.create(2, beta="3/2")
    for lam in partitions_in_box(2, 3):
        assert schur_combinatorial(lam, ctx) == schur_bialternant(lam, ctx)


@pytest.mark.parametrize("N,m", [(1, 3), (2, 4), (3, 4)])
def test_schur_q_factorization(N, m):
    ctx = SchurContext.create(N, beta=0)
    pairs = product((ctx.z[j] + ctx.z[k] for j in range(N) for k in range(j + 1, N)), ctx.table)
    mono = product(ctx.z, ctx.table)
    for x in strict_partitions(N, m):
        lam = lambda_of_x(x, N)
        assert schur_q(x, ctx) == 2**N * mono * pairs * schur_bialternant(lam, ctx)


def test_one_variable_skew_q():
    t = VarTable(["z"])
    z = t.var("z")
    assert skew_q_single((5, 4, 1), (4, 3), z) == 4 * z**3
    assert skew_q_single((5, 4, 1), (3, 2), z) == t.zero()
    assert skew_q_single((3,), (), z) == 2 * z**3


def test_skew_q_with_empty_inner_is_q():
    ctx = SchurContext.create(2, beta=0)
    for x in strict_partitions(2, 4):
        assert skew_q(x, (), list(ctx.z)) == schur_q(x, ctx)


@pytest.mark.parametrize("M,N", [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (5, 2)])
def test_cauchy_identity(M, N):
    assert cauchy_sides(M, N).holds


@pytest.mark.parametrize("M,N", [(3, 2), (4, 2)])
def test_cauchy_literal_entry_fails(M, N):
    assert not cauchy_sides(M, N, "yj").holds


def test_cauchy_literal_entry_agrees_for_one_variable():
    assert cauchy_sides(3, 1, "yj").holds


def test_cauchy_rejects_bad_sizes():
    with pytest.raises(ValueError):
        cauchy_sides(2, 3)
    with pytest.raises(ValueError):
        cauchy_sides(3, 2, "yi")


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.data())
def test_schur_is_symmetric(N, data):
    ctx = SchurContext.create(N)
    lam = data.draw(st.sampled_from(list(partitions_in_box(N, 3))))
    s = schur_combinatorial(lam, ctx)
    assert is_symmetric(s, [f"z{j}" for j in range(1, N + 1)])
    assert s.degree("beta") == 0
    assert s.is_zero() or s.total_degree() == sum(lam)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.data())
def test_skew_q_is_symmetric(k, data):
    t = VarTable([f"z{j}" for j in range(1, k + 1)])
    zs = [t.var(f"z{j}") for j in range(1, k + 1)]
    inner = data.draw(st.sampled_from(list(strict_partitions(1, 3)) + [()]))
    outers = [y for y in strict_partitions(len(inner) + k, 5)]
    y = data.draw(st.sampled_from(outers))
    q = skew_q(y, inner, zs)
    for perm in permutations(range(k)):
        assert q.subs({f"z{j + 1}": zs[perm[j]] for j in range(k)}) == q


def test_specialize_beta_on_beta_free_table():
    t = VarTable(["z1"])
    p = t.var("z1") + 1
    assert specialize_beta(p, 5) == p


def test_pair_product_divides_chain_sum():
    ctx = SchurContext.create(2)
    total = combinatorial_chain_sum((2, 1), ctx)
    assert exact_div(total, beta_pair_product(ctx.z, ctx.beta, ctx.table)).degree("beta") == 0
