from fractions import Fraction
from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sixvertex.algebra import exact_div
from sixvertex.combinatorics import occupation_to_strict
from sixvertex.lattice import (
    ROW_AUX,
    TILDE,
    ZFORM,
    LatticeConfig,
    LatticeConfigError,
    NotOnShell,
    StateVector,
    apply_row,
    apply_word,
    b_element_generic,
    b_element_minus_one,
    c_element_minus_one,
    check_eigenstate,
    commutes,
    create_state,
    dual_wavefunction,
    dual_wavefunction_closed,
    dual_wavefunction_closed_value,
    element_in_z,
    exchange_relations,
    l_entry,
    matrix_element,
    matrix_element_B,
    matrix_element_C,
    v_of_z,
    wavefunction,
    wavefunction_closed,
    z_of_v,
)
from sixvertex.suites import occupations
from sixvertex.symfunc import beta_pair_product, skew_q_single


def _path_sum(kind, bra, ket, x, cfg):
    """Oracle: sum over every auxiliary path of the product of L entries,
    without the site-by-site contraction used by the library."""
    a_in, a_out = ROW_AUX[kind]
    M = cfg.M
    total = cfg.table.zero()
    for mids in cartesian((0, 1), repeat=M - 1):
        aux = (a_in,) + mids + (a_out,)
        term = cfg.table.one()
        for j in range(M):
            term = term * l_entry(cfg, x, ket[j], bra[j], aux[j], aux[j + 1], site=j + 1)
            if term.is_zero():
                break
        total = total + term
    return total


# -- L-operator entries ----------------------------------------------------------


def test_generic_l_entries():
    cfg = LatticeConfig.create(1, ["v"], t="formal")
    v, t, beta = cfg.var("v"), cfg.t, cfg.beta
    for n in range(3):
        assert l_entry(cfg, v, n, n, 1, 1) == v
        assert l_entry(cfg, v, n, n + 1, 1, 0) == v * (1 - t ** (n + 1))
        assert l_entry(cfg, v, n, n, 0, 0) == 1 - beta * v * t**n
    assert l_entry(cfg, v, 2, 1, 0, 1) == cfg.table.one()
    assert l_entry(cfg, v, 0, 1, 0, 1).is_zero()


def test_tilde_l_entries():
    cfg = LatticeConfig.create(1, ["z"], normalization=TILDE)
    z, beta = cfg.var("z"), cfg.beta
    assert l_entry(cfg, z, 0, 0, 0, 0) == cfg.table.one()
    assert l_entry(cfg, z, 1, 1, 0, 0) == 1 + 2 * beta * z
    assert l_entry(cfg, z, 1, 0, 0, 1) == 1 + beta * z
    assert l_entry(cfg, z, 0, 1, 1, 0) == 2 * z
    assert l_entry(cfg, z, 0, 0, 1, 1) == z
    assert l_entry(cfg, z, 1, 1, 1, 1) == z


def test_tilde_is_scaled_original_at_minus_one():
    tilde = LatticeConfig.create(1, ["z"], normalization=TILDE)
    z, beta = tilde.var("z"), tilde.beta
    for n_in, n_out, a_in, a_out in cartesian((0, 1), repeat=4):
        o = l_entry(LatticeConfig.create(1, ["z"]), "z", n_in, n_out, a_in, a_out)
        # each original entry is affine in v; substitute v = z/(1 + beta z) and clear
        const = o.evaluate({"z": 0})
        slope = o.evaluate({"z": 1}) - const
        assert l_entry(tilde, z, n_in, n_out, a_in, a_out) == const * (1 + beta * z) + slope * z


def test_zform_denominator():
    cfg = LatticeConfig.create(2, ["z"], normalization=ZFORM)
    z = cfg.var("z")
    state = apply_row("B", z, StateVector.vacuum(cfg), cfg)
    assert state.denominator == (1 + cfg.beta * z) ** 2


def test_structural_errors():
    with pytest.raises(LatticeConfigError):
        LatticeConfig.create(2, ["z"], t="formal", normalization=TILDE)
    with pytest.raises(LatticeConfigError):
        LatticeConfig.create(0)
    with pytest.raises(LatticeConfigError):
        LatticeConfig.create(2, ["z"], normalization=TILDE, inhomogeneities="formal")


def test_generic_cap_is_a_configuration_error():
    cfg = LatticeConfig.create(1, ["v"], t="formal", cap=1)
    one = apply_row("B", cfg.var("v"), StateVector.vacuum(cfg), cfg)
    with pytest.raises(LatticeConfigError):
        apply_row("B", cfg.var("v"), one, cfg)


# -- row operators -----------------------------------------------------------------


def test_single_site_creation():
    cfg = LatticeConfig.create(1, ["v"])
    out = apply_row("B", cfg.var("v"), StateVector.vacuum(cfg), cfg)
    assert dict(out) == {(1,): 2 * cfg.var("v")}


def test_a_on_vacuum_is_vacuum_eigenvalue():
    cfg = LatticeConfig.create(3, ["v"], inhomogeneities="formal")
    v, beta = cfg.var("v"), cfg.beta
    ws = [cfg.var(f"w{j}") for j in range(1, 4)]
    out = apply_row("A", v, StateVector.vacuum(cfg), cfg)
    a = 1
    den = 1
    for w in ws:
        a = (w - beta * v) * a
        den = w * den
    assert out.cross_equal(StateVector(cfg.table, {(0, 0, 0): a}, den))


def test_d_on_vacuum():
    cfg = LatticeConfig.create(3, ["v"])
    v = cfg.var("v")
    out = apply_row("D", v, StateVector.vacuum(cfg), cfg)
    assert dict(out) == {(0, 0, 0): v**3}


@pytest.mark.parametrize("kind", ["A", "B", "C", "D"])
@pytest.mark.parametrize("M", [1, 2, 3])
def test_contraction_matches_path_sum_generic(kind, M):
    cfg = LatticeConfig.create(M, ["v"], t="formal", cap=2)
    v = cfg.var("v")
    states = list(cartesian(range(3), repeat=M))
    for ket in states:
        for bra in states:
            try:
                direct = matrix_element(kind, bra, ket, v, cfg)
            except LatticeConfigError:
                continue
            assert direct == _path_sum(kind, bra, ket, v, cfg)


@pytest.mark.parametrize("kind", ["A", "B", "C", "D"])
def test_contraction_matches_path_sum_tilde(kind):
    cfg = LatticeConfig.create(4, ["z"], normalization=TILDE)
    z = cfg.var("z")
    states = list(cartesian((0, 1), repeat=4))
    for ket in states:
        for bra in states:
            assert matrix_element(kind, bra, ket, z, cfg) == _path_sum(kind, bra, ket, z, cfg)


def test_apply_word_order():
    cfg = LatticeConfig.create(2, ["u", "v"])
    u, v = cfg.var("u"), cfg.var("v")
    vac = StateVector.vacuum(cfg)
    word = apply_word([("C", u), ("B", v)], vac, cfg)
    stepwise = apply_row("C", u, apply_row("B", v, vac, cfg), cfg)
    assert word == stepwise


# -- matrix elements ---------------------------------------------------------------


def test_worked_t_minus_one_element():
    cfg = LatticeConfig.create(5, ["z"], normalization=TILDE)
    z, beta = cfg.var("z"), cfg.beta
    m, n = (1, 0, 0, 1, 1), (0, 0, 1, 1, 0)
    direct = element_in_z("B", m, n, z, cfg)
    # 2^2 z^3 (1 + beta z)^-4, i.e. 4 z^3 (1 + beta z) over (1 + beta z)^5
    assert direct.num == 4 * z**3 * (1 + beta * z)
    assert direct.den == (1 + beta * z) ** 5
    closed = b_element_minus_one(m, n, z, beta)
    assert closed.equals(direct)
    assert closed.num * (1 + beta * z) ** 4 == 4 * z**3 * closed.den


def test_non_admissible_is_zero():
    cfg = LatticeConfig.create(3, ["z"], normalization=TILDE)
    z = cfg.var("z")
    assert matrix_element_B((1, 1, 0), (0, 0, 1), z, cfg).is_zero()
    assert b_element_minus_one((1, 1, 0), (0, 0, 1), z, cfg.beta).num.is_zero()


@pytest.mark.parametrize("M", [1, 2, 3, 4, 5])
def test_t_minus_one_closed_forms(M):
    cfg = LatticeConfig.create(M, ["z"], normalization=TILDE)
    z = cfg.var("z")
    for N in range(M):
        for n in occupations(M, N):
            for m in occupations(M, N + 1):
                assert element_in_z("B", m, n, z, cfg).equals(b_element_minus_one(m, n, z, cfg.beta))
                assert element_in_z("C", n, m, z, cfg).equals(c_element_minus_one(n, m, z, cfg.beta))


def test_single_site_c_element():
    cfg = LatticeConfig.create(1, ["v"])
    assert matrix_element_C((0,), (1,), cfg.var("v"), cfg) == cfg.table.one()
    tcfg = LatticeConfig.create(1, ["z"], normalization=TILDE)
    z = tcfg.var("z")
    assert c_element_minus_one((0,), (1,), z, tcfg.beta).equals(element_in_z("C", (0,), (1,), z, tcfg))


@pytest.mark.parametrize("M,N", [(1, 0), (2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1)])
def test_generic_t_closed_form(M, N):
    cfg = LatticeConfig.create(M, ["v"], t="formal")
    v = cfg.var("v")
    for n in occupations(M, N, N):
        for m in occupations(M, N + 1, N + 1):
            assert matrix_element_B(m, n, v, cfg) == b_element_generic(m, n, v, cfg.t, cfg.beta)


def test_beta_zero_gives_skew_q():
    cfg = LatticeConfig.create(4, ["z"], beta=0, normalization=TILDE)
    z = cfg.var("z")
    for N in range(4):
        for n in occupations(4, N):
            for m in occupations(4, N + 1):
                y, x = occupation_to_strict(m), occupation_to_strict(n)
                assert matrix_element_B(m, n, z, cfg) == skew_q_single(y, x, z)


def test_variable_change_round_trip():
    for v, beta in ((Fraction(1, 3), 2), (Fraction(-2, 5), Fraction(1, 2))):
        assert v_of_z(z_of_v(v, beta), beta) == v


# -- wavefunctions -----------------------------------------------------------------


def test_two_by_two_wavefunction():
    cfg = LatticeConfig.create(2, ["z1", "z2"], normalization=TILDE)
    z1, z2, beta = cfg.var("z1"), cfg.var("z2"), cfg.beta
    expected = 4 * z1 * z2 * (z1 + z2 + 2 * beta * z1 * z2)
    assert wavefunction((1, 1), ["z1", "z2"], cfg) == expected
    assert wavefunction_closed((1, 1), ["z1", "z2"], cfg) == expected


@pytest.mark.parametrize("M,N", [(1, 1), (3, 2), (4, 2), (5, 2), (4, 3), (5, 3)])
def test_wavefunction_closed_form(M, N):
    zs = [f"z{j}" for j in range(1, N + 1)]
    cfg = LatticeConfig.create(M, zs, normalization=TILDE)
    state = create_state([cfg.var(z) for z in zs], cfg)
    for occ in occupations(M, N):
        assert wavefunction(occ, zs, cfg, state) == wavefunction_closed(occ, zs, cfg)


def test_wavefunction_worked_occupation():
    zs = ["z1", "z2"]
    cfg = LatticeConfig.create(5, zs, normalization=TILDE)
    z1, z2, beta = cfg.var("z1"), cfg.var("z2"), cfg.beta
    pairs = z1 + z2 + 2 * beta * z1 * z2
    # x = (4, 3) gives lambda = (2, 2); x = (3, 1) gives lambda = (1, 0)
    assert wavefunction((0, 0, 1, 1, 0), zs, cfg) == 4 * z1 * z2 * pairs * z1**2 * z2**2
    assert wavefunction((1, 0, 1, 0, 0), zs, cfg) == 4 * z1 * z2 * pairs * (z1 + z2)


@pytest.mark.parametrize("M", [2, 3, 4, 5])
def test_boundary_pair_amplitude(M):
    cfg = LatticeConfig.create(M + 1, ["z1", "z2"], normalization=TILDE)
    z1, z2, beta = cfg.var("z1"), cfg.var("z2"), cfg.beta
    occ = (1,) + (0,) * (M - 1) + (1,)
    expected = 4 * z1 * z2 * exact_div(z1**M - z2**M, z1 - z2) * (z1 + z2 + 2 * beta * z1 * z2)
    assert wavefunction(occ, ["z1", "z2"], cfg) == expected


def _f(M):
    cfg = LatticeConfig.create(M, ["z1", "z2"], normalization=TILDE)
    z1, z2 = cfg.var("z1"), cfg.var("z2")
    out = apply_word([("D", z1), ("B", z2)], StateVector.vacuum(cfg), cfg)
    return cfg, out.amplitude((1,) + (0,) * (M - 1))


def test_f_initial_value():
    cfg, f2 = _f(2)
    z1, z2, beta = cfg.var("z1"), cfg.var("z2"), cfg.beta
    assert f2 == 2 * z1 * z2 * (z1 + 2 * z2 + 2 * beta * z1 * z2)


@pytest.mark.parametrize("M", [3, 4, 5, 6])
def test_f_recursion_and_closed_form(M):
    cfg, fM = _f(M)
    _, prev = _f(M - 1)
    z1, z2, beta = cfg.var("z1"), cfg.var("z2"), cfg.beta
    assert fM == z1 * (prev.embed(cfg.table) + 4 * z2**M * (1 + beta * z1))
    closed = 2 * z2 * exact_div(z1**M - z2**M, z1 - z2) * (z1 + z2 + 2 * beta * z1 * z2) - 2 * z2 ** (M + 1) * (
        1 + 2 * beta * z1
    )
    assert fM == closed


@pytest.mark.parametrize("M,N", [(3, 2), (4, 2), (4, 3), (5, 3)])
def test_wavefunction_quotient_is_beta_free(M, N):
    zs = [f"z{j}" for j in range(1, N + 1)]
    cfg = LatticeConfig.create(M, zs, normalization=TILDE)
    zp = [cfg.var(z) for z in zs]
    pairs = beta_pair_product(zp, cfg.beta, cfg.table)
    state = create_state(zp, cfg)
    point = {z: Fraction(k + 2, 3) for k, z in enumerate(zs)}
    for occ in occupations(M, N):
        q = exact_div(state.amplitude(occ), pairs)
        assert q.degree("beta") == 0
        assert q.evaluate({**point, "beta": 0}) == q.evaluate({**point, "beta": 1})


@pytest.mark.parametrize("M,N", [(1, 1), (2, 1), (3, 2), (4, 2), (4, 3)])
def test_dual_wavefunction_closed_form(M, N):
    zs = [f"z{j}" for j in range(1, N + 1)]
    cfg = LatticeConfig.create(M, zs, normalization=TILDE)
    for occ in occupations(M, N):
        assert dual_wavefunction(occ, zs, cfg) == dual_wavefunction_closed(occ, zs, cfg)


def test_empty_dual_wavefunction():
    cfg = LatticeConfig.create(3, normalization=TILDE)
    assert dual_wavefunction((0, 0, 0), [], cfg) == cfg.table.one()


def test_dual_wavefunction_at_rational_points():
    M, N = 4, 2
    beta = Fraction(2, 3)
    points = [(Fraction(1, 5), Fraction(2, 7)), (Fraction(-1, 4), Fraction(3, 5)), (Fraction(1, 2), Fraction(1, 9))]
    for vs in points:
        cfg = LatticeConfig.create(M, beta=beta)
        for occ in occupations(M, N):
            state = StateVector.basis(occ, cfg.table)
            for v in reversed(vs):
                state = apply_row("C", v, state, cfg)
            direct = state.amplitude((0,) * M).constant_value()
            assert direct == dual_wavefunction_closed_value(occ, vs, beta, M)


# -- algebra relations -------------------------------------------------------------


@pytest.mark.parametrize("M", [1, 2, 3, 4, 5])
def test_b_and_c_commute(M):
    cfg = LatticeConfig.create(M, ["u", "v"])
    assert commutes("B", cfg, max_particles=min(M, 3))
    assert commutes("C", cfg, max_particles=min(M, 3))


@pytest.mark.parametrize("M", [1, 2, 3])
def test_exchange_relations_generic_t(M):
    r = exchange_relations(LatticeConfig.create(M, ["u", "v"], t="formal"))
    assert r["ab"] and r["db"] and r["cb"]


@pytest.mark.parametrize("M", [1, 2, 3])
def test_exchange_relations_minus_one(M):
    r = exchange_relations(LatticeConfig.create(M, ["u", "v"]))
    assert r["ab"] and r["db"] and r["cb"]


def test_literal_d_b_variant_fails():
    r = exchange_relations(LatticeConfig.create(2, ["u", "v"], t="formal"))
    assert r["db"] and not r["db_literal"]


# -- Bethe states ------------------------------------------------------------------


@pytest.mark.parametrize("M,beta,v", [(2, 1, Fraction(1, 2)), (4, 1, Fraction(1, 2)), (3, 2, Fraction(1, 3))])
def test_on_shell_state_is_eigenstate(M, beta, v):
    cfg = LatticeConfig.create(M, ["u"], beta=beta)
    result = check_eigenstate([v], cfg)
    assert result.holds
    assert len(result.state) == M


def test_two_particles_have_no_rational_roots():
    # N = 2 needs (1/v - beta)^2 = -1
    cfg = LatticeConfig.create(2, ["u"], beta=1)
    with pytest.raises(NotOnShell) as info:
        check_eigenstate([Fraction(1, 2), Fraction(1, 2)], cfg)
    assert info.value.residuals == [2, 2]


def test_off_shell_root_reports_residual():
    cfg = LatticeConfig.create(2, ["u"], beta=1)
    with pytest.raises(NotOnShell) as info:
        check_eigenstate([Fraction(1, 3)], cfg)
    assert info.value.residuals == [3]


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.fractions(min_value=-2, max_value=2, max_denominator=4))
def test_b_rows_commute_at_rational_beta(M, beta):
    cfg = LatticeConfig.create(M, ["u", "v"], beta=beta)
    assert commutes("B", cfg, max_particles=M)
