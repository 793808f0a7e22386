import math

import pytest

import dipspec


def test_free_rotor_spectrum():
    sp = dipspec.mathieu_spectrum(0.0, 5)
    assert sp.converged
    assert sp.eigenvalues == pytest.approx([0.0, 1.0, 1.0, 4.0, 4.0], abs=1e-9)


def test_ground_state_and_trace():
    sp = dipspec.mathieu_spectrum(1.0, 1)
    assert sp.eigenvalues[0] == pytest.approx(-0.378489221264130, abs=1e-8)
    assert dipspec.trace_sqrt_neg(1.0, 0.0) == pytest.approx(0.615214776526, abs=1e-8)
    mc = dipspec.ground_state_mclachlan(1.0)
    assert mc.continued_fraction_value == pytest.approx(sp.eigenvalues[0], abs=1e-8)


def test_phase_and_zeros():
    assert dipspec.phase(1.0) == pytest.approx(-0.3016403204675332, abs=1e-10)
    assert dipspec.zero_refined(1.0, 1) == pytest.approx(0.063955060827354, rel=1e-8)
    assert dipspec.count_zeros_above(1.0, 1e-3) == 2
    with pytest.raises(dipspec.UnderflowError):
        dipspec.zero_refined(1.0, 50)


def test_counting_and_slopes():
    spec = dipspec.DipoleSpec(a=0.0, b=1.0)
    counts = dipspec.count_eigenvalues(spec, -1e-12)
    assert counts.total == 2

    curve = dipspec.counting_curve(spec, -1e-6, -1e-18, 16)
    totals = [s.total for s in curve.samples]
    assert totals == sorted(totals)
    assert curve.theoretical_slope == pytest.approx(0.0979144727, abs=1e-6)

    assert dipspec.dirac_slope(1.0) == pytest.approx(0.329282262381, abs=1e-8)


def test_oracle_route_matches_analytic():
    spec = dipspec.DipoleSpec(a=1.0, b=0.0)
    channel_set = dipspec.decompose(spec)
    grid = dipspec.oracle_auto_grid(-1e-6, 1.0)
    oracle = dipspec.oracle_count_below(channel_set, -1e-6, grid)
    assert oracle.total == 2


def test_bounds_disk():
    disk = dipspec.SampledPotential.radial(lambda r: -1.0 if r < 1.0 else 0.0, 1.0, 5000)
    terms = dipspec.shargorodsky_functional(disk)
    assert terms.I2 == pytest.approx(1.0, abs=1e-10)
    assert terms.I1 == pytest.approx(
        2.0 * math.pi * (2.0 * math.log(2.0) - 1.5 * math.log(3.0) + 0.75), abs=1e-5
    )
