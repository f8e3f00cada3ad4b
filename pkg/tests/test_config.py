"""INI parsing, unit conversion, and round-trip serialization."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinlocksim.config import (
    ConfigError,
    RunConfig,
    parse_config,
    parse_config_text,
    serialize_config,
)

MINIMAL = """
[params]
omega0_khz = 10000.0
omega1_khz = 5.0
tau_c_ms = 0.001
times_two_pi = true
"""

FULL = """
[params]
omega0_khz = 10000.0
omega1_khz = 5.0
omega_d_khz = 5.0   ; matched lock
alpha_khz = 0.5
tau_c_ms = 0.001
omega_sl_khz = 0.1
omega_l_khz = 9999.0
m_th = 0.2
times_two_pi = true
include_nonsecular = true
include_system_bath = false

[grid]
time_points = 500

[sweep]
tau_c_ms = 1e-4, 1e-3, 1e-2
omega1_over_omega_d = 0.5, 1.0

[output]
directory = results
svg = true
"""


class TestParsing:
    def test_minimal_defaults(self):
        cfg = parse_config_text(MINIMAL)
        assert cfg.omega_d_khz == 0.0
        assert cfg.alpha_khz == 0.0
        assert cfg.include_nonsecular is True
        assert cfg.include_system_bath is False
        assert cfg.time_points == 2000
        assert cfg.sweep_tau_c_ms == ()
        assert cfg.out_dir == "out"
        assert cfg.svg is False

    def test_full_file(self):
        cfg = parse_config_text(FULL)
        assert cfg.omega_d_khz == 5.0
        assert cfg.alpha_khz == 0.5
        assert cfg.m_th == 0.2
        assert cfg.time_points == 500
        assert cfg.sweep_tau_c_ms == (1e-4, 1e-3, 1e-2)
        assert cfg.sweep_omega1_over_omega_d == (0.5, 1.0)
        assert cfg.out_dir == "results"
        assert cfg.svg is True

    def test_missing_required_key(self):
        text = MINIMAL.replace("times_two_pi = true\n", "")
        with pytest.raises(ConfigError, match=r"\[params\] times_two_pi"):
            parse_config_text(text)

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match="unknown key"):
            parse_config_text(MINIMAL + "omega2_khz = 1.0\n")

    def test_unknown_section(self):
        with pytest.raises(ConfigError, match="unknown section"):
            parse_config_text(MINIMAL + "\n[plotting]\ncolor = red\n")

    def test_missing_params_section(self):
        with pytest.raises(ConfigError, match="section is missing"):
            parse_config_text("[grid]\ntime_points = 100\n")

    def test_bad_number(self):
        with pytest.raises(ConfigError, match="not a number"):
            parse_config_text(MINIMAL.replace("5.0", "five"))

    def test_bad_boolean(self):
        with pytest.raises(ConfigError, match="not a boolean"):
            parse_config_text(MINIMAL.replace("true", "maybe"))

    def test_bad_integer(self):
        with pytest.raises(ConfigError, match="not an integer"):
            parse_config_text(MINIMAL + "\n[grid]\ntime_points = many\n")

    def test_too_few_grid_points(self):
        with pytest.raises(ConfigError, match="at least 2"):
            parse_config_text(MINIMAL + "\n[grid]\ntime_points = 1\n")

    def test_bad_list_entry(self):
        with pytest.raises(ConfigError, match="not a number in list"):
            parse_config_text(MINIMAL + "\n[sweep]\ntau_c_ms = 1e-3, soon\n")

    def test_physical_validation_forwarded(self):
        with pytest.raises(ConfigError, match="tau_c"):
            parse_config_text(MINIMAL.replace("tau_c_ms = 0.001", "tau_c_ms = -1.0"))

    def test_malformed_ini(self):
        with pytest.raises(ConfigError, match="malformed INI"):
            parse_config_text("params]\nomega0_khz 1\n")

    def test_file_io(self, tmp_path):
        path = tmp_path / "run.ini"
        path.write_text(MINIMAL)
        assert parse_config(str(path)) == parse_config_text(MINIMAL)
        with pytest.raises(ConfigError, match="cannot read"):
            parse_config(str(tmp_path / "absent.ini"))


class TestCouplingComponents:
    FIVE = MINIMAL + (
        "omega_d_khz_m-2 = 1.0, -0.5\n"
        "omega_d_khz_m-1 = -2.0\n"
        "omega_d_khz_m0 = 5.0\n"
        "omega_d_khz_m+1 = 2.0\n"
        "omega_d_khz_m+2 = 1.0, 0.5\n"
    )

    def test_five_component_parse(self):
        cfg = parse_config_text(self.FIVE)
        assert cfg.omega_d_khz == (1.0 - 0.5j, -2.0 + 0j, 5.0 + 0j, 2.0 + 0j, 1.0 + 0.5j)

    def test_components_reach_params(self):
        params = parse_config_text(self.FIVE).to_params()
        scale = 2.0 * math.pi * 1e3
        assert params.omega_d[2] == pytest.approx(5.0 * scale)
        assert params.omega_d[0] == pytest.approx((1.0 - 0.5j) * scale)

    def test_scalar_and_components_exclusive(self):
        with pytest.raises(ConfigError, match="not both"):
            parse_config_text(self.FIVE + "omega_d_khz = 5.0\n")

    def test_all_five_required(self):
        partial = MINIMAL + "omega_d_khz_m0 = 5.0\n"
        with pytest.raises(ConfigError, match="five m components"):
            parse_config_text(partial)

    def test_bad_complex(self):
        bad = MINIMAL + "".join(
            f"{k} = 1.0\n"
            for k in (
                "omega_d_khz_m-2",
                "omega_d_khz_m-1",
                "omega_d_khz_m+1",
                "omega_d_khz_m+2",
            )
        )
        with pytest.raises(ConfigError, match="'re' or 're, im'"):
            parse_config_text(bad + "omega_d_khz_m0 = 1, 2, 3\n")


class TestUnits:
    def test_angular_scale_flag(self):
        cfg = parse_config_text(MINIMAL)
        assert cfg.angular_scale == pytest.approx(2.0 * math.pi * 1e3)
        cfg2 = parse_config_text(MINIMAL.replace("times_two_pi = true", "times_two_pi = false"))
        assert cfg2.angular_scale == 1e3

    def test_conversions(self):
        params = parse_config_text(FULL).to_params()
        s = 2.0 * math.pi * 1e3
        assert params.omega0 == pytest.approx(1e4 * s)
        assert params.omega1 == pytest.approx(5.0 * s)
        assert params.alpha == pytest.approx(0.5 * s)
        assert params.omega_sl == pytest.approx(0.1 * s)
        assert params.omega_L == pytest.approx(9999.0 * s)
        assert params.tau_c == pytest.approx(1e-6)
        assert params.m_th == 0.2


class TestRoundTrip:
    def test_full_round_trip(self):
        cfg = parse_config_text(FULL)
        assert parse_config_text(serialize_config(cfg)) == cfg

    def test_component_round_trip(self):
        cfg = parse_config_text(TestCouplingComponents.FIVE)
        assert parse_config_text(serialize_config(cfg)) == cfg

    @given(
        omega0=st.floats(1e-6, 1e9),
        omega1=st.floats(-1e6, 1e6),
        wd=st.floats(-1e6, 1e6),
        alpha=st.floats(-1e6, 1e6),
        tau_c=st.floats(1e-9, 1e3),
        m_th=st.floats(-1.0, 1.0),
        two_pi=st.booleans(),
        points=st.integers(2, 100000),
    )
    @settings(max_examples=60, deadline=None)
    def test_round_trip_exact(self, omega0, omega1, wd, alpha, tau_c, m_th, two_pi, points):
        cfg = RunConfig(
            omega0_khz=omega0,
            omega1_khz=omega1,
            tau_c_ms=tau_c,
            times_two_pi=two_pi,
            omega_d_khz=wd,
            alpha_khz=alpha,
            m_th=m_th,
            time_points=points,
            sweep_tau_c_ms=(tau_c, 2.0 * tau_c),
        )
        assert parse_config_text(serialize_config(cfg)) == cfg
