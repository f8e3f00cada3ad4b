"""INI run configuration: parsing, validation, serialization.

Frequencies are written in kHz and the correlation time in ms; the
required ``times_two_pi`` flag says whether the kHz numbers are
ordinary frequencies (converted to rad/s with a 2 pi) or already
angular.  Raw file numbers are kept on the config object so a
parse -> serialize -> parse round trip is exact.
"""

from __future__ import annotations

import configparser
import io
import math
from dataclasses import dataclass

from .liouvillian import SimParams

__all__ = ["ConfigError", "RunConfig", "parse_config", "parse_config_text", "serialize_config"]

_M_KEYS = ("omega_d_khz_m-2", "omega_d_khz_m-1", "omega_d_khz_m0", "omega_d_khz_m+1", "omega_d_khz_m+2")

_PARAM_KEYS = {
    "omega0_khz", "omega1_khz", "omega_d_khz", "alpha_khz", "tau_c_ms",
    "omega_sl_khz", "omega_l_khz", "m_th", "times_two_pi",
    "include_nonsecular", "include_system_bath", *_M_KEYS,
}
_GRID_KEYS = {"time_points"}
_SWEEP_KEYS = {"tau_c_ms", "alpha_over_omega_d", "omega1_over_omega_d"}
_OUTPUT_KEYS = {"directory", "svg"}


class ConfigError(Exception):
    """Invalid or missing configuration field."""

    def __init__(self, section: str, key: str, message: str):
        self.section = section
        self.key = key
        super().__init__(f"[{section}] {key}: {message}")


@dataclass(frozen=True)
class RunConfig:
    """One run's inputs in file units (kHz, ms) plus the unit flag."""

    omega0_khz: float
    omega1_khz: float
    tau_c_ms: float
    times_two_pi: bool
    omega_d_khz: float | tuple = 0.0
    alpha_khz: float = 0.0
    omega_sl_khz: float = 0.0
    omega_l_khz: float = 0.0
    m_th: float = 0.0
    include_nonsecular: bool = True
    include_system_bath: bool = False
    time_points: int = 2000
    sweep_tau_c_ms: tuple = ()
    sweep_alpha_over_omega_d: tuple = ()
    sweep_omega1_over_omega_d: tuple = ()
    out_dir: str = "out"
    svg: bool = False

    @property
    def angular_scale(self) -> float:
        """kHz-to-rad/s factor."""
        return 2.0 * math.pi * 1e3 if self.times_two_pi else 1e3

    def to_params(self) -> SimParams:
        s = self.angular_scale
        wd = self.omega_d_khz
        omega_d = tuple(complex(v) * s for v in wd) if isinstance(wd, tuple) else wd * s
        return SimParams(
            omega0=self.omega0_khz * s,
            omega1=self.omega1_khz * s,
            omega_d=omega_d,
            alpha=self.alpha_khz * s,
            tau_c=self.tau_c_ms * 1e-3,
            omega_sl=self.omega_sl_khz * s,
            omega_L=self.omega_l_khz * s,
            m_th=self.m_th,
            include_nonsecular=self.include_nonsecular,
            include_system_bath=self.include_system_bath,
        )


def _get_float(cp, section, key, default=None) -> float:
    if not cp.has_option(section, key):
        if default is None:
            raise ConfigError(section, key, "required key is missing")
        return default
    raw = cp.get(section, key)
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(section, key, f"not a number: {raw!r}") from None


def _get_bool(cp, section, key, default=None) -> bool:
    if not cp.has_option(section, key):
        if default is None:
            raise ConfigError(section, key, "required key is missing")
        return default
    try:
        return cp.getboolean(section, key)
    except ValueError:
        raise ConfigError(section, key, f"not a boolean: {cp.get(section, key)!r}") from None


def _get_complex(cp, section, key) -> complex:
    raw = cp.get(section, key)
    parts = [p.strip() for p in raw.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ConfigError(section, key, f"expected 're' or 're, im', got {raw!r}")


def _get_float_list(cp, section, key) -> tuple:
    if not cp.has_option(section, key):
        return ()
    raw = cp.get(section, key)
    out = []
    for tok in raw.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(float(tok))
        except ValueError:
            raise ConfigError(section, key, f"not a number in list: {tok!r}") from None
    return tuple(out)


def _check_keys(cp, section, allowed):
    if not cp.has_section(section):
        return
    for key in cp.options(section):
        if key not in allowed:
            raise ConfigError(section, key, "unknown key")


def parse_config_text(text: str) -> RunConfig:
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError("-", "-", f"malformed INI: {exc}") from None
    for section in cp.sections():
        if section not in ("params", "grid", "sweep", "output"):
            raise ConfigError(section, "-", "unknown section")
    if not cp.has_section("params"):
        raise ConfigError("params", "-", "section is missing")
    _check_keys(cp, "params", _PARAM_KEYS)
    _check_keys(cp, "grid", _GRID_KEYS)
    _check_keys(cp, "sweep", _SWEEP_KEYS)
    _check_keys(cp, "output", _OUTPUT_KEYS)

    has_scalar = cp.has_option("params", "omega_d_khz")
    has_m = [cp.has_option("params", k) for k in _M_KEYS]
    if has_scalar and any(has_m):
        raise ConfigError("params", "omega_d_khz", "give either the scalar coupling or the five m components, not both")
    if any(has_m) and not all(has_m):
        missing = _M_KEYS[has_m.index(False)]
        raise ConfigError("params", missing, "all five m components are required together")
    if all(has_m):
        omega_d = tuple(_get_complex(cp, "params", k) for k in _M_KEYS)
    else:
        omega_d = _get_float(cp, "params", "omega_d_khz", 0.0)

    time_points = 2000
    if cp.has_option("grid", "time_points"):
        try:
            time_points = cp.getint("grid", "time_points")
        except ValueError:
            raise ConfigError("grid", "time_points", f"not an integer: {cp.get('grid', 'time_points')!r}") from None
        if time_points < 2:
            raise ConfigError("grid", "time_points", "need at least 2 points")

    cfg = RunConfig(
        omega0_khz=_get_float(cp, "params", "omega0_khz"),
        omega1_khz=_get_float(cp, "params", "omega1_khz"),
        tau_c_ms=_get_float(cp, "params", "tau_c_ms"),
        times_two_pi=_get_bool(cp, "params", "times_two_pi"),
        omega_d_khz=omega_d,
        alpha_khz=_get_float(cp, "params", "alpha_khz", 0.0),
        omega_sl_khz=_get_float(cp, "params", "omega_sl_khz", 0.0),
        omega_l_khz=_get_float(cp, "params", "omega_l_khz", 0.0),
        m_th=_get_float(cp, "params", "m_th", 0.0),
        include_nonsecular=_get_bool(cp, "params", "include_nonsecular", True),
        include_system_bath=_get_bool(cp, "params", "include_system_bath", False),
        time_points=time_points,
        sweep_tau_c_ms=_get_float_list(cp, "sweep", "tau_c_ms"),
        sweep_alpha_over_omega_d=_get_float_list(cp, "sweep", "alpha_over_omega_d"),
        sweep_omega1_over_omega_d=_get_float_list(cp, "sweep", "omega1_over_omega_d"),
        out_dir=cp.get("output", "directory", fallback="out"),
        svg=_get_bool(cp, "output", "svg", False),
    )
    try:
        cfg.to_params()
    except ValueError as exc:
        raise ConfigError("params", "-", str(exc)) from None
    return cfg


def parse_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError("-", "-", f"cannot read {path}: {exc}") from None
    return parse_config_text(text)


def _fmt_num(v: float) -> str:
    return f"{v:.17g}"


def _fmt_complex(z: complex) -> str:
    if z.imag == 0.0:
        return _fmt_num(z.real)
    return f"{_fmt_num(z.real)}, {_fmt_num(z.imag)}"


def serialize_config(cfg: RunConfig) -> str:
    """Round-trip-exact INI text for a RunConfig."""
    buf = io.StringIO()
    buf.write("[params]\n")
    buf.write(f"omega0_khz = {_fmt_num(cfg.omega0_khz)}\n")
    buf.write(f"omega1_khz = {_fmt_num(cfg.omega1_khz)}\n")
    if isinstance(cfg.omega_d_khz, tuple):
        for key, z in zip(_M_KEYS, cfg.omega_d_khz):
            buf.write(f"{key} = {_fmt_complex(complex(z))}\n")
    else:
        buf.write(f"omega_d_khz = {_fmt_num(cfg.omega_d_khz)}\n")
    buf.write(f"alpha_khz = {_fmt_num(cfg.alpha_khz)}\n")
    buf.write(f"tau_c_ms = {_fmt_num(cfg.tau_c_ms)}\n")
    buf.write(f"omega_sl_khz = {_fmt_num(cfg.omega_sl_khz)}\n")
    buf.write(f"omega_l_khz = {_fmt_num(cfg.omega_l_khz)}\n")
    buf.write(f"m_th = {_fmt_num(cfg.m_th)}\n")
    buf.write(f"times_two_pi = {'true' if cfg.times_two_pi else 'false'}\n")
    buf.write(f"include_nonsecular = {'true' if cfg.include_nonsecular else 'false'}\n")
    buf.write(f"include_system_bath = {'true' if cfg.include_system_bath else 'false'}\n")
    buf.write("\n[grid]\n")
    buf.write(f"time_points = {cfg.time_points}\n")
    buf.write("\n[sweep]\n")
    for key, vals in (
        ("tau_c_ms", cfg.sweep_tau_c_ms),
        ("alpha_over_omega_d", cfg.sweep_alpha_over_omega_d),
        ("omega1_over_omega_d", cfg.sweep_omega1_over_omega_d),
    ):
        if vals:
            buf.write(f"{key} = {', '.join(_fmt_num(v) for v in vals)}\n")
    buf.write("\n[output]\n")
    buf.write(f"directory = {cfg.out_dir}\n")
    buf.write(f"svg = {'true' if cfg.svg else 'false'}\n")
    return buf.getvalue()
