"""Run configuration: defaults, eps expressions and key=value config files.

The file format is one ``key=value`` per line with ``#`` comments.  Times
are given in microseconds (``tpw_us``, ``lambda_m_us``) and the decay rate
in 1/microsecond (``alpha_per_us``); they are converted to seconds on parse.
Unknown keys are an error.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .noise_model import PulseCorrelationModel


class ConfigError(ValueError):
    """Invalid configuration value, expression or key."""


# pi multiplied and/or divided by integers, e.g. "pi/7", "3*pi/22", "pi*3/22"
_PI_RE = re.compile(r"^(?:(\d+)\*)?pi(?:\*(\d+))?(?:/(\d+))?$")
_RATIONAL_RE = re.compile(r"^(\d+)/(\d+)$")


def parse_eps(text) -> float | Fraction:
    """Parse a sampling-mismatch expression.

    Accepted forms: a decimal literal ("0.25"), an exact rational "u/v",
    or pi scaled by integers ("pi/7", "2*pi/9").  Rational inputs return an
    exact ``Fraction``; everything else returns a float.  The value must lie
    in [0, 1).
    """
    if isinstance(text, (float, int)):
        value = float(text)
        if not 0.0 <= value < 1.0:
            raise ConfigError(f"eps must be in [0, 1), got {value}")
        return value
    if isinstance(text, Fraction):
        if not 0 <= text < 1:
            raise ConfigError(f"eps must be in [0, 1), got {text}")
        return text
    s = str(text).strip().replace(" ", "")
    m = _PI_RE.match(s)
    if m:
        num = int(m.group(1) or 1) * int(m.group(2) or 1)
        den = int(m.group(3) or 1)
        if den == 0:
            raise ConfigError(f"zero denominator in eps expression {text!r}")
        value = num * math.pi / den
        if not 0.0 <= value < 1.0:
            raise ConfigError(f"eps must be in [0, 1), got {text!r} = {value}")
        return value
    m = _RATIONAL_RE.match(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ConfigError(f"zero denominator in eps expression {text!r}")
        frac = Fraction(int(m.group(1)), den)
        if not 0 <= frac < 1:
            raise ConfigError(f"eps must be in [0, 1), got {text!r}")
        return frac
    try:
        value = float(s)
    except ValueError:
        raise ConfigError(f"cannot parse eps expression {text!r}") from None
    if not 0.0 <= value < 1.0:
        raise ConfigError(f"eps must be in [0, 1), got {value}")
    return value


def parse_phase(text) -> float:
    """Parse a phase fraction: decimal literal or pi scaled by integers.

    Unlike ``parse_eps`` the value is not range-restricted (the pulse is
    periodic, so any real phase is meaningful) and the result is always a
    float.
    """
    if isinstance(text, (float, int)):
        return float(text)
    s = str(text).strip().replace(" ", "")
    m = _PI_RE.match(s)
    if m:
        num = int(m.group(1) or 1) * int(m.group(2) or 1)
        den = int(m.group(3) or 1)
        if den == 0:
            raise ConfigError(f"zero denominator in phase expression {text!r}")
        return num * math.pi / den
    m = _RATIONAL_RE.match(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ConfigError(f"zero denominator in phase expression {text!r}")
        return int(m.group(1)) / den
    try:
        return float(s)
    except ValueError:
        raise ConfigError(f"cannot parse phase expression {text!r}") from None


# defaults reproduce the low-rate experiment configuration
DEFAULTS = {
    "tpw_us": 5.0,
    "tdc": 0.75,
    "trf": 0.01,
    "phi": 0.0,
    "base_var": 1.0,
    "amp": 4.0,
    "alpha_per_us": 1.0,
    "lambda_m_us": 4.0,
    "p": 2,
    "eps": "pi/7",
    "power": 10.0,
}

_KEY_PARSERS = {
    "tpw_us": float,
    "tdc": float,
    "trf": float,
    "phi": parse_phase,
    "base_var": float,
    "amp": float,
    "alpha_per_us": float,
    "lambda_m_us": float,
    "p": int,
    "eps": parse_eps,
    "power": float,
}


@dataclass(frozen=True)
class ChannelConfig:
    """Resolved run configuration (internal units: seconds)."""

    model: PulseCorrelationModel
    p: int
    eps: float | Fraction
    power: float

    def as_dict(self) -> dict:
        """Flat key=value view in file units, for manifests."""
        m = self.model
        eps = self.eps
        eps_repr = f"{eps.numerator}/{eps.denominator}" if isinstance(eps, Fraction) else repr(eps)
        return {
            "tpw_us": m.tpw * 1e6,
            "tdc": m.tdc,
            "trf": m.trf,
            "phi": m.phi,
            "base_var": m.base_var,
            "amp": m.amp,
            "alpha_per_us": m.alpha * 1e-6,
            "lambda_m_us": m.lambda_m * 1e6,
            "p": self.p,
            "eps": eps_repr,
            "power": self.power,
        }


def parse_config_file(path) -> dict:
    """Read raw key=value overrides from a config file (fail-closed keys)."""
    raw = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            if "=" not in stripped:
                raise ConfigError(f"{path}:{lineno}: expected key=value, got {line.rstrip()!r}")
            key, value = (part.strip() for part in stripped.split("=", 1))
            if key not in _KEY_PARSERS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                raw[key] = _KEY_PARSERS[key](value)
            except ConfigError:
                raise
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from None
    return raw


def build_config(file_values: dict | None = None, **overrides) -> ChannelConfig:
    """Merge defaults, config-file values and explicit overrides.

    Override precedence: explicit keyword > file > default.  Overrides set
    to None are ignored so CLI flags can pass through unset options.
    """
    values = dict(DEFAULTS)
    for source in (file_values or {}), overrides:
        for key, val in source.items():
            if val is None:
                continue
            if key not in _KEY_PARSERS:
                raise ConfigError(f"unknown config key {key!r}")
            values[key] = _KEY_PARSERS[key](val) if isinstance(val, str) else val

    eps = parse_eps(values["eps"])
    power = float(values["power"])
    if power <= 0.0:
        raise ConfigError(f"power must be positive, got {power}")
    p = int(values["p"])
    if p < 1:
        raise ConfigError(f"p must be >= 1, got {p}")
    try:
        model = PulseCorrelationModel(
            tpw=values["tpw_us"] * 1e-6,
            tdc=values["tdc"],
            trf=values["trf"],
            phi=values["phi"],
            base_var=values["base_var"],
            amp=values["amp"],
            alpha=values["alpha_per_us"] * 1e6,
            lambda_m=values["lambda_m_us"] * 1e-6,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return ChannelConfig(model=model, p=p, eps=eps, power=power)
