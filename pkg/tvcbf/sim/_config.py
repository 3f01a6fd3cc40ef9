# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Scenario configuration and its TOML file format.

A scenario file has the tables ``[simulation]``, ``[vehicle]``, ``[pid]``,
``[traffic]``, ``[[signals]]``, ``[lead]`` and ``[initial]``. Missing keys take
the documented defaults; unknown tables or keys raise :class:`ConfigError`.
"""
import pathlib
from typing import Any, Dict, List, Union

import toml
from skbase.base import BaseObject

from tvcbf._exceptions import ConfigError, ConstructionError
from tvcbf.control import MODES, PIDGains, SafetyFilter
from tvcbf.traffic import SignalTiming, TrafficCBFParams
from tvcbf.vehicle import LeadProfile, VehicleParams, VehicleState

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "ScenarioConfig",
    "dump_config",
    "load_config",
    "resolve_scenario",
]

SCENARIO_DIR = pathlib.Path(__file__).parent / "scenarios"
# other names the bundled scenarios are known by
SCENARIO_ALIASES = {"paper_scenario": "corridor"}

_SIGNAL_KEYS = ("position", "offset", "green", "yellow", "red")
_SIGNAL_DEFAULTS = {"offset": 0.0, "green": 25.0, "yellow": 5.0, "red": 20.0}
_SCHEMA = {
    "simulation": ("dt", "horizon", "mode"),
    "vehicle": tuple(VehicleParams.get_param_names()),
    "pid": tuple(PIDGains.get_param_names()),
    "traffic": ("tau", "lambda_min", "default_spacing", "alpha_h3"),
    "lead": ("breakpoints", "initial_speed"),
    "initial": VehicleState._fields,
}


class ScenarioConfig(BaseObject):
    """Everything needed to reproduce one closed-loop run.

    Parameters
    ----------
    vehicle : VehicleParams, optional
        Defaults to ``VehicleParams()``.
    gains : PIDGains, optional
        Defaults to ``PIDGains()``.
    signals : tuple of tuple, optional
        One ``(position, offset, green, yellow, red)`` tuple per fixed-time
        signal, ordered by position. None means no signals.
    lead : LeadProfile, optional
        Lead acceleration profile; defaults to a lead at rest.
    initial : tuple of float, optional
        Initial ``(x_f, v_f, x_l, v_l, e)``; defaults to both vehicles at rest
        ``S0`` apart.
    dt : float, default=0.01
        Integration and control step, in s.
    horizon : float, default=300.0
        Simulated duration, in s. Zero gives an empty trace.
    mode : str, default="constrained_input"
        Safety filter mode.
    tau : float, default=6.0
        Sigmoid steepness of the traffic barrier.
    lambda_min : float, default=0.1
        Floor of the relative degree 2 class-K rates.
    default_spacing : float, default=1000.0
        Distance to the virtual stop line behind the last signal.
    alpha_h3 : float or None, default=None
        Class-K slope of the relative degree 1 traffic barrier; None uses τ.

    Examples
    --------
    >>> from tvcbf.sim import ScenarioConfig
    >>> cfg = ScenarioConfig(signals=((1000.0, 0.0, 25.0, 5.0, 20.0),), horizon=60.0)
    >>> cfg.n_steps
    6000
    >>> cfg.signal_timings()[0].cycles[0]
    (0.0, 25.0, 30.0)
    """

    _tags = {"object_type": "scenario_config"}

    def __init__(
        self,
        vehicle=None,
        gains=None,
        signals=None,
        lead=None,
        initial=None,
        dt=0.01,
        horizon=300.0,
        mode="constrained_input",
        tau=6.0,
        lambda_min=0.1,
        default_spacing=1000.0,
        alpha_h3=None,
    ):
        self.vehicle = vehicle
        self.gains = gains
        self.signals = signals
        self.lead = lead
        self.initial = initial
        self.dt = dt
        self.horizon = horizon
        self.mode = mode
        self.tau = tau
        self.lambda_min = lambda_min
        self.default_spacing = default_spacing
        self.alpha_h3 = alpha_h3
        super().__init__()

        if not isinstance(dt, (int, float)) or not dt > 0:
            raise ConfigError(f"simulation.dt must be a positive number, found {dt!r}")
        if not isinstance(horizon, (int, float)) or not horizon >= 0:
            raise ConfigError(
                f"simulation.horizon must be a non-negative number, found {horizon!r}"
            )
        if mode not in MODES:
            raise ConfigError(f"simulation.mode must be one of {MODES}, found {mode!r}")
        for entry in signals or ():
            if len(entry) != len(_SIGNAL_KEYS):
                raise ConfigError(f"each signal needs {_SIGNAL_KEYS}, found {entry!r}")

        self._vehicle = VehicleParams() if vehicle is None else vehicle
        self._gains = PIDGains() if gains is None else gains
        self._lead = LeadProfile() if lead is None else lead
        if initial is None:
            self._initial = VehicleState(0.0, 0.0, self._vehicle.s0, 0.0, 0.0)
        else:
            self._initial = VehicleState(*(float(v) for v in initial))

    @property
    def n_steps(self) -> int:
        """Number of control steps ``round(horizon / dt)``."""
        return int(round(self.horizon / self.dt))

    @property
    def vehicle_params(self) -> VehicleParams:
        """Vehicle parameters in use."""
        return self._vehicle

    @property
    def lead_profile(self) -> LeadProfile:
        """Lead profile in use."""
        return self._lead

    @property
    def initial_state(self) -> VehicleState:
        """Initial state of the run."""
        return self._initial

    def signal_timings(self) -> List[SignalTiming]:
        """Return the fixed-time signals, with cycles covering the horizon."""
        timings = []
        for position, offset, green, yellow, red in self.signals or ():
            try:
                timings.append(
                    SignalTiming.from_offset(
                        position, offset, green, yellow, red, horizon=self.horizon
                    )
                )
            except ConstructionError as exc:
                raise ConfigError(f"invalid signal at {position}: {exc}") from exc
        return timings

    def traffic_params(self) -> TrafficCBFParams:
        """Return the barrier shape with S0 and γ taken from the vehicle."""
        return TrafficCBFParams.from_vehicle(
            self._vehicle, tau=self.tau, default_spacing=self.default_spacing
        )

    def safety_filter(self) -> SafetyFilter:
        """Build a fresh safety filter for this scenario."""
        return SafetyFilter(
            vehicle=self._vehicle,
            gains=self._gains,
            signals=tuple(self.signal_timings()),
            traffic=self.traffic_params(),
            mode=self.mode,
            lambda_min=self.lambda_min,
            alpha_h3=self.alpha_h3,
            horizon=self.horizon,
        )

    def to_dict(self) -> Dict[str, Any]:
        """Return the nested mapping written to a scenario file."""
        traffic = {
            "tau": self.tau,
            "lambda_min": self.lambda_min,
            "default_spacing": self.default_spacing,
        }
        if self.alpha_h3 is not None:
            traffic["alpha_h3"] = self.alpha_h3
        return {
            "simulation": {"dt": self.dt, "horizon": self.horizon, "mode": self.mode},
            "vehicle": self._vehicle.get_params(deep=False),
            "pid": self._gains.get_params(deep=False),
            "traffic": traffic,
            "signals": [dict(zip(_SIGNAL_KEYS, s)) for s in self.signals or ()],
            "lead": {
                "breakpoints": [list(bp) for bp in self._lead.breakpoints],
                "initial_speed": self._lead.initial_speed,
            },
            "initial": dict(self._initial._asdict()),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ScenarioConfig":
        """Build a configuration from the nested mapping of a scenario file.

        Raises
        ------
        ConfigError
            On unknown tables or keys, or values rejected by the components.
        """
        unknown = set(data) - set(_SCHEMA) - {"signals"}
        if unknown:
            raise ConfigError(f"unknown table(s) {sorted(unknown)} in scenario")
        for table, keys in _SCHEMA.items():
            section = data.get(table, {})
            if not isinstance(section, dict):
                raise ConfigError(f"[{table}] must be a table, found {section!r}")
            bad = set(section) - set(keys)
            if bad:
                raise ConfigError(f"unknown key(s) {sorted(bad)} in [{table}]")

        signals = []
        for entry in data.get("signals", []):
            bad = set(entry) - set(_SIGNAL_KEYS)
            if bad or "position" not in entry:
                raise ConfigError(
                    f"[[signals]] entries need 'position' and accept only "
                    f"{_SIGNAL_KEYS}, found {sorted(entry)}"
                )
            merged = {**_SIGNAL_DEFAULTS, **entry}
            signals.append(tuple(float(merged[key]) for key in _SIGNAL_KEYS))

        sim = data.get("simulation", {})
        traffic = data.get("traffic", {})
        lead = data.get("lead", {})
        initial = data.get("initial")
        try:
            vehicle = VehicleParams(**data.get("vehicle", {}))
            defaults = (0.0, 0.0, vehicle.s0, 0.0, 0.0)
            config = cls(
                vehicle=vehicle,
                gains=PIDGains(**data.get("pid", {})),
                signals=tuple(signals) if signals else None,
                lead=LeadProfile(
                    breakpoints=tuple(
                        tuple(float(v) for v in bp)
                        for bp in lead.get("breakpoints", [(0.0, 0.0)])
                    ),
                    initial_speed=float(lead.get("initial_speed", 0.0)),
                ),
                initial=None
                if initial is None
                else tuple(
                    float(initial.get(name, default))
                    for name, default in zip(VehicleState._fields, defaults)
                ),
                **sim,
                **traffic,
            )
            config.safety_filter()
        except ConstructionError as exc:
            raise ConfigError(f"invalid scenario: {exc}") from exc
        return config

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the scenario configuration.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        params1 = {}
        params2 = {
            "signals": (
                (1000.0, 0.0, 25.0, 5.0, 20.0),
                (2000.0, 7.0, 25.0, 5.0, 20.0),
            ),
            "lead": LeadProfile(breakpoints=((0.0, 0.3), (60.0, 0.0))),
            "horizon": 10.0,
            "dt": 0.1,
            "mode": "unconstrained_input",
        }
        return [params1, params2]


def resolve_scenario(name_or_path: Union[str, pathlib.Path]) -> pathlib.Path:
    """Return the path of a scenario file, looking up bundled scenarios by name.

    Examples
    --------
    >>> from tvcbf.sim import resolve_scenario
    >>> resolve_scenario("corridor").name
    'corridor.toml'
    >>> resolve_scenario("paper_scenario").name
    'corridor.toml'
    """
    path = pathlib.Path(name_or_path)
    if path.is_file():
        return path
    stem = SCENARIO_ALIASES.get(path.stem, path.stem)
    bundled = SCENARIO_DIR / f"{stem}.toml"
    if path.parent == pathlib.Path(".") and bundled.is_file():
        return bundled
    raise ConfigError(f"no scenario file or bundled scenario named {name_or_path!r}")


def load_config(name_or_path: Union[str, pathlib.Path]) -> ScenarioConfig:
    """Read a scenario file, or a bundled scenario by name.

    Raises
    ------
    ConfigError
        If the file does not exist, is not valid TOML or breaks the schema.
    """
    path = resolve_scenario(name_or_path)
    try:
        data = toml.load(path)
    except (toml.TomlDecodeError, OSError) as exc:
        raise ConfigError(f"could not read scenario {path}: {exc}") from exc
    return ScenarioConfig.from_dict(data)


def dump_config(config: ScenarioConfig, path: Union[str, pathlib.Path]) -> None:
    """Write ``config`` as a scenario file that :func:`load_config` reads back."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        toml.dump(config.to_dict(), f)
