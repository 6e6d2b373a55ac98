"""
This module is operating 'settings.json' file, that holds the numerical defaults.
Tolerance defaults may be overridden through environment variables.
"""


import copy
import json
import logging
import os
from dataclasses import asdict, dataclass, fields
from typing import Optional

log = logging.getLogger("main.utils.settings")

ENVIRONMENT_OVERRIDES = {
    "LAMINATE_ZERO_TOL": "zero",
    "LAMINATE_EPS_P": "eps_p",
    "LAMINATE_DEGENERACY_TOL": "degeneracy",
    "LAMINATE_EIGENSOLVER_TOL": "eigensolver",
}


class Settings:
    def __init__(self, path: Optional[str] = None):
        self.current_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        self.path = path or f"{self.current_dir}/data/settings.json"

    def load(self) -> dict:
        with open(self.path, "r") as f:
            settings = json.load(f)

        for variable, key in ENVIRONMENT_OVERRIDES.items():
            if variable not in os.environ:
                continue

            try:
                settings["tolerances"][key] = float(os.environ[variable])

            except ValueError:
                log.warning(f"{variable}={os.environ[variable]!r} is not a number, ignored")

        return settings

    def dump(self, settings: dict) -> None:
        with open(self.path, "w") as f:
            json.dump(settings, f, indent=4)


@dataclass(frozen=True)
class Tolerances:
    zero: float = 1e-12
    eps_p: float = 1e-9
    degeneracy: float = 1e-12
    eigensolver: float = 1e-12
    residual: float = 1e-9
    mean: float = 1e-10

    @classmethod
    def from_settings(cls, settings: Optional[dict] = None) -> "Tolerances":
        settings = Settings().load() if settings is None else settings
        known = {f.name for f in fields(cls)}

        return cls(
            **{
                k: float(v)
                for k, v in settings.get("tolerances", {}).items()
                if k in known
            }
        )

    def replace(self, **overrides) -> "Tolerances":
        values = asdict(self)
        values.update({k: float(v) for k, v in overrides.items() if v is not None})

        return Tolerances(**values)


_DEFAULT_TOLERANCES: Optional[Tolerances] = None


def default_tolerances() -> Tolerances:
    global _DEFAULT_TOLERANCES

    if _DEFAULT_TOLERANCES is None:
        try:
            _DEFAULT_TOLERANCES = Tolerances.from_settings()

        except (OSError, json.JSONDecodeError) as exc:
            log.warning(f"Settings not readable ({exc}), built-in tolerances used")
            _DEFAULT_TOLERANCES = Tolerances()

    return copy.copy(_DEFAULT_TOLERANCES)


def reset_default_tolerances() -> None:
    global _DEFAULT_TOLERANCES

    _DEFAULT_TOLERANCES = None
