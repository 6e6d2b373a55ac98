from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from src.core.common_types import LaminateProfile
from src.utils.settings import Tolerances


class Command(str, Enum):
    WELLPOSED = "wellposed"
    SPECTRUM1D = "spectrum1d"
    SPECTRUMDD = "spectrumdd"
    HOMOGENIZE = "homogenize"
    GAMMA = "gamma"
    ORACLE = "oracle"
    SCAN = "scan"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    PLOTDATA = "plotdata"


@dataclass(frozen=True)
class JobSpec:
    command: Command
    alpha: Optional[LaminateProfile] = None
    dim: int = 1
    k_max: int = 10
    bound: Optional[float] = None
    gamma: Optional[float] = None
    beta: Optional[Tuple[float, ...]] = None
    points: int = 1024
    modes: int = 20
    step: int = 5
    uniform_bound: Optional[float] = None
    delta_grid: Tuple[float, ...] = (1e-3, 1e-2, 1e-1)
    s_resolution: Optional[float] = None
    tolerances: Tolerances = field(default_factory=Tolerances)
    output_format: OutputFormat = OutputFormat.JSON
    output: Optional[str] = None
    plot: Optional[str] = None
    dump: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Job document as echoed in reports; from_dict reads it back"""

        return {
            "command": self.command.value,
            "alpha": None if self.alpha is None else list(self.alpha.values),
            "dim": self.dim,
            "k_max": self.k_max,
            "bound": self.bound,
            "gamma": self.gamma,
            "beta": None if self.beta is None else list(self.beta),
            "points": self.points,
            "modes": self.modes,
            "step": self.step,
            "uniform_bound": self.uniform_bound,
            "delta_grid": list(self.delta_grid),
            "s_resolution": self.s_resolution,
            "tolerances": asdict(self.tolerances),
            "format": self.output_format.value,
        }

    @classmethod
    def from_dict(cls, document: Dict[str, Any]) -> "JobSpec":
        alpha = document.get("alpha")
        beta = document.get("beta")
        tolerances = Tolerances(**document.get("tolerances", {}))

        return cls(
            command=Command(document["command"]),
            alpha=None if alpha is None else LaminateProfile.from_values(alpha, tolerances.zero),
            dim=int(document.get("dim", 1)),
            k_max=int(document.get("k_max", 10)),
            bound=document.get("bound"),
            gamma=document.get("gamma"),
            beta=None if beta is None else tuple(float(i) for i in beta),
            points=int(document.get("points", 1024)),
            modes=int(document.get("modes", 20)),
            step=int(document.get("step", 5)),
            uniform_bound=document.get("uniform_bound"),
            delta_grid=tuple(document.get("delta_grid", (1e-3, 1e-2, 1e-1))),
            s_resolution=document.get("s_resolution"),
            tolerances=tolerances,
            output_format=OutputFormat(document.get("format", "json")),
        )


@dataclass
class JobResult:
    """Report body plus its tabular and plottable renderings"""

    body: Dict[str, Any]
    columns: Tuple[str, ...] = ()
    rows: List[Dict[str, Any]] = field(default_factory=list)
    families: Dict[str, List[Tuple[float, float]]] = field(default_factory=dict)
    markers: List[Tuple[Optional[float], str]] = field(default_factory=list)
