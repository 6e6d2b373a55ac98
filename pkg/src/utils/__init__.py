from .logger import Logger, displace_message
from .plot import Plot
from .report import load_report, render_csv, render_json, render_plotdata, to_serialisable
from .settings import (
    Settings,
    Tolerances,
    default_tolerances,
    reset_default_tolerances,
)
