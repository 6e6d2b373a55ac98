from .common_types import Command, JobResult, JobSpec, OutputFormat
from .jobs import HANDLERS
from .main import build_parser, execute, job_from_args, render, run
