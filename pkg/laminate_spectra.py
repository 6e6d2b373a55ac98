import sys

from src.utils import Logger
from src import run_laminate_spectra


if __name__ == "__main__":
    Logger(file_prefix="laminate_spectra", console_log_levels=["WARNING", "CRITICAL"])

    sys.exit(run_laminate_spectra())
