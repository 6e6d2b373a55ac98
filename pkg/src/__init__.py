from src.cli import run as run_laminate_spectra
