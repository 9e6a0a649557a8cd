import os

from dotenv import load_dotenv

load_dotenv()

DEFAULT_PALETTE = "#e41a1c,#377eb8,#4daf4a,#984ea3,#ff7f00,#a65628"


class Config:
    def __init__(self):
        self._log_level = os.getenv("LOG_LEVEL", "INFO")
        self._log_dir = os.getenv("LOG_DIR")
        self._max_area = os.getenv("DEFAULT_MAX_AREA", "12")
        self._threads = os.getenv("DEFAULT_THREADS", "1")
        self._render_scale = os.getenv("RENDER_SCALE", "40.0")
        self._render_palette = os.getenv("RENDER_PALETTE", DEFAULT_PALETTE)
        self._render_margin = os.getenv("RENDER_MARGIN", "20.0")

    def get_log_level(self):
        level = self._log_level.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"LOG_LEVEL must be a logging level name, got {self._log_level!r}")
        return level

    def get_log_dir(self):
        return self._log_dir

    def get_max_area(self):
        return self._positive_int("DEFAULT_MAX_AREA", self._max_area)

    def get_threads(self):
        return self._positive_int("DEFAULT_THREADS", self._threads)

    def get_render_scale(self):
        try:
            scale = float(self._render_scale)
        except ValueError:
            raise ValueError(f"RENDER_SCALE must be a number, got {self._render_scale!r}")
        if scale <= 0:
            raise ValueError(f"RENDER_SCALE must be positive, got {scale}")
        return scale

    def get_render_palette(self):
        palette = [c.strip() for c in self._render_palette.split(",") if c.strip()]
        if not palette:
            raise ValueError("RENDER_PALETTE must list at least one color")
        return palette

    def get_render_margin(self):
        try:
            margin = float(self._render_margin)
        except ValueError:
            raise ValueError(f"RENDER_MARGIN must be a number, got {self._render_margin!r}")
        if margin < 0:
            raise ValueError(f"RENDER_MARGIN must not be negative, got {margin}")
        return margin

    @staticmethod
    def _positive_int(name, raw):
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{name} must be an integer, got {raw!r}")
        if value < 1:
            raise ValueError(f"{name} must be at least 1, got {value}")
        return value


config = Config()
