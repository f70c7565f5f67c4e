"""Runtime settings shared by the library and the CLI."""

from dataclasses import dataclass, replace
import pathlib

__all__ = ["DEFAULT_SETTINGS", "SolverSettings"]


@dataclass(frozen=True)
class SolverSettings:
    """Knobs for a classification run.

    Attributes
    ----------
    f_max : int
        Largest tile count sampled when deciding whether a family is infinite.
    family_order_cap : int
        Largest root-of-unity order used when sampling family members.
    jobs : int
        Worker processes used for independent cases (1 runs in-process).
    log_level : str
        Loguru level name.
    log_dir : pathlib.Path | None
        Folder for the log file; ``None`` means the project root.
    log_file_name : str
        Name of the log file.
    """

    f_max: int = 200
    family_order_cap: int = 120
    jobs: int = 1
    log_level: str = "INFO"
    log_dir: pathlib.Path | None = None
    log_file_name: str = "rational_tiles.log"

    def with_overrides(self, **changes) -> "SolverSettings":
        """Return a copy with the non-``None`` ``changes`` applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


DEFAULT_SETTINGS = SolverSettings()
