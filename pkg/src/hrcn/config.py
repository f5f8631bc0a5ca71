"""Run configuration shared by the CLI and the experiment scripts."""
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Tuple

from .enumeration import DEFAULT_CATALOG
from .invariants import DEFAULT_WM_SAMPLE_BOUND
from .lvalue import default_euler_cutoff

DEFAULT_GOLDEN = Path(__file__).resolve().parents[2] / "data" / "golden_tables.tsv"
SURVEY_MS = (3, 5, 7, 9, 11, 13, 15, 17, 19, 21)


@dataclass(frozen=True)
class RunConfig:
    m: Optional[int] = None  # None means every m with a nonempty search space
    h_max: int = 16
    precision_bits: int = 128
    euler_cutoff: Optional[int] = None  # None: per-m default
    wm_sample_bound: int = DEFAULT_WM_SAMPLE_BOUND
    scan_scale: int = 1
    catalog_path: Path = DEFAULT_CATALOG
    golden_path: Path = DEFAULT_GOLDEN
    jobs: int = 1
    output_format: str = "tsv"

    def __post_init__(self):
        if self.m is not None and (self.m < 3 or self.m % 2 == 0):
            raise ValueError("m must be odd and at least 3")
        if self.precision_bits < 64:
            raise ValueError("precision must be at least 64 bits")
        if self.h_max < 1:
            raise ValueError("h_max must be positive")
        if self.euler_cutoff is not None and self.euler_cutoff < 100:
            raise ValueError("Euler cutoff must be at least 100")
        if self.output_format not in ("tsv", "json"):
            raise ValueError("output format must be tsv or json")
        if self.jobs < 1 or self.scan_scale < 1 or self.wm_sample_bound < 2:
            raise ValueError("jobs, scan scale and sample bound must be positive")

    @property
    def ms(self) -> Tuple[int, ...]:
        return SURVEY_MS if self.m is None else (self.m,)

    def cutoff_for(self, m: int) -> int:
        return self.euler_cutoff or default_euler_cutoff(m)

    def with_(self, **kw) -> "RunConfig":
        return replace(self, **kw)
