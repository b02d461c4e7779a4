from dataclasses import dataclass

DEFAULT_DEGREE_CAP = 10**6
DEFAULT_ENUMERATION_CAP = 10**6
DEFAULT_NODE_CAP = 10**7
DEFAULT_TIME_CAP = 300.0


@dataclass(frozen=True)
class RunConfig:
    node_cap: int = DEFAULT_NODE_CAP
    time_cap_seconds: float = DEFAULT_TIME_CAP
    degree_cap: int = DEFAULT_DEGREE_CAP
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    workers: int = 1
    output_format: str = "text"

    def __post_init__(self):
        for name in ("node_cap", "time_cap_seconds", "degree_cap", "enumeration_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
