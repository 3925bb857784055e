from dataclasses import dataclass, replace


@dataclass(frozen=True)
class SearchConfig:
    """Resource knobs shared by the exhaustive and bounded searches."""

    max_ring_size: int = 256
    max_ideal_ring_size: int = 64
    cap_multiplications: int = 2**25
    rewrite_budget: int = 10**6
    alpha_cap: int = 8
    structured_samples: int = 10_000
    seed: int = 20170101
    workers: int = 1

    def with_(self, **changes) -> "SearchConfig":
        return replace(self, **changes)


DEFAULT_CONFIG = SearchConfig()
