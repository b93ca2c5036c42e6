from pathlib import Path
from typing import Literal, Never, TypeAlias

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

Job: TypeAlias = Literal["freeze_golden", "dump_demos"]


def assert_never(arg: Never) -> Never:
    msg = f"Expected code to be unreachable: {arg}"
    raise AssertionError(msg)


class Settings(BaseSettings):
    # bounded word-problem search
    search_max_states: int = Field(default=100_000, ge=1)
    search_max_depth: int = Field(default=12, ge=0)
    search_max_growth: int = Field(default=0, ge=0)

    # event detection along trajectories
    event_bisections: int = Field(default=48, ge=1)
    event_resolution: float = Field(default=1e-10, gt=0)
    sample_zero_tolerance: float = Field(default=1e-14, ge=0)
    delaunay_tolerance: float = Field(default=1e-9, gt=0)
    closure_tolerance: float = Field(default=1e-9, gt=0)
    coincidence_tolerance: float = Field(default=1e-12, gt=0)
    projection_axis_retries: int = Field(default=8, ge=0)

    # spherical reduction
    antipode_tolerance: float = Field(default=1e-6, gt=0)
    pole_tolerance: float = Field(default=1e-9, gt=0)
    spherical_refinements: int = Field(default=0, ge=0)

    # hyperplane moduli
    moduli_tolerance: float = Field(default=1e-9, gt=0)
    projection_margin: float = Field(default=1e-6, gt=0)
    projection_seed: int = 7
    projection_attempts: int = Field(default=100, ge=1)
    max_projective_step: float = Field(default=0.5, gt=0, le=1)

    strict_homs: bool = False

    golden_dir: Path = Path("tests/golden")
    demo_dir: Path = Path("data/demo")

    environment: str = "dev"
    job: Job | None = None

    model_config = SettingsConfigDict(env_file=Path(".env"), env_file_encoding="utf-8", extra="ignore")

    def tolerances(self) -> dict[str, float]:
        return {
            "closure": self.closure_tolerance,
            "delaunay": self.delaunay_tolerance,
            "event_resolution": self.event_resolution,
            "moduli": self.moduli_tolerance,
            "projection_margin": self.projection_margin,
            "antipode": self.antipode_tolerance,
            "pole": self.pole_tolerance,
        }


load_dotenv()
settings = Settings()
