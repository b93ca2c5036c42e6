from enum import StrEnum
from pathlib import Path
from typing import Annotated, Literal, Self, TypeAlias

from pydantic import BaseModel, ConfigDict, Field, RootModel, ValidationError, model_validator

from app.api.exceptions import MalformedBudgetError
from app.settings import settings

Coordinate: TypeAlias = Annotated[list[float], Field(min_length=2, max_length=3)]
ComplexPair: TypeAlias = Annotated[list[float], Field(min_length=2, max_length=2)]
HomKindName: TypeAlias = Literal["phi", "psi", "xi"]
EmitTarget: TypeAlias = Literal["braid", "g3", "g4", "gamma4"]


class TrajectoryMode(StrEnum):
    PLANE = "plane"
    SPHERE = "sphere"


class SearchBudget(BaseModel):
    max_states: int = Field(ge=1)
    max_depth: int = Field(ge=0)
    max_growth: int = Field(default=0, ge=0)

    model_config = ConfigDict(extra="forbid", frozen=True)

    @classmethod
    def build(cls, max_states: int | None = None, max_depth: int | None = None, max_growth: int | None = None) -> Self:
        try:
            return cls(
                max_states=settings.search_max_states if max_states is None else max_states,
                max_depth=settings.search_max_depth if max_depth is None else max_depth,
                max_growth=settings.search_max_growth if max_growth is None else max_growth,
            )
        except ValidationError as err:
            raise MalformedBudgetError(str(err.errors()[0]["msg"])) from err


class TrajectoryDocument(BaseModel):
    """points[t][i] holds the coordinates of point i at sample t."""

    mode: TrajectoryMode = TrajectoryMode.PLANE
    n: int = Field(ge=1)
    times: list[float] = Field(min_length=2)
    points: list[list[Coordinate]]
    loop: bool = False

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        dimension = 2 if self.mode is TrajectoryMode.PLANE else 3
        if len(self.points) != len(self.times):
            msg = f"{len(self.points)} samples for {len(self.times)} times"
            raise ValueError(msg)
        for sample in self.points:
            if len(sample) != self.n or any(len(p) != dimension for p in sample):
                msg = f"every sample needs {self.n} points with {dimension} coordinates"
                raise ValueError(msg)
        if any(b <= a for a, b in zip(self.times, self.times[1:], strict=False)):
            msg = "times must be strictly increasing"
            raise ValueError(msg)
        if self.times[0] < 0 or self.times[-1] > 1:
            msg = "times must lie in [0, 1]"
            raise ValueError(msg)
        return self


class HyperplaneLoopDocument(BaseModel):
    """covectors[h][t] holds the m+2 complex coefficients of hyperplane h at sample t as [re, im] pairs."""

    n: int = Field(ge=2)
    m: int = Field(ge=1)
    times: list[float] = Field(min_length=2)
    covectors: list[list[list[ComplexPair]]]
    loop: bool = True

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        if len(self.covectors) != self.n:
            msg = f"{len(self.covectors)} hyperplanes given, n={self.n}"
            raise ValueError(msg)
        for track in self.covectors:
            if len(track) != len(self.times) or any(len(c) != self.m + 2 for c in track):
                msg = f"every hyperplane needs {len(self.times)} covectors of length {self.m + 2}"
                raise ValueError(msg)
        if any(b <= a for a, b in zip(self.times, self.times[1:], strict=False)):
            msg = "times must be strictly increasing"
            raise ValueError(msg)
        return self


class WordDocument(RootModel[list[str]]):
    pass


class RunConfig(BaseModel):
    command: str
    input: Path | None = None
    emit: EmitTarget | None = None
    hom: HomKindName | None = None
    n: int | None = Field(default=None, ge=1)
    k: int | None = Field(default=None, ge=1)
    route: list[int] | None = None
    seed: int = Field(default_factory=lambda: settings.projection_seed)
    tolerance: float = Field(default_factory=lambda: settings.moduli_tolerance, gt=0)
    strict: bool = Field(default_factory=lambda: settings.strict_homs)

    model_config = ConfigDict(extra="forbid")
