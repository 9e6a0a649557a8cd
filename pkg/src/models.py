from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

Color = Literal["black", "white"]
EndpointKind = Literal["vertex", "boundary"]


# Input files
class PolygonFileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    cells: list[tuple[int, int, Literal["U", "D"]]] = Field(
        description="Cells of the polygon as [i, j, orientation]"
    )

    @field_validator("cells")
    @classmethod
    def no_duplicates(cls, cells):
        seen = set()
        for cell in cells:
            if cell in seen:
                raise ValueError(f"duplicate cell {list(cell)}")
            seen.add(cell)
        return cells


class PlabicGraphModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    version: Literal["plabic-v1"] = Field(default="plabic-v1", description="Schema version")
    colors: list[Color] = Field(description="Color of each internal vertex")
    edges: list[tuple[tuple[EndpointKind, int], tuple[EndpointKind, int]]] = Field(
        description="Edges as pairs of (kind, index) endpoints"
    )
    rotation: list[list[int]] = Field(
        description="For each vertex, incident edge indices in clockwise order"
    )
    boundary_count: int = Field(ge=1, description="Number of boundary points")


# Analysis
class CycleSummary(BaseModel):
    size: int
    length2: int = Field(description="Twice the trajectory length (one per cell crossed)")
    is_triangular: bool
    triangle_orientation: Literal["up", "down", "none"]
    triangular_intersections: int = Field(
        description="Other triangular trajectories meeting this one"
    )


class ShorelineSummary(BaseModel):
    cycle: list[int] = Field(description="The cycle, 1-based")
    Ks: list[int] = Field(description="K value of each shoreline in clockwise order")
    touch_counts: list[int] = Field(
        description="Triangular trajectories meeting the cycle with a vertex on each shoreline"
    )


class AnalysisReport(BaseModel):
    n: int = Field(description="Number of boundary panes")
    area: int
    perim: int
    cyc: int
    cycle_type: list[int]
    alpha: dict[str, int] = Field(description="Cycle size -> number of cycles of that size")
    cycles: list[list[int]] = Field(description="Cycles of the billiards permutation, 1-based")
    cycle_notation: str
    trajectories: list[CycleSummary]
    shorelines: list[ShorelineSummary]
    area_slack: int = Field(description="area - (6 cyc - 6)")
    perim_slack: float = Field(description="perim - (7/2 cyc - 3/2)")
    conjecture_slack: int = Field(description="perim - (4 cyc - 2)")


# Enumeration and verification
class PolygonRecord(BaseModel):
    canonical_hash: str
    area: int
    perim: int
    cyc: int
    cycle_type: str = Field(description="Cycle sizes, descending, space separated")
    area_slack: int
    perim_slack: float
    conjecture_slack: int


class VerificationSummary(BaseModel):
    max_area: int
    mode: Literal["fixed", "free"]
    counts: dict[str, int] = Field(description="Area -> number of polygons")
    minima: dict[str, float] = Field(description="Smallest value of each slack")
    violations: dict[str, list[str]] = Field(
        description="Check name -> canonical hashes of violating polygons"
    )
    equality_cases: list[str] = Field(
        description="Canonical hashes of polygons with area = 6 cyc - 6"
    )
    exit_code: int


# Rendering
class RenderOptions(BaseModel):
    scale: float = Field(default=40.0, gt=0, description="Pixels per pane")
    show_trajectories: bool = True
    show_plabic: bool = False
    palette: list[str] = Field(
        default_factory=lambda: ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628"],
        min_length=1,
    )
    margin: float = Field(default=20.0, ge=0)
