from typing import Literal

from pydantic import BaseModel, Field, model_validator


Subcommand = Literal["enumerate", "count", "genfun", "slice", "congruence", "identity", "suite"]


class CommandRequest(BaseModel):
    """Parsed command line, validated before dispatch."""

    subcommand: Subcommand
    family: str = Field(default="01", description="Built-in family name or constraint string")
    weight: int | None = Field(default=None, ge=0)
    length: int | None = Field(default=None, ge=0)
    upto: int | None = Field(default=None, ge=0)
    order: int | None = Field(default=None, ge=1)
    r: int | None = Field(default=None, ge=1)
    s: int | None = Field(default=None, ge=0)
    modulus: int | None = Field(default=None, ge=1)
    min_index: int = Field(default=0, ge=0, description="First progression index checked by congruence")
    name: str | None = None
    zmax: int | None = Field(default=None, ge=0)
    source: Literal["closed_form", "enumeration", "qdiff", "multisum"] = "closed_form"
    staircase: bool = False
    staircase_map: bool = False
    format: Literal["text", "json"] = "text"
    out: str | None = Field(default=None, description="Optional path for the JSON report")

    @model_validator(mode="after")
    def _required_parameters(self) -> "CommandRequest":
        required = {
            "enumerate": ("weight",),
            "count": ("weight",),
            "slice": ("r", "s"),
            "congruence": ("r", "s"),
            "identity": ("name",),
        }.get(self.subcommand, ())
        missing = [f"--{field}" for field in required if getattr(self, field) is None]
        if missing:
            raise ValueError(f"{self.subcommand} needs {', '.join(missing)}")
        if self.subcommand == "congruence" and self.modulus is not None and self.upto is None:
            raise ValueError("congruence --modulus needs --upto")
        return self
