from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class GenerateCommand(BaseModel):
    subcommand: Literal["generate"] = "generate"
    h: int = Field(ge=1)
    terms: int = Field(ge=0)
    format: Literal["bfile", "json", "csv"] = "bfile"
    output: Optional[Path] = None
    workers: int = Field(default=1, ge=1)
    mian_chowla: bool = False

    @model_validator(mode="after")
    def _check_mian_chowla(self) -> "GenerateCommand":
        if self.mian_chowla and self.h != 2:
            raise ValueError("--mian-chowla only applies to h = 2")
        return self


class VerifyCommand(BaseModel):
    subcommand: Literal["verify"] = "verify"
    h: int = Field(ge=1)
    set_path: str


class TheoremCommand(BaseModel):
    subcommand: Literal["theorem"] = "theorem"
    h_min: int = Field(ge=1)
    h_max: int = Field(ge=1)
    format: Literal["text", "json", "csv"] = "text"
    output: Optional[Path] = None
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_range(self) -> "TheoremCommand":
        if self.h_max < self.h_min:
            raise ValueError(f"empty h-range [{self.h_min}, {self.h_max}]")
        return self


class WitnessCommand(BaseModel):
    subcommand: Literal["witness"] = "witness"
    h: int = Field(ge=1)
    c: int = Field(ge=1)


class Lemma1Command(BaseModel):
    subcommand: Literal["lemma1"] = "lemma1"
    h: int = Field(ge=2)


class BenchCommand(BaseModel):
    subcommand: Literal["bench"] = "bench"
    h: int = Field(ge=1)
    terms: int = Field(default=4, ge=1)
    candidates: int = Field(default=5000, ge=1)
