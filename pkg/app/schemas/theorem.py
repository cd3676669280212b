from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class QuasiPolynomialValue(BaseModel):
    h: int = Field(ge=1)
    value: int = Field(ge=0)
    parity_branch: Literal["odd", "even"]

    @model_validator(mode="after")
    def _check_branch(self) -> "QuasiPolynomialValue":
        expected = "odd" if self.h % 2 else "even"
        if self.parity_branch != expected:
            raise ValueError(f"h={self.h} belongs to the {expected} branch")
        return self


class TheoremRow(BaseModel):
    # column order is part of the CSV contract
    h: int
    a4_greedy: int
    a4_formula: int
    a4_witness: Optional[int] = None
    match: bool
    increases_next: Optional[bool] = None


class TheoremReport(BaseModel):
    h_min: int
    h_max: int
    rows: list[TheoremRow]

    @property
    def all_match(self) -> bool:
        return all(row.match for row in self.rows)

    @property
    def monotonicity_gaps(self) -> list[int]:
        return [row.h for row in self.rows if row.increases_next is False]


class BenchReport(BaseModel):
    h: int
    terms: list[int]
    backend: str
    candidates: int
    seconds: float
    candidates_per_second: float
    table_bytes: int
    support_sizes: list[int]
