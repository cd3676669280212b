from pydantic import BaseModel, ConfigDict, Field, model_validator


class SequenceRecord(BaseModel):
    """A computed greedy prefix a_0..a_k. Serialized with the keys
    h, k, offset, terms, cap, elapsed_ms."""

    h: int = Field(ge=1)
    k_max: int = Field(ge=0, alias="k")
    offset: int = 0
    terms: list[int]
    scan_cap: int = Field(ge=0, alias="cap")
    elapsed_ms: list[float]

    model_config = ConfigDict(populate_by_name=True)

    @model_validator(mode="after")
    def _check_terms(self) -> "SequenceRecord":
        if len(self.terms) != self.k_max + 1:
            raise ValueError(f"expected {self.k_max + 1} terms, got {len(self.terms)}")
        if len(self.elapsed_ms) != len(self.terms):
            raise ValueError("elapsed_ms must have one entry per term")
        if any(a >= b for a, b in zip(self.terms, self.terms[1:])):
            raise ValueError("terms must be strictly increasing")
        return self
