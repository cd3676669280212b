from pydantic import BaseModel, ConfigDict, Field, model_validator


class IntegerInterval(BaseModel):
    """All integers n with lo <= n <= hi."""

    lo: int
    hi: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_order(self) -> "IntegerInterval":
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        return self

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def issubset(self, other: "IntegerInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def touches(self, other: "IntegerInterval") -> bool:
        """True when the union of the two is again an interval of integers."""
        return self.lo <= other.hi + 1 and other.lo <= self.hi + 1

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


class LabeledInterval(BaseModel):
    label: str
    interval: IntegerInterval


class ClaimCheck(BaseModel):
    name: str
    holds: bool
    detail: str = ""


class IntervalFamily(BaseModel):
    h: int = Field(ge=2)
    threshold: int
    intervals: list[LabeledInterval]
    merged: list[IntegerInterval]
    union: IntegerInterval
    checks: list[ClaimCheck] = []

    @property
    def all_hold(self) -> bool:
        return all(check.holds for check in self.checks)


class CollisionWitness(BaseModel):
    """Coefficients with x0*c + x1 + x2*(h+1) + x3*(h^2+h+1)
    == y1 + y2*(h+1) + y3*(h^2+h+1)."""

    h: int = Field(ge=1)
    c: int = Field(ge=1)
    x0: int = Field(ge=1)
    x1: int = Field(ge=0)
    x2: int = Field(ge=0)
    x3: int = Field(ge=0)
    y1: int = Field(ge=0)
    y2: int = Field(ge=0)
    y3: int = Field(ge=0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_equation(self) -> "CollisionWitness":
        h = self.h
        if self.x0 + self.x1 + self.x2 + self.x3 > h:
            raise ValueError("x0 + x1 + x2 + x3 exceeds h")
        if self.y1 + self.y2 + self.y3 > h:
            raise ValueError("y1 + y2 + y3 exceeds h")
        if self.x1 * self.y1 or self.x2 * self.y2 or self.x3 * self.y3:
            raise ValueError("x_i and y_i must not both be positive")
        if self.lhs != self.rhs:
            raise ValueError(f"sides differ: {self.lhs} != {self.rhs}")
        return self

    @property
    def lhs(self) -> int:
        h = self.h
        return self.x0 * self.c + self.x1 + self.x2 * (h + 1) + self.x3 * (h * h + h + 1)

    @property
    def rhs(self) -> int:
        h = self.h
        return self.y1 + self.y2 * (h + 1) + self.y3 * (h * h + h + 1)

    @property
    def x(self) -> tuple[int, int, int, int]:
        return (self.x0, self.x1, self.x2, self.x3)

    @property
    def y(self) -> tuple[int, int, int]:
        return (self.y1, self.y2, self.y3)

    def describe(self) -> str:
        x = " ".join(f"x{i}={v}" for i, v in enumerate(self.x))
        y = " ".join(f"y{i}={v}" for i, v in enumerate(self.y, start=1))
        return f"c={self.c} {x} {y} sum={self.lhs}"

