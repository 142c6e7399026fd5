from pathlib import Path
from typing import List

from pydantic import BaseModel, Field

from config.constants import (
    SUITE_DIHEDRAL_ORDERS,
    SUITE_PRODUCT_INSTANCES,
    SUITE_SYMMETRIC_DEGREES,
    SUITE_TARGETS,
)


class ProductInstance(BaseModel):
    """A group spec checked against its own list of targets"""
    group: str
    targets: List[str]


class SuiteConfig(BaseModel):
    """Instance grid of the verification suite"""
    symmetric_degrees: List[int] = Field(default_factory=lambda: list(SUITE_SYMMETRIC_DEGREES))
    dihedral_orders: List[int] = Field(default_factory=lambda: list(SUITE_DIHEDRAL_ORDERS))
    targets: List[str] = Field(default_factory=lambda: list(SUITE_TARGETS))
    extra_instances: List[ProductInstance] = Field(
        default_factory=lambda: [ProductInstance(group=g, targets=list(t)) for g, t in SUITE_PRODUCT_INSTANCES]
    )
    dichotomy: bool = Field(default=True, description="Run the dihedral dichotomy over dihedral_orders")

    @classmethod
    def from_file(cls, path: str) -> "SuiteConfig":
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))

    @classmethod
    def empty(cls) -> "SuiteConfig":
        return cls(symmetric_degrees=[], dihedral_orders=[], targets=[], extra_instances=[])
