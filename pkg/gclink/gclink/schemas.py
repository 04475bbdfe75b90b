#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Validation models for JSON link documents """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
from typing import Annotated, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from gclink.constants import SCHEMA

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
Vector4 = Annotated[List[float], Field(min_length=4, max_length=4)]


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------
class ComponentModel(BaseModel):
    model_config = ConfigDict(extra='ignore')

    basis: Annotated[List[Vector4], Field(min_length=2, max_length=2)]


class LinkDocument(BaseModel):
    """{"schema": "gclink/1", "components": [{"basis": [[4 floats], [4 floats]]}, ...]}"""

    model_config = ConfigDict(extra='ignore', populate_by_name=True)

    schema_: Optional[str] = Field(default=None, alias='schema')
    components: List[ComponentModel]

    @field_validator('schema_')
    @classmethod
    def known_schema(cls, value):
        if value is not None and value != SCHEMA:
            raise ValueError(f'Unsupported schema: {value}')
        return value
