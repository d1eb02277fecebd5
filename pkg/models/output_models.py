#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Pydantic model for command output documents
"""

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

OutputFormat = Literal["pretty", "json-records", "tsv", "dot"]


class OutputDocument(BaseModel):
    """Payload of one command, rendered by lib.output_format"""
    model_config = ConfigDict(frozen=True)

    command: str = Field(..., description="Command name")
    format: OutputFormat = Field("pretty", description="Requested rendering")
    records: List[Dict[str, Any]] = Field(default_factory=list, description="Operation-specific records")
    columns: Optional[Tuple[str, ...]] = Field(None, description="Column order for tables")
    dot: Optional[str] = Field(None, description="Graphviz text (web only)")


__all__ = [
    'OutputFormat',
    'OutputDocument',
]
