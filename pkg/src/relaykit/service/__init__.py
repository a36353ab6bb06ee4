"""Service layer: FastAPI app, request/response schemas, and the operation core."""

from . import ops, schemas
from .app import app

__all__ = ["app", "ops", "schemas"]
