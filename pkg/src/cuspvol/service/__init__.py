"""HTTP face of the toolkit: pydantic schemas and the FastAPI app."""

from cuspvol.service.app import app, create_app

__all__ = ["app", "create_app"]
