"""FastAPI application over the command layer."""
