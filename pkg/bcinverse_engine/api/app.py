# bcinverse_engine/api/app.py
"""
HTTP surface over the same commands the CLI runs.

Engine work is CPU bound and synchronous, so the routes are plain ``def``
handlers and FastAPI runs them in its threadpool.
"""
import logging
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from fastapi import APIRouter, FastAPI, Request, status
from fastapi.responses import JSONResponse

from bcinverse_engine.api.schemas import ComputeRequest, CrossCheckRequest, EnumerateRequest, VerifyRequest
from bcinverse_engine.config.settings import Settings, get_settings
from bcinverse_engine.errors import AlgebraError
from bcinverse_engine.services import execute

logger = logging.getLogger(__name__)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def build_router(settings: Settings) -> APIRouter:
    router = APIRouter()

    @router.get("/health", tags=["Root"])
    def health() -> Dict[str, Any]:
        return {
            "status": "healthy",
            "service": settings.project_name,
            "version": settings.version,
            "timestamp": _now(),
        }

    @router.post("/compute", tags=["Engine"])
    def compute(body: ComputeRequest) -> Dict[str, Any]:
        return execute(body.to_command(), settings).payload

    @router.post("/verify", tags=["Verifier"])
    def verify(body: VerifyRequest) -> List[Dict[str, Any]]:
        return execute(body.to_command(), settings).payload

    @router.post("/enumerate", tags=["Rings"])
    def enumerate_ring(body: EnumerateRequest) -> Dict[str, Any]:
        return execute(body.to_command(), settings).payload

    @router.post("/crosscheck", tags=["Verifier"])
    def crosscheck(body: CrossCheckRequest) -> Dict[str, Any]:
        return execute(body.to_command(), settings).payload

    return router


def create_app(settings: Optional[Settings] = None) -> FastAPI:
    """Application factory"""
    settings = settings or get_settings()
    app = FastAPI(
        title=settings.project_name,
        version=settings.version,
        description="Exact (b,c)-inverses, their existence criteria and theorem verification over rings",
        docs_url=None if settings.is_production else "/docs",
        redoc_url=None if settings.is_production else "/redoc",
    )

    @app.exception_handler(AlgebraError)
    async def algebra_exception_handler(request: Request, exc: AlgebraError):
        logger.warning(f"{exc.code} at {request.url.path}: {exc.message}")
        return JSONResponse(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            content={**exc.to_dict(), "timestamp": _now(), "path": str(request.url.path)},
        )

    @app.exception_handler(Exception)
    async def general_exception_handler(request: Request, exc: Exception):
        logger.error(f"Unhandled exception at {request.url.path}: {exc}", exc_info=True)
        return JSONResponse(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            content={"error": "Internal server error", "timestamp": _now(), "path": str(request.url.path)},
        )

    app.include_router(build_router(settings))
    return app
