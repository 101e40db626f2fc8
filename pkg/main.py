"""
bcinverse-engine HTTP service.
Root-level entry point: builds the FastAPI app and serves it with uvicorn.
"""
import uvicorn

from bcinverse_engine.api.app import create_app
from bcinverse_engine.config import get_settings, setup_logging

settings = get_settings()
setup_logging(settings.log_level)

app = create_app(settings)

# ====== MAIN ENTRY POINT ======
if __name__ == "__main__":
    uvicorn.run(
        "main:app",
        host=settings.host,
        port=settings.port,
        log_level=settings.log_level.lower(),
        reload=not settings.is_production,
        access_log=True,
    )
