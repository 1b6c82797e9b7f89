# core/hecke_core/main.py
import logging
import time
from datetime import datetime

import sympy
import uvicorn
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from core.hecke_core.errors import HeckeError
from core.hecke_core.laurent.rings import RingKind
from infrastructure.config.engine_config import (
    API_HOST, API_PORT, CORS_ORIGINS, DEFAULT_JOBS, DEFAULT_UNIVERSAL_CARTAN, LOCALIZATION_SEED,
    TABLEAU_CACHE_SIZE, configure_logging,
)

from core.hecke_core.coxeter.router import router as coxeter_router
from core.hecke_core.parabolic.router import router as parabolic_router
from core.hecke_core.realisation.router import router as realisation_router
from core.hecke_core.lightleaves.router import router as lightleaves_router
from core.hecke_core.gram.router import router as gram_router
from core.hecke_core.hecke.router import router as hecke_router
from core.hecke_core.bgg.router import router as bgg_router

configure_logging()
logger = logging.getLogger("hecke_core")

ENGINE_VERSION = "1.0.0"

# URL segment -> (router, docs tag)
MODULES = {
    "coxeter": (coxeter_router, "Coxeter"),
    "parabolic": (parabolic_router, "Parabolic"),
    "realisation": (realisation_router, "Realisation"),
    "lightleaves": (lightleaves_router, "Light leaves"),
    "gram": (gram_router, "Gram"),
    "hecke": (hecke_router, "Hecke"),
    "bgg": (bgg_router, "BGG"),
}

app = FastAPI(
    title="Anti-spherical Hecke Category API",
    description="Exact computations in anti-spherical Hecke categories: quotients, light leaves, Gram forms, KL matrices and BGG complexes",
    version=ENGINE_VERSION,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def engine_settings() -> dict:
    """Environment-driven defaults every request starts from"""
    return {
        "coefficient_rings": [kind.value for kind in RingKind],
        "default_universal_cartan": DEFAULT_UNIVERSAL_CARTAN,
        "localization_seed": LOCALIZATION_SEED,
        "tableau_cache_size": TABLEAU_CACHE_SIZE,
        "default_jobs": DEFAULT_JOBS,
    }


@app.middleware("http")
async def time_and_log(request: Request, call_next):
    """Log each computation with its wall time, also returned as X-Process-Time"""
    start_time = time.perf_counter()
    response = await call_next(request)
    elapsed = time.perf_counter() - start_time
    response.headers["X-Process-Time"] = f"{elapsed:.6f}"
    logger.info(f"{request.method} {request.url.path} -> {response.status_code} in {elapsed:.4f}s")
    return response


for module, (module_router, tag) in MODULES.items():
    app.include_router(module_router, prefix=f"/api/v1/{module}", tags=[tag])


@app.get("/")
async def root():
    """Engine modules and where their endpoints live"""
    return {
        "name": "Anti-spherical Hecke Category API",
        "documentation": "/docs",
        "version": ENGINE_VERSION,
        "modules": {module: f"/api/v1/{module}" for module in MODULES},
    }


@app.get("/health")
async def health_check():
    return {
        "status": "healthy",
        "service": "hecke-core-api",
        "version": ENGINE_VERSION,
        "sympy": sympy.__version__,
        "settings": engine_settings(),
        "timestamp": datetime.utcnow().isoformat(),
    }


@app.exception_handler(HeckeError)
async def hecke_error_handler(request: Request, exc: HeckeError):
    """Domain errors that escape a router keep their kind"""
    logger.warning(f"{request.url.path}: {exc.kind}: {exc}")
    return JSONResponse(status_code=422, content={"detail": exc.to_dict()})


@app.exception_handler(Exception)
async def generic_exception_handler(request: Request, exc: Exception):
    logger.error(f"Unhandled exception: {str(exc)}", exc_info=True)
    return JSONResponse(
        status_code=500,
        content={"detail": {"kind": "internal_error", "message": "An unexpected error occurred"}},
    )


@app.on_event("startup")
async def startup_event():
    logger.info(f"Starting Hecke Core API {ENGINE_VERSION} with {engine_settings()}")


@app.on_event("shutdown")
async def shutdown_event():
    logger.info("Shutting down Hecke Core API")


if __name__ == "__main__":
    uvicorn.run("core.hecke_core.main:app", host=API_HOST, port=API_PORT, reload=True)
