# Main FastAPI application entry point
from fastapi import FastAPI

from app.core.logging_config import configure_logging
from app.routers import graph, solve, tools

configure_logging()

app = FastAPI(
    title="Drone Delivery Packing API",
    description="Approximation, exact and verification tooling for drone delivery packing",
    version="1.0.0",
)

app.include_router(solve.router)
app.include_router(graph.router)
app.include_router(tools.router)


@app.get("/")
def root():
    """Health check endpoint"""
    return {
        "message": "Drone Delivery Packing API",
        "status": "running",
        "endpoints": {
            "solve": "/solve?algorithm=greedy|coloring|exact (POST)",
            "graph": "/graph (POST)",
            "tools": "/verify, /export-lp, /reduce-bp, /bench (POST)",
        },
    }
