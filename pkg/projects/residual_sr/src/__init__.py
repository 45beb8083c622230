"""Package root for the residual SR search engine.

Having this file ensures predictable imports when running:
    python -m projects.residual_sr.src.apps.cli run --config <path>
from the repository root.
"""
