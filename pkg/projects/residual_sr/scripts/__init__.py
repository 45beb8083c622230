"""Residual symbolic regression helper scripts."""
