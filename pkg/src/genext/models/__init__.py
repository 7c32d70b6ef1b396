"""Pydantic models for configuration and results."""
